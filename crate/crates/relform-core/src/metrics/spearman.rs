use alloc::vec::Vec;

use crate::{Error, Result};

/// Spearman rank correlation with a two-sided p-value from the Student-t
/// approximation.
#[derive(Debug, Clone, PartialEq)]
pub struct SpearmanResult {
    pub rho: f64,
    pub p_value: f64,
    pub n: usize,
}

/// Spearman rank correlation of two equally long sequences (n >= 3).
/// Ties receive their mean rank; rho is the Pearson correlation of the
/// ranks. The p-value uses t = rho*sqrt((n-2)/(1-rho^2)) against a
/// Student-t law with n-2 degrees of freedom; rho = +-1 gives p = 0.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<SpearmanResult> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch { left: xs.len(), right: ys.len() });
    }
    let n = xs.len();
    if n < 3 {
        return Err(Error::TooFewSamples { n });
    }
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);

    let mean = (n + 1) as f64 / 2.0;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in rx.iter().zip(ry.iter()) {
        let dx = x - mean;
        let dy = y - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ZeroVariance);
    }
    let rho = (sxy / libm::sqrt(sxx * syy)).clamp(-1.0, 1.0);

    let df = (n - 2) as f64;
    let p_value = if 1.0 - rho * rho < 1e-14 {
        0.0
    } else {
        let t = rho * libm::sqrt(df / (1.0 - rho * rho));
        // two-sided tail: P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
        reg_inc_beta(df / 2.0, 0.5, df / (df + t * t)).clamp(0.0, 1.0)
    };
    Ok(SpearmanResult { rho, p_value, n })
}

/// Ranks 1..n with ties assigned their mean rank.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = alloc::vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let mean_rank = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = mean_rank;
        }
        i = j + 1;
    }
    ranks
}

/// Regularized incomplete beta function I_x(a, b) via the standard
/// continued-fraction expansion.
fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b)
        + a * libm::log(x)
        + b * libm::log(1.0 - x);
    let front = libm::exp(ln_front);
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - front * beta_cf(b, a, 1.0 - x) / b
    }
}

/// Continued fraction for the incomplete beta (modified Lentz).
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const EPS: f64 = 1e-15;
    const TINY: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if libm::fabs(d) < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=200 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if libm::fabs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if libm::fabs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if libm::fabs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if libm::fabs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if libm::fabs(del - 1.0) < EPS {
            break;
        }
    }
    h
}

/// Lanczos approximation of ln(Gamma(x)) for x > 0.
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let mut ser = 1.000000000190015;
    let mut denom = x;
    for c in COEFFS {
        denom += 1.0;
        ser += c / denom;
    }
    let tmp = x + 5.5;
    let tmp = tmp - (x + 0.5) * libm::log(tmp);
    -tmp + libm::log(2.5066282746310005 * ser / x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn monotone_and_reversed_endpoints() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let up = spearman(&xs, &[10.0, 20.0, 30.0, 40.0]).unwrap();
        assert!((up.rho - 1.0).abs() < 1e-12);
        assert_eq!(up.p_value, 0.0);

        let down = spearman(&xs, &[4.0, 3.0, 2.0, 1.0]).unwrap();
        assert!((down.rho + 1.0).abs() < 1e-12);
        assert_eq!(down.p_value, 0.0);
    }

    #[test]
    fn degenerate_inputs_error() {
        assert_eq!(
            spearman(&[1.0, 2.0, 3.0], &[2.0, 2.0, 2.0]).unwrap_err(),
            Error::ZeroVariance
        );
        assert_eq!(
            spearman(&[1.0, 2.0], &[1.0, 2.0]).unwrap_err(),
            Error::TooFewSamples { n: 2 }
        );
        assert_eq!(
            spearman(&[1.0, 2.0, 3.0], &[1.0, 2.0]).unwrap_err(),
            Error::LengthMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn ties_get_mean_rank() {
        let ranks = average_ranks(&[3.0, 1.0, 3.0, 2.0]);
        assert_eq!(ranks, vec![3.5, 1.0, 3.5, 2.0]);
    }

    #[test]
    fn matches_reference_values() {
        // cross-checked against scipy.stats.spearmanr
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        let ys = [2.0, 1.0, 4.0, 3.0, 6.0, 5.0, 8.0, 7.0];
        let r = spearman(&xs, &ys).unwrap();
        assert!((r.rho - 0.9047619047619048).abs() < 1e-12);
        assert!((r.p_value - 0.0020082755054294677).abs() < 1e-9);
    }

    #[test]
    fn invariant_under_monotone_transform() {
        let xs = [0.3, 1.7, 0.9, 2.4, 1.1, 0.2];
        let ys = [5.0, 2.0, 9.0, 1.0, 7.0, 3.0];
        let base = spearman(&xs, &ys).unwrap();
        let transformed: Vec<f64> = xs.iter().map(|&x| libm::exp(3.0 * x) + 1.0).collect();
        let t = spearman(&transformed, &ys).unwrap();
        assert!((base.rho - t.rho).abs() < 1e-12);
        assert!((base.p_value - t.p_value).abs() < 1e-12);
    }
}
