//! Minimal self-contained SVG scatter plots. CSV is the authoritative
//! output; these charts exist for quick visual inspection only.

/// How a point is colored: by a numeric value mapped onto a blue-to-red
/// ramp, or by the reserved sentinel color (used for values with no
/// meaningful numeric transform, e.g. log10 of zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointColor {
    Value(f64),
    Sentinel,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub color: PointColor,
}

#[derive(Debug, Clone)]
pub struct Scatter {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub width: u32,
    pub height: u32,
    pub log_x: bool,
    pub log_y: bool,
    pub points: Vec<Point>,
}

pub const SENTINEL_COLOR: &str = "#9e9e9e";
const MARGIN: f64 = 70.0;

impl Scatter {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        Scatter {
            title: title.to_string(),
            x_label: x_label.to_string(),
            y_label: y_label.to_string(),
            width: 800,
            height: 600,
            log_x: false,
            log_y: false,
            points: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let w = self.width as f64;
        let h = self.height as f64;
        let tx = |v: f64| if self.log_x { v.log10() } else { v };
        let ty = |v: f64| if self.log_y { v.log10() } else { v };

        let usable: Vec<&Point> = self
            .points
            .iter()
            .filter(|p| {
                tx(p.x).is_finite() && ty(p.y).is_finite()
            })
            .collect();
        let (x_min, x_max) = padded_range(usable.iter().map(|p| tx(p.x)));
        let (y_min, y_max) = padded_range(usable.iter().map(|p| ty(p.y)));
        let (c_min, c_max) = padded_range(self.points.iter().filter_map(|p| match p.color {
            PointColor::Value(v) if v.is_finite() => Some(v),
            _ => None,
        }));

        let sx = |v: f64| MARGIN + (v - x_min) / (x_max - x_min) * (w - 2.0 * MARGIN);
        let sy = |v: f64| h - MARGIN - (v - y_min) / (y_max - y_min) * (h - 2.0 * MARGIN);

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
             viewBox=\"0 0 {} {}\">\n",
            self.width, self.height, self.width, self.height
        ));
        out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
            w / 2.0,
            escape(&self.title)
        ));
        // axes
        out.push_str(&format!(
            "<line x1=\"{m:.1}\" y1=\"{b:.1}\" x2=\"{r:.1}\" y2=\"{b:.1}\" stroke=\"black\"/>\n\
             <line x1=\"{m:.1}\" y1=\"{t:.1}\" x2=\"{m:.1}\" y2=\"{b:.1}\" stroke=\"black\"/>\n",
            m = MARGIN,
            b = h - MARGIN,
            r = w - MARGIN,
            t = MARGIN,
        ));
        let axis_name = |label: &str, log: bool| {
            if log {
                format!("log10({label})")
            } else {
                label.to_string()
            }
        };
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"13\">{}</text>\n",
            w / 2.0,
            h - 20.0,
            escape(&axis_name(&self.x_label, self.log_x))
        ));
        out.push_str(&format!(
            "<text x=\"20\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"13\" \
             transform=\"rotate(-90 20 {:.1})\">{}</text>\n",
            h / 2.0,
            h / 2.0,
            escape(&axis_name(&self.y_label, self.log_y))
        ));
        // min/max tick labels
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\">{:.3}</text>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\">{:.3}</text>\n",
            MARGIN,
            h - MARGIN + 18.0,
            x_min,
            w - MARGIN,
            h - MARGIN + 18.0,
            x_max,
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\">{:.3}</text>\n\
             <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\">{:.3}</text>\n",
            MARGIN - 6.0,
            h - MARGIN,
            y_min,
            MARGIN - 6.0,
            MARGIN + 4.0,
            y_max,
        ));
        // points
        for p in &usable {
            let fill = match p.color {
                PointColor::Sentinel => SENTINEL_COLOR.to_string(),
                PointColor::Value(v) if !v.is_finite() => SENTINEL_COLOR.to_string(),
                PointColor::Value(v) => ramp(((v - c_min) / (c_max - c_min)).clamp(0.0, 1.0)),
            };
            out.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{}\" fill-opacity=\"0.7\"/>\n",
                sx(tx(p.x)),
                sy(ty(p.y)),
                fill
            ));
        }
        // legend
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"50\" text-anchor=\"end\" font-size=\"11\">color: {} = {:.3}, {} = {:.3}, gray = undefined</text>\n",
            w - MARGIN,
            ramp(0.0),
            c_min,
            ramp(1.0),
            c_max,
        ));
        out.push_str("</svg>\n");
        out
    }
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if !min.is_finite() || !max.is_finite() {
        return (0.0, 1.0);
    }
    if min == max {
        return (min - 0.5, max + 0.5);
    }
    let pad = (max - min) * 0.05;
    (min - pad, max + pad)
}

/// Blue-to-red color ramp over [0, 1].
fn ramp(t: f64) -> String {
    let r = (40.0 + 200.0 * t).round() as u8;
    let b = (240.0 - 200.0 * t).round() as u8;
    format!("#{r:02x}50{b:02x}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_points_and_sentinel() {
        let mut chart = Scatter::new("demo", "x", "y");
        chart.points = vec![
            Point { x: 1.0, y: 2.0, color: PointColor::Value(0.5) },
            Point { x: 3.0, y: 4.0, color: PointColor::Sentinel },
        ];
        let svg = chart.render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(SENTINEL_COLOR));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.contains("width=\"800\" height=\"600\""));
    }

    #[test]
    fn log_scale_drops_nonpositive_points() {
        let mut chart = Scatter::new("demo", "x", "y");
        chart.log_x = true;
        chart.log_y = true;
        chart.points = vec![
            Point { x: 10.0, y: 100.0, color: PointColor::Value(0.0) },
            Point { x: 0.0, y: 1.0, color: PointColor::Value(1.0) },
        ];
        let svg = chart.render();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains("log10(x)"));
    }
}
