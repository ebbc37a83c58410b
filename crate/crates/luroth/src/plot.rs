//! Implicit-curve rendering: a sign-grid marching-squares contour of the real locus
//! in an affine chart, emitted as a self-contained SVG. The plot layer works in
//! floating point — it is presentation only; every mathematical claim in the rest of
//! the crate stays exact.

use crate::ring::field::Rat;
use crate::ring::ternary::{plain_exponents, TernaryForm};
use num_traits::ToPrimitive;

/// Rectangular view in chart coordinates.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Default for Window {
    fn default() -> Self {
        Window { xmin: -3.0, xmax: 3.0, ymin: -3.0, ymax: 3.0 }
    }
}

impl Window {
    pub fn parse(spec: &str) -> Result<Window, String> {
        let parts: Vec<&str> = spec.split(',').collect();
        if parts.len() != 4 {
            return Err(format!("expected xmin,xmax,ymin,ymax, found `{spec}`"));
        }
        let vals: Result<Vec<f64>, _> = parts.iter().map(|p| p.trim().parse::<f64>()).collect();
        let v = vals.map_err(|e| format!("bad window component in `{spec}`: {e}"))?;
        if !(v[0] < v[1]) || !(v[2] < v[3]) {
            return Err(format!("window `{spec}` must have xmin < xmax and ymin < ymax"));
        }
        Ok(Window { xmin: v[0], xmax: v[1], ymin: v[2], ymax: v[3] })
    }
}

/// One drawable layer: line segments in chart coordinates plus a stroke style.
pub struct Layer {
    pub label: String,
    pub stroke: String,
    pub stroke_width: f64,
    pub dash: Option<String>,
    pub segments: Vec<[f64; 4]>,
}

/// A homogeneous form turned into a chart evaluator: the chart variable is set
/// to 1 and the remaining two coordinates run over the window.
pub fn chart_evaluator(f: &TernaryForm<Rat>, chart: usize) -> impl Fn(f64, f64) -> f64 {
    assert!(chart < 3);
    let terms: Vec<(f64, u16, u16, u16)> = f
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(idx, c)| {
            let (i, j, k) = plain_exponents(f.degree, idx);
            let num = c.numer().to_f64().unwrap_or(f64::MAX);
            let den = c.denom().to_f64().unwrap_or(f64::MAX);
            (num / den, i, j, k)
        })
        .collect();
    move |u: f64, v: f64| {
        let p = match chart {
            0 => [1.0, u, v],
            1 => [u, 1.0, v],
            _ => [u, v, 1.0],
        };
        terms
            .iter()
            .map(|&(c, i, j, k)| {
                c * p[0].powi(i as i32) * p[1].powi(j as i32) * p[2].powi(k as i32)
            })
            .sum()
    }
}

/// Marching squares on an n×n sign grid: piecewise-linear segments approximating
/// the zero set of `f` inside the window.
pub fn implicit_segments(
    f: impl Fn(f64, f64) -> f64,
    window: &Window,
    n: usize,
) -> Vec<[f64; 4]> {
    assert!(n >= 2);
    let dx = (window.xmax - window.xmin) / n as f64;
    let dy = (window.ymax - window.ymin) / n as f64;
    let mut values = vec![0.0f64; (n + 1) * (n + 1)];
    for iy in 0..=n {
        for ix in 0..=n {
            let x = window.xmin + ix as f64 * dx;
            let y = window.ymin + iy as f64 * dy;
            let v = f(x, y);
            // Exact zeros join the positive side so each cell edge has a well-defined
            // sign change.
            values[iy * (n + 1) + ix] = if v == 0.0 { f64::MIN_POSITIVE } else { v };
        }
    }
    let at = |ix: usize, iy: usize| values[iy * (n + 1) + ix];
    // Linear interpolation of the zero crossing on one cell edge.
    let cross = |x0: f64, y0: f64, v0: f64, x1: f64, y1: f64, v1: f64| -> (f64, f64) {
        let t = v0 / (v0 - v1);
        (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
    };
    let mut segments = Vec::new();
    for iy in 0..n {
        for ix in 0..n {
            let x0 = window.xmin + ix as f64 * dx;
            let y0 = window.ymin + iy as f64 * dy;
            let x1 = x0 + dx;
            let y1 = y0 + dy;
            // Corners: a = (x0,y0), b = (x1,y0), c = (x1,y1), d = (x0,y1).
            let (va, vb, vc, vd) = (at(ix, iy), at(ix + 1, iy), at(ix + 1, iy + 1), at(ix, iy + 1));
            let code = ((va > 0.0) as u8)
                | (((vb > 0.0) as u8) << 1)
                | (((vc > 0.0) as u8) << 2)
                | (((vd > 0.0) as u8) << 3);
            if code == 0 || code == 15 {
                continue;
            }
            let bottom = || cross(x0, y0, va, x1, y0, vb);
            let right = || cross(x1, y0, vb, x1, y1, vc);
            let top = || cross(x0, y1, vd, x1, y1, vc);
            let left = || cross(x0, y0, va, x0, y1, vd);
            let mut push = |p: (f64, f64), q: (f64, f64)| {
                segments.push([p.0, p.1, q.0, q.1]);
            };
            match code {
                1 | 14 => push(left(), bottom()),
                2 | 13 => push(bottom(), right()),
                3 | 12 => push(left(), right()),
                4 | 11 => push(right(), top()),
                6 | 9 => push(bottom(), top()),
                7 | 8 => push(left(), top()),
                5 | 10 => {
                    // Saddle: disambiguate with the cell-center sign.
                    let center = f(0.5 * (x0 + x1), 0.5 * (y0 + y1));
                    let center_pos = center > 0.0;
                    let a_pos = va > 0.0;
                    if center_pos == a_pos {
                        push(left(), top());
                        push(bottom(), right());
                    } else {
                        push(left(), bottom());
                        push(right(), top());
                    }
                }
                _ => unreachable!("codes 0 and 15 are filtered"),
            }
        }
    }
    segments
}

/// Clip the affine line a·u + b·v + c = 0 to the window; None when it misses.
pub fn clip_line(a: f64, b: f64, c: f64, window: &Window) -> Option<[f64; 4]> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let mut add = |u: f64, v: f64| {
        let eps = 1e-9 * (1.0 + u.abs() + v.abs());
        if u >= window.xmin - eps
            && u <= window.xmax + eps
            && v >= window.ymin - eps
            && v <= window.ymax + eps
            && !pts.iter().any(|(pu, pv)| (pu - u).abs() < 1e-9 && (pv - v).abs() < 1e-9)
        {
            pts.push((u, v));
        }
    };
    if b.abs() > 1e-12 {
        for u in [window.xmin, window.xmax] {
            add(u, -(a * u + c) / b);
        }
    }
    if a.abs() > 1e-12 {
        for v in [window.ymin, window.ymax] {
            add(-(b * v + c) / a, v);
        }
    }
    if pts.len() < 2 {
        return None;
    }
    // Farthest pair among the (at most four) boundary hits.
    let mut best = (0usize, 1usize, -1.0f64);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = (pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    if best.2 <= 1e-18 {
        return None;
    }
    let (p, q) = (pts[best.0], pts[best.1]);
    Some([p.0, p.1, q.0, q.1])
}

fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.3}");
    // Avoid the negative-zero artifact so output is byte-stable.
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Assemble layers into a standalone SVG document. Pure formatting — the output is
/// byte-deterministic for fixed inputs.
pub fn svg_document(window: &Window, layers: &[Layer], title: &str) -> String {
    let size = 640.0;
    let margin = 20.0;
    let span_x = window.xmax - window.xmin;
    let span_y = window.ymax - window.ymin;
    let scale = (size - 2.0 * margin) / span_x.max(span_y);
    let px = |u: f64| margin + (u - window.xmin) * scale;
    let py = |v: f64| size - margin - (v - window.ymin) * scale;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!("  <title>{title}</title>\n"));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    ));
    // Axes when they cross the window.
    let mut axes = Vec::new();
    if window.xmin < 0.0 && window.xmax > 0.0 {
        axes.push([0.0, window.ymin, 0.0, window.ymax]);
    }
    if window.ymin < 0.0 && window.ymax > 0.0 {
        axes.push([window.xmin, 0.0, window.xmax, 0.0]);
    }
    for [a, b, c, d] in axes {
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cccccc\" \
             stroke-width=\"1\"/>\n",
            fmt_coord(px(a)),
            fmt_coord(py(b)),
            fmt_coord(px(c)),
            fmt_coord(py(d))
        ));
    }
    for layer in layers {
        let dash = layer
            .dash
            .as_ref()
            .map(|d| format!(" stroke-dasharray=\"{d}\""))
            .unwrap_or_default();
        out.push_str(&format!(
            "  <g fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{} data-label=\"{}\">\n",
            layer.stroke, layer.stroke_width, dash, layer.label
        ));
        for [ux, uy, vx, vy] in &layer.segments {
            out.push_str(&format!(
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                fmt_coord(px(*ux)),
                fmt_coord(py(*uy)),
                fmt_coord(px(*vx)),
                fmt_coord(py(*vy))
            ));
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_quartic;

    #[test]
    fn the_unit_circle_squared_contour_stays_near_radius_one() {
        // (x² + y² − z²)² is a quartic whose real chart-z locus is the unit circle.
        let f = parse_quartic("(x^2 + y^2 - z^2)^2").unwrap();
        // The square never changes sign, so march its "signed" companion instead:
        // evaluate x² + y² − 1 directly to exercise the contour machinery.
        let circle = |u: f64, v: f64| u * u + v * v - 1.0;
        let w = Window::default();
        let segs = implicit_segments(circle, &w, 128);
        assert!(!segs.is_empty());
        for [a, b, c, d] in &segs {
            for (u, v) in [(a, b), (c, d)] {
                let r = (u * u + v * v).sqrt();
                assert!((r - 1.0).abs() < 0.05, "segment endpoint far from the circle: {r}");
            }
        }
        // And the quartic evaluator agrees with the squared circle.
        let eval = chart_evaluator(&f, 2);
        assert!((eval(0.3, 0.4) - (0.3f64 * 0.3 + 0.4 * 0.4 - 1.0).powi(2)).abs() < 1e-12);
    }

    #[test]
    fn line_clipping_finds_the_diagonal() {
        let w = Window { xmin: -1.0, xmax: 1.0, ymin: -1.0, ymax: 1.0 };
        // u − v = 0.
        let seg = clip_line(1.0, -1.0, 0.0, &w).unwrap();
        let len = ((seg[0] - seg[2]).powi(2) + (seg[1] - seg[3]).powi(2)).sqrt();
        assert!((len - 2.0 * 2.0f64.sqrt()).abs() < 1e-6);
        // A line far outside misses.
        assert!(clip_line(1.0, 0.0, 10.0, &w).is_none());
    }

    #[test]
    fn svg_output_is_deterministic_and_well_formed() {
        let w = Window::default();
        let circle = |u: f64, v: f64| u * u + v * v - 1.0;
        let segs = implicit_segments(circle, &w, 64);
        let layer = Layer {
            label: "curve".into(),
            stroke: "#1a1a1a".into(),
            stroke_width: 1.6,
            dash: None,
            segments: segs,
        };
        let a = svg_document(&w, &[layer], "test");
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert!(a.contains("data-label=\"curve\""));
        assert!(!a.contains("-0.000"));
        let circle2 = |u: f64, v: f64| u * u + v * v - 1.0;
        let segs2 = implicit_segments(circle2, &w, 64);
        let layer2 = Layer {
            label: "curve".into(),
            stroke: "#1a1a1a".into(),
            stroke_width: 1.6,
            dash: None,
            segments: segs2,
        };
        let b = svg_document(&w, &[layer2], "test");
        assert_eq!(a, b);
    }

    #[test]
    fn window_parsing_validates_shape() {
        let w = Window::parse("-2, 2, -1, 1").unwrap();
        assert_eq!(w.xmin, -2.0);
        assert_eq!(w.ymax, 1.0);
        assert!(Window::parse("1,2,3").is_err());
        assert!(Window::parse("2,1,0,1").is_err());
        assert!(Window::parse("a,b,c,d").is_err());
    }
}
