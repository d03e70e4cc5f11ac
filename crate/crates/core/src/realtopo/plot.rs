//! Polyline approximations of an affine curve for pictures.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::cad::{cad_plane, to_bipoly};
use super::upoly::{isolate_roots, UPoly};
use crate::error::Result;
use crate::polyarith::{ratio, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Window {
    pub x: (Rational, Rational),
    pub y: (Rational, Rational),
}

impl Window {
    pub fn square(r: i64) -> Self {
        let a = Rational::from_integer(r.into());
        Window {
            x: (-a.clone(), a.clone()),
            y: (-a.clone(), a),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CurvePicture {
    pub arcs: Vec<Vec<(f64, f64)>>,
    pub points: Vec<(f64, f64)>,
    /// Vertical lines `x = c`.
    pub verticals: Vec<f64>,
}

fn to_f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Samples every section over each open column at `steps` rational
/// abscissae; isolated curve points come from the critical columns.
pub fn curve_picture(f: &Polynomial, window: &Window, steps: usize) -> Result<CurvePicture> {
    let cad = cad_plane(f)?;
    let bf = to_bipoly(f)?;
    let (x0, x1) = window.x.clone();
    let eps = Rational::new(1.into(), 10_000.into());
    let mut pic = CurvePicture::default();

    let mut cuts: Vec<Rational> = vec![x0.clone()];
    for r in &cad.critical {
        let mut r = r.clone();
        r.refine_to(&eps);
        if r.lo > x0 && r.hi < x1 {
            cuts.push(r.midpoint());
        }
    }
    cuts.push(x1.clone());
    cuts.dedup();

    let steps = steps.max(2);
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mut tracks: Vec<Vec<(f64, f64)>> = Vec::new();
        for i in 0..=steps {
            // Stay strictly inside the column.
            let s = ratio((2 * i + 1) as i64, (2 * steps + 2) as i64);
            let x = a + &(b - a) * s;
            let g = UPoly::from_coeffs(bf.iter().map(|c| c.eval(&x)).collect());
            let roots = isolate_roots(&g);
            if tracks.len() < roots.len() {
                tracks.resize(roots.len(), Vec::new());
            }
            for (k, mut r) in roots.into_iter().enumerate() {
                r.refine_to(&eps);
                tracks[k].push((to_f(&x), r.to_f64()));
            }
        }
        pic.arcs.extend(tracks.into_iter().filter(|t| t.len() > 1));
    }
    for c in &cad.cells {
        if c.column % 2 == 1 && c.sign == 0 {
            if c.dim == 0 {
                pic.points.push((c.x.approx(), c.y.approx()));
            } else {
                pic.verticals.push(c.x.approx());
            }
        }
    }
    Ok(pic)
}

impl CurvePicture {
    /// A fixed-precision SVG; `y` points up.
    pub fn to_svg(&self, window: &Window, size: u32) -> String {
        let (x0, x1) = (to_f(&window.x.0), to_f(&window.x.1));
        let (y0, y1) = (to_f(&window.y.0), to_f(&window.y.1));
        let sx = size as f64 / (x1 - x0);
        let sy = size as f64 / (y1 - y0);
        let px = |x: f64| (x - x0) * sx;
        let py = |y: f64| (y1 - y) * sy;
        let inside = |&(x, y): &(f64, f64)| x >= x0 && x <= x1 && y >= y0 && y <= y1;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        );
        let _ = writeln!(
            s,
            "<rect width=\"{size}\" height=\"{size}\" fill=\"white\" stroke=\"black\"/>"
        );
        for arc in &self.arcs {
            // Split where the arc leaves the window.
            for run in arc.split(|p| !inside(p)).filter(|r| r.len() > 1) {
                let pts: Vec<String> = run
                    .iter()
                    .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                    .collect();
                let _ = writeln!(
                    s,
                    "<polyline fill=\"none\" stroke=\"black\" points=\"{}\"/>",
                    pts.join(" ")
                );
            }
        }
        for &x in &self.verticals {
            if x >= x0 && x <= x1 {
                let _ = writeln!(
                    s,
                    "<line x1=\"{0:.2}\" y1=\"0\" x2=\"{0:.2}\" y2=\"{size}\" stroke=\"black\"/>",
                    px(x)
                );
            }
        }
        for p in self.points.iter().filter(|p| inside(p)) {
            let _ = writeln!(
                s,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2\"/>",
                px(p.0),
                py(p.1)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}
