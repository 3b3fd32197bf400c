//! SVG rendering of horocycle configurations in the upper half plane.
//!
//! Drawing happens in mathematical coordinates inside a `scale(1 -1)` group,
//! so the hyperbolic "up" direction renders upward. Each spinor contributes a
//! circle tangent to the real axis at its centre (or a horizontal line for
//! centre infinity) plus an arrow for the decoration at the north pole.
//! Element order follows input order, so output is deterministic.

use horospinor::{decorated_horosphere_uhs, BoundaryPointUHS, DecoratedHorosphereUHS, Spinor};
use num_complex::Complex64;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self, CliError> {
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite()) {
            return Err(CliError::Parse("window coordinates must be finite".into()));
        }
        if !(x1 > x0 && y1 > y0) {
            return Err(CliError::Domain("EmptyWindow: window has no area".into()));
        }
        Ok(Self { x0, y0, x1, y1 })
    }

    /// Parses `RE0,IM0,RE1,IM1`: two corners of a rectangle in `C`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(CliError::Parse(format!(
                "--window expects four comma-separated numbers, got `{text}`"
            )));
        }
        let mut vals = [0.0; 4];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part
                .parse::<f64>()
                .map_err(|_| CliError::Parse(format!("invalid number `{part}` in --window")))?;
        }
        Window::new(vals[0], vals[1], vals[2], vals[3])
    }
}

/// Bounding box of all circles (and plane heights), padded by 10%.
fn default_window(hs: &[DecoratedHorosphereUHS]) -> Window {
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_max: f64 = 0.0;
    for h in hs {
        match h.centre {
            BoundaryPointUHS::Finite(z) => {
                x_min = x_min.min(z.re - 0.5 * h.size);
                x_max = x_max.max(z.re + 0.5 * h.size);
                y_max = y_max.max(h.size);
            }
            BoundaryPointUHS::Infinity => {
                y_max = y_max.max(h.size);
            }
        }
    }
    if !x_min.is_finite() || !x_max.is_finite() || x_max <= x_min {
        x_min = -1.0;
        x_max = 1.0;
    }
    if y_max <= 0.0 {
        y_max = 1.0;
    }
    let pad_x = 0.1 * (x_max - x_min);
    let pad_y = 0.1 * y_max;
    Window {
        x0: x_min - pad_x,
        y0: 0.0,
        x1: x_max + pad_x,
        y1: y_max + pad_y,
    }
}

struct Canvas {
    window: Window,
    stroke: f64,
    body: String,
}

impl Canvas {
    fn new(window: Window) -> Self {
        let stroke = 0.004 * (window.x1 - window.x0).max(window.y1 - window.y0);
        Canvas { window, stroke, body: String::new() }
    }

    fn real_axis(&mut self) {
        self.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"#555555\" stroke-width=\"{}\"/>\n",
            self.window.x0, self.window.x1, self.stroke
        ));
    }

    fn circle(&mut self, centre_x: f64, diameter: f64) {
        let r = 0.5 * diameter;
        self.body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"{}\"/>\n",
            centre_x, r, r, self.stroke
        ));
    }

    fn plane(&mut self, height: f64) {
        self.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#1f6feb\" stroke-width=\"{}\"/>\n",
            self.window.x0, height, self.window.x1, height, self.stroke
        ));
    }

    /// Arrow anchored at `(ax, ay)` pointing along the unit complex `dir`,
    /// drawn in the picture plane with Im upward.
    fn arrow(&mut self, ax: f64, ay: f64, dir: Complex64, length: f64) {
        let tip = Complex64::new(ax, ay) + dir * length;
        let head = 0.3 * length;
        let back1 = tip + dir * Complex64::from_polar(head, 5.0 * std::f64::consts::FRAC_PI_6);
        let back2 = tip + dir * Complex64::from_polar(head, -5.0 * std::f64::consts::FRAC_PI_6);
        self.body.push_str(&format!(
            "  <path d=\"M {} {} L {} {} M {} {} L {} {} L {} {}\" fill=\"none\" stroke=\"#d1242f\" stroke-width=\"{}\"/>\n",
            ax, ay, tip.re, tip.im, back1.re, back1.im, tip.re, tip.im, back2.re, back2.im, self.stroke
        ));
    }

    fn finish(self, width: u32, height: u32) -> String {
        let Window { x0, y0, x1, y1 } = self.window;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n<g transform=\"scale(1 -1)\">\n{}</g>\n</svg>\n",
            width,
            height,
            x0,
            -y1,
            x1 - x0,
            y1 - y0,
            self.body
        )
    }
}

/// Renders the decorated horospheres of the given spinors.
pub fn render_spinors(
    ks: &[Spinor],
    width: u32,
    height: u32,
    window: Option<Window>,
) -> Result<String, CliError> {
    let mut hs = Vec::with_capacity(ks.len());
    for k in ks {
        hs.push(decorated_horosphere_uhs(k)?);
    }
    let window = match window {
        Some(w) => w,
        None => default_window(&hs),
    };
    let mut canvas = Canvas::new(window);
    canvas.real_axis();
    let mid_x = 0.5 * (window.x0 + window.x1);
    for h in &hs {
        match h.centre {
            BoundaryPointUHS::Finite(z) => {
                canvas.circle(z.re, h.size);
                canvas.arrow(z.re, h.size, h.direction, 0.35 * h.size);
            }
            BoundaryPointUHS::Infinity => {
                canvas.plane(h.size);
                canvas.arrow(mid_x, h.size, h.direction, 0.35 * h.size);
            }
        }
    }
    Ok(canvas.finish(width, height))
}

/// The integer spinors `(p, q)` with `gcd(p, q) = 1`, `0 < q <= qmax` and
/// `0 <= p/q <= 1`, ordered by `q` then `p`.
pub fn ford_spinors(qmax: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for q in 1..=qmax {
        for p in 0..=q {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Ford circles: the horocycles of the reduced fractions of `[0, 1]` with
/// denominator up to `qmax`, each of diameter `1/q^2`.
pub fn render_ford(qmax: u32, width: u32, height: u32) -> Result<String, CliError> {
    if qmax == 0 {
        return Err(CliError::Parse("--qmax must be a positive integer".into()));
    }
    let mut hs = Vec::new();
    for (p, q) in ford_spinors(qmax) {
        let k = Spinor::from_parts(p as f64, 0.0, q as f64, 0.0);
        hs.push(decorated_horosphere_uhs(&k)?);
    }
    let window = default_window(&hs);
    let mut canvas = Canvas::new(window);
    canvas.real_axis();
    for h in &hs {
        if let BoundaryPointUHS::Finite(z) = h.centre {
            canvas.circle(z.re, h.size);
        }
    }
    Ok(canvas.finish(width, height))
}
