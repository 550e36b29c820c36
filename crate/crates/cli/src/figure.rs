//! CSV, SVG and JSON output of the boundary curve and the inner regions.

use std::fmt::Write as _;

use opendoor::{
    boundary::{
        certified_strip, sample_branches, sector_angles, u_cap, v_extrema, BoundaryPoint, Branch,
    },
    c_n_constant,
    roots::{solve_xi, DEFAULT_TOL},
    OpenDoorParams, Result,
};
use serde::Serialize;

use crate::format::fmt_f64;

pub const DEFAULT_X_RANGE: (f64, f64) = (1e-3, 1e3);
pub const DEFAULT_SAMPLES: usize = 2000;

#[derive(Debug, Clone, Serialize)]
pub struct FigureSummary {
    pub alpha: f64,
    pub c: [f64; 2],
    pub n: u32,
    pub samples: usize,
    pub x_range: [f64; 2],
    pub xi: f64,
    pub u_cap: f64,
    pub half_angle: f64,
    pub strip_exact: [f64; 2],
    pub strip_certified: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_plus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_minus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_n: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_n_bar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<[f64; 2]>,
}

impl FigureSummary {
    pub fn new(params: &OpenDoorParams, x_range: (f64, f64), samples: usize) -> Result<Self> {
        let exact = v_extrema(params)?;
        let certified = certified_strip(params);
        let angles = if params.alpha() < 1.0 {
            Some(sector_angles(params)?)
        } else {
            None
        };
        let (c_n, c_n_bar) = if params.alpha() == 1.0 {
            (
                Some(c_n_constant(params.initial(), params.n())),
                Some(c_n_constant(&params.initial().conj(), params.n())),
            )
        } else {
            (None, None)
        };
        let c = params.initial().c();
        Ok(Self {
            alpha: params.alpha(),
            c: [c.re, c.im],
            n: params.n(),
            samples,
            x_range: [x_range.0, x_range.1],
            xi: solve_xi(params.root_coeff(), params.alpha(), DEFAULT_TOL)?.xi,
            u_cap: u_cap(params)?,
            half_angle: params.half_angle(),
            strip_exact: [exact.lower, exact.upper],
            strip_certified: [certified.lower, certified.upper],
            theta_plus: angles.map(|a| a.theta_plus),
            theta_minus: angles.map(|a| a.theta_minus),
            c_n,
            c_n_bar,
            window: c_n.zip(c_n_bar).map(|(lower, upper)| [-lower, upper]),
        })
    }
}

pub fn boundary_points(
    params: &OpenDoorParams,
    x_range: (f64, f64),
    samples: usize,
) -> Result<Vec<BoundaryPoint>> {
    sample_branches(params, x_range.0, x_range.1, samples)
}

pub fn boundary_csv(points: &[BoundaryPoint]) -> String {
    let mut out = String::from("branch,x,u,v\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            p.branch.as_str(),
            fmt_f64(p.x),
            fmt_f64(p.u),
            fmt_f64(p.v)
        );
    }
    out
}

/// Rows: `omega1` half-plane (param1 = boundary real part), `omega2`
/// certified strip, `omega3` sector `|arg w| < πα/2`, then `image_strip`
/// (exact strip), `theta_sector` (`−Θ₋ < arg w < Θ₊`, α < 1) and `window`
/// (α = 1).
pub fn regions_csv(summary: &FigureSummary) -> String {
    let mut rows = vec![
        ("omega1", "half_plane_left", 0.0, 0.0),
        (
            "omega2",
            "strip",
            summary.strip_certified[0],
            summary.strip_certified[1],
        ),
        ("omega3", "sector", -summary.half_angle, summary.half_angle),
        (
            "image_strip",
            "strip",
            summary.strip_exact[0],
            summary.strip_exact[1],
        ),
    ];
    if let (Some(minus), Some(plus)) = (summary.theta_minus, summary.theta_plus) {
        rows.push(("theta_sector", "angular_sector", -minus, plus));
    }
    if let Some([lower, upper]) = summary.window {
        rows.push(("window", "window", lower, upper));
    }
    let mut out = String::from("region,kind,param1,param2\n");
    for (region, kind, p1, p2) in rows {
        let _ = writeln!(out, "{region},{kind},{},{}", fmt_f64(p1), fmt_f64(p2));
    }
    out
}

const SIZE: f64 = 800.0;

/// Maps the world box `[x0, x0 + span] × [y0, y0 + span]` onto the square
/// canvas, `y` pointing up.
struct View {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl View {
    /// The certified strip plus a 20% margin on each side sets the vertical
    /// extent; the horizontal extent has the same length and puts the
    /// imaginary axis at 35% of the width.
    fn fit(summary: &FigureSummary) -> Self {
        let [lower, upper] = summary.strip_certified;
        let height = upper - lower;
        let span = 1.4 * height;
        Self {
            x0: -0.35 * span,
            y0: lower - 0.2 * height,
            scale: SIZE / span,
        }
    }

    fn px(&self, u: f64) -> f64 {
        (u - self.x0) * self.scale
    }

    fn py(&self, v: f64) -> f64 {
        SIZE - (v - self.y0) * self.scale
    }

    fn point(&self, u: f64, v: f64) -> String {
        format!("{:.3},{:.3}", self.px(u), self.py(v))
    }

    /// Endpoint of the ray from the origin at `angle`, far outside the canvas.
    fn ray(&self, angle: f64) -> String {
        let reach = 4.0 * SIZE / self.scale;
        self.point(reach * angle.cos(), reach * angle.sin())
    }
}

pub fn svg(summary: &FigureSummary, points: &[BoundaryPoint]) -> String {
    let view = View::fit(summary);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        "<title>alpha = {}, c = {}{:+}i, n = {}</title>",
        fmt_f64(summary.alpha),
        fmt_f64(summary.c[0]),
        summary.c[1],
        summary.n
    );
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="view"><rect x="0" y="0" width="{SIZE}" height="{SIZE}"/></clipPath></defs>"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##
    );
    let _ = writeln!(out, r#"<g clip-path="url(#view)">"#);

    let axis_x = view.px(0.0);
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{axis_x:.3}" height="{SIZE}" fill="#4c72b0" fill-opacity="0.12"/>"##
    );
    let [lower, upper] = summary.strip_certified;
    let _ = writeln!(
        out,
        r##"<rect x="0" y="{:.3}" width="{SIZE}" height="{:.3}" fill="#55a868" fill-opacity="0.15"/>"##,
        view.py(upper),
        view.py(lower) - view.py(upper)
    );
    let _ = writeln!(
        out,
        r##"<polygon points="{} {} {}" fill="#c44e52" fill-opacity="0.12"/>"##,
        view.point(0.0, 0.0),
        view.ray(summary.half_angle),
        view.ray(-summary.half_angle)
    );

    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{y:.3}" x2="{SIZE}" y2="{y:.3}" stroke="#888888" stroke-width="1"/>"##,
        y = view.py(0.0)
    );
    let _ = writeln!(
        out,
        r##"<line x1="{axis_x:.3}" y1="0" x2="{axis_x:.3}" y2="{SIZE}" stroke="#888888" stroke-width="1"/>"##
    );
    for v in [lower, upper] {
        let _ = writeln!(
            out,
            r##"<line x1="0" y1="{y:.3}" x2="{SIZE}" y2="{y:.3}" stroke="#55a868" stroke-width="1.5" stroke-dasharray="6,4"/>"##,
            y = view.py(v)
        );
    }
    for angle in [summary.half_angle, -summary.half_angle] {
        let _ = writeln!(
            out,
            r##"<polyline points="{} {}" fill="none" stroke="#c44e52" stroke-width="1.5" stroke-dasharray="6,4"/>"##,
            view.point(0.0, 0.0),
            view.ray(angle)
        );
    }
    if let (Some(plus), Some(minus)) = (summary.theta_plus, summary.theta_minus) {
        for angle in [plus, -minus] {
            let _ = writeln!(
                out,
                r##"<polyline points="{} {}" fill="none" stroke="#8172b2" stroke-width="1.5" stroke-dasharray="2,3"/>"##,
                view.point(0.0, 0.0),
                view.ray(angle)
            );
        }
    }

    for (branch, colour) in [(Branch::Upper, "#dd8452"), (Branch::Lower, "#4c72b0")] {
        let coordinates: Vec<String> = points
            .iter()
            .filter(|p| p.branch == branch)
            .map(|p| view.point(p.u, p.v))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
            coordinates.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    let legend = [
        ("#dd8452", "upper boundary branch"),
        ("#4c72b0", "lower boundary branch"),
        ("#55a868", "certified strip"),
        ("#c44e52", "sector |arg w| < \u{3c0}\u{3b1}/2"),
    ];
    for (k, (colour, label)) in legend.iter().enumerate() {
        let y = 20.0 + 18.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<line x1="12" y1="{y}" x2="36" y2="{y}" stroke="{colour}" stroke-width="2"/><text x="42" y="{}" font-family="sans-serif" font-size="12">{label}</text>"#,
            y + 4.0
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}
