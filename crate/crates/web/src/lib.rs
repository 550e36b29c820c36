//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain numbers and returns JSON text (or a flat
//! array), so the page needs no generated type glue beyond the functions.

use num_complex::Complex64;
use opendoor::{
    boundary::{certified_strip, sample_branches, sector_angles, v_extrema, Branch},
    opendoor::eval_r,
    regions::{in_image, omega_union, window_region, Region},
    InitialPoint, OpenDoorParams,
};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

fn params(alpha: f64, c_re: f64, c_im: f64, n: u32) -> Result<OpenDoorParams, String> {
    let initial = InitialPoint::new(Complex64::new(c_re, c_im)).map_err(|e| e.to_string())?;
    OpenDoorParams::new(alpha, initial, n).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Geometry {
    /// `[u, v]` pairs along each branch, in parameter order.
    upper: Vec<[f64; 2]>,
    lower: Vec<[f64; 2]>,
    strip_exact: [f64; 2],
    strip_certified: [f64; 2],
    half_angle: f64,
    theta_plus: Option<f64>,
    theta_minus: Option<f64>,
    window: Option<[f64; 2]>,
    c_pow_alpha: [f64; 2],
}

/// Boundary branches sampled over `x ∈ [1e−3, 1e3]` and the inner regions,
/// as JSON.
#[wasm_bindgen]
pub fn geometry(
    alpha: f64,
    c_re: f64,
    c_im: f64,
    n: u32,
    samples: usize,
) -> Result<String, String> {
    let p = params(alpha, c_re, c_im, n)?;
    let points = sample_branches(&p, 1e-3, 1e3, samples).map_err(|e| e.to_string())?;
    let branch = |which: Branch| -> Vec<[f64; 2]> {
        points
            .iter()
            .filter(|point| point.branch == which)
            .map(|point| [point.u, point.v])
            .collect()
    };
    let exact = v_extrema(&p).map_err(|e| e.to_string())?;
    let certified = certified_strip(&p);
    let angles = if alpha < 1.0 {
        Some(sector_angles(&p).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let window = match (alpha == 1.0).then(|| window_region(p.initial(), n)) {
        Some(Region::Window { lower, upper }) => Some([lower, upper]),
        _ => None,
    };
    let center = p.c_pow_alpha();
    let geometry = Geometry {
        upper: branch(Branch::Upper),
        lower: branch(Branch::Lower),
        strip_exact: [exact.lower, exact.upper],
        strip_certified: [certified.lower, certified.upper],
        half_angle: p.half_angle(),
        theta_plus: angles.map(|a| a.theta_plus),
        theta_minus: angles.map(|a| a.theta_minus),
        window,
        c_pow_alpha: [center.re, center.im],
    };
    serde_json::to_string(&geometry).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Classification {
    in_image: bool,
    in_omega: bool,
    half_plane: bool,
    strip: bool,
    sector: bool,
}

/// Membership of `w` in the image and in each part of `Ω`, as JSON.
#[wasm_bindgen]
pub fn classify(
    alpha: f64,
    c_re: f64,
    c_im: f64,
    n: u32,
    w_re: f64,
    w_im: f64,
) -> Result<String, String> {
    let p = params(alpha, c_re, c_im, n)?;
    let w = Complex64::new(w_re, w_im);
    let classification = Classification {
        in_image: in_image(&p, w),
        in_omega: omega_union(&p).contains(w),
        half_plane: Region::HalfPlaneLeft.contains(w),
        strip: Region::Strip(certified_strip(&p)).contains(w),
        sector: Region::Sector {
            half_angle: p.half_angle(),
        }
        .contains(w),
    };
    serde_json::to_string(&classification).map_err(|e| e.to_string())
}

/// `R(z)` as `[re, im]`.
#[wasm_bindgen]
pub fn evaluate(
    alpha: f64,
    c_re: f64,
    c_im: f64,
    n: u32,
    z_re: f64,
    z_im: f64,
) -> Result<Vec<f64>, String> {
    let p = params(alpha, c_re, c_im, n)?;
    let w = eval_r(&p, Complex64::new(z_re, z_im)).map_err(|e| e.to_string())?;
    Ok(vec![w.re, w.im])
}
