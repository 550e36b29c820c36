//! Open regions of the `w`-plane and membership in the image `R(𝔻)`.
//!
//! Every region here is open: points on a boundary are outside.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::{
    boundary::{certified_strip, StripBounds},
    c_n_constant, Error, InitialPoint, OpenDoorParams, Result,
};

#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    /// `V(A, B)`: the plane minus the rays `{iy : y ≤ A}` and `{iy : y ≥ B}`.
    Window {
        lower: f64,
        upper: f64,
    },
    /// `Re w < 0`
    HalfPlaneLeft,
    Strip(StripBounds),
    /// `|arg w| < half_angle`
    Sector {
        half_angle: f64,
    },
    /// `−theta_minus < arg w < theta_plus`
    AngularSector {
        theta_minus: f64,
        theta_plus: f64,
    },
    Union(Vec<Region>),
    /// The image `R_{α,c,n}(𝔻)` itself.
    ExactImage(OpenDoorParams),
}

impl Region {
    pub fn window(lower: f64, upper: f64) -> Result<Self> {
        if !(lower < upper) {
            return Err(Error::domain(
                "window",
                format!("needs lower < upper, got ({lower}, {upper})"),
            ));
        }
        Ok(Region::Window { lower, upper })
    }

    pub fn sector(half_angle: f64) -> Result<Self> {
        if !(half_angle > 0.0 && half_angle <= FRAC_PI_2) {
            return Err(Error::domain(
                "sector",
                format!("half-angle must lie in (0, π/2], got {half_angle}"),
            ));
        }
        Ok(Region::Sector { half_angle })
    }

    pub fn angular_sector(theta_minus: f64, theta_plus: f64) -> Result<Self> {
        let valid = |a: f64| a > 0.0 && a <= FRAC_PI_2;
        if !(valid(theta_minus) && valid(theta_plus)) {
            return Err(Error::domain(
                "sector",
                format!("angles must lie in (0, π/2], got ({theta_minus}, {theta_plus})"),
            ));
        }
        Ok(Region::AngularSector {
            theta_minus,
            theta_plus,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Region::Window { .. } => "window",
            Region::HalfPlaneLeft => "half_plane_left",
            Region::Strip(_) => "strip",
            Region::Sector { .. } => "sector",
            Region::AngularSector { .. } => "angular_sector",
            Region::Union(_) => "union",
            Region::ExactImage(_) => "exact_image",
        }
    }

    pub fn contains(&self, w: Complex64) -> bool {
        if !(w.re.is_finite() && w.im.is_finite()) {
            return false;
        }
        match self {
            Region::Window { lower, upper } => w.re != 0.0 || (*lower < w.im && w.im < *upper),
            Region::HalfPlaneLeft => w.re < 0.0,
            Region::Strip(bounds) => bounds.contains_im(w.im),
            Region::Sector { half_angle } => w.re > 0.0 && w.arg().abs() < *half_angle,
            Region::AngularSector {
                theta_minus,
                theta_plus,
            } => {
                let arg = w.arg();
                w.re > 0.0 && -theta_minus < arg && arg < *theta_plus
            }
            Region::Union(members) => members.iter().any(|m| m.contains(w)),
            Region::ExactImage(params) => in_image(params, w),
        }
    }

    /// Euclidean distance from `w` to the boundary of the region; for a union
    /// the distance to the nearest member boundary. `None` for the exact
    /// image, whose boundary has no closed-form distance.
    pub fn boundary_distance(&self, w: Complex64) -> Option<f64> {
        match self {
            Region::Window { lower, upper } => {
                let below = if w.im <= *lower {
                    w.re.abs()
                } else {
                    w.re.hypot(w.im - lower)
                };
                let above = if w.im >= *upper {
                    w.re.abs()
                } else {
                    w.re.hypot(w.im - upper)
                };
                Some(below.min(above))
            }
            Region::HalfPlaneLeft => Some(w.re.abs()),
            Region::Strip(bounds) => {
                Some((w.im - bounds.lower).abs().min((w.im - bounds.upper).abs()))
            }
            Region::Sector { half_angle } => {
                Some(ray_distance(w, *half_angle).min(ray_distance(w, -half_angle)))
            }
            Region::AngularSector {
                theta_minus,
                theta_plus,
            } => Some(ray_distance(w, *theta_plus).min(ray_distance(w, -theta_minus))),
            Region::Union(members) => members
                .iter()
                .map(|m| m.boundary_distance(w))
                .try_fold(f64::INFINITY, |acc, d| d.map(|d| acc.min(d))),
            Region::ExactImage(_) => None,
        }
    }
}

/// Distance from `w` to the ray from the origin at angle `angle`.
fn ray_distance(w: Complex64, angle: f64) -> f64 {
    let direction = Complex64::from_polar(1.0, angle);
    let along = w.re * direction.re + w.im * direction.im;
    if along <= 0.0 {
        w.norm()
    } else {
        (w.re * direction.im - w.im * direction.re).abs()
    }
}

/// The slit domain `V(−C_n(c), C_n(c̄))`, the image of `R_{1,c,n}`.
pub fn window_region(initial: &InitialPoint, n: u32) -> Region {
    Region::Window {
        lower: -c_n_constant(initial, n),
        upper: c_n_constant(&initial.conj(), n),
    }
}

/// `Ω = Ω₁ ∪ Ω₂ ∪ Ω₃`: the left half-plane, the certified strip and the
/// sector `|arg w| < πα/2`.
pub fn omega_union(params: &OpenDoorParams) -> Region {
    Region::Union(vec![
        Region::HalfPlaneLeft,
        Region::Strip(certified_strip(params)),
        Region::Sector {
            half_angle: params.half_angle(),
        },
    ])
}

/// For `α < 1` and `u > 0`: the open vertical interval `(v₋, v₊)` of the
/// image above the real part `u`.
///
/// `u = a(rx)^α` is strictly increasing in the branch parameter, so both
/// branches are graphs over `u` and are read off at
/// `x(u) = (u/a)^{1/α} / r`.
pub fn image_vertical_bounds(params: &OpenDoorParams, u: f64) -> Option<(f64, f64)> {
    if params.alpha() >= 1.0 || !(u > 0.0) {
        return None;
    }
    let (alpha, a, b) = (params.alpha(), params.a(), params.b());
    let (r, t) = (params.initial().r(), params.initial().t());
    let x = ((u / a).ln() / alpha).exp() / r;
    let k = params.n_f64() * alpha / (2.0 * t.cos());
    let power_term = b / a * u;
    let upper = power_term + k * (x - 2.0 * t.sin() + x.recip());
    let lower = -power_term - k * (x + 2.0 * t.sin() + x.recip());
    Some((lower, upper))
}

/// Whether `w` lies in the open image `R_{α,c,n}(𝔻)`.
///
/// At `α = 1` the image is the window `V(−C_n(c), C_n(c̄))`. Below that, the
/// closed left half-plane lies inside (the boundary curve stays in
/// `Re w > 0`), and for `Re w > 0` the point must sit strictly between the
/// two boundary branches.
pub fn in_image(params: &OpenDoorParams, w: Complex64) -> bool {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return false;
    }
    if params.alpha() >= 1.0 {
        return window_region(params.initial(), params.n()).contains(w);
    }
    if w.re <= 0.0 {
        return true;
    }
    let (lower, upper) = image_vertical_bounds(params, w.re).expect("u > 0 and alpha < 1");
    lower < w.im && w.im < upper
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::boundary::{lower_branch, sector_angles, upper_branch};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(alpha: f64, cc: Complex64, n: u32) -> OpenDoorParams {
        OpenDoorParams::new(alpha, InitialPoint::new(cc).unwrap(), n).unwrap()
    }

    #[test]
    fn contains_examples() {
        let root3 = 3f64.sqrt();
        let window = Region::window(-root3, root3).unwrap();
        assert!(!window.contains(c(0.0, 2.0)));
        assert!(window.contains(c(-5.0, 100.0)));
        assert!(window.contains(c(0.0, 1.0)));
        assert!(!window.contains(c(0.0, -root3)));
        let sector = Region::sector(FRAC_PI_4).unwrap();
        assert!(!sector.contains(c(1.0, 1.0)));
        assert!(sector.contains(c(1.0, 0.99)));
        assert!(!Region::HalfPlaneLeft.contains(c(0.0, 3.0)));
        assert!(!window.contains(c(f64::NAN, 0.0)));

        assert!(Region::window(1.0, 1.0).is_err());
        assert!(Region::sector(0.0).is_err());
        assert!(Region::sector(FRAC_PI_2 + 1e-9).is_err());
        assert!(Region::angular_sector(0.5, 2.0).is_err());
    }

    #[test]
    fn boundary_distances() {
        let window = Region::window(-1.0, 2.0).unwrap();
        assert_eq!(window.boundary_distance(c(3.0, 0.0)), Some(3f64.hypot(1.0)));
        assert_eq!(window.boundary_distance(c(-0.5, 5.0)), Some(0.5));
        let sector = Region::sector(FRAC_PI_4).unwrap();
        let d = sector.boundary_distance(c(1.0, 0.0)).unwrap();
        assert!((d - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(sector.boundary_distance(c(-4.0, 0.0)), Some(4.0));
        let p = params(0.5, c(4.0, 3.0), 2);
        let omega = omega_union(&p);
        assert_eq!(omega.boundary_distance(c(-0.25, -0.75)), Some(0.25));
        assert_eq!(Region::ExactImage(p).boundary_distance(c(0.0, 0.0)), None);
        assert_eq!(
            Region::Union(vec![Region::ExactImage(p)]).boundary_distance(c(1.0, 0.0)),
            None
        );
    }

    #[test]
    fn in_image_examples() {
        for p in [
            params(0.5, c(4.0, 3.0), 2),
            params(0.1, c(0.2, -1.0), 7),
            params(1.0, c(1.0, 0.0), 1),
        ] {
            assert!(in_image(&p, c(-1.0, 0.0)));
            assert!(in_image(&p, p.c_pow_alpha()));
        }
        assert!(!in_image(&params(1.0, c(1.0, 0.0), 1), c(0.0, 2.0)));
        assert!(in_image(&params(0.5, c(4.0, 3.0), 2), c(0.0, 1e6)));
        assert!(!in_image(&params(0.5, c(4.0, 3.0), 2), c(1.0, 1e6)));
    }

    #[test]
    fn branches_separate_inside_from_outside() {
        let p = params(0.5, c(4.0, 3.0), 2);
        for k in 0..200 {
            let x = 10f64.powf(-2.0 + 4.0 * f64::from(k) / 199.0);
            for point in [upper_branch(&p, x).unwrap(), lower_branch(&p, x).unwrap()] {
                let toward_axis = -point.v.signum();
                let eps = 1e-7 * point.v.abs().max(1.0);
                assert!(in_image(&p, c(point.u, point.v + toward_axis * eps)));
                assert!(!in_image(&p, c(point.u, point.v - toward_axis * eps)));
            }
        }
    }

    #[test]
    fn omega_examples() {
        let ip = InitialPoint::new(c(2.0, -1.0)).unwrap();
        let p = OpenDoorParams::new(1.0, ip, 3).unwrap();
        let window = window_region(&ip, 3);
        let omega = omega_union(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let w = c(rng.random_range(-1.0..1.0), rng.random_range(-20.0..20.0));
            let w = if rng.random_bool(0.5) {
                c(0.0, w.im)
            } else {
                w
            };
            let far = window.boundary_distance(w).unwrap() > 1e-9;
            if far {
                assert_eq!(omega.contains(w), window.contains(w), "{w}");
            }
        }

        let fig = params(0.5, c(4.0, 3.0), 2);
        let omega = omega_union(&fig);
        assert!(omega.contains(c(-0.75, 0.0)));
        assert!(Region::Strip(certified_strip(&fig)).contains(c(-0.75, 0.0)));
        assert!(omega.contains(c(10.0, 0.0)));
        assert!(!omega.contains(c(1.0, 3.0)));
    }

    #[test]
    fn alpha_one_matches_window_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let ip = InitialPoint::new(c(rng.random_range(0.1..5.0), rng.random_range(-5.0..5.0)))
                .unwrap();
            let n = rng.random_range(1..6);
            let p = OpenDoorParams::new(1.0, ip, n).unwrap();
            let window = window_region(&ip, n);
            for _ in 0..5_000 {
                let w = if rng.random_bool(0.3) {
                    c(0.0, rng.random_range(-30.0..30.0))
                } else {
                    c(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0))
                };
                assert_eq!(in_image(&p, w), window.contains(w));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn omega_inside_image(
            alpha in 0.05f64..=1.0, r in 0.2f64..5.0, t in -1.3f64..1.3, n in 1u32..6, seed in 0u64..1000
        ) {
            let p = params(alpha, Complex64::from_polar(r, t), n);
            let omega = omega_union(&p);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..2_000 {
                let w = c(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0));
                if omega.boundary_distance(w).unwrap() > 1e-9 && omega.contains(w) {
                    prop_assert!(in_image(&p, w), "{}", w);
                }
            }
        }

        #[test]
        fn sectors_inside_image(
            alpha in 0.05f64..0.95, r in 0.2f64..5.0, t in -1.3f64..1.3, n in 1u32..6, seed in 0u64..1000
        ) {
            let p = params(alpha, Complex64::from_polar(r, t), n);
            let s = sector_angles(&p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..2_000 {
                let radius = 10f64.powf(rng.random_range(-3.0..3.0));
                let narrow = Complex64::from_polar(radius, rng.random_range(-1.0..1.0) * p.half_angle());
                prop_assert!(in_image(&p, narrow));
                let wide = Complex64::from_polar(radius, rng.random_range(-s.theta_minus..s.theta_plus));
                prop_assert!(in_image(&p, wide));
            }
        }
    }
}
