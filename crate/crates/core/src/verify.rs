//! Numeric corroboration of the subordination results on finite grids.
//!
//! Nothing here proves anything: a grid and a truncated series can only
//! fail to find a counterexample. Reports therefore carry margins, so that
//! near-violations are visible.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{
    complex::{mobius_g, principal_power},
    opendoor::{eval_r, logderiv_transform, TruncatedSeries},
    regions::{in_image, omega_union},
    Error, InitialPoint, OpenDoorParams, Result,
};

pub const DEFAULT_RADII: [f64; 6] = [0.1, 0.3, 0.5, 0.7, 0.85, 0.95];
pub const DEFAULT_ANGULAR_COUNT: usize = 720;
pub const DEFAULT_WINDING_RESOLUTION: usize = 8192;
/// `1 − ρ` for the closed curve `R(ρe^{iθ})`; `2⁻⁴⁰`, exactly representable.
pub const WINDING_RADIUS_GAP: f64 = 1.0 / 1_099_511_627_776.0;
/// Queries closer than this to the sampled curve are indeterminate.
pub const EXCLUSION_TUBE: f64 = 1e-6;

/// A segment is split while it is longer than this fraction of its
/// distance from the origin (or of 1, near the origin).
const BASE_CHORD_RATIO: f64 = 0.1;
const BASE_MAX_DEPTH: u32 = 60;
const QUERY_MAX_DEPTH: u32 = 40;

/// Polar sampling grid: every radius times `angular_count` equally spaced
/// angles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    radii: Vec<f64>,
    angular_count: usize,
}

impl GridSpec {
    pub fn new(radii: Vec<f64>, angular_count: usize) -> Result<Self> {
        if radii.is_empty() || angular_count == 0 {
            return Err(Error::domain(
                "grid",
                "needs at least one radius and one angle",
            ));
        }
        if !radii.iter().all(|&r| r > 0.0 && r < 1.0) {
            return Err(Error::domain(
                "grid",
                format!("radii must lie in (0, 1), got {radii:?}"),
            ));
        }
        if !radii.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::domain(
                "grid",
                format!("radii must increase strictly, got {radii:?}"),
            ));
        }
        Ok(Self {
            radii,
            angular_count,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn max_radius(&self) -> f64 {
        *self.radii.last().expect("grid has a radius")
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angular_count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        let step = 2.0 * PI / self.angular_count as f64;
        self.radii.iter().flat_map(move |&r| {
            (0..self.angular_count).map(move |k| Complex64::from_polar(r, step * k as f64))
        })
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            radii: DEFAULT_RADII.to_vec(),
            angular_count: DEFAULT_ANGULAR_COUNT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checked: usize,
    /// Points `z` where `w = q + zq'/q` left the hypothesis region, with `w`.
    pub hypothesis_failures: Vec<(Complex64, Complex64)>,
    /// Points where the checked quantity failed, with its value (the
    /// argument of `q(z)`, or the real part for positivity checks).
    pub conclusion_failures: Vec<(Complex64, f64)>,
    /// Smallest margin seen: `πα/2 − |arg q(z)|` for subordination checks,
    /// the real part itself for positivity checks.
    pub min_margin: f64,
    /// Estimated truncation error of the series at the outermost radius.
    pub tail_bound: Option<f64>,
}

impl VerificationReport {
    fn new() -> Self {
        Self {
            checked: 0,
            hypothesis_failures: Vec::new(),
            conclusion_failures: Vec::new(),
            min_margin: f64::INFINITY,
            tail_bound: None,
        }
    }

    /// "Hypothesis everywhere ⇒ conclusion everywhere" held on the grid.
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis_failures.is_empty() || self.conclusion_failures.is_empty()
    }

    /// Every checked point satisfied the conclusion with a positive margin.
    pub fn all_positive(&self) -> bool {
        self.conclusion_failures.is_empty() && self.min_margin > 0.0
    }

    fn record_positive(&mut self, z: Complex64, value: f64) {
        self.checked += 1;
        self.min_margin = self.min_margin.min(value);
        if !(value > 0.0) {
            self.conclusion_failures.push((z, value));
        }
    }
}

/// Which region `q + zq'/q` is required to stay in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    ExactImage,
    Omega,
}

/// `zQ'(z)/Q(z) = ½[(c − c̄z)/(c + c̄z) + (1 + z)/(1 − z)]` for
/// `Q = α·z·g_c'/g_c`.
pub fn starlike_ratio(initial: &InitialPoint, z: Complex64) -> Complex64 {
    let c = initial.c();
    0.5 * ((c - c.conj() * z) / (c + c.conj() * z) + (1.0 + z) / (1.0 - z))
}

/// Starlikeness of `Q = α·z·g_c'/g_c`: `Re(zQ'/Q) > 0` at every grid point.
pub fn check_starlike_q(initial: &InitialPoint, grid: &GridSpec) -> VerificationReport {
    let mut report = VerificationReport::new();
    for z in grid.points() {
        report.record_positive(z, starlike_ratio(initial, z).re);
    }
    report
}

/// The close-to-convexity condition `Re[zR'(z)/Q(z)] > 0`, evaluated as
/// `Re[g_c(z)^α + n·zQ'(z)/Q(z)]`.
pub fn check_close_to_convex(
    params: &OpenDoorParams,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for z in grid.points() {
        let g = mobius_g(params.initial(), z)?;
        let value = principal_power(g, params.alpha())?
            + params.n_f64() * starlike_ratio(params.initial(), z);
        report.record_positive(z, value.re);
    }
    Ok(report)
}

/// Evaluates both sides of the implication
/// `q + zq'/q ∈ region ⇒ |arg q| < πα/2` on the grid.
pub fn check_subordination(
    params: &OpenDoorParams,
    q: &TruncatedSeries,
    grid: &GridSpec,
    hypothesis: Hypothesis,
) -> Result<VerificationReport> {
    let head = params.c_pow_alpha();
    if !q.is_in_class(head, params.n(), 1e-12 * head.norm()) {
        return Err(Error::domain(
            "series",
            format!(
                "q must have the form c^α + O(z^n) with c^α = {head} and n = {}",
                params.n()
            ),
        ));
    }
    let omega = omega_union(params);
    let half_angle = params.half_angle();
    let mut report = VerificationReport::new();
    for z in grid.points() {
        let w = logderiv_transform(q, z)?;
        let inside = match hypothesis {
            Hypothesis::ExactImage => in_image(params, w),
            Hypothesis::Omega => omega.contains(w),
        };
        if !inside {
            report.hypothesis_failures.push((z, w));
        }
        let arg = q.eval(z).arg();
        let margin = half_angle - arg.abs();
        report.min_margin = report.min_margin.min(margin);
        if !(margin > 0.0) {
            report.conclusion_failures.push((z, arg));
        }
        report.checked += 1;
    }
    report.tail_bound = Some(q.tail_bound(grid.max_radius()));
    Ok(report)
}

/// The closed polyline `R(ρe^{iθ})`, `ρ = 1 − 2⁻⁴⁰`, sampled at
/// `resolution` equally spaced angles and subdivided wherever a chord is
/// long compared with its distance from the origin.
///
/// The image is a Jordan domain, so a point lies inside exactly when the
/// curve winds around it. Each query subdivides further the chords that
/// pass close to it.
#[derive(Debug, Clone)]
pub struct WindingCurve {
    params: OpenDoorParams,
    rho: f64,
    nodes: Vec<(f64, Complex64)>,
}

impl WindingCurve {
    pub fn new(params: &OpenDoorParams, resolution: usize) -> Result<Self> {
        if resolution < 3 {
            return Err(Error::domain(
                "resolution",
                format!("needs at least 3 samples, got {resolution}"),
            ));
        }
        let rho = 1.0 - WINDING_RADIUS_GAP;
        let curve = Self {
            params: *params,
            rho,
            nodes: Vec::new(),
        };
        let step = 2.0 * PI / resolution as f64;
        let base: Vec<(f64, Complex64)> = (0..=resolution)
            .map(|k| {
                let theta = step * k as f64;
                curve.eval(theta).map(|w| (theta, w))
            })
            .collect::<Result<_>>()?;
        let mut nodes = Vec::with_capacity(base.len() * 2);
        for pair in base.windows(2) {
            nodes.push(pair[0]);
            curve.refine_base(pair[0], pair[1], 0, &mut nodes)?;
        }
        Ok(Self { nodes, ..curve })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn eval(&self, theta: f64) -> Result<Complex64> {
        eval_r(&self.params, Complex64::from_polar(self.rho, theta))
    }

    fn refine_base(
        &self,
        a: (f64, Complex64),
        b: (f64, Complex64),
        depth: u32,
        out: &mut Vec<(f64, Complex64)>,
    ) -> Result<()> {
        let scale = a.1.norm().min(b.1.norm()).max(1.0);
        if depth >= BASE_MAX_DEPTH || (b.1 - a.1).norm() <= BASE_CHORD_RATIO * scale {
            return Ok(());
        }
        let theta = 0.5 * (a.0 + b.0);
        let mid = (theta, self.eval(theta)?);
        self.refine_base(a, mid, depth + 1, out)?;
        out.push(mid);
        self.refine_base(mid, b, depth + 1, out)
    }

    /// Winding number of the curve around `w`.
    pub fn winding_number(&self, w: Complex64) -> Result<i64> {
        let mut state = Query {
            w,
            winding: 0,
            min_distance: f64::INFINITY,
        };
        let count = self.nodes.len();
        for k in 0..count {
            let a = self.nodes[k];
            let b = if k + 1 == count {
                // θ = 2π closes the curve at the first node
                (2.0 * PI, self.nodes[0].1)
            } else {
                self.nodes[k + 1]
            };
            self.accumulate(a, b, 0, &mut state)?;
        }
        if state.min_distance < EXCLUSION_TUBE {
            return Err(Error::Indeterminate {
                w,
                distance: state.min_distance,
            });
        }
        Ok(state.winding)
    }

    pub fn contains(&self, w: Complex64) -> Result<bool> {
        Ok(self.winding_number(w)? != 0)
    }

    fn accumulate(
        &self,
        a: (f64, Complex64),
        b: (f64, Complex64),
        depth: u32,
        state: &mut Query,
    ) -> Result<()> {
        let chord_sq = (b.1 - a.1).norm_sqr();
        let dist_sq = segment_distance_sq(state.w, a.1, b.1);
        if dist_sq > 4.0 * chord_sq || depth >= QUERY_MAX_DEPTH {
            state.min_distance = state.min_distance.min(dist_sq.sqrt());
            state.winding += crossing(state.w, a.1, b.1);
            return Ok(());
        }
        let theta = 0.5 * (a.0 + b.0);
        let mid = (theta, self.eval(theta)?);
        self.accumulate(a, mid, depth + 1, state)?;
        self.accumulate(mid, b, depth + 1, state)
    }
}

struct Query {
    w: Complex64,
    winding: i64,
    min_distance: f64,
}

fn segment_distance_sq(w: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let aw = w - a;
    let len_sq = ab.norm_sqr();
    let s = if len_sq > 0.0 {
        ((aw.re * ab.re + aw.im * ab.im) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (aw - ab * s).norm_sqr()
}

/// Signed crossing of the segment `a → b` with the horizontal ray from `w`
/// to the right.
fn crossing(w: Complex64, a: Complex64, b: Complex64) -> i64 {
    let side = (b.re - a.re) * (w.im - a.im) - (w.re - a.re) * (b.im - a.im);
    if a.im <= w.im {
        if b.im > w.im && side > 0.0 {
            return 1;
        }
    } else if b.im <= w.im && side < 0.0 {
        return -1;
    }
    0
}

/// Membership in `R(𝔻)` by the winding number of `R(ρe^{iθ})` around `w`.
pub fn winding_membership(
    params: &OpenDoorParams,
    w: Complex64,
    resolution: usize,
) -> Result<bool> {
    WindingCurve::new(params, resolution)?.contains(w)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgreementReport {
    pub checked: usize,
    /// Points skipped because they lie inside the exclusion tube.
    pub excluded: usize,
    pub disagreements: Vec<Complex64>,
    pub seed: u64,
}

/// Compares [`in_image`] with the winding-number oracle at `samples`
/// uniform random points of the box `[−half_side, half_side]²`.
pub fn oracle_agreement(
    params: &OpenDoorParams,
    samples: usize,
    half_side: f64,
    resolution: usize,
    seed: u64,
) -> Result<AgreementReport> {
    let curve = WindingCurve::new(params, resolution)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AgreementReport {
        checked: 0,
        excluded: 0,
        disagreements: Vec::new(),
        seed,
    };
    for _ in 0..samples {
        let w = Complex64::new(
            rng.random_range(-half_side..half_side),
            rng.random_range(-half_side..half_side),
        );
        match curve.contains(w) {
            Ok(inside) => {
                report.checked += 1;
                if inside != in_image(params, w) {
                    report.disagreements.push(w);
                }
            }
            Err(Error::Indeterminate { .. }) => report.excluded += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnivalenceReport {
    pub pairs: usize,
    pub skipped: usize,
    /// Smallest `|R(z₁) − R(z₂)| / (1 + |R(z₁)|)` over the sampled pairs.
    pub min_separation: f64,
    pub injective: bool,
    pub seed: u64,
}

/// Samples `pair_count` random pairs in `|z| ≤ 0.98` and checks that `R`
/// separates them: `|R(z₁) − R(z₂)| > 1e−12·(1 + |R(z₁)|)`. A necessary
/// condition for univalence only.
pub fn univalence_spot_check(
    params: &OpenDoorParams,
    pair_count: usize,
    seed: u64,
) -> Result<UnivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| {
        let radius = 0.98 * rng.random::<f64>().sqrt();
        Complex64::from_polar(radius, rng.random_range(0.0..2.0 * PI))
    };
    let mut report = UnivalenceReport {
        pairs: 0,
        skipped: 0,
        min_separation: f64::INFINITY,
        injective: true,
        seed,
    };
    for _ in 0..pair_count {
        let z1 = sample(&mut rng);
        let z2 = sample(&mut rng);
        if z1 == z2 {
            report.skipped += 1;
            continue;
        }
        let w1 = eval_r(params, z1)?;
        let w2 = eval_r(params, z2)?;
        let separation = (w1 - w2).norm() / (1.0 + w1.norm());
        report.min_separation = report.min_separation.min(separation);
        if !(separation > 1e-12) {
            report.injective = false;
        }
        report.pairs += 1;
    }
    Ok(report)
}
