//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or exceeds its time budget.

use std::{
    f64::consts::{FRAC_PI_4, PI},
    fs,
    process::{Command, ExitCode},
    time::{Duration, Instant},
};

use num_complex::Complex64;
use opendoor::{
    boundary::{lower_branch, mocanu_theta, sector_angles, upper_branch, v_extrema},
    c_n_constant,
    opendoor::{eval_r, extremal_transform, kuroki_owa_r, kuroki_owa_rotation},
    regions::{image_vertical_bounds, in_image, omega_union},
    roots::{solve_xi, DEFAULT_TOL},
    verify::{oracle_agreement, DEFAULT_WINDING_RESOLUTION},
    InitialPoint, OpenDoorParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(alpha: f64, cc: Complex64, n: u32) -> OpenDoorParams {
    OpenDoorParams::new(alpha, InitialPoint::new(cc).expect("Re c > 0"), n)
        .expect("valid parameters")
}

fn figure_params() -> OpenDoorParams {
    params(0.5, c(4.0, 3.0), 2)
}

fn random_initial(rng: &mut ChaCha8Rng, max_arg: f64) -> InitialPoint {
    let r = 10f64.powf(rng.random_range(-1.0..1.0));
    InitialPoint::new(Complex64::from_polar(
        r,
        rng.random_range(-max_arg..max_arg),
    ))
    .expect("Re c > 0")
}

fn random_params(rng: &mut ChaCha8Rng, max_arg: f64, max_n: u32) -> OpenDoorParams {
    let alpha = rng.random_range(0.05..0.95);
    let initial = random_initial(rng, max_arg);
    OpenDoorParams::new(alpha, initial, rng.random_range(1..=max_n)).expect("valid parameters")
}

fn describe(p: &OpenDoorParams) -> String {
    format!("alpha={} c={} n={}", p.alpha(), p.initial().c(), p.n())
}

fn classical_window() -> Outcome {
    let strip = v_extrema(&params(1.0, c(1.0, 0.0), 1)).map_err(|e| e.to_string())?;
    let root3 = 3f64.sqrt();
    let error = (strip.lower + root3).abs().max((strip.upper - root3).abs());
    if error <= 1e-12 {
        Ok(format!(
            "({}, {}), error {error:.1e}",
            strip.lower, strip.upper
        ))
    } else {
        Err(format!(
            "({}, {}) is {error:.1e} away from (-sqrt 3, sqrt 3)",
            strip.lower, strip.upper
        ))
    }
}

fn general_window() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0f64;
    for _ in 0..1_000 {
        let initial = random_initial(&mut rng, 1.3);
        let n = rng.random_range(1..=8);
        let p = OpenDoorParams::new(1.0, initial, n).expect("valid parameters");
        let strip = v_extrema(&p).map_err(|e| e.to_string())?;
        let lower = -c_n_constant(&initial, n);
        let upper = c_n_constant(&initial.conj(), n);
        let error = (strip.lower - lower).abs().max((strip.upper - upper).abs());
        worst = worst.max(error);
        if error > 1e-10 {
            return Err(format!(
                "{}: strip ({}, {}) vs window ({lower}, {upper})",
                describe(&p),
                strip.lower,
                strip.upper
            ));
        }
    }
    Ok(format!("1000 configurations, max error {worst:.1e}"))
}

fn root_certification() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0f64;
    for k in 0..1_000 {
        let a = 10f64.powf(rng.random_range(-3.0..3.0));
        let alpha = if k % 10 == 0 {
            1.0
        } else {
            rng.random_range(0.001..1.0)
        };
        let r = solve_xi(a, alpha, DEFAULT_TOL).map_err(|e| format!("A={a} alpha={alpha}: {e}"))?;
        worst = worst.max(r.residual.abs());
        if r.residual.abs() > 1e-14 {
            return Err(format!("A={a} alpha={alpha}: residual {}", r.residual));
        }
        let inside = if alpha < 1.0 {
            r.bracket_lo < r.xi && r.xi < r.bracket_hi
        } else {
            r.bracket_lo <= r.xi && r.xi <= r.bracket_hi
        };
        if !inside {
            return Err(format!(
                "A={a} alpha={alpha}: xi {} outside [{}, {}]",
                r.xi, r.bracket_lo, r.bracket_hi
            ));
        }
    }
    Ok(format!("1000 roots, max |residual| {worst:.1e}"))
}

fn rotation_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0f64;
    for _ in 0..1_000 {
        let initial = random_initial(&mut rng, 1.4);
        let n = rng.random_range(1..=8);
        let z = Complex64::from_polar(
            0.95 * rng.random::<f64>().sqrt(),
            rng.random_range(0.0..2.0 * PI),
        );
        let p = OpenDoorParams::new(1.0, initial, n).expect("valid parameters");
        let rotated = kuroki_owa_r(&initial, n, z).map_err(|e| e.to_string())?;
        let reference =
            eval_r(&p, kuroki_owa_rotation(&initial, n) * z).map_err(|e| e.to_string())?;
        let error = (rotated - reference).norm() / reference.norm().max(1.0);
        worst = worst.max(error);
        if error > 1e-12 {
            return Err(format!("{} z={z}: {rotated} vs {reference}", describe(&p)));
        }
    }
    Ok(format!("1000 points, max relative error {worst:.1e}"))
}

fn mocanu_consistency() -> Outcome {
    let mut worst = 0f64;
    for k in 0..100 {
        let alpha = 0.01 + 0.98 * (f64::from(k) + 0.5) / 100.0;
        let angles = sector_angles(&params(alpha, c(1.0, 0.0), 1)).map_err(|e| e.to_string())?;
        let closed = mocanu_theta(alpha).map_err(|e| e.to_string())?;
        let error = (angles.theta_plus - closed)
            .abs()
            .max((angles.theta_minus - closed).abs());
        worst = worst.max(error);
        if error > 1e-12 {
            return Err(format!(
                "alpha={alpha}: ({}, {}) vs {closed}",
                angles.theta_plus, angles.theta_minus
            ));
        }
    }
    Ok(format!("100 exponents, max error {worst:.1e}"))
}

fn extremal_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0f64;
    let radii: Vec<f64> = (1..=20).map(|k| 0.95 * f64::from(k) / 20.0).collect();
    for set in 0..20 {
        let p = if set == 0 {
            figure_params()
        } else {
            random_params(&mut rng, 1.4, 6)
        };
        for &radius in &radii {
            for j in 0..500 {
                let z = Complex64::from_polar(radius, 2.0 * PI * f64::from(j) / 500.0);
                let lhs = extremal_transform(&p, z).map_err(|e| e.to_string())?;
                let rhs = eval_r(&p, z.powu(p.n())).map_err(|e| e.to_string())?;
                let error = (lhs - rhs).norm();
                worst = worst.max(error);
                if error > 1e-10 {
                    return Err(format!("{} z={z}: {lhs} vs {rhs}", describe(&p)));
                }
            }
        }
    }
    Ok(format!("20 sets x 10^4 points, max error {worst:.1e}"))
}

fn containment_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut configurations = vec![figure_params()];
    configurations.extend((0..9).map(|_| random_params(&mut rng, 1.2, 4)));
    let mut in_tube = 0usize;
    for p in &configurations {
        let omega = omega_union(p);
        let strip = opendoor::boundary::certified_strip(p);
        let scale = strip.half_width().max(1.0);
        let mut accepted = 0usize;
        while accepted < 100_000 {
            let reach = if rng.random_bool(0.5) {
                2.0 * scale
            } else {
                50.0 * scale
            };
            let w = c(
                rng.random_range(-reach..reach),
                strip.center() + rng.random_range(-reach..reach),
            );
            if !omega.contains(w) {
                continue;
            }
            accepted += 1;
            if in_image(p, w) {
                continue;
            }
            let near = image_vertical_bounds(p, w.re)
                .is_some_and(|(lo, hi)| (w.im - lo).abs().min((w.im - hi).abs()) < 1e-9);
            if near {
                in_tube += 1;
            } else {
                return Err(format!(
                    "{}: {w} lies in Omega but not in the image",
                    describe(p)
                ));
            }
        }
    }
    Ok(format!(
        "10 configurations x 10^5 points of Omega, {in_tube} inside the 1e-9 tube"
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut configurations = vec![
        figure_params(),
        params(1.0, c(1.0, 0.0), 1),
        params(1.0, c(0.5, -2.0), 3),
    ];
    configurations.extend((0..2).map(|_| random_params(&mut rng, 1.2, 4)));
    let (mut checked, mut excluded) = (0, 0);
    for (k, p) in configurations.iter().enumerate() {
        let report = oracle_agreement(p, 10_000, 20.0, DEFAULT_WINDING_RESOLUTION, 80 + k as u64)
            .map_err(|e| format!("{}: {e}", describe(p)))?;
        if let Some(w) = report.disagreements.first() {
            return Err(format!(
                "{}: {} disagreements, first at {w}",
                describe(p),
                report.disagreements.len()
            ));
        }
        checked += report.checked;
        excluded += report.excluded;
    }
    Ok(format!(
        "{} configurations, {checked} agreements, {excluded} in the 1e-6 tube",
        configurations.len()
    ))
}

fn brute_force_extrema() -> Outcome {
    const GRID: usize = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let xs: Vec<f64> = (0..GRID)
        .map(|k| 10f64.powf(-2.0 + 4.0 * k as f64 / (GRID - 1) as f64))
        .collect();
    let mut worst = 0f64;
    for set in 0..100 {
        let p = if set == 0 {
            figure_params()
        } else {
            let alpha = rng.random_range(0.05..=1.0);
            OpenDoorParams::new(
                alpha,
                random_initial(&mut rng, 1.0),
                rng.random_range(1..=6),
            )
            .expect("valid")
        };
        let strip = v_extrema(&p).map_err(|e| e.to_string())?;
        let (mut min_upper, mut max_lower) = (f64::INFINITY, f64::NEG_INFINITY);
        for &x in &xs {
            min_upper = min_upper.min(upper_branch(&p, x).map_err(|e| e.to_string())?.v);
            max_lower = max_lower.max(lower_branch(&p, x).map_err(|e| e.to_string())?.v);
        }
        for (grid, closed) in [(min_upper, strip.upper), (max_lower, strip.lower)] {
            let error = (grid - closed).abs() / closed.abs().max(1.0);
            worst = worst.max(error);
            if error > 1e-8 {
                return Err(format!(
                    "{}: grid {grid} vs closed form {closed}",
                    describe(&p)
                ));
            }
        }
        if min_upper < strip.upper - 1e-12 * strip.upper.abs().max(1.0)
            || max_lower > strip.lower + 1e-12 * strip.lower.abs().max(1.0)
        {
            return Err(format!(
                "{}: grid extreme beyond the closed form",
                describe(&p)
            ));
        }
    }
    Ok(format!(
        "100 configurations x 10^5 points, max relative error {worst:.1e}"
    ))
}

fn figure_reproduction() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let output = Command::new(env!("CARGO_BIN_EXE_opendoor"))
        .args([
            "figure", "--alpha", "0.5", "--c", "4+3i", "--n", "2", "--out",
        ])
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    if !output.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    let read =
        |name: &str| fs::read_to_string(dir.path().join(name)).map_err(|e| format!("{name}: {e}"));
    let summary: Value = serde_json::from_str(&read("summary.json")?).map_err(|e| e.to_string())?;
    let boundary = read("boundary.csv")?;
    let regions = read("regions.csv")?;
    let svg = read("figure.svg")?;
    if !boundary.starts_with("branch,x,u,v\n") || boundary.lines().count() != 1 + 2 * 2000 {
        return Err("boundary.csv header or row count".into());
    }
    if !regions.starts_with("region,kind,param1,param2\n") || !svg.contains(r#"version="1.1""#) {
        return Err("regions.csv header or SVG version".into());
    }

    // Re-derived from c = 4+3i: r = 5, cos t = 4/5, tan t = 3/4.
    let (alpha, n, r, cos_t, tan_t) = (0.5f64, 2.0f64, 5.0f64, 0.8f64, 0.75f64);
    let a_coeff = 2.0 / n * r.powf(alpha) * (PI * alpha / 2.0).sin() * cos_t;
    let root = (1.0 + a_coeff).sqrt();
    let half_width = n / (2.0 * cos_t) * ((alpha - 1.0) / root + (alpha + 1.0) * root);
    let center = -n * alpha * tan_t;
    let number = |v: &Value| v.as_f64().ok_or_else(|| format!("not a number: {v}"));
    let lower = number(&summary["strip_certified"][0])?;
    let upper = number(&summary["strip_certified"][1])?;
    for (got, derived, printed) in [
        (lower, center - half_width, -3.15650),
        (upper, center + half_width, 1.65650),
    ] {
        if (got - derived).abs() > 1e-4 || (got - printed).abs() > 1e-4 {
            return Err(format!("certified strip bound {got}, re-derived {derived}"));
        }
    }
    let theta_plus = number(&summary["theta_plus"])?;
    let theta_minus = number(&summary["theta_minus"])?;
    if !(theta_minus > theta_plus && theta_plus > FRAC_PI_4) {
        return Err(format!("Theta- = {theta_minus}, Theta+ = {theta_plus}"));
    }
    Ok(format!(
        "strip ({lower:.5}, {upper:.5}), Theta+ = {theta_plus:.6}, Theta- = {theta_minus:.6}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("classical window", 1, classical_window),
        ("general alpha=1 window", 5, general_window),
        ("root certification", 2, root_certification),
        ("rotation identity", 2, rotation_identity),
        ("Mocanu consistency", 1, mocanu_consistency),
        ("extremal identity", 10, extremal_identity),
        ("containment sweep", 30, containment_sweep),
        ("oracle equivalence", 60, oracle_equivalence),
        ("brute-force extrema", 30, brute_force_extrema),
        ("figure reproduction", 2, figure_reproduction),
    ];
    let mut failures = 0;
    for (k, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over_budget) {
            (Ok(detail), false) => ("PASS", detail.clone()),
            (Ok(detail), true) => ("FAIL", format!("{detail}; over the {budget} s budget")),
            (Err(reason), _) => ("FAIL", reason.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} {:>2} {name} [{:.2} s] {detail}",
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
