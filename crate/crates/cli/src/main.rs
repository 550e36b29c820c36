mod figure;
mod format;

use std::{
    fs,
    path::{Path, PathBuf},
    process::ExitCode,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use opendoor::{
    boundary::{certified_strip, sector_angles},
    opendoor::{degree_for_radius, eval_r, TruncatedSeries},
    regions::{image_vertical_bounds, in_image, omega_union, window_region, Region},
    roots::{solve_xi, DEFAULT_TOL},
    verify::{
        check_close_to_convex, check_starlike_q, check_subordination, oracle_agreement,
        univalence_spot_check, AgreementReport, GridSpec, Hypothesis, UnivalenceReport,
        VerificationReport, DEFAULT_WINDING_RESOLUTION,
    },
    Error, InitialPoint, OpenDoorParams,
};
use serde::Serialize;

use crate::{
    figure::{
        boundary_csv, boundary_points, regions_csv, svg, FigureSummary, DEFAULT_SAMPLES,
        DEFAULT_X_RANGE,
    },
    format::{fmt_f64, parse_complex, to_json},
};

/// Largest `|z|` accepted by `eval`.
const MAX_EVAL_RADIUS: f64 = 0.999;
const WINDING_SAMPLES: usize = 10_000;
const WINDING_HALF_SIDE: f64 = 20.0;
const UNIVALENCE_PAIRS: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "opendoor",
    version,
    about = "Generalized open-door functions: evaluation, regions, figures and checks"
)]
struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Exponent alpha in (0, 1]
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    alpha: f64,
    /// Initial point c (Re c > 0), written a+bi
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    c: Complex64,
    /// Order n >= 1
    #[arg(long, default_value_t = 1)]
    n: u32,
}

impl ParamArgs {
    fn build(&self) -> Result<OpenDoorParams, Error> {
        OpenDoorParams::new(self.alpha, InitialPoint::new(self.c)?, self.n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate R(z)
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        /// Point of the unit disk, |z| <= 0.999
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Solve x^2 + A x^(1+alpha) - 1 = 0 for its positive root
    Root {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Residual tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Test membership of w in one of the regions
    Region {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        w: Complex64,
        #[arg(long, value_enum, default_value_t = Which::Image)]
        which: Which,
    },
    /// Write boundary and region files (CSV, SVG, JSON summary)
    Figure {
        #[command(flatten)]
        params: ParamArgs,
        /// Smallest branch parameter x
        #[arg(long, default_value_t = DEFAULT_X_RANGE.0)]
        x_min: f64,
        /// Largest branch parameter x
        #[arg(long, default_value_t = DEFAULT_X_RANGE.1)]
        x_max: f64,
        /// Samples per branch
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Output directory, created if missing
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Files to write
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Output::Csv, Output::Svg, Output::Json])]
        outputs: Vec<Output>,
    },
    /// Run numeric checks; exits 1 if any fails
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed of the random sweeps
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Which {
    Image,
    Omega,
    Strip,
    Sector,
    Window,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Csv,
    Svg,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Starlike,
    Subordination,
    Winding,
    Univalence,
    All,
}

enum Failure {
    Library(Error),
    OutOfDomain(String),
    Io(PathBuf, std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Library(
                Error::OutsideDisk(_)
                | Error::LogDerivativePole { .. }
                | Error::Indeterminate { .. },
            )
            | Failure::OutOfDomain(_) => 3,
            Failure::Library(Error::NoConvergence { .. } | Error::Inconsistent { .. }) => 1,
            Failure::Library(_) => 2,
            Failure::Io(..) => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Library(e) => eprintln!("error: {e}"),
                Failure::OutOfDomain(message) => eprintln!("error: {message}"),
                Failure::Io(path, e) => eprintln!("error: {}: {e}", path.display()),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Eval { params, z } => eval(&params.build()?, z, json),
        Command::Root { a, alpha, tol } => root(a, alpha, tol, json),
        Command::Region { params, w, which } => region(&params.build()?, w, which, json),
        Command::Figure {
            params,
            x_min,
            x_max,
            samples,
            out,
            outputs,
        } => figure(
            &params.build()?,
            (x_min, x_max),
            samples,
            &out,
            &outputs,
            json,
        ),
        Command::Verify {
            params,
            suite,
            seed,
        } => verify(&params.build()?, suite, seed, json),
    }
}

fn eval(params: &OpenDoorParams, z: Complex64, json: bool) -> Result<(), Failure> {
    if z.norm() > MAX_EVAL_RADIUS {
        return Err(Failure::OutOfDomain(format!(
            "z = {} lies outside |z| <= {MAX_EVAL_RADIUS}",
            complex_text(z)
        )));
    }
    let w = eval_r(params, z)?;
    if json {
        println!(
            "{}",
            to_json(&serde_json::json!({ "re": w.re, "im": w.im }))
        );
    } else {
        println!("{} {}", fmt_f64(w.re), fmt_f64(w.im));
    }
    Ok(())
}

fn root(a: f64, alpha: f64, tol: f64, json: bool) -> Result<(), Failure> {
    let result = solve_xi(a, alpha, tol)?;
    if json {
        println!("{}", to_json(&result));
    } else {
        println!("xi {}", fmt_f64(result.xi));
        println!("bracket_lo {}", fmt_f64(result.bracket_lo));
        println!("bracket_hi {}", fmt_f64(result.bracket_hi));
        println!("residual {}", fmt_f64(result.residual));
        println!("iterations {}", result.iterations);
    }
    Ok(())
}

#[derive(Serialize)]
struct RegionAnswer {
    which: Which,
    w: [f64; 2],
    inside: bool,
    /// Vertical interval (strip, window, image above Re w) or angular
    /// interval (sector) used for the decision.
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<[f64; 2]>,
    /// Distance from `w` to the boundary of the region.
    #[serde(skip_serializing_if = "Option::is_none")]
    margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<OmegaComponents>,
}

#[derive(Serialize)]
struct OmegaComponents {
    half_plane: bool,
    strip: bool,
    sector: bool,
}

fn region(params: &OpenDoorParams, w: Complex64, which: Which, json: bool) -> Result<(), Failure> {
    let mut answer = RegionAnswer {
        which,
        w: [w.re, w.im],
        inside: false,
        bounds: None,
        margin: None,
        components: None,
    };
    let decided_by = |region: Region, answer: &mut RegionAnswer| {
        answer.inside = region.contains(w);
        answer.margin = region.boundary_distance(w);
    };
    match which {
        Which::Image => {
            answer.inside = in_image(params, w);
            answer.bounds = if params.alpha() < 1.0 {
                image_vertical_bounds(params, w.re).map(|(lo, hi)| [lo, hi])
            } else {
                match window_region(params.initial(), params.n()) {
                    Region::Window { lower, upper } => Some([lower, upper]),
                    _ => None,
                }
            };
        }
        Which::Omega => {
            answer.inside = omega_union(params).contains(w);
            answer.components = Some(OmegaComponents {
                half_plane: Region::HalfPlaneLeft.contains(w),
                strip: Region::Strip(certified_strip(params)).contains(w),
                sector: Region::sector(params.half_angle())?.contains(w),
            });
        }
        Which::Strip => {
            let strip = certified_strip(params);
            answer.bounds = Some([strip.lower, strip.upper]);
            decided_by(Region::Strip(strip), &mut answer);
        }
        Which::Sector => {
            let angles = sector_angles(params)?;
            answer.bounds = Some([-angles.theta_minus, angles.theta_plus]);
            decided_by(
                Region::angular_sector(angles.theta_minus, angles.theta_plus)?,
                &mut answer,
            );
        }
        Which::Window => {
            if params.alpha() != 1.0 {
                return Err(Error::Domain {
                    what: "window",
                    detail: format!(
                        "the image is a window only for alpha = 1, got {}",
                        params.alpha()
                    ),
                }
                .into());
            }
            let window = window_region(params.initial(), params.n());
            if let Region::Window { lower, upper } = window {
                answer.bounds = Some([lower, upper]);
            }
            decided_by(window, &mut answer);
        }
    }
    if json {
        println!("{}", to_json(&answer));
    } else {
        println!("{}", answer.inside);
        if let Some([lo, hi]) = answer.bounds {
            println!("bounds {} {}", fmt_f64(lo), fmt_f64(hi));
        }
        if let Some(margin) = answer.margin {
            println!("margin {}", fmt_f64(margin));
        }
        if let Some(parts) = &answer.components {
            println!(
                "half_plane {} strip {} sector {}",
                parts.half_plane, parts.strip, parts.sector
            );
        }
    }
    Ok(())
}

fn figure(
    params: &OpenDoorParams,
    x_range: (f64, f64),
    samples: usize,
    out: &Path,
    outputs: &[Output],
    json: bool,
) -> Result<(), Failure> {
    let points = boundary_points(params, x_range, samples)?;
    let summary = FigureSummary::new(params, x_range, samples)?;
    fs::create_dir_all(out).map_err(|e| Failure::Io(out.to_path_buf(), e))?;

    let mut files: Vec<(&str, String)> = Vec::new();
    if outputs.contains(&Output::Csv) {
        files.push(("boundary.csv", boundary_csv(&points)));
        files.push(("regions.csv", regions_csv(&summary)));
    }
    if outputs.contains(&Output::Svg) {
        files.push(("figure.svg", svg(&summary, &points)));
    }
    let summary_json = to_json(&summary);
    if outputs.contains(&Output::Json) {
        files.push(("summary.json", format!("{summary_json}\n")));
    }
    for (name, contents) in &files {
        let path = out.join(name);
        fs::write(&path, contents).map_err(|e| Failure::Io(path.clone(), e))?;
    }

    if json {
        println!("{summary_json}");
    } else {
        for (name, _) in &files {
            println!("{}", out.join(name).display());
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SeriesCheck {
    series: &'static str,
    hypothesis: Hypothesis,
    passed: bool,
    report: VerificationReport,
}

#[derive(Serialize, Default)]
struct VerifyOutput {
    alpha: f64,
    c: [f64; 2],
    n: u32,
    seed: u64,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    starlike: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    close_to_convex: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    subordination: Vec<SeriesCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    winding: Option<AgreementReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    univalence: Option<UnivalenceReport>,
}

fn verify(params: &OpenDoorParams, suite: Suite, seed: u64, json: bool) -> Result<(), Failure> {
    let selected = |s: Suite| suite == s || suite == Suite::All;
    let grid = GridSpec::default();
    let c = params.initial().c();
    let mut output = VerifyOutput {
        alpha: params.alpha(),
        c: [c.re, c.im],
        n: params.n(),
        seed,
        ..VerifyOutput::default()
    };
    let mut lines = Vec::new();

    if selected(Suite::Starlike) {
        let starlike = check_starlike_q(params.initial(), &grid);
        let convex = check_close_to_convex(params, &grid)?;
        lines.push(positivity_line("starlike", &starlike));
        lines.push(positivity_line("close_to_convex", &convex));
        output.starlike = Some(starlike);
        output.close_to_convex = Some(convex);
    }
    if selected(Suite::Subordination) {
        let degree = degree_for_radius(grid.max_radius());
        let mut families = vec![
            ("constant", TruncatedSeries::constant(params.c_pow_alpha())),
            ("extremal", TruncatedSeries::extremal(params, degree)?),
        ];
        if params.n() == 1 {
            families.push((
                "dominant",
                TruncatedSeries::dominant(params.initial(), params.alpha(), degree)?,
            ));
        }
        for (series, q) in families {
            for hypothesis in [Hypothesis::ExactImage, Hypothesis::Omega] {
                let report = check_subordination(params, &q, &grid, hypothesis)?;
                let passed = report.implication_holds();
                lines.push((
                    passed,
                    format!(
                        "subordination {series}/{}: {} hypothesis failures, {} conclusion failures, min margin {}",
                        hypothesis_name(hypothesis),
                        report.hypothesis_failures.len(),
                        report.conclusion_failures.len(),
                        fmt_f64(report.min_margin)
                    ),
                ));
                output.subordination.push(SeriesCheck {
                    series,
                    hypothesis,
                    passed,
                    report,
                });
            }
        }
    }
    if selected(Suite::Winding) {
        let report = oracle_agreement(
            params,
            WINDING_SAMPLES,
            WINDING_HALF_SIDE,
            DEFAULT_WINDING_RESOLUTION,
            seed,
        )?;
        lines.push((
            report.disagreements.is_empty(),
            format!(
                "winding: {} checked, {} excluded, {} disagreements",
                report.checked,
                report.excluded,
                report.disagreements.len()
            ),
        ));
        output.winding = Some(report);
    }
    if selected(Suite::Univalence) {
        let report = univalence_spot_check(params, UNIVALENCE_PAIRS, seed)?;
        lines.push((
            report.injective,
            format!(
                "univalence: {} pairs, min separation {}",
                report.pairs,
                fmt_f64(report.min_separation)
            ),
        ));
        output.univalence = Some(report);
    }

    output.passed = lines.iter().all(|(passed, _)| *passed);
    if json {
        println!("{}", to_json(&output));
    } else {
        println!("seed {seed}");
        for (passed, line) in &lines {
            println!("{} {line}", if *passed { "PASS" } else { "FAIL" });
        }
    }
    if output.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn positivity_line(name: &str, report: &VerificationReport) -> (bool, String) {
    (
        report.all_positive(),
        format!(
            "{name}: {} points, min real part {}",
            report.checked,
            fmt_f64(report.min_margin)
        ),
    )
}

fn hypothesis_name(hypothesis: Hypothesis) -> &'static str {
    match hypothesis {
        Hypothesis::ExactImage => "exact_image",
        Hypothesis::Omega => "omega",
    }
}

fn complex_text(z: Complex64) -> String {
    format!(
        "{}{}{}i",
        fmt_f64(z.re),
        if z.im < 0.0 { "-" } else { "+" },
        fmt_f64(z.im.abs())
    )
}
