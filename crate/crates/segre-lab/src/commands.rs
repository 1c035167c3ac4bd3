//! Subcommand dispatch and process-level error mapping.
//!
//! Exit codes are part of the interface: 0 success, 1 failed verification
//! properties, 2 usage errors, 3 degenerate domain inputs or empty grids,
//! 4 I/O failures. Argument-shape problems land on 2; inputs a library
//! rejects land on 3. Scan reports are written atomically through a sibling
//! temporary file so an interrupted run never leaves a half-written report.

use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;
use curve_segre::{
    segre_curve_closed, segre_curve_series, segre_quot_signed, CurveBundle, CurveError,
};
use exact_series::SeriesError;
use positivity_lab::{
    check_blowup, family_lazarsfeld_mukai, family_semihomogeneous, family_ulrich, scan_enriques,
    scan_lemma, Conclusion, CriterionVerdict, Flag, LabError,
};
use surface_segre::{
    segre_blowup_k3, segre_closed, segre_general_type, segre_rank1_general, segre_series,
    GeometryKind, SurfaceBundle, SurfaceError,
};

use crate::cli::{Cli, Command, ExampleFamily, ScanArgs, SegreArgs, SeriesArgs, VerifyArgs};
use crate::output::{render_series, Format};
use crate::ranges::{parse_exact, parse_range};
use crate::verify;

/// Parses the command line, runs it, and maps the outcome to an exit code.
pub fn run_cli() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => error.exit(),
    }
}

enum CliError {
    Usage(String),
    Degenerate(String),
    Io(String),
    Properties(usize),
}

impl CliError {
    fn exit(self) -> ExitCode {
        let (code, message) = match self {
            CliError::Usage(m) => (2, m),
            CliError::Degenerate(m) => (3, m),
            CliError::Io(m) => (4, m),
            CliError::Properties(n) => {
                let noun = if n == 1 { "property" } else { "properties" };
                (1, format!("{n} verification {noun} failed"))
            }
        };
        eprintln!("error: {message}");
        ExitCode::from(code)
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Segre(args) => cmd_segre(args),
        Command::Series(args) => cmd_series(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Examples { family } => cmd_examples(family),
    }
}

/// Every flag in `allowed` must be present and every other flag absent.
fn require_exactly(
    kind: &str,
    given: &[(&str, bool)],
    allowed: &[&str],
) -> Result<(), CliError> {
    for (name, present) in given {
        let wanted = allowed.contains(name);
        if *present && !wanted {
            return Err(CliError::Usage(format!(
                "--{name} does not apply to kind {kind}"
            )));
        }
        if !*present && wanted {
            return Err(CliError::Usage(format!("kind {kind} requires --{name}")));
        }
    }
    Ok(())
}

fn cmd_segre(args: SegreArgs) -> Result<(), CliError> {
    let given = [
        ("r", args.r.is_some()),
        ("chi", args.chi.is_some()),
        ("delta", args.delta.is_some()),
        ("g", args.g.is_some()),
        ("d", args.d.is_some()),
        ("n", args.n.is_some()),
        ("h", args.h.is_some()),
        ("ell", args.ell.is_some()),
        ("l-sq", args.l_sq.is_some()),
        ("chi-o", args.chi_o.is_some()),
        ("l-dot-k", args.l_dot_k.is_some()),
        ("k-sq", args.k_sq.is_some()),
        ("m", args.m.is_some()),
        ("p", args.p.is_some()),
    ];
    let value = match args.kind.as_str() {
        kind @ ("k3" | "abelian" | "bielliptic" | "enriques") => {
            require_exactly(kind, &given, &["r", "chi", "delta"])?;
            let delta = parse_exact(args.delta.as_deref().unwrap()).map_err(CliError::Usage)?;
            let geometry = match kind {
                "k3" => GeometryKind::K3,
                "abelian" => GeometryKind::Abelian,
                "bielliptic" => GeometryKind::Bielliptic,
                _ => GeometryKind::Enriques,
            };
            segre_closed(geometry, args.r.unwrap(), args.chi.unwrap(), &delta, args.k)?
        }
        "curve" => {
            require_exactly("curve", &given, &["g", "r", "d"])?;
            let b = CurveBundle::new(args.g.unwrap(), args.r.unwrap(), args.d.unwrap())?;
            segre_curve_closed(&b, args.k)?
        }
        "quot" => {
            require_exactly("quot", &given, &["g", "n", "d"])?;
            let n = u32::try_from(args.n.unwrap())
                .map_err(|_| CliError::Usage("--n must be a nonnegative rank".into()))?;
            segre_quot_signed(args.g.unwrap(), n, args.d.unwrap(), args.k)?
        }
        "blowup" => {
            require_exactly("blowup", &given, &["h", "ell"])?;
            segre_blowup_k3(args.h.unwrap(), args.ell.unwrap(), args.k)?
        }
        "rank1" => {
            require_exactly("rank1", &given, &["l-sq", "chi-o", "l-dot-k", "k-sq"])?;
            segre_rank1_general(
                args.l_sq.unwrap(),
                args.chi_o.unwrap(),
                args.l_dot_k.unwrap(),
                args.k_sq.unwrap(),
                args.k,
            )?
        }
        "general-type" => {
            require_exactly("general-type", &given, &["m", "n", "p"])?;
            segre_general_type(args.m.unwrap(), args.n.unwrap(), args.p.unwrap(), args.k)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown kind {other:?}; use k3, abelian, bielliptic, enriques, curve, quot, \
                 blowup, rank1, or general-type"
            )))
        }
    };
    println!("{value}");
    println!("sign {}", value.sign);
    Ok(())
}

fn cmd_series(args: SeriesArgs) -> Result<(), CliError> {
    let format = Format::parse(&args.format).map_err(CliError::Usage)?;
    let given = [
        ("r", args.r.is_some()),
        ("c1-sq", args.c1_sq.is_some()),
        ("c2", args.c2.is_some()),
        ("g", args.g.is_some()),
        ("d", args.d.is_some()),
    ];
    let series = match args.kind.as_str() {
        kind @ ("k3" | "enriques") => {
            require_exactly(kind, &given, &["r", "c1-sq", "c2"])?;
            let geometry = if kind == "k3" {
                GeometryKind::K3
            } else {
                GeometryKind::Enriques
            };
            let b = SurfaceBundle::for_kind(
                geometry,
                args.r.unwrap(),
                args.c1_sq.unwrap(),
                0,
                args.c2.unwrap(),
            )?;
            segre_series(geometry, &b, args.k_max)?
        }
        "curve" => {
            require_exactly("curve", &given, &["g", "r", "d"])?;
            let b = CurveBundle::new(args.g.unwrap(), args.r.unwrap(), args.d.unwrap())?;
            segre_curve_series(&b, args.k_max)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown series kind {other:?}; use k3, enriques, or curve"
            )))
        }
    };
    print!("{}", render_series(&series, format));
    Ok(())
}

#[derive(Default)]
struct ScanConfig {
    lemma41: bool,
    kind: Option<String>,
    r: Option<String>,
    k: Option<String>,
    chi_margin: Option<String>,
    delta: Option<String>,
    m: Option<String>,
    n: Option<String>,
    p: Option<String>,
    format: Option<String>,
    out: Option<PathBuf>,
    workers: Option<usize>,
}

fn bad_config_entry(path: &Path, key: &str, wanted: &str) -> CliError {
    CliError::Usage(format!(
        "config {}: key {key:?} must be {wanted}",
        path.display()
    ))
}

fn load_scan_config(path: &Path) -> Result<ScanConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("config {} is not valid JSON: {e}", path.display())))?;
    let object = value
        .as_object()
        .ok_or_else(|| CliError::Usage(format!("config {} must be a JSON object", path.display())))?;
    let mut config = ScanConfig::default();
    for (key, entry) in object {
        match key.as_str() {
            "lemma41" => {
                config.lemma41 = entry
                    .as_bool()
                    .ok_or_else(|| bad_config_entry(path, key, "a boolean"))?;
            }
            "workers" => {
                let n = entry
                    .as_u64()
                    .ok_or_else(|| bad_config_entry(path, key, "a nonnegative integer"))?;
                config.workers = Some(n as usize);
            }
            "out" => {
                let text = entry
                    .as_str()
                    .ok_or_else(|| bad_config_entry(path, key, "a path string"))?;
                config.out = Some(PathBuf::from(text));
            }
            "kind" | "r" | "k" | "chi_margin" | "delta" | "m" | "n" | "p" | "format" => {
                let text = entry
                    .as_str()
                    .ok_or_else(|| bad_config_entry(path, key, "a string"))?
                    .to_string();
                let slot = match key.as_str() {
                    "kind" => &mut config.kind,
                    "r" => &mut config.r,
                    "k" => &mut config.k,
                    "chi_margin" => &mut config.chi_margin,
                    "delta" => &mut config.delta,
                    "m" => &mut config.m,
                    "n" => &mut config.n,
                    "p" => &mut config.p,
                    _ => &mut config.format,
                };
                *slot = Some(text);
            }
            other => {
                return Err(CliError::Usage(format!(
                    "config {} has unknown key {other:?}",
                    path.display()
                )))
            }
        }
    }
    Ok(config)
}

fn range_arg<T>(
    flag: &str,
    explicit: Option<String>,
    configured: Option<String>,
    default: &str,
) -> Result<RangeInclusive<T>, CliError>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    let text = explicit
        .or(configured)
        .unwrap_or_else(|| default.to_string());
    parse_range(&text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn with_pool<T: Send>(
    workers: Option<usize>,
    job: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    match workers {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Io(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

fn report_body(format: Format, csv: String, json: serde_json::Value) -> Result<String, CliError> {
    if format == Format::Csv {
        return Ok(csv);
    }
    let mut text =
        serde_json::to_string_pretty(&json).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_error = |e: &dyn std::fmt::Display| CliError::Io(format!("cannot write {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut file = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_error(&e))?;
    file.write_all(contents.as_bytes()).map_err(|e| io_error(&e))?;
    file.persist(path).map_err(|e| io_error(&e))?;
    Ok(())
}

fn cmd_scan(args: ScanArgs) -> Result<(), CliError> {
    let config = match &args.config {
        Some(path) => load_scan_config(path)?,
        None => ScanConfig::default(),
    };
    let lemma = args.lemma41 || config.lemma41;
    if lemma {
        let surface_flags = [
            ("kind", args.kind.is_some()),
            ("r", args.r.is_some()),
            ("k", args.k.is_some()),
            ("chi-margin", args.chi_margin.is_some()),
            ("delta", args.delta.is_some()),
        ];
        for (name, present) in surface_flags {
            if present {
                return Err(CliError::Usage(format!(
                    "--{name} does not apply to the exponent-window scan"
                )));
            }
        }
    } else {
        let window_flags = [
            ("m", args.m.is_some()),
            ("n", args.n.is_some()),
            ("p", args.p.is_some()),
        ];
        for (name, present) in window_flags {
            if present {
                return Err(CliError::Usage(format!(
                    "--{name} applies only to the exponent-window scan"
                )));
            }
        }
    }
    let format_name = args
        .format
        .or(config.format)
        .unwrap_or_else(|| "csv".to_string());
    let format = Format::parse(&format_name).map_err(CliError::Usage)?;
    if format == Format::Plain {
        return Err(CliError::Usage("scan reports are csv or json".into()));
    }
    let workers = args.workers.or(config.workers);
    if workers == Some(0) {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    let default_name = if format == Format::Csv {
        "segre-scan.csv"
    } else {
        "segre-scan.json"
    };
    let out = args
        .out
        .or(config.out)
        .unwrap_or_else(|| PathBuf::from(default_name));
    let (summary, body) = if lemma {
        let ms = range_arg::<i64>("m", args.m, config.m, "0..12")?;
        let ns = range_arg::<i64>("n", args.n, config.n, "-12..12")?;
        let ps = range_arg::<i64>("p", args.p, config.p, "0..12")?;
        let scan = with_pool(workers, move || scan_lemma(ms, ns, ps))??;
        if scan.rows.is_empty() {
            return Err(CliError::Degenerate("the requested grid is empty".into()));
        }
        let body = report_body(format, scan.to_csv(), scan.to_json())?;
        (scan.summary_line(), body)
    } else {
        let kind = args
            .kind
            .or(config.kind)
            .unwrap_or_else(|| "enriques".to_string());
        if kind != "enriques" {
            return Err(CliError::Usage(format!(
                "unknown scan kind {kind:?}; the surface grid is enriques"
            )));
        }
        let ranks = range_arg::<u32>("r", args.r, config.r, "1..8")?;
        let points = range_arg::<usize>("k", args.k, config.k, "1..10")?;
        let margins = range_arg::<i64>("chi-margin", args.chi_margin, config.chi_margin, "0..8")?;
        let deltas = range_arg::<i64>("delta", args.delta, config.delta, "0..6")?;
        let scan = with_pool(workers, move || {
            scan_enriques(ranks, points, margins, deltas)
        })??;
        if scan.rows.is_empty() {
            return Err(CliError::Degenerate("the requested grid is empty".into()));
        }
        let body = report_body(format, scan.to_csv(), scan.to_json())?;
        (scan.summary_line(), body)
    };
    write_atomic(&out, &body)?;
    println!("{summary}");
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let selected: Vec<&verify::Property> = match &args.only {
        Some(name) => {
            let property = verify::find_property(name).ok_or_else(|| {
                let names: Vec<&str> = verify::all_properties().iter().map(|p| p.name).collect();
                CliError::Usage(format!(
                    "unknown property {name:?}; available: {}",
                    names.join(", ")
                ))
            })?;
            vec![property]
        }
        None => verify::all_properties().iter().collect(),
    };
    let mut failures = 0usize;
    for property in selected {
        match (property.run)(args.seed) {
            Ok(()) => println!("PASS {}", property.name),
            Err(reason) => {
                println!("FAIL {}: {reason}", property.name);
                failures += 1;
            }
        }
    }
    if failures > 0 {
        return Err(CliError::Properties(failures));
    }
    Ok(())
}

fn report_family(flags: &[Flag], verdict: &CriterionVerdict, hypotheses_hold: bool) {
    for flag in flags {
        println!("flag {} {}", flag.name, flag.holds);
    }
    for flag in &verdict.flags {
        println!("criterion {} {}", flag.name, flag.holds);
    }
    println!("value {}", verdict.segre);
    println!("sign {}", verdict.segre.sign);
    let conclusion = if hypotheses_hold && verdict.all_flags_hold() {
        Conclusion::BigNefPredicted
    } else {
        Conclusion::NotCovered
    };
    println!("conclusion {conclusion}");
}

fn cmd_examples(family: ExampleFamily) -> Result<(), CliError> {
    match family {
        ExampleFamily::LazarsfeldMukai { g, d, r, k } => {
            let fam = family_lazarsfeld_mukai(g, d, r, k)?;
            println!("family lazarsfeld-mukai");
            println!("g {g}");
            println!("d {d}");
            println!("r {r}");
            println!("k {k}");
            println!("chi_untwisted {}", fam.chi_untwisted);
            println!("chi_twisted {}", fam.chi_twisted);
            println!("brill_noether {}", fam.brill_noether);
            report_family(&fam.flags, &fam.verdict, fam.hypotheses_hold());
        }
        ExampleFamily::Ulrich { a, h, m, k } => {
            let fam = family_ulrich(a, h, m, k)?;
            println!("family ulrich");
            println!("a {a}");
            println!("h {h}");
            println!("m {m}");
            println!("k {k}");
            println!("chi_untwisted {}", fam.chi_untwisted);
            println!("chi_twisted {}", fam.chi_twisted);
            println!("delta_twisted {}", fam.delta_twisted);
            report_family(&fam.flags, &fam.verdict, fam.hypotheses_hold());
        }
        ExampleFamily::Semihomogeneous { a, b, k } => {
            let fam = family_semihomogeneous(a, b, k)?;
            println!("family semihomogeneous");
            println!("a {a}");
            println!("b {b}");
            println!("k {k}");
            println!("rank {}", fam.bundle.rank);
            println!("chi {}", fam.chi);
            report_family(&fam.flags, &fam.verdict, fam.hypotheses_hold());
        }
        ExampleFamily::BlowupLineBundle { h, ell, k } => {
            let verdict = check_blowup(h, ell, k)?;
            println!("family blowup-line-bundle");
            println!("h {h}");
            println!("ell {ell}");
            println!("k {k}");
            for flag in &verdict.flags {
                println!("criterion {} {}", flag.name, flag.holds);
            }
            println!("value {}", verdict.segre);
            println!("sign {}", verdict.segre.sign);
            println!("conclusion {}", verdict.conclusion);
        }
    }
    Ok(())
}
