use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use uas_core::ideal::{classify_gkdim, gen_degree_certified, pair_classes, IdealKind};
use uas_core::pi::{cross_check, identities_component, FiniteAlgebra, Mode};
use uas_core::rep::{character_of_subspace, decompose};
use uas_core::series::catalog;
use uas_core::truncation::{gamma, truncation_dim, truncation_kernel};

use crate::config::Config;
use crate::report::REPORT_SCHEMA;
use crate::spec::IdealSpec;
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "uas",
    version,
    about = "Ideals of the operad of unital associative algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct Global {
    /// TOML file with window, cap, seed, threads, samples_factor, arity7.
    #[arg(long, global = true, env = "UAS_CONFIG")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub window: Option<usize>,
    /// Largest dim(A)^n evaluated exhaustively.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Monte Carlo samples per n!.
    #[arg(long, global = true)]
    pub samples_factor: Option<usize>,
    #[arg(long, global = true)]
    pub arity7: bool,
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of truncation components.
    Truncation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Irreducible decomposition of one component of an ideal.
    Character {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Component dimensions of an ideal and the γ-vector of its quotient.
    IdealDim {
        #[arg(long)]
        ideal: String,
    },
    /// Generating degree, certified by the GK-dimension bound.
    GenDegree {
        #[arg(long)]
        ideal: String,
    },
    /// Ideals with quotient of the given GK-dimension.
    Classify {
        #[arg(long)]
        gkdim: usize,
        /// Completions of arity-4 modules to admissible pairs (GK-dimension 6).
        #[arg(long)]
        pairs: bool,
    },
    /// Catalogue of codimension series of a grade.
    CodimSeries {
        #[arg(long)]
        grade: usize,
        /// Write CSV to this file, or `-` for standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Largest arity in the dimension columns.
        #[arg(long, default_value_t = 10)]
        upto: usize,
    },
    /// Codimension of a finite-dimensional algebra.
    Pi {
        /// `builtin:field`, `builtin:grassmann:3`, `builtin:ut:2`, `builtin:mat:2`
        /// or a JSON file.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        /// Compare the identities with this ideal.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        exact: bool,
    },
    /// Recompute a reference table and compare.
    Verify {
        /// Suite id or `all`.
        suite: Option<String>,
        /// Print the JSON schema of the report.
        #[arg(long)]
        schema: bool,
        #[arg(long)]
        list: bool,
        /// Include wall times.
        #[arg(long)]
        timings: bool,
    },
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// False when a verification failed.
    pub pass: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            pass: true,
        }
    }
}

pub fn config(g: &Global) -> Result<Config, String> {
    let mut c = match &g.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(w) = g.window {
        c.window = w;
    }
    if let Some(v) = g.cap {
        c.cap = v;
    }
    if let Some(v) = g.seed {
        c.seed = v;
    }
    if let Some(v) = g.threads {
        c.threads = v;
    }
    if let Some(v) = g.samples_factor {
        c.samples_factor = v;
    }
    c.arity7 |= g.arity7;
    c.validate()?;
    Ok(c)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn parse_spec(text: &str) -> Result<IdealSpec, String> {
    text.parse().map_err(|e| format!("{text}: {e}"))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn execute(command: &Command, cfg: &Config) -> Result<Outcome, String> {
    let w = cfg.window;
    match command {
        Command::Truncation { n, k } => {
            if *n > w {
                return Err(err(uas_core::Error::WindowExceeded(*n, w)));
            }
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (1..=*n).collect(),
            };
            let mut text = format!("gamma({n}) = {}\n", gamma(*n));
            let mut rows = Vec::new();
            for k in ks {
                let dim = truncation_kernel(k, *n).map_err(err)?.dim();
                text += &format!("dim U{k}({n}) = {dim}\n");
                rows.push(json!({"k": k, "n": n, "dim": dim, "formula": truncation_dim(k, *n)}));
            }
            Ok(Outcome::ok(
                text,
                json!({"gamma": gamma(*n), "components": rows}),
            ))
        }
        Command::Character { ideal, n } => {
            let spec = parse_spec(ideal)?;
            let window = spec.window(w).map_err(err)?;
            let comp = window.component(*n).map_err(err)?;
            let d = decompose(&character_of_subspace(comp).map_err(err)?).map_err(err)?;
            Ok(Outcome::ok(
                format!("{spec} in arity {n}: {d} (dim {})\n", comp.dim()),
                json!({"ideal": spec.to_string(), "n": n, "dim": comp.dim(), "character": d}),
            ))
        }
        Command::IdealDim { ideal } => {
            let spec = parse_spec(ideal)?;
            let window = spec.window(w).map_err(err)?;
            let dims = window.dims();
            let gamma = window.quotient_gamma().map_err(err)?;
            Ok(Outcome::ok(
                format!(
                    "{spec}\ndims: {}\nquotient gamma: {}\n",
                    join(&dims),
                    join(&gamma)
                ),
                json!({"ideal": spec.to_string(), "dims": dims, "quotient_gamma": gamma}),
            ))
        }
        Command::GenDegree { ideal } => {
            let spec = parse_spec(ideal)?;
            let window = spec.window(w).map_err(err)?;
            let gd = gen_degree_certified(&window).map_err(err)?;
            Ok(Outcome::ok(
                format!("gd {spec} = {} ({})\n", gd.degree, gd.certificate),
                json!({"ideal": spec.to_string(), "gen_degree": gd}),
            ))
        }
        Command::Classify { gkdim, pairs } => classify(*gkdim, *pairs, w),
        Command::CodimSeries { grade, csv, upto } => codim_series(*grade, csv.as_ref(), *upto),
        Command::Pi {
            algebra,
            n,
            ideal,
            exact,
        } => pi(algebra, *n, ideal.as_deref(), *exact, cfg),
        Command::Verify {
            suite,
            schema,
            list,
            timings,
        } => run_verify(suite.as_deref(), *schema, *list, *timings, cfg),
    }
}

fn classify(gkdim: usize, pairs: bool, w: usize) -> Result<Outcome, String> {
    if pairs {
        if gkdim != 6 {
            return Err("--pairs applies to GK-dimension 6".into());
        }
        let classes = pair_classes().map_err(err)?;
        let mut text = String::from("bottom module | forced part | completions\n");
        let mut rows = Vec::new();
        for c in &classes {
            text += &format!(
                "{} | {} | {}\n",
                c.bottom.label(),
                c.forced.label(),
                c.count
            );
            let types: Vec<Value> = c
                .types
                .iter()
                .map(|t| json!({"top": t.top.to_string(), "family": t.family}))
                .collect();
            rows.push(json!({
                "bottom": c.bottom.label(),
                "forced": c.forced.label(),
                "count": c.count.to_string(),
                "types": types,
            }));
        }
        return Ok(Outcome::ok(text, json!({"gkdim": 6, "pairs": rows})));
    }
    let all = classify_gkdim(gkdim, w).map_err(err)?;
    let mut text = format!("{} ideals\n", all.len());
    let mut rows = Vec::new();
    for c in &all {
        let gd = c.gen_degree().map_err(err)?.degree;
        let kind = match c.kind {
            IdealKind::TypeOne => "I",
            IdealKind::TypeTwo => "II",
        };
        text += &format!(
            "{kind:2} {} | gamma {} | gd {gd}\n",
            c.label(),
            join(&c.gamma)
        );
        rows.push(json!({"kind": c.kind, "label": c.label(), "gamma": c.gamma, "gen_degree": gd}));
    }
    Ok(Outcome::ok(text, json!({"gkdim": gkdim, "ideals": rows})))
}

fn codim_series(grade: usize, csv_path: Option<&PathBuf>, upto: usize) -> Result<Outcome, String> {
    let all = catalog(grade).map_err(err)?;
    let mut text = format!("{} series of grade {grade}\n", all.len());
    let mut rows = Vec::new();
    for s in &all {
        let lambda = s.leading_lambda().map_err(err)?;
        text += &format!(
            "{} | lambda {} | {}\n",
            join(s.gamma()),
            lambda,
            s.closed_form()
        );
        rows.push(json!({
            "gamma": s.gamma(),
            "lambda": lambda.to_string(),
            "closed_form": s.closed_form(),
            "dims": (0..=upto).map(|n| s.dims_at(n).to_string()).collect::<Vec<_>>(),
        }));
    }
    if let Some(path) = csv_path {
        let mut out = Vec::new();
        {
            let mut wtr = csv::Writer::from_writer(&mut out);
            let mut header = vec!["gamma".to_string(), "lambda".into(), "closed_form".into()];
            header.extend((0..=upto).map(|n| format!("c{n}")));
            wtr.write_record(&header).map_err(err)?;
            for s in &all {
                let mut rec = vec![
                    join(s.gamma()),
                    s.leading_lambda().map_err(err)?.to_string(),
                    s.closed_form(),
                ];
                rec.extend((0..=upto).map(|n| s.dims_at(n).to_string()));
                wtr.write_record(&rec).map_err(err)?;
            }
            wtr.flush().map_err(err)?;
        }
        let csv = String::from_utf8(out).map_err(err)?;
        if path.as_os_str() == "-" {
            return Ok(Outcome::ok(csv, json!({"grade": grade, "series": rows})));
        }
        std::fs::write(path, csv).map_err(|e| format!("{}: {e}", path.display()))?;
        text += &format!("wrote {}\n", path.display());
    }
    Ok(Outcome::ok(text, json!({"grade": grade, "series": rows})))
}

fn algebra(source: &str) -> Result<FiniteAlgebra, String> {
    if source.starts_with("builtin:") {
        return FiniteAlgebra::from_uri(source).map_err(err);
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
    FiniteAlgebra::from_json(&text).map_err(|e| format!("{source}: {e}"))
}

fn pi(
    source: &str,
    n: usize,
    ideal: Option<&str>,
    exact: bool,
    cfg: &Config,
) -> Result<Outcome, String> {
    let alg = algebra(source)?;
    let mode = if exact {
        Mode::Deterministic { cap: cfg.cap }
    } else {
        Mode::auto(&alg, n, cfg.cap, cfg.seed, cfg.samples_factor)
    };
    match ideal {
        None => {
            let c = identities_component(&alg, n, mode).map_err(err)?;
            Ok(Outcome::ok(
                format!("c_{n}({}) = {} [{}]\n", alg.name, c.codim(), c.status),
                json!({"algebra": alg.name, "n": n, "codim": c.codim(), "status": c.status.to_string()}),
            ))
        }
        Some(text) => {
            let spec = parse_spec(text)?;
            let window = spec.window(n.max(1)).map_err(err)?;
            let x = cross_check(&alg, &window, n, mode).map_err(err)?;
            let verdict = if x.equal { "equal" } else { "different" };
            Ok(Outcome::ok(
                format!(
                    "identities of {} in arity {n}: dim {} | {spec}: dim {} | {verdict} [{}]\n",
                    alg.name, x.identities_dim, x.ideal_dim, x.status
                ),
                serde_json::to_value(&x).map_err(err)?,
            ))
        }
    }
}

fn run_verify(
    suite: Option<&str>,
    schema: bool,
    list: bool,
    timings: bool,
    cfg: &Config,
) -> Result<Outcome, String> {
    if schema {
        let v: Value = serde_json::from_str(REPORT_SCHEMA).map_err(err)?;
        return Ok(Outcome::ok(REPORT_SCHEMA.to_string(), v));
    }
    if list || suite.is_none() {
        let mut text = String::new();
        for s in verify::SUITES {
            text += &format!("{:15} {}\n", s.id, s.title);
        }
        return Ok(Outcome::ok(text, json!(verify::ids())));
    }
    let id = suite.unwrap_or_default();
    let suites: Vec<&verify::Suite> = if id == "all" {
        verify::SUITES.iter().collect()
    } else {
        vec![verify::find(id).ok_or_else(|| {
            format!(
                "unknown suite {id}; known: all, {}",
                verify::ids().join(", ")
            )
        })?]
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    for s in suites {
        let mut r = s.run(cfg);
        text += &r.render();
        if timings {
            text += &format!("time {:.1}s\n", r.seconds.unwrap_or_default());
        } else {
            r.seconds = None;
        }
        reports.push(r);
    }
    let pass = reports.iter().all(|r| r.pass);
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(&reports)
    }
    .map_err(err)?;
    Ok(Outcome { text, json, pass })
}

/// Runs a parsed command line and writes its output; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, errors: &mut dyn Write) -> i32 {
    let result = config(&cli.global).and_then(|cfg| {
        cfg.install_threads();
        execute(&cli.command, &cfg)
    });
    match result {
        Ok(o) => {
            let written = if cli.global.json {
                serde_json::to_string_pretty(&o.json)
                    .map_err(err)
                    .and_then(|s| writeln!(out, "{s}").map_err(err))
            } else {
                write!(out, "{}", o.text).map_err(err)
            };
            match written {
                Err(e) => {
                    let _ = writeln!(errors, "error: {e}");
                    1
                }
                Ok(()) if o.pass => 0,
                Ok(()) => 2,
            }
        }
        Err(e) => {
            let _ = writeln!(errors, "error: {e}");
            1
        }
    }
}
