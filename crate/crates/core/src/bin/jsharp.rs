use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jsharp::cache::SetCache;
use jsharp::classify::{decompositions, ring_class_report, Kind};
use jsharp::dsl::build_ring;
use jsharp::harness::{self, SuiteOptions};
use jsharp::render::render_element;
use jsharp::sets::StructuralSets;
use jsharp::{set_order_cap, Error, FiniteRing};

#[derive(Parser)]
#[command(name = "jsharp", version, about = "Finite rings, J#-clean decompositions and an exhaustive result checker")]
struct Cli {
    /// Largest ring order any construction may produce.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Directory for cached structural sets.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Neither read nor write cached structural sets.
    #[arg(long, global = true, conflicts_with = "cache")]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the seven structural sets of a ring.
    Sets {
        /// Ring expression, e.g. "K(Z4,2)".
        expr: String,
        /// Render elements instead of printing indices.
        #[arg(long)]
        pretty: bool,
        /// One JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the classification report of a ring.
    Classify {
        /// Ring expression.
        expr: String,
        /// Aligned text table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// List the decompositions of one element.
    Element {
        /// Ring expression.
        expr: String,
        /// Element index in the ring's canonical order.
        #[arg(long, value_name = "A")]
        index: usize,
        /// Decomposition kind, e.g. clean, strongly-jsharp-clean.
        #[arg(long, value_name = "K")]
        kind: Kind,
        /// JSON array of {idempotent, complement} instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the check suite and print a JSON-lines report.
    Verify {
        /// Catalog manifest; the built-in catalog when omitted.
        #[arg(long, value_name = "FILE")]
        catalog: Option<PathBuf>,
        /// Run only this check (repeatable).
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        /// Worker threads; all cores when omitted.
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
        /// Only the catalog rings, without derived group rings and K(R,s).
        #[arg(long)]
        no_derive: bool,
    },
    /// Print the built-in catalog with orders and build times.
    Catalog {
        /// JSON array instead of a table.
        #[arg(long)]
        json: bool,
    },
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*), true) };
}

macro_rules! outr {
    ($($t:tt)*) => { emit(format_args!($($t)*), false) };
}

/// Write to stdout; a closed pipe ends the process quietly.
fn emit(args: std::fmt::Arguments<'_>, newline: bool) {
    let mut stdout = std::io::stdout().lock();
    let written = stdout.write_fmt(args).and_then(|()| if newline { stdout.write_all(b"\n") } else { Ok(()) });
    if let Err(e) = written {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(2);
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeExceeded { .. } => 3,
        _ => 2,
    }
}

fn cache_for(cli: &Cli) -> Option<SetCache> {
    if cli.no_cache {
        return None;
    }
    cli.cache.clone().or_else(SetCache::default_dir).map(SetCache::new)
}

fn sets_of(cache: Option<&SetCache>, ring: &FiniteRing) -> jsharp::Result<StructuralSets> {
    jsharp::cache::structural_sets_with(cache, ring)
}

fn run(cli: &Cli) -> jsharp::Result<u8> {
    if let Some(cap) = cli.cap {
        set_order_cap(cap);
    }
    let cache = cache_for(cli);
    match &cli.command {
        Command::Sets { expr, pretty, json } => {
            let ring = build_ring(expr)?;
            let sets = sets_of(cache.as_ref(), &ring)?;
            let show = |x: usize| if *pretty { render_element(&ring, x) } else { x.to_string() };
            if *json {
                let mut obj = serde_json::Map::new();
                obj.insert("ring".into(), ring.label().into());
                obj.insert("order".into(), ring.order().into());
                for (name, set) in sets.named() {
                    let items: Vec<serde_json::Value> = if *pretty {
                        set.iter().map(|x| show(x).into()).collect()
                    } else {
                        set.iter().map(|x| x.into()).collect()
                    };
                    obj.insert(name.into(), items.into());
                }
                out!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            } else {
                out!("{} (order {})", ring.label(), ring.order());
                for (name, set) in sets.named() {
                    let items: Vec<String> = set.iter().map(show).collect();
                    out!("{name} ({}): {}", set.len(), items.join(if *pretty { "; " } else { " " }));
                }
            }
        }
        Command::Classify { expr, table } => {
            let ring = build_ring(expr)?;
            sets_of(cache.as_ref(), &ring)?;
            let report = ring_class_report(&ring);
            let value = serde_json::to_value(&report).expect("report serializes");
            if *table {
                let obj = value.as_object().expect("report is an object");
                let width = obj.keys().map(String::len).max().unwrap_or(0);
                for (k, v) in obj {
                    match v {
                        serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                            out!("{k:width$}  {}", serde_json::to_string(v).expect("json"))
                        }
                        serde_json::Value::String(s) => out!("{k:width$}  {s}"),
                        other => out!("{k:width$}  {other}"),
                    }
                }
            } else {
                out!("{}", serde_json::to_string_pretty(&value).expect("json"));
            }
        }
        Command::Element { expr, index, kind, json } => {
            let ring = build_ring(expr)?;
            if *index >= ring.order() {
                return Err(Error::ElementOutOfRange { index: *index, order: ring.order() });
            }
            sets_of(cache.as_ref(), &ring)?;
            let list = decompositions(&ring, *index, *kind);
            if *json {
                let rows: Vec<serde_json::Value> = list
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "element": d.element,
                            "idempotent": d.idempotent,
                            "complement": d.complement,
                            "kind": d.kind,
                            "commuting": d.commuting,
                            "rendered": {
                                "element": render_element(&ring, d.element),
                                "idempotent": render_element(&ring, d.idempotent),
                                "complement": render_element(&ring, d.complement),
                            }
                        })
                    })
                    .collect();
                out!("{}", serde_json::to_string_pretty(&rows).expect("json"));
            } else {
                out!("{} decomposition(s) of {} = {} in {}", list.len(), index, render_element(&ring, *index), ring.label());
                for d in &list {
                    out!(
                        "e={} j={}    e = {}, j = {}",
                        d.idempotent,
                        d.complement,
                        render_element(&ring, d.idempotent),
                        render_element(&ring, d.complement)
                    );
                }
            }
        }
        Command::Verify { catalog, checks, jobs, no_derive } => {
            let text = match catalog {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|source| Error::Io { path: path.display().to_string(), source })?,
                None => harness::DEFAULT_CATALOG.to_string(),
            };
            let opts = SuiteOptions {
                checks: (!checks.is_empty()).then(|| checks.clone()),
                jobs: *jobs,
                derive: !no_derive,
                cache,
            };
            let report = harness::run_suite(&text, &opts)?;
            outr!("{}", report.to_json_lines());
            let t = &report.summary.totals;
            eprintln!("{} pass, {} fail, {} skipped", t.pass, t.fail, t.skipped);
            for f in &report.summary.build_failures {
                eprintln!("line {}: {} not built: {}", f.line, f.subject, f.error);
            }
            return Ok(if report.all_pass() { 0 } else { 1 });
        }
        Command::Catalog { json } => {
            let (subjects, failures) = harness::load_subjects(harness::DEFAULT_CATALOG, false)?;
            if *json {
                let rows: Vec<serde_json::Value> = subjects
                    .iter()
                    .map(|s| serde_json::json!({"subject": s.expr, "order": s.ring().order(), "build_ms": s.build_ms}))
                    .collect();
                out!("{}", serde_json::to_string_pretty(&rows).expect("json"));
            } else {
                let width = subjects.iter().map(|s| s.expr.len()).max().unwrap_or(0);
                for s in &subjects {
                    out!("{:width$}  {:>5}  {:>9.3} ms", s.expr, s.ring().order(), s.build_ms);
                }
            }
            for f in &failures {
                eprintln!("line {}: {} not built: {}", f.line, f.subject, f.error);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
