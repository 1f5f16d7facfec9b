//! Command surface: validate structure documents, run single operations,
//! run theorem-verification suites, generate seeded corpora and evaluate
//! expressions.
//!
//! Exit codes: `0` pass, `1` counterexample or structural violation,
//! `2` malformed input.

pub mod expr;

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qspace::action::{cocomplete_algebra_check, metric_from_action, action_from_metric};
use qspace::approach::{self, Approach};
use qspace::colimit;
use qspace::doc::{self, Document, WeightDoc};
use qspace::error::Error;
use qspace::gen;
use qspace::metric::{yoneda, MetricSpace, Variance};
use qspace::order::alpha_from_lattice;
use qspace::quantale::{Quantale, Value};
use qspace::suites::{self, SuiteParams};
use qspace::ultra::{self, Ultrafilter};

#[derive(Parser)]
#[command(
    name = "qspace",
    version,
    about = "Exact computation with finite quantale-valued structures",
    after_help = "Note: in expressions, the minus sign denotes truncated subtraction \
                  (the residual of addition); there is no other subtraction."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse a structure document and check its axioms
    Check { file: PathBuf },
    /// Run one operation on structure documents
    Compute {
        /// Operation name; run `compute list` for the catalogue
        op: String,
        /// Positional arguments: element names or values, op-dependent
        args: Vec<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Second input document, for binary operations
        #[arg(long)]
        input2: Option<PathBuf>,
        /// Quantale for operations that build structures from scratch:
        /// `chain:STEP:LEVELS` or `rational`
        #[arg(long)]
        quantale: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named verification suite (or `all`)
    Verify {
        suite: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        quantale: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generate a seeded random structure document
    Gen {
        /// One of: metric, poset, lattice, action, approach, met-comp-haus
        kind: String,
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        quantale: Option<String>,
        /// Presentation for approach spaces: dist or conv
        #[arg(long, default_value = "conv")]
        form: String,
    },
    /// Evaluate an expression against a structure document
    Eval {
        expr: String,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Element bindings `name=element`
        #[arg(long = "bind")]
        bindings: Vec<String>,
        /// Weight bindings `name=FILE`
        #[arg(long = "weight")]
        weights: Vec<String>,
    },
    /// List the verification suites and the invariants they check
    Suites,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_)
        | Error::UnknownElement(_)
        | Error::ShapeMismatch(_)
        | Error::QuantaleMismatch(_)
        | Error::UnsupportedEnumeration => 2,
        _ => 1,
    }
}

fn parse_quantale_flag(flag: Option<&str>) -> Result<Quantale, Error> {
    match flag {
        None => Ok(Quantale::unit_chain(3)),
        Some("rational") => Ok(Quantale::rational()),
        Some(s) => {
            let parts: Vec<&str> = s.split(':').collect();
            match parts.as_slice() {
                ["chain", step, levels] => {
                    let step: Value = step.parse()?;
                    let levels: u32 = levels
                        .parse()
                        .map_err(|_| Error::Malformed(format!("bad chain levels {levels:?}")))?;
                    Quantale::chain(step, levels)
                }
                _ => Err(Error::Malformed(format!(
                    "bad quantale {s:?}; use chain:STEP:LEVELS or rational"
                ))),
            }
        }
    }
}

fn load(path: &Path) -> Result<Document, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    doc::parse(&text)
}

fn need_input(input: &Option<PathBuf>) -> Result<Document, Error> {
    match input {
        Some(path) => load(path),
        None => Err(Error::Malformed("this operation needs --input".into())),
    }
}

fn as_metric(doc: Document) -> Result<MetricSpace, Error> {
    match doc {
        Document::Metric(m) => Ok(m),
        other => Err(Error::Malformed(format!(
            "expected a metric document, found {}",
            other.type_name()
        ))),
    }
}

fn as_approach(doc: Document) -> Result<Approach, Error> {
    match doc {
        Document::Approach(a) => Ok(a),
        other => Err(Error::Malformed(format!(
            "expected an approach document, found {}",
            other.type_name()
        ))),
    }
}

fn as_poset(doc: Document) -> Result<qspace::order::Poset, Error> {
    match doc {
        Document::Poset(p) => Ok(p),
        other => Err(Error::Malformed(format!(
            "expected a poset document, found {}",
            other.type_name()
        ))),
    }
}

fn as_action(doc: Document) -> Result<qspace::action::OrdAction, Error> {
    match doc {
        Document::Action(a) => Ok(a),
        other => Err(Error::Malformed(format!(
            "expected an action document, found {}",
            other.type_name()
        ))),
    }
}

fn as_mch(doc: Document) -> Result<qspace::ultra::MetCompHaus, Error> {
    match doc {
        Document::MetCompHaus(m) => Ok(m),
        other => Err(Error::Malformed(format!(
            "expected a met_comp_haus document, found {}",
            other.type_name()
        ))),
    }
}

enum Output {
    Doc(Document),
    Bool(bool),
    Value(Value),
    Element(Option<String>),
    Names(Vec<String>),
    Record(serde_json::Value),
}

fn print_output(out: &Output, format: Format) {
    match out {
        Output::Doc(d) => println!("{}", doc::to_canonical_string(d)),
        Output::Bool(b) => match format {
            Format::Text => println!("{b}"),
            Format::Json => println!("{}", json!({ "result": b })),
        },
        Output::Value(v) => match format {
            Format::Text => println!("{v}"),
            Format::Json => println!("{}", json!({ "result": v.to_string() })),
        },
        Output::Element(e) => match format {
            Format::Text => println!("{}", e.as_deref().unwrap_or("none")),
            Format::Json => println!("{}", json!({ "result": e })),
        },
        Output::Names(ns) => match format {
            Format::Text => println!("{}", ns.join(" ")),
            Format::Json => println!("{}", json!({ "result": ns })),
        },
        Output::Record(j) => println!("{j}"),
    }
}

const COMPUTE_OPS: &[&str] = &[
    "check-axioms", "is-separated", "dual", "underlying-order", "order-to-metric",
    "plus-product", "max-product", "yoneda", "weighted-sup", "weighted-inf",
    "sup-by-formula", "tensor", "cotensor", "is-tensored", "is-cotensored",
    "is-cocomplete", "isbell-plus", "isbell-minus", "down-set", "formal-ball",
    "fam-weight", "supremum", "infimum", "is-complete-lattice", "way-below",
    "way-above", "is-continuous-lattice", "is-op-continuous-lattice", "scott-open",
    "alpha-from-lattice", "check-action", "metric-from-action", "action-from-metric",
    "cocomplete-algebra", "lift-order", "lift-metric", "k-approach", "m-functor",
    "expansion", "dist-to-conv", "conv-to-dist", "underlying-metric",
    "approach-from-metric", "compactness-degree", "plus-exponentiable",
    "is-u-cocomplete", "is-cocomplete-app", "is-absolutely-cocomplete",
    "app-to-lattice-action", "lattice-action-to-app",
];

#[allow(clippy::too_many_lines)]
fn compute(
    op: &str,
    args: &[String],
    input: &Option<PathBuf>,
    input2: &Option<PathBuf>,
    quantale: Option<&str>,
) -> Result<Output, Error> {
    let arg = |i: usize| -> Result<&str, Error> {
        args.get(i)
            .map(String::as_str)
            .ok_or_else(|| Error::Malformed(format!("{op} needs argument {i}")))
    };
    let weight_from =
        |path: &Option<PathBuf>, m: &MetricSpace| -> Result<qspace::metric::Weight, Error> {
            match need_input(path)? {
                Document::Weight(w) => w.bind(m),
                other => Err(Error::Malformed(format!(
                    "expected a weight document, found {}",
                    other.type_name()
                ))),
            }
        };
    match op {
        "list" => Ok(Output::Names(COMPUTE_OPS.iter().map(|s| s.to_string()).collect())),
        "check-axioms" => {
            let m = as_metric(need_input(input)?)?;
            Ok(Output::Bool(m.check_metric_axioms()))
        }
        "is-separated" => Ok(Output::Bool(as_metric(need_input(input)?)?.is_separated())),
        "dual" => Ok(Output::Doc(Document::Metric(as_metric(need_input(input)?)?.dual()))),
        "underlying-order" => {
            let m = as_metric(need_input(input)?)?;
            Ok(Output::Doc(Document::Poset(m.underlying_order()?)))
        }
        "order-to-metric" => {
            let p = as_poset(need_input(input)?)?;
            let q = parse_quantale_flag(quantale)?;
            Ok(Output::Doc(Document::Metric(MetricSpace::from_order(&p, &q))))
        }
        "plus-product" | "max-product" => {
            let m = as_metric(need_input(input)?)?;
            let n = as_metric(need_input(input2)?)?;
            let prod = if op == "plus-product" { m.plus_product(&n)? } else { m.max_product(&n)? };
            Ok(Output::Doc(Document::Metric(prod)))
        }
        "yoneda" => {
            let m = as_metric(need_input(input)?)?;
            let x = m.index_of(arg(0)?)?;
            Ok(Output::Doc(Document::Weight(WeightDoc::of_weight(&m, &yoneda(&m, x)))))
        }
        "weighted-sup" | "weighted-inf" | "sup-by-formula" => {
            let m = as_metric(need_input(input)?)?;
            let w = weight_from(input2, &m)?;
            let result = match op {
                "weighted-sup" => colimit::weighted_sup(&m, &w)?,
                "weighted-inf" => colimit::weighted_inf(&m, &w)?,
                _ => Some(colimit::sup_by_formula(&m, &w)?),
            };
            Ok(Output::Element(result.map(|i| m.name(i).to_string())))
        }
        "tensor" | "cotensor" => {
            let m = as_metric(need_input(input)?)?;
            let x = m.index_of(arg(0)?)?;
            let u: Value = arg(1)?.parse()?;
            let t = if op == "tensor" { colimit::tensor(&m, x, &u)? } else { colimit::cotensor(&m, x, &u)? };
            Ok(Output::Element(t.map(|i| m.name(i).to_string())))
        }
        "is-tensored" => Ok(Output::Bool(colimit::is_tensored(&as_metric(need_input(input)?)?)?)),
        "is-cotensored" => Ok(Output::Bool(colimit::is_cotensored(&as_metric(need_input(input)?)?)?)),
        "is-cocomplete" => Ok(Output::Bool(colimit::is_cocomplete(&as_metric(need_input(input)?)?)?)),
        "isbell-plus" | "isbell-minus" => {
            let m = as_metric(need_input(input)?)?;
            let w = weight_from(input2, &m)?;
            let out = if op == "isbell-plus" { colimit::isbell_plus(&m, &w)? } else { colimit::isbell_minus(&m, &w)? };
            Ok(Output::Doc(Document::Weight(WeightDoc::of_weight(&m, &out))))
        }
        "down-set" | "fam-weight" => {
            let m = as_metric(need_input(input)?)?;
            let points = args
                .iter()
                .map(|a| m.index_of(a))
                .collect::<Result<Vec<_>, _>>()?;
            let w = if op == "down-set" {
                colimit::down_set_of_subset(&m, &points)?
            } else {
                colimit::fam_weight(&m, &points)?
            };
            Ok(Output::Doc(Document::Weight(WeightDoc::of_weight(&m, &w))))
        }
        "formal-ball" => {
            let m = as_metric(need_input(input)?)?;
            let x = m.index_of(arg(0)?)?;
            let u: Value = arg(1)?.parse()?;
            let w = colimit::formal_ball(&m, x, &u)?;
            Ok(Output::Doc(Document::Weight(WeightDoc::of_weight(&m, &w))))
        }
        "supremum" | "infimum" => {
            let p = as_poset(need_input(input)?)?;
            let points = args.iter().map(|a| p.index_of(a)).collect::<Result<Vec<_>, _>>()?;
            let s = if op == "supremum" { p.supremum(&points) } else { p.infimum(&points) };
            Ok(Output::Element(s.map(|i| p.name(i).to_string())))
        }
        "is-complete-lattice" => Ok(Output::Bool(as_poset(need_input(input)?)?.is_complete_lattice())),
        "way-below" | "way-above" => {
            let p = as_poset(need_input(input)?)?;
            let y = p.index_of(arg(0)?)?;
            let x = p.index_of(arg(1)?)?;
            let b = if op == "way-below" { p.way_below(y, x)? } else { p.way_above(y, x)? };
            Ok(Output::Bool(b))
        }
        "is-continuous-lattice" => Ok(Output::Bool(as_poset(need_input(input)?)?.is_continuous_lattice())),
        "is-op-continuous-lattice" => Ok(Output::Bool(as_poset(need_input(input)?)?.is_op_continuous_lattice())),
        "scott-open" => {
            let p = as_poset(need_input(input)?)?;
            let points = args.iter().map(|a| p.index_of(a)).collect::<Result<Vec<_>, _>>()?;
            Ok(Output::Bool(p.scott_open(&points)))
        }
        "alpha-from-lattice" => {
            let p = as_poset(need_input(input)?)?;
            let x = p.index_of(arg(0)?)?;
            let uf = Ultrafilter::principal(p.len(), x)?;
            let a = alpha_from_lattice(&p, &uf)?;
            Ok(Output::Element(Some(p.name(a).to_string())))
        }
        "check-action" => {
            let a = as_action(need_input(input)?)?;
            let c = a.check_conditions();
            Ok(Output::Record(json!({
                "unit": c.unit,
                "associative": c.associative,
                "monotone": c.monotone,
                "bottom": c.bottom,
                "distributes": c.distributes,
                "all": c.all(),
            })))
        }
        "metric-from-action" => Ok(Output::Doc(Document::Metric(metric_from_action(
            &as_action(need_input(input)?)?,
        )?))),
        "action-from-metric" => Ok(Output::Doc(Document::Action(action_from_metric(
            &as_metric(need_input(input)?)?,
        )?))),
        "cocomplete-algebra" => Ok(Output::Bool(cocomplete_algebra_check(
            &as_action(need_input(input)?)?,
        )?)),
        "lift-order" => Ok(Output::Doc(Document::Poset(ultra::lift_order(&as_poset(
            need_input(input)?,
        )?)))),
        "lift-metric" => Ok(Output::Doc(Document::Metric(ultra::lift_metric(&as_metric(
            need_input(input)?,
        )?)?))),
        "k-approach" => Ok(Output::Doc(Document::Approach(ultra::k_approach(&as_mch(
            need_input(input)?,
        )?)?))),
        "m-functor" => Ok(Output::Doc(Document::MetCompHaus(ultra::m_functor(
            &as_approach(need_input(input)?)?,
        )?))),
        "expansion" => {
            let a = as_approach(need_input(input)?)?;
            let eps: Value = arg(0)?.parse()?;
            let points = args[1..]
                .iter()
                .map(|s| a.index_of(s))
                .collect::<Result<Vec<_>, _>>()?;
            let out = ultra::expansion(&a, &points, &eps)?;
            Ok(Output::Names(out.into_iter().map(|i| a.names()[i].clone()).collect()))
        }
        "dist-to-conv" => Ok(Output::Doc(Document::Approach(
            as_approach(need_input(input)?)?.to_conv()?,
        ))),
        "conv-to-dist" => Ok(Output::Doc(Document::Approach(
            as_approach(need_input(input)?)?.to_dist()?,
        ))),
        "underlying-metric" => Ok(Output::Doc(Document::Metric(
            as_approach(need_input(input)?)?.underlying_metric()?,
        ))),
        "approach-from-metric" => Ok(Output::Doc(Document::Approach(Approach::from_metric(
            &as_metric(need_input(input)?)?,
        )?))),
        "compactness-degree" => Ok(Output::Value(
            as_approach(need_input(input)?)?.compactness_degree()?,
        )),
        "plus-exponentiable" => Ok(Output::Bool(
            as_approach(need_input(input)?)?.plus_exponentiable_check()?,
        )),
        "is-u-cocomplete" => Ok(Output::Bool(approach::is_u_cocomplete(
            &as_approach(need_input(input)?)?,
        )?)),
        "is-cocomplete-app" => Ok(Output::Bool(approach::is_cocomplete_app(
            &as_approach(need_input(input)?)?,
        )?)),
        "is-absolutely-cocomplete" => Ok(Output::Bool(approach::is_absolutely_cocomplete(
            &as_approach(need_input(input)?)?,
        )?)),
        "app-to-lattice-action" => Ok(Output::Doc(Document::Action(
            approach::app_to_lattice_action(&as_approach(need_input(input)?)?)?,
        ))),
        "lattice-action-to-app" => Ok(Output::Doc(Document::Approach(
            approach::lattice_action_to_app(&as_action(need_input(input)?)?)?,
        ))),
        other => Err(Error::Malformed(format!(
            "unknown operation {other:?}; run `compute list`"
        ))),
    }
}

fn gen_document(
    kind: &str,
    size: usize,
    seed: u64,
    quantale: Option<&str>,
    form: &str,
) -> Result<Document, Error> {
    let q = parse_quantale_flag(quantale)?;
    let mut rng = gen::rng(seed);
    match kind {
        "metric" => Ok(Document::Metric(gen::gen_metric(&q, size, &mut rng))),
        "poset" => Ok(Document::Poset(gen::gen_poset(size, &mut rng))),
        "lattice" => Ok(Document::Poset(gen::gen_complete_lattice(size, &mut rng))),
        "action" => Ok(Document::Action(gen::gen_lattice_action(&q, size, &mut rng)?)),
        "approach" => {
            let dist = match form {
                "dist" => true,
                "conv" => false,
                other => return Err(Error::Malformed(format!("bad form {other:?}"))),
            };
            Ok(Document::Approach(gen::gen_approach(&q, size, &mut rng, dist)?))
        }
        "met-comp-haus" => Ok(Document::MetCompHaus(gen::gen_met_comp_haus(&q, size, &mut rng)?)),
        "weight" => {
            let m = gen::gen_metric(&q, size, &mut rng);
            let w = gen::gen_weight(&m, Variance::Contravariant, &mut rng)?;
            Ok(Document::Weight(WeightDoc::of_weight(&m, &w)))
        }
        other => Err(Error::Malformed(format!(
            "unknown kind {other:?}; use metric, poset, lattice, action, approach, met-comp-haus or weight"
        ))),
    }
}

fn print_suite_report(report: &qspace::suites::SuiteReport, format: Format) {
    match format {
        Format::Text => {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            println!("suite {}: {status} ({} checks)", report.name, report.checked);
            for note in &report.notes {
                println!("  note: {note}");
            }
            for failure in &report.failures {
                println!("  counterexample: {}", failure.description);
                if let Some(doc) = &failure.document {
                    println!("    {doc}");
                }
            }
        }
        Format::Json => {
            let failures: Vec<serde_json::Value> = report
                .failures
                .iter()
                .map(|f| json!({ "description": f.description, "document": f.document }))
                .collect();
            println!(
                "{}",
                json!({
                    "suite": report.name,
                    "passed": report.passed(),
                    "checked": report.checked,
                    "failures": failures,
                    "notes": report.notes,
                })
            );
        }
    }
}

fn eval_command(
    expr_src: &str,
    input: &Option<PathBuf>,
    bindings: &[String],
    weights: &[String],
) -> Result<Value, Error> {
    let mut env = expr::Env {
        metric: None,
        approach: None,
        elements: HashMap::new(),
        weights: HashMap::new(),
    };
    if let Some(path) = input {
        match load(path)? {
            Document::Metric(m) => {
                env.approach = Approach::from_metric(&m).ok();
                env.metric = Some(m);
            }
            Document::Approach(a) => {
                env.metric = Some(a.underlying_metric()?);
                env.approach = Some(a);
            }
            other => {
                return Err(Error::Malformed(format!(
                    "eval expects a metric or approach document, found {}",
                    other.type_name()
                )))
            }
        }
    }
    if let Some(m) = &env.metric {
        for (i, name) in m.names().iter().enumerate() {
            env.elements.insert(name.clone(), i);
        }
    }
    for binding in bindings {
        let (name, target) = binding
            .split_once('=')
            .ok_or_else(|| Error::Malformed(format!("bad binding {binding:?}; use name=element")))?;
        let m = env
            .metric
            .as_ref()
            .ok_or_else(|| Error::Malformed("--bind needs --input".into()))?;
        env.elements.insert(name.to_string(), m.index_of(target)?);
    }
    for w in weights {
        let (name, path) = w
            .split_once('=')
            .ok_or_else(|| Error::Malformed(format!("bad weight binding {w:?}; use name=FILE")))?;
        let m = env
            .metric
            .as_ref()
            .ok_or_else(|| Error::Malformed("--weight needs --input".into()))?
            .clone();
        match load(Path::new(path))? {
            Document::Weight(wd) => {
                env.weights.insert(name.to_string(), wd.bind(&m)?);
            }
            other => {
                return Err(Error::Malformed(format!(
                    "expected a weight document, found {}",
                    other.type_name()
                )))
            }
        }
    }
    expr::eval(expr_src, &env)
}

/// Runs one parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { file } => match load(&file) {
            Ok(doc) => match doc.validate() {
                Ok(()) => {
                    println!("ok: valid {} document", doc.type_name());
                    0
                }
                Err(e) => {
                    eprintln!("violation: {e}");
                    1
                }
            },
            Err(e) => {
                eprintln!("malformed: {e}");
                2
            }
        },
        Command::Compute { op, args, input, input2, quantale, format } => {
            match compute(&op, &args, &input, &input2, quantale.as_deref()) {
                Ok(out) => {
                    print_output(&out, format);
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
        Command::Verify { suite, size, seed, samples, quantale, format } => {
            let defaults = SuiteParams::default();
            let params = match parse_quantale_flag(quantale.as_deref()) {
                Ok(q) => SuiteParams {
                    quantale: q,
                    size: size.unwrap_or(defaults.size),
                    seed: seed.unwrap_or(defaults.seed),
                    samples: samples.unwrap_or(defaults.samples),
                },
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let names: Vec<String> = if suite == "all" {
                suites::suite_index().iter().map(|(n, _, _)| n.to_string()).collect()
            } else {
                vec![suite]
            };
            let mut worst = 0;
            for name in names {
                match suites::run_suite(&name, &params) {
                    Ok(report) => {
                        print_suite_report(&report, format);
                        if !report.passed() {
                            worst = worst.max(1);
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return exit_code(&e);
                    }
                }
            }
            worst
        }
        Command::Gen { kind, size, seed, quantale, form } => {
            match gen_document(&kind, size, seed, quantale.as_deref(), &form) {
                Ok(doc) => {
                    println!("{}", doc::to_canonical_string(&doc));
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
        Command::Eval { expr, input, bindings, weights } => {
            match eval_command(&expr, &input, &bindings, &weights) {
                Ok(v) => {
                    println!("{v}");
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
        Command::Suites => {
            for (name, module, invariant) in suites::suite_index() {
                println!("{name:32} [{module}] {invariant}");
            }
            0
        }
    }
}
