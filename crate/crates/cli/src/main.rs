use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use twisted_double::double::{DoubleContext, DoubleElement};
use twisted_double::expr::parse_expression;
use twisted_double::hopf::HopfPresentation;
use twisted_double::instances::{InstanceRegistry, LoadedInstance};
use twisted_double::report::Report;

/// Exact computations in twisted Heisenberg doubles.
#[derive(Parser)]
#[command(name = "twisted-double", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(clap::Args)]
struct Common {
    /// Instance config (JSON).
    #[arg(long)]
    instance: PathBuf,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Run the verification suite up to a total degree.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Also write the reports to this file as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite an expression into the normal form `a#x`.
    NormalOrder {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Evaluate the pairing `⟨x, a⟩`, written `x | a` with `x` in H⁻ and `a` in H⁺.
    Pair {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Matrix of an element acting on the Fock space H⁺.
    FockMatrix {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
        /// Columns are the basis of H⁺ up to this degree.
        #[arg(long)]
        in_degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Antipode of an element of H⁺ or H⁻.
    Antipode {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        expr: String,
    },
    /// Twisting data, basis dimensions and (with --out) the Gram blocks.
    Info {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit codes: 0 success, 1 a verification failed, 2 usage or config error.
enum Failure {
    Verification,
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<LoadedInstance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(InstanceRegistry::default().build_json(&text)?)
}

fn evaluate(inst: &LoadedInstance, src: &str) -> Result<DoubleElement, Failure> {
    Ok(parse_expression(src)?.evaluate(inst.engine(), inst.generators())?)
}

fn write_json(path: &Path, value: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    Ok(())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(verb: Verb) -> Outcome {
    match verb {
        Verb::Verify {
            common,
            max_degree,
            out,
        } => verify(&common, max_degree, out.as_deref()),
        Verb::NormalOrder { common, expr } => {
            let inst = load(&common.instance)?;
            let u = evaluate(&inst, &expr)?;
            let text = inst.engine().format(&u);
            if common.json {
                print_json(&json!({"instance": inst.name(), "expr": expr, "normal_form": text}));
            } else {
                println!("{text}");
            }
            Ok(())
        }
        Verb::Pair { common, expr } => {
            let inst = load(&common.instance)?;
            let (left, right) = expr
                .split_once('|')
                .ok_or("pair expects `x | a` with x in H⁻ and a in H⁺")?;
            let x = evaluate(&inst, left)?
                .as_minus()
                .ok_or("the left side of `|` must lie in H⁻")?;
            let a = evaluate(&inst, right)?
                .as_plus()
                .ok_or("the right side of `|` must lie in H⁺")?;
            let value = inst.pairing().pair(&x, &a)?.to_string();
            if common.json {
                print_json(&json!({"instance": inst.name(), "expr": expr, "value": value}));
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Verb::FockMatrix {
            common,
            expr,
            in_degree,
            out,
        } => {
            let inst = load(&common.instance)?;
            let double = inst.context().as_double()?;
            let u = evaluate(&inst, &expr)?;
            let raise = u.iter().map(|((a, _), _)| a.total()).max().unwrap_or(0);
            let m = double.fock_matrix(&u, in_degree, in_degree + raise)?;
            let value = m.to_json();
            match out {
                Some(path) => write_json(&path, &value),
                None => {
                    print_json(&value);
                    Ok(())
                }
            }
        }
        Verb::Antipode { common, expr } => {
            let inst = load(&common.instance)?;
            let u = evaluate(&inst, &expr)?;
            let (side, element) = match (u.as_plus(), u.as_minus()) {
                (Some(a), _) => (inst.pairing().plus(), a),
                (None, Some(x)) => (inst.pairing().minus(), x),
                (None, None) => return Err("the antipode needs an element of H⁺ or of H⁻".into()),
            };
            let text = side.format(&side.antipode(&element)?);
            if common.json {
                print_json(&json!({"instance": inst.name(), "expr": expr, "antipode": text}));
            } else {
                println!("{text}");
            }
            Ok(())
        }
        Verb::Info {
            common,
            max_degree,
            out,
        } => info(&common, max_degree, out.as_deref()),
    }
}

fn verify(common: &Common, n: u32, out: Option<&Path>) -> Outcome {
    let inst = load(&common.instance)?;
    let reports = inst.verify(n)?;
    let value = serde_json::to_value(&reports)?;
    if common.json {
        print_json(&value);
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    if let Some(path) = out {
        write_json(path, &value)?;
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn info(common: &Common, n: u32, out: Option<&Path>) -> Outcome {
    let inst = load(&common.instance)?;
    let p = inst.pairing();
    let dims = |side: &HopfPresentation| -> Vec<usize> { (0..=n).map(|d| side.basis(d).len()).collect() };
    let double = match inst.context() {
        DoubleContext::Double(_) => Value::Bool(true),
        DoubleContext::PresentationOnly(r) => json!({"absent": r.reason()}),
    };
    let value = json!({
        "instance": inst.name(),
        "type": inst.kind(),
        "rank": p.plus().rank(),
        "chi": p.plus().twisting().to_string(),
        "xi": p.minus().twisting().to_string(),
        "gamma": p.gamma().to_string(),
        "dimensions": dims(p.plus()),
        "double": double,
    });
    if common.json {
        print_json(&value);
    } else {
        println!("instance   {} ({})", inst.name(), inst.kind());
        println!("rank       {}", p.plus().rank());
        println!("chi        {}", p.plus().twisting());
        println!("xi         {}", p.minus().twisting());
        println!("gamma      {}", p.gamma());
        println!("dimensions {:?}", dims(p.plus()));
        match inst.context() {
            DoubleContext::Double(_) => println!("double     yes"),
            DoubleContext::PresentationOnly(r) => println!("double     no: {}", r.reason()),
        }
    }
    if let Some(path) = out {
        write_json(path, &p.gram_json(n))?;
    }
    Ok(())
}
