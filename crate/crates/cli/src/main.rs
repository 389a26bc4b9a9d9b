use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use quohal::format::{InstanceFile, Instances};
use quohal::hopfmod::{validate_embedding, verify_cotensor_iso, verify_hopf_module};
use quohal::integrals::{find_frobenius_form, integral_space, pan_semisimple, radical_oracle, FrobeniusSearch};
use quohal::modrep::{is_bimodule, is_module, IsoWitness, DEFAULT_TRIALS};
use quohal::nz::{auxthm_check, hopf_module_freeness, nz_freeness, Conclusion, TheoremReport};
use quohal::quasi::{verify_all, verify_quasiantipode, QuasiHopfAlgebra};
use quohal::report::{AxiomReport, Check, Status};
use quohal::zoo;
use quohal::{Error, Field, Matrix, Side};

/// Exact checks on finite-dimensional quasi-Hopf algebras.
///
/// SOURCE is a JSON instance file, `-` for standard input, or `zoo:NAME`
/// for a built-in instance over GF(13).
#[derive(Parser)]
#[command(name = "quohal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Seed for randomized searches (default: $QUOHAL_SEED, else 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Random trials before falling back to exhaustive or structured search.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every axiom of a named object (quasi-Hopf algebra, module,
    /// bimodule, embedding or Hopf module).
    CheckAxioms { source: String, name: Option<String> },
    /// Verify the quasiantipode identities.
    CheckAntipode { source: String, name: Option<String> },
    /// Left and right integral spaces.
    Integrals { source: String, name: Option<String> },
    /// Semisimplicity via integrals, cross-checked with the trace-form radical.
    Semisimple { source: String, name: Option<String> },
    /// Search for a Frobenius functional.
    Frobenius { source: String, name: Option<String> },
    /// Freeness of H over a quasi-Hopf subalgebra K.
    Nz { source: String, embedding: Option<String> },
    /// Freeness of a Hopf module as a left K-module.
    HopfFree { source: String, module: Option<String> },
    /// Freeness of W from W ⊗ V ≅ W^dim V with V faithful.
    Auxthm { source: String, w: String, v: String },
    /// Compare M □ (H ⊗ P) with M ⊗ P.
    CotensorIso { source: String, m: String, p: String },
    /// Built-in instances.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
}

#[derive(Subcommand)]
enum ZooAction {
    /// List instance names.
    List,
    /// Print an instance file.
    Emit {
        name: String,
        /// Prime field to build over.
        #[arg(long, default_value_t = 13, conflicts_with = "rationals")]
        prime: u64,
        /// Build over the rationals instead.
        #[arg(long)]
        rationals: bool,
    },
}

/// Input problems; always exit 3.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

struct Report {
    checks: Vec<Check>,
    evidence: BTreeMap<String, Value>,
}

impl Report {
    fn new() -> Report {
        Report {
            checks: Vec::new(),
            evidence: BTreeMap::new(),
        }
    }

    fn axioms(&mut self, prefix: &str, rep: AxiomReport) {
        for mut c in rep.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    fn status(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        let mut rep = AxiomReport::new("");
        rep.record_status(name, status, detail);
        self.axioms("", rep);
    }

    fn theorem(&mut self, t: TheoremReport) {
        self.axioms("hypothesis.", t.hypotheses);
        let status = match t.conclusion {
            Conclusion::Confirmed => Status::Pass,
            Conclusion::Refuted | Conclusion::NotApplicable => Status::Fail,
            Conclusion::Unknown => Status::Unknown,
        };
        let detail = format!("{:?}{}", t.conclusion, if t.notes.is_empty() { String::new() } else { format!("; {}", t.notes.join("; ")) });
        self.status(&format!("{}.conclusion", t.theorem), status, detail);
        self.evidence.extend(t.evidence);
    }

    fn exit_code(&self) -> u8 {
        self.checks
            .iter()
            .map(|c| match c.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Unknown | Status::Unsupported => 2,
            })
            .max()
            .unwrap_or(0)
    }
}

fn read_source(source: &str) -> Result<(Instances, Option<String>), InputError> {
    let (text, hint) = if let Some(name) = source.strip_prefix("zoo:") {
        (zoo::emit(name, Field::Prime(13))?.to_json(), Some(name.to_string()))
    } else if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| InputError(format!("stdin: {e}")))?;
        (s, None)
    } else {
        let s = std::fs::read_to_string(source).map_err(|e| InputError(format!("{source}: {e}")))?;
        (s, None)
    };
    let parsed = InstanceFile::parse(&text).map_err(|e| InputError(format!("{source}: {e}")))?;
    Ok((parsed.resolve().map_err(|e| InputError(format!("{source}: {e}")))?, hint))
}

/// The requested object, else the one named like the zoo source, else the
/// only one of its kind.
fn pick<'a, T>(map: &'a BTreeMap<String, T>, name: Option<&str>, hint: Option<&str>, kind: &str) -> Result<(String, &'a T), InputError> {
    if let Some(n) = name {
        return map
            .get(n)
            .map(|v| (n.to_string(), v))
            .ok_or_else(|| InputError(format!("unresolved reference: no {kind} named '{n}'")));
    }
    if let Some(v) = hint.and_then(|h| map.get(h)) {
        return Ok((hint.unwrap().to_string(), v));
    }
    match map.len() {
        1 => Ok(map.iter().next().map(|(k, v)| (k.clone(), v)).unwrap()),
        0 => Err(InputError(format!("no {kind} in input"))),
        _ => Err(InputError(format!(
            "several {kind} objects ({}); name one",
            map.keys().cloned().collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|r| m.row(r).iter().map(|s| s.encode()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn vec_json(v: &[quohal::Scalar]) -> Value {
    json!(v.iter().map(|s| s.encode()).collect::<Vec<_>>())
}

/// Runs the axiom suite first; later checks are skipped on failure.
fn verified(report: &mut Report, h: &QuasiHopfAlgebra) -> bool {
    let rep = verify_all(h);
    let ok = rep.passed();
    report.axioms("axiom.", rep);
    ok
}

fn run(command: &Command, seed: u64, trials: usize) -> Result<Report, InputError> {
    let mut report = Report::new();
    match command {
        Command::CheckAxioms { source, name } => {
            let (inst, hint) = read_source(source)?;
            let hint = hint.as_deref();
            let n = name.as_deref().or(hint.filter(|h| !inst.quasi_hopf.contains_key(*h) && inst.embeddings.contains_key(*h)));
            if n.is_none_or(|n| inst.quasi_hopf.contains_key(n)) {
                let (_, h) = pick(&inst.quasi_hopf, n, hint, "quasi_hopf")?;
                report.axioms("", verify_all(h));
            } else if let Some(e) = n.and_then(|n| inst.embeddings.get(n)) {
                report.axioms("K.", verify_all(e.k()));
                report.axioms("H.", verify_all(e.h()));
                report.axioms("", validate_embedding(e));
            } else if let Some(m) = n.and_then(|n| inst.hopf_modules.get(n)) {
                report.axioms("", verify_hopf_module(m)?);
            } else if let Some(b) = n.and_then(|n| inst.bimodules.get(n)) {
                report.axioms("", is_bimodule(b));
            } else if let Some(m) = n.and_then(|n| inst.modules.get(n)) {
                report.axioms("", is_module(m));
            } else {
                return Err(InputError(format!("unresolved reference: nothing named '{}'", n.unwrap_or_default())));
            }
        }
        Command::CheckAntipode { source, name } => {
            let (inst, hint) = read_source(source)?;
            let (_, h) = pick(&inst.quasi_hopf, name.as_deref(), hint.as_deref(), "quasi_hopf")?;
            report.axioms("", verify_quasiantipode(h));
        }
        Command::Integrals { source, name } => {
            let (inst, hint) = read_source(source)?;
            let (_, h) = pick(&inst.quasi_hopf, name.as_deref(), hint.as_deref(), "quasi_hopf")?;
            if verified(&mut report, h) {
                for (label, side) in [("left", Side::Left), ("right", Side::Right)] {
                    let s = integral_space(h, side);
                    report.status(&format!("{label}_integrals"), Status::Pass, format!("dimension {}", s.dim()));
                    report.evidence.insert(format!("{label}_integrals"), json!(s.basis.iter().map(|t| vec_json(t)).collect::<Vec<_>>()));
                }
            }
        }
        Command::Semisimple { source, name } => {
            let (inst, hint) = read_source(source)?;
            let (_, h) = pick(&inst.quasi_hopf, name.as_deref(), hint.as_deref(), "quasi_hopf")?;
            if verified(&mut report, h) {
                let pan = pan_semisimple(h);
                report.evidence.insert("semisimple".into(), json!(pan.semisimple));
                if let Some(t) = &pan.integral {
                    report.evidence.insert("normalized_integral".into(), vec_json(t));
                }
                let verdict = if pan.semisimple { "semisimple" } else { "not semisimple: ε vanishes on left integrals" };
                report.status("integral_criterion", Status::Pass, verdict);
                match radical_oracle(h.alg()) {
                    Ok(rad) => {
                        report.evidence.insert("radical_dim".into(), json!(rad.cols()));
                        let agrees = (rad.cols() == 0) == pan.semisimple;
                        let status = if agrees { Status::Pass } else { Status::Fail };
                        report.status("radical_oracle", status, format!("trace-form radical of dimension {}", rad.cols()));
                    }
                    Err(e) => report.status("radical_oracle", Status::Unsupported, e.to_string()),
                }
            }
        }
        Command::Frobenius { source, name } => {
            let (inst, hint) = read_source(source)?;
            let (_, h) = pick(&inst.quasi_hopf, name.as_deref(), hint.as_deref(), "quasi_hopf")?;
            if verified(&mut report, h) {
                match find_frobenius_form(h, seed, trials) {
                    FrobeniusSearch::Found { form, attempts } => {
                        report.status("frobenius_form", Status::Pass, format!("found after {attempts} candidates"));
                        report.evidence.insert("lambda".into(), vec_json(&form.lambda));
                        report.evidence.insert("gram_mult".into(), matrix_json(&form.gram_mult));
                        report.evidence.insert("gram_twisted".into(), matrix_json(&form.gram_twisted));
                    }
                    FrobeniusSearch::NeedLargerField => {
                        report.status("frobenius_form", Status::Unknown, "no candidate worked; try a larger field")
                    }
                }
            }
        }
        Command::Nz { source, embedding } => {
            let (inst, hint) = read_source(source)?;
            let (_, e) = pick(&inst.embeddings, embedding.as_deref(), hint.as_deref(), "embedding")?;
            report.theorem(nz_freeness(e, seed, trials));
        }
        Command::HopfFree { source, module } => {
            let (inst, hint) = read_source(source)?;
            let (_, m) = pick(&inst.hopf_modules, module.as_deref(), hint.as_deref(), "hopf_module")?;
            match hopf_module_freeness(m, seed, trials) {
                Ok(t) => report.theorem(t),
                Err(Error::Regime(msg)) => report.status("hopf_module_freeness.regime", Status::Unsupported, msg),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Auxthm { source, w, v } => {
            let (inst, _) = read_source(source)?;
            let (_, wm) = pick(&inst.modules, Some(w), None, "module")?;
            let (_, vm) = pick(&inst.modules, Some(v), None, "module")?;
            let k = inst
                .quasi_hopf
                .values()
                .find(|h| **h.alg() == **wm.algebra())
                .ok_or_else(|| InputError(format!("module '{w}' is not over a quasi-Hopf algebra in the input")))?;
            match auxthm_check(k, wm, vm, seed, trials) {
                Ok(t) => report.theorem(t),
                Err(Error::Invalid(msg)) => return Err(InputError(msg)),
                Err(e) => return Err(e.into()),
            }
        }
        Command::CotensorIso { source, m, p } => {
            let (inst, _) = read_source(source)?;
            let (_, hm) = pick(&inst.hopf_modules, Some(m), None, "hopf_module")?;
            let (_, pb) = pick(&inst.bimodules, Some(p), None, "bimodule")?;
            let hopf = verify_hopf_module(hm)?;
            let bim = is_bimodule(pb);
            let ok = hopf.passed() && bim.passed();
            report.axioms("M.", hopf);
            report.axioms("P.", bim);
            if ok {
                let (w, lhs, rhs) = verify_cotensor_iso(hm, pb, seed, trials)?;
                report.evidence.insert("cotensor_dim".into(), json!(lhs));
                report.evidence.insert("tensor_dim".into(), json!(rhs));
                match w {
                    IsoWitness::Yes(x) => {
                        report.status("cotensor_iso", Status::Pass, "isomorphic");
                        report.evidence.insert("iso".into(), matrix_json(&x));
                    }
                    IsoWitness::No(why) => report.status("cotensor_iso", Status::Fail, why),
                    IsoWitness::Unknown { bound } => {
                        report.status("cotensor_iso", Status::Unknown, format!("no iso found; miss probability at most {bound:.3e}"))
                    }
                }
            }
        }
        Command::Zoo { .. } => unreachable!("handled before dispatch"),
    }
    Ok(report)
}

fn zoo_command(action: &ZooAction) -> Result<(), InputError> {
    match action {
        ZooAction::List => {
            for name in zoo::NAMES {
                println!("{name}");
            }
        }
        ZooAction::Emit { name, prime, rationals } => {
            let field = if *rationals { Field::Rationals } else { Field::prime(*prime)? };
            println!("{}", zoo::emit(name, field)?.to_json());
        }
    }
    Ok(())
}

fn default_seed() -> Result<u64, InputError> {
    match std::env::var("QUOHAL_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| InputError(format!("QUOHAL_SEED is not an integer: {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Command::Zoo { action } = &cli.command {
        return match zoo_command(action) {
            Ok(()) => ExitCode::SUCCESS,
            Err(InputError(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        };
    }
    let start = Instant::now();
    let outcome = match cli.opts.seed.map(Ok).unwrap_or_else(default_seed) {
        Ok(seed) => run(&cli.command, seed, cli.opts.trials).map(|r| (seed, r)),
        Err(e) => Err(e),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((seed, report)) => {
            let code = report.exit_code();
            let out = json!({
                "command": args,
                "seed": seed,
                "checks": report.checks,
                "evidence": report.evidence,
                "timing": {"elapsed_ms": elapsed_ms},
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
            for c in &report.checks {
                let detail = c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
                let at = c.witness.as_ref().map(|w| format!(" at {:?}", w.tuple)).unwrap_or_default();
                eprintln!("{:<44} {:?}{at}{detail}", c.name, c.status);
            }
            eprintln!("exit {code}: {} checks in {elapsed_ms:.1} ms", report.checks.len());
            ExitCode::from(code)
        }
        Err(InputError(msg)) => {
            let out = json!({"command": args, "error": msg});
            println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
