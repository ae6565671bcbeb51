mod render;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qweyl::curves::{verify_curve_invariance, verify_curve_space, verify_e8_s0_factor_form, CurveSpec};
use qweyl::fpoly::{
    check_conditions, construct_via_weyl, in_span, normalize_numeric, solve_linear_system, ConditionTemplate, Sampler,
};
use qweyl::lattice::{orbit, parse_word, GroupSpec, GroupType};
use qweyl::qseries::identities;
use qweyl::suite::{verify_paper, SuiteConfig};
use qweyl::tau::{ex_bilinear, hirota_miwa_printed, seed_relations, transport_relation, verify_relation, TauSystem};
use qweyl::weyl::{Mutation, TauSection, WeylAction};

#[derive(Parser, Debug)]
#[command(name = "qweyl", version, about = "Quantum birational Weyl group actions: computations and checks")]
struct Cli {
    /// Group type: E8, E7, E6 or D5.
    #[arg(long = "type", global = true, default_value = "E8", value_parser = parse_type)]
    kind: GroupType,
    /// Seed for every random specialization.
    #[arg(long, global = true, default_value_t = 2024)]
    rng_seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Dilog,
    Heine,
    Binom,
    #[value(name = "braid-G")]
    BraidG,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Apply a word to the seed τ_k.
    Act {
        /// Generators, leftmost applied last, e.g. "3 2 1 0".
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value_t = 1)]
        point: usize,
        /// Use the q = 1 action.
        #[arg(long)]
        classical: bool,
    },
    /// Build F for a word and check it against the boundary conditions.
    Fpoly {
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, default_value_t = 1)]
        point: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// The invariant curve of the chosen type.
    Curve {
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// The E8 bilinear relations, optionally transported by a word.
    Bilinear {
        #[arg(long)]
        word: Option<String>,
    },
    /// Truncated-series identities.
    Identities {
        #[arg(long, value_enum)]
        which: Option<Which>,
        #[arg(long, default_value_t = 8)]
        order: u32,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Classes reachable from the points by words up to a length.
    Orbit {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Every suite, as one report.
    VerifyPaper {
        /// Comma-separated suite names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Corrupt the generator tables: shift-position:G or drop-tau:G.
        #[arg(long, value_parser = parse_mutation)]
        mutation: Option<Mutation>,
    },
}

fn parse_type(s: &str) -> Result<GroupType, String> {
    s.parse().map_err(|e: qweyl::Error| e.to_string())
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    let (kind, g) = s.split_once(':').ok_or("expected KIND:GENERATOR")?;
    let g: usize = g.parse().map_err(|_| format!("bad generator `{g}`"))?;
    match kind {
        "shift-position" => Ok(Mutation::ShiftPositionFactor(g)),
        "drop-tau" => Ok(Mutation::DropTauFactor(g)),
        _ => Err(format!("unknown mutation `{kind}`")),
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<qweyl::Error> for Failure {
    fn from(e: qweyl::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn usage(e: qweyl::Error) -> Failure {
    Failure::Usage(e.to_string())
}

/// A report and whether every check in it passed.
type Outcome = (Value, bool);

fn word_arg(spec: &GroupSpec, s: &str) -> Result<Vec<usize>, Failure> {
    let w = parse_word(s).map_err(usage)?;
    spec.check_word(&w).map_err(usage)?;
    Ok(w)
}

fn point_arg(spec: &GroupSpec, k: usize) -> Result<usize, Failure> {
    if (1..=spec.n).contains(&k) {
        Ok(k)
    } else {
        Err(Failure::Usage(format!("point must be in 1..={}", spec.n)))
    }
}

fn act(cli: &Cli, word: &str, point: usize, classical: bool) -> Result<Outcome, Failure> {
    let spec = GroupSpec::new(cli.kind);
    let w = word_arg(&spec, word)?;
    let k = point_arg(&spec, point)?;
    let a = if classical { WeylAction::classical(spec.clone()) } else { WeylAction::new(spec.clone()) };
    let s = a.apply_word(&w, &TauSection::seed(&spec, k))?;
    let v = json!({
        "type": cli.kind.to_string(),
        "word": w,
        "point": k,
        "classical": classical,
        "rng_seed": cli.rng_seed,
        "lambda": s.lambda.to_string(),
        "section": s.to_json(),
        "polynomial": s.f.pretty(),
    });
    Ok((v, true))
}

fn fpoly(cli: &Cli, word: &str, point: usize, trials: usize) -> Result<Outcome, Failure> {
    let spec = GroupSpec::new(cli.kind);
    let w = word_arg(&spec, word)?;
    let k = point_arg(&spec, point)?;
    let a = WeylAction::new(spec.clone());
    let s = construct_via_weyl(&a, &w, k)?;
    let t = ConditionTemplate::new(&spec, &s.lambda);
    let cond = check_conditions(&t, &s.f);
    let factors: Vec<_> = t.x_slices.iter().chain(&t.y_slices).flat_map(|s| s.factors.clone()).collect();
    let mut sm = Sampler::new(cli.rng_seed);
    let specs = (0..trials).map(|_| sm.generic_for(spec.n, &[], None, &factors)).collect::<Result<Vec<_>, _>>()?;
    let sol = solve_linear_system(&t, &specs)?;
    let mut unique = sol.dimension == 1;
    for (sp, basis) in specs.iter().zip(&sol.bases) {
        let fs = s.f.specialize(sp)?;
        unique &= in_span(basis, &fs, s.lambda.d1, s.lambda.d2) && normalize_numeric(&basis[0])? == fs;
    }
    let count = s.lambda.dimension_count();
    let passed = cond.passed() && unique && count == 1;
    let v = json!({
        "type": cli.kind.to_string(),
        "word": w,
        "point": k,
        "lambda": s.lambda.to_string(),
        "polynomial": s.f.pretty(),
        "conditions_passed": cond.passed(),
        "dimension_count": count,
        "solution_dimension": sol.dimension,
        "matches_normalized_solution": unique,
        "rng_seed": cli.rng_seed,
        "trials": trials,
        "passed": passed,
    });
    Ok((v, passed))
}

fn curve(cli: &Cli, trials: usize) -> Result<Outcome, Failure> {
    let cs = CurveSpec::new(cli.kind);
    let p = cs.explicit_curve();
    let space = verify_curve_space(&cs, cli.rng_seed, trials)?;
    let t = cs.template(&cs.lambda).reduced(&cs.constraint_map());
    let cond = check_conditions(&t, &p).passed();
    let inv = verify_curve_invariance(&cs, &p);
    let factor = match cli.kind {
        GroupType::E8 => Some(verify_e8_s0_factor_form(&cs, &p)?),
        _ => None,
    };
    let passed = space.passed() && cond && inv.passed() && factor != Some(false);
    let v = json!({
        "type": cli.kind.to_string(),
        "lambda": cs.lambda.to_string(),
        "eliminated": cs.eliminated.name(),
        "curve": p.pretty(),
        "space": serde_json::to_value(&space).expect("serializable"),
        "conditions_passed": cond,
        "invariance": serde_json::to_value(&inv).expect("serializable"),
        "s0_factor_form": factor,
        "rng_seed": cli.rng_seed,
        "passed": passed,
    });
    Ok((v, passed))
}

fn bilinear(cli: &Cli, word: Option<&str>) -> Result<Outcome, Failure> {
    if cli.kind != GroupType::E8 {
        return Err(Failure::Usage("the bilinear system is implemented for E8".into()));
    }
    let sys = TauSystem::default();
    let lookup = |l: &qweyl::lattice::LatticeVector| -> qweyl::Result<TauSection> { Ok(sys.tau(l, 8)?.section) };
    let mut rels = seed_relations();
    rels.push(ex_bilinear());
    rels.extend(hirota_miwa_printed());
    let mut reports = Vec::new();
    match word {
        None => {
            for r in &rels {
                reports.push(verify_relation(r, &lookup)?);
            }
        }
        Some(w) => {
            let w = word_arg(sys.spec(), w)?;
            for r in &rels {
                reports.push(transport_relation(&sys, r, &w, &lookup)?.1);
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed && r.lattice_ok);
    let v = json!({
        "type": "E8",
        "word": word,
        "relations": serde_json::to_value(&reports).expect("serializable"),
        "rng_seed": cli.rng_seed,
        "passed": passed,
    });
    Ok((v, passed))
}

fn identities_cmd(cli: &Cli, which: Option<Which>, order: u32, trials: usize) -> Result<Outcome, Failure> {
    if order < 1 {
        return Err(Failure::Usage("order must be at least 1".into()));
    }
    let seed = cli.rng_seed;
    let reports = match which {
        None => identities::identity_suite(order, trials, seed)?,
        Some(Which::Dilog) => vec![identities::verify_dilog_identity(order, trials, seed)],
        Some(Which::Heine) => identities::verify_heine_chain(order, trials, seed),
        Some(Which::Binom) => vec![identities::verify_binomial(order, trials, seed)],
        Some(Which::BraidG) => vec![identities::verify_braid_product(order, trials, seed)],
    };
    let passed = reports.iter().all(|r| r.passed);
    let v = json!({
        "rng_seed": seed,
        "order": order,
        "trials": trials,
        "identities": serde_json::to_value(&reports).expect("serializable"),
        "passed": passed,
    });
    Ok((v, passed))
}

fn orbit_cmd(cli: &Cli, depth: usize) -> Result<Outcome, Failure> {
    let spec = GroupSpec::new(cli.kind);
    let o = orbit(&spec, depth);
    let entries: Vec<Value> =
        o.entries.iter().map(|e| json!({ "lambda": e.lambda.to_string(), "point": e.seed, "word": e.word })).collect();
    let v = json!({
        "type": cli.kind.to_string(),
        "depth": depth,
        "rng_seed": cli.rng_seed,
        "classes": entries.len(),
        "coincidences": o.coincidences.len(),
        "entries": entries,
    });
    Ok((v, true))
}

fn verify(cli: &Cli, only: &[String], trials: usize, mutation: Option<Mutation>) -> Result<Outcome, Failure> {
    let cfg = SuiteConfig {
        seed: cli.rng_seed,
        trials,
        only: (!only.is_empty()).then(|| only.iter().cloned().collect::<BTreeSet<_>>()),
        mutation,
    };
    cfg.selected().map_err(usage)?;
    let r = verify_paper(&cfg)?;
    let v = serde_json::to_value(&r).expect("serializable");
    Ok((v, r.passed))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.cmd {
        Cmd::Act { word, point, classical } => act(cli, word, *point, *classical),
        Cmd::Fpoly { word, point, trials } => fpoly(cli, word, *point, *trials),
        Cmd::Curve { trials } => curve(cli, *trials),
        Cmd::Bilinear { word } => bilinear(cli, word.as_deref()),
        Cmd::Identities { which, order, trials } => identities_cmd(cli, *which, *order, *trials),
        Cmd::Orbit { depth } => orbit_cmd(cli, *depth),
        Cmd::VerifyPaper { only, trials, mutation } => verify(cli, only, *trials, *mutation),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is set once");
    }
    let (value, passed) = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
        Format::Pretty => render::pretty(&value),
    };
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
