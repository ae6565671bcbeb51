//! The full verification run: every suite, a deterministic JSON report.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeffring::{Coefficient, Symbol};
use crate::curves::{verify_curve_invariance_with, verify_curve_space, verify_e8_s0_factor_form, CurveSpec};
use crate::error::{Error, Result};
use crate::fpoly::{
    boundary_runs, check_conditions, check_nonlog, construct_via_weyl, in_span, normalize_numeric,
    series_solution_oracle, solve_linear_system, ConditionTemplate, NonLogQuery, Sampler, SeriesCase,
};
use crate::lattice::{orbit, parse_word, verify_coxeter_relations, GroupSpec, GroupType, LatticeVector};
use crate::qseries::{adjoint, identities};
use crate::skew::{LinearFactor, SkewKey};
use crate::tau::{
    ex_bilinear, example_values, hirota_miwa_printed, seed_relations, strip_tau, transport_relation, verify_relation,
    TauSystem,
};
use crate::weyl::{
    examples, generic_probe_states, orbit_sections, two_parameter_family, verify_k_invariants, Mutation, SectionProbe,
    TauSection, WeylAction,
};

pub const SCHEMA_VERSION: u32 = 1;

pub const SUITES: [&str; 10] = [
    "adjoint",
    "bilinear",
    "coxeter",
    "curves",
    "examples",
    "fpoly",
    "identities",
    "invariants",
    "nonlog",
    "q1-limits",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random specializations per stochastic check.
    pub trials: usize,
    pub only: Option<BTreeSet<String>>,
    /// Corrupt every generator table, to show the suites can fail.
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2024, trials: 3, only: None, mutation: None }
    }
}

impl SuiteConfig {
    fn action(&self, kind: GroupType) -> WeylAction {
        let a = WeylAction::new(GroupSpec::new(kind));
        match self.mutation {
            Some(m) => a.with_mutation(m),
            None => a,
        }
    }

    pub fn selected(&self) -> Result<Vec<&'static str>> {
        if let Some(only) = &self.only {
            if let Some(bad) = only.iter().find(|s| !SUITES.contains(&s.as_str())) {
                return Err(Error::Invalid(format!("unknown suite {bad}; expected one of {}", SUITES.join(", "))));
            }
        }
        Ok(SUITES.iter().copied().filter(|s| self.only.as_ref().is_none_or(|o| o.contains(*s))).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Check { name: name.into(), passed, detail }
    }

    fn from(name: impl Into<String>, r: Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Check::new(name, true, None),
            Ok(Some(w)) => Check::new(name, false, Some(w)),
            Err(e) => Check::new(name, false, Some(format!("error: {e}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperReport {
    pub schema_version: u32,
    pub seed: u64,
    pub trials: usize,
    pub mutation: Option<String>,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

impl PaperReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// Run the selected suites concurrently; the report is ordered by suite
/// name.
pub fn verify_paper(cfg: &SuiteConfig) -> Result<PaperReport> {
    let names = cfg.selected()?;
    let mut suites: Vec<SuiteResult> = names
        .par_iter()
        .map(|&name| {
            let checks = run_suite(name, cfg);
            SuiteResult { name: name.into(), passed: checks.iter().all(|c| c.passed), checks }
        })
        .collect();
    suites.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(PaperReport {
        schema_version: SCHEMA_VERSION,
        seed: cfg.seed,
        trials: cfg.trials,
        mutation: cfg.mutation.map(|m| format!("{m:?}")),
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn run_suite(name: &str, cfg: &SuiteConfig) -> Vec<Check> {
    match name {
        "adjoint" => adjoint_suite(cfg),
        "bilinear" => bilinear_suite(cfg),
        "coxeter" => coxeter_suite(cfg),
        "curves" => curves_suite(cfg),
        "examples" => examples_suite(cfg),
        "fpoly" => fpoly_suite(cfg),
        "identities" => identities_suite(cfg),
        "invariants" => invariants_suite(cfg),
        "nonlog" => nonlog_suite(cfg),
        "q1-limits" => q1_suite(cfg),
        _ => unreachable!("suite names are validated"),
    }
}

fn coxeter_suite(cfg: &SuiteConfig) -> Vec<Check> {
    GroupType::ALL
        .iter()
        .map(|&kind| {
            let a = cfg.action(kind);
            let r = orbit_sections(&a, 2).map(|mut states| {
                states.extend(generic_probe_states(&a.spec));
                let rep = verify_coxeter_relations(&a.spec, &SectionProbe(&a), &states);
                rep.violation.map(|v| format!("(s{} s{})^{}: {}", v.i, v.j, v.order, v.witness))
            });
            Check::from(format!("{kind} relations"), r)
        })
        .collect()
}

fn word_example(
    a: &WeylAction,
    word: &str,
    seed: usize,
    lambda: LatticeVector,
    f: crate::skew::SkewElement,
) -> Result<Option<String>> {
    let s = a.apply_word(&parse_word(word)?, &TauSection::seed(&a.spec, seed))?;
    let (lambda, f) = match a.mode {
        crate::weyl::Mode::Quantum => (lambda, f),
        crate::weyl::Mode::Classical => (lambda, f.classical_limit()),
    };
    Ok(if s.lambda != lambda {
        Some(format!("class {} instead of {lambda}", s.lambda))
    } else if s.f != f {
        Some(format!("polynomial {}", s.f.pretty()))
    } else {
        None
    })
}

fn examples_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let q = cfg.action(GroupType::E8);
    let mut c = WeylAction::classical(GroupSpec::new(GroupType::E8));
    c.mutation = cfg.mutation;
    let mut out = Vec::new();
    for (label, a) in [("quantum", &q), ("classical", &c)] {
        out.push(Check::from(
            format!("first worked example ({label})"),
            word_example(a, examples::EX1_WORD, 1, examples::ex1_lambda(), examples::ex1_expected()),
        ));
        out.push(Check::from(
            format!("second worked example ({label})"),
            word_example(a, examples::EX2_WORD, 11, examples::ex2_lambda(), examples::ex2_expected()),
        ));
    }
    out.push(Check::from(
        "two-parameter family under s3",
        q.act_on_section(3, &two_parameter_family()).map(|img| {
            let (f, l) = examples::two_parameter_image();
            (img.f != f || img.lambda != l).then(|| format!("image {} on {}", img.f.pretty(), img.lambda))
        }),
    ));
    let sys = TauSystem::new(q.clone());
    out.push(Check::from(
        "example relation tau values",
        (|| -> Result<Option<String>> {
            for (l, v) in example_values() {
                let got = sys.tau(&l, 8)?.value();
                if got != v {
                    return Ok(Some(format!("tau({l}) = {}", got.pretty())));
                }
            }
            let vals = example_values();
            let lookup = |l: &LatticeVector| -> Result<TauSection> {
                let (_, v) = vals.iter().find(|(m, _)| m == l).ok_or_else(|| Error::Invalid(format!("{l}")))?;
                let (_, f) = strip_tau(v)?;
                Ok(TauSection { f, lambda: l.clone() })
            };
            let rep = verify_relation(&ex_bilinear(), &lookup)?;
            Ok((!rep.passed || !rep.lattice_ok).then(|| format!("{rep:?}")))
        })(),
    ));
    out
}

fn invariants_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let r = verify_k_invariants(&cfg.action(GroupType::E8)).map(|rep| {
        (!rep.passed())
            .then(|| format!("{} of {} checks fail, first {:?}", rep.failures.len(), rep.checks, rep.failures[0]))
    });
    vec![Check::from("k1, k2 fixed by s0..s8", r)]
}

fn adjoint_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let a = cfg.action(GroupType::E8);
    let syms = [Symbol::X, Symbol::Y, Symbol::Tau(10), Symbol::Tau(11), Symbol::Tau(1), Symbol::Tau(7)];
    let mut out = Vec::new();
    for g in [0, 3] {
        for sym in syms {
            let r = adjoint::verify_adjoint_realization(&a, g, sym, 6, cfg.trials, cfg.seed)
                .map(|rep| rep.witness.or_else(|| (!rep.passed).then(String::new)));
            out.push(Check::from(format!("s{g} on {}", sym.name()), r));
        }
    }
    for kind in GroupType::ALL {
        let a = cfg.action(kind);
        let r = adjoint::adjoint_suite(&a, 4, 1, cfg.seed).map(|reps| {
            reps.into_iter().find(|r| !r.passed).map(|r| format!("s{} on {}: {:?}", r.generator, r.symbol, r.witness))
        });
        out.push(Check::from(format!("{kind} all reflections on all variables"), r));
    }
    out
}

fn identities_suite(cfg: &SuiteConfig) -> Vec<Check> {
    match identities::identity_suite(8, cfg.trials.max(3), cfg.seed) {
        Ok(reps) => reps.into_iter().map(|r| Check::new(r.name, r.passed, r.witness)).collect(),
        Err(e) => vec![Check::from("identities", Err(e))],
    }
}

fn fpoly_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in GroupType::ALL {
        let a = cfg.action(kind);
        let depth = if kind == GroupType::E8 { 6 } else { 4 };
        let entries = orbit(&a.spec, depth).entries;
        // Spread the sample over word lengths.
        let step = (entries.len() / 6).max(1);
        let picked: Vec<_> = entries.iter().step_by(step).chain(entries.last()).collect();
        let mut sm = Sampler::new(cfg.seed ^ kind as u64);
        let r = (|| -> Result<Option<String>> {
            let mut classes = 0;
            for e in &picked {
                let s = construct_via_weyl(&a, &e.word, e.seed)?;
                let t = ConditionTemplate::new(&a.spec, &s.lambda);
                if !check_conditions(&t, &s.f).passed() {
                    return Ok(Some(format!("{} fails its conditions", s.lambda)));
                }
                let factors: Vec<LinearFactor> =
                    t.x_slices.iter().chain(&t.y_slices).flat_map(|s| s.factors.clone()).collect();
                let specs: Vec<_> =
                    (0..cfg.trials).map(|_| sm.generic_for(a.spec.n, &[], None, &factors)).collect::<Result<_>>()?;
                let sol = solve_linear_system(&t, &specs)?;
                if sol.dimension != 1 || s.lambda.dimension_count() != 1 {
                    return Ok(Some(format!(
                        "{}: dimension {} vs count {}",
                        s.lambda,
                        sol.dimension,
                        s.lambda.dimension_count()
                    )));
                }
                for (sp, basis) in specs.iter().zip(&sol.bases) {
                    let fs = s.f.specialize(sp)?;
                    if !in_span(basis, &fs, s.lambda.d1, s.lambda.d2) || normalize_numeric(&basis[0])? != fs {
                        return Ok(Some(format!("{}: normalized solution differs", s.lambda)));
                    }
                }
                classes += 1;
            }
            Ok((classes < 3).then(|| format!("only {classes} classes")))
        })();
        out.push(Check::from(format!("{kind} dual characterization on {} classes", picked.len()), r));
    }
    out
}

fn nonlog_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in GroupType::ALL {
        let a = cfg.action(kind);
        let mut sm = Sampler::new(cfg.seed.wrapping_add(kind as u64));
        let r = (|| -> Result<Option<String>> {
            for e in orbit(&a.spec, 4).entries.iter().step_by(3) {
                let s = construct_via_weyl(&a, &e.word, e.seed)?;
                let sp = sm.assignment(a.spec.n, &[], None);
                for (b, c, m, top) in boundary_runs(&a.spec, &s.lambda) {
                    let q = NonLogQuery::new(s.f.clone(), b, c, m).with_top(top);
                    if !check_nonlog(&q).passed() {
                        return Ok(Some(format!("{} {b:?}: pattern fails", s.lambda)));
                    }
                    let rep = series_solution_oracle(&q, &sp, m + 1)?;
                    if !rep.non_logarithmic() {
                        return Ok(Some(format!("{} {b:?}: {rep:?}", s.lambda)));
                    }
                }
            }
            Ok(None)
        })();
        out.push(Check::from(format!("{kind} orbit boundaries are non-logarithmic"), r));
    }
    // A perturbed coefficient must turn a resonance logarithmic.
    let r = (|| -> Result<Option<String>> {
        let a = cfg.action(GroupType::E8);
        let s = construct_via_weyl(&a, &parse_word(examples::EX2_WORD)?, 11)?;
        let (b, c, m, top) = boundary_runs(&a.spec, &s.lambda)
            .into_iter()
            .find(|r| r.0 == crate::fpoly::Boundary::XInf && r.2 == 2)
            .ok_or_else(|| Error::Invalid("no run of length 2 at x = ∞".into()))?;
        let mut broken = s.f.clone();
        broken.add_term(SkewKey::xy(1, 0), Coefficient::int(1));
        let q = NonLogQuery::new(broken, b, c, m).with_top(top);
        let sp = Sampler::new(cfg.seed).assignment(11, &[], None);
        let rep = series_solution_oracle(&q, &sp, 3)?;
        let flipped = !check_nonlog(&q).passed() && rep.steps.iter().any(|s| s.1 == SeriesCase::Case2a);
        Ok((!flipped).then(|| "perturbation not detected".to_string()))
    })();
    out.push(Check::from("perturbed polynomial is logarithmic", r));
    out
}

fn curves_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in GroupType::ALL {
        let cs = CurveSpec::new(kind);
        let space =
            verify_curve_space(&cs, cfg.seed, cfg.trials).map(|rep| (!rep.passed()).then(|| format!("{rep:?}")));
        out.push(Check::from(format!("{kind} curve space"), space));
        let curve = cs.explicit_curve();
        let t = cs.template(&cs.lambda).reduced(&cs.constraint_map());
        let cond = check_conditions(&t, &curve);
        let failing = (!cond.passed()).then(|| format!("{:?}", cond.failing().next()));
        out.push(Check::new(format!("{kind} printed curve conditions"), cond.passed(), failing));
        let mut a = cs.action();
        a.mutation = cfg.mutation;
        let rep = verify_curve_invariance_with(&cs, &a, &curve);
        let detail = (!rep.passed()).then(|| format!("lambda fixed {}, failures {:?}", rep.lambda_fixed, rep.failures));
        out.push(Check::new(format!("{kind} curve invariance"), rep.passed(), detail));
        if kind == GroupType::E8 {
            out.push(Check::from(
                "E8 s0 factor form",
                verify_e8_s0_factor_form(&cs, &curve).map(|ok| (!ok).then(|| "cross-multiplied sides differ".into())),
            ));
        }
    }
    out
}

fn bilinear_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let sys = TauSystem::new(cfg.action(GroupType::E8));
    let lookup = |l: &LatticeVector| -> Result<TauSection> { Ok(sys.tau(l, 8)?.section) };
    let mut out = Vec::new();
    let first_failure = |rels: &[crate::tau::BilinearRelation]| -> Result<Option<String>> {
        for r in rels {
            let rep = verify_relation(r, &lookup)?;
            if !rep.passed || !rep.lattice_ok {
                return Ok(Some(format!("{}: {:?}", r.name, rep.witness)));
            }
        }
        Ok(None)
    };
    out.push(Check::from("seed relations", first_failure(&seed_relations())));
    out.push(Check::from("example relation", first_failure(&[ex_bilinear()])));
    out.push(Check::from("Hirota-Miwa form", first_failure(&hirota_miwa_printed())));
    let base: Vec<_> = seed_relations().into_iter().chain(hirota_miwa_printed()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let jobs: Vec<(usize, Vec<usize>)> = (0..60)
        .map(|_| {
            let len = rng.gen_range(1..=4);
            (rng.gen_range(0..base.len()), (0..len).map(|_| rng.gen_range(0..9)).collect())
        })
        .collect();
    let r = (|| -> Result<Option<String>> {
        for (k, word) in &jobs {
            let (_, rep) = transport_relation(&sys, &base[*k], word, &lookup)?;
            if !rep.passed || !rep.lattice_ok {
                return Ok(Some(format!("{}: {:?}", rep.name, rep.witness)));
            }
        }
        Ok(None)
    })();
    out.push(Check::from(format!("{} transported relations", jobs.len()), r));
    out.push(Check::from(
        "path independence",
        sys.path_consistency(3, 60)
            .map(|rep| (!rep.failures.is_empty() || rep.classes < 20).then(|| format!("{rep:?}"))),
    ));
    out
}

fn q1_suite(cfg: &SuiteConfig) -> Vec<Check> {
    GroupType::ALL
        .iter()
        .map(|&kind| {
            let qa = cfg.action(kind);
            let mut ca = WeylAction::classical(qa.spec.clone());
            ca.mutation = cfg.mutation;
            let r = (|| -> Result<Option<String>> {
                for e in orbit(&qa.spec, 3).entries {
                    let seed = TauSection::seed(&qa.spec, e.seed);
                    let qs = qa.apply_word(&e.word, &seed)?;
                    let cs = ca.apply_word(&e.word, &seed)?;
                    if qs.classical_limit() != cs {
                        return Ok(Some(format!("word {:?}", e.word)));
                    }
                }
                Ok(None)
            })();
            Check::from(format!("{kind} q = 1 limit of orbit"), r)
        })
        .collect()
}
