//! Self-check suites comparing the engines with each other and with closed forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{enumerate_partitions, partitions_of, Partition, Permutation};
use crate::engine::{
    brute_fixed_target_factorizations, compute, cycle_factorization_count, genus0_closed_form, hurwitz_brute,
    hurwitz_class_algebra, multiplicity_m_alpha, EngineChoice, EngineOptions, ExponentMode, HurwitzInstance,
};
use crate::error::Result;
use crate::hodge::{extract_table, verify_polynomiality, ExtractionPlan};
use crate::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Genus0,
    Oracle,
    Multiplicity,
    Polynomiality,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "genus0" => Suite::Genus0,
            "oracle" => Suite::Oracle,
            "multiplicity" => Suite::Multiplicity,
            "polynomiality" => Suite::Polynomiality,
            "all" => Suite::All,
            other => return Err(format!("unknown suite '{other}'")),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyBounds {
    /// Largest degree swept by the genus0, oracle and multiplicity suites.
    pub max_d: usize,
    /// Largest number of simple branch points in the oracle suite.
    pub max_r: usize,
    /// Largest cycle length for the `a^{a−2}` check.
    pub max_cycle: usize,
    pub engine: EngineOptions,
    /// Brute-force budget for polynomiality holdouts; larger holdouts fall back
    /// to class algebra.
    pub holdout_budget: u128,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        Self { max_d: 5, max_r: 8, max_cycle: 6, engine: EngineOptions::default(), holdout_budget: 10_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Reported for information only; never fails a suite.
    Note,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub suite: &'static str,
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<CheckRow>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.outcome != Outcome::Fail)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.rows.iter().filter(|r| r.outcome == outcome).count()
    }

    fn check(&mut self, suite: &'static str, label: String, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let outcome = if expected == actual { Outcome::Pass } else { Outcome::Fail };
        self.rows.push(CheckRow { suite, label, expected, actual, outcome });
    }

    fn note(&mut self, suite: &'static str, label: String, expected: impl ToString, actual: impl ToString) {
        self.rows.push(CheckRow {
            suite,
            label,
            expected: expected.to_string(),
            actual: actual.to_string(),
            outcome: Outcome::Note,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let tag = match r.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::Note => "NOTE",
            };
            writeln!(f, "{tag:4} {:13} {:40} expected={} actual={}", r.suite, r.label, r.expected, r.actual)?;
        }
        write!(
            f,
            "{} passed, {} failed, {} notes",
            self.count(Outcome::Pass),
            self.count(Outcome::Fail),
            self.count(Outcome::Note)
        )
    }
}

pub fn run(suite: Suite, bounds: &VerifyBounds) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let suites = match suite {
        Suite::All => vec![Suite::Genus0, Suite::Oracle, Suite::Multiplicity, Suite::Polynomiality],
        one => vec![one],
    };
    for s in suites {
        match s {
            Suite::Genus0 => genus0(bounds, &mut report)?,
            Suite::Oracle => oracle(bounds, &mut report)?,
            Suite::Multiplicity => multiplicity(bounds, &mut report)?,
            Suite::Polynomiality => polynomiality(bounds, &mut report)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn genus0(bounds: &VerifyBounds, report: &mut VerificationReport) -> Result<()> {
    for d in 1..=bounds.max_d {
        let alpha = Partition::new(vec![d])?;
        let inst = HurwitzInstance::new(0, alpha.clone())?;
        let brute = hurwitz_brute(&inst, &bounds.engine)?;
        let closed = genus0_closed_form(&alpha, ExponentMode::Oracle)?;
        report.check("genus0", format!("H^0_{alpha} one-part formula"), &closed, &brute.hurwitz_number);
    }
    for d in 2..=bounds.max_d {
        for alpha in enumerate_partitions(d, 2) {
            let inst = HurwitzInstance::new(0, alpha.clone())?;
            let brute = hurwitz_brute(&inst, &bounds.engine)?.hurwitz_number;
            let fast = hurwitz_class_algebra(&inst).hurwitz_number;
            let oracle = genus0_closed_form(&alpha, ExponentMode::Oracle)?;
            report.check("genus0", format!("H^0_{alpha} brute = class-algebra"), &brute, &fast);
            report.check("genus0", format!("H^0_{alpha} two-part, d^-1"), &oracle, &brute);
            let printed = genus0_closed_form(&alpha, ExponentMode::Paper)?;
            let verdict = if printed == brute { "matches" } else { "MISMATCH" };
            report.note("genus0", format!("H^0_{alpha} two-part, d^(d-1) {verdict}"), &printed, &brute);
        }
    }
    Ok(())
}

/// Every `(g, α)` with `|α| ≤ max_d` and `r ≤ max_r`.
pub fn oracle_instances(max_d: usize, max_r: usize) -> Vec<HurwitzInstance> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for alpha in partitions_of(d) {
            for g in 0.. {
                let inst = HurwitzInstance::new(g, alpha.clone()).expect("g >= 0");
                if inst.r() > max_r {
                    break;
                }
                out.push(inst);
            }
        }
    }
    out
}

fn oracle(bounds: &VerifyBounds, report: &mut VerificationReport) -> Result<()> {
    for inst in oracle_instances(bounds.max_d, bounds.max_r) {
        let brute = hurwitz_brute(&inst, &bounds.engine)?;
        let fast = hurwitz_class_algebra(&inst);
        report.check(
            "oracle",
            format!("g={} alpha={} r={}", inst.genus(), inst.alpha(), inst.r()),
            format!("{} ({})", brute.hurwitz_number, brute.tuple_count),
            format!("{} ({})", fast.hurwitz_number, fast.tuple_count),
        );
    }
    Ok(())
}

fn multiplicity(bounds: &VerifyBounds, report: &mut VerificationReport) -> Result<()> {
    for d in 1..=bounds.max_d {
        for alpha in partitions_of(d) {
            let xi = Permutation::of_type(&alpha);
            let count = brute_fixed_target_factorizations(&xi, alpha.branching(), &bounds.engine)?;
            let m_alpha = multiplicity_m_alpha(&alpha);
            report.check(
                "multiplicity",
                format!("m_alpha {alpha}"),
                &m_alpha,
                ExactRational::from_integer(BigInt::from(count)),
            );
        }
    }
    for a in 1..=bounds.max_cycle {
        let cycle = Permutation::of_type(&Partition::new(vec![a])?);
        let count = brute_fixed_target_factorizations(&cycle, a - 1, &bounds.engine)?;
        report.check("multiplicity", format!("{a}-cycle into {} transpositions", a - 1), cycle_factorization_count(a), count);
    }
    Ok(())
}

/// The plans used by the polynomiality suite.
pub fn polynomiality_plans() -> Result<Vec<ExtractionPlan>> {
    Ok(vec![
        ExtractionPlan::build(1, 1, 2)?,
        ExtractionPlan::build(1, 2, 2)?,
        ExtractionPlan::with_points(2, 1, vec![vec![1], vec![2], vec![3]], vec![vec![4], vec![5], vec![6]])?,
    ])
}

fn polynomiality(bounds: &VerifyBounds, report: &mut VerificationReport) -> Result<()> {
    let holdout_opts = EngineOptions { budget: bounds.holdout_budget };
    for plan in polynomiality_plans()? {
        let (g, m) = (plan.genus(), plan.marks());
        let table = extract_table(&plan, EngineChoice::Auto, &bounds.engine)?;
        for (mono, value) in table.iter() {
            report.note("polynomiality", format!("extracted {mono}"), "", value);
        }
        let over = plan.clone().with_extra_points(plan.holdouts().to_vec())?;
        let consistent = match extract_table(&over, EngineChoice::ClassAlgebra, &bounds.engine) {
            Ok(t) if t == table => "consistent".to_string(),
            Ok(_) => "different solution".to_string(),
            Err(e) => e.to_string(),
        };
        report.check("polynomiality", format!("(g,m)=({g},{m}) overdetermined fit"), "consistent", consistent);
        for c in verify_polynomiality(&plan, &table, EngineChoice::Auto, &holdout_opts).checks {
            let method = c.method.map_or("-", |m| m.as_str());
            let show = |v: &Option<ExactRational>| v.as_ref().map_or("-".into(), ToString::to_string);
            report.check(
                "polynomiality",
                format!("(g,m)=({g},{m}) holdout {:?} [{method}]", c.point),
                show(&c.hurwitz),
                c.error.clone().unwrap_or_else(|| show(&c.elsv)),
            );
        }
    }
    Ok(())
}

/// `H` recomputed with the given engine; used for cache spot checks.
pub fn recompute(genus: i64, alpha: &Partition, engine: EngineChoice, opts: &EngineOptions) -> Result<ExactRational> {
    let inst = HurwitzInstance::new(genus, alpha.clone())?;
    Ok(compute(&inst, engine, opts)?.hurwitz_number)
}
