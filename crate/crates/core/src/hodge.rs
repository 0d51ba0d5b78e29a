//! Recovering linear Hodge integrals from Hurwitz numbers.
//!
//! For fixed `(g, m)` each evaluation point `α` gives one linear equation
//! `Σ_μ (−1)^k I(μ) m_μ(α) = ⟨α⟩` in the unknown integrals `I(μ)`, with `⟨α⟩`
//! read off from `H^g_α` through the ELSV formula. Points are added smallest
//! first until the design matrix has full column rank, certified exactly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::combinatorics::{nonneg_vectors, Partition};
use crate::elsv::{bracket_from_hurwitz, elsv_rhs, monomial_symmetric, HodgeIntegralTable, HodgeMonomial};
use crate::engine::{compute, EngineChoice, EngineOptions, HurwitzInstance, Method};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RankTracker};
use crate::ExactRational;

pub(crate) fn check_stable(genus: u32, marks: usize) -> Result<()> {
    if marks == 0 || 2 * genus as usize + marks <= 2 {
        return Err(Error::UnstableRange { genus, marks });
    }
    Ok(())
}

/// Every `(ψ-exponents, k)` with `0 ≤ k ≤ g` and `Σ d_i + k = 3g − 3 + m`,
/// ordered by `k` then exponents lexicographically decreasing.
pub fn monomial_basis(genus: u32, marks: usize) -> Result<Vec<HodgeMonomial>> {
    check_stable(genus, marks)?;
    let dim = 3 * genus as usize + marks - 3;
    let mut out = Vec::new();
    for k in 0..=genus {
        let Some(rest) = dim.checked_sub(k as usize) else { break };
        for psi in nonneg_vectors(rest, marks) {
            out.push(HodgeMonomial::new(genus, psi, k)?);
        }
    }
    Ok(out)
}

/// Weakly decreasing `m`-tuples of positive integers, by increasing largest
/// entry and then lexicographically increasing.
#[derive(Clone, Debug)]
pub struct EvaluationPoints {
    marks: usize,
    max: usize,
    pending: std::vec::IntoIter<Vec<usize>>,
}

impl EvaluationPoints {
    pub fn new(marks: usize) -> Self {
        assert!(marks > 0);
        Self { marks, max: 0, pending: Vec::new().into_iter() }
    }
}

impl Iterator for EvaluationPoints {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if let Some(p) = self.pending.next() {
                return Some(p);
            }
            self.max += 1;
            // tails are decreasing vectors with entries in 1..=max; nonneg_vectors
            // yields them lexicographically decreasing, so collect and reverse
            let mut batch = Vec::new();
            let tail_len = self.marks - 1;
            for total in 0..=tail_len * (self.max - 1) {
                for shifted in nonneg_vectors(total, tail_len) {
                    if shifted.first().map_or(true, |&x| x < self.max) {
                        let mut p = vec![self.max];
                        p.extend(shifted.iter().map(|x| x + 1));
                        batch.push(p);
                    }
                }
            }
            batch.sort();
            self.pending = batch.into_iter();
        }
    }
}

/// Unknowns plus the points used to fit and to check them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionPlan {
    genus: u32,
    marks: usize,
    unknowns: Vec<HodgeMonomial>,
    points: Vec<Vec<usize>>,
    holdouts: Vec<Vec<usize>>,
}

fn q(n: usize) -> ExactRational {
    ExactRational::from_integer(BigInt::from(BigUint::from(n)))
}

/// Row of the design matrix at `point`: `(−1)^k m_μ(point)` per unknown.
pub fn design_row(unknowns: &[HodgeMonomial], point: &[usize]) -> Vec<ExactRational> {
    let x: Vec<ExactRational> = point.iter().map(|&a| q(a)).collect();
    unknowns
        .iter()
        .map(|mono| {
            let v = monomial_symmetric(mono.psi(), &x);
            if mono.sign() < 0 {
                -v
            } else {
                v
            }
        })
        .collect()
}

impl ExtractionPlan {
    /// Greedy rank-certified plan, followed by `holdout_count` further points
    /// from the same enumeration that were not used for fitting.
    pub fn build(genus: u32, marks: usize, holdout_count: usize) -> Result<Self> {
        let unknowns = monomial_basis(genus, marks)?;
        let mut tracker = RankTracker::new(unknowns.len());
        let mut points = Vec::new();
        let mut holdouts = Vec::new();
        for p in EvaluationPoints::new(marks) {
            if !tracker.is_full() {
                if tracker.insert(design_row(&unknowns, &p)) {
                    points.push(p);
                    continue;
                }
            } else if holdouts.len() == holdout_count {
                break;
            }
            if holdouts.len() < holdout_count {
                holdouts.push(p);
            }
        }
        Ok(Self { genus, marks, unknowns, points, holdouts })
    }

    /// A plan with caller-chosen points; the fit points must determine every
    /// unknown.
    pub fn with_points(genus: u32, marks: usize, points: Vec<Vec<usize>>, holdouts: Vec<Vec<usize>>) -> Result<Self> {
        let unknowns = monomial_basis(genus, marks)?;
        let canon = |ps: Vec<Vec<usize>>| -> Result<Vec<Vec<usize>>> {
            ps.into_iter()
                .map(|p| {
                    if p.len() != marks || p.contains(&0) {
                        return Err(Error::BadEvaluationPoint(p));
                    }
                    Ok(Partition::new(p)?.parts().to_vec())
                })
                .collect()
        };
        let points = canon(points)?;
        let holdouts = canon(holdouts)?;
        let plan = Self { genus, marks, unknowns, points, holdouts };
        let rank = plan.design_matrix().rank();
        if rank < plan.unknowns.len() {
            return Err(crate::linalg::LinalgError::Singular { rank, unknowns: plan.unknowns.len() }.into());
        }
        Ok(plan)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn marks(&self) -> usize {
        self.marks
    }

    pub fn unknowns(&self) -> &[HodgeMonomial] {
        &self.unknowns
    }

    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn holdouts(&self) -> &[Vec<usize>] {
        &self.holdouts
    }

    /// Same plan with `extra` appended to the fit points (overdetermined).
    pub fn with_extra_points(mut self, extra: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        for p in extra {
            if p.len() != self.marks || p.contains(&0) {
                return Err(Error::BadEvaluationPoint(p));
            }
            self.points.push(Partition::new(p)?.parts().to_vec());
        }
        Ok(self)
    }

    pub fn design_matrix(&self) -> Matrix<ExactRational> {
        Matrix::from_rows(self.points.iter().map(|p| design_row(&self.unknowns, p)).collect())
            .expect("rows share the unknown count")
    }

    pub fn instance(&self, point: &[usize]) -> Result<HurwitzInstance> {
        HurwitzInstance::new(self.genus.into(), Partition::new(point.to_vec())?)
    }

    /// Solves for the table given `⟨α⟩` at each fit point.
    pub fn solve(&self, brackets: &[ExactRational]) -> Result<HodgeIntegralTable> {
        let values = self.design_matrix().solve(brackets)?;
        let mut table = HodgeIntegralTable::new(self.genus, self.marks);
        for (mono, v) in self.unknowns.iter().zip(values) {
            table.insert(mono.clone(), v)?;
        }
        Ok(table)
    }
}

/// Top-level convenience: [`ExtractionPlan::build`].
pub fn build_plan(genus: u32, marks: usize, holdout_count: usize) -> Result<ExtractionPlan> {
    ExtractionPlan::build(genus, marks, holdout_count)
}

/// Computes `H^g_α` at each fit point (in parallel), inverts to brackets and
/// solves the exact linear system.
pub fn extract_table(plan: &ExtractionPlan, engine: EngineChoice, opts: &EngineOptions) -> Result<HodgeIntegralTable> {
    let brackets = plan
        .points()
        .par_iter()
        .map(|p| {
            let inst = plan.instance(p)?;
            let report = compute(&inst, engine, opts)?;
            bracket_from_hurwitz(&inst, &report.hurwitz_number)
        })
        .collect::<Result<Vec<_>>>()?;
    plan.solve(&brackets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoldoutCheck {
    pub point: Vec<usize>,
    pub hurwitz: Option<ExactRational>,
    pub elsv: Option<ExactRational>,
    pub method: Option<Method>,
    pub error: Option<String>,
}

impl HoldoutCheck {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.hurwitz.is_some() && self.hurwitz == self.elsv
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialityReport {
    pub genus: u32,
    pub marks: usize,
    pub checks: Vec<HoldoutCheck>,
}

impl PolynomialityReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.passed() == self.checks.len()
    }
}

impl fmt::Display for PolynomialityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "holdout verification for (g, m) = ({}, {})", self.genus, self.marks)?;
        for c in &self.checks {
            let show = |v: &Option<ExactRational>| v.as_ref().map_or("-".to_string(), ToString::to_string);
            let pt: Vec<String> = c.point.iter().map(usize::to_string).collect();
            write!(
                f,
                "  alpha=({}) H={} elsv={} method={} {}",
                pt.join(","),
                show(&c.hurwitz),
                show(&c.elsv),
                c.method.map_or("-", Method::as_str),
                if c.passed() { "PASS" } else { "FAIL" }
            )?;
            if let Some(e) = &c.error {
                write!(f, " ({e})")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}/{} holdouts pass", self.passed(), self.checks.len())
    }
}

/// Recomputes `H^g_α` at every holdout and compares it with the ELSV
/// right-hand side built from `table`. Failures are recorded, not returned.
pub fn verify_polynomiality(
    plan: &ExtractionPlan,
    table: &HodgeIntegralTable,
    engine: EngineChoice,
    opts: &EngineOptions,
) -> PolynomialityReport {
    let checks = plan
        .holdouts()
        .par_iter()
        .map(|p| {
            let mut check = HoldoutCheck { point: p.clone(), hurwitz: None, elsv: None, method: None, error: None };
            let inst = match plan.instance(p) {
                Ok(i) => i,
                Err(e) => {
                    check.error = Some(e.to_string());
                    return check;
                }
            };
            match compute(&inst, engine, opts) {
                Ok(rep) => {
                    check.method = Some(rep.method);
                    check.hurwitz = Some(rep.hurwitz_number);
                }
                Err(e) => check.error = Some(e.to_string()),
            }
            match elsv_rhs(&inst, table) {
                Ok(v) => check.elsv = Some(v),
                Err(e) => check.error = check.error.take().or(Some(e.to_string())),
            }
            check
        })
        .collect();
    PolynomialityReport { genus: plan.genus(), marks: plan.marks(), checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn mono(g: u32, psi: &[usize], k: u32) -> HodgeMonomial {
        HodgeMonomial::new(g, psi.to_vec(), k).unwrap()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(monomial_basis(1, 1).unwrap(), vec![mono(1, &[1], 0), mono(1, &[0], 1)]);
        assert_eq!(
            monomial_basis(1, 2).unwrap(),
            vec![mono(1, &[2, 0], 0), mono(1, &[1, 1], 0), mono(1, &[1, 0], 1)]
        );
        assert_eq!(
            monomial_basis(2, 1).unwrap(),
            vec![mono(2, &[4], 0), mono(2, &[3], 1), mono(2, &[2], 2)]
        );
        assert_eq!(monomial_basis(0, 3).unwrap(), vec![mono(0, &[0, 0, 0], 0)]);
        assert!(matches!(monomial_basis(0, 2), Err(Error::UnstableRange { .. })));
        assert!(matches!(monomial_basis(3, 0), Err(Error::UnstableRange { .. })));
    }

    #[test]
    fn basis_is_sorted_canonically() {
        for (g, m) in [(1, 3), (2, 2), (3, 1), (0, 5)] {
            let b = monomial_basis(g, m).unwrap();
            assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn point_enumeration_order() {
        let first: Vec<_> = EvaluationPoints::new(2).take(6).collect();
        assert_eq!(first, vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1], vec![3, 2], vec![3, 3]]);
        let first: Vec<_> = EvaluationPoints::new(1).take(3).collect();
        assert_eq!(first, vec![vec![1], vec![2], vec![3]]);
        let three: Vec<_> = EvaluationPoints::new(3).take(4).collect();
        assert_eq!(three, vec![vec![1, 1, 1], vec![2, 1, 1], vec![2, 2, 1], vec![2, 2, 2]]);
    }

    #[test]
    fn plan_examples() {
        let p = build_plan(1, 1, 2).unwrap();
        assert_eq!(p.points(), &[vec![1], vec![2]]);
        assert_eq!(p.holdouts(), &[vec![3], vec![4]]);

        let p = build_plan(1, 2, 1).unwrap();
        assert_eq!(p.points(), &[vec![1, 1], vec![2, 1], vec![2, 2]]);
        assert_eq!(p.holdouts(), &[vec![3, 1]]);
        assert_eq!(p.design_matrix().rank(), 3);

        let p = build_plan(0, 3, 0).unwrap();
        assert_eq!(p.points(), &[vec![1, 1, 1]]);
        assert!(p.holdouts().is_empty());
        assert_eq!(p.unknowns().len(), 1);
    }

    #[test]
    fn zero_brackets_give_zero_table() {
        let plan = build_plan(2, 2, 0).unwrap();
        let zeros = vec![ExactRational::zero(); plan.points().len()];
        let t = plan.solve(&zeros).unwrap();
        assert_eq!(t, HodgeIntegralTable::zero(2, 2).unwrap());
    }

    #[test]
    fn with_points_requires_full_rank() {
        assert!(ExtractionPlan::with_points(1, 1, vec![vec![1]], vec![]).is_err());
        assert!(ExtractionPlan::with_points(1, 1, vec![vec![1], vec![3]], vec![vec![2]]).is_ok());
        assert!(matches!(
            ExtractionPlan::with_points(1, 2, vec![vec![1]], vec![]),
            Err(Error::BadEvaluationPoint(_))
        ));
    }

    #[test]
    fn g1_m1_extraction() {
        let plan = build_plan(1, 1, 2).unwrap();
        let t = extract_table(&plan, EngineChoice::Brute, &EngineOptions::default()).unwrap();
        assert_eq!(t.value(&[1], 0), Some(&r(1, 24)));
        assert_eq!(t.value(&[0], 1), Some(&r(1, 24)));
        let report = verify_polynomiality(&plan, &t, EngineChoice::Brute, &EngineOptions::default());
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn corrupted_table_fails_a_holdout() {
        let plan = build_plan(1, 1, 2).unwrap();
        let t = extract_table(&plan, EngineChoice::ClassAlgebra, &EngineOptions::default()).unwrap();
        for (mono, value) in t.iter() {
            let mut bad = t.clone();
            bad.insert(mono.clone(), value + r(1, 1)).unwrap();
            let report = verify_polynomiality(&plan, &bad, EngineChoice::ClassAlgebra, &EngineOptions::default());
            assert!(!report.all_passed());
        }
    }

    #[test]
    fn budget_errors_are_reported_not_thrown() {
        let plan = build_plan(1, 1, 1).unwrap();
        let t = extract_table(&plan, EngineChoice::ClassAlgebra, &EngineOptions::default()).unwrap();
        let report = verify_polynomiality(&plan, &t, EngineChoice::Brute, &EngineOptions { budget: 1 });
        assert_eq!(report.passed(), 0);
        assert!(report.checks[0].error.as_deref().unwrap().contains("budget"));
    }
}
