//! The ELSV formula
//!
//! ```text
//! H^g_α = r!/#Aut(α) · ∏ α_i^{α_i}/α_i! · ⟨α⟩,
//! ⟨α⟩ = ∫_{M̄_{g,m}} (1 − λ_1 + ⋯ ± λ_g) / ∏ (1 − α_i ψ_i)
//! ```
//!
//! in both directions. Expanding the integrand, `⟨α⟩` is a symmetric polynomial
//! whose coefficient on the monomial symmetric function `m_d(α)` is
//! `(−1)^k ∫ ψ^d λ_k`.

use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{factorial, pow_usize};
use crate::engine::HurwitzInstance;
use crate::error::{Error, Result};
use crate::hodge::{check_stable, monomial_basis};
use crate::scalar::Scalar;
use crate::ExactRational;

/// `∫ ψ_1^{d_1} ⋯ ψ_m^{d_m} λ_k` over `M̄_{g,m}`, with the ψ-exponents sorted
/// decreasing (the integral is symmetric in them).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeMonomial {
    genus: u32,
    psi: Vec<usize>,
    lambda: u32,
}

impl HodgeMonomial {
    pub fn new(genus: u32, mut psi: Vec<usize>, lambda: u32) -> Result<Self> {
        let m = psi.len();
        check_stable(genus, m)?;
        if lambda > genus {
            return Err(Error::InvalidMonomial(format!("lambda index {lambda} exceeds genus {genus}")));
        }
        let dim = 3 * genus as usize + m - 3;
        let degree = psi.iter().sum::<usize>() + lambda as usize;
        if degree != dim {
            return Err(Error::InvalidMonomial(format!(
                "degree {degree} of psi{psi:?} lambda_{lambda} differs from dim M_{{{genus},{m}}} = {dim}"
            )));
        }
        psi.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { genus, psi, lambda })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn marks(&self) -> usize {
        self.psi.len()
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// `(−1)^k`, the sign the λ_k term carries in `1 − λ_1 + λ_2 − ⋯`.
    pub fn sign(&self) -> i32 {
        if self.lambda % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

// Canonical order: by (g, m), then λ-index ascending, then ψ-exponents
// lexicographically decreasing.
impl Ord for HodgeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.genus, self.marks(), self.lambda)
            .cmp(&(other.genus, other.marks(), other.lambda))
            .then_with(|| other.psi.cmp(&self.psi))
    }
}

impl PartialOrd for HodgeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HodgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let psi: Vec<String> = self.psi.iter().map(usize::to_string).collect();
        write!(f, "g={} psi=({}) lambda_{}", self.genus, psi.join(","), self.lambda)
    }
}

/// `m_e(x)`: the sum of `∏ x_i^{e_{σ(i)}}` over the distinct rearrangements of `e`.
pub fn monomial_symmetric<T: Scalar>(exponents: &[usize], point: &[T]) -> T {
    assert_eq!(exponents.len(), point.len(), "one exponent per variable");
    let mut e = exponents.to_vec();
    e.sort_unstable();
    let mut total = T::zero();
    loop {
        let term = point
            .iter()
            .zip(&e)
            .fold(T::one(), |acc, (x, &k)| acc * num_traits::pow(x.clone(), k));
        total = total + term;
        if !next_permutation(&mut e) {
            return total;
        }
    }
}

// Lexicographic successor; false once the sequence is non-increasing.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exact values of all linear Hodge integrals for one `(g, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeIntegralTable {
    genus: u32,
    marks: usize,
    entries: BTreeMap<HodgeMonomial, ExactRational>,
}

impl HodgeIntegralTable {
    pub fn new(genus: u32, marks: usize) -> Self {
        Self { genus, marks, entries: BTreeMap::new() }
    }

    /// The complete table with every entry zero.
    pub fn zero(genus: u32, marks: usize) -> Result<Self> {
        let mut t = Self::new(genus, marks);
        for mono in monomial_basis(genus, marks)? {
            t.entries.insert(mono, ExactRational::zero());
        }
        Ok(t)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn marks(&self) -> usize {
        self.marks
    }

    pub fn insert(&mut self, mono: HodgeMonomial, value: ExactRational) -> Result<Option<ExactRational>> {
        if mono.genus() != self.genus || mono.marks() != self.marks {
            return Err(Error::InvalidMonomial(format!(
                "{mono} does not belong in a (g, m) = ({}, {}) table",
                self.genus, self.marks
            )));
        }
        Ok(self.entries.insert(mono, value))
    }

    pub fn get(&self, mono: &HodgeMonomial) -> Option<&ExactRational> {
        self.entries.get(mono)
    }

    /// Looks up by ψ-exponents (any order) and λ-index.
    pub fn value(&self, psi: &[usize], lambda: u32) -> Option<&ExactRational> {
        let mono = HodgeMonomial::new(self.genus, psi.to_vec(), lambda).ok()?;
        self.entries.get(&mono)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HodgeMonomial, &ExactRational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn missing(&self) -> Result<Vec<HodgeMonomial>> {
        Ok(monomial_basis(self.genus, self.marks)?
            .into_iter()
            .filter(|m| !self.entries.contains_key(m))
            .collect())
    }

    fn ensure_complete(&self) -> Result<()> {
        let missing = self.missing()?;
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::IncompleteTable { genus: self.genus, marks: self.marks, missing })
        }
    }

    /// One line per monomial in canonical order: `g m d1,…,dm k num/den`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (mono, value) in &self.entries {
            let psi: Vec<String> = mono.psi().iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "{} {} {} {} {}/{}\n",
                self.genus,
                self.marks,
                psi.join(","),
                mono.lambda(),
                value.numer(),
                value.denom()
            ));
        }
        out
    }

    /// Parses [`Self::to_text`] output. Blank lines are skipped; values may
    /// omit a `/1` denominator.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut table: Option<Self> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let bad = |message: String| Error::TableParse { line, message };
            if raw.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let [g, m, psi, k, value] = fields[..] else {
                return Err(bad(format!("expected 5 fields, found {}", fields.len())));
            };
            let genus: u32 = g.parse().map_err(|_| bad(format!("bad genus '{g}'")))?;
            let marks: usize = m.parse().map_err(|_| bad(format!("bad mark count '{m}'")))?;
            let psi = psi
                .split(',')
                .map(|s| s.parse::<usize>().map_err(|_| bad(format!("bad psi exponent '{s}'"))))
                .collect::<Result<Vec<_>>>()?;
            if psi.len() != marks {
                return Err(bad(format!("{} psi exponents for m = {marks}", psi.len())));
            }
            let lambda: u32 = k.parse().map_err(|_| bad(format!("bad lambda index '{k}'")))?;
            let value = parse_rational(value).ok_or_else(|| bad(format!("bad value '{value}'")))?;
            let mono = HodgeMonomial::new(genus, psi, lambda).map_err(|e| bad(e.to_string()))?;
            let t = table.get_or_insert_with(|| Self::new(genus, marks));
            if t.insert(mono, value).map_err(|e| bad(e.to_string()))?.is_some() {
                return Err(bad("duplicate monomial".into()));
            }
        }
        table.ok_or(Error::TableParse { line: 0, message: "empty table".into() })
    }
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| ExactRational::new(n, d))
}

/// `⟨α⟩` evaluated from a table of Hodge integrals:
/// `Σ (−1)^k · I(d, k) · m_d(α)`.
pub fn bracket_from_table(genus: u32, marks: usize, alpha: &[usize], table: &HodgeIntegralTable) -> Result<ExactRational> {
    check_stable(genus, marks)?;
    if alpha.len() != marks || alpha.contains(&0) {
        return Err(Error::BadEvaluationPoint(alpha.to_vec()));
    }
    if table.genus() != genus || table.marks() != marks {
        return Err(Error::InvalidMonomial(format!(
            "table is for (g, m) = ({}, {}), requested ({genus}, {marks})",
            table.genus(),
            table.marks()
        )));
    }
    table.ensure_complete()?;
    let point: Vec<ExactRational> = alpha.iter().map(|&a| q(BigUint::from(a))).collect();
    Ok(table.iter().fold(ExactRational::zero(), |acc, (mono, value)| {
        if value.is_zero() {
            return acc;
        }
        let term = value * monomial_symmetric(mono.psi(), &point);
        if mono.sign() < 0 {
            acc - term
        } else {
            acc + term
        }
    }))
}

fn q(n: BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// `r!/#Aut(α) · ∏ α_i^{α_i}/α_i!`.
pub fn elsv_prefactor(inst: &HurwitzInstance) -> ExactRational {
    inst.alpha().parts().iter().fold(
        q(factorial(inst.r())) / q(inst.alpha().aut_count()),
        |acc, &a| acc * q(pow_usize(a, a)) / q(factorial(a)),
    )
}

/// Inverts the ELSV formula: `⟨α⟩ = H · #Aut(α)/r! · ∏ α_i!/α_i^{α_i}`.
pub fn bracket_from_hurwitz(inst: &HurwitzInstance, hurwitz: &ExactRational) -> Result<ExactRational> {
    check_stable(inst.genus(), inst.m())?;
    Ok(hurwitz / elsv_prefactor(inst))
}

/// The ELSV right-hand side for `inst` given the Hodge integrals in `table`.
pub fn elsv_rhs(inst: &HurwitzInstance, table: &HodgeIntegralTable) -> Result<ExactRational> {
    let bracket = bracket_from_table(inst.genus(), inst.m(), inst.alpha().parts(), table)?;
    Ok(elsv_prefactor(inst) * bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    fn inst(g: i64, parts: &[usize]) -> HurwitzInstance {
        HurwitzInstance::new(g, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    fn g1m1_table() -> HodgeIntegralTable {
        let mut t = HodgeIntegralTable::new(1, 1);
        t.insert(HodgeMonomial::new(1, vec![1], 0).unwrap(), r(1, 24)).unwrap();
        t.insert(HodgeMonomial::new(1, vec![0], 1).unwrap(), r(1, 24)).unwrap();
        t
    }

    #[test]
    fn monomial_validation() {
        assert!(HodgeMonomial::new(1, vec![1], 0).is_ok());
        assert!(HodgeMonomial::new(1, vec![0], 2).is_err());
        assert!(HodgeMonomial::new(1, vec![2], 0).is_err());
        assert!(matches!(HodgeMonomial::new(0, vec![0, 0], 0), Err(Error::UnstableRange { .. })));
        assert_eq!(HodgeMonomial::new(1, vec![0, 2], 0).unwrap().psi(), &[2, 0]);
    }

    #[test]
    fn monomial_symmetric_small() {
        let x = [r(2, 1), r(3, 1)];
        assert_eq!(monomial_symmetric(&[1, 0], &x), r(5, 1));
        assert_eq!(monomial_symmetric(&[1, 1], &x), r(6, 1));
        assert_eq!(monomial_symmetric(&[2, 0], &x), r(13, 1));
        let y = [1.0f64, 2.0, 3.0];
        assert_eq!(monomial_symmetric(&[1, 0, 0], &y), 6.0);
        assert_eq!(monomial_symmetric(&[1, 1, 0], &y), 11.0);
        assert_eq!(monomial_symmetric(&[0, 0, 0], &y), 1.0);
    }

    #[test]
    fn bracket_examples() {
        let t = g1m1_table();
        assert_eq!(bracket_from_table(1, 1, &[1], &t).unwrap(), r(0, 1));
        assert_eq!(bracket_from_table(1, 1, &[2], &t).unwrap(), r(1, 24));
        let z = HodgeIntegralTable::zero(2, 2).unwrap();
        assert_eq!(bracket_from_table(2, 2, &[3, 1], &z).unwrap(), r(0, 1));
    }

    #[test]
    fn incomplete_table_lists_missing() {
        let mut t = HodgeIntegralTable::new(1, 1);
        t.insert(HodgeMonomial::new(1, vec![1], 0).unwrap(), r(1, 24)).unwrap();
        match bracket_from_table(1, 1, &[2], &t) {
            Err(Error::IncompleteTable { missing, .. }) => {
                assert_eq!(missing, vec![HodgeMonomial::new(1, vec![0], 1).unwrap()]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(bracket_from_hurwitz(&inst(1, &[2]), &r(1, 2)).unwrap(), r(1, 24));
        assert_eq!(bracket_from_hurwitz(&inst(1, &[1]), &r(0, 1)).unwrap(), r(0, 1));
        assert_eq!(bracket_from_hurwitz(&inst(1, &[1, 1]), &r(1, 2)).unwrap(), r(1, 24));
        assert!(matches!(
            bracket_from_hurwitz(&inst(0, &[2]), &r(1, 1)),
            Err(Error::UnstableRange { genus: 0, marks: 1 })
        ));
    }

    #[test]
    fn forward_examples() {
        assert_eq!(elsv_rhs(&inst(1, &[2]), &g1m1_table()).unwrap(), r(1, 2));
        let z = HodgeIntegralTable::zero(1, 2).unwrap();
        assert_eq!(elsv_rhs(&inst(1, &[2, 1]), &z).unwrap(), r(0, 1));
    }

    #[test]
    fn text_round_trip_and_order() {
        let t = g1m1_table();
        let text = t.to_text();
        assert_eq!(text, "1 1 1 0 1/24\n1 1 0 1 1/24\n");
        assert_eq!(HodgeIntegralTable::from_text(&text).unwrap(), t);
        assert_eq!(HodgeIntegralTable::from_text(&text).unwrap().to_text(), text);
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(HodgeIntegralTable::from_text(""), Err(Error::TableParse { line: 0, .. })));
        assert!(matches!(
            HodgeIntegralTable::from_text("1 1 1 0 1/24\n1 1 1 0 1/24\n"),
            Err(Error::TableParse { line: 2, .. })
        ));
        assert!(matches!(HodgeIntegralTable::from_text("1 1 1 0"), Err(Error::TableParse { line: 1, .. })));
        assert!(matches!(HodgeIntegralTable::from_text("1 1 1 0 1/0"), Err(Error::TableParse { .. })));
        assert!(matches!(HodgeIntegralTable::from_text("1 2 1 0 1/2"), Err(Error::TableParse { .. })));
        assert!(matches!(
            HodgeIntegralTable::from_text("1 1 1 0 1/24\n2 1 4 0 1/1152\n"),
            Err(Error::TableParse { line: 2, .. })
        ));
        assert_eq!(HodgeIntegralTable::from_text("0 3 0,0,0 0 1").unwrap().len(), 1);
    }
}
