//! Closed forms used as cross-checks against the counting engines.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{factorial, pow_usize, Partition};
use crate::error::{Error, Result};
use crate::ExactRational;

fn q(n: BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// `a^e` for a possibly negative exponent.
fn rational_pow(a: usize, e: i64) -> ExactRational {
    let p = q(pow_usize(a, e.unsigned_abs() as usize));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Number of factorizations of a fixed permutation of type `α` into
/// `k = Σ(α_i − 1)` transpositions: `k! ∏ α_i^{α_i−1} / α_i!`.
pub fn multiplicity_m_alpha(alpha: &Partition) -> ExactRational {
    let k = alpha.branching();
    let value = alpha
        .parts()
        .iter()
        .fold(q(factorial(k)), |acc, &a| acc * q(pow_usize(a, a - 1)) / q(factorial(a)));
    assert!(value.is_integer(), "m_alpha must be an integer, got {value}");
    value
}

/// `a^{a−2}`, the number of ways to write an `a`-cycle as a product of `a − 1`
/// transpositions (1 for `a = 1`).
pub fn cycle_factorization_count(a: usize) -> BigUint {
    match a {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        _ => pow_usize(a, a - 2),
    }
}

/// Which exponent to use for the final `d`-power in the two-part genus-0 formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExponentMode {
    /// `d^{d−1}`, as the formula is usually printed in the ELSV note.
    Paper,
    /// `d^{−1}`, which is what direct enumeration gives.
    #[default]
    Oracle,
}

/// Genus-0 Hurwitz numbers for one- and two-part profiles.
///
/// One part: `r! d^{d−2} / d!`. Two parts:
/// `r!/#Aut(α) · ∏ α_i^{α_i}/α_i! · F(d)` with `F` chosen by `mode`.
pub fn genus0_closed_form(alpha: &Partition, mode: ExponentMode) -> Result<ExactRational> {
    let d = alpha.size();
    let m = alpha.len();
    let r = d + m - 2;
    match m {
        1 => Ok(q(factorial(r)) * rational_pow(d, d as i64 - 2) / q(factorial(d))),
        2 => {
            let f = match mode {
                ExponentMode::Paper => rational_pow(d, d as i64 - 1),
                ExponentMode::Oracle => rational_pow(d, -1),
            };
            let prod = alpha
                .parts()
                .iter()
                .fold(ExactRational::one(), |acc, &a| acc * q(pow_usize(a, a)) / q(factorial(a)));
            Ok(q(factorial(r)) / q(alpha.aut_count()) * prod * f)
        }
        _ => Err(Error::NoClosedForm(m)),
    }
}
