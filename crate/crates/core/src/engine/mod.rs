//! Connected Hurwitz numbers `H^g_α = (1/d!) · #{(τ_1, …, τ_r)}`, counting
//! ordered tuples of transpositions that generate `S_d` and multiply to a
//! permutation of cycle type `α`.

mod brute;
mod class_algebra;
mod formulas;
mod instance;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

pub use brute::{brute_fixed_target_factorizations, candidate_tuples, hurwitz_brute};
pub use class_algebra::{fixed_target_counts, hurwitz_class_algebra, TransitionTable};
pub use formulas::{cycle_factorization_count, genus0_closed_form, multiplicity_m_alpha, ExponentMode};
pub use instance::{make_instance, HurwitzInstance};

use crate::combinatorics::factorial;
use crate::error::Result;
use crate::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    ClassAlgebra,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::ClassAlgebra => "class-algebra",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Method::Brute),
            "class-algebra" | "class_algebra" => Ok(Method::ClassAlgebra),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

/// Which engine to run; `Auto` picks brute force when the budget admits it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EngineChoice {
    Brute,
    ClassAlgebra,
    #[default]
    Auto,
}

impl EngineChoice {
    pub fn resolve(self, inst: &HurwitzInstance, opts: &EngineOptions) -> Method {
        match self {
            EngineChoice::Brute => Method::Brute,
            EngineChoice::ClassAlgebra => Method::ClassAlgebra,
            EngineChoice::Auto => {
                if candidate_tuples(inst.d(), inst.r()) <= BigUint::from(opts.budget) {
                    Method::Brute
                } else {
                    Method::ClassAlgebra
                }
            }
        }
    }
}

impl From<Method> for EngineChoice {
    fn from(m: Method) -> Self {
        match m {
            Method::Brute => EngineChoice::Brute,
            Method::ClassAlgebra => EngineChoice::ClassAlgebra,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    /// Maximum number of candidate tuples `(d(d−1)/2)^r` brute force may visit.
    pub budget: u128,
}

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

impl Default for EngineOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET }
    }
}

/// A Hurwitz count together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub instance: HurwitzInstance,
    /// Number of valid ordered r-tuples.
    pub tuple_count: BigUint,
    /// `tuple_count / d!`.
    pub hurwitz_number: ExactRational,
    pub method: Method,
}

impl CountReport {
    /// Normalizes `tuple_count` by `d!`.
    pub fn new(instance: HurwitzInstance, tuple_count: BigUint, method: Method) -> Self {
        let hurwitz_number = ExactRational::new(
            BigInt::from(tuple_count.clone()),
            BigInt::from(factorial(instance.d())),
        );
        Self { instance, tuple_count, hurwitz_number, method }
    }
}

/// Runs the chosen engine on `inst`.
pub fn compute(inst: &HurwitzInstance, choice: EngineChoice, opts: &EngineOptions) -> Result<CountReport> {
    match choice.resolve(inst, opts) {
        Method::Brute => hurwitz_brute(inst, opts),
        Method::ClassAlgebra => Ok(hurwitz_class_algebra(inst)),
    }
}
