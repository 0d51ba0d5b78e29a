use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A genus and ramification profile over ∞, together with the Riemann–Hurwitz
/// numerology it determines.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HurwitzInstance {
    genus: u32,
    alpha: Partition,
    d: usize,
    m: usize,
    b: usize,
    r: usize,
    k: usize,
}

impl HurwitzInstance {
    /// Derives `d, m, b = 2d + 2g − 2, k = Σ(α_i − 1)` and `r = b − k`.
    pub fn new(genus: i64, alpha: Partition) -> Result<Self> {
        if genus < 0 {
            return Err(Error::NegativeGenus(genus));
        }
        let d = alpha.size() as i64;
        let m = alpha.len() as i64;
        let b = 2 * d + 2 * genus - 2;
        let k = alpha.branching() as i64;
        let r = d + m + 2 * (genus - 1);
        if r < 0 {
            return Err(Error::NoSimpleBranchPoints { genus, partition: alpha.to_string(), r });
        }
        debug_assert_eq!(r, b - k);
        // extended Riemann–Hurwitz: r simple points (ramification 1 each) plus k over ∞
        debug_assert_eq!(2 * genus - 2, -2 * d + r + k);
        let inst = Self {
            genus: u32::try_from(genus).map_err(|_| Error::NegativeGenus(genus))?,
            alpha,
            d: d as usize,
            m: m as usize,
            b: b as usize,
            r: r as usize,
            k: k as usize,
        };
        Ok(inst)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    /// Degree of the cover.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of points over ∞.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of the branch divisor.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Number of simple branch points.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Ramification over ∞.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `2g − 2 + m > 0`, the range where the moduli space is a Deligne–Mumford stack.
    pub fn is_stable(&self) -> bool {
        2 * self.genus as usize + self.m > 2
    }
}

/// Same as [`HurwitzInstance::new`].
pub fn make_instance(genus: i64, alpha: Partition) -> Result<HurwitzInstance> {
    HurwitzInstance::new(genus, alpha)
}

impl fmt::Display for HurwitzInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} alpha={} d={} m={} b={} r={} k={}",
            self.genus, self.alpha, self.d, self.m, self.b, self.r, self.k
        )
    }
}
