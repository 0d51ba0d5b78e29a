use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    // running product stays integral: C(n, i) = C(n, i-1) * (n-i+1) / i
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

pub fn pow_usize(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}
