//! Arbitrary-precision integer and rational scalars.
//!
//! Every analytic value in this crate (hook products, Jacobi special
//! values, Holman sums, half-integer parameters) is an [`Int`] or a
//! [`Rat`]. Rationals are kept in canonical form (positive denominator,
//! reduced) by `num-rational`, so structural equality is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational in canonical form.
pub type Rat = BigRational;

/// Shorthand for an [`Int`] from a machine integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for a [`Rat`] `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A [`Rat`] with value `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `m!`
pub fn factorial(m: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=m {
        acc *= Int::from(i);
    }
    acc
}

/// The odd double factorial `(2k-1)!! = 1 * 3 * 5 * ... * (2k-1)` for `k >= 1`.
pub fn double_factorial_odd(k: u64) -> Int {
    let mut acc = Int::one();
    let mut f = 1u64;
    for _ in 1..=k {
        acc *= Int::from(f);
        f += 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)` for machine-sized arguments.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Pochhammer symbol `(a)_s = a (a+1) ... (a+s-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rat, s: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..s {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// Generalized binomial coefficient `C(a, r) = a (a-1) ... (a-r+1) / r!`
/// for rational `a` and a non-negative integer `r`.
pub fn generalized_binomial(a: &Rat, r: u64) -> Rat {
    let start = a - Rat::from_integer(Int::from(r)) + Rat::one();
    pochhammer(&start, r) / Rat::from_integer(factorial(r))
}

/// If `r` is an integer, returns it as an [`Int`].
pub fn as_integer(r: &Rat) -> Option<Int> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// If `r` is an integer `<= 0`, returns `-r` (the termination index).
pub fn as_nonpositive_integer(r: &Rat) -> Option<Int> {
    match as_integer(r) {
        Some(n) if !n.is_positive() => Some(-n),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(4), int(24));
        // 8! appears in the ratio prefactor 2^8 (4!)^2 / 8!
        assert_eq!(factorial(8), int(40320));
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial_odd(1), int(1));
        // oracle: direct products
        assert_eq!(double_factorial_odd(3), int(1 * 3 * 5));
        assert_eq!(double_factorial_odd(3), int(15));
        assert_eq!(double_factorial_odd(4), int(1 * 3 * 5 * 7));
        assert_eq!(double_factorial_odd(4), int(105));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat_int(5), 0), rat_int(1));
        // (3/2)_4 = 3/2 * 5/2 * 7/2 * 9/2
        assert_eq!(pochhammer(&rat(3, 2), 4), rat(945, 16));
        assert_eq!(pochhammer(&rat_int(1), 3), rat_int(6));
    }

    #[test]
    fn generalized_binomial_values() {
        assert_eq!(generalized_binomial(&rat_int(5), 2), rat_int(10));
        assert_eq!(generalized_binomial(&rat(7, 3), 0), rat_int(1));
        // oracle: (9/2)(7/2)(5/2)(3/2)/24 = 945/384 = 315/128
        let oracle = rat(9, 2) * rat(7, 2) * rat(5, 2) * rat(3, 2) / rat_int(24);
        assert_eq!(oracle, rat(315, 128));
        assert_eq!(generalized_binomial(&rat(9, 2), 4), rat(315, 128));
    }

    #[test]
    fn binomial_matches_generalized() {
        for n in 0..10i64 {
            for r in 0..10u64 {
                assert_eq!(
                    generalized_binomial(&rat_int(n), r),
                    Rat::from_integer(binomial(n as u64, r))
                );
            }
        }
    }

    proptest! {
        // (a)_{s+t} = (a)_s (a+s)_t
        #[test]
        fn pochhammer_splits(n in -20i64..20, d in 1i64..6, s in 0u64..8, t in 0u64..8) {
            let a = rat(n, d);
            let lhs = pochhammer(&a, s + t);
            let shifted = &a + rat_int(s as i64);
            let rhs = pochhammer(&a, s) * pochhammer(&shifted, t);
            prop_assert_eq!(lhs, rhs);
        }

        // (2k-1)!! * 2^k * k! = (2k)!
        #[test]
        fn double_factorial_identity(k in 1u64..12) {
            let lhs = double_factorial_odd(k) * Int::from(2u64).pow(k as u32) * factorial(k);
            prop_assert_eq!(lhs, factorial(2 * k));
        }
    }
}
