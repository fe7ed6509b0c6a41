//! Terminating and regularized Gauss 2F1, Jacobi polynomials with arbitrary
//! rational parameters, and the staircase tableau-count ratio built from
//! them.
//!
//! Every value is an exact rational. Gamma ratios are only ever evaluated
//! when the pole structure cancels and the argument differences are
//! integers, where they reduce to factorial quotients.

use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{
    as_nonpositive_integer, factorial, generalized_binomial, pochhammer, rat_int, Rat,
};
use crate::{Error, Result};

/// Terminating Gauss 2F1 `sum_s (a)_s (b)_s / ((c)_s s!) z^s`.
///
/// Requires `a` or `b` to be a non-positive integer. Errors if a lower
/// Pochhammer `(c)_s` vanishes before the termination index.
pub fn hyp2f1_terminating(a: &Rat, b: &Rat, c: &Rat, z: &Rat) -> Result<Rat> {
    let term_a = as_nonpositive_integer(a).and_then(|m| m.to_u64());
    let term_b = as_nonpositive_integer(b).and_then(|m| m.to_u64());
    let m = match (term_a, term_b) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) => x,
        (None, Some(y)) => y,
        (None, None) => return Err(Error::NonTerminatingSeries),
    };

    let mut sum = Rat::one();
    let mut term = Rat::one();
    for s in 0..m {
        let sr = rat_int(s as i64);
        let c_factor = c + &sr;
        if c_factor.is_zero() {
            return Err(Error::PochhammerPole { s: s + 1 });
        }
        term *= (a + &sr) * (b + &sr) * z / (c_factor * (sr + Rat::one()));
        sum += &term;
    }
    Ok(sum)
}

/// Which side of the Gauss-summation gamma quotient dominates as the lower
/// parameter is perturbed off its non-positive integer value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleSide {
    /// More poles above the line: the regularized limit diverges.
    NumeratorDominated,
    /// Pole orders match: the limit is finite and non-zero.
    Cancelled,
    /// More poles below: the limit is zero.
    DenominatorDominated,
}

/// Outcome of regularizing `2F1(a, b; c0; 1)` at a non-positive integer
/// lower parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularizationReport {
    pub exists_nonzero: bool,
    pub value: Option<Rat>,
    pub pole_side: PoleSide,
}

fn is_nonpos_int(r: &Rat) -> bool {
    as_nonpositive_integer(r).is_some()
}

/// Regularized `2F1(a, b; c0; 1)` for `c0` a non-positive integer, via the
/// closed-form pole cancellation of the Gauss summation quotient
/// `Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
///
/// The limit exists and is non-zero when `c0 - a - b` is a positive integer
/// and exactly one of `c0 - a`, `c0 - b` (counted as a multiset) is a
/// non-positive integer; the report carries the exact value in that case.
pub fn hyp2f1_at1_regularized(a: &Rat, b: &Rat, c0: i64) -> Result<RegularizationReport> {
    if c0 > 0 {
        return Err(Error::InvalidArgument(format!(
            "c0 = {c0} must be a non-positive integer"
        )));
    }
    let c = rat_int(c0);
    let cab = &c - a - b;

    // Pole orders of the gamma quotient at the limit point.
    let num_poles = 1 + usize::from(is_nonpos_int(&cab));
    let den_poles = usize::from(is_nonpos_int(&(&c - a))) + usize::from(is_nonpos_int(&(&c - b)));
    let pole_side = match num_poles.cmp(&den_poles) {
        std::cmp::Ordering::Greater => PoleSide::NumeratorDominated,
        std::cmp::Ordering::Equal => PoleSide::Cancelled,
        std::cmp::Ordering::Less => PoleSide::DenominatorDominated,
    };

    // Conditions of the closed-form evaluation. `c0 - a - b` must be a
    // *positive* integer: at zero the second numerator gamma factor also
    // blows up and the limit diverges.
    let cond_sum = cab.is_integer() && cab.to_integer().to_i64().map_or(false, |v| v >= 1);
    let cond_one_pole = den_poles == 1;
    if !(cond_sum && cond_one_pole) {
        return Ok(RegularizationReport {
            exists_nonzero: false,
            value: None,
            pole_side,
        });
    }

    // Exactly one of c0-a, c0-b is a non-positive integer; call its
    // negation k0 and let the other one be the regular argument. Both are
    // integers here: the singular difference is integral by membership, the
    // other by condition on a+b.
    let (singular, regular) = if is_nonpos_int(&(&c - b)) {
        (&c - b, &c - a)
    } else {
        (&c - a, &c - b)
    };
    let k0 = (-singular.to_integer()).to_u64().expect("non-negative");
    let c0_abs = (-c0) as u64;

    // lim Gamma(c0+eps)/Gamma(-k0+eps) = (-1)^{-c0-k0} k0! / (-c0)!
    let sign = if (c0_abs + k0) % 2 == 0 { 1 } else { -1 };
    let prefactor =
        rat_int(sign) * Rat::from_integer(factorial(k0)) / Rat::from_integer(factorial(c0_abs));

    // Gamma(c0-a-b)/Gamma(regular), both positive integer arguments.
    let g_num = cab.to_integer().to_u64().expect("positive integer");
    let g_den = regular.to_integer().to_u64().expect("positive integer");
    let gamma_ratio = Rat::from_integer(factorial(g_num - 1)) / Rat::from_integer(factorial(g_den - 1));

    Ok(RegularizationReport {
        exists_nonzero: true,
        value: Some(prefactor * gamma_ratio),
        pole_side,
    })
}

/// Jacobi polynomial `P_k^{(alpha, beta)}(z)` by its finite expansion
/// `sum_r binom(k+alpha, k-r) binom(k+beta, r) ((z-1)/2)^r ((z+1)/2)^{k-r}`,
/// valid for all rational parameters.
pub fn jacobi_poly(k: u64, alpha: &Rat, beta: &Rat, z: &Rat) -> Rat {
    let half_minus = (z - Rat::one()) / rat_int(2);
    let half_plus = (z + Rat::one()) / rat_int(2);
    let mut sum = Rat::zero();
    for r in 0..=k {
        let term = generalized_binomial(&(alpha + rat_int(k as i64)), k - r)
            * generalized_binomial(&(beta + rat_int(k as i64)), r)
            * half_minus.pow(r as i32)
            * half_plus.pow((k - r) as i32);
        sum += term;
    }
    sum
}

/// Jacobi parameters `alpha = (n-k-1)/2`, `beta = (-n-k-1)/2` used by the
/// staircase ratio.
pub fn staircase_jacobi_params(k: u64, n: u64) -> (Rat, Rat) {
    (
        Rat::new((n as i64 - k as i64 - 1).into(), 2.into()),
        Rat::new((-(n as i64) - k as i64 - 1).into(), 2.into()),
    )
}

/// Closed form `P_k^{(alpha, beta)}(-1) = ((n-k+1)/2)_k / k!` under the
/// staircase parameters (where `k + alpha + beta + 1 = 0`).
pub fn jacobi_at_minus1_closed(k: u64, n: u64) -> Rat {
    let start = Rat::new((n as i64 - k as i64 + 1).into(), 2.into());
    pochhammer(&start, k) / Rat::from_integer(factorial(k))
}

/// The ratio `|SST(delta_{k+1}, n)| / |SST(delta_k, n)|` in closed form:
/// `(2^{2k} (k!)^2 / (2k)!) * P_k^{(alpha, beta)}(-1)`.
pub fn sst_ratio(k: u64, n: u64) -> Result<Rat> {
    if k < 1 || n < k {
        return Err(Error::InvalidArgument(format!(
            "sst_ratio requires n >= k >= 1, got k={k}, n={n}"
        )));
    }
    let (alpha, beta) = staircase_jacobi_params(k, n);
    Ok(sst_ratio_prefactor(k) * jacobi_poly(k, &alpha, &beta, &rat_int(-1)))
}

/// The prefactor `2^{2k} (k!)^2 / (2k)!`.
pub fn sst_ratio_prefactor(k: u64) -> Rat {
    let kf = factorial(k);
    Rat::new(
        crate::exact::Int::from(2).pow(2 * k as u32) * &kf * &kf,
        factorial(2 * k),
    )
}
