//! Holman-type multiple hypergeometric sums attached to a partition, and
//! checks of their relations to tableau generating functions.
//!
//! The sum `F_lambda^{(n)}(z)` runs over multi-indices `0 <= k_i <= i - 1`
//! (so it is a finite polynomial in `z`) with the coupled product
//! `prod_{i<j} (A_ij + k_i - k_j) / A_ij` where `A_ij = lambda_i -
//! lambda_j + j - i` over the zero-padded parts.

use num_traits::{One, Zero};

use crate::exact::{factorial, pochhammer, rat_int, Rat};
use crate::polyring::grothendieck_poly;
use crate::shapes::Partition;
use crate::tableaux::{count_sst, Caps};
use crate::{Error, Result};

/// Iterate over all multi-indices `k` with `0 <= k[i] <= bounds[i]`,
/// calling `f` on each.
fn for_each_multi_index(bounds: &[u64], mut f: impl FnMut(&[u64])) {
    let mut k = vec![0u64; bounds.len()];
    loop {
        f(&k);
        let mut advanced = false;
        for i in 0..k.len() {
            if k[i] < bounds[i] {
                k[i] += 1;
                for v in &mut k[..i] {
                    *v = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

/// The multiple hypergeometric sum `F_lambda^{(n)}(z)`.
///
/// Errors if `lambda` has more than `n` parts (the coupling factors
/// `A_ij` are built from the first `n` zero-padded parts).
pub fn holman_f(lambda: &Partition, n: usize, z: &Rat) -> Result<Rat> {
    if lambda.len() > n {
        return Err(Error::InvalidArgument(format!(
            "shape {lambda} has more than n = {n} rows"
        )));
    }
    let parts: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64).collect();
    let a = |i: usize, j: usize| parts[i] - parts[j] + (j as i64 - i as i64);

    let bounds: Vec<u64> = (0..n as u64).collect();
    let mut sum = Rat::zero();
    for_each_multi_index(&bounds, |k| {
        let mut term = Rat::one();
        for i in 0..n {
            for j in (i + 1)..n {
                term *= rat_int(a(i, j) + k[i] as i64 - k[j] as i64) / rat_int(a(i, j));
            }
        }
        for (i, &ki) in k.iter().enumerate() {
            term *= pochhammer(&rat_int(-(i as i64)), ki);
            term /= Rat::from_integer(factorial(ki));
        }
        let total: u64 = k.iter().sum();
        sum += term * z.pow(total as i32);
    });
    Ok(sum)
}

/// Verifies `G_lambda(1, ..., 1 | beta) = |SST(lambda, n)| *
/// F_lambda^{(n)}(-beta)` as polynomials in `beta`, by exact comparison at
/// more sample points than the degree of either side.
pub fn check_holman_identity(lambda: &Partition, n: usize, caps: &Caps) -> Result<bool> {
    let g = grothendieck_poly(lambda, n, caps)?;
    let sst = Rat::from_integer(count_sst(lambda, n)?);
    let degree_bound = lambda.size() * n.max(1);
    let one = rat_int(1);
    for s in 0..=degree_bound as i64 {
        let beta = rat_int(s);
        let lhs = g.specialize(&one, &beta);
        let rhs = &sst * holman_f(lambda, n, &(-&beta))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies `F_lambda^{(n)}(1) = 1 / |SST(lambda, n)|` for the staircase
/// `lambda = delta_k` (the Gauss-summation corollary), returning both
/// sides' agreement.
pub fn check_gauss_summation_corollary(k: usize, n: usize) -> Result<bool> {
    let delta = crate::shapes::staircase(k);
    let f = holman_f(&delta, n, &rat_int(1))?;
    let sst = count_sst(&delta, n)?;
    if sst.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "no tableaux for delta_{k} with n = {n}"
        )));
    }
    Ok(f * Rat::from_integer(sst) == rat_int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::shapes::staircase;

    #[test]
    fn frozen_values() {
        assert_eq!(
            holman_f(&staircase(4), 6, &rat_int(-1)).unwrap(),
            rat(134865, 896)
        );
        assert_eq!(
            holman_f(&staircase(3), 4, &rat_int(-1)).unwrap(),
            rat(159, 20)
        );
        assert_eq!(
            holman_f(&staircase(4), 4, &rat_int(-1)).unwrap(),
            rat(729, 64)
        );
        assert_eq!(
            holman_f(&staircase(5), 6, &rat_int(-1)).unwrap(),
            rat(2479329, 8064)
        );
    }

    #[test]
    fn degenerate_cases() {
        // n = 1: the only multi-index is k = (0)
        assert_eq!(
            holman_f(&Partition::new(vec![5]).unwrap(), 1, &rat(7, 3)).unwrap(),
            rat_int(1)
        );
        // z = 0: only the zero multi-index survives
        assert_eq!(
            holman_f(&staircase(4), 5, &rat_int(0)).unwrap(),
            rat_int(1)
        );
        // empty shape still sums to 1 at z = 1 (Gauss corollary with |SST| = 1)
        assert_eq!(
            holman_f(&Partition::new(vec![]).unwrap(), 3, &rat_int(1)).unwrap(),
            rat_int(1)
        );
        assert!(holman_f(&staircase(4), 2, &rat_int(1)).is_err());
    }

    #[test]
    fn reciprocal_count_at_one() {
        for k in 1..=4usize {
            for n in k..=5usize {
                assert!(
                    check_gauss_summation_corollary(k, n).unwrap(),
                    "k={k}, n={n}"
                );
                let f = holman_f(&staircase(k), n, &rat_int(1)).unwrap();
                let sst = count_sst(&staircase(k), n).unwrap();
                assert_eq!(f, rat_int(1) / Rat::from_integer(sst));
            }
        }
    }

    #[test]
    fn matches_generating_function() {
        let caps = Caps {
            max_cells: 16,
            max_entry: 8,
        };
        for (parts, n) in [
            (vec![], 2usize),
            (vec![1], 2),
            (vec![2], 2),
            (vec![1, 1], 2),
            (vec![2, 1], 3),
            (vec![2, 2], 3),
            (vec![3, 1], 3),
        ] {
            let lambda = Partition::new(parts).unwrap();
            assert!(
                check_holman_identity(&lambda, n, &caps).unwrap(),
                "lambda={lambda}, n={n}"
            );
        }
    }
}
