//! Sparse multivariate polynomials in `x_1..x_n` and `beta` over
//! arbitrary-precision integers, and the tableau generating functions built
//! on them.
//!
//! A term is keyed by its x-exponent vector plus one extra slot for the
//! `beta` degree. Symmetry in the `x_i` is a property of the constructions,
//! not something the representation enforces.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::exact::{Int, Rat};
use crate::shapes::{Partition, StrictPartition};
use crate::tableaux::{
    enumerate_ssvt_p, enumerate_sst, enumerate_svt, weight_vector, Caps, SetValuedTableau,
};
use crate::Result;

/// Exponents of one term: the x-exponent vector and the beta degree.
pub type TermKey = (Vec<u16>, u16);

/// A sparse polynomial in `x_1..x_n` and `beta`; zero coefficients are never
/// stored, so equality is term-map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<TermKey, Int>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, Int::one())
    }

    pub fn constant(n: usize, c: Int) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(vec![0; n], 0, c);
        p
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exp = vec![0u16; n];
        exp[i - 1] = 1;
        let mut p = MultiPoly::zero(n);
        p.add_term(exp, 0, Int::one());
        p
    }

    /// `1 + beta * x_i`
    pub fn one_plus_beta_var(n: usize, i: usize) -> Self {
        let mut p = MultiPoly::one(n);
        let mut exp = vec![0u16; n];
        exp[i - 1] = 1;
        p.add_term(exp, 1, Int::one());
        p
    }

    /// `x_i (+) x_j = x_i + x_j + beta x_i x_j`
    pub fn beta_plus(n: usize, i: usize, j: usize) -> Self {
        let mut p = MultiPoly::var(n, i) + MultiPoly::var(n, j);
        let mut exp = vec![0u16; n];
        exp[i - 1] += 1;
        exp[j - 1] += 1;
        p.add_term(exp, 1, Int::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Int)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, xexp: Vec<u16>, beta: u16, c: Int) {
        debug_assert_eq!(xexp.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((xexp, beta)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of `x^xexp * beta^b` (zero if absent).
    pub fn coefficient(&self, xexp: &[u16], beta: u16) -> Int {
        self.terms
            .get(&(xexp.to_vec(), beta))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    /// Restriction to `beta = 0`.
    pub fn beta_zero_part(&self) -> MultiPoly {
        let mut p = MultiPoly::zero(self.n);
        for ((xexp, b), c) in &self.terms {
            if *b == 0 {
                p.add_term(xexp.clone(), 0, c.clone());
            }
        }
        p
    }

    /// Substitute `x_i = x_value` for all `i` and `beta = beta_value`.
    pub fn specialize(&self, x_value: &Rat, beta_value: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for ((xexp, b), c) in &self.terms {
            let xdeg: u32 = xexp.iter().map(|&e| e as u32).sum();
            let mut term = Rat::from_integer(c.clone());
            term *= x_value.pow(xdeg as i32);
            term *= beta_value.pow(*b as i32);
            acc += term;
        }
        acc
    }

    /// The polynomial with variables `i` and `j` exchanged (1-indexed).
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.n);
        for ((xexp, b), c) in &self.terms {
            let mut e = xexp.clone();
            e.swap(i - 1, j - 1);
            p.add_term(e, *b, c.clone());
        }
        p
    }

    /// Invariance under all adjacent transpositions (which generate the full
    /// symmetric group on the variables).
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i, i + 1) == *self)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = self;
        for ((xexp, b), c) in rhs.terms {
            out.add_term(xexp, b, c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = MultiPoly::zero(self.n);
        for ((xa, ba), ca) in &self.terms {
            for ((xb, bb), cb) in &rhs.terms {
                let xexp: Vec<u16> = xa.iter().zip(xb).map(|(a, b)| a + b).collect();
                out.add_term(xexp, ba + bb, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    /// One term per line, sorted by (total x-degree, exponent vector, beta
    /// degree); each term as `c * x1^a1 * ... * xn^an * beta^b` with
    /// zero-exponent factors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&TermKey> = self.terms.keys().collect();
        keys.sort_by_key(|(xexp, b)| {
            (
                xexp.iter().map(|&e| e as u32).sum::<u32>(),
                std::cmp::Reverse(xexp.clone()),
                *b,
            )
        });
        for (idx, key) in keys.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let (xexp, b) = key;
            write!(f, "{}", self.terms[*key])?;
            for (i, &e) in xexp.iter().enumerate() {
                if e > 0 {
                    write!(f, " * x{}^{}", i + 1, e)?;
                }
            }
            if *b > 0 {
                write!(f, " * beta^{b}")?;
            }
        }
        Ok(())
    }
}

fn monomial_from_tableau(n: usize, t: &SetValuedTableau, shape_size: usize) -> (Vec<u16>, u16) {
    let w = weight_vector(t, n);
    let xexp: Vec<u16> = w.iter().map(|&e| e as u16).collect();
    let beta = (t.size() - shape_size) as u16;
    (xexp, beta)
}

fn generating_poly(n: usize, shape_size: usize, tableaux: &[SetValuedTableau]) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for t in tableaux {
        let (xexp, beta) = monomial_from_tableau(n, t, shape_size);
        p.add_term(xexp, beta, Int::one());
    }
    p
}

/// Schur polynomial `s_lambda(x_1..x_n)` as the SST generating sum.
pub fn schur_poly(lam: &Partition, n: usize, caps: &Caps) -> Result<MultiPoly> {
    let ts = enumerate_sst(lam, n, caps)?;
    Ok(generating_poly(n, lam.size(), &ts))
}

/// Stable Grothendieck polynomial `G_lambda(x_1..x_n | beta)` as the SVT
/// generating sum.
pub fn grothendieck_poly(lam: &Partition, n: usize, caps: &Caps) -> Result<MultiPoly> {
    let ts = enumerate_svt(lam, n, caps)?;
    Ok(generating_poly(n, lam.size(), &ts))
}

/// K-theoretic Schur P-function `GP_mu(x_1..x_n | beta)` as the shifted
/// set-valued generating sum.
pub fn gp_poly(mu: &StrictPartition, n: usize, caps: &Caps) -> Result<MultiPoly> {
    let ts = enumerate_ssvt_p(mu, n, caps)?;
    Ok(generating_poly(n, mu.size(), &ts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat_int};
    use crate::shapes::{shifted_staircase, staircase};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn grothendieck_21_coefficients() {
        let g = grothendieck_poly(&p(&[2, 1]), 3, &Caps::default()).unwrap();
        // coefficients read off the full expansion of G_{(2,1)}(x1,x2,x3 | beta)
        assert_eq!(g.coefficient(&[2, 1, 1], 1), int(3));
        assert_eq!(g.coefficient(&[2, 2, 2], 3), int(1));
        assert_eq!(g.coefficient(&[2, 2, 0], 1), int(1));
        assert_eq!(g.coefficient(&[2, 2, 1], 2), int(2));
        assert!(g.is_symmetric());
    }

    #[test]
    fn grothendieck_single_box() {
        let g = grothendieck_poly(&p(&[1]), 2, &Caps::default()).unwrap();
        // x1 + x2 + beta x1 x2
        let mut expected = MultiPoly::var(2, 1) + MultiPoly::var(2, 2);
        expected.add_term(vec![1, 1], 1, int(1));
        assert_eq!(g, expected);
        assert_eq!(
            grothendieck_poly(&Partition::empty(), 3, &Caps::default()).unwrap(),
            MultiPoly::one(3)
        );
    }

    #[test]
    fn schur_values() {
        let s = schur_poly(&p(&[2, 1]), 3, &Caps::default()).unwrap();
        assert_eq!(s.specialize(&rat_int(1), &rat_int(0)), rat_int(8));
        assert_eq!(s.coefficient(&[2, 1, 0], 0), int(1));
        assert_eq!(s.coefficient(&[0, 1, 2], 0), int(1));
        assert_eq!(s.coefficient(&[1, 1, 1], 0), int(2));
        let s1 = schur_poly(&p(&[1]), 4, &Caps::default()).unwrap();
        let expected = (1..=4).fold(MultiPoly::zero(4), |acc, i| acc + MultiPoly::var(4, i));
        assert_eq!(s1, expected);
        // oracle: enumerate_sst((2), 2) gives x1^2 + x1 x2 + x2^2
        let s2 = schur_poly(&p(&[2]), 2, &Caps::default()).unwrap();
        assert_eq!(s2.coefficient(&[2, 0], 0), int(1));
        assert_eq!(s2.coefficient(&[1, 1], 0), int(1));
        assert_eq!(s2.coefficient(&[0, 2], 0), int(1));
        assert_eq!(s2.num_terms(), 3);
    }

    #[test]
    fn beta_zero_is_schur() {
        for parts in [vec![], vec![1], vec![2, 1], vec![2, 2]] {
            let lam = Partition::new(parts).unwrap();
            for n in 1..=3 {
                let g = grothendieck_poly(&lam, n, &Caps::default()).unwrap();
                let s = schur_poly(&lam, n, &Caps::default()).unwrap();
                assert_eq!(g.beta_zero_part(), s, "lambda={lam}, n={n}");
            }
        }
    }

    #[test]
    fn specialization_counts() {
        let g = grothendieck_poly(&p(&[2, 1]), 3, &Caps::default()).unwrap();
        assert_eq!(g.specialize(&rat_int(1), &rat_int(1)), rat_int(27));
        assert_eq!(g.specialize(&rat_int(1), &rat_int(0)), rat_int(8));
        let g3 = grothendieck_poly(&staircase(3), 4, &Caps::default()).unwrap();
        assert_eq!(g3.specialize(&rat_int(1), &rat_int(1)), rat_int(159));
    }

    #[test]
    fn gp_matches_g_for_staircase() {
        let g = grothendieck_poly(&p(&[2, 1]), 3, &Caps::default()).unwrap();
        let gp = gp_poly(&shifted_staircase(3), 3, &Caps::default()).unwrap();
        assert_eq!(g, gp);
    }

    #[test]
    fn display_dump() {
        let g = grothendieck_poly(&p(&[1]), 2, &Caps::default()).unwrap();
        assert_eq!(g.to_string(), "1 * x1^1\n1 * x2^1\n1 * x1^1 * x2^1 * beta^1");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(MultiPoly::one(2).to_string(), "1");
    }
}
