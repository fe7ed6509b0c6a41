//! Partitions, strict partitions, (shifted) Young diagrams, hooks and contents.
//!
//! Boxes are 1-indexed: `(row, col)` with row 1 at the top, matching the
//! English convention used throughout.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::exact::Int;
use crate::{Error, Result};

/// A box `(i, j)` of a (shifted) Young diagram; both coordinates start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

/// Content `ct(u) = col - row`.
pub fn content(u: Cell) -> i64 {
    u.col as i64 - u.row as i64
}

/// A weakly decreasing sequence of positive integers; the empty partition is
/// a first-class value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Errors unless the parts
    /// are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing and positive"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_i` with zero-padding for `i` beyond the length (1-indexed).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, u: Cell) -> bool {
        u.row >= 1 && u.col >= 1 && u.col <= self.part(u.row)
    }

    /// `true` if `inner` fits inside `self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not strictly decreasing and positive"
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Boxes of the shifted Young diagram: row `i` occupies columns
    /// `i ..= mu_i + i - 1`. Row-major order.
    pub fn shifted_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i0, &p) in self.parts.iter().enumerate() {
            let i = i0 + 1;
            for j in i..i + p {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, u: Cell) -> bool {
        u.row >= 1 && u.col >= u.row && u.col < u.row + self.part(u.row)
    }

    /// The same parts read as an ordinary partition (well-defined since a
    /// strictly decreasing sequence is weakly decreasing).
    pub fn as_partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("strict parts are weakly decreasing")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Partition = s.parse()?;
        StrictPartition::new(p.parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// The staircase `delta_k = (k-1, k-2, ..., 1)`; `k = 1` is the empty shape.
pub fn staircase(k: usize) -> Partition {
    Partition {
        parts: (1..k).rev().collect(),
    }
}

/// The shifted staircase `delta~_k`, same parts as [`staircase`] but read as
/// a strict partition.
pub fn shifted_staircase(k: usize) -> StrictPartition {
    StrictPartition {
        parts: (1..k).rev().collect(),
    }
}

/// Hook length `h(u) = (lambda_i - j) + (lambda'_j - i) + 1`.
pub fn hook_length(lam: &Partition, u: Cell) -> Result<usize> {
    if !lam.contains_cell(u) {
        return Err(Error::OutsideDiagram {
            row: u.row,
            col: u.col,
        });
    }
    let arm = lam.part(u.row) - u.col;
    let leg = lam.parts.iter().filter(|&&p| p >= u.col).count() - u.row;
    Ok(arm + leg + 1)
}

/// Hook product `H_lambda`; 1 for the empty partition.
pub fn hook_product(lam: &Partition) -> Int {
    let mut acc = Int::one();
    for u in lam.cells() {
        acc *= Int::from(hook_length(lam, u).expect("cell is in the diagram"));
    }
    acc
}

/// Boxes of the skew diagram `outer / inner` in row-major order.
pub fn skew_boxes(outer: &Partition, inner: &Partition) -> Result<Vec<Cell>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained);
    }
    let mut out = Vec::new();
    for i in 1..=outer.len() {
        for j in inner.part(i) + 1..=outer.part(i) {
            out.push(Cell::new(i, j));
        }
    }
    Ok(out)
}

/// Content product `C_k(n) = prod_{i=1}^{k} (n + k + 1 - 2i)` over the skew
/// staircase `delta_{k+1} / delta_k`. Well-defined for any `n >= 1`, possibly
/// zero or negative for `n < k`.
pub fn staircase_content_product(k: usize, n: usize) -> Int {
    let mut acc = Int::one();
    for i in 1..=k as i64 {
        acc *= Int::from(n as i64 + k as i64 + 1 - 2 * i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{double_factorial_odd, int, pochhammer, rat, rat_int, Rat};
    use proptest::prelude::*;

    #[test]
    fn staircase_shapes() {
        assert_eq!(staircase(1), Partition::empty());
        assert_eq!(staircase(4).parts(), &[3, 2, 1]);
        assert_eq!(staircase(5).parts(), &[4, 3, 2, 1]);
    }

    #[test]
    fn hook_lengths_delta4() {
        let d4 = staircase(4);
        assert_eq!(hook_length(&d4, Cell::new(1, 1)).unwrap(), 5);
        assert_eq!(hook_length(&d4, Cell::new(2, 2)).unwrap(), 1);
        let single = Partition::new(vec![1]).unwrap();
        assert_eq!(hook_length(&single, Cell::new(1, 1)).unwrap(), 1);
        assert!(hook_length(&d4, Cell::new(3, 2)).is_err());
    }

    #[test]
    fn staircase_hook_formula() {
        // h(u) = 2(k - i - j) + 1 for all boxes of delta_k
        for k in 1..=10usize {
            let d = staircase(k);
            for u in d.cells() {
                let expected = 2 * (k as i64 - u.row as i64 - u.col as i64) + 1;
                assert_eq!(hook_length(&d, u).unwrap() as i64, expected);
            }
        }
    }

    #[test]
    fn hook_products() {
        assert_eq!(hook_product(&Partition::empty()), int(1));
        assert_eq!(hook_product(&staircase(4)), int(45));
        // oracle: H_5 = H_4 * 7!!
        assert_eq!(int(45) * double_factorial_odd(4), int(4725));
        assert_eq!(hook_product(&staircase(5)), int(4725));
    }

    #[test]
    fn hook_ratio() {
        for k in 1..=10u64 {
            let ratio = hook_product(&staircase(k as usize + 1)) / hook_product(&staircase(k as usize));
            assert_eq!(ratio, double_factorial_odd(k));
        }
    }

    #[test]
    fn contents() {
        assert_eq!(content(Cell::new(2, 1)), -1);
        assert_eq!(content(Cell::new(1, 3)), 2);
        assert_eq!(content(Cell::new(7, 7)), 0);
    }

    #[test]
    fn skew_staircase_boxes() {
        let d5 = staircase(5);
        let d4 = staircase(4);
        let boxes = skew_boxes(&d5, &d4).unwrap();
        assert_eq!(
            boxes,
            vec![
                Cell::new(1, 4),
                Cell::new(2, 3),
                Cell::new(3, 2),
                Cell::new(4, 1)
            ]
        );
        assert_eq!(skew_boxes(&d4, &d4).unwrap(), vec![]);
        let outer = Partition::new(vec![2, 1]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        assert_eq!(
            skew_boxes(&outer, &inner).unwrap(),
            vec![Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert!(skew_boxes(&inner, &outer).is_err());
    }

    #[test]
    fn content_products() {
        // oracles: direct factor products
        assert_eq!(int(9 * 7 * 5 * 3), int(945));
        assert_eq!(staircase_content_product(4, 6), int(945));
        assert_eq!(int(6 * 4 * 2), int(48));
        assert_eq!(staircase_content_product(3, 4), int(48));
        assert_eq!(staircase_content_product(1, 7), int(7));
        // matches the skew-box definition
        for k in 1..=6 {
            for n in 1..=9i64 {
                let boxes = skew_boxes(&staircase(k + 1), &staircase(k)).unwrap();
                let direct: Int = boxes
                    .iter()
                    .map(|&u| Int::from(n + content(u)))
                    .product();
                assert_eq!(staircase_content_product(k, n as usize), direct);
            }
        }
    }

    #[test]
    fn content_product_pochhammer_factorizations() {
        // even k = 2m: C_{2m}(n) = 4^m ((n+1)/2 - m)_m ((n+1)/2)_m
        for m in 1..=5u64 {
            for n in (m as i64)..=12 {
                let lhs = Rat::from_integer(staircase_content_product(2 * m as usize, n as usize));
                let half = rat(n + 1, 2);
                let rhs = rat_int(4).pow(m as i32)
                    * pochhammer(&(half.clone() - rat_int(m as i64)), m)
                    * pochhammer(&half, m);
                assert_eq!(lhs, rhs);
            }
        }
        // odd k = 2m+1: C_{2m+1}(n) = n * 4^m (n/2 - m)_m (n/2 + 1)_m
        for m in 1..=5u64 {
            for n in (m as i64)..=12 {
                let lhs = Rat::from_integer(staircase_content_product(
                    2 * m as usize + 1,
                    n as usize,
                ));
                let half = rat(n, 2);
                let rhs = rat_int(n)
                    * rat_int(4).pow(m as i32)
                    * pochhammer(&(half.clone() - rat_int(m as i64)), m)
                    * pochhammer(&(half + rat_int(1)), m);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "3,2,1".parse().unwrap();
        assert_eq!(p, staircase(4));
        assert_eq!(p.to_string(), "3,2,1");
        let e: Partition = "".parse().unwrap();
        assert!(e.is_empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
    }

    #[test]
    fn shifted_cells_of_staircase() {
        let mu = shifted_staircase(4);
        assert_eq!(mu.parts(), &[3, 2, 1]);
        assert_eq!(
            mu.shifted_cells(),
            vec![
                Cell::new(1, 1),
                Cell::new(1, 2),
                Cell::new(1, 3),
                Cell::new(2, 2),
                Cell::new(2, 3),
                Cell::new(3, 3)
            ]
        );
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..7, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugation_involution(p in arb_partition()) {
            prop_assert_eq!(p.conjugate().conjugate(), p);
        }

        #[test]
        fn staircase_self_conjugate(k in 1usize..10) {
            prop_assert_eq!(staircase(k).conjugate(), staircase(k));
        }

        #[test]
        fn conjugate_preserves_hook_multiset(p in arb_partition()) {
            let mut hooks: Vec<_> = p.cells().iter().map(|&u| hook_length(&p, u).unwrap()).collect();
            let q = p.conjugate();
            let mut hooks_c: Vec<_> = q.cells().iter().map(|&u| hook_length(&q, u).unwrap()).collect();
            hooks.sort_unstable();
            hooks_c.sort_unstable();
            prop_assert_eq!(hooks, hooks_c);
        }
    }
}
