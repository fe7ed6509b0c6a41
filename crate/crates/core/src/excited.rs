//! Excited Young diagrams in a rectangular or shifted ambient region,
//! their broken boxes, and the diagram-weighted expansions of the tableau
//! generating functions.
//!
//! An excited move takes a box `(i, j)` to `(i+1, j+1)` when that target
//! and both intermediate positions `(i+1, j)`, `(i, j+1)` are vacant and
//! the target stays within the first `n` rows. The set of diagrams is the
//! closure of the initial diagram of the shape under such moves.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::exact::{as_integer, rat_int, Int, Rat};
use crate::polyring::MultiPoly;
use crate::shapes::{shifted_staircase, Partition, StrictPartition};
use crate::{Error, Result};

/// The region the diagrams live in: a full `n x (lambda_1 + n - 1)`
/// rectangle, or its shifted part `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Straight,
    Shifted,
}

/// One excited diagram: a set of boxes inside the ambient region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcitedDiagram {
    ambient: Ambient,
    rows: usize,
    cols: usize,
    boxes: BTreeSet<(usize, usize)>,
}

impl ExcitedDiagram {
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    fn in_ambient(&self, i: usize, j: usize) -> bool {
        let lo = match self.ambient {
            Ambient::Straight => 1,
            Ambient::Shifted => i,
        };
        (1..=self.rows).contains(&i) && (lo..=self.cols).contains(&j)
    }

    fn successors(&self) -> Vec<ExcitedDiagram> {
        let mut out = Vec::new();
        for &(i, j) in &self.boxes {
            if !self.in_ambient(i + 1, j + 1) {
                continue;
            }
            if self.boxes.contains(&(i + 1, j))
                || self.boxes.contains(&(i, j + 1))
                || self.boxes.contains(&(i + 1, j + 1))
            {
                continue;
            }
            let mut boxes = self.boxes.clone();
            boxes.remove(&(i, j));
            boxes.insert((i + 1, j + 1));
            out.push(ExcitedDiagram { boxes, ..self.clone() });
        }
        out
    }

    /// Vacant ambient positions from which a box of the diagram could be
    /// reached by a chain of excited moves through vacant positions: the
    /// position `(i, j)` is broken when the nearest diagonal descendant
    /// `(i+k, j+k)` is a box and every step of the connecting staircase,
    /// `(i+s, j+s+1)` and `(i+s+1, j+s)` for `0 <= s < k`, is vacant.
    pub fn broken_boxes(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if !self.in_ambient(i, j) || self.boxes.contains(&(i, j)) {
                    continue;
                }
                let Some(k) = (1..=self.rows - i)
                    .find(|&k| self.boxes.contains(&(i + k, j + k)))
                else {
                    continue;
                };
                let clear = (0..k).all(|s| {
                    !self.boxes.contains(&(i + s, j + s + 1))
                        && !self.boxes.contains(&(i + s + 1, j + s))
                });
                if clear {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Row-variable weight `prod_{(i,j) in D} x_i * prod_{(i,j) in B(D)}
    /// (1 + beta x_i)` in `rows` variables.
    pub fn weight_type_a(&self) -> MultiPoly {
        let n = self.rows;
        let mut xexp = vec![0u16; n];
        for &(i, _) in &self.boxes {
            xexp[i - 1] += 1;
        }
        let mut p = MultiPoly::zero(n);
        p.add_term(xexp, 0, Int::one());
        for (i, _) in self.broken_boxes() {
            p = &p * &MultiPoly::one_plus_beta_var(n, i);
        }
        p
    }

    /// Single-box weight for the shifted ambient: `x_i` on the diagonal and
    /// past column `n`, and `x_i (+) x_j` otherwise.
    fn box_weight_shifted(&self, i: usize, j: usize) -> MultiPoly {
        if j == i || j > self.rows {
            MultiPoly::var(self.rows, i)
        } else {
            MultiPoly::beta_plus(self.rows, i, j)
        }
    }

    /// Shifted weight `prod_{D} wt(i,j) * prod_{B(D)} (1 + beta wt(i,j))`.
    pub fn weight_type_b(&self) -> MultiPoly {
        let mut p = MultiPoly::one(self.rows);
        for &(i, j) in &self.boxes {
            p = &p * &self.box_weight_shifted(i, j);
        }
        for (i, j) in self.broken_boxes() {
            p = &p * &one_plus_beta_times(&self.box_weight_shifted(i, j));
        }
        p
    }

    /// Text rendering: one ambient row per line with `o` for a box, `b`
    /// for a broken box, `.` for a vacant position, and a space outside
    /// the ambient region.
    pub fn render(&self) -> String {
        let broken = self.broken_boxes();
        let mut lines = Vec::with_capacity(self.rows);
        for i in 1..=self.rows {
            let mut line = String::with_capacity(self.cols);
            for j in 1..=self.cols {
                line.push(if !self.in_ambient(i, j) {
                    ' '
                } else if self.boxes.contains(&(i, j)) {
                    'o'
                } else if broken.contains(&(i, j)) {
                    'b'
                } else {
                    '.'
                });
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

/// `1 + beta * wt`
fn one_plus_beta_times(wt: &MultiPoly) -> MultiPoly {
    let mut p = MultiPoly::one(wt.num_vars());
    for ((xexp, b), c) in wt.terms() {
        p.add_term(xexp.clone(), b + 1, c.clone());
    }
    p
}

fn closure(start: ExcitedDiagram) -> Vec<ExcitedDiagram> {
    let mut seen: BTreeSet<BTreeSet<(usize, usize)>> = BTreeSet::new();
    let mut stack = vec![start];
    seen.insert(stack[0].boxes.clone());
    let mut out = Vec::new();
    while let Some(d) = stack.pop() {
        for next in d.successors() {
            if seen.insert(next.boxes.clone()) {
                stack.push(next);
            }
        }
        out.push(d);
    }
    out.sort_by(|a, b| a.boxes.cmp(&b.boxes));
    out
}

/// All excited diagrams of `lambda` in the `n x (lambda_1 + n - 1)`
/// rectangle. Errors if the initial diagram does not fit in `n` rows.
pub fn excited_diagrams(lambda: &Partition, n: usize) -> Result<Vec<ExcitedDiagram>> {
    if lambda.len() > n {
        return Err(Error::InvalidArgument(format!(
            "shape {lambda} has more than n = {n} rows"
        )));
    }
    let start = ExcitedDiagram {
        ambient: Ambient::Straight,
        rows: n,
        cols: lambda.part(1) + n.saturating_sub(1),
        boxes: lambda.cells().into_iter().map(|u| (u.row, u.col)).collect(),
    };
    Ok(closure(start))
}

/// All excited diagrams of the strict shape `mu` in the shifted part of
/// the `n x (mu_1 + n - 1)` rectangle.
pub fn shifted_excited_diagrams(mu: &StrictPartition, n: usize) -> Result<Vec<ExcitedDiagram>> {
    if mu.len() > n {
        return Err(Error::InvalidArgument(format!(
            "shape {mu} has more than n = {n} rows"
        )));
    }
    let start = ExcitedDiagram {
        ambient: Ambient::Shifted,
        rows: n,
        cols: mu.part(1) + n.saturating_sub(1),
        boxes: mu
            .shifted_cells()
            .into_iter()
            .map(|u| (u.row, u.col))
            .collect(),
    };
    Ok(closure(start))
}

/// `G_lambda(x_1..x_n | beta)` as the sum of type-A diagram weights.
pub fn g_via_eyd(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    let ds = excited_diagrams(lambda, n)?;
    Ok(ds
        .into_iter()
        .fold(MultiPoly::zero(n), |acc, d| acc + d.weight_type_a()))
}

/// `GP_mu(x_1..x_n | beta)` as the sum of shifted diagram weights.
pub fn gp_via_eyd(mu: &StrictPartition, n: usize) -> Result<MultiPoly> {
    let ds = shifted_excited_diagrams(mu, n)?;
    Ok(ds
        .into_iter()
        .fold(MultiPoly::zero(n), |acc, d| acc + d.weight_type_b()))
}

/// `G_lambda(1, ..., 1 | beta)` evaluated diagram by diagram: each diagram
/// contributes `(1 + beta)^{|B(D)|}`.
pub fn g_at_x1(lambda: &Partition, n: usize, beta: &Rat) -> Result<Rat> {
    let ds = excited_diagrams(lambda, n)?;
    let w = Rat::one() + beta;
    let mut acc = Rat::zero();
    for d in &ds {
        acc += w.pow(d.broken_boxes().len() as i32);
    }
    Ok(acc)
}

/// `GP_mu(1, ..., 1 | beta)` evaluated diagram by diagram with the
/// specialized box weights (`2 + beta` off the diagonal up to column `n`,
/// `1` elsewhere; broken boxes contribute `1 + beta * wt`).
pub fn gp_at_x1(mu: &StrictPartition, n: usize, beta: &Rat) -> Result<Rat> {
    let ds = shifted_excited_diagrams(mu, n)?;
    let off_diag = rat_int(2) + beta;
    let mut acc = Rat::zero();
    for d in &ds {
        let mut term = Rat::one();
        for &(i, j) in &d.boxes {
            if j != i && j <= n {
                term *= &off_diag;
            }
        }
        for (i, j) in d.broken_boxes() {
            if j == i || j > n {
                term *= Rat::one() + beta;
            } else {
                term *= Rat::one() + beta * &off_diag;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Outcome of the 3-adic divisibility check on the shifted staircase
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeAdicReport {
    pub count: Int,
    pub valuation: u64,
    pub required: u64,
    pub holds: bool,
}

/// Checks that `3^{binom(k-1, 2)}` divides the number of shifted
/// set-valued tableaux of the shifted staircase of order `k` with `n`
/// letters, computed via the diagram expansion at `beta = 1`.
pub fn three_adic_check(k: usize, n: usize) -> Result<ThreeAdicReport> {
    let mu = shifted_staircase(k);
    let value = gp_at_x1(&mu, n, &rat_int(1))?;
    let count = as_integer(&value).expect("integral at beta = 1");
    let required = if k >= 2 { ((k - 1) * (k - 2) / 2) as u64 } else { 0 };
    let three = Int::from(3);
    let mut valuation = 0u64;
    let mut m = count.clone();
    while !m.is_zero() && (&m % &three).is_zero() {
        m /= &three;
        valuation += 1;
    }
    let holds = count.is_zero() || valuation >= required;
    Ok(ThreeAdicReport {
        count,
        valuation,
        required,
        holds,
    })
}
