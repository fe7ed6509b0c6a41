//! Semistandard, set-valued, and shifted set-valued tableaux: exact counting
//! formulas and brute-force enumeration.
//!
//! Enumeration is a depth-first fill in row-major box order. At each box the
//! candidate entry sets are drawn from the interval allowed by the left and
//! upper neighbours and pruned by the column/prime multiplicity rules, so the
//! search is exhaustive by construction. Output order is deterministic:
//! row-major boxes, candidate sets in lexicographic order.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{binomial, Int};
use crate::shapes::{content, hook_length, Cell, Partition, StrictPartition};
use crate::{Error, Result};

/// A tableau entry: a value in `[n]`, optionally primed.
///
/// The alphabet `1' < 1 < 2' < 2 < ...` is totally ordered by
/// [`Entry::key`]; plain tableaux only use unprimed entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry {
    pub value: usize,
    pub primed: bool,
}

impl Entry {
    pub fn plain(value: usize) -> Self {
        Entry {
            value,
            primed: false,
        }
    }

    pub fn primed(value: usize) -> Self {
        Entry {
            value,
            primed: true,
        }
    }

    /// Integer key realizing the total order: `2v - 1` if primed, else `2v`.
    pub fn key(self) -> usize {
        2 * self.value - usize::from(self.primed)
    }

    fn from_key(key: usize) -> Self {
        Entry {
            value: key.div_ceil(2),
            primed: key % 2 == 1,
        }
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// The underlying diagram of a tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauShape {
    Straight(Partition),
    Shifted(StrictPartition),
}

impl TableauShape {
    pub fn cells(&self) -> Vec<Cell> {
        match self {
            TableauShape::Straight(p) => p.cells(),
            TableauShape::Shifted(m) => m.shifted_cells(),
        }
    }
}

/// A (set-valued) tableau: every diagram box carries a nonempty sorted set of
/// entries. Cells are stored in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedTableau {
    shape: TableauShape,
    cells: Vec<(Cell, Vec<Entry>)>,
}

impl SetValuedTableau {
    pub fn shape(&self) -> &TableauShape {
        &self.shape
    }

    pub fn cells(&self) -> &[(Cell, Vec<Entry>)] {
        &self.cells
    }

    pub fn get(&self, u: Cell) -> Option<&[Entry]> {
        self.cells
            .iter()
            .find(|(c, _)| *c == u)
            .map(|(_, e)| e.as_slice())
    }

    /// Total number of assigned entries, `|T|`.
    pub fn size(&self) -> usize {
        self.cells.iter().map(|(_, e)| e.len()).sum()
    }
}

impl fmt::Display for SetValuedTableau {
    /// One line per row; cells separated by ` | `, entries space-separated,
    /// primed entries suffixed with `'`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut row = 0;
        for (u, entries) in &self.cells {
            if u.row != row {
                if !first {
                    writeln!(f)?;
                }
                row = u.row;
            } else {
                write!(f, " | ")?;
            }
            first = false;
            let parts: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Weight vector of length `n`: component `m` counts the entries (primed or
/// not) with value `m`, so the components sum to `|T|`.
pub fn weight_vector(t: &SetValuedTableau, n: usize) -> Vec<usize> {
    let mut w = vec![0usize; n];
    for (_, entries) in &t.cells {
        for e in entries {
            w[e.value - 1] += 1;
        }
    }
    w
}

/// Size caps for brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of diagram boxes.
    pub max_cells: usize,
    /// Maximum alphabet bound `n`.
    pub max_entry: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_cells: 16,
            max_entry: 8,
        }
    }
}

impl Caps {
    fn check(&self, num_cells: usize, n: usize) -> Result<()> {
        if num_cells > self.max_cells {
            return Err(Error::CapExceeded {
                what: "diagram size |shape|",
                value: num_cells,
                cap: self.max_cells,
            });
        }
        if n > self.max_entry {
            return Err(Error::CapExceeded {
                what: "alphabet bound n",
                value: n,
                cap: self.max_entry,
            });
        }
        Ok(())
    }
}

/// `|SST(lambda, n)|` by the hook-content formula
/// `prod_{u in lambda} (n + ct(u)) / h(u)`, evaluated exactly.
pub fn count_sst(lam: &Partition, n: usize) -> Result<Int> {
    let mut num = Int::one();
    let mut den = Int::one();
    for u in lam.cells() {
        num *= Int::from(n as i64 + content(u));
        den *= Int::from(hook_length(lam, u).expect("cell in diagram"));
    }
    if num.is_zero() {
        return Ok(Int::zero());
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegralQuotient(format!(
            "hook-content for lambda={lam}, n={n}"
        )));
    }
    Ok(q)
}

/// `|SVT(lambda, n)|` by the nested binomial sum
/// `sum_{k_i=0}^{i-1} prod binom(i-1, k_i) prod_{i<j} (lambda_i - lambda_j + j - i + k_i - k_j) / (j - i)`.
pub fn count_svt_formula(lam: &Partition, n: usize) -> Result<Int> {
    if lam.len() > n {
        return Ok(Int::zero());
    }
    let parts: Vec<i64> = (1..=n).map(|i| lam.part(i) as i64).collect();

    // constant denominator prod_{i<j} (j - i)
    let mut den = Int::one();
    for i in 0..n {
        for j in i + 1..n {
            den *= Int::from((j - i) as i64);
        }
    }

    let mut total = Int::zero();
    let mut k = vec![0i64; n];
    loop {
        let mut term = Int::one();
        for (i, &ki) in k.iter().enumerate() {
            term *= binomial(i as u64, ki as u64);
        }
        for i in 0..n {
            for j in i + 1..n {
                term *= Int::from(parts[i] - parts[j] + (j - i) as i64 + k[i] - k[j]);
            }
        }
        total += term;

        // odometer over k_i in 0..=i-1 (1-indexed)
        let mut idx = n;
        let mut advanced = false;
        while idx > 0 {
            idx -= 1;
            if k[idx] < idx as i64 {
                k[idx] += 1;
                for kj in k.iter_mut().skip(idx + 1) {
                    *kj = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }

    let (q, r) = total.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegralQuotient(format!(
            "SVT binomial sum for lambda={lam}, n={n}"
        )));
    }
    Ok(q)
}

/// Candidate entry sets for one box, in lexicographic order of the sorted key
/// sequence. `keys` is the admissible ascending key range.
fn subsets_lex(keys: &[usize]) -> Vec<Vec<usize>> {
    fn go(keys: &[usize], start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..keys.len() {
            prefix.push(keys[i]);
            out.push(prefix.clone());
            go(keys, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(keys, 0, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variant {
    /// Singleton unprimed entries, strict down the columns.
    Semistandard,
    /// Nonempty unprimed sets, strict down the columns.
    SetValued,
    /// Shifted: primed alphabet, weak in both directions, prime rules.
    ShiftedSetValued,
}

struct Search<'a> {
    cells: &'a [Cell],
    n: usize,
    variant: Variant,
    /// Chosen entry sets (as ascending key lists), one per filled cell.
    chosen: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn cell_index(&self, u: Cell) -> Option<usize> {
        self.cells[..self.chosen.len()].iter().position(|&c| c == u)
    }

    /// Minimum admissible key for the next cell given its neighbours.
    fn lower_bound(&self, u: Cell) -> usize {
        let mut lo = match self.variant {
            Variant::ShiftedSetValued => 1,
            _ => 2, // unprimed keys only
        };
        if u.col > 1 {
            if let Some(i) = self.cell_index(Cell::new(u.row, u.col - 1)) {
                // row condition: max T_{i,j-1} <= min T_{i,j}
                lo = lo.max(*self.chosen[i].last().unwrap());
            }
        }
        if u.row > 1 {
            if let Some(i) = self.cell_index(Cell::new(u.row - 1, u.col)) {
                let above_max = *self.chosen[i].last().unwrap();
                // column condition: strict for unshifted, weak for shifted
                lo = lo.max(match self.variant {
                    Variant::ShiftedSetValued => above_max,
                    _ => above_max + 2,
                });
            }
        }
        lo
    }

    /// Admissible keys at `u` starting from `lo`, after multiplicity pruning.
    fn admissible_keys(&self, u: Cell, lo: usize) -> Vec<usize> {
        let hi = 2 * self.n;
        (lo..=hi)
            .filter(|&key| {
                if self.variant != Variant::ShiftedSetValued && key % 2 == 1 {
                    return false;
                }
                let e = Entry::from_key(key);
                if self.variant == Variant::ShiftedSetValued {
                    // diagonal boxes hold no primed entries
                    if e.primed && u.row == u.col {
                        return false;
                    }
                    // primed entries at most once per row
                    if e.primed {
                        let repeated = self.cells[..self.chosen.len()]
                            .iter()
                            .zip(&self.chosen)
                            .any(|(c, set)| c.row == u.row && set.contains(&key));
                        if repeated {
                            return false;
                        }
                    }
                    // unprimed entries at most once per column
                    if !e.primed {
                        let repeated = self.cells[..self.chosen.len()]
                            .iter()
                            .zip(&self.chosen)
                            .any(|(c, set)| c.col == u.col && set.contains(&key));
                        if repeated {
                            return false;
                        }
                    }
                }
                true
            })
            .collect()
    }

    fn run(&mut self, visit: &mut impl FnMut(&[Cell], &[Vec<usize>])) {
        let next = self.chosen.len();
        if next == self.cells.len() {
            visit(self.cells, &self.chosen);
            return;
        }
        let u = self.cells[next];
        let lo = self.lower_bound(u);
        let keys = self.admissible_keys(u, lo);
        if self.variant == Variant::Semistandard {
            for &k in &keys {
                self.chosen.push(vec![k]);
                self.run(visit);
                self.chosen.pop();
            }
        } else {
            for set in subsets_lex(&keys) {
                self.chosen.push(set);
                self.run(visit);
                self.chosen.pop();
            }
        }
    }
}

fn enumerate(
    shape: TableauShape,
    n: usize,
    variant: Variant,
    caps: &Caps,
) -> Result<Vec<SetValuedTableau>> {
    let cells = shape.cells();
    caps.check(cells.len(), n)?;
    let mut out = Vec::new();
    let mut search = Search {
        cells: &cells,
        n,
        variant,
        chosen: Vec::new(),
    };
    search.run(&mut |cells, chosen| {
        let filled = cells
            .iter()
            .zip(chosen)
            .map(|(&c, keys)| (c, keys.iter().map(|&k| Entry::from_key(k)).collect()))
            .collect();
        out.push(SetValuedTableau {
            shape: shape.clone(),
            cells: filled,
        });
    });
    Ok(out)
}

/// All semistandard tableaux of shape `lam` with entries in `[n]`.
pub fn enumerate_sst(lam: &Partition, n: usize, caps: &Caps) -> Result<Vec<SetValuedTableau>> {
    enumerate(
        TableauShape::Straight(lam.clone()),
        n,
        Variant::Semistandard,
        caps,
    )
}

/// All set-valued tableaux of shape `lam` with entry sets in `2^[n]`.
pub fn enumerate_svt(lam: &Partition, n: usize, caps: &Caps) -> Result<Vec<SetValuedTableau>> {
    enumerate(
        TableauShape::Straight(lam.clone()),
        n,
        Variant::SetValued,
        caps,
    )
}

/// All shifted set-valued tableaux of shape `mu` over the primed alphabet
/// `[n', n]`.
pub fn enumerate_ssvt_p(
    mu: &StrictPartition,
    n: usize,
    caps: &Caps,
) -> Result<Vec<SetValuedTableau>> {
    if mu.len() > n {
        return Err(Error::InvalidArgument(format!(
            "shifted shape has {} rows but n = {n}",
            mu.len()
        )));
    }
    enumerate(
        TableauShape::Shifted(mu.clone()),
        n,
        Variant::ShiftedSetValued,
        caps,
    )
}

/// Independent validity re-check used by the test suites: verifies every
/// definitional inequality directly on a finished tableau.
pub fn validate(t: &SetValuedTableau, n: usize) -> bool {
    let shifted = matches!(t.shape, TableauShape::Shifted(_));
    for (u, entries) in &t.cells {
        if entries.is_empty() {
            return false;
        }
        if entries.windows(2).any(|w| w[0].key() >= w[1].key()) {
            return false;
        }
        if entries.iter().any(|e| e.value < 1 || e.value > n) {
            return false;
        }
        if !shifted && entries.iter().any(|e| e.primed) {
            return false;
        }
        if shifted && u.row == u.col && entries.iter().any(|e| e.primed) {
            return false;
        }
        let max = entries.last().unwrap().key();
        if let Some(right) = t.get(Cell::new(u.row, u.col + 1)) {
            if max > right.first().unwrap().key() {
                return false;
            }
        }
        if let Some(below) = t.get(Cell::new(u.row + 1, u.col)) {
            let min_below = below.first().unwrap().key();
            let ok = if shifted {
                max <= min_below
            } else {
                max < min_below
            };
            if !ok {
                return false;
            }
        }
    }
    if shifted {
        // unprimed at most once per column, primed at most once per row
        for v in 1..=n {
            let mut col_seen = std::collections::HashSet::new();
            let mut row_seen = std::collections::HashSet::new();
            for (u, entries) in &t.cells {
                if entries.contains(&Entry::plain(v)) && !col_seen.insert(u.col) {
                    return false;
                }
                if entries.contains(&Entry::primed(v)) && !row_seen.insert(u.row) {
                    return false;
                }
            }
        }
    }
    true
}
