//! Integer partitions and the statistics of their Ferrers diagrams.
//!
//! Rows are numbered from 1 with row 1 holding the largest part, columns
//! from 1 left to right. Hook lengths, contents and `b(λ)` do not depend on
//! how the diagram is drawn, only on this indexing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, mul_by_const_minus_beta, BetaPoly, Integer, Rational};

/// Multiset of positive integers as a value → multiplicity map.
pub type Multiset = BTreeMap<usize, u64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box `(row, col)` of a Ferrers diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookData {
    pub arm: usize,
    pub leg: usize,
    pub content: i64,
}

impl HookData {
    pub fn hook_length(&self) -> usize {
        self.arm + self.leg + 1
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::InvalidCell {
                row: cell.row,
                col: cell.col,
                partition: self.to_string(),
            })
        }
    }

    pub fn arm_leg_content(&self, cell: Cell) -> Result<HookData> {
        self.check_cell(cell)?;
        let column_height = self.parts.iter().take_while(|&&p| p >= cell.col).count();
        Ok(HookData {
            arm: self.row(cell.row) - cell.col,
            leg: column_height - cell.row,
            content: cell.col as i64 - cell.row as i64,
        })
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm_leg_content(cell)?.hook_length())
    }

    /// Hook data of every cell, row-major.
    pub fn hook_data(&self) -> Vec<HookData> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| HookData {
                arm: self.row(c.row) - c.col,
                leg: conj.row(c.col) - c.row,
                content: c.col as i64 - c.row as i64,
            })
            .collect()
    }

    /// Hook lengths of every cell, row-major.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| self.row(c.row) - c.col + conj.row(c.col) - c.row + 1)
            .collect()
    }

    pub fn hook_multiset(&self) -> Multiset {
        let mut m = Multiset::new();
        for h in self.hook_lengths() {
            *m.entry(h).or_default() += 1;
        }
        m
    }

    /// Hook lengths of the leftmost column, top to bottom (strictly decreasing).
    pub fn first_column_hooks(&self) -> Vec<usize> {
        let len = self.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - (i + 1))
            .collect()
    }

    /// `b(λ) = Σ (i-1) λ_i`.
    pub fn b_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Number of standard Young tableaux, `n! / ∏ h_v`.
    pub fn syt_count(&self) -> Integer {
        let hook_product = self
            .hook_lengths()
            .into_iter()
            .fold(Integer::one(), |acc, h| acc * h);
        let n_fact = factorial(self.weight() as u64);
        assert!(
            (&n_fact % &hook_product).is_zero(),
            "hook product does not divide n! for {self}"
        );
        n_fact / hook_product
    }

    /// The polynomial `∏_v (1 - β/h_v²)`.
    pub fn hook_beta_product(&self) -> BetaPoly {
        // ∏ (h² - β) / ∏ h², accumulated over the integers.
        let mut numer = vec![Integer::one()];
        let mut denom = Integer::one();
        for h in self.hook_lengths() {
            let h2 = Integer::from(h * h);
            mul_by_const_minus_beta(&mut numer, &h2);
            denom *= h2;
        }
        BetaPoly::new(
            numer
                .into_iter()
                .map(|c| Rational::new(c, denom.clone()))
                .collect(),
        )
    }

    /// `∏_v (1 - β/h_v²)` at a fixed rational β.
    pub fn hook_product_at(&self, beta: &Rational) -> Rational {
        let mut numer = Integer::one();
        let mut denom = Integer::one();
        for h in self.hook_lengths() {
            let h2 = Rational::from_integer(Integer::from(h * h));
            let factor = &h2 - beta;
            if factor.is_zero() {
                return Rational::zero();
            }
            numer *= factor.numer() * h2.denom();
            denom *= factor.denom() * h2.numer();
        }
        Rational::new(numer, denom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| Error::Parse {
                    kind: "partition",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Staircase `Δ_m = (m, m-1, ..., 1)`; `doubled` repeats every part twice
/// (`Δ²_m`), `transposed` returns the conjugate.
pub fn staircase(m: usize, doubled: bool, transposed: bool) -> Partition {
    let reps = if doubled { 2 } else { 1 };
    let parts: Vec<usize> = (1..=m)
        .rev()
        .flat_map(|p| std::iter::repeat_n(p, reps))
        .collect();
    let p = Partition::from_sorted(parts);
    if transposed {
        p.conjugate()
    } else {
        p
    }
}

/// All partitions of `n` in reverse-lexicographic order of their part lists.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            go(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

static PARTITION_COUNTS: OnceLock<Mutex<Vec<Integer>>> = OnceLock::new();

/// `p(0), ..., p(n)` from Euler's pentagonal recurrence (memoized).
pub fn partition_counts(n: usize) -> Vec<Integer> {
    let cache = PARTITION_COUNTS.get_or_init(|| Mutex::new(vec![Integer::one()]));
    let mut p = cache.lock().unwrap_or_else(|e| e.into_inner());
    while p.len() <= n {
        let m = p.len() as i64;
        let mut total = Integer::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_positive = k % 2 == 1;
            let mut term = p[(m - g1) as usize].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &p[(m - g2) as usize];
            }
            if sign_positive {
                total += term;
            } else {
                total -= term;
            }
        }
        p.push(total);
    }
    p[..=n].to_vec()
}

/// `H(n)`: multiset union of the hook lengths of all partitions of `n`.
pub fn hook_multiset_all(n: usize) -> Multiset {
    let mut m = Multiset::new();
    for lambda in enumerate_partitions(n) {
        for h in lambda.hook_lengths() {
            *m.entry(h).or_default() += 1;
        }
    }
    m
}

/// `Ġ(n)`: the parts of all partitions of `n`, each part `a` counted `a` times.
pub fn dotted_part_multiset(n: usize) -> Multiset {
    let mut m = Multiset::new();
    for lambda in enumerate_partitions(n) {
        for &a in lambda.parts() {
            *m.entry(a).or_default() += a as u64;
        }
    }
    m
}
