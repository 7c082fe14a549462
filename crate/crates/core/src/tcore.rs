//! t-cores and their integer-vector codings.
//!
//! For odd `t = 2t' + 1` a t-core λ is encoded by
//!
//! * its H-set: first-column hook lengths together with `-1, ..., -t`;
//! * the U-coding: the largest H-set element of each residue class mod t;
//! * the V-coding: the U-coding shifted to sum to zero (`φ_V`);
//! * the N-coding of Garvan, Kim and Stanton (`φ_N`), read off the row ends
//!   of the extended t-residue diagram.
//!
//! All vectors are stored in residue order: entry `i` of a U- or V-coding is
//! the element congruent to `i` mod t.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Integer, Rational};
use crate::partition::{enumerate_partitions, Partition};

pub fn is_t_core(lambda: &Partition, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::NonPositiveModulus);
    }
    Ok(!lambda.hook_lengths().contains(&t))
}

/// Coding operations only make sense for odd `t >= 3`.
pub fn check_odd_modulus(t: usize) -> Result<()> {
    if t < 3 || t.is_multiple_of(2) {
        Err(Error::EvenOrSmallModulus(t))
    } else {
        Ok(())
    }
}

fn require_core(lambda: &Partition, t: usize) -> Result<()> {
    check_odd_modulus(t)?;
    if is_t_core(lambda, t)? {
        Ok(())
    } else {
        Err(Error::NotTCore {
            partition: lambda.to_string(),
            t,
        })
    }
}

fn residue(a: i64, t: usize) -> usize {
    a.rem_euclid(t as i64) as usize
}

fn format_vector(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(", "))
}

/// A t-compact set of integers (the H-set of a t-core).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSet {
    t: usize,
    elements: BTreeSet<i64>,
}

impl HSet {
    pub fn new(t: usize, elements: BTreeSet<i64>) -> Result<Self> {
        check_odd_modulus(t)?;
        if !Self::is_t_compact(t, &elements) {
            return Err(Error::InvalidCoding(format!(
                "{elements:?} is not {t}-compact"
            )));
        }
        Ok(HSet { t, elements })
    }

    /// The three t-compactness conditions.
    pub fn is_t_compact(t: usize, elements: &BTreeSet<i64>) -> bool {
        let ti = t as i64;
        let has_negatives = (1..=ti).all(|k| elements.contains(&-k));
        let others_ok = elements
            .iter()
            .filter(|&&a| a < -ti || a > -1)
            .all(|&a| a >= 1 && a % ti != 0);
        let closed = elements
            .iter()
            .filter(|&&b| b > ti)
            .all(|&b| elements.contains(&(b - ti)));
        has_negatives && others_ok && closed
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn elements(&self) -> &BTreeSet<i64> {
        &self.elements
    }

    /// Elements in decreasing order.
    pub fn descending(&self) -> Vec<i64> {
        self.elements.iter().rev().copied().collect()
    }

    /// The t-maximal elements, as a U-coding.
    pub fn max_t(&self) -> UCoding {
        let mut u = vec![i64::MIN; self.t];
        for &a in &self.elements {
            let r = residue(a, self.t);
            u[r] = u[r].max(a);
        }
        UCoding { t: self.t, u }
    }

    /// `∏_{a ∈ A, a > 0} (1 - t²/a²)`.
    pub fn positive_product(&self) -> Rational {
        let t2 = (self.t * self.t) as i64;
        self.elements
            .iter()
            .filter(|&&a| a > 0)
            .fold(Rational::one(), |acc, &a| {
                acc * Rational::new(Integer::from(a * a - t2), Integer::from(a * a))
            })
    }

    /// `∏_{a ∈ max_t(A), a ≠ -t} (a + t)/a`.
    pub fn maximal_product(&self) -> Rational {
        let ti = self.t as i64;
        self.max_t()
            .u
            .iter()
            .filter(|&&a| a != -ti)
            .fold(Rational::one(), |acc, &a| {
                acc * Rational::new(Integer::from(a + ti), Integer::from(a))
            })
    }
}

impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.descending().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UCoding {
    t: usize,
    u: Vec<i64>,
}

impl UCoding {
    pub fn new(t: usize, u: Vec<i64>) -> Result<Self> {
        check_odd_modulus(t)?;
        let ti = t as i64;
        let ok = u.len() == t
            && u[0] == -ti
            && u.iter()
                .enumerate()
                .skip(1)
                .all(|(i, &x)| x > -ti && residue(x, t) == i)
            && u.iter().sum::<i64>() % ti == 0;
        if !ok {
            return Err(Error::InvalidCoding(format!(
                "{u:?} is not a U-coding for t={t}"
            )));
        }
        Ok(UCoding { t, u })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[i64] {
        &self.u
    }

    /// `S = Σ u_i`, always a multiple of t.
    pub fn sum(&self) -> i64 {
        self.u.iter().sum()
    }

    /// The H-set generated by downward closure along residue classes.
    pub fn to_hset(&self) -> HSet {
        let ti = self.t as i64;
        let mut elements = BTreeSet::from([-ti]);
        for (r, &top) in self.u.iter().enumerate().skip(1) {
            let mut a = r as i64 - ti;
            while a <= top {
                elements.insert(a);
                a += ti;
            }
        }
        HSet {
            t: self.t,
            elements,
        }
    }
}

impl fmt::Display for UCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.u))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VCoding {
    t: usize,
    v: Vec<i64>,
}

impl VCoding {
    pub fn new(t: usize, v: Vec<i64>) -> Result<Self> {
        check_odd_modulus(t)?;
        let ok = v.len() == t
            && v.iter().enumerate().all(|(i, &x)| residue(x, t) == i)
            && v.iter().sum::<i64>() == 0;
        if !ok {
            return Err(Error::InvalidCoding(format!(
                "{v:?} is not a V-coding for t={t}"
            )));
        }
        Ok(VCoding { t, v })
    }

    /// The V-coding of the empty t-core: `{-t', ..., t'}` in residue order.
    pub fn empty_core(t: usize) -> Result<Self> {
        check_odd_modulus(t)?;
        let half = (t as i64 - 1) / 2;
        let mut v = vec![0; t];
        for x in -half..=half {
            v[residue(x, t)] = x;
        }
        Ok(VCoding { t, v })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[i64] {
        &self.v
    }

    pub fn square_sum(&self) -> i64 {
        self.v.iter().map(|x| x * x).sum()
    }
}

impl fmt::Display for VCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCoding {
    t: usize,
    n: Vec<i64>,
}

impl NCoding {
    pub fn new(t: usize, n: Vec<i64>) -> Result<Self> {
        check_odd_modulus(t)?;
        if n.len() != t || n.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidCoding(format!(
                "{n:?} is not an N-coding for t={t}"
            )));
        }
        Ok(NCoding { t, n })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[i64] {
        &self.n
    }

    /// `(t/2) Σ n_i² + Σ i·n_i`.
    pub fn weight(&self) -> i64 {
        let squares: i64 = self.n.iter().map(|x| x * x).sum();
        let linear: i64 = self.n.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
        // t·Σn² is even because Σn_i = 0 forces Σn_i² to be even.
        self.t as i64 * squares / 2 + linear
    }
}

impl fmt::Display for NCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.n))
    }
}

pub fn h_set(lambda: &Partition, t: usize) -> Result<HSet> {
    require_core(lambda, t)?;
    let ti = t as i64;
    let mut elements: BTreeSet<i64> = lambda
        .first_column_hooks()
        .into_iter()
        .map(|h| h as i64)
        .collect();
    elements.extend((1..=ti).map(|k| -k));
    debug_assert!(HSet::is_t_compact(t, &elements));
    Ok(HSet { t, elements })
}

pub fn u_coding(lambda: &Partition, t: usize) -> Result<UCoding> {
    Ok(h_set(lambda, t)?.max_t())
}

/// `φ_V`: the U-coding normalized by `S/t`.
pub fn v_coding(lambda: &Partition, t: usize) -> Result<VCoding> {
    let u = u_coding(lambda, t)?;
    let shift = u.sum() / t as i64;
    let mut v = vec![0; t];
    for &x in u.values() {
        let y = x - shift;
        v[residue(y, t)] = y;
    }
    Ok(VCoding { t, v })
}

/// `φ_N`: for each label i, the largest region holding an exposed box
/// labelled i in the extended t-residue diagram.
///
/// Row r (1-based, longest row first) ends in the box of content
/// `λ_r - r`; rows `ℓ+1, ..., ℓ+t` end in their column-0 box. Labels are
/// contents mod t and region r collects contents in `[t(r-1), tr)`.
pub fn n_coding(lambda: &Partition, t: usize) -> Result<NCoding> {
    require_core(lambda, t)?;
    let ti = t as i64;
    let mut n = vec![i64::MIN; t];
    for row in 1..=lambda.len() + t {
        let content = lambda.row(row) as i64 - row as i64;
        let label = residue(content, t);
        let region = content.div_euclid(ti) + 1;
        n[label] = n[label].max(region);
    }
    Ok(NCoding { t, n })
}

/// `φ_V^N`.
pub fn v_from_n(nc: &NCoding) -> Result<VCoding> {
    let t = nc.t;
    if nc.n.len() != t || nc.n.iter().sum::<i64>() != 0 {
        return Err(Error::InvalidCoding(format!(
            "{:?} does not sum to zero",
            nc.n
        )));
    }
    let ti = t as i64;
    let half = (t - 1) / 2;
    let v = (0..t)
        .map(|i| {
            if i <= half {
                ti * nc.n[i + half] + i as i64
            } else {
                ti * nc.n[i - half - 1] + i as i64 - ti
            }
        })
        .collect();
    Ok(VCoding { t, v })
}

/// Inverse of [`v_from_n`].
pub fn n_from_v(vc: &VCoding) -> NCoding {
    let t = vc.t;
    let ti = t as i64;
    let half = (t - 1) / 2;
    let mut n = vec![0; t];
    for (i, &x) in vc.v.iter().enumerate() {
        if i <= half {
            n[i + half] = (x - i as i64) / ti;
        } else {
            n[i - half - 1] = (x - i as i64 + ti) / ti;
        }
    }
    NCoding { t, n }
}

/// Inverse of `φ_V`.
pub fn v_decode(vc: &VCoding) -> Partition {
    let t = vc.t;
    let ti = t as i64;
    let shift = -ti - vc.v.iter().copied().min().unwrap_or(0);
    let mut u = vec![0; t];
    for &x in &vc.v {
        let y = x + shift;
        u[residue(y, t)] = y;
    }
    let hset = UCoding { t, u }.to_hset();
    let hooks: Vec<usize> = hset
        .descending()
        .into_iter()
        .filter(|&a| a > 0)
        .map(|a| a as usize)
        .collect();
    let len = hooks.len();
    let parts = hooks
        .iter()
        .enumerate()
        .map(|(i, &h)| h - (len - 1 - i))
        .collect();
    Partition::new(parts).expect("decoded H-set yields a partition")
}

/// `|λ| = Σ v_i²/(2t) - (t²-1)/24`.
pub fn core_weight_from_v(vc: &VCoding) -> Result<i64> {
    let t = vc.t as i64;
    let numer = 12 * vc.square_sum() - t * (t * t - 1);
    let denom = 24 * t;
    if numer % denom != 0 || numer < 0 {
        return Err(Error::InvalidCoding(format!(
            "{vc} has non-integral weight {numer}/{denom}"
        )));
    }
    Ok(numer / denom)
}

/// `c₀ = (-1)^{t'} / (1!·2!···(t-1)!)`.
pub fn macdonald_constant(t: usize) -> Rational {
    let denom = (1..t as u64).fold(Integer::one(), |acc, k| acc * factorial(k));
    let sign = if ((t - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    Rational::new(Integer::from(sign), denom)
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(values: &[i64]) -> Integer {
    let mut prod = Integer::one();
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            prod *= a - b;
        }
    }
    prod
}

/// `∏_{v∈λ} (1 - t²/h_v²)` computed from the V-coding alone.
pub fn core_hook_product_from_v(vc: &VCoding) -> Rational {
    macdonald_constant(vc.t) * Rational::from_integer(vandermonde(&vc.v))
}

/// λ with its leftmost column removed.
pub fn erase_first_column(lambda: &Partition) -> Partition {
    let parts = lambda
        .parts()
        .iter()
        .filter(|&&p| p > 1)
        .map(|p| p - 1)
        .collect();
    Partition::new(parts).expect("column erasure keeps parts decreasing")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreMethod {
    /// Filter all partitions of n by the core condition.
    Filter,
    /// Solve the N-coding weight equation and decode.
    Coding,
}

/// All t-cores of `n`, in reverse-lexicographic order.
pub fn enumerate_t_cores(n: usize, t: usize, method: CoreMethod) -> Result<Vec<Partition>> {
    match method {
        CoreMethod::Filter => {
            if t == 0 {
                return Err(Error::NonPositiveModulus);
            }
            Ok(enumerate_partitions(n)
                .into_iter()
                .filter(|l| !l.hook_lengths().contains(&t))
                .collect())
        }
        CoreMethod::Coding => {
            check_odd_modulus(t)?;
            let mut cores: Vec<Partition> = n_codings_up_to(n, t)
                .into_iter()
                .filter(|nc| nc.weight() == n as i64)
                .map(|nc| v_decode(&v_from_n(&nc).expect("enumerated codings sum to zero")))
                .collect();
            cores.sort_unstable_by(|a, b| b.cmp(a));
            Ok(cores)
        }
    }
}

/// Every N-coding of weight at most `max_weight`.
///
/// `Σ (t·n_i + i)² = 2t·weight + Σ i²`, so each shifted coordinate is
/// bounded by the square root of the right side.
pub fn n_codings_up_to(max_weight: usize, t: usize) -> Vec<NCoding> {
    let ti = t as i64;
    let budget = 2 * ti * max_weight as i64 + (0..ti).map(|i| i * i).sum::<i64>();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);

    fn go(t: usize, budget: i64, used: i64, current: &mut Vec<i64>, out: &mut Vec<NCoding>) {
        let ti = t as i64;
        let i = current.len() as i64;
        if current.len() == t - 1 {
            let last = -current.iter().sum::<i64>();
            let sq = (ti * last + i).pow(2);
            if used + sq <= budget {
                let mut n = current.clone();
                n.push(last);
                let nc = NCoding { t, n };
                if nc.weight() >= 0 {
                    out.push(nc);
                }
            }
            return;
        }
        let room = budget - used;
        let reach = (room as f64).sqrt() as i64 + 1;
        let lo = (-reach - i).div_euclid(ti) - 1;
        let hi = (reach - i).div_euclid(ti) + 1;
        for x in lo..=hi {
            let sq = (ti * x + i).pow(2);
            if used + sq > budget {
                continue;
            }
            current.push(x);
            go(t, budget, used + sq, current, out);
            current.pop();
        }
    }

    go(t, budget, 0, &mut current, &mut out);
    out
}

/// Every V-coding with `Σ v_i² ≤ max_square_sum`, in lexicographic order.
pub fn v_codings_with_square_sum_at_most(t: usize, max_square_sum: i64) -> Result<Vec<VCoding>> {
    check_odd_modulus(t)?;
    let mut out = Vec::new();

    fn go(t: usize, bound: i64, used: i64, current: &mut Vec<i64>, out: &mut Vec<VCoding>) {
        let ti = t as i64;
        let i = current.len() as i64;
        if current.len() == t - 1 {
            let last = -current.iter().sum::<i64>();
            if residue(last, t) == t - 1 && used + last * last <= bound {
                let mut v = current.clone();
                v.push(last);
                out.push(VCoding { t, v });
            }
            return;
        }
        let reach = ((bound - used) as f64).sqrt() as i64;
        // smallest value ≡ i (mod t) that is >= -reach
        let mut x = -reach + (i - (-reach)).rem_euclid(ti);
        while x <= reach {
            if used + x * x <= bound {
                current.push(x);
                go(t, bound, used + x * x, current, out);
                current.pop();
            }
            x += ti;
        }
    }

    if max_square_sum >= 0 {
        go(t, max_square_sum, 0, &mut Vec::with_capacity(t), &mut out);
    }
    Ok(out)
}

/// V-codings whose weight is at most `max_weight`, paired with that weight.
pub fn v_codings_up_to(max_weight: usize, t: usize) -> Result<Vec<(usize, VCoding)>> {
    let ti = t as i64;
    // Σv² = 2t·w + t(t²-1)/12
    let bound = 2 * ti * max_weight as i64 + ti * (ti * ti - 1) / 12;
    let all = v_codings_with_square_sum_at_most(t, bound)?;
    all.into_iter()
        .map(|vc| core_weight_from_v(&vc).map(|w| (w as usize, vc)))
        .collect()
}

/// True when `∏(1 - t²/h²)` vanishes, i.e. some hook is a multiple of t.
pub fn has_hook_multiple(lambda: &Partition, t: usize) -> bool {
    lambda.hook_lengths().iter().any(|h| h % t == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_int, Ring};

    fn example() -> Partition {
        "14,10,6,6,4,4,4,2,2,2".parse().unwrap()
    }

    #[test]
    fn core_membership() {
        assert!(is_t_core(&"3,2".parse().unwrap(), 5).unwrap());
        assert!(is_t_core(&Partition::empty(), 7).unwrap());
        assert!(!is_t_core(&"6,3,3,2".parse().unwrap(), 3).unwrap());
        assert_eq!(
            is_t_core(&Partition::empty(), 0),
            Err(Error::NonPositiveModulus)
        );
    }

    #[test]
    fn example_pipeline() {
        let lambda = example();
        let h = h_set(&lambda, 5).unwrap();
        assert_eq!(
            h.descending(),
            [23, 18, 13, 12, 9, 8, 7, 4, 3, 2, -1, -2, -3, -4, -5]
        );
        let u = u_coding(&lambda, 5).unwrap();
        assert_eq!(u.values(), &[-5, -4, 12, 23, 9]);
        assert_eq!(u.sum(), 35);
        let v = v_coding(&lambda, 5).unwrap();
        assert_eq!(v.values(), &[5, 16, 2, -12, -11]);
        let n = n_coding(&lambda, 5).unwrap();
        assert_eq!(n.values(), &[-2, -2, 1, 3, 0]);
        assert_eq!(n.weight(), 54);
        assert_eq!(v_from_n(&n).unwrap(), v);
        assert_eq!(n_from_v(&v), n);
        assert_eq!(v_decode(&v), lambda);
        assert_eq!(core_weight_from_v(&v).unwrap(), 54);
        assert_eq!(core_hook_product_from_v(&v), rat_int(60035976));
        assert_eq!(macdonald_constant(5), Rational::new(1.into(), 288.into()));
        assert_eq!(u.to_hset(), h);
    }

    #[test]
    fn small_cores_by_hand() {
        let lambda: Partition = "3,2".parse().unwrap();
        let h = h_set(&lambda, 5).unwrap();
        assert_eq!(h.descending(), [4, 2, -1, -2, -3, -4, -5]);
        // residues: 4 → class 4, 2 → class 2, -4 → 1, -2 → 3
        assert_eq!(u_coding(&lambda, 5).unwrap().values(), &[-5, -4, 2, -2, 4]);
        let empty = Partition::empty();
        assert_eq!(h_set(&empty, 3).unwrap().descending(), [-1, -2, -3]);
        assert_eq!(u_coding(&empty, 5).unwrap().values(), &[-5, -4, -3, -2, -1]);
        // U = (-3,-2,-1), S = -6, shift +2 gives {-1, 0, 1}
        assert_eq!(v_coding(&empty, 3).unwrap().values(), &[0, 1, -1]);
        assert_eq!(
            v_coding(&empty, 3).unwrap(),
            VCoding::empty_core(3).unwrap()
        );
        assert_eq!(n_coding(&empty, 7).unwrap().values(), &[0; 7]);
        assert_eq!(
            v_from_n(&NCoding::new(3, vec![0, 0, 0]).unwrap()).unwrap(),
            VCoding::empty_core(3).unwrap()
        );
        assert_eq!(v_decode(&VCoding::empty_core(5).unwrap()), empty);
        assert_eq!(
            core_weight_from_v(&VCoding::empty_core(3).unwrap()).unwrap(),
            0
        );
        assert_eq!(
            core_hook_product_from_v(&VCoding::empty_core(7).unwrap()),
            rat_int(1)
        );
    }

    #[test]
    fn coding_errors() {
        let not_core: Partition = "6,3,3,2".parse().unwrap();
        assert!(matches!(h_set(&not_core, 3), Err(Error::NotTCore { .. })));
        assert!(matches!(
            v_coding(&Partition::empty(), 4),
            Err(Error::EvenOrSmallModulus(4))
        ));
        assert!(VCoding::new(3, vec![0, 1, 2]).is_err());
        assert!(NCoding::new(3, vec![1, 0, 0]).is_err());
        let bad = NCoding {
            t: 3,
            n: vec![1, 1, 0],
        };
        assert!(v_from_n(&bad).is_err());
        assert!(UCoding::new(5, vec![-5, -4, 12, 23, 9]).is_ok());
        assert!(UCoding::new(5, vec![-5, -4, 12, 23, 10]).is_err());
    }

    #[test]
    fn both_enumerations_agree() {
        let cores = enumerate_t_cores(5, 5, CoreMethod::Filter).unwrap();
        let names: Vec<String> = cores.iter().map(|c| c.to_string()).collect();
        assert_eq!(names, ["3,2", "2,2,1"]);
        assert_eq!(enumerate_t_cores(5, 5, CoreMethod::Coding).unwrap(), cores);
        for t in [3, 5, 7] {
            assert_eq!(
                enumerate_t_cores(0, t, CoreMethod::Coding).unwrap(),
                vec![Partition::empty()]
            );
        }
        for n in 0..=20 {
            assert_eq!(
                enumerate_t_cores(n, 3, CoreMethod::Coding).unwrap(),
                enumerate_t_cores(n, 3, CoreMethod::Filter).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn exhaustive_coding_properties() {
        for t in [3usize, 5, 7] {
            for n in 0..=18 {
                for lambda in enumerate_t_cores(n, t, CoreMethod::Filter).unwrap() {
                    let h = h_set(&lambda, t).unwrap();
                    assert!(HSet::is_t_compact(t, h.elements()));
                    let v = v_coding(&lambda, t).unwrap();
                    assert!(VCoding::new(t, v.values().to_vec()).is_ok());
                    let u = u_coding(&lambda, t).unwrap();
                    assert_eq!(
                        u.sum() / t as i64,
                        lambda.len() as i64 - (t as i64 - 1) / 2 - 1
                    );
                    assert_eq!(v_from_n(&n_coding(&lambda, t).unwrap()).unwrap(), v);
                    assert_eq!(v_decode(&v), lambda);
                    assert_eq!(core_weight_from_v(&v).unwrap(), n as i64);
                    assert_eq!(
                        core_hook_product_from_v(&v),
                        lambda.hook_product_at(&rat_int((t * t) as i64))
                    );
                    assert_eq!(h.positive_product(), h.maximal_product());
                }
            }
        }
    }

    #[test]
    fn vanishing_criterion() {
        for t in [3usize, 5, 7] {
            for n in 0..=15 {
                for lambda in enumerate_partitions(n) {
                    let zero = lambda
                        .hook_beta_product()
                        .eval(&rat_int((t * t) as i64))
                        .is_zero_elem();
                    assert_eq!(zero, !is_t_core(&lambda, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn lemma_column_erasure_example() {
        let lambda = example();
        let erased = erase_first_column(&lambda);
        assert_eq!(erased.to_string(), "13,9,5,5,3,3,3,1,1,1");
        assert_eq!(u_coding(&erased, 5).unwrap().values(), &[-5, 11, 22, 8, -1]);
    }

    #[test]
    fn v_coding_enumeration_counts_cores() {
        for t in [3usize, 5] {
            let codings = v_codings_up_to(15, t).unwrap();
            for n in 0..=15 {
                let count = codings.iter().filter(|(w, _)| *w == n).count();
                assert_eq!(
                    count,
                    enumerate_t_cores(n, t, CoreMethod::Filter).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn random_n_codings_round_trip() {
        for nc in n_codings_up_to(12, 7) {
            let v = v_from_n(&nc).unwrap();
            assert!(VCoding::new(7, v.values().to_vec()).is_ok());
            assert_eq!(n_from_v(&v), nc);
            assert_eq!(core_weight_from_v(&v).unwrap(), nc.weight());
        }
    }
}
