//! Partitions, N-tuples of partitions and the generalized dominance orders.
//!
//! For `L`, the order compares the partial sums
//!
//! ```text
//! |λ(N)| + … + |λ(j+1)| + λ(j)_1 + … + λ(j)_i
//! ```
//!
//! for every colour `j` and row `i`; `R` does the same with the colours
//! read from `1` upwards. Both are componentwise orders on a partial-sum
//! vector, so a lexicographic order on that vector is a linear extension.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts `parts` only if already weakly decreasing and positive.
    pub fn from_parts(parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            None
        } else {
            Some(Partition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let max = self.0.first().copied().unwrap_or(0) as usize;
        let mut m = alloc::vec![0; max + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_λ = Π k^{m_k} m_k!`.
    pub fn z(&self) -> u64 {
        let mut z: u64 = 1;
        for (k, &mk) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=mk as u64 {
                z *= k as u64 * j;
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// An N-tuple of partitions; component `i` is colour `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "at least one colour");
        MultiPartition(components)
    }

    pub fn empty(n: usize) -> Self {
        MultiPartition(alloc::vec![Partition::empty(); n])
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Colour `i`, 1-based.
    pub fn color(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Partition::weight).sum()
    }

    pub fn color_weights(&self) -> Vec<u32> {
        self.0.iter().map(Partition::weight).collect()
    }

    /// Partial sums for `kind`, padded so that vectors of equal-weight
    /// multipartitions have equal length.
    pub fn partial_sums(&self, kind: OrderKind) -> Vec<u32> {
        let d = self.weight() as usize;
        let mut out = Vec::with_capacity(d * self.0.len());
        let mut base = 0;
        let mut push_block = |block: &Partition, out: &mut Vec<u32>| {
            let mut s = base;
            for i in 0..d.max(1) {
                s += block.0.get(i).copied().unwrap_or(0);
                out.push(s);
            }
            base = s;
        };
        match kind {
            OrderKind::L => self.0.iter().rev().for_each(|b| push_block(b, &mut out)),
            OrderKind::R => self.0.iter().for_each(|b| push_block(b, &mut out)),
        }
        out
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Which generalized dominance order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    L,
    R,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::L => "L",
            OrderKind::R => "R",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderResult {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// The partial order `≥L` or `≥R`.
pub fn compare(lhs: &MultiPartition, rhs: &MultiPartition, kind: OrderKind) -> OrderResult {
    assert_eq!(lhs.colors(), rhs.colors(), "colour counts differ");
    if lhs.weight() != rhs.weight() {
        return OrderResult::Incomparable;
    }
    if lhs == rhs {
        return OrderResult::Equal;
    }
    let a = lhs.partial_sums(kind);
    let b = rhs.partial_sums(kind);
    let ge = a.iter().zip(&b).all(|(x, y)| x >= y);
    let le = a.iter().zip(&b).all(|(x, y)| x <= y);
    match (ge, le) {
        (true, _) => OrderResult::Greater,
        (_, true) => OrderResult::Less,
        _ => OrderResult::Incomparable,
    }
}

pub fn compare_l(lhs: &MultiPartition, rhs: &MultiPartition) -> OrderResult {
    compare(lhs, rhs, OrderKind::L)
}

pub fn compare_r(lhs: &MultiPartition, rhs: &MultiPartition) -> OrderResult {
    compare(lhs, rhs, OrderKind::R)
}

/// A total order refining `compare(.., kind)` on equal-weight inputs:
/// the partial-sum vectors compared lexicographically from their last
/// entry backwards.
pub fn total_order(lhs: &MultiPartition, rhs: &MultiPartition, kind: OrderKind) -> Ordering {
    assert_eq!(lhs.colors(), rhs.colors(), "colour counts differ");
    assert_eq!(lhs.weight(), rhs.weight(), "weights differ");
    let a = lhs.partial_sums(kind);
    let b = rhs.partial_sums(kind);
    a.iter().rev().cmp(b.iter().rev())
}

/// All multipartitions of `d` with `n` colours, each exactly once,
/// sorted descending in the total order for `kind`.
pub fn enumerate_ordered(n: usize, d: u32, kind: OrderKind) -> Vec<MultiPartition> {
    assert!(n >= 1, "at least one colour");
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::with_capacity(n);
    fn rec(n: usize, left: u32, current: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if current.len() == n - 1 {
            for p in partitions_of(left) {
                current.push(p);
                out.push(MultiPartition(current.clone()));
                current.pop();
            }
            return;
        }
        for w in 0..=left {
            for p in partitions_of(w) {
                current.push(p);
                rec(n, left - w, current, out);
                current.pop();
            }
        }
    }
    rec(n, d, &mut current, &mut out);
    out.sort_by(|x, y| total_order(y, x, kind));
    out
}

/// Canonical basis order: descending in the `L` total order.
pub fn enumerate_multipartitions(n: usize, d: u32) -> Vec<MultiPartition> {
    enumerate_ordered(n, d, OrderKind::L)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn level_two_order_matches_display_layout() {
        let got = enumerate_multipartitions(2, 2);
        let want = [
            mp(&[&[], &[2]]),
            mp(&[&[], &[1, 1]]),
            mp(&[&[1], &[1]]),
            mp(&[&[2], &[]]),
            mp(&[&[1, 1], &[]]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn level_one_and_empty() {
        assert_eq!(enumerate_multipartitions(2, 1), [mp(&[&[], &[1]]), mp(&[&[1], &[]])]);
        assert_eq!(enumerate_multipartitions(1, 0), [mp(&[&[]])]);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare_l(&mp(&[&[], &[2]]), &mp(&[&[1], &[1]])), OrderResult::Greater);
        let x = mp(&[&[2], &[1, 1]]);
        let y = mp(&[&[1, 1], &[2]]);
        assert_eq!(compare_l(&x, &x), OrderResult::Equal);
        assert_eq!(compare_l(&x, &y), OrderResult::Incomparable);
        assert_eq!(compare_r(&mp(&[&[2], &[]]), &mp(&[&[1], &[1]])), OrderResult::Greater);
        assert_eq!(total_order(&x, &y, OrderKind::L), Ordering::Greater);
        assert_eq!(total_order(&mp(&[&[], &[2]]), &mp(&[&[1], &[1]]), OrderKind::L), Ordering::Greater);
        assert_eq!(total_order(&x, &x, OrderKind::L), Ordering::Equal);
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(alloc::vec![1, 1]).z(), 2);
        assert_eq!(Partition::new(alloc::vec![2, 1, 1]).z(), 4);
        assert_eq!(Partition::empty().z(), 1);
    }

    #[test]
    fn different_weights_are_incomparable() {
        assert_eq!(compare_l(&mp(&[&[1]]), &mp(&[&[2]])), OrderResult::Incomparable);
    }
}
