//! Integer partitions and the dominance order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `(3,1,0)` and `(3,1)` are
/// the same value. Operations that need a fixed number of slots (exponent
/// vectors of length `N`) take the length explicitly, see [`Partition::padded`].
///
/// The derived `Ord` is lexicographic on the parts, which is a linear
/// extension of dominance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Result of comparing two partitions of equal weight in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Partition {
    /// Builds a partition from possibly signed input, validating order and sign.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p < 0) {
            return Err(Error::NegativePart { index });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index });
        }
        Ok(Self::from_sorted(parts.iter().map(|&p| p as u32)))
    }

    /// Builds a partition from unsigned parts that must be weakly decreasing.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index });
        }
        Ok(Self::from_sorted(parts.iter().copied()))
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(sorted)
    }

    fn from_sorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, `|λ|`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to exactly `length` slots.
    pub fn padded(&self, length: usize) -> Result<Vec<u32>> {
        if self.len() > length {
            return Err(Error::LengthTooSmall { length: self.len(), target: length });
        }
        let mut out = self.parts.clone();
        out.resize(length, 0);
        Ok(out)
    }

    /// Multiplicity of the part value `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `z_λ = Π_i i^{m_i} m_i!` with `m_i` the multiplicity of `i`.
    pub fn z_factor(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let value = self.parts[i];
            let mut run = 0u64;
            while i < self.parts.len() && self.parts[i] == value {
                run += 1;
                i += 1;
                z *= u64::from(value) * run;
            }
        }
        z
    }

    /// `(λ_1 + 1, …, λ_length + 1)`, padding `λ` with zeros first.
    pub fn shift_by_one(&self, length: usize) -> Result<Self> {
        let padded = self.padded(length)?;
        Ok(Partition { parts: padded.into_iter().map(|p| p + 1).collect() })
    }

    /// Subtracts `amount` from each of the first `length` slots.
    ///
    /// Inverse of repeated [`Partition::shift_by_one`]; requires
    /// `λ_length >= amount` after padding.
    pub fn unshift(&self, length: usize, amount: u32) -> Result<Self> {
        let padded = self.padded(length)?;
        if padded.iter().any(|&p| p < amount) {
            return Err(Error::LengthTooSmall { length: self.len(), target: length });
        }
        Ok(Self::from_sorted(padded.into_iter().map(|p| p - amount)))
    }

    /// Dominance comparison of `self` (as μ) against `other` (as λ).
    pub fn dominance_cmp(&self, other: &Partition) -> Result<DominanceOrdering> {
        let (left, right) = (self.weight(), other.weight());
        if left != right {
            return Err(Error::WeightMismatch { left, right });
        }
        let (mut below, mut above) = (false, false);
        let (mut s, mut t) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            s += self.part(i);
            t += other.part(i);
            below |= s < t;
            above |= s > t;
        }
        Ok(match (below, above) {
            (false, false) => DominanceOrdering::Equal,
            (true, false) => DominanceOrdering::Less,
            (false, true) => DominanceOrdering::Greater,
            (true, true) => DominanceOrdering::Incomparable,
        })
    }

    /// `self <= other` in dominance. Partitions of different weight are unrelated.
    pub fn is_dominated_by(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_cmp(other),
            Ok(DominanceOrdering::Less | DominanceOrdering::Equal)
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n` with at most `max_length` parts.
///
/// The order is descending lexicographic, which puts dominant partitions
/// before the ones they dominate.
pub fn partitions_of(n: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, max_length, &mut current, &mut out);
    out
}

fn fill(remaining: u32, cap: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

/// All partitions of every weight up to `max_weight` with at most `max_length` parts.
pub fn partitions_up_to(max_weight: u32, max_length: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|n| partitions_of(n, max_length)).collect()
}

/// All exponent vectors of `length` non-negative entries summing to `n`,
/// in descending lexicographic order.
pub fn compositions_of(n: u32, length: usize) -> Vec<Vec<u32>> {
    fn go(remaining: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            current.push(first);
            go(remaining - first, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    match length {
        0 if n == 0 => out.push(vec![]),
        0 => {}
        _ => go(n, length, &mut Vec::new(), &mut out),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn construction_normalizes_trailing_zeros() {
        let lam = Partition::new(&[3, 1, 0]).unwrap();
        assert_eq!(lam.parts(), &[3, 1]);
        assert_eq!(lam.weight(), 4);
        assert_eq!(lam.len(), 2);
        assert_eq!(Partition::new(&[1, 2]), Err(Error::NotWeaklyDecreasing { index: 0 }));
        assert_eq!(Partition::new(&[2, -1]), Err(Error::NegativePart { index: 1 }));
        let empty = Partition::new(&[]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.weight(), 0);
    }

    #[test]
    fn dominance_examples() {
        use DominanceOrdering::*;
        assert_eq!(p(&[1, 1]).dominance_cmp(&p(&[2])), Ok(Less));
        assert_eq!(p(&[2, 1, 1]).dominance_cmp(&p(&[2, 2])), Ok(Less));
        assert_eq!(p(&[3, 1, 1, 1]).dominance_cmp(&p(&[2, 2, 2])), Ok(Incomparable));
        assert_eq!(p(&[2, 2]).dominance_cmp(&p(&[2, 2])), Ok(Equal));
        assert_eq!(p(&[2]).dominance_cmp(&p(&[1])), Err(Error::WeightMismatch { left: 2, right: 1 }));
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(p(&[2, 1]).z_factor(), 2);
        assert_eq!(p(&[1, 1, 1]).z_factor(), 6);
        assert_eq!(Partition::empty().z_factor(), 1);
        // 2^2 2! * 1 = 8
        assert_eq!(p(&[2, 2, 1]).z_factor(), 8);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(partitions_of(0, 5), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4, 4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert!(partitions_of(2, 0).is_empty());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[3, 1]).shift_by_one(3).unwrap(), p(&[4, 2, 1]));
        assert_eq!(Partition::empty().shift_by_one(2).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[2, 2]).shift_by_one(2).unwrap(), p(&[3, 3]));
        assert_eq!(
            p(&[1, 1, 1]).shift_by_one(2),
            Err(Error::LengthTooSmall { length: 3, target: 2 })
        );
        assert_eq!(p(&[3, 3]).unshift(2, 3).unwrap(), Partition::empty());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions_of(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions_of(5, 3).len(), 21);
    }

    /// Brute-force enumeration: every weakly decreasing vector of parts <= n.
    fn brute_force(n: u32, max_len: usize) -> Vec<Partition> {
        let mut found = Vec::new();
        for len in 0..=max_len.min(n as usize) {
            let mut digits = vec![1u32; len];
            loop {
                if digits.iter().sum::<u32>() == n && digits.windows(2).all(|w| w[0] >= w[1]) {
                    found.push(p(&digits));
                }
                let mut k = 0;
                while k < len && digits[k] == n {
                    digits[k] = 1;
                    k += 1;
                }
                if k == len {
                    break;
                }
                digits[k] += 1;
            }
        }
        found.sort();
        found
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=7 {
            for max_len in 0..=n as usize {
                let mut listed = partitions_of(n, max_len);
                listed.sort();
                assert_eq!(listed, brute_force(n, max_len), "n={n} max_len={max_len}");
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order_and_enumeration_extends_it() {
        use DominanceOrdering::*;
        for n in 0..=8 {
            let all = partitions_of(n, n as usize);
            for (i, a) in all.iter().enumerate() {
                assert_eq!(a.dominance_cmp(a), Ok(Equal));
                for (j, b) in all.iter().enumerate() {
                    let ab = a.dominance_cmp(b).unwrap();
                    let ba = b.dominance_cmp(a).unwrap();
                    let flipped = match ab {
                        Less => Greater,
                        Greater => Less,
                        other => other,
                    };
                    assert_eq!(ba, flipped);
                    if ab == Equal {
                        assert_eq!(a, b);
                    }
                    if ab == Less {
                        assert!(j < i, "{b} must precede {a}");
                    }
                    for c in &all {
                        if a.is_dominated_by(b) && b.is_dominated_by(c) {
                            assert!(a.is_dominated_by(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_adds_length_to_weight() {
        for lam in partitions_up_to(6, 4) {
            for len in lam.len()..=5 {
                assert_eq!(lam.shift_by_one(len).unwrap().weight(), lam.weight() + len as u32);
            }
        }
    }
}
