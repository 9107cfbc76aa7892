//! Canonical partition values and the frequency view.
//!
//! A [`Partition`] is stored as its weakly decreasing parts sequence. The
//! frequency form `(1^{m_1} 2^{m_2} ...)` is a derived [`FrequencyView`];
//! the parts sequence is the only source of truth, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers. The empty
/// sequence is the empty partition.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from arbitrary nonnegative values: zeros are
    /// dropped and the rest sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Wraps a sequence that is already canonical. Only for callers that
    /// construct parts in decreasing order themselves.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `k`-th part with 1-based indexing, zero past the end.
    pub fn part_at(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == value).count() as u64
    }

    /// Distinct parts in decreasing order together with their multiplicities.
    pub fn runs(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn frequencies(&self) -> FrequencyView {
        let mut entries = BTreeMap::new();
        for &p in &self.parts {
            *entries.entry(p).or_insert(0) += 1;
        }
        FrequencyView { entries }
    }

    /// Conjugate by transposing the Young diagram: the `j`-th part of the
    /// conjugate counts the parts that are at least `j`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest();
        let mut out = Vec::with_capacity(largest as usize);
        let mut len = self.parts.len();
        for j in 1..=largest {
            while len > 0 && self.parts[len - 1] < j {
                len -= 1;
            }
            out.push(len as u64);
        }
        Partition::from_sorted(out)
    }

    /// Conjugate computed from parts and frequencies alone. With distinct
    /// parts `a_1 > ... > a_r` the conjugate has parts
    /// `b_i = m_{a_1} + ... + m_{a_{r-i+1}}` of multiplicity
    /// `a_{r-i+1} - a_{r-i+2}`, where `a_{r+1} = 0`.
    pub fn conjugate_by_frequencies(&self) -> Partition {
        let runs = self.runs();
        let r = runs.len();
        let mut out = Vec::new();
        let mut prefix: Vec<u64> = Vec::with_capacity(r);
        let mut acc = 0;
        for &(_, m) in &runs {
            acc += m;
            prefix.push(acc);
        }
        for i in 1..=r {
            let b = prefix[r - i];
            let a_here = runs[r - i].0;
            let a_next = if i == 1 { 0 } else { runs[r - i + 1].0 };
            let mult = a_here - a_next;
            out.extend(std::iter::repeat_n(b, mult as usize));
        }
        Partition::from_sorted(out)
    }

    /// Removes `count` copies of `value`.
    pub fn delete_parts(&self, value: u64, count: u64) -> Result<Partition> {
        if value == 0 || count == 0 {
            return Err(Error::InvalidPart(format!(
                "deletion needs positive value and count, got value={value} count={count}"
            )));
        }
        let available = self.multiplicity(value);
        if available < count {
            return Err(Error::InsufficientMultiplicity {
                value,
                available,
                requested: count,
            });
        }
        let mut left = count;
        let parts = self
            .parts
            .iter()
            .copied()
            .filter(|&p| {
                if p == value && left > 0 {
                    left -= 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// Product of the parts, the norm used by partition zeta functions.
    pub fn norm(&self) -> Option<u64> {
        self.parts.iter().try_fold(1u64, |acc, &p| acc.checked_mul(p))
    }

    /// ASCII Ferrers diagram, one row per part.
    pub fn ferrers(&self) -> String {
        let mut s = String::new();
        for &p in &self.parts {
            s.extend(std::iter::repeat_n('*', p as usize));
            s.push('\n');
        }
        s
    }
}

/// Builds a partition from signed input, rejecting negative values.
pub fn from_parts(raw: &[i64]) -> Result<Partition> {
    let mut parts = Vec::with_capacity(raw.len());
    for (pos, &v) in raw.iter().enumerate() {
        if v < 0 {
            return Err(Error::InvalidPart(format!("negative value {v} at position {pos}")));
        }
        parts.push(v as u64);
    }
    Ok(Partition::new(parts))
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPart("zero part in partition".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPart("parts are not weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }
}

impl FromIterator<u64> for Partition {
    fn from_iter<T: IntoIterator<Item = u64>>(iter: T) -> Self {
        Partition::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Part value to multiplicity. Absent values have multiplicity zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrequencyView {
    entries: BTreeMap<u64, u64>,
}

impl FrequencyView {
    /// Validates that every part value and multiplicity is positive.
    pub fn new(entries: BTreeMap<u64, u64>) -> Result<Self> {
        for (&v, &m) in &entries {
            if v == 0 || m == 0 {
                return Err(Error::InvalidPart(format!(
                    "frequency entry {v}^{m} must have positive part and multiplicity"
                )));
            }
        }
        Ok(FrequencyView { entries })
    }

    pub fn get(&self, value: u64) -> u64 {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<u64, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&v, &m)| (v, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&v, &m) in self.entries.iter().rev() {
            parts.extend(std::iter::repeat_n(v, m as usize));
        }
        Partition::from_sorted(parts)
    }
}

pub fn from_frequencies(fv: &FrequencyView) -> Partition {
    fv.to_partition()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn from_parts_sorts_and_drops_zeros() {
        assert_eq!(from_parts(&[1, 3, 1, 2]).unwrap().parts(), &[3, 2, 1, 1]);
        assert!(from_parts(&[]).unwrap().is_empty());
        assert_eq!(from_parts(&[0, 2, 0]).unwrap().parts(), &[2]);
        assert_eq!(
            from_parts(&[20, 17, 15, 9, 5]).unwrap().parts(),
            &[20, 17, 15, 9, 5]
        );
        assert!(matches!(from_parts(&[3, -1]), Err(Error::InvalidPart(_))));
    }

    #[test]
    fn accessors() {
        let l = p(&[5, 3, 3]);
        assert_eq!(l.size(), 11);
        assert_eq!(l.length(), 3);
        assert_eq!(l.largest(), 5);
        assert_eq!(l.part_at(3), 3);
        assert_eq!(l.part_at(4), 0);
        assert_eq!(Partition::empty().largest(), 0);
    }

    #[test]
    fn frequency_examples() {
        let fv = p(&[3, 1, 1]).frequencies();
        assert_eq!(fv.get(1), 2);
        assert_eq!(fv.get(3), 1);
        assert_eq!(fv.get(2), 0);
        assert!(Partition::empty().frequencies().is_empty());
        let fv = p(&[4, 3, 3]).frequencies();
        assert_eq!(fv.entries().iter().collect::<Vec<_>>(), vec![(&3, &2), (&4, &1)]);

        let fv = FrequencyView::new(BTreeMap::from([(1, 1), (2, 2), (3, 3)])).unwrap();
        assert_eq!(from_frequencies(&fv).parts(), &[3, 3, 3, 2, 2, 1]);
        let fv = FrequencyView::new(BTreeMap::from([(1, 2), (3, 1)])).unwrap();
        assert_eq!(from_frequencies(&fv).parts(), &[3, 1, 1]);
        assert!(from_frequencies(&FrequencyView::default()).is_empty());
        assert!(FrequencyView::new(BTreeMap::from([(2, 0)])).is_err());
        assert!(FrequencyView::new(BTreeMap::from([(0, 1)])).is_err());
    }

    #[test]
    fn conjugate_examples() {
        for (input, expected) in [
            (vec![3, 1], vec![2, 1, 1]),
            (vec![2, 2], vec![2, 2]),
            (vec![8, 5, 4, 2, 1], vec![5, 4, 3, 3, 2, 1, 1, 1]),
            (vec![], vec![]),
        ] {
            let l = p(&input);
            assert_eq!(l.conjugate().parts(), &expected[..]);
            assert_eq!(l.conjugate_by_frequencies().parts(), &expected[..]);
        }
    }

    #[test]
    fn delete_parts_examples() {
        assert_eq!(p(&[3, 3, 2]).delete_parts(3, 1).unwrap().parts(), &[3, 2]);
        assert_eq!(p(&[5, 5, 7, 7, 7]).delete_parts(7, 3).unwrap().parts(), &[5, 5]);
        assert_eq!(
            p(&[4]).delete_parts(2, 1),
            Err(Error::InsufficientMultiplicity { value: 2, available: 0, requested: 1 })
        );
    }

    #[test]
    fn serde_json_form() {
        let l = p(&[20, 17, 15, 9, 5]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[20,17,15,9,5]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[4,2]").unwrap();
        assert_eq!(back, p(&[4, 2]));
        assert!(serde_json::from_str::<Partition>("[2,4]").is_err());
    }

    #[test]
    fn ferrers_rows() {
        assert_eq!(p(&[3, 1]).ferrers(), "***\n*\n");
    }
}
