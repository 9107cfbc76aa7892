//! Membership tests for the partition families. Every test that can fail
//! reports the first violated condition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::sequence::SequenceSpec;

/// Outcome of a membership test. `index` is present exactly when `ok` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub ok: bool,
    pub index: Option<u64>,
    pub detail: String,
}

impl ViolationReport {
    pub fn pass(detail: impl Into<String>) -> Self {
        ViolationReport { ok: true, index: None, detail: detail.into() }
    }

    pub fn fail(index: u64, detail: impl Into<String>) -> Self {
        ViolationReport { ok: false, index: Some(index), detail: detail.into() }
    }
}

/// `λ_i ≡ λ_{i+1} (mod i)` for `1 <= i < r` and `λ_r ≡ 0 (mod r)`.
///
/// With zero extension past the length both conditions read
/// `i | λ_i - λ_{i+1}` for `1 <= i <= r`; the failing `i` is reported.
pub fn is_sequentially_congruent(lambda: &Partition) -> ViolationReport {
    let r = lambda.length();
    for i in 1..=r {
        let (hi, lo) = (lambda.part_at(i), lambda.part_at(i + 1));
        if (hi - lo) % i as u64 != 0 {
            let detail = if i == r {
                format!("smallest part {hi} is not divisible by the length {r}")
            } else {
                format!("parts {hi} and {lo} are not congruent mod {i}")
            };
            return ViolationReport::fail(i as u64, detail);
        }
    }
    ViolationReport::pass("sequentially congruent")
}

/// Each part divides its own multiplicity. The index is the failing part.
pub fn is_frequency_congruent(lambda: &Partition) -> ViolationReport {
    for (part, mult) in lambda.frequencies().iter() {
        if mult % part != 0 {
            return ViolationReport::fail(
                part,
                format!("part {part} does not divide its multiplicity {mult}"),
            );
        }
    }
    ViolationReport::pass("frequency congruent")
}

/// Membership in `P_B(A)`: every part is some `b_i` and `a_i | m_{b_i}`.
/// On failure the index is the position `i` in `B`.
pub fn is_member_pba(
    lambda: &Partition,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<ViolationReport> {
    let mut located = Vec::new();
    for (part, mult) in lambda.frequencies().iter() {
        let i = b.position_of(part).ok_or_else(|| {
            Error::ExtentExceeded(format!("part {part} is not a term of {b}"))
        })?;
        located.push((i, part, mult));
    }
    located.sort_unstable();
    for (i, part, mult) in located {
        let ai = a.term(i)?;
        if mult % ai != 0 {
            return Ok(ViolationReport::fail(
                i as u64,
                format!("a_{i} = {ai} does not divide the multiplicity {mult} of part {part}"),
            ));
        }
    }
    Ok(ViolationReport::pass("member of P_B(A)"))
}

/// `λ_i ≡ λ_{i+1} (mod a_i)` for every `i` up to the length, zero-extended.
pub fn is_member_sna(lambda: &Partition, a: &SequenceSpec) -> Result<ViolationReport> {
    let r = lambda.length();
    if r > a.extent() {
        return Err(Error::ExtentExceeded(format!(
            "length {r} exceeds the extent {} of {a}",
            a.extent()
        )));
    }
    for i in 1..=r {
        let ai = a.term(i)?;
        let (hi, lo) = (lambda.part_at(i), lambda.part_at(i + 1));
        if (hi - lo) % ai != 0 {
            return Ok(ViolationReport::fail(
                i as u64,
                format!("parts {hi} and {lo} are not congruent mod a_{i} = {ai}"),
            ));
        }
    }
    Ok(ViolationReport::pass("member of S_N(A)"))
}

pub fn has_distinct_parts(lambda: &Partition) -> bool {
    lambda.parts().windows(2).all(|w| w[0] > w[1])
}

/// Every step `λ_i - λ_{i+1}` (zero-extended) is either 0 or `i`.
pub fn is_step_bounded_seqcong(lambda: &Partition) -> ViolationReport {
    for i in 1..=lambda.length() {
        let step = lambda.part_at(i) - lambda.part_at(i + 1);
        if step != 0 && step != i as u64 {
            return ViolationReport::fail(i as u64, format!("step {step} at index {i} is neither 0 nor {i}"));
        }
    }
    ViolationReport::pass("steps are all 0 or i")
}

pub fn is_self_conjugate(lambda: &Partition) -> bool {
    lambda.conjugate() == *lambda
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn tab(v: &[u64]) -> SequenceSpec {
        SequenceSpec::table(v.to_vec()).unwrap()
    }

    #[test]
    fn seqcong_examples() {
        assert!(is_sequentially_congruent(&p(&[20, 17, 15, 9, 5])).ok);
        let r = is_sequentially_congruent(&p(&[21, 18, 16, 10, 6]));
        assert!(!r.ok);
        assert_eq!(r.index, Some(5));
        assert!(is_sequentially_congruent(&Partition::empty()).ok);
        assert_eq!(is_sequentially_congruent(&p(&[4, 1])).index, Some(2));
    }

    #[test]
    fn freqcong_examples() {
        assert!(is_frequency_congruent(&p(&[3, 3, 3, 2, 2, 1])).ok);
        assert_eq!(is_frequency_congruent(&p(&[3, 1, 1])).index, Some(3));
        assert!(is_frequency_congruent(&Partition::empty()).ok);
    }

    #[test]
    fn pba_examples() {
        let (a, b) = (tab(&[2, 3]), tab(&[5, 7]));
        assert!(is_member_pba(&p(&[7, 7, 7, 7, 7, 7, 5, 5]), &a, &b).unwrap().ok);
        let r = is_member_pba(&p(&[7, 7, 7, 5]), &a, &b).unwrap();
        assert_eq!(r.index, Some(1));
        assert!(matches!(
            is_member_pba(&p(&[6]), &a, &b),
            Err(Error::ExtentExceeded(_))
        ));
        let n = SequenceSpec::naturals(6);
        assert!(is_member_pba(&p(&[3, 3, 3, 2, 2, 1]), &n, &n).unwrap().ok);
        assert_eq!(is_member_pba(&p(&[3, 1, 1]), &n, &n).unwrap().index, Some(3));
    }

    #[test]
    fn sna_examples() {
        let a = tab(&[2, 3, 1]);
        assert!(is_member_sna(&p(&[9, 5, 2]), &a).unwrap().ok);
        // 9 - 6 is odd, so the first violation is already at index 1.
        assert_eq!(is_member_sna(&p(&[9, 6, 2]), &a).unwrap().index, Some(1));
        assert_eq!(is_member_sna(&p(&[8, 6, 2]), &a).unwrap().index, Some(2));
        assert!(matches!(
            is_member_sna(&p(&[4, 3, 2, 1]), &a),
            Err(Error::ExtentExceeded(_))
        ));
    }

    #[test]
    fn distinct_and_step_bounded() {
        assert!(has_distinct_parts(&p(&[3, 1])));
        assert!(!has_distinct_parts(&p(&[4, 3, 3])));
        assert!(has_distinct_parts(&Partition::empty()));

        assert!(is_step_bounded_seqcong(&p(&[4, 3, 3])).ok);
        assert_eq!(is_step_bounded_seqcong(&p(&[4, 2])).index, Some(1));
        assert!(is_step_bounded_seqcong(&Partition::empty()).ok);
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(is_self_conjugate(&p(&[2, 2])));
        assert!(!is_self_conjugate(&p(&[3, 1])));
        assert!(is_self_conjugate(&p(&[1])));
    }

    #[test]
    fn report_invariant() {
        for r in [
            is_sequentially_congruent(&p(&[5, 3])),
            is_sequentially_congruent(&p(&[6, 4])),
        ] {
            assert_eq!(r.ok, r.index.is_none());
        }
    }
}
