//! The bijections between partitions and sequentially congruent partitions,
//! their compositions, and the frequency-scaling bijection
//! `P_A -> P_B(A)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{FrequencyView, Partition};
use crate::predicates::{is_member_pba, is_sequentially_congruent};
use crate::sequence::SequenceSpec;

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

/// `π`: sends `λ` to the partition with parts `i·λ_i + Σ_{j>i} λ_j`.
///
/// The image is sequentially congruent, has the same length as `λ`, and its
/// largest part is `|λ|`. Fails only if a part overflows `u64`.
pub fn pi(lambda: &Partition) -> Result<Partition> {
    let parts = lambda.parts();
    let mut out = vec![0u64; parts.len()];
    let mut suffix: u64 = 0;
    for i in (1..=parts.len()).rev() {
        let scaled = parts[i - 1].checked_mul(i as u64).ok_or_else(|| overflow("pi"))?;
        out[i - 1] = scaled.checked_add(suffix).ok_or_else(|| overflow("pi"))?;
        suffix = suffix.checked_add(parts[i - 1]).ok_or_else(|| overflow("pi"))?;
    }
    let image = Partition::from_sorted(out);
    debug_assert!(is_sequentially_congruent(&image).ok, "pi produced {image}");
    Ok(image)
}

fn require_seqcong(phi: &Partition) -> Result<()> {
    let report = is_sequentially_congruent(phi);
    match report.index {
        None => Ok(()),
        Some(index) => Err(Error::NotSequentiallyCongruent { index }),
    }
}

/// `π⁻¹`, recovering parts right to left: `λ_r = φ_r / r`, then
/// `λ_i = (φ_i - Σ_{j>i} λ_j) / i`.
pub fn pi_inverse(phi: &Partition) -> Result<Partition> {
    require_seqcong(phi)?;
    let parts = phi.parts();
    let r = parts.len();
    let mut out = vec![0u64; r];
    let mut suffix: u64 = 0;
    for i in (1..=r).rev() {
        let numer = parts[i - 1].checked_sub(suffix).ok_or_else(|| {
            Error::InternalContradiction(format!("negative numerator at index {i} of {phi}"))
        })?;
        if numer % i as u64 != 0 {
            return Err(Error::InternalContradiction(format!(
                "inexact division at index {i} of {phi}"
            )));
        }
        let part = numer / i as u64;
        if part == 0 || (i < r && part < out[i]) {
            return Err(Error::InternalContradiction(format!(
                "recovered part {part} at index {i} of {phi} breaks the ordering"
            )));
        }
        out[i - 1] = part;
        suffix += part;
    }
    Ok(Partition::from_sorted(out))
}

/// `σ`: the partition in which `i` has multiplicity `(φ_i - φ_{i+1}) / i`.
pub fn sigma(phi: &Partition) -> Result<Partition> {
    require_seqcong(phi)?;
    let mut entries = BTreeMap::new();
    for i in 1..=phi.length() {
        let mult = (phi.part_at(i) - phi.part_at(i + 1)) / i as u64;
        if mult > 0 {
            entries.insert(i as u64, mult);
        }
    }
    Ok(FrequencyView::new(entries)?.to_partition())
}

/// `σ⁻¹ = π ∘ conjugate`, exact because `σ ∘ π` is conjugation.
pub fn sigma_inverse(gamma: &Partition) -> Result<Partition> {
    pi(&gamma.conjugate())
}

/// Literal composition `σ(π(λ))`; equals the conjugate of `λ`.
pub fn sigma_pi(lambda: &Partition) -> Result<Partition> {
    sigma(&pi(lambda)?)
}

/// `π(σ(φ))` on sequentially congruent `φ`.
pub fn pi_sigma(phi: &Partition) -> Result<Partition> {
    pi(&sigma(phi)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Ordinary partitions; the next step applies `π`.
    P,
    /// Sequentially congruent partitions; the next step applies `σ`.
    S,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTrace {
    pub start_side: Side,
    /// Alternating sides, beginning and (when closed) ending at the input.
    pub states: Vec<Partition>,
    /// Period counted in applications of `σ∘π` (or `π∘σ`).
    pub cycle_length: usize,
    pub closed: bool,
}

const MAX_HALF_STEPS: usize = 4;

/// Alternates `π` and `σ` from `start` until it recurs.
pub fn orbit(start: &Partition, side: Side) -> Result<OrbitTrace> {
    if side == Side::S {
        require_seqcong(start)?;
    }
    let mut states = vec![start.clone()];
    let mut current = start.clone();
    let mut current_side = side;
    for half in 1..=MAX_HALF_STEPS {
        current = match current_side {
            Side::P => pi(&current)?,
            Side::S => sigma(&current)?,
        };
        current_side = match current_side {
            Side::P => Side::S,
            Side::S => Side::P,
        };
        states.push(current.clone());
        if current_side == side && current == *start {
            return Ok(OrbitTrace {
                start_side: side,
                states,
                cycle_length: half / 2,
                closed: true,
            });
        }
    }
    Err(Error::InternalContradiction(format!(
        "orbit of {start} did not close within {MAX_HALF_STEPS} half-steps"
    )))
}

/// Sends `(a_1^{m_1} a_2^{m_2} ...)` in `P_A` to `(b_1^{a_1 m_1} b_2^{a_2 m_2} ...)`
/// in `P_B(A)`. The image has length `|λ|`.
pub fn scale_map(lambda: &Partition, a: &SequenceSpec, b: &SequenceSpec) -> Result<Partition> {
    a.check_distinct()?;
    let mut entries = BTreeMap::new();
    for (part, mult) in lambda.frequencies().iter() {
        let j = a.position_of(part).ok_or(Error::PartNotInA(part))?;
        let bj = b.term(j)?;
        let copies = part.checked_mul(mult).ok_or_else(|| overflow("scale_map"))?;
        if entries.insert(bj, copies).is_some() {
            return Err(Error::NonDistinct(format!("term {bj} repeats in {b}")));
        }
    }
    Ok(FrequencyView::new(entries)?.to_partition())
}

/// Inverse of [`scale_map`]: `(b_1^{a_1 n_1} b_2^{a_2 n_2} ...)` goes to
/// `(a_1^{n_1} a_2^{n_2} ...)`.
pub fn scale_map_inverse(mu: &Partition, a: &SequenceSpec, b: &SequenceSpec) -> Result<Partition> {
    a.check_distinct()?;
    let report = match is_member_pba(mu, a, b) {
        Ok(r) => r,
        Err(Error::ExtentExceeded(msg)) => return Err(Error::NotMemberPba(msg)),
        Err(e) => return Err(e),
    };
    if !report.ok {
        return Err(Error::NotMemberPba(report.detail));
    }
    let mut entries = BTreeMap::new();
    for (part, mult) in mu.frequencies().iter() {
        let i = b.position_of(part).expect("membership located every part");
        let ai = a.term(i)?;
        entries.insert(ai, mult / ai);
    }
    Ok(FrequencyView::new(entries)?.to_partition())
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
    fn pi_examples() {
        assert_eq!(pi(&p(&[3, 1])).unwrap(), p(&[4, 2]));
        assert_eq!(pi(&p(&[2, 1, 1])).unwrap(), p(&[4, 3, 3]));
        assert_eq!(pi(&p(&[3, 2, 1])).unwrap(), p(&[6, 5, 3]));
        assert_eq!(pi(&Partition::empty()).unwrap(), Partition::empty());
        assert!(matches!(pi(&p(&[u64::MAX, 1])), Err(Error::Overflow(_))));
    }

    #[test]
    fn pi_inverse_examples() {
        assert_eq!(pi_inverse(&p(&[4, 2])).unwrap(), p(&[3, 1]));
        assert_eq!(pi_inverse(&p(&[20, 17, 15, 9, 5])).unwrap(), p(&[8, 5, 4, 2, 1]));
        assert_eq!(
            pi_inverse(&p(&[21, 18, 16, 10, 6])),
            Err(Error::NotSequentiallyCongruent { index: 5 })
        );
        assert_eq!(pi_inverse(&Partition::empty()).unwrap(), Partition::empty());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&p(&[5, 3, 3])).unwrap(), p(&[3, 1, 1]));
        assert_eq!(sigma(&p(&[4, 2])).unwrap(), p(&[2, 1, 1]));
        assert_eq!(sigma(&p(&[20, 17, 15, 9, 5])).unwrap(), p(&[5, 4, 3, 3, 2, 1, 1, 1]));
        assert!(matches!(sigma(&p(&[4, 1])), Err(Error::NotSequentiallyCongruent { index: 2 })));
    }

    #[test]
    fn sigma_inverse_examples() {
        assert_eq!(sigma_inverse(&p(&[3, 1, 1])).unwrap(), p(&[5, 3, 3]));
        assert_eq!(sigma_inverse(&p(&[2, 1, 1])).unwrap(), p(&[4, 2]));
        assert_eq!(sigma_inverse(&p(&[3, 1])).unwrap(), p(&[4, 3, 3]));
    }

    #[test]
    fn sigma_pi_examples() {
        assert_eq!(sigma_pi(&p(&[1, 1, 1, 1])).unwrap(), p(&[4]));
        assert_eq!(sigma_pi(&p(&[2, 2])).unwrap(), p(&[2, 2]));
        assert_eq!(sigma_pi(&p(&[6, 3, 3, 1])).unwrap(), p(&[4, 3, 3, 1, 1, 1]));
    }

    #[test]
    fn orbit_examples() {
        let t = orbit(&p(&[3, 1]), Side::P).unwrap();
        assert_eq!(t.states, vec![p(&[3, 1]), p(&[4, 2]), p(&[2, 1, 1]), p(&[4, 3, 3]), p(&[3, 1])]);
        assert_eq!(t.cycle_length, 2);
        assert!(t.closed);

        let t = orbit(&p(&[2, 2]), Side::P).unwrap();
        assert_eq!(t.states, vec![p(&[2, 2]), p(&[4, 4]), p(&[2, 2])]);
        assert_eq!(t.cycle_length, 1);

        let t = orbit(&p(&[4, 3, 3]), Side::S).unwrap();
        assert_eq!(t.states, vec![p(&[4, 3, 3]), p(&[3, 1]), p(&[4, 2]), p(&[2, 1, 1]), p(&[4, 3, 3])]);
        assert_eq!(t.cycle_length, 2);

        assert!(matches!(
            orbit(&p(&[4, 1]), Side::S),
            Err(Error::NotSequentiallyCongruent { .. })
        ));
        let t = orbit(&Partition::empty(), Side::P).unwrap();
        assert_eq!(t.cycle_length, 1);
    }

    #[test]
    fn scale_map_examples() {
        let (a, b) = (tab(&[2, 3]), tab(&[5, 7]));
        let image = scale_map(&p(&[3, 3, 2]), &a, &b).unwrap();
        assert_eq!(image, p(&[7, 7, 7, 7, 7, 7, 5, 5]));
        assert_eq!(image.length(), 8);
        assert_eq!(scale_map_inverse(&image, &a, &b).unwrap(), p(&[3, 3, 2]));

        let n = SequenceSpec::naturals(6);
        assert_eq!(scale_map(&p(&[3, 2, 1]), &n, &n).unwrap(), p(&[3, 3, 3, 2, 2, 1]));
        assert_eq!(scale_map_inverse(&p(&[3, 3, 3, 2, 2, 1]), &n, &n).unwrap(), p(&[3, 2, 1]));

        assert_eq!(scale_map(&Partition::empty(), &a, &b).unwrap(), Partition::empty());
        assert_eq!(scale_map_inverse(&Partition::empty(), &a, &b).unwrap(), Partition::empty());
    }

    #[test]
    fn scale_map_errors() {
        let (a, b) = (tab(&[2, 3]), tab(&[5, 7]));
        assert_eq!(scale_map(&p(&[4]), &a, &b), Err(Error::PartNotInA(4)));
        assert!(matches!(
            scale_map(&p(&[3]), &a, &tab(&[5])),
            Err(Error::ExtentExceeded(_))
        ));
        assert!(matches!(
            scale_map(&p(&[2]), &tab(&[2, 2]), &b),
            Err(Error::NonDistinct(_))
        ));
        assert!(matches!(
            scale_map_inverse(&p(&[7, 5]), &a, &b),
            Err(Error::NotMemberPba(_))
        ));
        assert!(matches!(
            scale_map_inverse(&p(&[6]), &a, &b),
            Err(Error::NotMemberPba(_))
        ));
    }
}
