//! Generators and counters for the partition families, plus finite checks
//! of the partition-ideal properties.
//!
//! Every family is finite and is produced in strictly decreasing
//! lexicographic order of the parts sequence (a proper prefix sorts below
//! its extensions, as with slice ordering).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{FrequencyView, Partition};
use crate::predicates::{is_member_pba, ViolationReport};
use crate::sequence::SequenceSpec;

pub const DEFAULT_MAX_ITEMS: u64 = 10_000_000;

/// A named finite partition family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    /// `P_n`
    All { n: u64 },
    /// Partitions of `n` with every part in `parts`.
    PartsIn { parts: Vec<u64>, n: u64 },
    /// Partitions of `n` into distinct parts.
    Distinct { n: u64 },
    /// `S_{lg=n}`: sequentially congruent with largest part `n`.
    SeqCong { largest: u64 },
    /// `P_B(A, n)`: parts among `b_1..b_K`, `a_i | m_{b_i}`, length `n`,
    /// where `K` is the extent of `B`.
    Pba { a: SequenceSpec, b: SequenceSpec, length: u64 },
    /// Members of `S_N(A)` with largest part `n` and length at most the
    /// extent of `A`.
    Sna { a: SequenceSpec, largest: u64 },
    /// Sequentially congruent with largest part `n` and every step 0 or `i`.
    StepBounded { largest: u64 },
}

impl FamilyDescriptor {
    /// Frequency congruent partitions of length `n`, i.e. `P_N((1,2,3,...), n)`.
    pub fn frequency_congruent(n: u64) -> Self {
        let ext = n as usize;
        FamilyDescriptor::Pba {
            a: SequenceSpec::naturals(ext),
            b: SequenceSpec::naturals(ext),
            length: n,
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::All { n } => write!(f, "all:{n}"),
            FamilyDescriptor::PartsIn { parts, n } => {
                let t: Vec<String> = parts.iter().map(u64::to_string).collect();
                write!(f, "parts:T={};n={n}", t.join(","))
            }
            FamilyDescriptor::Distinct { n } => write!(f, "distinct:{n}"),
            FamilyDescriptor::SeqCong { largest } => write!(f, "seqcong:{largest}"),
            FamilyDescriptor::Pba { a, b, length } => write!(f, "pba:A={a};B={b};n={length}"),
            FamilyDescriptor::Sna { a, largest } => write!(f, "sna:A={a};n={largest}"),
            FamilyDescriptor::StepBounded { largest } => write!(f, "stepbounded:{largest}"),
        }
    }
}

struct Sink<'f> {
    emitted: u64,
    max_items: u64,
    f: &'f mut dyn FnMut(Partition),
}

impl Sink<'_> {
    fn emit(&mut self, parts: &[u64]) -> Result<()> {
        self.emitted += 1;
        if self.emitted > self.max_items {
            return Err(Error::ResourceBound(self.max_items));
        }
        (self.f)(Partition::from_sorted(parts.to_vec()));
        Ok(())
    }
}

/// Streams the family to `f` in decreasing lexicographic order and returns
/// the number of members. Fails with `ResourceBound` once more than
/// `max_items` members have been produced.
pub fn for_each(
    desc: &FamilyDescriptor,
    max_items: u64,
    mut f: impl FnMut(Partition),
) -> Result<u64> {
    let mut sink = Sink { emitted: 0, max_items, f: &mut f };
    let mut stack = Vec::new();
    match desc {
        FamilyDescriptor::All { n } => gen_bounded(*n, *n, &mut stack, &mut sink, |_, p| p)?,
        FamilyDescriptor::Distinct { n } => {
            gen_bounded(*n, *n, &mut stack, &mut sink, |_, p| p.saturating_sub(1))?
        }
        FamilyDescriptor::PartsIn { parts, n } => {
            let mut allowed: Vec<u64> = parts.iter().copied().filter(|&p| p > 0).collect();
            allowed.sort_unstable_by(|x, y| y.cmp(x));
            allowed.dedup();
            gen_parts_in(&allowed, *n, 0, &mut stack, &mut sink)?
        }
        FamilyDescriptor::SeqCong { largest } => {
            // Members satisfy λ_i >= λ_r >= r >= i, so parts never drop below their index.
            gen_congruence_chain(*largest, *largest as usize, true, &mut sink, |d| Ok(d as u64))?
        }
        FamilyDescriptor::Sna { a, largest } => {
            gen_congruence_chain(*largest, a.extent(), false, &mut sink, |d| a.term(d))?
        }
        FamilyDescriptor::StepBounded { largest } => gen_step_bounded(*largest, &mut sink)?,
        FamilyDescriptor::Pba { a, b, length } => {
            let mut members = Vec::new();
            let slots = pba_slots(a, b)?;
            visit_scaled_multisets(&slots, None, Some(*length), max_items, &mut |fv, _, len| {
                if len == *length {
                    members.push(fv.to_partition());
                }
            })?;
            members.sort_unstable_by(|x, y| y.cmp(x));
            for m in &members {
                sink.emit(m.parts())?;
            }
        }
    }
    Ok(sink.emitted)
}

pub fn enumerate(desc: &FamilyDescriptor) -> Result<Vec<Partition>> {
    enumerate_with_cap(desc, DEFAULT_MAX_ITEMS)
}

pub fn enumerate_with_cap(desc: &FamilyDescriptor, max_items: u64) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each(desc, max_items, |p| out.push(p))?;
    Ok(out)
}

pub fn count(desc: &FamilyDescriptor) -> Result<u64> {
    count_with_cap(desc, DEFAULT_MAX_ITEMS)
}

pub fn count_with_cap(desc: &FamilyDescriptor, max_items: u64) -> Result<u64> {
    for_each(desc, max_items, |_| {})
}

/// Partitions of `remaining` with parts at most `max_part`; `next_max` maps
/// (remaining, chosen part) to the bound for the following part.
fn gen_bounded(
    remaining: u64,
    max_part: u64,
    stack: &mut Vec<u64>,
    sink: &mut Sink<'_>,
    next_max: fn(u64, u64) -> u64,
) -> Result<()> {
    if remaining == 0 {
        return sink.emit(stack);
    }
    let mut part = max_part.min(remaining);
    while part >= 1 {
        stack.push(part);
        gen_bounded(remaining - part, next_max(remaining, part), stack, sink, next_max)?;
        stack.pop();
        part -= 1;
    }
    Ok(())
}

fn gen_parts_in(
    allowed: &[u64],
    remaining: u64,
    from: usize,
    stack: &mut Vec<u64>,
    sink: &mut Sink<'_>,
) -> Result<()> {
    if remaining == 0 {
        return sink.emit(stack);
    }
    for (k, &part) in allowed.iter().enumerate().skip(from) {
        if part <= remaining {
            stack.push(part);
            gen_parts_in(allowed, remaining - part, k, stack, sink)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Chains `λ_1 = largest >= λ_2 >= ...` with `λ_d ≡ λ_{d+1} (mod m_d)` and
/// final condition `m_r | λ_r`, of length at most `max_len`. Built left to
/// right; a prefix is emitted after its extensions to keep the order.
fn gen_congruence_chain(
    largest: u64,
    max_len: usize,
    part_at_least_index: bool,
    sink: &mut Sink<'_>,
    modulus: impl Fn(usize) -> Result<u64>,
) -> Result<()> {
    if largest == 0 {
        return sink.emit(&[]);
    }
    if max_len == 0 {
        return Ok(());
    }
    let mut stack = vec![largest];
    chain_step(&mut stack, max_len, part_at_least_index, sink, &modulus)
}

fn chain_step(
    stack: &mut Vec<u64>,
    max_len: usize,
    part_at_least_index: bool,
    sink: &mut Sink<'_>,
    modulus: &impl Fn(usize) -> Result<u64>,
) -> Result<()> {
    let d = stack.len();
    let v = stack[d - 1];
    let m = modulus(d)?;
    if d < max_len {
        let floor = if part_at_least_index { d as u64 + 1 } else { 1 };
        let mut w = v;
        while w >= floor {
            stack.push(w);
            chain_step(stack, max_len, part_at_least_index, sink, modulus)?;
            stack.pop();
            if w <= m {
                break;
            }
            w -= m;
        }
    }
    if v.is_multiple_of(m) {
        sink.emit(stack)?;
    }
    Ok(())
}

fn gen_step_bounded(largest: u64, sink: &mut Sink<'_>) -> Result<()> {
    fn step(stack: &mut Vec<u64>, sink: &mut Sink<'_>) -> Result<()> {
        let d = stack.len() as u64;
        let v = *stack.last().expect("nonempty");
        // Members end with λ_r = r, so every part is at least its index.
        for w in [v, v.wrapping_sub(d)] {
            if w > d && w <= v {
                stack.push(w);
                step(stack, sink)?;
                stack.pop();
            }
        }
        if v == d {
            sink.emit(stack)?;
        }
        Ok(())
    }
    if largest == 0 {
        return sink.emit(&[]);
    }
    let mut stack = vec![largest];
    step(&mut stack, sink)
}

/// A part value whose multiplicity must be a multiple of `step`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub part: u64,
    pub step: u64,
}

/// Slots `(b_i, a_i)` for `i` in `1..=extent(B)`; `B` must be distinct.
pub fn pba_slots(a: &SequenceSpec, b: &SequenceSpec) -> Result<Vec<Slot>> {
    b.check_distinct()?;
    (1..=b.extent())
        .map(|i| Ok(Slot { part: b.term(i)?, step: a.term(i)? }))
        .collect()
}

/// Visits every multiset drawn from `slots` in which each slot's multiplicity
/// is a multiple of its step, subject to optional bounds on size and length.
/// The callback receives the frequency view, the size, and the length.
pub fn visit_scaled_multisets(
    slots: &[Slot],
    max_size: Option<u64>,
    max_len: Option<u64>,
    max_items: u64,
    f: &mut dyn FnMut(&FrequencyView, u64, u64),
) -> Result<u64> {
    if max_size.is_none() && max_len.is_none() {
        return Err(Error::OutOfContract(
            "multiset enumeration needs a size or length bound".into(),
        ));
    }
    let mut chosen: BTreeMap<u64, u64> = BTreeMap::new();
    let mut visited = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        slots: &[Slot],
        idx: usize,
        size: u64,
        len: u64,
        max_size: Option<u64>,
        max_len: Option<u64>,
        chosen: &mut BTreeMap<u64, u64>,
        visited: &mut u64,
        max_items: u64,
        f: &mut dyn FnMut(&FrequencyView, u64, u64),
    ) -> Result<()> {
        if idx == slots.len() {
            *visited += 1;
            if *visited > max_items {
                return Err(Error::ResourceBound(max_items));
            }
            let fv = FrequencyView::new(chosen.clone())?;
            f(&fv, size, len);
            return Ok(());
        }
        let Slot { part, step } = slots[idx];
        let mut mult = 0u64;
        loop {
            let add_size = part.checked_mul(mult).ok_or_else(|| Error::Overflow("size".into()))?;
            let s = size + add_size;
            let l = len + mult;
            if max_size.is_some_and(|m| s > m) || max_len.is_some_and(|m| l > m) {
                break;
            }
            if mult > 0 {
                chosen.insert(part, mult);
            }
            rec(slots, idx + 1, s, l, max_size, max_len, chosen, visited, max_items, f)?;
            chosen.remove(&part);
            mult += step;
        }
        Ok(())
    }
    rec(
        slots, 0, 0, 0, max_size, max_len, &mut chosen, &mut visited, max_items, f,
    )?;
    Ok(visited)
}

/// Members of `P_B(A)` of size at most `max_size`, in decreasing
/// lexicographic order. For rule-based `B` the extent must reach every
/// term not exceeding `max_size`.
pub fn pba_up_to_size(
    a: &SequenceSpec,
    b: &SequenceSpec,
    max_size: u64,
    max_items: u64,
) -> Result<Vec<Partition>> {
    ensure_rule_covers(b, max_size)?;
    let slots = pba_slots(a, b)?;
    let mut out = Vec::new();
    visit_scaled_multisets(&slots, Some(max_size), None, max_items, &mut |fv, _, _| {
        out.push(fv.to_partition())
    })?;
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}

/// For increasing rules, the first term past the extent must exceed `bound`.
pub(crate) fn ensure_rule_covers(seq: &SequenceSpec, bound: u64) -> Result<()> {
    use crate::sequence::SequenceKind;
    if matches!(seq.kind(), SequenceKind::Naturals | SequenceKind::Odds) {
        let next = seq.rule_term(seq.extent() + 1).expect("rule");
        if next <= bound {
            return Err(Error::ExtentExceeded(format!(
                "{seq} stops before term {next}, which is within the bound {bound}"
            )));
        }
    }
    Ok(())
}

/// `p_T(n)`: partitions of `n` with every part in `parts`.
pub fn count_parts_in(parts: &[u64], n: u64) -> Result<u64> {
    count(&FamilyDescriptor::PartsIn { parts: parts.to_vec(), n })
}

/// Entry `n` counts the partitions of `n` satisfying `membership`, `0 <= n <= max_size`.
pub fn counts_by_size(
    membership: &dyn Fn(&Partition) -> bool,
    max_size: u64,
    max_items: u64,
) -> Result<Vec<u64>> {
    let mut counts = Vec::with_capacity(max_size as usize + 1);
    let mut budget = max_items;
    for n in 0..=max_size {
        let mut c = 0u64;
        let seen = for_each(&FamilyDescriptor::All { n }, budget, |p| {
            if membership(&p) {
                c += 1;
            }
        })
        .map_err(|e| match e {
            Error::ResourceBound(_) => Error::ResourceBound(max_items),
            e => e,
        })?;
        budget -= seen;
        counts.push(c);
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    pub max_size: u64,
    /// `(n, count for the first predicate, count for the second)`.
    pub first_difference: Option<(u64, u64, u64)>,
}

/// Compares `counts_by_size` of two predicates for sizes `0..=max_size`.
pub fn ideal_equivalent_upto(
    first: &dyn Fn(&Partition) -> bool,
    second: &dyn Fn(&Partition) -> bool,
    max_size: u64,
    max_items: u64,
) -> Result<Equivalence> {
    let c1 = counts_by_size(first, max_size, max_items)?;
    let c2 = counts_by_size(second, max_size, max_items)?;
    let first_difference = c1
        .iter()
        .zip(&c2)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(n, (&x, &y))| (n as u64, x, y));
    Ok(Equivalence { equivalent: first_difference.is_none(), max_size, first_difference })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionWitness {
    pub member: Partition,
    pub deleted_part: u64,
    pub copies: u64,
    pub result: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    #[serde(flatten)]
    pub report: ViolationReport,
    pub witness: Option<DeletionWitness>,
    /// Members examined.
    pub members: u64,
}

impl ClosureCheck {
    fn passed(members: u64, detail: String) -> Self {
        ClosureCheck { report: ViolationReport::pass(detail), witness: None, members }
    }

    fn failed(members: u64, w: DeletionWitness) -> Self {
        let detail = format!(
            "deleting {} cop{} of {} from {} gives {}, which is not a member",
            w.copies,
            if w.copies == 1 { "y" } else { "ies" },
            w.deleted_part,
            w.member,
            w.result
        );
        ClosureCheck {
            report: ViolationReport::fail(w.deleted_part, detail),
            witness: Some(w),
            members,
        }
    }
}

/// Checks closure under deleting a single part, for every member of size
/// at most `max_size`. Single deletions suffice: any deletion is a chain
/// of single ones.
pub fn check_ideal_closure(
    membership: &dyn Fn(&Partition) -> bool,
    max_size: u64,
    max_items: u64,
) -> Result<ClosureCheck> {
    let mut members = 0u64;
    let mut budget = max_items;
    for n in 0..=max_size {
        let family = enumerate_with_cap(&FamilyDescriptor::All { n }, budget)
            .map_err(|_| Error::ResourceBound(max_items))?;
        budget -= family.len() as u64;
        for lambda in family.into_iter().filter(|l| membership(l)) {
            members += 1;
            let distinct: BTreeSet<u64> = lambda.parts().iter().copied().collect();
            for &part in &distinct {
                let result = lambda.delete_parts(part, 1)?;
                if !membership(&result) {
                    return Ok(ClosureCheck::failed(
                        members,
                        DeletionWitness { member: lambda, deleted_part: part, copies: 1, result },
                    ));
                }
            }
        }
    }
    Ok(ClosureCheck::passed(
        members,
        format!("closed under part deletion up to size {max_size}"),
    ))
}

/// Deletes `copies` copies of `b_i`, accepting only multiples of `a_i`.
pub fn quasi_delete(
    lambda: &Partition,
    a: &SequenceSpec,
    b: &SequenceSpec,
    index: usize,
    copies: u64,
) -> Result<Partition> {
    let ai = a.term(index)?;
    let bi = b.term(index)?;
    if copies == 0 || !copies.is_multiple_of(ai) {
        return Err(Error::OutOfContract(format!(
            "{copies} copies of b_{index} = {bi} is not a positive multiple of a_{index} = {ai}"
        )));
    }
    lambda.delete_parts(bi, copies)
}

/// Checks the quasi-ideal property of `P_B(A)` on members of size at most
/// `max_size`: deleting any positive multiple of `a_i` copies of `b_i`
/// stays inside `P_B(A)`.
pub fn check_quasi_ideal(
    a: &SequenceSpec,
    b: &SequenceSpec,
    max_size: u64,
    max_items: u64,
) -> Result<ClosureCheck> {
    let members = pba_up_to_size(a, b, max_size, max_items)?;
    for lambda in &members {
        for (part, mult) in lambda.frequencies().iter() {
            let i = b.position_of(part).expect("member parts lie in B");
            let ai = a.term(i)?;
            let mut copies = ai;
            while copies <= mult {
                let result = quasi_delete(lambda, a, b, i, copies)?;
                if !is_member_pba(&result, a, b)?.ok {
                    return Ok(ClosureCheck::failed(
                        members.len() as u64,
                        DeletionWitness {
                            member: lambda.clone(),
                            deleted_part: part,
                            copies,
                            result,
                        },
                    ));
                }
                copies += ai;
            }
        }
    }
    Ok(ClosureCheck::passed(
        members.len() as u64,
        format!("P_B(A) closed under deleting multiples of a_i copies of b_i up to size {max_size}"),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceRow {
    pub n: u64,
    pub count_a: u64,
    pub count_a_permuted: u64,
    pub count_b_alternative: u64,
    pub p_a: u64,
    pub sets_equal_under_permutation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub ok: bool,
    pub a_permuted: Vec<u64>,
    pub b_alternative: Vec<u64>,
    pub permutation_trivial: bool,
    pub rows: Vec<InvarianceRow>,
    pub detail: String,
}

/// For `0 <= n <= max_length`, compares `#P_B(A,n)`, `#P_B(A',n)`,
/// `#P_{B'}(A,n)` and `p_A(n)`. `A'` defaults to `A` reversed and `B'` to
/// `(1, 2, ..., K)`. When `A'` is a nontrivial rearrangement the sets
/// `P_B(A,n)` and `P_B(A',n)` must differ for some `n`; otherwise they must
/// agree everywhere.
pub fn count_invariance_suite(
    a: &SequenceSpec,
    b: &SequenceSpec,
    a_permuted: Option<&SequenceSpec>,
    b_alternative: Option<&SequenceSpec>,
    max_length: u64,
    max_items: u64,
) -> Result<InvarianceReport> {
    a.check_distinct()?;
    let k = b.extent();
    let a_terms: Vec<u64> = (1..=k).map(|i| a.term(i)).collect::<Result<_>>()?;
    let a_perm = match a_permuted {
        Some(s) => s.clone(),
        None => SequenceSpec::table(a_terms.iter().rev().copied().collect())?,
    };
    let b_alt = match b_alternative {
        Some(s) => s.clone(),
        None => SequenceSpec::table((1..=k as u64).collect())?,
    };
    let perm_terms: Vec<u64> = (1..=k).map(|i| a_perm.term(i)).collect::<Result<_>>()?;
    let (mut x, mut y) = (a_terms.clone(), perm_terms.clone());
    x.sort_unstable();
    y.sort_unstable();
    if x != y {
        return Err(Error::OutOfContract(format!(
            "{a_perm} is not a rearrangement of the first {k} terms of {a}"
        )));
    }
    let permutation_trivial = a_terms == perm_terms;

    let mut rows = Vec::new();
    let mut ok = true;
    let mut any_difference = false;
    for n in 0..=max_length {
        let set_a = enumerate_with_cap(
            &FamilyDescriptor::Pba { a: a.clone(), b: b.clone(), length: n },
            max_items,
        )?;
        let set_perm = enumerate_with_cap(
            &FamilyDescriptor::Pba { a: a_perm.clone(), b: b.clone(), length: n },
            max_items,
        )?;
        let count_b_alternative = count_with_cap(
            &FamilyDescriptor::Pba { a: a.clone(), b: b_alt.clone(), length: n },
            max_items,
        )?;
        let p_a = count_with_cap(&FamilyDescriptor::PartsIn { parts: a_terms.clone(), n }, max_items)?;
        let row = InvarianceRow {
            n,
            count_a: set_a.len() as u64,
            count_a_permuted: set_perm.len() as u64,
            count_b_alternative,
            p_a,
            sets_equal_under_permutation: set_a == set_perm,
        };
        ok &= row.count_a == row.count_a_permuted
            && row.count_a == row.count_b_alternative
            && row.count_a == row.p_a;
        any_difference |= !row.sets_equal_under_permutation;
        rows.push(row);
    }
    let sets_ok = if permutation_trivial { !any_difference } else { any_difference };
    ok &= sets_ok;
    let detail = if ok {
        format!("counts agree for n <= {max_length}")
    } else if !sets_ok {
        if permutation_trivial {
            "identity rearrangement changed a set".to_string()
        } else {
            format!("rearranged A gives identical sets for every n <= {max_length}")
        }
    } else {
        let bad = rows
            .iter()
            .find(|r| !(r.count_a == r.count_a_permuted && r.count_a == r.count_b_alternative && r.count_a == r.p_a))
            .expect("a mismatching row");
        format!("counts differ at n = {}", bad.n)
    };
    Ok(InvarianceReport {
        ok,
        a_permuted: perm_terms,
        b_alternative: b_alt.terms(),
        permutation_trivial,
        rows,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{has_distinct_parts, is_frequency_congruent};

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn tab(v: &[u64]) -> SequenceSpec {
        SequenceSpec::table(v.to_vec()).unwrap()
    }

    #[test]
    fn all_of_size_four() {
        let got = enumerate(&FamilyDescriptor::All { n: 4 }).unwrap();
        assert_eq!(got, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(enumerate(&FamilyDescriptor::All { n: 0 }).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn seqcong_largest_four() {
        let got = enumerate(&FamilyDescriptor::SeqCong { largest: 4 }).unwrap();
        let set: BTreeSet<_> = got.iter().cloned().collect();
        let expected: BTreeSet<_> =
            [p(&[4]), p(&[4, 2]), p(&[4, 4]), p(&[4, 3, 3]), p(&[4, 4, 4, 4])].into();
        assert_eq!(set, expected);
        assert_eq!(got.len(), 5);
        assert!(got.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn pba_six() {
        let desc = FamilyDescriptor::Pba { a: tab(&[2, 3]), b: tab(&[5, 7]), length: 6 };
        assert_eq!(enumerate(&desc).unwrap(), vec![p(&[7; 6]), p(&[5; 6])]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count(&FamilyDescriptor::SeqCong { largest: 4 }).unwrap(), 5);
        assert_eq!(count(&FamilyDescriptor::frequency_congruent(6)).unwrap(), 11);
        assert_eq!(count(&FamilyDescriptor::Distinct { n: 10 }).unwrap(), 10);
    }

    #[test]
    fn step_bounded_four() {
        let got = enumerate(&FamilyDescriptor::StepBounded { largest: 4 }).unwrap();
        assert_eq!(got, vec![p(&[4, 4, 4, 4]), p(&[4, 3, 3])]);
    }

    #[test]
    fn sna_naturals_matches_seqcong() {
        for n in 0..=12 {
            let sna = enumerate(&FamilyDescriptor::Sna {
                a: SequenceSpec::naturals(n as usize),
                largest: n,
            })
            .unwrap();
            let s = enumerate(&FamilyDescriptor::SeqCong { largest: n }).unwrap();
            assert_eq!(sna, s, "n = {n}");
        }
    }

    #[test]
    fn resource_bound() {
        assert_eq!(
            count_with_cap(&FamilyDescriptor::All { n: 10 }, 5),
            Err(Error::ResourceBound(5))
        );
    }

    #[test]
    fn counts_by_size_examples() {
        let distinct = |l: &Partition| has_distinct_parts(l);
        assert_eq!(counts_by_size(&distinct, 6, DEFAULT_MAX_ITEMS).unwrap(), vec![1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(counts_by_size(&|_| true, 5, DEFAULT_MAX_ITEMS).unwrap(), vec![1, 1, 2, 3, 5, 7]);
        assert_eq!(
            counts_by_size(&|l: &Partition| l.is_empty(), 3, DEFAULT_MAX_ITEMS).unwrap(),
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn equivalence_examples() {
        let distinct = |l: &Partition| has_distinct_parts(l);
        let odd = |l: &Partition| l.parts().iter().all(|x| x % 2 == 1);
        assert!(ideal_equivalent_upto(&distinct, &odd, 12, DEFAULT_MAX_ITEMS).unwrap().equivalent);
        let e = ideal_equivalent_upto(&distinct, &|_| true, 3, DEFAULT_MAX_ITEMS).unwrap();
        assert_eq!(e.first_difference, Some((2, 1, 2)));
        assert!(ideal_equivalent_upto(&odd, &odd, 8, DEFAULT_MAX_ITEMS).unwrap().equivalent);
    }

    #[test]
    fn closure_examples() {
        let distinct = |l: &Partition| has_distinct_parts(l);
        assert!(check_ideal_closure(&distinct, 10, DEFAULT_MAX_ITEMS).unwrap().report.ok);
        let only_empty = |l: &Partition| l.is_empty();
        assert!(check_ideal_closure(&only_empty, 6, DEFAULT_MAX_ITEMS).unwrap().report.ok);

        let fc = |l: &Partition| is_frequency_congruent(l).ok;
        let c = check_ideal_closure(&fc, 6, DEFAULT_MAX_ITEMS).unwrap();
        assert!(!c.report.ok);
        let w = c.witness.unwrap();
        assert!(fc(&w.member));
        assert!(!fc(&w.result));
        assert_eq!(w.member.delete_parts(w.deleted_part, 1).unwrap(), w.result);
    }

    #[test]
    fn quasi_ideal_examples() {
        let n = SequenceSpec::naturals(12);
        assert!(check_quasi_ideal(&n, &n, 12, DEFAULT_MAX_ITEMS).unwrap().report.ok);
        assert!(check_quasi_ideal(&tab(&[2, 3]), &tab(&[5, 7]), 40, DEFAULT_MAX_ITEMS).unwrap().report.ok);
        let lam = p(&[7, 7, 7, 7, 7, 7, 5, 5]);
        assert!(matches!(
            quasi_delete(&lam, &tab(&[2, 3]), &tab(&[5, 7]), 2, 4),
            Err(Error::OutOfContract(_))
        ));
        assert_eq!(
            quasi_delete(&lam, &tab(&[2, 3]), &tab(&[5, 7]), 2, 3).unwrap(),
            p(&[7, 7, 7, 5, 5])
        );
        assert!(matches!(
            check_quasi_ideal(&SequenceSpec::naturals(5), &SequenceSpec::naturals(5), 12, DEFAULT_MAX_ITEMS),
            Err(Error::ExtentExceeded(_))
        ));
    }

    #[test]
    fn invariance_examples() {
        let r = count_invariance_suite(&tab(&[2, 3]), &tab(&[5, 7]), None, None, 12, DEFAULT_MAX_ITEMS)
            .unwrap();
        assert!(r.ok, "{}", r.detail);
        assert_eq!(r.a_permuted, vec![3, 2]);
        assert_eq!(r.rows[6].count_a, 2);
        assert_eq!(r.rows[6].count_a_permuted, 2);
        assert!(!r.rows[5].sets_equal_under_permutation);

        let r = count_invariance_suite(
            &tab(&[2, 3]),
            &tab(&[5, 7]),
            Some(&tab(&[2, 3])),
            Some(&tab(&[1, 2])),
            12,
            DEFAULT_MAX_ITEMS,
        )
        .unwrap();
        assert!(r.ok);
        assert!(r.permutation_trivial);
        assert!(r.rows.iter().all(|row| row.sets_equal_under_permutation));

        assert!(matches!(
            count_invariance_suite(&tab(&[2, 2]), &tab(&[5, 7]), None, None, 4, DEFAULT_MAX_ITEMS),
            Err(Error::NonDistinct(_))
        ));
    }
}
