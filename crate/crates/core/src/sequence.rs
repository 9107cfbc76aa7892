//! Finite-extent descriptions of sequences of positive integers.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// An explicit finite table; its length is the extent.
    Table(Vec<u64>),
    /// `i -> i`
    Naturals,
    /// `i -> 1`
    Ones,
    /// `i -> k`
    Constant(u64),
    /// `i -> 2i - 1`
    Odds,
}

/// A sequence `(s_1, s_2, ...)` of positive integers, queryable on
/// `1..=extent`. Queries past the extent are errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    kind: SequenceKind,
    extent: usize,
}

impl SequenceSpec {
    pub fn table(terms: Vec<u64>) -> Result<Self> {
        if let Some(pos) = terms.iter().position(|&t| t == 0) {
            return Err(Error::InvalidPart(format!(
                "sequence term at index {} is zero",
                pos + 1
            )));
        }
        let extent = terms.len();
        Ok(SequenceSpec { kind: SequenceKind::Table(terms), extent })
    }

    pub fn naturals(extent: usize) -> Self {
        SequenceSpec { kind: SequenceKind::Naturals, extent }
    }

    pub fn ones(extent: usize) -> Self {
        SequenceSpec { kind: SequenceKind::Ones, extent }
    }

    pub fn constant(k: u64, extent: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidPart("constant sequence term must be positive".into()));
        }
        Ok(SequenceSpec { kind: SequenceKind::Constant(k), extent })
    }

    pub fn odds(extent: usize) -> Self {
        SequenceSpec { kind: SequenceKind::Odds, extent }
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn extent(&self) -> usize {
        self.extent
    }

    pub fn is_rule(&self) -> bool {
        !matches!(self.kind, SequenceKind::Table(_))
    }

    /// Same rule with a different extent. Tables keep their own length.
    pub fn with_extent(&self, extent: usize) -> Self {
        match self.kind {
            SequenceKind::Table(_) => self.clone(),
            _ => SequenceSpec { kind: self.kind.clone(), extent },
        }
    }

    /// Value of a rule at any index, ignoring the extent. `None` for tables.
    pub(crate) fn rule_term(&self, i: usize) -> Option<u64> {
        let i = i as u64;
        match self.kind {
            SequenceKind::Table(_) => None,
            SequenceKind::Naturals => Some(i),
            SequenceKind::Ones => Some(1),
            SequenceKind::Constant(k) => Some(k),
            SequenceKind::Odds => Some(2 * i - 1),
        }
    }

    /// The term `s_i`, 1-based.
    pub fn term(&self, i: usize) -> Result<u64> {
        if i == 0 || i > self.extent {
            return Err(Error::ExtentExceeded(format!(
                "index {i} outside 1..={} of sequence {self}",
                self.extent
            )));
        }
        Ok(match &self.kind {
            SequenceKind::Table(t) => t[i - 1],
            _ => self.rule_term(i).expect("rule kinds always evaluate"),
        })
    }

    pub fn terms(&self) -> Vec<u64> {
        (1..=self.extent).map(|i| self.term(i).expect("within extent")).collect()
    }

    /// First index `i <= extent` with `s_i == value`.
    pub fn position_of(&self, value: u64) -> Option<usize> {
        let idx = match &self.kind {
            SequenceKind::Table(t) => t.iter().position(|&x| x == value).map(|p| p + 1),
            SequenceKind::Naturals => Some(value as usize).filter(|&i| i >= 1),
            SequenceKind::Ones => (value == 1).then_some(1),
            SequenceKind::Constant(k) => (value == *k).then_some(1),
            SequenceKind::Odds => (value % 2 == 1).then_some(value.div_ceil(2) as usize),
        }?;
        (idx <= self.extent).then_some(idx)
    }

    /// Errors with the first repeated term if `s_1..s_extent` are not distinct.
    pub fn check_distinct(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for i in 1..=self.extent {
            let t = self.term(i)?;
            if !seen.insert(t) {
                return Err(Error::NonDistinct(format!(
                    "term {t} repeats at index {i} of {self}"
                )));
            }
        }
        Ok(())
    }

    /// Parses `2,3,5`, `nat`, `ones`, `odd`, `const:K`, each rule optionally
    /// followed by `@EXTENT`. Rules without an explicit extent take
    /// `default_extent`.
    pub fn parse(text: &str, default_extent: usize) -> Result<Self> {
        let text = text.trim();
        let perr = |message: String| Error::Parse { position: 0, message };
        let (body, extent) = match text.split_once('@') {
            Some((b, e)) => {
                let e = e
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| perr(format!("bad extent in sequence '{text}'")))?;
                (b.trim(), Some(e))
            }
            None => (text, None),
        };
        let extent_or_default = extent.unwrap_or(default_extent);
        match body {
            "nat" | "naturals" => Ok(Self::naturals(extent_or_default)),
            "ones" => Ok(Self::ones(extent_or_default)),
            "odd" | "odds" => Ok(Self::odds(extent_or_default)),
            _ if body.starts_with("const:") => {
                let k = body["const:".len()..]
                    .parse::<u64>()
                    .map_err(|_| perr(format!("bad constant in sequence '{text}'")))?;
                Self::constant(k, extent_or_default)
            }
            "" => {
                if extent.is_some() {
                    return Err(perr("explicit tables take no extent".into()));
                }
                Self::table(Vec::new())
            }
            _ => {
                if extent.is_some() {
                    return Err(perr("explicit tables take no extent".into()));
                }
                let mut terms = Vec::new();
                for (k, tok) in body.split(',').enumerate() {
                    let v = tok.trim().parse::<u64>().map_err(|_| {
                        perr(format!("bad term '{}' at position {} in '{text}'", tok.trim(), k + 1))
                    })?;
                    terms.push(v);
                }
                Self::table(terms)
            }
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SequenceKind::Table(t) => {
                let s: Vec<String> = t.iter().map(u64::to_string).collect();
                write!(f, "({})", s.join(","))
            }
            SequenceKind::Naturals => write!(f, "nat@{}", self.extent),
            SequenceKind::Ones => write!(f, "ones@{}", self.extent),
            SequenceKind::Constant(k) => write!(f, "const:{k}@{}", self.extent),
            SequenceKind::Odds => write!(f, "odd@{}", self.extent),
        }
    }
}
