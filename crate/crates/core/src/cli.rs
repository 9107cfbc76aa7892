//! Command-line front end. Every subcommand validates its whole request
//! before computing anything and then calls the same library functions the
//! unit tests exercise.
//!
//! Exit codes: 0 success, 1 property violation or false predicate,
//! 2 usage/parse/extent error, 3 resource cap exceeded.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{
    self, check_ideal_closure, check_quasi_ideal, count_invariance_suite, count_parts_in,
    ideal_equivalent_upto, FamilyDescriptor, DEFAULT_MAX_ITEMS,
};
use crate::error::{Error, Result};
use crate::maps::{self, Side};
use crate::partition::{FrequencyView, Partition};
use crate::predicates::{self, ViolationReport};
use crate::qseries::{self, BivariateSeries, WeightSpec};
use crate::sequence::SequenceSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceBound(_) => EXIT_RESOURCE,
        Error::NotSequentiallyCongruent { .. }
        | Error::NotMemberPba(_)
        | Error::InsufficientMultiplicity { .. }
        | Error::InternalContradiction(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

#[derive(Parser, Debug)]
#[command(name = "seqcong", version, about = "Sequentially congruent partitions: maps, families and generating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test partitions for membership in a family.
    ///
    /// FAMILY is one of seqcong, freqcong, distinct, odd, stepbounded,
    /// selfconj, empty, all, parts:T=2,3, pba:A=2,3;B=5,7, sna:A=2,3,1.
    /// Rule sequences (nat, ones, odd, const:K, optionally @EXTENT) default
    /// to an extent large enough for the partition being tested.
    Check {
        family: String,
        /// JSON array `[5,3,3]` or frequency form `1^3 2 3^2`; read from
        /// standard input as one partition per line when omitted.
        partition: Option<String>,
    },
    /// Apply a map to partitions, printing the image as a JSON array.
    Map {
        #[arg(value_enum)]
        op: MapOp,
        partition: Option<String>,
        /// Sequence A for scale/scale-inv.
        #[arg(long = "A")]
        a: Option<String>,
        /// Sequence B for scale/scale-inv.
        #[arg(long = "B")]
        b: Option<String>,
    },
    /// Alternate pi and sigma until the input recurs.
    Orbit {
        partition: Option<String>,
        #[arg(long, value_enum, default_value = "p")]
        side: SideArg,
    },
    /// Enumerate a family: all:N, distinct:N, parts:T=1,3;n=N, seqcong:N,
    /// freqcong:N, stepbounded:N, pba:A=2,3;B=5,7;n=N, sna:A=2,3,1;n=N.
    Enum {
        family: String,
        /// Print at most this many members.
        #[arg(long)]
        limit: Option<u64>,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
        /// Print a single JSON array.
        #[arg(long, conflicts_with = "lines")]
        json: bool,
        /// Print one JSON array per line (the default).
        #[arg(long)]
        lines: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ITEMS)]
        max_items: u64,
    },
    /// Partition-ideal checks on finite truncations.
    Ideal {
        #[command(subcommand)]
        check: IdealCheck,
    },
    /// Generating-function identities and expansions.
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Evaluate a partition zeta function and its Euler product.
    Zeta {
        /// Allowed parts, e.g. 2,3 (1 is excluded).
        #[arg(long = "T")]
        t: String,
        /// Exponent s > 1, integer or fraction such as 5/2.
        #[arg(long)]
        s: String,
        /// Sum over partitions of size at most this bound.
        #[arg(long, default_value_t = 40)]
        depth: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ITEMS)]
        max_items: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MapOp {
    Pi,
    PiInv,
    Sigma,
    SigmaInv,
    SigmaPi,
    Conjugate,
    Scale,
    ScaleInv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    P,
    S,
}

#[derive(Args, Debug)]
pub struct IdealBounds {
    #[arg(long)]
    max_size: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITEMS)]
    max_items: u64,
}

#[derive(Subcommand, Debug)]
pub enum IdealCheck {
    /// Closure under deleting parts; PREDICATE as for `check`.
    Closure {
        predicate: String,
        #[command(flatten)]
        bounds: IdealBounds,
    },
    /// Closure of P_B(A) under deleting multiples of a_i copies of b_i.
    Quasi {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[command(flatten)]
        bounds: IdealBounds,
    },
    /// Compare size counts of two predicates.
    Equiv {
        first: String,
        second: String,
        #[command(flatten)]
        bounds: IdealBounds,
    },
    /// Count invariance of P_B(A, n) under rearranging A and replacing B.
    Invariance {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        /// Rearrangement of A; defaults to A reversed.
        #[arg(long = "A-perm")]
        a_perm: Option<String>,
        /// Replacement for B; defaults to 1,2,...,K.
        #[arg(long = "B-alt")]
        b_alt: Option<String>,
        #[command(flatten)]
        bounds: IdealBounds,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// Product vs sum over all partitions.
    Eq24,
    /// Product vs sum over sequentially congruent partitions.
    Thm22,
    /// Two-variable product vs sum over P_B(A).
    Thm45,
    /// Euler limit product vs enumerated p_A(n).
    Thm45Count,
    /// prod(1 + q^n) vs step-bounded sequentially congruent partitions.
    DistinctRemark,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesSide {
    Product,
    PartitionSum,
    SeqcongSum,
    TwoVar,
    PbaSum,
    Euler,
    DistinctProduct,
    StepBoundedSum,
}

#[derive(Args, Debug)]
pub struct SeriesParams {
    #[arg(long)]
    qtrunc: usize,
    #[arg(long, default_value_t = 0)]
    xtrunc: usize,
    /// Weight f: one, table:2,3,1/2, indicator:1,3,5, random-seeded:SEED.
    #[arg(long, default_value = "one")]
    f: String,
    #[arg(long = "A", default_value = "nat")]
    a: String,
    #[arg(long = "B", default_value = "nat")]
    b: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ITEMS)]
    max_items: u64,
}

#[derive(Subcommand, Debug)]
pub enum SeriesAction {
    /// Build both sides of an identity and compare coefficientwise.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        params: SeriesParams,
    },
    /// Print the coefficients of one side.
    Expand {
        #[arg(value_enum)]
        side: SeriesSide,
        #[command(flatten)]
        params: SeriesParams,
        #[arg(long)]
        json: bool,
    },
}

/// Parses a partition as a JSON array of nonnegative integers or in
/// frequency notation `1^3 2 3^2`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim_start();
    let offset = text.len() - trimmed.len();
    let trimmed = trimmed.trim_end();
    if trimmed.starts_with('[') {
        let values: Vec<serde_json::Value> = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            position: offset + e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        let mut parts = Vec::with_capacity(values.len());
        for (k, v) in values.iter().enumerate() {
            match v.as_u64() {
                Some(x) => parts.push(x),
                None => {
                    return Err(Error::Parse {
                        position: offset + locate_element(trimmed, k),
                        message: format!("element {} ({v}) is not a nonnegative integer", k + 1),
                    })
                }
            }
        }
        return Ok(Partition::new(parts));
    }
    let mut entries: BTreeMap<u64, u64> = BTreeMap::new();
    let mut pos = offset;
    for token in trimmed.split_whitespace() {
        let start = pos + text[pos..].find(token).expect("token comes from text");
        pos = start + token.len();
        let bad = |message: String| Error::Parse { position: start, message };
        let (value, mult) = match token.split_once('^') {
            Some((v, m)) => (v, m),
            None => (token, "1"),
        };
        let value: u64 = value.parse().map_err(|_| bad(format!("bad part '{token}'")))?;
        let mult: u64 = mult.parse().map_err(|_| bad(format!("bad multiplicity in '{token}'")))?;
        if value == 0 {
            return Err(bad(format!("part must be positive in '{token}'")));
        }
        if mult > 0 {
            *entries.entry(value).or_insert(0) += mult;
        }
    }
    Ok(FrequencyView::new(entries)?.to_partition())
}

fn locate_element(text: &str, index: usize) -> usize {
    let mut depth = 0;
    let mut seen = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 && index == 0 {
                    return i + 1;
                }
            }
            ']' => depth -= 1,
            ',' if depth == 1 => {
                seen += 1;
                if seen == index {
                    return i + 1;
                }
            }
            _ => {}
        }
    }
    0
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse { position: 0, message: format!("bad rational '{text}'") };
    let (n, d) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("bad integer '{}' in '{text}'", t.trim()),
            })
        })
        .collect()
}

fn parse_weight(text: &str, extent: usize) -> Result<WeightSpec> {
    let (kind, arg) = text.split_once(':').unwrap_or((text, ""));
    match kind {
        "one" => Ok(WeightSpec::one()),
        "table" => Ok(WeightSpec::table(
            arg.split(',').map(parse_rational).collect::<Result<_>>()?,
        )),
        "indicator" => Ok(WeightSpec::indicator(parse_u64_list(arg)?.into_iter().collect())),
        "random-seeded" => {
            let seed = arg.parse::<u64>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("bad seed in '{text}'"),
            })?;
            Ok(WeightSpec::random(seed, extent))
        }
        _ => Err(Error::Parse { position: 0, message: format!("unknown weight '{text}'") }),
    }
}

/// Splits `name:k=v;k=v` or `name:N`.
fn split_descriptor(text: &str) -> Result<(String, BTreeMap<String, String>)> {
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    let mut params = BTreeMap::new();
    for piece in rest.split(';').filter(|p| !p.trim().is_empty()) {
        match piece.split_once('=') {
            Some((k, v)) => params.insert(k.trim().to_string(), v.trim().to_string()),
            None => params.insert("n".to_string(), piece.trim().to_string()),
        };
    }
    Ok((name.trim().to_string(), params))
}

fn param_u64(params: &BTreeMap<String, String>, key: &str, family: &str) -> Result<u64> {
    params
        .get(key)
        .ok_or_else(|| Error::Parse { position: 0, message: format!("family '{family}' needs {key}") })?
        .parse()
        .map_err(|_| Error::Parse { position: 0, message: format!("bad {key} in '{family}'") })
}

fn param_seq(
    params: &BTreeMap<String, String>,
    key: &str,
    family: &str,
    default_extent: usize,
) -> Result<SequenceSpec> {
    let raw = params
        .get(key)
        .ok_or_else(|| Error::Parse { position: 0, message: format!("family '{family}' needs {key}") })?;
    SequenceSpec::parse(raw, default_extent)
}

pub fn parse_family(text: &str) -> Result<FamilyDescriptor> {
    let (name, params) = split_descriptor(text)?;
    let n = || param_u64(&params, "n", text);
    Ok(match name.as_str() {
        "all" => FamilyDescriptor::All { n: n()? },
        "distinct" => FamilyDescriptor::Distinct { n: n()? },
        "seqcong" => FamilyDescriptor::SeqCong { largest: n()? },
        "freqcong" => FamilyDescriptor::frequency_congruent(n()?),
        "stepbounded" => FamilyDescriptor::StepBounded { largest: n()? },
        "parts" => FamilyDescriptor::PartsIn {
            parts: parse_u64_list(params.get("T").map(String::as_str).unwrap_or(""))?,
            n: n()?,
        },
        "pba" => {
            let n = n()?;
            FamilyDescriptor::Pba {
                a: param_seq(&params, "A", text, n as usize)?,
                b: param_seq(&params, "B", text, n as usize)?,
                length: n,
            }
        }
        "sna" => {
            let n = n()?;
            FamilyDescriptor::Sna { a: param_seq(&params, "A", text, n as usize)?, largest: n }
        }
        _ => {
            return Err(Error::Parse { position: 0, message: format!("unknown family '{text}'") })
        }
    })
}

/// A membership predicate named on the command line. Rule sequences
/// without an explicit extent adapt to the partition under test.
#[derive(Clone, Debug)]
pub enum NamedPredicate {
    SeqCong,
    FreqCong,
    Distinct,
    Odd,
    StepBounded,
    SelfConj,
    Empty,
    All,
    PartsIn(BTreeSet<u64>),
    Pba { a: String, b: String },
    Sna { a: String },
}

impl NamedPredicate {
    pub fn parse(text: &str) -> Result<Self> {
        let (name, params) = split_descriptor(text)?;
        let get = |k: &str| {
            params.get(k).cloned().ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("predicate '{text}' needs {k}"),
            })
        };
        let pred = match name.as_str() {
            "seqcong" => NamedPredicate::SeqCong,
            "freqcong" => NamedPredicate::FreqCong,
            "distinct" => NamedPredicate::Distinct,
            "odd" => NamedPredicate::Odd,
            "stepbounded" => NamedPredicate::StepBounded,
            "selfconj" => NamedPredicate::SelfConj,
            "empty" => NamedPredicate::Empty,
            "all" => NamedPredicate::All,
            "parts" => NamedPredicate::PartsIn(parse_u64_list(&get("T")?)?.into_iter().collect()),
            "pba" => NamedPredicate::Pba { a: get("A")?, b: get("B")? },
            "sna" => NamedPredicate::Sna { a: get("A")? },
            _ => {
                return Err(Error::Parse { position: 0, message: format!("unknown predicate '{text}'") })
            }
        };
        // Surface malformed sequences before any computation.
        match &pred {
            NamedPredicate::Pba { a, b } => {
                SequenceSpec::parse(a, 1)?;
                SequenceSpec::parse(b, 1)?;
            }
            NamedPredicate::Sna { a } => {
                SequenceSpec::parse(a, 1)?;
            }
            _ => {}
        }
        Ok(pred)
    }

    pub fn report(&self, lambda: &Partition) -> Result<ViolationReport> {
        let flag = |ok: bool, yes: &str, no: &str| {
            if ok {
                ViolationReport::pass(yes)
            } else {
                ViolationReport::fail(1, no)
            }
        };
        Ok(match self {
            NamedPredicate::SeqCong => predicates::is_sequentially_congruent(lambda),
            NamedPredicate::FreqCong => predicates::is_frequency_congruent(lambda),
            NamedPredicate::StepBounded => predicates::is_step_bounded_seqcong(lambda),
            NamedPredicate::Distinct => {
                match lambda.parts().windows(2).position(|w| w[0] == w[1]) {
                    None => ViolationReport::pass("distinct parts"),
                    Some(k) => ViolationReport::fail(
                        k as u64 + 1,
                        format!("parts {} and {} are equal", k + 1, k + 2),
                    ),
                }
            }
            NamedPredicate::Odd => match lambda.parts().iter().position(|p| p % 2 == 0) {
                None => ViolationReport::pass("odd parts"),
                Some(k) => ViolationReport::fail(k as u64 + 1, format!("part {} is even", k + 1)),
            },
            NamedPredicate::SelfConj => flag(
                predicates::is_self_conjugate(lambda),
                "self-conjugate",
                "differs from its conjugate",
            ),
            NamedPredicate::Empty => flag(lambda.is_empty(), "empty", "not empty"),
            NamedPredicate::All => ViolationReport::pass("partition"),
            NamedPredicate::PartsIn(t) => match lambda.parts().iter().position(|p| !t.contains(p)) {
                None => ViolationReport::pass("all parts allowed"),
                Some(k) => ViolationReport::fail(
                    k as u64 + 1,
                    format!("part {} = {} is not allowed", k + 1, lambda.parts()[k]),
                ),
            },
            NamedPredicate::Pba { a, b } => {
                let ext = lambda.largest() as usize;
                let a = SequenceSpec::parse(a, ext)?;
                let b = SequenceSpec::parse(b, ext)?;
                match predicates::is_member_pba(lambda, &a, &b) {
                    Err(Error::ExtentExceeded(msg)) if b.is_rule() || a.is_rule() => {
                        return Err(Error::ExtentExceeded(msg))
                    }
                    Err(Error::ExtentExceeded(msg)) => ViolationReport::fail(0, msg),
                    other => other?,
                }
            }
            NamedPredicate::Sna { a } => {
                let a = SequenceSpec::parse(a, lambda.length())?;
                predicates::is_member_sna(lambda, &a)?
            }
        })
    }

    /// Boolean form for ideal checks; a part outside an explicit table of
    /// `B` means non-membership.
    pub fn holds(&self, lambda: &Partition) -> bool {
        match self.report(lambda) {
            Ok(r) => r.ok,
            Err(_) => false,
        }
    }
}

fn read_partitions(arg: Option<&str>, stdin: &mut dyn BufRead) -> Result<Vec<Partition>> {
    match arg {
        Some(text) => Ok(vec![parse_partition(text)?]),
        None => {
            let mut out = Vec::new();
            let mut line = String::new();
            let mut lineno = 0;
            loop {
                line.clear();
                let read = stdin.read_line(&mut line).map_err(|e| Error::Parse {
                    position: 0,
                    message: format!("reading standard input: {e}"),
                })?;
                if read == 0 {
                    break;
                }
                lineno += 1;
                if line.trim().is_empty() {
                    continue;
                }
                out.push(parse_partition(&line).map_err(|e| match e {
                    Error::Parse { position, message } => Error::Parse {
                        position,
                        message: format!("line {lineno}: {message}"),
                    },
                    e => e,
                })?);
            }
            Ok(out)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

struct Outcome {
    code: i32,
    lines: Vec<String>,
}

impl Outcome {
    fn ok(lines: Vec<String>) -> Self {
        Outcome { code: EXIT_OK, lines }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Enum { family, limit, count_only, json, lines: _, max_items } => {
            run_enum(&family, limit, count_only, json, max_items, out)
        }
        other => dispatch(other, stdin).and_then(|o| {
            for line in &o.lines {
                writeln!(out, "{line}").map_err(io_err)?;
            }
            Ok(o.code)
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse { position: 0, message: format!("writing output: {e}") }
}

fn run_enum(
    family: &str,
    limit: Option<u64>,
    count_only: bool,
    json: bool,
    max_items: u64,
    out: &mut dyn Write,
) -> Result<i32> {
    let desc = parse_family(family)?;
    if count_only {
        let c = enumerate::count_with_cap(&desc, max_items)?;
        writeln!(out, "{c}").map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    let limit = limit.unwrap_or(u64::MAX);
    if json {
        let mut members = Vec::new();
        enumerate::for_each(&desc, max_items, |p| {
            if (members.len() as u64) < limit {
                members.push(p)
            }
        })?;
        writeln!(out, "{}", to_json(&members)).map_err(io_err)?;
    } else {
        let mut printed = 0u64;
        let mut write_err = None;
        enumerate::for_each(&desc, max_items, |p| {
            if printed < limit && write_err.is_none() {
                if let Err(e) = writeln!(out, "{p}") {
                    write_err = Some(e);
                }
                printed += 1;
            }
        })?;
        if let Some(e) = write_err {
            return Err(io_err(e));
        }
    }
    Ok(EXIT_OK)
}

fn dispatch(command: Command, stdin: &mut dyn BufRead) -> Result<Outcome> {
    match command {
        Command::Check { family, partition } => {
            let pred = NamedPredicate::parse(&family)?;
            let inputs = read_partitions(partition.as_deref(), stdin)?;
            let mut code = EXIT_OK;
            let mut lines = Vec::new();
            for lambda in &inputs {
                let report = pred.report(lambda)?;
                if !report.ok {
                    code = EXIT_VIOLATION;
                }
                lines.push(if report.ok { to_json(&json!({"ok": true})) } else { to_json(&report) });
            }
            Ok(Outcome { code, lines })
        }
        Command::Map { op, partition, a, b } => {
            let needs_seqs = matches!(op, MapOp::Scale | MapOp::ScaleInv);
            if needs_seqs && (a.is_none() || b.is_none()) {
                return Err(Error::Parse { position: 0, message: "scale maps need --A and --B".into() });
            }
            if let (Some(a), Some(b)) = (&a, &b) {
                SequenceSpec::parse(a, 1)?;
                SequenceSpec::parse(b, 1)?;
            }
            let inputs = read_partitions(partition.as_deref(), stdin)?;
            let mut lines = Vec::new();
            for lambda in &inputs {
                let image = match op {
                    MapOp::Pi => maps::pi(lambda)?,
                    MapOp::PiInv => maps::pi_inverse(lambda)?,
                    MapOp::Sigma => maps::sigma(lambda)?,
                    MapOp::SigmaInv => maps::sigma_inverse(lambda)?,
                    MapOp::SigmaPi => maps::sigma_pi(lambda)?,
                    MapOp::Conjugate => lambda.conjugate(),
                    MapOp::Scale | MapOp::ScaleInv => {
                        let ext = lambda.largest() as usize;
                        let sa = SequenceSpec::parse(a.as_deref().expect("checked"), ext)?;
                        let sb = SequenceSpec::parse(b.as_deref().expect("checked"), ext)?;
                        if matches!(op, MapOp::Scale) {
                            maps::scale_map(lambda, &sa, &sb)?
                        } else {
                            maps::scale_map_inverse(lambda, &sa, &sb)?
                        }
                    }
                };
                lines.push(to_json(&image));
            }
            Ok(Outcome::ok(lines))
        }
        Command::Orbit { partition, side } => {
            let side = match side {
                SideArg::P => Side::P,
                SideArg::S => Side::S,
            };
            let inputs = read_partitions(partition.as_deref(), stdin)?;
            let lines = inputs
                .iter()
                .map(|l| maps::orbit(l, side).map(|t| to_json(&t)))
                .collect::<Result<_>>()?;
            Ok(Outcome::ok(lines))
        }
        Command::Ideal { check } => run_ideal(check),
        Command::Series { action } => run_series(action),
        Command::Zeta { t, s, depth, json, max_items } => {
            let parts = parse_u64_list(&t)?;
            let s = parse_rational(&s)?;
            let z = qseries::partition_zeta(&parts, &s, depth, max_items)?;
            let lines = if json {
                vec![to_json(&json!({
                    "sum_side": z.sum_decimal,
                    "product_side": z.product_decimal,
                    "depth": z.depth,
                    "terms": z.terms,
                    "exact": z.exact,
                }))]
            } else {
                vec![
                    format!("sum_side     {}", z.sum_decimal),
                    format!("product_side {}", z.product_decimal),
                    format!("depth {} terms {}", z.depth, z.terms),
                ]
            };
            Ok(Outcome::ok(lines))
        }
        Command::Enum { .. } => unreachable!("handled by run_enum"),
    }
}

fn run_ideal(check: IdealCheck) -> Result<Outcome> {
    let (code, line) = match check {
        IdealCheck::Closure { predicate, bounds } => {
            let pred = NamedPredicate::parse(&predicate)?;
            let c = check_ideal_closure(&|l| pred.holds(l), bounds.max_size, bounds.max_items)?;
            (if c.report.ok { EXIT_OK } else { EXIT_VIOLATION }, to_json(&c))
        }
        IdealCheck::Quasi { a, b, bounds } => {
            let ext = bounds.max_size as usize;
            let a = SequenceSpec::parse(&a, ext)?;
            let b = SequenceSpec::parse(&b, ext)?;
            let c = check_quasi_ideal(&a, &b, bounds.max_size, bounds.max_items)?;
            (if c.report.ok { EXIT_OK } else { EXIT_VIOLATION }, to_json(&c))
        }
        IdealCheck::Equiv { first, second, bounds } => {
            let p1 = NamedPredicate::parse(&first)?;
            let p2 = NamedPredicate::parse(&second)?;
            let e = ideal_equivalent_upto(
                &|l| p1.holds(l),
                &|l| p2.holds(l),
                bounds.max_size,
                bounds.max_items,
            )?;
            (if e.equivalent { EXIT_OK } else { EXIT_VIOLATION }, to_json(&e))
        }
        IdealCheck::Invariance { a, b, a_perm, b_alt, bounds } => {
            let ext = bounds.max_size as usize;
            let a = SequenceSpec::parse(&a, ext)?;
            let b = SequenceSpec::parse(&b, ext)?;
            let a_perm = a_perm.map(|s| SequenceSpec::parse(&s, ext)).transpose()?;
            let b_alt = b_alt.map(|s| SequenceSpec::parse(&s, ext)).transpose()?;
            let r = count_invariance_suite(
                &a,
                &b,
                a_perm.as_ref(),
                b_alt.as_ref(),
                bounds.max_size,
                bounds.max_items,
            )?;
            (if r.ok { EXIT_OK } else { EXIT_VIOLATION }, to_json(&r))
        }
    };
    Ok(Outcome { code, lines: vec![line] })
}

struct SeriesInputs {
    f: WeightSpec,
    a: SequenceSpec,
    b: SequenceSpec,
}

fn series_inputs(params: &SeriesParams) -> Result<SeriesInputs> {
    let ext = params.qtrunc.max(params.xtrunc);
    Ok(SeriesInputs {
        f: parse_weight(&params.f, params.qtrunc)?,
        a: SequenceSpec::parse(&params.a, ext)?,
        b: SequenceSpec::parse(&params.b, ext)?,
    })
}

fn build_side(side: SeriesSide, p: &SeriesParams, inp: &SeriesInputs) -> Result<BivariateSeries> {
    match side {
        SeriesSide::Product => qseries::product_side(&inp.f, p.qtrunc),
        SeriesSide::PartitionSum => qseries::partition_sum_side(&inp.f, p.qtrunc, p.max_items),
        SeriesSide::SeqcongSum => qseries::seqcong_sum_side(&inp.f, p.qtrunc, p.max_items),
        SeriesSide::TwoVar => qseries::two_var_product_side(&inp.a, &inp.b, p.xtrunc, p.qtrunc),
        SeriesSide::PbaSum => qseries::pba_sum_side(&inp.a, &inp.b, p.xtrunc, p.qtrunc, p.max_items),
        SeriesSide::Euler => qseries::euler_limit_side(&inp.a.with_extent(p.xtrunc), p.xtrunc),
        SeriesSide::DistinctProduct => Ok(qseries::distinct_product_side(p.qtrunc)),
        SeriesSide::StepBoundedSum => qseries::step_bounded_sum_side(p.qtrunc, p.max_items),
    }
}

fn run_series(action: SeriesAction) -> Result<Outcome> {
    match action {
        SeriesAction::Verify { identity, params } => {
            let inp = series_inputs(&params)?;
            let pairs: Vec<(SeriesSide, SeriesSide)> = match identity {
                Identity::Eq24 => vec![(SeriesSide::Product, SeriesSide::PartitionSum)],
                Identity::Thm22 => vec![
                    (SeriesSide::Product, SeriesSide::SeqcongSum),
                    (SeriesSide::PartitionSum, SeriesSide::SeqcongSum),
                ],
                Identity::Thm45 => vec![(SeriesSide::TwoVar, SeriesSide::PbaSum)],
                Identity::DistinctRemark => {
                    vec![(SeriesSide::DistinctProduct, SeriesSide::StepBoundedSum)]
                }
                Identity::Thm45Count => {
                    let a = inp.a.with_extent(params.xtrunc);
                    let euler = qseries::euler_limit_side(&a, params.xtrunc)?;
                    let terms = a.terms();
                    for n in 0..=params.xtrunc {
                        let p_a = count_parts_in(&terms, n as u64)?;
                        let c = euler.coeff(n, 0);
                        if c != BigRational::from_integer(BigInt::from(p_a)) {
                            return Ok(Outcome {
                                code: EXIT_VIOLATION,
                                lines: vec![format!(
                                    "FAIL thm45-count: coefficient of x^{n} is {c}, enumerated p_A({n}) = {p_a}"
                                )],
                            });
                        }
                    }
                    return Ok(Outcome::ok(vec![format!("PASS thm45-count xtrunc={}", params.xtrunc)]));
                }
            };
            let name = identity.to_possible_value().expect("value").get_name().to_string();
            for (l, r) in pairs {
                let lhs = build_side(l, &params, &inp)?;
                let rhs = build_side(r, &params, &inp)?;
                let cmp = qseries::compare(&lhs, &rhs)?;
                if let Some(m) = cmp.first_mismatch {
                    return Ok(Outcome {
                        code: EXIT_VIOLATION,
                        lines: vec![format!(
                            "FAIL {name}: coefficient of x^{} q^{}: lhs={} rhs={}",
                            m.xexp, m.qexp, m.lhs, m.rhs
                        )],
                    });
                }
            }
            Ok(Outcome::ok(vec![format!(
                "PASS {name} xtrunc={} qtrunc={}",
                params.xtrunc, params.qtrunc
            )]))
        }
        SeriesAction::Expand { side, params, json } => {
            let inp = series_inputs(&params)?;
            let s = build_side(side, &params, &inp)?;
            let lines = if json {
                let coeffs: Vec<_> =
                    s.terms().map(|((a, b), c)| json!([a, b, c.to_string()])).collect();
                vec![to_json(&json!({
                    "xtrunc": s.xtrunc(),
                    "qtrunc": s.qtrunc(),
                    "coeffs": coeffs,
                }))]
            } else {
                s.to_string().lines().map(str::to_string).collect()
            };
            Ok(Outcome::ok(lines))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn parse_partition_forms() {
        assert_eq!(parse_partition("[5,3,3]").unwrap(), p(&[5, 3, 3]));
        assert_eq!(parse_partition(" [3,1,2] ").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_partition("1^3 2 3^2 4 5").unwrap(), p(&[5, 4, 3, 3, 2, 1, 1, 1]));
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        match parse_partition("[3,1,2,-1]") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("{other:?}"),
        }
        match parse_partition("1^3 x^2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_partition("[1,2").is_err());
        assert!(parse_partition("0^2").is_err());
    }

    #[test]
    fn family_descriptors() {
        assert_eq!(parse_family("seqcong:4").unwrap(), FamilyDescriptor::SeqCong { largest: 4 });
        assert_eq!(
            parse_family("pba:A=2,3;B=5,7;n=6").unwrap(),
            FamilyDescriptor::Pba {
                a: SequenceSpec::table(vec![2, 3]).unwrap(),
                b: SequenceSpec::table(vec![5, 7]).unwrap(),
                length: 6
            }
        );
        assert_eq!(
            parse_family("parts:T=1,3;n=5").unwrap(),
            FamilyDescriptor::PartsIn { parts: vec![1, 3], n: 5 }
        );
        assert!(parse_family("bogus:3").is_err());
        assert!(parse_family("all").is_err());
    }

    #[test]
    fn named_predicates() {
        let pba = NamedPredicate::parse("pba:A=2,3;B=5,7").unwrap();
        assert!(pba.holds(&p(&[7, 7, 7, 7, 7, 7, 5, 5])));
        assert!(!pba.holds(&p(&[6])));
        let nat = NamedPredicate::parse("pba:A=nat;B=nat").unwrap();
        assert!(nat.holds(&p(&[3, 3, 3, 2, 2, 1])));
        assert!(!nat.holds(&p(&[3, 1, 1])));
        let sna = NamedPredicate::parse("sna:A=nat").unwrap();
        assert!(sna.holds(&p(&[20, 17, 15, 9, 5])));
        assert!(NamedPredicate::parse("pba:A=2,x;B=1").is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("table:2,3,1/2", 0).unwrap().eval(3).unwrap(), parse_rational("1/2").unwrap());
        assert_eq!(parse_weight("random-seeded:7", 5).unwrap().extent(), 5);
        assert!(parse_weight("nope", 3).is_err());
    }
}
