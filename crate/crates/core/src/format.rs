//! Text formats: instance files, truth-table files, monotone DNF and
//! hypergraphs.
//!
//! Instance file: an optional `domain d` header (default 2), then one vector
//! per line as a digit string. Truth-table file: for each operation a header
//! `op <name> <d> <arity>` followed by `d^arity` lines `<input> <output>`.
//! DNF file: an optional `vars N` header, then one clause per line as
//! 1-based variable indices separated by spaces or commas. Hypergraph file:
//! the same with a `vertices N` header and one hyperedge per line.
//!
//! In all of them, `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::generate::Hypergraph;
use crate::op::Operation;
use crate::vector::{Family, Vector, MAX_DOMAIN};

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Attaches the line number to errors raised while building a value.
fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { msg, .. } => parse_err(line, msg),
        other => parse_err(line, other.to_string()),
    })
}

fn parse_domain(line: usize, token: Option<&str>) -> Result<u8> {
    let d: u8 = token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line, "expected `domain <d>`"))?;
    if !(2..=MAX_DOMAIN).contains(&d) {
        return Err(parse_err(line, format!("domain {d} is outside 2..={MAX_DOMAIN}")));
    }
    Ok(d)
}

pub fn parse_instance(text: &str) -> Result<Family> {
    let mut domain = 2;
    let mut vectors: Vec<(usize, Vector)> = Vec::new();
    for (no, line) in content_lines(text) {
        let mut tokens = line.split_whitespace();
        if line.starts_with("domain") {
            if !vectors.is_empty() {
                return Err(parse_err(no, "the domain header must precede all vectors"));
            }
            tokens.next();
            domain = parse_domain(no, tokens.next())?;
            if tokens.next().is_some() {
                return Err(parse_err(no, "trailing text after the domain header"));
            }
            continue;
        }
        if line.contains(char::is_whitespace) {
            return Err(parse_err(no, "a vector line must be a single digit string"));
        }
        let v = at_line(no, Vector::parse(line, domain))?;
        if let Some((first_no, first)) = vectors.first() {
            if first.len() != v.len() {
                return Err(parse_err(
                    no,
                    format!("vector has length {}, line {first_no} has length {}", v.len(), first.len()),
                ));
            }
        }
        vectors.push((no, v));
    }
    let Some((_, first)) = vectors.first() else {
        return Err(parse_err(0, "instance contains no vectors"));
    };
    let len = first.len();
    Family::new(len, domain, vectors.into_iter().map(|(_, v)| v))
}

/// Canonical instance text; [`parse_instance`] inverts it.
pub fn render_instance(s: &Family) -> String {
    let mut out = format!("domain {}\n", s.domain());
    for v in s {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn parse_truth_tables(text: &str) -> Result<Vec<Operation>> {
    struct Pending {
        line: usize,
        name: String,
        domain: u8,
        arity: usize,
        table: Vec<Option<u8>>,
        filled: usize,
    }

    fn finish(p: Pending) -> Result<Operation> {
        if p.filled != p.table.len() {
            return Err(parse_err(
                p.line,
                format!("operation `{}` has {} of {} table rows", p.name, p.filled, p.table.len()),
            ));
        }
        let table = p.table.into_iter().map(|x| x.unwrap_or(0)).collect();
        at_line(p.line, Operation::from_table(p.name, p.domain, p.arity, table))
    }

    let mut ops = Vec::new();
    let mut current: Option<Pending> = None;
    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "op" {
            if let Some(p) = current.take() {
                ops.push(finish(p)?);
            }
            let [_, name, d, arity] = tokens[..] else {
                return Err(parse_err(no, "expected `op <name> <d> <arity>`"));
            };
            let domain = parse_domain(no, Some(d))?;
            let arity: usize = arity
                .parse()
                .ok()
                .filter(|&a| a >= 1)
                .ok_or_else(|| parse_err(no, format!("bad arity `{arity}`")))?;
            let size = (domain as usize)
                .checked_pow(arity as u32)
                .filter(|&s| s <= 1 << 24)
                .ok_or_else(|| parse_err(no, "truth table too large"))?;
            current = Some(Pending {
                line: no,
                name: name.to_string(),
                domain,
                arity,
                table: vec![None; size],
                filled: 0,
            });
            continue;
        }
        let Some(p) = current.as_mut() else {
            return Err(parse_err(no, "table row before any `op` header"));
        };
        let [input, output] = tokens[..] else {
            return Err(parse_err(no, "expected `<input> <output>`"));
        };
        let args = at_line(no, Vector::parse(input, p.domain))?;
        if args.len() != p.arity {
            return Err(parse_err(
                no,
                format!("input `{input}` has {} digits, arity is {}", args.len(), p.arity),
            ));
        }
        let value = at_line(no, Vector::parse(output, p.domain))?;
        if value.len() != 1 {
            return Err(parse_err(no, "output must be a single digit"));
        }
        let code = args
            .digits()
            .iter()
            .fold(0usize, |acc, &x| acc * p.domain as usize + x as usize);
        if p.table[code].replace(value.get(0)).is_some() {
            return Err(parse_err(no, format!("input `{input}` listed twice")));
        }
        p.filled += 1;
    }
    if let Some(p) = current {
        ops.push(finish(p)?);
    }
    Ok(ops)
}

/// Text accepted by [`parse_truth_tables`].
pub fn render_truth_tables(ops: &[Operation]) -> String {
    let mut out = String::new();
    for op in ops {
        let _ = writeln!(out, "op {} {} {}", op.name(), op.domain(), op.arity());
        for (args, value) in op.entries() {
            let input: String = args.iter().map(|&x| char::from(b'0' + x)).collect();
            let _ = writeln!(out, "{input} {value}");
        }
    }
    out
}

/// A monotone DNF: a disjunction of conjunctions of positive variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneDnf {
    pub vars: usize,
    /// Clauses as sorted, duplicate-free 0-based variable indices.
    pub clauses: Vec<Vec<usize>>,
}

impl MonotoneDnf {
    pub fn new(vars: usize, clauses: Vec<Vec<usize>>) -> Result<Self> {
        if vars == 0 {
            return Err(Error::InvalidSpec("a formula needs at least one variable".into()));
        }
        let mut normal = Vec::with_capacity(clauses.len());
        for mut c in clauses {
            c.sort_unstable();
            c.dedup();
            if let Some(&x) = c.iter().find(|&&x| x >= vars) {
                return Err(Error::IndexOutOfRange { index: x, len: vars });
            }
            normal.push(c);
        }
        Ok(MonotoneDnf { vars, clauses: normal })
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().any(|c| c.iter().all(|&x| assignment[x]))
    }

    /// Number of satisfying assignments, by truth table.
    pub fn count_models(&self) -> u64 {
        assert!(self.vars < 64, "truth table too large");
        let mut assignment = vec![false; self.vars];
        (0..1u64 << self.vars)
            .filter(|code| {
                for (i, a) in assignment.iter_mut().enumerate() {
                    *a = code >> (self.vars - 1 - i) & 1 == 1;
                }
                self.eval(&assignment)
            })
            .count() as u64
    }

    /// Family whose union closure is exactly the set of models: each clause
    /// `C` contributes its characteristic vector and `C ∪ {x}` for every
    /// variable `x` outside it.
    pub fn to_union_family(&self) -> Family {
        let mut members = Vec::new();
        for c in &self.clauses {
            let mut digits = vec![0u8; self.vars];
            for &x in c {
                digits[x] = 1;
            }
            members.push(Vector::from_digits_unchecked(digits.clone(), 2));
            for x in 0..self.vars {
                if digits[x] == 0 {
                    let mut extended = digits.clone();
                    extended[x] = 1;
                    members.push(Vector::from_digits_unchecked(extended, 2));
                }
            }
        }
        Family::new(self.vars, 2, members).expect("vectors are well formed")
    }
}

/// Lines of 1-based indices with an optional `<header> N` size line.
/// Returns the size (the header, or the largest index) and 0-based sets.
fn parse_index_sets(text: &str, header: &str, what: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut size: Option<usize> = None;
    let mut sets = Vec::new();
    let mut max_index = 0;
    for (no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix(header) {
            if !sets.is_empty() || size.is_some() {
                return Err(parse_err(no, format!("the `{header}` header must come first, once")));
            }
            let n = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(no, format!("expected `{header} <N>`")))?;
            size = Some(n);
            continue;
        }
        let mut set = Vec::new();
        for token in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            if token.starts_with(['-', '!', '~']) {
                return Err(parse_err(no, format!("negative literal `{token}` in a monotone formula")));
            }
            let x: usize = token
                .strip_prefix('x')
                .unwrap_or(token)
                .parse()
                .map_err(|_| parse_err(no, format!("bad {what} `{token}`")))?;
            if x == 0 {
                return Err(parse_err(no, format!("{what}s are numbered from 1")));
            }
            max_index = max_index.max(x);
            set.push(x - 1);
        }
        sets.push(set);
    }
    let size = match size {
        Some(n) if n < max_index => {
            return Err(parse_err(0, format!("{what} {max_index} exceeds `{header} {n}`")));
        }
        Some(n) => n,
        None => max_index,
    };
    Ok((size, sets))
}

pub fn parse_dnf(text: &str) -> Result<MonotoneDnf> {
    let (vars, clauses) = parse_index_sets(text, "vars", "variable")?;
    if clauses.is_empty() {
        return Err(parse_err(0, "formula has no clauses"));
    }
    MonotoneDnf::new(vars, clauses)
}

/// Hypergraph file: optional `vertices N` header, then one hyperedge per
/// line as 1-based vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let (vertices, edges) = parse_index_sets(text, "vertices", "vertex")?;
    Hypergraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;

    #[test]
    fn instances() {
        let s = parse_instance("domain 2\n1101\n0110\n").unwrap();
        assert_eq!((s.len(), s.domain(), s.size()), (4, 2, 2));
        let s = parse_instance("101\n101\n").unwrap();
        assert_eq!(s.size(), 1);
        let s = parse_instance("# header\ndomain 3\n\n12  # trailing\n21\n").unwrap();
        assert_eq!((s.len(), s.domain(), s.size()), (2, 3, 2));
        assert!(parse_instance("101\n10\n").is_err());
        assert!(parse_instance("12\n").is_err());
        assert!(parse_instance("domain 11\n1\n").is_err());
        assert!(parse_instance("domain 1\n0\n").is_err());
        assert!(parse_instance("# nothing\n").is_err());
        assert!(parse_instance("10\ndomain 3\n").is_err());
        let s = parse_instance("domain 4\n0123\n3210\n").unwrap();
        assert_eq!(parse_instance(&render_instance(&s)).unwrap(), s);
    }

    #[test]
    fn instance_errors_report_lines() {
        match parse_instance("101\n\n1x1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn truth_tables() {
        let ops = [builtin::and(), builtin::capped_sum(), builtin::not()];
        let text = render_truth_tables(&ops);
        assert_eq!(parse_truth_tables(&text).unwrap(), ops);
        assert!(parse_truth_tables("").unwrap().is_empty());
        assert!(parse_truth_tables("op f 2 2\n00 0\n01 0\n10 0\n").is_err());
        assert!(parse_truth_tables("op f 2 1\n0 0\n0 1\n").is_err());
        assert!(parse_truth_tables("op f 2 1\n0 0\n1 2\n").is_err());
        assert!(parse_truth_tables("0 1\n").is_err());
    }

    #[test]
    fn dnf_conversion() {
        let f = parse_dnf("vars 3\n1 2\n").unwrap();
        let s = f.to_union_family();
        assert_eq!(s, Family::parse_members(2, &["110", "111"]).unwrap());
        assert_eq!(f.count_models(), 2);
        let f = parse_dnf("vars 2\n1\n").unwrap();
        assert_eq!(f.to_union_family(), Family::parse_members(2, &["10", "11"]).unwrap());
        let f = parse_dnf("1,2,3\n").unwrap();
        assert_eq!(f.to_union_family(), Family::parse_members(2, &["111"]).unwrap());
        assert!(parse_dnf("1 -2\n").is_err());
        assert!(parse_dnf("vars 2\n3\n").is_err());
        assert!(parse_dnf("vars 3\n").is_err());
        let h = parse_hypergraph("vertices 4\n1 2\n2,3\n").unwrap();
        assert_eq!(h.vertices(), 4);
        assert_eq!(h.edges(), [vec![0, 1], vec![1, 2]]);
    }
}
