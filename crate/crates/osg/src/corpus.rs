//! The `.osg` corpus text format.
//!
//! ```text
//! %osg 1
//! name CH2
//! size 2
//! mul
//! 0 0
//! 0 1
//! leq
//! 0 1
//! end
//! ```
//!
//! `leq` lists strict pairs `i j` (meaning `i < j`), which must already be
//! transitively closed. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use osg_core::{OrderedSemigroup, MAX_ORDER};

pub const MAGIC: &str = "%osg 1";

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("record `{name}` (line {line}): {source}")]
    Invalid {
        name: String,
        line: usize,
        #[source]
        source: osg_core::Error,
    },
}

impl CorpusError {
    pub fn line(&self) -> usize {
        match self {
            CorpusError::Format { line, .. } | CorpusError::Invalid { line, .. } => *line,
        }
    }
}

fn format_err(line: usize, message: impl Into<String>) -> CorpusError {
    CorpusError::Format {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next meaningful line, trimmed, with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let t = raw.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), CorpusError> {
        self.next().ok_or_else(|| {
            format_err(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }

    fn keyword(&mut self, kw: &str) -> Result<usize, CorpusError> {
        let (line, t) = self.expect(&format!("`{kw}`"))?;
        if t == kw {
            Ok(line)
        } else {
            Err(format_err(line, format!("expected `{kw}`, found `{t}`")))
        }
    }

    fn field(&mut self, kw: &str) -> Result<(usize, &'a str), CorpusError> {
        let (line, t) = self.expect(&format!("`{kw} ...`"))?;
        match t.split_once(char::is_whitespace) {
            Some((k, v)) if k == kw => Ok((line, v.trim())),
            _ => Err(format_err(
                line,
                format!("expected `{kw} <value>`, found `{t}`"),
            )),
        }
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn indices(line: usize, text: &str, n: usize) -> Result<Vec<usize>, CorpusError> {
    text.split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if v < n => Ok(v),
            Ok(v) => Err(format_err(
                line,
                format!("element {v} out of range for size {n}"),
            )),
            Err(_) => Err(format_err(line, format!("`{tok}` is not an element index"))),
        })
        .collect()
}

fn parse_record(lines: &mut Lines<'_>) -> Result<OrderedSemigroup, CorpusError> {
    let (name_line, name) = lines.field("name")?;
    if !valid_name(name) {
        return Err(format_err(
            name_line,
            format!("invalid structure name `{name}`"),
        ));
    }
    let in_record = |e: CorpusError| match e {
        CorpusError::Format { line, message } => {
            format_err(line, format!("record `{name}`: {message}"))
        }
        other => other,
    };

    let (size_line, size) = lines.field("size").map_err(in_record)?;
    let n: usize = size
        .parse()
        .ok()
        .filter(|n| (1..=MAX_ORDER).contains(n))
        .ok_or_else(|| {
            in_record(format_err(
                size_line,
                format!("size must be 1..={MAX_ORDER}, found `{size}`"),
            ))
        })?;

    lines.keyword("mul").map_err(in_record)?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, row) = lines.expect("a table row").map_err(in_record)?;
        let row = indices(line, row, n).map_err(in_record)?;
        if row.len() != n {
            return Err(in_record(format_err(
                line,
                format!("table row has {} entries, expected {n}", row.len()),
            )));
        }
        table.push(row);
    }

    lines.keyword("leq").map_err(in_record)?;
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    let mut pairs = Vec::new();
    loop {
        let (line, t) = lines.expect("an order pair or `end`").map_err(in_record)?;
        if t == "end" {
            break;
        }
        let pair = indices(line, t, n).map_err(in_record)?;
        let [i, j] = pair[..] else {
            return Err(in_record(format_err(
                line,
                format!("expected `i j`, found `{t}`"),
            )));
        };
        if i == j {
            return Err(in_record(format_err(
                line,
                format!("`{i} {i}` is not a strict pair; reflexivity is implied"),
            )));
        }
        if leq[i][j] {
            return Err(in_record(format_err(
                line,
                format!("duplicate pair `{i} {j}`"),
            )));
        }
        leq[i][j] = true;
        pairs.push((line, i, j));
    }
    for &(line, i, j) in &pairs {
        if let Some(k) = (0..n).find(|&k| k != i && leq[j][k] && !leq[i][k]) {
            return Err(in_record(format_err(
                line,
                format!(
                    "pairs are not transitively closed: `{i} {j}` and `{j} {k}` need `{i} {k}`"
                ),
            )));
        }
    }
    OrderedSemigroup::new(name, &table, &leq).map_err(|source| CorpusError::Invalid {
        name: name.into(),
        line: name_line,
        source,
    })
}

pub fn parse_corpus(text: &str) -> Result<Vec<OrderedSemigroup>, CorpusError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let mut out = Vec::new();
    while let Some((line, t)) = lines.next() {
        if t != MAGIC {
            return Err(format_err(line, format!("expected `{MAGIC}`, found `{t}`")));
        }
        out.push(parse_record(&mut lines)?);
    }
    Ok(out)
}

/// Canonical text for a corpus; `parse_corpus` inverts it exactly.
pub fn write_corpus(corpus: &[OrderedSemigroup]) -> String {
    let mut out = String::new();
    for (i, s) in corpus.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let n = s.size();
        let _ = writeln!(out, "{MAGIC}\nname {}\nsize {n}\nmul", s.name());
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| s.mul(a, b).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out.push_str("leq\n");
        for (a, b) in s.strict_pairs() {
            let _ = writeln!(out, "{a} {b}");
        }
        out.push_str("end\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use osg_core::{zoo, OrderAxiom};

    const CH2: &str = "%osg 1\nname CH2\nsize 2\nmul\n0 0\n0 1\nleq\n0 1\nend\n";

    #[test]
    fn parses_the_reference_record() {
        let c = parse_corpus(CH2).unwrap();
        assert_eq!(c, vec![zoo::ch2()]);
        assert_eq!(write_corpus(&c), CH2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# corpus\n\n{}", CH2.replace("mul\n", "mul\n  # rows\n"));
        assert_eq!(parse_corpus(&text).unwrap().len(), 1);
    }

    #[test]
    fn short_row_is_a_format_error() {
        let text = CH2.replace("0 1\nleq", "0\nleq");
        let err = parse_corpus(&text).unwrap_err();
        assert!(matches!(err, CorpusError::Format { line: 6, .. }), "{err}");
        assert!(err.to_string().contains("CH2"));
    }

    #[test]
    fn reversed_pair_breaks_antisymmetry() {
        let text = CH2.replace("0 1\nend", "0 1\n1 0\nend");
        match parse_corpus(&text).unwrap_err() {
            CorpusError::Invalid { name, source, .. } => {
                assert_eq!(name, "CH2");
                assert!(matches!(
                    source,
                    osg_core::Error::NotPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        ..
                    }
                ));
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn order_pairs_must_be_closed_and_strict() {
        let mut ch3 = write_corpus(&[zoo::ch3()]);
        assert!(ch3.contains("0 2\n"));
        assert_eq!(parse_corpus(&ch3).unwrap(), vec![zoo::ch3()]);
        ch3 = ch3.replace("0 2\n", "");
        assert!(parse_corpus(&ch3)
            .unwrap_err()
            .to_string()
            .contains("transitively"));
        let refl = CH2.replace("0 1\nend", "1 1\nend");
        assert!(matches!(
            parse_corpus(&refl),
            Err(CorpusError::Format { line: 8, .. })
        ));
    }

    #[test]
    fn discrete_orders_have_empty_leq() {
        let text = write_corpus(&[zoo::lz2(), zoo::ch2(), zoo::g2()]);
        assert!(text.contains("leq\nend\n"));
        let back = parse_corpus(&text).unwrap();
        let names: Vec<&str> = back.iter().map(|s| s.name()).collect();
        assert_eq!(names, ["LZ2", "CH2", "G2"]);
    }

    #[test]
    fn truncated_and_foreign_input() {
        assert!(parse_corpus("").unwrap().is_empty());
        assert!(matches!(
            parse_corpus("%osg 2\n"),
            Err(CorpusError::Format { line: 1, .. })
        ));
        assert!(matches!(
            parse_corpus("%osg 1\nname X\nsize 1\nmul\n"),
            Err(CorpusError::Format { line: 5, .. })
        ));
        assert!(parse_corpus("%osg 1\nname X\nsize 13\n").is_err());
    }
}
