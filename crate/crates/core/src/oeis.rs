//! OEIS b-file reading and writing, and comparison of integer sequences.
//!
//! A b-file is ASCII text with one `index SP value LF` pair per line.
//! Lines starting with `#` and blank lines are ignored; indices must be
//! nonnegative and strictly increasing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::numeric::Integer;

/// Map from sequence index to value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SequenceTable(BTreeMap<u64, Integer>);

impl SequenceTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, index: u64, value: Integer) -> Option<Integer> {
        self.0.insert(index, value)
    }

    pub fn get(&self, index: u64) -> Option<&Integer> {
        self.0.get(&index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Integer)> + '_ {
        self.0.iter().map(|(&i, v)| (i, v))
    }

    pub fn values(&self) -> impl Iterator<Item = &Integer> + '_ {
        self.0.values()
    }

    pub fn first_index(&self) -> Option<u64> {
        self.0.keys().next().copied()
    }

    pub fn last_index(&self) -> Option<u64> {
        self.0.keys().next_back().copied()
    }
}

impl FromIterator<(u64, Integer)> for SequenceTable {
    fn from_iter<I: IntoIterator<Item = (u64, Integer)>>(iter: I) -> Self {
        SequenceTable(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    /// Comment lines, without the leading `#`.
    pub comments: Vec<String>,
    pub entries: Vec<(u64, Integer)>,
}

impl BFile {
    pub fn to_table(&self) -> SequenceTable {
        self.entries.iter().cloned().collect()
    }
}

impl From<BFile> for SequenceTable {
    fn from(b: BFile) -> Self {
        b.entries.into_iter().collect()
    }
}

fn parse_index(token: &str, line: usize) -> Result<u64> {
    if token.starts_with('-') {
        return Err(Error::Parse {
            line,
            msg: format!("negative index {token:?}"),
        });
    }
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("index {token:?} is not a nonnegative integer"),
    })
}

fn parse_value(token: &str, line: usize) -> Result<Integer> {
    // from_str_radix accepts a leading '+', which b-files never use
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            msg: format!("value {token:?} is not an integer"),
        });
    }
    Integer::from_str_radix(token, 10).map_err(|e| Error::Parse {
        line,
        msg: format!("value {token:?}: {e}"),
    })
}

pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut out = BFile::default();
    let mut previous: Option<u64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            out.comments.push(comment.to_string());
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected \"index value\", found {} tokens", tokens.len()),
            });
        }
        let index = parse_index(tokens[0], line)?;
        let value = parse_value(tokens[1], line)?;
        if let Some(prev) = previous {
            if index <= prev {
                return Err(Error::NonIncreasingIndex {
                    line,
                    index,
                    previous: prev,
                });
            }
        }
        previous = Some(index);
        out.entries.push((index, value));
    }
    Ok(out)
}

pub fn write_bfile(table: &SequenceTable) -> String {
    let mut out = String::new();
    for (i, v) in table.iter() {
        writeln!(out, "{i} {v}").expect("writing to a String cannot fail");
    }
    out
}

/// Tab-separated `n<TAB>value` with a header line.
pub fn write_tsv(table: &SequenceTable) -> String {
    let mut out = String::from("n\tvalue\n");
    for (i, v) in table.iter() {
        writeln!(out, "{i}\t{v}").expect("writing to a String cannot fail");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub expected: Integer,
    pub actual: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    /// Number of indices present in both tables.
    pub compared: usize,
    /// Smallest and largest shared index.
    pub range: Option<(u64, u64)>,
    pub mismatches: Vec<Mismatch>,
}

impl DiffReport {
    /// True when there was nothing to compare.
    pub fn is_disjoint(&self) -> bool {
        self.compared == 0
    }

    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        match self.range {
            Some((lo, hi)) => {
                let _ = writeln!(out, "compared {} indices in [{lo}, {hi}]", self.compared);
            }
            None => {
                let _ = writeln!(out, "warning: the sequences share no indices");
            }
        }
        if !self.mismatches.is_empty() {
            let _ = writeln!(out, "{:>8}  {:>20}  {:>20}", "index", "expected", "actual");
            for m in &self.mismatches {
                let _ = writeln!(out, "{:>8}  {:>20}  {:>20}", m.index, m.expected, m.actual);
            }
        }
        let _ = writeln!(out, "mismatches: {}", self.mismatches.len());
        out
    }
}

/// Compares `expected` and `actual` on the indices they share.
pub fn compare_sequences(expected: &SequenceTable, actual: &SequenceTable) -> DiffReport {
    let mut report = DiffReport::default();
    for (i, e) in expected.iter() {
        let Some(a) = actual.get(i) else { continue };
        report.compared += 1;
        report.range = Some(match report.range {
            None => (i, i),
            Some((lo, _)) => (lo, i),
        });
        if e != a {
            report.mismatches.push(Mismatch {
                index: i,
                expected: e.clone(),
                actual: a.clone(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn table(pairs: &[(u64, i64)]) -> SequenceTable {
        pairs.iter().map(|&(i, v)| (i, int(v))).collect()
    }

    #[test]
    fn parse_examples() {
        let b = parse_bfile("0 1\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(b.to_table(), table(&[(0, 1), (1, 1), (2, 1), (3, 2)]));
        let b = parse_bfile("# comment\n\n5 2\n").unwrap();
        assert_eq!(b.entries, vec![(5, int(2))]);
        assert_eq!(b.comments, vec![" comment".to_string()]);
        assert!(matches!(
            parse_bfile("3 x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_bfile("0 1\n1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("-1 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("0 +1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1.5\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(
            parse_bfile("#\n2 1\n2 1\n"),
            Err(Error::NonIncreasingIndex {
                line: 3,
                index: 2,
                previous: 2
            })
        );
        assert!(matches!(
            parse_bfile("3 1\n1 1\n"),
            Err(Error::NonIncreasingIndex { line: 2, .. })
        ));
    }

    #[test]
    fn parse_big_and_negative_values() {
        let b = parse_bfile("0 -123456789012345678901234567890\r\n").unwrap();
        assert_eq!(
            b.entries[0].1.to_string(),
            "-123456789012345678901234567890"
        );
    }

    #[test]
    fn write_examples() {
        assert_eq!(write_bfile(&table(&[(0, 1), (1, 1)])), "0 1\n1 1\n");
        assert_eq!(write_bfile(&SequenceTable::new()), "");
        assert_eq!(write_tsv(&table(&[(3, 2)])), "n\tvalue\n3\t2\n");
    }

    #[test]
    fn compare_examples() {
        let a = table(&[(0, 1), (1, 1)]);
        assert!(compare_sequences(&a, &a).agrees());
        let r = compare_sequences(&table(&[(0, 1)]), &table(&[(0, 2)]));
        assert_eq!(
            r.mismatches,
            vec![Mismatch {
                index: 0,
                expected: int(1),
                actual: int(2)
            }]
        );
        let r = compare_sequences(&table(&[(0, 1)]), &table(&[(5, 1)]));
        assert!(r.is_disjoint() && r.agrees());
        assert!(r.render().contains("warning"));
        let r = compare_sequences(
            &table(&[(0, 1), (4, 3), (9, 9)]),
            &table(&[(4, 3), (9, 8), (10, 1)]),
        );
        assert_eq!(
            (r.compared, r.range, r.mismatches.len()),
            (2, Some((4, 9)), 1)
        );
    }
}
