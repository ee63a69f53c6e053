//! The `.poset` text format.
//!
//! ```text
//! # the diamond
//! n 4
//! name 3 top
//! 0 < 1
//! 0 < 2
//! 1 < 3
//! 2 < 3
//! ```
//!
//! `n <size>` comes first. Each `<i> < <j>` line adds `i < j`; the order is
//! the transitive closure of these pairs, so non-cover pairs are accepted.
//! `name <i> <label>` attaches an optional label. `#` starts a comment.
//! [`write_poset`] emits exactly the cover pairs in sorted order, so parsing
//! its output and writing again gives the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use dcpo_core::{Error as CoreError, FinitePoset};

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetFile {
    pub poset: FinitePoset,
    pub names: BTreeMap<usize, String>,
}

impl PosetFile {
    pub fn new(poset: FinitePoset) -> Self {
        PosetFile {
            poset,
            names: BTreeMap::new(),
        }
    }

    pub fn label(&self, x: usize) -> String {
        self.names.get(&x).cloned().unwrap_or_else(|| x.to_string())
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected an element index, found `{token}`")))
}

pub fn parse_poset(text: &str) -> Result<PosetFile, ParseError> {
    let mut size = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    let mut names = BTreeMap::new();
    let mut last_line = 0;

    for (offset, raw) in text.lines().enumerate() {
        let line = offset + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if size.is_some() {
                    return Err(ParseError::new(line, "duplicate `n` line"));
                }
                size = Some(parse_index(count, line)?);
            }
            _ if size.is_none() => {
                return Err(ParseError::new(line, "expected `n <size>` before any other line"));
            }
            ["name", index, label @ ..] if !label.is_empty() => {
                let n = size.unwrap_or(0);
                let index = parse_index(index, line)?;
                if index >= n {
                    return Err(ParseError::new(line, format!("element {index} out of range for size {n}")));
                }
                if names.insert(index, label.join(" ")).is_some() {
                    return Err(ParseError::new(line, format!("element {index} named twice")));
                }
            }
            [a, "<", b] => {
                let n = size.unwrap_or(0);
                let (a, b) = (parse_index(a, line)?, parse_index(b, line)?);
                for index in [a, b] {
                    if index >= n {
                        return Err(ParseError::new(line, format!("element {index} out of range for size {n}")));
                    }
                }
                if a == b {
                    return Err(ParseError::new(line, format!("`{a} < {a}` is not strict")));
                }
                pairs.push((a, b, line));
            }
            _ => {
                return Err(ParseError::new(line, format!("unrecognized line `{content}`")));
            }
        }
    }

    let size = size.ok_or_else(|| ParseError::new(last_line.max(1), "missing `n <size>` line"))?;
    let covers: Vec<(usize, usize)> = pairs.iter().map(|&(a, b, _)| (a, b)).collect();
    match FinitePoset::build(size, &covers) {
        Ok(poset) => Ok(PosetFile { poset, names }),
        Err(CoreError::Cycle(a, b)) => {
            // Blame the first line whose pair closes a cycle.
            let line = (1..=covers.len())
                .find(|&k| FinitePoset::build(size, &covers[..k]).is_err())
                .map_or(last_line, |k| pairs[k - 1].2);
            Err(ParseError::new(line, format!("pairs form a cycle through {a} and {b}")))
        }
        Err(e) => Err(ParseError::new(last_line, e.to_string())),
    }
}

pub fn write_poset(file: &PosetFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", file.poset.size());
    for (index, label) in &file.names {
        let _ = writeln!(out, "name {index} {label}");
    }
    for (a, b) in file.poset.covers() {
        let _ = writeln!(out, "{a} < {b}");
    }
    out
}
