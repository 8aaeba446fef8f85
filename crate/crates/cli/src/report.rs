//! Line-oriented run reports.
//!
//! ```text
//! command=solve-ocm c3.txt
//! n=3
//! edges=3
//! begin matching 3
//! 0 1
//! 1 2
//! 2 0
//! end
//! ```
//!
//! Scalar fields are `key=value` lines in insertion order. Blocks start with
//! `begin <name> <line count>` and close with `end`; their lines are kept
//! verbatim. Keys and block names contain no whitespace or `=`.

use std::fmt;

use ocm_core::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Field(String, String),
    Block(String, Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("report line {line}: {msg}")]
pub struct ReportParseError {
    pub line: usize,
    pub msg: String,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        let mut r = RunReport::default();
        r.field("command", command.into());
        r
    }

    pub fn field(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        debug_assert!(!key.is_empty() && !key.contains(['=', ' ', '\n']));
        let value = value.to_string();
        debug_assert!(!value.contains('\n'));
        self.entries.push(Entry::Field(key.to_owned(), value));
        self
    }

    pub fn block(&mut self, name: &str, lines: Vec<String>) -> &mut Self {
        debug_assert!(lines.iter().all(|l| !l.contains('\n')));
        self.entries.push(Entry::Block(name.to_owned(), lines));
        self
    }

    pub fn arcs(&mut self, name: &str, arcs: &[Arc]) -> &mut Self {
        self.block(name, arcs.iter().map(|(u, v)| format!("{u} {v}")).collect())
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// First value recorded under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find_map(|e| match e {
            Entry::Field(k, v) if k == key => Some(v.as_str()),
            _ => None,
        })
    }

    pub fn get_block(&self, name: &str) -> Option<&[String]> {
        self.entries.iter().find_map(|e| match e {
            Entry::Block(k, lines) if k == name => Some(lines.as_slice()),
            _ => None,
        })
    }

    pub fn parse(text: &str) -> Result<Self, ReportParseError> {
        let err = |line: usize, msg: &str| ReportParseError { line, msg: msg.to_owned() };
        let mut entries = Vec::new();
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        while let Some((no, line)) = lines.next() {
            if let Some(rest) = line.strip_prefix("begin ") {
                let (name, count) = rest.split_once(' ').ok_or_else(|| err(no, "malformed block header"))?;
                let count: usize = count.parse().map_err(|_| err(no, "malformed block length"))?;
                let mut body = Vec::with_capacity(count);
                for _ in 0..count {
                    let (_, l) = lines.next().ok_or_else(|| err(no, "block ends early"))?;
                    body.push(l.to_owned());
                }
                match lines.next() {
                    Some((_, "end")) => {}
                    Some((n, _)) => return Err(err(n, "expected `end`")),
                    None => return Err(err(no, "missing `end`")),
                }
                entries.push(Entry::Block(name.to_owned(), body));
            } else {
                let (k, v) = line.split_once('=').ok_or_else(|| err(no, "expected key=value"))?;
                entries.push(Entry::Field(k.to_owned(), v.to_owned()));
            }
        }
        Ok(RunReport { entries })
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match e {
                Entry::Field(k, v) => writeln!(f, "{k}={v}")?,
                Entry::Block(name, lines) => {
                    writeln!(f, "begin {name} {}", lines.len())?;
                    for l in lines {
                        writeln!(f, "{l}")?;
                    }
                    writeln!(f, "end")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = RunReport::new("solve-ocm a b");
        r.field("n", 3).arcs("matching", &[(0, 1), (2, 0)]).block("empty", vec![]).field("status", "pass");
        let text = r.to_string();
        assert!(text.starts_with("command=solve-ocm a b\nn=3\nbegin matching 2\n0 1\n2 0\nend\n"));
        let back = RunReport::parse(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.get("status"), Some("pass"));
        assert_eq!(back.get_block("matching").unwrap().len(), 2);
    }

    #[test]
    fn block_lines_may_look_like_fields() {
        let mut r = RunReport::new("verify");
        r.block("counterexamples", vec!["end=1".into(), "begin x 3".into()]);
        assert_eq!(RunReport::parse(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn rejects_truncated_block() {
        assert!(RunReport::parse("begin m 2\n0 1\n").is_err());
        assert!(RunReport::parse("begin m 1\n0 1\nfin\n").is_err());
        assert!(RunReport::parse("novalue\n").is_err());
    }
}
