//! Approval-ballot files: each ballot is the subset of the `n` candidates a
//! voter approves, written as a bitstring.
//!
//! Two encodings are accepted. The line format has one bitstring per line,
//! with blank lines and `#` comments ignored. The JSON format is
//! `{"n": 3, "candidates": ["a", "b", "c"], "ballots": ["110", ...]}` with
//! `candidates` optional.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cube::{Vertex, MAX_DIMENSION};
use crate::profile::Profile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line in the line format, 1-based ballot index in JSON.
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: Option<usize>, message: impl Into<String>) -> Self {
        Self {
            line: Some(line),
            column,
            message: message.into(),
        }
    }

    fn general(message: impl Into<String>) -> Self {
        Self {
            line: None,
            column: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// A validated ballot list with optional candidate names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotFile {
    candidates: Option<Vec<String>>,
    profile: Profile,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonBallots {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    candidates: Option<Vec<String>>,
    ballots: Vec<String>,
}

fn parse_bitstring(s: &str, line: usize, expected: Option<usize>) -> Result<Vertex, ParseError> {
    if let Some((pos, c)) = s.chars().enumerate().find(|(_, c)| *c != '0' && *c != '1') {
        return Err(ParseError::at(
            line,
            Some(pos + 1),
            format!("illegal character {c:?}, expected '0' or '1'"),
        ));
    }
    let len = s.len();
    if let Some(n) = expected {
        if len != n {
            return Err(ParseError::at(
                line,
                None,
                format!("ragged length: ballot has {len} coordinates, expected {n}"),
            ));
        }
    }
    if len > MAX_DIMENSION {
        return Err(ParseError::at(
            line,
            None,
            format!("{len} coordinates exceed the maximum {MAX_DIMENSION}"),
        ));
    }
    s.parse()
        .map_err(|e: crate::Error| ParseError::at(line, None, e.to_string()))
}

impl BallotFile {
    pub fn new(profile: Profile, candidates: Option<Vec<String>>) -> Result<Self, ParseError> {
        if let Some(names) = &candidates {
            if names.len() != profile.dimension() {
                return Err(ParseError::general(format!(
                    "{} candidate names for {} coordinates",
                    names.len(),
                    profile.dimension()
                )));
            }
            let mut seen = HashSet::new();
            for (i, name) in names.iter().enumerate() {
                if !seen.insert(name) {
                    return Err(ParseError::general(format!(
                        "duplicate candidate name {name:?} at position {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(Self {
            candidates,
            profile,
        })
    }

    /// Parses either encoding; input whose first non-space character is `{` is JSON.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        if input.trim_start().starts_with('{') {
            Self::parse_json(input)
        } else {
            Self::parse_lines(input)
        }
    }

    pub fn parse_lines(input: &str) -> Result<Self, ParseError> {
        let mut ballots = Vec::new();
        let mut n = None;
        for (idx, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let x = parse_bitstring(line, idx + 1, n)?;
            n.get_or_insert(x.dimension());
            ballots.push(x);
        }
        if ballots.is_empty() {
            return Err(ParseError::general("no ballots found"));
        }
        let profile = Profile::new(ballots).map_err(|e| ParseError::general(e.to_string()))?;
        Self::new(profile, None)
    }

    pub fn parse_json(input: &str) -> Result<Self, ParseError> {
        let raw: JsonBallots = serde_json::from_str(input).map_err(|e| ParseError {
            line: Some(e.line()),
            column: Some(e.column()),
            message: format!("malformed JSON: {e}"),
        })?;
        if raw.ballots.is_empty() {
            return Err(ParseError::general("no ballots found"));
        }
        if raw.n == 0 || raw.n > MAX_DIMENSION {
            return Err(ParseError::general(format!(
                "n = {} is outside 1..={MAX_DIMENSION}",
                raw.n
            )));
        }
        let ballots = raw
            .ballots
            .iter()
            .enumerate()
            .map(|(i, s)| parse_bitstring(s, i + 1, Some(raw.n)))
            .collect::<Result<Vec<_>, _>>()?;
        let profile = Profile::new(ballots).map_err(|e| ParseError::general(e.to_string()))?;
        Self::new(profile, raw.candidates)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn into_profile(self) -> Profile {
        self.profile
    }

    pub fn candidates(&self) -> Option<&[String]> {
        self.candidates.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.profile.dimension()
    }

    /// Names of the approved candidates of `x`, when names are known.
    pub fn committee(&self, x: &Vertex) -> Option<Vec<String>> {
        let names = self.candidates.as_ref()?;
        Some(x.ones_iter().map(|j| names[j - 1].clone()).collect())
    }

    /// Line format; candidate names are not representable and are dropped.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for x in self.profile.entries() {
            out.push_str(&x.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = JsonBallots {
            n: self.dimension(),
            candidates: self.candidates.clone(),
            ballots: self
                .profile
                .entries()
                .iter()
                .map(|x| x.to_string())
                .collect(),
        };
        serde_json::to_string(&raw).expect("ballot JSON serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_line_format() {
        let b = BallotFile::parse("110\n101\n011\n").unwrap();
        assert_eq!((b.dimension(), b.profile().len()), (3, 3));
        let b = BallotFile::parse("# header\n\n  110 \n# mid\n001\n").unwrap();
        assert_eq!(b.profile().len(), 2);
    }

    #[test]
    fn ragged_length_reports_line() {
        let e = BallotFile::parse("10\n1\n").unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("ragged"), "{e}");
    }

    #[test]
    fn illegal_character_reports_position() {
        let e = BallotFile::parse("101\n1x1\n").unwrap_err();
        assert_eq!((e.line, e.column), (Some(2), Some(2)));
        assert_eq!(
            e.to_string(),
            "line 2, column 2: illegal character 'x', expected '0' or '1'"
        );
    }

    #[test]
    fn zero_ballots() {
        assert!(BallotFile::parse("# nothing\n\n").is_err());
        assert!(BallotFile::parse(r#"{"n":2,"ballots":[]}"#).is_err());
    }

    #[test]
    fn parses_json_with_names() {
        let b =
            BallotFile::parse(r#"{"n":2, "candidates":["a","b"], "ballots":["10","01"]}"#).unwrap();
        assert_eq!(b.candidates().unwrap(), ["a", "b"]);
        assert_eq!(b.committee(&"11".parse().unwrap()).unwrap(), ["a", "b"]);
    }

    #[test]
    fn json_validation() {
        let dup = r#"{"n":2, "candidates":["a","a"], "ballots":["10"]}"#;
        assert!(BallotFile::parse(dup)
            .unwrap_err()
            .message
            .contains("duplicate"));
        let short = r#"{"n":2, "candidates":["a"], "ballots":["10"]}"#;
        assert!(BallotFile::parse(short).is_err());
        let ragged = r#"{"n":2, "ballots":["10","101"]}"#;
        assert_eq!(BallotFile::parse(ragged).unwrap_err().line, Some(2));
        assert!(BallotFile::parse(r#"{"n":2, "ballots":["10"], "x":1}"#).is_err());
        assert!(BallotFile::parse("{").is_err());
    }

    #[test]
    fn serializes_both_formats() {
        let src = r#"{"n":3,"candidates":["ann","bo","cy"],"ballots":["110","001"]}"#;
        let b = BallotFile::parse(src).unwrap();
        assert_eq!(b.to_json(), src);
        assert_eq!(b.to_text(), "110\n001\n");
    }
}
