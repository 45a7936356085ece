//! JSON-lines corpora of known coefficient values.
//!
//! One case per line: `{"signature":[p,q],"expr":"...","expect_C":["...", null, ...]}`.
//! A `null` entry leaves that coefficient unchecked.

use serde::{Deserialize, Serialize};

use cliffchar::{Rational, Signature};

use crate::CliError;

/// Known values bundled with the binary.
pub const BUILTIN: &str = include_str!("../data/known_cases.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCase {
    pub signature: [usize; 2],
    pub expr: String,
    #[serde(rename = "expect_C")]
    pub expect_c: Vec<Option<String>>,
}

impl CorpusCase {
    pub fn signature(&self) -> Result<Signature, CliError> {
        Signature::new(self.signature[0], self.signature[1]).map_err(CliError::from)
    }

    pub fn expected(&self) -> Result<Vec<Option<Rational>>, CliError> {
        self.expect_c
            .iter()
            .map(|c| {
                c.as_deref()
                    .map(str::parse)
                    .transpose()
                    .map_err(|e: cliffchar::Error| CliError::Usage(format!("bad expect_C entry: {e}")))
            })
            .collect()
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str(line)
                .map_err(|e| CliError::Usage(format!("corpus line {}: {e}", i + 1)))
        })
        .collect()
}
