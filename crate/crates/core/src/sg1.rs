// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `SG1` line format.
//!
//! A graph is written as `SG1 <n> <triangle>`, where `<triangle>` lists the
//! upper triangle of the adjacency matrix row by row (pairs `(0,1), (0,2),
//! ..., (0,n-1), (1,2), ...`), one character per entry: `0`, `+` or `-`.
//! For `n <= 1` the triangle is empty and the line is `SG1 <n>`.

use thiserror::Error;

use crate::graph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sg1Error {
    #[error("line does not start with the SG1 tag: {0:?}")]
    MissingTag(String),
    #[error("invalid vertex count {0:?}")]
    BadOrder(String),
    #[error("triangle has length {got}, expected {expected} for n = {n}")]
    WrongLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("illegal character {ch:?} at triangle position {pos}")]
    IllegalChar { ch: char, pos: usize },
    #[error("unexpected trailing token {0:?}")]
    Trailing(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Sg1Error>,
    },
}

impl SignedGraph {
    pub fn to_sg1(&self) -> String {
        let n = self.order();
        let mut out = format!("SG1 {n}");
        if n >= 2 {
            out.push(' ');
            for i in 0..n {
                for j in i + 1..n {
                    out.push(match self.entry(i, j) {
                        1 => '+',
                        -1 => '-',
                        _ => '0',
                    });
                }
            }
        }
        out
    }

    pub fn from_sg1(line: &str) -> Result<SignedGraph, Sg1Error> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("SG1") {
            return Err(Sg1Error::MissingTag(line.to_string()));
        }
        let order_token = tokens.next().unwrap_or("");
        let n: usize = order_token
            .parse()
            .map_err(|_| Sg1Error::BadOrder(order_token.to_string()))?;
        let triangle = tokens.next().unwrap_or("");
        if let Some(extra) = tokens.next() {
            return Err(Sg1Error::Trailing(extra.to_string()));
        }
        let expected = n * n.saturating_sub(1) / 2;
        let got = triangle.chars().count();
        if got != expected {
            return Err(Sg1Error::WrongLength { n, expected, got });
        }
        let mut g = SignedGraph::empty(n);
        let mut chars = triangle.chars();
        let mut pos = 0;
        for i in 0..n {
            for j in i + 1..n {
                let ch = chars.next().unwrap_or('0');
                let value = match ch {
                    '0' => 0,
                    '+' => 1,
                    '-' => -1,
                    _ => return Err(Sg1Error::IllegalChar { ch, pos }),
                };
                g.set(i, j, value);
                pos += 1;
            }
        }
        Ok(g)
    }
}

/// Parses every non-blank line that is not a `#` comment.
pub fn parse_lines(text: &str) -> Result<Vec<SignedGraph>, Sg1Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(k, l)| {
            SignedGraph::from_sg1(l).map_err(|e| Sg1Error::AtLine {
                line: k + 1,
                source: Box::new(e),
            })
        })
        .collect()
}
