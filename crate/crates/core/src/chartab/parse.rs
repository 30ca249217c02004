use super::perm::Perm;
use super::ChartabError;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

/// Generators as read from a group file: line `degree N`, then
/// `gen <cycles>` lines with 1-based points; `#` starts a comment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInput {
    pub degree: usize,
    pub gens: Vec<Perm>,
}

impl GroupInput {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        GroupInput { degree, gens }
    }

    pub fn parse(text: &str) -> Result<Self, ChartabError> {
        let mut degree = None;
        let mut gens = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| ChartabError::Parse(format!("line {}: {m}", ln + 1));
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() {
                    return Err(bad("repeated degree line"));
                }
                let n: usize = rest.trim().parse().map_err(|_| bad("bad degree"))?;
                if n == 0 {
                    return Err(bad("degree must be positive"));
                }
                degree = Some(n);
            } else if let Some(rest) = line.strip_prefix("gen") {
                let n = degree.ok_or_else(|| bad("gen before degree"))?;
                gens.push(parse_cycles(n, rest).map_err(|m| bad(&m))?);
            } else {
                return Err(bad("expected 'degree' or 'gen'"));
            }
        }
        let degree = degree.ok_or_else(|| ChartabError::Parse("missing degree line".into()))?;
        Ok(GroupInput { degree, gens })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.gens {
            let _ = writeln!(s, "gen {g}");
        }
        s
    }

    /// Hex SHA-256 of the normalized text form, so comments and spacing do
    /// not change the key.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_text().as_bytes());
        digest.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}

/// Parse cycle notation such as "(1 2 3)(4,5)" or "()" on `n` points.
pub fn parse_cycles(n: usize, text: &str) -> Result<Perm, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or("expected '('")?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let mut cyc = Vec::new();
        for tok in body[..close].split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let x: usize = tok.parse().map_err(|_| format!("bad point '{tok}'"))?;
            if x == 0 || x > n {
                return Err(format!("point {x} outside 1..{n}"));
            }
            cyc.push(x as u32 - 1);
        }
        if cyc.len() > 1 {
            cycles.push(cyc);
        }
        rest = body[close + 1..].trim_start();
    }
    Perm::from_cycles(n, &cycles).ok_or_else(|| "cycles are not disjoint".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_hash() {
        let a = GroupInput::parse("# A5\ndegree 5\ngen (1,2,3)\ngen (1 2 3 4 5)  # five-cycle\n").unwrap();
        assert_eq!(a.gens.len(), 2);
        let b = GroupInput::parse(&a.to_text()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.content_hash(), b.content_hash());
        assert_eq!(a.content_hash().len(), 64);
        let c = GroupInput::parse("degree 5\ngen (1,2,3)\n").unwrap();
        assert_ne!(a.content_hash(), c.content_hash());
        assert!(GroupInput::parse("degree 5\ngen ()\n").unwrap().gens[0].is_identity());
    }

    #[test]
    fn errors() {
        assert!(GroupInput::parse("gen (1 2)").is_err());
        assert!(GroupInput::parse("degree 3\ngen (1 4)").is_err());
        assert!(GroupInput::parse("degree 3\ngen (1 2)(2 3)").is_err());
        assert!(GroupInput::parse("degree 3\ngen (1 2").is_err());
        assert!(GroupInput::parse("degree x").is_err());
        assert!(GroupInput::parse("").is_err());
    }
}
