//! `--q` values: a single q, a comma list, or an inclusive range a..b.

use codegree::exactnum::PrimePower;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QList {
    pub values: Vec<u64>,
    /// From a range: values that are not prime powers were dropped rather
    /// than rejected.
    pub from_range: bool,
}

pub fn parse_q(spec: &str) -> Result<QList, String> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("bad q value '{}'", s.trim()));
    if let Some((a, b)) = spec.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty q range {a}..{b}"));
        }
        let values: Vec<u64> = (a..=b).filter(|&q| PrimePower::from_u64(q).is_ok()).collect();
        if values.is_empty() {
            return Err(format!("q range {a}..{b} contains no prime power"));
        }
        return Ok(QList { values, from_range: true });
    }
    let values = spec.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
    for &q in &values {
        PrimePower::from_u64(q).map_err(|_| format!("q = {q} is not a prime power"))?;
    }
    Ok(QList { values, from_range: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_q("3").unwrap().values, vec![3]);
        assert_eq!(parse_q("2, 4,8").unwrap().values, vec![2, 4, 8]);
        let r = parse_q("2..9").unwrap();
        assert_eq!(r.values, vec![2, 3, 4, 5, 7, 8, 9]);
        assert!(r.from_range);
        assert!(parse_q("6").is_err());
        assert!(parse_q("9..2").is_err());
        assert!(parse_q("24..24").is_err());
        assert!(parse_q("x").is_err());
    }
}
