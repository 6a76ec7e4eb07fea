//! Published class counts shipped with the crate, one CSV per prime.

use crate::enumerate::EnumerationReport;
use crate::error::{Error, Result};

const P3: &str = include_str!("../golden/counts_p3.csv");
const P5: &str = include_str!("../golden/counts_p5.csv");
const P7: &str = include_str!("../golden/counts_p7.csv");

/// One row: `n` and the counts of class 1, 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: usize,
    pub counts: (u64, u64, u64),
}

/// Parses `n,class1,class2,class3` text with a header line.
pub fn parse(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("golden line {}: {line:?}", lineno + 1));
        let f: Vec<u64> = line
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [n, a, b, c] = f[..] else {
            return Err(bad());
        };
        rows.push(GoldenRow {
            n: n as usize,
            counts: (a, b, c),
        });
    }
    Ok(rows)
}

/// The shipped table for `p`, if any.
pub fn table(p: u32) -> Option<Vec<GoldenRow>> {
    let text = match p {
        3 => P3,
        5 => P5,
        7 => P7,
        _ => return None,
    };
    Some(parse(text).expect("shipped golden files parse"))
}

/// Rows of `report` that disagree with `golden`, as messages. Rows absent
/// from either side are skipped.
pub fn compare(report: &EnumerationReport, golden: &[GoldenRow]) -> Vec<String> {
    let mut out = Vec::new();
    for row in &report.rows {
        if let Some(g) = golden.iter().find(|g| g.n == row.n) {
            if row.counts() != g.counts || row.class4plus != 0 {
                out.push(format!(
                    "n = {}: counted {:?} (+{} of class >= 4), expected {:?}",
                    row.n,
                    row.counts(),
                    row.class4plus,
                    g.counts
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables() {
        assert_eq!(table(3).unwrap().len(), 9);
        assert_eq!(table(5).unwrap()[4].counts, (1, 724, 2400));
        assert_eq!(table(7).unwrap()[3].counts, (1, 342, 0));
        assert!(table(11).is_none());
        assert!(parse("h\n1,2\n").is_err());
    }
}
