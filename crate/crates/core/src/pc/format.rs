//! The presentation file: a JSON object with keys `chain`, `n`, `p` and an
//! optional `subgroups` section, written with sorted keys in a fixed layout.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::pc::{EssentialChain, ExponentVector, PrimeModulus};

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPrime {
    Int(u64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    chain: Vec<Vec<u64>>,
    n: usize,
    p: RawPrime,
    #[serde(default)]
    subgroups: BTreeMap<String, Vec<Vec<u64>>>,
}

/// A parsed presentation file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub chain: EssentialChain,
    /// Named subgroup dumps, each a list of exponent vectors.
    pub subgroups: BTreeMap<String, Vec<ExponentVector>>,
}

impl PresentationFile {
    pub fn new(chain: EssentialChain) -> Self {
        PresentationFile {
            chain,
            subgroups: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let msg = msg.strip_suffix(&suffix).unwrap_or(&msg);
            Error::Parse(format!("line {}, column {}: {msg}", e.line(), e.column()))
        })?;
        let p = match raw.p {
            RawPrime::Int(p) => {
                PrimeModulus::new(p).map_err(|e| Error::Parse(format!("field `p`: {e}")))?
            }
            RawPrime::Text(s) => {
                return Err(Error::Parse(format!(
                    "field `p`: {s:?} is not supported; only finite primes are accepted"
                )))
            }
        };
        let mut vectors = Vec::with_capacity(raw.chain.len());
        for (idx, v) in raw.chain.iter().enumerate() {
            let mut row = Vec::with_capacity(v.len());
            for (k, &e) in v.iter().enumerate() {
                if e >= p.get() as u64 {
                    return Err(Error::Parse(format!(
                        "field `chain[{idx}][{k}]`: {e} is not reduced mod {p}"
                    )));
                }
                row.push(e as u16);
            }
            vectors.push(row);
        }
        let chain = EssentialChain::new(p, raw.n, &vectors)
            .map_err(|e| Error::Parse(format!("field `chain`: {e}")))?;
        let mut subgroups = BTreeMap::new();
        for (name, elems) in raw.subgroups {
            let mut out = Vec::with_capacity(elems.len());
            for (idx, e) in elems.iter().enumerate() {
                if e.len() != raw.n {
                    return Err(Error::Parse(format!(
                        "field `subgroups.{name}[{idx}]`: expected {} exponents, found {}",
                        raw.n,
                        e.len()
                    )));
                }
                let exps: Vec<u16> = e.iter().map(|&x| x.min(u16::MAX as u64) as u16).collect();
                let v = ExponentVector::from_slice(p, &exps)
                    .map_err(|err| Error::Parse(format!("field `subgroups.{name}[{idx}]`: {err}")))?;
                out.push(v);
            }
            subgroups.insert(name, out);
        }
        Ok(PresentationFile { chain, subgroups })
    }

    /// Canonical text: sorted keys, one key per line, arrays inline.
    pub fn to_text(&self) -> String {
        let mut s = String::from("{\n");
        let chain = self.chain.to_vectors();
        s.push_str("  \"chain\": ");
        write_nested(&mut s, chain.iter().map(|v| v.as_slice()));
        s.push_str(",\n");
        let _ = write!(s, "  \"n\": {},\n", self.chain.n());
        let _ = write!(s, "  \"p\": {}", self.chain.p());
        if !self.subgroups.is_empty() {
            s.push_str(",\n  \"subgroups\": {\n");
            let last = self.subgroups.len() - 1;
            for (idx, (name, elems)) in self.subgroups.iter().enumerate() {
                let _ = write!(s, "    {}: ", serde_json::to_string(name).unwrap());
                write_nested(&mut s, elems.iter().map(|v| v.as_slice()));
                s.push_str(if idx == last { "\n" } else { ",\n" });
            }
            s.push_str("  }");
        }
        s.push_str("\n}\n");
        s
    }
}

fn write_nested<'a>(s: &mut String, rows: impl Iterator<Item = &'a [u16]>) {
    s.push('[');
    for (i, row) in rows.enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push('[');
        for (k, e) in row.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{e}");
        }
        s.push(']');
    }
    s.push(']');
}
