use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Zeta,
    ZetaStar,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Zeta => "zeta",
            Variant::ZetaStar => "zeta_star",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(Variant::Zeta),
            "zeta_star" => Ok(Variant::ZetaStar),
            _ => Err(Error::Table(format!("unknown variant {s:?}"))),
        }
    }
}

/// Coefficients `d ↦ #{irreps of dimension d}` for `d ≤ bound`.
///
/// `group` is a canonical label: a [`GroupSpec`](super::GroupSpec) string for
/// Lie groups, or another stable identifier for tables built elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub group: String,
    pub variant: Variant,
    pub bound: u64,
    pub counts: BTreeMap<BigUint, u64>,
}

impl DegreeTable {
    pub fn new(group: impl Into<String>, variant: Variant, bound: u64) -> Self {
        DegreeTable {
            group: group.into(),
            variant,
            bound,
            counts: BTreeMap::new(),
        }
    }

    pub fn count(&self, d: u64) -> u64 {
        self.counts.get(&BigUint::from(d)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The same table restricted to `d ≤ bound`; `None` if `bound` exceeds
    /// the bound this table was computed to.
    pub fn truncated(&self, bound: u64) -> Option<DegreeTable> {
        if bound > self.bound {
            return None;
        }
        let limit = BigUint::from(bound);
        Some(DegreeTable {
            group: self.group.clone(),
            variant: self.variant,
            bound,
            counts: self
                .counts
                .iter()
                .filter(|(d, _)| **d <= limit)
                .map(|(d, c)| (d.clone(), *c))
                .collect(),
        })
    }

    /// Same bound and same nonzero coefficients; labels are ignored.
    pub fn same_coefficients(&self, other: &DegreeTable) -> bool {
        self.bound == other.bound && self.counts == other.counts
    }

    pub fn write_to(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(
            w,
            "# weylzeta v1 group={} variant={} maxdim={}",
            self.group, self.variant, self.bound
        )?;
        for (d, c) in &self.counts {
            writeln!(w, "{d}\t{c}")?;
        }
        Ok(())
    }

    pub fn to_tsv(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("ascii")
    }

    pub fn read_from(r: impl BufRead) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Table("empty file".into()))?
            .map_err(|e| Error::Table(e.to_string()))?;
        let rest = header
            .strip_prefix("# weylzeta v1 ")
            .ok_or_else(|| Error::Table(format!("bad header {header:?}")))?;
        let (mut group, mut variant, mut bound) = (None, None, None);
        for field in rest.split_whitespace() {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| Error::Table(format!("bad header field {field:?}")))?;
            match k {
                "group" => group = Some(v.to_string()),
                "variant" => variant = Some(v.parse()?),
                "maxdim" => {
                    bound = Some(
                        v.parse::<u64>()
                            .map_err(|_| Error::Table(format!("bad maxdim {v:?}")))?,
                    )
                }
                _ => return Err(Error::Table(format!("unknown header field {k:?}"))),
            }
        }
        let mut t = DegreeTable::new(
            group.ok_or_else(|| Error::Table("missing group".into()))?,
            variant.ok_or_else(|| Error::Table("missing variant".into()))?,
            bound.ok_or_else(|| Error::Table("missing maxdim".into()))?,
        );
        let mut last: Option<BigUint> = None;
        for line in lines {
            let line = line.map_err(|e| Error::Table(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Table(format!("bad entry {line:?}"));
            let (d, c) = line.split_once('\t').ok_or_else(bad)?;
            let d: BigUint = d.parse().map_err(|_| bad())?;
            let c: u64 = c.parse().map_err(|_| bad())?;
            if c == 0 || d > BigUint::from(t.bound) || last.as_ref().is_some_and(|l| *l >= d) {
                return Err(bad());
            }
            last = Some(d.clone());
            t.counts.insert(d, c);
        }
        Ok(t)
    }
}

impl FromStr for DegreeTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DegreeTable::read_from(s.as_bytes())
    }
}
