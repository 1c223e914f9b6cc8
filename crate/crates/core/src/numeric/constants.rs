//! Named, provenance-tagged constant sets and the `.cst` dataset format.
//!
//! One entry per line: `name decimal unit-expression provenance`. `#` starts
//! a comment. Decimal mantissas are kept verbatim so that writing a set back
//! out reproduces every value exactly.

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use serde::Serialize;

use super::dims::DimSig;
use super::prec::PrecReal;
use super::quantity::{parse_unit, Quantity};
use crate::error::{FtrError, Result};

pub const PAPER_ERA_DATASET: &str = include_str!("../../data/paper-era-1946.cst");
pub const MODERN_DATASET: &str = include_str!("../../data/modern.cst");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    #[serde(rename = "paper-era-1946")]
    PaperEra1946,
    Modern,
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::PaperEra1946 => "paper-era-1946",
            Provenance::Modern => "modern",
            Provenance::User => "user",
        })
    }
}

impl FromStr for Provenance {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "paper-era-1946" => Ok(Provenance::PaperEra1946),
            "modern" => Ok(Provenance::Modern),
            "user" => Ok(Provenance::User),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantEntry {
    pub name: String,
    pub decimal: String,
    pub unit: String,
    pub provenance: Provenance,
    pub value: Quantity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantSet {
    provenance: Provenance,
    digits: u32,
    entries: Vec<ConstantEntry>,
}

/// Dimensions every registered constant name must carry.
pub fn registry_dims(name: &str) -> Option<DimSig> {
    Some(match name {
        "c" => DimSig::velocity(),
        "h" | "hbar" => DimSig::action(),
        "G" => DimSig::mlt(-1, 3, -2),
        "e" => DimSig::esu(),
        "m_e" | "m_p" | "m_h" | "m_n" | "m_u" => DimSig::mass(),
        "k_B" => DimSig::energy() - DimSig::temperature(),
        "F_h" => DimSig::esu() - DimSig::mass() - DimSig::velocity(),
        "H_0" => DimSig::mlt(0, 0, -1),
        _ => return None,
    })
}

impl ConstantSet {
    pub fn empty(provenance: Provenance, digits: u32) -> Self {
        ConstantSet {
            provenance,
            digits,
            entries: Vec::new(),
        }
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn entries(&self) -> &[ConstantEntry] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.iter().any(|e| e.name == name)
    }

    pub fn paper_era(digits: u32) -> Self {
        load_constants(PAPER_ERA_DATASET.as_bytes(), digits).expect("bundled dataset")
    }

    pub fn modern(digits: u32) -> Self {
        load_constants(MODERN_DATASET.as_bytes(), digits).expect("bundled dataset")
    }

    /// Adds or replaces an entry given as text.
    pub fn insert(&mut self, name: &str, decimal: &str, unit: &str) -> Result<()> {
        let entry = make_entry(name, decimal, unit, Provenance::User, self.digits, 0)?;
        self.entries.retain(|e| e.name != name);
        self.entries.push(entry);
        self.provenance = Provenance::User;
        Ok(())
    }

    pub fn remove(&mut self, name: &str) {
        self.entries.retain(|e| e.name != name);
    }

    /// Looks up a constant. `hbar` falls back to h/2π and `F_h` to
    /// e/(m_h c) when not listed explicitly.
    pub fn get(&self, name: &str) -> Result<Quantity> {
        if let Some(e) = self.entries.iter().find(|e| e.name == name) {
            return Ok(e.value.clone().labeled(name));
        }
        match name {
            "hbar" if self.contains("h") => {
                let h = self.get("h")?;
                let two_pi = PrecReal::from_i64(2, self.digits) * PrecReal::pi(self.digits);
                Ok(Quantity::new(h.mag / two_pi, h.dims).labeled("hbar"))
            }
            "F_h" if self.contains("e") && self.contains("m_h") && self.contains("c") => {
                let f = self.get("e")?.div(&self.get("m_h")?.mul(&self.get("c")?));
                Ok(f.labeled("F_h"))
            }
            _ => Err(FtrError::MissingConstant(name.to_string())),
        }
    }

    /// First name in `names` that cannot be resolved.
    pub fn require(&self, names: &[&str]) -> Result<()> {
        for n in names {
            self.get(n)?;
        }
        Ok(())
    }

    /// Writes the set back out in dataset format.
    pub fn to_dataset(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{} {} {} {}\n",
                e.name, e.decimal, e.unit, e.provenance
            ));
        }
        out
    }
}

fn make_entry(
    name: &str,
    decimal: &str,
    unit: &str,
    provenance: Provenance,
    digits: u32,
    line: usize,
) -> Result<ConstantEntry> {
    let perr = |m: String| FtrError::Parse { line, message: m };
    let mag = PrecReal::parse_decimal(decimal, digits)
        .ok_or_else(|| perr(format!("bad decimal `{decimal}`")))?;
    let (scale, dims) = parse_unit(unit, digits).map_err(|e| match e {
        FtrError::Parse { message, .. } => perr(message),
        other => other,
    })?;
    if let Some(expected) = registry_dims(name) {
        if !expected.same_physical(&dims) {
            return Err(perr(format!(
                "`{name}` must carry {expected}, found {dims}"
            )));
        }
    }
    Ok(ConstantEntry {
        name: name.to_string(),
        decimal: decimal.to_string(),
        unit: unit.to_string(),
        provenance,
        value: Quantity::new(mag * scale, dims).labeled(name),
    })
}

/// Parses a constants dataset. The set's provenance is the common tag of
/// all entries, or `user` when they differ.
pub fn load_constants(mut source: impl Read, digits: u32) -> Result<ConstantSet> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(|e| FtrError::Io(e.to_string()))?;
    let mut entries: Vec<ConstantEntry> = Vec::new();
    let mut tag: Option<Provenance> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(FtrError::Parse {
                line: line_no,
                message: format!("expected `name decimal unit provenance`, got `{line}`"),
            });
        }
        let prov: Provenance = fields[3].parse().map_err(|_| FtrError::Parse {
            line: line_no,
            message: format!("unknown provenance `{}`", fields[3]),
        })?;
        if entries.iter().any(|e| e.name == fields[0]) {
            return Err(FtrError::DuplicateName(fields[0].to_string()));
        }
        entries.push(make_entry(
            fields[0], fields[1], fields[2], prov, digits, line_no,
        )?);
        tag = match tag {
            None => Some(prov),
            Some(t) if t == prov => Some(t),
            Some(_) => Some(Provenance::User),
        };
    }
    Ok(ConstantSet {
        provenance: tag.unwrap_or(Provenance::User),
        digits,
        entries,
    })
}
