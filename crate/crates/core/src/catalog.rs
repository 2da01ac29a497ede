//! Plain-text catalog of threefold invariants.
//!
//! Records are `key = value` lines separated by blank lines; `#` starts a
//! comment. Required keys: `name alpha beta a b`. Optional: `e h3 pic_is_z
//! linear_p2_bundle quadric p3 provenance` (booleans default to `false`,
//! `pic_is_z` to `true` when `e` is given; `provenance` is free text saying
//! where the numbers come from).
//!
//! ```text
//! name = quintic
//! alpha = 1
//! beta = 1
//! a = 1
//! b = 1
//! e = 0
//! h3 = 5
//! provenance = quintic hypersurface in P^4
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::bounds::{derive_subcanonical_invariants, BoundError, ThreefoldInvariants};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record starting at line {line}: {source}")]
    Invalid { line: usize, source: BoundError },
    #[error("duplicate entry name {0:?}")]
    DuplicateName(String),
    #[error("no entry named {0:?}")]
    UnknownName(String),
    #[error("provenance of {0:?} must be a single line without '#'")]
    BadProvenance(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

const KEYS: [&str; 12] = [
    "name", "alpha", "beta", "a", "b", "e", "h3", "pic_is_z", "linear_p2_bundle", "quadric", "p3",
    "provenance",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRecord {
    pub invariants: ThreefoldInvariants,
    pub provenance: String,
}

impl CatalogRecord {
    pub fn new(invariants: ThreefoldInvariants, provenance: impl Into<String>) -> Self {
        Self {
            invariants,
            provenance: provenance.into(),
        }
    }

    pub fn name(&self) -> &str {
        &self.invariants.name
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Catalog {
    records: Vec<CatalogRecord>,
}

impl Catalog {
    pub fn new(records: Vec<CatalogRecord>) -> Result<Self, CatalogError> {
        let mut seen = HashSet::new();
        for record in &records {
            let entry = &record.invariants;
            if !seen.insert(entry.name.clone()) {
                return Err(CatalogError::DuplicateName(entry.name.clone()));
            }
            let p = &record.provenance;
            if p.contains(['#', '\n', '\r']) || p.trim() != p {
                return Err(CatalogError::BadProvenance(entry.name.clone()));
            }
            entry
                .validate()
                .map_err(|source| CatalogError::Invalid { line: 0, source })?;
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[CatalogRecord] {
        &self.records
    }

    pub fn entries(&self) -> impl Iterator<Item = &ThreefoldInvariants> + '_ {
        self.records.iter().map(|r| &r.invariants)
    }

    pub fn get(&self, name: &str) -> Result<&ThreefoldInvariants, CatalogError> {
        self.records
            .iter()
            .map(|r| &r.invariants)
            .find(|e| e.name == name)
            .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, record) in self.records.iter().enumerate() {
            let e = &record.invariants;
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "name = {}", e.name);
            let _ = writeln!(out, "alpha = {}", e.alpha);
            let _ = writeln!(out, "beta = {}", e.beta);
            let _ = writeln!(out, "a = {}", e.a_adj);
            let _ = writeln!(out, "b = {}", e.b_adj);
            if let Some(v) = e.subcanonical_e {
                let _ = writeln!(out, "e = {v}");
            }
            if let Some(v) = e.h3 {
                let _ = writeln!(out, "h3 = {v}");
            }
            let _ = writeln!(out, "pic_is_z = {}", e.pic_is_z);
            for (key, flag) in [
                ("linear_p2_bundle", e.is_linear_p2_bundle),
                ("quadric", e.is_quadric),
                ("p3", e.is_p3),
            ] {
                if flag {
                    let _ = writeln!(out, "{key} = true");
                }
            }
            if !record.provenance.is_empty() {
                let _ = writeln!(out, "provenance = {}", record.provenance);
            }
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), CatalogError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text()).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text)
}

#[derive(Default)]
struct Pending {
    start: usize,
    fields: Vec<(String, String, usize)>,
}

pub fn parse_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let mut records = Vec::new();
    let mut current = Pending::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            // Comment-only lines do not end a record.
            if raw.trim().is_empty() && !current.fields.is_empty() {
                records.push(std::mem::take(&mut current));
            }
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(CatalogError::Syntax {
                line,
                message: format!("expected `key = value`, got {content:?}"),
            });
        };
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(CatalogError::Syntax {
                line,
                message: format!("unknown key {key:?}"),
            });
        }
        if current.fields.iter().any(|(k, _, _)| k == key) {
            return Err(CatalogError::Syntax {
                line,
                message: format!("duplicate key {key:?}"),
            });
        }
        if current.fields.is_empty() {
            current.start = line;
        }
        current.fields.push((key.to_string(), value.to_string(), line));
    }
    if !current.fields.is_empty() {
        records.push(current);
    }

    let mut out = Vec::with_capacity(records.len());
    let mut seen = HashSet::new();
    for record in records {
        let entry = build_entry(&record)?;
        if !seen.insert(entry.name.clone()) {
            return Err(CatalogError::DuplicateName(entry.name));
        }
        let provenance = record
            .fields
            .iter()
            .find(|(k, _, _)| k == "provenance")
            .map_or(String::new(), |f| f.1.clone());
        out.push(CatalogRecord::new(entry, provenance));
    }
    Ok(Catalog { records: out })
}

fn build_entry(record: &Pending) -> Result<ThreefoldInvariants, CatalogError> {
    let lookup = |key: &str| record.fields.iter().find(|(k, _, _)| k == key);
    let required = |key: &str| {
        lookup(key).ok_or_else(|| CatalogError::Syntax {
            line: record.start,
            message: format!("record is missing required key {key:?}"),
        })
    };
    let int = |key: &str| -> Result<Option<i64>, CatalogError> {
        lookup(key)
            .map(|(_, v, line)| {
                v.parse::<i64>().map_err(|_| CatalogError::Syntax {
                    line: *line,
                    message: format!("{key} must be an integer, got {v:?}"),
                })
            })
            .transpose()
    };
    let flag = |key: &str| -> Result<Option<bool>, CatalogError> {
        lookup(key)
            .map(|(_, v, line)| {
                v.parse::<bool>().map_err(|_| CatalogError::Syntax {
                    line: *line,
                    message: format!("{key} must be true or false, got {v:?}"),
                })
            })
            .transpose()
    };

    let name = required("name")?.1.clone();
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(CatalogError::Syntax {
            line: required("name")?.2,
            message: format!("name {name:?} must be a non-empty word"),
        });
    }
    let mut core = [0i64; 4];
    for (slot, key) in core.iter_mut().zip(["alpha", "beta", "a", "b"]) {
        *slot = match int(key)? {
            Some(v) => v,
            None => required(key).map(|_| 0)?,
        };
    }
    let [alpha, beta, a_adj, b_adj] = core;
    let e = int("e")?;
    let h3 = match int("h3")? {
        Some(v) if v < 0 => {
            return Err(CatalogError::Syntax {
                line: lookup("h3").map_or(record.start, |f| f.2),
                message: "h3 must be positive".into(),
            })
        }
        v => v.map(|v| v as u64),
    };
    let entry = ThreefoldInvariants {
        name,
        alpha,
        beta,
        a_adj,
        b_adj,
        subcanonical_e: e,
        h3,
        pic_is_z: flag("pic_is_z")?.unwrap_or(e.is_some()),
        is_linear_p2_bundle: flag("linear_p2_bundle")?.unwrap_or(false),
        is_quadric: flag("quadric")?.unwrap_or(false),
        is_p3: flag("p3")?.unwrap_or(false),
    };
    let invalid = |reason: String| CatalogError::Invalid {
        line: record.start,
        source: BoundError::Invalid {
            name: entry.name.clone(),
            reason,
        },
    };
    entry.validate().map_err(|source| CatalogError::Invalid {
        line: record.start,
        source,
    })?;
    if let (Some(e), true) = (e, entry.pic_is_z) {
        let derived = derive_subcanonical_invariants(e);
        let given = (entry.alpha, entry.beta, entry.a_adj, entry.b_adj);
        if derived != given {
            return Err(invalid(format!(
                "e = {e} gives (alpha, beta, a, b) = {derived:?}, record has {given:?}"
            )));
        }
    }
    Ok(entry)
}

/// The built-in catalog: the quadric, hypersurfaces of degree 3 to 6 in
/// `P^4`, and a linear P^2-bundle template.
pub fn default_catalog() -> Catalog {
    let hypersurface = |name: &str, degree: i64| {
        let inv = ThreefoldInvariants::subcanonical(name, degree - 5, Some(degree as u64));
        let note = format!(
            "degree {degree} hypersurface in P^4; K = {}H by adjunction, H^3 = {degree}",
            degree - 5
        );
        CatalogRecord::new(inv, note)
    };
    let mut quadric = hypersurface("quadric", 2);
    quadric.invariants.is_quadric = true;
    let records = vec![
        quadric,
        hypersurface("cubic", 3),
        hypersurface("quartic", 4),
        hypersurface("quintic", 5),
        hypersurface("sextic", 6),
        CatalogRecord::new(
            ThreefoldInvariants {
                name: "p2-bundle".into(),
                alpha: 4,
                beta: 2,
                a_adj: 4,
                b_adj: 2,
                subcanonical_e: None,
                h3: None,
                pic_is_z: false,
                is_linear_p2_bundle: true,
                is_quadric: false,
                is_p3: false,
            },
            "template: alpha = a = 4 for linear P^2-bundles; beta = b = 2 is a placeholder to fill in",
        ),
    ];
    Catalog::new(records).expect("built-in catalog is valid")
}
