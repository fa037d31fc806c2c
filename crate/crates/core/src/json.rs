//! JSON forms of matroids, Betti tables and weight hierarchies.
//!
//! Every document written by this crate carries `"schema": "1"`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphJson};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::weights::WeightHierarchy;

pub const SCHEMA_VERSION: &str = "1";

/// Matroid input document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatroidJson {
    Uniform { r: usize, n: usize },
    MultiUniform { profile: Vec<(usize, usize)> },
    Bases { n: usize, bases: Vec<Vec<usize>> },
    Graphic { graph: GraphJson },
}

impl MatroidJson {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidJson::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidJson::MultiUniform { profile } => Matroid::multi_uniform(profile),
            MatroidJson::Bases { n, bases } => {
                if *n > crate::subset::MAX_GROUND {
                    return Err(Error::GroundTooLarge(*n));
                }
                let mut sets = Vec::with_capacity(bases.len());
                for b in bases {
                    if let Some(&e) = b.iter().find(|&&e| e >= *n) {
                        return Err(Error::OutOfRange { subset: vec![e], n: *n });
                    }
                    sets.push(Subset::from_elements(b.iter().copied()));
                }
                Matroid::from_bases(*n, &sets)
            }
            MatroidJson::Graphic { graph } => Matroid::graphic(&Graph::from_json(graph)?),
        }
    }
}

/// Parses a matroid document. A bare graph document (`{"vertices":..,"edges":..}`) is
/// read as its cycle matroid.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("type").is_some() {
        serde_json::from_value::<MatroidJson>(value)?.build()
    } else {
        let g: GraphJson = serde_json::from_value(value)?;
        Matroid::graphic(&Graph::from_json(&g)?)
    }
}

/// Map key form of a subset: its sorted element list, e.g. `"[0,2,3]"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubsetKey(pub Subset);

impl Serialize for SubsetKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for SubsetKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct KeyVisitor;
        impl Visitor<'_> for KeyVisitor {
            type Value = SubsetKey;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a subset written as \"[a,b,..]\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<SubsetKey, E> {
                let inner = v
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(']'))
                    .ok_or_else(|| E::custom(format!("bad subset key {v:?}")))?;
                let mut s = Subset::EMPTY;
                for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let e: usize = part.parse().map_err(|_| E::custom(format!("bad element {part:?}")))?;
                    if e >= 64 {
                        return Err(E::custom(format!("element {e} out of range")));
                    }
                    s = s.insert(e);
                }
                Ok(SubsetKey(s))
            }
        }
        d.deserialize_str(KeyVisitor)
    }
}

/// Wire form of a [`BettiTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub schema: String,
    pub rank: usize,
    pub n: usize,
    pub global: Vec<u64>,
    pub coarse: BTreeMap<usize, BTreeMap<usize, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fine: Option<BTreeMap<usize, BTreeMap<SubsetKey, u64>>>,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            schema: SCHEMA_VERSION.into(),
            rank: t.rank,
            n: t.n,
            global: t.global.clone(),
            coarse: t.coarse.clone(),
            fine: t.fine.as_ref().map(|fine| {
                fine.iter()
                    .map(|(&i, row)| (i, row.iter().map(|(&s, &b)| (SubsetKey(s), b)).collect()))
                    .collect()
            }),
        }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;

    fn try_from(j: BettiJson) -> Result<Self> {
        if j.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {:?}", j.schema)));
        }
        if j.rank > j.n {
            return Err(Error::Parse(format!("rank {} exceeds n {}", j.rank, j.n)));
        }
        Ok(BettiTable {
            rank: j.rank,
            n: j.n,
            global: j.global,
            coarse: j.coarse,
            fine: j.fine.map(|fine| {
                fine.into_iter()
                    .map(|(i, row)| (i, row.into_iter().map(|(k, b)| (k.0, b)).collect()))
                    .collect()
            }),
        })
    }
}

pub fn betti_to_json(t: &BettiTable) -> String {
    serde_json::to_string(&BettiJson::from(t)).expect("Betti tables always serialize")
}

pub fn betti_from_json(text: &str) -> Result<BettiTable> {
    serde_json::from_str::<BettiJson>(text)?.try_into()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyJson {
    pub schema: String,
    pub d: Vec<usize>,
}

pub fn hierarchy_to_json(h: &WeightHierarchy) -> String {
    serde_json::to_string(&HierarchyJson { schema: SCHEMA_VERSION.into(), d: h.d.clone() })
        .expect("hierarchies always serialize")
}
