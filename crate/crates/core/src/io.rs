//! JSON input schemas for posets and set families.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::semilattice::{MeetSemilattice, SetFamily};

/// `{"elements": [...], "covers": [[lo, hi], ...]}`, or `leq` in place of
/// `covers` for any relation whose closure is the order.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct PosetFile {
    pub elements: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(Value, Value)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(Value, Value)>>,
}

/// `{"ground": [...], "sets": [[...], ...]}`
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct FamilyFile {
    pub ground: Vec<Value>,
    pub sets: Vec<Vec<Value>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Covers,
    Sets,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InputFile {
    Poset(PosetFile),
    Family(FamilyFile),
}

/// Element ids may be written as strings or numbers.
fn id_of(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Format(format!(
            "element id must be a string or number, got {other}"
        ))),
    }
}

fn ids_of(vs: &[Value]) -> Result<Vec<String>> {
    vs.iter().map(id_of).collect()
}

fn too_large(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

impl InputFile {
    /// Parse JSON text. Without a forced format the schema is picked by its keys.
    pub fn parse(text: &str, format: Option<Format>) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let format = match format {
            Some(f) => f,
            None => {
                let obj = value
                    .as_object()
                    .ok_or_else(|| Error::Format("top level must be an object".into()))?;
                if obj.contains_key("sets") {
                    Format::Sets
                } else if obj.contains_key("covers") || obj.contains_key("leq") {
                    Format::Covers
                } else {
                    return Err(Error::Format(
                        "expected a `covers`, `leq` or `sets` key".into(),
                    ));
                }
            }
        };
        Ok(match format {
            Format::Covers => InputFile::Poset(serde_json::from_value(value)?),
            Format::Sets => InputFile::Family(serde_json::from_value(value)?),
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            InputFile::Poset(p) => serde_json::to_value(p),
            InputFile::Family(f) => serde_json::to_value(f),
        }
        .expect("input schemas serialize")
    }

    pub fn poset(&self) -> Result<Poset> {
        match self {
            InputFile::Poset(p) => {
                let ids = ids_of(&p.elements)?;
                let mut pairs = Vec::new();
                for rel in [&p.covers, &p.leq].into_iter().flatten() {
                    for (lo, hi) in rel {
                        pairs.push((id_of(lo)?, id_of(hi)?));
                    }
                }
                Poset::from_covers(ids, &pairs)
            }
            InputFile::Family(_) => Err(Error::Format("expected a poset file".into())),
        }
    }

    pub fn family(&self) -> Result<SetFamily> {
        match self {
            InputFile::Family(f) => {
                let sets = f
                    .sets
                    .iter()
                    .map(|s| ids_of(s))
                    .collect::<Result<Vec<_>>>()?;
                SetFamily::from_ids(ids_of(&f.ground)?, &sets)
            }
            InputFile::Poset(_) => Err(Error::Format("expected a set family file".into())),
        }
    }

    /// Validate into a meet-semilattice, refusing inputs with more than
    /// `max_ground` elements (or ground points, for families).
    pub fn build(&self, max_ground: usize) -> Result<MeetSemilattice> {
        match self {
            InputFile::Poset(p) => {
                too_large("poset", p.elements.len(), max_ground)?;
                MeetSemilattice::validate(self.poset()?)
            }
            InputFile::Family(f) => {
                too_large("ground set", f.ground.len(), max_ground)?;
                too_large("set family", f.sets.len(), max_ground)?;
                MeetSemilattice::from_set_family(&self.family()?)
            }
        }
    }
}

/// Covers-file rendering of a poset.
pub fn poset_file(p: &Poset) -> PosetFile {
    PosetFile {
        elements: p.ids().iter().map(|s| Value::String(s.clone())).collect(),
        covers: Some(
            p.covers()
                .into_iter()
                .map(|(lo, hi)| {
                    (
                        Value::String(p.id(lo).into()),
                        Value::String(p.id(hi).into()),
                    )
                })
                .collect(),
        ),
        leq: None,
    }
}

/// Sets-file rendering of a family.
pub fn family_file(f: &SetFamily) -> FamilyFile {
    let s = |i: usize| Value::String(f.ground[i].clone());
    FamilyFile {
        ground: (0..f.ground.len()).map(s).collect(),
        sets: f
            .sets
            .iter()
            .map(|set| set.iter().map(s).collect())
            .collect(),
    }
}
