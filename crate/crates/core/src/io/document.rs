use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::features::FeatureSet;
use crate::graph::WeightedGraph;
use crate::persistence::{Cornerpoint, DiagramMeta, Mode, PersistenceDiagram};

pub const SCHEMA_VERSION: u32 = 1;

/// A death coordinate; `+inf` is written as the string `"inf"`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Death(pub f64);

impl Serialize for Death {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for Death {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Death;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, x: f64) -> std::result::Result<Death, E> {
                Ok(Death(x))
            }

            fn visit_i64<E: de::Error>(self, x: i64) -> std::result::Result<Death, E> {
                Ok(Death(x as f64))
            }

            fn visit_u64<E: de::Error>(self, x: u64) -> std::result::Result<Death, E> {
                Ok(Death(x as f64))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Death, E> {
                match s {
                    "inf" => Ok(Death(f64::INFINITY)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(s), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CornerpointRecord {
    pub birth: f64,
    pub death: Death,
    pub multiplicity: usize,
    pub witnesses: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub schema_version: u32,
    pub feature: String,
    pub mode: Option<Mode>,
    pub source: String,
    pub cornerpoints: Vec<CornerpointRecord>,
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Mode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Mode::from_name(&s).ok_or_else(|| de::Error::invalid_value(de::Unexpected::Str(&s), &"steady or ranging"))
    }
}

impl DiagramDocument {
    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DiagramDocument = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

/// Witness sets are written as label lists resolved against `g`.
pub fn export_diagram(d: &PersistenceDiagram, g: &WeightedGraph) -> DiagramDocument {
    DiagramDocument {
        schema_version: SCHEMA_VERSION,
        feature: d.meta.feature.clone(),
        mode: d.meta.mode,
        source: d.meta.source.clone(),
        cornerpoints: d
            .cornerpoints()
            .iter()
            .map(|c| CornerpointRecord {
                birth: c.birth,
                death: Death(c.death),
                multiplicity: c.multiplicity,
                witnesses: c.witnesses.iter().map(|w| w.labels(g)).collect(),
            })
            .collect(),
    }
}

/// Rebuilds a diagram. Witnesses are resolved against `g` when given and
/// dropped otherwise; multiplicities are kept either way.
pub fn import_diagram(doc: &DiagramDocument, g: Option<&WeightedGraph>) -> Result<PersistenceDiagram> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema version {}",
            doc.schema_version
        )));
    }
    let points = doc
        .cornerpoints
        .iter()
        .map(|r| {
            let witnesses = match g {
                Some(g) => r
                    .witnesses
                    .iter()
                    .map(|labels| {
                        FeatureSet::from_labels(g, labels)
                            .ok_or_else(|| Error::Schema(format!("witness {labels:?} does not resolve in the graph")))
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            Ok(Cornerpoint {
                birth: r.birth,
                death: r.death.0,
                multiplicity: r.multiplicity,
                witnesses,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let meta = DiagramMeta {
        feature: doc.feature.clone(),
        mode: doc.mode,
        source: doc.source.clone(),
    };
    PersistenceDiagram::new(meta, points).map_err(|e| Error::Schema(e.to_string()))
}

pub fn write_diagram(path: impl AsRef<Path>, d: &PersistenceDiagram, g: &WeightedGraph) -> Result<()> {
    std::fs::write(path, export_diagram(d, g).to_json())?;
    Ok(())
}

pub fn read_diagram(path: impl AsRef<Path>, g: Option<&WeightedGraph>) -> Result<PersistenceDiagram> {
    let text = std::fs::read_to_string(path)?;
    import_diagram(&DiagramDocument::from_json(&text)?, g)
}
