//! JSON documents: one object per file with a `type` tag.
//!
//! Simplicial sets are stored cell by cell, each cell naming its faces and
//! degeneracies. Exact rationals in reports are `[numerator, denominator]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::builder::SSetBuilder;
use crate::incidence::{Functional, Incidence};
use crate::nerve::{nerve, nerve_category, Category, NerveError, Poset};
use crate::sset::{SSetError, SSetTables, SimplicialMap, SubSSet, TruncatedSSet};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("level {level}, cell {index} (`{name}`): {message}")]
    Cell { level: usize, index: usize, name: String, message: String },
    #[error("{0}")]
    Schema(String),
    #[error("expected a {expected} document, found {found}")]
    WrongType { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    SSet(#[from] SSetError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Cover pairs; the order is their reflexive-transitive closure.
    Covers,
    /// Every pair `a ≤ b`, reflexive pairs included.
    Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub relation: Relation,
    pub pairs: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDocument {
    pub name: String,
    /// `d_0, …, d_n` by name; empty for vertices.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<String>,
    /// `s_0, …, s_n` by name; empty at the cap.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degeneracies: Vec<String>,
}

/// Nondegenerate cell given by its faces, for [`SSetDocument::generators`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDocument {
    pub name: String,
    #[serde(default)]
    pub faces: Vec<String>,
}

/// Either full `levels`, or `generators` from which the degenerate cells are
/// derived. Saving always writes `levels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetDocument {
    pub cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<Vec<CellDocument>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorDocument>>,
}

/// Either every component by cell name, or only the vertex map when target
/// cells are determined by their vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSetDocument {
    pub vertices: Vec<String>,
}

/// Cells of a sub-object, by name in the ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubSSetDocument {
    pub cap: usize,
    pub levels: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDocument {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDocument>,
    /// Object to its identity morphism.
    pub identities: BTreeMap<String, String>,
    /// `[g, f, g∘f]`.
    pub composition: Vec<[String; 3]>,
    pub cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Document {
    Poset(PosetDocument),
    Sset(SSetDocument),
    Map(MapDocument),
    VertexSet(VertexSetDocument),
    SubSset(SubSSetDocument),
    Category(CategoryDocument),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Poset(_) => "poset",
            Document::Sset(_) => "sset",
            Document::Map(_) => "map",
            Document::VertexSet(_) => "vertex_set",
            Document::SubSset(_) => "sub_sset",
            Document::Category(_) => "category",
        }
    }

    /// The simplicial set described by a poset, category or sset document.
    /// `cap` overrides the document's cap.
    pub fn to_space(&self, cap: Option<usize>) -> Result<TruncatedSSet, DocumentError> {
        match self {
            Document::Poset(p) => Ok(nerve(&p.to_poset()?, cap.or(p.cap))?),
            Document::Sset(s) => {
                let x = s.to_space()?;
                match cap {
                    Some(c) if c > x.cap() => Err(DocumentError::Schema(format!(
                        "cannot raise the cap of a raw simplicial set from {} to {c}",
                        x.cap()
                    ))),
                    Some(c) => Ok(x.truncate(c)?),
                    None => Ok(x),
                }
            }
            Document::Category(c) => {
                let category = c.to_category()?;
                Ok(nerve_category(&category, cap.unwrap_or(c.cap), c.chain_bound)?.space)
            }
            other => Err(DocumentError::WrongType {
                expected: "poset, category or sset",
                found: other.kind(),
            }),
        }
    }
}

/// Parses one document; syntax errors carry line and column.
pub fn load(text: &str) -> Result<Document, DocumentError> {
    serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Canonical text: pretty JSON with a trailing newline.
pub fn save(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

impl PosetDocument {
    pub fn to_poset(&self) -> Result<Poset, DocumentError> {
        let pairs: Vec<(String, String)> = self.pairs.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        Ok(match self.relation {
            Relation::Covers => Poset::from_covers(self.elements.clone(), &pairs)?,
            Relation::Order => Poset::from_order(self.elements.clone(), &pairs)?,
        })
    }

    /// Cover-relation document for `p`.
    pub fn from_poset(p: &Poset, cap: Option<usize>) -> Self {
        Self {
            elements: p.names().to_vec(),
            relation: Relation::Covers,
            pairs: p
                .covers()
                .into_iter()
                .map(|(a, b)| [p.name(a).to_string(), p.name(b).to_string()])
                .collect(),
            cap,
        }
    }
}

impl CategoryDocument {
    pub fn to_category(&self) -> Result<Category, DocumentError> {
        let morphisms: Vec<(String, String, String)> = self
            .morphisms
            .iter()
            .map(|m| (m.name.clone(), m.source.clone(), m.target.clone()))
            .collect();
        let identities: Vec<(String, String)> = self.identities.clone().into_iter().collect();
        let composition: Vec<(String, String, String)> = self
            .composition
            .iter()
            .map(|[g, f, h]| (g.clone(), f.clone(), h.clone()))
            .collect();
        Ok(Category::new(self.objects.clone(), &morphisms, &identities, &composition)?)
    }
}

fn index_level<'a>(level: usize, names: impl Iterator<Item = &'a String>) -> Result<HashMap<&'a str, usize>, DocumentError> {
    let mut map = HashMap::new();
    for (i, name) in names.enumerate() {
        if map.insert(name.as_str(), i).is_some() {
            return Err(DocumentError::Cell {
                level,
                index: i,
                name: name.clone(),
                message: "duplicate name".into(),
            });
        }
    }
    Ok(map)
}

impl SSetDocument {
    pub fn to_space(&self) -> Result<TruncatedSSet, DocumentError> {
        match (&self.levels, &self.generators) {
            (Some(levels), None) => self.from_levels(levels),
            (None, Some(generators)) => {
                let mut b = SSetBuilder::new(self.cap);
                for g in generators {
                    let faces: Vec<&str> = g.faces.iter().map(String::as_str).collect();
                    b.cell(&g.name, &faces)?;
                }
                Ok(b.build()?)
            }
            _ => Err(DocumentError::Schema(
                "an sset document needs exactly one of `levels` or `generators`".into(),
            )),
        }
    }

    fn from_levels(&self, levels: &[Vec<CellDocument>]) -> Result<TruncatedSSet, DocumentError> {
        let cap = self.cap;
        if levels.len() != cap + 1 {
            return Err(DocumentError::Schema(format!(
                "cap {cap} needs {} levels, found {}",
                cap + 1,
                levels.len()
            )));
        }
        let index = levels
            .iter()
            .enumerate()
            .map(|(n, cells)| index_level(n, cells.iter().map(|c| &c.name)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut faces: Vec<Vec<Vec<usize>>> = (0..=cap)
            .map(|n| vec![vec![0; levels[n].len()]; if n == 0 { 0 } else { n + 1 }])
            .collect();
        let mut degeneracies: Vec<Vec<Vec<usize>>> =
            (0..cap).map(|n| vec![vec![0; levels[n].len()]; n + 1]).collect();
        for (n, cells) in levels.iter().enumerate() {
            for (c, cell) in cells.iter().enumerate() {
                let err = |message: String| DocumentError::Cell {
                    level: n,
                    index: c,
                    name: cell.name.clone(),
                    message,
                };
                let want_faces = if n == 0 { 0 } else { n + 1 };
                if cell.faces.len() != want_faces {
                    return Err(err(format!("expected {want_faces} faces, found {}", cell.faces.len())));
                }
                let want_degens = if n == cap { 0 } else { n + 1 };
                if cell.degeneracies.len() != want_degens {
                    return Err(err(format!(
                        "expected {want_degens} degeneracies, found {}",
                        cell.degeneracies.len()
                    )));
                }
                for (i, face) in cell.faces.iter().enumerate() {
                    faces[n][i][c] = *index[n - 1]
                        .get(face.as_str())
                        .ok_or_else(|| err(format!("d_{i} names `{face}`, not a cell of level {}", n - 1)))?;
                }
                for (i, degen) in cell.degeneracies.iter().enumerate() {
                    degeneracies[n][i][c] = *index[n + 1]
                        .get(degen.as_str())
                        .ok_or_else(|| err(format!("s_{i} names `{degen}`, not a cell of level {}", n + 1)))?;
                }
            }
        }
        let tables = SSetTables {
            cap,
            names: levels.iter().map(|cells| cells.iter().map(|c| c.name.clone()).collect()).collect(),
            faces,
            degeneracies,
        };
        Ok(TruncatedSSet::new(tables)?)
    }

    pub fn from_space(x: &TruncatedSSet) -> Self {
        let cap = x.cap();
        let levels = (0..=cap)
            .map(|n| {
                (0..x.level_len(n))
                    .map(|c| CellDocument {
                        name: x.name(n, c).to_string(),
                        faces: if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n).map(|i| x.name(n - 1, x.face(n, i, c)).to_string()).collect()
                        },
                        degeneracies: if n == cap {
                            Vec::new()
                        } else {
                            (0..=n).map(|i| x.name(n + 1, x.degeneracy(n, i, c)).to_string()).collect()
                        },
                    })
                    .collect()
            })
            .collect();
        Self {
            cap,
            levels: Some(levels),
            generators: None,
        }
    }
}

impl MapDocument {
    pub fn to_map(&self, source: Arc<TruncatedSSet>, target: Arc<TruncatedSSet>) -> Result<SimplicialMap, DocumentError> {
        let components = match (&self.components, &self.vertices) {
            (Some(components), None) => {
                if components.len() != source.cap() + 1 {
                    return Err(DocumentError::Schema(format!(
                        "map needs {} components, found {}",
                        source.cap() + 1,
                        components.len()
                    )));
                }
                (0..=source.cap())
                    .map(|n| {
                        (0..source.level_len(n))
                            .map(|c| {
                                let name = source.name(n, c);
                                let image = components[n].get(name).ok_or_else(|| DocumentError::Cell {
                                    level: n,
                                    index: c,
                                    name: name.to_string(),
                                    message: "no image".into(),
                                })?;
                                Ok(target.lookup(n, image)?)
                            })
                            .collect::<Result<Vec<_>, DocumentError>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
            (None, Some(vertices)) => extend_vertex_map(&source, &target, vertices)?,
            _ => {
                return Err(DocumentError::Schema(
                    "a map document needs exactly one of `components` or `vertices`".into(),
                ))
            }
        };
        Ok(SimplicialMap::new(source, target, components)?)
    }

    pub fn from_map(f: &SimplicialMap) -> Self {
        let (s, t) = (f.source(), f.target());
        Self {
            components: Some(
                (0..=s.cap())
                    .map(|n| {
                        (0..s.level_len(n))
                            .map(|c| (s.name(n, c).to_string(), t.name(n, f.apply(n, c)).to_string()))
                            .collect()
                    })
                    .collect(),
            ),
            vertices: None,
        }
    }
}

/// Sends each cell to the unique target cell with the image vertex tuple.
fn extend_vertex_map(
    source: &TruncatedSSet,
    target: &TruncatedSSet,
    vertices: &BTreeMap<String, String>,
) -> Result<Vec<Vec<usize>>, DocumentError> {
    let v0 = (0..source.level_len(0))
        .map(|v| {
            let name = source.name(0, v);
            let image = vertices.get(name).ok_or_else(|| DocumentError::Cell {
                level: 0,
                index: v,
                name: name.to_string(),
                message: "no image".into(),
            })?;
            Ok(target.lookup(0, image)?)
        })
        .collect::<Result<Vec<_>, DocumentError>>()?;
    let mut components = vec![v0.clone()];
    for n in 1..=source.cap() {
        let mut by_vertices: HashMap<Vec<usize>, Option<usize>> = HashMap::new();
        for c in 0..target.level_len(n) {
            by_vertices
                .entry(target.vertices(n, c))
                .and_modify(|e| *e = None)
                .or_insert(Some(c));
        }
        let level = (0..source.level_len(n))
            .map(|c| {
                let image: Vec<usize> = source.vertices(n, c).iter().map(|&v| v0[v]).collect();
                match by_vertices.get(&image) {
                    Some(Some(t)) => Ok(*t),
                    found => Err(DocumentError::Cell {
                        level: n,
                        index: c,
                        name: source.name(n, c).to_string(),
                        message: if found.is_some() {
                            "several target cells share the image vertices; give `components`".into()
                        } else {
                            "no target cell has the image vertices".into()
                        },
                    }),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        components.push(level);
    }
    Ok(components)
}

impl SubSSetDocument {
    pub fn from_sub(k: &SubSSet) -> Self {
        let x = k.ambient();
        Self {
            cap: x.cap(),
            levels: (0..=x.cap())
                .map(|n| k.selected(n).iter().map(|&c| x.name(n, c).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_sub(&self, ambient: Arc<TruncatedSSet>) -> Result<SubSSet, DocumentError> {
        if self.cap != ambient.cap() || self.levels.len() != ambient.cap() + 1 {
            return Err(DocumentError::Schema(format!(
                "sub-object has cap {} but the ambient space has cap {}",
                self.cap,
                ambient.cap()
            )));
        }
        let selected = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, names)| names.iter().map(|name| ambient.lookup(n, name)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubSSet::new(ambient, selected)?)
    }
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

/// `[numerator, denominator]`, falling back to decimal strings past `i64`.
pub fn rational_json(r: &BigRational) -> Value {
    Value::Array(vec![bigint_json(r.numer()), bigint_json(r.denom())])
}

/// `[[edge, [num, den]], …]` over the support, in cell order.
pub fn functional_json(alg: &Incidence, f: &Functional) -> Value {
    Value::Array(
        f.support()
            .into_iter()
            .map(|e| Value::Array(vec![Value::from(alg.edge_name(e)), rational_json(f.get(e))]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn poset_round_trip() {
        let doc = Document::Poset(PosetDocument::from_poset(&fixtures::b2_poset(), None));
        let text = save(&doc);
        assert_eq!(load(&text).unwrap(), doc);
        assert_eq!(save(&load(&text).unwrap()), text);
        assert!(text.contains("\"type\": \"poset\""));
    }

    #[test]
    fn sset_round_trip() {
        let x = fixtures::b2();
        let doc = Document::Sset(SSetDocument::from_space(&x));
        let text = save(&doc);
        let back = load(&text).unwrap().to_space(None).unwrap();
        assert_eq!(back, x);
        assert_eq!(save(&Document::Sset(SSetDocument::from_space(&back))), text);
    }

    #[test]
    fn generators_match_levels() {
        let text = r#"{"type": "sset", "cap": 2, "generators": [
            {"name": "x"}, {"name": "y"},
            {"name": "f", "faces": ["y", "x"]}
        ]}"#;
        let x = load(text).unwrap().to_space(None).unwrap();
        assert_eq!(x.level_len(1), 3);
        assert_eq!(x.level_len(2), 4);
    }

    #[test]
    fn unknown_field_is_named() {
        let err = load(r#"{"type": "vertex_set", "vertices": [], "colour": 1}"#).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
        let err = load(r#"{"type": "shape"}"#).unwrap_err();
        assert!(err.to_string().contains("shape"), "{err}");
    }

    #[test]
    fn level_mismatch_names_level_and_index() {
        let x = fixtures::chain(2);
        let mut doc = SSetDocument::from_space(&x);
        doc.levels.as_mut().unwrap()[1][2].faces.pop();
        let err = Document::Sset(doc).to_space(None).unwrap_err();
        assert!(matches!(err, DocumentError::Cell { level: 1, index: 2, .. }), "{err}");
        let mut doc = SSetDocument::from_space(&x);
        doc.levels.as_mut().unwrap()[2][0].faces[0] = "(0)".into();
        let err = Document::Sset(doc).to_space(None).unwrap_err();
        assert!(matches!(err, DocumentError::Cell { level: 2, index: 0, .. }), "{err}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = load("{\n  \"type\": \"poset\",\n  oops\n}").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn vertex_maps_extend() {
        let x = Arc::new(nerve(&fixtures::chain_poset(3), Some(3)).unwrap());
        let y = Arc::new(nerve(&fixtures::chain_poset(2), Some(3)).unwrap());
        let doc = MapDocument {
            components: None,
            vertices: Some([("(0)", "(0)"), ("(1)", "(2)")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()),
        };
        let f = doc.to_map(y.clone(), x.clone()).unwrap();
        assert_eq!(x.name(1, f.apply(1, y.lookup(1, "(0,1)").unwrap())), "(0,2)");
        let full = MapDocument::from_map(&f);
        assert_eq!(full.to_map(y, x).unwrap().component(2), f.component(2));
    }

    #[test]
    fn rationals_as_pairs() {
        let r = BigRational::new(BigInt::from(-3), BigInt::from(6));
        assert_eq!(rational_json(&r).to_string(), "[-1,2]");
    }
}
