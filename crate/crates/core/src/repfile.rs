//! Reading and writing representations as JSON.
//!
//! ```json
//! {
//!   "quiver": "big_component",
//!   "dims": {"1": 1, "5": 1},
//!   "maps": {"alpha1": [["1"]]}
//! }
//! ```
//!
//! `quiver` is either a named quiver or an inline description
//! `{"vertices": [...], "arrows": [[name, source, target], ...], "relations": [...]}`
//! where each relation is a list of arrow names (a zero path) or a list of
//! `[coefficient, [arrow names]]` terms. Entries are exact rationals written as
//! strings `"p/q"`. Missing dimensions are zero and missing maps are zero matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cubics::NamedQuiver;
use crate::linalg::Matrix;
use crate::quiver::{BoundQuiver, Quiver, QuiverError, Relation, Representation};
use crate::Rational;

#[derive(Debug, Error)]
pub enum RepFileError {
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    UnknownQuiver(String),
    #[error("bad rational '{0}'")]
    BadRational(String),
    #[error("matrix for arrow '{0}' is not rectangular")]
    Ragged(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationSpec {
    Zero(Vec<String>),
    Terms(Vec<(Entry, Vec<String>)>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InlineQuiver {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuiverSpec {
    Named(String),
    Inline(InlineQuiver),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepFile {
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<Entry>>>,
}

fn parse_entry(e: &Entry) -> Result<Rational, RepFileError> {
    match e {
        Entry::Int(n) => Ok(Rational::from_integer((*n).into())),
        Entry::Text(s) => {
            let t = s.trim();
            let r: Rational = t.parse().map_err(|_| RepFileError::BadRational(s.clone()))?;
            Ok(r)
        }
    }
}

fn format_entry(x: &Rational) -> Entry {
    Entry::Text(x.to_string())
}

impl InlineQuiver {
    pub fn build(&self) -> Result<Arc<BoundQuiver>, RepFileError> {
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|(a, s, t)| (a.as_str(), s.as_str(), t.as_str())).collect();
        let q = Quiver::new(&vertices, &arrows)?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let rel = match r {
                RelationSpec::Zero(names) => {
                    let names: Vec<&str> = names.iter().map(String::as_str).collect();
                    Relation::monomial(q.path(&names)?)
                }
                RelationSpec::Terms(terms) => {
                    let mut out = Vec::new();
                    for (c, names) in terms {
                        let names: Vec<&str> = names.iter().map(String::as_str).collect();
                        out.push((parse_entry(c)?, q.path(&names)?));
                    }
                    Relation { terms: out }
                }
            };
            relations.push(rel);
        }
        Ok(BoundQuiver::new(self.name.as_deref().unwrap_or("inline"), q, relations)?)
    }

    pub fn describe(bq: &BoundQuiver) -> Self {
        let q = bq.quiver();
        let relations = bq
            .relations()
            .iter()
            .map(|r| {
                let names = |p: &crate::quiver::Path| p.arrows.iter().map(|&a| q.arrows()[a].name.clone()).collect::<Vec<_>>();
                match r.terms.as_slice() {
                    [(c, p)] if c == &Rational::from_integer(1.into()) => RelationSpec::Zero(names(p)),
                    terms => RelationSpec::Terms(terms.iter().map(|(c, p)| (format_entry(c), names(p))).collect()),
                }
            })
            .collect();
        InlineQuiver {
            name: Some(bq.name().to_string()),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| (a.name.clone(), q.vertices()[a.source].clone(), q.vertices()[a.target].clone()))
                .collect(),
            relations,
        }
    }
}

impl RepFile {
    pub fn parse(text: &str) -> Result<Self, RepFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn quiver(&self) -> Result<Arc<BoundQuiver>, RepFileError> {
        match &self.quiver {
            QuiverSpec::Named(n) => Ok(n.parse::<NamedQuiver>().map_err(RepFileError::UnknownQuiver)?.build()),
            QuiverSpec::Inline(q) => q.build(),
        }
    }

    pub fn representation(&self) -> Result<Representation<Rational>, RepFileError> {
        let bq = self.quiver()?;
        let q = bq.quiver();
        let mut dims = vec![0; q.n_vertices()];
        for (v, d) in &self.dims {
            dims[q.vertex_index(v)?] = *d;
        }
        let mut maps: Vec<Matrix<Rational>> =
            q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        for (name, rows) in &self.maps {
            let ai = q.arrow_index(name)?;
            let cols = rows.first().map_or(dims[q.arrows()[ai].source], Vec::len);
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != cols {
                    return Err(RepFileError::Ragged(name.clone()));
                }
                parsed.push(row.iter().map(parse_entry).collect::<Result<Vec<_>, _>>()?);
            }
            maps[ai] = Matrix::from_rows(parsed, cols).ok_or_else(|| RepFileError::Ragged(name.clone()))?;
        }
        Ok(Representation::new(bq, dims, maps)?)
    }

    /// Writes a representation, naming its quiver when it is one of the built-in ones.
    pub fn from_representation(v: &Representation<Rational>) -> Self {
        let bq = v.quiver();
        let q = bq.quiver();
        let quiver = NamedQuiver::ALL
            .into_iter()
            .find(|n| n.build().same_as(bq))
            .map_or_else(|| QuiverSpec::Inline(InlineQuiver::describe(bq)), |n| QuiverSpec::Named(n.name().into()));
        let dims = q.vertices().iter().zip(v.dims()).filter(|(_, &d)| d > 0).map(|(n, &d)| (n.clone(), d)).collect();
        let maps = q
            .arrows()
            .iter()
            .zip(v.maps())
            .filter(|(_, m)| !m.is_zero())
            .map(|(a, m)| (a.name.clone(), m.to_rows().iter().map(|r| r.iter().map(format_entry).collect()).collect()))
            .collect();
        RepFile { quiver, dims, maps }
    }

    /// A named quiver spelled out inline, with no spaces attached.
    pub fn export_quiver(bq: &BoundQuiver) -> Self {
        RepFile { quiver: QuiverSpec::Inline(InlineQuiver::describe(bq)), dims: BTreeMap::new(), maps: BTreeMap::new() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubics::{big_component, embed_alpha, regular};

    #[test]
    fn round_trip() {
        let v = embed_alpha(&regular(2, &Rational::new(1.into(), 2.into())).unwrap()).unwrap();
        let text = RepFile::from_representation(&v).to_json();
        let back = RepFile::parse(&text).unwrap().representation().unwrap();
        assert_eq!(back.dims(), v.dims());
        assert_eq!(back.maps(), v.maps());
        assert!(back.quiver().same_as(&big_component()));
    }

    #[test]
    fn inline_quiver_and_defaults() {
        let text = r#"{
            "quiver": {"vertices": ["a", "b"], "arrows": [["x", "a", "b"], ["y", "b", "a"]], "relations": [["x", "y"], ["y", "x"]]},
            "dims": {"a": 1, "b": 1},
            "maps": {"x": [["-3/4"]]}
        }"#;
        let v = RepFile::parse(text).unwrap().representation().unwrap();
        assert_eq!(v.map(0).get(0, 0), &Rational::new((-3).into(), 4.into()));
        assert!(v.map(1).is_zero());
        let exported = RepFile::export_quiver(v.quiver()).to_json();
        let again = RepFile::parse(&exported).unwrap().quiver().unwrap();
        assert_eq!(again.relations().len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(RepFile::parse(r#"{"quiver": "nope"}"#).unwrap().representation(), Err(RepFileError::UnknownQuiver(_))));
        let bad = r#"{"quiver": "two_vertex_pair", "dims": {"1": 1, "2": 1}, "maps": {"gamma": [["1"]], "delta": [["1"]]}}"#;
        assert!(matches!(RepFile::parse(bad).unwrap().representation(), Err(RepFileError::Quiver(QuiverError::RelationViolated(_)))));
        assert!(matches!(
            RepFile::parse(r#"{"quiver": "d4hat", "dims": {"1": 1, "5": 1}, "maps": {"alpha1": [["x"]]}}"#).unwrap().representation(),
            Err(RepFileError::BadRational(_))
        ));
    }
}
