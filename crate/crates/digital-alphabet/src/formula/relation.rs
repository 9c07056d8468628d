//! Finite binary relations: the concrete semantics formulas are checked
//! against.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error("pair ({0:?}, {1:?}) uses an element outside the domain")]
    PairOutsideDomain(String, String),
    #[error("invalid relation document: {0}")]
    BadDocument(String),
}

/// A binary relation over a finite set of opaque element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation {
    domain: BTreeSet<String>,
    pairs: BTreeSet<(String, String)>,
}

impl FiniteRelation {
    pub fn new(
        domain: BTreeSet<String>,
        pairs: BTreeSet<(String, String)>,
    ) -> Result<Self, RelationError> {
        for (a, b) in &pairs {
            if !domain.contains(a) || !domain.contains(b) {
                return Err(RelationError::PairOutsideDomain(a.clone(), b.clone()));
            }
        }
        Ok(FiniteRelation { domain, pairs })
    }

    pub fn domain(&self) -> &BTreeSet<String> {
        &self.domain
    }

    pub fn pairs(&self) -> &BTreeSet<(String, String)> {
        &self.pairs
    }

    pub fn contains(&self, x: &str, y: &str) -> bool {
        self.pairs.contains(&(x.to_string(), y.to_string()))
    }

    /// All y with (x, y) in the relation.
    pub fn image(&self, x: &str) -> BTreeSet<String> {
        self.pairs
            .iter()
            .filter(|(a, _)| a == x)
            .map(|(_, b)| b.clone())
            .collect()
    }

    /// Relational composition: `{(x, z) | exists y: (x, y) in self and
    /// (y, z) in other}`. The result lives on the union of both domains.
    pub fn compose(&self, other: &FiniteRelation) -> FiniteRelation {
        let mut pairs = BTreeSet::new();
        for (x, y) in &self.pairs {
            for z in other.image(y) {
                pairs.insert((x.clone(), z));
            }
        }
        let domain = self.domain.union(&other.domain).cloned().collect();
        FiniteRelation { domain, pairs }
    }

    /// Keeps only the pairs whose endpoints fall in `domain`.
    pub fn restricted_to(&self, domain: &BTreeSet<String>) -> FiniteRelation {
        let pairs = self
            .pairs
            .iter()
            .filter(|(a, b)| domain.contains(a) && domain.contains(b))
            .cloned()
            .collect();
        FiniteRelation {
            domain: domain.clone(),
            pairs,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RelationDocument {
    elements: Vec<String>,
    relations: BTreeMap<String, Vec<(String, String)>>,
}

/// Named relations sharing one element domain, loadable from a JSON
/// document of the form
/// `{"elements": [...], "relations": {"name": [["x", "y"], ...]}}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationEnv {
    relations: BTreeMap<String, FiniteRelation>,
}

impl RelationEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, relation: FiniteRelation) {
        self.relations.insert(name.into(), relation);
    }

    pub fn get(&self, name: &str) -> Option<&FiniteRelation> {
        self.relations.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.relations.keys().map(|s| s.as_str())
    }

    pub fn from_reader(reader: impl Read) -> Result<Self, RelationError> {
        let doc: RelationDocument = serde_json::from_reader(reader)
            .map_err(|e| RelationError::BadDocument(e.to_string()))?;
        let domain: BTreeSet<String> = doc.elements.into_iter().collect();
        let mut env = RelationEnv::new();
        for (name, pairs) in doc.relations {
            let relation = FiniteRelation::new(domain.clone(), pairs.into_iter().collect())?;
            env.relations.insert(name, relation);
        }
        Ok(env)
    }

    pub fn from_json_str(json: &str) -> Result<Self, RelationError> {
        Self::from_reader(json.as_bytes())
    }
}
