//! The composition algebra: atoms, ordered composition, powers, and the
//! writing-order/application-order convention.
//!
//! A composition stores its parts in application order: the first part
//! applies first. Composition is associative, so part lists are kept flat;
//! nesting only exists in rendering.

mod relation;

pub use relation::{FiniteRelation, RelationEnv, RelationError};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::LetterId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("power exponent must be at least 1, got {0}")]
    ZeroPower(u32),
    #[error("cannot build a formula from an empty letter list")]
    EmptyWord,
    #[error("relation {0:?} is not bound in the environment")]
    UnboundRelation(String),
    #[error("element {0:?} is not in the relation domain")]
    UnknownElement(String),
}

/// An atom or a flattened ordered composition of at least two parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    /// A letter or an opaque named relation.
    Atom(String),
    /// Parts in application order: the first element applies first.
    Compose(Vec<Formula>),
}

impl Formula {
    pub fn atom(label: impl Into<String>) -> Formula {
        Formula::Atom(label.into())
    }

    /// Parts in application order. An atom is its own single part.
    pub fn parts(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![self],
            Formula::Compose(parts) => parts.iter().collect(),
        }
    }

    /// Atom labels in application order.
    pub fn atom_labels(&self) -> Vec<&str> {
        match self {
            Formula::Atom(label) => vec![label],
            Formula::Compose(parts) => parts.iter().flat_map(|p| p.atom_labels()).collect(),
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atom_labels().len()
    }
}

impl fmt::Display for Formula {
    /// Renders outermost-first: the last part of the application order wraps
    /// the rest, so `compose(a, compose(b, c))` prints as `c(b(a))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(label) => f.write_str(label),
            Formula::Compose(parts) => {
                let mut rendered = parts[0].to_string();
                for part in &parts[1..] {
                    rendered = format!("{part}({rendered})");
                }
                f.write_str(&rendered)
            }
        }
    }
}

fn push_flat(acc: &mut Vec<Formula>, f: Formula) {
    match f {
        Formula::Compose(parts) => acc.extend(parts),
        atom => acc.push(atom),
    }
}

/// Composes two formulas: the result applies `f1` first, then `f2`, i.e.
/// `(f1 . f2)(x) = f2(f1(x))`. Nested compositions flatten.
pub fn compose(f1: Formula, f2: Formula) -> Formula {
    let mut parts = Vec::new();
    push_flat(&mut parts, f1);
    push_flat(&mut parts, f2);
    Formula::Compose(parts)
}

/// n-fold self-composition; `power(f, 1)` is `f` itself.
pub fn power(f: Formula, n: u32) -> Result<Formula, FormulaError> {
    if n == 0 {
        return Err(FormulaError::ZeroPower(n));
    }
    if n == 1 {
        return Ok(f);
    }
    let mut parts = Vec::new();
    for _ in 0..n {
        push_flat(&mut parts, f.clone());
    }
    Ok(Formula::Compose(parts))
}

/// Builds the formula of a written word: the last written label applies
/// first, the first written label applies last (outermost).
pub fn from_writing_order(labels: Vec<String>) -> Result<Formula, FormulaError> {
    if labels.is_empty() {
        return Err(FormulaError::EmptyWord);
    }
    if labels.len() == 1 {
        return Ok(Formula::Atom(labels.into_iter().next().unwrap()));
    }
    Ok(Formula::Compose(
        labels.into_iter().rev().map(Formula::Atom).collect(),
    ))
}

/// [`from_writing_order`] over letters, labelled by their glyphs.
pub fn word_order_to_application_order(
    letters_in_writing_order: &[LetterId],
) -> Result<Formula, FormulaError> {
    from_writing_order(
        letters_in_writing_order
            .iter()
            .map(|id| id.info().glyph.to_string())
            .collect(),
    )
}

/// Evaluates a formula at `x`: threads the image set through each atom's
/// relation in application order.
pub fn apply(
    f: &Formula,
    env: &RelationEnv,
    x: &str,
) -> Result<BTreeSet<String>, FormulaError> {
    let mut current: BTreeSet<String> = BTreeSet::new();
    current.insert(x.to_string());
    for label in f.atom_labels() {
        let rel = env
            .get(label)
            .ok_or_else(|| FormulaError::UnboundRelation(label.to_string()))?;
        let mut next = BTreeSet::new();
        for e in &current {
            next.extend(rel.image(e));
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Brute-force composition oracle: enumerate every (x, z) pair and
    /// search for a witness y. Independent of FiniteRelation::compose.
    fn oracle_compose(f1: &FiniteRelation, f2: &FiniteRelation) -> BTreeSet<(String, String)> {
        let mut pairs = BTreeSet::new();
        for x in f1.domain() {
            for z in f2.domain() {
                let witness = f1
                    .domain()
                    .iter()
                    .chain(f2.domain())
                    .any(|y| f1.contains(x, y) && f2.contains(y, z));
                if witness {
                    pairs.insert((x.clone(), z.clone()));
                }
            }
        }
        pairs
    }

    fn rel(domain: &[&str], pairs: &[(&str, &str)]) -> FiniteRelation {
        FiniteRelation::new(
            domain.iter().map(|s| s.to_string()).collect(),
            pairs
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
        .unwrap()
    }

    fn kinship_env() -> RelationEnv {
        let dom = ["salim", "farid", "maha", "samir", "omar", "nadia"];
        let mut env = RelationEnv::new();
        env.insert(
            "brother",
            rel(&dom, &[("samir", "maha"), ("omar", "nadia")]),
        );
        env.insert(
            "mother",
            rel(&dom, &[("maha", "omar"), ("maha", "nadia")]),
        );
        env.insert(
            "father",
            rel(
                &dom,
                &[("salim", "farid"), ("farid", "omar"), ("farid", "nadia")],
            ),
        );
        env
    }

    #[test]
    fn brother_then_mother_is_uncle() {
        let env = kinship_env();
        let uncle = env
            .get("brother")
            .unwrap()
            .compose(env.get("mother").unwrap());
        let expected = oracle_compose(env.get("brother").unwrap(), env.get("mother").unwrap());
        assert_eq!(uncle.pairs(), &expected);
        assert!(uncle.contains("samir", "omar"));
        assert!(uncle.contains("samir", "nadia"));
        assert_eq!(uncle.pairs().len(), 2);
    }

    #[test]
    fn father_squared_is_grandfather() {
        let env = kinship_env();
        let father = env.get("father").unwrap();
        let grandfather = father.compose(father);
        assert_eq!(grandfather.pairs(), &oracle_compose(father, father));
        assert!(grandfather.contains("salim", "omar"));
        assert!(grandfather.contains("salim", "nadia"));
        assert_eq!(grandfather.pairs().len(), 2);
    }

    #[test]
    fn composition_flattens() {
        let a = Formula::atom("a");
        let b = Formula::atom("b");
        let c = Formula::atom("c");
        let left = compose(compose(a.clone(), b.clone()), c.clone());
        let right = compose(a, compose(b, c));
        assert_eq!(left, right);
        assert_eq!(left.atom_labels(), ["a", "b", "c"]);
    }

    #[test]
    fn rendering_is_outermost_first() {
        let f = compose(
            Formula::atom("brother"),
            Formula::atom("mother"),
        );
        assert_eq!(f.to_string(), "mother(brother)");
    }

    #[test]
    fn power_basics() {
        let f = Formula::atom("f");
        assert_eq!(power(f.clone(), 1).unwrap(), f);
        assert_eq!(
            power(f.clone(), 3).unwrap().atom_labels(),
            ["f", "f", "f"]
        );
        assert_eq!(power(f, 0), Err(FormulaError::ZeroPower(0)));
    }

    #[test]
    fn power_three_matches_pairwise_composition() {
        let f = rel(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        );
        let via_power = f.compose(&f).compose(&f);
        let step = oracle_compose(&f, &f);
        let step_rel = FiniteRelation::new(f.domain().clone(), step).unwrap();
        assert_eq!(via_power.pairs(), &oracle_compose(&step_rel, &f));
    }

    #[test]
    fn apply_identity() {
        let dom = ["a", "b", "c"];
        let mut env = RelationEnv::new();
        env.insert("id", rel(&dom, &[("a", "a"), ("b", "b"), ("c", "c")]));
        let image = apply(&Formula::atom("id"), &env, "b").unwrap();
        assert_eq!(image, BTreeSet::from(["b".to_string()]));
    }

    #[test]
    fn apply_uncle_image() {
        let env = kinship_env();
        let f = compose(Formula::atom("brother"), Formula::atom("mother"));
        let image = apply(&f, &env, "samir").unwrap();
        assert_eq!(
            image,
            BTreeSet::from(["omar".to_string(), "nadia".to_string()])
        );
    }

    #[test]
    fn apply_rejects_unbound_relations() {
        let env = RelationEnv::new();
        assert_eq!(
            apply(&Formula::atom("ghost"), &env, "x"),
            Err(FormulaError::UnboundRelation("ghost".to_string()))
        );
    }

    #[test]
    fn non_commutativity_witness() {
        let env = kinship_env();
        let brother = env.get("brother").unwrap();
        let mother = env.get("mother").unwrap();
        assert_ne!(
            brother.compose(mother).pairs(),
            mother.compose(brother).pairs()
        );
    }

    #[test]
    fn word_order_reverses() {
        use crate::alphabet::LetterId;
        let f = word_order_to_application_order(&[
            LetterId::Alif,
            LetterId::Lam,
            LetterId::Kaf,
            LetterId::Ta,
            LetterId::Alif,
            LetterId::Ba,
        ])
        .unwrap();
        assert_eq!(f.atom_labels(), ["ب", "ا", "ت", "ك", "ل", "ا"]);
        assert_eq!(f.to_string(), "ا(ل(ك(ت(ا(ب)))))");

        let single = word_order_to_application_order(&[LetterId::Ra]).unwrap();
        assert_eq!(single, Formula::atom("ر"));

        assert_eq!(
            word_order_to_application_order(&[]),
            Err(FormulaError::EmptyWord)
        );
    }

    #[test]
    fn formula_serializes_to_tagged_json() {
        let f = compose(Formula::atom("كتاب"), Formula::atom("ل"));
        let value = serde_json::to_value(&f).unwrap();
        assert_eq!(
            value,
            serde_json::json!({"compose": [{"atom": "كتاب"}, {"atom": "ل"}]})
        );
    }

    // Strategy: a relation over a domain of at most 6 elements.
    fn arb_relation() -> impl Strategy<Value = FiniteRelation> {
        (2usize..=6).prop_flat_map(|n| {
            let domain: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            proptest::collection::btree_set(
                (0..n, 0..n).prop_map(move |(a, b)| (format!("e{a}"), format!("e{b}"))),
                0..=n * n,
            )
            .prop_map(move |pairs| {
                FiniteRelation::new(domain.iter().cloned().collect(), pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn compose_matches_oracle((f, g) in (arb_relation(), arb_relation())) {
            // Restrict to a shared domain by re-rooting g over f's domain.
            let g = g.restricted_to(f.domain());
            prop_assert_eq!(f.compose(&g).pairs(), &oracle_compose(&f, &g));
        }

        #[test]
        fn associativity_pointwise((f, g, h) in (arb_relation(), arb_relation(), arb_relation())) {
            let g = g.restricted_to(f.domain());
            let h = h.restricted_to(f.domain());
            let left = f.compose(&g).compose(&h);
            let right = f.compose(&g.compose(&h));
            prop_assert_eq!(left.pairs(), right.pairs());

            let mut env = RelationEnv::new();
            env.insert("f", f.clone());
            env.insert("g", g);
            env.insert("h", h);
            let fg_h = compose(compose(Formula::atom("f"), Formula::atom("g")), Formula::atom("h"));
            let f_gh = compose(Formula::atom("f"), compose(Formula::atom("g"), Formula::atom("h")));
            for x in f.domain() {
                prop_assert_eq!(
                    apply(&fg_h, &env, x).unwrap(),
                    apply(&f_gh, &env, x).unwrap()
                );
            }
        }

        #[test]
        fn power_additivity(f in arb_relation(), m in 1u32..=3, n in 1u32..=3) {
            let mut env = RelationEnv::new();
            env.insert("f", f.clone());
            let atom = Formula::atom("f");
            let combined = power(atom.clone(), m + n).unwrap();
            let split = compose(power(atom.clone(), m).unwrap(), power(atom, n).unwrap());
            for x in f.domain() {
                prop_assert_eq!(
                    apply(&combined, &env, x).unwrap(),
                    apply(&split, &env, x).unwrap()
                );
            }
        }

        #[test]
        fn writing_order_reversal(labels in proptest::collection::vec("[a-z]{1,3}", 1..=8)) {
            let f = from_writing_order(labels.clone()).unwrap();
            let mut application: Vec<String> =
                f.atom_labels().into_iter().map(String::from).collect();
            application.reverse();
            prop_assert_eq!(application, labels);
        }
    }
}
