//! Bipolar neutrosophic sets over a finite universe.
//!
//! A [`BnsSet`] assigns one [`Bnn`] to every element of an ordered universe
//! of labels. The module provides the pointwise set algebra (union,
//! intersection, complement), the subset and equality predicates, and
//! embeddings from two simpler models: bipolar fuzzy sets and single-valued
//! neutrosophic sets.

use std::collections::HashMap;

use crate::bnn::{Bnn, BnnError};

/// Componentwise tolerance used by [`BnsSet::equals`]. Set construction is
/// exact, so the tolerance only absorbs float round-off from operations.
pub const SET_EQUALITY_TOLERANCE: f64 = 1e-12;

/// Errors raised when constructing or combining sets.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SetError {
    /// A label occurs more than once in a universe or assignment list.
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    /// A universe label has no membership value.
    #[error("no membership value assigned to {0:?}")]
    MissingAssignment(String),
    /// A membership value was given for a label outside the universe.
    #[error("assignment for {0:?}, which is not in the universe")]
    UnknownLabel(String),
    /// Binary operations require both sets to cover the same labels.
    #[error("universes differ; both sets must cover the same labels")]
    UniverseMismatch,
    /// A raw membership tuple failed validation.
    #[error("membership for {label:?}: {source}")]
    Membership { label: String, source: BnnError },
    /// Folding an empty collection of sets has no meaningful result.
    #[error("cannot fold an empty collection of sets")]
    EmptyFold,
}

/// A bipolar neutrosophic set: an ordered universe of distinct labels, each
/// mapped to exactly one [`Bnn`].
///
/// Sets are immutable after construction. Binary operations require both
/// operands to cover the same labels (in any order) and return their result
/// in the left operand's universe order.
#[derive(Debug, Clone, PartialEq)]
pub struct BnsSet {
    labels: Vec<String>,
    values: Vec<Bnn>,
    index: HashMap<String, usize>,
}

impl BnsSet {
    /// Builds a set from a universe and one `(label, value)` assignment per
    /// universe element, in any order.
    pub fn new<U, L, A, M>(universe: U, assignments: A) -> Result<Self, SetError>
    where
        U: IntoIterator<Item = L>,
        L: Into<String>,
        A: IntoIterator<Item = (M, Bnn)>,
        M: Into<String>,
    {
        let labels: Vec<String> = universe.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(SetError::DuplicateLabel(label.clone()));
            }
        }

        let mut values: Vec<Option<Bnn>> = vec![None; labels.len()];
        for (label, value) in assignments {
            let label = label.into();
            let Some(&i) = index.get(&label) else {
                return Err(SetError::UnknownLabel(label));
            };
            if values[i].replace(value).is_some() {
                return Err(SetError::DuplicateLabel(label));
            }
        }
        let values = labels
            .iter()
            .zip(values)
            .map(|(label, v)| v.ok_or_else(|| SetError::MissingAssignment(label.clone())))
            .collect::<Result<Vec<_>, _>>()?;

        Ok(BnsSet {
            labels,
            values,
            index,
        })
    }

    /// Like [`BnsSet::new`], but takes raw component tuples in the order
    /// `[t+, i+, f+, t-, i-, f-]` and validates each one.
    pub fn from_components<U, L, A, M>(universe: U, assignments: A) -> Result<Self, SetError>
    where
        U: IntoIterator<Item = L>,
        L: Into<String>,
        A: IntoIterator<Item = (M, [f64; 6])>,
        M: Into<String>,
    {
        let mut validated = Vec::new();
        for (label, c) in assignments {
            let label: String = label.into();
            let value = Bnn::new(c[0], c[1], c[2], c[3], c[4], c[5]).map_err(|source| {
                SetError::Membership {
                    label: label.clone(),
                    source,
                }
            })?;
            validated.push((label, value));
        }
        BnsSet::new(universe, validated)
    }

    /// The universe labels in declaration order.
    pub fn universe(&self) -> &[String] {
        &self.labels
    }

    /// Number of universe elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True for the empty set over the empty universe.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Membership value for `label`, if it is in the universe.
    pub fn value(&self, label: &str) -> Option<Bnn> {
        self.index.get(label).map(|&i| self.values[i])
    }

    /// Iterates `(label, value)` pairs in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Bnn)> {
        self.labels
            .iter()
            .map(String::as_str)
            .zip(self.values.iter().copied())
    }

    /// True when both sets cover exactly the same labels (order ignored).
    fn same_universe(&self, other: &BnsSet) -> bool {
        self.labels.len() == other.labels.len()
            && self.labels.iter().all(|l| other.index.contains_key(l))
    }

    /// Applies a pointwise rule to aligned values, keeping `self`'s order.
    fn zip_with(&self, other: &BnsSet, rule: impl Fn(Bnn, Bnn) -> Bnn) -> Result<BnsSet, SetError> {
        if !self.same_universe(other) {
            return Err(SetError::UniverseMismatch);
        }
        let values = self
            .iter()
            .map(|(label, mine)| rule(mine, other.value(label).expect("universes match")))
            .collect();
        Ok(BnsSet {
            labels: self.labels.clone(),
            values,
            index: self.index.clone(),
        })
    }

    /// Pointwise union: largest positive truth, averaged positive
    /// indeterminacy, smallest positive falsity; smallest negative truth,
    /// averaged negative indeterminacy, largest negative falsity.
    ///
    /// Commutative and idempotent. Note that the averaged indeterminacy
    /// components mean the union does **not** always contain its operands
    /// under [`BnsSet::is_subset`].
    pub fn union(&self, other: &BnsSet) -> Result<BnsSet, SetError> {
        self.zip_with(other, |a, b| {
            Bnn::from_op(
                a.t_pos().max(b.t_pos()),
                midpoint(a.i_pos(), b.i_pos()),
                a.f_pos().min(b.f_pos()),
                a.t_neg().min(b.t_neg()),
                midpoint(a.i_neg(), b.i_neg()),
                a.f_neg().max(b.f_neg()),
            )
        })
    }

    /// Pointwise intersection: the order-dual of [`BnsSet::union`] with the
    /// same averaged indeterminacy components.
    pub fn intersection(&self, other: &BnsSet) -> Result<BnsSet, SetError> {
        self.zip_with(other, |a, b| {
            Bnn::from_op(
                a.t_pos().min(b.t_pos()),
                midpoint(a.i_pos(), b.i_pos()),
                a.f_pos().max(b.f_pos()),
                a.t_neg().max(b.t_neg()),
                midpoint(a.i_neg(), b.i_neg()),
                a.f_neg().min(b.f_neg()),
            )
        })
    }

    /// Applies [`Bnn::complement`] to every element. Involutive, and a De
    /// Morgan dual pair with union/intersection.
    pub fn complement(&self) -> BnsSet {
        BnsSet {
            labels: self.labels.clone(),
            values: self.values.iter().map(|v| v.complement()).collect(),
            index: self.index.clone(),
        }
    }

    /// True when, at every label, `self`'s value sits below `other`'s in
    /// the componentwise order: `t+`, `i+` no larger, `f+` no smaller on
    /// the positive side; `t-`, `i-` no smaller, `f-` no larger on the
    /// negative side.
    ///
    /// Note the direction for `i+`: a subset has *smaller* positive
    /// indeterminacy, unlike in the single-valued convention.
    pub fn is_subset(&self, other: &BnsSet) -> Result<bool, SetError> {
        if !self.same_universe(other) {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self.iter().all(|(label, a)| {
            let b = other.value(label).expect("universes match");
            a.t_pos() <= b.t_pos()
                && a.i_pos() <= b.i_pos()
                && a.f_pos() >= b.f_pos()
                && a.t_neg() >= b.t_neg()
                && a.i_neg() >= b.i_neg()
                && a.f_neg() <= b.f_neg()
        }))
    }

    /// True when every component of every element agrees within
    /// [`SET_EQUALITY_TOLERANCE`]. Universe order is irrelevant.
    pub fn equals(&self, other: &BnsSet) -> Result<bool, SetError> {
        if !self.same_universe(other) {
            return Err(SetError::UniverseMismatch);
        }
        Ok(self.iter().all(|(label, a)| {
            let b = other.value(label).expect("universes match");
            a.components()
                .iter()
                .zip(b.components())
                .all(|(x, y)| (x - y).abs() <= SET_EQUALITY_TOLERANCE)
        }))
    }
}

/// Left-associative union fold: `union(union(sets[0], sets[1]), sets[2])…`.
///
/// Because the indeterminacy components are averaged, the result **depends
/// on grouping**: folding in a different order can change the averages.
/// This function fixes left-to-right grouping; callers needing a different
/// grouping should fold explicitly.
pub fn union_all(sets: &[BnsSet]) -> Result<BnsSet, SetError> {
    let (first, rest) = sets.split_first().ok_or(SetError::EmptyFold)?;
    rest.iter().try_fold(first.clone(), |acc, s| acc.union(s))
}

/// Left-associative intersection fold; grouping-dependent exactly like
/// [`union_all`].
pub fn intersection_all(sets: &[BnsSet]) -> Result<BnsSet, SetError> {
    let (first, rest) = sets.split_first().ok_or(SetError::EmptyFold)?;
    rest.iter()
        .try_fold(first.clone(), |acc, s| acc.intersection(s))
}

fn midpoint(a: f64, b: f64) -> f64 {
    (a + b) / 2.0
}

/// A bipolar fuzzy set: each label carries a positive membership degree in
/// `[0, 1]` and a negative one in `[-1, 0]`. Embeds into [`BnsSet`] via
/// [`BipolarFuzzySet::to_bns`].
#[derive(Debug, Clone, PartialEq)]
pub struct BipolarFuzzySet {
    labels: Vec<String>,
    memberships: Vec<(f64, f64)>,
}

impl BipolarFuzzySet {
    /// Builds a bipolar fuzzy set from `(label, (mu_pos, mu_neg))` pairs in
    /// universe order.
    pub fn new<L, I>(memberships: I) -> Result<Self, SetError>
    where
        L: Into<String>,
        I: IntoIterator<Item = (L, (f64, f64))>,
    {
        let mut labels = Vec::new();
        let mut values = Vec::new();
        for (label, (mu_pos, mu_neg)) in memberships {
            let label: String = label.into();
            // Reuse the Bnn component checks: mu+ has t+'s range, mu- has t-'s.
            Bnn::new(mu_pos, 0.0, 0.0, mu_neg, 0.0, 0.0).map_err(|source| {
                SetError::Membership {
                    label: label.clone(),
                    source,
                }
            })?;
            if labels.contains(&label) {
                return Err(SetError::DuplicateLabel(label));
            }
            labels.push(label);
            values.push((mu_pos, mu_neg));
        }
        Ok(BipolarFuzzySet {
            labels,
            memberships: values,
        })
    }

    /// The universe labels in declaration order.
    pub fn universe(&self) -> &[String] {
        &self.labels
    }

    /// Membership pair `(mu_pos, mu_neg)` for `label`.
    pub fn value(&self, label: &str) -> Option<(f64, f64)> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.memberships[i])
    }

    /// Embeds into a full bipolar neutrosophic set: `mu_pos` becomes the
    /// positive truth, `mu_neg` the negative truth, and the four
    /// indeterminacy/falsity components are zero.
    pub fn to_bns(&self) -> BnsSet {
        let assignments = self
            .labels
            .iter()
            .zip(&self.memberships)
            .map(|(label, &(p, n))| {
                (
                    label.clone(),
                    Bnn::new(p, 0.0, 0.0, n, 0.0, 0.0).expect("validated on construction"),
                )
            });
        BnsSet::new(self.labels.clone(), assignments).expect("labels already distinct")
    }
}

/// A single-valued neutrosophic set: each label carries truth,
/// indeterminacy, and falsity degrees in `[0, 1]`. Embeds into [`BnsSet`]
/// via [`SvnSet::to_bns`].
#[derive(Debug, Clone, PartialEq)]
pub struct SvnSet {
    labels: Vec<String>,
    memberships: Vec<(f64, f64, f64)>,
}

impl SvnSet {
    /// Builds a single-valued neutrosophic set from `(label, (t, i, f))`
    /// triples in universe order.
    pub fn new<L, I>(memberships: I) -> Result<Self, SetError>
    where
        L: Into<String>,
        I: IntoIterator<Item = (L, (f64, f64, f64))>,
    {
        let mut labels = Vec::new();
        let mut values = Vec::new();
        for (label, (t, i, f)) in memberships {
            let label: String = label.into();
            Bnn::new(t, i, f, 0.0, 0.0, 0.0).map_err(|source| SetError::Membership {
                label: label.clone(),
                source,
            })?;
            if labels.contains(&label) {
                return Err(SetError::DuplicateLabel(label));
            }
            labels.push(label);
            values.push((t, i, f));
        }
        Ok(SvnSet {
            labels,
            memberships: values,
        })
    }

    /// The universe labels in declaration order.
    pub fn universe(&self) -> &[String] {
        &self.labels
    }

    /// Membership triple `(t, i, f)` for `label`.
    pub fn value(&self, label: &str) -> Option<(f64, f64, f64)> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.memberships[i])
    }

    /// Embeds into a bipolar neutrosophic set with all negative parts zero.
    pub fn to_bns(&self) -> BnsSet {
        let assignments = self
            .labels
            .iter()
            .zip(&self.memberships)
            .map(|(label, &(t, i, f))| {
                (
                    label.clone(),
                    Bnn::new(t, i, f, 0.0, 0.0, 0.0).expect("validated on construction"),
                )
            });
        BnsSet::new(self.labels.clone(), assignments).expect("labels already distinct")
    }
}
