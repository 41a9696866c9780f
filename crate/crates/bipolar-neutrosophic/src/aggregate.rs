//! Weighted aggregation of bipolar neutrosophic judgements.
//!
//! Two operators combine one [`Bnn`] per criterion into a single number per
//! alternative: [`weighted_average`] (the additive family) and
//! [`weighted_geometric`] (the multiplicative family). Both take a
//! validated [`WeightVector`] and satisfy idempotency, componentwise
//! boundedness and monotonicity, permutation invariance, and zero-weight
//! neutrality.

use std::fmt;

use crate::bnn::Bnn;

/// Tolerance on `|sum - 1|` when validating a [`WeightVector`].
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Errors raised when building a [`WeightVector`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeightError {
    /// At least one weight is required.
    #[error("weight list must not be empty")]
    Empty,
    /// A weight was NaN or infinite.
    #[error("weight {index} is not a finite number")]
    NonFinite { index: usize },
    /// A weight fell outside `[0, 1]`.
    #[error("weight {index} out of range: {value} (weights must lie in [0, 1])")]
    OutOfRange { index: usize, value: f64 },
    /// A raw weight passed to normalization was negative.
    #[error("weight {index} is negative: {value} (raw weights must be nonnegative)")]
    Negative { index: usize, value: f64 },
    /// The weights do not sum to 1 and normalization was not requested.
    #[error("weights sum to {sum}, not 1; normalize them explicitly if they are proportions")]
    SumNotOne { sum: f64 },
    /// All raw weights are zero, so there is nothing to normalize to.
    #[error("weights sum to zero and cannot be normalized")]
    ZeroSum,
}

/// Errors raised when aggregating a family of numbers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AggregateError {
    /// Aggregating zero items has no meaningful result.
    #[error("cannot aggregate an empty family")]
    EmptyFamily,
    /// One weight per item is required.
    #[error("family has {items} items but {weights} weights")]
    LengthMismatch { items: usize, weights: usize },
}

/// A validated list of criterion weights: non-empty, each in `[0, 1]`,
/// summing to 1 within [`WEIGHT_SUM_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validates `weights` as-is. Out-of-tolerance sums are errors, never
    /// silently rescaled; use [`WeightVector::normalized`] for proportions.
    pub fn new(weights: Vec<f64>) -> Result<Self, WeightError> {
        if weights.is_empty() {
            return Err(WeightError::Empty);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() {
                return Err(WeightError::NonFinite { index });
            }
            if !(0.0..=1.0).contains(&value) {
                return Err(WeightError::OutOfRange { index, value });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(WeightError::SumNotOne { sum });
        }
        Ok(WeightVector(weights))
    }

    /// Scales nonnegative raw weights by their sum so they sum to 1.
    pub fn normalized(raw: Vec<f64>) -> Result<Self, WeightError> {
        if raw.is_empty() {
            return Err(WeightError::Empty);
        }
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(WeightError::NonFinite { index });
            }
            if value < 0.0 {
                return Err(WeightError::Negative { index, value });
            }
        }
        let sum: f64 = raw.iter().sum();
        if sum == 0.0 {
            return Err(WeightError::ZeroSum);
        }
        Ok(WeightVector(raw.into_iter().map(|w| w / sum).collect()))
    }

    /// The uniform vector `[1/n; n]`.
    pub fn uniform(n: usize) -> Result<Self, WeightError> {
        if n == 0 {
            return Err(WeightError::Empty);
        }
        Ok(WeightVector(vec![1.0 / n as f64; n]))
    }

    /// Number of weights (always at least 1).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; the constructors reject empty vectors.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weights as a slice.
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Which of the two aggregation operators to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregationOp {
    /// The weighted-average family ([`weighted_average`]); the default
    /// choice for decision ranking.
    Average,
    /// The weighted-geometric family ([`weighted_geometric`]).
    Geometric,
}

impl AggregationOp {
    /// Lowercase name used in reports: `average` or `geometric`.
    pub fn name(self) -> &'static str {
        match self {
            AggregationOp::Average => "average",
            AggregationOp::Geometric => "geometric",
        }
    }

    /// Applies the chosen operator.
    pub fn apply(self, items: &[Bnn], weights: &WeightVector) -> Result<Bnn, AggregateError> {
        match self {
            AggregationOp::Average => weighted_average(items, weights),
            AggregationOp::Geometric => weighted_geometric(items, weights),
        }
    }
}

impl fmt::Display for AggregationOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Weighted product `∏ baseᵢ^{weightᵢ}` over bases in `[0, 1]`.
///
/// Zero-weight factors are skipped outright (the `x⁰ = 1` convention), so a
/// weight-0 criterion can never perturb the result — not even when its base
/// is 0. A zero base with positive weight makes the whole product 0.
/// Positive factors accumulate in the log domain, which keeps the round-off
/// of long products at a few ulps.
fn weighted_product(factors: impl Iterator<Item = (f64, f64)>) -> f64 {
    let mut log_sum = 0.0;
    for (base, weight) in factors {
        if weight == 0.0 {
            continue;
        }
        if base == 0.0 {
            return 0.0;
        }
        log_sum += weight * base.ln();
    }
    log_sum.exp()
}

fn check_family(items: &[Bnn], weights: &WeightVector) -> Result<(), AggregateError> {
    if items.is_empty() {
        return Err(AggregateError::EmptyFamily);
    }
    if items.len() != weights.len() {
        return Err(AggregateError::LengthMismatch {
            items: items.len(),
            weights: weights.len(),
        });
    }
    Ok(())
}

/// Weighted-average aggregation: the continuous extension of
/// `scale(w₁, a₁) + scale(w₂, a₂) + …` to fractional weights.
///
/// Componentwise: positive truth and both negative indeterminacy/falsity
/// magnitudes combine through complements of weighted products, the other
/// three components through weighted products directly.
pub fn weighted_average(items: &[Bnn], weights: &WeightVector) -> Result<Bnn, AggregateError> {
    check_family(items, weights)?;
    let w = weights.as_slice();
    let product =
        |f: &dyn Fn(&Bnn) -> f64| weighted_product(items.iter().map(f).zip(w.iter().copied()));
    Ok(Bnn::from_op(
        1.0 - product(&|a| 1.0 - a.t_pos()),
        product(&|a| a.i_pos()),
        product(&|a| a.f_pos()),
        -product(&|a| -a.t_neg()),
        -(1.0 - product(&|a| 1.0 - -a.i_neg())),
        -(1.0 - product(&|a| 1.0 - -a.f_neg())),
    ))
}

/// Weighted-geometric aggregation: the continuous extension of
/// `power(a₁, w₁) · power(a₂, w₂) · …`; the multiplicative dual of
/// [`weighted_average`].
pub fn weighted_geometric(items: &[Bnn], weights: &WeightVector) -> Result<Bnn, AggregateError> {
    check_family(items, weights)?;
    let w = weights.as_slice();
    let product =
        |f: &dyn Fn(&Bnn) -> f64| weighted_product(items.iter().map(f).zip(w.iter().copied()));
    Ok(Bnn::from_op(
        product(&|a| a.t_pos()),
        1.0 - product(&|a| 1.0 - a.i_pos()),
        1.0 - product(&|a| 1.0 - a.f_pos()),
        -(1.0 - product(&|a| 1.0 - -a.t_neg())),
        -product(&|a| -a.i_neg()),
        -product(&|a| -a.f_neg()),
    ))
}
