//! Bipolar neutrosophic numbers and their algebra.
//!
//! A [`Bnn`] judges one item with six degrees at once: how much evidence
//! speaks *for* it (`t_pos`), how indeterminate that evidence is (`i_pos`),
//! how much speaks *against* it (`f_pos`), and three mirrored degrees for
//! implicit counter-evidence on the negative side (`t_neg`, `i_neg`,
//! `f_neg`). Positive components live in `[0, 1]`, negative components in
//! `[-1, 0]`.
//!
//! The module provides the arithmetic on such numbers (addition,
//! multiplication, scalar multiples, powers), the scalar summaries used to
//! order them (score, accuracy, certainty), the componentwise complement,
//! and the three-key comparison built from the summaries.

use std::fmt;

/// Absolute tolerance used by [`Bnn::compare`] when deciding that two
/// scalar summaries tie.
pub const DEFAULT_COMPARE_TOLERANCE: f64 = 1e-9;

/// Identifies one of the six components of a [`Bnn`] in error reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    TPos,
    IPos,
    FPos,
    TNeg,
    INeg,
    FNeg,
}

impl Component {
    /// Short display name, e.g. `t+` or `f-`.
    pub fn name(self) -> &'static str {
        match self {
            Component::TPos => "t+",
            Component::IPos => "i+",
            Component::FPos => "f+",
            Component::TNeg => "t-",
            Component::INeg => "i-",
            Component::FNeg => "f-",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors raised when constructing or transforming a [`Bnn`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BnnError {
    /// A component was outside its legal interval (`[0, 1]` for positive
    /// components, `[-1, 0]` for negative ones).
    #[error("component {component} out of range: {value}")]
    ComponentOutOfRange { component: Component, value: f64 },
    /// A component was NaN or infinite.
    #[error("component {component} is not a finite number")]
    NonFiniteComponent { component: Component },
    /// `scale` and `power` require a strictly positive exponent.
    #[error("lambda must be a positive finite number, got {lambda}")]
    NonPositiveLambda { lambda: f64 },
}

/// Result of comparing two numbers by (score, accuracy, certainty).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOrdering {
    /// The left operand ranks strictly better.
    Greater,
    /// The left operand ranks strictly worse.
    Less,
    /// All three summaries tie within the tolerance.
    Equal,
}

/// A bipolar neutrosophic number: three positive-side degrees in `[0, 1]`
/// and three negative-side degrees in `[-1, 0]`.
///
/// Values are validated on construction and every operation returns values
/// back inside those ranges, so a `Bnn` is always well formed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bnn {
    t_pos: f64,
    i_pos: f64,
    f_pos: f64,
    t_neg: f64,
    i_neg: f64,
    f_neg: f64,
}

/// Replaces `-0.0` with `+0.0` so that renderings and bitwise comparisons
/// are deterministic regardless of how a zero was produced.
fn normalize_zero(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

fn check_unit(component: Component, value: f64) -> Result<f64, BnnError> {
    if !value.is_finite() {
        return Err(BnnError::NonFiniteComponent { component });
    }
    if !(0.0..=1.0).contains(&value) {
        return Err(BnnError::ComponentOutOfRange { component, value });
    }
    Ok(normalize_zero(value))
}

fn check_negative_unit(component: Component, value: f64) -> Result<f64, BnnError> {
    if !value.is_finite() {
        return Err(BnnError::NonFiniteComponent { component });
    }
    if !(-1.0..=0.0).contains(&value) {
        return Err(BnnError::ComponentOutOfRange { component, value });
    }
    Ok(normalize_zero(value))
}

/// Probabilistic sum `a + b - a*b` of two degrees in `[0, 1]`.
fn prob_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

impl Bnn {
    /// Builds a number from its six components, rejecting out-of-range or
    /// non-finite values.
    ///
    /// Positive components must lie in `[0, 1]`, negative components in
    /// `[-1, 0]`. Negative zeros are normalized to `+0.0`.
    pub fn new(
        t_pos: f64,
        i_pos: f64,
        f_pos: f64,
        t_neg: f64,
        i_neg: f64,
        f_neg: f64,
    ) -> Result<Self, BnnError> {
        Ok(Bnn {
            t_pos: check_unit(Component::TPos, t_pos)?,
            i_pos: check_unit(Component::IPos, i_pos)?,
            f_pos: check_unit(Component::FPos, f_pos)?,
            t_neg: check_negative_unit(Component::TNeg, t_neg)?,
            i_neg: check_negative_unit(Component::INeg, i_neg)?,
            f_neg: check_negative_unit(Component::FNeg, f_neg)?,
        })
    }

    /// Internal constructor for operation results. The formulas are
    /// range-preserving in exact arithmetic; clamping only absorbs float
    /// round-off (a few ulps at the interval ends).
    pub(crate) fn from_op(
        t_pos: f64,
        i_pos: f64,
        f_pos: f64,
        t_neg: f64,
        i_neg: f64,
        f_neg: f64,
    ) -> Self {
        debug_assert!(
            [t_pos, i_pos, f_pos]
                .iter()
                .all(|v| (-1e-9..=1.0 + 1e-9).contains(v))
                && [t_neg, i_neg, f_neg]
                    .iter()
                    .all(|v| (-1.0 - 1e-9..=1e-9).contains(v)),
            "operation left its range by more than round-off: \
             ({t_pos}, {i_pos}, {f_pos}, {t_neg}, {i_neg}, {f_neg})"
        );
        Bnn {
            t_pos: normalize_zero(t_pos.clamp(0.0, 1.0)),
            i_pos: normalize_zero(i_pos.clamp(0.0, 1.0)),
            f_pos: normalize_zero(f_pos.clamp(0.0, 1.0)),
            t_neg: normalize_zero(t_neg.clamp(-1.0, 0.0)),
            i_neg: normalize_zero(i_neg.clamp(-1.0, 0.0)),
            f_neg: normalize_zero(f_neg.clamp(-1.0, 0.0)),
        }
    }

    /// Positive truth degree, in `[0, 1]`.
    pub fn t_pos(&self) -> f64 {
        self.t_pos
    }

    /// Positive indeterminacy degree, in `[0, 1]`.
    pub fn i_pos(&self) -> f64 {
        self.i_pos
    }

    /// Positive falsity degree, in `[0, 1]`.
    pub fn f_pos(&self) -> f64 {
        self.f_pos
    }

    /// Negative truth degree, in `[-1, 0]`.
    pub fn t_neg(&self) -> f64 {
        self.t_neg
    }

    /// Negative indeterminacy degree, in `[-1, 0]`.
    pub fn i_neg(&self) -> f64 {
        self.i_neg
    }

    /// Negative falsity degree, in `[-1, 0]`.
    pub fn f_neg(&self) -> f64 {
        self.f_neg
    }

    /// The six components in declaration order:
    /// `[t_pos, i_pos, f_pos, t_neg, i_neg, f_neg]`.
    pub fn components(&self) -> [f64; 6] {
        [
            self.t_pos, self.i_pos, self.f_pos, self.t_neg, self.i_neg, self.f_neg,
        ]
    }

    /// Disjunctive combination of two numbers.
    ///
    /// Positive truth combines as a probabilistic sum, positive
    /// indeterminacy and falsity multiply; the negative side mirrors this
    /// on component magnitudes. The neutral element is
    /// `⟨0, 1, 1, -1, 0, 0⟩`, and `a.add(a)` equals `a.scale(2.0)`.
    // Deliberately not `impl std::ops::Add`: this is a t-conorm, not a sum,
    // and the dedicated name keeps it parallel with `multiply`.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Bnn) -> Bnn {
        Bnn::from_op(
            prob_sum(self.t_pos, other.t_pos),
            self.i_pos * other.i_pos,
            self.f_pos * other.f_pos,
            -(self.t_neg * other.t_neg),
            -prob_sum(-self.i_neg, -other.i_neg),
            -prob_sum(-self.f_neg, -other.f_neg),
        )
    }

    /// Conjunctive combination of two numbers; the dual of [`Bnn::add`].
    ///
    /// The neutral element is `⟨1, 0, 0, 0, -1, -1⟩`, and `a.multiply(a)`
    /// equals `a.power(2.0)`.
    pub fn multiply(self, other: Bnn) -> Bnn {
        Bnn::from_op(
            self.t_pos * other.t_pos,
            prob_sum(self.i_pos, other.i_pos),
            prob_sum(self.f_pos, other.f_pos),
            -prob_sum(-self.t_neg, -other.t_neg),
            -(self.i_neg * other.i_neg),
            -(self.f_neg * other.f_neg),
        )
    }

    /// Scalar multiple: the continuous extension of repeated [`Bnn::add`],
    /// so `a.scale(2.0) == a.add(a)` and
    /// `a.scale(l + m) == a.scale(l).add(a.scale(m))` up to round-off.
    ///
    /// `lambda` must be strictly positive and finite.
    pub fn scale(self, lambda: f64) -> Result<Bnn, BnnError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(BnnError::NonPositiveLambda { lambda });
        }
        Ok(Bnn::from_op(
            1.0 - (1.0 - self.t_pos).powf(lambda),
            self.i_pos.powf(lambda),
            self.f_pos.powf(lambda),
            -(-self.t_neg).powf(lambda),
            -(1.0 - (1.0 - -self.i_neg).powf(lambda)),
            -(1.0 - (1.0 - -self.f_neg).powf(lambda)),
        ))
    }

    /// Power: the continuous extension of repeated [`Bnn::multiply`], so
    /// `a.power(2.0) == a.multiply(a)` and
    /// `a.power(l + m) == a.power(l).multiply(a.power(m))` up to round-off.
    ///
    /// `lambda` must be strictly positive and finite.
    pub fn power(self, lambda: f64) -> Result<Bnn, BnnError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(BnnError::NonPositiveLambda { lambda });
        }
        Ok(Bnn::from_op(
            self.t_pos.powf(lambda),
            1.0 - (1.0 - self.i_pos).powf(lambda),
            1.0 - (1.0 - self.f_pos).powf(lambda),
            -(1.0 - (1.0 - -self.t_neg).powf(lambda)),
            -(-self.i_neg).powf(lambda),
            -(-self.f_neg).powf(lambda),
        ))
    }

    /// Componentwise complement
    /// `⟨1-t+, 1-i+, 1-f+, -1-t-, -1-i-, -1-f-⟩`. Applying it twice gives
    /// the original number back (up to one rounding step per component).
    pub fn complement(self) -> Bnn {
        Bnn::from_op(
            1.0 - self.t_pos,
            1.0 - self.i_pos,
            1.0 - self.f_pos,
            -1.0 - self.t_neg,
            -1.0 - self.i_neg,
            -1.0 - self.f_neg,
        )
    }

    /// Overall desirability in `[0, 1]`; the primary ranking key.
    ///
    /// Averages the six components after orienting each one so that larger
    /// means better: positive truth and negative truth count as-is, the
    /// other four count inverted. `⟨1,0,0,0,-1,-1⟩` scores 1,
    /// `⟨0,1,1,-1,0,0⟩` scores 0.
    pub fn score(&self) -> f64 {
        (self.t_pos
            + (1.0 - self.i_pos)
            + (1.0 - self.f_pos)
            + (1.0 + self.t_neg)
            + -self.i_neg
            + -self.f_neg)
            / 6.0
    }

    /// Net truth-minus-falsity evidence in `[-2, 2]`; the first tiebreaker.
    pub fn accuracy(&self) -> f64 {
        self.t_pos - self.f_pos + self.t_neg - self.f_neg
    }

    /// Spread between positive truth and negative falsity, in `[0, 2]`;
    /// the second tiebreaker.
    pub fn certainty(&self) -> f64 {
        self.t_pos - self.f_neg
    }

    /// Compares two numbers with the default tie tolerance
    /// ([`DEFAULT_COMPARE_TOLERANCE`]).
    pub fn compare(&self, other: &Bnn) -> RankOrdering {
        self.compare_with_tolerance(other, DEFAULT_COMPARE_TOLERANCE)
    }

    /// Compares two numbers lexicographically by score, then accuracy,
    /// then certainty.
    ///
    /// Each key is compared with absolute tolerance `tolerance`: keys
    /// closer than that tie and the next key decides. Numbers for which
    /// all three keys tie are [`RankOrdering::Equal`].
    pub fn compare_with_tolerance(&self, other: &Bnn, tolerance: f64) -> RankOrdering {
        let keys = [
            (self.score(), other.score()),
            (self.accuracy(), other.accuracy()),
            (self.certainty(), other.certainty()),
        ];
        for (mine, theirs) in keys {
            if (mine - theirs).abs() > tolerance {
                return if mine > theirs {
                    RankOrdering::Greater
                } else {
                    RankOrdering::Less
                };
            }
        }
        RankOrdering::Equal
    }

    /// Canonical text form `⟨t+,i+,f+,t-,i-,f-⟩` with each component
    /// truncated toward zero to `precision` decimal places.
    ///
    /// Truncation (rather than rounding) keeps displayed values on the
    /// conservative side of the true value; `-0` never appears.
    pub fn render(&self, precision: usize) -> String {
        let parts: Vec<String> = self
            .components()
            .iter()
            .map(|&v| format_truncated(v, precision))
            .collect();
        format!("\u{27e8}{}\u{27e9}", parts.join(","))
    }
}

impl fmt::Display for Bnn {
    /// Formats with the default precision of 3 decimals; see [`Bnn::render`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(3))
    }
}

/// Formats `value` with exactly `precision` decimals, truncating toward
/// zero instead of rounding. `-0.000` is normalized to `0.000`.
pub(crate) fn format_truncated(value: f64, precision: usize) -> String {
    let scale = 10f64.powi(precision as i32);
    let truncated = normalize_zero((value * scale).trunc() / scale);
    format!("{truncated:.precision$}")
}
