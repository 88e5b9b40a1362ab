//! Decision pipeline: runs every implemented obstruction against a reduced
//! sum and reports a [`Verdict`].
//!
//! Only necessary conditions are available, so a sum that survives every
//! check is `Inconclusive`. `Concordant` is reserved for the unknot and a
//! single positive torus knot, which is itself an L-space knot.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::invariants::{abs_at_minus_one, alexander_fraction, determinant_sum};
use crate::knotsum::{KnotSum, TorusKnotFactor};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    Concordant,
    Obstructed,
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Concordant => "Concordant",
            Status::Obstructed => "Obstructed",
            Status::Inconclusive => "Inconclusive",
        }
    }
}

/// One fired obstruction, with the data that triggered it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", content = "params")]
pub enum ReasonCode {
    /// More than one torus knot, all positive.
    PositiveSumMultiple { factors: usize },
    /// Only `±T(2,q)` factors, and not a single positive one.
    TwoStrandNotSingle { positive: usize, negative: usize },
    /// `det(K+) / det(K-)` is not an integer.
    DeterminantRatioNotInteger {
        #[serde(serialize_with = "big")]
        det_plus: BigUint,
        #[serde(serialize_with = "big")]
        det_minus: BigUint,
    },
    /// `prod Δ(K+) / prod Δ(K-)` is not a Laurent polynomial.
    AlexanderQuotientNotPolynomial {
        numerator_degree: i64,
        denominator_degree: i64,
    },
    /// `det(K2-)` does not divide `det(K+)`.
    DivisibilityFailsThm32 {
        #[serde(serialize_with = "big")]
        det_minus_two: BigUint,
        #[serde(serialize_with = "big")]
        det_plus: BigUint,
    },
    /// `K2-` nontrivial while `det(K+) = 1`.
    DetOneCorollary {
        #[serde(serialize_with = "big")]
        det_minus_two: BigUint,
    },
}

impl ReasonCode {
    pub fn code(&self) -> &'static str {
        match self {
            ReasonCode::PositiveSumMultiple { .. } => "PositiveSumMultiple",
            ReasonCode::TwoStrandNotSingle { .. } => "TwoStrandNotSingle",
            ReasonCode::DeterminantRatioNotInteger { .. } => "DeterminantRatioNotInteger",
            ReasonCode::AlexanderQuotientNotPolynomial { .. } => "AlexanderQuotientNotPolynomial",
            ReasonCode::DivisibilityFailsThm32 { .. } => "DivisibilityFailsThm32",
            ReasonCode::DetOneCorollary { .. } => "DetOneCorollary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Unknot,
    TorusKnot {
        #[serde(serialize_with = "display")]
        knot: TorusKnotFactor,
    },
    /// `divisor` fails to divide `dividend`.
    Divisibility {
        #[serde(serialize_with = "big")]
        divisor: BigUint,
        #[serde(serialize_with = "big")]
        dividend: BigUint,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(serialize_with = "display")]
    pub input: KnotSum,
    pub status: Status,
    pub reasons: Vec<ReasonCode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "display_opt"
    )]
    pub candidate_alexander: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_opt")]
    pub candidate_determinant: Option<BigUint>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }

    pub fn fired(&self, code: &str) -> bool {
        self.reasons.iter().any(|r| r.code() == code)
    }
}

// Exact integers go out as JSON numbers of any size.
fn big<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    let num: serde_json::Number = n.to_string().parse().expect("decimal digits");
    num.serialize(s)
}

fn big_opt<S: Serializer>(n: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    big(n.as_ref().expect("skipped when absent"), s)
}

fn display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_opt<T: std::fmt::Display, S: Serializer>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    display(v.as_ref().expect("skipped when absent"), s)
}

fn positive_part(k: &KnotSum) -> KnotSum {
    KnotSum::from_factors(k.positives().copied())
}

fn negative_part(k: &KnotSum) -> KnotSum {
    KnotSum::from_factors(k.negatives().copied())
}

/// The forced Alexander polynomial of a concordant L-space knot, when the
/// sum has factors of both signs and the quotient is a polynomial.
pub fn candidate_alexander(k: &KnotSum) -> Option<LaurentPoly> {
    alexander_fraction(k).quotient()
}

/// `det(K+) / det(K-)` when it is an integer.
pub fn candidate_determinant(k: &KnotSum) -> Option<BigUint> {
    let (quot, rem) =
        determinant_sum(&positive_part(k)).div_rem(&determinant_sum(&negative_part(k)));
    rem.is_zero().then_some(quot)
}

pub fn check_positive_sum(k: &KnotSum) -> Option<ReasonCode> {
    (k.len() > 1 && k.negatives().next().is_none())
        .then_some(ReasonCode::PositiveSumMultiple { factors: k.len() })
}

pub fn check_two_strand(k: &KnotSum) -> Option<ReasonCode> {
    let single_positive = k.single().is_some_and(|f| f.is_positive());
    if k.is_empty() || single_positive || !k.is_two_strand() {
        return None;
    }
    Some(ReasonCode::TwoStrandNotSingle {
        positive: k.positives().count(),
        negative: k.negatives().count(),
    })
}

pub fn check_divisibility(k: &KnotSum) -> Option<ReasonCode> {
    let split = k.split();
    let det_plus = determinant_sum(&split.k_plus);
    let det_minus_two = determinant_sum(&split.k_minus_two);
    (!det_plus.is_multiple_of(&det_minus_two)).then_some(ReasonCode::DivisibilityFailsThm32 {
        det_minus_two,
        det_plus,
    })
}

pub fn check_corollary_det_one(k: &KnotSum) -> Option<ReasonCode> {
    let split = k.split();
    if split.k_minus_two.is_empty() || !determinant_sum(&split.k_plus).is_one() {
        return None;
    }
    Some(ReasonCode::DetOneCorollary {
        det_minus_two: determinant_sum(&split.k_minus_two),
    })
}

/// Applies every check in cheapest-first order and collects all that fire.
pub fn evaluate(k: &KnotSum) -> Verdict {
    let mut verdict = Verdict {
        input: k.clone(),
        status: Status::Inconclusive,
        reasons: Vec::new(),
        witness: None,
        candidate_alexander: None,
        candidate_determinant: None,
    };
    if k.is_empty() {
        verdict.status = Status::Concordant;
        verdict.witness = Some(Witness::Unknot);
        return verdict;
    }
    if let Some(f) = k.single().filter(|f| f.is_positive()) {
        verdict.status = Status::Concordant;
        verdict.witness = Some(Witness::TorusKnot { knot: f });
        return verdict;
    }

    let mut reasons = Vec::new();
    reasons.extend(check_positive_sum(k));
    reasons.extend(check_two_strand(k));

    verdict.candidate_determinant = candidate_determinant(k);
    if verdict.candidate_determinant.is_none() {
        reasons.push(ReasonCode::DeterminantRatioNotInteger {
            det_plus: determinant_sum(&positive_part(k)),
            det_minus: determinant_sum(&negative_part(k)),
        });
    }

    let both_signs = k.positives().next().is_some() && k.negatives().next().is_some();
    if both_signs {
        let fraction = alexander_fraction(k);
        verdict.candidate_alexander = fraction.quotient();
        if verdict.candidate_alexander.is_none() {
            reasons.push(ReasonCode::AlexanderQuotientNotPolynomial {
                numerator_degree: fraction.numerator.max_deg().unwrap_or(0),
                denominator_degree: fraction.denominator.max_deg().unwrap_or(0),
            });
        }
    }

    reasons.extend(check_divisibility(k));
    reasons.extend(check_corollary_det_one(k));

    verdict.witness = reasons.iter().find_map(|r| match r {
        ReasonCode::DivisibilityFailsThm32 {
            det_minus_two,
            det_plus,
        } => Some(Witness::Divisibility {
            divisor: det_minus_two.clone(),
            dividend: det_plus.clone(),
        }),
        _ => None,
    });
    if verdict.witness.is_none() {
        verdict.witness = reasons.iter().find_map(|r| match r {
            ReasonCode::DeterminantRatioNotInteger {
                det_plus,
                det_minus,
            } => Some(Witness::Divisibility {
                divisor: det_minus.clone(),
                dividend: det_plus.clone(),
            }),
            _ => None,
        });
    }

    if let (Some(p), Some(d)) = (&verdict.candidate_alexander, &verdict.candidate_determinant) {
        debug_assert_eq!(&abs_at_minus_one(p), d);
    }
    verdict.status = if reasons.is_empty() {
        Status::Inconclusive
    } else {
        Status::Obstructed
    };
    verdict.reasons = reasons;
    verdict
}
