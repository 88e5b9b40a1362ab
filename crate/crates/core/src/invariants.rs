//! Alexander polynomials and determinants of torus knots and their sums.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::knotsum::{KnotSum, TorusKnotFactor};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("T({p},{q}) needs p, q >= 2 and gcd(p, q) = 1")]
    InvalidTorusKnot { p: u64, q: u64 },
}

/// `t^n - 1`
fn t_pow_minus_one(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms([(n as i64, 1), (0, -1)])
}

/// Alexander polynomial of `T(p,q)`:
/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized with constant
/// term 1 and degree `(p-1)(q-1)`.
pub fn torus_alexander(p: u64, q: u64) -> Result<LaurentPoly, InvariantError> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(InvariantError::InvalidTorusKnot { p, q });
    }
    Ok(cached(p, q).alexander)
}

#[derive(Clone)]
struct TorusInvariants {
    alexander: LaurentPoly,
    determinant: BigUint,
}

static CACHE: OnceLock<RwLock<HashMap<(u64, u64), TorusInvariants>>> = OnceLock::new();

fn cached(p: u64, q: u64) -> TorusInvariants {
    let key = (p.min(q), p.max(q));
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let alexander = torus_alexander_uncached(key.0, key.1);
    let determinant = abs_at_minus_one(&alexander);
    let entry = TorusInvariants {
        alexander,
        determinant,
    };
    cache
        .write()
        .expect("cache lock")
        .insert(key, entry.clone());
    entry
}

fn torus_alexander_uncached(p: u64, q: u64) -> LaurentPoly {
    let num = &t_pow_minus_one(p * q) * &t_pow_minus_one(1);
    let den = &t_pow_minus_one(p) * &t_pow_minus_one(q);
    num.divide_exact(&den)
        .expect("nonzero divisor")
        .expect("cyclotomic quotient is exact")
}

pub fn factor_alexander(f: &TorusKnotFactor) -> LaurentPoly {
    torus_alexander(f.p(), f.q()).expect("factor invariants hold")
}

/// The formal quotient `prod Δ(K+) / prod Δ(K-)` over positive and negative
/// factors. Signs only decide which side a factor lands on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderFraction {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
}

impl AlexanderFraction {
    /// Exact polynomial quotient, if one exists.
    pub fn quotient(&self) -> Option<LaurentPoly> {
        self.numerator
            .divide_exact(&self.denominator)
            .expect("denominator is a nonzero product")
            .map(|q| q.normalized())
    }
}

pub fn alexander_fraction(k: &KnotSum) -> AlexanderFraction {
    AlexanderFraction {
        numerator: k.positives().map(factor_alexander).product(),
        denominator: k.negatives().map(factor_alexander).product(),
    }
}

/// Alexander polynomial of the whole sum, ignoring signs.
pub fn alexander_sum(k: &KnotSum) -> LaurentPoly {
    k.factors().iter().map(factor_alexander).product()
}

/// `|Δ(-1)|` of a polynomial with nonnegative exponents, as an integer.
pub fn abs_at_minus_one(p: &LaurentPoly) -> BigUint {
    let v = p.eval_int(-1).expect("nonzero evaluation point");
    debug_assert!(v.is_integer());
    v.to_integer().abs().to_biguint().expect("absolute value")
}

/// `det T(p,q) = |Δ(-1)|`; mirror-blind.
pub fn determinant_factor(f: &TorusKnotFactor) -> BigUint {
    cached(f.p(), f.q()).determinant
}

/// Product of factor determinants; 1 for the unknot.
pub fn determinant_sum(k: &KnotSum) -> BigUint {
    k.factors()
        .iter()
        .map(determinant_factor)
        .fold(BigUint::one(), |acc, d| acc * d)
}
