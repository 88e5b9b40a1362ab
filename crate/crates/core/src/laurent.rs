//! Integer-coefficient Laurent polynomials in a single variable `t`.
//!
//! Coefficients are arbitrary precision. A polynomial is stored as its
//! nonzero terms sorted by exponent, so equal polynomials always have
//! identical representations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot evaluate at t = 0: polynomial has negative exponents")]
    PoleAtZero,
    #[error("invalid polynomial at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Above this exponent span, multiplication and division switch from dense
/// vectors to the sparse term map.
const DENSE_SPAN_LIMIT: i64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// `(exponent, coefficient)`, strictly increasing exponents, no zeros.
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_terms([(exp, c.into())])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((last, acc)) if *last == e => *acc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `t^(min_deg + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_deg: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (min_deg + i as i64, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(0, c)] if c.is_one())
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// `max_deg - min_deg`, the span of the support. `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_deg()? - self.min_deg()?)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.get(exp).cloned().unwrap_or_default()
    }

    fn get(&self, exp: i64) -> Option<&BigInt> {
        self.terms
            .binary_search_by_key(&exp, |&(e, _)| e)
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Shifts so that `min_deg = 0` and flips the sign so the leading
    /// coefficient is positive. Zero stays zero.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_deg() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -shifted
        } else {
            shifted
        }
    }

    /// Exact quotient `num / den` in `Z[t, t^-1]`, or `None` if `den` does
    /// not divide `self` with integer coefficients.
    ///
    /// Long division from the top degree. The quotient's lowest exponent is
    /// forced to be `min_deg(num) - min_deg(den)`, which bounds the loop.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let q = match self.span() {
            None => Some(Self::zero()),
            Some(span) if span <= DENSE_SPAN_LIMIT => self.divide_dense(den),
            Some(_) => self.divide_sparse(den),
        };
        if let Some(q) = &q {
            debug_assert_eq!(&(q * den), self, "exact division failed re-multiplication");
        }
        Ok(q)
    }

    fn divide_dense(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        let (num_lo, num_hi) = (self.min_deg()?, self.max_deg()?);
        let (den_lo, den_hi) = (den.min_deg()?, den.max_deg()?);
        let q_lo = num_lo - den_lo;
        let q_hi = num_hi - den_hi;
        if q_hi < q_lo {
            return None;
        }
        let den_lead = den.leading_coeff()?;
        let dense_den: Vec<(usize, &BigInt)> = den
            .terms()
            .map(|(e, c)| ((e - den_lo) as usize, c))
            .collect();
        let mut rem = vec![BigInt::zero(); (num_hi - num_lo + 1) as usize];
        for (e, c) in self.terms() {
            rem[(e - num_lo) as usize] = c.clone();
        }
        let mut quot = vec![BigInt::zero(); (q_hi - q_lo + 1) as usize];
        let den_span = (den_hi - den_lo) as usize;
        // quotient slot i pairs with remainder slot i + den_span
        for i in (0..quot.len()).rev() {
            let top = &rem[i + den_span];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(den_lead);
            if !r.is_zero() {
                return None;
            }
            for &(j, dc) in &dense_den {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(q_lo, quot))
    }

    fn divide_sparse(&self, den: &LaurentPoly) -> Option<LaurentPoly> {
        let (den_lo, den_hi) = (den.min_deg()?, den.max_deg()?);
        let num_lo = self.min_deg()?;
        let den_lead = den.leading_coeff()?;
        let q_lo = num_lo - den_lo;

        let mut rem: BTreeMap<i64, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&hi, lead)) = rem.iter().next_back() {
            let e = hi - den_hi;
            if e < q_lo {
                return None;
            }
            let (c, r) = lead.div_rem(den_lead);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in den.terms() {
                let entry = rem.entry(de + e).or_insert_with(BigInt::zero);
                *entry -= &c * dc;
                if entry.is_zero() {
                    rem.remove(&(de + e));
                }
            }
            quot.insert(e, c);
        }
        Some(Self {
            terms: quot.into_iter().collect(),
        })
    }

    /// Exact value at the integer `x`. Negative exponents are allowed for
    /// nonzero `x`.
    pub fn eval_int(&self, x: i64) -> Result<BigRational, LaurentError> {
        let Some(lo) = self.min_deg() else {
            return Ok(BigRational::zero());
        };
        if x == 0 {
            return match lo {
                lo if lo < 0 => Err(LaurentError::PoleAtZero),
                _ => Ok(BigRational::from_integer(self.coeff(0))),
            };
        }
        // Horner on t^-lo * p(t), then divide by x^-lo
        let base = lo.min(0);
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        let mut prev = self.max_deg().expect("nonzero");
        for (e, c) in self.terms().rev() {
            acc *= num_traits::pow(x.clone(), (prev - e) as usize);
            acc += c;
            prev = e;
        }
        acc *= num_traits::pow(x.clone(), (prev - base) as usize);
        let den = num_traits::pow(x, (-base) as usize);
        Ok(BigRational::new(acc, den))
    }

    /// Strict symmetry test: the coefficient sequence from `min_deg` to
    /// `max_deg` (gaps included) reads the same reversed. Zero is not
    /// palindromic.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_deg(), self.max_deg()) else {
            return false;
        };
        self.terms().all(|(e, c)| self.get(lo + hi - e) == Some(c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()).map(|(e, c)| (e, c.clone())))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (Some(a_lo), Some(b_lo)) = (self.min_deg(), rhs.min_deg()) else {
            return LaurentPoly::zero();
        };
        let span = self.span().unwrap_or(0) + rhs.span().unwrap_or(0);
        if span <= DENSE_SPAN_LIMIT {
            if let Some(out) = mul_small(self, rhs, a_lo, b_lo, span) {
                return out;
            }
            let mut out = vec![BigInt::zero(); span as usize + 1];
            for (ea, ca) in self.terms() {
                for (eb, cb) in rhs.terms() {
                    out[(ea - a_lo + eb - b_lo) as usize] += ca * cb;
                }
            }
            return LaurentPoly::from_coeffs(a_lo + b_lo, out);
        }
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                *out.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly::from_terms(out)
    }
}

/// Dense product in `i128` when every coefficient fits in `i64` and the
/// accumulated sums provably cannot overflow.
fn mul_small(
    a: &LaurentPoly,
    b: &LaurentPoly,
    a_lo: i64,
    b_lo: i64,
    span: i64,
) -> Option<LaurentPoly> {
    let small = |p: &LaurentPoly| -> Option<Vec<(usize, i64)>> {
        let lo = p.min_deg()?;
        p.terms()
            .map(|(e, c)| Some(((e - lo) as usize, c.to_i64()?)))
            .collect()
    };
    let (sa, sb) = (small(a)?, small(b)?);
    let max_abs = |v: &[(usize, i64)]| {
        v.iter()
            .map(|&(_, c)| c.unsigned_abs() as u128)
            .max()
            .unwrap_or(0)
    };
    let bound = max_abs(&sa)
        .checked_mul(max_abs(&sb))?
        .checked_mul(sa.len().min(sb.len()) as u128)?;
    if bound > i128::MAX as u128 {
        return None;
    }
    let mut out = vec![0i128; span as usize + 1];
    for &(ia, ca) in &sa {
        for &(ib, cb) in &sb {
            out[ia + ib] += ca as i128 * cb as i128;
        }
    }
    Some(LaurentPoly::from_coeffs(a_lo + b_lo, out))
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a LaurentPoly> for LaurentPoly {
    fn product<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * p)
    }
}

/// Renders as `t^6 - t^3 + 1`, highest exponent first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts sums of terms like `3t^2`, `3*t^-1`, `- t`, `7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse(mut self) -> Result<LaurentPoly, LaurentError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return self.err("expected '+' or '-'"),
            };
            first = false;
            let (exp, mut coeff) = self.term()?;
            if negative {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(i64, BigInt), LaurentError> {
        self.skip_ws();
        let coeff = self
            .digits()
            .map(|d| d.parse::<BigInt>().expect("ascii digits"));
        if self.peek() == Some(b'*') {
            if coeff.is_none() {
                return self.err("'*' without coefficient");
            }
            self.pos += 1;
            if self.peek() != Some(b't') {
                return self.err("expected 't' after '*'");
            }
        }
        if self.peek() != Some(b't') {
            return match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected coefficient or 't'"),
            };
        }
        self.pos += 1;
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if self.peek() != Some(b'^') {
            return Ok((1, coeff));
        }
        self.pos += 1;
        self.skip_ws();
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let Some(d) = self.digits() else {
            return self.err("expected exponent");
        };
        let Ok(e) = d.parse::<i64>() else {
            return self.err("exponent out of range");
        };
        Ok((if neg { -e } else { e }, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("t - 1") + p("1"), p("t"));
        assert_eq!(LaurentPoly::zero() + p("t^3 - 2"), p("t^3 - 2"));
        assert_eq!(p("t^2 - t + 1") + p("t - 1"), p("t^2"));
    }

    #[test]
    fn add_matches_termwise_oracle() {
        let a = p("t^2 - t + 1");
        let b = p("t - 1");
        let sum = &a + &b;
        for e in -2..5 {
            assert_eq!(sum.coeff(e), a.coeff(e) + b.coeff(e));
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("t + 1") * p("t - 1"), p("t^2 - 1"));
        assert_eq!(p("t^5 - 3t^-1") * LaurentPoly::one(), p("t^5 - 3t^-1"));
        assert_eq!(p("t^2 - t + 1") * p("t + 1"), p("t^3 + 1"));
    }

    #[test]
    fn divide_examples() {
        assert_eq!(
            p("t^9 + 1").divide_exact(&p("t^3 + 1")).unwrap(),
            Some(p("t^6 - t^3 + 1"))
        );
        let q = p("2t^4 - t^-3 + 7");
        assert_eq!(q.divide_exact(&q).unwrap(), Some(LaurentPoly::one()));
        assert_eq!(
            p("t^2 - t + 1")
                .divide_exact(&p("t^4 - t^3 + t^2 - t + 1"))
                .unwrap(),
            None
        );
    }

    #[test]
    fn wide_span_uses_sparse_path() {
        let big = LaurentPoly::from_terms([(200_000, 1), (0, -1)]);
        let small = LaurentPoly::from_terms([(100_000, 1), (0, -1)]);
        let q = big.divide_exact(&small).unwrap().unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(100_000, 1), (0, 1)]));
        assert_eq!(&q * &small, big);
        assert_eq!(
            small
                .divide_exact(&LaurentPoly::from_terms([(3, 1), (0, 1)]))
                .unwrap(),
            None
        );
    }

    #[test]
    fn divide_edge_cases() {
        assert_eq!(
            p("t").divide_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
        assert_eq!(
            LaurentPoly::zero().divide_exact(&p("t + 1")).unwrap(),
            Some(LaurentPoly::zero())
        );
        // monomials are units up to the coefficient
        assert_eq!(
            p("t^2 + t").divide_exact(&p("t^5")).unwrap(),
            Some(p("t^-3 + t^-4"))
        );
        // not divisible over Z even though it is over Q
        assert_eq!(p("t + 1").divide_exact(&p("2t + 2")).unwrap(), None);
        assert_eq!(p("2t + 2").divide_exact(&p("t + 1")).unwrap(), Some(p("2")));
        // nonzero remainder at the bottom
        assert_eq!(p("t^2 + 1").divide_exact(&p("t + 1")).unwrap(), None);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("t^2 - t + 1").eval_int(-1).unwrap(), int(3));
        assert_eq!(LaurentPoly::zero().eval_int(-1).unwrap(), int(0));
        assert_eq!(LaurentPoly::zero().eval_int(7).unwrap(), int(0));
        assert_eq!(p("t^6 - t^5 + t^3 - t + 1").eval_int(-1).unwrap(), int(3));
    }

    #[test]
    fn eval_negative_exponents_and_zero() {
        assert_eq!(
            p("t^-1 + 1").eval_int(2).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(p("t^-1 + 1").eval_int(0), Err(LaurentError::PoleAtZero));
        assert_eq!(p("t^3 + 5").eval_int(0).unwrap(), int(5));
    }

    #[test]
    fn palindromic_examples() {
        assert!(p("t^2 - t + 1").is_palindromic());
        assert!(!p("t - 1").is_palindromic());
        assert!(p("t^6 - t^3 + 1").is_palindromic());
        assert!(p("t^-2 + 3 + t^2").is_palindromic());
        assert!(!LaurentPoly::zero().is_palindromic());
    }

    #[test]
    fn palindromic_matches_reverse_oracle() {
        for s in [
            "t^6 - t^3 + 1",
            "t^6 - t^3 + 2",
            "t^4 + t",
            "5",
            "t^3 + t^2 + t + 1",
        ] {
            let poly = p(s);
            let lo = poly.min_deg().unwrap();
            let hi = poly.max_deg().unwrap();
            let dense: Vec<BigInt> = (lo..=hi).map(|e| poly.coeff(e)).collect();
            let mut rev = dense.clone();
            rev.reverse();
            assert_eq!(poly.is_palindromic(), dense == rev, "{s}");
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("t^6 - t^3 + 1").to_string(), "t^6 - t^3 + 1");
        assert_eq!(p("1 - t^3 + t^6").to_string(), "t^6 - t^3 + 1");
        assert_eq!(p("-2*t + 3t^-2 - 1").to_string(), "-2t - 1 + 3t^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("t - t"), LaurentPoly::zero());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("t t".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        let terms = vec![(3, 1), (-1, 4), (3, -1), (0, 0), (2, 5)];
        let a = LaurentPoly::from_terms(terms.clone());
        let b = LaurentPoly::from_terms(terms);
        assert_eq!(a, b);
        assert_eq!(a.terms().count(), 2);
        assert_eq!(p("-t^3 + t").normalized(), p("t^2 - 1"));
    }

    fn arb_poly(max_span: i64) -> impl Strategy<Value = LaurentPoly> {
        (
            -10i64..10,
            prop::collection::vec(-50i64..50, 0..=max_span as usize + 1),
        )
            .prop_map(|(lo, cs)| LaurentPoly::from_coeffs(lo, cs))
    }

    fn arb_nonzero(max_span: i64) -> impl Strategy<Value = LaurentPoly> {
        arb_poly(max_span).prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn dense_and_sparse_division_agree(a in arb_poly(12), b in arb_nonzero(6), c in arb_nonzero(5)) {
            let num = &a * &b;
            prop_assert_eq!(num.divide_dense(&b), num.divide_sparse(&b));
            prop_assert_eq!(a.divide_dense(&c), a.divide_sparse(&c));
        }

        #[test]
        fn divide_undoes_mul(a in arb_poly(60), b in arb_nonzero(60)) {
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), Some(a));
        }

        #[test]
        fn quotient_remultiplies(a in arb_poly(12), b in arb_nonzero(6)) {
            if let Some(q) = a.divide_exact(&b).unwrap() {
                prop_assert_eq!(&q * &b, a);
            }
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(20), b in arb_poly(20), x in prop_oneof![-5i64..0, 1i64..6]) {
            let lhs = (&a * &b).eval_int(x).unwrap();
            prop_assert_eq!(lhs, a.eval_int(x).unwrap() * b.eval_int(x).unwrap());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_poly(20)) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn mul_degree_is_additive(a in arb_nonzero(20), b in arb_nonzero(20)) {
            let prod = &a * &b;
            prop_assert_eq!(prod.max_deg().unwrap(), a.max_deg().unwrap() + b.max_deg().unwrap());
            prop_assert_eq!(prod.min_deg().unwrap(), a.min_deg().unwrap() + b.min_deg().unwrap());
        }
    }
}
