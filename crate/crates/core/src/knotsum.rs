//! Formal connected sums of torus knots and their concordance inverses.
//!
//! Expression grammar (whitespace insignificant):
//!
//! ```text
//! sum  := term ( '#' term )*
//! term := 'U' | [ '-' ] 'T(' int ',' int ')'
//! ```
//!
//! `-T(p,q)` is the reverse of the mirror of `T(p,q)`. `U` and `T(1,n)` are
//! the unknot and vanish from the sum.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotSumError {
    #[error("T({p},{q}) is not a knot: gcd({p},{q}) != 1")]
    NotCoprime { p: u64, q: u64 },
    #[error("torus knot parameters must be positive, got T({p},{q})")]
    NonPositive { p: i64, q: i64 },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

impl KnotSumError {
    /// Byte offset of a syntax error, if this is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            KnotSumError::Syntax { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One summand `±T(p,q)` with `2 <= p < q` and `gcd(p,q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusKnotFactor {
    p: u64,
    q: u64,
    sign: Sign,
}

impl TorusKnotFactor {
    /// Canonicalizes `(p,q)` to `p < q`. Returns `Ok(None)` for the unknot
    /// `T(1,n)`.
    pub fn new(p: i64, q: i64, sign: Sign) -> Result<Option<Self>, KnotSumError> {
        if p <= 0 || q <= 0 {
            return Err(KnotSumError::NonPositive { p, q });
        }
        let (p, q) = (p.min(q) as u64, p.max(q) as u64);
        if p.gcd(&q) != 1 {
            return Err(KnotSumError::NotCoprime { p, q });
        }
        if p == 1 {
            return Ok(None);
        }
        Ok(Some(Self { p, q, sign }))
    }

    /// Shorthand for a known-valid nontrivial factor. Panics otherwise.
    pub fn positive(p: u64, q: u64) -> Self {
        Self::new(p as i64, q as i64, Sign::Positive)
            .expect("valid torus knot")
            .expect("nontrivial torus knot")
    }

    pub fn negative(p: u64, q: u64) -> Self {
        Self::positive(p, q).mirror()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn is_two_strand(&self) -> bool {
        self.p == 2
    }

    pub fn mirror(self) -> Self {
        Self {
            sign: self.sign.flip(),
            ..self
        }
    }
}

impl fmt::Display for TorusKnotFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Negative {
            f.write_str("-")?;
        }
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// A reduced connected sum: a sorted multiset of factors with no
/// `T(p,q) # -T(p,q)` pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct KnotSum {
    factors: Vec<TorusKnotFactor>,
}

/// The partition `K = K+ # K- # K2-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// All positive factors.
    pub k_plus: KnotSum,
    /// Negative factors with `p >= 3`.
    pub k_minus_other: KnotSum,
    /// Negative factors `-T(2,q)`.
    pub k_minus_two: KnotSum,
}

impl KnotSum {
    pub fn unknot() -> Self {
        Self::default()
    }

    /// Sorts and cancels opposite pairs.
    pub fn from_factors(factors: impl IntoIterator<Item = TorusKnotFactor>) -> Self {
        // net multiplicity per (p,q)
        let mut net: BTreeMap<(u64, u64), i64> = BTreeMap::new();
        for f in factors {
            *net.entry((f.p, f.q)).or_default() += match f.sign {
                Sign::Positive => 1,
                Sign::Negative => -1,
            };
        }
        let mut out = Vec::new();
        for ((p, q), n) in net {
            let sign = if n > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            out.extend(std::iter::repeat_n(
                TorusKnotFactor { p, q, sign },
                n.unsigned_abs() as usize,
            ));
        }
        Self { factors: out }
    }

    pub fn factors(&self) -> &[TorusKnotFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The lone factor, if the sum has exactly one.
    pub fn single(&self) -> Option<TorusKnotFactor> {
        match self.factors.as_slice() {
            [f] => Some(*f),
            _ => None,
        }
    }

    pub fn positives(&self) -> impl Iterator<Item = &TorusKnotFactor> + '_ {
        self.factors.iter().filter(|f| f.is_positive())
    }

    pub fn negatives(&self) -> impl Iterator<Item = &TorusKnotFactor> + '_ {
        self.factors.iter().filter(|f| !f.is_positive())
    }

    pub fn is_two_strand(&self) -> bool {
        self.factors.iter().all(TorusKnotFactor::is_two_strand)
    }

    /// `-K`: every sign flipped.
    pub fn mirror(&self) -> Self {
        // flipping signs keeps the (p,q,sign) order since each (p,q) has one sign
        Self {
            factors: self.factors.iter().map(|f| f.mirror()).collect(),
        }
    }

    pub fn connected_sum(&self, other: &KnotSum) -> KnotSum {
        Self::from_factors(self.factors.iter().chain(other.factors.iter()).copied())
    }

    pub fn split(&self) -> Split {
        let pick = |pred: &dyn Fn(&TorusKnotFactor) -> bool| KnotSum {
            factors: self.factors.iter().copied().filter(|f| pred(f)).collect(),
        };
        Split {
            k_plus: pick(&|f| f.is_positive()),
            k_minus_other: pick(&|f| !f.is_positive() && !f.is_two_strand()),
            k_minus_two: pick(&|f| !f.is_positive() && f.is_two_strand()),
        }
    }
}

impl Split {
    pub fn reunite(&self) -> KnotSum {
        self.k_plus
            .connected_sum(&self.k_minus_other)
            .connected_sum(&self.k_minus_two)
    }
}

impl fmt::Display for KnotSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("U");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" # ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for KnotSum {
    type Err = KnotSumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<KnotSum, KnotSumError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    loop {
        if let Some(f) = parser.term()? {
            factors.push(f);
        }
        match parser.peek() {
            None => break,
            Some(b'#') => parser.pos += 1,
            Some(_) => return parser.err("expected '#' or end of input"),
        }
    }
    Ok(KnotSum::from_factors(factors))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, KnotSumError> {
        Err(KnotSumError::Syntax {
            pos: self.pos,
            msg: msg.to_owned(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), KnotSumError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn term(&mut self) -> Result<Option<TorusKnotFactor>, KnotSumError> {
        let sign = match self.peek() {
            Some(b'U') => {
                self.pos += 1;
                return Ok(None);
            }
            Some(b'-') => {
                self.pos += 1;
                Sign::Negative
            }
            _ => Sign::Positive,
        };
        self.expect(b'T')?;
        self.expect(b'(')?;
        let p = self.int()?;
        self.expect(b',')?;
        let q = self.int()?;
        self.expect(b')')?;
        TorusKnotFactor::new(p, q, sign)
    }

    fn int(&mut self) -> Result<i64, KnotSumError> {
        self.peek();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<i64>() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                if text.len() > 1 {
                    self.err("integer out of range")
                } else {
                    self.err("expected integer")
                }
            }
        }
    }
}
