//! Double branched covers of two-strand sums as connected sums of lens
//! spaces.
//!
//! `Σ₂(T(2,q)) = L(q, q-1)` and `Σ₂(-T(2,q)) = L(q, 1)`. Reducedness is
//! decided only for summands of the forms `L(m,1)` and `L(m,m-1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::knotsum::{KnotSum, TorusKnotFactor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("double branched cover of {0} is not a lens space computed here; only T(2,q) factors are supported")]
    NotTwoStrand(TorusKnotFactor),
    #[error(
        "L({p},{q}) is not of the form L(m,1) or L(m,m-1); general reducedness is not supported"
    )]
    UnsupportedLensSpace { p: u64, q: u64 },
    #[error("invalid lens space L({p},{q}): need p >= 2, 1 <= q < p, gcd(p,q) = 1")]
    InvalidLensSpace { p: u64, q: u64 },
    #[error("cover is not reduced: {0}")]
    NotReduced(NonReduced),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self, CoverError> {
        if p < 2 || q == 0 || q >= p || p.gcd(&q) != 1 {
            return Err(CoverError::InvalidLensSpace { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `L(p, p-q)`.
    pub fn reversed(&self) -> Self {
        Self {
            p: self.p,
            q: self.p - self.q,
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LensSpaceSum {
    summands: Vec<LensSpace>,
}

impl LensSpaceSum {
    pub fn new(summands: impl IntoIterator<Item = LensSpace>) -> Self {
        let mut summands: Vec<_> = summands.into_iter().collect();
        summands.sort();
        Self { summands }
    }

    pub fn summands(&self) -> &[LensSpace] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

/// Renders `L(3,2) # L(7,1)`, or `S^3` when empty.
impl fmt::Display for LensSpaceSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("S^3");
        }
        for (i, l) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" # ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn double_branched_cover_two_strand(k: &KnotSum) -> Result<LensSpaceSum, CoverError> {
    let summands = k
        .factors()
        .iter()
        .map(|f| {
            if !f.is_two_strand() {
                return Err(CoverError::NotTwoStrand(*f));
            }
            let q = f.q();
            let r = if f.is_positive() { q - 1 } else { 1 };
            LensSpace::new(q, r)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LensSpaceSum::new(summands))
}

/// `|H₁|` of the sum: product of the `p` parameters.
pub fn h1_order(s: &LensSpaceSum) -> BigUint {
    s.summands
        .iter()
        .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.p))
}

/// Why a lens-space sum fails the scoped reducedness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonReduced {
    /// An `L(4,1)` summand.
    ContainsL41,
    /// Both `L(p,q)` and `L(p,p-q)` occur as distinct summands.
    CancellingPair(LensSpace),
}

impl fmt::Display for NonReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonReduced::ContainsL41 => f.write_str("contains L(4,1)"),
            NonReduced::CancellingPair(l) => write!(f, "contains {l} # {}", l.reversed()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reducedness {
    Reduced,
    NotReduced(NonReduced),
}

impl Reducedness {
    pub fn is_reduced(&self) -> bool {
        matches!(self, Reducedness::Reduced)
    }
}

pub fn is_reduced_scoped(s: &LensSpaceSum) -> Result<Reducedness, CoverError> {
    let mut counts: BTreeMap<LensSpace, usize> = BTreeMap::new();
    for l in &s.summands {
        if l.q != 1 && l.q != l.p - 1 {
            return Err(CoverError::UnsupportedLensSpace { p: l.p, q: l.q });
        }
        *counts.entry(*l).or_default() += 1;
    }
    if counts.keys().any(|l| l.p == 4) {
        // L(4,3) = -L(4,1)
        return Ok(Reducedness::NotReduced(NonReduced::ContainsL41));
    }
    for (l, &n) in &counts {
        let rev = l.reversed();
        // L(2,1) is its own reverse, so the pair needs two copies
        let paired = if rev == *l {
            n >= 2
        } else {
            counts.contains_key(&rev)
        };
        if paired {
            return Ok(Reducedness::NotReduced(NonReduced::CancellingPair(*l)));
        }
    }
    Ok(Reducedness::Reduced)
}

/// Whether `|H₁(Σ₂(k))|` divides `target`. The cover of `k` must pass the
/// scoped reducedness test.
pub fn h1_divides_check(k: &KnotSum, target: &BigUint) -> Result<bool, CoverError> {
    let cover = double_branched_cover_two_strand(k)?;
    if let Reducedness::NotReduced(why) = is_reduced_scoped(&cover)? {
        return Err(CoverError::NotReduced(why));
    }
    if target.is_zero() {
        return Ok(true);
    }
    Ok((target % h1_order(&cover)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> KnotSum {
        s.parse().unwrap()
    }

    fn lens(p: u64, q: u64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    fn sum(ls: &[(u64, u64)]) -> LensSpaceSum {
        LensSpaceSum::new(ls.iter().map(|&(p, q)| lens(p, q)))
    }

    #[test]
    fn cover_examples() {
        assert_eq!(
            double_branched_cover_two_strand(&k("T(2,5)")).unwrap(),
            sum(&[(5, 4)])
        );
        assert_eq!(
            double_branched_cover_two_strand(&k("-T(2,5)")).unwrap(),
            sum(&[(5, 1)])
        );
        let c = double_branched_cover_two_strand(&k("T(2,3) # -T(2,7)")).unwrap();
        assert_eq!(c, sum(&[(3, 2), (7, 1)]));
        assert_eq!(c.to_string(), "L(3,2) # L(7,1)");
        assert_eq!(
            double_branched_cover_two_strand(&KnotSum::unknot())
                .unwrap()
                .to_string(),
            "S^3"
        );
    }

    #[test]
    fn cover_rejects_higher_strands() {
        assert_eq!(
            double_branched_cover_two_strand(&k("T(2,3) # T(3,4)")),
            Err(CoverError::NotTwoStrand(TorusKnotFactor::positive(3, 4)))
        );
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_order(&sum(&[(5, 4)])), 5u32.into());
        assert_eq!(h1_order(&LensSpaceSum::default()), 1u32.into());
        assert_eq!(h1_order(&sum(&[(3, 2), (7, 1)])), 21u32.into());
    }

    #[test]
    fn lens_space_validation() {
        assert!(LensSpace::new(1, 0).is_err());
        assert!(LensSpace::new(5, 5).is_err());
        assert!(LensSpace::new(6, 3).is_err());
        assert!(LensSpace::new(5, 0).is_err());
    }

    #[test]
    fn reducedness_examples() {
        assert_eq!(
            is_reduced_scoped(&sum(&[(4, 1)])).unwrap(),
            Reducedness::NotReduced(NonReduced::ContainsL41)
        );
        assert!(is_reduced_scoped(&sum(&[(5, 1)])).unwrap().is_reduced());
        assert_eq!(
            is_reduced_scoped(&sum(&[(5, 4), (5, 1)])).unwrap(),
            Reducedness::NotReduced(NonReduced::CancellingPair(lens(5, 1)))
        );
    }

    #[test]
    fn reducedness_edge_cases() {
        assert!(is_reduced_scoped(&LensSpaceSum::default())
            .unwrap()
            .is_reduced());
        assert!(is_reduced_scoped(&sum(&[(2, 1)])).unwrap().is_reduced());
        assert!(!is_reduced_scoped(&sum(&[(2, 1), (2, 1)]))
            .unwrap()
            .is_reduced());
        assert!(!is_reduced_scoped(&sum(&[(4, 3)])).unwrap().is_reduced());
        assert!(is_reduced_scoped(&sum(&[(7, 1), (7, 1), (3, 2)]))
            .unwrap()
            .is_reduced());
        for m in 2..40 {
            assert_eq!(
                is_reduced_scoped(&sum(&[(m, 1)])).unwrap().is_reduced(),
                m != 4,
                "L({m},1)"
            );
        }
        assert_eq!(
            is_reduced_scoped(&sum(&[(7, 3)])),
            Err(CoverError::UnsupportedLensSpace { p: 7, q: 3 })
        );
    }

    #[test]
    fn h1_divides_examples() {
        assert!(h1_divides_check(&k("T(2,3) # -T(2,5)"), &15u32.into()).unwrap());
        assert!(!h1_divides_check(&k("T(2,3)"), &5u32.into()).unwrap());
        assert!(h1_divides_check(&KnotSum::unknot(), &7u32.into()).unwrap());
        assert!(h1_divides_check(&k("T(3,5)"), &1u32.into()).is_err());
    }
}
