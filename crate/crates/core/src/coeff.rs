//! Graded coefficient rings and their elements.
//!
//! Every supported ring is modeled as a polynomial ring over `Q` in weighted
//! generators of negative degree, truncated below a degree bound `D`:
//!
//! * additive: no generators (`Z`, trivially graded)
//! * multiplicative: one generator `beta` of degree -1
//! * universal (rational): `b_1..b_D` with `deg b_i = -i`
//!
//! Integral laws keep integer coefficients throughout; see [`Coeff::is_integral`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawKind {
    Additive,
    Multiplicative,
    UniversalRational,
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::Additive => "additive",
            LawKind::Multiplicative => "multiplicative",
            LawKind::UniversalRational => "universal",
        }
    }

    /// Coefficients stay in `Z[generators]`.
    pub fn is_integral(self) -> bool {
        !matches!(self, LawKind::UniversalRational)
    }
}

/// A coefficient ring together with its truncation bound: coefficients of
/// degree below `-bound` are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoeffRing {
    pub kind: LawKind,
    pub bound: u32,
}

impl CoeffRing {
    pub fn new(kind: LawKind, bound: u32) -> Self {
        Self { kind, bound }
    }

    pub fn additive() -> Self {
        Self::new(LawKind::Additive, 0)
    }

    pub fn num_generators(&self) -> usize {
        match self.kind {
            LawKind::Additive => 0,
            LawKind::Multiplicative => 1,
            LawKind::UniversalRational => self.bound as usize,
        }
    }

    /// Weight of generator `i` (its degree is the negative of this).
    pub fn weight(&self, i: usize) -> u32 {
        match self.kind {
            LawKind::Additive => 0,
            LawKind::Multiplicative => 1,
            LawKind::UniversalRational => i as u32 + 1,
        }
    }

    pub fn generator_name(&self, i: usize) -> String {
        match self.kind {
            LawKind::Multiplicative => String::from("beta"),
            _ => format!("b{}", i + 1),
        }
    }

    /// Weight of a generator monomial, or `None` if it uses generators the
    /// ring does not have.
    pub fn monomial_weight(&self, m: &Monomial) -> Option<u32> {
        if m.support_len() > self.num_generators() {
            return None;
        }
        Some(m.weighted_degree(|i| self.weight(i)))
    }

    pub fn keeps(&self, m: &Monomial) -> bool {
        self.monomial_weight(m).is_some_and(|w| w <= self.bound)
    }

    /// Common ring of two operands: same kind, smaller bound.
    pub fn meet(&self, other: &CoeffRing) -> Option<CoeffRing> {
        (self.kind == other.kind).then(|| CoeffRing::new(self.kind, self.bound.min(other.bound)))
    }
}

/// An element of a coefficient ring: a sparse polynomial in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coeff {
    terms: BTreeMap<Monomial, Rational>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(rat(n))
    }

    /// The generator `g_i` itself.
    pub fn generator(i: usize) -> Self {
        Self::term(Monomial::var(i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree-zero part.
    pub fn scalar_part(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Units of a truncated ring are exactly the elements with invertible
    /// scalar part; over `Z` that means `±1`.
    pub fn is_unit(&self, integral: bool) -> bool {
        let s = self.scalar_part();
        if integral {
            s.is_integer() && s.abs().is_one()
        } else {
            !s.is_zero()
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Part of degree exactly `-w`.
    pub fn component(&self, ring: &CoeffRing, w: u32) -> Coeff {
        Coeff {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| ring.monomial_weight(m) == Some(w))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Coeff) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Coeff) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn neg(&self) -> Coeff {
        Coeff { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Coeff {
        if s.is_zero() {
            return Coeff::zero();
        }
        Coeff { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// Product truncated in `ring`.
    pub fn mul(&self, other: &Coeff, ring: &CoeffRing) -> Coeff {
        let mut out = Coeff::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if ring.keeps(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Drop terms outside `ring`.
    pub fn truncate(&self, ring: &CoeffRing) -> Coeff {
        Coeff { terms: self.terms.iter().filter(|(m, _)| ring.keeps(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Substitute scalars for the generators.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.raw().iter().enumerate() {
                for _ in 0..e {
                    v *= &values[i];
                }
            }
            acc += v;
        }
        acc
    }

    pub fn display<'a>(&'a self, ring: &'a CoeffRing) -> impl fmt::Display + 'a {
        DisplayCoeff { c: self, ring }
    }

    /// Terms sorted by weight, then descending lexicographic.
    pub(crate) fn sorted_terms(&self, ring: &CoeffRing) -> alloc::vec::Vec<(&Monomial, &Rational)> {
        let mut v: alloc::vec::Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let wa = a.weighted_degree(|i| ring.weight(i));
            let wb = b.weighted_degree(|i| ring.weight(i));
            wa.cmp(&wb).then_with(|| b.cmp(a))
        });
        v
    }
}

pub(crate) fn fmt_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

struct DisplayCoeff<'a> {
    c: &'a Coeff,
    ring: &'a CoeffRing,
}

impl fmt::Display for DisplayCoeff<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.c.sorted_terms(self.ring).into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                fmt_rational(f, &mag)?;
            } else {
                if !mag.is_one() {
                    fmt_rational(f, &mag)?;
                    f.write_str("*")?;
                }
                write!(f, "{}", m.display_with(|i| self.ring.generator_name(i)))?;
            }
        }
        Ok(())
    }
}
