//! Truncated multivariate graded power series.
//!
//! Variables have degree 1 and coefficients live in a [`CoeffRing`]. A series
//! is truncated twice: monomials of degree above `poly_bound` are dropped, and
//! coefficient terms below degree `-ring.bound` are dropped. Binary operations
//! work at the smaller of the two operands' bounds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::coeff::{fmt_rational, Coeff, CoeffRing, Rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    ring: CoeffRing,
    nvars: usize,
    poly_bound: u32,
    terms: BTreeMap<Monomial, Coeff>,
}

impl GradedSeries {
    pub fn zero(ring: CoeffRing, nvars: usize, poly_bound: u32) -> Self {
        Self { ring, nvars, poly_bound, terms: BTreeMap::new() }
    }

    pub fn constant(ring: CoeffRing, nvars: usize, poly_bound: u32, c: Coeff) -> Self {
        let mut s = Self::zero(ring, nvars, poly_bound);
        s.add_term(Monomial::one(), c);
        s
    }

    pub fn one(ring: CoeffRing, nvars: usize, poly_bound: u32) -> Self {
        Self::constant(ring, nvars, poly_bound, Coeff::one())
    }

    /// The variable `x_i`.
    pub fn var(ring: CoeffRing, nvars: usize, poly_bound: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut s = Self::zero(ring, nvars, poly_bound);
        s.add_term(Monomial::var(i), Coeff::one());
        s
    }

    pub fn monomial(ring: CoeffRing, nvars: usize, poly_bound: u32, m: Monomial, c: Coeff) -> Self {
        assert!(m.support_len() <= nvars);
        let mut s = Self::zero(ring, nvars, poly_bound);
        s.add_term(m, c);
        s
    }

    /// Build from raw terms; out-of-range terms are truncated away.
    pub fn from_terms(
        ring: CoeffRing,
        nvars: usize,
        poly_bound: u32,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Self {
        let mut s = Self::zero(ring, nvars, poly_bound);
        for (m, c) in terms {
            assert!(m.support_len() <= nvars, "monomial uses undeclared variables");
            s.add_term(m, c);
        }
        s
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn poly_bound(&self) -> u32 {
        self.poly_bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one())
    }

    pub fn has_zero_constant_term(&self) -> bool {
        !self.terms.contains_key(&Monomial::one())
    }

    /// Lowest monomial degree present.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Add `c·m`, applying both truncations.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if m.degree() > self.poly_bound {
            return;
        }
        let c = c.truncate(&self.ring);
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Re-truncate at smaller bounds.
    pub fn truncate(&self, ring: CoeffRing, poly_bound: u32) -> Self {
        let ring = self.ring.meet(&ring).expect("truncation to a ring of a different kind");
        let poly_bound = poly_bound.min(self.poly_bound);
        let mut out = Self::zero(ring, self.nvars, poly_bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn meet(&self, other: &Self, op: &'static str) -> Result<(CoeffRing, u32)> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(op));
        }
        let ring = self.ring.meet(&other.ring).ok_or(Error::RingMismatch(op))?;
        Ok((ring, self.poly_bound.min(other.poly_bound)))
    }

    /// Equality after truncating both sides to common bounds.
    pub fn eq_truncated(&self, other: &Self) -> bool {
        match self.meet(other, "compare") {
            Ok((ring, p)) => self.truncate(ring, p).terms == other.truncate(ring, p).terms,
            Err(_) => false,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (ring, p) = self.meet(other, "add")?;
        let mut out = self.truncate(ring, p);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(), ..self.clone() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.ring, self.nvars, self.poly_bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(s));
        }
        out
    }

    pub fn scale_coeff(&self, s: &Coeff) -> Self {
        let mut out = Self::zero(self.ring, self.nvars, self.poly_bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(s, &self.ring));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (ring, p) = self.meet(other, "multiply")?;
        let mut out = Self::zero(ring, self.nvars, p);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > p {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > p {
                    continue;
                }
                let c = ca.mul(cb, &ring);
                if !c.is_zero() {
                    out.add_term(ma.mul(mb), c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ring, self.nvars, self.poly_bound);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Substitute `values[i]` for `x_i`. All values must share one ring and
    /// have zero constant term; the result lives in their variables.
    pub fn substitute(&self, values: &[GradedSeries]) -> Result<Self> {
        if values.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: values.len() });
        }
        if values.iter().any(|v| !v.has_zero_constant_term()) {
            return Err(Error::NonzeroConstantTerm);
        }
        let Some(first) = values.first() else {
            return Ok(self.clone());
        };
        let target_vars = first.nvars;
        let mut ring = self.ring;
        let mut p = self.poly_bound;
        for v in values {
            if v.nvars != target_vars {
                return Err(Error::RingMismatch("substitute"));
            }
            ring = ring.meet(&v.ring).ok_or(Error::RingMismatch("substitute"))?;
            p = p.min(v.poly_bound);
        }
        let values: Vec<GradedSeries> = values.iter().map(|v| v.truncate(ring, p)).collect();

        // powers[i][e] = values[i]^e, filled lazily
        let mut powers: Vec<Vec<GradedSeries>> =
            (0..self.nvars).map(|_| alloc::vec![GradedSeries::one(ring, target_vars, p)]).collect();
        let mut out = GradedSeries::zero(ring, target_vars, p);
        for (m, c) in &self.terms {
            if m.degree() > p {
                continue;
            }
            let mut term = GradedSeries::constant(ring, target_vars, p, c.clone());
            for (i, &e) in m.raw().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&values[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Embed into a ring with more variables via `x_i -> y_{map[i]}`.
    pub fn rename_vars(&self, map: &[usize], nvars: usize) -> Self {
        let mut out = Self::zero(self.ring, nvars, self.poly_bound);
        for (m, c) in &self.terms {
            let mut e = alloc::vec![0; nvars];
            for (i, &x) in m.raw().iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// Terms of monomial degree exactly `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
            ..self.clone()
        }
    }

    /// Terms whose total degree (monomial degree minus coefficient weight) is `k`.
    pub fn homogeneous_component(&self, k: i64) -> Self {
        let mut out = Self::zero(self.ring, self.nvars, self.poly_bound);
        for (m, c) in &self.terms {
            for (g, x) in c.terms() {
                let w = self.ring.monomial_weight(g).unwrap_or(0) as i64;
                if m.degree() as i64 - w == k {
                    out.add_term(m.clone(), Coeff::term(g.clone(), x.clone()));
                }
            }
        }
        out
    }

    /// Every term has total degree `k`.
    pub fn is_homogeneous_of(&self, k: i64) -> bool {
        self.terms.iter().all(|(m, c)| {
            c.terms().all(|(g, _)| m.degree() as i64 - self.ring.monomial_weight(g).unwrap_or(0) as i64 == k)
        })
    }

    /// Set every generator to zero, leaving the scalar slice.
    pub fn scalar_slice(&self) -> Self {
        let mut out = Self::zero(self.ring, self.nvars, self.poly_bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Coeff::scalar(c.scalar_part()));
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Coeff::is_integral)
    }

    /// Terms sorted by increasing degree, then descending lexicographic in the
    /// variable order (`x_1` before `x_2`).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        v
    }

    /// Display with variable names `name(i)`.
    pub fn display_with<'a, F: Fn(usize) -> String + 'a>(&'a self, name: F) -> impl fmt::Display + 'a {
        DisplaySeries { s: self, name }
    }

    /// Display as `t1, t2, ...`.
    pub fn display(&self) -> impl fmt::Display + '_ {
        self.display_with(|i| format!("t{}", i + 1))
    }
}

struct DisplaySeries<'a, F> {
    s: &'a GradedSeries,
    name: F,
}

impl<F: Fn(usize) -> String> fmt::Display for DisplaySeries<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = &self.s.ring;
        if self.s.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.s.sorted_terms().into_iter().enumerate() {
            let scalar = c.is_scalar();
            let neg = scalar && c.scalar_part().is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if scalar {
                let mag = c.scalar_part().abs();
                if m.is_one() {
                    fmt_rational(f, &mag)?;
                    continue;
                }
                if !mag.is_one() {
                    fmt_rational(f, &mag)?;
                    f.write_str("*")?;
                }
            } else {
                write!(f, "({})", c.display(ring))?;
                if m.is_one() {
                    continue;
                }
                f.write_str("*")?;
            }
            write!(f, "{}", m.display_with(&self.name))?;
        }
        Ok(())
    }
}
