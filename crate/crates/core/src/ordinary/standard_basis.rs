//! Standard bases in the truncated ring `Q[b][t] / (t-degree > n, b-weight > D)`.
//!
//! Coefficient generators are treated as extra variables, so every leading
//! coefficient is a nonzero rational. The term order is local in `t`: lowest
//! `t`-degree leads, ties broken by lex on `t` (lower ray index larger), then
//! lowest `b`-weight, then lex on `b`. All monomials above the truncation are
//! zero, so the quotient is finite dimensional and reduction terminates.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::coeff::{Coeff, CoeffRing, Rational};
use crate::monomial::Monomial;
use crate::series::GradedSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub t: Monomial,
    pub b: Monomial,
    tdeg: u32,
    bweight: u32,
}

impl Term {
    fn new(ring: &CoeffRing, t: Monomial, b: Monomial) -> Self {
        let tdeg = t.degree();
        let bweight = b.weighted_degree(|i| ring.weight(i));
        Self { t, b, tdeg, bweight }
    }

    fn divides(&self, other: &Term) -> bool {
        self.t.divides(&other.t) && self.b.divides(&other.b)
    }
}

impl Ord for Term {
    fn cmp(&self, o: &Self) -> Ordering {
        o.tdeg
            .cmp(&self.tdeg)
            .then_with(|| self.t.cmp(&o.t))
            .then_with(|| o.bweight.cmp(&self.bweight))
            .then_with(|| self.b.cmp(&o.b))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Truncation data shared by all polynomials of one computation.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Context {
    pub ring: CoeffRing,
    pub max_tdeg: u32,
}

impl Context {
    fn keeps(&self, t: &Term) -> bool {
        t.tdeg <= self.max_tdeg && t.bweight <= self.ring.bound && self.ring.keeps(&t.b)
    }

    fn term(&self, t: Monomial, b: Monomial) -> Term {
        Term::new(&self.ring, t, b)
    }
}

/// A polynomial in `t` and `b` over `Q`; the leading term is the largest key.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    terms: BTreeMap<Term, Rational>,
}

impl Poly {
    pub fn from_series(ctx: &Context, s: &GradedSeries) -> Self {
        let mut p = Poly::default();
        for (t, c) in s.terms() {
            for (b, q) in c.terms() {
                let term = ctx.term(t.clone(), b.clone());
                if ctx.keeps(&term) {
                    p.add(term, q.clone());
                }
            }
        }
        p
    }

    pub fn to_series(&self, ctx: &Context, nvars: usize) -> GradedSeries {
        let mut grouped: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (term, q) in &self.terms {
            grouped.entry(term.t.clone()).or_default().add_term(term.b.clone(), q.clone());
        }
        GradedSeries::from_terms(ctx.ring, nvars, ctx.max_tdeg, grouped)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(&Term, &Rational)> {
        self.terms.last_key_value()
    }

    fn add(&mut self, t: Term, c: Rational) {
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(t) {
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

    /// `self -= c * (t, b) * g`, truncated.
    fn sub_multiple(&mut self, ctx: &Context, c: &Rational, shift: &Term, g: &Poly) {
        for (gt, gc) in &g.terms {
            let term = ctx.term(gt.t.mul(&shift.t), gt.b.mul(&shift.b));
            if ctx.keeps(&term) {
                self.add(term, -(c * gc));
            }
        }
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.lead() {
            let inv = lc.recip();
            for v in self.terms.values_mut() {
                *v *= &inv;
            }
        }
    }
}

fn quotient(ctx: &Context, outer: &Term, inner: &Term) -> Term {
    ctx.term(inner.t.quotient_of(&outer.t).expect("divisible"), inner.b.quotient_of(&outer.b).expect("divisible"))
}

/// Full reduction of `p` by a list of monic polynomials.
pub(crate) fn reduce(ctx: &Context, mut p: Poly, basis: &[Poly]) -> Poly {
    let mut rem = Poly::default();
    while let Some((lt, lc)) = p.lead() {
        let (lt, lc) = (lt.clone(), lc.clone());
        let divisor = basis.iter().find(|g| g.lead().is_some_and(|(gl, _)| gl.divides(&lt)));
        match divisor {
            Some(g) => {
                let shift = quotient(ctx, &lt, g.lead().unwrap().0);
                p.sub_multiple(ctx, &lc, &shift, g);
            }
            None => {
                p.terms.remove(&lt);
                rem.add(lt, lc);
            }
        }
    }
    rem
}

fn s_poly(ctx: &Context, f: &Poly, g: &Poly) -> Option<Poly> {
    let (lf, _) = f.lead()?;
    let (lg, _) = g.lead()?;
    let l = ctx.term(lf.t.lcm(&lg.t), lf.b.lcm(&lg.b));
    if !ctx.keeps(&l) {
        return None;
    }
    let mut s = Poly::default();
    s.sub_multiple(ctx, &-Rational::one(), &quotient(ctx, &l, lf), f);
    s.sub_multiple(ctx, &Rational::one(), &quotient(ctx, &l, lg), g);
    Some(s)
}

/// Buchberger completion followed by interreduction. The result is monic,
/// sorted by leading term, and no leading term divides another.
pub(crate) fn complete(ctx: &Context, generators: impl IntoIterator<Item = Poly>) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |basis: &mut Vec<Poly>, pairs: &mut Vec<(usize, usize)>, mut p: Poly| {
        p.make_monic();
        let j = basis.len();
        pairs.extend((0..j).map(|i| (i, j)));
        basis.push(p);
    };
    for g in generators {
        let r = reduce(ctx, g, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let Some(s) = s_poly(ctx, &basis[i], &basis[j]) else { continue };
        let r = reduce(ctx, s, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }
    interreduce(ctx, basis)
}

fn interreduce(ctx: &Context, basis: Vec<Poly>) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (lg, _) = g.lead().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let (lh, _) = h.lead().expect("nonzero");
            j != i && lh.divides(lg) && (lh != lg || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let (lead_term, lc) = {
            let (t, c) = minimal[i].lead().unwrap();
            (t.clone(), c.clone())
        };
        let mut tail = minimal[i].clone();
        tail.terms.remove(&lead_term);
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let mut r = reduce(ctx, tail, &others);
        r.add(lead_term, lc);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| b.lead().unwrap().0.cmp(a.lead().unwrap().0));
    out
}
