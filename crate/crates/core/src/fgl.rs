//! Formal group laws over truncated graded coefficient rings.
//!
//! A law is a two-variable series `F(u, v)` of total degree 1 satisfying
//! `F(u, 0) = u`, commutativity, associativity and the existence of a formal
//! inverse. Three laws are provided: additive `u + v`, multiplicative
//! `u + v - beta·u·v`, and the universal law over `Q[b_1, b_2, ...]`
//! presented through its logarithm `u + Σ b_i u^{i+1}`.

use alloc::vec::Vec;

use crate::coeff::{rat, Coeff, CoeffRing, LawKind};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::series::GradedSeries;

/// `[n]_F u` is precomputed for `|n|` up to this value.
const PRECOMPUTED_MULTIPLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalGroupLaw {
    ring: CoeffRing,
    poly_bound: u32,
    sum: GradedSeries,
    inverse: GradedSeries,
    logarithm: Option<GradedSeries>,
    /// `multiples[n] = [n]_F u` and `negatives[n] = [-n]_F u` in one variable.
    multiples: Vec<GradedSeries>,
    negatives: Vec<GradedSeries>,
}

/// Outcome of checking the group law axioms up to truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub identity: bool,
    pub commutative: bool,
    pub associative: bool,
    pub inverse: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.identity && self.commutative && self.associative && self.inverse
    }
}

impl FormalGroupLaw {
    /// Build the law of the given kind at coefficient bound `coeff_bound` and
    /// monomial-degree bound `poly_bound`.
    pub fn new(kind: LawKind, coeff_bound: u32, poly_bound: u32) -> Self {
        let ring = CoeffRing::new(kind, coeff_bound);
        let p = poly_bound;
        let u = GradedSeries::var(ring, 2, p, 0);
        let v = GradedSeries::var(ring, 2, p, 1);
        let (sum, logarithm) = match kind {
            LawKind::Additive => (u.add(&v).expect("same ring"), None),
            LawKind::Multiplicative => {
                let uv = u.mul(&v).expect("same ring");
                let f = u.add(&v).and_then(|s| s.sub(&uv.scale_coeff(&Coeff::generator(0)))).expect("same ring");
                (f, None)
            }
            LawKind::UniversalRational => {
                let log = universal_logarithm(ring, p);
                let exp = reversion(&log);
                let log_u = log.substitute(&[u.clone()]).expect("no constant term");
                let log_v = log.substitute(&[v.clone()]).expect("no constant term");
                let f = exp.substitute(&[log_u.add(&log_v).expect("same ring")]).expect("no constant term");
                (f, Some(log))
            }
        };
        let inverse = solve_inverse(&sum);
        let mut law = Self { ring, poly_bound: p, sum, inverse, logarithm, multiples: Vec::new(), negatives: Vec::new() };

        let x = GradedSeries::var(ring, 1, p, 0);
        let mut multiples = alloc::vec![GradedSeries::zero(ring, 1, p), x.clone()];
        for n in 2..=PRECOMPUTED_MULTIPLES {
            let next = law.add(&multiples[n - 1], &x).expect("same ring");
            multiples.push(next);
        }
        let negatives = multiples
            .iter()
            .map(|m| m.substitute(core::slice::from_ref(&law.inverse)).expect("no constant term"))
            .collect();
        law.multiples = multiples;
        law.negatives = negatives;
        law
    }

    pub fn kind(&self) -> LawKind {
        self.ring.kind
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn coeff_bound(&self) -> u32 {
        self.ring.bound
    }

    pub fn poly_bound(&self) -> u32 {
        self.poly_bound
    }

    /// `F(u, v)` in two variables.
    pub fn series(&self) -> &GradedSeries {
        &self.sum
    }

    /// `ι(u)` in one variable.
    pub fn inverse_series(&self) -> &GradedSeries {
        &self.inverse
    }

    /// The logarithm, for the universal law.
    pub fn logarithm(&self) -> Option<&GradedSeries> {
        self.logarithm.as_ref()
    }

    /// `x +_F y`.
    pub fn add(&self, x: &GradedSeries, y: &GradedSeries) -> Result<GradedSeries> {
        self.sum.substitute(&[x.clone(), y.clone()])
    }

    /// `x -_F y = x +_F ι(y)`.
    pub fn sub(&self, x: &GradedSeries, y: &GradedSeries) -> Result<GradedSeries> {
        self.add(x, &self.inverse(y)?)
    }

    /// `ι(x) = [-1]_F x`.
    pub fn inverse(&self, x: &GradedSeries) -> Result<GradedSeries> {
        self.inverse.substitute(core::slice::from_ref(x))
    }

    /// `[n]_F u` as a series in one variable.
    pub fn multiple_series(&self, n: i64) -> GradedSeries {
        let table = if n >= 0 { &self.multiples } else { &self.negatives };
        let k = n.unsigned_abs() as usize;
        if k < table.len() {
            return table[k].clone();
        }
        // [k] = [top] +_F [k - top], folded from the table
        let top = table.len() - 1;
        let mut acc = table[k % top].clone();
        for _ in 0..k / top {
            acc = self.add(&acc, &table[top]).expect("same ring");
        }
        acc
    }

    /// `[n]_F x`.
    pub fn n_series(&self, n: i64, x: &GradedSeries) -> Result<GradedSeries> {
        if !x.has_zero_constant_term() {
            return Err(Error::NonzeroConstantTerm);
        }
        if x.ring().kind != self.ring.kind {
            return Err(Error::RingMismatch("n-series"));
        }
        if n == 0 {
            return Ok(GradedSeries::zero(x.ring(), x.nvars(), x.poly_bound()));
        }
        if n == 1 {
            return Ok(x.truncate(self.ring, self.poly_bound));
        }
        if let Some(i) = as_variable(x) {
            let ring = self.ring.meet(&x.ring()).ok_or(Error::RingMismatch("n-series"))?;
            let s = self.multiple_series(n).truncate(ring, self.poly_bound.min(x.poly_bound()));
            return Ok(s.rename_vars(&[i], x.nvars()));
        }
        self.multiple_series(n).substitute(core::slice::from_ref(x))
    }

    /// `x_1 +_F x_2 +_F ... `, or zero in the given ring for an empty sum.
    pub fn sum_all<'a>(
        &self,
        nvars: usize,
        poly_bound: u32,
        terms: impl IntoIterator<Item = &'a GradedSeries>,
    ) -> Result<GradedSeries> {
        let mut acc: Option<GradedSeries> = None;
        for t in terms {
            if t.ring().kind != self.ring.kind {
                return Err(Error::RingMismatch("formal sum"));
            }
            acc = Some(match acc {
                None => t.truncate(self.ring, self.poly_bound),
                Some(a) => self.add(&a, t)?,
            });
        }
        Ok(acc.unwrap_or_else(|| GradedSeries::zero(self.ring, nvars, poly_bound.min(self.poly_bound))))
    }

    /// Check the four axioms up to truncation.
    pub fn verify_axioms(&self) -> AxiomReport {
        let (r, p) = (self.ring, self.poly_bound);
        let u1 = GradedSeries::var(r, 1, p, 0);
        let zero1 = GradedSeries::zero(r, 1, p);
        let identity = self.add(&u1, &zero1).is_ok_and(|s| s == u1) && self.add(&zero1, &u1).is_ok_and(|s| s == u1);

        let u2 = GradedSeries::var(r, 2, p, 0);
        let v2 = GradedSeries::var(r, 2, p, 1);
        let commutative = self.add(&v2, &u2).is_ok_and(|s| s == self.sum);

        let u3 = GradedSeries::var(r, 3, p, 0);
        let v3 = GradedSeries::var(r, 3, p, 1);
        let w3 = GradedSeries::var(r, 3, p, 2);
        let left = self.add(&u3, &v3).and_then(|uv| self.add(&uv, &w3));
        let right = self.add(&v3, &w3).and_then(|vw| self.add(&u3, &vw));
        let associative = matches!((left, right), (Ok(a), Ok(b)) if a == b);

        let inverse = self.add(&u1, &self.inverse).is_ok_and(|s| s.is_zero());
        AxiomReport { identity, commutative, associative, inverse }
    }
}

/// The index `i` if `x` is exactly the variable `x_i`.
fn as_variable(x: &GradedSeries) -> Option<usize> {
    let mut terms = x.terms();
    let (m, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() || m.degree() != 1 {
        return None;
    }
    m.support().next()
}

/// `log(u) = u + Σ_{i=1}^{D} b_i u^{i+1}`.
fn universal_logarithm(ring: CoeffRing, p: u32) -> GradedSeries {
    let mut log = GradedSeries::var(ring, 1, p, 0);
    for i in 0..ring.bound as usize {
        log.add_term(Monomial::var_pow(0, i as u32 + 2), Coeff::generator(i));
    }
    log
}

/// Compositional inverse of a one-variable series `g = u + O(u^2)`, order by
/// order: the coefficient of `w^k` in `g(h)` is the current value plus `h_k`.
fn reversion(g: &GradedSeries) -> GradedSeries {
    let (ring, p) = (g.ring(), g.poly_bound());
    let mut h = GradedSeries::var(ring, 1, p, 0);
    for k in 2..=p {
        let composed = g.substitute(core::slice::from_ref(&h)).expect("no constant term");
        let c = composed.coeff(&Monomial::var_pow(0, k));
        h.add_term(Monomial::var_pow(0, k), c.neg());
    }
    h
}

/// Solve `F(u, ι(u)) = 0` order by order, starting from `ι(u) = -u`.
fn solve_inverse(f: &GradedSeries) -> GradedSeries {
    let (ring, p) = (f.ring(), f.poly_bound());
    let u = GradedSeries::var(ring, 1, p, 0);
    let mut iota = u.scale(&rat(-1));
    for k in 2..=p {
        let val = f.substitute(&[u.clone(), iota.clone()]).expect("no constant term");
        let c = val.coeff(&Monomial::var_pow(0, k));
        iota.add_term(Monomial::var_pow(0, k), c.neg());
    }
    iota
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn law(kind: LawKind, d: u32, p: u32) -> FormalGroupLaw {
        FormalGroupLaw::new(kind, d, p)
    }

    #[test]
    fn additive_and_multiplicative_series() {
        assert_eq!(law(LawKind::Additive, 0, 4).series().display().to_string(), "t1 + t2");
        assert_eq!(
            law(LawKind::Multiplicative, 3, 4).series().display().to_string(),
            "t1 + t2 + (-beta)*t1*t2"
        );
    }

    #[test]
    fn multiplicative_inverse_is_geometric() {
        // -u/(1 - beta u) = -u - beta u^2 - beta^2 u^3 - ...
        let f = law(LawKind::Multiplicative, 5, 5);
        let inv = f.inverse_series();
        for k in 1..=5u32 {
            let c = inv.coeff(&Monomial::var_pow(0, k));
            let expected = Coeff::term(Monomial::var_pow(0, k - 1), rat(-1));
            assert_eq!(c, expected, "coefficient of u^{k}");
        }
    }

    #[test]
    fn multiplicative_three_series() {
        let f = law(LawKind::Multiplicative, 4, 5);
        let u = GradedSeries::var(f.ring(), 1, 5, 0);
        let three = f.n_series(3, &u).unwrap();
        assert_eq!(three.display().to_string(), "3*t1 + (-3*beta)*t1^2 + (beta^2)*t1^3");
    }

    #[test]
    fn additive_multiples_are_linear() {
        let f = law(LawKind::Additive, 0, 4);
        let u = GradedSeries::var(f.ring(), 1, 4, 0);
        for n in -12..=12 {
            assert_eq!(f.n_series(n, &u).unwrap(), u.scale(&rat(n)));
        }
    }

    #[test]
    fn universal_law_shape() {
        let f = law(LawKind::UniversalRational, 2, 5);
        let s = f.series();
        // F - u - v is divisible by uv
        let rest = s.sub(&GradedSeries::var(f.ring(), 2, 5, 0)).unwrap().sub(&GradedSeries::var(f.ring(), 2, 5, 1)).unwrap();
        assert!(rest.terms().all(|(m, _)| m.exponent(0) >= 1 && m.exponent(1) >= 1));
        assert!(s.is_homogeneous_of(1));
        assert!(f.verify_axioms().all());
        // a_11 = -2 b_1 since log(F) = log u + log v forces F = u + v - 2 b1 uv + ...
        assert_eq!(s.coeff(&Monomial::from_exponents(alloc::vec![1, 1])), Coeff::generator(0).scale(&rat(-2)));
    }

    #[test]
    fn axioms_hold_for_all_kinds() {
        for kind in [LawKind::Additive, LawKind::Multiplicative, LawKind::UniversalRational] {
            for d in 0..=3 {
                assert!(law(kind, d, 5).verify_axioms().all(), "{kind:?} D={d}");
            }
        }
    }

    #[test]
    fn universal_specializes_to_additive() {
        let f = law(LawKind::UniversalRational, 3, 5);
        let add = law(LawKind::Additive, 0, 5);
        let sliced = f.series().scalar_slice();
        assert_eq!(sliced.terms().collect::<Vec<_>>(), add.series().terms().collect::<Vec<_>>());
    }

    #[test]
    fn inverse_is_involution() {
        for kind in [LawKind::Additive, LawKind::Multiplicative, LawKind::UniversalRational] {
            let f = law(kind, 3, 5);
            let u = GradedSeries::var(f.ring(), 1, 5, 0);
            assert_eq!(f.inverse(&f.inverse(&u).unwrap()).unwrap(), u);
        }
    }

    #[test]
    fn adding_zero_and_constant_errors() {
        let f = law(LawKind::Multiplicative, 2, 4);
        let x = GradedSeries::var(f.ring(), 2, 4, 0);
        let zero = GradedSeries::zero(f.ring(), 2, 4);
        assert_eq!(f.add(&x, &zero).unwrap(), x);
        let one = GradedSeries::one(f.ring(), 2, 4);
        assert_eq!(f.add(&x, &one), Err(Error::NonzeroConstantTerm));
        assert_eq!(f.n_series(2, &one), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn large_multiples_fold_from_table() {
        let f = law(LawKind::Multiplicative, 3, 4);
        let u = GradedSeries::var(f.ring(), 1, 4, 0);
        let mut acc = GradedSeries::zero(f.ring(), 1, 4);
        for n in 1..=19i64 {
            acc = f.add(&acc, &u).unwrap();
            assert_eq!(f.n_series(n, &u).unwrap(), acc);
            assert_eq!(f.n_series(-n, &u).unwrap(), f.inverse(&acc).unwrap());
        }
    }
}
