//! The ordinary cobordism ring `Ω*(X) = L[t_ρ] / (I_Δ, t_ρ^{n+1}, r_χ)` with
//! `r_χ = Σ_F [⟨χ, v_ρ⟩]_F t_ρ`.
//!
//! The pipeline is [`build_presentation`] → [`eliminate_base_cone`] →
//! [`complete_reduction_system`]; normal forms and ranks are read off the
//! completed system. Every monomial of `t`-degree above `n` vanishes in
//! `Ω*(X)`, so all computations are truncated there.

mod rank;
mod standard_basis;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{Coeff, CoeffRing, LawKind};
use crate::equivariant::standard_monomials;
use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::fgl::FormalGroupLaw;
use crate::lattice::{self, Character, IntMatrix};
use crate::monomial::Monomial;
use crate::series::GradedSeries;

pub use rank::{integral_rank, GradedRankTable, IntegralRank};
use standard_basis::{Context, Poly};

/// The relation families of the ordinary ring, instantiated for one law.
#[derive(Debug, Clone)]
pub struct Presentation {
    fan: Fan,
    law: FormalGroupLaw,
    monomial: Vec<(Cone, GradedSeries)>,
    nilpotence: Vec<GradedSeries>,
    characters: Vec<(Character, GradedSeries)>,
}

/// Build the presentation with characters running over the standard basis
/// of `M^∨`. Series are kept to monomial degree `n + 1`.
pub fn build_presentation(fan: &Fan, kind: LawKind, coeff_bound: u32) -> Result<Presentation> {
    let n = fan.rank() as u32;
    let law = FormalGroupLaw::new(kind, coeff_bound, n + 1);
    let mut pres = Presentation { fan: fan.clone(), law, monomial: Vec::new(), nilpotence: Vec::new(), characters: Vec::new() };
    pres.monomial = fan
        .minimal_nonfaces()
        .iter()
        .map(|s| {
            let m = Monomial::from_exponents((0..fan.num_rays()).map(|r| s.contains_ray(r) as u32).collect());
            (s.clone(), pres.series_of(m))
        })
        .collect();
    pres.nilpotence = (0..fan.num_rays()).map(|r| pres.series_of(Monomial::var_pow(r, n + 1))).collect();
    pres.characters = (0..fan.rank())
        .map(|i| {
            let chi = Character::standard(fan.rank(), i);
            pres.character_relation(&chi).map(|r| (chi, r))
        })
        .collect::<Result<_>>()?;
    Ok(pres)
}

impl Presentation {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn law(&self) -> &FormalGroupLaw {
        &self.law
    }

    pub fn kind(&self) -> LawKind {
        self.law.kind()
    }

    pub fn ring(&self) -> CoeffRing {
        self.law.ring()
    }

    pub fn coeff_bound(&self) -> u32 {
        self.law.coeff_bound()
    }

    /// Lattice rank `n`, which is also the top degree of `Ω*(X)`.
    pub fn rank(&self) -> usize {
        self.fan.rank()
    }

    pub fn num_vars(&self) -> usize {
        self.fan.num_rays()
    }

    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.num_vars()).map(|i| alloc::format!("t{i}")).collect()
    }

    /// `t_ρ` in the ambient ring of the presentation.
    pub fn var(&self, ray: usize) -> GradedSeries {
        GradedSeries::var(self.ring(), self.num_vars(), self.law.poly_bound(), ray)
    }

    /// Zero of the ambient ring; useful as a template for parsing.
    pub fn zero(&self) -> GradedSeries {
        GradedSeries::zero(self.ring(), self.num_vars(), self.law.poly_bound())
    }

    fn series_of(&self, m: Monomial) -> GradedSeries {
        GradedSeries::monomial(self.ring(), self.num_vars(), self.law.poly_bound(), m, Coeff::one())
    }

    pub fn monomial_relations(&self) -> &[(Cone, GradedSeries)] {
        &self.monomial
    }

    pub fn nilpotence_relations(&self) -> &[GradedSeries] {
        &self.nilpotence
    }

    pub fn character_relations(&self) -> &[(Character, GradedSeries)] {
        &self.characters
    }

    /// All relations: monomial, nilpotence, then character relations.
    pub fn relations(&self) -> impl Iterator<Item = &GradedSeries> {
        self.monomial
            .iter()
            .map(|(_, s)| s)
            .chain(&self.nilpotence)
            .chain(self.characters.iter().map(|(_, s)| s))
    }

    /// `r_χ` for an arbitrary character.
    pub fn character_relation(&self, chi: &Character) -> Result<GradedSeries> {
        if chi.coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: chi.coords.len() });
        }
        let parts = (0..self.num_vars())
            .map(|r| self.law.n_series(chi.pair(self.fan.ray(r)), &self.var(r)))
            .collect::<Result<Vec<_>>>()?;
        self.law.sum_all(self.num_vars(), self.law.poly_bound(), &parts)
    }

    /// Index of the default base cone: the first maximal cone of top dimension.
    pub fn default_base_cone(&self) -> usize {
        let top = self.fan.max_cones().iter().map(Cone::dim).max().unwrap_or(0);
        self.fan.max_cones().iter().position(|c| c.dim() == top).unwrap_or(0)
    }
}

/// A presentation with the base-cone variables solved for.
#[derive(Debug, Clone)]
pub struct ReducedPresentation {
    pres: Presentation,
    base: usize,
    /// Value of every `t_ρ`; the identity on rays outside the base cone.
    substitution: Vec<GradedSeries>,
    relations: Vec<GradedSeries>,
}

impl ReducedPresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn base_cone_index(&self) -> usize {
        self.base
    }

    pub fn base_cone(&self) -> &Cone {
        &self.pres.fan.max_cones()[self.base]
    }

    pub fn substitution(&self) -> &[GradedSeries] {
        &self.substitution
    }

    /// Relations among the outside variables.
    pub fn relations(&self) -> &[GradedSeries] {
        &self.relations
    }

    /// Rays not in the base cone.
    pub fn outside_rays(&self) -> Vec<usize> {
        (0..self.pres.num_vars()).filter(|&r| !self.base_cone().contains_ray(r)).collect()
    }

    /// Express `x` in the outside variables.
    pub fn substitute(&self, x: &GradedSeries) -> Result<GradedSeries> {
        if x.nvars() != self.pres.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.pres.num_vars(), found: x.nvars() });
        }
        if x.ring().kind != self.pres.kind() {
            return Err(Error::RingMismatch("normal form"));
        }
        x.substitute(&self.substitution)
    }
}

/// Solve the character relations dual to the base cone's rays:
/// `t_{ρ_i} = ι(Σ_F over outside ρ of [⟨χ_i, v_ρ⟩]_F t_ρ)`.
pub fn eliminate_base_cone(pres: &Presentation, base: usize) -> Result<ReducedPresentation> {
    let fan = &pres.fan;
    let sigma = fan.max_cones().get(base).ok_or(Error::NotMaximal(base))?.clone();
    let chis = fan.adapted_characters(&sigma)?;
    let outside: Vec<usize> = (0..fan.num_rays()).filter(|&r| !sigma.contains_ray(r)).collect();
    let law = &pres.law;

    let mut substitution: Vec<GradedSeries> = (0..fan.num_rays()).map(|r| pres.var(r)).collect();
    for (i, &ray) in sigma.rays().iter().enumerate() {
        debug_assert!(sigma.rays().iter().enumerate().all(|(j, &s)| chis[i].pair(fan.ray(s)) == (i == j) as i64));
        let parts = outside
            .iter()
            .map(|&r| law.n_series(chis[i].pair(fan.ray(r)), &pres.var(r)))
            .collect::<Result<Vec<_>>>()?;
        let g = law.sum_all(pres.num_vars(), law.poly_bound(), &parts)?;
        substitution[ray] = law.inverse(&g)?;
    }

    let adapted = chis.iter().map(|chi| pres.character_relation(chi)).collect::<Result<Vec<_>>>()?;
    let relations = pres
        .relations()
        .chain(&adapted)
        .map(|r| r.substitute(&substitution))
        .filter(|r| !matches!(r, Ok(s) if s.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReducedPresentation { pres: pres.clone(), base, substitution, relations })
}

/// A completed, interreduced standard basis of the reduced relations.
#[derive(Debug, Clone)]
pub struct ReductionSystem {
    reduced: ReducedPresentation,
    ctx: Context,
    basis: Vec<Poly>,
}

/// Complete the reduced relations. Fails if a leading term of the result
/// carries a coefficient generator, which would make reduction over the
/// coefficient ring impossible.
pub fn complete_reduction_system(reduced: ReducedPresentation) -> Result<ReductionSystem> {
    let gens = reduced.relations.clone();
    ReductionSystem::from_generators(reduced, &gens)
}

impl ReductionSystem {
    /// Complete an explicit generator list in the outside variables, using the
    /// elimination of `reduced` for normal forms.
    pub fn from_generators(reduced: ReducedPresentation, generators: &[GradedSeries]) -> Result<Self> {
        let ctx = Context { ring: reduced.pres.ring(), max_tdeg: reduced.pres.rank() as u32 };
        let outside = reduced.outside_rays();
        for g in generators {
            if g.nvars() != reduced.pres.num_vars() || g.ring().kind != ctx.ring.kind {
                return Err(Error::RingMismatch("relation"));
            }
            if g.terms().any(|(m, _)| m.support().any(|r| !outside.contains(&r))) {
                return Err(Error::Internal(String::from("relation involves a base-cone variable")));
            }
        }
        let basis = standard_basis::complete(&ctx, generators.iter().map(|g| Poly::from_series(&ctx, g)));
        for g in &basis {
            let (lt, _) = g.lead().expect("nonzero");
            if !lt.b.is_one() {
                let s = g.to_series(&ctx, reduced.pres.num_vars());
                return Err(Error::NonUnitLeadingCoefficient(alloc::format!("{}", s.display())));
            }
        }
        Ok(Self { reduced, ctx, basis })
    }

    pub fn reduced(&self) -> &ReducedPresentation {
        &self.reduced
    }

    pub fn presentation(&self) -> &Presentation {
        &self.reduced.pres
    }

    /// The completed basis as series, each with leading coefficient 1.
    pub fn basis(&self) -> Vec<GradedSeries> {
        self.basis.iter().map(|g| g.to_series(&self.ctx, self.presentation().num_vars())).collect()
    }

    /// Rewrite rules `lead → -(rest)`, followed by `m → 0` for the minimal
    /// standard monomials of degree `n + 1` killed by truncation.
    pub fn rules(&self) -> Vec<(Monomial, GradedSeries)> {
        let nvars = self.presentation().num_vars();
        let mut rules: Vec<(Monomial, GradedSeries)> = self
            .basis
            .iter()
            .map(|g| {
                let lead = g.lead().unwrap().0.t.clone();
                let s = g.to_series(&self.ctx, nvars);
                let mut tail = s.neg();
                tail.add_term(lead.clone(), Coeff::one());
                (lead, tail)
            })
            .collect();
        let top = self.ctx.max_tdeg + 1;
        let base = self.reduced.base_cone();
        let zero = GradedSeries::zero(self.ctx.ring, nvars, self.ctx.max_tdeg);
        for m in Monomial::all_of_degree(nvars, top) {
            if m.support().any(|r| base.contains_ray(r)) || self.leads().any(|l| l.divides(&m)) {
                continue;
            }
            let minimal = m.support().all(|r| {
                let q = Monomial::var(r).quotient_of(&m).expect("divisible");
                !self.leads().any(|l| l.divides(&q))
            });
            if minimal {
                rules.push((m, zero.clone()));
            }
        }
        rules
    }

    fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| &g.lead().unwrap().0.t)
    }

    /// Canonical representative of `x` (a series in all ray variables).
    pub fn normal_form(&self, x: &GradedSeries) -> Result<NormalForm> {
        let y = self.reduced.substitute(x)?;
        let p = Poly::from_series(&self.ctx, &y);
        let r = standard_basis::reduce(&self.ctx, p, &self.basis);
        Ok(NormalForm { series: r.to_series(&self.ctx, self.presentation().num_vars()) })
    }

    /// Monomials of degree `k` in the outside variables not divisible by any
    /// leading term; they form a basis of `Ω^k` over the coefficient ring.
    pub fn standard_monomials(&self, k: u32) -> Vec<Monomial> {
        if k > self.ctx.max_tdeg {
            return Vec::new();
        }
        let base = self.reduced.base_cone();
        Monomial::all_of_degree(self.presentation().num_vars(), k)
            .into_iter()
            .filter(|m| m.support().all(|r| !base.contains_ray(r)))
            .filter(|m| !self.leads().any(|l| l.divides(m)))
            .collect()
    }

    pub fn graded_rank(&self, k: u32) -> usize {
        self.standard_monomials(k).len()
    }
}

/// A fully reduced element in the outside variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    series: GradedSeries,
}

impl NormalForm {
    pub fn series(&self) -> &GradedSeries {
        &self.series
    }

    pub fn into_series(self) -> GradedSeries {
        self.series
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.series.display())
    }
}

/// Eliminate `base` (or the default base cone) and complete.
pub fn reduction_system(pres: &Presentation, base: Option<usize>) -> Result<ReductionSystem> {
    complete_reduction_system(eliminate_base_cone(pres, base.unwrap_or_else(|| pres.default_base_cone()))?)
}

/// `normal_form` with a freshly completed system on the default base cone.
pub fn normal_form(pres: &Presentation, x: &GradedSeries) -> Result<NormalForm> {
    reduction_system(pres, None)?.normal_form(x)
}

/// Rank of `Ω^k` over the coefficient ring.
pub fn graded_rank(pres: &Presentation, k: u32) -> Result<usize> {
    Ok(reduction_system(pres, None)?.graded_rank(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    Chow,
    KTheory,
}

impl Specialization {
    pub fn name(self) -> &'static str {
        match self {
            Specialization::Chow => "chow",
            Specialization::KTheory => "ktheory",
        }
    }
}

/// Re-instantiate with the additive law (Chow ring) or the multiplicative law
/// (K-theory). K-theory keeps the coefficient bound when it is already
/// multiplicative and otherwise uses `β` up to degree `-n`.
pub fn specialize(pres: &Presentation, target: Specialization) -> Result<Presentation> {
    match target {
        Specialization::Chow => build_presentation(&pres.fan, LawKind::Additive, 0),
        Specialization::KTheory => {
            let d = if pres.kind() == LawKind::Multiplicative { pres.coeff_bound() } else { pres.rank() as u32 };
            build_presentation(&pres.fan, LawKind::Multiplicative, d)
        }
    }
}

/// Rank of the degree-`k` part of the Stanley–Reisner ring modulo the linear
/// forms `Σ ⟨χ, v_ρ⟩ t_ρ`, computed over standard monomials.
pub fn stanley_reisner_rank(fan: &Fan, k: u32) -> usize {
    let cols = standard_monomials(fan, k);
    if k == 0 {
        return cols.len();
    }
    let lower = standard_monomials(fan, k - 1);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..fan.rank() {
        let chi = Character::standard(fan.rank(), i);
        for m in &lower {
            let mut row = alloc::vec![BigInt::zero(); cols.len()];
            for r in 0..fan.num_rays() {
                let a = chi.pair(fan.ray(r));
                if a == 0 {
                    continue;
                }
                let prod = m.mul(&Monomial::var(r));
                if let Some(c) = cols.iter().position(|x| *x == prod) {
                    row[c] += a;
                }
            }
            rows.push(row);
        }
    }
    if rows.is_empty() || cols.is_empty() {
        return cols.len();
    }
    cols.len() - lattice::rank(&IntMatrix::from_rows(&rows))
}

/// The ordinary ring computed directly agrees in degree `k` with the
/// equivariant ring modulo the character classes.
pub fn forgetful_check(pres: &Presentation, k: u32) -> Result<bool> {
    Ok(graded_rank(pres, k)? == stanley_reisner_rank(&pres.fan, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::fan::library::*;
    use alloc::vec;

    fn nf(sys: &ReductionSystem, x: &GradedSeries) -> GradedSeries {
        sys.normal_form(x).unwrap().into_series()
    }

    #[test]
    fn presentation_p1_additive() {
        let p = build_presentation(&projective_space(1), LawKind::Additive, 0).unwrap();
        let t1 = p.var(0);
        let t2 = p.var(1);
        assert_eq!(p.monomial_relations().len(), 1);
        assert_eq!(p.monomial_relations()[0].1, t1.mul(&t2).unwrap());
        assert_eq!(p.nilpotence_relations(), &[t1.pow(2), t2.pow(2)]);
        assert_eq!(p.character_relations().len(), 1);
        assert_eq!(p.character_relations()[0].1, t1.sub(&t2).unwrap());
    }

    #[test]
    fn presentation_projective_space_characters() {
        let p = build_presentation(&projective_space(2), LawKind::UniversalRational, 2).unwrap();
        let law = p.law();
        for (i, (_, r)) in p.character_relations().iter().enumerate() {
            assert_eq!(*r, law.sub(&p.var(i), &p.var(2)).unwrap());
        }
    }

    #[test]
    fn presentation_affine_space() {
        let p = build_presentation(&affine_space(2, 2), LawKind::Multiplicative, 2).unwrap();
        assert!(p.monomial_relations().is_empty());
        let rels: Vec<_> = p.character_relations().iter().map(|(_, r)| r.clone()).collect();
        assert_eq!(rels, vec![p.var(0), p.var(1)]);
    }

    #[test]
    fn elimination_examples() {
        let p = build_presentation(&projective_space(1), LawKind::UniversalRational, 3).unwrap();
        let red = eliminate_base_cone(&p, 0).unwrap();
        assert_eq!(red.substitution()[0], p.var(1));

        let p = build_presentation(&affine_space(3, 3), LawKind::UniversalRational, 2).unwrap();
        let red = eliminate_base_cone(&p, 0).unwrap();
        assert!(red.substitution().iter().all(GradedSeries::is_zero));
        assert!(red.outside_rays().is_empty());

        let p = build_presentation(&projective_space(2), LawKind::Additive, 0).unwrap();
        let red = eliminate_base_cone(&p, 0).unwrap();
        assert_eq!(red.substitution()[0], p.var(2));
        assert_eq!(red.substitution()[1], p.var(2));
        assert!(eliminate_base_cone(&p, 3).is_err());
    }

    #[test]
    fn completion_examples() {
        let p = build_presentation(&projective_space(1), LawKind::UniversalRational, 3).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        assert_eq!(sys.rules(), vec![(Monomial::var_pow(1, 2), p.zero().truncate(p.ring(), 1))]);
        assert!(sys.basis().is_empty());

        let p = build_presentation(&projective_space(2), LawKind::Additive, 0).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        let leads: Vec<Monomial> = sys.rules().into_iter().map(|(m, t)| {
            assert!(t.is_zero());
            m
        }).collect();
        assert_eq!(leads, vec![Monomial::var_pow(2, 3)]);
        assert_eq!(sys.standard_monomials(2), vec![Monomial::var_pow(2, 2)]);

        let p = build_presentation(&hirzebruch(1), LawKind::Additive, 0).unwrap();
        let sys = reduction_system(&p, Some(0)).unwrap();
        let count: usize = (0..=2).map(|k| sys.standard_monomials(k).len()).sum();
        assert_eq!(count, 4);
    }

    #[test]
    fn normal_form_examples() {
        let p = build_presentation(&projective_space(1), LawKind::UniversalRational, 3).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        assert_eq!(nf(&sys, &p.var(0)), p.var(1).truncate(p.ring(), 1));

        let p = build_presentation(&projective_space(2), LawKind::UniversalRational, 3).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        let t3 = p.var(2);
        for k in 0..=4 {
            let x = nf(&sys, &t3.pow(k));
            if k <= 2 {
                assert_eq!(x, t3.pow(k).truncate(p.ring(), 2));
            } else {
                assert!(x.is_zero());
            }
        }
        let prod = p.var(0).mul(&p.var(1)).unwrap().mul(&t3).unwrap();
        assert!(sys.normal_form(&prod).unwrap().is_zero());
    }

    #[test]
    fn ranks_examples() {
        for n in 1..=3 {
            let p = build_presentation(&projective_space(n), LawKind::UniversalRational, 2).unwrap();
            let sys = reduction_system(&p, None).unwrap();
            let ranks: Vec<usize> = (0..=n as u32 + 1).map(|k| sys.graded_rank(k)).collect();
            let mut expected = vec![1; n + 1];
            expected.push(0);
            assert_eq!(ranks, expected);
        }
        let p = build_presentation(&affine_space(2, 2), LawKind::Multiplicative, 2).unwrap();
        assert_eq!((0..=3).map(|k| graded_rank(&p, k).unwrap()).collect::<Vec<_>>(), vec![1, 0, 0, 0]);
        for a in 0..=2 {
            let p = build_presentation(&hirzebruch(a), LawKind::Additive, 0).unwrap();
            assert_eq!((0..=2).map(|k| graded_rank(&p, k).unwrap()).collect::<Vec<_>>(), vec![1, 2, 1]);
        }
    }

    #[test]
    fn base_cone_independence() {
        for fan in [hirzebruch(2), blowup_p2(), projective_space(2)] {
            let p = build_presentation(&fan, LawKind::UniversalRational, 2).unwrap();
            let reference: Vec<usize> = (0..=2).map(|k| reduction_system(&p, Some(0)).unwrap().graded_rank(k)).collect();
            for b in 1..fan.max_cones().len() {
                let sys = reduction_system(&p, Some(b)).unwrap();
                assert_eq!((0..=2).map(|k| sys.graded_rank(k)).collect::<Vec<_>>(), reference);
            }
        }
    }

    #[test]
    fn nonbasis_characters_reduce_to_zero() {
        let p = build_presentation(&hirzebruch(1), LawKind::UniversalRational, 3).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        for chi in [vec![1, 1], vec![2, -1], vec![-3, 2]] {
            let r = p.character_relation(&Character::new(chi)).unwrap();
            assert!(sys.normal_form(&r).unwrap().is_zero());
        }
    }

    #[test]
    fn specializations() {
        let p = build_presentation(&projective_space(2), LawKind::UniversalRational, 3).unwrap();
        let chow = specialize(&p, Specialization::Chow).unwrap();
        assert_eq!(chow.kind(), LawKind::Additive);
        assert_eq!((0..=2).map(|k| graded_rank(&chow, k).unwrap()).collect::<Vec<_>>(), vec![1, 1, 1]);
        let k = specialize(&build_presentation(&projective_space(1), LawKind::Additive, 0).unwrap(), Specialization::KTheory).unwrap();
        assert_eq!((0..=1).map(|d| graded_rank(&k, d).unwrap()).sum::<usize>(), 2);
        let a = specialize(&build_presentation(&affine_space(2, 2), LawKind::Multiplicative, 2).unwrap(), Specialization::Chow).unwrap();
        assert_eq!((0..=2).map(|d| graded_rank(&a, d).unwrap()).collect::<Vec<_>>(), vec![1, 0, 0]);
    }

    #[test]
    fn forgetful_examples() {
        for fan in [projective_space(1), projective_space(2), hirzebruch(0), hirzebruch(1), hirzebruch(2)] {
            let p = build_presentation(&fan, LawKind::UniversalRational, 2).unwrap();
            for k in 0..=fan.rank() as u32 + 1 {
                assert!(forgetful_check(&p, k).unwrap(), "k = {k}");
            }
        }
    }

    #[test]
    fn unit_multiples_in_projective_space() {
        let p = build_presentation(&projective_space(3), LawKind::UniversalRational, 3).unwrap();
        let sys = reduction_system(&p, None).unwrap();
        for i in 0..3 {
            let x = nf(&sys, &p.var(i));
            let lin = x.degree_part(1);
            assert_eq!(lin.num_terms(), 1);
            let (m, c) = lin.terms().next().unwrap();
            assert_eq!(*m, Monomial::var(3));
            assert!(c.is_scalar() && c.scalar_part() == rat(1));
            assert!(x.terms().all(|(m, _)| m.exponent(3) > 0));
        }
    }
}
