//! The equivariant cobordism ring of a smooth toric variety, in two models.
//!
//! * Piecewise: tuples `(a_σ)` over maximal cones, `a_σ` a series in the
//!   variables `t_ρ` for `ρ ≤ σ`, whose restrictions to common faces agree.
//!   Restriction from `σ` to a face `τ` substitutes `t_ρ ↦ t_ρ` for `ρ ≤ τ`
//!   and `t_ρ ↦ 0` otherwise.
//! * Stanley–Reisner: series in all `t_ρ` modulo the monomials of the minimal
//!   non-faces.
//!
//! `psi` sends `t_ρ` to the class `u_ρ`, which is `t_ρ` on cones containing
//! `ρ` and zero elsewhere.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::fgl::FormalGroupLaw;
use crate::lattice::{self, Character, IntMatrix};
use crate::monomial::Monomial;
use crate::series::GradedSeries;

/// Restrict a series on `sigma` (variables = rays of `sigma` in order) to the
/// face `tau`.
pub fn restrict(sigma: &Cone, tau: &Cone, x: &GradedSeries) -> Result<GradedSeries> {
    if !tau.is_face_of(sigma) {
        return Err(Error::NotASubface(tau.rays().to_vec(), sigma.rays().to_vec()));
    }
    if x.nvars() != sigma.dim() {
        return Err(Error::DimensionMismatch { expected: sigma.dim(), found: x.nvars() });
    }
    let (ring, p) = (x.ring(), x.poly_bound());
    let values: Vec<GradedSeries> = sigma
        .rays()
        .iter()
        .map(|&r| match tau.position(r) {
            Some(j) => GradedSeries::var(ring, tau.dim(), p, j),
            None => GradedSeries::zero(ring, tau.dim(), p),
        })
        .collect();
    if values.is_empty() {
        return Ok(x.clone());
    }
    x.substitute(&values)
}

/// An element of the product of the cone rings over the maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseElement {
    /// One series per maximal cone, in the fan's maximal cone order.
    pub components: Vec<GradedSeries>,
}

impl PiecewiseElement {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(GradedSeries::is_zero)
    }

    pub fn eq_truncated(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.eq_truncated(b))
    }
}

/// An element of the Stanley–Reisner model: a series in all ray variables with
/// no monomial divisible by a minimal non-face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrElement(GradedSeries);

impl SrElement {
    pub fn series(&self) -> &GradedSeries {
        &self.0
    }

    pub fn into_series(self) -> GradedSeries {
        self.0
    }
}

/// The two models over a fixed fan and law.
#[derive(Debug, Clone, Copy)]
pub struct EquivariantModel<'a> {
    fan: &'a Fan,
    law: &'a FormalGroupLaw,
}

impl<'a> EquivariantModel<'a> {
    pub fn new(fan: &'a Fan, law: &'a FormalGroupLaw) -> Self {
        Self { fan, law }
    }

    pub fn fan(&self) -> &'a Fan {
        self.fan
    }

    pub fn law(&self) -> &'a FormalGroupLaw {
        self.law
    }

    fn p(&self) -> u32 {
        self.law.poly_bound()
    }

    /// Zero of the cone ring of `cone`.
    pub fn cone_zero(&self, cone: &Cone) -> GradedSeries {
        GradedSeries::zero(self.law.ring(), cone.dim(), self.p())
    }

    /// `t_ρ` in the cone ring of `cone`, or zero if `ρ` is not a ray of it.
    pub fn cone_var(&self, cone: &Cone, ray: usize) -> GradedSeries {
        match cone.position(ray) {
            Some(j) => GradedSeries::var(self.law.ring(), cone.dim(), self.p(), j),
            None => self.cone_zero(cone),
        }
    }

    /// The same coefficient on every cone.
    pub fn constant(&self, c: Coeff) -> PiecewiseElement {
        let components = self
            .fan
            .max_cones()
            .iter()
            .map(|s| GradedSeries::constant(self.law.ring(), s.dim(), self.p(), c.clone()))
            .collect();
        PiecewiseElement { components }
    }

    pub fn one(&self) -> PiecewiseElement {
        self.constant(Coeff::one())
    }

    /// Build from components, checking their variable counts.
    pub fn element(&self, components: Vec<GradedSeries>) -> Result<PiecewiseElement> {
        let cones = self.fan.max_cones();
        if components.len() != cones.len() {
            return Err(Error::DimensionMismatch { expected: cones.len(), found: components.len() });
        }
        for (c, s) in components.iter().zip(cones) {
            if c.nvars() != s.dim() {
                return Err(Error::DimensionMismatch { expected: s.dim(), found: c.nvars() });
            }
        }
        Ok(PiecewiseElement { components })
    }

    /// All pairwise restrictions to common faces agree.
    pub fn is_compatible(&self, x: &PiecewiseElement) -> bool {
        let cones = self.fan.max_cones();
        if x.components.len() != cones.len() {
            return false;
        }
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                let tau = cones[i].intersection(&cones[j]);
                let a = restrict(&cones[i], &tau, &x.components[i]);
                let b = restrict(&cones[j], &tau, &x.components[j]);
                match (a, b) {
                    (Ok(a), Ok(b)) if a.eq_truncated(&b) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// `u_ρ`: `t_ρ` on maximal cones containing `ρ`, zero elsewhere.
    pub fn u_class(&self, ray: usize) -> PiecewiseElement {
        PiecewiseElement { components: self.fan.max_cones().iter().map(|s| self.cone_var(s, ray)).collect() }
    }

    pub fn add(&self, x: &PiecewiseElement, y: &PiecewiseElement) -> Result<PiecewiseElement> {
        self.componentwise(x, y, GradedSeries::add)
    }

    pub fn mul(&self, x: &PiecewiseElement, y: &PiecewiseElement) -> Result<PiecewiseElement> {
        self.componentwise(x, y, GradedSeries::mul)
    }

    fn componentwise(
        &self,
        x: &PiecewiseElement,
        y: &PiecewiseElement,
        op: impl Fn(&GradedSeries, &GradedSeries) -> Result<GradedSeries>,
    ) -> Result<PiecewiseElement> {
        if x.components.len() != y.components.len() {
            return Err(Error::DimensionMismatch { expected: x.components.len(), found: y.components.len() });
        }
        let components = x.components.iter().zip(&y.components).map(|(a, b)| op(a, b)).collect::<Result<_>>()?;
        let out = PiecewiseElement { components };
        debug_assert!(
            !(self.is_compatible(x) && self.is_compatible(y)) || self.is_compatible(&out),
            "componentwise operation broke compatibility"
        );
        Ok(out)
    }

    /// Product of `u_ρ` over a set of rays.
    pub fn product_of_classes(&self, rays: &[usize]) -> Result<PiecewiseElement> {
        let mut acc = self.one();
        for &r in rays {
            acc = self.mul(&acc, &self.u_class(r))?;
        }
        Ok(acc)
    }

    /// `t_ρ` in the Stanley–Reisner ring (all rays as variables).
    pub fn sr_var(&self, ray: usize) -> GradedSeries {
        GradedSeries::var(self.law.ring(), self.fan.num_rays(), self.p(), ray)
    }

    /// Reduce modulo the Stanley–Reisner ideal: drop monomials whose support
    /// is not a face.
    pub fn sr_reduce(&self, x: &GradedSeries) -> Result<SrElement> {
        if x.nvars() != self.fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: self.fan.num_rays(), found: x.nvars() });
        }
        let kept = x
            .terms()
            .filter(|(m, _)| self.fan.is_face(&Cone::new(m.support().collect())))
            .map(|(m, c)| (m.clone(), c.clone()));
        Ok(SrElement(GradedSeries::from_terms(x.ring(), x.nvars(), x.poly_bound(), kept)))
    }

    /// The map `t_ρ ↦ u_ρ`: on each maximal cone, substitute `t_ρ` or zero.
    pub fn psi(&self, x: &SrElement) -> Result<PiecewiseElement> {
        let s = &x.0;
        let components = self
            .fan
            .max_cones()
            .iter()
            .map(|sigma| {
                let values: Vec<GradedSeries> = (0..self.fan.num_rays())
                    .map(|r| match sigma.position(r) {
                        Some(j) => GradedSeries::var(s.ring(), sigma.dim(), s.poly_bound(), j),
                        None => GradedSeries::zero(s.ring(), sigma.dim(), s.poly_bound()),
                    })
                    .collect();
                if values.is_empty() {
                    Ok(s.clone())
                } else {
                    s.substitute(&values)
                }
            })
            .collect::<Result<_>>()?;
        Ok(PiecewiseElement { components })
    }

    /// `c^T_1(L_χ)`: on each maximal cone the formal sum of `[⟨χ, v_ρ⟩]_F t_ρ`
    /// over its rays.
    pub fn first_chern(&self, chi: &Character) -> Result<PiecewiseElement> {
        self.check_character(chi)?;
        let components = self
            .fan
            .max_cones()
            .iter()
            .map(|sigma| {
                let parts = sigma
                    .rays()
                    .iter()
                    .map(|&r| self.law.n_series(chi.pair(self.fan.ray(r)), &self.cone_var(sigma, r)))
                    .collect::<Result<Vec<_>>>()?;
                self.law.sum_all(sigma.dim(), self.p(), &parts)
            })
            .collect::<Result<_>>()?;
        Ok(PiecewiseElement { components })
    }

    /// `Σ_F [⟨χ, v_ρ⟩]_F t_ρ` over all rays, in the Stanley–Reisner model.
    pub fn sr_first_chern(&self, chi: &Character) -> Result<SrElement> {
        self.check_character(chi)?;
        let parts = (0..self.fan.num_rays())
            .map(|r| self.law.n_series(chi.pair(self.fan.ray(r)), &self.sr_var(r)))
            .collect::<Result<Vec<_>>>()?;
        self.sr_reduce(&self.law.sum_all(self.fan.num_rays(), self.p(), &parts)?)
    }

    /// `Σ ⟨χ, v_ρ⟩ u_ρ` with ordinary integer multiples.
    pub fn linear_character(&self, chi: &Character) -> Result<PiecewiseElement> {
        self.check_character(chi)?;
        let mut acc = self.constant(Coeff::zero());
        for r in 0..self.fan.num_rays() {
            let n = chi.pair(self.fan.ray(r));
            let u = self.u_class(r);
            let scaled = PiecewiseElement {
                components: u.components.iter().map(|c| c.scale(&crate::coeff::rat(n))).collect(),
            };
            acc = self.add(&acc, &scaled)?;
        }
        Ok(acc)
    }

    fn check_character(&self, chi: &Character) -> Result<()> {
        if chi.coords.len() != self.fan.rank() {
            return Err(Error::DimensionMismatch { expected: self.fan.rank(), found: chi.coords.len() });
        }
        Ok(())
    }
}

/// Degree-`k` monomials in all ray variables whose support is a face; these
/// form a basis of the degree-`k` scalar slice of the Stanley–Reisner ring.
pub fn standard_monomials(fan: &Fan, k: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(fan.num_rays(), k)
        .into_iter()
        .filter(|m| fan.is_face(&Cone::new(m.support().collect())))
        .collect()
}

/// Coordinates `(cone, monomial)` of the scalar degree-`k` slice of the
/// product of cone rings.
struct SliceIndex {
    index: BTreeMap<(usize, Monomial), usize>,
}

impl SliceIndex {
    fn new(fan: &Fan, k: u32) -> Self {
        let mut index = BTreeMap::new();
        for (i, sigma) in fan.max_cones().iter().enumerate() {
            for m in Monomial::all_of_degree(sigma.dim(), k) {
                let n = index.len();
                index.insert((i, m), n);
            }
        }
        Self { index }
    }

    fn len(&self) -> usize {
        self.index.len()
    }
}

/// Dimension of the space of compatible piecewise elements of pure monomial
/// degree `k` with scalar coefficients, from the compatibility constraints.
pub fn graded_rank_pp(fan: &Fan, k: u32) -> usize {
    let idx = SliceIndex::new(fan, k);
    let cones = fan.max_cones();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let tau = cones[i].intersection(&cones[j]);
            for mu in Monomial::all_of_degree(tau.dim(), k) {
                let lift = |sigma: &Cone| {
                    let mut e = alloc::vec![0; sigma.dim()];
                    for (p, &r) in tau.rays().iter().enumerate() {
                        e[sigma.position(r).expect("face ray")] = mu.exponent(p);
                    }
                    Monomial::from_exponents(e)
                };
                let mut row = alloc::vec![BigInt::zero(); idx.len()];
                row[idx.index[&(i, lift(&cones[i]))]] += 1;
                row[idx.index[&(j, lift(&cones[j]))]] -= 1;
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return idx.len();
    }
    idx.len() - lattice::rank(&IntMatrix::from_rows(&rows))
}

/// Images of the degree-`k` standard monomials under `psi`, flattened to
/// scalar coordinate vectors. Returns the rank of the family, the number of
/// monomials, and whether every image is compatible.
pub fn psi_slice_rank(model: &EquivariantModel<'_>, k: u32) -> Result<(usize, usize, bool)> {
    let fan = model.fan();
    let idx = SliceIndex::new(fan, k);
    let monomials = standard_monomials(fan, k);
    let mut rows = Vec::with_capacity(monomials.len());
    let mut compatible = true;
    for m in &monomials {
        let series = GradedSeries::monomial(model.law().ring(), fan.num_rays(), model.law().poly_bound(), m.clone(), Coeff::one());
        let image = model.psi(&model.sr_reduce(&series)?)?;
        compatible &= model.is_compatible(&image);
        let mut row = alloc::vec![BigInt::zero(); idx.len()];
        for (i, comp) in image.components.iter().enumerate() {
            for (mono, c) in comp.terms() {
                let Some(&col) = idx.index.get(&(i, mono.clone())) else {
                    return Err(Error::Internal(alloc::format!("image of a degree-{k} monomial left degree {k}")));
                };
                let s = c.scalar_part();
                if !s.is_integer() || !c.is_scalar() {
                    return Err(Error::Internal(alloc::string::String::from("non-scalar image of a monomial")));
                }
                row[col] = s.to_integer();
            }
        }
        rows.push(row);
    }
    let rank = if rows.is_empty() || idx.len() == 0 { 0 } else { lattice::rank(&IntMatrix::from_rows(&rows)) };
    Ok((rank, monomials.len(), compatible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, LawKind};
    use crate::fan::library::*;
    use alloc::vec;

    fn law(kind: LawKind) -> FormalGroupLaw {
        FormalGroupLaw::new(kind, 3, 4)
    }

    #[test]
    fn restriction_examples() {
        let f = law(LawKind::UniversalRational);
        let r = f.ring();
        let sigma = Cone::new(vec![0, 1]);
        let tau = Cone::new(vec![0]);
        let t1 = GradedSeries::var(r, 2, 4, 0);
        let t2 = GradedSeries::var(r, 2, 4, 1);
        assert_eq!(restrict(&sigma, &tau, &t1).unwrap(), GradedSeries::var(r, 1, 4, 0));
        assert!(restrict(&sigma, &tau, &t2).unwrap().is_zero());
        let x = t1.mul(&t2).unwrap().add(&t1).unwrap();
        assert_eq!(restrict(&sigma, &tau, &x).unwrap(), GradedSeries::var(r, 1, 4, 0));
        assert!(restrict(&tau, &sigma, &GradedSeries::var(r, 1, 4, 0)).is_err());
    }

    #[test]
    fn compatibility_on_p1() {
        let fan = projective_space(1);
        let f = law(LawKind::Multiplicative);
        let m = EquivariantModel::new(&fan, &f);
        assert!(m.is_compatible(&m.constant(Coeff::from_int(5))));
        let cones = fan.max_cones();
        let t = m.cone_var(&cones[0], cones[0].rays()[0]);
        let good = m.element(vec![t.clone(), m.cone_zero(&cones[1])]).unwrap();
        assert!(m.is_compatible(&good));
        let bad = m.element(vec![t, GradedSeries::one(f.ring(), 1, 4)]).unwrap();
        assert!(!m.is_compatible(&bad));
    }

    #[test]
    fn u_classes() {
        let f = law(LawKind::UniversalRational);
        let a1 = affine_space(1, 1);
        let m = EquivariantModel::new(&a1, &f);
        assert_eq!(m.u_class(0).components, vec![GradedSeries::var(f.ring(), 1, 4, 0)]);

        let p2 = projective_space(2);
        let m = EquivariantModel::new(&p2, &f);
        let u = m.u_class(0);
        let nonzero: Vec<bool> = u.components.iter().map(|c| !c.is_zero()).collect();
        let expected: Vec<bool> = p2.max_cones().iter().map(|c| c.contains_ray(0)).collect();
        assert_eq!(nonzero, expected);
        assert_eq!(nonzero.iter().filter(|&&b| b).count(), 2);
        for r in 0..3 {
            assert!(m.is_compatible(&m.u_class(r)));
        }
    }

    #[test]
    fn products_on_p1() {
        let fan = projective_space(1);
        let f = law(LawKind::Additive);
        let m = EquivariantModel::new(&fan, &f);
        let (u1, u2) = (m.u_class(0), m.u_class(1));
        assert!(m.mul(&u1, &u2).unwrap().is_zero());
        assert_eq!(m.mul(&u1, &m.one()).unwrap(), u1);
        let s = m.add(&u1, &u2).unwrap();
        let sq = m.mul(&s, &s).unwrap();
        for c in &sq.components {
            assert_eq!(*c, GradedSeries::var(f.ring(), 1, 4, 0).pow(2));
        }
    }

    #[test]
    fn psi_examples() {
        let fan = hirzebruch(1);
        let f = law(LawKind::UniversalRational);
        let m = EquivariantModel::new(&fan, &f);
        for r in 0..fan.num_rays() {
            let x = m.sr_reduce(&m.sr_var(r)).unwrap();
            assert_eq!(m.psi(&x).unwrap(), m.u_class(r));
        }
        let bad = m.sr_var(0).mul(&m.sr_var(2)).unwrap();
        assert!(m.sr_reduce(&bad).unwrap().series().is_zero());
        assert!(m.psi(&SrElement(bad)).unwrap().is_zero());
    }

    #[test]
    fn psi_on_affine_space_is_identity() {
        let fan = affine_space(3, 3);
        let f = law(LawKind::UniversalRational);
        let m = EquivariantModel::new(&fan, &f);
        let x = m.sr_var(0).mul(&m.sr_var(1)).unwrap().add(&m.sr_var(2).pow(3)).unwrap();
        let img = m.psi(&m.sr_reduce(&x).unwrap()).unwrap();
        assert_eq!(img.components, vec![x]);
    }

    #[test]
    fn first_chern_examples() {
        let f = law(LawKind::UniversalRational);
        let fan = affine_space(2, 2);
        let m = EquivariantModel::new(&fan, &f);
        for i in 0..2 {
            let c = m.first_chern(&Character::standard(2, i)).unwrap();
            assert_eq!(c.components, vec![GradedSeries::var(f.ring(), 2, 4, i)]);
        }

        let p1 = projective_space(1);
        let m = EquivariantModel::new(&p1, &f);
        let c = m.first_chern(&Character::new(vec![1])).unwrap();
        // cone 0 is {ρ1}, cone 1 is {ρ2}
        assert_eq!(c.components[0], GradedSeries::var(f.ring(), 1, 4, 0));
        assert_eq!(c.components[1], f.inverse(&GradedSeries::var(f.ring(), 1, 4, 0)).unwrap());

        let add = law(LawKind::Additive);
        let fan = hirzebruch(2);
        let m = EquivariantModel::new(&fan, &add);
        let chi = Character::new(vec![3, -2]);
        assert_eq!(m.first_chern(&chi).unwrap(), m.linear_character(&chi).unwrap());
    }

    #[test]
    fn rank_pp_examples() {
        let p1 = projective_space(1);
        assert_eq!(graded_rank_pp(&p1, 0), 1);
        assert_eq!(graded_rank_pp(&p1, 1), 2);
        assert_eq!(graded_rank_pp(&p1, 2), 2);
        assert_eq!(graded_rank_pp(&projective_space(2), 1), 3);
        assert_eq!(graded_rank_pp(&affine_space(2, 2), 2), 3);
    }

    #[test]
    fn linear_character_scales() {
        let fan = projective_space(2);
        let f = law(LawKind::Additive);
        let m = EquivariantModel::new(&fan, &f);
        let x = m.linear_character(&Character::new(vec![1, 0])).unwrap();
        assert!(m.is_compatible(&x));
        let _ = rat(0);
    }
}
