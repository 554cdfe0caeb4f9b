//! Smooth fans: validation, faces, minimal non-faces and orbit data.
//!
//! Cones are purely combinatorial (sorted sets of 0-based ray indices). For a
//! smooth fan a face of a cone is the same thing as a subset of its rays.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::{self, Character, LatticeVector};

/// A cone, as a sorted set of ray indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Cone {
    rays: Vec<usize>,
}

impl Cone {
    pub fn new(mut rays: Vec<usize>) -> Self {
        rays.sort_unstable();
        rays.dedup();
        Self { rays }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn contains_ray(&self, ray: usize) -> bool {
        self.rays.binary_search(&ray).is_ok()
    }

    /// Position of `ray` among this cone's rays, i.e. its variable index in
    /// the cone's coordinate ring.
    pub fn position(&self, ray: usize) -> Option<usize> {
        self.rays.binary_search(&ray).ok()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.rays.iter().all(|&r| other.contains_ray(r))
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        Cone { rays: self.rays.iter().copied().filter(|&r| other.contains_ray(r)).collect() }
    }
}

impl fmt::Display for Cone {
    /// 1-based, e.g. `{1,2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", r + 1)?;
        }
        f.write_str("}")
    }
}

/// Unvalidated fan input with 0-based cone indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanData {
    pub rank: usize,
    pub rays: Vec<LatticeVector>,
    pub max_cones: Vec<Vec<usize>>,
}

/// One violated fan invariant. Indices are 0-based; `Display` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotPrimitive { ray: usize },
    NotSmooth { cone: usize },
    NestedCones { inner: usize, outer: usize },
    /// A ray of cone `other` lies in cone `cone` without being one of its rays,
    /// so the two cones do not meet along a common face.
    FanCondition { cone: usize, other: usize, ray: usize },
    UnusedRay { ray: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotPrimitive { ray } => write!(f, "ray {} not primitive", ray + 1),
            Violation::NotSmooth { cone } => {
                write!(f, "cone {} not smooth: rays do not extend to a lattice basis", cone + 1)
            }
            Violation::NestedCones { inner, outer } => {
                write!(f, "cone {} is contained in cone {}; maximal cones must be incomparable", inner + 1, outer + 1)
            }
            Violation::FanCondition { cone, other, ray } => write!(
                f,
                "fan condition violated: ray {} of cone {} lies in cone {} but cones {} and {} do not meet in a common face",
                ray + 1,
                other + 1,
                cone + 1,
                cone + 1,
                other + 1
            ),
            Violation::UnusedRay { ray } => write!(f, "ray {} belongs to no maximal cone", ray + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check structural well-formedness; these are hard errors, not violations.
fn check_structure(data: &FanData) -> Result<()> {
    for v in &data.rays {
        if v.rank() != data.rank {
            return Err(Error::DimensionMismatch { expected: data.rank, found: v.rank() });
        }
    }
    for i in 0..data.rays.len() {
        for j in i + 1..data.rays.len() {
            if data.rays[i] == data.rays[j] {
                return Err(Error::DuplicateRay(i + 1, j + 1));
            }
        }
    }
    for (c, cone) in data.max_cones.iter().enumerate() {
        if cone.is_empty() && data.max_cones.len() > 1 {
            return Err(Error::EmptyCone(c + 1));
        }
        for &r in cone {
            if r >= data.rays.len() {
                return Err(Error::RayIndexOutOfRange { index: r + 1, rays: data.rays.len() });
            }
        }
    }
    Ok(())
}

/// Membership of `x` in the simplicial cone spanned by `rays`, via the
/// coordinates against a dual basis: nonnegative on the cone's own dual
/// characters and zero on the completion.
fn in_simplicial_cone(rank: usize, rays: &[LatticeVector], x: &LatticeVector) -> Result<bool> {
    let c = lattice::complete_basis(rank, rays)?;
    let s = rays.len();
    Ok(c.dual.iter().enumerate().all(|(i, chi)| {
        let p = chi.pair(x);
        if i < s {
            p >= 0
        } else {
            p == 0
        }
    }))
}

/// Report every violated invariant of a candidate fan.
pub fn validate_fan(data: &FanData) -> Result<ValidationReport> {
    check_structure(data)?;
    let mut violations = Vec::new();

    for (i, v) in data.rays.iter().enumerate() {
        if !v.is_primitive() {
            violations.push(Violation::NotPrimitive { ray: i });
        }
    }

    let cones: Vec<Cone> = data.max_cones.iter().map(|c| Cone::new(c.clone())).collect();
    let generators = |c: &Cone| -> Vec<LatticeVector> { c.rays().iter().map(|&r| data.rays[r].clone()).collect() };

    let mut smooth = Vec::with_capacity(cones.len());
    for (i, c) in cones.iter().enumerate() {
        let ok = lattice::extends_to_basis(&generators(c))?;
        if !ok {
            violations.push(Violation::NotSmooth { cone: i });
        }
        smooth.push(ok);
    }

    for i in 0..cones.len() {
        for j in 0..cones.len() {
            if i != j && cones[i].is_face_of(&cones[j]) && (cones[i] != cones[j] || i > j) {
                violations.push(Violation::NestedCones { inner: i, outer: j });
            }
        }
    }

    for i in 0..cones.len() {
        if !smooth[i] {
            continue;
        }
        let gens = generators(&cones[i]);
        for j in 0..cones.len() {
            if i == j || cones[j].is_face_of(&cones[i]) {
                continue;
            }
            for &r in cones[j].rays() {
                if cones[i].contains_ray(r) {
                    continue;
                }
                if in_simplicial_cone(data.rank, &gens, &data.rays[r])? {
                    violations.push(Violation::FanCondition { cone: i, other: j, ray: r });
                }
            }
        }
    }

    for r in 0..data.rays.len() {
        if !cones.iter().any(|c| c.contains_ray(r)) {
            violations.push(Violation::UnusedRay { ray: r });
        }
    }

    Ok(ValidationReport { violations })
}

/// Basis of the orbit lattice `M_σ`, its dual characters and the canonical
/// completion to a basis of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub basis: Vec<LatticeVector>,
    pub dual: Vec<Character>,
    pub completion: Vec<LatticeVector>,
}

/// A validated smooth fan with its face poset and minimal non-faces cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Cone>,
    faces: Vec<Cone>,
    face_set: BTreeSet<Cone>,
    nonfaces: Vec<Cone>,
    complete: bool,
}

impl Fan {
    /// Validate and build. Any violation is an error.
    pub fn new(data: FanData) -> Result<Self> {
        let report = validate_fan(&data)?;
        if !report.is_ok() {
            return Err(Error::InvalidFan(report.violations.iter().map(ToString::to_string).collect()));
        }
        let max_cones: Vec<Cone> = data.max_cones.into_iter().map(Cone::new).collect();

        let mut face_set = BTreeSet::new();
        for c in &max_cones {
            let rays = c.rays();
            for mask in 0u64..(1u64 << rays.len()) {
                let sub = rays.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &r)| r).collect();
                face_set.insert(Cone { rays: sub });
            }
        }
        let mut faces: Vec<Cone> = face_set.iter().cloned().collect();
        faces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));

        let nonfaces = minimal_nonfaces_of(data.rays.len(), data.rank, &face_set);
        let complete = is_complete(data.rank, &max_cones);
        Ok(Self { rank: data.rank, rays: data.rays, max_cones, faces, face_set, nonfaces, complete })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticeVector {
        &self.rays[i]
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// All faces, sorted by dimension and then lexicographically; starts with
    /// the zero cone.
    pub fn all_faces(&self) -> &[Cone] {
        &self.faces
    }

    pub fn is_face(&self, cone: &Cone) -> bool {
        self.face_set.contains(cone)
    }

    /// Inclusion-minimal ray sets contained in no maximal cone.
    pub fn minimal_nonfaces(&self) -> &[Cone] {
        &self.nonfaces
    }

    /// True iff the support of the fan is all of `M_R`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn generators(&self, cone: &Cone) -> Vec<LatticeVector> {
        cone.rays().iter().map(|&r| self.rays[r].clone()).collect()
    }

    pub fn orbit_data(&self, cone: &Cone) -> Result<OrbitData> {
        if !self.is_face(cone) {
            return Err(Error::NotAFace);
        }
        let c = lattice::complete_basis(self.rank, &self.generators(cone))?;
        let mut dual = c.dual;
        dual.truncate(cone.dim());
        Ok(OrbitData { basis: c.basis, dual, completion: c.completion })
    }

    /// The full dual basis `χ_1..χ_n` of `cone`'s rays plus completion:
    /// `χ_i` is dual to ray `i` for `i < dim`, and the rest vanish on the cone.
    pub fn adapted_characters(&self, cone: &Cone) -> Result<Vec<Character>> {
        Ok(lattice::complete_basis(self.rank, &self.generators(cone))?.dual)
    }
}

fn minimal_nonfaces_of(num_rays: usize, rank: usize, faces: &BTreeSet<Cone>) -> Vec<Cone> {
    let mut out = Vec::new();
    // A minimal non-face has at most rank + 1 rays.
    for size in 1..=(rank + 1).min(num_rays) {
        for subset in combinations(num_rays, size) {
            let cone = Cone { rays: subset };
            if faces.contains(&cone) {
                continue;
            }
            let minimal = (0..size).all(|skip| {
                let sub = Cone {
                    rays: cone.rays.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &r)| r).collect(),
                };
                faces.contains(&sub)
            });
            if minimal {
                out.push(cone);
            }
        }
    }
    out
}

/// Every codimension-one face of a full-dimensional maximal cone lies in
/// exactly two maximal cones.
fn is_complete(rank: usize, max_cones: &[Cone]) -> bool {
    if max_cones.iter().any(|c| c.dim() != rank) {
        return false;
    }
    if rank == 0 {
        return true;
    }
    max_cones.iter().all(|c| {
        (0..c.dim()).all(|skip| {
            let facet = Cone {
                rays: c.rays.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &r)| r).collect(),
            };
            max_cones.iter().filter(|d| facet.is_face_of(d)).count() == 2
        })
    })
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Standard fans used throughout tests and examples.
pub mod library {
    use super::*;
    use alloc::vec;

    fn build(rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Fan {
        Fan::new(FanData {
            rank,
            rays: rays.into_iter().map(LatticeVector::new).collect(),
            max_cones: cones,
        })
        .expect("library fan is valid")
    }

    /// Affine space `A^s` inside a lattice of rank `n ≥ s`: one cone on the
    /// first `s` standard basis vectors.
    pub fn affine_space(s: usize, n: usize) -> Fan {
        assert!(s <= n);
        let rays = (0..s)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        build(n, rays, vec![(0..s).collect()])
    }

    /// `P^n`: rays `e_1..e_n, -(e_1+...+e_n)`; maximal cones omit one ray
    /// each, starting with the cone on `e_1..e_n`.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).rev().map(|skip| (0..=n).filter(|&r| r != skip).collect()).collect();
        build(n, rays, cones)
    }

    /// Hirzebruch surface `F_a`: rays `(1,0),(0,1),(-1,a),(0,-1)`.
    pub fn hirzebruch(a: i64) -> Fan {
        build(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
    }

    /// `P^2` blown up at a torus-fixed point.
    pub fn blowup_p2() -> Fan {
        build(
            2,
            vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
    }

    pub fn p1_times_p1() -> Fan {
        hirzebruch(0)
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;
    use alloc::vec;

    fn data(rank: usize, rays: &[&[i64]], cones: &[&[usize]]) -> FanData {
        FanData {
            rank,
            rays: rays.iter().map(|r| LatticeVector::new(r.to_vec())).collect(),
            max_cones: cones.iter().map(|c| c.to_vec()).collect(),
        }
    }

    #[test]
    fn p2_is_valid_and_complete() {
        let d = data(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]]);
        assert!(validate_fan(&d).unwrap().is_ok());
        assert!(Fan::new(d).unwrap().is_complete());
    }

    #[test]
    fn non_smooth_cone_is_reported() {
        let d = data(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]);
        let r = validate_fan(&d).unwrap();
        assert_eq!(r.violations, vec![Violation::NotSmooth { cone: 0 }]);
    }

    #[test]
    fn ray_inside_other_cone_breaks_fan_condition() {
        let d = data(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[2]]);
        let r = validate_fan(&d).unwrap();
        assert_eq!(r.violations, vec![Violation::FanCondition { cone: 0, other: 1, ray: 2 }]);
        assert!(matches!(Fan::new(d), Err(Error::InvalidFan(_))));
    }

    #[test]
    fn structural_errors() {
        let bad_len = data(2, &[&[1, 0], &[0, 1, 0]], &[&[0, 1]]);
        assert!(matches!(validate_fan(&bad_len), Err(Error::DimensionMismatch { .. })));
        let dup = data(2, &[&[1, 0], &[1, 0]], &[&[0], &[1]]);
        assert_eq!(validate_fan(&dup), Err(Error::DuplicateRay(1, 2)));
        let range = data(2, &[&[1, 0]], &[&[0, 3]]);
        assert_eq!(validate_fan(&range), Err(Error::RayIndexOutOfRange { index: 4, rays: 1 }));
    }

    #[test]
    fn other_violations() {
        let d = data(2, &[&[2, 0], &[0, 1]], &[&[0, 1]]);
        let r = validate_fan(&d).unwrap();
        assert!(r.violations.contains(&Violation::NotPrimitive { ray: 0 }));
        assert_eq!(r.violations[0].to_string(), "ray 1 not primitive");

        let d = data(2, &[&[1, 0], &[0, 1], &[-1, 0]], &[&[0, 1], &[0]]);
        let r = validate_fan(&d).unwrap();
        assert!(r.violations.contains(&Violation::NestedCones { inner: 1, outer: 0 }));
        assert!(r.violations.contains(&Violation::UnusedRay { ray: 2 }));
    }

    #[test]
    fn faces_enumeration() {
        let p1 = projective_space(1);
        assert_eq!(p1.all_faces(), [Cone::empty(), Cone::new(vec![0]), Cone::new(vec![1])]);
        let p2 = projective_space(2);
        assert_eq!(p2.all_faces().len(), 7);
        assert_eq!(p2.all_faces().iter().filter(|c| c.dim() == 2).count(), 3);
        let a1 = affine_space(1, 1);
        assert_eq!(a1.all_faces(), [Cone::empty(), Cone::new(vec![0])]);
    }

    #[test]
    fn nonfaces() {
        for n in 1..=4 {
            assert_eq!(projective_space(n).minimal_nonfaces(), [Cone::new((0..=n).collect())]);
        }
        for s in 1..=3 {
            assert!(affine_space(s, s).minimal_nonfaces().is_empty());
        }
        for a in -3..=3 {
            assert_eq!(hirzebruch(a).minimal_nonfaces(), [Cone::new(vec![0, 2]), Cone::new(vec![1, 3])]);
        }
    }

    #[test]
    fn orbit_data_examples() {
        let f = Fan::new(data(2, &[&[1, 1], &[0, 1]], &[&[0, 1]])).unwrap();
        let od = f.orbit_data(&Cone::new(vec![0, 1])).unwrap();
        assert_eq!(od.dual, [Character::new(vec![1, 0]), Character::new(vec![-1, 1])]);
        let od = f.orbit_data(&Cone::empty()).unwrap();
        assert!(od.basis.is_empty() && od.dual.is_empty());
        assert_eq!(od.completion.len(), 2);
        assert_eq!(f.orbit_data(&Cone::new(vec![0, 2])), Err(Error::NotAFace));
    }

    #[test]
    fn standard_fans_validate() {
        for s in 1..=3 {
            affine_space(s, s);
            affine_space(s, 3);
        }
        for n in 1..=4 {
            let f = projective_space(n);
            assert!(f.is_complete());
            assert_eq!(f.max_cones()[0], Cone::new((0..n).collect()));
        }
        for a in -3..=3 {
            let f = hirzebruch(a);
            assert!(f.is_complete());
            assert_eq!(f.max_cones().len(), f.num_rays());
        }
        assert!(blowup_p2().is_complete());
        assert!(!affine_space(2, 2).is_complete());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
