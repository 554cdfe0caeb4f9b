use toric_cobordism::coeff::LawKind;
use toric_cobordism::fan::library::*;
use toric_cobordism::fan::Fan;
use toric_cobordism::lattice::Character;
use toric_cobordism::monomial::Monomial;
use toric_cobordism::ordinary::*;

fn ranks(pres: &Presentation) -> Vec<usize> {
    GradedRankTable::compute(pres, None).unwrap().ranks
}

#[test]
fn projective_spaces_universal() {
    for n in 1..=4 {
        let p = build_presentation(&projective_space(n), LawKind::UniversalRational, 3).unwrap();
        assert_eq!(ranks(&p), vec![1; n + 1]);
        let sys = reduction_system(&p, None).unwrap();
        assert_eq!(sys.graded_rank(n as u32 + 1), 0);
        assert!(sys.normal_form(&p.var(n).pow(n as u32 + 1)).unwrap().is_zero());
    }
}

#[test]
fn affine_spaces_any_law() {
    for kind in [LawKind::Additive, LawKind::Multiplicative, LawKind::UniversalRational] {
        for s in 1..=3 {
            let p = build_presentation(&affine_space(s, s), kind, 3).unwrap();
            let mut expected = vec![0; s + 1];
            expected[0] = 1;
            assert_eq!(ranks(&p), expected);
        }
    }
}

#[test]
fn chow_rings_of_surfaces() {
    let surfaces: Vec<Fan> = vec![hirzebruch(0), hirzebruch(1), hirzebruch(2), hirzebruch(3), blowup_p2(), p1_times_p1()];
    for fan in &surfaces {
        let p = build_presentation(fan, LawKind::Additive, 0).unwrap();
        let table = GradedRankTable::compute(&p, None).unwrap();
        assert_eq!(table.ranks, vec![1, 2, 1]);
        assert!(!table.has_torsion());
    }
}

#[test]
fn ktheory_total_rank_is_number_of_maximal_cones() {
    for fan in [projective_space(1), projective_space(2), hirzebruch(0), hirzebruch(1), hirzebruch(2), blowup_p2()] {
        let p = build_presentation(&fan, LawKind::Multiplicative, fan.rank() as u32).unwrap();
        assert_eq!(GradedRankTable::compute(&p, None).unwrap().total(), fan.max_cones().len());
    }
}

#[test]
fn rules_for_projective_plane() {
    let p = build_presentation(&projective_space(2), LawKind::Additive, 0).unwrap();
    let sys = reduction_system(&p, None).unwrap();
    let rules = sys.rules();
    assert_eq!(rules.len(), 1);
    assert_eq!(rules[0].0, Monomial::var_pow(2, 3));
}

#[test]
fn redundant_characters_on_blowup() {
    let p = build_presentation(&blowup_p2(), LawKind::UniversalRational, 3).unwrap();
    for base in 0..4 {
        let sys = reduction_system(&p, Some(base)).unwrap();
        for chi in [[1, 1], [2, -3], [-1, 4]] {
            let r = p.character_relation(&Character::new(chi.to_vec())).unwrap();
            assert!(sys.normal_form(&r).unwrap().is_zero());
        }
    }
}

#[test]
fn forgetful_check_on_threefolds() {
    for fan in [projective_space(3), affine_space(3, 3), affine_space(1, 2)] {
        let p = build_presentation(&fan, LawKind::UniversalRational, 2).unwrap();
        for k in 0..=fan.rank() as u32 + 1 {
            assert!(forgetful_check(&p, k).unwrap());
        }
    }
}
