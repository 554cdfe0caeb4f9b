use toric_cobordism::coeff::LawKind;
use toric_cobordism::equivariant::*;
use toric_cobordism::fan::library::*;
use toric_cobordism::fan::Fan;
use toric_cobordism::fgl::FormalGroupLaw;
use toric_cobordism::lattice::Character;

fn fans() -> Vec<Fan> {
    vec![affine_space(2, 2), projective_space(2), projective_space(3), hirzebruch(3), blowup_p2(), p1_times_p1()]
}

#[test]
fn nonfaces_multiply_to_zero() {
    let f = FormalGroupLaw::new(LawKind::UniversalRational, 2, 4);
    for fan in fans() {
        let m = EquivariantModel::new(&fan, &f);
        for s in fan.minimal_nonfaces() {
            assert!(m.product_of_classes(s.rays()).unwrap().is_zero());
        }
    }
}

#[test]
fn psi_is_injective_in_low_degrees() {
    let f = FormalGroupLaw::new(LawKind::Additive, 0, 3);
    for fan in fans() {
        let m = EquivariantModel::new(&fan, &f);
        for k in 0..=3 {
            let (rank, count, compatible) = psi_slice_rank(&m, k).unwrap();
            assert!(compatible);
            assert_eq!(rank, count);
            assert_eq!(graded_rank_pp(&fan, k), count);
        }
    }
}

#[test]
fn first_chern_class_matches_both_models() {
    let f = FormalGroupLaw::new(LawKind::Multiplicative, 3, 3);
    for fan in fans() {
        let m = EquivariantModel::new(&fan, &f);
        let chi = Character::new((1..=fan.rank() as i64).collect());
        let direct = m.first_chern(&chi).unwrap();
        let via_sr = m.psi(&m.sr_first_chern(&chi).unwrap()).unwrap();
        assert!(direct.eq_truncated(&via_sr));
        assert!(m.is_compatible(&direct));
    }
}
