use chowwitt::linalg::group::GroupType;
use chowwitt::linalg::{big, GroupHom, IntMatrix};
use chowwitt::scalar::*;
use std::sync::Arc;

fn fields() -> Vec<FieldModel> {
    let mut v = vec![FieldModel::complex(), FieldModel::real()];
    for q in [3, 5, 7, 9, 11, 13] {
        v.push(FieldModel::finite(q).unwrap());
    }
    v
}

#[test]
fn witt_rings() {
    assert_eq!(witt_ring(&FieldModel::real()).unwrap().group.group_type(), GroupType::free(1));
    assert_eq!(witt_ring(&FieldModel::complex()).unwrap().group.group_type(), GroupType::cyclic(2));
    let w5 = witt_ring(&FieldModel::finite(5).unwrap()).unwrap();
    assert_eq!(w5.group.group_type().order(), Some(big(4)));
    assert_eq!(torsion_exponent(&w5.group), big(2));
    let w3 = witt_ring(&FieldModel::finite(3).unwrap()).unwrap();
    assert_eq!(w3.group.group_type(), GroupType::cyclic(4));
}

#[test]
fn witt_order_matches_anisotropic_count() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let w = witt_ring(&FieldModel::finite(q).unwrap()).unwrap();
        let n = count_anisotropic_classes(q).unwrap();
        assert_eq!(w.group.group_type().order(), Some(big(n as i64)), "q = {q}");
    }
}

#[test]
fn grothendieck_witt_rings() {
    assert_eq!(grothendieck_witt(&FieldModel::complex()).unwrap().group.group_type(), GroupType::free(1));
    assert_eq!(grothendieck_witt(&FieldModel::real()).unwrap().group.group_type(), GroupType::free(2));
    let gw3 = grothendieck_witt(&FieldModel::finite(3).unwrap()).unwrap();
    assert_eq!(gw3.group.group_type(), GroupType::free(1).sum(&GroupType::cyclic(2)));
    for f in fields() {
        let gw = grothendieck_witt(&f).unwrap();
        let (p, _, _) = grothendieck_witt_fiber(&f).unwrap();
        assert_eq!(gw.group.group_type(), p.group_type(), "{f}");
        assert!(gw.check_axioms(), "{f}");
        assert!(witt_ring(&f).unwrap().check_axioms(), "{f}");
    }
}

#[test]
fn ideal_powers() {
    let c = FieldModel::complex();
    assert!(fundamental_ideal_power(&c, 1).unwrap().group.is_trivial());
    let r = FieldModel::real();
    for j in 0..5u32 {
        let s = fundamental_ideal_power(&r, j).unwrap();
        assert_eq!(s.group.group_type(), GroupType::free(1));
        assert_eq!(s.inclusion.image_index(), big(1 << j));
        let (piece, q) = ibar(&r, j).unwrap();
        assert_eq!(piece.group_type(), GroupType::cyclic(2));
        assert!(q.is_surjective());
    }
    let f3 = FieldModel::finite(3).unwrap();
    assert!(ibar(&f3, 2).unwrap().0.is_trivial());
    assert!(ibar(&c, 1).unwrap().0.is_trivial());
}

#[test]
fn ideal_products() {
    for f in fields() {
        let w = witt_ring(&f).unwrap();
        let s = stabilization_index(&f).unwrap_or(3);
        for j in 0..=s {
            for l in 0..=(s - j) {
                let a = fundamental_ideal_power(&f, j).unwrap();
                let b = fundamental_ideal_power(&f, l).unwrap();
                let c = fundamental_ideal_power(&f, j + l).unwrap();
                for x in a.generators.rows_iter() {
                    for y in b.generators.rows_iter() {
                        let p = w.mul(x, y);
                        let free = Arc::new(chowwitt::linalg::FpAbGroup::free(1));
                        let h = GroupHom::new(free, w.group.clone(), IntMatrix::from_rows(w.dim(), vec![p]));
                        let (_, proj) = c.inclusion.cokernel();
                        assert!(h.compose(&proj).is_zero_map(), "{f}: I^{j} I^{l}");
                    }
                }
            }
        }
    }
}

#[test]
fn hyperbolic_and_ranks() {
    for f in fields() {
        let gw = grothendieck_witt(&f).unwrap();
        let w = witt_ring(&f).unwrap();
        let (rk, rk2) = rank_maps(&f).unwrap();
        assert_eq!(rk.apply(&gw.hyperbolic), vec![big(2)]);
        assert!(rk2.is_surjective());
        // GW / h = W
        let free = Arc::new(chowwitt::linalg::FpAbGroup::free(1));
        let h = GroupHom::new(free, gw.group.clone(), IntMatrix::from_rows(gw.dim(), vec![gw.hyperbolic.clone()]));
        let (q, _) = h.cokernel();
        assert_eq!(q.group_type(), w.group.group_type(), "{f}");
        // ker rk on GW maps isomorphically onto ker rk2 on W
        let (k1, i1) = rk.kernel();
        let (_, i2) = rk2.kernel();
        let proj = gw_to_w(&f).unwrap();
        let to_w = i1.compose(&proj);
        assert!(to_w.is_injective(), "{f}");
        let (_, p1) = to_w.cokernel();
        let (_, p2) = i2.cokernel();
        assert!(to_w.compose(&p2).is_zero_map() && i2.compose(&p1).is_zero_map(), "{f}");
        assert_eq!(k1.group_type(), i2.domain.group_type(), "{f}");
        for a in 0..gw.dim() {
            let x = gw.basis(a);
            assert_eq!(gw.rank_of(&gw.mul(&gw.hyperbolic, &x)), big(2) * gw.rank_of(&x));
        }
    }
}

#[test]
fn field_validation() {
    assert!(FieldModel::finite(15).is_err());
    assert!(FieldModel::finite(4).is_err());
    assert!(FieldModel::finite(17).is_err());
    let mut f = FieldModel::finite(3).unwrap();
    assert!(f.exclude(6).is_err());
    assert!(f.exclude(5).is_ok());
    assert_eq!(FieldModel::parse("F9").unwrap().code(), "F9");
}
