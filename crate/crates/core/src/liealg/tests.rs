use num_traits::Zero;

use super::zoo::{self, point};
use super::*;
use crate::exactmath::rat;

fn sl2_with(brackets: &[(usize, usize, usize, i64)]) -> Result<LieAlgebra> {
    LieAlgebra::new(3, brackets.iter().map(|&(i, j, k, c)| (i, j, k, rat(c))))
}

#[test]
fn abelian_is_valid() {
    assert!(LieAlgebra::abelian(4).validate().is_ok());
}

#[test]
fn sl2_is_valid() {
    assert!(zoo::sl2().validate().is_ok());
    // [h, e] = 2e stated with the indices reversed.
    let alt = sl2_with(&[(1, 0, 0, 2), (1, 2, 2, -2), (0, 2, 1, 1)]).unwrap();
    assert_eq!(alt, zoo::sl2());
}

#[test]
fn rescaled_sl2_bracket_still_satisfies_jacobi() {
    // [e, f] = 2h is the same algebra with f rescaled, so nothing is violated.
    assert!(sl2_with(&[(0, 1, 0, -2), (1, 2, 2, -2), (0, 2, 1, 2)]).is_ok());
}

#[test]
fn broken_sl2_reports_the_triple() {
    // [h, f] = −3f is inconsistent with [h, e] = 2e and [e, f] = h.
    let err = sl2_with(&[(0, 1, 0, -2), (1, 2, 2, -3), (0, 2, 1, 1)]).unwrap_err();
    let Error::Violation(v) = err else { panic!("expected a violation, got {err}") };
    assert_eq!(v.kind, ViolationKind::Jacobi);
    assert_eq!((v.i, v.j, v.k), (0, 1, Some(2)));
    assert_eq!(v.at, vec![1]);
    // [[e,h],f] + [[h,f],e] + [[f,e],h] = −2h + 3h + 0 = h.
    assert_eq!(v.residual.0, rat(1));
}

#[test]
fn diagonal_bracket_rejected() {
    assert!(LieAlgebra::new(2, [(0, 0, 1, rat(1))]).is_err());
    assert!(LieAlgebra::new(2, [(0, 2, 1, rat(1))]).is_err());
}

#[test]
fn derived_representations_are_homomorphisms() {
    for e in zoo::all() {
        assert!(Representation::adjoint(&e.algebra).validate().is_ok(), "{}", e.name);
        assert!(Representation::coadjoint(&e.algebra).validate().is_ok(), "{}", e.name);
        assert!(e.representation.validate().is_ok(), "{}", e.name);
    }
}

#[test]
fn abelian_coadjoint_is_zero() {
    let rep = Representation::coadjoint(&LieAlgebra::abelian(3));
    assert!(rep.matrices().iter().all(QMatrix::is_zero));
}

#[test]
fn heisenberg_adjoint() {
    let h3 = zoo::entry("h3").unwrap().algebra;
    let ad = Representation::adjoint(&h3);
    assert_eq!(ad.matrices()[0], QMatrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]));
    assert!(ad.matrices()[1..].iter().any(|m| !m.is_zero()));
    assert!(ad.matrices()[2].is_zero());
}

#[test]
fn sl2_adjoint_matrices() {
    let ad = Representation::adjoint(&zoo::sl2());
    // ad(h) = diag(2, 0, −2); ad(e): h ↦ −2e, f ↦ h.
    assert_eq!(ad.matrices()[1], QMatrix::from_ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
    assert_eq!(ad.matrices()[0], QMatrix::from_ints(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]));
}

#[test]
fn broken_representation_reported() {
    let rho = vec![
        QMatrix::from_ints(&[&[0, 1], &[0, 0]]),
        QMatrix::from_ints(&[&[1, 0], &[0, 1]]),
        QMatrix::from_ints(&[&[0, 0], &[1, 0]]),
    ];
    let err = Representation::new(zoo::sl2(), rho).unwrap_err();
    let Error::Violation(v) = err else { panic!() };
    assert_eq!(v.kind, ViolationKind::Homomorphism);
    assert_eq!((v.i, v.j), (0, 1));
}

#[test]
fn r_operator_examples() {
    let h3 = zoo::entry("h3").unwrap().representation;
    assert!(h3.r_operator(&point(&[0, 0, 0])).unwrap().is_zero());
    assert_eq!(h3.orbit_dim(&point(&[4, -1, 3])).unwrap(), 2);
    assert_eq!(h3.orbit_dim(&point(&[4, -1, 0])).unwrap(), 0);
    let x = point(&[2, 5, 7]);
    let r = h3.r_operator(&x).unwrap();
    for j in 0..3 {
        assert_eq!(r.column(j), h3.matrices()[j].mul_vec(&x));
    }
    let std = zoo::entry("sl2-std").unwrap().representation;
    assert_eq!(std.orbit_dim(&point(&[1, 0])).unwrap(), 2);
    assert!(h3.r_operator(&point(&[1, 2])).is_err());
}

#[test]
fn coadjoint_r_operator_is_skew() {
    for e in zoo::all().into_iter().filter(|e| e.is_coadjoint()) {
        let x = point(&[3, -2, 5][..e.algebra.dim()]);
        let r = e.representation.r_operator(&x).unwrap();
        assert_eq!(r.transpose(), r.scale(&rat(-1)), "{}", e.name);
    }
}

#[test]
fn stabilizer_examples() {
    let zero = Representation::zero(&zoo::sl2(), 2);
    assert_eq!(zero.stabilizer(&point(&[1, 1])).unwrap().len(), 3);
    let co = zoo::entry("sl2").unwrap().representation;
    assert_eq!(co.stabilizer(&point(&[1, 1, 1])).unwrap().len(), 1);
    let std = zoo::entry("sl2-std").unwrap().representation;
    let st = std.stabilizer(&point(&[1, 0])).unwrap();
    assert_eq!(st, vec![vec![rat(1), rat(0), rat(0)]]);
}

#[test]
fn regular_dims_examples() {
    let zero = Representation::zero(&LieAlgebra::abelian(3), 2);
    let d = zero.regular_dims(8, 1, 1000).unwrap();
    assert_eq!((d.orbit_dim, d.dim_st, d.codim_orbit), (0, 3, 2));
    for name in ["sl2", "h3"] {
        let d = zoo::entry(name).unwrap().representation.regular_dims(8, 1, 1000).unwrap();
        assert_eq!((d.orbit_dim, d.dim_st, d.codim_orbit), (2, 1, 1), "{name}");
    }
}

#[test]
fn regular_dims_dominates_every_sample() {
    for e in zoo::all() {
        let rep = &e.representation;
        let d = rep.regular_dims(8, 7, 1000).unwrap();
        assert_eq!(rep.orbit_dim(&d.witness).unwrap(), d.orbit_dim);
        let again = rep.regular_dims(8, 99, 1000).unwrap();
        assert_eq!(again.orbit_dim, d.orbit_dim, "{}", e.name);
        for t in 0..20 {
            let x = crate::rng::SplitMix64::stream(5, t).vector(rep.dim_v(), 3);
            assert!(rep.orbit_dim(&x).unwrap() <= d.orbit_dim);
        }
        assert_eq!(d.dim_st, e.expected.dim_st_reg, "{}", e.name);
        assert_eq!(d.codim_orbit, e.expected.codim_orbit_reg, "{}", e.name);
    }
}

#[test]
fn symbolic_r_operator_specializes() {
    for e in zoo::all() {
        let rep = &e.representation;
        let x = point(&[2, -3, 1][..rep.dim_v()]);
        let sym = rep.r_operator_symbolic();
        let direct = rep.r_operator(&x).unwrap();
        assert_eq!(sym.map(|p| p.eval(&x)), direct, "{}", e.name);
    }
}

#[test]
fn algebra_file_round_trip() {
    let text = r#"{"dim": 3, "brackets": [{"i": 0, "j": 1, "k": 2, "c": "1"}]}"#;
    let alg = serde_json::from_str::<AlgebraFile>(text).unwrap().into_algebra().unwrap();
    assert_eq!(alg, zoo::entry("h3").unwrap().algebra);
    let json = serde_json::to_string(&AlgebraFile::from_algebra(&alg)).unwrap();
    assert_eq!(json, r#"{"dim":3,"brackets":[{"i":0,"j":1,"k":2,"c":"1"}]}"#);

    let rep: RepresentationFile = serde_json::from_str(r#"{"derived": "coadjoint"}"#).unwrap();
    assert_eq!(rep.into_representation(&alg).unwrap(), Representation::coadjoint(&alg));
    let explicit = r#"{"dimV": 2, "matrices": [[[0,1],[0,0]], [[1,0],[0,-1]], [[0,0],[1,0]]]}"#;
    let rep: RepresentationFile = serde_json::from_str(explicit).unwrap();
    let std = rep.into_representation(&zoo::sl2()).unwrap();
    assert_eq!(std, zoo::entry("sl2-std").unwrap().representation);
}

#[test]
fn zoo_names_resolve() {
    assert_eq!(zoo::all().len(), 6);
    assert!(matches!(zoo::entry("e8"), Err(Error::UnknownZoo(_))));
    for e in zoo::all() {
        assert!(e.invariants.iter().all(|f| !f.is_zero()));
        assert!(!rat(1).is_zero());
    }
}
