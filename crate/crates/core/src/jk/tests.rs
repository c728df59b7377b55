use super::*;
use crate::exactmath::rat;
use crate::liealg::zoo::{self, point};

fn rep(name: &str) -> Representation {
    zoo::entry(name).unwrap().representation
}

fn report(name: &str) -> JKReport {
    jk_invariants(&rep(name), &Sampling::default()).unwrap()
}

fn x(i: usize, n: usize) -> MultiPoly {
    MultiPoly::var(n, i)
}

#[test]
fn zero_representation() {
    let zero = Representation::zero(&LieAlgebra::abelian(3), 2);
    let r = jk_invariants(&zero, &Sampling::default()).unwrap();
    assert_eq!(r.eps(), &[0, 0, 0]);
    assert_eq!(r.eta(), &[0, 0]);
    assert!(r.invariants.jordan.is_empty());
    assert_eq!((r.k_hor(), r.k_vert()), (3, 2));
    assert!(r.identities_hold());
    assert!(r.witness.agreed);
}

#[test]
fn zoo_reports_match_expectations() {
    for e in zoo::all() {
        let r = jk_invariants(&e.representation, &Sampling::default()).unwrap();
        let want = &e.expected;
        assert_eq!(r.eps(), want.eps.as_slice(), "{}", e.name);
        assert_eq!(r.eta(), want.eta.as_slice(), "{}", e.name);
        assert_eq!(r.invariants.jordan.shape(), want.jordan_shape, "{}", e.name);
        assert_eq!((r.k_hor(), r.k_vert(), r.deg_d()), (want.k_hor, want.k_vert, want.deg_d), "{}", e.name);
        assert_eq!((r.dim_st_reg, r.codim_orbit_reg), (want.dim_st_reg, want.codim_orbit_reg));
        assert!(r.identities_hold(), "{}", e.name);
        assert!(r.witness.agreed && !r.witness.escalated, "{}", e.name);
        assert_eq!(r.witness.agreement, 8);
    }
}

#[test]
fn heisenberg_eigenvalue_is_the_ratio_of_centres() {
    let r = report("h3");
    let entry = &r.invariants.jordan.entries[0];
    // Rank drops where x₃ − λ₀a₃ = 0.
    assert_eq!(entry.eigenvalue().unwrap(), &r.x[2] / &r.a[2]);
    assert_eq!(entry.sizes, vec![1, 1]);
}

#[test]
fn trials_below_three_rejected() {
    assert!(jk_invariants(&rep("sl2"), &Sampling::new(1, 2, 1000)).is_err());
}

#[test]
fn degenerate_sampling_is_flagged_not_misreported() {
    // With coordinates in {−1, 0, 1} many pairs of aff(1) have x₂a₂ = 0
    // patterns that change the type; the flag must say so if they disagree.
    let r = jk_invariants(&rep("aff1"), &Sampling::new(3, 8, 1)).unwrap();
    if r.witness.agreed {
        assert_eq!(r.algebraic_type(), report("aff1").algebraic_type());
    } else {
        assert!(r.witness.escalated);
    }
}

#[test]
fn semiinvariant_examples() {
    let s = fundamental_semiinvariant(&rep("sl2"), DEFAULT_CEILING).unwrap();
    assert_eq!(s.degree, 0);
    let s = fundamental_semiinvariant(&rep("h3"), DEFAULT_CEILING).unwrap();
    assert_eq!(s.poly, x(2, 3).pow(2));
    let s = fundamental_semiinvariant(&rep("aff1"), DEFAULT_CEILING).unwrap();
    assert_eq!(s.poly, x(1, 2).pow(2));
    let s = fundamental_semiinvariant(&rep("sl2-std"), DEFAULT_CEILING).unwrap();
    assert_eq!(s.degree, 0);
    let s = fundamental_semiinvariant(&rep("abelian2"), DEFAULT_CEILING).unwrap();
    assert_eq!((s.degree, s.minor_size), (0, 0));
}

#[test]
fn semiinvariant_divides_every_minor() {
    for e in zoo::all() {
        let (_, minors) = symbolic_minors(&e.representation, DEFAULT_CEILING).unwrap();
        let s = fundamental_semiinvariant(&e.representation, DEFAULT_CEILING).unwrap();
        for p in &minors {
            assert!(p.div_exact(&s.poly).is_some(), "{}", e.name);
        }
        let quotients = cofactors(&e.representation, DEFAULT_CEILING).unwrap();
        assert!(multi_gcd(&quotients).unwrap().is_constant(), "{}", e.name);
    }
}

#[test]
fn degree_via_pencil_agrees_with_symbolic() {
    for e in zoo::all() {
        let symbolic = fundamental_semiinvariant(&e.representation, DEFAULT_CEILING).unwrap().degree;
        let via = semiinvariant_degree_via_pencil(&e.representation, &Sampling::default()).unwrap();
        assert_eq!(symbolic, via, "{}", e.name);
    }
}

#[test]
fn ceiling_is_enforced() {
    let err = fundamental_semiinvariant(&rep("sl2"), 5).unwrap_err();
    assert!(matches!(err, Error::SymbolicCeiling { minors: 9, ceiling: 5 }));
}

#[test]
fn sing1_examples() {
    let h3 = rep("h3");
    assert!(!sing1_membership(&h3, &point(&[0, 0, 1]), DEFAULT_CEILING).unwrap());
    // Constant cofactors never vanish.
    assert!(!sing1_membership(&h3, &point(&[0, 0, 0]), DEFAULT_CEILING).unwrap());
    let sl2 = rep("sl2");
    assert!(sing1_membership(&sl2, &point(&[0, 0, 0]), DEFAULT_CEILING).unwrap());
    assert!(!sing1_membership(&sl2, &point(&[1, 2, 3]), DEFAULT_CEILING).unwrap());
    // For sl₂ the cofactors are the 2×2 minors, products of coordinates,
    // so Sing₁ = {0}: a line through two independent points avoids it.
    assert!(!line_meets_sing1(&sl2, &point(&[1, 0, 0]), &point(&[0, 1, 0]), DEFAULT_CEILING).unwrap());
    assert!(line_meets_sing1(&sl2, &point(&[1, 2, 3]), &point(&[2, 4, 6]), DEFAULT_CEILING).unwrap());
}

#[test]
fn coadjoint_symmetry() {
    for e in zoo::all().into_iter().filter(|e| e.is_coadjoint()) {
        let (_, check) = coadjoint_symmetry_check(&e.algebra, &Sampling::default()).unwrap();
        assert!(check.ok(), "{}: {check:?}", e.name);
    }
}

#[test]
fn l_space_examples() {
    let s = Sampling::default();
    let h3 = rep("h3");
    let l = l_spaces(&h3, &point(&[1, 2, 3]), &point(&[-2, 5, 7]), &s).unwrap();
    assert_eq!(l.l_hor, vec![vec![rat(0), rat(0), rat(1)]]);
    let sl2 = rep("sl2");
    let l = l_spaces(&sl2, &point(&[1, 2, 3]), &point(&[-2, 5, 7]), &s).unwrap();
    assert_eq!(l.l_hor.len(), 2);
    let zero = Representation::zero(&LieAlgebra::abelian(3), 2);
    let l = l_spaces(&zero, &point(&[1, 2]), &point(&[3, 4]), &s).unwrap();
    assert_eq!((l.l_hor.len(), l.l_vert.len()), (3, 2));
    let err = l_spaces(&h3, &point(&[1, 2, 0]), &point(&[3, 4, 0]), &s).unwrap_err();
    assert!(matches!(err, Error::DegenerateSpan { rank: 0, regular: 2 }));
}

#[test]
fn mobius_recombined_pairs_share_the_type() {
    for e in zoo::all() {
        let r = jk_invariants(&e.representation, &Sampling::default()).unwrap();
        let (x, a) = (&r.x, &r.a);
        let (al, be, ga, de) = (rat(2), rat(-1), rat(3), rat(5));
        let x2: Vec<Rational> = x.iter().zip(a).map(|(u, v)| &al * u + &be * v).collect();
        let a2: Vec<Rational> = x.iter().zip(a).map(|(u, v)| &ga * u + &de * v).collect();
        let other = pencil_invariants(&e.representation.r_pencil(&x2, &a2).unwrap()).unwrap();
        assert_eq!(other.algebraic_type(), r.algebraic_type(), "{}", e.name);
    }
}

#[test]
fn totals_are_stable_along_good_lines() {
    for e in zoo::all() {
        let rep = &e.representation;
        let mut seen = None;
        for t in 0..10u64 {
            let s = Sampling::new(100 + t, 8, 1000);
            let x = s.point(1, t, rep.dim_v());
            let a = s.point(2, t, rep.dim_v());
            if rep.orbit_dim(&a).unwrap() != rep.dim_v() - e.expected.codim_orbit_reg {
                continue;
            }
            if line_meets_sing1(rep, &x, &a, DEFAULT_CEILING).unwrap() {
                continue;
            }
            let inv = pencil_invariants(&rep.r_pencil(&x, &a).unwrap()).unwrap();
            let totals = (inv.k_hor, inv.k_vert, inv.deg_d);
            assert_eq!(*seen.get_or_insert(totals), totals, "{}", e.name);
        }
        assert!(seen.is_some(), "{}", e.name);
    }
}

#[test]
fn report_json_key_order() {
    let json = serde_json::to_value(report("h3")).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "rank", "eps", "eta", "jordan", "k_hor", "k_vert", "deg_D", "p", "q", "dim_g", "dim_V",
            "dim_st_reg", "codim_orbit_reg", "identities", "witness"
        ]
    );
}
