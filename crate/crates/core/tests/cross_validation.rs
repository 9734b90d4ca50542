//! The coset-based face rules against the brute-force geometric oracle.

use std::collections::BTreeSet;

use frobtope::embedding::{
    affine_rank, coset_span_orthogonality, gram_census, relation_coset_constancy,
    relations_span_coset_differences, vertices,
};
use frobtope::facecomb::{enumerate_facets, fvector, is_proper_face};
use frobtope::families::{build_a4, build_cyclic, build_dihedral, build_pq};
use frobtope::frobenius::star_property_check;
use frobtope::oracle::{
    face_lattice_from_incidence, OracleCaps, Point, PointConfiguration, VertexFacetIncidence,
};
use frobtope::FrobeniusSystem;
use itertools::Itertools;

fn small_systems() -> Vec<(String, FrobeniusSystem)> {
    let mut out = vec![
        ("D3".to_string(), build_dihedral(3).unwrap()),
        ("D5".to_string(), build_dihedral(5).unwrap()),
        ("A4".to_string(), build_a4().unwrap()),
    ];
    for n in 1..=6 {
        out.push((format!("Z{n}"), build_cyclic(n).unwrap()));
    }
    out
}

fn config(sys: &FrobeniusSystem) -> PointConfiguration {
    let pts: Vec<Point> = vertices(sys).iter().map(|v| v.to_point()).collect();
    PointConfiguration::new(pts).unwrap()
}

#[test]
fn brute_force_facets_equal_transversal_complements() {
    let caps = OracleCaps::default();
    for (name, sys) in small_systems() {
        let cfg = config(&sys);
        let brute: BTreeSet<Vec<usize>> =
            cfg.brute_force_facets(&caps).unwrap().into_iter().collect();
        let rule: BTreeSet<Vec<usize>> = enumerate_facets(&sys).map(|f| f.members).collect();
        assert_eq!(brute, rule, "{name}");
        for facet in &brute {
            assert!(cfg.is_affinely_independent(facet), "{name}: {facet:?}");
        }
    }
}

#[test]
fn oracle_lattice_matches_generating_function() {
    let caps = OracleCaps::default();
    for (name, sys) in small_systems() {
        let cfg = config(&sys);
        let facets = cfg.brute_force_facets(&caps).unwrap();
        let inc = VertexFacetIncidence::from_facets(cfg.len(), &facets);
        assert!(!inc.has_duplicate_rows());
        assert!(inc.row_sizes().iter().all(|&s| s == sys.order() - sys.h()));
        let lattice = face_lattice_from_incidence(&inc, &cfg, &caps).unwrap();
        assert_eq!(lattice.fvector, fvector(sys.n(), sys.h()), "{name}");
        if sys.polytope_dim() >= 2 {
            assert!(lattice.ridge_property(), "{name}");
        }
        for face in &lattice.faces {
            if face.members.len() < sys.order() {
                assert!(is_proper_face(&sys, &face.members), "{name}: {face:?}");
                assert_eq!(face.dim, face.members.len() as i64 - 1);
            }
        }
    }
}

#[test]
fn supporting_functionals_certify_proper_faces_of_d5() {
    let sys = build_dihedral(5).unwrap();
    let cfg = config(&sys);
    // Every subset of size ≤ 3 plus every facet, checked both ways.
    for size in 0..=3 {
        for x in (0..10).combinations(size) {
            assert_eq!(
                cfg.find_supporting_functional(&x).is_some(),
                is_proper_face(&sys, &x)
            );
        }
    }
    for x in [vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9, 0]] {
        assert!(cfg.find_supporting_functional(&x).is_none());
    }
}

#[test]
fn structural_invariants_of_constructed_systems() {
    let systems = [
        build_dihedral(3).unwrap(),
        build_dihedral(7).unwrap(),
        build_a4().unwrap(),
        build_pq(7, 3, 2).unwrap(),
        build_pq(13, 3, 3).unwrap(),
        build_cyclic(6).unwrap(),
    ];
    for sys in &systems {
        sys.validate().unwrap();
        assert_eq!(sys.order(), sys.n() * sys.h());
        assert!(star_property_check(sys));
        assert!(gram_census(sys).pattern_holds());
        assert!(coset_span_orthogonality(sys));
        let rank = affine_rank(&vertices(sys));
        assert_eq!(rank.basis.rank(), sys.h() - 1);
        assert_eq!(rank.dim, sys.polytope_dim() as i64);
        assert!(relation_coset_constancy(&rank.basis, sys));
        assert!(relations_span_coset_differences(&rank.basis, sys));
        let kernel = affine_rank(&vertices(sys)[..sys.n()]);
        assert_eq!((kernel.dim, kernel.basis.rank()), (sys.n() as i64 - 1, 0));
    }
}

#[test]
fn dihedral_and_pq_presentations_agree() {
    for p in [3usize, 5, 7, 11] {
        let d = build_dihedral(p).unwrap();
        let m = build_pq(p, 2, p - 1).unwrap();
        assert_eq!((d.n(), d.h(), d.order()), (m.n(), m.h(), m.order()));
        assert_eq!(fvector(d.n(), d.h()), fvector(m.n(), m.h()));
    }
}
