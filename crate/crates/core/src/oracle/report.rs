use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{
    check_vertex_cap, face_lattice_from_incidence, OracleCaps, Point, PointConfiguration,
    VertexFacetIncidence,
};
use crate::embedding::vertices;
use crate::error::OracleError;
use crate::facecomb::{enumerate_facets, fvector, FVector};
use crate::frobenius::FrobeniusSystem;
use crate::linalg::{dot, sub};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        CheckResult {
            name,
            pass: failure.is_none(),
            witness: failure,
        }
    }
}

/// Outcome of checking the free-sum structure of `P(G)` by brute force.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<CheckResult>,
    pub fvector_oracle: FVector,
    pub fvector_formula: FVector,
    pub facet_count: usize,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn average(points: &[Point]) -> Point {
    let count = BigRational::from_integer(BigInt::from(points.len()));
    let mut sum = vec![BigRational::zero(); points[0].len()];
    for p in points {
        for (s, x) in sum.iter_mut().zip(p) {
            *s += x;
        }
    }
    sum.into_iter().map(|s| s / &count).collect()
}

/// Runs the five brute-force checks on a system with at most
/// `caps.max_vertices` elements:
///
/// 1. each coset of `N` spans a simplex of dimension `n - 1`;
/// 2. every coset has the same vertex average `𝟏/n` as the whole polytope;
/// 3. the coset spans, translated to that common point, are orthogonal;
/// 4. the brute-force facets are exactly the transversal complements;
/// 5. the f-vector of the intersection-closed facet lattice matches the
///    generating function.
pub fn verify_theorem(
    sys: &FrobeniusSystem,
    caps: &OracleCaps,
) -> Result<TheoremReport, OracleError> {
    check_vertex_cap(sys.order(), caps)?;
    let n = sys.n();
    let points: Vec<Point> = vertices(sys).iter().map(|v| v.to_point()).collect();
    let config = PointConfiguration::new(points.clone())?;
    let cosets: Vec<Vec<usize>> = (0..sys.h())
        .map(|c| (c * n..(c + 1) * n).collect())
        .collect();
    let mut checks = Vec::new();

    let simplex_failure = cosets.iter().enumerate().find_map(|(c, members)| {
        let dim = config.subset_dim(members);
        (dim != n as i64 - 1)
            .then(|| format!("coset {c} spans dimension {dim}, expected {}", n - 1))
    });
    checks.push(CheckResult::new("cosets_are_simplices", simplex_failure));

    let center = average(&points);
    let uniform = BigRational::new(BigInt::from(1), BigInt::from(n));
    let bary_failure = if center.iter().any(|x| *x != uniform) {
        Some("vertex average of P(G) is not 1/n everywhere".to_string())
    } else {
        cosets.iter().enumerate().find_map(|(c, members)| {
            let pts: Vec<Point> = members.iter().map(|&i| points[i].clone()).collect();
            (average(&pts) != center).then(|| format!("coset {c} has a different barycenter"))
        })
    };
    checks.push(CheckResult::new("barycenter_coincidence", bary_failure));

    let centered: Vec<Point> = points.iter().map(|p| sub(p, &center)).collect();
    let mut orth_failure = None;
    'outer: for a in 0..points.len() {
        for b in a + 1..points.len() {
            if a / n != b / n && !dot(&centered[a], &centered[b]).is_zero() {
                orth_failure = Some(format!(
                    "elements {} and {} are not orthogonal after centering",
                    sys.elements()[a],
                    sys.elements()[b]
                ));
                break 'outer;
            }
        }
    }
    checks.push(CheckResult::new("coset_span_orthogonality", orth_failure));

    let brute = config.brute_force_facets(caps)?;
    let brute_set: BTreeSet<Vec<usize>> = brute.iter().cloned().collect();
    let rule_set: BTreeSet<Vec<usize>> = enumerate_facets(sys).map(|f| f.members).collect();
    let facet_failure = (brute_set != rule_set).then(|| {
        let missing = rule_set.difference(&brute_set).next();
        let extra = brute_set.difference(&rule_set).next();
        format!(
            "oracle found {} facets, rule gives {}; first missing {missing:?}, first extra {extra:?}",
            brute_set.len(),
            rule_set.len()
        )
    });
    checks.push(CheckResult::new("facets_match", facet_failure));

    let inc = VertexFacetIncidence::from_facets(points.len(), &brute);
    let lattice = face_lattice_from_incidence(&inc, &config, caps)?;
    let formula = fvector(n, sys.h());
    let fv_failure = (lattice.fvector != formula).then(|| {
        format!(
            "oracle {:?} vs formula {:?}",
            lattice.fvector.to_strings(),
            formula.to_strings()
        )
    });
    checks.push(CheckResult::new("fvector_match", fv_failure));

    Ok(TheoremReport {
        checks,
        fvector_oracle: lattice.fvector,
        fvector_formula: formula,
        facet_count: brute.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_cyclic, build_dihedral, build_pq};

    #[test]
    fn d3_and_d5_pass() {
        for sys in [build_dihedral(3).unwrap(), build_dihedral(5).unwrap()] {
            let report = verify_theorem(&sys, &OracleCaps::default()).unwrap();
            assert!(report.all_pass(), "{report:?}");
            assert_eq!(report.checks.len(), 5);
        }
    }

    #[test]
    fn regular_group_passes() {
        let report = verify_theorem(&build_cyclic(6).unwrap(), &OracleCaps::default()).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.facet_count, 6);
    }

    #[test]
    fn too_large_for_default_cap() {
        let sys = build_pq(7, 3, 2).unwrap();
        assert!(matches!(
            verify_theorem(&sys, &OracleCaps::default()),
            Err(OracleError::CapExceeded {
                what: "vertex count",
                value: 21,
                ..
            })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = verify_theorem(&build_dihedral(3).unwrap(), &OracleCaps::default()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["facet_count"], 9);
        assert_eq!(
            json["fvector_formula"],
            serde_json::json!(["1", "6", "15", "18", "9", "1"])
        );
        assert_eq!(json["checks"][0]["name"], "cosets_are_simplices");
        assert!(json["checks"][0].get("witness").is_none());
    }
}
