//! Brute-force exact geometry on explicit point sets.
//!
//! Nothing here uses the coset structure of a Frobenius group. Facets come
//! from testing every affinely independent `d`-subset of vertices for a
//! one-sided hyperplane, faces from closing the facets under intersection, and
//! supporting functionals from an exact feasibility LP. This is the independent
//! check for [`crate::facecomb`], practical only for small vertex counts.

mod lattice;
mod lp;
mod report;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::OracleError;
use crate::linalg::{self, dot, nullspace, sub, IncrementalBasis, RatVec};

pub use lattice::{face_lattice_from_incidence, FaceLattice, OracleFace, VertexFacetIncidence};
pub use lp::feasible_point;
pub use report::{verify_theorem, CheckResult, TheoremReport};

pub type Point = RatVec;

/// Limits that keep the oracle's exhaustive searches at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_vertices: usize,
    /// Bound on `C(|V|, dim)`, the number of candidate facet subsets.
    pub max_combinations: u128,
    pub max_faces: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_vertices: 14,
            max_combinations: 1_000_000,
            max_faces: 1_000_000,
        }
    }
}

/// `A(x) = constant + Σ coefficients[e]·x_e` on the ambient space. For vertex
/// matrices the coefficients are row-major over `x_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineFunctional {
    pub constant: BigRational,
    pub coefficients: RatVec,
}

impl AffineFunctional {
    pub fn evaluate(&self, x: &[BigRational]) -> BigRational {
        &self.constant + dot(&self.coefficients, x)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coefficients.iter().all(Zero::is_zero)
    }
}

#[derive(Serialize)]
struct FunctionalJson {
    constant: [String; 2],
    coefficients: Vec<[String; 2]>,
}

impl Serialize for AffineFunctional {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pair = |x: &BigRational| [x.numer().to_string(), x.denom().to_string()];
        FunctionalJson {
            constant: pair(&self.constant),
            coefficients: self.coefficients.iter().map(pair).collect(),
        }
        .serialize(s)
    }
}

/// Dimension of the affine span (`-1` for no points).
pub fn affine_hull_dim(points: &[Point]) -> i64 {
    let Some(base) = points.first() else {
        return -1;
    };
    let mut basis = IncrementalBasis::new();
    for p in &points[1..] {
        basis.insert(&sub(p, base));
    }
    basis.rank() as i64
}

/// A finite point set with exact affine coordinates on its hull.
///
/// With base point `b` and directions `d_1..d_dim` spanning `aff(V) - b`, the
/// map `x ↦ (⟨d_k, x - b⟩)_k` is an affine isomorphism from `aff(V)` onto
/// `Q^dim`, so faces can be found in full-dimensional coordinates.
#[derive(Clone, Debug)]
pub struct PointConfiguration {
    points: Vec<Point>,
    base: Point,
    directions: Vec<Point>,
    coords: Vec<RatVec>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Point>) -> Result<Self, OracleError> {
        let Some(base) = points.first().cloned() else {
            return Err(OracleError::ShapeMismatch);
        };
        if points.iter().any(|p| p.len() != base.len()) {
            return Err(OracleError::ShapeMismatch);
        }
        let mut basis = IncrementalBasis::new();
        let mut directions = Vec::new();
        for p in &points[1..] {
            let d = sub(p, &base);
            if basis.insert(&d) {
                directions.push(d);
            }
        }
        let coords = points
            .iter()
            .map(|p| {
                let rel = sub(p, &base);
                directions.iter().map(|d| dot(d, &rel)).collect()
            })
            .collect();
        Ok(PointConfiguration {
            points,
            base,
            directions,
            coords,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Affine dimension spanned by a subset of the points.
    pub fn subset_dim(&self, subset: &[usize]) -> i64 {
        let pts: Vec<Point> = subset.iter().map(|&i| self.coords[i].clone()).collect();
        affine_hull_dim(&pts)
    }

    pub fn is_affinely_independent(&self, subset: &[usize]) -> bool {
        self.subset_dim(subset) == subset.len() as i64 - 1
    }

    /// `[y_v, 1]`: the row that evaluates `(w, a0)` at point `v`.
    fn lifted(&self, v: usize) -> RatVec {
        let mut row = self.coords[v].clone();
        row.push(BigRational::from_integer(BigInt::from(1)));
        row
    }

    /// Pulls a functional `(w, a0)` on hull coordinates back to the ambient space.
    fn to_ambient(&self, w_a0: &[BigRational]) -> AffineFunctional {
        let (w, a0) = w_a0.split_at(self.dim());
        let mut coefficients = vec![BigRational::zero(); self.base.len()];
        for (wk, d) in w.iter().zip(&self.directions) {
            for (c, x) in coefficients.iter_mut().zip(d) {
                *c += wk * x;
            }
        }
        let constant = &a0[0] - dot(&coefficients, &self.base);
        AffineFunctional {
            constant,
            coefficients,
        }
    }

    /// An affine functional vanishing on exactly `subset` and positive on all
    /// other points, or `None` if `subset` is not the vertex set of a face.
    ///
    /// Equalities on `subset` are solved exactly; the remaining freedom is
    /// searched with an exact phase-one simplex for strict positivity
    /// (scaled to `≥ 1`) on the other points.
    pub fn find_supporting_functional(&self, subset: &[usize]) -> Option<AffineFunctional> {
        let mut inside = vec![false; self.len()];
        for &i in subset {
            *inside.get_mut(i)? = true;
        }
        if inside.iter().all(|&b| b) {
            return self.hull_normal();
        }
        let width = self.dim() + 1;
        let equalities: Vec<RatVec> = (0..self.len())
            .filter(|&v| inside[v])
            .map(|v| self.lifted(v))
            .collect();
        let params = nullspace(&equalities, width);
        if params.is_empty() {
            return None;
        }
        let param_of = |z: &[BigRational]| -> RatVec {
            (0..width)
                .map(|c| {
                    params
                        .iter()
                        .zip(z)
                        .fold(BigRational::zero(), |acc, (p, zi)| acc + &p[c] * zi)
                })
                .collect()
        };
        let rows: Vec<RatVec> = (0..self.len())
            .filter(|&v| !inside[v])
            .map(|v| {
                let lifted = self.lifted(v);
                params.iter().map(|p| dot(&lifted, p)).collect()
            })
            .collect();
        let z = feasible_point(&rows, params.len())?;
        let functional = self.to_ambient(&param_of(&z));
        let certified = self.points.iter().enumerate().all(|(v, p)| {
            let value = functional.evaluate(p);
            if inside[v] {
                value.is_zero()
            } else {
                value.is_positive()
            }
        });
        assert!(certified, "LP solution failed exact re-evaluation");
        Some(functional)
    }

    /// A nonzero functional vanishing on the whole affine hull, if the hull is
    /// not the entire ambient space.
    fn hull_normal(&self) -> Option<AffineFunctional> {
        let normal = nullspace(&self.directions, self.base.len())
            .into_iter()
            .next()?;
        let constant = -dot(&normal, &self.base);
        Some(AffineFunctional {
            constant,
            coefficients: normal,
        })
    }

    pub fn verify_vertex(&self, v: usize) -> bool {
        self.find_supporting_functional(&[v]).is_some()
    }

    /// All facets as sorted vertex-index lists, by testing every `dim`-subset
    /// of vertices for a one-sided hyperplane and deduplicating zero-sets.
    pub fn brute_force_facets(&self, caps: &OracleCaps) -> Result<Vec<Vec<usize>>, OracleError> {
        check_vertex_cap(self.len(), caps)?;
        let d = self.dim();
        let combos = binomial(self.len() as u128, d as u128);
        if combos > caps.max_combinations {
            return Err(OracleError::CapExceeded {
                what: "candidate facet subsets",
                value: combos,
                cap: caps.max_combinations,
            });
        }
        let lifted: Vec<RatVec> = (0..self.len()).map(|v| self.lifted(v)).collect();
        let mut facets = std::collections::BTreeSet::new();
        for subset in (0..self.len()).combinations(d) {
            let rows: Vec<RatVec> = subset.iter().map(|&v| lifted[v].clone()).collect();
            let ns = nullspace(&rows, d + 1);
            if ns.len() != 1 {
                continue;
            }
            let values: Vec<BigRational> = lifted.iter().map(|row| dot(row, &ns[0])).collect();
            let has_pos = values.iter().any(Signed::is_positive);
            let has_neg = values.iter().any(Signed::is_negative);
            if has_pos && has_neg {
                continue;
            }
            let zero_set: Vec<usize> = values
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_zero())
                .map(|(v, _)| v)
                .collect();
            facets.insert(zero_set);
        }
        Ok(facets.into_iter().collect())
    }
}

pub(crate) fn check_vertex_cap(count: usize, caps: &OracleCaps) -> Result<(), OracleError> {
    if count > caps.max_vertices {
        Err(OracleError::CapExceeded {
            what: "vertex count",
            value: count as u128,
            cap: caps.max_vertices as u128,
        })
    } else {
        Ok(())
    }
}

/// Supporting functional for `subset` of `vertices`; see
/// [`PointConfiguration::find_supporting_functional`].
pub fn find_supporting_functional(
    vertices: &[Point],
    subset: &[usize],
) -> Option<AffineFunctional> {
    PointConfiguration::new(vertices.to_vec())
        .ok()?
        .find_supporting_functional(subset)
}

pub fn brute_force_facets(
    vertices: &[Point],
    caps: &OracleCaps,
) -> Result<Vec<Vec<usize>>, OracleError> {
    PointConfiguration::new(vertices.to_vec())?.brute_force_facets(caps)
}

/// Whether `vertices[v]` is a vertex of the convex hull of `vertices`.
pub fn verify_vertex(v: usize, vertices: &[Point]) -> bool {
    PointConfiguration::new(vertices.to_vec())
        .map(|c| c.verify_vertex(v))
        .unwrap_or(false)
}

/// Exact integer point from small integer coordinates.
pub fn int_point(coords: &[i64]) -> Point {
    coords.iter().map(|&x| linalg::rat(x)).collect()
}
