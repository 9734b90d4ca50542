use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{OracleCaps, PointConfiguration};
use crate::error::OracleError;
use crate::facecomb::FVector;

/// Facet-by-vertex membership table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFacetIncidence {
    vertex_count: usize,
    rows: Vec<Vec<bool>>,
}

impl VertexFacetIncidence {
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Self {
        let rows = facets
            .iter()
            .map(|f| {
                let mut row = vec![false; vertex_count];
                for &v in f {
                    row[v] = true;
                }
                row
            })
            .collect();
        VertexFacetIncidence { vertex_count, rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| (0..self.vertex_count).filter(|&v| row[v]).collect())
            .collect()
    }

    pub fn has_duplicate_rows(&self) -> bool {
        let distinct: BTreeSet<&Vec<bool>> = self.rows.iter().collect();
        distinct.len() != self.rows.len()
    }

    pub fn row_sizes(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|&&b| b).count())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleFace {
    pub dim: i64,
    pub members: Vec<usize>,
}

/// Every face of a polytope with its dimension, ordered by `(dim, members)`.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<OracleFace>,
    pub fvector: FVector,
}

impl FaceLattice {
    /// Every face of dimension `top - 2` lies in exactly two facets.
    pub fn ridge_property(&self) -> bool {
        let top = self.fvector.top();
        let facets: Vec<&OracleFace> = self.faces.iter().filter(|f| f.dim == top - 1).collect();
        self.faces.iter().filter(|f| f.dim == top - 2).all(|ridge| {
            facets
                .iter()
                .filter(|facet| ridge.members.iter().all(|v| facet.members.contains(v)))
                .count()
                == 2
        })
    }
}

fn intersect(a: &[usize], b: &[bool]) -> Vec<usize> {
    a.iter().copied().filter(|&v| b[v]).collect()
}

/// Closes the facet vertex sets under intersection, adds the whole polytope and
/// the empty face, and assigns each face the dimension of its affine hull.
pub fn face_lattice_from_incidence(
    inc: &VertexFacetIncidence,
    config: &PointConfiguration,
    caps: &OracleCaps,
) -> Result<FaceLattice, OracleError> {
    let full: Vec<usize> = (0..inc.vertex_count).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(Vec::new());
    found.insert(full.clone());
    let mut stack = vec![full];
    while let Some(face) = stack.pop() {
        for row in &inc.rows {
            let meet = intersect(&face, row);
            if !found.contains(&meet) {
                if found.len() >= caps.max_faces {
                    return Err(OracleError::CapExceeded {
                        what: "face count",
                        value: found.len() as u128 + 1,
                        cap: caps.max_faces as u128,
                    });
                }
                found.insert(meet.clone());
                stack.push(meet);
            }
        }
    }

    let top = config.dim();
    let mut counts = vec![BigUint::zero(); top + 2];
    let mut faces: Vec<OracleFace> = found
        .into_iter()
        .map(|members| {
            let dim = config.subset_dim(&members);
            counts[(dim + 1) as usize] += 1u32;
            OracleFace { dim, members }
        })
        .collect();
    faces.sort();
    Ok(FaceLattice {
        faces,
        fvector: FVector::from_counts(counts),
    })
}
