//! Group elements as 0/1 points of `R^{n×n}`.
//!
//! The element `g` becomes the permutation matrix with `x_ij(g) = 1` exactly
//! when `g(j) = i`. Everything here is exact: integer entries for vertices and
//! Gram values, [`BigRational`] for barycenters and affine relations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::EmbeddingError;
use crate::frobenius::FrobeniusSystem;
use crate::linalg::{self, rank_fraction_free, rank_rational, RatVec};
use crate::perm::Perm;

pub type IntMatrix = Vec<Vec<i64>>;
pub type RationalMatrix = Vec<Vec<BigRational>>;

/// The permutation matrix of a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMatrix {
    n: usize,
    /// Row-major `n × n` entries in `{0, 1}`.
    entries: Vec<u8>,
    source: Perm,
}

impl VertexMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &Perm {
        &self.source
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> IntMatrix {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| i64::from(x)).collect())
            .collect()
    }

    /// Entries as an exact point of `Q^{n²}`, row-major.
    pub fn to_point(&self) -> RatVec {
        self.entries
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect()
    }
}

pub fn to_matrix(p: &Perm) -> VertexMatrix {
    let n = p.degree();
    let mut entries = vec![0u8; n * n];
    for j in 0..n {
        entries[p.apply(j) * n + j] = 1;
    }
    VertexMatrix {
        n,
        entries,
        source: p.clone(),
    }
}

/// Vertex matrices of the system's elements, coset-major.
pub fn vertices(sys: &FrobeniusSystem) -> Vec<VertexMatrix> {
    sys.elements().iter().map(to_matrix).collect()
}

/// Entrywise sum of the matrices of coset `h_c N`.
pub fn coset_sum(sys: &FrobeniusSystem, coset: usize) -> Result<IntMatrix, EmbeddingError> {
    if coset >= sys.h() {
        return Err(EmbeddingError::CosetOutOfRange {
            index: coset,
            h: sys.h(),
        });
    }
    let n = sys.n();
    let mut sum = vec![vec![0i64; n]; n];
    for g in sys.cosets()[coset] {
        for j in 0..n {
            sum[g.apply(j)][j] += 1;
        }
    }
    Ok(sum)
}

pub fn is_all_ones(m: &IntMatrix) -> bool {
    m.iter().flatten().all(|&x| x == 1)
}

/// Frobenius inner product `Σ a_ij b_ij`.
pub fn gram(a: &VertexMatrix, b: &VertexMatrix) -> Result<usize, EmbeddingError> {
    if a.n != b.n {
        return Err(EmbeddingError::DegreeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(&x, &y)| usize::from(x * y))
        .sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct GramAnomaly {
    pub row: usize,
    pub col: usize,
    pub value: usize,
    pub expected: usize,
}

/// Full Gram table of a system together with its census against the expected
/// pattern: `n` on the diagonal, `0` within a coset, `1` across cosets.
#[derive(Clone, Debug, Serialize)]
pub struct GramCensus {
    pub n: usize,
    pub order: usize,
    pub diagonal: usize,
    pub same_coset: usize,
    pub cross_coset: usize,
    pub anomalies: Vec<GramAnomaly>,
    /// Row-major `|G| × |G|` table over coset-major element indices.
    pub table: Vec<Vec<usize>>,
}

impl GramCensus {
    pub fn pattern_holds(&self) -> bool {
        self.anomalies.is_empty()
    }
}

pub fn gram_census(sys: &FrobeniusSystem) -> GramCensus {
    let verts = vertices(sys);
    let n = sys.n();
    let t = verts.len();
    let mut census = GramCensus {
        n,
        order: t,
        diagonal: 0,
        same_coset: 0,
        cross_coset: 0,
        anomalies: Vec::new(),
        table: vec![vec![0; t]; t],
    };
    for a in 0..t {
        for b in 0..t {
            let value = gram(&verts[a], &verts[b]).expect("same degree");
            census.table[a][b] = value;
            let expected = if a == b {
                census.diagonal += 1;
                n
            } else if sys.coset_of(a) == sys.coset_of(b) {
                census.same_coset += 1;
                0
            } else {
                census.cross_coset += 1;
                1
            };
            if value != expected {
                census.anomalies.push(GramAnomaly {
                    row: a,
                    col: b,
                    value,
                    expected,
                });
            }
        }
    }
    census
}

/// Linearly independent affine relations `Σ a_g g = 0, Σ a_g = 0` among a list
/// of vertices, indexed like that list.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineRelationBasis {
    pub relations: Vec<RatVec>,
}

impl AffineRelationBasis {
    /// The number `q` of independent relations.
    pub fn rank(&self) -> usize {
        self.relations.len()
    }

    /// Each relation scaled to a primitive integer vector.
    pub fn integer_relations(&self) -> Vec<Vec<BigInt>> {
        self.relations
            .iter()
            .map(|r| linalg::primitive_integer(r))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct AffineRank {
    /// `t - q - 1`.
    pub dim: i64,
    pub basis: AffineRelationBasis,
}

/// Affine dimension of a vertex list together with a basis of its affine
/// relations. The rank of the `t × (n²+1)` matrix of vertices augmented by a
/// constant column is computed fraction-free; the relations are its left
/// kernel, computed independently over `Q`, and the two must agree.
pub fn affine_rank(vertices: &[VertexMatrix]) -> AffineRank {
    let t = vertices.len();
    if t == 0 {
        return AffineRank {
            dim: -1,
            basis: AffineRelationBasis {
                relations: Vec::new(),
            },
        };
    }
    let augmented: Vec<Vec<BigInt>> = vertices
        .iter()
        .map(|v| {
            v.entries
                .iter()
                .map(|&x| BigInt::from(x))
                .chain(std::iter::once(BigInt::one()))
                .collect()
        })
        .collect();
    let rank = rank_fraction_free(&augmented);

    let width = augmented[0].len();
    let transposed: Vec<RatVec> = (0..width)
        .map(|c| {
            augmented
                .iter()
                .map(|row| BigRational::from_integer(row[c].clone()))
                .collect()
        })
        .collect();
    let relations = linalg::nullspace(&transposed, t);
    assert_eq!(
        rank + relations.len(),
        t,
        "fraction-free rank and rational kernel disagree"
    );
    AffineRank {
        dim: rank as i64 - 1,
        basis: AffineRelationBasis { relations },
    }
}

/// Whether `coeffs` is an affine relation on `vertices`, checked exactly.
pub fn is_affine_relation(coeffs: &[BigRational], vertices: &[VertexMatrix]) -> bool {
    if coeffs.len() != vertices.len() || vertices.is_empty() {
        return false;
    }
    let width = vertices[0].entries.len();
    let total: BigRational = coeffs.iter().sum();
    if !total.is_zero() {
        return false;
    }
    (0..width).all(|e| {
        coeffs
            .iter()
            .zip(vertices)
            .filter(|(_, v)| v.entries[e] == 1)
            .map(|(a, _)| a)
            .sum::<BigRational>()
            .is_zero()
    })
}

/// Every relation is constant on each coset of `N`. The basis must be indexed
/// by the system's coset-major element order.
pub fn relation_coset_constancy(basis: &AffineRelationBasis, sys: &FrobeniusSystem) -> bool {
    let n = sys.n();
    basis.relations.iter().all(|r| {
        r.len() == sys.order()
            && r.chunks(n)
                .all(|block| block.iter().all(|a| *a == block[0]))
    })
}

/// The relation space equals the span of the coset indicator differences
/// `1_{h_c N} - 1_{N}` for `c = 1..h`, compared by exact rank.
pub fn relations_span_coset_differences(
    basis: &AffineRelationBasis,
    sys: &FrobeniusSystem,
) -> bool {
    let n = sys.n();
    let t = sys.order();
    let diffs: Vec<RatVec> = (1..sys.h())
        .map(|c| {
            (0..t)
                .map(|i| {
                    if i / n == c {
                        BigRational::one()
                    } else if i / n == 0 {
                        -BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let r_basis = rank_rational(&basis.relations);
    let r_diffs = rank_rational(&diffs);
    let mut joint = basis.relations.clone();
    joint.extend(diffs);
    r_basis == basis.rank() && r_basis == r_diffs && rank_rational(&joint) == r_basis
}

/// Whether the vertices indexed by `subset` are affinely independent, given a
/// basis of all affine relations on the full vertex list. A relation among the
/// subset is a relation on the full list vanishing off the subset, so the
/// subset is independent iff restricting the basis to the other coordinates
/// keeps its rank.
pub fn subset_is_affinely_independent(basis: &AffineRelationBasis, subset: &[usize]) -> bool {
    let Some(t) = basis.relations.first().map(Vec::len) else {
        return true;
    };
    let mut inside = vec![false; t];
    for &i in subset {
        inside[i] = true;
    }
    let restricted: Vec<RatVec> = basis
        .relations
        .iter()
        .map(|r| {
            (0..t)
                .filter(|&i| !inside[i])
                .map(|i| r[i].clone())
                .collect()
        })
        .collect();
    rank_rational(&restricted) == basis.rank()
}

/// Entrywise average of a nonempty vertex list.
pub fn vertex_average(vertices: &[VertexMatrix]) -> RationalMatrix {
    let n = vertices[0].n;
    let count = BigInt::from(vertices.len());
    let mut sums = vec![0i64; n * n];
    for v in vertices {
        for (s, &x) in sums.iter_mut().zip(&v.entries) {
            *s += i64::from(x);
        }
    }
    sums.chunks(n)
        .map(|row| {
            row.iter()
                .map(|&s| BigRational::new(BigInt::from(s), count.clone()))
                .collect()
        })
        .collect()
}

/// Vertex average of the whole polytope, which is `(1/n)·𝟏`.
pub fn barycenter(sys: &FrobeniusSystem) -> RationalMatrix {
    vertex_average(&vertices(sys))
}

/// Vertex average of each coset's simplex.
pub fn coset_barycenters(sys: &FrobeniusSystem) -> Vec<RationalMatrix> {
    let verts = vertices(sys);
    verts.chunks(sys.n()).map(vertex_average).collect()
}

pub fn uniform_matrix(n: usize) -> RationalMatrix {
    let v = BigRational::new(BigInt::one(), BigInt::from(n));
    vec![vec![v; n]; n]
}

/// First cross-coset pair `(a, b)` (coset-major indices) whose translates by
/// `𝟏/n` are not orthogonal, if any.
pub fn orthogonality_witness(sys: &FrobeniusSystem) -> Option<(usize, usize)> {
    let n = sys.n();
    let center = BigRational::new(BigInt::one(), BigInt::from(n));
    let centered: Vec<RatVec> = vertices(sys)
        .iter()
        .map(|v| {
            v.entries
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)) - &center)
                .collect()
        })
        .collect();
    for a in 0..centered.len() {
        for b in a + 1..centered.len() {
            if sys.coset_of(a) != sys.coset_of(b)
                && !linalg::dot(&centered[a], &centered[b]).is_zero()
            {
                return Some((a, b));
            }
        }
    }
    None
}

/// The spans of the cosets' simplices, translated by the common barycenter,
/// are pairwise orthogonal. Vacuously true for a single coset.
pub fn coset_span_orthogonality(sys: &FrobeniusSystem) -> bool {
    orthogonality_witness(sys).is_none()
}

/// JSON form of a rational matrix: `[numerator, denominator]` decimal strings.
pub fn rational_matrix_json(m: &RationalMatrix) -> Vec<Vec<[String; 2]>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| [x.numer().to_string(), x.denom().to_string()])
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_a4, build_cyclic, build_dihedral};
    use crate::linalg::rat;

    #[test]
    fn identity_and_three_cycle_matrices() {
        let id = to_matrix(&Perm::identity(3));
        assert_eq!(id.rows(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        // (123) = [2,3,1]: 1s at (2,1), (3,2), (1,3) in 1-based (row, col).
        let c = to_matrix(&Perm::from_one_line(&[2, 3, 1]).unwrap());
        assert_eq!(c.rows(), vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        for i in 0..3 {
            assert_eq!(c.rows()[i].iter().sum::<i64>(), 1);
            assert_eq!((0..3).map(|r| c.rows()[r][i]).sum::<i64>(), 1);
        }
    }

    #[test]
    fn coset_sums_are_all_ones() {
        let d3 = build_dihedral(3).unwrap();
        assert_eq!(coset_sum(&d3, 0).unwrap(), vec![vec![1; 3]; 3]);
        assert_eq!(coset_sum(&d3, 1).unwrap(), vec![vec![1; 3]; 3]);
        assert!(coset_sum(&d3, 2).is_err());
        let z4 = build_cyclic(4).unwrap();
        assert!(is_all_ones(&coset_sum(&z4, 0).unwrap()));
    }

    #[test]
    fn gram_values() {
        let d3 = build_dihedral(3).unwrap();
        let v = vertices(&d3);
        assert_eq!(gram(&v[0], &v[0]).unwrap(), 3);
        assert_eq!(gram(&v[0], &v[1]).unwrap(), 0);
        assert_eq!(gram(&v[0], &v[4]).unwrap(), 1);
        let other = to_matrix(&Perm::identity(4));
        assert!(gram(&v[0], &other).is_err());
        let census = gram_census(&d3);
        assert!(census.pattern_holds());
        assert_eq!(
            (census.diagonal, census.same_coset, census.cross_coset),
            (6, 12, 18)
        );
    }

    #[test]
    fn affine_rank_small_cases() {
        let single = affine_rank(&[to_matrix(&Perm::identity(3))]);
        assert_eq!((single.dim, single.basis.rank()), (0, 0));

        let d3 = build_dihedral(3).unwrap();
        let r = affine_rank(&vertices(&d3));
        assert_eq!((r.dim, r.basis.rank()), (4, 1));
        // The one relation is (kernel coset) - (reflection coset), up to sign.
        let rel = &r.basis.integer_relations()[0];
        let expected: Vec<BigInt> = [1, 1, 1, -1, -1, -1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let negated: Vec<BigInt> = expected.iter().map(|x| -x).collect();
        assert!(*rel == expected || *rel == negated, "{rel:?}");
        assert!(is_affine_relation(&r.basis.relations[0], &vertices(&d3)));
        assert!(relation_coset_constancy(&r.basis, &d3));
        assert!(relations_span_coset_differences(&r.basis, &d3));

        let a4 = build_a4().unwrap();
        let r = affine_rank(&vertices(&a4));
        assert_eq!((r.dim, r.basis.rank()), (9, 2));
    }

    #[test]
    fn kernel_is_a_simplex() {
        let a4 = build_a4().unwrap();
        let verts = vertices(&a4);
        let r = affine_rank(&verts[..a4.n()]);
        assert_eq!((r.dim, r.basis.rank()), (3, 0));
    }

    #[test]
    fn non_relations_are_rejected() {
        let d3 = build_dihedral(3).unwrap();
        let v = vertices(&d3);
        let bogus: Vec<BigRational> = [1, -1, 0, 0, 0, 0].iter().map(|&x| rat(x)).collect();
        assert!(!is_affine_relation(&bogus, &v));
        let basis = AffineRelationBasis {
            relations: vec![[1, 1, 1, -1, -1, -1].iter().map(|&x| rat(x)).collect()],
        };
        assert!(relation_coset_constancy(&basis, &d3));
        let not_constant = AffineRelationBasis {
            relations: vec![bogus],
        };
        assert!(!relation_coset_constancy(&not_constant, &d3));
    }

    #[test]
    fn subset_independence_from_relations() {
        let d3 = build_dihedral(3).unwrap();
        let verts = vertices(&d3);
        let basis = affine_rank(&verts).basis;
        for subset in [
            vec![1, 2, 4, 5],
            vec![0, 1, 2],
            vec![0, 1, 2, 3, 4, 5],
            vec![0, 3],
        ] {
            let picked: Vec<VertexMatrix> = subset.iter().map(|&i| verts[i].clone()).collect();
            let direct = affine_rank(&picked).basis.rank() == 0;
            assert_eq!(
                subset_is_affinely_independent(&basis, &subset),
                direct,
                "{subset:?}"
            );
        }
    }

    #[test]
    fn regular_group_has_no_relations() {
        let z5 = build_cyclic(5).unwrap();
        let r = affine_rank(&vertices(&z5));
        assert_eq!((r.dim, r.basis.rank()), (4, 0));
        assert!(relation_coset_constancy(&r.basis, &z5));
        assert!(relations_span_coset_differences(&r.basis, &z5));
    }

    #[test]
    fn barycenters() {
        let d3 = build_dihedral(3).unwrap();
        assert_eq!(barycenter(&d3), uniform_matrix(3));
        let z2 = build_cyclic(2).unwrap();
        assert_eq!(barycenter(&z2), uniform_matrix(2));
        let a4 = build_a4().unwrap();
        let cosets = coset_barycenters(&a4);
        assert_eq!(cosets.len(), 3);
        for c in cosets {
            assert_eq!(c, uniform_matrix(4));
        }
        let json = rational_matrix_json(&uniform_matrix(3));
        assert_eq!(json[0][0], ["1".to_string(), "3".to_string()]);
    }

    #[test]
    fn orthogonality() {
        assert!(coset_span_orthogonality(&build_dihedral(3).unwrap()));
        assert!(coset_span_orthogonality(&build_a4().unwrap()));
        assert!(coset_span_orthogonality(&build_cyclic(4).unwrap()));
    }
}
