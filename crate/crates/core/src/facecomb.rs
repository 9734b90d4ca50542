//! Face structure of a Frobenius polytope, read off from the kernel cosets.
//!
//! The polytope is the free sum of the `h` simplices spanned by the cosets of
//! `N`. A vertex subset spans a proper face exactly when it leaves out at least
//! one element of every coset, and that face is a simplex of dimension
//! `|X| - 1`. Facets are the complements of transversals (one element picked
//! from each coset), so there are `n^h` of them, and the number of
//! `k`-dimensional faces is the coefficient of `x^{k+1}` in
//! `x^{(n-1)h+1} + ((1+x)^n - x^n)^h`.
//!
//! Face subsets are sorted lists of coset-major element indices.

use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::FaceError;
use crate::frobenius::FrobeniusSystem;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FaceDescriptor {
    pub members: Vec<usize>,
    pub dim: i64,
}

impl FaceDescriptor {
    pub fn empty() -> Self {
        FaceDescriptor {
            members: Vec::new(),
            dim: -1,
        }
    }

    /// The whole polytope.
    pub fn full(sys: &FrobeniusSystem) -> Self {
        FaceDescriptor {
            members: (0..sys.order()).collect(),
            dim: sys.polytope_dim() as i64,
        }
    }

    /// A proper face from its vertex indices (any order, duplicates removed).
    pub fn proper(sys: &FrobeniusSystem, members: &[usize]) -> Result<Self, FaceError> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let dim = face_dim(sys, &members)?;
        Ok(FaceDescriptor { members, dim })
    }
}

fn check_indices(sys: &FrobeniusSystem, x: &[usize]) -> Result<(), FaceError> {
    match x.iter().find(|&&i| i >= sys.order()) {
        Some(&index) => Err(FaceError::IndexOutOfRange {
            index,
            order: sys.order(),
        }),
        None => Ok(()),
    }
}

/// First coset that `x` contains completely, if any.
fn full_coset(sys: &FrobeniusSystem, x: &[usize]) -> Option<usize> {
    let n = sys.n();
    let mut present = vec![false; sys.order()];
    for &i in x {
        if i < present.len() {
            present[i] = true;
        }
    }
    present.chunks(n).position(|block| block.iter().all(|&p| p))
}

/// Whether `x` omits at least one element from every coset of `N`.
/// Indices outside the group make the subset invalid and give `false`.
pub fn is_proper_face(sys: &FrobeniusSystem, x: &[usize]) -> bool {
    check_indices(sys, x).is_ok() && full_coset(sys, x).is_none()
}

/// `|X| - 1` for a proper face `X` (`-1` for the empty face).
pub fn face_dim(sys: &FrobeniusSystem, x: &[usize]) -> Result<i64, FaceError> {
    check_indices(sys, x)?;
    if let Some(coset) = full_coset(sys, x) {
        return Err(FaceError::Improper { coset });
    }
    let mut distinct = x.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len() as i64 - 1)
}

/// Transversals `(k_0, …, k_{h-1})`, one kernel index per coset, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Transversals {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Transversals {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.n {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

pub fn transversals(sys: &FrobeniusSystem) -> Transversals {
    Transversals {
        n: sys.n(),
        next: Some(vec![0; sys.h()]),
    }
}

/// The facet whose vertex set is the complement of a transversal.
pub fn facet_from_transversal(sys: &FrobeniusSystem, transversal: &[usize]) -> FaceDescriptor {
    let n = sys.n();
    let members: Vec<usize> = (0..sys.order())
        .filter(|&i| transversal[i / n] != i % n)
        .collect();
    let dim = members.len() as i64 - 1;
    FaceDescriptor { members, dim }
}

/// All `n^h` facets, ordered lexicographically by transversal.
pub fn enumerate_facets(sys: &FrobeniusSystem) -> impl Iterator<Item = FaceDescriptor> + '_ {
    transversals(sys).map(move |t| facet_from_transversal(sys, &t))
}

pub fn facet_count(n: usize, h: usize) -> BigUint {
    Pow::pow(BigUint::from(n), h)
}

/// Visits every face of dimension `k` in lexicographic order of member lists,
/// stopping early when `visit` breaks.
pub fn visit_faces_of_dim<F>(sys: &FrobeniusSystem, k: i64, mut visit: F) -> Result<(), FaceError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let top = sys.polytope_dim() as i64;
    if k < -1 || k > top {
        return Err(FaceError::DimOutOfRange { k, top });
    }
    if k == top {
        let full: Vec<usize> = (0..sys.order()).collect();
        let _ = visit(&full);
        return Ok(());
    }
    let size = (k + 1) as usize;
    let mut chosen = Vec::with_capacity(size);
    let mut per_coset = vec![0usize; sys.h()];
    let _ = faces_rec(sys, 0, size, &mut chosen, &mut per_coset, &mut visit);
    Ok(())
}

fn faces_rec<F>(
    sys: &FrobeniusSystem,
    next: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    per_coset: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if chosen.len() == size {
        return visit(chosen);
    }
    let n = sys.n();
    for i in next..sys.order() {
        if sys.order() - i < size - chosen.len() {
            break;
        }
        let c = i / n;
        if per_coset[c] + 1 == n {
            continue;
        }
        chosen.push(i);
        per_coset[c] += 1;
        let flow = faces_rec(sys, i + 1, size, chosen, per_coset, visit);
        per_coset[c] -= 1;
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Face counts `f_{-1}, f_0, …, f_top` of a polytope of dimension `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    /// `counts[0]` is `f_{-1}`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "an f-vector includes the empty face");
        FVector { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Dimension of the polytope.
    pub fn top(&self) -> i64 {
        self.counts.len() as i64 - 2
    }

    /// `f_k` for `-1 ≤ k ≤ top`.
    pub fn get(&self, k: i64) -> Option<&BigUint> {
        usize::try_from(k + 1).ok().and_then(|i| self.counts.get(i))
    }

    /// `Σ_{k=-1}^{top-1} f_k x^{k+1}`.
    pub fn proper_face_poly(&self) -> Poly {
        let proper = &self.counts[..self.counts.len() - 1];
        Poly::new(
            proper
                .iter()
                .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
                .collect(),
        )
    }

    /// `Σ_{k=0}^{top-1} (-1)^k f_k = 1 - (-1)^top`.
    pub fn euler_holds(&self) -> bool {
        let top = self.top();
        let mut sum = BigInt::zero();
        for k in 0..top {
            let f = BigInt::from_biguint(Sign::Plus, self.get(k).unwrap().clone());
            if k % 2 == 0 {
                sum += f;
            } else {
                sum -= f;
            }
        }
        let rhs = if top % 2 == 0 { 0 } else { 2 };
        sum == BigInt::from(rhs)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

fn poly_to_fvector(poly: &Poly, top: usize) -> FVector {
    let counts = (0..=top + 1)
        .map(|i| {
            poly.coeff(i)
                .to_biguint()
                .expect("face counts are non-negative")
        })
        .collect();
    FVector { counts }
}

/// f-vector from the generating function `x^{(n-1)h+1} + ((1+x)^n - x^n)^h`;
/// `f_{-1}` is the constant term.
pub fn fvector(n: usize, h: usize) -> FVector {
    assert!(n >= 1 && h >= 1, "fvector needs n, h >= 1");
    let top = (n - 1) * h;
    let boundary = &Poly::one_plus_x_pow(n) - &Poly::monomial(n, BigInt::one());
    let poly = &boundary.pow(h) + &Poly::monomial(top + 1, BigInt::one());
    poly_to_fvector(&poly, top)
}

/// f-vector of the `d`-simplex: `f_k = C(d+1, k+1)`.
pub fn simplex_fvector(d: usize) -> FVector {
    fvector(d + 1, 1)
}

pub fn count_faces_in_dim(sys: &FrobeniusSystem, k: i64) -> Result<BigUint, FaceError> {
    let f = fvector(sys.n(), sys.h());
    f.get(k)
        .cloned()
        .ok_or(FaceError::DimOutOfRange { k, top: f.top() })
}

/// f-vector of a free sum. Proper faces of the sum are tuples of proper faces
/// of the parts, of dimension `Σ dim_i + (#parts - 1)`; the sum itself has
/// dimension `Σ dims`. An empty list yields a point.
pub fn free_sum_lattice(parts: &[FVector]) -> FVector {
    let top: i64 = parts.iter().map(FVector::top).sum();
    let top = usize::try_from(top).expect("parts must be nonempty polytopes");
    let proper = parts
        .iter()
        .fold(Poly::one(), |acc, f| &acc * &f.proper_face_poly());
    let poly = &proper + &Poly::monomial(top + 1, BigInt::one());
    poly_to_fvector(&poly, top)
}

/// A face of a free sum `P_1 ⊕ … ⊕ P_h` in the product-lattice picture: one
/// proper face per summand, or the identified top element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSumNode {
    /// For summand `c`, the kernel indices `k` of the chosen face of `P(h_c N)`.
    pub parts: Vec<Vec<usize>>,
    pub is_top: bool,
}

impl FreeSumNode {
    /// The node of a vertex subset of `P(G)`; improper subsets map to the top.
    pub fn from_face(sys: &FrobeniusSystem, x: &[usize]) -> Self {
        let n = sys.n();
        let mut parts = vec![Vec::new(); sys.h()];
        for &i in x {
            parts[i / n].push(i % n);
        }
        for p in parts.iter_mut() {
            p.sort_unstable();
            p.dedup();
        }
        let is_top = parts.iter().any(|p| p.len() == n);
        FreeSumNode { parts, is_top }
    }

    /// Vertex indices of the corresponding face of `P(G)`.
    pub fn to_face(&self, sys: &FrobeniusSystem) -> Vec<usize> {
        if self.is_top {
            return (0..sys.order()).collect();
        }
        let n = sys.n();
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.iter().map(move |k| c * n + k))
            .collect()
    }

    /// Summand `c` is a simplex of dimension `simplex_dim`, so its faces have
    /// dimension `|part| - 1`.
    pub fn dim(&self, simplex_dim: usize) -> i64 {
        if self.is_top {
            return (simplex_dim * self.parts.len()) as i64;
        }
        let part_dims: i64 = self.parts.iter().map(|p| p.len() as i64 - 1).sum();
        part_dims + self.parts.len() as i64 - 1
    }

    pub fn le(&self, other: &FreeSumNode) -> bool {
        if other.is_top {
            return true;
        }
        if self.is_top {
            return false;
        }
        self.parts
            .iter()
            .zip(&other.parts)
            .all(|(a, b)| a.iter().all(|x| b.contains(x)))
    }
}
