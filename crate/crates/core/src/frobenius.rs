//! Kernel/complement decomposition `G = N ⋊ H` of a Frobenius (or regular)
//! permutation group.
//!
//! The kernel `N` is the identity together with every fixed-point-free element,
//! and the complement `H` is the stabilizer of point 1. Both are sorted by
//! one-line notation. Group elements are then indexed coset-major: the element
//! with index `c * n + k` is `h_c · ν_k`, so indices `0..n` are the kernel
//! itself and each block of `n` consecutive indices is one coset `h_c N`.

use std::collections::HashMap;

use crate::error::GroupError;
use crate::group::{check_frobenius, FrobeniusVerdict, PermGroup};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct FrobeniusSystem {
    group: PermGroup,
    kernel: Vec<Perm>,
    complement: Vec<Perm>,
    /// Coset-major element list.
    elements: Vec<Perm>,
    /// `(complement index, kernel index)` for each element, keyed by the
    /// element's index in `group.elements()`.
    coset_table: Vec<(usize, usize)>,
    position: HashMap<Perm, usize>,
    regular: bool,
}

impl FrobeniusSystem {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Number of points, which equals `|N|`.
    pub fn n(&self) -> usize {
        self.kernel.len()
    }

    /// `|H|`, the number of cosets of the kernel.
    pub fn h(&self) -> usize {
        self.complement.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn kernel(&self) -> &[Perm] {
        &self.kernel
    }

    pub fn complement(&self) -> &[Perm] {
        &self.complement
    }

    /// All elements in coset-major order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// `h_coset · ν_k`.
    pub fn element(&self, coset: usize, k: usize) -> &Perm {
        &self.elements[coset * self.n() + k]
    }

    /// Coset-major index of a group element.
    pub fn position(&self, g: &Perm) -> Option<usize> {
        self.position.get(g).copied()
    }

    /// The coset `h_c N` containing the element with coset-major index `idx`.
    pub fn coset_of(&self, idx: usize) -> usize {
        idx / self.n()
    }

    /// Factor `g = h · ν` as `(complement index, kernel index)`.
    pub fn factor(&self, g: &Perm) -> Option<(usize, usize)> {
        self.group.index_of(g).map(|i| self.coset_table[i])
    }

    pub fn coset_table(&self) -> &[(usize, usize)] {
        &self.coset_table
    }

    /// Elements of each coset of `N`, coset-major.
    pub fn cosets(&self) -> Vec<&[Perm]> {
        self.elements.chunks(self.n()).collect()
    }

    /// Topological dimension `(n-1)h` of the associated polytope.
    pub fn polytope_dim(&self) -> usize {
        (self.n() - 1) * self.h()
    }

    /// Checks every structural invariant of the decomposition.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        let h = self.h();
        let deg = self.group.degree();
        if n != deg {
            return Err(format!("|N| = {n} but the group acts on {deg} points"));
        }
        if self.group.order() != n * h {
            return Err(format!(
                "|G| = {} != |N|·|H| = {}",
                self.group.order(),
                n * h
            ));
        }
        if !self.kernel[0].is_identity() || !self.complement[0].is_identity() {
            return Err("identity must come first in kernel and complement".into());
        }
        for nu in &self.kernel[1..] {
            if nu.fixed_point_count() != 0 {
                return Err(format!("kernel element {nu} has a fixed point"));
            }
        }
        let fpf = self
            .group
            .elements()
            .iter()
            .filter(|g| g.fixed_point_count() == 0)
            .count();
        if fpf + 1 != n {
            return Err(format!(
                "{fpf} fixed-point-free elements, expected {}",
                n - 1
            ));
        }
        if self.complement != self.group.stabilizer(0) {
            return Err("complement is not the stabilizer of 1".into());
        }
        for hc in &self.complement[1..] {
            if self.kernel.contains(hc) {
                return Err(format!("{hc} lies in both N and H"));
            }
        }
        for g in self.group.elements() {
            for nu in &self.kernel {
                let conj = g.compose_unchecked(nu).compose_unchecked(&g.inverse());
                if !self.kernel.contains(&conj) {
                    return Err(format!("kernel not normal: {g}·{nu}·{g}⁻¹ = {conj}"));
                }
            }
        }
        for (i, g) in self.group.elements().iter().enumerate() {
            let (c, k) = self.coset_table[i];
            if self.complement[c].compose_unchecked(&self.kernel[k]) != *g {
                return Err(format!("coset table entry for {g} is wrong"));
            }
        }
        let mut seen = self.coset_table.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n * h {
            return Err("factorization g = h·ν is not unique".into());
        }
        Ok(())
    }
}

/// Splits a Frobenius or regular group into kernel and complement.
pub fn build_frobenius_system(group: PermGroup) -> Result<FrobeniusSystem, GroupError> {
    let regular = match check_frobenius(&group) {
        FrobeniusVerdict::Frobenius => false,
        FrobeniusVerdict::Regular => true,
        FrobeniusVerdict::NotFrobenius(reason) => return Err(GroupError::NotFrobenius(reason)),
    };
    let kernel: Vec<Perm> = group
        .elements()
        .iter()
        .filter(|g| g.is_identity() || g.fixed_point_count() == 0)
        .cloned()
        .collect();
    let complement = group.stabilizer(0);

    let kernel_inverses: Vec<Perm> = kernel.iter().map(Perm::inverse).collect();
    let complement_index: HashMap<&Perm, usize> =
        complement.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // g = h·ν  ⇔  g·ν⁻¹ ∈ H; test every ν.
    let mut coset_table = Vec::with_capacity(group.order());
    for g in group.elements() {
        let factor = kernel_inverses.iter().enumerate().find_map(|(k, nu_inv)| {
            complement_index
                .get(&g.compose_unchecked(nu_inv))
                .map(|&c| (c, k))
        });
        match factor {
            Some(f) => coset_table.push(f),
            None => {
                return Err(GroupError::InvalidParameter(format!(
                    "{g} does not factor through kernel and complement"
                )))
            }
        }
    }

    let elements: Vec<Perm> = complement
        .iter()
        .flat_map(|hc| kernel.iter().map(move |nu| hc.compose_unchecked(nu)))
        .collect();
    let position = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let sys = FrobeniusSystem {
        group,
        kernel,
        complement,
        elements,
        coset_table,
        position,
        regular,
    };
    debug_assert!(sys.validate().is_ok(), "{:?}", sys.validate());
    Ok(sys)
}

/// Property (★): for every pair of points `(i, j)` and every coset, exactly
/// one element of the coset sends `j` to `i`.
pub fn star_property_check(sys: &FrobeniusSystem) -> bool {
    star_property(&sys.cosets(), sys.n())
}

/// (★) for an arbitrary partition of permutations of `degree` points.
pub fn star_property<C: AsRef<[Perm]>>(cosets: &[C], degree: usize) -> bool {
    cosets.iter().all(|coset| {
        let mut hits = vec![0usize; degree * degree];
        for g in coset.as_ref() {
            if g.degree() != degree {
                return false;
            }
            for j in 0..degree {
                hits[g.apply(j) * degree + j] += 1;
            }
        }
        hits.iter().all(|&c| c == 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    fn s3() -> FrobeniusSystem {
        let g = generate_group(&[cyc(3, &[&[1, 2, 3]]), cyc(3, &[&[1, 2]])], 3).unwrap();
        build_frobenius_system(g).unwrap()
    }

    #[test]
    fn s3_decomposition() {
        let sys = s3();
        assert_eq!(
            sys.kernel(),
            &[
                Perm::identity(3),
                cyc(3, &[&[1, 2, 3]]),
                cyc(3, &[&[1, 3, 2]])
            ]
        );
        // The stabilizer of point 1 is {id, (2 3)}.
        assert_eq!(sys.complement(), &[Perm::identity(3), cyc(3, &[&[2, 3]])]);
        assert!(!sys.is_regular());
        sys.validate().unwrap();
        assert!(star_property_check(&sys));
    }

    #[test]
    fn a4_kernel_is_klein_four() {
        let g = generate_group(&[cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[1, 2], &[3, 4]])], 4).unwrap();
        let sys = build_frobenius_system(g).unwrap();
        let mut expected = vec![
            Perm::identity(4),
            cyc(4, &[&[1, 2], &[3, 4]]),
            cyc(4, &[&[1, 3], &[2, 4]]),
            cyc(4, &[&[1, 4], &[2, 3]]),
        ];
        expected.sort();
        assert_eq!(sys.kernel(), expected.as_slice());
        assert_eq!(sys.h(), 3);
        sys.validate().unwrap();
    }

    #[test]
    fn regular_group_has_trivial_complement() {
        let g = generate_group(&[cyc(5, &[&[1, 2, 3, 4, 5]])], 5).unwrap();
        let sys = build_frobenius_system(g).unwrap();
        assert!(sys.is_regular());
        assert_eq!(sys.n(), 5);
        assert_eq!(sys.h(), 1);
        assert_eq!(sys.complement(), &[Perm::identity(5)]);
        assert!(star_property_check(&sys));
    }

    #[test]
    fn rejects_non_frobenius() {
        let s4 = generate_group(&[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])], 4).unwrap();
        assert!(matches!(
            build_frobenius_system(s4),
            Err(GroupError::NotFrobenius(_))
        ));
    }

    #[test]
    fn coset_major_indexing() {
        let sys = s3();
        for (idx, g) in sys.elements().iter().enumerate() {
            assert_eq!(sys.position(g), Some(idx));
            let (c, k) = sys.factor(g).unwrap();
            assert_eq!(c * sys.n() + k, idx);
            assert_eq!(sys.coset_of(idx), c);
        }
    }

    #[test]
    fn corrupted_cosets_fail_star_property() {
        let sys = s3();
        let mut cosets: Vec<Vec<Perm>> = sys.cosets().iter().map(|c| c.to_vec()).collect();
        assert!(star_property(&cosets, 3));
        let a = cosets[0][1].clone();
        let b = cosets[1][0].clone();
        cosets[0][1] = b;
        cosets[1][0] = a;
        assert!(!star_property(&cosets, 3));
    }
}
