//! Permutations of `{0, …, n-1}` stored in one-line notation.
//!
//! Internally points are 0-based. Everything that crosses the crate boundary
//! as text or JSON (one-line arrays, cycle notation) is 1-based.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GroupError;

/// A permutation in one-line notation: position `j` holds the image of `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPerm(format!(
                    "{:?} is not a bijection of {{1..{n}}}",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, GroupError> {
        if one_line.contains(&0) {
            return Err(GroupError::InvalidPerm(format!(
                "{one_line:?}: one-line notation is 1-based"
            )));
        }
        Self::from_images(one_line.iter().map(|x| x - 1).collect())
    }

    /// Builds a permutation of `degree` points from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > degree || b > degree || touched[a - 1] {
                    return Err(GroupError::InvalidPerm(format!(
                        "bad cycle {cycle:?} on {degree} points"
                    )));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `j`.
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. `j ↦ self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (j, &i) in self.images.iter().enumerate() {
            images[i] = j;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j)
    }

    /// 0-based fixed points in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(j, &i)| i == j)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(j, &i)| i == j)
            .count()
    }
}

/// Free-function form of [`Perm::compose`].
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm, GroupError> {
    p.compose(q)
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.images[j];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}
