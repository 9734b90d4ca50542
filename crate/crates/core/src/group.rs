//! Finite permutation groups given by generators, and the Frobenius test.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::GroupError;
use crate::perm::Perm;

/// Default bound on the number of elements produced by [`generate_group`].
pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// A finite permutation group. Elements are kept sorted by one-line notation,
/// so the identity is always at index 0.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    generators: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> &Perm {
        &self.elements[0]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Orbit of a 0-based point, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        for g in &self.elements {
            seen[g.apply(point)] = true;
        }
        (0..self.degree).filter(|&i| seen[i]).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Elements fixing the 0-based point, in the group's order.
    pub fn stabilizer(&self, point: usize) -> Vec<Perm> {
        self.elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .cloned()
            .collect()
    }
}

/// Closure of `gens ∪ {id}` under composition, with the default size cap.
pub fn generate_group(gens: &[Perm], degree: usize) -> Result<PermGroup, GroupError> {
    generate_group_capped(gens, degree, DEFAULT_GROUP_CAP)
}

/// Breadth-first closure of `gens ∪ {id}`. Closing under left multiplication by
/// the generators suffices for a finite group: inverses are positive powers.
pub fn generate_group_capped(
    gens: &[Perm],
    degree: usize,
    cap: usize,
) -> Result<PermGroup, GroupError> {
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let identity = Perm::identity(degree);
    let mut found: HashMap<Perm, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    found.insert(identity.clone(), ());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if !found.contains_key(&y) {
                if found.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                found.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Perm> = found.into_keys().collect();
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Ok(PermGroup {
        degree,
        elements,
        generators: gens.to_vec(),
        index,
    })
}

/// Why a group failed the Frobenius test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotFrobenius {
    /// The orbit of point 1 does not cover every point.
    NotTransitive { orbit: Vec<usize>, degree: usize },
    /// A non-identity element fixes two or more points.
    TooManyFixedPoints { element: Perm, fixed: Vec<usize> },
}

impl fmt::Display for NotFrobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotFrobenius::NotTransitive { orbit, degree } => write!(
                f,
                "action is not transitive: orbit of 1 is {:?} out of {degree} points",
                orbit.iter().map(|x| x + 1).collect::<Vec<_>>()
            ),
            NotFrobenius::TooManyFixedPoints { element, fixed } => write!(
                f,
                "non-identity element {element} fixes points {:?}",
                fixed.iter().map(|x| x + 1).collect::<Vec<_>>()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusVerdict {
    /// Transitive, some non-identity element fixes a point, none fixes two.
    Frobenius,
    /// Transitive and every non-identity element is fixed-point-free.
    Regular,
    NotFrobenius(NotFrobenius),
}

impl FrobeniusVerdict {
    /// `Frobenius` and `Regular` both admit a kernel/complement decomposition.
    pub fn is_acceptable(&self) -> bool {
        !matches!(self, FrobeniusVerdict::NotFrobenius(_))
    }
}

pub fn check_frobenius(group: &PermGroup) -> FrobeniusVerdict {
    if !group.is_transitive() {
        return FrobeniusVerdict::NotFrobenius(NotFrobenius::NotTransitive {
            orbit: group.orbit(0),
            degree: group.degree(),
        });
    }
    let mut has_fixed_point = false;
    for g in group.elements().iter().filter(|g| !g.is_identity()) {
        let fixed = g.fixed_points();
        if fixed.len() >= 2 {
            return FrobeniusVerdict::NotFrobenius(NotFrobenius::TooManyFixedPoints {
                element: g.clone(),
                fixed,
            });
        }
        has_fixed_point |= fixed.len() == 1;
    }
    if has_fixed_point {
        FrobeniusVerdict::Frobenius
    } else {
        FrobeniusVerdict::Regular
    }
}
