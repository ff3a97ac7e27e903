use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use super::SymmetryError;

/// An element of a finite group with an exact composition law.
pub trait GroupElement: Clone + Eq + Hash + Debug {
    /// `self ∘ other`: apply `other` first.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
}

/// An element of O(3).
pub trait Isometry: GroupElement {
    fn det_sign(&self) -> i32;
    /// Floating-point matrix realization.
    fn to_f64_matrix(&self) -> [[f64; 3]; 3];
    fn is_central_inversion(&self) -> bool;
    /// Reflection in a plane through the origin.
    fn is_plane_reflection(&self) -> bool;
}

/// A finite group given by its full element list.
#[derive(Debug, Clone, Serialize)]
pub struct PointGroup<E> {
    pub name: String,
    pub elements: Vec<E>,
}

impl<E: GroupElement> PointGroup<E> {
    /// Closes `generators` under composition. `identity` seeds the list.
    pub fn generate(name: impl Into<String>, identity: E, generators: &[E]) -> Self {
        let mut seen: HashSet<E> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    elements.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        PointGroup {
            name: name.into(),
            elements,
        }
    }

    /// Wraps an element list after checking the group axioms exhaustively.
    pub fn from_elements(name: impl Into<String>, elements: Vec<E>) -> Result<Self, SymmetryError> {
        let g = PointGroup {
            name: name.into(),
            elements,
        };
        g.verify()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    /// Identity present, no duplicates, closed under composition and inverse.
    pub fn verify(&self) -> Result<(), SymmetryError> {
        let set: HashSet<&E> = self.elements.iter().collect();
        let fail = |why: &str| Err(SymmetryError::NotAGroup(format!("{}: {why}", self.name)));
        if set.len() != self.elements.len() {
            return fail("duplicate elements");
        }
        if !self.elements.iter().any(GroupElement::is_identity) {
            return fail("missing identity");
        }
        for a in &self.elements {
            if !set.contains(&a.inverse()) {
                return fail("not closed under inverse");
            }
            for b in &self.elements {
                if !set.contains(&a.compose(b)) {
                    return fail("not closed under composition");
                }
            }
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &PointGroup<E>) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }
}

impl<E: Isometry> PointGroup<E> {
    pub fn mirror_count(&self) -> usize {
        self.elements.iter().filter(|e| e.is_plane_reflection()).count()
    }

    pub fn contains_central_inversion(&self) -> bool {
        self.elements.iter().any(Isometry::is_central_inversion)
    }

    pub fn is_rotation_group(&self) -> bool {
        self.elements.iter().all(|e| e.det_sign() == 1)
    }

    /// The orientation-preserving subgroup.
    pub fn rotation_subgroup(&self) -> PointGroup<E> {
        PointGroup {
            name: format!("{}+", self.name),
            elements: self.elements.iter().filter(|e| e.det_sign() == 1).cloned().collect(),
        }
    }
}

/// A permutation of `0..n`, used for abstract groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        for c in cycles {
            for i in 0..c.len() {
                p[c[i]] = c[(i + 1) % c.len()];
            }
        }
        Perm(p)
    }
}

impl GroupElement for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// The icosahedral rotation group as the alternating group on five letters.
pub fn icosahedral_rotation_group() -> PointGroup<Perm> {
    PointGroup::generate(
        "I",
        Perm::identity(5),
        &[Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]), Perm::from_cycles(5, &[&[0, 1, 2]])],
    )
}
