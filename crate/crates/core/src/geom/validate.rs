use rayon::prelude::*;

use super::embedding::Embedding;
use super::point::PointN;
use super::predicates::{face_planar_convex, polygon_pair_relation, PairRelation};
use super::scalar::{Scalar, Tolerance};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairCounts {
    pub disjoint: usize,
    pub shared_vertex: usize,
    pub shared_edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub planar_faces: bool,
    pub convex_faces: bool,
    pub adjacent_noncoplanar: bool,
    /// Face pairs whose geometric intersection is not their common vertex or edge.
    pub intersection_violations: Vec<(usize, usize)>,
    /// Adjacent face pairs lying in a common plane.
    pub coplanar_adjacent: Vec<(usize, usize)>,
    pub pair_counts: PairCounts,
    pub valid: bool,
}

struct Face<S> {
    ids: Vec<usize>,
    points: Vec<PointN<S>>,
    lo: Vec<S>,
    hi: Vec<S>,
}

impl<S: Scalar> Face<S> {
    fn new(ids: Vec<usize>, points: Vec<PointN<S>>, tol: Tolerance) -> Self {
        let dim = points[0].dim();
        let mut lo = points[0].coords.clone();
        let mut hi = lo.clone();
        for p in &points[1..] {
            for d in 0..dim {
                if p.coords[d].cmp_sign(&lo[d], tol) < 0 {
                    lo[d] = p.coords[d].clone();
                }
                if p.coords[d].cmp_sign(&hi[d], tol) > 0 {
                    hi[d] = p.coords[d].clone();
                }
            }
        }
        Face { ids, points, lo, hi }
    }

    fn boxes_apart(&self, other: &Face<S>, tol: Tolerance) -> bool {
        (0..self.lo.len())
            .any(|d| other.lo[d].cmp_sign(&self.hi[d], tol) > 0 || self.lo[d].cmp_sign(&other.hi[d], tol) > 0)
    }
}

fn coplanar<S: Scalar>(a: &Face<S>, b: &Face<S>, tol: Tolerance) -> bool {
    let p = &a.points;
    let n = p[1].sub(&p[0]).cross(&p[2].sub(&p[0]));
    b.points.iter().all(|q| n.dot(&q.sub(&p[0])).sign(tol) == 0)
}

/// Checks face planarity and convexity, that adjacent faces are not coplanar,
/// and that every pair of faces meets exactly in its common vertex or edge.
pub fn validate_polyhedron<S: Scalar>(e: &Embedding<S>) -> ValidationReport {
    let tol = e.tolerance();
    let faces: Vec<Face<S>> = e
        .faces()
        .into_iter()
        .map(|ids| {
            let pts = e.face_points(&ids);
            Face::new(ids, pts, tol)
        })
        .collect();

    let mut planar_faces = true;
    let mut convex_faces = true;
    for f in &faces {
        match face_planar_convex(&f.points, tol) {
            Ok(true) => {}
            Ok(false) => {
                convex_faces = false;
                let p = &f.points;
                let n = p[1].sub(&p[0]).cross(&p[2].sub(&p[0]));
                if p.iter().any(|q| n.dot(&q.sub(&p[0])).sign(tol) != 0) {
                    planar_faces = false;
                }
            }
            Err(_) => {
                convex_faces = false;
                planar_faces = false;
            }
        }
    }

    let mut coplanar_adjacent: Vec<(usize, usize)> = e
        .map()
        .edge_faces()
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .filter(|&(a, b)| a == b || coplanar(&faces[a], &faces[b], tol))
        .collect();
    coplanar_adjacent.sort_unstable();
    coplanar_adjacent.dedup();

    let pairs: Vec<(usize, usize)> = (0..faces.len())
        .flat_map(|i| (i + 1..faces.len()).map(move |j| (i, j)))
        .collect();
    let relations: Vec<PairRelation> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&faces[i], &faces[j]);
            if a.boxes_apart(b, tol) && !a.ids.iter().any(|v| b.ids.contains(v)) {
                PairRelation::Disjoint
            } else {
                polygon_pair_relation(&a.points, &a.ids, &b.points, &b.ids, tol)
            }
        })
        .collect();

    let mut counts = PairCounts::default();
    let mut intersection_violations = Vec::new();
    for (&pair, rel) in pairs.iter().zip(&relations) {
        match rel {
            PairRelation::Disjoint => counts.disjoint += 1,
            PairRelation::SharedVertex => counts.shared_vertex += 1,
            PairRelation::SharedEdge => counts.shared_edge += 1,
            PairRelation::Violation => intersection_violations.push(pair),
        }
    }
    let adjacent_noncoplanar = coplanar_adjacent.is_empty();
    let valid = planar_faces && convex_faces && adjacent_noncoplanar && intersection_violations.is_empty();
    ValidationReport {
        planar_faces,
        convex_faces,
        adjacent_noncoplanar,
        intersection_violations,
        coplanar_adjacent,
        pair_counts: counts,
        valid,
    }
}
