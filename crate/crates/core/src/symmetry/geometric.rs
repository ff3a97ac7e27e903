use std::collections::HashSet;

use rayon::prelude::*;

use super::SymmetryError;
use crate::geom::{Embedding, PointN, Scalar, Tolerance};
use crate::map::MapAutomorphism;

/// A map isomorphism that is realized by an isometry fixing the vertex centroid.
#[derive(Debug, Clone)]
pub struct GeomSymmetry<S> {
    pub vertex_perm: Vec<usize>,
    pub auto: MapAutomorphism,
    pub det_sign: i32,
    /// Linear part acting on centroid-centered coordinates.
    pub matrix: [[S; 3]; 3],
}

impl<S: Scalar> GeomSymmetry<S> {
    pub fn is_reflection(&self, tol: Tolerance) -> bool {
        let m = &self.matrix;
        let sq = mat_mul(m, m);
        let trace = m[0][0].clone() + m[1][1].clone() + m[2][2].clone();
        self.det_sign < 0 && is_identity(&sq, tol) && trace.cmp_sign(&S::from_i64(1), tol) == 0
    }
}

/// `n·p_i − Σp`: centroid-centered positions without division.
fn centered<S: Scalar>(e: &Embedding<S>) -> Vec<PointN<S>> {
    let pts = e.positions();
    let n = S::from_i64(pts.len() as i64);
    let sum = pts.iter().skip(1).fold(pts[0].clone(), |acc, p| acc.add(p));
    pts.iter().map(|p| p.scale(&n).sub(&sum)).collect()
}

fn gram<S: Scalar>(c: &[PointN<S>]) -> Vec<Vec<S>> {
    c.iter().map(|a| c.iter().map(|b| a.dot(b)).collect()).collect()
}

/// Float comparisons on centered data are scaled by the largest squared norm.
fn scaled_tol<S: Scalar>(c: &[PointN<S>], tol: Tolerance) -> Tolerance {
    if S::EXACT {
        return tol;
    }
    let m = c.iter().map(|p| p.dot(p).to_f64()).fold(1.0, f64::max);
    Tolerance(tol.0 * m)
}

fn gram_matches<S: Scalar>(ga: &[Vec<S>], gb: &[Vec<S>], perm: &[usize], tol: Tolerance) -> bool {
    (0..ga.len()).all(|i| (i..ga.len()).all(|j| ga[i][j].cmp_sign(&gb[perm[i]][perm[j]], tol) == 0))
}

/// Whether `perm` preserves all centered inner products of `e`. Works in any dimension.
pub fn preserves_centered_gram<S: Scalar>(e: &Embedding<S>, perm: &[usize]) -> bool {
    let c = centered(e);
    let g = gram(&c);
    gram_matches(&g, &g, perm, scaled_tol(&c, e.tolerance()))
}

fn mat_mul<S: Scalar>(a: &[[S; 3]; 3], b: &[[S; 3]; 3]) -> [[S; 3]; 3] {
    [0, 1, 2].map(|i| {
        [0, 1, 2].map(|j| {
            (0..3).fold(S::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
        })
    })
}

fn is_identity<S: Scalar>(m: &[[S; 3]; 3], tol: Tolerance) -> bool {
    (0..3).all(|i| (0..3).all(|j| m[i][j].cmp_sign(&S::from_i64(i64::from(i == j)), tol) == 0))
}

fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    let t = |a: usize, b: usize, c: usize, d: usize| m[a][b].clone() * m[c][d].clone();
    m[0][0].clone() * (t(1, 1, 2, 2) - t(1, 2, 2, 1)) - m[0][1].clone() * (t(1, 0, 2, 2) - t(1, 2, 2, 0))
        + m[0][2].clone() * (t(1, 0, 2, 1) - t(1, 1, 2, 0))
}

fn inverse3<S: Scalar>(m: &[[S; 3]; 3]) -> [[S; 3]; 3] {
    let d = det3(m);
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| cof(j, i) / d.clone()))
}

fn columns<S: Scalar>(c: &[PointN<S>], idx: [usize; 3]) -> [[S; 3]; 3] {
    [0, 1, 2].map(|r| idx.map(|k| c[k].coords[r].clone()))
}

fn apply<S: Scalar>(m: &[[S; 3]; 3], p: &PointN<S>) -> PointN<S> {
    PointN::new(
        (0..3)
            .map(|i| (0..3).fold(S::zero(), |acc, k| acc + m[i][k].clone() * p.coords[k].clone()))
            .collect(),
    )
}

fn spanning_triple<S: Scalar>(c: &[PointN<S>], tol: Tolerance) -> Option<[usize; 3]> {
    let i = c.iter().position(|p| !p.is_zero(tol))?;
    let j = (0..c.len()).find(|&j| !c[i].cross(&c[j]).is_zero(tol))?;
    let n = c[i].cross(&c[j]);
    let k = (0..c.len()).find(|&k| n.dot(&c[k]).sign(tol) != 0)?;
    Some([i, j, k])
}

/// All isometries (fixing centroids) from `a` onto `b` that are induced by map
/// isomorphisms. Isomorphisms inducing the same vertex bijection are reported once.
pub fn congruences<S: Scalar>(a: &Embedding<S>, b: &Embedding<S>) -> Result<Vec<GeomSymmetry<S>>, SymmetryError> {
    for e in [a, b] {
        if e.dim() != 3 {
            return Err(SymmetryError::DimensionMismatch(e.dim()));
        }
    }
    let (ca, cb) = (centered(a), centered(b));
    let tol = scaled_tol(&ca, a.tolerance());
    let basis = spanning_triple(&ca, tol).ok_or(SymmetryError::DegenerateSpan)?;
    let (ga, gb) = (gram(&ca), gram(&cb));
    let inv = inverse3(&columns(&ca, basis));

    let isos = a.map().isomorphisms(b.map());
    let found: Vec<GeomSymmetry<S>> = isos
        .into_par_iter()
        .filter_map(|auto| {
            let perm = auto.vertex_perm(a.map());
            if !gram_matches(&ga, &gb, &perm, tol) {
                return None;
            }
            let matrix = mat_mul(&columns(&cb, basis.map(|k| perm[k])), &inv);
            // Gram preservation on a spanning set forces this; checked anyway.
            if !(0..ca.len()).all(|i| apply(&matrix, &ca[i]).approx_eq(&cb[perm[i]], tol)) {
                return None;
            }
            let det_sign = det3(&matrix).sign(Tolerance(1e-6));
            Some(GeomSymmetry {
                vertex_perm: perm,
                auto,
                det_sign,
                matrix,
            })
        })
        .collect();

    let mut seen = HashSet::new();
    Ok(found.into_iter().filter(|g| seen.insert(g.vertex_perm.clone())).collect())
}

pub fn geometric_symmetry_group<S: Scalar>(e: &Embedding<S>) -> Result<Vec<GeomSymmetry<S>>, SymmetryError> {
    congruences(e, e)
}

pub fn transitive_on_vertices<S>(group: &[GeomSymmetry<S>], vertices: usize) -> bool {
    let reached: HashSet<usize> = group.iter().map(|g| g.vertex_perm[0]).collect();
    vertices > 0 && reached.len() == vertices
}

pub fn is_vertex_transitive<S: Scalar>(e: &Embedding<S>) -> Result<bool, SymmetryError> {
    Ok(transitive_on_vertices(&geometric_symmetry_group(e)?, e.map().vertex_count()))
}

/// No orientation-reversing symmetry.
pub fn is_chiral<S: Scalar>(e: &Embedding<S>) -> Result<bool, SymmetryError> {
    Ok(geometric_symmetry_group(e)?.iter().all(|g| g.det_sign > 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorReport {
    pub reflections: usize,
    pub crossing_edges: usize,
    /// `(symmetry index, edge endpoints)` for crossing edges not bisected by the plane.
    pub violations: Vec<(usize, (usize, usize))>,
}

impl MirrorReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every reflective symmetry, checks each edge with endpoints strictly on
/// opposite sides of the mirror: the mirror must swap its endpoints.
pub fn mirror_bisector_check<S: Scalar>(e: &Embedding<S>) -> Result<MirrorReport, SymmetryError> {
    let group = geometric_symmetry_group(e)?;
    let c = centered(e);
    let tol = scaled_tol(&c, e.tolerance());
    let edges = e.map().edge_endpoints();
    let mut report = MirrorReport {
        reflections: 0,
        crossing_edges: 0,
        violations: Vec::new(),
    };
    for (idx, g) in group.iter().enumerate() {
        if !g.is_reflection(tol) {
            continue;
        }
        report.reflections += 1;
        let m = &g.matrix;
        // Any nonzero column of M − I is normal to the mirror.
        let normal = (0..3)
            .map(|j| PointN::new((0..3).map(|i| m[i][j].clone() - S::from_i64(i64::from(i == j))).collect()))
            .find(|v: &PointN<S>| !v.is_zero(tol))
            .expect("reflection has a nonzero normal");
        for &(u, v) in &edges {
            if normal.dot(&c[u]).sign(tol) * normal.dot(&c[v]).sign(tol) < 0 {
                report.crossing_edges += 1;
                if g.vertex_perm[u] != v {
                    report.violations.push((idx, (u, v)));
                }
            }
        }
    }
    Ok(report)
}
