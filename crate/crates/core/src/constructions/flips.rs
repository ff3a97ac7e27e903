use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use super::grunbaum::{grunbaum_model, GrunbaumModel, Shell};
use super::ConstructionError;
use crate::geom::{validate_polyhedron, Embedding, Scalar};
use crate::map::canonicalize_faces;

/// The two faces at `edge` and their apexes, with the first face rotated to `(a, b, c)`.
fn flip_faces<S: Scalar>(e: &Embedding<S>, faces: &[Vec<usize>], edge: usize) -> Result<(usize, usize, [usize; 4]), ConstructionError> {
    let map = e.map();
    if edge >= map.edge_count() {
        return Err(ConstructionError::NotFlippable(edge));
    }
    let (f1, f2) = map.edge_faces()[edge];
    let (u, v) = map.edge_endpoints()[edge];
    if f1 == f2 || faces[f1].len() != 3 || faces[f2].len() != 3 {
        return Err(ConstructionError::NotFlippable(edge));
    }
    let t = &faces[f1];
    let r = (0..3).find(|&i| t[i] != u && t[i] != v).unwrap();
    let (c, a, b) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
    let d = *faces[f2].iter().find(|&&x| x != u && x != v).unwrap();
    if c == d {
        return Err(ConstructionError::NotFlippable(edge));
    }
    Ok((f1, f2, [a, b, c, d]))
}

/// Switches the diagonal of the quadrilateral formed by the two triangles at
/// `edge`; `(a, b, c)` and `(b, a, d)` become `(c, a, d)` and `(d, b, c)`.
/// Geometric validity is not checked.
pub fn pachner_flip<S: Scalar>(e: &Embedding<S>, edge: usize) -> Result<Embedding<S>, ConstructionError> {
    flip_many(e, &[edge])
}

/// Flips several edges at once. The edges must not share a face.
pub fn flip_many<S: Scalar>(e: &Embedding<S>, edges: &[usize]) -> Result<Embedding<S>, ConstructionError> {
    let mut faces = e.faces();
    let mut touched = HashSet::new();
    let mut plans = Vec::with_capacity(edges.len());
    for &edge in edges {
        let plan = flip_faces(e, &faces, edge)?;
        if !touched.insert(plan.0) || !touched.insert(plan.1) {
            return Err(ConstructionError::NotFlippable(edge));
        }
        plans.push(plan);
    }
    for (f1, f2, [a, b, c, d]) in plans {
        faces[f1] = vec![c, a, d];
        faces[f2] = vec![d, b, c];
    }
    Ok(e.with_faces(&faces)?)
}

/// One size-12 edge orbit of the outer shell and how its simultaneous flip fared.
#[derive(Debug, Clone)]
pub struct FlipCandidate {
    /// Edge ids in the original polyhedron.
    pub edges: Vec<usize>,
    pub endpoints: Vec<(usize, usize)>,
    pub valid: bool,
    pub isomorphic_to_original: bool,
    /// Canonical face list of the flipped model, when the flip built a surface.
    pub faces: Option<Vec<Vec<usize>>>,
}

impl FlipCandidate {
    pub fn qualifies(&self) -> bool {
        self.valid && !self.isomorphic_to_original
    }
}

#[derive(Debug, Clone)]
pub struct RelativeSearch {
    pub candidates: Vec<FlipCandidate>,
    /// Index into `candidates` of the returned orbit.
    pub chosen: Option<usize>,
}

fn outer_edge_orbits(m: &GrunbaumModel) -> Vec<Vec<usize>> {
    let map = m.embedding.map();
    let ends = map.edge_endpoints();
    let faces = map.edge_faces();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let edge_id: std::collections::HashMap<(usize, usize), usize> =
        ends.iter().enumerate().map(|(i, &(u, v))| (key(u, v), i)).collect();
    let mut done = vec![false; ends.len()];
    let mut orbits = Vec::new();
    for i in 0..ends.len() {
        let (f1, f2) = faces[i];
        if done[i] || m.shells[f1] != Shell::Outer || m.shells[f2] != Shell::Outer {
            continue;
        }
        let (u, v) = ends[i];
        let orbit: BTreeSet<usize> = m.vertex_action.iter().map(|g| edge_id[&key(g[u], g[v])]).collect();
        for &j in &orbit {
            done[j] = true;
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

fn evaluate(m: &GrunbaumModel, edges: Vec<usize>) -> FlipCandidate {
    let p = &m.embedding;
    let endpoints = edges.iter().map(|&i| p.map().edge_endpoints()[i]).collect();
    let mut cand = FlipCandidate {
        edges,
        endpoints,
        valid: false,
        isomorphic_to_original: false,
        faces: None,
    };
    if let Ok(q) = flip_many(p, &cand.edges) {
        cand.valid = validate_polyhedron(&q).valid;
        cand.isomorphic_to_original = q.map().isomorphism(p.map()).is_some();
        cand.faces = Some(canonicalize_faces(&q.faces()));
    }
    cand
}

/// Evaluates every size-12 orbit of outer-shell edges that separate two
/// outer triangles and share no face with each other.
pub fn relative_search() -> Result<&'static RelativeSearch, ConstructionError> {
    static SEARCH: OnceLock<Result<RelativeSearch, ConstructionError>> = OnceLock::new();
    SEARCH
        .get_or_init(|| {
            let m = grunbaum_model()?;
            let faces = m.embedding.map().edge_faces();
            let orbits: Vec<Vec<usize>> = outer_edge_orbits(m)
                .into_iter()
                .filter(|o| o.len() == 12)
                .filter(|o| {
                    let mut seen = HashSet::new();
                    o.iter().all(|&i| seen.insert(faces[i].0) && seen.insert(faces[i].1))
                })
                .collect();
            let candidates: Vec<FlipCandidate> = orbits.into_par_iter().map(|o| evaluate(m, o)).collect();
            let chosen = candidates
                .iter()
                .enumerate()
                .filter(|(_, c)| c.qualifies())
                .min_by(|a, b| a.1.faces.cmp(&b.1.faces))
                .map(|(i, _)| i);
            Ok(RelativeSearch { candidates, chosen })
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// The relative polyhedron: the orbit flip that stays embedded but changes the map.
pub fn grunbaum_relative() -> Result<Embedding<crate::geom::Rat>, ConstructionError> {
    let search = relative_search()?;
    let idx = search.chosen.ok_or(ConstructionError::SearchExhausted)?;
    let m = grunbaum_model()?;
    flip_many(&m.embedding, &search.candidates[idx].edges)
}

/// `(edge id, flipped model valid)` for every single flip of `e`.
pub fn single_flip_table<S: Scalar>(e: &Embedding<S>) -> Vec<(usize, Result<bool, ConstructionError>)> {
    (0..e.map().edge_count())
        .into_par_iter()
        .map(|i| (i, pachner_flip(e, i).map(|q| validate_polyhedron(&q).valid)))
        .collect()
}
