use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use super::ConstructionError;
use crate::geom::{validate_polyhedron, Embedding, PointN, Rat};
use crate::map::{canonicalize_faces, CombMap};
use crate::symmetry::{octahedral_rotation_group, Mat3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shell {
    Outer,
    Inner,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedTriangle {
    pub points: [PointN<Rat>; 3],
    pub shell: Shell,
}

/// The polyhedron together with the data needed by the flip search.
#[derive(Debug, Clone)]
pub struct GrunbaumModel {
    pub embedding: Embedding<Rat>,
    /// Shell of each face, by face id.
    pub shells: Vec<Shell>,
    /// `vertex_action[g][v]`: image of vertex `v` under group element `g`.
    pub vertex_action: Vec<Vec<usize>>,
    /// Vertex `v` is `group[v_group[v]]` applied to the seed point.
    pub vertex_group: Vec<usize>,
}

/// The four seed triangles for seed point `(a, b, c)`.
pub fn seed_triangles(seed: [i64; 3]) -> [SeedTriangle; 4] {
    let [a, b, c] = seed;
    let t = |pts: [[i64; 3]; 3], shell| SeedTriangle {
        points: pts.map(|p| PointN::from_ints(&p)),
        shell,
    };
    [
        t([[a, b, c], [b, c, a], [c, a, b]], Shell::Outer),
        t([[a, b, c], [b, c, a], [-b, a, c]], Shell::Outer),
        t([[b, -a, c], [-a, c, b], [c, b, -a]], Shell::Inner),
        t([[b, -a, c], [-a, c, b], [-b, c, -a]], Shell::Inner),
    ]
}

fn build(seed: [i64; 3]) -> Result<GrunbaumModel, ConstructionError> {
    let fail = |why: String| ConstructionError::ConstructionFailure(why);
    let group = octahedral_rotation_group();
    let p = PointN::from_ints(&seed);
    let mut vertices: Vec<PointN<Rat>> = group.elements.iter().map(|g| g.apply(&p)).collect();
    vertices.sort();
    vertices.dedup();
    if vertices.len() != group.order() {
        return Err(fail(format!("seed orbit has {} points", vertices.len())));
    }
    let index: HashMap<PointN<Rat>, usize> = vertices.iter().cloned().zip(0..).collect();
    let id = |q: &PointN<Rat>| index.get(q).copied();

    let mut seen = HashSet::new();
    let mut faces: Vec<(Vec<usize>, Shell)> = Vec::new();
    for seed_tri in seed_triangles(seed) {
        for g in &group.elements {
            let tri: Option<Vec<usize>> = seed_tri.points.iter().map(|q| id(&g.apply(q))).collect();
            let tri = tri.ok_or_else(|| fail("seed triangle leaves the vertex orbit".into()))?;
            let mut key = tri.clone();
            key.sort_unstable();
            if seen.insert(key) {
                faces.push((tri, seed_tri.shell));
            }
        }
    }
    let raw: Vec<Vec<usize>> = faces.iter().map(|(f, _)| f.clone()).collect();
    let oriented = CombMap::from_face_list(&raw)?
        .oriented_face_cycles()
        .ok_or_else(|| fail("surface is not orientable".into()))?;
    let canonical = canonicalize_faces(&oriented);
    let shell_of: HashMap<Vec<usize>, Shell> = faces
        .into_iter()
        .map(|(mut f, s)| {
            f.sort_unstable();
            (f, s)
        })
        .collect();
    let shells = canonical
        .iter()
        .map(|f| {
            let mut k = f.clone();
            k.sort_unstable();
            shell_of[&k]
        })
        .collect();

    let vertex_action = group
        .elements
        .iter()
        .map(|g: &Mat3| vertices.iter().map(|v| index[&g.apply(v)]).collect())
        .collect();
    let mut vertex_group = vec![0; vertices.len()];
    for (gi, g) in group.elements.iter().enumerate() {
        vertex_group[index[&g.apply(&p)]] = gi;
    }
    let embedding = Embedding::from_faces(&canonical, vertices)?;
    Ok(GrunbaumModel {
        embedding,
        shells,
        vertex_action,
        vertex_group,
    })
}

/// The construction for an arbitrary integer seed point, without validation.
pub fn grunbaum_with_seed(seed: [i64; 3]) -> Result<GrunbaumModel, ConstructionError> {
    build(seed)
}

pub fn grunbaum_model() -> Result<&'static GrunbaumModel, ConstructionError> {
    static MODEL: OnceLock<Result<GrunbaumModel, ConstructionError>> = OnceLock::new();
    MODEL
        .get_or_init(|| {
            let m = build([1, 2, 6])?;
            let (f0, f1, f2) = m.embedding.map().f_vector();
            if (f0, f1, f2) != (24, 96, 64) {
                return Err(ConstructionError::ConstructionFailure(format!("f-vector ({f0}, {f1}, {f2})")));
            }
            let report = validate_polyhedron(&m.embedding);
            if !report.valid {
                return Err(ConstructionError::ConstructionFailure(format!("{report:?}")));
            }
            Ok(m)
        })
        .as_ref()
        .map_err(Clone::clone)
}

pub fn grunbaum() -> Result<Embedding<Rat>, ConstructionError> {
    Ok(grunbaum_model()?.embedding.clone())
}

/// The enantiomorph: every x-coordinate negated.
pub fn grunbaum_mirror() -> Result<Embedding<Rat>, ConstructionError> {
    let e = grunbaum()?;
    Ok(e.map_positions(|p| {
        let mut c = p.coords.clone();
        c[0] = -c[0].clone();
        PointN::new(c)
    })?)
}

/// Same faces as the real polyhedron, but positions from the seed `(1, 2, 3)`,
/// which pushes the shells into each other.
pub fn overlapping_variant() -> Result<Embedding<Rat>, ConstructionError> {
    let m = grunbaum_model()?;
    let group = octahedral_rotation_group();
    let bad = PointN::from_ints(&[1, 2, 3]);
    let positions = m.vertex_group.iter().map(|&g| group.elements[g].apply(&bad)).collect();
    Ok(Embedding::new(m.embedding.map().clone(), positions)?)
}
