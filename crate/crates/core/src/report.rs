//! The analysis summary printed by `regmap analyze`.

use serde::Serialize;

use crate::geom::{validate_polyhedron, Embedding, Scalar};
use crate::io::Model;
use crate::map::CombMap;
use crate::symmetry::{geometric_symmetry_group, transitive_on_vertices};

/// Field order is the output key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub f_vector: (usize, usize, usize),
    pub chi: i64,
    pub orientable: bool,
    pub genus: Option<i64>,
    pub schlafli: Option<(usize, usize)>,
    pub petrie_spectrum: Vec<(usize, usize)>,
    pub automorphism_order: usize,
    pub regular: bool,
    /// Geometric fields are `None` without 3-dimensional coordinates.
    pub symmetry_order: Option<usize>,
    pub rotation_only: Option<bool>,
    pub vertex_transitive: Option<bool>,
    pub chiral: Option<bool>,
    pub embedding_valid: Option<bool>,
}

struct Geometry {
    symmetry_order: usize,
    rotation_only: bool,
    vertex_transitive: bool,
    chiral: bool,
    valid: bool,
}

fn geometry<S: Scalar>(e: &Embedding<S>) -> Option<Geometry> {
    if e.dim() != 3 {
        return None;
    }
    let g = geometric_symmetry_group(e).ok()?;
    let rotation_only = g.iter().all(|s| s.det_sign == 1);
    Some(Geometry {
        symmetry_order: g.len(),
        rotation_only,
        vertex_transitive: transitive_on_vertices(&g, e.map().vertex_count()),
        chiral: rotation_only,
        valid: validate_polyhedron(e).valid,
    })
}

fn combinatorial(m: &CombMap, geo: Option<Geometry>) -> AnalysisReport {
    let info = m.euler_genus();
    let autos = m.automorphism_group().len();
    AnalysisReport {
        f_vector: m.f_vector(),
        chi: info.chi,
        orientable: info.orientable,
        genus: info.genus,
        schlafli: m.schlafli_type().map(|t| (t.p, t.q)),
        petrie_spectrum: m.petrie_spectrum(),
        automorphism_order: autos,
        regular: autos == m.flag_count(),
        symmetry_order: geo.as_ref().map(|g| g.symmetry_order),
        rotation_only: geo.as_ref().map(|g| g.rotation_only),
        vertex_transitive: geo.as_ref().map(|g| g.vertex_transitive),
        chiral: geo.as_ref().map(|g| g.chiral),
        embedding_valid: geo.as_ref().map(|g| g.valid),
    }
}

pub fn analyze(model: &Model) -> AnalysisReport {
    match model {
        Model::Exact(e) => combinatorial(e.map(), geometry(e)),
        Model::Float(e) => combinatorial(e.map(), geometry(e)),
        Model::Map(m) => combinatorial(m, None),
    }
}
