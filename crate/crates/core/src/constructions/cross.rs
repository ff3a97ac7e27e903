use super::ConstructionError;
use crate::geom::{rat, Embedding, PointN, Rat};
use crate::map::{CombMap, MapAutomorphism, MapError};

/// Places the `i`-th vertex pair of `gamma` (ordered by smaller vertex id) at
/// `+e_i` and `−e_i`, the smaller id taking `+e_i`.
pub fn crosspolytope_realization(map: &CombMap, gamma: &MapAutomorphism) -> Result<Embedding<Rat>, ConstructionError> {
    if !map.is_automorphism(gamma) {
        return Err(MapError::NotAutomorphism.into());
    }
    let perm = gamma.vertex_perm(map);
    if let Some(v) = (0..perm.len()).find(|&v| perm[v] == v || perm[perm[v]] != v) {
        return Err(ConstructionError::InvalidParameter(format!(
            "involution does not pair vertex {v} with another vertex"
        )));
    }
    if let Some(&(u, v)) = map.edge_endpoints().iter().find(|&&(u, v)| perm[u] == v) {
        return Err(ConstructionError::AntipodalEdge { u, v });
    }
    let lows: Vec<usize> = (0..perm.len()).filter(|&v| v < perm[v]).collect();
    let dim = lows.len();
    let mut positions = vec![PointN::zero(dim); perm.len()];
    for (i, &v) in lows.iter().enumerate() {
        positions[v] = PointN::unit(dim, i);
        positions[perm[v]] = PointN::unit(dim, i).scale(&rat(-1));
    }
    Ok(Embedding::new(map.clone(), positions)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cube, octahedron};
    use crate::geom::squared_distance;

    #[test]
    fn cube_realization_in_four_dimensions() {
        let map = cube().unwrap().map().clone();
        let gamma = map.central_involutions().remove(0);
        let e = crosspolytope_realization(&map, &gamma).unwrap();
        assert_eq!(e.dim(), 4);
        for (u, v) in map.edge_endpoints() {
            assert_eq!(squared_distance(e.position(u), e.position(v)).unwrap(), rat(2));
        }
    }

    #[test]
    fn octahedron_antipodes_are_not_edges() {
        let map = octahedron().unwrap().map().clone();
        let gamma = map.central_involutions().remove(0);
        assert!(crosspolytope_realization(&map, &gamma).is_ok());
    }
}
