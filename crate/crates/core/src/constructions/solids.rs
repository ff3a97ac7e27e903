use super::ConstructionError;
use crate::geom::{Embedding, PointN, Rat};

fn solid(points: &[[i64; 3]], faces: Vec<Vec<usize>>) -> Result<Embedding<Rat>, ConstructionError> {
    let pts = points.iter().map(|p| PointN::from_ints(p)).collect();
    Ok(Embedding::from_faces(&faces, pts)?)
}

pub fn tetrahedron() -> Result<Embedding<Rat>, ConstructionError> {
    solid(
        &[[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
        vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]],
    )
}

/// Vertex `i` has coordinates given by the bits of `i`, mapped to ±1.
pub fn cube() -> Result<Embedding<Rat>, ConstructionError> {
    let pts: Vec<[i64; 3]> = (0..8).map(|i| [i & 1, (i >> 1) & 1, (i >> 2) & 1].map(|b| 2 * b - 1)).collect();
    solid(
        &pts,
        vec![
            vec![0, 2, 3, 1],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 6, 7, 3],
            vec![0, 4, 6, 2],
            vec![1, 3, 7, 5],
        ],
    )
}

pub fn octahedron() -> Result<Embedding<Rat>, ConstructionError> {
    // 0,1 = ±x; 2,3 = ±y; 4,5 = ±z.
    let pts = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]];
    let mut faces = Vec::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                let odd = (x + y + z) % 2 == 1;
                faces.push(if odd { vec![x, y, z] } else { vec![x, z, y] });
            }
        }
    }
    solid(&pts, faces)
}

/// Permutations of (±1, ±1, 0): 8 triangles and 6 squares.
pub fn cuboctahedron() -> Result<Embedding<Rat>, ConstructionError> {
    let mut pts: Vec<[i64; 3]> = Vec::new();
    for zero in 0..3 {
        for s in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            let mut p = [0; 3];
            let others: Vec<usize> = (0..3).filter(|&k| k != zero).collect();
            p[others[0]] = s[0];
            p[others[1]] = s[1];
            pts.push(p);
        }
    }
    let id = |p: [i64; 3]| pts.iter().position(|q| *q == p).unwrap();
    let mut faces = Vec::new();
    for sx in [1, -1] {
        for sy in [1, -1] {
            for sz in [1, -1] {
                faces.push(vec![id([sx, sy, 0]), id([0, sy, sz]), id([sx, 0, sz])]);
            }
        }
    }
    for axis in 0..3 {
        for s in [1, -1] {
            let (a, b) = ((axis + 1) % 3, (axis + 2) % 3);
            let ring = [(1, 0), (0, 1), (-1, 0), (0, -1)].map(|(u, v)| {
                let mut p = [0; 3];
                p[axis] = s;
                p[a] = u;
                p[b] = v;
                id(p)
            });
            faces.push(ring.to_vec());
        }
    }
    solid(&pts, faces)
}

/// Square base at z = 0, apex 4 above its center.
pub fn square_pyramid() -> Result<Embedding<Rat>, ConstructionError> {
    solid(
        &[[1, 1, 0], [-1, 1, 0], [-1, -1, 0], [1, -1, 0], [0, 0, 1]],
        vec![vec![3, 2, 1, 0], vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4], vec![3, 0, 4]],
    )
}
