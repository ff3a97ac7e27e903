//! Flag-based combinatorial maps on closed surfaces.
//!
//! A map is stored as three fixed-point-free involutions on a dense set of
//! flags (incident vertex/edge/face triples). `sigma[0]` changes the vertex of
//! a flag, `sigma[1]` the edge and `sigma[2]` the face. Cells are the orbits of
//! the two-generator subgroups that omit the corresponding index.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Dense flag index.
pub type FlagId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("face {face} is degenerate (fewer than three distinct vertices)")]
    DegenerateFace { face: usize },
    #[error("edge {{{u}, {v}}} lies in {count} faces, expected 2")]
    NonManifoldEdge { u: usize, v: usize, count: usize },
    #[error("vertex {vertex} has a disconnected link")]
    NonManifoldVertex { vertex: usize },
    #[error("vertex id {vertex} is never used by a face")]
    MissingVertex { vertex: usize },
    #[error("vertex {vertex} has valency {valency}, expected at least 3")]
    LowValency { vertex: usize, valency: usize },
    #[error("face {face} has {sides} sides, expected at least 3")]
    SmallFace { face: usize, sides: usize },
    #[error("flag graph is disconnected")]
    Disconnected,
    #[error("sigma{index} is not a fixed-point-free involution on {len} flags")]
    BadInvolution { index: usize, len: usize },
    #[error("sigma0 and sigma2 do not generate a free Klein four-group action")]
    NotPolyhedral,
    #[error("map is not flag-transitive")]
    NotRegular,
    #[error("Petrie polygon {face} visits an edge twice")]
    InvalidPetrieFace { face: usize },
    #[error("permutation is not an automorphism of the map")]
    NotAutomorphism,
    #[error("involution fixes flag {flag}")]
    FixedFlag { flag: FlagId },
    #[error("quotient is not a valid map: {0}")]
    NonManifoldQuotient(Box<MapError>),
}

/// A combinatorial map on a closed connected surface.
#[derive(Clone, PartialEq, Eq)]
pub struct CombMap {
    sigma: [Vec<FlagId>; 3],
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
    counts: [usize; 3],
}

impl fmt::Debug for CombMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CombMap")
            .field("flags", &self.flag_count())
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

/// `{p, q}`: all faces are p-gons and all vertices have valency q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchlafliType {
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerInfo {
    pub chi: i64,
    pub orientable: bool,
    pub genus: Option<i64>,
}

/// A flag permutation commuting with all three involutions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapAutomorphism {
    pub flag_perm: Vec<FlagId>,
}

impl MapAutomorphism {
    pub fn identity(flags: usize) -> Self {
        MapAutomorphism {
            flag_perm: (0..flags).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.flag_perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, flag: FlagId) -> FlagId {
        self.flag_perm[flag]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MapAutomorphism) -> MapAutomorphism {
        MapAutomorphism {
            flag_perm: other.flag_perm.iter().map(|&x| self.flag_perm[x]).collect(),
        }
    }

    pub fn inverse(&self) -> MapAutomorphism {
        let mut inv = vec![0; self.flag_perm.len()];
        for (i, &x) in self.flag_perm.iter().enumerate() {
            inv[x] = i;
        }
        MapAutomorphism { flag_perm: inv }
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(self);
            k += 1;
        }
        k
    }

    /// The permutation of vertex ids induced on `map`.
    pub fn vertex_perm(&self, map: &CombMap) -> Vec<usize> {
        let mut perm = vec![usize::MAX; map.vertex_count()];
        for (x, &y) in self.flag_perm.iter().enumerate() {
            perm[map.vertex_of(x)] = map.vertex_of(y);
        }
        perm
    }

    pub fn commutes_with(&self, other: &MapAutomorphism) -> bool {
        self.flag_perm
            .iter()
            .zip(&other.flag_perm)
            .all(|(&a, &b)| self.flag_perm[b] == other.flag_perm[a])
    }
}

/// The distinguished generators of a regular map's automorphism group.
#[derive(Debug, Clone)]
pub struct RegularGenerators {
    pub rho: [MapAutomorphism; 3],
    /// Order of `rho0 rho1`.
    pub p: usize,
    /// Order of `rho1 rho2`.
    pub q: usize,
    /// Order of the Coxeter element `rho0 rho1 rho2` (the Petrie length).
    pub r: usize,
}

impl CombMap {
    /// Builds a map from its three flag involutions. Cell ids are assigned in
    /// order of the smallest flag of each orbit.
    pub fn from_involutions(sigma: [Vec<FlagId>; 3]) -> Result<CombMap, MapError> {
        let n = sigma[0].len();
        for (index, s) in sigma.iter().enumerate() {
            if s.len() != n || n == 0 {
                return Err(MapError::BadInvolution { index, len: s.len() });
            }
            for (x, &y) in s.iter().enumerate() {
                if y >= n || y == x || s[y] != x {
                    return Err(MapError::BadInvolution { index, len: n });
                }
            }
        }
        for x in 0..n {
            let a = sigma[0][sigma[2][x]];
            if a != sigma[2][sigma[0][x]] || a == x {
                return Err(MapError::NotPolyhedral);
            }
        }
        if orbit_labels(&sigma, &[0, 1, 2]).1 != 1 {
            return Err(MapError::Disconnected);
        }
        let (vertex_of, f0) = orbit_labels(&sigma, &[1, 2]);
        let (edge_of, f1) = orbit_labels(&sigma, &[0, 2]);
        let (face_of, f2) = orbit_labels(&sigma, &[0, 1]);
        let map = CombMap {
            sigma,
            vertex_of,
            edge_of,
            face_of,
            counts: [f0, f1, f2],
        };
        map.check_cell_sizes()?;
        Ok(map)
    }

    fn check_cell_sizes(&self) -> Result<(), MapError> {
        let mut vsize = vec![0usize; self.counts[0]];
        let mut fsize = vec![0usize; self.counts[2]];
        for x in 0..self.flag_count() {
            vsize[self.vertex_of[x]] += 1;
            fsize[self.face_of[x]] += 1;
        }
        if let Some((vertex, &s)) = vsize.iter().enumerate().find(|(_, &s)| s < 6) {
            return Err(MapError::LowValency {
                vertex,
                valency: s / 2,
            });
        }
        if let Some((face, &s)) = fsize.iter().enumerate().find(|(_, &s)| s < 6) {
            return Err(MapError::SmallFace { face, sides: s / 2 });
        }
        Ok(())
    }

    /// Builds a map from cyclic vertex sequences. Vertex ids must cover
    /// `0..n` and are kept as given; face `i` of the result is input face `i`.
    pub fn from_face_list(faces: &[Vec<usize>]) -> Result<CombMap, MapError> {
        let mut offsets = Vec::with_capacity(faces.len());
        let mut total = 0;
        let mut max_vertex = 0;
        for (fi, face) in faces.iter().enumerate() {
            let mut sorted = face.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if face.len() < 3 || sorted.len() != face.len() {
                return Err(MapError::DegenerateFace { face: fi });
            }
            max_vertex = max_vertex.max(*sorted.last().unwrap());
            offsets.push(total);
            total += 2 * face.len();
        }
        if faces.is_empty() {
            return Err(MapError::Disconnected);
        }
        let vertex_count = max_vertex + 1;
        let mut used = vec![false; vertex_count];
        for &v in faces.iter().flatten() {
            used[v] = true;
        }
        if let Some(vertex) = used.iter().position(|&u| !u) {
            return Err(MapError::MissingVertex { vertex });
        }

        // flag (face f, side j, end e) sits at offsets[f] + 2j + e and has
        // vertex faces[f][j + e].
        let flag = |f: usize, j: usize, e: usize| offsets[f] + 2 * j + e;
        let mut s0 = vec![0; total];
        let mut s1 = vec![0; total];
        let mut s2 = vec![usize::MAX; total];
        let mut sides: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (f, face) in faces.iter().enumerate() {
            let k = face.len();
            for j in 0..k {
                let (a, b) = (face[j], face[(j + 1) % k]);
                s0[flag(f, j, 0)] = flag(f, j, 1);
                s0[flag(f, j, 1)] = flag(f, j, 0);
                s1[flag(f, j, 1)] = flag(f, (j + 1) % k, 0);
                s1[flag(f, (j + 1) % k, 0)] = flag(f, j, 1);
                sides.entry((a.min(b), a.max(b))).or_default().push((f, j));
            }
        }
        let mut keys: Vec<_> = sides.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let occ = &sides[&key];
            if occ.len() != 2 {
                return Err(MapError::NonManifoldEdge {
                    u: key.0,
                    v: key.1,
                    count: occ.len(),
                });
            }
            let (f, j) = occ[0];
            let (g, k) = occ[1];
            for e in 0..2 {
                let x = flag(f, j, e);
                let vx = faces[f][(j + e) % faces[f].len()];
                let e2 = if faces[g][k] == vx { 0 } else { 1 };
                let y = flag(g, k, e2);
                s2[x] = y;
                s2[y] = x;
            }
        }

        let mut map = CombMap::from_involutions([s0, s1, s2])?;
        // Every vertex orbit must carry exactly one input label.
        let mut orbit_label = vec![usize::MAX; map.counts[0]];
        let mut label_orbit = vec![usize::MAX; vertex_count];
        for (f, face) in faces.iter().enumerate() {
            for j in 0..face.len() {
                let x = flag(f, j, 0);
                let (orbit, label) = (map.vertex_of[x], face[j]);
                if orbit_label[orbit] == usize::MAX {
                    orbit_label[orbit] = label;
                }
                if label_orbit[label] == usize::MAX {
                    label_orbit[label] = orbit;
                }
                if orbit_label[orbit] != label || label_orbit[label] != orbit {
                    return Err(MapError::NonManifoldVertex { vertex: label });
                }
            }
        }
        for x in 0..total {
            map.vertex_of[x] = orbit_label[map.vertex_of[x]];
        }
        Ok(map)
    }

    pub fn flag_count(&self) -> usize {
        self.sigma[0].len()
    }

    pub fn sigma(&self, i: usize, flag: FlagId) -> FlagId {
        self.sigma[i][flag]
    }

    pub fn sigmas(&self) -> &[Vec<FlagId>; 3] {
        &self.sigma
    }

    pub fn vertex_of(&self, flag: FlagId) -> usize {
        self.vertex_of[flag]
    }

    pub fn edge_of(&self, flag: FlagId) -> usize {
        self.edge_of[flag]
    }

    pub fn face_of(&self, flag: FlagId) -> usize {
        self.face_of[flag]
    }

    pub fn vertex_count(&self) -> usize {
        self.counts[0]
    }

    pub fn edge_count(&self) -> usize {
        self.counts[1]
    }

    pub fn face_count(&self) -> usize {
        self.counts[2]
    }

    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.counts[0], self.counts[1], self.counts[2])
    }

    fn first_flags(labels: &[usize], count: usize) -> Vec<FlagId> {
        let mut first = vec![usize::MAX; count];
        for (x, &l) in labels.iter().enumerate() {
            if first[l] == usize::MAX {
                first[l] = x;
            }
        }
        first
    }

    /// Endpoints of every edge, smaller id first.
    pub fn edge_endpoints(&self) -> Vec<(usize, usize)> {
        Self::first_flags(&self.edge_of, self.counts[1])
            .into_iter()
            .map(|x| {
                let (a, b) = (self.vertex_of[x], self.vertex_of[self.sigma[0][x]]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edge_endpoints().iter().position(|&e| e == key)
    }

    /// The two (not necessarily distinct) faces on either side of each edge.
    pub fn edge_faces(&self) -> Vec<(usize, usize)> {
        Self::first_flags(&self.edge_of, self.counts[1])
            .into_iter()
            .map(|x| (self.face_of[x], self.face_of[self.sigma[2][x]]))
            .collect()
    }

    fn cycle_from(&self, start: FlagId) -> Vec<usize> {
        let mut cycle = Vec::new();
        let mut x = start;
        loop {
            cycle.push(self.vertex_of[x]);
            x = self.sigma[1][self.sigma[0][x]];
            if x == start {
                break;
            }
        }
        cycle
    }

    /// Vertex cycle of every face, walked from the face's smallest flag.
    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        Self::first_flags(&self.face_of, self.counts[2])
            .into_iter()
            .map(|x| self.cycle_from(x))
            .collect()
    }

    /// Face cycles with a coherent orientation, when the surface is orientable.
    pub fn oriented_face_cycles(&self) -> Option<Vec<Vec<usize>>> {
        let color = self.two_coloring()?;
        let mut start = vec![usize::MAX; self.counts[2]];
        for x in 0..self.flag_count() {
            let f = self.face_of[x];
            if color[x] == 0 && start[f] == usize::MAX {
                start[f] = x;
            }
        }
        Some(start.into_iter().map(|x| self.cycle_from(x)).collect())
    }

    /// Canonical face list: each face rotated to begin at its smallest vertex,
    /// faces sorted lexicographically.
    pub fn canonical_faces(&self) -> Vec<Vec<usize>> {
        canonicalize_faces(&self.face_cycles())
    }

    /// Degree of each vertex.
    pub fn valencies(&self) -> Vec<usize> {
        let mut n = vec![0; self.counts[0]];
        for &v in &self.vertex_of {
            n[v] += 1;
        }
        n.iter().map(|s| s / 2).collect()
    }

    pub fn face_sizes(&self) -> Vec<usize> {
        let mut n = vec![0; self.counts[2]];
        for &f in &self.face_of {
            n[f] += 1;
        }
        n.iter().map(|s| s / 2).collect()
    }

    fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.flag_count();
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for s in &self.sigma {
                let y = s[x];
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
        Some(color)
    }

    pub fn is_orientable(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn euler_genus(&self) -> EulerInfo {
        let chi = self.counts[0] as i64 - self.counts[1] as i64 + self.counts[2] as i64;
        let orientable = self.is_orientable();
        EulerInfo {
            chi,
            orientable,
            genus: orientable.then(|| (2 - chi) / 2),
        }
    }

    pub fn schlafli_type(&self) -> Option<SchlafliType> {
        let q = uniform(&self.valencies())?;
        let p = uniform(&self.face_sizes())?;
        Some(SchlafliType { p, q })
    }

    /// Petrie zigzags as flag orbits of `<sigma0 sigma2, sigma1>`.
    fn petrie_orbits(&self) -> (Vec<usize>, usize) {
        let s02: Vec<FlagId> = (0..self.flag_count())
            .map(|x| self.sigma[0][self.sigma[2][x]])
            .collect();
        let gens = [s02, self.sigma[1].clone(), self.sigma[2].clone()];
        orbit_labels(&gens, &[0, 1])
    }

    /// Lengths of all Petrie polygons with multiplicity, sorted by length.
    pub fn petrie_spectrum(&self) -> Vec<(usize, usize)> {
        let (labels, count) = self.petrie_orbits();
        let mut sizes = vec![0usize; count];
        for &l in &labels {
            sizes[l] += 1;
        }
        let mut hist: HashMap<usize, usize> = HashMap::new();
        for s in sizes {
            *hist.entry(s / 2).or_default() += 1;
        }
        let mut spectrum: Vec<_> = hist.into_iter().collect();
        spectrum.sort_unstable();
        spectrum
    }

    /// Same vertices and edges, with the Petrie polygons as faces.
    pub fn petrie_dual(&self) -> Result<CombMap, MapError> {
        let (labels, count) = self.petrie_orbits();
        let mut edges: Vec<Vec<usize>> = vec![Vec::new(); count];
        let mut sizes = vec![0usize; count];
        for (x, &l) in labels.iter().enumerate() {
            edges[l].push(self.edge_of[x]);
            sizes[l] += 1;
        }
        for (face, list) in edges.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if 2 * list.len() != sizes[face] {
                return Err(MapError::InvalidPetrieFace { face });
            }
        }
        let s0: Vec<FlagId> = (0..self.flag_count())
            .map(|x| self.sigma[0][self.sigma[2][x]])
            .collect();
        let mut dual =
            CombMap::from_involutions([s0, self.sigma[1].clone(), self.sigma[2].clone()])?;
        dual.vertex_of = self.vertex_of.clone();
        Ok(dual)
    }

    /// Conjugates the map by a flag permutation: flag `x` becomes `perm[x]`.
    pub fn relabel_flags(&self, perm: &[FlagId]) -> Result<CombMap, MapError> {
        let n = self.flag_count();
        let mut sigma = [vec![0; n], vec![0; n], vec![0; n]];
        for i in 0..3 {
            for x in 0..n {
                sigma[i][perm[x]] = perm[self.sigma[i][x]];
            }
        }
        CombMap::from_involutions(sigma)
    }

    /// The unique flag map `a -> b` commuting with the involutions and
    /// sending `src` to `dst`, if one exists.
    fn extend(a: &CombMap, b: &CombMap, src: FlagId, dst: FlagId) -> Option<Vec<FlagId>> {
        let n = a.flag_count();
        if n != b.flag_count() {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        image[src] = dst;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for i in 0..3 {
                let y = a.sigma[i][x];
                let target = b.sigma[i][image[x]];
                if image[y] == usize::MAX {
                    image[y] = target;
                    queue.push_back(y);
                } else if image[y] != target {
                    return None;
                }
            }
        }
        Some(image)
    }

    /// All automorphisms, indexed by the image of flag 0. The identity comes first.
    pub fn automorphism_group(&self) -> Vec<MapAutomorphism> {
        (0..self.flag_count())
            .filter_map(|t| CombMap::extend(self, self, 0, t))
            .map(|flag_perm| MapAutomorphism { flag_perm })
            .collect()
    }

    /// Whether `perm` commutes with all three involutions.
    pub fn is_automorphism(&self, aut: &MapAutomorphism) -> bool {
        let n = self.flag_count();
        aut.flag_perm.len() == n
            && (0..3).all(|i| (0..n).all(|x| aut.flag_perm[self.sigma[i][x]] == self.sigma[i][aut.flag_perm[x]]))
    }

    pub fn is_regular(&self) -> bool {
        self.automorphism_group().len() == self.flag_count()
    }

    pub fn regular_generators(&self) -> Result<RegularGenerators, MapError> {
        let base = 0;
        let rho = |i: usize| {
            CombMap::extend(self, self, base, self.sigma[i][base])
                .map(|flag_perm| MapAutomorphism { flag_perm })
                .ok_or(MapError::NotRegular)
        };
        if !self.is_regular() {
            return Err(MapError::NotRegular);
        }
        let rho = [rho(0)?, rho(1)?, rho(2)?];
        let p = rho[0].compose(&rho[1]).order();
        let q = rho[1].compose(&rho[2]).order();
        let r = rho[0].compose(&rho[1]).compose(&rho[2]).order();
        Ok(RegularGenerators { rho, p, q, r })
    }

    /// A flag bijection `self -> other` commuting with the involutions.
    pub fn isomorphism(&self, other: &CombMap) -> Option<MapAutomorphism> {
        if self.counts != other.counts {
            return None;
        }
        (0..other.flag_count())
            .find_map(|t| CombMap::extend(self, other, 0, t))
            .map(|flag_perm| MapAutomorphism { flag_perm })
    }

    /// All isomorphisms `self -> other`.
    pub fn isomorphisms(&self, other: &CombMap) -> Vec<MapAutomorphism> {
        if self.counts != other.counts {
            return Vec::new();
        }
        (0..other.flag_count())
            .filter_map(|t| CombMap::extend(self, other, 0, t))
            .map(|flag_perm| MapAutomorphism { flag_perm })
            .collect()
    }

    /// Involutory central automorphisms that move every vertex.
    pub fn central_involutions(&self) -> Vec<MapAutomorphism> {
        let group = self.automorphism_group();
        group
            .iter()
            .filter(|g| !g.is_identity() && g.compose(g).is_identity())
            .filter(|g| (0..self.flag_count()).all(|x| self.vertex_of[g.apply(x)] != self.vertex_of[x]))
            .filter(|g| group.iter().all(|h| g.commutes_with(h)))
            .cloned()
            .collect()
    }

    /// The map on the flag orbits of `<gamma>`.
    pub fn quotient_by_involution(&self, gamma: &MapAutomorphism) -> Result<CombMap, MapError> {
        if !self.is_automorphism(gamma) {
            return Err(MapError::NotAutomorphism);
        }
        let n = self.flag_count();
        if let Some(flag) = (0..n).find(|&x| gamma.apply(x) == x) {
            return Err(MapError::FixedFlag { flag });
        }
        if !gamma.compose(gamma).is_identity() {
            return Err(MapError::NotAutomorphism);
        }
        let mut class = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if class[x] == usize::MAX {
                class[x] = next;
                class[gamma.apply(x)] = next;
                next += 1;
            }
        }
        let mut sigma = [vec![0; next], vec![0; next], vec![0; next]];
        for i in 0..3 {
            for x in 0..n {
                sigma[i][class[x]] = class[self.sigma[i][x]];
            }
        }
        CombMap::from_involutions(sigma).map_err(|e| MapError::NonManifoldQuotient(Box::new(e)))
    }
}

fn uniform(values: &[usize]) -> Option<usize> {
    let first = *values.first()?;
    values.iter().all(|&v| v == first).then_some(first)
}

/// Labels each flag by its orbit under the listed generators. Labels are
/// dense and ordered by smallest flag.
fn orbit_labels(sigma: &[Vec<FlagId>; 3], gens: &[usize]) -> (Vec<usize>, usize) {
    let n = sigma[0].len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = sigma[g][x];
                if label[y] == usize::MAX {
                    label[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Rotates each face to start at its smallest vertex and sorts the list.
pub fn canonicalize_faces(faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            let start = f
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map(|(i, _)| i)
                .unwrap_or(0);
            f[start..].iter().chain(&f[..start]).copied().collect()
        })
        .collect();
    out.sort();
    out
}
