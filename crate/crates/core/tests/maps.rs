use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regmap::constructions::{cube, grunbaum, octahedron, tetrahedron};
use regmap::map::{CombMap, MapAutomorphism, MapError, SchlafliType};

/// Petrie polygons traced directly on an oriented face list: from a directed
/// edge, alternately continue along the face on its left and on its right.
fn petrie_oracle(faces: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut next: HashMap<(usize, usize), usize> = HashMap::new();
    let mut prev: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            assert!(next.insert((a, b), c).is_none(), "face list must be coherently oriented");
            prev.insert((b, c), a);
        }
    }
    // In the face left of u->v, follow v to its successor; in the face right of
    // u->v (which contains v->u), follow v to its predecessor.
    let step = |(u, v): (usize, usize), left: bool| -> (usize, usize) {
        if left {
            (v, next[&(u, v)])
        } else {
            (v, prev[&(v, u)])
        }
    };
    let mut seen = std::collections::HashSet::new();
    let mut lengths = Vec::new();
    let mut keys: Vec<(usize, usize)> = next.keys().copied().collect();
    keys.sort_unstable();
    for start in keys {
        for parity in [true, false] {
            if seen.contains(&(start, parity)) {
                continue;
            }
            let (mut e, mut p, mut steps, mut first_return) = (start, parity, 0, None);
            loop {
                seen.insert((e, p));
                e = step(e, p);
                p = !p;
                steps += 1;
                if e == start && first_return.is_none() {
                    first_return = Some(steps);
                }
                if e == start && p == parity {
                    break;
                }
            }
            lengths.push(first_return.unwrap());
        }
    }
    // Every polygon is traced once per direction.
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for l in lengths {
        *counts.entry(l).or_default() += 1;
    }
    let mut out: Vec<(usize, usize)> = counts.into_iter().map(|(l, c)| (l, c / 2)).collect();
    out.sort_unstable();
    out
}

fn p_map() -> CombMap {
    grunbaum().unwrap().map().clone()
}

fn check_coxeter(m: &CombMap, p: usize, q: usize, r: usize) {
    let g = m.regular_generators().unwrap();
    assert_eq!((g.p, g.q, g.r), (p, q, r));
    let id = MapAutomorphism::identity(m.flag_count());
    let pow = |a: &MapAutomorphism, k: usize| (0..k).fold(id.clone(), |acc, _| acc.compose(a));
    let [r0, r1, r2] = &g.rho;
    for rho in &g.rho {
        assert!(!rho.is_identity());
        assert!(rho.compose(rho).is_identity());
        assert!(m.is_automorphism(rho));
    }
    assert!(pow(&r0.compose(r1), p).is_identity());
    assert!(pow(&r1.compose(r2), q).is_identity());
    assert!(pow(&r0.compose(r2), 2).is_identity());
    assert!(pow(&r0.compose(r1).compose(r2), r).is_identity());
    for k in 1..p {
        assert!(!pow(&r0.compose(r1), k).is_identity());
    }
}

#[test]
fn automorphism_group_of_p() {
    let m = p_map();
    let g = m.automorphism_group();
    assert_eq!(g.len(), 384);
    assert!(m.is_regular());
    assert!(g[0].is_identity());
    let set: std::collections::HashSet<_> = g.iter().collect();
    for a in g.iter().step_by(37) {
        assert!(set.contains(&a.inverse()));
        for b in g.iter().step_by(53) {
            assert!(set.contains(&a.compose(b)));
        }
    }
    check_coxeter(&m, 3, 8, 12);
}

#[test]
fn petrie_spectrum_of_p() {
    let p = grunbaum().unwrap();
    let spectrum = p.map().petrie_spectrum();
    assert_eq!(spectrum, vec![(12, 16)]);
    assert_eq!(petrie_oracle(&p.faces()), spectrum);
    assert_eq!(spectrum.iter().map(|(l, c)| l * c).sum::<usize>(), 2 * 96);
}

#[test]
fn petrie_oracle_agrees_on_small_solids() {
    for (e, expected) in [(cube(), vec![(6, 4)]), (tetrahedron(), vec![(4, 3)]), (octahedron(), vec![(6, 4)])] {
        let e = e.unwrap();
        let faces = e.map().oriented_face_cycles().unwrap();
        assert_eq!(petrie_oracle(&faces), expected);
        assert_eq!(e.map().petrie_spectrum(), expected);
    }
}

#[test]
fn petrie_dual_of_p() {
    let d = p_map().petrie_dual().unwrap();
    assert_eq!(d.f_vector(), (24, 96, 16));
    assert_eq!(d.euler_genus().chi, -56);
    assert_eq!(d.schlafli_type(), Some(SchlafliType { p: 12, q: 8 }));
    assert!(d.petrie_dual().unwrap().isomorphism(&p_map()).is_some());
}

#[test]
fn central_involution_pairs_vertices() {
    let p = grunbaum().unwrap();
    let gammas = p.map().central_involutions();
    assert_eq!(gammas.len(), 1);
    let perm = gammas[0].vertex_perm(p.map());
    for v in 0..24 {
        assert_ne!(perm[v], v);
        assert_eq!(perm[perm[v]], v);
    }
    for g in p.map().automorphism_group() {
        assert!(g.commutes_with(&gammas[0]));
    }
    // The snub cube has no centre of symmetry, so the pairing is purely combinatorial.
    let geometric = regmap::symmetry::geometric_symmetry_group(&p).unwrap();
    assert!(geometric.iter().all(|s| s.vertex_perm != perm));
}

#[test]
fn quotient_is_dyck_map() {
    let m = p_map();
    let gamma = m.central_involutions().remove(0);
    let d = m.quotient_by_involution(&gamma).unwrap();
    assert_eq!(d.f_vector(), (12, 48, 32));
    let info = d.euler_genus();
    assert_eq!((info.chi, info.orientable, info.genus), (-4, true, Some(3)));
    assert_eq!(d.schlafli_type(), Some(SchlafliType { p: 3, q: 8 }));
    assert_eq!(d.petrie_spectrum(), vec![(6, 16)]);
    assert_eq!(d.automorphism_group().len(), 192);
    check_coxeter(&d, 3, 8, 6);
    let id = MapAutomorphism::identity(m.flag_count());
    assert!(matches!(m.quotient_by_involution(&id), Err(MapError::FixedFlag { .. })));
}

#[test]
fn relabelled_maps_are_isomorphic() {
    let m = p_map();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..5 {
        let mut perm: Vec<usize> = (0..m.flag_count()).collect();
        perm.shuffle(&mut rng);
        let r = m.relabel_flags(&perm).unwrap();
        let iso = m.isomorphism(&r).unwrap();
        for i in 0..3 {
            for x in 0..m.flag_count() {
                assert_eq!(iso.apply(m.sigma(i, x)), r.sigma(i, iso.apply(x)));
            }
        }
        assert_eq!(r.petrie_spectrum(), m.petrie_spectrum());
        assert_eq!(r.automorphism_group().len(), 384);
    }
}
