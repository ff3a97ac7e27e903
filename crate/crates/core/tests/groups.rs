use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regmap::geom::{ratio, PointN, Rat};
use regmap::symmetry::{
    full_octahedral_group, icosahedral_rotation_group, octahedral_rotation_group, orbit, pyritohedral_group,
    reducible_group, tetrahedral_rotation_group, GroupElement, Isometry, ReducibleFamily,
};

#[test]
fn reducible_orders_and_central_inversion() {
    use ReducibleFamily::*;
    for n in 2..=12u32 {
        let n_us = n as usize;
        let expected = [(Cn, n_us), (CnStar, 2 * n_us), (C2nBracketCn, 2 * n_us), (Hn, 2 * n_us), (HnStar, 4 * n_us), (HnBracketCn, 2 * n_us), (H2nBracketHn, 4 * n_us)];
        for (fam, order) in expected {
            let g = reducible_group(fam, n).unwrap();
            assert_eq!(g.order(), order, "{}", g.name);
            g.verify().unwrap();
            let starred = matches!(fam, CnStar | HnStar);
            assert_eq!(g.contains_central_inversion(), starred, "{}", g.name);
            let rotations = matches!(fam, Cn | Hn);
            assert_eq!(g.is_rotation_group(), rotations);
            assert_eq!(g.rotation_subgroup().order(), if rotations { order } else { order / 2 });
        }
        let cn = reducible_group(Cn, n).unwrap();
        for fam in ReducibleFamily::ALL {
            assert!(cn.is_subgroup_of(&reducible_group(fam, n).unwrap()));
        }
    }
}

#[test]
fn elements_have_exact_inverses() {
    for fam in ReducibleFamily::ALL {
        let g = reducible_group(fam, 7).unwrap();
        for a in &g.elements {
            assert!(a.compose(&a.inverse()).is_identity());
            assert_eq!(a.det_sign(), a.inverse().det_sign());
        }
    }
}

#[test]
fn platonic_group_orders() {
    assert_eq!(octahedral_rotation_group().order(), 24);
    assert_eq!(full_octahedral_group().order(), 48);
    assert_eq!(tetrahedral_rotation_group().order(), 12);
    let u = pyritohedral_group();
    assert_eq!(u.order(), 24);
    assert!(u.contains_central_inversion());
    assert_eq!(u.mirror_count(), 3);
    assert_eq!(icosahedral_rotation_group().order(), 60);
    assert_eq!(full_octahedral_group().mirror_count(), 9);
}

/// All 48 signed coordinate permutations, applied without matrices.
fn signed_permutation_orbit(p: &[Rat; 3]) -> BTreeSet<Vec<Rat>> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = BTreeSet::new();
    for perm in perms {
        for s in 0..8 {
            let c: Vec<Rat> = (0..3)
                .map(|i| if s >> i & 1 == 1 { -p[perm[i]].clone() } else { p[perm[i]].clone() })
                .collect();
            out.insert(c);
        }
    }
    out
}

#[test]
fn octahedral_orbit_sizes() {
    let allowed = [1, 6, 8, 12, 24, 48];
    let g = full_octahedral_group();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut seen = BTreeSet::new();
    for _ in 0..1000 {
        // Small numerators make coincident and vanishing coordinates common.
        let mut c = || ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let p = [c(), c(), c()];
        let size = orbit(&g, &PointN::new(p.to_vec())).len();
        assert_eq!(size, signed_permutation_orbit(&p).len());
        assert!(allowed.contains(&size));
        seen.insert(size);
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), allowed);
    let snub = orbit(&octahedral_rotation_group(), &PointN::from_ints(&[1, 2, 6]));
    assert_eq!(snub.len(), 24);
}
