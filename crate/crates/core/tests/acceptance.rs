//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Exits 0 after printing every line; set `ACCEPTANCE_STRICT=1` to make any
//! FAIL line turn into a nonzero exit status.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regmap::constructions::{
    crosspolytope_realization, cube, grunbaum, grunbaum_model, octahedron, pachner_flip, relative_search, tetrahedron,
    toroidal_antiprismatic, toroidal_prism_variant,
};
use regmap::geom::{rat, ratio, squared_distance, validate_polyhedron, Embedding, PointN, Tolerance};
use regmap::map::{CombMap, MapAutomorphism, SchlafliType};
use regmap::symmetry::{
    full_octahedral_group, geometric_symmetry_group, is_chiral, is_vertex_transitive, octahedral_rotation_group,
    orbit, preserves_centered_gram, reducible_group, ReducibleFamily,
};
use serde_json::Value;

/// Threshold for the floating-point toroidal models.
const FLOAT_TOL: Tolerance = Tolerance(1e-9);
/// Seed for every randomized criterion.
const SEED: u64 = 0;
const RANDOM_POINTS: usize = 1000;
const RELABELINGS: usize = 8;

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn regmap(args: &[&str]) -> Result<(i32, String), String> {
    let o = Command::new(env!("CARGO_BIN_EXE_regmap"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((o.status.code().unwrap_or(-1), String::from_utf8_lossy(&o.stdout).into_owned()))
}

fn build_file(dir: &Path, name: &str) -> Result<String, String> {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let (code, _) = regmap(&["build", name, "-o", &p])?;
    ensure(code == 0, format!("build {name} exited {code}"))?;
    Ok(p)
}

fn power(a: &MapAutomorphism, k: usize) -> MapAutomorphism {
    (0..k).fold(MapAutomorphism::identity(a.flag_perm.len()), |acc, _| acc.compose(a))
}

/// Checks ρ_i² = 1, (ρ0ρ1)^p = (ρ1ρ2)^q = (ρ0ρ2)² = (ρ0ρ1ρ2)^r = 1 with exact orders.
fn coxeter(m: &CombMap, p: usize, q: usize, r: usize) -> Result<(), String> {
    let g = m.regular_generators().map_err(|e| e.to_string())?;
    ensure((g.p, g.q, g.r) == (p, q, r), format!("(p,q,r) = ({},{},{})", g.p, g.q, g.r))?;
    let [r0, r1, r2] = &g.rho;
    for rho in &g.rho {
        ensure(!rho.is_identity() && rho.compose(rho).is_identity(), "generator is not an involution")?;
    }
    for (elt, n) in [(r0.compose(r1), p), (r1.compose(r2), q), (r0.compose(r2), 2), (r0.compose(r1).compose(r2), r)] {
        ensure(power(&elt, n).is_identity(), "relation fails")?;
        ensure((1..n).all(|k| !power(&elt, k).is_identity()), "relation order too small")?;
    }
    Ok(())
}

fn c1_counts(dir: &Path) -> Outcome {
    let p = build_file(dir, "grunbaum")?;
    let (code, out) = regmap(&["analyze", &p])?;
    ensure(code == 0, format!("analyze exited {code}"))?;
    let r: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(r["f_vector"] == serde_json::json!([24, 96, 64]), format!("f_vector {}", r["f_vector"]))?;
    ensure(r["chi"] == -8, format!("chi {}", r["chi"]))?;
    ensure(r["genus"] == 5, format!("genus {}", r["genus"]))?;
    ensure(r["schlafli"] == serde_json::json!([3, 8]), format!("type {}", r["schlafli"]))?;
    Ok("f = (24, 96, 64), chi = -8, genus 5, type {3,8}".into())
}

fn c2_automorphisms() -> Outcome {
    let p = grunbaum().map_err(|e| e.to_string())?;
    let m = p.map();
    let n = m.automorphism_group().len();
    ensure(n == 384, format!("{n} automorphisms"))?;
    ensure(m.is_regular(), "not flag-transitive")?;
    coxeter(m, 3, 8, 12)?;
    Ok("384 automorphisms, flag-transitive, (p,q,r) = (3,8,12)".into())
}

fn c3_petrie() -> Outcome {
    let p = grunbaum().map_err(|e| e.to_string())?;
    let s = p.map().petrie_spectrum();
    ensure(s == vec![(12, 16)], format!("spectrum {s:?}"))?;
    let total: usize = s.iter().map(|(l, c)| l * c).sum();
    ensure(total == 2 * p.map().edge_count(), "length sum is not 2 f1")?;
    Ok("16 Petrie polygons of length 12, sum 192".into())
}

fn c4_verify(dir: &Path) -> Outcome {
    let p = build_file(dir, "grunbaum")?;
    let (code, out) = regmap(&["verify", &p])?;
    ensure(code == 0, format!("verify exited {code}"))?;
    let r: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let c = &r["pair_counts"];
    let pairs = c["disjoint"].as_u64().unwrap_or(0) + c["shared_vertex"].as_u64().unwrap_or(0) + c["shared_edge"].as_u64().unwrap_or(0);
    ensure(pairs == 2016, format!("{pairs} face pairs checked"))?;
    ensure(r["intersection_violations"].as_array().is_some_and(Vec::is_empty), "violations found")?;
    ensure(r["adjacent_noncoplanar"] == true, "coplanar adjacent faces")?;
    Ok("2016 face pairs, 0 violations, no coplanar neighbours".into())
}

fn c5_symmetry() -> Outcome {
    let p = grunbaum().map_err(|e| e.to_string())?;
    let g = geometric_symmetry_group(&p).map_err(|e| e.to_string())?;
    ensure(g.len() == 24, format!("order {}", g.len()))?;
    ensure(g.iter().all(|s| s.det_sign == 1), "orientation-reversing symmetry")?;
    ensure(is_vertex_transitive(&p).map_err(|e| e.to_string())?, "not vertex-transitive")?;
    ensure(is_chiral(&p).map_err(|e| e.to_string())?, "not chiral")?;
    Ok("order 24, all det +1, vertex-transitive, chiral".into())
}

fn c6_quotient() -> Outcome {
    let p = grunbaum().map_err(|e| e.to_string())?;
    let gammas = p.map().central_involutions();
    ensure(gammas.len() == 1, format!("{} central involutions", gammas.len()))?;
    let d = p.map().quotient_by_involution(&gammas[0]).map_err(|e| e.to_string())?;
    ensure(d.f_vector() == (12, 48, 32), format!("f = {:?}", d.f_vector()))?;
    ensure(d.euler_genus().genus == Some(3), "genus is not 3")?;
    ensure(d.is_regular(), "quotient is not regular")?;
    coxeter(&d, 3, 8, 6)?;
    Ok("f = (12, 48, 32), genus 3, regular, (p,q,r) = (3,8,6)".into())
}

fn c7_relative() -> Outcome {
    let search = relative_search().map_err(|e| e.to_string())?;
    let idx = search.chosen.ok_or("no orbit gives a valid non-isomorphic embedding")?;
    let cand = &search.candidates[idx];
    ensure(cand.edges.len() == 12, "orbit size is not 12")?;
    let m = grunbaum_model().map_err(|e| e.to_string())?;
    let q = regmap::constructions::flip_many(&m.embedding, &cand.edges).map_err(|e| e.to_string())?;
    let qm = q.map();
    ensure(validate_polyhedron(&q).valid, "Q self-intersects")?;
    ensure(qm.euler_genus().genus == Some(5), "genus is not 5")?;
    ensure(qm.schlafli_type() == Some(SchlafliType { p: 3, q: 8 }), "type is not {3,8}")?;
    let g = geometric_symmetry_group(&q).map_err(|e| e.to_string())?;
    ensure(g.len() == 24, format!("symmetry order {}", g.len()))?;
    ensure(is_vertex_transitive(&q).map_err(|e| e.to_string())?, "not vertex-transitive")?;
    let autos = qm.automorphism_group().len();
    ensure(autos < qm.flag_count(), "Q is regular")?;
    ensure(qm.isomorphism(m.embedding.map()).is_none(), "Q is isomorphic to P")?;
    let spectrum = qm.petrie_spectrum();
    let lengths: BTreeSet<usize> = spectrum.iter().map(|&(l, _)| l).collect();
    ensure(
        lengths.len() >= 2,
        format!(
            "Q is valid, genus 5, {{3,8}}, symmetry 24, {autos} automorphisms, not isomorphic to P, \
             but its Petrie spectrum {spectrum:?} has a single length"
        ),
    )?;
    Ok(format!("orbit of 12 edges, {autos} automorphisms, Petrie {spectrum:?}"))
}

fn c8_crosspolytope() -> Outcome {
    let p = grunbaum().map_err(|e| e.to_string())?;
    let m = p.map();
    let gamma = m.central_involutions().into_iter().next().ok_or("no central involution")?;
    let e = crosspolytope_realization(m, &gamma).map_err(|e| e.to_string())?;
    ensure(e.dim() == 12, format!("dimension {}", e.dim()))?;
    let faces = e.faces();
    ensure(faces.len() == 64, "face count")?;
    for f in &faces {
        for i in 0..f.len() {
            let d = squared_distance(e.position(f[i]), e.position(f[(i + 1) % f.len()])).map_err(|e| e.to_string())?;
            ensure(d == rat(2), format!("squared edge {d}"))?;
        }
    }
    let autos = m.automorphism_group();
    ensure(autos.iter().all(|a| preserves_centered_gram(&e, &a.vertex_perm(m))), "Gram matrix not preserved")?;
    Ok(format!("64 equilateral faces with squared edge 2, {} automorphisms preserve the Gram matrix", autos.len()))
}

fn c9_reducible() -> Outcome {
    use ReducibleFamily::*;
    for n in 2..=12u32 {
        let k = n as usize;
        for (fam, order) in [(Cn, k), (CnStar, 2 * k), (C2nBracketCn, 2 * k), (Hn, 2 * k), (HnStar, 4 * k), (HnBracketCn, 2 * k), (H2nBracketHn, 4 * k)] {
            let g = reducible_group(fam, n).map_err(|e| e.to_string())?;
            ensure(g.order() == order, format!("{} has order {}", g.name, g.order()))?;
            g.verify().map_err(|e| e.to_string())?;
            let starred = matches!(fam, CnStar | HnStar);
            let bracket = matches!(fam, C2nBracketCn | HnBracketCn | H2nBracketHn);
            if starred {
                ensure(g.contains_central_inversion(), format!("-I missing from {}", g.name))?;
            }
            if bracket {
                ensure(!g.contains_central_inversion(), format!("-I in {}", g.name))?;
            }
        }
    }
    Ok("7 families for n = 2..12: orders, closure, inverses and -I membership".into())
}

fn c10_tori() -> Outcome {
    for n in 7..=10 {
        let a = toroidal_antiprismatic(n, None).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(a.map().schlafli_type() == Some(SchlafliType { p: 3, q: 6 }), format!("n = {n}: type"))?;
        let b = toroidal_prism_variant(n, None).map_err(|e| format!("n = {n}: {e}"))?;
        let mut around = vec![Vec::new(); b.map().vertex_count()];
        for f in b.faces() {
            for &v in &f {
                around[v].push(f.len());
            }
        }
        for mut v in around {
            v.sort_unstable();
            ensure(v == [3, 3, 3, 4, 4], format!("n = {n}: vertex faces {v:?}"))?;
        }
        for e in [&a, &b] {
            ensure(e.tolerance() == FLOAT_TOL, "unexpected tolerance")?;
            ensure(e.map().euler_genus().genus == Some(1), format!("n = {n}: genus"))?;
            ensure(validate_polyhedron(e).valid, format!("n = {n}: invalid"))?;
            ensure(is_vertex_transitive(e).map_err(|e| e.to_string())?, format!("n = {n}: not vertex-transitive"))?;
        }
    }
    Ok(format!("n = 7..10, both variants genus 1, valid at tolerance {:e}, vertex-transitive", FLOAT_TOL.0))
}

fn c11_orbits() -> Outcome {
    let allowed = [1, 6, 8, 12, 24, 48];
    let g = full_octahedral_group();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen = BTreeSet::new();
    for _ in 0..RANDOM_POINTS {
        let mut c = || ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let p = PointN::new(vec![c(), c(), c()]);
        let size = orbit(&g, &p).len();
        ensure(allowed.contains(&size), format!("orbit of size {size}"))?;
        seen.insert(size);
    }
    Ok(format!("{RANDOM_POINTS} points, sizes seen {seen:?}"))
}

fn c12_properties() -> Outcome {
    let solids: Vec<Embedding<regmap::Rat>> =
        vec![tetrahedron().unwrap(), cube().unwrap(), octahedron().unwrap()];
    for e in &solids {
        let d = e.map().petrie_dual().map_err(|e| e.to_string())?;
        let dd = d.petrie_dual().map_err(|e| e.to_string())?;
        ensure(dd.isomorphism(e.map()).is_some(), "Petrie dual is not an involution")?;
    }
    let p = grunbaum().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RELABELINGS {
        let mut perm: Vec<usize> = (0..p.map().flag_count()).collect();
        perm.shuffle(&mut rng);
        let r = p.map().relabel_flags(&perm).map_err(|e| e.to_string())?;
        ensure(r.isomorphism(p.map()).is_some(), "relabelled map not isomorphic")?;
    }
    for edge in [0, 17, 95] {
        let (u, v) = p.map().edge_endpoints()[edge];
        let (f1, f2) = p.map().edge_faces()[edge];
        let faces = p.faces();
        let apex = |f: usize| *faces[f].iter().find(|&&x| x != u && x != v).unwrap();
        let once = pachner_flip(&p, edge).map_err(|e| e.to_string())?;
        let back = once.map().edge_between(apex(f1), apex(f2)).ok_or("new diagonal missing")?;
        let twice = pachner_flip(&once, back).map_err(|e| e.to_string())?;
        ensure(twice.map().isomorphism(p.map()).is_some(), "double flip not isomorphic")?;
    }
    let base = validate_polyhedron(&p);
    for g in &octahedral_rotation_group().elements {
        let q = p.map_positions(|x| g.apply(x)).map_err(|e| e.to_string())?;
        let r = validate_polyhedron(&q);
        ensure(r.valid && r.pair_counts == base.pair_counts, "validator changed under rotation")?;
    }
    Ok(format!("Petrie duals, {RELABELINGS} relabelings, double flips, 24 rotations"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("grunbaum counts, genus and type", Box::new(|| c1_counts(dir.path()))),
        ("automorphism group and Coxeter relations", Box::new(c2_automorphisms)),
        ("Petrie spectrum of P", Box::new(c3_petrie)),
        ("verify grunbaum", Box::new(|| c4_verify(dir.path()))),
        ("geometric symmetry group of P", Box::new(c5_symmetry)),
        ("quotient by the central involution", Box::new(c6_quotient)),
        ("relative polyhedron Q", Box::new(c7_relative)),
        ("12-dimensional crosspolytope realization", Box::new(c8_crosspolytope)),
        ("reducible point groups", Box::new(c9_reducible)),
        ("toroidal constructions", Box::new(c10_tori)),
        ("octahedral orbit sizes", Box::new(c11_orbits)),
        ("property suite", Box::new(c12_properties)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
