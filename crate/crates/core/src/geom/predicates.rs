//! Orientation tests and convex polygon intersection.

use super::point::PointN;
use super::scalar::{Rat, Scalar, Tolerance};
use super::GeomError;

/// Sign of `det[b - a, c - a, d - a]`.
pub fn orient3d_with<S: Scalar>(
    a: &PointN<S>,
    b: &PointN<S>,
    c: &PointN<S>,
    d: &PointN<S>,
    tol: Tolerance,
) -> i32 {
    orient3d_value(a, b, c, d).sign(tol)
}

/// Exact orientation of four rational points.
pub fn orient3d(a: &PointN<Rat>, b: &PointN<Rat>, c: &PointN<Rat>, d: &PointN<Rat>) -> i32 {
    orient3d_with(a, b, c, d, Tolerance::DEFAULT)
}

pub fn orient3d_value<S: Scalar>(a: &PointN<S>, b: &PointN<S>, c: &PointN<S>, d: &PointN<S>) -> S {
    let u = b.sub(a);
    let v = c.sub(a);
    let w = d.sub(a);
    u.cross(&v).dot(&w)
}

/// Normal of a polygon from its first three vertices.
fn normal<S: Scalar>(poly: &[PointN<S>]) -> PointN<S> {
    poly[1].sub(&poly[0]).cross(&poly[2].sub(&poly[0]))
}

/// True iff the polygon is planar and strictly convex in the given cyclic
/// order. Repeated points or a collinear consecutive triple are errors.
pub fn face_planar_convex<S: Scalar>(poly: &[PointN<S>], tol: Tolerance) -> Result<bool, GeomError> {
    let k = poly.len();
    if k < 3 {
        return Err(GeomError::DegenerateFace);
    }
    for i in 0..k {
        let (a, b, c) = (&poly[(i + k - 1) % k], &poly[i], &poly[(i + 1) % k]);
        if b.sub(a).cross(&c.sub(b)).is_zero(tol) {
            return Err(GeomError::DegenerateFace);
        }
    }
    let n = normal(poly);
    if poly.iter().any(|p| n.dot(&p.sub(&poly[0])).sign(tol) != 0) {
        return Ok(false);
    }
    let mut side = 0;
    for i in 0..k {
        let (a, b) = (&poly[i], &poly[(i + 1) % k]);
        let edge = b.sub(a);
        for (j, w) in poly.iter().enumerate() {
            if j == i || j == (i + 1) % k {
                continue;
            }
            let s = n.dot(&edge.cross(&w.sub(a))).sign(tol);
            if s == 0 || (side != 0 && s != side) {
                return Ok(false);
            }
            side = s;
        }
    }
    Ok(true)
}

/// Geometric intersection of two closed convex planar polygons.
#[derive(Debug, Clone, PartialEq)]
pub enum Overlap<S> {
    Empty,
    Point(PointN<S>),
    Segment(PointN<S>, PointN<S>),
    /// Coplanar polygons overlapping in a region of positive area.
    Area,
}

/// Intersection of a polygon with a plane it crosses, as points on the line.
fn plane_section<S: Scalar>(poly: &[PointN<S>], dist: &[S], tol: Tolerance) -> Vec<PointN<S>> {
    let k = poly.len();
    let signs: Vec<i32> = dist.iter().map(|d| d.sign(tol)).collect();
    let mut out = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        if signs[i] == 0 {
            out.push(poly[i].clone());
        }
        if signs[i] * signs[j] < 0 {
            let t = dist[i].clone() / (dist[i].clone() - dist[j].clone());
            out.push(poly[i].add(&poly[j].sub(&poly[i]).scale(&t)));
        }
    }
    out
}

fn extremes<S: Scalar>(points: Vec<PointN<S>>, dir: &PointN<S>, tol: Tolerance) -> Option<((S, PointN<S>), (S, PointN<S>))> {
    let mut it = points.into_iter().map(|p| (dir.dot(&p), p));
    let first = it.next()?;
    let (mut lo, mut hi) = (first.clone(), first);
    for item in it {
        if item.0.cmp_sign(&lo.0, tol) < 0 {
            lo = item.clone();
        }
        if item.0.cmp_sign(&hi.0, tol) > 0 {
            hi = item;
        }
    }
    Some((lo, hi))
}

fn dedup_points<S: Scalar>(points: Vec<PointN<S>>, tol: Tolerance) -> Vec<PointN<S>> {
    let mut out: Vec<PointN<S>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| q.approx_eq(&p, tol)) {
            out.push(p);
        }
    }
    out
}

/// Clips `subject` by the closed half-planes of convex polygon `clip`, both
/// in the same plane.
fn clip_coplanar<S: Scalar>(subject: &[PointN<S>], clip: &[PointN<S>], tol: Tolerance) -> Vec<PointN<S>> {
    let n = normal(clip);
    let mut output = subject.to_vec();
    let k = clip.len();
    for i in 0..k {
        if output.is_empty() {
            break;
        }
        let (a, b) = (&clip[i], &clip[(i + 1) % k]);
        let edge = b.sub(a);
        let value = |w: &PointN<S>| n.dot(&edge.cross(&w.sub(a)));
        let input = std::mem::take(&mut output);
        let m = input.len();
        for idx in 0..m {
            let cur = &input[idx];
            let prev = &input[(idx + m - 1) % m];
            let (vc, vp) = (value(cur), value(prev));
            let (cin, pin) = (vc.sign(tol) >= 0, vp.sign(tol) >= 0);
            if cin != pin {
                let t = vp.clone() / (vp - vc);
                output.push(prev.add(&cur.sub(prev).scale(&t)));
            }
            if cin {
                output.push(cur.clone());
            }
        }
    }
    output
}

/// Exact (or thresholded) intersection of two convex planar polygons in 3-space.
pub fn convex_polygon_overlap<S: Scalar>(a: &[PointN<S>], b: &[PointN<S>], tol: Tolerance) -> Overlap<S> {
    let na = normal(a);
    let nb = normal(b);
    let db: Vec<S> = b.iter().map(|p| na.dot(&p.sub(&a[0]))).collect();
    let da: Vec<S> = a.iter().map(|p| nb.dot(&p.sub(&b[0]))).collect();
    let sb: Vec<i32> = db.iter().map(|d| d.sign(tol)).collect();
    let sa: Vec<i32> = da.iter().map(|d| d.sign(tol)).collect();

    if sb.iter().all(|&s| s == 0) || sa.iter().all(|&s| s == 0) {
        let clipped = dedup_points(clip_coplanar(a, b, tol), tol);
        return match clipped.len() {
            0 => Overlap::Empty,
            1 => Overlap::Point(clipped[0].clone()),
            _ => {
                let d = clipped[1].sub(&clipped[0]);
                let collinear = clipped[2..]
                    .iter()
                    .all(|p| d.cross(&p.sub(&clipped[0])).is_zero(tol));
                if collinear {
                    let ((_, lo), (_, hi)) = extremes(clipped, &d, tol).expect("nonempty");
                    Overlap::Segment(lo, hi)
                } else {
                    Overlap::Area
                }
            }
        };
    }
    let one_side = |s: &[i32]| s.iter().all(|&x| x > 0) || s.iter().all(|&x| x < 0);
    if one_side(&sa) || one_side(&sb) {
        return Overlap::Empty;
    }
    let dir = na.cross(&nb);
    let sec_a = extremes(plane_section(a, &da, tol), &dir, tol);
    let sec_b = extremes(plane_section(b, &db, tol), &dir, tol);
    let (Some((lo_a, hi_a)), Some((lo_b, hi_b))) = (sec_a, sec_b) else {
        return Overlap::Empty;
    };
    let lo = if lo_a.0.cmp_sign(&lo_b.0, tol) >= 0 { lo_a } else { lo_b };
    let hi = if hi_a.0.cmp_sign(&hi_b.0, tol) <= 0 { hi_a } else { hi_b };
    match lo.0.cmp_sign(&hi.0, tol) {
        1 => Overlap::Empty,
        0 => Overlap::Point(lo.1),
        _ => Overlap::Segment(lo.1, hi.1),
    }
}

/// How two faces meet, judged against the cells they share combinatorially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRelation {
    Disjoint,
    SharedVertex,
    SharedEdge,
    /// The geometric intersection exceeds the combinatorial one.
    Violation,
}

fn consecutive(ids: &[usize], u: usize, v: usize) -> bool {
    let k = ids.len();
    (0..k).any(|i| {
        let (a, b) = (ids[i], ids[(i + 1) % k]);
        (a == u && b == v) || (a == v && b == u)
    })
}

/// Classifies a pair of faces given as positions plus vertex ids.
pub fn polygon_pair_relation<S: Scalar>(
    a: &[PointN<S>],
    a_ids: &[usize],
    b: &[PointN<S>],
    b_ids: &[usize],
    tol: Tolerance,
) -> PairRelation {
    let shared: Vec<(usize, usize)> = a_ids
        .iter()
        .enumerate()
        .filter_map(|(i, v)| b_ids.contains(v).then_some((i, *v)))
        .collect();
    let overlap = convex_polygon_overlap(a, b, tol);
    match (shared.as_slice(), overlap) {
        ([], Overlap::Empty) => PairRelation::Disjoint,
        ([(i, _)], Overlap::Point(p)) if p.approx_eq(&a[*i], tol) => PairRelation::SharedVertex,
        ([(i, u), (j, v)], Overlap::Segment(p, q))
            if consecutive(a_ids, *u, *v)
                && consecutive(b_ids, *u, *v)
                && ((p.approx_eq(&a[*i], tol) && q.approx_eq(&a[*j], tol))
                    || (p.approx_eq(&a[*j], tol) && q.approx_eq(&a[*i], tol))) =>
        {
            PairRelation::SharedEdge
        }
        _ => PairRelation::Violation,
    }
}

/// [`polygon_pair_relation`] for two triangles.
pub fn triangle_pair_relation<S: Scalar>(
    a: &[PointN<S>; 3],
    a_ids: [usize; 3],
    b: &[PointN<S>; 3],
    b_ids: [usize; 3],
    tol: Tolerance,
) -> PairRelation {
    polygon_pair_relation(a, &a_ids, b, &b_ids, tol)
}
