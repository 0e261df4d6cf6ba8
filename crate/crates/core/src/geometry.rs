//! Planar polyline predicates: segment intersection by sort-and-sweep,
//! winding numbers and point-to-curve distances.

use num_complex::Complex64;

/// Relative tolerance under which three points count as collinear.
pub const COLLINEAR_TOL: f64 = 1e-12;

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Sign of the turn `a -> b -> c`, zero when nearly collinear.
fn orientation(a: Complex64, b: Complex64, c: Complex64) -> i8 {
    let u = b - a;
    let v = c - a;
    let o = cross(u, v);
    if o.abs() <= COLLINEAR_TOL * u.norm() * v.norm() {
        0
    } else if o > 0.0 {
        1
    } else {
        -1
    }
}

fn within_box(a: Complex64, b: Complex64, p: Complex64) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Closed-segment intersection test, touching included.
pub fn segments_intersect(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(a, b, c))
        || (o2 == 0 && within_box(a, b, d))
        || (o3 == 0 && within_box(c, d, a))
        || (o4 == 0 && within_box(c, d, b))
}

/// Intersection point of two segments known to cross properly.
pub fn crossing_point(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let r = b - a;
    let s = d - c;
    let denom = cross(r, s);
    if denom == 0.0 {
        return a;
    }
    a + r * (cross(c - a, s) / denom)
}

#[derive(Clone, Copy)]
struct Segment {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    a: Complex64,
    b: Complex64,
    /// (polyline, index of the segment within it)
    tag: (usize, usize),
}

impl Segment {
    fn new(a: Complex64, b: Complex64, tag: (usize, usize)) -> Self {
        Self { x0: a.re.min(b.re), x1: a.re.max(b.re), y0: a.im.min(b.im), y1: a.im.max(b.im), a, b, tag }
    }
}

/// Sweeps a vertical line across the segments in order of their left ends,
/// testing each new segment against those still overlapping in `x`.
/// `skip` filters pairs that may legitimately touch.
fn sweep(mut segs: Vec<Segment>, skip: impl Fn((usize, usize), (usize, usize)) -> bool) -> Vec<((usize, usize), (usize, usize))> {
    segs.sort_by(|p, q| p.x0.total_cmp(&q.x0));
    let mut active: Vec<Segment> = Vec::new();
    let mut hits = Vec::new();
    for s in segs {
        active.retain(|t| t.x1 >= s.x0);
        for t in &active {
            if t.y1 < s.y0 || s.y1 < t.y0 || skip(t.tag, s.tag) {
                continue;
            }
            if segments_intersect(t.a, t.b, s.a, s.b) {
                let (p, q) = if t.tag <= s.tag { (t.tag, s.tag) } else { (s.tag, t.tag) };
                hits.push((p, q));
            }
        }
        active.push(s);
    }
    hits.sort_unstable();
    hits
}

/// Pairs `(i, j)`, `i < j`, of non-adjacent segments of a closed polyline
/// (`points[n-1] -> points[0]` included) that intersect.
pub fn closed_self_intersections(points: &[Complex64]) -> Vec<(usize, usize)> {
    let n = points.len();
    if n < 4 {
        return Vec::new();
    }
    let segs = (0..n).map(|i| Segment::new(points[i], points[(i + 1) % n], (0, i))).collect();
    sweep(segs, |p, q| {
        let (i, j) = (p.1.min(q.1), p.1.max(q.1));
        j - i <= 1 || (i == 0 && j == n - 1)
    })
    .into_iter()
    .map(|(p, q)| (p.1, q.1))
    .collect()
}

/// Pairs of intersecting segments `(i, j)` between open polylines `a` and `b`.
pub fn pair_intersections(a: &[Complex64], b: &[Complex64]) -> Vec<(usize, usize)> {
    let mut segs: Vec<Segment> = a.windows(2).enumerate().map(|(i, w)| Segment::new(w[0], w[1], (0, i))).collect();
    segs.extend(b.windows(2).enumerate().map(|(j, w)| Segment::new(w[0], w[1], (1, j))));
    sweep(segs, |p, q| p.0 == q.0).into_iter().map(|(p, q)| (p.1, q.1)).collect()
}

/// Winding number of the closed polyline around `w`.
pub fn winding_number(points: &[Complex64], w: Complex64) -> i64 {
    let n = points.len();
    let total: f64 = (0..n).map(|i| ((points[(i + 1) % n] - w) / (points[i] - w)).arg()).sum();
    (total / std::f64::consts::TAU).round() as i64
}

/// Distance from `w` to the closed polyline.
pub fn distance_to_closed(points: &[Complex64], w: Complex64) -> f64 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % n]);
            let ab = b - a;
            let len2 = ab.norm_sqr();
            let t = if len2 > 0.0 { (((w - a) * ab.conj()).re / len2).clamp(0.0, 1.0) } else { 0.0 };
            (a + ab * t - w).norm()
        })
        .fold(f64::INFINITY, f64::min)
}
