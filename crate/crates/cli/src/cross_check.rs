//! Floating-point cross-oracle.
//!
//! Rebuilds every derived figure in `f64` from the ten points and J alone,
//! using formulas that differ from the exact pipeline where possible
//! (altitude solves, reflections for second meets, closed-form circumcentres),
//! and measures how far each verified claim is from holding. Residuals are
//! distances divided by the configuration's coordinate scale.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use tenpoint_core::{perspective_table, CenterLabel, CircleLabel, PointLabel, WoodDesarguesConfiguration};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F(pub f64, pub f64);

impl Add for F {
    type Output = F;
    fn add(self, o: F) -> F {
        F(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for F {
    type Output = F;
    fn sub(self, o: F) -> F {
        F(self.0 - o.0, self.1 - o.1)
    }
}

impl Mul<f64> for F {
    type Output = F;
    fn mul(self, k: f64) -> F {
        F(self.0 * k, self.1 * k)
    }
}

impl F {
    fn dot(self, o: F) -> f64 {
        self.0 * o.0 + self.1 * o.1
    }
    fn cross(self, o: F) -> f64 {
        self.0 * o.1 - self.1 * o.0
    }
    fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
    fn cmul(self, o: F) -> F {
        F(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn cdiv(self, o: F) -> F {
        let d = o.dot(o);
        F((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
}

fn dist(a: F, b: F) -> f64 {
    (a - b).norm()
}

fn circumcenter(a: F, b: F, c: F) -> F {
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    let (a2, b2, c2) = (a.dot(a), b.dot(b), c.dot(c));
    F(
        (a2 * (b.1 - c.1) + b2 * (c.1 - a.1) + c2 * (a.1 - b.1)) / d,
        (a2 * (c.0 - b.0) + b2 * (a.0 - c.0) + c2 * (b.0 - a.0)) / d,
    )
}

/// Solves (p - a).(b - c) = 0 and (p - b).(a - c) = 0.
fn orthocentre(a: F, b: F, c: F) -> F {
    let (u, v) = (b - c, a - c);
    let (r1, r2) = (a.dot(u), b.dot(v));
    let det = u.0 * v.1 - u.1 * v.0;
    F((r1 * v.1 - r2 * u.1) / det, (u.0 * r2 - v.0 * r1) / det)
}

fn reflect(p: F, a: F, b: F) -> F {
    let d = b - a;
    let foot = a + d * ((p - a).dot(d) / d.dot(d));
    foot * 2.0 - p
}

fn line_dist(p: F, a: F, b: F) -> f64 {
    (b - a).cross(p - a).abs() / dist(a, b)
}

/// Largest distance of any point from the line through the furthest pair.
fn collinearity(ps: &[F]) -> f64 {
    let mut best = (0, 0, 0.0);
    for i in 0..ps.len() {
        for k in i + 1..ps.len() {
            let d = dist(ps[i], ps[k]);
            if d > best.2 {
                best = (i, k, d);
            }
        }
    }
    if best.2 == 0.0 {
        return 0.0;
    }
    ps.iter().map(|p| line_dist(*p, ps[best.0], ps[best.1])).fold(0.0, f64::max)
}

/// Worst vertex error of the direct similarity fitted on the first two pairs.
fn similarity_fit(src: &[F], dst: &[F]) -> (F, F, f64) {
    let alpha = (dst[1] - dst[0]).cdiv(src[1] - src[0]);
    let beta = dst[0] - alpha.cmul(src[0]);
    let err = src.iter().zip(dst).map(|(s, d)| dist(alpha.cmul(*s) + beta, *d)).fold(0.0, f64::max);
    (alpha, beta, err)
}

fn fixed_point(alpha: F, beta: F) -> F {
    beta.cdiv(F(1.0, 0.0) - alpha)
}

struct Residuals {
    scale: f64,
    tiny: f64,
    map: BTreeMap<String, f64>,
}

impl Residuals {
    fn put(&mut self, name: &str, raw: f64) {
        let v = if raw.is_nan() { f64::INFINITY } else { raw / self.scale };
        let e = self.map.entry(name.to_string()).or_insert(0.0);
        *e = e.max(v);
    }
    fn put_ratio(&mut self, name: &str, ratio_err: f64) {
        let e = self.map.entry(name.to_string()).or_insert(0.0);
        *e = e.max(if ratio_err.is_nan() { f64::INFINITY } else { ratio_err });
    }
    fn distinct(&self, a: F, b: F) -> bool {
        dist(a, b) > self.tiny
    }
}

/// Residual per check name. Claims the float model cannot evaluate stably
/// (coincident points, collapsed triangles) are skipped.
pub fn residuals(config: &WoodDesarguesConfiguration) -> BTreeMap<String, f64> {
    let f = |p: &tenpoint_core::Point| {
        let (x, y) = p.to_f64();
        F(x, y)
    };
    let p = |l: PointLabel| f(config.point(l));
    let j = f(config.j());
    let scale = config
        .points()
        .map(|(_, q)| f(q))
        .chain([j])
        .chain(config.centers().map(|(_, c)| f(c)))
        .map(|q| q.0.abs().max(q.1.abs()))
        .fold(1.0, f64::max);
    let mut r = Residuals { scale, tiny: 1e-9 * scale, map: BTreeMap::new() };

    let quad = |c: CircleLabel| c.vertices().map(p);
    let center: BTreeMap<CircleLabel, F> = CircleLabel::ALL
        .iter()
        .map(|&c| {
            let q = quad(c);
            (c, circumcenter(q[0], q[1], q[2]))
        })
        .collect();
    let radius = |c: CircleLabel| dist(quad(c)[0], center[&c]);
    let cl = |l: CenterLabel| center[&l.circle()];

    for row in perspective_table() {
        let name = format!("perspective.{}", row.vertex);
        let (t1, t2) = (row.triangle1.map(p), row.triangle2.map(p));
        let v = p(row.vertex);
        for i in 0..3 {
            r.put(&name, collinearity(&[v, t1[i], t2[i]]));
            let (a, b) = ((i + 1) % 3, (i + 2) % 3);
            let x = p(row.perspectrix[i]);
            r.put(&name, line_dist(x, t1[a], t1[b]));
            r.put(&name, line_dist(x, t2[a], t2[b]));
        }
        r.put(&name, collinearity(&row.perspectrix.map(p)));
    }

    for c in CircleLabel::ALL {
        r.put("five-circles", dist(center[&c], f(config.center_of(c))));
        for v in quad(c).into_iter().chain([j]) {
            r.put("five-circles", (dist(v, center[&c]) - radius(c)).abs());
        }
    }
    let (u, vv) = (cl(CenterLabel::U), cl(CenterLabel::V));
    let pc = circumcenter(j, u, vv);
    let pr = dist(j, pc);
    for c in [CenterLabel::L, CenterLabel::M, CenterLabel::N] {
        r.put("five-circles", (dist(cl(c), pc) - pr).abs());
    }

    use PointLabel::*;
    let abc = [A, B, C].map(p);
    let (alpha, beta, err) = similarity_fit(&abc, &[SmallA, SmallB, SmallC].map(p));
    r.put("core-similarity", err);
    r.put("core-similarity", dist(fixed_point(alpha, beta), j));
    let ratio = (radius(CircleLabel::AbcSmall) / radius(CircleLabel::Abck)).powi(2);
    r.put_ratio("core-similarity", (alpha.dot(alpha) - ratio).abs() / ratio);

    let minus = |c: CircleLabel, v: PointLabel| {
        let t: Vec<F> = c.vertices().into_iter().filter(|w| *w != v).map(p).collect();
        orthocentre(t[0], t[1], t[2])
    };
    for c in CircleLabel::ALL {
        let q = quad(c);
        let sum = q.iter().fold(F(0.0, 0.0), |acc, x| acc + *x);
        let name = format!("orthocentre-quadrangle.{c}");
        for (v, x) in c.vertices().into_iter().zip(q) {
            r.put(&name, dist(minus(c, v) + x, sum - center[&c] * 2.0));
        }
        let fs = c.vertices().map(|v| minus(v.other_circle(c), v));
        r.put(&format!("steiner-line.{c}"), collinearity(&fs));
    }

    // Second meets of the pentagon circle: reflect J in the line of centers.
    let meet: BTreeMap<CircleLabel, F> = CircleLabel::ALL.iter().map(|&c| (c, reflect(j, center[&c], pc))).collect();
    let (z, w) = (meet[&CircleLabel::Abck], meet[&CircleLabel::Aa23]);
    for c in CircleLabel::ALL {
        for v in c.vertices() {
            let o = v.other_circle(c);
            if r.distinct(p(v), meet[&c]) && r.distinct(p(v), center[&o]) {
                r.put("pentagon-perspectives", collinearity(&[p(v), center[&o], meet[&c]]));
            }
        }
    }
    let lmn = [CenterLabel::L, CenterLabel::M, CenterLabel::N].map(cl);
    let (alpha, beta, err) = similarity_fit(&abc, &lmn);
    r.put("pentagon-perspectives", err);
    r.put("pentagon-perspectives", dist(fixed_point(alpha, beta), j));

    for c in CircleLabel::ALL {
        let images = c.vertices().map(|v| center[&v.other_circle(c)]);
        r.put("pentagon-quadrangles", similarity_fit(&quad(c), &images).2);
    }

    let (x, y) = (center[&CircleLabel::Abck] * 2.0 - z, pc * 2.0 - z);
    r.put("tangent-concurrency", (dist(x, center[&CircleLabel::Abck]) - radius(CircleLabel::Abck)).abs());
    r.put("tangent-concurrency", (dist(y, pc) - pr).abs());
    for c in CircleLabel::ALL {
        let (xq, yq) = (center[&c] * 2.0 - meet[&c], pc * 2.0 - meet[&c]);
        for v in c.vertices() {
            let co = center[&v.other_circle(c)];
            let n = p(v) - co;
            r.put("tangent-concurrency", (xq - p(v)).dot(n).abs() / n.norm());
            if r.distinct(co, meet[&c]) {
                r.put("tangent-concurrency", (yq - co).dot(n).abs() / n.norm());
            }
        }
    }

    let mut h = BTreeMap::new();
    for row in perspective_table() {
        let (h1, h2) = (orthocentre_of(row.triangle1.map(p)), orthocentre_of(row.triangle2.map(p)));
        let spread = dist(j, h1).min(dist(j, h2)).min(dist(h1, h2));
        if collinearity(&[j, h1, h2]) <= r.tiny || spread <= r.tiny {
            continue;
        }
        let hv = circumcenter(j, h1, h2);
        let axis = row.perspectrix.map(p);
        r.put("hagge", collinearity(&[axis[0], axis[1], axis[2], hv]));
        let avoid: Vec<F> = CenterLabel::ALL
            .iter()
            .filter(|c| !c.circle().vertices().contains(&row.vertex))
            .map(|c| cl(*c))
            .collect();
        r.put("hagge", dist(hv, orthocentre(avoid[0], avoid[1], avoid[2])));
        h.insert(row.vertex, hv);
    }
    for c in CircleLabel::ALL {
        let Some(hq) = c.vertices().iter().map(|v| h.get(v).copied()).collect::<Option<Vec<F>>>() else {
            continue;
        };
        r.put("hagge", similarity_fit(&quad(c), &hq).2);
        let hc = circumcenter(hq[0], hq[1], hq[2]);
        for q in &hq {
            r.put("hagge", (dist(*q, hc) - pr).abs());
        }
    }

    // lemma1 on L, M, N with S = Z.
    let c_lmn = circumcenter(lmn[0], lmn[1], lmn[2]);
    let r_lmn = dist(lmn[0], c_lmn);
    r.put("lemma1", (dist(z, c_lmn) - r_lmn).abs());
    let t = c_lmn * 2.0 - z;
    r.put("lemma1", dist(t, y));
    for q in lmn {
        if r.distinct(q, z) {
            let n = q - z;
            r.put("lemma1", (t - q).dot(n).abs() / n.norm());
        }
    }

    // lemma2 on J, U, L: second meets of circles through J by reflection.
    let l = cl(CenterLabel::L);
    let s1 = circumcenter(j, u, l);
    let (la, lb, ld) = (reflect(j, l, u), reflect(j, s1, l), reflect(j, s1, u));
    r.put("lemma2", collinearity(&[u, la, lb]));
    r.put("lemma2", collinearity(&[l, la, ld]));
    r.put("lemma2", dist(la, p(A)));
    r.put("lemma2", dist(lb, w));
    r.put("lemma2", dist(ld, z));
    r.map
}

fn orthocentre_of(t: [F; 3]) -> F {
    orthocentre(t[0], t[1], t[2])
}
