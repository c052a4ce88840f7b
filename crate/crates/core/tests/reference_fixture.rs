//! The reference seed (0, 1, -1, 2, 3, -3/2), computed twice: once through the
//! library and once by a straight-line rational calculation that shares no
//! code with it. Both must equal the literal values below.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use tenpoint_core::kernel::similarity_between;
use tenpoint_core::{
    build_configuration, derive_figures, CenterLabel, CircleLabel, ConfigurationSeed, Point, PointLabel,
};

type Q = BigRational;
type P = (Q, Q);

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn pt(x: (i64, i64), y: (i64, i64)) -> P {
    (q(x.0, x.1), q(y.0, y.1))
}

fn to_point(p: &P) -> Point {
    Point::new(p.0.clone(), p.1.clone())
}

mod oracle {
    use super::*;

    pub fn on_unit_circle(t: &Q) -> P {
        let d = Q::one() + t * t;
        ((Q::one() - t * t) / &d, (t + t) / &d)
    }

    /// Solves a1 x + b1 y = c1, a2 x + b2 y = c2.
    pub fn cramer(a1: &Q, b1: &Q, c1: &Q, a2: &Q, b2: &Q, c2: &Q) -> P {
        let det = a1 * b2 - a2 * b1;
        assert!(!det.is_zero(), "singular system");
        ((c1 * b2 - c2 * b1) / &det, (a1 * c2 - a2 * c1) / &det)
    }

    /// Meet of lines p1p2 and p3p4.
    pub fn meet(p1: &P, p2: &P, p3: &P, p4: &P) -> P {
        let (a1, b1) = (&p2.1 - &p1.1, &p1.0 - &p2.0);
        let c1 = &a1 * &p1.0 + &b1 * &p1.1;
        let (a2, b2) = (&p4.1 - &p3.1, &p3.0 - &p4.0);
        let c2 = &a2 * &p3.0 + &b2 * &p3.1;
        cramer(&a1, &b1, &c1, &a2, &b2, &c2)
    }

    /// Equidistant from p, q, r: 2(q - p).X = |q|^2 - |p|^2 and likewise for r.
    pub fn circumcenter(p: &P, q_: &P, r: &P) -> P {
        let n = |a: &P| &a.0 * &a.0 + &a.1 * &a.1;
        let two = Q::from_integer(2.into());
        cramer(
            &(&two * (&q_.0 - &p.0)),
            &(&two * (&q_.1 - &p.1)),
            &(n(q_) - n(p)),
            &(&two * (&r.0 - &p.0)),
            &(&two * (&r.1 - &p.1)),
            &(n(r) - n(p)),
        )
    }

    /// Altitudes from p and q: (X - p).(q - r) = 0, (X - q).(p - r) = 0.
    pub fn orthocentre(p: &P, q_: &P, r: &P) -> P {
        let (u0, u1) = (&q_.0 - &r.0, &q_.1 - &r.1);
        let (v0, v1) = (&p.0 - &r.0, &p.1 - &r.1);
        let c1 = &u0 * &p.0 + &u1 * &p.1;
        let c2 = &v0 * &q_.0 + &v1 * &q_.1;
        cramer(&u0, &u1, &c1, &v0, &v1, &c2)
    }

    /// Second point where line from `from` towards `through` meets the circle
    /// (center, r^2) that contains `from`: the nonzero root of |from + t d - c|^2 = r^2.
    pub fn second_on_circle(from: &P, through: &P, center: &P) -> P {
        let d = (&through.0 - &from.0, &through.1 - &from.1);
        let w = (&from.0 - &center.0, &from.1 - &center.1);
        let t = -Q::from_integer(2.into()) * (&w.0 * &d.0 + &w.1 * &d.1) / (&d.0 * &d.0 + &d.1 * &d.1);
        (&from.0 + &t * &d.0, &from.1 + &t * &d.1)
    }

    pub fn dist_sq(a: &P, b: &P) -> Q {
        let (dx, dy) = (&a.0 - &b.0, &a.1 - &b.1);
        &dx * &dx + &dy * &dy
    }

    /// (a - b) / (c - d) as a complex number.
    pub fn multiplier(a: &P, b: &P, c: &P, d: &P) -> P {
        let (x, y) = (&a.0 - &b.0, &a.1 - &b.1);
        let (u, v) = (&c.0 - &d.0, &c.1 - &d.1);
        let n = &u * &u + &v * &v;
        ((&x * &u + &y * &v) / &n, (&y * &u - &x * &v) / &n)
    }
}

struct Reference {
    j: P,
    a_big: P,
    b_big: P,
    c_big: P,
    k: P,
    a: P,
    b: P,
    c: P,
    p1: P,
    p2: P,
    p3: P,
    centers: [P; 5],
    pentagon: P,
    pentagon_r2: Q,
    h_k: P,
    f_k: P,
    hagge_k: P,
    hagge_r2: Q,
}

fn oracle_reference() -> Reference {
    use oracle::*;
    let [j, k, a_big, b_big, c_big] = [0, 1, -1, 2, 3].map(|t| on_unit_circle(&q(t, 1)));
    // Circle 2 is centred on the bisector of JK at offset s * rot90(K - J).
    let s = q(-3, 2);
    let mid = ((&j.0 + &k.0) / q(2, 1), (&j.1 + &k.1) / q(2, 1));
    let v = (&mid.0 - &s * (&k.1 - &j.1), &mid.1 + &s * (&k.0 - &j.0));
    let a = second_on_circle(&k, &a_big, &v);
    let b = second_on_circle(&k, &b_big, &v);
    let c = second_on_circle(&k, &c_big, &v);
    let p1 = meet(&b_big, &c_big, &b, &c);
    let p2 = meet(&c_big, &a_big, &c, &a);
    let p3 = meet(&a_big, &b_big, &a, &b);
    let u = circumcenter(&a_big, &b_big, &c_big);
    let l = circumcenter(&a_big, &a, &p2);
    let m = circumcenter(&b_big, &b, &p3);
    let n = circumcenter(&c_big, &c, &p1);
    let pentagon = circumcenter(&j, &u, &v);
    let pentagon_r2 = dist_sq(&j, &pentagon);
    let h_k = orthocentre(&a_big, &b_big, &c_big);
    let f_k = orthocentre(&a, &b, &c);
    let hagge_k = circumcenter(&j, &h_k, &f_k);
    let hagge_r2 = dist_sq(&j, &hagge_k);
    Reference {
        j,
        a_big,
        b_big,
        c_big,
        k,
        a,
        b,
        c,
        p1,
        p2,
        p3,
        centers: [u, v, l, m, n],
        pentagon,
        pentagon_r2,
        h_k,
        f_k,
        hagge_k,
        hagge_r2,
    }
}

#[test]
fn oracle_matches_literal_values() {
    let r = oracle_reference();
    assert_eq!(r.j, pt((1, 1), (0, 1)));
    assert_eq!(r.k, pt((0, 1), (1, 1)));
    assert_eq!(r.a_big, pt((0, 1), (-1, 1)));
    assert_eq!(r.b_big, pt((-3, 5), (4, 5)));
    assert_eq!(r.c_big, pt((-4, 5), (3, 5)));
    assert_eq!(r.a, pt((0, 1), (3, 1)));
    assert_eq!(r.b, pt((21, 5), (12, 5)));
    assert_eq!(r.c, pt((4, 1), (3, 1)));
    assert_eq!(r.p1, pt((17, 5), (24, 5)));
    assert_eq!(r.p2, pt((-2, 1), (3, 1)));
    assert_eq!(r.p3, pt((-7, 5), (16, 5)));
    assert_eq!(
        r.centers,
        [pt((0, 1), (0, 1)), pt((2, 1), (2, 1)), pt((-1, 1), (1, 1)), pt((7, 5), (14, 5)), pt((1, 1), (3, 1))]
    );
    assert_eq!(r.pentagon, pt((1, 2), (3, 2)));
    assert_eq!(r.pentagon_r2, q(5, 2));
    assert_eq!(r.h_k, pt((-7, 5), (2, 5)));
    assert_eq!(r.f_k, pt((21, 5), (22, 5)));
    assert_eq!(r.hagge_k, pt((2, 5), (19, 5)));
    assert_eq!(r.hagge_r2, q(74, 5));

    use oracle::multiplier;
    assert_eq!(multiplier(&r.a, &r.b, &r.a_big, &r.b_big), pt((-1, 1), (-2, 1)));
    let [u, v, l, m, n] = &r.centers;
    assert_eq!(multiplier(l, m, &r.a_big, &r.b_big), pt((1, 2), (-3, 2)));
    // Bb31 -> UVLN: B to U, b to V, 3 to L, 1 to N.
    assert_eq!(multiplier(u, v, &r.b_big, &r.b), pt((1, 2), (1, 4)));
    let _ = n;
}

#[test]
fn library_reproduces_reference_exactly() {
    let started = Instant::now();
    let r = oracle_reference();
    let config = build_configuration(&ConfigurationSeed::reference()).unwrap();
    use PointLabel::*;
    let expected = [
        (A, &r.a_big),
        (B, &r.b_big),
        (C, &r.c_big),
        (K, &r.k),
        (SmallA, &r.a),
        (SmallB, &r.b),
        (SmallC, &r.c),
        (P1, &r.p1),
        (P2, &r.p2),
        (P3, &r.p3),
    ];
    for (label, p) in expected {
        assert_eq!(config.point(label), &to_point(p), "{label}");
    }
    assert_eq!(config.j(), &to_point(&r.j));
    for (label, p) in CenterLabel::ALL.iter().zip(&r.centers) {
        assert_eq!(config.center(*label), &to_point(p), "{label}");
    }
    let radii = [1, 5, 5, 8, 9].map(|n| q(n, 1));
    for (circle, r2) in CircleLabel::ALL.iter().zip(&radii) {
        assert_eq!(config.circle(*circle).radius_sq(), r2, "{circle}");
    }

    let figures = derive_figures(&config);
    let pentagon = figures.pentagon.as_ref().unwrap();
    assert_eq!(pentagon.circle.center(), &to_point(&r.pentagon));
    assert_eq!(pentagon.circle.radius_sq(), &r.pentagon_r2);
    let orth = figures.orthocentres.as_ref().unwrap();
    assert_eq!(orth.h(CircleLabel::Abck, K), &to_point(&r.h_k));
    assert_eq!(orth.f(CircleLabel::Abck, K), &to_point(&r.f_k));
    let hagge = figures.hagge[&K].as_ref().unwrap();
    assert_eq!(hagge.h, to_point(&r.hagge_k));
    assert_eq!(hagge.circle.radius_sq(), &r.hagge_r2);

    let alpha = |src: [Point; 3], dst: [Point; 3]| similarity_between(&src, &dst).unwrap().unwrap().alpha().clone();
    let abc = [A, B, C].map(|l| config.point(l).clone());
    assert_eq!(alpha(abc.clone(), [SmallA, SmallB, SmallC].map(|l| config.point(l).clone())), to_point(&pt((-1, 1), (-2, 1))));
    let lmn = [CenterLabel::L, CenterLabel::M, CenterLabel::N].map(|l| config.center(l).clone());
    assert_eq!(alpha(abc, lmn), to_point(&pt((1, 2), (-3, 2))));
    let bb31 = config.quadrangle(CircleLabel::Bb31);
    let uvln = [CenterLabel::U, CenterLabel::V, CenterLabel::L, CenterLabel::N].map(|l| config.center(l).clone());
    let s = similarity_between(&bb31, &uvln).unwrap().unwrap();
    assert_eq!(s.alpha(), &to_point(&pt((1, 2), (1, 4))));

    assert!(started.elapsed().as_secs_f64() < 1.0, "took {:?}", started.elapsed());
}
