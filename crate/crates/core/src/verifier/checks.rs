use std::collections::BTreeMap;



use super::lemmas::{
    check_lemma1, concurrency, lemma2_checker, lemma2_points, printed_triple_holds, Concurrency,
    LemmaInputError,
};
use super::report::{CheckResult, CheckStatus, Checker, VerificationReport, Witness};
use crate::configuration::{
    derive_figures, perspective_table, CenterLabel, CircleLabel, DerivedFigures, Orthocentres,
    PentagonFigure, PerspectiveRecord, PointLabel, WoodDesarguesConfiguration,
};
use crate::error::GeometryError;
use crate::kernel::{
    antipode, circle_through, concyclic_determinant, concyclicity, line_through, meet, orthocentre,
    parallel_through, similarity_between, tangent_at, Concyclicity, Line, Point,
};
use crate::scalar;

fn derivation_failed(ck: &mut Checker, what: &str, e: &GeometryError) {
    ck.fail(Witness::text(format!("derivation of {what}"), e));
}

fn require_concurrent_at(ck: &mut Checker, label: &str, lines: &[Line; 3], expected: &Point) {
    match concurrency(lines) {
        Concurrency::At(p) => {
            ck.require_equal(label, &p, expected);
        }
        Concurrency::Missed { residual, .. } => ck.fail(Witness::scalar(format!("{label}: third line residual"), &residual)),
        Concurrency::Parallel => ck.fail(Witness::text(label, "first two lines are parallel")),
    }
}

fn names(labels: &[PointLabel]) -> String {
    labels.iter().map(|l| l.name()).collect()
}

/// Joins of corresponding vertices pass through the row's vertex, and
/// corresponding sides meet at the labelled perspectrix points, which are
/// collinear.
pub fn check_perspective(config: &WoodDesarguesConfiguration, record: &PerspectiveRecord) -> CheckResult {
    let mut ck = Checker::new(format!("perspective.{}", record.vertex));
    let pt = |l: PointLabel| config.point(l);
    let (t1, t2) = (&record.triangle1, &record.triangle2);
    let vertex = pt(record.vertex);

    for i in 0..3 {
        ck.require_collinear(
            format!("join {}{} through {}", t1[i], t2[i], record.vertex),
            &[pt(t1[i]), pt(t2[i]), vertex],
        );
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let label = format!("{}{} meets {}{} at {}", t1[j], t1[k], t2[j], t2[k], record.perspectrix[i]);
        let side1 = line_through(pt(t1[j]), pt(t1[k]));
        let side2 = line_through(pt(t2[j]), pt(t2[k]));
        match side1.and_then(|s1| side2.and_then(|s2| meet(&s1, &s2))) {
            Ok(m) => {
                ck.require_equal(label, &m, pt(record.perspectrix[i]));
            }
            Err(e) => ck.fail(Witness::text(label, e)),
        }
    }
    let axis = record.perspectrix.map(pt);
    let collinear = ck.require_collinear(
        format!("perspectrix {} collinear", names(&record.perspectrix)),
        &[axis[0], axis[1], axis[2]],
    );
    if collinear {
        if let Ok(line) = line_through(axis[0], axis[1]) {
            ck.info(Witness::text("perspectrix", line));
        }
    }
    ck.finish()
}

/// The five quadrangles are cyclic on their circles, every circle passes
/// through J, and the five centers lie on one circle with J.
pub fn check_five_circles(config: &WoodDesarguesConfiguration) -> CheckResult {
    let mut ck = Checker::new("five-circles");
    for (label, circle) in config.circles() {
        let quad = config.quadrangle(label);
        match concyclicity(&quad[0], &quad[1], &quad[2], &quad[3]) {
            Concyclicity::Concyclic => {}
            Concyclicity::NotConcyclic => ck.fail(Witness::scalar(
                format!("{label} concyclic determinant"),
                &concyclic_determinant(&quad[0], &quad[1], &quad[2], &quad[3]),
            )),
            Concyclicity::CollinearDegenerate => ck.fail(Witness::text(format!("{label} quadrangle"), "all four points collinear")),
        }
        for (v, p) in label.vertices().iter().zip(&quad) {
            ck.require_on(format!("power of {v} on circle {label}"), circle, p);
        }
        ck.require_on(format!("power of J on circle {label}"), circle, config.j());
        ck.require_equal(format!("center {} of {label}", label.center()), config.center_of(label), circle.center());
    }
    let u = config.center(CenterLabel::U);
    let v = config.center(CenterLabel::V);
    match circle_through(u, v, config.j()) {
        Ok(pentagon) => {
            for c in [CenterLabel::L, CenterLabel::M, CenterLabel::N] {
                ck.require_on(format!("power of {c} on circle JUV"), &pentagon, config.center(c));
            }
            ck.info(Witness::point("pentagon center", pentagon.center()));
            ck.info(Witness::scalar("pentagon radius^2", pentagon.radius_sq()));
        }
        Err(e) => ck.fail(Witness::text("circle JUV", e)),
    }
    ck.finish()
}

/// ABC and abc are directly similar about J with ratio equal to the ratio
/// of the two circles.
pub fn check_core_similarity(config: &WoodDesarguesConfiguration) -> CheckResult {
    use PointLabel::*;
    let mut ck = Checker::new("core-similarity");
    let src = [A, B, C].map(|l| config.point(l).clone());
    let dst = [SmallA, SmallB, SmallC].map(|l| config.point(l).clone());
    match similarity_between(&src, &dst) {
        Ok(Some(s)) => {
            ck.info(Witness::point("alpha", s.alpha()));
            match s.fixed_point() {
                Some(fp) => {
                    ck.require_equal("fixed point = J", &fp, config.j());
                }
                None => ck.fail(Witness::point("translation with offset", s.beta())),
            }
            let expected = config.circle(CircleLabel::AbcSmall).radius_sq() / config.circle(CircleLabel::Abck).radius_sq();
            ck.require_scalar_equal("ratio^2 = r^2(abcK) / r^2(ABCK)", &s.ratio_sq(), &expected);
        }
        Ok(None) => ck.fail(Witness::text("similarity ABC -> abc", "no direct similarity maps ABC to abc")),
        Err(e) => ck.fail(Witness::text("similarity ABC -> abc", e)),
    }
    ck.finish()
}

/// `images[i]` is `quad[i]` turned half-way about `sum(quad)/2 - center`.
pub fn check_half_turn(name: impl Into<String>, quad: &[Point; 4], images: &[Point; 4], center: &Point) -> CheckResult {
    let mut ck = Checker::new(name);
    match similarity_between(quad, images) {
        Ok(Some(s)) => {
            ck.info(Witness::point("alpha", s.alpha()));
            if ck.require_equal("alpha = -1", s.alpha(), &-Point::one()) {
                let sum = quad.iter().fold(Point::origin(), |acc, p| acc + p);
                let expected = sum.scale(&scalar::ratio(1, 2)) - center;
                let fp = s.fixed_point().expect("a half-turn has a fixed point");
                ck.require_equal("half-turn centre", &fp, &expected);
            }
        }
        Ok(None) => ck.fail(Witness::text("similarity", "no direct similarity maps the quadrangle to its orthocentres")),
        Err(e) => ck.fail(Witness::text("similarity", e)),
    }
    ck.finish()
}

pub fn check_orthocentre_quadrangle(
    config: &WoodDesarguesConfiguration,
    orthocentres: &Orthocentres,
    circle: CircleLabel,
) -> CheckResult {
    check_half_turn(
        format!("orthocentre-quadrangle.{circle}"),
        &config.quadrangle(circle),
        &orthocentres.h_quadrangle(circle),
        config.center_of(circle),
    )
}

pub fn check_steiner_line(orthocentres: &Orthocentres, circle: CircleLabel) -> CheckResult {
    let mut ck = Checker::new(format!("steiner-line.{circle}"));
    let f = orthocentres.f_quadruple(circle);
    if ck.require_collinear("F points collinear", &[&f[0], &f[1], &f[2], &f[3]]) {
        if let Some(q) = f[1..].iter().find(|q| *q != &f[0]) {
            ck.info(Witness::text("line", line_through(&f[0], q).expect("distinct points")));
        }
    }
    ck.finish()
}

fn collinear_or_degenerate(ck: &mut Checker, names: [&str; 3], points: [&Point; 3]) {
    let label = format!("{}{}{} collinear", names[0], names[1], names[2]);
    for i in 0..3 {
        for k in i + 1..3 {
            if points[i] == points[k] {
                ck.degenerate(format!("{} = {} on line {}{}{}", names[k], names[i], names[0], names[1], names[2]));
            }
        }
    }
    ck.require_collinear(label, &points);
}

/// Lines from the quadrangle vertices to the centers of their other circles
/// pass through the second meet of the pentagon circle with that quadrangle's
/// circle; in particular ALZ, AUW, BMZ, CNZ, and ABC, LMN are directly similar
/// about J in perspective from Z.
pub fn check_pentagon_perspectives(config: &WoodDesarguesConfiguration, pentagon: &PentagonFigure) -> CheckResult {
    use PointLabel::*;
    let mut ck = Checker::new("pentagon-perspectives");
    let p = |l: PointLabel| config.point(l);
    let c = |l: CenterLabel| config.center(l);
    let (z, w) = (pentagon.z(), pentagon.w());
    ck.info(Witness::point("Z", z));
    ck.info(Witness::point("W", w));
    for (label, hit) in &pentagon.meets {
        if hit.tangent {
            ck.degenerate(format!("pentagon circle tangent to {label} at J"));
        }
    }

    collinear_or_degenerate(&mut ck, ["A", "L", "Z"], [p(A), c(CenterLabel::L), z]);
    collinear_or_degenerate(&mut ck, ["A", "U", "W"], [p(A), c(CenterLabel::U), w]);
    collinear_or_degenerate(&mut ck, ["B", "M", "Z"], [p(B), c(CenterLabel::M), z]);
    collinear_or_degenerate(&mut ck, ["C", "N", "Z"], [p(C), c(CenterLabel::N), z]);

    let src = [A, B, C].map(|l| p(l).clone());
    let dst = [CenterLabel::L, CenterLabel::M, CenterLabel::N].map(|l| c(l).clone());
    match similarity_between(&src, &dst) {
        Ok(Some(s)) => {
            ck.info(Witness::point("alpha ABC -> LMN", s.alpha()));
            match s.fixed_point() {
                Some(fp) => {
                    ck.require_equal("ABC -> LMN fixed point = J", &fp, config.j());
                }
                None => ck.fail(Witness::point("ABC -> LMN is a translation by", s.beta())),
            }
        }
        Ok(None) => ck.fail(Witness::text("similarity ABC -> LMN", "none exists")),
        Err(e) => ck.fail(Witness::text("similarity ABC -> LMN", e)),
    }

    // Every circle: vertex-to-other-center lines concur at its meet point.
    for circle in CircleLabel::ALL {
        let zq = pentagon.meet_with(circle);
        for v in circle.vertices() {
            let center_label = v.other_circle(circle).center();
            let center = c(center_label);
            if p(v) == zq {
                ck.degenerate(format!("meet of pentagon circle with {circle} = {v}"));
            }
            ck.require_collinear(
                format!("{v}, {center_label} and the {circle} meet collinear"),
                &[p(v), center, zq],
            );
        }
    }
    ck.finish()
}

/// Quadrangle of `circle` mapped vertex by vertex onto the centers of the
/// other circle through each vertex.
pub fn center_images(config: &WoodDesarguesConfiguration, circle: CircleLabel) -> [Point; 4] {
    circle.vertices().map(|v| config.center_of(v.other_circle(circle)).clone())
}

pub(crate) fn require_similar(ck: &mut Checker, label: &str, src: &[Point], dst: &[Point]) {
    match similarity_between(src, dst) {
        Ok(Some(s)) => ck.info(Witness::point(format!("alpha {label}"), s.alpha())),
        Ok(None) => {
            // Witness: where the fitted map sends the first mismatching vertex.
            let ds = &src[1] - &src[0];
            let alpha = (&dst[1] - &dst[0]).checked_div(&ds);
            let detail = alpha
                .and_then(|alpha| {
                    let beta = &dst[0] - &alpha * &src[0];
                    src.iter().zip(dst).enumerate().skip(2).find_map(|(i, (s, t))| {
                        let img = &alpha * s + &beta;
                        (&img != t).then(|| {
                            format!("vertex {i} maps to {} not {}", super::report::format_point(&img), super::report::format_point(t))
                        })
                    })
                })
                .unwrap_or_else(|| "target collapses".to_string());
            ck.fail(Witness::text(format!("similarity {label}"), detail));
        }
        Err(e) => ck.fail(Witness::text(format!("similarity {label}"), e)),
    }
}

pub fn check_pentagon_quadrangles(config: &WoodDesarguesConfiguration) -> CheckResult {
    let mut ck = Checker::new("pentagon-quadrangles");
    for circle in CircleLabel::ALL {
        let images = center_images(config, circle);
        let centers: String = circle.vertices().iter().map(|v| v.other_circle(circle).center().name()).collect();
        require_similar(&mut ck, &format!("{circle} -> {centers}"), &config.quadrangle(circle), &images);
    }
    ck.finish()
}

/// Tangents at the vertices of each quadrangle to their other circles concur
/// at the antipode of that circle's meet with the pentagon circle; parallels
/// through the corresponding centers concur at the antipode on the pentagon
/// circle. For ABCK these are X and Y, and YZ is a diameter.
pub fn check_tangent_concurrency(config: &WoodDesarguesConfiguration, pentagon: &PentagonFigure) -> CheckResult {
    use PointLabel::*;
    let mut ck = Checker::new("tangent-concurrency");
    let z = pentagon.z();
    ck.info(Witness::point("X", &pentagon.x));
    ck.info(Witness::point("Y", &pentagon.y));
    ck.require_on("power of X on circle ABCK", config.circle(CircleLabel::Abck), &pentagon.x);
    ck.require_on("power of Y on pentagon circle", &pentagon.circle, &pentagon.y);
    ck.require_equal("midpoint of YZ = pentagon center", &pentagon.y.midpoint(z), pentagon.circle.center());

    for circle in CircleLabel::ALL {
        let zq = pentagon.meet_with(circle);
        let (x_q, y_q) = match (antipode(config.circle(circle), zq), antipode(&pentagon.circle, zq)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => {
                ck.fail(Witness::text(format!("antipodes for {circle}"), e));
                continue;
            }
        };
        let mut tangents = Vec::new();
        let mut parallels = Vec::new();
        for v in circle.vertices() {
            let other = v.other_circle(circle);
            let center = config.center_of(other);
            match tangent_at(config.circle(other), config.point(v)) {
                Ok(t) => {
                    parallels.push((parallel_through(center, &t), other.center(), center == zq));
                    tangents.push((t, v));
                }
                Err(e) => ck.fail(Witness::text(format!("tangent at {v} to {other}"), e)),
            }
        }
        for (t, v) in &tangents {
            ck.require_on(format!("tangent at {v} through antipode on {circle}"), t, &x_q);
        }
        for (line, label, coincides) in &parallels {
            if *coincides {
                ck.degenerate(format!("{label} coincides with the {circle} meet"));
                continue;
            }
            ck.require_on(format!("parallel through {label} through antipode on pentagon ({circle})"), line, &y_q);
        }
        if circle == CircleLabel::Abck {
            // The stated instance: tangents at A, B, C and the parallels through L, M, N.
            let three = |v: &[(Line, PointLabel)]| -> Option<[Line; 3]> {
                let pick = |l: PointLabel| v.iter().find(|(_, p)| *p == l).map(|(line, _)| line.clone());
                Some([pick(A)?, pick(B)?, pick(C)?])
            };
            if let Some(lines) = three(&tangents) {
                require_concurrent_at(&mut ck, "tangents at A, B, C concur at X", &lines, &pentagon.x);
            }
            let par: Vec<(Line, PointLabel)> = parallels
                .iter()
                .zip(circle.vertices())
                .map(|((l, _, _), v)| (l.clone(), v))
                .collect();
            if let Some(lines) = three(&par) {
                if [CenterLabel::L, CenterLabel::M, CenterLabel::N].iter().all(|c| config.center(*c) != z) {
                    require_concurrent_at(&mut ck, "parallels through L, M, N concur at Y", &lines, &pentagon.y);
                }
            }
        }
    }
    ck.finish()
}

/// The h-points of a circle's quadrangle, in vertex order.
pub fn hagge_quadrangle(
    hagge: &BTreeMap<PointLabel, Result<crate::configuration::HaggeCentre, GeometryError>>,
    circle: CircleLabel,
) -> Option<[Point; 4]> {
    let v = circle.vertices();
    let get = |l: PointLabel| hagge.get(&l).and_then(|r| r.as_ref().ok()).map(|h| h.h.clone());
    Some([get(v[0])?, get(v[1])?, get(v[2])?, get(v[3])?])
}

pub fn check_hagge(config: &WoodDesarguesConfiguration, derived: &DerivedFigures, pentagon: &PentagonFigure) -> CheckResult {
    let mut ck = Checker::new("hagge");
    let table = perspective_table();

    for row in &table {
        let v = row.vertex;
        let hc = match derived.hagge.get(&v) {
            Some(Ok(hc)) => hc,
            Some(Err(e)) => {
                ck.degenerate(format!("no Hagge circle at {v}: {e}"));
                continue;
            }
            None => {
                ck.fail(Witness::text(format!("h({v})"), "not derived"));
                continue;
            }
        };
        ck.info(Witness::point(format!("h({v})"), &hc.h));
        let axis = row.perspectrix.map(|l| config.point(l));
        ck.require_collinear(
            format!("h({v}) on perspectrix {}", names(&row.perspectrix)),
            &[axis[0], axis[1], axis[2], &hc.h],
        );
        for (label, q) in [("J", config.j()), ("H", &hc.orthocentre_1), ("F", &hc.orthocentre_2)] {
            ck.require_on(format!("power of {label} on Hagge circle {v}"), &hc.circle, q);
        }
        ck.require_equal(format!("Hagge circle {v} centered at h({v})"), hc.circle.center(), &hc.h);

        let avoiding: Vec<&Point> = CenterLabel::ALL
            .iter()
            .filter(|c| !c.circle().vertices().contains(&v))
            .map(|c| config.center(*c))
            .collect();
        match orthocentre(avoiding[0], avoiding[1], avoiding[2]) {
            Ok(o) => {
                ck.require_equal(format!("h({v}) = orthocentre of centers avoiding {v}"), &hc.h, &o);
            }
            Err(e) => ck.fail(Witness::text(format!("center triangle avoiding {v}"), e)),
        }
    }

    let mut radii = Vec::new();
    for circle in CircleLabel::ALL {
        let Some(hq) = hagge_quadrangle(&derived.hagge, circle) else {
            ck.degenerate(format!("h-quadrangle of {circle} incomplete"));
            continue;
        };
        require_similar(&mut ck, &format!("{circle} -> h-quadrangle"), &config.quadrangle(circle), &hq);
        match circle_through(&hq[0], &hq[1], &hq[2]) {
            Ok(c) => {
                ck.require_on(format!("fourth h-point of {circle} on circle of the other three"), &c, &hq[3]);
                ck.require_scalar_equal(
                    format!("h-circle of {circle} radius^2 = pentagon radius^2"),
                    c.radius_sq(),
                    pentagon.circle.radius_sq(),
                );
                radii.push(c.radius_sq().clone());
            }
            Err(e) => ck.fail(Witness::text(format!("h-circle of {circle}"), e)),
        }
    }
    if let Some(r) = radii.first() {
        ck.info(Witness::scalar("h-circle radius^2", r));
    }

    for v in PointLabel::ALL {
        let n = CircleLabel::ALL.iter().filter(|c| c.vertices().contains(&v)).count();
        if n != 2 {
            ck.fail(Witness::text(format!("h({v}) quadrangle count"), n));
        }
    }
    ck.finish()
}

/// The first lemma on the centers L, M, N of the pentagon circle with S = Z.
pub fn check_lemma1_instance(config: &WoodDesarguesConfiguration, pentagon: &PentagonFigure) -> CheckResult {
    let [l, m, n] = [CenterLabel::L, CenterLabel::M, CenterLabel::N].map(|c| config.center(c));
    let z = pentagon.z();
    match check_lemma1(l, m, n, z) {
        Ok(mut res) => {
            let mut ck = Checker::new("lemma1");
            if let Ok(t) = circle_through(l, m, n).and_then(|c| antipode(&c, z)) {
                ck.require_equal("antipode of Z on circle LMN = Y", &t, &pentagon.y);
            }
            let extra = ck.finish();
            if extra.status == CheckStatus::Fail {
                res.status = CheckStatus::Fail;
                res.witnesses.splice(0..0, extra.witnesses);
            }
            res
        }
        Err(LemmaInputError::OffCircle { power }) => {
            let mut ck = Checker::new("lemma1");
            ck.fail(Witness::scalar("power of Z on circle LMN", &power));
            ck.finish()
        }
        Err(e) => degenerate_instance("lemma1", e),
    }
}

/// The second lemma with (J, O, L) = (J, U, L): its three meets must be the
/// configuration's A, W and Z.
pub fn check_lemma2_instance(config: &WoodDesarguesConfiguration, pentagon: &PentagonFigure) -> CheckResult {
    let (j, u, l) = (config.j(), config.center(CenterLabel::U), config.center(CenterLabel::L));
    match lemma2_points(j, u, l) {
        Ok(pts) => {
            let mut ck = lemma2_checker(u, l, &pts);
            ck.require_equal("S2 meets S3 at A", &pts.a, config.point(PointLabel::A));
            ck.require_equal("S1 meets S2 at W", &pts.b, pentagon.w());
            ck.require_equal("S1 meets S3 at Z", &pts.d, pentagon.z());
            ck.note(format!("printed triple L, B, D collinear: {}", printed_triple_holds(l, &pts)));
            ck.finish()
        }
        Err(e) => degenerate_instance("lemma2", e),
    }
}

fn degenerate_instance(name: &str, e: LemmaInputError) -> CheckResult {
    let mut ck = Checker::new(name);
    match e {
        LemmaInputError::Geometry(g) => ck.fail(Witness::text("instance", g)),
        other => ck.degenerate(format!("instance input: {other}")),
    }
    ck.finish()
}

/// Registered check names in report order.
pub fn check_names() -> Vec<String> {
    let mut names: Vec<String> = perspective_table().iter().map(|r| format!("perspective.{}", r.vertex)).collect();
    names.push("five-circles".into());
    names.push("core-similarity".into());
    names.extend(CircleLabel::ALL.iter().map(|c| format!("orthocentre-quadrangle.{c}")));
    names.extend(CircleLabel::ALL.iter().map(|c| format!("steiner-line.{c}")));
    for n in ["pentagon-perspectives", "pentagon-quadrangles", "tangent-concurrency", "hagge", "lemma1", "lemma2"] {
        names.push(n.into());
    }
    names
}

pub const ASSUMPTIONS: [&str; 4] = [
    "ABC and LMN are taken to be in perspective from Z, the second meet of the pentagon circle with circle ABCK",
    "second lemma checked as O, A, B and L, A, D collinear with A = S2.S3, B = S1.S2, D = S1.S3; the printed triple L, B, D is recorded in notes",
    "circle labels Bb13/Bb31 and CC12/Cc12 denote the same circles",
    "H/F roles: the triangle of circle q omitting v is H_q(v) and F_q'(v), q' the other circle through v",
];

/// Runs every registered check in the fixed report order.
pub fn verify_all(config: &WoodDesarguesConfiguration) -> VerificationReport {
    let derived = derive_figures(config);
    verify_with(config, &derived)
}

pub fn verify_with(config: &WoodDesarguesConfiguration, derived: &DerivedFigures) -> VerificationReport {
    let mut results: Vec<CheckResult> = perspective_table().iter().map(|r| check_perspective(config, r)).collect();
    results.push(check_five_circles(config));
    results.push(check_core_similarity(config));

    let failed = |name: String, what: &str, e: &GeometryError| {
        let mut ck = Checker::new(name);
        derivation_failed(&mut ck, what, e);
        ck.finish()
    };
    for circle in CircleLabel::ALL {
        let name = format!("orthocentre-quadrangle.{circle}");
        results.push(match &derived.orthocentres {
            Ok(o) => check_orthocentre_quadrangle(config, o, circle),
            Err(e) => failed(name, "orthocentres", e),
        });
    }
    for circle in CircleLabel::ALL {
        let name = format!("steiner-line.{circle}");
        results.push(match &derived.orthocentres {
            Ok(o) => check_steiner_line(o, circle),
            Err(e) => failed(name, "orthocentres", e),
        });
    }
    match &derived.pentagon {
        Ok(p) => results.push(check_pentagon_perspectives(config, p)),
        Err(e) => results.push(failed("pentagon-perspectives".into(), "pentagon figure", e)),
    }
    results.push(check_pentagon_quadrangles(config));
    match (&derived.pentagon, &derived.orthocentres) {
        (Ok(p), Ok(_)) => {
            results.push(check_tangent_concurrency(config, p));
            results.push(check_hagge(config, derived, p));
        }
        (Ok(p), Err(e)) => {
            results.push(check_tangent_concurrency(config, p));
            results.push(failed("hagge".into(), "orthocentres", e));
        }
        (Err(e), _) => {
            results.push(failed("tangent-concurrency".into(), "pentagon figure", e));
            results.push(failed("hagge".into(), "pentagon figure", e));
        }
    }
    match &derived.pentagon {
        Ok(p) => {
            results.push(check_lemma1_instance(config, p));
            results.push(check_lemma2_instance(config, p));
        }
        Err(e) => {
            results.push(failed("lemma1".into(), "pentagon figure", e));
            results.push(failed("lemma2".into(), "pentagon figure", e));
        }
    }
    debug_assert_eq!(results.iter().map(|r| r.name.clone()).collect::<Vec<_>>(), check_names());
    VerificationReport::new(config.seed().cloned(), results, ASSUMPTIONS.to_vec())
}

