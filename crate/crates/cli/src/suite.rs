//! Named property suites over seeded samples.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use bicyclic_core::cert::{
    ac1_escape, ac2_escape, continuity_cert_ac1, continuity_cert_ac2, validate_cert_ac1, validate_cert_ac2, Ac1Cert,
    Ac2Cert, ContinuityCert,
};
use bicyclic_core::falsify::falsify;
use bicyclic_core::geometry::{
    down_set, factor_in_line_product, line_product, preimage_up_segment, shrink_witness, shrink_witness_dual,
    translate_down_ray, up_set,
};
use bicyclic_core::{
    Branch, DownRay, Elem, ExtElem, LineRef, Nbhd, NbhdAc1, NbhdAc2, NonNeg, Part, QCert, QElem, Rational,
    Side, Sign, ZElem,
};
use num_traits::{One, Zero};

use crate::error::HarnessError;
use crate::gen::{Gen, GenConfig, ScalarMode};
use crate::oracle;
use crate::report::{BranchCounts, Failure, SuiteReport};

pub const SUITES: [&str; 9] =
    ["axioms", "order", "lines", "products", "translations", "witnesses", "ac1", "ac2", "bicyclic"];

pub type Validator = fn(&QCert) -> bicyclic_core::Result<bool>;

/// Replaceable parts of the suites, for mutation testing.
#[derive(Clone, Copy, Debug)]
pub struct SuiteHooks {
    pub ac1_validator: Validator,
    pub ac2_validator: Validator,
    /// Falsification budget per certificate.
    pub falsify_samples: usize,
}

impl Default for SuiteHooks {
    fn default() -> Self {
        SuiteHooks { ac1_validator: validate_cert_ac1, ac2_validator: validate_cert_ac2, falsify_samples: 200 }
    }
}

/// Grid used to top up branch coverage: ties are frequent on it.
const TIE_GRID: ScalarMode = ScalarMode::Integer { max: 3 };
const MAX_TOP_UP: usize = 1000;

struct Ctx<'h> {
    gen: Gen,
    hooks: &'h SuiteHooks,
    index: usize,
    branches: BranchCounts,
    checks: u64,
    stats: BTreeMap<String, u64>,
    failures: Vec<Failure>,
}

impl Ctx<'_> {
    fn mul(&mut self, x: &QElem, y: &QElem) -> QElem {
        match x.branch(y) {
            Branch::Lt => self.branches.lt += 1,
            Branch::Eq => self.branches.eq += 1,
            Branch::Gt => self.branches.gt += 1,
        }
        x.mul(y)
    }

    fn apply(&mut self, side: Side, t: &QElem, s: &QElem) -> QElem {
        match side {
            Side::Left => self.mul(t, s),
            Side::Right => self.mul(s, t),
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> [String; 3]) {
        self.checks += 1;
        if !ok {
            let [inputs, expected, got] = detail();
            self.failures.push(Failure { check: name.to_string(), inputs, expected, got });
        }
    }

    fn check_eq<T: PartialEq + Display>(&mut self, name: &str, inputs: impl FnOnce() -> String, expected: &T, got: &T) {
        self.check(name, expected == got, || [inputs(), expected.to_string(), got.to_string()]);
    }

    fn check_true(&mut self, name: &str, ok: bool, inputs: impl FnOnce() -> String) {
        self.check(name, ok, || [inputs(), "true".into(), "false".into()]);
    }

    fn stat(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_default() += 1;
    }

    fn side(&mut self) -> Side {
        if self.gen.coin() {
            Side::Left
        } else {
            Side::Right
        }
    }

    fn along(&mut self, e: &QElem, k: &Rational) -> QElem {
        Elem::new(e.a() + k, e.b() + k).expect("moving down a line stays in the quadrant")
    }
}

fn nn(v: Rational) -> NonNeg<Rational> {
    NonNeg::new(v).expect("generated scalars are non-negative")
}

fn suite_fn(name: &str) -> Option<fn(&mut Ctx<'_>)> {
    Some(match name {
        "axioms" => axioms,
        "order" => order,
        "lines" => lines,
        "products" => products,
        "translations" => translations,
        "witnesses" => witnesses,
        "ac1" => ac1,
        "ac2" => ac2,
        "bicyclic" => bicyclic,
        _ => return None,
    })
}

pub fn run_suite(name: &str, cfg: &GenConfig) -> Result<SuiteReport, HarnessError> {
    run_suite_with(name, cfg, &SuiteHooks::default())
}

pub fn run_suite_with(name: &str, cfg: &GenConfig, hooks: &SuiteHooks) -> Result<SuiteReport, HarnessError> {
    let case = suite_fn(name).ok_or_else(|| HarnessError::UnknownSuite(name.to_string()))?;
    let start = Instant::now();
    let mut cfg = *cfg;
    if name == "bicyclic" {
        if let ScalarMode::Rational { max_num, .. } = cfg.scalar_mode {
            cfg.scalar_mode = ScalarMode::Integer { max: max_num };
        }
    }
    let mut ctx = Ctx {
        gen: Gen::new(&cfg),
        hooks,
        index: 0,
        branches: BranchCounts::default(),
        checks: 0,
        stats: BTreeMap::new(),
        failures: Vec::new(),
    };
    for i in 0..cfg.cases {
        ctx.index = i;
        case(&mut ctx);
    }
    let mut top_up = 0;
    if !ctx.branches.complete() {
        ctx.gen = Gen::new(&cfg.with_mode(TIE_GRID));
        while !ctx.branches.complete() && top_up < MAX_TOP_UP {
            ctx.index = cfg.cases + top_up;
            case(&mut ctx);
            top_up += 1;
        }
    }
    let b = ctx.branches;
    ctx.check("branch-coverage", b.complete(), || {
        [name.to_string(), "lt, eq and gt taken".into(), format!("lt={} eq={} gt={}", b.lt, b.eq, b.gt)]
    });
    let mut failures = ctx.failures;
    failures.sort();
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: cfg.seed,
        cases: cfg.cases,
        top_up_cases: top_up,
        checks: ctx.checks,
        branches: ctx.branches,
        stats: ctx.stats,
        failures,
        elapsed: start.elapsed(),
    })
}

fn axioms(ctx: &mut Ctx<'_>) {
    let (x, y, z) = (ctx.gen.elem(), ctx.gen.elem(), ctx.gen.elem());
    let input = || format!("x={x} y={y} z={z}");

    let xy = ctx.mul(&x, &y);
    let yz = ctx.mul(&y, &z);
    let l = ctx.mul(&xy, &z);
    let r = ctx.mul(&x, &yz);
    ctx.check_eq("associativity", input, &l, &r);

    let (a, b) = oracle::mul_closed(&x, &y);
    let closed = Elem::new(a, b).expect("closed form stays in the quadrant");
    ctx.check_eq("closed-form", input, &closed, &xy);

    let xi = x.inv();
    let xxi = ctx.mul(&x, &xi);
    let xxix = ctx.mul(&xxi, &x);
    ctx.check_eq("x x⁻¹ x = x", input, &x, &xxix);
    let xix = ctx.mul(&xi, &x);
    let xixxi = ctx.mul(&xix, &xi);
    ctx.check_eq("x⁻¹ x x⁻¹ = x⁻¹", input, &xi, &xixxi);
    ctx.check_true("x x⁻¹ idempotent", xxi.is_idempotent() && xxi == Elem::diagonal(nn(x.a().clone())), input);

    let xyi = xy.inv();
    let yixi = ctx.mul(&y.inv(), &xi);
    ctx.check_eq("(xy)⁻¹ = y⁻¹x⁻¹", input, &xyi, &yixi);

    let f = Elem::diagonal(nn(x.a().clone()));
    let g = Elem::diagonal(nn(y.b().clone()));
    let fg = ctx.mul(&f, &g);
    let gf = ctx.mul(&g, &f);
    ctx.check_eq("idempotents commute", input, &fg, &gf);
    let top = Elem::diagonal(nn(x.a().clone().max(y.b().clone())));
    ctx.check_eq("(u,u)(v,v) = (max,max)", input, &top, &fg);

    let id = QElem::identity();
    let ix = ctx.mul(&id, &x);
    let xid = ctx.mul(&x, &id);
    ctx.check_true("identity", ix == x && xid == x, input);

    let zero = ExtElem::Zero;
    let xe: ExtElem<Rational> = x.clone().into();
    ctx.check_true("zero absorbs", zero.mul(&xe) == zero && xe.mul(&zero) == zero && zero.inv() == zero, input);
}

fn order(ctx: &mut Ctx<'_>) {
    let t = ctx.gen.elem();
    let s = match ctx.index % 3 {
        0 => {
            let k = ctx.gen.scalar();
            ctx.along(&t, &k)
        }
        // same line, other direction
        1 => {
            let k = ctx.gen.scalar().min(t.a().clone().min(t.b().clone()));
            Elem::new(t.a() - &k, t.b() - &k).expect("k is at most min(a,b)")
        }
        _ => ctx.gen.elem(),
    };
    let input = || format!("s={s} t={t}");
    let leq = s.natural_leq(&t);
    if leq {
        ctx.stat("comparable");
    }
    ctx.check_eq("order: s = (ss⁻¹)t", input, &leq, &oracle::leq_left_idempotent(&s, &t));
    ctx.check_eq("order: s = t(s⁻¹s)", input, &leq, &oracle::leq_right_idempotent(&s, &t));
    ctx.check_eq("order: a >= c, same line", input, &leq, &oracle::leq_first(&s, &t));
    ctx.check_eq("order: b >= d, same line", input, &leq, &oracle::leq_second(&s, &t));
    let ss = ctx.mul(&s, &s.inv());
    let via_tally = ctx.mul(&ss, &t) == s;
    ctx.check_eq("order: tallied product", input, &leq, &via_tally);
    ctx.check_eq("order: down-set", input, &leq, &down_set(&t, false).member(&s));
    ctx.check_eq("order: up-set", input, &leq, &up_set(&s).member(&t));

    if let Some(e) = s.leq_witness(&t) {
        let te = ctx.mul(&t, &e);
        ctx.check_true("order: witness", leq && e.is_idempotent() && te == s, input);
    } else {
        ctx.check_true("order: witness", !leq, input);
    }

    ctx.check_true("order: reflexive", s.natural_leq(&s), input);
    ctx.check_true("order: antisymmetric", !(leq && t.natural_leq(&s)) || s == t, input);
    let k = ctx.gen.scalar();
    let below = ctx.along(&s, &k);
    ctx.check_true("order: transitive", !leq || below.natural_leq(&t), input);

    let u = ctx.gen.elem();
    let us = ctx.mul(&u, &s);
    let ut = ctx.mul(&u, &t);
    let su = ctx.mul(&s, &u);
    let tu = ctx.mul(&t, &u);
    ctx.check_true(
        "order: compatible",
        !leq || (us.natural_leq(&ut) && su.natural_leq(&tu)),
        || format!("s={s} t={t} u={u}"),
    );
}

fn lines(ctx: &mut Ctx<'_>) {
    let e = ctx.gen.elem();
    let input = || format!("e={e}");
    let (line, x) = e.classify_line();
    ctx.check_eq("lines: round trip", input, &e, &line.point(&x));
    ctx.check_true("lines: contains", line.contains(&e), input);
    let (inv_line, inv_x) = e.inv().classify_line();
    ctx.check_eq("lines: inverse line", input, &line.inv(), &inv_line);
    ctx.check_eq("lines: inverse parameter", input, x.get(), inv_x.get());
    let flips = line.alpha().is_zero() || inv_line.sign() != line.sign();
    ctx.check_true("lines: inverse flips sign", flips && inv_line.alpha() == line.alpha(), input);
    ctx.check_eq("lines: offset", input, &line.offset(), &e.offset());

    let t = ctx.gen.elem();
    let te = ctx.mul(&t, &e);
    let moved = te.offset();
    ctx.check_eq("lines: left translation moves the offset", || format!("t={t} e={e}"), &(e.offset() + t.offset()), &moved);
    let et = ctx.mul(&e, &t);
    ctx.check_eq("lines: right translation moves the offset", || format!("t={t} e={e}"), &(e.offset() + t.offset()), &et.offset());
}

fn products(ctx: &mut Ctx<'_>) {
    let (s1, s2) = [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)]
        [ctx.index % 4];
    let mut alpha = |sign| if sign == Sign::Minus { ctx.gen.positive() } else { ctx.gen.scalar() };
    let (a1, a2) = (alpha(s1), alpha(s2));
    let l1 = LineRef::new(s1, nn(a1.clone()));
    let l2 = LineRef::new(s2, nn(a2.clone()));
    let label = match (s1, s2) {
        (Sign::Plus, Sign::Plus) => "plus-plus",
        (Sign::Minus, Sign::Minus) => "minus-minus",
        (Sign::Plus, Sign::Minus) => "plus-minus",
        (Sign::Minus, Sign::Plus) => "minus-plus",
    };
    ctx.stat(&format!("case.{label}"));
    let product = line_product(&l1, &l2);

    let e1 = l1.point(&nn(ctx.gen.scalar()));
    let e2 = l2.point(&nn(ctx.gen.scalar()));
    let p = ctx.mul(&e1, &e2);
    let input = || format!("{l1}·{l2} e1={e1} e2={e2}");
    // the stated set, written out directly
    let stated = match (s1, s2) {
        (Sign::Plus, Sign::Plus) => p.b() - p.a() == &a1 + &a2,
        (Sign::Minus, Sign::Minus) => p.a() - p.b() == &a1 + &a2,
        (Sign::Plus, Sign::Minus) => p.a() - p.b() == &a2 - &a1,
        (Sign::Minus, Sign::Plus) => p.a() >= &a1 && p.b() >= &a2 && p.a() - p.b() == &a1 - &a2,
    };
    ctx.check_true("products: product in stated set", stated, input);
    ctx.check_true("products: product in line_product", product.member(&p), input);

    let k = ctx.gen.scalar();
    let m = match (s1, s2) {
        (Sign::Plus, Sign::Plus) => Elem::new(k.clone(), &k + &a1 + &a2),
        (Sign::Minus, Sign::Minus) => Elem::new(&k + &a1 + &a2, k.clone()),
        (Sign::Plus, Sign::Minus) => Ok(LineRef::from_offset(&a2 - &a1).point(&nn(k.clone()))),
        (Sign::Minus, Sign::Plus) => Elem::new(&a1 + &k, &a2 + &k),
    }
    .expect("members of the stated set lie in the quadrant");
    let input = || format!("{l1}·{l2} target={m}");
    ctx.check_true("products: stated member in line_product", product.member(&m), input);
    match factor_in_line_product(&m, &l1, &l2) {
        Ok((f1, f2)) => {
            let back = ctx.mul(&f1, &f2);
            let ok = l1.contains(&f1) && l2.contains(&f2) && back == m;
            ctx.check("products: factorization", ok, || [input(), format!("{m}"), format!("{f1}·{f2} = {back}")]);
        }
        Err(e) => ctx.check("products: factorization", false, || [input(), format!("{m}"), e.to_string()]),
    }
}

fn translations(ctx: &mut Ctx<'_>) {
    let side = ctx.side();
    let t = ctx.gen.elem();
    let base = ctx.gen.elem();
    let punctured = ctx.gen.coin();
    let ray = DownRay::new(base.clone(), punctured);
    let image = translate_down_ray(side, &t, &ray);
    let input = || format!("side={side} t={t} ray={}", Part::DownRay(ray.clone()));

    let k = if punctured { ctx.gen.positive() } else { ctx.gen.scalar() };
    let s = ray.at(&k);
    let ts = ctx.apply(side, &t, &s);
    ctx.check("translations: image contains translates", image.member(&ts), || {
        [format!("{} s={s}", input()), Part::DownRay(image.clone()).to_string(), ts.to_string()]
    });

    // every image point has a ray point over it; the translation is affine
    // in the ray parameter on each side of one breakpoint
    let j = if image.is_punctured() { ctx.gen.positive() } else { ctx.gen.scalar() };
    let y = image.at(&j);
    let (a, b) = (t.a().clone(), t.b().clone());
    let (c, d) = (base.a().clone(), base.b().clone());
    let (p, q) = (y.a().clone(), y.b().clone());
    let candidates = match side {
        Side::Left => [&p - (&a - &b) - &c, &q - &d, Rational::zero(), &b - &c],
        Side::Right => [&p - &c, &q - &d - &b + &a, Rational::zero(), &a - &d],
    };
    let mut hit = false;
    for k in candidates {
        if k < Rational::zero() || (punctured && k.is_zero()) {
            continue;
        }
        let s = ray.at(&k);
        if ctx.apply(side, &t, &s) == y {
            hit = true;
            break;
        }
    }
    ctx.check_true("translations: image points are attained", hit, || format!("{} y={y}", input()));

    let u = ctx.gen.elem();
    let up = up_set(&u);
    let pre = preimage_up_segment(side, &t, &up);
    let delta = u.offset() - t.offset();
    let x = ctx.gen.scalar() + delta.clone().max(Rational::zero());
    let on_line = Elem::new(x.clone(), x - &delta).expect("x is past the line start");
    let off_line = ctx.gen.elem();
    for s in [on_line, off_line] {
        let ts = ctx.apply(side, &t, &s);
        ctx.check_eq(
            "translations: preimage membership",
            || format!("side={side} t={t} u={u} s={s} preimage={pre}"),
            &up.member(&ts),
            &pre.member(&s),
        );
    }
}

fn witnesses(ctx: &mut Ctx<'_>) {
    let (e0, e1) = (ctx.gen.elem(), ctx.gen.elem());
    for side in [Side::Left, Side::Right] {
        let w = match side {
            Side::Left => shrink_witness(&e0, &e1),
            Side::Right => shrink_witness_dual(&e0, &e1),
        };
        let input = || format!("side={side} e0={e0} e1={e1} w={w}");
        let tw = ctx.apply(side, &e0, &w);
        ctx.check_true("witnesses: translate below e1", tw.natural_leq(&e1) && oracle::leq_first(&tw, &e1), input);
        for _ in 0..10 {
            let k = ctx.gen.positive();
            let s = ctx.along(&w, &k);
            let ts = ctx.apply(side, &e0, &s);
            ctx.check_true("witnesses: smaller elements stay below e1", ts.natural_leq(&e1), || {
                format!("{} s={s}", input())
            });
        }
        let image = translate_down_ray(side, &e0, &down_set(&w, true));
        let inside = Part::DownRay(image).is_subset_of(&Part::DownRay(down_set(&e1, true)));
        ctx.check_true("witnesses: punctured down-set maps inside", inside, input);
    }
}

fn ac1_target(ctx: &mut Ctx<'_>, t: &QElem) -> Rational {
    if ctx.gen.coin() {
        t.a().clone().max(t.b().clone()) + Rational::one() + ctx.gen.positive()
    } else {
        ctx.gen.positive()
    }
}

fn ac1(ctx: &mut Ctx<'_>) {
    let side = ctx.side();
    let t = ctx.gen.elem();
    let n = ac1_target(ctx, &t);
    let requested = NbhdAc1::new(n.clone()).expect("positive");
    let cert = continuity_cert_ac1(side, &t, &requested);
    let input = || format!("side={side} t={t} n={n}");
    let verdict = (ctx.hooks.ac1_validator)(&cert);
    ctx.check("ac1: certificate validates", matches!(verdict, Ok(true)), || {
        [input(), "valid".into(), format!("{verdict:?}")]
    });
    let ContinuityCert::Ac1(c) = &cert else { unreachable!("ac1 generator returns ac1") };
    if c.target != requested {
        ctx.stat("enlarged");
    }
    let big = c.chosen.n().clone();
    let small = c.target.n().clone();
    ctx.check_true("ac1: target inside requested", small >= n && big == &small + &small, input);

    let seed = ctx.gen.seed();
    let samples = ctx.hooks.falsify_samples;
    let found = falsify(side, &t, &Nbhd::Ac1(c.chosen.clone()), &Nbhd::Ac1(c.target.clone()), samples, seed);
    ctx.check("ac1: no counterexample", found.is_none(), || {
        [input(), "none".into(), format!("{found:?}")]
    });
    for _ in 0..4 {
        let far = &big + ctx.gen.positive();
        let other = ctx.gen.scalar();
        let s = if ctx.gen.coin() { Elem::new(far, other) } else { Elem::new(other, far) }.expect("non-negative");
        let ts = ctx.apply(side, &t, &s);
        ctx.check("ac1: spot check", c.target.member(&ts.clone().into()), || {
            [format!("{} s={s}", input()), format!("outside [0,{small}]²"), ts.to_string()]
        });
    }

    let corrupt = ContinuityCert::Ac1(Ac1Cert { chosen: c.target.clone(), ..c.clone() });
    let escape = ac1_escape(side, &t, &small, &small);
    let verdict = (ctx.hooks.ac1_validator)(&corrupt);
    ctx.check("ac1: radius n is rejected", matches!(verdict, Ok(false)), || {
        let why = match &escape {
            Some((s, img)) => format!("accepted, but {s} maps to {img}"),
            None => format!("{verdict:?}"),
        };
        [input(), "reject".into(), why]
    });
    match escape {
        Some((s, _)) => {
            ctx.stat("radius-n-escapes");
            let ts = ctx.apply(side, &t, &s);
            let genuine = c.target.member(&s.clone().into()) && !c.target.member(&ts.clone().into());
            ctx.check("ac1: escape is genuine", genuine, || [format!("{} s={s}", input()), "escape".into(), ts.to_string()]);
        }
        None => ctx.stat("radius-n-included"),
    }
}

fn ac2(ctx: &mut Ctx<'_>) {
    let side = ctx.side();
    let t = ctx.gen.elem();
    let k = 1 + ctx.gen.below(3);
    let tops: Vec<QElem> = (0..k).map(|_| ctx.gen.elem()).collect();
    let target = NbhdAc2::new(tops).expect("non-empty");
    let cert = continuity_cert_ac2(side, &t, &target);
    let list = |n: &NbhdAc2<Rational>| n.tops().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";");
    let input = || format!("side={side} t={t} target={}", list(&target));
    let verdict = (ctx.hooks.ac2_validator)(&cert);
    ctx.check("ac2: certificate validates", matches!(verdict, Ok(true)), || {
        [input(), "valid".into(), format!("{verdict:?}")]
    });
    let ContinuityCert::Ac2(c) = &cert else { unreachable!("ac2 generator returns ac2") };
    let seed = ctx.gen.seed();
    let samples = ctx.hooks.falsify_samples;
    let found = falsify(side, &t, &Nbhd::Ac2(c.chosen.clone()), &Nbhd::Ac2(target.clone()), samples, seed);
    ctx.check("ac2: no counterexample", found.is_none(), || [input(), "none".into(), format!("{found:?}")]);
    for _ in 0..4 {
        let s = ctx.gen.elem();
        if !c.chosen.member(&s.clone().into()) {
            continue;
        }
        let ts = ctx.apply(side, &t, &s);
        ctx.check("ac2: spot check", target.member(&ts.clone().into()), || {
            [format!("{} s={s}", input()), "outside the excluded tops".into(), ts.to_string()]
        });
    }

    let corrupt = shrink_to_target(c);
    let accepted = matches!((ctx.hooks.ac2_validator)(&corrupt), Ok(true));
    let escape = ac2_escape(side, &t, &target, &target);
    ctx.stat(if accepted { "shrunk-accepted" } else { "shrunk-rejected" });
    ctx.check("ac2: shrunk certificate judged exactly", accepted == escape.is_none(), || {
        let got = match &escape {
            Some((s, img)) => format!("accepted={accepted}, but {s} maps to {img}"),
            None => format!("accepted={accepted}, inclusion holds"),
        };
        [format!("{} chosen=target", input()), "reject exactly when some point escapes".into(), got]
    });
    if let Some((s, _)) = escape {
        let ts = ctx.apply(side, &t, &s);
        let genuine = target.member(&s.clone().into()) && !target.member(&ts.clone().into());
        ctx.check("ac2: escape is genuine", genuine, || [format!("{} s={s}", input()), "escape".into(), ts.to_string()]);
    }
    let seed = ctx.gen.seed();
    let found = falsify(side, &t, &Nbhd::Ac2(target.clone()), &Nbhd::Ac2(target.clone()), samples, seed);
    match found {
        Some(_) => ctx.stat("shrunk-falsified"),
        None if !accepted => ctx.stat("shrunk-unfalsified"),
        None => {}
    }
    ctx.check("ac2: accepted shrunk certificate survives falsification", !accepted || found.is_none(), || {
        [format!("{} chosen=target", input()), "none".into(), format!("{found:?}")]
    });
}

/// The same certificate, claiming that the target itself works as the
/// chosen neighbourhood, with each top as its own witness.
pub fn shrink_to_target(c: &Ac2Cert<Rational>) -> QCert {
    let mut facts = c.facts.clone();
    for f in &mut facts {
        f.witness = f.target_top.clone();
    }
    ContinuityCert::Ac2(Ac2Cert { chosen: c.target.clone(), facts, ..c.clone() })
}

fn bicyclic(ctx: &mut Ctx<'_>) {
    let max = match ctx.gen.mode() {
        ScalarMode::Integer { max } => max,
        ScalarMode::Rational { max_num, .. } => max_num,
    };
    let [k, l, m, n] = [(); 4].map(|_| ctx.gen.integer(max));
    let input = || format!("q^{k}p^{l} · q^{m}p^{n}");
    let (i, j) = oracle::bicyclic(k, l, m, n);
    let r = |v: u64| Rational::from_integer(v.into());
    let x = Elem::new(r(k), r(l)).expect("non-negative");
    let y = Elem::new(r(m), r(n)).expect("non-negative");
    let xy = ctx.mul(&x, &y);
    let expected = Elem::new(r(i), r(j)).expect("non-negative");
    ctx.check_eq("bicyclic: formula", input, &expected, &xy);
    let to_i = |v: u64| i64::try_from(v).expect("grid fits in i64");
    let zx: ZElem = Elem::new(to_i(k), to_i(l)).expect("non-negative");
    let zy: ZElem = Elem::new(to_i(m), to_i(n)).expect("non-negative");
    let zxy = zx.mul(&zy);
    ctx.check_true("bicyclic: integer carrier", (*zxy.a(), *zxy.b()) == (to_i(i), to_i(j)), input);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(seed: u64, cases: usize) -> GenConfig {
        GenConfig::new(seed, cases)
    }

    #[test]
    fn every_suite_passes_small() {
        for name in SUITES {
            let report = run_suite(name, &cfg(3, 60)).unwrap();
            assert!(report.passed(), "{}", report.render());
            assert!(report.branches.complete(), "{name}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &cfg(1, 1)), Err(HarnessError::UnknownSuite(_))));
    }

    #[test]
    fn integer_axioms() {
        let c = cfg(1, 2000).with_mode(ScalarMode::Integer { max: 20 });
        assert!(run_suite("axioms", &c).unwrap().passed());
    }

    #[test]
    fn products_cover_all_cases() {
        let r = run_suite("products", &cfg(11, 200)).unwrap();
        assert!(r.passed());
        for k in ["plus-plus", "minus-minus", "plus-minus", "minus-plus"] {
            assert_eq!(r.stats[&format!("case.{k}")], 50);
        }
    }

    #[test]
    fn mutant_validator_is_caught() {
        fn accept_all(_: &QCert) -> bicyclic_core::Result<bool> {
            Ok(true)
        }
        let hooks = SuiteHooks { ac1_validator: accept_all, ..SuiteHooks::default() };
        let r = run_suite_with("ac1", &cfg(5, 40), &hooks).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.check == "ac1: radius n is rejected" && f.got.contains("maps to")));
    }
}
