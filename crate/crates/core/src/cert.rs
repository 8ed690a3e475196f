//! Certificates that a one-sided translation is continuous at zero in the
//! compact topologies.
//!
//! A certificate for translator `t`, target neighbourhood `W` and chosen
//! neighbourhood `V` claims `t·V ⊆ W` (Left) or `V·t ⊆ W` (Right). Zero is
//! absorbing, so only the points of `V ∖ {0}` need an argument.
//!
//! For the plane compactification the evidence is the case split on the
//! first coordinate of `s = (a,b) ∈ V`: each case names the affine piece of
//! the translation that applies, the coordinate of the image that stays
//! above `n`, and a chain of exact inequalities from the infimum of that
//! coordinate down to `n`. The validator re-derives every chain, checks that
//! the cases cover `V ∖ {0}`, and independently decides the inclusion by
//! scanning the corners of the polygons `{s : t·s ∈ [0,n]²}`.
//!
//! For the order compactification the evidence is, per excluded top `u` of
//! the target, the witness from [`shrink_witness`] and the exact preimage of
//! `↑u`; the validator recomputes the preimage and decides whether it lies in
//! the union of the up-sets excluded by `V`.

use std::fmt;

use crate::coord::{max_of, two, Coord};
use crate::error::{Error, Result};
use crate::geometry::{preimage_up_segment, shrink_witness, shrink_witness_dual, up_set, Region, Side};
use crate::semigroup::{Elem, ExtElem};
use crate::topology::{NbhdAc1, NbhdAc2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Ac1,
    Ac2,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Ac1 => "ac1",
            Topology::Ac2 => "ac2",
        })
    }
}

/// One endpoint of an interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bound<T> {
    pub value: T,
    pub open: bool,
}

impl<T> Bound<T> {
    pub fn closed(value: T) -> Self {
        Bound { value, open: false }
    }

    pub fn open(value: T) -> Self {
        Bound { value, open: true }
    }
}

/// An interval of coordinate values; `hi = None` is unbounded above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lo: Bound<T>,
    pub hi: Option<Bound<T>>,
}

impl<T: Coord> Interval<T> {
    pub fn new(lo: Bound<T>, hi: Option<Bound<T>>) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, v: &T) -> bool {
        let above = *v > self.lo.value || (*v == self.lo.value && !self.lo.open);
        let below = match &self.hi {
            None => true,
            Some(h) => *v < h.value || (*v == h.value && !h.open),
        };
        above && below
    }
}

/// The two affine pieces of a translation.
///
/// Left by `(x,y)`: `Shift` on `a >= y` sends `(a,b)` to `(x-y+a, b)`, and
/// `Hold` on `a <= y` sends it to `(x, y-a+b)`. Right by `(x,y)` is the
/// mirror image: `Shift` on `b >= x` gives `(a, y-x+b)` and `Hold` on
/// `b <= x` gives `(x-b+a, y)`. The pieces agree where their domains meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    Shift,
    Hold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    First,
    Second,
}

/// The cases of the separate-continuity argument at zero, in the Left
/// orientation; Right certificates use the mirrored boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// `a > 2n`
    Far,
    /// `n <= a <= 2n`, `b > 2n`
    Middle,
    /// `y <= a < n`, `b > 2n`
    NearShift,
    /// `a < y`, `b > 2n`
    NearHold,
}

impl CaseId {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::Far => "1",
            CaseId::Middle => "2",
            CaseId::NearShift => "3a",
            CaseId::NearHold => "3b",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "1" => CaseId::Far,
            "2" => CaseId::Middle,
            "3a" => CaseId::NearShift,
            "3b" => CaseId::NearHold,
            other => return Err(Error::MalformedCert(format!("unknown case id {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Ge,
    Gt,
}

impl Rel {
    pub fn holds<T: PartialOrd>(self, lhs: &T, rhs: &T) -> bool {
        match self {
            Rel::Ge => lhs >= rhs,
            Rel::Gt => lhs > rhs,
        }
    }
}

/// `start (rel1) v1 (rel2) v2 …`, where `start` is the infimum of the
/// escaping image coordinate over the case box, excluded if `start_open`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<T> {
    pub start: T,
    pub start_open: bool,
    pub links: Vec<(Rel, T)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ac1Case<T> {
    pub id: CaseId,
    pub a: Interval<T>,
    pub b: Interval<T>,
    pub piece: Piece,
    pub escape: Coordinate,
    pub chain: Chain<T>,
}

impl<T: Coord> Ac1Case<T> {
    fn contains(&self, a: &T, b: &T) -> bool {
        self.a.contains(a) && self.b.contains(b)
    }

    fn mirrored(self) -> Self {
        let escape = match self.escape {
            Coordinate::First => Coordinate::Second,
            Coordinate::Second => Coordinate::First,
        };
        Ac1Case { a: self.b, b: self.a, escape, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ac1Cert<T> {
    pub side: Side,
    pub translator: Elem<T>,
    /// The neighbourhood asked for.
    pub requested: NbhdAc1<T>,
    /// The neighbourhood certified; smaller than `requested` when the
    /// translator forced `n` up.
    pub target: NbhdAc1<T>,
    pub chosen: NbhdAc1<T>,
    pub cases: Vec<Ac1Case<T>>,
}

/// Evidence for one excluded top of the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ac2Fact<T> {
    pub target_top: Elem<T>,
    pub witness: Elem<T>,
    /// `{s : t·s ∈ ↑target_top}` (or `s·t` for Right).
    pub preimage: Region<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ac2Cert<T> {
    pub side: Side,
    pub translator: Elem<T>,
    pub target: NbhdAc2<T>,
    pub chosen: NbhdAc2<T>,
    pub facts: Vec<Ac2Fact<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ContinuityCert<T> {
    Ac1(Ac1Cert<T>),
    Ac2(Ac2Cert<T>),
}

impl<T: Coord> ContinuityCert<T> {
    pub fn topology(&self) -> Topology {
        match self {
            ContinuityCert::Ac1(_) => Topology::Ac1,
            ContinuityCert::Ac2(_) => Topology::Ac2,
        }
    }

    pub fn side(&self) -> Side {
        match self {
            ContinuityCert::Ac1(c) => c.side,
            ContinuityCert::Ac2(c) => c.side,
        }
    }

    pub fn translator(&self) -> &Elem<T> {
        match self {
            ContinuityCert::Ac1(c) => &c.translator,
            ContinuityCert::Ac2(c) => &c.translator,
        }
    }
}

// c + ca·a + cb·b with ca, cb ∈ {-1, 0, 1}
#[derive(Clone, Debug)]
struct Affine<T> {
    c: T,
    ca: i8,
    cb: i8,
}

impl<T: Coord> Affine<T> {
    /// Infimum over a box, with whether it is excluded. `None` when
    /// unbounded below.
    fn infimum(&self, a: &Interval<T>, b: &Interval<T>) -> Option<(T, bool)> {
        let mut value = self.c.clone();
        let mut open = false;
        for (k, iv) in [(self.ca, a), (self.cb, b)] {
            match k {
                1 => {
                    value = value + iv.lo.value.clone();
                    open |= iv.lo.open;
                }
                -1 => {
                    let hi = iv.hi.as_ref()?;
                    value = value - hi.value.clone();
                    open |= hi.open;
                }
                _ => {}
            }
        }
        Some((value, open))
    }
}

// Domain `coord >= threshold` (Shift) or `coord <= threshold` (Hold) and the
// image coordinates of one piece.
struct PieceMap<T> {
    on_first: bool,
    threshold: T,
    at_least: bool,
    image: [Affine<T>; 2],
}

fn piece_map<T: Coord>(side: Side, piece: Piece, t: &Elem<T>) -> PieceMap<T> {
    let (x, y) = (t.a().clone(), t.b().clone());
    let aff = |c: T, ca: i8, cb: i8| Affine { c, ca, cb };
    match (side, piece) {
        (Side::Left, Piece::Shift) => PieceMap {
            on_first: true,
            threshold: y.clone(),
            at_least: true,
            image: [aff(x - y, 1, 0), aff(T::zero(), 0, 1)],
        },
        (Side::Left, Piece::Hold) => PieceMap {
            on_first: true,
            threshold: y.clone(),
            at_least: false,
            image: [aff(x, 0, 0), aff(y, -1, 1)],
        },
        (Side::Right, Piece::Shift) => PieceMap {
            on_first: false,
            threshold: x.clone(),
            at_least: true,
            image: [aff(T::zero(), 1, 0), aff(y - x, 0, 1)],
        },
        (Side::Right, Piece::Hold) => PieceMap {
            on_first: false,
            threshold: x.clone(),
            at_least: false,
            image: [aff(x, 1, -1), aff(y, 0, 0)],
        },
    }
}

/// Builds a certificate for `t·U_{2n} ⊆ U_n` (or `U_{2n}·t ⊆ U_n`).
///
/// The case analysis needs `n > max(t.a, t.b) + 1`; a smaller `n` is first
/// raised to `max(t.a, t.b) + 2`, which certifies a smaller neighbourhood
/// inside the requested one.
pub fn continuity_cert_ac1<T: Coord>(
    side: Side,
    translator: &Elem<T>,
    target: &NbhdAc1<T>,
) -> ContinuityCert<T> {
    let m = max_of(translator.a(), translator.b());
    let n = if *target.n() > m.clone() + T::one() {
        target.n().clone()
    } else {
        m + two()
    };
    let big = two::<T>() * n.clone();
    let cases = match side {
        Side::Left => left_cases(translator.a(), translator.b(), &n, &big),
        Side::Right => left_cases(translator.b(), translator.a(), &n, &big)
            .into_iter()
            .map(Ac1Case::mirrored)
            .collect(),
    };
    ContinuityCert::Ac1(Ac1Cert {
        side,
        translator: translator.clone(),
        requested: target.clone(),
        target: NbhdAc1::new(n).expect("n is positive"),
        chosen: NbhdAc1::new(big).expect("2n is positive"),
        cases,
    })
}

fn left_cases<T: Coord>(x: &T, y: &T, n: &T, big: &T) -> Vec<Ac1Case<T>> {
    let zero = T::zero;
    let beyond = || Interval::new(Bound::open(big.clone()), None);
    let past_big = || Chain { start: big.clone(), start_open: true, links: vec![(Rel::Ge, n.clone())] };
    let mut cases = vec![
        // x - y + a > x - y + 2n >= 2n - n >= n
        Ac1Case {
            id: CaseId::Far,
            a: beyond(),
            b: Interval::new(Bound::closed(zero()), None),
            piece: Piece::Shift,
            escape: Coordinate::First,
            chain: Chain {
                start: x.clone() - y.clone() + big.clone(),
                start_open: true,
                links: vec![(Rel::Ge, big.clone() - n.clone()), (Rel::Ge, n.clone())],
            },
        },
        Ac1Case {
            id: CaseId::Middle,
            a: Interval::new(Bound::closed(n.clone()), Some(Bound::closed(big.clone()))),
            b: beyond(),
            piece: Piece::Shift,
            escape: Coordinate::Second,
            chain: past_big(),
        },
        Ac1Case {
            id: CaseId::NearShift,
            a: Interval::new(Bound::closed(y.clone()), Some(Bound::open(n.clone()))),
            b: beyond(),
            piece: Piece::Shift,
            escape: Coordinate::Second,
            chain: past_big(),
        },
    ];
    if y.is_positive() {
        // y - a + b > y - y + 2n
        cases.push(Ac1Case {
            id: CaseId::NearHold,
            a: Interval::new(Bound::closed(zero()), Some(Bound::open(y.clone()))),
            b: beyond(),
            piece: Piece::Hold,
            escape: Coordinate::Second,
            chain: past_big(),
        });
    }
    cases
}

/// Everything wrong with an `Ac1` certificate; empty means valid.
pub fn check_ac1<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<Vec<String>> {
    let ContinuityCert::Ac1(c) = cert else {
        return Err(Error::MalformedCert("expected an ac1 certificate".into()));
    };
    if c.cases.is_empty() {
        return Err(Error::MalformedCert("no cases".into()));
    }
    let mut problems = Vec::new();
    let n = c.target.n();
    let big = c.chosen.n();
    if c.target.n() < c.requested.n() {
        problems.push(format!("target n={n} is weaker than requested n={}", c.requested.n()));
    }

    for case in &c.cases {
        let id = case.id.as_str();
        if case.a.lo.value.is_negative() || case.b.lo.value.is_negative() {
            problems.push(format!("case {id}: box leaves the quadrant"));
        }
        let map = piece_map(c.side, case.piece, &c.translator);
        let iv = if map.on_first { &case.a } else { &case.b };
        let inside = if map.at_least {
            iv.lo.value >= map.threshold
        } else {
            iv.hi.as_ref().is_some_and(|h| h.value <= map.threshold)
        };
        if !inside {
            problems.push(format!("case {id}: box is not inside the {:?} piece", case.piece));
        }
        let coord = match case.escape {
            Coordinate::First => &map.image[0],
            Coordinate::Second => &map.image[1],
        };
        match coord.infimum(&case.a, &case.b) {
            Some((inf, open)) if inf == case.chain.start && open == case.chain.start_open => {}
            Some((inf, open)) => problems.push(format!(
                "case {id}: chain starts at {}{}, infimum is {inf}{}",
                case.chain.start,
                if case.chain.start_open { " (open)" } else { "" },
                if open { " (open)" } else { "" }
            )),
            None => problems.push(format!("case {id}: escaping coordinate is unbounded below")),
        }
        let mut prev = &case.chain.start;
        let mut strict = case.chain.start_open;
        for (rel, v) in &case.chain.links {
            if !rel.holds(prev, v) {
                problems.push(format!("case {id}: {prev} {rel:?} {v} fails"));
            }
            strict |= *rel == Rel::Gt;
            prev = v;
        }
        if prev != n {
            problems.push(format!("case {id}: chain ends at {prev}, not n={n}"));
        } else if !strict {
            problems.push(format!("case {id}: chain only shows >= n"));
        }
    }

    if let Some((a, b)) = uncovered_point(&c.cases, big) {
        problems.push(format!("cases miss ({a},{b}) of the chosen neighbourhood"));
    }
    if let Some((s, img)) = ac1_escape(c.side, &c.translator, n, big) {
        problems.push(format!("{s} maps to {img}, outside the target"));
    }
    Ok(problems)
}

pub fn validate_cert_ac1<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<bool> {
    check_ac1(cert).map(|p| p.is_empty())
}

// The cases are unions of boxes, and membership in every box and in the
// chosen neighbourhood is constant on the cells cut out by all the box
// endpoints, so one representative per cell decides coverage.
fn uncovered_point<T: Coord>(cases: &[Ac1Case<T>], big: &T) -> Option<(T, T)> {
    let reps = |pick: fn(&Ac1Case<T>) -> &Interval<T>| {
        let mut cuts = vec![T::zero(), big.clone()];
        for c in cases {
            let iv = pick(c);
            cuts.push(iv.lo.value.clone());
            if let Some(h) = &iv.hi {
                cuts.push(h.value.clone());
            }
        }
        cuts.retain(|v| !v.is_negative());
        cuts.sort_by(|x, y| x.partial_cmp(y).expect("comparable"));
        cuts.dedup();
        let mut out = Vec::new();
        for w in cuts.windows(2) {
            out.push(w[0].clone());
            out.push((w[0].clone() + w[1].clone()) / two());
        }
        let last = cuts.last().expect("cuts contain zero").clone();
        out.push(last.clone());
        out.push(last + T::one());
        out
    };
    let ras = reps(|c| &c.a);
    let rbs = reps(|c| &c.b);
    for ra in &ras {
        for rb in &rbs {
            let chosen = ra > big || rb > big;
            if chosen && !cases.iter().any(|c| c.contains(ra, rb)) {
                return Some((ra.clone(), rb.clone()));
            }
        }
    }
    None
}

/// Searches for `s` with `s.a > big` or `s.b > big` whose translate lies in
/// `[0,n]²`, the complement of the target.
///
/// On each affine piece the set `{s : translate(s) ∈ [0,n]²}` is a bounded
/// polygon, so the maxima of both coordinates over it are attained at
/// corners, i.e. at intersections of two constraint lines. `None` means
/// the inclusion `t·U_big ⊆ U_n` holds.
pub fn ac1_escape<T: Coord>(side: Side, t: &Elem<T>, n: &T, big: &T) -> Option<(Elem<T>, Elem<T>)> {
    for piece in [Piece::Shift, Piece::Hold] {
        let map = piece_map(side, piece, t);
        // rows (ca, cb, c) meaning ca·a + cb·b <= c
        let mut rows: Vec<(T, T, T)> = Vec::new();
        let one = T::one;
        let zero = T::zero;
        rows.push((-one(), zero(), zero()));
        rows.push((zero(), -one(), zero()));
        let dom_row = |k: T| if map.on_first { (k, zero()) } else { (zero(), k) };
        let (da, db) = dom_row(if map.at_least { -one() } else { one() });
        let dc = if map.at_least { -map.threshold.clone() } else { map.threshold.clone() };
        rows.push((da, db, dc));
        for img in &map.image {
            let k = |v: i8| match v {
                1 => one(),
                -1 => -one(),
                _ => zero(),
            };
            let (ca, cb) = (k(img.ca), k(img.cb));
            rows.push((ca.clone(), cb.clone(), n.clone() - img.c.clone()));
            rows.push((-ca, -cb, img.c.clone()));
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let (a1, b1, c1) = &rows[i];
                let (a2, b2, c2) = &rows[j];
                let det = a1.clone() * b2.clone() - b1.clone() * a2.clone();
                if det.is_zero() {
                    continue;
                }
                let a = (c1.clone() * b2.clone() - b1.clone() * c2.clone()) / det.clone();
                let b = (a1.clone() * c2.clone() - c1.clone() * a2.clone()) / det;
                let feasible = rows
                    .iter()
                    .all(|(ra, rb, rc)| ra.clone() * a.clone() + rb.clone() * b.clone() <= *rc);
                if !feasible || !(a > *big || b > *big) {
                    continue;
                }
                let s = Elem::new(a, b).expect("feasible corners lie in the quadrant");
                let img = side.apply(t, &s);
                if *img.a() <= *n && *img.b() <= *n {
                    return Some((s, img));
                }
            }
        }
    }
    None
}

/// Builds a certificate for `t·U[c1..ck] ⊆ U[u1..uk]` with `ci` the
/// witness for `ui` (Left), or the mirrored witness for Right.
pub fn continuity_cert_ac2<T: Coord>(side: Side, translator: &Elem<T>, target: &NbhdAc2<T>) -> ContinuityCert<T> {
    let facts: Vec<Ac2Fact<T>> = target
        .tops()
        .iter()
        .map(|u| Ac2Fact {
            target_top: u.clone(),
            witness: match side {
                Side::Left => shrink_witness(translator, u),
                Side::Right => shrink_witness_dual(translator, u),
            },
            preimage: preimage_up_segment(side, translator, &up_set(u)),
        })
        .collect();
    let chosen = NbhdAc2::new(facts.iter().map(|f| f.witness.clone()).collect())
        .expect("one witness per top");
    ContinuityCert::Ac2(Ac2Cert { side, translator: translator.clone(), target: target.clone(), chosen, facts })
}

/// A point `s` of `chosen` with `t·s` (or `s·t`) outside `target`, found
/// exactly from the preimages of the excluded tops; `None` means the
/// inclusion holds.
pub fn ac2_escape<T: Coord>(
    side: Side,
    t: &Elem<T>,
    chosen: &NbhdAc2<T>,
    target: &NbhdAc2<T>,
) -> Option<(Elem<T>, Elem<T>)> {
    let cover = chosen.excluded();
    target.tops().iter().find_map(|u| {
        let s = preimage_up_segment(side, t, &up_set(u)).first_uncovered(&cover)?;
        let img = side.apply(t, &s);
        Some((s, img))
    })
}

pub fn check_ac2<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<Vec<String>> {
    let ContinuityCert::Ac2(c) = cert else {
        return Err(Error::MalformedCert("expected an ac2 certificate".into()));
    };
    let mut problems = Vec::new();
    let cover = c.chosen.excluded();
    for u in c.target.tops() {
        let pre = preimage_up_segment(c.side, &c.translator, &up_set(u));
        match c.facts.iter().find(|f| f.target_top == *u) {
            None => problems.push(format!("no fact for target top {u}")),
            Some(f) => {
                if f.preimage != pre {
                    problems.push(format!("recorded preimage of ↑{u} is {}, actual {pre}", f.preimage));
                }
                if !c.chosen.tops().contains(&f.witness) {
                    problems.push(format!("witness {} for {u} is not a chosen top", f.witness));
                }
            }
        }
        if let Some(s) = pre.first_uncovered(&cover) {
            let img = c.side.apply(&c.translator, &s);
            problems.push(format!("{s} is in the chosen neighbourhood but maps to {img} ∈ ↑{u}"));
        }
    }
    for f in &c.facts {
        if !c.target.tops().contains(&f.target_top) {
            problems.push(format!("fact for {} which is not a target top", f.target_top));
        }
    }
    Ok(problems)
}

pub fn validate_cert_ac2<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<bool> {
    check_ac2(cert).map(|p| p.is_empty())
}

pub fn check_cert<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<Vec<String>> {
    match cert.topology() {
        Topology::Ac1 => check_ac1(cert),
        Topology::Ac2 => check_ac2(cert),
    }
}

pub fn validate_cert<T: Coord + fmt::Display>(cert: &ContinuityCert<T>) -> Result<bool> {
    check_cert(cert).map(|p| p.is_empty())
}

/// `t·s` or `s·t` on the extended semigroup.
pub fn translate_ext<T: Coord>(side: Side, t: &Elem<T>, s: &ExtElem<T>) -> ExtElem<T> {
    match s {
        ExtElem::Zero => ExtElem::Zero,
        ExtElem::Point(p) => ExtElem::Point(side.apply(t, p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qe, QCert, QElem, Rational};

    fn ac1(n: i64) -> NbhdAc1<Rational> {
        NbhdAc1::new(q(n, 1)).unwrap()
    }

    fn ac2(tops: &[QElem]) -> NbhdAc2<Rational> {
        NbhdAc2::new(tops.to_vec()).unwrap()
    }

    fn tamper_chosen(cert: &QCert, n: i64) -> QCert {
        let ContinuityCert::Ac1(c) = cert else { panic!() };
        ContinuityCert::Ac1(Ac1Cert { chosen: ac1(n), ..c.clone() })
    }

    #[test]
    fn ac1_left_worked_instance() {
        let cert = continuity_cert_ac1(Side::Left, &qe(1, 2), &ac1(4));
        let ContinuityCert::Ac1(c) = &cert else { panic!() };
        assert_eq!(c.chosen, ac1(8));
        assert_eq!(c.target, ac1(4));
        assert_eq!(c.cases.len(), 4);
        assert_eq!(check_ac1(&cert).unwrap(), Vec::<String>::new());
        let s = Elem::new(q(9, 1), q(0, 1)).unwrap();
        let img = qe(1, 2).mul(&s);
        assert_eq!(img, qe(8, 0));
        assert!(c.target.member(&img.into()));
    }

    #[test]
    fn ac1_right_and_identity() {
        for side in [Side::Left, Side::Right] {
            for t in [qe(1, 2), qe(0, 0), qe(3, 0), Elem::new(q(5, 2), q(1, 3)).unwrap()] {
                let cert = continuity_cert_ac1(side, &t, &ac1(9));
                assert!(validate_cert_ac1(&cert).unwrap(), "{side} {t}: {:?}", check_ac1(&cert));
            }
        }
    }

    #[test]
    fn ac1_small_n_is_raised() {
        let cert = continuity_cert_ac1(Side::Left, &qe(3, 5), &ac1(2));
        let ContinuityCert::Ac1(c) = &cert else { panic!() };
        assert_eq!(c.requested, ac1(2));
        assert_eq!(c.target, ac1(7));
        assert_eq!(c.chosen, ac1(14));
        assert!(validate_cert_ac1(&cert).unwrap());
    }

    #[test]
    fn ac1_tampered_is_rejected() {
        let cert = continuity_cert_ac1(Side::Left, &qe(1, 2), &ac1(4));
        let bad = tamper_chosen(&cert, 4);
        let problems = check_ac1(&bad).unwrap();
        assert!(!problems.is_empty());
        // the corner scan produces a concrete escape
        let (s, img) = ac1_escape(Side::Left, &qe(1, 2), &q(4, 1), &q(4, 1)).unwrap();
        assert!(*s.a() > q(4, 1) || *s.b() > q(4, 1));
        assert!(*img.a() <= q(4, 1) && *img.b() <= q(4, 1));
        // and so does the documented one
        let s = Elem::new(q(9, 2), q(0, 1)).unwrap();
        assert_eq!(qe(1, 2).mul(&s), Elem::new(q(7, 2), q(0, 1)).unwrap());
    }

    #[test]
    fn ac1_broken_chain_is_rejected() {
        let cert = continuity_cert_ac1(Side::Left, &qe(1, 2), &ac1(4));
        let ContinuityCert::Ac1(mut c) = cert else { panic!() };
        c.cases[0].chain.start = q(100, 1);
        assert!(!validate_cert_ac1(&ContinuityCert::Ac1(c.clone())).unwrap());
        c.cases.truncate(1);
        let problems = check_ac1(&ContinuityCert::Ac1(c)).unwrap();
        assert!(problems.iter().any(|p| p.contains("cases miss")));
    }

    #[test]
    fn ac1_validator_rejects_ac2() {
        let cert = continuity_cert_ac2(Side::Left, &qe(1, 2), &ac2(&[qe(3, 1)]));
        assert!(matches!(validate_cert_ac1(&cert), Err(Error::MalformedCert(_))));
    }

    #[test]
    fn ac2_worked_instance() {
        let cert = continuity_cert_ac2(Side::Left, &qe(1, 2), &ac2(&[qe(3, 1)]));
        let ContinuityCert::Ac2(c) = &cert else { panic!() };
        assert_eq!(c.chosen, ac2(&[qe(6, 3)]));
        assert!(validate_cert_ac2(&cert).unwrap());
    }

    #[test]
    fn ac2_identity_and_right() {
        let t = ac2(&[qe(1, 1), qe(2, 5)]);
        let cert = continuity_cert_ac2(Side::Left, &QElem::identity(), &t);
        assert!(validate_cert_ac2(&cert).unwrap());
        let ContinuityCert::Ac2(c) = &cert else { panic!() };
        let same = ContinuityCert::Ac2(Ac2Cert { chosen: t.clone(), ..c.clone() });
        assert!(validate_cert_ac2(&same).unwrap());

        let cert = continuity_cert_ac2(Side::Right, &qe(2, 1), &ac2(&[qe(1, 3)]));
        let ContinuityCert::Ac2(c) = &cert else { panic!() };
        assert_eq!(c.chosen, ac2(&[qe(3, 6)]));
        assert!(validate_cert_ac2(&cert).unwrap());
    }

    #[test]
    fn ac2_shrunk_chosen_is_rejected() {
        let cert = continuity_cert_ac2(Side::Left, &qe(1, 2), &ac2(&[qe(3, 1)]));
        let ContinuityCert::Ac2(c) = &cert else { panic!() };
        let bad = ContinuityCert::Ac2(Ac2Cert { chosen: ac2(&[qe(1, 1)]), ..c.clone() });
        assert!(!validate_cert_ac2(&bad).unwrap());
        // (4,1) lies outside ↑(1,1) but (1,2)(4,1) = (3,1) ∈ ↑(3,1)
        assert!(bad_escape(&qe(4, 1)));
    }

    fn bad_escape(s: &QElem) -> bool {
        let chosen = ac2(&[qe(1, 1)]);
        let target = ac2(&[qe(3, 1)]);
        chosen.member(&s.clone().into()) && !target.member(&qe(1, 2).mul(s).into())
    }
}
