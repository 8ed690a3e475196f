//! Symbolic subsets of `B[0,∞)` built from the natural order: down-rays,
//! up-segments, whole lines and isolated points, with the products,
//! translations and preimages needed for the compact topologies.
//!
//! Every part lives on a single diagonal line. Along a line the natural
//! order runs against the coordinates: `↓(a,b) = {(a+t,b+t) : t >= 0}` is an
//! unbounded ray and `↑(a,b)` is the closed segment from `(a,b)` down to the
//! boundary of the quadrant.

use std::cmp::Ordering;
use std::fmt;

use crate::coord::{max_of, min_of, nonneg, two, Coord};
use crate::error::{Error, Result};
use crate::semigroup::{Elem, LineRef, Sign};

/// Which side a fixed element multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `t · s`
    Left,
    /// `s · t`
    Right,
}

impl Side {
    pub fn apply<T: Coord>(self, t: &Elem<T>, s: &Elem<T>) -> Elem<T> {
        match self {
            Side::Left => t.mul(s),
            Side::Right => s.mul(t),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `↓(base)`, or `↓°(base) = ↓(base) ∖ {base}` when punctured.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DownRay<T> {
    base: Elem<T>,
    punctured: bool,
}

impl<T: Coord> DownRay<T> {
    pub fn new(base: Elem<T>, punctured: bool) -> Self {
        DownRay { base, punctured }
    }

    pub fn base(&self) -> &Elem<T> {
        &self.base
    }

    pub fn is_punctured(&self) -> bool {
        self.punctured
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        e.natural_leq(&self.base) && !(self.punctured && *e == self.base)
    }

    pub fn line(&self) -> LineRef<T> {
        self.base.classify_line().0
    }

    /// `base + (t,t)`, the point at distance `t` along the ray.
    pub fn at(&self, t: &T) -> Elem<T> {
        self.base.shifted(t)
    }
}

pub fn down_set<T: Coord>(e: &Elem<T>, punctured: bool) -> DownRay<T> {
    DownRay::new(e.clone(), punctured)
}

/// `↑(top) = {(top.a - t, top.b - t) : 0 <= t <= min(top.a, top.b)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpSegment<T> {
    top: Elem<T>,
}

impl<T: Coord> UpSegment<T> {
    pub fn new(top: Elem<T>) -> Self {
        UpSegment { top }
    }

    pub fn top(&self) -> &Elem<T> {
        &self.top
    }

    /// The endpoint on the boundary of the quadrant.
    pub fn bottom(&self) -> Elem<T> {
        let m = min_of(self.top.a(), self.top.b());
        self.top.shifted(&-m)
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        self.top.natural_leq(e)
    }

    pub fn line(&self) -> LineRef<T> {
        self.top.classify_line().0
    }
}

pub fn up_set<T: Coord>(e: &Elem<T>) -> UpSegment<T> {
    UpSegment::new(e.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Part<T> {
    DownRay(DownRay<T>),
    UpSegment(UpSegment<T>),
    Point(Elem<T>),
    Line(LineRef<T>),
}

impl<T: Coord> Part<T> {
    pub fn member(&self, e: &Elem<T>) -> bool {
        match self {
            Part::DownRay(r) => r.member(e),
            Part::UpSegment(s) => s.member(e),
            Part::Point(p) => p == e,
            Part::Line(l) => l.contains(e),
        }
    }

    pub fn line(&self) -> LineRef<T> {
        match self {
            Part::DownRay(r) => r.line(),
            Part::UpSegment(s) => s.line(),
            Part::Point(p) => p.classify_line().0,
            Part::Line(l) => l.clone(),
        }
    }

    /// Exact set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Part<T>) -> bool {
        match self {
            Part::Point(p) => other.member(p),
            // a segment is the order-up-closure of its top within the
            // quadrant, and every part kind is a convex piece of one line
            Part::UpSegment(s) => match other {
                Part::Point(_) => s.top == s.bottom() && other.member(&s.top),
                Part::UpSegment(o) => o.member(&s.top),
                Part::DownRay(r) => r.member(&s.bottom()),
                Part::Line(l) => l.contains(&s.top),
            },
            Part::DownRay(r) => match other {
                Part::Point(_) | Part::UpSegment(_) => false,
                Part::DownRay(o) => {
                    if r.punctured {
                        r.base.natural_leq(&o.base)
                    } else {
                        o.member(&r.base)
                    }
                }
                Part::Line(l) => l.contains(&r.base),
            },
            Part::Line(l) => match other {
                Part::Point(_) | Part::UpSegment(_) => false,
                Part::DownRay(o) => !o.punctured && o.base == l.start(),
                Part::Line(o) => l == o,
            },
        }
    }

    // the same set has one spelling: a full ray is its line, a segment
    // with one point is that point
    fn canonical(self) -> Self {
        match self {
            Part::DownRay(r) if !r.punctured && r.base == r.line().start() => Part::Line(r.line()),
            Part::UpSegment(s) if s.top == s.bottom() => Part::Point(s.top),
            p => p,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Part::DownRay(_) => 0,
            Part::UpSegment(_) => 1,
            Part::Point(_) => 2,
            Part::Line(_) => 3,
        }
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        fn elem_cmp<T: Coord>(x: &Elem<T>, y: &Elem<T>) -> Ordering {
            x.a()
                .partial_cmp(y.a())
                .unwrap_or(Ordering::Equal)
                .then_with(|| x.b().partial_cmp(y.b()).unwrap_or(Ordering::Equal))
        }
        self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
            (Part::DownRay(x), Part::DownRay(y)) => {
                elem_cmp(&x.base, &y.base).then(x.punctured.cmp(&y.punctured))
            }
            (Part::UpSegment(x), Part::UpSegment(y)) => elem_cmp(&x.top, &y.top),
            (Part::Point(x), Part::Point(y)) => elem_cmp(x, y),
            (Part::Line(x), Part::Line(y)) => x
                .sign()
                .cmp(&y.sign())
                .then_with(|| x.alpha().partial_cmp(y.alpha()).unwrap_or(Ordering::Equal)),
            _ => Ordering::Equal,
        })
    }
}

/// A finite union of parts, kept in normal form: no part is contained in
/// another, and parts are sorted by kind and then by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region<T> {
    parts: Vec<Part<T>>,
}

impl<T: Coord> Region<T> {
    pub fn empty() -> Self {
        Region { parts: Vec::new() }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = Part<T>>) -> Self {
        let mut kept: Vec<Part<T>> = Vec::new();
        for p in parts {
            let p = p.canonical();
            if kept.iter().any(|k| p.is_subset_of(k)) {
                continue;
            }
            kept.retain(|k| !k.is_subset_of(&p));
            kept.push(p);
        }
        kept.sort_by(Part::key_cmp);
        Region { parts: kept }
    }

    pub fn single(part: Part<T>) -> Self {
        Region { parts: vec![part.canonical()] }
    }

    pub fn parts(&self) -> &[Part<T>] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        self.parts.iter().any(|p| p.member(e))
    }

    /// Decides `self ⊆ ⋃ cover` exactly.
    ///
    /// Parts and covering segments are compared line by line: on a line with
    /// offset `δ = a - b` each segment is the closed interval of first
    /// coordinates `[max(0,δ), top.a]`, and the union of those intervals must
    /// contain the interval of the part.
    pub fn covered_by(&self, cover: &[UpSegment<T>]) -> bool {
        self.first_uncovered(cover).is_none()
    }

    /// A point of `self` outside `⋃ cover`, if there is one.
    pub fn first_uncovered(&self, cover: &[UpSegment<T>]) -> Option<Elem<T>> {
        self.parts.iter().find_map(|part| {
            let offset = part.line().offset();
            let mut spans: Vec<(T, T)> = cover
                .iter()
                .filter(|s| s.top.offset() == offset)
                .map(|s| (s.bottom().a().clone(), s.top.a().clone()))
                .collect();
            let at = |x: T| Elem::new(x.clone(), x - offset.clone()).expect("point of a part");
            let (lo, hi) = match part {
                Part::DownRay(_) | Part::Line(_) => {
                    let start = match part {
                        Part::DownRay(r) => r.base.a().clone(),
                        _ => part.line().start().a().clone(),
                    };
                    // unbounded: step past every segment on the line
                    let far = spans.iter().map(|s| s.1.clone()).fold(start, |m, x| max_of(&m, &x));
                    return Some(at(far + T::one()));
                }
                Part::UpSegment(s) => (s.bottom().a().clone(), s.top.a().clone()),
                Part::Point(p) => (p.a().clone(), p.a().clone()),
            };
            first_gap(&lo, &hi, &mut spans).map(at)
        })
    }
}

// The least point of the closed interval [lo, hi] outside the union of the
// closed `spans`, or a point inside the first open gap.
fn first_gap<T: Coord>(lo: &T, hi: &T, spans: &mut [(T, T)]) -> Option<T> {
    spans.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
    let mid = |x: &T, y: &T| (x.clone() + y.clone()) / two();
    // [lo, reach] is covered
    let mut reach: Option<T> = None;
    for (s_lo, s_hi) in spans.iter() {
        if s_hi < lo {
            continue;
        }
        match &reach {
            None if s_lo > lo => return Some(lo.clone()),
            Some(r) if s_lo > r => return Some(mid(r, &min_of(s_lo, hi))),
            _ => {}
        }
        let r = match reach {
            None => s_hi.clone(),
            Some(r) => max_of(&r, s_hi),
        };
        if r >= *hi {
            return None;
        }
        reach = Some(r);
    }
    Some(match reach {
        None => lo.clone(),
        Some(r) => mid(&r, hi),
    })
}

impl<T: Coord + fmt::Display> fmt::Display for Part<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::DownRay(r) if r.punctured => write!(f, "down°{}", r.base),
            Part::DownRay(r) => write!(f, "down{}", r.base),
            Part::UpSegment(s) => write!(f, "up{}", s.top),
            Part::Point(p) => write!(f, "pt{p}"),
            Part::Line(l) => write!(f, "{l}"),
        }
    }
}

impl<T: Coord + fmt::Display> fmt::Display for Region<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("empty");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The product set `L1 · L2` of two lines.
pub fn line_product<T: Coord>(l1: &LineRef<T>, l2: &LineRef<T>) -> Region<T> {
    let sum = || nonneg(l1.alpha().clone() + l2.alpha().clone());
    let part = match (l1.sign(), l2.sign()) {
        (Sign::Plus, Sign::Plus) => Part::Line(LineRef::plus(sum())),
        (Sign::Minus, Sign::Minus) => Part::Line(LineRef::minus(sum())),
        (Sign::Plus, Sign::Minus) => {
            Part::Line(LineRef::from_offset(l2.alpha().clone() - l1.alpha().clone()))
        }
        (Sign::Minus, Sign::Plus) => {
            let base = Elem::new(l1.alpha().clone(), l2.alpha().clone())
                .expect("alphas are non-negative");
            Part::DownRay(DownRay::new(base, false))
        }
    };
    Region::single(part)
}

/// Factors `target = e1 · e2` with `e1` on `l1` and `e2` on `l2`.
pub fn factor_in_line_product<T: Coord + fmt::Display>(
    target: &Elem<T>,
    l1: &LineRef<T>,
    l2: &LineRef<T>,
) -> Result<(Elem<T>, Elem<T>)> {
    let product = line_product(l1, l2);
    if !product.member(target) {
        return Err(Error::NotInProduct {
            target: target.to_string(),
            product: format!("{l1}·{l2}"),
        });
    }
    let (x, y) = (target.a().clone(), target.b().clone());
    let alpha1 = l1.alpha().clone();
    let alpha2 = l2.alpha().clone();
    let pair = |a: T, b: T| Elem::new(a, b).expect("factor coordinates are non-negative");
    Ok(match (l1.sign(), l2.sign()) {
        // (x, x+α)(0, β)
        (Sign::Plus, Sign::Plus) => (pair(x.clone(), x + alpha1), pair(T::zero(), alpha2)),
        // (α, 0)(y+β, y)
        (Sign::Minus, Sign::Minus) => (pair(alpha1, T::zero()), pair(y.clone() + alpha2, y)),
        // (x, x+α)(x+α, y): the middle coordinates meet
        (Sign::Plus, Sign::Minus) => {
            let mid = x.clone() + alpha1;
            (pair(x, mid.clone()), pair(mid, y))
        }
        // (β+t, t)(t, t+α) for target (β+t, α+t)
        (Sign::Minus, Sign::Plus) => {
            let t = x - alpha1;
            (pair(target.a().clone(), t.clone()), pair(t, target.b().clone()))
        }
    })
}

/// An element `w` with `e0 · w ≼ e1` such that `e0 · s ≼ e1` for every
/// `s ≼ w`.
///
/// Takes the least admissible first coordinate `c = e1.a + e0.a + e0.b`; the
/// second is `d = e0.a + c - e0.b - e1.a + e1.b = 2·e0.a + e1.b`.
pub fn shrink_witness<T: Coord>(e0: &Elem<T>, e1: &Elem<T>) -> Elem<T> {
    let c = e1.a().clone() + e0.a().clone() + e0.b().clone();
    let d = e0.a().clone() + c.clone() - e0.b().clone() - e1.a().clone() + e1.b().clone();
    Elem::new(c, d).expect("witness coordinates are non-negative")
}

/// The mirror of [`shrink_witness`]: `w · e0 ≼ e1`, hereditary under `≼`.
pub fn shrink_witness_dual<T: Coord>(e0: &Elem<T>, e1: &Elem<T>) -> Elem<T> {
    shrink_witness(&e0.inv(), &e1.inv()).inv()
}

/// The exact image `t · r` (Left) or `r · t` (Right) of a down-ray.
///
/// Translation maps `↓(c,d)` onto `↓` of the translated base. For a Left
/// translation by `(a,b)` with `b > c` the initial stretch of the ray of
/// length `b - c` collapses onto the image of the base, so a punctured ray
/// still covers that point; otherwise translation is injective on the ray
/// and puncturing is preserved. The Right case collapses when `d < a`.
pub fn translate_down_ray<T: Coord>(side: Side, t: &Elem<T>, r: &DownRay<T>) -> DownRay<T> {
    let base = side.apply(t, &r.base);
    let collapses = match side {
        Side::Left => t.b() > r.base.a(),
        Side::Right => r.base.b() < t.a(),
    };
    DownRay::new(base, r.punctured && !collapses)
}

// A run of first coordinates on a fixed line.
#[derive(Clone, Debug)]
struct Span<T> {
    lo: T,
    lo_open: bool,
    hi: T,
    hi_open: bool,
}

impl<T: Coord> Span<T> {
    fn new(lo: T, lo_open: bool, hi: T, hi_open: bool) -> Option<Self> {
        let nonempty = lo < hi || (lo == hi && !lo_open && !hi_open);
        nonempty.then_some(Span { lo, lo_open, hi, hi_open })
    }

    fn point(x: T) -> Self {
        Span { lo: x.clone(), lo_open: false, hi: x, hi_open: false }
    }

    /// Restricts to `[floor, ∞)`.
    fn clamp_below(self, floor: &T) -> Option<Self> {
        if self.lo < *floor {
            Span::new(floor.clone(), false, self.hi, self.hi_open)
        } else {
            Some(self)
        }
    }

    fn shift(self, by: &T) -> Self {
        Span {
            lo: self.lo + by.clone(),
            lo_open: self.lo_open,
            hi: self.hi + by.clone(),
            hi_open: self.hi_open,
        }
    }
}

fn merge_spans<T: Coord>(mut spans: Vec<Span<T>>) -> Vec<Span<T>> {
    spans.sort_by(|x, y| {
        x.lo.partial_cmp(&y.lo)
            .unwrap_or(Ordering::Equal)
            .then(x.lo_open.cmp(&y.lo_open))
    });
    let mut out: Vec<Span<T>> = Vec::new();
    for s in spans {
        if let Some(last) = out.last_mut() {
            let touches = s.lo < last.hi || (s.lo == last.hi && !(s.lo_open && last.hi_open));
            if touches {
                if s.hi > last.hi || (s.hi == last.hi && !s.hi_open) {
                    last.hi = s.hi;
                    last.hi_open = s.hi_open;
                }
                continue;
            }
        }
        out.push(s);
    }
    out
}

// Turns closed spans of first coordinates on the line `a - b = offset` into
// parts. Solutions of a translated membership problem always run down to the
// quadrant boundary or are a single point.
fn spans_to_region<T: Coord>(offset: &T, spans: Vec<Span<T>>) -> Region<T> {
    let floor = max_of(&T::zero(), offset);
    let at = |x: &T| Elem::new(x.clone(), x.clone() - offset.clone()).expect("point on the line");
    let parts = merge_spans(spans).into_iter().map(|s| {
        assert!(!s.lo_open && !s.hi_open, "preimage spans are closed");
        if s.lo == floor {
            Part::UpSegment(UpSegment::new(at(&s.hi)))
        } else if s.lo == s.hi {
            Part::Point(at(&s.lo))
        } else {
            unreachable!("preimage span does not reach the quadrant boundary")
        }
    });
    Region::from_parts(parts)
}

/// The exact preimage `{s : t·s ∈ u}` (Left) or `{s : s·t ∈ u}` (Right).
///
/// Each row of the product case table is affine on its domain, so each row
/// contributes one interval of solutions on a single line; the rows meet at
/// the tie `b = c`, which is counted once.
pub fn preimage_up_segment<T: Coord>(side: Side, t: &Elem<T>, u: &UpSegment<T>) -> Region<T> {
    let (a, b) = (t.a().clone(), t.b().clone());
    let (p, q) = (u.top.a().clone(), u.top.b().clone());
    match side {
        Side::Left => {
            // t·(x,y) lies on offset (a-b) + (x-y); every row also needs a <= p
            if a > p {
                return Region::empty();
            }
            let offset = (p.clone() - q) - (a.clone() - b.clone());
            let floor = max_of(&T::zero(), &offset);
            let mut spans = Vec::new();
            // x < b: (a, b-x+y)
            spans.extend(Span::new(floor.clone(), false, b.clone(), true));
            // x = b: (a, y)
            if b >= floor {
                spans.push(Span::point(b.clone()));
            }
            // x > b: (a-b+x, y), first coordinate at most p
            spans.extend(
                Span::new(b.clone(), true, p - a + b, false).and_then(|s| s.clamp_below(&floor)),
            );
            spans_to_region(&offset, spans)
        }
        Side::Right => {
            // (x,y)·t lies on offset (x-y) + (a-b); every row also needs b <= q
            if b > q {
                return Region::empty();
            }
            let offset = (p - q.clone()) - (a.clone() - b.clone());
            let floor_y = max_of(&T::zero(), &-offset.clone());
            let mut spans = Vec::new();
            // y < a: (x+a-y, b)
            spans.extend(Span::new(floor_y.clone(), false, a.clone(), true));
            // y = a: (x, b)
            if a >= floor_y {
                spans.push(Span::point(a.clone()));
            }
            // y > a: (x, y-a+b), second coordinate at most q
            spans.extend(
                Span::new(a.clone(), true, q - b + a, false).and_then(|s| s.clamp_below(&floor_y)),
            );
            // re-parametrise by first coordinate x = y + offset
            let spans = spans.into_iter().map(|s| s.shift(&offset)).collect();
            spans_to_region(&offset, spans)
        }
    }
}
