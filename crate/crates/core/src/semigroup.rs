//! The semigroup `B[0,∞)`, its adjoined zero, inversion, idempotents, the
//! natural partial order and the line decomposition.

use std::fmt;

use crate::coord::{nonneg, Coord, NonNeg};
use crate::error::Result;

/// An element `(a,b)` of `B[0,∞)`. Both coordinates are non-negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem<T> {
    a: T,
    b: T,
}

/// Which row of the product case table applies to `(a,b)(c,d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `b < c`: `(a+c-b, d)`
    Lt,
    /// `b = c`: `(a, d)`
    Eq,
    /// `b > c`: `(a, b+d-c)`
    Gt,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::Lt, Branch::Eq, Branch::Gt];
}

impl<T: Coord> Elem<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        let a = NonNeg::new(a)?.into_inner();
        let b = NonNeg::new(b)?.into_inner();
        Ok(Elem { a, b })
    }

    pub fn from_nonneg(a: NonNeg<T>, b: NonNeg<T>) -> Self {
        Elem { a: a.into_inner(), b: b.into_inner() }
    }

    /// The identity `(0,0)`.
    pub fn identity() -> Self {
        Elem { a: T::zero(), b: T::zero() }
    }

    /// The idempotent `(u,u)`.
    pub fn diagonal(u: NonNeg<T>) -> Self {
        let u = u.into_inner();
        Elem { a: u.clone(), b: u }
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn into_parts(self) -> (T, T) {
        (self.a, self.b)
    }

    /// `a - b`, constant along every diagonal line.
    pub fn offset(&self) -> T {
        self.a.clone() - self.b.clone()
    }

    /// `self + (t,t)`. Stays in the quadrant whenever `t >= -min(a,b)`.
    pub(crate) fn shifted(&self, t: &T) -> Self {
        Elem { a: self.a.clone() + t.clone(), b: self.b.clone() + t.clone() }
    }

    pub fn branch(&self, rhs: &Self) -> Branch {
        if self.b < rhs.a {
            Branch::Lt
        } else if self.b == rhs.a {
            Branch::Eq
        } else {
            Branch::Gt
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match self.branch(rhs) {
            Branch::Lt => Elem {
                a: self.a.clone() + rhs.a.clone() - self.b.clone(),
                b: rhs.b.clone(),
            },
            Branch::Eq => Elem { a: self.a.clone(), b: rhs.b.clone() },
            Branch::Gt => Elem {
                a: self.a.clone(),
                b: self.b.clone() + rhs.b.clone() - rhs.a.clone(),
            },
        }
    }

    pub fn inv(&self) -> Self {
        Elem { a: self.b.clone(), b: self.a.clone() }
    }

    pub fn is_idempotent(&self) -> bool {
        self.a == self.b
    }

    /// The natural partial order: `self ≼ other` iff `a >= c` and `a-b = c-d`.
    pub fn natural_leq(&self, other: &Self) -> bool {
        self.a >= other.a && self.offset() == other.offset()
    }

    /// An idempotent `f` with `other·f = self`, when `self ≼ other`.
    ///
    /// Always the canonical choice `f = self⁻¹·self = (b,b)`.
    pub fn leq_witness(&self, other: &Self) -> Option<Self> {
        if self.natural_leq(other) {
            Some(Elem { a: self.b.clone(), b: self.b.clone() })
        } else {
            None
        }
    }

    /// The unique line containing `self`, with `self = line_point(line, x)`.
    pub fn classify_line(&self) -> (LineRef<T>, NonNeg<T>) {
        if self.b >= self.a {
            let alpha = self.b.clone() - self.a.clone();
            (LineRef { sign: Sign::Plus, alpha }, nonneg(self.a.clone()))
        } else {
            let alpha = self.a.clone() - self.b.clone();
            (LineRef { sign: Sign::Minus, alpha }, nonneg(self.b.clone()))
        }
    }
}

impl<T: fmt::Display> fmt::Display for Elem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `B[0,∞)` with an adjoined absorbing zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtElem<T> {
    Zero,
    Point(Elem<T>),
}

impl<T: Coord> ExtElem<T> {
    pub fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (ExtElem::Point(x), ExtElem::Point(y)) => ExtElem::Point(x.mul(y)),
            _ => ExtElem::Zero,
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            ExtElem::Zero => ExtElem::Zero,
            ExtElem::Point(x) => ExtElem::Point(x.inv()),
        }
    }

    /// Natural order on the extended semigroup: zero is the least element.
    pub fn natural_leq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExtElem::Zero, _) => true,
            (ExtElem::Point(_), ExtElem::Zero) => false,
            (ExtElem::Point(x), ExtElem::Point(y)) => x.natural_leq(y),
        }
    }

    pub fn as_point(&self) -> Option<&Elem<T>> {
        match self {
            ExtElem::Zero => None,
            ExtElem::Point(x) => Some(x),
        }
    }
}

impl<T> From<Elem<T>> for ExtElem<T> {
    fn from(e: Elem<T>) -> Self {
        ExtElem::Point(e)
    }
}

impl<T: fmt::Display> fmt::Display for ExtElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtElem::Zero => f.write_str("0"),
            ExtElem::Point(e) => e.fmt(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The diagonal line `L+α = {(x,x+α)}` or `L-α = {(x+α,x)}`.
///
/// `L+0` and `L-0` coincide; the canonical form always uses `Plus` for `α = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineRef<T> {
    sign: Sign,
    alpha: T,
}

impl<T: Coord> LineRef<T> {
    pub fn new(sign: Sign, alpha: NonNeg<T>) -> Self {
        let alpha = alpha.into_inner();
        let sign = if alpha.is_zero() { Sign::Plus } else { sign };
        LineRef { sign, alpha }
    }

    pub fn plus(alpha: NonNeg<T>) -> Self {
        LineRef::new(Sign::Plus, alpha)
    }

    pub fn minus(alpha: NonNeg<T>) -> Self {
        LineRef::new(Sign::Minus, alpha)
    }

    /// The line of all elements with diagonal offset `a - b = offset`.
    pub fn from_offset(offset: T) -> Self {
        if offset.is_negative() {
            LineRef { sign: Sign::Plus, alpha: -offset }
        } else {
            LineRef::new(Sign::Minus, nonneg(offset))
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    /// `a - b` for every point on the line.
    pub fn offset(&self) -> T {
        match self.sign {
            Sign::Plus => -self.alpha.clone(),
            Sign::Minus => self.alpha.clone(),
        }
    }

    /// `(x,x+α)` or `(x+α,x)`.
    pub fn point(&self, x: &NonNeg<T>) -> Elem<T> {
        let x = x.get().clone();
        match self.sign {
            Sign::Plus => Elem { a: x.clone(), b: x + self.alpha.clone() },
            Sign::Minus => Elem { a: x.clone() + self.alpha.clone(), b: x },
        }
    }

    /// The point with parameter `0`, the ≼-greatest element of the line.
    pub fn start(&self) -> Elem<T> {
        self.point(&NonNeg::zero())
    }

    pub fn contains(&self, e: &Elem<T>) -> bool {
        e.offset() == self.offset()
    }

    pub fn inv(&self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        LineRef::new(sign, nonneg(self.alpha.clone()))
    }
}

/// Free-function form of [`LineRef::point`].
pub fn line_point<T: Coord>(line: &LineRef<T>, x: &NonNeg<T>) -> Elem<T> {
    line.point(x)
}

impl<T: fmt::Display> fmt::Display for LineRef<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "L{s}{}", self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::{q, qe, QElem, Rational};
    use proptest::prelude::*;

    fn e(a: Rational, b: Rational) -> QElem {
        Elem::new(a, b).unwrap()
    }

    // Evaluates the closed form (a+c-min{b,c}, b+d-min{b,c}) directly.
    fn closed_form(x: &QElem, y: &QElem) -> QElem {
        let m = if x.b() < y.a() { x.b().clone() } else { y.a().clone() };
        e(x.a() + y.a() - &m, x.b() + y.b() - &m)
    }

    fn nn(v: Rational) -> NonNeg<Rational> {
        NonNeg::new(v).unwrap()
    }

    fn arb_q() -> impl Strategy<Value = Rational> {
        (0i64..40, 1i64..7).prop_map(|(n, d)| q(n, d))
    }

    fn arb_elem() -> impl Strategy<Value = QElem> {
        (arb_q(), arb_q()).prop_map(|(a, b)| e(a, b))
    }

    #[test]
    fn product_examples() {
        let cases = [
            (qe(1, 3), qe(2, 5), Branch::Gt),
            (e(q(1, 2), q(3, 2)), e(q(2, 1), q(1, 3)), Branch::Lt),
            (qe(2, 1), qe(1, 4), Branch::Eq),
        ];
        for (x, y, branch) in cases {
            assert_eq!(x.branch(&y), branch);
            assert_eq!(x.mul(&y), closed_form(&x, &y));
        }
        assert_eq!(qe(1, 3).mul(&qe(2, 5)), qe(1, 6));
        assert_eq!(e(q(1, 2), q(3, 2)).mul(&e(q(2, 1), q(1, 3))), e(q(1, 1), q(1, 3)));
        assert_eq!(qe(2, 1).mul(&qe(1, 4)), qe(2, 4));
    }

    #[test]
    fn identity_both_sides() {
        let x = qe(4, 9);
        assert_eq!(QElem::identity().mul(&x), x);
        assert_eq!(x.mul(&QElem::identity()), x);
    }

    #[test]
    fn zero_absorbs() {
        let p: ExtElem<Rational> = qe(1, 3).into();
        assert_eq!(ExtElem::Zero.mul(&p), ExtElem::Zero);
        assert_eq!(p.mul(&ExtElem::Zero), ExtElem::Zero);
        assert_eq!(p.mul(&qe(2, 5).into()), ExtElem::Point(qe(1, 6)));
        assert!(ExtElem::Zero.natural_leq(&p));
        assert!(!p.natural_leq(&ExtElem::Zero));
    }

    #[test]
    fn inverse_examples() {
        let x = qe(1, 6);
        assert_eq!(x.inv(), qe(6, 1));
        assert_eq!(x.mul(&x.inv()).mul(&x), x);
        assert_eq!(x.inv().mul(&x).mul(&x.inv()), x.inv());
        assert_eq!(qe(3, 3).inv(), qe(3, 3));
        assert_eq!(qe(2, 5).inv().inv(), qe(2, 5));
    }

    #[test]
    fn idempotents() {
        assert!(qe(3, 3).is_idempotent());
        assert!(!qe(1, 3).is_idempotent());
        assert_eq!(qe(1, 3).mul(&qe(1, 3)), qe(1, 5));
        assert!(QElem::identity().is_idempotent());
    }

    #[test]
    fn order_examples() {
        assert!(qe(3, 5).natural_leq(&qe(1, 3)));
        assert_eq!(qe(3, 5).mul(&qe(3, 5).inv()).mul(&qe(1, 3)), qe(3, 5));
        assert!(!qe(1, 3).natural_leq(&qe(2, 5)));
        assert!(qe(4, 4).natural_leq(&qe(4, 4)));
    }

    #[test]
    fn witness_examples() {
        let w = qe(3, 5).leq_witness(&qe(1, 3)).unwrap();
        assert_eq!(w, qe(5, 5));
        assert_eq!(qe(1, 3).mul(&w), qe(3, 5));
        assert_eq!(qe(1, 3).leq_witness(&qe(2, 5)), None);
        assert_eq!(qe(2, 7).leq_witness(&qe(2, 7)), Some(qe(7, 7)));
    }

    #[test]
    fn line_examples() {
        let (l, x) = qe(2, 5).classify_line();
        assert_eq!((l.sign(), l.alpha().clone(), x.get().clone()), (Sign::Plus, q(3, 1), q(2, 1)));
        let (l, x) = qe(5, 2).classify_line();
        assert_eq!((l.sign(), l.alpha().clone(), x.get().clone()), (Sign::Minus, q(3, 1), q(2, 1)));
        let (l, x) = qe(4, 4).classify_line();
        assert_eq!((l.sign(), l.alpha().clone(), x.get().clone()), (Sign::Plus, q(0, 1), q(4, 1)));

        assert_eq!(line_point(&LineRef::plus(nn(q(3, 1))), &nn(q(2, 1))), qe(2, 5));
        assert_eq!(line_point(&LineRef::minus(nn(q(3, 1))), &nn(q(0, 1))), qe(3, 0));
        assert_eq!(line_point(&LineRef::plus(nn(q(0, 1))), &nn(q(4, 1))), qe(4, 4));
    }

    #[test]
    fn zero_alpha_line_is_canonical() {
        assert_eq!(LineRef::minus(nn(q(0, 1))), LineRef::plus(nn(q(0, 1))));
        assert_eq!(LineRef::<Rational>::from_offset(q(0, 1)).sign(), Sign::Plus);
    }

    #[test]
    fn negative_coordinates_rejected() {
        assert!(matches!(Elem::new(q(-1, 2), q(0, 1)), Err(Error::NegativeScalar(_))));
    }

    #[test]
    fn integer_and_float_carriers() {
        let x = Elem::new(1i64, 3).unwrap();
        assert_eq!(x.mul(&Elem::new(2, 5).unwrap()), Elem::new(1, 6).unwrap());
        let y = Elem::new(0.5f64, 1.5).unwrap();
        assert_eq!(y.mul(&Elem::new(2.0, 0.25).unwrap()), Elem::new(1.0, 0.25).unwrap());
    }

    proptest! {
        #[test]
        fn associative(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn matches_closed_form(x in arb_elem(), y in arb_elem()) {
            prop_assert_eq!(x.mul(&y), closed_form(&x, &y));
        }

        #[test]
        fn idempotents_commute(u in arb_q(), v in arb_q()) {
            let f = e(u.clone(), u.clone());
            let g = e(v.clone(), v.clone());
            let m = if u > v { u } else { v };
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g), e(m.clone(), m));
        }

        #[test]
        fn order_is_compatible(s in arb_elem(), t in arb_q(), u in arb_elem()) {
            // s + (t,t) ≼ s
            let smaller = s.shifted(&t);
            prop_assert!(smaller.natural_leq(&s));
            prop_assert!(u.mul(&smaller).natural_leq(&u.mul(&s)));
            prop_assert!(smaller.mul(&u).natural_leq(&s.mul(&u)));
        }

        #[test]
        fn line_round_trip(x in arb_elem()) {
            let (l, t) = x.classify_line();
            prop_assert_eq!(l.point(&t), x.clone());
            let (li, ti) = x.inv().classify_line();
            prop_assert_eq!(li, l.inv());
            prop_assert_eq!(ti, t);
        }
    }
}
