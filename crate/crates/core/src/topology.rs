//! Basic neighbourhoods for the topologies on `B[0,∞)` and on its extension
//! by an adjoined zero.
//!
//! * [`NbhdUsual`] models open boxes, a base for the topology induced from
//!   the plane.
//! * [`NbhdOrder`] models open intervals along one diagonal line, a base for
//!   the topology generated by the natural order. Every line is clopen.
//! * [`NbhdDiscrete`] models singletons.
//! * [`NbhdAc1`] models `{0} ∪ {(x,y) : x > n or y > n}`, zero's base in the
//!   one-point compactification of the plane topology.
//! * [`NbhdAc2`] models `{0} ∪ B ∖ (↑t1 ∪ … ∪ ↑tk)`, zero's base in the
//!   one-point compactification of the order topology.

use crate::coord::{Coord, NonNeg};
use crate::error::{Error, Result};
use crate::geometry::{up_set, UpSegment};
use crate::semigroup::{Elem, ExtElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdUsual<T> {
    center: Elem<T>,
    radius: T,
}

impl<T: Coord> NbhdUsual<T> {
    pub fn new(center: Elem<T>, radius: T) -> Result<Self> {
        let radius = NonNeg::positive(radius, "radius")?.into_inner();
        Ok(NbhdUsual { center, radius })
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        (e.a().clone() - self.center.a().clone()).abs() < self.radius
            && (e.b().clone() - self.center.b().clone()).abs() < self.radius
    }
}

/// `U_ε(c) = {c + (y,y) ∈ line(c) : |y| < ε}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdOrder<T> {
    center: Elem<T>,
    epsilon: T,
}

impl<T: Coord> NbhdOrder<T> {
    pub fn new(center: Elem<T>, epsilon: T) -> Result<Self> {
        let epsilon = NonNeg::positive(epsilon, "epsilon")?.into_inner();
        Ok(NbhdOrder { center, epsilon })
    }

    pub fn center(&self) -> &Elem<T> {
        &self.center
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        let (line, x) = e.classify_line();
        let (center_line, cx) = self.center.classify_line();
        line == center_line && (x.into_inner() - cx.into_inner()).abs() < self.epsilon
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdDiscrete<T> {
    point: Elem<T>,
}

impl<T: Coord> NbhdDiscrete<T> {
    pub fn new(point: Elem<T>) -> Self {
        NbhdDiscrete { point }
    }

    pub fn member(&self, e: &Elem<T>) -> bool {
        *e == self.point
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdAc1<T> {
    n: T,
}

impl<T: Coord> NbhdAc1<T> {
    pub fn new(n: T) -> Result<Self> {
        Ok(NbhdAc1 { n: NonNeg::positive(n, "n")?.into_inner() })
    }

    pub fn n(&self) -> &T {
        &self.n
    }

    pub fn member(&self, e: &ExtElem<T>) -> bool {
        match e {
            ExtElem::Zero => true,
            ExtElem::Point(p) => *p.a() > self.n || *p.b() > self.n,
        }
    }

    /// The neighbourhood is symmetric under inversion.
    pub fn invert(&self) -> Self {
        self.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NbhdAc2<T> {
    tops: Vec<Elem<T>>,
}

impl<T: Coord> NbhdAc2<T> {
    pub fn new(tops: Vec<Elem<T>>) -> Result<Self> {
        if tops.is_empty() {
            return Err(Error::EmptyTops);
        }
        let mut uniq: Vec<Elem<T>> = Vec::with_capacity(tops.len());
        for t in tops {
            if !uniq.contains(&t) {
                uniq.push(t);
            }
        }
        Ok(NbhdAc2 { tops: uniq })
    }

    pub fn tops(&self) -> &[Elem<T>] {
        &self.tops
    }

    pub fn excluded(&self) -> Vec<UpSegment<T>> {
        self.tops.iter().map(up_set).collect()
    }

    pub fn member(&self, e: &ExtElem<T>) -> bool {
        match e {
            ExtElem::Zero => true,
            ExtElem::Point(p) => self.tops.iter().all(|t| !t.natural_leq(p)),
        }
    }

    /// Inversion swaps the coordinates of every top.
    pub fn invert(&self) -> Self {
        NbhdAc2 { tops: self.tops.iter().map(Elem::inv).collect() }
    }

    /// The intersection is again basic: its excluded set is the union.
    pub fn intersect(&self, other: &Self) -> Self {
        let tops = self.tops.iter().chain(&other.tops).cloned().collect();
        NbhdAc2::new(tops).expect("union of non-empty lists is non-empty")
    }
}

/// A basic neighbourhood in any of the modelled topologies.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Nbhd<T> {
    Usual(NbhdUsual<T>),
    Order(NbhdOrder<T>),
    Discrete(NbhdDiscrete<T>),
    Ac1(NbhdAc1<T>),
    Ac2(NbhdAc2<T>),
}

impl<T: Coord> Nbhd<T> {
    /// Membership; the first three kinds are neighbourhoods of points of
    /// `B[0,∞)` and never contain zero.
    pub fn member(&self, e: &ExtElem<T>) -> bool {
        match (self, e) {
            (Nbhd::Ac1(n), _) => n.member(e),
            (Nbhd::Ac2(n), _) => n.member(e),
            (_, ExtElem::Zero) => false,
            (Nbhd::Usual(n), ExtElem::Point(p)) => n.member(p),
            (Nbhd::Order(n), ExtElem::Point(p)) => n.member(p),
            (Nbhd::Discrete(n), ExtElem::Point(p)) => n.member(p),
        }
    }
}
