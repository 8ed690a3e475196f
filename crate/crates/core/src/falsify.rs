//! Randomised search for counterexamples to `t·V ⊆ W`.
//!
//! The search is a spot check, independent of the certificate evidence: it
//! draws points of `V`, translates them with the semigroup product and tests
//! membership in `W`. Draws concentrate where violations live: just past the
//! boundary of a plane neighbourhood, and along the lines that the
//! translation carries onto the excluded up-sets of an order neighbourhood,
//! and at the breakpoints of the piecewise-affine translation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cert::ContinuityCert;
use crate::geometry::Side;
use crate::semigroup::Elem;
use crate::topology::Nbhd;
use crate::{QElem, Rational};

const MAX_DEN: i64 = 12;

fn rational_in(rng: &mut ChaCha8Rng, lo: &Rational, width: &Rational) -> Rational {
    let den = rng.gen_range(1..=MAX_DEN);
    let steps = rng.gen_range(0..=64i64);
    let frac = Rational::new(BigInt::from(steps), BigInt::from(64));
    let v = lo + width * frac;
    // snap to a small denominator so exact ties with the boundary get hit
    let snapped = (v.clone() * Rational::from_integer(den.into())).round() / Rational::from_integer(den.into());
    if snapped < *lo {
        v
    } else {
        snapped
    }
}

/// The scale of a translator: every coordinate that matters is below it.
fn reach(t: &QElem) -> Rational {
    t.a().clone().max(t.b().clone()) + Rational::one()
}

fn point(a: Rational, b: Rational) -> Option<QElem> {
    Elem::new(a, b).ok()
}

/// Sorted values cut out by `cuts` together with the midpoint of every gap
/// and one value past the end. The translation is affine between cuts, so
/// these hit every interval bounded by them.
fn refine(mut cuts: Vec<Rational>, floor: &Rational) -> Vec<Rational> {
    cuts.retain(|v| v >= floor);
    cuts.push(floor.clone());
    cuts.sort();
    cuts.dedup();
    let half = Rational::new(1.into(), 2.into());
    let mut out = Vec::with_capacity(2 * cuts.len() + 1);
    for w in cuts.windows(2) {
        out.push(w[0].clone());
        out.push((&w[0] + &w[1]) * &half);
    }
    let last = cuts.last().expect("floor is present").clone();
    out.push(last.clone());
    out.push(last + Rational::one());
    out
}

fn shifted_cuts(values: &[Rational], shifts: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::new();
    for v in values {
        for d in shifts {
            out.push(v + d);
            out.push(v - d);
        }
    }
    out
}

// Candidate coordinates derived from the data of the problem.
enum Pool {
    Plane(Vec<Rational>),
    /// Per target top: the offset of the preimage line and the first
    /// coordinates worth trying on it.
    Lines(Vec<(Rational, Vec<Rational>)>),
    Nothing,
}

fn pool(t: &QElem, chosen: &Nbhd<Rational>, target: &Nbhd<Rational>) -> Pool {
    let zero = Rational::zero();
    let d = t.a() - t.b();
    match (chosen, target) {
        (Nbhd::Ac1(c), Nbhd::Ac1(w)) => {
            let values = [zero.clone(), c.n().clone(), w.n().clone(), t.a().clone(), t.b().clone()];
            Pool::Plane(refine(shifted_cuts(&values, &[zero.clone(), d]), &zero))
        }
        (Nbhd::Ac2(c), Nbhd::Ac2(w)) => {
            let mut values = vec![zero.clone(), t.a().clone(), t.b().clone()];
            for e in c.tops().iter().chain(w.tops()) {
                values.push(e.a().clone());
                values.push(e.b().clone());
            }
            Pool::Lines(
                w.tops()
                    .iter()
                    .map(|u| {
                        let delta = u.offset() - t.offset();
                        let shifts = [zero.clone(), delta.clone(), d.clone(), &delta + &d, &delta - &d];
                        let floor = delta.clone().max(zero.clone());
                        (delta, refine(shifted_cuts(&values, &shifts), &floor))
                    })
                    .collect(),
            )
        }
        _ => Pool::Nothing,
    }
}

impl Pool {
    /// Number of systematic candidates: every combination of pool values.
    fn len(&self) -> usize {
        match self {
            Pool::Plane(cuts) => cuts.len() * cuts.len(),
            Pool::Lines(lines) => lines.iter().map(|(_, xs)| xs.len()).sum(),
            Pool::Nothing => 0,
        }
    }

    fn get(&self, mut i: usize) -> Option<QElem> {
        match self {
            Pool::Plane(cuts) => point(cuts[i / cuts.len()].clone(), cuts[i % cuts.len()].clone()),
            Pool::Lines(lines) => {
                for (delta, xs) in lines {
                    if i < xs.len() {
                        return point(xs[i].clone(), &xs[i] - delta);
                    }
                    i -= xs.len();
                }
                None
            }
            Pool::Nothing => None,
        }
    }
}

fn candidate(
    rng: &mut ChaCha8Rng,
    t: &QElem,
    chosen: &Nbhd<Rational>,
    target: &Nbhd<Rational>,
    pool: &Pool,
) -> Option<QElem> {
    let zero = Rational::zero();
    let r = reach(t);
    let pick = |rng: &mut ChaCha8Rng, v: &[Rational]| v[rng.gen_range(0..v.len())].clone();
    match (chosen, target, pool) {
        (_, _, Pool::Plane(cuts)) if rng.gen_bool(0.5) => point(pick(rng, cuts), pick(rng, cuts)),
        (Nbhd::Ac1(c), Nbhd::Ac1(w), _) => {
            let m = c.n().clone();
            let span = m.clone().max(w.n().clone()) + r.clone() + Rational::one();
            if rng.gen_bool(0.7) {
                // a band just past `a = m` or `b = m`, at a random scale
                let width = r / Rational::from_integer(BigInt::from(1u64 << rng.gen_range(0..24)));
                let near = rational_in(rng, &m, &width);
                let near = if near == m { m.clone() + width / Rational::from_integer(128.into()) } else { near };
                let other = rational_in(rng, &zero, &span);
                if rng.gen_bool(0.5) {
                    point(near, other)
                } else {
                    point(other, near)
                }
            } else {
                let big = span.clone() * Rational::from_integer(2.into());
                point(rational_in(rng, &zero, &big), rational_in(rng, &zero, &big))
            }
        }
        (_, _, Pool::Lines(lines)) if rng.gen_bool(0.8) => {
            let (delta, xs) = &lines[rng.gen_range(0..lines.len())];
            let x = if rng.gen_bool(0.5) {
                pick(rng, xs)
            } else {
                let start = delta.clone().max(zero.clone());
                let len = xs.last().expect("non-empty").clone() - &start;
                rational_in(rng, &start, &len)
            };
            point(x.clone(), x - delta)
        }
        _ => {
            let mut span = r * Rational::from_integer(4.into());
            for n in [chosen, target] {
                if let Nbhd::Ac2(n) = n {
                    for u in n.tops() {
                        span = span.max(u.a().clone() + u.b().clone() + Rational::one());
                    }
                }
            }
            point(rational_in(rng, &zero, &span), rational_in(rng, &zero, &span))
        }
    }
}

/// Looks for `s ∈ chosen` with `t·s ∉ target` (or `s·t` for Right). A hit
/// is a genuine counterexample; `None` only means none was found.
pub fn falsify(
    side: Side,
    translator: &QElem,
    chosen: &Nbhd<Rational>,
    target: &Nbhd<Rational>,
    samples: usize,
    seed: u64,
) -> Option<QElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pool(translator, chosen, target);
    // systematic candidates first, in random order
    let mut first = sample(&mut rng, pool.len(), pool.len().min(samples)).into_iter();
    for _ in 0..samples {
        let next = match first.next() {
            Some(i) => pool.get(i),
            None => candidate(&mut rng, translator, chosen, target, &pool),
        };
        let Some(s) = next else { continue };
        if s.a().is_negative() || s.b().is_negative() {
            continue;
        }
        let inside = chosen.member(&s.clone().into());
        if inside && !target.member(&side.apply(translator, &s).into()) {
            return Some(s);
        }
    }
    None
}

/// [`falsify`] against the inclusion a certificate claims.
pub fn falsify_cert(cert: &ContinuityCert<Rational>, samples: usize, seed: u64) -> Option<QElem> {
    let (chosen, target) = match cert {
        ContinuityCert::Ac1(c) => (Nbhd::Ac1(c.chosen.clone()), Nbhd::Ac1(c.target.clone())),
        ContinuityCert::Ac2(c) => (Nbhd::Ac2(c.chosen.clone()), Nbhd::Ac2(c.target.clone())),
    };
    falsify(cert.side(), cert.translator(), &chosen, &target, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{NbhdAc1, NbhdAc2};
    use crate::{q, qe};

    fn ac1(n: i64) -> Nbhd<Rational> {
        Nbhd::Ac1(NbhdAc1::new(q(n, 1)).unwrap())
    }

    fn ac2(tops: &[QElem]) -> Nbhd<Rational> {
        Nbhd::Ac2(NbhdAc2::new(tops.to_vec()).unwrap())
    }

    fn check_hit(side: Side, t: &QElem, chosen: &Nbhd<Rational>, target: &Nbhd<Rational>, s: &QElem) {
        assert!(chosen.member(&s.clone().into()));
        assert!(!target.member(&side.apply(t, s).into()));
    }

    #[test]
    fn finds_ac1_escape_with_radius_n() {
        let t = qe(1, 2);
        let s = falsify(Side::Left, &t, &ac1(4), &ac1(4), 10_000, 1).expect("counterexample");
        check_hit(Side::Left, &t, &ac1(4), &ac1(4), &s);
        let s = falsify(Side::Right, &qe(2, 1), &ac1(4), &ac1(4), 10_000, 1).expect("counterexample");
        check_hit(Side::Right, &qe(2, 1), &ac1(4), &ac1(4), &s);
    }

    #[test]
    fn no_ac1_escape_with_radius_2n() {
        for seed in 0..3 {
            assert_eq!(falsify(Side::Left, &qe(1, 2), &ac1(8), &ac1(4), 10_000, seed), None);
        }
    }

    #[test]
    fn finds_ac2_escape() {
        let t = qe(1, 2);
        let target = ac2(&[qe(3, 1)]);
        let s = falsify(Side::Left, &t, &target, &target, 10_000, 5).expect("counterexample");
        check_hit(Side::Left, &t, &target, &target, &s);
        assert_eq!(falsify(Side::Left, &t, &ac2(&[qe(6, 3)]), &target, 10_000, 5), None);
    }

    #[test]
    fn deterministic_under_seed() {
        let a = falsify(Side::Left, &qe(1, 2), &ac1(4), &ac1(4), 10_000, 9);
        let b = falsify(Side::Left, &qe(1, 2), &ac1(4), &ac1(4), 10_000, 9);
        assert_eq!(a, b);
    }
}
