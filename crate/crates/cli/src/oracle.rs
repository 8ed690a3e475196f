//! Reference formulas, written independently of the core product.

use bicyclic_core::{QElem, Rational};

/// `(a,b)(c,d) = (a+c-min{b,c}, b+d-min{b,c})`.
pub fn mul_closed(x: &QElem, y: &QElem) -> (Rational, Rational) {
    let m = x.b().clone().min(y.a().clone());
    (x.a() + y.a() - &m, x.b() + y.b() - m)
}

/// The bicyclic monoid on words `q^k p^l`:
/// `q^k p^l · q^m p^n = q^{k+m-min{l,m}} p^{l+n-min{l,m}}`.
pub fn bicyclic(k: u64, l: u64, m: u64, n: u64) -> (u64, u64) {
    let c = l.min(m);
    (k + m - c, l + n - c)
}

/// `s ≼ t` as `s = (s s⁻¹) t`.
pub fn leq_left_idempotent(s: &QElem, t: &QElem) -> bool {
    s.mul(&s.inv()).mul(t) == *s
}

/// `s ≼ t` as `s = t (s⁻¹ s)`.
pub fn leq_right_idempotent(s: &QElem, t: &QElem) -> bool {
    t.mul(&s.inv().mul(s)) == *s
}

/// `(a,b) ≼ (c,d)` as `a >= c` on a common line.
pub fn leq_first(s: &QElem, t: &QElem) -> bool {
    s.a() >= t.a() && s.a() - s.b() == t.a() - t.b()
}

/// `(a,b) ≼ (c,d)` as `b >= d` on a common line.
pub fn leq_second(s: &QElem, t: &QElem) -> bool {
    s.b() >= t.b() && s.a() - s.b() == t.a() - t.b()
}
