//! Plain-text form of continuity certificates.
//!
//! ```text
//! bicyclic-cert v1
//! topology: ac2
//! side: left
//! translator: (1/1,2/1)
//! target: (3/1,1/1)
//! chosen: (6/1,3/1)
//! fact: top=(3/1,1/1) witness=(6/1,3/1) preimage=up(4/1,1/1)
//! ```
//!
//! An `ac1` certificate carries `requested`, `target` and `chosen` radii and
//! one line per case:
//!
//! ```text
//! case: 3b hold second a=[0/1,2/1) b=(8/1,inf) chain=open:8/1,ge:4/1
//! ```
//!
//! Rationals are always written `num/den` in lowest terms, so emitting a
//! parsed certificate reproduces the input byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cert::{
    Ac1Case, Ac1Cert, Ac2Cert, Ac2Fact, Bound, CaseId, Chain, ContinuityCert, Coordinate, Interval,
    Piece, Rel,
};
use crate::coord::NonNeg;
use crate::error::{Error, Result};
use crate::geometry::{DownRay, Part, Region, Side, UpSegment};
use crate::semigroup::{Elem, LineRef};
use crate::topology::{NbhdAc1, NbhdAc2};
use crate::{QCert, QElem, QRegion, Rational};

pub const HEADER: &str = "bicyclic-cert v1";

pub fn fmt_rational(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn fmt_elem(e: &QElem) -> String {
    format!("({},{})", fmt_rational(e.a()), fmt_rational(e.b()))
}

fn fmt_tops(tops: &[QElem]) -> String {
    tops.iter().map(fmt_elem).collect::<Vec<_>>().join(";")
}

fn fmt_line(l: &LineRef<Rational>) -> String {
    let sign = match l.sign() {
        crate::Sign::Plus => '+',
        crate::Sign::Minus => '-',
    };
    format!("L{sign}{}", fmt_rational(l.alpha()))
}

pub fn fmt_region(r: &QRegion) -> String {
    if r.is_empty() {
        return "empty".into();
    }
    r.parts()
        .iter()
        .map(|p| match p {
            Part::DownRay(d) if d.is_punctured() => format!("pdown{}", fmt_elem(d.base())),
            Part::DownRay(d) => format!("down{}", fmt_elem(d.base())),
            Part::UpSegment(u) => format!("up{}", fmt_elem(u.top())),
            Part::Point(e) => format!("pt{}", fmt_elem(e)),
            Part::Line(l) => fmt_line(l),
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn fmt_interval(iv: &Interval<Rational>) -> String {
    let lo = if iv.lo.open { '(' } else { '[' };
    match &iv.hi {
        None => format!("{lo}{},inf)", fmt_rational(&iv.lo.value)),
        Some(h) => {
            let hi = if h.open { ')' } else { ']' };
            format!("{lo}{},{}{hi}", fmt_rational(&iv.lo.value), fmt_rational(&h.value))
        }
    }
}

fn fmt_chain(c: &Chain<Rational>) -> String {
    let mut s = format!("{}:{}", if c.start_open { "open" } else { "closed" }, fmt_rational(&c.start));
    for (rel, v) in &c.links {
        let r = match rel {
            Rel::Ge => "ge",
            Rel::Gt => "gt",
        };
        write!(s, ",{r}:{}", fmt_rational(v)).expect("writing to a string");
    }
    s
}

pub fn emit(cert: &QCert) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(": ");
        out.push_str(&v);
        out.push('\n');
    };
    match cert {
        ContinuityCert::Ac1(c) => {
            line("topology", "ac1".into());
            line("side", c.side.to_string());
            line("translator", fmt_elem(&c.translator));
            line("requested", fmt_rational(c.requested.n()));
            line("target", fmt_rational(c.target.n()));
            line("chosen", fmt_rational(c.chosen.n()));
            for case in &c.cases {
                let piece = match case.piece {
                    Piece::Shift => "shift",
                    Piece::Hold => "hold",
                };
                let escape = match case.escape {
                    Coordinate::First => "first",
                    Coordinate::Second => "second",
                };
                line(
                    "case",
                    format!(
                        "{} {piece} {escape} a={} b={} chain={}",
                        case.id.as_str(),
                        fmt_interval(&case.a),
                        fmt_interval(&case.b),
                        fmt_chain(&case.chain)
                    ),
                );
            }
        }
        ContinuityCert::Ac2(c) => {
            line("topology", "ac2".into());
            line("side", c.side.to_string());
            line("translator", fmt_elem(&c.translator));
            line("target", fmt_tops(c.target.tops()));
            line("chosen", fmt_tops(c.chosen.tops()));
            for f in &c.facts {
                line(
                    "fact",
                    format!(
                        "top={} witness={} preimage={}",
                        fmt_elem(&f.target_top),
                        fmt_elem(&f.witness),
                        fmt_region(&f.preimage)
                    ),
                );
            }
        }
    }
    format!("{HEADER}\n{out}")
}

/// Parses `num/den` or a bare integer, with an optional leading `-`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let int = |t: &str| BigInt::from_str(t).map_err(|_| format!("bad integer {t:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(int(n)?, d))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}

pub fn parse_elem(s: &str) -> std::result::Result<QElem, String> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("expected (a,b), got {s:?}"))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| format!("expected (a,b), got {s:?}"))?;
    Elem::new(parse_rational(a)?, parse_rational(b)?).map_err(|e| e.to_string())
}

pub fn parse_region(s: &str) -> std::result::Result<QRegion, String> {
    if s == "empty" {
        return Ok(Region::empty());
    }
    let mut parts = Vec::new();
    for tok in s.split('|') {
        let part = if let Some(r) = tok.strip_prefix("pdown") {
            Part::DownRay(DownRay::new(parse_elem(r)?, true))
        } else if let Some(r) = tok.strip_prefix("down") {
            Part::DownRay(DownRay::new(parse_elem(r)?, false))
        } else if let Some(r) = tok.strip_prefix("up") {
            Part::UpSegment(UpSegment::new(parse_elem(r)?))
        } else if let Some(r) = tok.strip_prefix("pt") {
            Part::Point(parse_elem(r)?)
        } else if let Some(r) = tok.strip_prefix("L+") {
            Part::Line(LineRef::plus(nonneg(r)?))
        } else if let Some(r) = tok.strip_prefix("L-") {
            Part::Line(LineRef::minus(nonneg(r)?))
        } else {
            return Err(format!("unknown region part {tok:?}"));
        };
        parts.push(part);
    }
    Ok(Region::from_parts(parts))
}

fn nonneg(s: &str) -> std::result::Result<NonNeg<Rational>, String> {
    NonNeg::new(parse_rational(s)?).map_err(|e| e.to_string())
}

fn parse_interval(s: &str) -> std::result::Result<Interval<Rational>, String> {
    let bad = || format!("bad interval {s:?}");
    let lo_open = match s.chars().next() {
        Some('(') => true,
        Some('[') => false,
        _ => return Err(bad()),
    };
    let hi_open = match s.chars().last() {
        Some(')') => true,
        Some(']') => false,
        _ => return Err(bad()),
    };
    let (lo, hi) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
    let lo = Bound { value: parse_rational(lo)?, open: lo_open };
    let hi = match hi {
        "inf" if hi_open => None,
        "inf" => return Err(bad()),
        v => Some(Bound { value: parse_rational(v)?, open: hi_open }),
    };
    Ok(Interval::new(lo, hi))
}

fn parse_chain(s: &str) -> std::result::Result<Chain<Rational>, String> {
    let mut items = s.split(',');
    let first = items.next().ok_or("empty chain")?;
    let (kind, v) = first.split_once(':').ok_or_else(|| format!("bad chain start {first:?}"))?;
    let start_open = match kind {
        "open" => true,
        "closed" => false,
        _ => return Err(format!("bad chain start {first:?}")),
    };
    let mut links = Vec::new();
    for item in items {
        let (rel, v) = item.split_once(':').ok_or_else(|| format!("bad chain link {item:?}"))?;
        let rel = match rel {
            "ge" => Rel::Ge,
            "gt" => Rel::Gt,
            _ => return Err(format!("bad relation {rel:?}")),
        };
        links.push((rel, parse_rational(v)?));
    }
    Ok(Chain { start: parse_rational(v)?, start_open, links })
}

fn field<'a>(rest: &'a str, key: &str) -> std::result::Result<&'a str, String> {
    rest.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| format!("expected {key}=..."))
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn err(line: usize, msg: impl Into<String>) -> Error {
        Error::Format { line, msg: msg.into() }
    }

    fn value(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (i, l) = self.inner.next().ok_or_else(|| Self::err(0, format!("missing {key}")))?;
        let v = l
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(": "))
            .ok_or_else(|| Self::err(i + 1, format!("expected `{key}: ...`")))?;
        Ok((i + 1, v))
    }

    fn repeated(&mut self, key: &str) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        while let Some((_, l)) = self.inner.peek() {
            if !l.starts_with(&format!("{key}: ")) {
                break;
            }
            let (i, l) = self.inner.next().expect("peeked");
            out.push((i + 1, &l[key.len() + 2..]));
        }
        out
    }
}

fn at<T>(line: usize, r: std::result::Result<T, String>) -> Result<T> {
    r.map_err(|msg| Error::Format { line, msg })
}

fn parse_tops(line: usize, s: &str) -> Result<NbhdAc2<Rational>> {
    if s.is_empty() {
        return Err(Error::MalformedCert("neighbourhood with no excluded tops".into()));
    }
    let tops = s.split(';').map(parse_elem).collect::<std::result::Result<Vec<_>, _>>();
    NbhdAc2::new(at(line, tops)?)
}

fn parse_radius(line: usize, s: &str) -> Result<NbhdAc1<Rational>> {
    NbhdAc1::new(at(line, parse_rational(s))?)
}

pub fn parse(text: &str) -> Result<QCert> {
    let mut lines = Lines { inner: text.lines().enumerate().peekable() };
    match lines.inner.next() {
        Some((_, HEADER)) => {}
        _ => return Err(Lines::err(1, format!("expected `{HEADER}`"))),
    }
    let (_, topology) = lines.value("topology")?;
    let (i, side) = lines.value("side")?;
    let side = match side {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(Lines::err(i, format!("unknown side {other:?}"))),
    };
    let (i, t) = lines.value("translator")?;
    let translator = at(i, parse_elem(t))?;
    let cert = match topology {
        "ac1" => {
            let (i, v) = lines.value("requested")?;
            let requested = parse_radius(i, v)?;
            let (i, v) = lines.value("target")?;
            let target = parse_radius(i, v)?;
            let (i, v) = lines.value("chosen")?;
            let chosen = parse_radius(i, v)?;
            let mut cases = Vec::new();
            for (i, v) in lines.repeated("case") {
                cases.push(parse_case(i, v)?);
            }
            ContinuityCert::Ac1(Ac1Cert { side, translator, requested, target, chosen, cases })
        }
        "ac2" => {
            let (i, v) = lines.value("target")?;
            let target = parse_tops(i, v)?;
            let (i, v) = lines.value("chosen")?;
            let chosen = parse_tops(i, v)?;
            let mut facts = Vec::new();
            for (i, v) in lines.repeated("fact") {
                facts.push(at(i, parse_fact(v))?);
            }
            ContinuityCert::Ac2(Ac2Cert { side, translator, target, chosen, facts })
        }
        other => return Err(Error::MalformedCert(format!("unknown topology {other:?}"))),
    };
    if let Some((i, l)) = lines.inner.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Lines::err(i + 1, format!("unexpected line {l:?}")));
    }
    Ok(cert)
}

fn parse_case(line: usize, s: &str) -> Result<Ac1Case<Rational>> {
    let toks: Vec<&str> = s.split(' ').collect();
    let [id, piece, escape, a, b, chain] = toks[..] else {
        return Err(Lines::err(line, "a case has six fields"));
    };
    let id = CaseId::parse(id)?;
    let piece = match piece {
        "shift" => Piece::Shift,
        "hold" => Piece::Hold,
        other => return Err(Lines::err(line, format!("unknown piece {other:?}"))),
    };
    let escape = match escape {
        "first" => Coordinate::First,
        "second" => Coordinate::Second,
        other => return Err(Lines::err(line, format!("unknown coordinate {other:?}"))),
    };
    let a = at(line, field(a, "a").and_then(parse_interval))?;
    let b = at(line, field(b, "b").and_then(parse_interval))?;
    let chain = at(line, field(chain, "chain").and_then(parse_chain))?;
    Ok(Ac1Case { id, a, b, piece, escape, chain })
}

fn parse_fact(s: &str) -> std::result::Result<Ac2Fact<Rational>, String> {
    let toks: Vec<&str> = s.split(' ').collect();
    let [top, witness, preimage] = toks[..] else {
        return Err("a fact has three fields".into());
    };
    Ok(Ac2Fact {
        target_top: parse_elem(field(top, "top")?)?,
        witness: parse_elem(field(witness, "witness")?)?,
        preimage: parse_region(field(preimage, "preimage")?)?,
    })
}
