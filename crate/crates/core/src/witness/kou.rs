//! Kou's well-filtered non-sober dcpo.
//!
//! The carrier is `X ∪ P0` with `X = (0, 1]` and
//! `P0 = {(k, a, b) : 0 < k < 1, 0 < b ≤ a ≤ 1}`, ordered by
//!
//! * points of `X` only by equality,
//! * `(k1, a1, b1) ⊑ (k2, a2, b2)` iff `k1 ≤ k2`, `a1 = a2` and `b1 = b2`,
//! * `(k, a, b) ⊑ x` iff `a = x` or `k·b ≤ x < b`.
//!
//! All coordinates are exact rationals so the boundary cases `x = k·b` and
//! `x = b` are decided exactly.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use super::{SymbolicDcpo, Window};
use crate::bits::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::report::CheckReport;

pub type Rational = Ratio<i64>;

fn zero() -> Rational {
    Rational::from_integer(0)
}

fn one() -> Rational {
    Rational::from_integer(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KouElement {
    Point(Rational),
    Triple { k: Rational, a: Rational, b: Rational },
}

impl KouElement {
    /// A point of `X`, if `0 < x ≤ 1`.
    pub fn point(x: Rational) -> Option<Self> {
        (zero() < x && x <= one()).then_some(KouElement::Point(x))
    }

    /// A triple of `P0`, if `0 < k < 1` and `0 < b ≤ a ≤ 1`.
    pub fn triple(k: Rational, a: Rational, b: Rational) -> Option<Self> {
        (zero() < k && k < one() && zero() < b && b <= a && a <= one())
            .then_some(KouElement::Triple { k, a, b })
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            KouElement::Point(x) => Self::point(x).is_some(),
            KouElement::Triple { k, a, b } => Self::triple(k, a, b).is_some(),
        }
    }
}

impl fmt::Display for KouElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KouElement::Point(x) => write!(f, "{x}"),
            KouElement::Triple { k, a, b } => write!(f, "({k},{a},{b})"),
        }
    }
}

pub fn kou_leq(u: &KouElement, v: &KouElement) -> bool {
    match (u, v) {
        (KouElement::Point(x1), KouElement::Point(x2)) => x1 == x2,
        (
            KouElement::Triple {
                k: k1,
                a: a1,
                b: b1,
            },
            KouElement::Triple {
                k: k2,
                a: a2,
                b: b2,
            },
        ) => k1 <= k2 && a1 == a2 && b1 == b2,
        (KouElement::Triple { k, a, b }, KouElement::Point(x)) => {
            a == x || (*k * *b <= *x && x < b)
        }
        (KouElement::Point(_), KouElement::Triple { .. }) => false,
    }
}

/// Kou's dcpo, optionally with extra sample elements merged into every window.
#[derive(Debug, Clone, Default)]
pub struct Kou {
    pub extra: Vec<KouElement>,
}

/// `p/q` with `1 ≤ p ≤ q ≤ bound` (or `p < q` when `proper`), deduplicated.
fn fractions(bound: i64, proper: bool) -> Vec<Rational> {
    let set: BTreeSet<Rational> = (1..=bound)
        .flat_map(|q| (1..=q).map(move |p| (p, q)))
        .filter(|&(p, q)| !proper || p < q)
        .map(|(p, q)| Rational::new(p, q))
        .collect();
    set.into_iter().collect()
}

impl SymbolicDcpo for Kou {
    type Element = KouElement;

    fn name(&self) -> &'static str {
        "kou"
    }

    fn leq(&self, a: &KouElement, b: &KouElement) -> bool {
        kou_leq(a, b)
    }

    /// Points `p/q` and triples whose coordinates are fractions with
    /// numerator and denominator at most `bound`, plus the extra samples.
    fn window(&self, bound: usize, caps: &Caps) -> Result<Vec<KouElement>> {
        if bound == 0 {
            return Err(Error::InvalidArgument("window bound must be at least 1"));
        }
        Error::check_cap("kou window bound", bound, caps.kou_window_max)?;
        if self.extra.iter().any(|e| !e.is_valid()) {
            return Err(Error::InvalidArgument("extra Kou sample out of range"));
        }
        let points = fractions(bound as i64, false);
        let ks = fractions(bound as i64, true);
        let mut out: BTreeSet<KouElement> = points.iter().map(|&x| KouElement::Point(x)).collect();
        for &k in &ks {
            for &a in &points {
                for &b in points.iter().filter(|&&b| b <= a) {
                    out.insert(KouElement::Triple { k, a, b });
                }
            }
        }
        out.extend(self.extra.iter().copied());
        Ok(out.into_iter().collect())
    }
}

/// A `k` in `(0, 1)` with `(k, x, x) ⋢ u`, showing that `u ≠ x` does not
/// bound the whole family `{(k, x, x) : 0 < k < 1}`.
fn separating_k(x: Rational, u: &KouElement) -> Rational {
    let half = Rational::new(1, 2);
    match *u {
        KouElement::Triple { k: h, a, b } if a == x && b == x => (h + one()) / 2,
        KouElement::Triple { .. } => half,
        KouElement::Point(y) if y < x => (y / x + one()) / 2,
        KouElement::Point(_) => half,
    }
}

/// Bounded checks of the structural claims about Kou's dcpo.
pub fn verify_kou(kou: &Kou, bound: usize, caps: &Caps) -> Result<Vec<CheckReport>> {
    let w = Window::sample(kou, bound, caps)?;
    let n = w.len();
    let is_point = |i: usize| matches!(w.elements[i], KouElement::Point(_));
    let mut reports = Vec::new();

    reports.push(w.order_axioms(
        "K1-order-axioms",
        "Kou order: points are ordered by equality, (k1,a,b) <= (k2,a,b) iff k1 <= k2, (k,a,b) <= x iff a = x or kb <= x < b",
    ));

    let mut mixed = CheckReport::new(
        "K1-mixed-transitivity",
        "transitivity across the triple-triple and triple-point clauses",
        bound,
    );
    for v in (0..n).filter(|&v| !is_point(v)) {
        for u in w.down_of(v).iter() {
            for t in w.up_of(v).iter().filter(|&t| is_point(t)) {
                mixed.expect(kou_leq(&w.elements[u], &w.elements[t]), || {
                    format!(
                        "{} <= {} <= {} but not {} <= {}",
                        w.elements[u], w.elements[v], w.elements[t], w.elements[u], w.elements[t]
                    )
                });
            }
        }
    }
    reports.push(mixed);

    let mut k2 = CheckReport::new(
        "K2-triple-down-sets",
        "the down-set of (h,a,b) is {(k,a,b) : k <= h}, a chain",
        bound,
    );
    for i in (0..n).filter(|&i| !is_point(i)) {
        let KouElement::Triple { k: h, a, b } = w.elements[i] else {
            unreachable!()
        };
        let expected = ElementSet::from_indices(
            n,
            (0..n).filter(|&j| {
                matches!(w.elements[j], KouElement::Triple { k, a: a2, b: b2 }
                    if k <= h && a2 == a && b2 == b)
            }),
        );
        let down = w.down_of(i);
        k2.expect(down == &expected && w.is_chain(down), || {
            format!("down-set of {} is {}", w.elements[i], w.show(down))
        });
    }
    reports.push(k2);

    let mut k3 = CheckReport::new(
        "K3-point-is-sup-of-chain",
        "each point x is the supremum of the chain {(k,x,x) : 0 < k < 1}",
        bound,
    );
    for xi in (0..n).filter(|&i| is_point(i)) {
        let KouElement::Point(x) = w.elements[xi] else {
            unreachable!()
        };
        let family = ElementSet::from_indices(
            n,
            (0..n).filter(|&j| {
                matches!(w.elements[j], KouElement::Triple { a, b, .. } if a == x && b == x)
            }),
        );
        for j in &family {
            k3.expect(w.leq(j, xi), || format!("{} is not below {x}", w.elements[j]));
        }
        k3.expect(w.is_chain(&family), || {
            format!("the (k,{x},{x}) family is not a chain")
        });
        for (ui, u) in w.elements.iter().enumerate().filter(|&(ui, _)| ui != xi) {
            let k = separating_k(x, u);
            let member = KouElement::triple(k, x, x);
            k3.expect(member.is_some_and(|m| !kou_leq(&m, u)), || {
                format!("{} bounds (k,{x},{x}) at k = {k}", w.elements[ui])
            });
        }
    }
    reports.push(k3.as_evidence());

    // Property M fails: mub{(1/2,1,1), (1/2,2/3,2/3)} is every point of
    // [1/2, 2/3], an infinite antichain.
    let mut km = CheckReport::new(
        "KM-mub-antichain",
        "the dcpo lacks property M: mub{(1/2,1,1),(1/2,2/3,2/3)} is an infinite antichain of points",
        bound,
    );
    let half = Rational::new(1, 2);
    let two_thirds = Rational::new(2, 3);
    let a = [
        KouElement::triple(half, one(), one()).unwrap(),
        KouElement::triple(half, two_thirds, two_thirds).unwrap(),
    ];
    let bounds = ElementSet::from_indices(
        n,
        (0..n).filter(|&u| a.iter().all(|e| kou_leq(e, &w.elements[u]))),
    );
    let minimal = ElementSet::from_indices(
        n,
        bounds
            .iter()
            .filter(|&u| w.down_of(u).intersection(&bounds).count() == 1),
    );
    for u in &minimal {
        km.expect(
            matches!(w.elements[u], KouElement::Point(y) if half <= y && y <= two_thirds),
            || format!("unexpected minimal upper bound {}", w.elements[u]),
        );
    }
    if bound >= 3 {
        km.expect(minimal.count() >= 2 && w.to_poset().is_ok(), || {
            format!("window mub {} has fewer than two members", w.show(&minimal))
        });
    }
    reports.push(km.as_evidence());

    Ok(reports)
}
