//! Johnstone's non-sober dcpo on `ℕ × (ℕ ∪ {∞})`.
//!
//! `(m, n) ≤ (m', n')` iff `m = m'` and `n ≤ n'`, or `n' = ∞` and `n ≤ m'`.
//! Coordinates start at 1.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{SymbolicDcpo, Window};
use crate::bits::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// Second coordinate: a natural number or `∞`, with `∞` above every number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Height {
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JohnstoneElement {
    pub m: u32,
    pub n: Height,
}

impl JohnstoneElement {
    pub fn finite(m: u32, n: u32) -> Self {
        JohnstoneElement {
            m,
            n: Height::Finite(n),
        }
    }

    pub fn infinite(m: u32) -> Self {
        JohnstoneElement {
            m,
            n: Height::Infinite,
        }
    }
}

impl fmt::Display for JohnstoneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Height::Finite(n) => write!(f, "({},{})", self.m, n),
            Height::Infinite => write!(f, "({},inf)", self.m),
        }
    }
}

pub fn johnstone_leq(u: &JohnstoneElement, v: &JohnstoneElement) -> bool {
    (u.m == v.m && u.n <= v.n) || (v.n == Height::Infinite && u.n <= Height::Finite(v.m))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Johnstone;

impl SymbolicDcpo for Johnstone {
    type Element = JohnstoneElement;

    fn name(&self) -> &'static str {
        "johnstone"
    }

    fn leq(&self, a: &JohnstoneElement, b: &JohnstoneElement) -> bool {
        johnstone_leq(a, b)
    }

    /// All `(m, n)` with `m ≤ bound` and `n ≤ bound` or `n = ∞`.
    fn window(&self, bound: usize, caps: &Caps) -> Result<Vec<JohnstoneElement>> {
        if bound == 0 {
            return Err(Error::InvalidArgument("window bound must be at least 1"));
        }
        Error::check_cap("johnstone window bound", bound, caps.johnstone_window_max)?;
        let b = bound as u32;
        let mut out: Vec<JohnstoneElement> = (1..=b)
            .flat_map(|m| {
                (1..=b)
                    .map(move |n| JohnstoneElement::finite(m, n))
                    .chain(core::iter::once(JohnstoneElement::infinite(m)))
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Bounded checks of the structural claims about Johnstone's dcpo.
pub fn verify_johnstone(bound: usize, caps: &Caps) -> Result<Vec<CheckReport>> {
    let w = Window::sample(&Johnstone, bound, caps)?;
    let b = bound as u32;
    let idx = |e: JohnstoneElement| w.index_of(&e).expect("element in window");
    let mut reports = Vec::new();

    reports.push(w.order_axioms(
        "J1-order-axioms",
        "Johnstone order: (m,n) <= (m',n') iff m = m' and n <= n', or n' = inf and n <= m'",
    ));

    let mut j2 = CheckReport::new(
        "J2-finite-down-sets-are-chains",
        "for finite n, the principal down-set of (m,n) is a chain, so (m,n) is down-linear",
        bound,
    );
    for m in 1..=b {
        for n in 1..=b {
            let i = idx(JohnstoneElement::finite(m, n));
            j2.expect(w.is_chain(w.down_of(i)), || {
                format!("down-set of {} is {} and not a chain", w.elements[i], w.show(w.down_of(i)))
            });
        }
    }
    reports.push(j2);

    let mut j3 = CheckReport::new(
        "J3-infinite-down-sets",
        "the down-set of (m,inf) is the closure of the union of the chain of down-sets of (m,k), k finite, and is not a chain",
        bound,
    );
    let first_coordinates = b;
    for m in 1..=b {
        let top = idx(JohnstoneElement::infinite(m));
        let target = w.down_of(top);
        let mut union = ElementSet::empty(w.len());
        for k in 1..=b {
            union.union_with(w.down_of(idx(JohnstoneElement::finite(m, k))));
        }
        j3.expect(w.is_chain(&union), || {
            format!("union of the (m,k) down-sets for m = {m} is not a chain")
        });
        union.insert(top);
        if first_coordinates >= 2 {
            // Adding the supremum alone does not give a lower set: the
            // closure must also pull in (m',n) with n <= m.
            j3.expect(w.down_closure(&union) != union, || {
                format!("chain plus {} is already a lower set", w.elements[top])
            });
        }
        let closed = w.down_closure(&union);
        j3.expect(&closed == target, || {
            format!(
                "down-closure of the (m,k) chain plus {} is {}, expected {}",
                w.elements[top],
                w.show(&closed),
                w.show(target)
            )
        });
        if first_coordinates >= 2 {
            j3.expect(!w.is_chain(target), || {
                format!("down-set of {} is a chain", w.elements[top])
            });
        }
    }
    reports.push(j3);

    // No upper bound of the whole chain (m,1) < (m,2) < ... other than
    // (m,inf): every other window element misses some (m,k), exhibited
    // explicitly (k may lie outside the window).
    let mut j3s = CheckReport::new(
        "J3-chain-supremum",
        "(m,inf) is the supremum of the chain {(m,k) : k finite}",
        bound,
    );
    for m in 1..=b {
        let sup = JohnstoneElement::infinite(m);
        for k in 1..=b {
            j3s.expect(johnstone_leq(&JohnstoneElement::finite(m, k), &sup), || {
                format!("({m},{k}) is not below {sup}")
            });
        }
        for u in w.elements.iter().filter(|u| **u != sup) {
            let k = match u.n {
                Height::Finite(n) if u.m == m => n + 1,
                Height::Finite(_) => 1,
                Height::Infinite => u.m + 1,
            };
            j3s.expect(!johnstone_leq(&JohnstoneElement::finite(m, k), u), || {
                format!("{u} bounds the chain at ({m},{k})")
            });
        }
    }
    reports.push(j3s.as_evidence());

    let mut j4 = CheckReport::new(
        "J4-no-greatest-element",
        "X is irreducible and X != cl({x}) for every x: no window element dominates the window",
        bound,
    );
    let all = ElementSet::full(w.len());
    for i in 0..w.len() {
        j4.expect(w.down_of(i) != &all, || {
            format!("{} dominates every window element", w.elements[i])
        });
    }
    reports.push(j4.as_evidence());

    let mut j5 = CheckReport::new(
        "J5-non-chain-witness",
        "(1,1) and (2,1) are incomparable and both below (3,inf), so (3,inf) is not down-linear",
        bound,
    );
    let a = JohnstoneElement::finite(1, 1);
    let c = JohnstoneElement::finite(2, 1);
    let t = JohnstoneElement::infinite(3);
    j5.expect(johnstone_leq(&a, &t) && johnstone_leq(&c, &t), || {
        "(1,1) or (2,1) is not below (3,inf)".into()
    });
    j5.expect(!johnstone_leq(&a, &c) && !johnstone_leq(&c, &a), || {
        "(1,1) and (2,1) are comparable".into()
    });
    reports.push(j5);

    // Property M fails: mub{(1,1),(2,1)} = {(m,inf) : m >= 1} is infinite;
    // inside a window it has exactly `bound` members.
    let mut jm = CheckReport::new(
        "JM-mub-grows",
        "the dcpo lacks property M: mub{(1,1),(2,1)} is infinite",
        bound,
    );
    let bounds = ElementSet::from_indices(
        w.len(),
        (0..w.len()).filter(|&u| {
            johnstone_leq(&a, &w.elements[u]) && johnstone_leq(&c, &w.elements[u])
        }),
    );
    let minimal = ElementSet::from_indices(
        w.len(),
        bounds
            .iter()
            .filter(|&u| w.down_of(u).intersection(&bounds).count() == 1),
    );
    let expected = ElementSet::from_indices(
        w.len(),
        (1..=b).map(|m| idx(JohnstoneElement::infinite(m))),
    );
    jm.expect(minimal == expected, || {
        format!(
            "window mub is {}, expected every (m,inf)",
            w.show(&minimal)
        )
    });
    reports.push(jm.as_evidence());

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        let e = JohnstoneElement::finite;
        assert!(johnstone_leq(&e(2, 3), &e(2, 7)));
        assert!(johnstone_leq(&e(3, 2), &JohnstoneElement::infinite(5)));
        assert!(!johnstone_leq(&e(1, 1), &e(2, 3)));
        assert!(!johnstone_leq(
            &JohnstoneElement::infinite(1),
            &JohnstoneElement::infinite(2)
        ));
    }

    #[test]
    fn window_sizes() {
        let caps = Caps::default();
        assert_eq!(Johnstone.window(2, &caps).unwrap().len(), 6);
        assert_eq!(Johnstone.window(12, &caps).unwrap().len(), 156);
        assert!(Johnstone.window(0, &caps).is_err());
        assert!(Johnstone.window(33, &caps).is_err());
    }

    #[test]
    fn bounded_claims_hold() {
        let reports = verify_johnstone(8, &Caps::default()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn single_point_window_has_a_greatest_element() {
        let reports = verify_johnstone(1, &Caps::default()).unwrap();
        let j4 = reports.iter().find(|r| r.claim_id.starts_with("J4")).unwrap();
        assert!(!j4.passed(), "(1,inf) dominates the bound-1 window");
    }
}
