//! Infinite dcpos given by a decidable order predicate, sampled on finite
//! windows.
//!
//! Nothing here decides a property of an infinite dcpo. Each check is a
//! bounded necessary condition evaluated on a window of elements, and
//! checks about infinite structure are reported with
//! [`Status::Evidence`](crate::Status) rather than `Pass`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bits::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::report::CheckReport;

mod johnstone;
mod kou;

pub use johnstone::{johnstone_leq, verify_johnstone, Height, Johnstone, JohnstoneElement};
pub use kou::{kou_leq, verify_kou, Kou, KouElement, Rational};

/// An infinite poset known through its order predicate and a family of
/// finite windows that grow with `bound`.
pub trait SymbolicDcpo {
    type Element: Clone + Ord + fmt::Display;

    fn name(&self) -> &'static str;

    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool;

    /// Sorted, duplicate-free sample of elements for the given bound.
    fn window(&self, bound: usize, caps: &Caps) -> Result<Vec<Self::Element>>;
}

/// Element of `P*`, the dcpo `P` with a new top element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Starred<E> {
    Base(E),
    Top,
}

impl<E: fmt::Display> fmt::Display for Starred<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Starred::Base(e) => e.fmt(f),
            Starred::Top => f.write_str("top"),
        }
    }
}

/// `P*`: adds a top element above every element of `P`.
#[derive(Debug, Clone, Default)]
pub struct WithTop<W>(pub W);

impl<W: SymbolicDcpo> SymbolicDcpo for WithTop<W> {
    type Element = Starred<W::Element>;

    fn name(&self) -> &'static str {
        match self.0.name() {
            "johnstone" => "johnstone-star",
            "kou" => "kou-star",
            _ => "star",
        }
    }

    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        match (a, b) {
            (_, Starred::Top) => true,
            (Starred::Top, Starred::Base(_)) => false,
            (Starred::Base(x), Starred::Base(y)) => self.0.leq(x, y),
        }
    }

    fn window(&self, bound: usize, caps: &Caps) -> Result<Vec<Self::Element>> {
        let mut out: Vec<_> = self
            .0
            .window(bound, caps)?
            .into_iter()
            .map(Starred::Base)
            .collect();
        out.push(Starred::Top);
        Ok(out)
    }
}

/// A sampled window with its induced relation stored as bit rows.
#[derive(Debug, Clone)]
pub struct Window<E> {
    pub bound: usize,
    pub elements: Vec<E>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

impl<E: Clone + Ord + fmt::Display> Window<E> {
    pub fn sample<W: SymbolicDcpo<Element = E>>(w: &W, bound: usize, caps: &Caps) -> Result<Self> {
        let elements = w.window(bound, caps)?;
        let n = elements.len();
        let mut up: Vec<ElementSet> = (0..n).map(|_| ElementSet::empty(n)).collect();
        let mut down: Vec<ElementSet> = (0..n).map(|_| ElementSet::empty(n)).collect();
        for i in 0..n {
            for j in 0..n {
                if w.leq(&elements[i], &elements[j]) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        Ok(Window {
            bound,
            elements,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    /// Window restriction of `↓e`.
    pub fn down_of(&self, i: usize) -> &ElementSet {
        &self.down[i]
    }

    pub fn up_of(&self, i: usize) -> &ElementSet {
        &self.up[i]
    }

    pub fn down_closure(&self, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for i in set {
            out.union_with(&self.down[i]);
        }
        out
    }

    pub fn is_chain(&self, set: &ElementSet) -> bool {
        let members = set.to_vec();
        members.iter().enumerate().all(|(k, &a)| {
            members[k + 1..]
                .iter()
                .all(|&b| self.leq(a, b) || self.leq(b, a))
        })
    }

    pub fn show(&self, set: &ElementSet) -> String {
        let parts: Vec<String> = set.iter().map(|i| format!("{}", self.elements[i])).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// The window as a finite poset, if the sampled relation is a partial order.
    pub fn to_poset(&self) -> Result<FinitePoset> {
        FinitePoset::from_relation(self.len(), |i, j| self.leq(i, j))
    }

    /// Reflexivity, antisymmetry and transitivity over all ordered triples.
    ///
    /// Transitivity is checked row-wise: for `u ≤ v`, the row `↑v` must be
    /// contained in `↑u`, which covers every triple `(u, v, w)`.
    pub fn order_axioms(&self, claim_id: &str, anchor: &str) -> CheckReport {
        let n = self.len();
        let mut report = CheckReport::new(claim_id, anchor, self.bound);
        report.cases((n as u64).pow(3));
        for u in 0..n {
            if !self.leq(u, u) {
                report.violate(format!("not reflexive at {}", self.elements[u]));
            }
            for v in self.up[u].iter().filter(|&v| v != u) {
                if self.leq(v, u) {
                    report.violate(format!(
                        "antisymmetry fails: {} and {}",
                        self.elements[u], self.elements[v]
                    ));
                }
                if !self.up[v].is_subset(&self.up[u]) {
                    let w = self.up[v].difference(&self.up[u]).first().unwrap();
                    report.violate(format!(
                        "transitivity fails: {} <= {} <= {}",
                        self.elements[u], self.elements[v], self.elements[w]
                    ));
                }
            }
        }
        report
    }
}

/// The four named witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessName {
    Johnstone,
    Kou,
    JohnstoneStar,
    KouStar,
}

impl WitnessName {
    pub const ALL: [WitnessName; 4] = [
        WitnessName::Johnstone,
        WitnessName::Kou,
        WitnessName::JohnstoneStar,
        WitnessName::KouStar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WitnessName::Johnstone => "johnstone",
            WitnessName::Kou => "kou",
            WitnessName::JohnstoneStar => "johnstone-star",
            WitnessName::KouStar => "kou-star",
        }
    }
}

impl FromStr for WitnessName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WitnessName::ALL
            .into_iter()
            .find(|w| w.as_str() == s)
            .ok_or(Error::InvalidArgument("unknown witness name"))
    }
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs every bounded check for a witness. `kou` carries any extra Kou
/// samples to merge into the window.
pub fn verify_witness_claims(
    name: WitnessName,
    bound: usize,
    kou: &Kou,
    caps: &Caps,
) -> Result<Vec<CheckReport>> {
    match name {
        WitnessName::Johnstone => verify_johnstone(bound, caps),
        WitnessName::Kou => verify_kou(kou, bound, caps),
        WitnessName::JohnstoneStar => {
            let mut reports = verify_johnstone(bound, caps)?;
            reports.extend(verify_star(&WithTop(Johnstone), bound, caps)?);
            Ok(reports)
        }
        WitnessName::KouStar => {
            let mut reports = verify_kou(kou, bound, caps)?;
            reports.extend(verify_star(&WithTop(kou.clone()), bound, caps)?);
            Ok(reports)
        }
    }
}

/// Checks on `P*`: the order axioms, the new top dominates the window, and
/// no window point has a closure equal to the copy of `P`.
pub fn verify_star<W: SymbolicDcpo>(star: &WithTop<W>, bound: usize, caps: &Caps) -> Result<Vec<CheckReport>> {
    let window = Window::sample(star, bound, caps)?;
    let axioms = window.order_axioms(
        "S0-order-axioms",
        "adding a top element to a dcpo yields a dcpo: the order laws hold on the sampled window",
    );

    let n = window.len();
    let top = window
        .index_of(&Starred::Top)
        .expect("star window contains the top");
    let base = {
        let mut s = ElementSet::full(n);
        s.remove(top);
        s
    };
    let mut report = CheckReport::new(
        "S1-top-and-base-not-point-closure",
        "in P*, the copy of P is an irreducible closed set that is not the closure of any point, so P* is not bounded sober",
        bound,
    );
    for i in 0..n {
        report.expect(window.leq(i, top), || {
            format!("top does not dominate {}", window.elements[i])
        });
    }
    for i in 0..n {
        let closure = window.down_of(i);
        report.expect(closure != &base, || {
            format!(
                "the window copy of P equals the closure of {}",
                window.elements[i]
            )
        });
    }
    Ok(alloc::vec![axioms, report.as_evidence()])
}
