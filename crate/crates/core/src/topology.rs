//! The Scott topology of a finite poset.
//!
//! In a finite poset every directed subset contains its own supremum, so the
//! Scott-closed sets are exactly the lower sets and `ΣP` is the Alexandrov
//! space of `P`. The classification procedures below deliberately do not use
//! that shortcut: they treat a [`ClosedFamily`] as an abstract finite
//! topology and evaluate each property from its definition, so they remain
//! meaningful on families that did not come from a poset.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bits::{all_subsets, ElementSet};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poset::{Direction, FinitePoset};
use crate::report::CheckReport;

/// The lattice `C_σ(P)` as an explicit list of sets.
///
/// Members are sorted by (cardinality, bit value), so the empty set comes
/// first and the full carrier last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFamily {
    base: FinitePoset,
    members: Vec<ElementSet>,
}

impl ClosedFamily {
    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.index_of(set).is_some()
    }

    /// Topological closure: the intersection of all members containing `set`.
    pub fn closure(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.base.carrier();
        for m in self.members.iter().filter(|m| set.is_subset(m)) {
            out.intersect_with(m);
        }
        out
    }

    pub fn point_closure(&self, x: usize) -> ElementSet {
        self.closure(&ElementSet::singleton(self.base.size(), x))
    }

    /// Irreducibility of a closed set, evaluated against the family.
    ///
    /// `F ⊆ F1 ∪ F2` with `F1, F2` closed is equivalent to `F` being the
    /// union of the closed sets `F ∩ F1` and `F ∩ F2`, so it suffices to
    /// rule out `F` being the union of two closed proper subsets.
    pub fn is_irreducible(&self, set: &ElementSet) -> bool {
        if set.is_empty() {
            return false;
        }
        let proper: Vec<&ElementSet> = self
            .members
            .iter()
            .filter(|m| m.is_subset(set) && *m != set)
            .collect();
        !proper
            .iter()
            .enumerate()
            .any(|(i, a)| proper[i..].iter().any(|b| &a.union(b) == set))
    }
}

/// All Scott-closed sets of `p`.
pub fn scott_closed_family(p: &FinitePoset, caps: &Caps) -> Result<ClosedFamily> {
    let members = p.lower_sets(caps.family_max)?;
    Ok(ClosedFamily {
        base: p.clone(),
        members,
    })
}

/// A lower set that contains the supremum of each of its directed subsets.
///
/// Subsets are enumerated, so the carrier is limited by `caps.subset_max`.
pub fn is_scott_closed(p: &FinitePoset, set: &ElementSet, caps: &Caps) -> Result<bool> {
    p.check_set(set)?;
    if !p.is_lower_set(set) {
        return Ok(false);
    }
    Error::check_cap("subset enumeration carrier", set.count(), caps.subset_max)?;
    for d in crate::bits::subsets_of(set) {
        if p.is_directed(&d) {
            match p.supremum(&d) {
                Some(s) if !set.contains(s) => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

/// Smallest Scott-closed superset of `set`; in a finite poset this is `↓set`.
pub fn scott_closure(p: &FinitePoset, set: &ElementSet) -> ElementSet {
    p.down_set(set, Direction::Down)
}

/// `Irr_σ(P)`: nonempty irreducible closed sets ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrPoset {
    pub elements: Vec<ElementSet>,
    pub order: FinitePoset,
}

impl IrrPoset {
    pub fn from_family(family: &ClosedFamily) -> Self {
        let elements: Vec<ElementSet> = family
            .members()
            .iter()
            .filter(|m| family.is_irreducible(m))
            .cloned()
            .collect();
        let order = FinitePoset::from_relation(elements.len(), |i, j| {
            elements[i].is_subset(&elements[j])
        })
        .expect("inclusion is a partial order");
        IrrPoset { elements, order }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.elements.binary_search(set).ok()
    }

    /// `h(A) = {F ∈ Irr : F ⊆ A}` as a set of indices into `elements`.
    pub fn hull(&self, closed: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| self.elements[i].is_subset(closed)),
        )
    }
}

pub fn irreducible_closed(p: &FinitePoset, caps: &Caps) -> Result<IrrPoset> {
    Ok(IrrPoset::from_family(&scott_closed_family(p, caps)?))
}

/// Separation and sobriety properties of a Scott space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpaceClassification {
    pub sober: bool,
    pub bounded_sober: bool,
    pub t_d: bool,
    pub d_space: bool,
    pub scott_sobrificable: bool,
}

impl SpaceClassification {
    pub fn all(&self) -> bool {
        self.sober && self.bounded_sober && self.t_d && self.d_space && self.scott_sobrificable
    }
}

/// Runs the five classification procedures on `ΣP`.
pub fn classify_space(p: &FinitePoset, caps: &Caps) -> Result<SpaceClassification> {
    let family = scott_closed_family(p, caps)?;
    let irr = IrrPoset::from_family(&family);
    Ok(SpaceClassification {
        sober: is_sober(&family, &irr),
        bounded_sober: is_bounded_sober(&family, &irr),
        t_d: is_t_d(&family),
        d_space: is_d_space(&family, caps)?,
        scott_sobrificable: is_scott_sobrificable(&family, &irr, caps)?,
    })
}

/// Every irreducible closed set is the closure of exactly one point.
pub fn is_sober(family: &ClosedFamily, irr: &IrrPoset) -> bool {
    let closures: Vec<ElementSet> = (0..family.base().size())
        .map(|x| family.point_closure(x))
        .collect();
    irr.elements
        .iter()
        .all(|f| closures.iter().filter(|c| *c == f).count() == 1)
}

/// Sobriety restricted to irreducible closed sets that have an upper bound
/// in the specialization order.
pub fn is_bounded_sober(family: &ClosedFamily, irr: &IrrPoset) -> bool {
    let closures: Vec<ElementSet> = (0..family.base().size())
        .map(|x| family.point_closure(x))
        .collect();
    irr.elements.iter().all(|f| {
        let bounded = closures.iter().any(|c| f.is_subset(c));
        !bounded || closures.iter().filter(|c| *c == f).count() == 1
    })
}

/// Specialization order `x ≤ y iff x ∈ cl({y})`, when the space is T0.
pub fn specialization_order(family: &ClosedFamily) -> Result<FinitePoset> {
    let closures: Vec<ElementSet> = (0..family.base().size())
        .map(|x| family.point_closure(x))
        .collect();
    FinitePoset::from_relation(closures.len(), |x, y| closures[y].contains(x))
}

/// Every singleton is the intersection of an open and a closed set.
///
/// For each point the smallest closed set containing it and the smallest
/// open set containing it are tried; any other witnessing pair contains
/// these, so this decides the condition.
pub fn is_t_d(family: &ClosedFamily) -> bool {
    let n = family.base().size();
    (0..n).all(|x| {
        let closed = family.point_closure(x);
        let mut outside = ElementSet::empty(n);
        for m in family.members().iter().filter(|m| !m.contains(x)) {
            outside.union_with(m);
        }
        let open = outside.complement();
        closed.intersection(&open) == ElementSet::singleton(n, x)
    })
}

/// T0, the specialization order is directed complete, and every directed
/// set converges to its supremum (equivalently, every closed set containing
/// the directed set contains its supremum).
pub fn is_d_space(family: &ClosedFamily, caps: &Caps) -> Result<bool> {
    let n = family.base().size();
    let Ok(order) = specialization_order(family) else {
        return Ok(false);
    };
    Error::check_cap("subset enumeration carrier", n, caps.subset_max)?;
    for d in all_subsets(n) {
        if !order.is_directed(&d) {
            continue;
        }
        let Some(sup) = order.supremum(&d) else {
            return Ok(false);
        };
        if !family.closure(&d).contains(sup) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every Scott-closed set of the dcpo `Irr` has the form `h(A)` for a
/// closed set `A` of the space.
pub fn is_scott_sobrificable(family: &ClosedFamily, irr: &IrrPoset, caps: &Caps) -> Result<bool> {
    let hulls: BTreeSet<ElementSet> = family.members().iter().map(|a| irr.hull(a)).collect();
    let scott_closed = irr.order.lower_sets(caps.family_max)?;
    Ok(scott_closed.iter().all(|f| hulls.contains(f)))
}

/// `Irr(ΣP)` with its hull-kernel closed sets and the point map `η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sobrification {
    pub irr: IrrPoset,
    /// The sets `h(A)`, as index sets into `irr.elements`, sorted.
    pub closed: Vec<ElementSet>,
    /// `eta[x]` is the index of `cl({x})` in `irr.elements`.
    pub eta: Vec<usize>,
}

impl Sobrification {
    /// The hull-kernel topology viewed as a closed-set family over `Irr`.
    pub fn closed_family(&self) -> ClosedFamily {
        ClosedFamily {
            base: self.irr.order.clone(),
            members: self.closed.clone(),
        }
    }
}

pub fn hull_kernel_sobrification(p: &FinitePoset, caps: &Caps) -> Result<Sobrification> {
    let family = scott_closed_family(p, caps)?;
    let irr = IrrPoset::from_family(&family);
    let closed: BTreeSet<ElementSet> = family.members().iter().map(|a| irr.hull(a)).collect();
    let eta = (0..p.size())
        .map(|x| {
            irr.index_of(&family.point_closure(x))
                .expect("point closures are irreducible")
        })
        .collect();
    Ok(Sobrification {
        irr,
        closed: closed.into_iter().collect(),
        eta,
    })
}

/// For every directed `D ⊆ P`, the supremum in `Irr` of the point closures
/// `cl({d})` (the closure of their union) is `cl({⋁D})`.
pub fn directed_point_sup_check(p: &FinitePoset, caps: &Caps) -> Result<CheckReport> {
    let n = p.size();
    Error::check_cap("subset enumeration carrier", n, caps.subset_max)?;
    let family = scott_closed_family(p, caps)?;
    let mut report = CheckReport::new(
        "directed-point-closure-sup",
        "in a d-space, the Irr-supremum of {cl({x_i})} over a directed family equals cl({sup x_i})",
        n,
    );
    for d in all_subsets(n) {
        if !p.is_directed(&d) {
            continue;
        }
        let sup = p.directed_sup(&d)?;
        let mut union = ElementSet::empty(n);
        for x in &d {
            union.union_with(&family.point_closure(x));
        }
        let joined = family.closure(&union);
        let expected = family.point_closure(sup);
        report.expect(family.is_irreducible(&joined) && joined == expected, || {
            format!("D = {d}: sup of point closures is {joined}, cl({{{sup}}}) = {expected}")
        });
    }
    Ok(report)
}
