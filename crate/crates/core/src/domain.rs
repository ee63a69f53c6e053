//! Domain-theoretic predicates on finite posets and the faithfulness scan.

use alloc::vec::Vec;

use crate::bits::{all_subsets, subsets_of, ElementSet};
use crate::caps::Caps;
use crate::canon::universe;
use crate::error::{Error, Result};
use crate::iso::poset_isomorphism;
use crate::lattice::{join_irreducibles, lattice_isomorphic, lattice_of, FiniteLattice};
use crate::poset::{Direction, FinitePoset};
use crate::topology::{is_bounded_sober, scott_closed_family, scott_closure, IrrPoset};

/// `F ≪ x` via the finite characterisation `↑x ⊆ ↑F`.
pub fn way_below(p: &FinitePoset, f: &ElementSet, x: usize) -> bool {
    p.up_of(x).is_subset(&p.down_set(f, Direction::Up))
}

/// `F ≪ x` by the definition: every nonempty directed `D` with `x ≤ ⋁D`
/// meets `↑F`.
pub fn way_below_definitional(
    p: &FinitePoset,
    f: &ElementSet,
    x: usize,
    caps: &Caps,
) -> Result<bool> {
    Error::check_cap("subset enumeration carrier", p.size(), caps.subset_max)?;
    let up_f = p.down_set(f, Direction::Up);
    for d in all_subsets(p.size()) {
        if !p.is_directed(&d) {
            continue;
        }
        let sup = p.directed_sup(&d)?;
        if p.leq(x, sup) && d.is_disjoint(&up_f) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How [`fin_sets`] lists the finite sets way-below an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinRepr {
    /// Every subset `F` with `F ≪ x`.
    AllSubsets,
    /// Only antichains `F = min(↑F)`, one per upper set `↑F`.
    Antichains,
}

/// `fin(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFamily {
    pub owner: usize,
    pub members: Vec<ElementSet>,
}

pub fn fin_sets(p: &FinitePoset, x: usize, repr: FinRepr, caps: &Caps) -> Result<FinFamily> {
    let candidates: Vec<ElementSet> = match repr {
        FinRepr::AllSubsets => {
            Error::check_cap("subset enumeration carrier", p.size(), caps.subset_max)?;
            all_subsets(p.size()).collect()
        }
        FinRepr::Antichains => antichains(p, caps)?,
    };
    let members = candidates
        .into_iter()
        .filter(|f| way_below(p, f, x))
        .collect();
    Ok(FinFamily { owner: x, members })
}

/// All antichains, as the minimal elements of each upper set.
fn antichains(p: &FinitePoset, caps: &Caps) -> Result<Vec<ElementSet>> {
    let mut out: Vec<ElementSet> = p
        .lower_sets(caps.family_max)?
        .iter()
        .map(|lower| p.minimal(&lower.complement()))
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DomainClass {
    pub continuous: bool,
    pub quasicontinuous: bool,
}

/// Continuity and quasicontinuity, each from its definition.
pub fn domain_class(p: &FinitePoset, caps: &Caps) -> Result<DomainClass> {
    let n = p.size();
    let mut continuous = true;
    let mut quasicontinuous = true;
    for x in 0..n {
        // Continuity: ↡x is directed and x = ⋁↡x.
        let waybelow = ElementSet::from_indices(
            n,
            (0..n).filter(|&y| way_below(p, &ElementSet::singleton(n, y), x)),
        );
        if !(p.is_directed(&waybelow) && p.supremum(&waybelow) == Some(x)) {
            continuous = false;
        }

        let fin = fin_sets(p, x, FinRepr::Antichains, caps)?;
        let ups: Vec<ElementSet> = fin
            .members
            .iter()
            .map(|f| p.down_set(f, Direction::Up))
            .collect();
        // Directed under F1 ⊑ F2 iff ↑F2 ⊆ ↑F1.
        let directed = !fin.members.is_empty()
            && ups.iter().all(|u1| {
                ups.iter().all(|u2| {
                    let common = u1.intersection(u2);
                    fin.members.iter().any(|f| f.is_subset(&common))
                })
            });
        let separating = (0..n)
            .filter(|&y| !p.leq(x, y))
            .all(|y| ups.iter().any(|u| !u.contains(y)));
        if !(directed && separating) {
            quasicontinuous = false;
        }
    }
    Ok(DomainClass {
        continuous,
        quasicontinuous,
    })
}

/// Minimal upper bounds of `a`.
pub fn mub(p: &FinitePoset, a: &ElementSet) -> ElementSet {
    p.minimal(&p.upper_bounds(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MubProperties {
    /// Property m: `mub(A)` is complete for every finite `A`.
    pub property_m: bool,
    /// Property M: property m and `mub(A)` finite for every finite `A`.
    pub property_big_m: bool,
}

/// Evaluates property m and M by enumerating every subset of the carrier.
pub fn mub_properties(p: &FinitePoset, caps: &Caps) -> Result<MubProperties> {
    Error::check_cap("subset enumeration carrier", p.size(), caps.subset_max)?;
    let mut complete = true;
    for a in all_subsets(p.size()) {
        let bounds = p.upper_bounds(&a);
        let minimal = p.minimal(&bounds);
        if !bounds
            .iter()
            .all(|u| minimal.iter().any(|m| p.leq(m, u)))
        {
            complete = false;
            break;
        }
    }
    // Every mub set of a finite poset is finite.
    Ok(MubProperties {
        property_m: complete,
        property_big_m: complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpecialElements {
    pub down_linear: ElementSet,
    pub quasicontinuous: ElementSet,
}

/// Down-linear elements and quasicontinuous elements (`↓x` quasicontinuous).
pub fn special_elements(p: &FinitePoset, caps: &Caps) -> Result<SpecialElements> {
    let n = p.size();
    let down_linear =
        ElementSet::from_indices(n, (0..n).filter(|&a| p.is_chain(p.down_of(a))));
    let mut quasicontinuous = ElementSet::empty(n);
    for x in 0..n {
        let sub = p.induced(p.down_of(x));
        if domain_class(&sub.poset, caps)?.quasicontinuous {
            quasicontinuous.insert(x);
        }
    }
    Ok(SpecialElements {
        down_linear,
        quasicontinuous,
    })
}

/// Which irreducible closed sets the DL-sup condition quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlSupScope {
    /// Only proper subsets of the carrier.
    Proper,
    /// Every nonempty irreducible closed set, the carrier included.
    All,
}

/// DL-sup over every irreducible closed set; see [`dl_sup_condition_scoped`].
pub fn dl_sup_condition(p: &FinitePoset, caps: &Caps) -> Result<bool> {
    dl_sup_condition_scoped(p, DlSupScope::All, caps)
}

/// Each irreducible closed set in scope is a down-linear element of `Irr`,
/// or the `Irr`-supremum (closure of the union) of a directed family of
/// down-linear members of `Irr`. The directed families are searched
/// exhaustively among down-linear members below the target.
pub fn dl_sup_condition_scoped(p: &FinitePoset, scope: DlSupScope, caps: &Caps) -> Result<bool> {
    let family = scott_closed_family(p, caps)?;
    let irr = IrrPoset::from_family(&family);
    let down_linear: Vec<usize> = (0..irr.len())
        .filter(|&i| irr.order.is_chain(irr.order.down_of(i)))
        .collect();
    for (i, target) in irr.elements.iter().enumerate() {
        if scope == DlSupScope::Proper && target.is_full() {
            continue;
        }
        if down_linear.contains(&i) {
            continue;
        }
        let below = ElementSet::from_indices(
            irr.len(),
            down_linear
                .iter()
                .copied()
                .filter(|&j| irr.elements[j].is_subset(target)),
        );
        Error::check_cap("subset enumeration carrier", below.count(), caps.subset_max)?;
        let found = subsets_of(&below).any(|d| {
            if !irr.order.is_directed(&d) {
                return false;
            }
            let mut union = ElementSet::empty(p.size());
            for j in &d {
                union.union_with(&irr.elements[j]);
            }
            &scott_closure(p, &union) == target
        });
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QcGeneration {
    pub bounded_sober: bool,
    pub qc_generated: bool,
}

/// Bounded sobriety of `ΣP`, and whether every element is the supremum of
/// a directed set of quasicontinuous elements.
pub fn qc_generation_condition(p: &FinitePoset, caps: &Caps) -> Result<QcGeneration> {
    let family = scott_closed_family(p, caps)?;
    let irr = IrrPoset::from_family(&family);
    let qce = special_elements(p, caps)?.quasicontinuous;
    let mut qc_generated = true;
    for x in 0..p.size() {
        let candidates = qce.intersection(p.down_of(x));
        Error::check_cap("subset enumeration carrier", candidates.count(), caps.subset_max)?;
        let generated =
            subsets_of(&candidates).any(|d| p.is_directed(&d) && p.supremum(&d) == Some(x));
        if !generated {
            qc_generated = false;
            break;
        }
    }
    Ok(QcGeneration {
        bounded_sober: is_bounded_sober(&family, &irr),
        qc_generated,
    })
}

/// `C_σ(P)` of a finite poset as a lattice.
pub fn scott_lattice(p: &FinitePoset, caps: &Caps) -> Result<FiniteLattice> {
    lattice_of(&scott_closed_family(p, caps)?)
}

/// Birkhoff round trip: the join-irreducibles of `C_σ(P)` recover `P`.
pub fn birkhoff_round_trip(p: &FinitePoset, lattice: &FiniteLattice) -> bool {
    poset_isomorphism(&join_irreducibles(lattice).poset, p).is_some()
}

/// Canonical posets of sizes `1..=bound` with their Scott-closed-set lattices.
#[derive(Debug, Clone)]
pub struct ScanUniverse {
    pub bound: usize,
    pub classes: Vec<FinitePoset>,
    pub lattices: Vec<FiniteLattice>,
}

/// Result of comparing one pair of universe members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairOutcome {
    pub i: usize,
    pub j: usize,
    pub lattice_iso: bool,
    /// Only decided when the lattices are isomorphic.
    pub poset_iso: Option<bool>,
}

impl PairOutcome {
    pub fn is_violation(&self) -> bool {
        self.lattice_iso && self.poset_iso == Some(false)
    }
}

impl ScanUniverse {
    pub fn build(bound: usize, caps: &Caps) -> Result<Self> {
        let classes = universe(bound, caps)?;
        let lattices = classes
            .iter()
            .map(|p| scott_lattice(p, caps))
            .collect::<Result<Vec<_>>>()?;
        Ok(ScanUniverse {
            bound,
            classes,
            lattices,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Unordered pairs `i <= j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |i| (i..self.len()).map(move |j| (i, j)))
    }

    /// Compares `C_σ` of two members. On the diagonal the second poset is
    /// a relabeled copy (labels reversed) so the witness search does real
    /// work.
    pub fn check_pair(&self, i: usize, j: usize, caps: &Caps) -> Result<PairOutcome> {
        let p = &self.classes[i];
        let relabeled;
        let (q, lq) = if i == j {
            let n = p.size();
            let reversed: Vec<usize> = (0..n).map(|x| n - 1 - x).collect();
            let copy = p.relabel(&reversed);
            let lattice = scott_lattice(&copy, caps)?;
            relabeled = (copy, lattice);
            (&relabeled.0, &relabeled.1)
        } else {
            (&self.classes[j], &self.lattices[j])
        };
        let lattice_iso = lattice_isomorphic(&self.lattices[i], lq).is_some();
        let poset_iso = lattice_iso.then(|| poset_isomorphism(p, q).is_some());
        Ok(PairOutcome {
            i,
            j,
            lattice_iso,
            poset_iso,
        })
    }

    pub fn birkhoff_holds(&self, i: usize) -> bool {
        birkhoff_round_trip(&self.classes[i], &self.lattices[i])
    }
}

/// Summary of a faithfulness scan.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanReport {
    pub bound: usize,
    pub classes: usize,
    pub pairs_checked: u64,
    pub iso_pairs: u64,
    /// Pairs `[i, j]` with isomorphic lattices but non-isomorphic posets.
    pub violations: Vec<[usize; 2]>,
    /// Classes whose Birkhoff round trip failed.
    pub birkhoff_failures: Vec<usize>,
    pub elapsed_ms: Option<u64>,
}

impl ScanReport {
    /// Aggregates outcomes; the result does not depend on their order.
    pub fn aggregate(
        universe: &ScanUniverse,
        outcomes: impl IntoIterator<Item = PairOutcome>,
        birkhoff_failures: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut pairs_checked = 0;
        let mut iso_pairs = 0;
        let mut violations = Vec::new();
        for o in outcomes {
            pairs_checked += 1;
            if o.lattice_iso {
                iso_pairs += 1;
            }
            if o.is_violation() {
                violations.push([o.i, o.j]);
            }
        }
        violations.sort_unstable();
        let mut birkhoff_failures: Vec<usize> = birkhoff_failures.into_iter().collect();
        birkhoff_failures.sort_unstable();
        ScanReport {
            bound: universe.bound,
            classes: universe.len(),
            pairs_checked,
            iso_pairs,
            violations,
            birkhoff_failures,
            elapsed_ms: None,
        }
    }

    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.birkhoff_failures.is_empty()
    }
}

/// Sequential scan of every pair of canonical posets of size `1..=n`.
pub fn scl_faithful_scan(n: usize, caps: &Caps) -> Result<ScanReport> {
    let universe = ScanUniverse::build(n, caps)?;
    let outcomes = universe
        .pairs()
        .map(|(i, j)| universe.check_pair(i, j, caps))
        .collect::<Result<Vec<_>>>()?;
    let failures = (0..universe.len()).filter(|&i| !universe.birkhoff_holds(i));
    Ok(ScanReport::aggregate(&universe, outcomes, failures))
}

/// `M^♭` relative to the canonical posets of size `1..=universe_bound`:
/// every `P` such that, for all `Q` in the class, `C_σ(P) ≅ C_σ(Q)`
/// implies `P ≅ Q`.
pub fn m_flat(
    class_members: &[FinitePoset],
    universe_bound: usize,
    caps: &Caps,
) -> Result<Vec<FinitePoset>> {
    for q in class_members {
        Error::check_cap("class member size", q.size(), universe_bound)?;
    }
    let members: Vec<(FinitePoset, FiniteLattice)> = class_members
        .iter()
        .map(|q| Ok((q.clone(), scott_lattice(q, caps)?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for p in universe(universe_bound, caps)? {
        let lp = scott_lattice(&p, caps)?;
        let distinguished = members.iter().all(|(q, lq)| {
            lattice_isomorphic(&lp, lq).is_none() || poset_isomorphism(&p, q).is_some()
        });
        if distinguished {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FinitePoset {
        FinitePoset::build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn way_below_examples() {
        let caps = Caps::default();
        let c2 = FinitePoset::chain(2);
        let d4 = diamond();
        for (p, f, x, expected) in [
            (&c2, set(2, &[0]), 1, true),
            (&d4, set(4, &[1]), 3, true),
            (&d4, set(4, &[3]), 1, false),
        ] {
            assert_eq!(way_below(p, &f, x), expected);
            assert_eq!(way_below_definitional(p, &f, x, &caps).unwrap(), expected);
        }
    }

    #[test]
    fn fin_examples() {
        let caps = Caps::default();
        let fin = fin_sets(&FinitePoset::chain(2), 1, FinRepr::AllSubsets, &caps).unwrap();
        assert_eq!(fin.members, vec![set(2, &[0]), set(2, &[1]), set(2, &[0, 1])]);
        let fin = fin_sets(&FinitePoset::antichain(2), 0, FinRepr::AllSubsets, &caps).unwrap();
        assert_eq!(fin.members, vec![set(2, &[0]), set(2, &[0, 1])]);
        let fin = fin_sets(&diamond(), 3, FinRepr::AllSubsets, &caps).unwrap();
        for f in [&[3][..], &[1], &[2], &[1, 2], &[0]] {
            assert!(fin.members.contains(&set(4, f)), "{f:?}");
        }
        // Every nonempty subset of D4 is way-below the top.
        assert_eq!(fin.members.len(), 15);
        let fin = fin_sets(&diamond(), 3, FinRepr::Antichains, &caps).unwrap();
        assert_eq!(fin.members.len(), 5);
    }

    #[test]
    fn domain_class_examples() {
        let caps = Caps::default();
        let both = DomainClass {
            continuous: true,
            quasicontinuous: true,
        };
        assert_eq!(domain_class(&diamond(), &caps).unwrap(), both);
        assert_eq!(domain_class(&FinitePoset::antichain(2), &caps).unwrap(), both);
        assert_eq!(domain_class(&FinitePoset::empty(), &caps).unwrap(), both);
    }

    #[test]
    fn mub_examples() {
        let caps = Caps::default();
        assert_eq!(mub(&diamond(), &set(4, &[1, 2])), set(4, &[3]));
        assert!(mub(&FinitePoset::antichain(2), &set(2, &[0, 1])).is_empty());
        let props = mub_properties(&diamond(), &caps).unwrap();
        assert!(props.property_m && props.property_big_m);
    }

    #[test]
    fn special_element_examples() {
        let caps = Caps::default();
        let s = special_elements(&diamond(), &caps).unwrap();
        assert_eq!(s.down_linear, set(4, &[0, 1, 2]));
        assert_eq!(s.quasicontinuous, set(4, &[0, 1, 2, 3]));
        let s = special_elements(&FinitePoset::chain(3), &caps).unwrap();
        assert!(s.down_linear.is_full());
        let s = special_elements(&FinitePoset::antichain(2), &caps).unwrap();
        assert!(s.down_linear.is_full());
    }

    #[test]
    fn dl_sup_examples() {
        let caps = Caps::default();
        assert!(dl_sup_condition(&FinitePoset::chain(3), &caps).unwrap());
        assert!(!dl_sup_condition(&diamond(), &caps).unwrap());
        assert!(dl_sup_condition(&FinitePoset::antichain(2), &caps).unwrap());
        // Restricted to proper subsets the diamond passes: ↓3 is the carrier.
        assert!(dl_sup_condition_scoped(&diamond(), DlSupScope::Proper, &caps).unwrap());
        let v_under_top = FinitePoset::antichain(2).add_top().add_top();
        assert!(!dl_sup_condition_scoped(&v_under_top, DlSupScope::Proper, &caps).unwrap());
    }

    #[test]
    fn qc_generation_examples() {
        let caps = Caps::default();
        let both = QcGeneration {
            bounded_sober: true,
            qc_generated: true,
        };
        assert_eq!(qc_generation_condition(&diamond(), &caps).unwrap(), both);
        assert_eq!(qc_generation_condition(&FinitePoset::empty(), &caps).unwrap(), both);
    }

    #[test]
    fn small_scans() {
        let caps = Caps::default();
        let r = scl_faithful_scan(3, &caps).unwrap();
        assert_eq!(r.classes, 8);
        assert_eq!(r.pairs_checked, 36);
        assert_eq!(r.iso_pairs, 8);
        assert!(r.clean());
        let r = scl_faithful_scan(4, &caps).unwrap();
        assert_eq!(r.classes, 24);
        assert!(r.clean());
    }

    #[test]
    fn m_flat_examples() {
        let caps = Caps::default();
        assert_eq!(m_flat(&[], 3, &caps).unwrap().len(), 8);
        assert_eq!(m_flat(&[FinitePoset::chain(2)], 3, &caps).unwrap().len(), 8);
        let all = universe(3, &caps).unwrap();
        assert_eq!(m_flat(&all, 3, &caps).unwrap().len(), 8);
        assert!(m_flat(&[FinitePoset::chain(4)], 3, &caps).is_err());
    }
}
