//! Finite lattices, Birkhoff's join-irreducibles and the beneath relation.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::ElementSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::iso::{poset_isomorphism, OrderIsomorphism};
use crate::poset::{FinitePoset, SubPoset};
use crate::topology::ClosedFamily;

/// A finite lattice with precomputed meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    order: FinitePoset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// An order isomorphism between two lattices; it preserves meets and joins.
pub type LatticeIsomorphism = OrderIsomorphism;

impl FiniteLattice {
    /// Checks that every pair has a supremum and an infimum in `order`.
    pub fn from_poset(order: FinitePoset) -> Result<Self> {
        let n = order.size();
        if n == 0 {
            return Err(Error::NotALattice("the empty poset has no bottom"));
        }
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let pair = ElementSet::from_indices(n, [a, b]);
                let j = order
                    .supremum(&pair)
                    .ok_or(Error::NotALattice("a pair has no least upper bound"))?;
                let m = order
                    .infimum(&pair)
                    .ok_or(Error::NotALattice("a pair has no greatest lower bound"))?;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
            }
        }
        let carrier = order.carrier();
        let bottom = order.least(&carrier).ok_or(Error::NotALattice("no bottom"))?;
        let top = order.greatest(&carrier).ok_or(Error::NotALattice("no top"))?;
        Ok(FiniteLattice {
            order,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a set of elements; the join of the empty set is the bottom.
    pub fn join_all(&self, set: &ElementSet) -> usize {
        set.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn boolean(atoms: usize) -> Self {
        assert!(atoms < 16);
        let n = 1usize << atoms;
        let order = FinitePoset::from_relation(n, |a, b| a & !b == 0).expect("subset order");
        Self::from_poset(order).expect("power set is a lattice")
    }

    pub fn chain(n: usize) -> Self {
        Self::from_poset(FinitePoset::chain(n)).expect("nonempty chain is a lattice")
    }
}

/// `C_σ(P)` as an abstract lattice: inclusion order, union as join and
/// intersection as meet. Element `i` is `family.members()[i]`.
pub fn lattice_of(family: &ClosedFamily) -> Result<FiniteLattice> {
    let members = family.members();
    let n = members.len();
    if n == 0 {
        return Err(Error::NotALattice("empty family"));
    }
    let order = FinitePoset::from_relation(n, |i, j| members[i].is_subset(&members[j]))?;
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let u = family
                .index_of(&members[a].union(&members[b]))
                .ok_or(Error::NotALattice("family is not closed under union"))?;
            let m = family
                .index_of(&members[a].intersection(&members[b]))
                .ok_or(Error::NotALattice("family is not closed under intersection"))?;
            join[a * n + b] = u as u32;
            join[b * n + a] = u as u32;
            meet[a * n + b] = m as u32;
            meet[b * n + a] = m as u32;
        }
    }
    let carrier = order.carrier();
    let bottom = order.least(&carrier).ok_or(Error::NotALattice("no bottom"))?;
    let top = order.greatest(&carrier).ok_or(Error::NotALattice("no top"))?;
    Ok(FiniteLattice {
        order,
        meet,
        join,
        bottom,
        top,
    })
}

/// Lattice isomorphism; an order isomorphism suffices.
pub fn lattice_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<LatticeIsomorphism> {
    poset_isomorphism(&a.order, &b.order)
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
pub fn is_distributive(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))
        })
    })
}

/// Elements with exactly one lower cover, as an induced sub-poset.
pub fn join_irreducibles(l: &FiniteLattice) -> SubPoset {
    let ji = ElementSet::from_indices(
        l.size(),
        (0..l.size()).filter(|&x| x != l.bottom && l.order.lower_covers(x).count() == 1),
    );
    l.order.induced(&ji)
}

/// The full beneath relation of a lattice, computed by enumerating every
/// nonempty lower set `S` of `L` together with its join.
#[derive(Debug, Clone)]
pub struct BeneathRelation {
    /// `witnessed[y]` is the intersection of all nonempty lower sets `S`
    /// with `y ≤ ⋁S`; `x ≺ y` iff `x ∈ witnessed[y]`.
    witnessed: Vec<ElementSet>,
}

impl BeneathRelation {
    pub fn compute(l: &FiniteLattice, caps: &Caps) -> Result<Self> {
        let n = l.size();
        Error::check_cap("beneath lattice size", n, caps.beneath_max)?;
        let mut witnessed = vec![ElementSet::full(n); n];
        for s in l.order.lower_sets(usize::MAX)? {
            if s.is_empty() {
                continue;
            }
            let sup = l.join_all(&s);
            for y in l.order.down_of(sup) {
                witnessed[y].intersect_with(&s);
            }
        }
        Ok(BeneathRelation { witnessed })
    }

    pub fn beneath(&self, x: usize, y: usize) -> bool {
        self.witnessed[y].contains(x)
    }

    /// `κ(L)`, all elements beneath themselves.
    pub fn c_compact(&self) -> ElementSet {
        let n = self.witnessed.len();
        ElementSet::from_indices(n, (0..n).filter(|&x| self.beneath(x, x)))
    }
}

pub fn beneath(l: &FiniteLattice, x: usize, y: usize, caps: &Caps) -> Result<bool> {
    Ok(BeneathRelation::compute(l, caps)?.beneath(x, y))
}

pub fn c_compact_elements(l: &FiniteLattice, caps: &Caps) -> Result<ElementSet> {
    Ok(BeneathRelation::compute(l, caps)?.c_compact())
}

/// `a ≤ x ∨ y` implies `a ≤ x` or `a ≤ y`.
pub fn is_vee_irreducible(l: &FiniteLattice, a: usize) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| !l.leq(a, l.join(x, y)) || l.leq(a, x) || l.leq(a, y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::scott_closed_family;

    fn diamond() -> FinitePoset {
        FinitePoset::build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn m3() -> FiniteLattice {
        let p = FinitePoset::build(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        FiniteLattice::from_poset(p).unwrap()
    }

    fn csigma(p: &FinitePoset) -> FiniteLattice {
        lattice_of(&scott_closed_family(p, &Caps::default()).unwrap()).unwrap()
    }

    #[test]
    fn lattice_of_examples() {
        let a2 = csigma(&FinitePoset::antichain(2));
        assert!(lattice_isomorphic(&a2, &FiniteLattice::boolean(2)).is_some());
        let c2 = csigma(&FinitePoset::chain(2));
        assert!(lattice_isomorphic(&c2, &FiniteLattice::chain(3)).is_some());
        let d4 = csigma(&diamond());
        assert_eq!(d4.size(), 6);
        assert_eq!(d4.bottom(), 0);
        assert_eq!(d4.top(), 5);
        // {0,1} ∨ {0,2} = {0,1,2}
        assert_eq!(d4.join(2, 3), 4);
        assert_eq!(d4.meet(2, 3), 1);
    }

    #[test]
    fn not_a_lattice() {
        assert!(FiniteLattice::from_poset(FinitePoset::antichain(2)).is_err());
        assert!(FiniteLattice::from_poset(FinitePoset::empty()).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let b = FiniteLattice::boolean(2);
        assert!(lattice_isomorphic(&b, &b).is_some());
        assert!(lattice_isomorphic(&FiniteLattice::chain(3), &b).is_none());
        let d4 = csigma(&diamond());
        let relabeled =
            FiniteLattice::from_poset(d4.order().relabel(&[5, 3, 4, 1, 2, 0])).unwrap();
        let iso = lattice_isomorphic(&d4, &relabeled).unwrap();
        assert!(iso.verify(d4.order(), relabeled.order()));
    }

    #[test]
    fn distributivity() {
        assert!(is_distributive(&FiniteLattice::boolean(2)));
        assert!(!is_distributive(&m3()));
        assert!(is_distributive(&csigma(&diamond())));
    }

    #[test]
    fn join_irreducible_examples() {
        let ji = join_irreducibles(&FiniteLattice::boolean(2));
        assert_eq!(ji.poset, FinitePoset::antichain(2));
        let ji = join_irreducibles(&FiniteLattice::chain(3));
        assert_eq!(ji.poset, FinitePoset::chain(2));
        let ji = join_irreducibles(&csigma(&diamond()));
        assert!(poset_isomorphism(&ji.poset, &diamond()).is_some());
    }

    #[test]
    fn beneath_examples() {
        let caps = Caps::default();
        // 3-chain {∅,{0},{0,1}}
        let c = csigma(&FinitePoset::chain(2));
        assert!(beneath(&c, 1, 2, &caps).unwrap());
        let b = csigma(&FinitePoset::antichain(2));
        assert!(!beneath(&b, b.top(), b.top(), &caps).unwrap());
        for l in [&c, &b, &m3()] {
            for y in 0..l.size() {
                assert!(beneath(l, l.bottom(), y, &caps).unwrap());
            }
        }
        let big = FiniteLattice::boolean(5);
        assert!(matches!(
            c_compact_elements(&big, &caps),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn c_compact_examples() {
        let caps = Caps::default();
        let kappa = |p: &FinitePoset| {
            let family = scott_closed_family(p, &caps).unwrap();
            let l = lattice_of(&family).unwrap();
            let k = c_compact_elements(&l, &caps).unwrap();
            k.iter().map(|i| family.members()[i].to_vec()).collect::<Vec<_>>()
        };
        assert_eq!(kappa(&FinitePoset::antichain(2)), vec![vec![], vec![0], vec![1]]);
        assert_eq!(kappa(&FinitePoset::chain(2)), vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(
            kappa(&diamond()),
            vec![vec![], vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn vee_irreducibility() {
        let b = FiniteLattice::boolean(2);
        assert!(is_vee_irreducible(&b, 1));
        assert!(!is_vee_irreducible(&b, b.top()));
        assert!(is_vee_irreducible(&m3(), m3().bottom()));
        assert!(is_vee_irreducible(&b, b.bottom()));
    }
}
