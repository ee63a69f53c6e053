//! Finite posets stored as bit matrices.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::ElementSet;
use crate::error::{Error, Result};

/// Which closure [`FinitePoset::down_set`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// A partial order on the dense carrier `0..size`.
///
/// Row `up[x]` holds `{y : x <= y}` and row `down[x]` holds `{y : y <= x}`;
/// both are kept so that up- and down-closures are a union of rows. Values
/// are immutable once constructed and every constructor validates the
/// reflexive, antisymmetric and transitive laws.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    size: usize,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

/// An induced sub-poset together with the original indices of its elements.
///
/// Element `i` of `poset` is element `elements[i]` of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPoset {
    pub elements: Vec<usize>,
    pub poset: FinitePoset,
}

impl SubPoset {
    pub fn index_of(&self, parent_element: usize) -> Option<usize> {
        self.elements.binary_search(&parent_element).ok()
    }
}

impl FinitePoset {
    /// The poset with no elements.
    pub fn empty() -> Self {
        FinitePoset {
            size: 0,
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    /// Reflexive-transitive closure of `covers`, where `(a, b)` means `a < b`.
    pub fn build(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up: Vec<ElementSet> = (0..size).map(|x| ElementSet::singleton(size, x)).collect();
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            up[a].insert(b);
        }
        // Warshall over bit rows.
        for k in 0..size {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for a in 0..size {
            for b in up[a].iter().filter(|&b| b > a) {
                if up[b].contains(a) {
                    return Err(Error::Cycle(a, b));
                }
            }
        }
        Ok(Self::from_up_rows(up))
    }

    /// Takes `leq` as the complete order relation and checks the poset laws.
    pub fn from_relation(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let up: Vec<ElementSet> = (0..size)
            .map(|x| ElementSet::from_indices(size, (0..size).filter(|&y| leq(x, y))))
            .collect();
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::NotAPartialOrder("relation is not reflexive"));
            }
            for y in row.iter().filter(|&y| y != x) {
                if up[y].contains(x) {
                    return Err(Error::NotAPartialOrder("relation is not antisymmetric"));
                }
                if !up[y].is_subset(row) {
                    return Err(Error::NotAPartialOrder("relation is not transitive"));
                }
            }
        }
        Ok(Self::from_up_rows(up))
    }

    fn from_up_rows(up: Vec<ElementSet>) -> Self {
        let size = up.len();
        let mut down: Vec<ElementSet> = (0..size).map(|_| ElementSet::empty(size)).collect();
        for (x, row) in up.iter().enumerate() {
            for y in row {
                down[y].insert(x);
            }
        }
        FinitePoset { size, up, down }
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x <= y).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x == y).expect("antichain is a poset")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// The whole carrier as a set.
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `↑x`
    pub fn up_of(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    /// `↓x`
    pub fn down_of(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    pub fn check_set(&self, set: &ElementSet) -> Result<()> {
        if set.universe() != self.size {
            return Err(Error::IndexOutOfRange {
                index: set.universe(),
                size: self.size,
            });
        }
        Ok(())
    }

    /// `↓A` or `↑A`.
    pub fn down_set(&self, set: &ElementSet, direction: Direction) -> ElementSet {
        let rows = match direction {
            Direction::Down => &self.down,
            Direction::Up => &self.up,
        };
        let mut out = ElementSet::empty(self.size);
        for x in set {
            out.union_with(&rows[x]);
        }
        out
    }

    pub fn is_lower_set(&self, set: &ElementSet) -> bool {
        set.iter().all(|x| self.down[x].is_subset(set))
    }

    pub fn is_upper_set(&self, set: &ElementSet) -> bool {
        set.iter().all(|x| self.up[x].is_subset(set))
    }

    /// Every pair of members has an upper bound inside the set. Nonempty
    /// sets only; the empty set is not directed.
    pub fn is_directed(&self, set: &ElementSet) -> bool {
        if set.is_empty() {
            return false;
        }
        let members = set.to_vec();
        members.iter().enumerate().all(|(i, &x)| {
            members[i + 1..].iter().all(|&y| {
                let mut common = self.up[x].intersection(&self.up[y]);
                common.intersect_with(set);
                !common.is_empty()
            })
        })
    }

    /// Supremum of a directed set, which in a finite poset is its greatest member.
    pub fn directed_sup(&self, set: &ElementSet) -> Result<usize> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::Empty);
        }
        if !self.is_directed(set) {
            return Err(Error::NotDirected);
        }
        self.greatest(set).ok_or(Error::NotDirected)
    }

    /// All pairs of members are comparable.
    pub fn is_chain(&self, set: &ElementSet) -> bool {
        let members = set.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    pub fn upper_bounds(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.carrier();
        for x in set {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    pub fn lower_bounds(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.carrier();
        for x in set {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// Minimal members of `set`.
    pub fn minimal(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.size,
            set.iter()
                .filter(|&x| self.down[x].intersection(set).count() == 1),
        )
    }

    /// Maximal members of `set`.
    pub fn maximal(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.size,
            set.iter().filter(|&x| self.up[x].intersection(set).count() == 1),
        )
    }

    pub fn greatest(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(&self.down[x]))
    }

    pub fn least(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(&self.up[x]))
    }

    /// Least upper bound, when it exists.
    pub fn supremum(&self, set: &ElementSet) -> Option<usize> {
        self.least(&self.upper_bounds(set))
    }

    /// Greatest lower bound, when it exists.
    pub fn infimum(&self, set: &ElementSet) -> Option<usize> {
        self.greatest(&self.lower_bounds(set))
    }

    pub fn lower_covers(&self, x: usize) -> ElementSet {
        let mut strict = self.down[x].clone();
        strict.remove(x);
        self.maximal(&strict)
    }

    pub fn upper_covers(&self, x: usize) -> ElementSet {
        let mut strict = self.up[x].clone();
        strict.remove(x);
        self.minimal(&strict)
    }

    /// Hasse diagram edges `(a, b)` with `a` covered by `b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| self.upper_covers(a).iter().map(move |b| (a, b)).collect::<Vec<_>>())
            .collect()
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = alloc::vec![0usize; self.size];
        for x in self.linear_extension() {
            height[x] = self
                .lower_covers(x)
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Length of the longest chain starting at each element.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = alloc::vec![0usize; self.size];
        for x in self.linear_extension().into_iter().rev() {
            depth[x] = self
                .upper_covers(x)
                .iter()
                .map(|y| depth[y] + 1)
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| (self.down[x].count(), x));
        order
    }

    /// `P*`: a copy of `P` with one new element (index `size`) above everything.
    pub fn add_top(&self) -> Self {
        let n = self.size + 1;
        Self::from_relation(n, |x, y| y == self.size || (x < self.size && self.leq(x, y)))
            .expect("adding a top preserves the poset laws")
    }

    /// The sub-poset induced on `set`.
    pub fn induced(&self, set: &ElementSet) -> SubPoset {
        let elements = set.to_vec();
        let poset = Self::from_relation(elements.len(), |i, j| self.leq(elements[i], elements[j]))
            .expect("induced order is a partial order");
        SubPoset { elements, poset }
    }

    /// Renames element `x` to `perm[x]`; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.size);
        let mut inverse = alloc::vec![usize::MAX; self.size];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        Self::from_relation(self.size, |a, b| self.leq(inverse[a], inverse[b]))
            .expect("relabeling preserves the poset laws")
    }

    /// The order-dual poset.
    pub fn dual(&self) -> Self {
        FinitePoset {
            size: self.size,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// All lower sets, sorted by (cardinality, bit value).
    ///
    /// Fails with `BoundExceeded` once more than `cap` sets would be produced.
    pub fn lower_sets(&self, cap: usize) -> Result<Vec<ElementSet>> {
        let order = self.linear_extension();
        let strict_below: Vec<ElementSet> = (0..self.size)
            .map(|x| {
                let mut s = self.down[x].clone();
                s.remove(x);
                s
            })
            .collect();
        let mut out = Vec::new();
        let mut current = ElementSet::empty(self.size);
        self.lower_sets_from(&order, &strict_below, 0, &mut current, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn lower_sets_from(
        &self,
        order: &[usize],
        strict_below: &[ElementSet],
        pos: usize,
        current: &mut ElementSet,
        out: &mut Vec<ElementSet>,
        cap: usize,
    ) -> Result<()> {
        if pos == order.len() {
            Error::check_cap("closed-set family size", out.len() + 1, cap)?;
            out.push(current.clone());
            return Ok(());
        }
        let x = order[pos];
        self.lower_sets_from(order, strict_below, pos + 1, current, out, cap)?;
        if strict_below[x].is_subset(current) {
            current.insert(x);
            self.lower_sets_from(order, strict_below, pos + 1, current, out, cap)?;
            current.remove(x);
        }
        Ok(())
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePoset({}; ", self.size)?;
        f.debug_list().entries(self.covers()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn diamond() -> FinitePoset {
        FinitePoset::build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn build_examples() {
        let c2 = FinitePoset::build(2, &[(0, 1)]).unwrap();
        assert!(c2.leq(0, 1) && !c2.leq(1, 0));
        assert_eq!(c2, FinitePoset::chain(2));
        let a2 = FinitePoset::build(2, &[]).unwrap();
        assert_eq!(a2, FinitePoset::antichain(2));
        let d4 = diamond();
        assert!(d4.leq(0, 3), "closure forced");
        assert!(!d4.comparable(1, 2));
        assert_eq!(d4.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            FinitePoset::build(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
        assert_eq!(
            FinitePoset::build(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cycle(0, 1))
        );
        assert!(FinitePoset::from_relation(2, |x, y| x != y || x == 0).is_err());
    }

    #[test]
    fn down_and_up_sets() {
        let d4 = diamond();
        assert_eq!(d4.down_set(&set(4, &[3]), Direction::Down), set(4, &[0, 1, 2, 3]));
        assert_eq!(d4.down_set(&set(4, &[1]), Direction::Down), set(4, &[0, 1]));
        let a2 = FinitePoset::antichain(2);
        assert_eq!(a2.down_set(&set(2, &[0]), Direction::Up), set(2, &[0]));
    }

    #[test]
    fn directed_sups() {
        let c2 = FinitePoset::chain(2);
        assert_eq!(c2.directed_sup(&set(2, &[0, 1])), Ok(1));
        let d4 = diamond();
        assert_eq!(d4.directed_sup(&set(4, &[0, 1])), Ok(1));
        assert_eq!(d4.directed_sup(&set(4, &[1, 2])), Err(Error::NotDirected));
        assert_eq!(d4.directed_sup(&set(4, &[])), Err(Error::Empty));
    }

    #[test]
    fn chains() {
        assert!(FinitePoset::chain(2).is_chain(&set(2, &[0, 1])));
        assert!(!diamond().is_chain(&set(4, &[1, 2])));
        assert!(diamond().is_chain(&set(4, &[])));
    }

    #[test]
    fn add_top_examples() {
        let v = FinitePoset::antichain(2).add_top();
        assert_eq!(v, FinitePoset::build(3, &[(0, 2), (1, 2)]).unwrap());
        assert_eq!(FinitePoset::chain(2).add_top(), FinitePoset::chain(3));
        assert_eq!(FinitePoset::empty().add_top(), FinitePoset::chain(1));
    }

    #[test]
    fn lower_sets_of_diamond() {
        let sets: Vec<Vec<usize>> = diamond()
            .lower_sets(usize::MAX)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![vec![], vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2], vec![0, 1, 2, 3]]
        );
        assert!(matches!(
            FinitePoset::antichain(5).lower_sets(31),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn heights_and_relabel() {
        let d4 = diamond();
        assert_eq!(d4.heights(), vec![0, 1, 1, 2]);
        assert_eq!(d4.depths(), vec![2, 1, 1, 0]);
        let r = d4.relabel(&[3, 1, 2, 0]);
        assert!(r.leq(3, 0) && r.leq(1, 0));
        assert_eq!(r.dual(), d4.relabel(&[0, 1, 2, 3]));
    }

    #[test]
    fn induced_down_set() {
        let d4 = diamond();
        let sub = d4.induced(d4.down_of(1));
        assert_eq!(sub.elements, vec![0, 1]);
        assert_eq!(sub.poset, FinitePoset::chain(2));
        assert_eq!(sub.index_of(1), Some(1));
    }
}
