use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD: usize = 64;

/// A subset of a finite carrier `0..len`, stored as a bit vector.
///
/// Sets over different carriers never compare equal. The total order sorts by
/// carrier size, then cardinality, then by the numeric value of the bit vector
/// (element `i` contributes `2^i`), which is the order used for closed-set
/// families throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    len: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(len: usize) -> Self {
        ElementSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = Self::empty(len);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (len - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    pub fn singleton(len: usize, x: usize) -> Self {
        let mut set = Self::empty(len);
        set.insert(x);
        set
    }

    /// Builds a set from indices; panics on an index outside the carrier.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut set = Self::empty(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `len` bits of `mask` (`len <= 64`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "mask carrier too large");
        let mut set = Self::empty(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            set.words[0] = mask & keep;
        }
        set
    }

    /// Size of the carrier this set lives in.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.len, "index {x} outside carrier of size {}", self.len);
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.len {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> ElementSet {
        Self::full(self.len).difference(self)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Numeric value of the bit vector, compared most significant word first.
    fn cmp_value(&self, other: &ElementSet) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.count().cmp(&other.count()))
            .then_with(|| self.cmp_value(other))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// All subsets of `0..len`, in increasing mask order. Callers check the cap.
pub(crate) fn all_subsets(len: usize) -> impl Iterator<Item = ElementSet> {
    assert!(len < WORD);
    (0..1u64 << len).map(move |mask| ElementSet::from_mask(len, mask))
}

/// All subsets of the given set.
pub(crate) fn subsets_of(set: &ElementSet) -> impl Iterator<Item = ElementSet> + '_ {
    let members = set.to_vec();
    assert!(members.len() < WORD);
    (0..1u64 << members.len()).map(move |mask| {
        let mut out = ElementSet::empty(set.universe());
        for (k, &x) in members.iter().enumerate() {
            if mask >> k & 1 == 1 {
                out.insert(x);
            }
        }
        out
    })
}
