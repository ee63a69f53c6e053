//! Canonical forms and enumeration of posets up to isomorphism.
//!
//! The canonical form of a poset is the relabeling whose comparability
//! matrix is lexicographically smallest among relabelings that list
//! elements block by block, blocks sorted by
//! `(in-degree, out-degree, height)`. Matrix entries are read in the order
//! of a growing top-left square: when position `k` is placed, the entries
//! `(i, k)` and `(k, i)` for `i < k` are appended. Every prefix of the code
//! is then fixed by the first positions alone, which lets the permutation
//! search prune.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Canonical comparability code; equal codes means isomorphic posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub size: usize,
    pub bits: u64,
}

/// Canonical code together with the canonically relabeled poset.
pub fn canonical_form(p: &FinitePoset) -> Result<(CanonicalCode, FinitePoset)> {
    let n = p.size();
    Error::check_cap("canonical form size", n, Caps::ENUMERATION_CEILING)?;
    let heights = p.heights();
    let key = |x: usize| {
        (
            p.down_of(x).count() - 1,
            p.up_of(x).count() - 1,
            heights[x],
        )
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&x| (key(x), x));
    // block_of[k]: the set of vertices allowed at position k.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for &x in &vertices {
        if last != Some(key(x)) {
            blocks.push(Vec::new());
            last = Some(key(x));
        }
        blocks.last_mut().unwrap().push(x);
    }
    let allowed: Vec<&Vec<usize>> = blocks
        .iter()
        .flat_map(|b| core::iter::repeat_n(b, b.len()))
        .collect();

    let total_bits = n * n.saturating_sub(1);
    let mut search = CanonSearch {
        p,
        allowed: &allowed,
        total_bits,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0);
    let (bits, perm) = search.best.expect("at least one permutation");
    let mut relabel = vec![0; n];
    for (position, &x) in perm.iter().enumerate() {
        relabel[x] = position;
    }
    Ok((CanonicalCode { size: n, bits }, p.relabel(&relabel)))
}

struct CanonSearch<'a> {
    p: &'a FinitePoset,
    allowed: &'a [&'a Vec<usize>],
    total_bits: usize,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, k: usize, prefix: u64) {
        if k == self.allowed.len() {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        for &v in self.allowed[k] {
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.perm {
                code = code << 1 | self.p.leq(u, v) as u64;
                code = code << 1 | self.p.leq(v, u) as u64;
            }
            let len = (k + 1) * k;
            if let Some((best, _)) = &self.best {
                let shift = self.total_bits - len;
                if code > best >> shift {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            self.run(k + 1, code);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

/// One canonical representative per isomorphism class of `n`-element posets,
/// sorted by canonical code.
pub fn enumerate_posets(n: usize, caps: &Caps) -> Result<Vec<FinitePoset>> {
    Ok(enumerate_up_to(n, caps)?.pop().unwrap_or_default())
}

/// Representatives for every size `0..=n`; entry `k` holds the `k`-element classes.
pub fn enumerate_up_to(n: usize, caps: &Caps) -> Result<Vec<Vec<FinitePoset>>> {
    let cap = caps.enumeration_max.min(Caps::ENUMERATION_CEILING);
    Error::check_cap("enumeration size", n, cap)?;
    let mut levels = vec![vec![FinitePoset::empty()]];
    for size in 1..=n {
        let mut found: BTreeMap<CanonicalCode, FinitePoset> = BTreeMap::new();
        for rep in &levels[size - 1] {
            // Every poset arises from a smaller one by adding a maximal
            // element whose strict down-set is some lower set.
            for below in rep.lower_sets(usize::MAX)? {
                let old = rep.size();
                let grown = FinitePoset::from_relation(size, |x, y| {
                    if y == old {
                        x == old || below.contains(x)
                    } else {
                        x != old && rep.leq(x, y)
                    }
                })?;
                let (code, canon) = canonical_form(&grown)?;
                found.entry(code).or_insert(canon);
            }
        }
        levels.push(found.into_values().collect());
    }
    Ok(levels)
}

/// The scan universe: canonical representatives of every size `1..=n`,
/// smaller sizes first.
pub fn universe(n: usize, caps: &Caps) -> Result<Vec<FinitePoset>> {
    Ok(enumerate_up_to(n, caps)?
        .into_iter()
        .skip(1)
        .flatten()
        .collect())
}
