//! Exact order-isomorphism testing.
//!
//! Vertices of both posets are coloured jointly by iterated refinement of
//! (down-set size, up-set size, cover counts, height, depth); the colour
//! histograms must agree, and a backtracking search then assigns vertices
//! inside each colour class while checking the order relation in both
//! directions against every earlier assignment.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::FinitePoset;

/// A bijection `forward` from the carrier of one poset onto another that
/// preserves and reflects the order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrderIsomorphism {
    pub forward: Vec<usize>,
}

impl OrderIsomorphism {
    pub fn identity(n: usize) -> Self {
        OrderIsomorphism {
            forward: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.forward[x]
    }

    pub fn inverse(&self) -> Self {
        let mut backward = vec![0; self.forward.len()];
        for (x, &y) in self.forward.iter().enumerate() {
            backward[y] = x;
        }
        OrderIsomorphism { forward: backward }
    }

    /// Checks that this map really is an order isomorphism `p -> q`.
    pub fn verify(&self, p: &FinitePoset, q: &FinitePoset) -> bool {
        let n = p.size();
        if q.size() != n || self.forward.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.forward {
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(self.forward[a], self.forward[b])))
    }
}

/// Decides `p ≅ q`, returning a witness when one exists.
pub fn poset_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<OrderIsomorphism> {
    let n = p.size();
    if q.size() != n {
        return None;
    }
    if n == 0 {
        return Some(OrderIsomorphism::identity(0));
    }
    let (colors_p, colors_q) = joint_colors(p, q)?;

    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors_p {
        *class_size.entry(c).or_default() += 1;
    }
    // Small colour classes first; ties broken by height so earlier choices
    // constrain later ones through comparabilities.
    let heights = p.heights();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (class_size[&colors_p[x]], colors_p[x], heights[x], x));

    let mut candidates: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (y, &c) in colors_q.iter().enumerate() {
        candidates.entry(c).or_default().push(y);
    }

    let mut search = Search {
        p,
        q,
        order: &order,
        colors_p: &colors_p,
        candidates: &candidates,
        forward: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Some(OrderIsomorphism {
            forward: search.forward,
        })
    } else {
        None
    }
}

struct Search<'a> {
    p: &'a FinitePoset,
    q: &'a FinitePoset,
    order: &'a [usize],
    colors_p: &'a [u32],
    candidates: &'a BTreeMap<u32, Vec<usize>>,
    forward: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let pool = &self.candidates[&self.colors_p[x]];
        for &y in pool {
            if self.used[y] || !self.consistent(depth, x, y) {
                continue;
            }
            self.forward[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[y] = false;
            self.forward[x] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let v = self.forward[u];
            self.p.leq(u, x) == self.q.leq(v, y) && self.p.leq(x, u) == self.q.leq(y, v)
        })
    }
}

type Signature = (u32, Vec<u32>, Vec<u32>);

/// Colour refinement run on both posets with a shared colour dictionary.
/// Returns `None` as soon as the colour histograms differ.
fn joint_colors(p: &FinitePoset, q: &FinitePoset) -> Option<(Vec<u32>, Vec<u32>)> {
    let base = |poset: &FinitePoset| -> Vec<[usize; 6]> {
        let heights = poset.heights();
        let depths = poset.depths();
        (0..poset.size())
            .map(|x| {
                [
                    poset.down_of(x).count(),
                    poset.up_of(x).count(),
                    poset.lower_covers(x).count(),
                    poset.upper_covers(x).count(),
                    heights[x],
                    depths[x],
                ]
            })
            .collect()
    };
    let (bp, bq) = (base(p), base(q));
    let mut dict: BTreeMap<[usize; 6], u32> = BTreeMap::new();
    for key in bp.iter().chain(&bq) {
        let next = dict.len() as u32;
        dict.entry(*key).or_insert(next);
    }
    // Renumber by sorted key so colour ids do not depend on input labels.
    for (i, v) in dict.values_mut().enumerate() {
        *v = i as u32;
    }
    let mut cp: Vec<u32> = bp.iter().map(|k| dict[k]).collect();
    let mut cq: Vec<u32> = bq.iter().map(|k| dict[k]).collect();
    let mut classes = dict.len();

    loop {
        if histogram(&cp) != histogram(&cq) {
            return None;
        }
        let sig = |poset: &FinitePoset, colors: &[u32]| -> Vec<Signature> {
            (0..poset.size())
                .map(|x| {
                    let mut below: Vec<u32> = poset
                        .down_of(x)
                        .iter()
                        .filter(|&y| y != x)
                        .map(|y| colors[y])
                        .collect();
                    let mut above: Vec<u32> = poset
                        .up_of(x)
                        .iter()
                        .filter(|&y| y != x)
                        .map(|y| colors[y])
                        .collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    (colors[x], below, above)
                })
                .collect()
        };
        let (sp, sq) = (sig(p, &cp), sig(q, &cq));
        let mut dict: BTreeMap<&Signature, u32> = BTreeMap::new();
        for s in sp.iter().chain(&sq) {
            dict.insert(s, 0);
        }
        for (i, v) in dict.values_mut().enumerate() {
            *v = i as u32;
        }
        let np: Vec<u32> = sp.iter().map(|s| dict[s]).collect();
        let nq: Vec<u32> = sq.iter().map(|s| dict[s]).collect();
        let refined = dict.len();
        cp = np;
        cq = nq;
        if refined == classes {
            break;
        }
        classes = refined;
    }
    if histogram(&cp) != histogram(&cq) {
        return None;
    }
    Some((cp, cq))
}

fn histogram(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}
