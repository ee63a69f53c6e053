//! Brute-force oracles over plain boolean matrices and `u32` masks.
//!
//! Nothing here calls into the library's algorithms; the only bridge is
//! [`matrix`], which reads a poset through `leq`.

#![allow(dead_code)]

use dcpo_core::{ElementSet, FinitePoset};

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(p: &FinitePoset) -> Matrix {
    (0..p.size())
        .map(|x| (0..p.size()).map(|y| p.leq(x, y)).collect())
        .collect()
}

pub fn to_mask(set: &ElementSet) -> u32 {
    set.iter().fold(0, |m, i| m | 1 << i)
}

pub fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

fn is_transitive(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|a| (0..n).all(|b| !m[a][b] || (0..n).all(|c| !m[b][c] || m[a][c])))
}

/// Every partial order on `0..n`: each unordered pair is unrelated, `<` or
/// `>`, and only transitive assignments are kept.
pub fn labeled_posets(n: usize) -> Vec<Matrix> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m: Matrix = (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect();
        let mut c = code;
        for &(a, b) in &pairs {
            match c % 3 {
                1 => m[a][b] = true,
                2 => m[b][a] = true,
                _ => {}
            }
            c /= 3;
        }
        if is_transitive(&m) {
            out.push(m);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for slot in 0..n {
            let mut p = perm.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

fn preserves(a: &Matrix, b: &Matrix, f: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|x| (0..n).all(|y| a[x][y] == b[f[x]][f[y]]))
}

pub fn isomorphic(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len() && permutations(a.len()).iter().any(|f| preserves(a, b, f))
}

pub fn automorphisms(a: &Matrix) -> usize {
    permutations(a.len()).iter().filter(|f| preserves(a, a, f)).count()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn is_lower(m: &Matrix, mask: u32) -> bool {
    let n = m.len();
    (0..n).all(|y| mask >> y & 1 == 0 || (0..n).all(|x| !m[x][y] || mask >> x & 1 == 1))
}

pub fn lower_sets(m: &Matrix) -> Vec<u32> {
    (0..1u32 << m.len()).filter(|&s| is_lower(m, s)).collect()
}

pub fn down(m: &Matrix, x: usize) -> u32 {
    (0..m.len()).filter(|&y| m[y][x]).fold(0, |s, y| s | 1 << y)
}

pub fn up_of_set(m: &Matrix, mask: u32) -> u32 {
    let n = m.len();
    (0..n)
        .filter(|&y| members(mask).any(|x| m[x][y]))
        .fold(0, |s, y| s | 1 << y)
}

/// Nonempty, and every two members have an upper bound inside.
pub fn is_directed(m: &Matrix, mask: u32) -> bool {
    mask != 0
        && members(mask).all(|a| {
            members(mask).all(|b| members(mask).any(|c| m[a][c] && m[b][c]))
        })
}

/// Least upper bound in the whole poset, if any.
pub fn sup(m: &Matrix, mask: u32) -> Option<usize> {
    let n = m.len();
    let ub: Vec<usize> = (0..n).filter(|&u| members(mask).all(|x| m[x][u])).collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| m[u][v]))
}

/// Irreducible in the family of closed sets `closed`: nonempty and not
/// contained in a union of two closed sets without being inside one.
pub fn irreducible(closed: &[u32], f: u32) -> bool {
    f != 0
        && closed.iter().all(|&a| {
            closed
                .iter()
                .all(|&b| f & !(a | b) != 0 || f & !a == 0 || f & !b == 0)
        })
}

/// The beneath relation on a family of sets closed under union, by
/// quantifying over every nonempty down-closed subfamily `S`.
/// `result[x][y]` holds iff `family[x] ≺ family[y]`.
pub fn beneath_relation(family: &[u32]) -> Vec<Vec<bool>> {
    let k = family.len();
    assert!(k <= 20, "family too large for the brute-force oracle");
    let mut result = vec![vec![true; k]; k];
    for s in 1u32..1 << k {
        let lower = (0..k).all(|i| {
            s >> i & 1 == 0 || (0..k).all(|j| family[j] & !family[i] != 0 || s >> j & 1 == 1)
        });
        if !lower {
            continue;
        }
        let join = (0..k).filter(|&i| s >> i & 1 == 1).fold(0, |u, i| u | family[i]);
        for y in (0..k).filter(|&y| family[y] & !join == 0) {
            for x in (0..k).filter(|&x| s >> x & 1 == 0) {
                result[x][y] = false;
            }
        }
    }
    result
}
