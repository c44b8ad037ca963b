//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use stanley_core::ideal::{irredundantize, Decomposition, IrreducibleComponent, MonomialIdeal, Ring};

/// Irredundant decomposition from raw exponent vectors (0 = absent).
pub fn decomposition(n: usize, comps: &[Vec<u32>]) -> Decomposition {
    let mut list: Vec<IrreducibleComponent> = Vec::new();
    for c in comps {
        let q = IrreducibleComponent::new(c.clone()).unwrap();
        if !list.contains(&q) {
            list.push(q);
        }
    }
    irredundantize(&Decomposition::new(Ring::new(n).unwrap(), list).unwrap())
}

/// Random decompositions: `n` in `1..=max_n`, up to `max_s` components with
/// exponents up to `max_e`.
pub fn arb_decomposition(max_n: usize, max_e: u32, max_s: usize) -> impl Strategy<Value = Decomposition> {
    (1..=max_n).prop_flat_map(move |n| {
        let comp = proptest::collection::vec(0..=max_e, n).prop_filter("nonempty support", |v| v.iter().any(|&e| e > 0));
        proptest::collection::vec(comp, 1..=max_s).prop_map(move |cs| decomposition(n, &cs))
    })
}

pub fn arb_squarefree(max_n: usize, max_s: usize) -> impl Strategy<Value = Decomposition> {
    arb_decomposition(max_n, 1, max_s)
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn in_ideal(ideal: &MonomialIdeal, m: &[u32]) -> bool {
    ideal.gens().iter().any(|g| divides(g.exponents(), m))
}

/// Box bound `g_j = max(deg_j, 1)` and the poset elements in lex order.
pub fn poset(ideal: &MonomialIdeal, quotient: bool) -> (Vec<u32>, Vec<Vec<u32>>) {
    let n = ideal.n();
    let g: Vec<u32> =
        (0..n).map(|j| ideal.gens().iter().map(|m| m.exponents()[j]).max().unwrap_or(0).max(1)).collect();
    let mut all = vec![vec![]];
    for &gj in &g {
        all = all.into_iter().flat_map(|p: Vec<u32>| (0..=gj).map(move |e| [p.clone(), vec![e]].concat())).collect();
    }
    let elems = all.into_iter().filter(|c| in_ideal(ideal, c) != quotient).collect();
    (g, elems)
}

/// Maximum over all interval partitions of the poset of the least number of
/// coordinates where an interval top reaches `g`. The lex-smallest uncovered
/// element is always the bottom of its interval, so branching on its top
/// enumerates every partition exactly once.
pub fn brute_sdepth(ideal: &MonomialIdeal, quotient: bool) -> usize {
    let (g, elems) = poset(ideal, quotient);
    fn go(g: &[u32], elems: &[Vec<u32>], used: &mut Vec<bool>, cur: usize) -> Option<usize> {
        let Some(i) = used.iter().position(|u| !u) else {
            return Some(cur);
        };
        let a = elems[i].clone();
        let mut best = None;
        for (k, b) in elems.iter().enumerate() {
            if !divides(&a, b) || used[k] {
                continue;
            }
            let inside: Vec<usize> =
                (0..elems.len()).filter(|&m| divides(&a, &elems[m]) && divides(&elems[m], b)).collect();
            let size: usize = a.iter().zip(b).map(|(x, y)| (y - x + 1) as usize).product();
            if inside.len() != size || inside.iter().any(|&m| used[m]) {
                continue;
            }
            let rho = b.iter().zip(g).filter(|(x, y)| x == y).count();
            if best.is_some_and(|v| rho <= v) {
                continue;
            }
            inside.iter().for_each(|&m| used[m] = true);
            if let Some(v) = go(g, elems, used, cur.min(rho)) {
                best = Some(best.map_or(v, |w: usize| w.max(v)));
            }
            inside.iter().for_each(|&m| used[m] = false);
        }
        best
    }
    let mut used = vec![false; elems.len()];
    go(&g, &elems, &mut used, usize::MAX).unwrap_or(usize::MAX)
}

/// Associated primes of an irredundant irreducible decomposition as bitmasks.
fn radicals(d: &Decomposition) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for q in d.components() {
        let m = q.powers().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (j, _)| acc | 1 << j);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// `n - h + r - 1` with `r` found over every subset of associated primes.
pub fn naive_size(d: &Decomposition) -> usize {
    let ps = radicals(d);
    let total = ps.iter().fold(0, |a, p| a | p);
    let r = (1u32..1 << ps.len())
        .filter(|mask| (0..ps.len()).filter(|i| mask >> i & 1 == 1).fold(0, |a, i| a | ps[i]) == total)
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap();
    d.n() - total.count_ones() as usize + r - 1
}

/// Sum of two irreducible ideals: the smaller power of each variable.
pub fn comp_sum(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| match (x, y) {
            (0, e) | (e, 0) => e,
            (x, y) => x.min(y),
        })
        .collect()
}

/// `big ⊇ small` for irreducible ideals.
pub fn contains(big: &[u32], small: &[u32]) -> bool {
    small.iter().zip(big).all(|(&s, &b)| s == 0 || (b > 0 && b <= s))
}

/// The bigsize recursion written directly from its definition.
pub fn naive_bigsize(n: usize, members: &[Vec<u32>]) -> usize {
    let t = members.len();
    let dim = |m: &Vec<u32>| n - m.iter().filter(|&&e| e > 0).count();
    if t == 1 {
        return dim(&members[0]);
    }
    let last = &members[t - 1];
    let sums: Vec<Vec<u32>> = members[..t - 1].iter().map(|m| comp_sum(last, m)).collect();
    let kept: Vec<Vec<u32>> = sums
        .iter()
        .enumerate()
        .filter(|(k, s)| {
            !sums.iter().enumerate().any(|(k2, o)| {
                k2 != *k && contains(s, o) && (*s != o || k2 < *k)
            })
        })
        .map(|(_, s)| s.clone())
        .collect();
    naive_bigsize(n, &members[..t - 1]).min(1 + naive_bigsize(n, &kept))
}

/// Generator-wise polarization with new variables appended in `(j, level)`
/// order: `x_j^a` becomes `x_j y_{j,2} ... y_{j,a}`. Returns the minimal
/// generators and the `(j, level)` of each new variable.
pub fn polarize_generators(ideal: &MonomialIdeal) -> (Vec<Vec<u32>>, Vec<(usize, u32)>) {
    let n = ideal.n();
    let mut levels = Vec::new();
    for j in 0..n {
        let deg = ideal.gens().iter().map(|m| m.exponents()[j]).max().unwrap_or(0);
        levels.extend((2..=deg).map(|l| (j, l)));
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|m| {
            let mut v = vec![0u32; n + levels.len()];
            for j in 0..n {
                let a = m.exponents()[j];
                if a > 0 {
                    v[j] = 1;
                }
                for (k, &(jj, l)) in levels.iter().enumerate() {
                    if jj == j && l <= a {
                        v[n + k] = 1;
                    }
                }
            }
            v
        })
        .collect();
    (gens, levels)
}
