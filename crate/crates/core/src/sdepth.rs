//! Exact Stanley depth through interval partitions of the characteristic
//! poset, and the splitting-of-variables lower bound for squarefree ideals.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{intersect, Decomposition, Monomial, MonomialIdeal, VarSet};

/// Default limit on the number of poset elements.
pub const DEFAULT_POSET_LIMIT: usize = 4096;

/// Hard limit on the bounding box that gets enumerated.
const BOX_LIMIT: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The ideal `I`.
    Ideal,
    /// The quotient `S/I`.
    Quotient,
}

/// Exponent vectors `a <= g` with `x^a` in `I` (ideal mode) or not in `I`
/// (quotient mode).
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    mode: Mode,
    g: Vec<u32>,
    strides: Vec<usize>,
    /// Box index to element rank, `u32::MAX` outside the poset.
    rank: Vec<u32>,
    /// Box indices of the elements, ascending (= lexicographic).
    elements: Vec<usize>,
}

impl CharacteristicPoset {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        self.elements.iter().map(|&i| self.decode(i)).collect()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        a.len() == self.n()
            && a.iter().zip(&self.g).all(|(x, g)| x <= g)
            && self.rank[self.encode(a)] != u32::MAX
    }

    /// Number of coordinates at their bound.
    pub fn rho(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.g).filter(|(x, g)| x == g).count()
    }

    fn encode(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum()
    }

    fn decode(&self, mut index: usize) -> Vec<u32> {
        self.strides
            .iter()
            .map(|&s| {
                let x = index / s;
                index %= s;
                x as u32
            })
            .collect()
    }

    /// Box indices of `[a, b]`, or `None` if some point is outside the poset.
    fn interval_ranks(&self, a: &[u32], b: &[u32]) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        let mut c = a.to_vec();
        loop {
            let r = self.rank[self.encode(&c)];
            if r == u32::MAX {
                return None;
            }
            out.push(r as usize);
            let mut j = self.n();
            loop {
                if j == 0 {
                    return Some(out);
                }
                j -= 1;
                if c[j] < b[j] {
                    c[j] += 1;
                    break;
                }
                c[j] = a[j];
            }
        }
    }
}

pub fn char_poset(ideal: &MonomialIdeal, mode: Mode) -> Result<CharacteristicPoset> {
    char_poset_with_limit(ideal, mode, DEFAULT_POSET_LIMIT)
}

pub fn char_poset_with_limit(ideal: &MonomialIdeal, mode: Mode, limit: usize) -> Result<CharacteristicPoset> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.n();
    let g: Vec<u32> = (0..n)
        .map(|j| ideal.gens().iter().map(|m| m.exponent(j)).max().unwrap_or(0).max(1))
        .collect();
    let mut strides = vec![1usize; n];
    let mut total: usize = 1;
    for j in (0..n).rev() {
        strides[j] = total;
        total = total
            .checked_mul(g[j] as usize + 1)
            .filter(|&t| t <= BOX_LIMIT)
            .ok_or(Error::BoundExceeded { what: "characteristic box", size: usize::MAX, limit: BOX_LIMIT })?;
    }
    let mut poset = CharacteristicPoset { mode, g, strides, rank: vec![u32::MAX; total], elements: Vec::new() };
    for index in 0..total {
        let inside = ideal.contains(&Monomial::new(poset.decode(index)));
        if inside == (mode == Mode::Ideal) {
            if poset.elements.len() == limit {
                // count the rest for the error message
                let rest = (index..total)
                    .filter(|&i| ideal.contains(&Monomial::new(poset.decode(i))) == (mode == Mode::Ideal))
                    .count();
                return Err(Error::BoundExceeded { what: "poset size", size: limit + rest, limit });
            }
            poset.rank[index] = poset.elements.len() as u32;
            poset.elements.push(index);
        }
    }
    Ok(poset)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// Disjoint intervals inside the poset covering every element.
    pub fn is_valid_for(&self, poset: &CharacteristicPoset) -> bool {
        let mut seen = vec![false; poset.len()];
        for iv in &self.intervals {
            if iv.a.len() != poset.n() || iv.b.len() != poset.n() {
                return false;
            }
            if iv.a.iter().zip(&iv.b).any(|(x, y)| x > y) || iv.b.iter().zip(&poset.g).any(|(y, g)| y > g) {
                return false;
            }
            let Some(ranks) = poset.interval_ranks(&iv.a, &iv.b) else {
                return false;
            };
            for r in ranks {
                if std::mem::replace(&mut seen[r], true) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Smallest `rho` over the tops.
    pub fn min_rho(&self, poset: &CharacteristicPoset) -> Option<usize> {
        self.intervals.iter().map(|iv| poset.rho(&iv.b)).min()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sdepth {
    pub value: usize,
    pub mode: Mode,
    pub poset_size: usize,
    pub partition: IntervalPartition,
}

pub fn sdepth_exact(ideal: &MonomialIdeal, mode: Mode) -> Result<Sdepth> {
    sdepth_with_limit(ideal, mode, DEFAULT_POSET_LIMIT)
}

pub fn sdepth_with_limit(ideal: &MonomialIdeal, mode: Mode, limit: usize) -> Result<Sdepth> {
    let poset = char_poset_with_limit(ideal, mode, limit)?;
    Ok(sdepth_of_poset(&poset))
}

/// The largest `k` admitting a partition with every top of `rho >= k`.
/// Tries `k = 0, 1, ...` and keeps the certificate of the last success;
/// a partition for `k` refines to one for every smaller `k`.
/// The interval holding `c` can reach `g_j` only if `c` with coordinate `j`
/// set to `g_j` is in the poset, so no partition beats the least such count.
pub fn rank_upper_bound(poset: &CharacteristicPoset) -> usize {
    let mut best = poset.n();
    for &i in &poset.elements {
        let c = poset.decode(i);
        let reach = (0..c.len())
            .filter(|&j| {
                let mut top = c.clone();
                top[j] = poset.g[j];
                poset.contains(&top)
            })
            .count();
        best = best.min(reach);
    }
    best
}

pub fn sdepth_of_poset(poset: &CharacteristicPoset) -> Sdepth {
    let mut best = decide(poset, 0).expect("singletons always work");
    let mut value = 0;
    for k in 1..=rank_upper_bound(poset) {
        match decide(poset, k) {
            Some(p) => {
                best = p;
                value = k;
            }
            None => break,
        }
    }
    Sdepth { value, mode: poset.mode, poset_size: poset.len(), partition: best }
}

/// Upper bound on remembered dead ends per decision.
const MEMO_LIMIT: usize = 1 << 20;

/// Candidate interval `[a, b]` with `b` equal to `a` raised to `g` on exactly
/// `k - rho(a)` coordinates.
struct Candidate {
    a: Vec<u32>,
    b: Vec<u32>,
    bits: Vec<u64>,
    /// Number of elements in the interval.
    size: usize,
    /// First and one-past-last nonzero word of `bits`.
    span: (usize, usize),
}

/// Exact cover of the low elements (`rho < k`) by candidate intervals.
/// Any partition with tops of `rho >= k` refines into candidates plus
/// singletons, and a candidate holds exactly one element of `rho = k`.
struct Search {
    low: Vec<usize>,
    candidates: Vec<Candidate>,
    /// Candidates containing each element, by rank.
    containing: Vec<Vec<usize>>,
    covered: Vec<u64>,
    chosen: Vec<usize>,
    failed: HashSet<Vec<u64>>,
}

impl Search {
    fn is_covered(&self, r: usize) -> bool {
        self.covered[r / 64] >> (r % 64) & 1 == 1
    }

    fn is_free(&self, c: usize) -> bool {
        let cand = &self.candidates[c];
        (cand.span.0..cand.span.1).all(|w| cand.bits[w] & self.covered[w] == 0)
    }

    fn toggle(&mut self, c: usize) {
        let cand = &self.candidates[c];
        for w in cand.span.0..cand.span.1 {
            self.covered[w] ^= cand.bits[w];
        }
    }

    fn run(&mut self) -> bool {
        if self.failed.contains(&self.covered) {
            return false;
        }
        // branch on the uncovered low element with the fewest live candidates
        let mut pick: Option<(usize, usize)> = None;
        for &r in &self.low {
            if self.is_covered(r) {
                continue;
            }
            let bound = pick.map_or(usize::MAX, |(n, _)| n);
            let mut live = 0;
            for &c in &self.containing[r] {
                if self.is_free(c) {
                    live += 1;
                    if live >= bound {
                        break;
                    }
                }
            }
            if live == 0 {
                pick = Some((0, r));
                break;
            }
            if live < bound {
                pick = Some((live, r));
            }
        }
        let Some((live, r)) = pick else {
            return true;
        };
        if live > 0 {
            let mut opts: Vec<usize> = self.containing[r].iter().copied().filter(|&c| self.is_free(c)).collect();
            // smaller intervals first: they leave more room for the rest
            opts.sort_by_key(|&c| self.candidates[c].size);
            for c in opts {
                self.toggle(c);
                self.chosen.push(c);
                if self.run() {
                    return true;
                }
                self.chosen.pop();
                self.toggle(c);
            }
        }
        if self.failed.len() < MEMO_LIMIT {
            self.failed.insert(self.covered.clone());
        }
        false
    }
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for l in i + 1..k {
                combo[l] = combo[l - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn candidates(poset: &CharacteristicPoset, k: usize, low: &[usize]) -> Vec<Candidate> {
    let words = poset.len().div_ceil(64);
    let mut out = Vec::new();
    for &r in low {
        let a = poset.decode(poset.elements[r]);
        let free: Vec<usize> = (0..a.len()).filter(|&j| a[j] < poset.g[j]).collect();
        let need = k - poset.rho(&a);
        if need > free.len() {
            continue;
        }
        let mut combo: Vec<usize> = (0..need).collect();
        loop {
            let mut b = a.clone();
            for &c in &combo {
                b[free[c]] = poset.g[free[c]];
            }
            if let Some(ranks) = poset.interval_ranks(&a, &b) {
                let mut bits = vec![0u64; words];
                for &x in &ranks {
                    bits[x / 64] |= 1 << (x % 64);
                }
                let first = bits.iter().position(|&w| w != 0).unwrap_or(0);
                let last = bits.iter().rposition(|&w| w != 0).map_or(0, |p| p + 1);
                out.push(Candidate { a: a.clone(), b, bits, size: ranks.len(), span: (first, last) });
            }
            if !next_combination(&mut combo, free.len()) {
                break;
            }
        }
    }
    out
}

/// A partition with all tops of `rho >= k`, if one exists.
fn decide(poset: &CharacteristicPoset, k: usize) -> Option<IntervalPartition> {
    let low: Vec<usize> = (0..poset.len())
        .filter(|&r| poset.rho(&poset.decode(poset.elements[r])) < k)
        .collect();
    let candidates = candidates(poset, k, &low);
    let mut containing = vec![Vec::new(); poset.len()];
    for (c, cand) in candidates.iter().enumerate() {
        for w in cand.span.0..cand.span.1 {
            let mut word = cand.bits[w];
            while word != 0 {
                let bit = word.trailing_zeros() as usize;
                containing[w * 64 + bit].push(c);
                word &= word - 1;
            }
        }
    }
    let mut search = Search {
        low,
        candidates,
        containing,
        covered: vec![0; poset.len().div_ceil(64)],
        chosen: Vec::new(),
        failed: HashSet::new(),
    };
    if !search.run() {
        return None;
    }
    let mut intervals: Vec<Interval> = search
        .chosen
        .iter()
        .map(|&c| Interval { a: search.candidates[c].a.clone(), b: search.candidates[c].b.clone() })
        .collect();
    intervals.sort_by(|x, y| x.a.cmp(&y.a));
    for r in 0..poset.len() {
        if !search.is_covered(r) {
            let a = poset.decode(poset.elements[r]);
            intervals.push(Interval { a: a.clone(), b: a });
        }
    }
    Some(IntervalPartition { intervals })
}

/// Quantities of the splitting bound for one `Z` and one `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitData {
    pub z: VarSet,
    /// Component indices, 0-based, ascending.
    pub tau: Vec<usize>,
    /// Variables of `Z` outside every prime of `tau`.
    pub s_tau: VarSet,
    /// Complement of `Z`.
    pub s_rest: VarSet,
    /// `None` for the zero ideal.
    pub j_tau: Option<MonomialIdeal>,
    pub l_tau: Option<MonomialIdeal>,
    pub a_tau: Option<usize>,
}

/// Memoized ideal-mode Stanley depths.
#[derive(Debug)]
pub struct SdepthCache {
    limit: usize,
    values: HashMap<MonomialIdeal, usize>,
}

impl SdepthCache {
    pub fn new(limit: usize) -> Self {
        SdepthCache { limit, values: HashMap::new() }
    }

    pub fn get(&mut self, ideal: &MonomialIdeal) -> Result<usize> {
        if let Some(&v) = self.values.get(ideal) {
            return Ok(v);
        }
        let v = sdepth_with_limit(ideal, Mode::Ideal, self.limit)?.value;
        self.values.insert(ideal.clone(), v);
        Ok(v)
    }
}

impl Default for SdepthCache {
    fn default() -> Self {
        SdepthCache::new(DEFAULT_POSET_LIMIT)
    }
}

/// Limit on the number of components for the subset enumeration.
pub const SPLIT_COMPONENT_LIMIT: usize = 9;

fn check_squarefree(d: &Decomposition) -> Result<()> {
    if d.is_squarefree() {
        Ok(())
    } else {
        Err(Error::NotSquarefree)
    }
}

/// `(∩ P_i over idx) ∩ K[vars]`, or `None` when that is zero.
fn restricted_intersection(d: &Decomposition, idx: &[usize], vars: VarSet) -> Result<Option<MonomialIdeal>> {
    if vars.is_empty() {
        return Ok(None);
    }
    let parts = idx
        .iter()
        .map(|&i| d.components()[i].to_ideal(d.ring()))
        .collect::<Result<Vec<_>>>()?;
    let restricted = intersect(&parts)?.restrict(vars)?;
    Ok((!restricted.is_zero()).then_some(restricted))
}

pub fn split_data(d: &Decomposition, z: VarSet, tau: &[usize]) -> Result<SplitData> {
    split_data_cached(d, z, tau, &mut SdepthCache::default())
}

pub fn split_data_cached(d: &Decomposition, z: VarSet, tau: &[usize], cache: &mut SdepthCache) -> Result<SplitData> {
    check_squarefree(d)?;
    let n = d.n();
    if !z.is_subset(VarSet::all(n)) {
        return Err(Error::InvalidSubset("Z mentions variables outside the ring".into()));
    }
    let mut tau = tau.to_vec();
    tau.sort_unstable();
    tau.dedup();
    if tau.is_empty() || tau.len() >= d.len() || tau.iter().any(|&i| i >= d.len()) {
        return Err(Error::InvalidSubset("tau must be a nonempty proper subset of the components".into()));
    }
    let rest: Vec<usize> = (0..d.len()).filter(|i| !tau.contains(i)).collect();
    let tau_support = tau.iter().fold(VarSet::EMPTY, |acc, &i| acc.union(d.components()[i].support()));
    let s_tau = z.difference(tau_support);
    let s_rest = VarSet::all(n).difference(z);
    let j_tau = restricted_intersection(d, &rest, s_tau)?;
    let l_tau = restricted_intersection(d, &tau, s_rest)?;
    let a_tau = match (&j_tau, &l_tau) {
        (Some(j), Some(l)) => Some(cache.get(j)? + cache.get(l)?),
        _ => None,
    };
    Ok(SplitData { z, tau, s_tau, s_rest, j_tau, l_tau, a_tau })
}

/// `A_0 = sdepth (I ∩ K[Z]) S`, or `None` when `I ∩ K[Z] = 0`.
pub fn split_a0(d: &Decomposition, z: VarSet, cache: &mut SdepthCache) -> Result<Option<usize>> {
    check_squarefree(d)?;
    let all: Vec<usize> = (0..d.len()).collect();
    match restricted_intersection(d, &all, z)? {
        Some(i0) => Ok(Some(cache.get(&i0)? + d.n() - z.height())),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBound {
    /// Minimum of `A_0` and the `A_tau` over proper `tau`; `None` if no term
    /// is defined.
    pub value: Option<usize>,
    pub a_0: Option<usize>,
    /// Every proper `tau` with `J_tau` and `L_tau` nonzero, in subset order.
    pub terms: Vec<SplitData>,
    /// Term for `tau` = all components: monomials `u v` with `u` in `K[Z]`
    /// outside every prime. `J` is then the whole ring on `s_tau`, so the
    /// term is `|s_tau| + sdepth(I ∩ K[rest])`; `None` when that is zero.
    pub a_all: Option<usize>,
    /// `value` together with `a_all`. Always a lower bound for sdepth(I);
    /// `value` alone is one only when `a_all` is `None`.
    pub complete: Option<usize>,
}

impl SplitBound {
    /// The `tau` with `J_tau` nonzero.
    pub fn qualifying(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.tau.clone()).collect()
    }
}

pub fn split_lower_bound(d: &Decomposition, z: VarSet) -> Result<SplitBound> {
    split_lower_bound_cached(d, z, &mut SdepthCache::default())
}

pub fn split_lower_bound_cached(d: &Decomposition, z: VarSet, cache: &mut SdepthCache) -> Result<SplitBound> {
    check_squarefree(d)?;
    let s = d.len();
    if s > SPLIT_COMPONENT_LIMIT {
        return Err(Error::BoundExceeded { what: "number of components", size: s, limit: SPLIT_COMPONENT_LIMIT });
    }
    let a_0 = split_a0(d, z, cache)?;
    let mut terms = Vec::new();
    for mask in 1u32..(1 << s) - 1 {
        let tau: Vec<usize> = (0..s).filter(|&i| mask >> i & 1 == 1).collect();
        let data = split_data_cached(d, z, &tau, cache)?;
        if data.a_tau.is_some() {
            terms.push(data);
        }
    }
    let value = a_0.into_iter().chain(terms.iter().filter_map(|t| t.a_tau)).min();
    let support = d.components().iter().fold(VarSet::EMPTY, |acc, q| acc.union(q.support()));
    let all: Vec<usize> = (0..s).collect();
    let a_all = match restricted_intersection(d, &all, VarSet::all(d.n()).difference(z))? {
        Some(l) => Some(z.difference(support).height() + cache.get(&l)?),
        None => None,
    };
    let complete = value.into_iter().chain(a_all).min();
    Ok(SplitBound { value, a_0, terms, a_all, complete })
}

/// Decomposition of `L_tau` in the subring on `s_rest`, one prime per member
/// of `tau` in the same order. Used to repeat the split inside `S''`.
pub fn l_tau_decomposition(d: &Decomposition, data: &SplitData) -> Result<Decomposition> {
    let sub = d.ring().subring(data.s_rest)?;
    let primes: Vec<VarSet> = data
        .tau
        .iter()
        .map(|&i| {
            let p = d.components()[i].support().intersection(data.s_rest);
            VarSet::from_indices(data.s_rest.iter().enumerate().filter(|(_, j)| p.contains(*j)).map(|(k, _)| k))
        })
        .collect();
    Decomposition::from_primes(sub, &primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{minimalize, Ring};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(&Ring::new(n).unwrap(), gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn primes(n: usize, list: &[&[usize]]) -> Decomposition {
        let ps: Vec<VarSet> = list.iter().map(|p| VarSet::from_indices(p.iter().map(|j| j - 1))).collect();
        Decomposition::from_primes(Ring::new(n).unwrap(), &ps).unwrap()
    }

    fn e_prime() -> Decomposition {
        primes(6, &[&[1, 2], &[1, 3], &[1, 6], &[3, 4], &[3, 5], &[2, 4], &[5, 6]])
    }

    #[test]
    fn posets() {
        let p = char_poset(&ideal(2, &[&[1, 0], &[0, 1]]), Mode::Ideal).unwrap();
        assert_eq!(p.elements(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let p = char_poset(&ideal(2, &[&[1, 1]]), Mode::Quotient).unwrap();
        assert_eq!(p.elements(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let p = char_poset(&ideal(2, &[&[2, 0], &[1, 1]]), Mode::Ideal).unwrap();
        assert_eq!(p.g(), &[2, 1]);
        assert_eq!(p.elements(), vec![vec![1, 1], vec![2, 0], vec![2, 1]]);
        assert_eq!(p.rho(&[2, 0]), 1);
    }

    #[test]
    fn poset_limit() {
        let err = char_poset_with_limit(&ideal(3, &[&[1, 0, 0]]), Mode::Ideal, 3).unwrap_err();
        assert_eq!(err, Error::BoundExceeded { what: "poset size", size: 4, limit: 3 });
        assert!(char_poset(&MonomialIdeal::zero(Ring::new(2).unwrap()), Mode::Ideal).is_err());
    }

    #[test]
    fn small_values() {
        let s = sdepth_exact(&ideal(3, &[&[1, 1, 0]]), Mode::Ideal).unwrap();
        assert_eq!(s.value, 3);
        let s = sdepth_exact(&ideal(2, &[&[1, 0], &[0, 1]]), Mode::Ideal).unwrap();
        assert_eq!(s.value, 1);
        let s = sdepth_exact(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), Mode::Ideal).unwrap();
        assert_eq!(s.value, 2);
        let s = sdepth_exact(&ideal(2, &[&[1, 0], &[0, 1]]), Mode::Quotient).unwrap();
        assert_eq!(s.value, 0);
        let s = sdepth_exact(&ideal(2, &[&[2, 0]]), Mode::Quotient).unwrap();
        assert_eq!(s.value, 1);
    }

    #[test]
    fn certificates_are_valid() {
        for (i, mode) in [
            (ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 1]]), Mode::Ideal),
            (ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 1]]), Mode::Quotient),
        ] {
            let p = char_poset(&i, mode).unwrap();
            let s = sdepth_of_poset(&p);
            assert!(s.partition.is_valid_for(&p));
            assert_eq!(s.partition.min_rho(&p), Some(s.value));
        }
    }

    #[test]
    fn broken_partitions_rejected() {
        let p = char_poset(&ideal(2, &[&[1, 0], &[0, 1]]), Mode::Ideal).unwrap();
        let iv = |a: [u32; 2], b: [u32; 2]| Interval { a: a.to_vec(), b: b.to_vec() };
        let good = IntervalPartition { intervals: vec![iv([1, 0], [1, 1]), iv([0, 1], [0, 1])] };
        assert!(good.is_valid_for(&p));
        let overlap = IntervalPartition { intervals: vec![iv([1, 0], [1, 1]), iv([0, 1], [1, 1])] };
        assert!(!overlap.is_valid_for(&p));
        let outside = IntervalPartition { intervals: vec![iv([0, 0], [1, 1])] };
        assert!(!outside.is_valid_for(&p));
        let missing = IntervalPartition { intervals: vec![iv([1, 0], [1, 1])] };
        assert!(!missing.is_valid_for(&p));
    }

    #[test]
    fn e_prime_values() {
        let i = e_prime().ideal().unwrap();
        assert_eq!(sdepth_exact(&i, Mode::Ideal).unwrap().value, 5);
        assert_eq!(sdepth_exact(&i, Mode::Quotient).unwrap().value, 3);
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn e4_split() {
        let d = e_prime();
        let z = VarSet::singleton(4);
        let b = split_lower_bound(&d, z).unwrap();
        assert_eq!(b.qualifying(), vec![vec![0, 1, 2, 3, 5]]);
        assert_eq!(b.a_0, None);
        assert_eq!(b.value, Some(5));
        let t = &b.terms[0];
        assert_eq!(t.j_tau.as_ref().unwrap().fmt_gens(), "x5");
        let l = t.l_tau.as_ref().unwrap();
        assert_eq!(sdepth_exact(l, Mode::Ideal).unwrap().value, 4);
        // second level inside S''
        let inner = l_tau_decomposition(&d, t).unwrap();
        assert_eq!(inner.ideal().unwrap(), *l);
        let x4 = inner.ring().index_of("x4").unwrap();
        let b2 = split_lower_bound(&inner, VarSet::singleton(x4)).unwrap();
        let labels: Vec<Vec<usize>> = b2.qualifying().iter().map(|q| q.iter().map(|&k| t.tau[k]).collect()).collect();
        assert_eq!(labels, vec![vec![0, 1, 2]]);
        assert_eq!(b2.value, Some(4));
    }

    #[test]
    fn e5_split() {
        let b = split_lower_bound(&e_prime(), VarSet::singleton(3)).unwrap();
        assert_eq!(b.qualifying(), vec![vec![0, 1, 2, 4, 6]]);
        assert_eq!(b.value, Some(5));
    }

    #[test]
    fn degenerate_split() {
        let d = primes(3, &[&[1, 2], &[2, 3]]);
        let data = split_data(&d, VarSet::EMPTY, &[0]).unwrap();
        assert_eq!(data.j_tau, None);
        assert_eq!(data.a_tau, None);
        let b = split_lower_bound(&d, VarSet::singleton(0)).unwrap();
        assert_eq!(b.a_0, None);
        // a single prime: only A_0 can be defined
        let p = primes(3, &[&[1, 2]]);
        let b = split_lower_bound(&p, VarSet::from_indices([0, 1])).unwrap();
        assert_eq!(b.value, Some(sdepth_exact(&p.ideal().unwrap(), Mode::Ideal).unwrap().value));
        assert!(b.terms.is_empty());
    }

    #[test]
    fn all_components_term() {
        // (x3, x2 x4): u = 1 in K[x3] lies in no prime, leaving x2 x4 K[x1,x2,x4]
        let d = primes(4, &[&[3, 4], &[2, 3]]);
        let b = split_lower_bound(&d, VarSet::singleton(2)).unwrap();
        assert_eq!((b.value, b.a_all, b.complete), (Some(4), Some(3), Some(3)));
        assert_eq!(sdepth_exact(&d.ideal().unwrap(), Mode::Ideal).unwrap().value, 3);
        // Z the support of a component: no such u besides those in I ∩ K[Z]
        let b = split_lower_bound(&d, VarSet::from_indices([2, 3])).unwrap();
        assert_eq!(b.a_all, None);
        assert_eq!(b.complete, b.value);
        let e4 = split_lower_bound(&e_prime(), VarSet::singleton(4)).unwrap();
        assert_eq!((e4.value, e4.a_all, e4.complete), (Some(5), Some(4), Some(4)));
    }

    #[test]
    fn rank_bound() {
        // S/(x1,x2) in three variables: every element is (0,0,c3)
        let q = char_poset(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]]), Mode::Quotient).unwrap();
        assert_eq!(rank_upper_bound(&q), 1);
        // the quotient is bounded by the least dim S/P
        let ep = e_prime().ideal().unwrap();
        let p = char_poset(&ep, Mode::Quotient).unwrap();
        assert_eq!(rank_upper_bound(&p), 4);
        assert_eq!(sdepth_of_poset(&p).value, 3);
        // (x1,x2): (0,1) reaches (1,1) and is already at g2
        let i = char_poset(&ideal(2, &[&[1, 0], &[0, 1]]), Mode::Ideal).unwrap();
        assert_eq!(rank_upper_bound(&i), 2);
        assert_eq!(sdepth_of_poset(&i).value, 1);
    }

    #[test]
    fn split_rejects_bad_input() {
        let d = primes(3, &[&[1, 2], &[2, 3]]);
        assert!(matches!(split_data(&d, VarSet::EMPTY, &[0, 1]), Err(Error::InvalidSubset(_))));
        assert!(matches!(split_data(&d, VarSet::EMPTY, &[]), Err(Error::InvalidSubset(_))));
        let sq = crate::ideal::irreducible_decomposition(&ideal(2, &[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(split_lower_bound(&sq, VarSet::EMPTY).unwrap_err(), Error::NotSquarefree);
    }
}
