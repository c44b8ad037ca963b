//! Size, admissible orders, families and bigsize.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{ass_primes, comp_sum, Decomposition, IrreducibleComponent, VarSet};

/// Default refusal bound on the number of components for order enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 9;

/// The numbers entering the size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeParts {
    pub n: usize,
    /// Height of the sum of all associated primes.
    pub h: usize,
    /// Fewest associated primes with that sum.
    pub r: usize,
    pub size: usize,
}

pub fn size_parts(d: &Decomposition) -> Result<SizeParts> {
    let ass = ass_primes(d)?;
    let total = ass.support();
    let r = min_cover(&ass.primes, total).expect("the full set always covers");
    let (n, h) = (d.n(), total.height());
    Ok(SizeParts { n, h, r, size: n - h + r - 1 })
}

/// Lyubeznik size `n - h + r - 1`.
pub fn size(d: &Decomposition) -> Result<usize> {
    Ok(size_parts(d)?.size)
}

/// Fewest sets from `sets` whose union is `target`, searched by increasing
/// cardinality.
pub(crate) fn min_cover(sets: &[VarSet], target: VarSet) -> Option<usize> {
    fn reach(sets: &[VarSet], start: usize, left: usize, acc: VarSet, target: VarSet) -> bool {
        if acc == target {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..sets.len()).any(|i| reach(sets, i + 1, left - 1, acc.union(sets[i]), target))
    }
    (0..=sets.len()).find(|&r| reach(sets, 0, r, VarSet::EMPTY, target))
}

/// Total order on the components of a decomposition: `perm[p]` is the
/// component placed at position `p` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder {
    perm: Vec<usize>,
}

impl TotalOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidOrder(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(TotalOrder { perm })
    }

    /// From 1-based labels, as written in the math.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidOrder("labels are 1-based".into()));
        }
        TotalOrder::new(labels.iter().map(|&l| l - 1).collect())
    }

    pub fn identity(s: usize) -> Self {
        TotalOrder { perm: (0..s).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.perm.iter().map(|i| i + 1).collect()
    }

    /// Position of each component.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (p, &i) in self.perm.iter().enumerate() {
            pos[i] = p;
        }
        pos
    }

    fn check_len(&self, d: &Decomposition) -> Result<()> {
        if self.perm.len() == d.len() {
            Ok(())
        } else {
            Err(Error::InvalidOrder(format!(
                "order has {} entries, decomposition has {} components",
                self.perm.len(),
                d.len()
            )))
        }
    }
}

impl fmt::Debug for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels())
    }
}

/// Admissibility: after every nonempty proper prefix, the next component has
/// the smallest height increment `height(a + P) - height(a)` among all
/// components still to come. The first position is unconstrained.
pub fn is_admissible_order(d: &Decomposition, order: &TotalOrder) -> bool {
    if order.check_len(d).is_err() {
        return false;
    }
    let radicals = d.radicals();
    let s = order.len();
    let mut prefix = VarSet::EMPTY;
    for i in 1..s {
        prefix = prefix.union(radicals[order.perm[i - 1]]);
        let next = prefix.union(radicals[order.perm[i]]).height();
        if order.perm[i + 1..].iter().any(|&k| prefix.union(radicals[k]).height() < next) {
            return false;
        }
    }
    true
}

/// All admissible orders, by position-wise backtracking: from the second
/// position on only components of minimal increment over the placed prefix
/// are tried.
pub fn admissible_orders(d: &Decomposition, bound: usize) -> Result<Vec<TotalOrder>> {
    let s = d.len();
    if s > bound {
        return Err(Error::BoundExceeded { what: "number of components", size: s, limit: bound });
    }
    let radicals = d.radicals();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(s);
    let mut used = vec![false; s];
    backtrack_orders(&radicals, VarSet::EMPTY, &mut perm, &mut used, &mut out);
    Ok(out)
}

fn backtrack_orders(
    radicals: &[VarSet],
    prefix: VarSet,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<TotalOrder>,
) {
    let s = radicals.len();
    if perm.len() == s {
        out.push(TotalOrder { perm: perm.clone() });
        return;
    }
    let free = || (0..s).filter(|&x| !used[x]);
    let floor = if perm.is_empty() {
        0
    } else {
        free().map(|x| prefix.union(radicals[x]).height()).min().unwrap_or(0)
    };
    let candidates: Vec<usize> = free()
        .filter(|&x| perm.is_empty() || prefix.union(radicals[x]).height() == floor)
        .collect();
    for x in candidates {
        used[x] = true;
        perm.push(x);
        backtrack_orders(radicals, prefix.union(radicals[x]), perm, used, out);
        perm.pop();
        used[x] = false;
    }
}

/// A sequence of components taken in some total order, together with the
/// index each member had in its source decomposition.
#[derive(Clone, PartialEq, Eq)]
pub struct Family {
    n: usize,
    members: Vec<IrreducibleComponent>,
    labels: Vec<usize>,
}

impl Family {
    pub fn new(n: usize, members: Vec<IrreducibleComponent>, labels: Vec<usize>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::FamilyTooShort { needed: 1, found: 0 });
        }
        if labels.len() != members.len() {
            return Err(Error::InvalidSubset("one label per member required".into()));
        }
        if let Some(m) = members.iter().find(|m| m.n() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: m.n() });
        }
        Ok(Family { n, members, labels })
    }

    /// Members `d[indices[0]], d[indices[1]], ...` in that order.
    pub fn from_indices(d: &Decomposition, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= d.len()) {
            return Err(Error::InvalidSubset(format!("component index {bad} out of range")));
        }
        let members = indices.iter().map(|&i| d.components()[i].clone()).collect();
        Family::new(d.n(), members, indices.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[IrreducibleComponent] {
        &self.members
    }

    /// Source indices (0-based) of the members.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn radicals(&self) -> Vec<VarSet> {
        self.members.iter().map(IrreducibleComponent::support).collect()
    }

    /// `a_{k,F}` for `k = 0..=t`.
    pub fn partial_sums(&self) -> Vec<VarSet> {
        let mut sums = vec![VarSet::EMPTY];
        for m in &self.members {
            let last = *sums.last().unwrap();
            sums.push(last.union(m.support()));
        }
        sums
    }

    /// `a_F`.
    pub fn support(&self) -> VarSet {
        *self.partial_sums().last().unwrap()
    }

    /// First `len` members.
    pub fn prefix(&self, len: usize) -> Family {
        Family {
            n: self.n,
            members: self.members[..len].to_vec(),
            labels: self.labels[..len].to_vec(),
        }
    }

    /// Members at the given positions, in that order.
    pub fn subfamily(&self, positions: &[usize]) -> Result<Family> {
        if positions.iter().any(|&p| p >= self.len()) {
            return Err(Error::InvalidSubset("position out of range".into()));
        }
        Family::new(
            self.n,
            positions.iter().map(|&p| self.members[p].clone()).collect(),
            positions.iter().map(|&p| self.labels[p]).collect(),
        )
    }

    /// Every member adds a variable to the running sum.
    pub fn is_admissible(&self) -> bool {
        let sums = self.partial_sums();
        self.members.iter().enumerate().all(|(k, m)| !m.support().is_subset(sums[k]))
    }

    /// The upper bound `t - 1 + dim S/a_F`.
    pub fn trivial_bound(&self) -> usize {
        self.len() - 1 + self.support().dim(self.n)
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.members).finish()
    }
}

/// The unique maximal admissible family of an admissible order: scan the
/// components with maximal radical in order, keeping each one that adds a
/// new variable.
pub fn maximal_admissible_family(d: &Decomposition, order: &TotalOrder) -> Result<Family> {
    order.check_len(d)?;
    if !is_admissible_order(d, order) {
        return Err(Error::NotAdmissible);
    }
    greedy_family(d, order)
}

pub(crate) fn greedy_family(d: &Decomposition, order: &TotalOrder) -> Result<Family> {
    let ass = ass_primes(d)?;
    let mut acc = VarSet::EMPTY;
    let mut picked = Vec::new();
    for &i in &order.perm {
        let p = d.components()[i].support();
        if ass.is_maximal(p) && !p.is_subset(acc) {
            acc = acc.union(p);
            picked.push(i);
        }
    }
    Family::from_indices(d, &picked)
}

/// All nonempty families of `d` with respect to `order`: order-increasing
/// subsequences of components whose radical is maximal.
pub fn families(d: &Decomposition, order: &TotalOrder) -> Result<Vec<Family>> {
    order.check_len(d)?;
    let ass = ass_primes(d)?;
    let eligible: Vec<usize> = order
        .perm
        .iter()
        .copied()
        .filter(|&i| ass.is_maximal(d.components()[i].support()))
        .collect();
    if eligible.len() > 20 {
        return Err(Error::BoundExceeded { what: "eligible components", size: eligible.len(), limit: 20 });
    }
    (1u32..1 << eligible.len())
        .map(|mask| {
            let idx: Vec<usize> =
                (0..eligible.len()).filter(|b| mask >> b & 1 == 1).map(|b| eligible[b]).collect();
            Family::from_indices(d, &idx)
        })
        .collect()
}

/// `F_1`: the sums `Q_t + Q_k` (`k < t`) with every sum that strictly
/// contains another removed, and repeated sums kept once (first occurrence).
pub fn reduce_f1(f: &Family) -> Result<Family> {
    Ok(reduce_with_positions(f)?.0)
}

/// [`reduce_f1`] plus, for each kept sum, the position `k` it came from.
fn reduce_with_positions(f: &Family) -> Result<(Family, Vec<usize>)> {
    let t = f.len();
    if t < 2 {
        return Err(Error::FamilyTooShort { needed: 2, found: t });
    }
    let last = &f.members[t - 1];
    let sums: Vec<IrreducibleComponent> = f.members[..t - 1].iter().map(|m| comp_sum(last, m)).collect();
    let kept: Vec<usize> = (0..sums.len())
        .filter(|&k| {
            !sums.iter().enumerate().any(|(k2, other)| {
                k2 != k && sums[k].contains(other) && (sums[k] != *other || k2 < k)
            })
        })
        .collect();
    let family = Family {
        n: f.n,
        members: kept.iter().map(|&k| sums[k].clone()).collect(),
        labels: kept.iter().map(|&k| f.labels[k]).collect(),
    };
    Ok((family, kept))
}

/// Bigsize of a family, by the min-recursion over dropping the last member
/// and passing to `1 + bigsize(F_1)`.
pub fn bigsize_family(f: &Family) -> usize {
    bigsize_traced(f).0
}

/// Value plus the positions `k_1 < ... < k_r` with
/// `value = r - 1 + dim S/(P_{k_1} + ... + P_{k_r})`. Ties between the two
/// branches go to the `F_1` branch.
fn bigsize_traced(f: &Family) -> (usize, Vec<usize>) {
    let t = f.len();
    if t == 1 {
        return (f.members[0].support().dim(f.n), vec![0]);
    }
    let (prefix_value, prefix_witness) = bigsize_traced(&f.prefix(t - 1));
    let (reduced, kept) = reduce_with_positions(f).expect("t > 1");
    let (reduced_value, reduced_witness) = bigsize_traced(&reduced);
    if 1 + reduced_value <= prefix_value {
        let mut w: Vec<usize> = reduced_witness.iter().map(|&p| kept[p]).collect();
        w.sort_unstable();
        w.push(t - 1);
        (1 + reduced_value, w)
    } else {
        (prefix_value, prefix_witness)
    }
}

/// Positions `k_1 < ... < k_r` in the family realising its bigsize as
/// `r - 1 + dim S/(P_{k_1} + ... + P_{k_r})`.
pub fn bigsize_witness(f: &Family) -> Result<Vec<usize>> {
    let (value, w) = bigsize_traced(f);
    let union = w.iter().fold(VarSet::EMPTY, |a, &p| a.union(f.members[p].support()));
    if w.len() - 1 + union.dim(f.n) != value {
        return Err(Error::Defect(format!("witness {w:?} does not realise bigsize {value}")));
    }
    Ok(w)
}

pub fn bigsize_order(d: &Decomposition, order: &TotalOrder) -> Result<usize> {
    Ok(bigsize_family(&maximal_admissible_family(d, order)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigsize {
    pub value: usize,
    /// First admissible order (in enumeration order) attaining the value.
    pub order: TotalOrder,
    pub family: Family,
    /// Number of admissible orders examined.
    pub orders_examined: usize,
}

/// Maximum of the order bigsizes over all admissible orders.
pub fn bigsize_ideal(d: &Decomposition, bound: usize) -> Result<Bigsize> {
    let orders = admissible_orders(d, bound)?;
    let mut best: Option<Bigsize> = None;
    for order in &orders {
        let family = greedy_family(d, order)?;
        let value = bigsize_family(&family);
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(Bigsize { value, order: order.clone(), family, orders_examined: 0 });
        }
    }
    let mut best = best.ok_or_else(|| Error::Defect("no admissible order found".into()))?;
    best.orders_examined = orders.len();
    Ok(best)
}
