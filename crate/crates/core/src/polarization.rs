//! One-step polarization, full polarization, lcm-lattices, and the transfer
//! of families from a polarized ideal back to the original one.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ideal::{
    ass_primes, irredundant_indices, minimalize, Decomposition, IrreducibleComponent, Monomial, MonomialIdeal, Ring,
};
use crate::invariants::{bigsize_family, bigsize_witness, Family};

/// Where a component of the polarized decomposition comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// `Q_i` extended to the bigger ring.
    Unchanged(usize),
    /// `Q'_i`: exponent of the split variable lowered by one.
    Primed(usize),
    /// `Q''_i`: split variable replaced by the new variable.
    Doubled(usize),
}

impl Origin {
    pub fn source(self) -> usize {
        match self {
            Origin::Unchanged(i) | Origin::Primed(i) | Origin::Doubled(i) => i,
        }
    }
}

/// One splitting step `x_j^c -> x_j^{c-1} * x_new` on the components.
#[derive(Clone, Debug)]
pub struct PolarizationStep {
    pub source: Decomposition,
    pub target_ring: Ring,
    pub var: usize,
    pub degree: u32,
    /// Components whose exponent of the split variable equals `degree`.
    pub e_set: Vec<usize>,
    pub primed: Vec<IrreducibleComponent>,
    pub doubled: Vec<IrreducibleComponent>,
    /// Unchanged, then primed, then doubled; not irredundant in general.
    pub raw_target: Decomposition,
    pub origins: Vec<Origin>,
}

impl PolarizationStep {
    /// Index of the variable introduced by this step.
    pub fn new_var(&self) -> usize {
        self.source.n()
    }

    /// Substitution of the target ring onto the source ring, `x_new -> x_j`.
    pub fn varmap(&self) -> Vec<usize> {
        (0..self.source.n()).chain(std::iter::once(self.var)).collect()
    }

    /// The irredundant polarized decomposition with origins attached.
    pub fn transfer_context(&self) -> Result<TransferContext> {
        let kept = irredundant_indices(self.raw_target.components());
        let components = kept.iter().map(|&k| self.raw_target.components()[k].clone()).collect();
        let target = Decomposition::irredundant(self.target_ring.clone(), components)?;
        Ok(TransferContext {
            source: self.source.clone(),
            target,
            origins: kept.iter().map(|&k| self.origins[k]).collect(),
            e_set: self.e_set.clone(),
            primed: self.primed.clone(),
        })
    }

    pub fn target(&self) -> Result<Decomposition> {
        Ok(self.transfer_context()?.target)
    }
}

pub fn polarize_step(d: &Decomposition, j: usize) -> Result<PolarizationStep> {
    let n = d.n();
    if j >= n {
        return Err(Error::VariableOutOfRange { index: j, n });
    }
    let c = d.components().iter().map(|q| q.exponent(j)).max().unwrap_or(0);
    if c <= 1 {
        return Err(Error::NothingToPolarize { var: j, degree: c });
    }
    let target_ring = d.ring().extended()?;
    let e_set: Vec<usize> = (0..d.len()).filter(|&i| d.components()[i].exponent(j) == c).collect();
    let primed: Vec<IrreducibleComponent> =
        e_set.iter().map(|&i| d.components()[i].with_power(j, c - 1)).collect();
    let doubled: Vec<IrreducibleComponent> =
        e_set.iter().map(|&i| d.components()[i].with_power(j, 0).pushed(1)).collect();

    let mut components = Vec::with_capacity(d.len() + e_set.len());
    let mut origins = Vec::with_capacity(d.len() + e_set.len());
    for (i, q) in d.components().iter().enumerate() {
        if !e_set.contains(&i) {
            components.push(q.extend(1));
            origins.push(Origin::Unchanged(i));
        }
    }
    for (q, &i) in primed.iter().zip(&e_set) {
        components.push(q.extend(1));
        origins.push(Origin::Primed(i));
    }
    for (q, &i) in doubled.iter().zip(&e_set) {
        components.push(q.clone());
        origins.push(Origin::Doubled(i));
    }
    let raw_target = Decomposition::new(target_ring.clone(), components)?;
    Ok(PolarizationStep {
        source: d.clone(),
        target_ring,
        var: j,
        degree: c,
        e_set,
        primed,
        doubled,
        raw_target,
        origins,
    })
}

/// Result of polarizing until squarefree.
#[derive(Clone, Debug)]
pub struct FullPolarization {
    pub decomposition: Decomposition,
    /// For each variable added, the original variable and the power level
    /// it stands for (`x_j^l` contributes the factor at level `l >= 2`).
    pub provenance: Vec<(usize, u32)>,
    /// The steps in order; step `k+1` starts from the target of step `k`.
    pub steps: Vec<PolarizationStep>,
}

/// Splits the smallest-index variable of degree > 1 until squarefree,
/// irredundantizing after each step.
pub fn full_polarization(d: &Decomposition) -> Result<FullPolarization> {
    let mut current = crate::ideal::irredundantize(d);
    let mut provenance = Vec::new();
    let mut steps = Vec::new();
    while let Some(j) = (0..current.n()).find(|&j| current.components().iter().any(|q| q.exponent(j) > 1)) {
        let step = polarize_step(&current, j)?;
        // new variables only ever carry exponent 1, so j is an original variable
        provenance.push((j, step.degree));
        current = step.target()?;
        steps.push(step);
    }
    Ok(FullPolarization { decomposition: current, provenance, steps })
}

/// Substituting the new variable by the split one in the minimal generators
/// of the polarized ideal gives back the original ideal.
pub fn depolarize_check(step: &PolarizationStep) -> bool {
    let (Ok(source), Ok(target)) = (step.source.ideal(), step.raw_target.ideal()) else {
        return false;
    };
    match target.substitute(step.source.ring(), &step.varmap()) {
        Ok(image) => image == source,
        Err(_) => false,
    }
}

/// Default limit on the number of minimal generators for lattice building.
pub const DEFAULT_LATTICE_GENERATORS: usize = 16;

/// The lcm-lattice: lcms of all nonempty sets of minimal generators, plus a
/// formal bottom (not stored) below everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    ring: Ring,
    nodes: Vec<Monomial>,
}

impl LcmLattice {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Non-bottom nodes in lexicographic order.
    pub fn nodes(&self) -> &[Monomial] {
        &self.nodes
    }

    /// Node count including the bottom.
    pub fn len(&self) -> usize {
        self.nodes.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.nodes.binary_search(m).is_ok()
    }
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_with_limit(ideal, DEFAULT_LATTICE_GENERATORS)
}

/// Builds the node set by closure (`nodes ∪ {g} ∪ lcm(nodes, g)` per
/// generator), so the cost follows the lattice size rather than `2^|G|`.
pub fn lcm_lattice_with_limit(ideal: &MonomialIdeal, limit: usize) -> Result<LcmLattice> {
    ideal.ensure_proper_nonzero()?;
    if ideal.gens().len() > limit {
        return Err(Error::BoundExceeded { what: "number of generators", size: ideal.gens().len(), limit });
    }
    let mut nodes: BTreeSet<Monomial> = BTreeSet::new();
    for g in ideal.gens() {
        let joined: Vec<Monomial> = nodes.iter().map(|m| m.lcm(g)).collect();
        nodes.insert(g.clone());
        nodes.extend(joined);
    }
    Ok(LcmLattice { ring: ideal.ring().clone(), nodes: nodes.into_iter().collect() })
}

/// Whether substitution along `varmap` (source variable -> target variable)
/// induces a well-defined, surjective, join-preserving map `source -> target`.
/// The bottom maps to the bottom.
pub fn lattice_surjection_check(source: &LcmLattice, target: &LcmLattice, varmap: &[usize]) -> bool {
    if varmap.len() != source.ring.n() || varmap.iter().any(|&v| v >= target.ring.n()) {
        return false;
    }
    let tn = target.ring.n();
    let mut image: Vec<usize> = Vec::with_capacity(source.nodes.len());
    for m in &source.nodes {
        let mapped = crate::ideal::substitute(m, tn, varmap);
        match target.nodes.binary_search(&mapped) {
            Ok(pos) => image.push(pos),
            Err(_) => return false,
        }
    }
    let hit: BTreeSet<usize> = image.iter().copied().collect();
    if hit.len() != target.nodes.len() {
        return false;
    }
    let index: HashMap<&Monomial, usize> = source.nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    for a in 0..source.nodes.len() {
        for b in a + 1..source.nodes.len() {
            let join = source.nodes[a].lcm(&source.nodes[b]);
            let Some(&ab) = index.get(&join) else {
                return false;
            };
            let mapped_join = target.nodes[image[a]].lcm(&target.nodes[image[b]]);
            if target.nodes[image[ab]] != mapped_join {
                return false;
            }
        }
    }
    true
}

/// Source and polarized decompositions with the component correspondence.
#[derive(Clone, Debug)]
pub struct TransferContext {
    pub source: Decomposition,
    /// Irredundant polarized decomposition.
    pub target: Decomposition,
    /// Origin of each target component.
    pub origins: Vec<Origin>,
    pub e_set: Vec<usize>,
    /// `Q'_i` in the source ring, aligned with `e_set`.
    pub primed: Vec<IrreducibleComponent>,
}

/// Replaces each member of a family of the polarized ideal by a component of
/// the original one and keeps the first occurrence of repeats:
/// primed/doubled members map to their origin, unchanged members with
/// maximal radical map to themselves, the rest to the first `Q_i` with the
/// member inside `Q'_i`.
pub fn replacement_family(ctx: &TransferContext, ft: &Family) -> Result<Family> {
    let ass = ass_primes(&ctx.source)?;
    let mut picked: Vec<usize> = Vec::new();
    for &label in ft.labels() {
        let origin = *ctx
            .origins
            .get(label)
            .ok_or_else(|| Error::MalformedContext(format!("family label {label} has no origin")))?;
        let i = match origin {
            Origin::Primed(i) | Origin::Doubled(i) => i,
            Origin::Unchanged(l) => {
                let q = &ctx.source.components()[l];
                if ass.is_maximal(q.support()) {
                    l
                } else {
                    ctx.e_set
                        .iter()
                        .zip(&ctx.primed)
                        .find(|(_, primed)| primed.contains(q))
                        .map(|(&i, _)| i)
                        .ok_or_else(|| {
                            Error::MalformedContext(format!(
                                "component {} has non-maximal radical and lies in no Q'_i",
                                l + 1
                            ))
                        })?
                }
            }
        };
        if !picked.contains(&i) {
            picked.push(i);
        }
    }
    Family::from_indices(&ctx.source, &picked)
}

/// A family `G` of the original ideal with `1 + bigsize(G) <= bigsize(ft)`:
/// replace directly when the full family realises its bigsize as
/// `t - 1 + dim`, otherwise recurse on a witnessing subfamily.
pub fn transfer_family(ctx: &TransferContext, ft: &Family) -> Result<Family> {
    let value = bigsize_family(ft);
    let g = if ft.trivial_bound() == value {
        replacement_family(ctx, ft)?
    } else {
        let witness = bigsize_witness(ft)?;
        if witness.len() == ft.len() {
            return Err(Error::Defect("full witness without matching trivial bound".into()));
        }
        transfer_family(ctx, &ft.subfamily(&witness)?)?
    };
    let transferred = bigsize_family(&g);
    if 1 + transferred > value {
        return Err(Error::Defect(format!(
            "transfer gave bigsize {transferred}, expected at most {}",
            value as i64 - 1
        )));
    }
    Ok(g)
}

/// A permutation `p` of variables with `p(a) = b` as sets of components, if
/// one exists. `p[j]` is the image of variable `j` of `a`.
pub fn variable_bijection(a: &Decomposition, b: &Decomposition) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.len() != b.len() || a.n() > 12 {
        return None;
    }
    let target: BTreeSet<Vec<u32>> = b.components().iter().map(|q| q.powers().to_vec()).collect();
    let n = a.n();
    // column signatures prune the search: a variable must map to one with the
    // same multiset of exponents across components
    let signature = |d: &Decomposition, j: usize| {
        let mut s: Vec<u32> = d.components().iter().map(|q| q.exponent(j)).collect();
        s.sort_unstable();
        s
    };
    let sig_a: Vec<Vec<u32>> = (0..n).map(|j| signature(a, j)).collect();
    let sig_b: Vec<Vec<u32>> = (0..n).map(|j| signature(b, j)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn search(
        j: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sig_a: &[Vec<u32>],
        sig_b: &[Vec<u32>],
        a: &Decomposition,
        target: &BTreeSet<Vec<u32>>,
    ) -> bool {
        let n = perm.len();
        if j == n {
            return a.components().iter().all(|q| {
                let mut v = vec![0; n];
                for (k, &e) in q.powers().iter().enumerate() {
                    v[perm[k]] = e;
                }
                target.contains(&v)
            });
        }
        for t in 0..n {
            if !used[t] && sig_a[j] == sig_b[t] {
                used[t] = true;
                perm[j] = t;
                if search(j + 1, perm, used, sig_a, sig_b, a, target) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }

    if search(0, &mut perm, &mut used, &sig_a, &sig_b, a, &target) {
        Some(perm)
    } else {
        None
    }
}

/// Generator-side view of a full polarization: the minimal generators of the
/// polarized ideal, for reporting.
pub fn polarized_ideal(p: &FullPolarization) -> Result<MonomialIdeal> {
    let ideal = p.decomposition.ideal()?;
    minimalize(ideal.ring(), ideal.gens().iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{irredundantize, VarSet};
    use crate::invariants::bigsize_family;

    fn comp(n: usize, pairs: &[(usize, u32)]) -> IrreducibleComponent {
        let pairs: Vec<_> = pairs.iter().map(|&(j, e)| (j - 1, e)).collect();
        IrreducibleComponent::from_pairs(n, &pairs).unwrap()
    }

    fn decomp(n: usize, list: &[&[(usize, u32)]]) -> Decomposition {
        let c = list.iter().map(|p| comp(n, p)).collect();
        Decomposition::irredundant(Ring::new(n).unwrap(), c).unwrap()
    }

    fn e1() -> Decomposition {
        decomp(2, &[&[(1, 1)], &[(1, 2), (2, 1)]])
    }

    fn e3() -> Decomposition {
        decomp(4, &[&[(1, 1), (2, 1)], &[(1, 2), (3, 1)], &[(1, 2), (4, 1)]])
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(&Ring::new(n).unwrap(), gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn e3_step_components() {
        let step = polarize_step(&e3(), 0).unwrap();
        assert_eq!(step.degree, 2);
        assert_eq!(step.e_set, vec![1, 2]);
        assert_eq!(step.primed, vec![comp(4, &[(1, 1), (3, 1)]), comp(4, &[(1, 1), (4, 1)])]);
        let doubled: Vec<_> = step.doubled.clone();
        assert_eq!(doubled, vec![comp(5, &[(3, 1), (5, 1)]), comp(5, &[(4, 1), (5, 1)])]);
        assert_eq!(step.raw_target.len(), 5);
        assert!(depolarize_check(&step));
    }

    #[test]
    fn e1_raw_target() {
        let step = polarize_step(&e1(), 0).unwrap();
        assert_eq!(
            step.raw_target.components(),
            &[comp(3, &[(1, 1)]), comp(3, &[(1, 1), (2, 1)]), comp(3, &[(2, 1), (3, 1)])]
        );
        assert_eq!(step.origins, vec![Origin::Unchanged(0), Origin::Primed(1), Origin::Doubled(1)]);
        assert_eq!(step.raw_target.ideal().unwrap(), ideal(3, &[&[1, 1, 0], &[1, 0, 1]]));
    }

    #[test]
    fn nothing_to_polarize() {
        let d = decomp(2, &[&[(1, 1), (2, 1)]]);
        assert_eq!(polarize_step(&d, 0).unwrap_err(), Error::NothingToPolarize { var: 0, degree: 1 });
    }

    #[test]
    fn full_polarization_of_e1() {
        let p = full_polarization(&e1()).unwrap();
        assert_eq!(p.steps.len(), 1);
        assert_eq!(p.provenance, vec![(0, 2)]);
        assert_eq!(p.decomposition.ideal().unwrap(), ideal(3, &[&[1, 1, 0], &[1, 0, 1]]));
    }

    #[test]
    fn squarefree_input_is_left_alone() {
        let d = decomp(3, &[&[(1, 1), (2, 1)], &[(3, 1)]]);
        let p = full_polarization(&d).unwrap();
        assert!(p.steps.is_empty());
        assert_eq!(p.decomposition, d);
    }

    #[test]
    fn provenance_levels_count_down() {
        let d = decomp(2, &[&[(1, 3), (2, 2)]]);
        let p = full_polarization(&d).unwrap();
        assert_eq!(p.provenance, vec![(0, 3), (0, 2), (1, 2)]);
        assert!(p.decomposition.is_squarefree());
    }

    #[test]
    fn corrupted_target_fails_depolarization() {
        let mut step = polarize_step(&e3(), 0).unwrap();
        let comps = step.raw_target.components()[..4].to_vec();
        step.raw_target = Decomposition::new(step.target_ring.clone(), comps).unwrap();
        assert!(!depolarize_check(&step));
    }

    #[test]
    fn lattices() {
        let l = lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(l.nodes(), &[Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0]), Monomial::new(vec![1, 1])]);
        assert_eq!(l.len(), 4);
        let l = lcm_lattice(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(l.nodes(), &[Monomial::new(vec![1, 1]), Monomial::new(vec![2, 0]), Monomial::new(vec![2, 1])]);
        let l = lcm_lattice(&ideal(3, &[&[1, 1, 1]])).unwrap();
        assert_eq!(l.len(), 2);
    }

    #[test]
    fn lattice_generator_bound() {
        let gens: Vec<Vec<u32>> = (0..17).map(|i| vec![i, 16 - i]).collect();
        let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
        assert!(matches!(lcm_lattice(&ideal(2, &refs)), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn surjection_checks() {
        let step = polarize_step(&e1(), 0).unwrap();
        let big = lcm_lattice(&step.raw_target.ideal().unwrap()).unwrap();
        let small = lcm_lattice(&step.source.ideal().unwrap()).unwrap();
        assert!(lattice_surjection_check(&big, &small, &step.varmap()));
        assert!(lattice_surjection_check(&small, &small, &[0, 1]));
        let point = lcm_lattice(&ideal(2, &[&[1, 1]])).unwrap();
        let three = lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert!(!lattice_surjection_check(&point, &three, &[0, 1]));
        // substitution image missing from the target is a failed check, not a panic
        assert!(!lattice_surjection_check(&three, &point, &[0, 1]));
    }

    fn e2() -> Decomposition {
        decomp(4, &[&[(1, 1), (2, 1)], &[(1, 1), (3, 1)], &[(1, 2), (2, 1), (3, 1)], &[(1, 2), (3, 1), (4, 1)]])
    }

    #[test]
    fn e2_replacement() {
        let ctx = polarize_step(&e2(), 0).unwrap().transfer_context().unwrap();
        assert_eq!(
            ctx.origins,
            vec![Origin::Unchanged(0), Origin::Unchanged(1), Origin::Doubled(2), Origin::Doubled(3)]
        );
        let g = Family::from_indices(&ctx.target, &[0, 1, 2, 3]).unwrap();
        assert_eq!(replacement_family(&ctx, &g).unwrap().labels(), &[2, 3]);
        let h = Family::from_indices(&ctx.target, &[2, 3, 0]).unwrap();
        assert_eq!(replacement_family(&ctx, &h).unwrap().labels(), &[2, 3]);
        assert_eq!(bigsize_family(&g), 2);
        let t = transfer_family(&ctx, &g).unwrap();
        assert_eq!(bigsize_family(&t), 1);
    }

    #[test]
    fn singleton_transfer() {
        let ctx = polarize_step(&e2(), 0).unwrap().transfer_context().unwrap();
        let single = Family::from_indices(&ctx.target, &[2]).unwrap();
        let g = transfer_family(&ctx, &single).unwrap();
        assert_eq!(g.labels(), &[2]);
        let dim_target = ctx.target.components()[2].support().dim(ctx.target.n());
        assert_eq!(dim_target, 1 + g.members()[0].support().dim(4));
        // unchanged maximal component maps to itself
        let d = decomp(3, &[&[(1, 2), (2, 1)], &[(3, 1)]]);
        let ctx = polarize_step(&d, 0).unwrap().transfer_context().unwrap();
        let pos = ctx.origins.iter().position(|&o| o == Origin::Unchanged(1)).unwrap();
        let f = Family::from_indices(&ctx.target, &[pos]).unwrap();
        assert_eq!(replacement_family(&ctx, &f).unwrap().labels(), &[1]);
    }

    #[test]
    fn bijection_found_and_reported() {
        let a = Decomposition::from_primes(Ring::new(3).unwrap(), &[VarSet::from_indices([0, 1]), VarSet::from_indices([2])]).unwrap();
        let b = Decomposition::from_primes(Ring::new(3).unwrap(), &[VarSet::from_indices([0]), VarSet::from_indices([1, 2])]).unwrap();
        let p = variable_bijection(&a, &b).unwrap();
        assert_eq!(p[2], 0);
        assert!(variable_bijection(&a, &irredundantize(&decomp(3, &[&[(1, 1)], &[(2, 1)]]))).is_none());
    }
}
