//! Monomials, monomial ideals and irreducible decompositions.
//!
//! Monomials are exponent vectors over a fixed ambient [`Ring`]. Ideals are
//! kept in canonical form: the minimal generating set, sorted
//! lexicographically, so equal ideals compare equal.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest number of variables supported; variable sets are `u64` masks.
pub const MAX_VARS: usize = 64;

/// Polynomial ring in `n` named variables. The coefficient field plays no
/// role in anything computed here and is not modelled.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    /// Ring with the default names `x1..xn`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_names((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                names.len()
            )));
        }
        let distinct: BTreeSet<&str> = names.iter().map(String::as_str).collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidRing("variable names must be distinct".into()));
        }
        if let Some(bad) = names.iter().find(|s| !is_identifier(s)) {
            return Err(Error::InvalidRing(format!("`{bad}` is not a valid variable name")));
        }
        Ok(Ring { names: names.into() })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, j: usize) -> &str {
        &self.names[j]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// True when the names are exactly `x1..xn`.
    pub fn has_default_names(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, s)| *s == format!("x{}", i + 1))
    }

    /// This ring with one extra variable appended. The new name is `x{n+1}`
    /// unless that name is taken, in which case a fresh suffix is chosen.
    pub fn extended(&self) -> Result<Ring> {
        let mut names: Vec<String> = self.names.to_vec();
        let mut k = names.len() + 1;
        let name = loop {
            let candidate = format!("x{k}");
            if !names.contains(&candidate) {
                break candidate;
            }
            k += 1;
        };
        names.push(name);
        Ring::with_names(names)
    }

    /// Subring on the given variables, keeping their names and relative order.
    pub fn subring(&self, vars: VarSet) -> Result<Ring> {
        Ring::with_names(vars.iter().map(|j| self.names[j].clone()).collect())
    }

    fn check_var(&self, j: usize) -> Result<()> {
        if j < self.n() {
            Ok(())
        } else {
            Err(Error::VariableOutOfRange { index: j, n: self.n() })
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.names[..])
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Set of variable indices, i.e. a monomial prime ideal `(x_j : j in set)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(pub u64);

/// The radical of an irreducible component.
pub type PrimeSupport = VarSet;

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn all(n: usize) -> VarSet {
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(j: usize) -> VarSet {
        VarSet(1u64 << j)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> VarSet {
        VarSet(it.into_iter().fold(0, |acc, j| acc | (1u64 << j)))
    }

    /// Number of variables, i.e. the height of the prime.
    pub fn height(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, j: usize) -> bool {
        j < 64 && self.0 >> j & 1 == 1
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(j)
            }
        })
    }

    /// `dim S/P = n - height`.
    pub fn dim(self, n: usize) -> usize {
        n - self.height()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|j| j + 1)).finish()
    }
}

/// Exponent vector `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_j^e` in `n` variables.
    pub fn pure_power(n: usize, j: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[j] = e;
        Monomial(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, _)| j))
    }

    /// `Some((j, e))` when this is `x_j^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (j, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((j, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Keeps only the coordinates in `vars`, producing a monomial of the
    /// subring on those variables.
    pub fn project(&self, vars: VarSet) -> Monomial {
        Monomial(vars.iter().map(|j| self.0[j]).collect())
    }

    pub fn fmt_with(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    ring.name(j).to_string()
                } else {
                    format!("{}^{e}", ring.name(j))
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monomial ideal given by its minimal generators in canonical order.
/// An empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Fails on the zero and unit ideals.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ∩ K[vars]` re-embedded in the subring on `vars`: the generators
    /// supported inside `vars`, projected.
    pub fn restrict(&self, vars: VarSet) -> Result<MonomialIdeal> {
        let sub = self.ring.subring(vars)?;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support().is_subset(vars))
            .map(|g| g.project(vars));
        minimalize(&sub, gens)
    }

    /// Image under a variable substitution `x_j -> x_{map[j]}` into `target`.
    pub fn substitute(&self, target: &Ring, map: &[usize]) -> Result<MonomialIdeal> {
        let gens: Vec<Monomial> = self.gens.iter().map(|g| substitute(g, target.n(), map)).collect();
        minimalize(target, gens)
    }

    pub fn fmt_gens(&self) -> String {
        if self.gens.is_empty() {
            return "0".into();
        }
        self.gens.iter().map(|g| g.fmt_with(&self.ring)).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.fmt_gens())
    }
}

pub(crate) fn substitute(m: &Monomial, n: usize, map: &[usize]) -> Monomial {
    let mut v = vec![0; n];
    for (j, &e) in m.exponents().iter().enumerate() {
        v[map[j]] += e;
    }
    Monomial::new(v)
}

/// Canonical antichain generating the same ideal as `gens`.
pub fn minimalize<I>(ring: &Ring, gens: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.n() != ring.n() {
            return Err(Error::AmbientMismatch { expected: ring.n(), found: g.n() });
        }
        all.push(g);
    }
    // Sorting by degree first means a divisor is always seen before its multiples.
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    Ok(MonomialIdeal { ring: ring.clone(), gens: kept })
}

pub fn member(m: &Monomial, ideal: &MonomialIdeal) -> Result<bool> {
    if m.n() != ideal.n() {
        return Err(Error::AmbientMismatch { expected: ideal.n(), found: m.n() });
    }
    Ok(ideal.contains(m))
}

pub fn intersect(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let (first, rest) = ideals.split_first().ok_or(Error::EmptyInput("intersect needs at least one ideal"))?;
    let mut acc = first.clone();
    for next in rest {
        if next.ring != acc.ring {
            return Err(Error::AmbientMismatch { expected: acc.n(), found: next.n() });
        }
        let lcms: Vec<Monomial> = acc
            .gens
            .iter()
            .flat_map(|a| next.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        acc = minimalize(&acc.ring, lcms)?;
    }
    Ok(acc)
}

/// Ideal generated by pure powers of distinct variables. Stored densely:
/// `powers[j] == 0` means `x_j` does not occur.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    powers: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(powers: Vec<u32>) -> Result<Self> {
        if powers.iter().all(|&e| e == 0) {
            return Err(Error::EmptyComponent);
        }
        if powers.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("{} variables", powers.len())));
        }
        Ok(IrreducibleComponent { powers })
    }

    /// Component from `(variable index, exponent)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<Self> {
        let mut powers = vec![0; n];
        for &(j, e) in pairs {
            if j >= n {
                return Err(Error::VariableOutOfRange { index: j, n });
            }
            powers[j] = e;
        }
        Self::new(powers)
    }

    /// Squarefree component, i.e. the prime on `vars`.
    pub fn prime(n: usize, vars: VarSet) -> Result<Self> {
        Self::new((0..n).map(|j| u32::from(vars.contains(j))).collect())
    }

    pub fn n(&self) -> usize {
        self.powers.len()
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.powers[j]
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.powers.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, _)| j))
    }

    pub fn is_squarefree(&self) -> bool {
        self.powers.iter().all(|&e| e <= 1)
    }

    /// `self ⊇ other` as ideals.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .powers
            .iter()
            .zip(&self.powers)
            .all(|(&theirs, &ours)| theirs == 0 || (ours > 0 && ours <= theirs))
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.powers
            .iter()
            .zip(m.exponents())
            .any(|(&p, &e)| p > 0 && e >= p)
    }

    pub fn generators(&self) -> Vec<Monomial> {
        self.powers
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| Monomial::pure_power(self.n(), j, e))
            .collect()
    }

    pub fn to_ideal(&self, ring: &Ring) -> Result<MonomialIdeal> {
        minimalize(ring, self.generators())
    }

    /// Appends `extra` absent variables.
    pub fn extend(&self, extra: usize) -> IrreducibleComponent {
        let mut powers = self.powers.clone();
        powers.extend(std::iter::repeat(0).take(extra));
        IrreducibleComponent { powers }
    }

    /// `Q ∩ K[vars]` in the subring on `vars`; `None` when that is zero.
    pub fn restrict(&self, vars: VarSet) -> Option<IrreducibleComponent> {
        IrreducibleComponent::new(vars.iter().map(|j| self.powers[j]).collect()).ok()
    }

    pub(crate) fn with_power(&self, j: usize, e: u32) -> IrreducibleComponent {
        let mut powers = self.powers.clone();
        powers[j] = e;
        IrreducibleComponent { powers }
    }

    pub(crate) fn pushed(&self, e: u32) -> IrreducibleComponent {
        let mut powers = self.powers.clone();
        powers.push(e);
        IrreducibleComponent { powers }
    }

    /// Canonical ordering key: exponents with absent variables ranked last.
    fn order_key(&self) -> Vec<u32> {
        self.powers.iter().map(|&e| if e == 0 { u32::MAX } else { e }).collect()
    }

    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }

    pub fn fmt_with(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self.generators().iter().map(|g| g.fmt_with(ring)).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .powers
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{e}", j + 1) })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sum of two irreducible ideals: union of supports, minimum exponent on
/// shared variables.
pub fn comp_sum(a: &IrreducibleComponent, b: &IrreducibleComponent) -> IrreducibleComponent {
    let powers = a
        .powers
        .iter()
        .zip(&b.powers)
        .map(|(&x, &y)| match (x, y) {
            (0, e) | (e, 0) => e,
            (x, y) => x.min(y),
        })
        .collect();
    IrreducibleComponent { powers }
}

pub fn radical(q: &IrreducibleComponent) -> PrimeSupport {
    q.support()
}

/// Presentation of an ideal as an ordered intersection of irreducible
/// components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    ring: Ring,
    components: Vec<IrreducibleComponent>,
    irredundant: bool,
}

impl Decomposition {
    /// Unchecked presentation; call [`irredundantize`] to get the flag set.
    pub fn new(ring: Ring, components: Vec<IrreducibleComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyInput("a decomposition needs at least one component"));
        }
        if let Some(c) = components.iter().find(|c| c.n() != ring.n()) {
            return Err(Error::AmbientMismatch { expected: ring.n(), found: c.n() });
        }
        Ok(Decomposition { ring, components, irredundant: false })
    }

    /// Presentation that must already be irredundant; fails otherwise.
    pub fn irredundant(ring: Ring, components: Vec<IrreducibleComponent>) -> Result<Self> {
        let d = Decomposition::new(ring, components)?;
        if irredundant_indices(&d.components).len() != d.components.len() {
            return Err(Error::NotIrredundant);
        }
        Ok(Decomposition { irredundant: true, ..d })
    }

    /// Squarefree decomposition from prime supports.
    pub fn from_primes(ring: Ring, primes: &[VarSet]) -> Result<Self> {
        let n = ring.n();
        let comps = primes
            .iter()
            .map(|&p| IrreducibleComponent::prime(n, p))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::irredundant(ring, comps)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    pub fn is_squarefree(&self) -> bool {
        self.components.iter().all(IrreducibleComponent::is_squarefree)
    }

    pub fn radicals(&self) -> Vec<VarSet> {
        self.components.iter().map(radical).collect()
    }

    /// Union of all radicals.
    pub fn support(&self) -> VarSet {
        self.components.iter().fold(VarSet::EMPTY, |acc, c| acc.union(c.support()))
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let ideals = self
            .components
            .iter()
            .map(|c| c.to_ideal(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        intersect(&ideals)
    }

    /// Same components, same order, the ring with `extra` variables appended.
    pub fn extend(&self, ring: Ring) -> Result<Decomposition> {
        let extra = ring
            .n()
            .checked_sub(self.n())
            .ok_or(Error::AmbientMismatch { expected: self.n(), found: ring.n() })?;
        Ok(Decomposition {
            ring,
            components: self.components.iter().map(|c| c.extend(extra)).collect(),
            irredundant: self.irredundant,
        })
    }


    pub fn fmt_components(&self) -> String {
        self.components.iter().map(|c| c.fmt_with(&self.ring)).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_components())
    }
}

/// Indices of the components kept by [`irredundantize`].
///
/// For irreducible components a component is superfluous iff it contains
/// another one, so the kept set is the containment-minimal components, with
/// the first of several equal ones.
pub fn irredundant_indices(components: &[IrreducibleComponent]) -> Vec<usize> {
    (0..components.len())
        .filter(|&i| {
            let q = &components[i];
            !components.iter().enumerate().any(|(j, other)| {
                j != i && q.contains(other) && (other != q || j < i)
            })
        })
        .collect()
}

pub fn irredundantize(d: &Decomposition) -> Decomposition {
    let kept = irredundant_indices(&d.components);
    Decomposition {
        ring: d.ring.clone(),
        components: kept.into_iter().map(|i| d.components[i].clone()).collect(),
        irredundant: true,
    }
}

/// Irredundant irreducible decomposition, components in canonical order.
///
/// Splits a mixed generator `m = u*v` (u the full power of the
/// smallest-index variable of `m`) via `(J, uv) = (J, u) ∩ (J, v)` until all
/// generators are pure powers.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    ideal.ensure_proper_nonzero()?;
    let n = ideal.n();
    let mut leaves: Vec<IrreducibleComponent> = Vec::new();
    let mut stack: Vec<Vec<Monomial>> = vec![ideal.gens.clone()];
    let mut seen: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    while let Some(gens) = stack.pop() {
        let gens = minimalize(&ideal.ring, gens)?.gens;
        if !seen.insert(gens.clone()) {
            continue;
        }
        match gens.iter().position(|g| g.as_pure_power().is_none()) {
            None => {
                let mut powers = vec![0; n];
                for g in &gens {
                    let (j, e) = g.as_pure_power().expect("pure power");
                    powers[j] = e;
                }
                leaves.push(IrreducibleComponent::new(powers)?);
            }
            Some(pos) => {
                let m = &gens[pos];
                let j = m.exponents().iter().position(|&e| e > 0).expect("nonconstant");
                let u = Monomial::pure_power(n, j, m.exponent(j));
                let mut rest = m.exponents().to_vec();
                rest[j] = 0;
                let v = Monomial::new(rest);
                let mut with_u = gens.clone();
                with_u[pos] = u;
                let mut with_v = gens.clone();
                with_v[pos] = v;
                stack.push(with_v);
                stack.push(with_u);
            }
        }
    }
    leaves.sort_by(IrreducibleComponent::canonical_cmp);
    leaves.dedup();
    let d = Decomposition::new(ideal.ring.clone(), leaves)?;
    Ok(irredundantize(&d))
}

/// Largest exponent of `x_j` among the minimal generators.
pub fn deg_var(ideal: &MonomialIdeal, j: usize) -> Result<u32> {
    ideal.ring.check_var(j)?;
    Ok(ideal.gens.iter().map(|g| g.exponent(j)).max().unwrap_or(0))
}

/// Associated primes of `S/I` read off an irredundant decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedPrimes {
    /// Distinct radicals in order of first appearance.
    pub primes: Vec<PrimeSupport>,
    /// The ones maximal under inclusion.
    pub maximal: Vec<PrimeSupport>,
}

impl AssociatedPrimes {
    pub fn is_maximal(&self, p: PrimeSupport) -> bool {
        self.maximal.contains(&p)
    }

    pub fn support(&self) -> VarSet {
        self.primes.iter().fold(VarSet::EMPTY, |a, &p| a.union(p))
    }
}

pub fn ass_primes(d: &Decomposition) -> Result<AssociatedPrimes> {
    if !d.irredundant {
        return Err(Error::NotIrredundant);
    }
    let mut primes: Vec<VarSet> = Vec::new();
    for p in d.radicals() {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let maximal = primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| q != p && p.is_subset(q)))
        .collect();
    Ok(AssociatedPrimes { primes, maximal })
}

/// Drops the variables outside the sum of the associated primes. Returns the
/// decomposition in the smaller ring and how many variables were removed.
pub fn strip_free_variables(d: &Decomposition) -> Result<(Decomposition, usize)> {
    if !d.irredundant {
        return Err(Error::NotIrredundant);
    }
    let used = d.support();
    let removed = d.n() - used.height();
    if removed == 0 {
        return Ok((d.clone(), 0));
    }
    let ring = d.ring.subring(used)?;
    let components = d
        .components
        .iter()
        .map(|c| c.restrict(used).ok_or(Error::EmptyComponent))
        .collect::<Result<Vec<_>>>()?;
    Ok((Decomposition { ring, components, irredundant: true }, removed))
}
