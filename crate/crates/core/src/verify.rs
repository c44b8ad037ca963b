//! Inequality checks on single instances.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{deg_var, minimalize, Decomposition, Monomial, MonomialIdeal, Ring};
use crate::invariants::{admissible_orders, bigsize_family, bigsize_ideal, families, size, DEFAULT_ORDER_BOUND};
use crate::polarization::{
    depolarize_check, full_polarization, lattice_surjection_check, lcm_lattice_with_limit, transfer_family,
    FullPolarization, DEFAULT_LATTICE_GENERATORS,
};
use crate::sdepth::{char_poset_with_limit, sdepth_of_poset, sdepth_with_limit, Mode, DEFAULT_POSET_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "==",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Check { name: name.into(), lhs, rhs, relation, pass: relation.holds(lhs, rhs) }
    }

    /// A yes/no property recorded as `value == 1`.
    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, ok as i64, Relation::Eq, 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub poset: usize,
    pub orders: usize,
    pub lattice_generators: usize,
    /// Poset size up to which the per-step sdepth inequalities are checked.
    pub step_poset: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            poset: DEFAULT_POSET_LIMIT,
            orders: DEFAULT_ORDER_BOUND,
            lattice_generators: DEFAULT_LATTICE_GENERATORS,
            step_poset: DEFAULT_POSET_LIMIT,
        }
    }
}

/// Stanley depth, size, and bigsize inequalities for one decomposition.
pub fn verify_instance(d: &Decomposition, limits: &Limits) -> Result<Vec<Check>> {
    let ideal = d.ideal()?;
    let size = size(d)? as i64;
    let sd = sdepth_with_limit(&ideal, Mode::Ideal, limits.poset)?.value as i64;
    let mut checks = vec![Check::new("sdepth(I) >= size(I) + 1", sd, Relation::Ge, size + 1)];

    let mut min_family = None::<usize>;
    for order in admissible_orders(d, limits.orders)? {
        for f in families(d, &order)? {
            let b = bigsize_family(&f);
            min_family = Some(min_family.map_or(b, |m| m.min(b)));
        }
    }
    if let Some(m) = min_family {
        checks.push(Check::new("min bigsize(F) over admissible families >= size(I)", m as i64, Relation::Ge, size));
    }

    if d.is_squarefree() {
        let big = bigsize_ideal(d, limits.orders)?.value as i64;
        checks.push(Check::new("sdepth(I) >= 1 + bigsize(I)", sd, Relation::Ge, 1 + big));
        let sq = sdepth_with_limit(&ideal, Mode::Quotient, limits.poset)?.value as i64;
        checks.push(Check::new("sdepth(S/I) >= size(I)", sq, Relation::Ge, size));
    }
    Ok(checks)
}

/// Exact Stanley depth when the poset fits in `limit`, `None` otherwise.
fn small_sdepth(ideal: &MonomialIdeal, mode: Mode, limit: usize) -> Result<Option<usize>> {
    match char_poset_with_limit(ideal, mode, limit) {
        Ok(p) => Ok(Some(sdepth_of_poset(&p).value)),
        Err(e) if e.is_bound() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Generator-wise polarization: `x_j^a` becomes `x_j` times one new
/// variable for each level `2..=a`; the new variable for `(j, l)` is the
/// one `provenance` assigns to it.
pub fn generator_polarization(ideal: &MonomialIdeal, target: &Ring, provenance: &[(usize, u32)]) -> Result<MonomialIdeal> {
    let n = ideal.n();
    let gens = ideal.gens().iter().map(|g| {
        let mut v = vec![0u32; target.n()];
        for j in 0..n {
            let a = g.exponent(j);
            if a == 0 {
                continue;
            }
            v[j] = 1;
            for l in 2..=a {
                match provenance.iter().position(|&p| p == (j, l)) {
                    Some(k) => v[n + k] = 1,
                    None => return None,
                }
            }
        }
        Some(Monomial::new(v))
    });
    let gens: Option<Vec<Monomial>> = gens.collect();
    let gens = gens.ok_or_else(|| Error::Defect("provenance misses a power level".into()))?;
    minimalize(target, gens)
}

/// Summary of the polarization checks of one instance.
#[derive(Clone, Debug, Default)]
pub struct PolarizationChecks {
    pub checks: Vec<Check>,
    /// Steps whose sdepth inequalities were skipped for poset size.
    pub skipped_steps: usize,
}

pub fn verify_polarization(d: &Decomposition, limits: &Limits) -> Result<(FullPolarization, PolarizationChecks)> {
    let mut out = PolarizationChecks::default();
    let ideal = d.ideal()?;
    let full = full_polarization(d)?;
    let expected_steps: u32 = (0..d.n()).map(|j| deg_var(&ideal, j).map(|e| e.saturating_sub(1))).sum::<Result<u32>>()?;
    out.checks.push(Check::new("polarization steps == sum(deg_j - 1)", full.steps.len() as i64, Relation::Eq, expected_steps as i64));

    for (k, step) in full.steps.iter().enumerate() {
        let tag = format!("step {}", k + 1);
        out.checks.push(Check::flag(format!("{tag}: depolarization recovers I"), depolarize_check(step)));
        let source = step.source.ideal()?;
        let target = step.raw_target.ideal()?;
        let lattice_ok = match (
            lcm_lattice_with_limit(&target, limits.lattice_generators),
            lcm_lattice_with_limit(&source, limits.lattice_generators),
        ) {
            (Ok(big), Ok(small)) => Some(lattice_surjection_check(&big, &small, &step.varmap())),
            (Err(e), _) | (_, Err(e)) if e.is_bound() => None,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        if let Some(ok) = lattice_ok {
            out.checks.push(Check::flag(format!("{tag}: lcm-lattice map is a join-preserving surjection"), ok));
        }
        let mut skipped = false;
        for (mode, what) in [(Mode::Ideal, "I"), (Mode::Quotient, "S/I")] {
            let before = small_sdepth(&source, mode, limits.step_poset)?;
            let after = small_sdepth(&target, mode, limits.step_poset)?;
            match (before, after) {
                (Some(b), Some(a)) => out.checks.push(Check::new(
                    format!("{tag}: sdepth({what}~) <= sdepth({what}) + 1"),
                    a as i64,
                    Relation::Le,
                    b as i64 + 1,
                )),
                _ => skipped = true,
            }
        }
        out.skipped_steps += skipped as usize;
    }

    let polarized = full.decomposition.ideal()?;
    out.checks.push(Check::flag("polarization is squarefree", polarized.is_squarefree()));
    let oracle = generator_polarization(&ideal, polarized.ring(), &full.provenance)?;
    out.checks.push(Check::flag("polarization matches generator-wise polarization", oracle == polarized));
    Ok((full, out))
}

/// Carries a best family of the polarization down the chain with
/// [`transfer_family`]; `None` when the polarization has too many
/// components to enumerate orders.
pub fn transfer_chain_check(full: &FullPolarization, limits: &Limits) -> Result<Option<Check>> {
    if full.decomposition.len() > limits.orders {
        return Ok(None);
    }
    let top = bigsize_ideal(&full.decomposition, limits.orders)?;
    let mut family = top.family.clone();
    for step in full.steps.iter().rev() {
        let ctx = step.transfer_context()?;
        family = match transfer_family(&ctx, &family) {
            Ok(f) => f,
            Err(Error::Defect(_) | Error::MalformedContext(_)) => {
                return Ok(Some(Check::flag("transfer chain: r + bigsize(F) <= bigsize(F^(r))", false)));
            }
            Err(e) => return Err(e),
        };
    }
    let r = full.steps.len() as i64;
    Ok(Some(Check::new(
        "transfer chain: r + bigsize(F) <= bigsize(F^(r))",
        r + bigsize_family(&family) as i64,
        Relation::Le,
        top.value as i64,
    )))
}
