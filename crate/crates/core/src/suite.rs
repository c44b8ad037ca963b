//! Batch verification over the built-in examples and over random ideals.

use serde_json::json;

use crate::error::Result;
use crate::fixtures::{fixture, FIXTURES};
use crate::ideal::{Decomposition, IrreducibleComponent, VarSet};
use crate::invariants::{bigsize_family, bigsize_ideal, bigsize_order, is_admissible_order, size, Family, TotalOrder};
use crate::polarization::{full_polarization, polarize_step, replacement_family, variable_bijection};
use crate::random::{suite as random_suite, GENERAL, SQUAREFREE};
use crate::report::Report;
use crate::sdepth::{sdepth_with_limit, split_lower_bound, Mode};
use crate::verify::{transfer_chain_check, verify_instance, verify_polarization, Check, Limits, Relation};

fn decomp(name: &str) -> Result<Decomposition> {
    fixture(name)?.document().decomposition()
}

fn eq(name: String, lhs: usize, rhs: usize) -> Check {
    Check::new(name, lhs as i64, Relation::Eq, rhs as i64)
}

fn order_bigsize(d: &Decomposition, labels: &[usize]) -> Result<usize> {
    bigsize_order(d, &TotalOrder::from_labels(labels)?)
}

/// 1-based labels into a family of `d`.
fn family(d: &Decomposition, labels: &[usize]) -> Result<Family> {
    let idx: Vec<usize> = labels.iter().map(|l| l - 1).collect();
    Family::from_indices(d, &idx)
}

fn comp(n: usize, pairs: &[(usize, u32)]) -> Result<IrreducibleComponent> {
    let pairs: Vec<(usize, u32)> = pairs.iter().map(|&(j, e)| (j - 1, e)).collect();
    IrreducibleComponent::from_pairs(n, &pairs)
}

/// Every fixture through the generic checks, plus the values the examples
/// state explicitly.
pub fn worked_examples(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("verify --suite paper-examples", None);
    for f in FIXTURES {
        let d = f.document().decomposition()?;
        for c in verify_instance(&d, limits)? {
            r.check(Check { name: format!("{}: {}", f.name, c.name), ..c });
        }
        if !d.is_squarefree() {
            let (full, pc) = verify_polarization(&d, limits)?;
            for c in pc.checks.into_iter().chain(transfer_chain_check(&full, limits)?) {
                r.check(Check { name: format!("{}: {}", f.name, c.name), ..c });
            }
        }
        for n in f.notes {
            r.note(format!("{}: {n}", f.name));
        }
    }

    let e = decomp("e")?;
    r.check(eq("e: size".into(), size(&e)?, 1));
    r.check(Check::flag("e: order (2,3,1) is not admissible", !is_admissible_order(&e, &TotalOrder::from_labels(&[2, 3, 1])?)));
    for labels in [[1, 2, 3], [2, 1, 3], [3, 1, 2]] {
        r.check(Check::flag(format!("e: order {labels:?} is admissible"), is_admissible_order(&e, &TotalOrder::from_labels(&labels)?)));
        r.check(eq(format!("e: bigsize along {labels:?}"), order_bigsize(&e, &labels)?, 2));
    }

    let ex = decomp("ex")?;
    r.check(eq("ex: bigsize(F), F = (P1,P2,P5)".into(), bigsize_family(&family(&ex, &[1, 2, 5])?), 1));
    r.check(eq("ex: bigsize(G), G = (P1,P3,P4)".into(), bigsize_family(&family(&ex, &[1, 3, 4])?), 2));

    let ep = decomp("e-prime")?;
    let ideal = ep.ideal()?;
    let big = bigsize_ideal(&ep, limits.orders)?;
    r.check(eq("e-prime: bigsize(I)".into(), big.value, 4));
    // the usual order is not admissible (P6 adds nothing after P1..P4);
    // swapping P5 and P6 gives an admissible order with the same family
    let usual = TotalOrder::from_labels(&[1, 2, 3, 4, 6, 5, 7])?;
    r.check(Check::flag("e-prime: the usual order is not admissible", !is_admissible_order(&ep, &TotalOrder::from_labels(&[1, 2, 3, 4, 5, 6, 7])?)));
    let f = crate::invariants::maximal_admissible_family(&ep, &usual)?;
    r.check(Check::flag("e-prime: (1,2,3,4,6,5,7) yields F = (P1..P5)", f.labels() == [0, 1, 2, 3, 4]));
    r.check(eq("e-prime: bigsize(F)".into(), bigsize_family(&f), 4));
    let g = crate::invariants::maximal_admissible_family(&ep, &TotalOrder::from_labels(&[7, 5, 3, 2, 1, 4, 6])?)?;
    r.check(Check::flag("e-prime: (7,5,3,2,1,4,6) yields G = (P7,P5,P3,P1,P4)", g.labels() == [6, 4, 2, 0, 3]));
    r.check(eq("e-prime: bigsize(G)".into(), bigsize_family(&g), 3));
    let sd = sdepth_with_limit(&ideal, Mode::Ideal, limits.poset)?.value;
    let sq = sdepth_with_limit(&ideal, Mode::Quotient, limits.poset)?.value;
    r.check(eq("e-prime: sdepth(I)".into(), sd, 5));
    r.check(eq("e-prime: sdepth(S/I)".into(), sq, 3));
    r.check(eq("e-prime: size by set cover".into(), size(&ep)?, 2));
    r.value("e-prime", json!({"size": size(&ep)?, "bigsize": big.value, "sdepth": sd, "sdepth_quotient": sq}));

    let e1 = decomp("e1")?;
    r.check(eq("e1: size".into(), size(&e1)?, 0));
    r.check(eq("e1: bigsize(I)".into(), bigsize_ideal(&e1, limits.orders)?.value, 0));

    let e0 = decomp("e0")?;
    r.check(eq("e0: size".into(), size(&e0)?, 1));
    for labels in [[1, 2, 3], [2, 1, 3], [2, 3, 1], [3, 2, 1]] {
        r.check(Check::flag(format!("e0: order {labels:?} is admissible"), is_admissible_order(&e0, &TotalOrder::from_labels(&labels)?)));
    }
    for labels in [[1, 2, 3], [3, 2, 1]] {
        r.check(eq(format!("e0: bigsize along {labels:?}"), order_bigsize(&e0, &labels)?, 1));
    }
    // G1 = (Q3+Q2, Q3+Q1): neither sum contains the other and the first has
    // dimension 1, so bigsize(G1) = min(1, 1 + 0) = 1 and bigsize(G) = 2
    let g1 = Family::from_indices(&e0, &[1, 0, 2])?;
    r.check(eq("e0: bigsize(G1), G = (Q2,Q1,Q3)".into(), bigsize_family(&crate::invariants::reduce_f1(&g1)?), 1));
    for labels in [[2, 1, 3], [2, 3, 1]] {
        r.check(eq(format!("e0: bigsize along {labels:?} by the recursion"), order_bigsize(&e0, &labels)?, 2));
    }

    let e2 = decomp("e2")?;
    r.check(eq("e2: size".into(), size(&e2)?, 1));
    r.check(eq("e2: bigsize(F), F = (Q3,Q4)".into(), bigsize_family(&family(&e2, &[3, 4])?), 1));
    let ctx = polarize_step(&e2, 0)?.transfer_context()?;
    let expected = vec![
        comp(5, &[(1, 1), (2, 1)])?,
        comp(5, &[(1, 1), (3, 1)])?,
        comp(5, &[(2, 1), (3, 1), (5, 1)])?,
        comp(5, &[(3, 1), (4, 1), (5, 1)])?,
    ];
    r.check(Check::flag("e2: polarized components are Q1, Q2, Q3'', Q4''", ctx.target.components() == expected.as_slice()));
    for (what, labels) in [("G~", [1, 2, 3, 4].as_slice()), ("H~", [3, 4, 1].as_slice())] {
        let ft = family(&ctx.target, labels)?;
        r.check(eq(format!("e2: bigsize({what})"), bigsize_family(&ft), 2));
        let g = replacement_family(&ctx, &ft)?;
        r.check(Check::flag(format!("e2: replacement of {what} is (Q3,Q4)"), g.labels() == [2, 3]));
    }

    let e3 = decomp("e3")?;
    r.check(eq("e3: bigsize(F)".into(), bigsize_family(&family(&e3, &[1, 2, 3])?), 2));
    r.check(eq("e3: size".into(), size(&e3)?, 2));
    let step = polarize_step(&e3, 0)?;
    r.check(eq("e3: polarization step components".into(), step.raw_target.len(), 5));
    let target = step.target()?;
    r.check(eq("e3: size of the polarization".into(), size(&target)?, 2));
    // G~ = (Q2'', Q2', Q1, Q3') in the order unchanged, primed, doubled
    r.check(eq("e3: bigsize(G~)".into(), bigsize_family(&Family::from_indices(&target, &[3, 1, 0, 2])?), 3));

    for (name, tau) in [("e4", vec![0, 1, 2, 3, 5]), ("e5", vec![0, 1, 2, 4, 6])] {
        let f = fixture(name)?;
        let d = decomp(name)?;
        let z = f.split_z().expect("split fixtures define Z");
        let bound = split_lower_bound(&d, z)?;
        r.check(Check::flag(format!("{name}: unique qualifying tau"), bound.qualifying() == vec![tau]));
        r.check(eq(format!("{name}: split bound"), bound.value.unwrap_or(0), 5));
        r.check(eq(format!("{name}: split bound equals sdepth(I)"), bound.value.unwrap_or(0), sd));
        r.check(Check::new(
            format!("{name}: bound with the all-components term <= sdepth(I)"),
            bound.complete.unwrap_or(0) as i64,
            Relation::Le,
            sd as i64,
        ));
    }

    let full = full_polarization(&decomp("remark-j")?)?;
    let bij = variable_bijection(&full.decomposition, &ep);
    r.check(Check::flag("remark-j: polarization equals e-prime up to renaming", bij.is_some()));
    if let Some(p) = bij {
        let names = full.decomposition.ring().names();
        let map: serde_json::Map<String, serde_json::Value> =
            p.iter().enumerate().map(|(j, &t)| (names[j].clone(), json!(ep.ring().name(t)))).collect();
        r.value("remark-j.bijection", map);
    }
    Ok(r)
}

/// Random instances: `count` general ones and `count / 2` squarefree ones.
pub fn random(seed: u64, count: usize, limits: &Limits) -> Result<Report> {
    let mut r = Report::new("verify --suite random", None);
    r.value("seed", seed);
    let general = random_suite(seed, count, GENERAL);
    let squarefree = random_suite(seed, count / 2, SQUAREFREE);
    let mut skipped = 0;
    let mut chains = 0;
    for (tag, list) in [("general", &general), ("squarefree", &squarefree)] {
        for (i, d) in list.iter().enumerate() {
            let prefix = format!("{tag} #{i} {}", d.fmt_components());
            let mut checks = verify_instance(d, limits)?;
            if !d.is_squarefree() {
                let (full, pc) = verify_polarization(d, limits)?;
                skipped += pc.skipped_steps;
                checks.extend(pc.checks);
                if let Some(c) = transfer_chain_check(&full, limits)? {
                    chains += 1;
                    checks.push(c);
                }
            } else if d.len() <= crate::sdepth::SPLIT_COMPONENT_LIMIT {
                let sd = sdepth_with_limit(&d.ideal()?, Mode::Ideal, limits.poset)?.value;
                for j in 0..d.n() {
                    if let Some(b) = split_lower_bound(d, VarSet::singleton(j))?.complete {
                        let name = format!("complete split bound Z={{x{}}} <= sdepth(I)", j + 1);
                        checks.push(Check::new(name, b as i64, Relation::Le, sd as i64));
                    }
                }
                for q in d.components() {
                    if let Some(b) = split_lower_bound(d, q.support())?.value {
                        let z: Vec<&str> = q.support().iter().map(|j| d.ring().name(j)).collect();
                        let name = format!("split bound Z={{{}}} <= sdepth(I)", z.join(","));
                        checks.push(Check::new(name, b as i64, Relation::Le, sd as i64));
                    }
                }
            }
            for c in checks {
                r.check(Check { name: format!("{prefix}: {}", c.name), ..c });
            }
        }
    }
    r.value("instances", json!({"general": general.len(), "squarefree": squarefree.len()}));
    r.value("transfer_chains", chains);
    r.value("steps_without_sdepth_check", skipped);
    if skipped > 0 {
        r.note(format!(
            "{skipped} polarization steps had a poset over {} elements; their sdepth inequalities were not evaluated",
            limits.step_poset
        ));
    }
    Ok(r)
}
