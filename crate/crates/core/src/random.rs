//! Seeded generators for small random ideals.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{irredundantize, Decomposition, IrreducibleComponent, Ring};

/// Shape of a random instance: components with supports of size
/// `1..=max_support` and exponents `1..=max_exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub max_vars: usize,
    pub max_exponent: u32,
    pub max_support: usize,
    pub max_components: usize,
}

/// `n <= 4`, exponents `<= 3`, `s <= 4`.
pub const GENERAL: Shape = Shape { max_vars: 4, max_exponent: 3, max_support: 3, max_components: 4 };

/// Squarefree, `n <= 5`, `s <= 5`.
pub const SQUAREFREE: Shape = Shape { max_vars: 5, max_exponent: 1, max_support: 3, max_components: 5 };

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One irredundant decomposition; duplicate components are dropped.
pub fn instance<R: Rng>(rng: &mut R, shape: Shape) -> Decomposition {
    let n = rng.gen_range(1..=shape.max_vars);
    let s = rng.gen_range(1..=shape.max_components);
    let mut comps: Vec<IrreducibleComponent> = Vec::with_capacity(s);
    for _ in 0..s {
        let k = rng.gen_range(1..=shape.max_support.min(n));
        let mut powers = vec![0u32; n];
        for j in sample(rng, n, k).into_iter() {
            powers[j] = rng.gen_range(1..=shape.max_exponent);
        }
        let q = IrreducibleComponent::new(powers).expect("support is nonempty");
        if !comps.contains(&q) {
            comps.push(q);
        }
    }
    let ring = Ring::new(n).expect("n >= 1");
    irredundantize(&Decomposition::new(ring, comps).expect("at least one component"))
}

/// `count` instances from a fixed seed.
pub fn suite(seed: u64, count: usize, shape: Shape) -> Vec<Decomposition> {
    let mut r = rng(seed);
    (0..count).map(|_| instance(&mut r, shape)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(suite(7, 20, GENERAL), suite(7, 20, GENERAL));
        assert_ne!(suite(7, 20, GENERAL), suite(8, 20, GENERAL));
    }

    #[test]
    fn shapes_respected() {
        for d in suite(1, 200, GENERAL) {
            assert!(d.is_irredundant());
            assert!(d.n() <= 4 && d.len() <= 4);
            assert!(d.components().iter().all(|q| q.powers().iter().all(|&e| e <= 3)));
            assert!(d.components().iter().all(|q| (1..=3).contains(&q.support().height())));
        }
        for d in suite(1, 100, SQUAREFREE) {
            assert!(d.is_squarefree() && d.n() <= 5 && d.len() <= 5);
        }
    }
}
