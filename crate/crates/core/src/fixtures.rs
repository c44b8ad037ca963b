//! Built-in example ideals, addressable by name.

use crate::document::{parse_ideal, IdealDocument};
use crate::error::{Error, Result};
use crate::ideal::VarSet;

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    /// Default `Z` for the splitting bound (0-based variables).
    pub split_z: Option<&'static [usize]>,
    pub notes: &'static [&'static str],
}

impl Fixture {
    pub fn document(&self) -> IdealDocument {
        parse_ideal(self.text).expect("built-in fixtures parse")
    }

    pub fn split_z(&self) -> Option<VarSet> {
        self.split_z.map(|z| VarSet::from_indices(z.iter().copied()))
    }
}

const E_PRIME_NOTE: &str = "size is 2 by exact set cover: P1+P4+P7 = (x1,x2)+(x3,x4)+(x5,x6) is the maximal ideal; \
the value 3 quoted for this example does not match the formula n-h+r-1";

const E_PRIME_ORDER_NOTE: &str = "the usual order is not admissible: after P1..P4 the prime P6 adds no variable \
while P5 adds one; the admissible order (1,2,3,4,6,5,7) yields the same family (P1..P5)";

const E0_NOTE: &str = "orders (2,1,3) and (2,3,1) give bigsize 2 by the recursion: G1 = (Q3+Q2, Q3+Q1) keeps both sums, \
its first member (x2,x3,x4) has dimension 1, so bigsize(G1) = 1 rather than 0";

const SPLIT_NOTE: &str = "the split bound over proper tau is 5, but monomials u v with u = 1 in K[Z] lie in no \
prime and are covered by no proper tau; their term sdepth(I ∩ K[rest]) = 4 gives the complete bound 4";

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "e",
        text: "ring 5\nlabel e\ncomponents = (x1,x2),(x2,x3),(x1,x4,x5)\n",
        split_z: None,
        notes: &[],
    },
    Fixture {
        name: "ex",
        text: "ring 6\nlabel ex\ncomponents = (x1,x2,x4),(x1,x3,x4,x6),(x2,x3,x4,x6),(x1,x4,x5,x6),(x1,x2,x3,x5,x6)\n",
        split_z: None,
        notes: &[],
    },
    Fixture {
        name: "e-prime",
        text: concat!("ring 6\nlabel e-prime\n", "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)", "\n"),
        split_z: None,
        notes: &[E_PRIME_NOTE, E_PRIME_ORDER_NOTE],
    },
    Fixture {
        name: "e1",
        text: "ring 2\nlabel e1\ncomponents = (x1),(x1^2,x2)\n",
        split_z: None,
        notes: &[],
    },
    Fixture {
        name: "e0",
        text: "ring 4\nlabel e0\ncomponents = (x1,x2^2),(x2,x3),(x3^2,x4)\n",
        split_z: None,
        notes: &[E0_NOTE],
    },
    Fixture {
        name: "e2",
        text: "ring 4\nlabel e2\ncomponents = (x1,x2),(x1,x3),(x1^2,x2,x3),(x1^2,x3,x4)\n",
        split_z: None,
        notes: &[],
    },
    Fixture {
        name: "e3",
        text: "ring 4\nlabel e3\ncomponents = (x1,x2),(x1^2,x3),(x1^2,x4)\n",
        split_z: None,
        notes: &[],
    },
    Fixture {
        name: "e4",
        text: concat!("ring 6\nlabel e4\n", "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)", "\n"),
        split_z: Some(&[4]),
        notes: &[E_PRIME_NOTE, SPLIT_NOTE],
    },
    Fixture {
        name: "e5",
        text: concat!("ring 6\nlabel e5\n", "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)", "\n"),
        split_z: Some(&[3]),
        notes: &[E_PRIME_NOTE, SPLIT_NOTE],
    },
    Fixture {
        name: "remark-j",
        text: "ring 4\nlabel remark-j\ncomponents = (x1,x2),(x1^2,x3^2),(x2,x4),(x3,x4)\n",
        split_z: None,
        notes: &[],
    },
];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_PRIME_PRIMES: &str = "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)";

    #[test]
    fn all_fixtures_parse_and_round_trip() {
        for f in FIXTURES {
            let doc = f.document();
            assert_eq!(doc.label.as_deref(), Some(f.name));
            assert_eq!(doc.to_string(), f.text, "{}", f.name);
        }
    }

    #[test]
    fn e_prime_shares_components() {
        for name in ["e-prime", "e4", "e5"] {
            assert!(fixture(name).unwrap().text.contains(E_PRIME_PRIMES));
        }
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn fixtures_are_irredundant_as_written() {
        for f in FIXTURES {
            let doc = f.document();
            let d = doc.decomposition().unwrap();
            if let crate::document::Body::Components(raw) = &doc.body {
                assert_eq!(raw.components(), d.components(), "{}", f.name);
            }
        }
    }
}
