//! Families of small algebras and the ideals found in them.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{make_algebra, Algebra, SPoly};
use crate::code::Code;
use crate::error::Result;
use crate::linalg::BasisRow;
use crate::ring::{make_ring, ChainRingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_ring_size: u32,
    pub max_algebra_size: u128,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_ring_size: 512, max_algebra_size: 4096, seed: 0 }
    }
}

/// Above this size only principal ideals and sampled pair sums are collected.
pub const FULL_LATTICE_LIMIT: u128 = 512;

/// Number of elements sampled for pair sums in larger algebras.
const PAIR_SAMPLE: usize = 32;

pub fn sweep_rings() -> Vec<ChainRingSpec> {
    ["Z(4)", "Z(8)", "Z(9)", "F(4)", "GR(4,2)", "FU(2,2)"]
        .iter()
        .map(|s| ChainRingSpec::parse(s).expect("fixed spec"))
        .collect()
}

/// Every `(R, n, λ)` with `R` from [`sweep_rings`], `n ∈ {1, 2, 3}` and λ a
/// non-unit, subject to the size limits.
pub fn sweep_algebras(cfg: &SweepConfig) -> Result<Vec<Arc<Algebra>>> {
    let mut out = Vec::new();
    for spec in sweep_rings() {
        let ring = make_ring(&spec)?;
        if ring.size() > cfg.max_ring_size {
            continue;
        }
        for n in 1..=3usize {
            if (ring.size() as u128).pow(n as u32) > cfg.max_algebra_size {
                continue;
            }
            for lambda in ring.elements()?.filter(|&l| !ring.is_unit(l)) {
                out.push(make_algebra(ring.clone(), n, lambda)?);
            }
        }
    }
    Ok(out)
}

/// Ideals of `alg`, deduplicated and sorted by their normal form: every
/// principal ideal, closed under sums when `|S| <= FULL_LATTICE_LIMIT`
/// (which then yields the whole lattice), otherwise extended by the sums of
/// pairs drawn from a seeded sample.
pub fn ideals(alg: &Arc<Algebra>, seed: u64) -> Result<Vec<Code>> {
    let mut found: BTreeMap<Vec<BasisRow>, Code> = BTreeMap::new();
    for g in alg.elements()? {
        let c = Code::from_generators(alg, std::slice::from_ref(&g))?;
        found.entry(c.module().rows().to_vec()).or_insert(c);
    }
    if alg.size() <= FULL_LATTICE_LIMIT {
        let mut frontier: Vec<Code> = found.values().cloned().collect();
        while !frontier.is_empty() {
            let current: Vec<Code> = found.values().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &current {
                    let c = sum(alg, a, b)?;
                    let key = c.module().rows().to_vec();
                    if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(key) {
                        slot.insert(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<SPoly> = alg.elements()?.collect();
        let sample: Vec<&SPoly> = all.choose_multiple(&mut rng, PAIR_SAMPLE).collect();
        for (i, a) in sample.iter().enumerate() {
            for b in &sample[i + 1..] {
                let c = Code::from_generators(alg, &[(*a).clone(), (*b).clone()])?;
                found.entry(c.module().rows().to_vec()).or_insert(c);
            }
        }
    }
    Ok(found.into_values().collect())
}

fn sum(alg: &Arc<Algebra>, a: &Code, b: &Code) -> Result<Code> {
    let mut gens = a.basis();
    gens.extend(b.basis());
    Code::from_generators(alg, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    #[test]
    fn chain_via_x_has_a_chain_of_ideals() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        assert_eq!(ideals(&a, 0).unwrap().len(), 5);
    }

    #[test]
    fn field_quotient_ideals() {
        let a = parse_algebra("F(4);n=3;lambda=0").unwrap();
        assert_eq!(ideals(&a, 0).unwrap().len(), 4);
    }

    #[test]
    fn family_sizes() {
        let algs = sweep_algebras(&SweepConfig::default()).unwrap();
        assert!(algs.iter().all(|a| a.is_nie() && a.size() <= 4096));
        // Z(4): 2 non-units, Z(8): 4, Z(9): 3, F(4): 1, GR(4,2): 4, FU(2,2): 2, each for n = 1, 2, 3.
        assert_eq!(algs.len(), 3 * (2 + 4 + 3 + 1 + 4 + 2));
    }
}
