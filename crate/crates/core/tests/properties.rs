mod common;

use std::sync::Arc;

use common::*;
use nie_core::algebra::{make_algebra, tau_shift, Algebra, SPoly};
use nie_core::code::Code;
use nie_core::duality::{annihilator, reverse};
use nie_core::linalg::Submodule;
use nie_core::ring::{make_ring, ChainRing, ChainRingSpec};
use nie_core::Elem;
use proptest::prelude::*;

fn rings() -> Vec<Arc<ChainRing>> {
    [
        ChainRingSpec::z(2, 2),
        ChainRingSpec::z(2, 3),
        ChainRingSpec::z(3, 2),
        ChainRingSpec::field(2, 2),
        ChainRingSpec::galois(2, 2, 2),
        ChainRingSpec::truncated(2, 2, 2),
    ]
    .iter()
    .map(|s| make_ring(s).unwrap())
    .collect()
}

fn ring_strategy() -> impl Strategy<Value = Arc<ChainRing>> {
    prop::sample::select(rings())
}

/// A ring, `n`, a non-unit λ, and `count` raw words to reduce into the ring.
fn algebra_strategy(count: usize) -> impl Strategy<Value = (Arc<Algebra>, Vec<Word>)> {
    (ring_strategy(), 1usize..=3, any::<u32>(), prop::collection::vec(prop::collection::vec(any::<u32>(), 3), count))
        .prop_map(|(ring, n, l, raw)| {
            let non_units: Vec<u32> = (0..ring.size()).filter(|&a| !ring.is_unit(Elem(a))).collect();
            let lambda = Elem(non_units[l as usize % non_units.len()]);
            let size = ring.size();
            let words = raw.into_iter().map(|w| w[..n].iter().map(|x| x % size).collect()).collect();
            (make_algebra(ring, n, lambda).unwrap(), words)
        })
}

fn elems(w: &[u32]) -> Vec<Elem> {
    w.iter().map(|&x| Elem(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_adic_digits_round_trip(ring in ring_strategy(), a in any::<u32>()) {
        let a = Elem(a % ring.size());
        let digits = ring.gamma_adic(a);
        prop_assert!(digits.iter().all(|&d| ring.is_teichmuller(d)));
        prop_assert_eq!(ring.from_gamma_adic(&digits), a);
        let v = ring.valuation(a);
        prop_assert!(digits.iter().take(v as usize).all(|d| d.0 == 0));
    }

    #[test]
    fn ring_distributes(ring in ring_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let s = ring.size();
        let (a, b, c) = (Elem(a % s), Elem(b % s), Elem(c % s));
        prop_assert_eq!(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)));
        prop_assert_eq!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
    }

    #[test]
    fn algebra_product_matches_schoolbook((alg, w) in algebra_strategy(3)) {
        let (a, b, c) = (poly(&w[0]), poly(&w[1]), poly(&w[2]));
        let ab = alg.mul(&a, &b).unwrap();
        prop_assert_eq!(word(&ab), mul(&alg, &w[0], &w[1]));
        prop_assert_eq!(alg.mul(&ab, &c).unwrap(), alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap());
    }

    #[test]
    fn shift_is_multiplication_by_x((alg, w) in algebra_strategy(1)) {
        let shifted = tau_shift(alg.ring(), &elems(&w[0]), alg.lambda(), alg.n()).unwrap();
        let by_x = alg.mul(&alg.x(), &poly(&w[0])).unwrap();
        prop_assert_eq!(shifted, by_x.0);
    }

    #[test]
    fn reversal_is_an_involution(w in prop::collection::vec(0u32..16, 1..6)) {
        let v = elems(&w);
        prop_assert_eq!(reverse(&reverse(&v)), v);
    }

    #[test]
    fn echelon_form_ignores_generator_order((alg, w) in algebra_strategy(3)) {
        let ring = alg.ring().clone();
        let gens: Vec<Vec<Elem>> = w.iter().map(|v| elems(v)).collect();
        let mut rev = gens.clone();
        rev.reverse();
        let a = Submodule::from_generators(ring.clone(), alg.n(), &gens).unwrap();
        let b = Submodule::from_generators(ring.clone(), alg.n(), &rev).unwrap();
        prop_assert_eq!(a.rows(), b.rows());
        prop_assert_eq!(a.cardinality(), num_bigint::BigUint::from(span(&ring, alg.n(), &w).len()));
    }

    #[test]
    fn representation_is_a_fixed_point((alg, w) in algebra_strategy(2)) {
        let gens: Vec<SPoly> = w.iter().map(|v| poly(v)).collect();
        let code = Code::from_generators(&alg, &gens).unwrap();
        let reps = code.canonical_representation().unwrap().to_vec();
        let again = Code::from_generators(&alg, &reps).unwrap();
        prop_assert_eq!(&again, &code);
        prop_assert_eq!(again.canonical_representation().unwrap(), &reps[..]);
    }

    #[test]
    fn annihilator_size_is_complementary((alg, w) in algebra_strategy(2)) {
        let gens: Vec<SPoly> = w.iter().map(|v| poly(v)).collect();
        let code = Code::from_generators(&alg, &gens).unwrap();
        let ann = annihilator(&code).unwrap();
        let total = num_bigint::BigUint::from(alg.ring().size()).pow(alg.n() as u32);
        prop_assert_eq!(ann.cardinality() * code.cardinality(), total);
    }
}

#[test]
fn shift_is_bijective_exactly_for_unit_constants() {
    for ring in rings() {
        for n in 1..=3 {
            let words = all_words(&ring, n);
            for lambda in 0..ring.size() {
                let image: WordSet = words.iter().map(|w| shift(&ring, w, lambda)).collect();
                assert_eq!(image.len() == words.len(), ring.is_unit(Elem(lambda)), "{} λ={lambda}", ring.spec());
            }
        }
    }
}
