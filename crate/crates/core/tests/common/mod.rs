//! Brute-force oracles over explicit codeword sets. They only use ring
//! arithmetic and never the echelon machinery under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nie_core::algebra::{Algebra, SPoly};
use nie_core::ring::ChainRing;
use nie_core::Elem;

pub type Word = Vec<u32>;
pub type WordSet = BTreeSet<Word>;

pub fn word(p: &SPoly) -> Word {
    p.0.iter().map(|e| e.0).collect()
}

pub fn poly(w: &[u32]) -> SPoly {
    SPoly(w.iter().map(|&x| Elem(x)).collect())
}

/// Every vector of `R^n`.
pub fn all_words(ring: &ChainRing, n: usize) -> Vec<Word> {
    let size = ring.size();
    let total = (size as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let d = (idx % size as usize) as u32;
                    idx /= size as usize;
                    d
                })
                .collect()
        })
        .collect()
}

/// Schoolbook product in `R[x]`, then `x^n` folded back as λ.
pub fn mul(alg: &Algebra, a: &[u32], b: &[u32]) -> Word {
    let r = alg.ring();
    let n = alg.n();
    let mut full = vec![0u32; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let p = r.mul(Elem(a[i]), Elem(b[j]));
            full[i + j] = r.add(Elem(full[i + j]), p).0;
        }
    }
    for k in (n..2 * n).rev() {
        let carry = r.mul(alg.lambda(), Elem(full[k]));
        full[k - n] = r.add(Elem(full[k - n]), carry).0;
        full[k] = 0;
    }
    full.truncate(n);
    full
}

pub fn add(ring: &ChainRing, a: &[u32], b: &[u32]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| ring.add(Elem(x), Elem(y)).0).collect()
}

pub fn scale(ring: &ChainRing, c: u32, a: &[u32]) -> Word {
    a.iter().map(|&x| ring.mul(Elem(c), Elem(x)).0).collect()
}

pub fn shift(ring: &ChainRing, v: &[u32], lambda: u32) -> Word {
    let n = v.len();
    let mut out = vec![ring.mul(Elem(lambda), Elem(v[n - 1])).0];
    out.extend_from_slice(&v[..n - 1]);
    out
}

pub fn x_power(alg: &Algebra, k: usize) -> Word {
    let n = alg.n();
    let mut v = vec![0u32; n];
    v[0] = 1;
    let mut x = vec![0u32; n];
    if n == 1 {
        x[0] = alg.lambda().0;
    } else {
        x[1] = 1;
    }
    for _ in 0..k {
        v = mul(alg, &v, &x);
    }
    v
}

/// `{ a g : a ∈ S }`.
pub fn principal_ideal(alg: &Algebra, elements: &[Word], g: &[u32]) -> WordSet {
    elements.iter().map(|a| mul(alg, a, g)).collect()
}

/// The additive closure of `spanning`, which must already be closed under
/// scaling by `R` for the result to be the R-span.
pub fn additive_closure(ring: &ChainRing, n: usize, spanning: &[Word]) -> WordSet {
    let mut set: WordSet = BTreeSet::from([vec![0; n]]);
    let mut frontier: Vec<Word> = vec![vec![0; n]];
    while let Some(v) = frontier.pop() {
        for s in spanning {
            let w = add(ring, &v, s);
            if set.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    set
}

/// The ideal generated by `gens`: the additive closure of `r·x^k·g`.
pub fn ideal(alg: &Algebra, gens: &[Word]) -> WordSet {
    let ring = alg.ring();
    let n = alg.n();
    let mut spanning: BTreeSet<Word> = BTreeSet::new();
    for g in gens {
        let mut v = g.clone();
        for _ in 0..n {
            for r in 0..ring.size() {
                let w = scale(ring, r, &v);
                if w.iter().any(|&c| c != 0) {
                    spanning.insert(w);
                }
            }
            v = shift(ring, &v, alg.lambda().0);
        }
    }
    additive_closure(ring, n, &spanning.into_iter().collect::<Vec<_>>())
}

/// `R`-span of `vectors` (not necessarily shift-closed).
pub fn span(ring: &ChainRing, n: usize, vectors: &[Word]) -> WordSet {
    let mut spanning: BTreeSet<Word> = BTreeSet::new();
    for v in vectors {
        for r in 0..ring.size() {
            let w = scale(ring, r, v);
            if w.iter().any(|&c| c != 0) {
                spanning.insert(w);
            }
        }
    }
    additive_closure(ring, n, &spanning.into_iter().collect::<Vec<_>>())
}

pub fn weight(w: &[u32]) -> usize {
    w.iter().filter(|&&c| c != 0).count()
}

/// Minimum weight of a nonzero member, `n + 1` if there is none.
pub fn min_weight(set: &WordSet, n: usize) -> usize {
    set.iter().map(|w| weight(w)).filter(|&w| w > 0).min().unwrap_or(n + 1)
}

pub fn inner(ring: &ChainRing, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(Elem(0), |acc, (&x, &y)| ring.add(acc, ring.mul(Elem(x), Elem(y)))).0
}

/// `{ v : ⟨c, v⟩ = 0 for all c ∈ code }` by scanning `R^n`.
pub fn inner_product_dual(ring: &ChainRing, n: usize, code: &WordSet) -> WordSet {
    all_words(ring, n).into_iter().filter(|v| code.iter().all(|c| inner(ring, c, v) == 0)).collect()
}

/// `{ v : c v = 0 for all c ∈ code }` by scanning `S`.
pub fn annihilator(alg: &Algebra, code: &WordSet) -> WordSet {
    all_words(alg.ring(), alg.n())
        .into_iter()
        .filter(|v| code.iter().all(|c| mul(alg, c, v).iter().all(|&x| x == 0)))
        .collect()
}

pub fn reverse(w: &[u32]) -> Word {
    w.iter().rev().copied().collect()
}

/// `Tor_i = { residue of v : γ^i v ∈ code }`, as residue codes.
pub fn torsion(ring: &ChainRing, code: &WordSet, i: u32) -> WordSet {
    let e = ring.e();
    code.iter()
        .filter(|c| c.iter().all(|&x| ring.valuation(Elem(x)) >= i))
        .filter_map(|c| {
            let digits: Vec<Vec<Elem>> = c.iter().map(|&x| ring.gamma_adic(Elem(x))).collect();
            // `c = γ^i v` has the digits of `v` shifted up by `i`; the
            // residue of `v` is digit `i` of `c`.
            (i < e).then(|| digits.iter().map(|d| ring.residue(d[i as usize])).collect())
        })
        .collect()
}

/// `log_q` of a set size that must be a power of `q`.
pub fn log_q(q: u32, size: usize) -> usize {
    let mut k = 0;
    let mut s = 1usize;
    while s < size {
        s *= q as usize;
        k += 1;
    }
    assert_eq!(s, size, "{size} is not a power of {q}");
    k
}

/// `T_i = n − log_q |Tor_i|`.
pub fn torsional_degrees(ring: &ChainRing, n: usize, code: &WordSet) -> Vec<usize> {
    (0..ring.e()).map(|i| n - log_q(ring.q(), torsion(ring, code, i).len())).collect()
}

/// All ideals of `S` from its principal ideals closed under pairwise sums.
pub fn all_ideals(alg: &Algebra) -> BTreeSet<WordSet> {
    let elements = all_words(alg.ring(), alg.n());
    let principal: BTreeSet<WordSet> = elements.iter().map(|g| principal_ideal(alg, &elements, g)).collect();
    let mut found = principal.clone();
    let mut frontier: Vec<WordSet> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &principal {
                let sum: WordSet =
                    a.iter().flat_map(|x| b.iter().map(move |y| (x, y))).map(|(x, y)| add(alg.ring(), x, y)).collect();
                if found.insert(sum.clone()) {
                    next.push(sum);
                }
            }
        }
        frontier = next;
    }
    found
}

/// Principal ideals pairwise comparable under inclusion.
pub fn principal_ideals_are_a_chain(alg: &Algebra) -> bool {
    let elements = all_words(alg.ring(), alg.n());
    let mut principal: Vec<WordSet> = Vec::new();
    let mut seen = BTreeSet::new();
    for g in &elements {
        let p = principal_ideal(alg, &elements, g);
        if seen.insert(p.clone()) {
            principal.push(p);
        }
    }
    principal.sort_by_key(BTreeSet::len);
    principal.windows(2).all(|w| w[0].is_subset(&w[1]))
}
