//! Verification suites: each check is run over the swept algebras and ideals
//! and tallied as pass/fail counts with reproducers for failures.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{tau_shift, Algebra, Classification, SPoly};
use crate::code::{has_representation_shape, Code, SCHEMA_VERSION};
use crate::duality::{annihilator, dual, dual_min_distance_check, DualVerdict};
use crate::error::{Error, Result};
use crate::linalg::Submodule;
use crate::pir::{crt_code, optimal_construction, parse_pir, OptimalKind, PirAlgebra, PirRing};
use crate::ring::Elem;
use crate::sweep::{ideals, sweep_algebras, SweepConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Units,
    Torsion,
    Representation,
    Distance,
    Duality,
    Crt,
    Optimal,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Units,
        Suite::Torsion,
        Suite::Representation,
        Suite::Distance,
        Suite::Duality,
        Suite::Crt,
        Suite::Optimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Units => "units",
            Suite::Torsion => "torsion",
            Suite::Representation => "representation",
            Suite::Distance => "distance",
            Suite::Duality => "duality",
            Suite::Crt => "crt",
            Suite::Optimal => "optimal",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reproducer {
    pub algebra: String,
    pub generators: Vec<SPoly>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub check: &'static str,
    pub statement: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<Reproducer>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: Suite,
    pub max_ring_size: u32,
    pub max_algebra_size: u128,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

/// Failures kept per check.
const MAX_REPRODUCERS: usize = 10;

#[derive(Default)]
struct Tally {
    checks: BTreeMap<(Suite, &'static str), CheckOutcome>,
}

impl Tally {
    fn record(
        &mut self,
        suite: Suite,
        check: &'static str,
        statement: &'static str,
        ok: bool,
        repro: impl FnOnce() -> Reproducer,
    ) {
        let entry = self.checks.entry((suite, check)).or_insert_with(|| CheckOutcome {
            suite,
            check,
            statement,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
        });
        if ok {
            entry.passed += 1;
        } else {
            entry.failed += 1;
            if entry.failures.len() < MAX_REPRODUCERS {
                entry.failures.push(repro());
            }
        }
    }
}

fn repro(code: &Code, detail: impl Into<String>) -> Reproducer {
    Reproducer { algebra: code.algebra().to_string(), generators: code.generators().to_vec(), detail: detail.into() }
}

fn repro_alg(alg: &Algebra, detail: impl Into<String>) -> Reproducer {
    Reproducer { algebra: alg.to_string(), generators: Vec::new(), detail: detail.into() }
}

pub fn run(suite: Suite, cfg: &SweepConfig) -> Result<VerifyReport> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut tally = Tally::default();
    let needs_sweep = suites.iter().any(|s| !matches!(s, Suite::Crt | Suite::Optimal));
    let mut cases: Vec<(Arc<Algebra>, Vec<Code>)> = Vec::new();
    if needs_sweep {
        for alg in sweep_algebras(cfg)? {
            let ids = ideals(&alg, cfg.seed)?;
            cases.push((alg, ids));
        }
    }
    for s in &suites {
        match s {
            Suite::Units => units(&mut tally, &cases)?,
            Suite::Torsion => torsion(&mut tally, &cases, cfg.seed)?,
            Suite::Representation => representation(&mut tally, &cases)?,
            Suite::Distance => distance(&mut tally, &cases)?,
            Suite::Duality => duality(&mut tally, &cases)?,
            Suite::Crt => crt(&mut tally)?,
            Suite::Optimal => optimal(&mut tally)?,
            Suite::All => unreachable!(),
        }
    }
    let checks: Vec<CheckOutcome> = tally.checks.into_values().collect();
    let all_passed = checks.iter().all(|c| c.failed == 0);
    Ok(VerifyReport {
        schema: SCHEMA_VERSION,
        suite,
        max_ring_size: cfg.max_ring_size,
        max_algebra_size: cfg.max_algebra_size,
        seed: cfg.seed,
        checks,
        all_passed,
    })
}

/// Whether `a` has an inverse, by trying every element.
pub fn has_inverse_by_search(alg: &Algebra, a: &SPoly) -> Result<bool> {
    let one = alg.one();
    for b in alg.elements()? {
        if alg.mul(a, &b)? == one {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether the principal ideals of `S` are totally ordered by inclusion,
/// which for a local ring means every ideal lies on one chain.
pub fn principal_ideals_form_chain(alg: &Arc<Algebra>) -> Result<bool> {
    let mut seen = HashSet::new();
    let mut principal = Vec::new();
    for g in alg.elements()? {
        let c = Code::from_generators(alg, std::slice::from_ref(&g))?;
        if seen.insert(c.module().rows().to_vec()) {
            principal.push(c);
        }
    }
    for (i, a) in principal.iter().enumerate() {
        for b in &principal[i + 1..] {
            if !a.is_subcode_of(b) && !b.is_subcode_of(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn units(t: &mut Tally, cases: &[(Arc<Algebra>, Vec<Code>)]) -> Result<()> {
    let s = Suite::Units;
    for (alg, _) in cases {
        for a in alg.elements()? {
            let claimed = alg.is_unit(&a)?;
            let actual = has_inverse_by_search(alg, &a)?;
            t.record(s, "unit-criterion", "a is a unit iff a_0 is a unit", claimed == actual, || {
                repro_alg(alg, format!("element {a}: criterion {claimed}, search {actual}"))
            });
            if claimed {
                let inv = alg.invert(&a)?;
                let ok = alg.mul(&a, &inv)? == alg.one();
                t.record(s, "inverse", "geometric-series inverse", ok, || {
                    repro_alg(alg, format!("element {a}, computed inverse {inv}"))
                });
            }
        }
        let big_n = alg.x_nilpotency()? as usize;
        let mut power = alg.one();
        let mut first_zero = None;
        for k in 1..=big_n {
            power = alg.mul(&power, &alg.x())?;
            if power.is_zero() {
                first_zero = Some(k);
                break;
            }
        }
        t.record(s, "x-nilpotency", "x has nilpotency index n·e′", first_zero == Some(big_n), || {
            repro_alg(alg, format!("expected {big_n}, first zero power {first_zero:?}"))
        });
        let class = alg.classify()?;
        let chain = principal_ideals_form_chain(alg)?;
        let ok = chain != matches!(class, Classification::LocalNonChain);
        t.record(s, "classification", "maximal-ideal classification", ok, || {
            repro_alg(alg, format!("classified {class}, chain lattice {chain}"))
        });
        for x in alg.elements()? {
            let form = alg.gamma_x_decompose(&x)?;
            let ok = alg.gamma_x_reassemble(&form)? == x
                && form.terms.iter().all(|term| {
                    term.h.is_zero()
                        || (alg.ring().is_unit(term.h.0[0]) && term.h.0.iter().all(|&c| alg.ring().is_teichmuller(c)))
                });
            t.record(s, "gamma-x-form", "γ-adic x-factored decomposition", ok, || {
                repro_alg(alg, format!("element {x}"))
            });
        }
        let ring = alg.ring();
        for lambda in [alg.lambda(), ring.one()] {
            let mut image = HashSet::new();
            for v in alg.elements()? {
                image.insert(tau_shift(ring, &v.0, lambda, alg.n())?);
            }
            let bijective = image.len() as u128 == alg.size();
            t.record(
                s,
                "shift-bijective",
                "τ_λ is bijective iff λ is a unit",
                bijective == ring.is_unit(lambda),
                || repro_alg(alg, format!("λ = {lambda}, image size {}", image.len())),
            );
        }
    }
    Ok(())
}

fn torsion(t: &mut Tally, cases: &[(Arc<Algebra>, Vec<Code>)], seed: u64) -> Result<()> {
    let s = Suite::Torsion;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (alg, codes) in cases {
        let ring = alg.ring();
        let n = alg.n();
        let e = ring.e();
        for c in codes {
            let count = c.codewords()?.count();
            let ok = BigUint::from(count) == c.cardinality();
            t.record(s, "cardinality", "|C| = q^(en − ΣT_i)", ok, || {
                repro(c, format!("formula {}, counted {count}", c.cardinality()))
            });
            let deg = c.torsional_degrees();
            let ok = deg[0] <= n && deg.windows(2).all(|w| w[0] >= w[1]);
            t.record(s, "monotone", "n ≥ T_0 ≥ … ≥ T_(e−1) ≥ 0", ok, || repro(c, format!("{deg:?}")));
            for i in 0..e {
                let tc = c.torsion_code(i)?;
                t.record(s, "torsion-standard", "Tor_i(C) = ⟨x^(T_i)⟩", tc.is_standard(), || {
                    repro(c, format!("i = {i}"))
                });
            }
            for j in 1..=e {
                for i in 0..j {
                    let ok = c.torsion_commutes_check(j, i)?;
                    t.record(s, "torsion-commutes", "Tor_i(C) = Φ_j(Tor_i(μ_j(C)))", ok, || {
                        repro(c, format!("j = {j}, i = {i}"))
                    });
                }
            }
            // γ^i (x^k + γ g) ∈ C forces k ≥ T_i.
            for i in 0..e {
                for k in 0..n {
                    for _ in 0..4 {
                        let g: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(0..ring.size()))).collect();
                        let gi = ring.gamma_pow(i);
                        let mut v: Vec<Elem> = g.iter().map(|&a| ring.mul(gi, ring.mul(ring.gamma(), a))).collect();
                        v[k] = ring.add(v[k], gi);
                        let member = c.contains(&SPoly(v.clone()))?;
                        let ok = !member || k >= deg[i as usize];
                        t.record(s, "degree-lower-bound", "γ^i(x^t + γg) ∈ C implies t ≥ T_i", ok, || {
                            repro(c, format!("i = {i}, t = {k}, word {:?}", v))
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// The representation of `⟨x^j⟩` when `⟨x⟩` is the maximal ideal:
/// `(0, …, 0, γ^k x^w, γ^(k+1), …, γ^(e−1))` with `j = kn + w`.
pub fn chain_via_x_representation(alg: &Algebra, j: usize) -> Vec<SPoly> {
    let ring = alg.ring();
    let e = ring.e() as usize;
    let (k, w) = (j / alg.n(), j % alg.n());
    let mut out = vec![alg.zero(); e];
    if k < e {
        out[k] = alg.monomial(w, ring.gamma_pow(k as u32));
        for (l, slot) in out.iter_mut().enumerate().skip(k + 1) {
            *slot = alg.monomial(0, ring.gamma_pow(l as u32));
        }
    }
    out
}

fn representation(t: &mut Tally, cases: &[(Arc<Algebra>, Vec<Code>)]) -> Result<()> {
    let s = Suite::Representation;
    for (alg, codes) in cases {
        let ring = alg.ring();
        let n = alg.n();
        for c in codes {
            let deg = c.torsional_degrees();
            let reps = c.canonical_representation()?.to_vec();
            let shape_ok = reps.iter().enumerate().all(|(i, f)| {
                if deg[i] == n {
                    f.is_zero()
                } else {
                    has_representation_shape(ring, f, i as u32, &deg) && c.contains(f).unwrap_or(false)
                }
            });
            t.record(s, "shape", "f_i has the normalized shape and lies in C", shape_ok, || {
                repro(c, format!("representation {reps:?}"))
            });
            let regen = Code::from_generators(alg, &reps)?;
            t.record(s, "regenerates", "⟨f_0, …, f_(e−1)⟩ = C", regen == *c, || {
                repro(c, "regenerated ideal differs")
            });
            let again = regen.canonical_representation()?.to_vec();
            t.record(s, "idempotent", "representation of the regenerated ideal is identical", again == reps, || {
                repro(c, format!("{again:?} vs {reps:?}"))
            });
            let mut counts = vec![0usize; deg.len()];
            for w in c.codewords()? {
                for (i, count) in counts.iter_mut().enumerate() {
                    if deg[i] < n && has_representation_shape(ring, &w, i as u32, &deg) {
                        *count += 1;
                    }
                }
            }
            let ok = counts.iter().enumerate().all(|(i, &k)| k == usize::from(deg[i] < n));
            t.record(s, "uniqueness", "f_i is the only codeword of its shape", ok, || {
                repro(c, format!("shape counts {counts:?}"))
            });
        }
        if let Classification::ChainViaX { nilpotency } = alg.classify()? {
            let mut gen = alg.one();
            for j in 0..=nilpotency as usize {
                let c = Code::from_generators(alg, std::slice::from_ref(&gen))?;
                let expected = chain_via_x_representation(alg, j);
                let got = c.canonical_representation()?.to_vec();
                t.record(
                    s,
                    "chain-closed-form",
                    "⟨x^(kn+w)⟩ = ⟨⟨0, …, γ^k x^w, γ^(k+1), …⟩⟩",
                    got == expected,
                    || repro(&c, format!("j = {j}: got {got:?}, expected {expected:?}")),
                );
                gen = alg.mul(&gen, &alg.x())?;
            }
        }
    }
    Ok(())
}

fn distance(t: &mut Tally, cases: &[(Arc<Algebra>, Vec<Code>)]) -> Result<()> {
    let s = Suite::Distance;
    for (_, codes) in cases {
        for c in codes {
            if !c.is_zero() {
                let d = c.min_distance()?;
                t.record(s, "weight-one", "nonzero NIE ideals have d(C) = 1", d == 1, || repro(c, format!("d = {d}")));
                let w = c.weight_one_witness()?.expect("nonzero");
                let ok = w.weight() == 1 && c.contains(&w)?;
                t.record(s, "witness", "the shifted γ-multiple has weight one and lies in C", ok, || {
                    repro(c, format!("witness {w}"))
                });
            }
            if !c.is_full() {
                let d = dual_min_distance_check(c)?;
                t.record(s, "dual-weight-one", "proper ideals have d(C^⊥) = 1", d == 1, || {
                    repro(c, format!("dual distance {d}"))
                });
            }
        }
    }
    Ok(())
}

fn duality(t: &mut Tally, cases: &[(Arc<Algebra>, Vec<Code>)]) -> Result<()> {
    let s = Suite::Duality;
    for (alg, codes) in cases {
        let ring = alg.ring();
        for c in codes {
            let report = dual(c)?;
            t.record(s, "dual-via-reversal", "C^⊥ = π(𝒜(C))", report.matches_inner_product_dual, || {
                repro(c, "reversed annihilator differs from the inner-product dual")
            });
            let total = BigUint::from(ring.size()).pow(alg.n() as u32);
            let ok = report.annihilator.cardinality() * c.cardinality() == total;
            t.record(s, "size-product", "|𝒜(C)|·|C| = |R|^n", ok, || {
                repro(c, format!("|𝒜(C)| = {}", report.annihilator.cardinality()))
            });
            let ok = report.predicted_torsion == report.annihilator_torsion;
            t.record(s, "torsion-profile", "Tor_i(𝒜(C)) = ⟨x^(n − T_(e−1−i))⟩", ok, || {
                repro(c, format!("{:?} vs {:?}", report.predicted_torsion, report.annihilator_torsion))
            });
            let ann = annihilator(c)?;
            let ok = ann
                .basis()
                .iter()
                .all(|b| c.basis().iter().all(|g| alg.mul(g, b).map(|p| p.is_zero()).unwrap_or(false)));
            t.record(s, "annihilates", "every generator product with 𝒜(C) vanishes", ok, || {
                repro(c, "nonzero product")
            });
            let closed: Vec<bool> = ring.elements()?.map(|lh| shift_closed(&report.dual, lh)).collect::<Result<_>>()?;
            let ok = match &report.verdict {
                DualVerdict::Yes(i) => {
                    closed.iter().all(|&b| b) && report.dual == Code::gamma_power(alg, ring.e() - i)?.module().clone()
                }
                DualVerdict::No { witnesses } => {
                    closed.iter().all(|&b| !b)
                        && witnesses.len() == closed.len()
                        && witnesses.iter().all(|w| {
                            report.dual.contains(&w.word).unwrap_or(false)
                                && !report.dual.contains(&w.shifted).unwrap_or(true)
                        })
                }
            };
            t.record(s, "dual-constacyclic", "C^⊥ is constacyclic iff C = γ^i R^n", ok, || {
                repro(c, format!("verdict {:?}", report.verdict))
            });
        }
    }
    Ok(())
}

/// Whether `τ_λ̂` maps the module into itself (checked on generators).
pub fn shift_closed(module: &Submodule, lambda_hat: Elem) -> Result<bool> {
    let n = module.len();
    for row in module.rows() {
        let w = tau_shift(module.ring(), &row.entries, lambda_hat, n)?;
        if !module.contains(&w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product rings and lengths covered by the CRT suite.
pub const CRT_CASES: [(&str, usize); 6] = [
    ("F(3) x F(3)", 1),
    ("F(3) x F(3)", 2),
    ("F(3) x F(3)", 3),
    ("Z(4) x F(5)", 1),
    ("Z(4) x F(5)", 2),
    ("Z(4) x F(5)", 3),
];

fn crt(t: &mut Tally) -> Result<()> {
    let s = Suite::Crt;
    for (spec, n) in CRT_CASES {
        let pir = parse_pir(spec)?;
        let tuples = pir.elements()?;
        for a in &tuples {
            for b in &tuples {
                let ok = pir
                    .add(a, b)?
                    .iter()
                    .zip(pir.components())
                    .zip(a.iter().zip(b))
                    .all(|((&sum, r), (&x, &y))| sum == r.add(x, y))
                    && pir
                        .mul(a, b)?
                        .iter()
                        .zip(pir.components())
                        .zip(a.iter().zip(b))
                        .all(|((&prod, r), (&x, &y))| prod == r.mul(x, y));
                t.record(s, "tuple-isomorphism", "ψ respects addition and multiplication", ok, || Reproducer {
                    algebra: spec.into(),
                    generators: Vec::new(),
                    detail: format!("{a:?}, {b:?}"),
                });
            }
        }
        for lambda in &tuples {
            let alg = PirAlgebra::new(&pir, n, lambda)?;
            polynomial_isomorphism(t, &alg, spec)?;
            let comp_ideals: Vec<Vec<Code>> = alg.components().iter().map(|a| ideals(a, 0)).collect::<Result<_>>()?;
            for c0 in &comp_ideals[0] {
                for c1 in &comp_ideals[1] {
                    let code = crt_code(&alg, vec![c0.clone(), c1.clone()])?;
                    let ok = code.project(0)? == c0 && code.project(1)? == c1;
                    let key = || Reproducer {
                        algebra: format!("{spec};n={n};lambda={lambda:?}"),
                        generators: c0.generators().iter().chain(c1.generators()).cloned().collect(),
                        detail: String::new(),
                    };
                    t.record(s, "round-trip", "projections of CRT(C⁰, C¹) recover the components", ok, key);
                    let words = code.codewords()?;
                    let ok = BigUint::from(words.len()) == code.cardinality()
                        && words.iter().all(|w| code.contains(w).unwrap_or(false));
                    t.record(s, "crt-cardinality", "|CRT(C⁰, C¹)| = |C⁰|·|C¹|", ok, key);
                    if !code.is_zero() {
                        let d = code.min_distance()?;
                        let brute = code.brute_force_distance()?;
                        t.record(s, "pir-distance", "d(C) = min_t d(ψ^(t)(C))", d == brute, || Reproducer {
                            detail: format!("formula {d}, enumerated {brute}"),
                            ..key()
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `Ψ(ab) = Ψ(a)Ψ(b)`. Both products are bilinear, so pairing every word
/// with every `c·x^k` covers all products.
fn polynomial_isomorphism(t: &mut Tally, alg: &PirAlgebra, spec: &str) -> Result<()> {
    let pir: &PirRing = alg.pir();
    let n = alg.n();
    let tuples = pir.elements()?;
    let mut words: Vec<Vec<Vec<Elem>>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                tuples.iter().map(move |c| {
                    let mut v = w.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    let mut monomials = Vec::new();
    for k in 0..n {
        for c in &tuples {
            let mut m = vec![pir.zero(); n];
            m[k] = c.clone();
            monomials.push(m);
        }
    }
    for a in &words {
        let pa = alg.split(a)?;
        for b in &monomials {
            let pb = alg.split(b)?;
            let lhs = alg.split(&alg.mul(a, b)?)?;
            let rhs: Vec<SPoly> = alg
                .components()
                .iter()
                .zip(pa.iter().zip(&pb))
                .map(|(c, (x, y))| c.mul(x, y))
                .collect::<Result<_>>()?;
            t.record(
                Suite::Crt,
                "poly-isomorphism",
                "Ψ is multiplicative on 𝐑[x]/⟨x^n − λ⟩",
                lhs == rhs,
                || Reproducer {
                    algebra: format!("{spec};n={n};lambda={:?}", alg.lambda()),
                    generators: Vec::new(),
                    detail: format!("{a:?} * {b:?}"),
                },
            );
        }
    }
    Ok(())
}

/// Constructions covered by the optimal suite.
pub const OPTIMAL_CASES: [OptimalKind; 5] = [
    OptimalKind::ReedSolomon { q: 5, k: 1, s: 2 },
    OptimalKind::ReedSolomon { q: 4, k: 1, s: 2 },
    OptimalKind::ReedSolomon { q: 5, k: 2, s: 3 },
    OptimalKind::GaloisMds { p: 2, t: 2, m: 2, n: 3, k: 1, s: 2 },
    OptimalKind::GaloisMds { p: 2, t: 2, m: 2, n: 3, k: 2, s: 3 },
];

fn optimal(t: &mut Tally) -> Result<()> {
    let s = Suite::Optimal;
    for kind in OPTIMAL_CASES {
        let (code, cert) = optimal_construction(kind)?;
        let key = || Reproducer { algebra: format!("{kind:?}"), generators: Vec::new(), detail: String::new() };
        let c0 = code.project(0)?;
        let k = c0.log_q_cardinality() as usize / c0.algebra().ring().e() as usize;
        let d0 = c0.min_distance()?;
        t.record(s, "mds-component", "the component code has d = n − k + 1", d0 == c0.n() - k + 1, key);
        t.record(s, "component-distance", "d(C) = d(C⁰)", cert.distance == d0, key);
        let s_count = code.components().len();
        let ok = code.cardinality() == c0.cardinality().pow(s_count as u32 - 1);
        t.record(s, "cardinality", "|C| = |C⁰|^(s−1)", ok, key);
        let ok = cert.enumerated_distance.is_none_or(|d| d == cert.distance);
        t.record(s, "enumerated-distance", "enumeration agrees with the component formula", ok, key);
        t.record(s, "certified", "d(C) = ⌊n + 1 − log_|𝐑| |C|⌋", cert.optimal, || Reproducer {
            detail: format!("bound {}, d = {}", cert.bound, cert.distance),
            ..key()
        });
    }
    Ok(())
}

/// Renders the report as an aligned text table.
pub fn render_table(report: &VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("{:<16} {:<22} {:>8} {:>8}  statement\n", "suite", "check", "passed", "failed"));
    for c in &report.checks {
        out.push_str(&format!(
            "{:<16} {:<22} {:>8} {:>8}  {}\n",
            c.suite.name(),
            c.check,
            c.passed,
            c.failed,
            c.statement
        ));
        for f in &c.failures {
            let gens: Vec<String> = f.generators.iter().map(SPoly::to_string).collect();
            out.push_str(&format!("    reproduce: {} gens {} ({})\n", f.algebra, gens.join(";"), f.detail));
        }
    }
    out.push_str(if report.all_passed { "ALL PASSED\n" } else { "FAILURES PRESENT\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn optimal_suite_passes() {
        let report = run(Suite::Optimal, &SweepConfig::default()).unwrap();
        assert!(report.all_passed, "{}", render_table(&report));
    }

    #[test]
    fn small_sweep_passes_every_suite() {
        let cfg = SweepConfig { max_ring_size: 4, max_algebra_size: 16, seed: 0 };
        for s in [Suite::Units, Suite::Torsion, Suite::Representation, Suite::Distance, Suite::Duality] {
            let report = run(s, &cfg).unwrap();
            assert!(report.all_passed, "{}", render_table(&report));
            assert!(report.checks.iter().all(|c| c.passed > 0));
        }
    }
}
