//! Finite principal ideal rings as products of chain rings, and codes over
//! them assembled componentwise.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{make_algebra, Algebra, SPoly};
use crate::code::{Code, CodeReport, SCHEMA_VERSION};
use crate::error::{check_cap, Error, Result};
use crate::ring::{make_ring, prime_power, ChainRing, ChainRingSpec, Elem};

/// `R^(1) × … × R^(s)`; an element is the tuple of its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PirRing {
    components: Vec<Arc<ChainRing>>,
}

pub fn make_pir(specs: &[ChainRingSpec]) -> Result<PirRing> {
    if specs.is_empty() {
        return Err(Error::BadParameters("a product ring needs at least one factor".into()));
    }
    let components = specs.iter().map(make_ring).collect::<Result<Vec<_>>>()?;
    Ok(PirRing { components })
}

/// Parses `Z(4) x F(5) x GR(4,2;mod=1,1,1)`; `×` also separates factors.
pub fn parse_pir(text: &str) -> Result<PirRing> {
    let specs = text.split(['x', '×']).map(ChainRingSpec::parse).collect::<Result<Vec<_>>>()?;
    make_pir(&specs)
}

impl fmt::Display for PirRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|r| r.spec().to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl PirRing {
    pub fn components(&self) -> &[Arc<ChainRing>] {
        &self.components
    }

    pub fn s(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> BigUint {
        self.components.iter().map(|r| BigUint::from(r.size())).product()
    }

    pub fn check(&self, a: &[Elem]) -> Result<()> {
        if a.len() != self.s() {
            return Err(Error::ComponentMismatch(format!(
                "tuple has {} entries, ring has {} factors",
                a.len(),
                self.s()
            )));
        }
        for (r, x) in self.components.iter().zip(a) {
            if !r.contains(*x) {
                return Err(Error::RingMismatch { code: x.0 as u64, size: r.size() as u64 });
            }
        }
        Ok(())
    }

    fn zip_with(&self, a: &[Elem], b: &[Elem], f: impl Fn(&ChainRing, Elem, Elem) -> Elem) -> Result<Vec<Elem>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.components.iter().zip(a.iter().zip(b)).map(|(r, (&x, &y))| f(r, x, y)).collect())
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> Result<Vec<Elem>> {
        self.zip_with(a, b, |r, x, y| r.add(x, y))
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Result<Vec<Elem>> {
        self.zip_with(a, b, |r, x, y| r.mul(x, y))
    }

    pub fn is_unit(&self, a: &[Elem]) -> bool {
        self.components.iter().zip(a).all(|(r, &x)| r.is_unit(x))
    }

    pub fn zero(&self) -> Vec<Elem> {
        self.components.iter().map(|r| r.zero()).collect()
    }

    pub fn is_zero(a: &[Elem]) -> bool {
        a.iter().all(|x| x.0 == 0)
    }

    /// All tuples, first component fastest.
    pub fn elements(&self) -> Result<Vec<Vec<Elem>>> {
        check_cap(self.size().to_u128().unwrap_or(u128::MAX))?;
        let mut out = vec![Vec::new()];
        for r in &self.components {
            out = r
                .elements()?
                .flat_map(|x| {
                    out.iter().map(move |prefix| {
                        let mut t = prefix.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        Ok(out)
    }
}

/// A word of length `n` over the product ring: one tuple per coordinate.
pub type PirWord = Vec<Vec<Elem>>;

/// `𝐑[x]/⟨x^n − λ⟩` together with its component algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PirAlgebra {
    pir: PirRing,
    n: usize,
    lambda: Vec<Elem>,
    components: Vec<Arc<Algebra>>,
}

impl PirAlgebra {
    pub fn new(pir: &PirRing, n: usize, lambda: &[Elem]) -> Result<PirAlgebra> {
        pir.check(lambda)?;
        let components = pir
            .components
            .iter()
            .zip(lambda)
            .map(|(r, &l)| make_algebra(r.clone(), n, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(PirAlgebra { pir: pir.clone(), n, lambda: lambda.to_vec(), components })
    }

    pub fn pir(&self) -> &PirRing {
        &self.pir
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[Elem] {
        &self.lambda
    }

    pub fn components(&self) -> &[Arc<Algebra>] {
        &self.components
    }

    pub fn check(&self, w: &[Vec<Elem>]) -> Result<()> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: w.len() });
        }
        w.iter().try_for_each(|t| self.pir.check(t))
    }

    /// `Ψ`: splits a word into its component polynomials.
    pub fn split(&self, w: &[Vec<Elem>]) -> Result<Vec<SPoly>> {
        self.check(w)?;
        Ok((0..self.pir.s()).map(|t| SPoly(w.iter().map(|c| c[t]).collect())).collect())
    }

    /// `Ψ^(-1)`.
    pub fn join(&self, parts: &[SPoly]) -> Result<PirWord> {
        if parts.len() != self.pir.s() {
            return Err(Error::ComponentMismatch(format!(
                "{} component words for {} factors",
                parts.len(),
                self.pir.s()
            )));
        }
        for (alg, p) in self.components.iter().zip(parts) {
            alg.check(p)?;
        }
        Ok((0..self.n).map(|i| parts.iter().map(|p| p.0[i]).collect()).collect())
    }

    /// Product in `𝐑[x]/⟨x^n − λ⟩` computed with tuple arithmetic.
    pub fn mul(&self, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Result<PirWord> {
        self.check(a)?;
        self.check(b)?;
        let n = self.n;
        let mut out = vec![self.pir.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let mut prod = self.pir.mul(ai, bj)?;
                let k = i + j;
                let k = if k >= n {
                    prod = self.pir.mul(&self.lambda, &prod)?;
                    k - n
                } else {
                    k
                };
                out[k] = self.pir.add(&out[k], &prod)?;
            }
        }
        Ok(out)
    }
}

/// `CRT(C^(1), …, C^(s))`.
#[derive(Clone, Debug)]
pub struct PirCode {
    alg: PirAlgebra,
    components: Vec<Code>,
}

#[derive(Serialize)]
pub struct PirCodeReport {
    pub schema: u32,
    pub pir: String,
    pub n: usize,
    pub lambda: Vec<Elem>,
    pub components: Vec<CodeReport>,
    pub cardinality: String,
}

pub fn crt_code(alg: &PirAlgebra, comps: Vec<Code>) -> Result<PirCode> {
    if comps.len() != alg.pir.s() {
        return Err(Error::LengthMismatch { expected: alg.pir.s(), got: comps.len() });
    }
    for (t, (c, a)) in comps.iter().zip(&alg.components).enumerate() {
        if c.algebra() != a {
            return Err(Error::ComponentMismatch(format!("component {t} lives in {}, expected {a}", c.algebra())));
        }
    }
    Ok(PirCode { alg: alg.clone(), components: comps })
}

impl PirCode {
    pub fn algebra(&self) -> &PirAlgebra {
        &self.alg
    }

    pub fn components(&self) -> &[Code] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.alg.n
    }

    /// `ψ^(t)(C)`, 0-based.
    pub fn project(&self, t: usize) -> Result<&Code> {
        self.components.get(t).ok_or(Error::IndexOutOfRange { index: t, lo: 0, hi: self.components.len() - 1 })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Code::is_zero)
    }

    pub fn cardinality(&self) -> BigUint {
        self.components.iter().map(Code::cardinality).product()
    }

    pub fn contains(&self, w: &[Vec<Elem>]) -> Result<bool> {
        let parts = self.alg.split(w)?;
        for (c, p) in self.components.iter().zip(&parts) {
            if !c.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All codewords, assembled from every combination of component codewords.
    pub fn codewords(&self) -> Result<Vec<PirWord>> {
        check_cap(self.cardinality().to_u128().unwrap_or(u128::MAX))?;
        let lists: Vec<Vec<SPoly>> =
            self.components.iter().map(|c| c.codewords().map(Iterator::collect)).collect::<Result<_>>()?;
        let mut combos: Vec<Vec<SPoly>> = vec![Vec::new()];
        for list in &lists {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    list.iter().map(move |w| {
                        let mut p = prefix.clone();
                        p.push(w.clone());
                        p
                    })
                })
                .collect();
        }
        combos.iter().map(|parts| self.alg.join(parts)).collect()
    }

    /// `min_t d(ψ^(t)(C))` over the nonzero components.
    pub fn min_distance(&self) -> Result<usize> {
        let mut best = None;
        for c in self.components.iter().filter(|c| !c.is_zero()) {
            let d = c.min_distance()?;
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
        best.ok_or(Error::ZeroCode)
    }

    /// Minimum number of nonzero coordinates over all nonzero codewords.
    pub fn brute_force_distance(&self) -> Result<usize> {
        let mut best = self.n() + 1;
        for w in self.codewords()? {
            let wt = w.iter().filter(|t| !PirRing::is_zero(t)).count();
            if wt > 0 {
                best = best.min(wt);
            }
        }
        Ok(best)
    }

    /// When some component has non-invertible λ and is nonzero, `d(C) = 1`
    /// and a weight-one codeword comes from that component.
    pub fn nie_distance_check(&self) -> Result<Option<(usize, PirWord)>> {
        for (t, c) in self.components.iter().enumerate() {
            if !c.algebra().is_nie() || c.is_zero() {
                continue;
            }
            let w = c.weight_one_witness()?.expect("nonzero code");
            let parts: Vec<SPoly> = self
                .alg
                .components
                .iter()
                .enumerate()
                .map(|(u, a)| if u == t { w.clone() } else { a.zero() })
                .collect();
            return Ok(Some((1, self.alg.join(&parts)?)));
        }
        Ok(None)
    }

    pub fn report(&self) -> PirCodeReport {
        PirCodeReport {
            schema: SCHEMA_VERSION,
            pir: self.alg.pir.to_string(),
            n: self.n(),
            lambda: self.alg.lambda.clone(),
            components: self.components.iter().map(Code::report).collect(),
            cardinality: self.cardinality().to_string(),
        }
    }
}

fn poly_from_roots(alg: &Arc<Algebra>, roots: &[Elem]) -> Result<SPoly> {
    let ring = alg.ring();
    let mut g = alg.one();
    for &r in roots {
        let mut lin = alg.zero();
        lin.0[0] = ring.neg(r);
        lin.0[1] = ring.one();
        g = alg.mul(&g, &lin)?;
    }
    Ok(g)
}

/// The `[q−1, k, q−k]` Reed–Solomon code over `F_q`, generated by
/// `Π_(i=0)^(q−2−k) (x − α^i)` for the smallest primitive element α.
pub fn rs_component(q: u32, k: usize) -> Result<Code> {
    let (p, m) = prime_power(q as u64)?;
    if k == 0 || k >= q as usize {
        return Err(Error::BadParameters(format!("need 0 < k < q, got k = {k}, q = {q}")));
    }
    let ring = make_ring(&ChainRingSpec::field(p, m))?;
    let n = q as usize - 1;
    let alpha = ring
        .elements()?
        .find(|&a| ring.multiplicative_order(a) == Some(n as u64))
        .expect("F_q has a primitive element");
    let alg = make_algebra(ring.clone(), n, ring.one())?;
    let roots: Vec<Elem> = (0..n - k).map(|i| ring.pow(alpha, i as u64)).collect();
    Code::from_generators(&alg, &[poly_from_roots(&alg, &roots)?])
}

/// Cyclic MDS code of length `n | p^m − 1` over `GR(p^t, m)`, generated by
/// `Π_(i=0)^(n−k−1) (x − α^i)` with `α = ζ^((p^m − 1)/n)`.
pub fn galois_mds_component(p: u32, t: u32, m: u32, n: usize, k: usize) -> Result<Code> {
    let spec = if t == 1 { ChainRingSpec::field(p, m) } else { ChainRingSpec::galois(p, t, m) };
    let ring = make_ring(&spec)?;
    let q = ring.q() as usize;
    if n == 0 || !(q - 1).is_multiple_of(n) {
        return Err(Error::BadParameters(format!("n = {n} does not divide {}", q - 1)));
    }
    if k == 0 || k >= n {
        return Err(Error::BadParameters(format!("need 0 < k < n, got k = {k}, n = {n}")));
    }
    let alpha = ring.pow(ring.zeta(), ((q - 1) / n) as u64);
    let alg = make_algebra(ring.clone(), n, ring.one())?;
    let roots: Vec<Elem> = (0..n - k).map(|i| ring.pow(alpha, i as u64)).collect();
    Code::from_generators(&alg, &[poly_from_roots(&alg, &roots)?])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimalKind {
    ReedSolomon { q: u32, k: usize, s: usize },
    GaloisMds { p: u32, t: u32, m: u32, n: usize, k: usize, s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub numerator: String,
    pub denominator: String,
}

impl From<&BigRational> for Fraction {
    fn from(r: &BigRational) -> Self {
        Fraction { numerator: r.numer().to_string(), denominator: r.denom().to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalityCertificate {
    pub schema: u32,
    pub n: usize,
    pub cardinality: String,
    pub distance: usize,
    /// Distance counted over every codeword, when the code is small enough.
    pub enumerated_distance: Option<usize>,
    pub singleton_bound: Fraction,
    pub bound: String,
    /// `bound − distance`.
    pub slack: Fraction,
    pub optimal: bool,
    #[serde(skip)]
    pub bound_value: BigRational,
}

/// `log_base(value)` for two powers of the same prime, exactly.
pub fn exact_log(value: &BigUint, base: &BigUint) -> Result<BigRational> {
    let (pv, a) = prime_exponent(value)?;
    let (pb, b) = prime_exponent(base)?;
    if b == 0 {
        return Err(Error::BadParameters("logarithm base must exceed 1".into()));
    }
    if a != 0 && pv != pb {
        return Err(Error::BadParameters(format!("{value} and {base} are powers of different primes")));
    }
    Ok(BigRational::new(a.into(), b.into()))
}

fn prime_exponent(v: &BigUint) -> Result<(BigUint, u64)> {
    if v.is_one() {
        return Ok((BigUint::one(), 0));
    }
    let mut p = BigUint::from(2u32);
    while &p * &p <= *v && !v.is_multiple_of(&p) {
        p += 1u32;
    }
    if !v.is_multiple_of(&p) {
        p = v.clone();
    }
    let mut rest = v.clone();
    let mut k = 0;
    while !rest.is_one() {
        if !rest.is_multiple_of(&p) {
            return Err(Error::BadParameters(format!("{v} is not a prime power")));
        }
        rest /= &p;
        k += 1;
    }
    Ok((p, k))
}

/// Singleton bound `n + 1 − log_|𝐑| |C|` and the optimality check `d = ⌊bound⌋`.
pub fn certify(code: &PirCode) -> Result<OptimalityCertificate> {
    let n = code.n();
    let card = code.cardinality();
    let log = exact_log(&card, &code.alg.pir.size())?;
    let bound = BigRational::from_integer((n as u64 + 1).into()) - log;
    let distance = code.min_distance()?;
    let enumerated_distance = match code.brute_force_distance() {
        Ok(d) => Some(d),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let d = BigRational::from_integer(distance.into());
    let slack = &bound - &d;
    let optimal = bound.floor() == d && slack >= BigRational::zero();
    Ok(OptimalityCertificate {
        schema: SCHEMA_VERSION,
        n,
        cardinality: card.to_string(),
        distance,
        enumerated_distance,
        singleton_bound: (&bound).into(),
        bound: bound.to_string(),
        slack: (&slack).into(),
        optimal,
        bound_value: bound,
    })
}

/// `CRT(C⁰, …, C⁰, 0)` over `s` copies of the component ring with
/// `λ = (1, …, 1, 0)`, and its certificate.
pub fn optimal_construction(kind: OptimalKind) -> Result<(PirCode, OptimalityCertificate)> {
    let (c0, k, s, limit, what) = match kind {
        OptimalKind::ReedSolomon { q, k, s } => (rs_component(q, k)?, k, s, q as usize, "q"),
        OptimalKind::GaloisMds { p, t, m, n, k, s } => (galois_mds_component(p, t, m, n, k)?, k, s, n, "n"),
    };
    if k == 0 || k >= s.min(limit) {
        return Err(Error::BadParameters(format!(
            "need 0 < k < min(s, {what}), got k = {k}, s = {s}, {what} = {limit}"
        )));
    }
    let ring = c0.algebra().ring().clone();
    let pir = PirRing { components: vec![ring.clone(); s] };
    let mut lambda = vec![ring.one(); s];
    lambda[s - 1] = ring.zero();
    let alg = PirAlgebra::new(&pir, c0.n(), &lambda)?;
    let mut comps: Vec<Code> =
        alg.components[..s - 1].iter().map(|a| Code::from_generators(a, c0.generators())).collect::<Result<_>>()?;
    comps.push(Code::zero(&alg.components[s - 1]));
    let code = crt_code(&alg, comps)?;
    let cert = certify(&code)?;
    Ok((code, cert))
}
