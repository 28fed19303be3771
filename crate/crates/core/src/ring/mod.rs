//! Finite commutative chain rings.
//!
//! Elements are plain integer codes (`Elem`) interpreted by the owning
//! [`ChainRing`]; every operation goes through the ring value, which also
//! validates raw codes coming from the outside world.

mod quotient;
mod spec;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

pub use quotient::QuotientMap;
pub use spec::{default_modulus, is_irreducible_mod_p, is_prime, prime_power, ChainRingSpec};
pub(crate) use spec::{parse_list, parse_number};

/// Canonical code of a ring element, `0 <= code < |R|`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

const MAX_DIGITS: usize = 32;
const MAX_RING_SIZE: u64 = 1 << 24;
const TABLE_LIMIT: u32 = 256;

/// ℤ/base[z]/(modulus) with `modulus` monic of degree `m`; codes pack the
/// coefficients in base `base`, constant term least significant.
#[derive(Clone, Debug)]
struct GaloisArith {
    p: u32,
    base: u32,
    m: usize,
    modulus: Vec<u32>,
}

impl GaloisArith {
    fn decode(&self, code: u32, out: &mut [u32; MAX_DIGITS]) {
        let mut rest = code;
        for d in out.iter_mut().take(self.m) {
            *d = rest % self.base;
            rest /= self.base;
        }
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits[..self.m].iter().rev().fold(0, |acc, &d| acc * self.base + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (mut x, mut y) = ([0; MAX_DIGITS], [0; MAX_DIGITS]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        for i in 0..self.m {
            x[i] = (x[i] + y[i]) % self.base;
        }
        self.encode(&x)
    }

    fn neg(&self, a: u32) -> u32 {
        let mut x = [0; MAX_DIGITS];
        self.decode(a, &mut x);
        for d in x.iter_mut().take(self.m) {
            *d = (self.base - *d) % self.base;
        }
        self.encode(&x)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (mut x, mut y) = ([0; MAX_DIGITS], [0; MAX_DIGITS]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        let base = self.base as u64;
        let mut prod = [0u64; 2 * MAX_DIGITS];
        for i in 0..self.m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.m {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % base;
            }
        }
        for d in (self.m..2 * self.m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..self.m {
                let idx = d - self.m + i;
                prod[idx] = (prod[idx] + (base - c) * self.modulus[i] as u64) % base;
            }
        }
        let mut out = [0; MAX_DIGITS];
        for i in 0..self.m {
            out[i] = prod[i] as u32;
        }
        self.encode(&out)
    }

    fn p_valuation(&self, mut c: u32, cap: u32) -> u32 {
        if c == 0 {
            return cap;
        }
        let mut v = 0;
        while c.is_multiple_of(self.p) {
            c /= self.p;
            v += 1;
        }
        v
    }
}

#[derive(Clone, Debug)]
enum Arith {
    Galois(GaloisArith),
    /// 𝔽_q[u]/(u^e): base-q packing of u-coefficients, each a field code.
    Truncated {
        field: GaloisArith,
        q: u32,
        e: usize,
    },
}

/// A concrete finite commutative chain ring.
pub struct ChainRing {
    spec: ChainRingSpec,
    arith: Arith,
    p: u32,
    m: u32,
    q: u32,
    e: u32,
    size: u32,
    gamma: Elem,
    teichmuller: Vec<Elem>,
    teich_by_residue: Vec<Elem>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    residue_field: OnceLock<Arc<ChainRing>>,
}

impl fmt::Debug for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainRing")
            .field("spec", &self.spec.to_string())
            .field("gamma", &self.gamma)
            .field("e", &self.e)
            .field("q", &self.q)
            .finish()
    }
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.spec == other.spec
    }
}

impl Eq for ChainRing {}

/// Builds a ring from its description.
pub fn make_ring(spec: &ChainRingSpec) -> Result<Arc<ChainRing>> {
    ChainRing::new(spec).map(Arc::new)
}

impl ChainRing {
    pub fn new(spec: &ChainRingSpec) -> Result<Self> {
        let p = spec.prime();
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        let m = spec.residue_degree();
        let e = spec.nilpotency();
        if m == 0 || e == 0 {
            return Err(Error::BadParameters("m, t and e must be at least 1".into()));
        }
        let size = (p as u64)
            .checked_pow(m * e)
            .filter(|&s| s <= MAX_RING_SIZE)
            .ok_or(Error::TooLarge { size: (p as u128).saturating_pow(m * e), cap: MAX_RING_SIZE })?;
        let q = p.pow(m);

        let resolve_modulus = |given: Option<&[u32]>, base: u32| -> Result<Vec<u32>> {
            match given {
                None => Ok(default_modulus(p, m)),
                Some(c) => {
                    if c.len() != m as usize + 1 {
                        return Err(Error::DegreeMismatch { expected: m as usize, got: c.len().saturating_sub(1) });
                    }
                    if c[m as usize] % base != 1 {
                        return Err(Error::DegreeMismatch { expected: m as usize, got: c.len() - 1 });
                    }
                    if !is_irreducible_mod_p(c, p) {
                        return Err(Error::ReducibleModulus);
                    }
                    Ok(c.iter().map(|x| x % base).collect())
                }
            }
        };

        let (arith, resolved) = match spec {
            ChainRingSpec::IntegerModPrimePower { .. } => {
                let base = p.pow(e);
                (Arith::Galois(GaloisArith { p, base, m: 1, modulus: vec![0, 1] }), spec.clone())
            }
            ChainRingSpec::FiniteField { modulus, .. } => {
                let md = resolve_modulus(modulus.as_deref(), p)?;
                let shown = (m > 1 || modulus.is_some()).then(|| md.clone());
                (Arith::Galois(GaloisArith { p, base: p, m: m as usize, modulus: md }), spec.with_modulus(shown))
            }
            ChainRingSpec::GaloisRing { t, modulus, .. } => {
                let base = p.pow(*t);
                let md = resolve_modulus(modulus.as_deref(), base)?;
                let shown = (m > 1 || modulus.is_some()).then(|| md.clone());
                (Arith::Galois(GaloisArith { p, base, m: m as usize, modulus: md }), spec.with_modulus(shown))
            }
            ChainRingSpec::EisensteinExt { modulus, .. } => {
                let md = resolve_modulus(modulus.as_deref(), p)?;
                let shown = (m > 1 || modulus.is_some()).then(|| md.clone());
                (
                    Arith::Truncated {
                        field: GaloisArith { p, base: p, m: m as usize, modulus: md },
                        q,
                        e: e as usize,
                    },
                    spec.with_modulus(shown),
                )
            }
        };

        let gamma = match &arith {
            Arith::Galois(g) => Elem(p % g.base),
            Arith::Truncated { q, e, .. } => Elem(if *e >= 2 { *q } else { 0 }),
        };

        let mut ring = ChainRing {
            spec: resolved,
            arith,
            p,
            m,
            q,
            e,
            size: size as u32,
            gamma,
            teichmuller: Vec::new(),
            teich_by_residue: Vec::new(),
            add_table: None,
            mul_table: None,
            residue_field: OnceLock::new(),
        };
        if ring.size <= TABLE_LIMIT {
            let s = ring.size;
            let mut add = Vec::with_capacity((s * s) as usize);
            let mut mul = Vec::with_capacity((s * s) as usize);
            for a in 0..s {
                for b in 0..s {
                    add.push(ring.raw_add(a, b));
                    mul.push(ring.raw_mul(a, b));
                }
            }
            ring.add_table = Some(add);
            ring.mul_table = Some(mul);
        }
        ring.build_teichmuller();
        Ok(ring)
    }

    fn build_teichmuller(&mut self) {
        let q = self.q as u64;
        let group = q - 1;
        // a ↦ a^(q^(e-1)) kills the 1 + γR part of the unit group.
        let mut lift_exp: u64 = 1;
        for _ in 1..self.e {
            lift_exp *= q;
        }
        let mut generator = None;
        if group == 1 {
            generator = Some(self.one());
        } else {
            for code in 1..self.size {
                let a = Elem(code);
                if !self.is_unit(a) {
                    continue;
                }
                let t = self.pow(a, lift_exp);
                if self.multiplicative_order(t) == Some(group) {
                    generator = Some(t);
                    break;
                }
            }
        }
        let g = generator.expect("the Teichmüller group is cyclic of order q-1");
        let mut powers = Vec::with_capacity(group as usize);
        let mut cur = self.one();
        for _ in 0..group {
            powers.push(cur);
            cur = self.mul(cur, g);
        }
        // Smallest-code generator of the same cyclic group.
        let zeta =
            (0..group).filter(|&k| gcd(k, group) == 1).map(|k| powers[k as usize]).min().unwrap_or_else(|| self.one());
        let mut teich = vec![self.zero()];
        let mut cur = self.one();
        for _ in 0..group {
            teich.push(cur);
            cur = self.mul(cur, zeta);
        }
        let mut by_residue = vec![Elem(0); self.q as usize];
        for &t in &teich {
            by_residue[self.residue(t) as usize] = t;
        }
        self.teichmuller = teich;
        self.teich_by_residue = by_residue;
    }

    fn raw_add(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Galois(g) => g.add(a, b),
            Arith::Truncated { field, q, e } => {
                let mut out = 0;
                let mut scale = 1;
                let (mut a, mut b) = (a, b);
                for _ in 0..*e {
                    out += field.add(a % q, b % q) * scale;
                    a /= q;
                    b /= q;
                    scale *= q;
                }
                out
            }
        }
    }

    fn raw_neg(&self, a: u32) -> u32 {
        match &self.arith {
            Arith::Galois(g) => g.neg(a),
            Arith::Truncated { field, q, e } => {
                let mut out = 0;
                let mut scale = 1;
                let mut a = a;
                for _ in 0..*e {
                    out += field.neg(a % q) * scale;
                    a /= q;
                    scale *= q;
                }
                out
            }
        }
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Galois(g) => g.mul(a, b),
            Arith::Truncated { field, q, e } => {
                let (mut x, mut y) = ([0u32; MAX_DIGITS], [0u32; MAX_DIGITS]);
                let (mut a, mut b) = (a, b);
                for i in 0..*e {
                    x[i] = a % q;
                    y[i] = b % q;
                    a /= q;
                    b /= q;
                }
                let mut out = [0u32; MAX_DIGITS];
                for i in 0..*e {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..*e - i {
                        out[i + j] = field.add(out[i + j], field.mul(x[i], y[j]));
                    }
                }
                out[..*e].iter().rev().fold(0, |acc, &d| acc * q + d)
            }
        }
    }

    pub fn spec(&self) -> &ChainRingSpec {
        &self.spec
    }

    /// Characteristic prime of the residue field.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Degree of the residue field over 𝔽_p.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Residue field order.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Nilpotency index of γ.
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1 % self.size)
    }

    /// Validates a raw code.
    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.size as u64 {
            Ok(Elem(code as u32))
        } else {
            Err(Error::RingMismatch { code, size: self.size as u64 })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => Elem(t[(a.0 * self.size + b.0) as usize]),
            None => Elem(self.raw_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => Elem(t[(a.0 * self.size + b.0) as usize]),
            None => Elem(self.raw_mul(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.raw_neg(a.0))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Checked arithmetic on raw operands; `b` is ignored for `Neg`.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem> {
        self.elem(a.0 as u64)?;
        self.elem(b.0 as u64)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Neg => self.neg(a),
        })
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut result = self.one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// Order of a unit; `None` for non-units.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if !self.is_unit(a) {
            return None;
        }
        let mut cur = a;
        let mut k = 1;
        while cur != self.one() {
            cur = self.mul(cur, a);
            k += 1;
        }
        Some(k)
    }

    /// γ-adic valuation: the largest `v` with `a ∈ γ^v R`; `e` for zero.
    pub fn valuation(&self, a: Elem) -> u32 {
        if a.0 == 0 {
            return self.e;
        }
        match &self.arith {
            Arith::Galois(g) => {
                let mut digits = [0; MAX_DIGITS];
                g.decode(a.0, &mut digits);
                digits[..g.m].iter().map(|&c| g.p_valuation(c, self.e)).min().unwrap_or(self.e)
            }
            Arith::Truncated { q, .. } => {
                let mut v = 0;
                let mut rest = a.0;
                while rest.is_multiple_of(*q) {
                    rest /= q;
                    v += 1;
                }
                v
            }
        }
    }

    /// Unit iff the leading γ-adic digit is nonzero.
    pub fn is_unit(&self, a: Elem) -> bool {
        a.0 != 0 && self.valuation(a) == 0
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        let mut group = (self.q - 1) as u64;
        for _ in 1..self.e {
            group *= self.q as u64;
        }
        Ok(self.pow(a, group - 1))
    }

    /// Code of `a + γR` in the residue field (`0 <= code < q`).
    pub fn residue(&self, a: Elem) -> u32 {
        match &self.arith {
            Arith::Galois(g) => {
                let mut digits = [0; MAX_DIGITS];
                g.decode(a.0, &mut digits);
                digits[..g.m].iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
            }
            Arith::Truncated { q, .. } => a.0 % q,
        }
    }

    /// Some `b` with `γ b = a`; requires `valuation(a) >= 1`.
    pub(crate) fn div_gamma(&self, a: Elem) -> Elem {
        debug_assert!(self.valuation(a) >= 1);
        match &self.arith {
            Arith::Galois(g) => {
                let mut digits = [0; MAX_DIGITS];
                g.decode(a.0, &mut digits);
                for d in digits.iter_mut().take(g.m) {
                    *d /= self.p;
                }
                Elem(g.encode(&digits))
            }
            Arith::Truncated { q, .. } => Elem(a.0 / q),
        }
    }

    /// Some `b` with `γ^k b = a`; requires `valuation(a) >= k`.
    pub fn div_gamma_pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(a, |acc, _| self.div_gamma(acc))
    }

    pub fn gamma_pow(&self, k: u32) -> Elem {
        self.pow(self.gamma, k as u64)
    }

    /// `{0, 1, ζ, …, ζ^(q-2)}` in that order.
    pub fn teichmuller_set(&self) -> &[Elem] {
        &self.teichmuller
    }

    /// The element ζ of multiplicative order `q - 1`.
    pub fn zeta(&self) -> Elem {
        self.teichmuller.get(2).copied().unwrap_or_else(|| self.one())
    }

    /// Teichmüller representative of a residue class.
    pub fn teichmuller_of_residue(&self, residue: u32) -> Elem {
        self.teich_by_residue[residue as usize]
    }

    pub fn is_teichmuller(&self, a: Elem) -> bool {
        self.teich_by_residue[self.residue(a) as usize] == a
    }

    /// Digits `a_0, …, a_(e-1)` in the Teichmüller set with `a = Σ a_i γ^i`.
    pub fn gamma_adic(&self, a: Elem) -> Vec<Elem> {
        let mut digits = Vec::with_capacity(self.e as usize);
        let mut rest = a;
        for i in 0..self.e {
            let d = self.teichmuller_of_residue(self.residue(rest));
            digits.push(d);
            rest = self.sub(rest, d);
            if i + 1 < self.e {
                rest = self.div_gamma(rest);
            }
        }
        digits
    }

    pub fn from_gamma_adic(&self, digits: &[Elem]) -> Elem {
        digits.iter().rev().fold(self.zero(), |acc, &d| self.add(d, self.mul(self.gamma, acc)))
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Elem>> {
        check_cap(self.size as u128)?;
        Ok((0..self.size).map(Elem))
    }

    /// The ideal `γ^l R`, enumerated.
    pub fn gamma_power_ideal(&self, l: u32) -> Result<Vec<Elem>> {
        let g = self.gamma_pow(l);
        let mut out: Vec<Elem> = self.elements()?.map(|a| self.mul(a, g)).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `R_j = R/γ^j R` together with the reduction map.
    pub fn quotient_ring(self: &Arc<Self>, j: u32) -> Result<QuotientMap> {
        QuotientMap::new(self, j)
    }

    /// The residue field `R_1`; its element codes coincide with [`ChainRing::residue`].
    pub fn residue_field(self: &Arc<Self>) -> Arc<ChainRing> {
        self.residue_field
            .get_or_init(|| {
                if self.e == 1 {
                    Arc::clone(self)
                } else {
                    QuotientMap::new(self, 1).expect("R/γR always exists").target().clone()
                }
            })
            .clone()
    }

    /// Digits of `a` in the family's packing, used by the quotient maps.
    fn digits(&self, a: Elem) -> Vec<u32> {
        match &self.arith {
            Arith::Galois(g) => {
                let mut d = [0; MAX_DIGITS];
                g.decode(a.0, &mut d);
                d[..g.m].to_vec()
            }
            Arith::Truncated { q, e, .. } => {
                let mut rest = a.0;
                (0..*e)
                    .map(|_| {
                        let d = rest % q;
                        rest /= q;
                        d
                    })
                    .collect()
            }
        }
    }

    fn encode_digits(&self, digits: &[u32]) -> Elem {
        match &self.arith {
            Arith::Galois(g) => Elem(digits.iter().rev().fold(0, |acc, &d| acc * g.base + d % g.base)),
            Arith::Truncated { q, e, .. } => {
                Elem(digits[..digits.len().min(*e)].iter().rev().fold(0, |acc, &d| acc * q + d))
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Arc<ChainRing> {
        make_ring(&ChainRingSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn z4_basics() {
        let r = ring("Z(4)");
        assert_eq!((r.gamma(), r.e(), r.q(), r.size()), (Elem(2), 2, 2, 4));
        assert_eq!(r.mul(Elem(2), Elem(2)), Elem(0));
        assert_eq!(r.add(Elem(3), Elem(2)), Elem(1));
        assert!(r.is_unit(Elem(3)));
        assert_eq!(r.inverse(Elem(3)), Ok(Elem(3)));
        assert!(!r.is_unit(Elem(2)));
        assert_eq!(r.inverse(Elem(2)), Err(Error::NotAUnit));
        assert_eq!(r.teichmuller_set(), &[Elem(0), Elem(1)]);
        assert_eq!(r.gamma_adic(Elem(3)), vec![Elem(1), Elem(1)]);
        assert_eq!(r.gamma_adic(Elem(0)), vec![Elem(0), Elem(0)]);
    }

    #[test]
    fn field_has_zero_gamma() {
        let r = ring("F(5)");
        assert_eq!((r.gamma(), r.e(), r.q()), (Elem(0), 1, 5));
        let mut t = r.teichmuller_set().to_vec();
        t.sort();
        assert_eq!(t, (0..5).map(Elem).collect::<Vec<_>>());
        assert_eq!(r.multiplicative_order(r.zeta()), Some(4));
    }

    #[test]
    fn galois_ring_gr42() {
        let r = ring("GR(4,2;mod=1,1,1)");
        assert_eq!((r.gamma(), r.e(), r.q(), r.size()), (Elem(2), 2, 4, 16));
        assert_eq!(r.mul(r.gamma(), r.gamma()), Elem(0));
        // z·z = 3z + 3, packed base 4
        assert_eq!(r.mul(Elem(4), Elem(4)), Elem(15));
        assert_eq!(r.teichmuller_set().len(), 4);
    }

    #[test]
    fn z8_and_z9() {
        let z8 = ring("Z(8)");
        assert_eq!(z8.inverse(Elem(5)), Ok(Elem(5)));
        let z9 = ring("Z(9)");
        assert_eq!(z9.teichmuller_set(), &[Elem(0), Elem(1), Elem(8)]);
        assert_eq!(z9.gamma_adic(Elem(5)), vec![Elem(8), Elem(8)]);
    }

    #[test]
    fn truncated_ring() {
        let r = ring("FU(2,2)");
        assert_eq!((r.gamma(), r.e(), r.q(), r.size()), (Elem(2), 2, 2, 4));
        assert_eq!(r.mul(Elem(2), Elem(2)), Elem(0));
        assert_eq!(r.mul(Elem(3), Elem(3)), Elem(1));
        let r = ring("FU(4,3)");
        assert_eq!((r.e(), r.q(), r.size()), (3, 4, 64));
        assert_eq!(r.pow(r.gamma(), 2), Elem(16));
        assert_eq!(r.pow(r.gamma(), 3), Elem(0));
    }

    #[test]
    fn modulus_validation() {
        let reducible = ChainRingSpec::parse("F(4;mod=1,0,1)").unwrap();
        assert_eq!(make_ring(&reducible).unwrap_err(), Error::ReducibleModulus);
        let wrong = ChainRingSpec::parse("GR(4,2;mod=1,1)").unwrap();
        assert!(matches!(make_ring(&wrong), Err(Error::DegreeMismatch { .. })));
        let bad_prime = ChainRingSpec::IntegerModPrimePower { p: 6, e: 1 };
        assert_eq!(make_ring(&bad_prime).unwrap_err(), Error::NonPrime(6));
    }

    #[test]
    fn elem_validation_and_enumeration() {
        let r = ring("Z(4)");
        assert_eq!(r.elem(4), Err(Error::RingMismatch { code: 4, size: 4 }));
        assert_eq!(r.elements().unwrap().collect::<Vec<_>>(), vec![Elem(0), Elem(1), Elem(2), Elem(3)]);
        assert_eq!(ring("F(4)").elements().unwrap().count(), 4);
        assert_eq!(ring("GR(4,2)").elements().unwrap().count(), 16);
    }
}
