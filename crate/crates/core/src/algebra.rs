//! The algebra `S = R[x]/⟨x^n − λ⟩`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{make_ring, parse_list, parse_number, ChainRing, ChainRingSpec, Elem};

/// An element of `S`: coefficients of `x^0, …, x^(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SPoly(pub Vec<Elem>);

impl SPoly {
    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.0 == 0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|a| a.0 != 0).count()
    }

    /// Parses `[c0,c1,…]`; the brackets are optional.
    pub fn parse(text: &str) -> Result<SPoly> {
        let t = text.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(SPoly(Vec::new()));
        }
        Ok(SPoly(parse_list(t)?.into_iter().map(Elem).collect()))
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.0.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Classification {
    /// `e = 1`: ideals are `⟨x^i⟩`.
    FieldQuotient,
    /// `n = 1`: `S ≅ R`.
    ChainViaGamma,
    /// `λ ∈ γR ∖ γ²R`: `⟨x⟩` is the maximal ideal.
    ChainViaX {
        nilpotency: u64,
    },
    LocalNonChain,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::FieldQuotient => write!(f, "FieldQuotient"),
            Classification::ChainViaGamma => write!(f, "ChainViaGamma"),
            Classification::ChainViaX { nilpotency } => write!(f, "ChainViaX({nilpotency})"),
            Classification::LocalNonChain => write!(f, "LocalNonChain"),
        }
    }
}

/// One γ-layer of `a = Σ γ^j x^(t_j) h_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaXTerm {
    pub j: u32,
    pub t: usize,
    pub h: SPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaXForm {
    pub terms: Vec<GammaXTerm>,
}

#[derive(Debug)]
pub struct Algebra {
    ring: Arc<ChainRing>,
    n: usize,
    lambda: Elem,
    lambda_nilpotency: Option<u32>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.lambda == other.lambda
    }
}

impl Eq for Algebra {}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};n={};lambda={}", self.ring.spec(), self.n, self.lambda)
    }
}

pub fn make_algebra(ring: Arc<ChainRing>, n: usize, lambda: Elem) -> Result<Arc<Algebra>> {
    if n == 0 {
        return Err(Error::BadParameters("code length n must be at least 1".into()));
    }
    if !ring.contains(lambda) {
        return Err(Error::RingMismatch { code: lambda.0 as u64, size: ring.size() as u64 });
    }
    let lambda_nilpotency = if ring.is_unit(lambda) {
        None
    } else if lambda.0 == 0 {
        Some(1)
    } else {
        // λ = γ^v u has λ^k = 0 exactly when k·v >= e.
        let v = ring.valuation(lambda);
        Some(ring.e().div_ceil(v))
    };
    Ok(Arc::new(Algebra { ring, n, lambda, lambda_nilpotency }))
}

/// Parses `<ring>;n=<len>;lambda=<code>`, e.g. `Z(4);n=3;lambda=2`.
pub fn parse_algebra(text: &str) -> Result<Arc<Algebra>> {
    let text = text.trim();
    let close = text.rfind(')').ok_or_else(|| Error::Parse(format!("missing ring in algebra spec {text:?}")))?;
    let ring = make_ring(&ChainRingSpec::parse(&text[..=close])?)?;
    let mut n = None;
    let mut lambda = None;
    for part in text[close + 1..].split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) =
            part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        match key.trim() {
            "n" => n = Some(parse_number(value)?),
            "lambda" | "λ" => lambda = Some(parse_number(value)?),
            other => return Err(Error::Parse(format!("unknown algebra key {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("algebra spec needs n=".into()))?;
    let lambda = lambda.ok_or_else(|| Error::Parse("algebra spec needs lambda=".into()))?;
    let lambda = ring.elem(lambda)?;
    make_algebra(ring, n as usize, lambda)
}

impl Algebra {
    pub fn ring(&self) -> &Arc<ChainRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    /// Smallest `k >= 1` with `λ^k = 0`, `None` for unit λ.
    pub fn lambda_nilpotency(&self) -> Option<u32> {
        self.lambda_nilpotency
    }

    pub fn is_nie(&self) -> bool {
        self.lambda_nilpotency.is_some()
    }

    /// `|S| = |R|^n`, saturating.
    pub fn size(&self) -> u128 {
        (self.ring.size() as u128).saturating_pow(self.n as u32)
    }

    pub fn require_nie(&self) -> Result<u32> {
        self.lambda_nilpotency.ok_or(Error::NotNie)
    }

    /// Nilpotency index `N = n·e′` of `x`.
    pub fn x_nilpotency(&self) -> Result<u64> {
        Ok(self.n as u64 * self.require_nie()? as u64)
    }

    pub fn zero(&self) -> SPoly {
        SPoly(vec![self.ring.zero(); self.n])
    }

    pub fn one(&self) -> SPoly {
        self.monomial(0, self.ring.one())
    }

    /// `c·x^k` for `k < n`.
    pub fn monomial(&self, k: usize, c: Elem) -> SPoly {
        let mut v = self.zero();
        v.0[k] = c;
        v
    }

    pub fn x(&self) -> SPoly {
        if self.n == 1 {
            SPoly(vec![self.lambda])
        } else {
            self.monomial(1, self.ring.one())
        }
    }

    /// Validates length and coefficient codes.
    pub fn check(&self, a: &SPoly) -> Result<()> {
        if a.0.len() != self.n {
            return Err(Error::AlgebraMismatch);
        }
        if let Some(bad) = a.0.iter().find(|c| !self.ring.contains(**c)) {
            return Err(Error::RingMismatch { code: bad.0 as u64, size: self.ring.size() as u64 });
        }
        Ok(())
    }

    pub fn element(&self, coeffs: Vec<Elem>) -> Result<SPoly> {
        let a = SPoly(coeffs);
        self.check(&a)?;
        Ok(a)
    }

    pub fn parse_element(&self, text: &str) -> Result<SPoly> {
        let a = SPoly::parse(text)?;
        if a.0.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: a.0.len() });
        }
        self.check(&a)?;
        Ok(a)
    }

    pub fn add(&self, a: &SPoly, b: &SPoly) -> Result<SPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(SPoly(a.0.iter().zip(&b.0).map(|(&x, &y)| self.ring.add(x, y)).collect()))
    }

    pub fn sub(&self, a: &SPoly, b: &SPoly) -> Result<SPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(SPoly(a.0.iter().zip(&b.0).map(|(&x, &y)| self.ring.sub(x, y)).collect()))
    }

    pub fn neg(&self, a: &SPoly) -> Result<SPoly> {
        self.check(a)?;
        Ok(SPoly(a.0.iter().map(|&x| self.ring.neg(x)).collect()))
    }

    pub fn scale(&self, c: Elem, a: &SPoly) -> Result<SPoly> {
        self.check(a)?;
        if !self.ring.contains(c) {
            return Err(Error::RingMismatch { code: c.0 as u64, size: self.ring.size() as u64 });
        }
        Ok(SPoly(a.0.iter().map(|&x| self.ring.mul(c, x)).collect()))
    }

    /// Product with `x^n` replaced by λ.
    pub fn mul(&self, a: &SPoly, b: &SPoly) -> Result<SPoly> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(&a.0, &b.0))
    }

    pub(crate) fn mul_unchecked(&self, a: &[Elem], b: &[Elem]) -> SPoly {
        let r = &self.ring;
        let n = self.n;
        let mut out = vec![r.zero(); n];
        for (i, &ai) in a.iter().enumerate() {
            if ai.0 == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj.0 == 0 {
                    continue;
                }
                let prod = r.mul(ai, bj);
                let k = i + j;
                if k < n {
                    out[k] = r.add(out[k], prod);
                } else {
                    out[k - n] = r.add(out[k - n], r.mul(self.lambda, prod));
                }
            }
        }
        SPoly(out)
    }

    /// `τ_λ`, i.e. multiplication by `x`.
    pub fn tau(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        tau_shift(&self.ring, v, self.lambda, self.n)
    }

    pub(crate) fn tau_unchecked(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(v.len());
        out.push(self.ring.mul(self.lambda, v[v.len() - 1]));
        out.extend_from_slice(&v[..v.len() - 1]);
        out
    }

    /// `τ^k`.
    pub fn tau_pow(&self, v: &[Elem], k: usize) -> Result<Vec<Elem>> {
        let mut w = self.tau(v)?;
        for _ in 1..k {
            w = self.tau_unchecked(&w);
        }
        if k == 0 {
            return Ok(v.to_vec());
        }
        Ok(w)
    }

    /// Unit criterion: `a` is a unit iff its constant term is.
    pub fn is_unit(&self, a: &SPoly) -> Result<bool> {
        self.require_nie()?;
        self.check(a)?;
        Ok(self.ring.is_unit(a.0[0]))
    }

    /// `a⁻¹ = a₀⁻¹(1 + A + A² + …)` with `A = −a₀⁻¹(a − a₀)`, stopping once `A^i = 0`.
    pub fn invert(&self, a: &SPoly) -> Result<SPoly> {
        if !self.is_unit(a)? {
            return Err(Error::NotAUnit);
        }
        let r = &self.ring;
        let a0_inv = r.inverse(a.0[0])?;
        let mut big_a: Vec<Elem> = a.0.iter().map(|&c| r.neg(r.mul(a0_inv, c))).collect();
        big_a[0] = r.zero();
        let mut sum = self.one().0;
        let mut power = big_a.clone();
        while power.iter().any(|c| c.0 != 0) {
            for (s, &p) in sum.iter_mut().zip(&power) {
                *s = r.add(*s, p);
            }
            power = self.mul_unchecked(&power, &big_a).0;
        }
        Ok(SPoly(sum.into_iter().map(|c| r.mul(a0_inv, c)).collect()))
    }

    pub fn classify(&self) -> Result<Classification> {
        self.require_nie()?;
        let r = &self.ring;
        Ok(if r.e() == 1 {
            Classification::FieldQuotient
        } else if self.n == 1 {
            Classification::ChainViaGamma
        } else if self.lambda.0 != 0 && r.valuation(self.lambda) == 1 {
            Classification::ChainViaX { nilpotency: self.n as u64 * r.e() as u64 }
        } else {
            Classification::LocalNonChain
        })
    }

    /// Layer `j` of `a`: the γ-adic digit `j` of every coefficient.
    pub fn gamma_layer(&self, a: &SPoly, j: u32) -> Vec<Elem> {
        a.0.iter().map(|&c| self.ring.gamma_adic(c)[j as usize]).collect()
    }

    /// `a = Σ_j γ^j x^(t_j) h_j(x)` with Teichmüller coefficients in each `h_j`.
    pub fn gamma_x_decompose(&self, a: &SPoly) -> Result<GammaXForm> {
        self.check(a)?;
        let r = &self.ring;
        let digits: Vec<Vec<Elem>> = a.0.iter().map(|&c| r.gamma_adic(c)).collect();
        let terms = (0..r.e())
            .map(|j| {
                let layer: Vec<Elem> = digits.iter().map(|d| d[j as usize]).collect();
                match layer.iter().position(|c| c.0 != 0) {
                    None => GammaXTerm { j, t: self.n - 1, h: self.zero() },
                    Some(t) => {
                        let mut h = vec![r.zero(); self.n];
                        h[..self.n - t].copy_from_slice(&layer[t..]);
                        GammaXTerm { j, t, h: SPoly(h) }
                    }
                }
            })
            .collect();
        Ok(GammaXForm { terms })
    }

    pub fn gamma_x_reassemble(&self, form: &GammaXForm) -> Result<SPoly> {
        let r = &self.ring;
        let mut out = self.zero();
        for term in &form.terms {
            let mut shifted = self.check(&term.h).map(|_| term.h.0.clone())?;
            for _ in 0..term.t {
                shifted = self.tau_unchecked(&shifted);
            }
            let g = r.gamma_pow(term.j);
            for (o, s) in out.0.iter_mut().zip(shifted) {
                *o = r.add(*o, r.mul(g, s));
            }
        }
        Ok(out)
    }

    /// All elements of `S`, lexicographic in the coefficient codes with `x^0` fastest.
    pub fn elements(&self) -> Result<impl Iterator<Item = SPoly> + '_> {
        crate::error::check_cap(self.size())?;
        let size = self.ring.size();
        let total = self.size() as u64;
        Ok((0..total).map(move |mut idx| {
            let mut v = Vec::with_capacity(self.n);
            for _ in 0..self.n {
                v.push(Elem((idx % size as u64) as u32));
                idx /= size as u64;
            }
            SPoly(v)
        }))
    }
}

/// `τ_λ(v_0, …, v_(n-1)) = (λ v_(n-1), v_0, …, v_(n-2))`.
pub fn tau_shift(ring: &ChainRing, v: &[Elem], lambda: Elem, n: usize) -> Result<Vec<Elem>> {
    if v.len() != n || n == 0 {
        return Err(Error::LengthMismatch { expected: n, got: v.len() });
    }
    let mut out = Vec::with_capacity(n);
    out.push(ring.mul(lambda, v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    Ok(out)
}
