//! Ring descriptions and their text syntax.
//!
//! Four concrete families of finite commutative chain rings are supported:
//!
//! | family | text | ring | γ | e | q |
//! |---|---|---|---|---|---|
//! | integers mod a prime power | `Z(8)` | ℤ/p^eℤ | p | e | p |
//! | finite field | `F(4)` or `F(4;mod=1,1,1)` | 𝔽_p[z]/(f) | 0 | 1 | p^m |
//! | Galois ring | `GR(4,2;mod=1,1,1)` | ℤ/p^t[z]/(f) | p | t | p^m |
//! | truncated polynomials | `FU(2,2)` | 𝔽_q[u]/(u^e) | u | e | q |
//!
//! Modulus coefficients are listed constant term first and include the leading 1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainRingSpec {
    IntegerModPrimePower {
        p: u32,
        e: u32,
    },
    FiniteField {
        p: u32,
        m: u32,
        modulus: Option<Vec<u32>>,
    },
    GaloisRing {
        p: u32,
        t: u32,
        m: u32,
        modulus: Option<Vec<u32>>,
    },
    /// 𝔽_{p^m}[u]/⟨u^e⟩.
    EisensteinExt {
        p: u32,
        m: u32,
        modulus: Option<Vec<u32>>,
        e: u32,
    },
}

impl ChainRingSpec {
    pub fn z(p: u32, e: u32) -> Self {
        ChainRingSpec::IntegerModPrimePower { p, e }
    }

    pub fn field(p: u32, m: u32) -> Self {
        ChainRingSpec::FiniteField { p, m, modulus: None }
    }

    pub fn galois(p: u32, t: u32, m: u32) -> Self {
        ChainRingSpec::GaloisRing { p, t, m, modulus: None }
    }

    pub fn truncated(p: u32, m: u32, e: u32) -> Self {
        ChainRingSpec::EisensteinExt { p, m, modulus: None, e }
    }

    pub fn prime(&self) -> u32 {
        match *self {
            ChainRingSpec::IntegerModPrimePower { p, .. }
            | ChainRingSpec::FiniteField { p, .. }
            | ChainRingSpec::GaloisRing { p, .. }
            | ChainRingSpec::EisensteinExt { p, .. } => p,
        }
    }

    /// Degree of the residue field over 𝔽_p.
    pub fn residue_degree(&self) -> u32 {
        match *self {
            ChainRingSpec::IntegerModPrimePower { .. } => 1,
            ChainRingSpec::FiniteField { m, .. }
            | ChainRingSpec::GaloisRing { m, .. }
            | ChainRingSpec::EisensteinExt { m, .. } => m,
        }
    }

    pub fn nilpotency(&self) -> u32 {
        match *self {
            ChainRingSpec::IntegerModPrimePower { e, .. } => e,
            ChainRingSpec::FiniteField { .. } => 1,
            ChainRingSpec::GaloisRing { t, .. } => t,
            ChainRingSpec::EisensteinExt { e, .. } => e,
        }
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        match self {
            ChainRingSpec::IntegerModPrimePower { .. } => None,
            ChainRingSpec::FiniteField { modulus, .. }
            | ChainRingSpec::GaloisRing { modulus, .. }
            | ChainRingSpec::EisensteinExt { modulus, .. } => modulus.as_deref(),
        }
    }

    pub(crate) fn with_modulus(&self, new: Option<Vec<u32>>) -> Self {
        let mut out = self.clone();
        match &mut out {
            ChainRingSpec::IntegerModPrimePower { .. } => {}
            ChainRingSpec::FiniteField { modulus, .. }
            | ChainRingSpec::GaloisRing { modulus, .. }
            | ChainRingSpec::EisensteinExt { modulus, .. } => *modulus = new,
        }
        out
    }

    /// Parses the ring text syntax, e.g. `Z(8)`, `F(5)`, `GR(4,2;mod=1,1,1)`, `FU(2,2)`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let open = text.find('(').ok_or_else(|| Error::Parse(format!("missing '(' in ring spec {text:?}")))?;
        if !text.ends_with(')') {
            return Err(Error::Parse(format!("missing ')' in ring spec {text:?}")));
        }
        let family = text[..open].trim();
        let inner = &text[open + 1..text.len() - 1];
        let (params, modulus) = match inner.split_once(';') {
            Some((params, rest)) => {
                let rest = rest.trim();
                let coeffs = rest
                    .strip_prefix("mod=")
                    .ok_or_else(|| Error::Parse(format!("expected 'mod=' after ';', found {rest:?}")))?;
                (params, Some(parse_list(coeffs)?))
            }
            None => (inner, None),
        };
        let params: Vec<&str> = params.split(',').map(str::trim).collect();
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("{family} takes {k} parameter(s), found {}", params.len())))
            }
        };
        match family {
            "Z" => {
                arity(1)?;
                if modulus.is_some() {
                    return Err(Error::Parse("Z(...) takes no modulus".into()));
                }
                let (p, e) = prime_power(parse_number(params[0])?)?;
                Ok(ChainRingSpec::IntegerModPrimePower { p, e })
            }
            "F" => {
                arity(1)?;
                let (p, m) = prime_power(parse_number(params[0])?)?;
                Ok(ChainRingSpec::FiniteField { p, m, modulus })
            }
            "GR" => {
                arity(2)?;
                let (p, t) = prime_power(parse_number(params[0])?)?;
                let m = parse_small(params[1])?;
                Ok(ChainRingSpec::GaloisRing { p, t, m, modulus })
            }
            "FU" => {
                arity(2)?;
                let (p, m) = prime_power(parse_number(params[0])?)?;
                let e = parse_small(params[1])?;
                Ok(ChainRingSpec::EisensteinExt { p, m, modulus, e })
            }
            other => Err(Error::Parse(format!("unknown ring family {other:?}"))),
        }
    }
}

impl fmt::Display for ChainRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let modulus = |f: &mut fmt::Formatter<'_>, m: &Option<Vec<u32>>| match m {
            Some(c) => {
                let list: Vec<String> = c.iter().map(u32::to_string).collect();
                write!(f, ";mod={}", list.join(","))
            }
            None => Ok(()),
        };
        match self {
            ChainRingSpec::IntegerModPrimePower { p, e } => write!(f, "Z({})", pow(*p, *e)),
            ChainRingSpec::FiniteField { p, m, modulus: md } => {
                write!(f, "F({}", pow(*p, *m))?;
                modulus(f, md)?;
                write!(f, ")")
            }
            ChainRingSpec::GaloisRing { p, t, m, modulus: md } => {
                write!(f, "GR({},{}", pow(*p, *t), m)?;
                modulus(f, md)?;
                write!(f, ")")
            }
            ChainRingSpec::EisensteinExt { p, m, modulus: md, e } => {
                write!(f, "FU({},{}", pow(*p, *m), e)?;
                modulus(f, md)?;
                write!(f, ")")
            }
        }
    }
}

impl std::str::FromStr for ChainRingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChainRingSpec::parse(s)
    }
}

fn pow(b: u32, k: u32) -> u64 {
    (b as u64).pow(k)
}

/// Parses `12` or `2^3`.
pub(crate) fn parse_number(s: &str) -> Result<u64> {
    let s = s.trim();
    match s.split_once('^') {
        Some((b, k)) => {
            let b = parse_u64(b)?;
            let k = parse_u64(k)?;
            let k = u32::try_from(k).map_err(|_| Error::Parse(format!("exponent too large: {s}")))?;
            b.checked_pow(k).ok_or_else(|| Error::Parse(format!("number too large: {s}")))
        }
        None => parse_u64(s),
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected a non-negative integer, found {s:?}")))
}

fn parse_small(s: &str) -> Result<u32> {
    let v = parse_u64(s)?;
    match u32::try_from(v) {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(Error::BadParameters(format!("parameter must be a positive integer, found {s}"))),
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|c| {
            let v = parse_u64(c)?;
            u32::try_from(v).map_err(|_| Error::Parse(format!("coefficient too large: {c}")))
        })
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(n: u64) -> Result<(u32, u32)> {
    if n < 2 {
        return Err(Error::NonPrime(n));
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NonPrime(n));
    }
    let p = u32::try_from(p).map_err(|_| Error::NonPrime(n))?;
    Ok((p, k))
}

// Dense polynomials over 𝔽_p, constant term first, used for modulus validation.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        k >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p) as u64;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = *r.last().unwrap() as u64 * lead_inv % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let idx = shift + i;
            r[idx] = ((r[idx] as u64 + p as u64 - c * bi as u64 % p as u64) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Irreducibility of a monic polynomial over 𝔽_p by trial division.
pub fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let f: Vec<u32> = trim(f.iter().map(|c| c % p).collect());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = low;
            for _ in 0..d {
                g.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `m` over 𝔽_p whose low coefficients,
/// read as a base-p number, are smallest.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for low in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut rest = low;
        for _ in 0..m {
            f.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_family() {
        assert_eq!(ChainRingSpec::parse("Z(8)").unwrap(), ChainRingSpec::z(2, 3));
        assert_eq!(ChainRingSpec::parse(" F(5) ").unwrap(), ChainRingSpec::field(5, 1));
        assert_eq!(ChainRingSpec::parse("F(2^2)").unwrap(), ChainRingSpec::field(2, 2));
        assert_eq!(
            ChainRingSpec::parse("GR(4,2;mod=1,1,1)").unwrap(),
            ChainRingSpec::GaloisRing { p: 2, t: 2, m: 2, modulus: Some(vec![1, 1, 1]) }
        );
        assert_eq!(ChainRingSpec::parse("FU(2,2)").unwrap(), ChainRingSpec::truncated(2, 1, 2));
    }

    #[test]
    fn display_round_trips() {
        for s in ["Z(8)", "F(5)", "F(4;mod=1,1,1)", "GR(4,2;mod=1,1,1)", "FU(4,3;mod=1,1,1)", "FU(2,2)"] {
            assert_eq!(ChainRingSpec::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(ChainRingSpec::parse("Z(12)"), Err(Error::NonPrime(12)));
        assert_eq!(ChainRingSpec::parse("Z(1)"), Err(Error::NonPrime(1)));
        assert!(matches!(ChainRingSpec::parse("Q(5)"), Err(Error::Parse(_))));
        assert!(matches!(ChainRingSpec::parse("GR(4)"), Err(Error::Parse(_))));
        assert!(matches!(ChainRingSpec::parse("Z(4"), Err(Error::Parse(_))));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_mod_p(&[1, 1, 1], 2));
        assert!(!is_irreducible_mod_p(&[1, 0, 1], 2));
        assert!(is_irreducible_mod_p(&[1, 1, 0, 1], 2));
        assert!(is_irreducible_mod_p(&[0, 1], 5));
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
        assert_eq!(default_modulus(7, 1), vec![0, 1]);
    }
}
