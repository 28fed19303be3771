use std::sync::Arc;

use super::{ChainRing, ChainRingSpec, Elem};
use crate::error::{Error, Result};

/// The reduction `μ_j : R → R_j = R/γ^j R` and the residue-field identification `Φ_j`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Arc<ChainRing>,
    target: Arc<ChainRing>,
    j: u32,
}

impl QuotientMap {
    pub(crate) fn new(source: &Arc<ChainRing>, j: u32) -> Result<Self> {
        let e = source.e();
        if j < 1 || j > e {
            return Err(Error::IndexOutOfRange { index: j as usize, lo: 1, hi: e as usize });
        }
        let target = if j == e {
            Arc::clone(source)
        } else {
            let spec = match source.spec() {
                ChainRingSpec::IntegerModPrimePower { p, .. } => ChainRingSpec::IntegerModPrimePower { p: *p, e: j },
                ChainRingSpec::FiniteField { .. } => unreachable!("fields have e = 1"),
                ChainRingSpec::GaloisRing { p, m, modulus, .. } => {
                    let base = p.pow(j);
                    ChainRingSpec::GaloisRing {
                        p: *p,
                        t: j,
                        m: *m,
                        modulus: modulus.as_ref().map(|c| c.iter().map(|x| x % base).collect()),
                    }
                }
                ChainRingSpec::EisensteinExt { p, m, modulus, .. } => {
                    ChainRingSpec::EisensteinExt { p: *p, m: *m, modulus: modulus.clone(), e: j }
                }
            };
            Arc::new(ChainRing::new(&spec)?)
        };
        Ok(QuotientMap { source: Arc::clone(source), target, j })
    }

    pub fn source(&self) -> &Arc<ChainRing> {
        &self.source
    }

    /// The quotient ring `R_j`.
    pub fn target(&self) -> &Arc<ChainRing> {
        &self.target
    }

    pub fn index(&self) -> u32 {
        self.j
    }

    /// `μ_j(a) = a + γ^j R`.
    pub fn reduce(&self, a: Elem) -> Elem {
        if self.j == self.source.e() {
            return a;
        }
        let digits = self.source.digits(a);
        self.target.encode_digits(&digits)
    }

    /// A fixed section of `μ_j`: `reduce(lift(b)) = b`.
    pub fn lift(&self, b: Elem) -> Elem {
        if self.j == self.source.e() {
            return b;
        }
        let digits = self.target.digits(b);
        self.source.encode_digits(&digits)
    }

    /// `Φ_j`: residue field of `R_j` onto residue field of `R`, on residue codes.
    pub fn residue_iso(&self, residue: u32) -> u32 {
        let in_target = self.target.teichmuller_of_residue(residue);
        self.source.residue(self.lift(in_target))
    }
}
