//! Constacyclic codes as ideals of `S = R[x]/⟨x^n − λ⟩`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;

use crate::algebra::{make_algebra, Algebra, SPoly};
use crate::error::{Error, Result};
use crate::linalg::Submodule;
use crate::ring::{ChainRing, Elem};

/// Serialization schema version shared by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub struct Code {
    alg: Arc<Algebra>,
    generators: Vec<SPoly>,
    module: Submodule,
    representation: OnceLock<Vec<SPoly>>,
}

impl Clone for Code {
    fn clone(&self) -> Self {
        let representation = OnceLock::new();
        if let Some(r) = self.representation.get() {
            let _ = representation.set(r.clone());
        }
        Code { alg: self.alg.clone(), generators: self.generators.clone(), module: self.module.clone(), representation }
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.module == other.module
    }
}

impl Eq for Code {}

/// `Tor_i(C) = ⟨x^T⟩` inside `F_q[x]/⟨x^n⟩`.
#[derive(Clone, Debug)]
pub struct TorsionCode {
    pub index: u32,
    pub degree: usize,
    pub field: Arc<ChainRing>,
    /// Residue vectors spanning the code.
    pub span: Submodule,
}

impl TorsionCode {
    pub fn n(&self) -> usize {
        self.span.len()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.field.q()).pow((self.n() - self.degree) as u32)
    }

    /// Whether the span is exactly the set of vectors vanishing below `degree`.
    pub fn is_standard(&self) -> bool {
        let n = self.n();
        let unit_rows: Vec<Vec<Elem>> =
            (self.degree..n).map(|c| (0..n).map(|k| Elem((k == c) as u32)).collect()).collect();
        let expected = Submodule::from_generators(self.field.clone(), n, &unit_rows).expect("unit vectors are valid");
        expected == self.span
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub schema: u32,
    pub algebra: String,
    pub generators: Vec<SPoly>,
    pub torsional_degrees: Vec<usize>,
    pub representation: Option<Vec<SPoly>>,
    pub cardinality: String,
}

impl Code {
    /// Smallest ideal containing `gens`. The R-span of `x^k g` for `k < n` is
    /// already closed under `x`, since `x^n g = λ g`.
    pub fn from_generators(alg: &Arc<Algebra>, gens: &[SPoly]) -> Result<Code> {
        for g in gens {
            alg.check(g)?;
        }
        let n = alg.n();
        let mut rows = Vec::with_capacity(gens.len() * n);
        for g in gens {
            let mut v = g.0.clone();
            for _ in 0..n {
                rows.push(v.clone());
                v = alg.tau_unchecked(&v);
            }
        }
        let module = Submodule::from_generators(alg.ring().clone(), n, &rows)?;
        debug_assert!(is_shift_closed(alg, &module));
        Ok(Code { alg: alg.clone(), generators: gens.to_vec(), module, representation: OnceLock::new() })
    }

    /// Wraps an R-submodule that must already be closed under the shift.
    pub fn from_submodule(alg: &Arc<Algebra>, module: Submodule) -> Result<Code> {
        if module.len() != alg.n() || module.ring() != alg.ring() {
            return Err(Error::AlgebraMismatch);
        }
        if !is_shift_closed(alg, &module) {
            return Err(Error::NotAnIdeal);
        }
        let generators = module.row_vectors().into_iter().map(SPoly).collect();
        Ok(Code { alg: alg.clone(), generators, module, representation: OnceLock::new() })
    }

    pub fn zero(alg: &Arc<Algebra>) -> Code {
        Code::from_generators(alg, &[]).expect("empty generator set")
    }

    pub fn full(alg: &Arc<Algebra>) -> Code {
        Code::from_generators(alg, &[alg.one()]).expect("unit generator")
    }

    /// `γ^i R^n`, for `0 <= i <= e`.
    pub fn gamma_power(alg: &Arc<Algebra>, i: u32) -> Result<Code> {
        let ring = alg.ring();
        if i > ring.e() {
            return Err(Error::IndexOutOfRange { index: i as usize, lo: 0, hi: ring.e() as usize });
        }
        let g = if i == ring.e() { ring.zero() } else { ring.gamma_pow(i) };
        Code::from_generators(alg, &[alg.monomial(0, g)])
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn generators(&self) -> &[SPoly] {
        &self.generators
    }

    pub fn module(&self) -> &Submodule {
        &self.module
    }

    /// Rows of the γ-echelon generator matrix.
    pub fn basis(&self) -> Vec<SPoly> {
        self.module.row_vectors().into_iter().map(SPoly).collect()
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.module.log_q_size() == self.alg.ring().e() as u64 * self.n() as u64
    }

    pub fn contains(&self, v: &SPoly) -> Result<bool> {
        self.alg.check(v)?;
        self.module.contains(&v.0)
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        other.module.contains_all(&self.module)
    }

    /// `T_0, …, T_(e-1)` with `Tor_i(C) = ⟨x^(T_i)⟩`.
    pub fn torsional_degrees(&self) -> Vec<usize> {
        let n = self.n();
        self.module.torsion_dims().into_iter().map(|d| n - d).collect()
    }

    pub fn torsion_code(&self, i: u32) -> Result<TorsionCode> {
        let e = self.alg.ring().e();
        if i >= e {
            return Err(Error::IndexOutOfRange { index: i as usize, lo: 0, hi: e as usize - 1 });
        }
        let field = self.alg.ring().residue_field();
        let span = Submodule::from_generators(field.clone(), self.n(), &self.module.torsion_generators(i))?;
        let degree = self.n() - span.rows().len();
        Ok(TorsionCode { index: i, degree, field, span })
    }

    /// `log_q |C| = en − Σ T_i`.
    pub fn log_q_cardinality(&self) -> u64 {
        let e = self.alg.ring().e() as u64;
        let sum: usize = self.torsional_degrees().iter().sum();
        e * self.n() as u64 - sum as u64
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.alg.ring().q()).pow(self.log_q_cardinality() as u32)
    }

    /// Every codeword once, in a fixed order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = SPoly> + '_> {
        Ok(self.module.elements()?.map(SPoly))
    }

    /// Minimum Hamming weight of a nonzero codeword, `n + 1` for the zero code.
    pub fn min_distance(&self) -> Result<usize> {
        let mut best = self.n() + 1;
        for c in self.codewords()? {
            let w = c.weight();
            if w > 0 && w < best {
                best = w;
                if best == 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// A weight-one codeword, built from a nonzero codeword `c` of least
    /// valuation `l`: `γ^(e-1-l) c` keeps only its valuation-`l` entries, and
    /// shifting the first of them to the last position wraps everything else
    /// through λ, which kills it.
    pub fn weight_one_witness(&self) -> Result<Option<SPoly>> {
        self.alg.require_nie()?;
        let Some(row) = self.module.rows().first() else {
            return Ok(None);
        };
        let ring = self.alg.ring();
        let n = self.n();
        let c = &row.entries;
        let l = c.iter().map(|&a| ring.valuation(a)).min().expect("n >= 1");
        let g = ring.gamma_pow(ring.e() - 1 - l);
        let scaled: Vec<Elem> = c.iter().map(|&a| ring.mul(g, a)).collect();
        let t = c.iter().position(|&a| ring.valuation(a) == l).expect("minimum attained");
        let w = SPoly(self.alg.tau_pow(&scaled, n - t - 1)?);
        debug_assert_eq!(w.weight(), 1);
        debug_assert!(self.contains(&w).unwrap_or(false));
        Ok(Some(w))
    }

    /// `⟨⟨f_0, …, f_(e-1)⟩⟩`: each nonzero `f_i = γ^i x^(T_i) + Σ_(j>i) γ^j p_j`
    /// with `deg p_j < T_j`, and `f_i = 0` when `Tor_i(C) = 0`.
    pub fn canonical_representation(&self) -> Result<&[SPoly]> {
        self.alg.require_nie()?;
        if let Some(r) = self.representation.get() {
            return Ok(r);
        }
        let computed = self.compute_representation();
        Ok(self.representation.get_or_init(|| computed))
    }

    fn compute_representation(&self) -> Vec<SPoly> {
        let ring = self.alg.ring();
        let alg = &self.alg;
        let n = self.n();
        let e = ring.e();
        let degrees = self.torsional_degrees();
        let mut reps: Vec<SPoly> = vec![alg.zero(); e as usize];
        for i in (0..e).rev() {
            let ti = degrees[i as usize];
            if ti == n {
                continue;
            }
            // A basis row with pivot T_i and valuation <= i exists because
            // the residues of the rows of valuation <= i have distinct leading
            // positions filling T_i..n.
            let row = self.module.rows().iter().find(|r| r.pivot == ti && r.valuation <= i).expect("torsion pivot row");
            let g = ring.gamma_pow(i - row.valuation);
            let base: Vec<Elem> = row.entries.iter().map(|&a| ring.mul(g, a)).collect();
            let mut f = base.clone();
            // Clear layer i to the right of T_i with shifts of the base row.
            let mut shifted = base.clone();
            for k in ti + 1..n {
                shifted = alg.tau_unchecked(&shifted);
                let d = ring.gamma_adic(f[k])[i as usize];
                if d.0 != 0 {
                    sub_scaled(ring, &mut f, d, &shifted);
                }
            }
            // Push each higher layer below T_j with shifts of f_j.
            for j in i + 1..e {
                let tj = degrees[j as usize];
                if tj == n {
                    continue;
                }
                let mut shifted = reps[j as usize].0.clone();
                for k in tj..n {
                    if k > tj {
                        shifted = alg.tau_unchecked(&shifted);
                    }
                    let d = ring.gamma_adic(f[k])[j as usize];
                    if d.0 != 0 {
                        sub_scaled(ring, &mut f, d, &shifted);
                    }
                }
            }
            reps[i as usize] = SPoly(f);
        }
        reps
    }

    /// Image `μ_j(C)` in `R_j[x]/⟨x^n − μ_j(λ)⟩`.
    pub fn reduce_mod_gamma_power(&self, j: u32) -> Result<Code> {
        let map = self.alg.ring().quotient_ring(j)?;
        let target = make_algebra(map.target().clone(), self.n(), map.reduce(self.alg.lambda()))?;
        let gens: Vec<SPoly> =
            self.module.rows().iter().map(|r| SPoly(r.entries.iter().map(|&a| map.reduce(a)).collect())).collect();
        Code::from_generators(&target, &gens)
    }

    /// Checks `Tor_i(C) = Φ_j(Tor_i(μ_j(C)))` for `i < j <= e`.
    pub fn torsion_commutes_check(&self, j: u32, i: u32) -> Result<bool> {
        let e = self.alg.ring().e();
        if j < 1 || j > e {
            return Err(Error::IndexOutOfRange { index: j as usize, lo: 1, hi: e as usize });
        }
        if i >= j {
            return Err(Error::IndexOutOfRange { index: i as usize, lo: 0, hi: j as usize - 1 });
        }
        let map = self.alg.ring().quotient_ring(j)?;
        let image = self.reduce_mod_gamma_power(j)?;
        let lhs = self.torsion_code(i)?;
        let field = lhs.field.clone();
        let mapped: Vec<Vec<Elem>> = image
            .module
            .torsion_generators(i)
            .into_iter()
            .map(|v| v.into_iter().map(|b| Elem(map.residue_iso(b.0))).collect())
            .collect();
        let rhs = Submodule::from_generators(field, self.n(), &mapped)?;
        Ok(lhs.span == rhs)
    }

    pub fn report(&self) -> CodeReport {
        CodeReport {
            schema: SCHEMA_VERSION,
            algebra: self.alg.to_string(),
            generators: self.generators.clone(),
            torsional_degrees: self.torsional_degrees(),
            representation: self.canonical_representation().ok().map(<[SPoly]>::to_vec),
            cardinality: self.cardinality().to_string(),
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(SPoly::to_string).collect();
        write!(f, "⟨{}⟩ in {}", gens.join(", "), self.alg)
    }
}

fn sub_scaled(ring: &ChainRing, target: &mut [Elem], c: Elem, row: &[Elem]) {
    for (t, &r) in target.iter_mut().zip(row) {
        *t = ring.sub(*t, ring.mul(c, r));
    }
}

fn is_shift_closed(alg: &Algebra, module: &Submodule) -> bool {
    module.rows().iter().all(|r| module.contains(&alg.tau_unchecked(&r.entries)).unwrap_or(false))
}

/// Whether `v` has the shape of the `i`-th representation entry for the
/// torsional degrees `degrees`: layers below `i` vanish, layer `i` is exactly
/// `x^(T_i)`, and every layer `j > i` has degree below `T_j`.
pub fn has_representation_shape(ring: &ChainRing, v: &SPoly, i: u32, degrees: &[usize]) -> bool {
    let digits: Vec<Vec<Elem>> = v.0.iter().map(|&a| ring.gamma_adic(a)).collect();
    let ti = degrees[i as usize];
    (0..ring.e()).all(|j| {
        digits.iter().enumerate().all(|(k, d)| {
            let digit = d[j as usize];
            if j < i {
                digit.0 == 0
            } else if j == i {
                digit == if k == ti { ring.one() } else { ring.zero() }
            } else {
                k < degrees[j as usize] || digit.0 == 0
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn p(xs: &[u32]) -> SPoly {
        SPoly(xs.iter().map(|&x| Elem(x)).collect())
    }

    #[test]
    fn trivial_codes() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        let full = Code::full(&a);
        assert_eq!(full.torsional_degrees(), vec![0, 0]);
        assert_eq!(full.cardinality(), BigUint::from(16u32));
        let zero = Code::zero(&a);
        assert_eq!(zero.torsional_degrees(), vec![2, 2]);
        assert_eq!(zero.cardinality(), BigUint::from(1u32));
        assert_eq!(zero.codewords().unwrap().collect::<Vec<_>>(), vec![a.zero()]);
        assert_eq!(zero.canonical_representation().unwrap(), &[a.zero(), a.zero()]);
        assert!(zero.contains(&a.zero()).unwrap());
    }

    #[test]
    fn ideal_generated_by_x() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        let c = Code::from_generators(&a, &[p(&[0, 1])]).unwrap();
        assert_eq!(c.cardinality(), BigUint::from(8u32));
        assert_eq!(c.codewords().unwrap().count(), 8);
        assert!(!c.contains(&p(&[1, 0])).unwrap());
        assert!(c.contains(&p(&[2, 0])).unwrap());
        assert_eq!(c.torsional_degrees(), vec![1, 0]);
        assert_eq!(c.canonical_representation().unwrap(), &[p(&[0, 1]), p(&[2, 0])]);
        assert_eq!(c.min_distance().unwrap(), 1);
        let w = c.weight_one_witness().unwrap().unwrap();
        assert_eq!(w.weight(), 1);
        assert!(c.contains(&w).unwrap());
    }

    #[test]
    fn gamma_multiple_over_zero_lambda() {
        let a = parse_algebra("Z(4);n=2;lambda=0").unwrap();
        let c = Code::from_generators(&a, &[p(&[2, 2]), p(&[0, 2])]).unwrap();
        assert_eq!(c.torsional_degrees(), vec![2, 0]);
        assert_eq!(c.canonical_representation().unwrap(), &[p(&[0, 0]), p(&[2, 0])]);
        assert_eq!(c, Code::gamma_power(&a, 1).unwrap());
    }

    #[test]
    fn chain_via_x_closed_form() {
        // In Z(8)[x]/⟨x^2 − 2⟩, ⟨x^(2k+w)⟩ has representation
        // (0, …, 0, γ^k x^w, γ^(k+1), …, γ^(e−1)).
        let a = parse_algebra("Z(8);n=2;lambda=2").unwrap();
        let ring = a.ring().clone();
        for j in 0..6usize {
            let (k, w) = (j / 2, j % 2);
            let mut gen = a.one();
            for _ in 0..j {
                gen = a.mul(&gen, &a.x()).unwrap();
            }
            let c = Code::from_generators(&a, &[gen]).unwrap();
            let mut expected = vec![a.zero(); 3];
            expected[k] = a.monomial(w, ring.gamma_pow(k as u32));
            for (l, slot) in expected.iter_mut().enumerate().skip(k + 1) {
                *slot = a.monomial(0, ring.gamma_pow(l as u32));
            }
            assert_eq!(c.canonical_representation().unwrap(), expected.as_slice(), "j = {j}");
        }
    }

    #[test]
    fn representation_shape_and_regeneration() {
        let a = parse_algebra("Z(8);n=3;lambda=4").unwrap();
        let c = Code::from_generators(&a, &[p(&[2, 4, 6]), p(&[4, 0, 1])]).unwrap();
        let degrees = c.torsional_degrees();
        let reps = c.canonical_representation().unwrap().to_vec();
        for (i, f) in reps.iter().enumerate() {
            if degrees[i] == 3 {
                assert!(f.is_zero());
            } else {
                assert!(has_representation_shape(a.ring(), f, i as u32, &degrees));
                assert!(c.contains(f).unwrap());
            }
        }
        let regenerated = Code::from_generators(&a, &reps).unwrap();
        assert_eq!(regenerated, c);
        assert_eq!(regenerated.canonical_representation().unwrap(), reps.as_slice());
    }

    #[test]
    fn torsion_codes() {
        let a = parse_algebra("Z(8);n=2;lambda=2").unwrap();
        let c = Code::from_generators(&a, &[p(&[0, 2])]).unwrap();
        for i in 0..3 {
            let t = c.torsion_code(i).unwrap();
            assert!(t.is_standard());
            assert_eq!(t.degree, c.torsional_degrees()[i as usize]);
        }
        assert!(matches!(c.torsion_code(3), Err(Error::IndexOutOfRange { .. })));
        for j in 1..=3 {
            for i in 0..j {
                assert!(c.torsion_commutes_check(j, i).unwrap());
            }
        }
        assert!(c.torsion_commutes_check(2, 2).is_err());
    }

    #[test]
    fn distances() {
        let a = parse_algebra("Z(4);n=4;lambda=2").unwrap();
        assert_eq!(Code::zero(&a).min_distance().unwrap(), 5);
        let f = parse_algebra("F(5);n=4;lambda=0").unwrap();
        assert_eq!(Code::full(&f).min_distance().unwrap(), 1);
    }

    #[test]
    fn report_serializes() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        let c = Code::from_generators(&a, &[p(&[0, 1])]).unwrap();
        let json = serde_json::to_value(c.report()).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["cardinality"], "8");
        assert_eq!(json["representation"], serde_json::json!([[0, 1], [2, 0]]));
    }
}
