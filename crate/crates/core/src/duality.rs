//! Annihilators, Euclidean duals, and when the dual is again constacyclic.

use serde::Serialize;

use crate::algebra::SPoly;
use crate::code::{Code, SCHEMA_VERSION};
use crate::error::{check_cap, Error, Result};
use crate::linalg::{kernel, Submodule};
use crate::ring::Elem;

/// The coordinate reversal `π(c_0, …, c_(n-1)) = (c_(n-1), …, c_0)`.
pub fn reverse(v: &[Elem]) -> Vec<Elem> {
    v.iter().rev().copied().collect()
}

/// `𝒜(C) = { a : c(x) a(x) = 0 for every c ∈ C }`.
///
/// For a basis row `r`, `r·a = Σ_k a_k τ^k(r)`, so the annihilator is the
/// kernel of the matrix stacking the maps `a ↦ r·a` over all rows.
pub fn annihilator(code: &Code) -> Result<Code> {
    let alg = code.algebra();
    alg.require_nie()?;
    let n = alg.n();
    let ring = alg.ring();
    let mut matrix: Vec<Vec<Elem>> = Vec::new();
    for row in code.module().rows() {
        let mut shifts = Vec::with_capacity(n);
        let mut v = row.entries.clone();
        for _ in 0..n {
            shifts.push(v.clone());
            v = alg.tau_unchecked(&v);
        }
        for c in 0..n {
            matrix.push(shifts.iter().map(|s| s[c]).collect());
        }
    }
    let gens = kernel(ring, &matrix, n);
    let module = Submodule::from_generators(ring.clone(), n, &gens)?;
    Code::from_submodule(alg, module)
}

/// `{ v : ⟨c, v⟩ = 0 for every c ∈ C }`, solved directly.
pub fn inner_product_dual(code: &Code) -> Result<Submodule> {
    let ring = code.algebra().ring();
    let n = code.n();
    let gens = kernel(ring, &code.module().row_vectors(), n);
    Submodule::from_generators(ring.clone(), n, &gens)
}

/// `W_i = n − T_(e−1−i)`, the torsional degrees of `𝒜(C)`.
pub fn dual_torsion_profile(code: &Code) -> Result<Vec<usize>> {
    code.algebra().require_nie()?;
    let t = code.torsional_degrees();
    let n = code.n();
    Ok((0..t.len()).map(|i| n - t[t.len() - 1 - i]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Escape {
    pub lambda_hat: Elem,
    pub word: Vec<Elem>,
    pub shifted: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualVerdict {
    /// `C = γ^i R^n`, so `C^⊥ = γ^(e−i) R^n` is constacyclic for every λ̂.
    Yes(u32),
    /// One escaping shift per λ̂ ∈ R. When a single dual word escapes under
    /// every λ̂, all entries share that word.
    No { witnesses: Vec<Escape> },
}

#[derive(Clone, Debug)]
pub struct DualReport {
    pub annihilator: Code,
    pub dual: Submodule,
    pub predicted_torsion: Vec<usize>,
    pub annihilator_torsion: Vec<usize>,
    pub matches_inner_product_dual: bool,
    pub verdict: DualVerdict,
}

#[derive(Serialize)]
pub struct DualReportJson {
    pub schema: u32,
    pub algebra: String,
    pub annihilator_generators: Vec<SPoly>,
    pub dual_generator_matrix: Vec<Vec<Elem>>,
    pub predicted_torsion: Vec<usize>,
    pub annihilator_torsion: Vec<usize>,
    pub matches_inner_product_dual: bool,
    pub verdict: DualVerdict,
}

impl DualReport {
    pub fn to_json(&self) -> DualReportJson {
        DualReportJson {
            schema: SCHEMA_VERSION,
            algebra: self.annihilator.algebra().to_string(),
            annihilator_generators: self.annihilator.basis(),
            dual_generator_matrix: self.dual.row_vectors(),
            predicted_torsion: self.predicted_torsion.clone(),
            annihilator_torsion: self.annihilator_torsion.clone(),
            matches_inner_product_dual: self.matches_inner_product_dual,
            verdict: self.verdict.clone(),
        }
    }
}

/// `C^⊥ = π(𝒜(C))` as a normalized generator matrix.
pub fn dual_from_annihilator(ann: &Code) -> Result<Submodule> {
    let ring = ann.algebra().ring();
    let rows: Vec<Vec<Elem>> = ann.module().rows().iter().map(|r| reverse(&r.entries)).collect();
    Submodule::from_generators(ring.clone(), ann.n(), &rows)
}

pub fn dual(code: &Code) -> Result<DualReport> {
    let ann = annihilator(code)?;
    let dual = dual_from_annihilator(&ann)?;
    let direct = inner_product_dual(code)?;
    let verdict = dual_verdict(code, &dual)?;
    Ok(DualReport {
        predicted_torsion: dual_torsion_profile(code)?,
        annihilator_torsion: ann.torsional_degrees(),
        matches_inner_product_dual: dual == direct,
        annihilator: ann,
        dual,
        verdict,
    })
}

pub fn is_dual_constacyclic(code: &Code) -> Result<DualVerdict> {
    let ann = annihilator(code)?;
    let dual = dual_from_annihilator(&ann)?;
    dual_verdict(code, &dual)
}

fn dual_verdict(code: &Code, dual: &Submodule) -> Result<DualVerdict> {
    let alg = code.algebra();
    let ring = alg.ring();
    for i in 0..=ring.e() {
        if *code == Code::gamma_power(alg, i)? {
            return Ok(DualVerdict::Yes(i));
        }
    }
    check_cap(dual.size_u128().saturating_mul(ring.size() as u128))?;
    let mut words: Vec<Vec<Elem>> = dual.elements()?.filter(|w| w.iter().any(|a| a.0 != 0)).collect();
    words.sort();
    let lambdas: Vec<Elem> = ring.elements()?.collect();
    let escape = |word: &Vec<Elem>, lh: Elem| -> Option<Escape> {
        let shifted = crate::algebra::tau_shift(ring, word, lh, word.len()).expect("length n");
        (!dual.contains(&shifted).expect("length n")).then(|| Escape { lambda_hat: lh, word: word.clone(), shifted })
    };
    for word in &words {
        let all: Option<Vec<Escape>> = lambdas.iter().map(|&lh| escape(word, lh)).collect();
        if let Some(witnesses) = all {
            return Ok(DualVerdict::No { witnesses });
        }
    }
    let witnesses = lambdas
        .iter()
        .map(|&lh| words.iter().find_map(|w| escape(w, lh)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::BadParameters("dual is constacyclic although C is not γ^i R^n".into()))?;
    Ok(DualVerdict::No { witnesses })
}

/// Minimum distance of `C^⊥` by enumeration; `C = R^n` has a zero dual.
pub fn dual_min_distance_check(code: &Code) -> Result<usize> {
    code.algebra().require_nie()?;
    if code.is_full() {
        return Err(Error::FullCode);
    }
    let dual = dual_from_annihilator(&annihilator(code)?)?;
    let mut best = code.n() + 1;
    for w in dual.elements()? {
        let wt = w.iter().filter(|a| a.0 != 0).count();
        if wt > 0 && wt < best {
            best = wt;
            if best == 1 {
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn p(xs: &[u32]) -> SPoly {
        SPoly(xs.iter().map(|&x| Elem(x)).collect())
    }

    fn v(xs: &[u32]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn reversal_is_an_involution() {
        let w = v(&[1, 2, 3, 0]);
        assert_eq!(reverse(&reverse(&w)), w);
        assert_eq!(reverse(&w), v(&[0, 3, 2, 1]));
    }

    #[test]
    fn trivial_annihilators() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        assert!(annihilator(&Code::full(&a)).unwrap().is_zero());
        assert!(annihilator(&Code::zero(&a)).unwrap().is_full());
    }

    #[test]
    fn annihilator_of_x() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        let c = Code::from_generators(&a, &[p(&[0, 1])]).unwrap();
        let ann = annihilator(&c).unwrap();
        let x3 = a.mul(&a.mul(&a.x(), &a.x()).unwrap(), &a.x()).unwrap();
        assert_eq!(ann, Code::from_generators(&a, &[x3]).unwrap());
        assert_eq!(ann.cardinality(), 2u32.into());
        assert_eq!(dual_torsion_profile(&c).unwrap(), vec![2, 1]);
        assert_eq!(ann.torsional_degrees(), vec![2, 1]);
        let report = dual(&c).unwrap();
        assert!(report.matches_inner_product_dual);
    }

    #[test]
    fn field_case_dual_is_leading_identity() {
        let a = parse_algebra("F(5);n=4;lambda=0").unwrap();
        let c = Code::from_generators(&a, &[a.monomial(2, Elem(1))]).unwrap();
        let report = dual(&c).unwrap();
        assert_eq!(report.dual.row_vectors(), vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]);
        match report.verdict {
            DualVerdict::No { witnesses } => {
                assert!(witnesses.iter().all(|w| w.word == v(&[0, 1, 0, 0])));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn gamma_power_codes_have_constacyclic_duals() {
        let a = parse_algebra("Z(4);n=2;lambda=2").unwrap();
        let c = Code::gamma_power(&a, 1).unwrap();
        assert_eq!(is_dual_constacyclic(&c).unwrap(), DualVerdict::Yes(1));
        let report = dual(&c).unwrap();
        assert_eq!(report.dual, Code::gamma_power(&a, 1).unwrap().module().clone());
        assert_eq!(is_dual_constacyclic(&Code::zero(&a)).unwrap(), DualVerdict::Yes(2));
        assert_eq!(dual_min_distance_check(&Code::zero(&a)).unwrap(), 1);
        assert_eq!(dual_min_distance_check(&c).unwrap(), 1);
        assert_eq!(dual_min_distance_check(&Code::full(&a)), Err(Error::FullCode));
    }
}
