//! Submodules of `R^n` over a chain ring in γ-echelon normal form, and kernels
//! of linear maps.
//!
//! Normal form: rows are sorted by γ-valuation `v` and then by pivot column.
//! Row `r` with valuation `v` is divisible by `γ^v`, has the entry exactly `γ^v`
//! at its pivot column, is zero at every earlier row's pivot column, and at a
//! later row's pivot column (valuation `w`) carries only γ-adic digits below
//! `w`. Pivots are chosen as the leftmost column among the entries of least
//! valuation, which makes the form unique for the submodule.

use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::ring::{ChainRing, Elem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisRow {
    pub pivot: usize,
    pub valuation: u32,
    pub entries: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<ChainRing>,
    n: usize,
    rows: Vec<BasisRow>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Submodule {}

pub(crate) fn axpy(ring: &ChainRing, target: &mut [Elem], coef: Elem, row: &[Elem]) {
    if coef.0 == 0 {
        return;
    }
    for (t, &r) in target.iter_mut().zip(row) {
        *t = ring.add(*t, ring.mul(coef, r));
    }
}

/// `a - (digits of a at positions >= w)`, returned as (low part, high part / γ^w).
fn split_digits(ring: &ChainRing, a: Elem, w: u32) -> Elem {
    let digits = ring.gamma_adic(a);
    let high: Vec<Elem> = digits.iter().skip(w as usize).copied().collect();
    ring.from_gamma_adic(&high)
}

impl Submodule {
    pub fn zero(ring: Arc<ChainRing>, n: usize) -> Self {
        Submodule { ring, n, rows: Vec::new() }
    }

    /// The R-span of `gens`, each of length `n`.
    pub fn from_generators(ring: Arc<ChainRing>, n: usize, gens: &[Vec<Elem>]) -> Result<Self> {
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: g.len() });
            }
            if let Some(bad) = g.iter().find(|a| !ring.contains(**a)) {
                return Err(Error::RingMismatch { code: bad.0 as u64, size: ring.size() as u64 });
            }
        }
        let e = ring.e();
        let mut work: Vec<Vec<Elem>> = gens.iter().filter(|g| g.iter().any(|a| a.0 != 0)).cloned().collect();
        let mut rows: Vec<BasisRow> = Vec::new();
        loop {
            // Least valuation over the working rows, then leftmost column, then first row.
            let mut best: Option<(u32, usize, usize)> = None;
            for (ri, row) in work.iter().enumerate() {
                for (c, &a) in row.iter().enumerate() {
                    if a.0 == 0 {
                        continue;
                    }
                    let v = ring.valuation(a);
                    let better = match best {
                        None => true,
                        Some((bv, bc, _)) => v < bv || (v == bv && c < bc),
                    };
                    if better {
                        best = Some((v, c, ri));
                    }
                }
            }
            let Some((v, c, ri)) = best else { break };
            debug_assert!(v < e);
            let mut prow = work.swap_remove(ri);
            let unit = ring.div_gamma_pow(prow[c], v);
            let inv = ring.inverse(unit).expect("quotient of a least-valuation entry by γ^v is a unit");
            for a in prow.iter_mut() {
                *a = ring.mul(*a, inv);
            }
            debug_assert_eq!(prow[c], ring.gamma_pow(v));
            for row in work.iter_mut() {
                if row[c].0 != 0 {
                    let coef = ring.neg(ring.div_gamma_pow(row[c], v));
                    axpy(&ring, row, coef, &prow);
                }
            }
            work.retain(|r| r.iter().any(|a| a.0 != 0));
            for earlier in rows.iter_mut() {
                let b = earlier.entries[c];
                if b.0 == 0 {
                    continue;
                }
                let high = split_digits(&ring, b, v);
                if high.0 != 0 {
                    axpy(&ring, &mut earlier.entries, ring.neg(high), &prow);
                }
            }
            rows.push(BasisRow { pivot: c, valuation: v, entries: prow });
        }
        Ok(Submodule { ring, n, rows })
    }

    pub fn ring(&self) -> &Arc<ChainRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rows(&self) -> &[BasisRow] {
        &self.rows
    }

    pub fn row_vectors(&self) -> Vec<Vec<Elem>> {
        self.rows.iter().map(|r| r.entries.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis; returns `None` as soon as a pivot entry
    /// is not divisible by the pivot's `γ^v`.
    fn reduce(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let ring = &self.ring;
        let mut w = v.to_vec();
        for row in &self.rows {
            let a = w[row.pivot];
            if a.0 == 0 {
                continue;
            }
            if ring.valuation(a) < row.valuation {
                return None;
            }
            let coef = ring.neg(ring.div_gamma_pow(a, row.valuation));
            axpy(ring, &mut w, coef, &row.entries);
        }
        Some(w)
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        Ok(self.reduce(v).map(|w| w.iter().all(|a| a.0 == 0)).unwrap_or(false))
    }

    pub fn contains_all(&self, other: &Submodule) -> bool {
        other.rows.iter().all(|r| self.contains(&r.entries).unwrap_or(false))
    }

    /// `log_q |M| = Σ (e - v_row)`.
    pub fn log_q_size(&self) -> u64 {
        let e = self.ring.e();
        self.rows.iter().map(|r| (e - r.valuation) as u64).sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.ring.q()).pow(self.log_q_size() as u32)
    }

    /// `dim Tor_i = #{rows with valuation <= i}` for `i = 0..e`.
    pub fn torsion_dims(&self) -> Vec<usize> {
        (0..self.ring.e()).map(|i| self.rows.iter().filter(|r| r.valuation <= i).count()).collect()
    }

    /// Residue vectors (codes in `R/γR`) spanning `Tor_i`.
    pub fn torsion_generators(&self, i: u32) -> Vec<Vec<Elem>> {
        let ring = &self.ring;
        self.rows
            .iter()
            .filter(|r| r.valuation <= i)
            .map(|r| {
                r.entries
                    .iter()
                    .map(|&a| {
                        if ring.valuation(a) > r.valuation {
                            Elem(0)
                        } else {
                            Elem(ring.residue(ring.div_gamma_pow(a, r.valuation)))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        let mut gens = self.row_vectors();
        gens.extend(other.row_vectors());
        Submodule::from_generators(self.ring.clone(), self.n, &gens)
    }

    /// Image under a coordinate map applied entrywise to every row.
    pub fn map_rows(&self, f: impl Fn(&[Elem]) -> Vec<Elem>) -> Vec<Vec<Elem>> {
        self.rows.iter().map(|r| f(&r.entries)).collect()
    }

    /// Number of elements, without building them.
    pub fn size_u128(&self) -> u128 {
        (self.ring.q() as u128).saturating_pow(self.log_q_size() as u32)
    }

    /// Every element exactly once, ordered by the row coefficients as a mixed-radix counter.
    pub fn elements(&self) -> Result<Elements<'_>> {
        check_cap(self.size_u128())?;
        let ring = &self.ring;
        let e = ring.e();
        let teich = ring.teichmuller_set();
        // Coefficients of row r range over Σ_{d < e - v} t_d γ^d.
        let choices: Vec<Vec<Elem>> = self
            .rows
            .iter()
            .map(|r| {
                let width = (e - r.valuation) as usize;
                let mut out = vec![ring.zero()];
                for d in 0..width {
                    let g = ring.gamma_pow(d as u32);
                    let mut next = Vec::with_capacity(out.len() * teich.len());
                    for &t in teich {
                        for &base in &out {
                            next.push(ring.add(base, ring.mul(t, g)));
                        }
                    }
                    out = next;
                }
                out
            })
            .collect();
        Ok(Elements { module: self, choices, counter: vec![0; self.rows.len()], done: false })
    }
}

pub struct Elements<'a> {
    module: &'a Submodule,
    choices: Vec<Vec<Elem>>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let ring = &self.module.ring;
        let mut v = vec![ring.zero(); self.module.n];
        for (r, row) in self.module.rows.iter().enumerate() {
            axpy(ring, &mut v, self.choices[r][self.counter[r]], &row.entries);
        }
        let mut k = 0;
        loop {
            if k == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[k] += 1;
            if self.counter[k] < self.choices[k].len() {
                break;
            }
            self.counter[k] = 0;
            k += 1;
        }
        Some(v)
    }
}

/// Generators of `{ y ∈ R^cols : A y = 0 }` for `A` given by rows.
///
/// Diagonalizes `A` by row and column operations, tracking the column
/// transform `Q`; the kernel is `Q · ker(D)` with `ker(D)` read off the
/// diagonal `γ^d` entries.
pub fn kernel(ring: &ChainRing, matrix: &[Vec<Elem>], cols: usize) -> Vec<Vec<Elem>> {
    let e = ring.e();
    let mut a: Vec<Vec<Elem>> = matrix.to_vec();
    let rows = a.len();
    // q[c] is column c of Q.
    let mut q: Vec<Vec<Elem>> =
        (0..cols).map(|c| (0..cols).map(|r| if r == c { ring.one() } else { ring.zero() }).collect()).collect();
    let mut diag = Vec::new();
    let mut r = 0;
    while r < rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, &x) in row.iter().enumerate().skip(r) {
                if x.0 == 0 {
                    continue;
                }
                let v = ring.valuation(x);
                if best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        a.swap(r, i);
        for row in a.iter_mut() {
            row.swap(r, j);
        }
        q.swap(r, j);
        let unit_inv = ring.inverse(ring.div_gamma_pow(a[r][r], v)).expect("least-valuation pivot");
        for row in a.iter_mut() {
            row[r] = ring.mul(row[r], unit_inv);
        }
        for x in q[r].iter_mut() {
            *x = ring.mul(*x, unit_inv);
        }
        let pivot_row = a[r].clone();
        for (i2, row) in a.iter_mut().enumerate() {
            if i2 != r && row[r].0 != 0 {
                let coef = ring.neg(ring.div_gamma_pow(row[r], v));
                axpy(ring, row, coef, &pivot_row);
            }
        }
        for j2 in 0..cols {
            if j2 == r || a[r][j2].0 == 0 {
                continue;
            }
            let coef = ring.neg(ring.div_gamma_pow(a[r][j2], v));
            for row in a.iter_mut() {
                let add = ring.mul(coef, row[r]);
                row[j2] = ring.add(row[j2], add);
            }
            let qr = q[r].clone();
            axpy(ring, &mut q[j2], coef, &qr);
        }
        diag.push(v);
        r += 1;
    }
    let mut gens = Vec::new();
    for (c, col) in q.iter().enumerate() {
        let scale = match diag.get(c) {
            Some(&0) => continue,
            Some(&d) => ring.gamma_pow(e - d),
            None => ring.one(),
        };
        gens.push(col.iter().map(|&x| ring.mul(x, scale)).collect());
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, ChainRingSpec};

    fn z(p: u32, e: u32) -> Arc<ChainRing> {
        make_ring(&ChainRingSpec::z(p, e)).unwrap()
    }

    fn v(xs: &[u32]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn z4_standard_form() {
        let r = z(2, 2);
        let m = Submodule::from_generators(r, 2, &[v(&[2, 1]), v(&[0, 2])]).unwrap();
        // (2,1) has a unit at column 1, so that is the first pivot.
        assert_eq!(m.rows()[0].pivot, 1);
        assert_eq!(m.rows()[0].valuation, 0);
        assert_eq!(m.log_q_size(), 2);
        assert!(m.contains(&v(&[2, 1])).unwrap());
        assert!(m.contains(&v(&[0, 2])).unwrap());
        assert!(!m.contains(&v(&[1, 0])).unwrap());
        assert_eq!(m.elements().unwrap().count(), 4);
    }

    #[test]
    fn form_does_not_depend_on_generator_order() {
        let r = z(2, 3);
        let gens = [v(&[2, 4, 6]), v(&[4, 1, 0]), v(&[6, 6, 2])];
        let a = Submodule::from_generators(r.clone(), 3, &gens).unwrap();
        let mut rev = gens.to_vec();
        rev.reverse();
        let b = Submodule::from_generators(r.clone(), 3, &rev).unwrap();
        assert_eq!(a, b);
        let c = Submodule::from_generators(r, 3, &a.row_vectors()).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn kernel_over_z4() {
        let r = z(2, 2);
        let gens = kernel(&r, &[v(&[1, 1]), v(&[0, 2])], 2);
        let k = Submodule::from_generators(r.clone(), 2, &gens).unwrap();
        // y0 + y1 = 0, 2 y1 = 0 → y1 ∈ {0, 2}, y0 = -y1
        let expected: Vec<Vec<Elem>> = vec![v(&[0, 0]), v(&[2, 2])];
        let mut got: Vec<_> = k.elements().unwrap().collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn zero_module() {
        let m = Submodule::zero(z(3, 2), 3);
        assert!(m.is_zero());
        assert_eq!(m.elements().unwrap().collect::<Vec<_>>(), vec![v(&[0, 0, 0])]);
        assert!(m.contains(&v(&[0, 0, 0])).unwrap());
        assert!(matches!(m.contains(&v(&[0])), Err(Error::LengthMismatch { .. })));
    }
}
