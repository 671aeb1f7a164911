//! Corepresentation calculus: construction and combination of
//! corepresentation matrices, and intertwiner-space computation.
//!
//! A corepresentation of a presented quantum group is a square matrix `v`
//! of algebra elements with `Delta(v_ab) = sum_c v_ac (x) v_cb` and
//! `eps(v_ab) = delta_ab`; both conditions are machine-checked at
//! construction.  Intertwiner spaces `Mor(v, w) = { A : A v = w A }` are
//! computed by exact linear algebra over Q(q) after normal-forming the
//! entrywise constraint `A v - w A`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::hopf::{HopfError, Presentation, QPoly};
use crate::linalg::Mat;
use crate::ncalg::{TensorPoly, Word};
use crate::scalar::QScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorepError {
    #[error("entry grid must be square, got {0} entries")]
    NotSquare(usize),
    #[error("coreps live over different presentations ('{0}' vs '{1}')")]
    PresentationMismatch(String, String),
    #[error("comultiplication condition fails at entry ({0},{1})")]
    DeltaCondition(usize, usize),
    #[error("counit condition fails at entry ({0},{1})")]
    CounitCondition(usize, usize),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A corepresentation matrix with verified structure conditions.
#[derive(Debug, Clone)]
pub struct Corep {
    pres: Arc<Presentation>,
    dim: usize,
    /// Row-major normal-form entries.
    entries: Vec<QPoly>,
}

impl Corep {
    /// Build and verify a corepresentation from row-major entries.
    pub fn new(pres: Arc<Presentation>, entries: Vec<QPoly>) -> Result<Self, CorepError> {
        let dim = (entries.len() as f64).sqrt() as usize;
        if dim * dim != entries.len() {
            return Err(CorepError::NotSquare(entries.len()));
        }
        let entries: Vec<QPoly> = entries.iter().map(|e| pres.reduce(e)).collect();
        let v = Corep { pres, dim, entries };
        v.check()?;
        Ok(v)
    }

    /// Verify the two corepresentation conditions entrywise.
    pub fn check(&self) -> Result<(), CorepError> {
        for a in 0..self.dim {
            for b in 0..self.dim {
                let lhs = self.pres.delta(self.entry(a, b));
                let mut rhs = TensorPoly::zero();
                for c in 0..self.dim {
                    rhs = rhs.add(&TensorPoly::of(self.entry(a, c), self.entry(c, b)));
                }
                let rhs = rhs.reduce_legs(self.pres.rewrite(), self.pres.rewrite());
                if !lhs.sub(&rhs).is_zero() {
                    return Err(CorepError::DeltaCondition(a, b));
                }
                let eps = self.pres.counit(self.entry(a, b));
                let want = if a == b { QScalar::one() } else { QScalar::zero() };
                if eps != want {
                    return Err(CorepError::CounitCondition(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &QPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[QPoly] {
        &self.entries
    }

    /// The fundamental corepresentation: the generator matrix `w` itself.
    pub fn fundamental(pres: &Arc<Presentation>) -> Result<Self, CorepError> {
        let n = pres.n;
        let entries = (0..n * n).map(|g| QPoly::gen(g as u8)).collect();
        Corep::new(pres.clone(), entries)
    }

    /// The trivial one-dimensional corepresentation.
    pub fn trivial(pres: &Arc<Presentation>) -> Result<Self, CorepError> {
        Corep::new(pres.clone(), vec![QPoly::one()])
    }

    fn same_pres(&self, other: &Corep) -> Result<(), CorepError> {
        if !Arc::ptr_eq(&self.pres, &other.pres) && self.pres.name != other.pres.name {
            return Err(CorepError::PresentationMismatch(
                self.pres.name.clone(),
                other.pres.name.clone(),
            ));
        }
        Ok(())
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Corep) -> Result<Self, CorepError> {
        self.same_pres(other)?;
        let d = self.dim + other.dim;
        let mut entries = vec![QPoly::zero(); d * d];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * d + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries[(self.dim + i) * d + (self.dim + j)] = other.entry(i, j).clone();
            }
        }
        Corep::new(self.pres.clone(), entries)
    }

    /// Tensor product: `(v (x) w)_{(i,j),(k,l)} = v_ik w_jl`.
    pub fn tensor_prod(&self, other: &Corep) -> Result<Self, CorepError> {
        self.same_pres(other)?;
        let d = self.dim * other.dim;
        let mut entries = vec![QPoly::zero(); d * d];
        for i in 0..self.dim {
            for j in 0..other.dim {
                for k in 0..self.dim {
                    for l in 0..other.dim {
                        entries[(i * other.dim + j) * d + (k * other.dim + l)] =
                            self.pres.reduce(&self.entry(i, k).mul(other.entry(j, l)));
                    }
                }
            }
        }
        Corep::new(self.pres.clone(), entries)
    }

    /// Contragredient corepresentation: entries `S(v_ji)`.
    pub fn contragredient(&self) -> Result<Self, CorepError> {
        let mut entries = vec![QPoly::zero(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * self.dim + j] = self.pres.antipode(self.entry(j, i))?;
            }
        }
        Corep::new(self.pres.clone(), entries)
    }

    /// Conjugate corepresentation: entries `(v_ij)*` (star structure needed).
    pub fn conjugate(&self) -> Result<Self, CorepError> {
        let mut entries = vec![QPoly::zero(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * self.dim + j] = self.pres.star(self.entry(i, j))?;
            }
        }
        Corep::new(self.pres.clone(), entries)
    }

    /// Apply a scalar change of basis: `T^{-1} v T` (T invertible).
    pub fn conjugate_basis(&self, t: &Mat<QScalar>) -> Result<Self, CorepError> {
        let tinv = t.inverse().expect("basis change must be invertible");
        let d = self.dim;
        let mut entries = vec![QPoly::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut p = QPoly::zero();
                for k in 0..d {
                    for l in 0..d {
                        let c = tinv.at(i, k).mul(t.at(l, j));
                        if !c.is_zero() {
                            p = p.add(&self.entry(k, l).scale(&c));
                        }
                    }
                }
                entries[i * d + j] = self.pres.reduce(&p);
            }
        }
        Corep::new(self.pres.clone(), entries)
    }

    /// The matrix `v * S(v)` reduced — identity for every corepresentation
    /// with invertible antipode (used as a sanity oracle).
    pub fn times_antipode(&self) -> Result<Vec<QPoly>, CorepError> {
        let s = self.contragredient()?;
        let d = self.dim;
        let mut out = vec![QPoly::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut p = QPoly::zero();
                for k in 0..d {
                    // S(v)_kj = (v^c)_{jk}
                    p = p.add(&self.entry(i, k).mul(s.entry(j, k)));
                }
                out[i * d + j] = self.pres.reduce(&p);
            }
        }
        Ok(out)
    }
}

/// A basis of `Mor(v, w) = { A : A v = w A }` as `dim(w) x dim(v)` scalar
/// matrices, computed by normal-forming the entrywise constraint and
/// extracting monomial coefficients into one exact linear system.
pub fn mor_space(v: &Corep, w: &Corep) -> Result<Vec<Mat<QScalar>>, CorepError> {
    v.same_pres(w)?;
    let pres = v.presentation();
    let m = w.dim();
    let n = v.dim();
    // Unknowns A_ik, index i*n + k.  Constraint (i,j):
    //   sum_k A_ik v_kj - sum_k w_ik A_kj = 0.
    // Each constraint is a linear combination of unknowns with NCPoly
    // coefficients; expand by monomials.
    struct Constraint {
        /// (unknown index, polynomial coefficient)
        terms: Vec<(usize, QPoly)>,
    }
    let mut constraints = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let mut terms: Vec<(usize, QPoly)> = Vec::new();
            for k in 0..n {
                terms.push((i * n + k, v.entry(k, j).clone()));
            }
            for k in 0..m {
                terms.push((k * n + j, pres.reduce(&w.entry(i, k).neg())));
            }
            constraints.push(Constraint { terms });
        }
    }
    // Collect the words appearing per constraint and build the big matrix.
    let unknowns = m * n;
    let mut rows: Vec<Vec<QScalar>> = Vec::new();
    for cons in &constraints {
        let mut words: BTreeSet<Word> = BTreeSet::new();
        for (_, p) in &cons.terms {
            for (wd, _) in p.terms() {
                words.insert(wd.clone());
            }
        }
        for word in words {
            let mut row = vec![QScalar::zero(); unknowns];
            for (u, p) in &cons.terms {
                let c = p.coeff(&word);
                if !c.is_zero() {
                    row[*u] = row[*u].add(&c);
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let nr = rows.len().max(1);
    let sys = Mat::from_fn(nr, unknowns, |i, j| {
        rows.get(i).map(|r| r[j].clone()).unwrap_or_else(QScalar::zero)
    });
    let basis = sys.nullspace();
    Ok(basis
        .into_iter()
        .map(|vec| Mat::from_fn(m, n, |i, k| vec[i * n + k].clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin, Builtin};

    fn slq2() -> Arc<Presentation> {
        Arc::new(builtin(Builtin::Slq2).unwrap())
    }

    #[test]
    fn fundamental_and_trivial_validate() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        assert_eq!(w.dim(), 2);
        let t = Corep::trivial(&p).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn combinations_validate() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let s = w.direct_sum(&w).unwrap();
        assert_eq!(s.dim(), 4);
        let t = w.tensor_prod(&w).unwrap();
        assert_eq!(t.dim(), 4);
        // (w (x) w)_{(0,0),(0,0)} = a * a
        assert_eq!(t.entry(0, 0), &QPoly::monomial(vec![0, 0], QScalar::one()));
        // trivial is a unit for the tensor product
        let one = Corep::trivial(&p).unwrap();
        let u = one.tensor_prod(&w).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(u.entry(i, j), w.entry(i, j));
            }
        }
    }

    #[test]
    fn contragredient_and_double_contragredient() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let wc = w.contragredient().unwrap();
        // w^c = ((d, -q c), (-q^{-1} b, a))
        assert_eq!(wc.entry(0, 0), &QPoly::gen(3));
        assert_eq!(
            wc.entry(0, 1),
            &QPoly::monomial(vec![2], QScalar::q().neg())
        );
        assert_eq!(
            wc.entry(1, 0),
            &QPoly::monomial(vec![1], QScalar::q_pow(-1).neg())
        );
        assert_eq!(wc.entry(1, 1), &QPoly::gen(0));
        // w^{cc} = F w F^{-1}, F = diag(q^{-1}, q)
        let wcc = wc.contragredient().unwrap();
        let f = [QScalar::q_pow(-1), QScalar::q()];
        for i in 0..2 {
            for j in 0..2 {
                let expect = w.entry(i, j).scale(&f[i].mul(&f[j].inv().unwrap()));
                assert_eq!(wcc.entry(i, j), &expect);
            }
        }
    }

    #[test]
    fn v_times_antipode_is_identity() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let prod = w.times_antipode().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { QPoly::one() } else { QPoly::zero() };
                assert_eq!(prod[i * 2 + j], want);
            }
        }
    }

    #[test]
    fn schur_for_fundamental() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let endo = mor_space(&w, &w).unwrap();
        assert_eq!(endo.len(), 1);
        // spanned by a scalar multiple of the identity
        let a = &endo[0];
        assert!(a.at(0, 1).is_zero() && a.at(1, 0).is_zero());
        assert_eq!(a.at(0, 0), a.at(1, 1));
    }

    #[test]
    fn mor_trivial_into_tensor_square_is_e() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let ww = w.tensor_prod(&w).unwrap();
        let one = Corep::trivial(&p).unwrap();
        let basis = mor_space(&one, &ww).unwrap();
        assert_eq!(basis.len(), 1);
        // spanned by E = (0, 1, -q, 0)^T up to scale
        let a = &basis[0];
        assert!(a.at(0, 0).is_zero() && a.at(3, 0).is_zero());
        assert_eq!(a.at(2, 0), &a.at(1, 0).mul(&QScalar::q().neg()));
    }

    #[test]
    fn mor_fundamental_into_tensor_square_is_zero() {
        let p = slq2();
        let w = Corep::fundamental(&p).unwrap();
        let ww = w.tensor_prod(&w).unwrap();
        assert_eq!(mor_space(&w, &ww).unwrap().len(), 0);
    }
}
