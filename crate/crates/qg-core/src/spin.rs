//! The spin tower of corepresentations of the quantum SL(2) family and the
//! Clebsch-Gordan multiplicity check.
//!
//! The (2l+1)-dimensional corepresentation `v^l` is carved out of the
//! tensor power `w^{(x)2l}` by the totally q-symmetric subspace `K^l`:
//! with a basis matrix `A` of `K^l`, the entries solve
//! `w^{(x)2l} A = A v^l`.  For l = 1 a Gram-normalized basis is used whose
//! Gram matrix is `(1+q^2) Id`; in that basis `v^1` is exactly unitary over
//! Q(q), which the orthogonality relations of the Haar functional require.

use std::sync::Arc;

use crate::corep::{mor_space, Corep, CorepError};
use crate::hecke::sym_subspace;
use crate::hopf::{Presentation, QPoly};
use crate::linalg::Mat;
use crate::scalar::QScalar;

/// The word for the entry `(w^{(x)n})_{R,C}` with bit-multi-indices R, C.
fn tensor_word(n: usize, r: usize, c: usize) -> Vec<u8> {
    (0..n)
        .rev()
        .map(|bit| {
            let ri = (r >> bit) & 1;
            let ci = (c >> bit) & 1;
            (ri * 2 + ci) as u8
        })
        .collect()
}

/// The basis matrix of `K^{n/2}` used for the spin corepresentation.
pub fn spin_basis(n: usize) -> Mat<QScalar> {
    if n == 2 {
        // Gram-normalized basis { e00 + q e11, q e01 + e10, q e00 - e11 }:
        // its Gram matrix is (1+q^2) Id, making v^1 exactly unitary.
        let q = QScalar::q();
        let mut a = Mat::zeros(4, 3);
        *a.at_mut(0, 0) = QScalar::one();
        *a.at_mut(3, 0) = q.clone();
        *a.at_mut(1, 1) = q.clone();
        *a.at_mut(2, 1) = QScalar::one();
        *a.at_mut(0, 2) = q;
        *a.at_mut(3, 2) = QScalar::from_int(-1);
        a
    } else {
        sym_subspace(n)
    }
}

/// The spin-(two_l/2) corepresentation `v^{two_l/2}`.
pub fn spin_corep(pres: &Arc<Presentation>, two_l: usize) -> Result<Corep, CorepError> {
    assert_eq!(pres.n, 2, "the spin tower lives over a 2x2 presentation");
    if two_l == 0 {
        return Corep::trivial(pres);
    }
    if two_l == 1 {
        return Corep::fundamental(pres);
    }
    let n = two_l;
    let mut a = spin_basis(n);
    if let Some(q0) = &pres.q0 {
        a = Mat::from_fn(a.rows, a.cols, |i, j| {
            QScalar::from_rational(&a.at(i, j).evaluate_at(q0).expect("basis pole-free"))
        });
    }
    let aplus = a.left_inverse().expect("spin basis has full column rank");
    let dim = n + 1;
    let size = 1usize << n;
    // v_ij = sum_{R,C} A^+_{iR} (w^{(x)n})_{RC} A_{Cj}, reduced.
    let mut entries = vec![QPoly::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let mut p = QPoly::zero();
            for r in 0..size {
                let ci = aplus.at(i, r);
                if ci.is_zero() {
                    continue;
                }
                for c in 0..size {
                    let cj = a.at(c, j);
                    if cj.is_zero() {
                        continue;
                    }
                    p.add_term(tensor_word(n, r, c), ci.mul(cj));
                }
            }
            entries[i * dim + j] = pres.reduce(&p);
        }
    }
    // Invariance certificate: w^{(x)n} A = A v entrywise after reduction.
    for r in 0..size {
        for j in 0..dim {
            let mut lhs = QPoly::zero();
            for c in 0..size {
                let cj = a.at(c, j);
                if !cj.is_zero() {
                    lhs.add_term(tensor_word(n, r, c), cj.clone());
                }
            }
            let mut rhs = QPoly::zero();
            for i in 0..dim {
                rhs = rhs.add(&entries[i * dim + j].scale(a.at(r, i)));
            }
            assert!(
                pres.reduce(&lhs.sub(&rhs)).is_zero(),
                "K^{{{n}/2}} is not invariant at ({r},{j})"
            );
        }
    }
    Corep::new(pres.clone(), entries)
}

/// Clebsch-Gordan multiplicities: for each `c2` up to `a2 + b2`, the
/// dimension of `Mor(v^{c2/2}, v^{a2/2} (x) v^{b2/2})`.
pub fn clebsch_gordan_table(
    pres: &Arc<Presentation>,
    a2: usize,
    b2: usize,
) -> Result<Vec<(usize, usize)>, CorepError> {
    let va = spin_corep(pres, a2)?;
    let vb = spin_corep(pres, b2)?;
    let prod = va.tensor_prod(&vb)?;
    let mut table = Vec::new();
    for c2 in 0..=(a2 + b2) {
        let vc = spin_corep(pres, c2)?;
        let dim = mor_space(&vc, &prod)?.len();
        table.push((c2, dim));
    }
    Ok(table)
}

/// The predicted multiplicity: 1 iff `|a-b| <= c <= a+b` in integer steps.
pub fn predicted_multiplicity(a2: usize, b2: usize, c2: usize) -> usize {
    let lo = a2.abs_diff(b2);
    let hi = a2 + b2;
    if c2 >= lo && c2 <= hi && (c2 % 2 == hi % 2) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin, Builtin};
    use num_rational::BigRational;

    fn slq2() -> Arc<Presentation> {
        Arc::new(builtin(Builtin::Slq2).unwrap())
    }

    #[test]
    fn low_spins() {
        let p = slq2();
        assert_eq!(spin_corep(&p, 0).unwrap().dim(), 1);
        let v = spin_corep(&p, 1).unwrap();
        assert_eq!(v.entry(0, 0), &QPoly::gen(0));
        assert_eq!(spin_corep(&p, 2).unwrap().dim(), 3);
        assert_eq!(spin_corep(&p, 3).unwrap().dim(), 4);
    }

    #[test]
    fn spin_one_gram_and_unitary_shape() {
        // Gram matrix of the l=1 basis is (1+q^2) Id.
        let a = spin_basis(2);
        let gram = a.transpose().mul(&a);
        let scale = QScalar::one().add(&QScalar::q().mul(&QScalar::q()));
        assert_eq!(gram, Mat::identity(3).scale(&scale));
    }

    #[test]
    fn spin_one_irreducible() {
        let p = slq2();
        let v = spin_corep(&p, 2).unwrap();
        assert_eq!(mor_space(&v, &v).unwrap().len(), 1);
    }

    #[test]
    fn schur_across_spins() {
        let p = slq2();
        let v1 = spin_corep(&p, 1).unwrap();
        let v2 = spin_corep(&p, 2).unwrap();
        assert_eq!(mor_space(&v1, &v2).unwrap().len(), 0);
        assert_eq!(mor_space(&v2, &v1).unwrap().len(), 0);
    }

    #[test]
    fn clebsch_gordan_half_half() {
        let p = slq2();
        let table = clebsch_gordan_table(&p, 1, 1).unwrap();
        assert_eq!(table, vec![(0, 1), (1, 0), (2, 1)]);
    }

    #[test]
    fn spin_one_classical_limit() {
        // at q = 1 the construction still passes its corep checks (done in
        // spin_corep) and every entry has degree exactly 2 — the symmetric
        // square in a rotated basis.
        let p = Arc::new(
            builtin(Builtin::Slq2)
                .unwrap()
                .specialize(&BigRational::from_integer(1.into()))
                .unwrap(),
        );
        let v = spin_corep(&p, 2).unwrap();
        assert_eq!(v.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert!(v.entry(i, j).degree() <= 2);
            }
        }
    }
}
