//! The Haar functional of the quantum SL(2)/SU(2) family, computed exactly
//! from the spin tower, together with the F matrices, the orthogonality
//! relations, the modular automorphism, and positivity certificates.
//!
//! The matrix elements of the spin corepresentations up to a cutoff form a
//! linear basis of the span of monomials of bounded degree; the Haar
//! functional is the unique linear functional sending the trivial matrix
//! element to 1 and every other one to 0.  The change of basis to monomials
//! is computed once and inverted exactly over Q(q).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::corep::{mor_space, Corep, CorepError};
use crate::hopf::{HopfError, Presentation, QPoly};
use crate::linalg::Mat;
use crate::ncalg::{fmt_word, Word};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{QScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HaarError {
    #[error("element of degree {got} exceeds the cutoff (max degree {max}); rebuild the basis with spin cutoff >= {needed}/2")]
    CutoffTooSmall { got: usize, max: usize, needed: usize },
    #[error("matrix elements do not span the bounded-degree space (rank deficiency)")]
    RankDeficient,
    #[error("Schur solve returned a {0}-dimensional space, expected 1")]
    SchurDimension(usize),
    #[error(transparent)]
    Corep(#[from] CorepError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The Peter-Weyl data up to a spin cutoff: the spin corepresentations, the
/// monomial basis they span, and the Haar coefficients per monomial.
pub struct PWBasis {
    pres: Arc<Presentation>,
    /// 2 x (spin cutoff) = maximal monomial degree covered.
    max_degree: usize,
    coreps: Vec<Corep>,
    haar_table: BTreeMap<Word, QScalar>,
}

/// Build the Peter-Weyl basis with spin cutoff `two_l_max / 2`.
pub fn build_pw_basis(
    pres: &Arc<Presentation>,
    two_l_max: usize,
) -> Result<PWBasis, HaarError> {
    let coreps: Vec<Corep> = (0..=two_l_max)
        .map(|k| crate::spin::spin_corep(pres, k))
        .collect::<Result<_, _>>()?;
    let words = pres.rewrite().basis_words(two_l_max);
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let total: usize = coreps.iter().map(|v| v.dim() * v.dim()).sum();
    if total != words.len() {
        return Err(HaarError::RankDeficient);
    }
    // Row r of M = monomial coordinates of the r-th matrix element.
    let mut m = Mat::zeros(total, total);
    let mut row = 0;
    for v in &coreps {
        for e in v.entries() {
            for (w, c) in e.terms() {
                let col = *index.get(w).ok_or(HaarError::RankDeficient)?;
                *m.at_mut(row, col) = c.clone();
            }
            row += 1;
        }
    }
    // Solve M y = e_0: h(matrix element) = delta_{alpha,0}, and the single
    // alpha = 0 element sits in row 0.
    let mut rhs = vec![QScalar::zero(); total];
    rhs[0] = QScalar::one();
    let y = m.solve(&rhs).ok_or(HaarError::RankDeficient)?;
    let haar_table = words
        .into_iter()
        .zip(y.into_iter())
        .collect::<BTreeMap<_, _>>();
    Ok(PWBasis {
        pres: pres.clone(),
        max_degree: two_l_max,
        coreps,
        haar_table,
    })
}

impl PWBasis {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn corep(&self, two_alpha: usize) -> &Corep {
        &self.coreps[two_alpha]
    }

    /// The Haar functional, by linearity over the stored monomial table.
    pub fn haar(&self, x: &QPoly) -> Result<QScalar, HaarError> {
        let x = self.pres.reduce(x);
        let mut acc = QScalar::zero();
        for (w, c) in x.terms() {
            match self.haar_table.get(w) {
                Some(h) => acc = acc.add(&c.mul(h)),
                None => {
                    return Err(HaarError::CutoffTooSmall {
                        got: w.len(),
                        max: self.max_degree,
                        needed: w.len() + w.len() % 2,
                    })
                }
            }
        }
        Ok(acc)
    }
}

/// The F matrix of a spin corepresentation: the unique solution of
/// `F v = v^{cc} F` normalized so that `Tr F = Tr F^{-1}` and `F` is
/// positive at q in (0,1).
pub fn f_matrix(pres: &Arc<Presentation>, two_alpha: usize) -> Result<Mat<QScalar>, HaarError> {
    let v = crate::spin::spin_corep(pres, two_alpha)?;
    let vcc = v.contragredient()?.contragredient()?;
    let basis = mor_space(&v, &vcc)?;
    if basis.len() != 1 {
        return Err(HaarError::SchurDimension(basis.len()));
    }
    let f0 = &basis[0];
    let f0inv = f0.inverse().ok_or(HaarError::SchurDimension(0))?;
    // Scale F = c F0 with c^2 = Tr(F0^{-1}) / Tr(F0); then
    // Tr F = Tr F^{-1} automatically.
    let ratio = f0inv.trace().div(&f0.trace())?;
    let c = ratio.sqrt()?;
    let mut f = f0.scale(&c);
    // Positivity convention: Tr F > 0 at q = 1/2.
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if f.trace().evaluate_at(&half)?.is_negative() {
        f = f.neg();
    }
    Ok(f)
}

/// Verify the two orthogonality relations for spins `two_a/2`, `two_b/2`.
pub fn check_pw_relations(
    pw: &PWBasis,
    two_a: usize,
    two_b: usize,
) -> Result<CheckReport, HaarError> {
    let pres = pw.presentation();
    let mut rep = CheckReport::new(format!(
        "orthogonality relations for spins {two_a}/2 and {two_b}/2"
    ));
    let va = pw.corep(two_a);
    let vb = pw.corep(two_b);
    let fa = f_matrix(pres, two_a)?;
    let fa_inv = fa.inverse().expect("F invertible");
    let tr = fa.trace();
    let tr_inv = fa_inv.trace();
    let delta_ab = two_a == two_b;
    let mut first_ok = true;
    let mut second_ok = true;
    let mut witness1 = String::new();
    let mut witness2 = String::new();
    for m in 0..va.dim() {
        for n in 0..va.dim() {
            for j in 0..vb.dim() {
                for l in 0..vb.dim() {
                    let star_jl = pres.star(vb.entry(j, l))?;
                    // h(va_mn (vb_jl)*) = delta_ab delta_mj (F_a)_ln / Tr F_a
                    let lhs1 = pw.haar(&va.entry(m, n).mul(&star_jl))?;
                    let rhs1 = if delta_ab && m == j {
                        fa.at(l, n).div(&tr)?
                    } else {
                        QScalar::zero()
                    };
                    if lhs1 != rhs1 && first_ok {
                        first_ok = false;
                        witness1 = format!("indices m={m} n={n} j={j} l={l}");
                    }
                    // h((vb_jl)* va_mn) = delta_ab delta_ln (F_a^{-1})_mj / Tr F_a^{-1}
                    let lhs2 = pw.haar(&star_jl.mul(va.entry(m, n)))?;
                    let rhs2 = if delta_ab && l == n {
                        fa_inv.at(m, j).div(&tr_inv)?
                    } else {
                        QScalar::zero()
                    };
                    if lhs2 != rhs2 && second_ok {
                        second_ok = false;
                        witness2 = format!("indices m={m} n={n} j={j} l={l}");
                    }
                }
            }
        }
    }
    rep.push(CheckItem::from_bool(
        "h(v_mn v'_jl*) = delta delta_mj (F)_ln / Tr F",
        first_ok,
        witness1,
    ));
    rep.push(CheckItem::from_bool(
        "h(v'_jl* v_mn) = delta delta_ln (F^-1)_mj / Tr F^-1",
        second_ok,
        witness2,
    ));
    Ok(rep)
}

/// The modular automorphism `sigma(w_mn) = (F w F)_mn` extended as an
/// algebra homomorphism; it satisfies `h(ab) = h(b sigma(a))`.
pub fn modular_sigma(pres: &Arc<Presentation>, x: &QPoly) -> Result<QPoly, HaarError> {
    let f = f_matrix(pres, 1)?;
    let n = pres.n;
    // generator table sigma(w_mn) = sum_{k,l} F_mk w_kl F_ln
    let mut table = vec![QPoly::zero(); n * n];
    for m in 0..n {
        for nn in 0..n {
            let mut p = QPoly::zero();
            for k in 0..n {
                for l in 0..n {
                    let c = f.at(m, k).mul(f.at(l, nn));
                    if !c.is_zero() {
                        p = p.add(&pres.w(k, l).scale(&c));
                    }
                }
            }
            table[m * n + nn] = p;
        }
    }
    let mut out = QPoly::zero();
    for (w, c) in x.terms() {
        let mut acc = QPoly::scalar(c.clone());
        for &g in w {
            acc = acc.mul(&table[g as usize]);
        }
        out = out.add(&acc);
    }
    Ok(pres.reduce(&out))
}

/// Verify `h(ab) = h(b sigma(a))` on all basis-word pairs up to `degree`.
pub fn check_modular(pw: &PWBasis, degree: usize) -> Result<CheckReport, HaarError> {
    let pres = pw.presentation();
    let mut rep = CheckReport::new(format!(
        "modular property h(ab) = h(b sigma(a)) to degree {degree}"
    ));
    let words = pres.rewrite().basis_words(degree);
    let names = pres.names();
    let mut witness = None;
    'outer: for wa in &words {
        let a = QPoly::monomial(wa.clone(), QScalar::one());
        let sa = modular_sigma(pres, &a)?;
        for wb in &words {
            let b = QPoly::monomial(wb.clone(), QScalar::one());
            let lhs = pw.haar(&a.mul(&b))?;
            let rhs = pw.haar(&b.mul(&sa))?;
            if lhs != rhs {
                witness = Some(format!(
                    "a = {}, b = {}",
                    fmt_word(wa, &names),
                    fmt_word(wb, &names)
                ));
                break 'outer;
            }
        }
    }
    rep.push(CheckItem::from_bool(
        "h(ab) = h(b sigma(a)) on all pairs",
        witness.is_none(),
        witness.unwrap_or_default(),
    ));
    Ok(rep)
}

/// Verify two-sided invariance `(h (x) id) Delta x = (id (x) h) Delta x
/// = h(x) 1` on basis words up to `degree`, and `h(S(x)) = h(x)`.
pub fn check_invariance(pw: &PWBasis, degree: usize) -> Result<CheckReport, HaarError> {
    let pres = pw.presentation();
    let mut rep = CheckReport::new(format!("invariance of the Haar functional to degree {degree}"));
    let words = pres.rewrite().basis_words(degree);
    let names = pres.names();
    let mut inv_witness = None;
    let mut s_witness = None;
    for w in &words {
        let x = QPoly::monomial(w.clone(), QScalar::one());
        let hx = pw.haar(&x)?;
        let d = pres.delta(&x);
        let mut left = QPoly::zero();
        let mut right = QPoly::zero();
        for ((u, v), c) in d.terms() {
            let hu = pw.haar(&QPoly::monomial(u.clone(), QScalar::one()))?;
            left = left.add(&QPoly::monomial(v.clone(), c.mul(&hu)));
            let hv = pw.haar(&QPoly::monomial(v.clone(), QScalar::one()))?;
            right = right.add(&QPoly::monomial(u.clone(), c.mul(&hv)));
        }
        let target = QPoly::scalar(hx.clone());
        if (pres.reduce(&left) != target || pres.reduce(&right) != target)
            && inv_witness.is_none()
        {
            inv_witness = Some(fmt_word(w, &names));
        }
        if pw.haar(&pres.antipode(&x)?)? != hx && s_witness.is_none() {
            s_witness = Some(fmt_word(w, &names));
        }
    }
    rep.push(CheckItem::from_bool(
        "(h (x) id) Delta x = (id (x) h) Delta x = h(x) 1",
        inv_witness.is_none(),
        inv_witness.unwrap_or_default(),
    ));
    rep.push(CheckItem::from_bool(
        "h(S(x)) = h(x)",
        s_witness.is_none(),
        s_witness.unwrap_or_default(),
    ));
    Ok(rep)
}

/// Determinant of a rational matrix by exact Gaussian elimination.
fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= p.clone();
        for r in (col + 1)..n {
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Positive-definiteness certificate for the Gram matrix
/// `G_ij = h(x_i* x_j)` over monomials of degree <= `degree`, evaluated
/// exactly at `q0`: all leading principal minors must be positive.
pub fn gram_positivity(
    pw: &PWBasis,
    degree: usize,
    q0: &BigRational,
) -> Result<CheckReport, HaarError> {
    let pres = pw.presentation();
    let mut rep = CheckReport::new(format!(
        "Gram positivity to degree {degree} at q = {q0}"
    ));
    let words = pres.rewrite().basis_words(degree);
    let k = words.len();
    let mut g = vec![vec![BigRational::zero(); k]; k];
    for (i, wi) in words.iter().enumerate() {
        let xi_star = pres.star(&QPoly::monomial(wi.clone(), QScalar::one()))?;
        for (j, wj) in words.iter().enumerate() {
            let prod = xi_star.mul(&QPoly::monomial(wj.clone(), QScalar::one()));
            g[i][j] = pw.haar(&prod)?.evaluate_at(q0)?;
        }
    }
    let mut all_pos = true;
    let mut witness = String::new();
    for lead in 1..=k {
        let minor: Vec<Vec<BigRational>> = (0..lead)
            .map(|i| g[i][..lead].to_vec())
            .collect();
        let d = det_rational(minor);
        if !d.is_positive() {
            all_pos = false;
            witness = format!("leading {lead}x{lead} minor = {d}");
            break;
        }
    }
    rep.push(CheckItem::from_bool(
        format!("all {k} leading principal minors positive"),
        all_pos,
        witness,
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin, Builtin};

    fn suq2() -> Arc<Presentation> {
        Arc::new(builtin(Builtin::Suq2).unwrap())
    }

    fn one_plus_q2() -> QScalar {
        QScalar::one().add(&QScalar::q().mul(&QScalar::q()))
    }

    #[test]
    fn haar_basics() {
        let p = suq2();
        let pw = build_pw_basis(&p, 2).unwrap();
        assert_eq!(pw.haar(&QPoly::one()).unwrap(), QScalar::one());
        assert_eq!(pw.haar(&QPoly::gen(0)).unwrap(), QScalar::zero());
        // h(ad) = h(1 + q bc) = 1 + q h(bc); also h(bc) = -q/(1+q^2)
        let bc = QPoly::monomial(vec![1, 2], QScalar::one());
        assert_eq!(
            pw.haar(&bc).unwrap(),
            QScalar::q().neg().div(&one_plus_q2()).unwrap()
        );
    }

    #[test]
    fn haar_of_a_a_star() {
        let p = suq2();
        let pw = build_pw_basis(&p, 2).unwrap();
        let a = QPoly::gen(0);
        let prod = a.mul(&p.star(&a).unwrap());
        assert_eq!(
            pw.haar(&prod).unwrap(),
            QScalar::one().div(&one_plus_q2()).unwrap()
        );
    }

    #[test]
    fn cutoff_error() {
        let p = suq2();
        let pw = build_pw_basis(&p, 1).unwrap();
        let deg2 = QPoly::monomial(vec![1, 2], QScalar::one());
        assert!(matches!(
            pw.haar(&deg2),
            Err(HaarError::CutoffTooSmall { .. })
        ));
    }

    #[test]
    fn f_matrix_half() {
        let p = suq2();
        let f = f_matrix(&p, 1).unwrap();
        assert_eq!(f.at(0, 0), &QScalar::q_pow(-1));
        assert_eq!(f.at(1, 1), &QScalar::q());
        assert!(f.at(0, 1).is_zero() && f.at(1, 0).is_zero());
    }

    #[test]
    fn f_matrix_one_trace() {
        let p = suq2();
        let f = f_matrix(&p, 2).unwrap();
        let finv = f.inverse().unwrap();
        assert_eq!(f.trace(), finv.trace());
        let expect = QScalar::q_pow(-2).add(&QScalar::one()).add(&QScalar::q_pow(2));
        assert_eq!(f.trace(), expect);
    }

    #[test]
    fn modular_on_generators() {
        let p = suq2();
        let x = modular_sigma(&p, &QPoly::gen(0)).unwrap();
        assert_eq!(x, QPoly::gen(0).scale(&QScalar::q_pow(-2)));
        let b = modular_sigma(&p, &QPoly::gen(1)).unwrap();
        assert_eq!(b, QPoly::gen(1));
        let d = modular_sigma(&p, &QPoly::gen(3)).unwrap();
        assert_eq!(d, QPoly::gen(3).scale(&QScalar::q_pow(2)));
    }

    #[test]
    fn pw_relations_half_half() {
        let p = suq2();
        let pw = build_pw_basis(&p, 2).unwrap();
        let rep = check_pw_relations(&pw, 1, 1).unwrap();
        assert!(rep.all_pass(), "{rep}");
        let rep = check_pw_relations(&pw, 0, 1).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn gram_degree_one() {
        let p = suq2();
        let pw = build_pw_basis(&p, 2).unwrap();
        let q0 = BigRational::new(BigInt::one(), BigInt::from(2));
        let rep = gram_positivity(&pw, 1, &q0).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn invariance_degree_one() {
        let p = suq2();
        let pw = build_pw_basis(&p, 2).unwrap();
        let rep = check_invariance(&pw, 1).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }
}
