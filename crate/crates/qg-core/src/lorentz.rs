//! Checker for the mixing matrix X that couples a quantum SL(2) group with
//! its conjugate copy.
//!
//! Given a 2x2 presentation with a star structure (so the conjugate matrix
//! `wbar` with entries `(w_ij)*` exists) and a candidate `X` in
//! `M_4(Q(q))`, the checker reports:
//!
//! - (iii) the intertwining relation `X (w (x) wbar) = (wbar (x) w) X`
//!   after reduction;
//! - (iv) invertibility of X;
//! - (v) existence of a nonzero scalar c with `tau conj(X) tau = c X`,
//!   where tau is the flip on C^2 (x) C^2;
//! - (vi) proportionality of the intertwiners `1_2 (x) E` and
//!   `(X (x) 1_2)(1_2 (x) X)(E (x) 1_2)`.

use crate::hopf::{HopfError, Presentation, QPoly};
use crate::linalg::Mat;
use crate::ncalg::fmt_poly;
use crate::report::{CheckItem, CheckReport};
use crate::scalar::QScalar;

/// The flip permutation matrix on C^2 (x) C^2.
pub fn tau() -> Mat<QScalar> {
    let mut t = Mat::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            *t.at_mut(i * 2 + j, j * 2 + i) = QScalar::one();
        }
    }
    t
}

/// Find a scalar `c` with `a = c * b`, if one exists (`b` nonzero).
fn proportionality(a: &Mat<QScalar>, b: &Mat<QScalar>) -> Option<QScalar> {
    let mut c: Option<QScalar> = None;
    for i in 0..a.rows {
        for j in 0..a.cols {
            let (x, y) = (a.at(i, j), b.at(i, j));
            match (&c, x.is_zero(), y.is_zero()) {
                (_, true, true) => {}
                (_, false, true) => return None,
                (None, _, false) => c = Some(x.div(y).ok()?),
                (Some(k), _, false) => {
                    if &x.div(y).ok()? != k {
                        return None;
                    }
                }
            }
        }
    }
    c.filter(|k| !k.is_zero())
}

/// Run the full X-matrix check against a starred 2x2 presentation.
pub fn check_lorentz_x(pres: &Presentation, x: &Mat<QScalar>) -> Result<CheckReport, HopfError> {
    assert_eq!(pres.n, 2, "the checker expects a 2x2 presentation");
    assert!(x.rows == 4 && x.cols == 4, "X must be 4x4");
    let involution = pres
        .star
        .as_ref()
        .map(|s| s.involution)
        .ok_or_else(|| HopfError::Star("a star structure is required to form wbar".into()))?;
    let mut rep = CheckReport::new(format!("mixing-matrix conditions over '{}'", pres.name));

    // wbar entries (w_ij)*.
    let mut wbar = vec![QPoly::zero(); 4];
    for i in 0..2 {
        for j in 0..2 {
            wbar[i * 2 + j] = pres.star(&pres.w(i, j))?;
        }
    }

    // (iii) X (w (x) wbar) = (wbar (x) w) X entrywise.
    let names = pres.names();
    let mut witness = None;
    'outer: for r in 0..4 {
        for s in 0..4 {
            let mut diff = QPoly::zero();
            for m in 0..4 {
                // (w (x) wbar)_{m,s} = w_{m1 s1} wbar_{m2 s2}
                if !x.at(r, m).is_zero() {
                    let t = pres.w(m / 2, s / 2).mul(&wbar[(m % 2) * 2 + (s % 2)]);
                    diff = diff.add(&t.scale(x.at(r, m)));
                }
                if !x.at(m, s).is_zero() {
                    let t = wbar[(r / 2) * 2 + (m / 2)].mul(&pres.w(r % 2, m % 2));
                    diff = diff.sub(&t.scale(x.at(m, s)));
                }
            }
            let diff = pres.reduce(&diff);
            if !diff.is_zero() {
                witness = Some(format!(
                    "entry ({r},{s}) leaves {}",
                    fmt_poly(&diff, &names, pres.order())
                ));
                break 'outer;
            }
        }
    }
    rep.push(CheckItem::from_bool(
        "(iii) X (w (x) wbar) = (wbar (x) w) X",
        witness.is_none(),
        witness.unwrap_or_default(),
    ));

    // (iv) invertibility.
    let invertible = x.inverse().is_some();
    rep.push(CheckItem::from_bool(
        "(iv) X is invertible",
        invertible,
        "det X = 0",
    ));

    // (v) tau conj(X) tau = c X.
    let t = tau();
    let xbar = Mat::from_fn(4, 4, |i, j| x.at(i, j).conjugate(involution));
    let lhs = t.mul(&xbar).mul(&t);
    match proportionality(&lhs, x) {
        Some(c) => rep.push(CheckItem::pass(format!(
            "(v) tau conj(X) tau = c X with c = {c}"
        ))),
        None => rep.push(CheckItem::fail(
            "(v) tau conj(X) tau = c X",
            "no nonzero scalar works",
        )),
    }

    // (vi) 1_2 (x) E proportional to (X (x) 1_2)(1_2 (x) X)(E (x) 1_2).
    let e_rel = pres
        .relations
        .iter()
        .find(|r| r.s == 0 && r.t == 2)
        .ok_or_else(|| HopfError::Antipode("no E relation with s=0, t=2".into()))?;
    let e = &e_rel.e; // 4 x 1
    let id2 = Mat::identity(2);
    let a = id2.kron(e); // 8 x 2
    let b = x.kron(&id2).mul(&id2.kron(x)).mul(&e.kron(&id2)); // 8 x 2
    match proportionality(&b, &a) {
        Some(c) => rep.push(CheckItem::pass(format!(
            "(vi) intertwiners proportional with factor {c}"
        ))),
        None => rep.push(CheckItem::fail(
            "(vi) 1_2 (x) E proportional to (X (x) 1_2)(1_2 (x) X)(E (x) 1_2)",
            "not proportional",
        )),
    }

    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin, Builtin};
    use num_rational::BigRational;

    fn suq2_at_one() -> Presentation {
        builtin(Builtin::Suq2)
            .unwrap()
            .specialize(&BigRational::from_integer(1.into()))
            .unwrap()
    }

    #[test]
    fn classical_flip_passes() {
        let p = suq2_at_one();
        let rep = check_lorentz_x(&p, &tau()).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn zero_fails_invertibility() {
        let p = suq2_at_one();
        let rep = check_lorentz_x(&p, &Mat::zeros(4, 4)).unwrap();
        assert!(!rep.all_pass());
        assert!(rep
            .items
            .iter()
            .any(|i| i.name.starts_with("(iv)") && !i.pass));
    }

    #[test]
    fn identity_fails_intertwining_at_symbolic_q() {
        let p = builtin(Builtin::Suq2).unwrap();
        let rep = check_lorentz_x(&p, &Mat::identity(4)).unwrap();
        let iii = rep.items.iter().find(|i| i.name.starts_with("(iii)")).unwrap();
        assert!(!iii.pass);
        assert!(iii.witness.is_some());
    }
}
