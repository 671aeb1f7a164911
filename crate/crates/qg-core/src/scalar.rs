//! Exact scalars: the rational function field Q(q).
//!
//! A [`QScalar`] is a reduced fraction of integer-coefficient polynomials in
//! the deformation parameter `q`.  Canonical form: numerator and denominator
//! are coprime in Z[q] (including content), the denominator's leading
//! coefficient is positive, and zero is represented as `0/1`.  Negative powers
//! of `q` are handled by letting powers of `q` live in the denominator, so the
//! field transparently contains the Laurent polynomials.
//!
//! Two coefficient involutions are supported: the identity (appropriate for
//! real `q`, e.g. SU_q(2)) and `q -> q^{-1}` (appropriate for `|q| = 1`, e.g.
//! SL_q(2,R)).  No other conjugations are rational over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient involution used by a *-structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Involution {
    /// Fixes `q` (real deformation parameter).
    Identity,
    /// Sends `q` to `q^{-1}` (modulus-one deformation parameter).
    QInverse,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("pole at q = {0}: denominator vanishes")]
    Pole(String),
    #[error("scalar is not a perfect square in Q(q)")]
    NotASquare,
}

/// Dense polynomial over Z in ascending powers of `q`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        ZPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplicity of the root q = 0 (lowest nonzero power).
    pub fn trailing_degree(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            v.push(a + b);
        }
        ZPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        ZPoly::new(v)
    }

    /// Multiply by `q^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        ZPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        g
    }

    /// Divide out the content; result has positive leading coefficient iff
    /// the input does.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        ZPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Coefficients reversed: `q^deg * p(1/q)`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        ZPoly::new(v)
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Pseudo-remainder of `self` by `d` (nonzero `d`).
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        let dd = d.degree();
        let lc = d.leading_coeff();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.leading_coeff();
            // r := lc * r - rl * q^shift * d  (kills the leading term)
            r = r.scale(&lc).sub(&d.shl(shift).scale(&rl));
        }
        r
    }

    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// True if there is exactly one nonzero coefficient.
    fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Gcd in Z[q] with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs_lead();
        }
        if other.is_zero() {
            return self.abs_lead();
        }
        // Monomial fast path: gcd(c q^a, p) = gcd(c, content(p)) q^min(a, val(p)).
        if self.is_monomial() || other.is_monomial() {
            let v = self.valuation().min(other.valuation());
            let c = num_integer::gcd(self.content(), other.content());
            return ZPoly::monomial(c, v);
        }
        let ca = self.content();
        let cb = other.content();
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        let g = a.primitive_part().abs_lead();
        g.scale(&num_integer::gcd(ca, cb))
    }

    fn abs_lead(&self) -> Self {
        if self.leading_coeff().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact division (panics if not exact; callers guarantee divisibility).
    pub fn div_exact(&self, d: &ZPoly) -> ZPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dd = d.degree();
        let dl = BigRational::from_integer(d.leading_coeff());
        let n = self.degree();
        assert!(n >= dd, "inexact polynomial division");
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for k in (0..=(n - dd)).rev() {
            let c = rem[k + dd].clone() / dl.clone();
            quot[k] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = rem[k + j].clone() - c.clone() * BigRational::from_integer(dc.clone());
                rem[k + j] = t;
            }
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division"
        );
        ZPoly::new(
            quot.into_iter()
                .map(|c| {
                    assert!(c.denom().is_one(), "inexact polynomial division");
                    c.numer().clone()
                })
                .collect(),
        )
    }

    /// Exact square root in Z[q], if one exists (positive leading coefficient).
    pub fn sqrt_exact(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.degree() % 2 != 0 {
            return None;
        }
        // Work over rationals from the top coefficient down.
        let n = self.degree() / 2;
        let lead = self.leading_coeff();
        let s = lead.sqrt();
        if &s * &s != lead {
            return None;
        }
        let mut root = vec![BigRational::zero(); n + 1];
        root[n] = BigRational::from_integer(s);
        for k in (0..n).rev() {
            // coefficient of q^{n+k} in root^2 must match self
            let mut acc = BigRational::zero();
            for j in (k + 1)..n {
                let other = n + k - j;
                if other > j {
                    continue;
                }
                if other == j {
                    acc += root[j].clone() * root[j].clone();
                } else {
                    acc += BigRational::from_integer(BigInt::from(2)) * root[j].clone()
                        * root[other].clone();
                }
            }
            let target = BigRational::from_integer(
                self.coeffs
                    .get(n + k)
                    .cloned()
                    .unwrap_or_else(BigInt::zero),
            );
            root[k] = (target - acc)
                / (BigRational::from_integer(BigInt::from(2)) * root[n].clone());
        }
        let cand = ZPoly::new(
            root.iter()
                .map(|c| {
                    if c.denom().is_one() {
                        Some(c.numer().clone())
                    } else {
                        None
                    }
                })
                .collect::<Option<Vec<_>>>()?,
        );
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Element of Q(q) in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QScalar {
    num: ZPoly,
    den: ZPoly,
}

impl QScalar {
    /// Build and canonicalize a fraction (panics on zero denominator).
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut s = QScalar { num, den };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = ZPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero() -> Self {
        QScalar {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: ZPoly::constant(BigInt::from(n)),
            den: ZPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QScalar::new(
            ZPoly::constant(r.numer().clone()),
            ZPoly::constant(r.denom().clone()),
        )
    }

    /// The generator `q`.
    pub fn q() -> Self {
        QScalar {
            num: ZPoly::monomial(BigInt::one(), 1),
            den: ZPoly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QScalar {
                num: ZPoly::monomial(BigInt::one(), k as usize),
                den: ZPoly::one(),
            }
        } else {
            QScalar {
                num: ZPoly::one(),
                den: ZPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        QScalar {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return QScalar::new(self.num.add(&other.num), self.den.clone());
        }
        QScalar::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        if self.den == other.den {
            return QScalar::new(self.num.sub(&other.num), self.den.clone());
        }
        QScalar::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        QScalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = QScalar::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Evaluate at a rational point; errors on a pole (no limits are taken,
    /// even if numerator and denominator share the root the canonical form
    /// has already cancelled it, so a vanishing denominator is a true pole).
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Apply a coefficient involution.
    pub fn conjugate(&self, inv: Involution) -> Self {
        match inv {
            Involution::Identity => self.clone(),
            Involution::QInverse => {
                if self.is_zero() {
                    return QScalar::zero();
                }
                let dn = self.num.degree();
                let dd = self.den.degree();
                let rn = self.num.reversed();
                let rd = self.den.reversed();
                // x(1/q) = q^{dd-dn} * rev(num) / rev(den)
                if dd >= dn {
                    QScalar::new(rn.shl(dd - dn), rd)
                } else {
                    QScalar::new(rn, rd.shl(dn - dd))
                }
            }
        }
    }

    /// Exact square root in Q(q) if one exists; sign chosen so the result is
    /// positive at q = 1/2 (or the first nonzero evaluation point tried).
    pub fn sqrt(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Ok(QScalar::zero());
        }
        let n = self.num.sqrt_exact().ok_or(ScalarError::NotASquare)?;
        let d = self.den.sqrt_exact().ok_or(ScalarError::NotASquare)?;
        let cand = QScalar::new(n, d);
        for denom in 2..100u32 {
            let q0 = BigRational::new(BigInt::one(), BigInt::from(denom));
            if let Ok(v) = cand.evaluate_at(&q0) {
                if v.is_zero() {
                    continue;
                }
                return Ok(if v.is_negative() { cand.neg() } else { cand });
            }
        }
        Ok(cand)
    }

    /// Sign of the leading numerator coefficient (denominator is positive).
    pub fn leading_sign_negative(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    /// True when the printed form needs parentheses inside a product.
    pub fn is_composite(&self) -> bool {
        self.num.term_count() > 1 || (!self.den.is_one() && self.den.term_count() > 1)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Pure q-power denominators print with negative exponents when the
        // numerator is a monomial: q^-1, -2q^-3, ...
        if self.den.term_count() == 1 && self.num.term_count() == 1 {
            let k = self.den.trailing_degree() as i64;
            let dc = self.den.leading_coeff();
            let j = self.num.trailing_degree() as i64;
            let nc = self.num.leading_coeff();
            if dc.is_one() {
                let e = j - k;
                let coeff = nc;
                if coeff.is_one() {
                    return write!(f, "q^{e}");
                } else if coeff == BigInt::from(-1) {
                    return write!(f, "-q^{e}");
                } else {
                    return write!(f, "{coeff}q^{e}");
                }
            }
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // Parenthesize any non-constant denominator: `1/2q` would re-parse
        // as `(1/2)*q` under left-associative implicit multiplication.
        if self.den.term_count() > 1 || self.den.degree() > 0 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// Coefficient-field abstraction so the noncommutative machinery can run over
/// Q(q) or over towers such as Q(q)(c) (used for the symbolic sphere family).
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn try_inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    /// Coefficient involution (acts on `q`; tower variables are fixed).
    fn conjugate(&self, inv: Involution) -> Self;
    /// True when the printed form needs parentheses inside a product.
    fn is_composite(&self) -> bool;
    /// Sign used to pretty-print sums ("a - b" instead of "a + -b").
    fn print_as_negative(&self) -> bool;
}

impl Field for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        QScalar::neg(self)
    }
    fn try_inv(&self) -> Option<Self> {
        QScalar::inv(self).ok()
    }
    fn from_i64(n: i64) -> Self {
        QScalar::from_int(n)
    }
    fn conjugate(&self, inv: Involution) -> Self {
        QScalar::conjugate(self, inv)
    }
    fn is_composite(&self) -> bool {
        QScalar::is_composite(self)
    }
    fn print_as_negative(&self) -> bool {
        self.leading_sign_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn canonical_rational_function() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let s = QScalar::new(zp(&[-1, 0, 1]), zp(&[-1, 1]));
        assert_eq!(s, QScalar::from_poly(zp(&[1, 1])));
    }

    #[test]
    fn laurent_cancellation() {
        // (1 - q^2)/(q - q^{-1}): build with field ops, expect -q
        let one = QScalar::one();
        let q = QScalar::q();
        let num = one.sub(&q.mul(&q));
        let den = q.sub(&q.inv().unwrap());
        let s = num.div(&den).unwrap();
        assert_eq!(s, QScalar::q().neg());
    }

    #[test]
    fn sign_normalization() {
        // 1/(-1 - q): denominator leading coefficient becomes positive
        let s = QScalar::new(zp(&[1]), zp(&[-1, -1]));
        assert_eq!(s.denominator(), &zp(&[1, 1]));
        assert_eq!(s.numerator(), &zp(&[-1]));
    }

    #[test]
    fn evaluate_and_pole() {
        let s = QScalar::new(zp(&[1]), zp(&[1, 0, 1])); // 1/(1+q^2)
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            s.evaluate_at(&half).unwrap(),
            BigRational::new(BigInt::from(4), BigInt::from(5))
        );
        // pole of 1/(q-1) at 1
        let p = QScalar::new(zp(&[1]), zp(&[-1, 1]));
        assert!(matches!(
            p.evaluate_at(&BigRational::one()),
            Err(ScalarError::Pole(_))
        ));
    }

    #[test]
    fn conjugate_q_inverse() {
        // conj((1-q^2)/(1+q^2)) = (q^2-1)/(q^2+1)
        let s = QScalar::new(zp(&[1, 0, -1]), zp(&[1, 0, 1]));
        let c = s.conjugate(Involution::QInverse);
        assert_eq!(c, QScalar::new(zp(&[-1, 0, 1]), zp(&[1, 0, 1])));
        // involutive
        assert_eq!(c.conjugate(Involution::QInverse), s);
        // q -> q^{-1}
        assert_eq!(
            QScalar::q().conjugate(Involution::QInverse),
            QScalar::q_pow(-1)
        );
    }

    #[test]
    fn sqrt_of_square() {
        let s = QScalar::new(zp(&[1, 2, 1]), zp(&[4])); // (1+q)^2/4
        let r = s.sqrt().unwrap();
        assert_eq!(r, QScalar::new(zp(&[1, 1]), zp(&[2])));
        assert!(QScalar::from_poly(zp(&[1, 1])).sqrt().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QScalar::new(zp(&[1]), zp(&[1, 0, 1])).to_string(), "1/(1+q^2)");
        assert_eq!(QScalar::q_pow(-1).to_string(), "q^-1");
        assert_eq!(QScalar::q_pow(2).neg().to_string(), "-q^2");
        assert_eq!(
            QScalar::new(zp(&[-1, 0, 1]), zp(&[1, 0, 1])).to_string(),
            "(-1+q^2)/(1+q^2)"
        );
    }
}
