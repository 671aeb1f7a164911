//! Fraction-field tower: polynomials and rational functions in one extra
//! variable over an arbitrary coefficient [`Field`].
//!
//! The instantiation used in this crate is `Rat<QScalar>` = Q(q)(c), the
//! scalars for the symbolic one-parameter family of quantum spheres.  The
//! extra variable always prints as `c`.

use crate::scalar::{Field, Involution};
use std::fmt;

/// Dense polynomial in one variable over `F`, ascending powers, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    pub fn var() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            v.push(a.add(&b));
        }
        Poly::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Division with remainder over the field (divisor nonzero).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let mut q = vec![F::zero(); self.coeffs.len().saturating_sub(d.degree())];
        let dl_inv = d.leading().try_inv().expect("nonzero leading");
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let c = r.leading().mul(&dl_inv);
            q[shift] = q[shift].add(&c);
            r = r.sub(&d.mul(&Poly::new({
                let mut m = vec![F::zero(); shift];
                m.push(c);
                m
            })));
        }
        (Poly::new(q), r)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.leading().try_inv().expect("nonzero leading");
        a.scale(&inv)
    }

    pub fn conjugate(&self, inv: Involution) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.conjugate(inv)).collect())
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                if c.is_composite() {
                    write!(f, "({c})*")?;
                } else if !(c == &F::one()) {
                    write!(f, "{c}*")?;
                }
                if k == 1 {
                    write!(f, "c")?;
                } else {
                    write!(f, "c^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Rational function over `F` in canonical form: reduced fraction with monic
/// denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct Rat<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Rat<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Rat { num, den };
        r.canonicalize();
        r
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::constant(F::one());
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_zero() && g.degree() > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let inv = self.den.leading().try_inv().expect("nonzero");
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Rat::new(p, Poly::constant(F::one()))
    }

    pub fn constant(c: F) -> Self {
        Rat::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Rat::from_poly(Poly::var())
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    /// Substitute a constant for the tower variable; `None` on a pole.
    pub fn eval(&self, value: &F) -> Option<F> {
        let ev = |p: &Poly<F>| {
            let mut acc = F::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(value).add(c);
            }
            acc
        };
        let d = ev(&self.den);
        let dinv = d.try_inv()?;
        Some(ev(&self.num).mul(&dinv))
    }
}

impl<F: Field> fmt::Display for Rat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 && self.den.leading() == F::one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl<F: Field> Field for Rat<F> {
    fn zero() -> Self {
        Rat::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Rat::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Rat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        Rat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rat::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_i64(n: i64) -> Self {
        Rat::constant(F::from_i64(n))
    }
    fn conjugate(&self, inv: Involution) -> Self {
        Rat::new(self.num.conjugate(inv), self.den.conjugate(inv))
    }
    fn is_composite(&self) -> bool {
        self.num.term_count() > 1
            || self.den.degree() > 0
            || self.num.coeffs().iter().any(|c| c.is_composite())
    }
    fn print_as_negative(&self) -> bool {
        self.num
            .coeffs()
            .last()
            .map_or(false, |c| c.print_as_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QScalar;

    type C = Rat<QScalar>;

    #[test]
    fn tower_arithmetic() {
        let c = C::var();
        let q = C::constant(QScalar::q());
        // (c^2 - q^2)/(c - q) = c + q
        let num = c.mul(&c).sub(&q.mul(&q));
        let den = c.sub(&q);
        let r = num.mul(&den.try_inv().unwrap());
        assert_eq!(r, c.add(&q));
    }

    #[test]
    fn eval_specializes() {
        let c = C::var();
        let expr = c.mul(&c).add(&C::one()); // c^2 + 1
        let v = expr.eval(&QScalar::from_int(3)).unwrap();
        assert_eq!(v, QScalar::from_int(10));
    }
}
