use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Polynomial, Scalar, UniPoly, Var};
use crate::error::{Error, Result};

/// Element of Q(s): a reduced quotient of univariate polynomials in `var`
/// with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    var: Var,
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(var: Var, num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(var, num, den))
    }

    pub fn from_polynomials(var: &Var, num: &Polynomial, den: &Polynomial) -> Result<Self> {
        Self::new(
            var.clone(),
            UniPoly::from_polynomial(num, var)?,
            UniPoly::from_polynomial(den, var)?,
        )
    }

    pub fn polynomial(var: Var, p: UniPoly) -> Self {
        RationalFunction { var, num: p, den: UniPoly::one() }
    }

    pub fn constant(var: Var, c: Scalar) -> Self {
        Self::polynomial(var, UniPoly::constant(c))
    }

    fn reduced(var: Var, num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { var, num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd nonzero");
        let l = den.lead().expect("nonzero").recip();
        RationalFunction { var, num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.var.clone(), self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<RationalFunction> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let n = k.unsigned_abs();
        Ok(Self::reduced(self.var.clone(), base.num.pow(n), base.den.pow(n)))
    }

    fn same_var(&self, other: &RationalFunction) {
        assert_eq!(self.var, other.var, "rational functions in different variables");
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.same_var(rhs);
        RationalFunction::reduced(
            self.var.clone(),
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { var: self.var.clone(), num: self.num.neg(), den: self.den.clone() }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.same_var(rhs);
        RationalFunction::reduced(self.var.clone(), self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_polynomial(&self.var);
        if self.den.is_constant() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den.to_polynomial(&self.var))
        }
    }
}
