//! The working field: fractions of parameter polynomials over `Q(zeta)`.
//!
//! A [`FieldElem`] is a normalized numerator/denominator pair: the gcd is
//! removed and the denominator's leading coefficient under graded-lex is 1,
//! so equality is plain structural equality. Declared parameters are
//! algebraically independent transcendentals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cyclotomic::Cyclo;
use crate::mpoly::{self, MPoly};

/// Names for the declared parameters; used only for parsing and printing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldContext {
    params: Vec<String>,
}

impl FieldContext {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(params: I) -> Self {
        FieldContext {
            params: params.into_iter().map(Into::into).collect(),
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.params.get(index).map(String::as_str)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    ZeroInput,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::ZeroInput => write!(f, "zero input"),
        }
    }
}

impl core::error::Error for FieldError {}

/// An element of the field tower, kept in canonical normalized form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldElem {
    num: MPoly,
    den: MPoly,
}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

impl FieldElem {
    fn make(num: MPoly, den: MPoly) -> FieldElem {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return FieldElem {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        let g = mpoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den
            .leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = lead.inverse().expect("leading coefficient invertible");
        num = num.scale(&inv);
        den = den.scale(&inv);
        FieldElem { num, den }
    }

    pub fn zero() -> FieldElem {
        FieldElem {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> FieldElem {
        FieldElem {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_integer(n: i64) -> FieldElem {
        FieldElem::from_cyclo(Cyclo::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> FieldElem {
        FieldElem::from_cyclo(Cyclo::from_rational(r))
    }

    pub fn from_ratio(n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_cyclo(c: Cyclo) -> FieldElem {
        FieldElem {
            num: MPoly::constant(c),
            den: MPoly::one(),
        }
    }

    /// The `index`-th declared parameter as a field element.
    pub fn param(index: usize) -> FieldElem {
        FieldElem {
            num: MPoly::var(index),
            den: MPoly::one(),
        }
    }

    pub fn sqrt_minus_one() -> FieldElem {
        FieldElem::from_cyclo(Cyclo::sqrt_minus_one())
    }

    pub fn cube_root_of_unity() -> FieldElem {
        FieldElem::from_cyclo(Cyclo::cube_root_of_unity())
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The `Q(zeta)` value when the element involves no parameters.
    pub fn as_cyclo(&self) -> Option<Cyclo> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_cyclo().and_then(|c| c.as_rational().cloned())
    }

    pub fn inverse(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(FieldElem::make(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> FieldElem {
        if n < 0 {
            return self.inverse().expect("negative power of zero").pow(-n);
        }
        let mut acc = FieldElem::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a value for the parameter with the given index.
    pub fn eval_param(&self, index: usize, value: &FieldElem) -> FieldElem {
        let eval = |p: &MPoly| -> FieldElem {
            let mut acc = FieldElem::zero();
            for (mon, coeff) in p.terms() {
                let mut term = FieldElem::from_cyclo(coeff.clone());
                for (i, &e) in mon.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let factor = if i == index {
                        value.pow(e as i32)
                    } else {
                        FieldElem::param(i).pow(e as i32)
                    };
                    term = &term * &factor;
                }
                acc = &acc + &term;
            }
            acc
        };
        let num = eval(&self.num);
        let den = eval(&self.den);
        &num / &den
    }

    /// Coefficients of the powers of the parameter with index `index`, when
    /// the element is polynomial in that parameter (the denominator must not
    /// involve it).
    pub fn poly_coefficients_in(&self, index: usize) -> Option<Vec<FieldElem>> {
        let den_uses = self
            .den
            .terms()
            .any(|(m, _)| m.exponents().get(index).copied().unwrap_or(0) > 0);
        if den_uses {
            return None;
        }
        let max_pow = self
            .num
            .terms()
            .map(|(m, _)| m.exponents().get(index).copied().unwrap_or(0))
            .max()
            .unwrap_or(0) as usize;
        let mut buckets: Vec<MPoly> = alloc::vec![MPoly::zero(); max_pow + 1];
        for (mon, coeff) in self.num.terms() {
            let e = mon.exponents().get(index).copied().unwrap_or(0) as usize;
            let mut rest = mon.exponents().to_vec();
            if index < rest.len() {
                rest[index] = 0;
            }
            let stripped = MPoly::monomial(crate::mpoly::Mon::from_exponents(rest), coeff.clone());
            buckets[e] = buckets[e].add(&stripped);
        }
        Some(
            buckets
                .into_iter()
                .map(|num| {
                    let mut e = FieldElem {
                        num,
                        den: self.den.clone(),
                    };
                    if !e.num.is_zero() {
                        e = FieldElem::make(e.num, e.den);
                    } else {
                        e = FieldElem::zero();
                    }
                    e
                })
                .collect(),
        )
    }

    /// Square root within the field, when one exists.
    ///
    /// Only the cases needed by the closed-form square search are covered:
    /// rational values `r` whose square root lies in `Q(zeta)`, i.e. `r`,
    /// `-r`, `r/3` or `-r/3` a rational square (`Q(zeta)` contains `i` and
    /// `sqrt(3) = zeta - zeta^3 + ... `, spanning those square classes).
    pub fn sqrt(&self) -> Option<FieldElem> {
        use num_traits::Zero;
        let r = self.as_rational()?;
        if r.is_zero() {
            return Some(FieldElem::zero());
        }
        let sqrt3 = {
            // 2*cos(pi/6) = zeta + zeta^11 = zeta + conj; explicitly 2*zeta - zeta^3.
            let z = Cyclo::zeta();
            let z3 = Cyclo::sqrt_minus_one();
            &(&z + &z) - &z3
        };
        let candidates = [
            (r.clone(), Cyclo::one()),
            (-r.clone(), Cyclo::sqrt_minus_one()),
            (
                &r / BigRational::from_integer(BigInt::from(3)),
                sqrt3.clone(),
            ),
            (
                -(&r / BigRational::from_integer(BigInt::from(3))),
                &sqrt3 * &Cyclo::sqrt_minus_one(),
            ),
        ];
        for (value, unit) in candidates {
            if value.is_positive() {
                let (n, d) = (value.numer().sqrt(), value.denom().sqrt());
                if &n * &n == *value.numer() && &d * &d == *value.denom() {
                    let root = Cyclo::from_rational(BigRational::new(n, d));
                    return Some(FieldElem::from_cyclo(&root * &unit));
                }
            }
        }
        None
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::make(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        assert!(!rhs.is_zero(), "division by zero");
        FieldElem::make(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for FieldElem {
    /// Debug-oriented rendering with positional parameter names `p0, p1, ...`;
    /// use [`crate::literal::render`] for context-aware output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = FieldContext::new((0..8).map(|i| alloc::format!("p{i}")));
        write!(f, "{}", crate::literal::render(self, &ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_function_normalization() {
        let lam = FieldElem::param(0);
        // (lam^2 - 1) / (lam - 1) == lam + 1
        let num = &(&lam * &lam) - &FieldElem::one();
        let den = &lam - &FieldElem::one();
        let q = &num / &den;
        assert_eq!(q, &lam + &FieldElem::one());
    }

    #[test]
    fn equality_after_mixed_arithmetic() {
        let a = FieldElem::param(0);
        let b = FieldElem::param(1);
        // a/b + b/a == (a^2+b^2)/(ab)
        let lhs = &(&a / &b) + &(&b / &a);
        let rhs = &(&(&a * &a) + &(&b * &b)) / &(&a * &b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_of_zero_errors() {
        assert_eq!(
            FieldElem::zero().inverse().unwrap_err(),
            FieldError::DivisionByZero
        );
    }

    #[test]
    fn sqrt_cases() {
        let four = FieldElem::from_integer(4);
        assert_eq!(four.sqrt().unwrap(), FieldElem::from_integer(2));
        let m9 = FieldElem::from_integer(-9);
        let r = m9.sqrt().unwrap();
        assert_eq!(&r * &r, m9);
        let twelve = FieldElem::from_integer(12);
        let r = twelve.sqrt().unwrap();
        assert_eq!(&r * &r, twelve);
        let m3 = FieldElem::from_integer(-3);
        let r = m3.sqrt().unwrap();
        assert_eq!(&r * &r, m3);
        // 2 is not a square in Q(zeta_12)
        assert!(FieldElem::from_integer(2).sqrt().is_none());
        // parameters are transcendental: no square root
        assert!(FieldElem::param(0).sqrt().is_none());
    }
}
