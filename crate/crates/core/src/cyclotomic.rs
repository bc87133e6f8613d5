//! Arithmetic in the cyclotomic field `Q(zeta)` where `zeta` is a primitive
//! 12th root of unity with minimal polynomial `zeta^4 - zeta^2 + 1`.
//!
//! This field contains every scalar constant the engine needs: a square root
//! of -1 (`i = zeta^3`) and a primitive cube root of unity (`eps = zeta^4`).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Q(zeta)`, stored on the power basis `1, zeta, zeta^2, zeta^3`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Cyclo {
    coords: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclo {
    pub fn new(coords: [BigRational; 4]) -> Self {
        Cyclo { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = Self::zero();
        c.coords[0] = r;
        c
    }

    /// The generator `zeta` itself.
    pub fn zeta() -> Self {
        let mut c = Self::zero();
        c.coords[1] = BigRational::one();
        c
    }

    /// `i = zeta^3`, a square root of -1.
    pub fn sqrt_minus_one() -> Self {
        let mut c = Self::zero();
        c.coords[3] = BigRational::one();
        c
    }

    /// `eps = zeta^4 = zeta^2 - 1`, a primitive cube root of unity.
    pub fn cube_root_of_unity() -> Self {
        let mut c = Self::zero();
        c.coords[0] = -BigRational::one();
        c.coords[2] = BigRational::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational part if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.coords
    }

    /// Multiplication with reduction by `zeta^4 = zeta^2 - 1`.
    ///
    /// The convolution reaches degree 6; we use `zeta^4 = zeta^2 - 1`,
    /// `zeta^5 = zeta^3 - zeta` and `zeta^6 = -1`.
    fn mul_impl(&self, rhs: &Cyclo) -> Cyclo {
        let mut conv = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out = [
            conv[0].clone(),
            conv[1].clone(),
            conv[2].clone(),
            conv[3].clone(),
        ];
        // zeta^4 = zeta^2 - 1
        out[2] += &conv[4];
        out[0] -= &conv[4];
        // zeta^5 = zeta^3 - zeta
        out[3] += &conv[5];
        out[1] -= &conv[5];
        // zeta^6 = -1
        out[0] -= &conv[6];
        Cyclo { coords: out }
    }

    /// Multiplicative inverse, by solving the 4x4 linear system `self * x = 1`.
    pub fn inverse(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        // Column j of the multiplication matrix is self * zeta^j.
        let mut basis_images: Vec<Cyclo> = Vec::with_capacity(4);
        let mut pow = Cyclo::one();
        for _ in 0..4 {
            basis_images.push(self.mul_impl(&pow));
            pow = pow.mul_impl(&Cyclo::zeta());
        }
        // Gaussian elimination on the augmented 4x5 system.
        let mut m: Vec<[BigRational; 5]> = (0..4)
            .map(|r| {
                [
                    basis_images[0].coords[r].clone(),
                    basis_images[1].coords[r].clone(),
                    basis_images[2].coords[r].clone(),
                    basis_images[3].coords[r].clone(),
                    if r == 0 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    },
                ]
            })
            .collect();
        let mut row = 0;
        for col in 0..4 {
            let Some(p) = (row..4).find(|&r| !m[r][col].is_zero()) else {
                return None;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for k in col..5 {
                m[row][k] = &m[row][k] * &inv;
            }
            for r in 0..4 {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..5 {
                        m[r][k] = &m[r][k] - &f * &m[row][k];
                    }
                }
            }
            row += 1;
        }
        let mut coords = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for (r, c) in m.iter().enumerate() {
            coords[r] = c[4].clone();
        }
        Some(Cyclo { coords })
    }

    pub fn pow(&self, n: u32) -> Cyclo {
        let mut acc = Cyclo::one();
        for _ in 0..n {
            acc = acc.mul_impl(self);
        }
        acc
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let mut out = self.clone();
        for (a, b) in out.coords.iter_mut().zip(rhs.coords.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let mut out = self.clone();
        for (a, b) in out.coords.iter_mut().zip(rhs.coords.iter()) {
            *a -= b;
        }
        out
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.mul_impl(rhs)
    }
}

impl Div for &Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: &Cyclo) -> Cyclo {
        self.mul_impl(&rhs.inverse().expect("division by zero in Q(zeta)"))
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        let mut out = self.clone();
        for a in out.coords.iter_mut() {
            *a = -a.clone();
        }
        out
    }
}

fn rational_literal(r: &BigRational) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    /// Renders in the literal grammar, e.g. `1/2 + 3*zeta^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = rational_literal(&mag);
            match k {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        write!(f, "zeta")?;
                    } else {
                        write!(f, "zeta^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_minus_one_squares_to_minus_one() {
        let i = Cyclo::sqrt_minus_one();
        assert_eq!(&i * &i, Cyclo::from_integer(-1));
    }

    #[test]
    fn eps_is_primitive_cube_root() {
        let eps = Cyclo::cube_root_of_unity();
        assert!(!eps.is_one());
        assert!(eps.pow(3).is_one());
        // eps^2 + eps + 1 = 0
        let s = &(&eps.pow(2) + &eps) + &Cyclo::one();
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_has_order_twelve() {
        let z = Cyclo::zeta();
        assert!(z.pow(12).is_one());
        for k in 1..12 {
            assert!(!z.pow(k).is_one(), "zeta^{k} = 1");
        }
    }

    #[test]
    fn inverse_round_trip() {
        let x = &(&Cyclo::from_integer(3) * &Cyclo::zeta()) + &Cyclo::cube_root_of_unity();
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(Cyclo::zero().inverse().is_none());
    }
}
