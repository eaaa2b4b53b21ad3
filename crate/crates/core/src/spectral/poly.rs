use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Largest matrix order accepted by [`char_poly`].
pub const MAX_CHAR_POLY_N: usize = 64;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x − a`.
    pub fn x_minus(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated coefficients in ascending degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{self}]")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Characteristic polynomial `det(xI − M)` by the Faddeev–LeVerrier recurrence
/// in exact integer arithmetic:
/// `M₀ = 0`, `c_n = 1`, `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.n();
    if n > MAX_CHAR_POLY_N {
        return Err(Error::TooLarge {
            what: "characteristic polynomial",
            n,
            max: MAX_CHAR_POLY_N,
        });
    }
    let a: Vec<BigInt> = (0..n * n).map(|k| BigInt::from(m.get(k / n, k % n))).collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        let mut next = mat_mul(&a, &mk, n);
        for i in 0..n {
            next[i * n + i] += &c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(&a, &mk, n);
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        c[n - k] = -(trace / BigInt::from(k));
    }
    Ok(IntPolynomial::new(c))
}

fn mat_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = &b[k * n + j];
                if !bkj.is_zero() {
                    out[i * n + j] += aik * bkj;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `det(tI − M)` for integer `t` by fraction-free Bareiss elimination.
    fn det_shifted(m: &IntMatrix, t: i64) -> BigInt {
        let n = m.n();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(if i == j { t } else { 0 } - m.get(i, j)))
                    .collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    #[test]
    fn cycle_polynomial() {
        let q = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(char_poly(&q).unwrap(), IntPolynomial::from_i64(&[-2, 3, -3, 1]));
        let expected = &IntPolynomial::x_minus(1).pow(3) - &IntPolynomial::constant(1);
        assert_eq!(char_poly(&q).unwrap(), expected);
    }

    #[test]
    fn agrees_with_bareiss_determinants() {
        let mut state = 0x853c49e6748fea9bu64;
        for n in 1..=7 {
            for _ in 0..10 {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                state ^= state << 13;
                                state ^= state >> 7;
                                state ^= state << 17;
                                (state % 4) as i64
                            })
                            .collect()
                    })
                    .collect();
                let m = IntMatrix::from_rows(&rows).unwrap();
                let p = char_poly(&m).unwrap();
                assert_eq!(p.degree(), Some(n));
                assert_eq!(p.leading(), Some(&BigInt::one()));
                for t in -3..=n as i64 + 2 {
                    assert_eq!(p.eval_int(&BigInt::from(t)), det_shifted(&m, t), "{rows:?} at {t}");
                }
            }
        }
    }

    #[test]
    fn arithmetic_and_display() {
        let p = IntPolynomial::from_i64(&[1, 2]);
        let q = IntPolynomial::from_i64(&[-1, 0, 3]);
        assert_eq!((&p * &q).to_string(), "-1 -2 3 6");
        assert_eq!((&p - &p), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(q.derivative(), IntPolynomial::from_i64(&[0, 6]));
        assert_eq!(p.pow(2), IntPolynomial::from_i64(&[1, 4, 4]));
        assert!((q.eval_f64(2.0) - 11.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_oversized_matrices() {
        let rows = vec![vec![0i64; 65]; 65];
        let m = IntMatrix::from_rows(&rows).unwrap();
        assert!(matches!(char_poly(&m), Err(Error::TooLarge { .. })));
    }
}
