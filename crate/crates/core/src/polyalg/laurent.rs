use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients, stored densely from `min_exp` upward.
///
/// The coefficient vector never has zero entries at either end; the zero
/// polynomial has an empty vector and `min_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new<I, T>(min_exp: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            min_exp,
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(1, 0)
    }

    pub fn t() -> Self {
        Self::mono(1, 1)
    }

    pub fn mono<T: Into<BigInt>>(c: T, exp: i64) -> Self {
        Self::new(exp, [c.into()])
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::mono(c, 0)
    }

    /// `1 + t + ... + t^(n-1)`.
    pub fn geometric(n: usize) -> Self {
        Self::new(0, vec![BigInt::one(); n])
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.min_exp += lead as i64;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Largest exponent with a nonzero coefficient; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// `max_exp - min_exp`, zero for constants and for the zero polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.min_exp;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Iterator over `(exponent, coefficient)` for the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitution `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(max) => Self {
                min_exp: -max,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at an integer point. Negative exponents make the value
    /// rational in general.
    pub fn evaluate(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + BigRational::from_integer(c.clone());
        }
        if self.min_exp >= 0 {
            acc * x.pow(self.min_exp as i32)
        } else {
            acc / x.pow((-self.min_exp) as i32)
        }
    }

    /// Exact quotient `self / divisor` in `Z[t, t^{-1}]`, or `None` when the
    /// division does not come out even.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both have nonzero constant term after stripping the min exponent, so
        // the quotient is an honest polynomial and long division decides it.
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return None;
        }
        let lead = d.last().unwrap();
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] -= &qk * dj;
            }
            q[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.min_exp - divisor.min_exp, q))
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[(p.min_exp - lo) as usize + i] += c;
            }
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        write!(f, "{a}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(min, c.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(0, &[-1, 1]);
        let b = p(0, &[1, 1]);
        assert_eq!(&a * &b, p(0, &[-1, 0, 1]));
    }

    #[test]
    fn invert_variable() {
        let q = p(0, &[1, -1, 1]);
        assert_eq!(q.invert_variable(), p(-2, &[1, -1, 1]));
        assert_eq!(q.invert_variable().invert_variable(), q);
    }

    #[test]
    fn evaluate_at_minus_one() {
        let q = p(0, &[1, -1, 1]);
        assert_eq!(q.evaluate(-1), BigRational::from_integer(3.into()));
        assert_eq!(
            p(-1, &[1, 0, 1]).evaluate(2),
            BigRational::new(5.into(), 2.into())
        );
    }

    #[test]
    fn trims_and_zero() {
        let q = p(-3, &[0, 0, 2, 0]);
        assert_eq!(q.min_exp(), -1);
        assert_eq!(q.coeffs(), &[BigInt::from(2)]);
        assert!(p(4, &[0, 0]).is_zero());
        assert_eq!(&q - &q, LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let num = p(0, &[-1, 0, 0, -1]); // -t^3 - 1
        let q = num.div_exact(&LaurentPoly::geometric(2)).unwrap();
        assert_eq!(q, p(0, &[-1, 1, -1]));
        assert!(p(0, &[1, 0, 1]).div_exact(&p(0, &[1, 1])).is_none());
        assert!(p(0, &[1, 2]).div_exact(&p(0, &[2])).is_none());
        let shifted = p(-2, &[1, 1]).div_exact(&p(3, &[1])).unwrap();
        assert_eq!(shifted, p(-5, &[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(-2, &[1, -3]).to_string(), "-3t^-1 + t^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
