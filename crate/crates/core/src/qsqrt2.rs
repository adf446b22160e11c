//! The coefficient ring: arbitrary-precision rationals extended by `sqrt(2)`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational. `BigRational` keeps the invariant
/// gcd(|num|, den) = 1 with den > 0.
pub type Rat = BigRational;

/// An element `a + b*sqrt(2)` of the quadratic extension `Q(sqrt 2)`.
///
/// Equality is componentwise equality of reduced rationals, so values are
/// canonical by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QSqrt2 {
    pub a: Rat,
    pub b: Rat,
}

impl QSqrt2 {
    pub fn new(a: Rat, b: Rat) -> Self {
        QSqrt2 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt2 {
            a: Rat::zero(),
            b: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        QSqrt2 {
            a: Rat::one(),
            b: Rat::zero(),
        }
    }

    /// `sqrt(2)` itself.
    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: Rat::zero(),
            b: Rat::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt2 {
            a: Rat::from_integer(BigInt::from(n)),
            b: Rat::zero(),
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        QSqrt2 { a, b: Rat::zero() }
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        QSqrt2 {
            a: Rat::new(BigInt::from(num), BigInt::from(den)),
            b: Rat::zero(),
        }
    }

    /// `2^k` for any integer `k` (negative exponents allowed).
    pub fn pow2(k: i64) -> Self {
        let two = Rat::from_integer(BigInt::from(2));
        let mut r = Rat::one();
        for _ in 0..k.unsigned_abs() {
            r *= &two;
        }
        if k < 0 {
            r = r.recip();
        }
        QSqrt2::from_rat(r)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the value lies in `Q` (no `sqrt(2)` component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// Field inverse via the conjugate: `(a + b√2)^{-1} = (a - b√2)/(a² - 2b²)`.
    ///
    /// Panics on zero; the norm `a² - 2b²` vanishes only at zero since
    /// `sqrt(2)` is irrational.
    pub fn invert(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(sqrt 2)");
        let two = Rat::from_integer(BigInt::from(2));
        let norm = &self.a * &self.a - two * &self.b * &self.b;
        QSqrt2 {
            a: &self.a / &norm,
            b: -&self.b / &norm,
        }
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<'a> Add<&'a QSqrt2> for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &'a QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: self.a + &rhs.a,
            b: self.b + &rhs.b,
        }
    }
}

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &QSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl SubAssign<&QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, rhs: &QSqrt2) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: QSqrt2) -> QSqrt2 {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b QSqrt2> for &'a QSqrt2 {
    type Output = QSqrt2;
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    fn mul(self, rhs: &'b QSqrt2) -> QSqrt2 {
        let two = Rat::from_integer(BigInt::from(2));
        QSqrt2 {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl MulAssign<&QSqrt2> for QSqrt2 {
    fn mul_assign(&mut self, rhs: &QSqrt2) {
        *self = &*self * rhs;
    }
}

fn fmt_rat(r: &Rat) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt2", fmt_rat(&self.b));
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt2", fmt_rat(&self.a), fmt_rat(&(-&self.b)))
        } else {
            write!(f, "{}+{}*sqrt2", fmt_rat(&self.a), fmt_rat(&self.b))
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
