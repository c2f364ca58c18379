//! Exact arithmetic over Q(sqrt(5)) in the basis {1, phi}, phi = (1+sqrt 5)/2.
//!
//! Every geometric quantity in this crate is a `GoldenNum`: a + b*phi with
//! arbitrary-precision rational coefficients. Multiplication reduces by the
//! minimal polynomial phi^2 = phi + 1. Sign, total order and floor are exact;
//! floating point is only ever used as a seed that is verified exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

const PHI_F64: f64 = 1.618033988749895;

/// Exact element a + b*phi of Q(phi).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    a: BigRational,
    b: BigRational,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse golden-number literal {0:?}")]
    Parse(String),
}

impl GoldenNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNum { a, b }
    }

    /// The rational part (coefficient of 1).
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// The coefficient of phi.
    pub fn phi_part(&self) -> &BigRational {
        &self.b
    }

    pub fn zero() -> Self {
        GoldenNum::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GoldenNum::new(BigRational::one(), BigRational::zero())
    }

    pub fn phi() -> Self {
        GoldenNum::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GoldenNum::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_bigint(n: BigInt) -> Self {
        GoldenNum::new(BigRational::from_integer(n), BigRational::zero())
    }

    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GoldenNum::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// a + b*phi with small integer coefficients.
    pub fn of(a: i64, b: i64) -> Self {
        GoldenNum::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate: a + b - b*phi (image of phi under sqrt(5) -> -sqrt(5)).
    pub fn conjugate(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm a^2 + a*b - b^2 = x * conj(x), a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real value a + b*phi.
    ///
    /// If the coefficients agree in sign the answer is immediate. Otherwise
    /// the sign is decided by comparing -a/b against phi through the minimal
    /// polynomial: for b != 0, sign(a + b*phi) = sign(b) * sign(-(a^2+ab-b^2))
    /// unless both coefficients already agree.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Mixed signs: a + b*phi > 0  <=>  sign(b)*(-(norm)) > 0.
        let n = self.norm();
        sb * -rat_sign(&n)
    }

    /// Greatest integer <= a + b*phi, exact. A double-precision estimate seeds
    /// the answer and is then corrected by exact sign tests.
    pub fn floor(&self) -> BigInt {
        let est = self.to_f64();
        let mut n = BigInt::from(est.floor() as i64);
        // Correct the seed: ensure n <= x < n+1 with exact comparisons.
        while (self - &GoldenNum::from_bigint(n.clone())).sign() < 0 {
            n -= 1;
        }
        loop {
            let next = &n + BigInt::one();
            if (self - &GoldenNum::from_bigint(next.clone())).sign() >= 0 {
                n = next;
            } else {
                break;
            }
        }
        n
    }

    pub fn floor_i64(&self) -> i64 {
        self.floor().to_i64().expect("floor out of i64 range")
    }

    pub fn ceil(&self) -> BigInt {
        -((-self).floor())
    }

    /// Fractional part x - floor(x), in [0,1).
    pub fn fract(&self) -> GoldenNum {
        self - &GoldenNum::from_bigint(self.floor())
    }

    /// Approximate double value (not used for any exact decision).
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * PHI_F64
    }

    pub fn checked_div(&self, rhs: &GoldenNum) -> Result<GoldenNum, NumError> {
        if rhs.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let num = self * &rhs.conjugate();
        let den = rhs.norm();
        Ok(GoldenNum::new(num.a / &den, num.b / &den))
    }

    pub fn abs(&self) -> GoldenNum {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: GoldenNum) -> GoldenNum {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: GoldenNum) -> GoldenNum {
        if self >= other {
            self
        } else {
            other
        }
    }
}

fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$x:ident, $y:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GoldenNum> for &'a GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: &'b GoldenNum) -> GoldenNum {
                let $x = self;
                let $y = rhs;
                $body
            }
        }
        impl $trait<GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: GoldenNum) -> GoldenNum {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b GoldenNum> for GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: &'b GoldenNum) -> GoldenNum {
                $trait::$method(&self, rhs)
            }
        }
        impl<'a> $trait<GoldenNum> for &'a GoldenNum {
            type Output = GoldenNum;
            fn $method(self, rhs: GoldenNum) -> GoldenNum {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |x, y| GoldenNum::new(&x.a + &y.a, &x.b + &y.b));
binop!(Sub, sub, |x, y| GoldenNum::new(&x.a - &y.a, &x.b - &y.b));
// (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
binop!(Mul, mul, |x, y| {
    let bb = &x.b * &y.b;
    GoldenNum::new(&x.a * &y.a + &bb, &x.a * &y.b + &x.b * &y.a + bb)
});
binop!(Div, div, |x, y| x
    .checked_div(y)
    .expect("division by zero GoldenNum"));

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        -&self
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for GoldenNum {
    /// Canonical literal syntax: "p/q", "r/s*phi", or "p/q + r/s*phi".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rat = |r: &BigRational| format!("{}/{}", r.numer(), r.denom());
        if self.b.is_zero() {
            write!(f, "{}", rat(&self.a))
        } else if self.a.is_zero() {
            write!(f, "{}*phi", rat(&self.b))
        } else {
            write!(f, "{} + {}*phi", rat(&self.a), rat(&self.b))
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNum({})", self)
    }
}

impl FromStr for GoldenNum {
    type Err = NumError;

    /// Parses literals such as "9/10", "-3/1 + 2/1*phi", "phi", "-phi",
    /// "1/2 - 3*phi", "2". Whitespace around '+'/'-' separators is required
    /// only when two terms are present.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NumError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        // Split into at most two terms on " + " / " - ".
        let (first, rest) = if let Some(i) = s.find(" + ") {
            (&s[..i], Some((1i32, &s[i + 3..])))
        } else if let Some(i) = s.find(" - ") {
            (&s[..i], Some((-1i32, &s[i + 3..])))
        } else {
            (s, None)
        };
        let mut out = parse_term(first).ok_or_else(err)?;
        if let Some((sg, t)) = rest {
            let term = parse_term(t).ok_or_else(err)?;
            out = if sg > 0 { out + term } else { out - term };
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Option<GoldenNum> {
    let t = t.trim();
    if t.is_empty() {
        return None;
    }
    if t == "phi" {
        return Some(GoldenNum::phi());
    }
    if t == "-phi" {
        return Some(-GoldenNum::phi());
    }
    let (coeff, is_phi) = match t.strip_suffix("*phi") {
        Some(c) => (c, true),
        None => (t, false),
    };
    let r = parse_rational(coeff)?;
    Some(if is_phi {
        GoldenNum::new(BigRational::zero(), r)
    } else {
        GoldenNum::new(r, BigRational::zero())
    })
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

/// A point of the plane with exact golden-number coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vec2 {
    pub x: GoldenNum,
    pub y: GoldenNum,
}

impl Vec2 {
    pub fn new(x: GoldenNum, y: GoldenNum) -> Self {
        Vec2 { x, y }
    }

    pub fn of(x: i64, y: i64) -> Self {
        Vec2::new(GoldenNum::from_int(x), GoldenNum::from_int(y))
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, s: &GoldenNum) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &Vec2) -> GoldenNum {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the cross product self x o.
    pub fn cross(&self, o: &Vec2) -> GoldenNum {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl FromStr for Vec2 {
    type Err = NumError;

    /// Parses "(x-literal, y-literal)".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NumError::Parse(s.to_string());
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let (xs, ys) = inner.split_once(',').ok_or_else(err)?;
        Ok(Vec2::new(xs.parse()?, ys.parse()?))
    }
}

/// Orientation of the triangle (o, a, b): sign of (a-o) x (b-o).
pub fn orient(o: &Vec2, a: &Vec2, b: &Vec2) -> i32 {
    a.sub(o).cross(&b.sub(o)).sign()
}
