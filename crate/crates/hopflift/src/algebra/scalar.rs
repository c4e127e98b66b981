//! The field ℚ(√2): numbers of the form `rat + irr·√2` with
//! arbitrary-precision rational components.
//!
//! This is the smallest field containing every coordinate that appears
//! in the lifted configurations (the 24-cell vertices have coordinates
//! ±√2/2, the phase offsets contribute further √2 factors), and it is
//! closed under all the operations the Hopf machinery needs, including
//! the square roots √(2(1+t)) for t ∈ {0, ±1}.
//!
//! Components are kept in lowest terms with positive denominators
//! (enforced by `BigRational`), so equality is plain componentwise
//! comparison and the sign of any element is exactly decidable.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element `rat + irr·√2` of ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rat: BigRational,
    irr: BigRational,
}

impl ExactScalar {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        ExactScalar { rat, irr }
    }

    /// Rational value `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        ExactScalar {
            rat: BigRational::new(BigInt::from(n), BigInt::from(d)),
            irr: BigRational::zero(),
        }
    }

    /// Value `(n/d)·√2`. Panics if `d == 0`.
    pub fn sqrt2_ratio(n: i64, d: i64) -> Self {
        ExactScalar {
            rat: BigRational::zero(),
            irr: BigRational::new(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        Self::sqrt2_ratio(1, 1)
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Exact integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.irr.is_zero() && self.rat.is_integer() {
            Some(self.rat.to_integer())
        } else {
            None
        }
    }

    /// Exact sign: -1, 0 or +1.
    ///
    /// For mixed-sign components `a + b√2` the sign is decided by
    /// comparing `a²` with `2b²`; equality cannot occur for nonzero
    /// rational `a, b` since √2 is irrational.
    pub fn signum(&self) -> i32 {
        let (a, b) = (&self.rat, &self.irr);
        let sa = rational_sign(a);
        let sb = rational_sign(b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // a and b√2 pull in opposite directions: |a| vs |b|√2.
                let a2 = a * a;
                let b2 = b * b;
                let two_b2 = &b2 + &b2;
                match a2.cmp(&two_b2) {
                    Ordering::Greater => s,
                    Ordering::Less => -s,
                    Ordering::Equal => unreachable!("a^2 = 2 b^2 has no nonzero rational solution"),
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Returns `None` for zero.
    ///
    /// `1/(a + b√2) = (a − b√2)/(a² − 2b²)`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a2 = &self.rat * &self.rat;
        let b2 = &self.irr * &self.irr;
        let norm = a2 - (&b2 + &b2);
        debug_assert!(!norm.is_zero());
        Some(ExactScalar {
            rat: &self.rat / &norm,
            irr: -&self.irr / &norm,
        })
    }

    /// Square.
    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact principal square root inside ℚ(√2), when one exists.
    ///
    /// Solves `(x + y√2)² = self` componentwise:
    /// `x² + 2y² = rat`, `2xy = irr`.
    pub fn sqrt(&self) -> Option<Self> {
        match self.signum() {
            0 => return Some(Self::zero()),
            s if s < 0 => return None,
            _ => {}
        }
        if self.irr.is_zero() {
            // Either a rational square or 2·(rational square).
            if let Some(x) = rational_sqrt(&self.rat) {
                return Some(ExactScalar {
                    rat: x,
                    irr: BigRational::zero(),
                });
            }
            let half = &self.rat / BigRational::from_integer(BigInt::from(2));
            if let Some(y) = rational_sqrt(&half) {
                return Some(ExactScalar {
                    rat: BigRational::zero(),
                    irr: y,
                });
            }
            return None;
        }
        // x = irr/(2y) leads to 4y⁴ − 2·rat·y² + irr² = 0, i.e.
        // y² = (rat ± √(rat² − 2·irr²)) / 4.
        let disc = &self.rat * &self.rat
            - BigRational::from_integer(BigInt::from(2)) * &self.irr * &self.irr;
        let d = rational_sqrt(&disc)?;
        let four = BigRational::from_integer(BigInt::from(4));
        for cand in [(&self.rat + &d) / &four, (&self.rat - &d) / &four] {
            if let Some(y) = rational_sqrt(&cand) {
                if y.is_zero() {
                    continue;
                }
                let x = &self.irr / (&y + &y);
                let root = ExactScalar { rat: x, irr: y };
                debug_assert_eq!(&root * &root, *self);
                if root.signum() >= 0 {
                    return Some(root);
                }
                return Some(-root);
            }
        }
        None
    }

    /// Nearest `f64` value `rat + irr·√2`.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rat) + rational_to_f64(&self.irr) * core::f64::consts::SQRT_2
    }

    /// Canonical text form: `"p/q"`, `"r/s√2"` or `"p/q+r/s√2"` with
    /// both components in lowest terms and denominators of 1 omitted
    /// (`"-1/2+3/4√2"`, `"1√2"`, `"0"`).
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.irr.is_zero() {
            write!(s, "{}", FmtRational(&self.rat)).unwrap();
        } else if self.rat.is_zero() {
            write!(s, "{}√2", FmtRational(&self.irr)).unwrap();
        } else if self.irr.is_negative() {
            let pos = -&self.irr;
            write!(s, "{}-{}√2", FmtRational(&self.rat), FmtRational(&pos)).unwrap();
        } else {
            write!(s, "{}+{}√2", FmtRational(&self.rat), FmtRational(&self.irr)).unwrap();
        }
        s
    }
}

fn rational_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64()
        .unwrap_or_else(|| q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN))
}

struct FmtRational<'a>(&'a BigRational);

impl fmt::Display for FmtRational<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Error produced when parsing the canonical text form fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseScalarError {
    pub input: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid ℚ(√2) literal: {:?}", self.input)
    }
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    /// Parses exactly the grammar emitted by [`ExactScalar::to_text`]:
    ///
    /// ```text
    /// scalar := term | term ('+'|'-') uterm
    /// term   := '-'? uterm
    /// uterm  := rat '√2' | rat
    /// rat    := digits ('/' digits)?
    /// ```
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError {
            input: String::from(s),
        };
        let mut p = Parser { rest: s };
        let first = p.term().ok_or_else(err)?;
        let value = match p.peek() {
            None => first,
            Some(sign @ ('+' | '-')) => {
                p.bump();
                let second = p.uterm().ok_or_else(err)?;
                // A two-term literal must be "rational ± irrational".
                if !first.irr.is_zero() || !second.rat.is_zero() || second.irr.is_zero() {
                    return Err(err());
                }
                if sign == '+' {
                    &first + &second
                } else {
                    &first - &second
                }
            }
            Some(_) => return Err(err()),
        };
        if p.peek().is_some() {
            return Err(err());
        }
        Ok(value)
    }
}

struct Parser<'a> {
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }

    fn bump(&mut self) {
        let mut it = self.rest.chars();
        it.next();
        self.rest = it.as_str();
    }

    fn term(&mut self) -> Option<ExactScalar> {
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let t = self.uterm()?;
        Some(if neg { -t } else { t })
    }

    fn uterm(&mut self) -> Option<ExactScalar> {
        let q = self.rational()?;
        if let Some(stripped) = self.rest.strip_prefix("√2") {
            self.rest = stripped;
            Some(ExactScalar {
                rat: BigRational::zero(),
                irr: q,
            })
        } else {
            Some(ExactScalar {
                rat: q,
                irr: BigRational::zero(),
            })
        }
    }

    fn rational(&mut self) -> Option<BigRational> {
        let numer = self.digits()?;
        let denom = if self.peek() == Some('/') {
            self.bump();
            let d = self.digits()?;
            if d.is_zero() {
                return None;
            }
            d
        } else {
            BigInt::one()
        };
        Some(BigRational::new(numer, denom))
    }

    fn digits(&mut self) -> Option<BigInt> {
        let end = self
            .rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map(|(i, _)| i)
            .unwrap_or(self.rest.len());
        if end == 0 {
            return None;
        }
        let (digits, rest) = self.rest.split_at(end);
        self.rest = rest;
        BigInt::from_str(digits).ok()
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            rat: -self.rat,
            irr: -self.irr,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            rat: -&self.rat,
            irr: -&self.irr,
        }
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // (a + b√2)(c + d√2) = ac + 2bd + (ad + bc)√2
        let bd = &self.irr * &rhs.irr;
        ExactScalar {
            rat: &self.rat * &rhs.rat + (&bd + &bd),
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl Div for &ExactScalar {
    type Output = ExactScalar;
    #[allow(clippy::suspicious_arithmetic_impl)] // division via the field inverse
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        let inv = rhs.inv().expect("division by zero in Q(sqrt 2)");
        self * &inv
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);
