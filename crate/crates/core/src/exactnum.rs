//! Exact coefficient arithmetic over Q and quadratic extensions Q(sqrt(d)).
//!
//! Every coefficient in the toolkit is a [`Scalar`]: either an exact rational
//! or an element a + b*sqrt(d) of a real quadratic field with squarefree
//! radicand d >= 2.  A single computation never mixes two distinct radicands;
//! mixing is a data error surfaced through [`scalar_field_join`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// a + b*sqrt(d) with b != 0 and d squarefree, d >= 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(Rational),
    Surd(Surd),
}

/// Largest radicand accepted before arithmetic refuses to certify
/// squarefreeness by trial division.
const MAX_RADICAND: i64 = 100_000_000;
const TRIAL_LIMIT: i64 = 10_000;

/// Splits n > 0 as e^2 * k with k squarefree (by trial division).
fn squarefree_split(n: i64) -> Result<(i64, i64)> {
    if n <= 0 {
        return Err(Error::RadicandTooLarge(format!("{n}")));
    }
    if n > MAX_RADICAND {
        return Err(Error::RadicandTooLarge(format!("{n}")));
    }
    let mut e: i64 = 1;
    let mut k = n;
    let mut p: i64 = 2;
    while p * p <= k && p <= TRIAL_LIMIT {
        while k % (p * p) == 0 {
            k /= p * p;
            e *= p;
        }
        p += 1;
    }
    // remaining k may itself be a perfect square
    let r = (k as f64).sqrt().round() as i64;
    for cand in [r - 1, r, r + 1] {
        if cand > 1 && cand * cand == k {
            e *= cand;
            k = 1;
            break;
        }
    }
    Ok((e, k))
}

/// Normalizes a + b*sqrt(d) into a canonical `Scalar`.
///
/// Square factors of d are absorbed into b; the result is rational whenever
/// b = 0 or d in {0, 1}.  Negative d is rejected.
pub fn surd_normalize(a: Rational, b: Rational, d: i64) -> Result<Scalar> {
    if d < 0 {
        return Err(Error::NegativeRadicand(d));
    }
    if b.is_zero() || d == 0 {
        return Ok(Scalar::Rat(a));
    }
    if d == 1 {
        return Ok(Scalar::Rat(a + b));
    }
    let (e, k) = squarefree_split(d)?;
    let b = b * BigRational::from_integer(BigInt::from(e));
    if k == 1 {
        Ok(Scalar::Rat(a + b))
    } else {
        Ok(Scalar::Surd(Surd { a, b, d: k }))
    }
}

/// Exact square root of a rational, if it exists in Q or some Q(sqrt(d)).
///
/// Returns `None` only when squarefreeness of the radicand cannot be
/// certified within the trial-division budget.
pub fn try_sqrt_rational(q: &Rational) -> Option<Scalar> {
    if q.is_zero() {
        return Some(Scalar::Rat(Rational::zero()));
    }
    if q.is_negative() {
        return None;
    }
    // sqrt(n/m) = sqrt(n*m)/m
    let n = q.numer().clone() * q.denom().clone();
    let root = n.sqrt();
    if &root * &root == n {
        return Some(Scalar::Rat(BigRational::new(root, q.denom().clone())));
    }
    // write n = e^2 * k, k squarefree
    let n_i64: i64 = match i64::try_from(&n) {
        Ok(v) => v,
        Err(_) => {
            // extract small square factors, then require the remainder square
            return None;
        }
    };
    let (e, k) = squarefree_split(n_i64).ok()?;
    let b = BigRational::new(BigInt::from(e), q.denom().clone());
    Some(Scalar::Surd(Surd {
        a: Rational::zero(),
        b,
        d: k,
    }))
}

/// Exact square root of a scalar within its own field, when representable.
///
/// For rational input the result may introduce a new radicand; for surd
/// input a + b*sqrt(d) the result is reported only when it again lies in
/// Q(sqrt(d)).
pub fn try_sqrt(x: &Scalar) -> Option<Scalar> {
    match x {
        Scalar::Rat(q) => try_sqrt_rational(q),
        Scalar::Surd(s) => {
            // want (x + y sqrt(d))^2 = a + b sqrt(d):
            //   x^2 + y^2 d = a, 2xy = b  =>  x^2 = (a +- e)/2 with e^2 = a^2 - b^2 d
            let norm = s.a.clone() * s.a.clone()
                - s.b.clone() * s.b.clone() * BigRational::from_integer(BigInt::from(s.d));
            let e = match try_sqrt_rational(&norm) {
                Some(Scalar::Rat(e)) => e,
                _ => return None,
            };
            let two = rat_int(2);
            for sign in [1i64, -1] {
                let xx = (s.a.clone() + e.clone() * rat_int(sign)) / two.clone();
                if let Some(Scalar::Rat(x)) = try_sqrt_rational(&xx) {
                    if x.is_zero() {
                        continue;
                    }
                    let y = s.b.clone() / (two.clone() * x.clone());
                    let cand = Surd {
                        a: x,
                        b: y,
                        d: s.d,
                    };
                    let sq = Scalar::Surd(cand.clone()) * Scalar::Surd(cand.clone());
                    if sq == Scalar::Surd(s.clone()) {
                        return Some(Scalar::Surd(cand));
                    }
                }
            }
            None
        }
    }
}

/// The common field of two scalars: `None` for Q, `Some(d)` for Q(sqrt(d)).
pub fn scalar_field_join(x: &Scalar, y: &Scalar) -> Result<Option<i64>> {
    join_radicands(x.radicand(), y.radicand())
}

pub fn join_radicands(a: Option<i64>, b: Option<i64>) -> Result<Option<i64>> {
    match (a, b) {
        (None, r) | (r, None) => Ok(r),
        (Some(d1), Some(d2)) if d1 == d2 => Ok(Some(d1)),
        (Some(d1), Some(d2)) => Err(Error::IncompatibleRadicands(d1, d2)),
    }
}

impl Surd {
    fn normalized(self) -> Scalar {
        if self.b.is_zero() {
            Scalar::Rat(self.a)
        } else {
            Scalar::Surd(self)
        }
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_rat(n: i64, d: i64) -> Self {
        Scalar::Rat(rat(n, d))
    }

    pub fn sqrt_of(d: i64) -> Result<Self> {
        surd_normalize(Rational::zero(), Rational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Surd(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Surd(_) => None,
        }
    }

    /// Rational part (a) and surd part (b) viewed in a + b*sqrt(d).
    pub fn parts(&self) -> (Rational, Rational) {
        match self {
            Scalar::Rat(q) => (q.clone(), Rational::zero()),
            Scalar::Surd(s) => (s.a.clone(), s.b.clone()),
        }
    }

    pub fn radicand(&self) -> Option<i64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Surd(s) => Some(s.d),
        }
    }

    /// Galois conjugate a - b*sqrt(d); identity on rationals.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(q.clone()),
            Scalar::Surd(s) => Scalar::Surd(Surd {
                a: s.a.clone(),
                b: -s.b.clone(),
                d: s.d,
            }),
        }
    }

    /// Field norm a^2 - b^2 d (rational), nonzero for nonzero scalars.
    pub fn norm(&self) -> Rational {
        match self {
            Scalar::Rat(q) => q.clone() * q.clone(),
            Scalar::Surd(s) => {
                s.a.clone() * s.a.clone()
                    - s.b.clone() * s.b.clone() * BigRational::from_integer(BigInt::from(s.d))
            }
        }
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rat(q) => Ok(Scalar::Rat(q.recip())),
            Scalar::Surd(s) => {
                let n = self.norm();
                Ok(Surd {
                    a: s.a.clone() / n.clone(),
                    b: -s.b.clone() / n,
                    d: s.d,
                }
                .normalized())
            }
        }
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("scalar inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    /// Deterministic total order used for sorting points and roots.
    /// (Not the numeric order on R.)
    pub fn sort_key(&self) -> (Option<i64>, Rational, Rational) {
        let (a, b) = self.parts();
        (self.radicand(), a, b)
    }
}

fn raw_add(x: &Scalar, y: &Scalar) -> Scalar {
    match (x, y) {
        (Scalar::Rat(p), Scalar::Rat(q)) => Scalar::Rat(p.clone() + q.clone()),
        (Scalar::Rat(p), Scalar::Surd(s)) | (Scalar::Surd(s), Scalar::Rat(p)) => Scalar::Surd(Surd {
            a: s.a.clone() + p.clone(),
            b: s.b.clone(),
            d: s.d,
        }),
        (Scalar::Surd(s), Scalar::Surd(t)) => {
            assert_eq!(
                s.d, t.d,
                "scalar arithmetic across radicands sqrt({}) and sqrt({})",
                s.d, t.d
            );
            Surd {
                a: s.a.clone() + t.a.clone(),
                b: s.b.clone() + t.b.clone(),
                d: s.d,
            }
            .normalized()
        }
    }
}

fn raw_mul(x: &Scalar, y: &Scalar) -> Scalar {
    match (x, y) {
        (Scalar::Rat(p), Scalar::Rat(q)) => Scalar::Rat(p.clone() * q.clone()),
        (Scalar::Rat(p), Scalar::Surd(s)) | (Scalar::Surd(s), Scalar::Rat(p)) => {
            if p.is_zero() {
                Scalar::zero()
            } else {
                Scalar::Surd(Surd {
                    a: s.a.clone() * p.clone(),
                    b: s.b.clone() * p.clone(),
                    d: s.d,
                })
            }
        }
        (Scalar::Surd(s), Scalar::Surd(t)) => {
            assert_eq!(
                s.d, t.d,
                "scalar arithmetic across radicands sqrt({}) and sqrt({})",
                s.d, t.d
            );
            let d = BigRational::from_integer(BigInt::from(s.d));
            Surd {
                a: s.a.clone() * t.a.clone() + s.b.clone() * t.b.clone() * d,
                b: s.a.clone() * t.b.clone() + s.b.clone() * t.a.clone(),
                d: s.d,
            }
            .normalized()
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $impl:expr) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $impl(self, rhs)
            }
        }
    };
}

scalar_binop!(Add, add, raw_add);
scalar_binop!(Mul, mul, raw_mul);
scalar_binop!(Sub, sub, |x: &Scalar, y: &Scalar| raw_add(x, &(-y.clone())));
scalar_binop!(Div, div, |x: &Scalar, y: &Scalar| raw_mul(x, &y.inv()));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Surd(s) => Scalar::Surd(Surd {
                a: -s.a,
                b: -s.b,
                d: s.d,
            }),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{}", fmt_rational(q)),
            Scalar::Surd(s) => {
                let root = format!("sqrt({})", s.d);
                let bpart = if s.b.is_one() {
                    root
                } else if (-s.b.clone()).is_one() {
                    format!("-{root}")
                } else {
                    format!("{}*{root}", fmt_rational(&s.b))
                };
                if s.a.is_zero() {
                    write!(f, "{bpart}")
                } else if s.b.is_negative() {
                    let neg = -s.b.clone();
                    let bpart = if neg.is_one() {
                        format!("sqrt({})", s.d)
                    } else {
                        format!("{}*sqrt({})", fmt_rational(&neg), s.d)
                    };
                    write!(f, "{}-{bpart}", fmt_rational(&s.a))
                } else {
                    write!(f, "{}+{bpart}", fmt_rational(&s.a))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sqrt2() -> Scalar {
        Scalar::sqrt_of(2).unwrap()
    }

    #[test]
    fn normalize_absorbs_square_factors() {
        // 1 + 2*sqrt(8) = 1 + 4*sqrt(2)
        let s = surd_normalize(rat_int(1), rat_int(2), 8).unwrap();
        assert_eq!(
            s,
            Scalar::Rat(rat_int(1)) + Scalar::from_int(4) * sqrt2()
        );
        // b = 0 collapses to a rational
        assert_eq!(
            surd_normalize(rat_int(3), rat_int(0), 5).unwrap(),
            Scalar::from_int(3)
        );
        // 1/sqrt(2) as (0, 1/2, 2)
        let half_root2 = surd_normalize(rat_int(0), rat(1, 2), 2).unwrap();
        assert_eq!(half_root2, sqrt2().inv());
    }

    #[test]
    fn normalize_is_idempotent_and_squarefree() {
        for d in [2i64, 8, 12, 18, 45, 49, 50] {
            let s = surd_normalize(rat_int(1), rat_int(1), d).unwrap();
            if let Scalar::Surd(su) = &s {
                let (e, k) = squarefree_split(su.d).unwrap();
                assert_eq!(e, 1, "d={d} left square factor");
                assert_eq!(k, su.d);
                let again = surd_normalize(su.a.clone(), su.b.clone(), su.d).unwrap();
                assert_eq!(again, s);
            }
        }
    }

    #[test]
    fn negative_radicand_rejected() {
        assert_eq!(
            surd_normalize(rat_int(0), rat_int(1), -2),
            Err(Error::NegativeRadicand(-2))
        );
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            try_sqrt(&Scalar::from_rat(9, 4)),
            Some(Scalar::from_rat(3, 2))
        );
        assert_eq!(try_sqrt(&Scalar::from_int(2)), Some(sqrt2()));
        assert_eq!(
            try_sqrt(&Scalar::from_int(6)),
            Some(Scalar::sqrt_of(6).unwrap())
        );
        assert_eq!(try_sqrt(&Scalar::from_int(-1)), None);
        // sqrt(1/2) = (1/2) sqrt(2)
        assert_eq!(
            try_sqrt(&Scalar::from_rat(1, 2)),
            Some(Scalar::Rat(rat(1, 2)) * sqrt2())
        );
        // in-field: sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2)
        let x = Scalar::from_int(3) + Scalar::from_int(2) * sqrt2();
        assert_eq!(try_sqrt(&x), Some(Scalar::one() + sqrt2()));
        // out of field: sqrt(sqrt(2)) requires a degree-4 extension
        assert_eq!(try_sqrt(&sqrt2()), None);
    }

    #[test]
    fn sqrt_squares_back() {
        for n in 1..60i64 {
            let q = Scalar::from_int(n);
            if let Some(s) = try_sqrt(&q) {
                assert_eq!(s.clone() * s, q, "sqrt({n})^2 != {n}");
            }
        }
    }

    #[test]
    fn field_join() {
        let r2 = sqrt2();
        let r3 = Scalar::sqrt_of(3).unwrap();
        assert_eq!(scalar_field_join(&Scalar::from_rat(1, 2), &r2), Ok(Some(2)));
        assert_eq!(
            scalar_field_join(&Scalar::from_int(3), &Scalar::from_int(5)),
            Ok(None)
        );
        assert_eq!(
            scalar_field_join(&r2, &r3),
            Err(Error::IncompatibleRadicands(2, 3))
        );
    }

    fn random_scalar(rng: &mut StdRng, d: i64) -> Scalar {
        let a = rat(rng.random_range(-20..20), rng.random_range(1..6));
        let b = rat(rng.random_range(-20..20), rng.random_range(1..6));
        surd_normalize(a, b, d).unwrap()
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..200 {
            let d = [2, 3, 5, 6][rng.random_range(0..4usize)];
            let x = random_scalar(&mut rng, d);
            let y = random_scalar(&mut rng, d);
            let z = random_scalar(&mut rng, d);
            assert_eq!(
                (x.clone() + y.clone()) + z.clone(),
                x.clone() + (y.clone() + z.clone())
            );
            assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y.clone() + x.clone() * z.clone()
            );
            if !x.is_zero() {
                assert_eq!(x.clone() * x.inv(), Scalar::one());
            }
        }
    }

    #[test]
    fn display_roundtrip_shapes() {
        let cases = [
            Scalar::from_int(-3),
            Scalar::from_rat(7, 2),
            sqrt2(),
            Scalar::from_rat(1, 2) * sqrt2(),
            Scalar::one() + sqrt2(),
            Scalar::one() - Scalar::from_rat(1, 2) * sqrt2(),
        ];
        let expect = ["-3", "7/2", "sqrt(2)", "1/2*sqrt(2)", "1+sqrt(2)", "1-1/2*sqrt(2)"];
        for (c, e) in cases.iter().zip(expect) {
            assert_eq!(c.to_string(), e);
        }
    }
}
