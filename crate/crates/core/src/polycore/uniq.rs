//! Dense univariate polynomials over Q, used internally by the factorization
//! engine (Bezout bases, Hensel corrections).  Coefficient index = degree.


use num::{One, Zero};

use crate::exactnum::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct UniQ(pub Vec<Rational>);

impl UniQ {
    pub fn zero() -> Self {
        UniQ(Vec::new())
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniQ(c)
    }

    pub fn constant(q: Rational) -> Self {
        UniQ::from_coeffs(vec![q])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn lc(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> UniQ {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc();
        UniQ::from_coeffs(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, rhs: &UniQ) -> UniQ {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        UniQ::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UniQ) -> UniQ {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] -= c;
        }
        UniQ::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &UniQ) -> UniQ {
        if self.is_zero() || rhs.is_zero() {
            return UniQ::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniQ::from_coeffs(out)
    }

    /// Division with remainder by a nonzero divisor.
    pub fn divmod(&self, rhs: &UniQ) -> (UniQ, UniQ) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let dr = rhs.degree().unwrap();
        let mut rem = self.0.clone();
        if rem.len() < rhs.0.len() {
            return (UniQ::zero(), self.clone());
        }
        let mut quo = vec![Rational::zero(); rem.len() - dr];
        let lc = rhs.lc();
        for i in (dr..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            quo[i - dr] = q.clone();
            for (j, b) in rhs.0.iter().enumerate() {
                let delta = &q * b;
                rem[i - dr + j] -= delta;
            }
        }
        (UniQ::from_coeffs(quo), UniQ::from_coeffs(rem))
    }

    pub fn rem(&self, rhs: &UniQ) -> UniQ {
        self.divmod(rhs).1
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &UniQ) -> UniQ {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*rhs = g, g monic.
    pub fn xgcd(&self, rhs: &UniQ) -> (UniQ, UniQ, UniQ) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = UniQ::constant(Rational::one());
        let mut s1 = UniQ::zero();
        let mut t0 = UniQ::zero();
        let mut t1 = UniQ::constant(Rational::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lc();
        let scale = UniQ::constant(l.recip());
        (r0.monic(), s0.mul(&scale), t0.mul(&scale))
    }

    pub fn derivative(&self) -> UniQ {
        if self.0.len() <= 1 {
            return UniQ::zero();
        }
        UniQ::from_coeffs(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }
}
