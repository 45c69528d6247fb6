//! Sparse exact multivariate and Laurent polynomial kernel.
//!
//! One representation serves both polynomial and Laurent polynomial values:
//! exponents are signed, and operations that require honest polynomials
//! (gcd, resultants, factorization, bihomogenization) check for negative
//! exponents up front.  Coefficients are [`Scalar`]s; the canonical term
//! order is graded lexicographic on the declared variable order.

mod biform;
mod factor;
mod gcd;
mod parse;
mod resultant;
mod uniq;
mod zfactor;

pub use biform::{BiForm, BiGroups};
pub use factor::{
    factor_affine_over_q, factor_biform, univariate_factor, FactorConfig, Factorization,
    SplitStatus,
};
pub use gcd::gcd_multivariate;
pub use parse::parse_poly;
pub use resultant::resultant;


use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

/// Ordered set of variable names shared by the polynomials of a computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable name {n:?} in varset"
            );
        }
        VarSet(Arc::new(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Box<[i32]>);

impl Monomial {
    pub fn ones(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total().cmp(&other.total()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse exact polynomial (or Laurent polynomial when exponents go negative).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Scalar) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::ones(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        MPoly::constant(vars, Scalar::one())
    }

    pub fn int(vars: &VarSet, n: i64) -> Self {
        MPoly::constant(vars, Scalar::from_int(n))
    }

    pub fn var(vars: &VarSet, name: &str) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?} in {vars}"));
        MPoly::var_idx(vars, i)
    }

    pub fn var_idx(vars: &VarSet, i: usize) -> Self {
        MPoly::monomial_exp(vars, i, 1)
    }

    pub fn monomial_exp(vars: &VarSet, i: usize, e: i32) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        MPoly::from_term(vars, Monomial(exps.into_boxed_slice()), Scalar::one())
    }

    pub fn from_term(vars: &VarSet, m: Monomial, c: Scalar) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = MPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.leading().0.is_unit())
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            Some(Scalar::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    pub fn assert_polynomial(&self) -> Result<()> {
        if self.is_laurent() {
            Err(Error::InexactDivision(
                "operation requires non-negative exponents".into(),
            ))
        } else {
            Ok(())
        }
    }

    /// Leading (greatest) term under graded lex.
    pub fn leading(&self) -> (&Monomial, &Scalar) {
        self.terms.iter().next_back().expect("leading of zero")
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading().1.clone()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &MPoly) {
        assert!(
            self.vars == other.vars,
            "variable sets differ: {} vs {}",
            self.vars,
            other.vars
        );
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    pub fn conjugate(&self) -> MPoly {
        self.map_coeffs(|x| x.conjugate())
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.clone() * c.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Degree in one variable (max exponent); `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total()).max()
    }

    /// Total degree counting only the listed variables.
    pub fn degree_in_set(&self, vars: &[usize]) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.0[v] as i64).sum())
            .max()
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] != 0)
    }

    /// Coefficient of var^k, as a polynomial with the exponent of `var` zeroed.
    pub fn coeff_of(&self, var: usize, k: i32) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().filter(|(m, _)| m.0[var] == k).map(|(m, c)| {
                let mut e = m.0.to_vec();
                e[var] = 0;
                (Monomial(e.into_boxed_slice()), c.clone())
            }),
        )
    }

    /// Leading coefficient with respect to one variable.
    pub fn leading_coeff_in(&self, var: usize) -> MPoly {
        match self.degree_in(var) {
            None => MPoly::zero(&self.vars),
            Some(d) => self.coeff_of(var, d),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().filter(|(m, _)| m.0[var] != 0).map(|(m, c)| {
                let mut e = m.0.to_vec();
                let k = e[var];
                e[var] = k - 1;
                (
                    Monomial(e.into_boxed_slice()),
                    c.clone() * Scalar::from_int(k as i64),
                )
            }),
        )
    }

    /// The common field of all coefficients, or an error when two distinct
    /// radicands appear (which the constructors never produce on their own).
    pub fn field(&self) -> Result<Option<i64>> {
        let mut d = None;
        for c in self.terms.values() {
            d = crate::exactnum::join_radicands(d, c.radicand())?;
        }
        Ok(d)
    }

    /// Substitutes an image polynomial for every variable simultaneously.
    ///
    /// Images live over the target varset.  Negative exponents are accepted
    /// only for single-term (monomial) images.
    pub fn substitute(&self, target: &VarSet, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        for im in images {
            assert!(im.vars == *target, "image over wrong varset");
        }
        // cache of var -> exponent -> image power
        let mut pow_cache: Vec<BTreeMap<i32, MPoly>> = vec![BTreeMap::new(); images.len()];
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = pow_cache[v].entry(e).or_insert_with(|| {
                    if e >= 0 {
                        images[v].pow(e as u32)
                    } else {
                        let inv = images[v]
                            .monomial_inverse()
                            .expect("negative exponent with non-monomial image");
                        inv.pow((-e) as u32)
                    }
                });
                term = &term * p;
            }
            out = &out + &term;
        }
        out
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<MPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.leading();
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        Some(MPoly::from_term(&self.vars, inv, c.inv()))
    }

    /// Evaluates the polynomial at a full point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t = t * point[v].pow(e as i64);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes a scalar for one variable, keeping the varset.
    pub fn eval_var(&self, var: usize, value: &Scalar) -> MPoly {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.0.to_vec();
                let k = e[var];
                e[var] = 0;
                (
                    Monomial(e.into_boxed_slice()),
                    c.clone() * value.pow(k as i64),
                )
            }),
        )
    }

    /// Multiplies by the minimal monomial that clears all negative exponents.
    /// Returns the cleared polynomial and that unit monomial.
    pub fn clear_denominators(&self) -> (MPoly, Monomial) {
        let n = self.vars.len();
        let mut shift = vec![0i32; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < shift[i] {
                    shift[i] = e;
                }
            }
        }
        let unit = Monomial(shift.iter().map(|&e| -e).collect());
        let cleared = MPoly::from_terms(
            &self.vars,
            self.terms
                .iter()
                .map(|(m, c)| (m.mul(&unit), c.clone())),
        );
        (cleared, unit)
    }

    /// Rational content: positive rational g with self/g having coprime
    /// integer "numerators" (rational parts of surds included).
    pub fn rational_content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut push = |q: &Rational| {
            if !q.is_zero() {
                num_gcd = num_gcd.gcd(q.numer());
                den_lcm = den_lcm.lcm(q.denom());
            }
        };
        for c in self.terms.values() {
            let (a, b) = c.parts();
            push(&a);
            push(&b);
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Divides out the rational content and makes the canonical leading
    /// coefficient positive (rational part first, surd part breaking ties).
    /// Returns (normalized, unit) with self = unit * normalized.
    pub fn unit_normal(&self) -> (MPoly, Scalar) {
        if self.is_zero() {
            return (self.clone(), Scalar::one());
        }
        let mut u = Scalar::Rat(self.rational_content());
        let lead = self.leading().1.clone();
        let (a, b) = lead.parts();
        let neg = if !a.is_zero() {
            a.is_negative()
        } else {
            b.is_negative()
        };
        if neg {
            u = -u;
        }
        (self.scale(&u.inv()), u)
    }

    /// Equality up to a scalar unit.
    pub fn eq_up_to_scalar(&self, other: &MPoly) -> bool {
        self.unit_normal().0 == other.unit_normal().0
    }

    /// Equality up to a unit: scalar times a (Laurent) monomial.
    pub fn eq_up_to_unit(&self, other: &MPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let a = self.clear_denominators().0;
        let b = other.clear_denominators().0;
        let (a, sa) = a.strip_monomial_content();
        let (b, sb) = b.strip_monomial_content();
        let _ = (sa, sb);
        a.eq_up_to_scalar(&b)
    }

    /// Factors out the largest monomial dividing every term.
    pub fn strip_monomial_content(&self) -> (MPoly, Monomial) {
        if self.is_zero() {
            return (self.clone(), Monomial::ones(self.vars.len()));
        }
        let n = self.vars.len();
        let mut min = vec![i32::MAX; n];
        for m in self.terms.keys() {
            for i in 0..n {
                min[i] = min[i].min(m.0[i]);
            }
        }
        let content = Monomial(min.into_boxed_slice());
        let stripped = MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (m.div(&content), c.clone())),
        );
        (stripped, content)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        self.check_same_vars(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(MPoly::zero(&self.vars));
        }
        self.assert_polynomial()?;
        divisor.assert_polynomial()?;
        let (dm, dc) = divisor.leading();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo = MPoly::zero(&self.vars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading();
            if !dm.divides(rm) {
                return Err(Error::InexactDivision(format!(
                    "leading monomial not divisible while dividing by {divisor}"
                )));
            }
            let qm = rm.div(&dm);
            let qc = rc.clone() / dc.clone();
            let t = MPoly::from_term(&self.vars, qm, qc);
            rem = &rem - &(&t * divisor);
            quo = &quo + &t;
        }
        Ok(quo)
    }

    pub fn divides(&self, other: &MPoly) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Renames/permutes variables into a target varset by name.
    pub fn rename(&self, target: &VarSet) -> MPoly {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .unwrap_or_else(|| panic!("target varset lacks {n}"))
            })
            .collect();
        MPoly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0i32; target.len()];
                for (i, &ex) in m.0.iter().enumerate() {
                    e[map[i]] = ex;
                }
                (Monomial(e.into_boxed_slice()), c.clone())
            }),
        )
    }

    /// Canonical text form; parses back exactly.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }
}

impl std::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.map_coeffs(|c| -c.clone())
    }
}

impl std::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.check_same_vars(rhs);
        let mut out = MPoly::zero(&self.vars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // iterate over the smaller operand outside
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, abs) = match c {
                Scalar::Rat(q) => (q.is_negative(), Scalar::Rat(q.abs())),
                Scalar::Surd(s) => {
                    let neg = if !s.a.is_zero() {
                        s.a.is_negative()
                    } else {
                        s.b.is_negative()
                    };
                    (neg, if neg { -c.clone() } else { c.clone() })
                }
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if m.is_unit() {
                parts.push(abs.to_string());
            } else {
                if !abs.is_one() {
                    match &abs {
                        Scalar::Rat(_) => parts.push(abs.to_string()),
                        Scalar::Surd(s) => {
                            if s.a.is_zero() {
                                parts.push(abs.to_string());
                            } else {
                                parts.push(format!("({abs})"));
                            }
                        }
                    }
                }
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if e == 1 {
                        parts.push(self.vars.name(i).to_string());
                    } else {
                        parts.push(format!("{}^{}", self.vars.name(i), e));
                    }
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
