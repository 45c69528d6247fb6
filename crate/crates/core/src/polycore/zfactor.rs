//! Complete univariate factorization over Q.
//!
//! Classical Zassenhaus pipeline: Yun squarefree decomposition, factorization
//! modulo a good small prime (distinct-degree plus Cantor-Zassenhaus
//! splitting), quadratic Hensel lifting to above the Mignotte bound, and
//! subset recombination with exact trial division.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::exactnum::Rational;

use super::uniq::UniQ;

// ---------------------------------------------------------------------------
// arithmetic in Fp[x], p odd, p < 2^31; index = degree
// ---------------------------------------------------------------------------

type FpPoly = Vec<u64>;

fn fp_trim(v: &mut FpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_deg(v: &FpPoly) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invm(a: u64, p: u64) -> u64 {
    // extended euclid
    let (mut t, mut newt): (i128, i128) = (0, 1);
    let (mut r, mut newr): (i128, i128) = (p as i128, a as i128);
    while newr != 0 {
        let q = r / newr;
        (t, newt) = (newt, t - q * newt);
        (r, newr) = (newr, r - q * newr);
    }
    assert_eq!(r, 1, "not invertible mod p");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

fn fp_add(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = addm(out[i], c, p);
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = addm(out[i], c, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = addm(out[i], c, p);
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = subm(out[i], c, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_divmod(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let db = fp_deg(b).expect("division by zero");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let inv_lc = invm(b[db], p);
    let mut quo = vec![0u64; rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i] == 0 {
            continue;
        }
        let q = mulm(rem[i], inv_lc, p);
        quo[i - db] = q;
        for (j, &c) in b.iter().enumerate() {
            rem[i - db + j] = subm(rem[i - db + j], mulm(q, c, p), p);
        }
    }
    fp_trim(&mut rem);
    fp_trim(&mut quo);
    (quo, rem)
}

fn fp_rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    fp_divmod(a, b, p).1
}

fn fp_monic(a: &FpPoly, p: u64) -> FpPoly {
    match fp_deg(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = invm(a[d], p);
            a.iter().map(|&c| mulm(c, inv, p)).collect()
        }
    }
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// Extended euclid in Fp[x]: (g, s, t) with s*a + t*b = g, g monic.
fn fp_xgcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0: FpPoly = vec![1];
    let mut s1: FpPoly = Vec::new();
    let mut t0: FpPoly = Vec::new();
    let mut t1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = fp_divmod(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let d = fp_deg(&r0).expect("xgcd of zero polynomials");
    let inv = invm(r0[d], p);
    let scale = |v: &FpPoly| v.iter().map(|&c| mulm(c, inv, p)).collect::<FpPoly>();
    (scale(&r0), scale(&s0), scale(&t0))
}

fn fp_powmod(base: &FpPoly, exp: &BigUint, modulus: &FpPoly, p: u64) -> FpPoly {
    let mut result: FpPoly = vec![1];
    let mut b = fp_rem(base, modulus, p);
    for bit in (0..exp.bits()).map(|i| exp.bit(i)) {
        if bit {
            result = fp_rem(&fp_mul(&result, &b, p), modulus, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), modulus, p);
    }
    result
}

// ---------------------------------------------------------------------------
// factoring a squarefree monic polynomial mod p
// ---------------------------------------------------------------------------

/// Distinct-degree factorization: returns (product of irreducibles of degree d, d).
fn ddf(f: &FpPoly, p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut fstar = f.clone();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while fp_deg(&fstar).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = fp_powmod(&h, &BigUint::from(p), &fstar, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &fstar, p);
        if fp_deg(&g).unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            fstar = fp_divmod(&fstar, &g, p).0;
            h = fp_rem(&h, &fstar, p);
        }
    }
    if fp_deg(&fstar).unwrap_or(0) > 0 {
        let deg = fp_deg(&fstar).unwrap();
        out.push((fstar, deg));
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting of a product of irreducibles of
/// degree d.
fn edf(f: &FpPoly, d: usize, p: u64, rng: &mut StdRng) -> Vec<FpPoly> {
    let n = fp_deg(f).unwrap();
    if n == d {
        return vec![fp_monic(f, p)];
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a: FpPoly = {
            let mut v: FpPoly = (0..n).map(|_| rng.random_range(0..p)).collect();
            fp_trim(&mut v);
            if v.is_empty() {
                continue;
            }
            v
        };
        let b = fp_powmod(&a, &exp, f, p);
        let b1 = fp_sub(&b, &vec![1], p);
        let g = fp_gcd(&b1, f, p);
        let dg = fp_deg(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let rest = fp_divmod(f, &g, p).0;
            let mut out = edf(&g, d, p, rng);
            out.extend(edf(&rest, d, p, rng));
            return out;
        }
    }
}

fn factor_mod_p(f: &FpPoly, p: u64, rng: &mut StdRng) -> Vec<FpPoly> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, rng));
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn z_trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn z_mod(v: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = v.iter().map(|c| c.mod_floor(m)).collect();
    z_trim(&mut out);
    out
}

fn z_mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_mod(&out, m)
}

fn z_add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    z_mod(&out, m)
}

fn z_sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    z_mod(&out, m)
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn z_divmod_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        quo[i - db] = q.clone();
        for (j, c) in b.iter().enumerate() {
            let t = &q * c;
            rem[i - db + j] -= t;
        }
        rem[i - db..=i].iter_mut().for_each(|c| *c = c.mod_floor(m));
    }
    (z_mod(&quo, m), z_mod(&rem, m))
}

/// One quadratic Hensel step: from precision m to m^2.
///
/// Invariants going in (all mod m): f = g*h, s*g + t*h = 1, g and h monic,
/// deg s < deg h, deg t < deg g.  Same invariants hold mod m^2 going out.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = z_sub_mod(f, &z_mul_mod(g, h, &m2), &m2);
    let (q, r) = z_divmod_monic(&z_mul_mod(s, &e, &m2), h, &m2);
    let g1 = z_add_mod(&z_add_mod(g, &z_mul_mod(t, &e, &m2), &m2), &z_mul_mod(&q, g, &m2), &m2);
    let h1 = z_add_mod(h, &r, &m2);
    let b = z_sub_mod(
        &z_add_mod(&z_mul_mod(s, &g1, &m2), &z_mul_mod(t, &h1, &m2), &m2),
        &vec![BigInt::one()],
        &m2,
    );
    let (c, d) = z_divmod_monic(&z_mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = z_sub_mod(s, &d, &m2);
    let t1 = z_sub_mod(
        t,
        &z_add_mod(&z_mul_mod(t, &b, &m2), &z_mul_mod(&c, &g1, &m2), &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

fn fp_to_z(v: &FpPoly) -> ZPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts the factorization f = prod(factors) from mod p to mod p^(2^j) >= bound,
/// recursively on a balanced tree of factor products.
fn hensel_lift_tree(
    f: &ZPoly,
    factors: &[FpPoly],
    p: u64,
    bound: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < bound {
            m = &m * &m;
        }
        return vec![z_mod(f, &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g0: FpPoly = vec![1];
    for fac in left {
        g0 = fp_mul(&g0, fac, p);
    }
    let mut h0: FpPoly = vec![1];
    for fac in right {
        h0 = fp_mul(&h0, fac, p);
    }
    let (one, s0, t0) = fp_xgcd(&g0, &h0, p);
    assert_eq!(fp_deg(&one), Some(0), "modular factors not coprime");

    let mut m = BigInt::from(p);
    let mut g = fp_to_z(&g0);
    let mut h = fp_to_z(&h0);
    let mut s = fp_to_z(&s0);
    let mut t = fp_to_z(&t0);
    while &m < bound {
        let (g1, h1, s1, t1) = hensel_step(&z_mod(f, &(&m * &m)), &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&g, left, p, bound);
    out.extend(hensel_lift_tree(&h, right, p, bound));
    out
}

// ---------------------------------------------------------------------------
// recombination and the driver
// ---------------------------------------------------------------------------

fn z_symmetric(v: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = v
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    z_trim(&mut out);
    out
}

fn z_divides(num: &ZPoly, den: &ZPoly) -> Option<ZPoly> {
    // exact division over Z for a monic divisor
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.clone();
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quo[i - dd] = q.clone();
        for (j, c) in den.iter().enumerate() {
            let t = &q * c;
            rem[i - dd + j] -= t;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quo)
    } else {
        None
    }
}

fn norm2(f: &ZPoly) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    s.sqrt() + 1
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
];

/// Factors a squarefree monic polynomial over Z into monic irreducibles.
fn factor_squarefree_monic(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let mut rng = StdRng::seed_from_u64(0x00c0ffee);

    // choose a prime keeping f squarefree
    let mut chosen = None;
    for &p in PRIMES {
        let fp: FpPoly = {
            let mut v: FpPoly = f
                .iter()
                .map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap())
                .collect();
            fp_trim(&mut v);
            v
        };
        if fp_deg(&fp) != Some(n) {
            continue; // cannot happen for monic f, kept for safety
        }
        let deriv: FpPoly = {
            let mut v: FpPoly = (1..fp.len())
                .map(|i| mulm(fp[i], (i as u64) % p, p))
                .collect();
            fp_trim(&mut v);
            v
        };
        if deriv.is_empty() {
            continue;
        }
        let g = fp_gcd(&fp, &deriv, p);
        if fp_deg(&g) == Some(0) {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.expect("no good prime found for squarefree polynomial");

    let modular = factor_mod_p(&fp, p, &mut rng);
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Mignotte-style bound on factor coefficients
    let bound: BigInt = (BigInt::from(2).pow(n as u32 + 1)) * norm2(f);
    let two_bound = &bound * 2 + 1;
    let lifted = hensel_lift_tree(f, &modular, p, &two_bound);
    let mut modulus = BigInt::from(p);
    while modulus < two_bound {
        modulus = &modulus * &modulus;
    }

    // subset recombination
    let mut remaining = f.clone();
    let mut active: Vec<usize> = (0..lifted.len()).collect();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= active.len() {
        // iterate over subsets of `active` of cardinality `size`
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut cand: ZPoly = vec![BigInt::one()];
            for &ci in &combo {
                cand = z_mul_mod(&cand, &lifted[active[ci]], &modulus);
            }
            let cand = z_symmetric(&cand, &modulus);
            if let Some(quo) = z_divides(&remaining, &cand) {
                out.push(cand);
                remaining = quo;
                let removed: Vec<usize> = combo.iter().map(|&ci| active[ci]).collect();
                active.retain(|i| !removed.contains(i));
                continue 'outer;
            }
            // next combination
            let k = combo.len();
            let mut i = k;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if combo[i] != i + active.len() - k {
                    break;
                }
            }
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out.sort();
    out
}

/// Yun's squarefree decomposition of a univariate rational polynomial.
/// Returns monic squarefree parts with multiplicities.
fn squarefree_decomposition(f: &UniQ) -> Vec<(UniQ, u32)> {
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    if a0.degree() == Some(0) {
        return vec![(f.monic(), 1)];
    }
    let mut b = f.divmod(&a0).0;
    let mut c = fp.divmod(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        b = b.divmod(&a).0;
        c = d.divmod(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
        if b.degree() == Some(0) {
            break;
        }
    }
    out
}

fn uniq_to_monic_z(f: &UniQ) -> (ZPoly, Rational) {
    // f monic over Q; substitute x -> x/lc trick not needed, just clear
    // denominators of the monic polynomial: returns integer poly of f(x)
    // scaled monic via x -> x/e substitution.
    // For a monic f with rational coefficients, pick e = lcm of denominators;
    // then e^n f(x/e) is monic with integer coefficients.
    let n = f.degree().unwrap();
    let mut e = BigInt::one();
    for c in &f.0 {
        e = e.lcm(c.denom());
    }
    let erat = BigRational::from_integer(e.clone());
    let mut out = ZPoly::new();
    for (k, c) in f.0.iter().enumerate() {
        // coefficient of x^k in e^n f(x/e) is c_k e^(n-k)
        let v = c * erat.clone().pow((n - k) as i32);
        assert!(v.denom().is_one());
        out.push(v.numer().clone());
    }
    (out, erat)
}

fn z_to_uniq(f: &ZPoly) -> UniQ {
    UniQ::from_coeffs(
        f.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

/// Primitive integer form of a rational polynomial (positive leading coeff).
fn primitive_z(f: &UniQ) -> ZPoly {
    let mut den = BigInt::one();
    for c in &f.0 {
        den = den.lcm(c.denom());
    }
    let mut ints: ZPoly = f
        .0
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).numer().clone())
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

/// Factors a univariate rational polynomial into irreducible monic rational
/// factors with multiplicities.  The constant scale is not returned; callers
/// reconstruct it by division.
pub(crate) fn factor_rational_univariate(f: &UniQ) -> Vec<(UniQ, u32)> {
    assert!(!f.is_zero());
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let mut out: Vec<(UniQ, u32)> = Vec::new();
    // strip x^k
    let mut f = f.clone();
    let mut zeros = 0u32;
    while f.0.first().is_some_and(|c| c.is_zero()) {
        f = UniQ::from_coeffs(f.0[1..].to_vec());
        zeros += 1;
    }
    if zeros > 0 {
        out.push((UniQ::from_coeffs(vec![Rational::zero(), Rational::one()]), zeros));
    }
    if f.degree() == Some(0) {
        return out;
    }

    for (part, mult) in squarefree_decomposition(&f.monic()) {
        if part.degree() == Some(1) {
            out.push((part.monic(), mult));
            continue;
        }
        // monicize with integer coefficients, factor, map back
        let (fz, e) = uniq_to_monic_z(&part.monic());
        let prim = primitive_z(&z_to_uniq(&fz));
        for g in factor_squarefree_monic(&prim) {
            // undo x -> x*e: g(x*e) then monic
            let gq = UniQ::from_coeffs(
                g.iter()
                    .enumerate()
                    .map(|(k, c)| BigRational::from_integer(c.clone()) * e.clone().pow(k as i32))
                    .collect(),
            );
            out.push((gq.monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0 .0.cmp(&b.0 .0))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    fn upoly(coeffs: &[i64]) -> UniQ {
        UniQ::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn refactor(f: &UniQ) -> UniQ {
        let mut acc = UniQ::constant(rat_int(1));
        for (g, m) in factor_rational_univariate(f) {
            for _ in 0..m {
                acc = acc.mul(&g);
            }
        }
        acc
    }

    #[test]
    fn factors_products_of_small_irreducibles() {
        // (x^2 - 2)(x^3 + x + 1)(x - 3)^2
        let f = upoly(&[-2, 0, 1])
            .mul(&upoly(&[1, 1, 0, 1]))
            .mul(&upoly(&[-3, 1]))
            .mul(&upoly(&[-3, 1]));
        let fac = factor_rational_univariate(&f);
        let degs: Vec<(usize, u32)> = fac.iter().map(|(g, m)| (g.degree().unwrap(), *m)).collect();
        assert_eq!(degs, vec![(1, 2), (2, 1), (3, 1)]);
        assert_eq!(refactor(&f), f.monic());
    }

    #[test]
    fn detects_irreducible_quartics() {
        // x^4 + 1 is irreducible over Q but splits mod every prime
        let f = upoly(&[1, 0, 0, 0, 1]);
        let fac = factor_rational_univariate(&f);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0.degree(), Some(4));
    }

    #[test]
    fn handles_degree_nine_splits() {
        // (z^2-2)(z^3-z-1)(z^4+z+1): degrees 2+3+4 = 9
        let f = upoly(&[-2, 0, 1])
            .mul(&upoly(&[-1, -1, 0, 1]))
            .mul(&upoly(&[1, 1, 0, 0, 1]));
        let fac = factor_rational_univariate(&f);
        let degs: Vec<usize> = fac.iter().map(|(g, _)| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![2, 3, 4]);
        assert_eq!(refactor(&f), f.monic());
    }

    #[test]
    fn non_monic_and_rational_inputs() {
        // 4x^2 - 1 = (2x-1)(2x+1), expect the monic images x -/ + 1/2
        let f = upoly(&[-1, 0, 4]);
        let fac = factor_rational_univariate(&f);
        assert_eq!(fac.len(), 2);
        for (g, _) in &fac {
            assert_eq!(g.degree(), Some(1));
        }
        assert_eq!(refactor(&f), f.monic());
    }
}
