//! Multivariate GCD over Q by primitive pseudo-remainder sequences,
//! recursing on the variable of lowest degree with content extraction.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

use super::{MPoly, Monomial};

/// Pseudo-remainder of a by b with respect to `var`:
/// lc(b)^(deg a - deg b + 1) * a  mod  b.
pub(crate) fn pseudo_rem(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    let db = b.degree_in(var).expect("pseudo_rem by zero");
    let lb = b.coeff_of(var, db);
    let mut r = a.clone();
    loop {
        let dr = match r.degree_in(var) {
            None => return r,
            Some(d) => d,
        };
        if dr < db {
            return r;
        }
        let lr = r.coeff_of(var, dr);
        let shift = MPoly::monomial_exp(r.vars(), var, dr - db);
        // r := lb * r - lr * shift * b
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        debug_assert!(r.degree_in(var).map_or(true, |d| d < dr));
    }
}

/// Content of p with respect to `var`: the gcd of the coefficients of the
/// powers of `var` (a polynomial not involving `var`).
pub(crate) fn content_in(p: &MPoly, var: usize) -> Result<MPoly> {
    let mut g = MPoly::zero(p.vars());
    let lo = p.min_degree_in(var).unwrap_or(0);
    let hi = p.degree_in(var).unwrap_or(0);
    for k in lo..=hi {
        let c = p.coeff_of(var, k);
        if !c.is_zero() {
            g = gcd_multivariate(&g, &c)?;
            if g.is_constant() && !g.is_zero() {
                return Ok(MPoly::one(p.vars()));
            }
        }
    }
    Ok(g)
}

pub(crate) fn primitive_in(p: &MPoly, var: usize) -> Result<(MPoly, MPoly)> {
    let c = content_in(p, var)?;
    if c.is_zero() {
        return Ok((p.clone(), c));
    }
    let pp = p.exact_div(&c)?;
    Ok((pp, c))
}

/// Primitive GCD of two polynomials over Q, normalized so the canonical
/// leading coefficient is positive.  Divides both inputs exactly.
pub fn gcd_multivariate(p: &MPoly, q: &MPoly) -> Result<MPoly> {
    if p.vars() != q.vars() {
        return Err(Error::VarSetMismatch(
            p.vars().to_string(),
            q.vars().to_string(),
        ));
    }
    p.assert_polynomial()?;
    q.assert_polynomial()?;
    if let Some(d) = p.field()? {
        return Err(Error::UnsupportedFactorization(format!(
            "gcd over Q(sqrt({d})) is not needed by the pipeline"
        )));
    }
    if let Some(d) = q.field()? {
        return Err(Error::UnsupportedFactorization(format!(
            "gcd over Q(sqrt({d})) is not needed by the pipeline"
        )));
    }
    Ok(gcd_inner(p, q).unit_normal().0)
}

fn gcd_inner(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MPoly::one(p.vars());
    }
    // monomial content first: cheap and keeps degrees low
    let (ps, pm) = p.strip_monomial_content();
    let (qs, qm) = q.strip_monomial_content();
    let common = Monomial(
        pm.0.iter()
            .zip(qm.0.iter())
            .map(|(a, b)| (*a).min(*b))
            .collect(),
    );
    let mono = MPoly::from_term(p.vars(), common, Scalar::one());
    if ps.is_constant() || qs.is_constant() {
        return mono;
    }

    // pick the variable where min(deg p, deg q) is smallest but positive
    let mut var = None;
    let mut best = i32::MAX;
    for v in 0..p.vars().len() {
        let dp = ps.degree_in(v).unwrap_or(0);
        let dq = qs.degree_in(v).unwrap_or(0);
        if dp > 0 && dq > 0 {
            let m = dp.min(dq);
            if m < best {
                best = m;
                var = Some(v);
            }
        }
    }
    let var = match var {
        Some(v) => v,
        // no shared variable: the gcd of the stripped parts is a constant
        None => return mono,
    };

    let (pp, pc) = primitive_in(&ps, var).expect("content division");
    let (qp, qc) = primitive_in(&qs, var).expect("content division");
    let content_gcd = gcd_inner(&pc, &qc);

    // primitive PRS
    let (mut a, mut b) = if pp.degree_in(var) >= qp.degree_in(var) {
        (pp, qp)
    } else {
        (qp, pp)
    };
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            let g = primitive_in(&b, var).expect("content division").0;
            return &(&g * &content_gcd) * &mono;
        }
        if r.degree_in(var).unwrap_or(0) == 0 || !r.depends_on(var) {
            return &content_gcd * &mono;
        }
        a = b;
        b = primitive_in(&r, var).expect("content division").0;
    }
}

/// Squarefree part of a polynomial over Q: p / gcd(p, dp/dv) over each
/// variable it depends on.
pub(crate) fn squarefree_part(p: &MPoly) -> Result<MPoly> {
    let mut f = p.unit_normal().0;
    for v in 0..p.vars().len() {
        if !f.depends_on(v) {
            continue;
        }
        let g = gcd_multivariate(&f, &f.partial_derivative(v))?;
        if !g.is_constant() {
            f = f.exact_div(&g)?;
        }
    }
    Ok(f.unit_normal().0)
}
