//! Sylvester resultants via the subresultant pseudo-remainder sequence.

use crate::error::{Error, Result};

use super::gcd::pseudo_rem;
use super::MPoly;

/// Resultant of p and q with respect to `var`, exact over the coefficient
/// field.  Both inputs must be polynomials (no negative exponents).
pub fn resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    if p.vars() != q.vars() {
        return Err(Error::VarSetMismatch(
            p.vars().to_string(),
            q.vars().to_string(),
        ));
    }
    p.assert_polynomial()?;
    q.assert_polynomial()?;
    if p.is_zero() || q.is_zero() {
        return Ok(MPoly::zero(p.vars()));
    }
    Ok(res_inner(p.clone(), q.clone(), var))
}

/// Subresultant PRS resultant.  Close to the classical recursive formulation:
/// track the PRS with beta-corrections and accumulate the scaling exponents.
fn res_inner(p: MPoly, q: MPoly, var: usize) -> MPoly {
    let dp = p.degree_in(var).unwrap_or(0) as i64;
    let dq = q.degree_in(var).unwrap_or(0) as i64;
    if dp < dq {
        let sign = if (dp * dq) % 2 == 1 { -1 } else { 1 };
        let r = res_inner(q, p, var);
        return if sign < 0 { -&r } else { r };
    }
    if dq == 0 {
        // res(p, c) = c^deg(p)
        return q.pow(dp as u32);
    }

    // With r = prem(p,q) = lc(q)^(dp-dq+1) * (p mod q) and dr = deg r:
    //   res(p,q) = (-1)^(dp dq) * res(q,r) / lc(q)^((dp-dq+1) dq - dp + dr)
    // and the correction exponent is always >= 0, so the division is exact.
    let r = pseudo_rem(&p, &q, var);
    let lq = q.coeff_of(var, dq as i32);
    if r.is_zero() {
        return MPoly::zero(p.vars());
    }
    let dr = r.degree_in(var).unwrap_or(0) as i64;
    let sub = res_inner(q, r, var);
    let e = (dp - dq + 1) * dq - dp + dr;
    debug_assert!(e >= 0);
    let mut out = sub;
    if e > 0 {
        out = out
            .exact_div(&lq.pow(e as u32))
            .expect("subresultant scaling division is exact");
    }
    if (dp * dq) % 2 == 1 {
        out = -&out;
    }
    out
}
