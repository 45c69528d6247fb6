//! Factorization drivers.
//!
//! Univariate polynomials over Q factor completely (zfactor engine); the
//! irreducible quadratics can then be split over a quadratic extension when
//! their roots lie in one.  Polynomials in up to three variables factor over
//! Q by specializing all but a main variable at a good point, factoring the
//! univariate image, Hensel-lifting the factors in the ideal of the
//! specialization point, and recombining with exact trial division.  Every
//! factorization is re-verified by division before being returned.


use num::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{join_radicands, try_sqrt, Rational, Scalar};

use super::biform::{rehomogenize, BiForm};
use super::gcd::squarefree_part;
use super::uniq::UniQ;
use super::zfactor::factor_rational_univariate;
use super::{MPoly, Monomial, VarSet};

#[derive(Clone, Debug)]
pub struct FactorConfig {
    /// Degree cap for the public univariate operation.
    pub max_univariate_degree: i64,
    /// Bidegree cap for biform factorization.
    pub max_bidegree: (i64, i64),
    /// Split irreducible quadratics over a quadratic extension when possible.
    pub split_quadratics: bool,
    /// When set, only these radicands may be introduced by splitting.
    pub radicand_allowlist: Option<Vec<i64>>,
    /// Escalate any unsplit non-linear factor to an error (used by solvers
    /// that must enumerate every root).
    pub require_full_split: bool,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            max_univariate_degree: 12,
            // covers the full character polynomials through n = 4
            max_bidegree: (16, 18),
            split_quadratics: true,
            radicand_allowlist: None,
            require_full_split: false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitStatus {
    Irreducible,
    NotFurtherSplit,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    /// input = unit * prod factors^multiplicity
    pub unit: Scalar,
    pub factors: Vec<(MPoly, u32, SplitStatus)>,
}

impl Factorization {
    pub fn product(&self, vars: &VarSet) -> MPoly {
        let mut acc = MPoly::constant(vars, self.unit.clone());
        for (f, m, _) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

fn mpoly_to_uniq(p: &MPoly, var: usize) -> UniQ {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        let q = c
            .as_rational()
            .expect("rational coefficients required")
            .clone();
        coeffs[m.0[var] as usize] = q;
    }
    UniQ::from_coeffs(coeffs)
}

fn uniq_to_mpoly(u: &UniQ, vars: &VarSet, var: usize) -> MPoly {
    MPoly::from_terms(
        vars,
        u.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut e = vec![0i32; vars.len()];
            e[var] = k as i32;
            (Monomial(e.into_boxed_slice()), Scalar::Rat(c.clone()))
        }),
    )
}

/// Splits a monic quadratic x^2 + bx + c over a quadratic extension when its
/// roots lie in one compatible with `ambient`.  Returns the two roots.
fn quadratic_roots(
    b: &Scalar,
    c: &Scalar,
    ambient: Option<i64>,
    allow: &Option<Vec<i64>>,
) -> Option<(Scalar, Scalar, Option<i64>)> {
    let disc = b.clone() * b.clone() - Scalar::from_int(4) * c.clone();
    let root = try_sqrt(&disc)?;
    let field = join_radicands(ambient, root.radicand()).ok()?;
    if let Some(allowed) = allow {
        if let Some(d) = root.radicand() {
            if !allowed.contains(&d) {
                return None;
            }
        }
    }
    let half = Scalar::from_rat(1, 2);
    let r1 = (-b.clone() + root.clone()) * half.clone();
    let r2 = (-b.clone() - root) * half;
    Some((r1, r2, field))
}

/// Factors a polynomial that is univariate in `var` over the active quadratic
/// field.  Rational-coefficient inputs factor completely over Q first;
/// quadratic factors are then split over Q(sqrt(d')) when allowed.
pub fn univariate_factor(p: &MPoly, var: usize, cfg: &FactorConfig) -> Result<Factorization> {
    p.assert_polynomial()?;
    if p.is_zero() {
        return Err(Error::UnsupportedFactorization("zero polynomial".into()));
    }
    for v in 0..p.vars().len() {
        if v != var && p.depends_on(v) {
            return Err(Error::UnsupportedFactorization(format!(
                "input depends on {}; expected univariate in {}",
                p.vars().name(v),
                p.vars().name(var)
            )));
        }
    }
    let deg = p.degree_in(var).unwrap_or(0) as i64;
    if deg > cfg.max_univariate_degree {
        return Err(Error::DegreeCapExceeded(format!(
            "degree {deg} exceeds univariate cap {}",
            cfg.max_univariate_degree
        )));
    }
    let field = p.field()?;
    let mut factors: Vec<(MPoly, u32, SplitStatus)> = Vec::new();
    let vars = p.vars().clone();

    match field {
        None => {
            let u = mpoly_to_uniq(p, var);
            for (g, mult) in factor_rational_univariate(&u) {
                factors.push((uniq_to_mpoly(&g, &vars, var), mult, SplitStatus::Irreducible));
            }
        }
        Some(_) => {
            // surd coefficients: handle degree <= 2 directly
            let lc = p.coeff_of(var, deg as i32).constant_value().unwrap();
            let monic = p.scale(&lc.inv());
            match deg {
                0 => {}
                1 => {
                    factors.push((monic, 1, SplitStatus::Irreducible));
                }
                2 => {
                    factors.push((monic, 1, SplitStatus::NotFurtherSplit));
                }
                _ => {
                    return Err(Error::UnsupportedFactorization(format!(
                        "degree {deg} over a quadratic extension"
                    )))
                }
            }
        }
    }

    // optional quadratic splitting over an extension
    if cfg.split_quadratics {
        let mut ambient = field;
        for (f, _, _) in &factors {
            ambient = join_radicands(ambient, f.field()?)?;
        }
        let mut split: Vec<(MPoly, u32, SplitStatus)> = Vec::new();
        for (f, mult, status) in factors {
            if f.degree_in(var) == Some(2) {
                let lc = f.coeff_of(var, 2).constant_value().unwrap();
                let fm = f.scale(&lc.inv());
                let b = fm.coeff_of(var, 1).constant_value().unwrap();
                let c = fm.coeff_of(var, 0).constant_value().unwrap();
                if let Some((r1, r2, newfield)) =
                    quadratic_roots(&b, &c, ambient, &cfg.radicand_allowlist)
                {
                    ambient = newfield;
                    let x = MPoly::var_idx(&vars, var);
                    for r in [r1, r2] {
                        split.push((
                            &x - &MPoly::constant(&vars, r),
                            mult,
                            SplitStatus::Irreducible,
                        ));
                    }
                    continue;
                }
                split.push((f, mult, SplitStatus::NotFurtherSplit));
                continue;
            }
            split.push((f, mult, status));
        }
        factors = split;
    }

    for (f, _, status) in &factors {
        let d = f.degree_in(var).unwrap_or(0);
        if d >= 3 || (cfg.require_full_split && d >= 2) {
            if d >= 3 || *status == SplitStatus::NotFurtherSplit {
                return Err(Error::UnsplittableFactor(f.to_text()));
            }
        }
    }

    // unit = input / product, verified constant
    let mut prod = MPoly::one(&vars);
    for (f, m, _) in &factors {
        prod = &prod * &f.pow(*m);
    }
    let unit_poly = p.exact_div(&prod)?;
    let unit = unit_poly
        .constant_value()
        .ok_or_else(|| Error::Inconsistent("factor product does not divide input".into()))?;
    factors.sort_by(|a, b| {
        a.0.degree_in(var)
            .cmp(&b.0.degree_in(var))
            .then_with(|| a.0.to_text().cmp(&b.0.to_text()))
    });
    Ok(Factorization { unit, factors })
}

/// Linear root of a monic-in-`var` degree-1 polynomial c1*v + c0.
pub(crate) fn linear_root(f: &MPoly, var: usize) -> Scalar {
    let c1 = f.coeff_of(var, 1).constant_value().expect("linear factor");
    let c0 = f.coeff_of(var, 0).constant_value().expect("linear factor");
    -c0 / c1
}

// ---------------------------------------------------------------------------
// multivariate factorization over Q (up to 3 effective variables)
// ---------------------------------------------------------------------------

fn lift_degree(m: &Monomial, lift_vars: &[usize]) -> i64 {
    lift_vars.iter().map(|&v| m.0[v] as i64).sum()
}

fn truncate(p: &MPoly, lift_vars: &[usize], cap: i64) -> MPoly {
    MPoly::from_terms(
        p.vars(),
        p.terms()
            .filter(|(m, _)| lift_degree(m, lift_vars) <= cap)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn mul_trunc(a: &MPoly, b: &MPoly, lift_vars: &[usize], cap: i64) -> MPoly {
    truncate(&(a * b), lift_vars, cap)
}

/// Translates `var -> var + c` for each (var, c) pair.
fn translate(p: &MPoly, shifts: &[(usize, Rational)]) -> MPoly {
    let vars = p.vars().clone();
    let images: Vec<MPoly> = (0..vars.len())
        .map(|v| {
            let x = MPoly::var_idx(&vars, v);
            match shifts.iter().find(|(sv, _)| *sv == v) {
                Some((_, c)) => &x + &MPoly::constant(&vars, Scalar::Rat(c.clone())),
                None => x,
            }
        })
        .collect();
    p.substitute(&vars, &images)
}

/// Factors a squarefree primitive polynomial over Q with a constant leading
/// coefficient in `main`, using at most two lifting variables.
fn factor_squarefree_main(
    f: &MPoly,
    main: usize,
    lift_vars: &[usize],
) -> Result<Vec<MPoly>> {
    let vars = f.vars().clone();
    let deg_main = f.degree_in(main).unwrap() as usize;

    // find a specialization point keeping the univariate image squarefree
    let candidates: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 13, -13];
    let mut chosen: Option<Vec<(usize, Rational)>> = None;
    'search: for attempt in 0..2000usize {
        let mut shifts = Vec::new();
        let mut idx = attempt;
        for &v in lift_vars {
            let c = candidates[idx % candidates.len()];
            idx /= candidates.len();
            shifts.push((v, Rational::from_integer(c.into())));
        }
        let mut f0 = f.clone();
        for (v, c) in &shifts {
            f0 = f0.eval_var(*v, &Scalar::Rat(c.clone()));
        }
        if f0.degree_in(main) != Some(deg_main as i32) {
            continue;
        }
        let u = mpoly_to_uniq(&f0, main);
        let g = u.gcd(&u.derivative());
        if g.degree() == Some(0) {
            chosen = Some(shifts);
            break 'search;
        }
    }
    let shifts =
        chosen.ok_or_else(|| Error::UnsupportedFactorization("no good specialization point".into()))?;

    // translate the point to the origin and normalize monic in the main
    // variable (the leading coefficient is a constant by choice of `main`)
    let ft = translate(f, &shifts);
    let lc = ft
        .coeff_of(main, deg_main as i32)
        .constant_value()
        .expect("constant leading coefficient");
    let ft = ft.scale(&lc.inv());
    let mut f0 = ft.clone();
    for &v in lift_vars {
        f0 = f0.eval_var(v, &Scalar::zero());
    }
    let u0_all = factor_rational_univariate(&mpoly_to_uniq(&f0, main));
    debug_assert!(u0_all.iter().all(|(_, m)| *m == 1));
    let u0: Vec<UniQ> = u0_all.into_iter().map(|(g, _)| g).collect();
    if u0.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    // Bezout basis: sigma_k * prod_{l != k} u_l = 1 mod u_k
    let mut sigmas: Vec<UniQ> = Vec::new();
    for k in 0..u0.len() {
        let mut rest = UniQ::constant(Rational::from_integer(1.into()));
        for (l, ul) in u0.iter().enumerate() {
            if l != k {
                rest = rest.mul(ul).rem(&u0[k]);
            }
        }
        let (g, s, _) = rest.xgcd(&u0[k]);
        if g.degree() != Some(0) {
            return Err(Error::UnsupportedFactorization(
                "specialized factors not coprime".into(),
            ));
        }
        sigmas.push(s.rem(&u0[k]));
    }

    // Hensel lift in the ideal generated by the lifting variables
    let cap: i64 = lift_vars
        .iter()
        .map(|&v| ft.degree_in(v).unwrap_or(0) as i64)
        .sum();
    let mut lifted: Vec<MPoly> = u0.iter().map(|g| uniq_to_mpoly(g, &vars, main)).collect();

    for level in 1..=cap {
        let mut prod = MPoly::one(&vars);
        for g in &lifted {
            prod = mul_trunc(&prod, g, lift_vars, cap);
        }
        let err = &truncate(&ft, lift_vars, cap) - &prod;
        if err.is_zero() {
            break;
        }
        // collect level-degree corrections grouped by lift monomial
        let mut groups: std::collections::BTreeMap<Vec<i32>, Vec<(i32, Rational)>> =
            std::collections::BTreeMap::new();
        for (m, c) in err.terms() {
            if lift_degree(m, lift_vars) != level {
                continue;
            }
            let key: Vec<i32> = lift_vars.iter().map(|&v| m.0[v]).collect();
            let q = c.as_rational().expect("rational lift").clone();
            groups.entry(key).or_default().push((m.0[main], q));
        }
        for (key, coeffs) in groups {
            let mut cz = vec![Rational::zero(); deg_main + 1];
            for (k, q) in coeffs {
                cz[k as usize] = q;
            }
            let cz = UniQ::from_coeffs(cz);
            for (k, (u, sigma)) in u0.iter().zip(&sigmas).enumerate() {
                let delta = sigma.mul(&cz).rem(u);
                if delta.is_zero() {
                    continue;
                }
                let mut mono = vec![0i32; vars.len()];
                for (i, &v) in lift_vars.iter().enumerate() {
                    mono[v] = key[i];
                }
                let mp = MPoly::from_term(&vars, Monomial(mono.into_boxed_slice()), Scalar::one());
                lifted[k] = &lifted[k] + &(&mp * &uniq_to_mpoly(&delta, &vars, main));
            }
        }
    }

    // recombination with exact division against the untranslated polynomial
    let neg_shifts: Vec<(usize, Rational)> =
        shifts.iter().map(|(v, c)| (*v, -c.clone())).collect();
    let mut remaining = f.clone();
    let mut active: Vec<usize> = (0..lifted.len()).collect();
    let mut out: Vec<MPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= active.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut cand = MPoly::one(&vars);
            for &ci in &combo {
                cand = mul_trunc(&cand, &lifted[active[ci]], lift_vars, cap);
            }
            let cand = translate(&cand, &neg_shifts).unit_normal().0;
            if !cand.is_constant() {
                if let Ok(quo) = remaining.exact_div(&cand) {
                    out.push(cand);
                    remaining = quo;
                    let removed: Vec<usize> = combo.iter().map(|&ci| active[ci]).collect();
                    active.retain(|i| !removed.contains(i));
                    continue 'outer;
                }
            }
            // next combination of the given size
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
    if !remaining.is_constant() {
        out.push(remaining.unit_normal().0);
    }
    Ok(out)
}

/// Complete factorization over Q of a polynomial in at most three effective
/// variables.  Returns unit-normalized irreducible factors with
/// multiplicities; the product equals the input up to a scalar unit.
pub fn factor_affine_over_q(p: &MPoly) -> Result<Vec<(MPoly, u32)>> {
    p.assert_polynomial()?;
    if let Some(d) = p.field()? {
        return Err(Error::UnsupportedFactorization(format!(
            "multivariate factorization over Q(sqrt({d}))"
        )));
    }
    if p.is_zero() {
        return Err(Error::UnsupportedFactorization("zero polynomial".into()));
    }
    let vars = p.vars().clone();
    let mut out: Vec<(MPoly, u32)> = Vec::new();

    // monomial content
    let (stripped, content) = p.strip_monomial_content();
    for (v, &e) in content.0.iter().enumerate() {
        if e != 0 {
            out.push((MPoly::var_idx(&vars, v), e as u32));
        }
    }
    let p = stripped.unit_normal().0;
    if p.is_constant() {
        return Ok(out);
    }

    let effective: Vec<usize> = (0..vars.len()).filter(|&v| p.depends_on(v)).collect();
    if effective.len() > 3 {
        return Err(Error::UnsupportedFactorization(format!(
            "{} effective variables (max 3)",
            effective.len()
        )));
    }

    // squarefree part, factored, multiplicities recovered by trial division
    let sqf = squarefree_part(&p)?;
    let irreducibles = factor_squarefree_affine(&sqf)?;
    for q in irreducibles {
        let mut mult = 0u32;
        let mut rest = p.clone();
        while let Ok(next) = rest.exact_div(&q) {
            mult += 1;
            rest = next;
        }
        debug_assert!(mult >= 1);
        out.push((q, mult));
    }

    // verified by division: the product must equal the input up to a unit
    let mut prod = MPoly::one(&vars);
    for (q, m) in &out {
        prod = &prod * &q.pow(*m);
    }
    let original = stripped.mul_monomial(&content, &Scalar::one());
    let ratio = original.exact_div(&prod)?;
    if ratio.constant_value().is_none() {
        return Err(Error::Inconsistent(
            "factorization verification failed".into(),
        ));
    }
    out.sort_by(|a, b| {
        a.0.total_degree()
            .cmp(&b.0.total_degree())
            .then_with(|| a.0.to_text().cmp(&b.0.to_text()))
    });
    Ok(out)
}

fn factor_squarefree_affine(f: &MPoly) -> Result<Vec<MPoly>> {
    let vars = f.vars().clone();
    let effective: Vec<usize> = (0..vars.len()).filter(|&v| f.depends_on(v)).collect();
    if effective.is_empty() {
        return Ok(Vec::new());
    }
    if effective.len() == 1 {
        let var = effective[0];
        let u = mpoly_to_uniq(f, var);
        return Ok(factor_rational_univariate(&u)
            .into_iter()
            .map(|(g, _)| uniq_to_mpoly(&g, &vars, var).unit_normal().0)
            .collect());
    }

    // content in a main variable splits off factors free of that variable
    // choose a main variable with constant leading coefficient if possible
    let mut main = None;
    for &v in &effective {
        let lc = f.leading_coeff_in(v);
        if lc.is_constant() {
            if main.map_or(true, |m| f.degree_in(v) > f.degree_in(m)) {
                main = Some(v);
            }
        }
    }
    match main {
        Some(main) => {
            let lift_vars: Vec<usize> =
                effective.iter().copied().filter(|&v| v != main).collect();
            let content = super::gcd::content_in(f, main)?;
            if !content.is_constant() {
                let mut out = factor_squarefree_affine(&content)?;
                out.extend(factor_squarefree_affine(&f.exact_div(&content)?)?);
                return Ok(out);
            }
            let result = factor_squarefree_main(f, main, &lift_vars)?;
            Ok(result.into_iter().map(|g| g.unit_normal().0).collect())
        }
        None => {
            // monicize: F*(v) = L^(d-1) F(v / L) with L = lc; factors map back
            let main = *effective
                .iter()
                .min_by_key(|&&v| f.degree_in(v))
                .unwrap();
            let d = f.degree_in(main).unwrap();
            let lc = f.leading_coeff_in(main);
            let mut fstar = MPoly::zero(&vars);
            for k in 0..=d {
                let ck = f.coeff_of(main, k);
                if ck.is_zero() {
                    continue;
                }
                let term = &(&ck * &lc.pow((d - k) as u32)) * &MPoly::monomial_exp(&vars, main, k);
                fstar = &fstar + &term;
            }
            // fstar may no longer be squarefree in corner cases; take its part
            let fstar = squarefree_part(&fstar)?;
            let sub = factor_squarefree_affine(&fstar)?;
            let mut out = Vec::new();
            for g in sub {
                // map back: v -> v * L, then primitive part
                let dg = g.degree_in(main).unwrap_or(0);
                let mut h = MPoly::zero(&vars);
                for k in 0..=dg {
                    let ck = g.coeff_of(main, k);
                    if ck.is_zero() {
                        continue;
                    }
                    let term =
                        &(&ck * &lc.pow(k as u32)) * &MPoly::monomial_exp(&vars, main, k);
                    h = &h + &term;
                }
                let h = h.unit_normal().0;
                let (h, _) = h.strip_monomial_content();
                let h = h.unit_normal().0;
                if !h.is_constant() && f.exact_div(&h).is_ok() {
                    out.push(h);
                }
            }
            // keep only factors that jointly reproduce f
            let mut prod = MPoly::one(&vars);
            for g in &out {
                prod = &prod * g;
            }
            if f.eq_up_to_scalar(&prod) {
                Ok(out)
            } else {
                // fall back: treat as irreducible (verified-by-division rule:
                // never report a wrong factorization)
                Ok(vec![f.unit_normal().0])
            }
        }
    }
}

/// Factors a bihomogeneous form over Q into bihomogeneous factors whose
/// product equals the input up to a scalar unit (always re-verified).
pub fn factor_biform(form: &BiForm, cfg: &FactorConfig) -> Result<Vec<(BiForm, u32)>> {
    let (a, b) = form.bidegree();
    if a > cfg.max_bidegree.0 || b > cfg.max_bidegree.1 {
        return Err(Error::DegreeCapExceeded(format!(
            "bidegree ({a},{b}) exceeds cap ({},{})",
            cfg.max_bidegree.0, cfg.max_bidegree.1
        )));
    }
    let vars = form.vars().clone();
    let groups = form.groups().clone();
    let mut out: Vec<(BiForm, u32)> = Vec::new();

    let (stripped, content) = form.poly().strip_monomial_content();
    for (v, &e) in content.0.iter().enumerate() {
        if e != 0 {
            out.push((
                BiForm::new(MPoly::var_idx(&vars, v), groups.clone())?,
                e as u32,
            ));
        }
    }
    let stripped_form = BiForm::new(stripped, groups.clone())?;
    let affine = stripped_form.dehomogenize();
    if !affine.is_constant() {
        for (g, m) in factor_affine_over_q(&affine)? {
            let rehom = rehomogenize(&g, &groups)?;
            out.push((rehom, m));
        }
    }

    // verify: product of factors equals the input up to a scalar unit
    let mut prod = MPoly::one(&vars);
    for (g, m) in &out {
        prod = &prod * &g.poly().pow(*m);
    }
    let ratio = form.poly().exact_div(&prod)?;
    if ratio.constant_value().is_none() {
        return Err(Error::Inconsistent(
            "biform factorization verification failed".into(),
        ));
    }
    out.sort_by(|x, y| {
        x.0.bidegree()
            .cmp(&y.0.bidegree())
            .then_with(|| x.0.poly().to_text().cmp(&y.0.poly().to_text()))
    });
    Ok(out)
}
