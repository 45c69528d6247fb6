use super::biform::{bihomogenize, groups_p1p1, vars_xyuzw, vars_xyz};
use super::*;
use crate::exactnum::{rat_int, Scalar};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn vxy() -> VarSet {
    VarSet::new(vec!["x", "y"])
}

fn vmsr() -> VarSet {
    VarSet::new(vec!["m", "s", "r"])
}

fn p(src: &str, vars: &VarSet) -> MPoly {
    parse_poly(src, vars).unwrap()
}

#[test]
fn ring_ops_basics() {
    let v = vxy();
    let a = p("x+y", &v);
    let b = p("x-y", &v);
    assert_eq!(&a * &b, p("x^2-y^2", &v));
    assert_eq!(&a + &b, p("2*x", &v));
    assert_eq!(p("x^2-y^2", &v).exact_div(&a).unwrap(), b);
    assert!(p("x^2+1", &v).exact_div(&p("x+1", &v)).is_err());
}

#[test]
fn parse_print_roundtrip_examples() {
    let v = vars_xyz();
    for src in [
        "-x*y - 2*z + x^2*z + y^2*z - x*y*z^2 + z^3",
        "1/2*x - 3*y^2 + 7/3",
        "x^2*y*z^3 - 1",
        "0",
    ] {
        let q = p(src, &v);
        assert_eq!(parse_poly(&q.to_text(), &v).unwrap(), q);
    }
    // Laurent
    let vm = vmsr();
    let q = p("m^-2*s^-2*r + m*s", &vm);
    assert_eq!(parse_poly(&q.to_text(), &vm).unwrap(), q);
    // surd coefficients
    let q = p("(1+sqrt(2))*x + 1/2*sqrt(2)*y^2 - 3", &vxy());
    assert_eq!(parse_poly(&q.to_text(), &vxy()).unwrap(), q);
}

#[test]
fn substitution_examples() {
    let v = vars_xyz();
    // identity
    let f = p("x^2*z - y", &v);
    let images: Vec<MPoly> = (0..3).map(|i| MPoly::var_idx(&v, i)).collect();
    assert_eq!(f.substitute(&v, &images), f);
    // (x^2) with x -> z+1
    let g = p("x^2", &v);
    let mut im = images.clone();
    im[0] = p("z+1", &v);
    assert_eq!(g.substitute(&v, &im), p("z^2+2*z+1", &v));
}

#[test]
fn derivative_examples() {
    let v = vars_xyz();
    assert_eq!(
        p("x^2*z", &v).partial_derivative(0),
        p("2*x*z", &v)
    );
    assert_eq!(p("5", &v).partial_derivative(2), MPoly::zero(&v));
}

#[test]
fn clear_denominators_records_unit() {
    let vm = vmsr();
    let q = p("m^-2*s^-2*r + m*s^-1", &vm);
    let (cleared, unit) = q.clear_denominators();
    assert!(!cleared.is_laurent());
    assert_eq!(cleared, p("r + m^3*s", &vm));
    assert_eq!(&unit.0[..], &[2, 2, 0]);
}

#[test]
fn gcd_examples() {
    let v = vmsr();
    // gcd(p, 0) = normalized p
    let q = p("2*m*s - 4*r", &v);
    assert_eq!(
        gcd_multivariate(&q, &MPoly::zero(&v)).unwrap(),
        p("m*s - 2*r", &v)
    );
    // reconstruct a 15-term style product: gcd(rs*p, (s^2-1)*p) = p
    let core = p("r - m^2*r + m*s - m^3*s + 2*m*r^2*s", &v);
    let a = &p("r*s", &v) * &core;
    let b = &p("s^2-1", &v) * &core;
    let g = gcd_multivariate(&a, &b).unwrap();
    assert!(g.eq_up_to_scalar(&core.unit_normal().0));
    assert!(g.divides(&a) && g.divides(&b));
    // cofactors coprime
    let ga = a.exact_div(&g).unwrap();
    let gb = b.exact_div(&g).unwrap();
    assert!(gcd_multivariate(&ga, &gb).unwrap().is_constant());
}

#[test]
fn resultant_examples() {
    let v = VarSet::new(vec!["x", "t", "b", "c"]);
    let r = resultant(&p("x^2-2", &v), &p("x-t", &v), 0).unwrap();
    assert_eq!(r, p("t^2-2", &v));
    // discriminant identity on x^2 + bx + c, up to sign
    let f = p("x^2 + b*x + c", &v);
    let d = resultant(&f, &f.partial_derivative(0), 0).unwrap();
    assert!(d == p("4*c - b^2", &v) || d == p("b^2 - 4*c", &v));
}

#[test]
fn univariate_factor_examples() {
    let v = vars_xyz();
    let cfg = FactorConfig::default();
    // z^3 - 2z = z (z - sqrt2)(z + sqrt2) over Q(sqrt(2))
    let f = p("z^3 - 2*z", &v);
    let fac = univariate_factor(&f, 2, &cfg).unwrap();
    assert_eq!(fac.factors.len(), 3);
    assert!(fac
        .factors
        .iter()
        .all(|(g, m, _)| g.degree_in(2) == Some(1) && *m == 1));
    assert_eq!(fac.product(&v), f);
    // z^2 - 4 = (z-2)(z+2)
    let f = p("z^2 - 4", &v);
    let fac = univariate_factor(&f, 2, &cfg).unwrap();
    assert_eq!(fac.factors.len(), 2);
    assert_eq!(fac.product(&v), f);
    // irreducible cubic errors (unsplittable over a quadratic field)
    let f = p("z^3 - z - 1", &v);
    assert!(matches!(
        univariate_factor(&f, 2, &cfg),
        Err(crate::error::Error::UnsplittableFactor(_))
    ));
}

#[test]
fn bihomogenize_examples() {
    let xyz = vars_xyz();
    let f = p("-x*y - 2*z + x^2*z + y^2*z - x*y*z^2 + z^3", &xyz);
    let form = bihomogenize(&f).unwrap();
    assert_eq!(form.bidegree(), (2, 3));
    let expected = p(
        "-w^3*x*y - 2*u^2*w^2*z + w^2*x^2*z + w^2*y^2*z - w*x*y*z^2 + u^2*z^3",
        &vars_xyuzw(),
    );
    assert_eq!(form.poly(), &expected);
    form.check_euler_relations().unwrap();
    // dehomogenize is the identity on f
    assert_eq!(form.affine_xyz(), f);

    // constant
    let c = p("1", &xyz);
    assert_eq!(bihomogenize(&c).unwrap().bidegree(), (0, 0));

    // the (2,2) surgery form
    let f = p("x^2 + y^2 - x*y*z + z^2 - 2", &xyz);
    let form = bihomogenize(&f).unwrap();
    assert_eq!(form.bidegree(), (2, 2));
    let expected = p(
        "w^2*x^2 + w^2*y^2 - w*x*y*z + u^2*(z^2 - 2*w^2)",
        &vars_xyuzw(),
    );
    assert_eq!(form.poly(), &expected);
}

#[test]
fn factor_biform_branch_locus() {
    // g = -w^3 x y + w^2 x^2 z + w^2 y^2 z - w x y z^2 on P^1 x P^1
    // = -w (wx - yz)(wy - xz) up to unit
    let v = vars_xyuzw();
    let g = p("-w^3*x*y + w^2*x^2*z + w^2*y^2*z - w*x*y*z^2", &v);
    let form = BiForm::new(g.clone(), groups_p1p1()).unwrap();
    let cfg = FactorConfig::default();
    let fac = factor_biform(&form, &cfg).unwrap();
    let texts: Vec<(String, u32)> = fac
        .iter()
        .map(|(f, m)| (f.poly().to_text(), *m))
        .collect();
    assert_eq!(fac.len(), 3);
    assert!(texts.iter().any(|(t, m)| t == "w" && *m == 1));
    let mut prod = MPoly::one(&v);
    for (f, m) in &fac {
        prod = &prod * &f.poly().pow(*m);
    }
    assert!(prod.eq_up_to_scalar(&g));
    let wanted = [p("w*x - y*z", &v), p("w*y - x*z", &v)];
    for w in wanted {
        assert!(
            fac.iter().any(|(f, _)| f.poly().eq_up_to_scalar(&w)),
            "missing factor {w}"
        );
    }
}

#[test]
fn factor_biform_irreducible_21_form() {
    // wx^2 + wy^2 - xyz admits no (1,.)x(1,.) splitting: its discriminant
    // y^2 (z^2 - 4w^2) as a quadratic in x is not a square
    let v = vars_xyuzw();
    let g = p("w*x^2 + w*y^2 - x*y*z", &v);
    let disc = p("y^2*z^2 - 4*w^2*y^2", &v); // b^2 - 4ac for a=w, b=-yz, c=wy^2
    let fac = factor_affine_over_q(&disc).unwrap();
    // square iff every factor has even multiplicity; z^2-4w^2 splits oddly
    assert!(fac.iter().any(|(_, m)| m % 2 == 1));
    let form = BiForm::new(g.clone(), groups_p1p1()).unwrap();
    let out = factor_biform(&form, &FactorConfig::default()).unwrap();
    assert_eq!(out.len(), 1);
    assert!(out[0].0.poly().eq_up_to_scalar(&g));
}

#[test]
fn factor_biform_roundtrip_random_products() {
    let v = vars_xyuzw();
    let f = p("w*x^2 + w*y^2 - x*y*z", &v);
    let g = p("x^2*w^2 + y^2*w^2 - x*y*z*w + u^2*z^2 - 2*u^2*w^2", &v);
    let prod = &f.pow(1) * &g;
    let form = BiForm::new(prod.clone(), super::biform::groups_p2p1()).unwrap();
    let fac = factor_biform(&form, &FactorConfig::default()).unwrap();
    let mut back = MPoly::one(&v);
    for (q, m) in &fac {
        back = &back * &q.poly().pow(*m);
    }
    assert!(back.eq_up_to_scalar(&prod));
    assert_eq!(fac.len(), 2);
}

#[test]
fn trivariate_factor_splits_components() {
    // product of shapes that occur as character-variety components
    let v = vars_xyz();
    let c1 = p("x^2 + y^2 - x*y*z + z^2 - 2", &v);
    let c2 = p("x^2 + y^2 - x*y*z + z^2 - 3", &v);
    let c3 = p("-x*y - 2*z + x^2*z + y^2*z - x*y*z^2 + z^3", &v);
    let prod = &(&c1 * &c2) * &c3;
    let fac = factor_affine_over_q(&prod).unwrap();
    assert_eq!(fac.len(), 3);
    for c in [&c1, &c2, &c3] {
        assert!(
            fac.iter().any(|(q, m)| *m == 1 && q.eq_up_to_scalar(c)),
            "missing component {c}"
        );
    }
}

#[test]
fn eval_homomorphism_randomized() {
    let v = vmsr();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let rand_poly = |rng: &mut StdRng| {
            let mut q = MPoly::zero(&v);
            for _ in 0..rng.random_range(1..6) {
                let e = Monomial(
                    vec![
                        rng.random_range(0..4i32),
                        rng.random_range(0..4i32),
                        rng.random_range(0..3i32),
                    ]
                    .into_boxed_slice(),
                );
                q = &q
                    + &MPoly::from_term(&v, e, Scalar::from_int(rng.random_range(-5..6)));
            }
            q
        };
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        let pt: Vec<Scalar> = (0..3)
            .map(|_| Scalar::Rat(crate::exactnum::rat(rng.random_range(-9..10), rng.random_range(1..5))))
            .collect();
        assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }
}

#[test]
fn gcd_divides_randomized() {
    let v = vxy();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let rand_poly = |rng: &mut StdRng| {
            let mut q = MPoly::zero(&v);
            for _ in 0..rng.random_range(1..4) {
                let e = Monomial(
                    vec![rng.random_range(0..3i32), rng.random_range(0..3i32)].into_boxed_slice(),
                );
                q = &q + &MPoly::from_term(&v, e, Scalar::from_int(rng.random_range(-4..5)));
            }
            q
        };
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let g = gcd_multivariate(&a, &b).unwrap();
        if g.is_zero() {
            continue;
        }
        assert!(g.divides(&a), "gcd {g} does not divide {a}");
        assert!(g.divides(&b), "gcd {g} does not divide {b}");
        let (qa, qb) = (a.exact_div(&g).unwrap(), b.exact_div(&g).unwrap());
        assert!(gcd_multivariate(&qa, &qb).unwrap().is_constant());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_roundtrip_random(terms in proptest::collection::vec(
        (0..4i32, 0..4i32, -3..4i32, -9..10i64, 1..5i64), 1..8))
    {
        let v = vmsr();
        let mut q = MPoly::zero(&v);
        for (a, b, c, num, den) in terms {
            let e = Monomial(vec![a, b, c].into_boxed_slice());
            q = &q + &MPoly::from_term(&v, e, Scalar::Rat(crate::exactnum::rat(num, den)));
        }
        let back = parse_poly(&q.to_text(), &v).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn unit_normal_leading_positive(n in -20i64..20, d in 1i64..6) {
        let v = vxy();
        if n != 0 {
            let q = p("x^2*y - 3*x", &v).scale(&Scalar::Rat(crate::exactnum::rat(n, d)));
            let (nf, unit) = q.unit_normal();
            prop_assert_eq!(nf.scale(&unit), q);
            let lead = nf.leading_coeff();
            let (a, _) = lead.parts();
            prop_assert!(a > crate::exactnum::rat_int(0));
        }
    }
}

#[test]
fn unit_normal_integer_content() {
    let v = vxy();
    let q = p("4*x^2 - 6*y", &v);
    let (nf, unit) = q.unit_normal();
    assert_eq!(nf, p("2*x^2 - 3*y", &v));
    assert_eq!(unit, Scalar::from_int(2));
    let q = p("-x + y", &v);
    let (nf, _) = q.unit_normal();
    assert_eq!(nf, p("x - y", &v));
    assert_eq!(rat_int(1), rat_int(1));
}
