//! Bihomogeneous forms on a product of projective spaces.
//!
//! The standard ambient space is P^2 x P^1 with coordinates (x,y,u | z,w);
//! branch curves live on P^1 x P^1 with coordinates (x,y | z,w).  A `BiForm`
//! is an `MPoly` that is homogeneous of degree `a` in the first group and
//! degree `b` in the second.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

use super::{MPoly, Monomial, VarSet};

/// Variable-group split defining the bigrading (indices into the varset).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiGroups {
    pub g1: Vec<usize>,
    pub g2: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiForm {
    base: MPoly,
    groups: BiGroups,
    bidegree: (i64, i64),
}

/// The (x, y, u, z, w) varset used by the projective pipeline.
pub fn vars_xyuzw() -> VarSet {
    VarSet::new(vec!["x", "y", "u", "z", "w"])
}

/// The (x, y, z) affine trace-coordinate varset.
pub fn vars_xyz() -> VarSet {
    VarSet::new(vec!["x", "y", "z"])
}

/// Groups for P^2 x P^1 over vars_xyuzw.
pub fn groups_p2p1() -> BiGroups {
    BiGroups {
        g1: vec![0, 1, 2],
        g2: vec![3, 4],
    }
}

/// Groups for P^1 x P^1 over vars_xyuzw (x,y | z,w); u must not occur.
pub fn groups_p1p1() -> BiGroups {
    BiGroups {
        g1: vec![0, 1],
        g2: vec![3, 4],
    }
}

impl BiForm {
    /// Wraps a polynomial after checking bihomogeneity.
    pub fn new(base: MPoly, groups: BiGroups) -> Result<BiForm> {
        base.assert_polynomial()?;
        if base.is_zero() {
            return Ok(BiForm {
                base,
                groups,
                bidegree: (0, 0),
            });
        }
        let (a, b) = {
            let first = base.terms().next().unwrap().0;
            let a: i64 = groups.g1.iter().map(|&v| first.0[v] as i64).sum();
            let b: i64 = groups.g2.iter().map(|&v| first.0[v] as i64).sum();
            for (m, _) in base.terms() {
                let ta: i64 = groups.g1.iter().map(|&v| m.0[v] as i64).sum();
                let tb: i64 = groups.g2.iter().map(|&v| m.0[v] as i64).sum();
                if ta != a || tb != b {
                    return Err(Error::Inconsistent(format!(
                        "not bihomogeneous: degrees ({ta},{tb}) and ({a},{b}) both occur"
                    )));
                }
            }
            (a, b)
        };
        Ok(BiForm {
            base,
            groups,
            bidegree: (a, b),
        })
    }

    pub fn poly(&self) -> &MPoly {
        &self.base
    }

    pub fn groups(&self) -> &BiGroups {
        &self.groups
    }

    pub fn bidegree(&self) -> (i64, i64) {
        self.bidegree
    }

    pub fn vars(&self) -> &VarSet {
        self.base.vars()
    }

    /// Symbolic Euler-relation check: sum_{v in g} v dF/dv = deg * F for
    /// both groups.
    pub fn check_euler_relations(&self) -> Result<()> {
        for (group, deg) in [
            (&self.groups.g1, self.bidegree.0),
            (&self.groups.g2, self.bidegree.1),
        ] {
            let mut acc = MPoly::zero(self.base.vars());
            for &v in group {
                let dv = self.base.partial_derivative(v);
                let xv = MPoly::var_idx(self.base.vars(), v);
                acc = &acc + &(&xv * &dv);
            }
            let rhs = self.base.scale(&Scalar::from_int(deg));
            if acc != rhs {
                return Err(Error::Inconsistent(
                    "Euler relation violated: form is not bihomogeneous".into(),
                ));
            }
        }
        Ok(())
    }

    /// Sets the last variable of each group to 1 (the affine chart used for
    /// factorization and trace-coordinate comparisons).
    pub fn dehomogenize(&self) -> MPoly {
        let mut p = self.base.clone();
        let one = Scalar::one();
        let h1 = *self.groups.g1.last().unwrap();
        let h2 = *self.groups.g2.last().unwrap();
        p = p.eval_var(h1, &one);
        p = p.eval_var(h2, &one);
        p
    }

    /// Dehomogenized polynomial renamed into the (x,y,z) varset.
    /// Only valid for the standard P^2 x P^1 layout.
    pub fn affine_xyz(&self) -> MPoly {
        let p = self.dehomogenize();
        let xyz = vars_xyz();
        MPoly::from_terms(
            &xyz,
            p.terms().map(|(m, c)| {
                (
                    Monomial(vec![m.0[0], m.0[1], m.0[3]].into_boxed_slice()),
                    c.clone(),
                )
            }),
        )
    }
}

/// Bihomogenizes an affine polynomial in (x,y,z) into a form on P^2 x P^1.
///
/// a = total degree in {x,y}, b = degree in z; each monomial is padded with
/// u^(a - deg_xy) w^(b - deg_z).
pub fn bihomogenize(f_affine: &MPoly) -> Result<BiForm> {
    f_affine.assert_polynomial()?;
    if f_affine.is_zero() {
        return Err(Error::Inconsistent("cannot bihomogenize zero".into()));
    }
    let xyz = vars_xyz();
    let f = if f_affine.vars() == &xyz {
        f_affine.clone()
    } else {
        f_affine.rename(&xyz)
    };
    let a = f.degree_in_set(&[0, 1]).unwrap_or(0);
    let b = f.degree_in(2).unwrap_or(0) as i64;
    let vars = vars_xyuzw();
    let base = MPoly::from_terms(
        &vars,
        f.terms().map(|(m, c)| {
            let (ex, ey, ez) = (m.0[0], m.0[1], m.0[2]);
            let eu = a - (ex as i64 + ey as i64);
            let ew = b - ez as i64;
            (
                Monomial(
                    vec![ex, ey, eu as i32, ez, ew as i32].into_boxed_slice(),
                ),
                c.clone(),
            )
        }),
    );
    BiForm::new(base, groups_p2p1())
}

/// Rehomogenizes an affine polynomial to a bihomogeneous form with the given
/// groups, padding with the last variable of each group.
pub fn rehomogenize(affine: &MPoly, groups: &BiGroups) -> Result<BiForm> {
    affine.assert_polynomial()?;
    let pad1 = *groups.g1.last().unwrap();
    let pad2 = *groups.g2.last().unwrap();
    if affine.depends_on(pad1) || affine.depends_on(pad2) {
        return Err(Error::Inconsistent(
            "rehomogenize input may not involve the padding variables".into(),
        ));
    }
    let head1: Vec<usize> = groups.g1[..groups.g1.len() - 1].to_vec();
    let head2: Vec<usize> = groups.g2[..groups.g2.len() - 1].to_vec();
    let a = affine.degree_in_set(&head1).unwrap_or(0);
    let b = affine.degree_in_set(&head2).unwrap_or(0);
    let base = MPoly::from_terms(
        affine.vars(),
        affine.terms().map(|(m, c)| {
            let mut e = m.0.to_vec();
            let da: i64 = head1.iter().map(|&v| m.0[v] as i64).sum();
            let db: i64 = head2.iter().map(|&v| m.0[v] as i64).sum();
            e[pad1] += (a - da) as i32;
            e[pad2] += (b - db) as i32;
            (Monomial(e.into_boxed_slice()), c.clone())
        }),
    );
    BiForm::new(base, groups.clone())
}
