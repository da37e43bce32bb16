use crate::polyring::{Budget, Polynomial, PolynomialRing};
use crate::{BudgetExhausted, Error, Result};

use super::{dimension, variety_is_empty, Ideal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Indeterminacy {
    /// The presentation has `generators` equations for codimension `codimension`.
    NotCompleteIntersection { generators: usize, codimension: usize },
    Budget(BudgetExhausted),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothnessVerdict {
    Smooth { dimension: usize, codimension: usize },
    /// `witness` is `I` plus all maximal minors of the Jacobian; its
    /// (nonempty) variety is the singular locus.
    Singular { dimension: usize, codimension: usize, witness: Ideal },
    Indeterminate(Indeterminacy),
}

impl SmoothnessVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothnessVerdict::Smooth { .. })
    }

    pub fn witness(&self) -> Option<&Ideal> {
        match self {
            SmoothnessVerdict::Singular { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Laplace expansion along the first row. The 0×0 determinant is 1.
pub fn determinant(rows: &[Vec<Polynomial>], one: &Polynomial) -> Polynomial {
    let n = rows.len();
    if n == 0 {
        return one.clone();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    if n == 2 {
        return &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]);
    }
    let mut acc = one.ring().zero();
    for col in 0..n {
        if rows[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &rows[0][col] * &determinant(&minor, one);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// All `k×k` minors of the Jacobian of `polys` (one row per polynomial),
/// taken over every `k`-subset of columns in lexicographic order, where
/// `k = polys.len()`.
/// With no polynomials the single 0×0 minor `1` is returned.
pub fn jacobian_minors(ring: &PolynomialRing, polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if polys.iter().any(|p| p.ring() != ring) {
        return Err(Error::contract("Jacobian of polynomials from different rings"));
    }
    let n = ring.nvars();
    let k = polys.len();
    let jac: Vec<Vec<Polynomial>> = polys.iter().map(|p| (0..n).map(|j| p.derivative(j)).collect()).collect();
    let one = ring.one();
    let mut out = Vec::new();
    let mut cols: Vec<usize> = (0..k).collect();
    if k > n {
        return Ok(out);
    }
    loop {
        let sub: Vec<Vec<Polynomial>> = jac.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
        let d = determinant(&sub, &one);
        if !d.is_zero() {
            out.push(d);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cols[i] != i + n - k {
                break;
            }
            if i == 0 {
                return Ok(out);
            }
        }
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Jacobian criterion for a complete-intersection presentation.
///
/// With `d = dim I` and `c = n − d`, a presentation by exactly `c`
/// generators is smooth iff `I + (c×c minors)` has no complex points.
/// Other presentations, and budget exhaustion, give `Indeterminate`.
pub fn smoothness_check(ideal: &Ideal, budget: &Budget) -> Result<SmoothnessVerdict> {
    let n = ideal.ring().nvars();
    let d = match dimension(ideal, budget) {
        Ok(d) => d,
        Err(Error::Budget(b)) => return Ok(SmoothnessVerdict::Indeterminate(Indeterminacy::Budget(b))),
        Err(e) => return Err(e),
    };
    if d < 0 {
        return Err(Error::contract("smoothness of the empty scheme (1 is in the ideal)"));
    }
    let dimension = d as usize;
    let codimension = n - dimension;
    let gens = ideal.generators();
    if gens.len() != codimension {
        return Ok(SmoothnessVerdict::Indeterminate(Indeterminacy::NotCompleteIntersection {
            generators: gens.len(),
            codimension,
        }));
    }
    let witness = ideal.with(jacobian_minors(ideal.ring(), gens)?)?;
    match variety_is_empty(&witness, budget) {
        Ok(true) => Ok(SmoothnessVerdict::Smooth { dimension, codimension }),
        Ok(false) => Ok(SmoothnessVerdict::Singular { dimension, codimension, witness }),
        Err(Error::Budget(b)) => Ok(SmoothnessVerdict::Indeterminate(Indeterminacy::Budget(b))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealcalc::radical_membership;
    use crate::polyring::PolynomialRing;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn sl2_is_smooth() {
        let r = PolynomialRing::grevlex(&["x", "y", "U", "V"]);
        let i = Ideal::parse(&r, &["x*V - y*U - 1"]).unwrap();
        assert_eq!(smoothness_check(&i, &b()).unwrap(), SmoothnessVerdict::Smooth { dimension: 3, codimension: 1 });
    }

    #[test]
    fn brieskorn_singular_at_origin() {
        let r = PolynomialRing::grevlex(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2 + y^3 + z^7"]).unwrap();
        let v = smoothness_check(&i, &b()).unwrap();
        let w = v.witness().expect("singular").clone();
        for var in ["x", "y", "z"] {
            assert!(radical_membership(&r.parse(var).unwrap(), &w, &b()).unwrap());
        }
    }

    #[test]
    fn double_point_on_line() {
        let r = PolynomialRing::grevlex(&["x"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        let v = smoothness_check(&i, &b()).unwrap();
        assert!(matches!(v, SmoothnessVerdict::Singular { dimension: 0, codimension: 1, .. }));
    }

    #[test]
    fn spheres_are_smooth() {
        for k in 2..=4 {
            let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
            let r = PolynomialRing::new(names.iter().cloned(), Default::default()).unwrap();
            let eq = names.iter().map(|n| format!("{n}^2")).collect::<Vec<_>>().join(" + ") + " - 1";
            let i = Ideal::parse(&r, &[&eq]).unwrap();
            assert!(smoothness_check(&i, &b()).unwrap().is_smooth(), "k = {k}");
        }
    }

    #[test]
    fn redundant_presentation_is_indeterminate() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let i = Ideal::parse(&r, &["x", "x*y"]).unwrap();
        assert_eq!(
            smoothness_check(&i, &b()).unwrap(),
            SmoothnessVerdict::Indeterminate(Indeterminacy::NotCompleteIntersection { generators: 2, codimension: 1 })
        );
    }

    #[test]
    fn affine_space_is_smooth() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        assert!(smoothness_check(&Ideal::zero(&r), &b()).unwrap().is_smooth());
    }

    #[test]
    fn minors_of_two_by_three() {
        let r = PolynomialRing::grevlex(&["x", "y", "z"]);
        let p = |s: &str| r.parse(s).unwrap();
        let m = jacobian_minors(&r, &[p("x"), p("y")]).unwrap();
        // columns (x,y) -> 1, (x,z) -> 0 dropped, (y,z) -> 0 dropped
        assert_eq!(m, vec![r.one()]);
        let rows = vec![vec![p("1"), p("2"), p("3")], vec![p("4"), p("5"), p("6")], vec![p("7"), p("8"), p("10")]];
        assert_eq!(determinant(&rows, &r.one()), p("-3"));
    }
}
