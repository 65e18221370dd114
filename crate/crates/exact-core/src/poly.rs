use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::{CoreError, Monomial, Rational, RationalMatrix};

/// A homogeneous polynomial in `x, y, z` of a fixed degree.
///
/// The zero polynomial is represented by an empty term map together with an
/// explicit degree tag, so graded pieces stay well-typed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single monomial with coefficient one.
    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    /// Single term `c * m`.
    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        p.add_term(m, c);
        p
    }

    /// The variables as degree-one polynomials.
    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0, 0))
    }
    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 1, 0))
    }
    pub fn z() -> Self {
        Self::monomial(Monomial::new(0, 0, 1))
    }

    /// Linear form `a·x + b·y + c·z`.
    pub fn linear_form(a: Rational, b: Rational, c: Rational) -> Self {
        let mut p = Self::zero(1);
        p.add_term(Monomial::new(1, 0, 0), a);
        p.add_term(Monomial::new(0, 1, 0), b);
        p.add_term(Monomial::new(0, 0, 1), c);
        p
    }

    /// Build from explicit terms; all monomials must share one degree.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self, CoreError> {
        let collected: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        let mut degrees: Vec<u32> = collected.iter().map(|(m, _)| m.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        match degrees.len() {
            0 => Ok(Self::zero(0)),
            1 => {
                let mut p = Self::zero(degrees[0]);
                for (m, c) in collected {
                    p.add_term(m, c);
                }
                Ok(p)
            }
            _ => Err(CoreError::Inhomogeneous(degrees)),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add a single term, dropping cancellations.  Panics on degree mismatch
    /// (callers construct through checked entry points).
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.degree(), self.degree, "term degree mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HomogeneousPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HomogeneousPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiply by a bare monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.degree + m.degree());
        for (m1, c1) in self.terms() {
            out.add_term(m1.mul(m), c1.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::term(Monomial::new(0, 0, 0), Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Coefficient row of this polynomial over the canonical descending
    /// graded-lex basis of its degree.
    pub fn coefficient_row(&self) -> Vec<Rational> {
        let basis = Monomial::all_of_degree(self.degree);
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    /// Rebuild a polynomial from a coefficient row over the canonical basis.
    pub fn from_coefficient_row(degree: u32, row: &[Rational]) -> Self {
        let basis = Monomial::all_of_degree(degree);
        assert_eq!(basis.len(), row.len(), "row length mismatch");
        let mut p = Self::zero(degree);
        for (m, c) in basis.into_iter().zip(row.iter()) {
            p.add_term(m, c.clone());
        }
        p
    }

    /// The substituted polynomial `A·f` with `(A·f)(v) = f(Aᵗ v)`.
    ///
    /// Each variable is replaced by the linear form read off the matching
    /// column of `A`; the degree is preserved.  Errors on singular `A`.
    pub fn substitute(&self, a: &RationalMatrix) -> Result<Self, CoreError> {
        assert_eq!((a.rows(), a.cols()), (3, 3), "expected a 3x3 matrix");
        if a.determinant().is_zero() {
            return Err(CoreError::SingularMatrix);
        }
        let images: Vec<HomogeneousPolynomial> = (0..3)
            .map(|col| {
                Self::linear_form(
                    a.get(0, col).clone(),
                    a.get(1, col).clone(),
                    a.get(2, col).clone(),
                )
            })
            .collect();
        let mut out = Self::zero(self.degree);
        for (m, c) in self.terms() {
            let term = images[0]
                .pow(m.i)
                .mul(&images[1].pow(m.j))
                .mul(&images[2].pow(m.k))
                .scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }
}

fn fmt_coefficient(c: &Rational) -> String {
    format!("{c}")
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending graded-lex, matching the canonical basis order
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{}", fmt_coefficient(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coefficient(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn m(i: u32, j: u32, k: u32) -> Monomial {
        Monomial::new(i, j, k)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = HomogeneousPolynomial::term(m(0, 2, 0), rat(1))
            .add(&HomogeneousPolynomial::term(m(1, 0, 1), rat(1)));
        assert_eq!(p.num_terms(), 2);
        assert!(p.sub(&p).is_zero());
        let q = p.mul(&HomogeneousPolynomial::x());
        assert_eq!(q.degree(), 3);
        assert_eq!(q.coefficient(&m(1, 2, 0)), rat(1));
    }

    #[test]
    fn substitute_identity_fixes() {
        let p = HomogeneousPolynomial::term(m(0, 2, 0), rat(1))
            .add(&HomogeneousPolynomial::term(m(1, 0, 1), rat(1)));
        let id = RationalMatrix::identity(3);
        assert_eq!(p.substitute(&id).unwrap(), p);
    }

    #[test]
    fn substitute_diagonal_scales_conic() {
        // y^2 + x*z is fixed by diag(t, 1, 1/t)
        let p = HomogeneousPolynomial::term(m(0, 2, 0), rat(1))
            .add(&HomogeneousPolynomial::term(m(1, 0, 1), rat(1)));
        let d = RationalMatrix::diagonal(&[rat(2), rat(1), ratio(1, 2)]);
        assert_eq!(p.substitute(&d).unwrap(), p);
    }

    #[test]
    fn substitute_singular_rejected() {
        let zero = RationalMatrix::new(3, 3);
        assert!(HomogeneousPolynomial::x().substitute(&zero).is_err());
    }

    #[test]
    fn shear_substitution() {
        // y under the transpose convention with A = [[1,0,0],[s,1,0],[0,0,1]]:
        // column 1 of A is (0, 1, 0), so y stays y; column 0 is (1, s, 0),
        // so x becomes x + s*y.
        let shear = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        let img = HomogeneousPolynomial::x().substitute(&shear).unwrap();
        assert_eq!(img, HomogeneousPolynomial::x().add(&HomogeneousPolynomial::y()));
    }

    #[test]
    fn display_roundtrip_examples() {
        let p = HomogeneousPolynomial::from_terms([
            (m(3, 0, 0), rat(-1)),
            (m(2, 1, 0), ratio(1, 2)),
        ])
        .unwrap();
        assert_eq!(p.to_string(), "-x^3 + 1/2*x^2*y");
    }
}
