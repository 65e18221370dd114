//! Sections of the model: triples of cubics with x·f + y·g + z·h = 0,
//! the distinguished 15-element basis, and the twisted SL₃ action
//! A·(f, g, h) := A (A·f, A·g, A·h)ᵀ.

use exact_core::{
    parse_polynomial, rat, HomogeneousPolynomial, Rational, RationalMatrix,
};
use num_traits::Zero;

use crate::FinalModelError;

/// A triple of cubics (f, g, h) satisfying the linear relation
/// x·f + y·g + z·h = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    f: HomogeneousPolynomial,
    g: HomogeneousPolynomial,
    h: HomogeneousPolynomial,
}

impl Section {
    /// Build a section, validating degrees and the linear relation.
    pub fn new(
        f: HomogeneousPolynomial,
        g: HomogeneousPolynomial,
        h: HomogeneousPolynomial,
    ) -> Result<Self, FinalModelError> {
        for p in [&f, &g, &h] {
            if p.degree() != 3 {
                return Err(FinalModelError::WrongDegree(p.degree()));
            }
        }
        let relation = HomogeneousPolynomial::x()
            .mul(&f)
            .add(&HomogeneousPolynomial::y().mul(&g))
            .add(&HomogeneousPolynomial::z().mul(&h));
        if !relation.is_zero() {
            return Err(FinalModelError::EulerViolation);
        }
        Ok(Section { f, g, h })
    }

    pub fn components(&self) -> (&HomogeneousPolynomial, &HomogeneousPolynomial, &HomogeneousPolynomial) {
        (&self.f, &self.g, &self.h)
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.h.is_zero()
    }

    /// The 30 coefficients of (f, g, h) in the canonical cubic monomial
    /// basis, concatenated.
    pub fn coefficient_row(&self) -> Vec<Rational> {
        let mut row = self.f.coefficient_row();
        row.extend(self.g.coefficient_row());
        row.extend(self.h.coefficient_row());
        row
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Section {
            f: self.f.scale(c),
            g: self.g.scale(c),
            h: self.h.scale(c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Section {
            f: self.f.add(&other.f),
            g: self.g.add(&other.g),
            h: self.h.add(&other.h),
        }
    }

    /// Whether the two sections differ by a nonzero scalar.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let a = self.coefficient_row();
        let b = other.coefficient_row();
        let pivot = match a.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return false,
        };
        if b[pivot].is_zero() {
            return false;
        }
        let ratio = b[pivot].clone() / a[pivot].clone();
        a.iter().zip(b.iter()).all(|(x, y)| x.clone() * ratio.clone() == *y)
    }
}

/// The 15 basis sections e₀, …, e₁₄.
pub fn basis() -> Vec<Section> {
    let triples: [(&str, &str, &str); 15] = [
        ("x^2*y", "-x^3", "0"),
        ("x*y^2", "-x^2*y", "0"),
        ("y^3", "-x*y^2", "0"),
        ("x^2*z", "0", "-x^3"),
        ("x*z^2", "0", "-x^2*z"),
        ("z^3", "0", "-x*z^2"),
        ("x*y*z", "-x^2*z", "0"),
        ("x*y*z", "0", "-x^2*y"),
        ("y^2*z", "-x*y*z", "0"),
        ("y^2*z", "0", "-x*y^2"),
        ("y*z^2", "-x*z^2", "0"),
        ("y*z^2", "0", "-x*y*z"),
        ("0", "y^2*z", "-y^3"),
        ("0", "y*z^2", "-y^2*z"),
        ("0", "z^3", "-y*z^2"),
    ];
    triples
        .into_iter()
        .map(|(f, g, h)| {
            let cubic = |text: &str| {
                if text == "0" {
                    HomogeneousPolynomial::zero(3)
                } else {
                    parse_polynomial(text).expect("fixed basis data parses")
                }
            };
            Section::new(cubic(f), cubic(g), cubic(h)).expect("fixed basis data is valid")
        })
        .collect()
}

/// The twisted action A·(f, g, h) := A (A·f, A·g, A·h)ᵀ, which preserves
/// the linear relation because (x y z)·A·(A·f, A·g, A·h)ᵀ is the image of
/// x·f + y·g + z·h under A.
pub fn act(a: &RationalMatrix, s: &Section) -> Result<Section, FinalModelError> {
    if a.determinant().is_zero() {
        return Err(FinalModelError::SingularMatrix);
    }
    let moved: Vec<HomogeneousPolynomial> = [&s.f, &s.g, &s.h]
        .iter()
        .map(|p| p.substitute(a))
        .collect::<Result<_, _>>()?;
    let component = |row: usize| {
        let mut out = HomogeneousPolynomial::zero(3);
        for (col, p) in moved.iter().enumerate() {
            out = out.add(&p.scale(a.get(row, col)));
        }
        out
    };
    Section::new(component(0), component(1), component(2))
}

/// A projective coordinate vector (a₀ : … : a₁₄) in the basis e₀, …, e₁₄.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordVector([Rational; 15]);

impl CoordVector {
    pub fn new(coords: [Rational; 15]) -> Result<Self, FinalModelError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(FinalModelError::ZeroSection);
        }
        Ok(CoordVector(coords))
    }

    /// Build a vector from its nonzero entries.
    pub fn from_support(entries: &[(usize, Rational)]) -> Result<Self, FinalModelError> {
        let mut coords: [Rational; 15] = core::array::from_fn(|_| Rational::zero());
        for (i, c) in entries {
            coords[*i] = c.clone();
        }
        CoordVector::new(coords)
    }

    pub fn coords(&self) -> &[Rational; 15] {
        &self.0
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..15).filter(|&i| !self.0[i].is_zero()).collect()
    }

    /// The section Σ aᵢ eᵢ.
    pub fn section(&self) -> Section {
        let mut out = Section {
            f: HomogeneousPolynomial::zero(3),
            g: HomogeneousPolynomial::zero(3),
            h: HomogeneousPolynomial::zero(3),
        };
        for (e, a) in basis().iter().zip(self.0.iter()) {
            if !a.is_zero() {
                out = out.add(&e.scale(a));
            }
        }
        out
    }

    /// Whether the two vectors agree as projective points.
    pub fn proportional_to(&self, other: &Self) -> bool {
        let pivot = self
            .0
            .iter()
            .position(|c| !c.is_zero())
            .expect("coordinate vectors are nonzero");
        if other.0[pivot].is_zero() {
            return false;
        }
        let ratio = other.0[pivot].clone() / self.0[pivot].clone();
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(x, y)| x.clone() * ratio.clone() == *y)
    }
}

/// Express a section in the basis e₀, …, e₁₄, solving the 30×15 linear
/// system exactly.  Returns `None` for the zero section.
pub fn coordinates(s: &Section) -> Option<CoordVector> {
    if s.is_zero() {
        return None;
    }
    let target = s.coefficient_row();
    let columns: Vec<Vec<Rational>> = basis().iter().map(|e| e.coefficient_row()).collect();
    // augmented system [B | v] over the 30 cubic-pair coefficients
    let rows: Vec<Vec<Rational>> = (0..target.len())
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let (rref, pivots) = RationalMatrix::from_rows(rows).reduced_row_echelon();
    if pivots.contains(&15) {
        return None; // not in the span: impossible for a valid section
    }
    let mut coords: [Rational; 15] = core::array::from_fn(|_| rat(0));
    for (row, &col) in pivots.iter().enumerate() {
        coords[col] = rref.get(row, 15).clone();
    }
    CoordVector::new(coords).ok()
}
