use std::cmp::Ordering;
use std::fmt;

use crate::{OneParamSubgroup, Rational};

/// A monomial `x^i y^j z^k` in the three plane coordinates.
///
/// The derived equality is exponent-wise; the order is graded-lexicographic
/// with `x > y > z`: first compare total degree, then compare exponent
/// vectors lexicographically.  This order is used only as a deterministic
/// tie-break — every result that must be order-independent is tested as such.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial { i, j, k }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.i + other.i, self.j + other.j, self.k + other.k)
    }

    /// Whether `self` divides `other` exponent-wise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.i <= other.i && self.j <= other.j && self.k <= other.k
    }

    /// Pairing with a diagonal weight triple: `a·i + b·j + c·k`.
    pub fn weight(&self, lambda: &OneParamSubgroup) -> Rational {
        lambda.a.clone() * Rational::from_integer(self.i.into())
            + lambda.b.clone() * Rational::from_integer(self.j.into())
            + lambda.c.clone() * Rational::from_integer(self.k.into())
    }

    /// All monomials of the given total degree, in descending graded-lex
    /// order (so `x^d` first, `z^d` last).  The position of a monomial in
    /// this list is the canonical column index used by the linear algebra.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                out.push(Monomial::new(i, j, d - i - j));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| (self.i, self.j, self.k).cmp(&(other.i, other.j, other.k)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (var, e) in [("x", self.i), ("y", self.j), ("z", self.k)] {
            match e {
                0 => {}
                1 => parts.push(var.to_string()),
                _ => parts.push(format!("{var}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}
