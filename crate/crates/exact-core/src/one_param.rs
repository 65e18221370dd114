use std::fmt;

use num_traits::Zero;

use crate::Rational;

/// A one-parameter subgroup of the diagonal torus, recorded by its weight
/// triple `(a, b, c)` with `a + b + c = 0`.
///
/// The normalized representatives are `λ_r = (1, r, -1-r)`: after sorting the
/// weights in descending order and rescaling the leading weight to `1`, the
/// middle weight `r` always lands in `[-1/2, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneParamSubgroup {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl OneParamSubgroup {
    /// `λ(a, b) = (a, b, -a-b)`.
    pub fn new(a: Rational, b: Rational) -> Option<Self> {
        let c = -(a.clone() + b.clone());
        Some(OneParamSubgroup { a, b, c })
    }

    /// Build from a full triple, checking that the weights sum to zero.
    pub fn from_weights(a: Rational, b: Rational, c: Rational) -> Option<Self> {
        if (a.clone() + b.clone() + c.clone()).is_zero() {
            Some(OneParamSubgroup { a, b, c })
        } else {
            None
        }
    }

    /// `λ_r = (1, r, -1-r)`.
    pub fn lambda_r(r: Rational) -> Self {
        let c = -(Rational::from_integer(1.into()) + r.clone());
        OneParamSubgroup {
            a: Rational::from_integer(1.into()),
            b: r,
            c,
        }
    }

    /// `λ_0 = (1, 0, -1)`.
    pub fn lambda0() -> Self {
        Self::lambda_r(Rational::zero())
    }

    /// `λ_1 = (1, 1, -2)`.
    pub fn lambda1() -> Self {
        Self::lambda_r(Rational::from_integer(1.into()))
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// The inverse subgroup `λ^{-1}` (all weights negated).
    pub fn inverse(&self) -> Self {
        OneParamSubgroup {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
        }
    }

    /// Weights as a triple in the fixed coordinate order `(x, y, z)`.
    pub fn weights(&self) -> [Rational; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Normalized form `λ_r` with `r ∈ [-1/2, 1]`, together with the
    /// permutation of coordinates that sorts the weights in descending
    /// order.  Returns `None` for the trivial subgroup.
    ///
    /// The permutation is reported as the array `p` with `p[new] = old`.
    pub fn normalized(&self) -> Option<(Self, [usize; 3])> {
        if self.is_trivial() {
            return None;
        }
        let mut idx = [0usize, 1, 2];
        let w = self.weights();
        // stable sort descending by weight
        idx.sort_by(|&p, &q| w[q].cmp(&w[p]));
        let top = w[idx[0]].clone();
        debug_assert!(top > Rational::zero());
        let r = w[idx[1]].clone() / top;
        Some((Self::lambda_r(r), idx))
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
