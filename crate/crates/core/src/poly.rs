use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, Field};

/// Dense univariate polynomial, coefficients low-to-high with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::monomial(Elem::ONE, 0)
    }

    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `c x^d`.
    pub fn monomial(c: Elem, d: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(f: &Field, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(f, &Poly::new(vec![f.neg(r), Elem::ONE]))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, f: &Field, c: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_eval() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::new(vec![Elem(1), Elem(0), Elem(0)]).degree(), Some(0));
        // 1 + 2x + 3x^2 at x = 2: 1 + 4 + 12 = 17 = 3 mod 7
        let p = Poly::new(vec![Elem(1), Elem(2), Elem(3)]);
        assert_eq!(p.eval(&f, Elem(2)), Elem(3));
        assert_eq!(p.coeff(5), Elem::ZERO);
    }

    #[test]
    fn roots_product() {
        let f = Field::new(5, 1).unwrap();
        let p = Poly::from_roots(&f, &[Elem(1), Elem(2)]);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(p.coeffs(), &[Elem(2), Elem(2), Elem(1)]);
        for x in f.elements() {
            let zero = x == Elem(1) || x == Elem(2);
            assert_eq!(p.eval(&f, x).is_zero(), zero);
        }
    }
}
