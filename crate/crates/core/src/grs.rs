//! Generalized Reed-Solomon codes, their extended variants and closed-form duals.

use alloc::vec;
use alloc::vec::Vec;

use crate::codes::LinearCode;
use crate::error::{invalid, Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;

/// Parameters of `GRS_{k,n}(alpha, v)` or, with `extended`, `GRS_{k,n}(alpha, v, inf)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsSpec {
    field: Field,
    alpha: Vec<Elem>,
    v: Vec<Elem>,
    k: usize,
    extended: bool,
}

pub(crate) fn check_points(alpha: &[Elem], v: &[Elem]) -> Result<()> {
    if alpha.len() != v.len() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{} evaluation points but {} multipliers",
            alpha.len(),
            v.len()
        )));
    }
    let mut sorted = alpha.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedPoint(w[0].0));
    }
    if let Some(pos) = v.iter().position(|x| x.is_zero()) {
        return Err(Error::ZeroMultiplier(pos));
    }
    Ok(())
}

pub(crate) fn check_codes(field: &Field, elems: &[Elem]) -> Result<()> {
    for &e in elems {
        field.elem(e.0)?;
    }
    Ok(())
}

/// `v * alpha^i` evaluated coordinatewise.
pub(crate) fn scaled_powers(f: &Field, alpha: &[Elem], v: &[Elem], i: u64) -> Vec<Elem> {
    alpha
        .iter()
        .zip(v)
        .map(|(&a, &s)| f.mul(s, f.pow(a, i)))
        .collect()
}

impl GrsSpec {
    /// Requires distinct points, nonzero multipliers and `1 <= k <= n`.
    pub fn new(field: Field, alpha: Vec<Elem>, v: Vec<Elem>, k: usize, extended: bool) -> Result<Self> {
        check_codes(&field, &alpha)?;
        check_codes(&field, &v)?;
        check_points(&alpha, &v)?;
        let n = alpha.len();
        if k == 0 || k > n {
            return Err(invalid!("need 1 <= k <= n, got k = {k}, n = {n}"));
        }
        Ok(GrsSpec {
            field,
            alpha,
            v,
            k,
            extended,
        })
    }

    /// Unit multipliers.
    pub fn rs(field: Field, alpha: Vec<Elem>, k: usize, extended: bool) -> Result<Self> {
        let v = vec![Elem::ONE; alpha.len()];
        GrsSpec::new(field, alpha, v, k, extended)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[Elem] {
        &self.alpha
    }

    pub fn v(&self) -> &[Elem] {
        &self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn extended(&self) -> bool {
        self.extended
    }

    pub fn length(&self) -> usize {
        self.alpha.len() + usize::from(self.extended)
    }

    /// Rows `v * alpha^i`, `i < k`; the extended column is `e_k`.
    pub fn generator(&self) -> LinearCode {
        build_generator(&self.field, &self.alpha, &self.v, self.k, self.extended)
    }

    /// Closed-form dual: `GRS_{n-k,n}(alpha, u / v)` or `GRS_{n+1-k,n}(alpha, u / v, inf)`.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let u = u_vector(f, &self.alpha).expect("points validated");
        let w: Vec<Elem> = u
            .iter()
            .zip(&self.v)
            .map(|(&a, &b)| f.div(a, b).expect("nonzero multiplier"))
            .collect();
        let n = self.alpha.len();
        let dual_k = if self.extended { n + 1 - self.k } else { n - self.k };
        build_generator(f, &self.alpha, &w, dual_k, self.extended)
    }
}

fn build_generator(f: &Field, alpha: &[Elem], v: &[Elem], k: usize, extended: bool) -> LinearCode {
    let n = alpha.len();
    let cols = n + usize::from(extended);
    let mut g = Matrix::zeros(k, cols);
    for i in 0..k {
        for (j, e) in scaled_powers(f, alpha, v, i as u64).into_iter().enumerate() {
            g.set(i, j, e);
        }
    }
    if extended && k > 0 {
        g.set(k - 1, n, Elem::ONE);
    }
    LinearCode::new(f.clone(), g).expect("Vandermonde rows are independent")
}

/// `u_j = -prod_{i != j} (alpha_j - alpha_i)^{-1}`.
pub fn u_vector(f: &Field, alpha: &[Elem]) -> Result<Vec<Elem>> {
    if alpha.len() < 2 {
        return Err(invalid!("need at least two points"));
    }
    check_points(alpha, &vec![Elem::ONE; alpha.len()])?;
    alpha
        .iter()
        .enumerate()
        .map(|(j, &aj)| {
            let prod = f.product(
                alpha
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &ai)| f.sub(aj, ai)),
            );
            Ok(f.neg(f.inv(prod)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(codes: &[u32]) -> Vec<Elem> {
        codes.iter().map(|&c| Elem(c)).collect()
    }

    #[test]
    fn small_generator() {
        let f = Field::new(3, 1).unwrap();
        let c = GrsSpec::rs(f.clone(), elems(&[0, 1]), 2, false).unwrap().generator();
        assert_eq!(c.generator().row_vecs(), vec![elems(&[1, 1]), elems(&[0, 1])]);
        let e = GrsSpec::rs(f, elems(&[0, 1, 2]), 2, true).unwrap().generator();
        assert_eq!(e.length(), 4);
        let last: Vec<Elem> = (0..2).map(|r| e.generator().get(r, 3)).collect();
        assert_eq!(last, elems(&[0, 1]));
    }

    #[test]
    fn u_vector_small() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(u_vector(&f, &elems(&[0, 1])).unwrap(), elems(&[1, 2]));
        assert_eq!(u_vector(&f, &elems(&[1, 1])).unwrap_err(), Error::RepeatedPoint(1));
    }

    #[test]
    fn constructor_errors() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(
            GrsSpec::rs(f.clone(), elems(&[1, 2, 1]), 2, false).unwrap_err(),
            Error::RepeatedPoint(1)
        );
        assert_eq!(
            GrsSpec::new(f.clone(), elems(&[1, 2, 3]), elems(&[1, 0, 1]), 2, false).unwrap_err(),
            Error::ZeroMultiplier(1)
        );
        assert!(GrsSpec::rs(f.clone(), elems(&[1, 2, 3]), 4, false).is_err());
        assert!(matches!(
            GrsSpec::rs(f, elems(&[1, 9]), 1, false),
            Err(Error::BadElement { code: 9, q: 7 })
        ));
    }

    #[test]
    fn grs_q7_is_mds() {
        let f = Field::new(7, 1).unwrap();
        let c = GrsSpec::rs(f, elems(&[0, 1, 2, 3, 4]), 3, false).unwrap().generator();
        assert_eq!(c.min_distance().unwrap(), 3);
    }
}
