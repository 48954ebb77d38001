//! Twisted polynomial spaces and (+)-twisted GRS codes.
//!
//! A [`CodeSpec`] describes `C_{k,n}(alpha, v, eta)` or, when extended,
//! `C_{k,n}(alpha, v, eta, inf)`: evaluations of
//! `f = a_0 + ... + a_{k-2} x^{k-2} + a_{k-1}(x^{k-1} + eta x^k)` scaled by `v`,
//! with the extended code appending `a_{k-1}` as a last coordinate.

use alloc::vec;
use alloc::vec::Vec;

use crate::codes::LinearCode;
use crate::error::{invalid, Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::{check_codes, check_points, scaled_powers, u_vector};
use crate::linalg::Matrix;
use crate::poly::Poly;

/// `V_{k,t,h,eta}`: span of `x^i` for `i < k, i != h`, and `x^h + eta x^{k-1+t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedPolySpace {
    k: usize,
    twist: usize,
    hook: usize,
    eta: Elem,
}

impl TwistedPolySpace {
    pub fn new(field: &Field, k: usize, twist: usize, hook: usize, eta: Elem) -> Result<Self> {
        field.elem(eta.0)?;
        if eta.is_zero() {
            return Err(invalid!("twist coefficient must be nonzero"));
        }
        if twist == 0 {
            return Err(invalid!("twist must be at least 1"));
        }
        if k == 0 || hook >= k || k > field.order() as usize {
            return Err(invalid!(
                "need 0 <= hook < k <= q, got hook = {hook}, k = {k}, q = {}",
                field.order()
            ));
        }
        Ok(TwistedPolySpace { k, twist, hook, eta })
    }

    /// The (+) space `V_{k,1,k-1,eta}`.
    pub fn plus(field: &Field, k: usize, eta: Elem) -> Result<Self> {
        TwistedPolySpace::new(field, k, 1, k.saturating_sub(1), eta)
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Vec<Poly> {
        (0..self.k)
            .map(|i| {
                let mut coeffs = vec![Elem::ZERO; self.k + self.twist];
                coeffs[i] = Elem::ONE;
                if i == self.hook {
                    coeffs[self.k - 1 + self.twist] = self.eta;
                }
                Poly::new(coeffs)
            })
            .collect()
    }

    /// Evaluation code of the space on `alpha` scaled by `v`; with `extended`,
    /// the last coordinate is the coefficient of `x^{k-1}`.
    pub fn evaluation_code(&self, field: &Field, alpha: &[Elem], v: &[Elem], extended: bool) -> Result<LinearCode> {
        check_points(alpha, v)?;
        let n = alpha.len();
        let basis = self.basis();
        let mut g = Matrix::zeros(self.k, n + usize::from(extended));
        for (r, poly) in basis.iter().enumerate() {
            for (j, (&a, &s)) in alpha.iter().zip(v).enumerate() {
                g.set(r, j, field.mul(s, poly.eval(field, a)));
            }
            if extended {
                g.set(r, n, poly.coeff(self.k - 1));
            }
        }
        LinearCode::new(field.clone(), g)
    }
}

/// Parameters of a (+)-TGRS or (+)-ETGRS code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    alpha: Vec<Elem>,
    v: Vec<Elem>,
    eta: Elem,
    k: usize,
    extended: bool,
    alpha_set: Vec<Elem>,
}

impl CodeSpec {
    /// Requires distinct points, nonzero `v` and `eta`, and `2 <= k < n <= q`.
    pub fn new(field: Field, alpha: Vec<Elem>, v: Vec<Elem>, eta: Elem, k: usize, extended: bool) -> Result<Self> {
        check_codes(&field, &alpha)?;
        check_codes(&field, &v)?;
        field.elem(eta.0)?;
        check_points(&alpha, &v)?;
        if eta.is_zero() {
            return Err(invalid!("eta must be nonzero"));
        }
        let n = alpha.len();
        if k < 2 || k >= n || n > field.order() as usize {
            return Err(invalid!(
                "need 2 <= k < n <= q, got k = {k}, n = {n}, q = {}",
                field.order()
            ));
        }
        let mut alpha_set = alpha.clone();
        alpha_set.sort_unstable();
        Ok(CodeSpec {
            field,
            alpha,
            v,
            eta,
            k,
            extended,
            alpha_set,
        })
    }

    /// All-ones column multipliers.
    pub fn unit(field: Field, alpha: Vec<Elem>, eta: Elem, k: usize, extended: bool) -> Result<Self> {
        let v = vec![Elem::ONE; alpha.len()];
        CodeSpec::new(field, alpha, v, eta, k, extended)
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

    pub fn eta(&self) -> Elem {
        self.eta
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn extended(&self) -> bool {
        self.extended
    }

    /// Code length: `n`, or `n + 1` when extended.
    pub fn length(&self) -> usize {
        self.n() + usize::from(self.extended)
    }

    /// The evaluation set, sorted by code.
    pub fn alpha_set(&self) -> &[Elem] {
        &self.alpha_set
    }

    /// Sum of the evaluation points.
    pub fn alpha_sum(&self) -> Elem {
        self.field.sum(self.alpha.iter().copied())
    }

    pub fn with_k(&self, k: usize) -> Result<CodeSpec> {
        CodeSpec::new(self.field.clone(), self.alpha.clone(), self.v.clone(), self.eta, k, self.extended)
    }

    pub fn with_v(&self, v: Vec<Elem>) -> Result<CodeSpec> {
        CodeSpec::new(self.field.clone(), self.alpha.clone(), v, self.eta, self.k, self.extended)
    }

    pub fn with_extended(&self, extended: bool) -> CodeSpec {
        CodeSpec {
            extended,
            ..self.clone()
        }
    }

    pub(crate) fn require_extended(&self) -> Result<()> {
        if self.extended {
            Ok(())
        } else {
            Err(invalid!("operation is defined for the extended (+)-ETGRS code only"))
        }
    }

    pub fn twisted_space(&self) -> TwistedPolySpace {
        TwistedPolySpace::plus(&self.field, self.k, self.eta).expect("validated spec")
    }

    /// Rows `v * alpha^i` (`i <= k-2`) and `v * (alpha^{k-1} + eta alpha^k)`;
    /// the extended column is `(0, ..., 0, 1)^T`.
    pub fn generator_matrix(&self) -> Matrix {
        let f = &self.field;
        let (n, k) = (self.n(), self.k);
        let mut g = Matrix::zeros(k, self.length());
        for i in 0..k - 1 {
            for (j, e) in scaled_powers(f, &self.alpha, &self.v, i as u64).into_iter().enumerate() {
                g.set(i, j, e);
            }
        }
        for (j, (&a, &s)) in self.alpha.iter().zip(&self.v).enumerate() {
            let t = f.add(f.pow(a, (k - 1) as u64), f.mul(self.eta, f.pow(a, k as u64)));
            g.set(k - 1, j, f.mul(s, t));
        }
        if self.extended {
            g.set(k - 1, n, Elem::ONE);
        }
        g
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::new(self.field.clone(), self.generator_matrix()).expect("twisted rows are independent")
    }

    /// `u_j / v_j` for each coordinate.
    pub(crate) fn dual_multipliers(&self) -> Vec<Elem> {
        let f = &self.field;
        let u = u_vector(f, &self.alpha).expect("validated spec");
        u.iter()
            .zip(&self.v)
            .map(|(&a, &b)| f.div(a, b).expect("nonzero v"))
            .collect()
    }

    /// Parity-check matrix of the extended code: rows `(u_j / v_j) alpha_j^l`
    /// for `l = 0..=n-k`, last column zero except `eta` in row `n-k-1` and
    /// `1 + eta S_alpha` in row `n-k`.
    pub fn parity_check(&self) -> Result<Matrix> {
        self.require_extended()?;
        let f = &self.field;
        let (n, k) = (self.n(), self.k);
        let w = self.dual_multipliers();
        let mut h = Matrix::zeros(n + 1 - k, n + 1);
        for l in 0..=n - k {
            for (j, e) in scaled_powers(f, &self.alpha, &w, l as u64).into_iter().enumerate() {
                h.set(l, j, e);
            }
        }
        h.set(n - k - 1, n, self.eta);
        h.set(n - k, n, f.add(Elem::ONE, f.mul(self.eta, self.alpha_sum())));
        Ok(h)
    }

    /// Dual codeword `((u_j / v_j) g(alpha_j), eta g_{n-k-1} + (1 + eta S) g_{n-k})`
    /// for `deg g <= n - k`.
    pub fn dual_codeword(&self, g: &Poly) -> Result<Vec<Elem>> {
        self.require_extended()?;
        let (n, k) = (self.n(), self.k);
        if g.degree().is_some_and(|d| d > n - k) {
            return Err(invalid!("dual polynomial must have degree at most n - k = {}", n - k));
        }
        let f = &self.field;
        let w = self.dual_multipliers();
        let mut out: Vec<Elem> = self
            .alpha
            .iter()
            .zip(&w)
            .map(|(&a, &s)| f.mul(s, g.eval(f, a)))
            .collect();
        let top = f.mul(f.add(Elem::ONE, f.mul(self.eta, self.alpha_sum())), g.coeff(n - k));
        out.push(f.add(f.mul(self.eta, g.coeff(n - k - 1)), top));
        Ok(out)
    }
}

/// `L_A(m) = sum_{a in A} a^m prod_{b in F_q \ A} (a - b)`, by direct evaluation.
pub fn l_sum(f: &Field, set: &[Elem], m: usize) -> Result<Elem> {
    check_l_args(f, set, m)?;
    let mut member = vec![false; f.order() as usize];
    for &a in set {
        member[a.0 as usize] = true;
    }
    let outside: Vec<Elem> = f.elements().filter(|b| !member[b.0 as usize]).collect();
    Ok(f.sum(set.iter().map(|&a| {
        let prod = f.product(outside.iter().map(|&b| f.sub(a, b)));
        f.mul(f.pow(a, m as u64), prod)
    })))
}

/// Closed form of [`l_sum`]: `0` for `m <= |A| - 2`, `-1` for `m = |A| - 1`,
/// `-sum A` for `m = |A|`.
pub fn l_sum_closed(f: &Field, set: &[Elem], m: usize) -> Result<Elem> {
    check_l_args(f, set, m)?;
    let size = set.len();
    Ok(if m + 2 <= size {
        Elem::ZERO
    } else if m + 1 == size {
        f.neg(Elem::ONE)
    } else {
        f.neg(f.sum(set.iter().copied()))
    })
}

fn check_l_args(f: &Field, set: &[Elem], m: usize) -> Result<()> {
    check_codes(f, set)?;
    check_points(set, &vec![Elem::ONE; set.len()])?;
    if set.len() <= 2 {
        return Err(invalid!("the set needs more than two elements"));
    }
    if m > set.len() {
        return Err(Error::OutOfTheoremRange(alloc::format!(
            "exponent {m} exceeds |A| = {}",
            set.len()
        )));
    }
    Ok(())
}
