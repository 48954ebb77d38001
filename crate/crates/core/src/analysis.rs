//! Subset-sum counting, MDS/NMDS classification, weight distributions,
//! Schur squares and non-GRS certificates for (+)-ETGRS codes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::codes::{nmds_distribution, Classification, LinearCode, WeightDistribution};
use crate::counting::{binomial_signed, sign};
use crate::error::{invalid, Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::check_codes;
use crate::linalg::Matrix;
use crate::tgrs::CodeSpec;

/// Largest domain accepted by [`subset_count_dp`].
pub const SUBSET_DOMAIN_LIMIT: usize = 64;

/// `#N(t, b, D)`: number of `t`-element subsets of `D` summing to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSumQuery {
    pub t: usize,
    pub b: Elem,
    pub domain: Vec<Elem>,
}

impl SubsetSumQuery {
    pub fn new(t: usize, b: Elem, domain: Vec<Elem>) -> Self {
        SubsetSumQuery { t, b, domain }
    }
}

/// Exact count by dynamic programming over (size, running sum).
pub fn subset_count_dp(f: &Field, query: &SubsetSumQuery) -> Result<BigUint> {
    let d = &query.domain;
    check_codes(f, d)?;
    check_codes(f, &[query.b])?;
    if d.len() > SUBSET_DOMAIN_LIMIT {
        return Err(invalid!("subset domain of size {} exceeds {SUBSET_DOMAIN_LIMIT}", d.len()));
    }
    let mut sorted = d.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedPoint(w[0].0));
    }
    let t = query.t;
    if t > d.len() {
        return Err(invalid!("subset size {t} exceeds domain size {}", d.len()));
    }
    let mut levels: Vec<BTreeMap<u32, u128>> = vec![BTreeMap::new(); t + 1];
    levels[0].insert(0, 1);
    for &x in d {
        for size in (1..=t).rev() {
            let below: Vec<(u32, u128)> = levels[size - 1].iter().map(|(&s, &c)| (s, c)).collect();
            for (s, c) in below {
                *levels[size].entry(f.add(Elem(s), x).0).or_insert(0) += c;
            }
        }
    }
    Ok(BigUint::from(levels[t].get(&query.b.0).copied().unwrap_or(0)))
}

/// Domains with a closed-form subset-sum count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsetDomain {
    FullField,
    MultiplicativeGroup,
}

impl SubsetDomain {
    pub fn elements(self, f: &Field) -> Vec<Elem> {
        match self {
            SubsetDomain::FullField => f.elements().collect(),
            SubsetDomain::MultiplicativeGroup => f.nonzero_elements().collect(),
        }
    }

    /// Recognizes a sorted set as `F_q` or `F_q^*`.
    pub fn recognize(f: &Field, sorted: &[Elem]) -> Option<SubsetDomain> {
        let q = f.order() as usize;
        let consecutive = |from: u32| sorted.iter().enumerate().all(|(i, e)| e.0 == from + i as u32);
        if sorted.len() == q && consecutive(0) {
            Some(SubsetDomain::FullField)
        } else if sorted.len() + 1 == q && consecutive(1) {
            Some(SubsetDomain::MultiplicativeGroup)
        } else {
            None
        }
    }
}

/// Closed-form `#N(t, b, F_q)` or `#N(t, b, F_q^*)`.
pub fn subset_count_closed(f: &Field, t: usize, b: Elem, domain: SubsetDomain) -> Result<BigUint> {
    check_codes(f, &[b])?;
    let q = u64::from(f.order());
    let p = u64::from(f.characteristic());
    let t = t as u64;
    let v_b = if b.is_zero() {
        BigInt::from(q - 1)
    } else {
        BigInt::from(-1)
    };
    let numerator = match domain {
        SubsetDomain::MultiplicativeGroup => {
            if t > q - 1 {
                return Err(invalid!("subset size {t} exceeds q - 1 = {}", q - 1));
            }
            binomial_signed(q - 1, t) + sign(t + t / p) * v_b * binomial_signed(q / p - 1, t / p)
        }
        SubsetDomain::FullField => {
            if t > q {
                return Err(invalid!("subset size {t} exceeds q = {q}"));
            }
            let base = binomial_signed(q, t);
            if t.is_multiple_of(p) {
                base + sign(t + t / p) * v_b * binomial_signed(q / p, t / p)
            } else {
                base
            }
        }
    };
    let q_big = BigInt::from(q);
    if !(&numerator % &q_big).is_zero() {
        return Err(Error::Inconsistent(format!("{numerator} is not divisible by {q}")));
    }
    (numerator / q_big)
        .to_biguint()
        .ok_or_else(|| Error::Inconsistent("negative subset count".into()))
}

/// MDS/NMDS verdict with the count of minimum-weight codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtgrsClass {
    pub classification: Classification,
    /// `A_{n+1-k}`.
    pub a_min: BigUint,
    /// `#N(k, -eta^{-1}, A_alpha)`.
    pub subsets: BigUint,
}

fn min_weight_subsets(spec: &CodeSpec) -> Result<BigUint> {
    let f = spec.field();
    let target = f.neg(f.inv(spec.eta())?);
    subset_count_dp(f, &SubsetSumQuery::new(spec.k(), target, spec.alpha_set().to_vec()))
}

/// `A_{n+1-k} = (q-1) #N(k, -eta^{-1}, A_alpha)`; MDS iff zero, NMDS otherwise.
pub fn etgrs_classify(spec: &CodeSpec) -> Result<EtgrsClass> {
    spec.require_extended()?;
    let subsets = min_weight_subsets(spec)?;
    let a_min = &subsets * (spec.field().order() - 1);
    let classification = if a_min.is_zero() {
        Classification::Mds
    } else {
        Classification::Nmds
    };
    Ok(EtgrsClass {
        classification,
        a_min,
        subsets,
    })
}

/// Weight distributions of the extended code and its dual. When `A_alpha` is
/// `F_q` or `F_q^*` the subset count is also taken from the closed form and
/// the two must agree.
pub fn etgrs_weight_distribution(spec: &CodeSpec) -> Result<(WeightDistribution, WeightDistribution)> {
    let class = etgrs_classify(spec)?;
    let f = spec.field();
    if let Some(domain) = SubsetDomain::recognize(f, spec.alpha_set()) {
        let target = f.neg(f.inv(spec.eta())?);
        let closed = subset_count_closed(f, spec.k(), target, domain)?;
        if closed != class.subsets {
            return Err(Error::Inconsistent(format!(
                "closed-form subset count {closed} differs from {}",
                class.subsets
            )));
        }
    }
    nmds_distribution(spec.length(), spec.k(), u64::from(f.order()), &class.a_min)
}

/// Schur square from its explicit spanning set: `(v^2 alpha^i, 0)` for
/// `i <= 2k-2` and `(v^2 (2 eta alpha^{2k-1} + eta^2 alpha^{2k}), 1)`; the
/// extension coordinate is dropped for the non-extended code. For
/// `2k - 1 >= n` the extended square is all of `F_q^{n+1}`.
pub fn schur_square_closed(spec: &CodeSpec) -> Result<LinearCode> {
    let k = spec.k();
    if k < 3 {
        return Err(Error::OutOfTheoremRange(format!("Schur square closed form needs k >= 3, got {k}")));
    }
    let f = spec.field();
    let (n, len) = (spec.n(), spec.length());
    if spec.extended() && 2 * k > n {
        return Ok(LinearCode::full_space(f.clone(), len));
    }
    let v2: Vec<Elem> = spec.v().iter().map(|&x| f.mul(x, x)).collect();
    let mut m = Matrix::zeros(2 * k, len);
    for i in 0..2 * k - 1 {
        for (j, (&a, &s)) in spec.alpha().iter().zip(&v2).enumerate() {
            m.set(i, j, f.mul(s, f.pow(a, i as u64)));
        }
    }
    let eta = spec.eta();
    let two_eta = f.add(eta, eta);
    let eta2 = f.mul(eta, eta);
    for (j, (&a, &s)) in spec.alpha().iter().zip(&v2).enumerate() {
        let hi = f.add(
            f.mul(two_eta, f.pow(a, (2 * k - 1) as u64)),
            f.mul(eta2, f.pow(a, (2 * k) as u64)),
        );
        m.set(2 * k - 1, j, f.mul(s, hi));
    }
    if spec.extended() {
        m.set(2 * k - 1, n, Elem::ONE);
    }
    Ok(LinearCode::from_spanning_set(f.clone(), &m))
}

/// Evidence that a (+)-ETGRS code is neither GRS nor EGRS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonGrsCertificate {
    /// `dim C^2` exceeds `min(2k - 1, n + 1)`, the square dimension of any
    /// GRS/EGRS code with the same parameters.
    LowRate { square_dimension: usize, grs_dimension: usize },
    /// A weight-one word of the dual's square; duals of GRS/EGRS codes of
    /// this rate have squares of distance at least two.
    HighRate { witness: Vec<Elem> },
}

/// Non-GRS certificate for `3 <= k <= n - 2`, verified before it is returned.
/// The dimension route is used while `2k <= n + 1`, the dual route above.
pub fn non_grs_certificate(spec: &CodeSpec) -> Result<NonGrsCertificate> {
    spec.require_extended()?;
    let (n, k) = (spec.n(), spec.k());
    if k < 3 || k + 2 > n {
        return Err(Error::OutOfTheoremRange(format!(
            "non-GRS certificate needs 3 <= k <= n - 2, got k = {k}, n = {n}"
        )));
    }
    let f = spec.field();
    if 2 * k <= n + 1 {
        let square_dimension = spec.code().schur_square().dimension();
        let grs_dimension = (2 * k - 1).min(n + 1);
        if square_dimension <= grs_dimension {
            return Err(Error::Inconsistent(format!(
                "square dimension {square_dimension} does not exceed {grs_dimension}"
            )));
        }
        return Ok(NonGrsCertificate::LowRate {
            square_dimension,
            grs_dimension,
        });
    }
    let eta = spec.eta();
    let mut witness = vec![Elem::ZERO; n + 1];
    witness[n] = f.mul(eta, eta);
    let dual_square = LinearCode::new(f.clone(), spec.parity_check()?)?.schur_square();
    if !dual_square.contains(&witness)? {
        return Err(Error::Inconsistent("weight-one witness not in the dual square".into()));
    }
    Ok(NonGrsCertificate::HighRate { witness })
}
