//! Generic linear codes: duals, puncturing, monomial maps, Schur products,
//! exhaustive weight enumeration and the NMDS weight-distribution formulas.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::counting::{binomial_signed, krawtchouk, pow, sign};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;

/// Largest number of codewords the exhaustive routines will visit.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Mds,
    Amds,
    Nmds,
    Other,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Mds => "MDS",
            Classification::Amds => "AMDS",
            Classification::Nmds => "NMDS",
            Classification::Other => "other",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Codeword counts `A_0..A_N` by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
    dimension: usize,
    classification: Classification,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>, dimension: usize, classification: Classification) -> Self {
        WeightDistribution {
            counts,
            dimension,
            classification,
        }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight present, if any.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }
}

/// Outcome of the Gram-matrix test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfOrthogonality {
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub almost_self_dual: bool,
}

/// A linear code given by a full-row-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    generator: Matrix,
}

fn classify(n: usize, k: usize, d: Option<usize>, dual_d: Option<usize>) -> Classification {
    match d {
        Some(d) if d + k == n + 1 => Classification::Mds,
        Some(d) if d + k == n => {
            if dual_d == Some(k) {
                Classification::Nmds
            } else {
                Classification::Amds
            }
        }
        _ => Classification::Other,
    }
}

/// Dual weight distribution via the MacWilliams identity.
pub fn macwilliams(counts: &[BigUint], q: u64, k: usize) -> Result<Vec<BigUint>> {
    let n = (counts.len() - 1) as u64;
    let size = pow(q, k as u64);
    let mut out = Vec::with_capacity(counts.len());
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, a) in counts.iter().enumerate() {
            if !a.is_zero() {
                acc += BigInt::from(a.clone()) * krawtchouk(n, q, j, i as u64);
            }
        }
        if !(&acc % &size).is_zero() || acc < BigInt::zero() {
            return Err(Error::Inconsistent(format!(
                "MacWilliams transform produced a non-integral count at weight {j}"
            )));
        }
        out.push((acc / &size).to_biguint().expect("nonnegative"));
    }
    Ok(out)
}

impl LinearCode {
    /// Wraps a generator, which must have full row rank.
    pub fn new(field: Field, generator: Matrix) -> Result<LinearCode> {
        let rank = generator.rank(&field);
        if rank != generator.rows() {
            return Err(Error::InvalidParameters(format!(
                "generator has {} rows but rank {rank}",
                generator.rows()
            )));
        }
        Ok(LinearCode { field, generator })
    }

    /// The code spanned by the rows of `m`, with its RREF basis as generator.
    pub fn from_spanning_set(field: Field, m: &Matrix) -> LinearCode {
        let generator = m.row_space_basis(&field);
        LinearCode { field, generator }
    }

    pub fn full_space(field: Field, n: usize) -> LinearCode {
        LinearCode {
            field,
            generator: Matrix::identity(n),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// RREF generator; equal for equal codes.
    pub fn canonical_generator(&self) -> Matrix {
        self.generator.row_space_basis(&self.field)
    }

    pub fn same_space(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        self.generator.row_space_equal(&self.field, &other.generator)
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        self.generator.row_space_contains(&self.field, v)
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "message length {} vs dimension {}",
                message.len(),
                self.dimension()
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.length()];
        for (r, &m) in message.iter().enumerate() {
            for (o, &g) in out.iter_mut().zip(self.generator.row(r)) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field || self.length() != other.length() {
            return Err(Error::DimensionMismatch(format!(
                "codes over {} length {} and {} length {}",
                self.field,
                self.length(),
                other.field,
                other.length()
            )));
        }
        Ok(())
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            field: self.field.clone(),
            generator: self.generator.right_kernel(&self.field),
        }
    }

    /// Restriction to the given coordinates (0-based, strictly increasing).
    pub fn puncture(&self, indices: &[usize]) -> Result<LinearCode> {
        if indices.is_empty() {
            return Err(Error::InvalidParameters("empty coordinate set".into()));
        }
        for (pos, &i) in indices.iter().enumerate() {
            if i >= self.length() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.length(),
                });
            }
            if pos > 0 {
                let prev = indices[pos - 1];
                if prev == i {
                    return Err(Error::DuplicateIndex(i));
                }
                if prev > i {
                    return Err(Error::UnsortedIndices);
                }
            }
        }
        Ok(LinearCode::from_spanning_set(
            self.field.clone(),
            &self.generator.select_columns(indices),
        ))
    }

    /// Applies `c -> (v_1 c_{perm[0]}, ..., v_N c_{perm[N-1]})` to every codeword.
    pub fn monomial_transform(&self, perm: &[usize], scale: &[Elem]) -> Result<LinearCode> {
        let n = self.length();
        if perm.len() != n || scale.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "permutation/scale lengths {}/{} vs code length {n}",
                perm.len(),
                scale.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation(n));
            }
            seen[p] = true;
        }
        if let Some(pos) = scale.iter().position(|s| s.is_zero()) {
            return Err(Error::ZeroMultiplier(pos));
        }
        let f = &self.field;
        let mut g = self.generator.select_columns(perm);
        for r in 0..g.rows() {
            for (c, &s) in scale.iter().enumerate() {
                let v = f.mul(g.get(r, c), s);
                g.set(r, c, v);
            }
        }
        Ok(LinearCode {
            field: f.clone(),
            generator: g,
        })
    }

    /// Span of all coordinatewise products of generator rows.
    pub fn schur_product(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let f = &self.field;
        let n = self.length();
        let mut rows = Vec::with_capacity(self.dimension() * other.dimension());
        for i in 0..self.dimension() {
            for j in 0..other.dimension() {
                let a = self.generator.row(i);
                let b = other.generator.row(j);
                rows.push((0..n).map(|c| f.mul(a[c], b[c])).collect::<Vec<_>>());
            }
        }
        let m = Matrix::from_rows(n, &rows)?;
        Ok(LinearCode::from_spanning_set(f.clone(), &m))
    }

    pub fn schur_square(&self) -> LinearCode {
        self.schur_product(self).expect("a code is compatible with itself")
    }

    /// Number of codewords, checked against the enumeration bound.
    fn enumeration_size(&self) -> Result<u128> {
        let q = self.field.order() as u128;
        let mut size: u128 = 1;
        for _ in 0..self.dimension() {
            size = size.saturating_mul(q);
            if size > ENUMERATION_LIMIT {
                return Err(Error::Capacity { size });
            }
        }
        Ok(size)
    }

    /// Calls `visit` once per nonzero codeword whose leading message coordinate is 1.
    fn for_each_projective_codeword(&self, mut visit: impl FnMut(&[Elem])) {
        let n = self.length();
        let k = self.dimension();
        let mut bufs = vec![vec![Elem::ZERO; n]; k + 1];
        for lead in 0..k {
            bufs[lead].copy_from_slice(self.generator.row(lead));
            walk(&self.field, &self.generator, lead + 1, &mut bufs[lead..], &mut visit);
        }
    }

    /// Exact minimum distance by enumerating every message.
    pub fn min_distance(&self) -> Result<usize> {
        self.enumeration_size()?;
        if self.dimension() == 0 {
            return Err(Error::InvalidParameters(
                "the zero code has no minimum distance".into(),
            ));
        }
        let mut best = self.length();
        self.for_each_projective_codeword(|c| {
            let w = hamming_weight(c);
            if w < best {
                best = w;
            }
        });
        Ok(best)
    }

    /// Exact weight distribution by enumeration; MDS/AMDS/NMDS tag uses the
    /// dual distance from the MacWilliams transform.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.enumeration_size()?;
        let n = self.length();
        let k = self.dimension();
        let q = self.field.order() as u64;
        let mut raw = vec![0u64; n + 1];
        self.for_each_projective_codeword(|c| raw[hamming_weight(c)] += 1);
        let mut counts: Vec<BigUint> = raw.iter().map(|&c| BigUint::from(c) * (q - 1)).collect();
        counts[0] = BigUint::from(1u32);
        let dual = macwilliams(&counts, q, k)?;
        let d = (1..=n).find(|&i| !counts[i].is_zero());
        let dual_d = (1..=n).find(|&i| !dual[i].is_zero());
        let classification = classify(n, k, d, dual_d);
        Ok(WeightDistribution::new(counts, k, classification))
    }

    /// `G G^T`.
    pub fn gram(&self) -> Matrix {
        self.generator
            .mul_transpose(&self.field, &self.generator)
            .expect("same width")
    }

    pub fn self_orthogonality(&self) -> SelfOrthogonality {
        let so = self.gram().is_zero();
        let n = self.length();
        let k = self.dimension();
        SelfOrthogonality {
            self_orthogonal: so,
            self_dual: so && 2 * k == n,
            almost_self_dual: so && n % 2 == 1 && 2 * k + 1 == n,
        }
    }
}

fn walk(
    f: &Field,
    g: &Matrix,
    level: usize,
    bufs: &mut [Vec<Elem>],
    visit: &mut impl FnMut(&[Elem]),
) {
    if level == g.rows() {
        visit(&bufs[0]);
        return;
    }
    let (cur, rest) = bufs.split_first_mut().expect("one buffer per level");
    let row = g.row(level);
    for c in f.elements() {
        let next = &mut rest[0];
        if c.is_zero() {
            next.copy_from_slice(cur);
        } else {
            for ((o, &a), &b) in next.iter_mut().zip(cur.iter()).zip(row) {
                *o = f.add(a, f.mul(c, b));
            }
        }
        walk(f, g, level + 1, rest, visit);
    }
}

pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Weight distributions of an `[n, k]` code with `A_{n-k} = a_min` that is
/// NMDS (`a_min > 0`) or MDS (`a_min = 0`), together with its dual's.
pub fn nmds_distribution(
    n: usize,
    k: usize,
    q: u64,
    a_min: &BigUint,
) -> Result<(WeightDistribution, WeightDistribution)> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let (n64, k64) = (n as u64, k as u64);
    let a_min_signed = BigInt::from(a_min.clone());
    let classification = if a_min.is_zero() {
        Classification::Mds
    } else {
        Classification::Nmds
    };

    // A_{base+s} = C(n, span_top) sum_j (-1)^j C(base+s, j)(q^{s-j}-1) + (-1)^s C(tail, s) a_min
    let fill = |base: u64, steps: u64, top: &dyn Fn(u64) -> u64, tail: u64| -> Result<Vec<BigUint>> {
        let mut counts = vec![BigUint::zero(); n + 1];
        counts[0] = BigUint::from(1u32);
        counts[base as usize] += a_min;
        for s in 1..=steps {
            let mut acc = BigInt::zero();
            for j in 0..s {
                acc += sign(j) * binomial_signed(base + s, j) * (pow(q, s - j) - 1);
            }
            acc *= binomial_signed(n64, top(s));
            acc += sign(s) * binomial_signed(tail, s) * &a_min_signed;
            let Some(v) = acc.to_biguint() else {
                return Err(Error::Inconsistent(format!(
                    "negative count {acc} at weight {}; a_min = {a_min} is not attainable",
                    base + s
                )));
            };
            counts[(base + s) as usize] = v;
        }
        Ok(counts)
    };

    let primal = fill(n64 - k64, k64, &|s| k64 - s, k64)?;
    let dual = fill(k64, n64 - k64, &|s| k64 + s, n64 - k64)?;
    Ok((
        WeightDistribution::new(primal, k, classification),
        WeightDistribution::new(dual, n - k, classification),
    ))
}

/// `q^k` as a big integer, for completeness checks.
pub fn code_size(q: u64, k: usize) -> BigUint {
    pow(q, k as u64).to_biguint().expect("positive")
}

impl WeightDistribution {
    /// Counts as `u64` when they all fit.
    pub fn counts_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }
}
