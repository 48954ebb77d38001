//! Self-orthogonality of (+)-TGRS and (+)-ETGRS codes: the witness-polynomial
//! criterion, the `n = 2k` certificates, dimension descent, explicit
//! constructions, exhaustive refutation and witness search.
//!
//! Write `D = q - 2k`. The code is self-orthogonal iff some `g` with
//! `deg g <= D` vanishes on `F_q \ A_alpha`, satisfies `g(alpha_j) = v_j^2`,
//! and meets a condition on its two top coefficients:
//!
//! * non-extended: `eta g_{D-1} + 2 g_D = 0`,
//! * extended: `eta^2 g_{D-1} + 2 eta g_D = 1`,
//!
//! with `g_{-1} = 0`. In characteristic two these read `g_{D-1} = 0` and
//! `eta^2 g_{D-1} = 1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::analysis::{subset_count_dp, SubsetSumQuery};
use crate::counting::binomial;
use crate::error::{invalid, Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::u_vector;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::tgrs::CodeSpec;

/// Which top-coefficient condition a witness satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientCondition {
    /// `eta g_{D-1} + 2 g_D = 0` (non-extended code).
    Vanishing,
    /// `eta^2 g_{D-1} + 2 eta g_D = 1` (extended code).
    Unit,
}

impl CoefficientCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            CoefficientCondition::Vanishing => "eta*g[D-1] + 2*g[D] = 0",
            CoefficientCondition::Unit => "eta^2*g[D-1] + 2*eta*g[D] = 1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfOrthWitness {
    pub g: Poly,
    /// Set when `g = lambda prod_{beta not in A}(x - beta)`, i.e. for `n = 2k`.
    pub lambda: Option<Elem>,
    pub condition: CoefficientCondition,
}

fn check_k_range(spec: &CodeSpec) -> Result<()> {
    let q = spec.field().order() as usize;
    let k = spec.k();
    if k < 3 || 2 * k > q {
        return Err(Error::OutOfTheoremRange(format!("need 3 <= k <= q/2, got k = {k}, q = {q}")));
    }
    Ok(())
}

fn squares(f: &Field, v: &[Elem]) -> Vec<Elem> {
    v.iter().map(|&x| f.mul(x, x)).collect()
}

fn outside(f: &Field, set: &[Elem]) -> Vec<Elem> {
    f.elements().filter(|b| set.binary_search(b).is_err()).collect()
}

fn condition_row(spec: &CodeSpec) -> (Vec<Elem>, Elem, CoefficientCondition) {
    let f = spec.field();
    let d = f.order() as usize - 2 * spec.k();
    let eta = spec.eta();
    let two = f.from_int(2);
    let mut row = vec![Elem::ZERO; d + 1];
    if spec.extended() {
        if d >= 1 {
            row[d - 1] = f.mul(eta, eta);
        }
        row[d] = f.mul(two, eta);
        (row, Elem::ONE, CoefficientCondition::Unit)
    } else {
        if d >= 1 {
            row[d - 1] = eta;
        }
        row[d] = two;
        (row, Elem::ZERO, CoefficientCondition::Vanishing)
    }
}

/// Witness polynomial from the linear system alone, without consulting the
/// Gram matrix.
pub fn find_witness(spec: &CodeSpec) -> Result<Option<SelfOrthWitness>> {
    check_k_range(spec)?;
    let f = spec.field();
    let d = f.order() as usize - 2 * spec.k();
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    let mut rhs = Vec::new();
    let powers = |x: Elem| (0..=d).map(|i| f.pow(x, i as u64)).collect::<Vec<_>>();
    for b in outside(f, spec.alpha_set()) {
        rows.push(powers(b));
        rhs.push(Elem::ZERO);
    }
    for (&a, s) in spec.alpha().iter().zip(squares(f, spec.v())) {
        rows.push(powers(a));
        rhs.push(s);
    }
    let (row, value, condition) = condition_row(spec);
    rows.push(row);
    rhs.push(value);
    let system = Matrix::from_rows(d + 1, &rows)?;
    let Some(coeffs) = system.solve(f, &rhs)? else {
        return Ok(None);
    };
    let g = Poly::new(coeffs);
    let lambda = (2 * spec.k() == spec.n()).then(|| g.coeff(d));
    Ok(Some(SelfOrthWitness { g, lambda, condition }))
}

/// [`find_witness`], cross-checked against `G G^T = 0`; disagreement is an error.
pub fn solve_self_orth(spec: &CodeSpec) -> Result<Option<SelfOrthWitness>> {
    let witness = find_witness(spec)?;
    let gram_zero = spec.code().gram().is_zero();
    if witness.is_some() != gram_zero {
        return Err(Error::Inconsistent(format!(
            "witness {} but Gram matrix {}",
            if witness.is_some() { "found" } else { "absent" },
            if gram_zero { "vanishes" } else { "is nonzero" }
        )));
    }
    Ok(witness)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Duality {
    SelfDual,
    AlmostSelfDual,
}

impl Duality {
    pub fn as_str(self) -> &'static str {
        match self {
            Duality::SelfDual => "self-dual",
            Duality::AlmostSelfDual => "almost self-dual",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCertificate {
    pub lambda: Elem,
    pub verdict: Duality,
}

/// For `n = 2k`: self-dual (non-extended) iff `eta S + 2 = 0` and
/// `lambda u_j = v_j^2`; almost self-dual (extended) iff
/// `lambda (eta^2 S + 2 eta) = 1` and `lambda u_j = v_j^2`.
pub fn certify_self_dual_2k(spec: &CodeSpec) -> Result<Option<DualityCertificate>> {
    if spec.n() != 2 * spec.k() {
        return Err(invalid!("need n = 2k, got n = {}, k = {}", spec.n(), spec.k()));
    }
    check_k_range(spec)?;
    let f = spec.field();
    let u = u_vector(f, spec.alpha())?;
    let v2 = squares(f, spec.v());
    let lambda = f.div(v2[0], u[0])?;
    let proportional = u.iter().zip(&v2).all(|(&a, &b)| f.mul(lambda, a) == b);
    let (eta, s) = (spec.eta(), spec.alpha_sum());
    let two = f.from_int(2);
    let scalar = if spec.extended() {
        let t = f.add(f.mul(f.mul(eta, eta), s), f.mul(two, eta));
        f.mul(lambda, t) == Elem::ONE
    } else {
        f.add(f.mul(eta, s), two).is_zero()
    };
    let certificate = (proportional && scalar).then(|| DualityCertificate {
        lambda,
        verdict: if spec.extended() {
            Duality::AlmostSelfDual
        } else {
            Duality::SelfDual
        },
    });
    let gram_zero = spec.code().gram().is_zero();
    if certificate.is_some() != gram_zero {
        return Err(Error::Inconsistent("n = 2k certificate disagrees with the Gram matrix".into()));
    }
    Ok(certificate)
}

/// Dimension-`l` subcode that inherits self-orthogonality: same `(alpha, v)`
/// for the plain code, `alpha^{k-l} * v` for the extended one (needs
/// `0 not in A_alpha`).
pub fn descend_self_orthogonal(spec: &CodeSpec, l: usize) -> Result<CodeSpec> {
    let k = spec.k();
    if l < 3 || l > k {
        return Err(invalid!("target dimension must satisfy 3 <= l <= k = {k}, got {l}"));
    }
    if solve_self_orth(spec)?.is_none() {
        return Err(invalid!("source code is not self-orthogonal"));
    }
    let f = spec.field();
    let out = if spec.extended() {
        if spec.alpha_set().first() == Some(&Elem::ZERO) {
            return Err(invalid!("extended descent requires 0 not in A_alpha"));
        }
        let v = spec
            .alpha()
            .iter()
            .zip(spec.v())
            .map(|(&a, &x)| f.mul(f.pow(a, (k - l) as u64), x))
            .collect();
        spec.with_v(v)?.with_k(l)?
    } else {
        spec.with_k(l)?
    };
    if !out.code().gram().is_zero() {
        return Err(Error::Inconsistent(format!("descended code of dimension {l} is not self-orthogonal")));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub spec: CodeSpec,
    pub certificate: DualityCertificate,
}

fn certified(spec: CodeSpec) -> Result<Construction> {
    match certify_self_dual_2k(&spec)? {
        Some(certificate) => Ok(Construction { spec, certificate }),
        None => Err(Error::Inconsistent("construction failed its own certificate".into())),
    }
}

/// First `size`-subset (lexicographic by code) of `domain` with the given sum.
pub fn first_subset_with_sum(f: &Field, domain: &[Elem], size: usize, sum: Elem) -> Option<Vec<Elem>> {
    let mut found = None;
    for_each_subset(domain.len(), size, |idx| {
        let s = f.sum(idx.iter().map(|&i| domain[i]));
        if s == sum {
            found = Some(idx.iter().map(|&i| domain[i]).collect());
            false
        } else {
            true
        }
    });
    found
}

/// Visits index subsets of `0..n` of size `r` in lexicographic order until
/// `visit` returns false.
pub fn for_each_subset(n: usize, r: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + n - r) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Even `q`, `v_j = eta^{-1} prod_{i != j}(alpha_j - alpha_i)^{-q/2}`:
/// `sum A = 0` gives a self-dual `[2k, k]` code, `sum A = 1` with
/// `0 not in A` an almost self-dual `[2k+1, k]` extended code. For the plain
/// code the `eta^{-1}` factor is omitted.
pub fn construct_even(field: &Field, k: usize, alpha: Vec<Elem>, target: Duality, eta: Elem) -> Result<Construction> {
    let f = field;
    let q = f.order() as usize;
    if !f.is_even() {
        return Err(invalid!("even construction needs a field of characteristic 2"));
    }
    if k < 3 || 2 * k + 2 > q {
        return Err(invalid!("need 3 <= k <= (q-2)/2, got k = {k}, q = {q}"));
    }
    if alpha.len() != 2 * k {
        return Err(invalid!("need 2k = {} points, got {}", 2 * k, alpha.len()));
    }
    let s = f.sum(alpha.iter().copied());
    let extended = match target {
        Duality::SelfDual => {
            if !s.is_zero() {
                return Err(invalid!("points must sum to 0 for the self-dual code"));
            }
            false
        }
        Duality::AlmostSelfDual => {
            if s != Elem::ONE {
                return Err(invalid!("points must sum to 1 for the almost self-dual code"));
            }
            if alpha.contains(&Elem::ZERO) {
                return Err(invalid!("points must be nonzero for the almost self-dual code"));
            }
            true
        }
    };
    let u = u_vector(f, &alpha)?;
    let scale = if extended { f.inv(eta)? } else { Elem::ONE };
    let v = u
        .iter()
        .map(|&x| f.mul(scale, f.pow(x, (q / 2) as u64)))
        .collect();
    certified(CodeSpec::new(f.clone(), alpha, v, eta, k, extended)?)
}

/// Sub-cases of the odd construction over `GF(p^{2m})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddVariant {
    /// `gamma^{i0}` replaced by 0 and `eta = 2 gamma^{-i0}`; self-dual plain code.
    ZeroHole { i0: usize },
    /// `eta` outside `GF(p^m)`; almost self-dual MDS extended code.
    PlainMds,
    /// `eta` in `GF(p^m)` with `#N(k, -eta^{-1}, A) > 0`; almost self-dual NMDS.
    PlainNmds,
}

/// Generator of `GF(p^m)^*` inside `GF(p^{2m})`, smallest code first.
pub fn subfield_generator(f: &Field, m: u32) -> Elem {
    let order = u64::from(f.characteristic()).pow(m) - 1;
    f.nonzero_elements()
        .find(|&x| f.in_subfield(x, m) && f.order_of(x).ok() == Some(order))
        .expect("the subfield group is cyclic")
}

/// Odd construction on `alpha = (gamma, ..., gamma^k, -gamma, ..., -gamma^k)`
/// in `GF(p^{2m})`. Plain variants use `v_j = (u_j / (2 eta))^{1/2}`; the
/// zero-hole variant uses `v_j = u_j^{1/2}`. A missing `eta` picks the
/// smallest valid code.
pub fn construct_odd_pcd1(p: u32, m: u32, k: usize, variant: OddVariant, eta: Option<Elem>) -> Result<Construction> {
    if p == 2 {
        return Err(invalid!("odd construction needs an odd prime"));
    }
    let f = Field::new(p, 2 * m)?;
    let sub = u64::from(p).pow(m);
    if k < 3 || 2 * k as u64 + 1 > sub {
        return Err(invalid!("need 3 <= k <= (p^m - 1)/2 = {}, got k = {k}", (sub - 1) / 2));
    }
    let gamma = subfield_generator(&f, m);
    let mut alpha: Vec<Elem> = (1..=k as u64).map(|i| f.pow(gamma, i)).collect();
    alpha.extend((1..=k as u64).map(|i| f.neg(f.pow(gamma, i))));
    let two = f.from_int(2);
    match variant {
        OddVariant::ZeroHole { i0 } => {
            if i0 == 0 || i0 > k {
                return Err(invalid!("i0 must lie in 1..={k}, got {i0}"));
            }
            alpha[i0 - 1] = Elem::ZERO;
            let fixed = f.mul(two, f.inv(f.pow(gamma, i0 as u64))?);
            if eta.is_some_and(|e| e != fixed) {
                return Err(invalid!("zero-hole variant fixes eta = 2 gamma^-i0 = {}", fixed.0));
            }
            let u = u_vector(&f, &alpha)?;
            let v = roots(&f, &u, Elem::ONE)?;
            certified(CodeSpec::new(f, alpha, v, fixed, k, false)?)
        }
        OddVariant::PlainMds | OddVariant::PlainNmds => {
            let mds = variant == OddVariant::PlainMds;
            let mut sorted = alpha.clone();
            sorted.sort_unstable();
            let acceptable = |e: Elem| -> Result<bool> {
                if e.is_zero() || f.in_subfield(e, m) == mds || !f.is_square(f.mul(two, e)) {
                    return Ok(false);
                }
                if mds {
                    return Ok(true);
                }
                let target = f.neg(f.inv(e)?);
                Ok(!subset_count_dp(&f, &SubsetSumQuery::new(k, target, sorted.clone()))?.is_zero())
            };
            let eta = match eta {
                Some(e) => {
                    f.elem(e.0)?;
                    if !acceptable(e)? {
                        return Err(invalid!(
                            "eta = {} does not meet the {} variant's requirements",
                            e.0,
                            if mds { "MDS" } else { "NMDS" }
                        ));
                    }
                    e
                }
                None => {
                    let mut pick = None;
                    for e in f.nonzero_elements() {
                        if acceptable(e)? {
                            pick = Some(e);
                            break;
                        }
                    }
                    pick.ok_or_else(|| invalid!("no eta satisfies the variant's requirements"))?
                }
            };
            let u = u_vector(&f, &alpha)?;
            let v = roots(&f, &u, f.inv(f.mul(two, eta))?)?;
            certified(CodeSpec::new(f, alpha, v, eta, k, true)?)
        }
    }
}

fn roots(f: &Field, values: &[Elem], scale: Elem) -> Result<Vec<Elem>> {
    values
        .iter()
        .map(|&x| {
            let y = f.mul(scale, x);
            f.sqrt(y).ok_or_else(|| invalid!("{} is not a square", y.0))
        })
        .collect()
}

/// Trace construction over `GF(p^m)` with `2 | m/r`: `A_alpha` is the
/// complement of `Ker Tr_r^m`, `k = (p^m - p^{m-r})/2`,
/// `v_j = (Tr(alpha_j) / (2 eta))^{1/2}`; `eta` defaults to `2^{-1}`.
pub fn construct_trace(p: u32, m: u32, r: u32, eta: Option<Elem>) -> Result<Construction> {
    if p == 2 {
        return Err(invalid!("trace construction needs an odd prime"));
    }
    if r == 0 || !m.is_multiple_of(r) || !(m / r).is_multiple_of(2) {
        return Err(invalid!("need r | m with m/r even, got m = {m}, r = {r}"));
    }
    let f = Field::new(p, m)?;
    let q = f.order() as usize;
    let kernel = (q as u64 / u64::from(p).pow(r)) as usize;
    let n = q - kernel;
    let k = n / 2;
    if k < 3 || 2 * k + 2 > q {
        return Err(invalid!("k = {k} outside 3 <= k <= (q-2)/2"));
    }
    let two = f.from_int(2);
    let eta = match eta {
        Some(e) => {
            f.elem(e.0)?;
            if e.is_zero() {
                return Err(invalid!("eta must be nonzero"));
            }
            e
        }
        None => f.inv(two)?,
    };
    let mut alpha = Vec::with_capacity(n);
    let mut traces = Vec::with_capacity(n);
    for x in f.elements() {
        let t = f.trace(x, r)?;
        if !t.is_zero() {
            alpha.push(x);
            traces.push(t);
        }
    }
    let v = roots(&f, &traces, f.inv(f.mul(two, eta))?)?;
    certified(CodeSpec::new(f, alpha, v, eta, k, true)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub specs_checked: u128,
    pub self_dual: Vec<CodeSpec>,
    pub note: Option<&'static str>,
}

/// Number of specs [`refute_self_dual_etgrs`] visits.
pub fn refutation_size(q: u32, k: usize) -> u128 {
    if k < 2 || 2 * k - 1 > q as usize {
        return 0;
    }
    let n = 2 * k - 1;
    let subsets: u128 = binomial(u64::from(q), n as u64).try_into().unwrap_or(u128::MAX);
    subsets.saturating_mul(u128::from(q - 1).saturating_pow(n as u32))
}

/// Exhaustive search for self-dual extended codes, which need `n + 1 = 2k`.
/// Points run over sorted `n`-subsets, `v` over vectors with `v_1 = 1`
/// (scaling `v` scales the Gram matrix), `eta` over `F_q^*`.
pub fn refute_self_dual_etgrs(f: &Field, k: usize, budget: u128) -> Result<RefutationReport> {
    let q = f.order();
    let n = (2 * k).saturating_sub(1);
    let note = if k >= 3 && 2 * k <= q as usize {
        Some("self-orthogonality forces n >= 2k (g needs q - n roots at degree <= q - 2k), so n + 1 = 2k is impossible")
    } else {
        Some("k lies outside 3 <= k <= q/2, so this verdict rests on enumeration alone")
    };
    let needed = refutation_size(q, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { budget, needed });
    }
    let mut report = RefutationReport {
        q,
        k,
        n,
        specs_checked: 0,
        self_dual: Vec::new(),
        note,
    };
    if needed == 0 {
        return Ok(report);
    }
    let points: Vec<Elem> = f.elements().collect();
    let units: Vec<Elem> = f.nonzero_elements().collect();
    let mut result = Ok(());
    for_each_subset(points.len(), n, |idx| {
        let alpha: Vec<Elem> = idx.iter().map(|&i| points[i]).collect();
        for &eta in &units {
            let mut digits = vec![0usize; n - 1];
            loop {
                let mut v = vec![Elem::ONE];
                v.extend(digits.iter().map(|&d| units[d]));
                match CodeSpec::new(f.clone(), alpha.clone(), v, eta, k, true) {
                    Ok(spec) => {
                        report.specs_checked += 1;
                        if spec.code().self_orthogonality().self_dual {
                            report.self_dual.push(spec);
                        }
                    }
                    Err(e) => {
                        result = Err(e);
                        return false;
                    }
                }
                if !odometer(&mut digits, units.len()) {
                    break;
                }
            }
        }
        true
    });
    result.map(|()| report)
}

/// Advances a little-endian base-`radix` counter; false once it wraps.
fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Searches sorted point sets, then `eta`, then witnesses
/// `g = h * prod_{beta not in A}(x - beta)` for one whose values on `A` are
/// nonzero squares, and returns the first self-orthogonal spec found with
/// `v_j = g(alpha_j)^{1/2}`. `budget` bounds the number of `g` examined.
pub fn search_self_orthogonal(
    f: &Field,
    k: usize,
    n: usize,
    extended: bool,
    budget: u128,
) -> Result<Option<(CodeSpec, SelfOrthWitness)>> {
    let q = f.order() as usize;
    if k < 3 || 2 * k > q {
        return Err(Error::OutOfTheoremRange(format!("need 3 <= k <= q/2, got k = {k}, q = {q}")));
    }
    if n <= k || n > q {
        return Err(invalid!("need k < n <= q, got n = {n}"));
    }
    if n < 2 * k {
        return Ok(None);
    }
    let points: Vec<Elem> = f.elements().collect();
    let free = n - 2 * k + 1;
    let mut examined: u128 = 0;
    let mut outcome: Result<Option<(CodeSpec, SelfOrthWitness)>> = Ok(None);
    for_each_subset(q, n, |idx| {
        let alpha: Vec<Elem> = idx.iter().map(|&i| points[i]).collect();
        let zero_set = Poly::from_roots(f, &outside(f, &alpha));
        for eta in f.nonzero_elements() {
            let mut digits = vec![0usize; free];
            loop {
                examined += 1;
                if examined > budget {
                    outcome = Err(Error::BudgetExceeded {
                        budget,
                        needed: examined,
                    });
                    return false;
                }
                let h = Poly::new(digits.iter().map(|&d| Elem(d as u32)).collect());
                match try_candidate(f, &alpha, eta, k, extended, &zero_set.mul(f, &h)) {
                    Ok(Some(found)) => {
                        outcome = Ok(Some(found));
                        return false;
                    }
                    Ok(None) => {}
                    Err(e) => {
                        outcome = Err(e);
                        return false;
                    }
                }
                if !odometer(&mut digits, q) {
                    break;
                }
            }
        }
        true
    });
    outcome
}

fn try_candidate(
    f: &Field,
    alpha: &[Elem],
    eta: Elem,
    k: usize,
    extended: bool,
    g: &Poly,
) -> Result<Option<(CodeSpec, SelfOrthWitness)>> {
    let mut v = Vec::with_capacity(alpha.len());
    for &a in alpha {
        let y = g.eval(f, a);
        match f.sqrt(y) {
            Some(r) if !y.is_zero() => v.push(r),
            _ => return Ok(None),
        }
    }
    let spec = CodeSpec::new(f.clone(), alpha.to_vec(), v, eta, k, extended)?;
    let (row, value, _) = condition_row(&spec);
    if f.sum(row.iter().zip(g.coeffs()).map(|(&a, &b)| f.mul(a, b))) != value {
        return Ok(None);
    }
    let witness = solve_self_orth(&spec)?
        .ok_or_else(|| Error::Inconsistent("searched witness rejected by the solver".into()))?;
    Ok(Some((spec, witness)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_q9() {
        let c = construct_trace(3, 2, 1, None).unwrap();
        assert_eq!((c.spec.length(), c.spec.k()), (7, 3));
        assert_eq!(c.certificate.verdict, Duality::AlmostSelfDual);
        assert!(c.spec.code().gram().is_zero());
        assert!(solve_self_orth(&c.spec).unwrap().is_some());
        assert!(construct_trace(3, 2, 2, None).is_err());
    }

    #[test]
    fn even_q16() {
        let f = Field::new(2, 4).unwrap();
        let all: Vec<Elem> = f.elements().collect();
        let a = first_subset_with_sum(&f, &all, 6, Elem::ZERO).unwrap();
        let c = construct_even(&f, 3, a, Duality::SelfDual, Elem::ONE).unwrap();
        assert_eq!(c.certificate.verdict, Duality::SelfDual);
        let units: Vec<Elem> = f.nonzero_elements().collect();
        let a = first_subset_with_sum(&f, &units, 6, Elem::ONE).unwrap();
        let c = construct_even(&f, 3, a.clone(), Duality::AlmostSelfDual, Elem(5)).unwrap();
        assert_eq!(c.spec.length(), 7);
        assert!(construct_even(&f, 3, a, Duality::SelfDual, Elem::ONE).is_err());
    }

    #[test]
    fn odd_q49() {
        let hole = construct_odd_pcd1(7, 1, 3, OddVariant::ZeroHole { i0: 1 }, None).unwrap();
        assert_eq!(hole.certificate.verdict, Duality::SelfDual);
        for variant in [OddVariant::PlainMds, OddVariant::PlainNmds] {
            let c = construct_odd_pcd1(7, 1, 3, variant, None).unwrap();
            assert_eq!(c.certificate.verdict, Duality::AlmostSelfDual);
        }
        assert!(construct_odd_pcd1(7, 1, 3, OddVariant::ZeroHole { i0: 0 }, None).is_err());
        assert!(construct_odd_pcd1(7, 1, 3, OddVariant::PlainMds, Some(Elem(1))).is_err());
    }

    #[test]
    fn descent_and_errors() {
        let c = construct_trace(3, 2, 1, None).unwrap();
        assert_eq!(descend_self_orthogonal(&c.spec, 3).unwrap(), c.spec);
        assert!(descend_self_orthogonal(&c.spec, 2).is_err());
        let f = Field::new(7, 1).unwrap();
        let spec = CodeSpec::unit(f, (0..6).map(Elem).collect(), Elem(1), 2, true).unwrap();
        assert!(matches!(find_witness(&spec), Err(Error::OutOfTheoremRange(_))));
    }

    #[test]
    fn refute_q5() {
        let f = Field::new(5, 1).unwrap();
        let report = refute_self_dual_etgrs(&f, 3, 1 << 20).unwrap();
        assert_eq!(report.specs_checked, 1024);
        assert!(report.self_dual.is_empty());
        assert!(matches!(refute_self_dual_etgrs(&f, 3, 10), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn search_finds_trace_shape() {
        let f = Field::new(3, 2).unwrap();
        let (spec, w) = search_self_orthogonal(&f, 3, 6, true, 1 << 20).unwrap().unwrap();
        assert!(spec.code().gram().is_zero());
        assert_eq!(w.condition, CoefficientCondition::Unit);
        assert!(search_self_orthogonal(&f, 3, 5, true, 1 << 20).unwrap().is_none());
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
