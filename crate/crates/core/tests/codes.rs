use etgrs_core::codes::{hamming_weight, nmds_distribution};
use etgrs_core::grs::{u_vector, GrsSpec};
use etgrs_core::{BigUint, Classification, CodeSpec, Elem, Field, LinearCode, Matrix};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_matrix(rng: &mut StdRng, f: &Field, rows: usize, cols: usize) -> Matrix {
    let q = f.order();
    let data = (0..rows * cols).map(|_| Elem(rng.gen_range(0..q))).collect();
    Matrix::from_vec(rows, cols, data).unwrap()
}

fn random_code(rng: &mut StdRng, f: &Field, k: usize, n: usize) -> LinearCode {
    loop {
        let m = random_matrix(rng, f, k, n);
        if m.rank(f) == k {
            return LinearCode::new(f.clone(), m).unwrap();
        }
    }
}

fn all_vectors(f: &Field, n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                f.elements().map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn rank_nullity_by_enumeration() {
    let f = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(1);
    let vectors = all_vectors(&f, 6);
    for _ in 0..6 {
        let m = random_matrix(&mut rng, &f, 4, 6);
        let kernel = m.right_kernel(&f);
        assert_eq!(kernel.rows() + m.rank(&f), 6);
        assert!(m.mul_transpose(&f, &kernel).unwrap().is_zero());
        let brute = vectors
            .iter()
            .filter(|x| (0..4).all(|r| etgrs_core::linalg::dot(&f, m.row(r), x).is_zero()))
            .count();
        assert_eq!(brute, 5usize.pow(kernel.rows() as u32));
    }
}

#[test]
fn solve_examples() {
    let f = Field::new(7, 1).unwrap();
    let a = Matrix::from_rows(2, &[vec![Elem(1), Elem(1)], vec![Elem(1), Elem(2)]]).unwrap();
    assert_eq!(a.solve(&f, &[Elem(6), Elem(1)]).unwrap(), Some(vec![Elem(4), Elem(2)]));
    let col = Matrix::from_rows(1, &[vec![Elem(1)], vec![Elem(1)]]).unwrap();
    assert_eq!(col.solve(&f, &[Elem(0), Elem(1)]).unwrap(), None);
    assert!(col.solve(&f, &[Elem(0)]).is_err());
}

#[test]
fn double_dual_and_min_distance() {
    let f = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..20 {
        let k = rng.gen_range(1..6);
        let c = random_code(&mut rng, &f, k, 6);
        let d = c.dual();
        assert_eq!(d.dimension(), 6 - k);
        assert!(d.dual().same_space(&c).unwrap());
        let brute = all_vectors(&f, k)
            .iter()
            .filter(|m| m.iter().any(|e| !e.is_zero()))
            .map(|m| hamming_weight(&c.encode(m).unwrap()))
            .min()
            .unwrap();
        assert_eq!(c.min_distance().unwrap(), brute);
    }
}

#[test]
fn grs_duals_match_kernels() {
    for (p, m) in [(5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order() as usize;
        let mut rng = StdRng::seed_from_u64(3);
        let mut pts: Vec<Elem> = f.elements().collect();
        pts.shuffle(&mut rng);
        for n in 3..=q {
            let alpha = pts[..n].to_vec();
            let v: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(1..q as u32))).collect();
            for k in 1..n {
                for extended in [false, true] {
                    let spec = GrsSpec::new(f.clone(), alpha.clone(), v.clone(), k, extended).unwrap();
                    let c = spec.generator();
                    assert!(spec.dual().same_space(&c.dual()).unwrap(), "{f} n={n} k={k} ext={extended}");
                }
            }
        }
    }
}

#[test]
fn grs_squares() {
    // Low-rate square of GRS and high-rate square of its dual.
    for (p, m) in [(5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order() as usize;
        for n1 in 4..=q {
            let alpha: Vec<Elem> = f.elements().take(n1).collect();
            let u = u_vector(&f, &alpha).unwrap();
            let u2: Vec<Elem> = u.iter().map(|&x| f.mul(x, x)).collect();
            for k in 1..n1 {
                let c = GrsSpec::rs(f.clone(), alpha.clone(), k, false).unwrap().generator();
                if 2 * k - 1 <= n1 {
                    let sq = GrsSpec::rs(f.clone(), alpha.clone(), 2 * k - 1, false).unwrap().generator();
                    assert!(c.schur_square().same_space(&sq).unwrap());
                }
                let dk = n1 - k;
                if 2 * dk - 1 <= n1 {
                    let sq = GrsSpec::new(f.clone(), alpha.clone(), u2.clone(), 2 * dk - 1, false)
                        .unwrap()
                        .generator();
                    assert!(c.dual().schur_square().same_space(&sq).unwrap());
                }
            }
        }
    }
    let f8 = Field::new(2, 3).unwrap();
    let alpha: Vec<Elem> = (0..7).map(Elem).collect();
    let c = GrsSpec::rs(f8.clone(), alpha.clone(), 3, false).unwrap().generator();
    let five = GrsSpec::rs(f8, alpha, 5, false).unwrap().generator();
    assert!(c.schur_square().same_space(&five).unwrap());
}

#[test]
fn schur_product_basics() {
    let f = Field::new(7, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(4);
    let ones = LinearCode::new(f.clone(), Matrix::from_vec(1, 6, vec![Elem::ONE; 6]).unwrap()).unwrap();
    for _ in 0..10 {
        let a = random_code(&mut rng, &f, 2, 6);
        let b = random_code(&mut rng, &f, 3, 6);
        assert!(a.schur_product(&ones).unwrap().same_space(&a).unwrap());
        let ab = a.schur_product(&b).unwrap();
        assert!(ab.same_space(&b.schur_product(&a).unwrap()).unwrap());
        assert!(ab.dimension() <= 6);
    }
}

#[test]
fn monomial_maps_preserve_weights_and_squares() {
    let f = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..10 {
        let c = random_code(&mut rng, &f, 3, 5);
        let mut perm: Vec<usize> = (0..5).collect();
        perm.shuffle(&mut rng);
        let scale: Vec<Elem> = (0..5).map(|_| Elem(rng.gen_range(1..5))).collect();
        let t = c.monomial_transform(&perm, &scale).unwrap();
        assert_eq!(t.weight_distribution().unwrap(), c.weight_distribution().unwrap());
        let sq_scale: Vec<Elem> = scale.iter().map(|&s| f.mul(s, s)).collect();
        let mapped = c.schur_square().monomial_transform(&perm, &sq_scale).unwrap();
        assert!(t.schur_square().same_space(&mapped).unwrap());
        let id: Vec<usize> = (0..5).collect();
        assert!(c.monomial_transform(&id, &[Elem::ONE; 5]).unwrap().same_space(&c).unwrap());
        assert_eq!(
            c.monomial_transform(&perm, &[Elem::ONE; 5]).unwrap().self_orthogonality(),
            c.self_orthogonality()
        );
    }
    let c = random_code(&mut rng, &f, 2, 5);
    assert!(c.monomial_transform(&[0, 1, 2, 3, 3], &[Elem::ONE; 5]).is_err());
    assert!(c.monomial_transform(&[0, 1, 2, 3, 4], &[Elem::ZERO; 5]).is_err());
}

#[test]
fn puncture_of_full_field_code() {
    // Every (+)-ETGRS code is a monomial image of a punctured C_{k,q}(F_q, 1, eta, inf).
    let f = Field::new(7, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..20 {
        let n = rng.gen_range(4..=7);
        let k = rng.gen_range(2..n);
        let mut pts: Vec<Elem> = f.elements().collect();
        pts.shuffle(&mut rng);
        let alpha = pts[..n].to_vec();
        let v: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(1..7))).collect();
        let eta = Elem(rng.gen_range(1..7));
        let spec = CodeSpec::new(f.clone(), alpha.clone(), v.clone(), eta, k, true).unwrap();
        let full = CodeSpec::unit(f.clone(), f.elements().collect(), eta, k, true).unwrap();
        let mut idx: Vec<usize> = alpha.iter().map(|a| a.0 as usize).collect();
        idx.sort_unstable();
        idx.push(7);
        let punct = full.code().puncture(&idx).unwrap();
        let mut perm: Vec<usize> = alpha.iter().map(|a| idx.iter().position(|&i| i == a.0 as usize).unwrap()).collect();
        perm.push(n);
        let mut scale = v.clone();
        scale.push(Elem::ONE);
        let mapped = punct.monomial_transform(&perm, &scale).unwrap();
        assert!(mapped.same_space(&spec.code()).unwrap());
    }
    let rep = LinearCode::new(f.clone(), Matrix::from_vec(1, 2, vec![Elem(1), Elem(1)]).unwrap()).unwrap();
    assert_eq!(rep.puncture(&[0]).unwrap().dimension(), 1);
    assert!(rep.puncture(&[0, 0]).is_err());
    assert!(rep.puncture(&[2]).is_err());
}

#[test]
fn self_orthogonality_criterion_q5() {
    // Phi_{1,v}(C_I) is self-orthogonal iff the vector with v_j^2 on I lies in (C^2)^perp.
    let f = Field::new(5, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let mut positives = 0;
    for n in 2..=5 {
        for k in 1..n {
            for _ in 0..3 {
                let c = random_code(&mut rng, &f, k, n);
                let square_dual = c.schur_square().dual();
                for mask in 1u32..(1 << n) {
                    let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                    let punct = c.puncture(&idx).unwrap();
                    for v in all_vectors(&f, idx.len()) {
                        if v.iter().any(|e| e.is_zero()) {
                            continue;
                        }
                        let id: Vec<usize> = (0..idx.len()).collect();
                        let so = punct.monomial_transform(&id, &v).unwrap().self_orthogonality().self_orthogonal;
                        let mut w = vec![Elem::ZERO; n];
                        for (&i, &x) in idx.iter().zip(&v) {
                            w[i] = f.mul(x, x);
                        }
                        assert_eq!(so, square_dual.contains(&w).unwrap());
                        positives += usize::from(so);
                    }
                }
            }
        }
    }
    assert!(positives > 0);
}

#[test]
fn self_orthogonality_flags() {
    let f2 = Field::new(2, 1).unwrap();
    let rep = LinearCode::new(f2.clone(), Matrix::from_vec(1, 2, vec![Elem(1), Elem(1)]).unwrap()).unwrap();
    let so = rep.self_orthogonality();
    assert!(so.self_orthogonal && so.self_dual && !so.almost_self_dual);
    assert!(!LinearCode::full_space(f2.clone(), 3).self_orthogonality().self_orthogonal);
    assert_eq!(rep.dual().dimension(), 1);
    assert!(rep.dual().same_space(&rep).unwrap());
    assert_eq!(LinearCode::full_space(f2, 3).dual().dimension(), 0);
}

#[test]
fn weight_distribution_examples() {
    let f2 = Field::new(2, 1).unwrap();
    let rep = LinearCode::new(f2, Matrix::from_vec(1, 2, vec![Elem(1), Elem(1)]).unwrap()).unwrap();
    assert_eq!(rep.weight_distribution().unwrap().counts_u64().unwrap(), vec![1, 0, 1]);
    let f7 = Field::new(7, 1).unwrap();
    let c = CodeSpec::unit(f7, (1..=4).map(Elem).collect(), Elem(1), 3, true).unwrap().code();
    let wd = c.weight_distribution().unwrap();
    assert_eq!(wd.counts()[2], BigUint::from(6u32));
    assert_eq!(wd.classification(), Classification::Nmds);
    assert_eq!(wd.total(), BigUint::from(343u32));
    let (primal, dual) = nmds_distribution(5, 3, 7, &BigUint::from(6u32)).unwrap();
    assert_eq!(primal, wd);
    assert_eq!(dual.counts()[3], primal.counts()[2]);
    assert_eq!(dual, c.dual().weight_distribution().unwrap());
}

#[test]
fn nmds_formula_against_enumeration() {
    let mut rng = StdRng::seed_from_u64(8);
    for (p, m) in [(5, 1), (7, 1), (2, 3)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order();
        let mut checked = 0;
        for _ in 0..200 {
            let n = rng.gen_range(4..=7);
            let k = rng.gen_range(2..n - 1);
            let c = random_code(&mut rng, &f, k, n);
            let wd = c.weight_distribution().unwrap();
            if !matches!(wd.classification(), Classification::Mds | Classification::Nmds) {
                continue;
            }
            let a_min = wd.counts()[n - k].clone();
            let (primal, dual) = nmds_distribution(n, k, u64::from(q), &a_min).unwrap();
            assert_eq!(primal, wd);
            assert_eq!(dual, c.dual().weight_distribution().unwrap());
            checked += 1;
        }
        assert!(checked > 10, "{f}: only {checked} MDS/NMDS samples");
    }
    assert!(nmds_distribution(5, 3, 7, &BigUint::from(10_000u32)).is_err());
}

#[test]
fn capacity_error() {
    let f = Field::new(2, 4).unwrap();
    let big = LinearCode::full_space(f, 7);
    assert!(matches!(big.min_distance(), Err(etgrs_core::Error::Capacity { .. })));
}
