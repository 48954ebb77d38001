use etgrs_core::analysis::{etgrs_classify, non_grs_certificate, NonGrsCertificate};
use etgrs_core::selfdual::{
    construct_odd_pcd1, descend_self_orthogonal, find_witness, search_self_orthogonal, solve_self_orth,
    OddVariant,
};
use etgrs_core::tgrs::{l_sum, l_sum_closed};
use etgrs_core::{Classification, CodeSpec, Elem, Error, Field};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_spec(rng: &mut StdRng, f: &Field, n: usize, k: usize, extended: bool) -> CodeSpec {
    let q = f.order();
    let mut pts: Vec<Elem> = f.elements().collect();
    pts.shuffle(rng);
    let v = (0..n).map(|_| Elem(rng.gen_range(1..q))).collect();
    let eta = Elem(rng.gen_range(1..q));
    CodeSpec::new(f.clone(), pts[..n].to_vec(), v, eta, k, extended).unwrap()
}

#[test]
fn generator_rank_and_last_row() {
    let f = Field::new(7, 1).unwrap();
    let mut rng = StdRng::seed_from_u64(10);
    for k in 2..=5 {
        for _ in 0..5 {
            let spec = random_spec(&mut rng, &f, 6, k, true);
            let g = spec.generator_matrix();
            assert_eq!(g.rank(&f), k);
            for (j, (&a, &v)) in spec.alpha().iter().zip(spec.v()).enumerate() {
                let grs_entry = f.mul(v, f.pow(a, (k - 1) as u64));
                let twist = f.mul(spec.eta(), f.mul(v, f.pow(a, k as u64)));
                assert_eq!(f.sub(g.get(k - 1, j), grs_entry), twist);
            }
            let plain = spec.with_extended(false).generator_matrix();
            let cols: Vec<usize> = (0..6).collect();
            assert_eq!(g.select_columns(&cols), plain);
        }
    }
}

#[test]
fn parity_check_over_f8() {
    let f = Field::new(2, 3).unwrap();
    let spec = CodeSpec::unit(f.clone(), (1..8).map(Elem).collect(), Elem(5), 3, true).unwrap();
    let h = spec.parity_check().unwrap();
    assert!(h.mul_transpose(&f, &spec.generator_matrix()).unwrap().is_zero());
    assert_eq!(h.rank(&f), 5);
}

#[test]
fn parity_check_is_the_dual() {
    let mut rng = StdRng::seed_from_u64(11);
    for (p, m) in [(2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order() as usize;
        for n in 3..=q {
            for k in 2..n {
                let spec = random_spec(&mut rng, &f, n, k, true);
                let h = spec.parity_check().unwrap();
                assert!(h.row_space_equal(&f, spec.code().dual().generator()).unwrap());
                let g = etgrs_core::Poly::new((0..=n - k).map(|_| Elem(rng.gen_range(0..q as u32))).collect());
                assert!(spec.code().dual().contains(&spec.dual_codeword(&g).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn dual_distance_at_least_k() {
    let mut rng = StdRng::seed_from_u64(12);
    for (p, m) in [(5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order() as usize;
        for _ in 0..15 {
            let n = rng.gen_range(4..=q);
            let k = rng.gen_range(2..n);
            let spec = random_spec(&mut rng, &f, n, k, true);
            let dual = spec.code().dual();
            if etgrs_core::codes::code_size(q as u64, dual.dimension()) <= (1u32 << 22).into() {
                assert!(dual.min_distance().unwrap() >= k);
            }
        }
    }
}

#[test]
fn l_sum_small_sets() {
    let f = Field::new(5, 1).unwrap();
    let all: Vec<Elem> = f.elements().collect();
    for mask in 0u32..32 {
        let set: Vec<Elem> = (0..5).filter(|i| mask & (1 << i) != 0).map(|i| all[i]).collect();
        if set.len() <= 2 {
            assert!(l_sum(&f, &set, 0).is_err());
            continue;
        }
        for m in 0..=set.len() {
            assert_eq!(l_sum(&f, &set, m).unwrap(), l_sum_closed(&f, &set, m).unwrap());
        }
    }
}

#[test]
fn classification_against_enumeration() {
    let mut rng = StdRng::seed_from_u64(13);
    for (p, m) in [(5, 1), (7, 1), (2, 3)] {
        let f = Field::new(p, m).unwrap();
        let q = f.order() as usize;
        for _ in 0..20 {
            let n = rng.gen_range(4..=q);
            let k = rng.gen_range(2..n.min(5));
            let spec = random_spec(&mut rng, &f, n, k, true);
            let class = etgrs_classify(&spec).unwrap();
            let wd = spec.code().weight_distribution().unwrap();
            assert_eq!(class.classification, wd.classification());
            assert_eq!(class.a_min, wd.counts()[n + 1 - k]);
        }
    }
    let f = Field::new(7, 1).unwrap();
    let plain = CodeSpec::unit(f, (1..5).map(Elem).collect(), Elem(1), 3, false).unwrap();
    assert!(etgrs_classify(&plain).is_err());
}

#[test]
fn non_grs_examples() {
    let f7 = Field::new(7, 1).unwrap();
    let spec = CodeSpec::unit(f7, (0..6).map(Elem).collect(), Elem(2), 3, true).unwrap();
    assert_eq!(
        non_grs_certificate(&spec).unwrap(),
        NonGrsCertificate::LowRate { square_dimension: 6, grs_dimension: 5 }
    );
    // odd n with k = (n + 1)/2
    let f8 = Field::new(2, 3).unwrap();
    let spec = CodeSpec::unit(f8.clone(), (0..5).map(Elem).collect(), Elem(3), 3, true).unwrap();
    assert_eq!(
        non_grs_certificate(&spec).unwrap(),
        NonGrsCertificate::LowRate { square_dimension: 6, grs_dimension: 5 }
    );
    let k2 = spec.with_k(2).unwrap();
    assert!(matches!(non_grs_certificate(&k2), Err(Error::OutOfTheoremRange(_))));
    let spec = CodeSpec::unit(f8.clone(), (0..7).map(Elem).collect(), Elem(3), 4, true).unwrap();
    assert_eq!(
        non_grs_certificate(&spec).unwrap(),
        NonGrsCertificate::LowRate { square_dimension: 8, grs_dimension: 7 }
    );
    let spec = CodeSpec::unit(f8, (1..8).map(Elem).collect(), Elem(6), 5, true).unwrap();
    assert!(matches!(non_grs_certificate(&spec).unwrap(), NonGrsCertificate::HighRate { .. }));
}

#[test]
fn short_codes_have_no_witness() {
    let f = Field::new(2, 3).unwrap();
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..50 {
        let n = rng.gen_range(6..8);
        let extended = rng.gen();
        let spec = random_spec(&mut rng, &f, n, 4, extended);
        assert!(find_witness(&spec).unwrap().is_none());
        assert!(!spec.code().gram().is_zero());
    }
}

#[test]
fn descent_at_q49() {
    let hole = construct_odd_pcd1(7, 1, 3, OddVariant::ZeroHole { i0: 2 }, None).unwrap();
    assert_eq!(descend_self_orthogonal(&hole.spec, 3).unwrap(), hole.spec);
    let plain = construct_odd_pcd1(7, 1, 3, OddVariant::PlainMds, None).unwrap();
    let code = plain.spec.code();
    assert_eq!(code.min_distance().unwrap(), 5);
    assert_eq!(etgrs_classify(&plain.spec).unwrap().classification, Classification::Mds);
    let nmds = construct_odd_pcd1(7, 1, 3, OddVariant::PlainNmds, None).unwrap();
    assert_eq!(nmds.spec.code().min_distance().unwrap(), 4);
    assert!(solve_self_orth(&nmds.spec).unwrap().is_some());
}

#[test]
fn extended_descent_rejects_zero() {
    let f = Field::new(7, 1).unwrap();
    let (spec, _) = search_self_orthogonal(&f, 3, 7, true, 1 << 22).unwrap().unwrap();
    assert_eq!(spec.alpha_set()[0], Elem::ZERO);
    assert!(descend_self_orthogonal(&spec, 3).is_err());
    let plain = spec.with_extended(false);
    if solve_self_orth(&plain).unwrap().is_some() {
        assert!(descend_self_orthogonal(&plain, 3).is_ok());
    }
}
