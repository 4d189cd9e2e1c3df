use std::collections::{BTreeSet, HashSet};

use confhom::algebra::{monomial_mul, Element, FpMatrix, Generator, Monomial, Prime, Product};
use confhom::brackets::{cohen_generators, enumerate_basic_brackets, Bracket, LabelClass};
use confhom::bv::{delta, delta_element, delta_matrix, graded_basis};
use confhom::catalog::{plane_config_generators, sphere_labelled_generators};
use confhom::enumeration::{d, monomial_basis, poincare, series_coefficient};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn monomials_up_to(gens: &[Generator], w: u64) -> Vec<Monomial> {
    (0..=w).flat_map(|n| monomial_basis(gens, n)).collect()
}

fn signed(prod: Product, p: Prime) -> Element {
    match prod {
        Product::Zero => Element::zero(p),
        Product::Term { negative, monomial } => {
            Element::term(monomial, if negative { p.get() - 1 } else { 1 }, p)
        }
    }
}

#[test]
fn product_is_graded_commutative_up_to_weight_twelve() {
    for p in [3, 5] {
        let p = prime(p);
        let ms = monomials_up_to(&plane_config_generators(p, 12), 12);
        for a in &ms {
            for b in &ms {
                if a.weight() + b.weight() > 12 {
                    continue;
                }
                let ab = signed(monomial_mul(a, b), p);
                let ba = signed(monomial_mul(b, a), p);
                let sign = if a.degree() * b.degree() % 2 == 1 {
                    p.get() - 1
                } else {
                    1
                };
                assert_eq!(ab, ba.scale(sign), "{a} * {b}");
            }
        }
    }
}

#[test]
fn product_is_associative_up_to_weight_twelve() {
    let p = prime(3);
    let ms = monomials_up_to(&plane_config_generators(p, 12), 12);
    for a in &ms {
        for b in &ms {
            for c in &ms {
                if a.weight() + b.weight() + c.weight() > 12 {
                    continue;
                }
                let (ea, eb, ec) = (
                    Element::from_monomial(a.clone(), p),
                    Element::from_monomial(b.clone(), p),
                    Element::from_monomial(c.clone(), p),
                );
                assert_eq!(
                    ea.mul(&eb).mul(&ec),
                    ea.mul(&eb.mul(&ec)),
                    "({a})({b})({c})"
                );
            }
        }
    }
}

#[test]
fn sphere_generators_anticommute() {
    let p = prime(5);
    let gens = sphere_labelled_generators(p, 3, 25).unwrap();
    let ms = monomials_up_to(&gens, 10);
    for a in &ms {
        for b in &ms {
            let ab = signed(monomial_mul(a, b), p);
            let ba = signed(monomial_mul(b, a), p);
            let sign = if a.degree() * b.degree() % 2 == 1 {
                p.get() - 1
            } else {
                1
            };
            assert_eq!(ab, ba.scale(sign));
        }
    }
}

#[test]
fn canonical_form_is_idempotent() {
    for p in [2, 3, 5] {
        let p = prime(p);
        for m in monomials_up_to(&plane_config_generators(p, 20), 20) {
            assert!(m.is_canonical());
            assert_eq!(m.canonicalize().as_ref(), Some(&m));
        }
    }
}

#[test]
fn rank_plus_nullity_on_random_matrices() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for p in [2, 3, 5] {
        let p = prime(p);
        for _ in 0..1000 {
            let rows = rng.gen_range(0..8);
            let cols = rng.gen_range(0..8);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| rng.gen_range(0..p.get() as i64))
                        .collect()
                })
                .collect();
            let m = if rows == 0 {
                FpMatrix::zeros(0, cols, p)
            } else {
                FpMatrix::from_rows(&data, p)
            };
            let r = m.rank_kernel_image();
            assert_eq!(r.rank + r.kernel.len(), m.cols());
            assert!(r.rank <= m.rows().min(m.cols()));
            for v in &r.kernel {
                assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
            // image vectors are independent columns of m
            assert_eq!(r.image.len(), r.rank);
            if r.rank > 0 {
                let img_rows: Vec<Vec<i64>> = (0..m.rows())
                    .map(|i| r.image.iter().map(|c| c[i] as i64).collect())
                    .collect();
                assert_eq!(FpMatrix::from_rows(&img_rows, p).rank(), r.rank);
            }
        }
    }
}

proptest! {
    #[test]
    fn kernel_vectors_are_independent(entries in proptest::collection::vec(0i64..7, 30)) {
        let p = prime(7);
        let rows: Vec<Vec<i64>> = entries.chunks(6).map(|c| c.to_vec()).collect();
        let m = FpMatrix::from_rows(&rows, p);
        let r = m.rank_kernel_image();
        if !r.kernel.is_empty() {
            let k_rows: Vec<Vec<i64>> = r.kernel.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
            prop_assert_eq!(FpMatrix::from_rows(&k_rows, p).rank(), r.kernel.len());
        }
    }

    #[test]
    fn element_sum_is_commutative(ka in 0u32..12, kb in 0u32..12, ca in 0u32..5, cb in 0u32..5) {
        let p = prime(5);
        let a = Element::term(Monomial::power(Generator::iota(), ka).unwrap(), ca, p);
        let b = Element::term(Monomial::power(Generator::iota(), kb).unwrap(), cb, p);
        prop_assert_eq!(a.add(&b), b.add(&a));
    }
}

/// Every binary tree on the given leaves with at most `max_weight` leaves.
fn all_trees(labels: &[LabelClass], max_weight: usize) -> Vec<Bracket> {
    let mut by_weight: Vec<Vec<Bracket>> = vec![Vec::new(); max_weight + 1];
    by_weight[1] = labels.iter().cloned().map(Bracket::leaf).collect();
    for k in 2..=max_weight {
        let mut out = Vec::new();
        for i in 1..k {
            for a in &by_weight[i] {
                for b in &by_weight[k - i] {
                    out.push(Bracket::node(a.clone(), b.clone()));
                }
            }
        }
        by_weight[k] = out;
    }
    by_weight.into_iter().flatten().collect()
}

#[test]
fn enumeration_matches_brute_force_admissibility() {
    let cases: Vec<(Vec<LabelClass>, usize)> = vec![
        (vec![LabelClass::new("a", 0)], 6),
        (vec![LabelClass::new("a", 0), LabelClass::new("b", 0)], 6),
        (vec![LabelClass::new("x", 1), LabelClass::new("y", 2)], 5),
        (
            vec![
                LabelClass::new("a", 0),
                LabelClass::new("b", 1),
                LabelClass::new("c", 3),
            ],
            4,
        ),
    ];
    for p in [2, 3, 5] {
        let p = prime(p);
        for (labels, w) in &cases {
            let brute: HashSet<Bracket> = all_trees(labels, *w)
                .into_iter()
                .filter(|t| t.is_basic(p))
                .collect();
            let got = enumerate_basic_brackets(labels, *w as u64, p).unwrap();
            let got_set: HashSet<Bracket> = got.iter().cloned().collect();
            assert_eq!(got.len(), got_set.len(), "duplicates");
            assert_eq!(got_set, brute, "p={p} labels={labels:?}");
            for pair in got.windows(2) {
                assert!(pair[0].order_cmp(&pair[1]).is_lt());
                assert!(pair[0].weight() <= pair[1].weight());
            }
        }
    }
}

#[test]
fn one_white_particle_per_weight() {
    let labels = [LabelClass::new("a", 0), LabelClass::new("b", 0)];
    for p in [2, 3, 5] {
        let all = enumerate_basic_brackets(&labels, 8, prime(p)).unwrap();
        let white: Vec<String> = all
            .iter()
            .filter(|b| b.count_label("b") == 1)
            .map(|b| b.to_string())
            .collect();
        let mut expected = vec!["b".to_string()];
        for _ in 1..8 {
            let prev = expected.last().unwrap().clone();
            expected.push(format!("[a,{prev}]"));
        }
        assert_eq!(white, expected);
    }
}

#[test]
fn dyer_lashof_degree_rule() {
    for p in [3u32, 5, 7] {
        let pr = prime(p);
        let labels = [LabelClass::new("x", 1), LabelClass::new("y", 3)];
        let bs = enumerate_basic_brackets(&labels, 3, pr).unwrap();
        let gens = cohen_generators(&bs, pr, 3 * (p as u64).pow(2));
        let set: BTreeSet<(u64, u64)> = gens.iter().map(|g| (g.weight(), g.degree())).collect();
        for g in &gens {
            if g.is_odd() && g.weight() * p as u64 <= 3 * (p as u64).pow(2) {
                let next = (g.weight() * p as u64, p as u64 * g.degree() + p as u64 - 1);
                assert!(set.contains(&next), "missing Q of {g}");
            }
        }
    }
}

#[test]
fn enumeration_agrees_with_series() {
    for p in [2, 3, 5] {
        let p = prime(p);
        let gens = plane_config_generators(p, 30);
        for n in 0..=30 {
            assert_eq!(
                poincare(n, p).truncate(64),
                series_coefficient(&gens, n, 64),
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn multiplication_by_iota() {
    for p in [2u32, 3, 5] {
        let pr = prime(p);
        let gens = plane_config_generators(pr, 41);
        for n in 0..=40u64 {
            let src = monomial_basis(&gens, n);
            let tgt: HashSet<Monomial> = monomial_basis(&gens, n + 1).into_iter().collect();
            let iota = Monomial::generator(Generator::iota());
            let images: HashSet<Monomial> = src
                .iter()
                .map(|m| match monomial_mul(&iota, m) {
                    Product::Term { monomial, .. } => monomial,
                    Product::Zero => panic!("ι is polynomial"),
                })
                .collect();
            assert_eq!(images.len(), src.len());
            assert!(images.is_subset(&tgt));
            assert!(d(n + 1, pr) >= d(n, pr));
            if n % p as u64 == 0 {
                assert_eq!(images, tgt, "p={p} n={n}");
            }
        }
    }
}

#[test]
fn delta_squares_to_zero_and_is_homogeneous() {
    for p in [2, 3, 5] {
        let p = prime(p);
        for n in 0..=24 {
            for (deg, ms) in graded_basis(n, p) {
                for m in ms {
                    let img = delta(&m, p);
                    for (t, _) in img.terms() {
                        assert_eq!((t.weight(), t.degree()), (n, deg + 1));
                    }
                    assert!(delta_element(&img).is_zero(), "Δ² ≠ 0 on {m}");
                }
            }
        }
    }
}

#[test]
fn delta_on_u_free_monomials_is_injective_onto_u_monomials() {
    for p in [3u32, 5] {
        let pr = prime(p);
        for n in 0..=24u64 {
            if n % p as u64 <= 1 {
                continue;
            }
            let basis = graded_basis(n, pr);
            let free = basis.values().flatten().filter(|m| !m.contains_u()).count();
            let with_u = basis.values().flatten().filter(|m| m.contains_u()).count();
            assert_eq!(free, with_u);
            for (&deg, ms) in &basis {
                let mat = delta_matrix(n, pr, deg);
                let u_free_cols = ms.iter().filter(|m| !m.contains_u()).count();
                assert_eq!(mat.rank(), u_free_cols.min(mat.rows()));
                assert_eq!(mat.rank(), u_free_cols);
            }
        }
    }
}
