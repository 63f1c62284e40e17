use super::*;
use crate::combin::{
    degree, graded_dim_algebra, multipartitions, positive_exponents, standard_tableaux, Multipartition, QuiverData,
    StandardTableau,
};
use crate::hecke::Element;
use crate::klr::{Klr, KlrConfig};
use crate::linalg::Matrix;
use crate::scalars::{Fp, Laurent, Rational, Scalar};

fn fp(v: i64, p: u64) -> Fp {
    Fp::new(v, p).unwrap()
}

fn graded(n: usize, e: u64, kappa: Vec<i64>, q: i64, p: u64) -> Graded<Fp> {
    let cfg = KlrConfig::new(n, fp(q, p), QuiverData::new(e, kappa).unwrap()).unwrap();
    Graded::new(Klr::new(cfg).unwrap()).unwrap()
}

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

/// The small configurations used throughout.
fn configs() -> Vec<Graded<Fp>> {
    vec![
        graded(2, 2, vec![0], 4, 5),
        graded(3, 2, vec![0], 4, 5),
        graded(3, 3, vec![0], 2, 7),
        graded(2, 2, vec![2, 0], 4, 5),
        graded(3, 2, vec![3, 0], 4, 5),
        graded(3, 3, vec![0, 1], 2, 7),
    ]
}

#[test]
fn construction_errors() {
    let cfg = KlrConfig::new(2, fp(1, 3), QuiverData::new(3, vec![0]).unwrap()).unwrap();
    assert_eq!(Graded::new(Klr::new(cfg).unwrap()).unwrap_err(), GradedError::Degenerate);
    let cfg = KlrConfig::new(3, fp(4, 5), QuiverData::new(2, vec![0]).unwrap()).unwrap();
    assert_eq!(
        Graded::with_max_dim(Klr::new(cfg).unwrap(), 5).unwrap_err(),
        GradedError::TooLarge { dim: 6, max: 5 }
    );
}

#[test]
fn transition_example() {
    let g = graded(2, 2, vec![0], 4, 5);
    let m = g.psi_transition().unwrap();
    let want = Matrix::from_rows(vec![vec![fp(2, 5), fp(0, 5)], vec![fp(0, 5), fp(1, 5)]], &fp(0, 5));
    assert_eq!(m, want);
    assert_eq!(g.pair(0).shape(), &mp("2"));
}

#[test]
fn transitions_are_unitriangular() {
    for g in configs().into_iter().chain([graded(4, 2, vec![0], 4, 5), graded(4, 3, vec![0], 2, 7)]) {
        g.psi_transition().unwrap();
        g.psi_prime_transition().unwrap();
    }
}

#[test]
fn expand_examples() {
    let g = graded(2, 2, vec![0], 4, 5);
    let h = g.hecke();
    let one = g.expand(&h.one(), Basis::Psi).unwrap();
    let t11 = StandardTableau::initial(&mp("1,1"));
    assert_eq!(one.terms, vec![(Pair::new(t11.clone(), t11), fp(1, 5))]);
    for g in configs() {
        let h = g.hecke();
        let mut sum = Element::zero();
        for i in g.klr().support() {
            sum = sum + g.klr().e_idem(i);
        }
        assert_eq!(
            g.coordinates(&h.one(), Basis::Psi).unwrap(),
            g.coordinates(&sum, Basis::Psi).unwrap()
        );
        for j in 0..g.dim() {
            let e = g.expand(g.psi(j), Basis::Psi).unwrap();
            assert_eq!(e.terms.len(), 1);
            assert!(e.coeff(g.pair(j)).unwrap().is_one());
        }
    }
}

#[test]
fn degree_examples() {
    let g = graded(2, 2, vec![0], 4, 5);
    let h = g.hecke();
    let y2 = g.klr().y(2).unwrap().clone();
    assert_eq!(g.degree_of(&y2).unwrap(), Some(2));
    assert_eq!(g.degree_of(&g.klr().e_idem(&[0, 1])).unwrap(), Some(0));
    assert_eq!(g.degree_of(&(h.one() + y2)).unwrap(), None);
    assert_eq!(g.degree_of(&Element::zero()), Err(GradedError::Zero));
    for g in configs() {
        let klr = g.klr();
        for i in klr.support() {
            assert_eq!(g.degree_of(&klr.e_idem(i)).unwrap(), Some(0));
        }
        for r in 1..=g.n() {
            for i in klr.support() {
                let x = g.hecke().mul(klr.y(r).unwrap(), &klr.e_idem(i));
                if !x.is_zero() {
                    assert_eq!(g.degree_of(&x).unwrap(), Some(2));
                }
            }
        }
        let q = g.quiver().clone();
        for r in 1..g.n() {
            for i in klr.support() {
                let x = g.hecke().mul(klr.psi(r).unwrap(), &klr.e_idem(i));
                if !x.is_zero() {
                    assert_eq!(g.degree_of(&x).unwrap(), Some(-q.cartan(i[r - 1], i[r])));
                }
            }
        }
    }
}

#[test]
fn graded_dimension_identity() {
    for g in configs() {
        assert_eq!(g.graded_dimension(), graded_dim_algebra(g.n(), g.quiver()));
        assert!(g.block_restriction_failures().is_empty());
    }
    let g = graded(2, 2, vec![0], 4, 5);
    let mut want = Laurent::monomial(2, 1);
    want.add_term(0, 1);
    assert_eq!(g.graded_dimension(), want);
}

#[test]
fn graded_star_is_an_anti_automorphism() {
    for g in configs() {
        let h = g.hecke();
        let gens = g.generators().unwrap();
        for (_, x) in &gens {
            assert_eq!(&g.star(x), x);
        }
        for (_, a) in &gens {
            for (_, b) in gens.iter().rev().take(4) {
                let ab = h.mul(a, b);
                assert_eq!(g.star(&ab), h.mul(&g.star(b), &g.star(a)));
            }
        }
        for j in 0..g.dim() {
            assert_eq!(g.star(&g.star(g.psi(j))), *g.psi(j));
        }
    }
}

#[test]
fn cell_module_examples() {
    let g = graded(2, 2, vec![0], 4, 5);
    let s11 = g.cell_module(&mp("1,1")).unwrap();
    assert_eq!(s11.dim(), 1);
    for r in 1..=2 {
        assert!(s11.action(&Generator::Y(r)).unwrap().is_zero());
    }
    let s2 = g.cell_module(&mp("2")).unwrap();
    assert_eq!(s2.dim(), 1);
    assert_eq!(
        s2.action(&Generator::Idempotent(vec![0, 1])).unwrap(),
        &Matrix::identity(1, &fp(0, 5))
    );
}

#[test]
fn cell_modules_and_symmetric_forms() {
    let mut gs = configs();
    gs.push(graded(4, 2, vec![0], 4, 5));
    gs.push(graded(4, 3, vec![0], 2, 7));
    for g in gs {
        let w = *g.klr().config().q();
        for lam in multipartitions(g.n(), g.quiver().level()) {
            let m = g.cell_module(&lam).unwrap();
            assert_eq!(m.dim(), standard_tableaux(&lam).len());
            let gram = g.gram(&lam).unwrap();
            assert!(gram.is_symmetric(), "{}", lam);
            assert!(gram.respects_grading(), "{}", lam);
            assert!(gram.simple_character().is_bar_symmetric(), "{}", lam);
            // <x a, y> = <x, y a*> with a* = a for the generators
            for (name, a) in &m.actions {
                assert_eq!(a.mul(&gram.matrix), gram.matrix.mul(&a.transpose()), "{} {}", lam, name);
            }
            // the actions satisfy the relations they come from
            let id = Matrix::identity(m.dim(), &w);
            let mut sum = Matrix::zeros(m.dim(), m.dim(), &w);
            for (gen, a) in &m.actions {
                if let Generator::Idempotent(_) = gen {
                    assert_eq!(a.mul(a), *a);
                    for (r, c) in (0..m.dim()).flat_map(|r| (0..m.dim()).map(move |c| (r, c))) {
                        let v = *sum.get(r, c) + *a.get(r, c);
                        sum.set(r, c, v);
                    }
                }
            }
            assert_eq!(sum, id);
        }
    }
}

#[test]
fn gram_examples() {
    let g = graded(2, 2, vec![0], 4, 5);
    let g11 = g.gram(&mp("1,1")).unwrap();
    assert_eq!(g11.matrix, Matrix::identity(1, &fp(0, 5)));
    assert!(!g.simple_character(&mp("1,1")).unwrap().is_zero());
    let g2 = g.gram(&mp("2")).unwrap();
    assert!(g2.is_zero());
    assert!(g.simple_character(&mp("2")).unwrap().is_zero());
}

#[test]
fn decomposition_example() {
    let g = graded(2, 2, vec![0], 4, 5);
    let blocks = g.blocks();
    assert_eq!(blocks.len(), 1);
    let dec = g.decomposition_matrix(&blocks[0]).unwrap();
    assert_eq!(dec.rows, vec![mp("2"), mp("1,1")]);
    assert_eq!(dec.cols, vec![mp("1,1")]);
    assert_eq!(dec.entries, vec![vec![Laurent::monomial(1, 1)], vec![Laurent::one()]]);
    let cartan = g.cartan(&blocks[0]).unwrap();
    let mut want = Laurent::monomial(2, 1);
    want.add_term(0, 1);
    assert_eq!(cartan.entries, vec![vec![want]]);
    assert_eq!(dec.to_csv(), "\"\",\"1,1\"\n\"2\",\"t\"\n\"1,1\",\"1\"\n");
    assert!(dec.to_latex().contains("$(2)$ & $t$"));
}

#[test]
fn semisimple_decomposition_is_identity() {
    for n in 1..=3 {
        let cfg = KlrConfig::new(n, Rational::from_i64(2), QuiverData::new(0, vec![0]).unwrap()).unwrap();
        let g = Graded::new(Klr::new(cfg).unwrap()).unwrap();
        for b in g.blocks() {
            let dec = g.decomposition_matrix(&b).unwrap();
            assert_eq!(dec.rows, dec.cols);
            for (i, row) in dec.entries.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    assert_eq!(*e, if i == j { Laurent::one() } else { Laurent::zero() });
                }
            }
        }
    }
}

#[test]
fn decomposition_matches_ungraded_oracle() {
    let mut gs = configs();
    gs.push(graded(4, 2, vec![0], 4, 5));
    gs.push(graded(4, 3, vec![0], 2, 7));
    for g in gs {
        for b in g.blocks() {
            let dec = g.decomposition_matrix(&b).unwrap();
            let oracle = g.ungraded_decomposition(&b).unwrap();
            assert_eq!(dec.cols, oracle.cols, "block {}", b.label());
            assert_eq!(dec.at_one(), oracle.entries, "block {}", b.label());
            for row in &dec.entries {
                assert!(row.iter().all(|e| e.is_zero() || e.is_nonnegative()));
            }
            // Cartan matrices have the same size as the set of simples
            let c = dec.cartan();
            assert_eq!(c.rows.len(), dec.cols.len());
        }
    }
}

#[test]
fn pairing_theorem_and_symmetry() {
    for g in configs() {
        for b in g.blocks() {
            let p = g.pairing_matrix(&b).unwrap();
            assert!(p.is_triangular(), "block {}: {:?} {:?}", b.label(), p.triangularity_violations(), p.zero_diagonal());
            let s = g.symmetric_gram(&b).unwrap();
            assert!(s.is_symmetric(), "block {}", b.label());
            assert!(s.is_nondegenerate(), "block {}", b.label());
            let m = g.murphy_trace_matrix(&b).unwrap();
            assert!(m.is_triangular(), "block {}", b.label());
            // tau(m_st n_{t's'}) = c_lambda (-q)^{l(d(s)) + l(d(t))}
            let q = *g.hecke().params().q();
            let weight = |p: &Pair| {
                let len = (p.s.d_word().len() + p.t.d_word().len()) as i64;
                (-q).pow_i64(-len).unwrap()
            };
            assert!(m.weighted_diagonal_constant_per_shape(weight), "block {}", b.label());
            // m_st n_{t's'} is homogeneous of degree 2 defect exactly for
            // the one-dimensional shapes
            let bad = g.murphy_dual_degree_failures(&b).unwrap();
            for j in g.block_pairs(&b) {
                let p = g.pair(j);
                let single = standard_tableaux(p.shape()).len() == 1;
                assert_eq!(bad.contains(p), !single, "{}", p);
            }
        }
        for lam in multipartitions(g.n(), g.quiver().level()) {
            let r = g.specht_duality_check(&lam).unwrap();
            assert!(r.passed(), "{}: {:?}", lam, r);
        }
    }
}

#[test]
fn tau_beta_checks_the_block() {
    let g = graded(3, 2, vec![0], 4, 5);
    let blocks = g.blocks();
    assert_eq!(blocks.len(), 2);
    let h = g.hecke();
    let e0 = g.block_idempotent(&blocks[0]);
    assert!(g.tau_beta(&e0, &blocks[0]).is_ok());
    assert!(matches!(g.tau_beta(&h.one(), &blocks[0]), Err(GradedError::NotInBlock(_))));
    // tau_beta only sees the component of degree 2 defect
    for b in &blocks {
        for j in g.block_pairs(b) {
            let v = g.tau_beta(g.psi(j), b).unwrap();
            if g.pair_degree(j) != 2 * b.defect {
                assert!(v.is_zero());
            }
        }
    }
}

#[test]
fn homogeneous_elements_from_klr() {
    for g in configs() {
        let klr = g.klr();
        let q = g.quiver().clone();
        for lam in multipartitions(g.n(), q.level()) {
            let ey = klr.e_lambda_y_lambda(&lam).unwrap();
            let t = StandardTableau::initial(&lam);
            assert_eq!(g.degree_of(&ey).unwrap(), Some(2 * degree(&t, &q)), "{}", lam);
            assert_eq!(
                2 * positive_exponents(&t, &q).iter().sum::<usize>() as i64,
                2 * degree(&t, &q)
            );
            let z = klr.z_lambda(&lam).unwrap();
            assert!(g.is_homogeneous(&z).unwrap(), "{}", lam);
        }
        for s in q.multicharge().to_vec() {
            for plus in [true, false] {
                let z = klr.z_ns(s, plus).unwrap();
                let chk = klr.verify_zns(s, plus).unwrap();
                assert_eq!(g.degree_of(&z).unwrap(), Some(chk.degree));
            }
        }
    }
}

mod words {
    use super::*;
    use crate::combin::Perm;
    use proptest::prelude::*;

    /// A reduced word for `w`, choosing among right descents with `seed`.
    fn random_reduced_word(w: &Perm, mut seed: u64) -> Vec<usize> {
        let mut w = w.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let desc: Vec<usize> = (1..w.degree()).filter(|&i| w.has_right_descent(i)).collect();
            let i = desc[(seed % desc.len() as u64) as usize];
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 7;
            word.push(i);
            w = w.right_simple(i);
        }
        word.reverse();
        word
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn other_reduced_words_change_psi_by_higher_terms(seed_s in any::<u64>(), seed_t in any::<u64>(), pick in any::<usize>()) {
            let g = graded(4, 2, vec![0], 4, 5);
            let q = g.quiver().clone();
            let p = g.pair(pick % g.dim()).clone();
            let ws = random_reduced_word(&p.s.d_perm(), seed_s);
            let wt = random_reduced_word(&p.t.d_perm(), seed_t);
            prop_assert_eq!(Perm::from_word(4, &ws), p.s.d_perm());
            let other = g.klr().psi_st_words(&p.s, &p.t, &ws, &wt).unwrap();
            let diff = other - g.psi(g.index_of(&p).unwrap()).clone();
            for (uv, _) in g.expand(&diff, Basis::Psi).unwrap().terms {
                prop_assert!(uv.dominates(&p));
                prop_assert_eq!(uv.s.residues(&q), p.s.residues(&q));
                prop_assert_eq!(uv.t.residues(&q), p.t.residues(&q));
                prop_assert_eq!(uv.degree(&q), p.degree(&q));
            }
        }
    }
}
