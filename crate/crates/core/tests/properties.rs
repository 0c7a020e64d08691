mod common;

use common::{cofactor_det, naive_graded_dim, p, random_acyclic_quiver, random_bound_quiver, rng};
use proptest::prelude::*;
use qcox::algebra::{cartan_matrix, graded_dims, DEFAULT_DEGREE_CAP};
use qcox::coxeter::{
    admissible_numberings, bilinear_form_graph, coxeter_matrix_graph_with, is_admissible, quadratic_form_graph,
    sigma_reflect, symmetric_form_matrix, verify_identities, CartanForms, VerifyOptions,
};
use qcox::polyring::{PolyMatrix, Polynomial};
use qcox::quiverdsl::{emit_json, emit_text, parse_json, parse_quiver, BoundQuiver};

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Polynomial::from_ints(&c))
}

fn square(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(poly(), n), n).prop_map(PolyMatrix::from_rows)
    })
}

fn pair(max: usize) -> impl Strategy<Value = (PolyMatrix, PolyMatrix)> {
    (1..=max).prop_flat_map(|n| {
        let m = || prop::collection::vec(prop::collection::vec(poly(), n), n).prop_map(PolyMatrix::from_rows);
        (m(), m())
    })
}

/// `L U` with unit diagonals, hence determinant 1.
fn unimodular(max: usize) -> impl Strategy<Value = PolyMatrix> {
    pair(max).prop_map(|(a, b)| {
        let n = a.order();
        let l = PolyMatrix::from_fn(n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => a.get(i, j).clone(),
            std::cmp::Ordering::Equal => Polynomial::one(),
            std::cmp::Ordering::Less => Polynomial::zero(),
        });
        let u = PolyMatrix::from_fn(n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => b.get(i, j).clone(),
            std::cmp::Ordering::Equal => Polynomial::one(),
            std::cmp::Ordering::Greater => Polynomial::zero(),
        });
        l.mul(&u)
    })
}

fn free_quiver() -> impl Strategy<Value = BoundQuiver> {
    (any::<u64>(), 2usize..=6).prop_map(|(seed, n)| {
        BoundQuiver::free("free", random_acyclic_quiver(&mut rng(seed), n, 2, 0.3))
    })
}

fn bound_quiver() -> impl Strategy<Value = BoundQuiver> {
    any::<u64>().prop_filter_map("no parallel paths", |seed| {
        random_bound_quiver(&mut rng(seed), "bound", 3..=5)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            let (quo, rem) = a.div_rem(&b);
            prop_assert_eq!(&(&quo * &b) + &rem, a.clone());
            prop_assert!(rem.degree() < b.degree() || rem.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a.clone()));
        }
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in -5i64..=5) {
        let x = common::r(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(m in square(5)) {
        prop_assert_eq!(m.det(), cofactor_det(&m));
    }

    #[test]
    fn det_is_multiplicative((a, b) in pair(4)) {
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        prop_assert_eq!(a.transpose().det(), a.det());
    }

    #[test]
    fn unimodular_inverse(m in unimodular(5)) {
        let inv = m.inverse_unimodular().unwrap();
        prop_assert!(inv.mul(&m).is_identity());
        prop_assert!(m.mul(&inv).is_identity());
        prop_assert_eq!(inv.inverse_unimodular().unwrap(), m);
    }

    #[test]
    fn singular_or_nonunit_matrices_are_rejected(m in square(4)) {
        let d = m.det();
        prop_assert_eq!(m.inverse_unimodular().is_ok(), d.is_sign_unit());
    }

    #[test]
    fn polymatrix_json_round_trip(m in square(4)) {
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<PolyMatrix>(&text).unwrap(), m);
    }

    #[test]
    fn dsl_round_trips(bq in bound_quiver()) {
        prop_assert_eq!(parse_quiver(&emit_text(&bq)).unwrap(), bq.clone());
        prop_assert_eq!(parse_json(&emit_json(&bq)).unwrap(), bq);
    }

    #[test]
    fn graded_dims_match_oracle(bq in bound_quiver()) {
        let t = graded_dims(&bq, DEFAULT_DEGREE_CAP).unwrap();
        let n = bq.n();
        for d in 0..=n {
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(t.get(i, j, d), naive_graded_dim(&bq, i, j, d), "({}, {}, {})", i, j, d);
                }
            }
        }
    }

    #[test]
    fn sigma_is_an_involution(bq in free_quiver(), v in 0usize..6) {
        let v = v % bq.n();
        let once = sigma_reflect(&bq.quiver, v).unwrap();
        prop_assert_eq!(sigma_reflect(&once, v).unwrap(), bq.quiver.clone());
        prop_assert_eq!(once.arrows().len(), bq.quiver.arrows().len());
    }

    #[test]
    fn every_numbering_gives_the_same_coxeter_matrix(bq in free_quiver()) {
        let all = admissible_numberings(&bq.quiver, 12).unwrap();
        prop_assert!(!all.is_empty());
        let base = coxeter_matrix_graph_with(&bq.quiver, all[0].order()).unwrap();
        for a in &all {
            prop_assert!(is_admissible(&bq.quiver, a.order()));
            prop_assert_eq!(&coxeter_matrix_graph_with(&bq.quiver, a.order()).unwrap(), &base);
        }
    }

    #[test]
    fn symmetric_form_of_path_algebras(bq in free_quiver()) {
        let q = &bq.quiver;
        let n = q.n();
        let c = cartan_matrix(&bq, DEFAULT_DEGREE_CAP).unwrap();
        let a = symmetric_form_matrix(&c).unwrap();
        let want = PolyMatrix::from_fn(n, |i, j| {
            let off = p(&[0, -((q.arrow_count(i, j) + q.arrow_count(j, i)) as i64)]);
            if i == j { &p(&[2]) + &off } else { off }
        });
        prop_assert_eq!(&a, &want);
        // the Cartan form restricted to I = 0 is the graph form
        let forms = CartanForms::new(c).unwrap();
        let x: Vec<Polynomial> = (0..n).map(|k| p(&[k as i64 - 1])).collect();
        let y: Vec<Polynomial> = (0..n).map(|k| p(&[2, k as i64])).collect();
        prop_assert_eq!(forms.symmetric_form(&x, &y).unwrap(), bilinear_form_graph(q, &x, &y).unwrap());
        prop_assert_eq!(quadratic_form_graph(q, &x).unwrap(), bilinear_form_graph(q, &x, &x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn verify_passes_on_free_quivers(bq in free_quiver(), seed in any::<u64>()) {
        let opts = VerifyOptions { random_vectors: 3, seed, ..VerifyOptions::default() };
        let report = verify_identities(&bq, &opts).unwrap();
        prop_assert!(report.all_passed(), "{:#?}", report);
    }

    #[test]
    fn verify_passes_on_bound_quivers(bq in bound_quiver(), seed in any::<u64>()) {
        let opts = VerifyOptions { random_vectors: 3, seed, ..VerifyOptions::default() };
        let report = verify_identities(&bq, &opts).unwrap();
        prop_assert!(report.all_passed(), "{:#?}", report);
    }
}
