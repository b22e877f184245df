//! Property tests for structural invariants that hold on whole families of
//! instances rather than on single catalog entries.

use braided_duality::base_hopf::{build_group_algebra, check_hopf, cyclic_group_algebra, dual_hopf, invert_antipode};
use braided_duality::braided::{build_polynomial_hopf, check_braided_hopf, dual_braided_hopf, super_exterior, BraidedHopfAlgebra};
use braided_duality::catalog::{build_example, poly_scenario};
use braided_duality::pairing::{action_of_h_on_hd, action_of_hd_on_h, check_quasi_dual, smash_product};
use braided_duality::report::ReportItem;
use braided_duality::space::{basis_degree, encode};
use braided_duality::tensor::{check_equal, Chain, DegreeBound};
use braided_duality::yd::{braiding, braiding_inverse, is_symmetric_pair, one_dimensional, tensor_module, yd_morphism_witness, YDModule};
use braided_duality::{Field, LinMap, Scalar};
use proptest::prelude::*;

fn all_pass(items: &[ReportItem]) -> bool {
    items.iter().all(ReportItem::passed)
}

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5), Field::Prime(7)])
}

fn product_table(m: usize, n: usize) -> Vec<Vec<usize>> {
    let idx = |a: usize, b: usize| a * n + b;
    (0..m * n)
        .map(|x| (0..m * n).map(|y| idx((x / n + y / n) % m, (x % n + y % n) % n)).collect())
        .collect()
}

fn is_identity(m: &LinMap) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| if r == c { m.entry(r, c).is_one() } else { m.entry(r, c).is_zero() }))
}

/// `kZ_n` over GF(13) and the one-dimensional module with `g ↦ ζ^a`,
/// coacting by `g^k`, where `ζ` has order `n`.
fn line_module(b: &braided_duality::base_hopf::HopfAlgebraData, n: usize, name: &str, a: usize, k: usize) -> YDModule {
    let f = b.field;
    let zeta = (0..12 / n).fold(f.one(), |acc, _| &acc * &f.int(2));
    let power = |e: usize| (0..e % n).fold(f.one(), |acc, _| &acc * &zeta);
    let character: Vec<Scalar> = (0..n).map(|j| power(a * j)).collect();
    one_dimensional(b, name, &name.to_lowercase(), &character, k % n).unwrap()
}

fn same_constants(a: &BraidedHopfAlgebra, b: &BraidedHopfAlgebra) -> bool {
    let maps = |h: &BraidedHopfAlgebra| {
        [&h.mult, &h.unit, &h.comult, &h.counit, &h.antipode, &h.module.action, &h.module.coaction]
            .map(LinMap::to_nested)
            .to_vec()
    };
    maps(a) == maps(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_algebras_and_their_duals_are_hopf(f in field(), m in 1usize..4, n in 1usize..4) {
        let b = build_group_algebra(f, &product_table(m, n), None).unwrap();
        prop_assert!(all_pass(&check_hopf(&b)));
        prop_assert!(all_pass(&check_hopf(&dual_hopf(&b))));
        let s_inv = invert_antipode(&b).unwrap();
        prop_assert!(is_identity(&s_inv.compose(&b.antipode).unwrap()));
        prop_assert!(is_identity(&b.antipode.compose(&s_inv).unwrap()));
    }

    #[test]
    fn line_module_braidings(
        n in prop::sample::select(vec![1usize, 2, 3, 4, 6, 12]),
        a in 0usize..12, k in 0usize..12, c in 0usize..12, l in 0usize..12, e in 0usize..12, m in 0usize..12,
    ) {
        let f = Field::Prime(13);
        let b = cyclic_group_algebra(f, n);
        let v = line_module(&b, n, "V", a, k);
        let w = line_module(&b, n, "W", c, l);
        let u = line_module(&b, n, "U", e, m);
        let none = DegreeBound(None);

        let c_vw = braiding(&v, &w).unwrap();
        let round = c_vw.clone().then_chain(&braiding_inverse(&b, &v, &w).unwrap()).unwrap();
        prop_assert!(check_equal(&round, &Chain::new(f, round.domain().to_vec()), none).unwrap().is_none());
        let back = braiding_inverse(&b, &v, &w).unwrap().then_chain(&c_vw).unwrap();
        prop_assert!(check_equal(&back, &Chain::new(f, back.domain().to_vec()), none).unwrap().is_none());

        let vw = tensor_module(&b, &v, &w).unwrap();
        let wv = tensor_module(&b, &w, &v).unwrap();
        prop_assert!(yd_morphism_witness(&b, &c_vw, &vw, &wv, none).unwrap().is_none());

        // C_{U, V⊗W} = (V ⊗ C_{U,W})(C_{U,V} ⊗ W)
        let lhs = braiding(&u, &vw).unwrap();
        let rhs = Chain::new(f, lhs.domain().to_vec())
            .at_chain(0, &braiding(&u, &v).unwrap()).unwrap()
            .at_chain(1, &braiding(&u, &w).unwrap()).unwrap();
        prop_assert!(check_equal(&lhs, &rhs, none).unwrap().is_none());

        // C² = id exactly when ζ^{c·k + a·l} = 1
        let symmetric = (c * k + a * l) % n == 0;
        prop_assert_eq!(is_symmetric_pair(&v, &w).unwrap(), symmetric);
    }

    #[test]
    fn polynomial_structure_preserves_degree(n in 1usize..9) {
        let b = cyclic_group_algebra(Field::Rational, 1);
        let h = build_polynomial_hopf(&b, n, "H", "x").unwrap();
        for map in [&h.mult, &h.comult, &h.antipode] {
            for col in 0..map.cols() {
                for (row, _) in map.column(col) {
                    prop_assert_eq!(basis_degree(*row, map.codomain()), basis_degree(col, map.domain()));
                }
            }
        }
    }

    #[test]
    fn axiom_checks_are_stable_under_truncation(n in 2usize..8, factorial in any::<bool>()) {
        let b = cyclic_group_algebra(Field::Rational, 1);
        let mut big = build_polynomial_hopf(&b, n, "H", "x").unwrap();
        big.truncation = Some(n - 1);
        let small = build_polynomial_hopf(&b, n - 1, "H", "x").unwrap();
        prop_assert_eq!(check_braided_hopf(&b, &big), check_braided_hopf(&b, &small));

        let restricted = poly_scenario(n, factorial, "p").unwrap().with_max_degree(n - 1);
        let direct = poly_scenario(n - 1, factorial, "p").unwrap();
        prop_assert_eq!(check_quasi_dual(&b, &restricted.pairing), check_quasi_dual(&b, &direct.pairing));
    }
}

#[test]
fn double_dual_has_the_original_structure_constants() {
    let b = cyclic_group_algebra(Field::Rational, 2);
    for n in 1..=2 {
        let h = super_exterior(&b, n, "H").unwrap();
        let hd = dual_braided_hopf(&b, &h, "Hd").unwrap();
        assert!(all_pass(&check_braided_hopf(&b, &hd)));
        let back = dual_braided_hopf(&b, &hd, "H").unwrap();
        assert!(same_constants(&h, &back), "n = {n}");
    }
}

#[test]
fn smash_products_contain_both_factors() {
    for name in ["super_line", "super_plane", "sweedler_base_negative"] {
        let sc = build_example(name, None).unwrap();
        let p = &sc.pairing;
        for act in [action_of_h_on_hd(p).unwrap(), action_of_hd_on_h(p).unwrap()] {
            let smash = smash_product(&sc.base, &act).unwrap();
            let legs = smash.legs().to_vec();
            let (da, dh) = (legs[0].dim, legs[1].dim);
            let one_a = act.algebra.unit.column(0)[0].0;
            let one_h = act.acting.unit.column(0)[0].0;
            let pair_legs = [legs.clone(), legs.clone()].concat();
            for a in 0..da {
                for h in 0..dh {
                    // (a # 1)(1 # h) = a # h
                    let out = smash.mult.eval_basis(encode(&[a, one_h, one_a, h], &pair_legs));
                    let terms: Vec<_> = out.terms.iter().collect();
                    assert_eq!(terms.len(), 1, "{name}: {a} # {h}");
                    assert_eq!(*terms[0].0, encode(&[a, h], &legs));
                    assert!(terms[0].1.is_one());
                }
            }
            assert!(all_pass(&smash.check("smash", sc.bound())));
        }
    }
}
