use proptest::prelude::*;

use forest_hopf::coproduct::delta_eps;
use forest_hopf::enumerate::{enumerate_up_to, Alphabet};
use forest_hopf::forest::{Forest, Tree, VertexRef};
use forest_hopf::freemodule::{rat, LinComb};
use forest_hopf::hopf::{conv_power, convolve, d_eps, Endo};
use forest_hopf::textio::{parse_forest, parse_lincomb, serialize_forest, serialize_lincomb};

fn basis(n: usize) -> Vec<Forest> {
    enumerate_up_to(n, &Alphabet::new(["x", "y"]).unwrap()).collect()
}

#[test]
fn hl_order_visits_each_vertex_once() {
    for forest in basis(5) {
        let order = forest.hl_order();
        assert_eq!(order.len(), forest.vertex_count());
        let mut planar: Vec<usize> = order.iter().map(|v| v.planar).collect();
        planar.sort_unstable();
        assert_eq!(planar, (0..forest.vertex_count()).collect::<Vec<_>>(), "{forest}");
        for v in &order {
            if let Some(p) = v.parent {
                assert!(p < v.id, "parents precede children in {forest}");
            }
        }
    }
}

#[test]
fn split_sizes_follow_the_order() {
    for forest in basis(5) {
        let n = forest.vertex_count();
        for (k, (above, below)) in forest.splits().into_iter().enumerate() {
            assert_eq!(above.vertex_count(), n - 1 - k, "{forest} at {k}");
            assert_eq!(below.vertex_count(), k, "{forest} at {k}");
            assert_eq!(forest.split_at(VertexRef(k)).unwrap(), (above.clone(), below.clone()));
            above.validate().unwrap();
            below.validate().unwrap();
        }
    }
}

#[test]
fn bplus_structure() {
    let forests = basis(4);
    for forest in &forests {
        let grafted = forest.bplus();
        assert_eq!(grafted.unbplus().as_ref(), Some(forest));
        assert_eq!(Forest::from(grafted).depth(), forest.depth() + 1);
    }
    for a in forests.iter().take(40) {
        for b in forests.iter().take(40) {
            assert_eq!(a.concat(b).breadth(), a.breadth() + b.breadth());
        }
    }
}

#[test]
fn validation_rejects_internal_generators() {
    let bad = Tree::new(forest_hopf::Decoration::generator("x").unwrap(), vec![Tree::sigma()]);
    assert!(bad.is_err());
    assert!(parse_forest("@[x[y]]").is_err());
}

#[test]
fn d_eps_lowers_degree() {
    for forest in basis(5) {
        let image = d_eps(&LinComb::forest(forest.clone()));
        for (g, _) in &image {
            assert_eq!(g.vertex_count() + 1, forest.vertex_count(), "{forest}");
        }
    }
}

fn sample_endos() -> Vec<Endo> {
    let d = Endo::d_eps();
    vec![
        Endo::identity(),
        d.clone(),
        Endo::antipode(),
        Endo::identity().add(&d.scale(rat(2))),
        Endo::new(|f| LinComb::forest(f.bplus().into())),
    ]
}

#[test]
fn convolution_is_associative() {
    let endos = sample_endos();
    let inputs = basis(3);
    for f in &endos {
        for g in &endos {
            for h in &endos {
                let left = convolve(&convolve(f, g), h);
                let right = convolve(f, &convolve(g, h));
                assert!(left.agrees_on(&right, &inputs));
            }
        }
    }
}

#[test]
fn conv_power_recursion() {
    let d = Endo::d_eps();
    let inputs = basis(4);
    for k in 1..4 {
        let next = conv_power(&d, k + 1).unwrap();
        let step = convolve(&conv_power(&d, k).unwrap(), &d);
        assert!(next.agrees_on(&step, &inputs));
    }
}

fn arb_forest() -> impl Strategy<Value = Forest> {
    let leaf = prop_oneof![
        Just(Tree::sigma()),
        Just(Tree::generator("x").unwrap()),
        Just(Tree::generator("y").unwrap())
    ];
    let tree = leaf.prop_recursive(3, 12, 3, |inner| {
        prop::collection::vec(inner, 0..3).prop_map(|kids| Forest::from_trees(kids).bplus())
    });
    prop::collection::vec(tree, 0..3).prop_map(Forest::from_trees)
}

fn arb_lincomb() -> impl Strategy<Value = LinComb> {
    prop::collection::vec((-4i64..5, 1i64..4, arb_forest()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(n, d, f)| (forest_hopf::Rational::new(n.into(), d.into()), f))
            .collect()
    })
}

proptest! {
    #[test]
    fn forest_text_round_trip(f in arb_forest()) {
        prop_assert_eq!(parse_forest(&serialize_forest(&f)).unwrap(), f);
    }

    #[test]
    fn lincomb_text_round_trip(v in arb_lincomb()) {
        let text = serialize_lincomb(&v);
        prop_assert_eq!(parse_lincomb(&text).unwrap(), v);
    }

    #[test]
    fn endomorphisms_are_linear(a in arb_lincomb(), b in arb_lincomb(), c in -3i64..4) {
        for e in sample_endos() {
            let combined = &a.scale(&rat(c)) + &b;
            prop_assert_eq!(e.apply(&combined), &e.apply(&a).scale(&rat(c)) + &e.apply(&b));
        }
    }

    #[test]
    fn coproduct_term_count(f in arb_forest()) {
        prop_assert_eq!(delta_eps(&f).len(), f.vertex_count());
    }
}
