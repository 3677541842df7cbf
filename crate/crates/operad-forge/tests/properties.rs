use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, RngSeed};

use operad_forge::combinatorics::word::all_surjections;
use operad_forge::combinatorics::{parse_element, permutations, Basis, Surjection};
use operad_forge::free_bialgebra::{FreeAlgebra, Lc};
use operad_forge::idempotents::Idempotent;
use operad_forge::linear::{LinComb, Scalar};
use operad_forge::operads::{Operad, ALL};
use operad_forge::report::{decode_lincomb, lincomb_json};
use operad_forge::solomon_tits::{block_coproduct_lc, hopf_rhs, stuffle, stuffle_lc, St};

fn config(seed: u64) -> Config {
    Config { cases: 96, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

type BasisCache = Mutex<HashMap<(Operad, usize), Vec<Basis>>>;

fn basis(o: Operad, n: usize) -> Vec<Basis> {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    cache.lock().unwrap().entry((o, n)).or_insert_with(|| o.basis(n)).clone()
}

fn pick(o: Operad, n: usize, i: &Index) -> Basis {
    let b = basis(o, n);
    b[i.index(b.len())].clone()
}

fn operad() -> impl Strategy<Value = Operad> {
    (0..ALL.len()).prop_map(|i| ALL[i])
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn surjection(max: usize) -> impl Strategy<Value = Surjection> {
    (1..=max, any::<Index>()).prop_map(|(n, i)| {
        let all = all_surjections(n);
        all[i.index(all.len())].clone()
    })
}

fn lc(o: Operad, n: usize, terms: &[(Index, Scalar)]) -> Lc {
    let mut x = Lc::zero();
    for (i, c) in terms {
        x.add_term(pick(o, n, i), c.clone());
    }
    x
}

proptest! {
    #![proptest_config(config(0x5eed_0001))]

    #[test]
    fn encoding_round_trips(o in operad(), n in 1usize..=4, i in any::<Index>()) {
        let b = pick(o, n, &i);
        let text = b.to_string();
        prop_assert_eq!(parse_element(o.kind(), &text).unwrap(), b.clone());
        prop_assert!(o.accepts(&b));
    }

    #[test]
    fn json_round_trips(o in operad(), n in 1usize..=3, terms in prop::collection::vec((any::<Index>(), scalar()), 0..5)) {
        let x = lc(o, n, &terms);
        prop_assert_eq!(decode_lincomb(o.kind(), &lincomb_json(&x).to_string()).unwrap(), x);
    }

    #[test]
    fn products_are_equivariant(
        o in operad(),
        (p, q) in (1usize..=2, 1usize..=2),
        (i, j, s) in (any::<Index>(), any::<Index>(), any::<Index>()),
    ) {
        prop_assume!(o.ops().iter().any(|op| op.arity == 2));
        let x = pick(o, p, &i);
        let y = pick(o, q, &j).shift(p as u32);
        let perms = permutations(p + q);
        let sigma = &perms[s.index(perms.len())];
        for op in o.ops().into_iter().filter(|op| op.arity == 2) {
            let acted = o.raw_product(&op.name, &[&x.permute(sigma), &y.permute(sigma)]);
            let moved = o.raw_product(&op.name, &[&x, &y]).map_keys(|b| b.permute(sigma));
            prop_assert_eq!(acted, moved, "{} {} {} {:?}", op.name, x, y, sigma);
        }
    }

    #[test]
    fn products_are_bilinear(
        o in operad(),
        xs in prop::collection::vec((any::<Index>(), scalar()), 1..4),
        ys in prop::collection::vec((any::<Index>(), scalar()), 1..4),
        z in any::<Index>(),
        (a, b) in (scalar(), scalar()),
    ) {
        prop_assume!(!matches!(o, Operad::HyperPreLie | Operad::HyperNap));
        let op = o.default_op();
        prop_assume!(o.op(&op).unwrap().arity == 2);
        let (x, y) = (lc(o, 2, &xs), lc(o, 2, &ys));
        let z = Lc::single(pick(o, 1, &z).shift(2));
        let mut sum = x.scaled(&a);
        sum.add_scaled(&y, &b);
        let mut expected = o.product_lc(&op, &[&x, &z]).scaled(&a);
        expected.add_scaled(&o.product_lc(&op, &[&y, &z]), &b);
        prop_assert_eq!(o.product_lc(&op, &[&sum, &z]), expected);
    }

    #[test]
    fn stuffle_is_associative(x in surjection(3), y in surjection(2), z in surjection(2)) {
        let one = |s: &Surjection| St::single(s.clone());
        let left = stuffle_lc(&stuffle(&x, &y), &one(&z));
        let right = stuffle_lc(&one(&x), &stuffle(&y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn block_coproduct_satisfies_the_hopf_law(x in surjection(3), y in surjection(3)) {
        prop_assert!(block_coproduct_lc(&stuffle(&x, &y)) == hopf_rhs(&x, &y), "{} {}", x, y);
    }
}

proptest! {
    #![proptest_config(Config { cases: 48, ..config(0x5eed_0002) })]

    #[test]
    fn idempotent_is_linear_and_idempotent(
        o in (0usize..4).prop_map(|i| [Operad::PreLie, Operad::Nap, Operad::Perm, Operad::As][i]),
        d in 1usize..=4,
        terms in prop::collection::vec((any::<Index>(), scalar()), 1..4),
    ) {
        let fa = FreeAlgebra::new(o, vec![
            operad_forge::combinatorics::Label::Sym('a'),
            operad_forge::combinatorics::Label::Sym('b'),
        ]);
        let elems = fa.basis(d);
        let mut x = Lc::zero();
        for (i, c) in &terms {
            x.add_term(elems[i.index(elems.len())].clone(), c.clone());
        }
        let mut e = Idempotent::for_operads(o, o, 4).unwrap();
        let ex = e.apply(&x).unwrap();
        let mut termwise = LinComb::zero();
        for (b, c) in x.iter() {
            termwise.add_scaled(&e.apply(&Lc::single(b.clone())).unwrap(), c);
        }
        prop_assert_eq!(&ex, &termwise);
        prop_assert_eq!(e.apply(&ex).unwrap(), ex.clone());
        for op in o.coops() {
            prop_assert!(o.coproduct_lc(&op.name, &ex).is_zero());
        }
    }
}
