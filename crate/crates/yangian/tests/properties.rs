//! Property tests for the algebra and series layers.

use proptest::prelude::*;

use yangian::series::first_difference;
use yangian::{Context, Element, Series, SignSequence};

fn ctx_from(mask: usize, len: usize, order: usize) -> Context {
    let digits: Vec<u8> = (0..len).map(|i| ((mask >> i) & 1) as u8).collect();
    Context::from_seq(SignSequence::new(digits).unwrap(), order).unwrap()
}

#[derive(Debug, Clone)]
struct GenPick {
    i: usize,
    j: usize,
    r: usize,
}

fn arb_ctx(max_len: usize) -> impl Strategy<Value = Context> {
    (1..=max_len)
        .prop_flat_map(|len| (0..1usize << len).prop_map(move |mask| ctx_from(mask, len, 3)))
}

fn arb_gen(size: usize) -> impl Strategy<Value = GenPick> {
    (1..=size, 1..=size, 1..=3usize).prop_map(|(i, j, r)| GenPick { i, j, r })
}

fn arb_triple(max_len: usize) -> impl Strategy<Value = (Context, GenPick, GenPick, GenPick)> {
    arb_ctx(max_len).prop_flat_map(|c| {
        let size = c.size();
        (Just(c), arb_gen(size), arb_gen(size), arb_gen(size))
    })
}

fn gen(c: &Context, p: &GenPick) -> Element {
    c.generator(p.i, p.j, p.r).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative((c, x, y, z) in arb_triple(4)) {
        let (x, y, z) = (gen(&c, &x), gen(&c, &y), gen(&c, &z));
        let lhs = x.mul(&y).unwrap().mul(&z).unwrap();
        let rhs = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn renormalization_is_identity((c, x, y, z) in arb_triple(3)) {
        let prod = gen(&c, &x).mul(&gen(&c, &y)).unwrap().mul(&gen(&c, &z)).unwrap();
        prop_assert!(c.one().mul(&prod).unwrap().equals(&prod).unwrap());
    }

    #[test]
    fn parity_is_additive((c, x, y, _z) in arb_triple(3)) {
        let (a, b) = (gen(&c, &x), gen(&c, &y));
        let pa = a.parity().unwrap();
        let pb = b.parity().unwrap();
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(prod.parity(), Some(if prod.is_zero() { 0 } else { (pa + pb) % 2 }));
    }

    #[test]
    fn series_distributes_and_associates((c, x, y, z) in arb_triple(3)) {
        let a = Series::generator(&c, x.i, x.j).unwrap();
        let b = Series::generator(&c, y.i, y.j).unwrap();
        let d = Series::generator(&c, z.i, z.j).unwrap();
        let sum_then_mul = a.add(&b).unwrap().mul(&d).unwrap();
        let mul_then_sum = a.mul(&d).unwrap().add(&b.mul(&d).unwrap()).unwrap();
        prop_assert!(first_difference(&sum_then_mul, &mul_then_sum).unwrap().is_none());
        let assoc_l = a.mul(&b).unwrap().mul(&d).unwrap();
        let assoc_r = a.mul(&b.mul(&d).unwrap()).unwrap();
        prop_assert!(first_difference(&assoc_l, &assoc_r).unwrap().is_none());
    }

    #[test]
    fn shift_is_a_homomorphism((c, x, y, _z) in arb_triple(3), s in -3i64..=3) {
        let a = Series::generator(&c, x.i, x.j).unwrap();
        let b = Series::generator(&c, y.i, y.j).unwrap();
        let lhs = a.mul(&b).unwrap().shift(s);
        let rhs = a.shift(s).mul(&b.shift(s)).unwrap();
        prop_assert!(first_difference(&lhs, &rhs).unwrap().is_none());
    }

    #[test]
    fn shift_is_a_group_action((c, x, _y, _z) in arb_triple(3), s in -3i64..=3, t in -3i64..=3) {
        let a = Series::generator(&c, x.i, x.j).unwrap();
        prop_assert!(first_difference(&a.shift(s).shift(t), &a.shift(s + t)).unwrap().is_none());
    }

    #[test]
    fn inverse_is_two_sided((c, x, _y, _z) in arb_triple(3)) {
        // force a unit head: 1 + u^{-1} t_{i,j}(u)-tail
        let a = Series::generator(&c, x.i, x.i).unwrap();
        let inv = a.invert().unwrap();
        prop_assert!(a.mul(&inv).unwrap().is_one());
        prop_assert!(inv.mul(&a).unwrap().is_one());
    }

    #[test]
    fn shift_commutes_with_inversion((c, x, _y, _z) in arb_triple(3), s in -2i64..=2) {
        let a = Series::generator(&c, x.i, x.i).unwrap();
        let lhs = a.invert().unwrap().shift(s);
        let rhs = a.shift(s).invert().unwrap();
        prop_assert!(first_difference(&lhs, &rhs).unwrap().is_none());
    }
}
