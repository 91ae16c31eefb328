mod common;

use common::coprime_pairs;
use proptest::prelude::*;
use toric_nash::*;

fn coprime() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=500)
        .prop_flat_map(|q| (0..=q, Just(q)))
        .prop_filter("coprime", |(p, q)| num_integer::gcd(*p, *q) == 1)
}

proptest! {
    #[test]
    fn expansion_round_trips((p, q) in coprime()) {
        let f = hj_expand(p, q).unwrap();
        let r = hj_eval(&f).unwrap();
        prop_assert_eq!((*r.numer(), *r.denom()), (p, q));
    }

    #[test]
    fn inversion_is_an_involution((p, q) in coprime()) {
        prop_assume!(p > 0);
        let f = hj_expand(p, q).unwrap();
        let g = invert_fraction(&f).unwrap();
        prop_assert_eq!(invert_fraction(&g).unwrap(), f);
    }

    #[test]
    fn entries_respect_the_bounds((p, q) in coprime()) {
        let f = hj_expand(p, q).unwrap();
        for (i, &a) in f.entries().iter().enumerate() {
            let floor = if i == 0 { 1 } else { 2 };
            prop_assert!(a >= floor);
        }
        prop_assert_eq!(HJFraction::new(f.entries().to_vec()).unwrap(), f);
    }
}

#[test]
fn recurrence_gives_the_hilbert_basis() {
    for (p, q) in coprime_pairs(60) {
        let from_fraction = generators_from_fraction(&hj_expand(p, q).unwrap()).unwrap();
        let c = Cone::from_pq(p, q).unwrap();
        assert_eq!(
            from_fraction,
            hilbert_basis_bruteforce(&c).unwrap(),
            "{p}/{q}"
        );
    }
}

#[test]
fn dual_expansions_balance() {
    // For q/p = [b₁..b_s] and q/(q−p) = [c₁..c_t]: Σ(bᵢ − 2) = t − 1.
    for (p, q) in coprime_pairs(80).into_iter().filter(|&(p, _)| p > 0) {
        let b = hj_expand(q, p).unwrap();
        let c = hj_expand(q, q - p).unwrap();
        let excess = |f: &Fraction| f.entries().iter().map(|a| a - 2).sum::<i64>();
        assert_eq!(excess(&b), c.len() as i64 - 1, "{p}/{q}");
        assert_eq!(excess(&c), b.len() as i64 - 1, "{p}/{q}");
    }
}

#[test]
fn exceptional_curves_evaluate_back_to_the_cone() {
    for (p, q) in coprime_pairs(60) {
        let c = Cone::from_pq(p, q).unwrap();
        let curves = self_intersections(&c).unwrap();
        if p == 0 {
            assert!(curves.is_empty());
            continue;
        }
        let f = HJFraction::new(curves.iter().map(|e| -e).collect()).unwrap();
        let r = hj_eval(&f).unwrap();
        let inverse = (1..q).find(|x| x * p % q == 1 % q).unwrap();
        assert_eq!(*r.numer(), q, "{p}/{q}");
        assert!(*r.denom() == p || *r.denom() == inverse, "{p}/{q}");
    }
}

#[test]
fn hilbert_basis_length_comes_from_the_dual_expansion() {
    for (p, q) in coprime_pairs(60).into_iter().filter(|&(p, _)| p > 0) {
        let hb = hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap();
        assert_eq!(hb.len(), hj_expand(q, q - p).unwrap().len() + 2, "{p}/{q}");
    }
}

#[test]
fn one_segment_shape_and_its_inverse() {
    for n in 2..=12i64 {
        let mut entries = vec![1];
        entries.extend(std::iter::repeat_n(2, n as usize - 1));
        let f = HJFraction::new(entries).unwrap();
        assert_eq!(fraction_shape(&f), FractionShape::OneSegment);
        // [1,2,…,2] of length n is 1/n, whose inverse is [n].
        let r = hj_eval(&f).unwrap();
        assert_eq!((*r.numer(), *r.denom()), (1, n));
        assert_eq!(invert_fraction(&f).unwrap().entries(), &[n]);
    }
}

#[test]
fn empty_fraction_is_the_smooth_cone() {
    let f = Fraction::empty();
    assert_eq!(hj_eval(&f).unwrap(), num_rational::Ratio::new(0, 1));
    assert_eq!(
        generators_from_fraction(&f).unwrap(),
        common::set(&[(1, 0), (0, 1)])
    );
    assert!(invert_fraction(&f).is_err());
}

#[test]
fn bigint_expansion_agrees() {
    for (p, q) in coprime_pairs(40) {
        let small = hj_expand(p, q).unwrap();
        let big = hj_expand(BigInt::from(p), BigInt::from(q)).unwrap();
        let lifted: Vec<BigInt> = small.entries().iter().map(|&a| BigInt::from(a)).collect();
        assert_eq!(big.entries(), lifted.as_slice());
    }
}
