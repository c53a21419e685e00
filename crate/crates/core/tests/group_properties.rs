use nottingham::nottingham::klopsch_rep;
use nottingham::order4::sigma_closed;
use nottingham::{Depth, GroupElement, Prime, Series};
use proptest::prelude::*;

fn element(p: u64, mut coeffs: Vec<i64>) -> GroupElement {
    coeffs[0] = 0;
    coeffs[1] = 1;
    let n = coeffs.len() - 1;
    GroupElement::new(Series::from_poly(Prime::new(p).unwrap(), n, &coeffs)).unwrap()
}

/// Three random elements sharing p and N, with a chosen number of leading zero corrections.
fn triple() -> impl Strategy<Value = (GroupElement, GroupElement, GroupElement)> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 2usize..30).prop_flat_map(|(p, n)| {
        let c = || proptest::collection::vec(0i64..p as i64, n + 1);
        (c(), c(), c(), 2usize..=n, 2usize..=n).prop_map(move |(a, b, c, za, zb)| {
            let mut a = a;
            let mut b = b;
            a[2..za].iter_mut().for_each(|x| *x = 0);
            b[2..zb].iter_mut().for_each(|x| *x = 0);
            (element(p, a), element(p, b), element(p, c))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_axioms((f, g, h) in triple()) {
        let id = GroupElement::identity(f.prime(), f.trunc()).unwrap();
        prop_assert_eq!(
            f.compose(&g).unwrap().compose(&h).unwrap(),
            f.compose(&g.compose(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.compose(&id).unwrap(), f.clone());
        prop_assert_eq!(id.compose(&f).unwrap(), f.clone());
        prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
        prop_assert!(f.inverse().compose(&f).unwrap().is_identity());
    }

    #[test]
    fn depth_is_ultrametric((f, g, _h) in triple()) {
        let fg = f.compose(&g).unwrap();
        let (df, dg) = (f.depth(), g.depth());
        prop_assert!(fg.depth() >= df.min(dg));
        if df != dg {
            prop_assert_eq!(fg.depth(), df.min(dg));
        }
    }

    #[test]
    fn powers_add((f, _g, _h) in triple(), a in 0u64..6, b in 0u64..6) {
        prop_assert_eq!(f.power(a).compose(&f.power(b)).unwrap(), f.power(a + b));
    }

    #[test]
    fn klopsch_depth_and_order(
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        m in 1u64..15,
        a in 1i64..11,
        extra in 0usize..40,
    ) {
        let prime = Prime::new(p).unwrap();
        prop_assume!(m % p != 0 && a % p as i64 != 0);
        let n = m as usize + 1 + extra;
        let rep = klopsch_rep(prime, m, prime.element(a), n).unwrap();
        prop_assert_eq!(rep.depth(), Depth::Finite(m as usize));
        prop_assert!(rep.power(p).is_identity());
        prop_assert_eq!(rep.order_mod_truncation(p), Some(p));
    }

    #[test]
    fn order_divides_across_precisions(
        p in prop::sample::select(vec![2u64, 3]),
        m in 1u64..8,
        big in 10usize..80,
        small_frac in 0.0f64..1.0,
    ) {
        let prime = Prime::new(p).unwrap();
        prop_assume!(m % p != 0 && big > m as usize);
        let small = (m as usize + 1).max((big as f64 * small_frac) as usize);
        let rep = klopsch_rep(prime, m, prime.one(), big).unwrap();
        let low = GroupElement::new(rep.series().truncate(small).unwrap()).unwrap();
        let cap = p.pow(6);
        let hi = rep.order_mod_truncation(cap).unwrap();
        let lo = low.order_mod_truncation(cap).unwrap();
        prop_assert_eq!(hi % lo, 0);
    }
}

#[test]
fn sigma_order_is_monotone_in_precision() {
    let orders: Vec<u64> = [2usize, 3, 4, 8, 16, 64, 256]
        .iter()
        .map(|&n| sigma_closed(n).unwrap().order_mod_truncation(16).unwrap())
        .collect();
    assert!(orders.windows(2).all(|w| w[1] % w[0] == 0), "{orders:?}");
    assert_eq!(orders.last(), Some(&4));
}

#[test]
fn sigma_order_at_64_with_cap_16() {
    assert_eq!(sigma_closed(64).unwrap().order_mod_truncation(16), Some(4));
}

#[test]
fn sigma_square_is_an_involution_of_depth_three() {
    let square = sigma_closed(512).unwrap().power(2);
    assert_eq!(square.depth(), Depth::Finite(3));
    assert_eq!(square.order_mod_truncation(64), Some(2));
}
