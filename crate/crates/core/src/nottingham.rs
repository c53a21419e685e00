//! The Nottingham group modulo `t^(N+1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::series::Series;

/// A series `t + a_2 t^2 + ...`, i.e. an automorphism of `k[[t]]` that is the
/// identity modulo `t^2`, known to precision `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(Series);

/// Position in the congruence filtration. `Finite(d)` means `f(t) - t` has valuation
/// exactly `d + 1`; `Infinite` means `f(t) = t` to the working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{d}"),
            Depth::Infinite => write!(f, "inf"),
        }
    }
}

/// Default search bound for [`GroupElement::order_mod_truncation`]: `p^6`.
pub fn default_order_cap(prime: Prime) -> u64 {
    (prime.get() as u64).pow(6)
}

impl GroupElement {
    /// Wraps a series, checking `f_0 = 0` and `f_1 = 1`.
    pub fn new(body: Series) -> Result<Self> {
        if body.trunc() < 1 {
            return Err(Error::BadPrecision { got: body.trunc(), min: 1 });
        }
        if body.residues()[0] != 0 || body.residues()[1] != 1 {
            return Err(Error::NotGroupElement);
        }
        Ok(GroupElement(body))
    }

    /// The identity `t`.
    pub fn identity(prime: Prime, trunc: usize) -> Result<Self> {
        if trunc < 1 {
            return Err(Error::BadPrecision { got: trunc, min: 1 });
        }
        Ok(GroupElement(Series::variable(prime, trunc)))
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn into_series(self) -> Series {
        self.0
    }

    pub fn prime(&self) -> Prime {
        self.0.prime()
    }

    pub fn trunc(&self) -> usize {
        self.0.trunc()
    }

    pub fn is_identity(&self) -> bool {
        self.depth() == Depth::Infinite
    }

    /// `t -> self(other(t))`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        Ok(GroupElement(self.0.compose(&other.0)?))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.comp_inverse().expect("group elements are invertible"))
    }

    /// `self` composed with itself `k` times.
    pub fn power(&self, mut k: u64) -> GroupElement {
        let mut acc = GroupElement(Series::variable(self.prime(), self.trunc()));
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("same context");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same context");
            }
        }
        acc
    }

    pub fn depth(&self) -> Depth {
        let shifted = self
            .0
            .sub(&Series::variable(self.prime(), self.trunc()))
            .expect("same context");
        let v = shifted.valuation();
        if v > self.trunc() {
            Depth::Infinite
        } else {
            Depth::Finite(v - 1)
        }
    }

    /// The least `k = p^j <= cap` with `self^k = id` modulo `t^(N+1)`.
    ///
    /// This is the order in the finite quotient by the elements congruent to the
    /// identity modulo `t^(N+1)`. The order in the full group is at least this and may
    /// be infinite: `t + t^2` over `F_2` has order 8 at `N = 16` but 16 at `N = 256`.
    pub fn order_mod_truncation(&self, cap: u64) -> Option<u64> {
        let p = self.prime().get() as u64;
        let mut k = 1u64;
        let mut current = self.clone();
        loop {
            if current.is_identity() {
                return Some(k);
            }
            k = k.checked_mul(p).filter(|&next| next <= cap)?;
            current = current.power(p);
        }
    }
}

/// Klopsch's representative `t (1 - a t^m)^(-1/m)` of an order-`p` conjugacy class.
///
/// The exponent `-1/m` is realized as a unit inverse followed by an `m`-th root.
pub fn klopsch_rep(prime: Prime, m: u64, a: FieldElement, trunc: usize) -> Result<GroupElement> {
    if m == 0 || m.is_multiple_of(prime.get() as u64) {
        return Err(Error::NotCoprime { m, p: prime.get() });
    }
    debug_assert_eq!(a.modulus(), prime);
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let min = m as usize + 1;
    if trunc < min {
        return Err(Error::BadPrecision { got: trunc, min });
    }
    let base = Series::from_sparse(prime, trunc, &[(0, 1), (m as usize, -(a.value() as i64))]);
    let root = base.inv_unit()?.nth_root_unit(m)?;
    GroupElement::new(root.shift(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn elem(pr: u64, n: usize, c: &[i64]) -> GroupElement {
        GroupElement::new(Series::from_poly(p(pr), n, c)).unwrap()
    }

    #[test]
    fn identity_examples() {
        let id = GroupElement::identity(p(2), 4).unwrap();
        assert_eq!(id.series().residues(), &[0, 1, 0, 0, 0]);
        assert_eq!(id.depth(), Depth::Infinite);
        let f = elem(2, 4, &[0, 1, 1, 0, 1]);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(
            GroupElement::identity(p(2), 0),
            Err(Error::BadPrecision { got: 0, min: 1 })
        );
    }

    #[test]
    fn rejects_non_group_series() {
        let s = Series::from_poly(p(3), 4, &[0, 2, 1]);
        assert_eq!(GroupElement::new(s), Err(Error::NotGroupElement));
        let s = Series::from_poly(p(3), 4, &[1, 1]);
        assert_eq!(GroupElement::new(s), Err(Error::NotGroupElement));
    }

    #[test]
    fn squaring_t_plus_t2() {
        let f = elem(2, 16, &[0, 1, 1]);
        let ff = f.compose(&f).unwrap();
        assert_eq!(ff.series().support(), vec![1, 4]);
        assert_eq!(f.power(2), ff);
        assert_eq!(f.power(1), f);
        assert!(f.power(0).is_identity());
    }

    #[test]
    fn inverse_examples() {
        let id = GroupElement::identity(p(2), 10).unwrap();
        assert_eq!(id.inverse(), id);
        let mut ones = vec![1i64; 11];
        ones[0] = 0;
        let mobius = elem(2, 10, &ones);
        assert_eq!(mobius.inverse(), mobius);
        assert!(mobius.compose(&mobius).unwrap().is_identity());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(elem(5, 8, &[0, 1, 0, 0, 3]).depth(), Depth::Finite(3));
        assert_eq!(elem(5, 8, &[0, 1, 4]).depth(), Depth::Finite(1));
        assert!(Depth::Finite(100) < Depth::Infinite);
    }

    #[test]
    fn order_truncation_caveat() {
        let f16 = elem(2, 16, &[0, 1, 1]);
        assert_eq!(f16.order_mod_truncation(16), Some(8));
        assert_eq!(f16.order_mod_truncation(4), None);
        // (t + t^2)^(2^k) = t + t^(2^(2^k)), so order 16 first shows at N = 256
        assert_eq!(elem(2, 64, &[0, 1, 1]).order_mod_truncation(64), Some(8));
        assert_eq!(elem(2, 255, &[0, 1, 1]).order_mod_truncation(64), Some(8));
        assert_eq!(elem(2, 256, &[0, 1, 1]).order_mod_truncation(64), Some(16));
        let id = GroupElement::identity(p(3), 9).unwrap();
        assert_eq!(id.order_mod_truncation(1), Some(1));
        assert_eq!(default_order_cap(p(3)), 729);
    }

    #[test]
    fn klopsch_examples() {
        let n = 12;
        let r = klopsch_rep(p(2), 1, p(2).one(), n).unwrap();
        assert_eq!(r.series().support(), (1..=n).collect::<Vec<_>>());
        assert_eq!(r.order_mod_truncation(64), Some(2));

        let r = klopsch_rep(p(3), 1, p(3).one(), 5).unwrap();
        assert_eq!(r.series().residues(), &[0, 1, 1, 1, 1, 1]);
        assert!(r.power(3).is_identity());

        let r = klopsch_rep(p(2), 3, p(2).one(), 20).unwrap();
        assert_eq!(r.series().coeff(4).value(), 1);
        assert_eq!(&r.series().residues()[..4], &[0, 1, 0, 0]);
        assert_eq!(r.depth(), Depth::Finite(3));
        assert!(r.compose(&r).unwrap().is_identity());

        assert_eq!(
            klopsch_rep(p(3), 6, p(3).one(), 20),
            Err(Error::NotCoprime { m: 6, p: 3 })
        );
        assert_eq!(klopsch_rep(p(3), 2, p(3).zero(), 20), Err(Error::ZeroParameter));
        assert_eq!(
            klopsch_rep(p(3), 2, p(3).one(), 2),
            Err(Error::BadPrecision { got: 2, min: 3 })
        );
    }

    #[test]
    fn klopsch_leading_correction_is_a_over_m() {
        for pr in [3u64, 5, 7] {
            for a in p(pr).elements().skip(1) {
                for m in (1..6).filter(|m| m % pr != 0) {
                    let r = klopsch_rep(p(pr), m, a, 30).unwrap();
                    assert_eq!(r.depth(), Depth::Finite(m as usize));
                    // (1 - a t^m)^(-1/m) = 1 + (a/m) t^m + ...
                    let m_inv = p(pr).element(m as i64).inv().unwrap();
                    assert_eq!(r.series().coeff(m as usize + 1), a * m_inv);
                }
            }
        }
    }
}
