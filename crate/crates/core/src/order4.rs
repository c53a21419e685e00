//! An explicit element of order 4 in the Nottingham group over `F_2`.
//!
//! The element is
//!
//! ```text
//! sigma(t) = t + t^2 + sum_{j>=0} sum_{l=0}^{2^j - 1} t^(6*2^j + 2l)
//! ```
//!
//! It arises from the automorphism of `A = k[[t, w]]/(w + (1+t) w^2 + t^3)` given by
//! `t -> (t + w)/(1 + t)` and `w -> w/(1 + t)`. With `v = (1+t) w` the relation becomes
//! `v^2 + v + t^3 + t^4 = 0`, and the Artin-Schreier root `s` of `t^3 + t^4` splits it as
//! `(v + s)(v + s + 1)`. The second factor is a unit, so `v = s` and `w = s/(1+t)` are
//! ordinary series in `t`, which is how `A` is represented here.
//!
//! Geometrically, `A` is the completed local ring at `(0:0:1)` of the projective cubic
//! `z^2 y + (z + x) y^2 + x^3 = 0`. In the chart `t = x/z`, `w = y/z` the cubic
//! dehomogenizes to the relation of `A`, and the projective map
//! `(x:y:z) -> (x+y : y : x+z)` induces `t -> (t+w)/(1+t)`, `w -> w/(1+t)`.
//! None of the projective geometry is computed.
//!
//! Three routes produce `sigma`: the closed exponent set, the expansion
//! `t/(1+t) + s/(1+t)^2`, and `(t + w)/(1+t)` with `w` eliminated. [`verify`] checks
//! the identities tying them together.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::nottingham::GroupElement;
use crate::series::Series;

/// Default precision for [`verify_all`].
pub const DEFAULT_VERIFY_TRUNC: usize = 1024;

/// Smallest precision [`verify`] accepts.
pub const MIN_VERIFY_TRUNC: usize = 8;

fn require(trunc: usize, min: usize) -> Result<()> {
    if trunc < min {
        return Err(Error::BadPrecision { got: trunc, min });
    }
    Ok(())
}

fn one_plus_t(trunc: usize) -> Series {
    Series::from_poly(Prime::TWO, trunc, &[1, 1])
}

/// Whether `e` is `1`, `2`, or `6 * 2^j + 2l` with `0 <= l < 2^j`.
///
/// The second family is exactly the even numbers in `[6 * 2^j, 8 * 2^j)`.
pub fn in_sigma_support(e: usize) -> bool {
    if e == 1 || e == 2 {
        return true;
    }
    if e < 6 || e % 2 == 1 {
        return false;
    }
    let mut block = 1usize;
    while 6 * block <= e {
        if e < 8 * block {
            return true;
        }
        block *= 2;
    }
    false
}

/// `sigma` straight from its exponent set.
pub fn sigma_closed(trunc: usize) -> Result<GroupElement> {
    require(trunc, 2)?;
    let terms: Vec<(usize, i64)> = (0..=trunc)
        .filter(|&e| in_sigma_support(e))
        .map(|e| (e, 1))
        .collect();
    GroupElement::new(Series::from_sparse(Prime::TWO, trunc, &terms))
}

/// `s = sum_{i>=0} (t^3 + t^4)^(2^i)`, summed directly.
///
/// Defined at every precision; for `N < 3` every term is truncated away.
pub fn s_series(trunc: usize) -> Series {
    let mut sum = Series::zero(Prime::TWO, trunc);
    let mut term = Series::from_sparse(Prime::TWO, trunc, &[(3, 1), (4, 1)]);
    while !term.is_zero() {
        sum = sum.add(&term).expect("same context");
        term = term.square();
    }
    sum
}

/// `w = s/(1+t)`.
pub fn w_series(trunc: usize) -> Series {
    let inv = one_plus_t(trunc).inv_unit().expect("1 + t is a unit");
    s_series(trunc).mul(&inv).expect("same context")
}

/// `sigma = t/(1+t) + s/(1+t)^2`.
pub fn sigma_algebraic(trunc: usize) -> Result<GroupElement> {
    require(trunc, 2)?;
    let inv = one_plus_t(trunc).inv_unit()?;
    let t = Series::variable(Prime::TWO, trunc);
    let s = s_series(trunc);
    let body = t.mul(&inv)?.add(&s.mul(&inv.square())?)?;
    GroupElement::new(body)
}

/// `sigma = (t + w)/(1+t)`, the action on `t` with `w` eliminated.
pub fn sigma_relation(trunc: usize) -> Result<GroupElement> {
    require(trunc, 2)?;
    let inv = one_plus_t(trunc).inv_unit()?;
    let t = Series::variable(Prime::TWO, trunc);
    GroupElement::new(t.add(&w_series(trunc))?.mul(&inv)?)
}

/// `sigma` by all three routes together with `s` and `w`, at a common precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaBundle {
    pub sigma_closed: GroupElement,
    pub sigma_algebraic: GroupElement,
    pub sigma_relation: GroupElement,
    pub s: Series,
    pub w: Series,
}

impl SigmaBundle {
    pub fn build(trunc: usize) -> Result<Self> {
        Ok(SigmaBundle {
            sigma_closed: sigma_closed(trunc)?,
            sigma_algebraic: sigma_algebraic(trunc)?,
            sigma_relation: sigma_relation(trunc)?,
            s: s_series(trunc),
            w: w_series(trunc),
        })
    }

    pub fn routes_agree(&self) -> bool {
        self.sigma_closed == self.sigma_algebraic && self.sigma_closed == self.sigma_relation
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// Least exponent at which the identity fails; `None` iff the check passed.
    pub first_failure: Option<usize>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub precision: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failed(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    /// One line per check: `PASS <name>` or `FAIL <name> first_failure_exponent=<e>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match check.first_failure {
                None => writeln!(f, "PASS {}", check.name)?,
                Some(e) => writeln!(f, "FAIL {} first_failure_exponent={e}", check.name)?,
            }
        }
        Ok(())
    }
}

pub const CHECK_ARTIN_SCHREIER: &str = "artin_schreier";
pub const CHECK_FACTORIZATION: &str = "factorization";
pub const CHECK_RELATION: &str = "relation";
pub const CHECK_AUTOMORPHISM: &str = "automorphism";
pub const CHECK_ORDER: &str = "order";
pub const CHECK_ROUTES: &str = "route_agreement";

fn diff(a: &Series, b: &Series) -> Result<Option<usize>> {
    a.first_difference(b)
}

/// Polynomials in a formal variable `v` with series coefficients, lowest degree first.
fn poly_mul(a: &[Series], b: &[Series]) -> Result<Vec<Series>> {
    let zero = Series::zero(a[0].prime(), a[0].trunc());
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Ok(out)
}

fn check_artin_schreier(s: &Series, target: &Series) -> Result<Option<usize>> {
    diff(&s.square().add(s)?, target)
}

/// `(v + s)(v + s + 1)` against `v^2 + v + (t^3 + t^4)`, coefficient by coefficient in `v`.
fn check_factorization(s: &Series, target: &Series) -> Result<Option<usize>> {
    let n = s.trunc();
    let one = Series::one(Prime::TWO, n);
    let lhs = poly_mul(&[s.clone(), one.clone()], &[s.add(&one)?, one.clone()])?;
    let rhs = [target.clone(), one.clone(), one];
    let mut first: Option<usize> = None;
    for (a, b) in lhs.iter().zip(&rhs) {
        if let Some(e) = diff(a, b)? {
            first = Some(first.map_or(e, |f| f.min(e)));
        }
    }
    Ok(first)
}

/// `w + (1+t) w^2 + t^3 = 0`.
fn check_relation(w: &Series) -> Result<Option<usize>> {
    let n = w.trunc();
    let lhs = w
        .add(&one_plus_t(n).mul(&w.square())?)?
        .add(&Series::monomial(Prime::TWO, n, 3, 1))?;
    Ok(lhs.support().first().copied())
}

/// `w(sigma(t)) = w/(1+t)`: `sigma` respects the relation of `A`.
fn check_automorphism(sigma: &GroupElement, w: &Series) -> Result<Option<usize>> {
    let lhs = w.compose(sigma.series())?;
    let rhs = w.mul(&one_plus_t(w.trunc()).inv_unit()?)?;
    diff(&lhs, &rhs)
}

/// `sigma^4 = id`, `sigma^2 != id`, `sigma != id`.
///
/// An unexpected identity has no differing coefficient to point at, so it is reported
/// at exponent `N`, the precision that failed to separate it from `t`.
fn check_order(sigma: &GroupElement) -> Result<Option<usize>> {
    let id = Series::variable(Prime::TWO, sigma.trunc());
    let square = sigma.compose(sigma)?;
    let fourth = square.compose(&square)?;
    if let Some(e) = diff(fourth.series(), &id)? {
        return Ok(Some(e));
    }
    if square.is_identity() || sigma.is_identity() {
        return Ok(Some(sigma.trunc()));
    }
    Ok(None)
}

fn check_routes(sigma: &GroupElement) -> Result<Option<usize>> {
    let n = sigma.trunc();
    let algebraic = sigma_algebraic(n)?;
    let relation = sigma_relation(n)?;
    let a = diff(sigma.series(), algebraic.series())?;
    let b = diff(sigma.series(), relation.series())?;
    Ok(match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    })
}

/// Runs every certifying identity against a candidate `sigma` over `F_2`.
///
/// The checks on `s` and `w` do not involve the candidate; the automorphism, order and
/// route checks do, so a corrupted candidate is caught there.
pub fn verify(sigma: &GroupElement) -> Result<VerificationReport> {
    if sigma.prime() != Prime::TWO {
        return Err(Error::WrongCharacteristic(sigma.prime().get()));
    }
    let n = sigma.trunc();
    require(n, MIN_VERIFY_TRUNC)?;
    let s = s_series(n);
    let w = w_series(n);
    let target = Series::from_sparse(Prime::TWO, n, &[(3, 1), (4, 1)]);

    let results = std::thread::scope(|scope| {
        let a = scope.spawn(|| check_artin_schreier(&s, &target));
        let b = scope.spawn(|| check_factorization(&s, &target));
        let c = scope.spawn(|| check_relation(&w));
        let d = scope.spawn(|| check_automorphism(sigma, &w));
        let e = scope.spawn(|| check_order(sigma));
        let f = scope.spawn(|| check_routes(sigma));
        [
            (CHECK_ARTIN_SCHREIER, a.join()),
            (CHECK_FACTORIZATION, b.join()),
            (CHECK_RELATION, c.join()),
            (CHECK_AUTOMORPHISM, d.join()),
            (CHECK_ORDER, e.join()),
            (CHECK_ROUTES, f.join()),
        ]
    });

    let mut checks = Vec::with_capacity(results.len());
    for (name, outcome) in results {
        let first_failure = outcome.expect("check thread panicked")?;
        checks.push(Check { name, first_failure });
    }
    Ok(VerificationReport { checks, precision: n })
}

/// [`verify`] applied to [`sigma_closed`] at precision `trunc`.
pub fn verify_all(trunc: usize) -> Result<VerificationReport> {
    require(trunc, MIN_VERIFY_TRUNC)?;
    verify(&sigma_closed(trunc)?)
}
