//! Truncated power series in `q` whose coefficients are Laurent polynomials in
//! an auxiliary parameter `z`, over arbitrary-precision integers.
//!
//! A [`QSeries`] of order `N` stores the coefficients of `q^0 ..= q^N` densely.
//! Every operation is exact for all exponents up to the order; anything above
//! it is discarded. Division is only available by series whose constant term
//! is the unit `+1` or `-1`.
//!
//! The building blocks used by the identity registry live here as free
//! functions: q-Pochhammer products [`poch_finite`] / [`poch_infinite`] (and
//! their reciprocals), the theta functions [`theta_phi`] and [`theta_psi`], and
//! the geometric kernels `q^k / (1 ∓ q^k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// A Laurent polynomial in `z` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl ZLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^z_exp`.
    pub fn monomial(c: impl Into<BigInt>, z_exp: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(z_exp, c.into());
        out
    }

    /// Builds a polynomial from `(z_exp, coefficient)` pairs; repeated exponents add.
    pub fn from_iter_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = ZLaurent::zero();
        for (e, c) in terms {
            out.add_term(e, BigInt::from(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is supported only on `z^0`.
    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Coefficient of `z^z_exp`.
    pub fn coeff(&self, z_exp: i64) -> BigInt {
        self.terms.get(&z_exp).cloned().unwrap_or_default()
    }

    /// The integer value when the polynomial is z-free.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.is_z_free().then(|| self.coeff(0))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms as `(z_exp, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Adds `c * z^z_exp` in place.
    pub fn add_term(&mut self, z_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(z_exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &ZLaurent) {
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
    }

    /// `self += c * z^shift * other`.
    pub fn add_scaled(&mut self, other: &ZLaurent, c: &BigInt, shift: i64) {
        if c.is_zero() {
            return;
        }
        for (&e, v) in &other.terms {
            self.add_term(e + shift, v * c);
        }
    }

    pub fn mul_ref(&self, other: &ZLaurent) -> ZLaurent {
        let mut out = ZLaurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ZLaurent {
        let mut out = ZLaurent::zero();
        out.add_scaled(self, c, 0);
        out
    }

    /// Substitutes `z = z0`.
    ///
    /// Fails when a negative power of `z` would make the result non-integral.
    pub fn eval(&self, z0: i64) -> Result<BigInt> {
        let base = BigInt::from(z0);
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                match z0 {
                    1 => acc += c,
                    -1 => {
                        if e % 2 == 0 {
                            acc += c
                        } else {
                            acc -= c
                        }
                    }
                    _ => {
                        return domain(format!(
                            "cannot evaluate z^{e} at z = {z0}: result is not an integer"
                        ))
                    }
                }
            } else {
                acc += c * num_traits::pow(base.clone(), e as usize);
            }
        }
        Ok(acc)
    }
}

impl From<i64> for ZLaurent {
    fn from(c: i64) -> Self {
        ZLaurent::constant(c)
    }
}

impl From<BigInt> for ZLaurent {
    fn from(c: BigInt) -> Self {
        ZLaurent::constant(c)
    }
}

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The parameter `a = sign * q^q_exp * z^z_exp` of a q-Pochhammer symbol.
///
/// `(a; q)_n` multiplies the factors `1 - a q^i`, so `(-q; q)_n` is written
/// `PochBase::new(-1, 1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochBase {
    pub sign: i8,
    pub q_exp: usize,
    pub z_exp: i64,
}

impl PochBase {
    pub fn new(sign: i8, q_exp: usize, z_exp: i64) -> Self {
        assert!(sign == 1 || sign == -1, "PochBase sign must be +1 or -1");
        PochBase { sign, q_exp, z_exp }
    }

    /// `a = q^m`.
    pub fn q(m: usize) -> Self {
        Self::new(1, m, 0)
    }

    /// `a = -q^m`.
    pub fn neg_q(m: usize) -> Self {
        Self::new(-1, m, 0)
    }

    pub fn with_z(self, z_exp: i64) -> Self {
        PochBase { z_exp, ..self }
    }
}

/// A power series in `q` truncated after `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<ZLaurent>,
}

fn check_orders(a: &QSeries, b: &QSeries) -> Result<()> {
    if a.order != b.order {
        return domain(format!(
            "truncation orders differ ({} vs {})",
            a.order, b.order
        ));
    }
    Ok(())
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![ZLaurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ZLaurent::one();
        s
    }

    /// `c * q^q_exp * z^z_exp`.
    pub fn monomial(c: impl Into<BigInt>, q_exp: usize, z_exp: i64, order: usize) -> Result<Self> {
        if q_exp > order {
            return domain(format!("q exponent {q_exp} exceeds order {order}"));
        }
        if z_exp.unsigned_abs() as usize > order {
            return domain(format!(
                "z exponent {z_exp} lies outside the window allowed at order {order}"
            ));
        }
        let mut s = Self::zero(order);
        s.coeffs[q_exp] = ZLaurent::monomial(c, z_exp);
        Ok(s)
    }

    /// A z-free series from integer coefficients; entries past `order` are
    /// ignored, missing entries are zero.
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in coeffs.iter().take(order + 1).enumerate() {
            s.coeffs[i] = ZLaurent::constant(c);
        }
        s
    }

    /// A series from explicit Laurent coefficients, truncated or zero-padded to `order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<ZLaurent>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, ZLaurent::zero());
        QSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^i`; zero beyond the order.
    pub fn coeff(&self, i: usize) -> ZLaurent {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[ZLaurent] {
        &self.coeffs
    }

    /// Coefficient of `q^i` as an integer; `None` if it depends on `z`.
    pub fn int_coeff(&self, i: usize) -> Option<BigInt> {
        self.coeffs
            .get(i)
            .map_or(Some(BigInt::zero()), ZLaurent::as_integer)
    }

    /// Integer coefficients `0..=order`; `None` if any coefficient involves `z`.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(ZLaurent::as_integer).collect()
    }

    pub fn is_z_free(&self) -> bool {
        self.coeffs.iter().all(ZLaurent::is_z_free)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZLaurent::is_zero)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops every coefficient above `order`. Fails when asked to grow.
    pub fn truncate(&self, order: usize) -> Result<QSeries> {
        if order > self.order {
            return domain(format!(
                "cannot extend a series of order {} to order {order}",
                self.order
            ));
        }
        Ok(QSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn checked_add(&self, other: &QSeries) -> Result<QSeries> {
        check_orders(self, other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &QSeries) -> Result<QSeries> {
        check_orders(self, other)?;
        let n = self.order;
        let mut out = QSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul_ref(b);
                out.coeffs[i + j].add_assign_ref(&prod);
            }
        }
        Ok(out)
    }

    pub fn neg_ref(&self) -> QSeries {
        let m1 = -BigInt::one();
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(&m1)).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> QSeries {
        let c = c.into();
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.scale(&c)).collect(),
        }
    }

    /// Multiplies by `q^k * z^z_shift`.
    pub fn shift(&self, k: usize, z_shift: i64) -> QSeries {
        let mut out = QSeries::zero(self.order);
        let one = BigInt::one();
        for i in k..=self.order {
            out.coeffs[i].add_scaled(&self.coeffs[i - k], &one, z_shift);
        }
        out
    }

    /// Multiplicative inverse, by back-substitution.
    ///
    /// The constant term must be the z-free unit `+1` or `-1`.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = match self.coeffs[0].as_integer() {
            Some(c) if c.abs().is_one() => c,
            _ => return domain(format!("constant term {} is not a unit", self.coeffs[0])),
        };
        let n = self.order;
        let mut inv = QSeries::zero(n);
        inv.coeffs[0] = ZLaurent::constant(c0.clone());
        // c0 is its own inverse
        let neg_c0 = -c0;
        for k in 1..=n {
            let mut acc = ZLaurent::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || inv.coeffs[k - j].is_zero() {
                    continue;
                }
                acc.add_assign_ref(&self.coeffs[j].mul_ref(&inv.coeffs[k - j]));
            }
            inv.coeffs[k] = acc.scale(&neg_c0);
        }
        Ok(inv)
    }

    /// In place `self *= 1 + c * q^q_exp * z^z_exp`.
    pub fn mul_binomial(&mut self, c: &BigInt, q_exp: usize, z_exp: i64) {
        if c.is_zero() {
            return;
        }
        if q_exp == 0 {
            for coeff in self.coeffs.iter_mut() {
                let extra = coeff.clone();
                coeff.add_scaled(&extra, c, z_exp);
            }
            return;
        }
        if q_exp > self.order {
            return;
        }
        for i in (q_exp..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].add_scaled(&lo[i - q_exp], c, z_exp);
        }
    }

    /// In place `self /= 1 + c * q^q_exp * z^z_exp`; requires `q_exp >= 1`.
    pub fn div_binomial(&mut self, c: &BigInt, q_exp: usize, z_exp: i64) -> Result<()> {
        if q_exp == 0 {
            return domain("cannot divide by a binomial with a q^0 term");
        }
        if c.is_zero() || q_exp > self.order {
            return Ok(());
        }
        let neg = -c;
        for i in q_exp..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].add_scaled(&lo[i - q_exp], &neg, z_exp);
        }
        Ok(())
    }

    /// Substitutes a concrete integer for `z`, producing a z-free series.
    pub fn eval_z(&self, z0: i64) -> Result<QSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(z0).map(ZLaurent::constant))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries {
            order: self.order,
            coeffs,
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = match c.as_integer() {
                Some(v) => (v.is_negative(), v.abs().to_string()),
                None => (false, format!("({c})")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let bare = body == "1" && i > 0;
            match (i, bare) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{body}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{body}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $checked:ident) => {
        impl $Trait<&QSeries> for &QSeries {
            type Output = QSeries;
            /// Panics on mismatched truncation orders; use the `checked_` form to recover.
            fn $method(self, rhs: &QSeries) -> QSeries {
                self.$checked(rhs).expect("mismatched truncation orders")
            }
        }
        impl $Trait<QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: &QSeries) -> QSeries {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.neg_ref()
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.neg_ref()
    }
}

/// `c * q^q_exp * z^z_exp`; see [`QSeries::monomial`].
pub fn monomial(c: impl Into<BigInt>, q_exp: usize, z_exp: i64, order: usize) -> Result<QSeries> {
    QSeries::monomial(c, q_exp, z_exp, order)
}

/// `(a; q)_n` truncated at `order`.
pub fn poch_finite(a: PochBase, n: usize, order: usize) -> QSeries {
    poch_finite_step(a, 1, n, order)
}

/// `(a; q^step)_n = prod_{i<n} (1 - a q^{step*i})`.
pub fn poch_finite_step(a: PochBase, step: usize, n: usize, order: usize) -> QSeries {
    let c = BigInt::from(-a.sign);
    let mut out = QSeries::one(order);
    for i in 0..n {
        let e = a.q_exp + step * i;
        if e > order {
            break;
        }
        out.mul_binomial(&c, e, a.z_exp);
    }
    out
}

/// `(a; q)_inf` truncated at `order`; requires `a` to carry a positive power of `q`.
pub fn poch_infinite(a: PochBase, order: usize) -> Result<QSeries> {
    poch_infinite_step(a, 1, order)
}

/// `(a; q^step)_inf`.
pub fn poch_infinite_step(a: PochBase, step: usize, order: usize) -> Result<QSeries> {
    let n = infinite_len(a, step, order)?;
    Ok(poch_finite_step(a, step, n, order))
}

/// `1 / (a; q^step)_n`. Every factor must carry a positive power of `q`.
pub fn poch_recip_step(a: PochBase, step: usize, n: usize, order: usize) -> Result<QSeries> {
    let c = BigInt::from(-a.sign);
    let mut out = QSeries::one(order);
    for i in 0..n {
        let e = a.q_exp + step * i;
        if e == 0 {
            return domain("reciprocal Pochhammer factor has no positive q power");
        }
        if e > order {
            break;
        }
        out.div_binomial(&c, e, a.z_exp)?;
    }
    Ok(out)
}

/// `1 / (a; q)_n`.
pub fn poch_recip(a: PochBase, n: usize, order: usize) -> Result<QSeries> {
    poch_recip_step(a, 1, n, order)
}

/// `1 / (a; q^step)_inf`.
pub fn poch_recip_infinite_step(a: PochBase, step: usize, order: usize) -> Result<QSeries> {
    let n = infinite_len(a, step, order)?;
    poch_recip_step(a, step, n, order)
}

/// `1 / (a; q)_inf`.
pub fn poch_recip_infinite(a: PochBase, order: usize) -> Result<QSeries> {
    poch_recip_infinite_step(a, 1, order)
}

/// `prod_{i<n} (1 - c q^{q_exp + step*i})` for an arbitrary integer `c`.
pub fn poch_scaled(c: &BigInt, q_exp: usize, step: usize, n: usize, order: usize) -> QSeries {
    let neg = -c;
    let mut out = QSeries::one(order);
    for i in 0..n {
        let e = q_exp + step * i;
        if e > order {
            break;
        }
        out.mul_binomial(&neg, e, 0);
    }
    out
}

/// `1 / prod_{i<n} (1 - c q^{q_exp + step*i})`; requires `q_exp >= 1`.
pub fn poch_scaled_recip(
    c: &BigInt,
    q_exp: usize,
    step: usize,
    n: usize,
    order: usize,
) -> Result<QSeries> {
    if q_exp == 0 {
        return domain("reciprocal Pochhammer factor has no positive q power");
    }
    let neg = -c;
    let mut out = QSeries::one(order);
    for i in 0..n {
        let e = q_exp + step * i;
        if e > order {
            break;
        }
        out.div_binomial(&neg, e, 0)?;
    }
    Ok(out)
}

fn infinite_len(a: PochBase, step: usize, order: usize) -> Result<usize> {
    if a.q_exp == 0 {
        return domain("infinite Pochhammer product needs a base with positive q power");
    }
    if step == 0 {
        return domain("Pochhammer step must be positive");
    }
    // factors with base exponent > order are 1 + O(q^{order+1})
    Ok(if a.q_exp > order {
        0
    } else {
        (order - a.q_exp) / step + 1
    })
}

/// `phi(±q) = sum_{n in Z} (±q)^{n^2}`.
pub fn theta_phi(sign_q: i8, order: usize) -> QSeries {
    let mut out = QSeries::zero(order);
    out.coeffs[0] = ZLaurent::one();
    let mut n = 1usize;
    while n * n <= order {
        let e = n * n;
        let c = if sign_q < 0 && e % 2 == 1 { -2 } else { 2 };
        out.coeffs[e] = ZLaurent::constant(c);
        n += 1;
    }
    out
}

/// `psi(±q) = sum_{n>=0} (±q)^{n(n+1)/2}`.
pub fn theta_psi(sign_q: i8, order: usize) -> QSeries {
    let mut out = QSeries::zero(order);
    let mut n = 0usize;
    while n * (n + 1) / 2 <= order {
        let e = n * (n + 1) / 2;
        let c = if sign_q < 0 && e % 2 == 1 { -1 } else { 1 };
        out.coeffs[e].add_term(0, BigInt::from(c));
        n += 1;
    }
    out
}

/// `q^k / (1 - q^k)` for `sign = +1`, `q^k / (1 + q^k)` for `sign = -1`.
pub fn geometric_kernel(sign: i8, k: usize, order: usize) -> Result<QSeries> {
    if k == 0 {
        return domain("geometric kernel needs k >= 1");
    }
    let mut out = QSeries::zero(order);
    let mut j = 1usize;
    while j * k <= order {
        let c = if sign < 0 && j.is_multiple_of(2) {
            -1
        } else {
            1
        };
        out.coeffs[j * k] = ZLaurent::constant(c);
        j += 1;
    }
    Ok(out)
}

/// Substitutes `z = z0`; see [`QSeries::eval_z`].
pub fn eval_z(s: &QSeries, z0: i64) -> Result<QSeries> {
    s.eval_z(z0)
}

/// Largest z-exponent magnitude anywhere in the series, if it has any terms.
pub fn z_window(s: &QSeries) -> Option<u64> {
    s.coeffs
        .iter()
        .flat_map(|c| [c.min_exp(), c.max_exp()])
        .flatten()
        .map(|e| e.unsigned_abs())
        .max()
}

/// Converts integer coefficients to `i64`, for tests and display.
pub fn to_i64_vec(s: &QSeries) -> Option<Vec<i64>> {
    s.coeffs
        .iter()
        .map(|c| c.as_integer().and_then(|v| v.to_i64()))
        .collect()
}
