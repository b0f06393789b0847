//! The identity registry and the verifier.
//!
//! Each [`IdentityEntry`] carries two or more [`Side`]s that are built by
//! independent code paths: analytic sums and products go through the
//! [`qseries`](crate::qseries) engine, combinatorial sides through exhaustive
//! enumeration in [`partitions`](crate::partitions), and closed-formula sides
//! through [`number_theory`](crate::number_theory) predicates. [`verify`] builds
//! every side and compares coefficients.
//!
//! Constant terms: series-valued sides are compared from `q^0`. As soon as a
//! norm-indexed side (enumeration or closed formula) is involved, the pair is
//! compared from `q^1`, since every partition set here excludes the empty
//! partition and the analytic sides subtract their own constants.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::{is_square, is_triangular, isqrt, r2};
use crate::partitions::{
    eta_stat, mu_stat, q_membership, r_membership, weighted_sum, weighted_sum_z, Filters, SetId,
    Weight, ZStat,
};
use crate::qseries::{
    geometric_kernel, poch_finite_step, poch_infinite_step, poch_recip_infinite_step,
    poch_recip_step, theta_phi, theta_psi, PochBase, QSeries, ZLaurent,
};

/// Whether an entry is a proven identity or an observed pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Theorem,
    Conjecture,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Theorem => "theorem",
            Kind::Conjecture => "conjecture",
        }
    }
}

/// How a side is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideTag {
    AnalyticSum,
    ProductForm,
    CombinatorialEnum,
    ClosedFormula,
}

impl SideTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SideTag::AnalyticSum => "analytic-sum",
            SideTag::ProductForm => "product-form",
            SideTag::CombinatorialEnum => "combinatorial-enum",
            SideTag::ClosedFormula => "closed-formula",
        }
    }
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The `n`-th summand of an analytic sum at a given truncation order.
pub type TermFn = Arc<dyn Fn(usize, usize) -> Result<QSeries> + Send + Sync>;
/// A whole series at a given truncation order.
pub type SeriesFn = Arc<dyn Fn(usize) -> Result<QSeries> + Send + Sync>;
/// The coefficient at a single norm `N >= 1`.
pub type NormFn = Arc<dyn Fn(u32) -> Result<ZLaurent> + Send + Sync>;
/// Sorted `(n-value, weight)` pairs at a single norm.
pub type Multiset = Vec<(u32, BigInt)>;
pub type MultisetFn = Arc<dyn Fn(u32) -> Result<Multiset> + Send + Sync>;

#[derive(Clone)]
pub enum SideBuilder {
    /// `sum_{n >= start} term(n)`; the `n`-th summand is `O(q^{bound(n)})`.
    Sum {
        start: usize,
        bound: fn(usize) -> usize,
        term: TermFn,
    },
    Series(SeriesFn),
    /// Norm-indexed values; the constant term is 0 by convention.
    Norm(NormFn),
    Multiset(MultisetFn),
}

#[derive(Clone)]
pub struct Side {
    pub tag: SideTag,
    pub label: String,
    pub builder: SideBuilder,
}

impl Side {
    /// True for sides indexed by norm `N >= 1` rather than by q-exponent from 0.
    pub fn norm_indexed(&self) -> bool {
        matches!(
            self.builder,
            SideBuilder::Norm(_) | SideBuilder::Multiset(_)
        )
    }

    pub fn needs_enumeration(&self) -> bool {
        self.tag == SideTag::CombinatorialEnum
    }

    /// Minimal q-order of the `n`-th summand, for analytic sums.
    pub fn min_order_bound(&self) -> Option<fn(usize) -> usize> {
        match &self.builder {
            SideBuilder::Sum { bound, .. } => Some(*bound),
            _ => None,
        }
    }

    /// Builds the side through `limit`, summing `extra_terms` summands past the
    /// provable cutoff for analytic sums.
    pub fn build(&self, limit: usize, extra_terms: usize) -> Result<SideValue> {
        match &self.builder {
            SideBuilder::Sum { start, bound, term } => {
                let mut acc = QSeries::zero(limit);
                let mut n = *start;
                while bound(n) <= limit {
                    acc = acc.checked_add(&term(n, limit)?)?;
                    n += 1;
                }
                for k in 0..extra_terms {
                    acc = acc.checked_add(&term(n + k, limit)?)?;
                }
                Ok(SideValue::Series(acc))
            }
            SideBuilder::Series(f) => Ok(SideValue::Series(f(limit)?)),
            SideBuilder::Norm(f) => {
                let mut coeffs = vec![ZLaurent::zero()];
                for n in 1..=limit {
                    coeffs.push(f(n as u32)?);
                }
                Ok(SideValue::Series(QSeries::from_coeffs(limit, coeffs)))
            }
            SideBuilder::Multiset(f) => {
                let mut values = vec![Vec::new()];
                for n in 1..=limit {
                    values.push(f(n as u32)?);
                }
                Ok(SideValue::Multisets(values))
            }
        }
    }
}

/// A built side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideValue {
    Series(QSeries),
    /// Index `N` holds the sorted multiset at norm `N`; index 0 is empty.
    Multisets(Vec<Vec<(u32, BigInt)>>),
}

impl SideValue {
    pub fn as_series(&self) -> Option<&QSeries> {
        match self {
            SideValue::Series(s) => Some(s),
            SideValue::Multisets(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SideValue::Series(s) => s.order() + 1,
            SideValue::Multisets(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Printable coefficient at index `i`.
    pub fn coeff_string(&self, i: usize) -> String {
        match self {
            SideValue::Series(s) => s.coeff(i).to_string(),
            SideValue::Multisets(m) => {
                let items: Vec<String> = m[i].iter().map(|(n, w)| format!("({n},{w})")).collect();
                format!("{{{}}}", items.join(","))
            }
        }
    }

    fn eq_at(&self, other: &SideValue, i: usize) -> bool {
        match (self, other) {
            (SideValue::Series(a), SideValue::Series(b)) => a.coeff(i) == b.coeff(i),
            (SideValue::Multisets(a), SideValue::Multisets(b)) => a[i] == b[i],
            _ => false,
        }
    }
}

#[derive(Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity written out in q-series / weighted-sum notation.
    pub statement: &'static str,
    pub kind: Kind,
    pub sides: Vec<Side>,
    /// Largest norm the enumeration sides are allowed to reach.
    pub max_enum_norm: usize,
}

impl IdentityEntry {
    /// Checks the structural invariants of the entry.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(format!("{}: {msg}", self.id)));
        if self.sides.len() < 2 {
            return fail("fewer than two sides".into());
        }
        if self.kind == Kind::Theorem
            && !self
                .sides
                .iter()
                .any(|s| s.tag != SideTag::CombinatorialEnum)
        {
            return fail("theorem without an analytic, product or closed side".into());
        }
        for side in &self.sides {
            if let SideBuilder::Sum { start, bound, .. } = &side.builder {
                for n in *start..*start + 200 {
                    if bound(n + 1) <= bound(n) {
                        return fail(format!(
                            "min-order bound of `{}` not increasing",
                            side.label
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// A copy whose analytic side `side_index` has the sign of summand `n`
    /// flipped. Used as a negative control for the verifier.
    pub fn with_flipped_summand(&self, side_index: usize, n: usize) -> Result<IdentityEntry> {
        let mut out = self.clone();
        let count = out.sides.len();
        let side = out
            .sides
            .get_mut(side_index)
            .ok_or_else(|| Error::NoSuchSide {
                id: self.id.into(),
                index: side_index,
                count,
            })?;
        let SideBuilder::Sum { term, .. } = &mut side.builder else {
            return Err(Error::Domain(format!(
                "side {side_index} of {} is not an analytic sum",
                self.id
            )));
        };
        let inner = term.clone();
        *term = Arc::new(move |k, order| {
            let t = inner(k, order)?;
            Ok(if k == n { -t } else { t })
        });
        Ok(out)
    }
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field(
                "sides",
                &self
                    .sides
                    .iter()
                    .map(|s| s.label.as_str())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "CONJECTURE-MATCH")]
    ConjectureMatch,
    #[serde(rename = "CONJECTURE-FAIL")]
    ConjectureFail,
    #[serde(rename = "ERROR")]
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::ConjectureMatch => "CONJECTURE-MATCH",
            Status::ConjectureFail => "CONJECTURE-FAIL",
            Status::Error => "ERROR",
        }
    }

    /// Whether this outcome fails a run. Conjectures never do.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Mismatch | Status::Error)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SideReport {
    pub tag: String,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub kind: Kind,
    pub order: usize,
    pub status: Status,
    pub first_divergent_exponent: Option<usize>,
    pub sides: Vec<SideReport>,
    pub ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Looks up an entry by id.
pub fn lookup(id: &str) -> Result<IdentityEntry> {
    let all = registry();
    match all.iter().position(|e| e.id == id) {
        Some(i) => Ok(all.into_iter().nth(i).expect("index in range")),
        None => Err(Error::UnknownId {
            id: id.into(),
            suggestions: suggest(id, &all),
        }),
    }
}

fn suggest(id: &str, all: &[IdentityEntry]) -> Vec<String> {
    let mut scored: Vec<(usize, &str)> = all
        .iter()
        .map(|e| (edit_distance(id, e.id), e.id))
        .filter(|&(d, cand)| d <= 3 || cand.contains(id) || (!id.is_empty() && id.contains(cand)))
        .collect();
    scored.sort();
    scored
        .into_iter()
        .take(5)
        .map(|(_, s)| s.to_string())
        .collect()
}

fn edit_distance(a: &str, b: &str) -> usize {
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, ca) in a.chars().enumerate() {
        let mut cur = vec![i + 1];
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur.push(sub.min(prev[j + 1] + 1).min(cur[j] + 1));
        }
        prev = cur;
    }
    prev[b.len()]
}

fn side_limit(side: &Side, order: usize, enum_ceiling: usize) -> usize {
    if side.needs_enumeration() {
        order.min(enum_ceiling)
    } else {
        order
    }
}

/// Builds one side of an entry: through `order_or_norm` for series sides, or
/// for every norm `1..=order_or_norm` for norm-indexed sides.
pub fn build_side(id: &str, side_index: usize, order_or_norm: usize) -> Result<SideValue> {
    let entry = lookup(id)?;
    build_entry_side(&entry, side_index, order_or_norm)
}

pub fn build_entry_side(
    entry: &IdentityEntry,
    side_index: usize,
    order_or_norm: usize,
) -> Result<SideValue> {
    let side = entry
        .sides
        .get(side_index)
        .ok_or_else(|| Error::NoSuchSide {
            id: entry.id.into(),
            index: side_index,
            count: entry.sides.len(),
        })?;
    if side.needs_enumeration() && order_or_norm > entry.max_enum_norm {
        return Err(Error::EnumCeiling {
            id: entry.id.into(),
            requested: order_or_norm,
            ceiling: entry.max_enum_norm,
        });
    }
    side.build(order_or_norm, 0)
}

/// Verifies a registered identity, enumerating up to `order`.
pub fn verify(id: &str, order: usize) -> Result<VerificationReport> {
    verify_entry(&lookup(id)?, order, order)
}

/// Verifies a registered identity with a separate enumeration ceiling.
pub fn verify_with_ceiling(
    id: &str,
    order: usize,
    enum_ceiling: usize,
) -> Result<VerificationReport> {
    verify_entry(&lookup(id)?, order, enum_ceiling)
}

/// Builds every side of `entry` independently and compares them.
///
/// Series and closed-formula sides are checked through `order`; enumeration
/// sides through `min(order, enum_ceiling)`. Every pair of sides is compared
/// over their common range.
pub fn verify_entry(
    entry: &IdentityEntry,
    order: usize,
    enum_ceiling: usize,
) -> Result<VerificationReport> {
    if order == 0 {
        return Err(Error::Domain(
            "verification order must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let enum_limit = order.min(enum_ceiling);
    if entry.sides.iter().any(Side::needs_enumeration) && enum_limit > entry.max_enum_norm {
        return Err(Error::EnumCeiling {
            id: entry.id.into(),
            requested: enum_limit,
            ceiling: entry.max_enum_norm,
        });
    }
    let built = entry
        .sides
        .iter()
        .map(|s| s.build(side_limit(s, order, enum_ceiling), 0))
        .collect::<Result<Vec<_>>>()?;

    let mut first: Option<usize> = None;
    for i in 0..built.len() {
        for j in i + 1..built.len() {
            let lo = usize::from(entry.sides[i].norm_indexed() || entry.sides[j].norm_indexed());
            let hi = built[i].len().min(built[j].len());
            if let Some(k) = (lo..hi).find(|&k| !built[i].eq_at(&built[j], k)) {
                first = Some(first.map_or(k, |f| f.min(k)));
            }
        }
    }

    let status = match (entry.kind, first) {
        (Kind::Theorem, None) => Status::Match,
        (Kind::Theorem, Some(_)) => Status::Mismatch,
        (Kind::Conjecture, None) => Status::ConjectureMatch,
        (Kind::Conjecture, Some(_)) => Status::ConjectureFail,
    };
    let sides = entry
        .sides
        .iter()
        .zip(&built)
        .map(|(side, value)| SideReport {
            tag: side.tag.as_str().into(),
            coeffs: (0..value.len()).map(|k| value.coeff_string(k)).collect(),
        })
        .collect();
    Ok(VerificationReport {
        id: entry.id.into(),
        kind: entry.kind,
        order,
        status,
        first_divergent_exponent: first,
        sides,
        ms: started.elapsed().as_micros() as f64 / 1e3,
        error: None,
    })
}

/// Verifies every registered entry, in registry order. Failures to build a
/// side are reported with status `ERROR` rather than aborting the run.
pub fn verify_all(order: usize, enum_ceiling: usize) -> Vec<VerificationReport> {
    verify_entries(&registry(), order, enum_ceiling)
}

pub fn verify_entries(
    entries: &[IdentityEntry],
    order: usize,
    enum_ceiling: usize,
) -> Vec<VerificationReport> {
    entries
        .par_iter()
        .map(|e| {
            verify_entry(e, order, enum_ceiling).unwrap_or_else(|err| VerificationReport {
                id: e.id.into(),
                kind: e.kind,
                order,
                status: Status::Error,
                first_divergent_exponent: None,
                sides: Vec::new(),
                ms: 0.0,
                error: Some(err.to_string()),
            })
        })
        .collect()
}

/// Evaluates the z-free closed-formula side of `id` at norm `n`.
pub fn explicit_formula(id: &str, n: u32) -> Result<BigInt> {
    let value = explicit_formula_z(id, n)?;
    value.as_integer().ok_or_else(|| {
        Error::Domain(format!(
            "the closed formula of {id} depends on z; use explicit_formula_z"
        ))
    })
}

/// Evaluates the closed-formula side of `id` at norm `n`, possibly in `z`.
pub fn explicit_formula_z(id: &str, n: u32) -> Result<ZLaurent> {
    if n == 0 {
        return Err(Error::Domain(
            "closed formulas are indexed by N >= 1".into(),
        ));
    }
    let entry = lookup(id)?;
    let side = entry
        .sides
        .iter()
        .find(|s| s.tag == SideTag::ClosedFormula && matches!(s.builder, SideBuilder::Norm(_)))
        .ok_or_else(|| Error::Domain(format!("{id} has no closed-formula side")))?;
    match &side.builder {
        SideBuilder::Norm(f) => f(n),
        _ => unreachable!("filtered above"),
    }
}

// ---------------------------------------------------------------------------
// Series building blocks

fn pb(sign: i8, q_exp: usize, z_exp: i64) -> PochBase {
    PochBase::new(sign, q_exp, z_exp)
}

/// `c * q^k`, zero when `k` is past the order.
fn q_pow(c: i64, k: usize, z_exp: i64, order: usize) -> QSeries {
    QSeries::one(order).shift(k, z_exp).scale(c)
}

fn product(factors: Vec<QSeries>) -> Result<QSeries> {
    let mut it = factors.into_iter();
    let first = it.next().expect("at least one factor");
    it.try_fold(first, |acc, f| acc.checked_mul(&f))
}

fn minus_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `1 / (1 - sign * q^k)` for `sign = +1`, or `1 / (1 + q^k)` for `sign = -1`.
fn recip_binomial(sign: i8, k: usize, order: usize) -> Result<QSeries> {
    poch_recip_step(pb(sign, k, 0), 1, 1, order)
}

fn ones_minus(s: QSeries) -> Result<QSeries> {
    s.checked_sub(&QSeries::one(s.order()))
}

/// `(-q;q)_n / (q;q)_n`.
fn over_factor(n: usize, order: usize) -> Result<QSeries> {
    let mut s = poch_finite_step(PochBase::neg_q(1), 1, n, order);
    for i in 1..=n {
        s.div_binomial(&-BigInt::one(), i, 0)?;
    }
    Ok(s)
}

/// `(-q; q^2)_{n} / (q^2; q^2)_{n}` times `a`'s `z`-twist: the shared factor
/// of the distinct-even-parts sums.
fn distinct_odd_factor(n: usize, z_exp: i64, order: usize) -> Result<QSeries> {
    product(vec![
        poch_finite_step(pb(-1, 1, z_exp), 2, n, order),
        poch_recip_step(PochBase::q(2), 2, n, order)?,
    ])
}

// ----- analytic summands, one per identity side -----

fn s_sign_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        geometric_kernel(-1, n, order)?,
        poch_recip_step(PochBase::q(1), 1, n - 1, order)?,
    ])
}

fn t_weight_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        q_pow(1, n * (n + 1) / 2, 0, order),
        poch_recip_step(PochBase::q(2), 2, n, order)?,
        poch_recip_infinite_step(PochBase::q(n + 1), 1, order)?,
    ])
}

fn over_s_sign_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        geometric_kernel(-1, n, order)?.scale(2),
        over_factor(n - 1, order)?,
    ])
}

fn tau_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        q_pow(2, n * (n + 1) / 2 + n + 1, 0, order),
        poch_recip_step(PochBase::q(1), 1, n, order)?,
        recip_binomial(1, 2 * (n + 1), order)?,
        poch_infinite_step(PochBase::neg_q(n + 2), 1, order)?,
        poch_recip_infinite_step(PochBase::q(n + 2), 1, order)?,
    ])
}

fn alladi_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        q_pow(minus_sign(n), n * (n + 1) / 2, 0, order),
        recip_binomial(-1, n, order)?,
        poch_recip_step(PochBase::q(1), 1, n, order)?,
    ])
}

fn signed_square_term(n: usize, order: usize) -> Result<QSeries> {
    Ok(q_pow(minus_sign(n), n * n, 0, order))
}

fn two_squares_sum_term(n: usize, order: usize) -> Result<QSeries> {
    Ok(over_s_sign_sum_term(n, order)?.scale(minus_sign(n)))
}

fn pe_sum_term_z(n: usize, order: usize, z: bool) -> Result<QSeries> {
    let z_exp = if z { 1 } else { 0 };
    Ok(product(vec![
        geometric_kernel(1, 2 * n, order)?.scale(minus_sign(n)),
        distinct_odd_factor(n - 1, -z_exp, order)?,
    ])?
    .shift(n - 1, z_exp * (n as i64 - 1)))
}

fn pe_sum_term(n: usize, order: usize) -> Result<QSeries> {
    pe_sum_term_z(n, order, false)
}

fn pe_sum_term_with_z(n: usize, order: usize) -> Result<QSeries> {
    pe_sum_term_z(n, order, true)
}

fn p24_sum_term(n: usize, order: usize) -> Result<QSeries> {
    Ok(product(vec![
        q_pow(minus_sign(n), 2 * n, 0, order),
        recip_binomial(1, 4 * n, order)?,
        distinct_odd_factor(n - 1, 0, order)?,
    ])?
    .shift(n - 1, 0))
}

fn ramanujan_sum_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        over_factor(n - 1, order)?,
        geometric_kernel(1, n, order)?.scale(2),
        q_pow(1, n * n - n, 0, order),
        poch_recip_step(PochBase::q(1), 2, n, order)?,
    ])
}

fn ramanujan_second_term(n: usize, order: usize) -> Result<QSeries> {
    product(vec![
        q_pow(1, n * n, 0, order),
        over_factor(n, order)?,
        poch_recip_step(PochBase::q(1), 2, n + 1, order)?,
    ])
}

// ----- whole-series sides -----

fn euler_phi_neg_product(order: usize) -> Result<QSeries> {
    product(vec![
        poch_infinite_step(PochBase::q(1), 1, order)?,
        poch_recip_infinite_step(PochBase::neg_q(1), 1, order)?,
    ])
}

fn psi_product(order: usize) -> Result<QSeries> {
    product(vec![
        poch_infinite_step(PochBase::q(2), 2, order)?,
        poch_recip_infinite_step(PochBase::q(1), 2, order)?,
    ])
}

fn overpartition_product(order: usize) -> Result<QSeries> {
    product(vec![
        poch_infinite_step(PochBase::neg_q(1), 1, order)?,
        poch_recip_infinite_step(PochBase::q(1), 1, order)?,
    ])
}

/// `(q^2;q^2)_inf / (-q z; q^2)_inf`.
fn distinct_even_product(order: usize, z: bool) -> Result<QSeries> {
    product(vec![
        poch_infinite_step(PochBase::q(2), 2, order)?,
        poch_recip_infinite_step(pb(-1, 1, i64::from(z)), 2, order)?,
    ])
}

fn pe_closed_side(order: usize, z: bool) -> Result<QSeries> {
    distinct_even_product(order, z)?.checked_sub(&poch_recip_step(
        pb(-1, 1, i64::from(z)),
        1,
        1,
        order,
    )?)
}

fn ramanujan_product(order: usize) -> Result<QSeries> {
    product(vec![
        poch_infinite_step(PochBase::neg_q(1), 3, order)?,
        poch_infinite_step(PochBase::neg_q(2), 3, order)?,
        poch_recip_infinite_step(PochBase::q(1), 3, order)?,
        poch_recip_infinite_step(PochBase::q(2), 3, order)?,
    ])
}

fn half_theta_plus_one(order: usize) -> QSeries {
    // sum_{n>=0} (-1)^n q^{n^2}
    let mut s = QSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        s = s
            .checked_add(&q_pow(minus_sign(n), n * n, 0, order))
            .expect("same order");
        n += 1;
    }
    s
}

// ----- closed formulas at a norm N >= 1 -----

fn int(v: i64) -> Result<ZLaurent> {
    Ok(ZLaurent::constant(v))
}

fn parity_sign(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn r2_minus_squares(n: u64) -> Result<i64> {
    Ok(r2(n)? as i64 - 2 * i64::from(is_square(n)))
}

/// Weighted count of P_{2,4} at norm `n`, by cases on the square interval.
pub fn p24_closed(n: u64) -> i64 {
    let r = isqrt(n);
    if r * r == n {
        return 0;
    }
    match (r.is_multiple_of(2), n.is_multiple_of(2)) {
        // between the even square r^2 and the odd square (r+1)^2
        (true, false) => 1,
        // between the odd square r^2 and the even square (r+1)^2
        (false, true) => -1,
        _ => 0,
    }
}

/// Weighted count of P_{3,4} at norm `n`, by cases on the square interval.
pub fn p34_closed(n: u64) -> i64 {
    let r = isqrt(n);
    if r * r == n {
        return 0;
    }
    match (r.is_multiple_of(2), n.is_multiple_of(2)) {
        (true, true) => 1,
        (false, false) => -1,
        _ => 0,
    }
}

// ---------------------------------------------------------------------------
// Side constructors

fn sum_side(
    label: &str,
    start: usize,
    bound: fn(usize) -> usize,
    term: fn(usize, usize) -> Result<QSeries>,
) -> Side {
    Side {
        tag: SideTag::AnalyticSum,
        label: label.into(),
        builder: SideBuilder::Sum {
            start,
            bound,
            term: Arc::new(term),
        },
    }
}

fn series_side(
    tag: SideTag,
    label: &str,
    f: impl Fn(usize) -> Result<QSeries> + Send + Sync + 'static,
) -> Side {
    Side {
        tag,
        label: label.into(),
        builder: SideBuilder::Series(Arc::new(f)),
    }
}

fn enum_side(label: &str, set: SetId, weight: Weight, z: ZStat) -> Side {
    Side {
        tag: SideTag::CombinatorialEnum,
        label: label.into(),
        builder: SideBuilder::Norm(Arc::new(move |n| {
            weighted_sum_z(n, set, weight, Filters::default(), z)
        })),
    }
}

fn enum_fn_side(label: &str, f: impl Fn(u32) -> Result<ZLaurent> + Send + Sync + 'static) -> Side {
    Side {
        tag: SideTag::CombinatorialEnum,
        label: label.into(),
        builder: SideBuilder::Norm(Arc::new(f)),
    }
}

fn closed_side(label: &str, f: fn(u64) -> Result<ZLaurent>) -> Side {
    Side {
        tag: SideTag::ClosedFormula,
        label: label.into(),
        builder: SideBuilder::Norm(Arc::new(move |n| f(u64::from(n)))),
    }
}

fn multiset_side(label: &str, f: fn(u32) -> Result<Multiset>) -> Side {
    Side {
        tag: SideTag::CombinatorialEnum,
        label: label.into(),
        builder: SideBuilder::Multiset(Arc::new(f)),
    }
}

fn set_difference(n: u32, plus: SetId, minus: SetId, weight: Weight) -> Result<ZLaurent> {
    let f = Filters::default();
    let v = weighted_sum(n, plus, weight, f)? - weighted_sum(n, minus, weight, f)?;
    Ok(ZLaurent::constant(v))
}

/// Sorted `(n(pi), mu(pi))` over members of R with norm `n`.
pub fn r_multiset(n: u32) -> Result<Vec<(u32, BigInt)>> {
    let mut out = SetId::Rset
        .members(n)
        .iter()
        .map(|p| {
            let nv = r_membership(p).expect("member of R");
            Ok((nv, mu_stat(p, nv)?))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Sorted `(n(pi), eta(pi))` over members of Q with norm `n`.
pub fn q_multiset(n: u32) -> Result<Vec<(u32, BigInt)>> {
    let mut out = SetId::Qset
        .members(n)
        .iter()
        .map(|p| {
            let nv = q_membership(p).expect("member of Q");
            Ok((nv, eta_stat(p, nv)?))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn linear(n: usize) -> usize {
    n
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

fn triangular_next(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

fn square(n: usize) -> usize {
    n * n
}

fn three_n_minus_one(n: usize) -> usize {
    3 * n - 1
}

/// The complete identity registry, in a fixed order. Ids are stable.
pub fn registry() -> Vec<IdentityEntry> {
    use SideTag::*;
    let u_ceiling = 40;
    let o_ceiling = 40;
    let p_ceiling = 40;
    vec![
        IdentityEntry {
            id: "thm-1.1",
            description: "Alladi's two-parameter generating function at b = 2, a = z: \
                          overpartitions counted by number of parts",
            statement: "(-zq;q)_inf/(zq;q)_inf - 1 = sum_{pi in U} z^nu(pi) 2^nu_d(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ProductForm, "(-zq;q)_inf/(zq;q)_inf - 1", |order| {
                    ones_minus(product(vec![
                        poch_infinite_step(pb(-1, 1, 1), 1, order)?,
                        poch_recip_infinite_step(pb(1, 1, 1), 1, order)?,
                    ])?)
                }),
                enum_side("sum_U z^nu 2^nu_d", SetId::U, Weight::TwoPowNuD, ZStat::Nu),
            ],
            max_enum_norm: u_ceiling,
        },
        IdentityEntry {
            id: "eq-1.2",
            description: "overpartitions into parts <= 4 against 2^nu_d over partitions into parts <= 4",
            statement: "(-q;q)_4/(q;q)_4 - 1 = sum_{pi in U_4} 2^nu_d(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ProductForm, "(-q;q)_4/(q;q)_4 - 1", |order| {
                    ones_minus(over_factor(4, order)?)
                }),
                enum_fn_side("sum_{U_4} 2^nu_d", |n| {
                    let f = Filters {
                        max_part: Some(4),
                        ..Filters::default()
                    };
                    Ok(weighted_sum(n, SetId::U, Weight::TwoPowNuD, f)?.into())
                }),
            ],
            max_enum_norm: u_ceiling,
        },
        IdentityEntry {
            id: "eq-1.3",
            description: "number of overpartitions equals 2^nu_d summed over partitions",
            statement: "sum_{pi in O} q^|pi| = sum_{pi in U} 2^nu_d(pi) q^|pi| = (-q;q)_inf/(q;q)_inf - 1",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_O 1", SetId::O, Weight::Unit, ZStat::None),
                enum_side("sum_U 2^nu_d", SetId::U, Weight::TwoPowNuD, ZStat::None),
                series_side(ProductForm, "(-q;q)_inf/(q;q)_inf - 1", |order| {
                    ones_minus(overpartition_product(order)?)
                }),
            ],
            max_enum_norm: o_ceiling,
        },
        IdentityEntry {
            id: "gauss-phi",
            description: "Gauss product for phi(-q)",
            statement: "phi(-q) = (q;q)_inf/(-q;q)_inf",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ClosedFormula, "phi(-q)", |order| Ok(theta_phi(-1, order))),
                series_side(ProductForm, "(q;q)_inf/(-q;q)_inf", euler_phi_neg_product),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "gauss-psi",
            description: "Gauss product for psi(q)",
            statement: "psi(q) = (q^2;q^2)_inf/(q;q^2)_inf",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ClosedFormula, "psi(q)", |order| Ok(theta_psi(1, order))),
                series_side(ProductForm, "(q^2;q^2)_inf/(q;q^2)_inf", psi_product),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "thm-3.1",
            description: "partitions signed by the parity of the smallest part against the t-weight on U*",
            statement: "sum_{pi in U} (-1)^{s(pi)+1} q^|pi| = sum_{pi in U*} t(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_U (-1)^{s+1}", SetId::U, Weight::SmallestSign, ZStat::None),
                enum_side("sum_U* t", SetId::Ustar, Weight::T, ZStat::None),
                sum_side("sum q^n/(1+q^n)/(q;q)_{n-1}", 1, linear, s_sign_sum_term),
            ],
            max_enum_norm: u_ceiling,
        },
        IdentityEntry {
            id: "thm-3.2",
            description: "analytic form of the smallest-part sign identity for ordinary partitions",
            statement: "sum_{n>=1} q^n/(1+q^n) 1/(q;q)_{n-1} \
                        = sum_{n>=1} q^{n(n+1)/2}/((q^2;q^2)_n (q^{n+1};q)_inf)",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum q^n/(1+q^n)/(q;q)_{n-1}", 1, linear, s_sign_sum_term),
                sum_side(
                    "sum q^{n(n+1)/2}/((q^2;q^2)_n (q^{n+1};q)_inf)",
                    1,
                    triangular,
                    t_weight_sum_term,
                ),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "thm-3.3",
            description: "analytic form of the smallest-part sign identity for overpartitions",
            statement: "sum_{n>=1} 2q^n/(1+q^n) (-q;q)_{n-1}/(q;q)_{n-1} \
                        = sum_{n>=0} q^{n(n+1)/2}/(q;q)_n 2q^{n+1}/(1-q^{2n+2}) \
                        (-q^{n+2};q)_inf/(q^{n+2};q)_inf",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum 2q^n/(1+q^n) (-q;q)_{n-1}/(q;q)_{n-1}", 1, linear, over_s_sign_sum_term),
                sum_side("sum over n>=0 of the tau-weight summand", 0, triangular_next, tau_sum_term),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "thm-3.4",
            description: "overpartitions signed by the smallest part against the tau-weight on U",
            statement: "sum_{pi in O} (-1)^{s(pi)+1} q^|pi| = sum_{pi in U} tau(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_O (-1)^{s+1}", SetId::O, Weight::SmallestSign, ZStat::None),
                enum_side("sum_U tau", SetId::U, Weight::Tau, ZStat::None),
                sum_side("sum 2q^n/(1+q^n) (-q;q)_{n-1}/(q;q)_{n-1}", 1, linear, over_s_sign_sum_term),
            ],
            max_enum_norm: o_ceiling,
        },
        IdentityEntry {
            id: "lem-4.1",
            description: "special case of a Ramanujan identity, via the q-Gauss sum",
            statement: "sum_{n>=1} (-1)^n q^{n(n+1)/2}/((1+q^n)(q;q)_n) = sum_{n>=1} (-1)^n q^{n^2}",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum (-1)^n q^{n(n+1)/2}/((1+q^n)(q;q)_n)", 1, triangular, alladi_sum_term),
                sum_side("sum (-1)^n q^{n^2}", 1, square, signed_square_term),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "thm-4.2",
            description: "Alladi: distinct parts with odd smallest part, signed by number of parts",
            statement: "sum_{pi in D_o, |pi|=N} (-1)^nu(pi) = (-1)^N chi(N = square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_D_o (-1)^nu", SetId::Do, Weight::NuSign, ZStat::None),
                closed_side("(-1)^N chi(N = square)", |n| {
                    int(parity_sign(n) * i64::from(is_square(n)))
                }),
                sum_side("sum (-1)^n q^{n(n+1)/2}/((1+q^n)(q;q)_n)", 1, triangular, alladi_sum_term),
            ],
            max_enum_norm: 100,
        },
        IdentityEntry {
            id: "thm-4.3",
            description: "Bessenrodt-Pak: D_o signed by number of even parts",
            statement: "sum_{pi in D_o, |pi|=N} (-1)^nu_e(pi) = chi(N = square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_D_o (-1)^nu_e", SetId::Do, Weight::NuESign, ZStat::None),
                closed_side("chi(N = square)", |n| int(i64::from(is_square(n)))),
            ],
            max_enum_norm: 100,
        },
        IdentityEntry {
            id: "thm-4.4",
            description: "Bessenrodt-Pak refinement by the number of odd parts (z marks nu_o)",
            statement: "sum_{pi in D_o, |pi|=N, nu_o(pi)=k} (-1)^nu_e(pi) = chi(N = k^2)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_D_o (-1)^nu_e z^nu_o", SetId::Do, Weight::NuESign, ZStat::NuO),
                closed_side("z^k if N = k^2", |n| {
                    let k = isqrt(n);
                    Ok(if k * k == n {
                        ZLaurent::monomial(1, k as i64)
                    } else {
                        ZLaurent::zero()
                    })
                }),
            ],
            max_enum_norm: 100,
        },
        IdentityEntry {
            id: "thm-4.5",
            description: "overpartition sum signed by smallest part and number of parts, against theta",
            statement: "sum_{n>=1} (-1)^n 2q^n/(1+q^n) (-q;q)_{n-1}/(q;q)_{n-1} = phi(-q)^2 - phi(-q) \
                        = sum_U omega(pi) q^|pi| = sum_N (-1)^N (r2(N) - 2 chi(N = square)) q^N",
            kind: Kind::Theorem,
            sides: vec![
                sum_side(
                    "sum (-1)^n 2q^n/(1+q^n) (-q;q)_{n-1}/(q;q)_{n-1}",
                    1,
                    linear,
                    two_squares_sum_term,
                ),
                series_side(ProductForm, "phi(-q)^2 - phi(-q)", |order| {
                    let phi = theta_phi(-1, order);
                    phi.checked_mul(&phi)?.checked_sub(&phi)
                }),
                enum_side("sum_U omega", SetId::U, Weight::Omega, ZStat::None),
                closed_side("(-1)^N (r2(N) - 2 chi(N = square))", |n| {
                    int(parity_sign(n) * r2_minus_squares(n)?)
                }),
            ],
            max_enum_norm: u_ceiling,
        },
        IdentityEntry {
            id: "thm-4.6",
            description: "omega* weight on partitions counts sums of two squares",
            statement: "sum_{pi in U, |pi|=N} omega*(pi) = r2(N) - 2 chi(N = square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_U omega*", SetId::U, Weight::OmegaStar, ZStat::None),
                closed_side("r2(N) - 2 chi(N = square)", |n| int(r2_minus_squares(n)?)),
                series_side(ProductForm, "phi(q)^2 - phi(q)", |order| {
                    let phi = theta_phi(1, order);
                    phi.checked_mul(&phi)?.checked_sub(&phi)
                }),
            ],
            max_enum_norm: u_ceiling,
        },
        IdentityEntry {
            id: "thm-4.7",
            description: "overpartitions signed by smallest part and even parts count sums of two squares",
            statement: "sum_{pi in O, |pi|=N} (-1)^{s(pi)+nu_e(pi)+1} = r2(N) - 2 chi(N = square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_O (-1)^{s+nu_e+1}", SetId::O, Weight::SmallestNuESign, ZStat::None),
                closed_side("r2(N) - 2 chi(N = square)", |n| int(r2_minus_squares(n)?)),
            ],
            max_enum_norm: o_ceiling,
        },
        IdentityEntry {
            id: "thm-5.1",
            description: "distinct-even-parts sum with even smallest part, against psi(-q)",
            statement: "sum_{n>=1} (-1)^n q^{2n}/(1-q^{2n}) (-q;q^2)_{n-1}/(q^2;q^2)_{n-1} q^{n-1} \
                        = psi(-q) - 1/(1+q) = sum_{pi in P_e} (-1)^nu(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum (-1)^n q^{2n}/(1-q^{2n}) (-q;q^2)_{n-1}/(q^2;q^2)_{n-1} q^{n-1}", 1, three_n_minus_one, pe_sum_term),
                series_side(ClosedFormula, "psi(-q) - 1/(1+q)", |order| {
                    theta_psi(-1, order).checked_sub(&recip_binomial(-1, 1, order)?)
                }),
                enum_side("sum_P_e (-1)^nu", SetId::Pe, Weight::NuSign, ZStat::None),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "eq-5.4",
            description: "P_e signed by number of parts misses exactly the triangular numbers",
            statement: "sum_{pi in P_e, |pi|=N} (-1)^nu(pi) = (-1)^{N+1} chi(N != triangular)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_e (-1)^nu", SetId::Pe, Weight::NuSign, ZStat::None),
                closed_side("(-1)^{N+1} chi(N != triangular)", |n| {
                    int(-parity_sign(n) * i64::from(!is_triangular(n)))
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.2-refined",
            description: "P_e signed by number of even parts",
            statement: "sum_{pi in P_e, |pi|=N} (-1)^{nu_e(pi)+1} = chi(N != triangular)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_e (-1)^{nu_e+1}", SetId::Pe, Weight::NuESignNeg, ZStat::None),
                closed_side("chi(N != triangular)", |n| int(i64::from(!is_triangular(n)))),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "p-signed",
            description: "all partitions with distinct even parts, signed by number of parts",
            statement: "sum_{pi in P} (-1)^nu(pi) q^|pi| = (q^2;q^2)_inf/(-q;q^2)_inf - 1 = psi(-q) - 1",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P (-1)^nu", SetId::P, Weight::NuSign, ZStat::None),
                series_side(ProductForm, "(q^2;q^2)_inf/(-q;q^2)_inf - 1", |order| {
                    ones_minus(distinct_even_product(order, false)?)
                }),
                series_side(ClosedFormula, "psi(-q) - 1", |order| ones_minus(theta_psi(-1, order))),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "po-signed",
            description: "distinct even parts with odd smallest part, signed by number of parts",
            statement: "sum_{pi in P_o} (-1)^nu(pi) q^|pi| = 1/(1+q) - 1",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_o (-1)^nu", SetId::Po, Weight::NuSign, ZStat::None),
                series_side(ClosedFormula, "1/(1+q) - 1", |order| {
                    ones_minus(recip_binomial(-1, 1, order)?)
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "eq-5.6",
            description: "z-refinement of the distinct-even-parts analytic identity",
            statement: "sum_{n>=1} (-1)^n q^{2n}/(1-q^{2n}) (-q/z;q^2)_{n-1}/(q^2;q^2)_{n-1} (zq)^{n-1} \
                        = (q^2;q^2)_inf/(-qz;q^2)_inf - 1/(1+zq)",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum with (-q/z;q^2)_{n-1} (zq)^{n-1}", 1, three_n_minus_one, pe_sum_term_with_z),
                series_side(ProductForm, "(q^2;q^2)_inf/(-qz;q^2)_inf - 1/(1+zq)", |order| {
                    pe_closed_side(order, true)
                }),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "eq-5.7",
            description: "P_e signed by number of parts, z marking odd parts",
            statement: "sum_{pi in P_e} (-1)^nu(pi) z^nu_o(pi) q^|pi| = (q^2;q^2)_inf/(-qz;q^2)_inf - 1/(1+zq)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_e (-1)^nu z^nu_o", SetId::Pe, Weight::NuSign, ZStat::NuO),
                series_side(ProductForm, "(q^2;q^2)_inf/(-qz;q^2)_inf - 1/(1+zq)", |order| {
                    pe_closed_side(order, true)
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "eq-5.8",
            description: "P signed by number of parts, z marking odd parts",
            statement: "sum_{pi in P} (-1)^nu(pi) z^nu_o(pi) q^|pi| = (q^2;q^2)_inf/(-qz;q^2)_inf - 1",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P (-1)^nu z^nu_o", SetId::P, Weight::NuSign, ZStat::NuO),
                series_side(ProductForm, "(q^2;q^2)_inf/(-qz;q^2)_inf - 1", |order| {
                    ones_minus(distinct_even_product(order, true)?)
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.3",
            description: "P_o signed by even parts, refined by the number of odd parts",
            statement: "sum_{pi in P_o} (-1)^nu_e(pi) z^nu_o(pi) q^|pi| = 1/(1-zq) - 1, \
                        i.e. sum_{P_o, |pi|=N, nu_o=k} (-1)^nu_e = chi(N = k)",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_o (-1)^nu_e z^nu_o", SetId::Po, Weight::NuESign, ZStat::NuO),
                closed_side("z^N", |n| Ok(ZLaurent::monomial(1, n as i64))),
                series_side(ProductForm, "1/(1-zq) - 1", |order| {
                    ones_minus(poch_recip_step(pb(1, 1, 1), 1, 1, order)?)
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.4-analytic",
            description: "distinct-even-parts sum with smallest part 2 mod 4, against a theta quotient",
            statement: "sum_{n>=1} (-1)^n q^{2n}/(1-q^{4n}) (-q;q^2)_{n-1}/(q^2;q^2)_{n-1} q^{n-1} \
                        = 1/(1-q) sum_{n>=0} (-1)^n q^{n^2} - 1/(1-q^2)",
            kind: Kind::Theorem,
            sides: vec![
                sum_side("sum (-1)^n q^{2n}/(1-q^{4n}) (-q;q^2)_{n-1}/(q^2;q^2)_{n-1} q^{n-1}", 1, three_n_minus_one, p24_sum_term),
                series_side(ClosedFormula, "1/(1-q) sum (-1)^n q^{n^2} - 1/(1-q^2)", |order| {
                    product(vec![recip_binomial(1, 1, order)?, half_theta_plus_one(order)])?
                        .checked_sub(&recip_binomial(1, 2, order)?)
                }),
                enum_side("sum_P_{2,4} (-1)^nu", SetId::P24, Weight::NuSign, ZStat::None),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.5",
            description: "P_{2,4} signed by number of parts: +1 for odd N after an even square, \
                          -1 for even N after an odd square",
            statement: "sum_{pi in P_{2,4}, |pi|=N} (-1)^nu(pi) = sum_j [N odd][(2j)^2 < N < (2j+1)^2] \
                        - [N even][(2j-1)^2 < N < (2j)^2]",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_{2,4} (-1)^nu", SetId::P24, Weight::NuSign, ZStat::None),
                closed_side("square-interval cases", |n| int(p24_closed(n))),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.6",
            description: "P_{3,4} signed by number of parts: +1 for even N after an even square, \
                          -1 for odd N after an odd square",
            statement: "sum_{pi in P_{3,4}, |pi|=N} (-1)^nu(pi) = sum_j [N even][(2j)^2 < N < (2j+1)^2] \
                        - [N odd][(2j-1)^2 < N < (2j)^2]",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_P_{3,4} (-1)^nu", SetId::P34, Weight::NuSign, ZStat::None),
                closed_side("square-interval cases", |n| int(p34_closed(n))),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.7",
            description: "difference of the P_{3,4} and P_{2,4} counts signed by number of parts",
            statement: "sum_{P_{3,4}} (-1)^nu - sum_{P_{2,4}} (-1)^nu = (-1)^N chi(N != square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_fn_side("sum_P_{3,4} (-1)^nu - sum_P_{2,4} (-1)^nu", |n| {
                    set_difference(n, SetId::P34, SetId::P24, Weight::NuSign)
                }),
                closed_side("(-1)^N chi(N != square)", |n| {
                    int(parity_sign(n) * i64::from(!is_square(n)))
                }),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "thm-5.8",
            description: "difference of the P_{3,4} and P_{2,4} counts signed by number of even parts",
            statement: "sum_{P_{3,4}} (-1)^nu_e - sum_{P_{2,4}} (-1)^nu_e = chi(N != square)",
            kind: Kind::Theorem,
            sides: vec![
                enum_fn_side("sum_P_{3,4} (-1)^nu_e - sum_P_{2,4} (-1)^nu_e", |n| {
                    set_difference(n, SetId::P34, SetId::P24, Weight::NuESign)
                }),
                closed_side("chi(N != square)", |n| int(i64::from(!is_square(n)))),
            ],
            max_enum_norm: p_ceiling,
        },
        IdentityEntry {
            id: "rama-6.1",
            description: "Ramanujan: overpartitions with no part divisible by 3",
            statement: "(-q;q^3)_inf(-q^2;q^3)_inf/((q;q^3)_inf(q^2;q^3)_inf) - 1 \
                        = sum_{n>=1} (-q;q)_{n-1}/(q;q)_{n-1} 2q^n/(1-q^n) q^{n^2-n}/(q;q^2)_n",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ProductForm, "(-q,-q^2;q^3)_inf/(q,q^2;q^3)_inf - 1", |order| {
                    ones_minus(ramanujan_product(order)?)
                }),
                sum_side("sum (-q;q)_{n-1}/(q;q)_{n-1} 2q^n/(1-q^n) q^{n^2-n}/(q;q^2)_n", 1, square, ramanujan_sum_term),
                enum_side("sum_C~ 2^nu_d", SetId::Ctilde, Weight::TwoPowNuD, ZStat::None),
            ],
            max_enum_norm: 40,
        },
        IdentityEntry {
            id: "thm-6.2",
            description: "2^nu_d over partitions without multiples of 3 against the mu-weight on R",
            statement: "sum_{pi in C~} 2^nu_d(pi) q^|pi| = sum_{pi in R} mu(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_C~ 2^nu_d", SetId::Ctilde, Weight::TwoPowNuD, ZStat::None),
                enum_side("sum_R mu", SetId::Rset, Weight::Mu, ZStat::None),
                series_side(ProductForm, "(-q,-q^2;q^3)_inf/(q,q^2;q^3)_inf - 1", |order| {
                    ones_minus(ramanujan_product(order)?)
                }),
            ],
            max_enum_norm: 40,
        },
        IdentityEntry {
            id: "thm-6.3",
            description: "2^nu_d over partitions without multiples of 3 against the eta-weight on Q",
            statement: "sum_{pi in C~} 2^nu_d(pi) q^|pi| = sum_{pi in Q} eta(pi) q^|pi|",
            kind: Kind::Theorem,
            sides: vec![
                enum_side("sum_C~ 2^nu_d", SetId::Ctilde, Weight::TwoPowNuD, ZStat::None),
                enum_side("sum_Q eta", SetId::Qset, Weight::Eta, ZStat::None),
                sum_side("sum_{n>=0} q^{n^2}(-q;q)_n/((q;q)_n (q;q^2)_{n+1})", 0, square, ramanujan_second_term),
            ],
            max_enum_norm: 40,
        },
        IdentityEntry {
            id: "rama-6.8",
            description: "Ramanujan: the same product as a sum over q^{n^2}",
            statement: "(-q;q^3)_inf(-q^2;q^3)_inf/((q;q^3)_inf(q^2;q^3)_inf) \
                        = sum_{n>=0} q^{n^2}(-q;q)_n/((q;q)_n (q;q^2)_{n+1})",
            kind: Kind::Theorem,
            sides: vec![
                series_side(ProductForm, "(-q,-q^2;q^3)_inf/(q,q^2;q^3)_inf", ramanujan_product),
                sum_side("sum_{n>=0} q^{n^2}(-q;q)_n/((q;q)_n (q;q^2)_{n+1})", 0, square, ramanujan_second_term),
            ],
            max_enum_norm: 0,
        },
        IdentityEntry {
            id: "rq-bijection",
            description: "observed: a norm-, n- and weight-preserving bijection R -> Q; \
                          checked as equality of (n, weight) multisets",
            statement: "multiset {(n(pi), mu(pi)) : pi in R, |pi|=N} = multiset {(n(pi), eta(pi)) : pi in Q, |pi|=N}",
            kind: Kind::Conjecture,
            sides: vec![
                multiset_side("{(n, mu)} over R", r_multiset),
                multiset_side("{(n, eta)} over Q", q_multiset),
            ],
            max_enum_norm: 40,
        },
    ]
}
