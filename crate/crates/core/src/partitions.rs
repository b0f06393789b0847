//! Partitions, overpartitions, the partition sets that appear in the identity
//! registry, and every weight statistic defined on them.
//!
//! Enumeration is exhaustive and deterministic: partitions of `N` come out in
//! reverse lexicographic order, `(N), (N-1, 1), (N-2, 2), (N-2, 1, 1), ...`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::qseries::ZLaurent;

/// A partition stored as its parts in nonincreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parts in any order; zero parts are rejected.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return domain("partition parts must be positive");
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// From `(size, frequency)` pairs, e.g. `[(1, 3), (2, 1), (3, 1)]` for `(1^3, 2, 3)`.
    pub fn from_freq(freq: &[(u32, u32)]) -> Result<Self> {
        let parts = freq
            .iter()
            .flat_map(|&(size, f)| std::iter::repeat_n(size, f as usize))
            .collect();
        Self::from_parts(parts)
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn norm(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Frequency `f_i` of the part size `i`.
    pub fn freq(&self, i: u32) -> u32 {
        // parts are sorted descending; count the run equal to i
        let start = self.parts.partition_point(|&p| p > i);
        let end = self.parts.partition_point(|&p| p >= i);
        (end - start) as u32
    }

    /// Frequencies indexed by part size, `0..=largest`.
    pub fn freq_table(&self) -> Vec<u32> {
        let mut f = vec![0u32; self.largest().unwrap_or(0) as usize + 1];
        for &p in &self.parts {
            f[p as usize] += 1;
        }
        f
    }

    /// Distinct part sizes in decreasing order.
    pub fn distinct_sizes(&self) -> Vec<u32> {
        let mut sizes = self.parts.clone();
        sizes.dedup();
        sizes
    }

    /// The partition whose Ferrers diagram is the transpose of this one.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest().unwrap_or(0);
        let parts = (1..=largest)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    /// Frequency notation with increasing sizes: `(1^3,2,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_freq_notation(f, &self.parts, &BTreeSet::new())
    }
}

fn write_freq_notation(
    f: &mut fmt::Formatter<'_>,
    parts: &[u32],
    overlined: &BTreeSet<u32>,
) -> fmt::Result {
    write!(f, "(")?;
    let mut first = true;
    let mut i = parts.len();
    while i > 0 {
        let size = parts[i - 1];
        let mut j = i;
        while j > 0 && parts[j - 1] == size {
            j -= 1;
        }
        let count = i - j;
        if !first {
            write!(f, ",")?;
        }
        first = false;
        write!(f, "{size}")?;
        if overlined.contains(&size) {
            write!(f, "\u{0304}")?;
        }
        if count > 1 {
            write!(f, "^{count}")?;
        }
        i = j;
    }
    write!(f, ")")
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(10,9,5,5)`, `(1^3,2,3)` or `()`; sizes may appear in any order.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected a parenthesised partition: {s}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut freq = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let (size, count) = match tok.split_once('^') {
                Some((a, b)) => (a, b),
                None => (tok, "1"),
            };
            let size: u32 = size
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part `{tok}`")))?;
            let count: u32 = count
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad frequency `{tok}`")))?;
            freq.push((size, count));
        }
        Partition::from_freq(&freq).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A partition in which one occurrence of any part size may be overlined.
///
/// Overlines are kept as a set of sizes; which occurrence carries the mark
/// does not affect any statistic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    base: Partition,
    overlined: BTreeSet<u32>,
}

impl Overpartition {
    pub fn new(base: Partition, overlined: BTreeSet<u32>) -> Result<Self> {
        if let Some(bad) = overlined.iter().find(|&&s| base.freq(s) == 0) {
            return domain(format!("overlined size {bad} is not a part"));
        }
        Ok(Overpartition { base, overlined })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn overlined(&self) -> &BTreeSet<u32> {
        &self.overlined
    }

    pub fn norm(&self) -> u64 {
        self.base.norm()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_freq_notation(f, self.base.parts(), &self.overlined)
    }
}

/// Lazy iterator over the partitions of `n` in reverse lexicographic order.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let k = parts.iter().rposition(|&p| p > 1)?;
    let x = parts[k] - 1;
    let mut rest = (parts.len() - k - 1) as u32 + 1;
    let mut out = parts[..k].to_vec();
    out.push(x);
    while rest > 0 {
        let p = rest.min(x);
        out.push(p);
        rest -= p;
    }
    Some(out)
}

/// Every partition of `n` exactly once; `n = 0` yields the empty partition.
pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Every overpartition of `n`: each partition with each subset of its
/// distinct sizes overlined.
pub fn enumerate_overpartitions(n: u32) -> impl Iterator<Item = Overpartition> {
    enumerate_partitions(n).flat_map(overpartitions_of)
}

/// The `2^{nu_d}` overpartitions sharing the base partition `p`.
pub fn overpartitions_of(p: Partition) -> impl Iterator<Item = Overpartition> {
    let sizes = p.distinct_sizes();
    (0u64..1 << sizes.len()).map(move |mask| {
        let overlined = sizes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        Overpartition {
            base: p.clone(),
            overlined,
        }
    })
}

/// Calls `visit` on each partition of `n` whose parts are at most `max_part`
/// and whose multiplicities respect `max_mult(size)`, in reverse
/// lexicographic order.
pub fn for_each_restricted<M, F>(n: u32, max_part: u32, max_mult: M, mut visit: F)
where
    M: Fn(u32) -> u32,
    F: FnMut(&[u32]),
{
    let mut buf = Vec::new();
    restricted_rec(n, max_part.min(n), &max_mult, &mut buf, &mut visit);
}

fn restricted_rec<M, F>(rem: u32, max_part: u32, max_mult: &M, buf: &mut Vec<u32>, visit: &mut F)
where
    M: Fn(u32) -> u32,
    F: FnMut(&[u32]),
{
    if rem == 0 {
        visit(buf);
        return;
    }
    for p in (1..=max_part.min(rem)).rev() {
        let m_max = max_mult(p).min(rem / p);
        for m in (1..=m_max).rev() {
            let len = buf.len();
            buf.extend(std::iter::repeat_n(p, m as usize));
            restricted_rec(rem - m * p, p - 1, max_mult, buf, visit);
            buf.truncate(len);
        }
    }
}

/// The basic statistics of a non-empty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicStats {
    pub norm: u64,
    /// Smallest part.
    pub s: u32,
    /// Number of parts.
    pub nu: u32,
    pub nu_e: u32,
    pub nu_o: u32,
    /// Number of distinct part sizes.
    pub nu_d: u32,
}

pub fn stat_basic(p: &Partition) -> Result<BasicStats> {
    let s = p
        .smallest()
        .ok_or_else(|| Error::Domain("empty partition".into()))?;
    let nu_e = p.parts.iter().filter(|&&x| x % 2 == 0).count() as u32;
    let nu = p.len() as u32;
    Ok(BasicStats {
        norm: p.norm(),
        s,
        nu,
        nu_e,
        nu_o: nu - nu_e,
        nu_d: p.distinct_sizes().len() as u32,
    })
}

/// Length of the initial run `1, 2, ..., t` of sizes with odd frequency.
pub fn t_stat(p: &Partition) -> u32 {
    let mut t = 0;
    while p.freq(t + 1) % 2 == 1 {
        t += 1;
    }
    t
}

/// Smallest positive integer that is not a part.
pub fn m_of(p: &Partition) -> u32 {
    let mut m = 1;
    while p.freq(m) > 0 {
        m += 1;
    }
    m
}

/// Number of distinct part sizes `>= n`.
pub fn nu_d_ge(p: &Partition, n: u32) -> u32 {
    p.distinct_sizes().iter().filter(|&&s| s >= n).count() as u32
}

/// `sum_{i=1}^{m} [f_i odd] * 2^{nu_d(p, i)}` with `m` the least non-part.
pub fn tau_stat(p: &Partition) -> BigInt {
    let mut total = BigInt::zero();
    for i in 1..=m_of(p) {
        if p.freq(i) % 2 == 1 {
            total += BigInt::one() << nu_d_ge(p, i);
        }
    }
    total
}

fn sign(exp: u64) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(-1)^{s + nu_e + 1} 2^{nu_d}`.
pub fn omega_star(p: &Partition) -> Result<BigInt> {
    let st = stat_basic(p)?;
    Ok(sign(u64::from(st.s + st.nu_e + 1)) << st.nu_d)
}

/// `(-1)^{s + nu + 1} 2^{nu_d}`.
pub fn omega(p: &Partition) -> Result<BigInt> {
    let st = stat_basic(p)?;
    Ok(sign(u64::from(st.s + st.nu + 1)) << st.nu_d)
}

/// The `n`-value of `p` if it belongs to the set R.
///
/// With `n = (largest even part)/2 + 1` (`n = 1` without even parts), R asks
/// for all parts `<= 2n-1`, every even number `<= 2n-2` present,
/// `f_n >= 1 + [n even]`, and no even part `> n` repeated.
pub fn r_membership(p: &Partition) -> Option<u32> {
    if p.is_empty() {
        return None;
    }
    let largest_even = p.parts.iter().copied().find(|x| x % 2 == 0).unwrap_or(0);
    let n = largest_even / 2 + 1;
    let ok = p.largest()? < 2 * n
        && (1..n).all(|j| p.freq(2 * j) >= 1)
        && p.freq(n) > u32::from(n % 2 == 0)
        && p.distinct_sizes()
            .iter()
            .all(|&s| s % 2 == 1 || s <= n || p.freq(s) == 1);
    ok.then_some(n)
}

/// The `n`-value of `p` if it belongs to the set Q.
///
/// Q asks for largest part `2n-1`, every odd number `<= 2n-1` present, and no
/// even part `> n`.
pub fn q_membership(p: &Partition) -> Option<u32> {
    let largest = p.largest()?;
    if largest % 2 == 0 {
        return None;
    }
    let n = largest.div_ceil(2);
    let ok =
        (1..=n).all(|j| p.freq(2 * j - 1) >= 1) && p.parts.iter().all(|&x| x % 2 == 1 || x <= n);
    ok.then_some(n)
}

/// `mu = 2^delta * gamma` on a member of R with the given `n`-value.
pub fn mu_stat(p: &Partition, n: u32) -> Result<BigInt> {
    match r_membership(p) {
        Some(m) if m == n => {}
        _ => return domain(format!("{p} is not a member of R with n = {n}")),
    }
    let delta = (1..n).filter(|&j| p.freq(2 * j) > 1).count() as u32;
    let f_n = BigInt::from(p.freq(n));
    let mut gamma = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        f_n * 2
    };
    for odd in (1..n).step_by(2) {
        gamma *= 2 * p.freq(odd) + 1;
    }
    Ok(gamma << delta)
}

/// `eta = 2^{nu_{d,e}} * (...) * prod (2 f_{2j+1} - 1)` on a member of Q.
pub fn eta_stat(p: &Partition, n: u32) -> Result<BigInt> {
    match q_membership(p) {
        Some(m) if m == n => {}
        _ => return domain(format!("{p} is not a member of Q with n = {n}")),
    }
    let distinct_even = p.distinct_sizes().iter().filter(|&&s| s % 2 == 0).count() as u32;
    let f_n = p.freq(n);
    let mut value = if n.is_multiple_of(2) {
        BigInt::from(1 + u32::from(f_n == 0))
    } else {
        BigInt::from(2 * f_n)
    };
    for odd in (1..n).step_by(2) {
        value *= 2 * i64::from(p.freq(odd)) - 1;
    }
    Ok(value << distinct_even)
}

/// The named partition sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetId {
    /// All non-empty partitions.
    U,
    /// Partitions with `f_1` odd.
    Ustar,
    /// All non-empty overpartitions.
    O,
    /// Distinct parts, smallest part odd.
    Do,
    /// Distinct even parts (odd parts may repeat).
    P,
    /// P with even smallest part.
    Pe,
    /// P with odd smallest part.
    Po,
    /// P with smallest part `2 mod 4`.
    P24,
    /// P with smallest part `3 mod 4`.
    P34,
    /// No part divisible by 3.
    Ctilde,
    Rset,
    Qset,
}

impl SetId {
    pub const ALL: [SetId; 12] = [
        SetId::U,
        SetId::Ustar,
        SetId::O,
        SetId::Do,
        SetId::P,
        SetId::Pe,
        SetId::Po,
        SetId::P24,
        SetId::P34,
        SetId::Ctilde,
        SetId::Rset,
        SetId::Qset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetId::U => "U",
            SetId::Ustar => "U*",
            SetId::O => "O",
            SetId::Do => "D_o",
            SetId::P => "P",
            SetId::Pe => "P_e",
            SetId::Po => "P_o",
            SetId::P24 => "P_{2,4}",
            SetId::P34 => "P_{3,4}",
            SetId::Ctilde => "C~",
            SetId::Rset => "R",
            SetId::Qset => "Q",
        }
    }

    /// Membership of a partition. For `O` this tests the base partition.
    pub fn contains(self, p: &Partition) -> bool {
        let Some(s) = p.smallest() else {
            return false;
        };
        let distinct_evens = || p.parts.windows(2).all(|w| w[0] % 2 == 1 || w[0] != w[1]);
        match self {
            SetId::U | SetId::O => true,
            SetId::Ustar => p.freq(1) % 2 == 1,
            SetId::Do => s % 2 == 1 && p.parts.windows(2).all(|w| w[0] != w[1]),
            SetId::P => distinct_evens(),
            SetId::Pe => s % 2 == 0 && distinct_evens(),
            SetId::Po => s % 2 == 1 && distinct_evens(),
            SetId::P24 => s % 4 == 2 && distinct_evens(),
            SetId::P34 => s % 4 == 3 && distinct_evens(),
            SetId::Ctilde => p.parts.iter().all(|x| x % 3 != 0),
            SetId::Rset => r_membership(p).is_some(),
            SetId::Qset => q_membership(p).is_some(),
        }
    }

    /// Largest multiplicity any member can have for the given size; used to
    /// prune enumeration before the membership test.
    fn multiplicity_cap(self, size: u32) -> u32 {
        match self {
            SetId::Do => 1,
            SetId::P | SetId::Pe | SetId::Po | SetId::P24 | SetId::P34
                if size.is_multiple_of(2) =>
            {
                1
            }
            SetId::Ctilde if size.is_multiple_of(3) => 0,
            _ => u32::MAX,
        }
    }

    /// All partition members of norm `n` in reverse lexicographic order (base
    /// partitions for `O`).
    pub fn members(self, n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        self.for_each_member(n, None, |p| out.push(Partition::from_sorted(p.to_vec())));
        out
    }

    fn for_each_member<F: FnMut(&[u32])>(self, n: u32, max_part: Option<u32>, mut f: F) {
        if n == 0 {
            return;
        }
        let tmp_check = |parts: &[u32]| {
            let p = Partition {
                parts: parts.to_vec(),
            };
            self.contains(&p)
        };
        for_each_restricted(
            n,
            max_part.unwrap_or(n),
            |s| self.multiplicity_cap(s),
            |parts| {
                if tmp_check(parts) {
                    f(parts)
                }
            },
        );
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The closed list of weight functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    /// 1
    Unit,
    /// `(-1)^{s+1}`
    SmallestSign,
    /// `t(pi)`
    T,
    /// `tau(pi)`
    Tau,
    /// `2^{nu_d}`
    TwoPowNuD,
    /// `(-1)^{s+nu_e+1} 2^{nu_d}`
    OmegaStar,
    /// `(-1)^{s+nu+1} 2^{nu_d}`
    Omega,
    /// `(-1)^{nu}`
    NuSign,
    /// `(-1)^{nu_e}`
    NuESign,
    /// `(-1)^{nu_e+1}`
    NuESignNeg,
    /// `(-1)^{s+nu_e+1}`
    SmallestNuESign,
    /// `mu(pi)` on R
    Mu,
    /// `eta(pi)` on Q
    Eta,
}

impl Weight {
    pub const ALL: [Weight; 13] = [
        Weight::Unit,
        Weight::SmallestSign,
        Weight::T,
        Weight::Tau,
        Weight::TwoPowNuD,
        Weight::OmegaStar,
        Weight::Omega,
        Weight::NuSign,
        Weight::NuESign,
        Weight::NuESignNeg,
        Weight::SmallestNuESign,
        Weight::Mu,
        Weight::Eta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Weight::Unit => "one",
            Weight::SmallestSign => "smallest-sign",
            Weight::T => "t",
            Weight::Tau => "tau",
            Weight::TwoPowNuD => "two-pow-nu-d",
            Weight::OmegaStar => "omega-star",
            Weight::Omega => "omega",
            Weight::NuSign => "nu-sign",
            Weight::NuESign => "nu-e-sign",
            Weight::NuESignNeg => "nu-e-sign-neg",
            Weight::SmallestNuESign => "smallest-nu-e-sign",
            Weight::Mu => "mu",
            Weight::Eta => "eta",
        }
    }

    pub fn compatible_with(self, set: SetId) -> bool {
        match self {
            Weight::Mu => set == SetId::Rset,
            Weight::Eta => set == SetId::Qset,
            Weight::T | Weight::Tau => matches!(set, SetId::U | SetId::Ustar),
            Weight::TwoPowNuD | Weight::OmegaStar | Weight::Omega => set != SetId::O,
            _ => true,
        }
    }

    /// The weight of a non-empty partition.
    pub fn eval(self, p: &Partition) -> Result<BigInt> {
        let st = stat_basic(p)?;
        Ok(match self {
            Weight::Unit => BigInt::one(),
            Weight::SmallestSign => sign(u64::from(st.s) + 1),
            Weight::T => BigInt::from(t_stat(p)),
            Weight::Tau => tau_stat(p),
            Weight::TwoPowNuD => BigInt::one() << st.nu_d,
            Weight::OmegaStar => omega_star(p)?,
            Weight::Omega => omega(p)?,
            Weight::NuSign => sign(u64::from(st.nu)),
            Weight::NuESign => sign(u64::from(st.nu_e)),
            Weight::NuESignNeg => sign(u64::from(st.nu_e) + 1),
            Weight::SmallestNuESign => sign(u64::from(st.s + st.nu_e) + 1),
            Weight::Mu => {
                let n = r_membership(p)
                    .ok_or_else(|| Error::Domain(format!("{p} is not a member of R")))?;
                mu_stat(p, n)?
            }
            Weight::Eta => {
                let n = q_membership(p)
                    .ok_or_else(|| Error::Domain(format!("{p} is not a member of Q")))?;
                eta_stat(p, n)?
            }
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown weight `{s}`")))
    }
}

/// Which statistic, if any, is recorded as the power of `z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZStat {
    #[default]
    None,
    Nu,
    NuO,
}

/// Extra restrictions on the members summed by [`weighted_sum`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    /// Keep only members with exactly this many odd parts.
    pub nu_o: Option<u32>,
    /// Keep only members whose parts are all at most this size.
    pub max_part: Option<u32>,
}

/// `sum` of `weight` over members of `set` with norm `n`.
pub fn weighted_sum(n: u32, set: SetId, weight: Weight, filters: Filters) -> Result<BigInt> {
    let total = weighted_sum_z(n, set, weight, filters, ZStat::None)?;
    Ok(total.coeff(0))
}

/// Like [`weighted_sum`], recording `z_stat` of each member as a power of `z`.
pub fn weighted_sum_z(
    n: u32,
    set: SetId,
    weight: Weight,
    filters: Filters,
    z_stat: ZStat,
) -> Result<ZLaurent> {
    if n == 0 {
        return domain("weighted sums are taken over norms N >= 1");
    }
    if !weight.compatible_with(set) {
        return Err(Error::IncompatibleWeight {
            weight: weight.name().into(),
            set: set.name().into(),
        });
    }
    let mut total = ZLaurent::zero();
    let mut failure = None;
    set.for_each_member(n, filters.max_part, |parts| {
        if failure.is_some() {
            return;
        }
        let p = Partition::from_sorted(parts.to_vec());
        let st = stat_basic(&p).expect("members are non-empty");
        if filters.nu_o.is_some_and(|k| k != st.nu_o) {
            return;
        }
        let z_exp = match z_stat {
            ZStat::None => 0,
            ZStat::Nu => i64::from(st.nu),
            ZStat::NuO => i64::from(st.nu_o),
        };
        match weight.eval(&p) {
            Ok(w) => {
                if set == SetId::O {
                    // each base partition stands for 2^{nu_d} overpartitions
                    for op in overpartitions_of(p.clone()) {
                        debug_assert_eq!(op.base(), &p);
                        total.add_term(z_exp, w.clone());
                    }
                } else {
                    total.add_term(z_exp, w)
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}
