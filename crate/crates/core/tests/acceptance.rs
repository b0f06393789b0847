//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! All comparisons are exact integer equalities. Time limits: tables < 1 s
//! each, the full registry run <= 60 s.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use smallpart::identities::{lookup, verify_entry, verify_with_ceiling, Kind, Status};
use smallpart::number_theory::{is_square, r2, r2_oracle};
use smallpart::partitions::{
    enumerate_overpartitions, enumerate_partitions, stat_basic, weighted_sum, weighted_sum_z,
    Filters, Partition, SetId, Weight, ZStat,
};
use smallpart::qseries::{
    eval_z, poch_recip_infinite, poch_scaled, poch_scaled_recip, theta_phi, PochBase, QSeries,
};
use smallpart::tables::table;
use smallpart::verify_all;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn sum(n: u32, set: SetId, w: Weight) -> BigInt {
    weighted_sum(n, set, w, Filters::default()).expect("weighted sum")
}

/// Rows of a table column as a set of (partition, n, weight).
fn rows(id: u32, col: usize) -> BTreeSet<(String, Option<u32>, i64)> {
    table(id).unwrap().columns[col]
        .rows
        .iter()
        .map(|r| (r.partition.clone(), r.n, r.weight))
        .collect()
}

fn expected(rows: &[(&str, Option<u32>, i64)]) -> BTreeSet<(String, Option<u32>, i64)> {
    rows.iter()
        .map(|(p, n, w)| (p.parse::<Partition>().unwrap().to_string(), *n, *w))
        .collect()
}

fn within(limit: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn table_2() -> Check {
    let start = Instant::now();
    ensure(sum(10, SetId::Ustar, Weight::T) == int(24), || {
        "t-weight sum at 10 != 24".into()
    })?;
    let all: Vec<Partition> = enumerate_partitions(10).collect();
    let even = all
        .iter()
        .filter(|p| p.smallest().unwrap() % 2 == 0)
        .count();
    ensure(all.len() == 42 && even == 9, || {
        format!("{} partitions, {even} even smallest", all.len())
    })?;
    ensure(
        sum(10, SetId::U, Weight::SmallestSign) == int(42 - 2 * 9),
        || "signed count".into(),
    )?;
    let want = expected(&[
        ("(1,2,3,4)", None, 4),
        ("(1,2^3,3)", None, 3),
        ("(1^5,2,3)", None, 3),
        ("(1,2,7)", None, 2),
        ("(1^3,2,5)", None, 2),
        ("(1,9)", None, 1),
        ("(1^3,7)", None, 1),
        ("(1,3,6)", None, 1),
        ("(1,4,5)", None, 1),
        ("(1,2^2,5)", None, 1),
        ("(1^5,5)", None, 1),
        ("(1^3,3,4)", None, 1),
        ("(1,3^3)", None, 1),
        ("(1^3,2^2,3)", None, 1),
        ("(1^7,3)", None, 1),
    ]);
    ensure(rows(2, 0) == want, || "table rows differ".into())?;
    within(Duration::from_secs(1), start)
}

fn table_3() -> Check {
    let start = Instant::now();
    ensure(sum(8, SetId::U, Weight::Tau) == int(64), || {
        "tau sum at 8 != 64".into()
    })?;
    let over: Vec<_> = enumerate_overpartitions(8).collect();
    let even = over
        .iter()
        .filter(|o| o.base().smallest().unwrap() % 2 == 0)
        .count();
    ensure(over.len() == 100 && even == 18, || {
        format!("{} overpartitions, {even} even", over.len())
    })?;
    ensure(sum(8, SetId::O, Weight::SmallestSign) == int(64), || {
        "signed overpartition count".into()
    })?;
    let want = expected(&[
        ("(1^3,2,3)", None, 14),
        ("(1,2,5)", None, 12),
        ("(1,2^2,3)", None, 10),
        ("(1,3,4)", None, 8),
        ("(1^5,3)", None, 4),
        ("(1^2,2,4)", None, 4),
        ("(1^3,5)", None, 4),
        ("(1,7)", None, 4),
        ("(1^6,2)", None, 2),
        ("(1^2,2^3)", None, 2),
    ]);
    ensure(rows(3, 0) == want, || "table rows differ".into())?;
    within(Duration::from_secs(1), start)
}

fn table_4() -> Check {
    let start = Instant::now();
    for (n, total) in [(4u32, 2i64), (5, 8)] {
        let s = sum(n, SetId::U, Weight::OmegaStar);
        let formula = r2(u64::from(n)).unwrap() as i64 - 2 * i64::from(is_square(u64::from(n)));
        ensure(s == int(total) && formula == total, || {
            format!("N = {n}: {s} vs {formula}")
        })?;
    }
    let four = expected(&[
        ("(4)", None, 2),
        ("(2^2)", None, -2),
        ("(1,3)", None, 4),
        ("(1^2,2)", None, -4),
        ("(1^4)", None, 2),
    ]);
    let five = expected(&[
        ("(5)", None, 2),
        ("(2,3)", None, 4),
        ("(1,4)", None, -4),
        ("(1^2,3)", None, 4),
        ("(1,2^2)", None, 4),
        ("(1^3,2)", None, -4),
        ("(1^5)", None, 2),
    ]);
    ensure(rows(4, 0) == four && rows(4, 1) == five, || {
        "table rows differ".into()
    })?;
    within(Duration::from_secs(1), start)
}

fn table_7() -> Check {
    let start = Instant::now();
    for (set, w) in [
        (SetId::Ctilde, Weight::TwoPowNuD),
        (SetId::Rset, Weight::Mu),
        (SetId::Qset, Weight::Eta),
    ] {
        ensure(sum(7, set, w) == int(36), || format!("{set} total != 36"))?;
    }
    let c = expected(&[
        ("(1,2,4)", None, 8),
        ("(2,5)", None, 4),
        ("(1^2,5)", None, 4),
        ("(1^3,4)", None, 4),
        ("(1^5,2)", None, 4),
        ("(1^3,2^2)", None, 4),
        ("(1,2^3)", None, 4),
        ("(7)", None, 2),
        ("(1^7)", None, 2),
    ]);
    let r = expected(&[
        ("(1^7)", Some(1), 14),
        ("(1^3,2^2)", Some(2), 14),
        ("(1,2^3)", Some(2), 6),
        ("(2^2,3)", Some(2), 2),
    ]);
    let q = expected(&[
        ("(1^7)", Some(1), 14),
        ("(1^4,3)", Some(2), 14),
        ("(1^2,2,3)", Some(2), 6),
        ("(1,3^2)", Some(2), 2),
    ]);
    ensure(rows(7, 0) == c, || "C~ rows differ".into())?;
    ensure(rows(7, 1) == r, || "R rows differ".into())?;
    ensure(rows(7, 2) == q, || "Q rows differ".into())?;
    within(Duration::from_secs(1), start)
}

fn full_suite() -> Check {
    let start = Instant::now();
    let reports = verify_all(30, 25);
    for r in &reports {
        if r.kind == Kind::Theorem {
            ensure(r.status == Status::Match, || {
                format!("{} is {}", r.id, r.status)
            })?;
        }
    }
    ensure(reports.len() >= 22, || "registry too small".into())?;
    within(Duration::from_secs(60), start)
}

fn verified(id: &str, order: usize) -> Check {
    let r = verify_with_ceiling(id, order, order).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Match, || {
        format!("{id} at {order}: {}", r.status)
    })
}

fn closed_forms() -> Check {
    for id in ["thm-4.2", "thm-4.3", "thm-4.4"] {
        verified(id, 60)?;
    }
    for id in ["thm-5.3", "thm-5.5", "thm-5.6", "thm-5.7", "thm-5.8"] {
        verified(id, 25)?;
    }
    // refinement by odd parts, one k at a time
    for n in 1..=60u32 {
        let z = weighted_sum_z(
            n,
            SetId::Do,
            Weight::NuESign,
            Filters::default(),
            ZStat::NuO,
        )
        .unwrap();
        for k in 0..=7i64 {
            let want = i64::from(u64::from(n) == (k * k) as u64);
            ensure(z.coeff(k) == int(want), || format!("D_o N={n} k={k}"))?;
        }
    }
    for n in 1..=25u32 {
        for k in 0..=10u32 {
            let f = Filters {
                nu_o: Some(k),
                ..Filters::default()
            };
            let s = weighted_sum(n, SetId::Po, Weight::NuESign, f).unwrap();
            ensure(s == int(i64::from(n == k)), || {
                format!("P_o N={n} k={k}: {s}")
            })?;
        }
    }
    // square intervals, scanned over j
    for n in 1..=25u64 {
        let mut p24 = 0i64;
        let mut p34 = 0i64;
        for j in 1..=n {
            let (lo, mid, hi) = ((2 * j - 1).pow(2), (2 * j).pow(2), (2 * j + 1).pow(2));
            let upper = mid < n && n < hi;
            let lower = lo < n && n < mid;
            p24 += i64::from(n % 2 == 1 && upper) - i64::from(n % 2 == 0 && lower);
            p34 += i64::from(n % 2 == 0 && upper) - i64::from(n % 2 == 1 && lower);
        }
        let m = n as u32;
        ensure(sum(m, SetId::P24, Weight::NuSign) == int(p24), || {
            format!("P_24 N={n}")
        })?;
        ensure(sum(m, SetId::P34, Weight::NuSign) == int(p34), || {
            format!("P_34 N={n}")
        })?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let nonsquare = i64::from(!is_square(n));
        let d = sum(m, SetId::P34, Weight::NuSign) - sum(m, SetId::P24, Weight::NuSign);
        ensure(d == int(sign * nonsquare), || format!("difference N={n}"))?;
        let d = sum(m, SetId::P34, Weight::NuESign) - sum(m, SetId::P24, Weight::NuESign);
        ensure(d == int(nonsquare), || {
            format!("even-part difference N={n}")
        })?;
    }
    Ok(())
}

/// `(q^2;q^2)_inf / (-z0 q; q^2)_inf` with `z0` substituted up front.
fn distinct_even_at(z0: i64, order: usize) -> QSeries {
    let n = order;
    poch_scaled(&int(1), 2, 2, n, order)
        .checked_mul(&poch_scaled_recip(&int(-z0), 1, 2, n, order).unwrap())
        .unwrap()
}

fn z_refinements() -> Check {
    let order = 20;
    for id in ["eq-5.6", "eq-5.7", "eq-5.8"] {
        verified(id, order)?;
    }
    let sum_side = lookup("eq-5.6").unwrap().sides[0].build(order, 0).unwrap();
    let sum_side = sum_side.as_series().unwrap();
    for z0 in [-3i64, -2, -1, 1, 2, 3] {
        let full = distinct_even_at(z0, order);
        let tail = poch_scaled_recip(&int(-z0), 1, 1, 1, order).unwrap();
        let pe = full.checked_sub(&tail).unwrap();
        let p = full.checked_sub(&QSeries::one(order)).unwrap();
        ensure(eval_z(sum_side, z0).unwrap() == pe, || {
            format!("analytic side at z={z0}")
        })?;
        for n in 1..=order as u32 {
            let direct = |set: SetId| -> BigInt {
                set.members(n)
                    .iter()
                    .map(|p| {
                        let st = stat_basic(p).unwrap();
                        let sign = if st.nu.is_multiple_of(2) { 1 } else { -1 };
                        int(sign) * int(z0).pow(st.nu_o)
                    })
                    .sum()
            };
            let i = n as usize;
            ensure(pe.int_coeff(i) == Some(direct(SetId::Pe)), || {
                format!("P_e N={n} z={z0}")
            })?;
            ensure(p.int_coeff(i) == Some(direct(SetId::P)), || {
                format!("P N={n} z={z0}")
            })?;
        }
    }
    Ok(())
}

fn oracles() -> Check {
    for n in 1..=10_000u64 {
        ensure(r2(n).unwrap() == r2_oracle(n), || format!("r2({n})"))?;
    }
    let order = 200;
    let phi = theta_phi(1, order);
    let sq = phi.checked_mul(&phi).unwrap();
    for n in 1..=order {
        ensure(
            sq.int_coeff(n) == Some(int(r2(n as u64).unwrap() as i64)),
            || format!("phi^2 at {n}"),
        )?;
    }
    let euler = poch_recip_infinite(PochBase::q(1), 30).unwrap();
    for n in 1..=30u32 {
        let count = enumerate_partitions(n).count() as i64;
        ensure(euler.int_coeff(n as usize) == Some(int(count)), || {
            format!("Euler at {n}")
        })?;
    }
    Ok(())
}

fn conjecture() -> Check {
    let r = verify_with_ceiling("rq-bijection", 15, 15).map_err(|e| e.to_string())?;
    ensure(
        r.status == Status::ConjectureMatch && !r.status.is_failure(),
        || format!("status {}", r.status),
    )
}

fn negative_control() -> Check {
    let entry = lookup("thm-3.2").unwrap();
    let bad = entry
        .with_flipped_summand(0, 2)
        .map_err(|e| e.to_string())?;
    let r = verify_entry(&bad, 20, 20).map_err(|e| e.to_string())?;
    // the flipped summand q^2/(1+q^2)/(1-q) has valuation 2
    ensure(
        r.status == Status::Mismatch && r.first_divergent_exponent == Some(2),
        || format!("{} at {:?}", r.status, r.first_divergent_exponent),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 10] = [
        ("table 2: t-weight on U* at N = 10", table_2),
        ("table 3: tau-weight on U at N = 8", table_3),
        ("table 4: omega* at N = 4 and 5", table_4),
        ("table 7: C~, R and Q at N = 7", table_7),
        ("full registry at order 30, enumeration 25", full_suite),
        ("closed formulas (D_o to 60, P sets to 25)", closed_forms),
        ("z-refinements: bivariate and six z values", z_refinements),
        ("oracles: r2, phi^2, Euler", oracles),
        ("conjecture R <-> Q to norm 15", conjecture),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms:.1} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({ms:.1} ms): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
