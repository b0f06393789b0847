use num_bigint::BigInt;
use proptest::prelude::*;
use smallpart::qseries::{
    eval_z, poch_finite, poch_infinite, poch_recip, theta_phi, theta_psi, PochBase, QSeries,
    ZLaurent,
};

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-9i64..=9, order + 1).prop_map(move |c| QSeries::from_ints(order, &c))
}

fn triple() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (0usize..=12).prop_flat_map(|n| (series(n), series(n), series(n)))
}

/// A bivariate series with z-exponents in [-3, 3].
fn z_series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(
        prop::collection::vec((-3i64..=3, -5i64..=5), 0..3),
        order + 1,
    )
    .prop_map(move |rows| {
        let coeffs = rows
            .into_iter()
            .map(ZLaurent::from_iter_terms)
            .collect();
        QSeries::from_coeffs(order, coeffs)
    })
}

fn base() -> impl Strategy<Value = PochBase> {
    (prop::bool::ANY, 0usize..=4, -2i64..=2)
        .prop_map(|(neg, q, z)| PochBase::new(if neg { -1 } else { 1 }, q, z))
}

proptest! {
    #[test]
    fn ring_laws((a, b, c) in triple()) {
        let zero = QSeries::zero(a.order());
        let one = QSeries::one(a.order());
        prop_assert_eq!(a.checked_add(&b)?, b.checked_add(&a)?);
        prop_assert_eq!(a.checked_add(&b)?.checked_add(&c)?, a.checked_add(&b.checked_add(&c)?)?);
        prop_assert_eq!(a.checked_mul(&b)?, b.checked_mul(&a)?);
        prop_assert_eq!(a.checked_mul(&b)?.checked_mul(&c)?, a.checked_mul(&b.checked_mul(&c)?)?);
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(&c)?)?,
            a.checked_mul(&b)?.checked_add(&a.checked_mul(&c)?)?
        );
        prop_assert_eq!(a.checked_add(&zero)?, a.clone());
        prop_assert_eq!(a.checked_mul(&one)?, a.clone());
        prop_assert!(a.checked_sub(&a)?.is_zero());
        prop_assert_eq!(a.checked_add(&a.neg_ref())?, zero);
    }

    #[test]
    fn inverse_of_unit_constant((a, _, _) in triple(), neg in prop::bool::ANY) {
        let mut coeffs: Vec<ZLaurent> = a.coeffs().to_vec();
        coeffs[0] = ZLaurent::constant(if neg { -1 } else { 1 });
        let u = QSeries::from_coeffs(a.order(), coeffs);
        let inv = u.inverse()?;
        prop_assert_eq!(u.checked_mul(&inv)?, QSeries::one(a.order()));
    }

    #[test]
    fn truncation_commutes_with_products((a, b, _) in triple(), k in 0usize..=12) {
        let k = k.min(a.order());
        prop_assert_eq!(
            a.checked_mul(&b)?.truncate(k)?,
            a.truncate(k)?.checked_mul(&b.truncate(k)?)?
        );
        prop_assert_eq!(
            a.checked_add(&b)?.truncate(k)?,
            a.truncate(k)?.checked_add(&b.truncate(k)?)?
        );
    }

    #[test]
    fn eval_z_is_a_ring_map(a in z_series(8), b in z_series(8), z0 in prop::sample::select(vec![-1i64, 1])) {
        let lhs = eval_z(&a.checked_mul(&b)?, z0)?;
        let rhs = eval_z(&a, z0)?.checked_mul(&eval_z(&b, z0)?)?;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poch_recurrence(a in base(), n in 0usize..6, order in 0usize..=15) {
        let next = poch_finite(a, n + 1, order);
        let mut step = poch_finite(a, n, order);
        let e = a.q_exp + n;
        if e <= order {
            step.mul_binomial(&BigInt::from(-a.sign), e, a.z_exp);
        }
        prop_assert_eq!(next, step);
    }

    #[test]
    fn poch_recip_inverts(a in base(), n in 0usize..6, order in 0usize..=15) {
        prop_assume!(a.q_exp >= 1);
        let p = poch_finite(a, n, order);
        let r = poch_recip(a, n, order)?;
        prop_assert_eq!(p.checked_mul(&r)?, QSeries::one(order));
    }

    #[test]
    fn infinite_product_splits(m in 1usize..4, n in 0usize..6, order in 0usize..=20) {
        // (a;q)_inf = (a;q)_n (a q^n; q)_inf
        let a = PochBase::neg_q(m);
        let whole = poch_infinite(a, order)?;
        let split = poch_finite(a, n, order).checked_mul(&poch_infinite(PochBase::neg_q(m + n), order)?)?;
        prop_assert_eq!(whole, split);
    }
}

#[test]
fn gauss_products_to_order_40() {
    let order = 40;
    let qq = poch_infinite(PochBase::q(1), order).unwrap();
    let mq = poch_infinite(PochBase::neg_q(1), order).unwrap();
    assert_eq!(
        theta_phi(-1, order),
        qq.checked_mul(&mq.inverse().unwrap()).unwrap()
    );

    let q2 = smallpart::qseries::poch_infinite_step(PochBase::q(2), 2, order).unwrap();
    let q_odd = smallpart::qseries::poch_recip_infinite_step(PochBase::q(1), 2, order).unwrap();
    assert_eq!(theta_psi(1, order), q2.checked_mul(&q_odd).unwrap());
}

#[test]
fn mismatched_orders_are_rejected() {
    let a = QSeries::one(4);
    let b = QSeries::one(5);
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
    assert!(a.truncate(6).is_err());
}
