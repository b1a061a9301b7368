use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

use multideg::coefficients::{
    asym_multinomial_uncached, multinomial, AsymMultinomial, ExponentVector, MonomialSum,
};
use multideg::compositions::{
    enumerate, is_catalan, leftmost_zero_index, reduce, reverse, Composition, CompositionClass,
};
use multideg::genfun::SparsePolynomial;
use multideg::multidegree::{compute_table, MultidegreeTable};
use multideg::parking::{
    enumerate_all_cpf, insert, remove, Badness, Insertion, ParkingFunction,
    PointedParkingFunction, Removal,
};

fn cpf_levels() -> &'static Vec<Vec<ParkingFunction>> {
    static LEVELS: OnceLock<Vec<Vec<ParkingFunction>>> = OnceLock::new();
    LEVELS.get_or_init(|| (0..=6).map(|n| enumerate_all_cpf(n).unwrap()).collect())
}

fn catalan(n: usize, pick: Index) -> Composition {
    let all: Vec<Composition> = enumerate(n as u32, n)
        .filter(|k| is_catalan(k).unwrap())
        .collect();
    pick.get(&all).clone()
}

fn any_cpf(min_n: usize, max_n: usize) -> impl Strategy<Value = ParkingFunction> {
    (min_n..=max_n, any::<Index>()).prop_map(|(n, i)| i.get(&cpf_levels()[n]).clone())
}

fn any_pointed(max_n: usize) -> impl Strategy<Value = PointedParkingFunction> {
    (any_cpf(1, max_n), any::<Index>()).prop_map(|(pf, i)| {
        let point = i.index(2 * pf.size() + 1);
        PointedParkingFunction::new(pf, point).unwrap()
    })
}

fn polynomial(nvars: usize) -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5), 0..5).prop_map(
        move |terms| {
            SparsePolynomial::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, c)| (ExponentVector::from_dense(&e, 1), BigInt::from(c))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #[test]
    fn reverse_is_an_involution(parts in prop::collection::vec(0u32..5, 0..8)) {
        let k = Composition::new(parts);
        let r = reverse(&k);
        prop_assert_eq!(r.total(), k.total());
        prop_assert_eq!(reverse(&r), k);
    }

    #[test]
    fn display_parse_round_trip(parts in prop::collection::vec(0u32..50, 0..8)) {
        let k = Composition::new(parts);
        prop_assert_eq!(k.to_string().parse::<Composition>().unwrap(), k);
    }

    #[test]
    fn reduce_keeps_catalan(n in 2usize..=8, pick in any::<Index>()) {
        let k = catalan(n, pick);
        for j in 1..leftmost_zero_index(&k).min(n + 1) {
            let r = reduce(&k, j).unwrap();
            prop_assert_eq!(r.len(), n - 1);
            prop_assert_eq!(r.total() as usize, n - 1);
            prop_assert!(is_catalan(&r).unwrap(), "{} at {} gives {}", k, j, r);
        }
    }

    #[test]
    fn first_zero_classes_partition(n in 0u32..6, j in 1usize..6) {
        let mut sizes = 0;
        for i in 1..=j + 1 {
            sizes += CompositionClass::new(n, j, i).unwrap().members().count();
        }
        prop_assert_eq!(sizes, enumerate(n, j).count());
        for k in enumerate(n, j) {
            let hits = (1..=j + 1)
                .filter(|&i| CompositionClass::new(n, j, i).unwrap().contains(&k))
                .count();
            prop_assert_eq!(hits, 1);
        }
    }

    #[test]
    fn string_operator_mass_is_multinomial(exps in prop::collection::vec(0u32..4, 1..6)) {
        let d: u32 = exps.iter().sum();
        let mut s = MonomialSum::monomial(ExponentVector::from_dense(&exps, 1));
        for _ in 0..d {
            s = s.string();
        }
        let parts: Vec<i64> = exps.iter().map(|&e| i64::from(e)).collect();
        prop_assert_eq!(s.mass(), multinomial(u64::from(d), &parts));
        prop_assert!(s.terms().keys().all(ExponentVector::is_one));
    }

    #[test]
    fn memo_matches_plain_recursion(n in 1usize..=7, pick in any::<Index>()) {
        let all: Vec<Composition> = enumerate(n as u32, n).collect();
        let k = pick.get(&all);
        let engine = AsymMultinomial::new();
        prop_assert_eq!(engine.get(n as u32, k).unwrap(), asym_multinomial_uncached(n as u32, k).unwrap());
    }

    #[test]
    fn polynomial_ring_laws(p in polynomial(3), q in polynomial(3), r in polynomial(3),
                            x in prop::collection::vec(-4i64..=4, 3)) {
        let lhs = p.mul(&q.add(&r).unwrap()).unwrap();
        let rhs = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let point: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        let ev = |f: &SparsePolynomial| f.eval(&point).unwrap();
        prop_assert_eq!(ev(&p.mul(&q).unwrap()), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&p.add(&q).unwrap()), ev(&p) + ev(&q));
    }

    #[test]
    fn insert_var_then_drop_var(p in polynomial(3), i in 1usize..=4) {
        prop_assert_eq!(p.insert_var(i).unwrap().drop_var(i).unwrap(), p);
    }

    #[test]
    fn cpf_json_round_trip(pf in any_cpf(1, 6)) {
        let s = serde_json::to_string(&pf).unwrap();
        prop_assert_eq!(serde_json::from_str::<ParkingFunction>(&s).unwrap(), pf);
    }

    #[test]
    fn pointed_json_round_trip(pp in any_pointed(5)) {
        let s = serde_json::to_string(&pp).unwrap();
        prop_assert_eq!(serde_json::from_str::<PointedParkingFunction>(&s).unwrap(), pp);
    }

    #[test]
    fn preferences_round_trip(pf in any_cpf(1, 6)) {
        let prefs = pf.to_preferences();
        prop_assert_eq!(ParkingFunction::from_preferences(&prefs).unwrap(), pf);
    }

    #[test]
    fn iota_nu_round_trip(pp in any_pointed(6)) {
        let q = insert(&pp, Insertion::Iota).unwrap();
        prop_assert!(q.is_column_restricted());
        prop_assert_eq!(q.size(), pp.pf().size() + 1);
        prop_assert_eq!(q.classify() == Badness::Bad, pp.is_corner());
        prop_assert_eq!(remove(&q, Removal::Nu).unwrap(), pp);
    }

    #[test]
    fn nu_iota_round_trip(q in any_cpf(2, 6)) {
        let pp = remove(&q, Removal::Nu).unwrap();
        prop_assert_eq!(insert(&pp, Insertion::Iota).unwrap(), q);
    }

    #[test]
    fn table_json_round_trip(n in 3usize..=9) {
        let t = compute_table(n).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json().to_string()).unwrap();
        prop_assert_eq!(MultidegreeTable::from_json(&v).unwrap(), t);
    }
}
