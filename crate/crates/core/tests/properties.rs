use frobenii::covariant::{rh_cov, rh_inv};
use frobenii::frobenius_module::{find_isomorphism, FrobModule};
use frobenii::skew::SkewPolyFq;
use frobenii::witt::{BigWitt, WittCache};
use frobenii::{Field, FieldElement, Integer, IntegerRing};
use proptest::prelude::*;

fn f9() -> Field {
    Field::new(3, 2).unwrap()
}

fn skew(k: &Field, idx: &[u64]) -> SkewPolyFq {
    SkewPolyFq::new(
        k,
        idx.iter()
            .map(|&i| FieldElement::from_index(k, i))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realization_turns_products_into_composites(
        a in prop::collection::vec(0u64..9, 0..4),
        b in prop::collection::vec(0u64..9, 0..4),
        x in 0u64..6561,
    ) {
        let k = f9();
        let (s, t) = (skew(&k, &a), skew(&k, &b));
        let ext = k.extension(4).unwrap();
        let x = FieldElement::from_index(&ext, x);
        let lhs = s.mul(&t).unwrap().eval_additive(&x).unwrap();
        let rhs = s.eval_additive(&t.eval_additive(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn left_division_remainder_is_small(
        a in prop::collection::vec(0u64..9, 0..6),
        b in prop::collection::vec(0u64..9, 1..4),
        lead in 1u64..9,
    ) {
        let k = f9();
        let mut b = b;
        b.push(lead);
        let (a, b) = (skew(&k, &a), skew(&k, &b));
        let (q, r) = a.left_divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn teichmuller_is_multiplicative(a in -20i64..20, b in -20i64..20, n in 1usize..8) {
        let cache = WittCache::new(None);
        let ta = BigWitt::teichmuller(&Integer::new(a), n);
        let tb = BigWitt::teichmuller(&Integer::new(b), n);
        let tab = BigWitt::teichmuller(&Integer::new(a * b), n);
        prop_assert_eq!(ta.mul(&tb, &cache).unwrap(), tab);
        prop_assert_eq!(BigWitt::<Integer>::one(&IntegerRing, n).mul(&ta, &cache).unwrap(), ta);
    }

    #[test]
    fn unit_modules_come_back_from_their_representation(entries in prop::collection::vec(0u64..4, 4)) {
        let k = Field::new(2, 2).unwrap();
        let rows = vec![
            vec![FieldElement::from_index(&k, entries[0]), FieldElement::from_index(&k, entries[1])],
            vec![FieldElement::from_index(&k, entries[2]), FieldElement::from_index(&k, entries[3])],
        ];
        let m = FrobModule::from_rows(&k, rows).unwrap();
        prop_assume!(m.is_unit());
        let v = rh_cov(&m, true).unwrap();
        prop_assert_eq!(v.solutions.dim(), 2);
        let back = rh_inv(&v.rep).unwrap().module;
        let h = find_isomorphism(&back, &m).unwrap();
        prop_assert!(h.is_some_and(|h| back.is_hom_to(&m, &h)));
    }
}
