use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use sadic::catalog;
use sadic::complex::{induced_cell_map, BDComplex, CellComplex};
use sadic::format::{parse_system, print_system};
use sadic::homology::{coboundary, cohomology, relative_h1_map, smith_normal_form, IntMatrix};
use sadic::limits::{build_tower, DirectLimitDescriptor, TowerOptions};
use sadic::padic::{
    candidate_isomorphs, digits_of_rational, dist3, partial_expansion, GrTower, PadicInteger,
};
use sadic::symbolic::{
    admitted_words, descending_closure, factors, Alphabet, DirectiveSequence, MixedSystem,
    Substitution, SubstitutionFamily, Word,
};

fn word(
    max_letter: usize,
    len: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..max_letter, len)
}

fn substitution(d: usize) -> impl Strategy<Value = Substitution> {
    prop::collection::vec(word(d, 1..=4), d)
        .prop_map(|images| Substitution::new(images.into_iter().map(Word::new).collect()).unwrap())
}

fn system() -> impl Strategy<Value = MixedSystem> {
    (1usize..=4).prop_flat_map(|d| {
        (
            prop::collection::vec(substitution(d), 1..=3),
            prop::collection::vec(0usize..3, 1..=3),
        )
            .prop_map(move |(subs, period)| {
                let m = subs.len();
                let period = period.into_iter().map(|k| k % m).collect();
                let family = SubstitutionFamily::new(Alphabet::standard(d), subs).unwrap();
                MixedSystem::new(family, DirectiveSequence::periodic(period).unwrap()).unwrap()
            })
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (
        -50i64..=50,
        prop::sample::select(vec![1i64, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16]),
    )
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn any_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n)
        .prop_map(|rows| IntMatrix::from_rows(&rows))
}

fn catalog_systems() -> Vec<MixedSystem> {
    vec![
        catalog::fibonacci(),
        catalog::thue_morse_fibonacci(),
        catalog::chacon(DirectiveSequence::periodic(vec![0, 1, 2]).unwrap()).unwrap(),
        catalog::arnoux_rauzy(3, None).unwrap(),
        catalog::barge_diamond_4letter(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn substitution_is_a_monoid_morphism(sub in substitution(3), u in word(3, 0..=6), v in word(3, 0..=6)) {
        let (u, v) = (Word::new(u), Word::new(v));
        let whole = sub.apply(&u.concat(&v)).unwrap();
        prop_assert_eq!(whole, sub.apply(&u).unwrap().concat(&sub.apply(&v).unwrap()));
    }

    #[test]
    fn range_matrices_compose(sys in system(), i in 0usize..3, a in 0usize..3, b in 0usize..3) {
        let (j, k) = (i + a, i + a + 1 + b);
        let whole = sys.range_matrix(i, k).unwrap();
        let split = &sys.range_matrix(i, j).unwrap() * &sys.range_matrix(j + 1, k).unwrap();
        prop_assert_eq!(&whole, &split);
        prop_assert_eq!(&whole, &sys.compose_range(i, k).unwrap().transition_matrix());
    }

    #[test]
    fn ascending_union_grows_with_depth(sys in system(), level in 0usize..3, n in 1usize..=3, depth in 0usize..6) {
        let shallow = admitted_words(&sys, level, n, depth).unwrap();
        let deep = admitted_words(&sys, level, n, depth + 1).unwrap();
        prop_assert!(shallow.words.is_subset(&deep.words));
        prop_assert!(deep.growth.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn lengths_are_coherent(sys in system(), level in 0usize..2, n in 1usize..=3) {
        let short = admitted_words(&sys, level, n, 12).unwrap();
        let long = admitted_words(&sys, level, n + 1, 12).unwrap();
        let from_long: BTreeSet<Word> = long.words.iter().flat_map(|w| factors(w.letters(), n)).collect();
        prop_assert!(from_long.is_subset(&short.words));
        if short.is_exact() && long.is_exact() {
            prop_assert_eq!(from_long, short.words);
        }
    }

    #[test]
    fn snf_certificate_and_rank(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)|
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))) {
        let m = IntMatrix::from_rows(&m);
        let dec = smith_normal_form(&m);
        prop_assert!(dec.verify(&m));
        prop_assert!(dec.rank() <= m.rows().min(m.cols()));
    }

    #[test]
    fn h1_rank_is_cycle_rank(v in 1usize..=6, raw in prop::collection::vec((0usize..6, 0usize..6), 0..=8)) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % v, b % v)).collect();
        let k = CellComplex::from_edges(v, &edges);
        let rank = cohomology(&k).h1_rank as i64;
        prop_assert_eq!(rank, edges.len() as i64 - v as i64 + k.component_count() as i64);
        prop_assert!(smith_normal_form(&coboundary(&k)).verify(&coboundary(&k)));
    }

    #[test]
    fn relative_map_is_transposed_matrix(sub in (1usize..=4).prop_flat_map(substitution)) {
        let k = BDComplex::universal(&Alphabet::standard(sub.size()));
        let g = induced_cell_map(&sub, &k, &k).unwrap();
        prop_assert!(g.check().is_ok());
        prop_assert_eq!(relative_h1_map(&g, &k, &k), sub.transition_matrix().transpose());
    }

    #[test]
    fn digits_approximate_the_value(value in rational(), n in 0usize..30) {
        let alpha = digits_of_rational(&value, n + 1).unwrap();
        let partial = BigRational::from_integer(partial_expansion(&alpha, n as i64).unwrap());
        let bound = BigRational::new(BigInt::one(), BigInt::from(3).pow(n as u32 + 1));
        prop_assert!(dist3(&value, &partial) <= bound);
    }

    #[test]
    fn three_adic_distance_is_ultrametric(x in any_rational(), y in any_rational(), z in any_rational()) {
        let (xy, yz, xz) = (dist3(&x, &y), dist3(&y, &z), dist3(&x, &z));
        prop_assert!(xz <= xy.clone().max(yz));
        prop_assert_eq!(xy.is_zero(), x == y);
    }

    #[test]
    fn gr_tower_recurrence(digits in prop::collection::vec(0u8..3, 1..=50)) {
        let depth = digits.len();
        let tower = GrTower::build(&PadicInteger::from_digits(digits).unwrap(), depth).unwrap();
        for n in 0..depth {
            prop_assert!(tower.recurrence_holds(n));
            prop_assert_eq!(tower.inclusion_index(n), Some(BigInt::from(3)));
        }
        for n in 0..=depth {
            prop_assert!(tower.projection_denominators_ok(n));
        }
    }

    #[test]
    fn candidate_sets_are_symmetric(
        alpha in rational(),
        (r_w, r_z, s_w, s_z) in (-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2),
    ) {
        prop_assume!(r_w * s_z != r_z * s_w);
        let int = |x: i64| BigRational::from_integer(BigInt::from(x));
        let den = &alpha * int(s_w) - int(s_z);
        prop_assume!(!den.is_zero());
        let beta = (int(r_z) - &alpha * int(r_w)) / den;
        prop_assume!(digits_of_rational(&beta, 1).is_ok());
        // the inverse transform stays inside the same box
        let back = (int(-r_z) - &beta * int(s_z)) / (&beta * int(-s_w) - int(r_w));
        prop_assert_eq!(&back, &alpha);
        let a = digits_of_rational(&alpha, 12).unwrap();
        let b = digits_of_rational(&beta, 12).unwrap();
        prop_assert!(candidate_isomorphs(&a, 2, 12).contains(&b));
        prop_assert!(candidate_isomorphs(&b, 2, 12).contains(&a));
    }

    #[test]
    fn format_round_trip(sys in system()) {
        let text = print_system(&sys);
        prop_assert_eq!(parse_system(&text).unwrap(), sys);
    }

    #[test]
    fn lattices_nest_with_determinant_index(ms in prop::collection::vec(matrix(2, -3, 3), 1..=5)) {
        prop_assume!(ms.iter().all(|m| !m.determinant().is_zero()));
        let desc = DirectLimitDescriptor::from_matrices(ms.clone(), 2, None).unwrap();
        prop_assert!(desc.nested);
        prop_assert!(desc.indices_match_determinants);
        for (n, level) in desc.lattices.iter().enumerate().skip(1) {
            let det: BigInt = ms[n - 1].determinant();
            prop_assert_eq!(level.index_from_previous.clone(), Some(if det < BigInt::zero() { -det } else { det }));
        }
    }
}

#[test]
fn ascending_inside_descending_on_catalog() {
    for sys in catalog_systems() {
        // the 4-letter example has an invariant set of 12 pairs above its 7-pair language
        let coincide = sys.alphabet().size() < 4;
        for level in 0..3 {
            let asc = admitted_words(&sys, level, 2, 12).unwrap();
            assert!(asc.is_exact());
            for steps in 1..=6 {
                let desc = descending_closure(&sys, level, 2, steps).unwrap();
                assert!(asc.words.is_subset(&desc), "{}", print_system(&sys));
            }
            let stable = descending_closure(&sys, level, 2, 12).unwrap();
            assert_eq!(stable, descending_closure(&sys, level, 2, 13).unwrap());
            if coincide {
                assert_eq!(asc.words, stable, "{}", print_system(&sys));
            } else {
                assert_eq!((asc.words.len(), stable.len()), (7, 12));
            }
        }
    }
}

#[test]
fn catalog_towers_are_natural() {
    for sys in catalog_systems() {
        let tower = build_tower(&sys, 6, TowerOptions::default()).unwrap();
        assert!(tower.all_exact() && tower.all_natural() && tower.euler_holds());
        assert!(tower.maps.iter().all(|c| c.relative_is_transpose));
    }
}
