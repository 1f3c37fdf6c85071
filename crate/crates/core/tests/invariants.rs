use monoid_forge::algebra::{depolarize_radical, polarize};
use monoid_forge::cohomology::{self, ClampedDegree, LocalCohomologyTable};
use monoid_forge::resolutions::{
    betti_koszul, betti_taylor, is_gorenstein, is_level, is_sequentially_cm, projective_dimension,
};
use monoid_forge::simplicial::{
    delta_a, is_shellable, reduced_homology, reduced_homology_direct, reisner_cm,
};
use monoid_forge::structure::{is_clean, size, size_by_sums};
use monoid_forge::{FieldSpec, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};
use proptest::prelude::*;

const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::PrimeField(2)];

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn ideal_in(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, max_exp), 1..=max_gens)
        .prop_filter("proper", |gens| gens.iter().any(|g| !g.is_one()))
        .prop_map(move |gens| {
            let gens: Vec<Monomial> = gens.into_iter().filter(|g| !g.is_one()).collect();
            MonomialIdeal::new(n, gens).unwrap()
        })
}

fn ideal(max_n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| ideal_in(n, max_exp, max_gens))
}

fn complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..=6).prop_map(move |faces| {
            SimplicialComplex::from_faces(n, faces.into_iter().map(VertexSet::from_bits)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduced_colon_identity((u, v) in (1usize..=5).prop_flat_map(|n| (monomial(n, 4), monomial(n, 4)))) {
        let n = u.ambient();
        let correction = Monomial::new(
            (0..n).map(|i| u32::from(u.exponent(i) > v.exponent(i) && v.exponent(i) > 0)).collect(),
        );
        let lhs = u.colon(&v).unwrap().reduce();
        let rhs = u.reduce().colon(&v.reduce()).unwrap().mul(&correction);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn radical_laws(i in ideal(4, 3, 6), j in ideal_in(4, 3, 6)) {
        let r = i.radical();
        prop_assert_eq!(r.radical(), r.clone());
        prop_assert!(r.is_squarefree());
        if i.ambient() == j.ambient() {
            let both = i.intersect(&j).unwrap();
            prop_assert_eq!(both.radical(), r.intersect(&j.radical()).unwrap());
        }
    }

    #[test]
    fn decomposition_intersects_back(i in ideal(4, 3, 6)) {
        let comps = i.irreducible_decomposition().unwrap();
        let ideals: Vec<MonomialIdeal> = comps.iter().map(|q| q.to_ideal()).collect();
        let back = MonomialIdeal::intersect_all(i.ambient(), ideals.iter()).unwrap();
        prop_assert_eq!(back, i.clone());
        // irredundant
        for k in 0..ideals.len() {
            let rest = ideals.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, q)| q);
            let without = MonomialIdeal::intersect_all(i.ambient(), rest).unwrap();
            prop_assert_ne!(without, i.clone());
        }
    }

    #[test]
    fn radical_generator_supports(i in ideal(4, 3, 6)) {
        let r = i.radical();
        for u in i.generators() {
            prop_assert!(r.generators().iter().any(|v| v.support().is_subset(u.support())));
        }
        for v in r.generators() {
            prop_assert!(i.generators().iter().any(|u| u.support() == v.support()));
        }
    }

    #[test]
    fn depolarized_polarization_is_radical(i in ideal(5, 3, 6)) {
        let (p, rec) = polarize(&i).unwrap();
        prop_assert!(p.is_squarefree());
        prop_assert_eq!(p.generators().len(), i.generators().len());
        prop_assert_eq!(depolarize_radical(&p, &rec).unwrap(), i.radical());
    }

    #[test]
    fn primes_of_radical(i in ideal(4, 3, 6)) {
        let r = i.radical();
        prop_assert_eq!(i.minimal_primes().unwrap(), r.minimal_primes().unwrap());
        prop_assert_eq!(i.height().unwrap(), r.height().unwrap());
        let ass = i.associated_primes().unwrap();
        for p in i.minimal_primes().unwrap() {
            prop_assert!(ass.contains(&p));
        }
    }

    #[test]
    fn degree_complex_in_nonpositive_degrees(
        (i, a) in (1usize..=4).prop_flat_map(|n| (ideal_in(n, 3, 5), prop::collection::vec(-3i64..=0, n)))
    ) {
        prop_assert_eq!(delta_a(&i, &a).unwrap(), delta_a(&i.radical(), &a).unwrap());
    }

    #[test]
    fn degree_complex_depends_on_clamp(
        (i, a, shift) in (1usize..=4).prop_flat_map(|n| (
            ideal_in(n, 3, 5),
            prop::collection::vec(-3i64..=2, n),
            prop::collection::vec(0i64..=3, n),
        ))
    ) {
        let t = i.t_vector().unwrap();
        let a: Vec<i64> = a.iter().zip(&t).map(|(&x, &ti)| x.min(i64::from(ti) - 1)).collect();
        // push negative entries further down; the clamp is unchanged
        let b: Vec<i64> = a.iter().zip(&shift).map(|(&x, &s)| if x < 0 { x - s } else { x }).collect();
        prop_assert_eq!(ClampedDegree::clamp(&a, &t), ClampedDegree::clamp(&b, &t));
        prop_assert_eq!(delta_a(&i, &a).unwrap(), delta_a(&i, &b).unwrap());
    }

    #[test]
    fn homology_routes_and_euler_characteristic(c in complex(6)) {
        for field in FIELDS {
            let fast = reduced_homology(&c, field);
            prop_assert_eq!(&fast, &reduced_homology_direct(&c, field));
            let faces = c.faces();
            let chain_euler: i64 = faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum();
            prop_assert_eq!(chain_euler, fast.euler_characteristic());
        }
    }

    #[test]
    fn cones_are_acyclic(c in complex(5)) {
        let n = c.vertex_count();
        let apex = n;
        let coned = SimplicialComplex::from_faces(n + 1, c.facets().iter().map(|f| f.with(apex))).unwrap();
        for field in FIELDS {
            prop_assert!(reduced_homology(&coned, field).is_zero());
        }
    }

    #[test]
    fn clean_iff_shellable(c in complex(5)) {
        let shellable = is_shellable(&c).unwrap().is_some();
        let ideal = c.to_stanley_reisner();
        if ideal.is_zero() {
            prop_assert!(shellable);
        } else {
            prop_assert_eq!(is_clean(&ideal).unwrap().0, shellable);
        }
        if shellable && c.is_pure() {
            for field in FIELDS {
                prop_assert!(reisner_cm(&c, field).unwrap());
            }
        }
    }

    #[test]
    fn cohomology_against_resolutions(i in ideal(4, 3, 5)) {
        for field in FIELDS {
            let table = LocalCohomologyTable::compute(&i, field).unwrap();
            let pd = projective_dimension(&i, field).unwrap();
            prop_assert_eq!(table.depth() + pd, i.ambient());
            prop_assert_eq!(table.dimension(), i.krull_dim().unwrap());
            let t = i.t_vector().unwrap();
            // nothing at or above the box
            let high: Vec<i64> = t.iter().map(|&x| i64::from(x)).collect();
            for k in 0..=i.ambient() {
                prop_assert_eq!(cohomology::local_cohomology_dim(&i, k, &high, field).unwrap(), 0);
            }
            let r = i.radical();
            let rt = LocalCohomologyTable::compute(&r, field).unwrap();
            prop_assert!(rt.depth() >= table.depth());
            prop_assert_eq!(rt.dimension(), table.dimension());
            if i.is_squarefree() {
                let cm = table.depth() == table.dimension();
                prop_assert_eq!(cm, reisner_cm(&SimplicialComplex::from_stanley_reisner(&i).unwrap(), field).unwrap());
            }
        }
    }

    #[test]
    fn betti_relations(i in ideal(4, 3, 5)) {
        let field = FieldSpec::Rationals;
        let b = betti_koszul(&i, field).unwrap();
        prop_assert_eq!(&b, &betti_taylor(&i, field).unwrap());
        let (p, _) = polarize(&i).unwrap();
        prop_assert_eq!(betti_koszul(&p, field).unwrap().graded(), b.graded());
        let cm = cohomology::is_cm(&i, field).unwrap();
        if cm {
            prop_assert!(is_sequentially_cm(&i, field).unwrap());
        }
        if is_gorenstein(&i, field).unwrap() {
            prop_assert!(is_level(&i, field).unwrap());
        }
    }

    #[test]
    fn size_routes_agree(i in ideal(4, 3, 5)) {
        prop_assert_eq!(size(&i).unwrap(), size_by_sums(&i).unwrap());
        prop_assert!(size(&i).unwrap().size < i.ambient());
    }

    #[test]
    fn print_parse_round_trip(i in ideal(5, 4, 6), c in complex(5)) {
        prop_assert_eq!(i.to_string().parse::<MonomialIdeal>().unwrap(), i);
        prop_assert_eq!(SimplicialComplex::parse(&c.to_string()).unwrap(), c);
    }
}

#[test]
fn clean_pivots_beyond_the_box_add_nothing() {
    // colons by monomials outside ∏[0, t_i] equal colons by their truncation
    let i: MonomialIdeal = "3; x1^2*x2, x2^3, x1*x3^2".parse().unwrap();
    let t = i.t_vector().unwrap();
    for e in 0..6u32 {
        for f in 0..6u32 {
            for g in 0..6u32 {
                let m = Monomial::new(vec![e, f, g]);
                let trunc = Monomial::new(vec![e.min(t[0]), f.min(t[1]), g.min(t[2])]);
                assert_eq!(i.colon(&m).unwrap(), i.colon(&trunc).unwrap());
            }
        }
    }
}
