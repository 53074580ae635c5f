mod common;

use std::sync::Arc;

use contadj::category::Inclusion;
use contadj::io;
use contadj::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn arb_space(max_points: usize) -> impl Strategy<Value = FiniteSpace> {
    (0..=max_points).prop_flat_map(|n| {
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        prop::collection::vec(0..=full, 0..6)
            .prop_map(move |seeds| generate_from_closed_subbasis(n, &seeds).unwrap())
    })
}

proptest! {
    #[test]
    fn closure_is_a_closure_operator(space in arb_space(8), a in any::<u64>(), b in any::<u64>()) {
        let full = space.full_mask();
        let (s, t) = (a & full, (a | b) & full);
        let cs = space.closure_mask(s);
        let ct = space.closure_mask(t);
        prop_assert!(subset(s, cs));
        prop_assert!(subset(cs, ct));
        prop_assert_eq!(space.closure_mask(cs), cs);
        prop_assert!(space.is_closed_mask(cs));
        prop_assert_eq!(cs, naive_closure(&space, s));
    }

    #[test]
    fn subbasis_output_satisfies_axioms(space in arb_space(7)) {
        let again = validate_space(space.point_count(), space.closed_sets()).unwrap();
        prop_assert_eq!(again, space);
    }

    #[test]
    fn space_json_roundtrip(space in arb_space(6)) {
        let json = serde_json::to_string(&io::space_to_doc(&space)).unwrap();
        let back = io::parse_space(&json).unwrap();
        prop_assert_eq!(back.closed_sets(), space.closed_sets());
    }

    #[test]
    fn function_json_roundtrip(x in arb_space(4), y in arb_space(4), seed in any::<u64>()) {
        prop_assume!(y.point_count() > 0 || x.point_count() == 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mapping = (0..x.point_count()).map(|_| rng.gen_range(0..y.point_count())).collect();
        let phi = SetFunction::new(Arc::new(x), Arc::new(y), mapping).unwrap();
        let json = serde_json::to_string(&io::function_to_doc(&phi)).unwrap();
        let back = io::parse_function(&json).unwrap();
        prop_assert_eq!(back.mapping(), phi.mapping());
        prop_assert_eq!(back.domain().closed_sets(), phi.domain().closed_sets());
    }
}

#[test]
fn open_families_satisfy_dual_axioms() {
    for n in 0..=4 {
        for space in enumerate_spaces(n).unwrap() {
            let opens = space.open_sets();
            let full = space.full_mask();
            assert!(opens.contains(&0) && opens.contains(&full));
            for &a in &opens {
                for &b in &opens {
                    assert!(opens.binary_search(&(a | b)).is_ok());
                    assert!(opens.binary_search(&(a & b)).is_ok());
                }
            }
            assert_eq!(from_open_family(n, &opens).unwrap(), space);
        }
    }
}

#[test]
fn subbasis_of_a_topology_is_itself() {
    for n in 0..=3 {
        for space in enumerate_spaces(n).unwrap() {
            assert_eq!(
                generate_from_closed_subbasis(n, space.closed_sets()).unwrap(),
                space
            );
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_distinct() {
    for n in 0..=3 {
        let a: Vec<_> = enumerate_spaces(n).unwrap().collect();
        let b: Vec<_> = enumerate_spaces(n).unwrap().collect();
        assert_eq!(a, b);
        let mut families: Vec<_> = a.iter().map(|s| s.closed_sets().to_vec()).collect();
        families.dedup();
        assert_eq!(families.len(), a.len());
    }
}

fn check_functor_laws(m: &MonotoneMap) {
    let xs = m.source().closed_sets();
    for &a in xs {
        assert_eq!(
            m.on_morphism(Inclusion::identity(a)).unwrap(),
            Inclusion::identity(m.apply_mask(a).unwrap())
        );
        for s in xs.iter().filter_map(|&b| Inclusion::new(a, b)) {
            for t in xs.iter().filter_map(|&c| Inclusion::new(s.target(), c)) {
                let ts = s.then(t).unwrap();
                let mapped = m.on_morphism(s).unwrap().then(m.on_morphism(t).unwrap());
                assert_eq!(Some(m.on_morphism(ts).unwrap()), mapped);
            }
        }
    }
}

#[test]
fn monotone_maps_preserve_identities_and_composites() {
    let spaces = contadj::harness::all_spaces(2).unwrap();
    for x in &spaces {
        for y in &spaces {
            for m in all_monotone_maps(x, y) {
                assert!(is_functor(&m).functor);
                check_functor_laws(&m);
            }
        }
    }
    for phi in sweep(3) {
        check_functor_laws(&induced_direct(&phi));
        check_functor_laws(&induced_inverse(&phi));
    }
}

#[test]
fn non_monotone_tables_are_rejected_by_is_functor() {
    let spaces = contadj::harness::all_spaces(2).unwrap();
    for x in &spaces {
        for y in &spaces {
            let monotone: Vec<_> = all_monotone_maps(x, y)
                .into_iter()
                .map(|m| m.table().to_vec())
                .collect();
            let k = y.closed_count();
            let total = k.pow(x.closed_count() as u32);
            let mut seen = 0;
            for code in 0..total {
                let table: Vec<usize> = (0..x.closed_count())
                    .map(|i| code / k.pow(i as u32) % k)
                    .collect();
                let m = MonotoneMap::new(x.clone(), y.clone(), table.clone()).unwrap();
                let verdict = is_functor(&m);
                assert_eq!(verdict.functor, monotone.contains(&table));
                if let Some((u, up)) = verdict.witness {
                    assert!(u.is_subset_of(&up));
                    assert!(!subset(
                        m.apply_mask(u.mask()).unwrap(),
                        m.apply_mask(up.mask()).unwrap()
                    ));
                }
                seen += usize::from(verdict.functor);
            }
            assert_eq!(seen, monotone.len());
        }
    }
}

#[test]
fn composition_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let spaces = contadj::harness::all_spaces(3).unwrap();
    for _ in 0..2000 {
        let pick = |rng: &mut ChaCha8Rng| spaces[rng.gen_range(0..spaces.len())].clone();
        let (a, b, c, d) = (
            pick(&mut rng),
            pick(&mut rng),
            pick(&mut rng),
            pick(&mut rng),
        );
        let f = random_monotone_map(&mut rng, &a, &b);
        let g = random_monotone_map(&mut rng, &b, &c);
        let h = random_monotone_map(&mut rng, &c, &d);
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        assert_eq!(left, right);
        assert!(is_functor(&left).functor);
        assert_eq!(compose(&identity_functor(&b), &f).unwrap(), f);
        assert_eq!(compose(&f, &identity_functor(&a)).unwrap(), f);
    }
}

#[test]
fn image_preimage_laws() {
    for phi in sweep(3) {
        let x = phi.domain();
        for s in 0..=x.full_mask() {
            let s = x.subset(s).unwrap();
            let round = phi.preimage(&phi.image(&s).unwrap()).unwrap();
            assert!(s.is_subset_of(&round));
            assert_eq!(phi.image(&s).unwrap().mask(), naive_image(&phi, s.mask()));
        }
        let y = phi.codomain();
        assert_eq!(phi.preimage(&y.full()).unwrap(), x.full());
        assert!(phi.image(&x.empty()).unwrap().is_empty());
    }
}

#[test]
fn continuity_matches_open_set_definition() {
    for phi in sweep(3) {
        assert_eq!(
            is_continuous(&phi).continuous,
            continuous_by_open_sets(&phi)
        );
    }
}

#[test]
fn induced_maps_are_functors_and_collapse_for_continuous_maps() {
    for phi in sweep(3) {
        let direct = induced_direct(&phi);
        let inverse = induced_inverse(&phi);
        assert!(is_functor(&direct).functor);
        assert!(is_functor(&inverse).functor);
        let continuous = is_continuous(&phi).continuous;
        let raw = inverse.entries().all(|(v, t)| t == naive_preimage(&phi, v));
        assert_eq!(raw, continuous);
        if continuous {
            assert_eq!(try_right_adjoint(&direct), Some(inverse.clone()));
            assert_eq!(try_left_adjoint(&inverse), Some(direct.clone()));
        }
    }
}

#[test]
fn identity_function_induces_identity_functors() {
    for space in contadj::harness::all_spaces(3).unwrap() {
        let id = SetFunction::identity(&space);
        assert_eq!(induced_direct(&id), identity_functor(&space));
        assert_eq!(induced_inverse(&id), identity_functor(&space));
    }
}

#[test]
fn composite_adjunctions_stay_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let spaces = contadj::harness::all_spaces(3).unwrap();
    let mut checked = 0;
    while checked < 3000 {
        let pick = |rng: &mut ChaCha8Rng| spaces[rng.gen_range(0..spaces.len())].clone();
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if (y.point_count() == 0 && x.point_count() > 0)
            || (z.point_count() == 0 && y.point_count() > 0)
        {
            continue;
        }
        let f: Vec<usize> = (0..x.point_count())
            .map(|_| rng.gen_range(0..y.point_count()))
            .collect();
        let g: Vec<usize> = (0..y.point_count())
            .map(|_| rng.gen_range(0..z.point_count()))
            .collect();
        let f = SetFunction::new(x.clone(), y.clone(), f).unwrap();
        let g = SetFunction::new(y.clone(), z.clone(), g).unwrap();
        if !is_continuous(&f).continuous || !is_continuous(&g).continuous {
            continue;
        }
        let (tf, tf_up) = (induced_direct(&f), induced_inverse(&f));
        let (tg, tg_up) = (induced_direct(&g), induced_inverse(&g));
        let (left, right) = compose_adjunctions((&tf, &tf_up), (&tg, &tg_up)).unwrap();
        assert!(is_adjoint(&left, &right).unwrap().adjoint);

        let gf: Vec<usize> = f.mapping().iter().map(|&q| g.mapping()[q]).collect();
        let gf = SetFunction::new(x.clone(), z.clone(), gf).unwrap();
        assert!(
            is_adjoint(&induced_direct(&gf), &induced_inverse(&gf))
                .unwrap()
                .adjoint
        );
        checked += 1;
    }
}

#[test]
fn adjoint_pairs_are_natural() {
    for phi in sweep(3) {
        let direct = induced_direct(&phi);
        let inverse = induced_inverse(&phi);
        if is_adjoint(&direct, &inverse).unwrap().adjoint {
            assert!(check_naturality(&direct, &inverse).unwrap());
        }
    }
}
