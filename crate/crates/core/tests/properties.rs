use mdisc::lattice::{convex_hull, mixed_volume2, normalized_area};
use mdisc::matroid::{dual_rank_from_primal, gale_dual, DualMatroid};
use mdisc::planar::planar_bidegree;
use mdisc::{build_cayley, plucker, LatticePoint, PointConfig};
use num_bigint::BigInt;
use proptest::prelude::*;

fn config(max: usize) -> impl Strategy<Value = PointConfig> {
    prop::collection::btree_set((-3i64..=3, -3i64..=3), 3..=max)
        .prop_map(|s| PointConfig::from_pairs(&s.into_iter().collect::<Vec<_>>()))
        .prop_filter("full-dimensional", |c| c.affine_dim() == 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn swapping_blocks_swaps_degrees(a1 in config(6), a2 in config(6)) {
        let d = planar_bidegree(&a1, &a2).unwrap();
        let e = planar_bidegree(&a2, &a1).unwrap();
        prop_assert_eq!(&d.cycle[0], &e.cycle[1]);
        prop_assert_eq!(&d.cycle[1], &e.cycle[0]);
        prop_assert!(d.cycle.iter().all(|c| *c >= BigInt::from(0)));
    }

    #[test]
    fn mixed_volume_is_symmetric(a1 in config(6), a2 in config(6)) {
        let (p, q) = (convex_hull(a1.points()), convex_hull(a2.points()));
        let mv = mixed_volume2(&p, &q);
        prop_assert_eq!(&mv, &mixed_volume2(&q, &p));
        prop_assert_eq!(mixed_volume2(&p, &p), normalized_area(&p));
        prop_assert!(mv > BigInt::from(0));
    }

    #[test]
    fn plucker_gcd_is_lattice_index(a1 in config(5), a2 in config(5)) {
        let sys = build_cayley(vec![a1, a2]).unwrap();
        prop_assert_eq!(&plucker(&sys).gcd(), sys.lattice_index());
    }

    #[test]
    fn gale_dual_is_a_kernel(a1 in config(5), a2 in config(5), shift in (-4i64..=4, -4i64..=4)) {
        let sys = build_cayley(vec![a1.clone(), a2.clone()]).unwrap();
        let gale = gale_dual(sys.matrix()).unwrap();
        prop_assert_eq!(gale.corank(), sys.m() - sys.d());
        prop_assert!(sys.matrix().mul(&gale.beta().transpose()).is_zero());

        let mat = DualMatroid::new(&gale);
        for mask in 0..(1u64 << sys.m()) {
            prop_assert_eq!(mat.rank_of(mask), dual_rank_from_primal(sys.matrix(), mask));
        }
        let moved = build_cayley(vec![a1.translate(&LatticePoint::from_i64(&[shift.0, shift.1])), a2]).unwrap();
        prop_assert_eq!(moved.lattice_index(), sys.lattice_index());
        prop_assert_eq!(DualMatroid::new(&gale_dual(moved.matrix()).unwrap()).bases(), mat.bases());
    }
}
