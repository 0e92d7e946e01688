use fpaths::{FPath, FStep, Family, Object};
use proptest::prelude::*;

/// Builds a valid F-path from arbitrary seeds: each seed picks a north step
/// or a step `(a,b)` that keeps `y - x >= 0`.
fn path_from_seeds(seeds: &[(bool, u32, u32)]) -> FPath {
    let mut height: i64 = 0;
    let mut steps = Vec::with_capacity(seeds.len());
    for &(north, sa, sb) in seeds {
        let step = if north {
            FStep::NORTH
        } else {
            let dx = 1 + (sa as i64) % (height + 1);
            let lo = dx - height;
            let dy = 1 - (sb as i64) % (2 - lo);
            FStep::new(dx, dy).unwrap()
        };
        height += step.rise();
        steps.push(step);
    }
    FPath::from_steps(steps).expect("seeds give a valid path")
}

fn fpath(max_len: usize) -> impl Strategy<Value = FPath> {
    prop::collection::vec((any::<bool>(), any::<u32>(), any::<u32>()), 0..=max_len)
        .prop_map(|s| path_from_seeds(&s))
}

proptest! {
    #[test]
    fn every_family_round_trips(q in fpath(10)) {
        for family in Family::ALL {
            let o = family.from_fpath(&q);
            prop_assert_eq!(o.to_fpath(), q.clone());
            prop_assert_eq!(o.stats(), q.stats().triple);
            prop_assert_eq!(family.parse(&o.to_string()).unwrap(), o);
        }
    }

    #[test]
    fn sums_map_to_sums(a in fpath(5), b in fpath(5)) {
        let q = a.direct_sum(&b);
        for family in Family::ALL {
            let want = family.from_fpath(&q);
            let got = family.from_fpath(&a).direct_sum(&family.from_fpath(&b));
            prop_assert_eq!(got.as_ref(), Some(&want));
            prop_assert_eq!(Object::compose(&want.decompose()), Some(want.clone()));
        }
    }

    #[test]
    fn involution_swaps_aone_and_bone(q in fpath(12)) {
        let r = q.involution();
        let (s, t) = (q.stats(), r.stats());
        prop_assert_eq!(r.involution(), q);
        prop_assert_eq!(t.bone, s.triple.aone + s.triple.north);
        prop_assert_eq!(t.triple.aone + s.triple.north, s.bone);
    }
}
