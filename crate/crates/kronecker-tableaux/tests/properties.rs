use proptest::prelude::*;

use kronecker_tableaux::branching::{enumerate_std, swap_adjacent, KroneckerTableau};
use kronecker_tableaux::diagalg::Diagram;
use kronecker_tableaux::partitions::{dominates, partitions_of, partitions_up_to};
use kronecker_tableaux::tableaux::{is_lattice, is_lattice_by_prefix};
use kronecker_tableaux::Partition;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn same_size(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n, None);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

fn diagram(r: usize) -> impl Strategy<Value = Diagram> {
    // restricted growth string over the 2r points
    prop::collection::vec(0usize..2 * r, 2 * r).prop_map(move |raw| {
        let mut labels = Vec::with_capacity(2 * r);
        let mut next = 0;
        for x in raw {
            let l = x.min(next);
            if l == next {
                next += 1;
            }
            labels.push(l);
        }
        let blocks: Vec<String> = (0..next)
            .map(|b| {
                let pts: Vec<String> = (0..2 * r)
                    .filter(|&i| labels[i] == b)
                    .map(|i| if i < r { format!("{}", i + 1) } else { format!("{}'", i - r + 1) })
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        blocks.concat().parse().unwrap()
    })
}

proptest! {
    #[test]
    fn partitions_round_trip_through_text(p in partition(9)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn dominance_flips_under_conjugation((a, b) in same_size(8)) {
        prop_assert_eq!(dominates(&a, &b), dominates(&b.conjugate(), &a.conjugate()));
    }

    #[test]
    fn lattice_tests_agree(w in prop::collection::vec(1usize..5, 0..14)) {
        prop_assert_eq!(is_lattice(&w), is_lattice_by_prefix(&w));
    }

    #[test]
    fn swaps_are_involutions(l in partition(3), n in partition(4), pick in any::<prop::sample::Index>(), k in 1usize..4) {
        let all = enumerate_std(&l, &n, 4);
        prop_assume!(!all.is_empty());
        let t = pick.get(&all);
        if let Some(u) = swap_adjacent(t, k).unwrap() {
            prop_assert!(all.contains(&u));
            prop_assert_eq!(swap_adjacent(&u, k).unwrap(), Some(t.clone()));
            let again = KroneckerTableau::new(u.start().clone(), u.steps().to_vec()).unwrap();
            prop_assert_eq!(again, u);
        }
    }

    #[test]
    fn diagram_product_is_associative(x in diagram(3), y in diagram(3), z in diagram(3)) {
        let (xy, a) = x.multiply(&y).unwrap();
        let (xy_z, b) = xy.multiply(&z).unwrap();
        let (yz, c) = y.multiply(&z).unwrap();
        let (x_yz, d) = x.multiply(&yz).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(a + b, c + d);
    }

    #[test]
    fn star_reverses_products(x in diagram(3), y in diagram(3)) {
        let (xy, a) = x.multiply(&y).unwrap();
        let (ys_xs, b) = y.star().multiply(&x.star()).unwrap();
        prop_assert_eq!(xy.star(), ys_xs);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn diagrams_round_trip_through_text(x in diagram(4)) {
        prop_assert_eq!(x.to_string().parse::<Diagram>().unwrap(), x);
    }
}
