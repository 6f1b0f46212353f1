use cwinv_core::lattice::{closed_form_set, enumerate_cw_sets, LatticePointSet, SetKind};

#[test]
fn enumerated_tuples_project_onto_enumerated_pairs() {
    for n in 5..=14 {
        let e = enumerate_cw_sets(n).unwrap();
        let depth_dim = e.tuples.project([0, 2], "cw-dd");
        assert!(depth_dim.same_points(&e.pairs), "n={n}");
        let rd = closed_form_set(SetKind::Rd, n).unwrap();
        assert!(e.tuples.project([1, 2], "rd").is_subset(&rd), "n={n}");
        // reg = dim exactly when the tuple repeats its middle entries.
        for p in &e.tuples.points {
            assert_eq!(p[2], p[3], "n={n} {p:?}");
        }
    }
}

#[test]
fn tsv_round_trip_keeps_points_and_header() {
    for kind in SetKind::ALL {
        for n in kind.min_n()..=12 {
            let set = closed_form_set(kind, n).unwrap();
            let text = set.to_tsv();
            let back = LatticePointSet::from_tsv(&text).unwrap();
            assert!(back.same_points(&set), "{} n={n}", kind.name());
            assert_eq!(back.to_tsv(), text);
        }
    }
}
