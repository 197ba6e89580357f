mod common;

use std::collections::BTreeSet;

use quandle::alexander::{classify_prime, linear_alexander};
use quandle::analysis::is_isomorphic;
use quandle::census::{canonical_form, check_conjecture, enumerate, labeled_count};
use quandle::qcore::verify;

fn library_classes(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    enumerate(n, false)
        .unwrap()
        .classes
        .iter()
        .map(|c| c.quandle.rows())
        .collect()
}

#[test]
fn pruned_search_matches_naive_filter() {
    for n in 1..=4 {
        let naive = common::naive_labeled(n);
        assert_eq!(labeled_count(n).unwrap(), naive.len(), "n = {n}");
        assert_eq!(library_classes(n), common::naive_classes(&naive), "n = {n}");
    }
}

#[test]
fn naive_class_counts() {
    assert_eq!(common::naive_classes(&common::naive_labeled(3)).len(), 3);
    assert_eq!(common::naive_classes(&common::naive_labeled(4)).len(), 7);
}

#[test]
#[ignore = "slow: naive filter over (4!)^5 row tuples"]
fn pruned_search_matches_naive_filter_order_five() {
    let naive = common::naive_labeled(5);
    assert_eq!(labeled_count(5).unwrap(), naive.len());
    assert_eq!(library_classes(5), common::naive_classes(&naive));
}

#[test]
fn representatives_are_canonical_quandles() {
    for n in 1..=5 {
        let census = enumerate(n, false).unwrap();
        let labeled: usize = census.classes.iter().map(|c| c.labeled).sum();
        assert_eq!(labeled, census.total_labeled);
        for class in &census.classes {
            assert!(verify(&class.quandle.rows()).unwrap().is_quandle());
            assert_eq!(canonical_form(&class.quandle), class.quandle);
            let a = &class.analysis;
            if n >= 3 {
                assert!(!a.cyclic_type || a.two_point_homogeneous);
                assert!(!a.two_point_homogeneous || a.connected);
            }
        }
    }
}

#[test]
fn classes_are_pairwise_non_isomorphic() {
    let classes = enumerate(5, false).unwrap().iso_classes();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            assert!(is_isomorphic(a, b).is_none());
        }
    }
}

#[test]
fn canonical_forms_characterize_isomorphism() {
    let classes = enumerate(4, false).unwrap().iso_classes();
    let relabel = [2, 0, 3, 1];
    for q in &classes {
        let r = q.relabel(&relabel);
        assert!(is_isomorphic(q, &r).is_some());
        assert_eq!(&canonical_form(&r), q);
    }
}

#[test]
fn prime_order_census_matches_classification() {
    for p in [3usize, 5] {
        let census = enumerate(p, false).unwrap();
        let record = classify_prime(p as u64).unwrap();
        assert_eq!(census.tph_count, record.count, "p = {p}");
        let expected: BTreeSet<_> = record
            .roots
            .iter()
            .map(|&a| canonical_form(&linear_alexander(p as u64, a).unwrap()))
            .collect();
        let found: BTreeSet<_> = census
            .classes
            .iter()
            .filter(|c| c.analysis.two_point_homogeneous)
            .map(|c| c.quandle.clone())
            .collect();
        assert_eq!(found, expected);
    }
}

#[test]
fn census_is_closed_under_duality() {
    for n in 1..=5 {
        let classes: BTreeSet<_> = enumerate(n, false)
            .unwrap()
            .iso_classes()
            .into_iter()
            .collect();
        for q in &classes {
            assert!(classes.contains(&canonical_form(&q.dual())));
        }
    }
}

#[test]
fn conjecture_at_five() {
    let report = check_conjecture(5).unwrap();
    assert!(report.holds());
    assert!(report.equal_orbit_sizes);
    let expected: BTreeSet<_> = [2, 3]
        .iter()
        .map(|&a| canonical_form(&linear_alexander(5, a).unwrap()))
        .collect();
    let found: BTreeSet<_> = report.two_point_homogeneous.into_iter().collect();
    assert_eq!(found, expected);
}

#[test]
fn connected_only_filter() {
    let all = enumerate(5, false).unwrap();
    let connected = enumerate(5, true).unwrap();
    assert_eq!(connected.classes.len(), all.connected_count);
    assert!(connected.classes.iter().all(|c| c.analysis.connected));
    assert!(connected.total_labeled < all.total_labeled);
}
