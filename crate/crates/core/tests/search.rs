use sddlab_core::canon::canonical_form;
use sddlab_core::enumerate::enumerate_connected;
use sddlab_core::indices::sdd;
use sddlab_core::line_graph::line_graph;
use sddlab_core::named::NamedGraph;
use sddlab_core::search::{
    classify_by_sdd, extremal_search, inverse_solve, ClassMember, Extreme, Interval, SddTarget,
};
use sddlab_core::{graph6, ExactRational, Error, Graph};

fn q(s: &str) -> ExactRational {
    s.parse().unwrap()
}

fn contains(members: &[ClassMember], name: &str) -> bool {
    let g = name.parse::<NamedGraph>().unwrap().build().unwrap();
    let f = canonical_form(&g).unwrap();
    members
        .iter()
        .any(|m| canonical_form(&graph6::decode(&m.graph6).unwrap()).unwrap() == f)
}

#[test]
fn classify_small_intervals() {
    let intervals: Vec<Interval> = vec!["(2,4]".parse().unwrap(), "(6,8]".parse().unwrap()];
    let res = classify_by_sdd(8, &intervals, SddTarget::Graph).unwrap();
    assert!(res[0].members.is_empty());
    let names: Vec<&Vec<String>> = res[1].members.iter().map(|m| &m.names).collect();
    assert_eq!(names, [&vec!["P4".to_string()], &vec!["C4".to_string(), "K2,2".to_string()]]);
    let line = classify_by_sdd(8, &intervals[1..], SddTarget::LineGraph).unwrap();
    assert_eq!(line[0].members.len(), 2);
    assert!(contains(&line[0].members, "P5") && contains(&line[0].members, "C4"));
}

#[test]
fn inverse_problem() {
    let found = inverse_solve(&q("17"), 5, SddTarget::Graph).unwrap();
    assert!(contains(&found, "S5"));
    let found = inverse_solve(&q("29/3"), 5, SddTarget::Graph).unwrap();
    assert!(contains(&found, "C3_star"));
    assert!(inverse_solve(&q("3"), 6, SddTarget::Graph).unwrap().is_empty());
    for value in ["7", "34/3", "12"] {
        for m in inverse_solve(&q(value), 7, SddTarget::Graph).unwrap() {
            assert_eq!(sdd(&graph6::decode(&m.graph6).unwrap()), q(value));
        }
        for m in inverse_solve(&q(value), 6, SddTarget::LineGraph).unwrap() {
            let g = graph6::decode(&m.graph6).unwrap();
            assert_eq!(sdd(&line_graph(&g).unwrap().lg), q(value));
        }
    }
    assert!(matches!(
        inverse_solve(&q("7"), 9, SddTarget::Graph),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn extremal_examples() {
    let max = extremal_search(5, Some(4), Extreme::Max).unwrap();
    assert_eq!(max.value, q("17"));
    assert!(contains(&max.witnesses, "S5"));
    let all4 = extremal_search(4, None, Extreme::Max).unwrap();
    let oracle = enumerate_connected(4)
        .unwrap()
        .iter()
        .map(sdd)
        .max()
        .unwrap();
    assert_eq!(all4.value, oracle);
    assert!(all4.witnesses.windows(2).all(|w| w[0].graph6 < w[1].graph6));
}

/// Minimum SDD for fixed order and size is `2m` whenever a connected regular
/// graph of that order and size exists.
#[test]
fn minimum_meets_regular_graphs() {
    for n in 3..=7 {
        let level = enumerate_connected(n).unwrap();
        let regular_sizes: Vec<usize> = level
            .iter()
            .filter(|g: &&Graph| g.is_regular().is_some())
            .map(|g| g.m())
            .collect();
        for m in regular_sizes {
            let res = extremal_search(n, Some(m), Extreme::Min).unwrap();
            assert_eq!(res.value, ExactRational::from(2 * m), "n={n} m={m}");
            assert!(res
                .witnesses
                .iter()
                .all(|w| graph6::decode(&w.graph6).unwrap().is_regular().is_some()));
        }
    }
}
