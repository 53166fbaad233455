use std::path::Path;

use proptest::prelude::*;
use qlogic_cli::commands::{evaluate, lattice, load_scenario, LatticeTarget};
use qlogic_cli::dot::HasseDiagram;
use qlogic_cli::report::{EvalKind, ReportEntry, TruthReport, Verdict};
use qlogic_cli::scenario::Scenario;
use qlogic_core::logic::{
    evaluate_counterfactual_unpasted, locate_pair, Location, Mode, Proposition, Rule, TruthValue,
};

const FIXTURES: [&str; 4] = [
    "epr_unpasted.toml",
    "epr_pasted.toml",
    "spin_single_particle.toml",
    "c3_three_outcome.toml",
];

fn fixture(name: &str) -> Scenario {
    load_scenario(
        &Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(name),
    )
    .unwrap()
}

fn arb_label() -> impl Strategy<Value = String> {
    "[A-Za-z_(][A-Za-z0-9_+ ⊓()-]{0,12}[A-Za-z0-9_+)-]"
}

fn arb_entry() -> impl Strategy<Value = ReportEntry> {
    (
        arb_label(),
        prop::sample::select(vec![
            TruthValue::True,
            TruthValue::False,
            TruthValue::Indeterminate,
        ]),
        prop::sample::select(Rule::ALL.to_vec()),
        prop::collection::vec("[a-z][a-z ;,().|]{0,30}", 0..3),
    )
        .prop_map(|(label, value, rule, diagnostics)| ReportEntry {
            label,
            value,
            rule,
            diagnostics,
        })
}

fn arb_report() -> impl Strategy<Value = TruthReport> {
    (
        prop::sample::select(vec![
            EvalKind::Factual,
            EvalKind::Counterfactual(Mode::Pasted),
            EvalKind::Counterfactual(Mode::Unpasted),
        ]),
        "[a-zA-Z0-9 =(),{}/]{1,40}",
        prop::collection::vec(arb_entry(), 0..6),
        prop::collection::vec(
            (
                arb_label(),
                prop_oneof![
                    Just(Verdict::Admissible),
                    Just(Verdict::Undetermined),
                    (0usize..5).prop_map(Verdict::Violation),
                ],
            ),
            0..4,
        ),
    )
        .prop_map(|(kind, state, entries, contexts)| TruthReport {
            kind,
            state,
            entries,
            contexts,
        })
}

proptest! {
    #[test]
    fn report_text_round_trips(r in arb_report()) {
        let text = r.to_text();
        let parsed = TruthReport::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &r);
        prop_assert_eq!(parsed.to_text(), text);
    }

    /// Any pair of named subspaces of a fixture: the unpasted engine only
    /// consults the order inside a common block.
    #[test]
    fn unpasted_never_orders_across_blocks(fi in 0usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let scn = fixture(FIXTURES[fi]);
        let named: Vec<_> = scn
            .subspaces
            .values()
            .filter(|s| s.ambient_dim() == scn.ambient_dim && !s.is_trivial())
            .cloned()
            .collect();
        let state = i.get(&named);
        let p = Proposition::new("P", j.get(&named).clone());
        let coll = scn.context_collection();
        let e = evaluate_counterfactual_unpasted(&p, state, &coll).unwrap();
        if locate_pair(&coll, state, &p.subspace) == Location::NoCommonBlock {
            prop_assert_eq!(e.rule, Rule::NoCommonBlock);
            prop_assert_eq!(e.value, TruthValue::Indeterminate);
        } else {
            prop_assert_ne!(e.rule, Rule::NoCommonBlock);
        }
    }
}

#[test]
fn unpasted_fixture_reports_use_no_order_rule_across_blocks() {
    for name in FIXTURES {
        let scn = fixture(name);
        let report = evaluate(&scn, Some(Mode::Unpasted)).unwrap();
        let qlogic_cli::scenario::State::Subspace { subspace, .. } = &scn.state else {
            unreachable!("fixtures use subspace states")
        };
        let coll = scn.context_collection();
        for (entry, prop) in report.entries.iter().zip(&scn.propositions) {
            if locate_pair(&coll, subspace, &prop.subspace) == Location::NoCommonBlock {
                assert!(
                    !matches!(entry.rule, Rule::Inclusion | Rule::Incomparable),
                    "{name}: {entry:?}"
                );
            }
        }
    }
}

/// Reachability closure of an edge list by Floyd-Warshall.
fn closure(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; k]; k];
    for &(a, b) in edges {
        r[a][b] = true;
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if r[a][m] && r[m][b] {
                    r[a][b] = true;
                }
            }
        }
    }
    r
}

fn dot_edges(dot: &str) -> Vec<(usize, usize)> {
    dot.lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -> "))
        .map(|(a, b)| (a[1..].parse().unwrap(), b[1..].parse().unwrap()))
        .collect()
}

/// The exported edges are exactly the transitive reduction of the strict
/// order: their closure is the order, and no edge is implied by the others.
fn check_transitive_reduction(d: &HasseDiagram, title: &str) {
    let k = d.nodes.len();
    let edges = dot_edges(&d.to_dot(title));
    assert_eq!(edges, d.edges, "{title}");
    let reach = closure(k, &edges);
    for (a, row) in reach.iter().enumerate() {
        for (b, &reachable) in row.iter().enumerate() {
            let strict = a != b && d.nodes[a].1.leq(&d.nodes[b].1).unwrap();
            assert_eq!(reachable, strict, "{title}: {a} -> {b}");
        }
    }
    for (i, e) in edges.iter().enumerate() {
        let others: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| *e)
            .collect();
        assert!(
            !closure(k, &others)[e.0][e.1],
            "{title}: edge {e:?} is transitive"
        );
    }
}

#[test]
fn dot_edges_are_the_covering_relation() {
    for name in FIXTURES {
        let scn = fixture(name);
        check_transitive_reduction(&lattice(&scn, &LatticeTarget::Pasted).unwrap(), name);
        for ctx in scn.contexts.keys() {
            let d = lattice(&scn, &LatticeTarget::Context(ctx.clone())).unwrap();
            assert_eq!(d.nodes.len(), 1 << scn.contexts[ctx].members().len());
            check_transitive_reduction(&d, ctx);
        }
    }
}

#[test]
fn dot_node_order_is_canonical() {
    let scn = fixture("c3_three_outcome.toml");
    let d = lattice(&scn, &LatticeTarget::Pasted).unwrap();
    for w in d.nodes.windows(2) {
        let key = |s: &qlogic_core::Subspace| (s.dim(), s.canonical_string());
        assert!(key(&w[0].1) < key(&w[1].1));
    }
}
