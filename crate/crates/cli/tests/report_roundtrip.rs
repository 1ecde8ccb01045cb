//! Parse is the inverse of emit for the structured report document.

use idcodes_cli::report::{Node, RunReport};
use proptest::prelude::*;

fn arb_key() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_']{0,8}"
}

fn arb_value() -> impl Strategy<Value = String> {
    // printable ASCII, no newlines; empty allowed
    "[ -~]{0,20}"
}

fn arb_node() -> impl Strategy<Value = Node> {
    let leaf = arb_value().prop_map(Node::Leaf);
    leaf.prop_recursive(3, 32, 5, |inner| {
        // subtrees are never empty: an empty tree is indistinguishable
        // from an empty leaf on the wire
        proptest::collection::vec((arb_key(), inner), 1..5).prop_map(Node::Tree)
    })
}

fn arb_tree() -> impl Strategy<Value = Node> {
    proptest::collection::vec((arb_key(), arb_node()), 0..6).prop_map(Node::Tree)
}

proptest! {
    #[test]
    fn node_documents_round_trip(tree in arb_tree()) {
        let text = tree.emit();
        let parsed = Node::parse(&text).unwrap();
        prop_assert_eq!(parsed, tree);
    }

    #[test]
    fn run_reports_round_trip(
        command in "[a-z]{1,10}",
        inputs in proptest::collection::vec((arb_key(), arb_value()), 0..3),
        results in arb_tree(),
        timing in proptest::collection::vec((arb_key(), 0u128..10_000), 0..3),
    ) {
        // `command` and `results` are reserved top-level keys
        let inputs: Vec<(String, String)> = inputs
            .into_iter()
            .filter(|(k, _)| k != "command" && k != "results")
            .collect();
        let mut report = RunReport::new(command);
        for (k, v) in &inputs {
            report = report.input(k.clone(), v);
        }
        report.results = results;
        report.timing_ms = timing;

        let parsed = RunReport::parse(&report.emit()).unwrap();
        // equality ignores timing, which is deliberately not serialized
        prop_assert_eq!(parsed, report);
    }
}
