//! End-to-end CLI runs against frozen golden outputs. Timing lines go to
//! stderr, so stdout is byte-stable.

use idcodes_cli::report::RunReport;
use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_idcodes"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

#[test]
fn golden_outputs() {
    let structured: &[(&[&str], &str)] = &[
        (&["analyze", "P5"], "analyze_p5.structured.txt"),
        (&["analyze", "K2"], "analyze_k2.structured.txt"),
        (&["analyze", "C9"], "analyze_c9.structured.txt"),
        (
            &["analyze", "../../corpus/graphs/diamond.txt"],
            "analyze_diamond.structured.txt",
        ),
        (&["twins", "P3"], "twins_p3.structured.txt"),
        (&["twins", "K3"], "twins_k3.structured.txt"),
        (&["twins", "P4"], "twins_p4.structured.txt"),
        (&["verify", "P3", "P4", "--oracle"], "verify_p3_p4_oracle.structured.txt"),
        (&["verify", "K2", "P7", "--oracle"], "verify_k2_p7_oracle.structured.txt"),
        (&["verify", "K2", "P3"], "verify_k2_p3.structured.txt"),
        (&["verify", "P4", "P3"], "verify_p4_p3.structured.txt"),
        (&["table", "paths", "7"], "table_paths_7.structured.txt"),
        (&["table", "cycles", "7"], "table_cycles_7.structured.txt"),
    ];
    for (args, file) in structured {
        let mut full = args.to_vec();
        full.extend_from_slice(&["--format", "structured"]);
        let (stdout, _, code) = run(&full);
        assert_eq!(stdout, golden(file), "args: {full:?}");
        assert_eq!(code, 0, "args: {full:?}");
        // every structured document parses back
        let report = RunReport::parse(&stdout).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(report.emit(), stdout, "{file} re-emit");
    }

    let text: &[(&[&str], &str)] = &[
        (&["analyze", "P5"], "analyze_p5.text.txt"),
        (&["twins", "P3"], "twins_p3.text.txt"),
        (&["verify", "P3", "P4", "--oracle"], "verify_p3_p4_oracle.text.txt"),
        (&["table", "paths", "7"], "table_paths_7.text.txt"),
    ];
    for (args, file) in text {
        let (stdout, _, code) = run(args);
        assert_eq!(stdout, golden(file), "args: {args:?}");
        assert_eq!(code, 0);
    }

    // product emits a raw edge list in both formats
    for fmt in [&["product", "K2", "P3"][..], &["product", "K2", "P3", "--format", "structured"][..]] {
        let (stdout, _, code) = run(fmt);
        assert_eq!(stdout, golden("product_k2_p3.txt"));
        assert_eq!(code, 0);
    }
}

#[test]
fn exit_codes() {
    // 2: unparseable input
    let (_, stderr, code) = run(&["analyze", "Q9"]);
    assert_eq!(code, 2, "{stderr}");
    let (_, _, code) = run(&["analyze", "no_such_file.txt"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["analyze", "P70"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["table", "paths", "2"]);
    assert_eq!(code, 2);
    // self-loop in an edge-list file
    let dir = std::env::temp_dir().join("idcodes_golden");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("loop.txt");
    std::fs::write(&bad, "3 1\n1 1\n").unwrap();
    let (_, stderr, code) = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("self-loop"), "{stderr}");

    // 3: cap refusals
    let (_, _, code) = run(&["verify", "C5", "C6", "--oracle"]);
    assert_eq!(code, 3);
    let (_, _, code) = run(&["table", "paths", "30"]);
    assert_eq!(code, 3);
    let (stdout, _, code) = run(&["analyze", "LEX(P3,P4)", "--cap", "10"]);
    assert_eq!(code, 3);
    assert!(stdout.contains("refused"), "{stdout}");

    // 0: undefined parameters and non-identifiable inputs are answers
    let (_, _, code) = run(&["analyze", "K2"]);
    assert_eq!(code, 0);
    let (_, _, code) = run(&["verify", "K2", "P3"]);
    assert_eq!(code, 0);

    // the cap override admits the solve refused above
    let (stdout, _, code) = run(&["verify", "C5", "C6", "--oracle", "--cap", "30"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("verified"));
}
