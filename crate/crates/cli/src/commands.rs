//! The five subcommands. Each produces a [`RunReport`] plus a plain-text
//! rendering, and an exit code: 0 for success (undefined parameters and
//! non-identifiable inputs are answers, not errors), 2 for input problems,
//! 3 for cap refusals, 4 when two routes that must agree disagree.

use crate::report::{Node, RunReport};
use idcodes::{
    closed_form, lex_product, parse, product_identifiable, theorem_min_identifying, verify_theorem,
    CodeKind, Error, Family, Graph, Method, ParamOutcome, ProductPlan, Solver,
};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

pub struct Rendered {
    /// Structured report; `None` for commands whose output is itself a
    /// machine format (`product` emits an edge list).
    pub report: Option<RunReport>,
    pub text: String,
    pub exit: i32,
}

pub struct Failure {
    pub exit: i32,
    pub message: String,
}

impl Failure {
    fn from_error(e: Error) -> Failure {
        let exit = match e {
            Error::TooLargeForExactSearch { .. } => 3,
            _ => 2,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

fn load(spec: &str) -> Result<Graph, Failure> {
    parse::load_graph(spec, Path::new(".")).map_err(|e| Failure {
        exit: 2,
        message: format!("cannot load `{spec}`: {e}"),
    })
}

fn display_name(g: &Graph, spec: &str) -> String {
    g.name().unwrap_or(spec).to_string()
}

fn param_node(outcome: &ParamOutcome, with_witness: bool) -> Node {
    match outcome {
        ParamOutcome::Known {
            value,
            method,
            witness,
        } => {
            let mut node = Node::tree();
            node.push_leaf("value", value);
            node.push_leaf("method", method);
            if with_witness {
                if let Some(w) = witness {
                    node.push_leaf("witness", w);
                }
            }
            node
        }
        ParamOutcome::Undefined => Node::leaf("undefined"),
        ParamOutcome::Refused { order, cap } => {
            Node::leaf(format!("refused (order {order} exceeds cap {cap})"))
        }
    }
}

fn param_text(outcome: &ParamOutcome) -> String {
    match outcome {
        ParamOutcome::Known {
            value,
            method,
            witness,
        } => {
            let mut s = format!("{value}  [{method}]");
            if let Some(w) = witness {
                write!(s, "  witness {w}").unwrap();
            }
            s
        }
        ParamOutcome::Undefined => "undefined".to_string(),
        ParamOutcome::Refused { order, cap } => {
            format!("refused (order {order} exceeds cap {cap})")
        }
    }
}

pub fn analyze(spec: &str, solver: &Solver) -> Result<Rendered, Failure> {
    let t0 = Instant::now();
    let g = load(spec)?;
    let parse_ms = t0.elapsed().as_millis();

    let t1 = Instant::now();
    let code_report = solver.full_report(&g);
    let solve_ms = t1.elapsed().as_millis();

    let mut report = RunReport::new("analyze").input("input", spec);
    let mut graph_node = Node::tree();
    graph_node.push_leaf("name", display_name(&g, spec));
    graph_node.push_leaf("order", g.order());
    graph_node.push_leaf("edges", g.size());
    report.results.push("graph", graph_node);
    report.results.push_leaf("identifiable", code_report.identifiable);
    report.results.push("i", param_node(&code_report.identifying, true));
    report.results.push("i'", param_node(&code_report.separating, true));
    report
        .results
        .push("i''", param_node(&code_report.separating_undominated, true));
    report.timing_ms = vec![("parse".into(), parse_ms), ("solve".into(), solve_ms)];

    let mut text = String::new();
    writeln!(
        text,
        "graph: {} ({} vertices, {} edges)",
        display_name(&g, spec),
        g.order(),
        g.size()
    )
    .unwrap();
    writeln!(
        text,
        "identifiable: {}",
        if code_report.identifiable { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(text, "i:   {}", param_text(&code_report.identifying)).unwrap();
    writeln!(text, "i':  {}", param_text(&code_report.separating)).unwrap();
    writeln!(text, "i'': {}", param_text(&code_report.separating_undominated)).unwrap();

    let refused = [
        &code_report.identifying,
        &code_report.separating,
        &code_report.separating_undominated,
    ]
    .iter()
    .any(|o| o.is_refused());
    Ok(Rendered {
        report: Some(report),
        text,
        exit: if refused { 3 } else { 0 },
    })
}

pub fn twins(spec: &str) -> Result<Rendered, Failure> {
    let t0 = Instant::now();
    let g = load(spec)?;
    let partition = idcodes::twin_classes(&g);
    let total_ms = t0.elapsed().as_millis();

    let mut report = RunReport::new("twins").input("input", spec);
    report.results.push_leaf("graph", display_name(&g, spec));
    report.results.push_leaf("order", g.order());
    {
        let mut singles = Node::tree();
        singles.push_leaf("count", partition.singleton_classes.len());
        for (i, class) in partition.singleton_classes.iter().enumerate() {
            singles.push_leaf(format!("class_{}", i + 1), class);
        }
        report.results.push("singleton_classes", singles);
    }
    for (key, classes, reps) in [
        (
            "closed_twin_classes",
            &partition.closed_twin_classes,
            &partition.closed_reps,
        ),
        (
            "open_twin_classes",
            &partition.open_twin_classes,
            &partition.open_reps,
        ),
    ] {
        let mut tree = Node::tree();
        tree.push_leaf("count", classes.len());
        for (i, class) in classes.iter().enumerate() {
            let mut c = Node::tree();
            c.push_leaf("members", class);
            c.push_leaf("representative", reps[i]);
            tree.push(format!("class_{}", i + 1), c);
        }
        report.results.push(key, tree);
    }
    report.results.push_leaf("s", partition.s);
    report.results.push_leaf("t", partition.t);
    report.timing_ms = vec![("total".into(), total_ms)];

    let list = |classes: &[idcodes::VertexSet], reps: Option<&[usize]>| -> String {
        if classes.is_empty() {
            return "(none)".to_string();
        }
        classes
            .iter()
            .enumerate()
            .map(|(i, c)| match reps {
                Some(r) => format!("{c} rep={}", r[i]),
                None => format!("{c}"),
            })
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut text = String::new();
    writeln!(
        text,
        "graph: {} ({} vertices, {} edges)",
        display_name(&g, spec),
        g.order(),
        g.size()
    )
    .unwrap();
    writeln!(text, "singleton classes:   {}", list(&partition.singleton_classes, None)).unwrap();
    writeln!(
        text,
        "closed-twin classes: {}",
        list(&partition.closed_twin_classes, Some(&partition.closed_reps))
    )
    .unwrap();
    writeln!(
        text,
        "open-twin classes:   {}",
        list(&partition.open_twin_classes, Some(&partition.open_reps))
    )
    .unwrap();
    writeln!(text, "s={} t={}", partition.s, partition.t).unwrap();

    Ok(Rendered {
        report: Some(report),
        text,
        exit: 0,
    })
}

pub fn product(g_spec: &str, h_spec: &str) -> Result<Rendered, Failure> {
    let g = load(g_spec)?;
    let h = load(h_spec)?;
    let prod = lex_product(&g, &h).map_err(Failure::from_error)?;
    let text = parse::emit_edge_list(&prod);
    Ok(Rendered {
        report: None,
        text,
        exit: 0,
    })
}

fn h_param_summary(outcome: &ParamOutcome) -> String {
    match outcome.value() {
        Some(v) => v.to_string(),
        None => "undefined".to_string(),
    }
}

pub fn verify(
    g_spec: &str,
    h_spec: &str,
    oracle: bool,
    solver: &Solver,
) -> Result<Rendered, Failure> {
    let t0 = Instant::now();
    let g = load(g_spec)?;
    let h = load(h_spec)?;
    let parse_ms = t0.elapsed().as_millis();

    let identifiable = product_identifiable(&g, &h).map_err(Failure::from_error)?;
    let product_order = g.order() * h.order();
    let mut report = RunReport::new("verify")
        .input("input_g", g_spec)
        .input("input_h", h_spec);
    {
        let mut p = Node::tree();
        p.push_leaf("order", product_order);
        p.push_leaf("identifiable", identifiable);
        report.results.push("product", p);
    }

    if !identifiable {
        let text = format!(
            "product: {}[{}] ({} vertices)\nidentifiable: no\nrefused: the product admits no identifying code\n",
            display_name(&g, g_spec),
            display_name(&h, h_spec),
            product_order
        );
        report.timing_ms = vec![("parse".into(), parse_ms)];
        return Ok(Rendered {
            report: Some(report),
            text,
            exit: 0,
        });
    }

    let t1 = Instant::now();
    let plan: ProductPlan = if oracle {
        verify_theorem(&g, &h, solver).map_err(Failure::from_error)?
    } else {
        theorem_min_identifying(&g, &h, solver).map_err(Failure::from_error)?
    };
    let solve_ms = t1.elapsed().as_millis();

    report.results.push_leaf("branch", plan.branch);
    {
        let mut gn = Node::tree();
        gn.push_leaf("order", plan.g_order);
        gn.push_leaf("s", plan.s);
        gn.push_leaf("t", plan.t);
        report.results.push("g", gn);
        let mut hn = Node::tree();
        hn.push_leaf("order", plan.h_order);
        hn.push("i", param_node(&plan.h_report.identifying, false));
        hn.push("i'", param_node(&plan.h_report.separating, false));
        hn.push("i''", param_node(&plan.h_report.separating_undominated, false));
        report.results.push("h", hn);
    }
    report.results.push_leaf("predicted", plan.predicted);
    match &plan.witness {
        Some(w) => report.results.push_leaf("witness_size", w.len()),
        None => report.results.push_leaf("witness_size", "unavailable"),
    };
    let mut exit = 0;
    match (plan.oracle, plan.verified) {
        (Some(value), Some(verified)) => {
            let mut o = Node::tree();
            o.push_leaf("value", value);
            o.push_leaf("verified", verified);
            report.results.push("oracle", o);
            if !verified {
                exit = 4;
            }
        }
        _ => {
            report.results.push_leaf("oracle", "skipped");
        }
    }
    report.timing_ms = vec![("parse".into(), parse_ms), ("solve".into(), solve_ms)];

    let mut text = String::new();
    writeln!(
        text,
        "product: {}[{}] ({} vertices)",
        display_name(&g, g_spec),
        display_name(&h, h_spec),
        product_order
    )
    .unwrap();
    writeln!(text, "identifiable: yes").unwrap();
    writeln!(text, "branch: {}", plan.branch).unwrap();
    writeln!(text, "G: order={} s={} t={}", plan.g_order, plan.s, plan.t).unwrap();
    writeln!(
        text,
        "H: order={} i={} i'={} i''={}",
        plan.h_order,
        h_param_summary(&plan.h_report.identifying),
        h_param_summary(&plan.h_report.separating),
        h_param_summary(&plan.h_report.separating_undominated),
    )
    .unwrap();
    writeln!(text, "predicted: {}", plan.predicted).unwrap();
    match &plan.witness {
        Some(w) => writeln!(text, "witness size: {}", w.len()).unwrap(),
        None => writeln!(text, "witness size: unavailable").unwrap(),
    }
    match (plan.oracle, plan.verified) {
        (Some(value), Some(true)) => writeln!(text, "oracle: {value} -> verified").unwrap(),
        (Some(value), Some(false)) => writeln!(text, "oracle: {value} -> MISMATCH").unwrap(),
        _ => writeln!(text, "oracle: skipped (pass --oracle to run)").unwrap(),
    }

    Ok(Rendered {
        report: Some(report),
        text,
        exit,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFamily {
    Paths,
    Cycles,
}

pub fn table(family: TableFamily, n_max: usize, solver: &Solver) -> Result<Rendered, Failure> {
    let (fam, name, start) = match family {
        TableFamily::Paths => (Family::Path, "paths", 3usize),
        TableFamily::Cycles => (Family::Cycle, "cycles", 4usize),
    };
    if n_max < start {
        return Err(Failure {
            exit: 2,
            message: format!("n_max must be at least {start} for {name}"),
        });
    }
    if n_max > solver.cap {
        return Err(Failure {
            exit: 3,
            message: Error::TooLargeForExactSearch {
                order: n_max,
                cap: solver.cap,
            }
            .to_string(),
        });
    }

    let t0 = Instant::now();
    let mut report = RunReport::new("table")
        .input("family", name)
        .input("n_max", n_max);
    let mut rows = Node::tree();
    let mut text = String::new();
    writeln!(text, "family: {name} (n = {start}..{n_max})").unwrap();
    writeln!(text, "{:<4} {:<22} {:<22} {:<22}", "n", "i", "i'", "i''").unwrap();
    let mut mismatch: Option<String> = None;

    for n in start..=n_max {
        let g = match fam {
            Family::Path => Graph::path(n),
            Family::Cycle => Graph::cycle(n),
        }
        .map_err(Failure::from_error)?;
        let mut row = Node::tree();
        let mut cells = Vec::new();
        for (key, kind) in [
            ("i", CodeKind::Identifying),
            ("i'", CodeKind::Separating),
            ("i''", CodeKind::SeparatingUndominated),
        ] {
            let exact = match solver.solve(&g, kind) {
                Ok((value, _)) => Some(value),
                Err(Error::UndefinedParameter) => None,
                Err(e) => return Err(Failure::from_error(e)),
            };
            let formula = closed_form(kind, fam, n).map_err(Failure::from_error)?;
            if let (Some(e), Some(f)) = (exact, formula) {
                if e != f {
                    mismatch.get_or_insert(format!(
                        "{name} n={n} {key}: closed_form gives {f}, exact_search gives {e}"
                    ));
                }
            }
            let cell = match (exact, formula) {
                (Some(value), Some(_)) => format!("{value} ({})", Method::ClosedForm),
                (Some(value), None) => format!("{value} ({})", Method::ExactSearch),
                (None, _) => "undefined".to_string(),
            };
            row.push_leaf(key, &cell);
            cells.push(cell);
        }
        rows.push(format!("n_{n}"), row);
        writeln!(text, "{:<4} {:<22} {:<22} {:<22}", n, cells[0], cells[1], cells[2]).unwrap();
    }
    report.results.push("rows", rows);
    if let Some(m) = &mismatch {
        report.results.push_leaf("mismatch", m);
        writeln!(text, "MISMATCH: {m}").unwrap();
    }
    report.timing_ms = vec![("total".into(), t0.elapsed().as_millis())];

    Ok(Rendered {
        report: Some(report),
        text,
        exit: if mismatch.is_some() { 4 } else { 0 },
    })
}
