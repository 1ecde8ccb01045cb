//! The structured run report: a key-value tree rendered as one
//! self-describing text document with stable field order.
//!
//! Grammar: each line is `key: value` (a leaf) or `key:` (a subtree whose
//! entries follow, indented two more spaces). Keys may not contain `:` or
//! newlines, values may not contain newlines, and there is no comment
//! syntax. Identical inputs always produce byte-identical documents, so
//! the format is suitable for golden-file tests.

use std::fmt::Display;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf(String),
    Tree(Vec<(String, Node)>),
}

impl Node {
    pub fn tree() -> Node {
        Node::Tree(Vec::new())
    }

    pub fn leaf(value: impl Display) -> Node {
        Node::Leaf(value.to_string())
    }

    /// Appends an entry; only valid on trees.
    pub fn push(&mut self, key: impl Into<String>, node: Node) -> &mut Node {
        match self {
            Node::Tree(entries) => entries.push((key.into(), node)),
            Node::Leaf(_) => panic!("cannot push into a leaf"),
        }
        self
    }

    pub fn push_leaf(&mut self, key: impl Into<String>, value: impl Display) -> &mut Node {
        self.push(key, Node::leaf(value))
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        self.emit_into(&mut out, 0);
        out
    }

    fn emit_into(&self, out: &mut String, indent: usize) {
        if let Node::Tree(entries) = self {
            for (key, node) in entries {
                for _ in 0..indent {
                    out.push_str("  ");
                }
                out.push_str(key);
                out.push(':');
                match node {
                    Node::Leaf(value) => {
                        if !value.is_empty() {
                            out.push(' ');
                            out.push_str(value);
                        }
                        out.push('\n');
                    }
                    Node::Tree(_) => {
                        out.push('\n');
                        node.emit_into(out, indent + 1);
                    }
                }
            }
        }
    }

    /// Parses a document produced by [`Node::emit`]. The result is always a
    /// tree.
    pub fn parse(text: &str) -> Result<Node, String> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .peekable();
        let root = Self::parse_block(&mut lines, 0)?;
        if let Some((i, _)) = lines.next() {
            return Err(format!("line {}: unexpected indentation", i + 1));
        }
        Ok(root)
    }

    fn parse_block<'a, I>(
        lines: &mut std::iter::Peekable<I>,
        indent: usize,
    ) -> Result<Node, String>
    where
        I: Iterator<Item = (usize, &'a str)>,
    {
        let mut entries = Vec::new();
        while let Some(&(i, line)) = lines.peek() {
            let spaces = line.len() - line.trim_start_matches(' ').len();
            if spaces % 2 != 0 {
                return Err(format!("line {}: odd indentation", i + 1));
            }
            let level = spaces / 2;
            if level < indent {
                break;
            }
            if level > indent {
                return Err(format!("line {}: unexpected indentation", i + 1));
            }
            lines.next();
            let body = &line[spaces..];
            let colon = body
                .find(':')
                .ok_or_else(|| format!("line {}: missing `:`", i + 1))?;
            let key = body[..colon].to_string();
            if key.is_empty() {
                return Err(format!("line {}: empty key", i + 1));
            }
            let rest = &body[colon + 1..];
            if rest.is_empty() {
                // subtree if deeper lines follow, otherwise an empty leaf
                let deeper = lines
                    .peek()
                    .map(|&(_, l)| {
                        let s = l.len() - l.trim_start_matches(' ').len();
                        s / 2 > indent
                    })
                    .unwrap_or(false);
                if deeper {
                    entries.push((key, Self::parse_block(lines, indent + 1)?));
                } else {
                    entries.push((key, Node::Leaf(String::new())));
                }
            } else {
                let value = rest
                    .strip_prefix(' ')
                    .ok_or_else(|| format!("line {}: expected space after `:`", i + 1))?;
                entries.push((key, Node::Leaf(value.to_string())));
            }
        }
        Ok(Node::Tree(entries))
    }
}

/// One command invocation's structured payload, plus wall-clock timings.
/// Timings go to stderr, never into the document, so consecutive runs of
/// the same command emit byte-identical output.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Node,
    pub timing_ms: Vec<(String, u128)>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            inputs: Vec::new(),
            results: Node::tree(),
            timing_ms: Vec::new(),
        }
    }

    pub fn input(mut self, label: impl Into<String>, value: impl Display) -> RunReport {
        self.inputs.push((label.into(), value.to_string()));
        self
    }

    pub fn to_document(&self) -> Node {
        let mut doc = Node::tree();
        doc.push_leaf("command", &self.command);
        for (label, value) in &self.inputs {
            doc.push_leaf(label.clone(), value);
        }
        doc.push("results", self.results.clone());
        doc
    }

    pub fn emit(&self) -> String {
        self.to_document().emit()
    }

    /// Inverse of [`RunReport::emit`]. Timings are not serialized, so the
    /// parsed report carries none.
    pub fn parse(text: &str) -> Result<RunReport, String> {
        let Node::Tree(entries) = Node::parse(text)? else {
            unreachable!("parse always returns a tree");
        };
        let mut command = None;
        let mut inputs = Vec::new();
        let mut results = None;
        for (key, node) in entries {
            match (key.as_str(), node) {
                ("command", Node::Leaf(v)) => command = Some(v),
                ("results", tree @ Node::Tree(_)) => results = Some(tree),
                // an empty results tree serializes as a bare `results:` line
                ("results", Node::Leaf(v)) if v.is_empty() => results = Some(Node::tree()),
                (_, Node::Leaf(v)) => inputs.push((key, v)),
                (_, Node::Tree(_)) => return Err(format!("unexpected subtree `{key}`")),
            }
        }
        Ok(RunReport {
            command: command.ok_or("missing `command`")?,
            inputs,
            results: results.ok_or("missing `results`")?,
            timing_ms: Vec::new(),
        })
    }
}

/// Equality ignores timings: they are observability, not results.
impl PartialEq for RunReport {
    fn eq(&self, other: &RunReport) -> bool {
        self.command == other.command
            && self.inputs == other.inputs
            && self.results == other.results
    }
}
impl Eq for RunReport {}
