//! Predicates and exact minimum-cardinality solvers for the three code
//! parameters of a graph: identifying codes, separating codes, and
//! separating codes not dominated by any single closed neighborhood.
//!
//! All three searches are instances of one problem: find the smallest vertex
//! set hitting every constraint set, where
//!
//! * covering `v` means hitting `B(v)`,
//! * separating `x, y` means hitting `B(x) Δ B(y)`,
//! * escaping domination by `v` means hitting `V \ B(v)`.
//!
//! The search enumerates cardinalities from a lower bound upward and, within
//! each cardinality, subsets in lexicographic order, so the returned witness
//! is always the lexicographically least minimum code.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

/// Default vertex cap for the exact solvers. The subset space is exponential;
/// beyond this we refuse rather than hang. Override with [`Solver::with_cap`].
pub const DEFAULT_SEARCH_CAP: usize = 26;

/// Which of the three code parameters is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeKind {
    /// Minimum identifying code (covers every vertex, separates every pair).
    Identifying,
    /// Minimum separating code (coverage not required).
    Separating,
    /// Minimum separating code not contained in any closed neighborhood.
    SeparatingUndominated,
}

/// Path or cycle, for the closed-form tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Cycle => write!(f, "cycle"),
        }
    }
}

fn check_width(g: &Graph, c: &VertexSet) -> Result<()> {
    if c.width() == g.order() {
        Ok(())
    } else {
        Err(Error::WidthMismatch {
            expected: g.order(),
            found: c.width(),
        })
    }
}

/// Does `code` cover `v`, i.e. meet the closed neighborhood of `v`?
pub fn covers(g: &Graph, code: &VertexSet, v: usize) -> Result<bool> {
    check_width(g, code)?;
    g.check_vertex(v)?;
    Ok(g.ball_ref(v).intersects(code))
}

/// Does `code` separate `x` and `y`, i.e. meet their closed neighborhoods
/// differently?
pub fn separates(g: &Graph, code: &VertexSet, x: usize, y: usize) -> Result<bool> {
    check_width(g, code)?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(g.ball_ref(x).symmetric_difference(g.ball_ref(y)).intersects(code))
}

/// Nonempty, covers every vertex, separates every pair.
pub fn is_identifying_code(g: &Graph, code: &VertexSet) -> Result<bool> {
    check_width(g, code)?;
    if code.is_empty() {
        return Ok(false);
    }
    let n = g.order();
    for v in 0..n {
        if !g.ball_ref(v).intersects(code) {
            return Ok(false);
        }
    }
    is_separating_code(g, code)
}

/// Separates every pair of distinct vertices (coverage not required).
pub fn is_separating_code(g: &Graph, code: &VertexSet) -> Result<bool> {
    check_width(g, code)?;
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            if !g.ball_ref(x).symmetric_difference(g.ball_ref(y)).intersects(code) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Not contained in any single closed neighborhood.
pub fn is_undominated(g: &Graph, code: &VertexSet) -> Result<bool> {
    check_width(g, code)?;
    Ok((0..g.order()).all(|v| !code.is_subset(g.ball_ref(v))))
}

/// A graph admits an identifying code iff no two closed neighborhoods
/// coincide (the full vertex set is then such a code).
pub fn is_identifiable(g: &Graph) -> bool {
    let mut seen = HashSet::with_capacity(g.order());
    (0..g.order()).all(|v| seen.insert(g.ball_ref(v)))
}

/// Closed-form parameter values for canonically labeled paths and cycles.
///
/// Returns `Ok(None)` when the value is outside the range the formula is
/// valid for; callers fall back to exact search. `n` is the graph order.
pub fn closed_form(kind: CodeKind, family: Family, n: usize) -> Result<Option<usize>> {
    match family {
        Family::Path if n < 2 => return Err(Error::TooFewVertices(n)),
        Family::Cycle if n < 3 => return Err(Error::TooFewVertices(n)),
        _ => {}
    }
    let value = match (kind, family) {
        (CodeKind::Identifying, Family::Path) if n >= 3 => Some(n / 2 + 1),
        (CodeKind::Identifying, Family::Cycle) if n >= 6 => {
            Some(if n % 2 == 0 { n / 2 } else { (n + 3) / 2 })
        }
        (CodeKind::Separating | CodeKind::SeparatingUndominated, Family::Path) if n >= 7 => {
            Some(n / 2 + 1)
        }
        (CodeKind::Separating | CodeKind::SeparatingUndominated, Family::Cycle)
            if (n % 2 == 0 && n >= 8) || (n % 2 == 1 && n >= 13) =>
        {
            Some(if n % 2 == 0 { n / 2 } else { (n + 3) / 2 })
        }
        _ => None,
    };
    Ok(value)
}

// ---------------------------------------------------------------------------
// Exact search
// ---------------------------------------------------------------------------

/// Lexicographic subset search for a minimum hitting set.
///
/// Prunes a prefix when the remaining slots cannot pay for a greedy packing
/// of pairwise-disjoint unhit constraints (restricted to the still-choosable
/// suffix), and skips candidate vertices that hit nothing currently unhit:
/// at the minimum cardinality every member of every optimal set hits some
/// constraint unhit by its predecessors, so neither rule can lose the
/// lexicographically least optimum.
struct SubsetSearch {
    n: usize,
    constraints: Vec<Vec<u64>>,
    /// Constraint ids in ascending size order; processing small sets first
    /// makes the greedy disjoint packing tighter.
    order: Vec<u32>,
    /// For each vertex, the constraints containing it.
    members: Vec<Vec<u32>>,
    hits: Vec<u32>,
    unhit: usize,
    chosen: Vec<usize>,
    scratch: Vec<u64>,
}

impl SubsetSearch {
    /// Returns `None` if some constraint is empty (no hitting set exists).
    fn new(n: usize, sets: &[VertexSet]) -> Option<SubsetSearch> {
        if sets.iter().any(VertexSet::is_empty) {
            return None;
        }
        // Deduplicate, then drop any constraint that contains another:
        // hitting the smaller set hits the larger one for free.
        let mut unique: Vec<&VertexSet> = {
            let mut seen = HashSet::new();
            sets.iter().filter(|s| seen.insert(s.words().to_vec())).collect()
        };
        unique.sort_by_key(|s| s.len());
        let mut kept: Vec<&VertexSet> = Vec::with_capacity(unique.len());
        'next: for s in unique {
            for k in &kept {
                if k.is_subset(s) {
                    continue 'next;
                }
            }
            kept.push(s);
        }

        let constraints: Vec<Vec<u64>> = kept.iter().map(|s| s.words().to_vec()).collect();
        let order: Vec<u32> = (0..constraints.len() as u32).collect();
        let mut members = vec![Vec::new(); n];
        for (ci, s) in kept.iter().enumerate() {
            for v in s.iter() {
                members[v].push(ci as u32);
            }
        }
        let nwords = n.div_ceil(64);
        let unhit = constraints.len();
        Some(SubsetSearch {
            n,
            constraints,
            order,
            members,
            hits: vec![0; unhit],
            unhit,
            chosen: Vec::new(),
            scratch: vec![0; nwords],
        })
    }

    fn choose(&mut self, v: usize) {
        self.chosen.push(v);
        for &ci in &self.members[v] {
            let h = &mut self.hits[ci as usize];
            if *h == 0 {
                self.unhit -= 1;
            }
            *h += 1;
        }
    }

    fn unchoose(&mut self, v: usize) {
        self.chosen.pop();
        for &ci in &self.members[v] {
            let h = &mut self.hits[ci as usize];
            *h -= 1;
            if *h == 0 {
                self.unhit += 1;
            }
        }
    }

    /// Greedy count of pairwise-disjoint unhit constraints, restricted to
    /// vertices `>= from`. Each one needs its own vertex, so this is a valid
    /// lower bound on the vertices still required. `None` means some unhit
    /// constraint has no choosable vertex left at all.
    fn lower_bound(&mut self, from: usize) -> Option<usize> {
        for w in self.scratch.iter_mut() {
            *w = 0;
        }
        let w0 = from / 64;
        let mask0 = !0u64 << (from % 64);
        let mut count = 0;
        for &ci in &self.order {
            if self.hits[ci as usize] > 0 {
                continue;
            }
            let c = &self.constraints[ci as usize];
            if w0 >= c.len() {
                return None;
            }
            let mut any = false;
            let mut disjoint = true;
            for wi in w0..c.len() {
                let cw = if wi == w0 { c[wi] & mask0 } else { c[wi] };
                if cw != 0 {
                    any = true;
                    if cw & self.scratch[wi] != 0 {
                        disjoint = false;
                    }
                }
            }
            if !any {
                return None;
            }
            if disjoint {
                count += 1;
                for wi in w0..c.len() {
                    let cw = if wi == w0 { c[wi] & mask0 } else { c[wi] };
                    self.scratch[wi] |= cw;
                }
            }
        }
        Some(count)
    }

    /// Depth-first extension of the current prefix with exactly `slots`
    /// more vertices, all `>= pos`, in lexicographic order.
    fn dfs(&mut self, pos: usize, slots: usize) -> bool {
        if slots == 0 {
            return self.unhit == 0;
        }
        match self.lower_bound(pos) {
            None => return false,
            Some(lb) if lb > slots => return false,
            _ => {}
        }
        let last = self.n - slots;
        for v in pos..=last {
            if self.members[v].iter().all(|&ci| self.hits[ci as usize] > 0) {
                continue;
            }
            self.choose(v);
            if self.dfs(v + 1, slots - 1) {
                return true;
            }
            self.unchoose(v);
        }
        false
    }
}

/// Minimum set of vertices meeting every constraint, lexicographically least
/// among minimum ones. `None` when some constraint is empty.
fn min_hitting_set(n: usize, sets: &[VertexSet], start_k: usize) -> Option<(usize, VertexSet)> {
    let mut search = SubsetSearch::new(n, sets)?;
    let root_lb = search.lower_bound(0).expect("nonempty constraints have a bound");
    let start = start_k.max(root_lb).max(1);
    for k in start..=n {
        if search.dfs(0, k) {
            let witness = VertexSet::from_indices(n, search.chosen.iter().copied());
            return Some((k, witness));
        }
    }
    None
}

fn separation_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut sets = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            sets.push(g.ball_ref(x).symmetric_difference(g.ball_ref(y)));
        }
    }
    sets
}

/// Smallest power-of-two style bound: a code `C` assigns each of the `n`
/// vertices a distinct nonempty subset of `C`, so `2^|C| - 1 >= n`.
fn identifying_lower_bound(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// Exact solver with a configurable graph-order cap.
#[derive(Clone, Copy, Debug)]
pub struct Solver {
    pub cap: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { cap: DEFAULT_SEARCH_CAP }
    }
}

impl Solver {
    pub fn with_cap(cap: usize) -> Solver {
        Solver { cap }
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if g.order() > self.cap {
            Err(Error::TooLargeForExactSearch {
                order: g.order(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn require_identifiable(&self, g: &Graph) -> Result<()> {
        if is_identifiable(g) {
            Ok(())
        } else {
            Err(Error::NotIdentifiable)
        }
    }

    /// Minimum identifying code and its size.
    pub fn min_identifying_code(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        self.admit(g)?;
        self.require_identifiable(g)?;
        let mut sets = separation_sets(g);
        sets.extend((0..g.order()).map(|v| g.ball_ref(v).clone()));
        let start = identifying_lower_bound(g.order());
        Ok(min_hitting_set(g.order(), &sets, start).expect("identifiable graphs admit a code"))
    }

    /// Minimum separating code and its size.
    pub fn min_separating_code(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        self.admit(g)?;
        self.require_identifiable(g)?;
        let sets = separation_sets(g);
        Ok(min_hitting_set(g.order(), &sets, 1).expect("identifiable graphs admit a separating code"))
    }

    /// Minimum separating code not contained in any closed neighborhood.
    /// Undefined (even for identifiable graphs) exactly when some vertex
    /// dominates the whole graph.
    pub fn min_separating_undominated_code(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        self.admit(g)?;
        self.require_identifiable(g)?;
        let mut sets = separation_sets(g);
        sets.extend((0..g.order()).map(|v| g.ball_ref(v).complement()));
        min_hitting_set(g.order(), &sets, 1).ok_or(Error::UndefinedParameter)
    }

    pub fn solve(&self, g: &Graph, kind: CodeKind) -> Result<(usize, VertexSet)> {
        match kind {
            CodeKind::Identifying => self.min_identifying_code(g),
            CodeKind::Separating => self.min_separating_code(g),
            CodeKind::SeparatingUndominated => self.min_separating_undominated_code(g),
        }
    }

    /// All three parameters of one graph: closed form when the graph is a
    /// canonically labeled path or cycle inside a formula's validity range,
    /// exact search otherwise. Field-level failures (cap refusals,
    /// undefined parameters) do not abort the other fields.
    pub fn full_report(&self, g: &Graph) -> CodeReport {
        if !is_identifiable(g) {
            return CodeReport {
                identifiable: false,
                identifying: ParamOutcome::Undefined,
                separating: ParamOutcome::Undefined,
                separating_undominated: ParamOutcome::Undefined,
            };
        }
        let family = if g.is_canonical_path() {
            Some(Family::Path)
        } else if g.is_canonical_cycle() {
            Some(Family::Cycle)
        } else {
            None
        };
        let field = |kind: CodeKind| -> ParamOutcome {
            if let Some(fam) = family {
                if let Ok(Some(value)) = closed_form(kind, fam, g.order()) {
                    return ParamOutcome::Known {
                        value,
                        method: Method::ClosedForm,
                        witness: None,
                    };
                }
            }
            match self.solve(g, kind) {
                Ok((value, witness)) => ParamOutcome::Known {
                    value,
                    method: Method::ExactSearch,
                    witness: Some(witness),
                },
                Err(Error::UndefinedParameter) => ParamOutcome::Undefined,
                Err(Error::TooLargeForExactSearch { order, cap }) => {
                    ParamOutcome::Refused { order, cap }
                }
                Err(e) => unreachable!("unexpected solver error: {e}"),
            }
        };
        CodeReport {
            identifiable: true,
            identifying: field(CodeKind::Identifying),
            separating: field(CodeKind::Separating),
            separating_undominated: field(CodeKind::SeparatingUndominated),
        }
    }
}

/// How a parameter value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    ExactSearch,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed_form"),
            Method::ExactSearch => write!(f, "exact_search"),
        }
    }
}

/// Result of one parameter computation inside a [`CodeReport`].
#[derive(Clone, Debug, PartialEq)]
pub enum ParamOutcome {
    Known {
        value: usize,
        method: Method,
        /// Lexicographically least minimum code; absent when the value came
        /// from a closed form.
        witness: Option<VertexSet>,
    },
    /// The parameter does not exist for this graph.
    Undefined,
    /// The graph exceeds the exact-search cap.
    Refused { order: usize, cap: usize },
}

impl ParamOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            ParamOutcome::Known { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            ParamOutcome::Known { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }

    pub fn is_refused(&self) -> bool {
        matches!(self, ParamOutcome::Refused { .. })
    }
}

/// Identifiability plus the three parameters of one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeReport {
    pub identifiable: bool,
    pub identifying: ParamOutcome,
    pub separating: ParamOutcome,
    pub separating_undominated: ParamOutcome,
}
