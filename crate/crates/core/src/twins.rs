//! Equivalence classes of vertices under shared neighborhoods.
//!
//! Two vertices are equivalent when their closed neighborhoods coincide
//! (closed twins — such a class is a clique) or their open neighborhoods
//! coincide (open twins — such a class is an independent set). Vertices
//! equivalent to nothing else form singleton classes. The excess counts
//! `s` and `t` (members beyond one representative per closed-twin and
//! open-twin class) are what the product formulas consume.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct TwinPartition {
    order: usize,
    /// Singleton classes, ascending by member.
    pub singleton_classes: Vec<VertexSet>,
    /// Closed-twin classes (equal closed neighborhoods), each of size >= 2,
    /// ascending by minimum member.
    pub closed_twin_classes: Vec<VertexSet>,
    /// Open-twin classes (equal open neighborhoods), each of size >= 2,
    /// ascending by minimum member.
    pub open_twin_classes: Vec<VertexSet>,
    /// Minimum member of each closed-twin class.
    pub closed_reps: Vec<usize>,
    /// Minimum member of each open-twin class.
    pub open_reps: Vec<usize>,
    /// Total closed-twin members beyond one representative per class.
    pub s: usize,
    /// Total open-twin members beyond one representative per class.
    pub t: usize,
}

/// The partition with one representative pulled out of every twin class:
/// `base` holds all singleton members and all representatives, and each
/// entry of `closed_rest` / `open_rest` is a twin class minus its
/// representative. The three parts partition the vertex set.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedPartition {
    pub base: VertexSet,
    pub closed_rest: Vec<VertexSet>,
    pub open_rest: Vec<VertexSet>,
}

impl TwinPartition {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn reduced(&self) -> ReducedPartition {
        let mut base = VertexSet::empty(self.order);
        for class in &self.singleton_classes {
            base = base.union(class);
        }
        for &rep in self.closed_reps.iter().chain(&self.open_reps) {
            base.insert(rep);
        }
        let strip = |classes: &[VertexSet], reps: &[usize]| {
            classes
                .iter()
                .zip(reps)
                .map(|(class, &rep)| {
                    let mut rest = class.clone();
                    rest.remove(rep);
                    rest
                })
                .collect()
        };
        ReducedPartition {
            base,
            closed_rest: strip(&self.closed_twin_classes, &self.closed_reps),
            open_rest: strip(&self.open_twin_classes, &self.open_reps),
        }
    }
}

/// Sweeps vertices in ascending order; each unclassified vertex collects the
/// later vertices sharing its closed neighborhood, or failing that its open
/// neighborhood. A vertex collecting nothing is a singleton class.
pub fn twin_classes(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut classified = vec![false; n];
    let mut singleton_classes = Vec::new();
    let mut closed_twin_classes = Vec::new();
    let mut open_twin_classes = Vec::new();
    let mut closed_reps = Vec::new();
    let mut open_reps = Vec::new();

    for i in 0..n {
        if classified[i] {
            continue;
        }
        classified[i] = true;
        let mut closed = VertexSet::from_indices(n, [i]);
        let mut open = VertexSet::from_indices(n, [i]);
        for j in i + 1..n {
            if classified[j] {
                continue;
            }
            if g.ball_ref(j) == g.ball_ref(i) {
                closed.insert(j);
                classified[j] = true;
            } else if g.neighbors(j) == g.neighbors(i) {
                open.insert(j);
                classified[j] = true;
            }
        }
        if closed.len() > 1 {
            closed_reps.push(i);
            closed_twin_classes.push(closed);
        } else if open.len() > 1 {
            open_reps.push(i);
            open_twin_classes.push(open);
        } else {
            singleton_classes.push(closed);
        }
    }

    let excess = |classes: &[VertexSet]| {
        classes.iter().map(VertexSet::len).sum::<usize>() - classes.len()
    };
    TwinPartition {
        order: n,
        s: excess(&closed_twin_classes),
        t: excess(&open_twin_classes),
        singleton_classes,
        closed_twin_classes,
        open_twin_classes,
        closed_reps,
        open_reps,
    }
}
