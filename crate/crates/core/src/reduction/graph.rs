use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use super::{successors_unchecked, StepClass, StepFilter};
use crate::error::Result;
use crate::redex::{self, Redex};
use crate::syntax::{to_canonical, CalculusProfile, CanonicalTerm, Term};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub redex: Redex,
    pub class: StepClass,
}

/// Breadth-first reduction graph, nodes deduplicated up to α.
#[derive(Clone, Debug, Default)]
pub struct ReductionGraph {
    pub nodes: Vec<Term>,
    pub canonical: Vec<CanonicalTerm>,
    pub index: HashMap<CanonicalTerm, usize>,
    pub edges: Vec<Edge>,
    /// `complete[i]`: every outgoing edge of node `i` is in the graph.
    pub complete: Vec<bool>,
    pub truncated: bool,
}

impl ReductionGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn find(&self, t: &Term) -> Option<usize> {
        self.index.get(&to_canonical(t)).copied()
    }

    pub fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.source].push(i);
        }
        out
    }

    /// Complete nodes without successors.
    pub fn normal_forms(&self) -> Vec<usize> {
        let out = self.out_edges();
        (0..self.nodes.len())
            .filter(|&i| self.complete[i] && out[i].is_empty())
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph reductions {\n");
        for (i, c) in self.canonical.iter().enumerate() {
            let label = c.to_term().to_string().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let mut label = format!("{}@{}", e.redex.rule, e.redex.level);
            if e.class.least_level {
                label.push_str(",ll");
            }
            let _ = writeln!(s, "  n{} -> n{} [label=\"{label}\"];", e.source, e.target);
        }
        s.push_str("}\n");
        s
    }

    fn add(&mut self, t: Term, c: CanonicalTerm) -> usize {
        let i = self.nodes.len();
        self.nodes.push(t);
        self.index.insert(c.clone(), i);
        self.canonical.push(c);
        self.complete.push(false);
        i
    }
}

/// All terms reachable from `t` in at most `fuel` steps, keeping at most `cap`
/// nodes. Nodes at depth `fuel` keep their edges to known nodes; an edge to a
/// new node there, or past the cap, sets `truncated`.
pub fn reachable_graph(t: &Term, profile: &CalculusProfile, fuel: usize, cap: usize) -> Result<ReductionGraph> {
    redex::enumerate_redexes(t, profile)?;
    Ok(build(t, profile, fuel, cap))
}

pub(crate) fn build(t: &Term, profile: &CalculusProfile, fuel: usize, cap: usize) -> ReductionGraph {
    let mut g = ReductionGraph::default();
    if cap == 0 {
        g.truncated = true;
        return g;
    }
    g.add(t.clone(), to_canonical(t));
    let mut depth = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut complete = true;
        for step in successors_unchecked(&g.nodes[i], profile, &StepFilter::All) {
            let c = to_canonical(&step.to);
            let target = match g.index.get(&c) {
                Some(&j) => j,
                None if depth[i] < fuel && g.nodes.len() < cap => {
                    let j = g.add(step.to, c);
                    depth.push(depth[i] + 1);
                    queue.push_back(j);
                    j
                }
                None => {
                    complete = false;
                    continue;
                }
            };
            g.edges.push(Edge {
                source: i,
                target,
                redex: step.redex,
                class: step.class,
            });
        }
        g.complete[i] = complete;
        g.truncated |= !complete;
    }
    g
}
