use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::reduction::graph_build;
use crate::reduction::{successors_unchecked, Edge, ReductionGraph, StepFilter, StepRecord, DEFAULT_CAP};
use crate::redex;
use crate::syntax::{to_canonical, CalculusProfile, Term};

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Vec<StepRecord>),
    NotFound,
    /// The bounds were hit before the goal was found.
    Truncated,
}

/// A reached term, the parent index and step that reached it, and its depth.
type Node = (Term, Option<(usize, StepRecord)>, usize);

/// Breadth-first search along admitted steps for a term satisfying `goal`.
pub(crate) fn search(
    start: &Term,
    profile: &CalculusProfile,
    admit: impl Fn(&StepRecord) -> bool,
    goal: impl Fn(&Term) -> bool,
    fuel: usize,
    cap: usize,
) -> SearchOutcome {
    if goal(start) {
        return SearchOutcome::Found(Vec::new());
    }
    let mut nodes: Vec<Node> = vec![(start.clone(), None, 0)];
    let mut seen = HashMap::from([(to_canonical(start), 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(i) = queue.pop_front() {
        let depth = nodes[i].2;
        for step in successors_unchecked(&nodes[i].0, profile, &StepFilter::All) {
            if !admit(&step) {
                continue;
            }
            let c = to_canonical(&step.to);
            if seen.contains_key(&c) {
                continue;
            }
            if depth >= fuel || nodes.len() >= cap {
                truncated = true;
                continue;
            }
            let hit = goal(&step.to);
            let j = nodes.len();
            seen.insert(c, j);
            nodes.push((step.to.clone(), Some((i, step)), depth + 1));
            if hit {
                let mut path = Vec::new();
                let mut k = j;
                while let Some((p, s)) = &nodes[k].1 {
                    path.push(s.clone());
                    k = *p;
                }
                path.reverse();
                return SearchOutcome::Found(path);
            }
            queue.push_back(j);
        }
    }
    if truncated {
        SearchOutcome::Truncated
    } else {
        SearchOutcome::NotFound
    }
}

pub(crate) fn edge_record(g: &ReductionGraph, e: &Edge) -> StepRecord {
    StepRecord {
        from: g.nodes[e.source].clone(),
        redex: e.redex.clone(),
        to: g.nodes[e.target].clone(),
        class: e.class,
    }
}

/// Any path from node 0 to `target`, by breadth-first search over all edges.
pub(crate) fn any_path(g: &ReductionGraph, target: usize) -> Vec<StepRecord> {
    let out = g.out_edges();
    let mut parent: Vec<Option<usize>> = vec![None; g.nodes.len()];
    let mut seen = vec![false; g.nodes.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &e in &out[i] {
            let t = g.edges[e].target;
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some(e);
                queue.push_back(t);
            }
        }
    }
    let mut path = Vec::new();
    let mut k = target;
    while let Some(e) = parent[k] {
        path.push(edge_record(g, &g.edges[e]));
        k = g.edges[e].source;
    }
    path.reverse();
    path
}

const EXTERNAL: usize = 0;
const INTERNAL: usize = 1;

/// Reachability from node 0 by least-level edges followed by internal edges.
/// State `2 * node + phase`; the parent is the previous state and the edge taken.
pub(crate) struct TwoPhase {
    parent: Vec<Option<(usize, Option<usize>)>>,
    reached: Vec<bool>,
}

impl TwoPhase {
    pub fn run(g: &ReductionGraph) -> TwoPhase {
        let n = g.nodes.len();
        let out = g.out_edges();
        let mut reached = vec![false; 2 * n];
        let mut parent = vec![None; 2 * n];
        if n == 0 {
            return TwoPhase { parent, reached };
        }
        reached[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let (node, phase) = (s / 2, s % 2);
            let mut visit = |next: usize, via: Option<usize>, queue: &mut VecDeque<usize>| {
                if !reached[next] {
                    reached[next] = true;
                    parent[next] = Some((s, via));
                    queue.push_back(next);
                }
            };
            if phase == EXTERNAL {
                visit(2 * node + INTERNAL, None, &mut queue);
            }
            for &e in &out[node] {
                let edge = &g.edges[e];
                if phase == EXTERNAL && edge.class.least_level {
                    visit(2 * edge.target + EXTERNAL, Some(e), &mut queue);
                }
                if edge.class.internal {
                    visit(2 * edge.target + INTERNAL, Some(e), &mut queue);
                }
            }
        }
        TwoPhase { parent, reached }
    }

    pub fn reaches(&self, node: usize) -> bool {
        self.reached[2 * node] || self.reached[2 * node + 1]
    }

    /// The least-level prefix and the internal suffix of a path to `node`.
    pub fn witness(&self, g: &ReductionGraph, node: usize) -> Option<(Vec<StepRecord>, Vec<StepRecord>)> {
        let mut s = if self.reached[2 * node] {
            2 * node
        } else if self.reached[2 * node + 1] {
            2 * node + 1
        } else {
            return None;
        };
        let mut prefix = Vec::new();
        let mut suffix = Vec::new();
        while let Some((prev, via)) = self.parent[s] {
            if let Some(e) = via {
                let rec = edge_record(g, &g.edges[e]);
                if s % 2 == EXTERNAL {
                    prefix.push(rec);
                } else {
                    suffix.push(rec);
                }
            }
            s = prev;
        }
        prefix.reverse();
        suffix.reverse();
        Some((prefix, suffix))
    }
}

#[derive(Clone, Debug)]
pub enum Witness {
    Found {
        prefix: Vec<StepRecord>,
        suffix: Vec<StepRecord>,
    },
    NotFound,
    Inconclusive,
}

/// Looks for `t ⊸ll* · int* u` inside the reduction graph of `t` bounded by
/// `fuel` steps and the default node cap.
pub fn factorization_witness(t: &Term, u: &Term, profile: &CalculusProfile, fuel: usize) -> Result<Witness> {
    redex::enumerate_redexes(t, profile)?;
    let g = graph_build(t, profile, fuel, DEFAULT_CAP);
    let Some(j) = g.find(u) else {
        return if g.truncated {
            Ok(Witness::Inconclusive)
        } else {
            Err(Error::Unreachable)
        };
    };
    let tp = TwoPhase::run(&g);
    Ok(match tp.witness(&g, j) {
        Some((prefix, suffix)) => Witness::Found { prefix, suffix },
        None if g.truncated => Witness::Inconclusive,
        None => Witness::NotFound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    const R: &str = r"(\x.x) !z";

    #[test]
    fn single_least_level_step() {
        let w = factorization_witness(&p(&format!("x !({R})")), &p("x !z"), &CalculusProfile::bang(), 10).unwrap();
        let Witness::Found { prefix, suffix } = w else {
            panic!("expected a witness")
        };
        assert_eq!(prefix.len(), 1);
        assert_eq!(prefix[0].redex.level, 1);
        assert!(suffix.is_empty());
    }

    #[test]
    fn empty_factorization() {
        let t = p(&format!("x !({R})"));
        let Witness::Found { prefix, suffix } = factorization_witness(&t, &t, &CalculusProfile::bang(), 10).unwrap() else {
            panic!("expected a witness")
        };
        assert!(prefix.is_empty() && suffix.is_empty());
    }

    #[test]
    fn mixed_witness_composes() {
        let t = p(&format!(r"(\z.{R}) !({R})"));
        let u = p(r"(\z.z) !z");
        let Witness::Found { prefix, suffix } = factorization_witness(&t, &u, &CalculusProfile::bang(), 10).unwrap() else {
            panic!("expected a witness")
        };
        let steps: Vec<_> = prefix.iter().chain(&suffix).collect();
        assert_eq!(steps.first().unwrap().from, t);
        assert_eq!(steps.last().unwrap().to, u);
        assert!(prefix.iter().all(|s| s.class.least_level));
        assert!(suffix.iter().all(|s| s.class.internal));
        for w in steps.windows(2) {
            assert_eq!(w[0].to, w[1].from);
        }
    }

    #[test]
    fn unreachable_target_is_an_error() {
        let r = factorization_witness(&p("x"), &p("y"), &CalculusProfile::bang(), 10);
        assert!(matches!(r, Err(Error::Unreachable)));
    }

    #[test]
    fn bounded_search() {
        let prof = CalculusProfile::bang();
        let t = p(&format!("({R}) !({R})"));
        let found = search(&t, &prof, |_| true, |u| *u == p("z !z"), 10, 100);
        assert!(matches!(found, SearchOutcome::Found(ref v) if v.len() == 2));
        let none = search(&t, &prof, |s| s.class.internal, |u| *u == p("z !z"), 10, 100);
        assert!(matches!(none, SearchOutcome::NotFound));
    }
}
