use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::syntax::{from_canonical, Calculus, CalculusProfile, CanonicalTerm, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenMode {
    Exhaustive { max_size: usize },
    Random { count: usize, max_size: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct GenSpec {
    pub mode: GenMode,
    pub profile: CalculusProfile,
    pub free_var_pool: usize,
    pub include_ops: bool,
}

impl GenSpec {
    pub fn exhaustive(profile: CalculusProfile, max_size: usize) -> GenSpec {
        GenSpec {
            mode: GenMode::Exhaustive { max_size },
            include_ops: profile.has_op_rules(),
            profile,
            free_var_pool: 2,
        }
    }

    pub fn random(profile: CalculusProfile, count: usize, max_size: usize, seed: u64) -> GenSpec {
        GenSpec {
            mode: GenMode::Random { count, max_size, seed },
            include_ops: profile.has_op_rules(),
            profile,
            free_var_pool: 2,
        }
    }

    pub fn with_pool(mut self, pool: usize) -> GenSpec {
        self.free_var_pool = pool;
        self
    }

    pub fn with_ops(mut self, include_ops: bool) -> GenSpec {
        self.include_ops = include_ops;
        self
    }
}

/// Names of the free variables: `x, y, z, w, u, v`, then `x1, x2, ...`.
pub fn pool_names(n: usize) -> Vec<String> {
    const FIRST: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    (0..n)
        .map(|i| match FIRST.get(i) {
            Some(s) => s.to_string(),
            None => format!("x{}", i - FIRST.len() + 1),
        })
        .collect()
}

/// Exhaustive mode lists every α-class once, by increasing size. Random mode
/// draws uniformly among all terms of size at most `max_size`.
pub fn gen_terms(spec: &GenSpec) -> Vec<Term> {
    let mut g = Grammar::new(spec);
    match spec.mode {
        GenMode::Exhaustive { max_size } => {
            let mut out = Vec::new();
            for n in 1..=max_size {
                for r in 0..g.count(n, 0) {
                    out.push(from_canonical(&g.unrank(n, 0, r)));
                }
            }
            out
        }
        GenMode::Random { count, max_size, seed } => {
            let totals: Vec<u128> = (1..=max_size).map(|n| g.count(n, 0)).collect();
            let total: u128 = totals.iter().sum();
            if total == 0 {
                return Vec::new();
            }
            let mut rng = StdRng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut r = rng.random_range(0..total);
                    let mut n = 1;
                    for &c in &totals {
                        if r < c {
                            break;
                        }
                        r -= c;
                        n += 1;
                    }
                    from_canonical(&g.unrank(n, 0, r))
                })
                .collect()
        }
    }
}

/// Number of α-classes of each size `1..=max_size`.
pub fn count_by_size(spec: &GenSpec, max_size: usize) -> Vec<u128> {
    let mut g = Grammar::new(spec);
    (1..=max_size).map(|n| g.count(n, 0)).collect()
}

// Canonical terms of size n with d binders in scope, in a fixed order:
// variables, abstraction, box, applications by left size, operators.
struct Grammar {
    free: Vec<String>,
    bang: bool,
    ops: Vec<(String, usize)>,
    counts: HashMap<(usize, usize), u128>,
    tuples: HashMap<(usize, usize, usize), u128>,
}

impl Grammar {
    fn new(spec: &GenSpec) -> Grammar {
        let ops = if spec.include_ops {
            spec.profile
                .registry()
                .iter()
                .map(|s| (s.name.clone(), s.arity))
                .collect()
        } else {
            Vec::new()
        };
        Grammar {
            free: pool_names(spec.free_var_pool),
            bang: spec.profile.calculus == Calculus::Bang,
            ops,
            counts: HashMap::new(),
            tuples: HashMap::new(),
        }
    }

    fn nullary(&self) -> usize {
        self.ops.iter().filter(|(_, k)| *k == 0).count()
    }

    fn count(&mut self, n: usize, d: usize) -> u128 {
        if n == 0 {
            return 0;
        }
        if let Some(&c) = self.counts.get(&(n, d)) {
            return c;
        }
        let c = if n == 1 {
            (self.free.len() + d + self.nullary()) as u128
        } else {
            let mut c = self.count(n - 1, d + 1);
            if self.bang {
                c += self.count(n - 1, d);
            }
            for a in 1..n - 1 {
                c += self.count(a, d) * self.count(n - 1 - a, d);
            }
            for k in self.ops.iter().map(|(_, k)| *k).collect::<Vec<_>>() {
                if k > 0 {
                    c += self.tuple_count(k, n - 1, d);
                }
            }
            c
        };
        self.counts.insert((n, d), c);
        c
    }

    /// k-tuples whose sizes sum to n.
    fn tuple_count(&mut self, k: usize, n: usize, d: usize) -> u128 {
        if k == 0 {
            return u128::from(n == 0);
        }
        if n < k {
            return 0;
        }
        if let Some(&c) = self.tuples.get(&(k, n, d)) {
            return c;
        }
        let mut c = 0;
        for a in 1..=n - (k - 1) {
            c += self.count(a, d) * self.tuple_count(k - 1, n - a, d);
        }
        self.tuples.insert((k, n, d), c);
        c
    }

    fn unrank(&mut self, n: usize, d: usize, mut r: u128) -> CanonicalTerm {
        if n == 1 {
            let r = r as usize;
            if r < self.free.len() {
                return CanonicalTerm::Free(self.free[r].clone());
            }
            if r < self.free.len() + d {
                return CanonicalTerm::Index(r - self.free.len());
            }
            let name = self
                .ops
                .iter()
                .filter(|(_, k)| *k == 0)
                .nth(r - self.free.len() - d)
                .expect("rank in range")
                .0
                .clone();
            return CanonicalTerm::Op(name, Vec::new());
        }
        let c = self.count(n - 1, d + 1);
        if r < c {
            return CanonicalTerm::Abs(Box::new(self.unrank(n - 1, d + 1, r)));
        }
        r -= c;
        if self.bang {
            let c = self.count(n - 1, d);
            if r < c {
                return CanonicalTerm::Bang(Box::new(self.unrank(n - 1, d, r)));
            }
            r -= c;
        }
        for a in 1..n - 1 {
            let right = self.count(n - 1 - a, d);
            let c = self.count(a, d) * right;
            if r < c {
                let f = self.unrank(a, d, r / right);
                let x = self.unrank(n - 1 - a, d, r % right);
                return CanonicalTerm::App(Box::new(f), Box::new(x));
            }
            r -= c;
        }
        for (name, k) in self.ops.clone() {
            if k == 0 {
                continue;
            }
            let c = self.tuple_count(k, n - 1, d);
            if r < c {
                return CanonicalTerm::Op(name, self.unrank_tuple(k, n - 1, d, r));
            }
            r -= c;
        }
        unreachable!("rank out of range")
    }

    fn unrank_tuple(&mut self, k: usize, n: usize, d: usize, mut r: u128) -> Vec<CanonicalTerm> {
        if k == 0 {
            return Vec::new();
        }
        for a in 1..=n - (k - 1) {
            let rest = self.tuple_count(k - 1, n - a, d);
            let c = self.count(a, d) * rest;
            if r < c {
                let mut v = vec![self.unrank(a, d, r / rest)];
                v.extend(self.unrank_tuple(k - 1, n - a, d, r % rest));
                return v;
            }
            r -= c;
        }
        unreachable!("rank out of range")
    }
}
