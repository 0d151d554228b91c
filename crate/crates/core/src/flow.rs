//! Integer max-flow (Dinic) and feasible circulation with lower bounds.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Residual network; arc `2k` is the forward half of the `k`-th added arc and
/// `2k + 1` its reverse.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    original: Vec<i64>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            original: Vec::new(),
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    pub fn nodes(&self) -> usize {
        self.adj.len()
    }

    /// Adds `from → to` with capacity `cap` and returns its arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        debug_assert!(cap >= 0);
        let id = self.original.len();
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        self.original.push(cap);
        id
    }

    pub fn flow_on(&self, arc: usize) -> i64 {
        self.original[arc] - self.arcs[2 * arc].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let Arc { to, cap } = self.arcs[e];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.cursor[u] < self.adj[u].len() {
            let e = self.adj[u][self.cursor[u]];
            let Arc { to, cap } = self.arcs[e];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[e].cap -= got;
                    self.arcs[e ^ 1].cap += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    /// Pushes as much flow as possible from `s` to `t` and returns the amount.
    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(s, t, i64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

/// Circulation problem with `lower ≤ flow ≤ upper` on every arc.
#[derive(Debug, Clone)]
pub struct Circulation {
    nodes: usize,
    arcs: Vec<(usize, usize, i64, i64)>,
}

impl Circulation {
    pub fn new(nodes: usize) -> Self {
        Circulation { nodes, arcs: Vec::new() }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64) -> usize {
        assert!(0 <= lower && lower <= upper, "bad bounds [{lower}, {upper}]");
        self.arcs.push((from, to, lower, upper));
        self.arcs.len() - 1
    }

    /// Returns a feasible flow value per arc, or `None` if no circulation
    /// satisfies the bounds. Lower bounds are moved into node excesses served
    /// from a super source and drained into a super sink.
    pub fn solve(&self) -> Option<Vec<i64>> {
        let source = self.nodes;
        let sink = self.nodes + 1;
        let mut net = FlowNetwork::new(self.nodes + 2);
        let mut excess = vec![0i64; self.nodes];
        let ids: Vec<usize> = self
            .arcs
            .iter()
            .map(|&(u, v, lo, hi)| {
                excess[v] += lo;
                excess[u] -= lo;
                net.add_arc(u, v, hi - lo)
            })
            .collect();
        let mut demand = 0;
        for (v, &ex) in excess.iter().enumerate() {
            if ex > 0 {
                net.add_arc(source, v, ex);
                demand += ex;
            } else if ex < 0 {
                net.add_arc(v, sink, -ex);
            }
        }
        if net.max_flow(source, sink) != demand {
            return None;
        }
        Some(self.arcs.iter().zip(ids).map(|(&(_, _, lo, _), id)| lo + net.flow_on(id)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_flow_small() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 2, 1);
        net.add_arc(1, 3, 2);
        net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3), 5);
    }

    #[test]
    fn circulation_respects_bounds() {
        let mut c = Circulation::new(3);
        let a = c.add_arc(0, 1, 2, 4);
        let b = c.add_arc(1, 2, 0, 3);
        let r = c.add_arc(2, 0, 1, 10);
        let flow = c.solve().unwrap();
        assert!(flow[a] >= 2 && flow[a] <= 3);
        assert_eq!(flow[a], flow[b]);
        assert_eq!(flow[b], flow[r]);
    }

    #[test]
    fn circulation_infeasible() {
        let mut c = Circulation::new(2);
        c.add_arc(0, 1, 3, 3);
        c.add_arc(1, 0, 0, 2);
        assert!(c.solve().is_none());
    }
}
