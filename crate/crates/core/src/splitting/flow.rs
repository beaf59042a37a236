//! Maximum flow by shortest augmenting paths on a small dense network.

use std::collections::VecDeque;

pub(crate) struct FlowNetwork {
    capacity: Vec<Vec<i64>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            capacity: vec![vec![0; nodes]; nodes],
        }
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, capacity: i64) {
        if from != to {
            self.capacity[from][to] = self.capacity[from][to].saturating_add(capacity);
        }
    }

    pub(crate) fn max_flow(mut self, source: usize, sink: usize) -> i64 {
        let n = self.capacity.len();
        let mut total = 0;
        loop {
            let mut parent = vec![usize::MAX; n];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (v, &cap) in self.capacity[u].iter().enumerate() {
                    if parent[v] == usize::MAX && cap > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return total;
            }
            let mut push = i64::MAX;
            let mut v = sink;
            while v != source {
                let u = parent[v];
                push = push.min(self.capacity[u][v]);
                v = u;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v];
                self.capacity[u][v] -= push;
                self.capacity[v][u] = self.capacity[v][u].saturating_add(push);
                v = u;
            }
            total += push;
        }
    }
}
