//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Bipartite graph with `left` and `right` vertex counts and adjacency lists
/// from left to right.
pub struct Bipartite {
    adj: Vec<Vec<usize>>,
    right: usize,
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            adj: vec![Vec::new(); left],
            right,
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        self.adj[l].push(r);
    }

    /// Size of a maximum matching.
    pub fn max_matching(&self) -> usize {
        let n = self.adj.len();
        let mut match_l = vec![NIL; n];
        let mut match_r = vec![NIL; self.right];
        let mut dist = vec![0usize; n];
        let mut size = 0;
        while self.bfs(&match_l, &match_r, &mut dist) {
            for l in 0..n {
                if match_l[l] == NIL && self.dfs(l, &mut match_l, &mut match_r, &mut dist) {
                    size += 1;
                }
            }
        }
        size
    }

    fn bfs(&self, match_l: &[usize], match_r: &[usize], dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for l in 0..self.adj.len() {
            if match_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = NIL;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.adj[l] {
                let next = match_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next] == NIL {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        found
    }

    fn dfs(&self, l: usize, match_l: &mut [usize], match_r: &mut [usize], dist: &mut [usize]) -> bool {
        for &r in &self.adj[l] {
            let next = match_r[r];
            if next == NIL || (dist[next] == dist[l] + 1 && self.dfs(next, match_l, match_r, dist)) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        dist[l] = NIL;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_and_deficient() {
        let mut b = Bipartite::new(3, 3);
        for (l, r) in [(0, 0), (0, 1), (1, 0), (2, 2)] {
            b.add_edge(l, r);
        }
        assert_eq!(b.max_matching(), 3);

        let mut b = Bipartite::new(3, 3);
        for (l, r) in [(0, 0), (1, 0), (2, 0), (2, 1)] {
            b.add_edge(l, r);
        }
        assert_eq!(b.max_matching(), 2);
    }

    #[test]
    fn augmenting_path_needed() {
        // greedy 0-0 blocks 1; HK must reroute 0 to 1
        let mut b = Bipartite::new(2, 2);
        b.add_edge(0, 0);
        b.add_edge(0, 1);
        b.add_edge(1, 0);
        assert_eq!(b.max_matching(), 2);
    }
}
