//! Hopcroft–Karp maximum bipartite matching plus the König vertex cover it
//! certifies.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

pub struct BipartiteMatching {
    /// `left_mate[u]` is the right vertex matched to `u`, if any.
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
    pub size: usize,
}

pub fn maximum_matching(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    debug_assert_eq!(adj.len(), n_left);
    let mut left = vec![NIL; n_left];
    let mut right = vec![NIL; n_right];
    let mut dist = vec![0usize; n_left];
    let mut size = 0;

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if left[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = right[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; n_left];
        for u in 0..n_left {
            if left[u] == NIL && augment(u, adj, &mut left, &mut right, &mut dist, &mut it) {
                size += 1;
            }
        }
    }

    BipartiteMatching {
        left_mate: left.iter().map(|&v| (v != NIL).then_some(v)).collect(),
        right_mate: right.iter().map(|&u| (u != NIL).then_some(u)).collect(),
        size,
    }
}

// Iterative DFS along the BFS layering.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    left: &mut [usize],
    right: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    let mut stack: Vec<usize> = vec![root];
    while let Some(&u) = stack.last() {
        if it[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            continue;
        }
        let v = adj[u][it[u]];
        it[u] += 1;
        let w = right[v];
        if w == NIL {
            // Flip the path recorded on the stack.
            let mut v = v;
            while let Some(u) = stack.pop() {
                let prev = left[u];
                left[u] = v;
                right[v] = u;
                v = prev;
            }
            return true;
        }
        if dist[w] == dist[u] + 1 {
            stack.push(w);
        }
    }
    false
}

impl BipartiteMatching {
    /// Left/right vertices reachable from free left vertices by alternating
    /// paths. The complement on the left plus the reached right vertices is a
    /// minimum vertex cover.
    pub fn konig_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut reach_left = vec![false; self.left_mate.len()];
        let mut reach_right = vec![false; self.right_mate.len()];
        let mut queue = VecDeque::new();
        for (u, m) in self.left_mate.iter().enumerate() {
            if m.is_none() {
                reach_left[u] = true;
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !reach_right[v] {
                    reach_right[v] = true;
                    if let Some(w) = self.right_mate[v] {
                        if !reach_left[w] {
                            reach_left[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        (reach_left, reach_right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_on_cycle() {
        let adj = vec![vec![0, 1], vec![1, 2], vec![2, 0]];
        let m = maximum_matching(3, 3, &adj);
        assert_eq!(m.size, 3);
    }

    #[test]
    fn star_matches_once() {
        let adj = vec![vec![0], vec![0], vec![0]];
        let m = maximum_matching(3, 1, &adj);
        assert_eq!(m.size, 1);
        let (rl, rr) = m.konig_reach(&adj);
        let cover = rl.iter().filter(|r| !**r).count() + rr.iter().filter(|r| **r).count();
        assert_eq!(cover, 1);
    }
}
