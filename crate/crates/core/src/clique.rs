//! Exact maximum clique on small graphs.
//!
//! Used for maximum dissimilar-word sets and maximum fooling sets. The
//! graphs here are small (hundreds of vertices) and close to unions of
//! cliques, so a greedy seed plus branch and bound with a coloring bound is
//! plenty.

type Bits = Vec<u64>;

fn test_bit(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn clear_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

fn popcount(bits: &Bits) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn first_bit(bits: &Bits) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &word)| word != 0)
        .map(|(w, &word)| w * 64 + word.trailing_zeros() as usize)
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Vertices of a maximum clique of the graph given by its adjacency
/// bit matrix. Deterministic.
pub(crate) fn max_clique(n: usize, adj: &[Bits]) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    // Greedy seed in vertex order.
    let words = (n + 63) / 64;
    let mut seed = Vec::new();
    for v in 0..n {
        if seed.iter().all(|&u| test_bit(&adj[u], v)) {
            seed.push(v);
        }
    }
    let mut best = seed;
    let mut candidates = vec![0u64; words];
    for v in 0..n {
        set_bit(&mut candidates, v);
    }
    let mut current = Vec::new();
    expand(adj, &candidates, &mut current, &mut best);
    best.sort_unstable();
    best
}

/// Greedy coloring upper bound: vertices of `cand` grouped into color
/// classes of mutually non-adjacent vertices. Returns vertices in an order
/// such that the vertex at position `i` has bound `color[i]`.
fn color_sort(adj: &[Bits], cand: &Bits) -> Vec<(usize, usize)> {
    let mut remaining = cand.clone();
    let mut ordered = Vec::new();
    let mut color = 0;
    while popcount(&remaining) > 0 {
        color += 1;
        let mut class_pool = remaining.clone();
        while let Some(v) = first_bit(&class_pool) {
            clear_bit(&mut class_pool, v);
            clear_bit(&mut remaining, v);
            ordered.push((v, color));
            // Drop neighbours of v from this color class.
            for w in 0..class_pool.len() {
                class_pool[w] &= !adj[v][w];
            }
        }
    }
    ordered
}

fn expand(adj: &[Bits], cand: &Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let ordered = color_sort(adj, cand);
    let mut cand = cand.clone();
    for &(v, bound) in ordered.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let next = and(&cand, &adj[v]);
        if popcount(&next) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, &next, current, best);
        }
        current.pop();
        clear_bit(&mut cand, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bits> {
        let words = (n + 63) / 64;
        let mut adj = vec![vec![0u64; words]; n];
        for &(u, v) in edges {
            set_bit(&mut adj[u], v);
            set_bit(&mut adj[v], u);
        }
        adj
    }

    #[test]
    fn finds_the_larger_of_two_overlapping_cliques() {
        let adj = graph(
            6,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (2, 4), (2, 5)],
        );
        assert_eq!(max_clique(6, &adj), vec![2, 3, 4, 5]);
    }

    #[test]
    fn handles_edgeless_and_empty_graphs() {
        assert_eq!(max_clique(0, &[]), Vec::<usize>::new());
        let adj = graph(3, &[]);
        assert_eq!(max_clique(3, &adj).len(), 1);
    }
}
