use crate::bits::Bits;

/// Exact maximum clique search with greedy-coloring bounds.
pub struct CliqueSearch<'a> {
    adj: &'a [Bits],
}

struct State {
    best: Bits,
    best_size: usize,
    stop_at: Option<usize>,
    done: bool,
}

impl<'a> CliqueSearch<'a> {
    pub fn new(adj: &'a [Bits]) -> Self {
        CliqueSearch { adj }
    }

    /// A maximum clique inside `candidates`.
    pub fn maximum(&self, candidates: Bits) -> Bits {
        let mut st = State {
            best: Bits::empty(),
            best_size: 0,
            stop_at: None,
            done: false,
        };
        self.expand(&mut st, Bits::empty(), 0, candidates);
        st.best
    }

    /// Whether `candidates` contains a clique with at least `k` vertices.
    pub fn has_clique(&self, candidates: Bits, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if candidates.len() < k {
            return false;
        }
        let mut st = State {
            best: Bits::empty(),
            best_size: k - 1,
            stop_at: Some(k),
            done: false,
        };
        self.expand(&mut st, Bits::empty(), 0, candidates);
        st.best_size >= k
    }

    fn color(&self, p: Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.len());
        let mut uncolored = p;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored;
            while let Some(v) = q.first() {
                q = q.and_not(self.adj[v]);
                q.remove(v);
                uncolored.remove(v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&self, st: &mut State, current: Bits, size: usize, mut p: Bits) {
        let order = self.color(p);
        for &(v, c) in order.iter().rev() {
            if st.done || size + c <= st.best_size {
                return;
            }
            let mut next = current;
            next.insert(v);
            let np = p.and(self.adj[v]);
            if np.is_empty() {
                if size + 1 > st.best_size {
                    st.best = next;
                    st.best_size = size + 1;
                    if st.stop_at.is_some_and(|k| st.best_size >= k) {
                        st.done = true;
                    }
                }
            } else {
                self.expand(st, next, size + 1, np);
            }
            p.remove(v);
        }
    }
}
