use crate::SymbolicError;

/// Square matrix of non-negative integers; the adjacency matrix of the
/// symbol graph (0/1 in standard use, larger entries count parallel edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    q: usize,
    entries: Vec<u64>,
}

impl TransitionMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, SymbolicError> {
        let q = rows.len();
        if q == 0 {
            return Err(SymbolicError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(q * q);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != q {
                return Err(SymbolicError::NotSquare { row, len: r.len(), q });
            }
            entries.extend_from_slice(r);
        }
        Ok(TransitionMatrix { q, entries })
    }

    /// Full shift on q symbols (all transitions allowed).
    pub fn full_shift(q: usize) -> Result<Self, SymbolicError> {
        if q == 0 {
            return Err(SymbolicError::EmptyMatrix);
        }
        Ok(TransitionMatrix { q, entries: vec![1; q * q] })
    }

    pub fn identity(q: usize) -> Result<Self, SymbolicError> {
        if q == 0 {
            return Err(SymbolicError::EmptyMatrix);
        }
        let mut m = TransitionMatrix { q, entries: vec![0; q * q] };
        for i in 0..q {
            m.entries[i * q + i] = 1;
        }
        Ok(m)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.q + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.q).map(|i| self.entries[i * self.q..(i + 1) * self.q].to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn allows(&self, from: usize, to: usize) -> bool {
        self.entry(from, to) > 0
    }

    /// Entrywise comparison: true if self(i,j) <= other(i,j) everywhere.
    pub fn dominated_by(&self, other: &TransitionMatrix) -> bool {
        self.q == other.q
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Strongly connected components of the symbol graph (Tarjan, iterative).
    /// Components are returned as sorted vertex lists.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let q = self.q;
        let mut index = vec![usize::MAX; q];
        let mut low = vec![0usize; q];
        let mut on_stack = vec![false; q];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();

        // iterative DFS: (vertex, next-neighbor-to-try)
        for start in 0..q {
            if index[start] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(start, 0)];
            while let Some(&mut (v, ref mut next)) = call.last_mut() {
                if *next == 0 {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                let mut advanced = false;
                while *next < q {
                    let w = *next;
                    *next += 1;
                    if !self.allows(v, w) {
                        continue;
                    }
                    if index[w] == usize::MAX {
                        call.push((w, 0));
                        advanced = true;
                        break;
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                }
                if advanced {
                    continue;
                }
                // v finished
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps
    }

    /// Restriction of the matrix to a vertex subset.
    pub fn submatrix(&self, vertices: &[usize]) -> TransitionMatrix {
        let k = vertices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in vertices {
            for &j in vertices {
                entries.push(self.entry(i, j));
            }
        }
        TransitionMatrix { q: k, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = TransitionMatrix::from_rows(vec![vec![1, 0], vec![1]]).unwrap_err();
        assert_eq!(err, SymbolicError::NotSquare { row: 1, len: 1, q: 2 });
    }

    #[test]
    fn scc_of_fibonacci_graph() {
        // edges 0->1, 1->0, 1->1: one component
        let a = TransitionMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let comps = a.strongly_connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], vec![0, 1]);
    }

    #[test]
    fn scc_of_dag() {
        // 0 -> 1 only: two singletons, no cycles
        let a = TransitionMatrix::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let comps = a.strongly_connected_components();
        assert_eq!(comps.len(), 2);
    }
}
