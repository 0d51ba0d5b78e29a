/// Union–find with union by size and explicit rollback, for depth-first
/// search that undoes merges on backtrack. No path compression, so every
/// union can be reverted in O(1).
#[derive(Clone, Debug)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    // root that was attached under another root, or None for a no-op union
    history: Vec<Option<usize>>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], components: n, history: Vec::new() }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Merges the classes of `a` and `b`; returns whether they were distinct.
    /// Always records one history entry.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.history.push(Some(rb));
        true
    }

    /// Undoes the most recent `union`.
    pub fn undo(&mut self) {
        if let Some(rb) = self.history.pop().expect("undo without union") {
            let ra = self.parent[rb];
            self.size[ra] -= self.size[rb];
            self.parent[rb] = rb;
            self.components += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_undo() {
        let mut uf = RollbackUnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(uf.union(2, 3));
        assert!(!uf.union(1, 0));
        assert!(uf.union(1, 3));
        assert_eq!(uf.components(), 1);
        uf.undo();
        assert_eq!(uf.components(), 2);
        assert_ne!(uf.find(0), uf.find(2));
        uf.undo();
        uf.undo();
        uf.undo();
        assert_eq!(uf.components(), 4);
        assert!((0..4).all(|i| uf.find(i) == i));
    }
}
