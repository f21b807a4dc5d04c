//! Stallings folded subgroup graphs: membership, index, and whole-group
//! generation tests for finitely generated subgroups of a free group.
//!
//! Folding runs over a union-find with a merge worklist; the finished graph
//! is relabeled by a BFS from the base vertex so equal subgroups produce
//! identical structures regardless of generator order.

use crate::word::{Alphabet, Word};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Folded, connected, base-pointed graph of a subgroup. No vertex has two
/// outgoing or two incoming edges with the same label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupGraph {
    alphabet: Alphabet,
    vertices: usize,
    base: usize,
    out: BTreeMap<(usize, usize), usize>,
    inn: BTreeMap<(usize, usize), usize>,
}

struct Folder {
    parent: Vec<usize>,
    size: Vec<usize>,
    out: Vec<HashMap<usize, usize>>,
    inn: Vec<HashMap<usize, usize>>,
    merges: VecDeque<(usize, usize)>,
}

impl Folder {
    fn new() -> Self {
        Folder {
            parent: Vec::new(),
            size: Vec::new(),
            out: Vec::new(),
            inn: Vec::new(),
            merges: VecDeque::new(),
        }
    }

    fn add_vertex(&mut self) -> usize {
        let v = self.parent.len();
        self.parent.push(v);
        self.size.push(1);
        self.out.push(HashMap::new());
        self.inn.push(HashMap::new());
        v
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn add_edge(&mut self, u: usize, g: usize, v: usize) {
        let u = self.find(u);
        let v = self.find(v);
        // two out-edges with one label fold their targets, two in-edges
        // fold their sources; both sides must be reconciled on every insert
        match self.out[u].get(&g).copied() {
            Some(t) => {
                let t = self.find(t);
                self.out[u].insert(g, t);
                if t != v {
                    self.merges.push_back((t, v));
                }
            }
            None => {
                self.out[u].insert(g, v);
            }
        }
        match self.inn[v].get(&g).copied() {
            Some(s) => {
                let s = self.find(s);
                self.inn[v].insert(g, s);
                if s != u {
                    self.merges.push_back((s, u));
                }
            }
            None => {
                self.inn[v].insert(g, u);
            }
        }
    }

    fn process(&mut self) {
        while let Some((a, b)) = self.merges.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
            let out = std::mem::take(&mut self.out[small]);
            let inn = std::mem::take(&mut self.inn[small]);
            for (g, t) in out {
                self.add_edge(big, g, t);
            }
            for (g, s) in inn {
                self.add_edge(s, g, big);
            }
        }
    }
}

impl SubgroupGraph {
    /// Folded graph of the subgroup generated by `gens`; canonical for a
    /// given subgroup (folding is confluent, then BFS relabeling).
    pub fn from_generators(alphabet: &Alphabet, gens: &[Word]) -> Self {
        let mut f = Folder::new();
        let base = f.add_vertex();
        for w in gens {
            assert_eq!(w.alphabet(), alphabet, "generator over wrong alphabet");
            if w.is_identity() {
                continue;
            }
            let mut prev = base;
            let n = w.len();
            for (i, l) in w.letters().iter().enumerate() {
                let next = if i + 1 == n { base } else { f.add_vertex() };
                if l.inv {
                    f.add_edge(next, l.gen, prev);
                } else {
                    f.add_edge(prev, l.gen, next);
                }
                prev = next;
            }
            f.process();
        }
        f.process();

        // canonical BFS relabeling from the base representative
        let rank = alphabet.rank();
        let root = f.find(base);
        let mut id: HashMap<usize, usize> = HashMap::new();
        id.insert(root, 0);
        let mut queue = VecDeque::from([root]);
        let mut out = BTreeMap::new();
        let mut inn = BTreeMap::new();
        let mut order = vec![root];
        while let Some(v) = queue.pop_front() {
            for g in 0..rank {
                if let Some(&t) = f.out[v].get(&g) {
                    let t = f.find(t);
                    if !id.contains_key(&t) {
                        id.insert(t, order.len());
                        order.push(t);
                        queue.push_back(t);
                    }
                }
                if let Some(&s) = f.inn[v].get(&g) {
                    let s = f.find(s);
                    if !id.contains_key(&s) {
                        id.insert(s, order.len());
                        order.push(s);
                        queue.push_back(s);
                    }
                }
            }
        }
        for &v in &order {
            let edges: Vec<(usize, usize)> = f.out[v].iter().map(|(&g, &t)| (g, t)).collect();
            for (g, t) in edges {
                let t = f.find(t);
                out.insert((id[&v], g), id[&t]);
                inn.insert((id[&t], g), id[&v]);
            }
        }
        SubgroupGraph {
            alphabet: alphabet.clone(),
            vertices: order.len(),
            base: 0,
            out,
            inn,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// True iff the word labels a loop at the base vertex.
    pub fn contains(&self, w: &Word) -> bool {
        assert_eq!(w.alphabet(), &self.alphabet, "word over wrong alphabet");
        let mut v = self.base;
        for l in w.letters() {
            let next = if l.inv {
                self.inn.get(&(v, l.gen))
            } else {
                self.out.get(&(v, l.gen))
            };
            match next {
                Some(&t) => v = t,
                None => return false,
            }
        }
        v == self.base
    }

    /// Subgroup index: the vertex count when the graph is a covering of the
    /// rose (every label present at every vertex), `None` when infinite.
    pub fn index(&self) -> Option<usize> {
        let complete = self.out.len() == self.vertices * self.alphabet.rank();
        complete.then_some(self.vertices)
    }

    /// True iff the folded graph is the one-vertex rose on all generators,
    /// i.e. the generators generate the whole ambient free group.
    pub fn generates_whole(&self) -> bool {
        self.vertices == 1 && self.out.len() == self.alphabet.rank()
    }

    /// Graphviz dump for debugging.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut s = String::from("digraph subgroup {\n  rankdir=LR;\n");
        let _ = writeln!(s, "  {} [shape=doublecircle];", self.base);
        for (&(v, g), &t) in &self.out {
            let _ = writeln!(s, "  {} -> {} [label=\"{}\"];", v, t, self.alphabet.name(g));
        }
        s.push_str("}\n");
        s
    }
}
