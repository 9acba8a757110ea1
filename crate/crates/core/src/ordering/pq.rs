//! PQ-tree with template reduction for the consecutive-arrangement problem.
//!
//! Leaves are `0..m`. Each call to [`PqTree::reduce`] restricts the represented
//! permutations to those in which the given leaf set is contiguous.
//!
//! Children are kept in vectors with every node recording its parent and its
//! index in the parent's vector. P-node edits touch only the pertinent
//! children (via `swap_remove`); Q-node edits that splice a partial child
//! rewrite the affected vector.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Leaf(usize),
    P,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Empty,
    Full,
    /// A Q-node with its full children at one end.
    Partial { full_right: bool },
}

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Node {
    kind: Kind,
    children: Vec<usize>,
    parent: usize,
    pos: usize,
    // Scratch for the current reduction; valid only when `stamp` matches.
    stamp: u32,
    touched: usize,
    done: usize,
    pert: usize,
    label: Label,
    full: Vec<usize>,
    partial: Vec<usize>,
}

impl Node {
    fn new(kind: Kind) -> Self {
        Node {
            kind,
            children: Vec::new(),
            parent: NONE,
            pos: 0,
            stamp: 0,
            touched: 0,
            done: 0,
            pert: 0,
            label: Label::Empty,
            full: Vec::new(),
            partial: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PqTree {
    nodes: Vec<Node>,
    root: usize,
    leaves: usize,
    stamp: u32,
}

/// One node of a finished tree, with children in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Leaf(usize),
    P(Vec<Shape>),
    Q(Vec<Shape>),
}

impl PqTree {
    /// The universal tree on `m` leaves: a single P-node (or a bare leaf).
    pub fn new(m: usize) -> Self {
        let mut nodes: Vec<Node> = (0..m).map(|i| Node::new(Kind::Leaf(i))).collect();
        let root = match m {
            0 => NONE,
            1 => 0,
            _ => {
                nodes.push(Node::new(Kind::P));
                let r = m;
                for (i, node) in nodes.iter_mut().take(m).enumerate() {
                    node.parent = r;
                    node.pos = i;
                }
                nodes[r].children = (0..m).collect();
                r
            }
        };
        PqTree { nodes, root, leaves: m, stamp: 0 }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    fn alloc(&mut self, kind: Kind) -> usize {
        let mut node = Node::new(kind);
        node.stamp = self.stamp;
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn set_children(&mut self, x: usize, children: Vec<usize>) {
        for (i, &c) in children.iter().enumerate() {
            self.nodes[c].parent = x;
            self.nodes[c].pos = i;
        }
        self.nodes[x].children = children;
    }

    fn push_child(&mut self, x: usize, c: usize) {
        self.nodes[c].parent = x;
        self.nodes[c].pos = self.nodes[x].children.len();
        self.nodes[x].children.push(c);
    }

    /// Removes `c` from its parent's child list in O(1); order is not kept.
    fn detach(&mut self, c: usize) {
        let (p, i) = (self.nodes[c].parent, self.nodes[c].pos);
        let ch = &mut self.nodes[p].children;
        ch.swap_remove(i);
        if i < ch.len() {
            let moved = ch[i];
            self.nodes[moved].pos = i;
        }
        self.nodes[c].parent = NONE;
    }

    /// Puts `new` where `old` hangs (or makes it the root).
    fn replace(&mut self, old: usize, new: usize) {
        let (p, i) = (self.nodes[old].parent, self.nodes[old].pos);
        self.nodes[new].parent = p;
        self.nodes[new].pos = i;
        if p == NONE {
            self.root = new;
        } else {
            self.nodes[p].children[i] = new;
        }
        self.nodes[old].parent = NONE;
    }

    /// A single node standing for `group`: the node itself or a fresh P-node.
    fn group(&mut self, group: Vec<usize>) -> Option<usize> {
        match group.len() {
            0 => None,
            1 => Some(group[0]),
            _ => {
                let p = self.alloc(Kind::P);
                self.set_children(p, group);
                Some(p)
            }
        }
    }

    /// Children of partial node `y` ordered so the full end is on the right
    /// when `full_right` holds, on the left otherwise.
    fn oriented(&self, y: usize, full_right: bool) -> Vec<usize> {
        let Label::Partial { full_right: fr } = self.nodes[y].label else {
            unreachable!("only partial nodes are oriented")
        };
        let mut ch = self.nodes[y].children.clone();
        if fr != full_right {
            ch.reverse();
        }
        ch
    }

    fn scratch_reset(&mut self, x: usize) {
        let stamp = self.stamp;
        let n = &mut self.nodes[x];
        n.stamp = stamp;
        n.touched = 0;
        n.done = 0;
        n.pert = 0;
        n.label = Label::Empty;
        n.full.clear();
        n.partial.clear();
    }

    /// Restricts the tree so that the leaves in `set` are consecutive.
    /// Returns `false` (leaving the tree unusable) if that is impossible.
    pub fn reduce(&mut self, set: &[usize]) -> bool {
        if set.len() <= 1 || set.len() >= self.leaves {
            return true;
        }
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            for n in &mut self.nodes {
                n.stamp = 0;
            }
            self.stamp = 1;
        }
        let stamp = self.stamp;

        for &leaf in set {
            self.scratch_reset(leaf);
            let mut x = leaf;
            loop {
                let p = self.nodes[x].parent;
                if p == NONE {
                    break;
                }
                if self.nodes[p].stamp != stamp {
                    self.scratch_reset(p);
                    self.nodes[p].touched += 1;
                    x = p;
                } else {
                    self.nodes[p].touched += 1;
                    break;
                }
            }
        }

        let total = set.len();
        let mut queue: std::collections::VecDeque<usize> = set.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            if let Kind::Leaf(_) = self.nodes[x].kind {
                self.nodes[x].pert = 1;
            }
            if self.nodes[x].pert == total {
                return self.reduce_root(x);
            }
            let Some(r) = self.reduce_nonroot(x) else {
                return false;
            };
            let p = self.nodes[r].parent;
            debug_assert_ne!(p, NONE, "a non-root pertinent node has a parent");
            let (pert, label) = (self.nodes[r].pert, self.nodes[r].label);
            let pn = &mut self.nodes[p];
            pn.done += 1;
            pn.pert += pert;
            match label {
                Label::Full => pn.full.push(r),
                Label::Partial { .. } => pn.partial.push(r),
                Label::Empty => unreachable!("processed nodes are pertinent"),
            }
            if pn.done == pn.touched {
                queue.push_back(p);
            }
        }
        unreachable!("the pertinent root is always reached")
    }

    /// Applies the non-root templates to `x`; returns the node now standing in
    /// its place, labelled full or partial.
    fn reduce_nonroot(&mut self, x: usize) -> Option<usize> {
        let kind = self.nodes[x].kind;
        if let Kind::Leaf(_) = kind {
            self.nodes[x].label = Label::Full;
            return Some(x);
        }
        let full = std::mem::take(&mut self.nodes[x].full);
        let partial = std::mem::take(&mut self.nodes[x].partial);
        let deg = self.nodes[x].children.len();
        if partial.is_empty() && full.len() == deg {
            self.nodes[x].label = Label::Full;
            return Some(x);
        }
        if partial.len() > 1 {
            return None;
        }
        let pert = self.nodes[x].pert;
        match kind {
            Kind::P => {
                for &c in full.iter().chain(&partial) {
                    self.detach(c);
                }
                let fg = self.group(full);
                let rest = self.nodes[x].children.len();
                let eg = match rest {
                    0 => None,
                    1 => {
                        let c = self.nodes[x].children[0];
                        self.detach(c);
                        Some(c)
                    }
                    _ => Some(x),
                };
                let result = match partial.first() {
                    None => {
                        let z = self.alloc(Kind::Q);
                        self.replace(x, z);
                        let children = eg.into_iter().chain(fg).collect();
                        self.set_children(z, children);
                        self.nodes[z].label = Label::Partial { full_right: true };
                        z
                    }
                    Some(&y) => {
                        self.replace(x, y);
                        let mut ch = self.oriented(y, true);
                        if let Some(e) = eg {
                            ch.insert(0, e);
                        }
                        ch.extend(fg);
                        self.set_children(y, ch);
                        self.nodes[y].label = Label::Partial { full_right: true };
                        y
                    }
                };
                self.nodes[result].pert = pert;
                Some(result)
            }
            Kind::Q => {
                let t = full.len() + partial.len();
                let touched_pos = || full.iter().chain(&partial).map(|&c| self.nodes[c].pos);
                let at_right = touched_pos().all(|p| p >= deg - t);
                let at_left = touched_pos().all(|p| p < t);
                let full_right = match partial.first() {
                    Some(&y) => {
                        let py = self.nodes[y].pos;
                        if at_right && py == deg - t {
                            true
                        } else if at_left && py == t - 1 {
                            false
                        } else {
                            return None;
                        }
                    }
                    None if at_right => true,
                    None if at_left => false,
                    None => return None,
                };
                if let Some(&y) = partial.first() {
                    let inner = self.oriented(y, full_right);
                    let py = self.nodes[y].pos;
                    let mut ch = std::mem::take(&mut self.nodes[x].children);
                    ch.splice(py..=py, inner);
                    self.set_children(x, ch);
                }
                self.nodes[x].label = Label::Partial { full_right };
                Some(x)
            }
            Kind::Leaf(_) => unreachable!(),
        }
    }

    /// Applies the root templates to the pertinent root `x`.
    fn reduce_root(&mut self, x: usize) -> bool {
        let full = std::mem::take(&mut self.nodes[x].full);
        let partial = std::mem::take(&mut self.nodes[x].partial);
        let deg = self.nodes[x].children.len();
        if partial.len() > 2 {
            return false;
        }
        match self.nodes[x].kind {
            Kind::Leaf(_) => true,
            Kind::P => {
                if partial.is_empty() {
                    if full.len() >= 2 && full.len() < deg {
                        for &c in &full {
                            self.detach(c);
                        }
                        let fg = self.group(full).expect("at least two full children");
                        self.push_child(x, fg);
                    }
                    return true;
                }
                for &c in full.iter().chain(&partial) {
                    self.detach(c);
                }
                let fg = self.group(full);
                let y = partial[0];
                let mut ch = self.oriented(y, true);
                ch.extend(fg);
                if let Some(&y2) = partial.get(1) {
                    ch.extend(self.oriented(y2, false));
                }
                self.set_children(y, ch);
                if self.nodes[x].children.is_empty() {
                    self.replace(x, y);
                } else {
                    self.push_child(x, y);
                }
                true
            }
            Kind::Q => {
                let positions: Vec<usize> =
                    full.iter().chain(&partial).map(|&c| self.nodes[c].pos).collect();
                let lo = *positions.iter().min().expect("root has pertinent children");
                let hi = *positions.iter().max().unwrap();
                if hi - lo + 1 != positions.len() {
                    return false;
                }
                let children = &self.nodes[x].children;
                let (left, right) = (children[lo], children[hi]);
                for &y in &partial {
                    if y != left && y != right {
                        return false;
                    }
                }
                let mut ch = std::mem::take(&mut self.nodes[x].children);
                if partial.contains(&right) {
                    ch.splice(hi..=hi, self.oriented(right, false));
                }
                if partial.contains(&left) {
                    ch.splice(lo..=lo, self.oriented(left, true));
                }
                self.set_children(x, ch);
                true
            }
        }
    }

    /// Leaf order of the current tree with children as stored.
    pub fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaves);
        if self.root == NONE {
            return out;
        }
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                Kind::Leaf(i) => out.push(i),
                _ => stack.extend(self.nodes[x].children.iter().rev()),
            }
        }
        out
    }

    /// Reorders children canonically with respect to `label` (a ranking of
    /// the leaves): P-children ascend by their least label; Q-nodes face the
    /// way that puts the smaller first label first. Two-child Q-nodes are
    /// treated as P-nodes, since they admit the same permutations.
    pub fn canonicalize(&mut self, label: &[usize]) {
        if self.root == NONE {
            return;
        }
        let n = self.nodes.len();
        let mut min = vec![usize::MAX; n];
        let mut first = vec![usize::MAX; n];
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if let Kind::Leaf(i) = self.nodes[x].kind {
                min[x] = label[i];
                first[x] = label[i];
                continue;
            }
            if !expanded {
                stack.push((x, true));
                stack.extend(self.nodes[x].children.iter().map(|&c| (c, false)));
                continue;
            }
            let mut ch = std::mem::take(&mut self.nodes[x].children);
            if self.nodes[x].kind == Kind::P || ch.len() == 2 {
                ch.sort_by_key(|&c| min[c]);
            } else if first[*ch.last().unwrap()] < first[ch[0]] {
                ch.reverse();
            }
            min[x] = ch.iter().map(|&c| min[c]).min().unwrap();
            first[x] = first[ch[0]];
            self.set_children(x, ch);
        }
    }

    /// The tree as a nested value.
    pub fn shape(&self) -> Option<Shape> {
        if self.root == NONE {
            return None;
        }
        enum Step {
            Visit(usize),
            Build(usize),
        }
        let mut built: Vec<Shape> = Vec::new();
        let mut stack = vec![Step::Visit(self.root)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Visit(x) => match self.nodes[x].kind {
                    Kind::Leaf(i) => built.push(Shape::Leaf(i)),
                    _ => {
                        stack.push(Step::Build(x));
                        stack.extend(self.nodes[x].children.iter().rev().map(|&c| Step::Visit(c)));
                    }
                },
                Step::Build(x) => {
                    let ch = &self.nodes[x].children;
                    let kids = built.split_off(built.len() - ch.len());
                    built.push(if self.nodes[x].kind == Kind::Q && ch.len() > 2 {
                        Shape::Q(kids)
                    } else {
                        Shape::P(kids)
                    });
                }
            }
        }
        built.pop()
    }
}
