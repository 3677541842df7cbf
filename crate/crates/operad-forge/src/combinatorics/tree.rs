//! Rooted trees with labelled vertices, kept with canonically sorted children.

use std::fmt;

use super::{set_partitions, Label};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    pub label: Label,
    pub children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf(label: Label) -> Self {
        RootedTree { label, children: Vec::new() }
    }

    pub fn node(label: Label, mut children: Vec<RootedTree>) -> Self {
        children.sort();
        RootedTree { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.size());
        self.push_labels(&mut out);
        out
    }

    fn push_labels(&self, out: &mut Vec<Label>) {
        out.push(self.label);
        for c in &self.children {
            c.push_labels(out);
        }
    }

    /// Rebuilds the tree with labels replaced in preorder.
    pub fn map_seq(&self, f: &mut dyn FnMut(Label) -> Label) -> Self {
        let label = f(self.label);
        let children = self.children.iter().map(|c| c.map_seq(f)).collect();
        RootedTree::node(label, children)
    }

    pub fn with_child(&self, child: RootedTree) -> Self {
        let mut children = self.children.clone();
        children.push(child);
        RootedTree::node(self.label, children)
    }

    /// Every tree obtained by attaching `s` below one vertex of `self`.
    pub fn graft_everywhere(&self, s: &RootedTree) -> Vec<RootedTree> {
        let mut out = vec![self.with_child(s.clone())];
        for (i, c) in self.children.iter().enumerate() {
            for g in c.graft_everywhere(s) {
                let mut children = self.children.clone();
                children[i] = g;
                out.push(RootedTree::node(self.label, children));
            }
        }
        out
    }

    /// Splits along every edge: (part holding the root, part below the edge).
    pub fn cuts(&self) -> Vec<(RootedTree, RootedTree)> {
        let mut out = Vec::new();
        for (i, c) in self.children.iter().enumerate() {
            let mut rest = self.children.clone();
            let below = rest.remove(i);
            out.push((RootedTree::node(self.label, rest), below));
            for (top, sub) in c.cuts() {
                let mut children = self.children.clone();
                children[i] = top;
                out.push((RootedTree::node(self.label, children), sub));
            }
        }
        out
    }

    /// Splits along the edges leaving the root.
    pub fn root_cuts(&self) -> Vec<(RootedTree, RootedTree)> {
        (0..self.children.len())
            .map(|i| {
                let mut rest = self.children.clone();
                let below = rest.remove(i);
                (RootedTree::node(self.label, rest), below)
            })
            .collect()
    }

    /// Order of the automorphism group of the unlabelled shape.
    pub fn shape_automorphisms(&self) -> u64 {
        let shapes: Vec<RootedTree> = self.children.iter().map(|c| c.shape()).collect();
        let mut total: u64 = self.children.iter().map(|c| c.shape_automorphisms()).product();
        let mut sorted = shapes;
        sorted.sort();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            total *= (1..=(j - i) as u64).product::<u64>();
            i = j;
        }
        total
    }

    pub fn shape(&self) -> RootedTree {
        self.map_seq(&mut |_| Label::Num(0))
    }
}

/// Attaches `subs[k]` below vertex `targets[k]` of `base`, vertices numbered in preorder.
pub fn attach_at(base: &RootedTree, subs: &[RootedTree], targets: &[usize]) -> RootedTree {
    fn rec(t: &RootedTree, next: &mut usize, subs: &[RootedTree], targets: &[usize]) -> RootedTree {
        let me = *next;
        *next += 1;
        let mut children: Vec<RootedTree> =
            t.children.iter().map(|c| rec(c, next, subs, targets)).collect();
        for (k, &v) in targets.iter().enumerate() {
            if v == me {
                children.push(subs[k].clone());
            }
        }
        RootedTree::node(t.label, children)
    }
    let mut next = 0;
    rec(base, &mut next, subs, targets)
}

/// All rooted trees whose vertex set is exactly `labels` (assumed distinct).
pub fn all_trees(labels: &[Label]) -> Vec<RootedTree> {
    let mut out = Vec::new();
    for (i, &r) in labels.iter().enumerate() {
        let rest: Vec<Label> = labels.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &l)| l).collect();
        for forest in all_forests(&rest) {
            out.push(RootedTree::node(r, forest));
        }
    }
    out
}

fn all_forests(labels: &[Label]) -> Vec<Vec<RootedTree>> {
    if labels.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for blocks in set_partitions(labels) {
        let mut acc: Vec<Vec<RootedTree>> = vec![Vec::new()];
        for b in &blocks {
            let trees = all_trees(b);
            let mut next = Vec::with_capacity(acc.len() * trees.len());
            for partial in &acc {
                for t in &trees {
                    let mut p = partial.clone();
                    p.push(t.clone());
                    next.push(p);
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: u32) -> Label {
        Label::Num(i)
    }

    #[test]
    fn cayley_counts() {
        for (k, expected) in [(1, 1), (2, 2), (3, 9), (4, 64), (5, 625)] {
            let labels: Vec<Label> = (1..=k).map(n).collect();
            assert_eq!(all_trees(&labels).len(), expected);
        }
    }

    #[test]
    fn cuts_count_edges() {
        let t = RootedTree::node(n(1), vec![RootedTree::leaf(n(2)), RootedTree::node(n(3), vec![RootedTree::leaf(n(4))])]);
        assert_eq!(t.cuts().len(), 3);
        assert_eq!(t.root_cuts().len(), 2);
        assert_eq!(t.graft_everywhere(&RootedTree::leaf(n(5))).len(), 4);
    }

    #[test]
    fn corolla_automorphisms() {
        let t = RootedTree::node(n(1), (2..=4).map(|i| RootedTree::leaf(n(i))).collect());
        assert_eq!(t.shape_automorphisms(), 6);
    }
}
