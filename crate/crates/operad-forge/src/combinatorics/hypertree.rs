//! Rooted hypertrees on labelled vertices.

use std::collections::BTreeSet;
use std::fmt;

use super::{set_partitions, Label};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedHypertree {
    pub root: Label,
    pub edges: Vec<Vec<Label>>,
}

impl RootedHypertree {
    pub fn new(root: Label, edges: Vec<Vec<Label>>) -> Self {
        let mut edges: Vec<Vec<Label>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort();
                e
            })
            .collect();
        edges.sort();
        RootedHypertree { root, edges }
    }

    pub fn vertices(&self) -> Vec<Label> {
        let mut set: BTreeSet<Label> = self.edges.iter().flatten().copied().collect();
        set.insert(self.root);
        set.into_iter().collect()
    }

    pub fn size(&self) -> usize {
        self.vertices().len()
    }

    pub fn map_seq(&self, f: &mut dyn FnMut(Label) -> Label) -> Self {
        let vs = self.vertices();
        let image: Vec<Label> = vs.iter().map(|&v| f(v)).collect();
        let m = |l: Label| image[vs.binary_search(&l).unwrap()];
        RootedHypertree::new(m(self.root), self.edges.iter().map(|e| e.iter().map(|&l| m(l)).collect()).collect())
    }

    /// Checks edge sizes, distinctness, connectivity and acyclicity.
    pub fn is_valid(&self) -> bool {
        let vs = self.vertices();
        if self.edges.iter().any(|e| e.len() < 2 || e.windows(2).any(|w| w[0] == w[1])) {
            return false;
        }
        let excess: usize = self.edges.iter().map(|e| e.len() - 1).sum();
        if excess + 1 != vs.len() {
            return false;
        }
        let mut seen: BTreeSet<Label> = BTreeSet::new();
        seen.insert(self.root);
        let mut grew = true;
        while grew {
            grew = false;
            for e in &self.edges {
                if e.iter().any(|v| seen.contains(v)) {
                    for v in e {
                        grew |= seen.insert(*v);
                    }
                }
            }
        }
        seen.len() == vs.len()
    }

    /// Adds the binary edge `{v, root(g)}` joining a copy of `g`.
    pub fn graft(&self, g: &RootedHypertree, v: Label) -> RootedHypertree {
        let mut edges = self.edges.clone();
        edges.extend(g.edges.iter().cloned());
        edges.push(vec![v, g.root]);
        RootedHypertree::new(self.root, edges)
    }

    /// Deletes each binary edge: (edge, component of the root, other component rooted at the freed endpoint).
    pub fn binary_cuts(&self) -> Vec<(Vec<Label>, RootedHypertree, RootedHypertree)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() != 2 {
                continue;
            }
            let rest: Vec<Vec<Label>> =
                self.edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e.clone()).collect();
            let comp = component(self.root, &rest);
            let other = if comp.contains(&e[0]) { e[1] } else { e[0] };
            let (top, bottom): (Vec<Vec<Label>>, Vec<Vec<Label>>) =
                rest.into_iter().partition(|edge| comp.contains(&edge[0]));
            out.push((e.clone(), RootedHypertree::new(self.root, top), RootedHypertree::new(other, bottom)));
        }
        out
    }

    pub fn binary_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.len() == 2).count()
    }
}

fn component(start: Label, edges: &[Vec<Label>]) -> BTreeSet<Label> {
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut grew = true;
    while grew {
        grew = false;
        for e in edges {
            if e.iter().any(|v| seen.contains(v)) {
                for v in e {
                    grew |= seen.insert(*v);
                }
            }
        }
    }
    seen
}

/// All hypertrees on `labels` rooted at `root`, as edge lists.
fn rooted_edge_sets(root: Label, others: &[Label]) -> Vec<Vec<Vec<Label>>> {
    if others.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for groups in set_partitions(others) {
        let mut acc: Vec<Vec<Vec<Label>>> = vec![Vec::new()];
        for g in &groups {
            let branches = branch_edge_sets(root, g);
            let mut next = Vec::new();
            for a in &acc {
                for b in &branches {
                    let mut v = a.clone();
                    v.extend(b.iter().cloned());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

/// One edge through `root` whose other vertices and their descendants are exactly `group`.
fn branch_edge_sets(root: Label, group: &[Label]) -> Vec<Vec<Vec<Label>>> {
    let n = group.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<Label> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| group[i]).collect();
        let rest: Vec<Label> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| group[i]).collect();
        let k = members.len();
        let mut assign = vec![0usize; rest.len()];
        loop {
            let mut acc: Vec<Vec<Vec<Label>>> = vec![vec![{
                let mut e = members.clone();
                e.push(root);
                e
            }]];
            for (s, &m) in members.iter().enumerate() {
                let part: Vec<Label> = rest.iter().zip(&assign).filter(|(_, &a)| a == s).map(|(&l, _)| l).collect();
                let subs = rooted_edge_sets(m, &part);
                let mut next = Vec::new();
                for a in &acc {
                    for b in &subs {
                        let mut v = a.clone();
                        v.extend(b.iter().cloned());
                        next.push(v);
                    }
                }
                acc = next;
            }
            out.extend(acc);
            let mut i = 0;
            while i < assign.len() {
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == assign.len() {
                break;
            }
        }
    }
    out
}

/// All rooted hypertrees whose vertex set is `labels` (distinct).
pub fn all_hypertrees(labels: &[Label]) -> Vec<RootedHypertree> {
    let mut out = Vec::new();
    for (i, &r) in labels.iter().enumerate() {
        let others: Vec<Label> = labels.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &l)| l).collect();
        for edges in rooted_edge_sets(r, &others) {
            out.push(RootedHypertree::new(r, edges));
        }
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for RootedHypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ht(root={}", self.root)?;
        for e in &self.edges {
            write!(f, "; {{")?;
            for (i, v) in e.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: u32) -> Vec<Label> {
        (1..=n).map(Label::Num).collect()
    }

    #[test]
    fn rooted_counts_match_unrooted_times_n() {
        let unrooted = [1usize, 1, 4, 29, 311];
        for n in 1..=5u32 {
            let all = all_hypertrees(&labels(n));
            assert_eq!(all.len(), unrooted[n as usize - 1] * n as usize, "n = {n}");
            assert!(all.iter().all(|h| h.is_valid()));
        }
    }

    #[test]
    fn cut_roots_other_side_at_edge_endpoint() {
        let h = RootedHypertree::new(Label::Num(1), vec![vec![Label::Num(1), Label::Num(2)], vec![Label::Num(2), Label::Num(3), Label::Num(4)]]);
        let cuts = h.binary_cuts();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].1.to_string(), "ht(root=1)");
        assert_eq!(cuts[0].2.to_string(), "ht(root=2; {2,3,4})");
    }
}
