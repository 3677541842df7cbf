//! Labelled combinatorial species: the basis elements every operad is built on.

pub mod hypertree;
pub mod parse;
pub mod planar;
pub mod pointed;
pub mod tree;
pub mod word;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

pub use hypertree::RootedHypertree;
pub use parse::{parse_any, parse_element, ParseError};
pub use planar::{Color, Family, PlanarTree};
pub use pointed::PointedSet;
pub use tree::RootedTree;
pub use word::{Monomial, Surjection, Word};

/// A vertex or letter label: a positive integer or a single letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Num(u32),
    Sym(char),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Num(n) => write!(f, "{n}"),
            Label::Sym(c) => write!(f, "{c}"),
        }
    }
}

pub fn nums(range: std::ops::RangeInclusive<u32>) -> Vec<Label> {
    range.map(Label::Num).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisKind {
    Tree,
    Pointed,
    Word,
    Monomial,
    Planar(Family),
    Hypertree,
    Surjection,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    Tree(RootedTree),
    Pointed(PointedSet),
    Word(Word),
    Mono(Monomial),
    Planar(PlanarTree),
    Hyper(RootedHypertree),
    Surj(Surjection),
}

impl Basis {
    pub fn kind(&self) -> BasisKind {
        match self {
            Basis::Tree(_) => BasisKind::Tree,
            Basis::Pointed(_) => BasisKind::Pointed,
            Basis::Word(_) => BasisKind::Word,
            Basis::Mono(_) => BasisKind::Monomial,
            Basis::Planar(t) => BasisKind::Planar(match t {
                PlanarTree::Node(Color::Node, _) => Family::Magmatic,
                PlanarTree::Node(Color::Dot, _) => Family::Alternating,
                PlanarTree::Node(Color::Prec, _) => Family::Dipterous,
                _ => Family::Alternating,
            }),
            Basis::Hyper(_) => BasisKind::Hypertree,
            Basis::Surj(_) => BasisKind::Surjection,
        }
    }

    /// Label occurrences in canonical traversal order.
    pub fn labels(&self) -> Vec<Label> {
        match self {
            Basis::Tree(t) => t.labels(),
            Basis::Pointed(p) => p.labels(),
            Basis::Word(w) => w.0.clone(),
            Basis::Mono(m) => m.letters().to_vec(),
            Basis::Planar(t) => t.labels(),
            Basis::Hyper(h) => h.vertices(),
            Basis::Surj(s) => (1..=s.len() as u32).map(Label::Num).collect(),
        }
    }

    /// Arity: the number of label occurrences.
    pub fn degree(&self) -> usize {
        match self {
            Basis::Tree(t) => t.size(),
            Basis::Pointed(p) => p.size(),
            Basis::Word(w) => w.0.len(),
            Basis::Mono(m) => m.letters().len(),
            Basis::Planar(t) => t.leaves(),
            Basis::Hyper(h) => h.size(),
            Basis::Surj(s) => s.len(),
        }
    }

    /// Replaces labels in traversal order and re-canonicalises.
    pub fn map_seq(&self, f: &mut dyn FnMut(Label) -> Label) -> Basis {
        match self {
            Basis::Tree(t) => Basis::Tree(t.map_seq(f)),
            Basis::Pointed(p) => Basis::Pointed(p.map_seq(f)),
            Basis::Word(w) => Basis::Word(Word(w.0.iter().map(|&l| f(l)).collect())),
            Basis::Mono(m) => Basis::Mono(Monomial::new(m.letters().iter().map(|&l| f(l)).collect())),
            Basis::Planar(t) => Basis::Planar(t.map_seq(f)),
            Basis::Hyper(h) => Basis::Hyper(h.map_seq(f)),
            Basis::Surj(s) => Basis::Surj(s.clone()),
        }
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Basis {
        self.map_seq(&mut |l| f(l))
    }

    /// Applies `sigma` (one-line, values 1..n) to numeric labels.
    pub fn permute(&self, sigma: &[u32]) -> Basis {
        self.relabel(|l| match l {
            Label::Num(i) if (i as usize) <= sigma.len() && i > 0 => Label::Num(sigma[i as usize - 1]),
            other => other,
        })
    }

    pub fn shift(&self, by: u32) -> Basis {
        self.relabel(|l| match l {
            Label::Num(i) => Label::Num(i + by),
            other => other,
        })
    }

    /// Standard labelling `1..d` in traversal order, with the original labels as decoration.
    pub fn lift(&self) -> (Basis, Vec<Label>) {
        let deco = self.labels();
        let mut k = 0;
        let lifted = self.map_seq(&mut |_| {
            k += 1;
            Label::Num(k)
        });
        (lifted, deco)
    }

    /// Replaces label `i` by `deco[i - 1]`.
    pub fn decorate(&self, deco: &[Label]) -> Basis {
        self.relabel(|l| match l {
            Label::Num(i) => deco[i as usize - 1],
            other => other,
        })
    }

    pub fn has_distinct_labels(&self) -> bool {
        let ls = self.labels();
        ls.iter().collect::<BTreeSet<_>>().len() == ls.len()
    }

    pub fn as_tree(&self) -> &RootedTree {
        match self {
            Basis::Tree(t) => t,
            other => panic!("expected a rooted tree, got {other}"),
        }
    }

    pub fn as_pointed(&self) -> &PointedSet {
        match self {
            Basis::Pointed(p) => p,
            other => panic!("expected a pointed set, got {other}"),
        }
    }

    pub fn as_word(&self) -> &[Label] {
        match self {
            Basis::Word(w) => &w.0,
            other => panic!("expected a word, got {other}"),
        }
    }

    pub fn as_planar(&self) -> &PlanarTree {
        match self {
            Basis::Planar(t) => t,
            other => panic!("expected a planar tree, got {other}"),
        }
    }

    pub fn as_hyper(&self) -> &RootedHypertree {
        match self {
            Basis::Hyper(h) => h,
            other => panic!("expected a hypertree, got {other}"),
        }
    }

    pub fn as_surj(&self) -> &Surjection {
        match self {
            Basis::Surj(s) => s,
            other => panic!("expected a surjection, got {other}"),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Tree(t) => write!(f, "{t}"),
            Basis::Pointed(p) => write!(f, "{p}"),
            Basis::Word(w) => write!(f, "{w}"),
            Basis::Mono(m) => write!(f, "{m}"),
            Basis::Planar(t) => write!(f, "{t}"),
            Basis::Hyper(h) => write!(f, "{h}"),
            Basis::Surj(s) => write!(f, "{s}"),
        }
    }
}

/// An ordered tensor of basis elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor(pub Vec<Basis>);

impl Tensor {
    pub fn pair(a: Basis, b: Basis) -> Tensor {
        Tensor(vec![a, b])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label + Copy) -> Tensor {
        Tensor(self.0.iter().map(|b| b.relabel(f)).collect())
    }

    pub fn decorate(&self, deco: &[Label]) -> Tensor {
        Tensor(self.0.iter().map(|b| b.decorate(deco)).collect())
    }

    /// Reorders factors: factor `i` moves to slot `perm[i] - 1`.
    pub fn move_factors(&self, perm: &[u32]) -> Tensor {
        let mut slots: Vec<Option<Basis>> = vec![None; self.0.len()];
        for (i, b) in self.0.iter().enumerate() {
            slots[perm[i] as usize - 1] = Some(b.clone());
        }
        Tensor(slots.into_iter().map(|b| b.unwrap()).collect())
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" ⊗ "))
    }
}

/// All set partitions of `items` into nonempty blocks (block order canonical).
pub fn set_partitions<T: Clone>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0].clone();
    let mut out = Vec::new();
    for p in set_partitions(&items[1..]) {
        let mut with_new = vec![vec![first.clone()]];
        with_new.extend(p.iter().cloned());
        out.push(with_new);
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first.clone());
            out.push(q);
        }
    }
    out
}

/// All permutations of `1..=n` in one-line notation, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32).permutations(n).collect()
}

/// Ordered partitions of `0..n` into `k` nonempty blocks (each block increasing).
pub fn ordered_set_partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    if k == 0 || k > n {
        return out;
    }
    loop {
        let mut blocks = vec![Vec::new(); k];
        for (i, &a) in assign.iter().enumerate() {
            blocks[a].push(i);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
        let mut i = 0;
        while i < n {
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|n| set_partitions(&(0..n).collect::<Vec<_>>()).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn ordered_partition_counts() {
        assert_eq!(ordered_set_partitions(3, 2).len(), 6);
        assert_eq!(ordered_set_partitions(4, 2).len(), 14);
        assert_eq!(ordered_set_partitions(5, 5).len(), 120);
    }

    #[test]
    fn lift_then_decorate_is_identity() {
        let x = parse_any("a(b,a(b))").unwrap();
        let (l, d) = x.lift();
        assert!(l.has_distinct_labels());
        assert_eq!(l.decorate(&d), x);
    }
}
