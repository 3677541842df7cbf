//! Planar trees with coloured internal nodes and labelled leaves.

use std::fmt;

use super::Label;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Color {
    Star,
    Dot,
    Prec,
    Node,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Star => "star",
            Color::Dot => "dot",
            Color::Prec => "prec",
            Color::Node => "node",
        }
    }

    pub fn from_name(s: &str) -> Option<Color> {
        match s {
            "star" => Some(Color::Star),
            "dot" => Some(Color::Dot),
            "prec" => Some(Color::Prec),
            "node" => Some(Color::Node),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PlanarTree {
    Leaf(Label),
    Node(Color, Vec<PlanarTree>),
}

impl PlanarTree {
    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf(_) => 1,
            PlanarTree::Node(_, cs) => cs.iter().map(|c| c.leaves()).sum(),
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.push_labels(&mut out);
        out
    }

    fn push_labels(&self, out: &mut Vec<Label>) {
        match self {
            PlanarTree::Leaf(l) => out.push(*l),
            PlanarTree::Node(_, cs) => cs.iter().for_each(|c| c.push_labels(out)),
        }
    }

    pub fn map_seq(&self, f: &mut dyn FnMut(Label) -> Label) -> Self {
        match self {
            PlanarTree::Leaf(l) => PlanarTree::Leaf(f(*l)),
            PlanarTree::Node(c, cs) => PlanarTree::Node(*c, cs.iter().map(|t| t.map_seq(f)).collect()),
        }
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            PlanarTree::Leaf(_) => None,
            PlanarTree::Node(c, _) => Some(*c),
        }
    }

    /// The children of a root of colour `c`, or the tree itself as a single item.
    pub fn items(&self, c: Color) -> Vec<PlanarTree> {
        match self {
            PlanarTree::Node(d, cs) if *d == c => cs.clone(),
            _ => vec![self.clone()],
        }
    }

    /// Inverse of [`PlanarTree::items`].
    pub fn rebuild(c: Color, mut items: Vec<PlanarTree>) -> PlanarTree {
        if items.len() == 1 {
            items.pop().unwrap()
        } else {
            PlanarTree::Node(c, items)
        }
    }

    /// Associative product that merges roots of colour `c`.
    pub fn flat_product(c: Color, x: &PlanarTree, y: &PlanarTree) -> PlanarTree {
        let mut items = x.items(c);
        items.extend(y.items(c));
        PlanarTree::Node(c, items)
    }

    /// Splits the items under a root of colour `c` into a nonempty prefix and suffix.
    pub fn deconcatenations(&self, c: Color) -> Vec<(PlanarTree, PlanarTree)> {
        match self {
            PlanarTree::Node(d, cs) if *d == c => (1..cs.len())
                .map(|i| (PlanarTree::rebuild(c, cs[..i].to_vec()), PlanarTree::rebuild(c, cs[i..].to_vec())))
                .collect(),
            _ => Vec::new(),
        }
    }

    fn well_formed(&self, family: Family) -> bool {
        match self {
            PlanarTree::Leaf(_) => true,
            PlanarTree::Node(c, cs) => {
                if cs.len() < 2 {
                    return false;
                }
                let child_ok = |t: &PlanarTree| {
                    matches!(
                        (family, c, t.color()),
                        (_, _, None)
                            | (Family::Alternating, Color::Star, Some(Color::Dot))
                            | (Family::Alternating, Color::Dot, Some(Color::Star))
                            | (Family::Dipterous, Color::Star, Some(Color::Prec))
                            | (Family::Dipterous, Color::Prec, Some(Color::Prec))
                            | (Family::Magmatic, Color::Node, Some(Color::Node))
                    )
                };
                let root_ok = match family {
                    Family::Alternating => matches!(c, Color::Star | Color::Dot),
                    Family::Dipterous => matches!(c, Color::Star | Color::Prec),
                    Family::Magmatic => *c == Color::Node,
                };
                root_ok && cs.iter().all(|t| child_ok(t) && t.well_formed(family))
            }
        }
    }

    /// Checks the normal form of one of the planar families.
    pub fn is_valid(&self, family: Family) -> bool {
        self.well_formed(family)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Alternating,
    Dipterous,
    Magmatic,
}

/// Sequences of at least two positive parts summing to `n`.
fn long_compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for p in 1..=n {
            acc.push(p);
            rec(n - p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn products_of(parts: &[usize], gen: &dyn Fn(usize) -> Vec<PlanarTree>) -> Vec<Vec<PlanarTree>> {
    let mut acc: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for &p in parts {
        let opts = gen(p);
        let mut next = Vec::new();
        for a in &acc {
            for o in &opts {
                let mut v = a.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

const HOLE: Label = Label::Num(0);

fn binary_shapes(n: usize) -> Vec<PlanarTree> {
    if n == 1 {
        return vec![PlanarTree::Leaf(HOLE)];
    }
    let mut out = Vec::new();
    for i in 1..n {
        for l in binary_shapes(i) {
            for r in binary_shapes(n - i) {
                out.push(PlanarTree::Node(Color::Node, vec![l.clone(), r]));
            }
        }
    }
    out
}

fn reduced_shapes(n: usize, c: Color) -> Vec<PlanarTree> {
    if n == 1 {
        return vec![PlanarTree::Leaf(HOLE)];
    }
    let mut out = Vec::new();
    for parts in long_compositions(n) {
        for cs in products_of(&parts, &|p| reduced_shapes(p, c)) {
            out.push(PlanarTree::Node(c, cs));
        }
    }
    out
}

fn alternating_rooted(n: usize, c: Color) -> Vec<PlanarTree> {
    let other = if c == Color::Star { Color::Dot } else { Color::Star };
    let mut out = Vec::new();
    for parts in long_compositions(n) {
        let gen = |p: usize| {
            if p == 1 {
                vec![PlanarTree::Leaf(HOLE)]
            } else {
                alternating_rooted(p, other)
            }
        };
        for cs in products_of(&parts, &gen) {
            out.push(PlanarTree::Node(c, cs));
        }
    }
    out
}

/// Unlabelled shapes with `n` leaves (leaves carry a placeholder label).
pub fn shapes(family: Family, binary: bool, n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return Vec::new();
    }
    match family {
        Family::Magmatic if binary => binary_shapes(n),
        Family::Magmatic => reduced_shapes(n, Color::Node),
        Family::Alternating => {
            if n == 1 {
                return vec![PlanarTree::Leaf(HOLE)];
            }
            let mut out = alternating_rooted(n, Color::Star);
            out.extend(alternating_rooted(n, Color::Dot));
            out
        }
        Family::Dipterous => {
            let mut out = reduced_shapes(n, Color::Prec);
            for parts in long_compositions(n) {
                for cs in products_of(&parts, &|p| reduced_shapes(p, Color::Prec)) {
                    out.push(PlanarTree::Node(Color::Star, cs));
                }
            }
            out
        }
    }
}

/// Fills the leaves from left to right with `labels`.
pub fn fill_leaves(shape: &PlanarTree, labels: &[Label]) -> PlanarTree {
    let mut it = labels.iter();
    shape.map_seq(&mut |_| *it.next().expect("enough labels"))
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf(l) => write!(f, "{l}"),
            PlanarTree::Node(c, cs) => {
                write!(f, "{}(", c.name())?;
                for (i, t) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts() {
        let cat: Vec<usize> = (1..=5).map(|n| shapes(Family::Magmatic, true, n).len()).collect();
        assert_eq!(cat, vec![1, 1, 2, 5, 14]);
        let schroder: Vec<usize> = (1..=5).map(|n| shapes(Family::Magmatic, false, n).len()).collect();
        assert_eq!(schroder, vec![1, 1, 3, 11, 45]);
        let alt: Vec<usize> = (1..=5).map(|n| shapes(Family::Alternating, false, n).len()).collect();
        assert_eq!(alt, vec![1, 2, 6, 22, 90]);
        let dipt: Vec<usize> = (1..=5).map(|n| shapes(Family::Dipterous, false, n).len()).collect();
        assert_eq!(dipt, vec![1, 2, 6, 22, 90]);
    }

    #[test]
    fn shapes_are_well_formed() {
        for fam in [Family::Alternating, Family::Dipterous, Family::Magmatic] {
            for t in shapes(fam, false, 5) {
                assert!(t.is_valid(fam), "{t}");
            }
        }
    }
}
