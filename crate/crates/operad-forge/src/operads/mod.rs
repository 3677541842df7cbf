//! The operad registry: basis enumeration, generating products and coproducts, composition.

pub mod words;

use std::fmt;

use thiserror::Error;

use crate::combinatorics::hypertree::all_hypertrees;
use crate::combinatorics::planar::{fill_leaves, shapes};
use crate::combinatorics::tree::{all_trees, attach_at};
use crate::combinatorics::{
    nums, permutations, Basis, BasisKind, Color, Family, Label, Monomial, PlanarTree, PointedSet, RootedHypertree, RootedTree,
    Tensor, Word,
};
use crate::linear::{int, LinComb, Scalar};

use words::Letters;

/// Largest arity of the `maginf` generating operations.
pub const MAGINF_MAX: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("unknown operad '{0}'")]
    UnknownOperad(String),
    #[error("operad '{operad}' has no operation '{op}'")]
    UnknownOp { operad: String, op: String },
    #[error("operation '{op}' takes {expected} arguments, got {got}")]
    Arity { op: String, expected: usize, got: usize },
    #[error("'{element}' is not a basis element of '{operad}'")]
    NotInBasis { element: String, operad: String },
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Operad {
    PreLie,
    Nap,
    Perm,
    Pan,
    As,
    Comm,
    Mag,
    MagInf,
    Zinbiel,
    Leibniz,
    Poisson,
    TwoAs,
    Dipt,
    HyperPreLie,
    HyperNap,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpSig {
    pub name: String,
    pub arity: usize,
}

pub const ALL: [Operad; 15] = [
    Operad::PreLie,
    Operad::Nap,
    Operad::Perm,
    Operad::Pan,
    Operad::As,
    Operad::Comm,
    Operad::Mag,
    Operad::MagInf,
    Operad::Zinbiel,
    Operad::Leibniz,
    Operad::Poisson,
    Operad::TwoAs,
    Operad::Dipt,
    Operad::HyperPreLie,
    Operad::HyperNap,
];

type Lc = LinComb<Basis>;
type Tc = LinComb<Tensor>;

fn one() -> Scalar {
    int(1)
}

fn pair(a: Basis, b: Basis) -> Tensor {
    Tensor::pair(a, b)
}

fn word(w: Letters) -> Basis {
    Basis::Word(Word(w))
}

fn words_lc(lc: LinComb<Letters>) -> Lc {
    lc.map_keys(|w| word(w.clone()))
}

/// Extends a product given on basis elements to linear combinations.
pub fn bilinear(a: &Lc, b: &Lc, mut f: impl FnMut(&Basis, &Basis) -> Lc) -> Lc {
    let mut out = Lc::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_scaled(&f(x, y), &(c * d));
        }
    }
    out
}

impl fmt::Display for Operad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Operad {
    pub fn name(self) -> &'static str {
        match self {
            Operad::PreLie => "prelie",
            Operad::Nap => "nap",
            Operad::Perm => "perm",
            Operad::Pan => "pan",
            Operad::As => "as",
            Operad::Comm => "comm",
            Operad::Mag => "mag",
            Operad::MagInf => "maginf",
            Operad::Zinbiel => "zinbiel",
            Operad::Leibniz => "leibniz",
            Operad::Poisson => "poisson",
            Operad::TwoAs => "twoas",
            Operad::Dipt => "dipt",
            Operad::HyperPreLie => "hypertree-prelie",
            Operad::HyperNap => "hypertree-nap",
        }
    }

    pub fn from_name(name: &str) -> Result<Operad, OperadError> {
        ALL.iter().copied().find(|o| o.name() == name).ok_or_else(|| OperadError::UnknownOperad(name.to_string()))
    }

    pub fn kind(self) -> BasisKind {
        match self {
            Operad::PreLie | Operad::Nap => BasisKind::Tree,
            Operad::Perm | Operad::Pan => BasisKind::Pointed,
            Operad::As | Operad::Zinbiel | Operad::Leibniz | Operad::Poisson => BasisKind::Word,
            Operad::Comm => BasisKind::Monomial,
            Operad::Mag | Operad::MagInf => BasisKind::Planar(Family::Magmatic),
            Operad::TwoAs => BasisKind::Planar(Family::Alternating),
            Operad::Dipt => BasisKind::Planar(Family::Dipterous),
            Operad::HyperPreLie | Operad::HyperNap => BasisKind::Hypertree,
        }
    }

    /// Whether the symmetric groups act on the arity-`n` basis by relabelling.
    pub fn symmetric(self) -> bool {
        !matches!(self, Operad::TwoAs | Operad::Dipt)
    }

    /// Whether the model is a free algebra, so that basis elements are operations on generators.
    pub fn is_free(self) -> bool {
        !matches!(self, Operad::HyperPreLie | Operad::HyperNap)
    }

    pub fn ops(self) -> Vec<OpSig> {
        let bin = |n: &str| OpSig { name: n.to_string(), arity: 2 };
        match self {
            Operad::PreLie | Operad::HyperPreLie => vec![bin("graft")],
            Operad::Nap | Operad::HyperNap => vec![bin("nap")],
            Operad::Perm => vec![bin("perm")],
            Operad::Pan => vec![bin("pan")],
            Operad::As => vec![bin("concat")],
            Operad::Comm => vec![bin("mul")],
            Operad::Mag => vec![bin("mag")],
            Operad::MagInf => (2..=MAGINF_MAX).map(|k| OpSig { name: format!("m{k}"), arity: k }).collect(),
            Operad::Zinbiel => vec![bin("prec")],
            Operad::Leibniz => vec![bin("bracket")],
            Operad::Poisson => vec![bin("shuffle"), bin("bracket")],
            Operad::TwoAs => vec![bin("star"), bin("dot")],
            Operad::Dipt => vec![bin("star"), bin("prec")],
        }
    }

    /// Generating cooperations share the names of the operations they are dual to.
    pub fn coops(self) -> Vec<OpSig> {
        self.ops()
    }

    pub fn op(self, name: &str) -> Result<OpSig, OperadError> {
        self.ops()
            .into_iter()
            .find(|o| o.name == name)
            .ok_or_else(|| OperadError::UnknownOp { operad: self.name().to_string(), op: name.to_string() })
    }

    pub fn default_op(self) -> String {
        self.ops()[0].name.clone()
    }

    /// Whether `x` is a (possibly decorated) basis element of this model.
    pub fn accepts(self, x: &Basis) -> bool {
        match (self, x) {
            (Operad::PreLie | Operad::Nap, Basis::Tree(_)) => true,
            (Operad::Perm | Operad::Pan, Basis::Pointed(_)) => true,
            (Operad::As | Operad::Zinbiel | Operad::Leibniz | Operad::Poisson, Basis::Word(w)) => !w.0.is_empty(),
            (Operad::Comm, Basis::Mono(m)) => !m.letters().is_empty(),
            (Operad::Mag, Basis::Planar(t)) => t.is_valid(Family::Magmatic) && binary(t),
            (Operad::MagInf, Basis::Planar(t)) => t.is_valid(Family::Magmatic),
            (Operad::TwoAs, Basis::Planar(t)) => t.is_valid(Family::Alternating),
            (Operad::Dipt, Basis::Planar(t)) => t.is_valid(Family::Dipterous),
            (Operad::HyperPreLie | Operad::HyperNap, Basis::Hyper(h)) => h.is_valid(),
            _ => false,
        }
    }

    fn check(self, x: &Basis) -> Result<(), OperadError> {
        if self.accepts(x) {
            Ok(())
        } else {
            Err(OperadError::NotInBasis { element: x.to_string(), operad: self.name().to_string() })
        }
    }

    /// The arity-`n` basis with labels `1..n`, sorted by encoding.
    pub fn basis(self, n: usize) -> Vec<Basis> {
        if n == 0 {
            return Vec::new();
        }
        let labels = nums(1..=n as u32);
        let mut out: Vec<Basis> = match self {
            Operad::PreLie | Operad::Nap => all_trees(&labels).into_iter().map(Basis::Tree).collect(),
            Operad::Perm | Operad::Pan => labels
                .iter()
                .map(|&p| Basis::Pointed(PointedSet::new(p, labels.iter().copied().filter(|&l| l != p).collect())))
                .collect(),
            Operad::As | Operad::Zinbiel | Operad::Leibniz | Operad::Poisson => {
                permutations(n).into_iter().map(|s| word(s.into_iter().map(Label::Num).collect())).collect()
            }
            Operad::Comm => vec![Basis::Mono(Monomial::new(labels.clone()))],
            Operad::Mag | Operad::MagInf => {
                let mut v = Vec::new();
                for sh in shapes(Family::Magmatic, self == Operad::Mag, n) {
                    for s in permutations(n) {
                        let ls: Vec<Label> = s.into_iter().map(Label::Num).collect();
                        v.push(Basis::Planar(fill_leaves(&sh, &ls)));
                    }
                }
                v
            }
            Operad::TwoAs | Operad::Dipt => {
                let fam = if self == Operad::TwoAs { Family::Alternating } else { Family::Dipterous };
                shapes(fam, false, n).iter().map(|sh| Basis::Planar(fill_leaves(sh, &labels))).collect()
            }
            Operad::HyperPreLie | Operad::HyperNap => all_hypertrees(&labels).into_iter().map(Basis::Hyper).collect(),
        };
        out.sort_by_cached_key(|b| b.to_string());
        out
    }

    /// The arity-2 basis element `op(1, 2)` when it is a single basis element.
    pub fn op_element(self, op: &str) -> Option<Basis> {
        if self.op(op).ok()?.arity != 2 {
            return None;
        }
        let gens: Vec<Basis> = match self.kind() {
            BasisKind::Tree => (1..=2).map(|i| Basis::Tree(RootedTree::leaf(Label::Num(i)))).collect(),
            BasisKind::Pointed => (1..=2).map(|i| Basis::Pointed(PointedSet::new(Label::Num(i), vec![]))).collect(),
            BasisKind::Word => (1..=2).map(|i| word(vec![Label::Num(i)])).collect(),
            BasisKind::Monomial => (1..=2).map(|i| Basis::Mono(Monomial::new(vec![Label::Num(i)]))).collect(),
            BasisKind::Planar(_) => (1..=2).map(|i| Basis::Planar(PlanarTree::Leaf(Label::Num(i)))).collect(),
            BasisKind::Hypertree => (1..=2).map(|i| Basis::Hyper(RootedHypertree::new(Label::Num(i), vec![]))).collect(),
            BasisKind::Surjection => return None,
        };
        let p = self.raw_product(op, &[&gens[0], &gens[1]]);
        let mut it = p.iter();
        match (it.next(), it.next()) {
            (Some((b, c)), None) if *c == one() => Some(b.clone()),
            _ => None,
        }
    }

    /// A generating product on basis elements, with argument checking.
    pub fn product(self, op: &str, args: &[&Basis]) -> Result<Lc, OperadError> {
        let sig = self.op(op)?;
        if sig.arity != args.len() {
            return Err(OperadError::Arity { op: op.to_string(), expected: sig.arity, got: args.len() });
        }
        for a in args {
            self.check(a)?;
        }
        if matches!(self, Operad::HyperPreLie | Operad::HyperNap) {
            let a = args[0].as_hyper().vertices();
            if args[1].as_hyper().vertices().iter().any(|v| a.binary_search(v).is_ok()) {
                return Err(OperadError::Unsupported("hypertree products need disjoint vertex sets".into()));
            }
        }
        Ok(self.raw_product(op, args))
    }

    /// Extends a generating product multilinearly.
    pub fn product_lc(self, op: &str, args: &[&Lc]) -> Lc {
        let mut acc: Vec<(Vec<&Basis>, Scalar)> = vec![(Vec::new(), one())];
        for a in args {
            let mut next = Vec::new();
            for (xs, c) in &acc {
                for (b, d) in a.iter() {
                    let mut v = xs.clone();
                    v.push(b);
                    next.push((v, c * d));
                }
            }
            acc = next;
        }
        let mut out = Lc::zero();
        for (xs, c) in acc {
            out.add_scaled(&self.raw_product(op, &xs), &c);
        }
        out
    }

    pub fn raw_product(self, op: &str, args: &[&Basis]) -> Lc {
        match self {
            Operad::PreLie => {
                let (t, s) = (args[0].as_tree(), args[1].as_tree());
                t.graft_everywhere(s).into_iter().map(|g| (Basis::Tree(g), one())).collect()
            }
            Operad::Nap => Lc::single(Basis::Tree(args[0].as_tree().with_child(args[1].as_tree().clone()))),
            Operad::Perm => Lc::single(Basis::Pointed(args[0].as_pointed().union(args[1].as_pointed()))),
            Operad::Pan => {
                if args[1].degree() == 1 {
                    Lc::single(Basis::Pointed(args[0].as_pointed().union(args[1].as_pointed())))
                } else {
                    Lc::zero()
                }
            }
            Operad::As => Lc::single(word(words::concat(args[0].as_word(), args[1].as_word()))),
            Operad::Comm => {
                let mut ls = args[0].labels();
                ls.extend(args[1].labels());
                Lc::single(Basis::Mono(Monomial::new(ls)))
            }
            Operad::Mag | Operad::MagInf => {
                Lc::single(Basis::Planar(PlanarTree::Node(Color::Node, args.iter().map(|a| a.as_planar().clone()).collect())))
            }
            Operad::Zinbiel => words_lc(words::half_shuffle(args[0].as_word(), args[1].as_word())),
            Operad::Leibniz => words_lc(words::leibniz_bracket(args[0].as_word(), args[1].as_word())),
            Operad::Poisson => {
                let (u, v) = (args[0].as_word(), args[1].as_word());
                match op {
                    "shuffle" => words_lc(words::shuffle(u, v)),
                    _ => {
                        let mut out = Lc::single(word(words::concat(u, v)));
                        out.add_term(word(words::concat(v, u)), int(-1));
                        out
                    }
                }
            }
            Operad::TwoAs => {
                let c = if op == "star" { Color::Star } else { Color::Dot };
                Lc::single(Basis::Planar(PlanarTree::flat_product(c, args[0].as_planar(), args[1].as_planar())))
            }
            Operad::Dipt => match op {
                "star" => Lc::single(Basis::Planar(PlanarTree::flat_product(Color::Star, args[0].as_planar(), args[1].as_planar()))),
                _ => Lc::single(Basis::Planar(dipt_prec(args[0].as_planar(), args[1].as_planar()))),
            },
            Operad::HyperPreLie => {
                let (h, g) = (args[0].as_hyper(), args[1].as_hyper());
                h.vertices().into_iter().map(|v| (Basis::Hyper(h.graft(g, v)), one())).collect()
            }
            Operad::HyperNap => {
                let (h, g) = (args[0].as_hyper(), args[1].as_hyper());
                Lc::single(Basis::Hyper(h.graft(g, h.root)))
            }
        }
    }

    /// A generating cooperation on a basis element, with checking.
    pub fn coproduct(self, op: &str, x: &Basis) -> Result<Tc, OperadError> {
        self.op(op)?;
        self.check(x)?;
        Ok(self.raw_coproduct(op, x))
    }

    pub fn coproduct_lc(self, op: &str, x: &Lc) -> Tc {
        x.flat_map(|b| self.raw_coproduct(op, b))
    }

    pub fn raw_coproduct(self, op: &str, x: &Basis) -> Tc {
        let tree_pairs = |v: Vec<(RootedTree, RootedTree)>| -> Tc {
            v.into_iter().map(|(a, b)| (pair(Basis::Tree(a), Basis::Tree(b)), one())).collect()
        };
        let word_pairs = |v: Vec<(Letters, Letters)>| -> Tc { v.into_iter().map(|(a, b)| (pair(word(a), word(b)), one())).collect() };
        match self {
            Operad::PreLie => tree_pairs(x.as_tree().cuts()),
            Operad::Nap => tree_pairs(x.as_tree().root_cuts()),
            Operad::Perm => {
                let p = x.as_pointed();
                let n = p.rest.len();
                let mut out = Tc::zero();
                for mask in 1u64..(1 << n) {
                    let keep: Vec<Label> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| p.rest[i]).collect();
                    let moved: Vec<Label> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| p.rest[i]).collect();
                    let left = Basis::Pointed(PointedSet::new(p.point, keep));
                    for k in 0..moved.len() {
                        let mut others = moved.clone();
                        let pt = others.remove(k);
                        out.add_term(pair(left.clone(), Basis::Pointed(PointedSet::new(pt, others))), one());
                    }
                }
                out
            }
            Operad::Pan => {
                let p = x.as_pointed();
                let mut out = Tc::zero();
                for k in 0..p.rest.len() {
                    let mut rest = p.rest.clone();
                    let a = rest.remove(k);
                    out.add_term(
                        pair(Basis::Pointed(PointedSet::new(p.point, rest)), Basis::Pointed(PointedSet::new(a, vec![]))),
                        one(),
                    );
                }
                out
            }
            Operad::As => word_pairs(words::deconcatenations(x.as_word())),
            Operad::Comm => {
                let ls = x.labels();
                words::unshuffle(&ls)
                    .into_iter()
                    .map(|(a, b)| (pair(Basis::Mono(Monomial::new(a)), Basis::Mono(Monomial::new(b))), one()))
                    .collect()
            }
            Operad::Mag | Operad::MagInf => {
                let k: usize = if self == Operad::Mag { 2 } else { op[1..].parse().unwrap_or(0) };
                match x.as_planar() {
                    PlanarTree::Node(_, cs) if cs.len() == k => {
                        Tc::single(Tensor(cs.iter().map(|c| Basis::Planar(c.clone())).collect()))
                    }
                    _ => Tc::zero(),
                }
            }
            Operad::Zinbiel => word_pairs(words::half_unshuffle(x.as_word())),
            Operad::Leibniz => words::leibniz_cobracket(x.as_word())
                .into_iter()
                .map(|(a, b, c)| (pair(word(a), word(b)), c))
                .collect(),
            Operad::Poisson => {
                let w = x.as_word();
                match op {
                    "shuffle" => word_pairs(words::unshuffle(w)),
                    _ => {
                        let mut out = Tc::zero();
                        for (a, b) in words::deconcatenations(w) {
                            out.add_term(pair(word(a.clone()), word(b.clone())), one());
                            out.add_term(pair(word(b), word(a)), int(-1));
                        }
                        out
                    }
                }
            }
            Operad::TwoAs | Operad::Dipt if op == "star" || op == "dot" => {
                let c = if op == "star" { Color::Star } else { Color::Dot };
                x.as_planar()
                    .deconcatenations(c)
                    .into_iter()
                    .map(|(a, b)| (pair(Basis::Planar(a), Basis::Planar(b)), one()))
                    .collect()
            }
            Operad::TwoAs | Operad::Dipt => dipt_prec_cuts(x.as_planar())
                .into_iter()
                .map(|(a, b)| (pair(Basis::Planar(a), Basis::Planar(b)), one()))
                .collect(),
            Operad::HyperPreLie | Operad::HyperNap => {
                let h = x.as_hyper();
                h.binary_cuts()
                    .into_iter()
                    .filter(|(e, _, _)| self == Operad::HyperPreLie || e.contains(&h.root))
                    .map(|(_, a, b)| (pair(Basis::Hyper(a), Basis::Hyper(b)), one()))
                    .collect()
            }
        }
    }

    /// Operadic composition `γ(mu; args)`, extended to arbitrary (decorated) arguments.
    pub fn compose(self, mu: &Basis, args: &[Basis]) -> Result<Lc, OperadError> {
        if !self.is_free() {
            return Err(OperadError::Unsupported(format!("{self} is a model, not a free operad")));
        }
        self.check(mu)?;
        let n = mu.degree();
        if args.len() != n {
            return Err(OperadError::Arity { op: mu.to_string(), expected: n, got: args.len() });
        }
        let mut ls = mu.labels();
        ls.sort();
        if ls != nums(1..=n as u32) {
            return Err(OperadError::NotInBasis { element: mu.to_string(), operad: self.name().to_string() });
        }
        for a in args {
            self.check(a)?;
        }
        Ok(self.raw_compose(mu, args))
    }

    pub fn raw_compose(self, mu: &Basis, args: &[Basis]) -> Lc {
        let arg = |l: Label| -> &Basis {
            match l {
                Label::Num(i) => &args[i as usize - 1],
                Label::Sym(_) => unreachable!("operations carry numeric labels"),
            }
        };
        match self {
            Operad::PreLie | Operad::Nap => compose_tree(self == Operad::PreLie, mu.as_tree(), &arg),
            Operad::Perm | Operad::Pan => {
                let m = mu.as_pointed();
                if self == Operad::Pan && m.rest.iter().any(|&l| arg(l).degree() != 1) {
                    return Lc::zero();
                }
                let mut out = arg(m.point).as_pointed().clone();
                for &l in &m.rest {
                    out = out.union(arg(l).as_pointed());
                }
                Lc::single(Basis::Pointed(out))
            }
            Operad::As => {
                let mut w = Vec::new();
                for &l in mu.as_word() {
                    w.extend_from_slice(arg(l).as_word());
                }
                Lc::single(word(w))
            }
            Operad::Comm => {
                let mut ls = Vec::new();
                for l in mu.labels() {
                    ls.extend(arg(l).labels());
                }
                Lc::single(Basis::Mono(Monomial::new(ls)))
            }
            Operad::Zinbiel => {
                let w = mu.as_word();
                let mut acc = Lc::single(arg(*w.last().unwrap()).clone());
                for &l in w.iter().rev().skip(1) {
                    acc = bilinear(&Lc::single(arg(l).clone()), &acc, |a, b| self.raw_product("prec", &[a, b]));
                }
                acc
            }
            Operad::Leibniz => {
                let w = mu.as_word();
                let mut acc = Lc::single(arg(w[0]).clone());
                for &l in &w[1..] {
                    acc = bilinear(&acc, &Lc::single(arg(l).clone()), |a, b| self.raw_product("bracket", &[a, b]));
                }
                acc
            }
            Operad::Poisson => {
                let mut acc: Option<Lc> = None;
                for f in words::minima_factors(mu.as_word()) {
                    let v = self.eval_bracketing(&words::standard_bracketing(&f), &arg);
                    acc = Some(match acc {
                        None => v,
                        Some(a) => bilinear(&a, &v, |x, y| self.raw_product("shuffle", &[x, y])),
                    });
                }
                acc.unwrap()
            }
            Operad::Mag | Operad::MagInf | Operad::TwoAs | Operad::Dipt => self.eval_planar(mu.as_planar(), &arg),
            Operad::HyperPreLie | Operad::HyperNap => Lc::zero(),
        }
    }

    fn eval_bracketing<'a>(self, b: &words::Bracketing, arg: &dyn Fn(Label) -> &'a Basis) -> Lc {
        match b {
            words::Bracketing::Letter(l) => Lc::single(arg(*l).clone()),
            words::Bracketing::Bracket(x, y) => {
                let (x, y) = (self.eval_bracketing(x, arg), self.eval_bracketing(y, arg));
                bilinear(&x, &y, |a, b| self.raw_product("bracket", &[a, b]))
            }
        }
    }

    fn eval_planar<'a>(self, t: &PlanarTree, arg: &dyn Fn(Label) -> &'a Basis) -> Lc {
        match t {
            PlanarTree::Leaf(l) => Lc::single(arg(*l).clone()),
            PlanarTree::Node(c, cs) => {
                let vals: Vec<Lc> = cs.iter().map(|s| self.eval_planar(s, arg)).collect();
                match (self, c) {
                    (Operad::Mag, _) => self.product_lc("mag", &[&vals[0], &vals[1]]),
                    (Operad::MagInf, _) => self.product_lc(&format!("m{}", vals.len()), &vals.iter().collect::<Vec<_>>()),
                    (Operad::Dipt, Color::Prec) => {
                        let (last, init) = vals.split_last().unwrap();
                        let mut acc = init[0].clone();
                        for v in &init[1..] {
                            acc = self.product_lc("star", &[&acc, v]);
                        }
                        self.product_lc("prec", &[&acc, last])
                    }
                    _ => {
                        let op = c.name();
                        let mut acc = vals[0].clone();
                        for v in &vals[1..] {
                            acc = self.product_lc(op, &[&acc, v]);
                        }
                        acc
                    }
                }
            }
        }
    }
}

fn binary(t: &PlanarTree) -> bool {
    match t {
        PlanarTree::Leaf(_) => true,
        PlanarTree::Node(_, cs) => cs.len() == 2 && cs.iter().all(binary),
    }
}

/// `s1..sk ≺ t1..tn = (((s1 ∨ … ∨ sk ∨ t1) ∨ t2) … ∨ tn)`.
pub fn dipt_prec(x: &PlanarTree, y: &PlanarTree) -> PlanarTree {
    let ys = y.items(Color::Star);
    let mut first = x.items(Color::Star);
    first.push(ys[0].clone());
    let mut acc = PlanarTree::Node(Color::Prec, first);
    for t in &ys[1..] {
        acc = PlanarTree::Node(Color::Prec, vec![acc, t.clone()]);
    }
    acc
}

/// All `(x, y)` with `x ≺ y` equal to `t`.
pub fn dipt_prec_cuts(t: &PlanarTree) -> Vec<(PlanarTree, PlanarTree)> {
    match t {
        PlanarTree::Node(Color::Prec, cs) if cs.len() >= 3 => {
            let (last, init) = cs.split_last().unwrap();
            vec![(PlanarTree::rebuild(Color::Star, init.to_vec()), last.clone())]
        }
        PlanarTree::Node(Color::Prec, cs) => {
            let mut out = vec![(cs[0].clone(), cs[1].clone())];
            for (a, b) in dipt_prec_cuts(&cs[0]) {
                out.push((a, PlanarTree::flat_product(Color::Star, &b, &cs[1])));
            }
            out
        }
        _ => Vec::new(),
    }
}

fn compose_tree<'a>(everywhere: bool, mu: &RootedTree, arg: &dyn Fn(Label) -> &'a Basis) -> Lc {
    let base = arg(mu.label).as_tree();
    let subs: Vec<Lc> = mu.children.iter().map(|c| compose_tree(everywhere, c, arg)).collect();
    let mut out = Lc::zero();
    if subs.iter().any(|s| s.is_zero()) {
        return out;
    }
    let choices: Vec<Vec<(&Basis, &Scalar)>> = subs.iter().map(|s| s.iter().collect()).collect();
    let spots = if everywhere { base.size() } else { 1 };
    let k = subs.len();
    let mut pick = vec![0usize; k];
    loop {
        let trees: Vec<RootedTree> = (0..k).map(|i| choices[i][pick[i]].0.as_tree().clone()).collect();
        let coeff: Scalar = (0..k).map(|i| choices[i][pick[i]].1.clone()).product();
        let mut target = vec![0usize; k];
        loop {
            out.add_term(Basis::Tree(attach_at(base, &trees, &target)), coeff.clone());
            if !advance(&mut target, &vec![spots; k]) {
                break;
            }
        }
        let sizes: Vec<usize> = choices.iter().map(|c| c.len()).collect();
        if !advance(&mut pick, &sizes) {
            break;
        }
    }
    out
}

/// Odometer increment; false once every digit has wrapped.
pub fn advance(digits: &mut [usize], bounds: &[usize]) -> bool {
    for i in 0..digits.len() {
        digits[i] += 1;
        if digits[i] < bounds[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}
