//! Confluence laws: the catalogue, their right-hand sides, and exhaustive checking.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{permutations, Basis, Label, PointedSet, Tensor, Word};
use crate::free_bialgebra::{Lc, Tc};
use crate::linear::{frac, int, LinComb, Scalar};
use crate::operads::words::leibniz_bracket;
use crate::operads::{advance, Operad, OperadError};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawScope {
    /// Arguments are operations applied to primitives; they must be homogeneous.
    PrimitiveArgs,
    AllArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// The law exactly as displayed.
    AsStated,
    /// A corrected form; the displayed form is kept as a separate literal entry.
    Amended,
    /// The displayed form, kept to document where it breaks.
    Literal,
    /// Deliberately wrong, to exercise failure reporting.
    Fault,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawEntry {
    pub id: &'static str,
    #[serde(serialize_with = "ser_operad")]
    pub algebra: Operad,
    #[serde(serialize_with = "ser_operad")]
    pub coalgebra: Operad,
    pub scope: LawScope,
    pub reading: Reading,
    pub bound: usize,
    pub note: &'static str,
}

fn ser_operad<S: serde::Serializer>(o: &Operad, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(o.name())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LawError {
    #[error("unknown law '{0}'")]
    UnknownLaw(String),
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error("law '{law}' needs homogeneous arguments built on primitives; got {arg}")]
    Scope { law: String, arg: String },
}

const fn entry(
    id: &'static str,
    algebra: Operad,
    coalgebra: Operad,
    scope: LawScope,
    reading: Reading,
    bound: usize,
    note: &'static str,
) -> LawEntry {
    LawEntry { id, algebra, coalgebra, scope, reading, bound, note }
}

use LawScope::{AllArgs, PrimitiveArgs};
use Operad as O;
use Reading::{Amended, AsStated, Fault, Literal};

/// Every law that is expected to hold.
pub fn catalogue() -> Vec<LawEntry> {
    vec![
        entry("hopf-comm", O::Comm, O::Comm, AllArgs, AsStated, 6, "commutative product against the unshuffle coproduct"),
        entry("nui-as", O::As, O::As, AllArgs, AsStated, 6, "concatenation against deconcatenation"),
        entry(
            "semihopf-as-zinbiel",
            O::Zinbiel,
            O::As,
            AllArgs,
            AsStated,
            6,
            "half-shuffle product against deconcatenation",
        ),
        entry("mag", O::Mag, O::Mag, AllArgs, AsStated, 6, "binary grafting against root ungrafting"),
        entry("maginf", O::MagInf, O::MagInf, AllArgs, AsStated, 6, "arity-k grafting against arity-k ungrafting"),
        entry(
            "nap-coprelie",
            O::Nap,
            O::PreLie,
            PrimitiveArgs,
            AsStated,
            6,
            "root grafting against edge deletion",
        ),
        entry("prelie", O::PreLie, O::PreLie, PrimitiveArgs, AsStated, 6, "grafting against edge deletion"),
        entry("nap", O::Nap, O::Nap, PrimitiveArgs, AsStated, 6, "root grafting against root-edge deletion"),
        entry("pan", O::Pan, O::Pan, PrimitiveArgs, AsStated, 6, "pointed union with a singleton against singleton removal"),
        entry("perm", O::Perm, O::Perm, PrimitiveArgs, Amended, 6, "last term uses the re-pointed sum of the left factor"),
        entry("copan-perm", O::Perm, O::Pan, PrimitiveArgs, Amended, 6, "last term removes the point of the right argument"),
        entry("as-leibniz", O::Leibniz, O::As, AllArgs, AsStated, 6, "bracket against deconcatenation, signed empty bracket"),
        entry("as-poisson", O::Poisson, O::As, AllArgs, AsStated, 6, "shuffle and commutator against deconcatenation"),
        entry("zinbiel-leibniz", O::Leibniz, O::Zinbiel, AllArgs, AsStated, 6, "bracket against the half-unshuffle"),
        entry("twoas", O::TwoAs, O::TwoAs, AllArgs, AsStated, 5, "each product against each deconcatenation"),
        entry("dipt", O::Dipt, O::Dipt, AllArgs, Amended, 5, "second term reads the right Sweedler factor"),
        entry("hypertree-prelie", O::HyperPreLie, O::HyperPreLie, AllArgs, AsStated, 5, "grafting law on rooted hypertrees"),
        entry("hypertree-nap", O::HyperNap, O::HyperNap, AllArgs, AsStated, 5, "root grafting law on rooted hypertrees"),
    ]
}

/// Displayed forms that do not hold as written.
pub fn literal_readings() -> Vec<LawEntry> {
    vec![
        entry("perm-literal", O::Perm, O::Perm, PrimitiveArgs, Literal, 6, "last term as displayed"),
        entry("copan-perm-literal", O::Perm, O::Pan, PrimitiveArgs, Literal, 6, "last term as displayed"),
        entry("dipt-literal", O::Dipt, O::Dipt, AllArgs, Literal, 5, "second term reads the left Sweedler factor twice"),
    ]
}

/// Entries with a corrupted right-hand side.
pub fn injected_faults() -> Vec<LawEntry> {
    vec![entry("nap-dropped-term", O::Nap, O::Nap, PrimitiveArgs, Fault, 6, "nap law without the u ⊗ v term")]
}

pub fn find_law(id: &str) -> Result<LawEntry, LawError> {
    catalogue()
        .into_iter()
        .chain(literal_readings())
        .chain(injected_faults())
        .find(|e| e.id == id)
        .ok_or_else(|| LawError::UnknownLaw(id.to_string()))
}

fn tensor(x: &Lc, y: &Lc) -> Tc {
    let mut out = Tc::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(Tensor::pair(a.clone(), b.clone()), c * d);
        }
    }
    out
}

fn one(b: &Basis) -> Lc {
    Lc::single(b.clone())
}

struct Ctx<'a> {
    e: &'a LawEntry,
}

impl Ctx<'_> {
    fn m(&self, op: &str, x: &Lc, y: &Lc) -> Lc {
        self.e.algebra.product_lc(op, &[x, y])
    }

    /// Sweedler terms of a cooperation applied to a combination.
    fn d(&self, op: &str, x: &Lc) -> Vec<(Basis, Basis, Scalar)> {
        self.e
            .coalgebra
            .coproduct_lc(op, x)
            .iter()
            .map(|(t, c)| (t.0[0].clone(), t.0[1].clone(), c.clone()))
            .collect()
    }

    /// `x + Σ x2 × x1` over the terms with a single-point right factor.
    fn repointed(&self, x: &Basis) -> Lc {
        let mut out = one(x);
        for (a, b, c) in self.d("perm", &one(x)) {
            if b.degree() == 1 {
                out.add_scaled(&self.m("perm", &one(&b), &one(&a)), &c);
            }
        }
        out
    }

    fn bar(&self, x: &Basis) -> Lc {
        Lc::term(x.clone(), frac(1, x.degree() as i64))
    }

    /// The nonunital infinitesimal law for a product and its deconcatenation.
    fn nui(&self, op: &str, u: &Basis, v: &Basis) -> Tc {
        let (u1, v1) = (one(u), one(v));
        let mut out = tensor(&u1, &v1);
        for (a, b, c) in self.d(op, &u1) {
            out.add_scaled(&tensor(&one(&a), &self.m(op, &one(&b), &v1)), &c);
        }
        for (a, b, c) in self.d(op, &v1) {
            out.add_scaled(&tensor(&self.m(op, &u1, &one(&a)), &one(&b)), &c);
        }
        out
    }

    fn hopf(&self, mop: &str, dop: &str, u: &Basis, v: &Basis) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let mut out = tensor(&uu, &vv);
        out.add_assign(&tensor(&vv, &uu));
        let du = self.d(dop, &uu);
        let dv = self.d(dop, &vv);
        for (a, b, c) in &du {
            out.add_scaled(&tensor(&one(a), &self.m(mop, &one(b), &vv)), c);
            out.add_scaled(&tensor(&self.m(mop, &one(a), &vv), &one(b)), c);
        }
        for (a, b, c) in &dv {
            out.add_scaled(&tensor(&one(a), &self.m(mop, &uu, &one(b))), c);
            out.add_scaled(&tensor(&self.m(mop, &uu, &one(a)), &one(b)), c);
        }
        for (a, b, c) in &du {
            for (x, y, d) in &dv {
                out.add_scaled(&tensor(&self.m(mop, &one(a), &one(x)), &self.m(mop, &one(b), &one(y))), &(c * d));
            }
        }
        out
    }

    fn grafting(&self, gop: &str, dop: &str, u: &Basis, v: &Basis) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let mut out = tensor(&uu, &vv).scaled(&int(u.degree() as i64));
        for (a, b, c) in self.d(dop, &vv) {
            out.add_scaled(&tensor(&self.m(gop, &uu, &one(&a)), &one(&b)), &c);
        }
        for (a, b, c) in self.d(dop, &uu) {
            out.add_scaled(&tensor(&self.m(gop, &one(&a), &vv), &one(&b)), &c);
            out.add_scaled(&tensor(&one(&a), &self.m(gop, &one(&b), &vv)), &c);
        }
        out
    }

    fn root_grafting(&self, gop: &str, dop: &str, u: &Basis, v: &Basis, right_too: bool) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let mut out = tensor(&uu, &vv);
        for (a, b, c) in self.d(dop, &uu) {
            out.add_scaled(&tensor(&self.m(gop, &one(&a), &vv), &one(&b)), &c);
        }
        if right_too {
            for (a, b, c) in self.d(dop, &vv) {
                out.add_scaled(&tensor(&self.m(gop, &uu, &one(&a)), &one(&b)), &c);
            }
        }
        out
    }

    fn perm(&self, u: &Basis, v: &Basis, literal: bool) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let x = |p: &Lc, q: &Lc| self.m("perm", p, q);
        let vdot = self.repointed(v);
        let du = self.d("perm", &uu);
        let dv = self.d("perm", &vv);
        let mut out = tensor(&uu, &vdot);
        for (a, b, c) in &du {
            let mut right = x(&one(b), &vv);
            right.add_assign(&x(&vdot, &self.bar(b)));
            out.add_scaled(&tensor(&one(a), &right), c);
            out.add_scaled(&tensor(&x(&one(a), &vv), &one(b)), c);
        }
        for (a, b, c) in &dv {
            out.add_scaled(&tensor(&x(&uu, &one(a)), &one(b)), c);
            out.add_scaled(&tensor(&x(&uu, &self.bar(b)), &self.repointed(a)), c);
        }
        for (a, b, c) in &du {
            for (p, q, d) in &dv {
                let cd = c * d;
                let mut r1 = x(&one(b), &self.bar(q));
                r1.add_assign(&x(&one(q), &self.bar(b)));
                out.add_scaled(&tensor(&x(&one(a), &one(p)), &r1), &cd);
                let mut r2 = x(&one(b), &one(p));
                let lead = if literal { one(p) } else { self.repointed(p) };
                r2.add_assign(&x(&lead, &self.bar(b)));
                out.add_scaled(&tensor(&x(&one(a), &self.bar(q)), &r2), &cd);
            }
        }
        out
    }

    fn copan_perm(&self, u: &Basis, v: &Basis, literal: bool) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let x = |p: &Lc, q: &Lc| self.m("perm", p, q);
        let mut out = Tc::zero();
        if v.degree() == 1 {
            out.add_assign(&tensor(&uu, &vv));
        }
        for (a, b, c) in self.d("pan", &uu) {
            out.add_scaled(&tensor(&x(&one(&a), &vv), &one(&b)), &c);
        }
        for (a, b, c) in self.d("pan", &vv) {
            out.add_scaled(&tensor(&x(&uu, &one(&a)), &one(&b)), &c);
            if literal && a.degree() == 1 {
                out.add_scaled(&tensor(&x(&uu, &one(&b)), &one(&a)), &c);
            }
        }
        if !literal && v.degree() >= 2 {
            let (p, q) = (u.as_pointed(), v.as_pointed());
            let mut rest = p.rest.clone();
            rest.extend(q.rest.iter().copied());
            let joined = Basis::Pointed(PointedSet::new(p.point, rest));
            let point = Basis::Pointed(PointedSet::new(q.point, vec![]));
            out.add_assign(&tensor(&one(&joined), &one(&point)));
        }
        out
    }

    fn bracket(&self, x: &Lc, y: &Lc) -> Lc {
        self.m("bracket", x, y)
    }

    fn empty_bracket(&self, v: &Basis) -> Lc {
        leibniz_bracket(&[], v.as_word()).map_keys(|w| Basis::Word(Word(w.clone())))
    }

    fn as_leibniz(&self, u: &Basis, v: &Basis) -> Tc {
        let uu = one(u);
        let ev = self.empty_bracket(v);
        let mut out = tensor(&uu, &ev);
        for (a, b, c) in self.d("concat", &uu) {
            out.add_scaled(&tensor(&one(&a), &self.bracket(&one(&b), &one(v))), &c);
        }
        for (a, b, c) in self.d("concat", &ev) {
            let mut w = u.as_word().to_vec();
            w.extend_from_slice(a.as_word());
            out.add_scaled(&tensor(&one(&Basis::Word(Word(w))), &one(&b)), &c);
        }
        out
    }

    fn zinbiel_leibniz(&self, u: &Basis, v: &Basis) -> Tc {
        let uu = one(u);
        let mut out = tensor(&uu, &self.empty_bracket(v));
        for (a, b, c) in self.d("prec", &uu) {
            out.add_scaled(&tensor(&one(&a), &self.bracket(&one(&b), &one(v))), &c);
            out.add_scaled(&tensor(&self.bracket(&one(&a), &one(v)), &one(&b)), &c);
        }
        out
    }

    fn poisson_bracket(&self, u: &Basis, v: &Basis) -> Tc {
        let cat = |p: &Basis, q: &Basis| {
            let mut w = p.as_word().to_vec();
            w.extend_from_slice(q.as_word());
            one(&Basis::Word(Word(w)))
        };
        let (uu, vv) = (one(u), one(v));
        let mut out = tensor(&uu, &vv);
        out.sub_assign(&tensor(&vv, &uu));
        for (a, b, c) in self.d("concat", &uu) {
            out.add_scaled(&tensor(&one(&a), &cat(&b, v)), &c);
            out.add_scaled(&tensor(&cat(v, &a), &one(&b)), &-c.clone());
        }
        for (a, b, c) in self.d("concat", &vv) {
            out.add_scaled(&tensor(&cat(u, &a), &one(&b)), &c);
            out.add_scaled(&tensor(&one(&a), &cat(&b, u)), &-c.clone());
        }
        out
    }

    fn dipt_prec(&self, u: &Basis, v: &Basis, literal: bool) -> Tc {
        let (uu, vv) = (one(u), one(v));
        let mut out = tensor(&uu, &vv);
        for (a, b, c) in self.d("prec", &uu) {
            let right = if literal { &a } else { &b };
            out.add_scaled(&tensor(&one(&a), &self.m("star", &one(right), &vv)), &c);
        }
        for (a, b, c) in self.d("star", &vv) {
            out.add_scaled(&tensor(&self.m("prec", &uu, &one(&a)), &one(&b)), &c);
        }
        out
    }
}

/// The right-hand side of `entry` for cooperation `delta` applied to `mu(args)`.
pub fn law_rhs(e: &LawEntry, delta: &str, mu: &str, args: &[Basis]) -> Result<Tc, LawError> {
    let mop = e.algebra.op(mu)?;
    e.coalgebra.op(delta)?;
    if mop.arity != args.len() {
        return Err(OperadError::Arity { op: mu.to_string(), expected: mop.arity, got: args.len() }.into());
    }
    for a in args {
        if !e.algebra.accepts(a) {
            return Err(OperadError::NotInBasis { element: a.to_string(), operad: e.algebra.name().to_string() }.into());
        }
    }
    Ok(raw_rhs(e, delta, mu, args))
}

/// Multilinear extension of [`law_rhs`]; primitive-scope laws need homogeneous arguments.
pub fn law_rhs_lc(e: &LawEntry, delta: &str, mu: &str, args: &[Lc]) -> Result<Tc, LawError> {
    if e.scope == PrimitiveArgs {
        for a in args {
            let mut degs = a.keys().map(|b| b.degree());
            let first = degs.next();
            if first.is_none() || degs.any(|d| Some(d) != first) {
                return Err(LawError::Scope { law: e.id.to_string(), arg: a.to_string() });
            }
        }
    }
    let terms: Vec<Vec<(&Basis, &Scalar)>> = args.iter().map(|a| a.iter().collect()).collect();
    let mut out = Tc::zero();
    if terms.iter().any(|t| t.is_empty()) {
        return Ok(out);
    }
    let bounds: Vec<usize> = terms.iter().map(|t| t.len()).collect();
    let mut pick = vec![0usize; args.len()];
    loop {
        let xs: Vec<Basis> = pick.iter().enumerate().map(|(i, &p)| terms[i][p].0.clone()).collect();
        let c: Scalar = pick.iter().enumerate().map(|(i, &p)| terms[i][p].1.clone()).product();
        out.add_scaled(&law_rhs(e, delta, mu, &xs)?, &c);
        if !advance(&mut pick, &bounds) {
            return Ok(out);
        }
    }
}

fn raw_rhs(e: &LawEntry, delta: &str, mu: &str, args: &[Basis]) -> Tc {
    let ctx = Ctx { e };
    let literal = e.reading == Literal;
    let (u, v) = (&args[0], args.get(1).unwrap_or(&args[0]));
    match e.id {
        "hopf-comm" => ctx.hopf("mul", "mul", u, v),
        "nui-as" => ctx.nui("concat", u, v),
        "semihopf-as-zinbiel" => {
            let star = |p: &Lc, q: &Lc| {
                let mut s = ctx.m("prec", p, q);
                s.add_assign(&ctx.m("prec", q, p));
                s
            };
            let (uu, vv) = (one(u), one(v));
            let mut out = tensor(&uu, &vv);
            let du = ctx.d("concat", &uu);
            let dv = ctx.d("concat", &vv);
            for (a, b, c) in &dv {
                out.add_scaled(&tensor(&ctx.m("prec", &uu, &one(a)), &one(b)), c);
            }
            for (a, b, c) in &du {
                out.add_scaled(&tensor(&ctx.m("prec", &one(a), &vv), &one(b)), c);
                out.add_scaled(&tensor(&one(a), &star(&one(b), &vv)), c);
                for (p, q, d) in &dv {
                    out.add_scaled(&tensor(&ctx.m("prec", &one(a), &one(p)), &star(&one(b), &one(q))), &(c * d));
                }
            }
            out
        }
        "mag" => tensor(&one(u), &one(v)),
        "maginf" => {
            if delta == mu {
                Tc::single(Tensor(args.to_vec()))
            } else {
                Tc::zero()
            }
        }
        "nap-coprelie" => ctx.root_grafting("nap", "graft", u, v, true),
        "prelie" | "hypertree-prelie" => ctx.grafting("graft", "graft", u, v),
        "nap" | "hypertree-nap" => ctx.root_grafting("nap", "nap", u, v, false),
        "nap-dropped-term" => {
            let mut out = ctx.root_grafting("nap", "nap", u, v, false);
            out.sub_assign(&tensor(&one(u), &one(v)));
            out
        }
        "pan" => {
            if v.degree() == 1 {
                ctx.root_grafting("pan", "pan", u, v, false)
            } else {
                Tc::zero()
            }
        }
        "perm" | "perm-literal" => ctx.perm(u, v, literal),
        "copan-perm" | "copan-perm-literal" => ctx.copan_perm(u, v, literal),
        "as-leibniz" => ctx.as_leibniz(u, v),
        "zinbiel-leibniz" => ctx.zinbiel_leibniz(u, v),
        "as-poisson" => match mu {
            "shuffle" => ctx.hopf("shuffle", "concat", u, v),
            _ => ctx.poisson_bracket(u, v),
        },
        "twoas" => {
            if delta == mu {
                ctx.nui(mu, u, v)
            } else {
                Tc::zero()
            }
        }
        "dipt" | "dipt-literal" => match (delta, mu) {
            ("star", "star") => ctx.nui("star", u, v),
            ("prec", "prec") => ctx.dipt_prec(u, v, literal),
            _ => Tc::zero(),
        },
        other => unreachable!("law {other} has no right-hand side"),
    }
}

/// The left-hand side `delta(mu(args))` computed in the model.
pub fn law_lhs(e: &LawEntry, delta: &str, mu: &str, args: &[Basis]) -> Tc {
    let refs: Vec<&Basis> = args.iter().collect();
    let p = e.algebra.raw_product(mu, &refs);
    e.coalgebra.coproduct_lc(delta, &p)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub delta: String,
    pub mu: String,
    pub args: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub algebra: String,
    pub coalgebra: String,
    pub reading: Reading,
    pub bound: usize,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

/// Argument tuples of the given arity: consecutive label blocks, total degree at most `bound`.
pub fn argument_tuples(a: Operad, arity: usize, bound: usize) -> Vec<Vec<Basis>> {
    let bases: Vec<Vec<Basis>> = (0..=bound).map(|n| a.basis(n)).collect();
    let mut out = Vec::new();
    let mut degs = vec![1usize; arity];
    loop {
        if degs.iter().sum::<usize>() <= bound {
            let mut acc: Vec<Vec<Basis>> = vec![Vec::new()];
            let mut shift = 0u32;
            for &d in &degs {
                let mut next = Vec::new();
                for partial in &acc {
                    for b in &bases[d] {
                        let mut p = partial.clone();
                        p.push(b.shift(shift));
                        next.push(p);
                    }
                }
                acc = next;
                shift += d as u32;
            }
            out.extend(acc);
        }
        let mut i = 0;
        loop {
            if i == arity {
                return out;
            }
            degs[i] += 1;
            if degs.iter().sum::<usize>() <= bound {
                break;
            }
            degs[i] = 1;
            i += 1;
        }
    }
}

/// Checks the law on every generating (co)operation and argument tuple up to total arity `bound`.
pub fn check_law(e: &LawEntry, bound: usize) -> LawReport {
    check_law_sampled(e, bound, None)
}

/// As [`check_law`], restricted to `size` cases drawn with the given seed when `sample` is set.
pub fn check_law_sampled(e: &LawEntry, bound: usize, sample: Option<(usize, u64)>) -> LawReport {
    let mut cases: Vec<(String, String, Vec<Basis>)> = Vec::new();
    for mop in e.algebra.ops() {
        if mop.arity > bound {
            continue;
        }
        let tuples = argument_tuples(e.algebra, mop.arity, bound);
        for dop in e.coalgebra.coops() {
            if dop.arity > bound {
                continue;
            }
            for t in &tuples {
                cases.push((dop.name.clone(), mop.name.clone(), t.clone()));
            }
        }
    }
    if let Some((size, seed)) = sample {
        if size < cases.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = rand::seq::index::sample(&mut rng, cases.len(), size).into_vec();
            picked.sort_unstable();
            cases = picked.into_iter().map(|i| cases[i].clone()).collect();
        }
    }
    let failure = cases.par_iter().find_map_first(|(d, m, args)| {
        let lhs = law_lhs(e, d, m, args);
        let rhs = raw_rhs(e, d, m, args);
        if lhs == rhs {
            None
        } else {
            let mut diff = lhs.clone();
            diff.sub_assign(&rhs);
            Some(Counterexample {
                delta: d.clone(),
                mu: m.clone(),
                args: args.iter().map(|b| b.to_string()).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff.to_string(),
            })
        }
    });
    LawReport {
        law: e.id.to_string(),
        algebra: e.algebra.name().to_string(),
        coalgebra: e.coalgebra.name().to_string(),
        reading: e.reading,
        bound,
        cases: cases.len(),
        passed: failure.is_none(),
        counterexample: failure,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub operad: String,
    pub max_arity: usize,
    pub product_equivariance: bool,
    pub coproduct_equivariance: bool,
    pub pairing_invariance: bool,
    /// Whether composing a basis operation with distinct generators returns that basis element.
    pub monomial_basis: bool,
    pub passed: bool,
    pub failure: Option<String>,
}

fn permute_tensor(t: &Tensor, s: &[u32]) -> Tensor {
    Tensor(t.0.iter().map(|b| b.permute(s)).collect())
}

fn inverse(s: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; s.len()];
    for (i, &v) in s.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Compatibility of the basis with the symmetric group actions, up to arity `max_arity`.
pub fn check_compatible_basis(a: Operad, max_arity: usize) -> BasisReport {
    let mut failure: Option<String> = None;
    let note = |f: &mut Option<String>, msg: String| {
        if f.is_none() {
            *f = Some(msg);
        }
    };
    let mut prod_ok = true;
    let mut coprod_ok = true;
    let mut pair_ok = true;
    let mut mono_ok = true;
    for n in 2..=max_arity {
        let perms = permutations(n);
        for op in a.ops() {
            if op.arity > n {
                continue;
            }
            for args in argument_tuples(a, op.arity, n).into_iter().filter(|t| t.iter().map(|b| b.degree()).sum::<usize>() == n) {
                let refs: Vec<&Basis> = args.iter().collect();
                let p = a.raw_product(&op.name, &refs);
                for s in &perms {
                    let moved: Vec<Basis> = args.iter().map(|b| b.permute(s)).collect();
                    let mrefs: Vec<&Basis> = moved.iter().collect();
                    if a.raw_product(&op.name, &mrefs) != p.map_keys(|b| b.permute(s)) {
                        prod_ok = false;
                        note(&mut failure, format!("{} on {:?} under {:?}", op.name, refs.iter().map(|b| b.to_string()).collect::<Vec<_>>(), s));
                    }
                }
            }
        }
        let basis = a.basis(n);
        for op in a.coops() {
            for x in &basis {
                let d = a.raw_coproduct(&op.name, x);
                for s in &perms {
                    if a.raw_coproduct(&op.name, &x.permute(s)) != d.map_keys(|t| permute_tensor(t, s)) {
                        coprod_ok = false;
                        note(&mut failure, format!("cooperation {} on {x} under {s:?}", op.name));
                    }
                }
            }
        }
        if !a.is_free() {
            continue;
        }
        let prims: Vec<Basis> = (1..=n as u32).map(|i| a.basis(1)[0].relabel(|_| Label::Num(i))).collect();
        for delta in &basis {
            let direct = a.raw_compose(delta, &prims);
            for s in &perms {
                let moved: Vec<Basis> = s.iter().map(|&i| prims[i as usize - 1].clone()).collect();
                let via = a.raw_compose(delta, &moved);
                let sinv = inverse(s);
                for mu in &basis {
                    let lhs = via.coeff(mu);
                    let rhs = direct.coeff(&mu.permute(&sinv));
                    if lhs != rhs {
                        pair_ok = false;
                        note(&mut failure, format!("pairing of {delta} with {mu} under {s:?}"));
                    }
                    let expect = if &delta.permute(s) == mu { int(1) } else { int(0) };
                    if lhs != expect {
                        mono_ok = false;
                    }
                }
            }
        }
    }
    let passed = prod_ok && coprod_ok && pair_ok && (mono_ok || a == Operad::Poisson);
    BasisReport {
        operad: a.name().to_string(),
        max_arity,
        product_equivariance: prod_ok,
        coproduct_equivariance: coprod_ok,
        pairing_invariance: pair_ok,
        monomial_basis: mono_ok,
        passed,
        failure,
    }
}

/// Helper for tests and the command line: the empty-left Leibniz bracket.
pub fn empty_bracket(v: &[Label]) -> LinComb<Vec<Label>> {
    leibniz_bracket(&[], v)
}
