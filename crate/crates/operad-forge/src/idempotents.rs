//! The inductive idempotent onto primitives, the closed-form series, and the rigidity round trip.

use std::collections::HashMap;

use num_traits::{One, Signed};

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{Basis, Label, Tensor};
use crate::free_bialgebra::{
    by_degree, orbit_representatives, primitives_of, DualTables, FreeAlgebra, FreeError, Lc, Path, Tc,
};
use crate::linear::{frac, int, LinComb, Scalar};
use crate::matrix::{self, Echelon};
use crate::operads::{advance, Operad};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdemError {
    #[error(transparent)]
    Free(#[from] FreeError),
    #[error("{0}")]
    Unsupported(String),
    #[error("the pairing between {coalgebra}({arity}) and {algebra}({arity}) is singular")]
    Singular { algebra: String, coalgebra: String, arity: usize },
    #[error("element of degree {degree} exceeds the plan bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
}

/// One orbit representative of `A(n)` with its dual cooperation in `C(n)`.
#[derive(Clone, Debug)]
pub struct GeneratingPair {
    pub op: Basis,
    pub stabilizer: u64,
    pub coop: Lc,
}

#[derive(Clone, Debug)]
pub struct IdempotentPlan {
    pub algebra: Operad,
    pub coalgebra: Operad,
    pub bound: usize,
    /// `pairs[n]` for arity `n ≥ 2`; lower entries are empty.
    pub pairs: Vec<Vec<GeneratingPair>>,
}

fn primitive_args(a: Operad, n: usize) -> Vec<Basis> {
    let one = a.basis(1)[0].clone();
    (1..=n as u32).map(|i| one.relabel(|_| Label::Num(i))).collect()
}

impl IdempotentPlan {
    pub fn new(algebra: Operad, coalgebra: Operad, bound: usize) -> Result<Self, IdemError> {
        if !algebra.is_free() {
            return Err(IdemError::Unsupported(format!("{algebra} has no free composition")));
        }
        if algebra.kind() != coalgebra.kind() {
            return Err(IdemError::Unsupported(format!("{algebra} and {coalgebra} use different species")));
        }
        let mut pairs = vec![Vec::new(), Vec::new()];
        for n in 2..=bound {
            let prims = primitive_args(algebra, n);
            let c_basis = coalgebra.basis(n);
            // ⟨c, μ⟩ = Σ_x μ(p)[x] / c(p)[x]
            let mut index: HashMap<Basis, Vec<(Basis, Scalar)>> = HashMap::new();
            for mu in algebra.basis(n) {
                for (x, k) in algebra.raw_compose(&mu, &prims).iter() {
                    index.entry(x.clone()).or_default().push((mu.clone(), k.clone()));
                }
            }
            let mut rows: Vec<Lc> = Vec::new();
            for c in &c_basis {
                let mut row = Lc::zero();
                for (x, k) in coalgebra.raw_compose(c, &prims).iter() {
                    if !k.abs().is_one() {
                        return Err(FreeError::NonUnit { element: x.to_string(), product: c.to_string(), coeff: k.to_string() }.into());
                    }
                    for (mu, kmu) in index.get(x).into_iter().flatten() {
                        row.add_term(mu.clone(), kmu / k);
                    }
                }
                rows.push(row);
            }
            let mut level = Vec::new();
            for (op, stabilizer) in orbit_representatives(algebra, n) {
                let lambda = matrix::solve(&rows, &Lc::single(op.clone())).ok_or_else(|| IdemError::Singular {
                    algebra: algebra.name().to_string(),
                    coalgebra: coalgebra.name().to_string(),
                    arity: n,
                })?;
                let coop = lambda.map_keys(|&i| c_basis[i].clone());
                level.push(GeneratingPair { op, stabilizer, coop });
            }
            pairs.push(level);
        }
        Ok(IdempotentPlan { algebra, coalgebra, bound, pairs })
    }
}

/// Evaluates the inductive idempotent, caching every stage.
pub struct Idempotent {
    pub plan: IdempotentPlan,
    tables: DualTables,
    memo: HashMap<(usize, Basis), Lc>,
}

impl Idempotent {
    pub fn new(plan: IdempotentPlan) -> Self {
        Idempotent { plan, tables: DualTables::new(), memo: HashMap::new() }
    }

    pub fn for_operads(algebra: Operad, coalgebra: Operad, bound: usize) -> Result<Self, IdemError> {
        Ok(Self::new(IdempotentPlan::new(algebra, coalgebra, bound)?))
    }

    pub fn apply(&mut self, x: &Lc) -> Result<Lc, IdemError> {
        let mut out = Lc::zero();
        for (b, c) in x.iter() {
            let d = b.degree();
            if d > self.plan.bound {
                return Err(IdemError::DegreeOverflow { degree: d, bound: self.plan.bound });
            }
            out.add_scaled(&self.stage(d, b)?, c);
        }
        Ok(out)
    }

    /// `e_n(y)`; stages above the degree of `y` agree with `e_{deg y}`.
    fn stage(&mut self, n: usize, y: &Basis) -> Result<Lc, IdemError> {
        let n = n.min(y.degree());
        if n <= 1 {
            return Ok(Lc::single(y.clone()));
        }
        if let Some(v) = self.memo.get(&(n, y.clone())) {
            return Ok(v.clone());
        }
        let mut out = self.stage(n - 1, y)?;
        let pairs = self.plan.pairs[n].clone();
        for p in &pairs {
            let mut split = Tc::zero();
            for (c, k) in p.coop.iter() {
                split.add_scaled(&self.tables.cooperation(self.plan.coalgebra, c, y)?, k);
            }
            let weight = frac(1, p.stabilizer as i64);
            for (t, k) in split.iter() {
                let value = self.plan.algebra.raw_compose(&p.op, &t.0);
                for (z, kz) in value.iter() {
                    let inner = self.stage(n - 1, z)?;
                    out.add_scaled(&inner, &-(k * kz * &weight));
                }
            }
        }
        self.memo.insert((n, y.clone()), out.clone());
        Ok(out)
    }
}

/// The zig-zag operators `D_1 = id`, `D_{n+1} = μ∘(D_n⊗id)∘Δ` for the generating product and coproduct.
pub fn dn_operator(a: Operad, n: usize, x: &Lc) -> Lc {
    if n == 0 {
        return Lc::zero();
    }
    dn_rec(a, &a.default_op(), n, x)
}

fn dn_rec(a: Operad, op: &str, n: usize, x: &Lc) -> Lc {
    if n == 1 {
        return x.clone();
    }
    let mut out = Lc::zero();
    for (t, c) in a.coproduct_lc(op, x).iter() {
        let left = dn_rec(a, op, n - 1, &Lc::single(t.0[0].clone()));
        out.add_scaled(&a.product_lc(op, &[&left, &Lc::single(t.0[1].clone())]), c);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Perm,
    Nap,
    Pan,
}

impl SeriesKind {
    pub fn operad(self) -> Operad {
        match self {
            SeriesKind::Perm => Operad::Perm,
            SeriesKind::Nap => Operad::Nap,
            SeriesKind::Pan => Operad::Pan,
        }
    }

    pub fn from_operad(o: Operad) -> Option<Self> {
        match o {
            Operad::Perm => Some(SeriesKind::Perm),
            Operad::Nap => Some(SeriesKind::Nap),
            Operad::Pan => Some(SeriesKind::Pan),
            _ => None,
        }
    }

    /// The announced coefficient of `D_n`.
    pub fn coefficient(self, n: usize) -> Scalar {
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        let fact: Scalar = (1..=n as i64).map(int).product();
        let num = match self {
            SeriesKind::Perm => (0..n - 1).map(|_| int(n as i64)).product(),
            _ => int(n as i64),
        };
        sign * num / fact
    }
}

/// `Σ_{n ≤ k} c_n D_n(x)`.
pub fn series_partial(kind: SeriesKind, k: usize, x: &Lc) -> Lc {
    let a = kind.operad();
    let mut out = Lc::zero();
    for n in 1..=k {
        out.add_scaled(&dn_operator(a, n, x), &kind.coefficient(n));
    }
    out
}

/// The series truncated at the top degree of `x`, beyond which every `D_n` vanishes.
pub fn series_idempotent(kind: SeriesKind, x: &Lc) -> Lc {
    let top = x.keys().map(|b| b.degree()).max().unwrap_or(0);
    series_partial(kind, top, x)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Discrepancy {
    pub element: String,
    pub series: String,
    pub inductive: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub max_degree: usize,
    pub checked: usize,
    pub agree: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

/// Compares the series against the inductive idempotent on every basis element up to `max_degree`.
pub fn compare_series(kind: SeriesKind, max_degree: usize) -> Result<SeriesReport, IdemError> {
    let a = kind.operad();
    let mut e = Idempotent::for_operads(a, a, max_degree)?;
    let mut checked = 0;
    for n in 1..=max_degree {
        for b in a.basis(n) {
            let x = Lc::single(b.clone());
            let s = series_idempotent(kind, &x);
            let i = e.apply(&x)?;
            checked += 1;
            if s != i {
                return Ok(SeriesReport {
                    kind,
                    max_degree,
                    checked,
                    agree: false,
                    first_discrepancy: Some(Discrepancy {
                        element: b.to_string(),
                        series: s.to_string(),
                        inductive: i.to_string(),
                    }),
                });
            }
        }
    }
    Ok(SeriesReport { kind, max_degree, checked, agree: true, first_discrepancy: None })
}

/// Primitive elements of each degree up to `bound`, as an exact kernel basis.
pub fn extract_primitives(fa: &FreeAlgebra, bound: usize) -> Vec<Lc> {
    (1..=bound).flat_map(|d| primitives_of(fa.coalgebra, &fa.basis(d))).collect()
}

/// Kernel basis of the generating cooperations on the arity-`n` basis of `a` (also for non-free models).
pub fn operad_primitives(a: Operad, n: usize) -> Vec<Lc> {
    primitives_of(a, &a.basis(n))
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dimension: usize,
    pub primitives: usize,
    pub generated: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub algebra: String,
    pub coalgebra: String,
    pub generators: usize,
    pub bound: usize,
    pub degrees: Vec<DegreeRow>,
    /// `dim F_n` for `n = 1..=bound`, summed over degrees up to the bound.
    pub cofiltration: Vec<usize>,
    /// `dim M_n` for `n = 1..=bound`.
    pub products: Vec<usize>,
    pub filtration_splits: bool,
    /// The extracted primitives span exactly the generators.
    pub primitives_are_generators: bool,
    pub image_is_primitive: bool,
    pub coproduct_kills_image: bool,
    pub idempotent: bool,
    pub kills_products: bool,
    pub generated: bool,
    pub passed: bool,
}

fn degree_of_lc(x: &Lc) -> usize {
    x.keys().next().map(|b| b.degree()).unwrap_or(0)
}

/// Tuples of primitives of total degree `d`, one tuple per choice.
fn primitive_tuples(prims: &[Lc], n: usize, d: usize) -> Vec<Vec<&Lc>> {
    let mut out = Vec::new();
    if prims.is_empty() {
        return out;
    }
    let mut pick = vec![0usize; n];
    let bounds = vec![prims.len(); n];
    loop {
        if pick.iter().map(|&i| degree_of_lc(&prims[i])).sum::<usize>() == d {
            out.push(pick.iter().map(|&i| &prims[i]).collect());
        }
        if !advance(&mut pick, &bounds) {
            return out;
        }
    }
}

/// Verifies the rigidity consequences degree by degree on the free algebra.
pub fn rigidity_roundtrip(fa: &FreeAlgebra, bound: usize) -> Result<RigidityReport, IdemError> {
    let bases: Vec<Vec<Basis>> = (0..=bound).map(|d| if d == 0 { Vec::new() } else { fa.basis(d) }).collect();
    let prims = extract_primitives(fa, bound);

    let mut cofiltration = Vec::new();
    for n in 1..=bound {
        let mut dim = 0;
        for basis in bases.iter().skip(1) {
            let images: Vec<LinComb<(Path, Tensor)>> = basis.iter().map(|b| fa.iterated(b, n)).collect();
            dim += matrix::kernel(&images).len();
        }
        cofiltration.push(dim);
    }

    let mut products = Vec::new();
    let mut spans: Vec<Echelon<Basis>> = (0..=bound).map(|_| Echelon::new()).collect();
    let mut product_vectors: Vec<Lc> = Vec::new();
    for n in 1..=bound {
        let ops: Vec<Basis> = orbit_representatives(fa.algebra, n).into_iter().map(|(b, _)| b).collect();
        let mut dim = 0;
        for (d, span) in spans.iter_mut().enumerate().skip(n) {
            let mut level = Echelon::new();
            for tuple in primitive_tuples(&prims, n, d) {
                let args: Vec<Lc> = tuple.into_iter().cloned().collect();
                for mu in &ops {
                    let v = fa.evaluate(mu, &args)?;
                    if level.insert(&v) && n >= 2 {
                        product_vectors.push(v.clone());
                    }
                    span.insert(&v);
                }
            }
            dim += level.rank();
        }
        products.push(dim);
    }

    let filtration_splits =
        (0..bound).all(|i| cofiltration[i] == if i == 0 { 0 } else { cofiltration[i - 1] } + products[i]);

    let mut e = Idempotent::for_operads(fa.algebra, fa.coalgebra, bound)?;
    let mut prim_span: Echelon<Basis> = Echelon::new();
    for p in &prims {
        prim_span.insert(p);
    }
    let mut image_span: Echelon<Basis> = Echelon::new();
    let mut image_is_primitive = true;
    let mut coproduct_kills_image = true;
    let mut idempotent = true;
    let coops = fa.coalgebra.coops();
    for basis in bases.iter().skip(1) {
        for b in basis {
            let x = Lc::single(b.clone());
            let ex = e.apply(&x)?;
            image_is_primitive &= prim_span.contains(&ex);
            image_span.insert(&ex);
            coproduct_kills_image &= coops.iter().all(|op| fa.coalgebra.coproduct_lc(&op.name, &ex).is_zero());
            idempotent &= e.apply(&ex)? == ex;
        }
    }
    image_is_primitive &= image_span.rank() == prims.len();
    let primitives_are_generators = prims.len() == fa.generators.len()
        && fa.generators.iter().all(|&g| prim_span.contains(&Lc::single(fa.generator(g))));
    let mut kills_products = true;
    for v in &product_vectors {
        kills_products &= e.apply(v)?.is_zero();
    }

    let mut degrees = Vec::new();
    let mut generated = true;
    let by_deg = |d: usize| prims.iter().filter(|p| degree_of_lc(p) == d).count();
    for d in 1..=bound {
        generated &= spans[d].rank() == bases[d].len();
        degrees.push(DegreeRow { degree: d, dimension: bases[d].len(), primitives: by_deg(d), generated: spans[d].rank() });
    }
    let passed = filtration_splits
        && primitives_are_generators
        && image_is_primitive && coproduct_kills_image && idempotent && kills_products && generated;
    Ok(RigidityReport {
        algebra: fa.algebra.name().to_string(),
        coalgebra: fa.coalgebra.name().to_string(),
        generators: fa.generators.len(),
        bound,
        degrees,
        cofiltration,
        products,
        filtration_splits,
        primitives_are_generators,
        image_is_primitive,
        coproduct_kills_image,
        idempotent,
        kills_products,
        generated,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentReport {
    pub algebra: String,
    pub coalgebra: String,
    pub generators: usize,
    pub bound: usize,
    pub elements: usize,
    pub fixes_generators: bool,
    pub coproduct_kills_image: bool,
    pub idempotent: bool,
    pub kills_products: bool,
    pub passed: bool,
    pub first_failure: Option<String>,
}

/// The idempotent properties on every basis element and every product of generators up to `bound`.
pub fn check_idempotent(fa: &FreeAlgebra, bound: usize) -> Result<IdempotentReport, IdemError> {
    let mut e = Idempotent::for_operads(fa.algebra, fa.coalgebra, bound)?;
    let coops = fa.coalgebra.coops();
    let mut first_failure = None;
    let mut fail = |msg: String| {
        if first_failure.is_none() {
            first_failure = Some(msg);
        }
    };
    let (mut fixes, mut kills_image, mut idem, mut kills_products) = (true, true, true, true);
    let mut elements = 0;
    for &g in &fa.generators {
        let x = Lc::single(fa.generator(g));
        if e.apply(&x)? != x {
            fixes = false;
            fail(format!("e moves the generator {x}"));
        }
    }
    for d in 1..=bound {
        for b in fa.basis(d) {
            elements += 1;
            let ex = e.apply(&Lc::single(b.clone()))?;
            if !coops.iter().all(|op| fa.coalgebra.coproduct_lc(&op.name, &ex).is_zero()) {
                kills_image = false;
                fail(format!("a cooperation does not vanish on e({b})"));
            }
            if e.apply(&ex)? != ex {
                idem = false;
                fail(format!("e(e({b})) differs from e({b})"));
            }
        }
    }
    let gens: Vec<Lc> = fa.generators.iter().map(|&g| Lc::single(fa.generator(g))).collect();
    for n in 2..=bound {
        let reps: Vec<Basis> = orbit_representatives(fa.algebra, n).into_iter().map(|(b, _)| b).collect();
        for tuple in primitive_tuples(&gens, n, n) {
            let args: Vec<Lc> = tuple.into_iter().cloned().collect();
            for mu in &reps {
                let v = fa.evaluate(mu, &args)?;
                if !e.apply(&v)?.is_zero() {
                    kills_products = false;
                    fail(format!("e does not vanish on {mu} applied to generators"));
                }
            }
        }
    }
    Ok(IdempotentReport {
        algebra: fa.algebra.name().to_string(),
        coalgebra: fa.coalgebra.name().to_string(),
        generators: fa.generators.len(),
        bound,
        elements,
        fixes_generators: fixes,
        coproduct_kills_image: kills_image,
        idempotent: idem,
        kills_products,
        passed: fixes && kills_image && idem && kills_products,
        first_failure,
    })
}

/// Splits `x` by degree and keeps the degree-one part.
pub fn degree_one_part(x: &Lc) -> Lc {
    by_degree(x).remove(&1).unwrap_or_default()
}
