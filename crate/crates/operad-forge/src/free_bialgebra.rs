//! Free algebras with the coalgebra structure obtained by duality on the combinatorial basis.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Signed};
use thiserror::Error;

use crate::combinatorics::{nums, ordered_set_partitions, permutations, Basis, Label, Tensor};
use crate::linear::{LinComb, Scalar};
use crate::matrix;
use crate::operads::{advance, Operad, OperadError};

pub type Lc = LinComb<Basis>;
pub type Tc = LinComb<Tensor>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeError {
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error("coefficient {coeff} of {element} in {product} is not a unit")]
    NonUnit { element: String, product: String, coeff: String },
    #[error("the zero element has no cofiltration degree")]
    ZeroElement,
    #[error("{0} is not built from the generators of this algebra")]
    ForeignLabel(String),
}

/// The coalgebra paired with `a` when none is given.
pub fn default_partner(a: Operad) -> Operad {
    match a {
        Operad::Zinbiel | Operad::Leibniz | Operad::Poisson => Operad::As,
        other => other,
    }
}

/// Relabels an arity-`k` operation `1..k` onto the label set `block` in increasing order.
fn onto(b: &Basis, block: &[usize]) -> Basis {
    b.relabel(|l| match l {
        Label::Num(i) => Label::Num(block[i as usize - 1] as u32 + 1),
        other => other,
    })
}

/// Orbit representatives of the arity-`n` basis (least encoding first) with stabiliser orders.
pub fn orbit_representatives(a: Operad, n: usize) -> Vec<(Basis, u64)> {
    let basis = a.basis(n);
    if !a.symmetric() {
        return basis.into_iter().map(|b| (b, 1)).collect();
    }
    let perms = permutations(n);
    let mut seen: BTreeSet<Basis> = BTreeSet::new();
    let mut out = Vec::new();
    for b in basis {
        if seen.contains(&b) {
            continue;
        }
        let orbit: BTreeSet<Basis> = perms.iter().map(|s| b.permute(s)).collect();
        let stab = perms.len() as u64 / orbit.len() as u64;
        seen.extend(orbit);
        out.push((b, stab));
    }
    out
}

/// Number of permutations of `1..n` fixing `e`.
pub fn stabilizer_order(e: &Basis, n: usize) -> u64 {
    permutations(n).iter().filter(|s| &e.permute(s) == e).count() as u64
}

/// `σ ↦ ⟨δ^σ, μ*⟩` for every permutation of the arity.
pub fn crochet_pairing(delta: &Basis, mu: &Basis) -> Vec<(Vec<u32>, Scalar)> {
    let n = delta.degree();
    permutations(n)
        .into_iter()
        .map(|s| {
            let c = if n == mu.degree() && &delta.permute(&s) == mu { Scalar::one() } else { Scalar::default() };
            (s, c)
        })
        .collect()
}

/// Tables of cooperations obtained by dualising operations on the multilinear basis.
#[derive(Default)]
pub struct DualTables {
    tables: HashMap<(Operad, String, usize), HashMap<Basis, Tc>>,
}

impl DualTables {
    pub fn new() -> Self {
        Self::default()
    }

    /// For every arity-`n` basis element `x`, the sum of `(1/C) x1⊗…⊗xk` over tuples with `x` in `c(x1..xk)`.
    pub fn table(&mut self, a: Operad, c: &Basis, n: usize) -> Result<&HashMap<Basis, Tc>, FreeError> {
        let key = (a, c.to_string(), n);
        if !self.tables.contains_key(&key) {
            let t = build_dual_table(a, n, c.degree(), |args| a.raw_compose(c, args))?;
            self.tables.insert(key.clone(), t);
        }
        Ok(&self.tables[&key])
    }

    /// The table for a named binary generating operation.
    pub fn op_table(&mut self, a: Operad, op: &str, n: usize) -> Result<&HashMap<Basis, Tc>, FreeError> {
        let key = (a, format!("op:{op}"), n);
        if !self.tables.contains_key(&key) {
            let arity = a.op(op)?.arity;
            let t = build_dual_table(a, n, arity, |args| {
                let refs: Vec<&Basis> = args.iter().collect();
                a.raw_product(op, &refs)
            })?;
            self.tables.insert(key.clone(), t);
        }
        Ok(&self.tables[&key])
    }

    /// Applies the dual of operation `c` to a possibly decorated element.
    pub fn cooperation(&mut self, a: Operad, c: &Basis, x: &Basis) -> Result<Tc, FreeError> {
        let (lifted, deco) = x.lift();
        let t = self.table(a, c, x.degree())?;
        Ok(t.get(&lifted).map(|v| v.map_keys(|tn| tn.decorate(&deco))).unwrap_or_default())
    }

    /// The dual of a generating operation, computed by brute force over all factorizations.
    pub fn def2(&mut self, a: Operad, op: &str, x: &Basis) -> Result<Tc, FreeError> {
        let (lifted, deco) = x.lift();
        let t = self.op_table(a, op, x.degree())?;
        Ok(t.get(&lifted).map(|v| v.map_keys(|tn| tn.decorate(&deco))).unwrap_or_default())
    }
}

fn build_dual_table(
    a: Operad,
    n: usize,
    k: usize,
    mut apply: impl FnMut(&[Basis]) -> Lc,
) -> Result<HashMap<Basis, Tc>, FreeError> {
    let mut out: HashMap<Basis, Tc> = HashMap::new();
    let bases: Vec<Vec<Basis>> = (0..=n).map(|m| a.basis(m)).collect();
    for blocks in ordered_set_partitions(n, k) {
        let opts: Vec<Vec<Basis>> = blocks.iter().map(|b| bases[b.len()].iter().map(|e| onto(e, b)).collect()).collect();
        let bounds: Vec<usize> = opts.iter().map(|o| o.len()).collect();
        let mut pick = vec![0usize; k];
        loop {
            let args: Vec<Basis> = (0..k).map(|i| opts[i][pick[i]].clone()).collect();
            for (x, coeff) in apply(&args).iter() {
                if !coeff.abs().is_one() {
                    return Err(FreeError::NonUnit {
                        element: x.to_string(),
                        product: args.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", "),
                        coeff: coeff.to_string(),
                    });
                }
                out.entry(x.clone()).or_default().add_term(Tensor(args.clone()), Scalar::one() / coeff);
            }
            if !advance(&mut pick, &bounds) {
                break;
            }
        }
    }
    Ok(out)
}

/// A free `A`-algebra on named generators, with a `C`-coalgebra structure on the same basis.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    pub algebra: Operad,
    pub coalgebra: Operad,
    pub generators: Vec<Label>,
}

pub type Path = Vec<(usize, usize)>;

impl FreeAlgebra {
    pub fn new(algebra: Operad, generators: Vec<Label>) -> Self {
        FreeAlgebra { algebra, coalgebra: default_partner(algebra), generators }
    }

    pub fn with_coalgebra(algebra: Operad, coalgebra: Operad, generators: Vec<Label>) -> Self {
        FreeAlgebra { algebra, coalgebra, generators }
    }

    /// Distinct decorated basis elements of degree `d`, sorted by encoding.
    pub fn basis(&self, d: usize) -> Vec<Basis> {
        let g = self.generators.len();
        let mut set: BTreeSet<Basis> = BTreeSet::new();
        for (rep, _) in orbit_representatives(self.algebra, d) {
            let mut deco = vec![0usize; d];
            loop {
                let ls: Vec<Label> = deco.iter().map(|&i| self.generators[i]).collect();
                set.insert(rep.decorate(&ls));
                if !advance(&mut deco, &vec![g; d]) {
                    break;
                }
            }
        }
        let mut out: Vec<Basis> = set.into_iter().collect();
        out.sort_by_cached_key(|b| b.to_string());
        out
    }

    /// The degree-one element carrying label `l`.
    pub fn generator(&self, l: Label) -> Basis {
        self.algebra.basis(1)[0].relabel(|_| l)
    }

    fn check_labels(&self, x: &Basis) -> Result<(), FreeError> {
        if x.labels().iter().all(|l| self.generators.contains(l)) {
            Ok(())
        } else {
            Err(FreeError::ForeignLabel(x.to_string()))
        }
    }

    /// `μ(args)`, expanded multilinearly over the basis terms of the arguments.
    pub fn evaluate(&self, mu: &Basis, args: &[Lc]) -> Result<Lc, FreeError> {
        let n = mu.degree();
        if args.len() != n {
            return Err(OperadError::Arity { op: mu.to_string(), expected: n, got: args.len() }.into());
        }
        for a in args {
            for b in a.keys() {
                self.check_labels(b)?;
            }
        }
        let terms: Vec<Vec<(&Basis, &Scalar)>> = args.iter().map(|a| a.iter().collect()).collect();
        if terms.iter().any(|t| t.is_empty()) {
            self.algebra.compose(mu, &vec![self.generator(Label::Num(1)); n])?;
            return Ok(Lc::zero());
        }
        let bounds: Vec<usize> = terms.iter().map(|t| t.len()).collect();
        let mut pick = vec![0usize; n];
        let mut out = Lc::zero();
        loop {
            let xs: Vec<Basis> = (0..n).map(|i| terms[i][pick[i]].0.clone()).collect();
            let c: Scalar = (0..n).map(|i| terms[i][pick[i]].1.clone()).product();
            out.add_scaled(&self.algebra.compose(mu, &xs)?, &c);
            if !advance(&mut pick, &bounds) {
                break;
            }
        }
        Ok(out)
    }

    pub fn product(&self, op: &str, a: &Lc, b: &Lc) -> Result<Lc, FreeError> {
        self.algebra.op(op)?;
        Ok(self.algebra.product_lc(op, &[a, b]))
    }

    pub fn coproduct(&self, op: &str, x: &Lc) -> Result<Tc, FreeError> {
        self.coalgebra.op(op)?;
        Ok(self.coalgebra.coproduct_lc(op, x))
    }

    /// All `k`-fold iterated generating cooperations, each application recorded in the path.
    pub fn iterated(&self, x: &Basis, k: usize) -> LinComb<(Path, Tensor)> {
        let coops = self.coalgebra.coops();
        let mut level: LinComb<(Path, Tensor)> = LinComb::single((Vec::new(), Tensor(vec![x.clone()])));
        for _ in 0..k {
            let mut next = LinComb::zero();
            for ((path, t), c) in level.iter() {
                for pos in 0..t.arity() {
                    for (ci, op) in coops.iter().enumerate() {
                        for (split, d) in self.coalgebra.raw_coproduct(&op.name, &t.0[pos]).iter() {
                            let mut factors = t.0[..pos].to_vec();
                            factors.extend(split.0.iter().cloned());
                            factors.extend(t.0[pos + 1..].iter().cloned());
                            let mut p = path.clone();
                            p.push((pos, ci));
                            next.add_term((p, Tensor(factors)), c * d);
                        }
                    }
                }
            }
            level = next;
        }
        level
    }

    /// Least `n` such that every iterated cooperation of arity above `n` kills `x`.
    pub fn cofiltration_degree(&self, x: &Lc) -> Result<usize, FreeError> {
        if x.is_zero() {
            return Err(FreeError::ZeroElement);
        }
        let mut k = 0;
        loop {
            let mut stacked: LinComb<(Path, Tensor)> = LinComb::zero();
            for (b, c) in x.iter() {
                stacked.add_scaled(&self.iterated(b, k + 1), c);
            }
            if stacked.is_zero() {
                return Ok(k + 1);
            }
            k += 1;
        }
    }
}

/// Kernel of all generating cooperations of `coalg` on the span of `elems`.
pub fn primitives_of(coalg: Operad, elems: &[Basis]) -> Vec<Lc> {
    let coops = coalg.coops();
    let images: Vec<LinComb<(usize, Tensor)>> = elems
        .iter()
        .map(|x| {
            let mut v = LinComb::zero();
            for (i, op) in coops.iter().enumerate() {
                for (t, c) in coalg.raw_coproduct(&op.name, x).iter() {
                    v.add_term((i, t.clone()), c.clone());
                }
            }
            v
        })
        .collect();
    matrix::kernel(&images).into_iter().map(|k| k.map_keys(|&i| elems[i].clone())).collect()
}

/// Groups a combination by degree.
pub fn by_degree(x: &Lc) -> BTreeMap<usize, Lc> {
    let mut out: BTreeMap<usize, Lc> = BTreeMap::new();
    for (b, c) in x.iter() {
        out.entry(b.degree()).or_default().add_term(b.clone(), c.clone());
    }
    out
}

pub fn labelled_generators(n: u32) -> Vec<Label> {
    nums(1..=n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_any;
    use crate::linear::int;

    fn b(s: &str) -> Basis {
        parse_any(s).unwrap()
    }

    #[test]
    fn def2_prelie_matches_edge_deletion() {
        let mut t = DualTables::new();
        for x in Operad::PreLie.basis(4) {
            assert_eq!(t.def2(Operad::PreLie, "graft", &x).unwrap(), Operad::PreLie.raw_coproduct("graft", &x));
        }
    }

    #[test]
    fn decorated_coproduct_counts_positions() {
        let x = b("g(g,g)");
        let d = Operad::PreLie.raw_coproduct("graft", &x);
        assert_eq!(d.coeff(&Tensor::pair(b("g(g)"), b("g"))), int(2));
        let mut t = DualTables::new();
        assert_eq!(t.def2(Operad::PreLie, "graft", &x).unwrap(), d);
    }

    #[test]
    fn crochet_examples() {
        let nz = |v: Vec<(Vec<u32>, Scalar)>| v.into_iter().filter(|(_, c)| *c != Scalar::default()).collect::<Vec<_>>();
        assert_eq!(nz(crochet_pairing(&b("1(2)"), &b("1(2)"))), vec![(vec![1, 2], int(1))]);
        assert_eq!(nz(crochet_pairing(&b("1(2)"), &b("2(1)"))), vec![(vec![2, 1], int(1))]);
        assert!(nz(crochet_pairing(&b("1(2,3)"), &b("1(2(3))"))).is_empty());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_order(&b("1(2,3)"), 3), 2);
        assert_eq!(stabilizer_order(&b("1(2(3))"), 3), 1);
        let reps = orbit_representatives(Operad::PreLie, 4);
        assert_eq!(reps.len(), 4);
        let total: u64 = reps.iter().map(|(_, s)| 24 / s).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn cofiltration_of_path() {
        let f = FreeAlgebra::new(Operad::PreLie, nums(1..=3));
        assert_eq!(f.cofiltration_degree(&Lc::single(b("1(2(3))"))).unwrap(), 3);
        assert_eq!(f.cofiltration_degree(&Lc::single(b("1"))).unwrap(), 1);
        assert!(f.cofiltration_degree(&Lc::zero()).is_err());
    }
}
