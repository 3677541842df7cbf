//! Surjections with the stuffle product and the block coproduct: a conilpotent bialgebra
//! satisfying the Hopf law that is not generated by its primitives.

use serde::Serialize;

use crate::combinatorics::word::all_surjections;
use crate::combinatorics::{Label, Surjection};
use crate::linear::{int, LinComb};
use crate::matrix::{self, Echelon};
use crate::operads::words::unshuffle;

pub type St = LinComb<Surjection>;
pub type St2 = LinComb<(Surjection, Surjection)>;

/// The surjection order-isomorphic to `values`.
pub fn standardize(values: &[u32]) -> Surjection {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Surjection(values.iter().map(|v| distinct.binary_search(v).unwrap() as u32 + 1).collect())
}

/// Maps `{1..r+s} -> {1..t}`, surjective and strictly increasing on `1..r` and on `r+1..r+s`.
pub fn quasi_shuffles(r: usize, s: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    grow(r, s, &mut Vec::new(), &mut Vec::new(), 0, &mut out);
    out
}

fn grow(r: usize, s: usize, left: &mut Vec<u32>, right: &mut Vec<u32>, t: u32, out: &mut Vec<Vec<u32>>) {
    if left.len() == r && right.len() == s {
        out.push(left.iter().chain(right.iter()).copied().collect());
        return;
    }
    let t = t + 1;
    let (i, j) = (left.len() < r, right.len() < s);
    if i {
        left.push(t);
        grow(r, s, left, right, t, out);
        left.pop();
    }
    if j {
        right.push(t);
        grow(r, s, left, right, t, out);
        right.pop();
    }
    if i && j {
        left.push(t);
        right.push(t);
        grow(r, s, left, right, t, out);
        left.pop();
        right.pop();
    }
}

/// `x ⋆ y = Σ_f f∘(x, y + r)` over the quasi-shuffles `f ∈ SH(r, s)`.
pub fn stuffle(x: &Surjection, y: &Surjection) -> St {
    let (r, s) = (x.rank(), y.rank());
    let word: Vec<u32> = x.0.iter().copied().chain(y.0.iter().map(|v| v + r)).collect();
    let mut out = St::zero();
    for f in quasi_shuffles(r as usize, s as usize) {
        let values: Vec<u32> = word.iter().map(|&v| f[v as usize - 1]).collect();
        out.add_term(Surjection(values), int(1));
    }
    out
}

pub fn stuffle_lc(x: &St, y: &St) -> St {
    let mut out = St::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&stuffle(a, b), &(c * d));
        }
    }
    out
}

/// `x|^K`: the standardised subsequence of values lying in `lo..=hi`.
pub fn corestrict(x: &Surjection, lo: u32, hi: u32) -> Surjection {
    let kept: Vec<u32> = x.0.iter().copied().filter(|v| (lo..=hi).contains(v)).collect();
    standardize(&kept)
}

pub fn block_coproduct(x: &Surjection) -> St2 {
    let r = x.rank();
    let mut out = St2::zero();
    for i in 1..r {
        out.add_term((corestrict(x, 1, i), corestrict(x, i + 1, r)), int(1));
    }
    out
}

pub fn block_coproduct_lc(x: &St) -> St2 {
    let mut out = St2::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&block_coproduct(b), c);
    }
    out
}

fn tensor(x: &St, y: &St) -> St2 {
    let mut out = St2::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term((a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// The Hopf-law right-hand side for `Δ(x ⋆ y)`.
pub fn hopf_rhs(x: &Surjection, y: &Surjection) -> St2 {
    let one = |s: &Surjection| St::single(s.clone());
    let (xx, yy) = (one(x), one(y));
    let mut out = tensor(&xx, &yy);
    out.add_assign(&tensor(&yy, &xx));
    let dx: Vec<_> = block_coproduct(x).iter().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect();
    let dy: Vec<_> = block_coproduct(y).iter().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect();
    for (a, b, c) in &dx {
        out.add_scaled(&tensor(&one(a), &stuffle(b, y)), c);
        out.add_scaled(&tensor(&stuffle(a, y), &one(b)), c);
    }
    for (a, b, c) in &dy {
        out.add_scaled(&tensor(&one(a), &stuffle(x, b)), c);
        out.add_scaled(&tensor(&stuffle(x, a), &one(b)), c);
    }
    for (a, b, c) in &dx {
        for (p, q, d) in &dy {
            out.add_scaled(&tensor(&stuffle(a, p), &stuffle(b, q)), &(c * d));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub max_total: usize,
    pub pairs: usize,
    pub passed: bool,
    pub counterexample: Option<(String, String)>,
}

/// Checks the Hopf law on every pair of surjections with `n + m ≤ max_total`.
pub fn check_hopf(max_total: usize) -> HopfReport {
    let mut pairs = 0;
    for n in 1..max_total {
        for m in 1..=max_total - n {
            for x in all_surjections(n) {
                for y in all_surjections(m) {
                    pairs += 1;
                    let lhs = block_coproduct_lc(&stuffle(&x, &y));
                    if lhs != hopf_rhs(&x, &y) {
                        return HopfReport {
                            max_total,
                            pairs,
                            passed: false,
                            counterexample: Some((x.to_string(), y.to_string())),
                        };
                    }
                }
            }
        }
    }
    HopfReport { max_total, pairs, passed: true, counterexample: None }
}

/// `k`-fold iterated block coproduct, as sequences of factors.
pub fn iterated_block(x: &Surjection, k: usize) -> LinComb<Vec<Surjection>> {
    let mut level: LinComb<Vec<Surjection>> = LinComb::single(vec![x.clone()]);
    for _ in 0..k {
        let mut next = LinComb::zero();
        for (t, c) in level.iter() {
            for ((a, b), d) in block_coproduct(&t[0]).iter() {
                let mut f = vec![a.clone(), b.clone()];
                f.extend(t[1..].iter().cloned());
                next.add_term(f, c * d);
            }
        }
        level = next;
    }
    level
}

/// Least number of applications of the block coproduct that kills `x`.
pub fn nilpotency_index(x: &Surjection) -> usize {
    (0..).find(|&k| iterated_block(x, k).is_zero()).unwrap()
}

/// Kernel basis of the block coproduct on `ST_n`.
pub fn primitives(n: usize) -> Vec<St> {
    let basis = all_surjections(n);
    let images: Vec<St2> = basis.iter().map(block_coproduct).collect();
    matrix::kernel(&images).into_iter().map(|k| k.map_keys(|&i| basis[i].clone())).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub target: String,
    pub degree: usize,
    pub component_dimension: usize,
    /// `dim` of the primitive space in each degree `1..=degree`.
    pub primitive_dimensions: Vec<usize>,
    /// Rank of the span of all products of primitives in the target's degree.
    pub product_span_rank: usize,
    /// Rank after adjoining the target.
    pub augmented_rank: usize,
    pub generated: bool,
}

/// Decides whether `target` is a combination of stuffle products of primitives.
pub fn nongeneration_certificate(target: &Surjection) -> Certificate {
    let n = target.len();
    let prims: Vec<Vec<St>> = (0..=n).map(|d| if d == 0 { Vec::new() } else { primitives(d) }).collect();
    // products[d]: spanning vectors of the degree-d part of the subalgebra generated by primitives.
    let mut products: Vec<Vec<St>> = vec![Vec::new(); n + 1];
    for d in 1..=n {
        let mut span = Echelon::new();
        let mut gens: Vec<St> = Vec::new();
        let mut push = |v: St, span: &mut Echelon<Surjection>| {
            if span.insert(&v) {
                gens.push(v);
            }
        };
        for p in &prims[d] {
            push(p.clone(), &mut span);
        }
        for first in 1..d {
            for p in &prims[first] {
                for q in &products[d - first] {
                    push(stuffle_lc(p, q), &mut span);
                }
            }
        }
        products[d] = gens;
    }
    let rank = matrix::rank(&products[n]);
    let mut with_target = products[n].clone();
    with_target.push(St::single(target.clone()));
    let augmented = matrix::rank(&with_target);
    Certificate {
        target: target.to_string(),
        degree: n,
        component_dimension: all_surjections(n).len(),
        primitive_dimensions: prims[1..].iter().map(|p| p.len()).collect(),
        product_span_rank: rank,
        augmented_rank: augmented,
        generated: augmented == rank,
    }
}

/// Rank of `φ: As(n) → As(n)*`, read off the coshuffle coproduct on the product of `n` primitives.
pub fn phi_rank(n: usize) -> usize {
    let prims: Vec<Label> = (1..=n as u32).map(Label::Num).collect();
    let ops = crate::combinatorics::permutations(n);
    let rows: Vec<LinComb<usize>> = ops
        .iter()
        .map(|mu| {
            let word: Vec<Label> = mu.iter().map(|&i| prims[i as usize - 1]).collect();
            let splits = iterated_unshuffle(&word, n);
            let mut row = LinComb::zero();
            for (j, delta) in ops.iter().enumerate() {
                // Δ_δ puts the factor of slot i in position δ(i); pair with p1 ⊗ … ⊗ pn.
                let hits = splits
                    .iter()
                    .filter(|parts| (0..n).all(|i| parts[delta[i] as usize - 1] == vec![prims[i]]))
                    .count();
                row.add_term(j, int(hits as i64));
            }
            row
        })
        .collect();
    matrix::rank(&rows)
}

/// All ways to unshuffle `w` into `k` nonempty ordered subwords.
fn iterated_unshuffle(w: &[Label], k: usize) -> Vec<Vec<Vec<Label>>> {
    if k == 1 {
        return vec![vec![w.to_vec()]];
    }
    let mut out = Vec::new();
    for (a, b) in unshuffle(w) {
        for mut rest in iterated_unshuffle(&b, k - 1) {
            rest.insert(0, a.clone());
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Surjection {
        Surjection(v.to_vec())
    }

    #[test]
    fn standardisation() {
        assert_eq!(standardize(&[3, 5, 3]), s(&[1, 2, 1]));
        assert_eq!(standardize(&[1, 2]), s(&[1, 2]));
        assert_eq!(standardize(&[7]), s(&[1]));
    }

    #[test]
    fn block_examples() {
        assert!(block_coproduct(&s(&[1, 1, 2])) == St2::single((s(&[1, 1]), s(&[1]))));
        assert!(block_coproduct(&s(&[1])).is_zero());
        assert!(block_coproduct(&s(&[1, 2])) == St2::single((s(&[1]), s(&[1]))));
    }
}
