//! Word products: shuffles, half-shuffles and the Leibniz bracket, with their duals.

use itertools::Itertools;

use crate::combinatorics::Label;
use crate::linear::{int, LinComb, Scalar};

pub type Letters = Vec<Label>;

/// Sum over all interleavings, counted with multiplicity.
pub fn shuffle(a: &[Label], b: &[Label]) -> LinComb<Letters> {
    let n = a.len() + b.len();
    let mut out = LinComb::zero();
    for pos in (0..n).combinations(a.len()) {
        let mut w = Vec::with_capacity(n);
        let (mut i, mut j) = (0, 0);
        for k in 0..n {
            if i < pos.len() && pos[i] == k {
                w.push(a[i]);
                i += 1;
            } else {
                w.push(b[j]);
                j += 1;
            }
        }
        out.add_term(w, int(1));
    }
    out
}

/// `u ≺ v`: the first letter of `u` stays first.
pub fn half_shuffle(u: &[Label], v: &[Label]) -> LinComb<Letters> {
    shuffle(&u[1..], v).map_keys(|w| {
        let mut out = vec![u[0]];
        out.extend(w.iter().copied());
        out
    })
}

pub fn concat(u: &[Label], v: &[Label]) -> Letters {
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    w
}

/// Splits the positions of `w` into a subsequence and its complement.
fn split(w: &[Label], mask: u64) -> (Letters, Letters) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &l) in w.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(l);
        } else {
            b.push(l);
        }
    }
    (a, b)
}

/// Dual of the shuffle: both sides nonempty.
pub fn unshuffle(w: &[Label]) -> Vec<(Letters, Letters)> {
    let n = w.len();
    (1..(1u64 << n) - 1).map(|m| split(w, m)).collect()
}

/// Dual of the half-shuffle: the first letter stays on the left.
pub fn half_unshuffle(w: &[Label]) -> Vec<(Letters, Letters)> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    (1..(1u64 << n) - 1).filter(|m| m & 1 == 1).map(|m| split(w, m)).collect()
}

pub fn deconcatenations(w: &[Label]) -> Vec<(Letters, Letters)> {
    (1..w.len()).map(|i| (w[..i].to_vec(), w[i..].to_vec())).collect()
}

/// `[x, y]` in the free Leibniz algebra on words; `x` may be empty.
pub fn leibniz_bracket(x: &[Label], y: &[Label]) -> LinComb<Letters> {
    let q = y.len();
    let mut out = LinComb::zero();
    if q == 0 {
        return out;
    }
    let tail = &y[1..];
    for mask in 0..(1u64 << tail.len()) {
        let (j, i) = split(tail, mask);
        let sign = if j.len() % 2 == 0 { 1 } else { -1 };
        let mut w = x.to_vec();
        w.extend(j.iter().rev());
        w.push(y[0]);
        w.extend(i);
        out.add_term(w, int(sign));
    }
    out
}

/// Dual of the Leibniz bracket.
pub fn leibniz_cobracket(w: &[Label]) -> Vec<(Letters, Letters, Scalar)> {
    let p = w.len();
    let mut out = Vec::new();
    for i in 1..p {
        for j in (i + 1)..=p {
            let sign = if (j - i - 1) % 2 == 0 { 1 } else { -1 };
            let left = w[..i].to_vec();
            let after: Letters = w[j..].to_vec();
            let between: Letters = w[i..j - 1].iter().rev().copied().collect();
            for (s, c) in shuffle(&after, &between).iter() {
                let mut right = vec![w[j - 1]];
                right.extend(s.iter().copied());
                out.push((left.clone(), right, c * int(sign)));
            }
        }
    }
    out
}

pub fn is_lyndon(w: &[Label]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Bracketing of a Lyndon word along its longest proper Lyndon suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Letter(Label),
    Bracket(Box<Bracketing>, Box<Bracketing>),
}

pub fn standard_bracketing(w: &[Label]) -> Bracketing {
    if w.len() == 1 {
        return Bracketing::Letter(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).unwrap_or(w.len() - 1);
    Bracketing::Bracket(Box::new(standard_bracketing(&w[..split])), Box::new(standard_bracketing(&w[split..])))
}

/// Factors at left-to-right minima.
pub fn minima_factors(w: &[Label]) -> Vec<Letters> {
    let mut out: Vec<Letters> = Vec::new();
    for &l in w {
        match out.last() {
            Some(f) if f[0] < l => out.last_mut().unwrap().push(l),
            _ => out.push(vec![l]),
        }
    }
    out
}
