//! Exact sparse elimination: ranks, kernels and span membership.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linear::{LinComb, Scalar};

/// Rows in echelon form, each keyed by its smallest key with leading coefficient one.
#[derive(Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut floor: Option<K> = None;
        loop {
            let next = v
                .iter()
                .map(|(k, c)| (k.clone(), c.clone()))
                .find(|(k, _)| floor.as_ref().is_none_or(|f| k > f) && self.rows.contains_key(k));
            match next {
                Some((k, c)) => {
                    v.add_scaled(&self.rows[&k], &-c);
                    floor = Some(k);
                }
                None => return v,
            }
        }
    }

    /// Inserts `v`; returns false when it already lies in the span.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let lead = match r.keys().next() {
            Some(k) => k.clone(),
            None => return false,
        };
        let inv = Scalar::one() / r.coeff(&lead);
        let r = r.scaled(&inv);
        for row in self.rows.values_mut() {
            let c = row.coeff(&lead);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the map sending the `i`-th basis vector to `images[i]`, as combinations of indices.
pub fn kernel<K: Ord + Clone>(images: &[LinComb<K>]) -> Vec<LinComb<usize>> {
    let mut pivots: BTreeMap<K, (LinComb<K>, LinComb<usize>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let (v, track) = reduce_tracked(&pivots, img.clone(), LinComb::single(i));
        let lead = v.keys().next().cloned();
        match lead {
            None => out.push(track),
            Some(lead) => {
                let inv = Scalar::one() / v.coeff(&lead);
                pivots.insert(lead, (v.scaled(&inv), track.scaled(&inv)));
            }
        };
    }
    out
}

/// Coefficients `λ` with `Σ λ_i columns[i] = target`, if the target lies in their span.
pub fn solve<K: Ord + Clone>(columns: &[LinComb<K>], target: &LinComb<K>) -> Option<LinComb<usize>> {
    let mut pivots: BTreeMap<K, (LinComb<K>, LinComb<usize>)> = BTreeMap::new();
    for (i, col) in columns.iter().enumerate() {
        let (v, track) = reduce_tracked(&pivots, col.clone(), LinComb::single(i));
        let lead = v.keys().next().cloned();
        if let Some(lead) = lead {
            let inv = Scalar::one() / v.coeff(&lead);
            pivots.insert(lead, (v.scaled(&inv), track.scaled(&inv)));
        }
    }
    let (rest, track) = reduce_tracked(&pivots, target.clone(), LinComb::zero());
    if rest.is_zero() {
        Some(track.neg())
    } else {
        None
    }
}

fn reduce_tracked<K: Ord + Clone>(
    pivots: &BTreeMap<K, (LinComb<K>, LinComb<usize>)>,
    mut v: LinComb<K>,
    mut track: LinComb<usize>,
) -> (LinComb<K>, LinComb<usize>) {
    loop {
        let hit = v.iter().map(|(k, c)| (k.clone(), c.clone())).find(|(k, _)| pivots.contains_key(k));
        match hit {
            Some((k, c)) => {
                let (row, combo) = &pivots[&k];
                v.add_scaled(row, &-c.clone());
                track.add_scaled(combo, &-c);
            }
            None => return (v, track),
        }
    }
}
