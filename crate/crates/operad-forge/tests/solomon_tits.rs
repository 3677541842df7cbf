use operad_forge::combinatorics::word::all_surjections;
use operad_forge::combinatorics::Surjection;
use operad_forge::solomon_tits::*;

fn s(v: &[u32]) -> Surjection {
    Surjection(v.to_vec())
}

/// Every map `[r+s] -> [t]` filtered by surjectivity and monotonicity on both blocks.
fn brute_quasi_shuffles(r: usize, s: usize) -> Vec<Vec<u32>> {
    let n = r + s;
    let mut out = Vec::new();
    for t in 1..=n as u32 {
        let mut f = vec![1u32; n];
        loop {
            let onto = (1..=t).all(|v| f.contains(&v));
            let inc = f[..r].windows(2).all(|w| w[0] < w[1]) && f[r..].windows(2).all(|w| w[0] < w[1]);
            if onto && inc {
                out.push(f.clone());
            }
            let mut i = 0;
            while i < n && f[i] == t {
                f[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            f[i] += 1;
        }
    }
    out.sort();
    out
}

#[test]
fn quasi_shuffles_match_brute_force() {
    for r in 0..=3 {
        for t in 0..=3 {
            if r + t == 0 {
                continue;
            }
            let mut q = quasi_shuffles(r, t);
            q.sort();
            assert_eq!(q, brute_quasi_shuffles(r, t), "({r},{t})");
        }
    }
    assert_eq!(quasi_shuffles(1, 2).len(), 5);
}

#[test]
fn stuffle_examples() {
    assert_eq!(stuffle(&s(&[1]), &s(&[1])).to_string(), "(1,1) + (1,2) + (2,1)");
    assert_eq!(stuffle(&s(&[1]), &s(&[1, 2])).to_string(), "(1,1,2) + (1,2,3) + (2,1,2) + (2,1,3) + (3,1,2)");
    let one = St::single(s(&[1]));
    assert_eq!(stuffle_lc(&stuffle_lc(&one, &one), &one), stuffle_lc(&one, &stuffle_lc(&one, &one)));
}

#[test]
fn stuffle_is_associative() {
    for n in 1..=2 {
        for m in 1..=2 {
            for k in 1..=2 {
                for x in all_surjections(n) {
                    for y in all_surjections(m) {
                        for z in all_surjections(k) {
                            let (x, y, z) = (St::single(x.clone()), St::single(y.clone()), St::single(z));
                            assert_eq!(stuffle_lc(&stuffle_lc(&x, &y), &z), stuffle_lc(&x, &stuffle_lc(&y, &z)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn block_coproduct_is_coassociative_and_nilpotent() {
    for n in 1..=4 {
        for x in all_surjections(n) {
            let mut left = LinCombTriple::zero();
            let mut right = LinCombTriple::zero();
            for ((a, b), c) in block_coproduct(&x).iter() {
                for ((p, q), d) in block_coproduct(a).iter() {
                    left.add_term((p.clone(), q.clone(), b.clone()), c * d);
                }
                for ((p, q), d) in block_coproduct(b).iter() {
                    right.add_term((a.clone(), p.clone(), q.clone()), c * d);
                }
            }
            assert!(left == right, "{x}");
            assert_eq!(nilpotency_index(&x), x.rank() as usize, "{x}");
        }
    }
}

type LinCombTriple = operad_forge::linear::LinComb<(Surjection, Surjection, Surjection)>;

#[test]
fn hopf_law_on_small_pairs() {
    let r = check_hopf(4);
    assert!(r.passed, "{r:?}");
    assert_eq!(r.pairs, 1 + 2 * 3 + 2 * 13 + 3 * 3);
    assert!(check_hopf(5).passed);
}

#[test]
fn one_one_two_is_not_generated() {
    let c = nongeneration_certificate(&s(&[1, 1, 2]));
    assert_eq!(c.component_dimension, 13);
    assert!(!c.generated);
    assert_eq!(c.augmented_rank, c.product_span_rank + 1);
    assert_eq!(c.primitive_dimensions, vec![1, 2, 8]);
    assert_eq!(c.product_span_rank, 11);
    assert!(nongeneration_certificate(&s(&[1, 1])).generated);
    assert!(nongeneration_certificate(&s(&[1])).generated);
}

#[test]
fn phi_is_not_injective() {
    assert_eq!(phi_rank(2), 1);
    assert_eq!(phi_rank(3), 1);
}
