use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use operad_forge::combinatorics::{parse_any, Basis, BasisKind, Label, Surjection, Tensor};
use operad_forge::free_bialgebra::{DualTables, FreeAlgebra, Lc, Tc};
use operad_forge::idempotents::{
    check_idempotent, compare_series, operad_primitives, rigidity_roundtrip, series_partial, SeriesKind,
};
use operad_forge::laws::{catalogue, check_compatible_basis, check_law, find_law};
use operad_forge::linear::int;
use operad_forge::matrix::Echelon;
use operad_forge::operads::{Operad, ALL};
use operad_forge::solomon_tits::{check_hopf, nongeneration_certificate, phi_rank};

/// Criteria whose literal statement is false; their lines print FAIL and assert what holds instead.
const LITERALLY_FALSE: [u8; 2] = [7, 11];

struct Verdict {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict { pass: false, detail: detail.into() }
}

fn b(s: &str) -> Basis {
    parse_any(s).unwrap()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn ac1() -> Verdict {
    for o in [Operad::PreLie, Operad::Nap] {
        let dims: Vec<usize> = (1..=6).map(|n| o.basis(n).len()).collect();
        assert_eq!(dims, vec![1, 2, 9, 64, 625, 7776], "{o}");
        // Cayley: n^(n-2) labelled trees, times n choices of root.
        let cayley: Vec<usize> = (1..=6u32).map(|n| if n == 1 { 1 } else { (n as usize).pow(n - 2) * n as usize }).collect();
        assert_eq!(dims, cayley);
    }
    for o in [Operad::Perm, Operad::Pan] {
        assert!((1..=6).all(|n| o.basis(n).len() == n), "{o}");
    }
    for o in [Operad::As, Operad::Zinbiel, Operad::Leibniz, Operad::Poisson] {
        assert!((1..=6).all(|n| o.basis(n).len() == factorial(n)), "{o}");
    }
    pass("prelie/nap 1 2 9 64 625 7776 (Cayley n^(n-1)); perm/pan n; as/zinbiel/leibniz/poisson n!")
}

fn ac2() -> Verdict {
    let mut checked = 0;
    for o in ALL {
        let mut tables = DualTables::new();
        for op in o.coops().into_iter().filter(|op| op.arity <= 5) {
            for n in 1..=5 {
                for x in o.basis(n) {
                    let dual = tables.def2(o, &op.name, &x).unwrap();
                    if dual != o.raw_coproduct(&op.name, &x) {
                        return fail(format!("{o} {} on {x}: dual {dual}", op.name));
                    }
                    checked += 1;
                }
            }
        }
    }
    pass(format!("{} operads, {checked} (cooperation, element) pairs at arity <= 5", ALL.len()))
}

fn ac3() -> Verdict {
    let mut cases = 0;
    let laws = catalogue();
    for e in &laws {
        let bound = match e.algebra.kind() {
            BasisKind::Tree | BasisKind::Pointed | BasisKind::Word | BasisKind::Monomial => 6,
            BasisKind::Planar(_) if matches!(e.algebra, Operad::Mag | Operad::MagInf) => 6,
            _ => 5,
        };
        assert!(e.bound >= bound, "{}", e.id);
        let r = check_law(e, bound);
        if let Some(c) = r.counterexample {
            return fail(format!("{}: {}({}({})) differs by {}", e.id, c.delta, c.mu, c.args.join(", "), c.difference));
        }
        cases += r.cases;
    }
    pass(format!("{} laws, {cases} cases, no counterexample", laws.len()))
}

fn ac4() -> Verdict {
    let got = DualTables::new().cooperation(Operad::PreLie, &b("2(1,3)"), &b("4(2(1,3),5)")).unwrap();
    let printed = [
        ["3", "4(2,5)", "1"],
        ["1", "4(2,5)", "3"],
        ["5", "4(2(3))", "1"],
        ["1", "4(2(3))", "5"],
        ["5", "4(2(1))", "3"],
        ["3", "4(2(1))", "5"],
        ["5", "4", "2(1,3)"],
        ["2(1,3)", "4", "5"],
    ];
    let expected: Tc = printed.iter().map(|t| (Tensor(t.iter().map(|s| b(s)).collect()), int(1))).collect();
    if got == expected {
        pass("8 terms, each with coefficient 1")
    } else {
        fail(format!("got {got}"))
    }
}

fn ac5() -> Verdict {
    let mut elements = 0;
    for o in [Operad::PreLie, Operad::Nap, Operad::Pan, Operad::Perm, Operad::As, Operad::Zinbiel] {
        for gens in [vec![Label::Sym('a')], vec![Label::Sym('a'), Label::Sym('b')]] {
            let fa = FreeAlgebra::new(o, gens);
            let r = check_idempotent(&fa, 5).unwrap();
            if !r.passed {
                return fail(format!("{o}: {}", r.first_failure.unwrap_or_default()));
            }
            elements += r.elements;
        }
    }
    pass(format!("6 operads on 1 and 2 generators to degree 5, {elements} elements"))
}

fn ac6() -> Verdict {
    let mut parts = Vec::new();
    for kind in [SeriesKind::Perm, SeriesKind::Nap, SeriesKind::Pan] {
        let r = compare_series(kind, 5).unwrap();
        match (&r.first_discrepancy, r.agree) {
            (None, true) => parts.push(format!("{:?} agrees on {}", kind, r.checked)),
            (Some(d), false) => parts.push(format!("{:?} discrepancy reported at {}", kind, d.element)),
            _ => return fail(format!("{kind:?}: disagreement without a report")),
        }
    }
    pass(parts.join("; "))
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn ac7() -> Verdict {
    let mut literal_failure: Option<String> = None;
    let mut trees = 0;
    for n in 2..=5 {
        for t in Operad::Nap.basis(n) {
            trees += 1;
            let m = t.as_tree().children.len();
            let x = Lc::single(t.clone());
            for k in 1..=5 {
                let e = series_partial(SeriesKind::Nap, k, &x);
                let sign = if k % 2 == 1 { 1 } else { -1 };
                assert_eq!(e, x.scaled(&int(sign * binom(m - 1, k - 1))), "{t} k={k}");
                assert_eq!(e.is_zero(), m < k, "{t} k={k}");
                if m <= k && !e.is_zero() && literal_failure.is_none() {
                    literal_failure = Some(format!("e_{k}({t}) = {e}"));
                }
            }
        }
    }
    match literal_failure {
        None => pass(format!("{trees} trees")),
        Some(w) => fail(format!(
            "'root with at most k children' is off by one: {w}; verified instead e_k(T) = 0 iff the root has fewer than k \
             children, on all {trees} trees with 2..5 vertices, k = 1..5"
        )),
    }
}

fn ac8() -> Verdict {
    let fa = FreeAlgebra::new(Operad::PreLie, vec![Label::Sym('a'), Label::Sym('b')]);
    let r = rigidity_roundtrip(&fa, 4).unwrap();
    let splits = (1..r.cofiltration.len()).all(|n| r.cofiltration[n] == r.cofiltration[n - 1] + r.products[n]);
    let spans = r.degrees.iter().all(|d| d.generated == d.dimension);
    let two = r.degrees[0].primitives == 2 && r.degrees[1..].iter().all(|d| d.primitives == 0);
    if r.passed && splits && spans && two && r.primitives_are_generators {
        pass(format!("dims {:?}, F_n {:?}, M_n {:?}, primitives = {{a, b}}", dims(&r), r.cofiltration, r.products))
    } else {
        fail(format!("{r:?}"))
    }
}

fn dims(r: &operad_forge::idempotents::RigidityReport) -> Vec<usize> {
    r.degrees.iter().map(|d| d.dimension).collect()
}

fn ac9() -> Verdict {
    let h = check_hopf(4);
    let c = nongeneration_certificate(&Surjection(vec![1, 1, 2]));
    if h.passed && c.component_dimension == 13 && !c.generated {
        pass(format!(
            "Hopf law on {} pairs; (1,1,2) NOT generated: span rank {} of 13, {} with target",
            h.pairs, c.product_span_rank, c.augmented_rank
        ))
    } else {
        fail(format!("{h:?} {c:?}"))
    }
}

fn ac10() -> Verdict {
    // Unshuffles of p1 p2 into two singletons: (p1, p2) and (p2, p1), so each of the four entries is 1.
    let m = [[1i64, 1], [1, 1]];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let oracle = if det != 0 { 2 } else if m.iter().flatten().any(|&v| v != 0) { 1 } else { 0 };
    let rank = phi_rank(2);
    let dim = Operad::As.basis(2).len();
    if rank == oracle && rank == 1 && dim == 2 {
        pass("rank(phi_2) = 1 < 2 = dim As(2)")
    } else {
        fail(format!("rank {rank}, oracle {oracle}, dim {dim}"))
    }
}

fn ac11() -> Verdict {
    let r = check_law(&find_law("hypertree-prelie").unwrap(), 5);
    assert!(r.passed, "{:?}", r.counterexample);
    let prims: Vec<usize> = (1..=4).map(|n| operad_primitives(Operad::HyperPreLie, n).len()).collect();
    let binary_free: Vec<Vec<Basis>> = (1..=4)
        .map(|n| Operad::HyperPreLie.basis(n).into_iter().filter(|h| h.as_hyper().binary_edges() == 0).collect())
        .collect();
    let free_counts: Vec<usize> = binary_free.iter().map(Vec::len).collect();
    assert_eq!(prims, vec![1, 0, 3, 28]);
    assert_eq!(free_counts, vec![1, 0, 3, 4]);
    for n in 1..=4 {
        let mut span = Echelon::new();
        for p in operad_primitives(Operad::HyperPreLie, n) {
            span.insert(&p);
        }
        assert!(binary_free[n - 1].iter().all(|h| span.contains(&Lc::single(h.clone()))));
    }
    // Freeness over the primitives: 4^3 trees on four singletons, 4 · 3 · 2 on a 3-block and a singleton.
    assert_eq!(Operad::HyperPreLie.basis(4).len() - 64 - 4 * prims[2] * 2, prims[3]);
    let mut d = Lc::single(b("ht(root=1; {1,2,3}; {3,4})"));
    d.sub_assign(&Lc::single(b("ht(root=1; {1,2,3}; {2,4})")));
    assert!(Operad::HyperPreLie.coproduct_lc("graft", &d).is_zero());
    fail(format!(
        "law passes ({} cases at <= 5 vertices), but primitives are not exactly the binary-free hypertrees: dims {:?} vs \
         {:?}; they agree to 3 vertices and the binary-free ones are contained at 4; ht(root=1; {{1,2,3}}; {{3,4}}) - \
         ht(root=1; {{1,2,3}}; {{2,4}}) is primitive; 28 = 116 - 64 - 24 as freeness predicts",
        r.cases, prims, free_counts
    ))
}

fn ac12() -> Verdict {
    let symmetric: Vec<Operad> = ALL.into_iter().filter(|o| o.symmetric()).collect();
    for &o in &symmetric {
        let r = check_compatible_basis(o, 4);
        if !r.passed {
            return fail(format!("{o}: {}", r.failure.unwrap_or_default()));
        }
    }
    pass(format!("{} symmetric operads at arity <= 4", symmetric.len()))
}

fn main() -> ExitCode {
    let criteria: [(u8, fn() -> Verdict); 12] = [
        (1, ac1),
        (2, ac2),
        (3, ac3),
        (4, ac4),
        (5, ac5),
        (6, ac6),
        (7, ac7),
        (8, ac8),
        (9, ac9),
        (10, ac10),
        (11, ac11),
        (12, ac12),
    ];
    let mut unexpected = Vec::new();
    for (id, run) in criteria {
        let v = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            fail(format!("panicked: {msg}"))
        });
        println!("AC{id} {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if !v.pass && (!LITERALLY_FALSE.contains(&id) || v.detail.starts_with("panicked")) {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
