use operad_forge::combinatorics::{parse_any, Basis, Tensor};
use operad_forge::free_bialgebra::{DualTables, Tc};
use operad_forge::operads::Operad;

fn b(s: &str) -> Basis {
    parse_any(s).unwrap()
}

fn t(parts: &[&str]) -> Tensor {
    Tensor(parts.iter().map(|s| b(s)).collect())
}

#[test]
fn dimension_tables() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=6usize {
        let cayley = n.pow(n as u32 - 1);
        assert_eq!(Operad::PreLie.basis(n).len(), cayley);
        assert_eq!(Operad::Nap.basis(n).len(), cayley);
        assert_eq!(Operad::Perm.basis(n).len(), n);
        assert_eq!(Operad::Pan.basis(n).len(), n);
        for o in [Operad::As, Operad::Zinbiel, Operad::Leibniz, Operad::Poisson] {
            assert_eq!(o.basis(n).len(), fact(n), "{o} {n}");
        }
    }
    let prelie: Vec<usize> = (1..=6).map(|n| Operad::PreLie.basis(n).len()).collect();
    assert_eq!(prelie, vec![1, 2, 9, 64, 625, 7776]);
}

#[test]
fn prelie_three_ary_cooperation_worked_example() {
    let tree = b("4(2(1,3),5)");
    let s = b("2(1,3)");
    let got = DualTables::new().cooperation(Operad::PreLie, &s, &tree).unwrap();
    let expected: Tc = [
        t(&["3", "4(2,5)", "1"]),
        t(&["1", "4(2,5)", "3"]),
        t(&["5", "4(2(3))", "1"]),
        t(&["1", "4(2(3))", "5"]),
        t(&["5", "4(2(1))", "3"]),
        t(&["3", "4(2(1))", "5"]),
        t(&["5", "4", "2(1,3)"]),
        t(&["2(1,3)", "4", "5"]),
    ]
    .into_iter()
    .map(|x| (x, operad_forge::linear::int(1)))
    .collect();
    assert_eq!(got.len(), 8);
    assert_eq!(got, expected);
}

#[test]
fn hypertree_grafting_figure() {
    let h = b("ht(root=4; {1,2,4}; {2,3})");
    let g = b("ht(root=6; {5,6}; {6,7})");
    let p = Operad::HyperPreLie.product("graft", &[&h, &g]).unwrap();
    let expected = [
        "ht(root=4; {1,2,4}; {2,3}; {4,6}; {5,6}; {6,7})",
        "ht(root=4; {1,2,4}; {1,6}; {2,3}; {5,6}; {6,7})",
        "ht(root=4; {1,2,4}; {2,3}; {2,6}; {5,6}; {6,7})",
        "ht(root=4; {1,2,4}; {2,3}; {3,6}; {5,6}; {6,7})",
    ];
    assert_eq!(p.len(), 4);
    for e in expected {
        assert_eq!(p.coeff(&b(e)), operad_forge::linear::int(1), "{e}");
    }
    let nap = Operad::HyperNap.product("nap", &[&h, &g]).unwrap();
    assert_eq!(nap.to_string(), "ht(root=4; {1,2,4}; {2,3}; {4,6}; {5,6}; {6,7})");
}
