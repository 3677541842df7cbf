use operad_forge::laws::{catalogue, check_compatible_basis, check_law, find_law, literal_readings};
use operad_forge::operads::ALL;

#[test]
fn every_catalogued_law_holds_at_its_bound() {
    for e in catalogue() {
        let r = check_law(&e, e.bound);
        assert!(r.passed, "{}: {:?}", e.id, r.counterexample);
        assert!(r.cases > 0);
    }
}

#[test]
fn literal_readings_fail() {
    for e in literal_readings() {
        let r = check_law(&e, e.bound);
        assert!(!r.passed, "{}", e.id);
    }
}

#[test]
fn compatible_basis_for_symmetric_operads() {
    for o in ALL {
        if !o.symmetric() {
            continue;
        }
        let r = check_compatible_basis(o, 4);
        assert!(r.passed, "{r:?}");
    }
    assert!(find_law("nope").is_err());
}

#[test]
fn word_model_bracket_is_not_a_shuffle_derivation() {
    use operad_forge::combinatorics::parse_any;
    use operad_forge::free_bialgebra::Lc;
    use operad_forge::operads::Operad;
    let p = Operad::Poisson;
    let [x, y, z] = ["[1]", "[2]", "[3]"].map(|t| Lc::single(parse_any(t).unwrap()));
    let lhs = p.product_lc("bracket", &[&x, &p.product_lc("shuffle", &[&y, &z])]);
    let mut rhs = p.product_lc("shuffle", &[&p.product_lc("bracket", &[&x, &y]), &z]);
    rhs.add_assign(&p.product_lc("shuffle", &[&y, &p.product_lc("bracket", &[&x, &z])]));
    assert_eq!(lhs.to_string(), "[1,2,3] + [1,3,2] - [2,3,1] - [3,2,1]");
    assert_eq!(rhs, lhs.scaled(&operad_forge::linear::int(2)));
}

#[test]
fn literal_readings_have_known_minimal_counterexamples() {
    let expect = [
        ("perm-literal", vec!["{*1,2}", "{*3,4,5}"], "{*1,4} ⊗ {2,3,*5} + {*1,5} ⊗ {2,3,*4}"),
        ("copan-perm-literal", vec!["{*1}", "{*2,3,4}"], "{*1,3,4} ⊗ {*2}"),
        ("dipt-literal", vec!["prec(1,2)", "3"], "-1 ⊗ star(1,3) + 1 ⊗ star(2,3)"),
    ];
    for (id, args, diff) in expect {
        let e = find_law(id).unwrap();
        let c = check_law(&e, e.bound).counterexample.unwrap();
        assert_eq!(c.args, args, "{id}");
        assert_eq!(c.difference, diff, "{id}");
    }
}

#[test]
fn amended_perm_law_is_sharp_at_arity_five() {
    let e = find_law("perm-literal").unwrap();
    assert!(check_law(&e, 4).passed);
}
