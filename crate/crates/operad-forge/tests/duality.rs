use operad_forge::free_bialgebra::DualTables;
use operad_forge::operads::ALL;

#[test]
fn combinatorial_coproducts_are_dual_to_products() {
    for o in ALL {
        let mut tables = DualTables::new();
        for op in o.coops() {
            if op.arity > 5 {
                continue;
            }
            for n in 1..=5 {
                for x in o.basis(n) {
                    let dual = tables.def2(o, &op.name, &x).unwrap();
                    let comb = o.raw_coproduct(&op.name, &x);
                    assert_eq!(dual, comb, "{o} {} on {x}", op.name);
                }
            }
        }
    }
}
