use evencycle::search::{ex_exact, SearchBudget};

#[test]
#[ignore]
fn scaling() {
    for n in [8, 9, 10, 11] {
        let r = ex_exact(n, 2, SearchBudget::default());
        println!("ex({n},2) = {} explored={} elapsed={:?}", r.max_edges, r.explored, r.elapsed);
    }
    for n in [8, 9] {
        let r = ex_exact(n, 3, SearchBudget::default());
        println!("ex({n},3) = {} explored={} elapsed={:?}", r.max_edges, r.explored, r.elapsed);
    }
}
