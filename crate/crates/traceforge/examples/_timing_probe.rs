use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    let rows = traceforge::padic_local::brute_report(5, 2).unwrap();
    let all = rows.iter().all(|r| r.matches);
    println!("p=5 n=2: {} rows, all match: {all}, {:.2?}", rows.len(), t0.elapsed());
    for r in rows.iter().filter(|r| !r.matches) {
        println!("MISMATCH {} [{}]: closed={} brute={}", r.formula, r.params, r.closed_form, r.brute_value);
    }
}
