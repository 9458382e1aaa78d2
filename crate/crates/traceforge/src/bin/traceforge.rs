fn main() {
    println!("traceforge");
}
