fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(500);
    let t0 = std::time::Instant::now();
    let v = mblrevive::model::probe_eigh(n);
    println!("eigh({n}) -> {v:.6} in {:?}", t0.elapsed());
}
