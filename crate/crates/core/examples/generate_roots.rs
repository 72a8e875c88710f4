//! Enumerate the positive roots of a type, layer by layer.
//!
//!     cargo run --example generate_roots -- F4

use rootsys::{RankedType, RootSystem};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "F4".into());
    let ty: RankedType = match name.parse() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let rs = RootSystem::of_type(ty);
    println!("{ty}: {} positive roots", rs.num_positive());
    for r in 1..=rs.max_height() {
        let layer: Vec<String> = rs.layer(r).iter().map(|x| format!("{:?}", x.coeffs())).collect();
        println!("height {r:>2} ({}): {}", layer.len(), layer.join(" "));
    }
    println!("highest root {:?}, c_max = {}", rs.highest_root().coeffs(), rs.c_max());
}
