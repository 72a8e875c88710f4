//! Check c_max against m2 for one type and print the full ledger.
//!
//!     cargo run --example verify_theorem -- E8

use rootsys::lemmas::ScanConfig;
use rootsys::theorem::full_ledger;
use rootsys::{RankedType, RootSystem};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "E8".into());
    let ty: RankedType = name.parse().expect("type such as E8");
    let rs = RootSystem::of_type(ty);
    let ledger = full_ledger(&rs, &ScanConfig::default()).expect("rank >= 2");
    println!(
        "{ty}: c_max = {}, m2 = {}, case {:?}",
        ledger.c_max, ledger.m2, ledger.case
    );
    for (name, check) in &ledger.checks {
        let how = if check.sampling.is_some() { "sampled" } else { "exhaustive" };
        println!("  {:<22} {:<5} {how}", name, if check.pass { "ok" } else { "FAIL" });
    }
    println!("{}", serde_json::to_string_pretty(&ledger).unwrap());
}
