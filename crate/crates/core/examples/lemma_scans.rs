//! Run the root-system lemma scans, exhaustive and seeded-sampled.

use rootsys::lemmas::{lemma_inner_positive, lemma_no_detour, lemma_string_check, lemma_three_roots, ScanConfig};
use rootsys::theorem::CheckResult;
use rootsys::{RankedType, RootSystem};

fn show(label: &str, r: &CheckResult) {
    let mode = match &r.sampling {
        Some(s) => format!("sampled {} of {} (seed {})", s.samples, s.population, s.seed),
        None => "exhaustive".into(),
    };
    println!("  {label:<15} {:<5} {mode}", if r.pass { "ok" } else { "FAIL" });
}

fn main() {
    let cfg = ScanConfig::default();
    for name in ["G2", "F4", "E8", "B12"] {
        let rs = RootSystem::of_type(name.parse::<RankedType>().unwrap());
        println!("{name} ({} signed roots)", 2 * rs.num_positive());
        show("string", &lemma_string_check(&rs));
        show("three roots", &lemma_three_roots(&rs, &cfg));
        show("inner positive", &lemma_inner_positive(&rs, &cfg));
        show("no detour", &lemma_no_detour(&rs));
    }
}
