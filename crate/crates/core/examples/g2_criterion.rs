//! c_max = m2 - 2 singles out G2 among all types up to rank 12.

use rootsys::lemmas::ScanConfig;
use rootsys::theorem::{find_lambda_chain, full_ledger, verify_g2_criterion};
use rootsys::{RankedType, RootSystem};

fn main() {
    let ledgers: Vec<_> = RankedType::all_up_to(12)
        .into_iter()
        .filter(|t| t.rank() >= 2)
        .map(|t| full_ledger(&RootSystem::of_type(t), &ScanConfig::default()).unwrap())
        .collect();
    let report = verify_g2_criterion(&ledgers);
    println!("holds for {:?}; graph forms ok: {}", report.holds_for, report.g2_graph_forms);

    let g2 = RootSystem::of_type("G2".parse().unwrap());
    let chain = find_lambda_chain(&g2);
    println!("G2 chain from -theta: {:?} with coefficients {:?}", chain.vertices, chain.coefficients);
    std::process::exit(if report.pass { 0 } else { 1 });
}
