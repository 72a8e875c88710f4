//! Validate a hand-written Cartan matrix, then enumerate it.
//! Entries follow a[i][j] = 2(a_i, a_j) / (a_j, a_j).

use rootsys::exponents::{dual_partition, height_distribution};
use rootsys::{symmetrizer, validate_cartan, RootSystem};

fn main() {
    // B3 with the short root first instead of last
    let relabeled = vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]];
    let c = validate_cartan(relabeled).expect("finite type");
    let form = symmetrizer(&c);
    println!("squared lengths {:?}", form.d().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    let rs = RootSystem::enumerate(&c).unwrap();
    let rep = dual_partition(&height_distribution(&rs)).unwrap();
    println!(
        "{} positive roots, highest {:?}, exponents {:?}",
        rs.num_positive(),
        rs.highest_root().coeffs(),
        rep.exponents()
    );

    for bad in [
        vec![vec![2, -2], vec![-2, 2]],
        vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        vec![vec![2, 0], vec![0, 2]],
        vec![vec![2, -1], vec![0, 2]],
    ] {
        println!("{bad:?}: {}", validate_cartan(bad.clone()).unwrap_err());
    }
}
