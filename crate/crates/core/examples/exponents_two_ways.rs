//! Exponents from the height distribution and from a Coxeter element.

use rootsys::exponents::{coxeter_exponents, dual_partition, height_distribution};
use rootsys::{RankedType, RootSystem};

fn main() {
    println!("{:<5} {:<42} {:>4}  residual", "type", "exponents", "h");
    for ty in RankedType::all_up_to(8) {
        let rs = RootSystem::of_type(ty);
        let hd = height_distribution(&rs);
        let dual = dual_partition(&hd).expect("valid distribution");
        let cox = coxeter_exponents(rs.cartan()).expect("finite type");
        assert_eq!(dual.exponents(), cox.exponents(), "{ty}");
        println!(
            "{:<5} {:<42} {:>4}  {:.1e}",
            ty.to_string(),
            format!("{:?}", dual.exponents()),
            dual.coxeter_number(),
            cox.max_residual()
        );
    }
}
