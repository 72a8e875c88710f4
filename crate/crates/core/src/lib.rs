//! Root systems of the irreducible crystallographic types, Weyl group
//! exponents computed two independent ways, and executable checks relating
//! the largest highest-root coefficient `c_max` to the second smallest
//! exponent `m_2`.
//!
//! ```
//! use rootsys::{cartan::RankedType, exponents, roots::RootSystem};
//!
//! let g2 = RootSystem::of_type("G2".parse::<RankedType>().unwrap());
//! let report = exponents::dual_partition(&exponents::height_distribution(&g2)).unwrap();
//! assert_eq!(report.exponents(), &[1, 5]);
//! assert_eq!(g2.c_max(), 3);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod cartan;
pub mod cli;
pub mod exponents;
pub mod graph;
pub mod lemmas;
pub mod roots;
pub mod theorem;

pub use cartan::{build_cartan, symmetrizer, validate_cartan, CartanMatrix, RankedType};
pub use exponents::ExponentReport;
pub use roots::{Root, RootSystem};
pub use theorem::TheoremLedger;
