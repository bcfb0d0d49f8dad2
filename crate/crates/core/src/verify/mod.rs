//! Representation families and the brute-force verification suites.

pub mod families;
pub mod suites;

pub use families::{
    gen_briefly_unstable_family, gen_semistable_family, gen_twisted_product, gen_twisted_product_any,
    gen_twisted_product_even,
};
pub use suites::{run_all, run_suite, Failure, SuiteReport, SUITE_NAMES};
