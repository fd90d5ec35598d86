//! Exact combinatorics and canonical McKay bijections at the prime 3.

pub mod partition;
pub mod sym;
pub mod wreath;
pub mod mckay_sym;
pub mod glgu;
pub mod oracle;
pub mod cli;
