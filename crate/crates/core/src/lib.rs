pub mod coxgen;
pub mod excess;
pub mod par;
pub mod reps;
pub mod roots;
pub mod signedperm;

mod error;

pub use error::{Error, Result};
pub use signedperm::{Partition, SignedCycle, SignedCycleType, SignedPermutation};
