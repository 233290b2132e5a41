pub mod certify;
pub mod cli;
pub mod error;
pub mod picard;
pub mod regression;
pub mod report;
pub mod sheaf;
pub mod stability;
pub mod surface;
