//! Library side of the `qcoh` command-line driver.

pub mod grid;
pub mod record;
pub mod verify;
