//! Exact evaluation of Kauffman brackets of colored framed trivalent graphs.

pub mod qarith;
pub mod repcore;
pub mod sliced;
pub mod shadow;
pub mod verify;
pub mod cli;
