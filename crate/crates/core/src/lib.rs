pub mod arith;
pub mod characters;
pub mod classify;
pub mod frames;
pub mod lattice;
pub mod lie;
pub mod matrix;
pub mod niemeier;
pub mod report;
pub mod twisted;
