//! Command-line front end for the multiple-tiling toolkit: file I/O, SVG
//! rendering and the acceptance suite behind `multifold selftest`.

pub mod acceptance;
pub mod io;
pub mod render;
