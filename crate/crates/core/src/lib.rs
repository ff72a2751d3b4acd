pub mod algebra;
pub mod commands;
pub mod complex;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod options;
pub mod poly;
pub mod proj;
pub mod rep;
pub mod service;
pub mod silting;
pub mod tautilt;
pub mod verify;
