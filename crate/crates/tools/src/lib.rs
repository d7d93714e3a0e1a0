//! Edge-list files, JSON reports and the `cyclic` command line on top of
//! [`cyclic_core`].

pub mod cli;
pub mod edgelist;
pub mod report;
