//! Shared pieces of the `splitdel` command-line tool: the edge-list file
//! format and the seeded split-graph generator.

pub mod edge_list;
pub mod gen;
