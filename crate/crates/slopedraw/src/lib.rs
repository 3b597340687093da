pub mod auto;
pub mod coords;
pub mod cubic;
pub mod drawing;
pub mod gen;
pub mod graph;
pub mod io;
pub mod matching;
pub mod slope;
pub mod verify;
pub mod solver;
pub mod subcubic;
