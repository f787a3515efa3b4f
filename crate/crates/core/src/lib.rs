pub mod arith;
pub mod certify;
pub mod commands;
pub mod cyclotomic;
pub mod numberfield;
pub mod qfactor;
pub mod realroots;
pub mod report;
pub mod tower;
