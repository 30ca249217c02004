//! Exact arithmetic and verification toolkit for the codegree characterization
//! of finite simple groups of Lie type.

mod bigstr;
pub mod catalog;
pub mod chartab;
pub mod exactnum;
pub mod qsymbolic;
pub mod verifier;
