//! JSON file formats, named algebras and the `dring` command line over
//! [`dring_core`].

pub mod builtin;
pub mod cli;
pub mod formats;
