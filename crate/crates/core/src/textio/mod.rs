//! Text formats: terms and formulas, group, representation and system files.
//!
//! Every parse error carries a [`SourceSpan`](crate::SourceSpan). Printing
//! is canonical, and parsing the printed form gives back an equal value.

mod files;
mod lexer;
mod terms;

pub use files::{
    parse_group_file, parse_rep_file, parse_system_file, serialize_group, serialize_rep, serialize_system,
};
pub use terms::{
    infer_context, parse_atom, parse_module, parse_qid, parse_ring, parse_term, parse_word, serialize_atom,
    serialize_module, serialize_qid, serialize_ring, serialize_word, Term,
};
