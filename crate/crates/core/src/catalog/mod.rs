//! Group constructions, group files and the built-in verification corpus.

mod build;
mod corpus;
mod expr;
mod file;

pub use build::build;
pub use corpus::{builtin_corpus, corpus_entries, order_1875_group, ORDER_1875_NAME};
pub use expr::{parse_action, parse_expr, parse_word, GroupExpr, Word};
pub use file::{parse_group_file, read_group_file};
