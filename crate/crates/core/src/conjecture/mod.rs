//! A small language of universally quantified set relations.
//!
//! ```text
//! conjecture := binder+ [guard] ":" body
//! binder     := "forall" IDENT "in" range
//! range      := "all" | "downclosed" | "elements" | "kind" "(" kindname ")"
//! guard      := "where" ("regular" | "simple" | "left_simple" | "right_simple" | "biint_simple")
//! body       := relation ("and" relation)*
//! relation   := expr ("<=" | "=") expr
//! expr       := term ("|" term)*
//! term       := factor ("&" factor)*
//! factor     := atom ("*" atom)*
//! atom       := "S" | IDENT | "{" IDENT "}" | "cl" "(" expr ")" | "(" expr ")" | atom "^" (INT | "M")
//! ```
//!
//! `cl(e)` is the downward closure, `*` the subset product, `&`/`|` are
//! intersection/union and `M` is the potency the check runs at. Subset
//! ranges: `all` is every subset including the empty one, `downclosed` the
//! non-empty order ideals, `kind(k)` the ideals of kind `k` at potency `M`.

mod ast;
mod eval;
mod parse;

pub use ast::{Binder, Conjecture, Exponent, Guard, Range, RelOp, Relation, SetExpr};
pub use eval::{
    check_conjecture, eval_set_expr, guard_holds, replay_conjecture, Env, CONJECTURE_CHECK,
};
pub use parse::{format_conjecture, parse_conjecture, ParseError, ParseErrorKind, Pos};
