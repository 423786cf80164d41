//! The Greek Word Description Language: rule notation for suffix lists,
//! infixes and stress positions attached to syllabified stems.

mod ast;
mod diagnostic;
mod lexer;
mod parser;
mod print;
mod resolve;
mod validate;

pub use ast::*;
pub use diagnostic::{has_errors, Diagnostic, DiagnosticKind, Severity};
pub use parser::{parse, parse_sources, Parsed};
pub use print::{print, print_definition, print_entry};
pub use resolve::{resolve, ResolvedEntry, ResolvedForm, ResolvedRuleSet};
pub use validate::{load, validate, Loaded};
