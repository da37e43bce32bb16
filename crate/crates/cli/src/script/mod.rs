//! The input language: declarations of rings, ideals, schemes, centers,
//! matrices, maps and certificates, and commands over them, each ending in
//! `;`. See the crate README for the grammar.

mod ast;
mod check;
mod parser;
mod printer;

pub use ast::*;
pub use check::{check, Kind, RESERVED};
pub use parser::parse_syntax;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScriptError {
    #[error("{line}:{column}: {message}{}", expected_list(.expected))]
    Syntax { line: usize, column: usize, message: String, expected: Vec<String> },
    #[error("{line}:{column}: `{name}` is already declared")]
    DuplicateIdentifier { line: usize, column: usize, name: String },
    #[error("{line}:{column}: `{name}` is used before it is declared")]
    UseBeforeDeclaration { line: usize, column: usize, name: String },
    #[error("{line}:{column}: variable `{name}` appears twice in the ring")]
    DuplicateVariable { line: usize, column: usize, name: String },
    #[error("{line}:{column}: `{name}` is {found}, expected {expected}")]
    WrongKind { line: usize, column: usize, name: String, expected: String, found: String },
    #[error("{line}:{column}: {message}")]
    Invalid { line: usize, column: usize, message: String },
}

fn expected_list(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}

/// Parses and checks a script. Nothing is executed if this fails.
pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let script = parse_syntax(text)?;
    check(&script)?;
    Ok(script)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_statements() {
        let s = parse_script("ring R = Q[x,y]; ideal I = x, y; dim I;").unwrap();
        assert_eq!(s.stmts.len(), 3);
        assert_eq!(s.stmts[2].kind, StmtKind::Command(Command::new(Op::Dim { target: "I".into() })));
    }

    #[test]
    fn ideal_without_ring() {
        let e = parse_script("ideal I = x;").unwrap_err();
        assert!(matches!(e, ScriptError::UseBeforeDeclaration { ref name, .. } if name == "x"), "{e}");
    }

    #[test]
    fn duplicate_variable_and_identifier() {
        assert!(matches!(parse_script("ring R = Q[x,x];"), Err(ScriptError::DuplicateVariable { .. })));
        assert!(matches!(
            parse_script("ring R = Q[x]; ideal R = x;"),
            Err(ScriptError::DuplicateIdentifier { line: 1, column: 16, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions_and_expectations() {
        let e = parse_script("ring R = Q[x, y];\nideal I = x y;").unwrap_err();
        match e {
            ScriptError::Syntax { line, column, expected, .. } => {
                assert_eq!((line, column), (2, 13));
                assert!(expected.contains(&"*".to_string()));
            }
            other => panic!("{other:?}"),
        }
        let e = parse_script("ring R = Q[x];\ndim").unwrap_err();
        assert!(matches!(e, ScriptError::Syntax { line: 2, .. }), "{e}");
        let e = parse_script("frobnicate;").unwrap_err();
        assert!(e.to_string().contains("unknown declaration or command `frobnicate`"), "{e}");
    }

    #[test]
    fn hyphenated_commands_and_clauses() {
        let s = parse_script(
            "ring R = Q[x, y];\nideal I = x^2;\nradical-member x in I expect true with steps 10 timeout 0.5;\n",
        )
        .unwrap();
        let StmtKind::Command(c) = &s.stmts[2].kind else { panic!() };
        assert_eq!(c.op.keyword(), "radical-member");
        assert_eq!(c.expect, Some(Expect::Word("true".into())));
        assert_eq!(c.budget, BudgetClause { steps: Some(10), timeout: Some("0.5".into()) });
    }

    #[test]
    fn expectations_are_validated() {
        assert!(parse_script("ring R = Q[x]; ideal I = x; smooth I expect true;").is_err());
        assert!(parse_script("ring R = Q[x]; ideal I = x; dim I expect 0;").is_ok());
        assert!(parse_script("ring R = Q[x]; ideal I = x; dim I expect smooth;").is_err());
    }

    #[test]
    fn kinds_are_checked() {
        let e = parse_script("ring R = Q[x]; ideal I = x; ga-check I;").unwrap_err();
        assert_eq!(e.to_string(), "1:29: `I` is an ideal, expected a total space");
    }

    #[test]
    fn reserved_words_cannot_be_variables() {
        assert!(parse_script("ring R = Q[in, x];").is_err());
    }

    #[test]
    fn printed_scripts_reparse() {
        let text = "ring R = Q[x, y] order block(x);\nscheme A = affine;\ncenter Z = (x - 1, y^2) on A at (1, 0);\n\
                    matrix M = [[1, -x], [0, 1]];\nmap F: A -> A = (y, x);\ncertificate K = F, F;\n\
                    reschange Z, M as Z2;\npair-iso Z, Z2 via K expect mismatch;\ngm-check 2, 3, 7 centers (1, 1);\n\
                    fiber (-1/2, 3);\ndiag-family;\nassert-eq x*(y + 1), x*y + x;\n";
        let s = parse_script(text).unwrap();
        assert_eq!(s.to_string(), text);
        assert_eq!(parse_script(&s.to_string()).unwrap(), s);
    }
}
