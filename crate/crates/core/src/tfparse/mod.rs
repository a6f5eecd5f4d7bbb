//! Text and JSON ingestion of transfer matrices.
//!
//! Grammar (whitespace is insignificant, `s` may be written `S`):
//!
//! ```text
//! matrix  := '[' row ( ';' row )* ']'
//! row     := expr ( ',' expr )*
//! expr    := term ( ( '+' | '-' ) term )*
//! term    := unary ( ( '*' | '/' ) unary )*
//! unary   := ( '-' | '+' ) unary | power
//! power   := primary ( '^' integer )?
//! primary := number | 's' | '(' expr ')'
//! number  := digits ( '.' digits )? | '.' digits
//! ```
//!
//! Decimal literals are read exactly (`0.5` is `1/2`) and `/` is exact
//! rational-function division, so `3/4` is simply the constant three
//! quarters. Exponents are literal integers no larger than
//! [`MAX_EXPONENT`].

mod lexer;
mod matrix;
mod parser;
mod printer;

pub use matrix::TransferMatrix;
pub use parser::{parse_expression, parse_transfer_matrix, MAX_DEGREE, MAX_EXPONENT};
pub use printer::print_transfer_matrix;

use crate::error::{Error, Result};

/// Accepts either the text grammar or the JSON form
/// `{"rows": m, "cols": r, "entries": [[{"num": [...], "den": [...]}, ...], ...]}`.
pub fn read_transfer_matrix(input: &str) -> Result<TransferMatrix> {
    if input.trim_start().starts_with('{') {
        serde_json::from_str(input).map_err(|e| Error::InvalidInput(format!("transfer matrix JSON: {e}")))
    } else {
        parse_transfer_matrix(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Position;
    use crate::ratfunc::{Polynomial, RationalFunction};
    use crate::rational::ratio;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(n), Polynomial::from_ints(d)).unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let g = parse_transfer_matrix("[1/(s+1), s/(s^2-1)]").unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 2));
        assert_eq!(g.get(0, 0), &rf(&[1], &[1, 1]));
        assert_eq!(g.get(0, 1), &rf(&[0, 1], &[-1, 0, 1]));
        assert_eq!(print_transfer_matrix(&g), "[1/(s + 1), s/(s^2 - 1)]");
    }

    #[test]
    fn constants_and_columns() {
        let g = parse_transfer_matrix("[1]").unwrap();
        assert_eq!(g.get(0, 0), &RationalFunction::one());
        let col = parse_transfer_matrix("[1/(s+1); 1/(s+2)]").unwrap();
        assert_eq!((col.rows(), col.cols()), (2, 1));
        assert_eq!(parse_transfer_matrix(&print_transfer_matrix(&col)).unwrap(), col);
        assert_eq!(print_transfer_matrix(&parse_transfer_matrix("[0]").unwrap()), "[0]");
        assert_eq!(print_transfer_matrix(&parse_transfer_matrix("[1, 0; 0, 1]").unwrap()), "[1, 0; 0, 1]");
    }

    #[test]
    fn precedence_and_literals() {
        let f = parse_expression("1 + 2*s^2 - -s").unwrap();
        assert_eq!(f, rf(&[1, 1, 2], &[1]));
        let g = parse_expression("0.5*S/(2*s + 1)").unwrap();
        assert_eq!(
            g,
            RationalFunction::new(
                Polynomial::from_coeffs(vec![ratio(1, 4)]) * Polynomial::s(),
                Polynomial::from_coeffs(vec![ratio(1, 2), ratio(1, 1)])
            )
            .unwrap()
        );
        assert_eq!(parse_expression("3/4/s").unwrap(), parse_expression("(3/4)/s").unwrap());
        assert_eq!(parse_expression("(s+1)^2/(s^2+2*s+1)").unwrap(), RationalFunction::one());
        assert_eq!(parse_expression("-s^2").unwrap(), rf(&[0, 0, -1], &[1]));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        match parse_transfer_matrix("[1/(s+1)") {
            Err(Error::Syntax { position, message }) => {
                assert_eq!(position, Position { line: 1, column: 9 });
                assert!(message.contains("']'"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        match parse_transfer_matrix("[1,\n  2 x]") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, Position { line: 2, column: 5 }),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_transfer_matrix("[s^1.5]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_transfer_matrix("[s^-1]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_transfer_matrix(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_transfer_matrix("[1.2.3]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn shape_and_entry_errors() {
        assert!(matches!(parse_transfer_matrix("[1, 2; 3]"), Err(Error::Shape(_))));
        assert!(matches!(parse_transfer_matrix("[1/(s-s)]"), Err(Error::InvalidEntry { .. })));
        assert!(matches!(parse_transfer_matrix("[s^65]"), Err(Error::InvalidEntry { .. })));
        assert!(matches!(parse_transfer_matrix("[(s^64)^64]"), Err(Error::InvalidEntry { .. })));
        let deep = format!("[{}1{}]", "(".repeat(5000), ")".repeat(5000));
        assert!(parse_transfer_matrix(&deep).is_err());
    }

    #[test]
    fn json_ingestion() {
        let g = read_transfer_matrix(
            r#"{"rows": 1, "cols": 2, "entries": [[{"num": [1], "den": [1, 1]}, {"num": [0, 1], "den": [-1, 0, 1]}]]}"#,
        )
        .unwrap();
        assert_eq!(g, parse_transfer_matrix("[1/(s+1), s/(s^2-1)]").unwrap());
        let back: TransferMatrix = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
        assert!(read_transfer_matrix(r#"{"rows": 2, "cols": 2, "entries": [[]]}"#).is_err());
    }
}
