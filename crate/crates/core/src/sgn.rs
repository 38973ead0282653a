//! The `sgn-v1` plain-text matrix format.
//!
//! One matrix row per line, entries written as `+` or `-`, optionally
//! separated by spaces or tabs. The matrix ends at the first blank line or
//! at end of input; anything after a blank line is ignored. Rows must all
//! have the same width and the matrix must be square.

use crate::error::SequencyError;
use crate::matrix::SignMatrix;
use crate::vector::SignVector;

/// Parses a matrix from `sgn-v1` text. Errors carry 1-indexed line and
/// column positions.
pub fn parse_sgn(input: &str) -> Result<SignMatrix, SequencyError> {
    let mut rows: Vec<Vec<i8>> = Vec::new();
    let mut width = 0usize;
    let mut last_row_line = 0usize;

    for (line_idx, line) in input.lines().enumerate() {
        let line_no = line_idx + 1;
        if line.trim().is_empty() {
            if rows.is_empty() {
                return Err(SequencyError::Parse {
                    line: line_no,
                    column: 1,
                    message: "blank line before any matrix row".to_string(),
                });
            }
            break;
        }

        let mut row: Vec<i8> = Vec::new();
        for (col_idx, ch) in line.chars().enumerate() {
            let column = col_idx + 1;
            match ch {
                '+' => row.push(1),
                '-' => row.push(-1),
                ' ' | '\t' => {}
                other => {
                    return Err(SequencyError::Parse {
                        line: line_no,
                        column,
                        message: format!("unexpected character {other:?}, expected '+' or '-'"),
                    });
                }
            }
            if rows.is_empty() {
                continue;
            }
            if row.len() > width {
                return Err(SequencyError::Parse {
                    line: line_no,
                    column,
                    message: format!("row has more than {width} entries"),
                });
            }
        }
        if rows.is_empty() {
            width = row.len();
        } else if row.len() < width {
            return Err(SequencyError::Parse {
                line: line_no,
                column: line.chars().count() + 1,
                message: format!("row has {} entries, expected {width}", row.len()),
            });
        }
        last_row_line = line_no;
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(SequencyError::Parse {
            line: 1,
            column: 1,
            message: "no matrix rows found".to_string(),
        });
    }
    if rows.len() != width {
        return Err(SequencyError::Parse {
            line: last_row_line,
            column: 1,
            message: format!("{} rows of {} entries: matrix must be square", rows.len(), width),
        });
    }

    let n = rows.len();
    let columns = (0..n)
        .map(|j| SignVector::from_neg_bits(n, |i| rows[i][j] < 0))
        .collect();
    SignMatrix::from_columns(columns)
}

/// Renders a matrix as `sgn-v1` text, terminated by a blank line.
pub fn format_sgn(matrix: &SignMatrix) -> String {
    let n = matrix.order();
    let mut out = String::with_capacity((n + 1) * n + 1);
    for i in 0..n {
        for j in 0..n {
            out.push(if matrix.sign(i, j) < 0 { '-' } else { '+' });
        }
        out.push('\n');
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_spaced_rows() {
        let plain = parse_sgn("++\n+-\n").unwrap();
        let spaced = parse_sgn("+ +\n+\t-\n").unwrap();
        assert_eq!(plain, spaced);
        assert_eq!(plain.sign(1, 1), -1);
    }

    #[test]
    fn stops_at_blank_line() {
        let m = parse_sgn("++\n+-\n\nthis trailing content is ignored\n").unwrap();
        assert_eq!(m.order(), 2);
    }

    #[test]
    fn rejects_unexpected_character() {
        let err = parse_sgn("++\n+x\n").unwrap_err();
        assert_eq!(
            err,
            SequencyError::Parse {
                line: 2,
                column: 2,
                message: "unexpected character 'x', expected '+' or '-'".to_string()
            }
        );
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = parse_sgn("++\n+-+\n").unwrap_err();
        match err {
            SequencyError::Parse { line: 2, column: 3, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_sgn("+++\n+-\n+++\n").unwrap_err();
        match err {
            SequencyError::Parse { line: 2, column: 3, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_and_non_square() {
        assert!(matches!(parse_sgn(""), Err(SequencyError::Parse { .. })));
        assert!(matches!(parse_sgn("\n"), Err(SequencyError::Parse { .. })));
        let err = parse_sgn("++\n+-\n--\n").unwrap_err();
        match err {
            SequencyError::Parse { line: 3, message, .. } => {
                assert!(message.contains("square"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        let m = SignMatrix::from_rows(&[vec![1, -1, 1], vec![-1, -1, 1], vec![1, 1, -1]]).unwrap();
        let text = format_sgn(&m);
        assert!(text.ends_with("\n\n"));
        assert_eq!(parse_sgn(&text).unwrap(), m);
    }
}
