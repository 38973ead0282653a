//! Rendering helpers for the machine-readable output formats.

use sequency::SignMatrix;

/// Comma-separated rows of +1/-1 values.
pub fn matrix_csv(matrix: &SignMatrix) -> String {
    let mut out = String::new();
    for row in matrix.to_rows() {
        let line: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Portable bitmap (P1) of the sign pattern, row-major: +1 maps to 0 and
/// -1 maps to 1.
pub fn matrix_pbm(matrix: &SignMatrix) -> String {
    let n = matrix.order();
    let mut out = format!("P1\n{n} {n}\n");
    for row in matrix.to_rows() {
        let line: Vec<&str> = row.iter().map(|&s| if s < 0 { "1" } else { "0" }).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Rows as a JSON array of arrays of +1/-1.
pub fn matrix_rows_json(matrix: &SignMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        matrix
            .to_rows()
            .into_iter()
            .map(|row| serde_json::Value::Array(row.into_iter().map(Into::into).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbm_maps_minus_one_to_one() {
        let m = SignMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        assert_eq!(matrix_pbm(&m), "P1\n2 2\n0 1\n1 0\n");
    }

    #[test]
    fn csv_rows() {
        let m = SignMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        assert_eq!(matrix_csv(&m), "1,-1\n-1,1\n");
    }
}
