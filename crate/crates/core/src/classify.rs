use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::SequencyError;
use crate::matrix::{SequencyProfile, SignMatrix};

/// Completeness and orderedness verdict for one matrix.
///
/// A matrix of order n is sequency-complete when its column sequencies are a
/// permutation of 0..n, and sequency-ordered when column j has sequency
/// exactly j. Ordered implies complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub complete: bool,
    pub ordered: bool,
    pub profile: SequencyProfile,
    /// For incomplete matrices: each repeated sequency value with the columns
    /// that share it, ascending by value. Empty exactly when complete.
    #[serde(rename = "duplicates", serialize_with = "serialize_duplicates")]
    pub duplicate_sequencies: Vec<(usize, Vec<usize>)>,
}

fn serialize_duplicates<S: Serializer>(
    duplicates: &[(usize, Vec<usize>)],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(duplicates.len()))?;
    for (value, columns) in duplicates {
        map.serialize_entry(&value.to_string(), columns)?;
    }
    map.end()
}

/// Classifies a sign matrix by its column sequencies.
pub fn classify(matrix: &SignMatrix) -> Classification {
    let n = matrix.order();
    let profile = matrix.profile();
    let values = profile.values();

    // n values in 0..n are a permutation exactly when no value repeats.
    let mut columns_by_value: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (column, &value) in values.iter().enumerate() {
        columns_by_value[value].push(column);
    }
    let complete = columns_by_value.iter().all(|cols| cols.len() == 1);
    let ordered = complete && values.iter().enumerate().all(|(j, &v)| v == j);
    let duplicate_sequencies: Vec<(usize, Vec<usize>)> = columns_by_value
        .into_iter()
        .enumerate()
        .filter(|(_, cols)| cols.len() > 1)
        .map(|(value, cols)| (value, cols))
        .collect();

    Classification {
        n,
        complete,
        ordered,
        profile,
        duplicate_sequencies,
    }
}

/// Classifies a real square matrix by first projecting it onto signs
/// (positive and zero entries to +1, negative to -1).
pub fn classify_real(rows: &[Vec<f64>]) -> Result<Classification, SequencyError> {
    Ok(classify(&SignMatrix::project_real(rows)?))
}
