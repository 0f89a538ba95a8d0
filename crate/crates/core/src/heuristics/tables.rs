//! Observed class-group distributions and deviation diagnostics.
//!
//! [`class_distribution`] buckets a stream of class groups by their part
//! coprime to a set of excluded primes and reports the proportion falling
//! on each requested group type, mirroring the published comparison tables.
//! [`deviation_table`] turns an observed/predicted pair of rows into
//! percentage deviations `100 |obs - pred| / pred`.

use alloc::vec::Vec;

use num_traits::Float;

use super::abelian::AbelianGroupType;
use super::HeuristicsError;

/// Bucketed counts of class groups, in bucket order, plus the leftovers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProportionRow {
    pub buckets: Vec<AbelianGroupType>,
    pub counts: Vec<u64>,
    /// Records whose reduced class group matched no bucket.
    pub other: u64,
    pub total: u64,
}

impl ProportionRow {
    /// Fraction of all records in each bucket.
    pub fn proportions(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| {
                if self.total == 0 {
                    0.0
                } else {
                    c as f64 / self.total as f64
                }
            })
            .collect()
    }
}

/// Distribution of the part-coprime-to-`excluded` of each record's class
/// group over the requested buckets.  A `None` entry aborts with
/// [`HeuristicsError::MissingClassData`] carrying its position.
pub fn class_distribution<I>(
    records: I,
    buckets: &[AbelianGroupType],
    excluded: &[u64],
) -> Result<ProportionRow, HeuristicsError>
where
    I: IntoIterator<Item = Option<AbelianGroupType>>,
{
    let mut counts = alloc::vec![0u64; buckets.len()];
    let mut other = 0u64;
    let mut total = 0u64;
    for (index, rec) in records.into_iter().enumerate() {
        let h = rec.ok_or(HeuristicsError::MissingClassData { index })?;
        let reduced = h.coprime_part(excluded);
        total += 1;
        match buckets.iter().position(|b| *b == reduced) {
            Some(i) => counts[i] += 1,
            None => other += 1,
        }
    }
    Ok(ProportionRow {
        buckets: buckets.to_vec(),
        counts,
        other,
        total,
    })
}

/// Percentage deviations `100 |observed - predicted| / predicted`.
pub fn deviation_table(observed: &[f64], predicted: &[f64]) -> Vec<f64> {
    assert_eq!(observed.len(), predicted.len());
    observed
        .iter()
        .zip(predicted)
        .map(|(&o, &p)| {
            assert!(p > 0.0, "predicted proportions must be positive");
            Float::abs(o - p) / p * 100.0
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(label: &str) -> AbelianGroupType {
        AbelianGroupType::from_label(label).expect("valid label")
    }

    #[test]
    fn buckets_by_reduced_group() {
        // class groups C6, C2, C12, C9; odd parts: 3, 1, 3, 9
        let records = [Some(g("6")), Some(g("2")), Some(g("12")), Some(g("9"))];
        let buckets = [g("1"), g("3")];
        let row = class_distribution(records, &buckets, &[2]).unwrap();
        assert_eq!(row.counts, alloc::vec![1, 2]);
        assert_eq!(row.other, 1); // the C9
        assert_eq!(row.total, 4);
        let props = row.proportions();
        assert_eq!(props, alloc::vec![0.25, 0.5]);
    }

    #[test]
    fn missing_data_reports_position() {
        let records = [Some(g("1")), None, Some(g("3"))];
        let err = class_distribution(records, &[g("1")], &[2]).unwrap_err();
        assert_eq!(err, HeuristicsError::MissingClassData { index: 1 });
    }

    #[test]
    fn empty_input_is_empty_row() {
        let row = class_distribution([], &[g("1")], &[2]).unwrap();
        assert_eq!(row.total, 0);
        assert_eq!(row.proportions(), alloc::vec![0.0]);
    }

    #[test]
    fn deviations_in_percent() {
        let dev = deviation_table(&[0.75, 0.10], &[0.80, 0.10]);
        assert!((dev[0] - 6.25).abs() < 1e-12);
        assert_eq!(dev[1], 0.0);
    }
}
