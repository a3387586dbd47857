use crate::error::{Error, Result};
use crate::knot::Strand;
use crate::matrix::WarpingMatrix;

/// `U = M·A`: entry `(i, j)` is `row_i[j + 1] - row_i[j]`, cyclically.
/// `+1` marks an over visit and `-1` an under visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    entries: Vec<Vec<i8>>,
}

impl DifferenceMatrix {
    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<i8> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    pub fn column_count(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn strand(&self, row: usize, col: usize) -> Strand {
        if self.entries[row][col] > 0 {
            Strand::Over
        } else {
            Strand::Under
        }
    }
}

/// The `n × n` matrix with `-1` on the diagonal, `+1` below it and `+1` in
/// the top-right corner.
pub(crate) fn step_operator(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = -1;
        if i > 0 {
            row[i - 1] = 1;
        }
    }
    if n > 0 {
        a[0][n - 1] += 1;
    }
    a
}

/// Multiplies the matrix by the step operator in exact integer arithmetic.
pub fn difference_transform(m: &WarpingMatrix) -> Result<DifferenceMatrix> {
    let n = m.column_count();
    let a = step_operator(n);
    let mut entries = Vec::with_capacity(m.row_count());
    for (i, row) in m.rows().iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let step: i64 = row
                .0
                .iter()
                .zip(&a)
                .map(|(x, ak)| i64::from(x.value) * ak[j])
                .sum();
            if step != 1 && step != -1 {
                return Err(Error::NonUnitStep {
                    row: i,
                    col: j,
                    step,
                });
            }
            out.push(step as i8);
        }
        entries.push(out);
    }
    Ok(DifferenceMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_shape() {
        let a = step_operator(3);
        assert_eq!(a, vec![vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]);
    }

    #[test]
    fn single_row() {
        let m = WarpingMatrix::from_values(&[
            &[0, 1, 2, 3, 2, 1],
            &[1, 0, 1, 2, 3, 2],
            &[1, 2, 1, 2, 1, 2],
            &[1, 2, 3, 2, 1, 0],
            &[2, 1, 0, 1, 2, 3],
            &[2, 1, 2, 1, 2, 1],
            &[2, 3, 2, 1, 0, 1],
            &[3, 2, 1, 0, 1, 2],
        ])
        .unwrap();
        let u = difference_transform(&m).unwrap();
        assert_eq!(u.entries()[0], vec![1, 1, 1, -1, -1, -1]);
        assert_eq!(u.strand(0, 0), Strand::Over);
        assert_eq!(u.strand(0, 3), Strand::Under);
    }

    #[test]
    fn non_unit_wrap_is_an_error() {
        let m = WarpingMatrix::from_values(&[
            &[0, 1, 2, 1],
            &[1, 0, 1, 0],
            &[1, 2, 1, 2],
            &[0, 1, 2, 1],
        ])
        .unwrap()
        .map_cell(3, 3, |_| crate::labels::Cell::plain(2));
        // Row 3 is now 0 1 2 2: the last step is zero and the wrap is -2.
        assert!(matches!(
            difference_transform(&m),
            Err(Error::NonUnitStep {
                row: 3,
                col: 2,
                step: 0
            })
        ));
    }
}
