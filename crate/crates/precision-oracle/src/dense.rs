use crate::error::OracleError;
use spline_core::{BoundaryCondition, ControlCurve};

/// A diagonally dominant tridiagonal system in banded storage: `sub` holds
/// `a_2..a_n`, `diag` holds `b_1..b_n`, `sup` holds `c_1..c_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
    rhs: Vec<f64>,
}

impl TridiagonalSystem {
    pub fn new(
        sub: Vec<f64>,
        diag: Vec<f64>,
        sup: Vec<f64>,
        rhs: Vec<f64>,
    ) -> Result<Self, OracleError> {
        let n = diag.len();
        if n == 0 || sub.len() != n - 1 || sup.len() != n - 1 || rhs.len() != n {
            return Err(OracleError::BadBands {
                diag: n,
                sub: sub.len(),
                sup: sup.len(),
                rhs: rhs.len(),
            });
        }
        for row in 0..n {
            let a = if row == 0 { 0.0 } else { sub[row - 1] };
            let c = if row == n - 1 { 0.0 } else { sup[row] };
            if diag[row].abs() < a.abs() + c.abs() {
                return Err(OracleError::NotDiagonallyDominant { row });
            }
        }
        Ok(Self {
            sub,
            diag,
            sup,
            rhs,
        })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    /// Expands the bands into a dense row-major matrix.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        let mut m = vec![vec![0.0; n]; n];
        for j in 0..n {
            m[j][j] = self.diag[j];
            if j > 0 {
                m[j][j - 1] = self.sub[j - 1];
            }
            if j + 1 < n {
                m[j][j + 1] = self.sup[j];
            }
        }
        m
    }
}

/// Solves the system as a full dense matrix by Gaussian elimination with
/// partial pivoting. Deliberately shares nothing with the banded sweep so it
/// can serve as an independent oracle for it.
pub fn dense_tridiag_solve(sys: &TridiagonalSystem) -> Result<Vec<f64>, OracleError> {
    let n = sys.len();
    let mut m = sys.to_dense();
    let mut b = sys.rhs().to_vec();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&p, &q| m[p][col].abs().total_cmp(&m[q][col].abs()))
            .unwrap();
        if m[pivot_row][col] == 0.0 {
            return Err(OracleError::Singular { col });
        }
        m.swap(col, pivot_row);
        b.swap(col, pivot_row);

        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                m[row][k] -= factor * m[col][k];
            }
            b[row] -= factor * b[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}

/// Textbook forward-elimination/back-substitution sweep over the banded
/// storage. Valid under the diagonal dominance the constructor enforces.
pub fn thomas_solve(sys: &TridiagonalSystem) -> Vec<f64> {
    let n = sys.len();
    let (sub, diag, sup, rhs) = (sys.sub(), sys.diag(), sys.sup(), sys.rhs());

    let mut c_p = vec![0.0; n];
    let mut d_p = vec![0.0; n];
    c_p[0] = if n > 1 { sup[0] / diag[0] } else { 0.0 };
    d_p[0] = rhs[0] / diag[0];
    for j in 1..n {
        let a = sub[j - 1];
        let denom = diag[j] - a * c_p[j - 1];
        if j + 1 < n {
            c_p[j] = sup[j] / denom;
        }
        d_p[j] = (rhs[j] - a * d_p[j - 1]) / denom;
    }

    let mut x = d_p;
    for j in (0..n - 1).rev() {
        let next = x[j + 1];
        x[j] -= c_p[j] * next;
    }
    x
}

fn interior_rows(
    curve: &ControlCurve,
) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let knots = curve.knots();
    let values = curve.values();
    let n = curve.len();
    let mut sub = vec![0.0; n - 1];
    let mut diag = vec![0.0; n];
    let mut sup = vec![0.0; n - 1];
    let mut rhs = vec![0.0; n];
    for j in 1..n - 1 {
        sub[j - 1] = knots[j] - knots[j - 1];
        diag[j] = 2.0 * (knots[j + 1] - knots[j - 1]);
        sup[j] = knots[j + 1] - knots[j];
        rhs[j] = 6.0
            * ((values[j + 1] - values[j]) / (knots[j + 1] - knots[j])
                - (values[j] - values[j - 1]) / (knots[j] - knots[j - 1]));
    }
    (sub, diag, sup, rhs)
}

/// Assembles the full tridiagonal system solved by
/// [`spline_core::second_derivatives`], endpoint rows included.
pub fn assemble_system(
    curve: &ControlCurve,
    start: BoundaryCondition,
    end: BoundaryCondition,
) -> Result<TridiagonalSystem, OracleError> {
    let knots = curve.knots();
    let values = curve.values();
    let n = curve.len();
    let (mut sub, mut diag, mut sup, mut rhs) = interior_rows(curve);

    match start {
        BoundaryCondition::Natural => {
            diag[0] = 1.0;
            sup[0] = 0.0;
            rhs[0] = 0.0;
        }
        BoundaryCondition::Clamped(slope) => {
            let h = knots[1] - knots[0];
            diag[0] = 2.0 * h;
            sup[0] = h;
            rhs[0] = 6.0 * ((values[1] - values[0]) / h - slope);
        }
    }
    match end {
        BoundaryCondition::Natural => {
            diag[n - 1] = 1.0;
            sub[n - 2] = 0.0;
            rhs[n - 1] = 0.0;
        }
        BoundaryCondition::Clamped(slope) => {
            let h = knots[n - 1] - knots[n - 2];
            sub[n - 2] = h;
            diag[n - 1] = 2.0 * h;
            rhs[n - 1] = 6.0 * (slope - (values[n - 1] - values[n - 2]) / h);
        }
    }
    TridiagonalSystem::new(sub, diag, sup, rhs)
}

/// Assembles the system solved by [`spline_core::second_derivatives_simple`]:
/// endpoint rows from collapsing the out-of-range knots onto the boundary.
pub fn assemble_simple_system(curve: &ControlCurve) -> Result<TridiagonalSystem, OracleError> {
    let knots = curve.knots();
    let values = curve.values();
    let n = curve.len();
    let (mut sub, mut diag, mut sup, mut rhs) = interior_rows(curve);

    let h0 = knots[1] - knots[0];
    diag[0] = 2.0 * h0;
    sup[0] = h0;
    rhs[0] = 6.0 * (values[1] - values[0]) / h0;

    let h1 = knots[n - 1] - knots[n - 2];
    sub[n - 2] = h1;
    diag[n - 1] = 2.0 * h1;
    rhs[n - 1] = -6.0 * (values[n - 1] - values[n - 2]) / h1;

    TridiagonalSystem::new(sub, diag, sup, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system_returns_rhs() {
        let sys = TridiagonalSystem::new(
            vec![0.0, 0.0],
            vec![1.0, 1.0, 1.0],
            vec![0.0, 0.0],
            vec![3.0, -2.0, 0.5],
        )
        .unwrap();
        assert_eq!(dense_tridiag_solve(&sys).unwrap(), vec![3.0, -2.0, 0.5]);
        assert_eq!(thomas_solve(&sys), vec![3.0, -2.0, 0.5]);
    }

    #[test]
    fn straight_line_system_solves_to_zero() {
        let curve =
            ControlCurve::new(vec![0.0, 1.0, 2.0], vec![1.0, 2.0, 3.0]).unwrap();
        let sys = assemble_system(
            &curve,
            BoundaryCondition::Natural,
            BoundaryCondition::Natural,
        )
        .unwrap();
        for v in dense_tridiag_solve(&sys).unwrap() {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn rejects_bad_bands() {
        let err = TridiagonalSystem::new(vec![0.0], vec![1.0, 1.0, 1.0], vec![0.0], vec![0.0; 3])
            .unwrap_err();
        assert!(matches!(err, OracleError::BadBands { .. }));
    }

    #[test]
    fn rejects_non_dominant_rows() {
        let err = TridiagonalSystem::new(
            vec![2.0, 2.0],
            vec![1.0, 1.0, 1.0],
            vec![2.0, 2.0],
            vec![0.0; 3],
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::NotDiagonallyDominant { row: 0 }));
    }
}
