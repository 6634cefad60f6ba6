//! Dense complex matrices and the vectorization toolkit.
//!
//! Everything in the crate runs on [`ComplexMatrix`]: a small, row-major
//! dense matrix over `Complex64`. Alongside the arithmetic it provides the
//! structural operations the channel machinery is built from:
//!
//! * [`kron`] — Kronecker product,
//! * [`vec_op`] / [`mat_op`] — row-major vectorization |Z⟩⟩ and its inverse,
//! * [`reshuffle`] — the index shuffle B[(i',i),(j',j)] = A[(i',j'),(i,j)],
//! * [`partial_trace`] — trace out one tensor factor.
//!
//! Conventions fixed here and relied on everywhere else: storage is
//! row-major, |Z⟩⟩ stacks rows (so |Z⟩⟩ is literally the storage order), and
//! a bipartite index (a,b) with dimensions (d1,d2) flattens to a·d2 + b.

use crate::error::{Error, Result};

pub use num_complex::Complex64;

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which tensor factor an operation acts on, for a bipartite space
/// (first ⊗ second).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// Dense complex matrix, row-major.
///
/// Invariant: `data.len() == rows * cols`, all entries finite. Constructors
/// enforce both; arithmetic preserves them.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major data. Errors if the length is wrong or any entry
    /// is non-finite.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        // checked: rows/cols may come straight off the wire.
        let len = rows.checked_mul(cols).ok_or_else(|| {
            Error::Dimension(format!("matrix dimensions {rows}x{cols} overflow"))
        })?;
        if data.len() != len {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {len} entries, got {}",
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Invalid("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    /// Identity matrix of dimension n.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Build entrywise from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Build from nested real rows (imaginary parts zero). Panics on ragged
    /// input; intended for literals in tests and constructors.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| c64(rows[i][j], 0.0))
    }

    /// Build from nested complex rows. Panics on ragged input.
    pub fn from_complex(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major storage slice.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Matrix sum. Errors on shape mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Matrix difference. Errors on shape mismatch.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    /// Real scalar multiple.
    pub fn scale_re(&self, k: f64) -> Self {
        self.scale(c64(k, 0.0))
    }

    /// Matrix product self · other. Errors if inner dimensions disagree.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.data[i * self.cols + k];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += aik * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.data[j * self.cols + i])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose m†.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| {
            self.data[j * self.cols + i].conj()
        })
    }

    /// Trace. Panics if non-square (all call sites operate on square input).
    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self.data[i * self.cols + i]).sum()
    }

    /// Frobenius norm ‖m‖_F = sqrt(Σ |m_ij|²).
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance ‖self - other‖_F. Errors on shape mismatch.
    pub fn frobenius_distance(&self, other: &Self) -> Result<f64> {
        self.same_shape(other, "frobenius_distance")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Largest entry modulus.
    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entrywise |m - m†|; zero iff Hermitian. Panics if non-square.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square(), "hermiticity of non-square matrix");
        let n = self.rows;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Hermitian part (m + m†)/2. Panics if non-square.
    pub fn symmetrize(&self) -> Self {
        let n = self.rows;
        assert!(self.is_square(), "symmetrize of non-square matrix");
        Self::from_fn(n, n, |i, j| {
            (self.data[i * n + j] + self.data[j * n + i].conj()) * 0.5
        })
    }

    fn same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product x ⊗ y.
///
/// (x ⊗ y)[(i·ry + k), (j·cy + l)] = x[i,j] · y[k,l], so the first factor
/// owns the coarse block index — consistent with the (a,b) ↦ a·d2 + b
/// flattening used everywhere.
pub fn kron(x: &ComplexMatrix, y: &ComplexMatrix) -> ComplexMatrix {
    let (rx, cx, ry, cy) = (x.rows(), x.cols(), y.rows(), y.cols());
    let mut out = ComplexMatrix::zeros(rx * ry, cx * cy);
    for i in 0..rx {
        for j in 0..cx {
            let xij = x[(i, j)];
            if xij == Complex64::ZERO {
                continue;
            }
            for k in 0..ry {
                for l in 0..cy {
                    out[(i * ry + k, j * cy + l)] = xij * y[(k, l)];
                }
            }
        }
    }
    out
}

/// Row-major vectorization |Z⟩⟩: stack the rows of z into a column.
///
/// Because storage is row-major, |Z⟩⟩ is the storage order itself:
/// vec(Z)[i·cols + j] = Z[i,j].
pub fn vec_op(z: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix {
        rows: z.rows * z.cols,
        cols: 1,
        data: z.data.clone(),
    }
}

/// Inverse of [`vec_op`] for square targets: fold a length-n² column back
/// into an n×n matrix. Errors unless v is an n²×1 column.
pub fn mat_op(v: &ComplexMatrix, n: usize) -> Result<ComplexMatrix> {
    if v.cols != 1 || v.rows != n * n {
        return Err(Error::Dimension(format!(
            "mat expects an {}x1 column for n = {n}, got {}x{}",
            n * n,
            v.rows,
            v.cols
        )));
    }
    Ok(ComplexMatrix {
        rows: n,
        cols: n,
        data: v.data.clone(),
    })
}

/// Index reshuffle between the two superoperator orderings:
/// out[(i'·n + i), (j'·n + j)] = a[(i'·n + j'), (i·n + j)].
///
/// Applied to an A-form it yields the Choi/B-form and vice versa; it is an
/// involution. Errors unless a is n²×n².
pub fn reshuffle(a: &ComplexMatrix, n: usize) -> Result<ComplexMatrix> {
    if a.rows != n * n || a.cols != n * n {
        return Err(Error::Dimension(format!(
            "reshuffle expects {}x{} for n = {n}, got {}x{}",
            n * n,
            n * n,
            a.rows,
            a.cols
        )));
    }
    let mut out = ComplexMatrix::zeros(n * n, n * n);
    for ip in 0..n {
        for i in 0..n {
            for jp in 0..n {
                for j in 0..n {
                    out[(ip * n + i, jp * n + j)] = a[(ip * n + jp, i * n + j)];
                }
            }
        }
    }
    Ok(out)
}

/// Partial trace over one factor of a (d1·d2)×(d1·d2) matrix on
/// first ⊗ second.
///
/// Tracing the first factor leaves a d2×d2 matrix, tracing the second a
/// d1×d1 one. Errors if m is not (d1·d2)-dimensional square.
pub fn partial_trace(
    m: &ComplexMatrix,
    dim_first: usize,
    dim_second: usize,
    which: Factor,
) -> Result<ComplexMatrix> {
    let d = dim_first * dim_second;
    if m.rows != d || m.cols != d {
        return Err(Error::Dimension(format!(
            "partial_trace expects {d}x{d} for dims ({dim_first},{dim_second}), got {}x{}",
            m.rows, m.cols
        )));
    }
    match which {
        Factor::First => {
            let mut out = ComplexMatrix::zeros(dim_second, dim_second);
            for b in 0..dim_second {
                for bp in 0..dim_second {
                    let mut s = Complex64::ZERO;
                    for a in 0..dim_first {
                        s += m[(a * dim_second + b, a * dim_second + bp)];
                    }
                    out[(b, bp)] = s;
                }
            }
            Ok(out)
        }
        Factor::Second => {
            let mut out = ComplexMatrix::zeros(dim_first, dim_first);
            for a in 0..dim_first {
                for ap in 0..dim_first {
                    let mut s = Complex64::ZERO;
                    for b in 0..dim_second {
                        s += m[(a * dim_second + b, ap * dim_second + b)];
                    }
                    out[(a, ap)] = s;
                }
            }
            Ok(out)
        }
    }
}

/// Outer product |X⟩⟩⟨⟨Y| = vec(X) · vec(Y)†.
pub fn vec_outer(x: &ComplexMatrix, y: &ComplexMatrix) -> ComplexMatrix {
    let vx = vec_op(x);
    let vy = vec_op(y);
    let n = vx.rows;
    ComplexMatrix::from_fn(n, n, |i, j| vx.data[i] * vy.data[j].conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn random_matrix(rng: &mut ChaCha12Rng, rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |_, _| {
            c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    #[test]
    fn vec_stacks_rows() {
        let z = ComplexMatrix::from_complex(&[
            &[c64(1.0, 0.0), c64(2.0, 0.5)],
            &[c64(3.0, -1.0), c64(4.0, 0.0)],
        ]);
        let v = vec_op(&z);
        assert_eq!(v.rows(), 4);
        assert_eq!(v.cols(), 1);
        assert_eq!(v.data(), z.data());
    }

    #[test]
    fn vec_mat_round_trip_is_exact() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for n in 1..=6 {
            let z = random_matrix(&mut rng, n, n);
            let back = mat_op(&vec_op(&z), n).unwrap();
            assert_eq!(z, back);
        }
    }

    #[test]
    fn mat_rejects_wrong_length() {
        let v = ComplexMatrix::zeros(5, 1);
        assert!(matches!(mat_op(&v, 2), Err(Error::Dimension(_))));
        let row = ComplexMatrix::zeros(1, 4);
        assert!(matches!(mat_op(&row, 2), Err(Error::Dimension(_))));
    }

    /// (X ⊗ Y)|Z⟩⟩ = |X Z Yᵀ⟩⟩.
    #[test]
    fn kron_vec_identity() {
        let mut rng = ChaCha12Rng::seed_from_u64(12);
        for n in [2usize, 3] {
            for _ in 0..20 {
                let x = random_matrix(&mut rng, n, n);
                let y = random_matrix(&mut rng, n, n);
                let z = random_matrix(&mut rng, n, n);
                let lhs = kron(&x, &y).matmul(&vec_op(&z)).unwrap();
                let rhs = vec_op(&x.matmul(&z).unwrap().matmul(&y.transpose()).unwrap());
                assert!(lhs.frobenius_distance(&rhs).unwrap() < 1e-12);
            }
        }
    }

    /// |Z⟩⟩ = (Z ⊗ 1)|I⟩⟩.
    #[test]
    fn vec_from_identity_column() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        for n in [2usize, 3, 4] {
            let z = random_matrix(&mut rng, n, n);
            let id = ComplexMatrix::identity(n);
            let lhs = vec_op(&z);
            let rhs = kron(&z, &id).matmul(&vec_op(&id)).unwrap();
            assert!(lhs.frobenius_distance(&rhs).unwrap() < 1e-12);
        }
    }

    /// tr over the second factor of |X⟩⟩⟨⟨Y| gives X Y†, over the first XᵀY*.
    #[test]
    fn partial_traces_of_vec_outer() {
        let mut rng = ChaCha12Rng::seed_from_u64(14);
        for n in [2usize, 3] {
            let x = random_matrix(&mut rng, n, n);
            let y = random_matrix(&mut rng, n, n);
            let outer = vec_outer(&x, &y);
            let second = partial_trace(&outer, n, n, Factor::Second).unwrap();
            let first = partial_trace(&outer, n, n, Factor::First).unwrap();
            let xy = x.matmul(&y.adjoint()).unwrap();
            let xty = x.transpose().matmul(&y.conj()).unwrap();
            assert!(second.frobenius_distance(&xy).unwrap() < 1e-12);
            assert!(first.frobenius_distance(&xty).unwrap() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_of_kron_factors() {
        let mut rng = ChaCha12Rng::seed_from_u64(15);
        let x = random_matrix(&mut rng, 2, 2);
        let y = random_matrix(&mut rng, 3, 3);
        let m = kron(&x, &y);
        let over_second = partial_trace(&m, 2, 3, Factor::Second).unwrap();
        let over_first = partial_trace(&m, 2, 3, Factor::First).unwrap();
        assert!(
            over_second
                .frobenius_distance(&x.scale(y.trace()))
                .unwrap()
                < 1e-12
        );
        assert!(over_first.frobenius_distance(&y.scale(x.trace())).unwrap() < 1e-12);
    }

    #[test]
    fn kron_of_paulis() {
        let sx = ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let k = kron(&sx, &sx);
        let expected = ComplexMatrix::from_real(&[
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(k, expected);
    }

    /// kron(D, D*) carries the |D_ij|²-pattern in its corners; pin a few
    /// entries to fix the layout once and for all.
    #[test]
    fn kron_with_conjugate_layout() {
        let a = c64(1.0, 2.0);
        let b = c64(-0.5, 0.25);
        let c = c64(0.0, -1.0);
        let d = c64(2.0, 1.0);
        let m = ComplexMatrix::from_complex(&[&[a, b], &[c, d]]);
        let k = kron(&m, &m.conj());
        assert_eq!(k[(0, 0)], a * a.conj());
        assert_eq!(k[(0, 1)], a * b.conj());
        assert_eq!(k[(0, 3)], b * b.conj());
        assert_eq!(k[(2, 3)], d * b.conj());
        assert_eq!(k[(3, 0)], c * c.conj());
        assert_eq!(k[(3, 3)], d * d.conj());
    }

    #[test]
    fn reshuffle_is_involution() {
        let mut rng = ChaCha12Rng::seed_from_u64(16);
        for n in [2usize, 3] {
            let a = random_matrix(&mut rng, n * n, n * n);
            let twice = reshuffle(&reshuffle(&a, n).unwrap(), n).unwrap();
            assert_eq!(a, twice);
        }
    }

    /// The A-form of ρ ↦ XρY† is X ⊗ Y*; its reshuffle must be exactly the
    /// rank-one |X⟩⟩⟨⟨Y| — bit-for-bit, both being products of the same pairs.
    #[test]
    fn reshuffle_of_kron_is_vec_outer() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for n in [2usize, 3] {
            let x = random_matrix(&mut rng, n, n);
            let y = random_matrix(&mut rng, n, n);
            let a = kron(&x, &y.conj());
            let b = reshuffle(&a, n).unwrap();
            assert_eq!(b, vec_outer(&x, &y));
        }
    }

    /// |I⟩⟩⟨⟨I| at n = 2: trace 2, rank-one projector onto the maximally
    /// entangled column, partial traces both identity.
    #[test]
    fn identity_vec_outer_is_twice_bell_projector() {
        let id = ComplexMatrix::identity(2);
        let outer = vec_outer(&id, &id);
        let expected = ComplexMatrix::from_real(&[
            &[1.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0, 1.0],
        ]);
        assert_eq!(outer, expected);
        assert!((outer.trace() - c64(2.0, 0.0)).norm() < 1e-15);
        for which in [Factor::First, Factor::Second] {
            let t = partial_trace(&outer, 2, 2, which).unwrap();
            assert!(t.frobenius_distance(&id).unwrap() < 1e-15);
        }
    }

    #[test]
    fn arithmetic_round_trip() {
        let mut rng = ChaCha12Rng::seed_from_u64(18);
        let a = random_matrix(&mut rng, 3, 3);
        let b = random_matrix(&mut rng, 3, 3);
        let s = a.add(&b).unwrap().sub(&b).unwrap();
        assert!(s.frobenius_distance(&a).unwrap() < 1e-14);
        let double = a.scale_re(2.0);
        assert!(double.frobenius_distance(&a.add(&a).unwrap()).unwrap() < 1e-15);
        let adj = a.adjoint().adjoint();
        assert_eq!(adj, a);
    }

    #[test]
    fn dimension_errors() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 2);
        assert!(matches!(a.matmul(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.add(&b), Err(Error::Dimension(_))));
        assert!(matches!(
            reshuffle(&ComplexMatrix::zeros(3, 4), 2),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            partial_trace(&ComplexMatrix::zeros(5, 5), 2, 2, Factor::First),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn rejects_non_finite_entries() {
        let bad = ComplexMatrix::new(1, 2, vec![c64(1.0, 0.0), c64(f64::NAN, 0.0)]);
        assert!(matches!(bad, Err(Error::Invalid(_))));
        let inf = ComplexMatrix::new(1, 1, vec![c64(f64::INFINITY, 0.0)]);
        assert!(matches!(inf, Err(Error::Invalid(_))));
    }

    #[test]
    fn hermiticity_deviation_detects_asymmetry() {
        let h = ComplexMatrix::from_complex(&[
            &[c64(1.0, 0.0), c64(0.0, 1.0)],
            &[c64(0.0, -1.0), c64(2.0, 0.0)],
        ]);
        assert!(h.hermiticity_deviation() < 1e-15);
        let mut broken = h;
        broken[(0, 1)] = c64(0.0, 1.0) + c64(1e-3, 0.0);
        assert!((broken.hermiticity_deviation() - 1e-3).abs() < 1e-12);
        assert!(broken.symmetrize().hermiticity_deviation() < 1e-15);
    }

    proptest! {
        #[test]
        fn prop_vec_mat_round_trip(n in 1usize..=6, seed in any::<u64>()) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let z = random_matrix(&mut rng, n, n);
            prop_assert_eq!(mat_op(&vec_op(&z), n).unwrap(), z);
        }

        #[test]
        fn prop_reshuffle_involution(n in 1usize..=4, seed in any::<u64>()) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, n * n, n * n);
            prop_assert_eq!(reshuffle(&reshuffle(&a, n).unwrap(), n).unwrap(), a);
        }

        #[test]
        fn prop_kron_mixed_product(seed in any::<u64>()) {
            // (A⊗B)(C⊗D) = AC ⊗ BD
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, 2, 2);
            let b = random_matrix(&mut rng, 3, 3);
            let c = random_matrix(&mut rng, 2, 2);
            let d = random_matrix(&mut rng, 3, 3);
            let lhs = kron(&a, &b).matmul(&kron(&c, &d)).unwrap();
            let rhs = kron(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
            prop_assert!(lhs.frobenius_distance(&rhs).unwrap() < 1e-11);
        }
    }
}
