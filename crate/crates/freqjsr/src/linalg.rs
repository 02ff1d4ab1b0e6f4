//! Small dense real matrices: products, induced norms, and eigenvalues.
//!
//! The eigenvalue solver reduces to upper Hessenberg form by Householder
//! reflections and then runs the implicit double-shift QR iteration, after
//! the Algol procedures orthes/hqr2 (Martin and Wilkinson, Handbook for
//! Automatic Computation, vol. II) as organized in EISPACK and JAMA, with
//! the Schur-vector accumulation dropped since only eigenvalues are needed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

/// Row-major dense square matrix of `f64`.
#[derive(Clone, PartialEq)]
pub struct Mat {
    n: usize,
    a: Vec<f64>,
}

/// Error from [`Mat`] construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatError {
    Empty,
    RaggedRows { row: usize, len: usize, expected: usize },
    WrongLength { len: usize, dim: usize },
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::Empty => write!(f, "matrix must have dimension >= 1"),
            MatError::RaggedRows { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            MatError::WrongLength { len, dim } => {
                write!(f, "flat data has {len} entries, not {dim}x{dim}")
            }
        }
    }
}

impl core::error::Error for MatError {}

/// The QR iteration failed to converge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoConvergence;

impl fmt::Display for NoConvergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eigenvalue iteration did not converge")
    }
}

impl core::error::Error for NoConvergence {}

impl Mat {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, MatError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatError::Empty);
        }
        let mut a = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatError::RaggedRows { row: i, len: row.len(), expected: n });
            }
            a.extend_from_slice(row);
        }
        Ok(Mat { n, a })
    }

    /// Builds from a row-major flat slice of `n * n` entries.
    pub fn from_flat(n: usize, data: Vec<f64>) -> Result<Self, MatError> {
        if n == 0 {
            return Err(MatError::Empty);
        }
        if data.len() != n * n {
            return Err(MatError::WrongLength { len: data.len(), dim: n });
        }
        Ok(Mat { n, a: data })
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 1.0;
        }
        Mat { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    pub fn is_finite(&self) -> bool {
        self.a.iter().all(|x| x.is_finite())
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * rhs.a[k * n + j];
                }
            }
        }
        Mat { n, a: out }
    }

    pub fn scale_mut(&mut self, c: f64) {
        for x in &mut self.a {
            *x *= c;
        }
    }

    pub fn scaled(&self, c: f64) -> Mat {
        let mut m = self.clone();
        m.scale_mut(c);
        m
    }

    /// Induced infinity norm: maximum absolute row sum.
    pub fn row_sum_norm(&self) -> f64 {
        let n = self.n;
        let mut best = 0.0f64;
        for i in 0..n {
            let sum: f64 = self.a[i * n..(i + 1) * n].iter().map(|x| x.abs()).sum();
            best = best.max(sum);
        }
        best
    }

    /// Induced 1-norm: maximum absolute column sum.
    pub fn col_sum_norm(&self) -> f64 {
        let n = self.n;
        let mut best = 0.0f64;
        for j in 0..n {
            let sum: f64 = (0..n).map(|i| self.a[i * n + j].abs()).sum();
            best = best.max(sum);
        }
        best
    }

    /// `self^T * self`, symmetric positive semi-definite.
    pub fn gram(&self) -> Mat {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let mut sum = 0.0;
                for k in 0..n {
                    sum += self.a[k * n + i] * self.a[k * n + j];
                }
                out[i * n + j] = sum;
                out[j * n + i] = sum;
            }
        }
        Mat { n, a: out }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.n, self.n)?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// All eigenvalues as `(re, im)` pairs, in deflation order.
pub fn eigenvalues(m: &Mat) -> Result<Vec<(f64, f64)>, NoConvergence> {
    let n = m.dim();
    if n == 1 {
        return Ok(vec![(m.get(0, 0), 0.0)]);
    }
    let mut h = m.a.clone();
    hessenberg(&mut h, n);
    hqr_eigenvalues(&mut h, n)
}

/// Largest eigenvalue modulus. Dimensions 1 and 2 use the closed form from
/// the characteristic polynomial; larger matrices go through the QR solver.
pub fn spectral_radius_raw(m: &Mat) -> Result<f64, NoConvergence> {
    match m.dim() {
        1 => Ok(m.get(0, 0).abs()),
        2 => Ok(spectral_radius_2x2(m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1))),
        _ => {
            let eigs = eigenvalues(m)?;
            Ok(eigs.into_iter().map(|(re, im)| re.hypot(im)).fold(0.0, f64::max))
        }
    }
}

/// Roots of `t^2 - (a+d) t + (ad - bc)`: real pair when the discriminant is
/// non-negative, otherwise a conjugate pair of modulus `sqrt(det)`.
pub(crate) fn spectral_radius_2x2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let root = disc.sqrt();
        let l1 = (tr + root) / 2.0;
        let l2 = (tr - root) / 2.0;
        l1.abs().max(l2.abs())
    } else {
        det.sqrt()
    }
}

/// Largest singular value: square root of the dominant eigenvalue of the
/// Gram matrix.
pub fn spectral_norm_raw(m: &Mat) -> Result<f64, NoConvergence> {
    let g = m.gram();
    let lambda_max = match g.dim() {
        1 => g.get(0, 0),
        2 => {
            // Symmetric 2x2: eigenvalues are real.
            let (a, b, d) = (g.get(0, 0), g.get(0, 1), g.get(1, 1));
            let mid = (a + d) / 2.0;
            let rad = ((a - d) / 2.0).hypot(b);
            mid + rad
        }
        _ => eigenvalues(&g)?
            .into_iter()
            .map(|(re, _)| re)
            .fold(0.0, f64::max),
    };
    Ok(lambda_max.max(0.0).sqrt())
}

/// Householder reduction to upper Hessenberg form (Algol orthes), in place on
/// the flat row-major buffer. The orthogonal factor is not accumulated.
fn hessenberg(h: &mut [f64], n: usize) {
    if n < 3 {
        return;
    }
    let low = 0usize;
    let high = n - 1;
    let mut ort = vec![0.0f64; n];
    for m in (low + 1)..=(high - 1) {
        let mut scale = 0.0;
        for i in m..=high {
            scale += h[i * n + m - 1].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hh = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[i * n + m - 1] / scale;
            hh += ort[i] * ort[i];
        }
        let mut g = hh.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hh -= ort[m] * g;
        ort[m] -= g;

        // Similarity transformation H <- (I - u u^T / hh) H (I - u u^T / hh).
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[i * n + j];
            }
            f /= hh;
            for i in m..=high {
                h[i * n + j] -= f * ort[i];
            }
        }
        for i in 0..=high {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * h[i * n + j];
            }
            f /= hh;
            for j in m..=high {
                h[i * n + j] -= f * ort[j];
            }
        }
        h[m * n + m - 1] = scale * g;
        // Entries below the subdiagonal of this column are now annihilated.
        for i in (m + 1)..=high {
            h[i * n + m - 1] = 0.0;
        }
    }
}

/// Implicit double-shift QR iteration on an upper Hessenberg matrix (Algol
/// hqr2 without Schur-vector bookkeeping). Returns `(re, im)` pairs.
fn hqr_eigenvalues(hm: &mut [f64], nn: usize) -> Result<Vec<(f64, f64)>, NoConvergence> {
    let idx = |i: isize, j: isize| -> usize { (i as usize) * nn + (j as usize) };
    let mut d = vec![0.0f64; nn];
    let mut e = vec![0.0f64; nn];

    let mut n: isize = nn as isize - 1;
    let low: isize = 0;
    let eps = 2.0f64.powi(-52);
    let mut exshift = 0.0;
    // The QR step consumes the shift vector (p, q, r) prepared by the
    // lookahead loop, so those three must survive across iterations.
    let (mut p, mut q, mut r) = (0.0f64, 0.0f64, 0.0f64);
    let (mut s, mut z);
    let (mut w, mut x, mut y);

    let mut norm = 0.0;
    for i in 0..nn as isize {
        for j in (i - 1).max(0)..nn as isize {
            norm += hm[idx(i, j)].abs();
        }
    }
    // A Hessenberg matrix with zero norm is the zero matrix.
    if norm == 0.0 {
        return Ok(d.into_iter().zip(e).collect());
    }

    let mut iter = 0usize;
    let mut total_iter = 0usize;
    while n >= low {
        // Look for a single small sub-diagonal element.
        let mut l = n;
        while l > low {
            s = hm[idx(l - 1, l - 1)].abs() + hm[idx(l, l)].abs();
            if s == 0.0 {
                s = norm;
            }
            if hm[idx(l, l - 1)].abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // One root found.
            d[n as usize] = hm[idx(n, n)] + exshift;
            e[n as usize] = 0.0;
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // Two roots found.
            w = hm[idx(n, n - 1)] * hm[idx(n - 1, n)];
            p = (hm[idx(n - 1, n - 1)] - hm[idx(n, n)]) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            x = hm[idx(n, n)] + exshift;
            if q >= 0.0 {
                // Real pair.
                z = if p >= 0.0 { p + z } else { p - z };
                d[(n - 1) as usize] = x + z;
                d[n as usize] = if z != 0.0 { x - w / z } else { x + z };
                e[(n - 1) as usize] = 0.0;
                e[n as usize] = 0.0;
            } else {
                // Complex conjugate pair.
                d[(n - 1) as usize] = x + p;
                d[n as usize] = x + p;
                e[(n - 1) as usize] = z;
                e[n as usize] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // No convergence yet: form the shift.
            x = hm[idx(n, n)];
            y = 0.0;
            w = 0.0;
            if l < n {
                y = hm[idx(n - 1, n - 1)];
                w = hm[idx(n, n - 1)] * hm[idx(n - 1, n)];
            }

            if iter == 10 {
                // Exceptional shift.
                exshift += x;
                for i in low..=n {
                    hm[idx(i, i)] -= x;
                }
                s = hm[idx(n, n - 1)].abs() + hm[idx(n - 1, n - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            if iter == 30 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in low..=n {
                        hm[idx(i, i)] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }

            iter += 1;
            total_iter += 1;
            if total_iter > 50 * nn * nn + 100 {
                return Err(NoConvergence);
            }

            // Look for two consecutive small sub-diagonal elements.
            let mut m = n - 2;
            while m >= l {
                z = hm[idx(m, m)];
                r = x - z;
                s = y - z;
                p = (r * s - w) / hm[idx(m + 1, m)] + hm[idx(m, m + 1)];
                q = hm[idx(m + 1, m + 1)] - z - r - s;
                r = hm[idx(m + 2, m + 1)];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if hm[idx(m, m - 1)].abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (hm[idx(m - 1, m - 1)].abs()
                                + z.abs()
                                + hm[idx(m + 1, m + 1)].abs()))
                {
                    break;
                }
                m -= 1;
            }

            for i in (m + 2)..=n {
                hm[idx(i, i - 2)] = 0.0;
                if i > m + 2 {
                    hm[idx(i, i - 3)] = 0.0;
                }
            }

            // Double QR step on rows l..=n, columns m..=n, entered with the
            // shift vector (p, q, r) from the lookahead above.
            for k in m..=(n - 1) {
                let notlast = k != n - 1;
                if k != m {
                    p = hm[idx(k, k - 1)];
                    q = hm[idx(k + 1, k - 1)];
                    r = if notlast { hm[idx(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                } else {
                    x = 0.0;
                }

                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s != 0.0 {
                    if k != m {
                        hm[idx(k, k - 1)] = -s * x;
                    } else if l != m {
                        hm[idx(k, k - 1)] = -hm[idx(k, k - 1)];
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;

                    // Row modification.
                    for j in k..nn as isize {
                        p = hm[idx(k, j)] + q * hm[idx(k + 1, j)];
                        if notlast {
                            p += r * hm[idx(k + 2, j)];
                            hm[idx(k + 2, j)] -= p * z;
                        }
                        hm[idx(k, j)] -= p * x;
                        hm[idx(k + 1, j)] -= p * y;
                    }

                    // Column modification.
                    for i in 0..=n.min(k + 3) {
                        p = x * hm[idx(i, k)] + y * hm[idx(i, k + 1)];
                        if notlast {
                            p += z * hm[idx(i, k + 2)];
                            hm[idx(i, k + 2)] -= p * r;
                        }
                        hm[idx(i, k)] -= p;
                        hm[idx(i, k + 1)] -= p * q;
                    }
                }
            }
        }
    }

    Ok(d.into_iter().zip(e).collect())
}
