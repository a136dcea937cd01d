//! Fixed-size helpers for symmetric 4×4 matrices.
//!
//! Everything is cofactor-based: branch-free, no pivoting, reproducible.

pub type Mat4 = [[f64; 4]; 4];

/// Determinant of the top-left k×k block, by cofactor expansion.
pub fn leading_minor(m: &Mat4, k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        4 => det4(m),
        _ => panic!("leading_minor: k out of range"),
    }
}

fn minor3(m: &Mat4, skip_row: usize, skip_col: usize) -> f64 {
    let mut sub = [[0.0; 3]; 3];
    let mut r = 0;
    for i in 0..4 {
        if i == skip_row {
            continue;
        }
        let mut c = 0;
        for j in 0..4 {
            if j == skip_col {
                continue;
            }
            sub[r][c] = m[i][j];
            c += 1;
        }
        r += 1;
    }
    sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
        - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
        + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
}

pub fn det4(m: &Mat4) -> f64 {
    let mut det = 0.0;
    for j in 0..4 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m[0][j] * minor3(m, 0, j);
    }
    det
}

/// Inverse by the adjugate; caller guarantees det is away from zero.
pub fn inverse4(m: &Mat4, det: f64) -> Mat4 {
    let mut inv = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            // adjugate transposes the cofactor matrix
            inv[j][i] = sign * minor3(m, i, j) / det;
        }
    }
    inv
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn transpose(a: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn max_abs(m: &Mat4) -> f64 {
    let mut mx = 0.0f64;
    for row in m {
        for &v in row {
            mx = mx.max(v.abs());
        }
    }
    mx
}

/// Eigenvalues of a symmetric 4×4 matrix by cyclic Jacobi rotations.
///
/// Returns the eigenvalues in descending order. Convergence is quadratic;
/// 30 sweeps is far more than four dimensions ever need.
pub fn sym_eigenvalues(m: &Mat4) -> [f64; 4] {
    let mut a = *m;
    for _sweep in 0..30 {
        let mut off = 0.0f64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() < 1e-15 * (1.0 + max_abs(&a)) {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let mut rot = a;
                for k in 0..4 {
                    rot[p][k] = c * a[p][k] - s * a[q][k];
                    rot[q][k] = s * a[p][k] + c * a[q][k];
                }
                let tmp = rot;
                for k in 0..4 {
                    rot[k][p] = c * tmp[k][p] - s * tmp[k][q];
                    rot[k][q] = s * tmp[k][p] + c * tmp[k][q];
                }
                a = rot;
            }
        }
    }
    let mut eig = [a[0][0], a[1][1], a[2][2], a[3][3]];
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}
