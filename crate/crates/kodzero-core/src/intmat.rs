//! Exact integer matrix algebra.
//!
//! Provides arbitrary-precision integer matrices ([`IntMat`]), Smith normal
//! form with recorded unimodular transforms ([`snf`]), determinants, and the
//! small amount of rank-2 lattice machinery the rest of the crate needs:
//! column-style Hermite bases for sublattices of `Z^2`
//! ([`hermite_basis_2d`]), canonical coset representatives
//! ([`canonical_rep_2d`]), and a Smith-form-based membership test
//! ([`lattice_contains_2d`]).
//!
//! Conventions:
//!
//! * Matrices are stored row-major; `m.get(i, j)` is the entry in row `i`,
//!   column `j` (0-indexed).
//! * [`snf`] returns `(d, u, v)` with `u * m * v = d`, `u` and `v` unimodular
//!   (determinant `+-1`), `d` diagonal with non-negative entries and each
//!   diagonal entry dividing the next.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    /// The `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from machine-integer rows. All rows must have equal
    /// length; a matrix with zero rows has zero columns.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry in row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Overwrites the entry in row `i`, column `j`.
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Determinant of a square matrix, by cofactor expansion (the matrices in
    /// this crate are tiny, so exactness beats asymptotics).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        match n {
            0 => BigInt::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = BigInt::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, j).det();
                    let term = a * minor;
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
        }
    }

    /// The submatrix obtained by deleting row `i` and column `j`.
    fn minor(&self, i: usize, j: usize) -> IntMat {
        let mut out = IntMat::zero(self.rows - 1, self.cols - 1);
        let mut r = 0;
        for ri in 0..self.rows {
            if ri == i {
                continue;
            }
            let mut c = 0;
            for cj in 0..self.cols {
                if cj == j {
                    continue;
                }
                out.set(r, c, self.get(ri, cj).clone());
                c += 1;
            }
            r += 1;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= q * row[source]
    fn row_sub(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * self.get(source, j);
            let val = self.get(target, j) - delta;
            self.set(target, j, val);
        }
    }

    /// col[target] -= q * col[source]
    fn col_sub(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = q * self.get(i, source);
            let val = self.get(i, target) - delta;
            self.set(i, target, val);
        }
    }

    /// row[target] += row[source]
    fn row_add(&mut self, target: usize, source: usize) {
        for j in 0..self.cols {
            let val = self.get(target, j) + self.get(source, j);
            self.set(target, j, val);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let val = -self.get(i, j);
            self.set(i, j, val);
        }
    }
}

/// Smith normal form data: `u * (input) * v = d` with `u`, `v` unimodular and
/// `d` diagonal, entries non-negative, each dividing the next.
#[derive(Clone, Debug)]
pub struct Snf {
    /// The diagonal form.
    pub d: IntMat,
    /// Left transform (row operations), determinant `+-1`.
    pub u: IntMat,
    /// Right transform (column operations), determinant `+-1`.
    pub v: IntMat,
}

impl Snf {
    /// The diagonal entries `d_1, ..., d_min(rows,cols)` (including zeros).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries (the rank of the input).
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form of `m`, with the unimodular transforms that realize it.
///
/// The algorithm is the classical one: move a minimal nonzero entry to the
/// pivot, clear its row and column by Euclidean steps, repair divisibility of
/// the remaining block by folding offending rows into the pivot row, then
/// recurse on the submatrix; finally all diagonal entries are made
/// non-negative. Every step is mirrored in `u` or `v`, so
/// `u * m * v = d` holds exactly on return (and is checked in debug builds).
pub fn snf(m: &IntMat) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        'pivot: loop {
            // Locate a nonzero entry of minimal absolute value in a[t.., t..].
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a.get(i, j).is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if a.get(i, j).abs() < a.get(bi, bj).abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // remaining block is zero
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Euclidean reduction of column t and row t against the pivot.
            for i in (t + 1)..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t) / a.get(t, t);
                    a.row_sub(i, t, &q);
                    u.row_sub(i, t, &q);
                }
            }
            for j in (t + 1)..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j) / a.get(t, t);
                    a.col_sub(j, t, &q);
                    v.col_sub(j, t, &q);
                }
            }
            let col_clear = ((t + 1)..rows).all(|i| a.get(i, t).is_zero());
            let row_clear = ((t + 1)..cols).all(|j| a.get(t, j).is_zero());
            if !(col_clear && row_clear) {
                // Remainders survive; the next pass picks a strictly smaller
                // pivot, so this loop terminates.
                continue 'pivot;
            }
            // Divisibility repair: the pivot must divide the whole block.
            for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !(a.get(i, j) % a.get(t, t)).is_zero() {
                        a.row_add(t, i);
                        u.row_add(t, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if a.get(t, t).is_zero() {
            break; // all remaining diagonal entries are zero
        }
    }

    for t in 0..n {
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    debug_assert_eq!(u.mul(m).mul(&v), a, "snf transform identity violated");
    debug_assert!(u.det().abs().is_one(), "snf left transform not unimodular");
    debug_assert!(v.det().abs().is_one(), "snf right transform not unimodular");
    debug_assert!(
        (0..n.saturating_sub(1)).all(|i| {
            let cur = a.get(i, i);
            let next = a.get(i + 1, i + 1);
            cur.is_zero() && next.is_zero() || !cur.is_zero() && (next % cur).is_zero()
        }),
        "snf divisibility chain violated"
    );

    Snf { d: a, u, v }
}

/// Extended gcd on machine integers: returns `(g, x, y)` with
/// `g = gcd(a, b) >= 0` and `x*a + y*b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let eg = a.extended_gcd(&b);
    let (mut g, mut x, mut y) = (eg.gcd, eg.x, eg.y);
    if g < 0 {
        g = -g;
        x = -x;
        y = -y;
    }
    debug_assert_eq!(x * a + y * b, g);
    (g, x, y)
}

/// Column-style Hermite basis of the sublattice of `Z^2` spanned by `gens`.
///
/// The result `(g, b, c)` encodes the basis `{(g, b), (0, c)}` with `g >= 0`,
/// `c >= 0`, and `0 <= b < c` whenever both `g > 0` and `c > 0`. Lattices of
/// rank one are encoded with `c = 0` (basis `(g, b)`, `g > 0`) or `g = 0`
/// (basis `(0, c)`); the zero lattice is `(0, 0, 0)`.
pub fn hermite_basis_2d(gens: &[(i64, i64)]) -> (i64, i64, i64) {
    let mut first: Option<(i64, i64)> = None; // (g, b) with g > 0
    let mut c: i64 = 0; // gcd of second coordinates of pure (0, *) vectors
    for &(p, q) in gens {
        if p == 0 {
            if q != 0 {
                c = c.gcd(&q);
            }
            continue;
        }
        match first {
            None => {
                first = Some(if p < 0 { (-p, -q) } else { (p, q) });
            }
            Some((g, b)) => {
                // span{(g,b),(p,q)} = span{(d,nb)} + residual (0,*) vectors
                let (d, s, t) = ext_gcd(g, p);
                let nb = s * b + t * q;
                let r1 = b - (g / d) * nb;
                let r2 = q - (p / d) * nb;
                c = c.gcd(&r1).gcd(&r2);
                first = Some((d, nb));
            }
        }
    }
    match first {
        None => (0, 0, c),
        Some((g, b)) => {
            let b = if c > 0 { b.rem_euclid(c) } else { b };
            (g, b, c)
        }
    }
}

/// Canonical representative of the coset `v + L`, where `L` is given by
/// Hermite data from [`hermite_basis_2d`].
///
/// In the full-rank case this is the unique representative with
/// `0 <= x < g` and `0 <= y < c` (first coordinate reduced first); the
/// degenerate ranks reduce whatever coordinate is reducible.
pub fn canonical_rep_2d(v: (i64, i64), basis: (i64, i64, i64)) -> (i64, i64) {
    let (g, b, c) = basis;
    let (mut x, mut y) = v;
    if g > 0 {
        let t = x.div_euclid(g);
        x -= t * g;
        y -= t * b;
    }
    if c > 0 {
        y = y.rem_euclid(c);
    }
    (x, y)
}

/// Membership test `w in span_Z(gens)` inside `Z^2`, decided through the
/// Smith normal form of the generator matrix (an independent code path from
/// [`hermite_basis_2d`] / [`canonical_rep_2d`], used to cross-check them).
pub fn lattice_contains_2d(gens: &[(i64, i64)], w: (i64, i64)) -> bool {
    // Solve G x = w over Z: with U G V = D, solvable iff y = U w satisfies
    // d_i | y_i for i < rank and y_i = 0 beyond the rank.
    let g = IntMat::from_rows_i64(&[
        gens.iter().map(|p| p.0).collect(),
        gens.iter().map(|p| p.1).collect(),
    ]);
    let s = snf(&g);
    let wv = IntMat::from_rows_i64(&[vec![w.0], vec![w.1]]);
    let y = s.u.mul(&wv);
    let n = s.d.rows().min(s.d.cols());
    for i in 0..2usize {
        let yi = y.get(i, 0);
        if i < n && !s.d.get(i, i).is_zero() {
            if !(yi % s.d.get(i, i)).is_zero() {
                return false;
            }
        } else if !yi.is_zero() {
            return false;
        }
    }
    true
}
