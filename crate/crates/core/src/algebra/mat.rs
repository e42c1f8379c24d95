use std::fmt;

use super::field::{FieldDesc, Fq};
use super::AlgebraError;
use crate::kernel::Concrete;

const MAX_DIM: usize = 4;

/// A square matrix of dimension 1..=4 over a [`FieldDesc`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldDesc,
    dim: u8,
    entries: [Fq; MAX_DIM * MAX_DIM],
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let rows: Vec<&[Fq]> = (0..d).map(|r| &self.entries[r * d..(r + 1) * d]).collect();
        write!(f, "Mat{rows:?}")
    }
}

impl Mat {
    pub fn zero(field: FieldDesc, dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} unsupported");
        Mat {
            field,
            dim: dim as u8,
            entries: [0; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(field: FieldDesc, dim: usize) -> Self {
        Mat::scalar(field, dim, 1)
    }

    pub fn scalar(field: FieldDesc, dim: usize, s: Fq) -> Self {
        let mut m = Mat::zero(field, dim);
        for i in 0..dim {
            m.set(i, i, s);
        }
        m
    }

    /// Builds from integer rows, reducing each entry into the prime field.
    pub fn from_rows(field: FieldDesc, rows: &[&[i64]]) -> Self {
        let mut m = Mat::zero(field, rows.len());
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len(), "matrix must be square");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.from_int(v));
            }
        }
        m
    }

    /// Builds from already-encoded field elements, row-major.
    pub fn from_elements(field: FieldDesc, dim: usize, els: &[Fq]) -> Self {
        assert_eq!(els.len(), dim * dim);
        let mut m = Mat::zero(field, dim);
        m.entries[..dim * dim].copy_from_slice(els);
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.entries[r * self.dim() + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        let d = self.dim();
        self.entries[r * d + c] = v;
    }

    pub fn entries(&self) -> &[Fq] {
        &self.entries[..self.dim() * self.dim()]
    }

    fn check_compatible(&self, other: &Mat) -> Result<(), AlgebraError> {
        if self.field != other.field || self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Mat) -> Mat {
        let f = self.field;
        let d = self.dim();
        let mut out = Mat::zero(f, d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = 0;
                for k in 0..d {
                    acc = f.add(acc, f.mul(self.get(r, k), other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn scale(&self, s: Fq) -> Mat {
        let mut out = *self;
        let n = self.dim() * self.dim();
        for v in &mut out.entries[..n] {
            *v = self.field.mul(*v, s);
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        let mut out = *self;
        let n = self.dim() * self.dim();
        for i in 0..n {
            out.entries[i] = self.field.add(self.entries[i], other.entries[i]);
        }
        out
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Fq {
        let f = self.field;
        let d = self.dim();
        let mut a = *self;
        let mut det: Fq = 1;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a.get(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                for c in 0..d {
                    let t = a.get(col, c);
                    a.set(col, c, a.get(piv, c));
                    a.set(piv, c, t);
                }
                det = f.neg(det);
            }
            let pv = a.get(col, col);
            det = f.mul(det, pv);
            let pinv = f.inv(pv).unwrap();
            for r in col + 1..d {
                let factor = f.mul(a.get(r, col), pinv);
                if factor != 0 {
                    for c in col..d {
                        let v = f.sub(a.get(r, c), f.mul(factor, a.get(col, c)));
                        a.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Mat, AlgebraError> {
        let f = self.field;
        let d = self.dim();
        let mut a = *self;
        let mut inv = Mat::identity(f, d);
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| a.get(r, col) != 0)
                .ok_or(AlgebraError::Singular)?;
            for c in 0..d {
                let (x, y) = (a.get(col, c), a.get(piv, c));
                a.set(col, c, y);
                a.set(piv, c, x);
                let (x, y) = (inv.get(col, c), inv.get(piv, c));
                inv.set(col, c, y);
                inv.set(piv, c, x);
            }
            let pinv = f.inv(a.get(col, col)).unwrap();
            for c in 0..d {
                a.set(col, c, f.mul(a.get(col, c), pinv));
                inv.set(col, c, f.mul(inv.get(col, c), pinv));
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor != 0 {
                    for c in 0..d {
                        a.set(r, c, f.sub(a.get(r, c), f.mul(factor, a.get(col, c))));
                        inv.set(r, c, f.sub(inv.get(r, c), f.mul(factor, inv.get(col, c))));
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Kronecker product: `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, other: &Mat) -> Result<Mat, AlgebraError> {
        let (da, db) = (self.dim(), other.dim());
        if self.field != other.field || da * db > MAX_DIM {
            return Err(AlgebraError::DimensionMismatch);
        }
        let f = self.field;
        let mut out = Mat::zero(f, da * db);
        for i in 0..da {
            for j in 0..da {
                for k in 0..db {
                    for l in 0..db {
                        out.set(
                            i * db + k,
                            j * db + l,
                            f.mul(self.get(i, j), other.get(k, l)),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_scalar(&self) -> bool {
        let d = self.dim();
        let s = self.get(0, 0);
        (0..d).all(|r| (0..d).all(|c| self.get(r, c) == if r == c { s } else { 0 }))
    }

    /// Canonical key: field descriptor, dimension, then entries.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(3 + self.dim() * self.dim());
        key.push(self.field.characteristic());
        key.push(self.field.degree());
        key.push(self.dim);
        key.extend_from_slice(self.entries());
        key
    }
}

impl Concrete for Mat {
    fn compose(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }

    fn inverse(&self) -> Self {
        Mat::inverse(self).expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        Mat::identity(self.field, self.dim())
    }

    fn key(&self) -> Vec<u8> {
        self.canonical_key()
    }

    fn same_carrier(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim
    }

    fn well_formed(&self) -> bool {
        let q = self.field.size();
        self.entries().iter().all(|&v| (v as usize) < q) && self.det() != 0
    }
}

/// `SL_2` or `GL_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    SL,
    GL,
}

/// Generators of `SL_2(F_q)` or `GL_2(F_q)` for `q ∈ {3, 5, 9}`:
/// elementary transvections over a basis of `F_q / F_p`, plus
/// `diag(w, 1)` with `w` primitive for `GL`.
pub fn classical_generators(kind: ClassicalKind, q: usize) -> Result<Vec<Mat>, AlgebraError> {
    if ![3, 5, 9].contains(&q) {
        return Err(AlgebraError::UnsupportedField { p: q as u8, d: 1 });
    }
    let f = FieldDesc::of_size(q)?;
    let mut basis = vec![1 as Fq];
    if f.degree() == 2 {
        basis.push(f.generator_x());
    }
    let mut gens = Vec::new();
    for &b in &basis {
        gens.push(Mat::from_elements(f, 2, &[1, b, 0, 1]));
        gens.push(Mat::from_elements(f, 2, &[1, 0, b, 1]));
    }
    if kind == ClassicalKind::GL {
        gens.push(Mat::from_elements(f, 2, &[f.primitive_element(), 0, 0, 1]));
    }
    Ok(gens)
}

/// Result of [`solve_conjugation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationSolution {
    pub t: Mat,
    /// Dimension of the full solution space of `T X_i = Y_i T`.
    pub solution_dim: usize,
}

/// Bound on nullspace vectors tried when looking for an invertible solution.
const NULLSPACE_SEARCH_LIMIT: usize = 100_000;

/// Finds an invertible `T` with `T X_i = Y_i T` for all `i` (equivalently
/// `T X_i T^-1 = Y_i`). The returned `T` is normalized so that its first
/// nonzero entry in row-major order is 1.
pub fn solve_conjugation(xs: &[Mat], ys: &[Mat]) -> Result<ConjugationSolution, AlgebraError> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(AlgebraError::DimensionMismatch);
    }
    let f = xs[0].field;
    let d = xs[0].dim();
    for m in xs.iter().chain(ys) {
        if m.field != f || m.dim() != d {
            return Err(AlgebraError::DimensionMismatch);
        }
    }
    let nvars = d * d;
    // unknown t[r][k] is variable r*d + k
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for (x, y) in xs.iter().zip(ys) {
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![0 as Fq; nvars];
                for k in 0..d {
                    // + T[r][k] X[k][c]
                    row[r * d + k] = f.add(row[r * d + k], x.get(k, c));
                    // - Y[r][k] T[k][c]
                    row[k * d + c] = f.sub(row[k * d + c], y.get(r, k));
                }
                rows.push(row);
            }
        }
    }
    let basis = nullspace(f, rows, nvars);
    if basis.is_empty() {
        return Err(AlgebraError::NoSolution);
    }
    let to_mat = |v: &[Fq]| normalize(Mat::from_elements(f, d, v));
    let dim = basis.len();
    let q = f.size();
    // enumerate projective points of the nullspace: first nonzero coefficient is 1
    let mut tried = 0usize;
    for lead in 0..dim {
        let free = dim - lead - 1;
        let count = q.checked_pow(free as u32).unwrap_or(usize::MAX);
        for idx in 0..count {
            if tried >= NULLSPACE_SEARCH_LIMIT {
                return Err(AlgebraError::NoInvertibleSolution);
            }
            tried += 1;
            let mut v = basis[lead].clone();
            let mut rest = idx;
            for b in basis.iter().skip(lead + 1) {
                let coef = (rest % q) as Fq;
                rest /= q;
                if coef != 0 {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = f.add(*vi, f.mul(coef, *bi));
                    }
                }
            }
            let t = to_mat(&v);
            if t.det() != 0 {
                return Ok(ConjugationSolution {
                    t,
                    solution_dim: dim,
                });
            }
        }
    }
    Err(AlgebraError::NoInvertibleSolution)
}

fn normalize(m: Mat) -> Mat {
    match m.entries().iter().find(|&&v| v != 0) {
        Some(&lead) => m.scale(m.field.inv(lead).unwrap()),
        None => m,
    }
}

/// Basis of `{v : A v = 0}` via reduced row echelon form.
fn nullspace(f: FieldDesc, mut rows: Vec<Vec<Fq>>, nvars: usize) -> Vec<Vec<Fq>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).unwrap();
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (v, &pv) in row.iter_mut().zip(&pivot).take(nvars) {
                    *v = f.sub(*v, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0 as Fq; nvars];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rows[i][fc]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::build_from_concrete;
    use rand::{Rng, SeedableRng};

    fn random_mat(f: FieldDesc, d: usize, rng: &mut impl Rng) -> Mat {
        let els: Vec<Fq> = (0..d * d)
            .map(|_| rng.gen_range(0..f.size()) as Fq)
            .collect();
        Mat::from_elements(f, d, &els)
    }

    #[test]
    fn arithmetic_examples() {
        for q in [3, 5, 9] {
            let f = FieldDesc::of_size(q).unwrap();
            assert_eq!(Mat::identity(f, 2).det(), 1);
            assert_eq!(Mat::identity(f, 4).det(), 1);
        }
        let f5 = FieldDesc::prime(5);
        assert_eq!(Mat::from_rows(f5, &[&[1, 0], &[0, 4]]).det(), 4);
        let f3 = FieldDesc::prime(3);
        let a = Mat::from_rows(f3, &[&[1, 1], &[0, 1]]);
        let b = Mat::from_rows(f3, &[&[1, 0], &[1, 1]]);
        assert_eq!(
            a.try_mul(&b).unwrap(),
            Mat::from_rows(f3, &[&[2, 1], &[1, 1]])
        );
        assert_eq!(Mat::zero(f3, 2).inverse(), Err(AlgebraError::Singular));
        assert_eq!(
            a.try_mul(&Mat::identity(f5, 2)),
            Err(AlgebraError::DimensionMismatch)
        );
    }

    #[test]
    fn det_multiplicative_and_inverse() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [3, 5, 9] {
            let f = FieldDesc::of_size(q).unwrap();
            for _ in 0..1000 {
                let d = if rng.gen_bool(0.5) { 2 } else { 4 };
                let a = random_mat(f, d, &mut rng);
                let b = random_mat(f, d, &mut rng);
                let ab = a.try_mul(&b).unwrap();
                assert_eq!(ab.det(), f.mul(a.det(), b.det()));
                if let Ok(ai) = a.inverse() {
                    assert_eq!(a.try_mul(&ai).unwrap(), Mat::identity(f, d));
                } else {
                    assert_eq!(a.det(), 0);
                }
            }
        }
    }

    #[test]
    fn kron_examples_and_mixed_product() {
        let f5 = FieldDesc::prime(5);
        let i2 = Mat::identity(f5, 2);
        assert_eq!(i2.kron(&i2).unwrap(), Mat::identity(f5, 4));
        let qi = Mat::from_rows(f5, &[&[2, 0], &[0, 3]]);
        let k = qi.kron(&i2).unwrap();
        let g = build_from_concrete(&[k], 100, "<Qi x I>").unwrap();
        assert_eq!(g.table.order(), 4);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let [a, b, c, d] = std::array::from_fn(|_| random_mat(f5, 2, &mut rng));
            let lhs = a.kron(&b).unwrap().try_mul(&c.kron(&d).unwrap()).unwrap();
            let rhs = a
                .try_mul(&c)
                .unwrap()
                .kron(&b.try_mul(&d).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            let x = a.kron(&i2).unwrap();
            let y = i2.kron(&b).unwrap();
            assert_eq!(x.try_mul(&y).unwrap(), y.try_mul(&x).unwrap());
        }
    }

    #[test]
    fn classical_orders() {
        let order = |k, q| {
            build_from_concrete(&classical_generators(k, q).unwrap(), 10_000, "c")
                .unwrap()
                .table
                .order()
        };
        assert_eq!(order(ClassicalKind::SL, 3), 24);
        assert_eq!(order(ClassicalKind::GL, 3), 48);
        assert_eq!(order(ClassicalKind::SL, 5), 120);
        assert_eq!(order(ClassicalKind::GL, 5), 480);
        assert_eq!(order(ClassicalKind::SL, 9), 720);
        assert!(classical_generators(ClassicalKind::SL, 7).is_err());
    }

    #[test]
    fn conjugation_solver_schur_cases() {
        let f5 = FieldDesc::prime(5);
        let gens = classical_generators(ClassicalKind::SL, 5).unwrap();
        let sol = solve_conjugation(&gens, &gens).unwrap();
        assert_eq!(sol.solution_dim, 1);
        assert_eq!(sol.t, Mat::identity(f5, 2));

        let g = Mat::from_rows(f5, &[&[2, 1], &[1, 1]]);
        let gi = g.inverse().unwrap();
        let ys: Vec<Mat> = gens
            .iter()
            .map(|x| g.try_mul(x).unwrap().try_mul(&gi).unwrap())
            .collect();
        let sol = solve_conjugation(&gens, &ys).unwrap();
        assert_eq!(sol.solution_dim, 1);
        assert_eq!(sol.t, normalize(g));
        for (x, y) in gens.iter().zip(&ys) {
            let lhs = sol
                .t
                .try_mul(x)
                .unwrap()
                .try_mul(&sol.t.inverse().unwrap())
                .unwrap();
            assert_eq!(&lhs, y);
        }
    }

    #[test]
    fn conjugation_solver_failures() {
        let f5 = FieldDesc::prime(5);
        let x = Mat::from_rows(f5, &[&[1, 1], &[0, 1]]);
        let y = Mat::from_rows(f5, &[&[2, 0], &[0, 3]]);
        // different traces: no intertwiner at all
        assert_eq!(solve_conjugation(&[x], &[y]), Err(AlgebraError::NoSolution));
        // X = 0 and Y = I: T*0 = I*T forces T = 0
        let z = Mat::zero(f5, 2);
        assert_eq!(
            solve_conjugation(&[z], &[Mat::identity(f5, 2)]),
            Err(AlgebraError::NoSolution)
        );
        // X = E11, Y = E12: every solution T = a E12 is singular
        let e11 = Mat::from_rows(f5, &[&[1, 0], &[0, 0]]);
        let e12 = Mat::from_rows(f5, &[&[0, 1], &[0, 0]]);
        assert_eq!(
            solve_conjugation(&[e11], &[e12]),
            Err(AlgebraError::NoInvertibleSolution)
        );
    }
}
