//! Exact linear algebra over prime fields and the rationals.
//!
//! All representation-theoretic computations in this crate go through the
//! dense [`FMat`] type; sizes are tiny (vertexwise dimensions of Dynkin
//! indecomposables), so a straightforward Gauss elimination is plenty.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Base field of a representation: `F_p` or `Q` (characteristic 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseField {
    Prime(u64),
    Rational,
}

impl BaseField {
    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Prime(p) => p,
            BaseField::Rational => 0,
        }
    }

    pub fn from_char(p: u64) -> BaseField {
        if p == 0 {
            BaseField::Rational
        } else {
            BaseField::Prime(p)
        }
    }
}

impl std::fmt::Display for BaseField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseField::Prime(p) => write!(f, "F{p}"),
            BaseField::Rational => write!(f, "Q"),
        }
    }
}

/// A field element; the variant must match the ambient [`BaseField`].
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl BaseField {
    pub fn zero(self) -> Scalar {
        match self {
            BaseField::Prime(_) => Scalar::Fp(0),
            BaseField::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            BaseField::Prime(_) => Scalar::Fp(1),
            BaseField::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            BaseField::Prime(p) => Scalar::Fp(v.rem_euclid(p as i64) as u64),
            BaseField::Rational => Scalar::Rat(BigRational::from(BigInt::from(v))),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (BaseField::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + p - y % p) % p)
            }
            (BaseField::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            (BaseField::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (BaseField::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x % p) % p),
            (BaseField::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (BaseField::Prime(p), Scalar::Fp(x)) => {
                assert!(*x % p != 0, "division by zero");
                // Fermat: x^(p-2) mod p
                let mut base = *x % p;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Fp(acc)
            }
            (BaseField::Rational, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Scalar::Rat(x.recip())
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match (self, a) {
            (BaseField::Prime(p), Scalar::Fp(x)) => x % p == 0,
            (BaseField::Rational, Scalar::Rat(x)) => x.is_zero(),
            _ => panic!("scalar/field mismatch"),
        }
    }
}

/// Dense matrix over a [`BaseField`], representing a linear map from the
/// column space to the row space.
#[derive(Debug, Clone, PartialEq)]
pub struct FMat {
    pub field: BaseField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl FMat {
    pub fn zero(field: BaseField, rows: usize, cols: usize) -> FMat {
        FMat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: BaseField, n: usize) -> FMat {
        let mut m = FMat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(field: BaseField, rows: usize, cols: usize, entries: &[i64]) -> FMat {
        assert_eq!(entries.len(), rows * cols);
        FMat {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn matmul(&self, other: &FMat) -> FMat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = FMat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if f.is_zero(self.get(i, k)) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(self.get(i, k), other.get(k, j));
                    let v = f.add(out.get(i, j), &t);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FMat) -> FMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.add(&self.data[i], &other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &FMat) -> FMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.sub(&self.data[i], &other.data[i]);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> FMat {
        let f = self.field;
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = f.mul(v, s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            for c in 0..self.cols {
                self.data.swap(row * self.cols + c, pr * self.cols + c);
            }
            let inv = f.inv(self.get(row, col));
            for c in 0..self.cols {
                let v = f.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.get(r, col)) {
                    let factor = self.get(r, col).clone();
                    for c in 0..self.cols {
                        let t = f.mul(&factor, self.get(row, c));
                        let v = f.sub(self.get(r, c), &t);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{v : Mv = 0}` as columns of the returned matrix.
    pub fn kernel_basis(&self) -> FMat {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FMat::zero(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(m.get(r, fc)));
            }
        }
        out
    }

    /// Columns of `self` forming a basis of the column space.
    pub fn image_basis(&self) -> FMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut out = FMat::zero(self.field, self.rows, pivots.len());
        for (k, &c) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, k, self.get(r, c).clone());
            }
        }
        out
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> FMat {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let n = self.rows;
        let mut aug = FMat::zero(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let pivots = aug.rref();
        assert!(
            pivots.len() >= n && pivots[..n] == (0..n).collect::<Vec<_>>()[..],
            "matrix is singular"
        );
        let mut out = FMat::zero(f, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, aug.get(r, n + c).clone());
            }
        }
        out
    }

    /// Stack `[self; other]` vertically.
    pub fn vstack(&self, other: &FMat) -> FMat {
        assert_eq!(self.cols, other.cols);
        let mut out = FMat::zero(self.field, self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                out.set(self.rows + r, c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Stack `[self | other]` horizontally.
    pub fn hstack(&self, other: &FMat) -> FMat {
        assert_eq!(self.rows, other.rows);
        let mut out = FMat::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn transpose(&self) -> FMat {
        let mut out = FMat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Solve `self * X = b`; `None` if inconsistent. With a full-column-rank
    /// `self` the solution is unique, otherwise free variables are set to 0.
    pub fn solve(&self, b: &FMat) -> Option<FMat> {
        assert_eq!(self.rows, b.rows);
        let f = self.field;
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = FMat::zero(f, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, aug.get(r, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// A surjection `target -> coker(self)` in coordinates: rows span a
    /// complement of the column space, so the result `P` satisfies
    /// `P * self = 0` and has full row rank.
    pub fn cokernel_projection(&self) -> FMat {
        let f = self.field;
        let img = self.image_basis();
        let r = img.cols;
        // extend the image basis to a basis of the target by standard vectors
        let mut basis = img;
        let mut extra = Vec::new();
        for e in 0..self.rows {
            if basis.cols == self.rows {
                break;
            }
            let mut cand = FMat::zero(f, self.rows, basis.cols + 1);
            for rr in 0..self.rows {
                for cc in 0..basis.cols {
                    cand.set(rr, cc, basis.get(rr, cc).clone());
                }
            }
            cand.set(e, basis.cols, f.one());
            if cand.rank() == basis.cols + 1 {
                basis = cand;
                extra.push(e);
            }
        }
        assert_eq!(basis.cols, self.rows);
        let inv = basis.inverse();
        // bottom rows of the inverse kill the image columns
        let mut out = FMat::zero(f, self.rows - r, self.rows);
        for rr in r..self.rows {
            for cc in 0..self.rows {
                out.set(rr - r, cc, inv.get(rr, cc).clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let f = BaseField::Prime(5);
        assert_eq!(f.mul(&Scalar::Fp(3), &Scalar::Fp(4)), Scalar::Fp(2));
        assert_eq!(f.inv(&Scalar::Fp(3)), Scalar::Fp(2));
        assert_eq!(f.sub(&Scalar::Fp(1), &Scalar::Fp(3)), Scalar::Fp(3));
    }

    #[test]
    fn kernel_and_rank() {
        for field in [BaseField::Prime(2), BaseField::Prime(3), BaseField::Rational] {
            let m = FMat::from_i64(field, 2, 3, &[1, 1, 0, 0, 1, 1]);
            assert_eq!(m.rank(), 2);
            let k = m.kernel_basis();
            assert_eq!(k.cols, 1);
            assert!(m.matmul(&k).is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = BaseField::Prime(7);
        let m = FMat::from_i64(f, 3, 3, &[1, 2, 0, 0, 1, 3, 1, 0, 2]);
        let inv = m.inverse();
        assert_eq!(m.matmul(&inv), FMat::identity(f, 3));
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = BaseField::Prime(2);
        let a = FMat::from_i64(f, 3, 2, &[1, 0, 0, 1, 1, 1]);
        let b = FMat::from_i64(f, 3, 1, &[1, 1, 0]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.matmul(&x), b);
        let bad = FMat::from_i64(f, 3, 1, &[1, 0, 0]);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn cokernel_projection_kills_image() {
        let f = BaseField::Rational;
        let m = FMat::from_i64(f, 3, 2, &[1, 0, 0, 1, 1, 1]);
        let p = m.cokernel_projection();
        assert_eq!(p.rows, 1);
        assert!(p.matmul(&m).is_zero());
        assert_eq!(p.rank(), 1);
    }
}
