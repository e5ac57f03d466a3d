//! Square matrices of size 1 or 2 over a finite field, enough for the
//! generator images of the simple components.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Field, FieldElem};

/// A row-major `size × size` matrix. Arithmetic takes the field explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    size: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Matrix {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        Matrix { size, entries: rows.into_iter().flatten().collect() }
    }

    pub fn scalar(c: FieldElem) -> Matrix {
        Matrix { size: 1, entries: vec![c] }
    }

    pub fn identity(field: &Field, size: usize) -> Matrix {
        let entries = (0..size * size)
            .map(|k| if k % (size + 1) == 0 { field.one() } else { field.zero() })
            .collect();
        Matrix { size, entries }
    }

    pub fn zero(field: &Field, size: usize) -> Matrix {
        Matrix { size, entries: vec![field.zero(); size * size] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElem) {
        self.entries[i * self.size + j] = value;
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<FieldElem>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Matrix {
        Matrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.size, other.size);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| field.add(a, b)).collect();
        Matrix { size: self.size, entries }
    }

    pub fn sub(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.size, other.size);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| field.sub(a, b)).collect();
        Matrix { size: self.size, entries }
    }

    pub fn scale(&self, c: &FieldElem, field: &Field) -> Matrix {
        self.map(|a| field.mul(a, c))
    }

    pub fn mul(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Matrix::zero(field, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    acc = field.add(&acc, &field.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64, field: &Field) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(field, self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            base = base.mul(&base, field);
            e >>= 1;
        }
        acc
    }

    pub fn det(&self, field: &Field) -> FieldElem {
        match self.size {
            1 => self.entries[0].clone(),
            2 => field.sub(
                &field.mul(self.get(0, 0), self.get(1, 1)),
                &field.mul(self.get(0, 1), self.get(1, 0)),
            ),
            _ => unreachable!("only sizes 1 and 2 are used"),
        }
    }

    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        let det_inv = field.inv(&self.det(field))?;
        Some(match self.size {
            1 => Matrix::scalar(det_inv),
            _ => Matrix::from_rows(vec![
                vec![field.mul(self.get(1, 1), &det_inv), field.neg(&field.mul(self.get(0, 1), &det_inv))],
                vec![field.neg(&field.mul(self.get(1, 0), &det_inv)), field.mul(self.get(0, 0), &det_inv)],
            ]),
        })
    }

    /// `c · self · c^{-1}`.
    pub fn conjugate_by(&self, c: &Matrix, field: &Field) -> Matrix {
        let inv = c.inverse(field).expect("conjugating matrix is invertible");
        c.mul(self, field).mul(&inv, field)
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.entries.iter().all(|a| field.is_zero(a))
    }

    pub fn is_identity(&self, field: &Field) -> bool {
        *self == Matrix::identity(field, self.size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_powers() {
        let f = Field::new(7, 2).unwrap();
        let g = f.generator();
        let m = Matrix::from_rows(vec![vec![f.zero(), f.one()], vec![f.neg(&f.one()), g.clone()]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity(&f));
        assert_eq!(m.pow(5, &f), m.pow(2, &f).mul(&m.pow(3, &f), &f));
        let c = Matrix::from_rows(vec![vec![f.one(), g.clone()], vec![f.zero(), f.one()]]);
        let conj = m.conjugate_by(&c, &f);
        assert_eq!(conj.det(&f), m.det(&f));
        assert!(Matrix::zero(&f, 2).inverse(&f).is_none());
    }
}
