//! Vectors and matrices over GF(2).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An element of GF(2)^n, indexed by the colours of a target or by the orbits
/// of its automorphism group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GadgetVector {
    bits: Vec<bool>,
}

impl GadgetVector {
    pub fn zeros(n: usize) -> GadgetVector {
        GadgetVector { bits: vec![false; n] }
    }

    pub fn ones(n: usize) -> GadgetVector {
        GadgetVector { bits: vec![true; n] }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(n: usize, i: usize) -> GadgetVector {
        let mut v = GadgetVector::zeros(n);
        v.bits[i] = true;
        v
    }

    pub fn from_bits(bits: Vec<bool>) -> GadgetVector {
        GadgetVector { bits }
    }

    /// Parses a string of `0` and `1` characters; anything else is ignored.
    pub fn from_str_bits(s: &str) -> GadgetVector {
        GadgetVector { bits: s.chars().filter_map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        }).collect() }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, b: bool) {
        self.bits[i] = b;
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn is_ones(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The first `m` coordinates.
    pub fn prefix(&self, m: usize) -> &[bool] {
        &self.bits[..m]
    }

    fn check(&self, other: &GadgetVector) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { left: self.len(), right: other.len() })
        }
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &GadgetVector) -> Result<GadgetVector> {
        self.check(other)?;
        Ok(GadgetVector { bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect() })
    }

    /// Coordinatewise product.
    pub fn mul(&self, other: &GadgetVector) -> Result<GadgetVector> {
        self.check(other)?;
        Ok(GadgetVector { bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect() })
    }

    pub fn dot(&self, other: &GadgetVector) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits.iter().zip(&other.bits).fold(false, |acc, (a, b)| acc ^ (a & b)))
    }
}

impl fmt::Debug for GadgetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.bits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if *b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for GadgetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn vec_add(a: &GadgetVector, b: &GadgetVector) -> Result<GadgetVector> {
    a.add(b)
}

pub fn vec_mul(a: &GadgetVector, b: &GadgetVector) -> Result<GadgetVector> {
    a.mul(b)
}

/// A square matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: Vec<GadgetVector>,
}

impl Gf2Matrix {
    pub fn zeros(n: usize) -> Gf2Matrix {
        Gf2Matrix { rows: vec![GadgetVector::zeros(n); n] }
    }

    pub fn identity(n: usize) -> Gf2Matrix {
        Gf2Matrix { rows: (0..n).map(|i| GadgetVector::unit(n, i)).collect() }
    }

    /// Adjacency matrix of a graph, reduced mod 2.
    pub fn adjacency(g: &crate::graph::Graph) -> Gf2Matrix {
        let n = g.n();
        let mut m = Gf2Matrix::zeros(n);
        for (u, v) in g.edges() {
            m.set(u, v, true);
            m.set(v, u, true);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &GadgetVector {
        &self.rows[i]
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch { left: self.n(), right: other.n() });
        }
        let n = self.n();
        let mut out = Gf2Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    out.rows[i] = out.rows[i].add(&other.rows[k])?;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: usize) -> Gf2Matrix {
        let mut base = self.clone();
        let mut acc = Gf2Matrix::identity(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same size");
            }
            base = base.mul(&base).expect("same size");
            e >>= 1;
        }
        acc
    }

    /// `u^T A v`.
    pub fn bilinear(&self, u: &GadgetVector, v: &GadgetVector) -> Result<bool> {
        if u.len() != self.n() {
            return Err(Error::LengthMismatch { left: u.len(), right: self.n() });
        }
        let mut acc = false;
        for i in 0..self.n() {
            if u.get(i) {
                acc ^= self.rows[i].dot(v)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn vector_examples() {
        let a = GadgetVector::from_str_bits("101");
        let b = GadgetVector::from_str_bits("011");
        assert_eq!(vec_mul(&a, &b).unwrap(), GadgetVector::from_str_bits("001"));
        assert!(vec_add(&a, &a).unwrap().is_zero());
        assert_eq!(vec_mul(&a, &GadgetVector::ones(3)).unwrap(), a);
        assert_eq!(
            vec_add(&a, &GadgetVector::ones(2)),
            Err(Error::LengthMismatch { left: 3, right: 2 })
        );
        assert_eq!(alloc::format!("{a}"), "(1,0,1)");
    }

    #[test]
    fn matrix_powers_count_walks() {
        let p = named::path(4);
        let a = Gf2Matrix::adjacency(&p);
        let a3 = a.pow(3);
        // Walks of length 3 from 0 to 1: 0101, 0121 -> even.
        assert!(!a3.get(0, 1));
        // From 0 to 3: only 0123.
        assert!(a3.get(0, 3));
        assert_eq!(a.pow(0), Gf2Matrix::identity(4));
        let u = GadgetVector::unit(4, 0);
        let v = GadgetVector::unit(4, 1);
        assert!(a.bilinear(&u, &v).unwrap());
    }
}
