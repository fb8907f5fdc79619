//! Independent brute-force oracles: the polynomial apparent distance
//! computed straight from its definition, the discrete Fourier transform
//! with idempotents, and exhaustive minimum-distance and mad searches.
//!
//! Everything here trades speed for being structurally different from the
//! hypermatrix engine, so agreement between the two is meaningful evidence.

mod distance;
mod fourier;

pub use distance::{
    generator_matrix, mad_bruteforce, min_distance_bruteforce, GeneratorMatrix,
    DEFAULT_DISTANCE_BUDGET, DEFAULT_MAD_ORBIT_BUDGET, EXTENDED_DISTANCE_BUDGET,
};
pub use fourier::{fourier_transform, generating_idempotent, inverse_transform};

use std::collections::BTreeMap;

use crate::algebra::{Field, Fe, Index, Shape};
use crate::bits::Bits;
use crate::{Error, Result};

/// Element of A(r_1, ..., r_s) over a chosen coefficient field: a sparse map
/// from reduced exponent tuples to nonzero field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientPolynomial {
    shape: Shape,
    field: Field,
    coeffs: BTreeMap<Index, Fe>,
}

impl AmbientPolynomial {
    pub fn zero(shape: &Shape, field: &Field) -> AmbientPolynomial {
        AmbientPolynomial {
            shape: shape.clone(),
            field: field.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(shape: &Shape, field: &Field) -> AmbientPolynomial {
        let mut p = AmbientPolynomial::zero(shape, field);
        p.coeffs
            .insert(Index::new(vec![0; shape.s()]), field.one());
        p
    }

    /// Builds a polynomial from (exponent, coefficient) terms. Exponents are
    /// reduced componentwise mod (r_1, ..., r_s), like terms are combined in
    /// the field, and zero coefficients are dropped.
    pub fn from_terms(
        shape: &Shape,
        field: &Field,
        terms: &[(Index, Fe)],
    ) -> Result<AmbientPolynomial> {
        let mut p = AmbientPolynomial::zero(shape, field);
        for (exp, c) in terms {
            if exp.coords.len() != shape.s() {
                return Err(Error::InvalidShape(format!(
                    "exponent {:?} has {} coordinates, expected {}",
                    exp.coords,
                    exp.coords.len(),
                    shape.s()
                )));
            }
            if c.coeffs().len() != field.degree() {
                return Err(Error::InvalidArgument(format!(
                    "coefficient has {} components, the field has degree {}",
                    c.coeffs().len(),
                    field.degree()
                )));
            }
            let reduced = Index::new(
                exp.coords
                    .iter()
                    .zip(shape.r())
                    .map(|(&e, &rj)| e % rj)
                    .collect(),
            );
            p.add_term(reduced, c.clone());
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Index, c: Fe) {
        let cur = match self.coeffs.remove(&exp) {
            Some(prev) => self.field.add(&prev, &c),
            None => c,
        };
        if !cur.is_zero() {
            self.coeffs.insert(exp, cur);
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: &Index) -> Fe {
        self.coeffs
            .get(exp)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &Fe)> {
        self.coeffs.iter()
    }

    pub fn support_bits(&self) -> Bits {
        let mut bits = Bits::empty(self.shape.size() as usize);
        for exp in self.coeffs.keys() {
            bits.set(self.shape.linearize(exp));
        }
        bits
    }

    fn check_compatible(&self, other: &AmbientPolynomial) -> Result<()> {
        if self.shape != other.shape || self.field != other.field {
            return Err(Error::InvalidArgument(
                "polynomials live in different ambient algebras".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &AmbientPolynomial) -> Result<AmbientPolynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.coeffs {
            out.add_term(exp.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product in the ambient algebra: exponents add componentwise mod r.
    pub fn multiply(&self, other: &AmbientPolynomial) -> Result<AmbientPolynomial> {
        self.check_compatible(other)?;
        let mut out = AmbientPolynomial::zero(&self.shape, &self.field);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let exp = Index::new(
                    i.coords
                        .iter()
                        .zip(&j.coords)
                        .zip(self.shape.r())
                        .map(|((&x, &y), &rj)| (x + y) % rj)
                        .collect(),
                );
                out.add_term(exp, self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    /// Coordinatewise product, the image of the ambient product under the
    /// Fourier transform.
    pub fn star(&self, other: &AmbientPolynomial) -> Result<AmbientPolynomial> {
        self.check_compatible(other)?;
        let mut out = AmbientPolynomial::zero(&self.shape, &self.field);
        for (exp, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(exp) {
                out.add_term(exp.clone(), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    /// X^h * self: a permutation of the terms, no coefficient changes.
    fn shift(&self, h: &Index) -> AmbientPolynomial {
        let mut out = AmbientPolynomial::zero(&self.shape, &self.field);
        for (exp, c) in &self.coeffs {
            let shifted = Index::new(
                exp.coords
                    .iter()
                    .zip(&h.coords)
                    .zip(self.shape.r())
                    .map(|((&x, &y), &rj)| (x + y) % rj)
                    .collect(),
            );
            out.coeffs.insert(shifted, c.clone());
        }
        out
    }

    /// The k-th degree (0-based k): the largest x_k exponent present.
    fn degree_in(&self, k0: usize) -> u32 {
        self.coeffs
            .keys()
            .map(|exp| exp.coords[k0])
            .max()
            .expect("degree of the zero polynomial")
    }

    /// The coefficient of x_k^b as a polynomial in the remaining variables.
    fn leading_slice(&self, k0: usize, b: u32) -> AmbientPolynomial {
        let sub_shape = self.shape.drop_coordinate(k0);
        let mut out = AmbientPolynomial {
            shape: sub_shape,
            field: self.field.clone(),
            coeffs: BTreeMap::new(),
        };
        for (exp, c) in &self.coeffs {
            if exp.coords[k0] != b {
                continue;
            }
            let mut coords = exp.coords.clone();
            coords.remove(k0);
            out.coeffs.insert(Index::new(coords), c.clone());
        }
        out
    }
}

/// Apparent distance of a polynomial, straight from the recursive
/// definition: enumerate every shift X^h * f, take the leading coefficient
/// in each variable and recurse on it.
pub fn apparent_distance_poly(f: &AmbientPolynomial) -> u64 {
    if f.is_zero() {
        return 0;
    }
    let shape = f.shape();
    if shape.s() == 1 {
        let r = shape.r()[0] as u64;
        return (0..shape.r()[0])
            .map(|h| r - f.shift(&Index::new(vec![h])).degree_in(0) as u64)
            .max()
            .expect("r >= 1");
    }
    (0..shape.size())
        .map(|linear| shifted_maximum(f, &shape.index_at(linear as usize)))
        .max()
        .expect("nonempty index set")
}

/// max_k { d*(c_k[h]) * (r_k - d_k[h]) } for one shift h.
fn shifted_maximum(f: &AmbientPolynomial, h: &Index) -> u64 {
    let g = f.shift(h);
    let shape = f.shape();
    (0..shape.s())
        .map(|k0| {
            let dk = g.degree_in(k0);
            let ck = g.leading_slice(k0, dk);
            apparent_distance_poly(&ck) * (shape.r()[k0] as u64 - dk as u64)
        })
        .max()
        .expect("s >= 1")
}
