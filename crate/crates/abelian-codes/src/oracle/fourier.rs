//! Discrete Fourier transform over the splitting field, its inverse, and
//! generating idempotents of defining sets.

use super::AmbientPolynomial;
use crate::algebra::{Fe, Field, Index, SplittingField};
use crate::hypermatrix::OrbitHypermatrix;
use crate::{Error, Result};

/// alpha_k^m for m in 0..r_k, per coordinate.
fn power_tables(sf: &SplittingField, r: &[u32]) -> Vec<Vec<Fe>> {
    r.iter()
        .zip(&sf.alphas)
        .map(|(&rk, alpha)| {
            let mut row = Vec::with_capacity(rk as usize);
            let mut acc = sf.field.one();
            for _ in 0..rk {
                row.push(acc.clone());
                acc = sf.field.mul(&acc, alpha);
            }
            row
        })
        .collect()
}

/// alpha^{i.j} = prod_k alpha_k^{i_k j_k}, with an optional global sign on
/// the exponent.
fn root_power(
    tables: &[Vec<Fe>],
    field: &Field,
    r: &[u32],
    i: &Index,
    j: &Index,
    negate: bool,
) -> Fe {
    let mut acc = field.one();
    for (k, table) in tables.iter().enumerate() {
        let rk = r[k] as u64;
        let mut e = (i.coords[k] as u64 * j.coords[k] as u64) % rk;
        if negate && e != 0 {
            e = rk - e;
        }
        acc = field.mul(&acc, &table[e as usize]);
    }
    acc
}

/// Lifts a polynomial's coefficients into the splitting field. Accepts
/// prime-field input (embedded as constants) or input already over the
/// splitting field.
fn lift(f: &AmbientPolynomial, sf: &SplittingField) -> Result<Vec<(Index, Fe)>> {
    let fv = f.field().degree();
    if f.field().p() != sf.field.p() {
        return Err(Error::InvalidArgument(
            "polynomial characteristic differs from the splitting field".into(),
        ));
    }
    if fv == sf.field.degree() {
        return Ok(f.terms().map(|(i, c)| (i.clone(), c.clone())).collect());
    }
    if fv == 1 {
        return Ok(f
            .terms()
            .map(|(i, c)| (i.clone(), sf.field.from_u64(c.coeffs()[0])))
            .collect());
    }
    Err(Error::InvalidArgument(format!(
        "cannot embed F_{}^{} coefficients into F_{}^{}",
        f.field().p(),
        fv,
        sf.field.p(),
        sf.field.degree()
    )))
}

/// phi_{alpha,f}: the coefficient at j is the evaluation f(alpha^j).
pub fn fourier_transform(
    f: &AmbientPolynomial,
    sf: &SplittingField,
) -> Result<AmbientPolynomial> {
    let shape = f.shape();
    let tables = power_tables(sf, shape.r());
    let terms = lift(f, sf)?;
    let mut out = Vec::with_capacity(shape.size());
    for linear in 0..shape.size() {
        let j = shape.index_at(linear);
        let mut acc = sf.field.zero();
        for (i, c) in &terms {
            let w = root_power(&tables, &sf.field, shape.r(), i, &j, false);
            acc = sf.field.add(&acc, &sf.field.mul(c, &w));
        }
        out.push((j, acc));
    }
    AmbientPolynomial::from_terms(shape, &sf.field, &out)
}

/// Inverse transform: f(i) = |I|^{-1} sum_j g_j alpha^{-i.j}.
pub fn inverse_transform(
    g: &AmbientPolynomial,
    sf: &SplittingField,
) -> Result<AmbientPolynomial> {
    let shape = g.shape();
    let tables = power_tables(sf, shape.r());
    let terms = lift(g, sf)?;
    let size_inv = sf
        .field
        .inv(&sf.field.from_u64(shape.size() as u64 % sf.field.p()))?;
    let mut out = Vec::with_capacity(shape.size());
    for linear in 0..shape.size() {
        let i = shape.index_at(linear);
        let mut acc = sf.field.zero();
        for (j, c) in &terms {
            let w = root_power(&tables, &sf.field, shape.r(), &i, j, true);
            acc = sf.field.add(&acc, &sf.field.mul(c, &w));
        }
        out.push((i, sf.field.mul(&size_inv, &acc)));
    }
    AmbientPolynomial::from_terms(shape, &sf.field, &out)
}

/// The generating idempotent of the code whose defining set is D(M): the
/// inverse transform of the 0/1 indicator that is 1 off the defining set.
/// The result lies in the prime field; a non-rational coefficient would mean
/// the defining set is not closed under multiplication by q.
pub fn generating_idempotent(
    m: &OrbitHypermatrix,
    sf: &SplittingField,
) -> Result<AmbientPolynomial> {
    let shape = m.shape();
    let indicator = AmbientPolynomial::from_terms(
        shape,
        &sf.field,
        &m.support()
            .iter_ones()
            .map(|l| (shape.index_at(l), sf.field.one()))
            .collect::<Vec<_>>(),
    )?;
    let e_ext = inverse_transform(&indicator, sf)?;
    let prime = Field::new(sf.field.p(), 1)?;
    let mut terms = Vec::new();
    for (i, c) in e_ext.terms() {
        match c.as_prime_field() {
            Some(c0) => terms.push((i.clone(), prime.from_u64(c0))),
            None => {
                return Err(Error::Internal(format!(
                    "idempotent coefficient at {:?} is not in the prime field; \
                     the defining set cannot be closed under multiplication by q",
                    i.coords
                )))
            }
        }
    }
    AmbientPolynomial::from_terms(shape, &prime, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{splitting_field, Shape};

    fn ix(coords: &[u32]) -> Index {
        Index::new(coords.to_vec())
    }

    #[test]
    fn transform_of_one_is_all_ones() {
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let field = Field::new(2, 1).unwrap();
        let one = AmbientPolynomial::one(&shape, &field);
        let t = fourier_transform(&one, &sf).unwrap();
        assert_eq!(t.terms().count(), 15);
        assert!(t.terms().all(|(_, c)| *c == sf.field.one()));
    }

    #[test]
    fn transform_of_x_lists_root_powers() {
        let shape = Shape::new(2, vec![3]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let field = Field::new(2, 1).unwrap();
        let x = AmbientPolynomial::from_terms(&shape, &field, &[(ix(&[1]), field.one())])
            .unwrap();
        let t = fourier_transform(&x, &sf).unwrap();
        let alpha = &sf.alphas[0];
        assert_eq!(t.coeff(&ix(&[0])), sf.field.one());
        assert_eq!(t.coeff(&ix(&[1])), alpha.clone());
        assert_eq!(t.coeff(&ix(&[2])), sf.field.mul(alpha, alpha));
    }

    #[test]
    fn transform_is_a_ring_morphism() {
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let field = Field::new(2, 1).unwrap();
        // Deterministic pseudo-random supports.
        let f = AmbientPolynomial::from_terms(
            &shape,
            &field,
            &(0..15)
                .filter(|l| l % 3 == 1 || l % 7 == 2)
                .map(|l| (shape.index_at(l), field.one()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let g = AmbientPolynomial::from_terms(
            &shape,
            &field,
            &(0..15)
                .filter(|l| l % 4 == 0)
                .map(|l| (shape.index_at(l), field.one()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let lhs = fourier_transform(&f.multiply(&g).unwrap(), &sf).unwrap();
        let rhs = fourier_transform(&f, &sf)
            .unwrap()
            .star(&fourier_transform(&g, &sf).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_undoes_the_transform() {
        let shape = Shape::new(3, vec![2, 4]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let f = AmbientPolynomial::from_terms(
            &shape,
            &sf.field,
            &(0..8)
                .map(|l| (shape.index_at(l), sf.field.element(l as u64 % 9)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let round = inverse_transform(&fourier_transform(&f, &sf).unwrap(), &sf).unwrap();
        assert_eq!(round, f);
    }

    #[test]
    fn idempotent_of_single_coset() {
        // r = 3, q = 2, D = Q(1) = {1, 2}: the transform of e is 1 at 0 and
        // 0 elsewhere, so C is the repetition code and e = 1 + x + x^2.
        let shape = Shape::new(2, vec![3]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let m = OrbitHypermatrix::from_orbit_reps(&shape, 1, &[ix(&[1])]).unwrap();
        let e = generating_idempotent(&m, &sf).unwrap();
        let field = e.field().clone();
        let expected = AmbientPolynomial::from_terms(
            &shape,
            &field,
            &[
                (ix(&[0]), field.one()),
                (ix(&[1]), field.one()),
                (ix(&[2]), field.one()),
            ],
        )
        .unwrap();
        assert_eq!(e, expected);
        assert_eq!(e.multiply(&e).unwrap(), e);
    }

    #[test]
    fn idempotent_extremes() {
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let full = OrbitHypermatrix::from_orbit_reps(&shape, 1, &[]).unwrap();
        let e = generating_idempotent(&full, &sf).unwrap();
        assert_eq!(e, AmbientPolynomial::one(&shape, e.field()));

        let all_reps: Vec<Index> = crate::algebra::orbit_partition(&shape, 1)
            .unwrap()
            .orbits
            .iter()
            .map(|o| o.rep.clone())
            .collect();
        let zero = OrbitHypermatrix::from_orbit_reps(&shape, 1, &all_reps).unwrap();
        let e0 = generating_idempotent(&zero, &sf).unwrap();
        assert!(e0.is_zero());
    }

    #[test]
    fn idempotent_squares_to_itself_and_matches_support() {
        // q = 2, r = (5, 7), D = Q(0,0) u Q(1,0) u Q(0,3).
        let shape = Shape::new(2, vec![5, 7]).unwrap();
        let sf = splitting_field(&shape).unwrap();
        let m = OrbitHypermatrix::from_orbit_reps(
            &shape,
            1,
            &[ix(&[0, 0]), ix(&[1, 0]), ix(&[0, 3])],
        )
        .unwrap();
        let e = generating_idempotent(&m, &sf).unwrap();
        assert_eq!(e.multiply(&e).unwrap(), e);
        let t = fourier_transform(&e, &sf).unwrap();
        assert_eq!(t.support_bits(), *m.support());
        assert!(t.terms().all(|(_, c)| *c == sf.field.one()));
    }
}
