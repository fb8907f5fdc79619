//! Exhaustive distance oracles: an F_q generator matrix obtained from the
//! defining-set evaluation constraints, a Gray-code walk over the full code
//! span for the true minimum distance, and an orbit-subset enumeration for
//! the minimum apparent distance.

use crate::algebra::{q_orbit, splitting_field};
use crate::bits::Bits;
use crate::hypermatrix::{DStarCache, OrbitHypermatrix};
use crate::{Error, Result};

/// Codewords enumerated by default before giving up.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 24;
/// Enumeration cap in extended mode.
pub const EXTENDED_DISTANCE_BUDGET: u128 = 1 << 28;
/// Free orbits the exhaustive mad search accepts by default.
pub const DEFAULT_MAD_ORBIT_BUDGET: usize = 20;

/// An F_q basis of the code with defining set D: rows are codewords of
/// length prod r_j whose transform vanishes on D.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    /// Basis codewords, entries reduced mod q, indexed row-major by I.
    pub rows: Vec<Vec<u64>>,
    /// Code length, prod r_j.
    pub n: usize,
    /// The field size q (prime).
    pub q: u64,
}

impl GeneratorMatrix {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon form over F_p, in place. Returns the rank.
fn row_reduce(rows: &mut Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = crate::algebra::modpow(rows[pivot_row][col], p - 2, p);
        for x in rows[pivot_row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] % p != 0 {
                let c = rows[r][col] % p;
                for j in 0..ncols {
                    let sub = c * rows[pivot_row][j] % p;
                    rows[r][j] = (rows[r][j] + p - sub) % p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|&x| x % p != 0));
    pivot_row
}

/// A basis of the code with defining set D(M), as the nullspace of the
/// evaluation constraints f(alpha^j) = 0 for j in D(M), expanded over F_q.
/// Requires prime q. The constraint rank must come out as exactly |D(M)|,
/// anything else signals a closure bug and is reported as an error.
pub fn generator_matrix(m: &OrbitHypermatrix) -> Result<GeneratorMatrix> {
    let shape = m.shape();
    let sf = splitting_field(shape)?;
    let p = sf.field.p();
    let n = shape.size();
    let defining = m.defining_bits();
    let d_size = defining.count_ones();

    // Power tables for alpha_k^m.
    let tables: Vec<Vec<crate::algebra::Fe>> = shape
        .r()
        .iter()
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
        .collect();

    // Each j in D contributes deg(F) constraint rows over F_p: the
    // coordinates of alpha^{i.j} in the polynomial basis.
    let mut constraints: Vec<Vec<u64>> = Vec::new();
    for j_linear in defining.iter_ones() {
        let j = shape.index_at(j_linear);
        let mut per_coord: Vec<Vec<u64>> = vec![vec![0; n]; sf.field.degree()];
        for i_linear in 0..n {
            let i = shape.index_at(i_linear);
            let mut w = sf.field.one();
            for (k, table) in tables.iter().enumerate() {
                let rk = shape.r()[k] as u64;
                let e = (i.coords[k] as u64 * j.coords[k] as u64) % rk;
                w = sf.field.mul(&w, &table[e as usize]);
            }
            for (c, row) in per_coord.iter_mut().enumerate() {
                row[i_linear] = w.coeffs()[c];
            }
        }
        constraints.extend(per_coord);
    }
    let rank = row_reduce(&mut constraints, p);
    if rank != d_size {
        return Err(Error::Internal(format!(
            "evaluation constraints have rank {rank}, expected |D| = {d_size}"
        )));
    }

    // Nullspace basis from the reduced constraints: one row per free column.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    for (r, row) in constraints.iter().enumerate() {
        if let Some(col) = row.iter().position(|&x| x != 0) {
            pivot_of_col[col] = Some(r);
        }
    }
    let mut rows = Vec::with_capacity(n - rank);
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut word = vec![0u64; n];
        word[free] = 1;
        for col in 0..n {
            if let Some(r) = pivot_of_col[col] {
                word[col] = (p - constraints[r][free] % p) % p;
            }
        }
        rows.push(word);
    }
    debug_assert_eq!(rows.len() + d_size, n);
    Ok(GeneratorMatrix { rows, n, q: p })
}

/// Exact minimum distance by walking the whole span of the basis in
/// Gray-code order, toggling one basis row per step. Errors when the span
/// size q^k exceeds the budget.
pub fn min_distance_bruteforce(gm: &GeneratorMatrix, budget: u128) -> Result<u64> {
    let k = gm.rows.len();
    if k == 0 {
        return Err(Error::InvalidArgument(
            "the zero code has no minimum distance".into(),
        ));
    }
    let total = (gm.q as u128)
        .checked_pow(k as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total - 1,
            budget,
        });
    }
    if gm.q == 2 {
        Ok(min_distance_binary(gm))
    } else {
        Ok(min_distance_gray(gm))
    }
}

fn min_distance_binary(gm: &GeneratorMatrix) -> u64 {
    let words = gm.n.div_ceil(64);
    let rows: Vec<Vec<u64>> = gm
        .rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (i, &x) in r.iter().enumerate() {
                if x % 2 == 1 {
                    w[i / 64] |= 1 << (i % 64);
                }
            }
            w
        })
        .collect();
    let mut state = vec![0u64; words];
    let mut best = u64::MAX;
    for m in 1u64..1 << gm.rows.len() {
        let row = &rows[m.trailing_zeros() as usize];
        let mut weight = 0;
        for (s, r) in state.iter_mut().zip(row) {
            *s ^= r;
            weight += s.count_ones() as u64;
        }
        best = best.min(weight);
    }
    best
}

/// Mixed-radix reflected Gray enumeration (loopless focus pointers): each
/// step adds or subtracts one basis row, with incremental weight updates.
fn min_distance_gray(gm: &GeneratorMatrix) -> u64 {
    let q = gm.q;
    let k = gm.rows.len();
    let mut state = vec![0u64; gm.n];
    let mut weight = 0u64;
    let mut best = u64::MAX;
    let mut digit = vec![0u64; k];
    let mut focus: Vec<usize> = (0..=k).collect();
    let mut offset = vec![1i64; k];
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        let dir = offset[j];
        digit[j] = (digit[j] as i64 + dir) as u64;
        for (pos, &c) in gm.rows[j].iter().enumerate() {
            if c == 0 {
                continue;
            }
            let delta = if dir == 1 { c } else { q - c };
            let old = state[pos];
            let new = (old + delta) % q;
            state[pos] = new;
            weight += (new != 0) as u64;
            weight -= (old != 0) as u64;
        }
        best = best.min(weight);
        if digit[j] == 0 || digit[j] == q - 1 {
            offset[j] = -offset[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
    best
}

/// Exhaustive mad: enumerate every nonzero union of support orbits and take
/// the minimum apparent distance. Errors when the orbit count exceeds the
/// budget.
pub fn mad_bruteforce(m: &OrbitHypermatrix, orbit_budget: usize) -> Result<u64> {
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "mad is undefined for the zero hypermatrix".into(),
        ));
    }
    let shape = m.shape();
    let mut orbits: Vec<Bits> = Vec::new();
    let mut seen = Bits::empty(shape.size());
    for linear in m.support().iter_ones() {
        if seen.get(linear) {
            continue;
        }
        let orbit = q_orbit(shape, m.t(), &shape.index_at(linear))?;
        let mut bits = Bits::empty(shape.size());
        for member in &orbit.members {
            let l = shape.linearize(member);
            bits.set(l);
            seen.set(l);
        }
        orbits.push(bits);
    }
    let k = orbits.len();
    if k > orbit_budget {
        return Err(Error::BudgetExceeded {
            needed: (1u128 << k.min(127)) - 1,
            budget: (1u128 << orbit_budget.min(127)) - 1,
        });
    }
    let mut cache = DStarCache::default();
    let mut best = u64::MAX;
    for mask in 1u64..1 << k {
        let mut support = Bits::empty(shape.size());
        for (i, orbit) in orbits.iter().enumerate() {
            if mask >> i & 1 == 1 {
                support.union_with(orbit);
            }
        }
        let p = OrbitHypermatrix::from_defining_bits(shape, m.t(), support.complement());
        best = best.min(p.apparent_distance_with(&mut cache).value);
    }
    Ok(best)
}
