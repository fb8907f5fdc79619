//! Abelian codes presented by their defining sets: dimension, apparent
//! distance over every choice of primitive roots, the multivariate BCH bound
//! and construction, dimension multiplication, and a search for the highest
//! dimension achievable at a prescribed apparent distance.

use std::collections::BTreeMap;

use crate::algebra::{
    apply_multiplier, gcd, lcm, mult_order, orbit_partition, root_class_representatives, Index,
    RootClass, Shape,
};
use crate::bits::Bits;
use crate::hypermatrix::OrbitHypermatrix;
use crate::mad::mad;
use crate::{Error, Result};

/// An abelian code in A_q(r_1, ..., r_s), determined by its defining set:
/// the union of q-orbits on which every codeword's transform vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCode {
    matrix: OrbitHypermatrix,
}

impl AbelianCode {
    pub fn shape(&self) -> &Shape {
        self.matrix.shape()
    }

    /// The q-orbit hypermatrix afforded by the defining set.
    pub fn matrix(&self) -> &OrbitHypermatrix {
        &self.matrix
    }

    /// Lex-smallest representative of each defining-set orbit, sorted.
    pub fn defining_orbit_reps(&self) -> Vec<Index> {
        self.matrix.defining_orbit_reps()
    }

    /// dim C = prod r_j - |D|, the number of nonzero transform positions.
    pub fn dimension(&self) -> usize {
        self.matrix.support().count_ones()
    }

    /// The zero code is the one defined by all of I.
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// The code whose defining set is the union of the q-orbits of the given
/// representatives. An empty list yields the full ambient space.
pub fn code_from_orbits(shape: &Shape, orbit_reps: &[Index]) -> Result<AbelianCode> {
    let matrix = OrbitHypermatrix::from_orbit_reps(shape, 1, orbit_reps)?;
    Ok(AbelianCode { matrix })
}

fn reject_zero(c: &AbelianCode) -> Result<()> {
    if c.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero code has no apparent distance".into(),
        ));
    }
    Ok(())
}

/// Apparent distance of the code with respect to the standard root choice:
/// the minimum apparent distance of the hypermatrix afforded by D.
pub fn apparent_distance_alpha(c: &AbelianCode) -> Result<u64> {
    reject_zero(c)?;
    Ok(mad(&c.matrix)?.value())
}

/// Image of a defining set under a componentwise unit multiplier.
fn map_defining_bits(shape: &Shape, defining: &Bits, a: &Index) -> Bits {
    let mut out = Bits::empty(shape.size());
    for linear in defining.iter_ones() {
        let x = shape.index_at(linear);
        out.set(shape.linearize(&apply_multiplier(shape, a, &x)));
    }
    out
}

/// Apparent distance over all primitive root choices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeApDistResult {
    /// d*(C), the maximum over root classes.
    pub value: u64,
    /// One entry per root class, in representative order (identity first).
    pub per_class: Vec<(RootClass, u64)>,
    /// The classes attaining the maximum.
    pub optimized_roots: Vec<RootClass>,
}

/// Apparent distance of the code itself: changing the root choice by a unit
/// multiplier tuple `a` replaces D with `a`-times-D, and two choices that
/// differ by a power of q give the same value, so one evaluation per root
/// class suffices.
pub fn apparent_distance_code(c: &AbelianCode) -> Result<CodeApDistResult> {
    reject_zero(c)?;
    let shape = c.shape();
    let defining = c.matrix.defining_bits();
    let mut per_class = Vec::new();
    for class in root_class_representatives(shape) {
        let mapped = map_defining_bits(shape, &defining, &class.multiplier);
        let m = OrbitHypermatrix::from_defining_bits(shape, 1, mapped);
        let v = mad(&m)?.value();
        per_class.push((class, v));
    }
    let value = per_class.iter().map(|&(_, v)| v).max().unwrap_or(0);
    let optimized_roots = per_class
        .iter()
        .filter(|&&(_, v)| v == value)
        .map(|(class, _)| class.clone())
        .collect();
    Ok(CodeApDistResult {
        value,
        per_class,
        optimized_roots,
    })
}

/// Which levels in direction k (1-based) are zero hypercolumns.
fn zero_levels(m: &OrbitHypermatrix, k: usize) -> Vec<bool> {
    let shape = m.shape();
    let rk = shape.r()[k - 1] as usize;
    let mut zero = vec![true; rk];
    for linear in m.support().iter_ones() {
        zero[shape.index_at(linear).coords[k - 1] as usize] = false;
    }
    zero
}

/// Longest cyclic run of `true`, assuming not everything is `true`.
fn longest_cyclic_run(zero: &[bool]) -> u64 {
    let n = zero.len();
    let start = match zero.iter().position(|&z| !z) {
        Some(p) => p,
        None => return n as u64,
    };
    let mut best = 0u64;
    let mut cur = 0u64;
    for i in 1..=n {
        if zero[(start + i) % n] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// The BCH-style lower bound on the apparent distance: find the longest
/// cyclic run of zero hypercolumns in each direction and multiply run+1 over
/// the directions that have one. Always at most the apparent distance.
pub fn bch_bound(c: &AbelianCode) -> Result<u64> {
    reject_zero(c)?;
    let mut bound = 1u64;
    for k in 1..=c.shape().s() {
        let run = longest_cyclic_run(&zero_levels(&c.matrix, k));
        if run >= 1 {
            bound *= run + 1;
        }
    }
    Ok(bound)
}

/// Parameters of a multivariate BCH code: for each chosen direction k, the
/// defining set swallows delta_k - 1 consecutive levels starting at b_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchSpec {
    gamma: Vec<usize>,
    delta: BTreeMap<usize, u32>,
    b: BTreeMap<usize, u32>,
}

impl BchSpec {
    /// Directions are 1-based; `delta` and `b` must be keyed exactly by the
    /// members of `gamma`.
    pub fn new(
        gamma: Vec<usize>,
        delta: BTreeMap<usize, u32>,
        b: BTreeMap<usize, u32>,
    ) -> Result<BchSpec> {
        if gamma.is_empty() {
            return Err(Error::InvalidArgument(
                "gamma must name at least one direction".into(),
            ));
        }
        let mut sorted = gamma;
        sorted.sort_unstable();
        sorted.dedup();
        if sorted[0] == 0 {
            return Err(Error::InvalidArgument("directions are 1-based".into()));
        }
        let keys_match =
            |m: &BTreeMap<usize, u32>| m.len() == sorted.len() && sorted.iter().all(|k| m.contains_key(k));
        if !keys_match(&delta) || !keys_match(&b) {
            return Err(Error::InvalidArgument(
                "delta and b must be keyed exactly by gamma".into(),
            ));
        }
        Ok(BchSpec {
            gamma: sorted,
            delta,
            b,
        })
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn delta(&self, k: usize) -> u32 {
        self.delta[&k]
    }

    pub fn offset(&self, k: usize) -> u32 {
        self.b[&k]
    }

    /// Checks directions against s and each delta_k against [2, r_k].
    pub fn validate_for(&self, shape: &Shape) -> Result<()> {
        for &k in &self.gamma {
            if k > shape.s() {
                return Err(Error::InvalidArgument(format!(
                    "direction {k} exceeds the {} coordinates of the shape",
                    shape.s()
                )));
            }
            let rk = shape.r()[k - 1];
            let d = self.delta[&k];
            if d < 2 || d > rk {
                return Err(Error::InvalidArgument(format!(
                    "delta[{k}] = {d} is outside [2, {rk}]"
                )));
            }
        }
        Ok(())
    }
}

/// The multivariate BCH code: its defining set is the union of the q-orbits
/// of every index whose k-th coordinate falls in {b_k, ..., b_k + delta_k - 2}
/// (mod r_k) for some k in gamma. Orbit closure can swallow further levels,
/// up to and including all of I for unfortunate offsets.
pub fn bch_code(shape: &Shape, spec: &BchSpec) -> Result<AbelianCode> {
    spec.validate_for(shape)?;
    let mut seed = Bits::empty(shape.size());
    for linear in 0..shape.size() {
        let idx = shape.index_at(linear);
        for &k in spec.gamma() {
            let rk = shape.r()[k - 1];
            let b = spec.offset(k) % rk;
            let span = (idx.coords[k - 1] + rk - b) % rk;
            if span <= spec.delta(k) - 2 {
                seed.set(linear);
                break;
            }
        }
    }
    let partition = orbit_partition(shape, 1)?;
    let reps: Vec<Index> = partition
        .orbits
        .iter()
        .filter(|o| o.members.iter().any(|m| seed.get(shape.linearize(m))))
        .map(|o| o.rep.clone())
        .collect();
    code_from_orbits(shape, &reps)
}

/// A dimension lower bound; `vacuous` marks values that say nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionBound {
    pub value: i64,
    pub vacuous: bool,
}

/// Counting bound on the BCH code's dimension: every swallowed level has
/// prod_{j != k} r_j indices and every orbit has at most
/// m = lcm of the orders of q modulo each r_j elements, so
/// dim >= prod r_j - m * sum_k (delta_k - 1) * prod_{j != k} r_j.
/// The value is returned untruncated; negative bounds are vacuous.
pub fn bch_dimension_bound(shape: &Shape, spec: &BchSpec) -> Result<DimensionBound> {
    spec.validate_for(shape)?;
    let mut m = 1u64;
    for &rk in shape.r() {
        m = lcm(m, mult_order(shape.q(), rk as u64)?);
    }
    let mut sum = 0i64;
    for &k in spec.gamma() {
        let others = (shape.size() / shape.r()[k - 1] as usize) as i64;
        sum += (spec.delta(k) as i64 - 1) * others;
    }
    let value = shape.size() as i64 - m as i64 * sum;
    Ok(DimensionBound {
        value,
        vacuous: value <= 0,
    })
}

/// Exact parameters for the Reed-Solomon-like case: a single direction k
/// with r_k = q - 1. Levels are then orbit-closed, so the defining set is
/// exactly the chosen stack of levels, the apparent distance equals delta_k
/// and the dimension is (r_k - delta_k + 1) * prod_{j != k} r_j. Both values
/// are cross-checked against the generic construction before returning.
pub fn rs_exact(shape: &Shape, spec: &BchSpec) -> Result<(u64, usize)> {
    spec.validate_for(shape)?;
    let &[k] = spec.gamma() else {
        return Err(Error::InvalidArgument(
            "gamma must name exactly one direction".into(),
        ));
    };
    let rk = shape.r()[k - 1] as u64;
    if rk != shape.q() - 1 {
        return Err(Error::InvalidArgument(format!(
            "direction {k} needs r_k = q - 1, got r_k = {rk} and q = {}",
            shape.q()
        )));
    }
    let delta = spec.delta(k) as u64;
    let dim = (rk - delta + 1) as usize * (shape.size() / rk as usize);
    let code = bch_code(shape, spec)?;
    if code.dimension() != dim {
        return Err(Error::Internal(format!(
            "constructed dimension {} disagrees with the closed form {dim}",
            code.dimension()
        )));
    }
    let observed = apparent_distance_alpha(&code)?;
    if observed != delta {
        return Err(Error::Internal(format!(
            "apparent distance {observed} disagrees with the designed {delta}"
        )));
    }
    Ok((delta, dim))
}

/// True when every hypercolumn of M in direction k (1-based) is all-zero or
/// all-one; equivalently, membership of (.., j, ..) in D at the k-th spot
/// depends on j alone.
pub fn is_column_constant(m: &OrbitHypermatrix, k: usize) -> Result<bool> {
    let shape = m.shape();
    if k == 0 || k > shape.s() {
        return Err(Error::InvalidArgument(format!(
            "direction {k} is outside 1..={}",
            shape.s()
        )));
    }
    let rk = shape.r()[k - 1] as usize;
    let mut count = vec![0usize; rk];
    for linear in m.support().iter_ones() {
        count[shape.index_at(linear).coords[k - 1] as usize] += 1;
    }
    let full = shape.size() / rk;
    Ok(count.iter().all(|&c| c == 0 || c == full))
}

/// Extends a nonzero cyclic code C with apparent distance > 1 to a code in
/// A_q(n, r) with n times the dimension and the same apparent distance, by
/// taking Z_n x D as the new defining set. When the standard root choice is
/// not an optimized one for C, the defining set is first remapped by the
/// smallest optimizing class multiplier so the product keeps the full
/// apparent distance.
pub fn multiply_dimension(c: &AbelianCode, n: u32) -> Result<AbelianCode> {
    let shape = c.shape();
    if shape.s() != 1 {
        return Err(Error::InvalidArgument(
            "dimension multiplication starts from a cyclic code".into(),
        ));
    }
    reject_zero(c)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if gcd(n as u64, shape.p()) != 1 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} shares a factor with the field characteristic {}",
            shape.p()
        )));
    }
    let result = apparent_distance_code(c)?;
    if result.value <= 1 {
        return Err(Error::InvalidArgument(
            "the cyclic code must have apparent distance greater than 1".into(),
        ));
    }
    let a = &result.optimized_roots[0].multiplier;
    let defining = map_defining_bits(shape, &c.matrix.defining_bits(), a);
    let product_shape = Shape::new(shape.q(), vec![n, shape.r()[0]])?;
    let mut bits = Bits::empty(product_shape.size());
    for j in defining.iter_ones() {
        for x in 0..n {
            bits.set(product_shape.linearize(&Index::new(vec![x, j as u32])));
        }
    }
    let matrix = OrbitHypermatrix::from_defining_bits(&product_shape, 1, bits);
    debug_assert_eq!(matrix.support().count_ones(), n as usize * c.dimension());
    Ok(AbelianCode { matrix })
}

/// Smallest defining-set image under the root-class action; candidates that
/// are not their own canonical form are equivalent to one already seen.
fn is_canonical(shape: &Shape, bits: &Bits, classes: &[RootClass]) -> bool {
    classes
        .iter()
        .skip(1)
        .all(|class| map_defining_bits(shape, bits, &class.multiplier) >= *bits)
}

fn subsets_with_mass(
    orbits: &[(Bits, usize)],
    suffix: &[usize],
    i: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if remaining == 0 {
        return visit(chosen);
    }
    if i == orbits.len() || suffix[i] < remaining {
        return Ok(());
    }
    if orbits[i].1 <= remaining {
        chosen.push(i);
        subsets_with_mass(orbits, suffix, i + 1, remaining - orbits[i].1, chosen, visit)?;
        chosen.pop();
    }
    subsets_with_mass(orbits, suffix, i + 1, remaining, chosen, visit)
}

/// Highest-dimension codes with apparent distance at least `target_d`.
///
/// Candidate defining sets are unions of q-orbits, visited in ascending
/// total size, so the first size with a hit is the maximal dimension; all
/// winning codes of that size are returned, one canonical representative
/// per root-class equivalence family, sorted by defining set. `budget`
/// caps the number of candidates evaluated (equivalent candidates skipped
/// by canonicalization do not count); exceeding it is an error, distinct
/// from an exhausted search returning no codes.
pub fn hd_search(shape: &Shape, target_d: u64, budget: usize) -> Result<Vec<AbelianCode>> {
    if target_d < 2 {
        return Err(Error::InvalidArgument(
            "the target apparent distance must be at least 2".into(),
        ));
    }
    let partition = orbit_partition(shape, 1)?;
    let orbits: Vec<(Bits, usize)> = partition
        .orbits
        .iter()
        .map(|o| {
            let mut bits = Bits::empty(shape.size());
            for m in &o.members {
                bits.set(shape.linearize(m));
            }
            let size = o.size();
            (bits, size)
        })
        .collect();
    let mut suffix = vec![0usize; orbits.len() + 1];
    for i in (0..orbits.len()).rev() {
        suffix[i] = suffix[i + 1] + orbits[i].1;
    }
    let classes = root_class_representatives(shape);
    let mut evaluated = 0usize;

    for mass in 1..shape.size() {
        let mut winners: Vec<AbelianCode> = Vec::new();
        let mut chosen = Vec::new();
        subsets_with_mass(&orbits, &suffix, 0, mass, &mut chosen, &mut |chosen| {
            let mut bits = Bits::empty(shape.size());
            for &i in chosen {
                bits.union_with(&orbits[i].0);
            }
            if !is_canonical(shape, &bits, &classes) {
                return Ok(());
            }
            if evaluated == budget {
                return Err(Error::BudgetExceeded {
                    needed: budget as u128 + 1,
                    budget: budget as u128,
                });
            }
            evaluated += 1;
            let code = AbelianCode {
                matrix: OrbitHypermatrix::from_defining_bits(shape, 1, bits),
            };
            if apparent_distance_code(&code)?.value >= target_d {
                winners.push(code);
            }
            Ok(())
        })?;
        if !winners.is_empty() {
            winners.sort_by_key(|c| c.defining_orbit_reps());
            return Ok(winners);
        }
    }
    Ok(Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ix(coords: &[u32]) -> Index {
        Index::new(coords.to_vec())
    }

    fn code(q: u64, r: &[u32], reps: &[&[u32]]) -> AbelianCode {
        let shape = Shape::new(q, r.to_vec()).unwrap();
        let reps: Vec<Index> = reps.iter().map(|c| ix(c)).collect();
        code_from_orbits(&shape, &reps).unwrap()
    }

    fn spec(gamma: &[usize], delta: &[u32], b: &[u32]) -> BchSpec {
        let d = gamma.iter().copied().zip(delta.iter().copied()).collect();
        let off = gamma.iter().copied().zip(b.iter().copied()).collect();
        BchSpec::new(gamma.to_vec(), d, off).unwrap()
    }

    #[test]
    fn dimensions_of_printed_codes() {
        assert_eq!(code(2, &[5, 7], &[]).dimension(), 35);
        assert_eq!(
            code(2, &[5, 7], &[&[0, 0], &[1, 0], &[0, 3]]).dimension(),
            27
        );
        assert_eq!(code(2, &[5, 7], &[&[1, 0], &[0, 3]]).dimension(), 28);
        assert_eq!(code(2, &[35], &[&[1], &[5]]).dimension(), 20);
        assert_eq!(code(2, &[35], &[&[1], &[5], &[7]]).dimension(), 16);
    }

    #[test]
    fn alpha_distance_of_worked_examples() {
        let c = code(2, &[3, 9], &[&[1, 0], &[0, 1], &[1, 3], &[1, 6]]);
        assert_eq!(apparent_distance_alpha(&c).unwrap(), 3);

        let d: Vec<&[u32]> = vec![
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 2, 0],
            &[1, 2, 1],
            &[1, 2, 2],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 0, 2],
            &[0, 1, 2],
        ];
        let c = code(2, &[3, 3, 5], &d);
        assert_eq!(apparent_distance_alpha(&c).unwrap(), 6);

        assert_eq!(apparent_distance_alpha(&code(2, &[3, 5], &[])).unwrap(), 1);
    }

    #[test]
    fn zero_code_is_rejected() {
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let all: Vec<Index> = orbit_partition(&shape, 1)
            .unwrap()
            .orbits
            .iter()
            .map(|o| o.rep.clone())
            .collect();
        let c = code_from_orbits(&shape, &all).unwrap();
        assert!(c.is_zero());
        assert!(apparent_distance_alpha(&c).is_err());
        assert!(apparent_distance_code(&c).is_err());
        assert!(bch_bound(&c).is_err());
    }

    #[test]
    fn code_distance_maximizes_over_root_classes() {
        let c = code(2, &[35], &[&[1], &[5]]);
        let res = apparent_distance_code(&c).unwrap();
        assert_eq!(res.value, 5);
        let classes: Vec<u32> = res
            .per_class
            .iter()
            .map(|(class, _)| class.multiplier.coords[0])
            .collect();
        assert_eq!(classes, vec![1, 3]);
        assert!(res.per_class.iter().all(|&(_, v)| v == 5));
        assert_eq!(res.optimized_roots.len(), 2);

        let c5 = code(2, &[5, 7], &[&[0, 0], &[1, 0], &[0, 3]]);
        assert_eq!(apparent_distance_code(&c5).unwrap().value, 4);
    }

    #[test]
    fn root_class_values_can_differ() {
        // Over Z_17 the two classes of units see different zero runs.
        let c = code(2, &[17], &[&[1]]);
        let res = apparent_distance_code(&c).unwrap();
        assert_eq!(apparent_distance_alpha(&c).unwrap(), 3);
        assert_eq!(res.value, 4);
        assert_eq!(res.optimized_roots.len(), 1);
        assert_eq!(res.optimized_roots[0].multiplier, ix(&[3]));
    }

    #[test]
    fn bch_bound_on_printed_codes() {
        let c1 = code(2, &[5, 7], &[&[0, 1], &[1, 1]]);
        assert_eq!(bch_bound(&c1).unwrap(), 3);

        let c2 = code(2, &[5, 7], &[&[0, 1], &[1, 1], &[0, 0], &[0, 3]]);
        assert_eq!(bch_bound(&c2).unwrap(), 6);

        assert_eq!(bch_bound(&code(2, &[5, 7], &[])).unwrap(), 1);
    }

    #[test]
    fn bch_code_reproduces_printed_defining_sets() {
        let shape = Shape::new(2, vec![5, 7]).unwrap();
        let c1 = bch_code(&shape, &spec(&[2], &[3], &[1])).unwrap();
        assert_eq!(c1.defining_orbit_reps(), vec![ix(&[0, 1]), ix(&[1, 1])]);

        let shape = Shape::new(2, vec![3, 5, 5]).unwrap();
        let c3 = bch_code(&shape, &spec(&[2, 3], &[2, 2], &[0, 0])).unwrap();
        let expected = vec![
            ix(&[0, 0, 0]),
            ix(&[0, 0, 1]),
            ix(&[0, 1, 0]),
            ix(&[1, 0, 0]),
            ix(&[1, 0, 1]),
            ix(&[1, 0, 2]),
            ix(&[1, 1, 0]),
            ix(&[1, 2, 0]),
        ];
        assert_eq!(c3.defining_orbit_reps(), expected);
        assert_eq!(c3.dimension(), 48);
        assert_eq!(bch_bound(&c3).unwrap(), 4);
        assert!(apparent_distance_alpha(&c3).unwrap() >= 4);
    }

    #[test]
    fn bch_level_stack_reaches_the_whole_direction() {
        // delta_2 = r_2 with offset 1 leaves exactly level 0 uncovered.
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let c = bch_code(&shape, &spec(&[2], &[5], &[1])).unwrap();
        assert_eq!(c.dimension(), 3);
        assert_eq!(bch_bound(&c).unwrap(), 5);
        assert_eq!(apparent_distance_alpha(&c).unwrap(), 5);
    }

    #[test]
    fn bch_spec_validation() {
        assert!(BchSpec::new(vec![], BTreeMap::new(), BTreeMap::new()).is_err());
        assert!(BchSpec::new(
            vec![0],
            BTreeMap::from([(0, 2)]),
            BTreeMap::from([(0, 0)])
        )
        .is_err());
        assert!(BchSpec::new(
            vec![1],
            BTreeMap::from([(2, 2)]),
            BTreeMap::from([(1, 0)])
        )
        .is_err());

        let shape = Shape::new(2, vec![5, 7]).unwrap();
        assert!(spec(&[3], &[2], &[0]).validate_for(&shape).is_err());
        assert!(spec(&[1], &[6], &[0]).validate_for(&shape).is_err());
        assert!(spec(&[1], &[1], &[0]).validate_for(&shape).is_err());
        assert!(spec(&[1], &[5], &[0]).validate_for(&shape).is_ok());
    }

    #[test]
    fn dimension_bound_matches_hand_computation() {
        let shape = Shape::new(2, vec![3, 5, 5]).unwrap();
        let bound = bch_dimension_bound(&shape, &spec(&[2, 3], &[2, 2], &[0, 0])).unwrap();
        assert_eq!(bound.value, -45);
        assert!(bound.vacuous);

        // Univariate reduction: r - m (delta - 1) with padding directions.
        let shape = Shape::new(2, vec![1, 7]).unwrap();
        let bound = bch_dimension_bound(&shape, &spec(&[2], &[2], &[0])).unwrap();
        assert_eq!(bound.value, 7 - 3);
        assert!(!bound.vacuous);
    }

    #[test]
    fn rs_exact_cases() {
        let shape = Shape::new(4, vec![3, 5]).unwrap();
        assert_eq!(rs_exact(&shape, &spec(&[1], &[2], &[0])).unwrap(), (2, 10));
        assert_eq!(rs_exact(&shape, &spec(&[1], &[3], &[0])).unwrap(), (3, 5));

        let shape = Shape::new(3, vec![2, 4]).unwrap();
        assert_eq!(rs_exact(&shape, &spec(&[1], &[2], &[0])).unwrap(), (2, 4));

        // r_k = q - 1 fails in direction 2.
        let shape = Shape::new(4, vec![3, 5]).unwrap();
        assert!(rs_exact(&shape, &spec(&[2], &[2], &[0])).is_err());
    }

    #[test]
    fn column_constancy() {
        let c5 = code(2, &[5, 7], &[&[0, 0], &[1, 0], &[0, 3]]);
        assert!(!is_column_constant(c5.matrix(), 1).unwrap());
        assert!(!is_column_constant(c5.matrix(), 2).unwrap());

        let full = code(2, &[5, 7], &[]);
        assert!(is_column_constant(full.matrix(), 1).unwrap());
        assert!(is_column_constant(full.matrix(), 2).unwrap());
        assert!(is_column_constant(full.matrix(), 3).is_err());

        let product = multiply_dimension(&code(2, &[7], &[&[1]]), 3).unwrap();
        assert!(is_column_constant(product.matrix(), 2).unwrap());
    }

    #[test]
    fn multiplying_dimension_preserves_distance() {
        let c = code(2, &[55], &[&[1], &[5]]);
        assert_eq!(c.dimension(), 25);
        assert_eq!(apparent_distance_code(&c).unwrap().value, 7);

        let c3 = multiply_dimension(&c, 3).unwrap();
        assert_eq!(c3.shape().r(), &[3, 55]);
        assert_eq!(c3.dimension(), 75);
        assert_eq!(apparent_distance_code(&c3).unwrap().value, 7);

        let c1 = multiply_dimension(&c, 1).unwrap();
        assert_eq!(c1.dimension(), 25);
        assert_eq!(apparent_distance_code(&c1).unwrap().value, 7);
    }

    #[test]
    fn multiplying_dimension_remaps_to_an_optimized_root() {
        // For D = C(1) over Z_17 only the class of 3 attains d*(C) = 4; the
        // product must be built from the remapped set to keep the value.
        let c = code(2, &[17], &[&[1]]);
        let c3 = multiply_dimension(&c, 3).unwrap();
        assert_eq!(c3.dimension(), 27);
        let reps = c3.defining_orbit_reps();
        assert!(reps.contains(&ix(&[0, 3])));
        assert_eq!(apparent_distance_code(&c3).unwrap().value, 4);
        assert_eq!(apparent_distance_alpha(&c3).unwrap(), 4);
    }

    #[test]
    fn multiply_dimension_rejections() {
        let c = code(2, &[55], &[&[1], &[5]]);
        assert!(multiply_dimension(&c, 2).is_err());
        assert!(multiply_dimension(&c, 0).is_err());
        assert!(multiply_dimension(&code(2, &[3, 5], &[&[1, 1]]), 3).is_err());
        assert!(multiply_dimension(&code(2, &[7], &[]), 3).is_err());
    }

    fn equivalent(shape: &Shape, a: &AbelianCode, b: &AbelianCode) -> bool {
        let target = b.matrix().defining_bits();
        root_class_representatives(shape).iter().any(|class| {
            map_defining_bits(shape, &a.matrix().defining_bits(), &class.multiplier) == target
        })
    }

    #[test]
    fn hd_search_finds_printed_codes() {
        let shape = Shape::new(2, vec![5, 7]).unwrap();

        let winners = hd_search(&shape, 4, 10_000).unwrap();
        assert!(!winners.is_empty());
        assert!(winners.iter().all(|c| c.dimension() == 28));
        let witness = code(2, &[5, 7], &[&[1, 0], &[0, 3]]);
        assert!(winners.iter().any(|c| equivalent(&shape, c, &witness)));

        let winners = hd_search(&shape, 6, 10_000).unwrap();
        assert!(winners.iter().all(|c| c.dimension() == 17));
        let witness = code(2, &[5, 7], &[&[0, 1], &[0, 3], &[1, 3]]);
        assert!(winners.iter().any(|c| equivalent(&shape, c, &witness)));
    }

    #[test]
    fn hd_search_smallest_orbit_wins_at_target_two() {
        let shape = Shape::new(2, vec![3, 5]).unwrap();
        let winners = hd_search(&shape, 2, 10_000).unwrap();
        assert_eq!(winners.len(), 1);
        assert_eq!(winners[0].dimension(), 14);
        assert_eq!(winners[0].defining_orbit_reps(), vec![ix(&[0, 0])]);
    }

    #[test]
    fn hd_search_budget_and_empty_results_are_distinct() {
        let shape = Shape::new(2, vec![5, 7]).unwrap();
        let err = hd_search(&shape, 6, 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));

        let shape = Shape::new(2, vec![3, 5]).unwrap();
        assert_eq!(hd_search(&shape, 16, 10_000).unwrap(), Vec::new());
    }

    proptest! {
        #[test]
        fn bound_chain_holds_on_random_codes(mask in 1u32..63) {
            let shape = Shape::new(2, vec![3, 9]).unwrap();
            let partition = orbit_partition(&shape, 1).unwrap();
            let reps: Vec<Index> = partition
                .orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, o)| o.rep.clone())
                .collect();
            let c = code_from_orbits(&shape, &reps).unwrap();
            prop_assume!(!c.is_zero());
            let lower = bch_bound(&c).unwrap();
            let alpha = apparent_distance_alpha(&c).unwrap();
            let overall = apparent_distance_code(&c).unwrap().value;
            prop_assert!(lower <= alpha);
            prop_assert!(alpha <= overall);
            prop_assert_eq!(
                c.dimension() + c.matrix().defining_bits().count_ones(),
                shape.size()
            );
        }
    }
}
