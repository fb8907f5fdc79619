//! Ambient index algebra: shapes, multi-indices, q^t-orbits, cyclotomic
//! cosets and root-class representatives.
//!
//! Throughout, the ambient index set is I = Z_{r_1} x ... x Z_{r_s} and the
//! characteristic constraint gcd(r_j, q) = 1 holds for every j, so
//! multiplication by q^t acts as a permutation on I.

pub mod field;

pub use field::{splitting_field, Fe, Field, SplittingField};

use crate::{Error, Result};

/// Greatest common divisor; handy for checking that a multiplier is a unit.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub(crate) fn modpow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = base as u128 % modulus as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus as u128;
        }
        base = base * base % modulus as u128;
        exp >>= 1;
    }
    acc as u64
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Multiplicative order of `a` modulo `modulus`.
///
/// Errors unless gcd(a, modulus) = 1. The order modulo 1 is 1.
pub fn mult_order(a: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if modulus == 1 {
        return Ok(1);
    }
    if gcd(a % modulus, modulus) != 1 {
        return Err(Error::InvalidArgument(format!(
            "{a} is not a unit modulo {modulus}"
        )));
    }
    let mut acc = a % modulus;
    let mut ord = 1u64;
    while acc != 1 {
        acc = (acc as u128 * a as u128 % modulus as u128) as u64;
        ord += 1;
    }
    Ok(ord)
}

/// A point of the ambient index set I = Z_{r_1} x ... x Z_{r_s}.
///
/// Ordering is lexicographic on coordinates; that order fixes every canonical
/// representative choice in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    pub coords: Vec<u32>,
}

impl Index {
    pub fn new(coords: Vec<u32>) -> Self {
        Index { coords }
    }

    pub fn s(&self) -> usize {
        self.coords.len()
    }
}

impl From<Vec<u32>> for Index {
    fn from(coords: Vec<u32>) -> Self {
        Index { coords }
    }
}

/// Ambient shape: the field size q and the componentwise moduli r.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    q: u64,
    p: u64,
    r: Vec<u32>,
}

impl Shape {
    /// Validates that q > 1 is a prime power and gcd(r_j, q) = 1 for all j.
    pub fn new(q: u64, r: Vec<u32>) -> Result<Shape> {
        if q < 2 {
            return Err(Error::InvalidShape(format!("q = {q} must be at least 2")));
        }
        let p = smallest_prime_factor(q);
        let mut m = q;
        while m % p == 0 {
            m /= p;
        }
        if m != 1 {
            return Err(Error::InvalidShape(format!("q = {q} is not a prime power")));
        }
        if r.is_empty() {
            return Err(Error::InvalidShape("r must have at least one entry".into()));
        }
        let mut size = 1usize;
        for &rj in &r {
            if rj == 0 {
                return Err(Error::InvalidShape("every r_j must be positive".into()));
            }
            if gcd(rj as u64, q) != 1 {
                return Err(Error::InvalidShape(format!(
                    "gcd(r_j, q) must be 1, violated by r_j = {rj}, q = {q}"
                )));
            }
            size = size
                .checked_mul(rj as usize)
                .ok_or_else(|| Error::InvalidShape("index set size overflows".into()))?;
        }
        let _ = size;
        Ok(Shape { q, p, r })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Characteristic: the prime p with q = p^e.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// Number of variables s.
    pub fn s(&self) -> usize {
        self.r.len()
    }

    /// |I| = r_1 ... r_s.
    pub fn size(&self) -> usize {
        self.r.iter().map(|&rj| rj as usize).product()
    }

    /// Row-major linearization: i maps to sum_k i_k * prod_{j>k} r_j.
    pub fn linearize(&self, index: &Index) -> usize {
        assert_eq!(index.s(), self.s(), "index arity mismatch");
        let mut acc = 0usize;
        for (k, &c) in index.coords.iter().enumerate() {
            assert!(c < self.r[k], "coordinate {c} out of range r_{k} = {}", self.r[k]);
            acc = acc * self.r[k] as usize + c as usize;
        }
        acc
    }

    pub fn index_at(&self, mut linear: usize) -> Index {
        assert!(linear < self.size());
        let mut coords = vec![0u32; self.s()];
        for k in (0..self.s()).rev() {
            let rk = self.r[k] as usize;
            coords[k] = (linear % rk) as u32;
            linear /= rk;
        }
        Index { coords }
    }

    pub fn contains(&self, index: &Index) -> bool {
        index.s() == self.s()
            && index
                .coords
                .iter()
                .zip(&self.r)
                .all(|(&c, &rj)| c < rj)
    }

    /// Componentwise multipliers (q^t mod r_1, ..., q^t mod r_s).
    pub fn step_multipliers(&self, t: u64) -> Vec<u64> {
        self.r
            .iter()
            .map(|&rj| modpow(self.q, t, rj as u64))
            .collect()
    }

    /// The shape with coordinate k (0-based) removed. Dropping the last
    /// coordinate yields the 0-dimensional shape with |I| = 1; it cannot be
    /// built through `new` and only arises from hypercolumn extraction.
    pub fn drop_coordinate(&self, k: usize) -> Shape {
        assert!(k < self.s());
        let mut r = self.r.clone();
        r.remove(k);
        Shape {
            q: self.q,
            p: self.p,
            r,
        }
    }
}

/// A q^t-orbit Q_t(a) = { (a_1 q^{ti}, ..., a_s q^{ti}) : i >= 0 }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub shape: Shape,
    pub t: u64,
    /// Sorted ascending (lexicographic); the first member is the representative.
    pub members: Vec<Index>,
    pub rep: Index,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Computes the q^t-orbit of `a` under componentwise multiplication by q^t.
pub fn q_orbit(shape: &Shape, t: u64, a: &Index) -> Result<Orbit> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    if !shape.contains(a) {
        return Err(Error::InvalidArgument(format!(
            "index {:?} outside shape r = {:?}",
            a.coords,
            shape.r()
        )));
    }
    let mult = shape.step_multipliers(t);
    let mut members = Vec::new();
    let mut cur = a.clone();
    loop {
        members.push(cur.clone());
        let next: Vec<u32> = cur
            .coords
            .iter()
            .zip(shape.r())
            .zip(&mult)
            .map(|((&c, &rj), &m)| ((c as u64 * m) % rj as u64) as u32)
            .collect();
        cur = Index::new(next);
        if cur == *a {
            break;
        }
    }
    members.sort();
    let rep = members[0].clone();
    Ok(Orbit {
        shape: shape.clone(),
        t,
        members,
        rep,
    })
}

/// The cyclotomic coset C_{q^t}(b) modulo r, sorted ascending.
pub fn cyclotomic_coset(b: u32, r: u32, q: u64, t: u64) -> Result<Vec<u32>> {
    let shape = Shape::new(q, vec![r])?;
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let orbit = q_orbit(&shape, t, &Index::new(vec![b % r]))?;
    Ok(orbit.members.into_iter().map(|ix| ix.coords[0]).collect())
}

/// The partition of I into q^t-orbits.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    pub shape: Shape,
    pub t: u64,
    /// Sorted by representative.
    pub orbits: Vec<Orbit>,
    orbit_of: Vec<usize>,
}

impl OrbitPartition {
    /// Position (within `orbits`) of the orbit containing `index`.
    pub fn orbit_pos(&self, index: &Index) -> usize {
        self.orbit_of[self.shape.linearize(index)]
    }

    pub fn orbit_containing(&self, index: &Index) -> &Orbit {
        &self.orbits[self.orbit_pos(index)]
    }
}

pub fn orbit_partition(shape: &Shape, t: u64) -> Result<OrbitPartition> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let size = shape.size();
    let mut orbit_of = vec![usize::MAX; size];
    let mut orbits = Vec::new();
    for linear in 0..size {
        if orbit_of[linear] != usize::MAX {
            continue;
        }
        let orbit = q_orbit(shape, t, &shape.index_at(linear))?;
        let pos = orbits.len();
        for m in &orbit.members {
            orbit_of[shape.linearize(m)] = pos;
        }
        orbits.push(orbit);
    }
    // Visiting linear indices in ascending order already yields orbits sorted
    // by representative, because each orbit is first seen at its minimum.
    debug_assert!(orbits.windows(2).all(|w| w[0].rep < w[1].rep));
    Ok(OrbitPartition {
        shape: shape.clone(),
        t,
        orbits,
        orbit_of,
    })
}

/// A class of roots of unity under the action a -> q * a, named by a unit
/// multiplier tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootClass {
    pub multiplier: Index,
}

/// Applies a unit multiplier componentwise to an index.
pub fn apply_multiplier(shape: &Shape, a: &Index, x: &Index) -> Index {
    let coords = a
        .coords
        .iter()
        .zip(&x.coords)
        .zip(shape.r())
        .map(|((&aj, &xj), &rj)| ((aj as u64 * xj as u64) % rj as u64) as u32)
        .collect();
    Index::new(coords)
}

/// Representatives of the unit multiplier tuples modulo the relation
/// a ~ q * a (componentwise). The identity multiplier comes first.
///
/// Every class is represented by its lexicographically smallest member and
/// the list is sorted ascending.
pub fn root_class_representatives(shape: &Shape) -> Vec<RootClass> {
    let size = shape.size();
    let mut seen = vec![false; size];
    let mut reps = Vec::new();
    for linear in 0..size {
        if seen[linear] {
            continue;
        }
        let a = shape.index_at(linear);
        let unit = a
            .coords
            .iter()
            .zip(shape.r())
            .all(|(&aj, &rj)| gcd(aj as u64, rj as u64) == 1);
        if !unit {
            continue;
        }
        // Walk the cycle a, qa, q^2 a, ... ; the first visit is the minimum.
        let mut cur = a.clone();
        loop {
            seen[shape.linearize(&cur)] = true;
            let next: Vec<u32> = cur
                .coords
                .iter()
                .zip(shape.r())
                .map(|(&c, &rj)| ((c as u64 * shape.q()) % rj as u64) as u32)
                .collect();
            cur = Index::new(next);
            if cur == a {
                break;
            }
        }
        reps.push(RootClass { multiplier: a });
    }
    reps
}
