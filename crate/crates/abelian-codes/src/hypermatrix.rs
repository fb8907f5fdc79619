//! Orbit hypermatrices and their apparent distance.
//!
//! An orbit hypermatrix is a 0/1 array over I = Z_{r_1} x ... x Z_{r_s} whose
//! zero set (the defining set) is a union of q^t-orbits. Entries are stored
//! as a support bit set over the row-major linearization of I.
//!
//! Directions k are numbered 1..=s in the public API, matching the (k, b)
//! hypercolumn pair notation used in results and traces.

use std::collections::HashMap;

use crate::algebra::{q_orbit, Index, Shape};
use crate::bits::Bits;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitHypermatrix {
    shape: Shape,
    t: u64,
    support: Bits,
}

/// Outcome of an apparent distance computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApDistResult {
    pub value: u64,
    /// d*_k for each direction, indexed k-1.
    pub per_direction: Vec<u64>,
    /// All (k, b) with (omega_M(k,b) + 1) * d*(H_M(k,b)) = value, sorted.
    pub involved_pairs: Vec<(usize, u32)>,
}

/// A hypercolumn H_M(k, b), reindexed as an (s-1)-dimensional orbit
/// hypermatrix with step t' = t * |C_{q^t}(b) mod r_k|.
#[derive(Debug, Clone)]
pub struct Hypercolumn {
    pub k: usize,
    pub b: u32,
    pub matrix: OrbitHypermatrix,
}

impl OrbitHypermatrix {
    /// Builds M(D) from an explicit defining set, rejecting sets that are not
    /// unions of q^t-orbits.
    pub fn afford(shape: &Shape, t: u64, defining_set: &[Index]) -> Result<OrbitHypermatrix> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        let mut defining = Bits::empty(shape.size());
        for ix in defining_set {
            if !shape.contains(ix) {
                return Err(Error::InvalidArgument(format!(
                    "index {:?} outside shape r = {:?}",
                    ix.coords,
                    shape.r()
                )));
            }
            defining.set(shape.linearize(ix));
        }
        let mult = shape.step_multipliers(t);
        for linear in defining.iter_ones() {
            let ix = shape.index_at(linear);
            let image: Vec<u32> = ix
                .coords
                .iter()
                .zip(shape.r())
                .zip(&mult)
                .map(|((&c, &rj), &m)| ((c as u64 * m) % rj as u64) as u32)
                .collect();
            let image = Index::new(image);
            if !defining.get(shape.linearize(&image)) {
                return Err(Error::NotOrbitClosed(image.coords));
            }
        }
        Ok(OrbitHypermatrix {
            shape: shape.clone(),
            t,
            support: defining.complement(),
        })
    }

    /// Builds M(D) where D is the union of the q^t-orbits of the given
    /// representatives; closed by construction.
    pub fn from_orbit_reps(shape: &Shape, t: u64, reps: &[Index]) -> Result<OrbitHypermatrix> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        let mut defining = Bits::empty(shape.size());
        for rep in reps {
            let orbit = q_orbit(shape, t, rep)?;
            for m in &orbit.members {
                defining.set(shape.linearize(m));
            }
        }
        Ok(OrbitHypermatrix {
            shape: shape.clone(),
            t,
            support: defining.complement(),
        })
    }

    pub(crate) fn from_defining_bits(shape: &Shape, t: u64, defining: Bits) -> OrbitHypermatrix {
        debug_assert_eq!(defining.len(), shape.size());
        let hm = OrbitHypermatrix {
            shape: shape.clone(),
            t,
            support: defining.complement(),
        };
        debug_assert!(hm.is_orbit_closed());
        hm
    }

    fn is_orbit_closed(&self) -> bool {
        let mult = self.shape.step_multipliers(self.t);
        self.support.iter_ones().all(|linear| {
            let ix = self.shape.index_at(linear);
            let image: Vec<u32> = ix
                .coords
                .iter()
                .zip(self.shape.r())
                .zip(&mult)
                .map(|((&c, &rj), &m)| ((c as u64 * m) % rj as u64) as u32)
                .collect();
            self.support.get(self.shape.linearize(&Index::new(image)))
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn support(&self) -> &Bits {
        &self.support
    }

    pub fn defining_bits(&self) -> Bits {
        self.support.complement()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Sorted orbit representatives of the defining set.
    pub fn defining_orbit_reps(&self) -> Vec<Index> {
        let defining = self.defining_bits();
        let mut seen = Bits::empty(defining.len());
        let mut reps = Vec::new();
        for linear in defining.iter_ones() {
            if seen.get(linear) {
                continue;
            }
            let orbit = q_orbit(&self.shape, self.t, &self.shape.index_at(linear))
                .expect("members of a stored defining set are in range");
            for m in &orbit.members {
                seen.set(self.shape.linearize(m));
            }
            reps.push(orbit.rep);
        }
        reps.sort();
        reps
    }

    /// M(D) <= M(D') iff supp(M) is contained in supp(M'), iff D' is
    /// contained in D. Both sides must share shape and step.
    pub fn leq(&self, other: &OrbitHypermatrix) -> bool {
        assert_eq!(self.shape, other.shape, "shape mismatch in leq");
        assert_eq!(self.t, other.t, "step mismatch in leq");
        self.support.is_subset_of(&other.support)
    }

    fn coord_of(&self, linear: usize, k0: usize) -> u32 {
        let mut rem = linear;
        for j in (k0 + 1..self.shape.s()).rev() {
            rem /= self.shape.r()[j] as usize;
        }
        (rem % self.shape.r()[k0] as usize) as u32
    }

    /// Levels b (in direction k, 1-based) whose hypercolumn is nonzero.
    fn nonzero_levels(&self, k: usize) -> Vec<bool> {
        let k0 = k - 1;
        let mut nz = vec![false; self.shape.r()[k0] as usize];
        for linear in self.support.iter_ones() {
            nz[self.coord_of(linear, k0) as usize] = true;
        }
        nz
    }

    /// omega_M(k, b): length of the cyclic run of zero hypercolumns at levels
    /// b+1, b+2, ...; only defined when H_M(k, b) is nonzero.
    pub fn omega(&self, k: usize, b: u32) -> Result<u64> {
        self.check_pair(k, b)?;
        let nz = self.nonzero_levels(k);
        if !nz[b as usize] {
            return Err(Error::ZeroHypercolumn { k, b });
        }
        Ok(run_after(&nz, b as usize))
    }

    fn check_pair(&self, k: usize, b: u32) -> Result<()> {
        if k == 0 || k > self.shape.s() {
            return Err(Error::InvalidArgument(format!(
                "direction {k} out of range 1..={}",
                self.shape.s()
            )));
        }
        if b >= self.shape.r()[k - 1] {
            return Err(Error::InvalidArgument(format!(
                "level {b} out of range for r_{k} = {}",
                self.shape.r()[k - 1]
            )));
        }
        Ok(())
    }

    /// The hypercolumn H_M(k, b) as an (s-1)-dimensional orbit hypermatrix.
    ///
    /// The step grows to t' = t * |C_{q^t}(b) mod r_k|, the smallest power
    /// of q^t that fixes level b.
    pub fn hypercolumn(&self, k: usize, b: u32) -> Result<Hypercolumn> {
        self.check_pair(k, b)?;
        let k0 = k - 1;
        let rk = self.shape.r()[k0] as u64;
        let qt = crate::algebra::modpow(self.shape.q(), self.t, rk);
        let mut coset_size = 1u64;
        let mut level = b as u64 * qt % rk;
        while level != b as u64 {
            level = level * qt % rk;
            coset_size += 1;
        }
        let sub_shape = self.shape.drop_coordinate(k0);
        let mut sub_support = Bits::empty(sub_shape.size());
        for linear in self.support.iter_ones() {
            let ix = self.shape.index_at(linear);
            if ix.coords[k0] == b {
                let mut coords = ix.coords;
                coords.remove(k0);
                sub_support.set(sub_shape.linearize(&Index::new(coords)));
            }
        }
        let matrix = OrbitHypermatrix {
            shape: sub_shape,
            t: self.t * coset_size,
            support: sub_support,
        };
        debug_assert!(matrix.is_orbit_closed());
        Ok(Hypercolumn { k, b, matrix })
    }

    /// Apparent distance with per-direction maxima and involved pairs.
    pub fn apparent_distance(&self) -> ApDistResult {
        let mut cache = DStarCache::default();
        self.apparent_distance_with(&mut cache)
    }

    /// As `apparent_distance`, reusing a memo table across calls.
    pub fn apparent_distance_with(&self, cache: &mut DStarCache) -> ApDistResult {
        let s = self.shape.s();
        if self.is_zero() {
            return ApDistResult {
                value: 0,
                per_direction: vec![0; s],
                involved_pairs: Vec::new(),
            };
        }
        if s == 0 {
            return ApDistResult {
                value: 1,
                per_direction: Vec::new(),
                involved_pairs: Vec::new(),
            };
        }
        let r = self.shape.r();
        let mut per_direction = vec![0u64; s];
        let mut contributions = Vec::new();
        for k in 1..=s {
            let nz = self.nonzero_levels(k);
            let mut sub_r = r.to_vec();
            sub_r.remove(k - 1);
            for b in 0..r[k - 1] {
                if !nz[b as usize] {
                    continue;
                }
                let omega = run_after(&nz, b as usize);
                let sub = self.slice_bits(k - 1, b);
                let val = (omega + 1) * cache.dstar(&sub_r, &sub);
                per_direction[k - 1] = per_direction[k - 1].max(val);
                contributions.push((k, b, val));
            }
        }
        let value = *per_direction.iter().max().expect("s >= 1");
        let mut involved_pairs: Vec<(usize, u32)> = contributions
            .into_iter()
            .filter(|&(_, _, v)| v == value)
            .map(|(k, b, _)| (k, b))
            .collect();
        involved_pairs.sort();
        ApDistResult {
            value,
            per_direction,
            involved_pairs,
        }
    }

    fn slice_bits(&self, k0: usize, b: u32) -> Bits {
        let sub_shape = self.shape.drop_coordinate(k0);
        let mut sub = Bits::empty(sub_shape.size());
        for linear in self.support.iter_ones() {
            let ix = self.shape.index_at(linear);
            if ix.coords[k0] == b {
                let mut coords = ix.coords;
                coords.remove(k0);
                sub.set(sub_shape.linearize(&Index::new(coords)));
            }
        }
        sub
    }
}

fn run_after(nonzero: &[bool], b: usize) -> u64 {
    let n = nonzero.len();
    let mut omega = 0u64;
    for step in 1..n {
        if nonzero[(b + step) % n] {
            break;
        }
        omega += 1;
    }
    omega
}

/// Memo table for apparent distance values, keyed by (moduli, support).
///
/// The step t is deliberately absent from the key: the apparent distance of a
/// hypermatrix depends only on its support.
#[derive(Debug, Default)]
pub struct DStarCache {
    map: HashMap<(Vec<u32>, Bits), u64>,
}

impl DStarCache {
    fn dstar(&mut self, r: &[u32], support: &Bits) -> u64 {
        if support.is_empty() {
            return 0;
        }
        if r.is_empty() {
            return 1;
        }
        let key = (r.to_vec(), support.clone());
        if let Some(&v) = self.map.get(&key) {
            return v;
        }
        let mut best = 0u64;
        let strides = strides_of(r);
        for k0 in 0..r.len() {
            let rk = r[k0] as usize;
            let mut nz = vec![false; rk];
            for linear in support.iter_ones() {
                nz[linear / strides[k0] % rk] = true;
            }
            let mut sub_r = r.to_vec();
            sub_r.remove(k0);
            for b in 0..rk {
                if !nz[b] {
                    continue;
                }
                let omega = run_after(&nz, b);
                let sub = project(r, &strides, support, k0, b);
                best = best.max((omega + 1) * self.dstar(&sub_r, &sub));
            }
        }
        self.map.insert(key, best);
        best
    }
}

fn strides_of(r: &[u32]) -> Vec<usize> {
    let mut strides = vec![1usize; r.len()];
    for k in (0..r.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * r[k + 1] as usize;
    }
    strides
}

fn project(r: &[u32], strides: &[usize], support: &Bits, k0: usize, b: usize) -> Bits {
    let sub_size: usize = r
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k0)
        .map(|(_, &rj)| rj as usize)
        .product();
    let mut sub = Bits::empty(sub_size);
    for linear in support.iter_ones() {
        if linear / strides[k0] % r[k0] as usize != b {
            continue;
        }
        // Remove the k0 digit from the mixed-radix expansion.
        let high = linear / (strides[k0] * r[k0] as usize);
        let low = linear % strides[k0];
        sub.set(high * strides[k0] + low);
    }
    sub
}
