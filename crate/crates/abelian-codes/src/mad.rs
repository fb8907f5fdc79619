//! Minimum apparent distance of a nonzero orbit hypermatrix:
//! mad(M) = min { d*(P) : 0 != P <= M }.
//!
//! Instead of enumerating all 2^k - 1 nonzero lower bounds of M, the engine
//! walks descending chains built by zeroing involved hypercolumns with
//! maximum support. For 2D matrices a single chain suffices; in higher
//! dimension every involved hypercolumn additionally spawns the hypermatrices
//! that pin it to each element of its own recursive mad sequence.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::algebra::{orbit_partition, q_orbit, Index, Shape};
use crate::bits::Bits;
use crate::hypermatrix::{DStarCache, OrbitHypermatrix};
use crate::{Error, Result};

/// A hypercolumn (direction k, level b) scheduled for zeroing; k is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroConstraint {
    pub k: usize,
    pub b: u32,
}

/// One hypermatrix visited during the exploration, with its apparent
/// distance data.
#[derive(Debug, Clone)]
pub struct ExploredEntry {
    pub matrix: OrbitHypermatrix,
    pub d_star: u64,
    pub involved_pairs: Vec<(usize, u32)>,
}

/// One stage of the computation. `members` and `eta` index into `explored`:
/// `members` lists the stage's starting hypermatrices, `explored` everything
/// reached from them through involved-hypercolumn pinning, and `eta` the
/// explored entries that spawned nothing and are zeroed to seed the next
/// stage.
#[derive(Debug, Clone)]
pub struct MadStage {
    pub explored: Vec<ExploredEntry>,
    pub members: Vec<usize>,
    pub eta: Vec<usize>,
    pub m: u64,
}

#[derive(Debug, Clone)]
pub struct MadTrace {
    pub stages: Vec<MadStage>,
    /// First stage index whose running minimum equals the final value.
    pub l_prime: usize,
    /// Top-level apparent distance evaluations performed.
    pub eval_count: usize,
}

impl MadTrace {
    pub fn l(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn value(&self) -> u64 {
        self.stages.last().expect("at least one stage").m
    }
}

/// The <=-maximal N <= M whose hypercolumn (k, b) equals `target`.
///
/// Zeroes the q^t-orbits of every support index of H_M(k, b) outside the
/// target. The result's hypercolumn equals the target exactly iff the target
/// support is closed under the induced step t'; otherwise this errors.
pub fn max_support_submatrix(
    m: &OrbitHypermatrix,
    target: &OrbitHypermatrix,
    k: usize,
    b: u32,
) -> Result<OrbitHypermatrix> {
    let column = m.hypercolumn(k, b)?;
    if target.shape().r() != column.matrix.shape().r() {
        return Err(Error::InvalidArgument(format!(
            "target shape {:?} does not match hypercolumn shape {:?}",
            target.shape().r(),
            column.matrix.shape().r()
        )));
    }
    if !target.support().is_subset_of(column.matrix.support()) {
        return Err(Error::InvalidArgument(format!(
            "target is not a subhypermatrix of hypercolumn ({k}, {b})"
        )));
    }
    let shape = m.shape();
    let k0 = k - 1;
    let mut defining = m.defining_bits();
    for sub_linear in column.matrix.support().iter_ones() {
        if target.support().get(sub_linear) {
            continue;
        }
        let mut coords = column.matrix.shape().index_at(sub_linear).coords;
        coords.insert(k0, b);
        let orbit = q_orbit(shape, m.t(), &Index::new(coords))?;
        for member in &orbit.members {
            defining.set(shape.linearize(member));
        }
    }
    let n = OrbitHypermatrix::from_defining_bits(shape, m.t(), defining);
    let got = n.hypercolumn(k, b)?;
    if got.matrix.support() != target.support() {
        return Err(Error::InvalidArgument(format!(
            "target support is not closed under the induced step of hypercolumn ({k}, {b})"
        )));
    }
    Ok(n)
}

/// The <=-maximal N <= M with H_N(k, b) = 0 for every listed constraint.
/// Zeroing several hypercolumns at once agrees with iterating single
/// zeroings in any order.
pub fn max_support_zeroing(
    m: &OrbitHypermatrix,
    constraints: &[ZeroConstraint],
) -> Result<OrbitHypermatrix> {
    let shape = m.shape();
    let mut defining = m.defining_bits();
    for c in constraints {
        if c.k == 0 || c.k > shape.s() {
            return Err(Error::InvalidArgument(format!(
                "direction {} out of range 1..={}",
                c.k,
                shape.s()
            )));
        }
        if c.b >= shape.r()[c.k - 1] {
            return Err(Error::InvalidArgument(format!(
                "level {} out of range for r_{} = {}",
                c.b,
                c.k,
                shape.r()[c.k - 1]
            )));
        }
        let k0 = c.k - 1;
        for linear in m.support().iter_ones() {
            let ix = shape.index_at(linear);
            if ix.coords[k0] != c.b || defining.get(linear) {
                continue;
            }
            let orbit = q_orbit(shape, m.t(), &ix)?;
            for member in &orbit.members {
                defining.set(shape.linearize(member));
            }
        }
    }
    Ok(OrbitHypermatrix::from_defining_bits(shape, m.t(), defining))
}

fn zero_involved(
    m: &OrbitHypermatrix,
    involved: &[(usize, u32)],
) -> Result<OrbitHypermatrix> {
    let constraints: Vec<ZeroConstraint> = involved
        .iter()
        .map(|&(k, b)| ZeroConstraint { k, b })
        .collect();
    max_support_zeroing(m, &constraints)
}

/// Recursive mad sequence of a nonzero hypermatrix: the per-stage member
/// sets, shared across the exploration through `Rc`. Only the members feed
/// the pinning construction, so the running minima are not kept.
#[derive(Debug)]
struct Sequences {
    stages: Vec<Vec<OrbitHypermatrix>>,
}

struct EngineCtx {
    dcache: DStarCache,
    seq_memo: HashMap<(Vec<u32>, u64, Bits), Rc<Sequences>>,
    stage_budget: usize,
}

fn sort_key(m: &OrbitHypermatrix) -> Vec<Index> {
    m.defining_orbit_reps()
}

fn sorted_dedup(mut items: Vec<OrbitHypermatrix>) -> Vec<OrbitHypermatrix> {
    items.sort_by_cached_key(sort_key);
    items.dedup_by(|a, b| a.support() == b.support());
    items
}

impl EngineCtx {
    fn new(shape: &Shape, t: u64) -> Result<EngineCtx> {
        let orbits = orbit_partition(shape, t)?.orbits.len();
        Ok(EngineCtx {
            dcache: DStarCache::default(),
            seq_memo: HashMap::new(),
            stage_budget: orbits + 1,
        })
    }

    /// S(P): for every involved pair, pin the hypercolumn to each element of
    /// its recursive mad sequence; collect everything strictly below P.
    fn spawn_set(
        &mut self,
        p: &OrbitHypermatrix,
        involved: &[(usize, u32)],
    ) -> Result<Vec<OrbitHypermatrix>> {
        let mut out = Vec::new();
        let mut seen: HashSet<Bits> = HashSet::new();
        for &(k, b) in involved {
            let column = p.hypercolumn(k, b)?.matrix;
            let seqs = self.sequences(&column)?;
            for stage in &seqs.stages {
                for a in stage {
                    if a.support() == column.support() {
                        continue;
                    }
                    let n = max_support_submatrix(p, a, k, b)?;
                    debug_assert!(n.support() != p.support());
                    if seen.insert(n.support().clone()) {
                        out.push(n);
                    }
                }
            }
        }
        Ok(sorted_dedup(out))
    }

    /// The mad sequence of a nonzero hypermatrix of any dimension.
    fn sequences(&mut self, h: &OrbitHypermatrix) -> Result<Rc<Sequences>> {
        let key = (h.shape().r().to_vec(), h.t(), h.support().clone());
        if let Some(seq) = self.seq_memo.get(&key) {
            return Ok(Rc::clone(seq));
        }
        let s = h.shape().s();
        let seq = if s <= 1 {
            Sequences {
                stages: vec![vec![h.clone()]],
            }
        } else if s == 2 {
            let entries = self.chain_2d(h)?;
            Sequences {
                stages: entries.into_iter().map(|e| vec![e.matrix]).collect(),
            }
        } else {
            let (stages, _) = self.general_stages(vec![h.clone()], None)?;
            Sequences { stages }
        };
        let seq = Rc::new(seq);
        self.seq_memo.insert(key, Rc::clone(&seq));
        Ok(seq)
    }

    /// The 2D descending chain M_0 > M_1 > ..., zeroing all involved
    /// hypercolumns at each step and stopping as soon as some involved
    /// hypercolumn has apparent distance 1 or the next matrix is zero.
    fn chain_2d(&mut self, m: &OrbitHypermatrix) -> Result<Vec<ExploredEntry>> {
        let mut entries: Vec<ExploredEntry> = Vec::new();
        let mut cur = m.clone();
        loop {
            let res = cur.apparent_distance_with(&mut self.dcache);
            let unit_column = res.involved_pairs.iter().any(|&(k, b)| {
                let column = cur.hypercolumn(k, b).expect("involved pair in range");
                column.matrix.apparent_distance_with(&mut self.dcache).value == 1
            });
            let next = if unit_column {
                None
            } else {
                let n = zero_involved(&cur, &res.involved_pairs)?;
                (!n.is_zero()).then_some(n)
            };
            entries.push(ExploredEntry {
                matrix: cur,
                d_star: res.value,
                involved_pairs: res.involved_pairs,
            });
            if entries.len() > self.stage_budget {
                return Err(Error::Internal(
                    "2d chain exceeded the orbit-count stage budget".into(),
                ));
            }
            match next {
                Some(n) => cur = n,
                None => return Ok(entries),
            }
        }
    }

    /// Runs the staged exploration from an initial member set, recording the
    /// full trace when requested. Returns the member sets and running minima.
    #[allow(clippy::type_complexity)]
    fn general_stages(
        &mut self,
        initial: Vec<OrbitHypermatrix>,
        mut trace: Option<&mut Vec<MadStage>>,
    ) -> Result<(Vec<Vec<OrbitHypermatrix>>, Vec<u64>)> {
        let mut member_stages = Vec::new();
        let mut ms: Vec<u64> = Vec::new();
        let mut current = sorted_dedup(initial);
        while !current.is_empty() {
            if member_stages.len() >= self.stage_budget {
                return Err(Error::Internal(
                    "stage count exceeded the orbit-count budget".into(),
                ));
            }
            let mut explored: Vec<ExploredEntry> = Vec::new();
            let mut spawns: Vec<Vec<OrbitHypermatrix>> = Vec::new();
            let mut visited: HashSet<Bits> = HashSet::new();
            let mut layer = current.clone();
            for m in &layer {
                visited.insert(m.support().clone());
            }
            while !layer.is_empty() {
                let mut next_layer = Vec::new();
                for n in layer {
                    let res = n.apparent_distance_with(&mut self.dcache);
                    let spawned = self.spawn_set(&n, &res.involved_pairs)?;
                    for child in &spawned {
                        if visited.insert(child.support().clone()) {
                            next_layer.push(child.clone());
                        }
                    }
                    explored.push(ExploredEntry {
                        matrix: n,
                        d_star: res.value,
                        involved_pairs: res.involved_pairs,
                    });
                    spawns.push(spawned);
                }
                layer = sorted_dedup(next_layer);
            }
            let stage_min = explored.iter().map(|e| e.d_star).min().expect("nonempty");
            let m_i = ms.last().map_or(stage_min, |&prev| prev.min(stage_min));
            ms.push(m_i);
            let eta: Vec<usize> = (0..explored.len())
                .filter(|&i| spawns[i].is_empty())
                .collect();
            let mut next_members = Vec::new();
            for &i in &eta {
                let l = zero_involved(&explored[i].matrix, &explored[i].involved_pairs)?;
                if !l.is_zero() {
                    next_members.push(l);
                }
            }
            let next_members = sorted_dedup(next_members);
            let member_ix: Vec<usize> = (0..explored.len())
                .filter(|&i| {
                    current
                        .iter()
                        .any(|m| m.support() == explored[i].matrix.support())
                })
                .collect();
            member_stages.push(current);
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(MadStage {
                    explored,
                    members: member_ix,
                    eta,
                    m: m_i,
                });
            }
            current = next_members;
        }
        Ok((member_stages, ms))
    }
}

/// mad(M) for a nonzero 2D orbit hypermatrix: a single descending chain,
/// zeroing all involved hypercolumns at each step, stopping as soon as some
/// involved hypercolumn has apparent distance 1 or the chain hits zero.
pub fn mad_2d(m: &OrbitHypermatrix) -> Result<MadTrace> {
    if m.shape().s() != 2 {
        return Err(Error::InvalidArgument(format!(
            "mad_2d needs a 2-dimensional hypermatrix, got s = {}",
            m.shape().s()
        )));
    }
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "mad is undefined for the zero hypermatrix".into(),
        ));
    }
    let mut ctx = EngineCtx::new(m.shape(), m.t())?;
    let entries = ctx.chain_2d(m)?;
    let eval_count = entries.len();
    let mut stages: Vec<MadStage> = Vec::with_capacity(entries.len());
    let mut running = u64::MAX;
    for e in entries {
        running = running.min(e.d_star);
        stages.push(MadStage {
            explored: vec![e],
            members: vec![0],
            eta: vec![0],
            m: running,
        });
    }
    let value = stages.last().expect("at least one stage").m;
    let l_prime = stages.iter().position(|s| s.m == value).expect("some stage attains the value");
    debug_assert_eq!(stages[l_prime].explored[0].d_star, value);
    Ok(MadTrace {
        stages,
        l_prime,
        eval_count,
    })
}

/// mad(M) for a nonzero orbit hypermatrix of any dimension.
///
/// s = 1 reduces to the apparent distance, s = 2 delegates to the 2D chain,
/// and s >= 3 runs the staged exploration.
pub fn mad(m: &OrbitHypermatrix) -> Result<MadTrace> {
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "mad is undefined for the zero hypermatrix".into(),
        ));
    }
    match m.shape().s() {
        1 => {
            let res = m.apparent_distance();
            Ok(MadTrace {
                stages: vec![MadStage {
                    explored: vec![ExploredEntry {
                        matrix: m.clone(),
                        d_star: res.value,
                        involved_pairs: res.involved_pairs,
                    }],
                    members: vec![0],
                    eta: vec![0],
                    m: res.value,
                }],
                l_prime: 0,
                eval_count: 1,
            })
        }
        2 => mad_2d(m),
        _ => {
            let mut ctx = EngineCtx::new(m.shape(), m.t())?;
            let mut stages = Vec::new();
            ctx.general_stages(vec![m.clone()], Some(&mut stages))?;
            let eval_count = stages.iter().map(|s| s.explored.len()).sum();
            let value = stages.last().expect("at least one stage").m;
            let l_prime = stages
                .iter()
                .position(|s| s.m == value)
                .expect("some stage attains the value");
            Ok(MadTrace {
                stages,
                l_prime,
                eval_count,
            })
        }
    }
}
