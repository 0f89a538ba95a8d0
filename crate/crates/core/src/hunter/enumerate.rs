//! Odometer enumeration of the Hunter boxes with staged pruning, plus
//! prefix-block sharding and checkpoint serialization for resumable jobs.
//!
//! The enumeration order is a fixed odometer over (t, a_{n-2}, ..., a_0)
//! with a_0 innermost. The (t, a_{n-2}) pairs — "prefix blocks" — form a
//! global ordered list; shards are contiguous slices of it and checkpoints
//! record how many blocks of a slice are complete, so any abort can resume
//! without loss and shard outputs concatenate to the unsharded output.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{Float, One};

use crate::exactmath::{count_real_roots, is_irreducible_over_q, IntPoly};

use super::bounds::{coefficient_bounds, t2_bound, HunterBox};
use super::signature::SignatureSet;
use super::HunterError;

/// One (trace, a_{n-2}) block of the global enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prefix {
    pub trace: u32,
    /// The fixed value of a_{n-2} within the block.
    pub second: i64,
}

/// The full ordered list of (t, a_{n-2}) prefix blocks for a job: traces
/// ascending, a_{n-2} ascending within each trace, restricted to the
/// coefficient box and to the second power-sum window |s_2| <= T2 (the
/// cheapest prune, applied while the order is laid out). Sharding and
/// checkpoint cursors index into this list.
pub fn prefix_blocks(degree: u32, bound: f64) -> Result<Vec<Prefix>, HunterError> {
    let mut out = Vec::new();
    for trace in 0..=degree / 2 {
        let t2 = t2_bound(degree, bound, trace)?;
        let bx = coefficient_bounds(degree, trace, t2);
        let (lo, hi) = bx.second_coefficient_range();
        for second in lo..=hi {
            out.push(Prefix { trace, second });
        }
    }
    Ok(out)
}

/// A resumable slice of one enumeration job.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationTask {
    pub degree: u32,
    /// Discriminant bound X the boxes were built for.
    pub bound: f64,
    pub signatures: SignatureSet,
    /// Which shard this is (0 for an unsharded job).
    pub slice_id: u32,
    /// How many shards the parent job was split into (1 if unsharded).
    pub shard_count: u32,
    /// Half-open range [slice_start, slice_end) into the global
    /// prefix-block list.
    pub slice_start: u64,
    pub slice_end: u64,
    /// Prefix blocks of this slice already fully processed and durably
    /// acknowledged by the sink; enumeration resumes after them.
    pub completed: u64,
    /// Enables the optional deeper power-sum subtree prunes. The window
    /// |s_k| <= T2^{k/2} (k >= 3) is always enforced on assembled
    /// candidates; with the flag on, the same windows additionally clip
    /// coefficient ranges at the interior odometer levels. Purely an
    /// optimization: the emitted stream is identical with it on or off.
    pub deep_prune: bool,
}

impl EnumerationTask {
    /// A fresh unsharded task covering the whole box of the job.
    pub fn new(
        degree: u32,
        bound: f64,
        signatures: SignatureSet,
    ) -> Result<EnumerationTask, HunterError> {
        let blocks = prefix_blocks(degree, bound)?;
        Ok(EnumerationTask {
            degree,
            bound,
            signatures,
            slice_id: 0,
            shard_count: 1,
            slice_start: 0,
            slice_end: blocks.len() as u64,
            completed: 0,
            deep_prune: true,
        })
    }

    /// Last completed prefix block, if any (the checkpoint cursor).
    pub fn cursor(&self) -> Option<Prefix> {
        if self.completed == 0 {
            return None;
        }
        let blocks = prefix_blocks(self.degree, self.bound).ok()?;
        blocks
            .get((self.slice_start + self.completed - 1) as usize)
            .copied()
    }
}

/// Splits a task into `parts` contiguous slices of its prefix-block range.
/// Slices may be empty when `parts` exceeds the number of blocks; their
/// concatenated outputs equal the parent task's output exactly.
pub fn shard(task: &EnumerationTask, parts: u32) -> Vec<EnumerationTask> {
    assert!(parts >= 1, "shard count must be positive");
    if parts == 1 {
        return alloc::vec![task.clone()];
    }
    let total = task.slice_end - task.slice_start;
    let parts64 = parts as u64;
    (0..parts64)
        .map(|i| EnumerationTask {
            degree: task.degree,
            bound: task.bound,
            signatures: task.signatures.clone(),
            slice_id: i as u32,
            shard_count: parts,
            slice_start: task.slice_start + total * i / parts64,
            slice_end: task.slice_start + total * (i + 1) / parts64,
            completed: 0,
            deep_prune: task.deep_prune,
        })
        .collect()
}

/// Consumer of surviving candidates and durable progress marks.
pub trait CandidateSink {
    type Error;

    /// Receives one surviving polynomial with its Sturm signature.
    fn accept(&mut self, poly: &IntPoly, r1: u32, r2: u32) -> Result<(), Self::Error>;

    /// All candidates of one more prefix block have been delivered;
    /// `completed` blocks of the slice are now done. A durable consumer
    /// persists everything received so far before returning: the task
    /// cursor only advances past the block once this call succeeds, so a
    /// failed commit is replayed on resume.
    fn block_complete(&mut self, last: Prefix, completed: u64) -> Result<(), Self::Error> {
        let _ = (last, completed);
        Ok(())
    }
}

/// In-memory sink retaining every emission, for tests and small jobs.
#[derive(Clone, Debug, Default)]
pub struct CollectSink {
    pub polys: Vec<(IntPoly, u32, u32)>,
}

impl CandidateSink for CollectSink {
    type Error = core::convert::Infallible;

    fn accept(&mut self, poly: &IntPoly, r1: u32, r2: u32) -> Result<(), Self::Error> {
        self.polys.push((poly.clone(), r1, r2));
        Ok(())
    }
}

/// Tallies from one `enumerate_candidates` call.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationSummary {
    /// Fully assembled coefficient vectors inspected.
    pub visited: u64,
    /// Rejected by the constant-term screen (a_0 = 0).
    pub cheap_rejected: u64,
    /// Rejected by the power-sum windows |s_k| <= T2^{k/2} at assembly.
    pub power_sum_rejected: u64,
    /// Coefficient choices cut by the optional early power-sum prunes
    /// before assembly (counted per skipped subtree root, not per leaf).
    pub deep_pruned: u64,
    pub non_squarefree: u64,
    pub reducible: u64,
    pub signature_rejected: u64,
    pub emitted: u64,
    /// Prefix blocks of the slice completed, cumulative across resumes.
    pub blocks_done: u64,
}

/// Walks every monic integer polynomial of the task's slice in odometer
/// order and applies, in order: the cheap screens (power-sum windows —
/// s_2 via the block layout, s_k at assembly — nonzero constant term,
/// unit content, which is automatic for monic candidates), squarefreeness,
/// irreducibility over Q, and the Sturm signature filter. Survivors go to
/// the sink. The task's `completed` cursor advances only after the sink
/// acknowledges a block, so aborting at any point and calling again loses
/// and duplicates nothing that the sink committed.
pub fn enumerate_candidates<S: CandidateSink>(
    task: &mut EnumerationTask,
    sink: &mut S,
) -> Result<EnumerationSummary, S::Error> {
    let blocks = prefix_blocks(task.degree, task.bound)
        .expect("task degree was validated at construction");
    assert!(task.slice_end <= blocks.len() as u64);
    assert!(task.slice_start + task.completed <= task.slice_end);
    let n = task.degree as usize;

    let mut summary = EnumerationSummary {
        blocks_done: task.completed,
        ..EnumerationSummary::default()
    };

    // One box per trace, built lazily.
    let mut boxes: Vec<Option<HunterBox>> = alloc::vec![None; n / 2 + 1];

    for idx in (task.slice_start + task.completed)..task.slice_end {
        let pref = blocks[idx as usize];
        if boxes[pref.trace as usize].is_none() {
            let t2 = t2_bound(task.degree, task.bound, pref.trace)
                .expect("degree already validated");
            boxes[pref.trace as usize] = Some(coefficient_bounds(task.degree, pref.trace, t2));
        }
        let bx = boxes[pref.trace as usize].as_ref().unwrap();

        walk_block(task, bx, pref, sink, &mut summary)?;

        let completed = idx + 1 - task.slice_start;
        sink.block_complete(pref, completed)?;
        task.completed = completed;
        summary.blocks_done = completed;
    }
    Ok(summary)
}

/// Enumerates one (t, a_{n-2}) block.
fn walk_block<S: CandidateSink>(
    task: &EnumerationTask,
    bx: &HunterBox,
    pref: Prefix,
    sink: &mut S,
    sum: &mut EnumerationSummary,
) -> Result<(), S::Error> {
    let n = task.degree as usize;
    let mut coeffs = alloc::vec![0i64; n];
    coeffs[n - 1] = -(pref.trace as i64);
    coeffs[n - 2] = pref.second;

    let mut psums = alloc::vec![0i128; n];
    psums[0] = pref.trace as i128;
    psums[1] = (pref.trace as i128) * (pref.trace as i128) - 2 * pref.second as i128;

    // thresh[k-1] = floor(T2^{k/2}), when it fits a 128-bit word; the tiny
    // upward nudge keeps the floor from undershooting across the powf
    // rounding of an exactly-integer threshold.
    let thresh: Vec<Option<i128>> = (1..=n)
        .map(|k| {
            let t = Float::powf(bx.t2, k as f64 / 2.0) * (1.0 + 1.0e-12);
            (t < 1.5e38).then(|| t as i128)
        })
        .collect();

    let mut walker = Walker {
        degree: n,
        deep: task.deep_prune,
        signatures: &task.signatures,
        bounds: &bx.bounds,
        thresh,
        coeffs,
        psums,
        scratch: alloc::vec![0i64; n + 1],
        sink,
        sum,
    };
    walker.scratch[n] = 1;
    walker.descend(3, 2)
}

struct Walker<'a, S: CandidateSink> {
    degree: usize,
    deep: bool,
    signatures: &'a SignatureSet,
    bounds: &'a [i64],
    thresh: Vec<Option<i128>>,
    /// a_0 .. a_{n-1}, leading coefficient 1 implied.
    coeffs: Vec<i64>,
    /// Newton power sums s_1 .. s_n of the root multiset; entries beyond
    /// the validity depth passed through `descend` are stale.
    psums: Vec<i128>,
    /// Reusable full coefficient vector (length n+1, last entry 1).
    scratch: Vec<i64>,
    sink: &'a mut S,
    sum: &'a mut EnumerationSummary,
}

impl<'a, S: CandidateSink> Walker<'a, S> {
    /// Chooses a_{n-k} for k = `level`, recursing down to a_0; `valid` is
    /// how many leading power sums are currently tracked. Power-sum
    /// tracking stops (harmlessly) whenever a threshold or intermediate
    /// value would leave the 128-bit range.
    fn descend(&mut self, level: usize, valid: usize) -> Result<(), S::Error> {
        let n = self.degree;
        if level > n {
            return self.finish();
        }
        let b = self.bounds[level - 2];
        let (mut lo, mut hi) = (-b, b);

        // s_level = -(level * a + partial) with
        // partial = sum_{i=1}^{level-1} a_{n-i} s_{level-i}: affine in the
        // new coefficient, so |s_level| <= T2^{level/2} clips the range.
        let mut partial: Option<i128> = None;
        if self.deep && valid == level - 1 {
            if let (Some(t), Some(p)) = (self.thresh[level - 1], self.partial_sum(level)) {
                lo = lo.max(clamp_i128(div_ceil(-t - p, level as i128)));
                hi = hi.min(clamp_i128(div_floor(t - p, level as i128)));
                partial = Some(p);
                let kept = (hi as i128 - lo as i128 + 1).max(0);
                self.sum.deep_pruned += ((2 * b as i128 + 1) - kept) as u64;
            }
        }

        for a in lo..=hi {
            self.coeffs[n - level] = a;
            let next_valid = match partial {
                Some(p) => {
                    // In the clipped range the true s_level is within the
                    // threshold, so this arithmetic cannot overflow.
                    self.psums[level - 1] = -((level as i128) * (a as i128) + p);
                    level
                }
                None => valid.min(level - 1),
            };
            self.descend(level + 1, next_valid)?;
        }
        Ok(())
    }

    /// Recomputes the power sums of the assembled candidate by the Newton
    /// recurrence and checks every window |s_k| <= T2^{k/2}, k >= 3. A
    /// violated window certifies that the roots' T2 norm exceeds the
    /// budget, so the polynomial lies outside the guaranteed region (its
    /// field, if any, has another in-budget generator). Word-size limits
    /// end the checkable range at exactly the same k where interior
    /// tracking stops, keeping this screen identical to the early prunes.
    fn power_sums_within_budget(&self) -> bool {
        let n = self.degree;
        let mut s = [0i128; 11];
        s[0] = -(self.coeffs[n - 1] as i128);
        for k in 2..=n {
            let t = match self.thresh[k - 1] {
                Some(t) => t,
                None => return true, // window too wide to represent: done
            };
            // identical accumulation to the interior partial_sum
            let mut partial: i128 = 0;
            for i in 1..k {
                match (self.coeffs[n - i] as i128)
                    .checked_mul(s[k - i - 1])
                    .and_then(|term| partial.checked_add(term))
                {
                    Some(v) => partial = v,
                    None => return true, // cannot bound further: keep
                }
            }
            let v = match ((k as i128) * (self.coeffs[n - k] as i128)).checked_add(partial) {
                Some(v) => v,
                // |s_k| >= 2^127 > every representable window
                None => return k < 3,
            };
            if k >= 3 && v.unsigned_abs() > t as u128 {
                return false;
            }
            // s_2 is guaranteed by the block layout; any |v| that passed
            // the window sits strictly inside the 128-bit range.
            debug_assert!(v.unsigned_abs() <= t as u128);
            s[k - 1] = -v;
        }
        true
    }

    /// sum_{i=1}^{k-1} a_{n-i} * s_{k-i}, or None when it leaves the
    /// 128-bit range (conceivable only for boxes far beyond enumerable
    /// size; the caller then simply skips the prune).
    fn partial_sum(&self, k: usize) -> Option<i128> {
        let n = self.degree;
        let mut acc: i128 = 0;
        for i in 1..k {
            let a = self.coeffs[n - i] as i128;
            acc = acc.checked_add(a.checked_mul(self.psums[k - i - 1])?)?;
        }
        Some(acc)
    }

    /// Full screen chain on one assembled coefficient vector.
    fn finish(&mut self) -> Result<(), S::Error> {
        self.sum.visited += 1;
        if self.coeffs[0] == 0 {
            self.sum.cheap_rejected += 1;
            return Ok(());
        }
        if !self.power_sums_within_budget() {
            self.sum.power_sum_rejected += 1;
            return Ok(());
        }
        let n = self.degree;
        self.scratch[..n].copy_from_slice(&self.coeffs);
        let f = IntPoly::from_i64(&self.scratch);
        // Monic candidates always have unit content, so the primitive-part
        // screen never fires; it is asserted rather than recomputed.
        debug_assert!(f.content().is_one());
        if !f.is_squarefree() {
            self.sum.non_squarefree += 1;
            return Ok(());
        }
        if !is_irreducible_over_q(&f).expect("candidate coefficients fit the factor routines") {
            self.sum.reducible += 1;
            return Ok(());
        }
        let r1 = count_real_roots(&f).expect("squarefreeness was just established") as u32;
        let r2 = (n as u32 - r1) / 2;
        if !self.signatures.contains(n as u32, r1, r2) {
            self.sum.signature_rejected += 1;
            return Ok(());
        }
        self.sink.accept(&f, r1, r2)?;
        self.sum.emitted += 1;
        Ok(())
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a < 0 {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

fn clamp_i128(v: i128) -> i64 {
    v.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// Durable progress marker. The text form is line-oriented `key=value`,
/// one key per line, suitable for atomic single-file rewrite.
#[derive(Clone, Debug, PartialEq)]
pub struct Checkpoint {
    pub degree: u32,
    pub bound: f64,
    /// Canonical `SignatureSet` text.
    pub signature: String,
    pub slice_id: u32,
    pub shard_count: u32,
    pub slice_start: u64,
    pub slice_end: u64,
    pub completed: u64,
    /// Last completed (t, a_{n-2}) prefix, absent before the first block.
    pub cursor: Option<(u32, i64)>,
    /// Committed payload size (bytes) of the record stream, letting a
    /// resuming consumer truncate uncommitted output.
    pub record_offset: u64,
}

/// Errors from checkpoint parsing or task reconstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckpointError {
    MissingKey(&'static str),
    BadValue(&'static str),
    UnsupportedDegree { degree: u32 },
    /// The checkpoint contradicts the box layout it claims to describe.
    Inconsistent(&'static str),
}

impl fmt::Display for CheckpointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckpointError::MissingKey(k) => write!(f, "checkpoint missing key `{}`", k),
            CheckpointError::BadValue(k) => write!(f, "checkpoint has malformed value for `{}`", k),
            CheckpointError::UnsupportedDegree { degree } => {
                write!(f, "checkpoint degree {} outside 2..=11", degree)
            }
            CheckpointError::Inconsistent(msg) => write!(f, "inconsistent checkpoint: {}", msg),
        }
    }
}

impl Checkpoint {
    /// Snapshot of a task's durable state.
    pub fn for_task(task: &EnumerationTask, record_offset: u64) -> Checkpoint {
        Checkpoint {
            degree: task.degree,
            bound: task.bound,
            signature: task.signatures.to_text(),
            slice_id: task.slice_id,
            shard_count: task.shard_count,
            slice_start: task.slice_start,
            slice_end: task.slice_end,
            completed: task.completed,
            cursor: task.cursor().map(|p| (p.trace, p.second)),
            record_offset,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&alloc::format!("degree={}\n", self.degree));
        s.push_str(&alloc::format!("bound={}\n", self.bound));
        s.push_str(&alloc::format!("signature={}\n", self.signature));
        s.push_str(&alloc::format!("slice={}\n", self.slice_id));
        s.push_str(&alloc::format!("shards={}\n", self.shard_count));
        s.push_str(&alloc::format!("start={}\n", self.slice_start));
        s.push_str(&alloc::format!("end={}\n", self.slice_end));
        s.push_str(&alloc::format!("completed={}\n", self.completed));
        match self.cursor {
            Some((t, a)) => s.push_str(&alloc::format!("cursor={},{}\n", t, a)),
            None => s.push_str("cursor=none\n"),
        }
        s.push_str(&alloc::format!("offset={}\n", self.record_offset));
        s
    }

    pub fn from_text(text: &str) -> Result<Checkpoint, CheckpointError> {
        fn find<'t>(
            pairs: &[(&'t str, &'t str)],
            key: &'static str,
        ) -> Result<&'t str, CheckpointError> {
            pairs
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or(CheckpointError::MissingKey(key))
        }
        fn parse<T: core::str::FromStr>(
            pairs: &[(&str, &str)],
            key: &'static str,
        ) -> Result<T, CheckpointError> {
            find(pairs, key)?
                .parse()
                .map_err(|_| CheckpointError::BadValue(key))
        }

        let mut pairs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or(CheckpointError::BadValue("line without `=`"))?;
            pairs.push((k, v));
        }

        // Consume keys in the order `to_text` writes them, so the first
        // missing key of a truncated file is the one reported.
        let degree = parse(&pairs, "degree")?;
        let bound = parse(&pairs, "bound")?;
        let signature = String::from(find(&pairs, "signature")?);
        let slice_id = parse(&pairs, "slice")?;
        let shard_count = parse(&pairs, "shards")?;
        let slice_start = parse(&pairs, "start")?;
        let slice_end = parse(&pairs, "end")?;
        let completed = parse(&pairs, "completed")?;
        let cursor_text = find(&pairs, "cursor")?;
        let cursor = if cursor_text == "none" {
            None
        } else {
            let (t, a) = cursor_text
                .split_once(',')
                .ok_or(CheckpointError::BadValue("cursor"))?;
            Some((
                t.parse().map_err(|_| CheckpointError::BadValue("cursor"))?,
                a.parse().map_err(|_| CheckpointError::BadValue("cursor"))?,
            ))
        };

        Ok(Checkpoint {
            degree,
            bound,
            signature,
            slice_id,
            shard_count,
            slice_start,
            slice_end,
            completed,
            cursor,
            record_offset: parse(&pairs, "offset")?,
        })
    }

    /// Rebuilds the task this checkpoint describes, re-deriving the box
    /// layout and cross-checking the stored cursor against it.
    pub fn resume_task(&self) -> Result<EnumerationTask, CheckpointError> {
        let signatures = SignatureSet::from_text(&self.signature)
            .ok_or(CheckpointError::BadValue("signature"))?;
        let blocks = prefix_blocks(self.degree, self.bound).map_err(|e| match e {
            HunterError::UnsupportedDegree { degree } => {
                CheckpointError::UnsupportedDegree { degree }
            }
        })?;
        let len = blocks.len() as u64;
        if self.slice_start > self.slice_end || self.slice_end > len {
            return Err(CheckpointError::Inconsistent(
                "slice range outside the box layout",
            ));
        }
        if self.completed > self.slice_end - self.slice_start {
            return Err(CheckpointError::Inconsistent(
                "completed count exceeds the slice",
            ));
        }
        let expect_cursor = if self.completed == 0 {
            None
        } else {
            let p = blocks[(self.slice_start + self.completed - 1) as usize];
            Some((p.trace, p.second))
        };
        if expect_cursor != self.cursor {
            return Err(CheckpointError::Inconsistent(
                "cursor does not match the completed count",
            ));
        }
        Ok(EnumerationTask {
            degree: self.degree,
            bound: self.bound,
            signatures,
            slice_id: self.slice_id,
            shard_count: self.shard_count,
            slice_start: self.slice_start,
            slice_end: self.slice_end,
            completed: self.completed,
            deep_prune: true,
        })
    }
}
