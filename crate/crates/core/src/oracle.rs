//! Brute-force bisimilarity: search all face-closed relations containing
//! the initial pair for one satisfying the forth and back clauses.

use crate::error::{Error, Result};
use crate::precubical::{CubeId, Hda, Limits};

struct Search<'a> {
    a: &'a Hda,
    b: &'a Hda,
    pairs: Vec<(CubeId, CubeId)>,
    slot: Vec<usize>,
    state: Vec<Option<bool>>,
    initial: usize,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    fn included(&self, x: CubeId, y: CubeId) -> bool {
        let s = self.slot[x.0 * self.b.set().len() + y.0];
        s != NONE && self.state[s] == Some(true)
    }

    /// Some included pair has `(x, y)` as a face pair.
    fn forced(&self, x: CubeId, y: CubeId) -> bool {
        let (sa, sb) = (self.a.set(), self.b.set());
        let up = |cof: &[(CubeId, usize)], cog: &[(CubeId, usize)]| {
            cof.iter().any(|&(x2, k)| cog.iter().any(|&(y2, k2)| k == k2 && self.included(x2, y2)))
        };
        up(sa.lower_cofaces(x), sb.lower_cofaces(y)) || up(sa.upper_cofaces(x), sb.upper_cofaces(y))
    }

    fn zig_zag(&self, x: CubeId, y: CubeId) -> bool {
        let (sa, sb) = (self.a.set(), self.b.set());
        let forth = sa
            .lower_cofaces(x)
            .iter()
            .all(|&(x2, k)| sb.lower_cofaces(y).iter().any(|&(y2, k2)| k == k2 && self.included(x2, y2)));
        let back = sb
            .lower_cofaces(y)
            .iter()
            .all(|&(y2, k)| sa.lower_cofaces(x).iter().any(|&(x2, k2)| k == k2 && self.included(x2, y2)));
        forth && back
    }

    fn dim(&self, i: usize) -> usize {
        self.a.set().dim(self.pairs[i].0)
    }

    /// Decides pairs `i..`. On failure returns the lowest dimension whose
    /// decisions the failure can depend on: a forced pair of dimension `d`
    /// failing its clauses depends only on pairs of dimension `d + 1`, so
    /// earlier decisions below that level are skipped without retrying.
    fn run(&mut self, i: usize) -> std::result::Result<(), usize> {
        if i == self.pairs.len() {
            return Ok(());
        }
        let (x, y) = self.pairs[i];
        let d = self.dim(i);
        let must = i == self.initial || self.forced(x, y);
        let mut level = usize::MAX;
        if self.zig_zag(x, y) {
            self.state[i] = Some(true);
            match self.run(i + 1) {
                Ok(()) => return Ok(()),
                Err(l) if l > d => {
                    self.state[i] = None;
                    return Err(l);
                }
                Err(l) => level = level.min(l),
            }
        } else if must {
            level = d + 1;
        }
        if !must {
            self.state[i] = Some(false);
            match self.run(i + 1) {
                Ok(()) => return Ok(()),
                Err(l) => level = level.min(l),
            }
        }
        self.state[i] = None;
        Err(level)
    }
}

/// Decides bisimilarity by exhaustive search. Pairs are decided from the
/// top dimension down, so every clause of a pair is checked against
/// already-decided pairs when it is included.
pub fn exhaustive_bisim_oracle(a: &Hda, b: &Hda, labeled: bool, limits: &Limits) -> Result<bool> {
    let (sa, sb) = (a.set(), b.set());
    if sa.len() * sb.len() > limits.oracle_bound {
        return Err(Error::Resource(format!(
            "oracle input {}x{} exceeds bound {}",
            sa.len(),
            sb.len(),
            limits.oracle_bound
        )));
    }
    let word_eq = |x: CubeId, y: CubeId| match (a.labeling(), b.labeling()) {
        (Some(la), Some(lb)) => la.word(x) == lb.word(y),
        _ => false,
    };
    if labeled && (a.labeling().is_none() || b.labeling().is_none()) {
        return Err(Error::Input("labeled comparison needs labelings on both sides".into()));
    }
    let mut pairs = Vec::new();
    for x in sa.cubes() {
        for y in sb.cubes() {
            if sa.dim(x) == sb.dim(y) && (!labeled || word_eq(x, y)) {
                pairs.push((x, y));
            }
        }
    }
    let init = (a.initial(), b.initial());
    if !pairs.contains(&init) {
        return Ok(false);
    }
    pairs.sort_by_key(|&(x, _)| std::cmp::Reverse(sa.dim(x)));
    let mut slot = vec![NONE; sa.len() * sb.len()];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        slot[x.0 * sb.len() + y.0] = i;
    }
    let initial = slot[init.0 .0 * sb.len() + init.1 .0];
    let mut search = Search { a, b, state: vec![None; pairs.len()], pairs, slot, initial };
    Ok(search.run(0).is_ok())
}
