//! hd-bisimilarity as a greatest fixed point over pairs of cubes, open
//! maps, and the spans witnessing a bisimulation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::game::{Move, Side};
use crate::paths::is_step;
use crate::precubical::{reachable, CubeId, CubeSpec, Hda, Limits, Morphism, PrecubicalSet};
use crate::unfolding::unfold;

/// Pairs of `X × Y` with the round in which each was deleted. Pairs that
/// were never candidates have rank 0; survivors have no rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    nx: usize,
    ny: usize,
    rank: Vec<Option<u32>>,
}

impl PairRelation {
    #[inline]
    fn idx(&self, x: CubeId, y: CubeId) -> usize {
        x.0 * self.ny + y.0
    }

    pub fn survives(&self, x: CubeId, y: CubeId) -> bool {
        self.rank[self.idx(x, y)].is_none()
    }

    pub fn rank(&self, x: CubeId, y: CubeId) -> Option<u32> {
        self.rank[self.idx(x, y)]
    }

    pub fn survivors(&self) -> impl Iterator<Item = (CubeId, CubeId)> + '_ {
        (0..self.nx).flat_map(move |x| {
            (0..self.ny).filter_map(move |y| self.rank[x * self.ny + y].is_none().then_some((CubeId(x), CubeId(y))))
        })
    }

    /// Deleted pairs with a positive rank, i.e. candidates that failed.
    pub fn deleted(&self) -> impl Iterator<Item = (CubeId, CubeId, u32)> + '_ {
        (0..self.nx).flat_map(move |x| {
            (0..self.ny).filter_map(move |y| match self.rank[x * self.ny + y] {
                Some(r) if r > 0 => Some((CubeId(x), CubeId(y), r)),
                _ => None,
            })
        })
    }

    pub fn survivor_count(&self) -> usize {
        self.rank.iter().filter(|r| r.is_none()).count()
    }
}

#[derive(Clone, Debug)]
pub struct BisimResult {
    pub bisimilar: bool,
    pub relation: PairRelation,
    /// For each deleted candidate pair, the challenge that refutes it
    /// using only pairs of smaller rank.
    pub strategy: HashMap<(CubeId, CubeId), Move>,
    pub rounds: u32,
}

/// Whether `(x, y)` is an initial candidate: equal dimension and, when
/// labeled, equal label words.
pub fn is_candidate(a: &Hda, b: &Hda, labeled: bool, x: CubeId, y: CubeId) -> bool {
    a.set().dim(x) == b.set().dim(y)
        && (!labeled
            || match (a.labeling(), b.labeling()) {
                (Some(la), Some(lb)) => la.word(x) == lb.word(y),
                _ => false,
            })
}

fn check_labels(a: &Hda, b: &Hda, labeled: bool) -> Result<()> {
    if labeled && (a.labeling().is_none() || b.labeling().is_none()) {
        return Err(Error::Input("labeled comparison needs labelings on both sides".into()));
    }
    Ok(())
}

/// The first clause violated by `(x1, y1)` against the pairs accepted by
/// `live`: face closure by `(k, ν)`, then forth, then back.
pub fn violation(a: &Hda, b: &Hda, live: impl Fn(CubeId, CubeId) -> bool, x1: CubeId, y1: CubeId) -> Option<Move> {
    let (sa, sb) = (a.set(), b.set());
    for k in 1..=sa.dim(x1) {
        for nu in 0..=1u8 {
            if !live(sa.face(x1, k, nu), sb.face(y1, k, nu)) {
                return Some(Move::Retreat { k, nu });
            }
        }
    }
    for &(x2, k) in sa.lower_cofaces(x1) {
        if !sb.lower_cofaces(y1).iter().any(|&(y2, k2)| k2 == k && live(x2, y2)) {
            return Some(Move::Extend { side: Side::A, k, target: sa.id(x2).to_string() });
        }
    }
    for &(y2, k) in sb.lower_cofaces(y1) {
        if !sa.lower_cofaces(x1).iter().any(|&(x2, k2)| k2 == k && live(x2, y2)) {
            return Some(Move::Extend { side: Side::B, k, target: sb.id(y2).to_string() });
        }
    }
    None
}

/// Greatest relation satisfying face closure and the forth/back clauses,
/// computed by round-synchronous deletion.
pub fn hd_bisim(a: &Hda, b: &Hda, labeled: bool) -> Result<BisimResult> {
    check_labels(a, b, labeled)?;
    let (nx, ny) = (a.set().len(), b.set().len());
    let mut rel = PairRelation { nx, ny, rank: vec![Some(0); nx * ny] };
    let mut live_pairs = Vec::new();
    for x in a.set().cubes() {
        for y in b.set().cubes() {
            if is_candidate(a, b, labeled, x, y) {
                let i = rel.idx(x, y);
                rel.rank[i] = None;
                live_pairs.push((x, y));
            }
        }
    }
    let mut strategy = HashMap::new();
    let mut round = 0u32;
    loop {
        let dead: Vec<_> = live_pairs
            .iter()
            .filter_map(|&(x, y)| violation(a, b, |p, q| rel.survives(p, q), x, y).map(|m| (x, y, m)))
            .collect();
        if dead.is_empty() {
            break;
        }
        round += 1;
        for (x, y, m) in dead {
            let i = rel.idx(x, y);
            rel.rank[i] = Some(round);
            strategy.insert((x, y), m);
        }
        live_pairs.retain(|&(x, y)| rel.survives(x, y));
    }
    Ok(BisimResult { bisimilar: rel.survives(a.initial(), b.initial()), relation: rel, strategy, rounds: round })
}

/// Whether `f: X → Y` has the zig-zag lifting property at every reachable
/// cube of `X`.
pub fn is_open(f: &Morphism, x: &Hda, y: &Hda) -> Result<bool> {
    f.check(x, y).map_err(|e| Error::Input(e.to_string()))?;
    let (sx, sy) = (x.set(), y.set());
    for x1 in reachable(x) {
        for &(y2, k) in sy.lower_cofaces(f.apply(x1)) {
            if !sx.lower_cofaces(x1).iter().any(|&(x2, k2)| k2 == k && f.apply(x2) == y2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lifts a cube path of `Y` starting at `f(x1)` to a path of `X` starting
/// at `x1` that `f` maps onto it.
pub fn lift_path(f: &Morphism, x: &Hda, y: &Hda, x1: CubeId, path: &[CubeId]) -> Result<Vec<CubeId>> {
    let (sx, sy) = (x.set(), y.set());
    if path.first() != Some(&f.apply(x1)) {
        return Err(Error::Input("path does not start at the image of the lifted cube".into()));
    }
    let mut out = vec![x1];
    for (j, w) in path.windows(2).enumerate() {
        let cur = *out.last().expect("non-empty");
        let (from, to) = (w[0], w[1]);
        let next = if sy.dim(to) == sy.dim(from) + 1 {
            (1..=sy.dim(to))
                .filter(|&k| sy.face(to, k, 0) == from)
                .find_map(|k| sx.lower_cofaces(cur).iter().find(|&&(x2, k2)| k2 == k && f.apply(x2) == to))
                .map(|&(x2, _)| x2)
        } else {
            (1..=sy.dim(from)).find(|&k| sy.face(from, k, 1) == to).map(|k| sx.face(cur, k, 1))
        };
        match next {
            Some(n) if is_step(sx, cur, n) && f.apply(n) == to => out.push(n),
            _ => {
                return Err(Error::Path {
                    position: j + 1,
                    reason: format!("no lift of the step into `{}`", sy.id(to)),
                })
            }
        }
    }
    Ok(out)
}

/// The surviving pairs as an HDA together with its two projections.
#[derive(Clone, Debug)]
pub struct WitnessSpan {
    pub hda: Hda,
    pub left: Morphism,
    pub right: Morphism,
}

pub fn witness_span(a: &Hda, b: &Hda, result: &BisimResult) -> Result<WitnessSpan> {
    if !result.bisimilar {
        return Err(Error::Input("no witness: the HDA are not bisimilar".into()));
    }
    let (sa, sb) = (a.set(), b.set());
    let pairs: Vec<_> = result.relation.survivors().collect();
    let name = |x: CubeId, y: CubeId| format!("({},{})", sa.id(x), sb.id(y));
    let specs = pairs
        .iter()
        .map(|&(x, y)| CubeSpec {
            id: name(x, y),
            dim: sa.dim(x),
            d0: (1..=sa.dim(x)).map(|k| name(sa.face(x, k, 0), sb.face(y, k, 0))).collect(),
            d1: (1..=sa.dim(x)).map(|k| name(sa.face(x, k, 1), sb.face(y, k, 1))).collect(),
        })
        .collect();
    let set = PrecubicalSet::new(specs)?;
    let mut hda = Hda::new(set, &name(a.initial(), b.initial()))?;
    let left = Morphism::from_map(pairs.iter().map(|p| p.0).collect());
    let right = Morphism::from_map(pairs.iter().map(|p| p.1).collect());
    if let Some(l) = a.labeling() {
        let pulled = l.pull_back(|c| left.apply(c), pairs.len());
        hda = hda.with_labeling(pulled)?;
    }
    left.check(&hda, a)?;
    right.check(&hda, b)?;
    Ok(WitnessSpan { hda, left, right })
}

/// hd-bisimilarity of the non-truncated parts of the two unfoldings.
pub fn homotopy_bisim_check(a: &Hda, b: &Hda, depth: usize, labeled: bool, limits: &Limits) -> Result<bool> {
    check_labels(a, b, labeled)?;
    let ua = unfold(a, depth, limits)?;
    let ub = unfold(b, depth, limits)?;
    Ok(hd_bisim(ua.hda(), ub.hda(), labeled)?.bisimilar)
}
