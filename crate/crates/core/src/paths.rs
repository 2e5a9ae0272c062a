//! Cube paths, adjacency, homotopy classes and fan-shaped normal forms.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::precubical::{CubeId, Hda, Limits, PrecubicalSet};

/// One step of a cube path. `Up(k)`: the current cube is `δ_k^0` of the
/// next. `Down(k)`: the next cube is `δ_k^1` of the current.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up(usize),
    Down(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up(k) => write!(f, "Up({k})"),
            Step::Down(k) => write!(f, "Down({k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubePath {
    cubes: Vec<CubeId>,
    steps: Vec<Step>,
}

/// All `k` for which `a → b` is a step, in ascending order.
fn step_indices(set: &PrecubicalSet, a: CubeId, b: CubeId) -> (Vec<usize>, bool) {
    let (da, db) = (set.dim(a), set.dim(b));
    if db == da + 1 {
        let ks = (1..=db).filter(|&k| set.face(b, k, 0) == a).collect();
        (ks, true)
    } else if da == db + 1 {
        let ks = (1..=da).filter(|&k| set.face(a, k, 1) == b).collect();
        (ks, false)
    } else {
        (Vec::new(), true)
    }
}

/// Whether `a → b` is a single cube-path step.
#[inline]
pub fn is_step(set: &PrecubicalSet, a: CubeId, b: CubeId) -> bool {
    let (da, db) = (set.dim(a), set.dim(b));
    if db == da + 1 {
        set.lower_faces(b).contains(&a)
    } else if da == db + 1 {
        set.upper_faces(a).contains(&b)
    } else {
        false
    }
}

pub fn is_cube_path(set: &PrecubicalSet, cubes: &[CubeId]) -> bool {
    !cubes.is_empty() && cubes.windows(2).all(|w| is_step(set, w[0], w[1]))
}

impl CubePath {
    /// Validates a cube sequence and infers its step tags. Positions in
    /// errors are 1-based and name the first cube of the offending step.
    pub fn new(set: &PrecubicalSet, cubes: Vec<CubeId>) -> Result<Self> {
        if cubes.is_empty() {
            return Err(Error::Path { position: 0, reason: "empty path".into() });
        }
        if let Some(bad) = cubes.iter().find(|c| c.0 >= set.len()) {
            return Err(Error::UnknownCube(bad.to_string()));
        }
        let mut steps = Vec::with_capacity(cubes.len() - 1);
        for (j, w) in cubes.windows(2).enumerate() {
            let (ks, up) = step_indices(set, w[0], w[1]);
            match ks.as_slice() {
                [] => {
                    return Err(Error::Path {
                        position: j + 1,
                        reason: format!("no step from `{}` to `{}`", set.id(w[0]), set.id(w[1])),
                    })
                }
                [k] => steps.push(if up { Step::Up(*k) } else { Step::Down(*k) }),
                _ => {
                    return Err(Error::Path {
                        position: j + 1,
                        reason: format!(
                            "step from `{}` to `{}` is ambiguous (k in {ks:?})",
                            set.id(w[0]),
                            set.id(w[1])
                        ),
                    })
                }
            }
        }
        Ok(CubePath { cubes, steps })
    }

    pub fn from_ids<S: AsRef<str>>(set: &PrecubicalSet, ids: &[S]) -> Result<Self> {
        let cubes = ids.iter().map(|id| set.require(id.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(set, cubes)
    }

    pub fn cubes(&self) -> &[CubeId] {
        &self.cubes
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> CubeId {
        self.cubes[0]
    }

    pub fn last(&self) -> CubeId {
        *self.cubes.last().expect("non-empty")
    }

    pub fn ids<'a>(&self, set: &'a PrecubicalSet) -> Vec<&'a str> {
        self.cubes.iter().map(|&c| set.id(c)).collect()
    }

    pub fn is_pointed(&self, h: &Hda) -> bool {
        self.first() == h.initial()
    }
}

/// `ρ * σ`, inferring the connecting step.
pub fn concat(set: &PrecubicalSet, rho: &CubePath, sigma: &CubePath) -> Result<CubePath> {
    if !is_step(set, rho.last(), sigma.first()) {
        return Err(Error::Concat(format!(
            "`{}` and `{}` are not related by a face map",
            set.id(rho.last()),
            set.id(sigma.first())
        )));
    }
    let mut cubes = rho.cubes.clone();
    cubes.extend_from_slice(&sigma.cubes);
    CubePath::new(set, cubes).map_err(|e| Error::Concat(e.to_string()))
}

/// `ρ ⊑ χ`, with equality counted as a prefix.
pub fn is_prefix(rho: &CubePath, chi: &CubePath) -> bool {
    chi.cubes.starts_with(&rho.cubes)
}

#[inline]
fn lower(set: &PrecubicalSet, c: CubeId, k: usize) -> Option<CubeId> {
    set.try_face(c, k, 0)
}

#[inline]
fn upper(set: &PrecubicalSet, c: CubeId, k: usize) -> Option<CubeId> {
    set.try_face(c, k, 1)
}

/// The four adjacency clauses at an interior position, in one direction.
/// `x` and `y` are the windows `(p-1, p, p+1)` of the two paths.
fn clauses_one_way(set: &PrecubicalSet, x: [CubeId; 3], y: [CubeId; 3]) -> bool {
    let [x0, x1, x2] = x;
    let [y0, y1, y2] = y;
    // up, up: the two ways into x2 from a codimension-2 face
    let n = set.dim(x2);
    if set.dim(x1) + 1 == n && set.dim(x0) + 2 == n && set.dim(y1) + 1 == n {
        for l in 2..=n {
            for k in 1..l {
                if lower(set, x1, k) == Some(x0)
                    && lower(set, x2, l) == Some(x1)
                    && lower(set, y1, l - 1) == Some(y0)
                    && lower(set, y2, k) == Some(y1)
                {
                    return true;
                }
            }
        }
    }
    // down, down: the two ways out of x0 to a codimension-2 face
    let n = set.dim(x0);
    if set.dim(x1) + 1 == n && set.dim(x2) + 2 == n && set.dim(y1) + 1 == n {
        for l in 2..=n {
            for k in 1..l {
                if upper(set, x0, l) == Some(x1)
                    && upper(set, x1, k) == Some(x2)
                    && upper(set, y0, k) == Some(y1)
                    && upper(set, y1, l - 1) == Some(y2)
                {
                    return true;
                }
            }
        }
    }
    // through y1 versus around it below
    let n = set.dim(y1);
    if n >= 2 && set.dim(x1) + 2 == n {
        for l in 2..=n {
            for k in 1..l {
                let a = upper(set, y1, l).and_then(|f| lower(set, f, k));
                if a == Some(x1) && lower(set, y1, k) == Some(y0) && upper(set, y1, l) == Some(y2) {
                    return true;
                }
                let b = lower(set, y1, l).and_then(|f| upper(set, f, k));
                if b == Some(x1) && lower(set, y1, l) == Some(y0) && upper(set, y1, k) == Some(y2) {
                    return true;
                }
            }
        }
    }
    false
}

fn window_adjacent(set: &PrecubicalSet, x: [CubeId; 3], y: [CubeId; 3]) -> bool {
    x[0] == y[0]
        && x[2] == y[2]
        && x[1] != y[1]
        && is_step(set, x[0], x[1])
        && is_step(set, x[1], x[2])
        && is_step(set, y[0], y[1])
        && is_step(set, y[1], y[2])
        && (clauses_one_way(set, x, y) || clauses_one_way(set, y, x))
}

/// Adjacency of two cube sequences: same length, one differing interior
/// position, and one of the four clauses there.
pub fn adjacent_seq(set: &PrecubicalSet, x: &[CubeId], y: &[CubeId]) -> bool {
    if x.len() != y.len() || x.len() < 3 {
        return false;
    }
    let mut diff = (0..x.len()).filter(|&j| x[j] != y[j]);
    let Some(p) = diff.next() else { return false };
    if diff.next().is_some() || p == 0 || p + 1 == x.len() {
        return false;
    }
    window_adjacent(set, [x[p - 1], x[p], x[p + 1]], [y[p - 1], y[p], y[p + 1]])
}

pub fn adjacent(set: &PrecubicalSet, rho: &CubePath, sigma: &CubePath) -> bool {
    adjacent_seq(set, &rho.cubes, &sigma.cubes)
}

/// Every path adjacent to `x`.
pub fn neighbours(set: &PrecubicalSet, x: &[CubeId]) -> Vec<Vec<CubeId>> {
    let mut out = Vec::new();
    for p in 1..x.len().saturating_sub(1) {
        let (a, b, c) = (x[p - 1], x[p], x[p + 1]);
        let candidates = set.lower_cofaces(a).iter().map(|&(y, _)| y).chain(set.upper_faces(a).iter().copied());
        let mut seen = HashSet::new();
        for cand in candidates {
            if cand == b || !seen.insert(cand) {
                continue;
            }
            if window_adjacent(set, [a, b, c], [a, cand, c]) {
                let mut y = x.to_vec();
                y[p] = cand;
                out.push(y);
            }
        }
    }
    out
}

/// All members of the homotopy class of `x`, sorted lexicographically.
pub fn class_members(set: &PrecubicalSet, x: &[CubeId], limits: &Limits) -> Result<Vec<Vec<CubeId>>> {
    let mut seen: HashSet<Vec<CubeId>> = HashSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(path) = queue.pop_front() {
        for n in neighbours(set, &path) {
            if !seen.contains(&n) {
                if seen.len() >= limits.max_class {
                    return Err(Error::Resource(format!("homotopy class exceeds {} members", limits.max_class)));
                }
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    let mut members: Vec<_> = seen.into_iter().collect();
    members.sort();
    Ok(members)
}

/// A homotopy class, keyed by its lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyClass {
    pub representative: CubePath,
    pub size: usize,
}

impl HomotopyClass {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn homotopy_class(set: &PrecubicalSet, rho: &CubePath, limits: &Limits) -> Result<HomotopyClass> {
    let members = class_members(set, &rho.cubes, limits)?;
    let size = members.len();
    let rep = members.into_iter().next().expect("class contains its seed");
    Ok(HomotopyClass { representative: CubePath::new(set, rep)?, size })
}

pub fn homotopic(set: &PrecubicalSet, rho: &CubePath, sigma: &CubePath, limits: &Limits) -> Result<bool> {
    if rho.len() != sigma.len() || rho.first() != sigma.first() || rho.last() != sigma.last() {
        return Ok(false);
    }
    if rho == sigma {
        return Ok(true);
    }
    Ok(homotopy_class(set, rho, limits)?.representative == homotopy_class(set, sigma, limits)?.representative)
}

/// Sum of the dimensions along the path.
pub fn t_measure(set: &PrecubicalSet, rho: &CubePath) -> usize {
    rho.cubes.iter().map(|&c| set.dim(c)).sum()
}

/// Dimensions alternate `0,1,0,1,…` up to position `m-n`, then climb
/// `1,2,…,n` to the last cube.
pub fn is_fan_shaped(set: &PrecubicalSet, rho: &CubePath) -> bool {
    let m = rho.len();
    let n = set.dim(rho.last());
    if n >= m {
        return false;
    }
    rho.cubes.iter().enumerate().all(|(i, &c)| {
        let j = i + 1;
        let expected = if j <= m - n { (j + 1) % 2 } else { n + j - m };
        set.dim(c) == expected
    })
}

/// `j - dim(x_j)` is odd at every 1-based position.
pub fn parity_holds(set: &PrecubicalSet, rho: &CubePath) -> bool {
    rho.cubes.iter().enumerate().all(|(i, &c)| (i + 1 + set.dim(c)) % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanNormalization {
    pub path: CubePath,
    /// Number of `T`-decreasing rewrites applied.
    pub rewrites: usize,
}

fn least_lower(set: &PrecubicalSet, below: CubeId, c: CubeId) -> Option<usize> {
    (1..=set.dim(c)).find(|&k| set.face(c, k, 0) == below)
}

fn least_upper(set: &PrecubicalSet, c: CubeId, above: CubeId) -> Option<usize> {
    (1..=set.dim(c)).find(|&k| set.face(c, k, 1) == above)
}

/// Rewrites `ρ` into a homotopic fan-shaped path, repeatedly removing the
/// least peak of dimension at least two that is entered upward and left
/// downward. Each rewrite lowers `T` by exactly two.
pub fn normalize_fan(set: &PrecubicalSet, rho: &CubePath) -> Result<FanNormalization> {
    if set.dim(rho.first()) != 0 {
        return Err(Error::Precondition(format!("path starts at `{}`, not at a 0-cube", set.id(rho.first()))));
    }
    let mut x = rho.cubes.clone();
    let mut rewrites = 0;
    loop {
        let m = x.len();
        // 0-based index l of the least offending peak
        let peak = (2..m.saturating_sub(1))
            .find(|&l| set.dim(x[l]) >= 2 && set.dim(x[l - 1]) < set.dim(x[l]) && set.dim(x[l + 1]) < set.dim(x[l]));
        let Some(l) = peak else { break };
        let bad = || Error::Precondition(format!("unexpected shape at position {}", l + 1));
        let k2 = least_lower(set, x[l - 1], x[l]).ok_or_else(bad)?;
        let k3 = least_upper(set, x[l], x[l + 1]).ok_or_else(bad)?;
        if k2 < k3 {
            x[l] = set.face(x[l + 1], k2, 0);
        } else if k2 > k3 {
            x[l] = set.face(x[l - 1], k3, 1);
        } else {
            let k1 = least_lower(set, x[l - 2], x[l - 1]).ok_or_else(bad)?;
            if k1 < k2 {
                x[l - 1] = set.face(x[l], k1, 0);
                x[l] = set.face(x[l + 1], k1, 0);
            } else {
                x[l - 1] = set.face(x[l], k1 + 1, 0);
                x[l] = set.face(x[l - 1], k3, 1);
            }
        }
        rewrites += 1;
    }
    let path = CubePath::new(set, x)?;
    if !is_fan_shaped(set, &path) {
        return Err(Error::Precondition("path cannot be brought into fan shape".into()));
    }
    Ok(FanNormalization { path, rewrites })
}

/// Every pointed cube path of length at most `max_len`, in depth-first
/// order.
pub fn pointed_paths(h: &Hda, max_len: usize, limits: &Limits) -> Result<Vec<Vec<CubeId>>> {
    let set = h.set();
    let mut out = Vec::new();
    if max_len == 0 {
        return Ok(out);
    }
    let mut stack = vec![vec![h.initial()]];
    while let Some(path) = stack.pop() {
        if path.len() < max_len {
            let last = *path.last().expect("non-empty");
            for next in set.steps_from(last) {
                let mut p = path.clone();
                p.push(next);
                stack.push(p);
            }
        }
        out.push(path);
        if out.len() > limits.max_paths {
            return Err(Error::Resource(format!("more than {} pointed paths", limits.max_paths)));
        }
    }
    Ok(out)
}
