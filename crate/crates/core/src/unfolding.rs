//! Truncated unfoldings: homotopy classes of pointed cube paths as cubes.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::paths::class_members;
use crate::precubical::{reachable, CubeId, CubeSpec, Hda, Limits, Morphism, PrecubicalSet};

/// Index of a node (homotopy class) inside one [`Unfolding`].
pub type NodeId = usize;

#[derive(Clone, Debug)]
pub struct Unfolding {
    depth: usize,
    source: Hda,
    /// Canonical representative of each class.
    reps: Vec<Vec<CubeId>>,
    members: Vec<Vec<Vec<CubeId>>>,
    cache: HashMap<Vec<CubeId>, NodeId>,
    lower: Vec<Vec<NodeId>>,
    /// `None` marks an upper face that would exceed the depth.
    upper: Vec<Vec<Option<NodeId>>>,
    /// Node of each cube of `hda`.
    part: Vec<NodeId>,
    part_index: Vec<Option<CubeId>>,
    hda: Hda,
    projection: Morphism,
}

/// Builds the unfolding of `h` up to paths of `depth` cubes.
pub fn unfold(h: &Hda, depth: usize, limits: &Limits) -> Result<Unfolding> {
    if depth == 0 {
        return Err(Error::Input("unfolding depth must be at least 1".into()));
    }
    let set = h.set();
    let mut reps: Vec<Vec<CubeId>> = Vec::new();
    let mut members: Vec<Vec<Vec<CubeId>>> = Vec::new();
    let mut cache: HashMap<Vec<CubeId>, NodeId> = HashMap::new();
    let mut total = 0usize;

    let mut add_class = |seed: Vec<CubeId>,
                         reps: &mut Vec<Vec<CubeId>>,
                         members: &mut Vec<Vec<Vec<CubeId>>>,
                         cache: &mut HashMap<Vec<CubeId>, NodeId>|
     -> Result<()> {
        if cache.contains_key(&seed) {
            return Ok(());
        }
        let class = class_members(set, &seed, limits)?;
        total += class.len();
        if total > limits.max_paths {
            return Err(Error::Resource(format!("unfolding exceeds {} paths", limits.max_paths)));
        }
        let node = reps.len();
        for m in &class {
            cache.insert(m.clone(), node);
        }
        reps.push(class[0].clone());
        members.push(class);
        Ok(())
    };

    add_class(vec![h.initial()], &mut reps, &mut members, &mut cache)?;
    let mut layer: Vec<NodeId> = vec![0];
    for _ in 1..depth {
        let start = reps.len();
        for &node in &layer {
            let rep = reps[node].clone();
            let last = *rep.last().expect("non-empty");
            for next in set.steps_from(last) {
                let mut ext = rep.clone();
                ext.push(next);
                add_class(ext, &mut reps, &mut members, &mut cache)?;
            }
        }
        layer = (start..reps.len()).collect();
        if layer.is_empty() {
            break;
        }
    }

    // faces
    let n = reps.len();
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for node in 0..n {
        let rep = &reps[node];
        let m = rep.len();
        let last = rep[m - 1];
        let dim = set.dim(last);
        let mut lo = Vec::with_capacity(dim);
        for k in 1..=dim {
            let target = set.face(last, k, 0);
            let faces: HashSet<NodeId> =
                members[node].iter().filter(|p| p[m - 2] == target).map(|p| cache[&p[..m - 1]]).collect();
            if faces.len() != 1 {
                return Err(Error::Precondition(format!(
                    "lower face d{k}^0 of class {} spans {} classes",
                    node_name(set, rep),
                    faces.len()
                )));
            }
            lo.push(faces.into_iter().next().expect("one face"));
        }
        let up = (1..=dim)
            .map(|k| {
                if m + 1 > depth {
                    return None;
                }
                let mut ext = rep.clone();
                ext.push(set.face(last, k, 1));
                Some(cache[&ext])
            })
            .collect();
        lower.push(lo);
        upper.push(up);
    }

    // greatest face-closed set of nodes with all faces present
    let mut alive: Vec<bool> = upper.iter().map(|u: &Vec<Option<NodeId>>| u.iter().all(Option::is_some)).collect();
    loop {
        let mut changed = false;
        for node in 0..n {
            if alive[node]
                && (lower[node].iter().any(|&f| !alive[f]) || upper[node].iter().any(|f| f.is_some_and(|f| !alive[f])))
            {
                alive[node] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let part: Vec<NodeId> = (0..n).filter(|&i| alive[i]).collect();
    let mut part_index = vec![None; n];
    for (i, &node) in part.iter().enumerate() {
        part_index[node] = Some(CubeId(i));
    }
    let specs = part
        .iter()
        .map(|&node| CubeSpec {
            id: node_name(set, &reps[node]),
            dim: lower[node].len(),
            d0: lower[node].iter().map(|&f| node_name(set, &reps[f])).collect(),
            d1: upper[node].iter().map(|f| node_name(set, &reps[f.expect("alive")])).collect(),
        })
        .collect();
    let part_set = PrecubicalSet::new(specs)?;
    let mut hda = Hda::with_initial(part_set, CubeId(0))?;
    let projection = Morphism::from_map(part.iter().map(|&node| *reps[node].last().expect("non-empty")).collect());
    if let Some(l) = h.labeling() {
        let l = l.pull_back(|c| projection.apply(c), part.len());
        hda = hda.with_labeling(l)?;
    }
    Ok(Unfolding { depth, source: h.clone(), reps, members, cache, lower, upper, part, part_index, hda, projection })
}

fn node_name(set: &PrecubicalSet, rep: &[CubeId]) -> String {
    let ids: Vec<&str> = rep.iter().map(|&c| set.id(c)).collect();
    format!("[{}]", ids.join(","))
}

impl Unfolding {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn source(&self) -> &Hda {
        &self.source
    }

    /// Number of classes of pointed paths of length at most the depth.
    pub fn node_count(&self) -> usize {
        self.reps.len()
    }

    pub fn representative(&self, node: NodeId) -> &[CubeId] {
        &self.reps[node]
    }

    pub fn members(&self, node: NodeId) -> &[Vec<CubeId>] {
        &self.members[node]
    }

    pub fn dim(&self, node: NodeId) -> usize {
        self.lower[node].len()
    }

    /// Class of a pointed cube path, if its length is within the depth.
    pub fn node_of(&self, path: &[CubeId]) -> Option<NodeId> {
        self.cache.get(path).copied()
    }

    pub fn lower_face(&self, node: NodeId, k: usize) -> NodeId {
        self.lower[node][k - 1]
    }

    /// `None` when the face lies beyond the depth.
    pub fn upper_face(&self, node: NodeId, k: usize) -> Option<NodeId> {
        self.upper[node][k - 1]
    }

    /// Whether the node lies outside the non-truncated part.
    pub fn is_truncated(&self, node: NodeId) -> bool {
        self.part_index[node].is_none()
    }

    /// The non-truncated part as an HDA.
    pub fn hda(&self) -> &Hda {
        &self.hda
    }

    /// Node behind a cube of [`Unfolding::hda`].
    pub fn node_at(&self, c: CubeId) -> NodeId {
        self.part[c.0]
    }

    /// Cube of [`Unfolding::hda`] for a node, if not truncated.
    pub fn cube_of(&self, node: NodeId) -> Option<CubeId> {
        self.part_index[node]
    }

    /// Last-cube projection from [`Unfolding::hda`] to the source.
    pub fn projection(&self) -> &Morphism {
        &self.projection
    }

    pub fn name(&self, node: NodeId) -> String {
        node_name(self.source.set(), &self.reps[node])
    }

    /// `a ⊑ b` on classes: some member of `b` starts with a member of `a`.
    pub fn class_prefix(&self, a: NodeId, b: NodeId) -> bool {
        let la = self.reps[a].len();
        la <= self.reps[b].len() && self.members[b].iter().any(|p| self.cache.get(&p[..la]) == Some(&a))
    }
}

/// Whether no cube path revisits a cube.
pub fn is_acyclic(h: &Hda) -> bool {
    topological_order(h.set()).is_some()
}

fn topological_order(set: &PrecubicalSet) -> Option<Vec<CubeId>> {
    let mut indeg = vec![0usize; set.len()];
    for c in set.cubes() {
        for n in set.steps_from(c) {
            indeg[n.0] += 1;
        }
    }
    let mut ready: Vec<CubeId> = set.cubes().filter(|c| indeg[c.0] == 0).collect();
    let mut order = Vec::with_capacity(set.len());
    while let Some(c) = ready.pop() {
        order.push(c);
        for n in set.steps_from(c) {
            indeg[n.0] -= 1;
            if indeg[n.0] == 0 {
                ready.push(n);
            }
        }
    }
    (order.len() == set.len()).then_some(order)
}

/// Number of cubes on a longest pointed cube path; the depth at which the
/// unfolding of an acyclic HDA is complete.
pub fn complete_depth(h: &Hda) -> Result<usize> {
    let set = h.set();
    let order = topological_order(set).ok_or_else(|| Error::Precondition("HDA has a cycle".into()))?;
    let mut best = vec![0usize; set.len()];
    best[h.initial().0] = 1;
    let mut longest = 1;
    for c in order {
        if best[c.0] == 0 {
            continue;
        }
        longest = longest.max(best[c.0]);
        for n in set.steps_from(c) {
            best[n.0] = best[n.0].max(best[c.0] + 1);
        }
    }
    Ok(longest)
}

/// Every cube carries exactly one homotopy class of pointed cube paths.
pub fn is_hd_tree(h: &Hda, limits: &Limits) -> Result<bool> {
    if !is_acyclic(h) {
        return Err(Error::Precondition("higher-dimensional tree check needs an acyclic HDA".into()));
    }
    if reachable(h).len() != h.set().len() {
        return Ok(false);
    }
    let u = unfold(h, complete_depth(h)?, limits)?;
    let mut hits = vec![0usize; h.set().len()];
    for node in 0..u.node_count() {
        hits[u.reps[node].last().expect("non-empty").0] += 1;
    }
    Ok(hits.iter().all(|&n| n == 1))
}

/// `f̃[x_1,…,x_m] = [f x_1,…,f x_m]` between the non-truncated parts.
pub fn lift_morphism(f: &Morphism, a: &Unfolding, b: &Unfolding) -> Result<Morphism> {
    if a.depth != b.depth {
        return Err(Error::Input(format!("unfolding depths differ ({} vs {})", a.depth, b.depth)));
    }
    f.check(&a.source, &b.source)?;
    let mut map = Vec::with_capacity(a.part.len());
    for &node in &a.part {
        let image: Vec<CubeId> = a.reps[node].iter().map(|&c| f.apply(c)).collect();
        let target = b
            .node_of(&image)
            .and_then(|t| b.cube_of(t))
            .ok_or_else(|| Error::Morphism(format!("image of {} is not in the target unfolding", a.name(node))))?;
        map.push(target);
    }
    let lifted = Morphism::from_map(map);
    lifted.check(&a.hda, &b.hda)?;
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precubical::standard_cube;

    fn two_cycle() -> Hda {
        Hda::from_specs(
            vec![
                CubeSpec::vertex("x"),
                CubeSpec::vertex("y"),
                CubeSpec::new("e", &["x"], &["y"]),
                CubeSpec::new("f", &["y"], &["x"]),
            ],
            "x",
        )
        .unwrap()
    }

    #[test]
    fn cycle_unfolds_to_chain() {
        let u = unfold(&two_cycle(), 5, &Limits::default()).unwrap();
        assert_eq!(u.hda().set().counts(), vec![3, 2]);
        assert!(!is_acyclic(&two_cycle()));
        assert!(is_hd_tree(&two_cycle(), &Limits::default()).is_err());
        assert!(is_hd_tree(u.hda(), &Limits::default()).unwrap());
    }

    #[test]
    fn truncation_marks_boundary() {
        let u = unfold(&two_cycle(), 4, &Limits::default()).unwrap();
        // [x,e,y,f] has no room for its upper face
        assert_eq!(u.node_count(), 4);
        assert_eq!(u.hda().set().counts(), vec![2, 1]);
        assert!(u.is_truncated(3));
        assert_eq!(u.upper_face(3, 1), None);
    }

    #[test]
    fn square_unfolds_to_itself() {
        let l = Limits::default();
        let sq = standard_cube(2, &l).unwrap();
        assert_eq!(complete_depth(&sq).unwrap(), 5);
        let u = unfold(&sq, 9, &l).unwrap();
        assert_eq!(u.hda().set().counts(), vec![4, 4, 1]);
        assert!(u.projection().check(u.hda(), &sq).is_ok());
        assert!(is_hd_tree(&sq, &l).unwrap());
    }

    #[test]
    fn empty_square_is_not_a_tree() {
        let h = Hda::from_specs(
            vec![
                CubeSpec::vertex("v"),
                CubeSpec::vertex("a"),
                CubeSpec::vertex("b"),
                CubeSpec::vertex("c"),
                CubeSpec::new("e1", &["v"], &["a"]),
                CubeSpec::new("e2", &["v"], &["b"]),
                CubeSpec::new("f1", &["a"], &["c"]),
                CubeSpec::new("f2", &["b"], &["c"]),
            ],
            "v",
        )
        .unwrap();
        assert!(!is_hd_tree(&h, &Limits::default()).unwrap());
    }

    #[test]
    fn prefixes() {
        let u = unfold(&two_cycle(), 5, &Limits::default()).unwrap();
        for b in 0..u.node_count() {
            assert!(u.class_prefix(0, b));
            assert!(u.class_prefix(b, b));
        }
        assert!(!u.class_prefix(3, 1));
    }

    #[test]
    fn identity_lifts_to_identity() {
        let l = Limits::default();
        let sq = standard_cube(2, &l).unwrap();
        let u = unfold(&sq, 5, &l).unwrap();
        let id = lift_morphism(&Morphism::identity(sq.set()), &u, &u).unwrap();
        assert_eq!(id, Morphism::identity(u.hda().set()));
        let v = unfold(&sq, 4, &l).unwrap();
        assert!(lift_morphism(&Morphism::identity(sq.set()), &u, &v).is_err());
    }
}
