//! Precubical sets, pointed HDA and their morphisms.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::labels::Labeling;

/// Dense index of a cube inside one [`PrecubicalSet`]. Indices follow the
/// order in which cubes were supplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId(pub usize);

impl CubeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for CubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Input record for one cube. `d0[k-1]` is `δ_k^0`, `d1[k-1]` is `δ_k^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSpec {
    pub id: String,
    pub dim: usize,
    pub d0: Vec<String>,
    pub d1: Vec<String>,
}

impl CubeSpec {
    pub fn vertex(id: impl Into<String>) -> Self {
        CubeSpec { id: id.into(), dim: 0, d0: vec![], d1: vec![] }
    }

    pub fn new(id: impl Into<String>, d0: &[&str], d1: &[&str]) -> Self {
        CubeSpec {
            id: id.into(),
            dim: d0.len(),
            d0: d0.iter().map(|s| s.to_string()).collect(),
            d1: d1.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Resource bounds shared by the enumeration-heavy algorithms.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum number of members explored in one homotopy class.
    pub max_class: usize,
    /// Maximum number of pointed cube paths materialised by an unfolding.
    pub max_paths: usize,
    /// Largest `n` accepted by [`standard_cube`].
    pub max_cube_dim: usize,
    /// Maximum `|X|·|Y|` accepted by the exhaustive bisimulation oracle.
    pub oracle_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_class: 1_000_000, max_paths: 1_000_000, max_cube_dim: 10, oracle_bound: 30 }
    }
}

impl Limits {
    /// Defaults, with `HDA_MAX_CLASS` overriding the class-size bound.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var("HDA_MAX_CLASS").ok().and_then(|v| v.parse().ok()) {
            limits.max_class = v;
        }
        limits
    }
}

/// A finite graded set of cubes with lower and upper face maps.
#[derive(Clone, Debug)]
pub struct PrecubicalSet {
    ids: Vec<String>,
    dims: Vec<usize>,
    d0: Vec<Vec<CubeId>>,
    d1: Vec<Vec<CubeId>>,
    index: HashMap<String, CubeId>,
    // (y, k) in co0[x] iff x = δ_k^0 y; likewise co1 for upper faces.
    co0: Vec<Vec<(CubeId, usize)>>,
    co1: Vec<Vec<(CubeId, usize)>>,
}

impl PartialEq for PrecubicalSet {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.dims == other.dims && self.d0 == other.d0 && self.d1 == other.d1
    }
}

impl Eq for PrecubicalSet {}

impl PrecubicalSet {
    /// Builds and eagerly validates a precubical set.
    pub fn new(specs: Vec<CubeSpec>) -> Result<Self> {
        let set = Self::new_deferred(specs)?;
        let violations = validate_precubical(&set);
        if violations.is_empty() {
            Ok(set)
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Builds a set without checking face dimensions or the precubical
    /// identity. Duplicate ids, dangling faces and face-count mismatches are
    /// still rejected since the set could not be indexed otherwise.
    pub fn new_deferred(specs: Vec<CubeSpec>) -> Result<Self> {
        let mut violations = Vec::new();
        let mut index = HashMap::with_capacity(specs.len());
        for (i, s) in specs.iter().enumerate() {
            if index.insert(s.id.clone(), CubeId(i)).is_some() {
                violations.push(Violation::DuplicateId(s.id.clone()));
            }
        }
        for s in &specs {
            if s.d0.len() != s.dim || s.d1.len() != s.dim {
                violations.push(Violation::FaceCount {
                    cube: s.id.clone(),
                    dim: s.dim,
                    d0: s.d0.len(),
                    d1: s.d1.len(),
                });
            }
            for f in s.d0.iter().chain(&s.d1) {
                if !index.contains_key(f) {
                    violations.push(Violation::DanglingFace { cube: s.id.clone(), face: f.clone() });
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        let lookup = |names: &[String]| names.iter().map(|n| index[n]).collect::<Vec<_>>();
        let d0: Vec<_> = specs.iter().map(|s| lookup(&s.d0)).collect();
        let d1: Vec<_> = specs.iter().map(|s| lookup(&s.d1)).collect();
        let n = specs.len();
        let mut co0 = vec![Vec::new(); n];
        let mut co1 = vec![Vec::new(); n];
        for y in 0..n {
            for (k, &x) in d0[y].iter().enumerate() {
                co0[x.0].push((CubeId(y), k + 1));
            }
            for (k, &x) in d1[y].iter().enumerate() {
                co1[x.0].push((CubeId(y), k + 1));
            }
        }
        Ok(PrecubicalSet {
            ids: specs.iter().map(|s| s.id.clone()).collect(),
            dims: specs.iter().map(|s| s.dim).collect(),
            d0,
            d1,
            index,
            co0,
            co1,
        })
    }

    pub fn empty() -> Self {
        Self::new_deferred(Vec::new()).expect("empty set is valid")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn cubes(&self) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.ids.len()).map(CubeId)
    }

    pub fn cubes_of_dim(&self, n: usize) -> impl Iterator<Item = CubeId> + '_ {
        self.cubes().filter(move |&c| self.dims[c.0] == n)
    }

    pub fn dim(&self, c: CubeId) -> usize {
        self.dims[c.0]
    }

    /// Largest dimension present; `None` for the empty set.
    pub fn max_dim(&self) -> Option<usize> {
        self.dims.iter().copied().max()
    }

    /// Number of cubes in each dimension `0..=max_dim`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim().map_or(0, |d| d + 1)];
        for &d in &self.dims {
            counts[d] += 1;
        }
        counts
    }

    pub fn id(&self, c: CubeId) -> &str {
        &self.ids[c.0]
    }

    pub fn lookup(&self, id: &str) -> Option<CubeId> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &str) -> Result<CubeId> {
        self.lookup(id).ok_or_else(|| Error::UnknownCube(id.to_string()))
    }

    /// `δ_k^ν c` with 1-based `k`.
    #[inline]
    pub fn face(&self, c: CubeId, k: usize, nu: u8) -> CubeId {
        debug_assert!(k >= 1 && k <= self.dims[c.0]);
        if nu == 0 {
            self.d0[c.0][k - 1]
        } else {
            self.d1[c.0][k - 1]
        }
    }

    /// `δ_k^ν c`, or `None` when `k` is out of range.
    pub fn try_face(&self, c: CubeId, k: usize, nu: u8) -> Option<CubeId> {
        if k == 0 || k > self.dims[c.0] {
            None
        } else {
            Some(self.face(c, k, nu))
        }
    }

    pub fn lower_faces(&self, c: CubeId) -> &[CubeId] {
        &self.d0[c.0]
    }

    pub fn upper_faces(&self, c: CubeId) -> &[CubeId] {
        &self.d1[c.0]
    }

    /// All `(y, k)` with `c = δ_k^0 y`.
    pub fn lower_cofaces(&self, c: CubeId) -> &[(CubeId, usize)] {
        &self.co0[c.0]
    }

    /// All `(y, k)` with `c = δ_k^1 y`.
    pub fn upper_cofaces(&self, c: CubeId) -> &[(CubeId, usize)] {
        &self.co1[c.0]
    }

    /// Successors of `c` under single cube-path steps: entering a cube
    /// through a lower face, or leaving to an upper face.
    pub fn steps_from(&self, c: CubeId) -> impl Iterator<Item = CubeId> + '_ {
        self.co0[c.0].iter().map(|&(y, _)| y).chain(self.d1[c.0].iter().copied())
    }

    pub fn to_specs(&self) -> Vec<CubeSpec> {
        self.cubes()
            .map(|c| CubeSpec {
                id: self.ids[c.0].clone(),
                dim: self.dims[c.0],
                d0: self.d0[c.0].iter().map(|&f| self.ids[f.0].clone()).collect(),
                d1: self.d1[c.0].iter().map(|&f| self.ids[f.0].clone()).collect(),
            })
            .collect()
    }
}

/// Every violated face-dimension constraint and precubical identity.
/// Duplicate and dangling ids are caught earlier by construction.
pub fn validate_precubical(p: &PrecubicalSet) -> Vec<Violation> {
    let mut out = Vec::new();
    for x in p.cubes() {
        let n = p.dim(x);
        for k in 1..=n {
            for nu in 0..=1u8 {
                let f = p.face(x, k, nu);
                if p.dim(f) + 1 != n {
                    out.push(Violation::FaceDimension {
                        cube: p.id(x).to_string(),
                        k,
                        nu,
                        face: p.id(f).to_string(),
                        face_dim: p.dim(f),
                    });
                }
            }
        }
    }
    if !out.is_empty() {
        // identities are meaningless on mis-dimensioned faces
        return out;
    }
    for x in p.cubes() {
        let n = p.dim(x);
        for l in 2..=n {
            for k in 1..l {
                for nu in 0..=1u8 {
                    for mu in 0..=1u8 {
                        let lhs = p.face(p.face(x, l, mu), k, nu);
                        let rhs = p.face(p.face(x, k, nu), l - 1, mu);
                        if lhs != rhs {
                            out.push(Violation::PrecubicalIdentity { cube: p.id(x).to_string(), k, l, nu, mu });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Validates raw cube records, reporting structural and identity problems
/// together.
pub fn validate_specs(specs: &[CubeSpec]) -> Vec<Violation> {
    match PrecubicalSet::new_deferred(specs.to_vec()) {
        Ok(set) => validate_precubical(&set),
        Err(Error::Invalid(v)) => v,
        Err(e) => unreachable!("unexpected construction error {e}"),
    }
}

/// A pointed precubical set, optionally labeled.
#[derive(Clone, Debug, PartialEq)]
pub struct Hda {
    set: PrecubicalSet,
    initial: CubeId,
    labeling: Option<Labeling>,
}

impl Hda {
    pub fn new(set: PrecubicalSet, initial: &str) -> Result<Self> {
        let initial =
            set.lookup(initial).ok_or_else(|| Error::Invalid(vec![Violation::MissingInitial(initial.to_string())]))?;
        Self::with_initial(set, initial)
    }

    pub fn with_initial(set: PrecubicalSet, initial: CubeId) -> Result<Self> {
        if initial.0 >= set.len() {
            return Err(Error::Invalid(vec![Violation::MissingInitial(initial.to_string())]));
        }
        if set.dim(initial) != 0 {
            return Err(Error::Invalid(vec![Violation::InitialNotVertex(set.id(initial).to_string())]));
        }
        Ok(Hda { set, initial, labeling: None })
    }

    /// Convenience constructor from raw records.
    pub fn from_specs(specs: Vec<CubeSpec>, initial: &str) -> Result<Self> {
        Self::new(PrecubicalSet::new(specs)?, initial)
    }

    /// Attaches a labeling after checking it is a precubical map into the
    /// label torus.
    pub fn with_labeling(mut self, labeling: Labeling) -> Result<Self> {
        if let Some(v) = crate::labels::validate_labeling(&self, &labeling).into_iter().next() {
            return Err(Error::Labeling { cube: v.cube, reason: v.reason });
        }
        self.labeling = Some(labeling);
        Ok(self)
    }

    pub fn set(&self) -> &PrecubicalSet {
        &self.set
    }

    pub fn initial(&self) -> CubeId {
        self.initial
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        self.labeling.as_ref()
    }

    pub fn strip_labels(&self) -> Hda {
        Hda { set: self.set.clone(), initial: self.initial, labeling: None }
    }
}

/// The standard `n`-cube: words in `{0,1,*}^n`, dimension = number of `*`,
/// `δ_k^ν` replaces the `k`-th `*` by `ν`. Pointed at `0…0`.
pub fn standard_cube(n: usize, limits: &Limits) -> Result<Hda> {
    if n > limits.max_cube_dim {
        return Err(Error::Resource(format!("standard cube of dimension {n} exceeds bound {}", limits.max_cube_dim)));
    }
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                b"01*".iter().copied().map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let stars = |w: &[u8]| w.iter().filter(|&&c| c == b'*').count();
    words.sort_by(|a, b| stars(a).cmp(&stars(b)).then_with(|| a.cmp(b)));
    let name = |w: &[u8]| {
        if w.is_empty() {
            "()".to_string()
        } else {
            String::from_utf8(w.to_vec()).expect("ascii")
        }
    };
    let specs = words
        .iter()
        .map(|w| {
            let star_pos: Vec<usize> = w.iter().enumerate().filter(|(_, &c)| c == b'*').map(|(i, _)| i).collect();
            let face = |pos: usize, nu: u8| {
                let mut f = w.clone();
                f[pos] = b'0' + nu;
                name(&f)
            };
            CubeSpec {
                id: name(w),
                dim: star_pos.len(),
                d0: star_pos.iter().map(|&p| face(p, 0)).collect(),
                d1: star_pos.iter().map(|&p| face(p, 1)).collect(),
            }
        })
        .collect();
    let initial = name(&vec![b'0'; n]);
    Hda::from_specs(specs, &initial)
}

/// Pointwise product: `Z_n = X_n × Y_n`, faces componentwise. Cube ids are
/// `(x,y)`.
pub fn product(p: &PrecubicalSet, q: &PrecubicalSet) -> PrecubicalSet {
    let pair_id = |x: CubeId, y: CubeId| format!("({},{})", p.id(x), q.id(y));
    let mut specs = Vec::new();
    for x in p.cubes() {
        for y in q.cubes_of_dim(p.dim(x)) {
            specs.push(CubeSpec {
                id: pair_id(x, y),
                dim: p.dim(x),
                d0: (1..=p.dim(x)).map(|k| pair_id(p.face(x, k, 0), q.face(y, k, 0))).collect(),
                d1: (1..=p.dim(x)).map(|k| pair_id(p.face(x, k, 1), q.face(y, k, 1))).collect(),
            });
        }
    }
    // component ids containing "," or parentheses could collide; fall back
    // to deferred construction which still rejects duplicates
    PrecubicalSet::new_deferred(specs).expect("product of valid sets is well formed")
}

/// Product of two HDA, pointed at the pair of initial cubes.
pub fn product_hda(x: &Hda, y: &Hda) -> Result<Hda> {
    let set = product(x.set(), y.set());
    let init = format!("({},{})", x.set().id(x.initial()), y.set().id(y.initial()));
    Hda::new(set, &init)
}

/// Whether `ids` is closed under all face maps of `p`.
pub fn is_precubical_subset(ids: &[&str], p: &PrecubicalSet) -> Result<bool> {
    let members: HashSet<CubeId> = ids.iter().map(|id| p.require(id)).collect::<Result<_>>()?;
    Ok(is_face_closed(&members, p))
}

pub fn is_face_closed(members: &HashSet<CubeId>, p: &PrecubicalSet) -> bool {
    members.iter().all(|&c| p.lower_faces(c).iter().chain(p.upper_faces(c)).all(|f| members.contains(f)))
}

/// Cubes admitting a pointed cube path from the initial cube.
pub fn reachable(h: &Hda) -> HashSet<CubeId> {
    let set = h.set();
    let mut seen = HashSet::from([h.initial()]);
    let mut queue = VecDeque::from([h.initial()]);
    while let Some(c) = queue.pop_front() {
        for next in set.steps_from(c) {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// A graded map between the cubes of two precubical sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    map: Vec<CubeId>,
}

impl Morphism {
    /// Wraps a raw map without validation; see [`validate_morphism`].
    pub fn from_map(map: Vec<CubeId>) -> Self {
        Morphism { map }
    }

    /// Builds and validates a pointed morphism from `(source id, target id)`
    /// pairs, which must cover every source cube.
    pub fn from_pairs(source: &Hda, target: &Hda, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![None; source.set().len()];
        for (a, b) in pairs {
            map[source.set().require(a)?.0] = Some(target.set().require(b)?);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::Morphism(format!("`{}` is unmapped", source.set().id(CubeId(i))))))
            .collect::<Result<Vec<_>>>()?;
        let f = Morphism { map };
        f.check(source, target)?;
        Ok(f)
    }

    pub fn identity(set: &PrecubicalSet) -> Self {
        Morphism { map: set.cubes().collect() }
    }

    #[inline]
    pub fn apply(&self, c: CubeId) -> CubeId {
        self.map[c.0]
    }

    pub fn as_slice(&self) -> &[CubeId] {
        &self.map
    }

    pub fn compose(&self, after: &Morphism) -> Morphism {
        Morphism { map: self.map.iter().map(|&c| after.apply(c)).collect() }
    }

    /// Errors with the first violation if `self` is not a pointed morphism.
    pub fn check(&self, source: &Hda, target: &Hda) -> Result<()> {
        let v = validate_morphism(self, source.set(), target.set(), Some((source.initial(), target.initial())));
        match v.into_iter().next() {
            None => Ok(()),
            Some(msg) => Err(Error::Morphism(msg)),
        }
    }
}

/// Reports every way `f` fails to be a (pointed) precubical morphism.
pub fn validate_morphism(
    f: &Morphism,
    source: &PrecubicalSet,
    target: &PrecubicalSet,
    points: Option<(CubeId, CubeId)>,
) -> Vec<String> {
    let mut out = Vec::new();
    if f.map.len() != source.len() {
        out.push(format!("map covers {} of {} cubes", f.map.len(), source.len()));
        return out;
    }
    if let Some(bad) = f.map.iter().find(|c| c.0 >= target.len()) {
        out.push(format!("image {bad} is not a target cube"));
        return out;
    }
    for x in source.cubes() {
        let fx = f.apply(x);
        if source.dim(x) != target.dim(fx) {
            out.push(format!(
                "`{}` (dim {}) maps to `{}` (dim {})",
                source.id(x),
                source.dim(x),
                target.id(fx),
                target.dim(fx)
            ));
            continue;
        }
        for k in 1..=source.dim(x) {
            for nu in 0..=1u8 {
                if f.apply(source.face(x, k, nu)) != target.face(fx, k, nu) {
                    out.push(format!("face d{k}^{nu} of `{}` does not commute", source.id(x)));
                }
            }
        }
    }
    if let Some((i, j)) = points {
        if f.apply(i) != j {
            out.push(format!("initial `{}` maps to `{}`", source.id(i), target.id(f.apply(i))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_specs() -> Vec<CubeSpec> {
        vec![
            CubeSpec::vertex("v"),
            CubeSpec::vertex("a"),
            CubeSpec::vertex("b"),
            CubeSpec::vertex("c"),
            CubeSpec::new("e1", &["v"], &["a"]),
            CubeSpec::new("e2", &["v"], &["b"]),
            CubeSpec::new("f1", &["a"], &["c"]),
            CubeSpec::new("f2", &["b"], &["c"]),
            CubeSpec::new("s", &["e2", "e1"], &["f1", "f2"]),
        ]
    }

    #[test]
    fn standard_cube_counts() {
        let l = Limits::default();
        assert_eq!(standard_cube(0, &l).unwrap().set().counts(), vec![1]);
        assert_eq!(standard_cube(2, &l).unwrap().set().counts(), vec![4, 4, 1]);
        assert_eq!(standard_cube(3, &l).unwrap().set().counts(), vec![8, 12, 6, 1]);
        assert!(validate_precubical(standard_cube(4, &l).unwrap().set()).is_empty());
        assert!(standard_cube(11, &l).unwrap_err().is_resource());
    }

    #[test]
    fn square_is_valid() {
        assert!(validate_specs(&square_specs()).is_empty());
    }

    #[test]
    fn corrupted_square_has_one_violation() {
        let mut specs = square_specs();
        specs.push(CubeSpec::vertex("w"));
        specs.push(CubeSpec::new("g", &["w"], &["a"]));
        // bottom face now starts at w instead of v
        specs[8] = CubeSpec::new("s", &["e2", "g"], &["f1", "f2"]);
        let v = validate_specs(&specs);
        assert_eq!(v, vec![Violation::PrecubicalIdentity { cube: "s".into(), k: 1, l: 2, nu: 0, mu: 0 }]);
        assert!(PrecubicalSet::new(specs.clone()).is_err());
        assert!(PrecubicalSet::new_deferred(specs).is_ok());
    }

    #[test]
    fn structural_errors() {
        let v = validate_specs(&[CubeSpec::new("e", &["x"], &["y"])]);
        assert_eq!(v.len(), 2);
        let v = validate_specs(&[
            CubeSpec::vertex("v"),
            CubeSpec { id: "e".into(), dim: 1, d0: vec!["v".into(), "v".into()], d1: vec!["v".into()] },
        ]);
        assert!(matches!(v[0], Violation::FaceCount { .. }));
        let v = validate_specs(&[CubeSpec::vertex("v"), CubeSpec::vertex("v")]);
        assert_eq!(v, vec![Violation::DuplicateId("v".into())]);
        let v = validate_specs(&[
            CubeSpec::vertex("v"),
            CubeSpec::new("e", &["v"], &["v"]),
            CubeSpec::new("bad", &["v"], &["e"]),
        ]);
        assert!(matches!(v[0], Violation::FaceDimension { .. }));
    }

    #[test]
    fn initial_must_be_vertex() {
        let set = PrecubicalSet::new(square_specs()).unwrap();
        assert!(Hda::new(set.clone(), "e1").is_err());
        assert!(Hda::new(set.clone(), "nope").is_err());
        assert!(Hda::new(set, "v").is_ok());
        assert!(Hda::new(PrecubicalSet::empty(), "v").is_err());
    }

    #[test]
    fn product_of_edges_is_not_a_square() {
        let l = Limits::default();
        let e = standard_cube(1, &l).unwrap();
        let p = product(e.set(), e.set());
        assert_eq!(p.counts(), vec![4, 1]);
        assert!(validate_precubical(&p).is_empty());
        assert!(product(e.set(), &PrecubicalSet::empty()).is_empty());
    }

    #[test]
    fn product_projections_are_morphisms() {
        let l = Limits::default();
        let x = standard_cube(2, &l).unwrap();
        let y = standard_cube(1, &l).unwrap();
        let p = product(x.set(), y.set());
        let mut left = Vec::new();
        let mut right = Vec::new();
        for c in p.cubes() {
            let id = p.id(c);
            let inner = &id[1..id.len() - 1];
            let (a, b) = inner.split_once(',').unwrap();
            left.push(x.set().require(a).unwrap());
            right.push(y.set().require(b).unwrap());
        }
        assert!(validate_morphism(&Morphism::from_map(left), &p, x.set(), None).is_empty());
        assert!(validate_morphism(&Morphism::from_map(right), &p, y.set(), None).is_empty());
    }

    #[test]
    fn subsets() {
        let set = PrecubicalSet::new(square_specs()).unwrap();
        let all: Vec<&str> = set.cubes().map(|c| set.id(c)).collect();
        assert!(is_precubical_subset(&all, &set).unwrap());
        assert!(!is_precubical_subset(&["e1"], &set).unwrap());
        assert!(is_precubical_subset(&["e1", "v", "a"], &set).unwrap());
        assert!(is_precubical_subset(&["zz"], &set).is_err());
    }

    #[test]
    fn reachability() {
        let l = Limits::default();
        let sq = standard_cube(2, &l).unwrap();
        assert_eq!(reachable(&sq).len(), 9);
        // pointed at the far end of an edge
        let e = Hda::from_specs(
            vec![CubeSpec::vertex("u"), CubeSpec::vertex("w"), CubeSpec::new("e", &["u"], &["w"])],
            "w",
        )
        .unwrap();
        let r = reachable(&e);
        assert_eq!(r.len(), 1);
        assert!(r.contains(&e.initial()));
    }

    #[test]
    fn identity_morphism_and_perturbation() {
        let h = Hda::from_specs(square_specs(), "v").unwrap();
        let id = Morphism::identity(h.set());
        assert!(id.check(&h, &h).is_ok());
        for c in h.set().cubes() {
            for d in h.set().cubes_of_dim(h.set().dim(c)) {
                if d == c {
                    continue;
                }
                let mut map = id.as_slice().to_vec();
                map[c.0] = d;
                let f = Morphism::from_map(map);
                assert!(f.check(&h, &h).is_err(), "perturbing {} -> {}", h.set().id(c), h.set().id(d));
            }
        }
    }
}
