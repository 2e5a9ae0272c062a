//! Random HDA and random cube paths for tests and benchmarks.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::labels::infer_labeling;
use crate::precubical::{standard_cube, CubeId, CubeSpec, Hda, Limits};

#[derive(Clone, Debug)]
pub struct RandomHdaConfig {
    pub vertices: usize,
    pub edges: usize,
    /// Edges only go from lower- to higher-numbered vertices.
    pub acyclic: bool,
    pub alphabet: Vec<String>,
    /// Chance of filling each eligible diamond with a square.
    pub fill: f64,
    /// Glue a labeled standard 3-cube behind a random vertex.
    pub glue_cube: bool,
}

impl Default for RandomHdaConfig {
    fn default() -> Self {
        RandomHdaConfig {
            vertices: 5,
            edges: 6,
            acyclic: true,
            alphabet: vec!["a".into(), "b".into()],
            fill: 0.7,
            glue_cube: false,
        }
    }
}

/// A labeled HDA pointed at `v0`. Squares fill diamonds whose opposite
/// edges carry equal labels; the direction with the smaller label becomes
/// direction 1.
pub fn random_hda<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomHdaConfig) -> Hda {
    let n = cfg.vertices.max(1);
    let mut specs: Vec<CubeSpec> = (0..n).map(|i| CubeSpec::vertex(format!("v{i}"))).collect();
    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    if n > 1 {
        for _ in 0..cfg.edges {
            let (s, t) = loop {
                let s = rng.gen_range(0..n);
                let t = rng.gen_range(0..n);
                if s == t {
                    continue;
                }
                break if cfg.acyclic { (s.min(t), s.max(t)) } else { (s, t) };
            };
            let label = cfg.alphabet.choose(rng).expect("non-empty alphabet").clone();
            edges.push((s, t, label));
        }
    }
    let mut labels = BTreeMap::new();
    for (i, (s, t, l)) in edges.iter().enumerate() {
        let id = format!("e{i}");
        specs.push(CubeSpec::new(id.clone(), &[&format!("v{s}")], &[&format!("v{t}")]));
        labels.insert(id, l.clone());
    }
    let mut seen = HashSet::new();
    let mut squares = 0;
    for (i1, e1) in edges.iter().enumerate() {
        for (i2, e2) in edges.iter().enumerate() {
            // e1 is direction 1, e2 direction 2
            if i1 == i2 || e1.0 != e2.0 || e1.2 > e2.2 || (e1.2 == e2.2 && i1 > i2) {
                continue;
            }
            for (j1, f1) in edges.iter().enumerate() {
                // f1 leaves tgt(e1) parallel to e2
                if f1.0 != e1.1 || f1.2 != e2.2 || j1 == i1 || j1 == i2 {
                    continue;
                }
                for (j2, f2) in edges.iter().enumerate() {
                    if f2.0 != e2.1 || f2.1 != f1.1 || f2.2 != e1.2 || j2 == j1 || j2 == i1 || j2 == i2 {
                        continue;
                    }
                    let mut key = [i1, i2, j1, j2];
                    key.sort_unstable();
                    if !seen.insert(key) || !rng.gen_bool(cfg.fill) {
                        continue;
                    }
                    specs.push(CubeSpec::new(
                        format!("q{squares}"),
                        &[&format!("e{i2}"), &format!("e{i1}")],
                        &[&format!("e{j1}"), &format!("e{j2}")],
                    ));
                    squares += 1;
                }
            }
        }
    }
    if cfg.glue_cube {
        let cube = standard_cube(3, &Limits::default()).expect("3-cube within bounds");
        let set = cube.set();
        let name = |c: CubeId| format!("c{}", set.id(c));
        for s in set.to_specs() {
            let c = set.require(&s.id).expect("own id");
            specs.push(CubeSpec {
                id: name(c),
                dim: s.dim,
                d0: s.d0.iter().map(|f| format!("c{f}")).collect(),
                d1: s.d1.iter().map(|f| format!("c{f}")).collect(),
            });
            if s.dim == 1 {
                labels.insert(name(c), cfg.alphabet[0].clone());
            }
        }
        let from = rng.gen_range(0..n);
        specs.push(CubeSpec::new("glue", &[&format!("v{from}")], &[&name(cube.initial())]));
        labels.insert("glue".into(), cfg.alphabet.choose(rng).expect("non-empty").clone());
    }
    let hda = Hda::from_specs(specs, "v0").expect("generator builds valid sets");
    let l = infer_labeling(&hda, &labels).expect("generator labels consistently");
    hda.with_labeling(l).expect("inferred labeling is valid")
}

/// A random cube path of at most `len` cubes starting at `start`; stops
/// early at a cube with no successor.
pub fn random_walk<R: Rng + ?Sized>(rng: &mut R, h: &Hda, start: CubeId, len: usize) -> Vec<CubeId> {
    let set = h.set();
    let mut path = vec![start];
    while path.len() < len {
        let succ: Vec<CubeId> = set.steps_from(*path.last().expect("non-empty")).collect();
        match succ.choose(rng) {
            Some(&c) => path.push(c),
            None => break,
        }
    }
    path
}
