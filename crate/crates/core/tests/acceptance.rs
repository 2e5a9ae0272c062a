//! One PASS/FAIL line per acceptance criterion, written past the test
//! harness's output capture.

mod common;

use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use common::*;
use hda_core::paths::{parity_holds, pointed_paths};
use hda_core::random::{random_hda, random_walk, RandomHdaConfig};
use hda_core::{
    complete_depth, exhaustive_bisim_oracle, hd_bisim, homotopic, homotopy_bisim_check, is_fan_shaped, is_hd_tree,
    is_open, lift_path, normalize_fan, reachable, serialize_hda, standard_cube, t_measure, unfold, validate_precubical,
    witness_span, CubeId, CubePath, Hda, HdaDocument, Limits, Morphism, Status,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn merge_relation() -> Outcome {
    let (a, b) = (load("merge_left"), load("merge_right"));
    let r = hd_bisim(&a, &b, true).map_err(|e| e.to_string())?;
    ensure!(r.bisimilar, "merge pair reported not bisimilar");
    for (x, y) in MERGE_PAIRS {
        ensure!(r.relation.survives(id(&a, x), id(&b, y)), "pair ({x}, {y}) missing");
    }
    Ok(())
}

fn spoiler_examples() -> Outcome {
    for (l, r) in [("fan_left", "fan_right"), ("grid_left", "grid_right")] {
        let (a, b) = (load(l), load(r));
        ensure!(!hd_bisim(&a, &b, true).unwrap().bisimilar, "{l}: reported bisimilar");
        let g = autoplay_spoiler(a, b, true);
        ensure!(g.status() == Status::SpoilerWon, "{l}: strategy autoplay ended {:?}", g.status());
    }
    let (g, _) = replay(load("fan_left"), load("fan_right"), true, &fan_script());
    ensure!(g.status() == Status::SpoilerWon, "fan script ended {:?}", g.status());
    let (g, _) = replay(load("grid_left"), load("grid_right"), true, &grid_script());
    ensure!(g.status() == Status::SpoilerWon, "grid script ended {:?}", g.status());
    Ok(())
}

fn interleaving_pair() -> Outcome {
    let (a, b) = (load("ab_parallel"), load("ab_interleaved"));
    let fast = hd_bisim(&a, &b, true).unwrap().bisimilar;
    ensure!(!fast, "labeled a|b reported bisimilar to a.b+b.a");
    let limits = Limits { oracle_bound: a.set().len() * b.set().len(), ..Limits::default() };
    let slow = exhaustive_bisim_oracle(&a, &b, true, &limits).map_err(|e| e.to_string())?;
    ensure!(fast == slow, "oracle says {slow}");
    Ok(())
}

fn tiny(rng: &mut ChaCha8Rng) -> Hda {
    let cfg = RandomHdaConfig {
        vertices: rng.gen_range(1..4),
        edges: rng.gen_range(0..4),
        acyclic: rng.gen_bool(0.5),
        alphabet: if rng.gen_bool(0.5) { vec!["a".into()] } else { vec!["a".into(), "b".into()] },
        ..Default::default()
    };
    random_hda(rng, &cfg)
}

fn oracle_agreement() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut checked, mut positive) = (0, 0);
    while checked < 300 {
        let (a, b) = (tiny(&mut rng), tiny(&mut rng));
        if a.set().len() * b.set().len() > limits.oracle_bound {
            continue;
        }
        let labeled = rng.gen_bool(0.5);
        let fast = hd_bisim(&a, &b, labeled).unwrap().bisimilar;
        let slow = exhaustive_bisim_oracle(&a, &b, labeled, &limits).unwrap();
        ensure!(fast == slow, "disagreement on\n{}\n{}", serialize_hda(&a), serialize_hda(&b));
        checked += 1;
        positive += usize::from(fast);
    }
    ensure!(positive > 0 && positive < checked, "degenerate sample: {positive} of {checked} bisimilar");
    Ok(())
}

fn monotone_paths_in_cubes() -> Outcome {
    let limits = Limits::default();
    for (n, expected) in [(2, 2), (3, 6), (4, 24)] {
        let cube = standard_cube(n, &limits).unwrap();
        let set = cube.set();
        let top = set.cubes_of_dim(n).next().unwrap();
        let monotone: Vec<CubePath> = pointed_paths(&cube, n + 1, &limits)
            .unwrap()
            .into_iter()
            .filter(|p| p.len() == n + 1 && p.last() == Some(&top))
            .map(|p| CubePath::new(set, p).unwrap())
            .collect();
        ensure!(monotone.len() == expected, "n={n}: {} monotone paths", monotone.len());
        for p in &monotone[1..] {
            ensure!(homotopic(set, &monotone[0], p, &limits).unwrap(), "n={n}: paths not homotopic");
        }
    }
    Ok(())
}

fn fan_normalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let limits = Limits::default();
    let (mut checked, mut rewritten) = (0, 0);
    while checked < 500 {
        let cfg = RandomHdaConfig {
            vertices: rng.gen_range(2..6),
            edges: rng.gen_range(2..8),
            glue_cube: true,
            ..Default::default()
        };
        let h = random_hda(&mut rng, &cfg);
        let set = h.set();
        let len = rng.gen_range(1..14);
        let rho = CubePath::new(set, random_walk(&mut rng, &h, h.initial(), len)).unwrap();
        ensure!(parity_holds(set, &rho), "parity fails on input");
        let out = normalize_fan(set, &rho).map_err(|e| e.to_string())?;
        let (m, n) = (out.path.len(), set.dim(out.path.last()));
        ensure!(is_fan_shaped(set, &out.path), "not fan-shaped");
        ensure!(parity_holds(set, &out.path), "parity fails on output");
        ensure!(2 * t_measure(set, &out.path) == n * n + m - 1, "T mismatch");
        ensure!(2 * out.rewrites == t_measure(set, &rho) - t_measure(set, &out.path), "rewrite count mismatch");
        ensure!(homotopic(set, &rho, &out.path, &limits).unwrap(), "normal form not homotopic");
        checked += 1;
        rewritten += usize::from(out.rewrites > 0);
    }
    ensure!(rewritten >= 50, "only {rewritten} paths needed rewriting");
    Ok(())
}

fn projection_is_iso(h: &Hda) -> Result<(), String> {
    let limits = Limits::default();
    let u = unfold(h, complete_depth(h).unwrap(), &limits).unwrap();
    let proj = u.projection();
    let mut image: Vec<CubeId> = u.hda().set().cubes().map(|c| proj.apply(c)).collect();
    image.sort();
    image.dedup();
    ensure!(image.len() == h.set().len() && u.hda().set().len() == h.set().len(), "projection not bijective");
    let mut inverse = vec![CubeId(0); h.set().len()];
    for c in u.hda().set().cubes() {
        inverse[proj.apply(c).0] = c;
    }
    ensure!(Morphism::from_map(inverse).check(h, u.hda()).is_ok(), "inverse is not a morphism");
    Ok(())
}

fn unfolding_trees() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let cfg = RandomHdaConfig {
            vertices: rng.gen_range(2..5),
            edges: rng.gen_range(1..7),
            acyclic: rng.gen_bool(0.5),
            glue_cube: rng.gen_bool(0.2),
            ..Default::default()
        };
        let h = random_hda(&mut rng, &cfg);
        let u = unfold(&h, rng.gen_range(1..7), &limits).unwrap();
        ensure!(is_hd_tree(u.hda(), &limits).unwrap(), "non-truncated part is not a tree");
    }
    projection_is_iso(&load("path_object"))?;
    projection_is_iso(&standard_cube(2, &limits).unwrap())?;
    let chain = unfold(&load("cycle_two"), 5, &limits).unwrap();
    ensure!(chain.hda().set().counts() == vec![3, 2], "two-cycle unfolds to {:?}", chain.hda().set().counts());
    Ok(())
}

fn homotopy_agreement() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut positive = 0;
    for _ in 0..120 {
        let gen = |rng: &mut ChaCha8Rng| {
            let cfg = RandomHdaConfig {
                vertices: rng.gen_range(2..5),
                edges: rng.gen_range(1..6),
                alphabet: vec!["a".into(), "b".into()],
                glue_cube: rng.gen_bool(0.1),
                ..Default::default()
            };
            random_hda(rng, &cfg)
        };
        let (a, b) = (gen(&mut rng), gen(&mut rng));
        let labeled = rng.gen_bool(0.5);
        let depth = complete_depth(&a).unwrap().max(complete_depth(&b).unwrap());
        let direct = hd_bisim(&a, &b, labeled).unwrap().bisimilar;
        let via = homotopy_bisim_check(&a, &b, depth, labeled, &limits).unwrap();
        ensure!(direct == via, "disagreement on\n{}\n{}", serialize_hda(&a), serialize_hda(&b));
        positive += usize::from(direct);
    }
    ensure!(positive > 0, "no bisimilar pair sampled");
    Ok(())
}

fn lift_many(f: &Morphism, x: &Hda, y: &Hda, rng: &mut ChaCha8Rng) -> Outcome {
    ensure!(is_open(f, x, y).unwrap(), "map is not open");
    let mut cubes: Vec<CubeId> = reachable(x).into_iter().collect();
    cubes.sort();
    for _ in 0..100 {
        let x1 = *cubes.choose(rng).unwrap();
        let len = rng.gen_range(1..10);
        let walk = random_walk(rng, y, f.apply(x1), len);
        let lifted = lift_path(f, x, y, x1, &walk).map_err(|e| e.to_string())?;
        ensure!(lifted.iter().map(|&c| f.apply(c)).eq(walk.iter().copied()), "lift does not map onto path");
    }
    Ok(())
}

fn open_maps_lift() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let cfg = RandomHdaConfig {
            vertices: rng.gen_range(2..6),
            edges: rng.gen_range(1..8),
            glue_cube: rng.gen_bool(0.3),
            ..Default::default()
        };
        let h = random_hda(&mut rng, &cfg);
        let u = unfold(&h, complete_depth(&h).unwrap(), &limits).unwrap();
        lift_many(u.projection(), u.hda(), &h, &mut rng)?;
    }
    let (a, b) = (load("merge_left"), load("merge_right"));
    let span = witness_span(&a, &b, &hd_bisim(&a, &b, true).unwrap()).unwrap();
    lift_many(&span.left, &span.hda, &a, &mut rng)?;
    lift_many(&span.right, &span.hda, &b, &mut rng)?;
    Ok(())
}

fn corpus_round_trip() -> Outcome {
    let files = corpus_files();
    ensure!(files.len() >= 14, "corpus has {} files", files.len());
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let doc = HdaDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(doc.to_json() == text, "{}: not byte-identical", path.display());
        let h = doc.to_hda().map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(validate_precubical(h.set()).is_empty(), "{}: invalid", path.display());
        let back = HdaDocument::parse(&serialize_hda(&h)).unwrap();
        ensure!(back == doc.without_positions(), "{}: round trip differs", path.display());
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("merge example: bisimilar with the listed relation", merge_relation),
        ("fan and grid examples: spoiler wins by strategy and by script", spoiler_examples),
        ("labeled a|b versus a.b+b.a: not bisimilar, oracle agrees", interleaving_pair),
        ("oracle agreement on random pairs", oracle_agreement),
        ("monotone paths in standard cubes: n! of them, all homotopic", monotone_paths_in_cubes),
        ("fan normal form on random paths", fan_normalization),
        ("unfoldings: trees, isomorphic projections, two-cycle chain", unfolding_trees),
        ("homotopy bisimilarity agrees with hd-bisimilarity", homotopy_agreement),
        ("open maps: projections open, random paths lift", open_maps_lift),
        ("corpus round-trip and validation", corpus_round_trip),
    ];
    let mut failed = 0;
    std::io::stderr().write_all(b"\n").unwrap();
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let line = match outcome {
            Ok(()) => format!("PASS {name}\n"),
            Err(e) => {
                failed += 1;
                format!("FAIL {name}: {e}\n")
            }
        };
        std::io::stderr().write_all(line.as_bytes()).unwrap();
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
