#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use hda_core::game::DEFAULT_ROUND_LIMIT;
use hda_core::{parse_hda, CubeId, Game, Hda, Move, Role, Side};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "hda"))
        .collect();
    files.sort();
    files
}

pub fn load(name: &str) -> Hda {
    let path = corpus_dir().join(format!("{name}.hda"));
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_hda(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn id(h: &Hda, name: &str) -> CubeId {
    h.set().require(name).unwrap()
}

/// A scripted spoiler step, named by the cube it reaches.
#[derive(Clone, Copy, Debug)]
pub enum Step<'a> {
    Extend(Side, &'a str),
    /// Retreat on both sides; the name is the face reached on side A.
    RetreatTo(&'a str),
}

/// Resolves a scripted step to a move at the game's current pair.
pub fn resolve(game: &Game, step: Step<'_>) -> Move {
    let (x, y) = game.pair();
    match step {
        Step::Extend(side, target) => {
            let h = game.hda(side);
            let cur = if side == Side::A { x } else { y };
            let t = id(h, target);
            let &(_, k) = h
                .set()
                .lower_cofaces(cur)
                .iter()
                .find(|&&(c, _)| c == t)
                .unwrap_or_else(|| panic!("{target} does not extend {}", h.set().id(cur)));
            Move::Extend { side, k, target: target.to_string() }
        }
        Step::RetreatTo(face) => {
            let set = game.hda(Side::A).set();
            let f = id(game.hda(Side::A), face);
            for k in 1..=set.dim(x) {
                for nu in 0..=1u8 {
                    if set.face(x, k, nu) == f {
                        return Move::Retreat { k, nu };
                    }
                }
            }
            panic!("{face} is not a face of {}", set.id(x))
        }
    }
}

/// Plays a spoiler script against the engine duplicator. Returns the game
/// and the engine's replies.
pub fn replay(a: Hda, b: Hda, labeled: bool, script: &[Step<'_>]) -> (Game, Vec<Option<Move>>) {
    let mut game = Game::new(a, b, Role::Spoiler, labeled, DEFAULT_ROUND_LIMIT).unwrap();
    let mut replies = Vec::new();
    for &step in script {
        let m = resolve(&game, step);
        replies.push(game.play(m).unwrap());
    }
    (game, replies)
}

/// Lets the engine play the spoiler against the engine duplicator.
pub fn autoplay_spoiler(a: Hda, b: Hda, labeled: bool) -> Game {
    let mut game = Game::new(a, b, Role::Spoiler, labeled, DEFAULT_ROUND_LIMIT).unwrap();
    while let Some(m) = game.engine_choice() {
        game.play(m).unwrap();
    }
    game
}

pub fn fan_script() -> Vec<Step<'static>> {
    vec![
        Step::Extend(Side::A, "y16"),
        Step::Extend(Side::A, "z5"),
        Step::RetreatTo("y15"),
        Step::Extend(Side::B, "z3'"),
    ]
}

pub fn grid_script() -> Vec<Step<'static>> {
    vec![
        Step::Extend(Side::A, "y1"),
        Step::Extend(Side::A, "z1"),
        Step::RetreatTo("y4"),
        Step::Extend(Side::A, "z2"),
        Step::RetreatTo("y8"),
        Step::Extend(Side::A, "z4"),
        Step::RetreatTo("y12"),
        Step::Extend(Side::A, "z5"),
    ]
}

/// Pairs listed for the merge example's witnessing relation.
pub const MERGE_PAIRS: [(&str, &str); 11] = [
    ("x0", "x0'"),
    ("x1", "x1'"),
    ("x2", "x2'"),
    ("x3", "x4'"),
    ("x4", "x4'"),
    ("y1", "y1'"),
    ("y2", "y2'"),
    ("y3", "y4'"),
    ("y4", "y4'"),
    ("y5", "y5'"),
    ("z", "z'"),
];
