//! The bisimulation game between a spoiler and a duplicator, with an
//! engine that plays from the fixed point's ranks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bisim::{hd_bisim, BisimResult};
use crate::error::{Error, Result};
use crate::precubical::{CubeId, Hda};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// An upward step on one side, or a face step taken on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Move {
    Extend { side: Side, k: usize, target: String },
    Retreat { k: usize, nu: u8 },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Extend { side, k, target } => write!(f, "extend {side:?} k={k} to {target}"),
            Move::Retreat { k, nu } => write!(f, "retreat k={k} nu={nu}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Spoiler,
    Duplicator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Running,
    SpoilerWon,
    DuplicatorWon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub player: Role,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// Wire form of a game configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GamePosition {
    pub pair: (String, String),
    /// The extend challenge awaiting an answer, if any.
    pub pending: Option<Move>,
    pub turn: Role,
    pub rounds: usize,
    pub round_limit: usize,
    pub history: Vec<HistoryEntry>,
    pub status: Status,
}

#[derive(Clone, Debug)]
pub struct Game {
    a: Hda,
    b: Hda,
    labeled: bool,
    human: Role,
    round_limit: usize,
    result: BisimResult,
    x: CubeId,
    y: CubeId,
    pending: Option<(Side, usize, CubeId)>,
    turn: Role,
    rounds: usize,
    history: Vec<HistoryEntry>,
    status: Status,
}

pub const DEFAULT_ROUND_LIMIT: usize = 100;

impl Game {
    /// Starts at the pair of initial cubes. When the human duplicates, the
    /// engine's opening challenge is already played.
    pub fn new(a: Hda, b: Hda, human: Role, labeled: bool, round_limit: usize) -> Result<Self> {
        let result = hd_bisim(&a, &b, labeled)?;
        let (x, y) = (a.initial(), b.initial());
        let mut game = Game {
            a,
            b,
            labeled,
            human,
            round_limit,
            result,
            x,
            y,
            pending: None,
            turn: Role::Spoiler,
            rounds: 0,
            history: Vec::new(),
            status: Status::Running,
        };
        if game.spoiler_moves().is_empty() {
            game.status = Status::DuplicatorWon;
        }
        game.run_engine();
        Ok(game)
    }

    pub fn result(&self) -> &BisimResult {
        &self.result
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn human(&self) -> Role {
        self.human
    }

    pub fn pair(&self) -> (CubeId, CubeId) {
        (self.x, self.y)
    }

    pub fn hda(&self, side: Side) -> &Hda {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn position(&self) -> GamePosition {
        GamePosition {
            pair: (self.a.set().id(self.x).to_string(), self.b.set().id(self.y).to_string()),
            pending: self.pending.map(|(side, k, t)| Move::Extend {
                side,
                k,
                target: self.hda(side).set().id(t).to_string(),
            }),
            turn: self.turn,
            rounds: self.rounds,
            round_limit: self.round_limit,
            history: self.history.clone(),
            status: self.status,
        }
    }

    fn cube(&self, side: Side) -> CubeId {
        match side {
            Side::A => self.x,
            Side::B => self.y,
        }
    }

    fn spoiler_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for side in [Side::A, Side::B] {
            let set = self.hda(side).set();
            for &(c, k) in set.lower_cofaces(self.cube(side)) {
                out.push(Move::Extend { side, k, target: set.id(c).to_string() });
            }
        }
        for k in 1..=self.a.set().dim(self.x) {
            for nu in 0..=1u8 {
                out.push(Move::Retreat { k, nu });
            }
        }
        out
    }

    /// Answers to the pending challenge as `(cube on the answering side)`.
    fn answers(&self) -> Vec<CubeId> {
        let Some((side, k, target)) = self.pending else { return Vec::new() };
        let other = side.other();
        let set = self.hda(other).set();
        set.lower_cofaces(self.cube(other))
            .iter()
            .filter(|&&(c, k2)| {
                k2 == k
                    && (!self.labeled
                        || self.hda(side).labeling().map(|l| l.word(target))
                            == self.hda(other).labeling().map(|l| l.word(c)))
            })
            .map(|&(c, _)| c)
            .collect()
    }

    /// Moves available to whoever is to move.
    pub fn legal_moves(&self) -> Result<Vec<Move>> {
        if self.status != Status::Running {
            return Err(Error::GameOver(format!("{:?}", self.status)));
        }
        Ok(match self.turn {
            Role::Spoiler => self.spoiler_moves(),
            Role::Duplicator => {
                let (side, k, _) = self.pending.expect("duplicator moves only with a pending challenge");
                let other = side.other();
                let set = self.hda(other).set();
                self.answers()
                    .into_iter()
                    .map(|c| Move::Extend { side: other, k, target: set.id(c).to_string() })
                    .collect()
            }
        })
    }

    /// The pair reached if the duplicator answers the pending challenge
    /// with `c`.
    fn answer_pair(&self, c: CubeId) -> (CubeId, CubeId) {
        let (side, _, t) = self.pending.expect("pending challenge");
        match side {
            Side::A => (t, c),
            Side::B => (c, t),
        }
    }

    /// What the engine would play for the side to move.
    pub fn engine_choice(&self) -> Option<Move> {
        if self.status != Status::Running {
            return None;
        }
        match self.turn {
            Role::Spoiler => {
                if let Some(m) = self.result.strategy.get(&(self.x, self.y)) {
                    return Some(m.clone());
                }
                self.spoiler_moves().into_iter().next()
            }
            Role::Duplicator => {
                let answers = self.answers();
                let rel = &self.result.relation;
                let pick = answers
                    .iter()
                    .copied()
                    .find(|&c| {
                        let (p, q) = self.answer_pair(c);
                        rel.survives(p, q)
                    })
                    .or_else(|| {
                        // highest rank; first among equals
                        let mut best: Option<(u32, CubeId)> = None;
                        for &c in &answers {
                            let (p, q) = self.answer_pair(c);
                            let r = rel.rank(p, q).unwrap_or(u32::MAX);
                            if best.is_none_or(|(br, _)| r > br) {
                                best = Some((r, c));
                            }
                        }
                        best.map(|(_, c)| c)
                    })?;
                let (side, k, _) = self.pending.expect("pending challenge");
                let other = side.other();
                Some(Move::Extend { side: other, k, target: self.hda(other).set().id(pick).to_string() })
            }
        }
    }

    fn apply(&mut self, m: Move) -> Result<()> {
        if self.status != Status::Running {
            return Err(Error::GameOver(format!("{:?}", self.status)));
        }
        let legal = self.legal_moves()?;
        if !legal.contains(&m) {
            return Err(Error::IllegalMove {
                reason: format!("{m} is not legal for the {:?}", self.turn),
                legal: legal.iter().map(|l| serde_json::to_string(l).expect("moves serialize")).collect(),
            });
        }
        let player = self.turn;
        match (&m, player) {
            (Move::Retreat { k, nu }, Role::Spoiler) => {
                self.x = self.a.set().face(self.x, *k, *nu);
                self.y = self.b.set().face(self.y, *k, *nu);
                self.rounds += 1;
            }
            (Move::Extend { side, k, target }, Role::Spoiler) => {
                let t = self.hda(*side).set().require(target)?;
                self.pending = Some((*side, *k, t));
                self.turn = Role::Duplicator;
                self.rounds += 1;
            }
            (Move::Extend { target, side, .. }, Role::Duplicator) => {
                let c = self.hda(*side).set().require(target)?;
                let (p, q) = self.answer_pair(c);
                self.x = p;
                self.y = q;
                self.pending = None;
                self.turn = Role::Spoiler;
            }
            (Move::Retreat { .. }, Role::Duplicator) => unreachable!("never legal"),
        }
        self.history.push(HistoryEntry { player, mv: m });
        self.settle();
        Ok(())
    }

    fn settle(&mut self) {
        match self.turn {
            Role::Duplicator => {
                if self.answers().is_empty() {
                    self.status = Status::SpoilerWon;
                }
            }
            Role::Spoiler => {
                if self.rounds >= self.round_limit || self.spoiler_moves().is_empty() {
                    self.status = Status::DuplicatorWon;
                }
            }
        }
    }

    fn run_engine(&mut self) -> Option<Move> {
        let mut last = None;
        while self.status == Status::Running && self.turn != self.human {
            let m = self.engine_choice().expect("running game has a move");
            self.apply(m.clone()).expect("engine moves are legal");
            last = Some(m);
        }
        last
    }

    /// Plays the human's move and lets the engine respond. Returns the
    /// engine's last move, if it moved.
    pub fn play(&mut self, m: Move) -> Result<Option<Move>> {
        if self.status == Status::Running && self.turn != self.human {
            return Err(Error::IllegalMove { reason: "not the human's turn".into(), legal: Vec::new() });
        }
        self.apply(m)?;
        Ok(self.run_engine())
    }
}
