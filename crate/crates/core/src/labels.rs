//! Label tori and labelings of HDA.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precubical::{CubeId, Hda, PrecubicalSet};

/// A cube of the label torus: a non-decreasing word over the alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabelWord(Vec<String>);

impl LabelWord {
    /// Sorts the given letters into a word.
    pub fn new<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = letters.into_iter().map(Into::into).collect();
        v.sort();
        LabelWord(v)
    }

    pub fn empty() -> Self {
        LabelWord(Vec::new())
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for LabelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&self.0.concat())
    }
}

/// Face map of the torus: drop the `k`-th letter. `nu` plays no role.
pub fn torus_face(w: &LabelWord, k: usize, _nu: u8) -> Result<LabelWord> {
    if k == 0 || k > w.len() {
        return Err(Error::Input(format!("face index {k} out of range for word of length {}", w.len())));
    }
    let mut v = w.0.clone();
    v.remove(k - 1);
    Ok(LabelWord(v))
}

/// Applies an alphabet map letterwise and re-sorts.
pub fn lift_function<F>(f: F, w: &LabelWord) -> LabelWord
where
    F: Fn(&str) -> String,
{
    LabelWord::new(w.0.iter().map(|l| f(l)))
}

/// Assignment of a word to every cube, indexed by [`CubeId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    alphabet: BTreeSet<String>,
    words: Vec<LabelWord>,
}

impl Labeling {
    pub fn from_words(words: Vec<LabelWord>) -> Self {
        let alphabet = words.iter().flat_map(|w| w.0.iter().cloned()).collect();
        Labeling { alphabet, words }
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    pub fn word(&self, c: CubeId) -> &LabelWord {
        &self.words[c.0]
    }

    pub fn words(&self) -> &[LabelWord] {
        &self.words
    }

    /// Labels of 1-cubes, keyed by cube id.
    pub fn edge_labels(&self, set: &PrecubicalSet) -> BTreeMap<String, String> {
        set.cubes_of_dim(1).map(|e| (set.id(e).to_string(), self.words[e.0].0[0].clone())).collect()
    }

    /// Pulls a labeling back along a cube map.
    pub fn pull_back(&self, map: impl Fn(CubeId) -> CubeId, len: usize) -> Labeling {
        Labeling {
            alphabet: self.alphabet.clone(),
            words: (0..len).map(|i| self.words[map(CubeId(i)).0].clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelViolation {
    pub cube: String,
    pub reason: String,
}

/// Checks that the labeling is a precubical map into the torus.
pub fn validate_labeling(h: &Hda, lambda: &Labeling) -> Vec<LabelViolation> {
    let set = h.set();
    let mut out = Vec::new();
    if lambda.words.len() != set.len() {
        out.push(LabelViolation {
            cube: String::new(),
            reason: format!("{} words for {} cubes", lambda.words.len(), set.len()),
        });
        return out;
    }
    for x in set.cubes() {
        let w = lambda.word(x);
        if w.len() != set.dim(x) {
            out.push(LabelViolation {
                cube: set.id(x).to_string(),
                reason: format!("word `{w}` has length {} but cube has dimension {}", w.len(), set.dim(x)),
            });
            continue;
        }
        if w.0.windows(2).any(|p| p[0] > p[1]) {
            out.push(LabelViolation { cube: set.id(x).to_string(), reason: format!("word `{w}` is not sorted") });
            continue;
        }
        for k in 1..=set.dim(x) {
            let expected = torus_face(w, k, 0).expect("k in range");
            for nu in 0..=1u8 {
                let f = set.face(x, k, nu);
                if lambda.word(f) != &expected {
                    out.push(LabelViolation {
                        cube: set.id(x).to_string(),
                        reason: format!(
                            "face d{k}^{nu} `{}` is labeled `{}`, expected `{expected}`",
                            set.id(f),
                            lambda.word(f)
                        ),
                    });
                }
            }
        }
    }
    out
}

/// Extends 1-cube labels to all cubes. The direction-`k` letter of an
/// `n`-cube is read off the edge reached by `δ_1^0` applied `k-1` times
/// followed by `δ_2^0` applied `n-k` times.
pub fn infer_labeling(h: &Hda, edge_labels: &BTreeMap<String, String>) -> Result<Labeling> {
    let set = h.set();
    for id in edge_labels.keys() {
        let c = set.require(id)?;
        if set.dim(c) != 1 {
            return Err(Error::Labeling { cube: id.clone(), reason: "only 1-cubes carry input labels".into() });
        }
    }
    let mut words = Vec::with_capacity(set.len());
    for x in set.cubes() {
        let n = set.dim(x);
        let mut letters = Vec::with_capacity(n);
        for k in 1..=n {
            let mut e = x;
            for _ in 1..k {
                e = set.face(e, 1, 0);
            }
            for _ in k..n {
                e = set.face(e, 2, 0);
            }
            let label = edge_labels
                .get(set.id(e))
                .ok_or_else(|| Error::Labeling { cube: set.id(e).to_string(), reason: "edge has no label".into() })?;
            letters.push(label.clone());
        }
        words.push(LabelWord::new(letters));
    }
    let lambda = Labeling::from_words(words);
    if let Some(v) = validate_labeling(h, &lambda).into_iter().next() {
        return Err(Error::Labeling { cube: v.cube, reason: v.reason });
    }
    Ok(lambda)
}
