//! Subcommands of the `hda` binary.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use hda_core::game::DEFAULT_ROUND_LIMIT;
use hda_core::paths::pointed_paths;
use hda_core::{
    emit_dot, exhaustive_bisim_oracle, hd_bisim, homotopic, homotopy_class, normalize_fan, product_hda, serialize_hda,
    unfold, witness_span, BisimResult, CubePath, Error, Game, Hda, HdaDocument, IoError, Limits, Role,
};
use serde_json::json;

/// Process exit codes.
pub const AFFIRMATIVE: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const RESOURCE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "hda", version, about = "Higher-dimensional automata: validation, unfolding, bisimilarity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file is a valid HDA.
    Validate { file: PathBuf },
    /// Decide hd-bisimilarity of two HDA.
    Bisim {
        a: PathBuf,
        b: PathBuf,
        /// Require equal label words.
        #[arg(long)]
        labeled: bool,
        /// Write the witness span (or the spoiler strategy) as JSON.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Cross-check with the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Unfold up to paths of `depth` cubes and print the non-truncated part.
    Unfold {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List homotopy classes of pointed paths ending in a cube.
    Paths {
        file: PathBuf,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Decide whether two cube paths are homotopic.
    Homotopic {
        file: PathBuf,
        /// Comma-separated cube ids; give exactly two.
        #[arg(long = "path", num_args = 1, required = true)]
        paths: Vec<String>,
    },
    /// Bring a pointed cube path into fan shape.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        path: String,
    },
    /// Print the product of two HDA.
    Product { a: PathBuf, b: PathBuf },
    /// Print a DOT rendering.
    Dot { file: PathBuf },
    /// Run the game server.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn read(path: &Path) -> anyhow::Result<Hda> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    hda_core::parse_hda(&text).with_context(|| path.display().to_string())
}

fn path_arg(h: &Hda, spec: &str) -> anyhow::Result<CubePath> {
    let ids: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(CubePath::from_ids(h.set(), &ids)?)
}

/// Maps an error to its exit code.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    let resource = e.chain().any(|c| {
        c.downcast_ref::<Error>().is_some_and(Error::is_resource)
            || matches!(c.downcast_ref::<IoError>(), Some(IoError::Semantic(inner)) if inner.is_resource())
    });
    if resource {
        RESOURCE
    } else {
        INPUT_ERROR
    }
}

/// Runs one subcommand, writing results to stdout. Returns the exit code
/// of a completed decision.
pub fn run(cli: Cli) -> anyhow::Result<u8> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let doc = HdaDocument::parse(&text).with_context(|| file.display().to_string())?;
            match doc.to_hda() {
                Ok(h) => {
                    let counts = h.set().counts();
                    println!("valid: {} cubes {:?}, initial {}", h.set().len(), counts, doc.initial);
                    Ok(AFFIRMATIVE)
                }
                Err(IoError::Semantic(Error::Invalid(violations))) => {
                    println!("invalid: {} violation(s)", violations.len());
                    for v in violations {
                        println!("  {v}");
                    }
                    Ok(INPUT_ERROR)
                }
                Err(e) => Err(anyhow::Error::new(e).context(file.display().to_string())),
            }
        }
        Command::Bisim { a, b, labeled, witness, oracle } => {
            let (x, y) = (read(&a)?, read(&b)?);
            let result = hd_bisim(&x, &y, labeled)?;
            let code = decide(&x, &y, labeled, &result, witness)?;
            if oracle {
                let slow = exhaustive_bisim_oracle(&x, &y, labeled, &limits)?;
                println!("oracle: {}", if slow == result.bisimilar { "agrees" } else { "DISAGREES" });
            }
            Ok(code)
        }
        Command::Unfold { file, depth, dot } => {
            let h = read(&file)?;
            let u = unfold(&h, depth, &limits)?;
            eprintln!(
                "{} classes, {} non-truncated cubes {:?}",
                u.node_count(),
                u.hda().set().len(),
                u.hda().set().counts()
            );
            print!("{}", serialize_hda(u.hda()));
            if let Some(out) = dot {
                fs::write(out, emit_dot(u.hda()))?;
            }
            Ok(AFFIRMATIVE)
        }
        Command::Paths { file, to, max_len } => {
            let h = read(&file)?;
            let set = h.set();
            let target = set.require(&to)?;
            let mut classes: Vec<(Vec<String>, usize)> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for p in pointed_paths(&h, max_len, &limits)? {
                if p.last() != Some(&target) {
                    continue;
                }
                let class = homotopy_class(set, &CubePath::new(set, p)?, &limits)?;
                if seen.insert(class.representative.cubes().to_vec()) {
                    let ids = class.representative.ids(set).into_iter().map(String::from).collect();
                    classes.push((ids, class.size));
                }
            }
            classes.sort();
            for (ids, size) in &classes {
                println!("[{}]  ({size} path(s))", ids.join(","));
            }
            println!("{} class(es)", classes.len());
            Ok(if classes.is_empty() { NEGATIVE } else { AFFIRMATIVE })
        }
        Command::Homotopic { file, paths } => {
            if paths.len() != 2 {
                bail!("give exactly two --path arguments");
            }
            let h = read(&file)?;
            let (rho, sigma) = (path_arg(&h, &paths[0])?, path_arg(&h, &paths[1])?);
            if homotopic(h.set(), &rho, &sigma, &limits)? {
                println!("homotopic");
                Ok(AFFIRMATIVE)
            } else {
                println!("not homotopic");
                Ok(NEGATIVE)
            }
        }
        Command::Normalize { file, path } => {
            let h = read(&file)?;
            let rho = path_arg(&h, &path)?;
            let out = normalize_fan(h.set(), &rho)?;
            println!("{}", out.path.ids(h.set()).join(","));
            println!("rewrites: {}", out.rewrites);
            Ok(AFFIRMATIVE)
        }
        Command::Product { a, b } => {
            let (x, y) = (read(&a)?, read(&b)?);
            let p = product_hda(&x, &y)?;
            print!("{}", serialize_hda(&p));
            Ok(AFFIRMATIVE)
        }
        Command::Dot { file } => {
            print!("{}", emit_dot(&read(&file)?));
            Ok(AFFIRMATIVE)
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(crate::server::serve(port))?;
            Ok(AFFIRMATIVE)
        }
    }
}

/// Prints the decision and writes the witness or strategy file.
fn decide(x: &Hda, y: &Hda, labeled: bool, result: &BisimResult, witness: Option<PathBuf>) -> anyhow::Result<u8> {
    if result.bisimilar {
        println!("bisimilar");
        println!("relation: {} surviving pairs after {} rounds", result.relation.survivor_count(), result.rounds);
        if let Some(out) = witness {
            let span = witness_span(x, y, result)?;
            fs::write(&out, serialize_hda(&span.hda))?;
            println!("witness written to {}", out.display());
        }
        return Ok(AFFIRMATIVE);
    }
    println!("not bisimilar");
    let (sx, sy) = (x.set(), y.set());
    let rank = result.relation.rank(x.initial(), y.initial()).unwrap_or(0);
    if rank == 0 {
        println!("initial cubes are not comparable");
    } else {
        println!("spoiler strategy: wins from ({}, {}) within {rank} round(s)", sx.id(x.initial()), sy.id(y.initial()));
        let mut game = Game::new(x.clone(), y.clone(), Role::Spoiler, labeled, DEFAULT_ROUND_LIMIT)?;
        while let Some(m) = game.engine_choice() {
            game.play(m)?;
        }
        for (i, h) in game.position().history.iter().enumerate() {
            println!("  {:>2}. {:?}: {}", i + 1, h.player, h.mv);
        }
        println!("  result: {:?}", game.status());
    }
    if let Some(out) = witness {
        let mut entries: Vec<_> = result
            .strategy
            .iter()
            .map(|(&(p, q), m)| json!({ "pair": [sx.id(p), sy.id(q)], "rank": result.relation.rank(p, q), "move": m }))
            .collect();
        entries.sort_by_key(|e| (e["rank"].as_u64(), e["pair"].to_string()));
        fs::write(&out, serde_json::to_string_pretty(&json!({ "strategy": entries }))? + "\n")?;
        println!("strategy written to {}", out.display());
    }
    Ok(NEGATIVE)
}
