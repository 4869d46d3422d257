use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sgcg::audit::{run_suites, AuditConfig};
use sgcg::clock::MonotonicClock;
use sgcg::formats::{parse_graph, serialize_graph};
use sgcg::report::report_lines;
use sgcg_core::{
    best_move, canonicalize, chi_estimate, classify, count_switching_classes,
    enumerate_classes_bruteforce, generate, is_antibalanced, is_balanced, solve_game, solve_state,
    switching_equivalent, BalanceVerdict, CircleParams, Family, GameState, GameStatus, Player,
    Rules, SignPattern, SignedGraph, SolveConfig, SolveOutcome, SolverError, SplitMix64, Witness,
};

#[derive(Parser)]
#[command(
    name = "sgcg",
    version,
    about = "Signed graphs and the circular coloring game: switching algebra, exact solving, audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayerArg {
    Salome,
    Andjiga,
}

impl From<PlayerArg> for Player {
    fn from(p: PlayerArg) -> Player {
        match p {
            PlayerArg::Salome => Player::Salome,
            PlayerArg::Andjiga => Player::Andjiga,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesArg {
    MoverStuck,
    DeadVertex,
}

impl From<RulesArg> for Rules {
    fn from(r: RulesArg) -> Rules {
        match r {
            RulesArg::MoverStuck => Rules::MoverStuck,
            RulesArg::DeadVertex => Rules::DeadVertex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Basic facts about a graph file.
    Info { file: PathBuf },
    /// Balance / antibalance classification with witnesses.
    Balance { file: PathBuf },
    /// Spanning-forest canonical form: forest, switching, co-tree signs.
    Canonical { file: PathBuf },
    /// Are two signatures on the same graph switching equivalent?
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Number of switching classes, optionally cross-checked by enumeration.
    Classes {
        file: PathBuf,
        /// Cross-check by brute-force orbit enumeration (needs at most 16 edges).
        #[arg(long)]
        brute: bool,
    },
    /// Solve one game: who wins (p, d) under optimal play?
    Solve {
        file: PathBuf,
        #[arg(long)]
        p: u16,
        #[arg(long)]
        d: u16,
        #[arg(long, value_enum, default_value = "salome")]
        first: PlayerArg,
        #[arg(long, value_enum, default_value = "mover-stuck")]
        rules: RulesArg,
        /// Disable dihedral color-symmetry canonicalization of the
        /// transposition table.
        #[arg(long)]
        no_symmetry: bool,
        /// Worker threads (root moves are split; node counts then differ from
        /// the single-threaded count but stay deterministic).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print wall-clock timing (non-reproducible output).
        #[arg(long)]
        timings: bool,
    },
    /// Solve a whole (p, d) grid and print the win table.
    Table {
        file: PathBuf,
        #[arg(long)]
        pmax: u16,
        #[arg(long)]
        dmax: u16,
        #[arg(long, default_value_t = 2)]
        pmin: u16,
        #[arg(long, default_value_t = 1)]
        dmin: u16,
        #[arg(long, value_enum, default_value = "salome")]
        first: PlayerArg,
        #[arg(long, value_enum, default_value = "mover-stuck")]
        rules: RulesArg,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Estimate the critical ratio from per-d winning sets.
    Chi {
        file: PathBuf,
        #[arg(long)]
        pmax: u16,
        #[arg(long)]
        dmax: u16,
        #[arg(long, value_enum, default_value = "salome")]
        first: PlayerArg,
    },
    /// Generate an instance family member.
    Gen {
        /// path | cycle | complete | complete-bipartite | random-tree
        family: String,
        /// Size parameters (one integer, or two for complete-bipartite).
        params: Vec<usize>,
        /// all+ | all- | random
        #[arg(long, default_value = "all+")]
        sign: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run claim-audit suites and emit machine-readable reports.
    Audit {
        /// Suite name (repeatable); all suites when omitted.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        dmax: u16,
        /// Rectangular p cap; default scans 2d..=4d per row.
        #[arg(long)]
        pmax: Option<u16>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Include wall-clock fields in the report (non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Play against the engine interactively.
    Play {
        file: PathBuf,
        #[arg(long)]
        p: u16,
        #[arg(long)]
        d: u16,
        /// Which side the human plays.
        #[arg(long = "as", value_enum, default_value = "salome")]
        side: PlayerArg,
        #[arg(long, value_enum, default_value = "mover-stuck")]
        rules: RulesArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<SignedGraph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn describe_witness(verdict: &BalanceVerdict) -> String {
    match &verdict.witness {
        Witness::Switching(zeta) => {
            let vs: Vec<String> = zeta.vertices().iter().map(|v| v.to_string()).collect();
            format!("switch {{{}}}", vs.join(" "))
        }
        Witness::Cycle(walk) => format!("violating-cycle {walk}"),
    }
}

fn winner_name(salome_wins: bool) -> &'static str {
    if salome_wins {
        "salome"
    } else {
        "andjiga"
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Info { file } => {
            let g = load_graph(&file)?;
            println!("n: {}", g.n());
            println!("m: {}", g.edge_count());
            println!("positive: {}", g.positive_edge_count());
            println!("negative: {}", g.negative_edge_count());
            println!("components: {}", g.component_count());
            println!("cycle_rank: {}", g.cycle_rank());
            Ok(ExitCode::SUCCESS)
        }
        Command::Balance { file } => {
            let g = load_graph(&file)?;
            println!("classification: {}", classify(&g));
            let balance = is_balanced(&g);
            println!(
                "balanced: {} ({})",
                if balance.holds() { "yes" } else { "no" },
                describe_witness(&balance)
            );
            let anti = is_antibalanced(&g);
            println!(
                "antibalanced: {} ({})",
                if anti.holds() { "yes" } else { "no" },
                describe_witness(&anti)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Canonical { file } => {
            let g = load_graph(&file)?;
            let form = canonicalize(&g);
            let forest: Vec<String> =
                form.forest.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("forest: {}", forest.join(" "));
            let vs: Vec<String> =
                form.switching.vertices().iter().map(|v| v.to_string()).collect();
            println!("switching: {{{}}}", vs.join(" "));
            let cotree: Vec<String> = form
                .cotree_edges()
                .iter()
                .zip(form.cotree_signs.iter())
                .map(|((u, v), s)| format!("{u}-{v}{s}"))
                .collect();
            println!("cotree: {}", cotree.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { file1, file2 } => {
            let g1 = load_graph(&file1)?;
            let g2 = load_graph(&file2)?;
            let equivalent = switching_equivalent(&g1, &g2).map_err(|e| e.to_string())?;
            println!("{}", if equivalent { "equivalent" } else { "not equivalent" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes { file, brute } => {
            let g = load_graph(&file)?;
            let count = count_switching_classes(&g).map_err(|e| e.to_string())?;
            println!("classes: {count}");
            if brute {
                let classes = enumerate_classes_bruteforce(&g, 16).map_err(|e| e.to_string())?;
                let sizes: Vec<String> =
                    classes.class_sizes().iter().map(|s| s.to_string()).collect();
                println!(
                    "brute-force: {} classes (sizes {})",
                    classes.class_count(),
                    sizes.join(" ")
                );
                if classes.class_count() as u128 != count {
                    eprintln!("mismatch: enumeration disagrees with 2^cycle_rank");
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { file, p, d, first, rules, no_symmetry, threads, timings } => {
            let g = load_graph(&file)?;
            let params = CircleParams::new(p, d).map_err(|e| e.to_string())?;
            let cfg = SolveConfig {
                rules: rules.into(),
                symmetry: !no_symmetry,
                ..SolveConfig::default()
            };
            let started = std::time::Instant::now();
            let outcome = if threads <= 1 {
                solve_game(&g, params, first.into(), &cfg).map_err(|e| e.to_string())?
            } else {
                solve_root_split(&g, params, first.into(), &cfg, threads)
                    .map_err(|e| e.to_string())?
            };
            println!("winner: {}", winner_name(outcome.salome_wins));
            println!("nodes: {}", outcome.nodes);
            if timings {
                println!("wall_ms: {}", started.elapsed().as_millis());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { file, pmax, dmax, pmin, dmin, first, rules, no_symmetry, threads, timings } => {
            let g = load_graph(&file)?;
            let cfg = SolveConfig {
                rules: rules.into(),
                symmetry: !no_symmetry,
                ..SolveConfig::default()
            };
            let first: Player = first.into();
            println!("graph: {}", g.compact_string());
            println!("first: {first} rules: {} symmetry: {}", cfg.rules, cfg.symmetry);
            let cells: Vec<(u16, u16)> = (dmin..=dmax)
                .flat_map(|d| (pmin.max(2 * d)..=pmax).map(move |p| (p, d)))
                .collect();
            let clock = MonotonicClock::new();
            let results =
                parallel_cells(&g, &cells, first, &cfg, threads, timings.then_some(&clock));
            for ((p, d), result) in cells.iter().zip(results) {
                match result {
                    Ok((salome, nodes, wall)) => {
                        let mut line =
                            format!("p={p} d={d} winner={} nodes={nodes}", winner_name(salome));
                        if let Some(nanos) = wall {
                            line.push_str(&format!(" wall_ms={}", nanos / 1_000_000));
                        }
                        println!("{line}");
                    }
                    Err(e) => println!("p={p} d={d} error={e}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi { file, pmax, dmax, first } => {
            let g = load_graph(&file)?;
            let est = chi_estimate(&g, dmax, pmax, first.into(), &SolveConfig::default())
                .map_err(|e| e.to_string())?;
            println!("graph: {}", g.compact_string());
            println!("first: {}", est.first);
            for row in &est.rows {
                let ps: Vec<String> = row.winning.iter().map(|p| p.to_string()).collect();
                println!(
                    "d={} winning_p: {}{}",
                    row.d,
                    if ps.is_empty() { "-".to_string() } else { ps.join(" ") },
                    if row.monotone { "" } else { " (non-monotone)" }
                );
            }
            match est.estimate {
                Some(r) => println!("estimate: {r}"),
                None => println!("estimate: none (no winning cells on grid)"),
            }
            println!("truncated: {}", if est.truncated { "yes" } else { "no" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, params, sign, seed, out } => {
            let mut seeds = SplitMix64::new(seed);
            let structure_seed = seeds.next_u64();
            let sign_seed = seeds.next_u64();
            let family = parse_family(&family, &params, structure_seed)?;
            let pattern = match sign.as_str() {
                "all+" => SignPattern::AllPositive,
                "all-" => SignPattern::AllNegative,
                "random" => SignPattern::Random { seed: sign_seed },
                other => {
                    return Err(format!("unknown sign pattern `{other}` (all+, all-, random)"))
                }
            };
            let g = generate(&family, &pattern).map_err(|e| e.to_string())?;
            let text = serialize_graph(&g);
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit { suites, nmax, dmax, pmax, out, seed, samples, threads, timings } => {
            let cfg = AuditConfig {
                n_max: nmax,
                d_max: dmax,
                p_max: pmax,
                seed,
                samples_per_graph: samples,
                threads,
                ..AuditConfig::default()
            };
            let mut sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(std::io::BufWriter::new(
                    fs::File::create(path)
                        .map_err(|e| format!("cannot create {}: {e}", path.display()))?,
                )),
                None => Box::new(std::io::stdout().lock()),
            };
            let to_file = out.is_some();
            let reports = run_suites(&suites, &cfg, |report| {
                for line in report_lines(report, timings) {
                    writeln!(sink, "{line}").expect("report sink");
                }
                if to_file {
                    println!(
                        "suite {}: {} ({} instances, {} counterexamples)",
                        report.claim,
                        report.verdict,
                        report.instances,
                        report.counterexamples_total
                    );
                }
            })
            .map_err(|e| e.to_string())?;
            sink.flush().map_err(|e| e.to_string())?;
            let failed = reports.iter().any(|r| r.refuted());
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Play { file, p, d, side, rules } => {
            let g = load_graph(&file)?;
            let params = CircleParams::new(p, d).map_err(|e| e.to_string())?;
            play(&g, params, side.into(), rules.into())
        }
    }
}

fn parse_family(name: &str, params: &[usize], seed: u64) -> Result<Family, String> {
    let one = |what: &str| -> Result<usize, String> {
        if params.len() == 1 {
            Ok(params[0])
        } else {
            Err(format!("family `{what}` takes exactly one size parameter"))
        }
    };
    match name {
        "path" => Ok(Family::Path { n: one("path")? }),
        "cycle" => Ok(Family::Cycle { n: one("cycle")? }),
        "complete" => Ok(Family::Complete { n: one("complete")? }),
        "complete-bipartite" => {
            if params.len() != 2 {
                return Err("family `complete-bipartite` takes two size parameters".to_string());
            }
            Ok(Family::CompleteBipartite { left: params[0], right: params[1] })
        }
        "random-tree" => Ok(Family::RandomTree { n: one("random-tree")?, seed }),
        other => Err(format!(
            "unknown family `{other}` (path, cycle, complete, complete-bipartite, random-tree)"
        )),
    }
}

type CellResult = Result<(bool, u64, Option<u64>), SolverError>;

fn parallel_cells(
    g: &SignedGraph,
    cells: &[(u16, u16)],
    first: Player,
    cfg: &SolveConfig,
    threads: usize,
    clock: Option<&MonotonicClock>,
) -> Vec<CellResult> {
    let solve_cell = |&(p, d): &(u16, u16)| -> CellResult {
        let params = CircleParams::new(p, d).expect("cells are valid");
        let started = clock.map(sgcg_core::Clock::now_nanos);
        let outcome = solve_game(g, params, first, cfg)?;
        let wall =
            started.map(|s| sgcg_core::Clock::now_nanos(clock.unwrap()).saturating_sub(s));
        Ok((outcome.salome_wins, outcome.nodes, wall))
    };
    if threads <= 1 || cells.len() <= 1 {
        return cells.iter().map(solve_cell).collect();
    }
    let workers = threads.min(cells.len());
    let mut results: Vec<Option<CellResult>> = (0..cells.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|t| {
                let solve_cell = &solve_cell;
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut i = t;
                    while i < cells.len() {
                        out.push((i, solve_cell(&cells[i])));
                        i += workers;
                    }
                    out
                })
            })
            .collect();
        for handle in handles {
            for (i, r) in handle.join().expect("solver worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    results.into_iter().map(|r| r.expect("all cells solved")).collect()
}

/// Full evaluation of every root move in parallel. No short-circuiting, so
/// the winner and the node count are both deterministic; the count differs
/// from the single-threaded search.
fn solve_root_split(
    g: &SignedGraph,
    params: CircleParams,
    first: Player,
    cfg: &SolveConfig,
    threads: usize,
) -> Result<SolveOutcome, SolverError> {
    let state = GameState::new(g, params, first);
    match state.status_with(cfg.rules) {
        GameStatus::SalomeWin => return Ok(SolveOutcome { salome_wins: true, nodes: 1 }),
        GameStatus::AndjigaWin => return Ok(SolveOutcome { salome_wins: false, nodes: 1 }),
        GameStatus::Ongoing => {}
    }
    let moves = state.legal_moves();
    let workers = threads.min(moves.len()).max(1);
    let mut results: Vec<Option<Result<SolveOutcome, SolverError>>> =
        (0..moves.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|t| {
                let state = &state;
                let moves = &moves;
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut i = t;
                    while i < moves.len() {
                        let (v, c) = moves[i];
                        let child = state.apply(v, c).expect("legal move");
                        out.push((i, solve_state(&child, cfg)));
                        i += workers;
                    }
                    out
                })
            })
            .collect();
        for handle in handles {
            for (i, r) in handle.join().expect("solver worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    let mut nodes = 1u64;
    let mut child_wins = Vec::new();
    for result in results {
        let outcome = result.expect("all moves solved")?;
        nodes += outcome.nodes;
        child_wins.push(outcome.salome_wins);
    }
    let salome_wins = match first {
        Player::Salome => child_wins.iter().any(|&w| w),
        Player::Andjiga => child_wins.iter().all(|&w| w),
    };
    Ok(SolveOutcome { salome_wins, nodes })
}

fn print_board(state: &GameState<'_>) {
    let cells: Vec<String> = state
        .coloring()
        .iter()
        .enumerate()
        .map(|(v, c)| match c {
            Some(c) => format!("{v}:{c}"),
            None => format!("{v}:-"),
        })
        .collect();
    println!("board: {}", cells.join(" "));
}

fn play(
    g: &SignedGraph,
    params: CircleParams,
    human: Player,
    rules: Rules,
) -> Result<ExitCode, String> {
    let cfg = SolveConfig { rules, ..SolveConfig::default() };
    let mut state = GameState::new(g, params, Player::Salome);
    let stdin = std::io::stdin();
    let mut input = stdin.lock().lines();
    println!(
        "playing {} with {} — you are {human}, salome moves first",
        g.compact_string(),
        params
    );
    loop {
        print_board(&state);
        match state.status_with(rules) {
            GameStatus::SalomeWin => {
                println!("all vertices colored — salome wins");
                return Ok(ExitCode::SUCCESS);
            }
            GameStatus::AndjigaWin => {
                println!("no legal continuation — andjiga wins");
                return Ok(ExitCode::SUCCESS);
            }
            GameStatus::Ongoing => {}
        }
        if state.to_move() == human {
            let moves = state.legal_moves();
            let listed: Vec<String> = moves.iter().map(|(v, c)| format!("({v} {c})")).collect();
            println!("legal: {}", listed.join(" "));
            println!("your move ({human}): enter `vertex color`, or q to quit");
            let line = match input.next() {
                Some(Ok(line)) => line,
                Some(Err(e)) => return Err(format!("stdin: {e}")),
                None => return Err("end of input before the game finished".to_string()),
            };
            let trimmed = line.trim();
            if trimmed == "q" || trimmed == "quit" {
                println!("quit");
                return Ok(ExitCode::SUCCESS);
            }
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                [v, c] => v.parse::<usize>().ok().zip(c.parse::<u16>().ok()),
                _ => None,
            };
            let Some((v, c)) = parsed else {
                println!("could not read that; enter `vertex color`");
                continue;
            };
            if !moves.contains(&(v, c)) {
                println!("({v} {c}) is not a legal move here");
                continue;
            }
            state = state.apply(v, c).expect("validated against legal_moves");
        } else {
            let (v, c) = best_move(&state, &cfg).map_err(|e| e.to_string())?;
            println!("engine plays {v} {c}");
            state = state.apply(v, c).expect("engine move is legal");
        }
    }
}
