//! Command-line front end. Kept in the library so the commands can be driven
//! in-process by tests; `main.rs` only forwards `std::env::args`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{self, DEFAULT_M_CAP};
use crate::character::CharacterSource;
use crate::error::Error;
use crate::golden;
use crate::rootsys::{parse_type, RootSystem, SimpleComponent, Weight};
use crate::semigroup::GeneratorSet;
use crate::sl2branch::{branch_character, principal_embedding, EmbeddingSpec};
use crate::store::{CharacterStore, CACHE_DIR_ENV};
use crate::tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GOLDEN_MISMATCH: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "liebranch",
    version,
    about = "sl2 branching, invariant tables and parabolic bounds for semisimple Lie algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Directory for the on-disk character cache.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for table fills (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Compare against the embedded reference tables; exit 2 on mismatch.
    #[arg(long, global = true)]
    pub golden: bool,

    /// Recompute every cache hit and fail if it differs from the stored entry.
    #[arg(long, global = true)]
    pub verify_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root-system summary: rank, positive roots, Cartan matrix.
    Describe {
        /// Type string such as G2, A2B2 or A1xG2.
        type_name: String,
    },
    /// Dominant character and dimension of L(λ).
    Character {
        family: String,
        rank: usize,
        /// λ in fundamental-weight coordinates.
        #[arg(allow_negative_numbers = true)]
        coords: Vec<i64>,
    },
    /// Restriction of L(λ) to an sl2-subalgebra.
    Branch {
        family: String,
        rank: usize,
        #[arg(allow_negative_numbers = true)]
        coords: Vec<i64>,
        /// principal, root:<simple-root coords> or marks:<values>.
        #[arg(long, default_value = "principal")]
        embedding: EmbeddingSpec,
    },
    /// Invariant dimensions dim [i,j]^K for G2 and a principal sl2.
    Table1 {
        #[arg(long, default_value_t = 19)]
        max_i: u32,
        #[arg(long, default_value_t = 19)]
        max_j: u32,
    },
    /// g₀(iω₁ + jω₂) for G2 and a principal sl2.
    Table2 {
        #[arg(long, default_value_t = 19)]
        max_i: u32,
        #[arg(long, default_value_t = 19)]
        max_j: u32,
    },
    /// G2 weights whose module has no principal-sl2 invariant.
    Exceptions {
        #[arg(long, default_value_t = 64)]
        box_bound: u32,
    },
    /// m-values, the box C₀ and the bound b for an sl2-subalgebra.
    Bound {
        family: String,
        rank: usize,
        #[arg(long, default_value = "principal")]
        embedding: EmbeddingSpec,
        #[arg(long, default_value_t = DEFAULT_M_CAP)]
        cap: u64,
    },
    /// dim 𝔤/𝔩_ss for every maximal parabolic of a simple type.
    ParabolicTable {
        /// Simple type; all reference types when omitted.
        type_name: Option<String>,
    },
    /// e(𝔰) for a list of simple types.
    ETable {
        /// Simple types; the reference list when omitted.
        types: Vec<String>,
    },
    /// E(𝔨): simple types s with e(s) ≤ dim 𝔨.
    ExclusionSet {
        #[arg(long)]
        dim_k: u64,
        #[arg(long, default_value_t = 10)]
        rank_cap: usize,
    },
    /// Non-members of a finitely generated subsemigroup of ℕ^r.
    Complement {
        /// Generator as comma-separated coordinates; repeatable.
        #[arg(long = "gen", value_name = "COORDS")]
        gens: Vec<String>,
        /// JSON file holding an array of generators.
        #[arg(long)]
        gens_file: Option<PathBuf>,
        #[arg(long = "bound", default_value_t = 64)]
        box_bound: u32,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            stderr: stderr.into(),
            code,
            ..Default::default()
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidRank { .. }
        | Error::ParseType(_)
        | Error::EmptyComponents
        | Error::LengthMismatch { .. }
        | Error::NotDominant(_)
        | Error::NotAPositiveRoot(_)
        | Error::NodeOutOfRange { .. }
        | Error::InvalidGenerators(_)
        | Error::AxisGeneratorMissing { .. }
        | Error::RankCapInsufficient { .. }
        | Error::Io(_)
        | Error::Json(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    let jobs = cli.jobs;
    match jobs {
        Some(0) => Outcome::fail(EXIT_USAGE, "--jobs must be positive\n"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Outcome::fail(EXIT_COMPUTATION, format!("thread pool: {e}\n")),
        },
        None => dispatch(&cli),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let store = match (&cli.cache_dir, cli.verify_cache) {
        (Some(dir), verify) => match CharacterStore::with_dir(dir, verify) {
            Ok(s) => s,
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("cache directory: {e}\n")),
        },
        (None, true) => {
            return Outcome::fail(EXIT_USAGE, "--verify-cache requires --cache-dir\n");
        }
        (None, false) => CharacterStore::in_memory(),
    };
    let supports_golden = matches!(
        cli.command,
        Command::Table1 { .. }
            | Command::Table2 { .. }
            | Command::Exceptions { .. }
            | Command::ParabolicTable { .. }
            | Command::ETable { .. }
            | Command::ExclusionSet { .. }
    );
    if cli.golden && !supports_golden {
        return Outcome::fail(EXIT_USAGE, "--golden has no reference data for this command\n");
    }
    let ctx = Ctx {
        format: cli.format,
        golden: cli.golden,
        store: &store,
    };
    let result = match &cli.command {
        Command::Describe { type_name } => ctx.describe(type_name),
        Command::Character {
            family,
            rank,
            coords,
        } => ctx.character(family, *rank, coords),
        Command::Branch {
            family,
            rank,
            coords,
            embedding,
        } => ctx.branch(family, *rank, coords, embedding),
        Command::Table1 { max_i, max_j } => ctx.table(*max_i, *max_j, TableKind::Invariants),
        Command::Table2 { max_i, max_j } => ctx.table(*max_i, *max_j, TableKind::G0),
        Command::Exceptions { box_bound } => ctx.exceptions(*box_bound),
        Command::Bound {
            family,
            rank,
            embedding,
            cap,
        } => ctx.bound(family, *rank, embedding, *cap),
        Command::ParabolicTable { type_name } => ctx.parabolic_table(type_name.as_deref()),
        Command::ETable { types } => ctx.e_table(types),
        Command::ExclusionSet { dim_k, rank_cap } => ctx.exclusion_set(*dim_k, *rank_cap),
        Command::Complement {
            gens,
            gens_file,
            box_bound,
        } => ctx.complement(gens, gens_file.as_ref(), *box_bound),
    };
    match result {
        Ok(out) => out,
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

type CmdResult = Result<Outcome, Error>;

struct Ctx<'a> {
    format: Format,
    golden: bool,
    store: &'a CharacterStore,
}

#[derive(Clone, Copy)]
enum TableKind {
    Invariants,
    G0,
}

fn root_system(family: &str, rank: usize) -> Result<RootSystem, Error> {
    RootSystem::build(&parse_type(&format!("{family}{rank}"))?)
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn json_line(v: &serde_json::Value) -> String {
    format!("{v}\n")
}

/// Golden comparison result: mismatches go to stderr with exit code 2.
fn with_mismatches(stdout: String, mismatches: Vec<String>) -> Outcome {
    if mismatches.is_empty() {
        Outcome::ok(stdout)
    } else {
        let mut stderr = format!("golden mismatch ({} entries)\n", mismatches.len());
        for m in mismatches {
            let _ = writeln!(stderr, "  {m}");
        }
        Outcome {
            stdout,
            stderr,
            code: EXIT_GOLDEN_MISMATCH,
        }
    }
}

impl Ctx<'_> {
    fn describe(&self, type_name: &str) -> CmdResult {
        let rs = RootSystem::from_type(type_name)?;
        let s = rs.summary();
        let out = match self.format {
            Format::Json => {
                let mut v = serde_json::to_value(&s)?;
                v["dimension"] = json!(rs.dim());
                json_line(&v)
            }
            Format::Csv => format!(
                "type,rank,positive_roots,weyl_group_order,dimension\n{},{},{},{},{}\n",
                s.type_name,
                s.rank,
                s.positive_roots,
                s.weyl_group_order,
                rs.dim()
            ),
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(t, "type              {}", s.type_name);
                let _ = writeln!(t, "rank              {}", s.rank);
                let _ = writeln!(t, "dimension         {}", rs.dim());
                let _ = writeln!(t, "positive roots    {}", s.positive_roots);
                let _ = writeln!(t, "Weyl group order  {}", s.weyl_group_order);
                let _ = writeln!(t, "symmetrizer       [{}]", join(&s.symmetrizer, ", "));
                let _ = writeln!(t, "Cartan matrix");
                for row in &s.cartan {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                    let _ = writeln!(t, "  {}", cells.join(" "));
                }
                t
            }
        };
        Ok(Outcome::ok(out))
    }

    fn character(&self, family: &str, rank: usize, coords: &[i64]) -> CmdResult {
        let rs = root_system(family, rank)?;
        let lambda = Weight(coords.to_vec());
        rs.check_dominant(&lambda)?;
        let ch = self.store.character(&rs, &lambda)?;
        let dim = ch.dimension(&rs)?;
        let weyl = rs.weyl_dimension(&lambda)?;
        if dim != weyl {
            return Err(Error::Internal(format!(
                "character dimension {dim} differs from Weyl dimension {weyl}"
            )));
        }
        let out = match self.format {
            Format::Json => json_line(&json!({
                "type": rs.type_name(),
                "lambda": lambda.0,
                "dimension": dim,
                "character": serde_json::to_value(&*ch)?,
            })),
            Format::Csv => {
                let mut t = String::new();
                let head: Vec<String> = (1..=rs.rank()).map(|i| format!("w{i}")).collect();
                let _ = writeln!(t, "{},mult,orbit_size", head.join(","));
                for (mu, m) in ch.mults() {
                    let _ = writeln!(t, "{},{m},{}", join(&mu.0, ","), rs.orbit_size(mu)?);
                }
                t
            }
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(t, "L({lambda}) of {}", rs.type_name());
                let _ = writeln!(t, "dimension {dim}");
                let _ = writeln!(t, "{:<20} {:>8} {:>10}", "weight", "mult", "orbit");
                for (mu, m) in ch.mults().iter().rev() {
                    let _ = writeln!(
                        t,
                        "{:<20} {:>8} {:>10}",
                        mu.to_string(),
                        m,
                        rs.orbit_size(mu)?
                    );
                }
                t
            }
        };
        Ok(Outcome::ok(out))
    }

    fn branch(&self, family: &str, rank: usize, coords: &[i64], spec: &EmbeddingSpec) -> CmdResult {
        let rs = root_system(family, rank)?;
        let lambda = Weight(coords.to_vec());
        rs.check_dominant(&lambda)?;
        let emb = spec.resolve(&rs)?;
        let ch = self.store.character(&rs, &lambda)?;
        let br = branch_character(&rs, &ch, &emb)?;
        let d = &br.decomposition;
        let g0 = d.g0().unwrap_or(0);
        let out = match self.format {
            Format::Json => json_line(&json!({
                "type": rs.type_name(),
                "lambda": lambda.0,
                "embedding": spec.to_string(),
                "marks": emb.marks(),
                "dimension": d.dimension(),
                "values": br.values,
                "decomposition": d,
                "invariant_dim": d.invariant_dim(),
                "g0": g0,
            })),
            Format::Csv => {
                let mut t = String::from("table,key,value\n");
                for (k, v) in &br.values {
                    let _ = writeln!(t, "N,{k},{v}");
                }
                for (k, v) in d.mults() {
                    let _ = writeln!(t, "V,{k},{v}");
                }
                t
            }
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(
                    t,
                    "L({lambda}) of {}, embedding {spec} (marks [{}])",
                    rs.type_name(),
                    join(emb.marks(), ", ")
                );
                let _ = writeln!(t, "dimension      {}", d.dimension());
                let n: Vec<String> = br.values.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                let _ = writeln!(t, "N              {}", n.join(" "));
                let v: Vec<String> = d
                    .mults()
                    .iter()
                    .rev()
                    .map(|(k, m)| format!("{m}xV({k})"))
                    .collect();
                let _ = writeln!(t, "decomposition  {}", v.join(" + "));
                let _ = writeln!(t, "invariant_dim  {}", d.invariant_dim());
                let _ = writeln!(t, "g0             {g0}");
                t
            }
        };
        Ok(Outcome::ok(out))
    }

    fn table(&self, max_i: u32, max_j: u32, kind: TableKind) -> CmdResult {
        let rs = RootSystem::from_type("G2")?;
        let emb = principal_embedding(&rs);
        let grid = tables::rank2_grid(&rs, &emb, max_i, max_j, self.store)?;
        let values: Vec<Vec<u64>> = grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match kind {
                        TableKind::Invariants => c.invariant_dim,
                        TableKind::G0 => c.g0,
                    })
                    .collect()
            })
            .collect();
        let out = render_grid(&values, self.format);
        if !self.golden {
            return Ok(Outcome::ok(out));
        }
        let reference = match kind {
            TableKind::Invariants => golden::table1(),
            TableKind::G0 => golden::table2(),
        };
        let mut mismatches = Vec::new();
        for (i, row) in values.iter().enumerate().take(reference.len()) {
            for (j, &v) in row.iter().enumerate().take(reference[i].len()) {
                if v != reference[i][j] {
                    mismatches.push(format!("[{i},{j}]: computed {v}, reference {}", reference[i][j]));
                }
            }
        }
        Ok(with_mismatches(out, mismatches))
    }

    fn exceptions(&self, box_bound: u32) -> CmdResult {
        let report = tables::g2_exceptions(self.store, box_bound)?;
        let mut mismatches = Vec::new();

        let reference: BTreeSet<Vec<u32>> = golden::exceptions().into_iter().collect();
        let found: BTreeSet<Vec<u32>> = report.exceptions.iter().cloned().collect();
        for p in reference.symmetric_difference(&found) {
            let side = if found.contains(p) { "computed only" } else { "reference only" };
            mismatches.push(format!("exception {p:?}: {side}"));
        }
        let e_prime: BTreeSet<Vec<u32>> = golden::e_prime().into_iter().collect();
        let computed: BTreeSet<Vec<u32>> = report.e_prime.points.iter().cloned().collect();
        for p in e_prime.symmetric_difference(&computed) {
            let side = if computed.contains(p) { "computed only" } else { "reference only" };
            mismatches.push(format!("E' element {p:?}: {side}"));
        }
        for p in &report.e_small_exceptions {
            if !reference.contains(p) {
                mismatches.push(format!("E element {p:?} has no invariants but is not listed"));
            }
        }

        let out = match self.format {
            Format::Json => json_line(&json!({
                "exceptions": report.exceptions,
                "count": report.exceptions.len(),
                "e_prime_size": report.e_prime.points.len(),
                "e_size": report.e_small.points.len(),
                "certified": report.e_prime.certified && report.e_small.certified,
                "box_bound": box_bound,
            })),
            Format::Csv => {
                let mut t = String::from("a,b\n");
                for p in &report.exceptions {
                    let _ = writeln!(t, "{},{}", p[0], p[1]);
                }
                t
            }
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(
                    t,
                    "E' (9 generators): {} weights, certified at box bound {box_bound}",
                    report.e_prime.points.len()
                );
                let _ = writeln!(
                    t,
                    "E  (6 generators): {} weights, certified at box bound {box_bound}",
                    report.e_small.points.len()
                );
                let _ = writeln!(t, "weights without invariants: {}", report.exceptions.len());
                for p in &report.exceptions {
                    let _ = writeln!(t, "[{}, {}]", p[0], p[1]);
                }
                t
            }
        };
        Ok(with_mismatches(out, mismatches))
    }

    fn bound(&self, family: &str, rank: usize, spec: &EmbeddingSpec, cap: u64) -> CmdResult {
        let rs = root_system(family, rank)?;
        let emb = spec.resolve(&rs)?;
        let b = bounds::b_bound_cached(&rs, &emb, cap, self.store)?;
        let out = match self.format {
            Format::Json => json_line(&json!({
                "type": rs.type_name(),
                "embedding": spec.to_string(),
                "marks": emb.marks(),
                "cap": cap,
                "m": b.m.values,
                "c0_extent": b.box_extent,
                "c0_size": b.box_size,
                "max_g0": b.max_g0,
                "argmax": b.argmax,
                "b": b.b,
            })),
            Format::Csv => format!(
                "type,embedding,m,c0_size,max_g0,argmax,b\n{},{spec},{},{},{},{},{}\n",
                rs.type_name(),
                join(&b.m.values, " "),
                b.box_size,
                b.max_g0,
                join(&b.argmax.0, " "),
                b.b
            ),
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(
                    t,
                    "{} with embedding {spec} (marks [{}]), cap {cap}",
                    rs.type_name(),
                    join(emb.marks(), ", ")
                );
                let _ = writeln!(t, "m      [{}]", join(&b.m.values, ", "));
                let ranges: Vec<String> =
                    b.box_extent.iter().map(|m| format!("{{0..{}}}", m - 1)).collect();
                let _ = writeln!(t, "C0     {} ({} weights)", ranges.join(" x "), b.box_size);
                let _ = writeln!(t, "max g0 {} at {}", b.max_g0, b.argmax);
                let _ = writeln!(t, "b      {}", b.b);
                t
            }
        };
        Ok(Outcome::ok(out))
    }

    fn parabolic_table(&self, type_name: Option<&str>) -> CmdResult {
        let types: Vec<SimpleComponent> = match type_name {
            Some(t) => vec![t.parse()?],
            None => golden::parabolic_types()?,
        };
        let rows: Vec<(SimpleComponent, bounds::ParabolicRow)> = types
            .iter()
            .flat_map(|&t| bounds::parabolic_table(t).into_iter().map(move |r| (t, r)))
            .collect();

        let out = match self.format {
            Format::Json => {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(t, r)| {
                        json!({
                            "type": t.to_string(),
                            "node": r.node,
                            "levi": r.levi_label(),
                            "dim_g_mod_lss": r.dim_g_mod_lss,
                            "dim_x": r.dim_x,
                        })
                    })
                    .collect();
                json_line(&json!(v))
            }
            Format::Csv => {
                let mut t = String::from("type,node,levi,dim_g_mod_lss,dim_x\n");
                for (ty, r) in &rows {
                    let _ = writeln!(
                        t,
                        "{ty},{},{},{},{}",
                        r.node,
                        r.levi_label(),
                        r.dim_g_mod_lss,
                        r.dim_x
                    );
                }
                t
            }
            Format::Text => {
                let mut t = String::new();
                let _ = writeln!(
                    t,
                    "{:<6} {:>4}  {:<10} {:>12} {:>6}",
                    "type", "node", "levi", "dim g/l_ss", "dim X"
                );
                for (ty, r) in &rows {
                    let _ = writeln!(
                        t,
                        "{:<6} {:>4}  {:<10} {:>12} {:>6}",
                        ty.to_string(),
                        r.node,
                        r.levi_label(),
                        r.dim_g_mod_lss,
                        r.dim_x
                    );
                }
                t
            }
        };
        if !self.golden {
            return Ok(Outcome::ok(out));
        }
        let mut mismatches = Vec::new();
        let reference = golden::parabolic_rows()?;
        for (ty, r) in &rows {
            let Some(g) = reference.iter().find(|g| g.ty == *ty && g.node == r.node) else {
                continue;
            };
            let mut computed: Vec<SimpleComponent> = r
                .levi_ss_components
                .iter()
                .map(|&c| golden::normalize_component(c))
                .collect();
            computed.sort();
            if computed != golden::normalize_levi(&g.levi_label)? {
                mismatches.push(format!(
                    "{ty} node {}: levi {} vs reference {}",
                    r.node,
                    r.levi_label(),
                    g.levi_label
                ));
            }
            if r.dim_g_mod_lss != g.dim_g_mod_lss {
                mismatches.push(format!(
                    "{ty} node {}: dim {} vs reference {}",
                    r.node, r.dim_g_mod_lss, g.dim_g_mod_lss
                ));
            }
        }
        Ok(with_mismatches(out, mismatches))
    }

    fn e_table(&self, types: &[String]) -> CmdResult {
        let reference = golden::e_values()?;
        let list: Vec<SimpleComponent> = if types.is_empty() {
            reference.iter().map(|(t, _)| *t).collect()
        } else {
            types.iter().map(|t| t.parse()).collect::<Result<_, _>>()?
        };
        let values: Vec<(SimpleComponent, u64)> =
            list.iter().map(|&t| (t, bounds::e_value(t))).collect();
        let out = match self.format {
            Format::Json => {
                let v: Vec<_> = values
                    .iter()
                    .map(|(t, e)| json!({"type": t.to_string(), "e": e}))
                    .collect();
                json_line(&json!(v))
            }
            Format::Csv => {
                let mut t = String::from("type,e\n");
                for (ty, e) in &values {
                    let _ = writeln!(t, "{ty},{e}");
                }
                t
            }
            Format::Text => {
                let names: Vec<String> = values.iter().map(|(t, _)| format!("{t:>4}")).collect();
                let es: Vec<String> = values.iter().map(|(_, e)| format!("{e:>4}")).collect();
                format!("s    {}\ne(s) {}\n", names.join(""), es.join(""))
            }
        };
        if !self.golden {
            return Ok(Outcome::ok(out));
        }
        let mismatches = values
            .iter()
            .filter_map(|(t, e)| {
                let r = reference.iter().find(|(rt, _)| rt == t)?.1;
                (r != *e).then(|| format!("e({t}) = {e}, reference {r}"))
            })
            .collect();
        Ok(with_mismatches(out, mismatches))
    }

    fn exclusion_set(&self, dim_k: u64, rank_cap: usize) -> CmdResult {
        if self.golden && dim_k != 8 {
            return Ok(Outcome::fail(
                EXIT_USAGE,
                "reference exclusion set exists only for dim 𝔨 = 8\n",
            ));
        }
        let set = bounds::e_set(dim_k, rank_cap)?;
        let names: Vec<String> = set.iter().map(|c| c.to_string()).collect();
        let out = match self.format {
            Format::Json => json_line(&json!({
                "dim_k": dim_k,
                "rank_cap": rank_cap,
                "types": names,
            })),
            Format::Csv => {
                let mut t = String::from("type,e\n");
                for c in &set {
                    let _ = writeln!(t, "{c},{}", bounds::e_value(*c));
                }
                t
            }
            Format::Text => format!("E(dim {dim_k}) = {{{}}}\n", names.join(", ")),
        };
        if !self.golden {
            return Ok(Outcome::ok(out));
        }
        let reference: BTreeSet<SimpleComponent> = golden::exclusion_sl3()?
            .into_iter()
            .map(golden::normalize_component)
            .collect();
        let computed: BTreeSet<SimpleComponent> =
            set.iter().map(|&c| golden::normalize_component(c)).collect();
        let mismatches = reference
            .symmetric_difference(&computed)
            .map(|c| {
                let side = if computed.contains(c) { "computed only" } else { "reference only" };
                format!("{c}: {side}")
            })
            .collect();
        Ok(with_mismatches(out, mismatches))
    }

    fn complement(&self, gens: &[String], file: Option<&PathBuf>, box_bound: u32) -> CmdResult {
        let mut all: Vec<Vec<u32>> = Vec::new();
        for g in gens {
            let v = g
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidGenerators(format!("{g:?}: {e}")))?;
            all.push(v);
        }
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)?;
            let v: Vec<Vec<u32>> = serde_json::from_str(&text)?;
            all.extend(v);
        }
        let dim = all
            .first()
            .map(|g| g.len())
            .ok_or_else(|| Error::InvalidGenerators("no generators given".into()))?;
        let gs = GeneratorSet::new(dim, all)?;
        let c = gs.complement(box_bound)?;
        let array = serde_json::to_string(&c.points)?;
        let out = match self.format {
            Format::Json => format!("{array}\n"),
            Format::Csv => {
                let head: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
                let mut t = format!("{}\n", head.join(","));
                for p in &c.points {
                    let _ = writeln!(t, "{}", join(p, ","));
                }
                t
            }
            Format::Text => format!(
                "# {} non-members, box bound {}, {}\n{array}\n",
                c.points.len(),
                box_bound,
                if c.certified { "certified" } else { "NOT certified" }
            ),
        };
        if c.certified {
            Ok(Outcome::ok(out))
        } else {
            Ok(Outcome {
                stdout: out,
                stderr: format!("error: {}\n", Error::NotCertified { bound: box_bound }),
                code: EXIT_COMPUTATION,
            })
        }
    }
}

fn render_grid(values: &[Vec<u64>], format: Format) -> String {
    let cols = values.first().map_or(0, |r| r.len());
    match format {
        Format::Json => json_line(&json!(values)),
        Format::Csv => {
            let head: Vec<String> = (0..cols).map(|j| j.to_string()).collect();
            let mut t = format!("i,{}\n", head.join(","));
            for (i, row) in values.iter().enumerate() {
                let _ = writeln!(t, "{i},{}", join(row, ","));
            }
            t
        }
        Format::Text => {
            let width = values
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1)
                .max(cols.saturating_sub(1).to_string().len())
                + 1;
            let mut t = format!("{:>4}", "i\\j");
            for j in 0..cols {
                let _ = write!(t, "{j:>width$}");
            }
            t.push('\n');
            for (i, row) in values.iter().enumerate() {
                let _ = write!(t, "{i:>4}");
                for v in row {
                    let _ = write!(t, "{v:>width$}");
                }
                t.push('\n');
            }
            t
        }
    }
}
