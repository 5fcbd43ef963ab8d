//! `crossnum`: compute, cache, and check sets of cross numbers.
//!
//! Exit codes: 0 ok, 1 other failure, 2 parse error, 3 budget exceeded,
//! 4 verification failure.

mod cache;
mod witness;

use std::cell::Cell;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crossnum_core::formulas::{self, compare_pair, davenport_closed_form, desk_suite, Report, Theorem};
use crossnum_core::search::MAX_ENGINE_ORDER;
use crossnum_core::{
    big_k_star, enumerate, eta, k_star, Budget, ConstructionError, CrossSet, FiniteAbelianGroup, FormulaError,
    GroupError, SearchError, SearchResult, SequenceError, SequenceKind,
};

use cache::{Cache, Stats};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Budget(String),
    Verification(String),
    Other(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Budget(m) | CliError::Verification(m) | CliError::Other(m) => m,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded(partial) => CliError::Budget(format!(
                "budget exceeded after {} states; proven so far: w ⊇ {}, W ⊇ {}",
                partial.states_visited, partial.w_set, partial.big_w_set
            )),
            e => CliError::Other(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<SequenceError> for CliError {
    fn from(e: SequenceError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Search(e) => e.into(),
            e => CliError::Parse(e.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Search(e) => e.into(),
            e => CliError::Parse(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

pub fn parse_group(spec: &str) -> Result<FiniteAbelianGroup, CliError> {
    spec.parse().map_err(|e: GroupError| CliError::Parse(format!("group {spec:?}: {e}")))
}

#[derive(Parser)]
#[command(name = "crossnum", version, about = "Cross numbers of zero-sum sequences over finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// cross numbers of zero-sum free sequences
    #[value(name = "w")]
    SmallW,
    /// cross numbers of minimal zero-sum sequences
    #[value(name = "W")]
    BigW,
    Eta,
    /// small Davenport constant
    D,
    Full,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Maximum number of search states.
    #[arg(long, default_value_t = Budget::default().max_states)]
    budget: u64,
    /// Maximum wall-clock seconds.
    #[arg(long, default_value_t = Budget::default().max_time.as_secs())]
    max_seconds: u64,
    /// Neither read nor write the result cache.
    #[arg(long)]
    no_cache: bool,
}

impl SearchArgs {
    fn budget(&self) -> Budget {
        Budget { max_states: self.budget, max_time: Duration::from_secs(self.max_seconds) }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structure of a group given as comma-separated cyclic orders, e.g. "2,4".
    Info {
        group: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Compute w, W, eta, d, or everything.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
        group: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a construction and re-check its claims. Parameters are key=value.
    #[command(after_help = "constructions: basis <group> | power <group> g=<coords> j= | w2pk p= k= l= | \
                            c22 p= k= j= variant=aj|aj-prime|special1|special2 | gap p= r= q= s= closed= deficit= swaps=")]
    Witness {
        name: String,
        params: Vec<String>,
    },
    /// Check a theorem ("desk" for the full suite) and stream JSON reports.
    Verify {
        suite: String,
        groups: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let run = match cli.command {
        Command::Info { group, format } => cmd_info(&mut out, &group, format),
        Command::Compute { kind, group, search, format } => cmd_compute(&mut out, kind, &group, &search, format),
        Command::Witness { name, params } => cmd_witness(&mut out, &name, &params),
        Command::Verify { suite, groups, search } => cmd_verify(&mut out, &suite, &groups, &search),
    };
    match run {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("crossnum: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn cmd_info(out: &mut impl Write, spec: &str, format: Format) -> Result<(), CliError> {
    let g = parse_group(spec)?;
    if g.is_trivial() {
        return Err(CliError::Parse(format!("group {spec:?}: the trivial group has no structure to report")));
    }
    let stats = g.stats();
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let p_ranks: Vec<String> = stats.p_ranks.iter().map(|(p, r)| format!("{p}:{r}")).collect();
    let davenport = davenport_closed_form(&g);
    let rows = [
        ("group", g.to_string()),
        ("invariant factors", join(g.invariant_factors())),
        ("prime-power factors", join(g.prime_power_factors())),
        ("order", stats.cardinality.to_string()),
        ("exponent", stats.exponent.to_string()),
        ("rank", stats.rank.to_string()),
        ("total rank", stats.total_rank.to_string()),
        ("p-ranks", p_ranks.join(",")),
        ("k*", k_star(&g).to_string()),
        ("K*", big_k_star(&g).to_string()),
        ("D", davenport.map_or_else(|| "unknown".to_string(), |d| d.to_string())),
    ];
    match format {
        Format::Plain => {
            for (k, v) in rows {
                writeln!(out, "{k}: {v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["field", "value"])?;
            for (k, v) in rows {
                w.write_record([k, &v])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let value = json!({
                "group": g.to_string(),
                "invariant_factors": g.invariant_factors(),
                "prime_power_factors": g.prime_power_factors(),
                "order": stats.cardinality,
                "exponent": stats.exponent,
                "rank": stats.rank,
                "total_rank": stats.total_rank,
                "p_ranks": stats.p_ranks.iter().map(|(p, r)| json!({"p": p, "rank": r})).collect::<Vec<_>>(),
                "k_star": k_star(&g).numerator,
                "K_star": big_k_star(&g).numerator,
                "denominator": stats.exponent,
                "D": davenport,
            });
            writeln!(out, "{value}")?;
        }
    }
    Ok(())
}

/// The full search, through the cache.
fn full_result(g: &FiniteAbelianGroup, search: &SearchArgs) -> Result<(SearchResult, Stats), CliError> {
    let cache = Cache::new(!search.no_cache);
    if let Some(hit) = cache.load(g, "full") {
        return Ok(hit);
    }
    let start = Instant::now();
    let r = enumerate(g, None, search.budget())?;
    let stats = Stats { states: r.states_visited, millis: start.elapsed().as_millis() as u64 };
    cache.store(g, "full", &r, stats, search.budget())?;
    Ok((r, stats))
}

fn eta_result(g: &FiniteAbelianGroup, search: &SearchArgs) -> Result<(u64, Stats), CliError> {
    let cache = Cache::new(!search.no_cache);
    if let Some(hit) = cache.load(g, "eta") {
        return Ok(hit);
    }
    let start = Instant::now();
    let value = eta(g, MAX_ENGINE_ORDER, search.budget())?;
    // the η search does not report a state count
    let stats = Stats { states: 0, millis: start.elapsed().as_millis() as u64 };
    cache.store(g, "eta", &value, stats, search.budget())?;
    Ok((value, stats))
}

fn cmd_compute(out: &mut impl Write, kind: Kind, spec: &str, search: &SearchArgs, format: Format) -> Result<(), CliError> {
    let g = parse_group(spec)?;
    let group = g.to_string();
    let (name, scalar, stats) = match kind {
        Kind::SmallW | Kind::BigW => {
            let (r, stats) = full_result(&g, search)?;
            let (name, set) = if kind == Kind::SmallW { ("w", &r.w_set) } else { ("W", &r.big_w_set) };
            return emit_set(out, &group, name, set, stats, format);
        }
        Kind::Full => {
            let (r, stats) = full_result(&g, search)?;
            return emit_full(out, &group, &r, stats, format);
        }
        Kind::Eta => {
            let (v, stats) = eta_result(&g, search)?;
            ("eta", v, stats)
        }
        Kind::D => {
            let (r, stats) = full_result(&g, search)?;
            ("d", r.d_small, stats)
        }
    };
    match format {
        Format::Json => writeln!(out, "{}", json!({"group": group, "kind": name, "value": scalar, "stats": stats}))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["group", "kind", "value"])?;
            w.write_record([&group, name, &scalar.to_string()])?;
            w.flush()?;
        }
        Format::Plain => writeln!(out, "{name}({group}) = {scalar}")?,
    }
    Ok(())
}

fn emit_set(out: &mut impl Write, group: &str, name: &str, set: &CrossSet, stats: Stats, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let value = json!({
                "group": group,
                "denominator": set.denominator,
                "numerators": set.numerators,
                "stats": stats,
            });
            writeln!(out, "{value}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["group", "kind", "denominator", "numerator"])?;
            for n in &set.numerators {
                w.write_record([group, name, &set.denominator.to_string(), &n.to_string()])?;
            }
            w.flush()?;
        }
        Format::Plain => writeln!(out, "{name}({group}) = {set}")?,
    }
    Ok(())
}

fn emit_full(out: &mut impl Write, group: &str, r: &SearchResult, stats: Stats, format: Format) -> Result<(), CliError> {
    let k = r.k_max.map_or(0, |v| v.numerator);
    match format {
        Format::Json => {
            let value = json!({
                "group": group,
                "denominator": r.w_set.denominator,
                "w": r.w_set.numerators,
                "W": r.big_w_set.numerators,
                "d": r.d_small,
                "D": r.d_large,
                "k": k,
                "K": r.big_k_max.numerator,
                "stats": stats,
            });
            writeln!(out, "{value}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["group", "kind", "denominator", "numerator"])?;
            let den = r.w_set.denominator.to_string();
            for (name, set) in [("w", &r.w_set), ("W", &r.big_w_set)] {
                for n in &set.numerators {
                    w.write_record([group, name, &den, &n.to_string()])?;
                }
            }
            w.flush()?;
        }
        Format::Plain => {
            writeln!(out, "w({group}) = {}", r.w_set)?;
            writeln!(out, "W({group}) = {}", r.big_w_set)?;
            writeln!(out, "d = {}, D = {}", r.d_small, r.d_large)?;
            writeln!(out, "k = {k}/{0}, K = {1}/{0}", r.w_set.denominator, r.big_k_max.numerator)?;
        }
    }
    Ok(())
}

fn cmd_witness(out: &mut impl Write, name: &str, params: &[String]) -> Result<(), CliError> {
    let mut bad = Vec::new();
    for (label, w) in witness::build(name, params)? {
        let kind = match w.kind {
            SequenceKind::ZeroSumFree => "zero-sum free",
            SequenceKind::MinimalZeroSum => "minimal zero-sum",
        };
        let recomputed = w.sequence.cross_number();
        writeln!(out, "{label} = {}", w.sequence)?;
        writeln!(out, "  group: {}", w.sequence.group())?;
        writeln!(out, "  kind: {kind} ({})", if w.has_claimed_kind() { "confirmed" } else { "NOT confirmed" })?;
        writeln!(out, "  claimed cross number: {}", w.claimed)?;
        writeln!(out, "  recomputed cross number: {recomputed}")?;
        if !w.holds() {
            bad.push(label);
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("claims do not hold for {}", bad.join(", "))))
    }
}

/// `None` when the search ran out of budget.
fn search_or_none(
    g: &FiniteAbelianGroup,
    search: &SearchArgs,
    exhausted: &Cell<bool>,
) -> Result<Option<SearchResult>, CliError> {
    match full_result(g, search) {
        Ok((r, _)) => Ok(Some(r)),
        Err(CliError::Budget(m)) => {
            eprintln!("crossnum: {g}: {m}");
            exhausted.set(true);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn cmd_verify(out: &mut impl Write, suite: &str, specs: &[String], search: &SearchArgs) -> Result<(), CliError> {
    let groups: Vec<FiniteAbelianGroup> = specs.iter().map(|s| parse_group(s)).collect::<Result<_, _>>()?;
    let mut reports: Vec<Report> = Vec::new();
    let exhausted = Cell::new(false);
    let pair = |a: &FiniteAbelianGroup, b: &FiniteAbelianGroup, reports: &mut Vec<Report>| -> Result<(), CliError> {
        if let (Some(ra), Some(rb)) = (search_or_none(a, search, &exhausted)?, search_or_none(b, search, &exhausted)?) {
            reports.extend(compare_pair(a, &ra, b, &rb));
        }
        Ok(())
    };
    if suite == "desk" {
        if !groups.is_empty() {
            return Err(CliError::Parse("the desk suite takes no groups".into()));
        }
        for case in desk_suite() {
            let g = FiniteAbelianGroup::from_orders(&case.orders)?;
            let r = search_or_none(&g, search, &exhausted)?;
            reports.extend(formulas::verify(case.theorem, &g, r.as_ref(), search.budget())?);
        }
        pair(&parse_group("4,4,4")?, &parse_group("2,2,2,4")?, &mut reports)?;
    } else {
        let theorem: Theorem = suite.parse().map_err(CliError::Parse)?;
        if groups.is_empty() {
            return Err(CliError::Parse(format!("{theorem} needs at least one group")));
        }
        if theorem == Theorem::ExponentPair {
            let [a, b] = groups.as_slice() else {
                return Err(CliError::Parse("exp-pair compares exactly two groups".into()));
            };
            pair(a, b, &mut reports)?;
        } else {
            for g in &groups {
                let r = search_or_none(g, search, &exhausted)?;
                reports.extend(formulas::verify(theorem, g, r.as_ref(), search.budget())?);
            }
        }
    }
    let (mut passed, mut failed, mut incomparable) = (0, 0, 0);
    for rep in &reports {
        writeln!(out, "{}", serde_json::to_string(rep).map_err(io::Error::from)?)?;
        match (rep.pass, rep.details.comparable) {
            (true, _) => passed += 1,
            (false, true) => failed += 1,
            (false, false) => incomparable += 1,
        }
    }
    writeln!(out, "{}", json!({"summary": {"failed": failed, "incomparable": incomparable, "passed": passed}}))?;
    if failed > 0 {
        Err(CliError::Verification(format!("{failed} of {} checks failed", reports.len())))
    } else if exhausted.get() {
        Err(CliError::Budget("some searches ran out of budget".into()))
    } else {
        Ok(())
    }
}
