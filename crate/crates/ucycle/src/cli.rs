//! The `ucycle` command line.
//!
//! Exit codes: 0 when the run succeeded (and verified, if asked), 1 when a
//! construction or verification failed, 2 for invalid input or refused
//! budgets.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use ucycle_core::debruijn::{self, MatrixUCycleSpec};
use ucycle_core::greedy_ucycle::{complement_family, complement_row, greedy_uword};
use ucycle_core::outcome::{UCycleOutcome, UWordOutcome};
use ucycle_core::overlap_graph::{
    self, build_overlap_graph, cluster_by_signature, d3_keygroup_cycle_check, hamiltonian_cycle,
    implied_order, linearize, HamiltonSearch, DEFAULT_SEARCH_BUDGET,
};
use ucycle_core::setpartition::{CycleRule, PartitionGreedy, SearchMode, SearchOptions};
use ucycle_core::verify::{self, CoverageReport};
use ucycle_core::{Error, PermMatrix, Result};

use crate::dot::to_dot;
use crate::record::Record;
use crate::search::search_starts_parallel;
use crate::text::{format_report, format_row, format_rows, format_window, parse_row, parse_rows, transpose};

#[derive(Debug, Parser)]
#[command(name = "ucycle", version, about = "Universal cycles and words: construction and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// De Bruijn sequence of order n over {0..k-1}
    Debruijn(DebruijnArgs),
    /// Greedy u-cycle (or u-word) for n-permutations
    Perm(PermArgs),
    /// Greedy u-cycle (or u-word) for d-dimensional n-permutations
    Multiperm(MultipermArgs),
    /// U-cycle for d-dimensional matrices over {1..k}
    Matrix(MatrixArgs),
    /// Greedy runs and start searches for set partitions
    Setpartition(SetpartitionArgs),
    /// Overlap graph P_d(n), Hamiltonian cycles and their linearization
    Graph(GraphArgs),
    /// Key, head and switching constructions
    Lab(LabArgs),
    /// Check a u-cycle or u-word read from standard input
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Check the output with the exhaustive verifier
    #[arg(long)]
    pub verify: bool,
    /// Print one JSON record instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Greedy,
    Euler,
}

#[derive(Debug, Args)]
pub struct DebruijnArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Method::Greedy)]
    pub method: Method,
    /// First letters of the greedy run (default: n-1 copies of k-1)
    #[arg(long, conflicts_with = "method")]
    pub start: Option<String>,
    /// Print the de Bruijn graph B(n,k) in DOT format instead
    #[arg(long)]
    pub dot: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct PermArgs {
    #[arg(long)]
    pub n: usize,
    /// Print the u-word instead of the u-cycle
    #[arg(long)]
    pub uword: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct MultipermArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Print the u-word instead of the u-cycle
    #[arg(long, conflicts_with_all = ["complement_rows", "family"])]
    pub uword: bool,
    /// Complement these rows (1-based, comma-separated)
    #[arg(long, value_delimiter = ',', conflicts_with = "family")]
    pub complement_rows: Option<Vec<usize>>,
    /// Print all 2^(d-1) row-complemented u-cycles
    #[arg(long)]
    pub family: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix shape n1,n2,...,nd; windows run along the last dimension
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    #[arg(long)]
    pub k: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Uword,
    Ucycle,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Uword => SearchMode::UWord,
            Mode::Ucycle => SearchMode::UCycle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Closing,
    Windows,
}

impl From<Rule> for CycleRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Closing => CycleRule::Closing,
            Rule::Windows => CycleRule::Windows,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["start", "search"])))]
pub struct SetpartitionArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Mode::Uword)]
    pub mode: Mode,
    /// Run the greedy from this start of length n-1
    #[arg(long)]
    pub start: Option<String>,
    /// Run the greedy from every start and list the successful ones
    #[arg(long)]
    pub search: bool,
    /// Largest start letter searched (default n-1 for u-words, n for u-cycles)
    #[arg(long)]
    pub alphabet_max: Option<u32>,
    /// When a trimmed u-word counts as a u-cycle
    #[arg(long, value_enum, default_value_t = Rule::Closing)]
    pub rule: Rule,
    /// Allow searches for n above 7
    #[arg(long)]
    pub allow_heavy: bool,
    /// Worker threads for --search
    #[arg(long, default_value = "1")]
    pub jobs: NonZeroUsize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    /// Print the graph in DOT format
    #[arg(long)]
    pub dot: bool,
    /// Write the DOT graph to this file
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Search for a Hamiltonian cycle
    #[arg(long)]
    pub hamiltonian: bool,
    /// Turn the Hamiltonian cycle into a candidate u-cycle
    #[arg(long)]
    pub linearize: bool,
    /// Node expansions allowed in the Hamiltonian search
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["s4_switch", "keygroup"])))]
pub struct LabArgs {
    /// Join the two key cycles of S_4 into a Hamiltonian cycle of P(4)
    #[arg(long)]
    pub s4_switch: bool,
    /// Check whether the key group with rows K2 and K3 closes into a cycle
    #[arg(long, num_args = 2, value_names = ["K2", "K3"])]
    pub keygroup: Option<Vec<String>>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Debruijn,
    Perm,
    Multiperm,
    Partition,
    Matrix,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Take windows cyclically (u-cycles) rather than linearly (u-words)
    #[arg(long)]
    pub cyclic: bool,
    /// Print one JSON record instead of the text report
    #[arg(long)]
    pub json: bool,
}

/// What a subcommand produced, before it is printed.
struct Output {
    text: String,
    record: Record,
    /// The construction itself failed (a stall, an unknown search result).
    failed: bool,
    /// Verdict and report, when something was verified.
    check: Option<(bool, String)>,
    /// Append the `# verified` trailer when the check passes.
    trailer: bool,
}

impl Output {
    fn new(text: String, record: Record) -> Self {
        Output {
            text,
            record,
            failed: false,
            check: None,
            trailer: true,
        }
    }

    fn checked(mut self, verify: bool, report: impl FnOnce() -> Result<CoverageReport>) -> Result<Self> {
        if verify {
            let r = report()?;
            self.add_check(r.verdict(), format_report(&r));
        }
        Ok(self)
    }

    fn add_check(&mut self, ok: bool, detail: String) {
        match &mut self.check {
            Some((all, text)) => {
                *all &= ok;
                if !ok {
                    text.push_str(&detail);
                }
            }
            None => self.check = Some((ok, if ok { String::new() } else { detail })),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn debruijn_cmd(a: &DebruijnArgs) -> Result<Output> {
    if a.dot {
        let g = debruijn::debruijn_graph(a.n, a.k)?;
        let word = |w: &Vec<u32>| format_row(w, a.k <= 10);
        let text = to_dot(&format!("B({},{})", a.n, a.k), &g, word, word);
        let record = Record::new("debruijn-graph").param("n", a.n).param("k", a.k);
        return Ok(Output::new(text, record));
    }
    let compact = a.k <= 10;
    let mut header = format!("# debruijn n={} k={}", a.n, a.k);
    let mut record = Record::new("debruijn").param("n", a.n).param("k", a.k);
    let (word, failed) = match a.method {
        Method::Euler => {
            header.push_str(" method=euler");
            record = record.param("method", "euler");
            (debruijn::debruijn_via_euler(a.n, a.k)?, false)
        }
        Method::Greedy => {
            header.push_str(" method=greedy");
            record = record.param("method", "greedy");
            let start = a.start.as_deref().map(parse_row).transpose()?;
            if let Some(s) = &start {
                write!(header, " start={}", format_row(s, compact)).expect("String");
                record = record.param("start", s.clone());
            }
            match debruijn::martin(a.n, a.k, start.as_deref())? {
                UCycleOutcome::Cycle(w) => (w, false),
                UCycleOutcome::NotCyclic { uword } => {
                    header.push_str(" outcome=not-cyclic");
                    record = record.param("outcome", "not-cyclic");
                    (uword, true)
                }
                UCycleOutcome::Stalled(s) => {
                    write!(header, " outcome=stalled covered={} total={}", s.covered, s.total).expect("String");
                    record = record.param("outcome", "stalled");
                    (s.word, true)
                }
            }
        }
    };
    write!(header, " length={}\n", word.len()).expect("String");
    let text = header + &format_row(&word, compact) + "\n";
    let mut out = Output::new(text, record.rows(vec![word.clone()]));
    out.failed = failed;
    if !failed {
        out = out.checked(a.common.verify, || verify::verify_debruijn(&word, a.n, a.k))?;
    }
    Ok(out)
}

fn complemented(u: &PermMatrix, rows: &[usize]) -> Result<PermMatrix> {
    rows.iter().try_fold(u.clone(), |m, &r| complement_row(&m, r))
}

fn multiperm_block(label: &str, d: usize, n: usize, extra: &str, rows: &[Vec<u32>]) -> String {
    let columns = rows.first().map_or(0, Vec::len);
    format!("# {label} d={d} n={n} columns={columns}{extra}\n{}", format_rows(rows))
}

fn multiperm_cmd(a: &MultipermArgs, kind: &str) -> Result<Output> {
    let (d, n) = (a.d, a.n);
    let trace = greedy_uword(d, n)?;
    let base = Record::new(kind).param("d", d).param("n", n);
    if a.uword {
        let rows = trace.uword().rows().to_vec();
        let text = multiperm_block("uword", d, n, "", &rows);
        return Output::new(text, base.param("uword", true).rows(rows.clone()))
            .checked(a.common.verify, || verify::verify_multiperm_ucycle(&rows, d, n, false));
    }
    let u = trace.ucycle();
    if a.family {
        let members = complement_family(u)?;
        let mut text = String::new();
        let mut all_rows = Vec::new();
        let mut out_checks = Vec::new();
        for (mask, m) in members.iter().enumerate() {
            let flipped: Vec<String> = (0..d - 1)
                .filter(|r| mask >> r & 1 == 1)
                .map(|r| (r + 1).to_string())
                .collect();
            let extra = format!(" member={} complemented={}", mask + 1, if flipped.is_empty() { "none".into() } else { flipped.join(",") });
            text.push_str(&multiperm_block("cyclic", d, n, &extra, m.rows()));
            all_rows.extend(m.rows().iter().cloned());
            if a.common.verify {
                out_checks.push(verify::verify_multiperm_ucycle(m.rows(), d, n, true)?);
            }
        }
        let mut out = Output::new(text, base.param("family", members.len()).rows(all_rows));
        for r in out_checks {
            out.add_check(r.verdict(), format_report(&r));
        }
        return Ok(out);
    }
    let (m, extra, record) = match &a.complement_rows {
        Some(rows) => {
            let list: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
            (
                complemented(u, rows)?,
                format!(" complemented={}", list.join(",")),
                base.param("complement_rows", rows.clone()),
            )
        }
        None => (u.clone(), String::new(), base),
    };
    let rows = m.into_rows();
    let text = multiperm_block("cyclic", d, n, &extra, &rows);
    Output::new(text, record.rows(rows.clone()))
        .checked(a.common.verify, || verify::verify_multiperm_ucycle(&rows, d, n, true))
}

fn matrix_cmd(a: &MatrixArgs) -> Result<Output> {
    let spec = MatrixUCycleSpec::new(a.dims.clone(), a.k)?;
    let slices = debruijn::matrix_ucycle(&spec)?;
    let rows = transpose(&slices)?;
    let dims: Vec<String> = a.dims.iter().map(|x| x.to_string()).collect();
    let text = format!(
        "# matrix dims={} k={} slices={}\n{}",
        dims.join(","),
        a.k,
        slices.len(),
        format_rows(&rows)
    );
    let record = Record::new("matrix").param("dims", a.dims.clone()).param("k", a.k).rows(rows);
    Output::new(text, record).checked(a.common.verify, || verify::verify_matrix_ucycle(&slices, &spec))
}

fn setpartition_cmd(a: &SetpartitionArgs) -> Result<Output> {
    let mode = SearchMode::from(a.mode);
    let rule = CycleRule::from(a.rule);
    let base = Record::new("setpartition")
        .param("n", a.n)
        .param("mode", mode.as_str());
    if let Some(start) = &a.start {
        let start = parse_row(start)?;
        let mut runner = PartitionGreedy::new(a.n)?;
        let compact = |w: &[u32]| format_row(w, w.iter().all(|&x| x < 10));
        let mut header = format!("# setpartition n={} mode={} start={}", a.n, mode.as_str(), compact(&start));
        let (word, ok) = match mode {
            SearchMode::UWord => match runner.uword(&start)? {
                UWordOutcome::Complete(w) => (w, true),
                UWordOutcome::Stalled(s) => {
                    write!(header, " outcome=stalled covered={} total={}", s.covered, s.total).expect("String");
                    (s.word, false)
                }
            },
            SearchMode::UCycle => match runner.ucycle_with(&start, rule)? {
                UCycleOutcome::Cycle(w) => (w, true),
                UCycleOutcome::NotCyclic { uword } => {
                    header.push_str(" outcome=not-cyclic");
                    (uword, false)
                }
                UCycleOutcome::Stalled(s) => {
                    write!(header, " outcome=stalled covered={} total={}", s.covered, s.total).expect("String");
                    (s.word, false)
                }
            },
        };
        write!(header, " length={}\n", word.len()).expect("String");
        let text = header + &compact(&word) + "\n";
        let record = base
            .param("start", start)
            .param("success", ok)
            .rows(vec![word.clone()]);
        let mut out = Output::new(text, record);
        out.failed = !ok;
        if ok {
            let cyclic = mode == SearchMode::UCycle;
            out = out.checked(a.common.verify, || verify::verify_partition_ucycle(&word, a.n, cyclic))?;
        }
        return Ok(out);
    }
    let opts = SearchOptions {
        alphabet_max: a.alphabet_max,
        rule,
        allow_heavy: a.allow_heavy,
    };
    let found = search_starts_parallel(a.n, mode, opts, a.jobs)?;
    let mut text = format!(
        "n={} mode={} alphabet_max={} successes={}\n",
        found.n,
        mode.as_str(),
        found.alphabet_max,
        found.successes.len()
    );
    let compact = found.alphabet_max < 10;
    for s in &found.successes {
        text.push_str(&format_row(s, compact));
        text.push('\n');
    }
    let record = base
        .param("alphabet_max", found.alphabet_max)
        .param("successes", found.successes.len())
        .rows(found.successes.clone());
    let mut out = Output::new(text, record);
    if a.common.verify {
        let mut runner = PartitionGreedy::new(a.n)?;
        out.check = Some((true, String::new()));
        for s in &found.successes {
            let word = match mode {
                SearchMode::UWord => match runner.uword(s)? {
                    UWordOutcome::Complete(w) => Some(w),
                    UWordOutcome::Stalled(_) => None,
                },
                SearchMode::UCycle => runner.ucycle_with(s, rule)?.cycle().map(<[u32]>::to_vec),
            };
            match word {
                Some(w) => {
                    let r = verify::verify_partition_ucycle(&w, a.n, mode == SearchMode::UCycle)?;
                    out.add_check(r.verdict(), format_report(&r));
                }
                None => out.add_check(false, format!("start {} did not rerun\n", format_row(s, compact))),
            }
        }
    }
    Ok(out)
}

fn graph_cmd(a: &GraphArgs) -> Result<Output> {
    let g = build_overlap_graph(a.d, a.n)?;
    let vname = |v: &ucycle_core::ReducedWindow| format_window(v.rows());
    let dot = || to_dot(&format!("P_{}({})", a.d, a.n), &g.graph, vname, |e: &Vec<Vec<u32>>| format_window(e));
    let mut record = Record::new("graph")
        .param("d", a.d)
        .param("n", a.n)
        .param("vertices", g.graph.vertex_count())
        .param("edges", g.graph.edge_count());
    if let Some(path) = &a.out {
        std::fs::write(path, dot()).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut text = String::new();
    if a.dot && a.out.is_none() {
        text.push_str(&dot());
    } else if !a.hamiltonian && !a.linearize {
        let clusters = cluster_by_signature(&g);
        writeln!(
            text,
            "# overlap d={} n={} vertices={} edges={} clusters={}",
            a.d,
            a.n,
            g.graph.vertex_count(),
            g.graph.edge_count(),
            clusters.len()
        )
        .expect("String");
        for v in 0..g.graph.vertex_count() {
            let succ: Vec<String> = g.graph.successors(v).map(|w| vname(g.graph.vertex(w))).collect();
            writeln!(text, "{} -> {}", vname(g.graph.vertex(v)), succ.join(" ")).expect("String");
        }
        record = record.param("clusters", clusters.len());
    }
    let mut out_failed = false;
    let mut checks: Vec<(bool, String)> = Vec::new();
    if a.hamiltonian || a.linearize {
        match hamiltonian_cycle(&g.graph, a.budget) {
            HamiltonSearch::Found(cycle) => {
                let names: Vec<String> = cycle.iter().map(|&v| vname(g.graph.vertex(v))).collect();
                if a.hamiltonian {
                    writeln!(text, "# hamiltonian d={} n={} length={}", a.d, a.n, cycle.len()).expect("String");
                    for name in &names {
                        writeln!(text, "{name}").expect("String");
                    }
                }
                record = record.param("cycle", names);
                checks.push((g.graph.is_hamiltonian_cycle(&cycle), "hamiltonian cycle check failed\n".into()));
                if a.linearize {
                    let vertices: Vec<_> = cycle.iter().map(|&v| g.graph.vertex(v).clone()).collect();
                    let order = implied_order(&vertices, a.d, a.n)?;
                    match linearize(&order) {
                        Ok(rows) => {
                            text.push_str(&multiperm_block("linearized", a.d, a.n, "", &rows));
                            if a.common.verify {
                                let r = verify::verify_multiperm_ucycle(&rows, a.d, a.n, true)?;
                                checks.push((r.verdict(), format_report(&r)));
                            }
                            record = record.rows(rows);
                        }
                        Err(e @ Error::CyclicOrder { .. }) => {
                            writeln!(text, "# linearize failed: {e}").expect("String");
                            record = record.param("acyclic", false);
                            out_failed = true;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            HamiltonSearch::Unknown { expansions, exhausted } => {
                writeln!(
                    text,
                    "# hamiltonian unknown expansions={expansions} exhausted={exhausted}"
                )
                .expect("String");
                record = record.param("cycle", Value::Null);
                out_failed = true;
            }
        }
    }
    let mut out = Output::new(text, record);
    out.failed = out_failed;
    if a.common.verify {
        for (ok, detail) in checks {
            out.add_check(ok, detail);
        }
    }
    Ok(out)
}

fn lab_cmd(a: &LabArgs) -> Result<Output> {
    let show = |p: &[u32]| format_row(p, true);
    if a.s4_switch {
        let s = overlap_graph::s4_switch()?;
        let mut text = String::new();
        for (i, part) in [&s.part1, &s.part2].into_iter().enumerate() {
            let list: Vec<String> = part.iter().map(|p| show(p)).collect();
            writeln!(text, "# part {} {}", i + 1, list.join(" ")).expect("String");
        }
        writeln!(
            text,
            "# switch a={} b={} a'={} b'={} edges a'->b b'->a",
            show(&s.a),
            show(&s.b),
            show(&s.a_prime),
            show(&s.b_prime)
        )
        .expect("String");
        for p in &s.cycle {
            writeln!(text, "{}", show(p)).expect("String");
        }
        let record = Record::new("s4-switch")
            .param("a", s.a.clone())
            .param("b", s.b.clone())
            .param("a_prime", s.a_prime.clone())
            .param("b_prime", s.b_prime.clone())
            .rows(s.cycle.clone());
        let mut out = Output::new(text, record);
        if a.common.verify {
            let g = build_overlap_graph(2, 4)?;
            let indices: Option<Vec<usize>> = s.cycle.iter().map(|p| g.find(std::slice::from_ref(p))).collect();
            let ok = indices.is_some_and(|c| g.graph.is_hamiltonian_cycle(&c));
            out.add_check(ok, "switched list is not a Hamiltonian cycle of P(4)\n".into());
        }
        return Ok(out);
    }
    let keys = a.keygroup.as_ref().expect("clap requires one of the two");
    let k2 = parse_row(&keys[0])?;
    let k3 = parse_row(&keys[1])?;
    let check = d3_keygroup_cycle_check(&k2, &k3)?;
    let mut text = String::new();
    for item in &check.list {
        writeln!(text, "{}", format_window(item)).expect("String");
    }
    match check.broken_at {
        None => text.push_str("cycle=true\n"),
        Some(i) => {
            let next = (i + 1) % check.list.len();
            writeln!(
                text,
                "cycle=false broken_at={} {} -> {}",
                i + 1,
                format_window(&check.list[i]),
                format_window(&check.list[next])
            )
            .expect("String");
        }
    }
    let record = Record::new("keygroup")
        .param("key2", k2)
        .param("key3", k3)
        .param("cycle", check.is_cycle())
        .rows(check.list.iter().flatten().cloned().collect());
    Ok(Output::new(text, record))
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| invalid(format!("--kind {kind} needs --{flag}")))
}

fn one_row(rows: Vec<Vec<u32>>) -> Result<Vec<u32>> {
    match <[Vec<u32>; 1]>::try_from(rows) {
        Ok([row]) => Ok(row),
        Err(rows) => Err(invalid(format!("expected one row, got {}", rows.len()))),
    }
}

fn verify_cmd(a: &VerifyArgs, input: &str) -> Result<Output> {
    let rows = parse_rows(input)?;
    let mut record = Record::new("verify").param("cyclic", a.cyclic);
    let report = match a.kind {
        Kind::Debruijn => {
            let n = need(a.n, "n", "debruijn")?;
            let k = need(a.k, "k", "debruijn")?;
            record = record.param("kind", "debruijn").param("n", n).param("k", k);
            verify::verify_debruijn_windows(&one_row(rows.clone())?, n, k, a.cyclic)?
        }
        Kind::Perm | Kind::Multiperm => {
            let n = need(a.n, "n", "perm")?;
            let d = if a.kind == Kind::Perm { 2 } else { need(a.d, "d", "multiperm")? };
            record = record.param("kind", "multiperm").param("d", d).param("n", n);
            verify::verify_multiperm_ucycle(&rows, d, n, a.cyclic)?
        }
        Kind::Partition => {
            let n = need(a.n, "n", "partition")?;
            record = record.param("kind", "partition").param("n", n);
            verify::verify_partition_ucycle(&one_row(rows.clone())?, n, a.cyclic)?
        }
        Kind::Matrix => {
            let dims = a.dims.clone().ok_or_else(|| invalid("--kind matrix needs --dims"))?;
            let k = need(a.k, "k", "matrix")?;
            let spec = MatrixUCycleSpec::new(dims.clone(), k)?;
            if rows.len() != spec.slice_cells() {
                return Err(invalid(format!(
                    "expected {} rows (one per slice cell), got {}",
                    spec.slice_cells(),
                    rows.len()
                )));
            }
            record = record.param("kind", "matrix").param("dims", dims).param("k", k);
            verify::verify_matrix_windows(&transpose(&rows)?, &spec, a.cyclic)?
        }
    };
    let ok = report.verdict();
    let mut out = Output::new(format_report(&report), record.rows(rows));
    out.check = Some((ok, String::new()));
    out.trailer = false;
    Ok(out)
}

fn dispatch(cmd: &Command, stdin: &mut dyn Read) -> Result<(Output, bool)> {
    Ok(match cmd {
        Command::Debruijn(a) => (debruijn_cmd(a)?, a.common.json),
        Command::Perm(a) => {
            let m = MultipermArgs {
                d: 2,
                n: a.n,
                uword: a.uword,
                complement_rows: None,
                family: false,
                common: Common {
                    verify: a.common.verify,
                    json: a.common.json,
                },
            };
            (multiperm_cmd(&m, "perm")?, a.common.json)
        }
        Command::Multiperm(a) => (multiperm_cmd(a, "multiperm")?, a.common.json),
        Command::Matrix(a) => (matrix_cmd(a)?, a.common.json),
        Command::Setpartition(a) => (setpartition_cmd(a)?, a.common.json),
        Command::Graph(a) => (graph_cmd(a)?, a.common.json),
        Command::Lab(a) => (lab_cmd(a)?, a.common.json),
        Command::Verify(a) => {
            let mut input = String::new();
            stdin
                .read_to_string(&mut input)
                .map_err(|e| invalid(format!("cannot read standard input: {e}")))?;
            (verify_cmd(a, &input)?, a.json)
        }
    })
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (out, json) = match dispatch(&cli.command, stdin) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let verdict = out.check.as_ref().map(|(ok, _)| *ok);
    let written = if json {
        let mut record = out.record;
        record.verified = verdict;
        writeln!(stdout, "{}", record.to_json())
    } else {
        let mut text = out.text;
        if out.trailer && verdict == Some(true) {
            text.push_str("# verified\n");
        }
        stdout.write_all(text.as_bytes())
    };
    if let Err(e) = written.and_then(|_| stdout.flush()) {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 2;
    }
    if let Some((false, detail)) = &out.check {
        if out.trailer {
            let _ = write!(stderr, "verification failed\n{detail}");
        }
        return 1;
    }
    if out.failed {
        return 1;
    }
    0
}
