//! Reproducible experiments behind the `dhsp` command-line tool.
//!
//! Every run returns an [`ExperimentReport`] with the top-level shape
//! `{config, results, checks, duration_ms}`. Numeric content depends only on
//! the configuration: the master seed is split into per-component streams
//! with fixed offsets (see [`crate::rng`]), and parallel trials draw from
//! streams fixed before execution.

use std::io::{self, Write};
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter};
use serde_json::Value;

use crate::cloning::{
    basis_copy_cloner, clone_known_a, clone_target, fidelity, fixed_slope_cloner, identity_cloner,
    measure_clone_pair, no_cloning_witness, recover_a_from_clone_pairs, unitary_cloner_refuter, CloningCandidate,
};
use crate::dcp::DcpSample;
use crate::error::{Error, Result};
use crate::ettinger_hoyer::{consistency_check, eh_distribution, eh_sample, recover_slope, success_rate};
use crate::group::DihedralGroup;
use crate::hsp::{exact_fourier_distribution, make_separating_function, max_two_dim_probability, measure_coset, CosetState};
use crate::qft::{apply_qft, build_qft, real_basis_distribution, Basis, StateVector};
use crate::representations::{irrep_list, schur_check};
use crate::rng::{stream_rng, CLONE_PAIR_OFFSET, HSP_COSET_OFFSET, HSP_OUTCOME_OFFSET, SLOPE_OFFSET};

/// Largest rotation order accepted by any command.
pub const MAX_N: usize = 4096;
/// Largest rotation order for commands that build the dense QFT.
pub const MAX_DENSE_N: usize = 512;

pub const EXACT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Irreps,
    QftCheck,
    Hsp,
    Eh,
    Clone,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Irreps => "irreps",
            Command::QftCheck => "qft-check",
            Command::Hsp => "hsp",
            Command::Eh => "eh",
            Command::Clone => "clone",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub command: Command,
    pub n: usize,
    pub a: Option<usize>,
    pub samples: usize,
    pub m: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub pairs: usize,
    pub sweep: Vec<usize>,
    pub format: OutputFormat,
}

impl ExperimentConfig {
    pub fn new(command: Command, n: usize) -> Self {
        ExperimentConfig {
            command,
            n,
            a: None,
            samples: 10_000,
            m: None,
            seed: 0,
            trials: 0,
            pairs: 20,
            sweep: Vec::new(),
            format: OutputFormat::Json,
        }
    }

    pub fn validate(&self) -> Result<DihedralGroup> {
        if self.n == 0 || self.n > MAX_N {
            return Err(Error::InvalidConfig(format!("n must be in [1, {MAX_N}], got {}", self.n)));
        }
        if let Some(a) = self.a {
            if a >= self.n {
                return Err(Error::InvalidSlope { a, n: self.n });
            }
        }
        if self.command == Command::QftCheck && self.n > MAX_DENSE_N {
            return Err(Error::InvalidConfig(format!("qft-check builds a dense matrix; n must be <= {MAX_DENSE_N}")));
        }
        if self.command == Command::Clone && self.n < 3 {
            return Err(Error::InvalidConfig("clone needs n >= 3".into()));
        }
        DihedralGroup::new(self.n)
    }

    /// The configured slope, or one derived from the seed.
    pub fn resolved_slope(&self) -> usize {
        self.a
            .unwrap_or_else(|| stream_rng(self.seed, SLOPE_OFFSET, 0).random_range(0..self.n))
    }

    /// Sample count for `eh`: explicit `m`, else 64·⌈log₂ n⌉.
    pub fn resolved_m(&self) -> usize {
        self.m.unwrap_or_else(|| 64 * ceil_log2(self.n).max(1))
    }
}

pub fn ceil_log2(n: usize) -> usize {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as usize
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    fn at_most(name: &str, value: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            value,
            threshold,
            passed: value <= threshold,
        }
    }

    fn below(name: &str, value: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            value,
            threshold,
            passed: value < threshold,
        }
    }

    fn at_least(name: &str, value: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            value,
            threshold,
            passed: value >= threshold,
        }
    }

    fn flag(name: &str, ok: bool) -> Self {
        Check {
            name: name.into(),
            value: f64::from(u8::from(ok)),
            threshold: 1.0,
            passed: ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub version: &'static str,
    #[serde(flatten)]
    pub config: ExperimentConfig,
    pub resolved_a: usize,
}

/// A tabular view for CSV output.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: ConfigEcho,
    pub results: Value,
    pub checks: Vec<Check>,
    pub duration_ms: u64,
    #[serde(skip)]
    pub table: Table,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn write_json<W: Write>(&self, writer: W) -> io::Result<()> {
        let mut ser = serde_json::Serializer::with_formatter(writer, RoundTripFormatter);
        self.serialize(&mut ser).map_err(io::Error::other)
    }

    pub fn to_json(&self) -> String {
        let mut buf = Vec::new();
        self.write_json(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("json is utf-8")
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(&self.table.header)?;
        for row in &self.table.rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

/// Compact JSON with every float written to 17 significant digits.
#[derive(Debug, Clone, Copy, Default)]
pub struct RoundTripFormatter;

impl Formatter for RoundTripFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", format_f64(value))
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        CompactFormatter.begin_array(writer)
    }
}

/// 17-significant-digit scientific notation, e.g. `3.1250000000000000e-2`.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let group = config.validate()?;
    let start = Instant::now();
    let a = config.resolved_slope();
    let (results, checks, table) = match config.command {
        Command::Irreps => run_irreps(group)?,
        Command::QftCheck => run_qft_check(config, group, a)?,
        Command::Hsp => run_hsp(config, group, a)?,
        Command::Eh => run_eh(config, group, a)?,
        Command::Clone => run_clone(config, group, a)?,
    };
    Ok(ExperimentReport {
        config: ConfigEcho {
            version: crate::VERSION,
            config: config.clone(),
            resolved_a: a,
        },
        results,
        checks,
        duration_ms: start.elapsed().as_millis() as u64,
        table,
    })
}

/// Runs on a dedicated pool of `threads` workers (0 = rayon default).
pub fn run_with_threads(config: &ExperimentConfig, threads: usize) -> Result<ExperimentReport> {
    if threads == 0 {
        return run(config);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    pool.install(|| run(config))
}

type CommandOutput = (Value, Vec<Check>, Table);

fn to_value<T: Serialize>(value: T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn strings<I: IntoIterator<Item = S>, S: ToString>(items: I) -> Vec<String> {
    items.into_iter().map(|s| s.to_string()).collect()
}

#[derive(Serialize)]
struct IrrepRow {
    label: String,
    dim: usize,
}

#[derive(Serialize)]
struct IrrepsResults {
    labels: Vec<IrrepRow>,
    one_dim_count: usize,
    two_dim_count: usize,
    expected_two_dim_count: usize,
    sum_of_squared_dims: usize,
    group_order: usize,
    schur_max_deviation: f64,
}

fn run_irreps(group: DihedralGroup) -> Result<CommandOutput> {
    let labels = irrep_list(group);
    let schur = schur_check(group);
    let results = IrrepsResults {
        labels: labels
            .iter()
            .map(|l| IrrepRow {
                label: l.to_string(),
                dim: l.dim(),
            })
            .collect(),
        one_dim_count: labels.iter().filter(|l| l.dim() == 1).count(),
        two_dim_count: labels.iter().filter(|l| l.dim() == 2).count(),
        expected_two_dim_count: (group.n() - 1) / 2,
        sum_of_squared_dims: schur.sum_of_squared_dims,
        group_order: group.order(),
        schur_max_deviation: schur.max_deviation,
    };
    let checks = vec![
        Check::flag("sum_of_squared_dims_equals_order", results.sum_of_squared_dims == group.order()),
        Check::flag("two_dim_count_matches_formula", results.two_dim_count == results.expected_two_dim_count),
        Check::below("schur_max_deviation", schur.max_deviation, EXACT_TOLERANCE),
    ];
    let table = Table {
        header: strings(["label", "dim"]),
        rows: labels.iter().map(|l| vec![l.to_string(), l.dim().to_string()]).collect(),
    };
    Ok((to_value(results), checks, table))
}

#[derive(Serialize)]
struct QftResults {
    fourier_index_count: usize,
    unitarity_defect: f64,
    plancherel_vectors: usize,
    plancherel_max_deviation: f64,
    pipeline_max_deviation: f64,
}

fn run_qft_check(config: &ExperimentConfig, group: DihedralGroup, a: usize) -> Result<CommandOutput> {
    let qft = build_qft(group);
    let unitarity_defect = qft.unitarity_defect();

    let vectors = config.samples.min(1000);
    let order = group.order();
    let plancherel_max_deviation = (0..vectors as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(config.seed, HSP_OUTCOME_OFFSET, t);
            let raw: Vec<num_complex::Complex64> = (0..order)
                .map(|_| num_complex::Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let s = StateVector::new(raw.into_iter().map(|z| z / norm).collect(), Basis::Group);
            let out = apply_qft(&qft, &s).expect("group-basis input");
            (out.norm() - 1.0).abs()
        })
        .reduce(|| 0.0, f64::max);

    let coset = CosetState::new(group, a, group.identity())?;
    let out = apply_qft(&qft, coset.state())?;
    let exact = exact_fourier_distribution(group, a, group.identity())?;
    let pipeline_max_deviation = exact
        .probabilities()
        .iter()
        .zip(out.probabilities())
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max);

    let results = QftResults {
        fourier_index_count: qft.indices().len(),
        unitarity_defect,
        plancherel_vectors: vectors,
        plancherel_max_deviation,
        pipeline_max_deviation,
    };
    let checks = vec![
        Check::below("unitarity_defect", unitarity_defect, EXACT_TOLERANCE),
        Check::flag("fourier_index_count_equals_order", results.fourier_index_count == order),
        Check::below("plancherel_max_deviation", plancherel_max_deviation, EXACT_TOLERANCE),
        Check::below("pipeline_max_deviation", pipeline_max_deviation, EXACT_TOLERANCE),
    ];
    let table = Table {
        header: strings(["index", "label", "i", "j", "probability"]),
        rows: exact
            .iter()
            .enumerate()
            .map(|(pos, (idx, p))| {
                vec![
                    pos.to_string(),
                    idx.label.to_string(),
                    (idx.row + 1).to_string(),
                    (idx.col + 1).to_string(),
                    format_f64(p),
                ]
            })
            .collect(),
    };
    Ok((to_value(results), checks, table))
}

#[derive(Serialize)]
struct OutcomeRow {
    label: String,
    i: usize,
    j: usize,
    exact: f64,
    real_basis: f64,
    count: u64,
}

#[derive(Serialize)]
struct HspResults {
    a: usize,
    samples: usize,
    outcomes: Vec<OutcomeRow>,
    total_probability: f64,
    max_two_dim_probability: f64,
    flat_value: f64,
    flatness_bound: f64,
    flatness_ratio: f64,
    real_basis_max_two_dim_probability: f64,
    real_basis_flatness_ratio: f64,
    max_flat_deviation: f64,
    tv_distance: Option<f64>,
}

fn run_hsp(config: &ExperimentConfig, group: DihedralGroup, a: usize) -> Result<CommandOutput> {
    let n = group.n();
    let f = make_separating_function(a, group)?;
    let mut exact = exact_fourier_distribution(group, a, group.identity())?;
    let real = real_basis_distribution(group, a, group.identity())?;

    // second-register measurement per sample, then Fourier sampling of the
    // collapsed coset state; draws are grouped by coset so each coset's
    // exact table is built once
    if config.samples > 0 {
        let mut coset_rng = stream_rng(config.seed, HSP_COSET_OFFSET, 0);
        let mut per_coset = vec![0usize; n];
        for _ in 0..config.samples {
            let cs = measure_coset(&f, &mut coset_rng);
            per_coset[f.eval(cs.representative())] += 1;
        }
        let partial: Result<Vec<Vec<u64>>> = per_coset
            .par_iter()
            .enumerate()
            .filter(|(_, &count)| count > 0)
            .map(|(id, &count)| {
                let dist = exact_fourier_distribution(group, a, group.element_at(id))?;
                let sampler = dist.sampler();
                let mut rng = stream_rng(config.seed, HSP_OUTCOME_OFFSET, id as u64);
                let mut counts = vec![0u64; dist.len()];
                for _ in 0..count {
                    counts[sampler.sample_index(&mut rng)] += 1;
                }
                Ok(counts)
            })
            .collect();
        let mut totals = vec![0u64; exact.len()];
        for counts in partial? {
            for (t, c) in totals.iter_mut().zip(counts) {
                *t += c;
            }
        }
        exact.set_counts(totals);
    }

    let flat_value = 1.0 / group.order() as f64;
    let bound = 4.0 / n as f64;
    let max_two = max_two_dim_probability(&exact);
    let real_max = max_two_dim_probability(&real);
    let max_flat_deviation = exact
        .iter()
        .filter(|(idx, _)| idx.label.dim() == 2)
        .map(|(_, p)| (p - flat_value).abs())
        .fold(0.0, f64::max);
    let counts = exact.counts().map(|c| c.to_vec()).unwrap_or_else(|| vec![0; exact.len()]);
    let outcomes: Vec<OutcomeRow> = exact
        .iter()
        .zip(real.probabilities())
        .zip(&counts)
        .map(|(((idx, p), &r), &count)| OutcomeRow {
            label: idx.label.to_string(),
            i: idx.row + 1,
            j: idx.col + 1,
            exact: p,
            real_basis: r,
            count,
        })
        .collect();
    let results = HspResults {
        a,
        samples: config.samples,
        total_probability: exact.total(),
        max_two_dim_probability: max_two,
        flat_value,
        flatness_bound: bound,
        flatness_ratio: max_two / bound,
        real_basis_max_two_dim_probability: real_max,
        real_basis_flatness_ratio: real_max / bound,
        max_flat_deviation,
        tv_distance: exact.empirical_tv_distance(),
        outcomes,
    };
    let checks = vec![
        Check::below("normalization_deviation", (results.total_probability - 1.0).abs(), 1e-10),
        Check::below("two_dim_flat_deviation", max_flat_deviation, EXACT_TOLERANCE),
        Check::at_most("max_two_dim_probability", max_two, bound + EXACT_TOLERANCE),
        Check::at_most("real_basis_max_two_dim_probability", real_max, bound + EXACT_TOLERANCE),
        Check::below("real_basis_normalization_deviation", (real.total() - 1.0).abs(), 1e-10),
    ];
    let table = Table {
        header: strings(["label", "i", "j", "exact", "real_basis", "count"]),
        rows: results
            .outcomes
            .iter()
            .map(|o| {
                vec![
                    o.label.clone(),
                    o.i.to_string(),
                    o.j.to_string(),
                    format_f64(o.exact),
                    format_f64(o.real_basis),
                    o.count.to_string(),
                ]
            })
            .collect(),
    };
    Ok((to_value(results), checks, table))
}

#[derive(Serialize)]
struct SweepPoint {
    m: usize,
    trials: usize,
    success_rate: f64,
}

#[derive(Serialize)]
struct EhResults {
    a: usize,
    m: usize,
    candidates: Vec<usize>,
    success: bool,
    degenerate: bool,
    best_log_likelihood: f64,
    margin_to_runner_up: f64,
    reflection_closed: bool,
    consistency_max_deviation: Option<f64>,
    sweep: Vec<SweepPoint>,
}

fn run_eh(config: &ExperimentConfig, group: DihedralGroup, a: usize) -> Result<CommandOutput> {
    let m = config.resolved_m();
    let dist = eh_distribution(a, group)?;
    let samples = eh_sample(a, group, m, config.seed)?;
    let estimate = recover_slope(&samples)?;
    let consistency = if group.n() <= 64 {
        Some(consistency_check(a, group)?)
    } else {
        None
    };
    let trials = if config.trials == 0 { 500 } else { config.trials };
    let sweep = config
        .sweep
        .iter()
        .map(|&m| {
            Ok(SweepPoint {
                m,
                trials,
                success_rate: success_rate(group, m, trials, config.seed)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let histogram = samples.histogram();
    let results = EhResults {
        a,
        m,
        success: estimate.contains(a),
        degenerate: estimate.degenerate,
        best_log_likelihood: estimate.best(),
        margin_to_runner_up: estimate.margin_to_runner_up(),
        reflection_closed: estimate.is_reflection_closed(),
        consistency_max_deviation: consistency.as_ref().map(|c| c.max_deviation),
        candidates: estimate.candidates.clone(),
        sweep,
    };
    let mut checks = vec![
        Check::below("normalization_deviation", (dist.total() - 1.0).abs(), EXACT_TOLERANCE),
        Check::flag("candidates_reflection_closed", results.reflection_closed),
    ];
    if let Some(c) = &consistency {
        checks.push(Check::below("consistency_max_deviation", c.max_deviation, 1e-10));
    }
    let table = Table {
        header: strings(["k", "b", "exact", "count"]),
        rows: dist
            .iter()
            .zip(&histogram)
            .map(|((o, p), c)| vec![o.k.to_string(), o.b.to_string(), format_f64(p), c.to_string()])
            .collect(),
    };
    Ok((to_value(results), checks, table))
}

#[derive(Serialize)]
struct RefuterSummary {
    candidate: String,
    min_fidelity: f64,
    worst_a: usize,
    worst_alpha: usize,
}

#[derive(Serialize)]
struct CloneResults {
    a: usize,
    fidelities: Vec<f64>,
    min_clone_fidelity: f64,
    copy_marginal_max_deviation: f64,
    pairs: usize,
    trials: usize,
    recovery_rate: f64,
    expected_recovery_rate: f64,
    witness: crate::cloning::WitnessReport,
    refuters: Vec<RefuterSummary>,
}

/// Fraction of trials in which `pairs` cloned-and-measured samples recover a.
pub fn clone_recovery_rate(group: DihedralGroup, a: usize, pairs: usize, trials: usize, seed: u64) -> Result<f64> {
    let n = group.n();
    let hits: Result<Vec<bool>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(seed, CLONE_PAIR_OFFSET, t);
            let measured = (0..pairs)
                .map(|_| {
                    let sample = DcpSample::new(group, a, rng.random_range(0..n))?;
                    Ok(measure_clone_pair(&clone_known_a(a, &sample)?, group, &mut rng))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(recover_a_from_clone_pairs(&measured, group) == Ok(a))
        })
        .collect();
    let hits = hits?;
    Ok(hits.iter().filter(|&&h| h).count() as f64 / trials.max(1) as f64)
}

fn run_clone(config: &ExperimentConfig, group: DihedralGroup, a: usize) -> Result<CommandOutput> {
    let n = group.n();
    let mut fidelities = Vec::with_capacity(n);
    let mut copy_dev: f64 = 0.0;
    for alpha in 0..n {
        let sample = DcpSample::new(group, a, alpha)?;
        let out = clone_known_a(a, &sample)?;
        fidelities.push(fidelity(&clone_target(a, sample.state(), group), &out));
        let single = sample.state().probabilities();
        let marginal = out.marginal(&[3, 4]);
        for (idx, p) in single.iter().enumerate() {
            let got = marginal.get(&vec![idx / n, idx % n]).copied().unwrap_or(0.0);
            copy_dev = copy_dev.max((got - p).abs());
        }
    }
    let min_clone_fidelity = fidelities.iter().copied().fold(1.0, f64::min);

    let trials = if config.trials == 0 { 10_000 } else { config.trials };
    let recovery_rate = clone_recovery_rate(group, a, config.pairs, trials, config.seed)?;
    let expected_recovery_rate = 1.0 - 0.5f64.powi(config.pairs as i32);

    let witness = no_cloning_witness(group, 0)?;
    let refuter_trials = config.samples.clamp(1, 1000);
    let candidates: Vec<Box<dyn CloningCandidate>> = vec![
        Box::new(fixed_slope_cloner(1, group)),
        Box::new(identity_cloner(n)),
        Box::new(basis_copy_cloner(n)),
    ];
    let refuters = candidates
        .iter()
        .map(|c| {
            let r = unitary_cloner_refuter(c.as_ref(), group, refuter_trials, config.seed)?;
            Ok(RefuterSummary {
                candidate: r.candidate,
                min_fidelity: r.min_fidelity,
                worst_a: r.worst_a,
                worst_alpha: r.worst_alpha,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut checks = vec![
        Check::below("clone_fidelity_deviation", (1.0 - min_clone_fidelity).abs(), EXACT_TOLERANCE),
        Check::below("copy_marginal_max_deviation", copy_dev, EXACT_TOLERANCE),
        Check::at_least("recovery_rate", recovery_rate, expected_recovery_rate - 0.02),
        Check::flag("witness_contradiction", witness.contradiction),
    ];
    for r in &refuters {
        checks.push(Check::below(&format!("refuter_min_fidelity[{}]", r.candidate), r.min_fidelity, 0.999));
    }
    let table = Table {
        header: strings(["alpha", "fidelity"]),
        rows: fidelities
            .iter()
            .enumerate()
            .map(|(alpha, f)| vec![alpha.to_string(), format_f64(*f)])
            .collect(),
    };
    let results = CloneResults {
        a,
        fidelities,
        min_clone_fidelity,
        copy_marginal_max_deviation: copy_dev,
        pairs: config.pairs,
        trials,
        recovery_rate,
        expected_recovery_rate,
        witness,
        refuters,
    };
    Ok((to_value(results), checks, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(64), 6);
        assert_eq!(ceil_log2(65), 7);
        let c = ExperimentConfig::new(Command::Eh, 64);
        assert_eq!(c.resolved_m(), 384);
    }

    #[test]
    fn floats_round_trip() {
        for v in [0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5e-17] {
            let s = format_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_f64(0.03125), "3.1250000000000000e-2");
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::new(Command::Irreps, 0).validate().is_err());
        assert!(ExperimentConfig::new(Command::Irreps, MAX_N + 1).validate().is_err());
        assert!(ExperimentConfig::new(Command::QftCheck, 600).validate().is_err());
        assert!(ExperimentConfig::new(Command::Clone, 2).validate().is_err());
        let mut c = ExperimentConfig::new(Command::Hsp, 4);
        c.a = Some(4);
        assert!(c.validate().is_err());
        let c = ExperimentConfig::new(Command::Hsp, 9);
        assert!(c.resolved_slope() < 9);
        assert_eq!(c.resolved_slope(), c.resolved_slope());
    }
}
