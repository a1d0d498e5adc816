use std::time::Instant;

use anyhow::{bail, Context, Result};
use grundy_core::color_coding::{weak_grundy_color_coding, ColorCodingOutcome};
use grundy_core::connected::{
    connected_grundy_at_least_k, connected_grundy_number, verify_connected_certificate, ConnectedGrundy,
    ConnectedOutcome, DEFAULT_BUDGET,
};
use grundy_core::exact::{grundy_number_dp_with, weak_grundy_number_dp_with, DpConfig, DP_CAP};
use grundy_core::witness::{local_grundy_at_least_k, xp_grundy_at_least_k, Witness};
use grundy_core::{first_fit, validate_partition, Graph, Variant};

use crate::report::{assignment_certificate, ordering_certificate, Answer, CertificateFailure, SolveReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Grundy,
    Weak,
    Connected,
    Xp,
    Local,
    ColorCoding,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub k: Option<usize>,
    pub epsilon: f64,
    pub seed: u64,
    pub budget: u64,
    /// Include the certificate in the report.
    pub certificate: bool,
    pub dp_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { k: None, epsilon: 0.01, seed: 0, budget: DEFAULT_BUDGET, certificate: false, dp_cap: DP_CAP }
    }
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(CertificateFailure(what.to_string()).into())
    }
}

fn witness_checked(g: &Graph, w: &Witness) -> Result<()> {
    check(w.validate(g)?, "witness coloring")
}

fn require_k(opts: &SolveOptions, alg: &str) -> Result<usize> {
    match opts.k {
        Some(0) => bail!("--k must be at least 1"),
        Some(k) => Ok(k),
        None => bail!("{alg} needs --k"),
    }
}

pub fn solve(g: &Graph, alg: Algorithm, opts: &SolveOptions) -> Result<SolveReport> {
    let start = Instant::now();
    let mut report = SolveReport {
        problem: String::new(),
        n: g.n(),
        m: g.m(),
        algorithm: String::new(),
        k: None,
        answer: Answer::Exact,
        value: None,
        certificate: None,
        seed: None,
        elapsed_ms: 0.0,
    };
    let config = DpConfig { cap: opts.dp_cap };
    if opts.dp_cap > DP_CAP && matches!(alg, Algorithm::Grundy | Algorithm::Weak) {
        eprintln!(
            "warning: DP cap raised to {}; the table for this graph takes {} bytes",
            opts.dp_cap,
            DpConfig::table_bytes(g.n())
        );
    }

    match alg {
        Algorithm::Grundy => {
            report.problem = "grundy".into();
            report.algorithm = "subset_dp".into();
            let (value, sigma) = grundy_number_dp_with(g, config).context("grundy DP")?;
            sigma.check(g.n())?;
            check(first_fit(g, &sigma)?.max_color() as usize == value, "first-fit along the ordering")?;
            report.value = Some(value);
            report.certificate = Some(ordering_certificate(&sigma));
        }
        Algorithm::Weak => {
            report.problem = "weak".into();
            report.algorithm = "subset_dp".into();
            let (value, phi) = weak_grundy_number_dp_with(g, config).context("weak grundy DP")?;
            check(
                validate_partition(g, &phi, Variant::Weak)? && phi.max_color() as usize == value,
                "weak coloring",
            )?;
            report.value = Some(value);
            report.certificate = Some(assignment_certificate(&phi));
        }
        Algorithm::Connected => {
            report.problem = "connected".into();
            report.algorithm = "branch_and_bound".into();
            match opts.k {
                Some(k) => {
                    report.k = Some(k);
                    match connected_grundy_at_least_k(g, k, opts.budget)? {
                        ConnectedOutcome::Yes { ordering, .. } => {
                            check(verify_connected_certificate(g, &ordering, k)?, "connected ordering")?;
                            report.answer = Answer::Yes;
                            report.certificate = Some(ordering_certificate(&ordering));
                        }
                        ConnectedOutcome::No => report.answer = Answer::No,
                        ConnectedOutcome::BudgetExceeded => report.answer = Answer::BudgetExceeded,
                    }
                }
                None => {
                    let (value, ordering, answer) = match connected_grundy_number(g, opts.budget)? {
                        ConnectedGrundy::Exact { value, ordering } => (value, ordering, Answer::Exact),
                        ConnectedGrundy::BudgetExceeded { lower, ordering } => {
                            (lower, ordering, Answer::BudgetExceeded)
                        }
                    };
                    check(verify_connected_certificate(g, &ordering, value)?, "connected ordering")?;
                    check(first_fit(g, &ordering)?.max_color() as usize == value, "connected ordering value")?;
                    report.answer = answer;
                    report.value = Some(value);
                    report.certificate = Some(ordering_certificate(&ordering));
                }
            }
        }
        Algorithm::Xp | Algorithm::Local => {
            let k = require_k(opts, "this algorithm")?;
            report.problem = "grundy".into();
            report.k = Some(k);
            let found = if alg == Algorithm::Xp {
                report.algorithm = "xp_witness".into();
                xp_grundy_at_least_k(g, k)?
            } else {
                report.algorithm = "local_ball".into();
                local_grundy_at_least_k(g, k)?
            };
            match found {
                Some(w) => {
                    witness_checked(g, &w)?;
                    report.answer = Answer::Yes;
                    report.certificate = Some(assignment_certificate(&w.assignment));
                }
                None => report.answer = Answer::No,
            }
        }
        Algorithm::ColorCoding => {
            let k = require_k(opts, "colorcoding")?;
            report.problem = "weak".into();
            report.algorithm = "color_coding".into();
            report.k = Some(k);
            report.seed = Some(opts.seed);
            let run = weak_grundy_color_coding(g, k, opts.epsilon, opts.seed)?;
            if run.capped {
                eprintln!(
                    "warning: {:.3e} trials needed for epsilon = {}, capped at {}; the error bound does not hold",
                    run.theoretical_trials, opts.epsilon, run.planned_trials
                );
            }
            match &run.outcome {
                ColorCodingOutcome::Yes(w) => {
                    witness_checked(g, w)?;
                    report.answer = Answer::Yes;
                    report.certificate = Some(assignment_certificate(&w.assignment));
                }
                ColorCodingOutcome::ProbablyNo => report.answer = Answer::ProbablyNo,
            }
        }
    }
    if !opts.certificate {
        report.certificate = None;
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
