use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use grundy_core::chromatic::chromatic_number;
use grundy_core::connected::{connected_grundy_number, ConnectedGrundy, DEFAULT_BUDGET};
use grundy_core::dimacs::read_dimacs_graph;
use grundy_core::exact::{grundy_number_dp, weak_grundy_number_dp, DpConfig};
use grundy_core::witness::{binomial_tree, sparse_upper_bound};
use grundy_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Gnp { n: usize, p: f64, seed: u64 },
    Tree { n: usize, seed: u64 },
    Binomial { k: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// DIMACS file, relative to the manifest.
    File { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    #[serde(flatten)]
    pub source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchAlgorithm {
    Grundy,
    Weak,
    Connected,
    Chromatic,
    SparseBound,
}

impl BenchAlgorithm {
    fn name(self) -> &'static str {
        match self {
            BenchAlgorithm::Grundy => "grundy",
            BenchAlgorithm::Weak => "weak",
            BenchAlgorithm::Connected => "connected",
            BenchAlgorithm::Chromatic => "chromatic",
            BenchAlgorithm::SparseBound => "sparse_bound",
        }
    }
}

fn default_repeats() -> usize {
    3
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    /// Node budget of the connected search.
    #[serde(default = "default_budget")]
    pub budget: u64,
    pub instances: Vec<Instance>,
    pub algorithms: Vec<BenchAlgorithm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    pub value: String,
    /// Median over the repeats.
    pub elapsed_ms: f64,
    pub peak_table_bytes: u64,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let m: Manifest = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if m.repeats == 0 {
            bail!("repeats must be at least 1");
        }
        Ok(m)
    }
}

pub fn build_instance(source: &Source, base: &Path) -> Result<Graph> {
    Ok(match source {
        Source::Gnp { n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                bail!("edge probability {p} is outside [0, 1]");
            }
            Graph::random_gnp(*n, *p, &mut ChaCha8Rng::seed_from_u64(*seed))
        }
        Source::Tree { n, seed } => Graph::random_tree(*n, &mut ChaCha8Rng::seed_from_u64(*seed)),
        Source::Binomial { k } => binomial_tree(*k)?.1,
        Source::Cycle { n } => Graph::cycle(*n),
        Source::Path { n } => Graph::path(*n),
        Source::Complete { n } => Graph::complete(*n),
        Source::File { path } => {
            let full = base.join(path);
            let text = std::fs::read_to_string(&full).with_context(|| format!("reading {}", full.display()))?;
            read_dimacs_graph(&text).with_context(|| format!("parsing {}", full.display()))?
        }
    })
}

fn run_once(g: &Graph, alg: BenchAlgorithm, budget: u64) -> Result<(String, u64)> {
    let table = DpConfig::table_bytes(g.n());
    Ok(match alg {
        BenchAlgorithm::Grundy => (grundy_number_dp(g)?.0.to_string(), table),
        BenchAlgorithm::Weak => (weak_grundy_number_dp(g)?.0.to_string(), table),
        BenchAlgorithm::Connected => match connected_grundy_number(g, budget)? {
            ConnectedGrundy::Exact { value, .. } => (value.to_string(), 0),
            ConnectedGrundy::BudgetExceeded { lower, .. } => (format!(">={lower}"), 0),
        },
        BenchAlgorithm::Chromatic => (chromatic_number(g)?.to_string(), 0),
        BenchAlgorithm::SparseBound => (sparse_upper_bound(g)?.to_string(), 0),
    })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Runs every instance against every algorithm. Failures are reported in the
/// value column rather than aborting the run; unreadable instances abort.
pub fn run(manifest: &Manifest, base: &Path) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for inst in &manifest.instances {
        let g = build_instance(&inst.source, base).with_context(|| format!("instance {}", inst.name))?;
        for &alg in &manifest.algorithms {
            let mut times = Vec::with_capacity(manifest.repeats);
            let mut value: Option<String> = None;
            let mut bytes = 0;
            for _ in 0..manifest.repeats {
                let start = Instant::now();
                let (v, b) = match run_once(&g, alg, manifest.budget) {
                    Ok(r) => r,
                    Err(e) => (format!("error: {e}"), 0),
                };
                times.push(start.elapsed().as_secs_f64() * 1e3);
                match &value {
                    Some(prev) if *prev != v => bail!("{} on {} gave {prev} then {v}", alg.name(), inst.name),
                    _ => value = Some(v),
                }
                bytes = b;
            }
            rows.push(BenchRow {
                instance: inst.name.clone(),
                algorithm: alg.name().to_string(),
                value: value.unwrap_or_default(),
                elapsed_ms: median(times),
                peak_table_bytes: bytes,
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn manifest_parses() {
        let m: Manifest = serde_json::from_str(
            r#"{"instances": [{"name": "t3", "kind": "binomial", "k": 3},
                              {"name": "g", "kind": "gnp", "n": 6, "p": 0.5, "seed": 2}],
                "algorithms": ["grundy", "sparse_bound"]}"#,
        )
        .unwrap();
        assert_eq!(m.repeats, 3);
        let rows = run(&m, Path::new(".")).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].value, "3");
        assert_eq!(rows[0].peak_table_bytes, 16);
    }
}
