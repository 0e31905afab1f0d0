//! A named catalog of executable checks, one per identity of the theory the
//! `yangian` crate implements, plus a runner that produces deterministic
//! machine-readable reports.

use std::time::Instant;

use serde::Serialize;
use yangian::{Composition, SignSequence};

mod checks;

/// Parameters a check accepts; unset fields fall back to the check's own
/// default grid.
#[derive(Clone, Debug)]
pub struct CheckParams {
    pub seq: Option<SignSequence>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub mu: Option<Composition>,
    pub order: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            seq: None,
            m: None,
            n: None,
            mu: None,
            order: None,
            seed: 2026,
            samples: None,
        }
    }
}

impl CheckParams {
    pub fn order_or(&self, d: usize) -> usize {
        self.order.unwrap_or(d)
    }

    pub fn samples_or(&self, k: usize) -> usize {
        self.samples.unwrap_or(k)
    }

    /// The sequence grid: an explicit --seq wins, then 0^M 1^N from --M/--N,
    /// otherwise every 01-sequence of length 1..=max_len.
    pub fn sequences(&self, max_len: usize) -> Vec<SignSequence> {
        if let Some(seq) = &self.seq {
            return vec![seq.clone()];
        }
        if self.m.is_some() || self.n.is_some() {
            return vec![SignSequence::standard(
                self.m.unwrap_or(0),
                self.n.unwrap_or(0),
            )];
        }
        (1..=max_len).flat_map(SignSequence::enumerate).collect()
    }

    /// Composition grid for a given total: --mu wins, otherwise all of them.
    pub fn compositions(&self, total: usize) -> Vec<Composition> {
        match &self.mu {
            Some(mu) if mu.total() == total => vec![mu.clone()],
            Some(_) => Vec::new(),
            None => Composition::all(total),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        if let Some(seq) = &self.seq {
            map.insert("seq".into(), seq.to_string().into());
        }
        if let Some(m) = self.m {
            map.insert("M".into(), m.into());
        }
        if let Some(n) = self.n {
            map.insert("N".into(), n.into());
        }
        if let Some(mu) = &self.mu {
            map.insert("mu".into(), mu.to_string().into());
        }
        if let Some(order) = self.order {
            map.insert("order".into(), order.into());
        }
        map.insert("seed".into(), self.seed.into());
        if let Some(samples) = self.samples {
            map.insert("samples".into(), samples.into());
        }
        serde_json::Value::Object(map)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Result of executing one check.
#[derive(Clone, Debug)]
pub enum Outcome {
    Pass,
    Fail(String),
    Error(String),
}

/// One catalog entry: a name, the identity it asserts, its default grid, and
/// the executable body.
pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    pub grid: &'static str,
    pub run: fn(&CheckParams) -> Outcome,
}

/// One line of the JSON report stream.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub params: serde_json::Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

impl Report {
    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The stable catalog, in documentation order.
pub fn catalog() -> &'static [Check] {
    checks::CATALOG
}

/// Render the golden fixture bodies at order 3 (qsdet text, blocks text).
/// Exposed for the fixture regeneration test.
pub fn render_fixtures() -> Result<(String, String), String> {
    Ok((
        checks::render_qsdet_fixture(3)?,
        checks::render_blocks_fixture(3)?,
    ))
}

pub fn find_check(name: &str) -> Option<&'static Check> {
    catalog().iter().find(|c| c.name == name)
}

/// Execute one check by name with the given parameters. Unknown names and
/// invalid parameters come back as status = error, never as a crash.
pub fn run_check(name: &str, params: &CheckParams) -> Report {
    let started = Instant::now();
    let (status, witness) = match find_check(name) {
        None => (Status::Error, Some(format!("unknown check: {name}"))),
        Some(check) => match (check.run)(params) {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Fail(w) => (Status::Fail, Some(w)),
            Outcome::Error(msg) => (Status::Error, Some(msg)),
        },
    };
    Report {
        check: name.to_string(),
        params: params.to_json(),
        status,
        witness,
        millis: started.elapsed().as_millis(),
    }
}

/// Simple '*' wildcard match.
pub fn glob_match(pattern: &str, name: &str) -> bool {
    fn rec(p: &[u8], n: &[u8]) -> bool {
        match p.first() {
            None => n.is_empty(),
            Some(b'*') => (0..=n.len()).any(|k| rec(&p[1..], &n[k..])),
            Some(&c) => n.first() == Some(&c) && rec(&p[1..], &n[1..]),
        }
    }
    rec(pattern.as_bytes(), name.as_bytes())
}

fn suite_threads() -> usize {
    std::env::var("YANGIAN_VERIFY_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// Run every catalog check whose name matches the pattern, in catalog order.
/// Reports are collected in catalog order regardless of scheduling; the
/// YANGIAN_VERIFY_THREADS environment variable controls parallelism.
pub fn run_suite(pattern: &str, params: &CheckParams) -> Vec<Report> {
    let names: Vec<&'static str> = catalog()
        .iter()
        .filter(|c| glob_match(pattern, c.name))
        .map(|c| c.name)
        .collect();
    let threads = suite_threads().min(names.len().max(1));
    if threads <= 1 {
        return names.iter().map(|n| run_check(n, params)).collect();
    }
    let mut slots: Vec<Option<Report>> = Vec::new();
    slots.resize_with(names.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots_mutex: Vec<std::sync::Mutex<&mut Option<Report>>> =
        slots.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= names.len() {
                    break;
                }
                let report = run_check(names[idx], params);
                **slots_mutex[idx].lock().unwrap() = Some(report);
            });
        }
    });
    drop(slots_mutex);
    slots
        .into_iter()
        .map(|r| r.expect("all slots filled"))
        .collect()
}
