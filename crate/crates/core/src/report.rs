//! Per-algebra checks, anomaly records and deterministic rendering of the
//! results in table or line-oriented form.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::catalog::serialize;
use crate::lie::{direct_sum, LieAlgebra};
use crate::theorems::{
    batten_gap, central_lines, check_batten_bound, check_corollary_sr_central, check_main_bound,
    classify_equality_case, classify_small_t, decompose_derived_dim_one, invariants_report, verify_kunneth,
    BoundName, BoundVerdict, EqualityCase, InvariantsReport, SmallT,
};

/// Factor pairs for the Künneth check are limited to this total dimension.
pub const KUNNETH_MAX_DIM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Main,
    Batten,
    Kunneth,
    Sr,
    TClassify,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Main, Check::Batten, Check::Kunneth, Check::Sr, Check::TClassify];

    pub fn label(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Batten => "batten",
            Check::Kunneth => "kunneth",
            Check::Sr => "sr",
            Check::TClassify => "t-classify",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| format!("unknown check `{s}` (expected one of main, batten, kunneth, sr, t-classify)"))
    }
}

/// Comma-separated check list, deduplicated and sorted.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, String> {
    let mut checks = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(Check::from_str)
        .collect::<Result<Vec<_>, _>>()?;
    if checks.is_empty() {
        return Err("no checks given".into());
    }
    checks.sort();
    checks.dedup();
    Ok(checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Lines,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "lines" => Ok(OutputFormat::Lines),
            _ => Err(format!("unknown format `{s}` (expected table or lines)")),
        }
    }
}

/// A failed check together with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anomaly {
    pub subject: String,
    pub check: Check,
    pub detail: String,
    pub report: Option<InvariantsReport>,
    /// The offending algebra in the text format.
    pub algebra: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub key: String,
    pub report: InvariantsReport,
    pub verdicts: Vec<BoundVerdict>,
    pub label: Option<SmallT>,
    pub equality_case: Option<EqualityCase>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub a: String,
    pub b: String,
    pub verdict: BoundVerdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportDocument {
    pub entries: Vec<EntryReport>,
    pub pairs: Vec<PairVerdict>,
    pub anomalies: Vec<Anomaly>,
}

/// Runs the per-algebra checks (everything except `kunneth`).
pub fn check_entry(key: &str, l: &LieAlgebra, checks: &[Check]) -> (EntryReport, Vec<Anomaly>) {
    let report = invariants_report(l).clone();
    let mut entry = EntryReport {
        key: key.to_string(),
        report: report.clone(),
        verdicts: Vec::new(),
        label: None,
        equality_case: None,
    };
    let mut anomalies = Vec::new();
    let mut flag = |check: Check, detail: String| {
        anomalies.push(Anomaly {
            subject: key.to_string(),
            check,
            detail,
            report: Some(report.clone()),
            algebra: serialize(l),
        })
    };
    if !report.nilpotent {
        return (entry, anomalies);
    }
    let violated = |v: &BoundVerdict| format!("{} violated: {} > {}", v.bound.description(), v.lhs, v.rhs);

    if checks.contains(&Check::Main) && report.m >= 1 {
        match check_main_bound(l) {
            Ok(v) => {
                if !v.holds {
                    flag(Check::Main, violated(&v));
                }
                entry.verdicts.push(v);
            }
            Err(e) => flag(Check::Main, e.to_string()),
        }
        if report.m == 1 {
            match classify_equality_case(l) {
                Ok(c) => entry.equality_case = Some(c),
                Err(e) => flag(Check::Main, e.to_string()),
            }
        }
        let gap = batten_gap(report.n, report.m).expect("m >= 1");
        let gap_ok = if report.m == 1 { gap == report.n as i64 - 3 } else { gap > 0 };
        if !gap_ok {
            flag(Check::Main, format!("main bound does not improve the batten bound (gap {gap})"));
        }
    }
    if checks.contains(&Check::Batten) {
        match check_batten_bound(l) {
            Ok(v) => {
                if !v.holds {
                    flag(Check::Batten, violated(&v));
                }
                entry.verdicts.push(v);
            }
            Err(e) => flag(Check::Batten, e.to_string()),
        }
    }
    if checks.contains(&Check::Sr) {
        for k in central_lines(l) {
            match check_corollary_sr_central(l, &k) {
                Ok(v) => {
                    if !v.holds {
                        let line: Vec<String> = k.basis()[0].iter().map(|x| x.to_string()).collect();
                        flag(Check::Sr, format!("{} for K = <({})>", violated(&v), line.join(", ")));
                    }
                    entry.verdicts.push(v);
                }
                Err(e) => flag(Check::Sr, e.to_string()),
            }
        }
    }
    if checks.contains(&Check::TClassify) {
        match classify_small_t(l) {
            Ok(label) => {
                entry.label = label;
                match structural_label(l, &report) {
                    Ok(expected) if expected != label => flag(
                        Check::TClassify,
                        format!(
                            "structure says {} but t = {}",
                            expected.map_or("none".to_string(), |s| s.to_string()),
                            report.t
                        ),
                    ),
                    Ok(_) => {}
                    Err(e) => flag(Check::TClassify, e),
                }
            }
            Err(e) => flag(Check::TClassify, e.to_string()),
        }
    }
    (entry, anomalies)
}

/// The label `t` should produce, read off the structure alone.
fn structural_label(l: &LieAlgebra, report: &InvariantsReport) -> Result<Option<SmallT>, String> {
    match report.m {
        0 => Ok(Some(SmallT::Abelian)),
        1 => {
            let d = decompose_derived_dim_one(l).map_err(|e| e.to_string())?;
            Ok(match (d.heisenberg_rank, d.abelian_dim) {
                (1, 0) => Some(SmallT::H1),
                (1, 1) => Some(SmallT::H1PlusLine),
                _ => None,
            })
        }
        _ => Ok(None),
    }
}

/// Index pairs `(i, j)` with `key_i <= key_j` whose total dimension is at
/// most `max_dim`, in key order.
pub fn kunneth_pairs(items: &[(&str, &LieAlgebra)], max_dim: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&x, &y| items[x].0.cmp(items[y].0));
    let mut out = Vec::new();
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a..] {
            if items[i].1.dim() + items[j].1.dim() <= max_dim {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn check_pair(a_key: &str, a: &LieAlgebra, b_key: &str, b: &LieAlgebra) -> (Option<PairVerdict>, Option<Anomaly>) {
    let subject = format!("{a_key} (+) {b_key}");
    let algebra = || direct_sum(a, b).map(|s| serialize(&s)).unwrap_or_default();
    match verify_kunneth(a, b) {
        Ok(v) => {
            let anomaly = (!v.holds).then(|| Anomaly {
                subject: subject.clone(),
                check: Check::Kunneth,
                detail: format!("kunneth formula fails: {} != {}", v.lhs, v.rhs),
                report: None,
                algebra: algebra(),
            });
            let pair = PairVerdict {
                a: a_key.to_string(),
                b: b_key.to_string(),
                verdict: v,
            };
            (Some(pair), anomaly)
        }
        Err(e) => (
            None,
            Some(Anomaly {
                subject,
                check: Check::Kunneth,
                detail: e.to_string(),
                report: None,
                algebra: algebra(),
            }),
        ),
    }
}

/// Sequential sweep over keyed algebras.
pub fn sweep(items: &[(String, LieAlgebra)], checks: &[Check]) -> ReportDocument {
    let mut doc = ReportDocument::default();
    for (key, l) in items {
        let (entry, anomalies) = check_entry(key, l, checks);
        doc.entries.push(entry);
        doc.anomalies.extend(anomalies);
    }
    if checks.contains(&Check::Kunneth) {
        let keyed: Vec<(&str, &LieAlgebra)> = items.iter().map(|(k, l)| (k.as_str(), l)).collect();
        for (i, j) in kunneth_pairs(&keyed, KUNNETH_MAX_DIM) {
            let (pair, anomaly) = check_pair(&items[i].0, &items[i].1, &items[j].0, &items[j].1);
            doc.pairs.extend(pair);
            doc.anomalies.extend(anomaly);
        }
    }
    doc.sort();
    doc
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn verdict_text(v: &BoundVerdict) -> String {
    let relation = if v.bound == BoundName::Kunneth { "=" } else { "<=" };
    let status = match (v.holds, v.equality) {
        (false, _) => "VIOLATED",
        (true, true) => "equality",
        (true, false) => "strict",
    };
    format!("{} {relation} {}  slack {}  {status}", v.lhs, v.rhs, v.slack())
}

fn one_line(algebra: &str) -> String {
    algebra.lines().collect::<Vec<_>>().join(";")
}

impl ReportDocument {
    /// Entries by key, pairs by keys, anomalies by subject then check.
    pub fn sort(&mut self) {
        self.entries.sort_by(|x, y| x.key.cmp(&y.key));
        self.pairs.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
        self.anomalies
            .sort_by(|x, y| (&x.subject, x.check, &x.detail).cmp(&(&y.subject, y.check, &y.detail)));
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Lines => self.render_lines(),
        }
    }

    /// Detailed block for a single entry.
    pub fn render_entry(entry: &EntryReport) -> String {
        let r = &entry.report;
        let mut s = String::new();
        let mut row = |name: &str, value: String| {
            let _ = writeln!(s, "{name:<16}{value}");
        };
        row("algebra", entry.key.clone());
        row("field", r.field.to_string());
        row("n", r.n.to_string());
        row("m", r.m.to_string());
        row("dim Z", r.dim_center.to_string());
        row("dim L^2 cap Z", r.dim_derived_cap_center.to_string());
        row("nilpotent", r.nilpotent.to_string());
        row("class", opt(r.nilpotency_class));
        row("dim M", r.dim_multiplier.to_string());
        row("t", r.t.to_string());
        if !r.nilpotent {
            row("bounds", "not applicable (not nilpotent)".into());
        } else if r.m == 0 {
            row("main bound", "not applicable (m = 0)".into());
        }
        for v in &entry.verdicts {
            row(v.bound.description(), verdict_text(v));
        }
        if let Some(c) = &entry.equality_case {
            row("structure", format!("H({}) + A({})", c.heisenberg_rank, c.abelian_dim));
        }
        if let Some(label) = entry.label {
            row("t-class", label.to_string());
        }
        let mut equal: Vec<&str> = entry
            .verdicts
            .iter()
            .filter(|v| v.equality && v.bound != BoundName::Kunneth)
            .map(|v| v.bound.description())
            .collect();
        equal.dedup();
        if !equal.is_empty() {
            let _ = writeln!(s, "equality: {}", equal.join(", "));
        }
        s
    }

    fn render_table(&self) -> String {
        let mut s = String::new();
        if self.entries.len() == 1 && self.pairs.is_empty() {
            s.push_str(&Self::render_entry(&self.entries[0]));
        } else if !self.entries.is_empty() {
            let width = self.entries.iter().map(|e| e.key.len()).max().unwrap_or(0).max(3);
            let _ = writeln!(
                s,
                "{:<width$}  {:>3} {:>3} {:>5} {:>5} {:>6} {:>5}  {:<8} {:<8} {:<7} {}",
                "key", "n", "m", "dim Z", "class", "dim M", "t", "main", "batten", "sr", "t-class"
            );
            for e in &self.entries {
                let r = &e.report;
                let status = |bound: BoundName| {
                    let vs: Vec<&BoundVerdict> = e.verdicts.iter().filter(|v| v.bound == bound).collect();
                    if vs.is_empty() {
                        "-".to_string()
                    } else if vs.iter().any(|v| !v.holds) {
                        "FAIL".to_string()
                    } else if vs.iter().any(|v| v.equality) {
                        "eq".to_string()
                    } else {
                        "ok".to_string()
                    }
                };
                let _ = writeln!(
                    s,
                    "{:<width$}  {:>3} {:>3} {:>5} {:>5} {:>6} {:>5}  {:<8} {:<8} {:<7} {}",
                    e.key,
                    r.n,
                    r.m,
                    r.dim_center,
                    opt(r.nilpotency_class),
                    r.dim_multiplier,
                    r.t,
                    status(BoundName::MainTheorem),
                    status(BoundName::BattenProposition),
                    status(BoundName::CorollarySR),
                    opt(e.label)
                );
            }
        }
        if !self.pairs.is_empty() {
            let failed = self.pairs.iter().filter(|p| !p.verdict.holds).count();
            let _ = writeln!(s, "kunneth pairs: {} checked, {} failed", self.pairs.len(), failed);
        }
        for a in &self.anomalies {
            let _ = writeln!(s, "ANOMALY [{}] {}: {}", a.check.label(), a.subject, a.detail);
            for line in a.algebra.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
        let _ = writeln!(s, "anomalies: {}", self.anomalies.len());
        s
    }

    fn render_lines(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let r = &e.report;
            let _ = writeln!(
                s,
                "entry key={} field={} n={} m={} dim_z={} dim_cap={} nilpotent={} class={} dim_m={} t={} main_bound={} label={}",
                e.key,
                r.field,
                r.n,
                r.m,
                r.dim_center,
                r.dim_derived_cap_center,
                r.nilpotent,
                opt(r.nilpotency_class),
                r.dim_multiplier,
                r.t,
                opt(r.main_bound),
                opt(e.label)
            );
            for v in &e.verdicts {
                let _ = writeln!(
                    s,
                    "verdict key={} bound={} lhs={} rhs={} holds={} equality={}",
                    e.key, v.bound, v.lhs, v.rhs, v.holds, v.equality
                );
            }
        }
        for p in &self.pairs {
            let v = &p.verdict;
            let _ = writeln!(
                s,
                "pair a={} b={} bound={} lhs={} rhs={} holds={}",
                p.a, p.b, v.bound, v.lhs, v.rhs, v.holds
            );
        }
        for a in &self.anomalies {
            let _ = writeln!(
                s,
                "anomaly subject={} check={} detail={:?} algebra={:?}",
                a.subject,
                a.check.label(),
                a.detail,
                one_line(&a.algebra)
            );
        }
        let _ = writeln!(
            s,
            "summary entries={} pairs={} anomalies={}",
            self.entries.len(),
            self.pairs.len(),
            self.anomalies.len()
        );
        s
    }
}
