//! Isomorph-free generation of all 2-trees up to [`ENUMERATION_CAP`]
//! vertices, the per-Δ census of strong central 2-trees with tail degrees in
//! {2,3}, and an audit of the structural theorems against that census.
//!
//! Generation extends every class representative on `n − 1` vertices by
//! stacking on each of its edges, canonicalizes, and deduplicates by
//! certificate. Parents are extended in parallel; the merge is a set union
//! keyed by certificate, so output does not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructors;
use crate::degseq::{delta_range, divisibility_check, tail_params, CoreSize, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, classify_central, is_isomorphic, CanonicalForm};

/// Largest order the enumerator accepts.
pub const ENUMERATION_CAP: usize = 13;

/// Records keep full witness graphs up to this order unless forced.
pub const RETAIN_GRAPHS_UP_TO: usize = 10;

/// Order in which a parent's edges are tried when extending it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionOrder {
    #[default]
    Forward,
    Reverse,
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapacityExceeded {
            what: "enumeration order",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

fn extend(parents: &[CanonicalForm], order: ExtensionOrder) -> Vec<CanonicalForm> {
    parents
        .par_iter()
        .fold(BTreeSet::new, |mut acc, cert| {
            let g = cert.to_graph();
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            if order == ExtensionOrder::Reverse {
                edges.reverse();
            }
            for (u, v) in edges {
                let (child, _) = g.stack(u, v).expect("stacking on an existing edge");
                acc.insert(canonical_form(&child));
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
        .into_iter()
        .collect()
}

/// One certificate per isomorphism class of 2-trees on `n` vertices, sorted.
pub fn enumerate_two_trees(n: usize) -> Result<Vec<CanonicalForm>> {
    enumerate_two_trees_with(n, ExtensionOrder::Forward)
}

pub fn enumerate_two_trees_with(n: usize, order: ExtensionOrder) -> Result<Vec<CanonicalForm>> {
    let mut census = Census::new(order);
    census.extend_to(n)?;
    Ok(census.classes(n).to_vec())
}

/// Incrementally grown list of 2-tree classes per order.
#[derive(Debug, Clone)]
pub struct Census {
    order: ExtensionOrder,
    levels: Vec<Vec<CanonicalForm>>,
}

impl Default for Census {
    fn default() -> Self {
        Census::new(ExtensionOrder::Forward)
    }
}

impl Census {
    pub fn new(order: ExtensionOrder) -> Self {
        // index = order; 0 and 1 are empty, 2 is K₂
        Census {
            order,
            levels: vec![
                Vec::new(),
                Vec::new(),
                vec![canonical_form(&Graph::new_edge())],
            ],
        }
    }

    pub fn up_to(n_max: usize) -> Result<Self> {
        let mut c = Census::default();
        c.extend_to(n_max)?;
        Ok(c)
    }

    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        check_cap(n)?;
        while self.levels.len() <= n {
            let next = extend(self.levels.last().unwrap(), self.order);
            self.levels.push(next);
        }
        Ok(())
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    /// Classes on `n` vertices. Panics if the census has not reached `n`.
    pub fn classes(&self, n: usize) -> &[CanonicalForm] {
        &self.levels[n]
    }

    pub fn central(&self, n: usize, r: CoreSize) -> Vec<EnumerationRecord> {
        central_records(n, r, self.classes(n), n <= RETAIN_GRAPHS_UP_TO)
    }
}

/// Strong `r`-central 2-trees with tail degrees in {2,3} sharing one
/// `(n, Δ)`, counted up to isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct EnumerationRecord {
    pub n: usize,
    pub r: CoreSize,
    pub delta: usize,
    pub degree_sequence: DegreeSequence,
    pub x: usize,
    pub y: usize,
    pub count: usize,
    pub witnesses: Vec<CanonicalForm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graphs: Option<Vec<Graph>>,
}

impl EnumerationRecord {
    pub fn witness_graphs(&self) -> Vec<Graph> {
        match &self.graphs {
            Some(g) => g.clone(),
            None => self.witnesses.iter().map(CanonicalForm::to_graph).collect(),
        }
    }
}

/// Filters `classes` (all on `n` vertices) to the strong `r`-central ones
/// and groups them by Δ, ascending.
pub fn central_records(
    n: usize,
    r: CoreSize,
    classes: &[CanonicalForm],
    retain_graphs: bool,
) -> Vec<EnumerationRecord> {
    let mut by_delta: BTreeMap<usize, EnumerationRecord> = BTreeMap::new();
    for cert in classes {
        let g = cert.to_graph();
        let Ok(c) = classify_central(&g) else {
            continue;
        };
        if c.r != r || !c.strong {
            continue;
        }
        let rec = by_delta
            .entry(c.delta)
            .or_insert_with(|| EnumerationRecord {
                n,
                r,
                delta: c.delta,
                degree_sequence: g.degree_sequence(),
                x: c.x,
                y: c.y,
                count: 0,
                witnesses: Vec::new(),
                graphs: retain_graphs.then(Vec::new),
            });
        debug_assert_eq!((rec.x, rec.y), (c.x, c.y));
        rec.count += 1;
        rec.witnesses.push(cert.clone());
        if let Some(gs) = &mut rec.graphs {
            gs.push(g);
        }
    }
    by_delta.into_values().collect()
}

pub fn enumerate_central(n: usize, r: CoreSize) -> Result<Vec<EnumerationRecord>> {
    let census = Census::up_to(n)?;
    Ok(census.central(n, r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub delta: usize,
    pub degree_sequence: DegreeSequence,
    pub x: usize,
    pub y: usize,
    pub count: usize,
}

/// Census table for one core size over a range of orders; only `(n, Δ)`
/// pairs with at least one realization appear.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub r: CoreSize,
    pub records: Vec<EnumerationRecord>,
}

impl Table {
    pub fn rows(&self) -> Vec<TableRow> {
        self.records
            .iter()
            .map(|rec| TableRow {
                n: rec.n,
                delta: rec.delta,
                degree_sequence: rec.degree_sequence.clone(),
                x: rec.x,
                y: rec.y,
                count: rec.count,
            })
            .collect()
    }

    /// `n,delta,degree_sequence,x,y,count` with the sequence quoted and
    /// space separated; header always present, `\n` line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,delta,degree_sequence,x,y,count\n");
        for row in self.rows() {
            writeln!(
                out,
                "{},{},\"{}\",{},{},{}",
                row.n,
                row.delta,
                row.degree_sequence.spaced(),
                row.x,
                row.y,
                row.count
            )
            .unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serialization is infallible");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:>3} {:>3}  {:<28} {:>3} {:>3} {:>5}\n",
            "n", "Δ", "degree sequence", "x", "y", "count"
        );
        for row in self.rows() {
            writeln!(
                out,
                "{:>3} {:>3}  {:<28} {:>3} {:>3} {:>5}",
                row.n,
                row.delta,
                row.degree_sequence.to_string(),
                row.x,
                row.y,
                row.count
            )
            .unwrap();
        }
        out
    }
}

pub fn emit_table(n_min: usize, n_max: usize, r: CoreSize) -> Result<Table> {
    let census = Census::up_to(n_max)?;
    Ok(table_from_census(&census, n_min, n_max, r))
}

pub fn table_from_census(census: &Census, n_min: usize, n_max: usize, r: CoreSize) -> Table {
    let records = (n_min.max(2)..=n_max)
        .flat_map(|n| census.central(n, r))
        .collect();
    Table { r, records }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditCheck {
    pub id: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    /// Number of individual instances examined.
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Graph>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremAuditReport {
    pub n_max: usize,
    pub checks: Vec<AuditCheck>,
    pub observations: Vec<String>,
}

impl TheoremAuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("theorem audit up to n = {}\n", self.n_max);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "[{status}] ({}) {} [{} instances]",
                c.id, c.claim, c.instances
            )
            .unwrap();
            if let Some(f) = &c.failure {
                writeln!(out, "       {f}").unwrap();
            }
            if let Some(g) = &c.counterexample {
                writeln!(out, "       counterexample: {}", g.to_json()).unwrap();
            }
        }
        for o in &self.observations {
            writeln!(out, "note: {o}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AuditOptions {
    /// Adds a deliberately false claim, to exercise failure reporting.
    pub inject_failure: bool,
}

struct CheckBuilder {
    check: AuditCheck,
}

impl CheckBuilder {
    fn new(id: &'static str, claim: &'static str) -> Self {
        CheckBuilder {
            check: AuditCheck {
                id,
                claim,
                passed: true,
                instances: 0,
                failure: None,
                counterexample: None,
            },
        }
    }

    /// Records one instance; the first failing one is kept as the witness.
    fn expect(
        &mut self,
        ok: bool,
        what: impl FnOnce() -> String,
        witness: impl FnOnce() -> Option<Graph>,
    ) {
        self.check.instances += 1;
        if !ok && self.check.passed {
            self.check.passed = false;
            self.check.failure = Some(what());
            self.check.counterexample = witness();
        }
    }

    fn finish(self) -> AuditCheck {
        self.check
    }
}

pub fn audit_theorems(n_max: usize) -> Result<TheoremAuditReport> {
    audit_with(n_max, AuditOptions::default())
}

pub fn audit_with(n_max: usize, opts: AuditOptions) -> Result<TheoremAuditReport> {
    let census = Census::up_to(n_max)?;
    Ok(audit_census(&census, n_max, opts))
}

/// Audits the structural claims for all orders `3..=n_max` of `census`.
pub fn audit_census(census: &Census, n_max: usize, opts: AuditOptions) -> TheoremAuditReport {
    let orders = 3..=n_max;
    let records: BTreeMap<(usize, CoreSize), Vec<EnumerationRecord>> = orders
        .clone()
        .flat_map(|n| CoreSize::ALL.into_iter().map(move |r| (n, r)))
        .map(|(n, r)| ((n, r), census.central(n, r)))
        .collect();
    let recs = |n: usize, r: CoreSize| &records[&(n, r)];
    let first = |rec: &EnumerationRecord| rec.witnesses.first().map(CanonicalForm::to_graph);
    let mut checks = Vec::new();
    let mut observations = Vec::new();

    let mut tail = CheckBuilder::new(
        "tail",
        "every census record has (x, y) given by the closed forms and a feasible profile",
    );
    for ((n, r), list) in &records {
        for rec in list {
            let p = tail_params(*n, *r, rec.delta);
            tail.expect(
                p.feasible
                    && p.x == rec.x as i64
                    && p.y == rec.y as i64
                    && rec.degree_sequence.sum() + 6 == 4 * n,
                || {
                    format!(
                        "n={n} r={r} Δ={}: record (x,y)=({},{}) vs profile {:?}",
                        rec.delta, rec.x, rec.y, p
                    )
                },
                || first(rec),
            );
        }
    }
    checks.push(tail.finish());

    let mut a = CheckBuilder::new("a", "r=2 implies x is even");
    let mut b = CheckBuilder::new("b", "r=3 implies x + 2y ≡ 0 (mod 3)");
    for n in orders.clone() {
        for rec in recs(n, CoreSize::Bi) {
            let ok = rec.x % 2 == 0 && divisibility_check(&tail_params(n, CoreSize::Bi, rec.delta));
            a.expect(
                ok,
                || format!("n={n} Δ={} has x={}", rec.delta, rec.x),
                || first(rec),
            );
        }
        for rec in recs(n, CoreSize::Tri) {
            let ok = (rec.x + 2 * rec.y) % 3 == 0
                && divisibility_check(&tail_params(n, CoreSize::Tri, rec.delta));
            b.expect(
                ok,
                || format!("n={n} Δ={} has x+2y={}", rec.delta, rec.x + 2 * rec.y),
                || first(rec),
            );
        }
    }
    checks.push(a.finish());
    checks.push(b.finish());

    let mut c = CheckBuilder::new(
        "c",
        "r=2 with x=0 holds exactly for Δ=n-1 and is uniquely the book B_{n-2}",
    );
    for n in orders.clone().filter(|&n| n >= 4) {
        let list = recs(n, CoreSize::Bi);
        for rec in list.iter().filter(|rec| rec.x == 0 || rec.delta == n - 1) {
            let book = constructors::book(n - 2).expect("n >= 4").graph;
            let ok = rec.x == 0
                && rec.delta == n - 1
                && rec.count == 1
                && is_isomorphic(&rec.witness_graphs()[0], &book);
            c.expect(
                ok,
                || format!("n={n} Δ={} x={} count={}", rec.delta, rec.x, rec.count),
                || first(rec),
            );
        }
        c.expect(
            list.iter().any(|rec| rec.x == 0),
            || format!("n={n}: no x=0 record"),
            || None,
        );
    }
    checks.push(c.finish());

    let mut d = CheckBuilder::new("d", "r=2 with x=2 and n>=6 is unique up to isomorphism");
    let mut d2 = CheckBuilder::new(
        "d-spine",
        "r=2 with x=2 and n>=6: both degree-3 vertices lie in S = N(a)∩N(b)∖{a,b} and |S| = n-4",
    );
    for n in orders.clone().filter(|&n| n >= 6) {
        for rec in recs(n, CoreSize::Bi).iter().filter(|rec| rec.x == 2) {
            d.expect(
                rec.count == 1,
                || format!("n={n} Δ={} has {} classes", rec.delta, rec.count),
                || first(rec),
            );
            for g in rec.witness_graphs() {
                let cl = classify_central(&g).expect("census graphs classify");
                let spine = cl.spine(&g).expect("strong bicentral");
                let deg3_in_spine = (0..g.n())
                    .filter(|&v| g.degree(v) == 3)
                    .all(|v| spine.contains(&v));
                let ok = deg3_in_spine && spine.len() == n - 4;
                let shown = g.clone();
                d2.expect(
                    ok,
                    || {
                        format!(
                            "n={n}: |S|={}, degree-3 vertices in S: {deg3_in_spine}",
                            spine.len()
                        )
                    },
                    || Some(shown),
                );
            }
        }
    }
    checks.push(d.finish());
    checks.push(d2.finish());

    let mut e = CheckBuilder::new("e", "r=1: exactly one class for every n, the fan");
    for n in orders.clone() {
        let list = recs(n, CoreSize::Uni);
        if n < 5 {
            if list.is_empty() {
                observations.push(format!(
                    "no strong unicentral 2-tree on {n} vertices (the fan on {n} vertices has {} vertices of maximum degree)",
                    if n == 3 { 3 } else { 2 }
                ));
            }
            e.expect(
                list.is_empty(),
                || format!("n={n}: unexpected unicentral record"),
                || list.first().and_then(first),
            );
            continue;
        }
        let fan = constructors::fan(n).expect("n >= 3").graph;
        let ok = list.len() == 1
            && list[0].count == 1
            && is_isomorphic(&list[0].witness_graphs()[0], &fan);
        e.expect(
            ok,
            || {
                format!(
                    "n={n}: {} records, counts {:?}",
                    list.len(),
                    list.iter().map(|r| r.count).collect::<Vec<_>>()
                )
            },
            || list.first().and_then(first),
        );
    }
    checks.push(e.finish());

    let mut f = CheckBuilder::new("f", "N₂(n) >= n - 5 for n >= 7");
    for n in orders.clone().filter(|&n| n >= 7) {
        let total: usize = recs(n, CoreSize::Bi).iter().map(|r| r.count).sum();
        f.expect(
            total + 5 >= n,
            || format!("N₂({n}) = {total} < {}", n - 5),
            || None,
        );
    }
    checks.push(f.finish());

    let mut g = CheckBuilder::new("g", "r=2: every Δ in the admissible range is realized");
    for n in orders.clone().filter(|&n| n >= 4) {
        let list = recs(n, CoreSize::Bi);
        for delta in delta_range(n, CoreSize::Bi) {
            g.expect(
                list.iter().any(|rec| rec.delta == delta && rec.count > 0),
                || format!("n={n} Δ={delta} not realized"),
                || {
                    constructors::bicentral_standard(n, delta)
                        .ok()
                        .map(|c| c.graph)
                },
            );
        }
    }
    checks.push(g.finish());

    let mut h = CheckBuilder::new(
        "h",
        "r=3 and 3 | n: a record with Δ = 2n/3 and all tail degrees 2 exists (the extremal graph)",
    );
    for n in orders.clone().filter(|n| n % 3 == 0) {
        let extremal = constructors::tricentral_extremal(n).expect("3 | n").graph;
        let found = recs(n, CoreSize::Tri)
            .iter()
            .find(|rec| rec.delta == 2 * n / 3);
        let ok = found.is_some_and(|rec| {
            rec.x == 0
                && rec.y == n - 3
                && rec
                    .witness_graphs()
                    .iter()
                    .any(|w| is_isomorphic(w, &extremal))
        });
        h.expect(
            ok,
            || format!("n={n}: no extremal tricentral record"),
            || Some(extremal.clone()),
        );
    }
    checks.push(h.finish());

    for n in orders.clone().filter(|&n| n == 4 || n == 5) {
        if recs(n, CoreSize::Tri).is_empty() {
            observations.push(format!(
                "no strong tricentral 2-tree with tail degrees in {{2,3}} on {n} vertices"
            ));
        } else {
            observations.push(format!(
                "unexpected strong tricentral 2-tree on {n} vertices"
            ));
        }
    }

    if opts.inject_failure {
        let mut inj = CheckBuilder::new("injected", "r=2 implies x is odd (deliberately false)");
        for n in orders.clone() {
            for rec in recs(n, CoreSize::Bi) {
                inj.expect(
                    rec.x % 2 == 1,
                    || format!("n={n} Δ={} has x={}", rec.delta, rec.x),
                    || first(rec),
                );
            }
        }
        checks.push(inj.finish());
    }

    TheoremAuditReport {
        n_max,
        checks,
        observations,
    }
}
