//! Recomputed result tables, diffs against the reference values, and the
//! cycle-listing errata report.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::baseline::{self, CountTable, CycleListing, UtilizationRow};
use crate::error::{Error, Result};
use crate::gate::{enumerate_gates, GateInstance, GateKind, Library};
use crate::group::analyze_sublibraries;
use crate::qopt::optimization_sweep;
use crate::synth::{histogram_average, min_cost_table, min_length_table};
use crate::CostModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// Universal sub-libraries.
    Utilization,
    /// Smallest universal sub-libraries.
    MinimalUniversal,
    MinLength,
    /// Cost before and after optimization.
    Optimization,
    MinCost,
}

impl TableKind {
    pub const ALL: [TableKind; 5] = [
        TableKind::Utilization,
        TableKind::MinimalUniversal,
        TableKind::MinLength,
        TableKind::Optimization,
        TableKind::MinCost,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TableKind::Utilization => "1",
            TableKind::MinimalUniversal => "2",
            TableKind::MinLength => "3",
            TableKind::Optimization => "4",
            TableKind::MinCost => "5",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableKind::Utilization => "Utilization of gates in universal sub libraries",
            TableKind::MinimalUniversal => "Utilization of gates in the smallest universal sub libraries",
            TableKind::MinLength => "Minimum length of 3-bit reversible circuits",
            TableKind::Optimization => "Cost of 3-bit circuits before and after optimization",
            TableKind::MinCost => "Minimum quantum cost of 3-bit reversible circuits",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table{}", self.id())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = s.trim().to_ascii_lowercase();
        let id = id.strip_prefix("table").unwrap_or(&id);
        TableKind::ALL
            .into_iter()
            .find(|k| k.id() == id)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    /// Rendered with 3 decimals.
    Real(f64),
    Empty,
}

impl Cell {
    /// Equal as printed (integers exactly, reals to 3 decimals).
    pub fn same(&self, other: &Cell) -> bool {
        self.to_string() == other.to_string()
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => Value::from((v * 1000.0).round() / 1000.0),
            Cell::Empty => Value::Null,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Real(v) => write!(f, "{v:.3}"),
            Cell::Empty => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub id: String,
    pub title: String,
    /// Header of the row-label column.
    pub label: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn cell(&self, row: &str, column: &str) -> Option<&Cell> {
        let c = self.columns.iter().position(|n| n == column)?;
        self.rows.iter().find(|r| r.label == row).map(|r| &r.cells[c])
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let out = |e: csv::Error| Error::Output(e.to_string());
        let mut header = vec![self.label.clone()];
        header.extend(self.columns.iter().cloned());
        w.write_record(&header).map_err(out)?;
        for r in &self.rows {
            let mut rec = vec![r.label.clone()];
            rec.extend(r.cells.iter().map(Cell::to_string));
            w.write_record(&rec).map_err(out)?;
        }
        csv_string(w)
    }

    /// Rows as objects keyed in column order.
    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert(self.label.clone(), Value::from(r.label.clone()));
                for (c, v) in self.columns.iter().zip(&r.cells) {
                    m.insert(c.clone(), v.to_json());
                }
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("table".into(), Value::from(self.id.clone()));
        m.insert("title".into(), Value::from(self.title.clone()));
        m.insert("columns".into(), Value::from(self.columns.clone()));
        m.insert("rows".into(), Value::Array(rows));
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut grid = vec![std::iter::once(self.label.clone())
            .chain(self.columns.iter().cloned())
            .collect::<Vec<_>>()];
        for r in &self.rows {
            grid.push(
                std::iter::once(r.label.clone())
                    .chain(r.cells.iter().map(Cell::to_string))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut s = format!("Table {}: {}\n", self.id, self.title);
        for r in &grid {
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (v, &w))| if i == 0 { format!("{v:<w$}") } else { format!("{v:>w$}") })
                .collect();
            s.push_str(line.join("  ").trim_end());
            s.push('\n');
        }
        s
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
}

/// A cell where the recomputed value differs from the reference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffEntry {
    pub table: String,
    pub row: String,
    pub column: String,
    pub reference: String,
    pub computed: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub table: Table,
    pub diffs: Vec<DiffEntry>,
    /// Completeness banners and convention remarks.
    pub notes: Vec<String>,
}

impl TableReport {
    pub fn diff(&self, row: &str, column: &str) -> Option<&DiffEntry> {
        self.diffs.iter().find(|d| d.row == row && d.column == column)
    }

    pub fn diffs_csv(&self) -> Result<String> {
        diffs_csv(&self.diffs)
    }

    pub fn to_json(&self) -> Value {
        let mut m = match self.table.to_json() {
            Value::Object(m) => m,
            _ => unreachable!(),
        };
        m.insert("notes".into(), Value::from(self.notes.clone()));
        m.insert(
            "diffs".into(),
            serde_json::to_value(&self.diffs).expect("diff entries serialize"),
        );
        Value::Object(m)
    }

    pub fn to_text(&self, with_diff: bool) -> String {
        let mut s = self.table.to_text();
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if with_diff {
            let _ = writeln!(s, "diff ({} cells):", self.diffs.len());
            for d in &self.diffs {
                let _ = write!(
                    s,
                    "  [{}, {}] reference {} computed {}",
                    d.row, d.column, d.reference, d.computed
                );
                if !d.note.is_empty() {
                    let _ = write!(s, " ({})", d.note);
                }
                s.push('\n');
            }
        }
        s
    }
}

pub fn diffs_csv(diffs: &[DiffEntry]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for d in diffs {
        w.serialize(d).map_err(|e| Error::Output(e.to_string()))?;
    }
    csv_string(w)
}

/// Builds the diff of `computed` against `reference`, which must share its
/// columns and row labels (missing reference cells are skipped).
fn diff_tables(computed: &Table, reference: &Table) -> Vec<DiffEntry> {
    let mut out = Vec::new();
    for row in &computed.rows {
        for (c, col) in computed.columns.iter().enumerate() {
            let Some(r) = reference.cell(&row.label, col) else { continue };
            let ours = &row.cells[c];
            if matches!(r, Cell::Empty) || r.same(ours) {
                continue;
            }
            let note = baseline::known_issues(&computed.id, &row.label, col)
                .first()
                .map(|k| k.note.to_string())
                .unwrap_or_default();
            out.push(DiffEntry {
                table: computed.id.clone(),
                row: row.label.clone(),
                column: col.clone(),
                reference: r.to_string(),
                computed: ours.to_string(),
                note,
            });
        }
    }
    out
}

const UTIL_COLUMNS: [&str; 4] = ["size", "subsets", "universal", "utilization"];

fn utilization_table(kind: TableKind, rows: Vec<Row>) -> Table {
    Table {
        id: kind.id().into(),
        title: kind.title().into(),
        label: "library".into(),
        columns: UTIL_COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
    }
}

fn utilization_reference(kind: TableKind, rows: &[UtilizationRow]) -> Table {
    utilization_table(
        kind,
        rows.iter()
            .map(|r| Row {
                label: r.library.into(),
                cells: vec![
                    Cell::Int(r.size),
                    Cell::Int(r.subsets),
                    Cell::Int(r.universal),
                    Cell::Real(r.utilization),
                ],
            })
            .collect(),
    )
}

fn utilization_report(kind: TableKind, libraries: &[Library]) -> Result<TableReport> {
    let reference_rows = match kind {
        TableKind::Utilization => baseline::TABLE1,
        _ => baseline::TABLE2,
    };
    let mut rows = Vec::new();
    for lib in libraries {
        let rep = analyze_sublibraries(lib)?;
        let cells = match kind {
            TableKind::Utilization => vec![
                Cell::Int(rep.library_size as u64),
                Cell::Int(rep.total_subsets),
                Cell::Int(rep.universal_subsets),
                Cell::Real(rep.utilization_percent),
            ],
            _ => vec![
                rep.min_universal_size.map_or(Cell::Empty, |s| Cell::Int(s as u64)),
                Cell::Int(rep.subsets_at_min_size),
                Cell::Int(rep.universal_at_min_size),
                Cell::Real(rep.min_utilization_percent),
            ],
        };
        rows.push(Row { label: lib.name().into(), cells });
    }
    let table = utilization_table(kind, rows);
    let diffs = diff_tables(&table, &utilization_reference(kind, reference_rows));
    Ok(TableReport { table, diffs, notes: Vec::new() })
}

/// Histogram columns in reference layout: one row per value, then `Avg`
/// (identity included), `Avg excl. identity` and `Total`.
fn histogram_table(kind: TableKind, label: &str, columns: &[String], hists: &[Vec<u64>]) -> Table {
    let len = hists.iter().map(Vec::len).max().unwrap_or(0);
    let at = |h: &Vec<u64>, v: usize| h.get(v).copied().unwrap_or(0);
    let mut rows: Vec<Row> = (0..len)
        .map(|v| Row {
            label: v.to_string(),
            cells: hists.iter().map(|h| Cell::Int(at(h, v))).collect(),
        })
        .collect();
    rows.push(Row {
        label: "Avg".into(),
        cells: hists.iter().map(|h| Cell::Real(histogram_average(h, true))).collect(),
    });
    if kind != TableKind::MinLength {
        rows.push(Row {
            label: "Avg excl. identity".into(),
            cells: hists.iter().map(|h| Cell::Real(histogram_average(h, false))).collect(),
        });
    }
    rows.push(Row {
        label: "Total".into(),
        cells: hists.iter().map(|h| Cell::Int(h.iter().sum())).collect(),
    });
    Table {
        id: kind.id().into(),
        title: kind.title().into(),
        label: label.into(),
        columns: columns.to_vec(),
        rows,
    }
}

fn count_reference(kind: TableKind, label: &str, t: &CountTable) -> Table {
    let columns: Vec<String> = t.columns.iter().map(|s| s.to_string()).collect();
    let hists: Vec<Vec<u64>> = t.columns.iter().map(|c| t.column(c).unwrap()).collect();
    let mut table = histogram_table(kind, label, &columns, &hists);
    let avg = table.rows.iter_mut().find(|r| r.label == "Avg").unwrap();
    avg.cells = t.averages.iter().map(|&a| Cell::Real(a)).collect();
    table
        .rows
        .retain(|r| r.label != "Avg excl. identity");
    table
}

fn histogram_report(
    kind: TableKind,
    label: &str,
    columns: Vec<String>,
    hists: Vec<Vec<u64>>,
    reference: &CountTable,
    notes: Vec<String>,
) -> TableReport {
    let table = histogram_table(kind, label, &columns, &hists);
    let diffs = diff_tables(&table, &count_reference(kind, label, reference));
    TableReport { table, diffs, notes }
}

fn min_length_report(libraries: &[Library]) -> Result<TableReport> {
    let mut hists = Vec::new();
    let mut notes = Vec::new();
    for lib in libraries {
        let t = min_length_table(lib)?;
        if let Some(b) = t.banner() {
            notes.push(format!("{}: {b}", lib.name()));
        }
        hists.push(t.histogram());
    }
    let columns = names(libraries);
    Ok(histogram_report(
        TableKind::MinLength,
        "length",
        columns,
        hists,
        &baseline::TABLE3,
        notes,
    ))
}

fn min_cost_report(libraries: &[Library]) -> Result<TableReport> {
    let cost = CostModel::default();
    let mut hists = Vec::new();
    let mut notes = Vec::new();
    for lib in libraries {
        let t = min_cost_table(lib, &cost)?;
        if let Some(b) = t.banner() {
            notes.push(format!("{}: {b}", lib.name()));
        }
        hists.push(t.histogram());
    }
    if libraries.iter().any(|l| l.name() == "NFT") {
        notes.push("NFT is the NCT gate set (Feynman = CNOT)".into());
    }
    let columns = names(libraries);
    Ok(histogram_report(
        TableKind::MinCost,
        "cost",
        columns,
        hists,
        &baseline::TABLE5,
        notes,
    ))
}

fn optimization_report(libraries: &[Library]) -> Result<TableReport> {
    let cost = CostModel::default();
    let mut hists = Vec::new();
    let mut columns = Vec::new();
    for lib in libraries {
        let sweep = optimization_sweep(lib, &cost)?;
        hists.push(sweep.before);
        hists.push(sweep.after);
        columns.push(format!("{} bfr", lib.name()));
        columns.push(format!("{} aft", lib.name()));
    }
    let notes = vec![
        "bfr: minimum cost; aft: that circuit decomposed and optimized".into(),
        "cost-0 rows count the identity".into(),
    ];
    Ok(histogram_report(
        TableKind::Optimization,
        "cost",
        columns,
        hists,
        &baseline::TABLE4,
        notes,
    ))
}

fn names(libraries: &[Library]) -> Vec<String> {
    libraries.iter().map(|l| l.name().to_string()).collect()
}

/// Libraries of the reference layout, in order.
pub fn default_libraries(kind: TableKind) -> &'static [&'static str] {
    match kind {
        TableKind::Utilization | TableKind::MinimalUniversal => &[
            "NT", "NP", "NCT", "NCF", "NCP", "NCTF", "NCPT", "NCPF", "G3", "R3", "NR3",
        ],
        TableKind::MinLength => baseline::TABLE3.columns,
        TableKind::Optimization => &["R3", "NR3", "NT"],
        TableKind::MinCost => baseline::TABLE5.columns,
    }
}

/// Recomputes one table in reference layout and diffs it against the
/// reference values.
pub fn table_report(kind: TableKind) -> Result<TableReport> {
    table_report_for(kind, &[])
}

/// Like [`table_report`] for chosen libraries (all when empty). Libraries
/// absent from the reference layout are computed without a diff.
pub fn table_report_for(kind: TableKind, libraries: &[String]) -> Result<TableReport> {
    let libs = if libraries.is_empty() {
        default_libraries(kind)
            .iter()
            .map(|n| Library::named(n))
            .collect::<Result<Vec<_>>>()?
    } else {
        libraries
            .iter()
            .map(|n| Library::named(n))
            .collect::<Result<Vec<_>>>()?
    };
    match kind {
        TableKind::Utilization | TableKind::MinimalUniversal => utilization_report(kind, &libs),
        TableKind::MinLength => min_length_report(&libs),
        TableKind::Optimization => optimization_report(&libs),
        TableKind::MinCost => min_cost_report(&libs),
    }
}

/// A discrepancy between a printed cycle listing and the computed gate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Erratum {
    /// 1-based position of the listing within its group.
    pub row: usize,
    pub gate: String,
    /// `position`, `duplicate-label`, `missing-label`, `not-a-permutation`
    /// or `no-match`.
    pub kind: String,
    /// 1-based position in the flattened cycle notation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    pub printed: String,
    pub computed: String,
    pub note: String,
}

/// Numbers of a cycle listing, flattened, without validating it.
fn listing_numbers(text: &str) -> Vec<u32> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .filter_map(|s| s.parse().ok())
        .collect()
}

fn flat_cycles(g: &GateInstance, wires: u8) -> Result<(String, Vec<u32>)> {
    let c = g.semantics(wires)?.to_cycles();
    let nums = listing_numbers(&c);
    Ok((c, nums))
}

/// Compares printed listings with computed semantics position by position,
/// and checks that every instance of the listed kind appears exactly once.
pub fn listing_errata(listings: &[CycleListing]) -> Result<Vec<Erratum>> {
    let mut out = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    for (i, l) in listings.iter().enumerate() {
        let row = i + 1;
        let g: GateInstance = l.gate.parse()?;
        let (computed, ours) = flat_cycles(&g, l.wires)?;
        let printed = listing_numbers(l.cycles);
        let err = |kind: &str, position, p: String, c: String, note: String| Erratum {
            row,
            gate: l.gate.into(),
            kind: kind.into(),
            position,
            printed: p,
            computed: c,
            note,
        };
        if let Some(first) = seen.iter().position(|&s| s == l.gate) {
            out.push(err(
                "duplicate-label",
                None,
                l.cycles.into(),
                computed.clone(),
                format!("label already used by row {}", first + 1),
            ));
        }
        seen.push(l.gate);
        let mut sorted = printed.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != printed.len() {
            let dup: Vec<String> = sorted
                .iter()
                .filter(|v| printed.iter().filter(|p| p == v).count() > 1)
                .map(u32::to_string)
                .collect();
            out.push(err(
                "not-a-permutation",
                None,
                l.cycles.into(),
                computed.clone(),
                format!("repeats {}", dup.join(", ")),
            ));
        }
        if l.cycles == computed {
            continue;
        }
        let mismatches: Vec<usize> = (0..printed.len().max(ours.len()))
            .filter(|&p| printed.get(p) != ours.get(p))
            .collect();
        if mismatches.len() * 4 <= ours.len() {
            for p in mismatches {
                let show = |v: Option<&u32>| v.map_or("-".to_string(), u32::to_string);
                out.push(err(
                    "position",
                    Some(p + 1),
                    show(printed.get(p)),
                    show(ours.get(p)),
                    String::new(),
                ));
            }
        } else {
            let note = nearest_instance(&g, l.wires, l.cycles, &printed)?;
            out.push(err("no-match", None, l.cycles.into(), computed, note));
        }
    }
    if let Some(first) = listings.first() {
        let g: GateInstance = first.gate.parse()?;
        let wires = first.wires;
        let listed = listings
            .iter()
            .map(|l| l.gate.parse::<GateInstance>()?.semantics(wires))
            .collect::<Result<Vec<_>>>()?;
        for inst in enumerate_gates(g.kind(), wires)? {
            let name = inst.to_string();
            if !listed.contains(&inst.semantics(wires)?) {
                out.push(Erratum {
                    row: 0,
                    gate: name,
                    kind: "missing-label".into(),
                    position: None,
                    printed: String::new(),
                    computed: inst.semantics(wires)?.to_cycles(),
                    note: "no listing carries this label".into(),
                });
            }
        }
    }
    Ok(out)
}

fn nearest_instance(g: &GateInstance, wires: u8, text: &str, printed: &[u32]) -> Result<String> {
    let mut best: Option<(usize, String)> = None;
    for inst in enumerate_gates(g.kind(), wires)? {
        let (c, nums) = flat_cycles(&inst, wires)?;
        if c == text {
            return Ok(format!("listing is exactly {inst}"));
        }
        let d = (0..nums.len().max(printed.len()))
            .filter(|&p| nums.get(p) != printed.get(p))
            .count();
        if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, inst.to_string()));
        }
    }
    Ok(match best {
        Some((d, name)) => format!("matches no {} instance; nearest {name} ({d} positions differ)", g.kind()),
        None => String::new(),
    })
}

/// Errata over every reference listing group.
pub fn errata() -> Result<Vec<Erratum>> {
    let mut out = Vec::new();
    let mut kinds: Vec<GateKind> = Vec::new();
    for l in baseline::GATE_LISTINGS {
        let k = l.gate.parse::<GateInstance>()?.kind();
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    for k in kinds {
        let group: Vec<CycleListing> = baseline::GATE_LISTINGS
            .iter()
            .filter(|l| l.gate.parse::<GateInstance>().map(|g| g.kind() == k).unwrap_or(false))
            .copied()
            .collect();
        out.extend(listing_errata(&group)?);
    }
    for group in [&baseline::SMALL_R_LISTINGS[..1], &baseline::SMALL_R_LISTINGS[1..]] {
        out.extend(listing_errata(group)?);
    }
    out.extend(listing_errata(baseline::R3_LISTINGS)?);
    out.extend(listing_errata(baseline::R4_LISTINGS)?);
    Ok(out)
}

pub fn errata_csv(errata: &[Erratum]) -> Result<String> {
    #[derive(Serialize)]
    struct Flat<'a> {
        row: usize,
        gate: &'a str,
        kind: &'a str,
        position: String,
        printed: &'a str,
        computed: &'a str,
        note: &'a str,
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in errata {
        w.serialize(Flat {
            row: e.row,
            gate: &e.gate,
            kind: &e.kind,
            position: e.position.map(|p| p.to_string()).unwrap_or_default(),
            printed: &e.printed,
            computed: &e.computed,
            note: &e.note,
        })
        .map_err(|e| Error::Output(e.to_string()))?;
    }
    csv_string(w)
}

pub fn errata_text(errata: &[Erratum]) -> String {
    let mut s = format!("errata ({} entries):\n", errata.len());
    for e in errata {
        let _ = write!(s, "  {} row {}: {}", e.gate, e.row, e.kind);
        if let Some(p) = e.position {
            let _ = write!(s, " at {p}: printed {} computed {}", e.printed, e.computed);
        }
        if !e.note.is_empty() {
            let _ = write!(s, " ({})", e.note);
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing() {
        assert_eq!("3".parse::<TableKind>().unwrap(), TableKind::MinLength);
        assert_eq!("table5".parse::<TableKind>().unwrap(), TableKind::MinCost);
        assert!("6".parse::<TableKind>().is_err());
    }

    #[test]
    fn cell_comparison_is_as_printed() {
        assert!(Cell::Real(50.0).same(&Cell::Real(50.0004)));
        assert!(!Cell::Real(86.667).same(&Cell::Real(84.375)));
        assert_eq!(Cell::Int(7).to_string(), "7");
    }

    #[test]
    fn utilization_table2_diffs() {
        let rep = table_report(TableKind::MinimalUniversal).unwrap();
        assert_eq!(rep.table.cell("R3", "universal"), Some(&Cell::Int(12)));
        let d = rep.diff("R3", "universal").unwrap();
        assert_eq!((d.reference.as_str(), d.computed.as_str()), ("13", "12"));
        assert!(!d.note.is_empty());
        assert!(rep.diff("NCT", "universal").is_none());
    }

    #[test]
    fn csv_and_json_keep_column_order() {
        let rep = table_report(TableKind::MinLength).unwrap();
        let csv = rep.table.to_csv().unwrap();
        assert!(csv.starts_with("length,NT,NP,NCT,NCF,NCP,NCTF,NCPT,NCPF,G3,R3,NR3\n0,1,1,"));
        let json = serde_json::to_string(&rep.to_json()).unwrap();
        assert!(json.starts_with(r#"{"table":"3","title":"#));
        assert!(json.contains(r#"{"length":"0","NT":1,"NP":1,"#));
    }

    #[test]
    fn library_selection() {
        let rep = table_report_for(TableKind::MinCost, &["nft".into(), "R3".into()]).unwrap();
        assert_eq!(rep.table.columns, ["NFT", "R3"]);
        assert_eq!(rep.table.cell("1", "NFT"), Some(&Cell::Int(48)));
        assert!(table_report_for(TableKind::MinLength, &["XYZ".into()]).is_err());
    }

    #[test]
    fn r4_errata() {
        let e = listing_errata(baseline::R4_LISTINGS).unwrap();
        let pos = e.iter().find(|e| e.kind == "position").unwrap();
        assert_eq!((pos.row, pos.position, pos.printed.as_str(), pos.computed.as_str()), (1, Some(11), "2", "12"));
        assert!(e.iter().any(|e| e.kind == "duplicate-label" && e.row == 10));
        assert!(e.iter().any(|e| e.kind == "missing-label" && e.gate == "R4 1 3 4 2"));
        assert!(e.iter().any(|e| e.kind == "no-match" && e.row == 10));
    }

    #[test]
    fn three_wire_listings_are_clean() {
        let e = errata().unwrap();
        assert!(e.iter().all(|e| e.gate.starts_with("R4")), "{e:?}");
    }
}
