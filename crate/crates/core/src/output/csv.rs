//! CSV emission and parse-back for sweep tables.
//!
//! Layout: one `#` comment line stating units, a header
//! `<sweep column>,<rate columns...>,warnings`, then one row per grid point.
//! Numbers are written as `{:.8e}` (9 significant digits); inapplicable
//! cells are empty.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sweep::SweepTable;

fn fmt(x: f64) -> String {
    format!("{x:.8e}")
}

/// `x` as it reads back after printing.
pub fn printed(x: f64) -> f64 {
    fmt(x).parse().expect("formatted float parses")
}

fn csv_err(e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            _ => unreachable!(),
        }
    } else {
        Error::Config(format!("csv: {e}"))
    }
}

pub fn write_csv<W: Write>(table: &SweepTable, mut out: W) -> Result<()> {
    let methods: Vec<String> = table
        .columns
        .iter()
        .map(|c| format!("{}={}", c.label, c.method.name()))
        .collect();
    writeln!(
        out,
        "# {} in {}; rates in 1/s; empty cell = mechanism not applicable; methods: {}",
        table.variable.column(),
        table.variable.si_unit(),
        methods.join(" ")
    )?;
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![table.variable.column().to_string()];
    header.extend(table.columns.iter().map(|c| c.label.clone()));
    header.push("warnings".into());
    w.write_record(&header).map_err(csv_err)?;
    for ((v, cells), warnings) in table.values.iter().zip(&table.rates).zip(&table.warnings) {
        let mut record = vec![fmt(*v)];
        record.extend(cells.iter().map(|c| c.map(fmt).unwrap_or_default()));
        record.push(warnings.join(";"));
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(table: &SweepTable) -> String {
    let mut buf = Vec::new();
    write_csv(table, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

pub fn emit_csv(table: &SweepTable, path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path)?;
    let mut out = BufWriter::new(file);
    write_csv(table, &mut out)?;
    out.flush()?;
    Ok(())
}

/// A sweep table as stored in CSV: labels and printed-precision numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub variable: String,
    pub labels: Vec<String>,
    pub values: Vec<f64>,
    pub rates: Vec<Vec<Option<f64>>>,
    pub warnings: Vec<String>,
}

impl From<&SweepTable> for CsvTable {
    fn from(t: &SweepTable) -> Self {
        CsvTable {
            variable: t.variable.column().to_string(),
            labels: t.columns.iter().map(|c| c.label.clone()).collect(),
            values: t.values.iter().copied().map(printed).collect(),
            rates: t
                .rates
                .iter()
                .map(|row| row.iter().map(|c| c.map(printed)).collect())
                .collect(),
            warnings: t.warnings.iter().map(|w| w.join(";")).collect(),
        }
    }
}

pub fn read_csv<R: Read>(input: R) -> Result<CsvTable> {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input);
    let header = r.headers().map_err(csv_err)?.clone();
    let n = header.len();
    if n < 2 || &header[n - 1] != "warnings" {
        return Err(Error::Config("csv: header must end with `warnings`".into()));
    }
    let parse = |s: &str, line: u64| -> Result<f64> {
        s.parse()
            .map_err(|_| Error::Config(format!("csv line {line}: `{s}` is not a number")))
    };
    let mut table = CsvTable {
        variable: header[0].to_string(),
        labels: header.iter().skip(1).take(n - 2).map(String::from).collect(),
        values: Vec::new(),
        rates: Vec::new(),
        warnings: Vec::new(),
    };
    for record in r.records() {
        let record = record.map_err(csv_err)?;
        let line = record.position().map_or(0, |p| p.line());
        table.values.push(parse(&record[0], line)?);
        let row = (1..n - 1)
            .map(|i| match &record[i] {
                "" => Ok(None),
                s => parse(s, line).map(Some),
            })
            .collect::<Result<Vec<_>>>()?;
        table.rates.push(row);
        table.warnings.push(record[n - 1].to_string());
    }
    Ok(table)
}
