//! Plain-text outputs. Every file opens with `# key=value` lines carrying the config hash.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use morphlab::verification::{RateTable, Report};
use morphlab::Diagnostics;
use ndarray::Array2;

use crate::error::{CliError, CliResult};

/// Trajectory columns, in file order.
pub const TRAJECTORY_COLUMNS: [&str; 10] = [
    "t",
    "norm_z1_Z1",
    "wnorm_z1_Z1plus",
    "norm_z2",
    "norm_z3_Lp",
    "norm_z3_inf",
    "norm_z4_Lp",
    "norm_z5_Lp",
    "min_u_all",
    "ode_sum_max",
];

/// 17 significant digits: enough to read back every double exactly.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub type Meta = Vec<(String, String)>;

fn write_meta(w: &mut impl Write, meta: &[(String, String)]) -> std::io::Result<()> {
    for (k, v) in meta {
        writeln!(w, "# {k}={v}")?;
    }
    Ok(())
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    Ok(BufWriter::new(
        File::create(path).map_err(|e| CliError::io(path, e))?,
    ))
}

fn rows_csv<W: Write>(
    w: W,
    header: Option<&[String]>,
    rows: impl Iterator<Item = Vec<String>>,
) -> csv::Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    if let Some(h) = header {
        out.write_record(h)?;
    }
    for r in rows {
        out.write_record(&r)?;
    }
    out.flush()?;
    Ok(())
}

fn finish(path: &Path, r: csv::Result<()>) -> CliResult<()> {
    r.map_err(|e| CliError::io(path, std::io::Error::other(e)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub meta: Meta,
    pub values: Array2<f64>,
}

impl Snapshot {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Header lines, then one comma-separated row per line. A `shape=R x C` entry is added.
    pub fn to_text(&self) -> String {
        let (r, c) = self.values.dim();
        let mut buf = Vec::new();
        let mut meta = self.meta.clone();
        meta.retain(|(k, _)| k != "shape");
        meta.insert(0, ("shape".into(), format!("{r}x{c}")));
        write_meta(&mut buf, &meta).expect("writing to memory");
        let rows = self
            .values
            .rows()
            .into_iter()
            .map(|row| row.iter().map(|x| fmt17(*x)).collect());
        rows_csv(&mut buf, None, rows).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut meta = Vec::new();
        for line in text.lines().take_while(|l| l.starts_with('#')) {
            let (k, v) = line[1..]
                .trim()
                .split_once('=')
                .ok_or_else(|| format!("bad header line `{line}`"))?;
            meta.push((k.to_string(), v.to_string()));
        }
        let shape = meta
            .iter()
            .find(|(k, _)| k == "shape")
            .ok_or("missing shape header")?
            .1
            .clone();
        let (r, c) = shape.split_once('x').ok_or("bad shape header")?;
        let (r, c): (usize, usize) = (
            r.parse().map_err(|_| "bad shape header")?,
            c.parse().map_err(|_| "bad shape header")?,
        );
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut data = Vec::with_capacity(r * c);
        for rec in reader.records() {
            let rec = rec.map_err(|e| e.to_string())?;
            if rec.len() != c {
                return Err(format!("row has {} values, expected {c}", rec.len()));
            }
            for f in rec.iter() {
                data.push(
                    f.trim()
                        .parse::<f64>()
                        .map_err(|_| format!("bad value `{f}`"))?,
                );
            }
        }
        let values =
            Array2::from_shape_vec((r, c), data).map_err(|_| format!("expected {r} rows"))?;
        meta.retain(|(k, _)| k != "shape");
        Ok(Self { meta, values })
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        let mut w = create(path)?;
        w.write_all(self.to_text().as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| CliError::io(path, e))
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|m| CliError::Runtime(format!("{}: {m}", path.display())))
    }
}

pub fn diagnostics_row(d: &Diagnostics) -> Vec<String> {
    [
        d.t,
        d.norm_z1,
        d.wnorm_z1,
        d.norm_z2,
        d.lp[0],
        d.sup[0],
        d.lp[1],
        d.lp[2],
        d.min_u,
        d.ode_sum_max,
    ]
    .iter()
    .map(|x| fmt17(*x))
    .collect()
}

pub fn write_trajectory(
    path: &Path,
    meta: &[(String, String)],
    diags: &[Diagnostics],
) -> CliResult<()> {
    let mut w = create(path)?;
    write_meta(&mut w, meta).map_err(|e| CliError::io(path, e))?;
    let header: Vec<String> = TRAJECTORY_COLUMNS.iter().map(|s| s.to_string()).collect();
    finish(
        path,
        rows_csv(w, Some(&header), diags.iter().map(diagnostics_row)),
    )
}

pub fn write_table(path: &Path, meta: &[(String, String)], table: &RateTable) -> CliResult<()> {
    let mut w = create(path)?;
    write_meta(&mut w, meta).map_err(|e| CliError::io(path, e))?;
    let mut header = vec![table.parameter.clone()];
    header.extend(table.columns.iter().cloned());
    let rows = table.rows.iter().map(|(p, v)| {
        std::iter::once(*p)
            .chain(v.iter().copied())
            .map(fmt17)
            .collect()
    });
    finish(path, rows_csv(w, Some(&header), rows))
}

pub fn write_rows(
    path: &Path,
    meta: &[(String, String)],
    header: &[&str],
    rows: Vec<Vec<String>>,
) -> CliResult<()> {
    let mut w = create(path)?;
    write_meta(&mut w, meta).map_err(|e| CliError::io(path, e))?;
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    finish(path, rows_csv(w, Some(&header), rows.into_iter()))
}

pub fn write_report(path: &Path, meta: &[(String, String)], report: &Report) -> CliResult<()> {
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                fmt17(c.value),
                fmt17(c.limit),
                if c.pass { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    write_rows(path, meta, &["check", "value", "limit", "result"], rows)
}
