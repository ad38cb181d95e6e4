//! Trajectory and report CSV files.

use std::fmt::Write as _;
use std::path::Path;

use aks_core::dynamics::{CollectiveSystem, InvariantDrift, PhaseState};
use aks_core::group::GroupElement;
use aks_core::tower::Tower;

use crate::exit::{config_error, io_error, CliResult};

pub const INVARIANT_COLUMNS: [&str; 6] =
    ["energy", "casimir", "casimir_j", "theta_drift", "commutator", "mixed_commutator"];

/// Every number written by the CLI: 17 significant digits, `-0` folded into `0`.
pub fn num(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

/// Level labels such as `(X1,0)` made safe for a CSV header: `X1:0`.
fn column_label(label: &str) -> String {
    label.replace(['(', ')'], "").replace(',', ":")
}

fn group_columns(tower: &Tower<f64>, prefix: &str, depth: usize, out: &mut Vec<String>) {
    if depth == 0 {
        for entry in ["m00", "m01", "m10", "m11"] {
            out.push(format!("{prefix}.{entry}.re"));
            out.push(format!("{prefix}.{entry}.im"));
        }
        return;
    }
    group_columns(tower, prefix, depth - 1, out);
    for label in tower.level(depth - 1).algebra.labels() {
        out.push(format!("{prefix}.w{depth}.{}", column_label(label)));
    }
}

/// Column names of a trajectory file; `factors` adds the `h₊ᶠ` columns.
pub fn trajectory_columns(tower: &Tower<f64>, depth: usize, factors: bool) -> Vec<String> {
    let mut cols = vec!["t".to_string()];
    group_columns(tower, "h_plus", depth, &mut cols);
    cols.extend(tower.level(depth).algebra.labels().iter().map(|l| format!("z.{}", column_label(l))));
    group_columns(tower, "g_minus", depth, &mut cols);
    cols.extend(INVARIANT_COLUMNS.iter().map(|s| s.to_string()));
    if factors {
        group_columns(tower, "h_plus_factor", depth, &mut cols);
    }
    cols
}

pub struct Trajectory {
    pub comment: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn build(
        name: &str,
        sys: &CollectiveSystem<'_, f64>,
        states: &[PhaseState<f64>],
        factors: Option<&[GroupElement<f64>]>,
    ) -> Self {
        let depth = sys.space.depth();
        let columns = trajectory_columns(sys.space.tower(), depth, factors.is_some());
        let comment = format!(
            "# {name}: t | h_plus (matrix row-major re/im, then fiber coefficients per level) | z (descriptor order) \
             | g_minus (as h_plus) | {}{}",
            INVARIANT_COLUMNS.join(" "),
            if factors.is_some() { " | h_plus_factor (as h_plus)" } else { "" }
        );
        let theta0 = states.first().map(|s| sys.theta(s));
        let rows = states
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let inv = sys.invariants(s);
                let drift = theta0.as_ref().map_or(0.0, |t0| inv.theta.max_diff(t0));
                let mut row = vec![s.t];
                row.extend(s.h_plus.flatten());
                row.extend(&s.z.0);
                row.extend(s.g_minus.flatten());
                row.extend([inv.energy, inv.casimir, inv.casimir_j, drift, inv.commutator, inv.mixed_commutator]);
                if let Some(f) = factors {
                    row.extend(f[i].flatten());
                }
                row
            })
            .collect();
        Self { comment, columns, rows }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.comment).unwrap();
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| num(x)).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        write_file(path, &self.to_csv())
    }

    /// Reads a file written by [`Trajectory::to_csv`].
    pub fn read(path: &Path) -> CliResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        let mut lines = text.lines();
        let comment = lines.next().filter(|l| l.starts_with('#')).unwrap_or_default().to_string();
        let columns: Vec<String> = lines
            .next()
            .ok_or_else(|| config_error(format!("{}: missing header row", path.display())))?
            .split(',')
            .map(str::to_string)
            .collect();
        let rows = lines
            .enumerate()
            .map(|(i, line)| {
                let row = line
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| config_error(format!("{} row {}: {e}", path.display(), i + 1)))?;
                if row.len() == columns.len() {
                    Ok(row)
                } else {
                    Err(config_error(format!("{} row {}: expected {} cells", path.display(), i + 1, columns.len())))
                }
            })
            .collect::<CliResult<_>>()?;
        Ok(Self { comment, columns, rows })
    }

    fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

/// Largest deviation over the state columns both files share.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub shared_columns: usize,
    pub rows: usize,
    pub max_deviation: f64,
    pub worst_column: String,
    pub worst_t: f64,
}

pub fn compare(a: &Trajectory, b: &Trajectory) -> CliResult<Comparison> {
    if a.rows.len() != b.rows.len() {
        return Err(config_error(format!("--compare: {} rows against {}", a.rows.len(), b.rows.len())));
    }
    let (ta, tb) = (a.column("t"), b.column("t"));
    let (Some(ta), Some(tb)) = (ta, tb) else {
        return Err(config_error("--compare: both files need a `t` column"));
    };
    let state = |c: &str| ["h_plus.", "h_plus_factor.", "z.", "g_minus."].iter().any(|p| c.starts_with(p));
    let pairs: Vec<(usize, usize, &str)> = a
        .columns
        .iter()
        .enumerate()
        .filter(|(_, c)| state(c))
        .filter_map(|(i, c)| b.column(c).map(|j| (i, j, c.as_str())))
        .collect();
    if pairs.is_empty() {
        return Err(config_error("--compare: no shared state columns"));
    }
    let mut cmp = Comparison {
        shared_columns: pairs.len(),
        rows: a.rows.len(),
        max_deviation: 0.0,
        worst_column: pairs[0].2.to_string(),
        worst_t: 0.0,
    };
    for (ra, rb) in a.rows.iter().zip(&b.rows) {
        if (ra[ta] - rb[tb]).abs() > 1e-12 * (1.0 + ra[ta].abs()) {
            return Err(config_error(format!("--compare: sample times differ ({} vs {})", ra[ta], rb[tb])));
        }
        for &(i, j, name) in &pairs {
            let d = (ra[i] - rb[j]).abs();
            if d > cmp.max_deviation || d.is_nan() {
                cmp.max_deviation = d;
                cmp.worst_column = name.to_string();
                cmp.worst_t = ra[ta];
            }
        }
    }
    Ok(cmp)
}

pub struct Threshold {
    pub name: &'static str,
    pub drift: f64,
    pub tolerance: f64,
}

impl Threshold {
    pub fn passed(&self) -> bool {
        self.drift <= self.tolerance
    }
}

/// Drift of each invariant against the default RK4 thresholds.
pub fn thresholds(d: &InvariantDrift<f64>) -> Vec<Threshold> {
    let t = |name, drift, tolerance| Threshold { name, drift, tolerance };
    vec![
        t("energy", d.energy, 1e-6),
        t("casimir", d.casimir, 1e-6),
        t("casimir_j", d.casimir_j, 1e-6),
        t("theta", d.theta, 1e-6),
        t("commutator", d.commutator, 1e-8),
        t("mixed_commutator", d.mixed_commutator, 1e-8),
    ]
}

pub fn invariant_report(thresholds: &[Threshold]) -> String {
    let mut out = String::from("# invariant drift: max |I(t) - I(0)| over the samples (commutators: max norm)\n");
    out.push_str("quantity,drift,tolerance,passed\n");
    for t in thresholds {
        writeln!(out, "{},{},{},{}", t.name, num(t.drift), num(t.tolerance), t.passed()).unwrap();
    }
    out
}

pub fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}
