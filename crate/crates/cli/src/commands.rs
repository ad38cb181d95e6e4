use std::path::{Path, PathBuf};

use aks_core::aks::{generator, sl2c_closed_form, solve_by_factorization, AksInitialData};
use aks_core::algebra::io::DescriptorFile;
use aks_core::group::{iwasawa, Mat2};
use aks_core::verify::{self, Suite};
use num_complex::Complex;

use crate::exit::{config_error, numerical_error, verification_error, CliResult};
use crate::output::{compare, invariant_report, num, thresholds, trajectory_columns, write_file, Trajectory};
use crate::scenario::{Overrides, Prepared, Scenario};

/// Largest character-condition defect accepted without a warning.
const CHARACTER_TOL: f64 = 1e-12;
/// `Θ` drift allowed along an exact solution under `--strict`.
const EXACT_THETA_TOL: f64 = 1e-12;
/// Closed-form factors against generic factorization under `--strict`.
const CLOSED_FORM_TOL: f64 = 1e-10;
/// Determinant tolerance for `factorize` inputs.
const FACTORIZE_DET_TOL: f64 = 1e-8;

pub struct RunOptions<'a> {
    pub scenario: &'a Path,
    pub out: &'a Path,
    pub overrides: Overrides,
    pub compare_with: Option<&'a Path>,
    pub strict: bool,
}

fn prepare(opts: &RunOptions<'_>) -> CliResult<Prepared> {
    let prepared = Scenario::load(opts.scenario)?.prepare(&opts.overrides)?;
    if prepared.character_defect > CHARACTER_TOL {
        eprintln!("warning: base Z_minus violates the character condition (defect {})", num(prepared.character_defect));
    }
    Ok(prepared)
}

fn report_comparison(written: &Trajectory, other: Option<&Path>) -> CliResult<()> {
    let Some(path) = other else { return Ok(()) };
    let cmp = compare(written, &Trajectory::read(path)?)?;
    println!(
        "compare {}: max deviation {} over {} shared columns x {} rows (worst {} at t = {})",
        path.display(),
        num(cmp.max_deviation),
        cmp.shared_columns,
        cmp.rows,
        cmp.worst_column,
        num(cmp.worst_t)
    );
    Ok(())
}

pub fn simulate(opts: &RunOptions<'_>) -> CliResult<()> {
    let p = prepare(opts)?;
    let sys = p.system();
    let states = sys.integrate(&p.initial, &p.times, p.dt).map_err(numerical_error)?;
    let traj = Trajectory::build(&p.scenario.name, &sys, &states, None);
    let traj_path = p.output(opts.out, &p.scenario.outputs.trajectory, "trajectory");
    traj.write(&traj_path)?;
    let drift = sys.invariant_drift(&states).ok_or_else(|| numerical_error("empty trajectory"))?;
    let checks = thresholds(&drift);
    let report_path = p.output(opts.out, &p.scenario.outputs.invariants, "invariants");
    write_file(&report_path, &invariant_report(&checks))?;
    println!("wrote {}", traj_path.display());
    println!("wrote {}", report_path.display());
    for c in &checks {
        println!("drift {:<16} {} (tol {})", c.name, num(c.drift), num(c.tolerance));
    }
    report_comparison(&traj, opts.compare_with)?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
    if opts.strict && !failed.is_empty() {
        return Err(verification_error(format!("invariant drift above threshold: {}", failed.join(", "))));
    }
    Ok(())
}

/// Factor curves of `Exp(t(i/2)(X₀⁺, Y₀⁺))` from the explicit formulas,
/// with the deviation from generic exp + factorization per sample.
fn closed_form_curve(p: &Prepared) -> CliResult<(Trajectory, f64)> {
    let Some((x0, y0)) = &p.su2_data else {
        return Err(config_error("field `initial`: --closed-form needs kind `sl2c` or `random_sl2c`"));
    };
    let tower = p.space.tower();
    let gen = generator(x0, y0);
    let mut columns = vec!["t".to_string()];
    columns.extend(trajectory_columns(tower, 1, true).into_iter().filter(|c| c.starts_with("h_plus_factor.")));
    columns.extend(trajectory_columns(tower, 1, false).into_iter().filter(|c| c.starts_with("g_minus.")));
    columns.push("factor_residual".into());
    let mut worst = 0.0f64;
    let rows = p
        .times
        .iter()
        .map(|&t| {
            let cf = sl2c_closed_form(x0, y0, t).map_err(numerical_error)?;
            let (plus, minus) = (cf.plus(), cf.minus());
            let k = tower.exp(&gen.scale(t)).map_err(numerical_error)?;
            let (hp, gm) = tower.factorize(&k).map_err(numerical_error)?;
            let residual = plus.max_abs_diff(&hp).max(minus.max_abs_diff(&gm));
            worst = worst.max(residual);
            let mut row = vec![t];
            row.extend(plus.flatten());
            row.extend(minus.flatten());
            row.push(residual);
            Ok(row)
        })
        .collect::<CliResult<_>>()?;
    let comment = format!(
        "# {}: closed-form factors of Exp(t(i/2)(X0, Y0)) = (h0+, X1+)(k0-, X1-): t | h_plus_factor | g_minus | factor_residual",
        p.scenario.name
    );
    Ok((Trajectory { comment, columns, rows }, worst))
}

pub fn solve_aks(opts: &RunOptions<'_>, closed_form: bool) -> CliResult<()> {
    let p = prepare(opts)?;
    let sys = p.system();
    if closed_form {
        let (curve, residual) = closed_form_curve(&p)?;
        let path = p.output(opts.out, &p.scenario.outputs.aks, "closed-form");
        curve.write(&path)?;
        println!("wrote {}", path.display());
        println!("factor residual {}", num(residual));
        report_comparison(&curve, opts.compare_with)?;
        if opts.strict && residual > CLOSED_FORM_TOL {
            return Err(verification_error(format!(
                "factor residual {} above {}",
                num(residual),
                num(CLOSED_FORM_TOL)
            )));
        }
        return Ok(());
    }
    let data = AksInitialData::from_state(&sys, &p.initial).map_err(numerical_error)?;
    let (states, factors): (Vec<_>, Vec<_>) = solve_by_factorization(&sys, &data, &p.times)
        .map_err(numerical_error)?
        .into_iter()
        .map(|s| (s.state, s.h_plus_factor))
        .unzip();
    let traj = Trajectory::build(&p.scenario.name, &sys, &states, Some(&factors));
    let path = p.output(opts.out, &p.scenario.outputs.aks, "aks");
    traj.write(&path)?;
    let drift = sys.invariant_drift(&states).ok_or_else(|| numerical_error("empty trajectory"))?;
    println!("wrote {}", path.display());
    println!("theta drift {}", num(drift.theta));
    report_comparison(&traj, opts.compare_with)?;
    if opts.strict && drift.theta > EXACT_THETA_TOL {
        return Err(verification_error(format!("theta drift {} above {}", num(drift.theta), num(EXACT_THETA_TOL))));
    }
    Ok(())
}

pub fn verify(suite: &str, seed: u64, descriptor: Option<&PathBuf>) -> CliResult<()> {
    let suite: Suite = suite.parse().map_err(|e| config_error(format!("--suite: {e}")))?;
    let mut checks = verify::run(suite, seed);
    if let Some(path) = descriptor {
        let text =
            std::fs::read_to_string(path).map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        let file = DescriptorFile::from_json(&text).map_err(|e| config_error(format!("{}: {e}", path.display())))?;
        checks.extend(verify::verify_descriptor(&file));
    }
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!("{} checks, {failed} failed", checks.len());
    if failed > 0 {
        return Err(verification_error(format!("{failed} of {} checks failed", checks.len())));
    }
    Ok(())
}

fn print_matrix(name: &str, m: &Mat2<f64>) {
    let cell = |z: Complex<f64>| {
        let im = z.im + 0.0;
        format!("{}{}{}i", num(z.re), if im < 0.0 { "" } else { "+" }, num(im))
    };
    let [[a, b], [c, d]] = m.m;
    println!("{name} = [[{}, {}], [{}, {}]]", cell(a), cell(b), cell(c), cell(d));
}

/// Iwasawa factors of a matrix given as 4 real or 8 interleaved re/im entries.
pub fn factorize(entries: &[f64]) -> CliResult<()> {
    let reals: Vec<f64> = match entries.len() {
        4 => entries.iter().flat_map(|&x| [x, 0.0]).collect(),
        8 => entries.to_vec(),
        n => return Err(config_error(format!("factorize: expected 4 or 8 entries, found {n}"))),
    };
    if !reals.iter().all(|x| x.is_finite()) {
        return Err(config_error("factorize: non-finite entry"));
    }
    let g = Mat2::from_reals(&reals);
    let det = g.det();
    let det_err = (det - Complex::new(1.0, 0.0)).norm();
    if det_err > FACTORIZE_DET_TOL {
        return Err(config_error(format!("factorize: matrix is not unimodular (|det - 1| = {})", num(det_err))));
    }
    // Within tolerance: rescale onto det = 1 exactly before factoring.
    let g = g.scale(det.sqrt().inv());
    let (u, b) = iwasawa(&g).map_err(numerical_error)?;
    print_matrix("u", &u);
    print_matrix("b", &b);
    println!("residual = {}", num((u * b).max_abs_diff(&g)));
    Ok(())
}
