//! Command dispatch: `build` exports and `check` suites.

use std::fs;
use std::path::Path;

use big_complex::{build_f, FContext};
use generic_data::{GenericData, Specialization};
use groebner::{grade_of_specialization, Budget, GroebnerError};
use serde_json::{json, Value};
use verify::{
    betti_checks, betti_table, chainmap_checks, check_d_squared, decomposition_checks, duality_checks, exactness_checks, h0_checks, iso_checks, minimality_checks,
    reports_to_json, timed, CheckReport, Context,
};

use crate::config::{CheckId, ComplexChoice, RunConfig};
use crate::error::CliError;

/// Seeded trials for the exactness certificate.
pub const CERTIFICATE_TRIALS: usize = 5;
/// Random transvections for the basis-change isomorphisms.
pub const TRANSVECTIONS: usize = 5;

fn data(cfg: &RunConfig) -> Result<GenericData, CliError> {
    let d = GenericData::build_generic(cfg.n, cfg.d_u).map_err(|e| CliError::Usage(e.to_string()))?;
    if cfg.specialization == "generic" {
        return Ok(d);
    }
    let spec = Specialization::make(&cfg.specialization, cfg.n, cfg.seed, cfg.prime).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(spec.apply_data(&d))
}

fn context(cfg: &RunConfig) -> Result<Context, CliError> {
    Context::from_data(data(cfg)?).map_err(CliError::Build)
}

fn ranks(c: &big_complex::ChainComplex) -> Vec<(i64, usize)> {
    c.degrees().map(|r| (r, c.rank(r))).filter(|(_, k)| *k > 0).collect()
}

/// Complex export for `F` or `M` (default `M`).
pub fn cmd_build(cfg: &RunConfig) -> Result<Value, CliError> {
    cfg.validate()?;
    let header = |kind: &str, c: &big_complex::ChainComplex| {
        let rs = ranks(c);
        json!({
            "complex": kind,
            "n": cfg.n,
            "d_u": cfg.d_u,
            "specialization": cfg.specialization,
            "ranks": rs,
            "total_rank": c.total_rank(),
        })
    };
    match cfg.complex.unwrap_or(ComplexChoice::M) {
        ComplexChoice::F => {
            let f = build_f(&data(cfg)?);
            let mut v = header("F", &f);
            v["export"] = f.to_json();
            Ok(v)
        }
        ComplexChoice::M => {
            let ctx = context(cfg)?;
            let mut v = header("M", ctx.m());
            v["betti"] = json!(betti_table(ctx.m()).entries);
            v["export"] = ctx.minimal.to_json();
            Ok(v)
        }
    }
}

fn grade_reports(cfg: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let d = GenericData::build_generic(cfg.n, cfg.d_u).map_err(|e| CliError::Usage(e.to_string()))?;
    let spec = Specialization::make(&cfg.specialization, cfg.n, cfg.seed, cfg.prime).map_err(|e| CliError::Usage(e.to_string()))?;
    let expected = 2 * cfg.n;
    let mut report = None;
    let r = timed(|| match grade_of_specialization(&d, &spec, cfg.prime, Budget::default()) {
        Ok(g) => {
            let detail = format!("codim {} in {} variables ({}, {} generators, basis of {}), expected {expected}", g.codim, g.variables, g.specialization, g.generators, g.basis_size);
            CheckReport::from_bool("grade.codim", g.codim == expected, detail)
        }
        Err(e) => {
            report = Some(e);
            CheckReport::fail_with("grade.codim", "no basis")
        }
    });
    match report {
        Some(e @ GroebnerError::Budget { .. }) => Err(CliError::Budget(e.to_string())),
        Some(e) => Err(CliError::Usage(e.to_string())),
        None => Ok(vec![r]),
    }
}

fn tor_reports(cfg: &RunConfig, ctx: &Context) -> Result<Vec<CheckReport>, CliError> {
    if cfg.n < 3 {
        return Err(CliError::Usage("tor needs n >= 3".into()));
    }
    let c = FContext::new(&ctx.data);
    let g = tor_algebra::build_gamma(&c, &ctx.f, &ctx.minimal).map_err(|e| CliError::Build(e.to_string()))?;
    let square = timed(|| {
        let bad = tor_algebra::chain_square_residuals(&ctx.f, ctx.m(), &g).into_iter().find(|(_, m)| !m.is_zero());
        match bad {
            None => CheckReport::pass("tor.chain-square").with_detail("f∘γ = γ∘∂ in degrees 1 and 2"),
            Some((r, m)) => CheckReport::fail("tor.chain-square", verify::first_entry(r as i64, &m, ctx.f.module_ref(r as i64), None).expect("nonzero")),
        }
    });
    let pure = timed(|| {
        let bad = [2u8, 3].into_iter().flat_map(|fam| tor_algebra::pure_residuals(&c, &ctx.f, ctx.m(), &g, fam, cfg.n).into_iter().map(move |(r, m)| (fam, r, m))).find(|(_, _, m)| !m.is_zero());
        match bad {
            None => CheckReport::pass("tor.pure-families").with_detail(format!("pure blocks are chain maps through degree {}", cfg.n)),
            Some((fam, r, _)) => CheckReport::fail_with("tor.pure-families", format!("family {fam}, degree {r}: nonzero residual")),
        }
    });
    let hilbert = tor_algebra::hilbert_of_presentation(cfg.n).map_err(|e| CliError::Usage(e.to_string()))?;
    let product = timed(|| {
        let psi2 = ctx.minimal.psi.get(2).expect("degree 2");
        let sq = tor_algebra::tor1_square(psi2, &g);
        let ok = sq.matches && sq.quotient_dim as u64 == hilbert[2] && sq.dim_tor1 as u64 == hilbert[1];
        let detail = format!(
            "dim Tor₁ {}, kernel {} of {}, quotient {}, presentation {:?}; products of degree ≥ 3 need the unspecified extension of γ and are not computed",
            sq.dim_tor1, sq.kernel_dim, sq.dim_wedge2, sq.quotient_dim, hilbert
        );
        CheckReport::from_bool("tor.product-kernel", ok, detail)
    });
    Ok(vec![square, pure, product])
}

/// Reports of one named suite.
pub fn run_check(id: CheckId, cfg: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    cfg.validate()?;
    match id {
        CheckId::Grade => return grade_reports(cfg),
        CheckId::D2 if cfg.complex == Some(ComplexChoice::F) => {
            let f = build_f(&data(cfg)?);
            return Ok(vec![timed(|| check_d_squared("d2.F", &f))]);
        }
        _ => {}
    }
    let ctx = context(cfg)?;
    Ok(match id {
        CheckId::D2 => verify::d2_checks(&ctx, if cfg.complex == Some(ComplexChoice::M) { "M" } else { "both" }),
        CheckId::Decomposition => decomposition_checks(&ctx),
        CheckId::Chainmaps => chainmap_checks(&ctx, cfg.prime, cfg.seed),
        CheckId::Betti => betti_checks(&ctx),
        CheckId::Minimality => minimality_checks(&ctx),
        CheckId::Duality => duality_checks(&ctx),
        CheckId::H0 => h0_checks(&ctx),
        CheckId::Exactness => exactness_checks(&ctx, cfg.prime, cfg.seed, CERTIFICATE_TRIALS),
        CheckId::Isos => iso_checks(&ctx, TRANSVECTIONS, cfg.prime, cfg.seed),
        CheckId::Tor => tor_reports(cfg, &ctx)?,
        CheckId::Grade => unreachable!("handled above"),
    })
}

/// Run several suites; reports are sorted by id and timings cleared unless requested.
pub fn cmd_check(ids: &[CheckId], cfg: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let mut out = Vec::new();
    for &id in ids {
        out.extend(run_check(id, cfg)?);
    }
    if !cfg.timings {
        for r in &mut out {
            r.millis = 0;
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// 0 iff every report passed.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

/// Append reports to the JSON array at `path`, creating it if absent.
pub fn append_reports(path: &Path, reports: &[CheckReport]) -> Result<(), CliError> {
    let mut all: Vec<Value> = match fs::read_to_string(path) {
        Ok(s) => serde_json::from_str(&s).map_err(|e| CliError::Usage(format!("{} is not a JSON array: {e}", path.display())))?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let new = reports_to_json(reports);
    all.extend(new.as_array().cloned().unwrap_or_default());
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string_pretty(&all).expect("serializable") + "\n")?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// One line per report, with the witness on failure.
pub fn render_text(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = serde_json::to_value(r.status).expect("serializable");
        s.push_str(&format!("{:<12} {}", status.as_str().unwrap_or("?"), r.id));
        if let Some(w) = &r.witness {
            s.push_str(&format!("  [degree {} row {} col {}: {}]", w.degree, w.row, w.col, w.value));
        } else if let Some(d) = &r.detail {
            s.push_str(&format!("  {d}"));
        }
        s.push('\n');
    }
    s
}
