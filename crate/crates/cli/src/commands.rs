use serde_json::{json, Value as Json};

use fraciter::abel_complex::{AbelChart, BranchCut};
use fraciter::corrigendum::{corrigendum_map, verify_identities};
use fraciter::lambda3::{lambda3_orbit, scan, NeutralKind};
use fraciter::linearize::{frac_iterate_complex, KoenigChart};
use fraciter::maps::orbit;
use fraciter::numerics::{parse_complex, parse_exact, parse_rational};
use fraciter::report::Check;
use fraciter::verify;
use fraciter::{
    BigRational, Branch, Complex, Error, MapKind, MapSpec, ModifiedAbelChart, Precision, Real,
    Suite, Value,
};

use crate::output::{num_str, real, Output, Row};
use crate::{BranchName, Command, KindName, MapArgs, MapName, SuiteName};

const MAX_ORDER: usize = 64;

pub fn dispatch(cmd: &Command, prec: Precision) -> Result<Output, Error> {
    match cmd {
        Command::Orbit { map, x0, n } => cmd_orbit(map, x0, *n, prec),
        Command::Frac { map, x0, t, complex } => cmd_frac(map, x0, t, *complex, prec),
        Command::Koenig { map, order, branch } => cmd_koenig(map, *order, *branch, prec),
        Command::AbelCheck { z } => cmd_abel(z, prec),
        Command::Kappa { map } => cmd_kappa(map, prec),
        Command::Verify { suite } => cmd_verify(*suite, prec),
        Command::Corrigendum { map, x } => cmd_corrigendum(map.as_deref(), x.as_deref(), prec),
        Command::Lambda3 {
            kind,
            n,
            exact,
            exact_until,
            scale,
            stride,
        } => cmd_lambda3(*kind, *n, *exact, *exact_until, *scale, *stride, prec),
    }
}

fn base_config(prec: Precision) -> Row {
    let mut c = Row::new();
    c.insert("digits".into(), json!(prec.digits));
    c.insert("guard".into(), json!(prec.guard));
    c
}

fn map_kind(args: &MapArgs) -> Result<MapKind, Error> {
    match (args.map, &args.lambda) {
        (MapName::Logistic, l) => {
            let l = parse_rational(l.as_deref().unwrap_or("5/2"))?;
            Ok(MapKind::Logistic(l))
        }
        (_, Some(_)) => Err(Error::InvalidInput(
            "--lambda only applies to the logistic map".into(),
        )),
        (MapName::Golden, None) => Ok(MapKind::Golden),
        (MapName::Silver, None) => Ok(MapKind::Silver),
        (MapName::Cosine, None) => Ok(MapKind::Cosine),
    }
}

fn map_config(kind: &MapKind, prec: Precision) -> Row {
    let mut c = Row::new();
    c.insert("map".into(), json!(kind.name()));
    if let Some(l) = kind.lambda() {
        c.insert("lambda".into(), json!(l.to_string()));
    }
    c.extend(base_config(prec));
    c
}

fn parse_seed(s: &str) -> Result<Value, Error> {
    Ok(Value::Exact(parse_exact(s)?))
}

fn show(x: &Real, prec: Precision) -> Json {
    real(x, prec.trusted_digits())
}

fn cmd_orbit(args: &MapArgs, x0: &str, n: usize, prec: Precision) -> Result<Output, Error> {
    let kind = map_kind(args)?;
    let spec = MapSpec::new(kind.clone(), prec)?;
    let table = orbit(&spec, &parse_seed(x0)?, n)?;
    let mut config = map_config(&kind, prec);
    config.insert("x0".into(), json!(x0));
    config.insert("n".into(), json!(n));
    let mut out = Output::new("orbit", config);
    for e in &table.entries {
        let mut r = Row::new();
        r.insert("index".into(), json!(e.index.to_string()));
        r.insert("value".into(), show(&e.value, prec));
        if let Some(q) = &e.exact {
            r.insert("exact_form".into(), json!(q.exact_form()));
        }
        out.results.push(r);
    }
    Ok(out)
}

fn cmd_frac(
    args: &MapArgs,
    x0: &str,
    t: &str,
    complex: bool,
    prec: Precision,
) -> Result<Output, Error> {
    let kind = map_kind(args)?;
    let spec = MapSpec::new(kind.clone(), prec)?;
    let tq: BigRational = parse_rational(t)?;
    let mut config = map_config(&kind, prec);
    config.insert("x0".into(), json!(x0));
    config.insert("t".into(), json!(tq.to_string()));
    config.insert("complex".into(), json!(complex));
    let mut out = Output::new("frac", config);
    let mut r = Row::new();
    r.insert("map".into(), json!(kind.name()));
    r.insert("x0".into(), json!(x0));
    r.insert("t".into(), json!(tq.to_string()));
    r.insert("digits".into(), json!(prec.digits));
    if complex {
        let z = parse_complex(x0, prec.bits())?;
        let w = frac_iterate_complex(&spec, &z, &tq)?;
        r.insert("re".into(), show(&w.re, prec));
        r.insert("im".into(), show(&w.im, prec));
    } else {
        let chart = ModifiedAbelChart::new(&spec)?;
        let res = chart.frac_iterate(&parse_seed(x0)?, &tq)?;
        r.insert("value".into(), show(&res.value, prec));
        if let Some(q) = &res.exact {
            r.insert("exact_form".into(), json!(q.exact_form()));
        }
        r.insert(
            "branch_side".into(),
            json!(res.side.map_or("fixed", |s| s.name())),
        );
        r.insert("residual_check".into(), num_str(res.residual.to_decimal(3)));
        let mut res_row = Row::new();
        res_row.insert("abel".into(), num_str(res.residual.to_decimal(3)));
        out.residuals = Some(res_row);
    }
    out.results.push(r);
    Ok(out)
}

fn cmd_koenig(
    args: &MapArgs,
    order: usize,
    branch: BranchName,
    prec: Precision,
) -> Result<Output, Error> {
    if !(2..=MAX_ORDER).contains(&order) {
        return Err(Error::InvalidInput(format!(
            "order must be between 2 and {MAX_ORDER}"
        )));
    }
    let kind = map_kind(args)?;
    let spec = MapSpec::new(kind.clone(), prec)?;
    let chart = KoenigChart::with_order(&spec, order)?;
    let branch = match branch {
        BranchName::Even => Branch::Even,
        BranchName::Odd => Branch::Odd,
    };
    let series = chart.series(branch);
    let reals = series.to_real(prec.bits());
    let mut config = map_config(&kind, prec);
    config.insert("order".into(), json!(order));
    config.insert("branch".into(), json!(branch));
    let mut out = Output::new("koenig", config);
    for j in 2..=order {
        let mut r = Row::new();
        r.insert("j".into(), json!(j));
        r.insert("gamma".into(), show(reals.coeff(j), prec));
        if let Some(ex) = series.exact() {
            r.insert("exact_form".into(), json!(ex.coeff(j).exact_form()));
        }
        out.results.push(r);
    }
    Ok(out)
}

fn checks_output(command: &'static str, config: Row, checks: &[(String, Check)]) -> Output {
    let mut out = Output::new(command, config);
    for (group, c) in checks {
        let mut r = Row::new();
        r.insert("suite".into(), json!(group));
        r.insert("name".into(), json!(c.name));
        r.insert("pass".into(), json!(c.pass));
        r.insert(
            "residual".into(),
            c.residual.as_ref().map_or(Json::Null, |x| num_str(x.to_decimal(3))),
        );
        r.insert("detail".into(), json!(c.detail));
        out.results.push(r);
    }
    out.pass = Some(checks.iter().all(|(_, c)| c.pass));
    out
}

fn cmd_abel(points: &[String], prec: Precision) -> Result<Output, Error> {
    let mut config = base_config(prec);
    config.insert("z".into(), json!(points));
    if points.is_empty() {
        let checks: Vec<(String, Check)> = verify::abel_branch_cuts(prec)?
            .into_iter()
            .map(|c| ("abel".to_string(), c))
            .collect();
        let mut out = checks_output("abel-check", config, &checks);
        let mut res = Row::new();
        let m = fraciter::report::max_residual(
            &checks.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>(),
        );
        res.insert("abel".into(), m.map_or(Json::Null, |x| num_str(x.to_decimal(3))));
        out.residuals = Some(res);
        return Ok(out);
    }
    let chart = AbelChart::new(prec);
    let up = BranchCut::upper(prec);
    let down = BranchCut::lower(prec);
    let mut out = Output::new("abel-check", config);
    for s in points {
        let z = parse_complex(s, prec.bits())?;
        let pos = chart.disk().position(&z, &prec.snap_radius());
        let mut r = Row::new();
        r.insert("z".into(), json!(s));
        r.insert("disk".into(), json!(format!("{pos:?}").to_lowercase()));
        let fu = chart.abel(&z, &up)?;
        let fd = chart.abel(&z, &down)?;
        push_complex(&mut r, "f_upper", &fu, prec);
        push_complex(&mut r, "f_lower", &fd, prec);
        let jump = &fu - &fd;
        push_complex(&mut r, "jump", &jump, prec);
        let cut = match pos {
            fraciter::DiskPosition::Inside => Some(&up),
            fraciter::DiskPosition::Outside => Some(&down),
            fraciter::DiskPosition::Boundary => None,
        };
        let resid = match cut {
            Some(c) => num_str(chart.residual(&z, c)?.abs().to_decimal(3)),
            None => Json::Null,
        };
        r.insert("residual".into(), resid);
        out.results.push(r);
    }
    Ok(out)
}

fn push_complex(r: &mut Row, key: &str, z: &Complex, prec: Precision) {
    r.insert(format!("{key}_re"), show(&z.re, prec));
    r.insert(format!("{key}_im"), show(&z.im, prec));
}

fn cmd_kappa(args: &MapArgs, prec: Precision) -> Result<Output, Error> {
    let kind = map_kind(args)?;
    let spec = MapSpec::new(kind.clone(), prec)?;
    let chart = ModifiedAbelChart::new(&spec)?;
    let (c_g, c_h) = chart.normalization();
    let (y_g, y_h) = chart.reference_points();
    let mut out = Output::new("kappa", map_config(&kind, prec));
    let mut r = Row::new();
    r.insert("kappa".into(), show(chart.kappa(), prec));
    r.insert("delta".into(), json!(fraciter::abel_modified::delta().to_string()));
    r.insert("c_g".into(), show(c_g, prec));
    r.insert("c_h".into(), show(c_h, prec));
    r.insert("y_g".into(), show(y_g, prec));
    r.insert("y_h".into(), show(y_h, prec));
    let closed = match kind {
        MapKind::Golden => Some("1+phi"),
        MapKind::Silver => Some("5/7+4/7*psi"),
        _ => None,
    };
    if let Some(form) = closed {
        let want = parse_exact(form)?.to_real(prec.bits()).ln();
        r.insert("closed_form".into(), json!(format!("ln({form})")));
        let mut res = Row::new();
        res.insert(
            "closed_form".into(),
            num_str((chart.kappa() - &want).abs().to_decimal(3)),
        );
        out.residuals = Some(res);
    }
    out.results.push(r);
    Ok(out)
}

fn cmd_verify(suite: SuiteName, prec: Precision) -> Result<Output, Error> {
    let suite = match suite {
        SuiteName::Golden => Suite::Golden,
        SuiteName::Silver => Suite::Silver,
        SuiteName::Cosine => Suite::Cosine,
        SuiteName::Logistic => Suite::Logistic,
        SuiteName::Abel => Suite::Abel,
        SuiteName::Corrigendum => Suite::Corrigendum,
        SuiteName::Lambda3 => Suite::Lambda3,
        SuiteName::All => Suite::All,
    };
    let report = verify::run(suite, prec)?;
    let mut config = base_config(prec);
    config.insert("suite".into(), json!(suite.name()));
    let checks: Vec<(String, Check)> = report
        .suites
        .iter()
        .flat_map(|s| s.checks.iter().map(|c| (s.suite.name().to_string(), c.clone())))
        .collect();
    let mut out = checks_output("verify", config, &checks);
    let mut res = Row::new();
    for s in &report.suites {
        if let Some(m) = &s.max_residual {
            res.insert(s.suite.name().into(), num_str(m.to_decimal(3)));
        }
    }
    out.residuals = Some(res);
    Ok(out)
}

fn cmd_corrigendum(map: Option<&str>, x: Option<&str>, prec: Precision) -> Result<Output, Error> {
    let mut config = base_config(prec);
    if let (Some(name), Some(x)) = (map, x) {
        config.insert("map".into(), json!(name));
        config.insert("x".into(), json!(x));
        let m = corrigendum_map(name)?;
        let v = m.apply(&parse_exact(x)?)?;
        let mut out = Output::new("corrigendum", config);
        let mut r = Row::new();
        r.insert("map".into(), json!(name));
        r.insert("formula".into(), json!(m.to_string()));
        r.insert("x".into(), json!(x));
        r.insert("value".into(), show(&v.to_real(prec.bits()), prec));
        r.insert("exact_form".into(), json!(v.exact_form()));
        out.results.push(r);
        return Ok(out);
    }
    let checks: Vec<(String, Check)> = verify_identities()?
        .into_iter()
        .map(|c| ("corrigendum".to_string(), c))
        .collect();
    Ok(checks_output("corrigendum", config, &checks))
}

fn cmd_lambda3(
    kind: KindName,
    n: usize,
    exact: bool,
    exact_until: usize,
    scale: bool,
    stride: Option<usize>,
    prec: Precision,
) -> Result<Output, Error> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let kind = match kind {
        KindName::U => NeutralKind::U,
        KindName::V => NeutralKind::V,
    };
    let stride = stride.unwrap_or((n / 1000).max(1));
    if stride == 0 {
        return Err(Error::InvalidInput("stride must be positive".into()));
    }
    let bits = prec.bits();
    let mut config = base_config(prec);
    config.insert("kind".into(), json!(kind.name()));
    config.insert("n".into(), json!(n));
    config.insert("exact".into(), json!(exact));
    config.insert("stride".into(), json!(stride));
    let mut out = Output::new("lambda3", config);
    let keep = |k: usize| k.is_multiple_of(stride) || k == n;
    let row = |k: usize, value: Json, x: &Real| {
        let mut r = Row::new();
        r.insert("k".into(), json!(k));
        r.insert("value".into(), value);
        if scale {
            let s = Real::from_i64(k as i64, bits).sqrt() * x;
            r.insert("sqrtk_scaled".into(), show(&s, prec));
        }
        r
    };
    let exact_n = if exact { exact_until.min(n) } else { 0 };
    if exact_n > 0 {
        let o = lambda3_orbit(kind, exact_n, &prec, exact_until)?;
        for (k, v) in o.entries.iter().enumerate() {
            if keep(k) {
                let cell = match v {
                    Value::Exact(q) => json!(q.exact_form()),
                    Value::Approx(x) => show(x, prec),
                };
                out.results.push(row(k, cell, &v.to_real(bits)));
            }
        }
    }
    scan(kind, n, bits, |k, x| {
        if (exact_n == 0 || k > exact_n) && keep(k) {
            out.results.push(row(k, show(x, prec), x));
        }
    });
    Ok(out)
}
