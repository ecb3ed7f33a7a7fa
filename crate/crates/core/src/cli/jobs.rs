use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use num_complex::Complex;

use super::{config_json, Cli, Command, ConjugacyArgs, Embed3Args, GridArgs, LyapunovArgs, RotnumArgs, SourceArgs};
use super::{ThreebodyArgs, WbaArgs};
use crate::classify::{self, Observable, Region};
use crate::conjugacy::{self, Parity};
use crate::error::{Error, Result};
use crate::io::{header_lines, read_trajectory_csv, write_section_csv, write_trajectory_csv};
use crate::numerics::{golden, make_weights, uniform_average, weighted_birkhoff, DoubleDouble, Precision, Real};
use crate::rotation::{self, RotationReport};
use crate::systems::{CurveKind, CurveSpec, StandardMap, StdMapState, ThreeBody};
use crate::trajectory::{Point, Provenance, Trajectory};

pub(super) fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let ctx = Ctx { config: config_json(cli), json: cli.json };
    macro_rules! dispatch {
        ($job:ident, $args:expr) => {
            match cli.precision {
                Precision::Fast => $job::<f64>(&ctx, $args, out),
                Precision::High => $job::<DoubleDouble>(&ctx, $args, out),
            }
        };
    }
    match &cli.command {
        Command::Wba(a) => dispatch!(wba, a),
        Command::Rotnum(a) => dispatch!(rotnum, a),
        Command::Conjugacy(a) => dispatch!(conjugacy_job, a),
        Command::Grid(a) => dispatch!(grid, a),
        Command::Embed3(a) => dispatch!(embed3, a),
        Command::Threebody(a) => dispatch!(threebody, a),
        Command::Lyapunov(a) => dispatch!(lyapunov, a),
    }
}

struct Ctx {
    config: String,
    json: bool,
}

impl Ctx {
    fn header(&self, prov: Option<&Provenance>) -> Vec<String> {
        header_lines(&self.config, prov)
    }
}

/// Ordered key/value report, printed as text or JSON.
struct Report(Vec<(String, String)>);

impl Report {
    fn new() -> Self {
        Report(Vec::new())
    }

    fn put(&mut self, k: &str, v: impl ToString) -> &mut Self {
        self.0.push((k.to_string(), v.to_string()));
        self
    }

    fn emit(&self, ctx: &Ctx, out: &mut dyn Write) -> Result<()> {
        if ctx.json {
            let mut m = serde_json::Map::new();
            for (k, v) in &self.0 {
                m.insert(k.clone(), serde_json::Value::String(v.clone()));
            }
            let mut doc = serde_json::Map::new();
            doc.insert("header".into(), serde_json::Value::from(ctx.header(None)));
            doc.insert("report".into(), serde_json::Value::Object(m));
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(doc)).expect("report serializes")
            )?;
        } else {
            for h in ctx.header(None) {
                writeln!(out, "# {h}")?;
            }
            for (k, v) in &self.0 {
                writeln!(out, "{k}: {v}")?;
            }
        }
        Ok(())
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn parse_real<R: Real>(s: &str) -> Result<R> {
    R::parse_str(s).ok_or_else(|| Error::Parse(format!("bad number `{s}`")))
}

fn parse_pair<R: Real>(s: &str) -> Result<(R, R)> {
    let mut it = s.split(',');
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((parse_real(a)?, parse_real(b)?)),
        _ => Err(Error::Parse(format!("expected `x,y`, got `{s}`"))),
    }
}

fn parse_point<R: Real>(s: &str) -> Result<Point<R>> {
    let (x, y) = parse_pair(s)?;
    Ok(Complex::new(x, y))
}

fn sci<R: Real>(v: R) -> String {
    v.to_sci(R::print_digits())
}

fn point_str<R: Real>(p: Point<R>) -> String {
    format!("{},{}", sci(p.re), sci(p.im))
}

fn weights<R: Real>(n: usize, p: u32) -> Result<crate::numerics::WeightScheme<R>> {
    make_weights(n, p)
}

/// Base point choice before the trajectory exists.
enum Base<R> {
    At(Point<R>),
    Centroid,
}

fn parse_base<R: Real>(s: Option<&str>, src: &SourceArgs) -> Result<Base<R>> {
    match s {
        Some("centroid") => Ok(Base::Centroid),
        Some(s) => Ok(Base::At(parse_point(s)?)),
        None if src.standard_map.is_some() => Ok(Base::At(Complex::new(R::pi(), R::zero()))),
        None => Ok(Base::Centroid),
    }
}

/// Trajectory of `len` points; Standard Map orbits are unwrapped around
/// `unwrap_center`.
fn source_trajectory<R: Real>(src: &SourceArgs, len: usize, unwrap_center: Point<R>) -> Result<Trajectory<R>> {
    let sources = [src.curve.is_some(), src.input.is_some(), src.standard_map.is_some()];
    if sources.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::Parse("give exactly one of --curve, --input, --standard-map".into()));
    }
    if let Some(kind) = &src.curve {
        let kind: CurveKind = kind.parse()?;
        let rho = match &src.curve_rho {
            Some(s) => parse_real(s)?,
            None => golden(),
        };
        let spec = match kind {
            CurveKind::Fish => CurveSpec::fish(rho),
            CurveKind::Flower => CurveSpec::flower(rho),
            CurveKind::PureCircle => CurveSpec::pure_circle(rho),
            CurveKind::Custom => {
                if src.terms.is_empty() {
                    return Err(Error::Parse("a custom curve needs at least one --term k,re,im".into()));
                }
                let mut terms = Vec::new();
                for t in &src.terms {
                    let f: Vec<&str> = t.split(',').collect();
                    if f.len() != 3 {
                        return Err(Error::Parse(format!("expected `k,re,im`, got `{t}`")));
                    }
                    let k: i32 = f[0].parse().map_err(|e| Error::Parse(format!("term index: {e}")))?;
                    terms.push((k, Complex::new(parse_real(f[1])?, parse_real(f[2])?)));
                }
                CurveSpec::custom(terms, rho)
            }
        };
        return Ok(spec.trajectory(len));
    }
    if let Some(path) = &src.input {
        let t: Trajectory<R> = read_trajectory_csv(BufReader::new(File::open(path)?))?;
        if t.len() < len {
            return Err(Error::InsufficientData(format!(
                "{} has {} points, the job needs {len}",
                path.display(),
                t.len()
            )));
        }
        return Ok(t);
    }
    let r = src.standard_map.expect("one source is present");
    let seed = src.seed.as_deref().ok_or_else(|| Error::Parse("--standard-map needs --seed x,y".into()))?;
    let (x, y) = parse_pair::<R>(seed)?;
    let map = StandardMap::new(R::from_f64(r));
    Ok(map.trajectory_about(StdMapState::new(x, y), len, unwrap_center))
}

/// Shared front half of `rotnum` and `conjugacy`.
fn rotation_stage<R: Real>(a: &RotnumArgs) -> Result<(Trajectory<R>, Point<R>, RotationReport<R>)> {
    if a.k < 2 {
        return Err(Error::Parse("--K must be at least 2".into()));
    }
    let base = parse_base::<R>(a.base.as_deref(), &a.source)?;
    let unwrap_center = match base {
        Base::At(p) => p,
        Base::Centroid => Complex::new(R::pi(), R::zero()),
    };
    let traj = source_trajectory(&a.source, a.n + a.k - 1, unwrap_center)?;
    let p = match base {
        Base::At(p) => p,
        Base::Centroid => traj.truncated(a.n + a.k - 1).centroid(),
    };
    let scheme = weights(a.n, a.p)?;
    let rep = rotation::rotation_number(&traj, p, a.k, &scheme)?;
    Ok((traj, p, rep))
}

fn rotation_entries<R: Real>(rep: &mut Report, p: Point<R>, r: &RotationReport<R>, prov: &Provenance) {
    let digits = if r.fluctuation > 0.0 { format!("{:.1}", -r.fluctuation.log10()) } else { "exact".into() };
    rep.put("source", &prov.system)
        .put("precision", R::PRECISION)
        .put("base_point", point_str(p))
        .put("rho", sci(r.rho))
        .put("rho_raw", sci(r.rho_raw))
        .put("winding", r.winding)
        .put("K", r.delay)
        .put("N", r.n)
        .put("p", r.p)
        .put("max_residual", format!("{:.3e}", r.max_residual))
        .put("fluctuation", format!("{:.3e}", r.fluctuation))
        .put("stable_digits", digits);
}

fn rotnum<R: Real>(ctx: &Ctx, a: &RotnumArgs, out: &mut dyn Write) -> Result<()> {
    let (traj, p, r) = rotation_stage::<R>(a)?;
    if let Some(path) = &a.traj_out {
        write_trajectory_csv(create(path)?, &traj, &ctx.header(Some(&traj.provenance)))?;
    }
    let mut rep = Report::new();
    rotation_entries(&mut rep, p, &r, &traj.provenance);
    rep.emit(ctx, out)
}

fn conjugacy_job<R: Real>(ctx: &Ctx, a: &ConjugacyArgs, out: &mut dyn Write) -> Result<()> {
    let mut rep = Report::new();
    let (traj, p, rho) = match &a.rho {
        Some(s) => {
            let base = parse_base::<R>(a.rot.base.as_deref(), &a.rot.source)?;
            let c = match base {
                Base::At(p) => p,
                Base::Centroid => Complex::new(R::pi(), R::zero()),
            };
            let traj = source_trajectory(&a.rot.source, a.rot.n + a.rot.k - 1, c)?;
            let p = if let Base::At(p) = base { p } else { traj.centroid() };
            rep.put("source", &traj.provenance.system).put("precision", R::PRECISION);
            (traj, p, parse_real::<R>(s)?)
        }
        None => {
            let (traj, p, r) = rotation_stage::<R>(&a.rot)?;
            rotation_entries(&mut rep, p, &r, &traj.provenance);
            (traj, p, r.rho)
        }
    };
    let center = match &a.center {
        Some(s) => parse_point(s)?,
        None => p,
    };
    let n = a.rot.n;
    if traj.len() < n {
        return Err(Error::InsufficientData(format!("{} trajectory points, need N = {n}", traj.len())));
    }
    let samples = conjugacy::conjugacy_samples(&traj.truncated(n), rho, center)?;
    let model = conjugacy::build_model(&samples, a.kmax, &weights(n, a.rot.p)?)?;
    let fit = conjugacy::analyticity_fit(&model, Parity::Even);

    rep.put("center", point_str(center))
        .put("rho_used", sci(model.rho))
        .put("kmax", model.kmax)
        .put("noise_floor", format!("{:.3e}", model.noise_floor))
        .put("radial_noise_floor", format!("{:.3e}", model.radial_noise_floor))
        .put("tail_bound", format!("{:.3e}", model.tail_bound()));
    match fit {
        Ok(f) => {
            rep.put("decay_beta", format!("{:.6}", f.beta))
                .put("decay_r_squared", format!("{:.6}", f.r_squared))
                .put("decay_points", f.points)
                .put("real_analytic", f.real_analytic());
        }
        Err(e) => {
            rep.put("decay_fit", e.to_string()).put("real_analytic", false);
        }
    }
    for &k in &a.predict {
        rep.put(&format!("predict_{k}"), point_str(model.predict(k)?));
    }
    let header = ctx.header(Some(&traj.provenance));
    if let Some(path) = &a.coeffs {
        model.write_coefficients_csv(create(path)?, &header)?;
    }
    if let Some(path) = &a.model {
        let mut w = create(path)?;
        for h in &header {
            writeln!(w, "# {h}")?;
        }
        model.save(&mut w)?;
        w.flush()?;
    }
    rep.emit(ctx, out)
}

fn observable(s: &str) -> Result<Observable> {
    s.parse()
}

fn wba<R: Real>(ctx: &Ctx, a: &WbaArgs, out: &mut dyn Write) -> Result<()> {
    let (x, y) = parse_pair::<R>(&a.seed)?;
    let f = observable(&a.f)?;
    let map = StandardMap::new(R::from_f64(a.r));
    let values: Vec<R> = map.orbit(StdMapState::new(x, y), 2 * a.n).into_iter().map(|s| f.eval(s)).collect();
    let scheme = weights(a.n, a.p)?;
    let wb = weighted_birkhoff(&values[..a.n], &scheme)?;
    let b = uniform_average(&values[..a.n])?;
    let z = classify::zeros_n(&values, &scheme)?;
    let mut rep = Report::new();
    rep.put("precision", R::PRECISION)
        .put("f", f)
        .put("N", a.n)
        .put("p", a.p)
        .put("wb", sci(wb))
        .put("birkhoff", sci(b))
        .put("delta", sci(z.delta))
        .put("zeros", format!("{:.3}", z.zeros))
        .put("capped", z.capped);
    rep.emit(ctx, out)
}

fn parse_region(s: Option<&str>) -> Result<Region> {
    let Some(s) = s else { return Ok(Region::torus()) };
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| Error::Parse(format!("region: {e}"))))
        .collect::<Result<_>>()?;
    if v.len() != 4 || !(v[0] < v[1] && v[2] < v[3]) {
        return Err(Error::Parse(format!("expected `x0,x1,y0,y1` with x0 < x1, y0 < y1, got `{s}`")));
    }
    Ok(Region { x0: v[0], x1: v[1], y0: v[2], y1: v[3] })
}

fn parse_res(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once('x').ok_or_else(|| Error::Parse(format!("expected `NXxNY`, got `{s}`")))?;
    let p = |t: &str| t.parse::<usize>().map_err(|e| Error::Parse(format!("resolution: {e}")));
    Ok((p(a)?, p(b)?))
}

fn grid<R: Real>(ctx: &Ctx, a: &GridArgs, out: &mut dyn Write) -> Result<()> {
    let (nx, ny) = parse_res(&a.res)?;
    let region = parse_region(a.region.as_deref())?;
    let g = classify::classify_grid(region, nx, ny, observable(&a.f)?, a.r, &weights::<R>(a.n, a.p)?)?;
    let header = ctx.header(None);
    g.write_csv(create(&a.out)?, &header)?;
    if let Some(img) = &a.img {
        let mut w = create(img)?;
        g.write_pgm(&mut w, &header)?;
        w.flush()?;
    }
    let hist = g.histogram(g.cap as usize);
    let mut rep = Report::new();
    rep.put("precision", R::PRECISION)
        .put("cells", g.values.len())
        .put("cap", g.cap)
        .put("histogram", hist.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    rep.emit(ctx, out)
}

fn embed3<R: Real>(ctx: &Ctx, a: &Embed3Args, out: &mut dyn Write) -> Result<()> {
    let mut seeds = Vec::new();
    for s in &a.seed {
        let (x, y) = parse_pair::<R>(s)?;
        seeds.push(StdMapState::new(x, y));
    }
    if let Some(c) = a.diagonal {
        seeds.extend(classify::diagonal_seeds::<R>(c));
    }
    if seeds.is_empty() {
        return Err(Error::Parse("give --seed or --diagonal".into()));
    }
    let fs = [observable(&a.f1)?, observable(&a.f2)?, observable(&a.f3)?];
    let scheme = if a.n == 1 { crate::numerics::WeightScheme::uniform(1)? } else { weights(a.n, a.p)? };
    let pts = classify::embed3(&seeds, fs, &StandardMap::new(R::from_f64(a.r)), &scheme)?;
    let mut w = create(&a.out)?;
    for h in ctx.header(None) {
        writeln!(w, "# {h}")?;
    }
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["x", "y", fs[0].as_str(), fs[1].as_str(), fs[2].as_str()])?;
    for (s, p) in seeds.iter().zip(&pts) {
        csv.write_record([sci(s.x), sci(s.y), sci(p[0]), sci(p[1]), sci(p[2])])?;
    }
    csv.flush()?;
    let mut rep = Report::new();
    rep.put("precision", R::PRECISION).put("seeds", seeds.len()).put("N", a.n);
    rep.emit(ctx, out)
}

fn threebody<R: Real>(ctx: &Ctx, a: &ThreebodyArgs, out: &mut dyn Write) -> Result<()> {
    let (q1, p1) = parse_pair::<R>(&a.seed)?;
    let sys = ThreeBody::new(R::from_f64(a.mu));
    let h0 = R::from_f64(a.h);
    let s0 = sys.section_seed(q1, p1, h0)?;
    let tol = crate::systems::section_tolerance::<R>();
    let pts = sys.poincare_returns(&s0, a.returns, R::from_f64(a.step), tol, a.max_time)?;
    let mut drift = 0.0f64;
    for p in &pts {
        drift = drift.max(((sys.hamiltonian(&p.state)? - h0) / h0).abs().to_f64());
    }
    let prov = Provenance::new("three_body")
        .with("mu", a.mu)
        .with("H", a.h)
        .with("step", a.step)
        .with("q1", a.seed.split(',').next().unwrap_or(""))
        .with("p1", a.seed.split(',').nth(1).unwrap_or(""));
    let mut w = create(&a.out)?;
    write_section_csv(&mut w, &pts, &ctx.header(Some(&prov)))?;
    w.flush()?;
    let mut rep = Report::new();
    rep.put("precision", R::PRECISION)
        .put("returns", pts.len())
        .put("final_time", sci(pts.last().map(|p| p.time).unwrap_or_else(R::zero)))
        .put("max_relative_energy_drift", format!("{drift:.3e}"));
    rep.emit(ctx, out)
}

fn lyapunov<R: Real>(ctx: &Ctx, a: &LyapunovArgs, out: &mut dyn Write) -> Result<()> {
    let (x, y) = parse_pair::<R>(&a.seed)?;
    let map = StandardMap::new(R::from_f64(a.r));
    let l = classify::lyapunov(StdMapState::new(x, y), &map, &weights(a.n, a.p)?, !a.uniform)?;
    let mut rep = Report::new();
    rep.put("precision", R::PRECISION).put("N", a.n).put("weighted", !a.uniform).put("exponent", sci(l));
    rep.emit(ctx, out)
}
