//! Text formats: trajectories and section points as CSV with `#` header
//! lines, and the provenance header shared by every output file.

use std::io::{Read, Write};

use num_complex::Complex;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::numerics::Real;
use crate::systems::SectionPoint;
use crate::trajectory::{Provenance, Trajectory};

/// Header lines for an output file: a hash of the job configuration, the
/// configuration itself and the trajectory provenance, if any.
pub fn header_lines(config_json: &str, provenance: Option<&Provenance>) -> Vec<String> {
    let hash = Sha256::digest(config_json.as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    let mut out = vec![format!("config_sha256 {hex}"), format!("config {config_json}")];
    if let Some(p) = provenance {
        let params: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push(format!("source {} {}", p.system, params.join(" ")));
    }
    out
}

fn write_header<W: Write>(w: &mut W, header: &[String]) -> Result<()> {
    for h in header {
        writeln!(w, "# {h}")?;
    }
    Ok(())
}

/// `n,x,y` rows with every coordinate at the print precision of `R`.
pub fn write_trajectory_csv<R: Real, W: Write>(mut w: W, traj: &Trajectory<R>, header: &[String]) -> Result<()> {
    write_header(&mut w, header)?;
    let d = R::print_digits();
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["n", "x", "y"])?;
    for (n, p) in traj.points.iter().enumerate() {
        csv.write_record([n.to_string(), p.re.to_sci(d), p.im.to_sci(d)])?;
    }
    csv.flush()?;
    Ok(())
}

/// Reads `n,x,y` rows, skipping `#` lines. Rows must be numbered
/// `0, 1, 2, ...`. Section files (`n,q1,p1,t`) are read as `x = q1`,
/// `y = p1`.
pub fn read_trajectory_csv<R: Real, Rd: Read>(r: Rd) -> Result<Trajectory<R>> {
    let mut csv = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(r);
    let headers = csv.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("trajectory file lacks a `{name}` column")))
    };
    let (cx, cy) = if headers.iter().any(|h| h == "q1") { (col("q1")?, col("p1")?) } else { (col("x")?, col("y")?) };
    let cn = col("n")?;
    let mut points = Vec::new();
    for (i, rec) in csv.records().enumerate() {
        let rec = rec?;
        let field = |c: usize| rec.get(c).ok_or_else(|| Error::Parse(format!("row {i} is short")));
        let n: usize = field(cn)?.parse().map_err(|e| Error::Parse(format!("row {i}: n: {e}")))?;
        if n != i {
            return Err(Error::Parse(format!("row {i} is numbered {n}")));
        }
        let num = |s: &str| R::parse_str(s).ok_or_else(|| Error::Parse(format!("row {i}: bad number `{s}`")));
        points.push(Complex::new(num(field(cx)?)?, num(field(cy)?)?));
    }
    if points.is_empty() {
        return Err(Error::InsufficientData("trajectory file has no rows".into()));
    }
    let rows = points.len();
    Ok(Trajectory::new(points, Provenance::new("file").with("rows", rows)))
}

/// `n,q1,p1,t` rows for Poincaré section points.
pub fn write_section_csv<R: Real, W: Write>(mut w: W, pts: &[SectionPoint<R>], header: &[String]) -> Result<()> {
    write_header(&mut w, header)?;
    let d = R::print_digits();
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["n", "q1", "p1", "t"])?;
    for (n, p) in pts.iter().enumerate() {
        csv.write_record([n.to_string(), p.q1.to_sci(d), p.p1.to_sci(d), p.time.to_sci(d)])?;
    }
    csv.flush()?;
    Ok(())
}
