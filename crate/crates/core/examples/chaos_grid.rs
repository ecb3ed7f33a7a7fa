//! zeros_N over a coarse grid of Standard Map seeds at r = 1.4, written as
//! CSV and as a grayscale image (dark = chaotic).
//!
//! cargo run --release --example chaos_grid -- [out_dir]

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use birkhoff::classify::{classify_grid, Observable, Region};
use birkhoff::numerics::make_weights;

fn main() -> birkhoff::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().display().to_string()));
    let grid = classify_grid(Region::torus(), 48, 48, Observable::SinXY, 1.4, &make_weights::<f64>(5_000, 1)?)?;
    let header = vec!["chaos_grid example: r=1.4 N=5000 f=sin_xy".to_string()];
    grid.write_csv(BufWriter::new(File::create(dir.join("grid.csv"))?), &header)?;
    grid.write_pgm(BufWriter::new(File::create(dir.join("grid.pgm"))?), &header)?;

    let hist = grid.histogram(15);
    println!("zeros histogram (1 digit per bin):");
    for (i, c) in hist.iter().enumerate() {
        println!("{i:>3} {c:>5} {}", "#".repeat(c / 8));
    }
    println!("wrote {}", dir.join("grid.pgm").display());
    Ok(())
}
