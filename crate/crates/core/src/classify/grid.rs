use std::io::Write;

use rayon::prelude::*;

use super::{orbit_zeros, Observable};
use crate::error::{Error, Result};
use crate::numerics::{Real, WeightScheme};
use crate::systems::{StandardMap, StdMapState};

/// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Region {
    /// The whole torus `[0, 2π]²`.
    pub fn torus() -> Self {
        let t = std::f64::consts::TAU;
        Self { x0: 0.0, x1: t, y0: 0.0, y1: t }
    }
}

/// `zeros_N` sampled at cell centres.
///
/// Row-major with `y` increasing by row: `values[j * nx + i]` belongs to
/// `(x_i, y_j)`, `x_i = x0 + (i + 1/2)(x1 − x0)/nx`.
#[derive(Debug, Clone)]
pub struct ClassificationGrid {
    pub region: Region,
    pub nx: usize,
    pub ny: usize,
    pub n: usize,
    pub f: Observable,
    pub r: f64,
    /// Largest value a cell can hold in the precision used.
    pub cap: f64,
    pub values: Vec<f64>,
}

impl ClassificationGrid {
    pub fn x(&self, i: usize) -> f64 {
        self.region.x0 + (i as f64 + 0.5) * (self.region.x1 - self.region.x0) / self.nx as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.region.y0 + (j as f64 + 0.5) * (self.region.y1 - self.region.y0) / self.ny as f64
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.nx + i]
    }

    /// CSV rows `x,y,zeros` after `#` header lines.
    pub fn write_csv<W: Write>(&self, mut w: W, header: &[String]) -> Result<()> {
        for h in header {
            writeln!(w, "# {h}")?;
        }
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["x", "y", "zeros"])?;
        for j in 0..self.ny {
            for i in 0..self.nx {
                csv.write_record([
                    format!("{:.17e}", self.x(i)),
                    format!("{:.17e}", self.y(j)),
                    format!("{:.17e}", self.get(i, j)),
                ])?;
            }
        }
        csv.flush()?;
        Ok(())
    }

    /// 8-bit grayscale `P5` image, `zeros / cap` scaled to 0..255, largest
    /// `y` in the top row. Header comments carry `header`.
    pub fn write_pgm<W: Write>(&self, mut w: W, header: &[String]) -> Result<()> {
        writeln!(w, "P5")?;
        for h in header {
            writeln!(w, "# {}", h.replace('\n', " "))?;
        }
        write!(w, "{} {}\n255\n", self.nx, self.ny)?;
        let mut buf = Vec::with_capacity(self.nx * self.ny);
        for j in (0..self.ny).rev() {
            for i in 0..self.nx {
                let v = (self.get(i, j) / self.cap).clamp(0.0, 1.0);
                buf.push((v * 255.0).round() as u8);
            }
        }
        w.write_all(&buf)?;
        Ok(())
    }

    /// Histogram of the values over `bins` equal bins on `[0, cap]`.
    pub fn histogram(&self, bins: usize) -> Vec<usize> {
        let mut h = vec![0; bins];
        for &v in &self.values {
            let b = ((v / self.cap) * bins as f64).floor() as usize;
            h[b.min(bins - 1)] += 1;
        }
        h
    }
}

/// `zeros_N(f)` for every cell centre of `region` as a Standard Map seed.
///
/// Each cell writes only its own slot, so the grid is bit-identical for
/// any thread count.
pub fn classify_grid<R: Real>(
    region: Region,
    nx: usize,
    ny: usize,
    f: Observable,
    r: f64,
    scheme: &WeightScheme<R>,
) -> Result<ClassificationGrid> {
    if nx < 2 || ny < 2 {
        return Err(Error::Contract(format!("grid resolution {nx}x{ny} is below 2x2")));
    }
    let map = StandardMap::new(R::from_f64(r));
    let mut grid = ClassificationGrid {
        region,
        nx,
        ny,
        n: scheme.len(),
        f,
        r,
        cap: R::PRECISION.significant_digits() as f64,
        values: vec![0.0; nx * ny],
    };
    let cells: Vec<(f64, f64)> = (0..nx * ny).map(|c| (grid.x(c % nx), grid.y(c / nx))).collect();
    grid.values.par_iter_mut().zip(cells.par_iter()).try_for_each(|(v, &(x, y))| -> Result<()> {
        let seed = StdMapState::new(R::from_f64(x), R::from_f64(y));
        *v = orbit_zeros(&map, seed, f, scheme)?.zeros;
        Ok(())
    })?;
    Ok(grid)
}
