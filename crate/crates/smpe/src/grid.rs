//! Uniform 1-D grid, second-order finite-difference stencils and trapezoidal
//! quadrature.
//!
//! All reductions run in ascending node order, so results are deterministic
//! for a given grid.

use crate::error::{Error, Result};

/// Minimum number of grid points.
pub const MIN_POINTS: usize = 16;

/// Uniform grid on the closed interval [x_min, x_max] with n nodes and
/// spacing dx = (x_max - x_min)/(n - 1).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Grid1D {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if n < MIN_POINTS {
            return Err(Error::GridTooSmall {
                min: MIN_POINTS,
                got: n,
            });
        }
        if !(x_max > x_min) || !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::DegenerateGrid { x_min, x_max });
        }
        Ok(Self { x_min, x_max, n })
    }

    /// Grid centered on `center` spanning ±`half_span` with exactly the
    /// requested spacing (the span is rounded up to a whole number of cells).
    pub fn with_spacing(center: f64, half_span: f64, dx: f64) -> Result<Self> {
        if !(dx > 0.0) || !(half_span > 0.0) {
            return Err(Error::DegenerateGrid {
                x_min: center - half_span,
                x_max: center + half_span,
            });
        }
        let cells_half = (half_span / dx).ceil() as usize;
        let n = 2 * cells_half + 1;
        let half = cells_half as f64 * dx;
        Self::new(center - half, center + half, n)
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n).map(|i| f(self.x(i))).collect()
    }

    /// Period of the grid when node n-1 wraps to node 0, i.e. n·dx.
    pub fn period(&self) -> f64 {
        self.n as f64 * self.dx()
    }
}

/// Boundary treatment for the stencils.
///
/// `OneSided` closes the ends with second-order one-sided formulas.
/// `Periodic { jump }` wraps node n-1 onto node 0; `jump` is the winding
/// f(x + period) - f(x) of the sampled field, which lets a linearly winding
/// phase live on a periodic grid (zero for truly periodic fields).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Stencil {
    OneSided,
    Periodic { jump: f64 },
}

#[inline]
fn check_len(f: &[f64], min: usize) -> Result<()> {
    if f.len() < min {
        return Err(Error::StencilTooShort { min, got: f.len() });
    }
    Ok(())
}

/// First derivative, second order: central differences in the interior.
pub fn gradient_into(f: &[f64], dx: f64, stencil: Stencil, out: &mut [f64]) -> Result<()> {
    check_len(f, 3)?;
    let n = f.len();
    assert_eq!(out.len(), n);
    let inv2 = 1.0 / (2.0 * dx);
    for i in 1..n - 1 {
        out[i] = (f[i + 1] - f[i - 1]) * inv2;
    }
    match stencil {
        Stencil::OneSided => {
            out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2;
            out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2;
        }
        Stencil::Periodic { jump } => {
            out[0] = (f[1] - (f[n - 1] - jump)) * inv2;
            out[n - 1] = ((f[0] + jump) - f[n - 2]) * inv2;
        }
    }
    Ok(())
}

/// Second derivative, second order: 3-point interior stencil.
pub fn laplacian_into(f: &[f64], dx: f64, stencil: Stencil, out: &mut [f64]) -> Result<()> {
    check_len(f, 4)?;
    let n = f.len();
    assert_eq!(out.len(), n);
    let inv = 1.0 / (dx * dx);
    for i in 1..n - 1 {
        out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv;
    }
    match stencil {
        Stencil::OneSided => {
            out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
            out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv;
        }
        Stencil::Periodic { jump } => {
            out[0] = ((f[n - 1] - jump) - 2.0 * f[0] + f[1]) * inv;
            out[n - 1] = (f[n - 2] - 2.0 * f[n - 1] + (f[0] + jump)) * inv;
        }
    }
    Ok(())
}

pub fn gradient(f: &[f64], dx: f64) -> Result<Vec<f64>> {
    let mut out = vec![0.0; f.len()];
    gradient_into(f, dx, Stencil::OneSided, &mut out)?;
    Ok(out)
}

pub fn laplacian(f: &[f64], dx: f64) -> Result<Vec<f64>> {
    let mut out = vec![0.0; f.len()];
    laplacian_into(f, dx, Stencil::OneSided, &mut out)?;
    Ok(out)
}

/// Trapezoidal rule over the closed interval.
pub fn trapezoid(f: &[f64], dx: f64) -> f64 {
    if f.len() < 2 {
        return 0.0;
    }
    let mut sum = 0.5 * (f[0] + f[f.len() - 1]);
    for &v in &f[1..f.len() - 1] {
        sum += v;
    }
    sum * dx
}

/// Trapezoidal rule over one period of a wrapped grid (n cells of width dx).
pub fn trapezoid_periodic(f: &[f64], dx: f64) -> f64 {
    f.iter().sum::<f64>() * dx
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn grid_spacing_and_points() {
        let g = Grid1D::new(-1.0, 1.0, 21).unwrap();
        assert!((g.dx() - 0.1).abs() < 1e-15);
        assert_eq!(g.points().len(), 21);
        assert!((g.x(20) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(matches!(
            Grid1D::new(0.0, 1.0, 8),
            Err(Error::GridTooSmall { .. })
        ));
        assert!(Grid1D::new(1.0, 1.0, 32).is_err());
        assert!(Grid1D::new(2.0, 1.0, 32).is_err());
    }

    #[test]
    fn with_spacing_is_exact() {
        let g = Grid1D::with_spacing(0.3, 4.0, 1.0 / 32.0).unwrap();
        assert!((g.dx() - 1.0 / 32.0).abs() < 1e-15);
        assert!((g.x_min - (0.3 - 4.0)).abs() < 1e-12);
    }

    #[test]
    fn gradient_exact_for_linear() {
        let g = Grid1D::new(-2.0, 3.0, 41).unwrap();
        let f = g.sample(|x| 3.0 * x);
        let d = gradient(&f, g.dx()).unwrap();
        for v in d {
            assert!((v - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn gradient_exact_for_quadratic_interior() {
        let g = Grid1D::new(0.0, 2.0, 21).unwrap(); // dx = 0.1
        let f = g.sample(|x| x * x);
        let d = gradient(&f, g.dx()).unwrap();
        for (i, &v) in d.iter().enumerate().take(g.n - 1).skip(1) {
            assert!((v - 2.0 * g.x(i)).abs() < 1e-12, "node {i}");
        }
        // One-sided second-order ends are exact for quadratics too.
        assert!((d[0] - 0.0).abs() < 1e-12);
        assert!((d[g.n - 1] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn gradient_second_order_on_sine() {
        // Interior max error shrinks by 4 ± 20% when dx halves.
        let err = |n: usize| {
            let g = Grid1D::new(0.0, 1.0, n).unwrap();
            let f = g.sample(f64::sin);
            let d = gradient(&f, g.dx()).unwrap();
            (1..n - 1)
                .map(|i| (d[i] - g.x(i).cos()).abs())
                .fold(0.0, f64::max)
        };
        let ratio = err(101) / err(201);
        assert!((ratio - 4.0).abs() < 0.8, "ratio = {ratio}");
    }

    #[test]
    fn laplacian_exact_for_quadratic_and_constant() {
        let g = Grid1D::new(-1.0, 1.0, 33).unwrap();
        let f = g.sample(|x| x * x);
        let l = laplacian(&f, g.dx()).unwrap();
        for v in &l {
            assert!((v - 2.0).abs() < 1e-10);
        }
        let c = g.sample(|_| 7.5);
        let l = laplacian(&c, g.dx()).unwrap();
        for v in &l {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn laplacian_second_order_on_cosine() {
        let order = {
            let err = |n: usize| {
                let g = Grid1D::new(0.0, 1.0, n).unwrap();
                let f = g.sample(f64::cos);
                let l = laplacian(&f, g.dx()).unwrap();
                (1..n - 1)
                    .map(|i| (l[i] + g.x(i).cos()).abs())
                    .fold(0.0, f64::max)
            };
            let (e1, e2) = (err(101), err(201));
            (e1 / e2).log2()
        };
        assert!((order - 2.0).abs() < 0.3, "order = {order}");
    }

    #[test]
    fn short_input_is_rejected() {
        assert!(gradient(&[1.0, 2.0], 0.1).is_err());
        assert!(laplacian(&[1.0, 2.0, 3.0], 0.1).is_err());
    }

    #[test]
    fn periodic_stencils_handle_winding() {
        // f(x) = 3x sampled on n cells of a periodic grid: with the winding
        // jump 3·period supplied, both stencils are exact everywhere.
        let n = 40;
        let dx = 0.05;
        let period = n as f64 * dx;
        let f: Vec<f64> = (0..n).map(|i| 3.0 * (i as f64 * dx)).collect();
        let mut d = vec![0.0; n];
        gradient_into(&f, dx, Stencil::Periodic { jump: 3.0 * period }, &mut d).unwrap();
        assert!(max_abs_diff(&d, &vec![3.0; n]) < 1e-12);
        let mut l = vec![0.0; n];
        laplacian_into(&f, dx, Stencil::Periodic { jump: 3.0 * period }, &mut l).unwrap();
        assert!(max_abs_diff(&l, &vec![0.0; n]) < 1e-10);
    }

    #[test]
    fn trapezoid_matches_hand_value() {
        // f(x) = x² on {0, 1, 2, 3}: 0.5 + 2.5 + 6.5 = 9.5
        let f = [0.0, 1.0, 4.0, 9.0];
        assert!((trapezoid(&f, 1.0) - 9.5).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_gaussian_tail_truncation() {
        // Quadrature over ±8 widths vs ±12 widths agrees to 1e-8 relative.
        let quad = |half: f64| {
            let n = (2048.0 * half / 8.0) as usize | 1;
            let g = Grid1D::new(-half, half, n).unwrap();
            let f = g.sample(|x| (-x * x / 2.0).exp());
            trapezoid(&f, g.dx())
        };
        let (a, b) = (quad(8.0), quad(12.0));
        assert!(((a - b) / b).abs() < 1e-8);
    }
}
