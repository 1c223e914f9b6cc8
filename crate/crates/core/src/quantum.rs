//! Quantum-mechanical spot checks: de Broglie wavelength, local
//! wavelength of a sampled function, the wave-equation residual, Pauli
//! commutators and the generalized uncertainty relation on C².

use std::ops::{Add, Mul, Sub};

use crate::error::{FtrError, Result};
use crate::numeric::{ConstantSet, DimSig, PrecReal, Quantity};

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: PrecReal,
    pub im: PrecReal,
}

impl Complex {
    pub fn new(re: PrecReal, im: PrecReal) -> Self {
        Complex { re, im }
    }

    pub fn real(re: PrecReal) -> Self {
        let im = PrecReal::zero(re.digits());
        Complex { re, im }
    }

    pub fn from_i64(re: i64, im: i64, digits: u32) -> Self {
        Complex::new(
            PrecReal::from_i64(re, digits),
            PrecReal::from_i64(im, digits),
        )
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> PrecReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> PrecReal {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, k: &PrecReal) -> Self {
        Complex::new(&self.re * k, &self.im * k)
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, o: &Complex) -> Complex {
        Complex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct C2Matrix {
    pub m: [[Complex; 2]; 2],
}

impl C2Matrix {
    pub fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        C2Matrix {
            m: [[a, b], [c, d]],
        }
    }

    pub fn zero(digits: u32) -> Self {
        let z = || Complex::from_i64(0, 0, digits);
        C2Matrix::new(z(), z(), z(), z())
    }

    pub fn pauli(axis: Axis, digits: u32) -> Self {
        let c = |re, im| Complex::from_i64(re, im, digits);
        match axis {
            Axis::X => C2Matrix::new(c(0, 0), c(1, 0), c(1, 0), c(0, 0)),
            Axis::Y => C2Matrix::new(c(0, 0), c(0, -1), c(0, 1), c(0, 0)),
            Axis::Z => C2Matrix::new(c(1, 0), c(0, 0), c(0, 0), c(-1, 0)),
        }
    }

    /// S = (ħ/2)σ
    pub fn spin(axis: Axis, hbar: &PrecReal) -> Self {
        let half = hbar / PrecReal::from_i64(2, hbar.digits());
        C2Matrix::pauli(axis, hbar.digits()).scale(&Complex::real(half))
    }

    pub fn digits(&self) -> u32 {
        self.m[0][0].re.digits()
    }

    pub fn mul(&self, o: &C2Matrix) -> C2Matrix {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &o.m[0][j]) + &(&self.m[i][1] * &o.m[1][j]);
        C2Matrix::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &C2Matrix) -> C2Matrix {
        let e = |i: usize, j: usize| &self.m[i][j] - &o.m[i][j];
        C2Matrix::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, k: &Complex) -> C2Matrix {
        let e = |i: usize, j: usize| &self.m[i][j] * k;
        C2Matrix::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn commutator(&self, o: &C2Matrix) -> C2Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn adjoint(&self) -> C2Matrix {
        let e = |i: usize, j: usize| self.m[j][i].conj();
        C2Matrix::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn is_hermitian(&self, tol: &PrecReal) -> bool {
        let a = self.adjoint();
        (0..2).all(|i| (0..2).all(|j| (&self.m[i][j] - &a.m[i][j]).abs() <= *tol))
    }

    pub fn apply(&self, s: &C2State) -> C2State {
        let r = |i: usize| &(&self.m[i][0] * &s.a[0]) + &(&self.m[i][1] * &s.a[1]);
        C2State { a: [r(0), r(1)] }
    }

    /// ⟨s|M|s⟩
    pub fn expect(&self, s: &C2State) -> Complex {
        s.inner(&self.apply(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq)]
pub struct C2State {
    pub a: [Complex; 2],
}

impl C2State {
    pub fn new(a0: Complex, a1: Complex) -> Self {
        C2State { a: [a0, a1] }
    }

    pub fn z_up(digits: u32) -> Self {
        C2State::new(
            Complex::from_i64(1, 0, digits),
            Complex::from_i64(0, 0, digits),
        )
    }

    pub fn x_up(digits: u32) -> Self {
        let r = PrecReal::one(digits) / PrecReal::from_i64(2, digits).sqrt();
        C2State::new(Complex::real(r.clone()), Complex::real(r))
    }

    pub fn digits(&self) -> u32 {
        self.a[0].re.digits()
    }

    /// ⟨self|other⟩
    pub fn inner(&self, o: &C2State) -> Complex {
        &(&self.a[0].conj() * &o.a[0]) + &(&self.a[1].conj() * &o.a[1])
    }

    pub fn norm(&self) -> PrecReal {
        (self.a[0].norm_sqr() + self.a[1].norm_sqr()).sqrt()
    }

    pub fn normalized(&self) -> Result<C2State> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FtrError::NotNormalized);
        }
        let k = PrecReal::one(n.digits()) / n;
        Ok(C2State::new(self.a[0].scale(&k), self.a[1].scale(&k)))
    }
}

/// Function values on a uniform grid x₀, x₀+h, …
#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction {
    x0: f64,
    h: f64,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(x0: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 5 {
            return Err(FtrError::Domain("need at least 5 grid points".into()));
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(FtrError::Domain("grid step must be positive".into()));
        }
        Ok(SampledFunction { x0, h, values })
    }

    /// Samples `f` on `n` points starting at `x0` with step `h`.
    pub fn sample(x0: f64, h: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(x0 + h * i as f64)).collect();
        SampledFunction::new(x0, h, values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.h
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.h * i as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn second_derivative(&self, i: usize) -> f64 {
        let v = &self.values;
        (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (self.h * self.h)
    }

    fn aligned(&self, o: &SampledFunction) -> bool {
        self.values.len() == o.values.len() && self.x0 == o.x0 && self.h == o.h
    }
}

/// λ = h/p
pub fn de_broglie(p: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    p.expect_dims(DimSig::momentum())?;
    if !p.is_positive() {
        return Err(FtrError::NonPositiveInput("momentum".into()));
    }
    let h = constants.get("h")?;
    Ok(h.div(p).labeled("lambda"))
}

/// λ(x) from λ² = −4π² f / f″ at the grid point nearest `x`.
pub fn local_wavelength(f: &SampledFunction, x: f64) -> Result<PrecReal> {
    let pos = ((x - f.x0) / f.h).round();
    if pos < 1.0 || pos > (f.len() - 2) as f64 {
        return Err(FtrError::OutOfRange(format!(
            "x = {x} is not interior to the grid"
        )));
    }
    let i = pos as usize;
    let fx = f.values[i];
    if fx == 0.0 {
        return Err(FtrError::ZeroFunction);
    }
    let d2 = f.second_derivative(i);
    let ratio = -4.0 * std::f64::consts::PI.powi(2) * fx / d2;
    if !(ratio.is_finite() && ratio > 0.0) {
        return Err(FtrError::NonOscillatory);
    }
    Ok(PrecReal::from_f64(
        ratio.sqrt(),
        crate::numeric::DEFAULT_DIGITS,
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    /// max |ψ″ + (8π²m/h²)(E − V)ψ| / max |ψ″| over interior points
    pub value: PrecReal,
    /// ψ″ vanishes everywhere, so no normalization is possible
    pub degenerate: bool,
}

pub fn schrodinger_residual(
    psi: &SampledFunction,
    e: &Quantity,
    v: &SampledFunction,
    m: &Quantity,
    constants: &ConstantSet,
) -> Result<Residual> {
    e.expect_dims(DimSig::energy())?;
    m.expect_dims(DimSig::mass())?;
    if !psi.aligned(v) {
        return Err(FtrError::GridMismatch);
    }
    let h = constants.get("h")?;
    let pi = PrecReal::pi(h.digits());
    let k = (PrecReal::from_i64(8, h.digits()) * &pi * &pi * &m.mag / (&h.mag * &h.mag)).to_f64();
    let e = e.mag.to_f64();
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 1..psi.len() - 1 {
        let d2 = psi.second_derivative(i);
        let r = d2 + k * (e - v.values[i]) * psi.values[i];
        worst = worst.max(r.abs());
        scale = scale.max(d2.abs());
    }
    let digits = crate::numeric::DEFAULT_DIGITS;
    if scale == 0.0 {
        return Ok(Residual {
            value: PrecReal::from_f64(worst, digits),
            degenerate: true,
        });
    }
    Ok(Residual {
        value: PrecReal::from_f64(worst / scale, digits),
        degenerate: false,
    })
}

/// σᵢσⱼ − σⱼσᵢ
pub fn pauli_commutator(i: Axis, j: Axis, digits: u32) -> Result<C2Matrix> {
    if i == j {
        return Err(FtrError::SameAxis);
    }
    Ok(C2Matrix::pauli(i, digits).commutator(&C2Matrix::pauli(j, digits)))
}

/// (ΔA·ΔB, ½|⟨[A,B]⟩|) on `state`.
pub fn uncertainty_bound(
    state: &C2State,
    a: &C2Matrix,
    b: &C2Matrix,
) -> Result<(PrecReal, PrecReal)> {
    let digits = state.digits();
    let tol = PrecReal::tolerance(digits, digits as i64 - 5);
    if !a.is_hermitian(&tol) || !b.is_hermitian(&tol) {
        return Err(FtrError::NotHermitian);
    }
    let one = PrecReal::one(digits);
    if (state.norm() - &one).abs() > tol {
        return Err(FtrError::NotNormalized);
    }
    let spread = |op: &C2Matrix| {
        let mean = op.expect(state).re;
        let sq = op.mul(op).expect(state).re;
        let var = sq - &mean * &mean;
        if var.is_negative() {
            PrecReal::zero(digits)
        } else {
            var.sqrt()
        }
    };
    let lhs = spread(a) * spread(b);
    let rhs = a.commutator(b).expect(state).abs() / PrecReal::from_i64(2, digits);
    Ok((lhs, rhs))
}
