//! The real form of sl(2,C) in the basis (X1, X2, X3, E, iE, H), with
//! su(2) = span{X1, X2, X3} and the upper-triangular part b = span{E, iE, H}.

use num_complex::Complex;

use crate::algebra::{AlgebraElement, BilinearForm, CoalgebraElement, Half, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::group::Mat2;
use crate::linalg::Matrix;
use crate::scalar::Real;

pub const DIM: usize = 6;
pub const LABELS: [&str; DIM] = ["X1", "X2", "X3", "E", "iE", "H"];
pub const SU2: [usize; 3] = [0, 1, 2];
pub const BOREL: [usize; 3] = [3, 4, 5];

/// Diagonal of the fiber inner product on the six basis vectors.
pub const SIGMA_DIAG: [f64; DIM] = [-0.125, -0.125, -0.125, -8.0, -8.0, -32.0];

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

/// The six basis matrices.
pub fn basis_matrices<T: Real>() -> [Mat2<T>; DIM] {
    let z = c(0.0, 0.0);
    [
        Mat2::new(z, c(0.0, 1.0), c(0.0, 1.0), z),
        Mat2::new(z, c(1.0, 0.0), c(-1.0, 0.0), z),
        Mat2::new(c(0.0, 1.0), z, z, c(0.0, -1.0)),
        Mat2::new(z, c(1.0, 0.0), z, z),
        Mat2::new(z, c(0.0, 1.0), z, z),
        Mat2::new(c(1.0, 0.0), z, z, c(-1.0, 0.0)),
    ]
}

/// Traceless matrix with the given coefficients.
pub fn realize<T: Real>(x: &AlgebraElement<T>) -> Mat2<T> {
    let [x1, x2, x3, e, ie, h] = [x[0], x[1], x[2], x[3], x[4], x[5]];
    let p = Complex::new(h, x3);
    Mat2::new(p, Complex::new(x2 + e, x1 + ie), Complex::new(-x2, x1), -p)
}

/// Coefficients of a traceless matrix; entries are read off exactly.
pub fn to_coefficients<T: Real>(m: &Mat2<T>) -> Result<AlgebraElement<T>> {
    let tr = m.trace().norm();
    let scale = T::one() + m.frobenius();
    if tr > T::lit(1e-10) * scale {
        return Err(Error::NotTraceless(tr.as_f64()));
    }
    Ok(coefficients_unchecked(m))
}

pub(crate) fn coefficients_unchecked<T: Real>(m: &Mat2<T>) -> AlgebraElement<T> {
    let [[p0, q], [r, p1]] = m.m;
    let p = (p0 - p1).scale(T::lit(0.5));
    AlgebraElement(vec![r.im, -r.re, p.im, q.re + r.re, q.im - r.im, p.re])
}

/// Structure constants computed from matrix commutators.
pub fn algebra<T: Real>() -> LieAlgebra<T> {
    let b = basis_matrices::<T>();
    let mut constants = Vec::with_capacity(DIM * DIM * DIM);
    for bi in &b {
        for bj in &b {
            constants.extend(coefficients_unchecked(&bi.commutator(bj)).0);
        }
    }
    LieAlgebra::new(LABELS.iter().map(|s| s.to_string()).collect(), constants, 0, T::zero())
        .expect("sl(2,C) constants are exact")
}

/// `k₀(x, y) = −Im tr(xy)`.
pub fn k0<T: Real>(x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> T {
    -(realize(x) * realize(y)).trace().im
}

/// Complex Killing form `κ(x, y) = 4 tr(xy)`.
pub fn killing<T: Real>(x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Complex<T> {
    (realize(x) * realize(y)).trace().scale(T::lit(4.0))
}

pub fn k0_form<T: Real>() -> BilinearForm<T> {
    let b: Vec<_> = (0..DIM).map(|i| AlgebraElement::basis(DIM, i)).collect();
    let m = Matrix::from_fn(DIM, DIM, |i, j| k0(&b[i], &b[j]));
    BilinearForm::invariant(&algebra(), m, T::zero()).expect("k0 is invariant")
}

pub fn splitting<T: Real>(alg: &LieAlgebra<T>) -> Splitting {
    Splitting::new(alg, SU2.to_vec(), BOREL.to_vec(), T::zero()).expect("su(2) and b are subalgebras")
}

/// `σ` on sl(2,C) as a diagonal.
pub fn sigma<T: Real>() -> Vec<T> {
    SIGMA_DIAG.iter().map(|&x| T::lit(x)).collect()
}

/// Matrix of multiplication by `i`.
pub fn j_matrix<T: Real>() -> Matrix<T> {
    let i = Complex::new(T::zero(), T::one());
    let cols: Vec<Vec<T>> = basis_matrices::<T>().iter().map(|b| coefficients_unchecked(&b.scale(i)).0).collect();
    Matrix::from_columns(&cols)
}

/// `ζ: su(2) → su(2)*`, the restriction of `σ`.
pub fn zeta<T: Real>(x: &[T; 3]) -> [T; 3] {
    x.map(|v| v * T::lit(SIGMA_DIAG[0]))
}

/// `γ*: b → su(2)*`, the transpose of `γ` restricted to su(2).
pub fn gamma_star<T: Real>(form: &BilinearForm<T>, y: &[T; 3]) -> [T; 3] {
    let m = form.matrix();
    std::array::from_fn(|i| (0..3).map(|k| m[(SU2[i], BOREL[k])] * y[k]).sum())
}

/// `ϑ = γ ∘ ζ⁻¹ ∘ γ*: b → b*`.
pub fn vartheta<T: Real>(form: &BilinearForm<T>, y: &[T; 3]) -> [T; 3] {
    let g = gamma_star(form, y);
    let x: [T; 3] = g.map(|v| v / T::lit(SIGMA_DIAG[0]));
    let m = form.matrix();
    std::array::from_fn(|k| (0..3).map(|i| m[(SU2[i], BOREL[k])] * x[i]).sum())
}

/// Upper-triangular group element `[[a, b + ic], [0, 1/a]]`, `a > 0`.
pub fn borel_element<T: Real>(a: T, b: T, c: T) -> Result<Mat2<T>> {
    if !a.is_finite() || a <= T::zero() {
        return Err(Error::InvalidInput("borel element needs a > 0".into()));
    }
    let z = Complex::new(T::zero(), T::zero());
    Ok(Mat2::new(Complex::new(a, T::zero()), Complex::new(b, c), z, Complex::new(a.recip(), T::zero())))
}

/// Parameters `(a, b, c)` of an upper-triangular element with positive diagonal.
pub fn borel_params<T: Real>(m: &Mat2<T>) -> (T, T, T) {
    (m.m[0][0].re, m.m[0][1].re, m.m[0][1].im)
}

pub fn su2_vector<T: Real>(x: &AlgebraElement<T>) -> [T; 3] {
    [x[0], x[1], x[2]]
}

pub fn from_su2<T: Real>(v: [T; 3]) -> AlgebraElement<T> {
    AlgebraElement(vec![v[0], v[1], v[2], T::zero(), T::zero(), T::zero()])
}

pub(crate) fn coalgebra_su2<T: Real>(xi: &CoalgebraElement<T>) -> [T; 3] {
    [xi[0], xi[1], xi[2]]
}

/// `Ad_b X` for `b = [[a, b+ic], [0, 1/a]]`, written out in coefficients.
pub fn adjoint_borel<T: Real>(h_minus: &Mat2<T>, x: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
    crate::brackets::check_borel(h_minus)?;
    x.check_dim(DIM)?;
    let (a, b, c) = borel_params(h_minus);
    let [x1, x2, x3, xe, xie, xh] = [x[0], x[1], x[2], x[3], x[4], x[5]];
    let two = T::lit(2.0);
    let (a2, ia2) = (a * a, (a * a).recip());
    Ok(AlgebraElement(vec![
        x1 * ia2,
        x2 * ia2,
        x1 * b / a - x2 * c / a + x3,
        two * b * c * x1 + (b * b - c * c + a2 - ia2) * x2 + two * a * c * x3 + xe * a2 - two * xh * b * a,
        x1 * (c * c - b * b + a2 - ia2) + two * b * c * x2 - two * a * b * x3 + xie * a2 - two * xh * c * a,
        -(x1 * c / a + x2 * b / a - xh),
    ]))
}

/// `𝔸±(b)X = Ad_{b⁻¹}Π±Ad_b X` for `b = [[a, b+ic], [0, 1/a]]`, written out
/// in coefficients.
pub fn projector_borel<T: Real>(h_minus: &Mat2<T>, x: &AlgebraElement<T>, half: Half) -> Result<AlgebraElement<T>> {
    crate::brackets::check_borel(h_minus)?;
    x.check_dim(DIM)?;
    let (a, b, c) = borel_params(h_minus);
    let [x1, x2, x3, xe, xie, xh] = [x[0], x[1], x[2], x[3], x[4], x[5]];
    let two = T::lit(2.0);
    let (a2, ia2) = (a * a, (a * a).recip());
    let rho = b * b + c * c + ia2 - a2;
    let zero = T::zero();
    Ok(AlgebraElement(match half {
        Half::Plus => vec![
            x1,
            x2,
            x3,
            ia2 * (rho * x2 - two * a * c * x3),
            ia2 * (rho * x1 + two * a * b * x3),
            (x1 * c + x2 * b) / a,
        ],
        Half::Minus => vec![
            zero,
            zero,
            zero,
            ia2 * (-rho * x2 + two * a * c * x3 + a2 * xe),
            ia2 * (-rho * x1 - two * a * b * x3 + a2 * xie),
            -(c / a * x1 + b / a * x2 - xh),
        ],
    }))
}
