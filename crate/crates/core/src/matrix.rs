//! Fixed-size complex matrices (2x2 and 3x3) with the small amount of dense
//! linear algebra the propagator stack needs: products, adjoints, Frobenius
//! distance, and exp(-i H t) for Hermitian H via a Jacobi eigensolver.
//!
//! Everything here is allocation-free and deterministic; the eigensolver is
//! the single numerical kernel shared by the analytic detuned propagator and
//! the polar re-unitarization step of the integrator.

use num_complex::Complex64 as C64;

use crate::error::Error;
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn matmul<const N: usize>(a: &[[C64; N]; N], b: &[[C64; N]; N]) -> [[C64; N]; N] {
    let mut out = [[C64::ZERO; N]; N];
    for i in 0..N {
        for j in 0..N {
            let mut s = C64::ZERO;
            for k in 0..N {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

fn adjoint<const N: usize>(a: &[[C64; N]; N]) -> [[C64; N]; N] {
    let mut out = [[C64::ZERO; N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

fn max_abs<const N: usize>(a: &[[C64; N]; N]) -> f64 {
    let mut m = 0.0_f64;
    for row in a {
        for e in row {
            m = m.max(e.norm());
        }
    }
    m
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns (eigenvalues, V) with A = V diag(vals) V†; V is unitary
/// to machine precision, which keeps the exponential unitary as well.
fn eigh<const N: usize>(h: &[[C64; N]; N]) -> ([f64; N], [[C64; N]; N]) {
    let mut a = *h;
    let mut v = [[C64::ZERO; N]; N];
    for i in 0..N {
        v[i][i] = C64::ONE;
    }
    let scale = max_abs(&a).max(f64::MIN_POSITIVE);
    let stop = (scale * 1e-15) * (scale * 1e-15) * (N * N) as f64;

    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..N {
            for q in (p + 1)..N {
                off += a[p][q].norm_sqr();
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                let mag = apq.norm();
                if mag <= scale * 1e-18 {
                    continue;
                }
                // Phase that makes the pivot real, then a real Jacobi angle.
                let w = apq / mag;
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cth = 1.0 / (1.0 + t * t).sqrt();
                let sth = t * cth;
                let s_w = w * sth;

                a[p][p] = c(app - t * mag, 0.0);
                a[q][q] = c(aqq + t * mag, 0.0);
                a[p][q] = C64::ZERO;
                a[q][p] = C64::ZERO;
                for i in 0..N {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = aip * cth - aiq * s_w.conj();
                    a[i][q] = aip * s_w + aiq * cth;
                    a[p][i] = a[i][p].conj();
                    a[q][i] = a[i][q].conj();
                }
                for k in 0..N {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = vkp * cth - vkq * s_w.conj();
                    v[k][q] = vkp * s_w + vkq * cth;
                }
            }
        }
    }

    let mut vals = [0.0_f64; N];
    for i in 0..N {
        vals[i] = a[i][i].re;
    }
    (vals, v)
}

fn hermiticity_defect<const N: usize>(h: &[[C64; N]; N]) -> f64 {
    let mut d = 0.0_f64;
    for i in 0..N {
        for j in 0..N {
            d = d.max((h[i][j] - h[j][i].conj()).norm());
        }
    }
    d
}

/// exp(-i H t) for Hermitian H. Exact in the eigenbasis, so the phase error
/// stays bounded even for large |H| t (needed far off resonance).
fn expm_skew<const N: usize>(h: &[[C64; N]; N], t: f64) -> Result<[[C64; N]; N], Error> {
    if hermiticity_defect(h) > 1e-12 * (1.0 + max_abs(h)) {
        return Err(Error::NonHermitianInput);
    }
    let (vals, v) = eigh(h);
    let mut out = [[C64::ZERO; N]; N];
    let mut phases = [C64::ZERO; N];
    for k in 0..N {
        let ph = -vals[k] * t;
        phases[k] = c(ph.cos(), ph.sin());
    }
    for i in 0..N {
        for j in 0..N {
            let mut s = C64::ZERO;
            for k in 0..N {
                s += v[i][k] * phases[k] * v[j][k].conj();
            }
            out[i][j] = s;
        }
    }
    Ok(out)
}

/// Nearest unitary in Frobenius norm: U (U†U)^(-1/2), via the same
/// eigensolver. Used by the integrator's optional re-unitarization.
fn polar<const N: usize>(u: &[[C64; N]; N]) -> [[C64; N]; N] {
    let m = matmul(&adjoint(u), u);
    let (vals, v) = eigh(&m);
    let mut isqrt = [[C64::ZERO; N]; N];
    for i in 0..N {
        for j in 0..N {
            let mut s = C64::ZERO;
            for k in 0..N {
                let lam = vals[k].max(f64::MIN_POSITIVE);
                s += v[i][k] * c(1.0 / lam.sqrt(), 0.0) * v[j][k].conj();
            }
            isqrt[i][j] = s;
        }
    }
    matmul(u, &isqrt)
}

macro_rules! cmat_impl {
    ($name:ident, $n:expr) => {
        /// Dense complex matrix with value semantics.
        #[derive(Debug, Clone, Copy, PartialEq)]
        pub struct $name(pub [[C64; $n]; $n]);

        impl $name {
            pub const N: usize = $n;

            pub fn zero() -> Self {
                Self([[C64::ZERO; $n]; $n])
            }

            pub fn identity() -> Self {
                let mut m = Self::zero();
                for i in 0..$n {
                    m.0[i][i] = C64::ONE;
                }
                m
            }

            pub fn from_rows(rows: [[C64; $n]; $n]) -> Self {
                Self(rows)
            }

            /// Conjugate transpose.
            pub fn adjoint(&self) -> Self {
                Self(adjoint(&self.0))
            }

            pub fn scale(&self, f: C64) -> Self {
                let mut m = *self;
                for row in m.0.iter_mut() {
                    for e in row.iter_mut() {
                        *e *= f;
                    }
                }
                m
            }

            pub fn trace(&self) -> C64 {
                let mut s = C64::ZERO;
                for i in 0..$n {
                    s += self.0[i][i];
                }
                s
            }

            pub fn frobenius_norm(&self) -> f64 {
                let mut s = 0.0_f64;
                for row in &self.0 {
                    for e in row {
                        s += e.norm_sqr();
                    }
                }
                s.sqrt()
            }

            /// Frobenius distance sqrt(sum |a_ij - b_ij|^2); a true metric.
            pub fn frobenius_dist(&self, other: &Self) -> f64 {
                let mut s = 0.0_f64;
                for i in 0..$n {
                    for j in 0..$n {
                        s += (self.0[i][j] - other.0[i][j]).norm_sqr();
                    }
                }
                s.sqrt()
            }

            /// Largest entrywise deviation from the other matrix.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                let mut d = 0.0_f64;
                for i in 0..$n {
                    for j in 0..$n {
                        d = d.max((self.0[i][j] - other.0[i][j]).norm());
                    }
                }
                d
            }

            /// Frobenius norm of U†U - I; zero for exactly unitary input.
            pub fn unitarity_error(&self) -> f64 {
                let m = Self(matmul(&adjoint(&self.0), &self.0));
                m.frobenius_dist(&Self::identity())
            }

            /// exp(-i self t); errors unless self is Hermitian within 1e-12
            /// relative to its largest entry.
            pub fn expm_skew_hermitian(&self, t: f64) -> Result<Self, Error> {
                expm_skew(&self.0, t).map(Self)
            }

            /// Projection onto the nearest unitary matrix.
            pub fn polar_unitary(&self) -> Self {
                Self(polar(&self.0))
            }

            pub fn mul_vec(&self, v: &[C64; $n]) -> [C64; $n] {
                let mut out = [C64::ZERO; $n];
                for i in 0..$n {
                    let mut s = C64::ZERO;
                    for j in 0..$n {
                        s += self.0[i][j] * v[j];
                    }
                    out[i] = s;
                }
                out
            }
        }

        impl core::ops::Mul for $name {
            type Output = $name;
            fn mul(self, rhs: $name) -> $name {
                $name(matmul(&self.0, &rhs.0))
            }
        }

        impl core::ops::Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                let mut m = self;
                for i in 0..$n {
                    for j in 0..$n {
                        m.0[i][j] -= rhs.0[i][j];
                    }
                }
                m
            }
        }

        impl core::ops::Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                let mut m = self;
                for i in 0..$n {
                    for j in 0..$n {
                        m.0[i][j] += rhs.0[i][j];
                    }
                }
                m
            }
        }
    };
}

cmat_impl!(CMat2, 2);
cmat_impl!(CMat3, 3);

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn cr(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let x = CMat2::from_rows([[cr(0.0), cr(1.0)], [cr(1.0), cr(0.0)]]);
        assert_eq!(x * CMat2::identity(), x);
        assert_eq!(CMat2::identity() * x, x);
    }

    #[test]
    fn pauli_x_is_an_involution() {
        let x = CMat2::from_rows([[cr(0.0), cr(1.0)], [cr(1.0), cr(0.0)]]);
        assert!((x * x).frobenius_dist(&CMat2::identity()) < 1e-15);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = CMat3::from_rows([
            [c(0.1, 0.2), c(0.3, -0.4), c(0.0, 1.0)],
            [c(1.0, 0.0), c(-0.2, 0.5), c(0.7, 0.1)],
            [c(0.3, 0.3), c(0.0, -1.1), c(0.4, 0.0)],
        ]);
        let b = a.adjoint();
        assert!((a * b).adjoint().max_abs_diff(&(b.adjoint() * a.adjoint())) < 1e-14);
    }

    #[test]
    fn dist_identity_to_pauli_x_is_two() {
        let x = CMat2::from_rows([[cr(0.0), cr(1.0)], [cr(1.0), cr(0.0)]]);
        assert!((CMat2::identity().frobenius_dist(&x) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let u = CMat3::zero().expm_skew_hermitian(2.5).unwrap();
        assert!(u.max_abs_diff(&CMat3::identity()) < 1e-15);
    }

    #[test]
    fn expm_resonant_pi_pulse_swaps_with_minus_i() {
        // H = (omega/2) sigma_x integrated over area pi gives [[0,-i],[-i,0]].
        let omega = 2.0;
        let t = PI / omega;
        let h = CMat2::from_rows([[cr(0.0), cr(omega / 2.0)], [cr(omega / 2.0), cr(0.0)]]);
        let u = h.expm_skew_hermitian(t).unwrap();
        let want = CMat2::from_rows([[cr(0.0), c(0.0, -1.0)], [c(0.0, -1.0), cr(0.0)]]);
        assert!(u.max_abs_diff(&want) < 1e-14);
        assert!(u.unitarity_error() < 1e-14);
    }

    #[test]
    fn expm_diagonal_gives_pure_phases() {
        let h = CMat3::from_rows([
            [cr(1.0), cr(0.0), cr(0.0)],
            [cr(0.0), cr(-2.0), cr(0.0)],
            [cr(0.0), cr(0.0), cr(0.5)],
        ]);
        let t = 0.7;
        let u = h.expm_skew_hermitian(t).unwrap();
        for (i, lam) in [1.0f64, -2.0, 0.5].iter().enumerate() {
            let want = c((-lam * t).cos(), (-lam * t).sin());
            assert!((u.0[i][i] - want).norm() < 1e-14);
        }
    }

    #[test]
    fn expm_composes_over_time() {
        let h = CMat3::from_rows([
            [cr(0.3), c(0.1, 0.4), c(0.0, -0.2)],
            [c(0.1, -0.4), cr(-0.6), c(0.5, 0.1)],
            [c(0.0, 0.2), c(0.5, -0.1), cr(1.1)],
        ]);
        let u1 = h.expm_skew_hermitian(0.4).unwrap();
        let u2 = h.expm_skew_hermitian(1.3).unwrap();
        let u12 = h.expm_skew_hermitian(1.7).unwrap();
        assert!((u2 * u1).max_abs_diff(&u12) < 1e-13);
    }

    #[test]
    fn expm_rejects_non_hermitian() {
        let h = CMat2::from_rows([[cr(0.0), cr(1.0)], [cr(0.5), cr(0.0)]]);
        assert_eq!(h.expm_skew_hermitian(1.0), Err(Error::NonHermitianInput));
    }

    #[test]
    fn expm_stays_unitary_for_large_phase() {
        // Large detuning regime: |H| t of a few thousand radians.
        let h = CMat3::from_rows([
            [cr(0.0), cr(0.0), cr(60.0)],
            [cr(0.0), cr(0.0), cr(60.0)],
            [cr(60.0), cr(60.0), cr(2500.0)],
        ]);
        let u = h.expm_skew_hermitian(1.0).unwrap();
        assert!(u.unitarity_error() < 1e-12);
    }

    #[test]
    fn polar_projection_restores_unitarity() {
        let mut u = CMat3::identity();
        u.0[0][0] = cr(1.0 + 3e-4);
        u.0[1][2] = c(2e-4, -1e-4);
        let p = u.polar_unitary();
        assert!(p.unitarity_error() < 1e-13);
        assert!(p.max_abs_diff(&u) < 1e-3);
    }

    #[test]
    fn frobenius_dist_is_a_metric_on_fixed_points() {
        let a = CMat2::from_rows([[cr(1.0), cr(0.0)], [cr(0.0), cr(1.0)]]);
        let b = CMat2::from_rows([[cr(0.0), c(0.0, 1.0)], [c(0.0, -1.0), cr(0.0)]]);
        let m = CMat2::from_rows([[c(0.5, 0.1), cr(0.2)], [cr(-0.3), c(0.0, 0.9)]]);
        assert!(a.frobenius_dist(&a) == 0.0);
        assert!((a.frobenius_dist(&b) - b.frobenius_dist(&a)).abs() < 1e-15);
        assert!(a.frobenius_dist(&b) <= a.frobenius_dist(&m) + m.frobenius_dist(&b) + 1e-15);
    }
}
