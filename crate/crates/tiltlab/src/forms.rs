//! Euler form, Tits form, Coxeter transformation, and reflection
//! transformations on the Grothendieck group.
//!
//! Dimension vectors are column vectors throughout, and the Cartan matrix
//! has the dimension vector of the projective at j as its column j. Under
//! that convention the Coxeter transformation is `Φ = (-1)^n C^t C^{-1}`,
//! the Euler pairing is `⟨x, y⟩ = x^t (C^{-1})^t y`, and `Φ · dim P_i =
//! (-1)^n dim I_i`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{BoundQuiverAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{matrix_order, IntMatrix, IntVec};
use crate::rep;

pub const DEFAULT_ORDER_CAP: u64 = 100_000;

/// The Euler bilinear form of an algebra, backed by the exact inverse of
/// the Cartan matrix (integral because acyclicity makes det C = 1).
#[derive(Debug, Clone)]
pub struct EulerForm {
    pub cartan: IntMatrix,
    pub cartan_inverse: IntMatrix,
}

impl EulerForm {
    pub fn new(alg: &BoundQuiverAlgebra) -> Self {
        let cartan = alg.cartan().clone();
        let cartan_inverse = cartan
            .inverse_unimodular()
            .expect("Cartan matrix of an acyclic bound quiver is unimodular");
        EulerForm { cartan, cartan_inverse }
    }

    /// ⟨x, y⟩ = x^t (C^{-1})^t y = (C^{-1} x) · y.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let cx = self.cartan_inverse.mul_vec(x);
        cx.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// q(x) = ⟨x, x⟩.
    pub fn q(&self, x: &[BigInt]) -> BigInt {
        self.pairing(x, x)
    }

    pub fn dim_projective(&self, i: VertexId) -> IntVec {
        (0..self.cartan.rows).map(|r| self.cartan[(r, i)].clone()).collect()
    }

    pub fn dim_injective(&self, i: VertexId) -> IntVec {
        (0..self.cartan.cols).map(|c| self.cartan[(i, c)].clone()).collect()
    }
}

pub fn euler_pairing(alg: &BoundQuiverAlgebra, x: &[BigInt], y: &[BigInt]) -> BigInt {
    EulerForm::new(alg).pairing(x, y)
}

pub fn quadratic_form(alg: &BoundQuiverAlgebra, x: &[BigInt]) -> BigInt {
    EulerForm::new(alg).q(x)
}

/// Tits form: Σ x_i² − Σ_{arrows} x_{s(a)} x_{e(a)} + Σ_{relations}
/// x_{s(r)} x_{e(r)}. Agrees with the Euler quadratic form exactly when the
/// global dimension is at most two, which is why that is a precondition.
pub fn tits_form(alg: &BoundQuiverAlgebra, x: &[BigInt]) -> Result<BigInt> {
    let gd = rep::global_dimension(alg);
    if gd > 2 {
        return Err(Error::validation(format!(
            "Tits form requires global dimension <= 2, found {gd}"
        )));
    }
    Ok(tits_form_unchecked(alg, x))
}

pub fn tits_form_unchecked(alg: &BoundQuiverAlgebra, x: &[BigInt]) -> BigInt {
    let mut q: BigInt = x.iter().map(|v| v * v).sum();
    for a in &alg.quiver.arrows {
        q -= &x[a.source] * &x[a.target];
    }
    for r in &alg.relations {
        q += &x[r.source] * &x[r.target];
    }
    q
}

#[derive(Debug, Clone)]
pub struct CoxeterData {
    pub phi: IntMatrix,
    pub phi_inverse: IntMatrix,
    pub order: u64,
    pub cartan_inverse: IntMatrix,
}

/// Φ = (−1)^n C^t C^{-1} and its multiplicative order.
pub fn coxeter_with_cap(alg: &BoundQuiverAlgebra, cap: u64) -> Result<CoxeterData> {
    let form = EulerForm::new(alg);
    let mut phi = form.cartan.transpose().mul(&form.cartan_inverse);
    if alg.n % 2 == 1 {
        phi = phi.neg();
    }
    let order = matrix_order(&phi, cap).map_err(|e| {
        Error::computation(format!(
            "Coxeter order: {e}; the algebra is likely not n-representation-finite"
        ))
    })?;
    let phi_inverse = phi
        .inverse_unimodular()
        .expect("Coxeter transformation is unimodular");
    Ok(CoxeterData { phi, phi_inverse, order, cartan_inverse: form.cartan_inverse })
}

pub fn coxeter(alg: &BoundQuiverAlgebra) -> Result<CoxeterData> {
    coxeter_with_cap(alg, DEFAULT_ORDER_CAP)
}

/// A reflection transformation t_k = δ_k s_k, stored with its exact inverse.
/// The matrix differs from the identity only in row k.
#[derive(Debug, Clone)]
pub struct ReflectionMatrix {
    pub vertex: VertexId,
    pub matrix: IntMatrix,
    pub inverse: IntMatrix,
    /// Index i of the tilt stage Λ^i this reflection belongs to (0-based).
    pub algebra_stage: usize,
}

/// t_k for the algebra's own Euler form. Row k is assembled from the two
/// Euler pairings ⟨x, e_k⟩ + ⟨e_k, x⟩ directly, so no half-integers ever
/// appear, and then scaled by (−1)^{n−1} (the δ twist; identity for odd n).
pub fn reflection_t(alg: &BoundQuiverAlgebra, k: VertexId) -> ReflectionMatrix {
    let form = EulerForm::new(alg);
    let l = alg.vertex_count();
    let mut t = IntMatrix::identity(l);
    let sign_flip = alg.n % 2 == 0; // (−1)^{n−1} = −1 iff n even
    for j in 0..l {
        // s_k(x)_k = x_k − ⟨x, e_k⟩ − ⟨e_k, x⟩; coefficient of x_j is
        // δ_{jk} − C^{-1}[k][j] − C^{-1}[j][k].
        let mut coeff = if j == k { BigInt::from(1) } else { BigInt::zero() };
        coeff -= &form.cartan_inverse[(k, j)];
        coeff -= &form.cartan_inverse[(j, k)];
        t[(k, j)] = if sign_flip { -coeff } else { coeff };
    }
    let inverse = t.inverse_unimodular().expect("reflection is unimodular");
    ReflectionMatrix { vertex: k, matrix: t, inverse, algebra_stage: 0 }
}

/// The reflections t_1..t_l collected along the tilt sequence (each t_i
/// computed from the Euler form of Λ^i, not of Λ), their product
/// c = t_l…t_1, and its inverse.
#[derive(Debug, Clone)]
pub struct ReflectionSequence {
    pub reflections: Vec<ReflectionMatrix>,
    pub c: IntMatrix,
    pub c_inverse: IntMatrix,
}

pub fn reflection_sequence(alg: &BoundQuiverAlgebra) -> Result<ReflectionSequence> {
    let seq = crate::mutation::tilt_sequence(alg)?;
    Ok(sequence_from_tilts(&seq.reflections))
}

pub fn sequence_from_tilts(reflections: &[ReflectionMatrix]) -> ReflectionSequence {
    let l = reflections
        .first()
        .map(|r| r.matrix.rows)
        .unwrap_or(0);
    let mut c = IntMatrix::identity(l);
    for r in reflections {
        c = r.matrix.mul(&c);
    }
    let c_inverse = c.inverse_unimodular().expect("product of unimodulars");
    ReflectionSequence { reflections: reflections.to_vec(), c, c_inverse }
}

/// True when every entry is >= 0.
pub fn is_nonnegative(x: &[BigInt]) -> bool {
    x.iter().all(|v| !v.is_negative())
}

/// True when every entry is <= 0.
pub fn is_nonpositive(x: &[BigInt]) -> bool {
    x.iter().all(|v| !v.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::linalg::int_vec;

    fn a2() -> BoundQuiverAlgebra {
        parse_algebra(include_str!("../fixtures/a2.json")).unwrap()
    }

    fn auslander_a3() -> BoundQuiverAlgebra {
        parse_algebra(include_str!("../fixtures/auslander_a3.json")).unwrap()
    }

    #[test]
    fn a2_euler_values() {
        // ⟨dim P_1, dim P_2⟩ = dim Hom(P_1, P_2) = 1 and ⟨dim P_2, dim P_1⟩ = 0.
        let alg = a2();
        let form = EulerForm::new(&alg);
        let p1 = form.dim_projective(0);
        let p2 = form.dim_projective(1);
        assert_eq!(form.pairing(&p1, &p2), BigInt::from(1));
        assert_eq!(form.pairing(&p2, &p1), BigInt::zero());
    }

    #[test]
    fn unit_vectors_are_roots() {
        for alg in [a2(), auslander_a3()] {
            let form = EulerForm::new(&alg);
            for i in 0..alg.vertex_count() {
                let mut e = vec![BigInt::zero(); alg.vertex_count()];
                e[i] = BigInt::from(1);
                assert_eq!(form.q(&e), BigInt::from(1));
            }
        }
    }

    #[test]
    fn q_of_dim_i1_is_one() {
        let alg = auslander_a3();
        let form = EulerForm::new(&alg);
        assert_eq!(form.q(&int_vec(&[1, 1, 1, 0, 0, 0])), BigInt::from(1));
    }

    #[test]
    fn a2_coxeter_matrix_and_order() {
        let alg = a2();
        let data = coxeter(&alg).unwrap();
        assert_eq!(data.phi, IntMatrix::from_rows(vec![vec![-1, 1], vec![-1, 0]]));
        assert_eq!(data.order, 3);
    }

    #[test]
    fn one_vertex_coxeter() {
        let alg = parse_algebra(r#"{"n": 2, "vertices": ["1"], "arrows": []}"#).unwrap();
        let data = coxeter(&alg).unwrap();
        assert!(data.phi.is_identity());
        assert_eq!(data.order, 1);
    }

    #[test]
    fn auslander_a3_coxeter_matches_printed_matrix() {
        let alg = auslander_a3();
        let data = coxeter(&alg).unwrap();
        let expected = IntMatrix::from_rows(vec![
            vec![1, -1, 0, 1, 0, 0],
            vec![1, 0, -1, 0, 1, 0],
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, -1, 0, 0, 1],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
        ]);
        assert_eq!(data.phi, expected);
        assert_eq!(data.order, 5);
    }

    #[test]
    fn phi_sends_projectives_to_signed_injectives() {
        for alg in [a2(), auslander_a3()] {
            let data = coxeter(&alg).unwrap();
            let form = EulerForm::new(&alg);
            let sign: BigInt = if alg.n % 2 == 0 { 1.into() } else { (-1).into() };
            for i in 0..alg.vertex_count() {
                let lhs = data.phi.mul_vec(&form.dim_projective(i));
                let rhs: IntVec =
                    form.dim_injective(i).iter().map(|v| v * &sign).collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tits_matches_printed_form_on_auslander_a3() {
        // q(x) = Σ x_i² − x1x2 − x2x3 − x2x4 − x3x5 − x4x5 − x5x6
        //        + x1x4 + x2x5 + x4x6, evaluated at (1,1,1,0,0,0) gives 1.
        let alg = auslander_a3();
        let x = int_vec(&[1, 1, 1, 0, 0, 0]);
        assert_eq!(tits_form(&alg, &x).unwrap(), BigInt::from(1));
        let e4 = int_vec(&[0, 0, 0, 1, 0, 0]);
        assert_eq!(tits_form(&alg, &e4).unwrap(), BigInt::from(1));
        let zero = int_vec(&[0; 6]);
        assert_eq!(tits_form(&alg, &zero).unwrap(), BigInt::zero());
    }

    #[test]
    fn tits_rejects_high_global_dimension() {
        let alg = parse_algebra(include_str!("../fixtures/nakayama5_n4.json")).unwrap();
        assert!(tits_form(&alg, &int_vec(&[1, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn reflection_t1_on_auslander_a3() {
        let alg = auslander_a3();
        let t1 = reflection_t(&alg, 0);
        let mut expected = IntMatrix::identity(6);
        for (j, v) in [1i64, -1, 0, 1, 0, 0].iter().enumerate() {
            expected[(0, j)] = BigInt::from(*v);
        }
        assert_eq!(t1.matrix, expected);
        let mut expected_inv = IntMatrix::identity(6);
        for (j, v) in [1i64, 1, 0, -1, 0, 0].iter().enumerate() {
            expected_inv[(0, j)] = BigInt::from(*v);
        }
        assert_eq!(t1.inverse, expected_inv);
    }

    #[test]
    fn reflection_on_a2_is_classical() {
        let alg = a2();
        let t1 = reflection_t(&alg, 0);
        assert_eq!(
            t1.matrix,
            IntMatrix::from_rows(vec![vec![-1, 1], vec![0, 1]])
        );
        // For odd n the reflection is an involution.
        assert_eq!(t1.matrix, t1.inverse);
    }
}
