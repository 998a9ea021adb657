//! Reflection functors on explicit representations, the Coxeter functors
//! C^± as their composites along an admissible ordering, and the F_0
//! membership test for the tilting torsion class.
//!
//! Q_k^+ replaces the space at a sink k by the kernel of the map assembled
//! from the mutation differential α = (a_cb): the linear map
//! (φ_{a_cb}): ⊕_C X_{j_c} -> ⊕_B X_{i_b}; the maps along the new arrows
//! a_c^*: k -> j_c are the kernel inclusion followed by the projections.
//! Q_k^- is the dual cokernel construction, computed here through the
//! opposite algebra.

use std::collections::BTreeMap;



use crate::algebra::{BoundQuiverAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::forms::reflection_t;
use crate::linalg::{IntVec, RatMatrix};
use crate::mutation::{self, MutationResult, TiltSequence};
use crate::rep::{self, Representation};

#[derive(Debug, Clone)]
pub struct FunctorResult {
    pub algebra_out: BoundQuiverAlgebra,
    pub rep_out: Representation,
    /// Whether dim(rep_out) = t_k(dim(rep_in)) — guaranteed on F_0 but
    /// computed unconditionally.
    pub dim_check: bool,
}

/// Q_k^+ at a sink k.
pub fn reflect_plus(
    alg: &BoundQuiverAlgebra,
    k: VertexId,
    x: &Representation,
) -> Result<FunctorResult> {
    rep::check_representation(alg, x)?;
    let mres = mutation::apr_tilt(alg, k)?;
    reflect_plus_given(alg, &mres, x)
}

/// Q_k^+ with a precomputed mutation, so composites do not redo resolutions.
pub fn reflect_plus_given(
    alg: &BoundQuiverAlgebra,
    mres: &MutationResult,
    x: &Representation,
) -> Result<FunctorResult> {
    let k = mres.data.vertex;
    let b_sum = &mres.data.b_summands;
    let c_sum = &mres.data.c_summands;
    let c_offsets: Vec<usize> = c_sum
        .iter()
        .scan(0usize, |acc, &j| {
            let off = *acc;
            *acc += x.dims[j];
            Some(off)
        })
        .collect();
    let total_c: usize = c_sum.iter().map(|&j| x.dims[j]).sum();
    let total_b: usize = b_sum.iter().map(|&i| x.dims[i]).sum();
    let mut f = RatMatrix::zeros(total_b, total_c);
    let mut row_off = 0;
    for (b, &ib) in b_sum.iter().enumerate() {
        for (c, &jc) in c_sum.iter().enumerate() {
            let e = mres.data.alpha.entry(c, b);
            if !e.is_zero() {
                let block = rep::element_matrix(alg, x, e); // X_{j_c} -> X_{i_b}
                for r in 0..x.dims[ib] {
                    for cc in 0..x.dims[jc] {
                        f[(row_off + r, c_offsets[c] + cc)] = block[(r, cc)].clone();
                    }
                }
            }
        }
        row_off += x.dims[ib];
    }
    let kern = f.kernel_basis();
    let new_dim = kern.len();

    let out_alg = &mres.algebra_out;
    let mut dims = x.dims.clone();
    dims[k] = new_dim;
    let mut maps = Vec::with_capacity(out_alg.quiver.arrows.len());
    for a in &out_alg.quiver.arrows {
        if a.source == k {
            // a = a_c^*: take the c-slice of the kernel vectors.
            let c = mres
                .new_arrows
                .iter()
                .position(|(name, _)| *name == a.name)
                .expect("new arrow");
            let jc = c_sum[c];
            debug_assert_eq!(jc, a.target);
            let mut m = RatMatrix::zeros(x.dims[jc], new_dim);
            for (col, vec) in kern.iter().enumerate() {
                for r in 0..x.dims[jc] {
                    m[(r, col)] = vec[c_offsets[c] + r].clone();
                }
            }
            maps.push(m);
        } else {
            let old = alg.quiver.arrow_index(&a.name).expect("kept arrow");
            maps.push(x.maps[old].clone());
        }
    }
    let rep_out = Representation { dims, maps };
    rep::check_representation(out_alg, &rep_out)?;
    let t = reflection_t(alg, k);
    let dim_check = t.matrix.mul_vec(&x.dim_vector()) == rep_out.dim_vector();
    Ok(FunctorResult { algebra_out: out_alg.clone(), rep_out, dim_check })
}

/// Q_k^- at a source k of `alg`, the dual cokernel construction.
pub fn reflect_minus(
    alg: &BoundQuiverAlgebra,
    k: VertexId,
    y: &Representation,
) -> Result<FunctorResult> {
    rep::check_representation(alg, y)?;
    let label = &alg.quiver.vertices[k];
    if !alg.quiver.is_source(k) {
        return Err(Error::validation(format!("vertex {label} is not a source")));
    }
    let op = alg.opposite();
    let y_op = rep::dual_rep(alg, &op, y);
    let plus = reflect_plus(&op, k, &y_op)?;
    let algebra_out = plus.algebra_out.opposite();
    let rep_out = rep::dual_rep(&plus.algebra_out, &algebra_out, &plus.rep_out);
    rep::check_representation(&algebra_out, &rep_out)?;
    // Prop. 3.7 dual direction: dim(Q_k^- Y) = t_k^{-1}(dim Y), with t_k the
    // reflection of the target algebra.
    let t = reflection_t(&algebra_out, k);
    let dim_check = t.inverse.mul_vec(&y.dim_vector()) == rep_out.dim_vector();
    Ok(FunctorResult { algebra_out, rep_out, dim_check })
}

/// Re-express a representation over an isomorphic bound quiver: pull back
/// along the algebra isomorphism that matches arrows canonically and
/// rescales them; fails if the quivers do not match.
pub fn rename_rep(
    from: &BoundQuiverAlgebra,
    to: &BoundQuiverAlgebra,
    x: &Representation,
) -> Result<Representation> {
    let Some(scale) = mutation::arrow_scaling(to, from) else {
        return Err(Error::computation(
            "algebras are not isomorphic as bound quivers; cannot transport representations",
        ));
    };
    // to-arrow names to from-arrow names.
    let rename: BTreeMap<String, String> =
        mutation::canonical_renaming(&from.quiver, &to.quiver);
    let mut maps = Vec::with_capacity(to.quiver.arrows.len());
    for a in &to.quiver.arrows {
        let from_name = rename.get(&a.name).cloned().unwrap_or_else(|| a.name.clone());
        let from_idx = from.quiver.arrow_index(&from_name)?;
        maps.push(x.maps[from_idx].scale(&scale[&a.name]));
    }
    let out = Representation { dims: x.dims.clone(), maps };
    rep::check_representation(to, &out)?;
    Ok(out)
}

/// Precomputed tilt data for the Coxeter functors. Refuses to build when the
/// rotation Λ^{l+1} ≅ Λ fails, since then there is no identification to
/// transport results back along.
pub struct CoxeterContext {
    pub seq: TiltSequence,
}

pub fn coxeter_context(alg: &BoundQuiverAlgebra) -> Result<CoxeterContext> {
    let seq = mutation::tilt_sequence(alg)?;
    if !seq.rotation_check {
        return Err(Error::computation(
            "rotation check failed: Λ^{l+1} is not isomorphic to Λ",
        ));
    }
    Ok(CoxeterContext { seq })
}

/// C^+ X = T_l^+ ... T_1^+ X, re-expressed over the input algebra.
pub fn coxeter_plus(alg: &BoundQuiverAlgebra, x: &Representation) -> Result<Representation> {
    let ctx = coxeter_context(alg)?;
    coxeter_plus_with(&ctx, x)
}

pub fn coxeter_plus_with(ctx: &CoxeterContext, x: &Representation) -> Result<Representation> {
    let l = ctx.seq.stages[0].vertex_count();
    let mut cur = x.clone();
    for i in 0..l {
        let stage = &ctx.seq.stages[i];
        let res = reflect_plus_given(stage, &ctx.seq.mutations[i], &cur)?;
        cur = res.rep_out;
    }
    rename_rep(&ctx.seq.stages[l], &ctx.seq.stages[0], &cur)
}

/// C^- X = T_1^- ... T_l^- X, re-expressed over the input algebra.
pub fn coxeter_minus(alg: &BoundQuiverAlgebra, x: &Representation) -> Result<Representation> {
    let ctx = coxeter_context(alg)?;
    coxeter_minus_with(&ctx, x)
}

pub fn coxeter_minus_with(ctx: &CoxeterContext, x: &Representation) -> Result<Representation> {
    let l = ctx.seq.stages[0].vertex_count();
    let mut cur = rename_rep(&ctx.seq.stages[0], &ctx.seq.stages[l], x)?;
    for i in (0..l).rev() {
        let res = reflect_minus(&ctx.seq.stages[i + 1], i, &cur)?;
        cur = rename_rep(&res.algebra_out, &ctx.seq.stages[i], &res.rep_out)?;
    }
    Ok(cur)
}

/// Membership in F_0(T_k) = { X | Ext^j(T_k, X) = 0 for all j != 0 }, with
/// T_k = τ_n^- P_k ⊕ Λ/P_k.
pub fn in_f0(alg: &BoundQuiverAlgebra, k: VertexId, x: &Representation) -> Result<bool> {
    rep::check_representation(alg, x)?;
    mutation::mutation_data(alg, k)?;
    let tk = tilting_module(alg, k);
    let res = rep::proj_resolution(alg, &tk, rep::default_maxlen(alg));
    let dims = rep::ext_dims_from(alg, &res, x);
    Ok((1..=alg.n).all(|j| dims.get(j).copied().unwrap_or(0) == 0))
}

/// T_k = τ_n^- P_k ⊕ ⊕_{i ≠ k} P_i.
pub fn tilting_module(alg: &BoundQuiverAlgebra, k: VertexId) -> Representation {
    let tau = rep::tau_n_minus(alg, &rep::projective_rep(alg, k));
    let mut parts = vec![tau];
    for i in 0..alg.vertex_count() {
        if i != k {
            parts.push(rep::projective_rep(alg, i));
        }
    }
    let refs: Vec<&Representation> = parts.iter().collect();
    rep::direct_sum(alg, &refs)
}

/// Dimension vector as plain integers, for assertions.
pub fn dims_of(x: &Representation) -> IntVec {
    x.dim_vector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::linalg::int_vec;
    use num_traits::Zero;

    fn fixture(name: &str) -> BoundQuiverAlgebra {
        let base = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");
        let text = std::fs::read_to_string(format!("{base}{name}.json")).unwrap();
        parse_algebra(&text).unwrap()
    }

    fn v(alg: &BoundQuiverAlgebra, label: &str) -> VertexId {
        alg.quiver.vertex_index(label).unwrap()
    }

    #[test]
    fn reflecting_the_simple_projective_gives_zero() {
        let alg = fixture("fork_n2");
        let k = v(&alg, "1");
        let res = reflect_plus(&alg, k, &rep::projective_rep(&alg, k)).unwrap();
        assert!(res.rep_out.is_zero());
    }

    #[test]
    fn kernel_formula_on_fork_n3() {
        // The space at the mutated vertex becomes Ker(X_5 -> X_3 ⊕ X_4).
        let alg = fixture("fork_n3");
        let k = v(&alg, "1");
        let x = rep::projective_rep(&alg, v(&alg, "5"));
        let res = reflect_plus(&alg, k, &x).unwrap();
        // P_5 has dims (0,1,1,1,1); the map X_5 -> X_3 ⊕ X_4 is injective
        // there, so the new space at 1 is zero and the rest is untouched.
        assert_eq!(res.rep_out.dims[k], 0);
        for lbl in ["2", "3", "4", "5"] {
            let i = v(&alg, lbl);
            assert_eq!(res.rep_out.dims[i], x.dims[i]);
        }
    }

    #[test]
    fn dim_check_on_f0_members() {
        let alg = fixture("fork_n2");
        let k = v(&alg, "1");
        for lbl in ["2", "3", "4"] {
            let x = rep::projective_rep(&alg, v(&alg, lbl));
            assert!(in_f0(&alg, k, &x).unwrap());
            let res = reflect_plus(&alg, k, &x).unwrap();
            assert!(res.dim_check, "dim(Q_k^+ P_{lbl}) = t_k dim P_{lbl}");
        }
        let pk = rep::projective_rep(&alg, k);
        assert!(!in_f0(&alg, k, &pk).unwrap(), "P_k itself is the excluded case");
    }

    #[test]
    fn tau_minus_pk_is_in_f0() {
        let alg = fixture("fork_n2");
        let k = v(&alg, "1");
        let t = rep::tau_n_minus(&alg, &rep::projective_rep(&alg, k));
        assert!(in_f0(&alg, k, &t).unwrap());
    }

    #[test]
    fn minus_plus_round_trip_on_projectives() {
        let alg = fixture("fork_n2");
        let k = v(&alg, "1");
        for lbl in ["2", "3", "4"] {
            let x = rep::projective_rep(&alg, v(&alg, lbl));
            let plus = reflect_plus(&alg, k, &x).unwrap();
            let minus = reflect_minus(&plus.algebra_out, k, &plus.rep_out).unwrap();
            let back = rename_rep(&minus.algebra_out, &alg, &minus.rep_out).unwrap();
            assert!(rep::is_isomorphic(&alg, &x, &back, 11), "round trip on P_{lbl}");
        }
    }

    #[test]
    fn simple_injective_reflects_to_zero() {
        let alg = fixture("fork_n2");
        let k = v(&alg, "1");
        let tilted = mutation::apr_tilt(&alg, k).unwrap().algebra_out;
        // After the tilt, the simple at k is injective; Q_k^- kills it.
        let s = rep::simple_rep(&tilted, k);
        let res = reflect_minus(&tilted, k, &s).unwrap();
        assert!(res.rep_out.is_zero());
    }

    #[test]
    fn coxeter_plus_matches_tau_on_injectives() {
        let alg = fixture("auslander_a3");
        let i4 = rep::injective_rep(&alg, v(&alg, "4"));
        let c = coxeter_plus(&alg, &i4).unwrap();
        assert_eq!(c.dim_vector(), int_vec(&[1, 1, 0, 0, 0, 0]));
        let t = rep::tau_n(&alg, &i4);
        assert_eq!(c.dim_vector(), t.dim_vector());
    }

    #[test]
    fn coxeter_plus_kills_projectives() {
        let alg = fixture("auslander_a3");
        let ctx = coxeter_context(&alg).unwrap();
        for i in 0..6 {
            let c = coxeter_plus_with(&ctx, &rep::projective_rep(&alg, i)).unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn coxeter_minus_kills_injectives() {
        let alg = fixture("auslander_a3");
        let ctx = coxeter_context(&alg).unwrap();
        for i in 0..6 {
            let c = coxeter_minus_with(&ctx, &rep::injective_rep(&alg, i)).unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn projectives_arise_from_stage_simples() {
        // P_i ≅ T_1^- ... T_{i-1}^-(S_i) with S_i the simple projective of Λ^i.
        let alg = fixture("auslander_a3");
        let ctx = coxeter_context(&alg).unwrap();
        for i in 0..6 {
            let mut cur = rep::simple_rep(&ctx.seq.stages[i], i);
            for j in (0..i).rev() {
                let res = reflect_minus(&ctx.seq.stages[j + 1], j, &cur).unwrap();
                cur = rename_rep(&res.algebra_out, &ctx.seq.stages[j], &res.rep_out).unwrap();
            }
            let p = rep::projective_rep(&alg, i);
            assert_eq!(cur.dim_vector(), p.dim_vector());
            assert!(rep::is_isomorphic(&alg, &cur, &p, 5));
        }
    }

    #[test]
    fn zero_rep_passes_through() {
        let alg = fixture("auslander_a3");
        let z = Representation::zero(&alg);
        let res = reflect_plus(&alg, 0, &z).unwrap();
        assert!(res.rep_out.is_zero());
        assert!(res
            .rep_out
            .dim_vector()
            .iter()
            .all(|d| d.is_zero()));
    }
}
