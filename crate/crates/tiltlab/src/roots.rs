//! Cluster-roots and their classification.
//!
//! Two independent enumerations of the cluster-roots are implemented: by
//! iterating the Coxeter transformation on injective dimension vectors
//! until a projective dimension vector is reached, and by iterating c^{-1}
//! on the vectors p_i built from the reflection transformations of the tilt
//! sequence. Both are justified by the uniqueness of cluster-indecomposable
//! modules given their dimension vectors, which makes the projective /
//! injective stop tests sound.
//!
//! Positive-root searches are box-bounded: the set of all positive roots
//! can be infinite, so results are always reported relative to the box
//! `0 <= x_i <= bound`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{BoundQuiverAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::forms::{self, CoxeterData, EulerForm};
use crate::linalg::{IntMatrix, IntVec};

pub const DEFAULT_NODE_CAP: u64 = 200_000_000;

#[derive(Debug, Clone)]
pub struct ClusterRootTable {
    /// Orbit of vertex i: dim I_i, Φ dim I_i, ..., ending at some dim P_j.
    pub orbits: Vec<Vec<IntVec>>,
    /// σ(i) = the j with τ_n^{m_i} I_i ≅ P_j.
    pub sigma: Vec<VertexId>,
    /// m_i = orbit length minus one.
    pub exponents: Vec<usize>,
    /// Deduplicated union of all orbits, sorted.
    pub all_roots: Vec<IntVec>,
}

fn sorted_dedup(mut v: Vec<IntVec>) -> Vec<IntVec> {
    v.sort();
    v.dedup();
    v
}

/// Cluster-roots by Coxeter iteration on injectives.
pub fn cluster_roots_phi(alg: &BoundQuiverAlgebra, cox: &CoxeterData) -> Result<ClusterRootTable> {
    let l = alg.vertex_count();
    let form = EulerForm::new(alg);
    let proj: Vec<IntVec> = (0..l).map(|j| form.dim_projective(j)).collect();
    let step_cap = cox.order as usize * l + 1;
    let mut orbits = Vec::with_capacity(l);
    let mut sigma = Vec::with_capacity(l);
    let mut exponents = Vec::with_capacity(l);
    for i in 0..l {
        let mut x = form.dim_injective(i);
        let mut orbit = vec![x.clone()];
        let mut found = None;
        for _ in 0..step_cap {
            if let Some(j) = proj.iter().position(|p| *p == x) {
                found = Some(j);
                break;
            }
            x = cox.phi.mul_vec(&x);
            if x.iter().any(|v| v.is_negative()) {
                return Err(Error::computation(format!(
                    "orbit of I_{} leaves the nonnegative orthant; the algebra is not n-representation-finite",
                    alg.quiver.vertices[i]
                )));
            }
            orbit.push(x.clone());
        }
        let Some(j) = found else {
            return Err(Error::computation(format!(
                "orbit of I_{} does not reach a projective within {} steps",
                alg.quiver.vertices[i], step_cap
            )));
        };
        exponents.push(orbit.len() - 1);
        sigma.push(j);
        orbits.push(orbit);
    }
    let all_roots = sorted_dedup(orbits.iter().flatten().cloned().collect());
    Ok(ClusterRootTable { orbits, sigma, exponents, all_roots })
}

/// Cluster-roots as { c^{-u} p_i }: each chain starts at
/// p_i = t_1^{-1} ... t_{i-1}^{-1} e_i and stops at the first injective
/// dimension vector (inclusive), since τ_n^- annihilates injectives.
pub fn cluster_roots_reflections(alg: &BoundQuiverAlgebra) -> Result<Vec<IntVec>> {
    let seq = forms::reflection_sequence(alg)?;
    let l = alg.vertex_count();
    let form = EulerForm::new(alg);
    let inj: Vec<IntVec> = (0..l).map(|i| form.dim_injective(i)).collect();
    let cap = forms::coxeter(alg)?.order as usize * l + 1;
    let mut roots = Vec::new();
    for i in 0..l {
        let mut v = unit_vector(l, i);
        for j in (0..i).rev() {
            v = seq.reflections[j].inverse.mul_vec(&v);
        }
        let mut steps = 0;
        loop {
            roots.push(v.clone());
            if inj.contains(&v) {
                break;
            }
            v = seq.c_inverse.mul_vec(&v);
            steps += 1;
            if steps > cap {
                return Err(Error::computation(format!(
                    "c^{{-1}}-chain from p_{} does not reach an injective within {cap} steps",
                    alg.quiver.vertices[i]
                )));
            }
        }
    }
    Ok(sorted_dedup(roots))
}

/// q_j = t_l ... t_{j+1} e_j; equals dim I_j along a valid tilt sequence.
pub fn injective_vectors_from_reflections(
    seq: &forms::ReflectionSequence,
    l: usize,
) -> Vec<IntVec> {
    (0..l)
        .map(|j| {
            let mut v = unit_vector(l, j);
            for t in seq.reflections.iter().skip(j + 1) {
                v = t.matrix.mul_vec(&v);
            }
            v
        })
        .collect()
}

pub fn unit_vector(l: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); l];
    v[i] = BigInt::from(1);
    v
}

// ---------------------------------------------------------------------------
// Box-bounded enumerations
// ---------------------------------------------------------------------------

/// The Euler quadratic form with integer coefficients: q(x) = Σ d_i x_i² +
/// Σ_{i<j} o_{ij} x_i x_j.
struct QuadForm {
    diag: Vec<i64>,
    off: Vec<Vec<i64>>, // off[i][j] for i < j
}

impl QuadForm {
    fn new(alg: &BoundQuiverAlgebra) -> Result<QuadForm> {
        let form = EulerForm::new(alg);
        let l = alg.vertex_count();
        let g = form.cartan_inverse.transpose();
        let as_i64 = |v: &BigInt| -> Result<i64> {
            v.to_i64().ok_or_else(|| Error::computation("form coefficient exceeds i64"))
        };
        let mut diag = Vec::with_capacity(l);
        let mut off = vec![vec![0i64; l]; l];
        for i in 0..l {
            diag.push(as_i64(&g[(i, i)])?);
            for j in i + 1..l {
                let s = &g[(i, j)] + &g[(j, i)];
                off[i][j] = as_i64(&s)?;
            }
        }
        Ok(QuadForm { diag, off })
    }

    fn eval(&self, x: &[i64]) -> i64 {
        let l = x.len();
        let mut q = 0i64;
        for i in 0..l {
            q += self.diag[i] * x[i] * x[i];
            for j in i + 1..l {
                q += self.off[i][j] * x[i] * x[j];
            }
        }
        q
    }

    /// Interval bound for q over the partial assignment `x[..t]` with
    /// coordinate i ranging over 0..=ub[i] for i >= t.
    fn bounds(&self, x: &[i64], t: usize, ub: &[i64]) -> (i64, i64) {
        let l = self.diag.len();
        let (mut lo, mut hi) = (0i64, 0i64);
        let span = |c: i64| -> (i64, i64) { (c.min(0), c.max(0)) };
        for i in 0..l {
            if i < t {
                let v = self.diag[i] * x[i] * x[i];
                lo += v;
                hi += v;
            } else {
                let (a, z) = span(self.diag[i] * ub[i] * ub[i]);
                lo += a;
                hi += z;
            }
            for j in i + 1..l {
                let c = self.off[i][j];
                if c == 0 {
                    continue;
                }
                if j < t {
                    let v = c * x[i] * x[j];
                    lo += v;
                    hi += v;
                } else if i < t {
                    let (a, z) = span(c * x[i] * ub[j]);
                    lo += a;
                    hi += z;
                } else {
                    let (a, z) = span(c * ub[i] * ub[j]);
                    lo += a;
                    hi += z;
                }
            }
        }
        (lo, hi)
    }
}

fn to_intvec(x: &[i64]) -> IntVec {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

/// Sum-of-squares certificate for 2q when the symmetrized form is positive
/// semidefinite: 2q(x) = Σ_k d_k u_k² with d_k >= 0 and
/// u_k = x_k + Σ_{j<k} w_kj x_j, so every u_k is determined by the prefix
/// x_1..x_k. During the search the accumulated energy is a monotone lower
/// bound for 2q and prunes as soon as it exceeds the target. The bound is
/// evaluated in floating point with a safety margin; only pruning uses it,
/// leaf acceptance stays exact.
struct SosForm {
    w: Vec<Vec<f64>>,
    d: Vec<f64>,
}

impl SosForm {
    fn new(alg: &BoundQuiverAlgebra) -> Option<SosForm> {
        use num_rational::BigRational;
        use num_traits::One;
        let form = EulerForm::new(alg);
        let l = alg.vertex_count();
        let g = form.cartan_inverse.transpose();
        // T = G + G^t, reversed so the factorization is anchored at the last
        // coordinate; un-reversing the result makes each square depend on a
        // prefix instead of a suffix.
        let mut a = vec![vec![BigRational::zero(); l]; l];
        for i in 0..l {
            for j in 0..l {
                let v = &g[(l - 1 - i, l - 1 - j)] + &g[(l - 1 - j, l - 1 - i)];
                a[i][j] = BigRational::from(v);
            }
        }
        let mut lmat = vec![vec![BigRational::zero(); l]; l];
        let mut diag = vec![BigRational::zero(); l];
        for k in 0..l {
            let d = a[k][k].clone();
            if d < BigRational::zero() {
                return None; // indefinite
            }
            lmat[k][k] = BigRational::one();
            if d.is_zero() {
                if (k + 1..l).any(|i| !a[i][k].is_zero()) {
                    return None; // zero pivot with nonzero row: indefinite
                }
                continue;
            }
            diag[k] = d.clone();
            for i in k + 1..l {
                lmat[i][k] = &a[i][k] / &d;
            }
            for i in k + 1..l {
                for j in k + 1..l {
                    let sub = &lmat[i][k] * &d * &lmat[j][k];
                    a[i][j] -= sub;
                }
            }
        }
        let to_f = |r: &BigRational| -> f64 {
            use num_traits::ToPrimitive;
            r.to_f64().unwrap_or(0.0)
        };
        // u_k (original order) = x_k + Σ_{j<k} L[rev k][rev j] x_j.
        let mut w = vec![vec![0f64; l]; l];
        let mut dd = vec![0f64; l];
        for k in 0..l {
            let rk = l - 1 - k;
            dd[k] = to_f(&diag[rk]);
            for j in 0..k {
                w[k][j] = to_f(&lmat[l - 1 - j][rk]);
            }
        }
        Some(SosForm { w, d: dd })
    }

    /// Energy contribution of coordinate t given the assigned prefix.
    fn square_at(&self, x: &[i64], t: usize) -> f64 {
        if self.d[t] == 0.0 {
            return 0.0;
        }
        let mut u = x[t] as f64;
        for j in 0..t {
            u += self.w[t][j] * x[j] as f64;
        }
        self.d[t] * u * u
    }
}

const SOS_MARGIN: f64 = 1e-6;

/// All nonzero x with 0 <= x_i <= bound and q(x) = 1, by depth-first
/// enumeration with interval pruning on the partial quadratic form.
pub fn positive_roots(
    alg: &BoundQuiverAlgebra,
    bound: i64,
    node_cap: u64,
) -> Result<Vec<IntVec>> {
    if bound < 1 {
        return Err(Error::validation("bound must be >= 1"));
    }
    let q = QuadForm::new(alg)?;
    let sos = SosForm::new(alg);
    let l = alg.vertex_count();
    let ub = vec![bound; l];
    let mut x = vec![0i64; l];
    let mut out = Vec::new();
    let mut nodes = 0u64;
    dfs_roots(&q, sos.as_ref(), 0.0, &mut x, 0, &ub, &mut out, &mut nodes, node_cap)?;
    Ok(sorted_dedup(out))
}

#[allow(clippy::too_many_arguments)]
fn dfs_roots(
    q: &QuadForm,
    sos: Option<&SosForm>,
    lb: f64,
    x: &mut [i64],
    t: usize,
    ub: &[i64],
    out: &mut Vec<IntVec>,
    nodes: &mut u64,
    cap: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::computation(format!(
            "positive-root search exceeded the node cap {cap}"
        )));
    }
    if t == x.len() {
        if x.iter().any(|&v| v != 0) && q.eval(x) == 1 {
            out.push(to_intvec(x));
        }
        return Ok(());
    }
    for v in 0..=ub[t] {
        x[t] = v;
        match sos {
            Some(f) => {
                let lb2 = lb + f.square_at(x, t);
                if lb2 <= 2.0 + SOS_MARGIN {
                    dfs_roots(q, sos, lb2, x, t + 1, ub, out, nodes, cap)?;
                }
            }
            None => {
                let (lo, hi) = q.bounds(x, t + 1, ub);
                if lo <= 1 && 1 <= hi {
                    dfs_roots(q, sos, lb, x, t + 1, ub, out, nodes, cap)?;
                }
            }
        }
    }
    x[t] = 0;
    Ok(())
}

/// All Φ-positive roots inside the box: vectors with every Coxeter iterate
/// nonnegative and q = 1.
///
/// The feasible cone {Φ^m x >= 0 for all m} is thin but interval bounds on
/// it are hopelessly loose, so the depth-first search prunes with a linear
/// programming relaxation: a small floating-point simplex maximizes the
/// worst row slack over the partial box, and when it reports infeasibility
/// the dual weights are verified exactly in rational arithmetic (a
/// nonnegative combination of the rows whose maximum over the box is
/// negative). A branch is only ever cut on a verified certificate, so
/// float error can cost time but never a solution.
pub fn phi_positive_roots(
    alg: &BoundQuiverAlgebra,
    cox: &CoxeterData,
    bound: i64,
    node_cap: u64,
) -> Result<Vec<IntVec>> {
    if bound < 1 {
        return Err(Error::validation("bound must be >= 1"));
    }
    let l = alg.vertex_count();
    let q = QuadForm::new(alg)?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut power = IntMatrix::identity(l);
    for _ in 0..cox.order {
        for r in 0..l {
            let row: Option<Vec<i64>> = power.row(r).iter().map(|v| v.to_i64()).collect();
            rows.push(row.ok_or_else(|| {
                Error::computation("Coxeter power entry exceeds i64")
            })?);
        }
        power = power.mul(&cox.phi);
    }
    rows.sort();
    rows.dedup();
    rows.retain(|r| r.iter().any(|&v| v < 0));

    let sos = SosForm::new(alg);
    let mut pruner = ConePruner::new(&rows, l);
    let lo = vec![0i64; l];
    let hi = vec![bound; l];
    let mut out = Vec::new();
    let mut nodes = 0u64;
    dfs_phi(
        &q,
        sos.as_ref(),
        0.0,
        &rows,
        &mut pruner,
        lo,
        hi,
        0,
        &mut out,
        &mut nodes,
        node_cap,
    )?;
    if std::env::var_os("TILTLAB_STATS").is_some() {
        eprintln!(
            "phi-positive: {} nodes, {} lp calls, {} certified prunes",
            nodes, pruner.calls, pruner.prunes
        );
    }
    Ok(sorted_dedup(out))
}

#[allow(clippy::too_many_arguments)]
fn dfs_phi(
    q: &QuadForm,
    sos: Option<&SosForm>,
    lb: f64,
    rows: &[Vec<i64>],
    pruner: &mut ConePruner,
    lo: Vec<i64>,
    hi: Vec<i64>,
    t: usize,
    out: &mut Vec<IntVec>,
    nodes: &mut u64,
    cap: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::computation(format!(
            "Φ-positive root search exceeded the node cap {cap}"
        )));
    }
    let l = lo.len();
    if t == l {
        if lo.iter().any(|&v| v != 0) && q.eval(&lo) == 1 {
            out.push(to_intvec(&lo));
        }
        return Ok(());
    }
    for v in lo[t]..=hi[t] {
        let mut lo2 = lo.clone();
        let mut hi2 = hi.clone();
        lo2[t] = v;
        hi2[t] = v;
        let lb2 = match sos {
            Some(f) => {
                let e = lb + f.square_at(&lo2, t);
                if e > 2.0 + SOS_MARGIN {
                    continue;
                }
                e
            }
            None => lb,
        };
        if quick_slack_ok(rows, &lo2, &hi2) && !pruner.certified_infeasible(&lo2, &hi2) {
            dfs_phi(q, sos, lb2, rows, pruner, lo2, hi2, t + 1, out, nodes, cap)?;
        }
    }
    Ok(())
}

/// Cheap necessary condition before the LP: every row must be able to
/// reach a nonnegative value on the box.
fn quick_slack_ok(rows: &[Vec<i64>], lo: &[i64], hi: &[i64]) -> bool {
    rows.iter().all(|row| {
        let smax: i64 = row
            .iter()
            .zip(lo.iter().zip(hi))
            .map(|(&c, (&a, &b))| (c * a).max(c * b))
            .sum();
        smax >= 0
    })
}

/// LP-based infeasibility test for {R x >= 0, lo <= x <= hi} with exact
/// certificate verification.
struct ConePruner {
    rows: Vec<Vec<i64>>,
    rows_rat: Vec<Vec<BigRational>>,
    l: usize,
    calls: u64,
    prunes: u64,
}

const LP_SHIFT: f64 = 1024.0;
const LP_MARGIN: f64 = 1e-6;
const LP_EPS: f64 = 1e-9;

impl ConePruner {
    fn new(rows: &[Vec<i64>], l: usize) -> ConePruner {
        let rows_rat = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
            .collect();
        ConePruner { rows: rows.to_vec(), rows_rat, l, calls: 0, prunes: 0 }
    }

    /// True only when the floating-point LP reports infeasibility and the
    /// dual certificate verifies exactly.
    fn certified_infeasible(&mut self, lo: &[i64], hi: &[i64]) -> bool {
        self.calls += 1;
        let Some(duals) = self.lp_infeasible(lo, hi) else { return false };
        // Certificate: with λ >= 0 and g = λᵀR, every point of the cone has
        // gᵀx >= 0; if the exact maximum of gᵀx over the box is negative,
        // the box misses the cone entirely.
        let mut g = vec![BigRational::zero(); self.l];
        for (i, &lam) in duals.iter().enumerate() {
            if lam <= 0.0 {
                continue;
            }
            let Some(lam_rat) = BigRational::from_float(lam) else { return false };
            for j in 0..self.l {
                g[j] += &lam_rat * &self.rows_rat[i][j];
            }
        }
        let mut max = BigRational::zero();
        for j in 0..self.l {
            let a = &g[j] * BigRational::from(BigInt::from(lo[j]));
            let b = &g[j] * BigRational::from(BigInt::from(hi[j]));
            max += if a > b { a } else { b };
        }
        let ok = max < BigRational::zero();
        if ok {
            self.prunes += 1;
        }
        ok
    }

    /// Phase-free bounded simplex: maximize t subject to
    /// R(lo + z) >= t·1, 0 <= z <= hi - lo, t <= 1. Returns the dual
    /// weights of the cone rows when the optimum shows t < -margin.
    fn lp_infeasible(&mut self, lo: &[i64], hi: &[i64]) -> Option<Vec<f64>> {
        let m = self.rows.len();
        let l = self.l;
        let n = l + 1; // z and t' = t + LP_SHIFT
        let rows_total = m + l + 1;
        let cols = n + rows_total + 1;
        let mut tab = vec![0f64; (rows_total + 1) * cols];
        let idx = |r: usize, c: usize| r * cols + c;
        // Cone rows: -R z + t' <= LP_SHIFT + R·lo.
        for i in 0..m {
            let mut b = LP_SHIFT;
            for j in 0..l {
                tab[idx(i, j)] = -(self.rows[i][j] as f64);
                b += (self.rows[i][j] * lo[j]) as f64;
            }
            tab[idx(i, l)] = 1.0;
            tab[idx(i, n + i)] = 1.0;
            tab[idx(i, cols - 1)] = b;
        }
        // Box rows: z_j <= hi_j - lo_j.
        for j in 0..l {
            let r = m + j;
            tab[idx(r, j)] = 1.0;
            tab[idx(r, n + r)] = 1.0;
            tab[idx(r, cols - 1)] = (hi[j] - lo[j]) as f64;
        }
        // Cap row: t' <= 1 + LP_SHIFT.
        let r = m + l;
        tab[idx(r, l)] = 1.0;
        tab[idx(r, n + r)] = 1.0;
        tab[idx(r, cols - 1)] = 1.0 + LP_SHIFT;
        // Objective: maximize t'.
        tab[idx(rows_total, l)] = -1.0;

        let mut iters = 0;
        loop {
            iters += 1;
            if iters > 2000 {
                return None; // give up pruning this node
            }
            // Entering column: most negative reduced cost (Dantzig), with
            // Bland fallback kicking in late to escape cycling.
            let bland = iters > 1500;
            let mut e = usize::MAX;
            let mut best = -LP_EPS;
            for c in 0..cols - 1 {
                let rc = tab[idx(rows_total, c)];
                if rc < -LP_EPS {
                    if bland {
                        e = c;
                        break;
                    }
                    if rc < best {
                        best = rc;
                        e = c;
                    }
                }
            }
            if e == usize::MAX {
                break; // optimal
            }
            let mut leave = usize::MAX;
            let mut best_ratio = f64::INFINITY;
            for rr in 0..rows_total {
                let a = tab[idx(rr, e)];
                if a > LP_EPS {
                    let ratio = tab[idx(rr, cols - 1)] / a;
                    if ratio < best_ratio - LP_EPS
                        || (bland && (ratio - best_ratio).abs() <= LP_EPS && leave != usize::MAX)
                    {
                        best_ratio = ratio;
                        leave = rr;
                    }
                }
            }
            if leave == usize::MAX {
                return None; // unbounded: cannot happen, but stay safe
            }
            // Pivot.
            let piv = tab[idx(leave, e)];
            for c in 0..cols {
                tab[idx(leave, c)] /= piv;
            }
            for rr in 0..=rows_total {
                if rr == leave {
                    continue;
                }
                let f = tab[idx(rr, e)];
                if f != 0.0 {
                    for c in 0..cols {
                        tab[idx(rr, c)] -= f * tab[idx(leave, c)];
                    }
                }
            }
        }
        let objective = tab[idx(rows_total, cols - 1)];
        let t_star = objective - LP_SHIFT;
        if t_star >= -LP_MARGIN {
            return None; // feasible or too close to call
        }
        // Dual weights of the cone rows live in the objective row under the
        // slack columns.
        let duals: Vec<f64> =
            (0..m).map(|i| tab[idx(rows_total, n + i)].max(0.0)).collect();
        Some(duals)
    }
}

// ---------------------------------------------------------------------------
// Classification and the conjecture checker
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct RootClassification {
    pub is_root: bool,
    pub phi_positive: bool,
    pub phi_nonpositive: bool,
    pub sign_coherent: bool,
    /// First exponent m with mixed signs, when not sign-coherent.
    pub witness: Option<usize>,
}

/// Classify a vector against one full period of the Coxeter transformation;
/// finite order makes every integer exponent redundant.
pub fn classify(alg: &BoundQuiverAlgebra, cox: &CoxeterData, x: &[BigInt]) -> RootClassification {
    let form = EulerForm::new(alg);
    let is_root = form.q(x) == BigInt::from(1);
    let mut phi_positive = true;
    let mut phi_nonpositive = true;
    let mut sign_coherent = true;
    let mut witness = None;
    let mut v: IntVec = x.to_vec();
    for m in 0..cox.order {
        let nonneg = forms::is_nonnegative(&v);
        let nonpos = forms::is_nonpositive(&v);
        phi_positive &= nonneg;
        phi_nonpositive &= nonpos;
        if !nonneg && !nonpos && witness.is_none() {
            sign_coherent = false;
            witness = Some(m as usize);
        }
        v = cox.phi.mul_vec(&v);
    }
    RootClassification { is_root, phi_positive, phi_nonpositive, sign_coherent, witness }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub bound: i64,
    /// Whether the conjecture is actually posed for this n (n = 2); other n
    /// are reported as informational.
    pub applicable: bool,
    pub cluster_root_count: usize,
    pub phi_positive_count: usize,
    pub cluster_subset_phi_positive: bool,
    pub phi_positive_subset_cluster: bool,
    pub holds_within_box: bool,
    pub all_roots_sign_coherent: bool,
    pub cluster_roots_within_box: bool,
    #[serde(skip)]
    pub cluster_roots: Vec<IntVec>,
    #[serde(skip)]
    pub phi_positive_roots: Vec<IntVec>,
    #[serde(skip)]
    pub only_cluster: Vec<IntVec>,
    #[serde(skip)]
    pub only_phi_positive: Vec<IntVec>,
}

/// Compare cluster-roots with Φ-positive roots inside the box; both
/// inclusions are reported separately, together with sign-coherence of
/// everything found. All verdicts are box-relative.
pub fn check_conjecture(
    alg: &BoundQuiverAlgebra,
    bound: i64,
    node_cap: u64,
) -> Result<ConjectureReport> {
    let cox = forms::coxeter(alg)?;
    let s1 = cluster_roots_phi(alg, &cox)?.all_roots;
    let s2 = phi_positive_roots(alg, &cox, bound, node_cap)?;
    let in_box = |v: &IntVec| v.iter().all(|c| c <= &BigInt::from(bound));
    let cluster_roots_within_box = s1.iter().all(in_box);
    let only_cluster: Vec<IntVec> =
        s1.iter().filter(|v| !s2.contains(v)).cloned().collect();
    let only_phi_positive: Vec<IntVec> =
        s2.iter().filter(|v| !s1.contains(v)).cloned().collect();
    let all_roots_sign_coherent = s1
        .iter()
        .chain(&s2)
        .all(|v| classify(alg, &cox, v).sign_coherent);
    let cluster_subset_phi_positive = only_cluster.is_empty();
    let phi_positive_subset_cluster = only_phi_positive.is_empty();
    Ok(ConjectureReport {
        n: alg.n,
        bound,
        applicable: alg.n == 2,
        cluster_root_count: s1.len(),
        phi_positive_count: s2.len(),
        cluster_subset_phi_positive,
        phi_positive_subset_cluster,
        holds_within_box: cluster_subset_phi_positive && phi_positive_subset_cluster,
        all_roots_sign_coherent,
        cluster_roots_within_box,
        cluster_roots: s1,
        phi_positive_roots: s2,
        only_cluster,
        only_phi_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::linalg::int_vec;

    fn fixture(name: &str) -> BoundQuiverAlgebra {
        let base = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");
        let text = std::fs::read_to_string(format!("{base}{name}.json")).unwrap();
        parse_algebra(&text).unwrap()
    }

    #[test]
    fn a2_cluster_roots() {
        let alg = fixture("a2");
        let cox = forms::coxeter(&alg).unwrap();
        let table = cluster_roots_phi(&alg, &cox).unwrap();
        let expect = vec![int_vec(&[0, 1]), int_vec(&[1, 0]), int_vec(&[1, 1])];
        assert_eq!(table.all_roots, expect);
        assert_eq!(table.exponents.iter().map(|m| m + 1).sum::<usize>(), 3);
        let refl = cluster_roots_reflections(&alg).unwrap();
        assert_eq!(refl, expect);
    }

    #[test]
    fn one_vertex_cluster_roots() {
        let alg = parse_algebra(r#"{"n": 2, "vertices": ["1"], "arrows": []}"#).unwrap();
        let cox = forms::coxeter(&alg).unwrap();
        let table = cluster_roots_phi(&alg, &cox).unwrap();
        assert_eq!(table.all_roots, vec![int_vec(&[1])]);
    }

    #[test]
    fn auslander_a3_has_ten_cluster_roots() {
        let alg = fixture("auslander_a3");
        let cox = forms::coxeter(&alg).unwrap();
        let table = cluster_roots_phi(&alg, &cox).unwrap();
        assert_eq!(table.all_roots.len(), 10);
        // dim P_1 = Φ²(dim I_6): the orbit of I_6 has length 3.
        assert_eq!(table.exponents[5], 2);
        assert_eq!(table.sigma[5], 0);
        let refl = cluster_roots_reflections(&alg).unwrap();
        assert_eq!(refl, table.all_roots);
    }

    #[test]
    fn a2_positive_roots_bound_two() {
        let alg = fixture("a2");
        let roots = positive_roots(&alg, 2, 10_000).unwrap();
        let expect = vec![int_vec(&[0, 1]), int_vec(&[1, 0]), int_vec(&[1, 1])];
        assert_eq!(roots, expect);
    }

    #[test]
    fn zero_vector_classification() {
        let alg = fixture("a2");
        let cox = forms::coxeter(&alg).unwrap();
        let c = classify(&alg, &cox, &int_vec(&[0, 0]));
        assert!(!c.is_root);
        assert!(c.phi_positive);
        assert!(c.sign_coherent);
    }

    #[test]
    fn nakayama_e3_is_phi_positive_but_not_cluster() {
        // Over the radical-square-zero chain with n = 4 the unit vector e_3
        // is a Φ-positive root yet not a cluster-root.
        let alg = fixture("nakayama5_n4");
        let cox = forms::coxeter(&alg).unwrap();
        let e3 = int_vec(&[0, 0, 1, 0, 0]);
        let c = classify(&alg, &cox, &e3);
        assert!(c.is_root);
        assert!(c.phi_positive);
        let table = cluster_roots_phi(&alg, &cox).unwrap();
        assert!(!table.all_roots.contains(&e3));
    }

    #[test]
    fn conjecture_holds_on_auslander_a3() {
        let alg = fixture("auslander_a3");
        let report = check_conjecture(&alg, 1, 10_000_000).unwrap();
        assert!(report.applicable);
        assert_eq!(report.cluster_root_count, 10);
        assert_eq!(report.phi_positive_count, 10);
        assert!(report.holds_within_box);
        assert!(report.all_roots_sign_coherent);
    }

    #[test]
    fn reflection_qj_are_injective_dims() {
        let alg = fixture("auslander_a3");
        let seq = forms::reflection_sequence(&alg).unwrap();
        let form = EulerForm::new(&alg);
        let qs = injective_vectors_from_reflections(&seq, 6);
        for (j, q) in qs.iter().enumerate() {
            assert_eq!(*q, form.dim_injective(j));
        }
    }
}
