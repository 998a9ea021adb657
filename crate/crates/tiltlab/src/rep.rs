//! Explicit representations of a bound quiver and their homological algebra:
//! kernels and cokernels, projective covers and injective envelopes, minimal
//! resolutions, Ext dimensions, global dimension, and the n-Auslander-Reiten
//! translations computed as Nakayama translates of resolution differentials.
//!
//! A representation assigns to each vertex a rational vector space (just a
//! dimension) and to each arrow `a: i -> j` a matrix of shape
//! `dims[j] x dims[i]` acting on column vectors. A path acts by composing
//! its arrow matrices in diagram order, so `φ_{p·q} = φ_q ∘ φ_p`.
//!
//! Injective constructions are computed through the opposite algebra:
//! `D` turns right modules into right modules over the opposite algebra,
//! injective envelopes into projective covers, and a map of projectives
//! given by left multiplication into the dual map of injectives given by
//! right multiplication with the reversed element. The Nakayama functor is
//! then literal: it reinterprets an `ElemMatrix` between projectives as the
//! same matrix between injectives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra, PathId, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{IntVec, RatMatrix, RatVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    /// One matrix per arrow, shape `dims[target] x dims[source]`.
    pub maps: Vec<RatMatrix>,
}

impl Representation {
    pub fn zero(alg: &BoundQuiverAlgebra) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let maps = alg
            .quiver
            .arrows
            .iter()
            .map(|a| RatMatrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation { dims, maps }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dim_vector(&self) -> IntVec {
        self.dims.iter().map(|&d| BigInt::from(d)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Check shapes and the relation identity `Σ c_p φ_p = 0` for every relation.
pub fn check_representation(alg: &BoundQuiverAlgebra, x: &Representation) -> Result<()> {
    if x.dims.len() != alg.vertex_count() || x.maps.len() != alg.quiver.arrows.len() {
        return Err(Error::validation("representation shape mismatch with quiver"));
    }
    for (i, a) in alg.quiver.arrows.iter().enumerate() {
        if x.maps[i].rows != x.dims[a.target] || x.maps[i].cols != x.dims[a.source] {
            return Err(Error::validation(format!(
                "map for arrow {:?} has shape {}x{}, expected {}x{}",
                a.name, x.maps[i].rows, x.maps[i].cols, x.dims[a.target], x.dims[a.source]
            )));
        }
    }
    for r in &alg.relations {
        if !element_matrix(alg, x, r).is_zero() {
            return Err(Error::validation(format!(
                "representation violates relation {}",
                alg.element_to_string(r)
            )));
        }
    }
    Ok(())
}

/// Matrix of a path acting on `x`: composition of arrow matrices in diagram
/// order, mapping the source vertex space to the target vertex space.
pub fn path_matrix(alg: &BoundQuiverAlgebra, x: &Representation, p: PathId) -> RatMatrix {
    let d = alg.paths().path(p);
    let mut m = RatMatrix::identity(x.dims[d.source]);
    for &a in &d.arrows {
        m = x.maps[a].mul(&m);
    }
    m
}

/// Matrix of an algebra element acting on `x` (source space to target space).
pub fn element_matrix(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    e: &AlgebraElement,
) -> RatMatrix {
    let mut m = RatMatrix::zeros(x.dims[e.target], x.dims[e.source]);
    for (&p, c) in &e.terms {
        let pm = path_matrix(alg, x, p);
        for i in 0..m.rows {
            for j in 0..m.cols {
                let v = &pm[(i, j)] * c;
                m[(i, j)] += v;
            }
        }
    }
    m
}

/// Vertexwise linear maps; a morphism when every arrow square commutes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    pub blocks: Vec<RatMatrix>,
}

pub fn is_morphism(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    f: &RepMorphism,
) -> bool {
    alg.quiver.arrows.iter().enumerate().all(|(i, a)| {
        let lhs = f.blocks[a.target].mul(&x.maps[i]);
        let rhs = y.maps[i].mul(&f.blocks[a.source]);
        lhs == rhs
    })
}

pub fn identity_morphism(x: &Representation) -> RepMorphism {
    RepMorphism { blocks: x.dims.iter().map(|&d| RatMatrix::identity(d)).collect() }
}

/// Vertexwise kernel with the induced arrow maps and the inclusion into `x`.
pub fn kernel(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    f: &RepMorphism,
) -> (Representation, RepMorphism) {
    let l = alg.vertex_count();
    let mut incl = Vec::with_capacity(l);
    let mut dims = Vec::with_capacity(l);
    for v in 0..l {
        let basis = f.blocks[v].kernel_basis();
        let mut b = RatMatrix::zeros(x.dims[v], basis.len());
        for (j, vec) in basis.iter().enumerate() {
            for i in 0..x.dims[v] {
                b[(i, j)] = vec[i].clone();
            }
        }
        dims.push(basis.len());
        incl.push(b);
    }
    let mut maps = Vec::with_capacity(alg.quiver.arrows.len());
    for (i, a) in alg.quiver.arrows.iter().enumerate() {
        let image = x.maps[i].mul(&incl[a.source]);
        let mut m = RatMatrix::zeros(dims[a.target], dims[a.source]);
        for col in 0..dims[a.source] {
            let rhs: RatVec = (0..x.dims[a.target]).map(|r| image[(r, col)].clone()).collect();
            let coords = solve_in_columns(&incl[a.target], &rhs)
                .expect("kernel is a subrepresentation");
            for r in 0..dims[a.target] {
                m[(r, col)] = coords[r].clone();
            }
        }
        maps.push(m);
    }
    let k = Representation { dims, maps };
    debug_assert!(check_representation(alg, &k).is_ok());
    (k, RepMorphism { blocks: incl })
}

/// Vertexwise cokernel with the induced arrow maps and the projection from `y`.
pub fn cokernel(
    alg: &BoundQuiverAlgebra,
    y: &Representation,
    f: &RepMorphism,
) -> (Representation, RepMorphism) {
    let l = alg.vertex_count();
    let mut proj = Vec::with_capacity(l);
    let mut lift = Vec::with_capacity(l);
    let mut dims = Vec::with_capacity(l);
    for v in 0..l {
        // Row space of f_v^t = image of f_v; quotient coordinates are the
        // non-pivot rows of y_v.
        let mut imt = f.blocks[v].transpose();
        let pivots = imt.rref();
        let rank = pivots.len();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> =
            (0..y.dims[v]).filter(|i| !pivot_set.contains(i)).collect();
        // reduce(y) = y - Σ_r y[pivot_r] * row_r, then restrict to free coords
        let mut p = RatMatrix::zeros(free.len(), y.dims[v]);
        for (out_row, &fc) in free.iter().enumerate() {
            p[(out_row, fc)] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                let v2 = -imt[(r, fc)].clone();
                p[(out_row, pc)] = v2;
            }
        }
        let _ = rank;
        let mut lf = RatMatrix::zeros(y.dims[v], free.len());
        for (j, &fc) in free.iter().enumerate() {
            lf[(fc, j)] = BigRational::one();
        }
        dims.push(free.len());
        proj.push(p);
        lift.push(lf);
    }
    let mut maps = Vec::with_capacity(alg.quiver.arrows.len());
    for (i, a) in alg.quiver.arrows.iter().enumerate() {
        let m = proj[a.target].mul(&y.maps[i]).mul(&lift[a.source]);
        maps.push(m);
    }
    let c = Representation { dims, maps };
    debug_assert!(check_representation(alg, &c).is_ok());
    (c, RepMorphism { blocks: proj })
}

/// Solve `basis * coords = rhs` where `basis` columns are independent.
fn solve_in_columns(basis: &RatMatrix, rhs: &RatVec) -> Option<RatVec> {
    basis.solve(rhs)
}

pub fn direct_sum(alg: &BoundQuiverAlgebra, parts: &[&Representation]) -> Representation {
    let l = alg.vertex_count();
    let dims: Vec<usize> =
        (0..l).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let mut maps = Vec::with_capacity(alg.quiver.arrows.len());
    for (i, a) in alg.quiver.arrows.iter().enumerate() {
        let mut m = RatMatrix::zeros(dims[a.target], dims[a.source]);
        let mut ro = 0;
        let mut co = 0;
        for p in parts {
            for r in 0..p.dims[a.target] {
                for c in 0..p.dims[a.source] {
                    m[(ro + r, co + c)] = p.maps[i][(r, c)].clone();
                }
            }
            ro += p.dims[a.target];
            co += p.dims[a.source];
        }
        maps.push(m);
    }
    Representation { dims, maps }
}

// ---------------------------------------------------------------------------
// Standard projective and injective representations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Projective,
    Injective,
}

/// A direct sum of standard projectives or injectives with its coordinate
/// layout: at each vertex, each summand occupies a contiguous slice indexed
/// by basis paths in canonical order. For `P_u` the slice at `v` is indexed
/// by basis paths `u -> v`; for `I_u` by basis paths `v -> u`.
#[derive(Debug, Clone)]
pub struct StandardSum {
    pub side: Side,
    pub summands: Vec<VertexId>,
    pub rep: Representation,
    /// layout[v][s] = (offset, paths) for summand s at vertex v.
    pub layout: Vec<Vec<(usize, Vec<PathId>)>>,
}

pub fn standard_sum(alg: &BoundQuiverAlgebra, side: Side, summands: &[VertexId]) -> StandardSum {
    let l = alg.vertex_count();
    let mut layout: Vec<Vec<(usize, Vec<PathId>)>> = vec![Vec::new(); l];
    let mut dims = vec![0usize; l];
    for &u in summands {
        for v in 0..l {
            let paths: Vec<PathId> = match side {
                Side::Projective => alg.basis_paths(u, v).to_vec(),
                Side::Injective => alg.basis_paths(v, u).to_vec(),
            };
            let off = dims[v];
            dims[v] += paths.len();
            layout[v].push((off, paths));
        }
    }
    let mut maps = Vec::with_capacity(alg.quiver.arrows.len());
    for (aid, a) in alg.quiver.arrows.iter().enumerate() {
        let mut m = RatMatrix::zeros(dims[a.target], dims[a.source]);
        for (s, &_u) in summands.iter().enumerate() {
            let (soff, spaths) = &layout[a.source][s];
            let (toff, tpaths) = &layout[a.target][s];
            match side {
                Side::Projective => {
                    // p (u -> source) extends to p·a, reduced to normal form.
                    for (col, &p) in spaths.iter().enumerate() {
                        let Some(pa) = alg.paths().extend(p, aid) else { continue };
                        let nf = alg
                            .normal_form(&AlgebraElement::from_path(alg.paths(), pa));
                        for (&q, c) in &nf.terms {
                            let row = tpaths.iter().position(|&t| t == q).expect("basis path");
                            m[(toff + row, soff + col)] = c.clone();
                        }
                    }
                }
                Side::Injective => {
                    // Dual of left multiplication: the coefficient of p in
                    // the normal form of a·q, for q a basis path from the
                    // arrow target to u.
                    for (row, &q) in tpaths.iter().enumerate() {
                        let step = alg
                            .paths()
                            .extend(alg.paths().trivial(a.source), aid)
                            .expect("arrow path");
                        let aq = alg.paths().compose(step, q).expect("composable");
                        let nf = alg
                            .normal_form(&AlgebraElement::from_path(alg.paths(), aq));
                        for (col, &p) in spaths.iter().enumerate() {
                            if let Some(c) = nf.terms.get(&p) {
                                m[(toff + row, soff + col)] = c.clone();
                            }
                        }
                    }
                }
            }
        }
        maps.push(m);
    }
    let rep = Representation { dims, maps };
    debug_assert!(check_representation(alg, &rep).is_ok());
    StandardSum { side, summands: summands.to_vec(), rep, layout }
}

/// The indecomposable projective at `i`: basis paths starting at `i`,
/// arrows acting by path extension plus normal form.
pub fn projective_rep(alg: &BoundQuiverAlgebra, i: VertexId) -> Representation {
    standard_sum(alg, Side::Projective, &[i]).rep
}

/// The indecomposable injective at `i`: dual basis of paths ending at `i`.
pub fn injective_rep(alg: &BoundQuiverAlgebra, i: VertexId) -> Representation {
    standard_sum(alg, Side::Injective, &[i]).rep
}

pub fn simple_rep(alg: &BoundQuiverAlgebra, i: VertexId) -> Representation {
    let mut dims = vec![0; alg.vertex_count()];
    dims[i] = 1;
    let maps = alg
        .quiver
        .arrows
        .iter()
        .map(|a| RatMatrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation { dims, maps }
}

/// A matrix of algebra elements describing a map between standard sums:
/// entry `(t, s)` lies in `e_{rows[t]} Λ e_{cols[s]}` and sends the summand
/// at `cols[s]` to the summand at `rows[t]` (left multiplication between
/// projectives, dual right multiplication between injectives).
#[derive(Debug, Clone)]
pub struct ElemMatrix {
    pub row_summands: Vec<VertexId>,
    pub col_summands: Vec<VertexId>,
    pub entries: Vec<AlgebraElement>, // row-major
}

impl ElemMatrix {
    pub fn entry(&self, t: usize, s: usize) -> &AlgebraElement {
        &self.entries[t * self.col_summands.len() + s]
    }

    /// All entries lie in the arrow ideal: no identity component splits off.
    pub fn entries_in_arrow_ideal(&self, alg: &BoundQuiverAlgebra) -> bool {
        self.entries.iter().all(|e| e.in_arrow_ideal(alg.paths()))
    }
}

/// Realize an `ElemMatrix` as an explicit morphism between standard sums.
/// `src` and `dst` must list the same summands as the matrix columns/rows.
pub fn element_matrix_map(
    alg: &BoundQuiverAlgebra,
    src: &StandardSum,
    dst: &StandardSum,
    em: &ElemMatrix,
) -> RepMorphism {
    assert_eq!(src.summands, em.col_summands);
    assert_eq!(dst.summands, em.row_summands);
    assert_eq!(src.side, dst.side);
    let l = alg.vertex_count();
    let mut blocks = Vec::with_capacity(l);
    for v in 0..l {
        let mut m = RatMatrix::zeros(dst.rep.dims[v], src.rep.dims[v]);
        for (s, _) in em.col_summands.iter().enumerate() {
            let (soff, spaths) = &src.layout[v][s];
            for (t, _) in em.row_summands.iter().enumerate() {
                let e = em.entry(t, s);
                if e.is_zero() {
                    continue;
                }
                let (toff, tpaths) = &dst.layout[v][t];
                match src.side {
                    Side::Projective => {
                        // basis path p: cols[s] -> v maps to NF(e · p).
                        for (col, &p) in spaths.iter().enumerate() {
                            let pe = AlgebraElement::from_path(alg.paths(), p);
                            let prod = alg.mul(e, &pe);
                            for (&q, c) in &prod.terms {
                                let row =
                                    tpaths.iter().position(|&x| x == q).expect("basis path");
                                m[(toff + row, soff + col)] = c.clone();
                            }
                        }
                    }
                    Side::Injective => {
                        // dual pairing: coefficient of p in NF(q · e) for
                        // q: v -> rows[t].
                        for (row, &q) in tpaths.iter().enumerate() {
                            let qe = AlgebraElement::from_path(alg.paths(), q);
                            let prod = alg.mul(&qe, e);
                            for (col, &p) in spaths.iter().enumerate() {
                                if let Some(c) = prod.terms.get(&p) {
                                    m[(toff + row, soff + col)] = c.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
        blocks.push(m);
    }
    RepMorphism { blocks }
}

// ---------------------------------------------------------------------------
// Minimal resolutions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Resolution {
    pub side: Side,
    /// Summand vertices of each term. For a projective resolution the terms
    /// run `T_0, T_1, ...` with differentials `T_{m+1} -> T_m`; for an
    /// injective resolution `T_0, T_1, ...` with differentials
    /// `T_m -> T_{m+1}`.
    pub terms: Vec<Vec<VertexId>>,
    pub diffs: Vec<ElemMatrix>,
    pub complete: bool,
}

impl Resolution {
    /// Number of syzygy steps (a projective module has length 0).
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn multiplicities(&self, l: usize) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| {
                let mut m = vec![0usize; l];
                for &v in t {
                    m[v] += 1;
                }
                m
            })
            .collect()
    }
}

/// Incremental rational span for greedy independence tests.
#[derive(Default)]
struct GrowingSpan {
    rows: Vec<RatVec>, // mutually reduced, each with leading 1
    pivots: Vec<usize>,
}

impl GrowingSpan {
    fn insert(&mut self, mut v: RatVec) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &c * y;
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let c = v[p].clone();
        for x in v.iter_mut() {
            *x /= &c;
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Generators of the top of `x`: deterministic choice of standard coordinate
/// vectors independent modulo the radical, vertex by vertex.
fn top_generators(alg: &BoundQuiverAlgebra, x: &Representation) -> Vec<(VertexId, RatVec)> {
    let l = alg.vertex_count();
    let mut gens = Vec::new();
    for v in 0..l {
        if x.dims[v] == 0 {
            continue;
        }
        let mut span = GrowingSpan::default();
        for (aid, a) in alg.quiver.arrows.iter().enumerate() {
            if a.target != v {
                continue;
            }
            let m = &x.maps[aid];
            for col in 0..m.cols {
                let vec: RatVec = (0..m.rows).map(|r| m[(r, col)].clone()).collect();
                span.insert(vec);
            }
        }
        for t in 0..x.dims[v] {
            let mut unit = vec![BigRational::zero(); x.dims[v]];
            unit[t] = BigRational::one();
            if span.insert(unit.clone()) {
                gens.push((v, unit));
            }
        }
    }
    gens
}

/// Projective cover of `x`: the standard sum on the top multiplicities
/// together with the covering morphism and the chosen generator lifts.
pub fn projective_cover(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
) -> (StandardSum, RepMorphism, Vec<(VertexId, RatVec)>) {
    let gens = top_generators(alg, x);
    let summands: Vec<VertexId> = gens.iter().map(|(v, _)| *v).collect();
    let sum = standard_sum(alg, Side::Projective, &summands);
    let l = alg.vertex_count();
    let mut blocks = Vec::with_capacity(l);
    for v in 0..l {
        let mut m = RatMatrix::zeros(x.dims[v], sum.rep.dims[v]);
        for (s, (w, gen)) in gens.iter().enumerate() {
            let _ = w;
            let (off, paths) = &sum.layout[v][s];
            for (col, &p) in paths.iter().enumerate() {
                let pm = path_matrix(alg, x, p);
                let img = pm.mul_vec(gen);
                for r in 0..x.dims[v] {
                    m[(r, off + col)] = img[r].clone();
                }
            }
        }
        blocks.push(m);
    }
    let cover = RepMorphism { blocks };
    debug_assert!(is_morphism(alg, &sum.rep, x, &cover));
    (sum, cover, gens)
}

/// Minimal projective resolution computed by iterated projective covers,
/// stopping after `limit` syzygy steps. The differentials are recorded as
/// `ElemMatrix` values via Hom(P_u, P_v) = e_v Λ e_u.
pub fn proj_resolution(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    limit: usize,
) -> Resolution {
    if x.is_zero() {
        return Resolution { side: Side::Projective, terms: Vec::new(), diffs: Vec::new(), complete: true };
    }
    let (t0, c0, _) = projective_cover(alg, x);
    let mut terms = vec![t0.summands.clone()];
    let mut diffs = Vec::new();
    let (mut k, mut incl) = kernel(alg, &t0.rep, &c0);
    let mut prev = t0;
    let mut complete = true;
    while !k.is_zero() {
        if terms.len() > limit {
            complete = false;
            break;
        }
        let (tm, cover, gens) = projective_cover(alg, &k);
        // Differential T_m -> T_{m-1}: the generator of each summand lands in
        // the previous sum; its coordinates decompose into algebra elements.
        let mut entries = Vec::with_capacity(prev.summands.len() * tm.summands.len());
        for (t, &u) in prev.summands.iter().enumerate() {
            for (s, (w, gen)) in gens.iter().enumerate() {
                let _ = s;
                let img = incl.blocks[*w].mul_vec(gen);
                let (off, paths) = &prev.layout[*w][t];
                let mut e = AlgebraElement::zero(u, *w);
                for (idx, &p) in paths.iter().enumerate() {
                    e.add_term(p, img[off + idx].clone());
                }
                entries.push(e);
            }
        }
        let d = ElemMatrix {
            row_summands: prev.summands.clone(),
            col_summands: tm.summands.clone(),
            entries,
        };
        assert!(d.entries_in_arrow_ideal(alg), "minimal resolution has unit entry");
        diffs.push(d);
        terms.push(tm.summands.clone());
        let (k2, incl2) = kernel(alg, &tm.rep, &cover);
        k = k2;
        incl = incl2;
        prev = tm;
    }
    Resolution { side: Side::Projective, terms, diffs, complete }
}

/// Minimal projective resolution; errors if it does not terminate within
/// `maxlen` syzygy steps.
pub fn minimal_projective_resolution(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    maxlen: usize,
) -> Result<Resolution> {
    let r = proj_resolution(alg, x, maxlen);
    if !r.complete {
        return Err(Error::computation(format!(
            "projective resolution exceeds maxlen {maxlen}"
        )));
    }
    Ok(r)
}

/// Representation over the opposite algebra: dual spaces, transposed maps.
pub fn dual_rep(
    alg: &BoundQuiverAlgebra,
    op: &BoundQuiverAlgebra,
    x: &Representation,
) -> Representation {
    let _ = alg;
    let maps = x.maps.iter().map(|m| m.transpose()).collect();
    let d = Representation { dims: x.dims.clone(), maps };
    debug_assert!(check_representation(op, &d).is_ok());
    d
}

/// Transport a projective resolution over the opposite algebra to an
/// injective resolution over `alg`: `D` swaps the roles, transposes each
/// differential, and reverses its entries.
fn dualize_resolution(
    op: &BoundQuiverAlgebra,
    alg: &BoundQuiverAlgebra,
    r: &Resolution,
) -> Resolution {
    assert_eq!(r.side as u8, Side::Projective as u8);
    let diffs = r
        .diffs
        .iter()
        .map(|d| {
            let rows = d.col_summands.clone();
            let cols = d.row_summands.clone();
            let mut entries = Vec::with_capacity(rows.len() * cols.len());
            for s in 0..rows.len() {
                for t in 0..cols.len() {
                    let rev = op.reverse_into(alg, d.entry(t, s));
                    entries.push(alg.normal_form(&rev));
                }
            }
            ElemMatrix { row_summands: rows, col_summands: cols, entries }
        })
        .collect();
    Resolution { side: Side::Injective, terms: r.terms.clone(), diffs, complete: r.complete }
}

/// Minimal injective resolution, computed as the dual of a minimal
/// projective resolution over the opposite algebra.
pub fn inj_resolution(alg: &BoundQuiverAlgebra, x: &Representation, limit: usize) -> Resolution {
    let op = alg.opposite();
    let dx = dual_rep(alg, &op, x);
    let r = proj_resolution(&op, &dx, limit);
    dualize_resolution(&op, alg, &r)
}

pub fn minimal_injective_resolution(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    maxlen: usize,
) -> Result<Resolution> {
    let r = inj_resolution(alg, x, maxlen);
    if !r.complete {
        return Err(Error::computation(format!(
            "injective resolution exceeds maxlen {maxlen}"
        )));
    }
    Ok(r)
}

/// Default resolution length bound: syzygies move strictly along arrows, so
/// an acyclic quiver resolves within the longest path length.
pub fn default_maxlen(alg: &BoundQuiverAlgebra) -> usize {
    alg.vertex_count() + 1
}

// ---------------------------------------------------------------------------
// Ext groups and global dimension
// ---------------------------------------------------------------------------

/// Dimensions of Ext^j(X, Y) for j = 0..=length, from a precomputed minimal
/// projective resolution of X: apply Hom(-, Y), where Hom(P_u, Y) = Y_u,
/// and take cohomology of the resulting complex of vector spaces.
pub fn ext_dims_from(
    alg: &BoundQuiverAlgebra,
    res: &Resolution,
    y: &Representation,
) -> Vec<usize> {
    assert!(matches!(res.side, Side::Projective));
    let hom_dim = |term: &[VertexId]| -> usize { term.iter().map(|&u| y.dims[u]).sum() };
    let mut deltas: Vec<RatMatrix> = Vec::new();
    for (m, d) in res.diffs.iter().enumerate() {
        let src_dim = hom_dim(&res.terms[m]);
        let dst_dim = hom_dim(&res.terms[m + 1]);
        let mut mat = RatMatrix::zeros(dst_dim, src_dim);
        let mut col_off = 0;
        for (t, &u) in res.terms[m].iter().enumerate() {
            let mut row_off = 0;
            for (s, &w) in res.terms[m + 1].iter().enumerate() {
                let e = d.entry(t, s);
                if !e.is_zero() {
                    let block = element_matrix(alg, y, e); // Y_u -> Y_w
                    for r in 0..y.dims[w] {
                        for c in 0..y.dims[u] {
                            mat[(row_off + r, col_off + c)] = block[(r, c)].clone();
                        }
                    }
                }
                row_off += y.dims[w];
            }
            col_off += y.dims[u];
        }
        deltas.push(mat);
    }
    let mut out = Vec::with_capacity(res.terms.len());
    for j in 0..res.terms.len() {
        let ker = if j < deltas.len() {
            deltas[j].cols - deltas[j].rank()
        } else {
            hom_dim(&res.terms[j])
        };
        let im_prev = if j == 0 { 0 } else { deltas[j - 1].rank() };
        out.push(ker - im_prev);
    }
    out
}

/// dim Ext^j(X, Y).
pub fn ext_dim(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    j: usize,
) -> usize {
    if x.is_zero() || y.is_zero() {
        return 0;
    }
    let res = proj_resolution(alg, x, default_maxlen(alg));
    assert!(res.complete, "resolution must terminate on acyclic quivers");
    let dims = ext_dims_from(alg, &res, y);
    dims.get(j).copied().unwrap_or(0)
}

/// Maximum over simples of the minimal projective resolution length.
pub fn global_dimension(alg: &BoundQuiverAlgebra) -> usize {
    let mut gd = 0;
    for v in 0..alg.vertex_count() {
        let res = proj_resolution(alg, &simple_rep(alg, v), default_maxlen(alg));
        assert!(res.complete);
        gd = gd.max(res.length());
    }
    gd
}

// ---------------------------------------------------------------------------
// n-Auslander-Reiten translations
// ---------------------------------------------------------------------------

/// τ_n X: kernel of the Nakayama translate of the last differential of the
/// minimal projective resolution of X. Zero when the resolution is shorter
/// than n.
pub fn tau_n(alg: &BoundQuiverAlgebra, x: &Representation) -> Representation {
    let n = alg.n;
    if n == 0 || x.is_zero() {
        return Representation::zero(alg);
    }
    let res = proj_resolution(alg, x, n);
    if res.length() < n {
        return Representation::zero(alg);
    }
    let d = &res.diffs[n - 1]; // T_n -> T_{n-1}
    let src = standard_sum(alg, Side::Injective, &d.col_summands);
    let dst = standard_sum(alg, Side::Injective, &d.row_summands);
    let f = element_matrix_map(alg, &src, &dst, d);
    let (k, _) = kernel(alg, &src.rep, &f);
    k
}

/// τ_n^- X: cokernel of the inverse Nakayama translate of the last
/// differential of the minimal injective resolution. Zero when the
/// resolution is shorter than n.
pub fn tau_n_minus(alg: &BoundQuiverAlgebra, x: &Representation) -> Representation {
    let n = alg.n;
    if n == 0 || x.is_zero() {
        return Representation::zero(alg);
    }
    let res = inj_resolution(alg, x, n);
    tau_n_minus_from(alg, &res)
}

/// The cokernel step of τ_n^-, reusing a precomputed injective resolution.
pub fn tau_n_minus_from(alg: &BoundQuiverAlgebra, res: &Resolution) -> Representation {
    let n = alg.n;
    if res.length() < n {
        return Representation::zero(alg);
    }
    let d = &res.diffs[n - 1]; // I^{n-1} -> I^n
    let src = standard_sum(alg, Side::Projective, &d.col_summands);
    let dst = standard_sum(alg, Side::Projective, &d.row_summands);
    let f = element_matrix_map(alg, &src, &dst, d);
    let (c, _) = cokernel(alg, &dst.rep, &f);
    c
}

// ---------------------------------------------------------------------------
// The n-cluster tilting candidate
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ClusterTiltingReport {
    /// Dimension vectors of the candidate summands, grouped orbit by orbit:
    /// for each vertex i the iterates τ_n^{-m}(P_i) until they vanish.
    pub summand_dims: Vec<IntVec>,
    pub summands: Vec<Representation>,
    pub orbit_lengths: Vec<usize>,
    pub multiplicity_free: bool,
    /// dim Ext^j(M, M) for j = 1..n-1 (empty when n = 1).
    pub ext_dims: Vec<usize>,
    pub is_candidate_valid: bool,
}

/// Build M = ⊕_{m >= 0} τ_n^{-m}(Λ) by iteration and check the Ext-vanishing
/// condition on it. The iteration cap converts non-n-representation-finite
/// inputs into a diagnostic instead of a loop.
pub fn verify_n_cluster_tilting(
    alg: &BoundQuiverAlgebra,
    cap: usize,
) -> Result<ClusterTiltingReport> {
    let l = alg.vertex_count();
    let mut summands: Vec<Representation> = Vec::new();
    let mut orbit_lengths = Vec::with_capacity(l);
    let mut steps = 0usize;
    for i in 0..l {
        let mut x = projective_rep(alg, i);
        let mut len = 0usize;
        while !x.is_zero() {
            steps += 1;
            if steps > cap {
                return Err(Error::computation(format!(
                    "τ_n^- iteration exceeded cap {cap}; input is likely not n-representation-finite"
                )));
            }
            summands.push(x.clone());
            len += 1;
            x = tau_n_minus(alg, &x);
        }
        orbit_lengths.push(len);
    }
    let summand_dims: Vec<IntVec> = summands.iter().map(|s| s.dim_vector()).collect();
    let mut seen = std::collections::BTreeSet::new();
    let multiplicity_free = summand_dims
        .iter()
        .all(|d| seen.insert(d.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    let mut ext_dims = Vec::new();
    if alg.n >= 2 {
        let resolutions: Vec<Resolution> = summands
            .iter()
            .map(|s| proj_resolution(alg, s, default_maxlen(alg)))
            .collect();
        for j in 1..alg.n {
            let mut total = 0;
            for (s, res) in summands.iter().zip(&resolutions) {
                let _ = s;
                for t in &summands {
                    let dims = ext_dims_from(alg, res, t);
                    total += dims.get(j).copied().unwrap_or(0);
                }
            }
            ext_dims.push(total);
        }
    }
    let is_candidate_valid = multiplicity_free && ext_dims.iter().all(|&d| d == 0);
    Ok(ClusterTiltingReport {
        summand_dims,
        summands,
        orbit_lengths,
        multiplicity_free,
        ext_dims,
        is_candidate_valid,
    })
}

/// Spec-default iteration cap for the candidate construction.
pub fn default_nct_cap(alg: &BoundQuiverAlgebra, phi_order: u64) -> usize {
    10 * alg.vertex_count() * phi_order as usize
}

// ---------------------------------------------------------------------------
// Morphism spaces and isomorphism witnessing
// ---------------------------------------------------------------------------

/// Basis of Hom(X, Y) by exact linear algebra on the commuting-square
/// constraints.
pub fn hom_basis(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
) -> Vec<RepMorphism> {
    let l = alg.vertex_count();
    let mut offsets = Vec::with_capacity(l);
    let mut total = 0usize;
    for v in 0..l {
        offsets.push(total);
        total += x.dims[v] * y.dims[v];
    }
    let n_constraints: usize = alg
        .quiver
        .arrows
        .iter()
        .map(|a| y.dims[a.target] * x.dims[a.source])
        .sum();
    let mut mat = RatMatrix::zeros(n_constraints, total);
    let mut row = 0;
    for (aid, a) in alg.quiver.arrows.iter().enumerate() {
        // f_target * φ_a - ψ_a * f_source = 0, entrywise (r, c).
        for r in 0..y.dims[a.target] {
            for c in 0..x.dims[a.source] {
                // f_target[(r, k)] * φ_a[(k, c)]
                for k in 0..x.dims[a.target] {
                    let idx = offsets[a.target] + r * x.dims[a.target] + k;
                    let v = x.maps[aid][(k, c)].clone();
                    mat[(row, idx)] += v;
                }
                // - ψ_a[(r, k)] * f_source[(k, c)]
                for k in 0..y.dims[a.source] {
                    let idx = offsets[a.source] + k * x.dims[a.source] + c;
                    let v = -y.maps[aid][(r, k)].clone();
                    mat[(row, idx)] += v;
                }
                row += 1;
            }
        }
    }
    let basis = mat.kernel_basis();
    basis
        .into_iter()
        .map(|vec| {
            let blocks = (0..l)
                .map(|v| {
                    let mut b = RatMatrix::zeros(y.dims[v], x.dims[v]);
                    for r in 0..y.dims[v] {
                        for c in 0..x.dims[v] {
                            b[(r, c)] = vec[offsets[v] + r * x.dims[v] + c].clone();
                        }
                    }
                    b
                })
                .collect();
            RepMorphism { blocks }
        })
        .collect()
}

fn morphism_invertible(f: &RepMorphism) -> bool {
    f.blocks.iter().all(|b| b.rows == b.cols && b.rank() == b.rows)
}

/// Isomorphism test by witnessing: equal dimension vectors, then a random
/// rational element of the morphism space (seeded, five retries), then a
/// bounded deterministic search over small coefficient combinations.
pub fn is_isomorphic(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    seed: u64,
) -> bool {
    if x.dims != y.dims {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let basis = hom_basis(alg, x, y);
    if basis.is_empty() {
        return false;
    }
    let l = alg.vertex_count();
    let combine = |coeffs: &[BigRational]| -> RepMorphism {
        let blocks = (0..l)
            .map(|v| {
                let mut b = RatMatrix::zeros(y.dims[v], x.dims[v]);
                for (m, c) in basis.iter().zip(coeffs) {
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..y.dims[v] {
                        for cc in 0..x.dims[v] {
                            let v2 = &m.blocks[v][(r, cc)] * c;
                            b[(r, cc)] += v2;
                        }
                    }
                }
                b
            })
            .collect();
        RepMorphism { blocks }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let coeffs: Vec<BigRational> = (0..basis.len())
            .map(|_| BigRational::from(BigInt::from(rng.gen_range(-4i64..=4))))
            .collect();
        if morphism_invertible(&combine(&coeffs)) {
            return true;
        }
    }
    // Deterministic fallback: mixed-radix sweep over {-2..2}^k, capped.
    let k = basis.len();
    let mut counter = vec![0u8; k];
    let mut tried = 0u64;
    loop {
        let coeffs: Vec<BigRational> = counter
            .iter()
            .map(|&d| BigRational::from(BigInt::from(d as i64 - 2)))
            .collect();
        if coeffs.iter().any(|c| !c.is_zero()) && morphism_invertible(&combine(&coeffs)) {
            return true;
        }
        tried += 1;
        if tried > 100_000 {
            return false;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            counter[i] += 1;
            if counter[i] < 5 {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// Conjugate by random invertible vertexwise base changes; the result is
/// isomorphic to `x` and still satisfies the relations. Used by tests to
/// produce non-standard representations.
pub fn random_conjugate(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    seed: u64,
) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = alg.vertex_count();
    let mut qs = Vec::with_capacity(l);
    let mut qinvs = Vec::with_capacity(l);
    for v in 0..l {
        let d = x.dims[v];
        loop {
            let mut q = RatMatrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    q[(i, j)] = BigRational::from(BigInt::from(rng.gen_range(-2i64..=2)));
                }
            }
            if d == 0 || q.rank() == d {
                let qi = invert_rational(&q);
                qs.push(q);
                qinvs.push(qi);
                break;
            }
        }
    }
    let maps = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| qs[a.target].mul(&x.maps[i]).mul(&qinvs[a.source]))
        .collect();
    let out = Representation { dims: x.dims.clone(), maps };
    debug_assert!(check_representation(alg, &out).is_ok());
    out
}

fn invert_rational(m: &RatMatrix) -> RatMatrix {
    let n = m.rows;
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = BigRational::one();
    }
    let pivots = aug.rref();
    assert_eq!(pivots.len(), n, "matrix not invertible");
    let mut inv = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = aug[(i, n + j)].clone();
        }
    }
    inv
}

// ---------------------------------------------------------------------------
// Representation file format (JSON)
// ---------------------------------------------------------------------------

#[derive(serde::Serialize, serde::Deserialize)]
struct RepFile {
    dims: std::collections::BTreeMap<String, usize>,
    #[serde(default)]
    maps: std::collections::BTreeMap<String, Vec<Vec<String>>>,
}

/// Parse the representation file format against an algebra: dimensions per
/// vertex label, one row-major rational matrix per arrow of shape
/// `dims[target] x dims[source]`. Missing arrows with a zero-sized shape
/// are tolerated; the relations are verified.
pub fn parse_representation(alg: &BoundQuiverAlgebra, text: &str) -> Result<Representation> {
    let file: RepFile = serde_json::from_str(text)
        .map_err(|e| Error::syntax(format!("representation file: {e}")))?;
    let l = alg.vertex_count();
    let mut dims = vec![0usize; l];
    for (label, d) in &file.dims {
        let v = alg.quiver.vertex_index(label)?;
        dims[v] = *d;
    }
    let mut maps = Vec::with_capacity(alg.quiver.arrows.len());
    for a in &alg.quiver.arrows {
        let rows = dims[a.target];
        let cols = dims[a.source];
        let m = match file.maps.get(&a.name) {
            None => {
                if rows * cols != 0 {
                    return Err(Error::syntax(format!(
                        "missing matrix for arrow {:?}",
                        a.name
                    )));
                }
                RatMatrix::zeros(rows, cols)
            }
            Some(entries) => {
                if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                    return Err(Error::syntax(format!(
                        "matrix for arrow {:?} must be {rows}x{cols}",
                        a.name
                    )));
                }
                let mut m = RatMatrix::zeros(rows, cols);
                for (i, row) in entries.iter().enumerate() {
                    for (j, s) in row.iter().enumerate() {
                        m[(i, j)] = crate::algebra::parse_rational(s)?;
                    }
                }
                m
            }
        };
        maps.push(m);
    }
    let rep = Representation { dims, maps };
    check_representation(alg, &rep)?;
    Ok(rep)
}

pub fn representation_to_json(alg: &BoundQuiverAlgebra, x: &Representation) -> String {
    let dims = (0..alg.vertex_count())
        .map(|v| (alg.quiver.vertices[v].clone(), x.dims[v]))
        .collect();
    let maps = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .filter(|(i, _)| x.maps[*i].rows * x.maps[*i].cols > 0)
        .map(|(i, a)| {
            let m = &x.maps[i];
            let rows = (0..m.rows)
                .map(|r| {
                    (0..m.cols)
                        .map(|c| crate::algebra::format_rational(&m[(r, c)]))
                        .collect()
                })
                .collect();
            (a.name.clone(), rows)
        })
        .collect();
    serde_json::to_string_pretty(&RepFile { dims, maps }).expect("serializable")
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

    fn fork_n2() -> BoundQuiverAlgebra {
        parse_algebra(include_str!("../fixtures/fork_n2.json")).unwrap()
    }

    fn v(alg: &BoundQuiverAlgebra, label: &str) -> VertexId {
        alg.quiver.vertex_index(label).unwrap()
    }

    #[test]
    fn projectives_match_cartan_columns() {
        let alg = auslander_a3();
        for j in 0..6 {
            let p = projective_rep(&alg, j);
            let col: IntVec = (0..6).map(|i| alg.cartan()[(i, j)].clone()).collect();
            assert_eq!(p.dim_vector(), col);
        }
    }

    #[test]
    fn p5_dimensions() {
        let alg = auslander_a3();
        let p5 = projective_rep(&alg, v(&alg, "5"));
        assert_eq!(p5.dim_vector(), int_vec(&[0, 1, 1, 1, 1, 0]));
    }

    #[test]
    fn i3_dimensions() {
        let alg = auslander_a3();
        let i3 = injective_rep(&alg, v(&alg, "3"));
        assert_eq!(i3.dim_vector(), int_vec(&[0, 0, 1, 0, 1, 1]));
    }

    #[test]
    fn a2_p2_is_the_regular_string() {
        let alg = a2();
        let p2 = projective_rep(&alg, 1);
        assert_eq!(p2.dim_vector(), int_vec(&[1, 1]));
        assert_eq!(p2.maps[0], RatMatrix::identity(1));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let alg = a2();
        let p2 = projective_rep(&alg, 1);
        let (k, _) = kernel(&alg, &p2, &identity_morphism(&p2));
        assert!(k.is_zero());
    }

    #[test]
    fn cokernel_of_zero_map_is_target() {
        let alg = a2();
        let p2 = projective_rep(&alg, 1);
        let z = Representation::zero(&alg);
        let f = RepMorphism {
            blocks: (0..2).map(|v| RatMatrix::zeros(p2.dims[v], z.dims[v])).collect(),
        };
        let (c, _) = cokernel(&alg, &p2, &f);
        assert_eq!(c.dim_vector(), p2.dim_vector());
    }

    #[test]
    fn kernel_of_projective_cover_of_simple() {
        // Over A2 the cover P_2 -> S_2 has kernel S_1.
        let alg = a2();
        let s2 = simple_rep(&alg, 1);
        let (sum, cover, _) = projective_cover(&alg, &s2);
        assert_eq!(sum.summands, vec![1]);
        let (k, _) = kernel(&alg, &sum.rep, &cover);
        assert_eq!(k.dim_vector(), int_vec(&[1, 0]));
    }

    #[test]
    fn resolution_of_projective_has_length_zero() {
        let alg = auslander_a3();
        for i in 0..6 {
            let res = proj_resolution(&alg, &projective_rep(&alg, i), 10);
            assert_eq!(res.length(), 0);
        }
    }

    #[test]
    fn injective_resolution_of_p1_on_fork() {
        // 0 -> P_1 -> I_1 -> I_2 -> I_3 + I_4 -> 0
        let alg = fork_n2();
        let p1 = projective_rep(&alg, v(&alg, "1"));
        let res = minimal_injective_resolution(&alg, &p1, 10).unwrap();
        let terms: Vec<Vec<&str>> = res
            .terms
            .iter()
            .map(|t| t.iter().map(|&u| alg.quiver.vertices[u].as_str()).collect())
            .collect();
        assert_eq!(terms, vec![vec!["1"], vec!["2"], vec!["3", "4"]]);
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(global_dimension(&a2()), 1);
        assert_eq!(global_dimension(&auslander_a3()), 2);
        assert_eq!(global_dimension(&fork_n2()), 2);
        let one = parse_algebra(r#"{"n": 1, "vertices": ["1"], "arrows": []}"#).unwrap();
        assert_eq!(global_dimension(&one), 0);
    }

    #[test]
    fn ext0_of_projective_is_fiber_dimension() {
        let alg = auslander_a3();
        let y = injective_rep(&alg, v(&alg, "2"));
        for i in 0..6 {
            let p = projective_rep(&alg, i);
            assert_eq!(ext_dim(&alg, &p, &y, 0), y.dims[i]);
        }
    }

    #[test]
    fn tau_of_projective_vanishes() {
        let alg = auslander_a3();
        for i in 0..6 {
            assert!(tau_n(&alg, &projective_rep(&alg, i)).is_zero());
        }
    }

    #[test]
    fn tau_minus_of_injective_vanishes() {
        let alg = auslander_a3();
        for i in 0..6 {
            assert!(tau_n_minus(&alg, &injective_rep(&alg, i)).is_zero());
        }
    }

    #[test]
    fn tau_minus_p1_on_fork_has_expected_dims() {
        let alg = fork_n2();
        let t = tau_n_minus(&alg, &projective_rep(&alg, v(&alg, "1")));
        assert_eq!(t.dim_vector(), int_vec(&[0, 1, 1, 1]));
    }

    #[test]
    fn tau_i4_on_auslander_a3_is_p2() {
        let alg = auslander_a3();
        let t = tau_n(&alg, &injective_rep(&alg, v(&alg, "4")));
        assert_eq!(t.dim_vector(), int_vec(&[1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn a2_tau_of_s2_is_s1() {
        let alg = a2();
        let t = tau_n(&alg, &simple_rep(&alg, 1));
        assert_eq!(t.dim_vector(), int_vec(&[1, 0]));
    }

    #[test]
    fn ext2_duality_instance_on_fork() {
        // Ext^2(τ_2^- P_1, P_1) is dual to Hom(P_1, P_1), so 1-dimensional.
        let alg = fork_n2();
        let p1 = projective_rep(&alg, v(&alg, "1"));
        let t = tau_n_minus(&alg, &p1);
        assert_eq!(ext_dim(&alg, &t, &p1, 2), 1);
    }

    #[test]
    fn cluster_tilting_candidate_a2() {
        let alg = a2();
        let report = verify_n_cluster_tilting(&alg, 1000).unwrap();
        assert_eq!(report.summand_dims.len(), 3);
        assert!(report.multiplicity_free);
        assert!(report.is_candidate_valid);
        assert!(report.ext_dims.is_empty());
    }

    #[test]
    fn cluster_tilting_candidate_one_vertex() {
        let alg = parse_algebra(r#"{"n": 2, "vertices": ["1"], "arrows": []}"#).unwrap();
        let report = verify_n_cluster_tilting(&alg, 100).unwrap();
        assert_eq!(report.summand_dims.len(), 1);
        assert!(report.is_candidate_valid);
    }

    #[test]
    fn hom_dimensions_between_projectives() {
        // dim Hom(P_i, P_j) equals the Cartan entry (i, j).
        let alg = auslander_a3();
        for i in 0..6 {
            for j in 0..6 {
                let x = projective_rep(&alg, i);
                let y = projective_rep(&alg, j);
                let expect = alg.cartan()[(i, j)].clone();
                assert_eq!(BigInt::from(hom_basis(&alg, &x, &y).len()), expect);
            }
        }
    }

    #[test]
    fn isomorphism_detects_conjugates() {
        let alg = auslander_a3();
        let p5 = projective_rep(&alg, 4);
        let twisted = random_conjugate(&alg, &p5, 7);
        assert!(is_isomorphic(&alg, &p5, &twisted, 42));
        let i2 = injective_rep(&alg, 1);
        assert_eq!(p5.dim_vector(), i2.dim_vector());
        assert!(is_isomorphic(&alg, &p5, &i2, 42), "P_5 and I_2 coincide here");
    }

    #[test]
    fn non_isomorphic_same_dims() {
        // Over A2, S_1 + S_2 and P_2 share (1,1) but are not isomorphic.
        let alg = a2();
        let sum = direct_sum(&alg, &[&simple_rep(&alg, 0), &simple_rep(&alg, 1)]);
        let p2 = projective_rep(&alg, 1);
        assert!(!is_isomorphic(&alg, &sum, &p2, 3));
    }

    #[test]
    fn representation_file_round_trip() {
        let alg = auslander_a3();
        let p5 = projective_rep(&alg, 4);
        let json = representation_to_json(&alg, &p5);
        let back = parse_representation(&alg, &json).unwrap();
        assert_eq!(back, p5);
    }

    #[test]
    fn representation_file_rejects_relation_violations() {
        let alg = fork_n2();
        // dims (1,1,1,1) with all arrow maps the identity violates both
        // zero relations.
        let text = r#"{"dims": {"1": 1, "2": 1, "3": 1, "4": 1},
            "maps": {"a1": [["1"]], "a2": [["1"]], "a3": [["1"]]}}"#;
        let err = parse_representation(&alg, text).unwrap_err();
        assert!(err.to_string().contains("violates relation"));
    }

    #[test]
    fn representation_file_rejects_bad_shape() {
        let alg = a2();
        let text = r#"{"dims": {"1": 2, "2": 1}, "maps": {"a": [["1", "0"]]}}"#;
        assert!(parse_representation(&alg, text).is_err());
    }
}
