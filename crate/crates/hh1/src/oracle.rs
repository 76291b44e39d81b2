//! Independent brute-force computation of Der(A), Inn(A), Der_rad(A), and
//! the Lie algebra Der/Inn by solving the Leibniz linear system on generator
//! images. This shares only the multiplication table of A with the cochain
//! pipeline; everything else is computed from scratch so the two sides can
//! be compared on every algebra.

use std::collections::BTreeMap;

use crate::algebra::{Path, Presentation};
use crate::error::{Error, Result};
use crate::lie::{series_report, LieData, SeriesReport};
use crate::linalg::{nullspace, SparseVec, SubspaceBasis};
use crate::rewriting::{Basis, ReductionSystem};
use crate::scalar::{Field, Scalar};

/// The associative algebra A as exact structure constants on its path basis.
pub struct LinearModel {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<Path>,
    pub index: BTreeMap<Path, usize>,
    /// mult[i][j] = expansion of basis[i] * basis[j].
    pub mult: Vec<Vec<SparseVec>>,
    /// Basis index of each trivial path, by vertex.
    pub vertex_idx: Vec<usize>,
    /// Basis index of each arrow, by arrow id.
    pub arrow_idx: Vec<usize>,
}

impl LinearModel {
    pub fn mul_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out = out.add_scaled(&self.mult[*i][*j], &a.mul(b));
            }
        }
        out
    }

    pub fn unit(&self) -> SparseVec {
        SparseVec::from_entries(
            self.vertex_idx
                .iter()
                .map(|i| (*i, self.field.one()))
                .collect(),
        )
    }
}

/// Multiply basis paths, reduce to normal form, record the coefficients.
/// Associativity on all basis triples is asserted.
pub fn build_linear_model(
    pres: &Presentation,
    rs: &ReductionSystem,
    basis: &Basis,
) -> Result<LinearModel> {
    let field = pres.field;
    let dim = basis.dim();
    let mut mult = vec![vec![SparseVec::zero(); dim]; dim];
    for (i, p) in basis.all.iter().enumerate() {
        for (j, q) in basis.all.iter().enumerate() {
            if let Some(pq) = crate::algebra::compose(p, q) {
                let nf = rs.reduce_path(&pq, &field.one())?;
                let mut entries = Vec::new();
                for (path, c) in nf.terms() {
                    let k = basis.index.get(path).ok_or_else(|| {
                        Error::Internal("normal form outside the basis".to_string())
                    })?;
                    entries.push((*k, c.clone()));
                }
                mult[i][j] = SparseVec::from_entries(entries);
            }
        }
    }
    let vertex_idx: Vec<usize> = (0..pres.quiver.n_vertices())
        .map(|v| basis.index[&pres.quiver.trivial_path(v)])
        .collect();
    let arrow_idx: Vec<usize> = (0..pres.quiver.n_arrows())
        .map(|a| basis.index[&pres.quiver.arrow_path(a)])
        .collect();
    let model = LinearModel {
        field,
        dim,
        basis: basis.all.clone(),
        index: basis.index.clone(),
        mult,
        vertex_idx,
        arrow_idx,
    };
    // Spot every associativity failure now rather than downstream.
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let ij_k = model.mul_vec(&model.mult[i][j], &SparseVec::unit(k, &field));
                let i_jk = model.mul_vec(&SparseVec::unit(i, &field), &model.mult[j][k]);
                if ij_k != i_jk {
                    return Err(Error::Internal(format!(
                        "associativity fails on basis triple ({i},{j},{k})"
                    )));
                }
            }
        }
    }
    Ok(model)
}

/// Derivations of A presented by the images of vertex idempotents and
/// arrows, solved as one exact linear system.
pub struct DerSpace {
    /// Number of generators (vertices then arrows).
    pub n_gens: usize,
    pub dim_alg: usize,
    /// Solutions as vectors over generator-image coordinates.
    pub space: SubspaceBasis,
}

struct System<'a> {
    model: &'a LinearModel,
    pres: &'a Presentation,
    rows: Vec<SparseVec>,
}

impl<'a> System<'a> {
    fn n_gens(&self) -> usize {
        self.pres.quiver.n_vertices() + self.pres.quiver.n_arrows()
    }

    fn gen_of_vertex(&self, v: usize) -> usize {
        v
    }

    fn gen_of_arrow(&self, a: usize) -> usize {
        self.pres.quiver.n_vertices() + a
    }

    fn col(&self, g: usize, b: usize) -> usize {
        g * self.model.dim + b
    }

    /// Add rows for: sum over listed (gen, left basis vec, right basis vec,
    /// sign) of left * d(gen) * right, plus an optional identity term
    /// +- d(gen0), equated to zero.
    fn add_leibniz_rows(
        &mut self,
        identity: Option<(usize, bool)>,
        products: &[(usize, SparseVec, SparseVec, bool)],
    ) {
        let dim = self.model.dim;
        let field = self.model.field;
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
        if let Some((g, positive)) = identity {
            for (b, row) in rows.iter_mut().enumerate() {
                let c = if positive {
                    field.one()
                } else {
                    field.one().neg()
                };
                row.push((self.col(g, b), c));
            }
        }
        for (g, left, right, positive) in products {
            for b in 0..dim {
                // left * e_b * right
                let mid = self.model.mul_vec(
                    &self.model.mul_vec(left, &SparseVec::unit(b, &field)),
                    right,
                );
                for (c, coeff) in mid.iter() {
                    let coeff = if *positive {
                        coeff.clone()
                    } else {
                        coeff.neg()
                    };
                    rows[*c].push((self.col(*g, b), coeff));
                }
            }
        }
        for row in rows {
            let v = SparseVec::from_entries(row);
            if !v.is_zero() {
                self.rows.push(v);
            }
        }
    }
}

/// Solve the Leibniz system: unknowns are the images of every vertex and
/// every arrow, constraints come from the idempotent identities, the
/// source/target identities of each arrow, and d(r) = 0 for every relation.
pub fn derivations_direct(
    pres: &Presentation,
    rs: &ReductionSystem,
    model: &LinearModel,
    radical_preserving: bool,
) -> Result<DerSpace> {
    let field = model.field;
    let nv = pres.quiver.n_vertices();
    let na = pres.quiver.n_arrows();
    let mut sys = System {
        model,
        pres,
        rows: Vec::new(),
    };
    let unit = |i: usize| SparseVec::unit(i, &field);

    let one = model.unit();
    // d(e) = d(e) e + e d(e) for every vertex.
    for v in 0..nv {
        let ev = unit(model.vertex_idx[v]);
        let g = sys.gen_of_vertex(v);
        sys.add_leibniz_rows(
            Some((g, true)),
            &[
                (g, one.clone(), ev.clone(), false),
                (g, ev.clone(), one.clone(), false),
            ],
        );
    }
    // 0 = d(e_i) e_j + e_i d(e_j) for i != j.
    for i in 0..nv {
        for j in 0..nv {
            if i == j {
                continue;
            }
            let ei = unit(model.vertex_idx[i]);
            let ej = unit(model.vertex_idx[j]);
            let gi = sys.gen_of_vertex(i);
            let gj = sys.gen_of_vertex(j);
            sys.add_leibniz_rows(
                None,
                &[(gi, one.clone(), ej, true), (gj, ei, one.clone(), true)],
            );
        }
    }
    // d(a) = d(e_s) a + e_s d(a) and d(a) = d(a) e_t + a d(e_t).
    for a in 0..na {
        let arr = pres.quiver.arrow(a);
        let ga = sys.gen_of_arrow(a);
        let gs = sys.gen_of_vertex(arr.source);
        let gt = sys.gen_of_vertex(arr.target);
        let es = unit(model.vertex_idx[arr.source]);
        let et = unit(model.vertex_idx[arr.target]);
        let av = unit(model.arrow_idx[a]);
        sys.add_leibniz_rows(
            Some((ga, true)),
            &[
                (gs, one.clone(), av.clone(), false),
                (ga, es, one.clone(), false),
            ],
        );
        sys.add_leibniz_rows(
            Some((ga, true)),
            &[(ga, one.clone(), et, false), (gt, av, one.clone(), false)],
        );
    }
    // d(r) = 0 along the stored word of every relation summand.
    for rel in rs.relations(&field.one()) {
        let dim = model.dim;
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
        for (w, lam) in rel.terms() {
            let arrows = w.arrows();
            for (i, a) in arrows.iter().enumerate() {
                // Empty prefixes and suffixes are the unit of A, not the
                // endpoint idempotent: derivation images of a generator may
                // have components outside its own endpoint block.
                let prefix = if i == 0 {
                    model.unit()
                } else {
                    let p = pres.quiver.path_from_arrows(&arrows[..i]).expect("prefix");
                    expand(&p, rs, model)?
                };
                let suffix = if i + 1 == arrows.len() {
                    model.unit()
                } else {
                    let p = pres
                        .quiver
                        .path_from_arrows(&arrows[i + 1..])
                        .expect("suffix");
                    expand(&p, rs, model)?
                };
                let g = sys.gen_of_arrow(*a);
                for b in 0..dim {
                    let mid = model.mul_vec(
                        &model.mul_vec(&prefix, &SparseVec::unit(b, &field)),
                        &suffix,
                    );
                    for (c, coeff) in mid.iter() {
                        rows[*c].push((sys.col(g, b), coeff.mul(lam)));
                    }
                }
            }
        }
        for row in rows {
            let v = SparseVec::from_entries(row);
            if !v.is_zero() {
                sys.rows.push(v);
            }
        }
    }
    // Radical preservation: arrow images carry no length-0 component.
    if radical_preserving {
        for a in 0..na {
            let g = sys.gen_of_arrow(a);
            for (b, p) in model.basis.iter().enumerate() {
                if p.is_trivial() {
                    sys.rows
                        .push(SparseVec::from_entries(vec![(sys.col(g, b), field.one())]));
                }
            }
        }
    }
    let ncols = sys.n_gens() * model.dim;
    let sols = nullspace(&sys.rows, ncols, field);
    let space = SubspaceBasis::from_vectors(field, sols);
    let der = DerSpace {
        n_gens: nv + na,
        dim_alg: model.dim,
        space,
    };
    if !radical_preserving {
        assert_leibniz(pres, rs, model, &der)?;
    }
    Ok(der)
}

fn expand(p: &Path, rs: &ReductionSystem, model: &LinearModel) -> Result<SparseVec> {
    let nf = rs.reduce_path(p, &model.field.one())?;
    let mut entries = Vec::new();
    for (path, c) in nf.terms() {
        let k = model
            .index
            .get(path)
            .ok_or_else(|| Error::Internal("expansion outside the basis".to_string()))?;
        entries.push((*k, c.clone()));
    }
    Ok(SparseVec::from_entries(entries))
}

/// Extend a generator-image solution to the full matrix of the derivation
/// by the Leibniz rule along the stored word of each basis path.
pub fn derivation_matrix(
    pres: &Presentation,
    model: &LinearModel,
    sol: &SparseVec,
) -> Vec<SparseVec> {
    let field = model.field;
    let nv = pres.quiver.n_vertices();
    let block = |g: usize| -> SparseVec {
        let lo = g * model.dim;
        let hi = lo + model.dim;
        SparseVec::from_entries(
            sol.iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        )
    };
    let mut cols = Vec::with_capacity(model.dim);
    for b in &model.basis {
        if b.is_trivial() {
            cols.push(block(b.source()));
            continue;
        }
        let arrows = b.arrows();
        let mut acc = SparseVec::zero();
        for (i, a) in arrows.iter().enumerate() {
            let prefix = if i == 0 {
                model.unit()
            } else {
                // Prefixes of irreducible words are irreducible.
                let p = pres.quiver.path_from_arrows(&arrows[..i]).expect("prefix");
                SparseVec::unit(model.index[&p], &field)
            };
            let suffix = if i + 1 == arrows.len() {
                model.unit()
            } else {
                let p = pres
                    .quiver
                    .path_from_arrows(&arrows[i + 1..])
                    .expect("suffix");
                SparseVec::unit(model.index[&p], &field)
            };
            let da = block(nv + *a);
            acc = acc.add(&model.mul_vec(&model.mul_vec(&prefix, &da), &suffix));
        }
        cols.push(acc);
    }
    cols
}

fn apply_matrix(cols: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::zero();
    for (i, c) in v.iter() {
        out = out.add_scaled(&cols[*i], c);
    }
    out
}

/// Post-hoc check: every solution satisfies Leibniz on all basis pairs.
fn assert_leibniz(
    pres: &Presentation,
    rs: &ReductionSystem,
    model: &LinearModel,
    der: &DerSpace,
) -> Result<()> {
    let _ = rs;
    for sol in der.space.rows() {
        let cols = derivation_matrix(pres, model, sol);
        for i in 0..model.dim {
            for j in 0..model.dim {
                let lhs = apply_matrix(&cols, &model.mult[i][j]);
                let rhs = model
                    .mul_vec(&cols[i], &SparseVec::unit(j, &model.field))
                    .add(&model.mul_vec(&SparseVec::unit(i, &model.field), &cols[j]));
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "oracle derivation violates Leibniz on pair ({i},{j})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Inner derivations ad_b as generator-image vectors.
pub fn inner_derivations(pres: &Presentation, model: &LinearModel) -> SubspaceBasis {
    let field = model.field;
    let nv = pres.quiver.n_vertices();
    let na = pres.quiver.n_arrows();
    let mut span = SubspaceBasis::new(field);
    for b in 0..model.dim {
        let bv = SparseVec::unit(b, &field);
        let mut entries = Vec::new();
        for v in 0..nv {
            let ev = SparseVec::unit(model.vertex_idx[v], &field);
            let ad = model.mul_vec(&bv, &ev).add(&model.mul_vec(&ev, &bv).neg());
            for (c, k) in ad.iter() {
                entries.push((v * model.dim + c, k.clone()));
            }
        }
        for a in 0..na {
            let av = SparseVec::unit(model.arrow_idx[a], &field);
            let ad = model.mul_vec(&bv, &av).add(&model.mul_vec(&av, &bv).neg());
            for (c, k) in ad.iter() {
                entries.push(((nv + a) * model.dim + c, k.clone()));
            }
        }
        span.insert(SparseVec::from_entries(entries));
    }
    span
}

/// The oracle's full report on one algebra.
pub struct OracleReport {
    pub dim_alg: usize,
    pub dim_der: usize,
    pub dim_inn: usize,
    pub dim_hh1: usize,
    pub lie: LieData,
    pub series: SeriesReport,
    pub rad_dim_hh1: usize,
    pub rad_equals_full: bool,
    pub rad_series: SeriesReport,
}

/// The quotient of a derivation subspace (containing the inner
/// derivations) by Inn, as exact structure constants under the commutator.
pub fn quotient_lie(
    pres: &Presentation,
    model: &LinearModel,
    sub: &DerSpace,
    inn: &SubspaceBasis,
) -> Result<LieData> {
    let field = model.field;
    {
        let inn_pivots: std::collections::BTreeSet<usize> = inn.pivots().into_iter().collect();
        let reps: Vec<SparseVec> = sub
            .space
            .rows()
            .iter()
            .filter(|r| !inn_pivots.contains(&r.leading().expect("row").0))
            .cloned()
            .collect();
        let n = reps.len();
        let project = |v: &SparseVec| -> Result<Vec<Scalar>> {
            let mut v = inn.reduce(v);
            let mut coeffs = vec![field.zero(); n];
            for (k, rep) in reps.iter().enumerate() {
                let (p, _) = rep.leading().expect("rep");
                if let Some(c) = v.get(p) {
                    coeffs[k] = c.clone();
                    let c = c.clone();
                    v = v.add_scaled(rep, &c.neg());
                }
            }
            if v.is_zero() {
                Ok(coeffs)
            } else {
                Err(Error::Internal(
                    "oracle bracket left the derivation space".to_string(),
                ))
            }
        };
        let matrices: Vec<Vec<SparseVec>> = reps
            .iter()
            .map(|r| derivation_matrix(pres, &model, r))
            .collect();
        let nv = pres.quiver.n_vertices();
        let na = pres.quiver.n_arrows();
        let mut table = vec![vec![vec![field.zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                if j <= i {
                    continue;
                }
                // Commutator of the two matrices, read off on generators.
                let mut entries = Vec::new();
                for v in 0..nv {
                    let col = model.vertex_idx[v];
                    let c = apply_matrix(&matrices[i], &matrices[j][col])
                        .add(&apply_matrix(&matrices[j], &matrices[i][col]).neg());
                    for (k, s) in c.iter() {
                        entries.push((v * model.dim + k, s.clone()));
                    }
                }
                for a in 0..na {
                    let col = model.arrow_idx[a];
                    let c = apply_matrix(&matrices[i], &matrices[j][col])
                        .add(&apply_matrix(&matrices[j], &matrices[i][col]).neg());
                    for (k, s) in c.iter() {
                        entries.push(((nv + a) * model.dim + k, s.clone()));
                    }
                }
                let vec = SparseVec::from_entries(entries);
                table[i][j] = project(&vec)?;
                table[j][i] = table[i][j].iter().map(|c| c.neg()).collect();
            }
        }
        let labels = (0..n).map(|i| format!("d{i}")).collect();
        LieData::new(field, table, labels)
    }
}

/// Der(A)/Inn(A) with the commutator bracket.
pub fn hh1_direct(
    pres: &Presentation,
    rs: &ReductionSystem,
    model: &LinearModel,
) -> Result<LieData> {
    let der = derivations_direct(pres, rs, model, false)?;
    let inn = inner_derivations(pres, model);
    quotient_lie(pres, model, &der, &inn)
}

/// The radical-preserving derivations and whether they are everything.
pub fn der_rad_direct(
    pres: &Presentation,
    rs: &ReductionSystem,
    model: &LinearModel,
) -> Result<(DerSpace, bool)> {
    let der = derivations_direct(pres, rs, model, false)?;
    let der_rad = derivations_direct(pres, rs, model, true)?;
    let full = der_rad.space.dim() == der.space.dim();
    Ok((der_rad, full))
}

/// Compute Der, Inn, Der_rad, and the quotient Lie algebras directly.
pub fn analyze_direct(
    pres: &Presentation,
    rs: &ReductionSystem,
    basis: &Basis,
) -> Result<OracleReport> {
    let model = build_linear_model(pres, rs, basis)?;
    let der = derivations_direct(pres, rs, &model, false)?;
    let der_rad = derivations_direct(pres, rs, &model, true)?;
    let inn = inner_derivations(pres, &model);
    for row in inn.rows() {
        if !der.space.contains(row) {
            return Err(Error::Internal(
                "inner derivation outside the derivation space".to_string(),
            ));
        }
        if !der_rad.space.contains(row) {
            return Err(Error::Internal(
                "inner derivation outside the radical-preserving space".to_string(),
            ));
        }
    }
    let lie = quotient_lie(pres, &model, &der, &inn)?;
    let rad_lie = quotient_lie(pres, &model, &der_rad, &inn)?;
    let series = series_report(&lie);
    let rad_series = series_report(&rad_lie);
    Ok(OracleReport {
        dim_alg: model.dim,
        dim_der: der.space.dim(),
        dim_inn: inn.dim(),
        dim_hh1: der.space.dim() - inn.dim(),
        rad_dim_hh1: der_rad.space.dim() - inn.dim(),
        rad_equals_full: der_rad.space.dim() == der.space.dim(),
        lie,
        series,
        rad_series,
    })
}
