//! Finite-dimensional Lie algebras as exact structure constants: the cochain
//! bracket, derived and lower-central series, centers, and the solvability
//! family of predicates.

use crate::cohomology::{pairvec_add_term, substitute, Complex, Hh1Space, PairVec};
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, SubspaceBasis};
use crate::rewriting::ReductionSystem;
use crate::scalar::{Field, Scalar};

/// The bracket of two cochains in K(Q1||B), extended bilinearly from
/// [a||h, b||w] = b||w^(a,h) - a||h^(b,w), with all substitutions reduced.
pub fn bracket_cochain(x: &PairVec, y: &PairVec, rs: &ReductionSystem) -> Result<PairVec> {
    let mut out = PairVec::new();
    for ((a, h), ca) in x {
        let hsum = crate::algebra::PathSum::term(h.clone(), ca.field().one());
        for ((b, w), cb) in y {
            let coeff = ca.mul(cb);
            let wsum = crate::algebra::PathSum::term(w.clone(), cb.field().one());
            // b || w^(a, h)
            let first = substitute(w, *a, &hsum, rs)?;
            for (p, c) in first.terms() {
                pairvec_add_term(&mut out, (*b, p.clone()), c.mul(&coeff));
            }
            // - a || h^(b, w)
            let second = substitute(h, *b, &wsum, rs)?;
            for (p, c) in second.terms() {
                pairvec_add_term(&mut out, (*a, p.clone()), c.mul(&coeff).neg());
            }
        }
    }
    Ok(out)
}

/// A Lie algebra by structure constants over an exact field. Construction
/// checks that the table is alternating and satisfies the Jacobi identity
/// on every basis triple.
#[derive(Clone, Debug)]
pub struct LieData {
    pub dim: usize,
    pub field: Field,
    /// table[i][j] = coordinates of [x_i, x_j].
    pub table: Vec<Vec<Vec<Scalar>>>,
    /// Human-readable descriptions of the basis vectors.
    pub labels: Vec<String>,
}

impl LieData {
    pub fn new(field: Field, table: Vec<Vec<Vec<Scalar>>>, labels: Vec<String>) -> Result<LieData> {
        let dim = table.len();
        let l = LieData {
            dim,
            field,
            table,
            labels,
        };
        l.check()?;
        Ok(l)
    }

    fn check(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            if self.table[i].len() != n {
                return Err(Error::InvalidLieTable("ragged table".to_string()));
            }
            for j in 0..n {
                if self.table[i][j].len() != n {
                    return Err(Error::InvalidLieTable("ragged entry".to_string()));
                }
            }
        }
        // Alternating: [x,x] = 0 in every characteristic, and antisymmetry.
        for i in 0..n {
            if self.table[i][i].iter().any(|c| !c.is_zero()) {
                return Err(Error::InvalidLieTable(format!("[x{i}, x{i}] != 0")));
            }
            for j in 0..n {
                for k in 0..n {
                    if !self.table[i][j][k].add(&self.table[j][i][k]).is_zero() {
                        return Err(Error::InvalidLieTable(format!(
                            "antisymmetry fails at ({i},{j})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = vec![self.field.zero(); n];
                    self.add_bracket_coords(&mut acc, &self.table[j][k], i);
                    self.add_bracket_coords(&mut acc, &self.table[k][i], j);
                    self.add_bracket_coords(&mut acc, &self.table[i][j], k);
                    if acc.iter().any(|c| !c.is_zero()) {
                        return Err(Error::InvalidLieTable(format!(
                            "Jacobi fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    // acc += [x_i, v] for v given in coordinates.
    fn add_bracket_coords(&self, acc: &mut [Scalar], v: &[Scalar], i: usize) {
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, t) in self.table[i][j].iter().enumerate() {
                acc[k] = acc[k].add(&t.mul(c));
            }
        }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut entries = Vec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let c = a.mul(b);
                for (k, t) in self.table[*i][*j].iter().enumerate() {
                    if !t.is_zero() {
                        entries.push((k, t.mul(&c)));
                    }
                }
            }
        }
        SparseVec::from_entries(entries)
    }

    pub fn full_space(&self) -> SubspaceBasis {
        let mut s = SubspaceBasis::new(self.field);
        for i in 0..self.dim {
            s.insert(SparseVec::unit(i, &self.field));
        }
        s
    }

    /// Span of all brackets between two subspaces.
    pub fn bracket_space(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
        let mut out = SubspaceBasis::new(self.field);
        for u in a.rows() {
            for v in b.rows() {
                out.insert(self.bracket(u, v));
            }
        }
        out
    }

    /// Center: the null space of the stacked adjoint action.
    pub fn center(&self) -> SubspaceBasis {
        // Unknown x with [x, e_j] = 0 for all j: rows indexed by (j, k).
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut row = Vec::new();
                for i in 0..self.dim {
                    let c = &self.table[i][j][k];
                    if !c.is_zero() {
                        row.push((i, c.clone()));
                    }
                }
                rows.push(SparseVec::from_entries(row));
            }
        }
        let ker = crate::linalg::nullspace(&rows, self.dim, self.field);
        SubspaceBasis::from_vectors(self.field, ker)
    }
}

/// Derived series, lower-central series, and the solvability-family flags.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SeriesReport {
    /// [dim L^(0), dim L^(1), ...] until stabilization.
    pub derived_dims: Vec<usize>,
    /// Lower-central series dims of L itself.
    pub lcs_dims: Vec<usize>,
    /// Lower-central series dims of the derived subalgebra L^(1).
    pub derived_lcs_dims: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub strongly_solvable: bool,
    pub perfect: bool,
    pub abelian: bool,
    pub center_dim: usize,
}

/// Dimensions of the derived series until rank stabilization.
pub fn derived_series(l: &LieData) -> Vec<usize> {
    let mut dims = vec![l.dim];
    let mut cur = l.full_space();
    loop {
        let next = l.bracket_space(&cur, &cur);
        dims.push(next.dim());
        if next.dim() == cur.dim() || next.dim() == 0 {
            break;
        }
        cur = next;
    }
    dims
}

/// Lower-central series of `start` inside itself: W_0 = start,
/// W_{k+1} = [start, W_k].
pub fn lower_central(l: &LieData, start: &SubspaceBasis) -> Vec<usize> {
    let mut dims = vec![start.dim()];
    let mut cur = start.clone();
    loop {
        let next = l.bracket_space(start, &cur);
        dims.push(next.dim());
        if next.dim() == cur.dim() || next.dim() == 0 {
            break;
        }
        cur = next;
    }
    dims
}

pub fn series_report(l: &LieData) -> SeriesReport {
    let derived_dims = derived_series(l);
    let full = l.full_space();
    let lcs_dims = lower_central(l, &full);
    let derived_sub = l.bracket_space(&full, &full);
    let derived_lcs_dims = lower_central(l, &derived_sub);
    let solvable = *derived_dims.last().unwrap() == 0;
    let nilpotent = *lcs_dims.last().unwrap() == 0;
    let strongly_solvable = *derived_lcs_dims.last().unwrap() == 0;
    let perfect = l.dim > 0 && derived_dims.get(1) == Some(&l.dim);
    let abelian = derived_sub.dim() == 0;
    let center_dim = l.center().dim();
    SeriesReport {
        derived_dims,
        lcs_dims,
        derived_lcs_dims,
        solvable,
        nilpotent,
        strongly_solvable,
        perfect,
        abelian,
        center_dim,
    }
}

/// Structure constants of HH^1 from the cochain bracket of the chosen
/// representatives, projected modulo Im delta0. Every bracket is asserted
/// to land back in Ker delta1.
pub fn structure_constants(
    hh1: &Hh1Space,
    complex: &Complex,
    rs: &ReductionSystem,
    field: Field,
) -> Result<LieData> {
    structure_constants_of(&hh1.reps, hh1, complex, rs, field)
}

/// Structure constants over an arbitrary list of representatives whose
/// brackets close modulo Im delta0 (used for HH^1 itself and for the
/// radical-preserving subalgebra).
pub fn structure_constants_of(
    reps: &[SparseVec],
    hh1: &Hh1Space,
    complex: &Complex,
    rs: &ReductionSystem,
    field: Field,
) -> Result<LieData> {
    let n = reps.len();
    // Projection onto these reps modulo Im delta0.
    let project = |v: &SparseVec| -> Result<Vec<Scalar>> {
        let mut v = hh1.image.reduce(v);
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
            Err(Error::BracketNotClosed(
                "bracket not spanned by the chosen representatives modulo Im delta0".to_string(),
            ))
        }
    };
    let mut table = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if j < i {
                table[i][j] = table[j][i].iter().map(|c| c.neg()).collect();
                continue;
            }
            let pi = complex.vec_to_pair(&reps[i]);
            let pj = complex.vec_to_pair(&reps[j]);
            let br = bracket_cochain(&pi, &pj, rs)?;
            let vec = complex.pair_to_vec(&br)?;
            if !complex.apply_delta1(&vec).is_zero() {
                return Err(Error::BracketNotClosed(format!(
                    "bracket of representatives {i} and {j} is not a cocycle"
                )));
            }
            table[i][j] = project(&vec)?;
        }
    }
    let labels = reps
        .iter()
        .map(|r| {
            let pv = complex.vec_to_pair(r);
            display_pairvec(&pv, rs)
        })
        .collect();
    LieData::new(field, table, labels)
}

pub fn display_pairvec(v: &PairVec, rs: &ReductionSystem) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, ((a, p), c)) in v.iter().enumerate() {
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(&format!(
            "{}||{}",
            rs.quiver.arrow(*a).name,
            rs.quiver.path_display(p)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Hh1Space;
    use crate::format::parse;
    use crate::rewriting::ReductionSystem;

    fn hh1_of(text: &str) -> (LieData, SeriesReport) {
        let pres = parse(text).unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        rs.certify_confluent().unwrap();
        let fin = rs.finiteness();
        let basis = rs.enumerate_basis(fin.max_length.unwrap(), true).unwrap();
        let complex = Complex::build(&pres, &rs, &basis).unwrap();
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        let lie = structure_constants(&hh1, &complex, &rs, pres.field).unwrap();
        let report = series_report(&lie);
        (lie, report)
    }

    #[test]
    fn bracket_kx3_borel_type() {
        // HH1(K[x]/(x^3)) over Q is 2-dimensional with [v1, v2] = v2.
        let (lie, report) = hh1_of("field Q\nvertex e\narrow x e e\nrel x^3\n");
        assert_eq!(lie.dim, 2);
        assert_eq!(report.derived_dims, vec![2, 1, 0]);
        assert!(report.solvable);
        assert!(report.strongly_solvable);
        assert!(!report.nilpotent);
        assert!(!report.perfect);
    }

    #[test]
    fn bracket_kx3_gf3_perfect() {
        let (lie, report) = hh1_of("field GF 3\nvertex e\narrow x e e\nrel x^3\n");
        assert_eq!(lie.dim, 3);
        assert!(report.perfect);
        assert!(!report.solvable);
        assert_eq!(report.derived_dims, vec![3, 3]);
    }

    #[test]
    fn kronecker_j2_sl2_invariants() {
        let (lie, report) = hh1_of("field Q\nvertex e1 e2\narrow a e1 e2\narrow b e1 e2\n");
        assert_eq!(lie.dim, 3);
        assert!(report.perfect);
        assert_eq!(report.center_dim, 0);
        assert_eq!(report.derived_dims, vec![3, 3]);

        // Over GF(2) the diagonal class a||a + b||b is a coboundary, so the
        // quotient is solvable (and centerless: the class of a||a acts as
        // the identity on the off-diagonal classes).
        let (_, report2) = hh1_of("field GF 2\nvertex e1 e2\narrow a e1 e2\narrow b e1 e2\n");
        assert!(report2.solvable);
        assert!(!report2.perfect);
        assert_eq!(report2.center_dim, 0);
    }

    #[test]
    fn witt_type_bracket_mod3() {
        // [x||e, x||x^2] = 2 x||x = -x||x over GF(3).
        let pres = parse("field GF 3\nvertex e\narrow x e e\nrel x^3\n").unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        let basis = rs.enumerate_basis(2, true).unwrap();
        let complex = Complex::build(&pres, &rs, &basis).unwrap();
        let x = pres.quiver.arrow_path(0);
        let e = pres.quiver.trivial_path(0);
        let x2 = pres.quiver.path_from_arrows(&[0, 0]).unwrap();
        let mut a = PairVec::new();
        a.insert((0, e), pres.field.one());
        let mut b = PairVec::new();
        b.insert((0, x2), pres.field.one());
        let br = bracket_cochain(&a, &b, &rs).unwrap();
        assert_eq!(br.len(), 1);
        let ((_, p), c) = br.iter().next().unwrap();
        assert_eq!(*p, x);
        assert_eq!(c.to_string(), "2");
        let _ = complex;
    }

    #[test]
    fn diagonal_bracket_vanishes() {
        let pres = parse("field Q\nvertex e\narrow a e e\nrel a^2\n").unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        let mut v = PairVec::new();
        v.insert((0, pres.quiver.arrow_path(0)), pres.field.one());
        let br = bracket_cochain(&v, &v, &rs).unwrap();
        assert!(br.is_empty());
    }

    #[test]
    fn one_dimensional_is_abelian() {
        let f = Field::rational();
        let table = vec![vec![vec![f.zero()]]];
        let l = LieData::new(f, table, vec!["v".to_string()]).unwrap();
        let r = series_report(&l);
        assert!(r.abelian && r.nilpotent && r.solvable);
        assert_eq!(r.center_dim, 1);
    }

    #[test]
    fn sl2_center_by_characteristic() {
        // sl2 table: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
        let build = |field: Field| -> LieData {
            let z = || field.zero();
            let mut t = vec![vec![vec![z(); 3]; 3]; 3];
            // basis order: h=0, e=1, f=2
            t[0][1][1] = field.from_i64(2);
            t[1][0][1] = field.from_i64(-2);
            t[0][2][2] = field.from_i64(-2);
            t[2][0][2] = field.from_i64(2);
            t[1][2][0] = field.from_i64(1);
            t[2][1][0] = field.from_i64(-1);
            LieData::new(
                field,
                t,
                vec!["h".to_string(), "e".to_string(), "f".to_string()],
            )
            .unwrap()
        };
        let l0 = build(Field::rational());
        assert_eq!(l0.center().dim(), 0);
        let l2 = build(Field::prime(2).unwrap());
        assert_eq!(l2.center().dim(), 1);
    }

    #[test]
    fn scaling_representative_preserves_flags() {
        let pres = parse("field Q\nvertex e\narrow x e e\nrel x^3\n").unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        let basis = rs.enumerate_basis(2, true).unwrap();
        let complex = Complex::build(&pres, &rs, &basis).unwrap();
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        let base = structure_constants(&hh1, &complex, &rs, pres.field).unwrap();
        let scaled_reps: Vec<_> = hh1
            .reps
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if i == 0 {
                    r.scale(&pres.field.from_i64(7))
                } else {
                    r.clone()
                }
            })
            .collect();
        let scaled = structure_constants_of(&scaled_reps, &hh1, &complex, &rs, pres.field).unwrap();
        assert_eq!(series_report(&base), series_report(&scaled));
    }

    #[test]
    fn rejects_non_jacobi_table() {
        let f = Field::rational();
        let z = || f.zero();
        let mut t = vec![vec![vec![z(); 3]; 3]; 3];
        // [e1,e2] = e3, [e1,e3] = e2, [e2,e3] = e1 fails Jacobi over Q? It
        // is so(3), which satisfies Jacobi; break antisymmetry instead.
        t[0][1][2] = f.one();
        let err = LieData::new(f, t, vec![String::new(); 3]);
        assert!(err.is_err());
    }
}
