//! The parallel-pair cochain complex K(Q0||B) -> K(Q1||B) -> K(R||B), its
//! differentials, HH^1 as a quotient with chosen coset representatives, the
//! Sigma coordinate sets, the length grading, and the radical-preserving
//! subalgebra of HH^1.

use std::collections::BTreeMap;

use crate::algebra::{compose, parallel, ArrowId, Path, PathSum, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, SparseVec, SubspaceBasis};
use crate::rewriting::{Basis, ReductionSystem};
use crate::scalar::Scalar;

/// A cochain in K(Q1||B) kept as a map before coordinatization.
pub type PairVec = BTreeMap<(ArrowId, Path), Scalar>;

pub fn pairvec_add_term(v: &mut PairVec, key: (ArrowId, Path), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Sum over every single occurrence of `alpha` in `q` of the normal form of
/// `q` with that occurrence replaced by `p`. Zero when `alpha` does not
/// occur or every replacement reduces to zero.
pub fn substitute(q: &Path, alpha: ArrowId, p: &PathSum, rs: &ReductionSystem) -> Result<PathSum> {
    let ap = rs.quiver.arrow_path(alpha);
    for t in p.paths() {
        if !parallel(t, &ap) {
            return Err(Error::NotParallel(rs.quiver.arrow(alpha).name.clone()));
        }
    }
    let mut out = PathSum::zero();
    for (i, a) in q.arrows().iter().enumerate() {
        if *a != alpha {
            continue;
        }
        for (mid, c) in p.terms() {
            let spliced = q.splice(i, 1, mid);
            out = out.add(&rs.reduce_path(&spliced, c)?);
        }
    }
    Ok(out)
}

/// Coordinates of one parallel-pair space: pairs (source item, basis path)
/// ordered by (source declaration order, target length, target word order).
#[derive(Clone, Debug)]
pub struct PairCoords {
    pub coords: Vec<(usize, Path)>,
    pub index: BTreeMap<(usize, Path), usize>,
}

impl PairCoords {
    fn build(pairs: Vec<(usize, Path)>) -> PairCoords {
        let mut index = BTreeMap::new();
        for (i, key) in pairs.iter().enumerate() {
            index.insert(key.clone(), i);
        }
        PairCoords {
            coords: pairs,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// The assembled complex for one presentation.
pub struct Complex {
    /// (vertex, cycle at that vertex)
    pub c0: PairCoords,
    /// (arrow, parallel basis path)
    pub c1: PairCoords,
    /// (relation index, basis path parallel to the relation)
    pub c2: PairCoords,
    /// delta0 image of each c0 coordinate, in c1 coordinates.
    pub delta0: Vec<SparseVec>,
    /// delta1 image of each c1 coordinate, in c2 coordinates.
    pub delta1: Vec<SparseVec>,
    /// The relation set used for delta1 (the inter-reduced generators).
    pub relations: Vec<PathSum>,
}

fn sort_targets(mut pairs: Vec<(usize, Path)>, rs: &ReductionSystem) -> Result<Vec<(usize, Path)>> {
    // Source declaration order, then target length, then the rewriting order
    // on equal-length targets (total there for positive weights), with the
    // structural order as a final tiebreak.
    pairs.sort_by(|(sa, pa), (sb, pb)| {
        (sa, pa.len())
            .cmp(&(sb, pb.len()))
            .then_with(|| match rs.order.compare(pa, pb, &rs.quiver) {
                Ok(ord) => ord,
                Err(_) => std::cmp::Ordering::Equal,
            })
            .then_with(|| pa.cmp(pb))
    });
    Ok(pairs)
}

impl Complex {
    pub fn build(pres: &Presentation, rs: &ReductionSystem, basis: &Basis) -> Result<Complex> {
        let one = pres.field.one();
        let relations = rs.relations(&one);

        let mut c0_pairs = Vec::new();
        for v in 0..pres.quiver.n_vertices() {
            for b in &basis.all {
                if b.source() == v && b.target() == v {
                    c0_pairs.push((v, b.clone()));
                }
            }
        }
        let mut c1_pairs = Vec::new();
        for (aid, arr) in pres.quiver.arrows().iter().enumerate() {
            for b in &basis.all {
                if b.source() == arr.source && b.target() == arr.target {
                    c1_pairs.push((aid, b.clone()));
                }
            }
        }
        let mut c2_pairs = Vec::new();
        for (ri, rel) in relations.iter().enumerate() {
            let rep = rel.paths().next().expect("nonzero relation");
            let (s, t) = (rep.source(), rep.target());
            for b in &basis.all {
                if b.source() == s && b.target() == t {
                    c2_pairs.push((ri, b.clone()));
                }
            }
        }
        let c0 = PairCoords::build(sort_targets(c0_pairs, rs)?);
        let c1 = PairCoords::build(sort_targets(c1_pairs, rs)?);
        let c2 = PairCoords::build(sort_targets(c2_pairs, rs)?);

        // delta0(e||p) sends each arrow a to the commutator of p and a:
        // (p then a) - (a then p), reduced.
        let mut delta0 = Vec::with_capacity(c0.len());
        for (v, p) in &c0.coords {
            let _ = v;
            let mut col: Vec<(usize, Scalar)> = Vec::new();
            for (aid, _) in pres.quiver.arrows().iter().enumerate() {
                let ap = pres.quiver.arrow_path(aid);
                let mut val = PathSum::zero();
                if let Some(pa) = compose(p, &ap) {
                    val = val.add(&rs.reduce_path(&pa, &one)?);
                }
                if let Some(ap_) = compose(&ap, p) {
                    val = val.sub(&rs.reduce_path(&ap_, &one)?);
                }
                for (path, c) in val.terms() {
                    let idx = c1.index.get(&(aid, path.clone())).ok_or_else(|| {
                        Error::Internal(format!(
                            "delta0 image outside K(Q1||B): {}||{}",
                            pres.quiver.arrow(aid).name,
                            pres.quiver.path_display(path)
                        ))
                    })?;
                    col.push((*idx, c.clone()));
                }
            }
            delta0.push(SparseVec::from_entries(col));
        }

        // delta1(a||p) records against each relation the substitution of p
        // for a in that relation, expanded over the basis.
        let mut delta1 = Vec::with_capacity(c1.len());
        for (aid, p) in &c1.coords {
            let psum = PathSum::term(p.clone(), one.clone());
            let mut col: Vec<(usize, Scalar)> = Vec::new();
            for (ri, rel) in relations.iter().enumerate() {
                let mut val = PathSum::zero();
                for (w, lam) in rel.terms() {
                    let sub = substitute(w, *aid, &psum, rs)?;
                    val = val.add(&sub.scale(lam));
                }
                for (path, c) in val.terms() {
                    let idx = c2.index.get(&(ri, path.clone())).ok_or_else(|| {
                        Error::Internal(format!(
                            "delta1 image outside K(R||B): r{}||{}",
                            ri,
                            pres.quiver.path_display(path)
                        ))
                    })?;
                    col.push((*idx, c.clone()));
                }
            }
            delta1.push(SparseVec::from_entries(col));
        }

        let complex = Complex {
            c0,
            c1,
            c2,
            delta0,
            delta1,
            relations,
        };
        complex.assert_complex(pres)?;
        Ok(complex)
    }

    /// delta1 of an arbitrary c1 vector.
    pub fn apply_delta1(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (i, c) in v.iter() {
            out = out.add_scaled(&self.delta1[*i], c);
        }
        out
    }

    /// delta1 . delta0 = 0 on every generator, asserted for each algebra.
    fn assert_complex(&self, pres: &Presentation) -> Result<()> {
        for (k, col) in self.delta0.iter().enumerate() {
            if !self.apply_delta1(col).is_zero() {
                let (v, p) = &self.c0.coords[k];
                return Err(Error::Internal(format!(
                    "delta1(delta0({}||{})) != 0",
                    pres.quiver.vertex_name(*v),
                    pres.quiver.path_display(p)
                )));
            }
        }
        Ok(())
    }

    pub fn pair_to_vec(&self, v: &PairVec) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(v.len());
        for ((a, p), c) in v {
            let idx = self.c1.index.get(&(*a, p.clone())).ok_or_else(|| {
                Error::Internal("pair outside the c1 coordinate system".to_string())
            })?;
            entries.push((*idx, c.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn vec_to_pair(&self, v: &SparseVec) -> PairVec {
        let mut out = PairVec::new();
        for (i, c) in v.iter() {
            let (a, p) = &self.c1.coords[*i];
            pairvec_add_term(&mut out, (*a, p.clone()), c.clone());
        }
        out
    }
}

/// Kernel of delta1 as equations-over-columns nullspace.
pub fn kernel_delta1(complex: &Complex, pres: &Presentation) -> SubspaceBasis {
    // Transpose the column map into equation rows indexed by c2 coordinates.
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); complex.c2.len()];
    for (col, image) in complex.delta1.iter().enumerate() {
        for (r, c) in image.iter() {
            rows[*r].push((col, c.clone()));
        }
    }
    let rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_entries).collect();
    let ker = nullspace(&rows, complex.c1.len(), pres.field);
    SubspaceBasis::from_vectors(pres.field, ker)
}

/// Image of delta0 as a subspace of the c1 coordinate space.
pub fn image_delta0(complex: &Complex, pres: &Presentation) -> SubspaceBasis {
    SubspaceBasis::from_vectors(pres.field, complex.delta0.iter().cloned())
}

/// HH^1 with echelon-complement coset representatives.
pub struct Hh1Space {
    pub kernel: SubspaceBasis,
    pub image: SubspaceBasis,
    pub reps: Vec<SparseVec>,
    pub dim: usize,
}

impl Hh1Space {
    pub fn build(complex: &Complex, pres: &Presentation) -> Result<Hh1Space> {
        let kernel = kernel_delta1(complex, pres);
        let image = image_delta0(complex, pres);
        for row in image.rows() {
            if !kernel.contains(row) {
                return Err(Error::Internal(
                    "Im delta0 not contained in Ker delta1".to_string(),
                ));
            }
        }
        let impivots: std::collections::BTreeSet<usize> = image.pivots().into_iter().collect();
        let reps: Vec<SparseVec> = kernel
            .rows()
            .iter()
            .filter(|r| !impivots.contains(&r.leading().expect("row").0))
            .cloned()
            .collect();
        let dim = kernel.dim() - image.dim();
        debug_assert_eq!(reps.len(), dim);
        Ok(Hh1Space {
            kernel,
            image,
            reps,
            dim,
        })
    }

    /// Coefficients of the class of `v` over the representatives; `v` must
    /// lie in Ker delta1.
    pub fn project(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        let field = self.kernel.field();
        let mut v = self.image.reduce(v);
        let mut coeffs = vec![field.zero(); self.reps.len()];
        for (k, rep) in self.reps.iter().enumerate() {
            let (p, _) = rep.leading().expect("rep row");
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
                "vector not in Im delta0 + span(representatives)".to_string(),
            ))
        }
    }
}

/// The coordinates alpha||beta with beta of length i carried by some
/// element of Ker delta1.
#[derive(Clone, Debug)]
pub struct SigmaSet {
    pub i: usize,
    pub members: Vec<(ArrowId, Path)>,
}

/// All Sigma sets at once: the union of kernel supports split by target
/// length.
pub fn sigma_sets(complex: &Complex, kernel: &SubspaceBasis) -> Vec<SigmaSet> {
    let max_len = complex
        .c1
        .coords
        .iter()
        .map(|(_, p)| p.len())
        .max()
        .unwrap_or(0);
    let mut members: Vec<std::collections::BTreeSet<(ArrowId, Path)>> =
        vec![Default::default(); max_len + 1];
    for row in kernel.rows() {
        for i in row.support() {
            let (a, p) = &complex.c1.coords[i];
            members[p.len()].insert((*a, p.clone()));
        }
    }
    members
        .into_iter()
        .enumerate()
        .map(|(i, set)| SigmaSet {
            i,
            members: set.into_iter().collect(),
        })
        .collect()
}

pub fn sigma(complex: &Complex, kernel: &SubspaceBasis, i: usize) -> SigmaSet {
    let mut sets = sigma_sets(complex, kernel);
    if i < sets.len() {
        sets.swap_remove(i)
    } else {
        SigmaSet {
            i,
            members: Vec::new(),
        }
    }
}

pub fn sigma_contains(sets: &[SigmaSet], i: usize, a: ArrowId, p: &Path) -> bool {
    sets.get(i)
        .map(|s| s.members.iter().any(|(b, q)| *b == a && q == p))
        .unwrap_or(false)
}

/// Degree pieces of HH^1 for a length-graded presentation. The piece in
/// degree i-1 is cut from kernel vectors with targets of length i modulo
/// the matching piece of Im delta0.
#[derive(Clone, Debug)]
pub struct GradedDecomposition {
    /// dim of the piece with target length i, indexed by i.
    pub piece_dims: Vec<usize>,
    /// dim of the ideal (Im delta0 slice) with target length i.
    pub ideal_dims: Vec<usize>,
    /// Representatives per target length.
    pub reps: Vec<Vec<SparseVec>>,
    /// Dimension of the nilpotent tail (pieces with target length >= 2).
    pub tail_dim: usize,
}

pub fn grading(
    pres: &Presentation,
    complex: &Complex,
    hh1: &Hh1Space,
) -> Result<GradedDecomposition> {
    if !pres.is_length_graded() {
        let bad = complex
            .relations
            .iter()
            .find(|r| {
                let mut lens = r.paths().map(|p| p.len());
                match lens.next() {
                    None => false,
                    Some(l) => lens.any(|m| m != l),
                }
            })
            .map(|r| r.display(&pres.quiver))
            .unwrap_or_default();
        return Err(Error::NotGraded(bad));
    }
    let max_len = complex
        .c1
        .coords
        .iter()
        .map(|(_, p)| p.len())
        .max()
        .unwrap_or(0);
    let mut piece_dims = vec![0usize; max_len + 1];
    let mut ideal_dims = vec![0usize; max_len + 1];
    let mut reps: Vec<Vec<SparseVec>> = vec![Vec::new(); max_len + 1];
    let mut total = 0usize;
    for deg in 0..=max_len {
        let coords_in_degree: Vec<usize> = complex
            .c1
            .coords
            .iter()
            .enumerate()
            .filter(|(_, (_, p))| p.len() == deg)
            .map(|(i, _)| i)
            .collect();
        if coords_in_degree.is_empty() {
            continue;
        }
        let inset: std::collections::BTreeSet<usize> = coords_in_degree.iter().copied().collect();
        // Kernel piece: kernel vectors supported inside this degree. In the
        // graded case the kernel splits by degree, so restricting delta1 to
        // these columns computes the piece exactly.
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); complex.c2.len()];
        let mut col_of = BTreeMap::new();
        for (k, i) in coords_in_degree.iter().enumerate() {
            col_of.insert(*i, k);
            for (r, c) in complex.delta1[*i].iter() {
                rows[*r].push((k, c.clone()));
            }
        }
        let rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_entries).collect();
        let ker_piece = nullspace(&rows, coords_in_degree.len(), pres.field);
        // Lift back into global coordinates.
        let lifted: Vec<SparseVec> = ker_piece
            .iter()
            .map(|v| {
                SparseVec::from_entries(
                    v.iter()
                        .map(|(k, c)| (coords_in_degree[*k], c.clone()))
                        .collect(),
                )
            })
            .collect();
        let ker_basis = SubspaceBasis::from_vectors(pres.field, lifted.iter().cloned());
        // Image piece: delta0 columns landing in this degree.
        let mut im_piece = SubspaceBasis::new(pres.field);
        for col in &complex.delta0 {
            if col.is_zero() {
                continue;
            }
            if col.support().all(|i| inset.contains(&i)) {
                im_piece.insert(col.clone());
            }
        }
        for row in im_piece.rows() {
            if !ker_basis.contains(row) {
                return Err(Error::Internal(
                    "graded image slice not inside graded kernel slice".to_string(),
                ));
            }
        }
        let impivots: std::collections::BTreeSet<usize> = im_piece.pivots().into_iter().collect();
        let piece_reps: Vec<SparseVec> = ker_basis
            .rows()
            .iter()
            .filter(|r| !impivots.contains(&r.leading().expect("row").0))
            .cloned()
            .collect();
        piece_dims[deg] = ker_basis.dim() - im_piece.dim();
        ideal_dims[deg] = im_piece.dim();
        total += piece_dims[deg];
        reps[deg] = piece_reps;
    }
    if total != hh1.dim {
        return Err(Error::Internal(format!(
            "graded piece dimensions sum to {total}, HH1 has dimension {}",
            hh1.dim
        )));
    }
    let tail_dim = piece_dims.iter().skip(2).sum();
    Ok(GradedDecomposition {
        piece_dims,
        ideal_dims,
        reps,
        tail_dim,
    })
}

/// The radical-preserving part: classes whose representatives carry no
/// length-0 target. Coboundaries never touch length-0 coordinates, so the
/// class-level and representative-level definitions agree.
pub struct RadSubspace {
    pub reps: Vec<SparseVec>,
    pub dim: usize,
    pub rad_equals_full: bool,
}

pub fn hh1_rad(complex: &Complex, pres: &Presentation, hh1: &Hh1Space) -> Result<RadSubspace> {
    let zero_len_coords: Vec<usize> = complex
        .c1
        .coords
        .iter()
        .enumerate()
        .filter(|(_, (_, p))| p.is_trivial())
        .map(|(i, _)| i)
        .collect();
    // Every delta0 image lands on targets of length >= 1.
    for col in &complex.delta0 {
        for (i, _) in col.iter() {
            if complex.c1.coords[*i].1.is_trivial() {
                return Err(Error::Internal(
                    "delta0 image touches a length-0 target".to_string(),
                ));
            }
        }
    }
    // W = kernel vectors with vanishing length-0 coordinates, solved in the
    // kernel's own coefficient space.
    let field = pres.field;
    let kb = hh1.kernel.rows();
    let mut rows = Vec::new();
    for z in &zero_len_coords {
        let mut row = Vec::new();
        for (k, kerv) in kb.iter().enumerate() {
            if let Some(c) = kerv.get(*z) {
                row.push((k, c.clone()));
            }
        }
        rows.push(SparseVec::from_entries(row));
    }
    let combos = nullspace(&rows, kb.len(), field);
    let mut w = SubspaceBasis::new(field);
    for combo in combos {
        let mut v = SparseVec::zero();
        for (k, c) in combo.iter() {
            v = v.add_scaled(&kb[*k], c);
        }
        w.insert(v);
    }
    for row in hh1.image.rows() {
        if !w.contains(row) {
            return Err(Error::Internal(
                "Im delta0 not inside the radical-preserving kernel slice".to_string(),
            ));
        }
    }
    let impivots: std::collections::BTreeSet<usize> = hh1.image.pivots().into_iter().collect();
    let reps: Vec<SparseVec> = w
        .rows()
        .iter()
        .filter(|r| !impivots.contains(&r.leading().expect("row").0))
        .cloned()
        .collect();
    let dim = w.dim() - hh1.image.dim();
    for rep in &reps {
        for (i, _) in rep.iter() {
            if complex.c1.coords[*i].1.is_trivial() {
                return Err(Error::Internal(
                    "radical representative has a length-0 target".to_string(),
                ));
            }
        }
    }
    Ok(RadSubspace {
        reps,
        dim,
        rad_equals_full: dim == hh1.dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;
    use crate::rewriting::ReductionSystem;

    fn setup(text: &str) -> (Presentation, ReductionSystem, Basis, Complex) {
        let pres = parse(text).unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        rs.certify_confluent().unwrap();
        let fin = rs.finiteness();
        let basis = rs.enumerate_basis(fin.max_length.unwrap(), true).unwrap();
        let complex = Complex::build(&pres, &rs, &basis).unwrap();
        (pres, rs, basis, complex)
    }

    const KX3_Q: &str = "field Q\nvertex e\narrow x e e\nrel x^3\n";
    const KX3_GF3: &str = "field GF 3\nvertex e\narrow x e e\nrel x^3\n";

    #[test]
    fn substitute_counts_occurrences() {
        let (pres, rs, _, _) = setup("field Q\nvertex e\narrow x e e\nrel x^5\n");
        let q = pres.quiver.path_from_arrows(&[0, 0, 0]).unwrap();
        let x2 = PathSum::from_path(pres.quiver.path_from_arrows(&[0, 0]).unwrap(), &pres.field);
        let out = substitute(&q, 0, &x2, &rs).unwrap();
        // Three occurrences, each replacement gives x^4.
        assert_eq!(out.len(), 1);
        let (p, c) = out.terms().next().unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(c.to_string(), "3");

        // Replacing by the trivial path contracts: x^2 with x -> e gives 2x.
        let e = PathSum::from_path(pres.quiver.trivial_path(0), &pres.field);
        let x2p = pres.quiver.path_from_arrows(&[0, 0]).unwrap();
        let out = substitute(&x2p, 0, &e, &rs).unwrap();
        let (p, c) = out.terms().next().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(c.to_string(), "2");
    }

    #[test]
    fn substitute_absent_arrow_is_zero() {
        let (pres, rs, _, _) = setup(
            "field Q\nvertex e\narrow a e e\narrow c e e\nrel a^2\nrel c^2\nrel a*c\nrel c*a\n",
        );
        let ab = pres.quiver.path_from_arrows(&[0, 0]).unwrap();
        let p = PathSum::from_path(pres.quiver.arrow_path(0), &pres.field);
        let out = substitute(&ab, 1, &p, &rs).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn delta0_commutative_local_vanishes() {
        let (pres, _, _, complex) = setup(KX3_Q);
        // delta0(e||x) = x||(x^2 - x^2) = 0.
        let k = complex
            .c0
            .coords
            .iter()
            .position(|(_, p)| p.len() == 1)
            .unwrap();
        assert!(complex.delta0[k].is_zero());
        let _ = pres;
    }

    #[test]
    fn delta0_kronecker_identity_column() {
        let (pres, _, _, complex) = setup("field Q\nvertex e1 e2\narrow a e1 e2\narrow b e1 e2\n");
        // delta0(e1||e1) = a||a + b||b.
        let k = complex
            .c0
            .coords
            .iter()
            .position(|(v, p)| *v == 0 && p.is_trivial())
            .unwrap();
        let col = &complex.delta0[k];
        let pairs: Vec<(ArrowId, String)> = col
            .iter()
            .map(|(i, c)| {
                let (a, p) = &complex.c1.coords[*i];
                assert_eq!(c.to_string(), "1");
                (*a, pres.quiver.path_display(p))
            })
            .collect();
        assert_eq!(pairs, vec![(0, "a".to_string()), (1, "b".to_string())]);
        // The sum over all vertices of delta0(e||e) is zero: 1 is central.
        let k2 = complex
            .c0
            .coords
            .iter()
            .position(|(v, p)| *v == 1 && p.is_trivial())
            .unwrap();
        assert!(complex.delta0[k].add(&complex.delta0[k2]).is_zero());
    }

    #[test]
    fn delta1_kx3_char_dependence() {
        let (pres, _, _, complex) = setup(KX3_Q);
        // x||e maps to r||3x^2, nonzero over Q.
        let k = complex
            .c1
            .coords
            .iter()
            .position(|(_, p)| p.is_trivial())
            .unwrap();
        assert!(!complex.delta1[k].is_zero());
        let _ = pres;

        let (_, _, _, complex3) = setup(KX3_GF3);
        let k3 = complex3
            .c1
            .coords
            .iter()
            .position(|(_, p)| p.is_trivial())
            .unwrap();
        assert!(complex3.delta1[k3].is_zero());
    }

    #[test]
    fn delta1_qci_quantum_term() {
        // For the rank-2 quantum relations with q != 1, the differential of
        // X1||e carries the coefficient 1 - q against the target X2 in the
        // commutation relation's row.
        let (pres, _, _, complex) = setup(
            "field GF 5\nvertex e\narrow X1 e e\narrow X2 e e\nrel X2*X1 - 2*X1*X2\nrel X1^2\nrel X2^2\n",
        );
        let col = complex
            .c1
            .coords
            .iter()
            .position(|(a, p)| *a == 0 && p.is_trivial())
            .unwrap();
        let image = &complex.delta1[col];
        // Find the row (commutation relation, X2).
        let x2 = pres.quiver.arrow_path(1);
        let hit = image.iter().find(|(row, _)| {
            let (ri, path) = &complex.c2.coords[*row];
            *path == x2 && complex.relations[*ri].len() == 2
        });
        let (_, c) = hit.expect("quantum term present");
        // 1 - q = 1 - 2 = -1 = 4 over GF(5).
        assert_eq!(c.to_string(), "4");
    }

    #[test]
    fn hh1_dims_kx3() {
        let (pres, _, _, complex) = setup(KX3_Q);
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        assert_eq!(hh1.kernel.dim(), 2);
        assert_eq!(hh1.image.dim(), 0);
        assert_eq!(hh1.dim, 2);

        let (pres3, _, _, complex3) = setup(KX3_GF3);
        let hh13 = Hh1Space::build(&complex3, &pres3).unwrap();
        assert_eq!(hh13.dim, 3);
    }

    #[test]
    fn hh1_dims_kronecker_j2() {
        let (pres, _, _, complex) = setup("field Q\nvertex e1 e2\narrow a e1 e2\narrow b e1 e2\n");
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        assert_eq!(hh1.kernel.dim(), 4);
        assert_eq!(hh1.image.dim(), 1);
        assert_eq!(hh1.dim, 3);
    }

    #[test]
    fn sigma_kx3() {
        let (pres, _, _, complex) = setup(KX3_Q);
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        let sets = sigma_sets(&complex, &hh1.kernel);
        assert!(sets[0].members.is_empty());
        assert_eq!(sets[1].members.len(), 1);
        assert_eq!(sets[2].members.len(), 1);
        let (pres3, _, _, complex3) = setup(KX3_GF3);
        let hh13 = Hh1Space::build(&complex3, &pres3).unwrap();
        let sets3 = sigma_sets(&complex3, &hh13.kernel);
        assert_eq!(sets3[0].members.len(), 1);
    }

    #[test]
    fn grading_kx3() {
        let (pres, _, _, complex) = setup(KX3_Q);
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        let g = grading(&pres, &complex, &hh1).unwrap();
        assert_eq!(g.piece_dims[0], 0);
        assert_eq!(g.piece_dims[1], 1);
        assert_eq!(g.piece_dims[2], 1);
        assert_eq!(g.tail_dim, 1);
    }

    #[test]
    fn not_graded_mixed_relation() {
        let pres =
            parse("field Q\nvertex e\narrow x e e\narrow y e e\nrel x*x - y*x*y\nrel y*y\nrel x*y*x*y\nrel y*x*y*x\nrel x*x*y\nrel y*x*x\nrel x^4\n").unwrap();
        assert!(!pres.is_length_graded());
    }

    #[test]
    fn rad_subspace_kxp() {
        let (pres, _, _, complex) = setup("field GF 3\nvertex e\narrow x e e\nrel x^3\n");
        let hh1 = Hh1Space::build(&complex, &pres).unwrap();
        let rad = hh1_rad(&complex, &pres, &hh1).unwrap();
        assert_eq!(hh1.dim, 3);
        assert_eq!(rad.dim, 2);
        assert!(!rad.rad_equals_full);

        let (presq, _, _, complexq) = setup(KX3_Q);
        let hh1q = Hh1Space::build(&complexq, &presq).unwrap();
        let radq = hh1_rad(&complexq, &presq, &hh1q).unwrap();
        assert!(radq.rad_equals_full);
    }
}
