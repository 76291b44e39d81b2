//! Exact sparse linear algebra over the coefficient field: sorted sparse
//! vectors, incremental reduced echelon bases, and nullspace computation.

use crate::scalar::{Field, Scalar};

/// A sparse vector with entries sorted by index; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(i: usize, field: &Field) -> SparseVec {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> SparseVec {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => {
                    *acc = acc.add(&c);
                }
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, k)| (*i, k.mul(c))).collect(),
        }
    }

    /// self + c * other, merged.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let pick_left = match (self.entries.get(i), other.entries.get(j)) {
                (Some((a, _)), Some((b, _))) => {
                    if a == b {
                        let v = self.entries[i].1.add(&other.entries[j].1.mul(c));
                        if !v.is_zero() {
                            out.push((*a, v));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a < b
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if pick_left {
                out.push(self.entries[i].clone());
                i += 1;
            } else {
                let (b, v) = &other.entries[j];
                let v = v.mul(c);
                if !v.is_zero() {
                    out.push((*b, v));
                }
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(other, &c.field().one()),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, c.neg())).collect(),
        }
    }

    pub fn to_dense(&self, n: usize, field: &Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

/// A subspace kept as a reduced row echelon basis with a pivot registry:
/// pivot columns are strictly increasing, each pivot entry is 1, and every
/// pivot column is zero in all other rows.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    field: Field,
    rows: Vec<SparseVec>,
}

impl SubspaceBasis {
    pub fn new(field: Field) -> SubspaceBasis {
        SubspaceBasis {
            field,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors(field: Field, vecs: impl IntoIterator<Item = SparseVec>) -> SubspaceBasis {
        let mut s = SubspaceBasis::new(field);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.leading().expect("echelon row is nonzero").0)
            .collect()
    }

    /// Residual of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for row in &self.rows {
            let (p, _) = row.leading().expect("echelon row");
            if let Some(c) = v.get(p) {
                let c = c.clone();
                v = v.add_scaled(row, &c.neg());
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert a vector, returning true when the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        match r.leading() {
            None => false,
            Some((pivot, c)) => {
                let r = r.scale(&c.inv().expect("nonzero pivot"));
                // Back-substitute to keep the basis fully reduced.
                for row in &mut self.rows {
                    if let Some(c) = row.get(pivot) {
                        let c = c.clone();
                        *row = row.add_scaled(&r, &c.neg());
                    }
                }
                let at = self
                    .rows
                    .partition_point(|row| row.leading().expect("row").0 < pivot);
                self.rows.insert(at, r);
                true
            }
        }
    }

    /// Coefficients of `v` over the rows when `v` lies in the span.
    pub fn coefficients_of(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let mut coeffs = vec![self.field.zero(); self.rows.len()];
        let mut v = v.clone();
        for (k, row) in self.rows.iter().enumerate() {
            let (p, _) = row.leading().expect("echelon row");
            if let Some(c) = v.get(p) {
                coeffs[k] = c.clone();
                let c = c.clone();
                v = v.add_scaled(row, &c.neg());
            }
        }
        if v.is_zero() {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Basis of the solution space of `rows * x = 0` over `ncols` unknowns.
/// Free variables are taken in ascending column order, so the output is
/// deterministic.
pub fn nullspace(rows: &[SparseVec], ncols: usize, field: Field) -> Vec<SparseVec> {
    let rref = SubspaceBasis::from_vectors(field, rows.iter().cloned());
    let pivots = rref.pivots();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for j in 0..ncols {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut entries = vec![(j, field.one())];
        for (row, p) in rref.rows().iter().zip(pivots.iter()) {
            if let Some(c) = row.get(j) {
                entries.push((*p, c.neg()));
            }
        }
        basis.push(SparseVec::from_entries(entries));
    }
    basis
}
