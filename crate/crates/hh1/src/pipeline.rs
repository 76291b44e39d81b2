//! End-to-end pipeline: validate, normalize, certify confluence, enumerate
//! the basis, assemble the complex, compute HH^1 with its Lie structure and
//! the radical-preserving subalgebra, and expose everything for reports.

use crate::algebra::{ExtStats, Presentation};
use crate::cohomology::{
    grading, hh1_rad, sigma_sets, Complex, GradedDecomposition, Hh1Space, RadSubspace, SigmaSet,
};
use crate::error::{Error, Result};
use crate::lie::{self, LieData, SeriesReport};
use crate::rewriting::{truncate, Basis, ReductionSystem};

/// Everything computed for one presentation.
pub struct Analysis {
    pub pres: Presentation,
    pub rs: ReductionSystem,
    pub basis: Basis,
    pub complex: Complex,
    pub hh1: Hh1Space,
    pub rad: RadSubspace,
    pub sigma: Vec<SigmaSet>,
    pub graded: Option<GradedDecomposition>,
    pub lie: LieData,
    pub series: SeriesReport,
    pub rad_lie: LieData,
    pub rad_series: SeriesReport,
    pub ext: ExtStats,
}

impl Analysis {
    /// Run the full pipeline. The input is validated, the reduction system
    /// must be confluent, and the algebra must be finite dimensional. When
    /// the presentation carries a truncation level, A/J(A)^n is analyzed.
    pub fn build(pres: Presentation) -> Result<Analysis> {
        let mut pres = pres.validated()?;
        if let Some(n) = pres.truncate_level {
            let rs = ReductionSystem::normalize(&pres)?;
            pres = truncate(&pres, &rs, n)?;
        }
        let rs = ReductionSystem::normalize(&pres)?;
        rs.certify_confluent()?;
        let fin = rs.finiteness();
        if !fin.finite {
            let witness = fin
                .cycle_witness
                .map(|w| {
                    w.iter()
                        .map(|a| pres.quiver.arrow(*a).name.clone())
                        .collect::<Vec<_>>()
                        .join("*")
                })
                .unwrap_or_default();
            return Err(Error::InfiniteDimensional(witness));
        }
        let basis = rs.enumerate_basis(fin.max_length.unwrap_or(0), true)?;
        let complex = Complex::build(&pres, &rs, &basis)?;
        let hh1 = Hh1Space::build(&complex, &pres)?;
        let rad = hh1_rad(&complex, &pres, &hh1)?;
        let sigma = sigma_sets(&complex, &hh1.kernel);
        let graded = match grading(&pres, &complex, &hh1) {
            Ok(g) => Some(g),
            Err(Error::NotGraded(_)) => None,
            Err(e) => return Err(e),
        };
        let lie = lie::structure_constants(&hh1, &complex, &rs, pres.field)?;
        let series = lie::series_report(&lie);
        let rad_lie = lie::structure_constants_of(&rad.reps, &hh1, &complex, &rs, pres.field)?;
        let rad_series = lie::series_report(&rad_lie);
        let ext = pres.ext_quiver_stats();
        Ok(Analysis {
            pres,
            rs,
            basis,
            complex,
            hh1,
            rad,
            sigma,
            graded,
            lie,
            series,
            rad_lie,
            rad_series,
            ext,
        })
    }

    /// Analysis of A/J(A)^n with the same field and quiver.
    pub fn truncated(&self, n: u32) -> Result<Analysis> {
        let t = truncate(&self.pres, &self.rs, n)?;
        Analysis::build(t)
    }

    pub fn dim_algebra(&self) -> usize {
        self.basis.dim()
    }

    /// Graded piece dimensions when the presentation is length-homogeneous.
    pub fn graded_dims(&self) -> Option<Vec<usize>> {
        self.graded.as_ref().map(|g| g.piece_dims.clone())
    }

    /// Representative labels for reports.
    pub fn rep_labels(&self) -> Vec<String> {
        self.lie.labels.clone()
    }

    pub fn sigma_display(&self, i: usize) -> Vec<String> {
        self.sigma
            .get(i)
            .map(|s| {
                s.members
                    .iter()
                    .map(|(a, p)| {
                        format!(
                            "{}||{}",
                            self.pres.quiver.arrow(*a).name,
                            self.pres.quiver.path_display(p)
                        )
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Number of coordinates with target length `i` that some coboundary
    /// touches. Sigma sets live on the kernel, so reports note when the
    /// image of delta0 meets the same coordinates.
    pub fn sigma_im_overlap(&self, i: usize) -> usize {
        let mut touched = std::collections::BTreeSet::new();
        for col in self.hh1.image.rows() {
            for k in col.support() {
                if self.complex.c1.coords[k].1.len() == i {
                    touched.insert(k);
                }
            }
        }
        touched.len()
    }

    /// Check the graded bracket degree bound on all representative pairs:
    /// a bracket of pieces with target lengths i and j lands in target
    /// length i + j - 1.
    pub fn check_graded_bracket_bound(&self) -> Result<()> {
        let g = match &self.graded {
            Some(g) => g,
            None => return Ok(()),
        };
        for (i, reps_i) in g.reps.iter().enumerate() {
            for (j, reps_j) in g.reps.iter().enumerate() {
                for u in reps_i {
                    for v in reps_j {
                        let pu = self.complex.vec_to_pair(u);
                        let pv = self.complex.vec_to_pair(v);
                        let br = lie::bracket_cochain(&pu, &pv, &self.rs)?;
                        for (_, p) in br.keys() {
                            if p.len() + 1 != i + j {
                                return Err(Error::Internal(format!(
                                    "graded bracket bound fails: [{i},{j}] hit target length {}",
                                    p.len()
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
