//! Reduced simplicial homology over a field via ranks of boundary matrices
//! of the augmented chain complex.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::linalg::rank;
use crate::vertex_set::VertexSet;

/// `dim_K H̃_j(Δ; K)` for `j = -1, .., dim Δ`.
///
/// Serializes as a JSON array whose first entry is `j = -1`. The void
/// complex has the empty profile.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        HomologyProfile { dims }
    }

    /// `dim H̃_j`, zero outside the stored range.
    pub fn get(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(j, dim H̃_j)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    /// `Σ_j (-1)^j dim H̃_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(j, d)| {
                if j.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

/// Reduced homology of `Δ` over `field`.
///
/// When `Δ` has few facets compared to its number of faces, the computation
/// runs on the nerve of the facet cover instead, which is homotopy
/// equivalent; [`reduced_homology_direct`] always uses the faces of `Δ`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let Some(dim) = complex.dimension() else {
        return HomologyProfile::default();
    };
    let m = complex.facets().len();
    if m < 24 && (1u128 << m) * 4 < complex.face_estimate() {
        let nerve = nerve(complex);
        let mut dims = reduced_homology_direct(&nerve, field).dims;
        dims.resize((dim + 2) as usize, 0);
        return HomologyProfile { dims };
    }
    reduced_homology_direct(complex, field)
}

/// Nerve of the cover of `Δ` by its facets: a set of facets spans a face
/// iff the facets share a vertex.
fn nerve(complex: &SimplicialComplex) -> SimplicialComplex {
    let facets = complex.facets();
    let m = facets.len();
    if facets.iter().any(|f| f.is_empty()) {
        return SimplicialComplex::empty(1);
    }
    let mut faces = Vec::new();
    grow_nerve(facets, VertexSet::EMPTY, None, 0, &mut faces);
    SimplicialComplex::from_faces(m, faces).expect("nerve vertices are facet indices")
}

fn grow_nerve(
    facets: &[VertexSet],
    chosen: VertexSet,
    common: Option<VertexSet>,
    next: usize,
    out: &mut Vec<VertexSet>,
) {
    let mut extended = false;
    for k in next..facets.len() {
        let meet = common.map_or(facets[k], |c| c.intersection(facets[k]));
        if !meet.is_empty() {
            extended = true;
            grow_nerve(facets, chosen.with(k), Some(meet), k + 1, out);
        }
    }
    if !extended {
        out.push(chosen);
    }
}

/// Reduced homology computed from the boundary matrices of all faces.
pub fn reduced_homology_direct(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let Some(dim) = complex.dimension() else {
        return HomologyProfile::default();
    };
    let faces = complex.faces();
    let levels = group_by_size(&faces, (dim + 2) as usize);
    relative_profile(&levels, &|_| false, field)
}

/// Faces grouped by cardinality `0..levels`.
fn group_by_size(faces: &[VertexSet], levels: usize) -> Vec<Vec<VertexSet>> {
    let mut out = vec![Vec::new(); levels];
    for f in faces {
        out[f.len()].push(*f);
    }
    out
}

/// Homology of the augmented chain complex of a family of faces closed under
/// taking subsets, modulo the faces satisfying `excluded` (also closed under
/// subsets). Entry `k` of the result is the homology at the faces of size
/// `k`, i.e. `H̃_{k-1}`.
fn relative_profile(
    levels: &[Vec<VertexSet>],
    excluded: &dyn Fn(VertexSet) -> bool,
    field: FieldSpec,
) -> HomologyProfile {
    let kept: Vec<Vec<VertexSet>> = levels
        .iter()
        .map(|l| l.iter().copied().filter(|f| !excluded(*f)).collect())
        .collect();
    let index: Vec<HashMap<VertexSet, usize>> = kept
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; kept.len() + 1];
    for k in 1..kept.len() {
        if kept[k].is_empty() || kept[k - 1].is_empty() {
            continue;
        }
        let mut matrix = vec![vec![0i64; kept[k].len()]; kept[k - 1].len()];
        for (col, face) in kept[k].iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                if let Some(&row) = index[k - 1].get(&face.without(v)) {
                    matrix[row][col] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        ranks[k] = rank(&matrix, field);
    }
    let dims = (0..kept.len())
        .map(|k| kept[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    HomologyProfile { dims }
}

/// Relative homology `H̃(A, B)` of a pair of complexes given by face
/// predicates on the subsets of `ground`. Entry `k` is the homology at
/// faces of size `k`.
pub(crate) fn relative_homology_by_size(
    ground: VertexSet,
    in_a: &dyn Fn(VertexSet) -> bool,
    in_b: &dyn Fn(VertexSet) -> bool,
    field: FieldSpec,
) -> Vec<usize> {
    let faces: Vec<VertexSet> = ground.subsets().filter(|f| in_a(*f)).collect();
    let levels = group_by_size(&faces, ground.len() + 1);
    relative_profile(&levels, in_b, field).dims
}
