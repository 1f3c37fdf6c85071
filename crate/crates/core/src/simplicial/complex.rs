use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VARS};

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// The void complex has no faces at all; the empty complex `{∅}` has the
/// single facet `∅`. They are distinct values.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Complex generated by the given faces; non-maximal ones are dropped.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: n,
                max: MAX_VARS,
            });
        }
        let all = VertexSet::full(n);
        let unique: BTreeSet<VertexSet> = faces.into_iter().collect();
        if let Some(bad) = unique.iter().find(|f| !f.is_subset(all)) {
            return Err(Error::InvalidConfiguration(format!(
                "face {bad} is not contained in [{n}]"
            )));
        }
        let mut by_size: Vec<VertexSet> = unique.into_iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in by_size {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Ok(SimplicialComplex {
            vertex_count: n,
            facets,
        })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            vertex_count: n,
            facets: Vec::new(),
        }
    }

    /// `{∅}`.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            vertex_count: n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `face`.
    pub fn simplex(n: usize, face: VertexSet) -> Self {
        SimplicialComplex {
            vertex_count: n,
            facets: vec![face],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces, including `∅` for a non-void complex, sorted by size.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            set.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = set.into_iter().collect();
        faces.sort_by_key(|f| (f.len(), *f));
        faces
    }

    /// Upper bound on the number of faces, cheap to evaluate.
    pub(crate) fn face_estimate(&self) -> u128 {
        self.facets.iter().map(|f| 1u128 << f.len()).sum()
    }

    /// `lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.to_string()));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face));
        SimplicialComplex::from_faces(self.vertex_count, facets)
    }

    /// Faces contained in `w`.
    pub fn restriction(&self, w: VertexSet) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        let faces = self.facets.iter().map(|f| f.intersection(w));
        SimplicialComplex::from_faces(self.vertex_count, faces).expect("subsets of [n]")
    }

    /// Minimal non-faces, i.e. the supports of the generators of `I_Δ`.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        self.to_stanley_reisner()
            .generators()
            .iter()
            .map(Monomial::support)
            .collect()
    }

    /// `Δ^∨ = { F ⊆ [n] : [n] \ F ∉ Δ }`; its facets are the complements of
    /// the minimal non-faces of `Δ`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = VertexSet::full(self.vertex_count);
        let faces = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| all.difference(s));
        SimplicialComplex::from_faces(self.vertex_count, faces).expect("subsets of [n]")
    }

    /// The Stanley-Reisner complex of a squarefree ideal: facets are the
    /// complements of its minimal primes.
    pub fn from_stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.ambient();
        if ideal.is_unit() {
            return Ok(SimplicialComplex::void(n));
        }
        if ideal.is_zero() {
            return Ok(SimplicialComplex::simplex(n, VertexSet::full(n)));
        }
        let all = VertexSet::full(n);
        let facets = ideal
            .minimal_primes()?
            .into_iter()
            .map(|p| all.difference(p));
        SimplicialComplex::from_faces(n, facets)
    }

    /// `I_Δ = ∩_{F facet} P_{[n] \ F}`, the ideal of non-faces.
    pub fn to_stanley_reisner(&self) -> MonomialIdeal {
        let n = self.vertex_count;
        let all = VertexSet::full(n);
        let primes: Vec<MonomialIdeal> = self
            .facets
            .iter()
            .map(|f| MonomialIdeal::prime(n, all.difference(*f)))
            .collect();
        MonomialIdeal::intersect_all(n, primes.iter()).expect("same ambient")
    }

    /// Parses `n; {1,2},{2,3}`. `n;` alone is the void complex and `{}` is
    /// the empty face.
    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let (n, offset, body) = crate::algebra::split_header(text)?;
        let mut faces = Vec::new();
        let chars: Vec<(usize, char)> = body
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + offset, c))
            .collect();
        let end = offset + body.len();
        let perr = |position: usize, message: String| Error::Parse { position, message };
        let mut pos = 0;
        while pos < chars.len() {
            let (at, c) = chars[pos];
            if c != '{' {
                return Err(perr(at, format!("expected `{{`, found `{c}`")));
            }
            pos += 1;
            let mut face = VertexSet::EMPTY;
            let mut expect_number = false;
            loop {
                let &(at, c) = chars
                    .get(pos)
                    .ok_or_else(|| perr(end, "unterminated face".into()))?;
                if c == '}' && !expect_number {
                    pos += 1;
                    break;
                }
                let start = pos;
                let mut value: usize = 0;
                while let Some(&(_, d)) = chars.get(pos) {
                    let Some(d) = d.to_digit(10) else { break };
                    value = value.saturating_mul(10).saturating_add(d as usize);
                    pos += 1;
                }
                if pos == start {
                    return Err(perr(at, format!("expected a vertex, found `{c}`")));
                }
                if value == 0 || value > n {
                    return Err(perr(at, format!("vertex {value} out of range 1..{n}")));
                }
                face.insert(value - 1);
                match chars.get(pos) {
                    Some(&(_, ',')) => {
                        pos += 1;
                        expect_number = true;
                    }
                    Some(&(_, '}')) => expect_number = false,
                    Some(&(at, c)) => return Err(perr(at, format!("unexpected `{c}`"))),
                    None => return Err(perr(end, "unterminated face".into())),
                }
            }
            faces.push(face);
            match chars.get(pos) {
                None => break,
                Some(&(_, ',')) => {
                    pos += 1;
                    if pos == chars.len() {
                        return Err(perr(end, "trailing comma".into()));
                    }
                }
                Some(&(at, c)) => return Err(perr(at, format!("unexpected `{c}`"))),
            }
        }
        SimplicialComplex::from_faces(n, faces)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.vertex_count)?;
        for (k, facet) in self.facets.iter().enumerate() {
            let sep = if k == 0 { " " } else { "," };
            write!(f, "{sep}{facet}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The degree complex `Δ_a(I)`.
///
/// Its faces are the sets `L \ G_a` with `G_a ⊆ L ⊆ [n]` such that every
/// generator `u` of `I` has some `i ∉ L` with `nu_i(u) > a_i`, where
/// `G_a = { i : a_i < 0 }`.
///
/// This is the membership condition of the degree-complex formula for local
/// cohomology. Any integer vector is accepted; the complex only depends on the
/// clamp `min(max(a_i, -1), t_i - 1)` of `a` (see the tests).
pub fn delta_a(ideal: &MonomialIdeal, a: &[i64]) -> Result<SimplicialComplex> {
    let n = ideal.ambient();
    if a.len() != n {
        return Err(Error::AmbientMismatch {
            left: n,
            right: a.len(),
        });
    }
    let negative: VertexSet = (0..n).filter(|&i| a[i] < 0).collect();
    // L must avoid containing S_u = { i : nu_i(u) > a_i } for each generator.
    let forbidden: Vec<VertexSet> = ideal
        .generators()
        .iter()
        .map(|u| {
            (0..n)
                .filter(|&i| i64::from(u.exponent(i)) > a[i])
                .collect()
        })
        .collect();
    let free = VertexSet::full(n).difference(negative);
    let faces: Vec<VertexSet> = free
        .subsets()
        .filter(|rest| {
            let l = rest.union(negative);
            forbidden.iter().all(|s| !s.is_subset(l))
        })
        .collect();
    SimplicialComplex::from_faces(n, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ideal;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|i| i - 1).collect()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets.iter().map(|f| set(f))).unwrap()
    }

    #[test]
    fn stanley_reisner_examples() {
        let two_points =
            SimplicialComplex::from_stanley_reisner(&parse_ideal("2; x1*x2").unwrap()).unwrap();
        assert_eq!(two_points, cx(2, &[&[1], &[2]]));
        let triangle = parse_ideal("3; x1*x2, x1*x3, x2*x3").unwrap();
        let points = SimplicialComplex::from_stanley_reisner(&triangle).unwrap();
        assert_eq!(points, cx(3, &[&[1], &[2], &[3]]));
        // non-face enumeration: I is generated by the minimal non-faces
        let nonfaces: Vec<VertexSet> = VertexSet::full(3)
            .subsets()
            .filter(|s| !points.contains_face(*s))
            .filter(|s| s.iter().all(|i| points.contains_face(s.without(i))))
            .collect();
        assert_eq!(nonfaces.len(), 3);
        assert_eq!(points.to_stanley_reisner(), triangle);
        let zero = SimplicialComplex::from_stanley_reisner(&MonomialIdeal::zero(2)).unwrap();
        assert_eq!(zero, cx(2, &[&[1, 2]]));
        assert!(SimplicialComplex::from_stanley_reisner(&parse_ideal("2; x1^2").unwrap()).is_err());
    }

    #[test]
    fn void_and_empty_are_distinct() {
        assert_ne!(SimplicialComplex::void(2), SimplicialComplex::empty(2));
        assert_eq!(SimplicialComplex::void(2).dimension(), None);
        assert_eq!(SimplicialComplex::empty(2).dimension(), Some(-1));
        assert!(SimplicialComplex::void(2).to_stanley_reisner().is_unit());
        assert_eq!(
            SimplicialComplex::empty(2).to_stanley_reisner(),
            parse_ideal("2; x1, x2").unwrap()
        );
    }

    #[test]
    fn link_restriction_dual() {
        let hollow = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(hollow.link(set(&[1])).unwrap(), cx(3, &[&[2], &[3]]));
        assert!(hollow.link(set(&[1, 2, 3])).is_err());
        let simplex = cx(4, &[&[1, 2, 3, 4]]);
        assert_eq!(simplex.restriction(set(&[1, 3])), cx(4, &[&[1, 3]]));
        assert_eq!(
            SimplicialComplex::void(3).alexander_dual(),
            SimplicialComplex::simplex(3, VertexSet::full(3))
        );
        assert_eq!(simplex.alexander_dual(), SimplicialComplex::void(4));
        assert_eq!(hollow.alexander_dual(), SimplicialComplex::empty(3));
        let points = cx(3, &[&[1], &[2], &[3]]);
        assert_eq!(points.alexander_dual(), points);
        let random = cx(5, &[&[1, 2, 3], &[3, 4], &[2, 5]]);
        assert_eq!(random.alexander_dual().alexander_dual(), random);
    }

    #[test]
    fn dual_matches_definition() {
        let d = cx(4, &[&[1, 2], &[2, 3, 4], &[1, 4]]);
        let all = VertexSet::full(4);
        let by_definition: Vec<VertexSet> = all
            .subsets()
            .filter(|f| !d.contains_face(all.difference(*f)))
            .collect();
        let dual = d.alexander_dual();
        for f in all.subsets() {
            assert_eq!(dual.contains_face(f), by_definition.contains(&f), "{f}");
        }
    }

    #[test]
    fn delta_a_examples() {
        let sq = parse_ideal("1; x1^2").unwrap();
        assert_eq!(delta_a(&sq, &[0]).unwrap(), SimplicialComplex::empty(1));
        assert_eq!(delta_a(&sq, &[-1]).unwrap(), SimplicialComplex::void(1));
        let edge = parse_ideal("2; x1*x2").unwrap();
        assert_eq!(delta_a(&edge, &[0, 0]).unwrap(), cx(2, &[&[1], &[2]]));
        // G_a = {1}: faces L \ {1}, L ⊇ {1}; L = {1} qualifies via i = 2
        assert_eq!(
            delta_a(&edge, &[-3, 0]).unwrap(),
            SimplicialComplex::empty(2)
        );
    }

    #[test]
    fn parse_and_print_complexes() {
        let d = SimplicialComplex::parse("4; {1,2},{2,3}, {4}").unwrap();
        assert_eq!(d, cx(4, &[&[1, 2], &[2, 3], &[4]]));
        assert_eq!(SimplicialComplex::parse(&d.to_string()).unwrap(), d);
        assert_eq!(
            SimplicialComplex::parse("3;").unwrap(),
            SimplicialComplex::void(3)
        );
        assert_eq!(
            SimplicialComplex::parse("3; {}").unwrap(),
            SimplicialComplex::empty(3)
        );
        assert!(SimplicialComplex::parse("3; {1,4}").is_err());
        assert!(SimplicialComplex::parse("3; {1,}").is_err());
        assert!(SimplicialComplex::parse("3; {1},").is_err());
        assert!(SimplicialComplex::parse("3; {1").is_err());
    }
}
