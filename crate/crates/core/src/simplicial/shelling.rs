use std::collections::HashSet;

use super::complex::SimplicialComplex;
use super::homology::reduced_homology;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::vertex_set::VertexSet;

/// Decides non-pure shellability in the sense of Björner and Wachs.
///
/// Returns a shelling order when one exists. An order `F_1, .., F_m` is a
/// shelling if for every `k >= 2` the complex `<F_k> ∩ <F_1, .., F_{k-1}>` is
/// pure of dimension `dim F_k - 1`. Only orders of weakly decreasing
/// dimension are explored (every shellable complex has such a shelling), and
/// failed prefixes are memoized as sets of used facets.
pub fn is_shellable(complex: &SimplicialComplex) -> Result<Option<Vec<VertexSet>>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets = complex.facets();
    if facets.len() > 64 {
        return Err(Error::Unsupported(format!(
            "shellability search limited to 64 facets, got {}",
            facets.len()
        )));
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut failed = HashSet::new();
    if search(facets, 0, &mut order, &mut failed) {
        Ok(Some(order.iter().map(|&k| facets[k]).collect()))
    } else {
        Ok(None)
    }
}

/// Whether `facet` may follow the facets in `placed`.
pub fn extends_shelling(placed: &[VertexSet], facet: VertexSet) -> bool {
    if placed.is_empty() {
        return true;
    }
    let meets: Vec<VertexSet> = placed.iter().map(|g| g.intersection(facet)).collect();
    // maximal faces of <F> ∩ <placed> must all have size |F| - 1
    meets
        .iter()
        .filter(|m| !meets.iter().any(|o| m.len() < o.len() && m.is_subset(*o)))
        .all(|m| m.len() + 1 == facet.len())
}

/// Checks a proposed shelling order of all facets of `complex`.
pub fn is_shelling_order(complex: &SimplicialComplex, order: &[VertexSet]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != complex.facets() {
        return false;
    }
    (0..order.len()).all(|k| extends_shelling(&order[..k], order[k]))
}

fn search(
    facets: &[VertexSet],
    used: u64,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if failed.contains(&used) {
        return false;
    }
    let top = (0..facets.len())
        .filter(|k| used >> k & 1 == 0)
        .map(|k| facets[k].len())
        .max()
        .expect("unused facet remains");
    let placed: Vec<VertexSet> = order.iter().map(|&k| facets[k]).collect();
    for k in 0..facets.len() {
        if used >> k & 1 == 1 || facets[k].len() != top {
            continue;
        }
        if !extends_shelling(&placed, facets[k]) {
            continue;
        }
        order.push(k);
        if search(facets, used | 1 << k, order, failed) {
            return true;
        }
        order.pop();
    }
    failed.insert(used);
    false
}

/// Reisner's criterion: `Δ` is Cohen-Macaulay over `field` iff for every face
/// `F` (including `∅`) the link has `H̃_j(lk F) = 0` for all `j < dim lk F`.
pub fn reisner_cm(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in complex.faces() {
        let link = complex.link(face)?;
        let dim = link.dimension().expect("link of a face is non-void");
        let h = reduced_homology(&link, field);
        if h.nonzero().any(|(j, _)| j < dim) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().map(|i| i - 1).collect()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets.iter().map(|f| set(f))).unwrap()
    }

    /// Tries every permutation of the facets.
    fn shellable_by_enumeration(d: &SimplicialComplex) -> bool {
        fn permute(rest: &mut Vec<VertexSet>, placed: &mut Vec<VertexSet>) -> bool {
            if rest.is_empty() {
                return true;
            }
            for k in 0..rest.len() {
                let f = rest.remove(k);
                if extends_shelling(placed, f) {
                    placed.push(f);
                    if permute(rest, placed) {
                        return true;
                    }
                    placed.pop();
                }
                rest.insert(k, f);
            }
            false
        }
        permute(&mut d.facets().to_vec(), &mut Vec::new())
    }

    #[test]
    fn shellability_examples() {
        let single = cx(3, &[&[1, 2, 3]]);
        assert!(is_shellable(&single).unwrap().is_some());
        let path = cx(3, &[&[1, 2], &[2, 3]]);
        let order = is_shellable(&path).unwrap().unwrap();
        assert!(is_shelling_order(&path, &order));
        let disjoint = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(!shellable_by_enumeration(&disjoint));
        assert_eq!(is_shellable(&disjoint).unwrap(), None);
        assert_eq!(
            is_shellable(&SimplicialComplex::void(2)),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn non_pure_examples() {
        // triangle with a dangling edge is shellable; an isolated point after it too
        let d = cx(5, &[&[1, 2, 3], &[3, 4], &[5]]);
        assert!(is_shellable(&d).unwrap().is_some());
        // a triangle and a disjoint edge
        let e = cx(5, &[&[1, 2, 3], &[4, 5]]);
        assert!(is_shellable(&e).unwrap().is_none());
        assert!(!shellable_by_enumeration(&e));
    }

    #[test]
    fn search_matches_enumeration_on_small_complexes() {
        // every complex on 4 vertices
        let pool: Vec<VertexSet> = VertexSet::full(4)
            .subsets()
            .filter(|s| !s.is_empty())
            .collect();
        for mask in 1u32..(1 << pool.len()) {
            let chosen = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, f)| *f);
            let d = SimplicialComplex::from_faces(4, chosen).unwrap();
            assert_eq!(
                is_shellable(&d).unwrap().is_some(),
                shellable_by_enumeration(&d),
                "{d}"
            );
        }
    }

    #[test]
    fn reisner_examples() {
        assert!(reisner_cm(&cx(3, &[&[1, 2, 3]]), FieldSpec::Rationals).unwrap());
        assert!(!reisner_cm(&cx(4, &[&[1, 2], &[3, 4]]), FieldSpec::Rationals).unwrap());
        assert!(reisner_cm(&cx(3, &[&[1], &[2], &[3]]), FieldSpec::Rationals).unwrap());
        assert!(reisner_cm(&SimplicialComplex::void(1), FieldSpec::Rationals).is_err());
        // non-pure complexes are never Cohen-Macaulay
        assert!(!reisner_cm(&cx(4, &[&[1, 2, 3], &[3, 4]]), FieldSpec::Rationals).unwrap());
    }
}
