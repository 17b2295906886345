use std::collections::BTreeMap;

use super::{Simplex, SimplicialComplex, Vertex};

/// Barycentric subdivision together with the simplex each new vertex stands for.
pub(crate) fn subdivide(complex: &SimplicialComplex) -> (SimplicialComplex, Vec<Simplex>) {
    let barycenters: Vec<Simplex> = complex.all_simplices().cloned().collect();
    let index: BTreeMap<&Simplex, Vertex> =
        barycenters.iter().enumerate().map(|(i, s)| (s, i as Vertex)).collect();

    // Maximal chains are the full flags of facets: one per vertex ordering.
    let mut facets = Vec::new();
    for facet in complex.facets() {
        let mut order: Vec<Vertex> = facet.clone();
        for_each_permutation(&mut order, &mut |perm| {
            let mut prefix: Simplex = Vec::with_capacity(perm.len());
            let mut chain: Simplex = Vec::with_capacity(perm.len());
            for &v in perm {
                let at = prefix.binary_search(&v).unwrap_err();
                prefix.insert(at, v);
                chain.push(index[&prefix]);
            }
            facets.push(chain);
        });
    }
    let vertices = 0..barycenters.len() as Vertex;
    let sd = SimplicialComplex::new(vertices, facets).expect("chains of a valid complex");
    (sd, barycenters)
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [Vertex], visit: &mut impl FnMut(&[Vertex])) {
    let n = items.len();
    let mut counters = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            visit(items);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_visits_every_ordering_once() {
        let mut items = vec![1, 2, 3, 4];
        let mut seen = std::collections::BTreeSet::new();
        for_each_permutation(&mut items, &mut |p| {
            assert!(seen.insert(p.to_vec()));
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn barycenters_follow_canonical_order() {
        let tri = SimplicialComplex::from_facets([vec![4, 5, 6]]).unwrap();
        let (_, centers) = subdivide(&tri);
        assert_eq!(centers[0], vec![4]);
        assert_eq!(centers[3], vec![4, 5]);
        assert_eq!(centers[6], vec![4, 5, 6]);
    }
}
