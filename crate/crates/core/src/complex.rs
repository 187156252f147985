//! Finite simplicial complexes stored by their facets.
//!
//! A subset of the vertex set is a face iff it is contained in some facet;
//! faces are never materialized. Vertex sets are kept as `u64` bit masks
//! internally, so complexes are limited to 64 vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard limit imposed by the bit-mask representation.
pub const MAX_VERTICES: usize = 64;

/// Default ceiling for [`SimplicialComplex::minimal_nonfaces`].
pub const DEFAULT_MAX_VERTICES: usize = 24;

/// A sorted, duplicate-free set of vertex indices.
///
/// Ordered canonically: by cardinality, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSubset(v)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        VertexSubset(mask_members(mask).collect())
    }

    pub(crate) fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }
}

impl Ord for VertexSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl<const K: usize> From<[usize; K]> for VertexSubset {
    fn from(a: [usize; K]) -> Self {
        VertexSubset::new(a)
    }
}

pub(crate) fn mask_members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask & (1u64 << i) != 0)
}

/// On-disk form: `{"vertices": <int>, "facets": [[int, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

/// A simplicial complex on vertices `0..num_vertices`, given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<VertexSubset>,
    masks: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from a list of faces. The list need not be an
    /// antichain: faces contained in other faces are dropped. Every vertex
    /// must occur in some face.
    pub fn new(num_vertices: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::domain("complex must have at least one vertex"));
        }
        if num_vertices > MAX_VERTICES {
            return Err(Error::resource(format!(
                "complexes are limited to {MAX_VERTICES} vertices, got {num_vertices}"
            )));
        }
        let mut masks = Vec::with_capacity(faces.len());
        for (index, face) in faces.iter().enumerate() {
            if let Some(&v) = face.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::InvalidFacet {
                    index,
                    reason: format!("vertex {v} out of range 0..{num_vertices}"),
                });
            }
            masks.push(VertexSubset::new(face.iter().copied()).to_mask());
        }

        let covered = masks.iter().fold(0u64, |acc, m| acc | m);
        if let Some(v) = (0..num_vertices).find(|&v| covered & (1u64 << v) == 0) {
            return Err(Error::domain(format!(
                "vertex {v} does not occur in any facet"
            )));
        }

        // keep only inclusion-maximal faces
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && m & o == m))
            .collect();

        let mut facets: Vec<VertexSubset> =
            maximal.into_iter().map(VertexSubset::from_mask).collect();
        facets.sort();
        let masks = facets.iter().map(VertexSubset::to_mask).collect();
        Ok(SimplicialComplex {
            num_vertices,
            facets,
            masks,
        })
    }

    pub fn from_file(file: ComplexFile) -> Result<Self> {
        Self::new(file.vertices, file.facets)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text)?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            vertices: self.num_vertices,
            facets: self.facets.iter().map(|f| f.members().to_vec()).collect(),
        }
    }

    /// Boundary complex of the bipyramid over an `n`-gon.
    ///
    /// Vertex 0 and vertex `n + 1` are the apexes, `1..=n` the rim in cyclic
    /// order. Facets are the `2n` triangles joining an apex to a rim edge.
    pub fn bipyramid(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain("bipyramid requires n ≥ 3"));
        }
        let top = n + 1;
        let mut faces = Vec::with_capacity(2 * n);
        for apex in [0, top] {
            for i in 1..=n {
                faces.push(vec![apex, i, rim_successor(i, n)]);
            }
        }
        Self::new(n + 2, faces)
    }

    /// The bipyramidal graph: rim cycle, all apex-rim edges and the
    /// apex-apex edge, as a one-dimensional complex.
    pub fn bipyramidal_graph(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain("bipyramidal graph requires n ≥ 3"));
        }
        let top = n + 1;
        let mut edges = Vec::with_capacity(3 * n + 1);
        for i in 1..=n {
            edges.push(vec![0, i]);
            edges.push(vec![top, i]);
            edges.push(vec![i, rim_successor(i, n)]);
        }
        edges.push(vec![0, top]);
        Self::new(n + 2, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[VertexSubset] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets
            .iter()
            .map(VertexSubset::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn is_face(&self, s: &VertexSubset) -> Result<bool> {
        if let Some(&v) = s.members().iter().find(|&&v| v >= self.num_vertices) {
            return Err(Error::domain(format!(
                "vertex {v} out of range 0..{}",
                self.num_vertices
            )));
        }
        Ok(self.is_face_mask(s.to_mask()))
    }

    fn is_face_mask(&self, mask: u64) -> bool {
        self.masks.iter().any(|&f| mask & f == mask)
    }

    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSubset>> {
        self.minimal_nonfaces_within(DEFAULT_MAX_VERTICES)
    }

    /// Minimal non-faces in canonical order, refusing complexes with more
    /// than `max_vertices` vertices.
    pub fn minimal_nonfaces_within(&self, max_vertices: usize) -> Result<Vec<VertexSubset>> {
        if self.num_vertices > max_vertices {
            return Err(Error::resource(format!(
                "minimal non-face enumeration limited to {max_vertices} vertices, complex has {}",
                self.num_vertices
            )));
        }
        let n = self.num_vertices;
        let max_size = (self.dimension() + 2).min(n);
        let mut found: Vec<u64> = Vec::new();
        for k in 1..=max_size {
            let mut level = Vec::new();
            for mask in KSubsets::new(n, k) {
                // Any non-face avoiding every smaller minimal non-face has all
                // its proper subsets as faces.
                if found.iter().any(|&f| f & !mask == 0) {
                    continue;
                }
                if !self.is_face_mask(mask) {
                    level.push(mask);
                }
            }
            found.extend(level);
        }
        let mut out: Vec<VertexSubset> = found.into_iter().map(VertexSubset::from_mask).collect();
        out.sort();
        Ok(out)
    }
}

fn rim_successor(i: usize, n: usize) -> usize {
    if i == n {
        1
    } else {
        i + 1
    }
}

/// All `k`-element subsets of `0..n` as bit masks, in increasing numeric order.
struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    fn new(n: usize, k: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES && k <= n);
        let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let first = if k == 0 {
            0
        } else if k == 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        };
        KSubsets {
            next: Some(first),
            limit,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        // Gosper's hack
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) if r != 0 => {
                    let nxt = (((r ^ cur) >> 2) / c) | r;
                    (nxt & !self.limit == 0).then_some(nxt)
                }
                _ => None,
            }
        };
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(v: &[&[usize]]) -> Vec<VertexSubset> {
        v.iter()
            .map(|s| VertexSubset::new(s.iter().copied()))
            .collect()
    }

    /// Independent enumeration: every subset, checked against the definition.
    fn brute_minimal_nonfaces(c: &SimplicialComplex) -> Vec<VertexSubset> {
        let n = c.num_vertices();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let s = VertexSubset::from_mask(mask);
            if c.is_face(&s).unwrap() {
                continue;
            }
            let all_sub_faces = s.members().iter().all(|&drop| {
                let t = VertexSubset::new(s.members().iter().copied().filter(|&v| v != drop));
                c.is_face(&t).unwrap()
            });
            if all_sub_faces {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(KSubsets::new(5, 2).count(), 10);
        assert_eq!(KSubsets::new(6, 0).count(), 1);
        assert_eq!(KSubsets::new(6, 6).count(), 1);
        assert_eq!(KSubsets::new(64, 1).count(), 64);
    }

    #[test]
    fn bipyramid_four() {
        let b4 = SimplicialComplex::bipyramid(4).unwrap();
        assert_eq!(b4.num_vertices(), 6);
        assert_eq!(b4.facets().len(), 8);
        assert_eq!(
            b4.minimal_nonfaces().unwrap(),
            subsets(&[&[0, 5], &[1, 3], &[2, 4]])
        );
    }

    #[test]
    fn bipyramid_three_facets() {
        let b3 = SimplicialComplex::bipyramid(3).unwrap();
        let expected = subsets(&[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 1],
            &[4, 1, 2],
            &[4, 2, 3],
            &[4, 3, 1],
        ]);
        let mut expected = expected;
        expected.sort();
        assert_eq!(b3.facets(), expected.as_slice());
        // The triangle-boundary complex also leaves the rim triangle empty.
        assert_eq!(
            b3.minimal_nonfaces().unwrap(),
            subsets(&[&[0, 4], &[1, 2, 3]])
        );
    }

    #[test]
    fn bipyramid_five_matches_brute_force() {
        let b5 = SimplicialComplex::bipyramid(5).unwrap();
        assert_eq!(b5.facets().len(), 10);
        let mnf = b5.minimal_nonfaces().unwrap();
        assert_eq!(mnf, brute_minimal_nonfaces(&b5));
        assert_eq!(
            mnf,
            subsets(&[&[0, 6], &[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]])
        );
    }

    #[test]
    fn bipyramid_rejects_small_n() {
        let err = SimplicialComplex::bipyramid(2).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m == "bipyramid requires n ≥ 3"));
        assert!(SimplicialComplex::bipyramidal_graph(2).is_err());
    }

    #[test]
    fn graph_three_is_k5() {
        let d3 = SimplicialComplex::bipyramidal_graph(3).unwrap();
        assert_eq!(d3.facets().len(), 10);
        let mnf = d3.minimal_nonfaces().unwrap();
        assert_eq!(mnf.len(), 10);
        assert!(mnf.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn graph_four() {
        let d4 = SimplicialComplex::bipyramidal_graph(4).unwrap();
        assert_eq!(d4.facets().len(), 13);
        assert!(d4.is_face(&VertexSubset::from([0, 5])).unwrap());
        let mnf = d4.minimal_nonfaces().unwrap();
        assert_eq!(mnf, brute_minimal_nonfaces(&d4));
        // apex-apex edge makes {0,5,i} a triangle of edges, hence a minimal non-face
        let mut expected = subsets(&[
            &[1, 3],
            &[2, 4],
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 1],
            &[1, 2, 5],
            &[2, 3, 5],
            &[3, 4, 5],
            &[4, 1, 5],
            &[0, 1, 5],
            &[0, 2, 5],
            &[0, 3, 5],
            &[0, 4, 5],
        ]);
        expected.sort();
        assert_eq!(mnf, expected);
    }

    #[test]
    fn face_queries() {
        let b4 = SimplicialComplex::bipyramid(4).unwrap();
        assert!(!b4.is_face(&VertexSubset::from([1, 3])).unwrap());
        assert!(b4.is_face(&VertexSubset::default()).unwrap());
        assert!(b4.is_face(&VertexSubset::from([0, 1, 2])).unwrap());
        assert!(!b4.is_face(&VertexSubset::from([0, 5])).unwrap());
        assert!(matches!(
            b4.is_face(&VertexSubset::from([6])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn full_simplex_has_no_nonfaces() {
        let c = SimplicialComplex::new(2, vec![vec![0, 1]]).unwrap();
        assert!(c.minimal_nonfaces().unwrap().is_empty());
    }

    #[test]
    fn construction_maximalizes() {
        let c = SimplicialComplex::new(3, vec![vec![0], vec![0, 1], vec![2], vec![1, 0]]).unwrap();
        assert_eq!(c.facets(), subsets(&[&[2], &[0, 1]]).as_slice());
    }

    #[test]
    fn construction_errors() {
        match SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 3]]) {
            Err(Error::InvalidFacet { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            SimplicialComplex::new(3, vec![vec![0, 1]]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            SimplicialComplex::new(0, vec![]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let c = SimplicialComplex::from_json(r#"{"vertices": 3, "facets": [[0,1],[1,2],[2,0]]}"#)
            .unwrap();
        assert_eq!(c.minimal_nonfaces().unwrap(), subsets(&[&[0, 1, 2]]));
        let again =
            SimplicialComplex::from_json(&serde_json::to_string(&c.to_file()).unwrap()).unwrap();
        assert_eq!(again, c);

        match SimplicialComplex::from_json("{\"vertices\": 3,\n \"facets\": [[0,1],]}") {
            Err(Error::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn vertex_ceiling() {
        let c = SimplicialComplex::bipyramidal_graph(30).unwrap();
        assert!(matches!(c.minimal_nonfaces(), Err(Error::Resource(_))));
        assert!(c.minimal_nonfaces_within(40).is_ok());
    }
}
