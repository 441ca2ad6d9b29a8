use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// An oriented simplex: strictly increasing vertex indices into a label table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Wraps vertex indices that are already strictly increasing.
    pub fn new(vertices: Vec<usize>) -> Result<Self, ValidationError> {
        if vertices.is_empty() {
            return Err(ValidationError::Empty);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ValidationError::Ordering { simplex: vertices });
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates arbitrary vertex indices.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        assert!(!vertices.is_empty(), "a simplex needs at least one vertex");
        Simplex(vertices)
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th codimension-one face (vertex `i` removed).
    pub fn face(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// Codimension-one faces in index order; empty for a vertex.
    pub fn faces(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| (i, self.face(i)))
    }

    /// Every nonempty subset, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| Simplex((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect()))
            .collect()
    }

    /// Front face `[v_0, ..., v_p]`.
    pub fn front(&self, p: usize) -> Simplex {
        Simplex(self.0[..=p].to_vec())
    }

    /// Back face `[v_{m-q}, ..., v_m]`.
    pub fn back(&self, q: usize) -> Simplex {
        let m = self.dim();
        Simplex(self.0[m - q..].to_vec())
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("empty simplex")]
    Empty,
    #[error("simplex {simplex:?} is not strictly increasing in the vertex order")]
    Ordering { simplex: Vec<usize> },
    #[error("vertex index {vertex} out of range for {count} labels")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("simplex {simplex:?} listed more than once")]
    Duplicate { simplex: Vec<usize> },
    #[error("face {face:?} of simplex {simplex:?} is missing")]
    FaceClosure { simplex: Vec<usize>, face: Vec<usize> },
    #[error("simplex {simplex:?} of the subcomplex is not a simplex of the total complex")]
    Subcomplex { simplex: Vec<usize> },
    #[error("subcomplex uses a different vertex label table")]
    LabelMismatch,
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
}

/// A finite abstract simplicial complex over an ordered table of vertex labels.
///
/// The label table is the vertex universe; the complex's vertices are its
/// 0-simplices. Subcomplexes share the label table of their ambient complex.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.by_dim == other.by_dim
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("labels", &self.labels)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

fn check_labels(labels: &[String]) -> Result<(), ValidationError> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(ValidationError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl SimplicialComplex {
    /// Builds a complex from an explicit simplex list, checking ordering,
    /// duplicates and closure under faces.
    pub fn new(labels: Vec<String>, simplices: Vec<Vec<usize>>) -> Result<Self, ValidationError> {
        check_labels(&labels)?;
        let mut set = BTreeSet::new();
        for s in simplices {
            if let Some(&v) = s.iter().find(|&&v| v >= labels.len()) {
                return Err(ValidationError::VertexOutOfRange {
                    vertex: v,
                    count: labels.len(),
                });
            }
            let simplex = Simplex::new(s)?;
            if !set.insert(simplex.clone()) {
                return Err(ValidationError::Duplicate { simplex: simplex.0 });
            }
        }
        for s in &set {
            for (_, face) in s.faces() {
                if !set.contains(&face) {
                    return Err(ValidationError::FaceClosure {
                        simplex: s.0.clone(),
                        face: face.0,
                    });
                }
            }
        }
        Ok(Self::from_set(labels, set))
    }

    /// Builds the closure of the given facets. Facet vertex order is irrelevant.
    pub fn from_facets(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self, ValidationError> {
        check_labels(&labels)?;
        let mut set = BTreeSet::new();
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= labels.len()) {
                return Err(ValidationError::VertexOutOfRange {
                    vertex: v,
                    count: labels.len(),
                });
            }
            if f.is_empty() {
                return Err(ValidationError::Empty);
            }
            set.extend(Simplex::from_unsorted(f).all_faces());
        }
        Ok(Self::from_set(labels, set))
    }

    /// Convenience constructor with labels `"0"`, `"1"`, ...
    pub fn from_facets_numbered(vertex_count: usize, facets: &[&[usize]]) -> Self {
        let labels = (0..vertex_count).map(|i| i.to_string()).collect();
        Self::from_facets(labels, facets.iter().map(|f| f.to_vec()).collect()).expect("fixture facets are valid")
    }

    /// The empty complex over a label table.
    pub fn empty(labels: Vec<String>) -> Self {
        Self::from_set(labels, BTreeSet::new())
    }

    pub(crate) fn from_set(labels: Vec<String>, set: BTreeSet<Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in set {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for level in &mut by_dim {
            level.sort();
        }
        let index = by_dim
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        SimplicialComplex { labels, by_dim, index }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.get(s.dim()).is_some_and(|level| level.contains_key(s))
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    /// Vertex indices of the 0-simplices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s.0[0]).collect()
    }

    pub fn is_vertex(&self, v: usize) -> bool {
        self.contains(&Simplex(vec![v]))
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, level)| if k % 2 == 0 { 1 } else { -1 } * level.len() as i64)
            .sum()
    }

    /// Whether every maximal simplex has the top dimension.
    pub fn is_pure(&self) -> bool {
        let Some(top) = self.dim() else {
            return true;
        };
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        for k in (0..top).rev() {
            for s in self.simplices(k + 1) {
                for (_, f) in s.faces() {
                    if let Some(idx) = self.index_of(&f) {
                        covered.insert(&self.by_dim[k][idx]);
                    }
                }
            }
        }
        (0..top).all(|k| self.simplices(k).iter().all(|s| covered.contains(s)))
    }

    /// The subcomplex of simplices satisfying `keep`. `keep` must be
    /// closed downward for the result to be a complex; faces are re-added otherwise.
    pub fn filter(&self, mut keep: impl FnMut(&Simplex) -> bool) -> SimplicialComplex {
        let mut set = BTreeSet::new();
        for s in self.all_simplices() {
            if keep(s) {
                set.extend(s.all_faces());
            }
        }
        Self::from_set(self.labels.clone(), set)
    }

    /// Closure of the `(n-1)`-simplices that have exactly one `n`-dimensional coface.
    pub fn boundary_complex(&self) -> SimplicialComplex {
        let Some(n) = self.dim().filter(|&n| n > 0) else {
            return Self::empty(self.labels.clone());
        };
        let mut cofaces: HashMap<&Simplex, usize> = HashMap::new();
        for s in self.simplices(n) {
            for (_, f) in s.faces() {
                if let Some(idx) = self.index_of(&f) {
                    *cofaces.entry(&self.by_dim[n - 1][idx]).or_default() += 1;
                }
            }
        }
        let mut set = BTreeSet::new();
        for (f, count) in cofaces {
            if count == 1 {
                set.extend(f.all_faces());
            }
        }
        Self::from_set(self.labels.clone(), set)
    }

    /// Whether every simplex of `self` is a simplex of `other` under the same labels.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.labels == other.labels && self.all_simplices().all(|s| other.contains(s))
    }

    /// Simplices common to both complexes (same label table required).
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        assert_eq!(self.labels, other.labels, "label tables differ");
        let set = self.all_simplices().filter(|s| other.contains(s)).cloned().collect();
        Self::from_set(self.labels.clone(), set)
    }

    pub fn render_simplex(&self, s: &Simplex) -> String {
        let names: Vec<&str> = s.0.iter().map(|&v| self.label(v)).collect();
        format!("[{}]", names.join(" "))
    }
}
