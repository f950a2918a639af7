//! Placing triangulations of a polytope and of its boundary, using only the
//! polytope's own vertices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_from_int, IntMatrix, Rational};
use crate::hull::Placement;
use crate::poly::IntPolynomial;
use crate::polytope::Polytope;

/// A set of vertex indices into the host polytope, kept sorted. The empty
/// simplex has dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Simplex {
    vertex_ids: Vec<usize>,
}

impl Simplex {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Simplex { vertex_ids: ids }
    }

    pub fn empty() -> Self {
        Simplex::default()
    }

    pub fn vertex_ids(&self) -> &[usize] {
        &self.vertex_ids
    }

    pub fn len(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_ids.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.vertex_ids.len() as isize - 1
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertex_ids
            .iter()
            .all(|v| other.vertex_ids.binary_search(v).is_ok())
    }

    /// All subsets, including the empty one and the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.vertex_ids.len();
        (0u32..1 << n)
            .map(|mask| Simplex {
                vertex_ids: (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.vertex_ids[i])
                    .collect(),
            })
            .collect()
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertex_ids
            .len()
            .cmp(&other.vertex_ids.len())
            .then_with(|| self.vertex_ids.cmp(&other.vertex_ids))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let ids: Vec<String> = self.vertex_ids.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangulationKind {
    Full,
    Boundary,
}

/// Simplicial complex on the host's vertices covering either the whole
/// polytope or its boundary. `faces` is closed under subsets, includes the
/// empty simplex and is sorted by dimension then vertex ids.
#[derive(Clone, Debug)]
pub struct Triangulation {
    kind: TriangulationKind,
    host: Polytope,
    maximal: Vec<Simplex>,
    faces: Vec<Simplex>,
    face_index: HashMap<Simplex, usize>,
    denominator: u64,
}

impl Triangulation {
    fn from_cells(kind: TriangulationKind, host: &Polytope, cells: Vec<Vec<usize>>) -> Self {
        let mut maximal: Vec<Simplex> = cells.into_iter().map(Simplex::new).collect();
        maximal.sort();
        let faces: BTreeSet<Simplex> = maximal.iter().flat_map(|c| c.faces()).collect();
        let faces: Vec<Simplex> = faces.into_iter().collect();
        let face_index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Triangulation {
            kind,
            host: host.clone(),
            maximal,
            faces,
            face_index,
            denominator: host.denominator(),
        }
    }

    pub fn kind(&self) -> TriangulationKind {
        self.kind
    }

    pub fn host(&self) -> &Polytope {
        &self.host
    }

    pub fn maximal_cells(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn contains_face(&self, face: &Simplex) -> bool {
        self.face_index.contains_key(face)
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Dimension of the maximal cells.
    pub fn cell_dim(&self) -> usize {
        match self.kind {
            TriangulationKind::Full => self.host.dim(),
            TriangulationKind::Boundary => self.host.dim() - 1,
        }
    }

    /// Maximal cells as vertex-index lists.
    pub fn dump(&self) -> Vec<Vec<usize>> {
        self.maximal.iter().map(|s| s.vertex_ids.clone()).collect()
    }

    /// `h(Ω; z) = Σ_{Ω ⊆ Φ} z^{dim Φ - dim Ω} (1 - z)^{D - dim Φ}` where `D`
    /// is the dimension of the maximal cells.
    pub fn h_polynomial(&self, face: &Simplex) -> Result<IntPolynomial> {
        if !self.contains_face(face) {
            return Err(Error::FaceNotInTriangulation(face.vertex_ids.clone()));
        }
        let top = self.cell_dim() + 1;
        let base = face.len();
        let one_minus_z = IntPolynomial::from_i64(&[1, -1]);
        let mut powers = vec![IntPolynomial::one()];
        for k in 1..=top {
            let next = &powers[k - 1] * &one_minus_z;
            powers.push(next);
        }
        let mut h = IntPolynomial::zero();
        for phi in self.faces.iter().filter(|phi| face.is_face_of(phi)) {
            let term = powers[top - phi.len()].shift(phi.len() - base);
            h = &h + &term;
        }
        Ok(h)
    }

    /// Sum of the Euclidean volumes of the maximal cells of a full
    /// triangulation of a full-dimensional polytope.
    pub fn volume(&self) -> Option<Rational> {
        if self.kind != TriangulationKind::Full || !self.host.is_full_dimensional() {
            return None;
        }
        let d = self.host.ambient_dim();
        let verts = self.host.vertices();
        let mut total = Rational::zero();
        let mut factorial = Rational::from_integer(1.into());
        for k in 2..=d {
            factorial *= Rational::from_integer(k.into());
        }
        for cell in &self.maximal {
            let ids = cell.vertex_ids();
            let rows: Vec<Vec<Rational>> = ids[1..]
                .iter()
                .map(|&i| {
                    verts[i]
                        .iter()
                        .zip(&verts[ids[0]])
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            total += rational_det(rows).abs() / &factorial;
        }
        Some(total)
    }
}

fn rational_det(rows: Vec<Vec<Rational>>) -> Rational {
    let denom = crate::exact::lcm_all(rows.iter().flatten().map(|x| x.denom()));
    let n = rows.len();
    let entries = rows
        .iter()
        .flatten()
        .map(|x| (x * rat_from_int(&denom)).to_integer())
        .collect();
    let m = IntMatrix::from_entries(n, n, entries);
    let scale = num_traits::pow(rat_from_int(&denom), n);
    rat_from_int(&m.det()) / scale
}

/// Placing triangulation inserting vertices in index order.
pub fn placing_triangulation(p: &Polytope) -> Triangulation {
    let order: Vec<usize> = (0..p.vertices().len()).collect();
    placing_triangulation_with_order(p, &order)
}

/// Placing triangulation for an explicit insertion order (a permutation of
/// the vertex indices).
pub fn placing_triangulation_with_order(p: &Polytope, order: &[usize]) -> Triangulation {
    let placement = place(p, order);
    Triangulation::from_cells(TriangulationKind::Full, p, placement.cells)
}

/// Boundary complex of the placing triangulation in index order.
pub fn boundary_triangulation(p: &Polytope) -> Result<Triangulation> {
    let order: Vec<usize> = (0..p.vertices().len()).collect();
    boundary_triangulation_with_order(p, &order)
}

/// Boundary complex of the placing triangulation for `order`. Each facet is
/// triangulated by placing its own vertices in the induced order.
pub fn boundary_triangulation_with_order(p: &Polytope, order: &[usize]) -> Result<Triangulation> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let placement = place(p, order);
    let cells = placement
        .boundary_ridges()
        .into_iter()
        .map(|r| r.vertices)
        .collect();
    Ok(Triangulation::from_cells(TriangulationKind::Boundary, p, cells))
}

fn place(p: &Polytope, order: &[usize]) -> Placement {
    let n = p.vertices().len();
    let mut seen = vec![false; n];
    assert_eq!(order.len(), n, "insertion order must list every vertex");
    for &i in order {
        assert!(i < n && !seen[i], "insertion order must be a permutation");
        seen[i] = true;
    }
    let placement = Placement::place(p.vertices(), order).expect("polytope has vertices");
    debug_assert!(placement.cells.iter().all(|c| c.len() == p.dim() + 1));
    placement
}

/// Signed check used by tests: no two distinct cells of a full
/// triangulation overlap in their interiors.
#[cfg(test)]
fn cells_overlap(p: &Polytope, a: &Simplex, b: &Simplex) -> bool {
    // The cells overlap iff a point in the interior of one lies strictly
    // inside the other; barycenters suffice for triangulations on the same
    // vertex set when one of them is interior to the other.
    let verts = p.vertices();
    let bary = |s: &Simplex| -> Vec<Rational> {
        let k = Rational::from_integer((s.len() as i64).into());
        (0..p.ambient_dim())
            .map(|j| s.vertex_ids().iter().map(|&i| verts[i][j].clone()).sum::<Rational>() / &k)
            .collect()
    };
    let cell_poly = |s: &Simplex| {
        Polytope::from_vertices(s.vertex_ids().iter().map(|&i| verts[i].clone()).collect())
            .unwrap()
    };
    let pa = cell_poly(a);
    let pb = cell_poly(b);
    pa.contains(&bary(b), true) || pb.contains(&bary(a), true) || bary(a) == bary(b)
}
