//! Finite-dimensional representations of `Lambda_{m,N}`: string modules via
//! the canonical basis, the indecomposable projectives, direct sums,
//! relation checking, and sub/quotient constructions.

use crate::algebra::{Algebra, Letter};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::strings::StringRep;

/// A representation: one dimension per vertex and one matrix per arrow.
/// The matrix of an arrow `g` has shape `dims[target(g)] x dims[source(g)]`.
#[derive(Clone, Debug)]
pub struct Rep<F: Field> {
    pub alg: Algebra,
    pub dims: Vec<usize>,
    /// Indexed by `Algebra::arrow_id`.
    pub mats: Vec<Matrix<F>>,
}

impl<F: Field> Rep<F> {
    pub fn zero_rep(field: &F, alg: &Algebra) -> Self {
        Rep {
            alg: *alg,
            dims: vec![0; alg.m()],
            mats: alg.arrows().iter().map(|_| Matrix::zero(field, 0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn arrow_matrix(&self, g: Letter) -> &Matrix<F> {
        &self.mats[self.alg.arrow_id(g.as_arrow())]
    }

    /// Matrix of a directed path acting on the module (letters applied
    /// right to left).
    pub fn path_matrix(&self, field: &F, letters: &[Letter]) -> Matrix<F> {
        debug_assert!(!letters.is_empty());
        let mut acc = self.arrow_matrix(letters[letters.len() - 1]).clone();
        for l in letters.iter().rev().skip(1) {
            acc = self.arrow_matrix(*l).mul(field, &acc);
        }
        acc
    }

    /// Offset of vertex `v`'s coordinate block in the total-dimension indexing.
    pub fn block_offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }
}

/// Vertex positions `v(0..=n)` of the canonical basis of `M[C]`.
pub fn string_positions(alg: &Algebra, c: &StringRep) -> Vec<usize> {
    (0..=c.len()).map(|j| c.word().vertex_at(alg, j)).collect()
}

/// Local coordinate (within its vertex block) of each canonical basis vector.
pub fn string_local_indices(alg: &Algebra, c: &StringRep) -> Vec<usize> {
    let pos = string_positions(alg, c);
    let mut seen = vec![0usize; alg.m()];
    pos.iter()
        .map(|&v| {
            let k = seen[v];
            seen[v] += 1;
            k
        })
        .collect()
}

/// The canonical representation of the string module `M[C]`: basis
/// `z_0..z_n`, with `z_j` at vertex `v(j)`; a letter `w_j` that is an arrow
/// sends `z_j` to `z_{j-1}`, and an inverse letter `w_{j+1} = g^{-1}` makes
/// the arrow `g` send `z_j` to `z_{j+1}`.
pub fn string_module<F: Field>(field: &F, alg: &Algebra, c: &StringRep) -> Rep<F> {
    let pos = string_positions(alg, c);
    let local = string_local_indices(alg, c);
    let mut dims = vec![0usize; alg.m()];
    for &v in &pos {
        dims[v] += 1;
    }
    let mut mats: Vec<Matrix<F>> = alg
        .arrows()
        .iter()
        .map(|g| Matrix::zero(field, dims[g.target(alg)], dims[g.source(alg)]))
        .collect();
    for (j, &l) in c.word().letters().iter().enumerate() {
        // Letter w_{j+1} sits between positions j and j+1.
        let (from, to) = if l.inverted { (j, j + 1) } else { (j + 1, j) };
        let g = l.as_arrow();
        let id = alg.arrow_id(g);
        debug_assert_eq!(pos[from], g.source(alg));
        debug_assert_eq!(pos[to], g.target(alg));
        mats[id].set(local[to], local[from], field.one());
    }
    Rep {
        alg: *alg,
        dims,
        mats,
    }
}

/// Path basis of the indecomposable projective `P_i`: the trivial path,
/// the two alternating branches of lengths `1..=2N-1`, and the shared socle.
#[derive(Clone, Debug)]
pub struct ProjectiveBasis {
    pub vertex: usize,
    /// Vertex of each basis path, in the fixed order:
    /// `e`, a-branch depths `1..=2N-1`, bar-branch depths `1..=2N-1`, socle.
    pub path_vertices: Vec<usize>,
}

pub fn projective_basis(alg: &Algebra, i: i64) -> ProjectiveBasis {
    let i = alg.vertex(i);
    let n2 = alg.socle_path_len();
    let mut path_vertices = vec![i];
    for first in [alg.arrow_a(i as i64), alg.arrow_bar(i as i64 - 1)] {
        let mut next = first;
        for _ in 1..n2 {
            path_vertices.push(next.target(alg));
            next = next.alternation_partner();
        }
    }
    path_vertices.push(i); // socle
    ProjectiveBasis {
        vertex: i,
        path_vertices,
    }
}

/// The representation of `P_i` on the path basis.
pub fn projective<F: Field>(field: &F, alg: &Algebra, i: i64) -> Rep<F> {
    let i = alg.vertex(i) as i64;
    let basis = projective_basis(alg, i);
    let n2 = alg.socle_path_len();
    let mut dims = vec![0usize; alg.m()];
    let mut local = Vec::with_capacity(basis.path_vertices.len());
    for &v in &basis.path_vertices {
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut mats: Vec<Matrix<F>> = alg
        .arrows()
        .iter()
        .map(|g| Matrix::zero(field, dims[g.target(alg)], dims[g.source(alg)]))
        .collect();
    let socle = basis.path_vertices.len() - 1;
    let mut put = |g: Letter, from: usize, to: usize| {
        let id = alg.arrow_id(g);
        mats[id].set(local[to], local[from], field.one());
    };
    for (branch, first) in [(0usize, alg.arrow_a(i)), (1, alg.arrow_bar(i - 1))] {
        let base = 1 + branch * (n2 - 1);
        let mut next = first;
        // e -> depth 1.
        put(next, 0, base);
        next = next.alternation_partner();
        for d in 1..n2 - 1 {
            put(next, base + d - 1, base + d);
            next = next.alternation_partner();
        }
        // depth 2N-1 -> socle.
        put(next, base + n2 - 2, socle);
    }
    Rep {
        alg: *alg,
        dims,
        mats,
    }
}

/// Checks that every defining relation holds as a matrix identity.
pub fn check_relations<F: Field>(field: &F, x: &Rep<F>) -> bool {
    let alg = x.alg;
    for i in 0..alg.m() as i64 {
        // a_{i+1} a_i = 0.
        let p = x.arrow_matrix(alg.arrow_a(i + 1)).mul(field, x.arrow_matrix(alg.arrow_a(i)));
        if !p.is_zero(field) {
            return false;
        }
        // A_{i-1} A_i = 0.
        let p = x
            .arrow_matrix(alg.arrow_bar(i - 1))
            .mul(field, x.arrow_matrix(alg.arrow_bar(i)));
        if !p.is_zero(field) {
            return false;
        }
        // (A_i a_i)^N = (a_{i-1} A_{i-1})^N as maps at vertex i.
        let mut cyc_a = Matrix::identity(field, x.dims[alg.vertex(i)]);
        let mut cyc_b = cyc_a.clone();
        for _ in 0..alg.relation_exponent() {
            cyc_a = x
                .arrow_matrix(alg.arrow_bar(i))
                .mul(field, x.arrow_matrix(alg.arrow_a(i)))
                .mul(field, &cyc_a);
            cyc_b = x
                .arrow_matrix(alg.arrow_a(i - 1))
                .mul(field, x.arrow_matrix(alg.arrow_bar(i - 1)))
                .mul(field, &cyc_b);
        }
        if cyc_a != cyc_b {
            return false;
        }
    }
    true
}

pub fn direct_sum<F: Field>(field: &F, x: &Rep<F>, y: &Rep<F>) -> Rep<F> {
    assert_eq!(x.alg, y.alg);
    let alg = x.alg;
    let dims: Vec<usize> = (0..alg.m()).map(|v| x.dims[v] + y.dims[v]).collect();
    let mats = alg
        .arrows()
        .iter()
        .map(|g| {
            let (xm, ym) = (x.arrow_matrix(*g), y.arrow_matrix(*g));
            Matrix::from_fn(field, dims[g.target(&alg)], dims[g.source(&alg)], |r, c| {
                let (tr, sc) = (x.dims[g.target(&alg)], x.dims[g.source(&alg)]);
                if r < tr && c < sc {
                    xm.get(r, c).clone()
                } else if r >= tr && c >= sc {
                    ym.get(r - tr, c - sc).clone()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    Rep { alg, dims, mats }
}

/// Per-vertex basis matrices (columns spanning a subspace) defining a
/// subrepresentation; the columns must be arrow-stable.
pub type VertexBasis<F> = Vec<Matrix<F>>;

/// Restricts a representation to the subrepresentation spanned by `basis`.
/// Panics if the span is not arrow-stable.
pub fn restrict<F: Field>(field: &F, x: &Rep<F>, basis: &VertexBasis<F>) -> Rep<F> {
    let alg = x.alg;
    let dims: Vec<usize> = basis.iter().map(|b| b.cols).collect();
    let mats = alg
        .arrows()
        .iter()
        .map(|g| {
            let (s, t) = (g.source(&alg), g.target(&alg));
            let image = x.arrow_matrix(*g).mul(field, &basis[s]);
            if dims[t] == 0 {
                assert!(image.is_zero(field), "subspace not arrow-stable");
                return Matrix::zero(field, 0, dims[s]);
            }
            basis[t]
                .solve(field, &image)
                .expect("subspace not arrow-stable")
        })
        .collect();
    Rep { alg, dims, mats }
}

/// Quotient of `x` by the arrow-stable subspace spanned by `basis`:
/// returns the quotient representation together with the per-vertex
/// projection matrices.
pub fn quotient<F: Field>(
    field: &F,
    x: &Rep<F>,
    basis: &VertexBasis<F>,
) -> (Rep<F>, Vec<Matrix<F>>) {
    let alg = x.alg;
    let mut projections = Vec::with_capacity(alg.m());
    let mut sections = Vec::with_capacity(alg.m());
    let mut dims = Vec::with_capacity(alg.m());
    for v in 0..alg.m() {
        // Row-reduce the subspace; pivot coordinates get eliminated, free
        // coordinates represent the quotient classes.
        let mut rows = basis[v].transpose(field);
        let pivots = rows.rref(field);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..x.dims[v]).filter(|c| !pivot_set.contains(c)).collect();
        dims.push(free.len());
        let mut proj = Matrix::zero(field, free.len(), x.dims[v]);
        for (r, &c) in free.iter().enumerate() {
            proj.set(r, c, field.one());
        }
        for (ri, &pc) in pivots.iter().enumerate() {
            // In the quotient, e_{pc} = -(sum of the row's free-coordinate entries).
            for (r, &fc) in free.iter().enumerate() {
                proj.set(r, pc, field.neg(rows.get(ri, fc)));
            }
        }
        let mut section = Matrix::zero(field, x.dims[v], free.len());
        for (r, &c) in free.iter().enumerate() {
            section.set(c, r, field.one());
        }
        projections.push(proj);
        sections.push(section);
    }
    let mats = alg
        .arrows()
        .iter()
        .map(|g| {
            let (s, t) = (g.source(&alg), g.target(&alg));
            projections[t]
                .mul(field, x.arrow_matrix(*g))
                .mul(field, &sections[s])
        })
        .collect();
    (Rep { alg, dims, mats }, projections)
}

/// Per-vertex dimensions of the radical `sum of arrow images`.
pub fn radical_basis<F: Field>(field: &F, x: &Rep<F>) -> VertexBasis<F> {
    let alg = x.alg;
    (0..alg.m())
        .map(|v| {
            // Stack images of arrows landing at v, column-reduce.
            let mut cols: Vec<Matrix<F>> = Vec::new();
            for g in alg.arrows() {
                if g.target(&alg) != v {
                    continue;
                }
                let m = x.arrow_matrix(g);
                for c in 0..m.cols {
                    cols.push(Matrix::from_fn(field, x.dims[v], 1, |r, _| m.get(r, c).clone()));
                }
            }
            column_span(field, x.dims[v], &cols)
        })
        .collect()
}

/// Independent spanning columns of a list of column vectors.
pub fn column_span<F: Field>(field: &F, dim: usize, cols: &[Matrix<F>]) -> Matrix<F> {
    if cols.is_empty() {
        return Matrix::zero(field, dim, 0);
    }
    let stacked = Matrix::from_fn(field, cols.len(), dim, |r, c| cols[r].get(c, 0).clone());
    let mut reduced = stacked.clone();
    let pivots = reduced.rref(field);
    let rank = pivots.len();
    Matrix::from_fn(field, dim, rank, |r, c| reduced.get(c, r).clone())
}

/// Socle: intersection of the kernels of all arrows out of each vertex.
pub fn socle_dims<F: Field>(field: &F, x: &Rep<F>) -> Vec<usize> {
    let alg = x.alg;
    (0..alg.m())
        .map(|v| {
            let mut stacked: Option<Matrix<F>> = None;
            for g in alg.arrows() {
                if g.source(&alg) != v {
                    continue;
                }
                let m = x.arrow_matrix(g).clone();
                stacked = Some(match stacked {
                    None => m,
                    Some(s) => s.vcat(field, &m),
                });
            }
            match stacked {
                None => x.dims[v],
                Some(s) => s.nullspace(field).len(),
            }
        })
        .collect()
}

pub fn top_dims<F: Field>(field: &F, x: &Rep<F>) -> Vec<usize> {
    let rad = radical_basis(field, x);
    (0..x.alg.m()).map(|v| x.dims[v] - rad[v].cols).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::strings::{enumerate_strings, parse_string, StringRep};

    fn alg(m: i64, n: i64) -> Algebra {
        Algebra::new(m, n).unwrap()
    }

    /// Independent oracle for dim P_i: enumerate nonzero paths from i by
    /// brute-force extension, with socle paths identified.
    fn count_paths_from(alg: &Algebra, i: i64) -> usize {
        use crate::algebra::{path_product, PathElement};
        let mut seen = std::collections::HashSet::new();
        let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
        let mut count = 0;
        while let Some(p) = frontier.pop() {
            if p.is_empty() {
                count += 1; // trivial path
                for g in alg.arrows() {
                    if g.source(alg) == alg.vertex(i) {
                        frontier.push(vec![g]);
                    }
                }
                continue;
            }
            match path_product(alg, &p).unwrap() {
                PathElement::Zero => continue,
                elt @ PathElement::Path { .. } => {
                    if seen.insert(elt) {
                        count += 1;
                        for g in alg.arrows() {
                            if g.source(alg) == p[0].target(alg) {
                                let mut q = vec![g];
                                q.extend_from_slice(&p);
                                frontier.push(q);
                            }
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn projective_dimension_is_4n() {
        let f = Rationals;
        for m in 3..=6 {
            for n in 1..=3 {
                let a = alg(m, n);
                for i in 0..m {
                    assert_eq!(count_paths_from(&a, i), 4 * n as usize, "path oracle m={m} n={n}");
                    let p = projective(&f, &a, i);
                    assert_eq!(p.total_dim(), 4 * n as usize);
                    assert!(check_relations(&f, &p), "relations fail for P_{i} at m={m} N={n}");
                    // Top and socle are the simple at i.
                    let top = top_dims(&f, &p);
                    let soc = socle_dims(&f, &p);
                    let mut expect = vec![0; m as usize];
                    expect[i as usize] = 1;
                    assert_eq!(top, expect);
                    assert_eq!(soc, expect);
                }
            }
        }
    }

    #[test]
    fn projective_dim_vector_example() {
        // P_1 at (4,2): paths from vertex 1 reach only vertices 0, 1, 2;
        // the path-enumeration oracle gives two paths at each neighbour and
        // four (top, two middles, socle) at 1.
        let f = Rationals;
        let a = alg(4, 2);
        let p = projective(&f, &a, 1);
        assert_eq!(p.total_dim(), 8);
        assert_eq!(p.dims, vec![2, 4, 2, 0]);
    }

    #[test]
    fn string_module_shapes() {
        let f = Rationals;
        let a = alg(3, 2);
        // Trivial string gives the simple module.
        let s = string_module(&f, &a, &StringRep::trivial(&a, 1));
        assert_eq!(s.dims, vec![0, 1, 0]);
        assert!(check_relations(&f, &s));
        // dim = length + 1 and relations hold on an enumeration.
        for c in enumerate_strings(&a, 8) {
            let m = string_module(&f, &a, &c);
            assert_eq!(m.total_dim(), c.len() + 1, "{c}");
            assert!(check_relations(&f, &m), "relations fail for {c}");
        }
    }

    #[test]
    fn relation_check_catches_mutations() {
        // Zeroing one arrow of a projective kills one socle path but not the
        // other, so the cycle identity breaks.
        let f = Rationals;
        let a = alg(3, 2);
        let mut p = projective(&f, &a, 0);
        assert!(check_relations(&f, &p));
        let id = a.arrow_id(a.arrow_a(0));
        p.mats[id] = Matrix::zero(&f, p.mats[id].rows, p.mats[id].cols);
        assert!(!check_relations(&f, &p));
    }

    #[test]
    fn direct_sum_properties() {
        let f = Rationals;
        let a = alg(3, 1);
        let x = string_module(&f, &a, &parse_string(&a, "a0").unwrap());
        let y = string_module(&f, &a, &parse_string(&a, "A2-").unwrap());
        let s = direct_sum(&f, &x, &y);
        assert_eq!(s.total_dim(), x.total_dim() + y.total_dim());
        assert!(check_relations(&f, &s));
    }

    #[test]
    fn top_and_socle_of_strings() {
        let f = Rationals;
        let a = alg(3, 1);
        // M[a_0]: top at 0, socle at 1.
        let m = string_module(&f, &a, &parse_string(&a, "a0").unwrap());
        assert_eq!(top_dims(&f, &m), vec![1, 0, 0]);
        assert_eq!(socle_dims(&f, &m), vec![0, 1, 0]);
    }
}
