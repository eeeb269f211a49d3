//! String diagrams of linear maps, evaluated column by column.
//!
//! A composite like `μ∘(λ⊗μ)∘(δ⊗H)` is never multiplied out. Each side of an
//! identity is applied to one domain basis vector at a time, so the cost is
//! driven by the sparsity of the structure maps, not by the size of the
//! flattened tensor powers.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use super::linmap::{add_into, collect_sparse, total, unflatten, LinMap, SparseVec};
use super::scalar::{Field, Scalar};
use crate::par::{self, Exec};
use crate::report::Witness;

/// Parts of a tensor product with at most this many domain basis vectors get
/// their columns memoized on first use.
const MEMO_LIMIT: usize = 1 << 12;

#[derive(Clone)]
pub struct Diagram(Arc<Inner>);

struct Inner {
    node: Node,
    field: Field,
    dom: Vec<usize>,
    cod: Vec<usize>,
    memo: OnceLock<Vec<SparseVec>>,
}

enum Node {
    Map { name: String, cols: Vec<SparseVec> },
    Id,
    Swap(usize, usize),
    /// Stages in application order (first applied first).
    Compose(Vec<Diagram>),
    Tensor(Vec<Diagram>),
}

impl Diagram {
    fn wrap(node: Node, field: Field, dom: Vec<usize>, cod: Vec<usize>) -> Self {
        Diagram(Arc::new(Inner {
            node,
            field,
            dom,
            cod,
            memo: OnceLock::new(),
        }))
    }

    /// A named generator backed by a concrete matrix.
    pub fn map(name: impl Into<String>, m: &LinMap) -> Self {
        Diagram::wrap(
            Node::Map {
                name: name.into(),
                cols: m.sparse_columns(),
            },
            m.field(),
            m.dom().to_vec(),
            m.cod().to_vec(),
        )
    }

    pub fn id(field: Field, dims: &[usize]) -> Self {
        Diagram::wrap(Node::Id, field, dims.to_vec(), dims.to_vec())
    }

    /// `c_{M,N}` with `dim M = m`, `dim N = n`.
    pub fn swap(field: Field, m: usize, n: usize) -> Self {
        Diagram::wrap(Node::Swap(m, n), field, vec![m, n], vec![n, m])
    }

    pub fn field(&self) -> Field {
        self.0.field
    }
    pub fn dom(&self) -> &[usize] {
        &self.0.dom
    }
    pub fn cod(&self) -> &[usize] {
        &self.0.cod
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> SparseVec {
        self.apply(&[(j, self.0.field.one())])
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        match &self.0.node {
            Node::Id => v.to_vec(),
            Node::Map { cols, .. } => {
                let mut acc = BTreeMap::new();
                for (j, c) in v {
                    for (i, a) in &cols[*j] {
                        add_into(&mut acc, *i, scale(a, c));
                    }
                }
                collect_sparse(acc)
            }
            Node::Swap(m, n) => {
                let (m, n) = (*m, *n);
                let mut out: SparseVec = v.iter().map(|(k, c)| ((k % n) * m + k / n, c.clone())).collect();
                out.sort_by_key(|(k, _)| *k);
                out
            }
            Node::Compose(stages) => {
                let mut cur = v.to_vec();
                for s in stages {
                    if cur.is_empty() {
                        break;
                    }
                    cur = s.apply(&cur);
                }
                cur
            }
            Node::Tensor(parts) => {
                let doms: Vec<usize> = parts.iter().map(|p| total(p.dom())).collect();
                let cods: Vec<usize> = parts.iter().map(|p| total(p.cod())).collect();
                let mut acc = BTreeMap::new();
                for (k, c) in v {
                    let idx = unflatten(*k, &doms);
                    let mut terms: Vec<(usize, Scalar)> = vec![(0, c.clone())];
                    for (p, part) in parts.iter().enumerate() {
                        let col = part.memo_column(idx[p]);
                        let mut next = Vec::with_capacity(terms.len() * col.len());
                        for (i, a) in &terms {
                            for (j, b) in col.iter() {
                                next.push((i * cods[p] + j, scale(b, a)));
                            }
                        }
                        terms = next;
                        if terms.is_empty() {
                            break;
                        }
                    }
                    for (i, a) in terms {
                        add_into(&mut acc, i, a);
                    }
                }
                collect_sparse(acc)
            }
        }
    }

    fn memo_column(&self, j: usize) -> Cow<'_, SparseVec> {
        match &self.0.node {
            Node::Id => Cow::Owned(vec![(j, self.0.field.one())]),
            Node::Map { cols, .. } => Cow::Borrowed(&cols[j]),
            Node::Swap(m, n) => Cow::Owned(vec![((j % n) * m + j / n, self.0.field.one())]),
            _ if total(self.dom()) <= MEMO_LIMIT => {
                let memo = self.0.memo.get_or_init(|| (0..total(self.dom())).map(|k| self.column(k)).collect());
                Cow::Borrowed(&memo[j])
            }
            _ => Cow::Owned(self.column(j)),
        }
    }

    /// Materializes the diagram as a dense matrix.
    pub fn to_linmap(&self, exec: Exec) -> LinMap {
        let cols = par::map_range(exec, total(self.dom()), |j| self.column(j));
        LinMap::from_columns(self.0.field, self.dom().to_vec(), self.cod().to_vec(), &cols)
            .expect("diagram columns fit its codomain")
    }

    /// Human-readable formula, used in panics and debugging.
    pub fn describe(&self) -> String {
        match &self.0.node {
            Node::Map { name, .. } => name.clone(),
            Node::Id => format!("id{:?}", self.dom()),
            Node::Swap(m, n) => format!("c({m},{n})"),
            Node::Compose(stages) => {
                let s: Vec<String> = stages.iter().rev().map(Diagram::describe).collect();
                format!("({})", s.join(" ∘ "))
            }
            Node::Tensor(parts) => {
                let s: Vec<String> = parts.iter().map(Diagram::describe).collect();
                format!("({})", s.join(" ⊗ "))
            }
        }
    }
}

impl std::fmt::Debug for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {:?} -> {:?}", self.describe(), self.dom(), self.cod())
    }
}

fn scale(a: &Scalar, c: &Scalar) -> Scalar {
    if c.is_one() {
        a.clone()
    } else if a.is_one() {
        c.clone()
    } else {
        a.mul(c)
    }
}

/// `fs[0] ∘ fs[1] ∘ … ∘ fs[k-1]` (the last map is applied first).
///
/// Panics if adjacent maps do not compose; diagrams are assembled from
/// structure maps whose shapes were checked when the structure was built.
pub fn comp(fs: &[&Diagram]) -> Diagram {
    assert!(!fs.is_empty(), "empty composite");
    let field = fs[0].field();
    let mut stages = Vec::with_capacity(fs.len());
    for w in fs.windows(2) {
        assert!(
            total(w[0].dom()) == total(w[1].cod()),
            "cannot compose {:?} after {:?}",
            w[0],
            w[1]
        );
    }
    for f in fs.iter().rev() {
        match &f.0.node {
            Node::Compose(inner) => stages.extend(inner.iter().cloned()),
            Node::Id => {}
            _ => stages.push((*f).clone()),
        }
    }
    let dom = fs[fs.len() - 1].dom().to_vec();
    let cod = fs[0].cod().to_vec();
    if stages.is_empty() {
        return Diagram::id(field, &dom);
    }
    if stages.len() == 1 && stages[0].dom() == dom.as_slice() && stages[0].cod() == cod.as_slice() {
        return stages.pop().expect("one stage");
    }
    Diagram::wrap(Node::Compose(stages), field, dom, cod)
}

/// `fs[0] ⊗ fs[1] ⊗ …`; factor lists are concatenated.
pub fn tens(fs: &[&Diagram]) -> Diagram {
    assert!(!fs.is_empty(), "empty tensor product");
    let field = fs[0].field();
    if fs.iter().all(|f| matches!(f.0.node, Node::Id)) {
        let dims: Vec<usize> = fs.iter().flat_map(|f| f.dom().to_vec()).collect();
        return Diagram::id(field, &dims);
    }
    if fs.len() == 1 {
        return fs[0].clone();
    }
    let dom = fs.iter().flat_map(|f| f.dom().to_vec()).collect();
    let cod = fs.iter().flat_map(|f| f.cod().to_vec()).collect();
    let parts = fs.iter().map(|f| (*f).clone()).collect();
    Diagram::wrap(Node::Tensor(parts), field, dom, cod)
}

/// A named identity between two diagrams with the same domain and codomain.
#[derive(Clone, Debug)]
pub struct Equation {
    pub id: String,
    pub lhs: Diagram,
    pub rhs: Diagram,
}

impl Equation {
    pub fn new(id: impl Into<String>, lhs: Diagram, rhs: Diagram) -> Self {
        let id = id.into();
        assert!(
            total(lhs.dom()) == total(rhs.dom()) && total(lhs.cod()) == total(rhs.cod()),
            "sides of {id} have different shapes: {lhs:?} vs {rhs:?}"
        );
        Equation { id, lhs, rhs }
    }

    /// The lowest domain basis vector on which the two sides differ.
    pub fn check(&self, exec: Exec) -> Option<Witness> {
        let n = total(self.lhs.dom());
        par::find_first(exec, n, |j| {
            let l = self.lhs.column(j);
            let r = self.rhs.column(j);
            (l != r).then(|| Witness {
                input: j,
                multi_index: unflatten(j, self.lhs.dom()),
                lhs: render(&l, self.lhs.cod()),
                rhs: render(&r, self.lhs.cod()),
            })
        })
    }
}

/// Renders a sparse vector as `c·e(i,j) + …`, truncated after eight terms.
pub fn render(v: &[(usize, Scalar)], cod: &[usize]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        if n == 8 {
            let _ = write!(s, " + … ({} terms)", v.len());
            break;
        }
        if n > 0 {
            s.push_str(" + ");
        }
        let idx: Vec<String> = unflatten(*i, cod).iter().map(usize::to_string).collect();
        let _ = write!(s, "{c}·e({})", idx.join(","));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn m(dom: Vec<usize>, cod: Vec<usize>, vals: &[i64]) -> LinMap {
        LinMap::new(Q, dom, cod, vals.iter().map(|&v| Q.int(v)).collect()).unwrap()
    }

    #[test]
    fn matches_dense_composition() {
        let f = m(vec![2], vec![3], &[1, 2, 0, -1, 3, 1]);
        let g = m(vec![3], vec![2], &[1, 0, 2, 0, 1, -1]);
        let d = comp(&[&Diagram::map("g", &g), &Diagram::map("f", &f)]);
        assert!(d.to_linmap(Exec::Sequential).same_matrix(&g.compose(&f).unwrap()));
    }

    #[test]
    fn matches_dense_kron_and_swap() {
        let f = m(vec![2], vec![3], &[1, 2, 0, -1, 3, 1]);
        let g = m(vec![3], vec![2], &[1, 0, 2, 0, 1, -1]);
        let d = comp(&[
            &Diagram::swap(Q, 3, 2),
            &tens(&[&Diagram::map("f", &f), &Diagram::map("g", &g)]),
        ]);
        let dense = LinMap::swap(Q, 3, 2).compose(&f.kron(&g).unwrap()).unwrap();
        assert!(d.to_linmap(Exec::Parallel).same_matrix(&dense));
    }

    #[test]
    fn equation_reports_first_failure() {
        let a = m(vec![2, 2], vec![1], &[1, 0, 0, 1]);
        let b = m(vec![2, 2], vec![1], &[1, 0, 1, 1]);
        let eq = Equation::new("t", Diagram::map("a", &a), Diagram::map("b", &b));
        let w = eq.check(Exec::Parallel).unwrap();
        assert_eq!((w.input, w.multi_index.clone()), (2, vec![1, 0]));
        assert_eq!(w.lhs, "0");
        assert!(Equation::new("s", Diagram::map("a", &a), Diagram::map("a", &a)).check(Exec::Sequential).is_none());
    }

    #[test]
    #[should_panic(expected = "cannot compose")]
    fn rejects_mismatch() {
        comp(&[&Diagram::id(Q, &[2]), &Diagram::id(Q, &[3])]);
    }
}
