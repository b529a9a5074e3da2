use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Serialize, Serializer};

use super::SupplierStrategy;
use crate::util::binomial;

/// A cardinality that is either known exactly or too large for `u128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Count {
    Exact(u128),
    Astronomical,
}

impl Count {
    pub fn at_most(self, bound: u64) -> bool {
        matches!(self, Count::Exact(c) if c <= bound as u128)
    }

    pub fn exact(self) -> Option<u128> {
        match self {
            Count::Exact(c) => Some(c),
            Count::Astronomical => None,
        }
    }

    /// `binomial(n, k)`, assuming `k <= n` whenever either is astronomical.
    pub fn binomial(n: Count, k: Count) -> Count {
        match (n, k) {
            (Count::Exact(n), Count::Exact(k)) if n <= u64::MAX as u128 && k <= u64::MAX as u128 => {
                binomial(n as u64, k as u64).map_or(Count::Astronomical, Count::Exact)
            }
            (Count::Exact(n), Count::Exact(k)) if k > n => Count::Exact(0),
            _ => Count::Astronomical,
        }
    }
}

impl Mul for Count {
    type Output = Count;

    fn mul(self, other: Count) -> Count {
        match (self, other) {
            (Count::Exact(0), _) | (_, Count::Exact(0)) => Count::Exact(0),
            (Count::Exact(a), Count::Exact(b)) => a.checked_mul(b).map_or(Count::Astronomical, Count::Exact),
            _ => Count::Astronomical,
        }
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, other: Count) -> Count {
        match (self, other) {
            (Count::Exact(a), Count::Exact(b)) => a.checked_add(b).map_or(Count::Astronomical, Count::Exact),
            _ => Count::Astronomical,
        }
    }
}

/// `self - other`, saturating at zero; astronomical minus anything finite
/// stays astronomical.
impl Sub for Count {
    type Output = Count;

    fn sub(self, other: Count) -> Count {
        match (self, other) {
            (Count::Exact(a), Count::Exact(b)) => Count::Exact(a.saturating_sub(b)),
            (Count::Astronomical, Count::Exact(_)) => Count::Astronomical,
            (_, Count::Astronomical) => Count::Exact(0),
        }
    }
}

impl From<u128> for Count {
    fn from(c: u128) -> Self {
        Count::Exact(c)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(c) => write!(f, "{c}"),
            Count::Astronomical => f.write_str("astronomical"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Exact(c) if *c <= u64::MAX as u128 => s.serialize_u64(*c as u64),
            Count::Exact(c) => s.serialize_str(&c.to_string()),
            Count::Astronomical => s.serialize_str("astronomical"),
        }
    }
}

/// Predicted output size of a construction. `exact` is false when some
/// random ingredient was replaced by a lower bound on its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeEstimate {
    pub vertices: Count,
    pub edges: Count,
    pub part_sizes: Vec<Count>,
    pub exact: bool,
}

impl SizeEstimate {
    fn astronomical(exact: bool) -> Self {
        SizeEstimate {
            vertices: Count::Astronomical,
            edges: Count::Astronomical,
            part_sizes: Vec::new(),
            exact,
        }
    }

    fn is_astronomical(&self) -> bool {
        self.vertices == Count::Astronomical || self.edges == Count::Astronomical
    }

    /// Effect of amalgamating along part `j` with a hypergraph of the given size.
    fn amalgamate(&mut self, j: usize, f_vertices: Count, f_edges: Count, f_exact: bool) {
        let glued = self.part_sizes[j];
        self.vertices = f_vertices.add(f_edges.mul(self.vertices.sub(glued)));
        self.edges = self.edges.mul(f_edges);
        for (i, s) in self.part_sizes.iter_mut().enumerate() {
            *s = if i == j { f_vertices } else { s.mul(f_edges) };
        }
        self.exact &= f_exact;
    }
}

impl std::fmt::Display for SizeEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qualifier = if self.exact || self.is_astronomical() {
            ""
        } else {
            "at least "
        };
        write!(f, "{qualifier}{} vertices and {} edges", self.vertices, self.edges)
    }
}

/// Size of the `ell`-uniform hypergraph of girth `>= g` and minimum degree
/// `>= q` produced by the supplier: `(vertices, edges, exact)`.
///
/// Complete graphs and complete hypergraphs are sized exactly. For the random
/// route the size is not known in advance; the returned lower bound follows
/// from counting: `q` pairwise edge-disjoint-beyond-one-vertex edges at one
/// vertex force `n >= 1 + q(ell - 1)`, and degree `q` everywhere forces
/// `m >= n q / ell`.
pub fn supplier_size(ell: usize, g: usize, q: usize, strategy: SupplierStrategy) -> (Count, Count, bool) {
    let auto = strategy == SupplierStrategy::Auto;
    if auto && ell == 2 && g <= 3 {
        let n = q as u128 + 1;
        return (Count::Exact(n), Count::binomial(Count::Exact(n), Count::Exact(2)), true);
    }
    if auto && g <= 2 {
        let n = complete_supplier_order(ell, q);
        return (
            n,
            Count::binomial(n, Count::Exact(ell as u128)),
            n != Count::Astronomical,
        );
    }
    let n = Count::Exact(1).add(Count::Exact(q as u128).mul(Count::Exact(ell as u128 - 1)));
    let m = match n.mul(Count::Exact(q as u128)) {
        Count::Exact(nq) => Count::Exact(nq.div_ceil(ell as u128)),
        Count::Astronomical => Count::Astronomical,
    };
    (n, m, false)
}

/// Smallest `n > ell` with `binomial(n - 1, ell - 1) >= q`.
pub(crate) fn complete_supplier_order(ell: usize, q: usize) -> Count {
    let mut n = ell as u64 + 1;
    loop {
        match binomial(n - 1, ell as u64 - 1) {
            Some(d) if d >= q as u128 => return Count::Exact(n as u128),
            None => return Count::Exact(n as u128),
            _ => n += 1,
        }
    }
}

/// Part sizes of the complete `a`-partite factor of an `r`-partite
/// hypergraph whose parts have the given sizes.
///
/// Part `p` receives part `k` of every copy indexed by a subset whose `k`-th
/// smallest element is `p`; there are `binomial(p, k) * binomial(a-1-p, r-1-k)`
/// of them.
pub fn factor_part_sizes(parts: &[Count], a: usize) -> Vec<Count> {
    let r = parts.len();
    (0..a)
        .map(|p| {
            parts.iter().enumerate().fold(Count::Exact(0), |acc, (k, &size)| {
                if k > p || r - 1 - k > a - 1 - p {
                    return acc;
                }
                let ways = Count::binomial(Count::Exact(p as u128), Count::Exact(k as u128)).mul(Count::binomial(
                    Count::Exact((a - 1 - p) as u128),
                    Count::Exact((r - 1 - k) as u128),
                ));
                acc.add(ways.mul(size))
            })
        })
        .collect()
}

/// Size of `PR(r, g)` without building it.
pub fn estimate_pr(r: usize, g: usize, strategy: SupplierStrategy) -> SizeEstimate {
    let mut est = SizeEstimate {
        vertices: Count::Exact(3),
        edges: Count::Exact(2),
        part_sizes: vec![Count::Exact(2), Count::Exact(1)],
        exact: true,
    };
    for k in 2..r {
        let (ell, q) = match est.edges.exact() {
            Some(e) if e <= usize::MAX as u128 / (k as u128 + 1) => (e as usize, e as usize * (k + 1)),
            _ => return SizeEstimate::astronomical(est.exact),
        };
        // tilde
        est.vertices = est.vertices.add(est.edges);
        est.part_sizes.push(est.edges);
        let (fv, fe, fx) = supplier_size(ell, g, q, strategy);
        est.amalgamate(k, fv, fe, fx);
        if est.is_astronomical() {
            return SizeEstimate::astronomical(est.exact);
        }
    }
    est
}

/// Size of `H(r, g)` without building it.
pub fn estimate_size(r: usize, g: usize, strategy: SupplierStrategy) -> SizeEstimate {
    estimate_h(Count::Exact(r as u128), g, strategy)
}

fn estimate_h(r: Count, g: usize, strategy: SupplierStrategy) -> SizeEstimate {
    let Some(r) = r.exact() else {
        return SizeEstimate::astronomical(true);
    };
    if g <= 2 {
        let n = Count::Exact(r - 1).mul(Count::Exact(r - 1)).add(Count::Exact(1));
        return SizeEstimate {
            vertices: n,
            edges: Count::binomial(n, Count::Exact(r)),
            part_sizes: Vec::new(),
            exact: true,
        };
    }
    let Ok(r) = usize::try_from(r) else {
        return SizeEstimate::astronomical(true);
    };
    let pr = estimate_pr(r, g, strategy);
    if pr.is_astronomical() {
        return pr;
    }
    let a = (r - 1) * (r - 1) + r;
    let copies = Count::binomial(Count::Exact(a as u128), Count::Exact(r as u128));
    let mut est = SizeEstimate {
        vertices: pr.vertices.mul(copies),
        edges: pr.edges.mul(copies),
        part_sizes: factor_part_sizes(&pr.part_sizes, a),
        exact: pr.exact,
    };
    for j in 0..a {
        let sub = estimate_h(est.part_sizes[j], g - 1, strategy);
        if sub.is_astronomical() {
            return SizeEstimate::astronomical(est.exact && sub.exact);
        }
        est.amalgamate(j, sub.vertices, sub.edges, sub.exact);
        if est.is_astronomical() {
            return SizeEstimate::astronomical(est.exact);
        }
    }
    est
}
