//! Triangulations of the convex n-gon, their essentially unique proper
//! 3-colorings, and the bijection with injectively 3-colored rooted trees.
//!
//! Vertices are `0..n-1` counterclockwise with the base edge `{0, 1}`;
//! vertex 0 is the left base endpoint and is colored 1, vertex 1 the right
//! endpoint, colored 2. All geometry reduces to index arithmetic on the
//! circle — no floating point anywhere.

use std::collections::BTreeSet;

use crate::combinatorics::{fuss_catalan, Composition, Count, Partition};
use crate::counting::count_triangulations_by_type;
use crate::enumeration::ColoredTree;
use crate::error::Error;
use crate::table::{CountTable, TableLayout};

/// A triangulation of the convex n-gon, stored as its set of `n - 3`
/// pairwise non-crossing diagonals `{a, b}` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

/// Two chords of the circle cross iff their endpoints strictly interleave.
fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((p, q), (r, s)) = (a, b);
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

impl Triangulation {
    /// Validate and build a triangulation from its diagonal set.
    pub fn new(n: usize, diagonals: BTreeSet<(usize, usize)>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::invalid("triangulations need n >= 3"));
        }
        if diagonals.len() != n - 3 {
            return Err(Error::invalid(format!(
                "a triangulation of the {n}-gon has {} diagonals, got {}",
                n - 3,
                diagonals.len()
            )));
        }
        for &(a, b) in &diagonals {
            if a >= b || b >= n {
                return Err(Error::invalid(format!(
                    "diagonal ({a},{b}) out of range for n = {n}"
                )));
            }
            if b - a < 2 || (a == 0 && b == n - 1) {
                return Err(Error::invalid(format!(
                    "({a},{b}) is a polygon side, not a diagonal"
                )));
            }
        }
        let list: Vec<_> = diagonals.iter().copied().collect();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if crosses(list[i], list[j]) {
                    return Err(Error::invalid(format!(
                        "diagonals {:?} and {:?} cross",
                        list[i], list[j]
                    )));
                }
            }
        }
        Ok(Triangulation { n, diagonals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    fn is_chord(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi - lo == 1 || (lo == 0 && hi == self.n - 1) {
            return true;
        }
        self.diagonals.contains(&(lo, hi))
    }

    /// The apex of the triangle sitting on the chord `{a, b}` inside the
    /// counterclockwise arc from `a` to `b`.
    fn apex(&self, a: usize, b: usize) -> usize {
        let mut w = (a + 1) % self.n;
        while w != b {
            if self.is_chord(a, w) && self.is_chord(w, b) {
                return w;
            }
            w = (w + 1) % self.n;
        }
        unreachable!("no apex on chord ({a},{b}): invalid triangulation state")
    }

    /// The `n - 2` triangles, as vertex triples, in the base-first
    /// traversal order of the dual tree.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.n - 2);
        let mut stack = vec![(1usize, 0usize)];
        while let Some((a, b)) = stack.pop() {
            let w = self.apex(a, b);
            out.push((a, w, b));
            if (w + self.n - a) % self.n >= 2 {
                stack.push((a, w));
            }
            if (b + self.n - w) % self.n >= 2 {
                stack.push((w, b));
            }
        }
        out
    }

    /// Coordinate-free text form: the diagonal set.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self
            .diagonals
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        format!("{{{}}}", body.join(","))
    }

    /// JSON description: polygon size plus diagonal list.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "diagonals": self.diagonals.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
        })
    }

    /// GraphViz rendering of the polygon edges and diagonals.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  v{v};\n"));
        }
        for v in 0..self.n {
            out.push_str(&format!("  v{v} -- v{};\n", (v + 1) % self.n));
        }
        for (a, b) in &self.diagonals {
            out.push_str(&format!("  v{a} -- v{b} [style=dashed];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The proper 3-coloring of a triangulation, normalized so the base edge
/// endpoints are colored 1 and 2, together with its sorted census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriColoring {
    colors: Vec<usize>,
    census: Partition,
}

impl TriColoring {
    /// Color of vertex `v`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The type of the triangulation: the color census sorted weakly
    /// decreasing.
    pub fn census(&self) -> &Partition {
        &self.census
    }

    /// The unsorted census (how many vertices of colors 1, 2, 3).
    pub fn character(&self) -> Composition {
        let mut parts = vec![0u64; 3];
        for &c in &self.colors {
            parts[c - 1] += 1;
        }
        Composition::new(parts).unwrap()
    }
}

/// Enumerate all `C_{n-2}` triangulations of the convex n-gon exactly
/// once, by recursive choice of the triangle on each chord. Deterministic
/// order (apex ascending along the arc at every level).
pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    assert!(n >= 3, "triangulations need n >= 3");
    let mut out = Vec::new();
    let mut acc = BTreeSet::new();
    fill_region(n, 1, 0, &mut acc, &mut out);
    out
}

fn fill_region(
    n: usize,
    a: usize,
    b: usize,
    acc: &mut BTreeSet<(usize, usize)>,
    out: &mut Vec<Triangulation>,
) {
    let arc = (b + n - a) % n;
    if arc < 2 {
        out.push(Triangulation {
            n,
            diagonals: acc.clone(),
        });
        return;
    }
    // Regions still to fill are processed one at a time; choosing the apex
    // on (a, b) splits it in two, handled by recursing on the left region
    // and leaving the right on the chord stack implicitly via recursion.
    fill_split(n, &mut vec![(a, b)], acc, out);
}

fn fill_split(
    n: usize,
    regions: &mut Vec<(usize, usize)>,
    acc: &mut BTreeSet<(usize, usize)>,
    out: &mut Vec<Triangulation>,
) {
    let Some((a, b)) = regions.pop() else {
        out.push(Triangulation {
            n,
            diagonals: acc.clone(),
        });
        return;
    };
    let arc = (b + n - a) % n;
    if arc < 2 {
        fill_split(n, regions, acc, out);
        regions.push((a, b));
        return;
    }
    let mut w = (a + 1) % n;
    loop {
        let left_arc = (w + n - a) % n;
        let right_arc = (b + n - w) % n;
        let left_diag = left_arc >= 2;
        let right_diag = right_arc >= 2;
        if left_diag {
            acc.insert(norm_pair(a, w));
        }
        if right_diag {
            acc.insert(norm_pair(w, b));
        }
        if left_diag {
            regions.push((a, w));
        }
        if right_diag {
            regions.push((w, b));
        }
        fill_split(n, regions, acc, out);
        if right_diag {
            regions.pop();
            acc.remove(&norm_pair(w, b));
        }
        if left_diag {
            regions.pop();
            acc.remove(&norm_pair(a, w));
        }
        if w == (b + n - 1) % n {
            break;
        }
        w = (w + 1) % n;
    }
    regions.push((a, b));
}

fn norm_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The unique proper 3-coloring with vertex 0 colored 1 and vertex 1
/// colored 2, obtained by propagating forced colors across shared triangle
/// edges outward from the base triangle.
pub fn proper_three_coloring(t: &Triangulation) -> TriColoring {
    let mut colors = vec![0usize; t.n];
    colors[0] = 1;
    colors[1] = 2;
    let mut stack = vec![(1usize, 0usize)];
    while let Some((a, b)) = stack.pop() {
        let arc = (b + t.n - a) % t.n;
        if arc < 2 {
            continue;
        }
        let w = t.apex(a, b);
        colors[w] = 6 - colors[a] - colors[b];
        stack.push((a, w));
        stack.push((w, b));
    }
    let mut parts = vec![0u64; 3];
    for &c in &colors {
        parts[c - 1] += 1;
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    TriColoring {
        colors,
        census: Partition::new(parts).unwrap(),
    }
}

/// The type of a triangulation: its color census sorted weakly decreasing.
pub fn type_of(t: &Triangulation) -> Partition {
    proper_three_coloring(t).census().clone()
}

/// True iff the proper 3-coloring is equitable (class sizes pairwise
/// within one), i.e. the type is
/// `(ceil(n/3), n - ceil(n/3) - floor(n/3), floor(n/3))`.
pub fn is_equitable(t: &Triangulation) -> bool {
    let ty = type_of(t);
    ty.part(1) - ty.part(3) <= 1
}

/// The dual-tree bijection onto injectively 3-colored rooted trees with
/// `n - 2` vertices and root colored 3. The root is the base triangle;
/// every other dual vertex is colored by the unique color missing from the
/// crossed diagonal's endpoints.
pub fn chi(t: &Triangulation) -> ColoredTree {
    let coloring = proper_three_coloring(t);
    chi_node(t, coloring.colors(), 1, 0)
}

fn chi_node(t: &Triangulation, colors: &[usize], a: usize, b: usize) -> ColoredTree {
    let w = t.apex(a, b);
    let node_color = 6 - colors[a] - colors[b];
    let mut children = Vec::new();
    if (w + t.n - a) % t.n >= 2 {
        children.push(chi_node(t, colors, a, w));
    }
    if (b + t.n - w) % t.n >= 2 {
        children.push(chi_node(t, colors, w, b));
    }
    ColoredTree::new(node_color, children).unwrap()
}

/// Constructive inverse of [`chi`]: rebuild the triangulation outward
/// from the base edge, the subtree sizes fixing each apex position and the
/// child colors fixing which side each subtree fills. Requires the root
/// colored 3 and colors within `{1, 2, 3}`.
pub fn chi_inverse(tree: &ColoredTree) -> Result<Triangulation, Error> {
    if tree.root_color() != 3 {
        return Err(Error::invalid(format!(
            "dual tree roots are colored 3, got {}",
            tree.root_color()
        )));
    }
    if tree.max_color() > 3 {
        return Err(Error::ColorOutOfRange {
            color: tree.max_color(),
            k: 3,
        });
    }
    let n = tree.vertex_count() as usize + 2;
    let mut colors = vec![0usize; n];
    colors[0] = 1;
    colors[1] = 2;
    let mut diagonals = BTreeSet::new();
    rebuild(tree, 1, 0, n, &mut colors, &mut diagonals);
    Triangulation::new(n, diagonals)
}

fn rebuild(
    node: &ColoredTree,
    a: usize,
    b: usize,
    n: usize,
    colors: &mut [usize],
    diagonals: &mut BTreeSet<(usize, usize)>,
) {
    // On chord {a,b} the apex takes the missing color; a child filling the
    // arc side next to `a` is forced to color of `b` and vice versa.
    let node_color = 6 - colors[a] - colors[b];
    debug_assert_eq!(node_color, node.root_color());
    let left = node.children().get(&colors[b]);
    let right = node.children().get(&colors[a]);
    let left_size = left.map_or(0, |t| t.vertex_count()) as usize;
    let w = (a + left_size + 1) % n;
    colors[w] = node_color;
    if let Some(sub) = left {
        diagonals.insert(norm_pair(a, w));
        rebuild(sub, a, w, n, colors, diagonals);
    }
    if let Some(sub) = right {
        diagonals.insert(norm_pair(w, b));
        rebuild(sub, w, b, n, colors, diagonals);
    }
}

/// The triangulation type census for the n-gon.
///
/// The formula path evaluates the closed-form type count on every 3-part
/// partition of `n`; the brute path enumerates all triangulations and bins
/// them by type. Both produce the same table shape (rows in descending
/// lexicographic partition order, zero-count types omitted, the Catalan
/// number `C_{n-2}` as the checksum total) so they can be diffed cell by
/// cell.
pub fn census(n: usize, brute: bool) -> Result<CountTable, Error> {
    if n < 3 {
        return Err(Error::invalid("census needs n >= 3"));
    }
    let total = fuss_catalan(n as u64 - 2, 2, 1).unwrap();
    let mut entries: Vec<(Vec<u64>, Count)> = Vec::new();
    if brute {
        let mut bins: std::collections::BTreeMap<Vec<u64>, Count> = Default::default();
        for t in enumerate_triangulations(n) {
            let ty = type_of(&t).parts().to_vec();
            *bins.entry(ty).or_default() += Count::from(1u32);
        }
        // descending lexicographic rows, matching the formula path
        entries = bins.into_iter().rev().collect();
    } else {
        for lambda in crate::combinatorics::partitions(3, n as u64) {
            let c = count_triangulations_by_type(n as u64, &lambda)?;
            if !num_traits::Zero::is_zero(&c) {
                entries.push((lambda.parts().to_vec(), c));
            }
        }
    }
    let mut params = std::collections::BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert(
        "path".to_string(),
        if brute { "brute" } else { "formula" }.to_string(),
    );
    Ok(CountTable {
        formula: "tri".to_string(),
        params,
        layout: TableLayout::Keyed {
            key_name: "lambda".to_string(),
            entries,
        },
        total,
    })
}
