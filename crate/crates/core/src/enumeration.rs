//! Explicit enumeration of canonical representatives of forest
//! isomorphism classes, and the memoized brute-force oracle that
//! cross-checks every closed-form count.
//!
//! A forest isomorphism fixes the root order and all colors, and the
//! injectivity constraint allows at most one child of each color under any
//! vertex. A color-indexed child map is therefore a complete isomorphism
//! invariant: one [`ColoredTree`] value per class, and structural equality
//! decides isomorphism.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::combinatorics::{Composition, Count};
use crate::counting::ColorSeq;
use crate::error::Error;

/// A canonical injectively colored rooted tree: a root color plus at most
/// one child per color, keyed (and thus ordered) by child color. Children
/// never repeat the root color, recursively — the injective-coloring
/// constraint is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTree {
    root_color: usize,
    children: BTreeMap<usize, ColoredTree>,
}

impl ColoredTree {
    /// A bare root.
    pub fn leaf(color: usize) -> Self {
        ColoredTree {
            root_color: color,
            children: BTreeMap::new(),
        }
    }

    /// Assemble a tree from a root color and child subtrees. Fails if two
    /// children share a root color or one matches `color`.
    pub fn new(
        color: usize,
        children: impl IntoIterator<Item = ColoredTree>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for child in children {
            if child.root_color == color {
                return Err(Error::invalid(format!("child repeats root color {color}")));
            }
            if map.insert(child.root_color, child).is_some() {
                return Err(Error::invalid("two children share a color"));
            }
        }
        Ok(ColoredTree {
            root_color: color,
            children: map,
        })
    }

    pub fn root_color(&self) -> usize {
        self.root_color
    }

    /// Child subtrees keyed by their root colors, in increasing color order.
    pub fn children(&self) -> &BTreeMap<usize, ColoredTree> {
        &self.children
    }

    pub fn vertex_count(&self) -> u64 {
        1 + self
            .children
            .values()
            .map(ColoredTree::vertex_count)
            .sum::<u64>()
    }

    pub fn max_color(&self) -> usize {
        self.children
            .values()
            .map(ColoredTree::max_color)
            .max()
            .unwrap_or(0)
            .max(self.root_color)
    }

    /// Per-color vertex census over `k` colors.
    pub fn character(&self, k: usize) -> Result<Composition, Error> {
        let mut parts = vec![0u64; k];
        self.tally(&mut parts)?;
        Composition::new(parts)
    }

    fn tally(&self, parts: &mut [u64]) -> Result<(), Error> {
        if self.root_color < 1 || self.root_color > parts.len() {
            return Err(Error::ColorOutOfRange {
                color: self.root_color,
                k: parts.len(),
            });
        }
        parts[self.root_color - 1] += 1;
        for child in self.children.values() {
            child.tally(parts)?;
        }
        Ok(())
    }

    /// Canonical text form: `color ( children... )` with children in
    /// increasing color order and no interior whitespace, e.g. `1()` or
    /// `3(1(2()3())2(1()))`. Injective on isomorphism classes.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s);
        s
    }

    fn write_text(&self, out: &mut String) {
        out.push_str(&self.root_color.to_string());
        out.push('(');
        for child in self.children.values() {
            child.write_text(out);
        }
        out.push(')');
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "color": self.root_color,
            "children": self.children.values().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// A canonical forest: an ordered sequence of trees, one per root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredForest {
    k: usize,
    trees: Vec<ColoredTree>,
}

impl ColoredForest {
    pub fn new(k: usize, trees: Vec<ColoredTree>) -> Result<Self, Error> {
        for t in &trees {
            let mc = t.max_color();
            if mc > k {
                return Err(Error::ColorOutOfRange { color: mc, k });
            }
        }
        Ok(ColoredForest { k, trees })
    }

    pub fn empty(k: usize) -> Self {
        ColoredForest {
            k,
            trees: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn trees(&self) -> &[ColoredTree] {
        &self.trees
    }

    pub fn vertex_count(&self) -> u64 {
        self.trees.iter().map(ColoredTree::vertex_count).sum()
    }

    /// Root colors read off in root order.
    pub fn root_colors(&self) -> ColorSeq {
        ColorSeq::new(self.k, self.trees.iter().map(|t| t.root_color).collect()).unwrap()
    }

    /// Per-color vertex census.
    pub fn character(&self) -> Composition {
        let mut parts = vec![0u64; self.k];
        for t in &self.trees {
            t.tally(&mut parts).unwrap();
        }
        Composition::new(parts).unwrap()
    }

    /// Whitespace-joined canonical texts of the trees, in root order.
    pub fn canonical_text(&self) -> String {
        self.trees
            .iter()
            .map(ColoredTree::canonical_text)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// JSON mirror of the canonical form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "trees": self.trees.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
        })
    }

    /// GraphViz rendering, arrows from each vertex to its children.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        let mut next_id = 0usize;
        for (root_idx, tree) in self.trees.iter().enumerate() {
            let id = dot_node(tree, &mut out, &mut next_id);
            out.push_str(&format!("  root{root_idx} -> n{id} [style=invis];\n"));
            out.push_str(&format!("  root{root_idx} [style=invis,shape=point];\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_node(tree: &ColoredTree, out: &mut String, next_id: &mut usize) -> usize {
    let id = *next_id;
    *next_id += 1;
    out.push_str(&format!("  n{id} [label=\"{}\"];\n", tree.root_color));
    for child in tree.children.values() {
        let cid = dot_node(child, out, next_id);
        out.push_str(&format!("  n{id} -> n{cid};\n"));
    }
    id
}

/// Parse the canonical text form of a forest (tolerates extra whitespace
/// between tokens).
pub fn parse_forest(k: usize, text: &str) -> Result<ColoredForest, Error> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut trees = Vec::new();
    skip_ws(bytes, &mut pos);
    while pos < bytes.len() {
        trees.push(parse_tree(bytes, &mut pos)?);
        skip_ws(bytes, &mut pos);
    }
    ColoredForest::new(k, trees)
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<ColoredTree, Error> {
    skip_ws(bytes, pos);
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::invalid(format!("expected a color at byte {start}")));
    }
    let color: usize = std::str::from_utf8(&bytes[start..*pos])
        .unwrap()
        .parse()
        .map_err(|_| Error::invalid("color out of range"))?;
    skip_ws(bytes, pos);
    if *pos >= bytes.len() || bytes[*pos] != b'(' {
        return Err(Error::invalid(format!("expected '(' at byte {}", *pos)));
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        skip_ws(bytes, pos);
        if *pos >= bytes.len() {
            return Err(Error::invalid("unterminated tree"));
        }
        if bytes[*pos] == b')' {
            *pos += 1;
            break;
        }
        children.push(parse_tree(bytes, pos)?);
    }
    ColoredTree::new(color, children)
}

/// All ways to pick a sub-census `nu <= rem` componentwise (lexicographic
/// order).
fn sub_characters(rem: &Composition) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; rem.k()];
    loop {
        out.push(Composition::new(cur.clone()).unwrap());
        // odometer over the box [0, rem]
        let mut i = rem.k();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < rem.parts()[i] {
                cur[i] += 1;
                for v in cur[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Enumerate one canonical tree per isomorphism class with character
/// `lambda` and root colored `c`. Deterministic order: by child-color
/// subset, then by the character split, then recursively. Empty when the
/// character is infeasible.
pub fn enumerate_trees(lambda: &Composition, c: usize) -> Result<Vec<ColoredTree>, Error> {
    let k = lambda.k();
    if c < 1 || c > k {
        return Err(Error::ColorOutOfRange { color: c, k });
    }
    if k > 31 {
        // child color subsets are enumerated through a u32 mask
        return Err(Error::invalid("at most 31 colors are supported"));
    }
    Ok(trees_rec(lambda, c))
}

fn trees_rec(lambda: &Composition, c: usize) -> Vec<ColoredTree> {
    let Some(rem) = lambda.minus_unit(c) else {
        return Vec::new();
    };
    let k = lambda.k();
    let other_colors: Vec<usize> = (1..=k).filter(|&i| i != c).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << other_colors.len()) {
        let subset: Vec<usize> = other_colors
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        split_children(&rem, &subset, &mut Vec::new(), &mut |children| {
            out.push(ColoredTree::new(c, children.to_vec()).unwrap());
        });
    }
    out
}

/// Distribute `rem` over child subtrees rooted in exactly the colors of
/// `subset` (each nonempty), invoking `emit` for every complete choice.
fn split_children(
    rem: &Composition,
    subset: &[usize],
    acc: &mut Vec<ColoredTree>,
    emit: &mut impl FnMut(&[ColoredTree]),
) {
    match subset {
        [] => {
            if rem.is_zero() {
                emit(acc);
            }
        }
        [color, rest @ ..] => {
            for nu in sub_characters(rem) {
                if nu.part(*color) == 0 {
                    continue;
                }
                if rest.is_empty() && nu != *rem {
                    continue;
                }
                let left = rem.checked_sub(&nu).unwrap();
                for sub in trees_rec(&nu, *color) {
                    acc.push(sub);
                    split_children(&left, rest, acc, emit);
                    acc.pop();
                }
            }
        }
    }
}

/// Enumerate one canonical forest per isomorphism class with character
/// `lambda` and root colors `roots`: all splits of `lambda` into per-root
/// characters, crossed with the per-root tree enumerations.
pub fn enumerate_forests(
    lambda: &Composition,
    roots: &ColorSeq,
) -> Result<Vec<ColoredForest>, Error> {
    if lambda.k() != roots.k() {
        return Err(Error::ColorCountMismatch {
            expected: lambda.k(),
            got: roots.k(),
        });
    }
    if lambda.k() > 31 {
        return Err(Error::invalid("at most 31 colors are supported"));
    }
    let mut out = Vec::new();
    split_roots(
        lambda,
        roots.entries(),
        roots.k(),
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

fn split_roots(
    rem: &Composition,
    root_colors: &[usize],
    k: usize,
    acc: &mut Vec<ColoredTree>,
    out: &mut Vec<ColoredForest>,
) {
    match root_colors {
        [] => {
            if rem.is_zero() {
                out.push(ColoredForest::new(k, acc.clone()).unwrap());
            }
        }
        [color, rest @ ..] => {
            for nu in sub_characters(rem) {
                if nu.part(*color) == 0 {
                    continue;
                }
                if rest.is_empty() && nu != *rem {
                    continue;
                }
                let left = rem.checked_sub(&nu).unwrap();
                for tree in trees_rec(&nu, *color) {
                    acc.push(tree);
                    split_roots(&left, rest, k, acc, out);
                    acc.pop();
                }
            }
        }
    }
}

/// Default weight guard for [`brute_count`]: characters up to this weight
/// stay comfortably inside the memoized convolution's reach.
pub const DEFAULT_BRUTE_LIMIT: u64 = 12;

/// A memoized counter of tree classes by (character, root color). One
/// counter may serve many queries; the memo only ever grows. For
/// concurrent use give each thread its own counter — results are
/// identical either way.
#[derive(Debug, Default)]
pub struct BruteCounter {
    tree_memo: HashMap<(Vec<u64>, usize), Count>,
}

impl BruteCounter {
    pub fn new() -> Self {
        BruteCounter::default()
    }

    /// Count forest classes by summing, over all splits of `lambda` into
    /// per-root characters, the products of memoized tree counts. Never
    /// materializes a single tree.
    pub fn count_forests(
        &mut self,
        lambda: &Composition,
        roots: &ColorSeq,
    ) -> Result<Count, Error> {
        if lambda.k() != roots.k() {
            return Err(Error::ColorCountMismatch {
                expected: lambda.k(),
                got: roots.k(),
            });
        }
        Ok(self.forest_conv(lambda, roots.entries()))
    }

    fn forest_conv(&mut self, rem: &Composition, root_colors: &[usize]) -> Count {
        match root_colors {
            [] => {
                if rem.is_zero() {
                    Count::one()
                } else {
                    Count::zero()
                }
            }
            [color, rest @ ..] => {
                let mut total = Count::zero();
                for nu in sub_characters(rem) {
                    let t = self.tree_count(&nu, *color);
                    if t.is_zero() {
                        continue;
                    }
                    let left = rem.checked_sub(&nu).unwrap();
                    total += t * self.forest_conv(&left, rest);
                }
                total
            }
        }
    }

    /// Count tree classes via the root-decomposition convolution: strip
    /// the root, then distribute the remaining census over at most one
    /// subtree per remaining color.
    pub fn tree_count(&mut self, lambda: &Composition, c: usize) -> Count {
        if lambda.part(c) == 0 {
            return Count::zero();
        }
        let key = (lambda.parts().to_vec(), c);
        if let Some(v) = self.tree_memo.get(&key) {
            return v.clone();
        }
        let rem = lambda.minus_unit(c).unwrap();
        let other_colors: Vec<usize> = (1..=lambda.k()).filter(|&i| i != c).collect();
        let v = self.child_conv(&rem, &other_colors);
        self.tree_memo.insert(key, v.clone());
        v
    }

    /// Convolution over optional children: each color takes either the
    /// empty census (no child of that color) or a census it can root.
    fn child_conv(&mut self, rem: &Composition, colors: &[usize]) -> Count {
        match colors {
            [] => {
                if rem.is_zero() {
                    Count::one()
                } else {
                    Count::zero()
                }
            }
            [color, rest @ ..] => {
                let mut total = Count::zero();
                for nu in sub_characters(rem) {
                    let factor = if nu.is_zero() {
                        Count::one()
                    } else {
                        self.tree_count(&nu, *color)
                    };
                    if factor.is_zero() {
                        continue;
                    }
                    let left = rem.checked_sub(&nu).unwrap();
                    total += factor * self.child_conv(&left, rest);
                }
                total
            }
        }
    }
}

/// Brute-force count of forest classes with the default size guard.
/// Independent of the closed-form route: this is the oracle the formulas
/// are checked against.
pub fn brute_count(lambda: &Composition, roots: &ColorSeq) -> Result<Count, Error> {
    brute_count_with_limit(lambda, roots, DEFAULT_BRUTE_LIMIT)
}

/// [`brute_count`] with an explicit weight guard.
pub fn brute_count_with_limit(
    lambda: &Composition,
    roots: &ColorSeq,
    limit: u64,
) -> Result<Count, Error> {
    if lambda.total() > limit {
        return Err(Error::SizeGuardExceeded {
            weight: lambda.total(),
            limit,
        });
    }
    BruteCounter::new().count_forests(lambda, roots)
}

/// Delete the last root and all arrows out of it; its children become new
/// roots appended in increasing color order. Returns the reduced forest
/// and the set of child colors. Inverse of [`attach_root`].
pub fn delete_last_root(forest: &ColoredForest) -> Result<(ColoredForest, Vec<usize>), Error> {
    let Some((last, rest)) = forest.trees.split_last() else {
        return Err(Error::EmptyForest);
    };
    let mut trees = rest.to_vec();
    let colors: Vec<usize> = last.children.keys().copied().collect();
    trees.extend(last.children.values().cloned());
    Ok((ColoredForest::new(forest.k, trees)?, colors))
}

/// Attach a new `color`-rooted last root whose children are the current
/// last `|subset|` roots, whose colors must be exactly `subset` in
/// increasing order. Inverse of [`delete_last_root`].
pub fn attach_root(
    forest: &ColoredForest,
    subset: &[usize],
    color: usize,
) -> Result<ColoredForest, Error> {
    if color < 1 || color > forest.k {
        return Err(Error::ColorOutOfRange { color, k: forest.k });
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("subset must be strictly increasing"));
    }
    if subset.contains(&color) {
        return Err(Error::invalid(format!(
            "new root color {color} may not appear in the attached subset"
        )));
    }
    if subset.len() > forest.trees.len() {
        return Err(Error::invalid("fewer roots than subset colors"));
    }
    let cut = forest.trees.len() - subset.len();
    let tail_colors: Vec<usize> = forest.trees[cut..].iter().map(|t| t.root_color).collect();
    if tail_colors != subset {
        return Err(Error::invalid(format!(
            "trailing root colors {tail_colors:?} do not match subset {subset:?}"
        )));
    }
    let mut trees = forest.trees[..cut].to_vec();
    trees.push(ColoredTree::new(
        color,
        forest.trees[cut..].iter().cloned(),
    )?);
    ColoredForest::new(forest.k, trees)
}

/// The root decomposition: the (possibly empty) map from child color to
/// child subtree. Reassembling with [`ColoredTree::new`] reproduces the
/// tree.
pub fn decompose_tree(tree: &ColoredTree) -> BTreeMap<usize, ColoredTree> {
    tree.children.clone()
}
