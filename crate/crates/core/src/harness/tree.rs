//! The semigroup tree.
//!
//! The root is `N0`. The children of `S` are `S \ {g}` for the minimal
//! generators `g > f(S)`, in ascending order of `g`. Every numerical
//! semigroup appears exactly once, at depth equal to its genus. Removing an
//! element never lowers the multiplicity and always raises the Frobenius
//! number to `g`, so both bounds prune whole subtrees.

use crate::error::Result;
use crate::semigroup::NumericalSemigroup;

use super::{EnumSpec, Execution};

#[derive(Debug, Clone)]
struct Node {
    gens: Vec<i64>,
    frobenius: i64,
    genus: usize,
    gaps: Vec<u64>,
}

impl Node {
    fn root() -> Self {
        Node {
            gens: vec![1],
            frobenius: -1,
            genus: 0,
            gaps: Vec::new(),
        }
    }

    fn is_gap(&self, n: i64) -> bool {
        n >= 0 && n <= self.frobenius && self.gaps[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    fn multiplicity(&self) -> i64 {
        self.gens[0]
    }

    /// `S \ {g}` for a minimal generator `g > f`.
    ///
    /// A new minimal generator is either an old one or irreducible of the
    /// form `g + a` (`a` a minimal generator, possibly `g`) or `3g`.
    fn child(&self, g: i64) -> Node {
        let mut gaps = self.gaps.clone();
        gaps.resize(g as usize / 64 + 1, 0);
        gaps[(g / 64) as usize] |= 1 << (g % 64);
        let member = |n: i64| n >= 0 && n != g && !self.is_gap(n);
        let mut candidates: Vec<i64> = self.gens.iter().filter(|&&a| a != g).copied().collect();
        candidates.extend(self.gens.iter().map(|&a| g + a));
        candidates.push(3 * g);
        candidates.sort_unstable();
        candidates.dedup();
        let gens = candidates
            .into_iter()
            .filter(|&c| member(c) && !(1..=c / 2).any(|x| member(x) && member(c - x)))
            .collect();
        Node {
            gens,
            frobenius: g,
            genus: self.genus + 1,
            gaps,
        }
    }

    /// Children that can still lead to semigroups inside the bounds.
    fn children(&self, spec: &EnumSpec) -> Vec<Node> {
        if matches!(spec.genus_max, Some(max) if self.genus >= max) {
            return Vec::new();
        }
        let cap = spec.multiplicity_cap();
        self.gens
            .iter()
            .copied()
            .filter(|&g| g > self.frobenius)
            .filter(|&g| spec.frobenius_max.is_none_or(|fm| g <= fm))
            .map(|g| self.child(g))
            .filter(|c| cap.is_none_or(|m| c.multiplicity() <= m))
            .collect()
    }

    fn in_bounds(&self, spec: &EnumSpec) -> bool {
        let e = self.multiplicity();
        spec.multiplicity.is_none_or(|m| e == m)
            && spec.multiplicity_max.is_none_or(|m| e <= m)
            && spec.filter.precheck(self.frobenius, self.genus, self.gens.len() >= 2)
    }

    fn emit(&self, spec: &EnumSpec) -> Option<Result<NumericalSemigroup>> {
        if !self.in_bounds(spec) {
            return None;
        }
        let built = NumericalSemigroup::from_generators(&self.gens).and_then(|s| {
            debug_assert_eq!(s.generators(), &self.gens[..]);
            Ok(spec.filter.accepts(&s)?.then_some(s))
        });
        built.transpose()
    }
}

/// Depth-first pre-order stream over the semigroups admitted by a spec.
pub struct SemigroupIter {
    spec: EnumSpec,
    stack: Vec<Node>,
}

impl SemigroupIter {
    fn from_node(spec: EnumSpec, node: Node) -> Self {
        SemigroupIter {
            spec,
            stack: vec![node],
        }
    }
}

impl Iterator for SemigroupIter {
    type Item = Result<NumericalSemigroup>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(node) = self.stack.pop() {
            let mut children = node.children(&self.spec);
            children.reverse();
            self.stack.extend(children);
            if let Some(item) = node.emit(&self.spec) {
                return Some(item);
            }
        }
        None
    }
}

/// Stream every semigroup admitted by `spec`, sequentially.
pub fn enumerate_semigroups(spec: &EnumSpec) -> Result<SemigroupIter> {
    spec.validate()?;
    Ok(SemigroupIter::from_node(spec.clone(), Node::root()))
}

enum WorkItem {
    /// Emit only this node; its children are separate items.
    Single(Node),
    /// Emit the whole subtree below and including this node.
    Subtree(Node),
}

/// Split the tree into items whose concatenation is the pre-order stream.
fn work_items(spec: &EnumSpec, target: usize) -> Vec<WorkItem> {
    let mut items = vec![WorkItem::Subtree(Node::root())];
    for _ in 0..16 {
        let open = items.iter().filter(|i| matches!(i, WorkItem::Subtree(_))).count();
        if open >= target || open == 0 {
            break;
        }
        let mut next = Vec::with_capacity(items.len() * 2);
        for item in items {
            match item {
                WorkItem::Subtree(node) => {
                    let children = node.children(spec);
                    next.push(WorkItem::Single(node));
                    next.extend(children.into_iter().map(WorkItem::Subtree));
                }
                single => next.push(single),
            }
        }
        items = next;
    }
    items
}

fn run_item<R>(
    spec: &EnumSpec,
    item: &WorkItem,
    f: &(impl Fn(NumericalSemigroup) -> R + Sync),
) -> Result<Vec<R>> {
    match item {
        WorkItem::Single(node) => node.emit(spec).map(|s| s.map(f)).into_iter().collect(),
        WorkItem::Subtree(node) => SemigroupIter::from_node(spec.clone(), node.clone())
            .map(|s| s.map(f))
            .collect(),
    }
}

/// Apply `f` to every admitted semigroup, keeping the pre-order of the
/// sequential stream. Semigroups are built and dropped inside the workers,
/// so only the results are held in memory.
pub fn map_semigroups<R: Send>(
    spec: &EnumSpec,
    exec: Execution,
    f: impl Fn(NumericalSemigroup) -> R + Sync,
) -> Result<Vec<R>> {
    spec.validate()?;
    match exec {
        Execution::Sequential => enumerate_semigroups(spec)?.map(|s| s.map(&f)).collect(),
        Execution::Parallel => parallel_map(spec, &f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<R: Send>(
    spec: &EnumSpec,
    f: &(impl Fn(NumericalSemigroup) -> R + Sync),
) -> Result<Vec<R>> {
    use rayon::prelude::*;

    let items = work_items(spec, 8 * rayon::current_num_threads());
    let chunks: Vec<Result<Vec<R>>> = items.par_iter().map(|item| run_item(spec, item, f)).collect();
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<R: Send>(
    spec: &EnumSpec,
    f: &(impl Fn(NumericalSemigroup) -> R + Sync),
) -> Result<Vec<R>> {
    let mut out = Vec::new();
    for item in work_items(spec, 1) {
        out.extend(run_item(spec, &item, f)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Filter;

    fn labels(spec: &EnumSpec) -> Vec<String> {
        enumerate_semigroups(spec)
            .unwrap()
            .map(|s| s.unwrap().label())
            .collect()
    }

    #[test]
    fn genus_two() {
        assert_eq!(
            labels(&EnumSpec::by_genus(2)),
            vec!["<1>", "<2,3>", "<3,4,5>", "<2,5>"]
        );
    }

    #[test]
    fn counts_by_genus() {
        let mut counts = vec![0; 5];
        for s in enumerate_semigroups(&EnumSpec::by_genus(4)).unwrap() {
            counts[s.unwrap().genus()] += 1;
        }
        assert_eq!(counts, vec![1, 1, 2, 4, 7]);
    }

    #[test]
    fn symmetric_multiplicity_five() {
        let spec = EnumSpec::by_multiplicity(5, 19).with_filter(Filter::Symmetric);
        let found = labels(&spec);
        assert!(found.contains(&"<5,6,9>".to_string()));
        assert!(found.contains(&"<5,8,12>".to_string()));
        assert!(found.iter().all(|l| l.starts_with("<5,")));
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = EnumSpec::by_genus(9);
        let seq = map_semigroups(&spec, Execution::Sequential, |s| s.label()).unwrap();
        let par = map_semigroups(&spec, Execution::Parallel, |s| s.label()).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.len(), 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118);
    }
}
