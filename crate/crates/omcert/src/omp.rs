//! Pivoting programs on a chirotope and detection of monotone cycles.
//!
//! A program fixes two distinct elements: an objective `f` and a reference
//! element `g` that plays the role of the hyperplane at infinity. Its states
//! are affine bases: (r-1)-subsets B avoiding f and g with chi(B + g) != 0.
//! Each basis has a vertex cocircuit, and two bases sharing r-2 elements are
//! linked by a pivot that is degenerate, horizontal, or strictly monotone in
//! f. The pivot graph keeps strictly increasing pivots one way and
//! degenerate/horizontal pivots both ways; a directed cycle through a
//! strictly increasing pivot means f increases along a closed walk, which no
//! affine realization allows. A chirotope all of whose programs lack such
//! cycles is called Euclidean here.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::chirotope::Chirotope;
use crate::combinatorics::subsets_of;
use crate::sign::{ElementId, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmpError {
    #[error("objective and reference element must differ")]
    EqualPair,
    #[error("element {0} outside ground set 1..={1}")]
    OutOfRange(u32, u32),
    #[error("set is not an affine basis of this program")]
    NotAffineBasis,
    #[error("bases do not share exactly r-2 elements")]
    NotAdjacent,
    #[error("pivot is degenerate: both bases have the same vertex")]
    DegeneratePivot,
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),
}

/// Sorted (r-1)-subset of the ground set avoiding f and g, independent with g.
pub type AffineBasis = Vec<ElementId>;

/// Sign vector of a covector, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocircuit {
    signs: Vec<Sign>,
}

impl Cocircuit {
    pub fn sign(&self, e: ElementId) -> Sign {
        self.signs[e.index0()]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PivotKind {
    Degenerate,
    Horizontal,
    StrictlyIncreasing,
    StrictlyDecreasing,
}

impl PivotKind {
    pub fn letter(self) -> &'static str {
        match self {
            PivotKind::Degenerate => "D",
            PivotKind::Horizontal => "H",
            PivotKind::StrictlyIncreasing => "S",
            PivotKind::StrictlyDecreasing => "SD",
        }
    }
}

/// Directed edge of the pivot graph between adjacent affine bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub from: usize,
    pub to: usize,
    pub shared: Vec<ElementId>,
    pub leaving: ElementId,
    pub entering: ElementId,
    pub kind: PivotKind,
}

/// Pivot graph of one program. Strictly increasing pivots appear once, in
/// their direction; degenerate and horizontal pivots appear in both
/// directions; strictly decreasing pivots are the reverses of increasing ones
/// and are not stored.
#[derive(Clone, Debug, Default)]
pub struct PivotGraph {
    pub nodes: Vec<AffineBasis>,
    pub pivots: Vec<Pivot>,
    adjacency: Vec<Vec<usize>>,
}

impl PivotGraph {
    fn from_parts(nodes: Vec<AffineBasis>, pivots: Vec<Pivot>) -> PivotGraph {
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (idx, p) in pivots.iter().enumerate() {
            adjacency[p.from].push(idx);
        }
        PivotGraph { nodes, pivots, adjacency }
    }

    /// Outgoing pivot indices of a node.
    pub fn outgoing(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }
}

/// One step of a closed pivot walk: `shared + leaving` pivots to
/// `shared + entering`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePivot {
    pub shared: Vec<ElementId>,
    pub leaving: ElementId,
    pub entering: ElementId,
    pub kind: PivotKind,
}

/// A closed walk in the pivot graph containing a strictly increasing pivot
/// and no strictly decreasing one: a witness that the program violates the
/// monotone path property of affine realizations. Pivot i leads from
/// `bases[i]` to `bases[(i+1) % len]`, and the walk starts with its strictly
/// increasing pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonDegenerateCycle {
    pub bases: Vec<AffineBasis>,
    pub pivots: Vec<CyclePivot>,
}

impl NonDegenerateCycle {
    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Structural consistency: matching lengths, every pivot connecting its
    /// adjacent bases, at least three pivots, a strictly increasing pivot
    /// first, and no strictly decreasing pivots.
    pub fn check_structure(&self) -> Result<(), OmpError> {
        let m = self.pivots.len();
        if m < 3 {
            return Err(OmpError::MalformedCycle(format!("only {m} pivots")));
        }
        if self.bases.len() != m {
            return Err(OmpError::MalformedCycle("base and pivot counts differ".into()));
        }
        if self.pivots[0].kind != PivotKind::StrictlyIncreasing {
            return Err(OmpError::MalformedCycle("walk must open with a strict increase".into()));
        }
        for (i, p) in self.pivots.iter().enumerate() {
            if p.kind == PivotKind::StrictlyDecreasing {
                return Err(OmpError::MalformedCycle(format!("pivot {i} decreases")));
            }
            let mut from = p.shared.clone();
            from.push(p.leaving);
            from.sort();
            let mut to = p.shared.clone();
            to.push(p.entering);
            to.sort();
            if from != self.bases[i] {
                return Err(OmpError::MalformedCycle(format!("pivot {i} does not leave base {i}")));
            }
            if to != self.bases[(i + 1) % m] {
                return Err(OmpError::MalformedCycle(format!("pivot {i} misses the next base")));
            }
        }
        Ok(())
    }

    pub fn dump(&self, f: ElementId, g: ElementId) -> String {
        let mut out = format!("f={f} g={g}\n");
        for p in &self.pivots {
            let shared = p.shared.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
            let _ = writeln!(
                out,
                "L={{{shared}}} a={} b={} kind={}",
                p.leaving,
                p.entering,
                p.kind.letter()
            );
        }
        out
    }
}

/// Outcome of scanning every program of a chirotope for monotone cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EuclideanDecision {
    Euclidean,
    NonEuclidean { f: ElementId, g: ElementId, cycle: NonDegenerateCycle },
}

impl EuclideanDecision {
    pub fn is_euclidean(&self) -> bool {
        matches!(self, EuclideanDecision::Euclidean)
    }
}

/// A pivoting program on a chirotope with objective f and reference g.
#[derive(Clone, Copy, Debug)]
pub struct OMProgram<'a> {
    chi: &'a Chirotope,
    f: ElementId,
    g: ElementId,
}

impl<'a> OMProgram<'a> {
    pub fn new(chi: &'a Chirotope, f: ElementId, g: ElementId) -> Result<Self, OmpError> {
        if f == g {
            return Err(OmpError::EqualPair);
        }
        for e in [f, g] {
            if e.0 < 1 || e.0 > chi.n() {
                return Err(OmpError::OutOfRange(e.0, chi.n()));
            }
        }
        Ok(OMProgram { chi, f, g })
    }

    pub fn objective(&self) -> ElementId {
        self.f
    }

    pub fn reference(&self) -> ElementId {
        self.g
    }

    pub fn chirotope(&self) -> &'a Chirotope {
        self.chi
    }

    fn is_affine_basis(&self, basis: &[ElementId]) -> bool {
        basis.len() + 1 == self.chi.r() as usize
            && basis.windows(2).all(|w| w[0] < w[1])
            && basis.iter().all(|&e| e != self.f && e != self.g && e.0 >= 1 && e.0 <= self.chi.n())
            && !self.chi_with(basis, &[self.g]).is_zero()
    }

    /// chi on `head` followed by `tail`.
    fn chi_with(&self, head: &[ElementId], tail: &[ElementId]) -> Sign {
        let mut t = Vec::with_capacity(head.len() + tail.len());
        t.extend_from_slice(head);
        t.extend_from_slice(tail);
        self.chi.chi(&t)
    }

    /// All affine bases, in lexicographic order.
    pub fn affine_bases(&self) -> Vec<AffineBasis> {
        let pool: Vec<ElementId> = self
            .chi
            .ground_set()
            .into_iter()
            .filter(|&e| e != self.f && e != self.g)
            .collect();
        subsets_of(&pool, self.chi.r() as usize - 1)
            .into_iter()
            .filter(|b| !self.chi_with(b, &[self.g]).is_zero())
            .collect()
    }

    /// Vertex of an affine basis: the cocircuit vanishing on the basis,
    /// signed so the reference element is positive.
    pub fn vertex(&self, basis: &[ElementId]) -> Result<Cocircuit, OmpError> {
        if !self.is_affine_basis(basis) {
            return Err(OmpError::NotAffineBasis);
        }
        let sigma = self.chi_with(basis, &[self.g]);
        let signs = self
            .chi
            .ground_set()
            .into_iter()
            .map(|e| sigma * self.chi_with(basis, &[e]))
            .collect();
        Ok(Cocircuit { signs })
    }

    fn split_adjacent(
        &self,
        from: &[ElementId],
        to: &[ElementId],
    ) -> Result<(Vec<ElementId>, ElementId, ElementId), OmpError> {
        if !self.is_affine_basis(from) || !self.is_affine_basis(to) {
            return Err(OmpError::NotAffineBasis);
        }
        let shared: Vec<ElementId> = from.iter().copied().filter(|e| to.contains(e)).collect();
        if shared.len() + 2 != self.chi.r() as usize || from == to {
            return Err(OmpError::NotAdjacent);
        }
        let leaving = *from.iter().find(|e| !to.contains(e)).expect("one element leaves");
        let entering = *to.iter().find(|e| !from.contains(e)).expect("one element enters");
        Ok((shared, leaving, entering))
    }

    fn classify_parts(&self, shared: &[ElementId], a: ElementId, b: ElementId) -> PivotKind {
        if self.chi_with(shared, &[a, b]).is_zero() {
            return PivotKind::Degenerate;
        }
        if self.chi_with(shared, &[self.g, self.f]).is_zero() {
            return PivotKind::Horizontal;
        }
        match self.product_parts(shared, a, b) {
            Sign::Plus => PivotKind::StrictlyIncreasing,
            Sign::Minus => PivotKind::StrictlyDecreasing,
            Sign::Zero => unreachable!("zero factors were handled above"),
        }
    }

    fn product_parts(&self, shared: &[ElementId], a: ElementId, b: ElementId) -> Sign {
        self.chi_with(shared, &[self.g, self.f])
            * self.chi_with(shared, &[a, b])
            * self.chi_with(shared, &[self.g, a])
            * self.chi_with(shared, &[self.g, b])
    }

    /// How the objective behaves when pivoting between two adjacent bases.
    pub fn classify_pivot(&self, from: &[ElementId], to: &[ElementId]) -> Result<PivotKind, OmpError> {
        let (shared, a, b) = self.split_adjacent(from, to)?;
        Ok(self.classify_parts(&shared, a, b))
    }

    /// The four-factor classification product for a pivot: positive for a
    /// strict increase, negative for a strict decrease, zero when the pivot
    /// is degenerate or horizontal.
    pub fn pivot_product(&self, from: &[ElementId], to: &[ElementId]) -> Result<Sign, OmpError> {
        let (shared, a, b) = self.split_adjacent(from, to)?;
        Ok(self.product_parts(&shared, a, b))
    }

    /// Direction cocircuit of a non-degenerate pivot: vanishes on the shared
    /// elements and the reference, signed to point from the source vertex
    /// toward the target vertex. Its sign on the objective matches the pivot
    /// classification.
    pub fn pivot_direction(&self, from: &[ElementId], to: &[ElementId]) -> Result<Cocircuit, OmpError> {
        let (shared, a, b) = self.split_adjacent(from, to)?;
        let mut target = shared.clone();
        target.push(b);
        target.sort();
        let v2 = self.vertex(&target)?;
        if v2.sign(a).is_zero() {
            return Err(OmpError::DegeneratePivot);
        }
        let sigma = v2.sign(a) * self.chi_with(&shared, &[self.g, a]);
        let signs = self
            .chi
            .ground_set()
            .into_iter()
            .map(|e| sigma * self.chi_with(&shared, &[self.g, e]))
            .collect();
        Ok(Cocircuit { signs })
    }

    /// Builds the pivot graph over the affine bases accepted by `keep`.
    pub fn pivot_graph_filtered(&self, keep: impl Fn(&[ElementId]) -> bool) -> PivotGraph {
        let nodes: Vec<AffineBasis> =
            self.affine_bases().into_iter().filter(|b| keep(b)).collect();
        let mut pivots = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let shared: Vec<ElementId> =
                    nodes[i].iter().copied().filter(|e| nodes[j].contains(e)).collect();
                if shared.len() + 2 != self.chi.r() as usize {
                    continue;
                }
                let a = *nodes[i].iter().find(|e| !nodes[j].contains(e)).expect("leaves");
                let b = *nodes[j].iter().find(|e| !nodes[i].contains(e)).expect("enters");
                match self.classify_parts(&shared, a, b) {
                    PivotKind::StrictlyIncreasing => pivots.push(Pivot {
                        from: i,
                        to: j,
                        shared,
                        leaving: a,
                        entering: b,
                        kind: PivotKind::StrictlyIncreasing,
                    }),
                    PivotKind::StrictlyDecreasing => pivots.push(Pivot {
                        from: j,
                        to: i,
                        shared,
                        leaving: b,
                        entering: a,
                        kind: PivotKind::StrictlyIncreasing,
                    }),
                    kind @ (PivotKind::Degenerate | PivotKind::Horizontal) => {
                        pivots.push(Pivot {
                            from: i,
                            to: j,
                            shared: shared.clone(),
                            leaving: a,
                            entering: b,
                            kind,
                        });
                        pivots.push(Pivot {
                            from: j,
                            to: i,
                            shared,
                            leaving: b,
                            entering: a,
                            kind,
                        });
                    }
                }
            }
        }
        PivotGraph::from_parts(nodes, pivots)
    }

    pub fn pivot_graph(&self) -> PivotGraph {
        self.pivot_graph_filtered(|_| true)
    }

    /// First monotone cycle of the program, if any.
    pub fn find_cycle(&self) -> Option<NonDegenerateCycle> {
        find_cycle_in_graph(&self.pivot_graph())
    }

    /// First monotone cycle whose bases all pass `keep`.
    pub fn find_cycle_with_filter(
        &self,
        keep: impl Fn(&[ElementId]) -> bool,
    ) -> Option<NonDegenerateCycle> {
        find_cycle_in_graph(&self.pivot_graph_filtered(keep))
    }

    pub fn is_euclidean(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Full consistency check of a cycle against this program: structure,
    /// affine bases, and pivot kinds.
    pub fn check_cycle(&self, cycle: &NonDegenerateCycle) -> Result<(), OmpError> {
        cycle.check_structure()?;
        let m = cycle.len();
        for (i, p) in cycle.pivots.iter().enumerate() {
            if !self.is_affine_basis(&cycle.bases[i]) {
                return Err(OmpError::NotAffineBasis);
            }
            let kind = self.classify_parts(&p.shared, p.leaving, p.entering);
            if kind != p.kind {
                return Err(OmpError::MalformedCycle(format!(
                    "pivot {i} recorded as {} but classifies as {}",
                    p.kind.letter(),
                    kind.letter()
                )));
            }
            let _ = &cycle.bases[(i + 1) % m];
        }
        Ok(())
    }
}

/// Scans every ordered program (f, g) of the chirotope in lexicographic
/// order and reports the first monotone cycle found.
pub fn decide_euclidean(chi: &Chirotope) -> EuclideanDecision {
    for f in chi.ground_set() {
        for g in chi.ground_set() {
            if f == g {
                continue;
            }
            let program = OMProgram::new(chi, f, g).expect("ground set elements are valid");
            if let Some(cycle) = program.find_cycle() {
                return EuclideanDecision::NonEuclidean { f, g, cycle };
            }
        }
    }
    EuclideanDecision::Euclidean
}

/// Tarjan's algorithm, iterative form. Returns a component id per node.
fn strongly_connected_components(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0usize;
    let mut components = 0usize;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < succ[v].len() {
                let w = succ[v][frame.1];
                frame.1 += 1;
                if index[w] == UNSET {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("stack holds the component");
                        on_stack[w] = false;
                        comp[w] = components;
                        if w == v {
                            break;
                        }
                    }
                    components += 1;
                }
            }
        }
    }
    comp
}

/// Shortest pivot path from `start` to `target` through nodes of one
/// component, as pivot indices.
fn path_in_component(
    graph: &PivotGraph,
    comp: &[usize],
    component: usize,
    start: usize,
    target: usize,
) -> Option<Vec<usize>> {
    let mut pred: Vec<Option<usize>> = vec![None; graph.nodes.len()];
    let mut seen = vec![false; graph.nodes.len()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        if v == target {
            let mut path = Vec::new();
            let mut at = target;
            while at != start {
                let pidx = pred[at].expect("predecessor recorded");
                path.push(pidx);
                at = graph.pivots[pidx].from;
            }
            path.reverse();
            return Some(path);
        }
        for &pidx in graph.outgoing(v) {
            let w = graph.pivots[pidx].to;
            if comp[w] == component && !seen[w] {
                seen[w] = true;
                pred[w] = Some(pidx);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Finds a monotone cycle: a strictly increasing pivot whose endpoints lie
/// in one strongly connected component, completed to a closed walk inside
/// that component.
pub(crate) fn find_cycle_in_graph(graph: &PivotGraph) -> Option<NonDegenerateCycle> {
    let succ: Vec<Vec<usize>> = (0..graph.nodes.len())
        .map(|v| graph.outgoing(v).iter().map(|&p| graph.pivots[p].to).collect())
        .collect();
    let comp = strongly_connected_components(&succ);

    for (idx, pivot) in graph.pivots.iter().enumerate() {
        if pivot.kind != PivotKind::StrictlyIncreasing || comp[pivot.from] != comp[pivot.to] {
            continue;
        }
        let back = path_in_component(graph, &comp, comp[pivot.from], pivot.to, pivot.from)
            .expect("endpoints share a component");
        let mut pivot_ids = vec![idx];
        pivot_ids.extend(back);
        let bases: Vec<AffineBasis> =
            pivot_ids.iter().map(|&p| graph.nodes[graph.pivots[p].from].clone()).collect();
        let pivots: Vec<CyclePivot> = pivot_ids
            .iter()
            .map(|&p| {
                let e = &graph.pivots[p];
                CyclePivot {
                    shared: e.shared.clone(),
                    leaving: e.leaving,
                    entering: e.entering,
                    kind: e.kind,
                }
            })
            .collect();
        let cycle = NonDegenerateCycle { bases, pivots };
        debug_assert!(cycle.check_structure().is_ok());
        return Some(cycle);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::VectorConfiguration;
    use crate::generate::{moment_curve, unit_cube};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    fn rat(p: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(p))
    }

    /// Rank-3 points with 1, 2, 3 on a common line.
    fn collinear_chi() -> Chirotope {
        let cols = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(2), rat(0)],
            vec![rat(1), rat(0), rat(1)],
            vec![rat(1), rat(1), rat(2)],
        ];
        Chirotope::from_configuration(&VectorConfiguration::new(3, cols).unwrap()).unwrap()
    }

    #[test]
    fn program_rejects_bad_elements() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        assert_eq!(
            OMProgram::new(&chi, ElementId(2), ElementId(2)).unwrap_err(),
            OmpError::EqualPair
        );
        assert_eq!(
            OMProgram::new(&chi, ElementId(9), ElementId(2)).unwrap_err(),
            OmpError::OutOfRange(9, 5)
        );
    }

    #[test]
    fn affine_bases_and_vertex_respect_dependencies() {
        let chi = collinear_chi();
        let program = OMProgram::new(&chi, ElementId(4), ElementId(5)).unwrap();
        let bases = program.affine_bases();
        assert_eq!(bases, vec![ids(&[1, 2]), ids(&[1, 3]), ids(&[2, 3])]);
        let v = program.vertex(&ids(&[1, 2])).unwrap();
        assert_eq!(v.sign(ElementId(5)), Sign::Plus);
        assert_eq!(v.sign(ElementId(1)), Sign::Zero);
        assert_eq!(v.sign(ElementId(2)), Sign::Zero);
        // 3 lies on the line spanned by 1 and 2.
        assert_eq!(v.sign(ElementId(3)), Sign::Zero);
        assert_eq!(v.sign(ElementId(4)), Sign::Plus);
        assert_eq!(program.vertex(&ids(&[1, 4])).unwrap_err(), OmpError::NotAffineBasis);
    }

    #[test]
    fn degenerate_pivot_has_equal_vertices_and_no_direction() {
        let chi = collinear_chi();
        let program = OMProgram::new(&chi, ElementId(4), ElementId(5)).unwrap();
        let kind = program.classify_pivot(&ids(&[1, 2]), &ids(&[1, 3])).unwrap();
        assert_eq!(kind, PivotKind::Degenerate);
        assert_eq!(
            program.pivot_direction(&ids(&[1, 2]), &ids(&[1, 3])).unwrap_err(),
            OmpError::DegeneratePivot
        );
        let va = program.vertex(&ids(&[1, 2])).unwrap();
        let vb = program.vertex(&ids(&[1, 3])).unwrap();
        assert_eq!(va, vb);
    }

    #[test]
    fn classification_agrees_with_direction_sign() {
        for chi in [
            Chirotope::from_configuration(&moment_curve(6, 3)).unwrap(),
            Chirotope::from_configuration(&unit_cube()).unwrap(),
            collinear_chi(),
        ] {
            for (f, g) in [(1u32, 2u32), (5, 3), (2, 4)] {
                let program = OMProgram::new(&chi, ElementId(f), ElementId(g)).unwrap();
                let bases = program.affine_bases();
                for from in &bases {
                    for to in &bases {
                        let (kind, product) = match program.classify_pivot(from, to) {
                            Ok(k) => (k, program.pivot_product(from, to).unwrap()),
                            Err(_) => continue,
                        };
                        match program.pivot_direction(from, to) {
                            Err(OmpError::DegeneratePivot) => {
                                assert_eq!(kind, PivotKind::Degenerate);
                                assert_eq!(product, Sign::Zero);
                            }
                            Ok(direction) => {
                                let df = direction.sign(program.objective());
                                let expect = match kind {
                                    PivotKind::Horizontal => Sign::Zero,
                                    PivotKind::StrictlyIncreasing => Sign::Plus,
                                    PivotKind::StrictlyDecreasing => Sign::Minus,
                                    PivotKind::Degenerate => unreachable!(),
                                };
                                assert_eq!(df, expect);
                                assert_eq!(product, df);
                            }
                            Err(other) => panic!("unexpected error {other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn uniform_graph_has_only_strict_pivots_one_way() {
        let chi = Chirotope::from_configuration(&moment_curve(7, 3)).unwrap();
        let program = OMProgram::new(&chi, ElementId(1), ElementId(7)).unwrap();
        let graph = program.pivot_graph();
        assert!(!graph.nodes.is_empty());
        for p in &graph.pivots {
            assert_eq!(p.kind, PivotKind::StrictlyIncreasing);
            let reversed = graph
                .pivots
                .iter()
                .any(|q| q.from == p.to && q.to == p.from);
            assert!(!reversed, "strict pivots must appear in one direction only");
        }
    }

    #[test]
    fn degenerate_and_horizontal_pivots_are_bidirectional() {
        let chi = Chirotope::from_configuration(&unit_cube()).unwrap();
        let program = OMProgram::new(&chi, ElementId(1), ElementId(8)).unwrap();
        let graph = program.pivot_graph();
        let mut saw_flat = false;
        for p in &graph.pivots {
            if p.kind == PivotKind::StrictlyIncreasing {
                continue;
            }
            saw_flat = true;
            assert!(graph
                .pivots
                .iter()
                .any(|q| q.from == p.to && q.to == p.from && q.kind == p.kind));
        }
        assert!(saw_flat, "the cube program should have flat pivots");
    }

    #[test]
    fn realizable_programs_are_euclidean() {
        for chi in [
            Chirotope::from_configuration(&moment_curve(6, 3)).unwrap(),
            Chirotope::from_configuration(&unit_cube()).unwrap(),
            collinear_chi(),
        ] {
            assert!(decide_euclidean(&chi).is_euclidean());
        }
    }

    #[test]
    fn synthetic_graph_yields_a_cycle() {
        // Three rank-2 style nodes: a strict pivot 0 -> 1 closed up by
        // horizontal pivots 1 -> 2 -> 0.
        let nodes = vec![ids(&[1]), ids(&[2]), ids(&[3])];
        let edge = |from: usize, to: usize, a: u32, b: u32, kind: PivotKind| Pivot {
            from,
            to,
            shared: vec![],
            leaving: ElementId(a),
            entering: ElementId(b),
            kind,
        };
        let pivots = vec![
            edge(0, 1, 1, 2, PivotKind::StrictlyIncreasing),
            edge(1, 2, 2, 3, PivotKind::Horizontal),
            edge(2, 1, 3, 2, PivotKind::Horizontal),
            edge(2, 0, 3, 1, PivotKind::Horizontal),
            edge(0, 2, 1, 3, PivotKind::Horizontal),
        ];
        let graph = PivotGraph::from_parts(nodes, pivots);
        let cycle = find_cycle_in_graph(&graph).expect("cycle exists");
        assert_eq!(cycle.len(), 3);
        cycle.check_structure().unwrap();
        assert_eq!(cycle.pivots[0].kind, PivotKind::StrictlyIncreasing);
        assert_eq!(
            cycle.dump(ElementId(7), ElementId(9)),
            "f=7 g=9\nL={} a=1 b=2 kind=S\nL={} a=2 b=3 kind=H\nL={} a=3 b=1 kind=H\n"
        );
    }

    #[test]
    fn acyclic_synthetic_graph_has_no_cycle() {
        let nodes = vec![ids(&[1]), ids(&[2])];
        let pivots = vec![Pivot {
            from: 0,
            to: 1,
            shared: vec![],
            leaving: ElementId(1),
            entering: ElementId(2),
            kind: PivotKind::StrictlyIncreasing,
        }];
        let graph = PivotGraph::from_parts(nodes, pivots);
        assert!(find_cycle_in_graph(&graph).is_none());
    }
}
