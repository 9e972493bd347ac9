//! Van Kampen diagrams as combinatorial 2-complexes: a bouquet of lollipops
//! built from a product of conjugates, folded one cancelling boundary pair
//! at a time until the boundary label is freely reduced.
//!
//! Edges always carry a generator; traversing an edge backwards reads its
//! inverse. Every edge remembers which bouquet edges were folded into it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::identities::ConjugateProduct;
use crate::word_core::{cyclically_reduce, inverse, reduce, Letter, Word};

mod letter_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::word_core::{Letter, Word};

    pub fn serialize<S: Serializer>(l: &Letter, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{l:?}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Letter, D::Error> {
        let text = String::deserialize(d)?;
        let word = Word::parse(&text).map_err(serde::de::Error::custom)?;
        match word.letters() {
            [l] => Ok(*l),
            _ => Err(serde::de::Error::custom(format!("expected one letter, got {text:?}"))),
        }
    }
}

/// One traversal of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    /// A generator, read when going from `src` to `dst`.
    #[serde(with = "letter_text")]
    pub label: Letter,
    /// True when no face contains the edge.
    pub spine: bool,
    /// Ids of the bouquet edges folded into this one, ascending.
    pub origins: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Index of the product term the face comes from.
    pub term: usize,
    pub relator: Word,
    /// Boundary cycle, reading `relator`.
    pub cycle: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub base_point: usize,
    pub boundary_cycle: Vec<Step>,
}

/// One fold: the two identified edges (by their smallest bouquet id) and
/// the terms of any faces discarded as a 2-sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldStep {
    /// Index of the first letter of the cancelled pair in the boundary label.
    pub position: usize,
    pub edge_pair: (usize, usize),
    pub discarded_faces: Vec<usize>,
    /// `V - E + F` after the step.
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoldOrder {
    /// The stack-reduction order of the boundary label.
    Canonical,
    /// Positions of the first letter of each cancelled pair, each relative
    /// to the boundary label at the time of the fold.
    Explicit(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VkError {
    #[error("invalid cancellation sequence at step {step}: {reason}")]
    InvalidCancellationSequence { step: usize, reason: String },
    #[error("diagram has spines")]
    HasSpines,
    #[error("boundary label {0} is not cyclically reduced")]
    NotCyclicallyReducedBoundary(Word),
}

fn read(edges: &[Edge], s: Step) -> Letter {
    let l = edges[s.edge].label;
    if s.forward {
        l
    } else {
        l.inverse()
    }
}

impl Diagram {
    /// A single vertex with empty boundary.
    pub fn empty() -> Diagram {
        Diagram { vertices: vec![0], edges: Vec::new(), faces: Vec::new(), base_point: 0, boundary_cycle: Vec::new() }
    }

    /// A single face reading `r` from the base point.
    pub fn relator(r: &Word) -> Diagram {
        bouquet(&ConjugateProduct::from_pairs(&[(&Word::empty(), r)]))
    }

    pub fn start(&self, s: Step) -> usize {
        let e = &self.edges[s.edge];
        if s.forward {
            e.src
        } else {
            e.dst
        }
    }

    pub fn end(&self, s: Step) -> usize {
        let e = &self.edges[s.edge];
        if s.forward {
            e.dst
        } else {
            e.src
        }
    }

    pub fn read_steps(&self, steps: &[Step]) -> Word {
        Word::from_letters(steps.iter().map(|s| read(&self.edges, *s)).collect())
    }

    pub fn boundary_label(&self) -> Word {
        self.read_steps(&self.boundary_cycle)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn has_spines(&self) -> bool {
        self.edges.iter().any(|e| e.spine)
    }

    /// Whether the diagram is a disk: no spines, a boundary visiting no
    /// vertex twice, and `V - E + F = 1`.
    pub fn is_disk(&self) -> bool {
        let visited: Vec<usize> = self.boundary_cycle.iter().map(|s| self.start(*s)).collect();
        let distinct: BTreeSet<usize> = visited.iter().copied().collect();
        !self.has_spines() && distinct.len() == visited.len() && self.euler_characteristic() == 1
    }

    /// Labels of edges lying on two faces, sorted.
    pub fn internal_edge_labels(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = (0..self.edges.len())
            .filter(|&e| self.faces.iter().map(|f| f.cycle.iter().filter(|s| s.edge == e).count()).sum::<usize>() >= 2)
            .map(|e| self.edges[e].label)
            .collect();
        out.sort();
        out
    }

    /// The partition of bouquet edges into folded classes, sorted.
    pub fn edge_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.edges.iter().map(|e| e.origins.clone()).collect();
        out.sort();
        out
    }

    /// Checks the structural invariants, returning the first violation.
    pub fn check(&self) -> Result<(), String> {
        let vs: BTreeSet<usize> = self.vertices.iter().copied().collect();
        if !vs.contains(&self.base_point) {
            return Err("base point is not a vertex".into());
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !vs.contains(&e.src) || !vs.contains(&e.dst) {
                return Err(format!("edge {i} has a dangling endpoint"));
            }
            if e.label.sign() < 0 {
                return Err(format!("edge {i} carries an inverse letter"));
            }
            let on_face = self.faces.iter().any(|f| f.cycle.iter().any(|s| s.edge == i));
            if e.spine == on_face {
                return Err(format!("edge {i} has a wrong spine flag"));
            }
        }
        let closed = |steps: &[Step], at: Option<usize>| -> bool {
            if steps.is_empty() {
                return true;
            }
            let first = self.start(steps[0]);
            at.map_or(true, |v| v == first)
                && steps.windows(2).all(|p| self.end(p[0]) == self.start(p[1]))
                && self.end(*steps.last().unwrap()) == first
        };
        if !closed(&self.boundary_cycle, Some(self.base_point)) {
            return Err("boundary cycle is not a closed path at the base point".into());
        }
        for f in &self.faces {
            if !closed(&f.cycle, None) {
                return Err(format!("face {} is not a closed path", f.term));
            }
            if self.read_steps(&f.cycle) != f.relator {
                return Err(format!("face {} does not read its relator", f.term));
            }
        }
        Ok(())
    }

    /// Folds the cancelling pair at `k`, `k + 1` of the boundary.
    pub fn fold_at(&self, k: usize) -> Result<(Diagram, FoldStep), String> {
        let n = self.boundary_cycle.len();
        if k + 1 >= n {
            return Err(format!("position {k} out of range for a boundary of length {n}"));
        }
        let (s1, s2) = (self.boundary_cycle[k], self.boundary_cycle[k + 1]);
        if !read(&self.edges, s1).cancels(read(&self.edges, s2)) {
            return Err(format!("letters at {k} and {} do not cancel", k + 1));
        }
        let mut d = self.clone();
        let edge_pair = (self.edges[s1.edge].origins[0], self.edges[s2.edge].origins[0]);
        d.boundary_cycle.drain(k..k + 2);
        if s1.edge != s2.edge {
            let (a, c) = (self.start(s1), self.end(s2));
            if a != c {
                for e in &mut d.edges {
                    if e.src == c {
                        e.src = a;
                    }
                    if e.dst == c {
                        e.dst = a;
                    }
                }
                if d.base_point == c {
                    d.base_point = a;
                }
            }
            let (keep, gone) = (s1.edge, s2.edge);
            let remap = |s: &mut Step| {
                if s.edge == gone {
                    *s = Step { edge: keep, forward: if s.forward == s2.forward { !s1.forward } else { s1.forward } };
                }
            };
            d.boundary_cycle.iter_mut().for_each(remap);
            d.faces.iter_mut().flat_map(|f| f.cycle.iter_mut()).for_each(remap);
            let moved = std::mem::take(&mut d.edges[gone].origins);
            d.edges[keep].origins.extend(moved);
            d.edges[keep].origins.sort_unstable();
        }
        let discarded_faces = d.discard_spheres();
        d.compact();
        let euler = d.euler_characteristic();
        Ok((d, FoldStep { position: k, edge_pair, discarded_faces, euler }))
    }

    /// Removes every closed sphere: a set of faces, connected through shared
    /// edges, in which each edge is used exactly twice and by nothing else,
    /// with `V - E + F = 2`. Returns the discarded terms.
    fn discard_spheres(&mut self) -> Vec<usize> {
        let uses = |d: &Diagram, e: usize| {
            d.boundary_cycle.iter().chain(d.faces.iter().flat_map(|f| f.cycle.iter())).filter(|s| s.edge == e).count()
        };
        let mut discarded = Vec::new();
        'again: loop {
            let n = self.faces.len();
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut comp = vec![start];
                seen[start] = true;
                let mut i = 0;
                while i < comp.len() {
                    let edges: BTreeSet<usize> = self.faces[comp[i]].cycle.iter().map(|s| s.edge).collect();
                    for j in 0..n {
                        if !seen[j] && self.faces[j].cycle.iter().any(|s| edges.contains(&s.edge)) {
                            seen[j] = true;
                            comp.push(j);
                        }
                    }
                    i += 1;
                }
                let steps: Vec<Step> = comp.iter().flat_map(|&f| self.faces[f].cycle.iter().copied()).collect();
                let edges: BTreeSet<usize> = steps.iter().map(|s| s.edge).collect();
                if edges.is_empty() {
                    continue;
                }
                let closed = edges.iter().all(|&e| {
                    let inside = steps.iter().filter(|s| s.edge == e).count();
                    inside == 2 && uses(self, e) == 2
                });
                let verts: BTreeSet<usize> =
                    edges.iter().flat_map(|&e| [self.edges[e].src, self.edges[e].dst]).collect();
                let chi = verts.len() as i64 - edges.len() as i64 + comp.len() as i64;
                if closed && chi == 2 {
                    comp.sort_unstable();
                    for &f in comp.iter().rev() {
                        discarded.push(self.faces.remove(f).term);
                    }
                    continue 'again;
                }
            }
            break;
        }
        discarded.sort_unstable();
        discarded
    }

    /// Drops unused edges and vertices, recomputes spine flags and renumbers
    /// vertices by first appearance (base point first) and edges in order.
    fn compact(&mut self) {
        let used: BTreeSet<usize> = self
            .boundary_cycle
            .iter()
            .chain(self.faces.iter().flat_map(|f| f.cycle.iter()))
            .map(|s| s.edge)
            .collect();
        let mut edge_map = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if used.contains(&i) {
                edge_map[i] = edges.len();
                edges.push(e.clone());
            }
        }
        let mut order = vec![self.base_point];
        for e in &edges {
            for v in [e.src, e.dst] {
                if !order.contains(&v) {
                    order.push(v);
                }
            }
        }
        let vmap = |v: usize| order.iter().position(|&x| x == v).unwrap();
        for e in &mut edges {
            e.src = vmap(e.src);
            e.dst = vmap(e.dst);
        }
        let remap = |s: &mut Step| s.edge = edge_map[s.edge];
        self.boundary_cycle.iter_mut().for_each(remap);
        self.faces.iter_mut().flat_map(|f| f.cycle.iter_mut()).for_each(remap);
        for (i, e) in edges.iter_mut().enumerate() {
            e.spine = !self.faces.iter().any(|f| f.cycle.iter().any(|s| s.edge == i));
        }
        self.base_point = 0;
        self.vertices = (0..order.len()).collect();
        self.edges = edges;
    }

    /// Deterministic DOT text: nodes `v0, v1, ...`, one arc per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph vk {\n");
        for &v in &self.vertices {
            if v == self.base_point {
                let _ = writeln!(out, "  v{v} [base=\"true\", shape=doublecircle];");
            } else {
                let _ = writeln!(out, "  v{v};");
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let terms: BTreeSet<usize> =
                self.faces.iter().filter(|f| f.cycle.iter().any(|s| s.edge == i)).map(|f| f.term).collect();
            let faces: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{:?}\", face=\"{}\", spine=\"{}\"];",
                e.src,
                e.dst,
                e.label,
                faces.join(","),
                e.spine
            );
        }
        out.push_str("}\n");
        out
    }
}

struct Builder {
    d: Diagram,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        let v = self.d.vertices.len();
        self.d.vertices.push(v);
        v
    }

    /// Adds an edge reading `l` from `from` to `to`.
    fn edge(&mut self, from: usize, to: usize, l: Letter) -> Step {
        let id = self.d.edges.len();
        let (src, dst, label) = if l.sign() > 0 { (from, to, l) } else { (to, from, l.inverse()) };
        self.d.edges.push(Edge { src, dst, label, spine: true, origins: vec![id] });
        Step { edge: id, forward: l.sign() > 0 }
    }

    /// A path reading `word` from `from`, ending at `to` when given.
    fn path(&mut self, from: usize, word: &Word, to: Option<usize>) -> Vec<Step> {
        let mut at = from;
        let n = word.len();
        let mut steps = Vec::with_capacity(n);
        for (i, &l) in word.letters().iter().enumerate() {
            let next = match to {
                Some(t) if i + 1 == n => t,
                _ => self.vertex(),
            };
            steps.push(self.edge(at, next, l));
            at = next;
        }
        steps
    }
}

fn flip(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| Step { edge: s.edge, forward: !s.forward }).collect()
}

/// One lollipop per term: a spine reading the conjugator, ending at a face
/// reading the relator. The boundary reads `a1 r1 a1^-1 ... an rn an^-1`.
pub fn bouquet(p: &ConjugateProduct) -> Diagram {
    let mut b = Builder { d: Diagram::empty() };
    let base = 0;
    let mut boundary = Vec::new();
    for (term, t) in p.terms.iter().enumerate() {
        let spine = b.path(base, &t.conjugator, None);
        let tip = if spine.is_empty() { base } else { b.d.end(*spine.last().unwrap()) };
        let cycle = b.path(tip, &t.relator, Some(tip));
        boundary.extend(spine.iter().copied());
        boundary.extend(cycle.iter().copied());
        boundary.extend(flip(&spine));
        b.d.faces.push(Face { term, relator: t.relator.clone(), cycle });
    }
    let mut d = b.d;
    d.boundary_cycle = boundary;
    d.compact();
    d
}

/// Positions of the stack-reduction order: scanning left to right, each
/// letter cancels the top of the stack when it can.
pub fn canonical_cancellations(word: &Word) -> Vec<usize> {
    let mut stack: Vec<Letter> = Vec::new();
    let mut out = Vec::new();
    for &l in word.letters() {
        if stack.last().is_some_and(|t| t.cancels(l)) {
            stack.pop();
            out.push(stack.len());
        } else {
            stack.push(l);
        }
    }
    out
}

/// Folds until the boundary label is freely reduced.
pub fn fold_all(d: &Diagram, order: &FoldOrder) -> Result<(Diagram, Vec<FoldStep>), VkError> {
    let positions = match order {
        FoldOrder::Canonical => canonical_cancellations(&d.boundary_label()),
        FoldOrder::Explicit(list) => list.clone(),
    };
    let mut cur = d.clone();
    let mut steps = Vec::with_capacity(positions.len());
    for (i, &k) in positions.iter().enumerate() {
        let (next, step) =
            cur.fold_at(k).map_err(|reason| VkError::InvalidCancellationSequence { step: i, reason })?;
        cur = next;
        steps.push(step);
    }
    let label = cur.boundary_label();
    if !label.is_reduced() {
        return Err(VkError::InvalidCancellationSequence {
            step: positions.len(),
            reason: format!("boundary {label} still has a cancelling pair"),
        });
    }
    Ok((cur, steps))
}

/// Moves the base point `k` boundary edges forward.
pub fn shift_base(d: &Diagram, k: usize) -> Result<Diagram, VkError> {
    if d.has_spines() {
        return Err(VkError::HasSpines);
    }
    let label = d.boundary_label();
    if !label.is_cyclically_reduced() {
        return Err(VkError::NotCyclicallyReducedBoundary(label));
    }
    let mut out = d.clone();
    let n = out.boundary_cycle.len();
    if n > 0 {
        out.boundary_cycle.rotate_left(k % n);
        out.base_point = out.start(out.boundary_cycle[0]);
    }
    Ok(out)
}

fn fold_canonical(d: Diagram) -> Diagram {
    fold_all(&d, &FoldOrder::Canonical).expect("the canonical order is always valid").0
}

/// Glues `b` to `a` at their base points; the boundary reads `a` then `b`.
/// Terms and bouquet ids of `b` are shifted past those of `a`.
pub fn join(a: &Diagram, b: &Diagram) -> Diagram {
    let mut d = a.clone();
    let term_shift = a.faces.iter().map(|f| f.term + 1).max().unwrap_or(0);
    let origin_shift = a.edges.iter().flat_map(|e| e.origins.iter()).map(|o| o + 1).max().unwrap_or(0);
    let (nv, ne) = (a.vertices.len(), a.edges.len());
    let vmap = |v: usize| if v == b.base_point { a.base_point } else { v + nv };
    for &v in &b.vertices {
        if v != b.base_point {
            d.vertices.push(v + nv);
        }
    }
    for e in &b.edges {
        d.edges.push(Edge {
            src: vmap(e.src),
            dst: vmap(e.dst),
            label: e.label,
            spine: e.spine,
            origins: e.origins.iter().map(|o| o + origin_shift).collect(),
        });
    }
    let shift = |s: &Step| Step { edge: s.edge + ne, forward: s.forward };
    for f in &b.faces {
        d.faces.push(Face { term: f.term + term_shift, relator: f.relator.clone(), cycle: f.cycle.iter().map(shift).collect() });
    }
    d.boundary_cycle.extend(b.boundary_cycle.iter().map(shift));
    d.compact();
    d
}

/// The diagram of the reduced product: `a` and `b` glued, then folded.
pub fn reduced_product(a: &Diagram, b: &Diagram) -> Diagram {
    fold_canonical(join(a, b))
}

/// A spine reading `c` is attached before the base point and the result
/// folded; the boundary reads the reduced form of `c u c^-1`.
pub fn conjugate(d: &Diagram, c: &Word) -> Diagram {
    if c.is_empty() {
        return fold_canonical(d.clone());
    }
    let mut b = Builder { d: d.clone() };
    let new_base = b.vertex();
    let spine = b.path(new_base, c, Some(d.base_point));
    let mut boundary = spine.clone();
    boundary.extend(d.boundary_cycle.iter().copied());
    boundary.extend(flip(&spine));
    b.d.boundary_cycle = boundary;
    b.d.base_point = new_base;
    b.d.compact();
    fold_canonical(b.d)
}

/// Conjugates away the part of the boundary label outside its cyclically
/// reduced core.
pub fn cyclic_reduce(d: &Diagram) -> Diagram {
    let d = fold_canonical(d.clone());
    let (t, _) = cyclically_reduce(&reduce(&d.boundary_label()));
    conjugate(&d, &inverse(&t))
}

/// The diagram of the cyclically reduced product of two diagrams.
pub fn cyc_product(a: &Diagram, b: &Diagram) -> Diagram {
    cyclic_reduce(&reduced_product(a, b))
}
