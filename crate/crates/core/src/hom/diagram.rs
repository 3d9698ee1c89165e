//! The directed graph of catalogued morphisms and its reduction to
//! morphisms that do not factor through others.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::hom::conditions::{hom_conditions, is_primitive, Vars};
use crate::hom::maps::{build_hom, compose, HomMap, HomMapJson};
use crate::labels::{enumerate_labels, Label, Params};
use crate::linalg::rank;
use crate::module::{ModElem, Mono};

#[derive(Clone, Debug)]
pub struct Edge {
    pub from: Label,
    pub to: Label,
    pub rule: u8,
    pub vars: Vars,
    pub degree: u32,
    pub hom: HomMap,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub params: Arc<Params>,
    pub nodes: Vec<Label>,
    pub edges: Vec<Edge>,
    /// `kept[e]` is false when edge e lies in the span of composites of
    /// other edges of the same degree.
    pub kept: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeJson {
    pub from: Label,
    pub to: Label,
    pub rule: u8,
    pub degree: u32,
    pub kept: bool,
    pub hom: HomMapJson,
}

/// Rank over Q of a list of elements of the same module.
pub fn span_rank(elems: &[ModElem]) -> usize {
    let mut cols: BTreeMap<Mono, usize> = BTreeMap::new();
    for e in elems {
        for k in e.terms.keys() {
            let n = cols.len();
            cols.entry(*k).or_insert(n);
        }
    }
    let rows: Vec<Vec<Rational>> = elems
        .iter()
        .map(|e| {
            let mut row = vec![Rational::zero(); cols.len()];
            for (k, c) in &e.terms {
                row[cols[k]] = c.clone();
            }
            row
        })
        .collect();
    rank(&rows, cols.len())
}

/// Builds the graph whose edges are the fired primitive rules (composite
/// rules are realised as paths in it).
pub fn morphism_diagram(p: &Arc<Params>) -> Result<Diagram> {
    let nodes = enumerate_labels(p.r);
    let mut edges = Vec::new();
    for from in &nodes {
        for to in &nodes {
            if from == to {
                continue;
            }
            let rep = hom_conditions(from, to, p);
            for f in rep.fired().filter(|f| is_primitive(f.rule)) {
                let hom = build_hom(from, to, p, f)?;
                let degree = hom.degree().unwrap_or(0);
                edges.push(Edge { from: *from, to: *to, rule: f.rule, vars: f.vars, degree, hom });
            }
        }
    }
    let kept = vec![true; edges.len()];
    let mut d = Diagram { params: p.clone(), nodes, edges, kept };
    d.reduce()?;
    Ok(d)
}

impl Diagram {
    fn node_index(&self, l: &Label) -> usize {
        self.nodes.iter().position(|x| x == l).unwrap()
    }

    /// Paths (as edge index lists) from `from` to `to` of total degree `deg`,
    /// using edges accepted by `allow`.
    pub fn paths_of_degree(&self, from: &Label, to: &Label, deg: u32, allow: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.dfs(from, to, deg, allow, &mut stack, &mut out);
        out
    }

    fn dfs(
        &self,
        at: &Label,
        to: &Label,
        remaining: u32,
        allow: &dyn Fn(usize) -> bool,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == to && remaining == 0 && !stack.is_empty() {
            out.push(stack.clone());
            return;
        }
        for (idx, e) in self.edges.iter().enumerate() {
            if e.from == *at && e.degree <= remaining && e.degree > 0 && allow(idx) {
                stack.push(idx);
                self.dfs(&e.to, to, remaining - e.degree, allow, stack, out);
                stack.pop();
            }
        }
    }

    pub fn compose_path(&self, path: &[usize]) -> Result<HomMap> {
        let mut h = self.edges[path[0]].hom.clone();
        for &i in &path[1..] {
            h = compose(&h, &self.edges[i].hom)?;
        }
        Ok(h)
    }

    /// Marks edges whose image lies in the span of composites (paths of
    /// length ≥ 2 through other edges) of the same degree.
    fn reduce(&mut self) -> Result<()> {
        let mut kept = vec![true; self.edges.len()];
        for (idx, e) in self.edges.iter().enumerate() {
            let paths = self.paths_of_degree(&e.from, &e.to, e.degree, &|j| j != idx);
            let mut composites: Vec<ModElem> = Vec::new();
            for path in paths.iter().filter(|p| p.len() >= 2) {
                match self.compose_path(path) {
                    Ok(h) => composites.push(h.gen_image),
                    Err(Error::ZeroComposite) => {}
                    Err(e) => return Err(e),
                }
            }
            if composites.is_empty() {
                continue;
            }
            let base = span_rank(&composites);
            let mut with = composites.clone();
            with.push(e.hom.gen_image.clone());
            if span_rank(&with) == base {
                kept[idx] = false;
            }
        }
        self.kept = kept;
        Ok(())
    }

    pub fn kept_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().zip(&self.kept).filter(|(_, k)| **k).map(|(e, _)| e)
    }

    /// All morphisms λ → μ obtained as paths in the graph (kept edges only
    /// when `reduced`), grouped by degree, with the rank of each group.
    pub fn morphisms_between(&self, from: &Label, to: &Label, reduced: bool) -> Result<Vec<(u32, Vec<HomMap>, usize)>> {
        let bound: u32 = self.edges.iter().map(|e| e.degree).sum();
        let kept = self.kept.clone();
        let allow = move |j: usize| !reduced || kept[j];
        let mut all: BTreeMap<u32, Vec<HomMap>> = BTreeMap::new();
        self.collect_paths(from, to, bound, &allow, &mut Vec::new(), &mut |path| {
            let deg: u32 = path.iter().map(|&i| self.edges[i].degree).sum();
            if let Ok(h) = self.compose_path(path) {
                all.entry(deg).or_default().push(h);
            }
        });
        Ok(all
            .into_iter()
            .map(|(d, hs)| {
                let imgs: Vec<ModElem> = hs.iter().map(|h| h.gen_image.clone()).collect();
                let rk = span_rank(&imgs);
                (d, hs, rk)
            })
            .collect())
    }

    fn collect_paths(
        &self,
        at: &Label,
        to: &Label,
        budget: u32,
        allow: &dyn Fn(usize) -> bool,
        stack: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if at == to && !stack.is_empty() {
            f(stack);
            return;
        }
        for (idx, e) in self.edges.iter().enumerate() {
            if e.from == *at && e.degree <= budget && e.degree > 0 && allow(idx) {
                stack.push(idx);
                self.collect_paths(&e.to, to, budget - e.degree, allow, stack, f);
                stack.pop();
            }
        }
    }

    fn sorted_edge_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by_key(|&i| {
            let e = &self.edges[i];
            (self.node_index(&e.from), self.node_index(&e.to), e.rule, e.degree)
        });
        idx
    }

    /// Graphviz rendering with edges labelled "rule=N, deg=D".
    pub fn to_dot(&self, reduced: bool) -> String {
        let mut s = String::from("digraph morphisms {\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  \"{n}\";");
        }
        for i in self.sorted_edge_indices() {
            if reduced && !self.kept[i] {
                continue;
            }
            let e = &self.edges[i];
            let _ = writeln!(s, "  \"{}\" -> \"{}\" [label=\"rule={}, deg={}\"];", e.from, e.to, e.rule, e.degree);
        }
        s.push_str("}\n");
        s
    }

    pub fn edges_json(&self) -> Vec<EdgeJson> {
        self.sorted_edge_indices()
            .into_iter()
            .map(|i| {
                let e = &self.edges[i];
                EdgeJson { from: e.from, to: e.to, rule: e.rule, degree: e.degree, kept: self.kept[i], hom: e.hom.to_json() }
            })
            .collect()
    }
}
