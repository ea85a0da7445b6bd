//! Minkowski decomposability of diagrams modulo homothety, and the
//! resulting extremity test for homogeneous singularities.
//!
//! Summands of a diagram `G` with vertices `v_i` are parameterized by
//! vertex images `u_i` and one scale `t_e` per compact edge `e = (i, j)`:
//!
//! ```text
//! u_i - u_j = t_e (v_i - v_j),   0 <= t_e <= 1,   0 <= u_i <= v_i.
//! ```
//!
//! Every feasible assignment gives a summand `K1 = conv(u) + R^n_+` with
//! co-summand `K2 = conv(v - u) + R^n_+`, and every decomposition of `G`
//! inside the orthant arises this way. `K1` is homothetic to `G` exactly
//! when `u_i = c v_i + x` with `c > 0`, `x >= 0`, which forces all edge
//! scales to coincide. Hence `G` (with at least two vertices) is
//! decomposable iff either
//!
//! * some feasible assignment has two different edge scales, or
//! * the floor `min_i v_i` is nonzero, giving `G = (floor + R^n_+) + (G - floor)`.
//!
//! Otherwise every coordinate is zero at some vertex, which pins the
//! translation to zero and leaves only the splits `tG + (1 - t)G`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::diagram::{CompactGraph, Diagram, HomothetyWitness, Point};
use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::polynomial::SingularityInput;
use crate::rational::Rational;

/// Vertex images and edge scales of one candidate summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub u: Vec<Vec<Rational>>,
    pub t: Vec<Rational>,
}

/// The polytope of summand assignments of a base diagram.
#[derive(Debug, Clone)]
pub struct SummandSystem {
    base: Diagram,
    graph: CompactGraph,
}

impl SummandSystem {
    pub fn new(base: &Diagram) -> SummandSystem {
        SummandSystem { base: base.clone(), graph: base.compact_graph() }
    }

    pub fn base(&self) -> &Diagram {
        &self.base
    }

    pub fn graph(&self) -> &CompactGraph {
        &self.graph
    }

    fn vertex(&self, i: usize) -> &[Rational] {
        self.graph.vertices[i].coords()
    }

    fn num_vertices(&self) -> usize {
        self.graph.vertices.len()
    }

    fn u_var(&self, i: usize, k: usize) -> usize {
        i * self.base.dim() + k
    }

    fn t_var(&self, e: usize) -> usize {
        self.num_vertices() * self.base.dim() + e
    }

    /// The system as an LP over `(u, t) >= 0`.
    pub fn linear_program(&self) -> LinearProgram {
        let n = self.base.dim();
        let mut lp = LinearProgram::new(self.num_vertices() * n + self.graph.edges.len());
        let one = Rational::one();
        for (e, edge) in self.graph.edges.iter().enumerate() {
            // u_from - u_to - t (v_from - v_to) = 0, and v_from - v_to = -direction
            for k in 0..n {
                lp.add_sparse(
                    &[
                        (self.u_var(edge.from, k), one.clone()),
                        (self.u_var(edge.to, k), -one.clone()),
                        (self.t_var(e), edge.direction[k].clone()),
                    ],
                    Relation::Eq,
                    Rational::zero(),
                );
            }
            lp.add_sparse(&[(self.t_var(e), one.clone())], Relation::Le, one.clone());
        }
        for i in 0..self.num_vertices() {
            for k in 0..n {
                lp.add_sparse(&[(self.u_var(i, k), one.clone())], Relation::Le, self.vertex(i)[k].clone());
            }
        }
        lp
    }

    fn assignment_from_solution(&self, x: &[Rational]) -> Assignment {
        let n = self.base.dim();
        let u = (0..self.num_vertices()).map(|i| (0..n).map(|k| x[self.u_var(i, k)].clone()).collect()).collect();
        let t = (0..self.graph.edges.len()).map(|e| x[self.t_var(e)].clone()).collect();
        Assignment { u, t }
    }

    /// Checks every constraint of the system exactly.
    pub fn check(&self, a: &Assignment) -> Result<()> {
        let n = self.base.dim();
        let bad = |msg: String| Err(Error::InfeasibleAssignment(msg));
        if a.u.len() != self.num_vertices() || a.t.len() != self.graph.edges.len() {
            return bad("wrong number of vertex images or edge scales".into());
        }
        for (i, ui) in a.u.iter().enumerate() {
            if ui.len() != n {
                return bad(format!("vertex image {i} has wrong dimension"));
            }
            for (k, c) in ui.iter().enumerate() {
                if c.is_negative() || *c > self.vertex(i)[k] {
                    return bad(format!("vertex image {i} leaves the box [0, v_{i}]"));
                }
            }
        }
        for (e, edge) in self.graph.edges.iter().enumerate() {
            let t = &a.t[e];
            if t.is_negative() || *t > Rational::one() {
                return bad(format!("edge scale {e} outside [0, 1]"));
            }
            for k in 0..n {
                if &a.u[edge.to][k] - &a.u[edge.from][k] != t * &edge.direction[k] {
                    return bad(format!("edge {e} is not scaled by its edge scale"));
                }
            }
        }
        Ok(())
    }

    /// Propagates `u_anchor` along compact edges using the given scales.
    pub fn assignment_from_edge_scales(
        &self,
        t: Vec<Rational>,
        anchor: usize,
        anchor_u: Vec<Rational>,
    ) -> Result<Assignment> {
        let m = self.num_vertices();
        if t.len() != self.graph.edges.len() || anchor >= m {
            return Err(Error::InfeasibleAssignment("wrong number of edge scales or bad anchor".into()));
        }
        let mut u: Vec<Option<Vec<Rational>>> = vec![None; m];
        u[anchor] = Some(anchor_u);
        let mut progress = true;
        while progress {
            progress = false;
            for (e, edge) in self.graph.edges.iter().enumerate() {
                let step = |from: &Vec<Rational>, sign: i64| -> Vec<Rational> {
                    from.iter()
                        .zip(&edge.direction)
                        .map(|(x, d)| x + Rational::from_integer(sign.into()) * &t[e] * d)
                        .collect()
                };
                match (&u[edge.from], &u[edge.to]) {
                    (Some(a), None) => {
                        u[edge.to] = Some(step(a, 1));
                        progress = true;
                    }
                    (None, Some(b)) => {
                        u[edge.from] = Some(step(b, -1));
                        progress = true;
                    }
                    _ => {}
                }
            }
        }
        let u = u
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InfeasibleAssignment("compact edge graph is disconnected".into()))?;
        let a = Assignment { u, t };
        self.check(&a)?;
        Ok(a)
    }

    /// `u_i = lambda v_i + x` with every edge scale `lambda`.
    pub fn homothetic_assignment(&self, lambda: &Rational, x: &[Rational]) -> Assignment {
        let u = (0..self.num_vertices())
            .map(|i| self.vertex(i).iter().zip(x).map(|(v, xk)| lambda * v + xk).collect())
            .collect();
        Assignment { u, t: vec![lambda.clone(); self.graph.edges.len()] }
    }

    pub fn complement(&self, a: &Assignment) -> Assignment {
        let u =
            a.u.iter().enumerate().map(|(i, ui)| self.vertex(i).iter().zip(ui).map(|(v, x)| v - x).collect()).collect();
        let t = a.t.iter().map(|t| Rational::one() - t).collect();
        Assignment { u, t }
    }

    pub fn summand_of(&self, a: &Assignment) -> Result<Diagram> {
        self.check(a)?;
        let points = a.u.iter().map(|u| Point::new(u.clone())).collect::<Result<Vec<_>>>()?;
        Diagram::canonicalize(self.base.dim(), points)
    }

    pub fn co_summand_of(&self, a: &Assignment) -> Result<Diagram> {
        self.summand_of(&self.complement(a))
    }

    /// Membership of the summand in the homothety class of the base:
    /// `u_i = c v_i + x` for some `c > 0`, `x >= 0`.
    pub fn summand_homothety(&self, a: &Assignment) -> Option<HomothetyWitness> {
        let v0 = self.vertex(0);
        let c = if self.num_vertices() == 1 {
            // Largest c with u_0 - c v_0 >= 0.
            v0.iter()
                .zip(&a.u[0])
                .filter(|(v, _)| v.is_positive())
                .map(|(v, u)| u / v)
                .min()
                .unwrap_or_else(Rational::one)
        } else {
            a.t[0].clone()
        };
        if !c.is_positive() {
            return None;
        }
        let x: Vec<Rational> = a.u[0].iter().zip(v0).map(|(u, v)| u - &c * v).collect();
        if x.iter().any(Signed::is_negative) {
            return None;
        }
        let fits =
            a.u.iter()
                .enumerate()
                .all(|(i, ui)| ui.iter().zip(self.vertex(i)).zip(&x).all(|((u, v), xk)| *u == &c * v + xk));
        fits.then(|| HomothetyWitness { c, x: Point::new(x).expect("nonnegative") })
    }

    pub fn co_summand_homothety(&self, a: &Assignment) -> Option<HomothetyWitness> {
        self.summand_homothety(&self.complement(a))
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    /// Single compact facet meeting every axis.
    SimplexFacet,
    /// Planar diagram, decided over its edge chain.
    TwoDimChain,
    /// General dimension, decided by pairwise edge-scale LPs.
    FacetPairLp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SimplexFacet => "simplex-facet",
            Method::TwoDimChain => "two-dim-chain",
            Method::FacetPairLp => "facet-pair-lp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionCertificate {
    Decomposable { left: Diagram, right: Diagram, method: Method },
    Indecomposable { method: Method, detail: String },
}

impl DecompositionCertificate {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, DecompositionCertificate::Decomposable { .. })
    }

    pub fn method(&self) -> Method {
        match self {
            DecompositionCertificate::Decomposable { method, .. }
            | DecompositionCertificate::Indecomposable { method, .. } => *method,
        }
    }
}

impl Serialize for DecompositionCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            DecompositionCertificate::Decomposable { left, right, method } => {
                map.serialize_entry("verdict", "decomposable")?;
                map.serialize_entry("left", left)?;
                map.serialize_entry("right", right)?;
                map.serialize_entry("method", method.as_str())?;
            }
            DecompositionCertificate::Indecomposable { method, detail } => {
                map.serialize_entry("verdict", "indecomposable")?;
                map.serialize_entry("method", method.as_str())?;
                map.serialize_entry("detail", detail)?;
            }
        }
        map.serialize_entry("verified", &true)?;
        map.end()
    }
}

/// `k1 + k2 = g` with neither summand homothetic to `g`.
pub fn verify_decomposition(g: &Diagram, k1: &Diagram, k2: &Diagram) -> Result<bool> {
    Ok(k1.minkowski_sum(k2)? == *g && k1.is_homothetic_to(g)?.is_none() && k2.is_homothetic_to(g)?.is_none())
}

fn is_simplex_facet(g: &Diagram) -> bool {
    g.generators().len() == g.dim() && g.dim() > 1 && g.touches_all_axes()
}

/// Witness preference: lattice summands, then fewer generators, then lexicographic.
fn witness_key(pair: &(Diagram, Diagram)) -> (bool, usize, &Diagram, &Diagram) {
    let lattice = pair.0.is_lattice() && pair.1.is_lattice();
    (!lattice, pair.0.generators().len() + pair.1.generators().len(), &pair.0, &pair.1)
}

fn ordered(a: Diagram, b: Diagram) -> (Diagram, Diagram) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Decides decomposability modulo homothety; every decomposable verdict
/// carries a witness that passed [`verify_decomposition`].
pub fn decide_decomposability(g: &Diagram) -> Result<DecompositionCertificate> {
    if is_simplex_facet(g) {
        return Ok(DecompositionCertificate::Indecomposable {
            method: Method::SimplexFacet,
            detail: format!(
                "single compact facet through {} axis vertices; every summand is forced to a scaled copy",
                g.generators().len()
            ),
        });
    }
    decide_decomposability_general(g)
}

/// [`decide_decomposability`] without the simplex fast path.
pub fn decide_decomposability_general(g: &Diagram) -> Result<DecompositionCertificate> {
    let n = g.dim();
    let general = if n == 2 { Method::TwoDimChain } else { Method::FacetPairLp };
    let mut candidates: Vec<(Diagram, Diagram)> = Vec::new();
    let detail;
    if g.generators().len() == 1 {
        let v = g.generators()[0].coords();
        let support: Vec<usize> = (0..n).filter(|&k| v[k].is_positive()).collect();
        if support.len() >= 2 {
            let k = support[0];
            let head: Vec<Rational> = (0..n).map(|i| if i == k { v[k].clone() } else { Rational::zero() }).collect();
            let tail: Vec<Rational> = (0..n).map(|i| if i == k { Rational::zero() } else { v[i].clone() }).collect();
            candidates.push(ordered(
                Diagram::canonicalize(n, [Point::new(head)?])?,
                Diagram::canonicalize(n, [Point::new(tail)?])?,
            ));
        }
        detail = format!("single vertex with {} nonzero coordinate(s)", support.len());
    } else {
        let floor = g.floor();
        if !floor.is_origin() {
            let shifted: Vec<Point> = g
                .generators()
                .iter()
                .map(|p| Point::new(p.coords().iter().zip(floor.coords()).map(|(a, b)| a - b).collect()))
                .collect::<Result<_>>()?;
            candidates.push(ordered(Diagram::canonicalize(n, [floor.clone()])?, Diagram::canonicalize(n, shifted)?));
        }
        let system = SummandSystem::new(g);
        let lp = system.linear_program();
        let edges = system.graph().edges.len();
        let mut pairs_checked = 0usize;
        for e in 1..edges {
            for (hi, lo) in [(e, 0), (0, e)] {
                let mut objective = vec![Rational::zero(); lp.num_vars()];
                objective[system.t_var(hi)] = Rational::one();
                objective[system.t_var(lo)] = -Rational::one();
                pairs_checked += 1;
                match lp.maximize(&objective) {
                    LpOutcome::Optimal { value, solution } if value.is_positive() => {
                        let a = system.assignment_from_solution(&solution);
                        candidates.push(ordered(system.summand_of(&a)?, system.co_summand_of(&a)?));
                    }
                    LpOutcome::Optimal { .. } => {}
                    other => {
                        return Err(Error::InvariantViolation(format!("summand system LP returned {other:?}")));
                    }
                }
            }
        }
        detail = format!(
            "{} compact edge(s), {} edge-scale LP(s) with optimum 0, floor {}; every summand is t*G",
            edges, pairs_checked, floor
        );
    }

    for (left, right) in &candidates {
        if !verify_decomposition(g, left, right)? {
            return Err(Error::InvariantViolation(format!("witness {left} + {right} does not verify against {g}")));
        }
    }
    match candidates.into_iter().min_by(|a, b| witness_key(a).cmp(&witness_key(b))) {
        Some((left, right)) => Ok(DecompositionCertificate::Decomposable { left, right, method: general }),
        None => Ok(DecompositionCertificate::Indecomposable { method: general, detail }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Extreme,
    NotExtreme,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Extreme => "extreme",
            Verdict::NotExtreme => "not-extreme",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub const HOMOGENEITY_CAVEAT: &str = "The verdict concerns the homogeneous singularity whose indicator diagram \
is shown. It transfers to the input only if the input is almost homogeneous (its residual Monge-Ampere mass \
equals the Newton number of this diagram), which support data alone cannot certify.";

#[derive(Debug, Clone, Serialize)]
pub struct ExtremityReport {
    pub input: SingularityInput,
    pub diagram: Diagram,
    pub verdict: Verdict,
    pub certificate: DecompositionCertificate,
    pub caveat: &'static str,
}

/// Extreme iff the indicator diagram is indecomposable.
pub fn classify_extreme(u: &SingularityInput) -> Result<ExtremityReport> {
    let diagram = u.diagram()?;
    let certificate = decide_decomposability(&diagram)?;
    let verdict = if certificate.is_decomposable() { Verdict::NotExtreme } else { Verdict::Extreme };
    Ok(ExtremityReport { input: u.clone(), diagram, verdict, certificate, caveat: HOMOGENEITY_CAVEAT })
}
