//! The concrete graphs of groups for zero, one and two points.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::unionfind::UnionFind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tamecm_autgroup::AutElem;
use tamecm_cmspace::{cm_normal_form, MatrixPair};
use tamecm_core::{qi, qr, Qi, Scalar, UniPoly, Var};
use tamecm_orbits::{classify_c2_orbit, C2Orbit};

use crate::error::{GraphError, Result};
use crate::graph::GraphOfGroups;

/// `O_U(2,1)`, `O_B^reg`, ...
pub fn orbit_label(group: char, orbit: C2Orbit) -> String {
    match orbit {
        C2Orbit::Oreg => format!("O_{group}^reg"),
        C2Orbit::O21 => format!("O_{group}(2,1)"),
        C2Orbit::O22 => format!("O_{group}(2,2)"),
    }
}

/// Stabilizer of the representative of a B-orbit in the two-point space.
fn b_stabilizer(orbit: C2Orbit) -> &'static str {
    match orbit {
        C2Orbit::O22 => "G_{2,x}⋊T",
        C2Orbit::O21 => "G_{2,y}⋊T",
        C2Orbit::Oreg => "G^{(1)}_{2,y}⋊Z₂",
    }
}

/// Stabilizer of the representative of a U-orbit.
fn u_stabilizer(orbit: C2Orbit) -> &'static str {
    match orbit {
        C2Orbit::Oreg => "Z₂",
        C2Orbit::O21 | C2Orbit::O22 => "T",
    }
}

fn segment(name: &str, a: &str, u: &str, b: &str) -> Result<GraphOfGroups> {
    let mut g = GraphOfGroups::new(name);
    let va = g.add_vertex("O_A", a);
    let vb = g.add_vertex("O_B", b);
    g.add_edge("O_U", u, va, vb)?;
    g.choose_tree()?;
    Ok(g)
}

/// Γ_n for `n <= 2`. Vertices are the A-orbits then the B-orbits, edges the
/// U-orbits. For two points the edges are labelled by classifying each
/// orbit representative.
pub fn build_gamma(n: usize) -> Result<GraphOfGroups> {
    match n {
        0 => segment("G_0", "A", "U", "B"),
        1 => segment("G_1", "A_1", "U_1", "B_1"),
        2 => {
            let mut g = GraphOfGroups::new("G_2");
            // A is transitive on the two-point space; the stabilizer of the
            // A-orbit basepoint inside A is the torus.
            let va = g.add_vertex("O_A", "T");
            for orbit in [C2Orbit::O22, C2Orbit::O21, C2Orbit::Oreg] {
                let label = classify_c2_orbit(&orbit.representative())?;
                let vb = g.add_vertex(orbit_label('B', label), b_stabilizer(label));
                g.add_edge(orbit_label('U', label), u_stabilizer(label), va, vb)?;
            }
            g.choose_tree()?;
            Ok(g)
        }
        _ => Err(GraphError::Unsupported(n)),
    }
}

/// Sampling evidence for the orbit structure of Γ_2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma2Certificate {
    pub samples: usize,
    /// Classifier label counts over the sampled points.
    pub counts: BTreeMap<C2Orbit, usize>,
    /// Samples whose label changed under a random element of U.
    pub u_violations: usize,
    /// `(label of p, label of p·a)` for random affine `a`.
    pub a_links: BTreeSet<(C2Orbit, C2Orbit)>,
}

impl Gamma2Certificate {
    pub fn labels_found(&self) -> usize {
        self.counts.len()
    }

    /// The A-links join all three labels into one class.
    pub fn a_connected(&self) -> bool {
        let idx = |o: C2Orbit| C2Orbit::ALL.iter().position(|&x| x == o).expect("known label");
        let mut uf = UnionFind::<usize>::new(C2Orbit::ALL.len());
        for &(a, b) in &self.a_links {
            uf.union(idx(a), idx(b));
        }
        (1..C2Orbit::ALL.len()).all(|k| uf.equiv(0, k))
    }

    pub fn passed(&self) -> bool {
        self.labels_found() == 3 && self.u_violations == 0 && self.a_connected()
    }
}

fn small(rng: &mut ChaCha8Rng) -> Qi {
    qr(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Qi {
    loop {
        let v = small(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// `(a x + q0 + q1 y, a^{-1} y + h)`.
fn random_u(rng: &mut ChaCha8Rng) -> Result<AutElem<Qi>> {
    let q = UniPoly::from_coeffs(Var::Y, vec![small(rng), small(rng)]);
    Ok(AutElem::triangular(nonzero(rng), q, small(rng))?)
}

/// Affine map with linear part `((1 + b c, b), (c, 1))`.
fn random_a(rng: &mut ChaCha8Rng) -> Result<AutElem<Qi>> {
    let (b, c) = (small(rng), small(rng));
    Ok(AutElem::affine([qi(1) + b.clone() * c.clone(), b, c, qi(1)], [small(rng), small(rng)])?)
}

/// Sample point number `k`: a moved singular representative for two out of
/// three samples, a CM normal form otherwise.
fn sample_point(k: usize, rng: &mut ChaCha8Rng) -> Result<MatrixPair<Qi>> {
    let base = match k % 3 {
        0 => C2Orbit::O21.representative(),
        1 => C2Orbit::O22.representative(),
        _ => {
            let l1 = small(rng);
            let l2 = loop {
                let l = small(rng);
                if l != l1 {
                    break l;
                }
            };
            cm_normal_form(&[l1, l2], &[small(rng), small(rng)])?
        }
    };
    Ok(base.act_elem(&random_u(rng)?)?)
}

pub fn certify_gamma2(samples: usize, seed: u64) -> Result<Gamma2Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cert = Gamma2Certificate { samples, counts: BTreeMap::new(), u_violations: 0, a_links: BTreeSet::new() };
    for k in 0..samples {
        let p = sample_point(k, &mut rng)?;
        let label = classify_c2_orbit(&p)?;
        *cert.counts.entry(label).or_default() += 1;
        if classify_c2_orbit(&p.act_elem(&random_u(&mut rng)?)?)? != label {
            cert.u_violations += 1;
        }
        let moved = classify_c2_orbit(&p.act_elem(&random_a(&mut rng)?)?)?;
        cert.a_links.insert((label, moved));
    }
    Ok(cert)
}
