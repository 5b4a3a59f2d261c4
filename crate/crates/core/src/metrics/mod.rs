//! Topology statistics of an immutable [`Graph`]: degree distribution,
//! rich-club connectivity, degree mixing, shortest paths and triangles.

mod degree;
mod fit;
mod mixing;
mod paths;
mod rich_club;
mod triangles;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, NodeId};

pub use degree::{degree_distribution, DegreeDistribution, GAMMA_FIT_RANGE};
pub use fit::fit_power_law;
pub use mixing::{assortativity, knn_by_degree};
pub use paths::{path_stats, PathStats};
pub use rich_club::{degree_ranking, rich_club, RichClubCurve, THETA_FIT_RANGE};
pub use triangles::{triangle_stats, TriangleStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("graph has no links")]
    NoLinks,
    #[error("node {0} is isolated")]
    IsolatedNode(NodeId),
    #[error("graph is disconnected: no path between nodes {0} and {1}")]
    Disconnected(NodeId, NodeId),
    #[error("need at least {needed} nodes, got {got}")]
    TooSmall { needed: usize, got: usize },
}

/// Every scalar reported per graph, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scalar {
    Nodes,
    Links,
    Theta,
    Phi001,
    TopClique,
    P1,
    P2,
    P3,
    Gamma,
    KMax,
    Alpha,
    EllStar,
    LinkRatio,
    MeanClustering,
}

impl Scalar {
    pub const ALL: [Scalar; 14] = [
        Scalar::Nodes,
        Scalar::Links,
        Scalar::Theta,
        Scalar::Phi001,
        Scalar::TopClique,
        Scalar::P1,
        Scalar::P2,
        Scalar::P3,
        Scalar::Gamma,
        Scalar::KMax,
        Scalar::Alpha,
        Scalar::EllStar,
        Scalar::LinkRatio,
        Scalar::MeanClustering,
    ];

    /// Column name in CSV output.
    pub fn column(self) -> &'static str {
        match self {
            Scalar::Nodes => "n",
            Scalar::Links => "l",
            Scalar::Theta => "theta",
            Scalar::Phi001 => "phi_001",
            Scalar::TopClique => "n_clique",
            Scalar::P1 => "p1",
            Scalar::P2 => "p2",
            Scalar::P3 => "p3",
            Scalar::Gamma => "gamma",
            Scalar::KMax => "k_max",
            Scalar::Alpha => "alpha",
            Scalar::EllStar => "ell_star",
            Scalar::LinkRatio => "l_int_over_l_ext",
            Scalar::MeanClustering => "mean_clustering",
        }
    }

    /// Row label in human-readable tables.
    pub fn title(self) -> &'static str {
        match self {
            Scalar::Nodes => "Number of nodes, N",
            Scalar::Links => "Number of links, L",
            Scalar::Theta => "Rich-club exponent, theta",
            Scalar::Phi001 => "Rich-club connectivity phi(0.01)",
            Scalar::TopClique => "Top clique size, n_clique",
            Scalar::P1 => "Degree distribution P(1)",
            Scalar::P2 => "Degree distribution P(2)",
            Scalar::P3 => "Degree distribution P(3)",
            Scalar::Gamma => "Degree distribution exponent, gamma",
            Scalar::KMax => "Maximum degree, k_max",
            Scalar::Alpha => "Assortativity coefficient, alpha",
            Scalar::EllStar => "Characteristic path length, l*",
            Scalar::LinkRatio => "L_int / L_ext",
            Scalar::MeanClustering => "Mean clustering coefficient",
        }
    }

    /// Fractions that read better as percentages.
    pub fn is_fraction(self) -> bool {
        matches!(self, Scalar::Phi001 | Scalar::P1 | Scalar::P2 | Scalar::P3)
    }
}

/// Plot-ready curves, one family per figure type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    /// `P(k)` against `k`.
    DegreeDistribution,
    /// `φ(r/N)` against `r/N`.
    RichClub,
    /// `k_nn(k)` against `k`.
    NearestNeighborDegree,
    /// `P(≥ l)` against hop distance `l`.
    PathLengthCcd,
    /// `P(≥ k_t)` against `k_t`.
    TriangleCcd,
    /// Mean `k_t` against `k`.
    TrianglesByDegree,
}

impl CurveKind {
    pub const ALL: [CurveKind; 6] = [
        CurveKind::DegreeDistribution,
        CurveKind::RichClub,
        CurveKind::NearestNeighborDegree,
        CurveKind::PathLengthCcd,
        CurveKind::TriangleCcd,
        CurveKind::TrianglesByDegree,
    ];

    pub fn file_stem(self) -> &'static str {
        match self {
            CurveKind::DegreeDistribution => "degree_distribution",
            CurveKind::RichClub => "rich_club",
            CurveKind::NearestNeighborDegree => "knn",
            CurveKind::PathLengthCcd => "path_length_ccd",
            CurveKind::TriangleCcd => "triangle_ccd",
            CurveKind::TrianglesByDegree => "triangles_by_degree",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curves {
    pub degree_distribution: Vec<(f64, f64)>,
    pub rich_club: Vec<(f64, f64)>,
    pub knn: Vec<(f64, f64)>,
    pub path_length_ccd: Vec<(f64, f64)>,
    pub triangle_ccd: Vec<(f64, f64)>,
    pub triangles_by_degree: Vec<(f64, f64)>,
}

impl Curves {
    pub fn get(&self, kind: CurveKind) -> &[(f64, f64)] {
        match kind {
            CurveKind::DegreeDistribution => &self.degree_distribution,
            CurveKind::RichClub => &self.rich_club,
            CurveKind::NearestNeighborDegree => &self.knn,
            CurveKind::PathLengthCcd => &self.path_length_ccd,
            CurveKind::TriangleCcd => &self.triangle_ccd,
            CurveKind::TrianglesByDegree => &self.triangles_by_degree,
        }
    }
}

/// All statistics of one graph. Probabilities are stored as fractions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub nodes: usize,
    pub links: usize,
    pub internal_links: usize,
    pub external_links: usize,
    pub theta: Option<f64>,
    pub phi_001: Option<f64>,
    pub top_clique: usize,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub gamma: Option<f64>,
    pub k_max: usize,
    pub alpha: Option<f64>,
    pub ell_star: f64,
    pub mean_clustering: Option<f64>,
    pub curves: Curves,
}

impl MetricsReport {
    pub fn scalar(&self, s: Scalar) -> Option<f64> {
        match s {
            Scalar::Nodes => Some(self.nodes as f64),
            Scalar::Links => Some(self.links as f64),
            Scalar::Theta => self.theta,
            Scalar::Phi001 => self.phi_001,
            Scalar::TopClique => Some(self.top_clique as f64),
            Scalar::P1 => Some(self.p1),
            Scalar::P2 => Some(self.p2),
            Scalar::P3 => Some(self.p3),
            Scalar::Gamma => self.gamma,
            Scalar::KMax => Some(self.k_max as f64),
            Scalar::Alpha => self.alpha,
            Scalar::EllStar => Some(self.ell_star),
            Scalar::LinkRatio => (self.external_links > 0)
                .then(|| self.internal_links as f64 / self.external_links as f64),
            Scalar::MeanClustering => self.mean_clustering,
        }
    }
}

fn int_curve<I: IntoIterator<Item = (usize, f64)>>(points: I) -> Vec<(f64, f64)> {
    points.into_iter().map(|(x, y)| (x as f64, y)).collect()
}

/// Computes every statistic of a connected graph with at least 3 nodes.
pub fn report(g: &Graph) -> Result<MetricsReport, MetricsError> {
    if g.node_count() < 3 {
        return Err(MetricsError::TooSmall {
            needed: 3,
            got: g.node_count(),
        });
    }
    // fails first on disconnected input, before the cheaper metrics run
    let paths = path_stats(g)?;
    let degrees = degree_distribution(g);
    let club = rich_club(g);
    let alpha = assortativity(g)?;
    let knn = knn_by_degree(g)?;
    let triangles = triangle_stats(g);

    Ok(MetricsReport {
        nodes: g.node_count(),
        links: g.link_count(),
        internal_links: g.internal_links(),
        external_links: g.external_links(),
        theta: club.theta,
        phi_001: club.phi_at_fraction(0.01),
        top_clique: club.top_clique,
        p1: degrees.p(1),
        p2: degrees.p(2),
        p3: degrees.p(3),
        gamma: degrees.gamma,
        k_max: degrees.max_degree,
        alpha,
        ell_star: paths.ell_star,
        mean_clustering: triangles.mean_clustering(),
        curves: Curves {
            degree_distribution: degrees.points(),
            rich_club: club.points(),
            knn: int_curve(knn),
            path_length_ccd: int_curve(paths.ccd()),
            triangle_ccd: int_curve(triangles.ccd()),
            triangles_by_degree: int_curve(triangles.kt_by_degree),
        },
    })
}
