//! Surface models: toric fans and Neron-Severi lattices.

pub mod models;
pub mod ns;
pub mod toric;

use serde::Serialize;

pub use ns::{NegativeCurve, NsSurface, Zariski};
pub use toric::{build_toric, ToricSurface};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Surface {
    Toric(ToricSurface),
    Ns(NsSurface),
}

impl Surface {
    pub fn name(&self) -> &str {
        match self {
            Surface::Toric(t) => &t.name,
            Surface::Ns(n) => &n.name,
        }
    }
}
