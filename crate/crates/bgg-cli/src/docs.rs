//! Stable serializable schemas for structured output.
//!
//! Every emitted document carries a schema version and, where conventions
//! matter (PBW order, structure-constant gauge, orientation), a convention
//! block: the outputs are convention-relative and must say so themselves.

use serde::{Deserialize, Serialize};

use bgg_core::chevalley::Uea;
use bgg_core::kostant::BggDiagram;
use bgg_core::rootcore::{RootSystem, Weight};
use bgg_core::{Error, Rat};

pub const SCHEMA_VERSION: u32 = 1;

/// Convention block attached to every symbol-carrying document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub pbw_order: String,
    pub chevalley_gauge: String,
    pub orientation: String,
}

impl Conventions {
    pub fn current() -> Conventions {
        Conventions {
            pbw_order: String::from(
                "generators: negative root vectors by (grading height asc, base root order); \
                 monomials compared by (total degree, reverse-lexicographic exponents)",
            ),
            chevalley_gauge: String::from(
                "extraspecial pairs positive: N = +(p+1) on the least simple summand",
            ),
            orientation: String::from(
                "node weight = -(w.lambda) (induced bundle label); \
                 cohomology piece highest weight = w.lambda",
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramMetadata {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    /// Highest weight in fundamental coordinates.
    pub lambda: Vec<i64>,
    pub conventions: Conventions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: usize,
    /// Reduced word in 1-based simple reflection indices.
    pub weyl_word: Vec<usize>,
    pub length: usize,
    /// Bundle weight in simple-root coordinates, exact rationals as strings.
    pub weight_simple_coords: Vec<String>,
    pub weight_fundamental_coords: Vec<i64>,
    /// Fiber rank of the cohomology bundle at this node.
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolTerm {
    pub exponents: Vec<u32>,
    pub numerator: i64,
    pub denominator: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub src: usize,
    pub dst: usize,
    pub heisenberg_order: i64,
    pub symbol: Vec<SymbolTerm>,
}

/// The full operator-diagram document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub schema_version: u32,
    pub metadata: DiagramMetadata,
    pub nodes: Vec<NodeDoc>,
    pub arrows: Vec<ArrowDoc>,
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_terms(u: &Uea) -> Result<Vec<SymbolTerm>, Error> {
    let mut terms: Vec<(&Vec<u32>, &Rat)> = u.terms.iter().collect();
    terms.sort_by(|(a, _), (b, _)| bgg_core::chevalley::cmp_mono(b, a));
    terms
        .into_iter()
        .map(|(m, c)| {
            let numerator = i64::try_from(c.numer().clone())
                .map_err(|_| Error::InvalidInput("symbol coefficient exceeds i64".into()))?;
            let denominator = u64::try_from(c.denom().clone())
                .map_err(|_| Error::InvalidInput("symbol denominator exceeds u64".into()))?;
            Ok(SymbolTerm { exponents: m.clone(), numerator, denominator })
        })
        .collect()
}

fn weight_fundamental_ints(rs: &RootSystem, w: &Weight) -> Result<Vec<i64>, Error> {
    rs.to_fundamental(w)
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                i64::try_from(c.to_integer())
                    .map_err(|_| Error::InvalidInput("fundamental coordinate exceeds i64".into()))
            } else {
                Err(Error::Inconsistency(
                    "expected integral fundamental coordinates".into(),
                ))
            }
        })
        .collect()
}

/// Build the stable document from a computed diagram.
pub fn diagram_document(rs: &RootSystem, diagram: &BggDiagram) -> Result<DiagramDocument, Error> {
    let lambda = weight_fundamental_ints(rs, &diagram.lambda)?;
    let mut nodes = Vec::new();
    for (id, n) in diagram.nodes.iter().enumerate() {
        nodes.push(NodeDoc {
            id,
            weyl_word: n.word.0.iter().map(|&i| i + 1).collect(),
            length: n.length,
            weight_simple_coords: n.bundle_weight.coords.iter().map(rat_to_string).collect(),
            weight_fundamental_coords: weight_fundamental_ints(rs, &n.bundle_weight)?,
            rank: u64::try_from(n.rank.clone())
                .map_err(|_| Error::InvalidInput("bundle rank exceeds u64".into()))?,
        });
    }
    let mut arrows = Vec::new();
    for a in &diagram.arrows {
        arrows.push(ArrowDoc {
            src: a.src,
            dst: a.dst,
            heisenberg_order: a.order,
            symbol: rat_terms(&a.symbol)?,
        });
    }
    Ok(DiagramDocument {
        schema_version: SCHEMA_VERSION,
        metadata: DiagramMetadata {
            type_label: format!("{}{}", rs.label().letter(), rs.rank()),
            rank: rs.rank(),
            lambda,
            conventions: Conventions::current(),
        },
        nodes,
        arrows,
    })
}

impl DiagramDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schema serializes") + "\n"
    }

    pub fn parse(text: &str) -> Result<DiagramDocument, Error> {
        let doc: DiagramDocument = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("cannot parse diagram document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        for a in &doc.arrows {
            if a.src >= doc.nodes.len() || a.dst >= doc.nodes.len() {
                return Err(Error::InvalidInput(
                    "arrow references a missing node".into(),
                ));
            }
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bgg_core::chevalley::Chevalley;
    use bgg_core::rootcore::TypeLabel;
    use bgg_core::{kostant, Bounds};

    #[test]
    fn document_roundtrip_is_identity() {
        let rs = RootSystem::new(TypeLabel::A, 2).unwrap();
        let chev = Chevalley::new(&rs).unwrap();
        let diagram =
            kostant::bgg_diagram(&rs, &chev, &Weight::zero(2), &Bounds::default()).unwrap();
        let doc = diagram_document(&rs, &diagram).unwrap();
        let json = doc.to_json();
        let parsed = DiagramDocument::parse(&json).unwrap();
        assert_eq!(doc, parsed);
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn arrows_reference_existing_nodes() {
        let bad = r#"{"schema_version":1,"metadata":{"type":"A2","rank":2,"lambda":[0,0],
            "conventions":{"pbw_order":"","chevalley_gauge":"","orientation":""}},
            "nodes":[],"arrows":[{"src":0,"dst":1,"heisenberg_order":1,"symbol":[]}]}"#;
        assert!(DiagramDocument::parse(bad).is_err());
    }
}
