//! JSON documents for multipartitions, symmetric elements, operator
//! matrices and transition tables.

use gmj_core::eigen::TransitionTable;
use gmj_core::field::VarSet;
use gmj_core::operators::OperatorMatrix;
use gmj_core::partitions::{MultiPartition, OrderKind, Partition};
use gmj_core::symspace::{BasisKind, SymSpace, SymmetricElement};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LabelError {
    #[error("invalid multipartition JSON: {0}")]
    Syntax(String),
    #[error("component {0} is not weakly decreasing and positive")]
    NotPartition(usize),
    #[error("expected {expected} colours, found {found}")]
    Colors { expected: usize, found: usize },
    #[error("degree mismatch: label has weight {found}, expected {expected}")]
    Degree { expected: u32, found: u32 },
}

/// Parses `[[],[2,1]]` into a multipartition with `n` colours of weight `d`.
pub fn parse_multipartition(s: &str, n: usize, d: u32) -> Result<MultiPartition, LabelError> {
    let raw: Vec<Vec<u32>> = serde_json::from_str(s).map_err(|e| LabelError::Syntax(e.to_string()))?;
    if raw.len() != n {
        return Err(LabelError::Colors { expected: n, found: raw.len() });
    }
    let parts = raw
        .into_iter()
        .enumerate()
        .map(|(i, p)| Partition::from_parts(p).ok_or(LabelError::NotPartition(i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let label = MultiPartition::new(parts);
    if label.weight() != d {
        return Err(LabelError::Degree { expected: d, found: label.weight() });
    }
    Ok(label)
}

pub fn multipartition_json(label: &MultiPartition) -> Vec<Vec<u32>> {
    label.components().iter().map(|p| p.parts().to_vec()).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoeffJson {
    pub index: Vec<Vec<u32>>,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ElementJson {
    pub basis: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub degree: u32,
    pub coeffs: Vec<CoeffJson>,
}

/// Coefficients listed in descending `L` order.
pub fn element_json(e: &SymmetricElement, vars: &VarSet) -> ElementJson {
    let space = SymSpace::new(e.colors(), e.degree());
    let coeffs = space
        .labels(OrderKind::L)
        .iter()
        .filter_map(|l| {
            let c = e.coeff(l);
            (!c.is_zero()).then(|| CoeffJson {
                index: multipartition_json(l),
                value: vars.format(&c),
            })
        })
        .collect();
    ElementJson {
        basis: e.basis().name().to_owned(),
        n: e.colors(),
        degree: e.degree(),
        coeffs,
    }
}

/// `m[(),(1)] + (c) m[(1),()]`, terms in descending `order`.
pub fn element_text(e: &SymmetricElement, vars: &VarSet, order: OrderKind) -> String {
    let space = SymSpace::new(e.colors(), e.degree());
    let prefix = match e.basis() {
        BasisKind::Monomial => "m",
        BasisKind::PowerSum => "p",
    };
    let terms: Vec<String> = space
        .labels(order)
        .iter()
        .filter_map(|l| {
            let c = e.coeff(l);
            if c.is_zero() {
                None
            } else if c.is_one() {
                Some(format!("{prefix}[{l}]"))
            } else {
                Some(format!("({}) {prefix}[{l}]", vars.pretty(&c)))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_owned()
    } else {
        terms.join(" + ")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixJson {
    pub operator: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub degree: u32,
    pub basis: String,
    pub order: String,
    pub rows: Vec<Vec<String>>,
}

impl From<&OperatorMatrix> for MatrixJson {
    fn from(m: &OperatorMatrix) -> Self {
        MatrixJson {
            operator: m.operator.name().to_owned(),
            n: m.n,
            degree: m.degree,
            basis: m.basis.name().to_owned(),
            order: m.order.name().to_owned(),
            rows: m.formatted_rows(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TableJson {
    pub kind: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub degree: u32,
    pub basis: String,
    pub order: String,
    pub rows: Vec<Vec<String>>,
}

impl From<&TransitionTable> for TableJson {
    fn from(t: &TransitionTable) -> Self {
        TableJson {
            kind: t.kind.name().to_owned(),
            n: t.n,
            degree: t.degree,
            basis: BasisKind::Monomial.name().to_owned(),
            order: t.order.name().to_owned(),
            rows: t.formatted_rows(),
        }
    }
}

impl TableJson {
    /// Row of the eigenfunction labelled `label`, as a monomial-basis element.
    pub fn element(&self, vars: &VarSet, label: &MultiPartition) -> Option<SymmetricElement> {
        let order = if self.order == "R" { OrderKind::R } else { OrderKind::L };
        let space = SymSpace::new(self.n, self.degree);
        let labels = space.labels(order);
        let i = labels.iter().position(|l| l == label)?;
        let terms = labels
            .iter()
            .zip(&self.rows[i])
            .map(|(l, s)| Ok((l.clone(), vars.parse(s)?)))
            .collect::<Result<Vec<_>, gmj_core::field::FieldError>>()
            .ok()?;
        SymmetricElement::from_terms(BasisKind::Monomial, self.n, self.degree, terms).ok()
    }

    /// Structural sanity of a table read back from disk: dimensions,
    /// unit diagonal, zeros below it and parseable entries.
    pub fn is_well_formed(&self, vars: &VarSet, kind: &str) -> bool {
        let dim = SymSpace::new(self.n, self.degree).dim();
        self.kind == kind
            && self.rows.len() == dim
            && self.rows.iter().enumerate().all(|(i, r)| {
                r.len() == dim
                    && r.iter().enumerate().all(|(j, s)| match vars.parse(s) {
                        Ok(v) => (j != i || v.is_one()) && (j >= i || v.is_zero()),
                        Err(_) => false,
                    })
            })
    }
}

impl MatrixJson {
    pub fn is_well_formed(&self, vars: &VarSet, operator: &str) -> bool {
        let dim = SymSpace::new(self.n, self.degree).dim();
        self.operator == operator
            && self.rows.len() == dim
            && self
                .rows
                .iter()
                .all(|r| r.len() == dim && r.iter().all(|s| vars.parse(s).is_ok()))
    }
}
