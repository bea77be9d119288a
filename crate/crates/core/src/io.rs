//! JSON file formats.
//!
//! - family: `{"m", "n", "functions": [[color, ...], ...]}`, with an optional
//!   `"g"` slot for AUC witnesses;
//! - reduction witness: `{"forward": {code: code}, "backward": {code: code}}`
//!   with codes as decimal strings;
//! - design: `{"v", "blockSize", "lambda", "classes"}`;
//! - Latin squares: `{"order", "grids"}`;
//! - C_k tree: `{"k", "m", "n", "nodes": {"0,1": [color, ...], "": [...]}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::designs::{LatinSquare, ResolvableDesign};
use crate::error::{Error, Result};
use crate::jumps::{AucWitness, CkTree, Injection};
use crate::php::{Code, ColorFunction, FunctionFamily, PhpShape, ReductionWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<u32>>,
    pub functions: Vec<Vec<u32>>,
}

impl FamilyFile {
    pub fn from_family(f: &FunctionFamily) -> Self {
        FamilyFile {
            m: f.shape().m(),
            n: f.shape().n(),
            g: None,
            functions: f.functions().iter().map(|c| c.colors().to_vec()).collect(),
        }
    }

    pub fn from_auc(w: &AucWitness) -> Self {
        FamilyFile {
            m: w.shape().m(),
            n: w.shape().n(),
            g: Some(w.g().colors().to_vec()),
            functions: w.f_list().iter().map(|c| c.colors().to_vec()).collect(),
        }
    }

    pub fn shape(&self) -> Result<PhpShape> {
        PhpShape::new(self.m, self.n)
    }

    pub fn functions(&self) -> Result<Vec<ColorFunction>> {
        let shape = self.shape()?;
        self.functions
            .iter()
            .map(|c| ColorFunction::new(shape, c.clone()))
            .collect()
    }

    pub fn to_family(&self) -> Result<FunctionFamily> {
        FunctionFamily::new(self.functions()?)
    }

    pub fn to_auc(&self) -> Result<AucWitness> {
        let g = self
            .g
            .clone()
            .ok_or_else(|| Error::Malformed("AUC witness needs a \"g\" slot".into()))?;
        AucWitness::new(ColorFunction::new(self.shape()?, g)?, self.functions()?)
    }
}

pub fn family_to_json(f: &FunctionFamily) -> String {
    to_json(&FamilyFile::from_family(f))
}

pub fn family_from_json(text: &str) -> Result<FunctionFamily> {
    serde_json::from_str::<FamilyFile>(text)?.to_family()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub forward: BTreeMap<String, String>,
    pub backward: BTreeMap<String, String>,
}

fn parse_code(s: &str) -> Result<Code> {
    s.parse()
        .map_err(|_| Error::Malformed(format!("code {s:?} is not a decimal integer")))
}

impl WitnessFile {
    pub fn from_witness(w: &ReductionWitness) -> Self {
        let strings = |m: &BTreeMap<Code, Code>| {
            m.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
        };
        WitnessFile {
            forward: strings(&w.forward),
            backward: strings(&w.backward),
        }
    }

    pub fn to_witness(&self) -> Result<ReductionWitness> {
        let codes = |m: &BTreeMap<String, String>| -> Result<BTreeMap<Code, Code>> {
            m.iter().map(|(a, b)| Ok((parse_code(a)?, parse_code(b)?))).collect()
        };
        Ok(ReductionWitness {
            forward: codes(&self.forward)?,
            backward: codes(&self.backward)?,
        })
    }
}

pub fn witness_to_json(w: &ReductionWitness) -> String {
    to_json(&WitnessFile::from_witness(w))
}

pub fn witness_from_json(text: &str) -> Result<ReductionWitness> {
    serde_json::from_str::<WitnessFile>(text)?.to_witness()
}

pub fn design_to_json(d: &ResolvableDesign) -> String {
    to_json(d)
}

pub fn design_from_json(text: &str) -> Result<ResolvableDesign> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinFile {
    pub order: usize,
    pub grids: Vec<Vec<Vec<usize>>>,
}

pub fn latin_to_json(order: usize, squares: &[LatinSquare]) -> String {
    to_json(&LatinFile {
        order,
        grids: squares.iter().map(|s| s.grid().to_vec()).collect(),
    })
}

pub fn latin_from_json(text: &str) -> Result<(usize, Vec<LatinSquare>)> {
    let file: LatinFile = serde_json::from_str(text)?;
    let squares = file
        .grids
        .into_iter()
        .map(LatinSquare::from_grid)
        .collect::<Result<Vec<_>>>()?;
    if let Some(s) = squares.iter().find(|s| s.order() != file.order) {
        return Err(Error::Malformed(format!(
            "square of order {} in a file of order {}",
            s.order(),
            file.order
        )));
    }
    Ok((file.order, squares))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CkTreeFile {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub nodes: BTreeMap<String, Vec<u32>>,
}

fn injection_key(sigma: &[usize]) -> String {
    sigma.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_injection(key: &str) -> Result<Injection> {
    if key.trim().is_empty() {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad injection key {key:?}")))
        })
        .collect()
}

pub fn ck_tree_to_json(t: &CkTree) -> String {
    to_json(&CkTreeFile {
        k: t.k(),
        m: t.shape().m(),
        n: t.shape().n(),
        nodes: t
            .nodes()
            .iter()
            .map(|(s, f)| (injection_key(s), f.colors().to_vec()))
            .collect(),
    })
}

pub fn ck_tree_from_json(text: &str) -> Result<CkTree> {
    let file: CkTreeFile = serde_json::from_str(text)?;
    let shape = PhpShape::new(file.m, file.n)?;
    let nodes = file
        .nodes
        .iter()
        .map(|(k, c)| Ok((parse_injection(k)?, ColorFunction::new(shape, c.clone())?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    CkTree::new(file.k, shape, nodes)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
