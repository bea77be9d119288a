use crate::designs::{verify_design, ResolvableDesign};
use crate::error::{Error, Result};
use crate::php::{ColorFunction, FunctionFamily, PhpShape};

/// One function per parallel class of an RBIBD(qn, q, 1): a point goes to the
/// index of its block, blocks ordered by minimum element.
pub fn rbibd_to_family(design: &ResolvableDesign) -> Result<FunctionFamily> {
    if let Err(v) = verify_design(design) {
        return Err(Error::Precondition(format!("design does not verify: {v}")));
    }
    if design.lambda != 1 {
        return Err(Error::Parameter(format!("need lambda = 1, got {}", design.lambda)));
    }
    let q = design.block_size;
    if q == 0 || design.v % q != 0 {
        return Err(Error::Parameter(format!(
            "block size {q} does not divide {} points",
            design.v
        )));
    }
    let n = design.v / q;
    let shape = PhpShape::new(design.v, n)?;
    let d = design.clone().normalized();
    let functions = d
        .classes
        .iter()
        .map(|class| {
            if class.len() != n {
                return Err(Error::Precondition(format!(
                    "class has {} blocks, expected {n}",
                    class.len()
                )));
            }
            ColorFunction::from_blocks(shape, class)
        })
        .collect::<Result<Vec<_>>>()?;
    FunctionFamily::new(functions)
}

/// The fiber partitions of a disjoint family of size `(qn-1)/(q-1)` on
/// `(qn, n)`, as an RBIBD(qn, q, 1).
pub fn family_to_rbibd(family: &FunctionFamily, q: usize) -> Result<ResolvableDesign> {
    let shape = family.shape();
    let (m, n) = (shape.m(), shape.n());
    if q < 2 || m != q * n {
        return Err(Error::Parameter(format!("shape {shape} is not (qn, n) for q = {q}")));
    }
    if (m - 1) % (q - 1) != 0 || family.len() != (m - 1) / (q - 1) {
        return Err(Error::Precondition(format!(
            "a family of size {} cannot resolve an RBIBD({m},{q},1)",
            family.len()
        )));
    }
    if let Err(v) = family.check_disjoint() {
        return Err(Error::Precondition(format!("family is not disjoint: {v}")));
    }
    let classes = family
        .functions()
        .iter()
        .map(|f| f.fibers().into_iter().filter(|b| !b.is_empty()).collect())
        .collect();
    let d = ResolvableDesign {
        v: m,
        block_size: q,
        lambda: 1,
        classes,
    }
    .normalized();
    if let Err(v) = verify_design(&d) {
        return Err(Error::Precondition(format!("fibers do not form a design: {v}")));
    }
    Ok(d)
}
