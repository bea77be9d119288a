use super::pair::Pair;
use super::shape::PhpShape;
use super::solutions::SolutionSet;
use crate::error::{Error, Result};

/// A total function `m -> n`, an instance of RPHP(m,n).
///
/// Surjectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorFunction {
    shape: PhpShape,
    colors: Vec<u32>,
}

impl ColorFunction {
    pub fn new(shape: PhpShape, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != shape.m() {
            return Err(Error::LengthMismatch {
                len: colors.len(),
                m: shape.m(),
            });
        }
        if let Some((point, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize >= shape.n())
        {
            return Err(Error::ColorOutOfRange {
                point,
                color: c as usize,
                n: shape.n(),
            });
        }
        Ok(ColorFunction { shape, colors })
    }

    pub fn from_fn(shape: PhpShape, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(shape, (0..shape.m()).map(|x| f(x) as u32).collect())
    }

    /// The canonical function whose nontrivial fibers are `blocks`; points in
    /// no block become singletons. Blocks must be pairwise disjoint.
    pub fn from_blocks(shape: PhpShape, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label: Vec<Option<usize>> = vec![None; shape.m()];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= shape.m() {
                    return Err(Error::PointOutOfRange { point: x, m: shape.m() });
                }
                if label[x].replace(b).is_some() {
                    return Err(Error::Malformed(format!("point {x} lies in two blocks")));
                }
            }
        }
        let mut color_of_block = vec![u32::MAX; blocks.len()];
        let mut next = 0u32;
        let mut colors = Vec::with_capacity(shape.m());
        for l in label {
            let c = match l {
                Some(b) if color_of_block[b] != u32::MAX => color_of_block[b],
                Some(b) => {
                    color_of_block[b] = next;
                    next += 1;
                    next - 1
                }
                None => {
                    next += 1;
                    next - 1
                }
            };
            colors.push(c);
        }
        Self::new(shape, colors)
    }

    pub fn constant(shape: PhpShape) -> Self {
        ColorFunction {
            shape,
            colors: vec![0; shape.m()],
        }
    }

    /// Parses fiber notation such as `(012)(38)(46)(57)`: the k-th listed
    /// fiber receives color k. Points are single digits when `m <= 10` and
    /// comma-separated otherwise, as in `(0,10,11)(1)`.
    pub fn parse_fibers(shape: PhpShape, text: &str) -> Result<Self> {
        let mut colors: Vec<Option<u32>> = vec![None; shape.m()];
        let text = text.trim();
        if !text.starts_with('(') || !text.ends_with(')') {
            return Err(Error::Malformed(format!("fiber notation {text:?}")));
        }
        let inner = &text[1..text.len() - 1];
        for (color, fiber) in inner.split(")(").enumerate() {
            let points: Vec<usize> = if fiber.contains(',') || shape.m() > 10 {
                fiber
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::Malformed(format!("fiber {fiber:?}: {e}")))?
            } else {
                fiber
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Malformed(format!("fiber {fiber:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            for p in points {
                if p >= shape.m() {
                    return Err(Error::PointOutOfRange { point: p, m: shape.m() });
                }
                if colors[p].is_some() {
                    return Err(Error::Malformed(format!("point {p} listed twice")));
                }
                colors[p] = Some(color as u32);
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(p, c)| c.ok_or_else(|| Error::Malformed(format!("point {p} unassigned"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, colors)
    }

    pub fn shape(&self) -> PhpShape {
        self.shape
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, point: usize) -> usize {
        self.colors[point] as usize
    }

    /// Fibers `f^{-1}(c)` for every color `c < n`, possibly empty.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.shape.n()];
        for (p, &c) in self.colors.iter().enumerate() {
            fibers[c as usize].push(p);
        }
        fibers
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.shape.n()];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Monochromatic pairs `{i,j}` with `f(i) = f(j)`.
    pub fn solutions(&self) -> SolutionSet {
        let mut set = SolutionSet::empty(self.shape);
        for j in 1..self.shape.m() {
            for i in 0..j {
                if self.colors[i] == self.colors[j] {
                    set.insert(Pair { i, j });
                }
            }
        }
        set
    }

    pub fn solves(&self, pair: Pair) -> bool {
        pair.j < self.shape.m() && self.colors[pair.i] == self.colors[pair.j]
    }

    /// Restricted-growth relabeling: colors are renamed in order of first
    /// occurrence.
    pub fn canonical(&self) -> ColorFunction {
        let mut map = vec![u32::MAX; self.shape.n()];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == u32::MAX {
                    map[c as usize] = next;
                    next += 1;
                }
                map[c as usize]
            })
            .collect();
        ColorFunction {
            shape: self.shape,
            colors,
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    /// Restricts to the first `shape.m()` points and reinterprets the result
    /// with `shape.n()` colors.
    pub fn restrict(&self, shape: PhpShape) -> Result<ColorFunction> {
        if shape.m() > self.shape.m() {
            return Err(Error::Parameter(format!(
                "cannot restrict a function on {} points to {}",
                self.shape.m(),
                shape.m()
            )));
        }
        ColorFunction::new(shape, self.colors[..shape.m()].to_vec())
    }

    /// Base-n code with point 0 as the least significant digit.
    pub fn code(&self) -> u128 {
        self.colors
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.shape.n() as u128 + c as u128)
    }

    pub fn from_code(shape: PhpShape, mut code: u128) -> Result<Self> {
        let n = shape.n() as u128;
        let mut colors = Vec::with_capacity(shape.m());
        for _ in 0..shape.m() {
            colors.push((code % n) as u32);
            code /= n;
        }
        if code != 0 {
            return Err(Error::Malformed(format!("code too large for {shape}")));
        }
        Self::new(shape, colors)
    }

    /// Fiber notation, fibers ordered by color and empty fibers omitted.
    pub fn to_fibers(&self) -> String {
        let wide = self.shape.m() > 10;
        self.fibers()
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| {
                let body: Vec<String> = f.iter().map(|p| p.to_string()).collect();
                format!("({})", body.join(if wide { "," } else { "" }))
            })
            .collect()
    }
}

impl std::fmt::Display for ColorFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_fibers())
    }
}
