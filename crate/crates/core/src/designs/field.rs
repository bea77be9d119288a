use crate::error::{Error, Result};

/// Addition and multiplication tables of GF(p^e), `p^e <= 16`.
///
/// Element `x` stands for the polynomial whose coefficient of `t^k` is the
/// k-th base-p digit of `x`; arithmetic is reduced modulo a fixed
/// irreducible polynomial per order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    p: usize,
    e: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

/// Low-order coefficients of the monic modulus `t^e + c_{e-1} t^{e-1} + ... + c_0`.
fn modulus(p: usize, e: usize) -> Option<Vec<usize>> {
    match (p, e) {
        (_, 1) => Some(vec![0]),
        // t^2 + t + 1
        (2, 2) => Some(vec![1, 1]),
        // t^3 + t + 1
        (2, 3) => Some(vec![1, 1, 0]),
        // t^4 + t + 1
        (2, 4) => Some(vec![1, 1, 0, 0]),
        // t^2 + 1
        (3, 2) => Some(vec![1, 0]),
        _ => None,
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Splits `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(x: usize, p: usize, e: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(e);
    let mut x = x;
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mul(a: &[usize], b: &[usize], p: usize, low: &[usize]) -> Vec<usize> {
    let e = a.len();
    let mut prod = vec![0; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // t^e = -(c_{e-1} t^{e-1} + ... + c_0)
    for deg in (e..2 * e).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (k, &lk) in low.iter().enumerate() {
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + (p - c * lk % p)) % p;
        }
    }
    prod.truncate(e);
    prod
}

impl FieldTable {
    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// Exhaustive check of the field axioms; returns the first failure.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.order();
        let (add, mul) = (&self.add, &self.mul);
        for a in 0..q {
            if add[0][a] != a || mul[1][a] != a {
                return Err(format!("identity fails at {a}"));
            }
            if !(0..q).any(|b| add[a][b] == 0) {
                return Err(format!("{a} has no additive inverse"));
            }
            if a != 0 && !(0..q).any(|b| mul[a][b] == 1) {
                return Err(format!("{a} has no multiplicative inverse"));
            }
            for b in 0..q {
                if add[a][b] != add[b][a] || mul[a][b] != mul[b][a] {
                    return Err(format!("commutativity fails at ({a},{b})"));
                }
                for c in 0..q {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(format!("additive associativity fails at ({a},{b},{c})"));
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(format!("multiplicative associativity fails at ({a},{b},{c})"));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds GF(p^e) for `p^e <= 16`.
pub fn gf_build(p: usize, e: usize) -> Result<FieldTable> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    let q = p
        .checked_pow(e as u32)
        .filter(|&q| e >= 1 && q <= 16)
        .ok_or_else(|| Error::Parameter(format!("GF({p}^{e}) is outside the supported orders <= 16")))?;
    let low = modulus(p, e).ok_or_else(|| Error::Unsupported(format!("no modulus fixed for GF({p}^{e})")))?;
    let elems: Vec<Vec<usize>> = (0..q).map(|x| digits(x, p, e)).collect();
    let mut add = vec![vec![0; q]; q];
    let mut mul = vec![vec![0; q]; q];
    for a in 0..q {
        for b in 0..q {
            let sum: Vec<usize> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % p).collect();
            add[a][b] = undigits(&sum, p);
            mul[a][b] = undigits(&poly_mul(&elems[a], &elems[b], p, &low), p);
        }
    }
    Ok(FieldTable { p, e, add, mul })
}

/// GF(q) for a prime power `q <= 16`.
pub fn gf_of_order(q: usize) -> Result<FieldTable> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::Parameter(format!("{q} is not a prime power")))?;
    gf_build(p, e)
}
