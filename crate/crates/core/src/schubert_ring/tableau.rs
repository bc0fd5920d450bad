//! Bounded Schur-function products by semistandard-tableau enumeration.
//!
//! Test oracle only: both factors are expanded into monomials in `nvars`
//! variables, multiplied, and re-expanded greedily in the Schur basis.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Largest `|λ| + |μ|` the oracle accepts.
pub const ORACLE_MAX_SIZE: usize = 8;

type Monomials = HashMap<Vec<u8>, i64>;

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`, keyed by `ν` (trailing zeros trimmed).
pub fn schur_product_oracle(
    lam: &[usize],
    mu: &[usize],
    nvars: usize,
) -> Result<BTreeMap<Vec<usize>, i64>> {
    for shape in [lam, mu] {
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{shape:?} is not non-increasing"
            )));
        }
    }
    let lam = trim(lam);
    let mu = trim(mu);
    let size: usize = lam.iter().chain(&mu).sum();
    if size > ORACLE_MAX_SIZE {
        return Err(Error::OracleBound(format!(
            "|lam|+|mu| = {size} exceeds {ORACLE_MAX_SIZE}"
        )));
    }
    if nvars < size {
        return Err(Error::OracleBound(format!(
            "{nvars} variables cannot resolve degree {size}"
        )));
    }
    let mut cache: HashMap<Vec<usize>, Monomials> = HashMap::new();
    let a = schur_monomials(&lam, nvars, &mut cache);
    let b = schur_monomials(&mu, nvars, &mut cache);
    let mut prod: Monomials = HashMap::new();
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *prod.entry(e).or_insert(0) += ca * cb;
        }
    }
    prod.retain(|_, c| *c != 0);

    let mut out = BTreeMap::new();
    while let Some((lead, c)) = prod
        .iter()
        .max_by(|x, y| x.0.cmp(y.0))
        .map(|(e, &c)| (e.clone(), c))
    {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant {
                name: "schur-oracle-symmetry",
                detail: format!("leading exponent {lead:?} is not a partition"),
            });
        }
        let nu: Vec<usize> = trim(&lead.iter().map(|&x| x as usize).collect::<Vec<_>>());
        let s = schur_monomials(&nu, nvars, &mut cache);
        for (e, k) in s {
            let slot = prod.entry(e.clone()).or_insert(0);
            *slot -= c * k;
            if *slot == 0 {
                prod.remove(&e);
            }
        }
        out.insert(nu, c);
    }
    Ok(out)
}

fn trim(shape: &[usize]) -> Vec<usize> {
    shape.iter().copied().take_while(|&r| r > 0).collect()
}

fn schur_monomials(
    shape: &[usize],
    nvars: usize,
    cache: &mut HashMap<Vec<usize>, Monomials>,
) -> Monomials {
    if let Some(m) = cache.get(shape) {
        return m.clone();
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Monomials::new();
    fill(
        &cells,
        0,
        nvars as u8,
        &mut filling,
        &mut vec![0u8; nvars],
        &mut out,
    );
    cache.insert(shape.to_vec(), out.clone());
    out
}

/// Rows weakly increase, columns strictly increase; entries are `1..=nvars`.
fn fill(
    cells: &[(usize, usize)],
    k: usize,
    nvars: u8,
    filling: &mut Vec<Vec<u8>>,
    content: &mut Vec<u8>,
    out: &mut Monomials,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *out.entry(content.clone()).or_insert(0) += 1;
        return;
    };
    let left = if c > 0 { filling[r][c - 1] } else { 1 };
    let above = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=nvars {
        filling[r][c] = v;
        content[v as usize - 1] += 1;
        fill(cells, k + 1, nvars, filling, content, out);
        content[v as usize - 1] -= 1;
    }
}
