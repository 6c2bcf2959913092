//! Parsing `--cocycle` arguments.
//!
//! Terms are joined with `+`, each optionally prefixed by a coefficient:
//! `ebar:3`, `e:1,5`, `phi:7`, `2*e:2,5 + ebar:1`. `ebar:k` is `(0, ē^k)`;
//! `e:i,j` and `phi:k` contribute `(φ, φ̃)` with `ω` zero on the basis.

use filiform_coh::cochain::phi_k;
use filiform_coh::{Cochain2, Error, Gf, Result, RestrictedTwoCochain};

fn parse_index(s: &str, n: usize) -> Result<usize> {
    let k: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad index {s:?}")))?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!("{k} not in 1..={n}")));
    }
    Ok(k)
}

fn parse_term(gf: Gf, n: usize, term: &str) -> Result<RestrictedTwoCochain> {
    let term = term.trim();
    let (coeff, body) = match term.split_once('*') {
        Some((c, b)) => {
            let c: i64 = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?;
            (gf.elem(c), b.trim())
        }
        None => (1, term),
    };
    let (kind, args) = body
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected kind:args in {term:?}")))?;
    let c = match kind.trim() {
        "ebar" => RestrictedTwoCochain::bar(gf, n, parse_index(args, n)? - 1),
        "e" => {
            let (i, j) = args
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected e:i,j in {term:?}")))?;
            let (i, j) = (parse_index(i, n)?, parse_index(j, n)?);
            if i == j {
                return Err(Error::Parse(format!("e^{{{i},{j}}} has a repeated index")));
            }
            RestrictedTwoCochain::tilde(Cochain2::basis(gf, n, i - 1, j - 1))
        }
        "phi" => {
            let k: usize = args
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {term:?}")))?;
            RestrictedTwoCochain::tilde(phi_k(gf.modulus(), k)?)
        }
        other => return Err(Error::Parse(format!("unknown cocycle kind {other:?}"))),
    };
    Ok(c.scale(coeff))
}

pub fn parse_cocycle(gf: Gf, n: usize, spec: &str) -> Result<RestrictedTwoCochain> {
    spec.split('+')
        .try_fold(RestrictedTwoCochain::zero(gf, n), |acc, term| Ok(acc.add(&parse_term(gf, n, term)?)))
}
