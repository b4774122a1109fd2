//! Generating functions of hook-valued tableaux and the identities relating
//! them: the sum over tableaux, the two Schur expansions, and the
//! determinant formula.
//!
//! Everything works at a fixed number `n` of `x` variables and truncates
//! at a total `x`-degree `cap`. Since `wt(T)` has `x`-degree
//! `|λ| + excess(T)`, the cap `|λ| + E` keeps exactly the tableaux of
//! excess at most `E`.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::enumeration::{enum_biflagged, enum_exquisite, enum_hvt, enum_ssyt, EnumBounds};
use crate::mixed::MixedTableau;
use crate::poly::{div_by_vandermonde, vandermonde, Monomial, TruncatedPolynomial};
use crate::shape::{Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfunError {
    #[error("cap {cap} is smaller than |lambda| = {size}")]
    CapTooSmall { cap: u32, size: u32 },
    #[error("{rows} rows need at least as many variables, got n = {n}")]
    TooFewVariables { rows: usize, n: u32 },
}

/// Which coefficient family multiplies the Schur functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Exquisite,
    Biflagged,
}

/// `s_μ(x_1..x_n)` as the sum of `x`-weights of semistandard tableaux.
pub fn schur_poly(mu: &Partition, n: u32, cap: u32) -> TruncatedPolynomial {
    TruncatedPolynomial::from_terms(enum_ssyt(mu, n).iter().map(|t| (t.weight(), 1)), cap)
}

/// `Σ wt(T)` over hook-valued tableaux of shape `lambda` within `bounds`.
pub fn hvt_genfun(lambda: &Partition, bounds: EnumBounds, cap: u32) -> TruncatedPolynomial {
    TruncatedPolynomial::from_terms(enum_hvt(lambda, bounds).iter().map(|t| (t.weight(), 1)), cap)
}

fn weight_sum(tableaux: &[MixedTableau], cap: u32) -> TruncatedPolynomial {
    TruncatedPolynomial::from_terms(
        tableaux.iter().map(|q| (q.weight().expect("flagged tableaux have positive indices"), 1)),
        cap,
    )
}

/// `Σ_{E ∈ EXQ(μ/λ)} wt(E)` or the biflagged analogue.
pub fn coefficient_sum(shape: &SkewShape, model: Model, cap: u32) -> TruncatedPolynomial {
    let family = match model {
        Model::Exquisite => enum_exquisite(shape),
        Model::Biflagged => enum_biflagged(shape),
    };
    weight_sum(&family, cap)
}

/// `Σ_μ s_μ(x_n) Σ_{E} wt(E)` over `μ ⊇ λ` with `|μ/λ| <= E` and at most `n` rows.
pub fn schur_expansion_genfun(
    lambda: &Partition,
    bounds: EnumBounds,
    cap: u32,
    model: Model,
) -> TruncatedPolynomial {
    let mut total = TruncatedPolynomial::zero(cap);
    for mu in lambda.supersets(bounds.max_excess, Some(bounds.max_entry as usize)) {
        let shape = SkewShape::new(mu.clone(), lambda.clone()).expect("superset");
        let coeff = coefficient_sum(&shape, model, cap);
        if coeff.is_zero() {
            continue;
        }
        let term = schur_poly(&mu, bounds.max_entry, cap).mul(&coeff).expect("same cap");
        total = total.add(&term).expect("same cap");
    }
    total
}

/// `x_j^{p} Π_{k<i}(1 + β_k x_j) / Π_{k<=λ_i}(1 - α_k x_j)`, expanded to `cap`.
fn det_entry(power: u32, betas: u32, alphas: u32, j: u32, cap: u32) -> TruncatedPolynomial {
    let mut entry = TruncatedPolynomial::monomial(Monomial::one().times_x(j, power), 1, cap);
    for k in 1..=betas {
        let factor = TruncatedPolynomial::from_terms(
            [(Monomial::one(), BigInt::one()), (Monomial::beta(k).times_x(j, 1), BigInt::one())],
            cap,
        );
        entry = entry.mul(&factor).expect("same cap");
    }
    for k in 1..=alphas {
        // 1 / (1 - α_k x_j) = Σ_e α_k^e x_j^e, truncated.
        let series = TruncatedPolynomial::from_terms(
            (0..=cap).map(|e| (Monomial::one().times_alpha(k, e).times_x(j, e), BigInt::one())),
            cap,
        );
        entry = entry.mul(&series).expect("same cap");
    }
    entry
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            out.push((prefix.clone(), inversions % 2 == 0));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Determinant of a square matrix of polynomials by permutation expansion.
pub fn determinant(matrix: &[Vec<TruncatedPolynomial>], cap: u32) -> TruncatedPolynomial {
    let n = matrix.len();
    let mut total = TruncatedPolynomial::zero(cap);
    for (perm, even) in permutations(n) {
        let mut term = TruncatedPolynomial::one(cap);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&matrix[i][j]).expect("same cap");
        }
        total = if even { total.add(&term) } else { total.sub(&term) }.expect("same cap");
    }
    total
}

fn vandermonde_degree(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

fn validate(lambda: &Partition, n: u32, cap: u32) -> Result<(), GenfunError> {
    let size = lambda.size() as u32;
    if cap < size {
        return Err(GenfunError::CapTooSmall { cap, size });
    }
    if lambda.len() > n as usize {
        return Err(GenfunError::TooFewVariables { rows: lambda.len(), n });
    }
    Ok(())
}

/// `det[x_j^{λ_i+n-i} Π_{k<i}(1+β_k x_j) / Π_{k<=λ_i}(1-α_k x_j)]`, truncated
/// at `x`-degree `cap + n(n-1)/2`.
pub fn det_side(lambda: &Partition, n: u32, cap: u32) -> Result<TruncatedPolynomial, GenfunError> {
    validate(lambda, n, cap)?;
    let full_cap = cap + vandermonde_degree(n);
    let matrix: Vec<Vec<TruncatedPolynomial>> = (1..=n)
        .map(|i| {
            let part = lambda.row_len(i as usize) as u32;
            (1..=n).map(|j| det_entry(part + n - i, i - 1, part, j, full_cap)).collect()
        })
        .collect();
    Ok(determinant(&matrix, full_cap))
}

/// The two sides of the determinant formula: [`det_side`], and the
/// Vandermonde product times `Σ wt(T)` over hook-valued tableaux with
/// entries `<= n` and excess `<= cap - |λ|`. The common truncation
/// `cap + n(n-1)/2` leaves the tableau side complete up to `cap`.
pub fn det_formula_check(
    lambda: &Partition,
    n: u32,
    cap: u32,
) -> Result<(TruncatedPolynomial, TruncatedPolynomial), GenfunError> {
    let lhs = det_side(lambda, n, cap)?;
    let full_cap = lhs.cap();
    let bounds = EnumBounds::new(n, (cap - lambda.size() as u32) as usize);
    let rhs = hvt_genfun(lambda, bounds, full_cap).mul(&vandermonde(n, full_cap)).expect("same cap");
    Ok((lhs, rhs))
}

/// `G_λ(x_1..x_n)` up to `x`-degree `cap`, read off the determinant by
/// exact division by the Vandermonde product.
pub fn det_genfun(lambda: &Partition, n: u32, cap: u32) -> Result<TruncatedPolynomial, GenfunError> {
    let lhs = det_side(lambda, n, cap)?;
    let g = div_by_vandermonde(&lhs, n).expect("the determinant is alternating");
    Ok(g.with_cap(cap))
}

/// The number of hook-valued tableaux of shape `lambda` with entries
/// `<= n` and excess `<= max_excess`, computed from the determinant alone.
pub fn hvt_count_from_determinant(
    lambda: &Partition,
    n: u32,
    max_excess: usize,
) -> Result<BigInt, GenfunError> {
    let g = det_genfun(lambda, n, lambda.size() as u32 + max_excess as u32)?;
    Ok(g.sum_of_coefficients())
}
