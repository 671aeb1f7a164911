//! The braid operator on tensor powers of C^2, its Hecke-algebra relations,
//! the q-symmetrizers, and the totally q-symmetric subspaces.
//!
//! For `sigma = make_sigma_n(2)` the padded operators
//! `sigma_k = 1 (x) ... (x) sigma (x) ... (x) 1` on `(C^2)^{(x)n}` satisfy
//! the braid relations, the quadratic relation
//! `(sigma_k - 1)(sigma_k + q^2) = 0`, and commute at distance >= 2.  The
//! symmetrizer `S_n = sum_pi q^{-2 l(pi)} sigma_pi` (over reduced words,
//! which is well defined by the braid relations) annihilates
//! `(sigma_k - 1)` on the left, and the common fixed space
//! `K^{n/2} = { x : sigma_k x = x for all k }` has dimension n+1.

use crate::hopf::make_sigma_n;
use crate::linalg::Mat;
use crate::report::{CheckItem, CheckReport};
use crate::scalar::QScalar;

/// `sigma_k` acting on `(C^2)^{(x)n}`, for `1 <= k <= n-1`.
pub fn sigma_k(n: usize, k: usize) -> Mat<QScalar> {
    assert!(n >= 2 && (1..n).contains(&k), "need 1 <= k < n");
    let sigma = make_sigma_n(2);
    let left = Mat::identity(1usize << (k - 1));
    let right = Mat::identity(1usize << (n - k - 1));
    left.kron(&sigma).kron(&right)
}

/// Verify the Hecke relations on `(C^2)^{(x)n}`.
pub fn check_hecke_relations(n: usize) -> CheckReport {
    let mut rep = CheckReport::new(format!("Hecke relations on 2^{n} dimensions"));
    let ops: Vec<Mat<QScalar>> = (1..n).map(|k| sigma_k(n, k)).collect();
    let id = Mat::identity(1 << n);
    let q2 = QScalar::q().mul(&QScalar::q());
    for (idx, s) in ops.iter().enumerate() {
        let quad = s.sub(&id).mul(&s.add(&id.scale(&q2)));
        rep.push(CheckItem::from_bool(
            format!("(sigma_{} - 1)(sigma_{} + q^2) = 0", idx + 1, idx + 1),
            quad.is_zero(),
            "",
        ));
    }
    for i in 0..ops.len() {
        for j in (i + 1)..ops.len() {
            if j == i + 1 {
                let lhs = ops[i].mul(&ops[j]).mul(&ops[i]);
                let rhs = ops[j].mul(&ops[i]).mul(&ops[j]);
                rep.push(CheckItem::from_bool(
                    format!("braid sigma_{}sigma_{}sigma_{} = sigma_{}sigma_{}sigma_{}",
                        i + 1, j + 1, i + 1, j + 1, i + 1, j + 1),
                    lhs.sub(&rhs).is_zero(),
                    "",
                ));
            } else {
                let comm = ops[i].mul(&ops[j]).sub(&ops[j].mul(&ops[i]));
                rep.push(CheckItem::from_bool(
                    format!("sigma_{} commutes with sigma_{}", i + 1, j + 1),
                    comm.is_zero(),
                    "",
                ));
            }
        }
    }
    rep
}

/// All permutations of `0..n` with a reduced word (adjacent transpositions,
/// 1-based positions) of minimal length obtained by bubble sort.
fn permutations_with_reduced_words(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(remaining: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            acc.push(v);
            go(remaining, acc, out);
            acc.pop();
            remaining.insert(i, v);
        }
    }
    let mut perms = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut perms);
    perms
        .into_iter()
        .map(|p| {
            // bubble sort records a reduced word; its length is the
            // inversion count l(pi)
            let mut v = p.clone();
            let mut word = Vec::new();
            loop {
                let mut swapped = false;
                for i in 0..n.saturating_sub(1) {
                    if v[i] > v[i + 1] {
                        v.swap(i, i + 1);
                        word.push(i + 1);
                        swapped = true;
                    }
                }
                if !swapped {
                    break;
                }
            }
            // sorting pi^{-1}... we recorded the word for sorting p; the
            // product sigma_{word} below only needs *a* reduced word per
            // permutation, and the sum runs over all of them anyway.
            (p, word)
        })
        .collect()
}

/// The symmetrizer `S_n = sum_{pi} q^{-2 l(pi)} sigma_pi` on `(C^2)^{(x)n}`.
pub fn symmetrizer(n: usize) -> Mat<QScalar> {
    let dim = 1usize << n;
    if n == 1 {
        return Mat::identity(dim);
    }
    let ops: Vec<Mat<QScalar>> = (1..n).map(|k| sigma_k(n, k)).collect();
    let mut acc = Mat::zeros(dim, dim);
    for (_, word) in permutations_with_reduced_words(n) {
        let mut m = Mat::identity(dim);
        for &k in &word {
            m = m.mul(&ops[k - 1]);
        }
        let coeff = QScalar::q_pow(-2 * word.len() as i64);
        acc = acc.add(&m.scale(&coeff));
    }
    acc
}

/// An exact basis of `K^{n/2}`, as the columns of a `2^n x (n+1)` matrix,
/// in deterministic echelon order.
pub fn sym_subspace(n: usize) -> Mat<QScalar> {
    let dim = 1usize << n;
    if n == 0 {
        return Mat::identity(1);
    }
    if n == 1 {
        return Mat::identity(2);
    }
    // Stack (sigma_k - 1) for all k and take the common kernel.
    let id = Mat::identity(dim);
    let blocks: Vec<Mat<QScalar>> = (1..n).map(|k| sigma_k(n, k).sub(&id)).collect();
    let stacked = Mat::from_fn(dim * blocks.len(), dim, |i, j| {
        blocks[i / dim].at(i % dim, j).clone()
    });
    let basis = stacked.nullspace();
    assert_eq!(
        basis.len(),
        n + 1,
        "K^{{{n}/2}} must have dimension n+1"
    );
    Mat::from_fn(dim, n + 1, |i, j| basis[j][i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hecke_relations_small() {
        for n in 2..=4 {
            assert!(check_hecke_relations(n).all_pass(), "n = {n}");
        }
    }

    #[test]
    fn symmetrizer_n2_closed_form() {
        // S_2 = 1 + q^{-2} sigma
        let s2 = symmetrizer(2);
        let expect = Mat::identity(4).add(&make_sigma_n(2).scale(&QScalar::q_pow(-2)));
        assert_eq!(s2, expect);
    }

    #[test]
    fn symmetrizer_killed_by_sigma_minus_one() {
        for n in 2..=4 {
            let s = symmetrizer(n);
            let id = Mat::identity(1 << n);
            for k in 1..n {
                let prod = sigma_k(n, k).sub(&id).mul(&s);
                assert!(prod.is_zero(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn sym_subspace_dimensions() {
        for n in 1..=6 {
            assert_eq!(sym_subspace(n).cols, n + 1, "n = {n}");
        }
    }

    #[test]
    fn sym_subspace_is_fixed() {
        for n in 2..=4 {
            let a = sym_subspace(n);
            for k in 1..n {
                assert!(sigma_k(n, k).mul(&a).sub(&a).is_zero());
            }
        }
    }

    #[test]
    fn sigma_eigen_structure() {
        // (sigma - 1)(sigma + q^2) = 0 with ker(sigma - 1) of dim 3
        let sigma = make_sigma_n(2);
        let id = Mat::identity(4);
        assert!(sigma
            .sub(&id)
            .mul(&sigma.add(&id.scale(&QScalar::q().mul(&QScalar::q()))))
            .is_zero());
        assert_eq!(sigma.sub(&id).nullspace().len(), 3);
    }
}
