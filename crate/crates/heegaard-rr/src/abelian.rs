//! Abelianization and exact Smith normal form over the integers.
//!
//! The relator exponent-sum matrix abelianizes a presentation; its Smith
//! invariants are the sanity oracle for Tietze steps (full isomorphism
//! checking is undecidable and out of scope).

use crate::presentation::Presentation;

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relator_matrix(p: &Presentation) -> Vec<Vec<i128>> {
    p.relators()
        .iter()
        .map(|r| {
            p.generators()
                .iter()
                .map(|g| {
                    r.letters()
                        .iter()
                        .filter(|l| l.gen == *g)
                        .map(|l| l.sign() as i128)
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Diagonal of the Smith normal form: nonnegative, each entry dividing the
/// next, padded with zeros to min(rows, cols). Empty dimensions give an
/// empty diagonal.
pub fn smith_invariants(mut m: Vec<Vec<i128>>) -> Vec<u128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let n = rows.min(cols);
    let mut diag = vec![0u128; n];
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = pivot(&m, t) else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // clear the pivot row and column
        let mut dirty = false;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                let pivot_row = m[t].clone();
                for (j, cell) in m[i].iter_mut().enumerate().skip(t) {
                    *cell -= q * pivot_row[j];
                }
            }
            dirty |= m[i][t] != 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            dirty |= m[t][j] != 0;
        }
        if dirty {
            continue; // smaller remainders appeared; repick the pivot
        }
        // divisibility fixup: the pivot must divide the residual block
        if let Some(i) = (t + 1..rows)
            .find(|&i| (t + 1..cols).any(|j| m[i][j] % m[t][t] != 0))
        {
            let row = m[i].clone();
            for (j, cell) in m[t].iter_mut().enumerate().skip(t) {
                *cell += row[j];
            }
            continue;
        }
        diag[t] = m[t][t].unsigned_abs();
        t += 1;
    }
    diag
}

fn pivot(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let cols = m.first().map_or(0, Vec::len);
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.len() {
        for j in t..cols {
            if m[i][j] != 0
                && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith invariants of a presentation's abelianization.
pub fn abelian_invariants(p: &Presentation) -> Vec<u128> {
    smith_invariants(relator_matrix(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        Presentation::parse(s).unwrap()
    }

    #[test]
    fn smith_of_diagonalizable() {
        assert_eq!(smith_invariants(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(vec![vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(smith_invariants(vec![vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn chain_presentations_share_invariants() {
        let start =
            pres("<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>");
        let last = pres("<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>");
        assert_eq!(abelian_invariants(&start), vec![1, 1, 1, 799]);
        assert_eq!(abelian_invariants(&last), vec![1, 799]);
    }
}
