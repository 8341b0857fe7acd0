//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u · m · v = d` with `d` diagonal, its diagonal a divisibility chain of
/// nonnegative entries, and `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries, in order.
    pub diagonal: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix, inner: usize, cols: usize) -> IntMatrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// `row[dst] -= q · row[src]`
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    let (src_row, dst_row) = if src < dst {
        let (lo, hi) = m.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (d, s) in dst_row.iter_mut().zip(src_row) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// `col[dst] -= q · col[src]`
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

/// Smith normal form of an `rows × cols` matrix given as `rows` vectors.
///
/// Pivots on the least nonzero absolute value, clears its row and column by
/// division with remainder, and folds in any row whose entries the pivot
/// does not divide.
pub fn smith_normal_form(m: &[Vec<i64>], cols: usize) -> Snf {
    let rows = m.len();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut a = to_big(m);
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = least_entry(&a, t, |_, _| true) else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let pivot = a[t][t].clone();
            for i in (t + 1)..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &pivot;
                    row_axpy(&mut a, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                }
            }
            for j in (t + 1)..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &pivot;
                    col_axpy(&mut a, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                }
            }
            // Remainders are smaller than the pivot; swap the least one in.
            if let Some((i, j)) = least_entry(&a, t, |i, j| (i == t) != (j == t)) {
                if i != t {
                    a.swap(t, i);
                    u.swap(t, i);
                } else {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                }
                continue;
            }
            let bad = ((t + 1)..rows)
                .find(|&i| ((t + 1)..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i].clone()).take_while(|x| !x.is_zero()).collect();
    Snf { d: a, u, v, diagonal }
}

/// Least nonzero `|a[i][j]|` over `i, j ≥ t` restricted by `keep`.
fn least_entry(
    a: &IntMatrix,
    t: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() || !keep(i, j) {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(i) = ((k + 1)..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, i);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let x = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = x / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank and torsion coefficients of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// `d₁ | d₂ | …`, each at least 2.
    pub torsion: Vec<u64>,
}

/// Invariants of `Z^generator_count / ⟨relators⟩`.
pub fn abelian_invariants_from_relators(
    generator_count: usize,
    relators: &[Vec<i64>],
) -> AbelianInvariants {
    let snf = smith_normal_form(relators, generator_count);
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("torsion coefficient exceeds u64"))
        .collect();
    AbelianInvariants { rank: generator_count - snf.rank(), torsion }
}

/// The row lattice of a relator matrix, with a membership test.
#[derive(Clone, Debug)]
pub struct RelationLattice {
    cols: usize,
    v: IntMatrix,
    diagonal: Vec<BigInt>,
}

impl RelationLattice {
    pub fn new(relators: &[Vec<i64>], cols: usize) -> Self {
        let snf = smith_normal_form(relators, cols);
        RelationLattice { cols, v: snf.v, diagonal: snf.diagonal }
    }

    /// Whether `x` is an integer combination of the relator rows.
    ///
    /// Rows of `m` span `L`; with `u·m·v = d`, `x ∈ L` iff `x·v` lies in the
    /// row space of `d`.
    pub fn contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.cols);
        (0..self.cols).all(|j| {
            let w = (0..self.cols)
                .filter(|&k| x[k] != 0)
                .fold(BigInt::zero(), |acc, k| acc + BigInt::from(x[k]) * &self.v[k][j]);
            match self.diagonal.get(j) {
                Some(d) => w.is_multiple_of(d),
                None => w.is_zero(),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_postcondition(m: &[Vec<i64>], cols: usize) -> Snf {
        let snf = smith_normal_form(m, cols);
        let rows = m.len();
        let prod = mat_mul(&mat_mul(&snf.u, &to_big(m), rows, cols), &snf.v, cols, cols);
        assert_eq!(prod, snf.d);
        for (i, row) in snf.d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    assert!(x.is_zero());
                }
            }
        }
        for w in snf.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(determinant(&snf.u).abs().is_one());
        assert!(determinant(&snf.v).abs().is_one());
        snf
    }

    #[test]
    fn spec_examples() {
        let snf = check_postcondition(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(snf.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        let snf = check_postcondition(&[vec![1, 0], vec![0, 1]], 2);
        assert_eq!(snf.diagonal, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(check_postcondition(&[vec![0, 0, 0]], 3).rank(), 0);
        assert_eq!(check_postcondition(&[], 3).rank(), 0);
        assert_eq!(check_postcondition(&[vec![], vec![]], 0).rank(), 0);
    }

    #[test]
    fn invariants() {
        let inv = abelian_invariants_from_relators(2, &[]);
        assert_eq!(inv, AbelianInvariants { rank: 2, torsion: vec![] });
        let inv = abelian_invariants_from_relators(1, &[vec![2]]);
        assert_eq!(inv, AbelianInvariants { rank: 0, torsion: vec![2] });
        let inv = abelian_invariants_from_relators(3, &[vec![2, 0, 0], vec![0, 3, 0]]);
        assert_eq!(inv, AbelianInvariants { rank: 1, torsion: vec![6] });
        assert_eq!(serde_json::to_string(&inv).unwrap(), r#"{"rank":1,"torsion":[6]}"#);
    }

    #[test]
    fn lattice_membership() {
        let lat = RelationLattice::new(&[vec![2, 4], vec![6, 8]], 2);
        assert!(lat.contains(&[2, 4]));
        assert!(lat.contains(&[4, 4]));
        assert!(lat.contains(&[0, 4]));
        assert!(!lat.contains(&[0, 2]));
        assert!(!lat.contains(&[1, 0]));
        let empty = RelationLattice::new(&[], 2);
        assert!(empty.contains(&[0, 0]));
        assert!(!empty.contains(&[0, 1]));
    }

    #[test]
    fn determinant_small() {
        let m = to_big(&[vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 1]]);
        assert_eq!(determinant(&m), BigInt::from(-1));
    }

    proptest! {
        #[test]
        fn postcondition_holds(rows in 0usize..7, cols in 0usize..7, seed in any::<u64>()) {
            let mut x = seed;
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((x >> 33) % 11) as i64 - 5
                }).collect())
                .collect();
            check_postcondition(&m, cols);
        }

        #[test]
        fn lattice_contains_row_combinations(c0 in -4i64..5, c1 in -4i64..5) {
            let m = vec![vec![3, 1, 4], vec![1, 5, 9]];
            let lat = RelationLattice::new(&m, 3);
            let x: Vec<i64> = (0..3).map(|j| c0 * m[0][j] + c1 * m[1][j]).collect();
            prop_assert!(lat.contains(&x));
        }
    }
}
