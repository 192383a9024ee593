//! Lower Hessenberg matrices over polynomials and their determinants.
//!
//! The production path is the determinant recursion
//! `det H_n = h_{n,n} det H_{n-1}
//!          + sum_r (-1)^{n-r} h_{n,r} (prod_j h_{j,j+1}) det H_{r-1}`;
//! [`cofactor_det`] is an independent Laplace-expansion reference used by the
//! cross-checks and the property tests.

use crate::classical::binomial;
use crate::error::{Error, Result};
use crate::families::second_eulerian_poly;
use crate::poly::{var, Polynomial};

/// A square matrix with `h[i][j] = 0` whenever `j > i + 1` (0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct HessenbergMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl HessenbergMatrix {
    /// Validates squareness and the zero pattern above the superdiagonal.
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Result<HessenbergMatrix> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            for (j, e) in row.iter().enumerate() {
                if j > i + 1 && !e.is_zero() {
                    return Err(Error::NotHessenberg {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(HessenbergMatrix { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based position (i, j).
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i - 1][j - 1]
    }

    /// Determinant by the Hessenberg recursion, iterating over leading
    /// principal minors (`det H_0 = 1`).
    pub fn det(&self) -> Polynomial {
        let n = self.order();
        let mut dets = Vec::with_capacity(n + 1);
        dets.push(Polynomial::one());
        for m in 1..=n {
            let mut d = self.entry(m, m) * &dets[m - 1];
            let mut super_prod = Polynomial::one();
            for r in (1..m).rev() {
                // product of h_{j,j+1} for j = r..m-1, grown incrementally
                super_prod = &super_prod * self.entry(r, r + 1);
                let term = &(self.entry(m, r) * &super_prod) * &dets[r - 1];
                if (m - r) % 2 == 1 {
                    d = &d - &term;
                } else {
                    d = &d + &term;
                }
            }
            dets.push(d);
        }
        dets.pop().expect("one entry per order")
    }
}

/// Determinant of an arbitrary square polynomial matrix by Laplace expansion
/// along the first row. Exponential; reference oracle only.
pub fn cofactor_det(entries: &[Vec<Polynomial>]) -> Polynomial {
    let n = entries.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return entries[0][0].clone();
    }
    let mut det = Polynomial::zero();
    for j in 0..n {
        if entries[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &entries[0][j] * &cofactor_det(&minor);
        if j % 2 == 0 {
            det = &det + &term;
        } else {
            det = &det - &term;
        }
    }
    det
}

/// The lower Hessenberg matrix whose determinant is the second-order Eulerian
/// polynomial: first column `C_{i-1}(x)`, interior `binom(i, j-1) C_{i-j}(x)`,
/// diagonal `i*x`, superdiagonal `-1`.
pub fn second_eulerian_matrix(n: usize) -> HessenbergMatrix {
    let x = Polynomial::var(var("x"));
    let entries = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if j == i + 1 {
                        -&Polynomial::one()
                    } else if j > i + 1 {
                        Polynomial::zero()
                    } else if j == i {
                        x.scale(&binomial(i as u64, i as u64 - 1))
                    } else {
                        second_eulerian_poly(i - j).scale(&binomial(i as u64, j as u64 - 1))
                    }
                })
                .collect()
        })
        .collect();
    HessenbergMatrix::new(entries).expect("pattern holds by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn rejects_pattern_violations() {
        let bad = vec![
            vec![p("1"), p("0"), p("1")],
            vec![p("1"), p("1"), p("0")],
            vec![p("1"), p("1"), p("1")],
        ];
        assert!(matches!(
            HessenbergMatrix::new(bad),
            Err(Error::NotHessenberg { row: 1, col: 3 })
        ));
        assert!(HessenbergMatrix::new(vec![vec![p("1")], vec![p("1")]]).is_err());
    }

    #[test]
    fn one_by_one() {
        let h = HessenbergMatrix::new(vec![vec![p("x")]]).unwrap();
        assert_eq!(h.det(), p("x"));
    }

    #[test]
    fn two_by_two_matches_closed_form() {
        let h = HessenbergMatrix::new(vec![vec![p("x"), p("2")], vec![p("y"), p("x+1")]]).unwrap();
        assert_eq!(h.det(), p("x*(x+1) - 2*y"));
    }

    #[test]
    fn printed_fourth_order_determinant() {
        let rows = [
            ["x", "-1", "0", "0"],
            ["x", "2*x", "-1", "0"],
            ["x + 2*x^2", "3*x", "3*x", "-1"],
            ["x + 8*x^2 + 6*x^3", "4*x + 8*x^2", "6*x", "4*x"],
        ];
        let entries: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect();
        let h = HessenbergMatrix::new(entries).unwrap();
        assert_eq!(h.det().to_string(), "x + 22*x^2 + 58*x^3 + 24*x^4");
        assert_eq!(second_eulerian_matrix(4).det(), h.det());
    }

    #[test]
    fn recursion_matches_cofactor_oracle() {
        use num_bigint::BigInt;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=5 {
            for _ in 0..20 {
                let entries: Vec<Vec<Polynomial>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if j > i + 1 {
                                    Polynomial::zero()
                                } else {
                                    Polynomial::constant(BigInt::from(rng.gen_range(-9i64..=9)))
                                }
                            })
                            .collect()
                    })
                    .collect();
                let h = HessenbergMatrix::new(entries.clone()).unwrap();
                assert_eq!(h.det(), cofactor_det(&entries));
            }
        }
    }
}
