//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// A power product over a fixed variable list, stored as one exponent per
/// declared variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = exp;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, when divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn squarefree(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Re-read the monomial in a ring with variables mapped by `map`:
    /// `map[i]` is the index of old variable i in the new ring, `None` when the
    /// variable is dropped (its exponent must then be zero).
    pub fn map_vars(&self, map: &[Option<usize>], new_nvars: usize) -> Option<Monomial> {
        let mut exps = vec![0u32; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match map[i] {
                Some(j) => exps[j] += e,
                None => return None,
            }
        }
        Some(Monomial { exps })
    }
}

/// Term orders on monomials. `Elim` is the block order that compares the
/// eliminated block first (degree-reverse-lexicographically within each
/// block), which makes it an elimination order for that block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Elim(Vec<usize>),
}

fn grevlex_cmp_slices(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the rightmost differing position wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for i in 0..a.nvars() {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex_cmp_slices(a.exps(), b.exps()),
            MonomialOrder::Elim(block) => {
                let first_a: Vec<u32> = block.iter().map(|&i| a.exp(i)).collect();
                let first_b: Vec<u32> = block.iter().map(|&i| b.exp(i)).collect();
                match grevlex_cmp_slices(&first_a, &first_b) {
                    Ordering::Equal => {
                        let rest_a: Vec<u32> = (0..a.nvars())
                            .filter(|i| !block.contains(i))
                            .map(|i| a.exp(i))
                            .collect();
                        let rest_b: Vec<u32> = (0..b.nvars())
                            .filter(|i| !block.contains(i))
                            .map(|i| b.exp(i))
                            .collect();
                        grevlex_cmp_slices(&rest_a, &rest_b)
                    }
                    other => other,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_prefers_degree_then_reverse() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // equal degree: x^2*y > x*y^2
        assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn elim_block_dominates() {
        // eliminate variable 1: any power of it beats everything else
        let ord = MonomialOrder::Elim(vec![1]);
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[9, 0, 9])), Ordering::Greater);
    }

    #[test]
    fn lcm_and_division() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.div_into(&a.lcm(&b)), Some(m(&[0, 2])));
        assert!(b.div_into(&a).is_none());
    }
}
