use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::matrix::{ser_bigints, IntMatrix};
use super::snf::smith_normal_form;

/// `Z^generators / (column span of relations)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianPresentation {
    pub generators: usize,
    pub relations: IntMatrix,
    pub free_rank: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub torsion: Vec<BigInt>,
}

impl AbelianPresentation {
    pub fn new(relations: IntMatrix) -> Self {
        let snf = smith_normal_form(&relations);
        let factors = snf.invariant_factors();
        Self {
            generators: relations.rows(),
            free_rank: relations.rows() - factors.len(),
            torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
            relations,
        }
    }

    /// The cokernel of a homomorphism given by its matrix.
    pub fn cokernel(m: &IntMatrix) -> Self {
        Self::new(m.clone())
    }

    pub fn free(rank: usize) -> Self {
        Self::new(IntMatrix::zeros(rank, 0))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        let p =
            AbelianPresentation::new(IntMatrix::from_rows(&[vec![2, 0], vec![0, 3], vec![0, 0]]));
        assert_eq!(p.to_string(), "Z ⊕ Z/6");
        assert_eq!(AbelianPresentation::free(2).to_string(), "Z^2");
        assert!(AbelianPresentation::new(IntMatrix::identity(2)).is_trivial());
    }
}
