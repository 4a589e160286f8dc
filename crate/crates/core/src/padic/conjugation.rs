use num_bigint::BigInt;
use serde::Serialize;

use crate::catalog;
use crate::homology::IntMatrix;

/// `B_eps = [[1, eps], [0, 3]]`.
pub fn gr_matrix(eps: u8) -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, eps as i64], vec![0, 3]])
}

pub fn chacon_conjugator() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, 1], vec![1, 1]])
}

pub fn chacon_conjugator_inverse() -> IntMatrix {
    IntMatrix::from_rows(&[vec![-1, 1], vec![1, 0]])
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationIdentity {
    pub index: usize,
    pub m_transpose: IntMatrix,
    pub conjugated: IntMatrix,
    pub expected: IntMatrix,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationReport {
    pub l: IntMatrix,
    pub l_inv: IntMatrix,
    #[serde(serialize_with = "crate::homology::ser_bigint")]
    pub det_l: BigInt,
    pub l_inverse_verified: bool,
    pub identities: Vec<ConjugationIdentity>,
    pub all_hold: bool,
}

/// `L M_i^T L^{-1} = B_i` for the three Chacon substitutions.
pub fn chacon_conjugation_check() -> ConjugationReport {
    let l = chacon_conjugator();
    let l_inv = chacon_conjugator_inverse();
    let family = catalog::chacon_family();
    let identities: Vec<_> = family
        .members()
        .iter()
        .enumerate()
        .map(|(i, sub)| {
            let mt = sub.transition_matrix().transpose();
            let conjugated = &(&l * &mt) * &l_inv;
            let expected = gr_matrix(i as u8);
            ConjugationIdentity {
                index: i,
                holds: conjugated == expected,
                m_transpose: mt,
                conjugated,
                expected,
            }
        })
        .collect();
    let l_inverse_verified = &l * &l_inv == IntMatrix::identity(2);
    ConjugationReport {
        det_l: l.determinant(),
        all_hold: l_inverse_verified && identities.iter().all(|c| c.holds),
        l,
        l_inv,
        l_inverse_verified,
        identities,
    }
}
