use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::cells::BettiVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KozlovFamily {
    /// Independence complexes of paths.
    Path,
    /// Independence complexes of cycles.
    Cycle,
}

/// Betti numbers of the known homotopy types of `I(P_n)` and `I(C_n)`.
pub fn kozlov_reference_betti(family: KozlovFamily, n: usize) -> Result<BettiVector> {
    match family {
        KozlovFamily::Path => {
            if n < 1 {
                return Err(Error::OutOfRange(format!("path length {n} < 1")));
            }
            if n % 3 == 1 {
                Ok(BettiVector(vec![1]))
            } else {
                Ok(BettiVector::sphere((n - 1) / 3))
            }
        }
        KozlovFamily::Cycle => {
            if n < 3 {
                return Err(Error::OutOfRange(format!("cycle length {n} < 3")));
            }
            Ok(match n % 3 {
                0 => BettiVector::wedge_of_spheres(n / 3 - 1, 2),
                1 => BettiVector::sphere((n - 1) / 3 - 1),
                _ => BettiVector::sphere((n + 1) / 3 - 1),
            })
        }
    }
}
