use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::cells::{betti_of_cells, AsCellComplex, BettiVector, CellComplex};

/// Complexes with at most this many cells get an exhaustive search when
/// the greedy passes fail.
pub const EXHAUSTIVE_LIMIT: usize = 64;

/// A sequence of elementary collapses `(free face, coface)` ending at a
/// single vertex. `seed` is set when a randomized restart found it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub steps: Vec<(usize, usize)>,
    pub remaining: usize,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotCollapsibleReason {
    Empty,
    Disconnected { components: usize },
    EulerCharacteristic(i64),
    NonzeroReducedHomology(BettiVector),
    ExhaustiveSearch,
}

impl fmt::Display for NotCollapsibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCollapsibleReason::Empty => write!(f, "empty complex"),
            NotCollapsibleReason::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
            NotCollapsibleReason::EulerCharacteristic(e) => write!(f, "Euler characteristic {e}"),
            NotCollapsibleReason::NonzeroReducedHomology(b) => {
                write!(f, "nonzero reduced Z/2 homology, Betti {b}")
            }
            NotCollapsibleReason::ExhaustiveSearch => write!(f, "no collapse order reaches a point"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CollapseVerdict {
    Collapsible(CollapseCertificate),
    NotCollapsible(NotCollapsibleReason),
    Inconclusive { attempts: usize },
}

impl CollapseVerdict {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, CollapseVerdict::Collapsible(_))
    }
}

/// Searches for a collapse to a point with the default seed.
pub fn collapse_search<C: AsCellComplex + ?Sized>(c: &C, budget: usize) -> CollapseVerdict {
    collapse_search_seeded(c, budget, 0)
}

/// Greedy collapse, lowest dimension first with ties broken by cell order,
/// then up to `budget` randomized restarts, then exhaustive search for
/// small complexes. Homological obstructions are reported first.
pub fn collapse_search_seeded<C: AsCellComplex + ?Sized>(
    c: &C,
    budget: usize,
    seed: u64,
) -> CollapseVerdict {
    let cells = c.to_cells();
    if cells.is_empty() {
        return CollapseVerdict::NotCollapsible(NotCollapsibleReason::Empty);
    }
    let components = cells.component_count();
    if components > 1 {
        return CollapseVerdict::NotCollapsible(NotCollapsibleReason::Disconnected { components });
    }
    let euler = cells.euler_characteristic();
    if euler != 1 {
        return CollapseVerdict::NotCollapsible(NotCollapsibleReason::EulerCharacteristic(euler));
    }
    let betti = betti_of_cells(&cells);
    if !betti.is_acyclic() {
        return CollapseVerdict::NotCollapsible(NotCollapsibleReason::NonzeroReducedHomology(betti));
    }

    if let Some(cert) = greedy(&cells, None) {
        return CollapseVerdict::Collapsible(cert);
    }
    for attempt in 0..budget as u64 {
        let restart_seed = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(restart_seed);
        if let Some(mut cert) = greedy(&cells, Some(&mut rng)) {
            cert.seed = Some(restart_seed);
            return CollapseVerdict::Collapsible(cert);
        }
    }
    if cells.len() <= EXHAUSTIVE_LIMIT {
        return match exhaustive(&cells, budget.max(1) * 1000) {
            Some(Some(cert)) => CollapseVerdict::Collapsible(cert),
            Some(None) => CollapseVerdict::NotCollapsible(NotCollapsibleReason::ExhaustiveSearch),
            None => CollapseVerdict::Inconclusive { attempts: budget + 1 },
        };
    }
    CollapseVerdict::Inconclusive { attempts: budget + 1 }
}

fn greedy(cells: &CellComplex, mut rng: Option<&mut ChaCha8Rng>) -> Option<CollapseCertificate> {
    let n = cells.len();
    let mut alive = vec![true; n];
    let mut live_cofaces: Vec<usize> = (0..n).map(|c| cells.cofaces(c).len()).collect();
    let mut free: BTreeSet<(usize, usize)> = (0..n)
        .filter(|&c| live_cofaces[c] == 1)
        .map(|c| (cells.dim_of(c), c))
        .collect();
    let mut steps = Vec::new();
    let mut remaining = n;
    while !free.is_empty() {
        let pick = match rng.as_deref_mut() {
            Some(r) => *free.iter().nth(r.gen_range(0..free.len())).expect("nonempty"),
            None => *free.iter().next().expect("nonempty"),
        };
        let sigma = pick.1;
        let tau = *cells
            .cofaces(sigma)
            .iter()
            .find(|&&t| alive[t])
            .expect("free face has a live coface");
        alive[sigma] = false;
        alive[tau] = false;
        remaining -= 2;
        free.remove(&pick);
        free.remove(&(cells.dim_of(tau), tau));
        steps.push((sigma, tau));
        for &b in cells.boundary(tau).iter().chain(cells.boundary(sigma)) {
            live_cofaces[b] -= 1;
            let key = (cells.dim_of(b), b);
            if alive[b] && live_cofaces[b] == 1 {
                free.insert(key);
            } else {
                free.remove(&key);
            }
        }
    }
    let last = (0..n).find(|&c| alive[c]);
    (remaining == 1 && last.is_some_and(|c| cells.dim_of(c) == 0))
        .then_some(CollapseCertificate {
        steps,
        remaining,
        seed: None,
    })
}

/// Depth-first search over alive-cell masks. `None` when the state budget
/// runs out, otherwise whether some order succeeds.
fn exhaustive(cells: &CellComplex, state_budget: usize) -> Option<Option<CollapseCertificate>> {
    let n = cells.len();
    assert!(n <= 64);
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead_ends: HashSet<u64> = HashSet::new();
    let mut steps = Vec::new();

    fn free_pairs(cells: &CellComplex, mask: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 0..cells.len() {
            if mask >> c & 1 == 0 {
                continue;
            }
            let live: Vec<usize> = cells.cofaces(c).iter().copied().filter(|&t| mask >> t & 1 == 1).collect();
            if live.len() == 1 {
                out.push((c, live[0]));
            }
        }
        out
    }
    fn go(
        cells: &CellComplex,
        mask: u64,
        steps: &mut Vec<(usize, usize)>,
        dead: &mut HashSet<u64>,
        budget: &mut usize,
    ) -> Option<bool> {
        if mask.count_ones() == 1 {
            return Some(cells.dim_of(mask.trailing_zeros() as usize) == 0);
        }
        if dead.contains(&mask) {
            return Some(false);
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        for (s, t) in free_pairs(cells, mask) {
            steps.push((s, t));
            match go(cells, mask & !(1 << s) & !(1 << t), steps, dead, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            steps.pop();
        }
        dead.insert(mask);
        Some(false)
    }
    let mut budget = state_budget;
    match go(cells, full, &mut steps, &mut dead_ends, &mut budget)? {
        true => Some(Some(CollapseCertificate {
            steps,
            remaining: 1,
            seed: None,
        })),
        false => Some(None),
    }
}

/// Replays a certificate: every step must remove a currently free face
/// together with its unique live coface, ending at one vertex.
pub fn verify_certificate<C: AsCellComplex + ?Sized>(c: &C, cert: &CollapseCertificate) -> bool {
    let cells = c.to_cells();
    let n = cells.len();
    let mut alive = vec![true; n];
    for &(s, t) in &cert.steps {
        if s >= n || t >= n || !alive[s] || !alive[t] {
            return false;
        }
        let live: Vec<usize> = cells.cofaces(s).iter().copied().filter(|&x| alive[x]).collect();
        if live != [t] {
            return false;
        }
        alive[s] = false;
        alive[t] = false;
    }
    let left: Vec<usize> = (0..n).filter(|&c| alive[c]).collect();
    left.len() == 1 && cert.remaining == 1 && cells.dim_of(left[0]) == 0
}
