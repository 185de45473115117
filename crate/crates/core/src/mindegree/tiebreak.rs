use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::VertexId;

/// Which minimum-degree vertex to eliminate when several qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TieBreak {
    #[default]
    SmallestId,
    LargestId,
    /// Uniform over the tied vertices, ranked by id, from a seeded stream.
    Random { seed: u64 },
}

impl std::fmt::Display for TieBreak {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TieBreak::SmallestId => f.write_str("smallest-id"),
            TieBreak::LargestId => f.write_str("largest-id"),
            TieBreak::Random { seed } => write!(f, "random:{seed}"),
        }
    }
}

/// Stateful tie resolution.
///
/// The choice depends only on the candidate *set* and the number of earlier
/// random draws, so any two engines that see the same minimum-degree sets
/// make the same choices.
#[derive(Debug, Clone)]
pub struct TieBreaker {
    rule: TieBreak,
    rng: Option<ChaCha8Rng>,
}

impl TieBreaker {
    pub fn new(rule: TieBreak) -> Self {
        let rng = match rule {
            TieBreak::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        TieBreaker { rule, rng }
    }

    pub fn rule(&self) -> TieBreak {
        self.rule
    }

    /// Picks one of `candidates` (non-empty). May reorder the slice.
    pub fn choose(&mut self, candidates: &mut [VertexId]) -> VertexId {
        assert!(!candidates.is_empty(), "no candidates to choose from");
        match self.rule {
            TieBreak::SmallestId => *candidates.iter().min().unwrap(),
            TieBreak::LargestId => *candidates.iter().max().unwrap(),
            TieBreak::Random { .. } => {
                candidates.sort_unstable();
                let rng = self.rng.as_mut().expect("seeded");
                candidates[rng.random_range(0..candidates.len())]
            }
        }
    }
}
