//! Seeded sampling of Gauss data for tests, benchmarks and the generator.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::knot::{OrientedKnotDiagram, Sign, Strand, Visit};

/// Which Gauss words the sampler may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordShape {
    /// Any double-occurrence word (virtual diagrams included).
    Any,
    /// The two visits of each crossing are an odd distance apart, a
    /// necessary condition for planarity and the condition under which a
    /// projection has exactly two alternating diagrams.
    EvenlyIntersticed,
}

/// A uniformly shaped random diagram with `c` crossings, random over/under
/// choices and random signs. Crossing ids are normalized.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    c: u32,
    shape: WordShape,
) -> OrientedKnotDiagram {
    let n = 2 * c as usize;
    let mut partner = vec![usize::MAX; n];
    match shape {
        WordShape::Any => {
            let mut positions: Vec<usize> = (0..n).collect();
            positions.shuffle(rng);
            for pair in positions.chunks(2) {
                partner[pair[0]] = pair[1];
                partner[pair[1]] = pair[0];
            }
        }
        WordShape::EvenlyIntersticed => {
            let mut odd: Vec<usize> = (0..n).filter(|p| p % 2 == 1).collect();
            odd.shuffle(rng);
            for (even, odd) in (0..n).step_by(2).zip(odd) {
                partner[even] = odd;
                partner[odd] = even;
            }
        }
    }
    let mut id_at = vec![0u32; n];
    let mut visits = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(c as usize);
    let mut next = 1;
    for pos in 0..n {
        if id_at[pos] == 0 {
            id_at[pos] = next;
            id_at[partner[pos]] = next;
            next += 1;
            signs.push(if rng.gen_bool(0.5) {
                Sign::Positive
            } else {
                Sign::Negative
            });
            let first_over = rng.gen_bool(0.5);
            visits.push((pos, first_over));
        } else {
            let first_over = visits
                .iter()
                .find(|(p, _)| *p == partner[pos])
                .map(|(_, o)| *o)
                .expect("partner visited");
            visits.push((pos, !first_over));
        }
    }
    let visits = visits
        .into_iter()
        .map(|(pos, over)| Visit {
            crossing: id_at[pos],
            strand: if over { Strand::Over } else { Strand::Under },
        })
        .collect();
    OrientedKnotDiagram::new(visits, signs).expect("sampler produces valid gauss data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid_and_shaped() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for c in 1..=8 {
            for _ in 0..20 {
                let d = random_diagram(&mut rng, c, WordShape::EvenlyIntersticed);
                assert_eq!(d.crossing_count(), c);
                assert_eq!(d.normalized(), d);
                assert!(d.underlying_projection().is_evenly_intersticed());
                let v = random_diagram(&mut rng, c, WordShape::Any);
                assert_eq!(v.crossing_count(), c);
            }
        }
    }
}
