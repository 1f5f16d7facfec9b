//! Seeded random structure generators. Everything is deterministic given
//! the seed; generated structures always satisfy their axioms (random raw
//! tables are repaired, not rejected, wherever a closure operation
//! exists).

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::action::OrdAction;
use crate::approach::Approach;
use crate::bits;
use crate::error::Result;
use crate::metric::{MetricSpace, Variance, Weight};
use crate::order::{default_names, Poset};
use crate::quantale::{Quantale, Value};
use crate::ultra::{ultrafilters, MetCompHaus};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_value(q: &Quantale, rng: &mut ChaCha8Rng) -> Value {
    match q {
        Quantale::Chain { .. } => {
            let len = q.chain_len().expect("chain");
            q.value_of_level(rng.gen_range(0..len)).expect("level")
        }
        Quantale::ExtendedRational => {
            if rng.gen_ratio(1, 8) {
                Value::Infinity
            } else {
                Value::rat(rng.gen_range(0..24), rng.gen_range(1..6))
            }
        }
    }
}

/// A random metric: a raw nonnegative table repaired by zeroing the
/// diagonal and closing under the triangle law.
pub fn gen_metric(q: &Quantale, n: usize, rng: &mut ChaCha8Rng) -> MetricSpace {
    let mut d: Vec<Vec<Value>> = (0..n)
        .map(|_| (0..n).map(|_| random_value(q, rng)).collect())
        .collect();
    for (x, row) in d.iter_mut().enumerate() {
        row[x] = Value::zero();
    }
    // min-plus relaxation to a fixpoint
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = q.add(&d[x][y], &d[y][z]).expect("member");
                    if via < d[x][z] {
                        d[x][z] = via;
                        changed = true;
                    }
                }
            }
        }
    }
    let m = MetricSpace::new(q.clone(), default_names(n), d).expect("shapes fit");
    debug_assert!(m.check_metric_axioms());
    m
}

/// A random antisymmetric poset: the reflexive-transitive closure of
/// random edges along a random topological order.
pub fn gen_poset(n: usize, rng: &mut ChaCha8Rng) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut leq = vec![vec![false; n]; n];
    for (x, row) in leq.iter_mut().enumerate() {
        row[x] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.4) {
                leq[perm[i]][perm[j]] = true;
            }
        }
    }
    // transitive closure
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                if leq[x][k] && leq[k][y] {
                    leq[x][y] = true;
                }
            }
        }
    }
    Poset::new(default_names(n), leq).expect("closure is a poset")
}

/// A random complete lattice, by rejection over random posets with a
/// chain as fallback.
pub fn gen_complete_lattice(n: usize, rng: &mut ChaCha8Rng) -> Poset {
    for _ in 0..200 {
        let p = gen_poset(n, rng);
        if p.is_complete_lattice() {
            return p;
        }
    }
    Poset::chain(n)
}

/// A random valid weight: the pointwise minimum of formal balls, which
/// ranges over all valid weights as the radii vary.
pub fn gen_weight(
    m: &MetricSpace,
    variance: Variance,
    rng: &mut ChaCha8Rng,
) -> Result<Weight> {
    let q = m.quantale();
    let radii: Vec<Value> = (0..m.len()).map(|_| random_value(q, rng)).collect();
    let values = (0..m.len())
        .map(|x| {
            q.meet(
                (0..m.len())
                    .map(|y| match variance {
                        Variance::Contravariant => q.add(m.d(x, y), &radii[y]),
                        Variance::Covariant => q.add(m.d(y, x), &radii[y]),
                    })
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Weight::new(m, variance, values)
}

/// All monotone self-maps below the identity that kill everything by the
/// top power and preserve suprema: exactly the one-step tables of the
/// sup-preserving chain algebras on the lattice.
pub fn sup_preserving_contractions(p: &Poset, steps: usize) -> Vec<Vec<usize>> {
    let n = p.len();
    if !p.is_complete_lattice() {
        return Vec::new();
    }
    let bottom = p.bottom().expect("complete");
    let mut maps: Vec<Vec<usize>> = vec![vec![]];
    for x in 0..n {
        maps = maps
            .into_iter()
            .flat_map(|m| {
                (0..n)
                    .filter(move |&t| p.leq(t, x))
                    .map(move |t| {
                        let mut m2 = m.clone();
                        m2.push(t);
                        m2
                    })
            })
            .collect();
    }
    maps.retain(|f| {
        // monotone
        (0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || p.leq(f[x], f[y])))
    });
    maps.retain(|f| {
        // the top power collapses to the bottom
        (0..n).all(|x| {
            let mut cur = x;
            for _ in 0..steps {
                cur = f[cur];
            }
            p.equiv(cur, bottom)
        })
    });
    maps.retain(|f| {
        // preserves all suprema
        bits::masks(n).all(|set| {
            let s = p.supremum_mask(set).expect("complete");
            let image = bits::elems(set).fold(0u32, |m, x| m | 1 << f[x]);
            match p.supremum_mask(image) {
                Some(lub) => p.equiv(f[s], lub),
                None => false,
            }
        })
    });
    maps
}

/// A random lattice-with-action instance: a complete lattice and the
/// algebra generated by a random sup-preserving contraction.
pub fn gen_lattice_action(q: &Quantale, n: usize, rng: &mut ChaCha8Rng) -> Result<OrdAction> {
    let steps = q.chain_len()? - 1;
    let mut lattice = gen_complete_lattice(n, rng);
    let mut candidates = sup_preserving_contractions(&lattice, steps);
    if candidates.is_empty() {
        lattice = Poset::chain(n);
        candidates = sup_preserving_contractions(&lattice, steps);
    }
    let f = candidates[rng.gen_range(0..candidates.len())].clone();
    let act = (0..lattice.len())
        .map(|x| {
            (0..=steps)
                .map(|i| {
                    let mut cur = x;
                    for _ in 0..i {
                        cur = f[cur];
                    }
                    cur
                })
                .collect()
        })
        .collect();
    OrdAction::new(lattice, q.clone(), act)
}

/// A random approach space, induced by a random metric; in the
/// point-set-distance presentation when asked.
pub fn gen_approach(
    q: &Quantale,
    n: usize,
    rng: &mut ChaCha8Rng,
    dist_form: bool,
) -> Result<Approach> {
    let a = Approach::from_metric(&gen_metric(q, n, rng))?;
    if dist_form {
        a.to_dist()
    } else {
        Ok(a)
    }
}

/// A random metric compact Hausdorff structure: a random metric with the
/// (unique) discrete convergence.
pub fn gen_met_comp_haus(q: &Quantale, n: usize, rng: &mut ChaCha8Rng) -> Result<MetCompHaus> {
    let m = gen_metric(q, n, rng);
    let alpha = (0..ultrafilters(n).len()).collect();
    MetCompHaus::new(m, alpha)
}
