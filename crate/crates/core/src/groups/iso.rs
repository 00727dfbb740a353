//! Brute-force isomorphism test for small groups.

use super::{conjugacy_and_center, FiniteGroup};
use crate::config::Caps;
use crate::error::{Error, Result};

/// A witness isomorphism: `map[a]` is the image of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    pub fn verify(&self, a: &FiniteGroup, b: &FiniteGroup) -> bool {
        let mut seen = vec![false; b.order()];
        a.order() == b.order()
            && self.map.iter().all(|&y| y < b.order() && !std::mem::replace(&mut seen[y], true))
            && a.elements().all(|x| {
                a.elements()
                    .all(|y| self.map[a.mul(x, y)] == b.mul(self.map[x], self.map[y]))
            })
    }
}

struct Profile {
    order_of: Vec<usize>,
    class_size: Vec<usize>,
}

fn profile(g: &FiniteGroup) -> Profile {
    let cd = conjugacy_and_center(g);
    Profile {
        order_of: g.elements().map(|x| g.element_order(x)).collect(),
        class_size: g.elements().map(|x| cd.classes[cd.class_of[x]].len()).collect(),
    }
}

/// Decides whether `a ≅ b`, returning a witness map when they are.
pub fn is_isomorphic_small(
    a: &FiniteGroup,
    b: &FiniteGroup,
    caps: &Caps,
) -> Result<Option<Isomorphism>> {
    for g in [a, b] {
        if g.order() > caps.isomorphism {
            return Err(Error::SizeBound {
                order: g.order(),
                bound: caps.isomorphism,
            });
        }
    }
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return Ok(None);
    }
    let pa = profile(a);
    let pb = profile(b);
    let mut sa: Vec<(usize, usize)> = pa.order_of.iter().copied().zip(pa.class_size.iter().copied()).collect();
    let mut sb: Vec<(usize, usize)> = pb.order_of.iter().copied().zip(pb.class_size.iter().copied()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let gens = a.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            b.elements()
                .filter(|&y| pb.order_of[y] == pa.order_of[g] && pb.class_size[y] == pa.class_size[g])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &candidates, &mut images).map(|map| Isomorphism { map }))
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if gens.is_empty() {
        return Some(vec![b.identity(); a.order()]);
    }
    if k > 0 {
        let partial = extend(a, b, &gens[..k], images)?;
        if k == gens.len() {
            return Some(partial.into_iter().map(|x| x.expect("generators cover the group")).collect());
        }
    }
    for &y in &candidates[k] {
        images.push(y);
        if let Some(m) = search(a, b, gens, candidates, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

/// Extends generator images to the generated subgroup; `None` if the assignment
/// is not a well-defined injective homomorphism there.
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    map[a.identity()] = Some(b.identity());
    used[b.identity()] = true;
    let mut queue = vec![a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let fx = map[x]?;
        for (g, &img) in gens.iter().zip(imgs) {
            let y = a.mul(x, *g);
            let fy = b.mul(fx, img);
            match map[y] {
                None => {
                    if used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    map[y] = Some(fy);
                    queue.push(y);
                }
                Some(v) if v != fy => return None,
                _ => {}
            }
        }
        i += 1;
    }
    Some(map)
}
