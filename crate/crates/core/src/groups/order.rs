//! Group order from a stabiliser chain (deterministic Schreier–Sims), so
//! large groups can be sized without listing their elements.

use crate::perm::Permutation;

use super::GroupSpec;

struct Level {
    base: usize,
    /// transversal[b] = (u, u⁻¹) with u mapping the base point to `b`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    gens: Vec<usize>,
}

impl Level {
    fn build(depth: usize, base: &[usize], strong: &[Permutation], v: usize) -> Self {
        let gens: Vec<usize> =
            (0..strong.len()).filter(|&k| base[..depth].iter().all(|&b| strong[k].get(b) == b)).collect();
        let b0 = base[depth];
        let mut transversal = vec![None; v];
        transversal[b0] = Some((Permutation::identity(v), Permutation::identity(v)));
        let mut queue = vec![b0];
        while let Some(b) = queue.pop() {
            let u = transversal[b].as_ref().map(|(u, _)| u.clone()).expect("orbit point");
            for &k in &gens {
                let c = strong[k].get(b);
                if transversal[c].is_none() {
                    let w = strong[k].compose_unchecked(&u);
                    let winv = w.inverse();
                    transversal[c] = Some((w, winv));
                    queue.push(c);
                }
            }
        }
        Level { base: b0, transversal, gens }
    }

    fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|u| u.is_some()).count()
    }
}

/// Strips `g` through the chain from `start`; returns the residue and the
/// level where it stopped (`levels.len()` if it sifted through).
fn sift(levels: &[Level], start: usize, mut g: Permutation) -> (Permutation, usize) {
    for (i, level) in levels.iter().enumerate().skip(start) {
        match &level.transversal[g.get(level.base)] {
            None => return (g, i),
            Some((_, uinv)) => g = uinv.compose_unchecked(&g),
        }
    }
    (g, levels.len())
}

/// Makes sure no strong generator fixes every base point.
fn extend_base(base: &mut Vec<usize>, strong: &[Permutation], v: usize) {
    for s in strong {
        if base.iter().all(|&b| s.get(b) == b) {
            base.push((0..v).find(|&x| s.get(x) != x).expect("non-identity generator"));
        }
    }
}

/// A Schreier generator of level `i` that does not sift, if any.
fn missing_generator(levels: &[Level], strong: &[Permutation], i: usize) -> Option<(Permutation, usize)> {
    let level = &levels[i];
    for (b, entry) in level.transversal.iter().enumerate() {
        let Some((u_b, _)) = entry else { continue };
        for &k in &level.gens {
            let s = &strong[k];
            let (_, u_sb_inv) = level.transversal[s.get(b)].as_ref().expect("orbit is closed");
            let schreier = u_sb_inv.compose_unchecked(&s.compose_unchecked(u_b));
            let (residue, j) = sift(levels, i + 1, schreier);
            if !residue.is_identity() {
                return Some((residue, j));
            }
        }
    }
    None
}

/// A base and strong generating set, supporting order and membership.
pub struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(v: usize, generators: &[Permutation]) -> Self {
        let mut strong: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base = Vec::new();
        extend_base(&mut base, &strong, v);
        let build = |base: &[usize], strong: &[Permutation]| -> Vec<Level> {
            (0..base.len()).map(|d| Level::build(d, base, strong, v)).collect()
        };
        let mut levels = build(&base, &strong);
        let mut i = levels.len();
        while i > 0 {
            match missing_generator(&levels, &strong, i - 1) {
                Some((residue, j)) => {
                    strong.push(residue);
                    extend_base(&mut base, &strong, v);
                    levels = build(&base, &strong);
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
        StabChain { levels }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit_len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        sift(&self.levels, 0, g.clone()).0.is_identity()
    }
}

/// Order of the group generated by `spec`.
pub fn group_order(spec: &GroupSpec) -> u128 {
    StabChain::new(spec.v, &spec.generators).order()
}
