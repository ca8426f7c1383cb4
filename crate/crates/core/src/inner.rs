//! Partial inner automorphisms `φ_{g,h} : D_{g,h} → D_{h,g}, a ↦ hag` and
//! the inverse monoid `Inn(S)` they generate.

use std::collections::HashMap;
use std::fmt;

use crate::conjugacy::ConjugacyWitness;
use crate::partial_map::{closure, PartialMap, PartialMapError};
use crate::semigroup::WithOne;

/// `D_{g,h} = {a ∈ S : gh·a = a = a·gh}`.
pub fn domain_dgh(w: &WithOne, g: usize, h: usize) -> Vec<usize> {
    let gh = w.mul(g, h);
    w.elements()
        .filter(|&a| w.mul(gh, a) == a && w.mul(a, gh) == a)
        .collect()
}

/// A realised `φ_{g,h}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnGenerator {
    pub g: usize,
    pub h: usize,
    pub map: PartialMap,
    pub domain: Vec<usize>,
}

impl InnGenerator {
    pub fn render(&self, w: &WithOne) -> String {
        format!(
            "({},{}) : {}",
            w.name(self.g),
            w.name(self.h),
            self.map.render_with(|x| w.name(x))
        )
    }
}

pub fn phi(w: &WithOne, g: usize, h: usize) -> InnGenerator {
    let domain = domain_dgh(w, g, h);
    let mut images = vec![None; w.base_len()];
    for &a in &domain {
        images[a] = Some(w.mul3(h, a, g));
    }
    InnGenerator {
        g,
        h,
        map: PartialMap::from_images(images),
        domain,
    }
}

/// The distinct maps `φ_{g,h}` over `g, h ∈ S¹`, each with every pair that
/// realises it. Maps appear in order of their first realising pair under
/// [`WithOne::conjugator_order`].
#[derive(Clone, Debug)]
pub struct InnGenerators {
    pub maps: Vec<PartialMap>,
    pub provenance: Vec<Vec<ConjugacyWitness>>,
}

impl InnGenerators {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

pub fn generators(w: &WithOne) -> InnGenerators {
    let order = w.conjugator_order();
    let mut seen: HashMap<PartialMap, usize> = HashMap::new();
    let mut maps = Vec::new();
    let mut provenance: Vec<Vec<ConjugacyWitness>> = Vec::new();
    for &g in &order {
        for &h in &order {
            let m = phi(w, g, h).map;
            let k = *seen.entry(m.clone()).or_insert_with(|| {
                maps.push(m);
                provenance.push(Vec::new());
                maps.len() - 1
            });
            provenance[k].push(ConjugacyWitness { g, h });
        }
    }
    InnGenerators { maps, provenance }
}

/// `Inn(S)`, sorted.
pub fn inn(w: &WithOne, limit: Option<usize>) -> Result<Vec<PartialMap>, PartialMapError> {
    closure(&generators(w).maps, limit)
}

/// `(ḡ, h̄) = ((gh)^ω g, h (gh)′)`, computed in `S¹`.
pub fn reduce_conjugators(w: &WithOne, g: usize, h: usize) -> (usize, usize) {
    let om = w.monoid().omega_data(w.mul(g, h));
    (w.mul(om.omega, g), w.mul(h, om.pseudo_inverse))
}

impl fmt::Display for InnGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) : {}", self.g, self.h, self.map)
    }
}
