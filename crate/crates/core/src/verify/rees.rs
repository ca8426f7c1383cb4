use crate::constructors::{cyclic_group, rees_domain_nonempty, rees_generators, rees_matrix, ReesSpec};
use crate::green::green;
use crate::inner::{domain_dgh, inn, phi};
use crate::partial_map::{closure, PartialMap};
use crate::semigroup::{FiniteSemigroup, WithOne};

use super::SuiteReport;

/// `M(Z_2; 2, 2; P)` with `P = [[0, 0], [0, 1]]`.
pub fn z2_rees_example() -> ReesSpec {
    ReesSpec::new(cyclic_group(2).unwrap(), 2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap()
}

pub fn rees_suite(spec: &ReesSpec) -> SuiteReport {
    let mut report = SuiteReport::new(&format!(
        "rees |G|={} |I|={} |L|={}",
        spec.group.len(),
        spec.i_size,
        spec.lambda_size
    ));
    let s = rees_matrix(spec);
    let n = s.len();
    report.record("table is associative", FiniteSemigroup::from_flat(n, s.rows().concat()).is_ok(), String::new);
    let d = green(&s).d;
    report.record("one D-class", d.num_blocks() == 1, || d.to_string());

    let w = WithOne::new(&s);
    for x in 0..n {
        for y in 0..n {
            let predicted = rees_domain_nonempty(spec, spec.decode(x), spec.decode(y));
            report.record("domain emptiness matches the sandwich formula", predicted == !domain_dgh(&w, x, y).is_empty(), || {
                format!("{:?} {:?}", spec.decode(x), spec.decode(y))
            });
        }
    }

    let gens = rees_generators(spec);
    for gen in &gens {
        report.record("each generator is phi of its conjugator pair", gen.map == phi(&w, gen.x, gen.y).map, || {
            format!("{:?} {:?}", spec.decode(gen.x), spec.decode(gen.y))
        });
    }
    let mut maps: Vec<PartialMap> = gens.into_iter().map(|g| g.map).collect();
    maps.push(PartialMap::identity(n));
    let generated = closure(&maps, None).unwrap();
    let direct = inn(&w, None).unwrap();
    report.record("generators and the identity generate inn", generated == direct, || {
        format!("{} vs {}", generated.len(), direct.len())
    });
    report
}
