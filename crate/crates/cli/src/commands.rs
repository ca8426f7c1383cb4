use std::collections::BTreeSet;
use std::fs;

use serde_json::{json, Map, Value};

use innmonoid::conjugacy::centralizer;
use innmonoid::constructors::{full_transformation_monoid, rees_matrix, ReesSpec};
use innmonoid::gset::{end_g, standard_pairs, tau_generator_tuple};
use innmonoid::io::{
    build_catalog, parse_catalog_name, parse_gset, parse_rees_spec, parse_table, to_cayley_text,
    CatalogName, IoError,
};
use innmonoid::tx::{descriptor_from_pair, generator_welement};
use innmonoid::verify::{gset_suite, rees_suite, tx_suite, verify_all};
use innmonoid::{
    abstract_cayley, closure, conjugacy_classes, conjugators, generators, green, FiniteSemigroup,
    WithOne,
};

use innmonoid::verify::SuiteReport;

use crate::report::{digest, Report};

pub const MAX_TX: usize = 4;
pub const MAX_VERIFY_ORDER: usize = 5;

/// Errors that end a command with exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError(e.to_string())
    }
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("cannot read {path}: {e}")))
}

struct Input {
    semigroup: FiniteSemigroup,
    digest: String,
}

/// A catalog name or a Cayley table file. Catalog names are digested as
/// written; files (including `rees:` specs) by their contents.
fn load(arg: &str) -> Result<Input, CliError> {
    match parse_catalog_name(arg)? {
        Some(CatalogName::Rees(path)) => {
            let text = read(&path)?;
            let spec = parse_rees_spec(&text)?;
            Ok(Input {
                semigroup: rees_matrix(&spec),
                digest: digest(text.as_bytes()),
            })
        }
        Some(name) => Ok(Input {
            semigroup: build_catalog(&name)?.semigroup,
            digest: digest(arg.as_bytes()),
        }),
        None => {
            let text = read(arg)?;
            Ok(Input {
                semigroup: parse_table(&text)?,
                digest: digest(text.as_bytes()),
            })
        }
    }
}

fn set_of(names: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", names.into_iter().collect::<Vec<_>>().join(", "))
}

fn report(command: &str, digest: String, result: Value, failed: bool) -> Report {
    Report {
        command: command.to_string(),
        digest,
        result,
        suites: Vec::new(),
        failed,
    }
}

fn suites_report(command: &str, digest: String, suites: Vec<SuiteReport>) -> Report {
    Report {
        command: command.to_string(),
        digest,
        result: json!({}),
        failed: suites.iter().any(|r| !r.passed()),
        suites,
    }
}

pub fn validate(command: &str, arg: &str) -> Result<Report, CliError> {
    let input = load(arg)?;
    let s = &input.semigroup;
    let result = json!({
        "order": s.len(),
        "associative": true,
        "identity": s.identity().map(|x| s.name(x)),
        "idempotents": s.idempotents().into_iter().map(|x| s.name(x)).collect::<Vec<_>>(),
        "commutative": s.is_commutative(),
        "group": s.is_group(),
    });
    Ok(report(command, input.digest, result, false))
}

pub fn green_cmd(command: &str, arg: &str) -> Result<Report, CliError> {
    let input = load(arg)?;
    let s = &input.semigroup;
    let g = green(s);
    let name = |x: usize| s.name(x);
    let group_h: Vec<String> =
        g.h.blocks()
            .iter()
            .zip(&g.group_h)
            .filter(|(_, &grp)| grp)
            .map(|(b, _)| set_of(b.iter().map(|&x| s.name(x))))
            .collect();
    let result = json!({
        "L": g.l.render_with(name),
        "R": g.r.render_with(name),
        "H": g.h.render_with(name),
        "D": g.d.render_with(name),
        "J": g.j.render_with(name),
        "group_h_classes": group_h,
    });
    Ok(report(command, input.digest, result, false))
}

pub fn conj(command: &str, arg: &str) -> Result<Report, CliError> {
    let input = load(arg)?;
    let s = &input.semigroup;
    let w = WithOne::new(s);
    let classes = conjugacy_classes(&w);
    let mut listing = Vec::new();
    let mut witnesses = Vec::new();
    for block in classes.blocks() {
        listing.push(set_of(block.iter().map(|&x| s.name(x))));
        let rep = block[0];
        for &b in &block[1..] {
            if let Some(c) = conjugators(&w, rep, b) {
                witnesses.push(format!(
                    "{} ~ {} via ({},{})",
                    s.name(rep),
                    s.name(b),
                    w.name(c.g),
                    w.name(c.h)
                ));
            }
        }
    }
    let mut centralizers = Map::new();
    for a in s.elements() {
        centralizers.insert(
            s.name(a),
            json!(set_of(centralizer(&w, a).into_iter().map(|x| s.name(x)))),
        );
    }
    let result = json!({
        "classes": listing,
        "witnesses": witnesses,
        "idempotents": set_of(s.idempotents().into_iter().map(|x| s.name(x))),
        "centralizers": centralizers,
    });
    Ok(report(command, input.digest, result, false))
}

pub fn inn(
    command: &str,
    arg: &str,
    limit: Option<usize>,
    export: Option<&str>,
) -> Result<Report, CliError> {
    let input = load(arg)?;
    let s = &input.semigroup;
    let w = WithOne::new(s);
    let gens = generators(&w);
    let maps = closure(&gens.maps, limit).map_err(|e| CliError(e.to_string()))?;
    let name = |x: usize| s.name(x);
    let listing: Vec<String> = gens
        .maps
        .iter()
        .zip(&gens.provenance)
        .map(|(m, pairs)| {
            let pairs: Vec<String> = pairs
                .iter()
                .map(|p| format!("({},{})", w.name(p.g), w.name(p.h)))
                .collect();
            format!("{} : {}", pairs.join(" "), m.render_with(name))
        })
        .collect();
    let mut result = Map::new();
    result.insert("size".into(), json!(maps.len()));
    result.insert("generator_count".into(), json!(gens.len()));
    result.insert("generators".into(), json!(listing));
    result.insert(
        "elements".into(),
        json!(maps.iter().map(|m| m.render_with(name)).collect::<Vec<_>>()),
    );
    if let Some(path) = export {
        let table = abstract_cayley(&maps).map_err(|e| CliError(e.to_string()))?;
        fs::write(path, to_cayley_text(&table))
            .map_err(|e| CliError(format!("cannot write {path}: {e}")))?;
        result.insert("exported_cayley".into(), json!(path));
    }
    Ok(report(command, input.digest, Value::Object(result), false))
}

fn check_tx_size(n: usize) -> Result<(), CliError> {
    if (1..=MAX_TX).contains(&n) {
        Ok(())
    } else {
        Err(CliError(format!("-n must be between 1 and {MAX_TX}")))
    }
}

pub fn tx_classify(command: &str, n: usize) -> Result<Report, CliError> {
    check_tx_size(n)?;
    let (t, codec) = full_transformation_monoid(n).map_err(|e| CliError(e.to_string()))?;
    let w = WithOne::new(&t);
    let gens = generators(&w);
    let mut descriptors = BTreeSet::new();
    let mut classes = Vec::new();
    for pairs in &gens.provenance {
        let (g, h) = (codec.decode(pairs[0].g), codec.decode(pairs[0].h));
        let (d, d_prime) = descriptor_from_pair(&g, &h);
        classes.push(json!({
            "P": d.p.to_string(),
            "I": set_of(d.i.iter().map(usize::to_string)),
            "P'": d_prime.p.to_string(),
            "I'": set_of(d_prime.i.iter().map(usize::to_string)),
            "form": generator_welement(&g, &h).to_string(),
            "pairs": pairs.len(),
        }));
        descriptors.insert(d);
    }
    let result = json!({
        "n": n,
        "order": t.len(),
        "generator_count": gens.len(),
        "domain_descriptors": descriptors.len(),
        "generators": classes,
    });
    Ok(report(
        command,
        digest(format!("T:{n}").as_bytes()),
        result,
        false,
    ))
}

pub fn tx_verify(command: &str, n: usize, full: bool) -> Result<Report, CliError> {
    check_tx_size(n)?;
    Ok(suites_report(
        command,
        digest(format!("T:{n}").as_bytes()),
        vec![tx_suite(n, full)],
    ))
}

pub fn gset_inn(command: &str, path: &str, limit: Option<usize>) -> Result<Report, CliError> {
    let text = read(path)?;
    let gs = parse_gset(&text)?;
    let end = end_g(&gs);
    let w = WithOne::new(&end.semigroup);
    let gens = generators(&w);
    let maps = closure(&gens.maps, limit).map_err(|e| CliError(e.to_string()))?;
    let valid = standard_pairs(&gs)
        .into_iter()
        .filter(|sp| sp.is_valid)
        .count();
    let mut forms = Vec::new();
    let mut failed = false;
    for pairs in &gens.provenance {
        // Internal phi(g, h) is t ↦ h∘t∘g read right to left with the
        // operands swapped.
        let (g, h) = (&end.maps[pairs[0].h], &end.maps[pairs[0].g]);
        let form = match tau_generator_tuple(&gs, g, h) {
            Ok(t) => t.normal_form(&gs).to_string(),
            Err(e) => {
                failed = true;
                format!("error: {e}")
            }
        };
        forms.push(json!({"form": form, "pairs": pairs.len()}));
    }
    let result = json!({
        "group_order": gs.order(),
        "x_size": gs.x_size(),
        "orbits": gs.orbits().to_string(),
        "endomorphisms": end.len(),
        "valid_standard_pairs": valid,
        "generator_count": gens.len(),
        "generators": forms,
        "inn_size": maps.len(),
    });
    Ok(report(command, digest(text.as_bytes()), result, failed))
}

pub fn gset_verify(command: &str, path: &str) -> Result<Report, CliError> {
    let text = read(path)?;
    let gs = parse_gset(&text)?;
    Ok(suites_report(
        command,
        digest(text.as_bytes()),
        vec![gset_suite(&gs)],
    ))
}

pub fn rees_verify(command: &str, path: &str) -> Result<Report, CliError> {
    let path = path.strip_prefix("rees:").unwrap_or(path);
    let text = read(path)?;
    let spec: ReesSpec = parse_rees_spec(&text)?;
    Ok(suites_report(
        command,
        digest(text.as_bytes()),
        vec![rees_suite(&spec)],
    ))
}

pub fn verify_all_cmd(command: &str, max_order: usize) -> Result<Report, CliError> {
    if !(1..=MAX_VERIFY_ORDER).contains(&max_order) {
        return Err(CliError(format!(
            "--max-order must be between 1 and {MAX_VERIFY_ORDER}"
        )));
    }
    Ok(suites_report(
        command,
        digest(format!("verify all {max_order}").as_bytes()),
        verify_all(max_order),
    ))
}
