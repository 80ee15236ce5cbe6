use std::collections::BTreeMap;
use std::io::{self, Write};

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use constacyclic::ambient::AmbientRing;
use constacyclic::enumerate::{ideal_count_closed, ideal_count_sum, IdealCatalog};
use constacyclic::selfdual::{list_self_dual_length4, scan_self_dual, self_dual_count, verify_self_dual};
use constacyclic::{CodeDescriptor, Enumeration, Error, Exec, F2Subspace, FactorData, RPoly};

use crate::{Caps, Format, Outcome, ParamArgs};

pub const SCHEMA: u32 = 1;

pub enum CmdError {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Core(e)
    }
}

impl From<io::Error> for CmdError {
    fn from(e: io::Error) -> Self {
        CmdError::Io(e)
    }
}

impl From<serde_json::Error> for CmdError {
    fn from(e: serde_json::Error) -> Self {
        CmdError::Io(e.into())
    }
}

impl From<csv::Error> for CmdError {
    fn from(e: csv::Error) -> Self {
        CmdError::Io(e.into())
    }
}

type CmdResult = Result<Outcome, CmdError>;

fn emit<W: Write>(out: &mut W, v: &Value) -> Result<(), CmdError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

/// Coordinates of a word of R^N, each as its u-adic digits.
fn rpoly_json(r: &RPoly) -> Vec<Vec<u32>> {
    r.coordinates().map(|c| c.iter().map(|d| d.bits()).collect()).collect()
}

fn factor_data(args: &ParamArgs) -> Result<FactorData, Error> {
    FactorData::build_seeded(&args.build()?, args.seed)
}

pub fn factor<W: Write>(args: &ParamArgs, out: &mut W) -> CmdResult {
    let data = factor_data(args)?;
    let factors: Vec<Value> = data
        .entries()
        .iter()
        .map(|e| {
            json!({
                "index": e.index,
                "degree": e.degree,
                "f": e.f,
                "cofactor": e.cofactor,
                "idempotent": e.idempotent,
            })
        })
        .collect();
    emit(
        out,
        &json!({
            "schema": SCHEMA,
            "params": data.params().summary(),
            "degrees": data.degrees(),
            "factors": factors,
        }),
    )?;
    Ok(Outcome::Ok)
}

pub fn count<W: Write>(args: &ParamArgs, out: &mut W) -> CmdResult {
    let data = factor_data(args)?;
    let p = data.params();
    let mut total = BigUint::from(1u32);
    let mut agree = true;
    let mut factors = Vec::new();
    for e in data.entries() {
        let q = BigUint::from(1u32) << (p.m() as usize * e.degree);
        let sum = ideal_count_sum(&q, p.k(), p.lambda());
        let closed = ideal_count_closed(&q, p.k(), p.lambda())?;
        agree &= sum == closed;
        let cat = IdealCatalog::new(p.field_arc().clone(), e.index, e.f.clone(), p.k(), p.lambda());
        agree &= *cat.len() == sum;
        let families: Vec<String> = cat.family_counts().iter().map(|c| c.to_string()).collect();
        factors.push(json!({
            "index": e.index,
            "degree": e.degree,
            "q": q.to_string(),
            "sum_form": sum.to_string(),
            "closed_form": closed.to_string(),
            "families": families,
        }));
        total *= sum;
    }
    emit(
        out,
        &json!({
            "schema": SCHEMA,
            "params": p.summary(),
            "factors": factors,
            "forms_agree": agree,
            "total": total.to_string(),
        }),
    )?;
    Ok(if agree { Outcome::Ok } else { Outcome::Mismatch })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: &'a str,
    factor: usize,
    family: u8,
    s: usize,
    t: Option<usize>,
    h: String,
    size: String,
}

pub fn enumerate<W: Write>(
    args: &ParamArgs,
    offset: &BigUint,
    limit: Option<u64>,
    generators: bool,
    format: Format,
    out: &mut W,
) -> CmdResult {
    let p = args.build()?;
    let en = Enumeration::build_seeded(&p, args.seed)?;
    let total = en.count()?;
    let stream = en.stream_from(offset);
    let sizes = en.stream();
    let take = limit.map_or(usize::MAX, |l| usize::try_from(l).unwrap_or(usize::MAX));
    let ring = generators.then(|| AmbientRing::new(&p));
    match format {
        Format::Json => {
            write!(
                out,
                "{{\"schema\":{SCHEMA},\"params\":{},\"total\":\"{total}\",\"offset\":\"{offset}\",\"codes\":[",
                serde_json::to_string(&p.summary())?
            )?;
            for (i, code) in stream.take(take).enumerate() {
                if i > 0 {
                    write!(out, ",")?;
                }
                let mut obj = json!({
                    "index": (offset + i).to_string(),
                    "size": sizes.code_size(&code).to_string(),
                    "components": code.components,
                });
                if let Some(ring) = &ring {
                    let gens: Vec<Vec<Vec<u32>>> =
                        ring.lift_code(&en, &code).iter().map(rpoly_json).collect();
                    obj["generators"] = json!(gens);
                }
                write!(out, "\n{}", serde_json::to_string(&obj)?)?;
            }
            writeln!(out, "\n]}}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for (i, code) in stream.take(take).enumerate() {
                let index = (offset + i).to_string();
                let size = sizes.code_size(&code).to_string();
                for d in &code.components {
                    let h: Vec<String> = d.h.coeffs().iter().map(|c| c.bits().to_string()).collect();
                    w.serialize(CsvRow {
                        index: &index,
                        factor: d.factor,
                        family: d.family.number(),
                        s: d.s,
                        t: d.t,
                        h: h.join(" "),
                        size: size.clone(),
                    })?;
                }
            }
            w.flush()?;
        }
    }
    Ok(Outcome::Ok)
}

fn hex(space: &F2Subspace, dim: usize) -> Vec<String> {
    space.hex_basis(dim)
}

pub fn oracle<W: Write>(args: &ParamArgs, caps: &Caps, list_ideals: bool, exec: Exec, out: &mut W) -> CmdResult {
    let p = args.build()?;
    let ring = AmbientRing::new(&p);
    let lattice = ring.brute_force_ideals(exec, caps.oracle_max_dim)?;
    let en = Enumeration::build_seeded(&p, args.seed)?;
    let total = en.count()?;
    let dim = ring.bit_dim();
    let ops = ring.operators();

    let codes: Vec<CodeDescriptor> = en.stream().collect();
    let spaces = exec.map(&codes, |c| ring.code_space(&en, c, &ops));
    let mut enumerated: BTreeMap<F2Subspace, usize> = BTreeMap::new();
    let mut problems = Vec::new();
    for (i, s) in spaces.into_iter().enumerate() {
        match s {
            Ok(s) => {
                if let Some(j) = enumerated.insert(s, i) {
                    problems.push(format!("codes {j} and {i} coincide"));
                }
            }
            Err(e) => problems.push(format!("code {i}: {e}")),
        }
    }
    let found: BTreeMap<&F2Subspace, usize> = lattice.members.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let missing: Vec<Vec<String>> = lattice
        .members
        .iter()
        .filter(|s| !enumerated.contains_key(*s))
        .map(|s| hex(s, dim))
        .collect();
    let extra: Vec<Vec<String>> = enumerated
        .keys()
        .filter(|s| !found.contains_key(s))
        .map(|s| hex(s, dim))
        .collect();
    let pass = missing.is_empty() && extra.is_empty() && problems.is_empty();

    let mut report = json!({
        "schema": SCHEMA,
        "params": p.summary(),
        "dimension": dim,
        "oracle": {
            "ideals": lattice.members.len(),
            "cyclic": lattice.cyclic,
            "rounds": lattice.rounds,
        },
        "enumerated": total.to_string(),
        "matched": enumerated.keys().filter(|s| found.contains_key(s)).count(),
        "missing": missing,
        "extra": extra,
        "problems": problems,
        "status": if pass { "PASS" } else { "FAIL" },
    });
    if list_ideals {
        let ideals: Vec<Value> = lattice
            .members
            .iter()
            .map(|s| {
                let gens: Vec<Vec<Vec<u32>>> =
                    ring.greedy_generators(s, &ops).iter().map(rpoly_json).collect();
                json!({
                    "dimension": s.dim(),
                    "codewords": (BigUint::from(1u32) << s.dim()).to_string(),
                    "basis": hex(s, dim),
                    "generators": gens,
                    "code": enumerated.get(s),
                })
            })
            .collect();
        report["ideals"] = json!(ideals);
    }
    emit(out, &report)?;
    Ok(if pass { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn selfdual<W: Write>(
    args: &ParamArgs,
    caps: &Caps,
    verify: bool,
    scan: bool,
    exec: Exec,
    out: &mut W,
) -> CmdResult {
    let p = args.build()?;
    let en = Enumeration::build_seeded(&p, args.seed)?;
    let list = list_self_dual_length4(&en, exec)?;
    let expected = self_dual_count(p.m());
    let mut pass = BigUint::from(list.len()) == expected;
    let verified = if verify {
        match verify_self_dual(&en, &list, exec) {
            Ok(()) => Some(true),
            Err(Error::Verification(msg)) => {
                eprintln!("verification failed: {msg}");
                pass = false;
                Some(false)
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let mut report = json!({
        "schema": SCHEMA,
        "params": p.summary(),
        "expected": expected.to_string(),
        "found": list.len(),
        "verified": verified,
        "codes": list,
    });
    if scan {
        let ring = AmbientRing::new(&p);
        if ring.bit_dim() > caps.oracle_max_dim.max(32) {
            return Err(Error::CapExceeded {
                what: "self-dual scan dimension",
                needed: ring.bit_dim().to_string(),
                cap: caps.oracle_max_dim.max(32).to_string(),
            }
            .into());
        }
        let scanned = scan_self_dual(&en, exec)?;
        let listed: std::collections::BTreeSet<&CodeDescriptor> = list.iter().map(|c| &c.code).collect();
        let same = scanned.len() == listed.len() && scanned.iter().all(|c| listed.contains(c));
        pass &= same;
        report["scan"] = json!({ "self_dual": scanned.len(), "matches_list": same });
    }
    report["status"] = json!(if pass { "PASS" } else { "FAIL" });
    emit(out, &report)?;
    Ok(if pass { Outcome::Ok } else { Outcome::Mismatch })
}
