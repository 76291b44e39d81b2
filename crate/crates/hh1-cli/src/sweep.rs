//! The `corpus run` subcommand: single family instances, parameter sweeps,
//! and the full default corpus.

use clap::Args;
use serde_json::json;
use std::collections::BTreeMap;

use hh1::corpus::{self, Family, FamilySpec};
use hh1::criteria;
use hh1::scalar::Field;
use hh1::Error;

#[derive(Args)]
pub struct RunArgs {
    /// Family id: kxn, d1a1, dih-xy, d1a2, dih-comm2, sd1a1, sd1a2, q1a1,
    /// q1a2, d2b, sd2b1, 3k, 3a, d3r, qci, qnm, nakayama, tk, loop-cycle.
    #[arg(long)]
    family: Option<String>,
    /// Run the whole default corpus.
    #[arg(long)]
    all: bool,
    /// Sweep specification like "k=2,3;char=0,2,3"; unlisted parameters
    /// come from the single-value flags below.
    #[arg(long)]
    sweep: Option<String>,
    /// Field characteristic (0 for the rationals).
    #[arg(long = "char")]
    char_: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    /// Quantum parameter (uniform over all pairs) for qci.
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    /// Exponent list for qci, e.g. "2,2,3".
    #[arg(long)]
    ni: Option<String>,
    #[arg(long, value_parser = ["text", "json"], default_value = "text")]
    format: String,
    #[arg(long, value_parser = ["on", "off"], default_value = "off")]
    oracle: String,
}

struct Params {
    values: BTreeMap<String, Vec<i64>>,
}

impl Params {
    fn get(&self, key: &str) -> Option<&Vec<i64>> {
        self.values.get(key)
    }
}

fn parse_sweep(spec: &str) -> Result<Params, Error> {
    let mut values = BTreeMap::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, list) = part.split_once('=').ok_or_else(|| {
            Error::BadParameters(format!("sweep entry `{part}` is not key=v1,v2"))
        })?;
        let vals: Result<Vec<i64>, _> = list.split(',').map(|v| v.trim().parse::<i64>()).collect();
        let vals =
            vals.map_err(|_| Error::BadParameters(format!("bad sweep values in `{part}`")))?;
        values.insert(key.trim().to_string(), vals);
    }
    Ok(Params { values })
}

fn build_family(id: &str, p: &BTreeMap<String, i64>) -> Result<Family, Error> {
    let geti = |key: &str| -> Result<u32, Error> {
        p.get(key)
            .map(|v| *v as u32)
            .ok_or_else(|| Error::BadParameters(format!("family `{id}` needs --{key}")))
    };
    let getb = |key: &str| -> bool { p.get(key).map(|v| *v != 0).unwrap_or(false) };
    let fam = match id.to_ascii_lowercase().as_str() {
        "kxn" => Family::PowerLoop { n: geti("n")? },
        "d1a1" | "d1a1k" => Family::DihedralA1 { k: geti("k")? },
        "dih-xy" => Family::DihedralXY {
            m: geti("m")?,
            n: geti("n")?,
        },
        "d1a2" => Family::DihedralA2 {
            k: geti("k")?,
            d: getb("d"),
        },
        "dih-comm2" => Family::DihedralComm2,
        "sd1a1" => Family::SemidihedralA1 { k: geti("k")? },
        "sd1a2" => Family::SemidihedralA2 {
            k: geti("k")?,
            c: getb("c"),
            d: getb("d"),
        },
        "q1a1" => Family::QuaternionA1 { k: geti("k")? },
        "q1a2" => Family::QuaternionA2 {
            k: geti("k")?,
            c: getb("c"),
            d: getb("d"),
        },
        "d2b" => Family::TwoVertexD2B {
            k: geti("k")?,
            s: geti("s")?,
            c: getb("c"),
        },
        "sd2b1" => Family::TwoVertexSD2B1 {
            k: geti("k")?,
            t: geti("t")?,
            c: getb("c"),
        },
        "3k" => Family::ThreeKTriangles { socle: geti("n")? },
        "3a" => Family::ThreeALine { socle: geti("n")? },
        "d3r" => Family::ThreeR {
            k: geti("k")?,
            s: geti("s")?,
            t: geti("t")?,
            u: geti("u")?,
        },
        "qnm" => Family::LayeredKronecker {
            vertices: geti("n")?,
            arms: geti("m")?,
        },
        "nakayama" => Family::NakayamaCycle {
            e: geti("e")?,
            m: geti("m")?,
        },
        "tk" => Family::TrivExtKronecker,
        "loop-cycle" => Family::LoopCycle,
        other => return Err(Error::BadParameters(format!("unknown family `{other}`"))),
    };
    Ok(fam)
}

fn qci_family(args: &RunArgs, p: &BTreeMap<String, i64>) -> Result<Family, Error> {
    let ni = args
        .ni
        .as_deref()
        .ok_or_else(|| Error::BadParameters("qci needs --ni, e.g. --ni 2,2".to_string()))?;
    let exponents: Result<Vec<u32>, _> = ni.split(',').map(|v| v.trim().parse::<u32>()).collect();
    let exponents =
        exponents.map_err(|_| Error::BadParameters("bad --ni list for qci".to_string()))?;
    let q = p
        .get("q")
        .copied()
        .or(args.q)
        .ok_or_else(|| Error::BadParameters("qci needs --q".to_string()))?;
    let r = exponents.len();
    Ok(Family::Qci {
        exponents,
        q: vec![q; r * (r - 1) / 2],
    })
}

pub fn run(args: RunArgs) -> Result<(), Error> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    if args.all {
        specs = corpus::default_corpus();
    } else {
        let id = args
            .family
            .as_deref()
            .ok_or_else(|| Error::BadParameters("need --family or --all".to_string()))?;
        // Collect fixed flag values.
        let mut fixed: BTreeMap<String, i64> = BTreeMap::new();
        for (key, val) in [
            ("k", args.k),
            ("s", args.s),
            ("t", args.t),
            ("u", args.u),
            ("m", args.m),
            ("n", args.n),
            ("e", args.e),
            ("c", args.c),
            ("d", args.d),
        ] {
            if let Some(v) = val {
                fixed.insert(key.to_string(), v as i64);
            }
        }
        if let Some(q) = args.q {
            fixed.insert("q".to_string(), q);
        }
        let chars: Vec<i64> = vec![args.char_.unwrap_or(0) as i64];
        let sweep = match &args.sweep {
            Some(s) => parse_sweep(s)?,
            None => Params {
                values: BTreeMap::new(),
            },
        };
        // Cartesian product over the swept keys, fixed flags fill the rest.
        let mut keys: Vec<&String> = sweep.values.keys().collect();
        keys.sort();
        let mut combos: Vec<BTreeMap<String, i64>> = vec![fixed.clone()];
        for key in keys {
            let vals = sweep.get(key).expect("key");
            let mut next = Vec::new();
            for combo in &combos {
                for v in vals {
                    let mut c = combo.clone();
                    c.insert(key.clone(), *v);
                    next.push(c);
                }
            }
            combos = next;
        }
        for combo in combos {
            let ch = combo.get("char").copied().unwrap_or_else(|| chars[0]);
            let field = Field::new(ch as u32)?;
            let family = if id.eq_ignore_ascii_case("qci") {
                qci_family(&args, &combo)?
            } else {
                build_family(id, &combo)?
            };
            specs.push(FamilySpec::new(family, field));
        }
    }

    let with_oracle = args.oracle == "on";
    let mut entries = Vec::new();
    for spec in specs {
        let pres = corpus::gen(&spec)?;
        let fa = criteria::analyze(pres, with_oracle)?;
        if args.format == "json" {
            let mut v = crate::report::analyze_value(&fa);
            if let serde_json::Value::Object(m) = &mut v {
                m.insert("family".into(), json!(spec.family.id()));
                m.insert("params".into(), json!(spec.family.params()));
                m.insert("char".into(), json!(spec.field.characteristic()));
            }
            entries.push(v);
        } else {
            let a = &fa.analysis;
            let fired: Vec<&str> = fa
                .verdicts
                .iter()
                .filter(|v| v.fires)
                .map(|v| v.id.as_str())
                .collect();
            let oracle_note = match &fa.oracle {
                Some(cmp) => format!(" oracle_agree={}", cmp.agree),
                None => String::new(),
            };
            println!(
                "{}: dim={} hh1={} rad={} solvable={} strongly_solvable={} fired=[{}]{}",
                spec.label(),
                a.dim_algebra(),
                a.hh1.dim,
                a.rad.dim,
                a.series.solvable,
                a.series.strongly_solvable,
                fired.join(","),
                oracle_note
            );
        }
    }
    if args.format == "json" {
        println!("{}", json!({ "schema": 1, "entries": entries }));
    }
    Ok(())
}
