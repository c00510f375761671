//! Subcommand bodies. Each returns the full rendered output.

use std::fmt::Write;

use serde::Serialize;

use hookpart::boundary::BoundaryWord;
use hookpart::enumerate::{enumerate as list, PartitionClass};
use hookpart::identities::{lookup, registry, verify as run, IdentityRecord, VerificationReport};
use hookpart::littlewood::{
    decompose as littlewood, is_bc_diagonal, sc_decompose, subword_strings,
};
use hookpart::{Error, Partition, Result};

use crate::{ClassArg, Format};

fn parse(s: &str) -> Result<Partition> {
    s.parse()
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn list_str<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Serialize)]
struct DecomposeOut {
    partition: String,
    t: usize,
    core: String,
    quotient: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subwords: Option<Vec<String>>,
}

pub fn decompose(partition: &str, t: usize, show_word: bool, format: Format) -> Result<String> {
    let lambda = parse(partition)?;
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t must be >= 2, got {t}")));
    }
    let d = littlewood(&lambda, t);
    let mu = if t % 2 == 1 && lambda.is_self_conjugate() {
        sc_decompose(&lambda, t)?.mu.map(|m| m.to_string())
    } else {
        None
    };
    let out = DecomposeOut {
        partition: lambda.to_string(),
        t,
        core: d.core.to_string(),
        quotient: d.quotient.iter().map(ToString::to_string).collect(),
        mu,
        word: show_word.then(|| BoundaryWord::encode(&lambda).to_string()),
        subwords: show_word.then(|| subword_strings(&lambda, t)),
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Table => {
            let mut s = String::new();
            let quotient: Vec<String> = out.quotient.iter().map(|q| format!("({q})")).collect();
            writeln!(s, "partition  ({})", out.partition).unwrap();
            writeln!(s, "t          {t}").unwrap();
            writeln!(s, "core       ({})", out.core).unwrap();
            writeln!(s, "quotient   {}", quotient.join(" ")).unwrap();
            if let Some(mu) = &out.mu {
                writeln!(s, "mu         ({mu})").unwrap();
            }
            if let (Some(w), Some(subs)) = (&out.word, &out.subwords) {
                writeln!(s, "word       {w}").unwrap();
                for (k, sub) in subs.iter().enumerate() {
                    writeln!(s, "subword {k}  {sub}").unwrap();
                }
            }
            s
        }
    })
}

#[derive(Serialize)]
struct StatsOut {
    partition: String,
    size: usize,
    length: usize,
    durfee: usize,
    bg_rank: i64,
    hooks: Vec<usize>,
    diagonal_hooks: Vec<usize>,
    self_conjugate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    d1_d3: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hooks_divisible: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bc: Option<bool>,
    syt_count: String,
}

pub fn stats(partition: &str, t: Option<usize>, format: Format) -> Result<String> {
    let lambda = parse(partition)?;
    if t == Some(0) {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let sc = lambda.is_self_conjugate();
    let bc = match t {
        Some(t) if t >= 3 && t % 2 == 1 => Some(sc && is_bc_diagonal(&lambda, t)?),
        _ => None,
    };
    // the empty shape has exactly one standard tableau
    let syt = if lambda.is_empty() {
        "1".to_string()
    } else {
        lambda.frt_syt_count()?.to_string()
    };
    let out = StatsOut {
        partition: lambda.to_string(),
        size: lambda.size(),
        length: lambda.length(),
        durfee: lambda.durfee(),
        bg_rank: lambda.bg_rank(),
        hooks: lambda.hook_stats(1).full,
        diagonal_hooks: lambda.diagonal_hooks(),
        self_conjugate: sc,
        d1_d3: if sc {
            Some(lambda.d1_d3_split()?)
        } else {
            None
        },
        t,
        hooks_divisible: t.map(|t| lambda.hook_stats(t).mod_t),
        bc,
        syt_count: syt,
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "partition       ({})", out.partition).unwrap();
            writeln!(s, "size            {}", out.size).unwrap();
            writeln!(s, "length          {}", out.length).unwrap();
            writeln!(s, "durfee          {}", out.durfee).unwrap();
            writeln!(s, "BG-rank         {}", out.bg_rank).unwrap();
            writeln!(s, "hooks           {}", list_str(&out.hooks)).unwrap();
            writeln!(s, "diagonal hooks  {}", list_str(&out.diagonal_hooks)).unwrap();
            writeln!(s, "self-conjugate  {}", out.self_conjugate).unwrap();
            if let Some((r, d3)) = out.d1_d3 {
                writeln!(s, "(r, s)          ({r}, {d3})").unwrap();
            }
            if let (Some(t), Some(h)) = (out.t, &out.hooks_divisible) {
                writeln!(s, "H_{t:<13} {}", list_str(h)).unwrap();
            }
            if let (Some(t), Some(bc)) = (out.t, out.bc) {
                writeln!(s, "BC_{t:<12} {bc}").unwrap();
            }
            writeln!(s, "SYT count       {}", out.syt_count).unwrap();
            s
        }
    })
}

#[derive(Serialize)]
struct Row {
    partition: String,
    length: usize,
    durfee: usize,
    bg_rank: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    hooks_divisible: Option<usize>,
}

#[derive(Serialize)]
struct EnumerateOut {
    class: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    count: usize,
    partitions: Vec<Row>,
}

pub fn enumerate(class: ClassArg, n: usize, t: Option<usize>, format: Format) -> Result<String> {
    if t == Some(0) {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let (name, pc) = match class {
        ClassArg::All => ("all", PartitionClass::All),
        ClassArg::Sc => ("sc", PartitionClass::SelfConjugate),
        ClassArg::Bc => match t {
            Some(t) if t >= 3 && t % 2 == 1 => ("bc", PartitionClass::Bc(t)),
            _ => return Err(Error::Parity("class bc needs an odd --t >= 3".into())),
        },
    };
    let rows: Vec<Row> = list(n, pc)?
        .into_iter()
        .map(|p| Row {
            partition: p.to_string(),
            length: p.length(),
            durfee: p.durfee(),
            bg_rank: p.bg_rank(),
            hooks_divisible: t.map(|t| p.count_hooks_divisible(t)),
        })
        .collect();
    let out = EnumerateOut {
        class: name,
        n,
        t,
        count: rows.len(),
        partitions: rows,
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Table => {
            let mut s = String::new();
            let ht = t.map(|t| format!("  |H_{t}|")).unwrap_or_default();
            writeln!(
                s,
                "{:<24}{:>7}{:>7}{:>4}{ht}",
                "partition", "length", "durfee", "BG"
            )
            .unwrap();
            for r in &out.partitions {
                let h = r
                    .hooks_divisible
                    .map(|h| format!("{h:>7}"))
                    .unwrap_or_default();
                writeln!(
                    s,
                    "{:<24}{:>7}{:>7}{:>4}{h}",
                    format!("({})", r.partition),
                    r.length,
                    r.durfee,
                    r.bg_rank
                )
                .unwrap();
            }
            writeln!(s, "{} partitions", out.count).unwrap();
            s
        }
    })
}

/// Parameters that replace a record's defaults when given.
pub struct Overrides {
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub dz: u32,
    pub seed: Option<u64>,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub beta: Option<i64>,
}

fn params(rec: &IdentityRecord, o: &Overrides) -> hookpart::identities::Params {
    let mut p = rec.default_params();
    p.t = o.t.unwrap_or(p.t);
    p.n = o.n.unwrap_or(p.n);
    p.dz = o.dz;
    p.seed = o.seed.unwrap_or(p.seed);
    p.r = o.r.unwrap_or(p.r);
    p.k = o.k.unwrap_or(p.k);
    p.beta = o.beta.unwrap_or(p.beta);
    p
}

pub fn verify(identity: &str, o: &Overrides, format: Format) -> Result<(String, u8)> {
    let records = if identity == "all" {
        registry()
    } else {
        vec![lookup(identity)?]
    };
    let plans: Vec<_> = records.iter().map(|rec| (rec, params(rec, o))).collect();
    for (rec, p) in &plans {
        rec.check(p)?;
    }
    let reports: Vec<VerificationReport> = plans
        .iter()
        .map(|(rec, p)| run(rec, p))
        .collect::<Result<_>>()?;
    let mismatches = reports.iter().filter(|r| !r.is_match()).count();
    let text = match format {
        Format::Json => json(&reports),
        Format::Table => {
            let mut s = String::new();
            for r in &reports {
                writeln!(s, "{}", r.table_row()).unwrap();
            }
            writeln!(
                s,
                "{} records: {} MATCH, {} MISMATCH",
                reports.len(),
                reports.len() - mismatches,
                mismatches
            )
            .unwrap();
            s
        }
    };
    Ok((text, if mismatches == 0 { 0 } else { 1 }))
}
