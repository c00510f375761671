//! Exact comparison of the two sides of a registry record.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::par::Exec;
use crate::series::{fmt_rational, int, Divergence, Monomial, QSeries};

use super::lhs::lhs_series_with;
use super::master::{master_lhs, master_rhs, MasterTables, MasterTheorem};
use super::registry::{IdentityRecord, Lhs, Params, DEFAULT_DZ};
use super::rhs::euler_step;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub t: usize,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "Dz")]
    pub dz: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialReport {
    pub b: i64,
    pub x: u32,
    pub z: u32,
}

impl From<Monomial> for MonomialReport {
    fn from(m: Monomial) -> Self {
        MonomialReport {
            b: m.b,
            x: m.x,
            z: m.z,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub q_power: usize,
    pub monomial: MonomialReport,
    pub lhs: String,
    pub rhs: String,
}

impl From<Divergence> for DivergenceReport {
    fn from(d: Divergence) -> Self {
        DivergenceReport {
            q_power: d.q_power,
            monomial: d.monomial.into(),
            lhs: fmt_rational(&d.lhs),
            rhs: fmt_rational(&d.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: ReportParams,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<DivergenceReport>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One line: id, parameters, status, and the divergence when present.
    pub fn table_row(&self) -> String {
        let p = &self.params;
        let mut extra = String::new();
        for (name, v) in [
            ("seed", p.seed.map(|v| v.to_string())),
            ("r", p.r.map(|v| v.to_string())),
            ("k", p.k.map(|v| v.to_string())),
            ("beta", p.beta.map(|v| v.to_string())),
        ] {
            if let Some(v) = v {
                extra.push_str(&format!(" {name}={v}"));
            }
        }
        let mut row = format!(
            "{:<20} t={} N={} Dz={}{}  {}",
            self.id,
            p.t,
            p.n,
            p.dz,
            extra,
            self.status.as_str()
        );
        if let Some(d) = &self.first_divergence {
            let m = Monomial::new(d.monomial.b, d.monomial.x, d.monomial.z);
            row.push_str(&format!(
                "  first divergence at q^{} [{}]: lhs {} rhs {}",
                d.q_power, m, d.lhs, d.rhs
            ));
        }
        row
    }
}

fn report_params(rec: &IdentityRecord, p: &Params) -> ReportParams {
    ReportParams {
        t: p.t,
        n: p.n,
        dz: p.dz,
        seed: rec.uses.seed.then_some(p.seed),
        r: rec.uses.r.then_some(p.r),
        k: rec.uses.k.then_some(p.k),
        beta: rec.uses.beta.then_some(p.beta),
    }
}

fn compare(
    id: String,
    params: ReportParams,
    lhs: &QSeries,
    rhs: &QSeries,
    start: Instant,
) -> VerificationReport {
    let div = lhs.first_divergence(rhs);
    VerificationReport {
        id,
        params,
        status: if div.is_none() {
            Status::Match
        } else {
            Status::Mismatch
        },
        first_divergence: div.map(Into::into),
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Both sides of a record at the given parameters.
pub fn sides(rec: &IdentityRecord, p: &Params, exec: Exec) -> Result<(QSeries, QSeries)> {
    rec.check(p)?;
    let lhs = match (rec.lhs)(p)? {
        Lhs::Enumerated(spec) => lhs_series_with(&spec, p.n, p.dz, exec)?,
        Lhs::Series(s) => s,
    };
    let rhs = (rec.rhs)(p)?;
    Ok((lhs, rhs))
}

/// Compares the two sides coefficient by coefficient.
pub fn verify(rec: &IdentityRecord, p: &Params) -> Result<VerificationReport> {
    verify_with(rec, p, Exec::default())
}

pub fn verify_with(rec: &IdentityRecord, p: &Params, exec: Exec) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, rhs) = sides(rec, p, exec)?;
    Ok(compare(
        rec.id.to_string(),
        report_params(rec, p),
        &lhs,
        &rhs,
        start,
    ))
}

/// A deliberate perturbation of the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Adds 1 to the constant-monomial coefficient of `q^k`.
    AddOne { q_power: usize },
    /// Multiplies by one extra factor `(q^{2t}; q^{2t})_∞`.
    ExtraEulerFactor,
}

/// Verification against a corrupted right-hand side.
pub fn verify_corrupted(
    rec: &IdentityRecord,
    p: &Params,
    c: Corruption,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, mut rhs) = sides(rec, p, Exec::default())?;
    match c {
        Corruption::AddOne { q_power } => {
            if q_power <= rhs.order() {
                rhs.coeff_mut(q_power).add_term(Monomial::ONE, int(1));
            }
        }
        Corruption::ExtraEulerFactor => {
            rhs = rhs.try_mul(&euler_step(2 * p.t.max(1), p.n, p.dz))?;
        }
    }
    Ok(compare(
        format!("{}+corrupted", rec.id),
        report_params(rec, p),
        &lhs,
        &rhs,
        start,
    ))
}

fn master_id(theorem: MasterTheorem) -> &'static str {
    match theorem {
        MasterTheorem::Bg4Multi => "sc-master",
        MasterTheorem::Signed => "sc-signed-master",
        MasterTheorem::OddBc => "bc-master",
        MasterTheorem::HanJi => "hanji-master",
    }
}

/// Checks a master theorem on explicit weight tables.
pub fn verify_master(
    theorem: MasterTheorem,
    t: usize,
    n: usize,
    tables: &MasterTables,
    seed: Option<u64>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let spec = master_lhs(theorem, t, tables)?;
    let lhs = lhs_series_with(&spec, n, DEFAULT_DZ, Exec::default())?;
    let rhs = master_rhs(theorem, t, n, DEFAULT_DZ, tables)?;
    let params = ReportParams {
        t,
        n,
        dz: DEFAULT_DZ,
        seed,
        r: None,
        k: None,
        beta: None,
    };
    Ok(compare(
        master_id(theorem).to_string(),
        params,
        &lhs,
        &rhs,
        start,
    ))
}

/// Checks a master theorem on random tables drawn from `seed`.
pub fn verify_master_random(
    theorem: MasterTheorem,
    t: usize,
    n: usize,
    seed: u64,
) -> Result<VerificationReport> {
    theorem.check_t(t)?;
    let signed = matches!(theorem, MasterTheorem::Signed | MasterTheorem::OddBc);
    let tables = MasterTables::random(t, n, seed, signed);
    verify_master(theorem, t, n, &tables, Some(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::registry::lookup;

    #[test]
    fn trivariate_matches() {
        let rec = lookup("sc-trivariate-gen").unwrap();
        let r = verify(&rec, &rec.default_params()).unwrap();
        assert!(r.is_match(), "{}", r.table_row());
    }

    #[test]
    fn add_one_is_located() {
        let rec = lookup("sc-trivariate-gen").unwrap();
        let mut p = rec.default_params();
        p.n = 10;
        let r = verify_corrupted(&rec, &p, Corruption::AddOne { q_power: 7 }).unwrap();
        assert_eq!(r.status, Status::Mismatch);
        let d = r.first_divergence.unwrap();
        assert_eq!(d.q_power, 7);
        assert_eq!(d.monomial, MonomialReport { b: 0, x: 0, z: 0 });
    }

    #[test]
    fn json_shape() {
        let rec = lookup("bc-bbm").unwrap();
        let mut p = rec.default_params();
        p.n = 3;
        let mut r = verify(&rec, &p).unwrap();
        r.wall_time_ms = 0;
        assert_eq!(
            r.to_json(),
            "{\"id\":\"bc-bbm\",\"params\":{\"t\":3,\"N\":3,\"Dz\":6,\"beta\":1},\"status\":\"MATCH\",\"wall_time_ms\":0}"
        );
    }
}
