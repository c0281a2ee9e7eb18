//! Certificate file schema and streaming serialization.
//!
//! Top level: {"spec_version":"1","t":...,"v_max":...,"certificates":[...],
//! "survivors":[...],"external":[...]} with exactly that key order; each
//! certificate is {"family","params","v","k","reason","witnesses"} with
//! witnesses as an object of decimal strings sorted by name. Witness values
//! are decimal strings so the schema stays safe for integers beyond any
//! fixed-width JSON number range. There is one canonical serialization:
//! writing the parse of a canonical file reproduces it byte for byte.
//!
//! Reading is streaming: certificates are handed to a callback one at a
//! time, so replaying a multi-hundred-megabyte sweep file needs no
//! proportional memory.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::de::{self, DeserializeSeed, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::catalog::Family;
use crate::error::Error;
use crate::exactmath::Nat;

use super::{Certificate, DegreeOutcome, ExternalEntry, KScope, Reason, Survivor};

pub const SPEC_VERSION: &str = "1";

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KJson {
    Single(u64),
    Range([u64; 2]),
}

#[derive(Serialize, Deserialize)]
struct CertJson {
    family: String,
    params: Vec<u64>,
    v: u64,
    k: KJson,
    reason: String,
    witnesses: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct SurvivorJson {
    family: String,
    params: Vec<u64>,
    v: u64,
    k: u64,
}

#[derive(Serialize, Deserialize)]
struct ExternalJson {
    family: String,
    params: Vec<u64>,
    v: u64,
    citation: String,
}

fn cert_to_json(c: &Certificate) -> CertJson {
    CertJson {
        family: c.family.tag().to_string(),
        params: c.family.params(),
        v: c.v,
        k: match c.k {
            KScope::Single(k) => KJson::Single(k),
            KScope::Range { lo, hi } => KJson::Range([lo, hi]),
        },
        reason: c.reason.code().to_string(),
        witnesses: c
            .witnesses
            .iter()
            .map(|(n, v)| (n.clone(), v.to_string()))
            .collect(),
    }
}

fn parse_nat(s: &str) -> Result<Nat, Error> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal integer: {s:?}")));
    }
    s.parse::<Nat>()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

fn cert_from_json(t: u64, j: CertJson) -> Result<Certificate, Error> {
    let family = Family::from_tag_params(&j.family, &j.params)?;
    let witnesses: Result<Vec<(String, Nat)>, Error> = j
        .witnesses
        .into_iter()
        .map(|(n, v)| Ok((n, parse_nat(&v)?)))
        .collect();
    Ok(Certificate {
        t,
        family,
        v: j.v,
        k: match j.k {
            KJson::Single(k) => KScope::Single(k),
            KJson::Range([lo, hi]) => KScope::Range { lo, hi },
        },
        reason: Reason::from_code(&j.reason)?,
        witnesses: witnesses?,
    })
}

fn survivor_to_json(s: &Survivor) -> SurvivorJson {
    SurvivorJson {
        family: s.family.tag().to_string(),
        params: s.family.params(),
        v: s.v,
        k: s.k,
    }
}

fn external_to_json(e: &ExternalEntry) -> ExternalJson {
    ExternalJson {
        family: e.family.tag().to_string(),
        params: e.family.params(),
        v: e.v,
        citation: e.citation.to_string(),
    }
}

/// Streaming writer. Certificates go straight to the output; survivors and
/// external entries (both small) are buffered until [`finish`].
///
/// [`finish`]: SweepJsonWriter::finish
pub struct SweepJsonWriter<W: Write> {
    w: W,
    first_cert: bool,
    survivors: Vec<Survivor>,
    external: Vec<ExternalEntry>,
}

impl<W: Write> SweepJsonWriter<W> {
    pub fn new(mut w: W, t: u64, v_max: u64) -> Result<Self, Error> {
        write!(
            w,
            "{{\"spec_version\":\"{SPEC_VERSION}\",\"t\":{t},\"v_max\":{v_max},\"certificates\":["
        )?;
        Ok(SweepJsonWriter {
            w,
            first_cert: true,
            survivors: Vec::new(),
            external: Vec::new(),
        })
    }

    pub fn write_outcome(&mut self, o: &DegreeOutcome) -> Result<(), Error> {
        for c in &o.certificates {
            if !self.first_cert {
                self.w.write_all(b",")?;
            }
            self.first_cert = false;
            serde_json::to_writer(&mut self.w, &cert_to_json(c))?;
        }
        self.survivors.extend(o.survivors.iter().cloned());
        self.external.extend(o.external.iter().cloned());
        Ok(())
    }

    /// Close the arrays and the envelope; returns the inner writer.
    pub fn finish(mut self) -> Result<W, Error> {
        self.w.write_all(b"],\"survivors\":")?;
        let survivors: Vec<SurvivorJson> = self.survivors.iter().map(survivor_to_json).collect();
        serde_json::to_writer(&mut self.w, &survivors)?;
        self.w.write_all(b",\"external\":")?;
        let external: Vec<ExternalJson> = self.external.iter().map(external_to_json).collect();
        serde_json::to_writer(&mut self.w, &external)?;
        self.w.write_all(b"}")?;
        Ok(self.w)
    }
}

/// Envelope data a streaming read returns (certificates are not retained).
#[derive(Debug, Clone)]
pub struct FileSummary {
    pub t: u64,
    pub v_max: u64,
    pub certificates: u64,
    pub survivors: Vec<Survivor>,
    pub external_count: u64,
}

struct CertSeqSeed<'f> {
    t: u64,
    on_cert: &'f mut dyn FnMut(Certificate) -> Result<(), Error>,
    /// original callback error, preserved across serde's string-typed errors
    stashed: &'f mut Option<Error>,
}

impl<'de> DeserializeSeed<'de> for CertSeqSeed<'_> {
    type Value = u64;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<u64, D::Error> {
        struct V<'f>(CertSeqSeed<'f>);
        impl<'de> Visitor<'de> for V<'_> {
            type Value = u64;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("certificate array")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<u64, A::Error> {
                let mut count = 0;
                while let Some(j) = seq.next_element::<CertJson>()? {
                    let step = cert_from_json(self.0.t, j).and_then(|c| (self.0.on_cert)(c));
                    if let Err(e) = step {
                        let msg = e.to_string();
                        *self.0.stashed = Some(e);
                        return Err(de::Error::custom(msg));
                    }
                    count += 1;
                }
                Ok(count)
            }
        }
        d.deserialize_seq(V(self))
    }
}

struct EnvelopeSeed<'f> {
    on_cert: &'f mut dyn FnMut(Certificate) -> Result<(), Error>,
    stashed: &'f mut Option<Error>,
}

impl<'de> DeserializeSeed<'de> for EnvelopeSeed<'_> {
    type Value = FileSummary;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<FileSummary, D::Error> {
        struct V<'f>(EnvelopeSeed<'f>);
        impl<'de> Visitor<'de> for V<'_> {
            type Value = FileSummary;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("sweep file envelope")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<FileSummary, A::Error> {
                // canonical key order is part of the format
                let expect_key = |map: &mut A, want: &str| -> Result<(), A::Error> {
                    match map.next_key::<String>()? {
                        Some(k) if k == want => Ok(()),
                        Some(k) => Err(de::Error::custom(format!(
                            "non-canonical file: expected key {want}, found {k}"
                        ))),
                        None => Err(de::Error::custom(format!(
                            "non-canonical file: missing key {want}"
                        ))),
                    }
                };
                expect_key(&mut map, "spec_version")?;
                let version: String = map.next_value()?;
                if version != SPEC_VERSION {
                    return Err(de::Error::custom(format!(
                        "unsupported spec_version {version}"
                    )));
                }
                expect_key(&mut map, "t")?;
                let t: u64 = map.next_value()?;
                expect_key(&mut map, "v_max")?;
                let v_max: u64 = map.next_value()?;
                expect_key(&mut map, "certificates")?;
                let certificates = map.next_value_seed(CertSeqSeed {
                    t,
                    on_cert: self.0.on_cert,
                    stashed: self.0.stashed,
                })?;
                expect_key(&mut map, "survivors")?;
                let survivors_json: Vec<SurvivorJson> = map.next_value()?;
                expect_key(&mut map, "external")?;
                let external_json: Vec<ExternalJson> = map.next_value()?;
                if map.next_key::<String>()?.is_some() {
                    return Err(de::Error::custom("non-canonical file: trailing keys"));
                }
                let survivors: Result<Vec<Survivor>, Error> = survivors_json
                    .into_iter()
                    .map(|s| {
                        Ok(Survivor {
                            family: Family::from_tag_params(&s.family, &s.params)?,
                            v: s.v,
                            k: s.k,
                        })
                    })
                    .collect();
                Ok(FileSummary {
                    t,
                    v_max,
                    certificates,
                    survivors: survivors.map_err(de::Error::custom)?,
                    external_count: external_json.len() as u64,
                })
            }
        }
        d.deserialize_map(V(self))
    }
}

/// Stream a certificate file, handing each certificate to `on_cert`.
pub fn read_stream<R: Read>(
    r: R,
    mut on_cert: impl FnMut(Certificate) -> Result<(), Error>,
) -> Result<FileSummary, Error> {
    let mut de = serde_json::Deserializer::from_reader(r);
    let mut stashed = None;
    let result = EnvelopeSeed {
        on_cert: &mut on_cert,
        stashed: &mut stashed,
    }
    .deserialize(&mut de);
    match result {
        Ok(summary) => {
            de.end()?;
            Ok(summary)
        }
        Err(e) => Err(stashed.take().unwrap_or(Error::Json(e))),
    }
}

/// Replay every certificate in a file. Errors on the first failed recheck.
pub fn replay_stream<R: Read>(r: R) -> Result<FileSummary, Error> {
    read_stream(r, |cert| super::replay::replay_certificate(&cert))
}

/// Serialize a collected sweep to the canonical form.
pub fn write_sweep_result(
    w: impl Write,
    res: &super::SweepResult,
) -> Result<(), Error> {
    let mut writer = SweepJsonWriter::new(w, res.t, res.v_max)?;
    writer.write_outcome(&DegreeOutcome {
        v: 0,
        certificates: res.certificates.clone(),
        survivors: res.survivors.clone(),
        external: res.external.clone(),
    })?;
    writer.finish()?;
    Ok(())
}
