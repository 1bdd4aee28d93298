//! File formats: sign-string chirotopes, rational configurations, and JSON
//! certificates bound to a chirotope digest.
//!
//! A chirotope file is two lines: `n r` and the sign string over sorted
//! r-subsets in lexicographic order. A configuration file starts with `n r`
//! followed by n lines of r rationals (`p/q`, bare integers accepted).
//! Certificates are JSON naming each member by its site (tau, sorted lambda)
//! and side, plus a multiplicity; they embed the SHA-256 digest of the
//! canonical chirotope file so a certificate cannot be replayed against a
//! different chirotope.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bfp::{BfpCertificate, EquationUse};
use crate::biquadratic::{members_for_site, normalize_pair, EquationForm, InequalitySide};
use crate::chirotope::{Chirotope, ChirotopeError, VectorConfiguration};
use crate::sign::ElementId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, col, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    File(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("certificate was issued for digest {found}, chirotope has {expected}")]
    DigestMismatch { expected: String, found: String },
    #[error("certificate does not fit the chirotope: {0}")]
    CertificateMismatch(String),
}

/// Canonical serialization of a chirotope; its bytes are what gets digested.
pub fn write_chirotope(chi: &Chirotope) -> String {
    format!("{} {}\n{}\n", chi.n(), chi.r(), chi.sign_string())
}

/// Hex SHA-256 digest of the canonical chirotope file.
pub fn chirotope_digest(chi: &Chirotope) -> String {
    let mut hasher = Sha256::new();
    hasher.update(write_chirotope(chi).as_bytes());
    hex::encode(hasher.finalize())
}

fn parse_header(line: &str, lineno: usize) -> Result<(u32, u32), ParseError> {
    let mut parts = line.split_whitespace();
    let n_text = parts
        .next()
        .ok_or_else(|| ParseError::new(lineno, 1, "expected `n r` header"))?;
    let n: u32 = n_text.parse().map_err(|_| {
        ParseError::new(lineno, 1, format!("invalid element count {n_text:?}"))
    })?;
    let r_col = line.find(n_text).unwrap_or(0) + n_text.len() + 2;
    let r_text = parts
        .next()
        .ok_or_else(|| ParseError::new(lineno, r_col, "expected rank after element count"))?;
    let r: u32 = r_text
        .parse()
        .map_err(|_| ParseError::new(lineno, r_col, format!("invalid rank {r_text:?}")))?;
    if let Some(extra) = parts.next() {
        let col = line.rfind(extra).unwrap_or(0) + 1;
        return Err(ParseError::new(lineno, col, format!("unexpected token {extra:?}")));
    }
    Ok((n, r))
}

pub fn parse_chirotope(text: &str) -> Result<Chirotope, ParseError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let (n, r) = parse_header(header, 1)?;
    let signs = lines.next().ok_or_else(|| ParseError::new(2, 1, "missing sign string"))?;
    for (extra_line, content) in lines.enumerate() {
        if !content.trim().is_empty() {
            return Err(ParseError::new(extra_line + 3, 1, "unexpected extra line"));
        }
    }
    Chirotope::from_sign_string(n, r, signs.trim_end()).map_err(|e| match e {
        ChirotopeError::BadCharacter { position, found } => ParseError::new(
            2,
            position + 1,
            format!("invalid sign character {found:?}"),
        ),
        other => ParseError::new(2, 1, other.to_string()),
    })
}

pub fn load_chirotope(path: &Path) -> Result<Chirotope, IoError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_chirotope(&text)?)
}

fn format_rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

fn parse_rational(token: &str, line: usize, col: usize) -> Result<BigRational, ParseError> {
    let make = |p: &str, q: &str| -> Option<BigRational> {
        let numer = BigInt::from_str(p).ok()?;
        let denom = BigInt::from_str(q).ok()?;
        if denom.is_zero() {
            return None;
        }
        Some(BigRational::new(numer, denom))
    };
    let parsed = match token.split_once('/') {
        Some((p, q)) => make(p, q),
        None => make(token, "1"),
    };
    parsed.ok_or_else(|| ParseError::new(line, col, format!("invalid rational {token:?}")))
}

pub fn write_configuration(config: &VectorConfiguration) -> String {
    let mut out = format!("{} {}\n", config.n(), config.r());
    for column in config.columns() {
        let row: Vec<String> = column.iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_configuration(text: &str) -> Result<VectorConfiguration, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let (n, r) = parse_header(header, 1)?;
    let mut columns = Vec::with_capacity(n as usize);
    for _ in 0..n {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| {
                ParseError::new(columns.len() + 2, 1, format!("expected {n} vector lines"))
            })?;
        let lineno = idx + 1;
        let mut column = Vec::with_capacity(r as usize);
        let mut col = 1;
        for token in line.split_whitespace() {
            let at = line.find(token).map_or(col, |p| p + 1);
            column.push(parse_rational(token, lineno, at)?);
            col = at + token.len();
        }
        if column.len() != r as usize {
            return Err(ParseError::new(
                lineno,
                1,
                format!("expected {r} coordinates, found {}", column.len()),
            ));
        }
        columns.push(column);
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(ParseError::new(idx + 1, 1, "unexpected extra line"));
        }
    }
    VectorConfiguration::new(r, columns)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

pub fn load_configuration(path: &Path) -> Result<VectorConfiguration, IoError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_configuration(&text)?)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
struct CertificateItem {
    tau: Vec<u32>,
    lambda: [u32; 4],
    side: String,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
struct CertificateDocument {
    n: u32,
    r: u32,
    chirotope_digest: String,
    inequalities: Vec<CertificateItem>,
    equations: Vec<CertificateItem>,
}

fn equation_side_string(form: EquationForm, reversed: bool) -> String {
    match (form, reversed) {
        (EquationForm::EfEqCd, false) => "EF=CD",
        (EquationForm::AbEqCd, false) => "AB=CD",
        (EquationForm::EfEqCd, true) => "CD=EF",
        (EquationForm::AbEqCd, true) => "CD=AB",
    }
    .to_string()
}

fn equation_side_parse(side: &str) -> Option<(EquationForm, bool)> {
    match side {
        "EF=CD" => Some((EquationForm::EfEqCd, false)),
        "AB=CD" => Some((EquationForm::AbEqCd, false)),
        "CD=EF" => Some((EquationForm::EfEqCd, true)),
        "CD=AB" => Some((EquationForm::AbEqCd, true)),
        _ => None,
    }
}

/// Serializes a certificate, binding it to the chirotope's digest.
pub fn certificate_to_json(chi: &Chirotope, certificate: &BfpCertificate) -> String {
    let site = |tau: &[ElementId], lambda: &[ElementId; 4]| {
        let mut lam: Vec<u32> = lambda.iter().map(|e| e.0).collect();
        lam.sort_unstable();
        (tau.iter().map(|e| e.0).collect::<Vec<u32>>(), [lam[0], lam[1], lam[2], lam[3]])
    };
    let inequalities = certificate
        .inequalities
        .iter()
        .map(|(q, multiplicity)| {
            let (tau, lambda) = site(&q.origin.tau, &q.origin.lambda);
            CertificateItem {
                tau,
                lambda,
                side: q.side.as_str().to_string(),
                multiplicity: *multiplicity,
            }
        })
        .collect();
    let equations = certificate
        .equations
        .iter()
        .map(|(u, multiplicity)| {
            let (tau, lambda) = site(&u.equation.origin.tau, &u.equation.origin.lambda);
            CertificateItem {
                tau,
                lambda,
                side: equation_side_string(u.equation.form, u.reversed),
                multiplicity: *multiplicity,
            }
        })
        .collect();
    let document = CertificateDocument {
        n: chi.n(),
        r: chi.r(),
        chirotope_digest: chirotope_digest(chi),
        inequalities,
        equations,
    };
    serde_json::to_string_pretty(&document).expect("certificate serialization cannot fail")
}

fn item_site(
    chi: &Chirotope,
    item: &CertificateItem,
) -> Result<(Vec<ElementId>, [ElementId; 4]), IoError> {
    let bad = |msg: String| IoError::CertificateMismatch(msg);
    if item.multiplicity == 0 {
        return Err(bad(format!("zero multiplicity at tau {:?}", item.tau)));
    }
    for &e in item.tau.iter().chain(item.lambda.iter()) {
        if e < 1 || e > chi.n() {
            return Err(bad(format!("element {e} outside ground set")));
        }
    }
    let tau: Vec<ElementId> = item.tau.iter().map(|&e| ElementId(e)).collect();
    if tau.len() + 2 != chi.r() as usize || tau.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad(format!("tau {:?} is not a sorted (r-2)-subset", item.tau)));
    }
    let mut lam: Vec<ElementId> = item.lambda.iter().map(|&e| ElementId(e)).collect();
    lam.sort();
    if lam.windows(2).any(|w| w[0] == w[1]) || lam.iter().any(|e| tau.contains(e)) {
        return Err(bad(format!("lambda {:?} is not disjoint from tau", item.lambda)));
    }
    Ok((tau, [lam[0], lam[1], lam[2], lam[3]]))
}

/// Reconstructs a certificate against a chirotope, enforcing the digest and
/// resolving every item back to a member of its site.
pub fn certificate_from_json(chi: &Chirotope, text: &str) -> Result<BfpCertificate, IoError> {
    let document: CertificateDocument = serde_json::from_str(text)?;
    let expected = chirotope_digest(chi);
    if document.chirotope_digest != expected {
        return Err(IoError::DigestMismatch { expected, found: document.chirotope_digest });
    }
    if document.n != chi.n() || document.r != chi.r() {
        return Err(IoError::CertificateMismatch(format!(
            "certificate is for n={} r={}, chirotope has n={} r={}",
            document.n,
            document.r,
            chi.n(),
            chi.r()
        )));
    }

    let mut certificate = BfpCertificate::default();
    for item in &document.inequalities {
        let (tau, lambda) = item_site(chi, item)?;
        let side = InequalitySide::from_str(&item.side).ok_or_else(|| {
            IoError::CertificateMismatch(format!("unknown inequality side {:?}", item.side))
        })?;
        let site = normalize_pair(chi, &tau, &lambda).map_err(|e| {
            IoError::CertificateMismatch(format!("site does not normalize: {e}"))
        })?;
        let members = members_for_site(&site);
        let member = members
            .inequalities
            .into_iter()
            .find(|q| q.side == side)
            .ok_or_else(|| {
                IoError::CertificateMismatch(format!(
                    "site tau {:?} lambda {:?} has no {} inequality",
                    item.tau, item.lambda, item.side
                ))
            })?;
        certificate.inequalities.push((member, item.multiplicity));
    }
    for item in &document.equations {
        let (tau, lambda) = item_site(chi, item)?;
        let (form, reversed) = equation_side_parse(&item.side).ok_or_else(|| {
            IoError::CertificateMismatch(format!("unknown equation side {:?}", item.side))
        })?;
        let site = normalize_pair(chi, &tau, &lambda).map_err(|e| {
            IoError::CertificateMismatch(format!("site does not normalize: {e}"))
        })?;
        let members = members_for_site(&site);
        let member = members
            .equations
            .into_iter()
            .find(|eq| eq.form == form)
            .ok_or_else(|| {
                IoError::CertificateMismatch(format!(
                    "site tau {:?} lambda {:?} has no {} equation",
                    item.tau, item.lambda, item.side
                ))
            })?;
        certificate.equations.push((EquationUse { equation: member, reversed }, item.multiplicity));
    }
    Ok(certificate)
}

pub fn load_certificate(chi: &Chirotope, path: &Path) -> Result<BfpCertificate, IoError> {
    let text = std::fs::read_to_string(path)?;
    certificate_from_json(chi, &text)
}

/// Human-readable ASCII rendering used by file-writing commands.
pub struct DisplayBytes<'a>(pub &'a [u8]);

impl fmt::Display for DisplayBytes<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquadratic::enumerate_system;
    use crate::generate::moment_curve;

    #[test]
    fn chirotope_round_trip_preserves_bytes() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let text = write_chirotope(&chi);
        assert_eq!(text, "5 3\n++++++++++\n");
        let back = parse_chirotope(&text).unwrap();
        assert_eq!(back, chi);
        assert_eq!(write_chirotope(&back), text);
    }

    #[test]
    fn chirotope_parse_errors_carry_positions() {
        let err = parse_chirotope("4 2\n++x+++\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        let err = parse_chirotope("4\n++++++\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_chirotope("4 2\n++++++\njunk\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn configuration_round_trip_and_bare_integers() {
        let config = moment_curve(4, 3);
        let text = write_configuration(&config);
        assert!(text.starts_with("4 3\n1/1 1/1 1/1\n"));
        let back = parse_configuration(&text).unwrap();
        assert_eq!(back, config);
        let bare = parse_configuration("2 2\n1 -3\n1/2 4\n").unwrap();
        assert_eq!(bare.column(ElementId(1))[1], BigRational::from_integer((-3).into()));
        assert_eq!(
            bare.column(ElementId(2))[0],
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn configuration_parse_errors_carry_positions() {
        let err = parse_configuration("2 2\n1 2\n1/0 3\n").unwrap_err();
        assert_eq!((err.line, err.col), (3, 1));
        let err = parse_configuration("2 2\n1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn digest_is_stable_and_input_sensitive() {
        let chi = Chirotope::from_sign_string(4, 2, "++++0+").unwrap();
        let d1 = chirotope_digest(&chi);
        assert_eq!(d1.len(), 64);
        assert_eq!(d1, chirotope_digest(&parse_chirotope(&write_chirotope(&chi)).unwrap()));
        let other = Chirotope::from_sign_string(4, 2, "++++++").unwrap();
        assert_ne!(d1, chirotope_digest(&other));
    }

    #[test]
    fn certificate_round_trips_through_json() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let system = enumerate_system(&chi).unwrap();
        let mut certificate = BfpCertificate::default();
        certificate.inequalities.push((system.inequalities[0].clone(), 2));
        certificate.inequalities.push((system.inequalities[3].clone(), 1));
        let json = certificate_to_json(&chi, &certificate);
        let back = certificate_from_json(&chi, &json).unwrap();
        assert_eq!(back, certificate);
    }

    #[test]
    fn equation_use_round_trips_with_direction() {
        let chi = Chirotope::from_sign_string(4, 2, "0+++++").unwrap();
        let system = enumerate_system(&chi).unwrap();
        let mut certificate = BfpCertificate::default();
        certificate
            .equations
            .push((EquationUse { equation: system.equations[0].clone(), reversed: true }, 5));
        let json = certificate_to_json(&chi, &certificate);
        assert!(json.contains("\"CD=EF\""));
        let back = certificate_from_json(&chi, &json).unwrap();
        assert_eq!(back, certificate);
    }

    #[test]
    fn digest_mismatch_is_detected_at_load() {
        let chi5 = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let chi6 = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        let system = enumerate_system(&chi5).unwrap();
        let mut certificate = BfpCertificate::default();
        certificate.inequalities.push((system.inequalities[0].clone(), 1));
        let json = certificate_to_json(&chi5, &certificate);
        assert!(matches!(
            certificate_from_json(&chi6, &json),
            Err(IoError::DigestMismatch { .. })
        ));
    }

    #[test]
    fn unknown_side_is_rejected() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let json = certificate_to_json(&chi, &BfpCertificate::default())
            .replace("\"inequalities\": []", "\"inequalities\": [{\"tau\": [1], \"lambda\": [2,3,4,5], \"side\": \"XX<YY\", \"multiplicity\": 1}]");
        assert!(matches!(
            certificate_from_json(&chi, &json),
            Err(IoError::CertificateMismatch(_))
        ));
    }
}
