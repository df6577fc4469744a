use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use coxcess::excess;
use coxcess::reps::{
    certificate_a, certificate_bd, corresponding_element_a, u_c, u_c_t, w_lambda_rho, FactorizationCertificate,
    MaximalPartition, MaximalSplitPartition,
};
use coxcess::roots::{inversion_set, length, ClassicalType};
use coxcess::{SignedCycleType, SignedPermutation};

use crate::classes::GroupInfo;
use crate::table::Table;
use crate::{degree, to_json, CliError, CliResult, Ctx, Format, Report, RepKind, TypeArg};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateDoc {
    pub sigma: String,
    pub tau: String,
    pub sigma_length: usize,
    pub tau_length: usize,
    pub valid: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RepDoc {
    pub group: GroupInfo,
    pub kind: String,
    pub class: String,
    pub element: String,
    pub window: String,
    pub lengths: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExcessDoc {
    pub group: GroupInfo,
    pub flavor: String,
    pub element: String,
    pub window: String,
    pub excess: usize,
    pub length: usize,
    pub sigma: String,
    pub tau: String,
    pub sigma_length: usize,
    pub tau_length: usize,
    pub examined: usize,
}

fn parse_parts(text: &str, n: usize) -> CliResult<Vec<usize>> {
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<usize>().ok().filter(|&v| v > 0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CliError::Usage(format!("bad partition {text:?}")))?;
    if parts.iter().sum::<usize>() != n {
        return Err(CliError::Usage(format!("{text:?} is not a partition of {n}")));
    }
    Ok(parts)
}

fn parse_signed(text: &str, n: usize) -> CliResult<SignedCycleType> {
    let ct: SignedCycleType = text.parse()?;
    if ct.rank() != n {
        return Err(CliError::Usage(format!("class {text:?} has rank {}, not {n}", ct.rank())));
    }
    Ok(ct)
}

fn certificate_doc(c: &FactorizationCertificate) -> CertificateDoc {
    let len = |x: &SignedPermutation| length(x, c.flavor).expect("certificate factors are group members");
    CertificateDoc {
        sigma: c.sigma.to_string(),
        tau: c.tau.to_string(),
        sigma_length: len(&c.sigma),
        tau_length: len(&c.tau),
        valid: c.check().is_valid(),
    }
}

fn lengths_of(ty: TypeArg, w: &SignedPermutation) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    let types: &[ClassicalType] = if ty == TypeArg::A {
        &[ClassicalType::A]
    } else {
        &[ClassicalType::B, ClassicalType::D]
    };
    for &t in types {
        if let Ok(l) = length(w, t) {
            out.insert(t.letter().to_string(), l);
        }
    }
    out
}

pub fn rep(ctx: &Ctx, kind: RepKind, ty: TypeArg, rank: usize, class: &str) -> CliResult<Report> {
    let n = degree(ty, rank)?;
    let (w, cert, label) = match (kind, ty) {
        (RepKind::Kim | RepKind::Uc, TypeArg::A) => {
            let parts = parse_parts(class, n)?;
            let lambda = MaximalPartition::normalize(&parts)?;
            if kind == RepKind::Kim {
                let cert = certificate_a(&lambda);
                (corresponding_element_a(&lambda), Some(cert), lambda.to_string())
            } else {
                let mut sorted = parts.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                (u_c(&SignedCycleType::new(vec![], sorted)), None, format!("{parts:?}"))
            }
        }
        (RepKind::Kim, _) => return Err(CliError::Usage("kim builds type A representatives".into())),
        (_, TypeArg::A) => return Err(CliError::Usage("type A takes `uc` or `kim`".into())),
        (_, _) => {
            let ct = parse_signed(class, n)?;
            if ty == TypeArg::D && !ct.in_type_d() {
                return Err(CliError::Usage(format!("{ct} is not a class of D{n}")));
            }
            match kind {
                RepKind::Uc => (u_c(&ct), None, ct.to_string()),
                RepKind::Uct => (u_c_t(&ct), None, ct.to_string()),
                _ => {
                    let msp = MaximalSplitPartition::from_cycle_type(&ct);
                    let cert = certificate_bd(&msp, ty.classical())?;
                    (w_lambda_rho(&msp), Some(cert), format!("{ct} as {msp}"))
                }
            }
        }
    };
    let doc = RepDoc {
        group: GroupInfo {
            ty: format!("{ty:?}"),
            rank,
        },
        kind: format!("{kind:?}").to_lowercase(),
        class: label,
        element: w.to_string(),
        window: w.to_window_string(),
        lengths: lengths_of(ty, &w),
        certificate: cert.as_ref().map(certificate_doc),
    };
    let code = i32::from(doc.certificate.as_ref().is_some_and(|c| !c.valid));
    let mut cells = vec![
        ("kind", Some(doc.kind.clone())),
        ("class", Some(doc.class.clone())),
        ("element", Some(doc.element.clone())),
        ("window", Some(doc.window.clone())),
    ];
    for t in ["A", "B", "D"] {
        let name: &'static str = match t {
            "A" => "len_A",
            "B" => "len_B",
            _ => "len_D",
        };
        cells.push((name, doc.lengths.get(t).map(|l| l.to_string())));
    }
    let c = doc.certificate.as_ref();
    cells.push(("sigma", c.map(|c| c.sigma.clone())));
    cells.push(("tau", c.map(|c| c.tau.clone())));
    cells.push(("certificate_valid", c.map(|c| c.valid.to_string())));
    let stdout = match ctx.format {
        Format::Json => to_json(&doc),
        Format::Csv => Table::new(vec![cells]).csv(),
        Format::Human => {
            let mut s = String::new();
            for (k, v) in cells.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))) {
                s += &format!("{k:<18} {v}\n");
            }
            if ctx.explain {
                if let Some(cert) = &cert {
                    let set = |x: &SignedPermutation| inversion_set(x, cert.flavor).map(|s| s.to_string()).unwrap_or_default();
                    s += &format!("N(sigma) = {{{}}}\nN(tau)   = {{{}}}\n", set(&cert.sigma), set(&cert.tau));
                }
            }
            s
        }
    };
    Ok(Report { stdout, code })
}

pub fn excess(ctx: &Ctx, ty: TypeArg, rank: usize, text: &str, flavor: Option<TypeArg>) -> CliResult<Report> {
    let n = degree(ty, rank)?;
    let w = SignedPermutation::parse(text, Some(n))?;
    let flavor = flavor.unwrap_or(ty);
    for t in [ty, flavor] {
        match t {
            TypeArg::A if !w.is_unsigned() => {
                return Err(CliError::Usage(format!("{w} has sign changes, so it is not in S_{n}")));
            }
            TypeArg::D if !w.in_type_d() => {
                return Err(CliError::Usage(format!("{w} has an odd number of sign changes, so it is not in D{n}")));
            }
            _ => {}
        }
    }
    let r = excess::excess(&w, flavor.classical(), &ctx.budget)?;
    let doc = ExcessDoc {
        group: GroupInfo {
            ty: format!("{ty:?}"),
            rank,
        },
        flavor: format!("{flavor:?}"),
        element: w.to_string(),
        window: w.to_window_string(),
        excess: r.excess,
        length: r.length,
        sigma: r.sigma.to_string(),
        tau: r.tau.to_string(),
        sigma_length: r.sigma_length,
        tau_length: r.tau_length,
        examined: r.examined,
    };
    let cells = vec![
        ("element", Some(doc.element.clone())),
        ("window", Some(doc.window.clone())),
        ("flavor", Some(doc.flavor.clone())),
        ("excess", Some(doc.excess.to_string())),
        ("length", Some(doc.length.to_string())),
        ("sigma", Some(doc.sigma.clone())),
        ("tau", Some(doc.tau.clone())),
        ("sigma_length", Some(doc.sigma_length.to_string())),
        ("tau_length", Some(doc.tau_length.to_string())),
        ("examined", Some(doc.examined.to_string())),
    ];
    let stdout = match ctx.format {
        Format::Json => to_json(&doc),
        Format::Csv => Table::new(vec![cells]).csv(),
        Format::Human => {
            let mut s = String::new();
            for (k, v) in cells.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))) {
                s += &format!("{k:<13} {v}\n");
            }
            if ctx.explain {
                let fl = flavor.classical();
                let set = |x: &SignedPermutation| inversion_set(x, fl).map(|s| s.to_string()).unwrap_or_default();
                s += &format!(
                    "N(w)     = {{{}}}\nN(sigma) = {{{}}}\nN(tau)   = {{{}}}\n",
                    set(&w),
                    set(&r.sigma),
                    set(&r.tau)
                );
                s += &format!(
                    "l(sigma) + l(tau) - l(w) = {} + {} - {} = {}\n",
                    r.sigma_length, r.tau_length, r.length, r.excess
                );
            }
            s
        }
    };
    Ok(Report { stdout, code: 0 })
}
