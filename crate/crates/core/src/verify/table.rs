//! Sequence tables and single-value evaluation for the CLI.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::euler_changhee::{changhee_numbers, changhee_order_k_sequence, euler_order_k_sequence};
use crate::multiparam::{
    generalized_changhee, mp_first_poly, mp_second_lah_path, mp_second_poly, poly_cauchy_first,
    poly_cauchy_second,
};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::triangles::{comtet_first, lah_row, stirling_first_row, stirling_second_row, ParameterSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    StirlingFirst,
    StirlingSecond,
    Lah,
    ComtetFirst,
    Euler,
    Changhee,
    ChangheeOrderK,
    MpFirst,
    MpSecond,
    PolyCauchyFirst,
    PolyCauchySecond,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::StirlingFirst,
        Family::StirlingSecond,
        Family::Lah,
        Family::ComtetFirst,
        Family::Euler,
        Family::Changhee,
        Family::ChangheeOrderK,
        Family::MpFirst,
        Family::MpSecond,
        Family::PolyCauchyFirst,
        Family::PolyCauchySecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::StirlingFirst => "stirling_first",
            Family::StirlingSecond => "stirling_second",
            Family::Lah => "lah",
            Family::ComtetFirst => "comtet_first",
            Family::Euler => "euler",
            Family::Changhee => "changhee",
            Family::ChangheeOrderK => "changhee_order_k",
            Family::MpFirst => "mp_first",
            Family::MpSecond => "mp_second",
            Family::PolyCauchyFirst => "poly_cauchy_first",
            Family::PolyCauchySecond => "poly_cauchy_second",
        }
    }

    pub fn needs_spec(self) -> bool {
        matches!(
            self,
            Family::ComtetFirst
                | Family::MpFirst
                | Family::MpSecond
                | Family::PolyCauchyFirst
                | Family::PolyCauchySecond
        )
    }

    fn uses_k(self) -> bool {
        matches!(
            self,
            Family::Euler
                | Family::ChangheeOrderK
                | Family::MpFirst
                | Family::MpSecond
                | Family::PolyCauchyFirst
                | Family::PolyCauchySecond
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::UnknownFamily {
            name: s.to_string(),
            valid: Family::ALL.map(Family::name).join(", "),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct TableRequest {
    pub family: Family,
    /// Defaults to the spec length for spec families and to 10 otherwise.
    pub n_max: Option<usize>,
    pub k: Option<u32>,
    pub spec: Option<ParameterSpec>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub indices: Vec<usize>,
    pub value: Rational,
}

pub const DEFAULT_N: usize = 10;

/// Rows in lexicographic index order, with the CSV index column names.
pub fn table_rows(req: &TableRequest) -> Result<(Vec<&'static str>, Vec<TableRow>)> {
    let family = req.family;
    let spec = match (&req.spec, family.needs_spec()) {
        (Some(s), _) => Some(s),
        (None, true) => return Err(Error::MissingSpec(family.name().to_string())),
        (None, false) => None,
    };
    let k = req.k.unwrap_or(1);
    if k == 0 && family.uses_k() {
        return Err(Error::ZeroOrder);
    }
    let n_max = match spec {
        Some(s) if family.needs_spec() => req.n_max.unwrap_or(s.len()).min(s.len()),
        _ => req.n_max.unwrap_or(DEFAULT_N),
    };
    let zero = Rational::zero();
    let one = Rational::one();
    let row = |indices: Vec<usize>, value: Rational| TableRow { indices, value };

    let rows: Vec<TableRow> = match family {
        Family::StirlingFirst | Family::StirlingSecond | Family::Lah => {
            let f = match family {
                Family::StirlingFirst => stirling_first_row,
                Family::StirlingSecond => stirling_second_row,
                _ => lah_row,
            };
            (0..=n_max)
                .flat_map(|n| f(n).into_iter().enumerate().map(move |(j, v)| row(vec![n, j], v)))
                .collect()
        }
        Family::ComtetFirst => {
            let spec = spec.expect("checked above");
            (0..=n_max)
                .flat_map(|n| {
                    comtet_first(&spec.prefix(n))
                        .into_iter()
                        .enumerate()
                        .map(move |(m, v)| row(vec![n, m], v))
                })
                .collect()
        }
        Family::Euler => euler_order_k_sequence(n_max, k, &zero)
            .into_iter()
            .enumerate()
            .map(|(n, v)| row(vec![n, k as usize], v))
            .collect(),
        Family::Changhee => changhee_numbers(n_max)
            .into_iter()
            .enumerate()
            .map(|(n, v)| row(vec![n], v))
            .collect(),
        Family::ChangheeOrderK => changhee_order_k_sequence(n_max, k, &zero)
            .into_iter()
            .enumerate()
            .map(|(n, v)| row(vec![n, k as usize], v))
            .collect(),
        Family::MpFirst | Family::MpSecond | Family::PolyCauchyFirst | Family::PolyCauchySecond => {
            let spec = spec.expect("checked above");
            (0..=n_max)
                .map(|n| Ok(row(vec![n, k as usize], eval_family(family, &spec.prefix(n), k, &one)?)))
                .collect::<Result<_>>()?
        }
    };
    let header = match rows.first().map(|r| r.indices.len()) {
        Some(1) => vec!["n"],
        _ if matches!(family, Family::ComtetFirst) => vec!["n", "m"],
        _ => vec!["n", "k"],
    };
    Ok((header, rows))
}

pub fn render_csv(header: &[&str], rows: &[TableRow]) -> String {
    let mut out = header.join(",");
    out.push_str(",value\n");
    for r in rows {
        for i in &r.indices {
            out.push_str(&i.to_string());
            out.push(',');
        }
        out.push_str(&rational::render(&r.value));
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    let values: Vec<_> = rows
        .iter()
        .map(|r| json!({"indices": r.indices, "value": rational::render(&r.value)}))
        .collect();
    let mut out = serde_json::to_string_pretty(&values).expect("rows serialize");
    out.push('\n');
    out
}

pub fn render_table(req: &TableRequest) -> Result<String> {
    let (header, rows) = table_rows(req)?;
    Ok(match req.format {
        Format::Csv => render_csv(&header, &rows),
        Format::Json => render_json(&rows),
    })
}

/// Renders the table and writes it to `out`, or returns it for printing.
pub fn emit_table(req: &TableRequest, out: Option<&Path>) -> Result<Option<String>> {
    let text = render_table(req)?;
    match out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

pub fn load_params(path: &Path) -> Result<ParameterSpec> {
    let text = fs::read_to_string(path)?;
    ParameterSpec::from_json(&text)
}

/// Single value of a spec family at order `k` and point `x`.
///
/// `x` is the evaluation point of the Changhee polynomials and the common
/// upper bound of every box integral for the poly-Cauchy families;
/// `comtet_first` evaluates `prod_i (x - alpha_i)^{r_i}` through its
/// coefficients.
pub fn eval_family(family: Family, spec: &ParameterSpec, k: u32, x: &Rational) -> Result<Rational> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let bounds = || vec![x.clone(); k as usize];
    Ok(match family {
        Family::MpFirst => mp_first_poly(spec, k, x),
        Family::MpSecond => mp_second_poly(spec, k, x),
        Family::PolyCauchyFirst => poly_cauchy_first(spec, k, &bounds())?,
        Family::PolyCauchySecond => poly_cauchy_second(spec, k, &bounds())?,
        Family::ComtetFirst => Polynomial::new(comtet_first(spec)).eval(x),
        other => {
            return Err(Error::Params(format!(
                "family {other} takes no parameter file; use `table` instead"
            )))
        }
    })
}

/// Extra evaluation routes reachable from `eval` by name.
pub fn eval_named(name: &str, spec: &ParameterSpec, k: u32, x: &Rational) -> Result<Rational> {
    match name {
        "mp_second_lah" => {
            if k == 0 {
                return Err(Error::ZeroOrder);
            }
            Ok(mp_second_lah_path(spec, k).lah)
        }
        "generalized_changhee" => generalized_changhee(spec),
        other => eval_family(other.parse()?, spec, k, x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn req(family: Family, n: usize) -> TableRequest {
        TableRequest { family, n_max: Some(n), k: None, spec: None, format: Format::Csv }
    }

    fn values(req: &TableRequest) -> Vec<String> {
        table_rows(req).unwrap().1.iter().map(|r| rational::render(&r.value)).collect()
    }

    #[test]
    fn changhee_rows() {
        assert_eq!(values(&req(Family::Changhee, 3)), ["1", "-1/2", "1/2", "-3/4"]);
        let csv = render_table(&req(Family::Changhee, 1)).unwrap();
        assert_eq!(csv, "n,value\n0,1\n1,-1/2\n");
    }

    #[test]
    fn triangle_rows() {
        let s = values(&req(Family::StirlingFirst, 3));
        assert_eq!(&s[6..], ["0", "2", "-3", "1"]);
        let l = values(&req(Family::Lah, 3));
        assert_eq!(&l[6..], ["0", "6", "6", "1"]);
        let csv = render_table(&req(Family::Lah, 1)).unwrap();
        assert_eq!(csv, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n");
    }

    #[test]
    fn csv_and_json_agree() {
        let spec = ParameterSpec::parse(&["0", "1/2", "-1"], &[2, 1, 1]).unwrap();
        for family in Family::ALL {
            let mut r = req(family, 4);
            r.spec = Some(spec.clone());
            r.k = Some(2);
            let csv = render_table(&r).unwrap();
            r.format = Format::Json;
            let json: serde_json::Value = serde_json::from_str(&render_table(&r).unwrap()).unwrap();
            let from_csv: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
            let from_json: Vec<&str> = json.as_array().unwrap().iter().map(|v| v["value"].as_str().unwrap()).collect();
            assert_eq!(from_csv, from_json, "{family}");
        }
    }

    #[test]
    fn spec_families_need_a_spec() {
        for family in Family::ALL.into_iter().filter(|f| f.needs_spec()) {
            assert!(matches!(table_rows(&req(family, 2)), Err(Error::MissingSpec(_))));
        }
    }

    #[test]
    fn spec_rows_follow_prefixes() {
        let mut r = req(Family::MpFirst, 9);
        r.spec = Some(ParameterSpec::parse(&["0"], &[1]).unwrap());
        assert_eq!(values(&r), ["1", "-1/2"]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        let err = "bogus".parse::<Family>().unwrap_err().to_string();
        assert!(err.contains("poly_cauchy_second"));
    }

    #[test]
    fn eval_examples() {
        let s = ParameterSpec::parse(&["0"], &[1]).unwrap();
        assert_eq!(eval_family(Family::MpFirst, &s, 1, &ratio(1, 2)).unwrap(), ratio(-1, 4));
        assert_eq!(eval_family(Family::MpSecond, &s, 1, &int(2)).unwrap(), int(1));
        let two = ParameterSpec::falling(2);
        assert_eq!(eval_family(Family::PolyCauchySecond, &two, 1, &int(1)).unwrap(), ratio(5, 6));
        assert_eq!(eval_named("mp_second_lah", &s, 1, &int(1)).unwrap(), ratio(1, 2));
        assert!(eval_family(Family::Changhee, &s, 1, &int(1)).is_err());
    }
}
