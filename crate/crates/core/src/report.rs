use std::io::{self, Write};
use std::str::FromStr;

use crate::certify::{StabilityCertificate, Status, Verdict};
use crate::error::Error;
use crate::surface::Surface;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "surface",
    "polarization",
    "D",
    "C1",
    "C2",
    "length",
    "a",
    "b",
    "c",
    "d",
    "e",
    "verdict",
];

pub fn write_jsonl<W: Write>(mut out: W, certs: &[StabilityCertificate]) -> io::Result<()> {
    for cert in certs {
        serde_json::to_writer(&mut out, cert)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn write_csv<W: Write>(out: W, certs: &[StabilityCertificate]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for cert in certs {
        let mut row = vec![
            cert.surface.to_string(),
            cert.polarization.to_string(),
            cert.d.to_string(),
            cert.c1.to_string(),
            cert.c2.to_string(),
            cert.length.to_string(),
        ];
        row.extend(cert.conditions.iter().map(|(_, c)| c.status.to_string()));
        row.push(cert.verdict.to_string());
        w.write_record(&row)?;
    }
    w.flush()
}

pub fn write_table<W: Write>(
    mut out: W,
    s: &Surface,
    certs: &[StabilityCertificate],
) -> io::Result<()> {
    let rows: Vec<[String; 6]> = certs
        .iter()
        .map(|c| {
            let statuses: String = c
                .conditions
                .iter()
                .map(|(_, cond)| match cond.status {
                    Status::Verified => 'V',
                    Status::Failed => 'F',
                    Status::Unknown => '?',
                })
                .collect();
            [
                s.format_class(&c.d),
                s.format_class(&c.c1),
                s.format_class(&c.c2),
                c.length.to_string(),
                statuses,
                c.verdict.to_string(),
            ]
        })
        .collect();
    let header = ["D", "C1", "C2", "l(Z)", "abcde", "verdict"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&header).trim_end())?;
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells).trim_end())?;
    }
    out.flush()
}

pub fn write_certificates<W: Write>(
    out: W,
    format: Format,
    s: &Surface,
    certs: &[StabilityCertificate],
) -> io::Result<()> {
    match format {
        Format::Jsonl => write_jsonl(out, certs),
        Format::Csv => write_csv(out, certs),
        Format::Table => write_table(out, s, certs),
    }
}

/// `VERDICT count` lines, one per verdict.
pub fn verdict_summary(certs: &[StabilityCertificate]) -> String {
    Verdict::ALL
        .iter()
        .map(|v| {
            let n = certs.iter().filter(|c| c.verdict == *v).count();
            format!("{v} {n}\n")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_construction;
    use crate::picard::DivisorClass;
    use crate::sheaf::PointScheme;

    fn sample() -> (Surface, Vec<StabilityCertificate>) {
        let s = Surface::blowup_p2();
        let z = PointScheme::generic(DivisorClass::new(vec![1, 0]), DivisorClass::new(vec![1, 0]));
        let cert = certify_construction(&s, &DivisorClass::new(vec![-1, 4]), &z).unwrap();
        (s, vec![cert])
    }

    #[test]
    fn jsonl_round_trips_with_exact_fields() {
        let (_, certs) = sample();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &certs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1);
        let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let mut keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(
            keys,
            [
                "C1",
                "C2",
                "D",
                "assumptions",
                "ch_E",
                "ch_F",
                "conditions",
                "length",
                "polarization",
                "region",
                "surface",
                "verdict"
            ]
        );
        assert_eq!(value["surface"], "blp2");
        assert_eq!(value["D"], serde_json::json!([-1, 4]));
        assert_eq!(value["verdict"], "STRICTLY_AZ_STABLE");
        assert_eq!(value["ch_E"]["ch2"], "-31");
        let back: StabilityCertificate = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(back, certs[0]);
    }

    #[test]
    fn csv_has_stable_header() {
        let (_, certs) = sample();
        let mut buf = Vec::new();
        write_csv(&mut buf, &certs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "surface,polarization,D,C1,C2,length,a,b,c,d,e,verdict"
        );
        assert_eq!(
            lines.next().unwrap(),
            "blp2,\"(3,-1)\",\"(-1,4)\",\"(1,0)\",\"(1,0)\",1,VERIFIED,VERIFIED,VERIFIED,VERIFIED,VERIFIED,STRICTLY_AZ_STABLE"
        );
    }

    #[test]
    fn table_and_summary() {
        let (s, certs) = sample();
        let mut buf = Vec::new();
        write_table(&mut buf, &s, &certs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("-H+4E  H   H   1     VVVVV"));
        assert_eq!(
            verdict_summary(&certs),
            "STRICTLY_AZ_STABLE 1\nINCONCLUSIVE 0\nNOT_CONSTRUCTIBLE 0\n"
        );
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
