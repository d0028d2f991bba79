//! Text and csv renderings; json goes straight through serde.

use std::fmt::Write as _;

use crate::document::{
    ConstructDoc, CyclesDoc, FieldDoc, FullTableDoc, Section, TableDoc, VerifyDoc,
};

fn list(ns: &[u64]) -> String {
    ns.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

fn structure(s: &[(u64, u64)]) -> String {
    let parts: Vec<String> = s.iter().map(|(l, c)| format!("{l}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by ` | `, with a rule under the header.
fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    out.push_str(
        &widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .join("-+-"),
    );
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn qminus_label(chi: i64) -> &'static str {
    if chi == 1 {
        "q-1"
    } else {
        "q+1"
    }
}

fn section_rows(s: &Section) -> Vec<Vec<String>> {
    let (witness, square) = match (&s.witness_primes, s.j_squared_divides) {
        (None, _) => ("N/A".to_string(), "N/A".to_string()),
        (Some(ps), sq) => {
            let w = if ps.is_empty() {
                "no".to_string()
            } else {
                format!("yes, {}", list(ps))
            };
            (w, sq.map_or("N/A".to_string(), |b| yes_no(b).to_string()))
        }
    };
    if s.rows.is_empty() {
        return vec![vec![s.j.to_string(), witness, square]];
    }
    s.rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let lead = if i == 0 {
                vec![s.j.to_string(), witness.clone(), square.clone()]
            } else {
                vec![String::new(); 3]
            };
            let mut row = lead;
            row.extend([
                r.d.to_string(),
                r.md.to_string(),
                list(&r.n),
                r.fixed_points.to_string(),
                r.j_cycles.to_string(),
            ]);
            row
        })
        .collect()
}

fn table_header(chi: i64) -> Vec<String> {
    let qm = qminus_label(chi);
    [
        "j".to_string(),
        format!("prime jk+1 dividing {qm}?"),
        format!("j^2 divides {qm}?"),
        "d".to_string(),
        "M_d".to_string(),
        "n".to_string(),
        "# fixed points".to_string(),
        "# j-cycles".to_string(),
    ]
    .to_vec()
}

pub fn table_text(doc: &TableDoc) -> String {
    let section = Section {
        j: doc.j,
        exists: doc.exists,
        total_m: doc.total_m,
        witness_primes: doc.witness_primes.clone(),
        j_squared_divides: doc.j_squared_divides,
        rows: doc.rows.clone(),
    };
    let mut out = format!(
        "P^1(F_{}), chi(a) = {:+}, field modulus {}\nexists: {}, M = {}\n\n",
        doc.q,
        doc.chi,
        doc.field_modulus,
        yes_no(doc.exists),
        doc.total_m
    );
    out.push_str(&grid(&table_header(doc.chi), &section_rows(&section)));
    out
}

pub fn full_table_text(doc: &FullTableDoc) -> String {
    let mut out = format!(
        "P^1(F_{}), chi(a) = {:+}, {} = {} = {}, field modulus {}\n",
        doc.q,
        doc.chi,
        qminus_label(doc.chi),
        doc.qminus,
        doc.qminus_factorization,
        doc.field_modulus
    );
    for s in &doc.sections {
        let _ = write!(out, "j = {}: M = {}", s.j, s.total_m);
        out.push('\n');
    }
    out.push('\n');
    let mut rows: Vec<Vec<String>> = doc.sections.iter().flat_map(section_rows).collect();
    rows.push(vec![
        format!("prime >= {}", doc.no_prime_from),
        "no".into(),
        "no".into(),
    ]);
    out.push_str(&grid(&table_header(doc.chi), &rows));
    out
}

pub fn construct_text(doc: &ConstructDoc) -> String {
    format!(
        "P^1(F_{}), chi(a) = {:+}, j = {}, d = {}, field modulus {}\nM_d = {}, fixed points = {}, {}-cycles = {}\nn: {}\n",
        doc.q,
        doc.chi,
        doc.j,
        doc.d,
        doc.field_modulus,
        doc.md,
        doc.fixed_points,
        doc.j,
        doc.j_cycles,
        list(&doc.n)
    )
}

fn cycle_lines(cycles: &[Vec<String>]) -> String {
    cycles
        .iter()
        .map(|c| format!("({})\n", c.join(" ")))
        .collect()
}

pub fn verify_text(doc: &VerifyDoc) -> String {
    let mut out = format!(
        "R_{{{},a}} on P^1(F_{}), field modulus {}\na = {}, chi(a) = {:+}, q - chi = {}\nempirical:   {}\ntheoretical: {}\nfixed points: {} walked, {} by gcd(n-1, q-chi) + chi + 1\n",
        doc.n,
        doc.q,
        doc.field_modulus,
        doc.a,
        doc.chi,
        doc.modulus,
        structure(&doc.empirical.0),
        structure(&doc.theoretical.0),
        doc.fixed_points,
        doc.fixed_point_formula
    );
    if let Some(cycles) = &doc.cycles {
        out.push_str(&cycle_lines(cycles));
    }
    out.push_str(if doc.pass { "PASS\n" } else { "FAIL\n" });
    out
}

pub fn field_text(doc: &FieldDoc) -> String {
    format!(
        "F_{} = F_{}[x]/({})\ncoefficients (ascending): {}\n",
        doc.q,
        doc.p,
        doc.field_modulus,
        list(&doc.modulus).replace(' ', "")
    )
}

pub fn cycles_text(doc: &CyclesDoc) -> String {
    let mut out = format!(
        "R_{{{},a}} on P^1(F_{}), a = {}, chi(a) = {:+}, field modulus {}\n",
        doc.n, doc.q, doc.a, doc.chi, doc.field_modulus
    );
    if let (Some(s), Some(cycles)) = (&doc.structure, &doc.cycles) {
        let _ = writeln!(out, "structure: {}", structure(&s.0));
        out.push_str(&cycle_lines(cycles));
    }
    if let Some(map) = &doc.map {
        out.push_str("not a permutation; point map:\n");
        for (x, y) in map {
            let _ = writeln!(out, "{x} -> {y}");
        }
    }
    out
}

type Csv = csv::Writer<Vec<u8>>;

fn finish(w: Csv) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is utf-8")
}

fn joined(ns: &[u64]) -> String {
    ns.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

const TABLE_COLUMNS: [&str; 10] = [
    "q",
    "chi",
    "j",
    "exists",
    "total_M",
    "d",
    "Md",
    "n",
    "fixed_points",
    "j_cycles",
];

fn section_csv(w: &mut Csv, q: u64, chi: i64, s: &Section) -> csv::Result<()> {
    let lead = [
        q.to_string(),
        chi.to_string(),
        s.j.to_string(),
        s.exists.to_string(),
        s.total_m.to_string(),
    ];
    if s.rows.is_empty() {
        let mut rec = lead.to_vec();
        rec.extend(std::iter::repeat_n(String::new(), 5));
        return w.write_record(&rec);
    }
    for r in &s.rows {
        let mut rec = lead.to_vec();
        rec.extend([
            r.d.to_string(),
            r.md.to_string(),
            joined(&r.n),
            r.fixed_points.to_string(),
            r.j_cycles.to_string(),
        ]);
        w.write_record(&rec)?;
    }
    Ok(())
}

pub fn table_csv(doc: &TableDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE_COLUMNS)?;
    let s = Section {
        j: doc.j,
        exists: doc.exists,
        total_m: doc.total_m,
        witness_primes: doc.witness_primes.clone(),
        j_squared_divides: doc.j_squared_divides,
        rows: doc.rows.clone(),
    };
    section_csv(&mut w, doc.q, doc.chi, &s)?;
    Ok(finish(w))
}

pub fn full_table_csv(doc: &FullTableDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE_COLUMNS)?;
    for s in &doc.sections {
        section_csv(&mut w, doc.q, doc.chi, s)?;
    }
    Ok(finish(w))
}

pub fn construct_csv(doc: &ConstructDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "chi", "j", "d", "Md", "n", "fixed_points", "j_cycles"])?;
    for n in &doc.n {
        w.write_record([
            doc.q.to_string(),
            doc.chi.to_string(),
            doc.j.to_string(),
            doc.d.to_string(),
            doc.md.to_string(),
            n.to_string(),
            doc.fixed_points.to_string(),
            doc.j_cycles.to_string(),
        ])?;
    }
    Ok(finish(w))
}

pub fn verify_csv(doc: &VerifyDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["source", "length", "count"])?;
    for (source, s) in [
        ("empirical", &doc.empirical),
        ("theoretical", &doc.theoretical),
    ] {
        for (l, c) in &s.0 {
            w.write_record([source.to_string(), l.to_string(), c.to_string()])?;
        }
    }
    Ok(finish(w))
}

pub fn field_csv(doc: &FieldDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "p", "k", "modulus"])?;
    w.write_record([
        doc.q.to_string(),
        doc.p.to_string(),
        doc.k.to_string(),
        joined(&doc.modulus),
    ])?;
    Ok(finish(w))
}

pub fn cycles_csv(doc: &CyclesDoc) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(cycles) = &doc.cycles {
        w.write_record(["cycle", "length", "points"])?;
        for (i, c) in cycles.iter().enumerate() {
            w.write_record([i.to_string(), c.len().to_string(), c.join(" ")])?;
        }
    } else if let Some(map) = &doc.map {
        w.write_record(["x", "image"])?;
        for (x, y) in map {
            w.write_record([x, y])?;
        }
    }
    Ok(finish(w))
}
