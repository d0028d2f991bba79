//! Reference tables: permutations of P^1(F_q) with 1- and j-cycles for q = 125, 841.
#![allow(dead_code)]

pub struct Row {
    pub d: u64,
    pub md: u64,
    pub n: &'static [u64],
    pub fixed: u64,
    pub cycles: u64,
}

pub struct Section {
    pub j: u64,
    /// Primes jk + 1 dividing q - chi; `None` where the column reads N/A (j = 2).
    pub witness: Option<&'static [u64]>,
    /// `None` where the column reads N/A (j = 2, 4).
    pub j_squared: Option<bool>,
    pub rows: &'static [Row],
}

pub struct Table {
    pub name: &'static str,
    pub q: u64,
    pub chi: i64,
    pub sections: &'static [Section],
    /// The closing "prime >= ..." row.
    pub no_prime_from: u64,
}

const fn row(d: u64, md: u64, n: &'static [u64], fixed: u64, cycles: u64) -> Row {
    Row {
        d,
        md,
        n,
        fixed,
        cycles,
    }
}

pub const TABLE_1: Table = Table {
    name: "q = 125, chi = +1",
    q: 125,
    chi: 1,
    sections: &[
        Section {
            j: 2,
            witness: None,
            j_squared: None,
            rows: &[
                row(2, 1, &[123], 4, 61),
                row(4, 1, &[61], 6, 60),
                row(62, 1, &[63], 64, 31),
            ],
        },
        Section {
            j: 3,
            witness: Some(&[31]),
            j_squared: Some(false),
            rows: &[row(4, 2, &[5, 25], 6, 40)],
        },
        Section {
            j: 4,
            witness: Some(&[]),
            j_squared: None,
            rows: &[],
        },
        Section {
            j: 5,
            witness: Some(&[31]),
            j_squared: Some(false),
            rows: &[row(4, 4, &[33, 97, 101, 109], 6, 24)],
        },
    ],
    no_prime_from: 7,
};

pub const TABLE_2: Table = Table {
    name: "q = 125, chi = -1",
    q: 125,
    chi: -1,
    sections: &[
        Section {
            j: 2,
            witness: None,
            j_squared: None,
            rows: &[
                row(2, 1, &[125], 2, 62),
                row(14, 1, &[71], 14, 56),
                row(18, 1, &[55], 18, 54),
            ],
        },
        Section {
            j: 3,
            witness: Some(&[7]),
            j_squared: Some(true),
            rows: &[
                row(6, 4, &[25, 67, 79, 121], 6, 40),
                row(18, 2, &[37, 109], 18, 36),
                row(42, 2, &[43, 85], 42, 28),
            ],
        },
        Section {
            j: 4,
            witness: Some(&[]),
            j_squared: None,
            rows: &[],
        },
    ],
    no_prime_from: 5,
};

pub const TABLE_3: Table = Table {
    name: "q = 841, chi = +1",
    q: 841,
    chi: 1,
    sections: &[
        Section {
            j: 2,
            witness: None,
            j_squared: None,
            rows: &[
                row(2, 2, &[419, 839], 4, 419),
                row(4, 1, &[629], 6, 418),
                row(6, 2, &[139, 559], 8, 417),
                row(8, 1, &[209], 10, 416),
                row(10, 2, &[251, 671], 12, 415),
                row(12, 1, &[349], 14, 414),
                row(14, 2, &[239, 659], 16, 413),
                row(20, 1, &[461], 22, 410),
                row(24, 1, &[769], 26, 408),
                row(28, 1, &[29], 30, 406),
                row(30, 2, &[391, 811], 32, 405),
                row(40, 1, &[41], 42, 400),
                row(42, 2, &[379, 799], 44, 399),
                row(56, 1, &[449], 58, 392),
                row(60, 1, &[181], 62, 390),
                row(70, 2, &[71, 491], 72, 385),
                row(84, 1, &[589], 86, 378),
                row(120, 1, &[601], 122, 360),
                row(140, 1, &[701], 142, 350),
                row(168, 1, &[169], 170, 336),
                row(210, 2, &[211, 631], 212, 315),
                row(280, 1, &[281], 282, 280),
                row(420, 1, &[421], 422, 210),
            ],
        },
        Section {
            j: 3,
            witness: Some(&[7]),
            j_squared: Some(false),
            rows: &[row(120, 2, &[121, 361], 122, 240)],
        },
        Section {
            j: 4,
            witness: Some(&[5]),
            j_squared: None,
            rows: &[row(168, 2, &[337, 673], 170, 168)],
        },
    ],
    no_prime_from: 5,
};

pub const TABLE_4: Table = Table {
    name: "q = 841, chi = -1",
    q: 841,
    chi: -1,
    sections: &[
        Section {
            j: 2,
            witness: None,
            j_squared: None,
            rows: &[row(2, 1, &[841], 2, 420)],
        },
        Section {
            j: 3,
            witness: Some(&[421]),
            j_squared: Some(false),
            rows: &[row(2, 2, &[441, 821], 2, 280)],
        },
        Section {
            j: 4,
            witness: Some(&[421]),
            j_squared: None,
            rows: &[row(2, 2, &[29, 813], 2, 210)],
        },
        Section {
            j: 5,
            witness: Some(&[421]),
            j_squared: Some(false),
            rows: &[row(2, 4, &[279, 377, 673, 775], 2, 168)],
        },
        Section {
            j: 7,
            witness: Some(&[421]),
            j_squared: Some(false),
            rows: &[row(2, 6, &[33, 75, 247, 385, 573, 791], 2, 120)],
        },
    ],
    no_prime_from: 11,
};

pub const TABLES: [&Table; 4] = [&TABLE_1, &TABLE_2, &TABLE_3, &TABLE_4];

/// Differences between a `table --format json` document (all lengths) and a published table.
pub fn compare(t: &Table, doc: &serde_json::Value) -> Vec<String> {
    let mut errs = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            errs.push(what);
        }
    };
    check(
        doc["q"] == t.q && doc["chi"] == t.chi,
        format!("header q/chi: {} {}", doc["q"], doc["chi"]),
    );
    check(
        doc["no_prime_from"] == t.no_prime_from,
        format!(
            "closing prime row: {} vs {}",
            doc["no_prime_from"], t.no_prime_from
        ),
    );
    let empty = Vec::new();
    let sections = doc["sections"].as_array().unwrap_or(&empty);
    let js: Vec<u64> = sections.iter().filter_map(|s| s["j"].as_u64()).collect();
    let want_js: Vec<u64> = t.sections.iter().map(|s| s.j).collect();
    check(
        js == want_js,
        format!("section lengths {js:?} vs {want_js:?}"),
    );
    for (s, got) in t.sections.iter().zip(sections) {
        let j = s.j;
        check(
            got["exists"] == !s.rows.is_empty(),
            format!("j={j}: exists {}", got["exists"]),
        );
        let witness: Option<Vec<u64>> = got.get("witness_primes").map(|w| {
            w.as_array()
                .map(|a| a.iter().filter_map(|x| x.as_u64()).collect())
                .unwrap_or_default()
        });
        check(
            witness.as_deref() == s.witness,
            format!("j={j}: witness column {witness:?} vs {:?}", s.witness),
        );
        let square = got.get("j_squared_divides").and_then(|b| b.as_bool());
        check(
            square == s.j_squared,
            format!("j={j}: j^2 column {square:?} vs {:?}", s.j_squared),
        );
        let total: u64 = s.rows.iter().map(|r| r.md).sum();
        check(
            got["total_M"] == total,
            format!("j={j}: M {} vs {total}", got["total_M"]),
        );
        let rows = got["rows"].as_array().unwrap_or(&empty);
        check(
            rows.len() == s.rows.len(),
            format!("j={j}: {} rows vs {}", rows.len(), s.rows.len()),
        );
        for (r, g) in s.rows.iter().zip(rows) {
            let n: Vec<u64> = g["n"]
                .as_array()
                .map(|a| a.iter().filter_map(|x| x.as_u64()).collect())
                .unwrap_or_default();
            let same = g["d"] == r.d
                && g["Md"] == r.md
                && n == r.n
                && g["fixed_points"] == r.fixed
                && g["j_cycles"] == r.cycles;
            check(same, format!("j={j} d={}: got {g}", r.d));
        }
    }
    errs
}
