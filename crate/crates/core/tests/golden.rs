//! The 48-dimensional double cross product against committed golden files:
//! a symbolic table transcribed by hand and a numeric expansion of it.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use hopfq::catalog;
use hopfq::format::Document;
use hopfq::loops::{builtin_group, chein_double};
use hopfq::table::{recover_loop, second_factor_labels, symbolic_product_entry, symbolic_product_table};
use hopfq::{Field, HopfMaps};

const N: usize = 12;
const H: [&str; 4] = ["1", "x", "y", "w"];

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn dcp() -> HopfMaps {
    match catalog::build("paper_dcp", Field::Rational).unwrap().document {
        Document::HopfQuasigroup(x) => x.0,
        other => panic!("unexpected {}", other.kind()),
    }
}

/// S3 as permutations of {0,1,2}, in the library's element order.
const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];

fn s3_mul(a: usize, b: usize) -> usize {
    let (p, q) = (PERMS[a], PERMS[b]);
    PERMS.iter().position(|r| *r == [p[q[0]], p[q[1]], p[q[2]]]).unwrap()
}

fn s3_inv(a: usize) -> usize {
    (0..6).find(|&b| s3_mul(a, b) == 0).unwrap()
}

/// `(g,0)(h,0) = (gh,0)`, `(g,0)(h,1) = (hg,1)`, `(g,1)(h,0) = (gh⁻¹,1)`,
/// `(g,1)(h,1) = (h⁻¹g,0)`.
fn loop_mul(a: usize, b: usize) -> usize {
    let (g, alpha, h, beta) = (a % 6, a / 6, b % 6, b / 6);
    match (alpha, beta) {
        (0, 0) => s3_mul(g, h),
        (0, 1) => 6 + s3_mul(h, g),
        (1, 0) => 6 + s3_mul(g, s3_inv(h)),
        _ => s3_mul(s3_inv(h), g),
    }
}

fn loop_inv(a: usize) -> usize {
    if a < 6 {
        s3_inv(a)
    } else {
        a
    }
}

/// A sign prefix `""`, `"−"` or `"(−1)^e "` evaluated at `(α, β)`.
fn eval_sign(prefix: &str, alpha: usize, beta: usize) -> i64 {
    let prefix = prefix.trim();
    if prefix.is_empty() {
        return 1;
    }
    if prefix == "−" {
        return -1;
    }
    let exp = prefix.strip_prefix("(−1)^").expect("sign prefix");
    let exp = exp.trim_start_matches('{').trim_end_matches('}');
    let e: usize = exp
        .split('+')
        .map(|t| match t {
            "α" => alpha,
            "β" => beta,
            "1" => 1,
            other => panic!("bad exponent term {other:?}"),
        })
        .sum();
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn h_index(t: &str) -> usize {
    H.iter().position(|h| *h == t.trim()).unwrap_or_else(|| panic!("unknown H label {t:?}"))
}

type Entries = BTreeMap<(usize, usize), i64>;

/// Expands the symbolic table into `(row, col) → value` maps for the product
/// and the antipode.
fn expand(symbolic: &str) -> (Entries, Entries) {
    let mut lines = symbolic.lines();
    lines.next().expect("header");
    let mut product = Entries::new();
    for z in 0..4 {
        let row = lines.next().expect("table row");
        let cells: Vec<&str> = row.split(" | ").collect();
        assert_eq!(cells[0], format!("σᵢu^α ⊗ {}", H[z]));
        for (z2, cell) in cells[1..].iter().enumerate() {
            if *cell == "0" {
                continue;
            }
            let (prefix, t) = cell.split_once("σᵢu^α•σⱼu^β ⊗ ").expect("product cell");
            for a in 0..N {
                for b in 0..N {
                    let col = (a * 4 + z) * 48 + b * 4 + z2;
                    let row = loop_mul(a, b) * 4 + h_index(t);
                    product.insert((row, col), eval_sign(prefix, a / 6, b / 6));
                }
            }
        }
    }
    let mut antipode = Entries::new();
    for line in lines.filter(|l| !l.is_empty()) {
        let (lhs, rhs) = line.split_once(" = ").expect("antipode line");
        let z = h_index(lhs.trim_start_matches("λ(σᵢu^α ⊗ ").trim_end_matches(')'));
        let (prefix, t) = rhs.split_once("σᵢ^{(−1)^{α+1}}u^α ⊗ ").expect("antipode value");
        for a in 0..N {
            antipode.insert((loop_inv(a) * 4 + h_index(t), a * 4 + z), eval_sign(prefix, a / 6, 0));
        }
    }
    (product, antipode)
}

fn nonzeros(m: &hopfq::LinMap) -> Entries {
    let mut out = Entries::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !v.is_zero() {
                out.insert((r, c), v.as_small_int().expect("small integer entry"));
            }
        }
    }
    out
}

fn serialize(e: &Entries) -> String {
    e.iter().map(|((r, c), v)| format!("{r} {c} {v}\n")).collect()
}

fn parse(text: &str) -> Entries {
    text.lines()
        .map(|l| {
            let f: Vec<i64> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            ((f[0] as usize, f[1] as usize), f[2])
        })
        .collect()
}

/// Reads a numeric golden file; `HOPFQ_BLESS=1` rewrites it from `expected`.
fn numeric_golden(name: &str, expected: &Entries) -> Entries {
    let path = golden(name);
    if std::env::var("HOPFQ_BLESS").as_deref() == Ok("1") {
        fs::write(&path, serialize(expected)).unwrap();
    }
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e} (run with HOPFQ_BLESS=1)", path.display()));
    parse(&text)
}

fn symbolic_golden() -> String {
    fs::read_to_string(golden("chein_taft_dcp_table.txt")).unwrap()
}

#[test]
fn rendered_table_is_byte_identical_to_transcription() {
    let x = dcp();
    let l = chein_double(&builtin_group("s3").unwrap());
    let labels: Vec<String> = H.map(String::from).to_vec();
    assert_eq!(symbolic_product_table(&x, &l, &labels).unwrap(), symbolic_golden());
}

#[test]
fn table_renders_from_the_file_alone() {
    let x = dcp();
    let l = recover_loop(&x).expect("loop part");
    let labels = second_factor_labels(&x).expect("H labels");
    assert_eq!(labels, H.map(String::from).to_vec());
    assert_eq!(symbolic_product_table(&x, &l, &labels).unwrap(), symbolic_golden());
}

#[test]
fn symbolic_entries() {
    let x = dcp();
    let l = chein_double(&builtin_group("s3").unwrap());
    let labels: Vec<String> = H.map(String::from).to_vec();
    let entry = |z, z2| symbolic_product_entry(&x, &l, &labels, z, z2).unwrap();
    assert_eq!(entry(2, 0), "(−1)^β σᵢu^α•σⱼu^β ⊗ y");
    assert_eq!(entry(2, 2), "0");
    assert_eq!(entry(0, 3), "σᵢu^α•σⱼu^β ⊗ w");
    assert_eq!(entry(3, 1), "(−1)^{β+1} σᵢu^α•σⱼu^β ⊗ y");
}

#[test]
fn numeric_golden_is_the_expansion_of_the_transcription() {
    let (product, antipode) = expand(&symbolic_golden());
    assert_eq!(product.len(), 12 * N * N);
    assert_eq!(numeric_golden("chein_taft_dcp_product.txt", &product), product);
    assert_eq!(numeric_golden("chein_taft_dcp_antipode.txt", &antipode), antipode);
}

#[test]
fn computed_matrices_match_numeric_golden() {
    let x = dcp();
    assert_eq!((x.product.rows(), x.product.cols()), (48, 2304));
    let (product, antipode) = expand(&symbolic_golden());
    assert_eq!(nonzeros(&x.product), numeric_golden("chein_taft_dcp_product.txt", &product));
    assert_eq!(nonzeros(&x.antipode), numeric_golden("chein_taft_dcp_antipode.txt", &antipode));
}

#[test]
fn test_side_loop_agrees_with_library_loop() {
    let l = chein_double(&builtin_group("s3").unwrap());
    for a in 0..N {
        assert_eq!(l.inv(a), loop_inv(a));
        for b in 0..N {
            assert_eq!(l.mul(a, b), loop_mul(a, b), "{a}·{b}");
        }
    }
}
