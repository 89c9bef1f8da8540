//! Ground-truth comparison and metric computation: per-cell outcome
//! counts, precision/recall/F1/accuracy, Levenshtein distance and CER/WER,
//! plus report serialization.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Rectangular table of cell strings; the empty string is a blank cell.
/// Used both for ground truth and for pipeline predictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    rows: usize,
    cols: usize,
    cells: Vec<String>,
}

impl Table {
    pub fn new(rows: usize, cols: usize, cells: Vec<String>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::DimMismatch(format!(
                "table of {rows}x{cols} needs {} cells, got {}",
                rows * cols,
                cells.len()
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn blank(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            cells: vec![String::new(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &str {
        &self.cells[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: impl Into<String>) {
        self.cells[row * self.cols + col] = value.into();
    }

    /// Parses RFC-4180 CSV. Short rows are padded with blank cells so the
    /// table stays rectangular.
    pub fn from_csv_bytes(bytes: &[u8]) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(bytes);
        let mut raw_rows: Vec<Vec<String>> = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| Error::Format(format!("bad csv: {e}")))?;
            raw_rows.push(record.iter().map(str::to_owned).collect());
        }
        let cols = raw_rows.iter().map(Vec::len).max().unwrap_or(0);
        let rows = raw_rows.len();
        if rows == 0 || cols == 0 {
            return Err(Error::Format("empty table".into()));
        }
        let mut cells = Vec::with_capacity(rows * cols);
        for mut row in raw_rows {
            row.resize(cols, String::new());
            cells.extend(row);
        }
        Table::new(rows, cols, cells)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_bytes(&std::fs::read(path)?)
    }

    /// Serializes as RFC-4180 CSV, optionally preceded by a
    /// `col_0..col_{n-1}` header row.
    pub fn to_csv_bytes(&self, header: bool) -> Vec<u8> {
        let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
        if header {
            let names: Vec<String> = (0..self.cols).map(|c| format!("col_{c}")).collect();
            writer.write_record(&names).expect("in-memory write");
        }
        for row in 0..self.rows {
            let fields: Vec<&str> = (0..self.cols).map(|c| self.get(row, c)).collect();
            writer.write_record(&fields).expect("in-memory write");
        }
        writer.into_inner().expect("in-memory flush")
    }

    pub fn save_csv(&self, path: impl AsRef<Path>, header: bool) -> Result<()> {
        std::fs::write(path, self.to_csv_bytes(header))?;
        Ok(())
    }

    /// Aligned `(predicted, truth)` string pairs over the overlapping
    /// region, for CER/WER averaging.
    pub fn aligned_pairs(&self, truth: &Table) -> Vec<(String, String)> {
        let rows = self.rows.min(truth.rows);
        let cols = self.cols.min(truth.cols);
        let mut pairs = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                pairs.push((self.get(r, c).to_owned(), truth.get(r, c).to_owned()));
            }
        }
        pairs
    }
}

/// Per-cell outcome tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalCounts {
    /// Truth non-blank, prediction equal.
    pub correct: usize,
    /// Truth non-blank, prediction non-blank but different.
    pub incorrect: usize,
    /// Truth non-blank, prediction blank (or no prediction cell at all).
    pub missing: usize,
    /// Truth blank (or no truth cell) but a prediction exists.
    pub extra: usize,
    /// Truth blank and prediction blank.
    pub empty: usize,
}

/// Positionally aligns the two tables and classifies every cell. Cells
/// outside the overlap count as extra (prediction side) or missing (truth
/// side).
pub fn compare_tables(pred: &Table, truth: &Table) -> EvalCounts {
    let rows = pred.rows.min(truth.rows);
    let cols = pred.cols.min(truth.cols);
    let mut counts = EvalCounts::default();

    for r in 0..rows {
        for c in 0..cols {
            let p = pred.get(r, c);
            let t = truth.get(r, c);
            match (t.is_empty(), p.is_empty()) {
                (false, false) if p == t => counts.correct += 1,
                (false, false) => counts.incorrect += 1,
                (false, true) => counts.missing += 1,
                (true, false) => counts.extra += 1,
                (true, true) => counts.empty += 1,
            }
        }
    }
    counts.extra += pred.rows * pred.cols - rows * cols;
    counts.missing += truth.rows * truth.cols - rows * cols;
    counts
}

impl EvalCounts {
    /// `C / (C + I)`.
    pub fn precision(&self) -> Result<f64> {
        ratio(self.correct, self.correct + self.incorrect, "precision")
    }

    /// `C / (C + M)`.
    pub fn recall(&self) -> Result<f64> {
        ratio(self.correct, self.correct + self.missing, "recall")
    }

    /// Harmonic mean of precision and recall.
    pub fn f1(&self) -> Result<f64> {
        let p = self.precision()?;
        let r = self.recall()?;
        if p + r == 0.0 {
            return Err(Error::UndefinedMetric("f1 with P + R = 0".into()));
        }
        Ok(2.0 * p * r / (p + r))
    }

    /// `C / (C + I + M)`: correct over all compared non-blank-truth cells.
    pub fn accuracy(&self) -> Result<f64> {
        ratio(
            self.correct,
            self.correct + self.incorrect + self.missing,
            "accuracy",
        )
    }
}

fn ratio(num: usize, den: usize, name: &str) -> Result<f64> {
    if den == 0 {
        return Err(Error::UndefinedMetric(format!("{name} denominator is 0")));
    }
    Ok(num as f64 / den as f64)
}

/// Unit-cost Levenshtein distance between two symbol sequences.
pub fn levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut curr = vec![0usize; b.len() + 1];
    for (i, av) in a.iter().enumerate() {
        curr[0] = i + 1;
        for (j, bv) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(av != bv);
            curr[j + 1] = sub.min(prev[j + 1] + 1).min(curr[j] + 1);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// Levenshtein over Unicode scalar values.
pub fn levenshtein_str(a: &str, b: &str) -> usize {
    let av: Vec<char> = a.chars().collect();
    let bv: Vec<char> = b.chars().collect();
    levenshtein(&av, &bv)
}

/// Character error rate: edit distance over characters divided by the
/// truth length. Undefined for empty truth.
pub fn cer(pred: &str, truth: &str) -> Result<f64> {
    let t: Vec<char> = truth.chars().collect();
    if t.is_empty() {
        return Err(Error::UndefinedMetric("cer with empty truth".into()));
    }
    let p: Vec<char> = pred.chars().collect();
    Ok(levenshtein(&p, &t) as f64 / t.len() as f64)
}

/// Word error rate over whitespace-split tokens. Undefined for truth with
/// no tokens.
pub fn wer(pred: &str, truth: &str) -> Result<f64> {
    let t: Vec<&str> = truth.split_whitespace().collect();
    if t.is_empty() {
        return Err(Error::UndefinedMetric("wer with empty truth".into()));
    }
    let p: Vec<&str> = pred.split_whitespace().collect();
    Ok(levenshtein(&p, &t) as f64 / t.len() as f64)
}

/// All table-level metrics as fractions in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub accuracy: f64,
    pub avg_cer: f64,
    pub avg_wer: f64,
}

/// Assembles the report from outcome counts and aligned `(pred, truth)`
/// cell pairs; CER/WER average over cells whose truth is non-blank.
pub fn report(counts: &EvalCounts, pairs: &[(String, String)]) -> Result<MetricReport> {
    let mut cer_sum = 0.0;
    let mut wer_sum = 0.0;
    let mut n = 0usize;
    for (pred, truth) in pairs {
        if truth.is_empty() {
            continue;
        }
        cer_sum += cer(pred, truth)?;
        wer_sum += wer(pred, truth)?;
        n += 1;
    }
    if n == 0 {
        return Err(Error::UndefinedMetric(
            "no non-blank truth cells for CER/WER".into(),
        ));
    }
    Ok(MetricReport {
        precision: counts.precision()?,
        recall: counts.recall()?,
        f1: counts.f1()?,
        accuracy: counts.accuracy()?,
        avg_cer: cer_sum / n as f64,
        avg_wer: wer_sum / n as f64,
    })
}

const REPORT_ROWS: [&str; 11] = [
    "Total Correct Cells",
    "Total Incorrect Cells",
    "Total Missing Cells",
    "Total Extra Cells",
    "Total Empty Cells",
    "Precision (%)",
    "Recall (%)",
    "F1 Score (%)",
    "Accuracy (%)",
    "Avg. Character Error Rate (CER)",
    "Avg. Word Error Rate (WER)",
];

/// CSV form of the report: one `metric,value` row per line. Fractions are
/// written with full precision so a re-parse reproduces the report
/// exactly.
pub fn report_csv(counts: &EvalCounts, report: &MetricReport) -> String {
    let values = [
        counts.correct as f64,
        counts.incorrect as f64,
        counts.missing as f64,
        counts.extra as f64,
        counts.empty as f64,
        report.precision,
        report.recall,
        report.f1,
        report.accuracy,
        report.avg_cer,
        report.avg_wer,
    ];
    let mut out = String::from("metric,value\n");
    for (name, value) in REPORT_ROWS.iter().zip(values) {
        // {:?} prints the shortest digits that round-trip the f64.
        writeln!(out, "{name},{value:?}").expect("string write");
    }
    out
}

/// Re-parses a CSV produced by [`report_csv`].
pub fn parse_report_csv(text: &str) -> Result<(EvalCounts, MetricReport)> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            continue; // header
        }
        let (name, value) = line
            .rsplit_once(',')
            .ok_or_else(|| Error::Format(format!("bad report line: {line}")))?;
        if REPORT_ROWS.get(values.len()) != Some(&name) {
            return Err(Error::Format(format!("unexpected report row: {name}")));
        }
        let v: f64 = value
            .parse()
            .map_err(|_| Error::Format(format!("bad report value: {value}")))?;
        values.push(v);
    }
    if values.len() != REPORT_ROWS.len() {
        return Err(Error::Format("report is missing rows".into()));
    }
    let counts = EvalCounts {
        correct: values[0] as usize,
        incorrect: values[1] as usize,
        missing: values[2] as usize,
        extra: values[3] as usize,
        empty: values[4] as usize,
    };
    let report = MetricReport {
        precision: values[5],
        recall: values[6],
        f1: values[7],
        accuracy: values[8],
        avg_cer: values[9],
        avg_wer: values[10],
    };
    Ok((counts, report))
}

/// Plain-text report with aligned columns and percentages.
pub fn report_text(counts: &EvalCounts, report: &MetricReport) -> String {
    let rows: [(&str, String); 11] = [
        (REPORT_ROWS[0], counts.correct.to_string()),
        (REPORT_ROWS[1], counts.incorrect.to_string()),
        (REPORT_ROWS[2], counts.missing.to_string()),
        (REPORT_ROWS[3], counts.extra.to_string()),
        (REPORT_ROWS[4], counts.empty.to_string()),
        (REPORT_ROWS[5], format!("{:.2}", report.precision * 100.0)),
        (REPORT_ROWS[6], format!("{:.2}", report.recall * 100.0)),
        (REPORT_ROWS[7], format!("{:.2}", report.f1 * 100.0)),
        (REPORT_ROWS[8], format!("{:.2}", report.accuracy * 100.0)),
        (REPORT_ROWS[9], format!("{:.2}%", report.avg_cer * 100.0)),
        (REPORT_ROWS[10], format!("{:.2}%", report.avg_wer * 100.0)),
    ];
    let width = REPORT_ROWS.iter().map(|r| r.len()).max().unwrap();
    let mut out = String::new();
    for (name, value) in rows {
        writeln!(out, "{name:<width$}  {value:>8}").expect("string write");
    }
    out
}

/// Writes the CSV report to `path`.
pub fn write_report(
    counts: &EvalCounts,
    report: &MetricReport,
    path: impl AsRef<Path>,
) -> Result<()> {
    std::fs::write(path, report_csv(counts, report))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table(rows: usize, cols: usize, cells: &[&str]) -> Table {
        Table::new(rows, cols, cells.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn identical_tables_all_correct() {
        let t = table(2, 2, &["1", "2", "3", "4"]);
        let counts = compare_tables(&t, &t);
        assert_eq!(counts.correct, 4);
        assert_eq!(
            counts.incorrect + counts.missing + counts.extra + counts.empty,
            0
        );
    }

    #[test]
    fn blank_prediction_of_nonblank_truth_is_missing() {
        let truth = table(1, 1, &["7"]);
        let pred = table(1, 1, &[""]);
        let counts = compare_tables(&pred, &truth);
        assert_eq!(counts.missing, 1);
        assert_eq!(counts.correct, 0);
    }

    #[test]
    fn full_outcome_taxonomy() {
        let truth = table(1, 5, &["a", "b", "c", "", ""]);
        let pred = table(1, 5, &["a", "x", "", "y", ""]);
        let counts = compare_tables(&pred, &truth);
        assert_eq!(
            counts,
            EvalCounts {
                correct: 1,
                incorrect: 1,
                missing: 1,
                extra: 1,
                empty: 1
            }
        );
    }

    #[test]
    fn dimension_mismatch_counts_outside_cells() {
        let truth = table(2, 2, &["1", "2", "3", "4"]);
        let pred = table(3, 2, &["1", "2", "3", "4", "5", "6"]);
        let counts = compare_tables(&pred, &truth);
        assert_eq!(counts.correct, 4);
        assert_eq!(counts.extra, 2);
        let reversed = compare_tables(&truth, &pred);
        assert_eq!(reversed.missing, 2);
    }

    #[test]
    fn random_tables_match_per_cell_oracle() {
        let alphabet = ["", "1", "2", "x"];
        let mut state = 0xdead_beef_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..50 {
            let cells_t: Vec<String> =
                (0..25).map(|_| alphabet[next() % 4].to_string()).collect();
            let cells_p: Vec<String> =
                (0..25).map(|_| alphabet[next() % 4].to_string()).collect();
            let truth = Table::new(5, 5, cells_t).unwrap();
            let pred = Table::new(5, 5, cells_p).unwrap();

            // Exhaustive per-cell case analysis.
            let mut want = EvalCounts::default();
            for r in 0..5 {
                for c in 0..5 {
                    let (t, p) = (truth.get(r, c), pred.get(r, c));
                    if t.is_empty() && p.is_empty() {
                        want.empty += 1;
                    } else if t.is_empty() {
                        want.extra += 1;
                    } else if p.is_empty() {
                        want.missing += 1;
                    } else if t == p {
                        want.correct += 1;
                    } else {
                        want.incorrect += 1;
                    }
                }
            }
            assert_eq!(compare_tables(&pred, &truth), want);
        }
    }

    #[test]
    fn reported_metric_columns_reproduce() {
        // Raw counts and reported percentages from the reference
        // measurement table this scheme follows.
        let t1 = EvalCounts {
            correct: 89,
            incorrect: 3,
            missing: 8,
            ..Default::default()
        };
        assert!((t1.precision().unwrap() * 100.0 - 96.74).abs() < 0.01);
        assert!((t1.recall().unwrap() * 100.0 - 91.75).abs() < 0.01);
        assert!((t1.f1().unwrap() * 100.0 - 94.18).abs() < 0.01);

        let t2 = EvalCounts {
            correct: 123,
            incorrect: 17,
            missing: 13,
            ..Default::default()
        };
        assert!((t2.precision().unwrap() * 100.0 - 87.86).abs() < 0.01);
        assert!((t2.recall().unwrap() * 100.0 - 90.44).abs() < 0.01);
        assert!((t2.f1().unwrap() * 100.0 - 89.13).abs() < 0.01);
    }

    #[test]
    fn zero_counts_are_undefined() {
        let zero = EvalCounts::default();
        assert!(matches!(zero.precision(), Err(Error::UndefinedMetric(_))));
        assert!(matches!(zero.recall(), Err(Error::UndefinedMetric(_))));
        assert!(matches!(zero.accuracy(), Err(Error::UndefinedMetric(_))));
    }

    #[test]
    fn perfect_counts_give_ones() {
        let c = EvalCounts {
            correct: 10,
            ..Default::default()
        };
        assert_eq!(c.precision().unwrap(), 1.0);
        assert_eq!(c.recall().unwrap(), 1.0);
        assert_eq!(c.f1().unwrap(), 1.0);
        assert_eq!(c.accuracy().unwrap(), 1.0);
    }

    #[test]
    fn levenshtein_basics() {
        assert_eq!(levenshtein_str("abc", "abc"), 0);
        assert_eq!(levenshtein_str("", "abc"), 3);
        assert_eq!(levenshtein_str("kitten", "sitting"), 3);
    }

    /// Plain exponential recursion on the defining recurrence.
    pub(crate) fn levenshtein_recursive(a: &[u8], b: &[u8]) -> usize {
        if a.is_empty() {
            return b.len();
        }
        if b.is_empty() {
            return a.len();
        }
        let (ra, rb) = (&a[..a.len() - 1], &b[..b.len() - 1]);
        if a[a.len() - 1] == b[b.len() - 1] {
            return levenshtein_recursive(ra, rb);
        }
        let del = levenshtein_recursive(ra, b);
        let ins = levenshtein_recursive(a, rb);
        let sub = levenshtein_recursive(ra, rb);
        1 + del.min(ins).min(sub)
    }

    #[test]
    fn dp_matches_exponential_recursion() {
        assert_eq!(levenshtein_recursive(b"kitten", b"sitting"), 3);
        let symbols = [b'a', b'b', b'c'];
        let mut strings: Vec<Vec<u8>> = vec![vec![]];
        for len in 1..=4usize {
            let start = strings.len();
            let prev: Vec<Vec<u8>> = strings[..start]
                .iter()
                .filter(|s| s.len() == len - 1)
                .cloned()
                .collect();
            for p in prev {
                for &s in &symbols {
                    let mut n = p.clone();
                    n.push(s);
                    strings.push(n);
                }
            }
        }
        for a in &strings {
            for b in &strings {
                assert_eq!(levenshtein(a, b), levenshtein_recursive(a, b));
            }
        }
    }

    #[test]
    fn cer_and_wer_examples() {
        assert_eq!(cer("5", "51").unwrap(), 0.5);
        assert_eq!(cer("42", "42").unwrap(), 0.0);
        assert_eq!(wer("42", "42").unwrap(), 0.0);
        assert_eq!(wer("a b", "a c").unwrap(), 0.5);
        assert!(matches!(cer("x", ""), Err(Error::UndefinedMetric(_))));
        assert!(matches!(wer("x", "  "), Err(Error::UndefinedMetric(_))));
    }

    #[test]
    fn batch_cer_matches_per_cell_oracle() {
        let pairs: Vec<(String, String)> = vec![
            ("12".into(), "12".into()),
            ("3".into(), "34".into()),
            ("".into(), "9".into()),
            ("7".into(), "".into()), // blank truth: skipped
        ];
        let counts = EvalCounts {
            correct: 1,
            incorrect: 1,
            missing: 1,
            extra: 1,
            empty: 0,
        };
        let rep = report(&counts, &pairs).unwrap();
        let want_cer = (0.0 + 0.5 + 1.0) / 3.0;
        assert!((rep.avg_cer - want_cer).abs() < 1e-12);
        assert!((rep.avg_wer - (0.0 + 1.0 + 1.0) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn report_csv_round_trips() {
        let counts = EvalCounts {
            correct: 89,
            incorrect: 3,
            missing: 8,
            extra: 0,
            empty: 0,
        };
        let pairs = vec![("1".into(), "1".into()), ("2".into(), "29".into())];
        let rep = report(&counts, &pairs).unwrap();
        let csv_text = report_csv(&counts, &rep);
        let (counts2, rep2) = parse_report_csv(&csv_text).unwrap();
        assert_eq!(counts, counts2);
        assert_eq!(rep, rep2);
        // Text report carries every row name.
        let text = report_text(&counts, &rep);
        for name in REPORT_ROWS {
            assert!(text.contains(name), "missing row {name}");
        }
    }

    #[test]
    fn all_correct_makes_every_rate_clean() {
        let counts = EvalCounts {
            correct: 5,
            ..Default::default()
        };
        let pairs: Vec<(String, String)> =
            (0..5).map(|i| (i.to_string(), i.to_string())).collect();
        let rep = report(&counts, &pairs).unwrap();
        assert_eq!(rep.precision, 1.0);
        assert_eq!(rep.accuracy, 1.0);
        assert_eq!(rep.avg_cer, 0.0);
        assert_eq!(rep.avg_wer, 0.0);
    }

    #[test]
    fn table_csv_round_trip_with_blanks_and_quotes() {
        let t = table(2, 2, &["a,b", "", "line\"quote", "7"]);
        let bytes = t.to_csv_bytes(false);
        let back = Table::from_csv_bytes(&bytes).unwrap();
        assert_eq!(back, t);
        // Header variant parses into one extra row of col_ names.
        let with_header = t.to_csv_bytes(true);
        let parsed = Table::from_csv_bytes(&with_header).unwrap();
        assert_eq!(parsed.rows(), 3);
        assert_eq!(parsed.get(0, 1), "col_1");
    }

    #[test]
    fn ragged_csv_is_padded() {
        let parsed = Table::from_csv_bytes(b"1,2,3\n4\n").unwrap();
        assert_eq!((parsed.rows(), parsed.cols()), (2, 3));
        assert_eq!(parsed.get(1, 1), "");
    }

    proptest! {
        #[test]
        fn metric_axioms(a in "[abc]{0,7}", b in "[abc]{0,7}", c in "[abc]{0,7}") {
            let (av, bv, cv): (Vec<char>, Vec<char>, Vec<char>) =
                (a.chars().collect(), b.chars().collect(), c.chars().collect());
            let dab = levenshtein(&av, &bv);
            let dba = levenshtein(&bv, &av);
            let dac = levenshtein(&av, &cv);
            let dbc = levenshtein(&bv, &cv);
            prop_assert_eq!(levenshtein(&av, &av), 0);
            prop_assert_eq!(dab, dba);
            prop_assert!(dac <= dab + dbc);
            let lo = av.len().abs_diff(bv.len());
            let hi = av.len().max(bv.len());
            prop_assert!(dab >= lo && dab <= hi);
        }

        #[test]
        fn f1_between_min_and_max(c in 1usize..200, i in 0usize..200, m in 0usize..200) {
            let counts = EvalCounts { correct: c, incorrect: i, missing: m, extra: 0, empty: 0 };
            let p = counts.precision().unwrap();
            let r = counts.recall().unwrap();
            let f = counts.f1().unwrap();
            prop_assert!(f <= p.max(r) + 1e-12);
            prop_assert!(f >= p.min(r) - 1e-12);
            for v in [p, r, f, counts.accuracy().unwrap()] {
                prop_assert!((0.0..=1.0).contains(&v));
            }
        }
    }
}
