//! `count` and `table`.

use clap::ValueEnum;

use super::CliError;
use crate::counting::{
    group_thousands, render_decimal, render_ratio_scientific, render_scientific, ExactCount,
    ExactRatio, MemoTable,
};

/// Largest n whose counts are printed in full by the paper layout.
pub const EXACT_ROWS: usize = 12;
/// Fractional digits of scientific renderings.
pub const SCIENTIFIC_PLACES: usize = 6;
/// Significant digits of the ratio column.
pub const RATIO_SIG_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Bn,
    Mb,
    Ratio,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountFormat {
    Exact,
    Scientific,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Md,
    Tsv,
}

fn render_integer(n: usize, v: &ExactCount, paper: bool) -> Result<String, CliError> {
    if n <= EXACT_ROWS {
        let plain = v.to_string();
        Ok(if paper {
            group_thousands(&plain)
        } else {
            plain
        })
    } else {
        Ok(render_scientific(v, SCIENTIFIC_PLACES)?)
    }
}

/// Prints one value for `kind` at `n`.
///
/// `auto` prints counts exactly up to n = 12 and in scientific form above,
/// and ratios in decimal form. `sig_digits` sets the ratio precision (default
/// 12) and, for `scientific`, the mantissa's significant digits (default 7).
pub fn cmd_count(
    kind: Kind,
    n: usize,
    format: CountFormat,
    sig_digits: Option<usize>,
) -> Result<String, CliError> {
    if sig_digits == Some(0) {
        return Err(CliError::Usage("--sig-digits must be at least 1".into()));
    }
    let places = sig_digits.map_or(SCIENTIFIC_PLACES, |s| s - 1);
    let mut memo = MemoTable::new();
    let text = match kind {
        Kind::Bn | Kind::Mb => {
            let v = if kind == Kind::Bn {
                memo.bn_count(n)
            } else {
                memo.mb_count(n)?
            };
            match format {
                CountFormat::Exact => v.to_string(),
                CountFormat::Scientific => render_scientific(&v, places)?,
                CountFormat::Auto => render_integer(n, &v, false)?,
            }
        }
        Kind::Ratio => {
            let r = memo.ratio(n)?;
            match format {
                CountFormat::Exact => r.to_string(),
                CountFormat::Scientific => render_ratio_scientific(&r, places)?,
                CountFormat::Auto => render_decimal(&r, sig_digits.unwrap_or(RATIO_SIG_DIGITS))?,
            }
        }
    };
    Ok(text)
}

/// One table row with its renderings.
#[derive(Clone, Debug)]
pub struct CountRow {
    pub n: usize,
    pub bn: ExactCount,
    pub mb: ExactCount,
    pub ratio: ExactRatio,
    pub bn_text: String,
    pub mb_text: String,
    pub ratio_text: String,
}

/// Rows `1..=max_n`.
///
/// Paper layout: comma-grouped exact counts up to n = 12, scientific with six
/// places above, comma-grouped ratio. Otherwise counts are exact and
/// ungrouped.
pub fn count_rows(max_n: usize, paper: bool, sig_digits: usize) -> Result<Vec<CountRow>, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    if sig_digits == 0 {
        return Err(CliError::Usage("--sig-digits must be at least 1".into()));
    }
    let mut memo = MemoTable::new();
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mb = memo.mb_count(n)?;
        let bn = memo.bn_count(n);
        let ratio = ExactRatio::new(bn.clone(), mb.clone())?;
        let ratio_plain = render_decimal(&ratio, sig_digits)?;
        let (bn_text, mb_text, ratio_text) = if paper {
            (
                render_integer(n, &bn, true)?,
                render_integer(n, &mb, true)?,
                group_thousands(&ratio_plain),
            )
        } else {
            (bn.to_string(), mb.to_string(), ratio_plain)
        };
        rows.push(CountRow {
            n,
            bn,
            mb,
            ratio,
            bn_text,
            mb_text,
            ratio_text,
        });
    }
    Ok(rows)
}

const HEADER: [&str; 4] = ["n", "bn", "mb", "ratio"];

pub fn render_rows(rows: &[CountRow], format: TableFormat) -> Result<String, CliError> {
    match format {
        TableFormat::Csv => delimited(rows, b','),
        TableFormat::Tsv => delimited(rows, b'\t'),
        TableFormat::Md => {
            let mut out = format!("| {} |\n|---:|---:|---:|---:|\n", HEADER.join(" | "));
            for r in rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    r.n, r.bn_text, r.mb_text, r.ratio_text
                ));
            }
            Ok(out)
        }
    }
}

fn delimited(rows: &[CountRow], delimiter: u8) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .delimiter(delimiter)
        .from_writer(Vec::new());
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string().as_str(),
            &r.bn_text,
            &r.mb_text,
            &r.ratio_text,
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("table text is ASCII"))
}

pub fn cmd_table(
    max_n: usize,
    format: TableFormat,
    paper: bool,
    sig_digits: usize,
) -> Result<String, CliError> {
    render_rows(&count_rows(max_n, paper, sig_digits)?, format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        assert_eq!(
            cmd_count(Kind::Bn, 7, CountFormat::Exact, None).unwrap(),
            "1138779265"
        );
        assert_eq!(
            cmd_count(Kind::Mb, 9, CountFormat::Exact, None).unwrap(),
            "5321887813887"
        );
        assert_eq!(
            cmd_count(Kind::Ratio, 2, CountFormat::Auto, None).unwrap(),
            "1.0"
        );
        assert_eq!(
            cmd_count(Kind::Ratio, 3, CountFormat::Exact, None).unwrap(),
            "5/3"
        );
        assert_eq!(
            cmd_count(Kind::Bn, 13, CountFormat::Auto, None).unwrap(),
            "1.867660E+031"
        );
        assert_eq!(
            cmd_count(Kind::Bn, 5, CountFormat::Scientific, Some(3)).unwrap(),
            "2.93E+004"
        );
        assert_eq!(
            cmd_count(Kind::Bn, 0, CountFormat::Exact, None).unwrap(),
            "1"
        );
        assert!(cmd_count(Kind::Mb, 0, CountFormat::Exact, None).is_err());
        assert!(cmd_count(Kind::Ratio, 0, CountFormat::Auto, None).is_err());
    }

    #[test]
    fn paper_csv_quotes_grouped_fields() {
        let text = cmd_table(5, TableFormat::Csv, true, 12).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "n,bn,mb,ratio");
        assert_eq!(lines[3], "3,25,15,1.66666666667");
        assert_eq!(lines[5], "5,\"29,281\",\"3,567\",8.20885898514");
    }

    #[test]
    fn plain_tsv_single_row() {
        let text = cmd_table(1, TableFormat::Tsv, false, 12).unwrap();
        assert_eq!(text, "n\tbn\tmb\tratio\n1\t1\t1\t1.0\n");
    }

    #[test]
    fn markdown_layout() {
        let text = cmd_table(2, TableFormat::Md, false, 4).unwrap();
        assert_eq!(
            text,
            "| n | bn | mb | ratio |\n|---:|---:|---:|---:|\n| 1 | 1 | 1 | 1.0 |\n| 2 | 3 | 3 | 1.0 |\n"
        );
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(matches!(count_rows(0, true, 12), Err(CliError::Usage(_))));
        assert!(matches!(count_rows(3, true, 0), Err(CliError::Usage(_))));
    }
}
