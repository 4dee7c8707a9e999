//! Deterministic CSV/JSON rendering: 17 significant digits for reals, exact
//! integers as decimal strings, LF line endings, no timestamps.

/// Render a real with 17 significant digits; this always round-trips to the
/// identical `f64`.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// One CSV line from preformatted cells.
pub fn csv_row(cells: &[String]) -> String {
    cells.join(",")
}

/// Assemble a CSV document: header plus rows, LF endings, trailing newline.
pub fn csv_document(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&csv_row(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip_exactly() {
        for &x in &[0.84, -0.6, 1.0 / 3.0, 6.02e23, 1e-300, 0.0] {
            let s = fmt_real(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn seventeen_significant_digits() {
        let s = fmt_real(0.84);
        // 1 leading digit + 16 fractional digits of mantissa.
        let mantissa: String = s.chars().take_while(|c| *c != 'e').collect();
        let digits = mantissa.chars().filter(char::is_ascii_digit).count();
        assert_eq!(digits, 17, "{s}");
    }

    #[test]
    fn csv_layout() {
        let doc = csv_document(
            &["a", "b"],
            &[vec!["1".into(), "2".into()], vec!["3".into(), "4".into()]],
        );
        assert_eq!(doc, "a,b\n1,2\n3,4\n");
    }
}
