//! Aligned plain-text tables.

use langdual::{RootDatum, Weight};

pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = vec![line(&self.headers)];
        out.extend(self.rows.iter().map(|r| line(r)));
        out.join("\n")
    }
}

/// Sort key: height of `top − w` when it lies in the root lattice, then
/// lexicographic order of `w`.
pub fn height_order<'a>(
    datum: &RootDatum,
    top: &Weight,
    weights: impl IntoIterator<Item = &'a Weight>,
) -> Vec<&'a Weight> {
    let mut ws: Vec<(i64, &Weight)> = weights
        .into_iter()
        .map(|w| {
            let h = datum
                .root_coords(&(top - w))
                .map(|c| c.iter().sum())
                .unwrap_or_else(|| datum.scaled_height(top) - datum.scaled_height(w));
            (h, w)
        })
        .collect();
    ws.sort();
    ws.into_iter().map(|(_, w)| w).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alignment() {
        let mut t = Table::new(&["weight", "mult"]);
        t.row(vec!["(10,0)".into(), "1".into()]);
        t.row(vec!["(0,1)".into(), "12".into()]);
        assert_eq!(t.render(), "weight  mult\n(10,0)  1\n(0,1)   12");
    }

    #[test]
    fn ordering() {
        let d = RootDatum::of_type("B2").unwrap();
        let top = Weight::from([1, 0]);
        let ws =
            [Weight::from([-1, 0]), Weight::from([0, 0]), Weight::from([1, -2]), Weight::from([-1, 2]), top.clone()];
        let sorted: Vec<String> = height_order(&d, &top, &ws).iter().map(|w| w.to_string()).collect();
        assert_eq!(sorted, ["(1,0)", "(-1,2)", "(0,0)", "(1,-2)", "(-1,0)"]);
    }
}
