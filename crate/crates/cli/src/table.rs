//! Column-aligned text and CSV rendering of rows of optional cells.

pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Option<String>>>,
}

impl Table {
    /// Rows are `(column, cell)` lists with the same column order. Columns
    /// that are empty in every row are dropped.
    pub fn new(rows: Vec<Vec<(&'static str, Option<String>)>>) -> Self {
        let Some(first) = rows.first() else {
            return Table { columns: vec![], rows: vec![] };
        };
        let keep: Vec<usize> = (0..first.len())
            .filter(|&k| rows.iter().any(|r| r[k].1.is_some()))
            .collect();
        Table {
            columns: keep.iter().map(|&k| first[k].0).collect(),
            rows: rows
                .into_iter()
                .map(|r| keep.iter().map(|&k| r[k].1.clone()).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn human(&self) -> String {
        let cell = |c: &Option<String>| c.clone().unwrap_or_else(|| "-".into());
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|k| {
                self.rows
                    .iter()
                    .map(|r| cell(&r[k]).chars().count())
                    .chain([self.columns[k].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<String>| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.columns.iter().map(|c| c.to_string()).collect());
        for r in &self.rows {
            out += &line(r.iter().map(cell).collect());
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.iter().map(|c| c.clone().unwrap_or_default()))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}
