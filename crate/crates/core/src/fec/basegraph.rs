//! Quasi-cyclic base graph storage and parsing.
//!
//! Graphs ship in `data/ldpc_basegraphs.txt`. Each nonzero base entry is a
//! (row, col, shift) triple; lifting by Z turns the entry into a Z x Z
//! identity rotated by `shift % Z`. Columns are laid out as
//! `[info | 4 core parity | extension parity]`; the core parity block is
//! dual-diagonal so encoding reduces to the row-sum closed form.

use std::sync::OnceLock;

const BASEGRAPH_DATA: &str = include_str!("../../data/ldpc_basegraphs.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseGraphId {
    Bg1,
    Bg2,
}

/// One base graph: dimensions plus the sparse shift entries, both in raw
/// (row, col, shift) form and grouped per row for the decoder.
#[derive(Debug, Clone)]
pub struct BaseGraph {
    pub name: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub info_cols: usize,
    pub zmax: usize,
    pub entries: Vec<(usize, usize, usize)>,
    pub row_entries: Vec<Vec<(usize, usize)>>,
}

fn parse(data: &str) -> Vec<BaseGraph> {
    let mut graphs: Vec<BaseGraph> = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("bg ") {
            let t: Vec<&str> = rest.split_whitespace().collect();
            assert_eq!(t.len(), 9, "malformed base graph header: {line}");
            let name: &'static str = match t[0] {
                "BG1" => "BG1",
                "BG2" => "BG2",
                other => panic!("unknown base graph {other}"),
            };
            graphs.push(BaseGraph {
                name,
                rows: t[2].parse().unwrap(),
                cols: t[4].parse().unwrap(),
                info_cols: t[6].parse().unwrap(),
                zmax: t[8].parse().unwrap(),
                entries: Vec::new(),
                row_entries: Vec::new(),
            });
        } else {
            let g = graphs.last_mut().expect("entry before header");
            let mut it = line.split_whitespace();
            let r: usize = it.next().unwrap().parse().unwrap();
            let c: usize = it.next().unwrap().parse().unwrap();
            let s: usize = it.next().unwrap().parse().unwrap();
            assert!(r < g.rows && c < g.cols && s < g.zmax, "entry out of range: {line}");
            g.entries.push((r, c, s));
        }
    }
    for g in &mut graphs {
        g.row_entries = vec![Vec::new(); g.rows];
        for &(r, c, s) in &g.entries {
            g.row_entries[r].push((c, s));
        }
    }
    graphs
}

fn graphs() -> &'static [BaseGraph] {
    static GRAPHS: OnceLock<Vec<BaseGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| parse(BASEGRAPH_DATA))
}

pub fn base_graph(id: BaseGraphId) -> &'static BaseGraph {
    let name = match id {
        BaseGraphId::Bg1 => "BG1",
        BaseGraphId::Bg2 => "BG2",
    };
    graphs()
        .iter()
        .find(|g| g.name == name)
        .expect("base graph data file holds BG1 and BG2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_graphs_have_expected_shape() {
        let bg1 = base_graph(BaseGraphId::Bg1);
        assert_eq!((bg1.rows, bg1.cols, bg1.info_cols), (46, 68, 22));
        let bg2 = base_graph(BaseGraphId::Bg2);
        assert_eq!((bg2.rows, bg2.cols, bg2.info_cols), (42, 52, 10));
    }

    #[test]
    fn extension_rows_have_identity_parity() {
        for id in [BaseGraphId::Bg1, BaseGraphId::Bg2] {
            let g = base_graph(id);
            for r in 4..g.rows {
                let ext_col = g.info_cols + 4 + (r - 4);
                assert!(
                    g.row_entries[r].contains(&(ext_col, 0)),
                    "{:?} row {r} misses identity at {ext_col}",
                    id
                );
                // No other row touches this extension column.
                for (rr, row) in g.row_entries.iter().enumerate() {
                    if rr != r {
                        assert!(row.iter().all(|&(c, _)| c != ext_col));
                    }
                }
            }
        }
    }

    #[test]
    fn core_parity_is_dual_diagonal_pattern() {
        for id in [BaseGraphId::Bg1, BaseGraphId::Bg2] {
            let g = base_graph(id);
            let k = g.info_cols;
            let p = |r: usize, c: usize| {
                g.row_entries[r]
                    .iter()
                    .find(|&&(cc, _)| cc == c)
                    .map(|&(_, s)| s)
            };
            assert_eq!(p(0, k), Some(1));
            assert_eq!(p(0, k + 1), Some(0));
            assert_eq!(p(1, k), Some(0));
            assert_eq!(p(1, k + 1), Some(0));
            assert_eq!(p(1, k + 2), Some(0));
            assert_eq!(p(2, k + 2), Some(0));
            assert_eq!(p(2, k + 3), Some(0));
            assert_eq!(p(3, k), Some(1));
            assert_eq!(p(3, k + 3), Some(0));
        }
    }
}
