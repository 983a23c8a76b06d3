use std::f64::consts::E;
use std::fmt::Write as _;

use super::heawood_degeneracy;
use crate::builders::s_ref;
use crate::error::{Error, Result};
use crate::graph::euler_genus_upper;

#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Integer(u128),
    Real(f64),
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Real(v) => write!(f, "{v:.3}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub name: &'static str,
    pub formula: String,
    pub value: BoundValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundValue> {
        self.rows.iter().find(|r| r.name == name).map(|r| &r.value)
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let cells: Vec<[String; 3]> = self
            .rows
            .iter()
            .map(|r| [r.name.to_string(), r.formula.clone(), r.value.to_string()])
            .collect();
        let header = ["bound".to_string(), "formula".to_string(), "value".to_string()];
        let mut width = [0usize; 3];
        for row in std::iter::once(&header).chain(&cells) {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&cells) {
            let line = format!(
                "{:<w0$}  {:<w1$}  {:>w2$}",
                row[0],
                row[1],
                row[2],
                w0 = width[0],
                w1 = width[1],
                w2 = width[2]
            );
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("bound,formula,value\n");
        for r in &self.rows {
            writeln!(out, "{},\"{}\",{}", r.name, r.formula, r.value).unwrap();
        }
        out
    }
}

fn row(rows: &mut Vec<BoundRow>, name: &'static str, formula: String, value: BoundValue) {
    rows.push(BoundRow { name, formula, value });
}

/// Evaluates the closed-form bounds for a graph with `n` vertices and `m`
/// edges, optionally with Euler genus `g` and degeneracy or color count `k`.
/// Logarithms are natural.
pub fn bound_report(n: usize, m: usize, genus: Option<usize>, k: Option<usize>) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("need n >= 2, got {n}")));
    }
    let ln_n = (n as f64).ln();
    let mf = m as f64;
    let mut rows = Vec::new();
    row(
        &mut rows,
        "edge_bound",
        format!("(15e+1) sqrt(m ln n), m={m} n={n}"),
        BoundValue::Real((15.0 * E + 1.0) * (mf * ln_n).sqrt()),
    );
    row(
        &mut rows,
        "peel_threshold",
        "sqrt(m / ln n)".into(),
        BoundValue::Real((mf / ln_n).sqrt()),
    );
    row(
        &mut rows,
        "survivor_bound",
        "2 sqrt(m ln n)".into(),
        BoundValue::Real(2.0 * (mf * ln_n).sqrt()),
    );
    row(
        &mut rows,
        "reference_threshold",
        "(m / ln n)^(1/3)".into(),
        BoundValue::Real((mf / ln_n).cbrt()),
    );
    row(
        &mut rows,
        "roberts",
        "max(1, floor(n/2))".into(),
        BoundValue::Integer((n as u128 / 2).max(1)),
    );
    row(
        &mut rows,
        "euler_genus_upper",
        "m + 2".into(),
        BoundValue::Integer(euler_genus_upper(m as u64) as u128),
    );
    if let Some(k) = k {
        let per_round = (2.0 * E * ln_n).ceil() as u128;
        row(
            &mut rows,
            "degenerate_bound",
            format!("(k+2) ceil(2e ln n), k={k}"),
            BoundValue::Integer((k as u128 + 2) * per_round),
        );
        row(
            &mut rows,
            "reference_size",
            "(k+2) ceil(6e^2 (k+2) ln n)".into(),
            BoundValue::Integer(s_ref(k, n, 0) as u128),
        );
        row(
            &mut rows,
            "acyclic_bound",
            "k(k-1)".into(),
            BoundValue::Integer(k as u128 * (k as u128).saturating_sub(1)),
        );
        if k >= 1 {
            row(
                &mut rows,
                "poset_dim_upper",
                "2 floor(n/2) + k + 4, k as chromatic number".into(),
                BoundValue::Integer(2 * (n as u128 / 2).max(1) + k as u128 + 4),
            );
        }
    }
    if let Some(g) = genus {
        let ge = g.max(2);
        row(
            &mut rows,
            "k3k_bound",
            format!("2g + 2, g={g}"),
            BoundValue::Integer(2 * g as u128 + 2),
        );
        row(
            &mut rows,
            "heawood_degeneracy",
            format!("(5 + sqrt(1 + 24g)) / 2, g={ge}"),
            BoundValue::Real(0.5 * (5.0 + (1.0 + 24.0 * ge as f64).sqrt())),
        );
        row(
            &mut rows,
            "heawood_degeneracy_ceil",
            format!("ceil((5 + sqrt(1 + 24g)) / 2), g={ge}"),
            BoundValue::Integer(heawood_degeneracy(ge as u64) as u128),
        );
        row(
            &mut rows,
            "quotient_vertices",
            format!("10^9 g^4, g={ge}"),
            BoundValue::Integer(1_000_000_000 * (ge as u128).pow(4)),
        );
    }
    Ok(BoundReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_bound_n50_m100() {
        let r = bound_report(50, 100, None, None).unwrap();
        let BoundValue::Real(v) = r.get("edge_bound").unwrap() else {
            panic!()
        };
        assert!((v - 826.25).abs() < 0.01, "{v}");
        assert!(r.to_table().contains("826.246"));
    }

    #[test]
    fn degenerate_bound_k3_n100() {
        let r = bound_report(100, 0, None, Some(3)).unwrap();
        assert_eq!(r.get("degenerate_bound"), Some(&BoundValue::Integer(130)));
        assert_eq!(r.get("acyclic_bound"), Some(&BoundValue::Integer(6)));
    }

    #[test]
    fn heawood_g2() {
        let r = bound_report(10, 10, Some(2), None).unwrap();
        assert_eq!(r.get("heawood_degeneracy").unwrap().to_string(), "6.000");
        assert_eq!(r.get("heawood_degeneracy_ceil"), Some(&BoundValue::Integer(6)));
        assert_eq!(r.get("k3k_bound"), Some(&BoundValue::Integer(6)));
    }

    #[test]
    fn formats() {
        assert!(bound_report(1, 0, None, None).is_err());
        let r = bound_report(50, 100, Some(0), Some(7)).unwrap();
        let csv = r.to_csv();
        assert!(csv.starts_with("bound,formula,value\n"));
        assert_eq!(csv.lines().count(), r.rows.len() + 1);
        assert_eq!(r.to_table().lines().count(), r.rows.len() + 1);
        assert_eq!(r.get("euler_genus_upper"), Some(&BoundValue::Integer(102)));
    }
}
