use std::path::Path;

use crate::error::{Error, Result};

/// Symmetric TSP instance held as a dense distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TspInstance {
    name: String,
    coordinates: Option<Vec<(f64, f64)>>,
    distances: Vec<Vec<f64>>,
}

impl TspInstance {
    /// Euclidean instance from city coordinates.
    pub fn from_coordinates(name: impl Into<String>, coordinates: Vec<(f64, f64)>) -> Result<Self> {
        let n = coordinates.len();
        let distances = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (dx, dy) = (
                            coordinates[i].0 - coordinates[j].0,
                            coordinates[i].1 - coordinates[j].1,
                        );
                        dx.hypot(dy)
                    })
                    .collect()
            })
            .collect();
        let mut inst = Self::from_matrix(name, distances)?;
        inst.coordinates = Some(coordinates);
        Ok(inst)
    }

    pub fn from_matrix(name: impl Into<String>, distances: Vec<Vec<f64>>) -> Result<Self> {
        let n = distances.len();
        if n < 3 {
            return Err(Error::InvalidInstance(format!(
                "need at least 3 cities, got {n}"
            )));
        }
        for (i, row) in distances.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &d) in row.iter().enumerate() {
                if i == j {
                    if d != 0.0 {
                        return Err(Error::InvalidInstance(format!("nonzero diagonal at {i}")));
                    }
                } else if !(d.is_finite() && d > 0.0) {
                    return Err(Error::InvalidInstance(format!(
                        "distance {i}-{j} must be finite and positive, got {d}"
                    )));
                } else if d != distances[j][i] {
                    return Err(Error::InvalidInstance(format!(
                        "asymmetric distance {i}-{j}"
                    )));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            coordinates: None,
            distances,
        })
    }

    /// Parses the plain-text format: `n` on the first line, then `n` lines
    /// of `id x y`. Blank lines are skipped. Cities keep file order.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines
            .next()
            .ok_or_else(|| Error::InvalidInstance("empty file".into()))?;
        let n: usize = first.parse().map_err(|_| {
            Error::InvalidInstance(format!("line {ln}: expected city count, got `{first}`"))
        })?;
        let mut ids = std::collections::HashSet::new();
        let mut coords = Vec::with_capacity(n);
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::InvalidInstance(format!(
                    "line {ln}: expected `id x y`"
                )));
            }
            let num = |s: &str| {
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::InvalidInstance(format!("line {ln}: bad number `{s}`")))
            };
            if !ids.insert(fields[0].to_string()) {
                return Err(Error::InvalidInstance(format!(
                    "line {ln}: duplicate id `{}`",
                    fields[0]
                )));
            }
            coords.push((num(fields[1])?, num(fields[2])?));
        }
        if coords.len() != n {
            return Err(Error::InvalidInstance(format!(
                "header says {n} cities, found {}",
                coords.len()
            )));
        }
        Self::from_coordinates(name, coords)
    }

    /// Reads a file; the instance is named after the file stem.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInstance(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "tsp".into());
        Self::parse(name, &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_cities(&self) -> usize {
        self.distances.len()
    }

    pub fn coordinates(&self) -> Option<&[(f64, f64)]> {
        self.coordinates.as_deref()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.distances[i][j]
    }

    /// Cyclic length of a visiting order.
    pub fn tour_length(&self, order: &[usize]) -> f64 {
        let n = order.len();
        (0..n)
            .map(|k| self.distance(order[k], order[(k + 1) % n]))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tour {
    pub order: Vec<usize>,
    pub length: f64,
}

impl Tour {
    pub fn new(instance: &TspInstance, order: Vec<usize>) -> Self {
        let length = instance.tour_length(&order);
        Self { order, length }
    }

    /// Every undirected edge of the cycle as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |k| {
            let (a, b) = (self.order[k], self.order[(k + 1) % n]);
            (a.min(b), a.max(b))
        })
    }

    pub fn is_valid_for(&self, instance: &TspInstance) -> bool {
        let mut seen = vec![false; instance.n_cities()];
        self.order.len() == instance.n_cities()
            && self
                .order
                .iter()
                .all(|&c| c < seen.len() && !std::mem::replace(&mut seen[c], true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_square() {
        let inst = TspInstance::parse("sq", "4\n1 0 0\n2 1 0\n\n3 1 1\n4 0 1\n").unwrap();
        assert_eq!(inst.n_cities(), 4);
        assert_eq!(inst.distance(0, 1), 1.0);
        assert_eq!(inst.distance(0, 2), 2f64.sqrt());
        assert_eq!(inst.tour_length(&[0, 1, 2, 3]), 4.0);
    }

    #[test]
    fn parse_errors() {
        assert!(TspInstance::parse("x", "").is_err());
        assert!(TspInstance::parse("x", "three\n").is_err());
        assert!(TspInstance::parse("x", "3\n1 0 0\n2 1 0\n").is_err());
        assert!(TspInstance::parse("x", "3\n1 0 0\n2 1 0\n3 1\n").is_err());
        assert!(TspInstance::parse("x", "3\n1 0 0\n1 1 0\n3 1 1\n").is_err());
        // coincident cities give a zero off-diagonal distance
        assert!(TspInstance::parse("x", "3\n1 0 0\n2 0 0\n3 1 1\n").is_err());
    }

    #[test]
    fn matrix_checks() {
        let ok = vec![
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.5],
            vec![2.0, 1.5, 0.0],
        ];
        assert!(TspInstance::from_matrix("m", ok.clone()).is_ok());
        let mut asym = ok.clone();
        asym[0][1] = 3.0;
        assert!(TspInstance::from_matrix("m", asym).is_err());
        assert!(TspInstance::from_matrix("m", vec![vec![0.0, 1.0], vec![1.0, 0.0]]).is_err());
    }

    #[test]
    fn tour_validity() {
        let inst = TspInstance::parse("sq", "4\na 0 0\nb 1 0\nc 1 1\nd 0 1").unwrap();
        assert!(Tour::new(&inst, vec![2, 0, 1, 3]).is_valid_for(&inst));
        assert!(!Tour::new(&inst, vec![0, 0, 1, 3]).is_valid_for(&inst));
        assert!(!Tour::new(&inst, vec![0, 1, 2]).is_valid_for(&inst));
    }
}
