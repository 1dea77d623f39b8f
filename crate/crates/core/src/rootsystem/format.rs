//! Coordinate text format: `"1211"`, or `"1,2,1,1"` when any coordinate
//! needs more than one digit.

use super::RootSystem;
use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::Coord;

impl RootSystem {
    pub fn format_root(&self, i: usize) -> String {
        format_coords(self.root(i))
    }

    pub fn format_set(&self, set: RootSet) -> Vec<String> {
        set.iter().map(|i| self.format_root(i)).collect()
    }

    /// Parses one root in digit or comma form and returns its index.
    pub fn parse_root(&self, s: &str) -> Result<usize> {
        let coords = parse_coords(s, self.rank())?;
        self.index_of(&coords)
            .ok_or_else(|| Error::UnknownRoot(s.trim().to_string(), self.label().to_string()))
    }

    /// Parses a list of roots. Roots are separated by `;` when present;
    /// otherwise by `,`, in which case either every token is a full digit
    /// string or the tokens are single coordinates grouped by rank.
    pub fn parse_roots(&self, s: &str) -> Result<Vec<usize>> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Vec::new());
        }
        if s.contains(';') {
            return s.split(';').filter(|t| !t.trim().is_empty()).map(|t| self.parse_root(t)).collect();
        }
        let rank = self.rank();
        let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        if tokens.iter().all(|t| t.len() == rank) {
            tokens.iter().map(|t| self.parse_root(t)).collect()
        } else if tokens.len().is_multiple_of(rank) {
            tokens.chunks(rank).map(|c| self.parse_root(&c.join(","))).collect()
        } else {
            Err(Error::BadCoordinates(s.to_string()))
        }
    }
}

pub fn format_coords(c: &[Coord]) -> String {
    if c.iter().all(|&x| (0..10).contains(&x)) {
        c.iter().map(|x| char::from(b'0' + *x as u8)).collect()
    } else {
        c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_coords(s: &str, rank: usize) -> Result<Vec<Coord>> {
    let s = s.trim();
    let bad = || Error::BadCoordinates(s.to_string());
    let coords: Vec<Coord> = if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<Coord>().map_err(|_| bad())).collect::<Result<_>>()?
    } else {
        s.chars().map(|c| c.to_digit(10).map(Coord::from).ok_or_else(bad)).collect::<Result<_>>()?
    };
    if coords.len() != rank {
        return Err(bad());
    }
    Ok(coords)
}
