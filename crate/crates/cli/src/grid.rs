//! Sweep grid files.
//!
//! One attack per line: `kind strengths=v1,v2,... [seeds=s1,s2,...]`.
//! Blank lines and `#` comments are ignored. Seeds default to `0`.

use std::str::FromStr;

use lsbmark::{AttackKind, AttackSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct GridLine {
    pub kind: AttackKind,
    pub strengths: Vec<f64>,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Grid {
    pub lines: Vec<GridLine>,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GridError {
    #[error("no attack cells")]
    Empty,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
}

impl Grid {
    /// Attack specs in grid order: line, then strength, then seed.
    pub fn cells(&self) -> impl Iterator<Item = AttackSpec> + '_ {
        self.lines.iter().flat_map(|l| {
            l.strengths
                .iter()
                .flat_map(move |&s| l.seeds.iter().map(move |&seed| AttackSpec::new(l.kind, s, seed)))
        })
    }

    pub fn cell_count(&self) -> usize {
        self.lines.iter().map(|l| l.strengths.len() * l.seeds.len()).sum()
    }
}

fn parse_list<T: FromStr>(value: &str, what: &str) -> Result<Vec<T>, String> {
    let items: Vec<T> = value
        .split(',')
        .map(|v| v.trim().parse().map_err(|_| format!("invalid {what} {v:?}")))
        .collect::<Result<_, _>>()?;
    if items.is_empty() {
        return Err(format!("empty {what} list"));
    }
    Ok(items)
}

impl FromStr for Grid {
    type Err = GridError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut grid = Grid::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |msg: String| GridError::Line { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let kind: AttackKind = words.next().unwrap_or("").parse().map_err(|e| err(format!("{e}")))?;
            let mut strengths = None;
            let mut seeds = None;
            for word in words {
                let (key, value) = word
                    .split_once('=')
                    .ok_or_else(|| err(format!("expected key=value, found {word:?}")))?;
                match key {
                    "strengths" => strengths = Some(parse_list::<f64>(value, "strength").map_err(err)?),
                    "seeds" => seeds = Some(parse_list::<u64>(value, "seed").map_err(err)?),
                    other => return Err(err(format!("unknown key {other:?}"))),
                }
            }
            let strengths = strengths.ok_or_else(|| err("missing strengths=".into()))?;
            let seeds = seeds.unwrap_or_else(|| vec![0]);
            for &s in &strengths {
                AttackSpec::new(kind, s, 0).validate().map_err(|e| err(e.to_string()))?;
            }
            grid.lines.push(GridLine { kind, strengths, seeds });
        }
        if grid.lines.is_empty() {
            return Err(GridError::Empty);
        }
        Ok(grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines_and_defaults() {
        let grid: Grid = "# noise\nsaltpepper strengths=0.001,0.002 seeds=1,2,3\n\ncrop strengths=10,20 # top strip\n"
            .parse()
            .unwrap();
        assert_eq!(grid.lines.len(), 2);
        assert_eq!(grid.lines[0].seeds, vec![1, 2, 3]);
        assert_eq!(grid.lines[1].seeds, vec![0]);
        assert_eq!(grid.cell_count(), 8);
        let cells: Vec<_> = grid.cells().collect();
        assert_eq!(cells[1], AttackSpec::new(AttackKind::SaltPepper, 0.001, 2));
        assert_eq!(cells[7], AttackSpec::new(AttackKind::Crop, 20.0, 0));
    }

    #[test]
    fn empty_grid_is_rejected() {
        assert_eq!("".parse::<Grid>(), Err(GridError::Empty));
        assert_eq!("# nothing\n\n".parse::<Grid>(), Err(GridError::Empty));
    }

    #[test]
    fn errors_name_the_line() {
        let e = "crop strengths=10\nrotate strengths=5\n".parse::<Grid>().unwrap_err();
        assert!(matches!(e, GridError::Line { line: 2, .. }), "{e}");
        let e = "blur strengths=-1".parse::<Grid>().unwrap_err();
        assert!(e.to_string().contains("line 1"), "{e}");
        assert!("crop".parse::<Grid>().is_err());
        assert!("crop strengths=a".parse::<Grid>().is_err());
        assert!("crop strengths=1 colour=red".parse::<Grid>().is_err());
    }
}
