use std::fmt;

use thiserror::Error;

use super::Pattern;
use crate::rules::Rule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("pattern grew to {width}x{height}, beyond the {max_width}x{max_height} bound")]
    TooLarge {
        width: usize,
        height: usize,
        max_width: usize,
        max_height: usize,
    },
}

/// Period and displacement of a spaceship.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShipDescriptor {
    pub period: u32,
    pub dx: i64,
    pub dy: i64,
}

/// Direction of travel as `dy/dx` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slope {
    Vertical,
    Ratio(i64, i64),
}

impl ShipDescriptor {
    /// `(max(|dx|, |dy|), period)`, read as "numerator c / period".
    pub fn speed(&self) -> (u64, u32) {
        (self.dx.unsigned_abs().max(self.dy.unsigned_abs()), self.period)
    }

    pub fn slope(&self) -> Slope {
        if self.dx == 0 {
            return Slope::Vertical;
        }
        let g = gcd(self.dx.unsigned_abs(), self.dy.unsigned_abs()) as i64;
        let (mut num, mut den) = (self.dy / g, self.dx / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Slope::Ratio(num, den)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.dx == 0 || self.dy == 0
    }

    pub fn is_diagonal(&self) -> bool {
        self.dx.abs() == self.dy.abs()
    }

    /// Speed written as `mc/p`, followed by the reduced form when it differs,
    /// e.g. `2c/4 = c/2`.
    pub fn speed_string(&self) -> String {
        let (m, p) = self.speed();
        let g = gcd(m, p as u64);
        let s = speed_fraction(m, p as u64);
        if g > 1 {
            format!("{s} = {}", speed_fraction(m / g, p as u64 / g))
        } else {
            s
        }
    }
}

fn speed_fraction(m: u64, p: u64) -> String {
    match (m, p) {
        (1, 1) => "c".to_string(),
        (m, 1) => format!("{m}c"),
        (1, p) => format!("c/{p}"),
        (m, p) => format!("{m}c/{p}"),
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for ShipDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "period {}, dx {}, dy {}, speed {}",
            self.period,
            self.dx,
            self.dy,
            self.speed_string()
        )?;
        match self.slope() {
            Slope::Vertical => write!(f, ", slope vertical"),
            Slope::Ratio(n, 1) => write!(f, ", slope {n}"),
            Slope::Ratio(n, d) => write!(f, ", slope {n}/{d}"),
        }
    }
}

/// Outcome of running a pattern until it recurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Empty,
    /// Died out after this many generations.
    Dies(u32),
    /// Recurred in place (a still life when the period is 1).
    Oscillator(u32),
    Ship(ShipDescriptor),
    /// Did not recur within the generation budget.
    Unknown,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Empty => write!(f, "not a spaceship (empty)"),
            Classification::Dies(g) => write!(f, "not a spaceship (dies after {g} generations)"),
            Classification::Oscillator(1) => write!(f, "not a spaceship (still life)"),
            Classification::Oscillator(p) => write!(f, "not a spaceship (oscillator, period {p})"),
            Classification::Ship(d) => write!(f, "{d}"),
            Classification::Unknown => write!(f, "not a spaceship (no recurrence found)"),
        }
    }
}

/// Evolves `pattern` for up to `max_period` generations and reports the
/// first exact recurrence, comparing trimmed patterns and tracking the
/// bounding-box displacement.
///
/// The bounding box is capped at four times the original dimensions plus
/// `2 * max_period`; a pattern exceeding it cannot be a ship of that period.
pub fn classify(
    rule: &Rule,
    pattern: &Pattern,
    max_period: u32,
) -> Result<Classification, ClassifyError> {
    let table = rule.table();
    let original = pattern.trimmed();
    if original.is_empty() {
        return Ok(Classification::Empty);
    }
    let max_width = 4 * original.width() + 2 * max_period as usize;
    let max_height = 4 * original.height() + 2 * max_period as usize;
    let mut current = original.clone();
    let (mut x, mut y) = (0i64, 0i64);
    for generation in 1..=max_period {
        let (next, (dx, dy)) = current.step(&table);
        if next.is_empty() {
            return Ok(Classification::Dies(generation));
        }
        if next.width() > max_width || next.height() > max_height {
            return Err(ClassifyError::TooLarge {
                width: next.width(),
                height: next.height(),
                max_width,
                max_height,
            });
        }
        x += dx;
        y += dy;
        current = next;
        if current == original {
            return Ok(if (x, y) == (0, 0) {
                Classification::Oscillator(generation)
            } else {
                Classification::Ship(ShipDescriptor {
                    period: generation,
                    dx: x,
                    dy: y,
                })
            });
        }
    }
    Ok(Classification::Unknown)
}

/// Returns the ship descriptor if `pattern` is a spaceship with period at
/// most `max_period`.
pub fn classify_ship(
    rule: &Rule,
    pattern: &Pattern,
    max_period: u32,
) -> Result<Option<ShipDescriptor>, ClassifyError> {
    Ok(match classify(rule, pattern, max_period)? {
        Classification::Ship(d) => Some(d),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glider_is_a_c4_diagonal_ship() {
        let glider = Pattern::from_text(&[".o.", "..o", "ooo"]);
        let d = classify_ship(&Rule::LIFE, &glider, 4).unwrap().unwrap();
        assert_eq!((d.period, d.dx, d.dy), (4, 1, 1));
        assert!(d.is_diagonal());
        assert_eq!(d.speed(), (1, 4));
        assert_eq!(d.speed_string(), "c/4");
        assert_eq!(d.slope(), Slope::Ratio(1, 1));
    }

    #[test]
    fn lwss_is_c2_orthogonal() {
        let lwss = Pattern::from_text(&[".o..o", "o....", "o...o", "oooo."]);
        let d = classify_ship(&Rule::LIFE, &lwss, 4).unwrap().unwrap();
        assert_eq!(d.period, 4);
        assert_eq!(d.dx.abs(), 2);
        assert_eq!(d.dy, 0);
        assert_eq!(d.speed_string(), "2c/4 = c/2");
    }

    #[test]
    fn oscillators_and_still_lifes_are_not_ships() {
        let blinker = Pattern::from_text(&["ooo"]);
        assert_eq!(classify_ship(&Rule::LIFE, &blinker, 4).unwrap(), None);
        assert_eq!(
            classify(&Rule::LIFE, &blinker, 4).unwrap(),
            Classification::Oscillator(2)
        );
        let block = Pattern::from_text(&["oo", "oo"]);
        assert_eq!(
            classify(&Rule::LIFE, &block, 4).unwrap(),
            Classification::Oscillator(1)
        );
        assert_eq!(classify_ship(&Rule::LIFE, &block, 4).unwrap(), None);
    }

    #[test]
    fn empty_and_dying() {
        assert_eq!(
            classify(&Rule::LIFE, &Pattern::empty(), 4).unwrap(),
            Classification::Empty
        );
        let single = Pattern::from_text(&["o"]);
        assert_eq!(
            classify(&Rule::LIFE, &single, 4).unwrap(),
            Classification::Dies(1)
        );
    }

    #[test]
    fn unbounded_growth_has_no_recurrence() {
        // In B1/S012345678 a single cell grows by one cell per side each step.
        let rule = Rule::new(&[1], &[0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        let single = Pattern::from_text(&["o"]);
        assert_eq!(classify(&rule, &single, 8), Ok(Classification::Unknown));
    }

    #[test]
    fn display_forms() {
        let d = ShipDescriptor {
            period: 4,
            dx: 0,
            dy: 2,
        };
        assert_eq!(
            d.to_string(),
            "period 4, dx 0, dy 2, speed 2c/4 = c/2, slope vertical"
        );
        assert_eq!(
            Classification::Oscillator(2).to_string(),
            "not a spaceship (oscillator, period 2)"
        );
    }
}
