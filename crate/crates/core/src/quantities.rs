//! Physical constants and dimension-tagged scalars.
//!
//! Two constant profiles are provided. `paper` carries the rounded values
//! used in the back-of-the-envelope estimates (h = 7e-34 J s next to
//! hbar = 1e-34 J s, c = 3e8 m/s, ...), so the published arithmetic can be
//! reproduced digit for digit. `codata` carries reference values and is the
//! one to use for anything physical.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Meters per light year (Julian year), shared by both profiles.
pub const LIGHT_YEAR_M: f64 = 9.4607e15;

/// Named constant profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    Paper,
    Codata,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Paper => "paper",
            Profile::Codata => "codata",
        }
    }

    pub fn constants(self) -> Constants {
        match self {
            Profile::Paper => Constants::paper(),
            Profile::Codata => Constants::codata(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "paper" => Ok(Profile::Paper),
            "codata" => Ok(Profile::Codata),
            other => Err(Error::InvalidConfig(format!(
                "unknown constants profile `{other}` (expected `paper` or `codata`)"
            ))),
        }
    }
}

/// Physical constants in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub profile: Profile,
    /// Planck constant, J s.
    pub h: f64,
    /// Reduced Planck constant, J s.
    ///
    /// Equal to `h / 2π` in the `codata` profile. The `paper` profile keeps
    /// the independently rounded 1e-34 J s.
    pub hbar: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Joules per electronvolt.
    pub ev: f64,
    /// Meters per light year.
    pub ly: f64,
    pub moon_mass: f64,
    pub moon_radius: f64,
    pub earth_moon_distance: f64,
    /// Solar neutrino number flux at Earth, 1/(m² s).
    pub solar_neutrino_flux: f64,
}

impl Constants {
    pub fn paper() -> Self {
        Constants {
            profile: Profile::Paper,
            h: 7e-34,
            hbar: 1e-34,
            c: 3e8,
            ev: 1.6e-19,
            ly: LIGHT_YEAR_M,
            moon_mass: 7e22,
            moon_radius: 1.7e6,
            earth_moon_distance: 4e8,
            solar_neutrino_flux: 7e14,
        }
    }

    pub fn codata() -> Self {
        let h = 6.626_070_15e-34;
        Constants {
            profile: Profile::Codata,
            h,
            hbar: h / (2.0 * PI),
            c: 299_792_458.0,
            ev: 1.602_176_634e-19,
            ly: LIGHT_YEAR_M,
            moon_mass: 7.342e22,
            moon_radius: 1.7374e6,
            earth_moon_distance: 3.844e8,
            solar_neutrino_flux: 6.5e14,
        }
    }

    /// Looks a profile up by name (`"paper"` or `"codata"`).
    pub fn by_name(name: &str) -> Result<Self> {
        name.parse::<Profile>().map(Profile::constants)
    }

    /// `(name, value)` pairs for every constant, in a fixed order.
    pub fn entries(&self) -> [(&'static str, f64); 9] {
        [
            ("h", self.h),
            ("hbar", self.hbar),
            ("c", self.c),
            ("ev", self.ev),
            ("ly", self.ly),
            ("moon_mass", self.moon_mass),
            ("moon_radius", self.moon_radius),
            ("earth_moon_distance", self.earth_moon_distance),
            ("solar_neutrino_flux", self.solar_neutrino_flux),
        ]
    }

    /// Converts an energy in MeV to joules.
    pub fn mev_to_joule(&self, mev: f64) -> f64 {
        mev * 1e6 * self.ev
    }
}

/// Dimension tag carried by a [`Quantity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Length,
    Time,
    Energy,
    Momentum,
    Rate,
    Dimensionless,
}

impl Dimension {
    pub const ALL: [Dimension; 6] = [
        Dimension::Length,
        Dimension::Time,
        Dimension::Energy,
        Dimension::Momentum,
        Dimension::Rate,
        Dimension::Dimensionless,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Dimension::Length => "m",
            Dimension::Time => "s",
            Dimension::Energy => "J",
            Dimension::Momentum => "kg m/s",
            Dimension::Rate => "1/s",
            Dimension::Dimensionless => "1",
        }
    }
}

/// A scalar with a dimension tag. Only like-for-like arithmetic is allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub dim: Dimension,
}

impl Quantity {
    pub const fn new(value: f64, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub const fn length(value: f64) -> Self {
        Quantity::new(value, Dimension::Length)
    }

    pub const fn time(value: f64) -> Self {
        Quantity::new(value, Dimension::Time)
    }

    pub const fn energy(value: f64) -> Self {
        Quantity::new(value, Dimension::Energy)
    }

    pub const fn momentum(value: f64) -> Self {
        Quantity::new(value, Dimension::Momentum)
    }

    pub const fn rate(value: f64) -> Self {
        Quantity::new(value, Dimension::Rate)
    }

    pub const fn dimensionless(value: f64) -> Self {
        Quantity::new(value, Dimension::Dimensionless)
    }

    fn check(&self, other: &Quantity) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim.symbol(),
                right: other.dim.symbol(),
            })
        }
    }

    pub fn try_add(self, other: Quantity) -> Result<Quantity> {
        self.check(&other)?;
        Ok(Quantity::new(self.value + other.value, self.dim))
    }

    pub fn try_sub(self, other: Quantity) -> Result<Quantity> {
        self.check(&other)?;
        Ok(Quantity::new(self.value - other.value, self.dim))
    }

    /// Ratio of two like quantities, which is dimensionless.
    pub fn try_ratio(self, other: Quantity) -> Result<Quantity> {
        self.check(&other)?;
        Ok(Quantity::dimensionless(self.value / other.value))
    }

    pub fn try_cmp(self, other: Quantity) -> Result<Option<std::cmp::Ordering>> {
        self.check(&other)?;
        Ok(self.value.partial_cmp(&other.value))
    }
}

impl Mul<f64> for Quantity {
    type Output = Quantity;

    fn mul(self, rhs: f64) -> Quantity {
        Quantity::new(self.value * rhs, self.dim)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} {}", self.value, self.dim.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_profile_values() {
        let c = Constants::paper();
        assert_eq!(c.moon_mass, 7e22);
        assert_eq!(c.solar_neutrino_flux, 7e14);
        assert_eq!(c.hbar, 1e-34);
        assert_eq!(c.h, 7e-34);
    }

    #[test]
    fn codata_hbar_is_h_over_two_pi() {
        let c = Constants::codata();
        let ratio = c.hbar / c.h;
        assert!((ratio - 1.0 / (2.0 * PI)).abs() <= f64::EPSILON * ratio);
        assert!((c.hbar - c.h / (2.0 * PI)).abs() == 0.0);
    }

    #[test]
    fn unknown_profile_is_invalid_config() {
        assert!(matches!(
            Constants::by_name("cgs"),
            Err(Error::InvalidConfig(_))
        ));
        assert_eq!(
            Constants::by_name("codata").unwrap().profile,
            Profile::Codata
        );
    }

    #[test]
    fn all_constants_positive() {
        for profile in [Profile::Paper, Profile::Codata] {
            for (name, v) in profile.constants().entries() {
                assert!(v > 0.0 && v.is_finite(), "{profile}: {name} = {v}");
            }
        }
    }

    #[test]
    fn profiles_agree_within_factor_two() {
        let p = Constants::paper().entries();
        let c = Constants::codata().entries();
        for ((name, a), (_, b)) in p.iter().zip(c.iter()) {
            let r = a / b;
            assert!(r > 0.5 && r < 2.0, "{name}: paper {a} vs codata {b}");
        }
    }

    #[test]
    fn light_year_shared() {
        assert_eq!(Constants::paper().ly, 9.4607e15);
        assert_eq!(Constants::codata().ly, 9.4607e15);
    }

    #[test]
    fn dimension_pairs_checked() {
        for a in Dimension::ALL {
            for b in Dimension::ALL {
                let x = Quantity::new(1.5, a);
                let y = Quantity::new(0.5, b);
                let sum = x.try_add(y);
                let diff = x.try_sub(y);
                let ratio = x.try_ratio(y);
                let cmp = x.try_cmp(y);
                if a == b {
                    assert_eq!(sum.unwrap(), Quantity::new(2.0, a));
                    assert_eq!(diff.unwrap(), Quantity::new(1.0, a));
                    assert_eq!(ratio.unwrap(), Quantity::dimensionless(3.0));
                    assert!(cmp.is_ok());
                } else {
                    assert!(matches!(sum, Err(Error::DimensionMismatch { .. })));
                    assert!(diff.is_err() && ratio.is_err() && cmp.is_err());
                }
            }
        }
    }
}
