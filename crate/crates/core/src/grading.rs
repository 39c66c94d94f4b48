//! Z/2-gradings and superdimensions.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// (-1)^(|a||b|) as a boolean "negate?".
    pub fn sign_flip(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "0",
            Parity::Odd => "1",
        })
    }
}

/// Superdimension `even|odd`; serialized as a two-element array.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sdim {
    pub even: usize,
    pub odd: usize,
}

impl Sdim {
    pub const ZERO: Sdim = Sdim { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        Sdim { even, odd }
    }

    pub fn get(&self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    pub fn set(&mut self, parity: Parity, value: usize) {
        match parity {
            Parity::Even => self.even = value,
            Parity::Odd => self.odd = value,
        }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn checked_sub(self, rhs: Sdim) -> Option<Sdim> {
        Some(Sdim {
            even: self.even.checked_sub(rhs.even)?,
            odd: self.odd.checked_sub(rhs.odd)?,
        })
    }
}

impl Add for Sdim {
    type Output = Sdim;
    fn add(self, rhs: Sdim) -> Sdim {
        Sdim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl fmt::Display for Sdim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

impl Serialize for Sdim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.even, self.odd].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Sdim {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [even, odd] = <[usize; 2]>::deserialize(d)?;
        Ok(Sdim { even, odd })
    }
}
