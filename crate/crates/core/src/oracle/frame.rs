use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{partial_fractions, GaussianRational, RationalFunction};
use crate::error::{Error, Result};

/// A basis element of the coordinate frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Monomial(usize),
    Fraction(GaussianRational, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Monomial(j) => write!(f, "t^{j}"),
            Label::Fraction(lambda, k) => write!(f, "q({lambda},{k})"),
        }
    }
}

/// Coordinates on `span{t^j} ⊕ span{q_{λ,k}}` for a fixed finite label set.
#[derive(Clone, Debug, Default)]
pub struct CoordinateFrame {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl CoordinateFrame {
    /// The smallest frame in which every function of `fs` embeds.
    pub fn covering<'a>(fs: impl IntoIterator<Item = &'a RationalFunction>) -> Result<Self> {
        let mut frame = Self::default();
        for f in fs {
            if f.is_zero() {
                continue;
            }
            let pf = partial_fractions(f)?;
            for j in 0..pf.poly_part.coeffs().len() {
                frame.push(Label::Monomial(j));
            }
            for (pole, k) in pf.pole_orders() {
                for order in 1..=k {
                    frame.push(Label::Fraction(pole.clone(), order));
                }
            }
        }
        Ok(frame)
    }

    fn push(&mut self, label: Label) {
        if !self.index.contains_key(&label) {
            self.index.insert(label.clone(), self.labels.len());
            self.labels.push(label);
        }
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn embed(&self, f: &RationalFunction) -> Result<Vec<GaussianRational>> {
        let mut out = vec![GaussianRational::zero(); self.labels.len()];
        if f.is_zero() {
            return Ok(out);
        }
        let pf = partial_fractions(f)?;
        let mut place = |label: Label, c: &GaussianRational| -> Result<()> {
            if c.is_zero() {
                return Ok(());
            }
            let idx = *self.index.get(&label).ok_or_else(|| Error::FrameOverflow(format!("{label} of {f}")))?;
            out[idx] = c.clone();
            Ok(())
        };
        for (j, c) in pf.poly_part.coeffs().iter().enumerate() {
            place(Label::Monomial(j), c)?;
        }
        for t in &pf.terms {
            place(Label::Fraction(t.pole.clone(), t.order), &t.coefficient)?;
        }
        Ok(out)
    }
}
