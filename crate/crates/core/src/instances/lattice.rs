//! Lattice Heisenberg algebras: `Sym^⊗I` paired by `k⟨v_i, v_j⟩_L`.

use super::cartan::CartanData;
use super::qheis::{colored_pairing, ColoredGenerators};
use super::sym::FormKind;
use crate::double::{DoubleContext, HeisenbergDouble, RelationContext};
use crate::error::Result;
use crate::pairing::TwistedPairing;

#[derive(Clone, Debug)]
pub struct Lattice {
    pub form: CartanData,
    pub pairing: TwistedPairing,
    pub context: DoubleContext,
}

/// A double when the form is nondegenerate; otherwise only the smash
/// relations, with no claim that they present a double.
pub fn build_lattice(form: &CartanData) -> Result<Lattice> {
    let pairing = colored_pairing("lattice", form, FormKind::Lattice)?;
    let context = if form.determinant().is_zero() {
        DoubleContext::PresentationOnly(RelationContext::new(
            pairing.clone(),
            "the lattice form is degenerate, so the pairing is not perfect",
        )?)
    } else {
        DoubleContext::Double(HeisenbergDouble::new(pairing.clone())?)
    };
    Ok(Lattice {
        form: form.clone(),
        pairing,
        context,
    })
}

impl Lattice {
    pub fn generators(&self) -> ColoredGenerators {
        ColoredGenerators::new(self.pairing.clone(), self.form.colors(), false)
    }

    /// Every Gram entry up to total degree `n` lies in ℚ.
    pub fn is_q_free(&self, n: u32) -> bool {
        self.pairing
            .gram_blocks(n)
            .iter()
            .all(|g| g.matrix.to_rows().iter().flatten().all(|c| c.is_constant()))
    }
}
