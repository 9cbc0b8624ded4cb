use alloc::string::String;
use alloc::vec;

use super::{AlgebraFlags, FiberDim, FiltrationDoc, FiltrationNode, NodeAnnotation, NodeKind};
use crate::coadjoint::has_open_orbits;
use crate::invariants::{check, GroupFlags, Refusal};
use crate::lie::{abelianization_dim, is_nilpotent, LieAlgebra};

/// Name of the quotient `C_0(ĝ_char)` by the kernel of the characters.
pub const CHARACTERS_NODE: &str = "characters";
/// Name of the ideal collecting the orbits other than the characters.
pub const ORBIT_LAYERS_NODE: &str = "orbit-layers";

/// Builds the filtration diagram of `C*(G)` for a simply connected
/// exponential group: an ideal of the non-character orbits, continuous trace
/// layer by layer, under the commutative quotient `C_0(ℝ^r)` of characters.
/// The layers below the characters are collapsed into one node carrying the
/// attributes they share.
pub fn derive_group_filtration(
    l: &LieAlgebra,
    flags: &GroupFlags,
) -> Result<FiltrationDoc, Refusal> {
    check(l, flags)?;
    let dim = l.dim() as u32;
    let r = abelianization_dim(l) as u32;

    let mut characters = NodeAnnotation::new(NodeKind::Commutative);
    characters.spectrum_dim = Some(r);
    characters.spectrum_compact = Some(false);
    characters.compactification_dim = Some(r);
    characters.hausdorff_spectrum = Some(true);
    characters.no_compact_spectrum_component = Some(true);
    characters.separable = Some(true);
    let characters = FiltrationNode {
        name: String::from(CHARACTERS_NODE),
        annotation: characters,
    };

    let algebra_flags = AlgebraFlags {
        liminary: is_nilpotent(l).then_some(true),
        group_derived: true,
        real_line: dim == 1,
    };

    let nodes = if l.is_abelian() {
        vec![characters]
    } else {
        let mut layers = NodeAnnotation::new(NodeKind::ContinuousTrace);
        layers.ambient_dim = Some(dim);
        layers.irreps_infinite_dim = Some(true);
        layers.separable = Some(true);
        layers.hausdorff_spectrum = Some(true);
        layers.fiber_dim = Some(FiberDim::Infinite);
        if has_open_orbits(l) {
            layers.no_compact_spectrum_component = Some(false);
        }
        vec![
            FiltrationNode {
                name: String::from(ORBIT_LAYERS_NODE),
                annotation: layers,
            },
            characters,
        ]
    };
    let doc = FiltrationDoc::new(nodes, algebra_flags)
        .expect("derived filtration is well formed");
    Ok(if l.is_abelian() {
        doc
    } else {
        doc.with_note("the layers below the characters are collapsed into one node")
    })
}
