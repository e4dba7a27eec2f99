"""The four G2 forms on su(2)+su(2)+R used across the tests, built independently of the JSON catalog."""

from g2forge.forms import AltForm, wedge
from g2forge.g2core import G2FormData, standard_phi
from g2forge.liegeom import LieAlgebra
from g2forge.scalar import SQRT2
from g2forge.torsion import G2Structure

from builders import R3_SU2_U1, SU2_SU2_U1

F = AltForm.from_terms(2, [((1, 4), 1), ((2, 5), 1), ((3, 6), -1)])
PSI_PLUS = AltForm.from_terms(3, [((1, 2, 3), 1), ((1, 5, 6), 1), ((2, 4, 6), -1), ((3, 4, 5), -1)])
PSI_MINUS = AltForm.from_terms(3, [((4, 5, 6), 1), ((2, 3, 4), 1), ((1, 3, 5), -1), ((1, 2, 6), -1)])
E7 = AltForm(1, {(7,): 1})


def phi_t(cos, sin) -> G2FormData:
    return G2FormData(wedge(F, E7) + PSI_PLUS * cos + PSI_MINUS * sin)


SU = LieAlgebra.from_brackets(SU2_SU2_U1)
R3 = LieAlgebra.from_brackets(R3_SU2_U1)
HALF_SQRT2 = SQRT2 / 2

STRUCTURES = {
    "abelian": G2Structure(LieAlgebra.abelian(), standard_phi(), "abelian"),
    "su2su2u1_phi0": G2Structure(SU, phi_t(1, 0), "su2su2u1_phi0"),
    "su2su2u1_phi_pi4": G2Structure(SU, phi_t(HALF_SQRT2, HALF_SQRT2), "su2su2u1_phi_pi4"),
    "su2su2u1_phi_3pi4": G2Structure(SU, phi_t(-HALF_SQRT2, HALF_SQRT2), "su2su2u1_phi_3pi4"),
    "su2su2u1_standard_phi": G2Structure(SU, standard_phi(), "su2su2u1_standard_phi"),
    "r3su2u1_standard_phi": G2Structure(R3, standard_phi(), "r3su2u1_standard_phi"),
}
SU_NAMES = [n for n in STRUCTURES if n.startswith("su2su2u1")]
