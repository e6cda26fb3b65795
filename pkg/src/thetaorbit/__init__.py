"""Exact Fourier-Jacobi expansions, orbit sums of theta functions,
and verification of theta relations."""

from .cyclotomic import CycNum, e_frac, rational, root_of_unity
from .series import INF, FJSeries, FormMeta
from .thetas import (
    Characteristic,
    HeisenbergElement,
    OrbitSet,
    eta,
    eta_power,
    orbit_set,
    orbit_theta,
    slash_heisenberg,
    theta,
    theta_char,
    theta_constant,
    theta_triple_product,
    xi,
)
from .eisenstein import (
    cohen_number,
    e21p,
    eisenstein_2k,
    g2,
    hecke_V,
    hp,
    hurwitz,
    jacobi_eisenstein,
    jacobi_eisenstein_1,
    kronecker,
)
from .spaces import (
    GENERATOR_NAMES,
    SpaceBasis,
    decompose,
    generator,
    holomorphic_subspace,
    weak_basis,
)
from .relations import (
    TrParams,
    a_form,
    check_form_axioms,
    product_orbit,
    product_reduced,
    registry,
    run_registry,
    search_relations,
    tr,
    verify_identity,
    verify_prop01,
    w_form,
)
from .applications import (
    TorsionPoint,
    theta_shifted,
    verify_class_number_identities,
    verify_derivative_formulas,
    verify_special_values,
    verify_wp_products,
)

__all__ = [
    "CycNum",
    "e_frac",
    "rational",
    "root_of_unity",
    "INF",
    "FJSeries",
    "FormMeta",
    "Characteristic",
    "HeisenbergElement",
    "OrbitSet",
    "eta",
    "eta_power",
    "orbit_set",
    "orbit_theta",
    "slash_heisenberg",
    "theta",
    "theta_char",
    "theta_constant",
    "theta_triple_product",
    "xi",
    "cohen_number",
    "e21p",
    "eisenstein_2k",
    "g2",
    "hecke_V",
    "hp",
    "hurwitz",
    "jacobi_eisenstein",
    "jacobi_eisenstein_1",
    "kronecker",
    "GENERATOR_NAMES",
    "SpaceBasis",
    "decompose",
    "generator",
    "holomorphic_subspace",
    "weak_basis",
    "TrParams",
    "a_form",
    "check_form_axioms",
    "product_orbit",
    "product_reduced",
    "registry",
    "run_registry",
    "search_relations",
    "tr",
    "verify_identity",
    "verify_prop01",
    "w_form",
    "TorsionPoint",
    "theta_shifted",
    "verify_class_number_identities",
    "verify_derivative_formulas",
    "verify_special_values",
    "verify_wp_products",
]

__version__ = "0.1.0"
