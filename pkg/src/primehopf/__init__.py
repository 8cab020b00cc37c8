"""Exact computations in the prime regular Hopf algebras of GK-dimension one."""

from .scalars import CyclotomicScalar, multiplicative_order, parse_scalar, primitive_root, qbinom, root_of_unity
from .presentations import FamilySpec, HopfPresentation, find_i0, liu_generator_conversion, make_family
from .hopf import TruncationWindow, antipode, coproduct, counit, grouplikes, skew_primitives, verify_hopf_axioms
from .winding import (
    Character,
    WindingAuto,
    character_order,
    convolve,
    graded_decomposition,
    integral_character,
    io_im,
    jiq,
    pi_degree,
    strong_grading_witness,
    winding_auto,
)
from .twistor import coproduct_table, twistor, twistor_iso, verify_section6
from .classify import ClassificationQuery, IsoVerdict, classify, family_iso, hopf_iso_check, report, run_suite

__version__ = "0.1.0"
