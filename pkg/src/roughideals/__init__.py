"""Ideal-based rough approximations on finite relational structures.

Subsets are ``int`` bit masks over a :class:`Universe`; bit ``i`` stands for
the element of rank ``i``.  The submodules are:

``universe``        universes, relations and neighborhoods
``lattice_ideals``  set families, lattice ideals and their enumeration
``sigma``           ideals relative to an arbitrary relation
``approx``          the co-granular approximation operators
``mereo``           contact structures, clans and mereological approximations
``laws``            the algebraic laws checked by the harness
``harness``         oracles, instance generators and law suites
``instance``        the JSON instance document
``cli``             the ``roughideals`` command
"""

from .approx import (
    TAGS,
    ApproxResult,
    Granulation,
    ParallelContext,
    approx_antichain,
    approx_gosi,
    approx_gosih,
    approx_iad,
    approx_iasd,
    approx_kappa,
    approx_strong,
    cogranular,
    powerset_structure,
    rough_compare,
)
from .errors import (
    GuardExceededError,
    InvalidStructureError,
    MissingFamilyError,
    NotSupremalError,
    PropernessError,
    RoughIdealsError,
    SchemaError,
    UndefinedApproximationError,
    UnknownElementError,
    UsageError,
)
from .instance import InstanceDocument, load_instance, loads_instance, parse_instance
from .lattice_ideals import LatticeIdeal, SubsetFamily, enumerate_lattice_ideals, is_lattice_ideal
from .sigma import SigmaStructure, enumerate_sigma_ideals, is_sigma_ideal
from .universe import BinaryRelation, Universe, min_neighborhood

__version__ = "0.1.0"
