"""Finite Abel-Grassmann groupoids: laws, inverses, structure and census."""

from ._kernels import USING_NUMBA
from .aggroup import (ag_group_report, is_ag_group, is_left_simple, lemma5_report,
                      lemma6_check, lemma7_check, theorem8_check)
from .census import CensusClass, CensusResult, enumerate_class, omega_cross_check, prop18_check
from .core import ElementSet, FiniteGroupoid, idempotents, induced, principal_ideals, product
from .derived import clifford_decompose, derive, derived_inverse, is_sga, prop11_check, prop14_check
from .errors import (AglabError, ClosureError, InputError, InvalidWitness, NotCompletelyInverse,
                     NotSemilatticeOfAbelianGroups, ParseError, SizeError, TheoremViolation)
from .inflation import inflate, is_inflation_of, theorem10_check
from .inverses import (classify, completely_inverse_map, inverse_data, is_cia,
                       is_completely_inverse, is_strongly_regular, strongly_regular_witness)
from .laws import Law, check_law, left_identities
from .morphisms import (are_isomorphic, aut2e, automorphisms, canonical_form, cor16_check,
                        theorem15_check)
from .structure import StructurePair, construct_thm20, extract_thm21, make_pair, roundtrip_cor22
from .tableio import load_fixture, parse_table, read_table, serialize, write_table

__version__ = "0.1.0"
