"""Announcement protocols for card deals, read as colorings of Johnson graphs."""

from .coloring import Coloring, parse_coloring, read_coloring, write_coloring
from .deck import Deal, Hand, Signature, all_deals, complement, deal_valid, enumerate_hands, make_signature
from .decode import decode_full, decode_min, learned_card
from .errors import CardCodesError
from .fixtures import FIXTURE_NAMES, builtin_fixture
from .johnson import GraphSpec, adjacent, clique_of, graph_stats, shift, zero_sum_two_arc
from .protocols import (FieldWeights, chi_2, chi_gf, chi_modn, dual_protocol, gf_coloring, modn_coloring,
                        parity_coloring, reduce_protocol, tabulate)
from .search import Constraints, SearchResult, chromatic_number_exact, exhaustive_partition_check, find_coloring
from .verify import (Report, check_ca2_ca3, check_informative, check_min_informative, check_safe,
                     check_solvability_bounds)

__version__ = "0.1.0"
