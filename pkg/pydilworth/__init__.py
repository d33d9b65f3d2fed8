"""
pydilworth
==========

Exact zero-error parameters of directed graphs and bounds on their
Dilworth rate: the growth rate of the chromatic number of AND powers.

Modules:
--------
digraph
    Digraph type, graph files, closure graphs, acyclicity and transitivity tests
families
    Named families (cycles, tournaments, A5, the Bollobás graph F, ...)
products
    AND/OR products and powers, sequence codec, type classes
exact
    Independence, clique, acyclicity, chromatic and dichromatic numbers with certificates
fractional
    Maximal set enumeration and exact-rational covering LPs
rates
    Sperner/Gamma brackets, Dilworth rate reports, compound families, tournament scans
protocol
    Confirmation and complete-decoding protocol checks
extremal
    Antichain covers and cross-intersecting set-pair families
cli
    The ``pydilworth`` command
"""

__version__ = '0.1.0'

# Standard logging available to package module imports
import logging

# Re-export configuration and solver base
from .base import Limits as Limits
from .base import SolverTemplate as SolverTemplate

# Re-export graph types and constructions
from .digraph import Digraph as Digraph
from .digraph import closure_gadget as closure_gadget
from .digraph import closure_graph as closure_graph
from .digraph import is_closure_realizable as is_closure_realizable
from .digraph import is_vertex_transitive as is_vertex_transitive
from .digraph import read_graph as read_graph
from .digraph import transform as transform
from .digraph import write_graph as write_graph

# Re-export solvers and certificates
from .exact import AcyclicCover as AcyclicCover
from .exact import Coloring as Coloring
from .exact import ParamResult as ParamResult
from .exact import SubsetCertificate as SubsetCertificate
from .exact import acyclicity_number as acyclicity_number
from .exact import chromatic_number as chromatic_number
from .exact import constructive_power_coloring as constructive_power_coloring
from .exact import dichromatic_number as dichromatic_number
from .exact import independence_number as independence_number
from .exact import symmetric_clique_number as symmetric_clique_number
from .exact import transitive_clique_number as transitive_clique_number
from .exact import verify_certificate as verify_certificate
from .extremal import antichain_cover as antichain_cover
from .extremal import bollobas_cover_bounds as bollobas_cover_bounds
from .families import generate_family as generate_family
from .fractional import fractional_chromatic as fractional_chromatic
from .fractional import fractional_dichromatic as fractional_dichromatic
from .products import and_power as and_power
from .products import or_power as or_power
from .protocol import ChannelModel as ChannelModel
from .protocol import confirm_protocol_check as confirm_protocol_check
from .protocol import decode_protocol_check as decode_protocol_check
from .rates import dilworth_bounds as dilworth_bounds

logging.getLogger(__name__).addHandler(logging.NullHandler())
