"""Distance spectra of small graphs and exhaustive checks of lambda2 characterizations."""

from .catalog import Catalog, CatalogEntry, load_catalog
from .errors import BadArgument, CatalogError, DistSpecError, NotConnected, ParseError, TooSmall, Unsupported
from .graph import Graph, all_pairs_distances, complement, induced_subgraph, is_connected, parse_graph6, to_graph6
from .spectra import GOLDEN, HALF, Spectrum, distance_spectrum, eig_symmetric, lambda2

__version__ = "0.1.0"

__all__ = [
    "BadArgument",
    "Catalog",
    "CatalogEntry",
    "CatalogError",
    "DistSpecError",
    "GOLDEN",
    "Graph",
    "HALF",
    "NotConnected",
    "ParseError",
    "Spectrum",
    "TooSmall",
    "Unsupported",
    "all_pairs_distances",
    "complement",
    "distance_spectrum",
    "eig_symmetric",
    "induced_subgraph",
    "is_connected",
    "lambda2",
    "load_catalog",
    "parse_graph6",
    "to_graph6",
]
