"""Motif mining and visual-pattern explanation for network visualizations."""

from .errors import (DanglingEndpoint, DegenerateRegion, EmptyNetwork,
                     MissingCoordinates, MissingOrdering, MotiflensError,
                     NotTemporal, ParseError, UnknownElement, UnknownInstance,
                     UnknownPair)
from .explain import (ARTIFACT_MESSAGE, MappingCase, SelectorSummary,
                      classify_mapping, data_facts, related_instances,
                      selector_summary)
from .geometry import (MATRIX, NODE_LINK, TIME_ARCS, VIZ_KINDS, Mark,
                       MarkGeometry, SelectionRegion, mark_geometry,
                       resolve_selection)
from .graph import (ElementSet, Link, Network, Node, Subgraph, basic_stats,
                    close_selection, elements)
from .layout import NodeCoordinates, force_layout
from .motifs import (BOTTOM_UP, TOP_DOWN, MiningResult, MotifKind,
                     PatternInstance, mine)
from .netio import load_network, load_network_file, serialize_network
from .repository import ExplanationCard, Repository, default_repository, get_card
from .seriation import NodeOrdering, barycenter_order

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
