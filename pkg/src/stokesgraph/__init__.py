"""Standard graphs of Stokes data, braid monodromy actions and their orbits."""
from stokesgraph.actions import BraidWord, act_basic, act_squared, apply_word, apply_word_cell
from stokesgraph.cellgraph import CellGraph, TruncationError, to_cell_graph, to_standard, validate_cell
from stokesgraph.config import ConfigError, SectorConfig
from stokesgraph.contraction import (
    ContractionError,
    exchange_YV,
    merge_YY,
    to_ivy,
    to_one_y,
    to_single_junction,
    y_to_v_with_I,
)
from stokesgraph.enumeration import (
    ChordDiagram,
    enum_chord_diagrams,
    enum_junction_trees,
    enum_standard_graphs,
    schroeder,
)
from stokesgraph.graph import (
    GraphError,
    Ray,
    StandardGraph,
    bounded_face_count,
    canonicalize,
    find_structure,
    is_ivy,
    star,
    u_metric,
    validate_standard,
)
from stokesgraph.loops import LoopSystem, b_action, project, verify_commutation, word_action
from stokesgraph.orbits import classify_components, orbit_bfs, zeros_of_eigenfunction

__version__ = "0.1.0"
