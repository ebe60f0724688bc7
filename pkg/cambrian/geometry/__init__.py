from cambrian.geometry.cones import Provenance, SimplicialCone, cone_of, fan_check, meets_nicely
from cambrian.geometry.framework import FrameworkGraph, SlotKind, camb_graph, doubled_graph

__all__ = [
    "Provenance",
    "SimplicialCone",
    "cone_of",
    "meets_nicely",
    "fan_check",
    "FrameworkGraph",
    "SlotKind",
    "camb_graph",
    "doubled_graph",
]
