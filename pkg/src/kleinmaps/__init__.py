"""Maps and hypermaps on compact Klein surfaces as triples of involutions."""
from .blades import (BladeSystem, Passport, SurfaceType, boundary, canonical_form, classify,
                     complex_double, euler_characteristic, is_isomorphic, map_type,
                     orientability, passport, validate)
from .census import CensusQuery, count, enumerate_census
from .darts import DartMap, dart_euler, dart_genus, orient, to_blades
from .perm import Permutation
from .triangle import INFINITY, TriangleSignature, builtin_signature

__version__ = "0.1.0"
