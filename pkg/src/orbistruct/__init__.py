"""orbistruct: inherited orbifold substructures from group-algebra chains."""

__version__ = "0.1.0"
