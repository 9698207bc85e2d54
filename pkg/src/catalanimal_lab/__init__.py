"""Exact q,t-combinatorics lab.

Constructs dens, nests, LLT polynomials, Catalanimals and semi-symmetric
Hall-Littlewood polynomials with exact integer/rational arithmetic, and
verifies the identities relating them coefficient by coefficient.
"""

from .exactnum import EpsReal, MultiLaurent, QtLaurent, SchurPoly

__all__ = ["QtLaurent", "MultiLaurent", "SchurPoly", "EpsReal"]
