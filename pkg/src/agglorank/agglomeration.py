"""Agglomeration, average path length, and contraction-based node importance.

All values are exact rationals.  ``Rational`` is ``fractions.Fraction``: it is
always reduced with a positive denominator, and since Python integers have
arbitrary precision the arithmetic can never overflow or wrap.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .contraction import contract
from .errors import DegenerateOrderError
from .graph import Graph, distance_sum

Rational = Fraction


@dataclass(frozen=True)
class ImcEntry:
    """Importance of one node: 1 - phi(G)/phi(G with the node contracted)."""

    node: int
    imc: Fraction
    contracted_order: int


@dataclass(frozen=True)
class RankReport:
    """Full ranking: graph-level phi and average path length, plus one entry
    per node sorted by importance descending, ties broken by ascending id."""

    phi: Fraction
    avg_path_length: Fraction
    entries: tuple[ImcEntry, ...]


def average_path_length(g: Graph) -> Fraction:
    """Mean shortest-path distance over ordered distinct node pairs."""
    if g.n < 2:
        raise DegenerateOrderError("average path length requires at least two nodes")
    return Fraction(distance_sum(g), g.n * (g.n - 1))


def phi(g: Graph) -> Fraction:
    """Agglomeration of g: (n - 1) / (sum of all ordered pairwise distances).

    The 1-node graph gets the maximum value 1.  For every connected graph the
    result lies in (0, 1], and equals 1 only when n = 1.
    """
    if g.n == 1:
        return Fraction(1)
    return Fraction(g.n - 1, distance_sum(g))


def _imc_entry(g: Graph, v: int, phi_g: Fraction) -> ImcEntry:
    contracted = contract(g, v).graph
    return ImcEntry(node=v, imc=1 - phi_g / phi(contracted), contracted_order=contracted.n)


def imc(g: Graph, v: int) -> ImcEntry:
    """Importance of node v by contraction."""
    if g.n < 2:
        raise DegenerateOrderError("importance requires at least two nodes")
    return _imc_entry(g, v, phi(g))


def imc_all(g: Graph, *, jobs: int = 1) -> RankReport:
    """Rank every node.  The report is identical regardless of ``jobs``.

    Per-node work is independent, so with jobs > 1 it fans out across a thread
    pool; entries are always merged back in node order before ranking.
    """
    if g.n < 2:
        raise DegenerateOrderError("ranking requires at least two nodes")
    total = distance_sum(g)
    phi_g = Fraction(g.n - 1, total)
    length = Fraction(total, g.n * (g.n - 1))
    nodes = range(g.n)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(lambda v: _imc_entry(g, v, phi_g), nodes))
    else:
        entries = [_imc_entry(g, v, phi_g) for v in nodes]
    entries.sort(key=lambda e: (-e.imc, e.node))
    return RankReport(phi=phi_g, avg_path_length=length, entries=tuple(entries))
