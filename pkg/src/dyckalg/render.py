"""Text renderings of paths and lattices."""

from __future__ import annotations

from .dyck import DyckPath, enumerate_paths, leq
from .heyting import regular_elements, regular_to_composition
from .posets import FinitePoset, hasse_dot


def render_ascii(p: DyckPath) -> str:
    """One row per height level, highest first; '/' for u, '\\' for d."""
    h = p.heights
    rows = []
    for level in range(max(h) - 1, -1, -1):
        row = []
        for i, s in enumerate(p.word):
            if s == "u" and h[i] == level:
                row.append("/")
            elif s == "d" and h[i + 1] == level:
                row.append("\\")
            else:
                row.append(" ")
        rows.append("".join(row).rstrip())
    return "\n".join(rows) + "\n"


def dyck_lattice(n: int) -> FinitePoset:
    return FinitePoset.from_leq(enumerate_paths(n), leq)


def regular_lattice(n: int) -> FinitePoset:
    return FinitePoset.from_leq(regular_elements(n), leq)


def dyck_lattice_dot(n: int) -> str:
    return hasse_dot(dyck_lattice(n), label=lambda p: p.word, name=f"D{n}")


def regular_lattice_dot(n: int) -> str:
    return hasse_dot(
        regular_lattice(n),
        label=lambda p: f"{regular_to_composition(p)} {p.word}",
        name=f"R{n}",
    )
