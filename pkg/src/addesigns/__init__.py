"""Additive block designs over exact finite fields.

Constructions of classical 2-designs (difference-set developments, Paley,
Singer, PG_d(n,q), AG_d(n,q)), embeddings into abelian groups with
zero-sum blocks, and exhaustive verifiers for additivity and strong
additivity.
"""

from . import additivity, designs, errors, geometry, gf

__all__ = ["gf", "geometry", "designs", "additivity", "errors"]
