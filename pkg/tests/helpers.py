"""Glue between package assignments and the oracle's keying convention."""

from __future__ import annotations


def oracle_key(name: str):
    if name.startswith("v:"):
        return ("v", name[2:])
    if name.startswith("f:"):
        return ("f", frozenset(name[2:].split("+")))
    return frozenset(name.split("+"))


def to_oracle(scheme, assignment) -> dict:
    if scheme.domain == "vertices":
        return dict(assignment.colours)
    return {oracle_key(e): c for e, c in assignment.colours.items()}
