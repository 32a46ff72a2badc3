"""Value backends: exact dyadic arithmetic or IEEE floats.

The forward engine can run either way.  The exact backend is the reference;
the float backend trades exactness for vectorized speed and reports a rigorous
error bound instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import Dyadic


@dataclass(frozen=True)
class ValueBackend:
    """Selects how weights and values are represented.

    kind is "exact" (arbitrary-precision dyadic) or "float" (binary64).
    Both are deterministic: results are a pure function of the inputs,
    independent of thread count, hash seeding, and iteration order.
    """

    kind: str
    deterministic: bool = True

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown backend kind: {self.kind!r}")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def format_value(self, value) -> str:
        if isinstance(value, Dyadic):
            return value.decimal()
        return repr(float(value))


EXACT = ValueBackend("exact")
FLOAT = ValueBackend("float")


def get_backend(name: str) -> ValueBackend:
    if name == "exact":
        return EXACT
    if name == "float":
        return FLOAT
    raise ValueError(f"unknown backend: {name!r} (expected 'exact' or 'float')")
