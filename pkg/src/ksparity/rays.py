"""Projective 4-vectors with components in {0, +-1, +-i}.

Components are kept as Python ``complex`` values. Every quantity derived from
them in this package (inner products, 3x3 minors) is a small Gaussian
integer, which binary floating point represents exactly, so equality tests
here are exact. :class:`~ksparity.scalars.ExactScalar` is used where sqrt 2
enters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .scalars import ExactScalar

UNITS = (1, -1, 1j, -1j)
ALLOWED = (0, 1, -1, 1j, -1j)

_TOKEN = {0: "0", 1: "1", -1: "-1", 1j: "i", -1j: "-i"}
_PARSE = {"0": 0, "1": 1, "-1": -1, "i": 1j, "-i": -1j}
_COMPACT = re.compile(r"-?[01i]")


class RayError(ValueError):
    pass


def _clean(z: complex) -> complex:
    # normalise -0.0 so that hashing and equality agree
    return complex(z.real + 0.0, z.imag + 0.0)


@dataclass(frozen=True)
class Ray:
    components: tuple[complex, complex, complex, complex]
    id: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        comps = tuple(_clean(complex(c)) for c in self.components)
        if len(comps) != 4:
            raise RayError("a ray has exactly four components")
        if not any(comps):
            raise RayError("zero vector is not a ray")
        object.__setattr__(self, "components", comps)

    @property
    def norm2(self) -> int:
        return int(sum(c.real * c.real + c.imag * c.imag for c in self.components))

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0 for c in self.components)

    def is_canonical(self) -> bool:
        first = next(c for c in self.components if c)
        return first == 1 and all(c in ALLOWED for c in self.components)

    def text(self) -> str:
        return ",".join(_TOKEN[c] for c in self.components)

    def compact(self) -> str:
        """Compact string without separators, e.g. ``1ii-1``."""
        return "".join(_TOKEN[c] for c in self.components)

    def to_json(self, normalized: bool = False):
        pairs = [[int(c.real), int(c.imag)] for c in self.components]
        if not normalized:
            return pairs
        # norm2 is 1, 2 or 4, i.e. (sqrt2)**e with e = 0, 1, 2
        return {"components": pairs, "sqrt2_exp": self.norm2.bit_length() - 1}

    def __str__(self) -> str:
        return self.text()


def ray_from_json(obj) -> Ray:
    pairs = obj["components"] if isinstance(obj, dict) else obj
    return Ray(tuple(complex(re, im) for re, im in pairs))


def parse_ray(text: str) -> Ray:
    """Parse ``"1,i,i,-1"`` or the compact ``"1ii-1"``."""
    text = text.strip()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = _COMPACT.findall(text)
        if "".join(tokens) != text:
            raise RayError(f"cannot parse ray {text!r}")
    try:
        return Ray(tuple(_PARSE[t] for t in tokens))
    except KeyError as exc:
        raise RayError(f"bad ray token {exc.args[0]!r} in {text!r}") from None


def _ip(r: Sequence[complex], s: Sequence[complex]) -> complex:
    return sum(a.conjugate() * b for a, b in zip(r, s))


def inner_product(r: Ray, s: Ray) -> ExactScalar:
    """Hermitian inner product, conjugate-linear in the first argument."""
    return ExactScalar.of(_ip(r.components, s.components))


def is_orthogonal(r: Ray, s: Ray) -> bool:
    return _ip(r.components, s.components) == 0


def is_unbiased(r: Ray, s: Ray) -> bool:
    """Normalized squared overlap equals 1/4."""
    z = _ip(r.components, s.components)
    return 4 * int(z.real * z.real + z.imag * z.imag) == r.norm2 * s.norm2


def canonicalize(v: Iterable) -> Ray:
    """Projective representative whose first nonzero component is +1."""
    vals = [ExactScalar.of(c) for c in v]
    if len(vals) != 4:
        raise RayError("a ray has exactly four components")
    lead = next((c for c in vals if not c.is_zero()), None)
    if lead is None:
        raise RayError("zero vector is not a ray")
    out = []
    for c in vals:
        q = c / lead
        if not q.is_gaussian_integer():
            raise RayError(f"{v!r} is not projectively a {{0,+-1,+-i}} vector")
        z = complex(int(q.ar), int(q.ai))
        if z not in ALLOWED:
            raise RayError(f"{v!r} is not projectively a {{0,+-1,+-i}} vector")
        out.append(z)
    return Ray(tuple(out))


def _det3(m) -> complex:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_dependent_triple(r: Ray, s: Ray, t: Ray) -> bool:
    """True iff the 3x4 component matrix has rank <= 2."""
    rows = (r.components, s.components, t.components)
    for cols in combinations(range(4), 3):
        if _det3([[row[c] for c in cols] for row in rows]) != 0:
            return False
    return True
