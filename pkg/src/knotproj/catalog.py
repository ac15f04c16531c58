"""Symbolic descriptors of the spun-knot constructions and theorem checks.

Projection data (mu, the number of components of the singular set, and the
kind of singularities) cannot be computed without the actual immersions, so
every descriptor carries it as declared data together with a provenance note.
Higher-dimensional members of a family are produced by :func:`spin`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from typing import Union

from .exact_matrix import IntMatrix, LaurentMatrix
from .lambda_module import (
    ModulePresentation,
    cyclic_class,
    is_trivial,
    same_cyclic_module,
)
from .laurent import AlexanderClass, format_poly, lp_invert_variable, parse_poly
from .seifert import (
    KnottednessCertificate,
    SeifertMatrix,
    alexander_class,
    certificate_from_class,
    knottedness_certificate,
    mirror,
    reverse,
    validate_seifert,
)

SCHEMA_VERSION = 1

THEOREM1_SEIFERT = ((1, 1), (0, -1))
TREFOIL_SEIFERT = ((-1, 1), (0, -1))


class NoAlgebraicData(ValueError):
    pass


class Underlying(str, enum.Enum):
    SPHERE = "Sphere"
    PRODUCT_S3xS2 = "Product_S3xS2"
    OTHER = "Other"


class SingularKind(str, enum.Enum):
    NONE = "None"
    DOUBLE_POINTS_ONLY = "DoublePointsOnly"
    OTHER = "Other"


@dataclass(frozen=True)
class Base:
    label: str


@dataclass(frozen=True)
class Spin:
    child: "Construction"


Construction = Union[Base, Spin]


def spin_depth(c: Construction) -> int:
    depth = 0
    while isinstance(c, Spin):
        depth += 1
        c = c.child
    return depth


def base_of(c: Construction) -> Base:
    while isinstance(c, Spin):
        c = c.child
    return c


@dataclass(frozen=True)
class KnotDescriptor:
    name: str
    n: int
    underlying: Underlying
    mu: int
    singular_kind: SingularKind
    construction: Construction
    seifert: SeifertMatrix | None = None
    module_h3: ModulePresentation | None = None
    underlying_note: str = ""
    provenance: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "provenance", tuple(sorted(dict(self.provenance).items())))
        if self.n < 1:
            raise ValueError(f"knot dimension must be positive, got {self.n}")
        if self.mu < 0:
            raise ValueError("mu is a component count and cannot be negative")
        if (self.mu == 0) != (self.singular_kind is SingularKind.NONE):
            raise ValueError(f"mu={self.mu} is inconsistent with singular kind {self.singular_kind.value}")
        if self.seifert is not None and self.underlying is not Underlying.SPHERE:
            raise ValueError("Seifert matrices are only recorded for spheres")
        base_n = self.n - spin_depth(self.construction)
        if base_n < 1:
            raise ValueError("construction has more spins than the dimension allows")

    @property
    def base_n(self) -> int:
        return self.n - spin_depth(self.construction)

    def alexander(self) -> AlexanderClass:
        if self.seifert is not None:
            return alexander_class(self.seifert)
        if self.module_h3 is not None:
            return cyclic_class(self.module_h3)
        raise NoAlgebraicData(f"{self.name} carries neither a Seifert matrix nor a module")


def spin(K: KnotDescriptor) -> KnotDescriptor:
    """Spun knot one dimension up; projection combinatorics and algebra carry over."""
    return replace(K, n=K.n + 1, construction=Spin(K.construction))


def spin_to(K: KnotDescriptor, n: int) -> KnotDescriptor:
    if n < K.n:
        raise ValueError(f"cannot spin an {K.n}-knot down to dimension {n}")
    while K.n < n:
        K = spin(K)
    return K


def certificate_of(K: KnotDescriptor) -> KnottednessCertificate:
    if K.seifert is not None:
        return knottedness_certificate(K.seifert)
    if K.module_h3 is not None:
        return certificate_from_class(cyclic_class(K.module_h3), "H_3(X_K)")
    raise NoAlgebraicData(f"{K.name} carries neither a Seifert matrix nor a module")


# -- orientation variants -----------------------------------------------------


def _conjugate(M: ModulePresentation) -> ModulePresentation:
    # Flipping the meridian replaces the deck action t by t^-1.
    return ModulePresentation(
        LaurentMatrix(tuple(tuple(lp_invert_variable(p) for p in row) for row in M.P.entries))
    )


def orientation_variants(K: KnotDescriptor) -> dict[str, KnotDescriptor]:
    """K, -K, K* and -K*, keyed by those labels."""

    def variant(label, seif_map, flip):
        seifert = seif_map(K.seifert) if K.seifert is not None else None
        module = K.module_h3
        if module is not None and flip:
            module = _conjugate(module)
        return replace(K, name=f"{label}[{K.name}]", seifert=seifert, module_h3=module)

    return {
        "K": K,
        "-K": variant("-K", reverse, True),
        "K*": variant("K*", mirror, True),
        "-K*": variant("-K*", lambda S: mirror(reverse(S)), False),
    }


# -- the catalogued constructions ---------------------------------------------


def build_unknot(n: int = 1) -> KnotDescriptor:
    K = KnotDescriptor(
        name="unknot T",
        n=1,
        underlying=Underlying.SPHERE,
        mu=0,
        singular_kind=SingularKind.NONE,
        construction=Base("round sphere in R^{n+1} x 0"),
        seifert=validate_seifert(IntMatrix(), 1),
        provenance=(
            ("mu", "the standard sphere projects injectively"),
            ("algebra", "empty Seifert matrix"),
        ),
    )
    return spin_to(K, n)


def build_trefoil_tower(n: int) -> KnotDescriptor:
    if n < 1:
        raise ValueError(f"trefoil tower needs n >= 1, got {n}")
    K = KnotDescriptor(
        name="spun trefoil",
        n=1,
        underlying=Underlying.SPHERE,
        mu=3,
        singular_kind=SingularKind.DOUBLE_POINTS_ONLY,
        construction=Base("trefoil, standard 3-crossing diagram"),
        seifert=validate_seifert(IntMatrix(TREFOIL_SEIFERT), 1),
        provenance=(
            ("mu", "three crossings of the standard diagram; spinning keeps three double-point components"),
            ("algebra", "genus-one Seifert surface of the trefoil"),
        ),
    )
    return spin_to(K, n)


def build_theorem1_knot(n: int) -> KnotDescriptor:
    if n < 5:
        raise ValueError(f"the two-component 5-knot construction needs n >= 5, got {n}")
    K = KnotDescriptor(
        name="Theorem 1 knot K",
        n=5,
        underlying=Underlying.SPHERE,
        mu=2,
        singular_kind=SingularKind.DOUBLE_POINTS_ONLY,
        construction=Base("two oppositely oriented copies of f(E) joined across a 6-ball"),
        seifert=validate_seifert(IntMatrix(THEOREM1_SEIFERT), 3),
        provenance=(
            ("mu", "one S^2 x S^2 double-point component from each copy of f(E)"),
            ("algebra", "3-spheres of the two copies, linked once"),
        ),
    )
    return spin_to(K, n)


def build_theorem3_pair(n: int) -> tuple[KnotDescriptor, KnotDescriptor]:
    if n < 5:
        raise ValueError(f"the S^3 x S^2 pair needs n >= 5, got {n}")
    K0 = KnotDescriptor(
        name="Theorem 3 K0",
        n=5,
        underlying=Underlying.PRODUCT_S3xS2,
        mu=0,
        singular_kind=SingularKind.NONE,
        construction=Base("boundary of a tubular neighbourhood of a trivial 3-sphere in R^6 x 0"),
        module_h3=ModulePresentation(),
        provenance=(
            ("mu", "K0 lies in R^6 x 0, so the projection is an embedding"),
            ("algebra", "H_3 of the infinite cyclic cover vanishes"),
        ),
    )
    K1 = KnotDescriptor(
        name="Theorem 3 K1",
        n=5,
        underlying=Underlying.PRODUCT_S3xS2,
        mu=1,
        singular_kind=SingularKind.DOUBLE_POINTS_ONLY,
        construction=Base("boundary of the lifted normal bundle of a once-self-intersecting 3-sphere"),
        module_h3=ModulePresentation.cyclic(parse_poly("t - 1")),
        provenance=(
            ("mu", "double-point set is one S^2 x S^2"),
            ("algebra", "zero section of E generates H_3, giving Lambda/(t - 1)"),
        ),
    )
    return spin_to(K0, n), spin_to(K1, n)


def theorem2_matrices() -> list[IntMatrix]:
    """The eight candidate Seifert matrices (a b; 0 d), a, b, d in {1, -1}."""
    out = []
    for a in (1, -1):
        for b in (1, -1):
            for d in (1, -1):
                out.append(IntMatrix(((a, b), (0, d))))
    return out


def catalog(n: int | None = None) -> list[KnotDescriptor]:
    """All constructions at their base dimension, or spun to ``n`` where possible."""
    K0, K1 = build_theorem3_pair(5)
    entries = [build_unknot(1), build_trefoil_tower(1), build_theorem1_knot(5), K0, K1]
    if n is None:
        return entries
    return [spin_to(K, n) for K in entries if K.n <= n]


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    description: str
    passed: bool
    evidence: str = ""


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"Theorem {self.theorem}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            tail = f"  [{c.evidence}]" if c.evidence else ""
            lines.append(f"  {mark}  {c.description}{tail}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "checks": [
                {"description": c.description, "passed": c.passed, "evidence": c.evidence}
                for c in self.checks
            ],
            "overall": self.overall,
        }


def verify_theorem1(n: int = 5) -> TheoremReport:
    K = build_theorem1_knot(n)
    expected = AlexanderClass(parse_poly("t^2 - 3*t + 1"))
    checks = [
        Check(f"K is a sphere of dimension {K.n}", K.underlying is Underlying.SPHERE and K.n == n),
        Check("singular set consists of double points", K.singular_kind is SingularKind.DOUBLE_POINTS_ONLY),
        Check("mu(P) = 2", K.mu == 2, f"mu={K.mu}"),
    ]
    cls = K.alexander()
    checks.append(Check("Alexander class is t^2 - 3*t + 1", cls == expected, str(cls)))
    cert = certificate_of(K)
    checks.append(Check("K is truly knotted", cert.knotted, cert.verdict.value))
    for m in range(5, n + 1):
        Km = build_theorem1_knot(m)
        checks.append(
            Check(
                f"n={m}: mu=2 and class unchanged by spinning",
                Km.mu == 2 and Km.alexander() == expected,
                str(Km.alexander()),
            )
        )
    return TheoremReport("1", tuple(checks))


def verify_theorem2() -> TheoremReport:
    checks = []
    for A in theorem2_matrices():
        label = "(" + "; ".join(" ".join(str(x) for x in row) for row in A.entries) + ")"
        try:
            S = validate_seifert(A, 3)
        except ValueError as exc:
            checks.append(Check(f"{label} is a valid q=3 Seifert matrix", False, str(exc)))
            continue
        cls = alexander_class(S)
        ok = not cls.is_zero() and not cls.is_unit()
        checks.append(Check(f"{label}: Alexander class is a non-unit", ok, str(cls)))
    return TheoremReport("2", tuple(checks))


def verify_theorem3(n: int = 5) -> TheoremReport:
    K0, K1 = build_theorem3_pair(n)
    checks = [
        Check("mu(P0) = 0, projection embedded", K0.mu == 0 and K0.singular_kind is SingularKind.NONE),
        Check(
            "mu(P1) = 1, double points only",
            K1.mu == 1 and K1.singular_kind is SingularKind.DOUBLE_POINTS_ONLY,
        ),
        Check("H_3(X_K0) = 0", is_trivial(K0.module_h3), str(cyclic_class(K0.module_h3))),
        Check("H_3(X_K1) is nontrivial", not is_trivial(K1.module_h3), str(cyclic_class(K1.module_h3))),
    ]
    for label, V in orientation_variants(K1).items():
        differ = not same_cyclic_module(K0.module_h3, V.module_h3)
        checks.append(Check(f"K0 is not equivalent to {label.replace('K', 'K1')}", differ, str(V.alexander())))
    return TheoremReport("3", tuple(checks))


def verify(theorem: int, n: int | None = None) -> TheoremReport:
    if theorem == 1:
        return verify_theorem1(5 if n is None else n)
    if theorem == 2:
        return verify_theorem2()
    if theorem == 3:
        return verify_theorem3(5 if n is None else n)
    raise ValueError(f"unknown theorem {theorem!r}")


# -- JSON -----------------------------------------------------------------------


def _construction_to_json(c: Construction):
    if isinstance(c, Spin):
        return {"spin": _construction_to_json(c.child)}
    return {"base": c.label}


def _construction_from_json(d) -> Construction:
    if "spin" in d:
        return Spin(_construction_from_json(d["spin"]))
    return Base(d["base"])


def descriptor_to_dict(K: KnotDescriptor) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "name": K.name,
        "n": K.n,
        "underlying": K.underlying.value if not K.underlying_note else f"Other({K.underlying_note})",
        "mu": K.mu,
        "singular_kind": K.singular_kind.value,
        "seifert": None
        if K.seifert is None
        else {"matrix": K.seifert.A.to_lists(), "q": K.seifert.q},
        "module": None
        if K.module_h3 is None
        else {"presentation": [[format_poly(p) for p in row] for row in K.module_h3.P.entries]},
        "construction": _construction_to_json(K.construction),
        "provenance": dict(K.provenance),
    }


def descriptor_from_dict(d: dict) -> KnotDescriptor:
    if d.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported descriptor schema {d.get('schema')!r}")
    underlying = d["underlying"]
    note = ""
    if underlying.startswith("Other(") and underlying.endswith(")"):
        note = underlying[len("Other(") : -1]
        underlying = Underlying.OTHER
    seifert = None
    if d["seifert"] is not None:
        seifert = validate_seifert(IntMatrix(d["seifert"]["matrix"]), d["seifert"]["q"])
    module = None
    if d["module"] is not None:
        module = ModulePresentation(
            LaurentMatrix([[parse_poly(e) for e in row] for row in d["module"]["presentation"]])
        )
    return KnotDescriptor(
        name=d["name"],
        n=d["n"],
        underlying=Underlying(underlying),
        mu=d["mu"],
        singular_kind=SingularKind(d["singular_kind"]),
        construction=_construction_from_json(d["construction"]),
        seifert=seifert,
        module_h3=module,
        underlying_note=note,
        provenance=tuple(d["provenance"].items()),
    )


def dumps(K: KnotDescriptor) -> str:
    return json.dumps(descriptor_to_dict(K), sort_keys=True)


def loads(text: str) -> KnotDescriptor:
    return descriptor_from_dict(json.loads(text))
