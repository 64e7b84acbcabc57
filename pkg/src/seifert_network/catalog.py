"""The seiferter catalog: named seiferters and annular pairs as data.

The default catalog ships with the package (``data/catalog.json``); the
environment variable ``SEIFERT_NET_CATALOG`` points at a replacement file.
Catalog objects are immutable once loaded.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources

import jsonschema

from ._expr import ExpressionError, evaluate, free_names
from .errors import CatalogError
from .knots import TorusKnotId, SeifertSurgery, canonical_torus_knot, spreader_conjecture_predicate

__all__ = [
    "SeiferterKind",
    "Seiferter",
    "AnnularPairRecord",
    "Catalog",
    "default_catalog",
    "catalog_lookup",
    "CATALOG_ENV",
]

CATALOG_ENV = "SEIFERT_NET_CATALOG"
SCHEMA_VERSION = 1


class SeiferterKind(str, Enum):
    BASIC_SP = "BasicSp"
    BASIC_SQ = "BasicSq"
    MERIDIAN = "Meridian"
    CATALOGED = "Cataloged"

    @property
    def is_basic(self):
        return self is not SeiferterKind.CATALOGED


@dataclass(frozen=True)
class Seiferter:
    """A catalog seiferter instantiated at one host surgery."""

    id: str
    kind: SeiferterKind
    host: SeifertSurgery
    linking: int
    sign: int | None
    hyperbolic: bool
    citation: str
    template: str
    params: tuple[tuple[str, int], ...] = ()
    twist_images: tuple[tuple[int, TorusKnotId], ...] = ()
    aliases: tuple[str, ...] = ()
    irrelevant: bool = False

    @property
    def signed_linking(self):
        return self.linking if self.sign is None else self.sign * self.linking

    def image_after(self, turns):
        for t, knot in self.twist_images:
            if t == turns:
                return knot
        return None

    def to_json(self):
        return {
            "id": self.id,
            "kind": self.kind.value,
            "host": self.host.key,
            "linking": self.linking,
            "sign": self.sign,
            "hyperbolic": self.hyperbolic,
            "irrelevant": self.irrelevant,
            "params": dict(self.params),
            "aliases": list(self.aliases),
            "citation": self.citation,
        }


@dataclass(frozen=True)
class AnnularPairRecord:
    id: str
    members: tuple[str, str]
    host: SeifertSurgery
    pair_linking: int
    knot_linkings: tuple[int, int]
    is_hopf: bool
    hyperbolic: bool
    citation: str
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.is_hopf and abs(self.pair_linking) != 1:
            raise CatalogError(f"{self.id}: Hopf pair with lk = {self.pair_linking}")
        if self.hyperbolic and not self.citation:
            raise CatalogError(f"{self.id}: hyperbolic pair without citation")


@lru_cache(maxsize=1)
def _schema():
    text = resources.files("seifert_network").joinpath("data/catalog.schema.json").read_text()
    return json.loads(text)


def _as_bool(value, env, where):
    if isinstance(value, bool):
        return value
    return bool(_eval(value, env, where))


def _eval(expr, env, where):
    try:
        return evaluate(expr, env)
    except (ExpressionError, ZeroDivisionError) as exc:
        raise CatalogError(f"{where}: {exc}") from None


def _sign(value):
    return 1 if value >= 0 else -1


@dataclass(frozen=True)
class Catalog:
    document: dict = field(repr=False, compare=False)
    source: str = "<builtin>"

    @classmethod
    def from_document(cls, doc, source="<memory>"):
        try:
            jsonschema.validate(doc, _schema())
        except jsonschema.ValidationError as exc:
            raise CatalogError(f"{source}: {exc.message}") from None
        ids = [row["id"] for row in doc["seiferters"]]
        if len(ids) != len(set(ids)):
            raise CatalogError(f"{source}: duplicate seiferter ids")
        for row in doc["seiferters"]:
            if row["hyperbolic"] is not False and not row["citation"].strip():
                raise CatalogError(f"{source}: {row['id']} is hyperbolic but has no citation")
        return cls(doc, source)

    @classmethod
    def load(cls, path=None):
        if path is None:
            path = os.environ.get(CATALOG_ENV)
        if path is None:
            text = resources.files("seifert_network").joinpath("data/catalog.json").read_text()
            return cls.from_document(json.loads(text), "<builtin>")
        with open(path, encoding="utf-8") as fh:
            return cls.from_document(json.load(fh), str(path))

    @property
    def templates(self):
        return tuple(row["id"] for row in self.document["seiferters"])

    def _bindings(self, row, env):
        bind = row.get("bind")
        if not bind:
            return [dict(env)]
        spec = bind["n"]
        exprs = spec if isinstance(spec, list) else [spec]
        out = []
        for expr in exprs:
            n = _eval(expr, env, row["id"])
            out.append({**env, "n": n})
        return out

    def _instantiate(self, row, env, host):
        where = row["id"]
        for key, expr in row["family"].items():
            if _eval(expr, env, where) != env[key]:
                return None
        if not _as_bool(row["validity"], env, where):
            return None
        value = _eval(row["linking"]["expr"], env, where)
        sign = _sign(value) if row["linking"]["signed"] else None
        images = []
        for turns, img in sorted(row.get("twist_images", {}).items(), key=lambda kv: int(kv[0])):
            images.append((int(turns), canonical_torus_knot(_eval(img["p"], env, where), _eval(img["q"], env, where))))
        aliases = tuple(a["name"] for a in row.get("aliases", []) if _as_bool(a["when"], env, where))
        params = tuple(sorted((k, v) for k, v in env.items()))
        sid = row["id"]
        if isinstance(row.get("bind", {}).get("n"), list):
            sid = f"{sid}[n={env['n']}]"
        kind = SeiferterKind(row["kind"])
        return Seiferter(
            id=sid,
            kind=kind,
            host=host,
            linking=abs(value),
            sign=sign,
            hyperbolic=_as_bool(row["hyperbolic"], env, where),
            citation=row["citation"],
            template=row["id"],
            params=params,
            twist_images=tuple(images),
            aliases=aliases,
            irrelevant=(kind is SeiferterKind.MERIDIAN and host.knot.is_unknot),
        )

    def lookup(self, p, q, m):
        """All catalog seiferters valid at (T(p,q), m), basics first.

        ``(p, q)`` must be canonical; the unknot is ``(1, 1)``.
        """
        knot = TorusKnotId(p, q)
        host = SeifertSurgery(knot, m)
        env = {"p": p, "q": q, "m": m}
        found = []
        for row in self.document["seiferters"]:
            if row["host"] != "torus":
                continue
            if knot.is_unknot and row["kind"] == "Cataloged":
                continue
            for bound in self._bindings(row, env):
                inst = self._instantiate(row, bound, host)
                if inst is not None:
                    found.append(inst)
        return found

    def get(self, seiferter_id, surgery):
        """The seiferter ``seiferter_id`` at a torus-knot surgery, or None."""
        knot = surgery.knot
        if not isinstance(knot, TorusKnotId):
            return None
        for s in self.lookup(knot.p, knot.q, surgery.slope):
            if s.id == seiferter_id:
                return s
        return None

    def annular_pairs(self, surgery, index_range=range(-20, 21)):
        """Annular-pair records at a torus-knot or unknot surgery.

        Families indexed by a free integer ``n`` are enumerated over
        ``index_range``.
        """
        knot = surgery.knot
        if not isinstance(knot, TorusKnotId):
            return []
        host_kind = "unknot" if knot.is_unknot else "torus"
        env = {"p": knot.p, "q": knot.q, "m": surgery.slope}
        out = []
        for row in self.document["annular_pairs"]:
            if row["host"] != host_kind:
                continue
            exprs = [row["validity"], row["pair_linking"], *row["knot_linkings"], *row["family"].values()]
            uses_n = any("n" in free_names(e) for e in exprs)
            indices = index_range if uses_n else [None]
            for n in indices:
                e = dict(env) if n is None else {**env, "n": n}
                where = row["id"]
                if any(_eval(x, e, where) != e[k] for k, x in row["family"].items()):
                    continue
                if not _as_bool(row["validity"], e, where):
                    continue
                members = tuple(row["members"])
                if n is not None:
                    members = tuple(mem.replace("_n", f"_{n}").replace("{n,", f"{{{n},") for mem in members)
                out.append(
                    AnnularPairRecord(
                        id=row["id"] if n is None else f"{row['id']}[n={n}]",
                        members=members,
                        host=surgery,
                        pair_linking=_eval(row["pair_linking"], e, where),
                        knot_linkings=tuple(_eval(x, e, where) for x in row["knot_linkings"]),
                        is_hopf=row["is_hopf"],
                        hyperbolic=_as_bool(row["hyperbolic"], e, where),
                        citation=row["citation"],
                        params=tuple(sorted(e.items())),
                    )
                )
        return out

    def check_spreader_consistency(self, p_range=range(-15, 16), slope_window=12):
        """Hyperbolic torus-hosted entries must satisfy the spreader pattern.

        Returns the list of offending (id, p, q, m); empty means consistent.
        """
        bad = []
        for p in p_range:
            for q in range(1, abs(p)):
                try:
                    knot = canonical_torus_knot(p, q)
                except ValueError:
                    continue
                if knot.p != p or knot.q != q:
                    continue
                for m in range(p * q - slope_window, p * q + slope_window + 1):
                    for s in self.lookup(p, q, m):
                        if s.hyperbolic and not spreader_conjecture_predicate(p, q, m):
                            bad.append((s.id, p, q, m))
        return bad


@lru_cache(maxsize=None)
def _cached(path):
    return Catalog.load(path)


def default_catalog():
    """The catalog named by $SEIFERT_NET_CATALOG, or the builtin one."""
    return _cached(os.environ.get(CATALOG_ENV))


def catalog_lookup(p, q, m, catalog=None):
    return (catalog or default_catalog()).lookup(p, q, m)
