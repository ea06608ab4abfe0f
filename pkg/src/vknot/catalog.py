"""Named knots with expected invariant values.

The catalog file format is line oriented: ``name<TAB>gauss_code<TAB>kv``
where ``kv`` is a comma-separated list of ``key=value`` pairs and ``#``
starts a comment.  Every expected value carries a ``source`` provenance
string; golden values are re-derived by the test suite on every run and a
mismatch fails the build quoting that provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .arrows import conway_pairing
from .determinant import determinant
from .diagram import is_mod_p_numberable, parse_gauss_code, warping_degree
from .errors import NotCheckerboardColorable, VknotError


class CatalogError(VknotError, ValueError):
    """Malformed catalog file."""


_INT_KEYS = {"det", "c2", "v2_mod2", "warp"}
_BOOL_KEYS = {"colorable_p0", "colorable_p2", "colorable_p3"}
_STR_KEYS = {"source"}
_KNOWN_KEYS = _INT_KEYS | _BOOL_KEYS | _STR_KEYS


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: str
    expected: tuple = ()

    _map: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.expected))

    @property
    def provenance(self):
        return self._map.get("source", "unspecified")

    def expect(self, key, default=None):
        return self._map.get(key, default)

    def diagram(self):
        return parse_gauss_code(self.code)


def _parse_value(key, raw, lineno):
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise CatalogError("line %d: %s expects an integer, got %r" % (lineno, key, raw))
    if key in _BOOL_KEYS:
        if raw not in ("true", "false"):
            raise CatalogError("line %d: %s expects true/false, got %r" % (lineno, key, raw))
        return raw == "true"
    return raw


def loads_catalog(text):
    entries = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) == 2:
            parts.append("")
        if len(parts) != 3:
            raise CatalogError("line %d: expected name<TAB>code<TAB>key=value,..." % lineno)
        name, code, kv = parts[0].strip(), parts[1].strip(), parts[2].strip()
        if name in seen:
            raise CatalogError("line %d: duplicate entry %r" % (lineno, name))
        seen.add(name)
        try:
            parse_gauss_code(code)
        except VknotError as exc:
            raise CatalogError("line %d: bad code for %r: %s" % (lineno, name, exc))
        expected = []
        if kv:
            for item in kv.split(","):
                if "=" not in item:
                    raise CatalogError("line %d: bad key=value %r" % (lineno, item))
                key, raw = item.split("=", 1)
                key = key.strip()
                if key not in _KNOWN_KEYS:
                    raise CatalogError("line %d: unknown field %r" % (lineno, key))
                expected.append((key, _parse_value(key, raw.strip(), lineno)))
        entries.append(CatalogEntry(name, code, tuple(expected)))
    return entries


def load_catalog(path):
    with open(path, encoding="utf-8") as handle:
        return loads_catalog(handle.read())


def builtin_catalog():
    text = resources.files("vknot.data").joinpath("catalog.txt").read_text("utf-8")
    return loads_catalog(text)


def find_entry(name, entries=None):
    for entry in entries if entries is not None else builtin_catalog():
        if entry.name == name:
            return entry
    return None


def verify_entry(entry):
    """Re-derive an entry's expected values; returns mismatch messages."""
    diagram = entry.diagram()
    problems = []

    def check(key, actual):
        want = entry.expect(key)
        if want is not None and want != actual:
            problems.append(
                "%s: %s expected %r got %r (source: %s)"
                % (entry.name, key, want, actual, entry.provenance)
            )

    for p, key in ((0, "colorable_p0"), (2, "colorable_p2"), (3, "colorable_p3")):
        check(key, is_mod_p_numberable(diagram, p))
    if diagram.num_circles == 1:
        c2 = conway_pairing(diagram, 2, "ascending")
        check("c2", c2)
        check("v2_mod2", c2 % 2)
        check("warp", warping_degree(diagram))
    if entry.expect("det") is not None:
        try:
            check("det", determinant(diagram))
        except NotCheckerboardColorable:
            problems.append(
                "%s: det expected %r but diagram is not colorable (source: %s)"
                % (entry.name, entry.expect("det"), entry.provenance)
            )
    return problems
