"""Reference tables in their classical published form.

These are golden data: fixed row sets used by the test suite and emitted
verbatim by the CLI `table` subcommand.  The enumeration modules recompute
the same content (and, for the (-1)-class list, one extra m = 7 row the
classical table omits; see the repository notes)."""

from __future__ import annotations

# (-1)-classes with m <= 7: columns d, m0, n, m, x, y.
QH1LIST_HEADER = ("d", "m0", "n", "m", "x", "y")
QH1LIST_ROWS: list[tuple[str, ...]] = [
    ("1", "1", "1", "1", "-", "-"),
    ("2", "0", "5", "1", "-", "-"),
    ("e>=1", "e-1", "2e", "1", "-", "-"),
    ("6", "3", "7", "2", "5", "1"),
    ("12", "8", "9", "3", "14", "1"),
    ("20", "15", "11", "4", "27", "1"),
    ("30", "24", "13", "5", "44", "1"),
    ("42", "35", "15", "6", "65", "1"),
    ("20", "3", "8", "7", "9", "10"),
    ("27", "17", "9", "7", "30", "3"),
]

# (-1)-configurations with m <= 10: columns d, m0, n, m, delta, mu0, mu1, mu2.
COMPOUND_HEADER = ("d", "m0", "n", "m", "delta", "mu0", "mu1", "mu2")
COMPOUND_ROWS: list[tuple[str, ...]] = [
    ("e>=2", "e", "e", "1", "1", "1", "1", "0"),
    ("3", "0", "3", "2", "1", "0", "0", "1"),
    ("10", "5", "5", "4", "2", "1", "0", "1"),
    ("12", "0", "6", "5", "2", "0", "0", "1"),
    ("21", "14", "7", "6", "3", "2", "0", "1"),
    ("18", "6", "6", "7", "3", "1", "2", "1"),
    ("21", "0", "7", "8", "3", "0", "2", "1"),
    ("36", "27", "9", "8", "4", "3", "0", "1"),
    ("55", "44", "11", "10", "5", "4", "0", "1"),
]

# (-1)-special systems with m <= 3: columns family, constraint, v, l.
OBIRREG23_HEADER = ("system", "constraint", "v", "l")
OBIRREG23_ROWS: list[tuple[str, ...]] = [
    ("L(4,0,5,2)", "", "-1", "0"),
    ("L(2e,2e-2,2e,2)", "e >= 1", "-1", "0"),
    ("L(d,d,e,2)", "d >= 2e >= 2", "d-3e", "d-2e"),
    ("L(4,0,2,3)", "", "2", "3"),
    ("L(6,0,5,3)", "", "-3", "0"),
    ("L(6,2,4,3)", "", "0", "1"),
    ("L(3e,3e-3,2e,3)", "e >= 1", "-3", "0"),
    ("L(3e+1,3e-2,2e,3)", "e >= 1", "1", "2"),
    ("L(4e,4e-2,2e,3)", "e >= 1", "-1", "0"),
    ("L(d,d-1,e,3)", "2d >= 5e >= 5", "2d-6e", "2d-5e"),
    ("L(d,d,e,3)", "d >= 3e >= 3", "d-6e", "d-3e"),
]

TABLES = {
    "qh1list": (QH1LIST_HEADER, QH1LIST_ROWS),
    "compound": (COMPOUND_HEADER, COMPOUND_ROWS),
    "obirreg23": (OBIRREG23_HEADER, OBIRREG23_ROWS),
}
