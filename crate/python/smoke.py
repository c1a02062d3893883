#!/usr/bin/env python3
"""Smoke test for the wreathkit_py extension module.

Builds nothing itself: expects `cargo build -p wreathkit-py` (debug or
release) to have produced libwreathkit_py.so, copies it under an importable
name, and drives the bindings end to end against the committed corpus.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def load_module():
    candidates = [
        ROOT / "target" / profile / "libwreathkit_py.so"
        for profile in ("release", "debug")
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("build the bindings first: cargo build -p wreathkit-py")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    stage = Path(tempfile.mkdtemp(prefix="wreathkit-py."))
    shutil.copy2(newest, stage / "wreathkit_py.so")
    sys.path.insert(0, str(stage))
    import wreathkit_py

    return wreathkit_py


wk = load_module()
corpus = ROOT / "corpus"

# --- exact matrix arithmetic ------------------------------------------------
Q = wk.Field.rational()
x = wk.Word([("x", 2)])
y = wk.Word([("y", 3)])
swap = wk.Mor.braid(Q, x, y)
back = wk.Mor.braid(Q, y, x)
assert back.compose(swap) == wk.Mor.identity(Q, x.tensor(y))

third = wk.Mor.from_rows(Q, x, x, [["1/3", 0], [0, "1/3"]])
tripled = third.add(third).add(third)
assert tripled == wk.Mor.identity(Q, x)
assert third.entry(0, 0) == "1/3"

f5 = wk.Field.prime(5)
assert wk.Mor.identity(f5, x).sub(wk.Mor.identity(f5, x)).entries() == [
    ["0", "0"],
    ["0", "0"],
]
try:
    wk.Field.prime(6)
except ValueError:
    pass
else:
    raise AssertionError("6 is not prime")

# --- law checking against the corpus ----------------------------------------
z4 = wk.Bundle.from_path(corpus / "z4-extension.json")
assert z4.to_canonical_json() == (corpus / "z4-extension.json").read_text()

report = z4.check("wreath", "w1")
assert report["passed"] and len(report["entries"]) == 7

broken = z4.check("wreath", "w1-broken")
failing = [e["id"] for e in broken["entries"] if not e["pass"]]
assert not broken["passed"]
assert failing == ["lambda-eta", "sigma-lambda", "nu-coassoc", "sigma-unit-left"]
assert broken["entries"][1]["witness"]["lhs"] != broken["entries"][1]["witness"]["rhs"]

# --- extensions ---------------------------------------------------------------
fiber, alpha, rho = z4.analyze("fib-z4")
assert fiber.elements() == ["0", "2"]
assert alpha == [[0, 0], [1, 1]] and rho == [[0, 0], [0, 1]]
assert z4.check("extension", "ext-z4")["passed"]

total = z4.reconstruct("ext-z4")
assert total.is_isomorphic_under(wk.FinMonoid.cyclic(4), [0, 2, 1, 3])

sets = z4.enumerate_cocycles("ext-z2z2")
assert sets == [[[0, 0], [0, 0]], [[0, 0], [0, 1]]]
try:
    z4.enumerate_cocycles("ext-z2z2", max_candidates=1)
except ValueError as e:
    assert "search space" in str(e)
else:
    raise AssertionError("candidate bound was ignored")

# --- twisted convolution -------------------------------------------------------
h3 = wk.Bundle.from_path(corpus / "heisenberg-z3.json")
assert h3.check("opwreath", "hw")["passed"]
ident = h3.morphism("id")
cubed = h3.convolve("hw", ident, ident)
# e_g ↦ e_{g³} is constant at the unit on a group of order 3
assert cubed.entries() == [["1", "1", "1"], ["0", "0", "0"], ["0", "0", "0"]]
f1, g1 = h3.morphism("f1"), h3.morphism("g1")
assert h3.heisenberg("kb", f1, g1) == h3.convolve("hw", f1, g1)

# --- coactions and the product wreath ------------------------------------------
coact = wk.Bundle.from_path(corpus / "coactions.json")
for name in ("coact-trivial", "coact-graded"):
    assert coact.check("coaction", name)["passed"], name

mono = wk.Bundle.from_path(corpus / "monoidal-trivial-b.json")
assert mono.check("monoidal-coaction", "mc1")["passed"]
assert mono.check("opmonoidal", "mc1")["passed"]
assert mono.eckmann_hilton("mc1")["passed"]

carrier, mul, unit = z4.wreath_product("w1")
assert carrier.dim() == 4 and mul.rows() == 4 and mul.cols() == 16
assert unit.cod() == carrier

print(json.dumps({"module": wk.__name__, "checks": "all passed"}))
print("smoke: OK")
