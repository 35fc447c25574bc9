#!/usr/bin/env python3
"""Smoke test for the hullforge_py extension module.

Build the module first:

    cargo build -p hullforge-py

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def locate_cdylib() -> Path:
    root = Path(__file__).resolve().parents[1]
    candidates = [
        root / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libhullforge_py.so", "hullforge_py.so", "libhullforge_py.dylib")
    ]
    for c in candidates:
        if c.exists():
            return c
    sys.exit("hullforge_py cdylib not found; run `cargo build -p hullforge-py` first")


def main() -> None:
    cdylib = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="hullforge_py_"))
    shutil.copy2(cdylib, tmp / "hullforge_py.so")
    sys.path.insert(0, str(tmp))
    import hullforge_py as hf

    # --- field arithmetic over GF(9) = GF(3^2) ---
    f9 = hf.Field(3, 2)
    assert (f9.p, f9.e, f9.order) == (3, 2, 9), f9
    w = f9.omega
    assert f9.pow(w, 8) == 1 and f9.pow(w, 4) != 1, "omega must have order 8"
    assert f9.mul(w, f9.inv(w)) == 1
    assert f9.add(w, f9.neg(w)) == 0
    assert f9.dlog(f9.pow(w, 5)) == 5
    assert f9.subfield_test(f9.pow(w, 4))  # (q+1) | 4 with q = 3
    assert not f9.subfield_test(w)
    assert f9.elem_str(0) == "0" and f9.elem_str(1) == "w^0"
    assert f9.frobenius(w) == f9.pow(w, 3)

    # --- single construction: [76,8] code over GF(81) with Hermitian hull 3 ---
    report = json.loads(hf.construct("A1", 9, n=76, k=8, l=3))
    assert report["summary"] == {"total": 1, "pass": 1, "fail": 0}, report["summary"]
    item = report["items"][0]
    assert item["hull"]["hermitian"] == 3, item["hull"]
    assert item["verdict"]["overall"] == "PASS", item["verdict"]
    tuples = [(e["n"], e["k"], e["d"], e["c"], e["is_mds"]) for e in item["eaqecc"]]
    assert (76, 65, 9, 5, True) in tuples, tuples

    # --- out-of-range parameters raise ---
    try:
        hf.construct("A1", 9, n=76, k=8, l=99)
    except ValueError as exc:
        assert "out of range" in str(exc), exc
    else:
        sys.exit("expected ValueError for l=99")

    # --- table verification ---
    reports = json.loads(hf.verify_tables(3))
    assert len(reports) == 1
    assert reports[0]["summary"] == {"total": 20, "pass": 20, "fail": 0}

    # --- sweep over a small grid ---
    reports = json.loads(hf.sweep("A1", [3]))
    assert len(reports) == 1 and reports[0]["field"]["p"] == 3
    assert reports[0]["summary"]["fail"] == 0
    assert all(i["verdict"]["overall"] == "PASS" for i in reports[0]["items"])

    print("smoke test OK")


if __name__ == "__main__":
    main()
