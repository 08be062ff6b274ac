"""Row generation for the (n, a, p) table, the JSONL row cache, and output writers."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .arith import primes_upto
from .classgroup import class_number
from .fieldparams import InvalidParams, build
from .theorem import verify_theorem1

ARITH_VERSION = "classdiv-arith-1"
CACHE_ENV = "CLASSDIV_CACHE"
CSV_FIELDS = ("n", "a", "p", "a2_minus_4pn", "d", "h", "order",
              "cond_i", "cond_ii", "exceptional", "paper_h", "mismatch")

# Rows whose printed d disagrees with the square-free part of 4p^n - a^2.
KNOWN_DISCREPANCIES = {
    (9, 1, 5): "printed d=812499; 4*5^9 - 1 = 7812499 is itself square-free",
}


@dataclass(frozen=True)
class TableRow:
    n: int
    a: int
    p: int
    signed_value: int
    d: int
    h: int
    order: int
    cond_i: bool
    cond_ii: bool
    exceptional: bool
    paper_h: int | None = None
    paper_d: int | None = None

    @property
    def key(self) -> tuple[int, int, int]:
        return self.n, self.a, self.p

    @property
    def mismatch(self) -> bool:
        return self.paper_h is not None and self.paper_h != self.h

    @property
    def d_mismatch(self) -> bool:
        return self.paper_d is not None and self.paper_d != self.d

    def as_record(self) -> dict:
        """Ordered mapping in CSV column order (paper_d is not exported)."""
        return {
            "n": self.n, "a": self.a, "p": self.p,
            "a2_minus_4pn": self.signed_value, "d": self.d, "h": self.h,
            "order": self.order, "cond_i": self.cond_i, "cond_ii": self.cond_ii,
            "exceptional": self.exceptional, "paper_h": self.paper_h,
            "mismatch": self.mismatch,
        }


def compute_row(key: tuple[int, int, int]) -> TableRow:
    n, a, p = key
    v = verify_theorem1(a, p, n, compute_h=False)
    h = class_number(v.params.delta).h
    return TableRow(n, a, p, v.params.signed_value, v.params.d, h, v.order_of_class,
                    v.cond_i.holds, v.cond_ii.holds, v.exceptional)


def enumerate_triples(a_max: int, p_max: int, n_max: int, d_max: int | None = None) -> list[tuple[int, int, int]]:
    """Valid (n, a, p) keys sorted, skipping fields with d > d_max."""
    keys = []
    for n in range(3, n_max + 1, 2):
        for a in range(1, a_max + 1, 2):
            for p in primes_upto(p_max):
                try:
                    params = build(a, p, n)
                except InvalidParams:
                    continue
                if d_max is not None and params.d > d_max:
                    continue
                keys.append((n, a, p))
    return sorted(keys)


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "classdiv" / "rows.jsonl"


class RowCache:
    """Append-only JSONL store of computed rows, keyed by (n, a, p) and ARITH_VERSION."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._rows: dict[tuple[int, int, int], TableRow] = {}
        if self.path.exists():
            with open(self.path) as fh:
                for line in fh:
                    try:
                        rec = json.loads(line)
                    except json.JSONDecodeError:
                        continue  # torn write from an interrupted run
                    if rec.get("version") != ARITH_VERSION:
                        continue
                    row = TableRow(**rec["row"])
                    self._rows[row.key] = row

    def get(self, key):
        return self._rows.get(key)

    def put(self, row: TableRow) -> None:
        plain = replace(row, paper_h=None, paper_d=None)
        with self._lock:
            self._rows[row.key] = plain
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a") as fh:
                fh.write(json.dumps({"version": ARITH_VERSION, "row": plain.__dict__}) + "\n")


def compute_rows(keys, jobs: int = 1, cache: RowCache | None = None) -> list[TableRow]:
    """Rows for all keys, sorted by (n, a, p) regardless of completion order."""
    done = {}
    todo = []
    for key in keys:
        row = cache.get(key) if cache else None
        if row is None:
            todo.append(key)
        else:
            done[key] = row
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = list(pool.map(compute_row, todo))
    else:
        fresh = [compute_row(k) for k in todo]
    for row in fresh:
        done[row.key] = row
        if cache:
            cache.put(row)
    return [done[k] for k in sorted(done)]


def bundled_paper_csv() -> Path:
    return Path(str(resources.files("classdiv") / "data" / "paper_table1.csv"))


def load_paper_table(path) -> dict[tuple[int, int, int], dict]:
    out = {}
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            key = (int(rec["n"]), int(rec["a"]), int(rec["p"]))
            out[key] = {k: int(v) for k, v in rec.items() if v not in (None, "")}
    return out


def join_paper(rows: list[TableRow], paper: dict) -> list[TableRow]:
    out = []
    for row in rows:
        ref = paper.get(row.key)
        if ref is None:
            out.append(row)
        else:
            out.append(replace(row, paper_h=ref["h"], paper_d=ref["d"]))
    return out


def summarize(rows: list[TableRow]) -> dict:
    joined = [r for r in rows if r.paper_h is not None]
    known, regressions = [], []
    for r in joined:
        if r.mismatch or r.d_mismatch:
            (known if r.key in KNOWN_DISCREPANCIES else regressions).append(r.key)
    return {
        "rows": len(rows),
        "joined": len(joined),
        "matches": len(joined) - len(known) - len(regressions),
        "known_discrepancies": known,
        "regressions": regressions,
        "exceptional": sum(r.exceptional for r in rows),
        "order_equals_n": sum(r.order == r.n for r in rows),
    }


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        rec = r.as_record()
        w.writerow([_fmt(rec[f]) for f in CSV_FIELDS])
    return buf.getvalue()


def render_json(rows: list[TableRow]) -> str:
    return json.dumps([r.as_record() for r in rows], indent=2) + "\n"


def write_atomic(path, text: str) -> None:
    """Write via a temp file in the target directory and rename into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
