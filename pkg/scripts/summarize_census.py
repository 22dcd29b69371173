# scripts/summarize_census.py
import json
import sys
from collections import Counter
from pathlib import Path

from rich.console import Console
from rich.table import Table


def block_shape(spec: dict) -> str:
    simple = ",".join(str(b["p"]) for b in spec.get("simple_blocks", []))
    paired = ",".join(str(b["p"]) for b in spec.get("paired_blocks", []))
    return f"S[{simple}] P[{paired}]"


def load_records(path: str):
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [json.loads(line) for line in lines if line.strip()]


def tally(records):
    counts = Counter()
    for r in records:
        spec = r["spec"]
        key = (spec["omega"], block_shape(spec), "ok" if r.get("ok") else "failed")
        counts[key] += 1
    return counts


def main(path):
    records = load_records(path)
    counts = tally(records)

    table = Table(title=f"{len(records)} record(s) in {path}")
    for col in ("omega", "shape", "verdict", "count"):
        table.add_column(col)
    for (omega, shape, verdict), n in sorted(counts.items()):
        table.add_row(f"{omega:+d}", shape, verdict, str(n))
    Console().print(table)

    failed = sum(n for (_, _, v), n in counts.items() if v == "failed")
    return 1 if failed else 0


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print("usage: python scripts/summarize_census.py <census.jsonl>")
        sys.exit(2)
    sys.exit(main(sys.argv[1]))
