#!/usr/bin/env python3
"""Run the full three-family verification sweep and write a JSON report.

Usage: run_verification.py [CUTOFF] [Q ...]

The report goes to $SP4Q_REPORT_DIR (default: ./reports) as
sp4q-report.json.  Exit status mirrors the CLI: 0 when every executed
check passes (recorded variant readings fail by design and count as
passing when they do), 1 otherwise.
"""

import os
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sp4q.verify import full_suite, reports_to_json, summarize  # noqa: E402


def main(argv) -> int:
    cutoff = int(argv[1]) if len(argv) > 1 else 12
    qs = tuple(float(a) for a in argv[2:]) or (0.7, 1.3)
    t0 = time.time()
    reports = full_suite(cutoff, qs)
    wall = time.time() - t0
    stats = summarize(reports)
    out_dir = pathlib.Path(os.environ.get("SP4Q_REPORT_DIR", "reports"))
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "sp4q-report.json"
    path.write_text(reports_to_json(reports))
    print(
        f"cutoff={cutoff} qs={qs}: {stats['checks']} checks,"
        f" {stats['holds']} hold, {stats['fails']} fail"
        f" ({stats['unexpected']} unexpected) in {wall:.1f} s"
    )
    for r in reports:
        if not r.ok:
            print(f"  UNEXPECTED {r.verdict}: {r.relation} [{r.family}] {r.mode}"
                  f" witness={r.witness} residual={r.residual}")
    print(f"report: {path}")
    return 0 if stats["unexpected"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
