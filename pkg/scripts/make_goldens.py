#!/usr/bin/env python3
"""Regenerate the golden pyramid and spectrum-table renderings.

The goldens pin the byte-exact output of the renderers; the rendered
values themselves are verified against the operator spectra inside
sp4q.verify before anything is written.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sp4q.verify import pyramid_text, spectrum_table_text  # noqa: E402

GOLDEN_DIR = pathlib.Path(__file__).resolve().parents[1] / "goldens"

TARGETS = {
    "pyramid_even_pairs.txt": lambda: pyramid_text("pairs", "even", 4),
    "pyramid_odd_pairs.txt": lambda: pyramid_text("pairs", "odd", 3),
    "pyramid_even_triple_min.txt": lambda: pyramid_text("triple-min", "even", 4),
    "pyramid_even_triple_max.txt": lambda: pyramid_text("triple-max", "even", 4),
    "table_phi_ladder.txt": lambda: spectrum_table_text("phi-ladder", 12),
    "table_alpha_discrete.txt": lambda: spectrum_table_text("alpha-discrete", 12),
    "table_phi_q.txt": lambda: spectrum_table_text("phi-q", 12),
    "table_qphi_alpha.txt": lambda: spectrum_table_text("qphi-alpha", 12),
}


def main() -> int:
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, render in TARGETS.items():
        path = GOLDEN_DIR / name
        text = render()
        old = path.read_text() if path.exists() else None
        path.write_text(text)
        status = "unchanged" if old == text else ("updated" if old else "created")
        print(f"{status}: {path.relative_to(GOLDEN_DIR.parent)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
