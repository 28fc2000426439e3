"""Regenerate the golden structure files in tests/golden from the zoo."""

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "src"))

from hopfex.structfile import emit_structure_file, structure_from_object
from golden_defs import build_all


def main():
    outdir = ROOT / "tests" / "golden"
    outdir.mkdir(parents=True, exist_ok=True)
    for stem, obj in build_all():
        text = emit_structure_file(structure_from_object(obj))
        path = outdir / f"{stem}.hopf"
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
