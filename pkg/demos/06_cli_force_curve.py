"""
Producing a force curve and its plot through the command-line front end.

The same entry point backs the ``casimir-sphere`` script; here it is called
in-process and writes a CSV table and an SVG chart to a temporary directory.
"""

import tempfile
from pathlib import Path

from casimir_sphere.cli import main

out = Path(tempfile.mkdtemp())
main(["force", "--gamma-ratio", "0.005", "--z-natural", "1:40:600", "-o", str(out / "curve.csv")])
main(["force", "--gamma-ratio", "0.005", "--z-natural", "1:40:600", "--format", "svg",
      "-o", str(out / "curve.svg")])
print((out / "curve.csv").read_text().splitlines()[0])
print(f"wrote {out / 'curve.csv'} and {out / 'curve.svg'}")
