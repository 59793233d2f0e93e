#!/usr/bin/env python3
"""Extract the vertex-list tables of a LaTeX source into golden data files.

Usage: extract_golden.py SOURCE OUTDIR
"""
import re
import sys
from pathlib import Path

ROW = re.compile(r"^\((-?\d+(?:,-?\d+)*)\)(?:&(?:\((-?\d+(?:,-?\d+)*)\))?)?\\\\")


def blocks(lines):
    current = None
    for line in lines:
        line = line.strip()
        if line.startswith(r"\begin{tabular}{@{}ll@{}}"):
            current = []
        elif line.startswith(r"\end{tabular}") and current is not None:
            if current:
                yield current
            current = None
        elif current is not None:
            m = ROW.match(line)
            if m:
                for g in m.groups():
                    if g:
                        current.append(tuple(int(x) for x in g.split(",")))


def main():
    source, outdir = Path(sys.argv[1]), Path(sys.argv[2])
    text = source.read_text().splitlines()
    starts = [i for i, l in enumerate(text) if l.startswith(r"\section{List of Smooth")]
    end = next(i for i, l in enumerate(text) if i > starts[1] and l.startswith(r"\section"))
    parts = {"golden_polygons_n12.txt": text[starts[0]:starts[1]],
             "golden_polytopes3d_n12.txt": text[starts[1]:end]}
    for name, lines in parts.items():
        with open(outdir / name, "w") as f:
            for vs in blocks(lines):
                f.write(" ".join("(" + ",".join(map(str, v)) + ")" for v in vs) + "\n")


if __name__ == "__main__":
    main()
