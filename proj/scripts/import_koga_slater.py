#!/usr/bin/env python3
"""Convert Koga-Kanayama-Watanabe-Thakkar (1999) RHF Slater tables into the
JSON basis-file schema read by the `infoatom` library.

Input files are the `<symbol>.slater` tables shipped (for example) inside the
qc-BFit Python package under `bfit/data/neutral/`.  Hydrogen is written as the
exact one-term 1s function.

    python3 scripts/import_koga_slater.py /path/to/neutral data/basis
"""

import json
import re
import sys
from pathlib import Path

SYMBOLS = [
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne", "Na", "Mg", "Al",
    "Si", "P", "S", "Cl", "Ar", "K", "Ca", "Sc", "Ti", "V", "Cr", "Mn", "Fe",
    "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr",
    "Y", "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn",
    "Sb", "Te", "I", "Xe",
]
L_OF = {"S": 0, "P": 1, "D": 2, "F": 3}
CORE = {
    "K": {"1S": 2},
    "L": {"2S": 2, "2P": 6},
    "M": {"3S": 2, "3P": 6, "3D": 10},
}


def occupations(config):
    occ = {}
    for label, count in re.findall(r"([0-9]?[A-Z])\((\d+)\)", config):
        if label in CORE:
            occ.update(CORE[label])
        else:
            occ[label] = int(count)
    return occ


def parse_slater(text):
    lines = text.splitlines()
    config = lines[0].split()[1].rstrip(",")
    occ = occupations(config)
    shells = []
    i = 0
    while i < len(lines):
        tok = lines[i].split()
        if len(tok) >= 2 and tok[0] in L_OF and all(re.fullmatch(r"\d[SPDF]", t) for t in tok[1:]):
            l = L_OF[tok[0]]
            orbitals = tok[1:]
            i += 3  # header, orbital energies, cusp values
            rows = []
            while i < len(lines) and re.match(r"\s*\d[SPDF]\s", lines[i]):
                parts = lines[i].split()
                rows.append((int(parts[0][0]), float(parts[1]), [float(x) for x in parts[2:]]))
                i += 1
            for col, name in enumerate(orbitals):
                if occ.get(name, 0) == 0:
                    continue
                shells.append({
                    "n": int(name[0]),
                    "l": l,
                    "occupation": occ[name],
                    "terms": [{"n_jl": nj, "zeta": z, "c": cs[col]} for nj, z, cs in rows],
                })
            continue
        i += 1
    shells.sort(key=lambda s: (s["n"], s["l"]))
    return shells


def main():
    src = Path(sys.argv[1])
    out = Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    for z, sym in enumerate(SYMBOLS, start=1):
        if z == 1:
            shells = [{"n": 1, "l": 0, "occupation": 1,
                       "terms": [{"n_jl": 1, "zeta": 1.0, "c": 1.0}]}]
        else:
            shells = parse_slater((src / f"{sym.lower()}.slater").read_text())
        total = sum(s["occupation"] for s in shells)
        if total != z:
            raise SystemExit(f"{sym}: occupations sum to {total}, expected {z}")
        doc = {"atomic_number": z, "symbol": sym, "shells": shells}
        (out / f"{z:02d}_{sym}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
