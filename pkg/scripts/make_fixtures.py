"""Regenerate the documents in fixtures/ (deterministic)."""

from __future__ import annotations

import sys
from pathlib import Path

from openbook_kit import interchange
from openbook_kit.approx import legendrian_approximation, loose_planar_pipeline, roundtrip_sg, transverse_witness
from openbook_kit.generate import build_placement
from openbook_kit.openbook import OpenBook
from openbook_kit.pushoff import pushoff

PLACEMENTS = {
    "c1a": (0, [(1,), (1,), (-1,)], None),
    "c1bi": (0, [(1, 1)], [(-1, 0), (-3, 0)]),
    "c1bii": (0, [(1, 1, -1)], [(-1, 0), (-2, -1), (-1, 2)]),
    "c2a": (1, [(1,), (1,)], None),
    "c2bi": (2, [(-1, -1, -1)], None),
    "c2bii": (2, [(1, -1)], [(-2, 1), (0, 1)]),
    "c2b-extension": (2, [(1,), (1, 1)], None),
}


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "disk": OpenBook.trivial(0, 1),
        "torus-two-holes": OpenBook.trivial(1, 2),
    }
    for name, (g, configs, inv) in PLACEMENTS.items():
        p = build_placement(g, configs, inv)
        ob, cert = pushoff(p)
        docs[f"placement-{name}"] = p
        docs[f"certificate-{name}"] = cert
        docs[f"pushoff-{name}"] = ob
    t = transverse_witness(OpenBook.trivial(2, 2), ["B1", "B2"])
    docs["sg-transverse-g2"] = t
    l_cert, t2 = roundtrip_sg(t)
    docs["sg-roundtrip-legendrian"] = l_cert
    docs["sg-roundtrip-transverse"] = t2
    docs["sg-legendrian-g1-b1"] = legendrian_approximation(OpenBook.trivial(1, 1), ["B1"], framing_drop=1)
    loose = build_placement(0, [(1,), (1, -1)], [(-1, 0), (-2, 1), (0, 1)], loose=True)
    docs["sg-loose-planar"] = loose_planar_pipeline(loose, 2)
    for name, obj in docs.items():
        interchange.dump(obj, out / f"{name}.yaml")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
