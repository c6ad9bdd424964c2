#!/usr/bin/env python3
"""Print the structural witnesses the harness is expected to discover:

* strictness of the two inclusion laws of the open-set operator calculus,
* the divergence of the literal vertexhood predicate on dense sets,
* the probe showing girth can grow under twin expansion.
"""

import json
import sys

from annigraph import veritas


def show(title: str, claim_id: str, max_n: int) -> None:
    print(f"== {title} ==")
    rep = veritas.search_counterexample(claim_id, max_n=max_n)
    if rep is None:
        print("none found")
    else:
        print(json.dumps(rep.to_json_dict(), sort_keys=True, indent=2))
    print()


def main() -> int:
    show("vanishing ideal of an intersection exceeds the sum "
         "(strict inclusion witness)", "prop.I.cup.e.strict", 3)
    show("cozero union of intersected generating sets drops the overlap "
         "(strict inclusion witness)", "prop.O.cap.b.strict", 3)
    show("literal vertexhood predicate diverges on a dense set",
         "cor.elementAG.b.literal", 3)

    print("== girth under the twin-expansion probe ==")
    claims = veritas.claims_matching(["lem.hom.c"])
    for rep in veritas.run_hom_suite(claims, trials=0, seed=0, mode="explore"):
        print(json.dumps(rep.to_json_dict(), sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
