#!/usr/bin/env python3
"""Print the full reports for the two worked examples.

The cone over the polarized double cover of an abelian surface has an
irrational valuation -(23 + sqrt(17))/16 along the vertex blow-up, and the
cone over the polarized product of a line with an elliptic curve is
canonical but not klt.
"""

from conesing import analyze, build, report_to_text


def main() -> None:
    for preset_id in ("abelian-cover", "p1xE"):
        print(report_to_text(analyze(build(preset_id))))
        print()


if __name__ == "__main__":
    main()
