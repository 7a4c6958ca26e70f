"""Write one SVG per HN type plus the poset DOT and JSON for a fixed (k, n).

    python scripts/render_atlas.py -k 3 -n 10 --out atlas_3_10
"""

import argparse
from pathlib import Path

from leafatlas import build_atlas, hn_polygon
from leafatlas.polygons import Triangle, polygon_svg


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("-k", type=int, required=True)
    parser.add_argument("-n", type=int, required=True)
    parser.add_argument("--out", type=Path, required=True)
    args = parser.parse_args()

    atlas = build_atlas(args.k, args.n, refine=True)
    args.out.mkdir(parents=True, exist_ok=True)
    tri = Triangle(args.k, args.n)
    for i, nu in enumerate(atlas.hn_types):
        (args.out / f"type_{i:03d}.svg").write_text(polygon_svg(hn_polygon(nu), tri))
    (args.out / "poset.dot").write_text(atlas.to_dot())
    (args.out / "atlas.json").write_text(atlas.to_json())
    print(f"{len(atlas.hn_types)} HN types, {len(atlas.records)} records -> {args.out}")


if __name__ == "__main__":
    main()
