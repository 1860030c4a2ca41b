"""Rewrite the CLI golden files under tests/golden from the current code.

Run after an intentional change to a report layout, then review the diff.
"""

from pathlib import Path

from oddballoon.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = {
    "decompose_star3.json": ["decompose", "--graph", "star:3", "--t", "5"],
    "bounds_path4_n15.json": ["bounds", "--graph", "path:4", "--t", "5", "--n", "15"],
    "oracle_triangle_n6.json": ["oracle", "--n", "6", "--forbid", "triangle"],
    "invariants_kbip23.json": ["invariants", "--graph", "kbip:2,3"],
    "invariants_kbip23.txt": ["invariants", "--graph", "kbip:2,3", "--format", "text"],
    "verify_star2_n20.json": ["verify", "--corollary", "star", "--a", "2", "--t", "5", "--n", "20"],
    "export_turan24.dot": ["export", "--graph", "turan:2,4", "--to", "dot"],
}


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        code, out, err = run(argv)
        if code:
            raise SystemExit(f"{name}: exit {code}: {err}")
        (GOLDEN / name).write_text(out)
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
