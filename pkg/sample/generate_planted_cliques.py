"""Generate a planted-clique graph and its ground-truth labels.

Usage:
    python sample/generate_planted_cliques.py --out sample/cliques --cliques 2 --size 10

This writes two files in the GraphEnsembleEmbed input formats:

    <out>/edges.txt   ``N <count>`` header, then one ``u v`` line per edge
    <out>/labels.txt  one ``node_id clique_index`` line per node

Notes:
- ``--bridges`` adds that many random edges between consecutive cliques,
  so the communities stay planted but the graph becomes connected.
- The same ``--seed`` always produces the same files.
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import List, Tuple

import numpy as np


def clique_edges(num_cliques: int, size: int) -> List[Tuple[int, int]]:
    edges = []
    for c in range(num_cliques):
        base = c * size
        for i in range(size):
            for j in range(i + 1, size):
                edges.append((base + i, base + j))
    return edges


def bridge_edges(num_cliques: int, size: int, bridges: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    edges = set()
    for c in range(num_cliques - 1):
        for _ in range(bridges):
            u = c * size + int(rng.integers(size))
            v = (c + 1) * size + int(rng.integers(size))
            edges.add((u, v))
    return sorted(edges)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", default="sample/cliques", help="Output directory")
    p.add_argument("--cliques", type=int, default=2, help="Number of cliques")
    p.add_argument("--size", type=int, default=10, help="Nodes per clique")
    p.add_argument("--bridges", type=int, default=0, help="Random edges between consecutive cliques")
    p.add_argument("--seed", type=int, default=0, help="Seed for bridge placement")
    args = p.parse_args()

    if args.cliques < 1 or args.size < 2:
        p.error("need at least one clique of at least two nodes")

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)

    num_nodes = args.cliques * args.size
    edges = clique_edges(args.cliques, args.size) + bridge_edges(args.cliques, args.size, args.bridges, rng)

    with open(out_dir / "edges.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write(f"# {args.cliques} planted cliques of {args.size} nodes, {args.bridges} bridge(s) per pair\n")
        f.write(f"N {num_nodes}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")

    with open(out_dir / "labels.txt", "w", encoding="utf-8", newline="\n") as f:
        for node in range(num_nodes):
            f.write(f"{node} {node // args.size}\n")

    print(f"Wrote {num_nodes} nodes and {len(edges)} edges to {out_dir}")


if __name__ == "__main__":
    main()
