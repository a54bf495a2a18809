#!/usr/bin/env python3
# Copyright 2026 The domsuite Authors
# SPDX-License-Identifier: Apache-2.0
"""Writes data/graphs/connected_n{1..8}.g6: one graph6 record per
isomorphism class of connected graphs of each order.

Orders 1..7 come from the networkx graph atlas. Order 8 is produced by
attaching a new vertex to every connected order-7 graph in every possible
way (every connected graph has a non-cut vertex), then deduplicating with
Weisfeiler-Lehman hashing and VF2 isomorphism inside each hash bucket.
"""
import argparse
import itertools
import os
import sys

import networkx as nx

PUBLISHED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def graph6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas_connected():
    by_order = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n >= 1 and nx.is_connected(g):
            by_order[n].append(g)
    return by_order


def extend(graphs):
    buckets = {}
    out = []
    for g in graphs:
        n = g.number_of_nodes()
        for k in range(1, n + 1):
            for nbrs in itertools.combinations(range(n), k):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "graphs"))
    args = ap.parse_args()
    by_order = atlas_connected()
    by_order[8] = extend(by_order[7])
    for n, graphs in sorted(by_order.items()):
        if len(graphs) != PUBLISHED[n]:
            sys.exit(f"order {n}: generated {len(graphs)}, expected {PUBLISHED[n]}")
        with open(os.path.join(args.out, f"connected_n{n}.g6"), "w") as f:
            for g in graphs:
                f.write(graph6(nx.convert_node_labels_to_integers(g)) + "\n")
        print(f"n={n}: {len(graphs)}")


if __name__ == "__main__":
    main()
