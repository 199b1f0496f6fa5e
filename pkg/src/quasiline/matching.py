"""Bipartite maximum matching by augmenting paths.

Deterministic: vertices are scanned in sorted order, so identical inputs
give identical matchings.  Also derives a König vertex cover, which the
homogeneous-pair reduction uses to pick which cross edges survive.
"""

from __future__ import annotations

from typing import Mapping, Sequence


def max_bipartite_matching(left: Sequence[int],
                           adj: Mapping[int, Sequence[int]],
                           ) -> dict[int, int]:
    """Maximum matching; returns {left vertex: right vertex}."""
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in sorted(adj.get(u, ())):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_l[u] = w
                match_r[w] = u
                return True
        return False

    for u in sorted(left):
        if u not in match_l:
            augment(u, set())
    return match_l


def koenig_cover(left: Sequence[int], right: Sequence[int],
                 adj: Mapping[int, Sequence[int]],
                 match_l: Mapping[int, int]) -> tuple[set[int], set[int]]:
    """Minimum vertex cover (L-part, R-part) from a maximum matching."""
    match_r = {w: u for u, w in match_l.items()}
    z_l = {u for u in left if u not in match_l}
    z_r: set[int] = set()
    frontier = list(sorted(z_l))
    while frontier:
        nxt = []
        for u in frontier:
            for w in sorted(adj.get(u, ())):
                if w in z_r:
                    continue
                z_r.add(w)
                if w in match_r and match_r[w] not in z_l:
                    z_l.add(match_r[w])
                    nxt.append(match_r[w])
        frontier = nxt
    return set(left) - z_l, z_r & set(right)
