"""Iterative Tarjan strongly connected components."""
from __future__ import annotations

from typing import Iterable, Sequence


def strongly_connected_components(nodes: Iterable[int], successors: Sequence[Sequence[int]]) -> list[list[int]]:
    """SCCs of the graph restricted to ``nodes``.

    ``successors[v]`` lists the out-neighbours of ``v``; neighbours outside
    ``nodes`` are ignored.  Components come out in reverse topological order.
    """
    nodes = list(nodes)
    active = set(nodes)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in active:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors[w])))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out
