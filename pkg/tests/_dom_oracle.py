"""Definition-level dominator and flowgraph-bridge oracles for tests."""

from sbicon import delete_arc


def reachable(g, root):
    seen = {root}
    todo = [root]
    while todo:
        v = todo.pop()
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def fixed_point_dominators(g, root):
    """dom(v) = {v} ∪ ⋂ dom(u) over reachable predecessors u, to a fixed point."""
    reach = reachable(g, root)
    dom = {v: set(reach) for v in reach}
    dom[root] = {root}
    changed = True
    while changed:
        changed = False
        for v in reach - {root}:
            preds = [u for u in g.predecessors(v) if u in reach]
            new = set.intersection(*(dom[u] for u in preds)) | {v}
            if new != dom[v]:
                dom[v] = new
                changed = True
    return reach, dom


def fixed_point_idom(g, root):
    reach, dom = fixed_point_dominators(g, root)
    # strict dominators form a chain; the immediate one has the largest dom set
    return {v: max(dom[v] - {v}, key=lambda d: len(dom[d])) for v in reach - {root}}


def deletion_flowgraph_bridges(g, root):
    return {e for e in g.arcs if len(reachable(delete_arc(g, e), root)) < g.n}
