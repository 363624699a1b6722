"""Text renderings: weighted root posets as DOT digraphs and labelled Dynkin
diagrams as ASCII art.  Output is a pure function of the input."""

from __future__ import annotations

from typing import Dict, List

from .rootsys import AlgebraType, DynkinLabels, _edges_and_lengths, root_poset, root_system


def poset_dot(t: AlgebraType, labels: DynkinLabels) -> str:
    """Hasse diagram of the positive roots, ``alpha -> alpha + alpha_i``.

    Node labels read ``coordinates | weight``; edge labels give ``i``.
    """
    poset = root_poset(root_system(t), labels)
    lines = [f'digraph "{t.name} {labels}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for k, (root, w) in enumerate(poset.nodes):
        coords = "".join(map(str, root))
        lines.append(f'  r{k} [label="{coords} | {w}"];')
    for a, b, i in poset.edges:
        lines.append(f'  r{a} -> r{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_ascii(t: AlgebraType, labels: DynkinLabels) -> str:
    """Positive roots grouped by height, each shown as ``coords:weight``."""
    poset = root_poset(root_system(t), labels)
    rows: Dict[int, List[str]] = {}
    for root, w in poset.nodes:
        rows.setdefault(sum(root), []).append(f"{''.join(map(str, root))}:{w}")
    return "\n".join(f"{h:>3} | " + " ".join(rows[h]) for h in sorted(rows, reverse=True)) + "\n"


def _bond(lengths: List[int], i: int, j: int) -> str:
    """Three-character connector from node ``i`` (left) to ``j`` (right)."""
    big, small = max(lengths[i], lengths[j]), min(lengths[i], lengths[j])
    mult = big // small
    if mult == 1:
        return "---"
    mark = "=" if mult == 2 else "3"
    return f"{mark}{mark}>" if lengths[i] > lengths[j] else f"<{mark}{mark}"


def dynkin_ascii(t: AlgebraType, labels: DynkinLabels) -> str:
    """Labelled Dynkin diagram.  Double bonds are drawn ``==>`` and triple
    bonds ``33>``, pointing at the short root.  A branch node hangs below
    the node it is attached to."""
    lengths, edges = _edges_and_lengths(t)
    n = t.rank
    lab = labels.labels
    if n == 1:
        return f"{lab[0]}\n"
    if t.family == "D":
        chain, branch = list(range(n - 1)), (n - 1, n - 3)
    elif t.family in ("E6", "E7", "E8"):
        chain, branch = [0, 1, 2] + list(range(4, n)), (3, 2)
    else:
        chain, branch = list(range(n)), None
    top = str(lab[chain[0]])
    cols = {chain[0]: 0}
    for a, b in zip(chain, chain[1:]):
        top += _bond(lengths, a, b)
        cols[b] = len(top)
        top += str(lab[b])
    out = [top]
    if branch:
        node, anchor = branch
        pad = " " * cols[anchor]
        out += [pad + "|", pad + str(lab[node])]
    return "\n".join(out) + "\n"
