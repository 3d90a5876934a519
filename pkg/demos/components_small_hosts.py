"""Exact component censuses over small host pairs.

Walks the basic landscape: complete pairs split into exactly two pieces
(the parity classes), a spanning cycle shatters the space into many equal
orbits, and a two-block position graph freezes some placements solid.
"""

from bipfs import (
    complete_host,
    count_isolated_states,
    cycle_host,
    fs_component_count,
    make_bigraph,
)


def show(label, x, y):
    rep = fs_component_count(x, y)
    sizes = ", ".join(f"{n} x{c}" for n, c in sorted(rep.component_sizes.items()))
    print(f"{label:28s} components = {rep.component_count:4d}   sizes: {sizes}")
    return rep


def main():
    print("complete pairs: the two parity classes and nothing else")
    for r in (2, 3, 4):
        rep = show(f"  FS(K{r}{r}, K{r}{r})", complete_host(r), complete_host(r))
        assert rep.component_count == 2
        assert rep.parity_split[0] == rep.parity_split[1]

    print()
    print("a spanning cycle as the token graph fractures the space")
    show("  FS(K33, C6)", complete_host(3), cycle_host(3))
    show("  FS(K44, C8)", complete_host(4), cycle_host(4))

    print()
    print("two-block positions against a complete token graph freeze states")
    blocks = make_bigraph(3, [(0, 4), (0, 5), (1, 3), (2, 3)])
    rep = show("  FS(K12+K21, K33)", blocks, complete_host(3))
    iso = count_isolated_states(blocks, complete_host(3), count_all=True)
    print(f"  of the 720 placements, {iso.isolated_total} admit no legal swap at all")
    assert rep.component_sizes[1] == iso.isolated_total

    print()
    print("swapping the two roles changes nothing")
    a = fs_component_count(cycle_host(3), complete_host(3))
    b = fs_component_count(complete_host(3), cycle_host(3))
    assert a.component_count == b.component_count
    print(f"  FS(C6, K33) = FS(K33, C6) = {a.component_count}")


if __name__ == "__main__":
    main()
