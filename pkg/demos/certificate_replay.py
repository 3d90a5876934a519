"""Replaying the exchange certificate corpus.

Every builtin case is verified under all of its choice instantiations,
its swap sequence is composed into a permutation to confirm it is exactly
the target transposition, and the published sequence lengths are compared
against a breadth-first shortest search.  One case is also embedded into
a concrete pair of bipartite graphs and replayed there.
"""

from bipfs import (
    apply_swap,
    builtin_corpus,
    embed_case,
    exchangeable,
    sequence_product,
    shortest_exchange,
    swap_legal,
    verify_certificate,
)


def main():
    corpus = builtin_corpus()
    print(f"corpus: {len(corpus)} cases\n")

    width = max(len(c.name) for c in corpus)
    print(f"{'case':{width}s}  tokens  choices  seq  shortest  verdict")
    for case in corpus:
        verdict = verify_certificate(case)
        insts = 1
        for group in case.choices:
            insts *= len(group)
        res = shortest_exchange(case)
        perm = sequence_product(case)
        u, v = case.target
        assert verdict.accepted
        assert perm[u] == v and perm[v] == u
        marker = "=" if res.length == len(case.sequence) else "<"
        print(
            f"{case.name:{width}s}  {len(case.tokens):6d}  {insts:7d}"
            f"  {len(case.sequence):3d}  {res.length:5d} {marker}"
            f"  accepted ({verdict.instantiations_checked} instantiation(s))"
        )

    print()
    case = next(c for c in corpus if c.name == "nearaligned7_direct")
    emb = embed_case(case)
    print(f"embedding {case.name} into K_{{{emb.r},{emb.r}}}")
    res = exchangeable(emb.x, emb.y, emb.state, emb.u, emb.v)
    print(f"  engine verdict from the embedded state: {res.status}")
    cur = emb.state
    for p, q in case.sequence:
        u, v = emb.token_vertex[p], emb.token_vertex[q]
        assert swap_legal(emb.x, emb.y, cur, u, v)
        cur = apply_swap(cur, u, v)
    assert cur == apply_swap(emb.state, emb.u, emb.v)
    print(f"  the case's own {len(case.sequence)}-swap sequence replays on the embedding")


if __name__ == "__main__":
    main()
