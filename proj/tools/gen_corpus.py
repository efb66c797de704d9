#!/usr/bin/env python3
"""Generate data/corpus.tsv: named PD codes for the test corpus.

Every entry is built by closing a braid word, so each name is certified by
its construction (torus words, the figure-eight word, granny/square, and
seeded random braids).  Braid letters: a=s1, b=s2, c=s3, d=s4; capitals are
inverses.  The closure must be a one-component connected diagram.

Braid-to-PD convention: strands run upward, X(a,b,c,d) lists arcs
counterclockwise from the incoming under-strand.  A positive generator
takes the left strand over the right one.
"""

import random
import sys
from pathlib import Path


def braid_to_pd(word, strands):
    """word: list of nonzero ints, +i / -i for the i-th generator."""
    arcs = list(range(1, strands + 1))
    nxt = strands + 1
    crossings = []
    for g in word:
        i = abs(g) - 1
        if i + 1 >= strands:
            raise ValueError("generator out of range")
        if g > 0:
            o_out, u_out = nxt, nxt + 1
            crossings.append((arcs[i + 1], o_out, u_out, arcs[i]))
            arcs[i], arcs[i + 1] = u_out, o_out
        else:
            u_out, o_out = nxt, nxt + 1
            crossings.append((arcs[i], arcs[i + 1], u_out, o_out))
            arcs[i], arcs[i + 1] = o_out, u_out
        nxt += 2
    # close up: final label at each position becomes the initial one
    rename = {arcs[j]: j + 1 for j in range(strands)}
    out = []
    for t in crossings:
        out.append(tuple(rename.get(x, x) for x in t))
    return out


def strand_permutation(word, strands):
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def component_count(word, strands):
    perm = strand_permutation(word, strands)
    seen, comps = [False] * strands, 0
    for s in range(strands):
        if seen[s]:
            continue
        comps += 1
        j = s
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return comps


def validate(crossings):
    counts = {}
    for t in crossings:
        for x in t:
            counts[x] = counts.get(x, 0) + 1
    if any(c != 2 for c in counts.values()):
        raise ValueError("arc labels must appear exactly twice")
    if len(counts) != 2 * len(crossings):
        raise ValueError("arc count mismatch")
    # connectivity of the crossing/arc incidence graph
    adjacency = {}
    for idx, t in enumerate(crossings):
        for x in t:
            adjacency.setdefault(x, []).append(idx)
    seen = set()
    stack = [0]
    while stack:
        i = stack.pop()
        if i in seen:
            continue
        seen.add(i)
        for x in crossings[i]:
            for j in adjacency[x]:
                if j not in seen:
                    stack.append(j)
    if len(seen) != len(crossings):
        raise ValueError("disconnected closure")


def pd_string(crossings):
    return " ".join("X(%d,%d,%d,%d)" % t for t in crossings)


def word_name(word):
    letters = "abcd"
    return "".join(
        letters[abs(g) - 1].upper() if g < 0 else letters[abs(g) - 1]
        for g in word
    )


def uses_all_generators(word, strands):
    return {abs(g) for g in word} == set(range(1, strands))


def main():
    entries = []  # (name, pd)
    seen_pd = set()

    def add(name, word, strands):
        if component_count(word, strands) != 1:
            raise ValueError(f"{name}: closure is not a knot")
        xs = braid_to_pd(word, strands)
        validate(xs)
        pd = pd_string(xs)
        if pd in seen_pd:
            return False
        seen_pd.add(pd)
        entries.append((name, pd))
        return True

    # hand-picked fixtures (not braid closures)
    entries.append(("curl-positive", "X(1,1,2,2)"))
    entries.append(("curl-negative", "X(1,2,2,1)"))
    entries.append(("trefoil-left", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"))

    # torus braids T(2,k) and mirrors
    for k in (3, 5, 7, 9):
        add(f"torus-2-{k}", [1] * k, 2)
        add(f"torus-2-{k}-mirror", [-1] * k, 2)
    # T(3,4) = closure of (s1 s2)^4
    add("torus-3-4", [1, 2] * 4, 3)
    add("torus-3-4-mirror", [-1, -2] * 4, 3)

    add("figure-eight", [1, -2, 1, -2], 3)
    add("granny", [1, 1, 1, 2, 2, 2], 3)
    add("square-knot", [1, 1, 1, -2, -2, -2], 3)

    # seeded random braid closures; the word is the name
    rng = random.Random(20260824)
    plan = [(2, range(4, 10), 14), (3, range(5, 11), 22),
            (4, range(6, 11), 18), (5, range(8, 11), 10)]
    for strands, lengths, want in plan:
        got, attempts = 0, 0
        while got < want and attempts < 20000:
            attempts += 1
            length = rng.choice(list(lengths))
            word = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                    for _ in range(length)]
            if not uses_all_generators(word, strands):
                continue
            if component_count(word, strands) != 1:
                continue
            name = f"braid{strands}-{word_name(word)}"
            try:
                if add(name, word, strands):
                    got += 1
            except ValueError:
                continue
        if got < want:
            print(f"warning: only {got}/{want} for {strands} strands",
                  file=sys.stderr)

    out = Path(__file__).resolve().parent.parent / "data" / "corpus.tsv"
    with open(out, "w") as f:
        f.write("# name\tpd\n")
        for name, pd in entries:
            f.write(f"{name}\t{pd}\n")
    by_n = {}
    for _, pd in entries:
        by_n[pd.count("X(")] = by_n.get(pd.count("X("), 0) + 1
    print(f"{len(entries)} entries -> {out}")
    print("crossing histogram:", dict(sorted(by_n.items())))


if __name__ == "__main__":
    main()
