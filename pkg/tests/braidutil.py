"""Braid closures as signed Gauss codes, for building classical test knots.

Braid diagrams are planar, so every one-component closure yields a
planar-realizable code; that makes these safe inputs for the classical
Conway oracle.
"""


def braid_closure_gauss_code(word, strands):
    """Gauss code of the closure of a braid word, or None if not a knot.

    ``word`` lists generators: ``i`` crosses position i over position i+1,
    ``-i`` crosses it under (1-based positions).
    """
    at = list(range(strands))  # strand occupying each position
    passages = {s: [] for s in range(strands)}
    for k, letter in enumerate(word, start=1):
        i = abs(letter) - 1
        a, b = at[i], at[i + 1]
        sign = "+" if letter > 0 else "-"
        if letter > 0:
            passages[a].append("O%d%s" % (k, sign))
            passages[b].append("U%d%s" % (k, sign))
        else:
            passages[a].append("U%d%s" % (k, sign))
            passages[b].append("O%d%s" % (k, sign))
        at[i], at[i + 1] = b, a
    end_position = {at[p]: p for p in range(strands)}
    order = []
    s = 0
    for _ in range(strands):
        order.append(s)
        s = end_position[s]
    if len(set(order)) != strands or s != 0:
        return None
    return "".join("".join(passages[s]) for s in order)


def random_knot_braids(rng, count, max_crossings=8, max_strands=3):
    """Seeded stream of one-component braid closures with few crossings."""
    out = []
    while len(out) < count:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_crossings)
        word = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
        code = braid_closure_gauss_code(word, strands)
        if code is not None:
            out.append(code)
    return out
