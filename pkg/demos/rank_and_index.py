"""Ranks of sets inside a level, and the index of a family's closure.

symbolic_rank answers "how far does this set sit from the boundary of
the level", as an ordinal.  closure_index assigns the whole downward
closure its height; brute_derivative recomputes small cases from
nothing but repeated boundary-point removal, so the two can be played
against each other.
"""

from schreier import (
    Window,
    brute_derivative,
    closure_index,
    format_ordinal,
    parse_family,
    parse_ordinal,
    symbolic_rank,
)


def main():
    print("== rank of singletons inside A:w ==")
    xi = parse_ordinal("w")
    for k in (1, 2, 3, 5, 9):
        r = symbolic_rank(xi, (k,))
        print(f"  rank({{{k}}}) = {format_ordinal(r)}")

    print()
    print("== longer sets sit closer to the boundary ==")
    for s in ((4,), (4, 6), (4, 6, 7), (4, 6, 7, 9)):
        r = symbolic_rank(xi, s)
        print(f"  rank({s}) = {format_ordinal(r)}")

    print()
    print("== closure indices across the hierarchy ==")
    for lit in ("A:1", "A:4", "A:w", "A:w*2", "B:1", "B:2", "F:1"):
        idx = closure_index(parse_family(lit))
        print(f"  {lit:>6}: {format_ordinal(idx)}")

    print()
    print("== the brute-force derivative agrees on finite levels ==")
    for k in (1, 2, 3):
        table = brute_derivative(parse_family(f"A:{k}").down,
                                 Window(1, 12), max_steps=6)
        print(f"  A:{k} on [1,12]: derivative dies at step {table.index}"
              f" (expected {k + 1})")


if __name__ == "__main__":
    main()
