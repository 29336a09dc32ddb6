"""Walk a pretzel diagram through the pipeline, stage by stage.

    python scripts/pretzel_demo.py 3,4,5,-5
"""

import sys

from chordhom.certificates import reduce, render
from chordhom.khovanov import a_state, circle_graphs, crossing_signs, extreme_khovanov, pretzel_pd


def main(twists: list[int]) -> None:
    d = pretzel_pd(twists)
    print(f"P({','.join(map(str, twists))}): {d.n_crossings} crossings")
    print(f"  PD: {d.pd_text()}")
    p, n = crossing_signs(d)
    state = a_state(d)
    print(f"  signs: p = {p}, n = {n}; A-state circles k = {state.k}")
    print(f"  j_min = p - 2n - k = {p - 2 * n - state.k}")
    for ci, (diagram, g) in enumerate(circle_graphs(state)):
        if g.n:
            cert, _ = reduce(g)
            print(f"  circle {ci}: chords [{diagram}], {g.num_edges()} crossings among them, I ~ {render(cert)}")
    adequate = not any(state.same_circle)
    print(f"  A-adequate: {'yes (empty circle graph, I = S(-1))' if adequate else 'no'}")
    print(f"  {extreme_khovanov(d).summary()}")


if __name__ == "__main__":
    arg = sys.argv[1] if len(sys.argv) > 1 else "3,4,5,-5"
    main([int(t) for t in arg.split(",")])
