"""Qubits as graph edges: faces, stars, walks, and staircase certificates.

The canonical code at (alpha, n) lives on a circulant graph: vertices Z/nZ,
a unit edge k <-> k+1 and a long edge k <-> k+alpha for every k.  Its
incidence matrix IS h_x, the quadrilateral faces are the rows of h_z, and a
closed walk toggles an edge set lying in ker h_x.  A walk's net displacement
(#unit steps forward - backward, #long steps forward - backward) lands in the
attached lattice, and walks realizing a nonzero displacement escape the face
span: they are logical operators.
"""

from gbcodex import TorusGraph, Walk, build, canonical_spec, is_logical_x
from gbcodex.gf2matrix import mat_vec


def main():
    n, alpha = 13, 5
    graph = TorusGraph(n, alpha)
    code = build(canonical_spec(alpha, n))

    print(f"graph on Z/{n}Z with unit and {alpha}-edges")
    print("incidence matrix equals h_x:", graph.incidence_matrix() == code.h_x)
    print("face(0) edge indices       :", graph.face(0).support())
    print("cocycle(0) edge indices    :", graph.cocycle(0).support())
    print()

    # a closed walk: 2 steps forward, then 3 long steps backward wraps to 0
    walk = Walk(start=0, steps=(1, 1, -alpha, -alpha, -alpha))
    vec = graph.walk_edge_vector(walk)
    print("walk steps      :", walk.steps)
    print("net displacement:", graph.lift(walk))
    print("in ker h_x      :", mat_vec(code.h_x, vec.bits) == 0)
    print("sum of faces    :", graph.is_sum_of_faces(vec))
    print()

    # the same cycle built directly from its lattice displacement
    stair = graph.staircase((2, -3))
    print("staircase (2, -3) edges:", stair.support())
    print("weight                 :", stair.weight)
    print("logical operator       :", is_logical_x(code, stair.bits))
    print()

    # faces are never logical; adding one to the staircase keeps it logical
    combined = stair ^ graph.face(4)
    print("staircase + face(4) still logical:", is_logical_x(code, combined.bits),
          "weight now", combined.weight)


if __name__ == "__main__":
    main()
