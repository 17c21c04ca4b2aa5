"""Generated by ``python -m cubepaths.constructor.generate``; do not edit.

Base connectors and forbidden configurations derived by exhaustive oracle
search (``oracle_solve`` with certificates disabled) over these families:

* n=1: every pair-set of Q_1 (size in [1])
* n=2: every pair-set of Q_2 (size in [1, 2, 3, 4])
* n=3: balanced pair-sets of Q_3 with at most two pairs (size in [1, 2], balanced)
* n=3: two edge-pairs plus a diametrical pair in Q_3 (size in [3], diminishable, edge-pairs 2)

``TABLES[n][key]`` maps a canonical key (sorted ``(u, v)`` int pairs, as
produced by ``symmetry.canonical_key``) to the paths of a connector of that
representative, listed in pair order, or ``None`` when the search refuted it.

``FORBIDDEN`` holds the non-connectable classes: C0 and C1 are the two
balanced two-pair classes of Q_3 (C0 has both pairs on one square face),
C2 is the single non-connectable odd class of Q_4 with at most three pairs.
"""

TABLES = {1: {((0, 1),): ((0, 1),)},
 2: {((0, 0), (1, 1), (2, 3)): ((0,), (2, 3), (1,)),
     ((0, 0), (1, 2)): ((0,), (2, 3, 1)),
     ((0, 0), (1, 2), (3, 3)): None,
     ((0, 0), (1, 3)): None,
     ((0, 1),): ((0, 2, 3, 1),),
     ((0, 1), (2, 3)): ((0, 1), (2, 3)),
     ((0, 3),): None,
     ((0, 3), (1, 2)): None},
 3: {((0, 0), (1, 2)): ((0,), (2, 3, 7, 6, 4, 5, 1)),
     ((0, 0), (1, 7)): ((0,), (1, 3, 2, 6, 4, 5, 7)),
     ((0, 1),): ((0, 2, 3, 7, 6, 4, 5, 1),),
     ((0, 1), (2, 3)): ((0, 1), (2, 6, 4, 5, 7, 3)),
     ((0, 1), (2, 5)): ((0, 1), (2, 3, 7, 6, 4, 5)),
     ((0, 1), (2, 5), (3, 7)): ((0, 1), (2, 6, 4, 5), (3, 7)),
     ((0, 1), (2, 6)): ((0, 1), (2, 3, 7, 5, 4, 6)),
     ((0, 1), (6, 7)): ((0, 2, 3, 1), (6, 4, 5, 7)),
     ((0, 3), (1, 2)): None,
     ((0, 3), (1, 4)): ((0, 2, 3), (4, 6, 7, 5, 1)),
     ((0, 3), (4, 7)): None,
     ((0, 7),): ((0, 1, 3, 2, 6, 4, 5, 7),),
     ((0, 7), (1, 6)): ((0, 2, 3, 7), (6, 4, 5, 1))}}

FORBIDDEN = {'C0': (3, ((0, 3), (1, 2))), 'C1': (3, ((0, 3), (4, 7))), 'C2': (4, ((0, 7), (1, 6), (2, 5)))}
