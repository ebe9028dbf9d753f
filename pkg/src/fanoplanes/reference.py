"""Reference values checked by ``fanoplanes reproduce`` and the acceptance tests.

Transcribed by hand; nothing here is computed.
"""

# wedge^r E* on Gr(3, 10) as multiplicities of Schur functors of S.
WEDGE_E_TABLE = {
    0: {(): 1},
    1: {(2,): 3},
    2: {(4,): 3, (3, 1): 6, (2, 2): 3},
    3: {(6,): 1, (5, 1): 8, (4, 2): 9, (4, 1, 1): 10, (3, 3): 10, (3, 2, 1): 8, (2, 2, 2): 1},
    4: {(7, 1): 3, (6, 2): 9, (6, 1, 1): 15, (5, 3): 18, (5, 2, 1): 24, (4, 4): 6,
        (4, 3, 1): 33, (4, 2, 2): 9, (3, 3, 2): 15},
    5: {(8, 2): 3, (8, 1, 1): 6, (7, 3): 9, (7, 2, 1): 24, (6, 4): 18, (6, 3, 1): 54,
        (6, 2, 2): 21, (5, 5): 6, (5, 4, 1): 48, (5, 3, 2): 54, (4, 4, 2): 39, (4, 3, 3): 30},
    6: {(9, 3): 1, (9, 2, 1): 8, (8, 4): 8, (8, 3, 1): 27, (8, 2, 2): 19, (7, 5): 9,
        (7, 4, 1): 64, (7, 3, 2): 62, (6, 6): 10, (6, 5, 1): 53, (6, 4, 2): 117, (6, 3, 3): 56,
        (5, 5, 2): 46, (5, 4, 3): 88, (4, 4, 4): 38},
    7: {(10, 3, 1): 3, (10, 2, 2): 6, (9, 5): 3, (9, 4, 1): 24, (9, 3, 2): 27, (8, 6): 6,
        (8, 5, 1): 42, (8, 4, 2): 93, (8, 3, 3): 36, (7, 7): 3, (7, 6, 1): 48, (7, 5, 2): 132,
        (7, 4, 3): 144, (6, 6, 2): 66, (6, 5, 3): 138, (6, 4, 4): 114, (5, 5, 4): 60},
    8: {(11, 3, 2): 3, (10, 5, 1): 9, (10, 4, 2): 24, (10, 3, 3): 9, (9, 7): 3, (9, 6, 1): 24,
        (9, 5, 2): 75, (9, 4, 3): 72, (8, 7, 1): 24, (8, 6, 2): 102, (8, 5, 3): 168,
        (8, 4, 4): 99, (7, 7, 2): 69, (7, 6, 3): 168, (7, 5, 4): 213, (6, 6, 4): 96,
        (6, 5, 5): 75},
    9: {(12, 3, 3): 1, (11, 5, 2): 9, (11, 4, 3): 8, (10, 7, 1): 9, (10, 6, 2): 36,
        (10, 5, 3): 63, (10, 4, 4): 28, (9, 9): 1, (9, 8, 1): 8, (9, 7, 2): 63, (9, 6, 3): 128,
        (9, 5, 4): 142, (8, 8, 2): 28, (8, 7, 3): 142, (8, 6, 4): 216, (8, 5, 5): 146,
        (7, 7, 4): 146, (7, 6, 5): 160, (6, 6, 6): 20},
    18: {(12, 12, 12): 1},
    17: {(12, 12, 10): 3},
    16: {(12, 12, 8): 3, (12, 11, 9): 6, (12, 10, 10): 3},
    15: {(12, 12, 6): 1, (12, 11, 7): 8, (12, 10, 8): 9, (11, 11, 8): 10, (12, 9, 9): 10,
         (11, 10, 9): 8, (10, 10, 10): 1},
    14: {(12, 11, 5): 3, (12, 10, 6): 9, (11, 11, 6): 15, (12, 9, 7): 18, (11, 10, 7): 24,
         (12, 8, 8): 6, (11, 9, 8): 33, (10, 10, 8): 9, (10, 9, 9): 15},
    13: {(12, 10, 4): 3, (11, 11, 4): 6, (12, 9, 5): 9, (11, 10, 5): 24, (12, 8, 6): 18,
         (11, 9, 6): 54, (10, 10, 6): 21, (12, 7, 7): 6, (11, 8, 7): 48, (10, 9, 7): 54,
         (10, 8, 8): 39, (9, 9, 8): 30},
    12: {(12, 9, 3): 1, (11, 10, 3): 8, (12, 8, 4): 8, (11, 9, 4): 27, (10, 10, 4): 19,
         (12, 7, 5): 9, (11, 8, 5): 64, (10, 9, 5): 62, (12, 6, 6): 10, (11, 7, 6): 53,
         (10, 8, 6): 117, (9, 9, 6): 56, (10, 7, 7): 46, (9, 8, 7): 88, (8, 8, 8): 38},
    11: {(11, 9, 2): 3, (10, 10, 2): 6, (12, 7, 3): 3, (11, 8, 3): 24, (10, 9, 3): 27,
         (12, 6, 4): 6, (11, 7, 4): 42, (10, 8, 4): 93, (9, 9, 4): 36, (12, 5, 5): 3,
         (11, 6, 5): 48, (10, 7, 5): 132, (9, 8, 5): 144, (10, 6, 6): 66, (9, 7, 6): 138,
         (8, 8, 6): 114, (8, 7, 7): 60},
    10: {(10, 9, 1): 3, (11, 7, 2): 9, (10, 8, 2): 24, (9, 9, 2): 9, (12, 5, 3): 3,
         (11, 6, 3): 24, (10, 7, 3): 75, (9, 8, 3): 72, (11, 5, 4): 24, (10, 6, 4): 102,
         (9, 7, 4): 168, (8, 8, 4): 99, (10, 5, 5): 69, (9, 6, 5): 168, (8, 7, 5): 213,
         (8, 6, 6): 96, (7, 7, 6): 75},
}

# Summands of wedge^r E* with nonzero cohomology, by cohomological degree.
ACTIVE_WEIGHTS = {
    0: [(0, 0, 0)],
    7: [(8, 1, 1)],
    14: [(9, 9, 0), (10, 9, 1), (9, 9, 2), (10, 10, 2), (11, 9, 2)],
    21: [(10, 10, 10), (12, 10, 10), (12, 12, 10), (12, 12, 12)],
}

WEDGE_SYM2 = {0: {(): 1}, 1: {(2,): 1}, 2: {(3, 1): 1}, 3: {(3, 3): 1, (4, 1, 1): 1},
              4: {(4, 3, 1): 1}, 5: {(4, 4, 2): 1}, 6: {(4, 4, 4): 1}}

SPECTRAL_DIMS = {(0, 0): 1, (-5, 7): 6, (-9, 14): 55, (-10, 14): 306, (-11, 14): 435,
                 (-15, 21): 1, (-16, 21): 165, (-17, 21): 2475, (-18, 21): 4950}

SYM2_CHERN = {
    1: {(1,): 4},
    2: {(2,): 5, (1, 1): 10},
    3: {(3,): 2, (2, 1): 15, (1, 1, 1): 20},
    4: {(3, 1): 6, (2, 2): 10, (2, 1, 1): 30},
    5: {(3, 2): 4, (3, 1, 1): 12, (2, 2, 1): 20},
    6: {(3, 2, 1): 8},
}
E_CHERN = {1: {(1,): 12}, 2: {(2,): 63, (1, 1): 78}, 3: {(3,): 190, (2, 1): 533, (1, 1, 1): 364}}
TGR_CHERN = {1: {(1,): 10}, 2: {(2,): 47, (1, 1): 51}, 3: {(3,): 140, (2, 1): 310, (1, 1, 1): 180}}
TGR_CH = {2: {(2,): 3, (1, 1): -1}, 3: {(3,): "5/3", (2, 1): "-5/3", (1, 1, 1): "5/3"}}
TF_CHERN = {1: {(1,): -2}, 2: {(2,): 8, (1, 1): -3}, 3: {(3,): -20, (2, 1): -1, (1, 1, 1): 8}}

# sigma_{3,2,1}^3 with three rows and unbounded columns; [F] = 512 times this.
FANO_CLASS_UNIT = {(9, 6, 3): 1, (9, 5, 4): 2, (8, 7, 3): 2, (8, 6, 4): 6, (8, 5, 5): 4,
                   (7, 7, 4): 4, (7, 6, 5): 8, (6, 6, 6): 2}

CI_MIDDLE_HODGE = {4: (5, 5), 5: (1, 20, 1), 6: (14, 14), 7: (3, 38, 3), 8: (27, 27),
                   9: (6, 62, 6), 10: (44, 44)}

HODGE_ROWS = [[1], [0, 0], [6, 62, 6], [2823, 15684, 15684, 2823]]

HRR = {0: -2816, 1: 0, 2: 2816, 3: 16896}
CHI_OMEGA1 = 15616
CHI_TOP = -36864
DEGREE = 11264
K_CUBED = 90112
POINTS_N8 = 1024
SHEAF_COHOMOLOGY = (1, 0, 6, 2823)
E2_CONJECTURAL = {(-18, 21): 2639, (-11, 14): 184}
