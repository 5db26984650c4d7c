"""Published tables and lists, transcribed (one-based ids, local numbering per system).

Ray strings use the compact form: tokens 0, 1, -1, i, -i.
"""

RAYS_60 = ('1000', '0100', '0010', '0001', '1111', '1-11-1', '11-1-1', '1-1-11', '1ii-1', '1-ii1', '1i-i1',
 '1-i-i-1', '1100', '1-100', '0011', '001-1', '1i1i', '1-i1-i', '1i-1-i', '1-i-1i', '10i0', '010i',
 '10-i0', '010-i', '1i00', '1-i00', '001i', '001-i', '1010', '0101', '10-10', '010-1', '11ii',
 '1-1i-i', '11-i-i', '1-1-ii', '111-1', '11-11', '1-111', '1-1-1-1', '100i', '01-i0', '01i0',
 '100-i', '1ii1', '1-ii-1', '1i-i-1', '1-i-i1', '1001', '100-1', '0110', '01-10', '11-ii', '11i-i',
 '1-1ii', '1-1-i-i', '1i1-i', '1i-1i', '1-i1i', '1-i-1-i')

PURE_BASES_60 = ((1, 2, 3, 4), (5, 6, 7, 8), (9, 10, 11, 12), (13, 14, 15, 16), (17, 18, 19, 20), (21, 22, 23, 24),
 (25, 26, 27, 28), (29, 30, 31, 32), (33, 34, 35, 36), (37, 38, 39, 40), (41, 42, 43, 44),
 (45, 46, 47, 48), (49, 50, 51, 52), (53, 54, 55, 56), (57, 58, 59, 60))

HYBRID_BASES_60 = ((1, 2, 15, 16), (1, 2, 27, 28), (1, 3, 22, 24), (1, 3, 30, 32), (1, 4, 42, 43), (1, 4, 51, 52),
 (2, 3, 41, 44), (2, 3, 49, 50), (2, 4, 21, 23), (2, 4, 29, 31), (3, 4, 13, 14), (3, 4, 25, 26),
 (5, 6, 19, 20), (5, 6, 31, 32), (5, 7, 14, 16), (5, 7, 34, 36), (5, 8, 46, 47), (5, 8, 50, 52),
 (6, 7, 45, 48), (6, 7, 49, 51), (6, 8, 13, 15), (6, 8, 33, 35), (7, 8, 17, 18), (7, 8, 29, 30),
 (9, 10, 23, 24), (9, 10, 35, 36), (9, 11, 18, 20), (9, 11, 26, 28), (9, 12, 38, 39),
 (9, 12, 49, 52), (10, 11, 37, 40), (10, 11, 50, 51), (10, 12, 17, 19), (10, 12, 25, 27),
 (11, 12, 21, 22), (11, 12, 33, 34), (13, 14, 27, 28), (13, 15, 34, 36), (13, 16, 39, 40),
 (13, 16, 55, 56), (14, 15, 37, 38), (14, 15, 53, 54), (14, 16, 33, 35), (15, 16, 25, 26),
 (17, 18, 31, 32), (17, 19, 26, 28), (17, 20, 43, 44), (17, 20, 54, 56), (18, 19, 41, 42),
 (18, 19, 53, 55), (18, 20, 25, 27), (19, 20, 29, 30), (21, 22, 35, 36), (21, 23, 30, 32),
 (21, 24, 47, 48), (21, 24, 53, 56), (22, 23, 45, 46), (22, 23, 54, 55), (22, 24, 29, 31),
 (23, 24, 33, 34), (25, 28, 46, 48), (25, 28, 59, 60), (26, 27, 45, 47), (26, 27, 57, 58),
 (29, 32, 38, 40), (29, 32, 58, 60), (30, 31, 37, 39), (30, 31, 57, 59), (33, 36, 42, 44),
 (33, 36, 57, 60), (34, 35, 41, 43), (34, 35, 58, 59), (37, 38, 55, 56), (37, 39, 58, 60),
 (37, 40, 49, 52), (38, 39, 50, 51), (38, 40, 57, 59), (39, 40, 53, 54), (41, 42, 54, 56),
 (41, 43, 57, 60), (41, 44, 51, 52), (42, 43, 49, 50), (42, 44, 58, 59), (43, 44, 53, 55),
 (45, 46, 53, 56), (45, 47, 59, 60), (45, 48, 50, 52), (46, 47, 49, 51), (46, 48, 57, 58),
 (47, 48, 54, 55))

RAYS_40 = ('1000', '0100', '0010', '0001', '1111', '1-11-1', '11-1-1', '1-1-11', '1ii-1', '1-ii1', '1i-i1',
 '1-i-i-1', '1100', '1-100', '0011', '001-1', '1i1i', '1-i1-i', '1i-1-i', '1-i-1i', '10i0', '010i',
 '10-i0', '010-i', '111-1', '11-11', '1-111', '1-1-1-1', '100i', '01-i0', '01i0', '100-i', '1ii1',
 '1-ii-1', '1i-i-1', '1-i-i1', '1i1-i', '1i-1i', '1-i1i', '1-i-1-i')

# bases of the 40-40 system in its local numbering
BASES_40 = ((1, 2, 3, 4), (1, 2, 15, 16), (6, 8, 13, 15), (17, 20, 31, 32), (5, 6, 7, 8), (1, 3, 22, 24),
 (7, 8, 17, 18), (18, 19, 29, 30), (9, 10, 11, 12), (1, 4, 30, 31), (9, 10, 23, 24),
 (21, 24, 35, 36), (13, 14, 15, 16), (2, 3, 29, 32), (9, 11, 18, 20), (22, 23, 33, 34),
 (17, 18, 19, 20), (2, 4, 21, 23), (9, 12, 26, 27), (25, 27, 38, 40), (21, 22, 23, 24),
 (3, 4, 13, 14), (10, 11, 25, 28), (26, 28, 37, 39), (25, 26, 27, 28), (5, 6, 19, 20),
 (10, 12, 17, 19), (29, 31, 37, 40), (29, 30, 31, 32), (5, 7, 14, 16), (11, 12, 21, 22),
 (30, 32, 38, 39), (33, 34, 35, 36), (5, 8, 34, 35), (13, 16, 27, 28), (33, 35, 39, 40),
 (37, 38, 39, 40), (6, 7, 33, 36), (14, 15, 25, 26), (34, 36, 37, 38))

PROOF_30_15 = ((1, 2, 15, 16), (17, 20, 31, 32), (1, 3, 22, 24), (9, 10, 23, 24), (2, 3, 29, 32),
 (22, 23, 33, 34), (9, 12, 26, 27), (25, 27, 38, 40), (5, 6, 19, 20), (10, 12, 17, 19),
 (29, 31, 37, 40), (5, 7, 14, 16), (6, 7, 33, 36), (14, 15, 25, 26), (34, 36, 37, 38))

PROOF_32_17 = ((1, 2, 3, 4), (1, 2, 15, 16), (5, 6, 7, 8), (1, 3, 22, 24), (18, 19, 29, 30), (1, 4, 30, 31),
 (9, 10, 23, 24), (9, 11, 18, 20), (22, 23, 33, 34), (10, 11, 25, 28), (26, 28, 37, 39),
 (5, 6, 19, 20), (29, 31, 37, 40), (5, 7, 14, 16), (5, 8, 34, 35), (33, 35, 39, 40),
 (14, 15, 25, 26))

PROOF_34_19 = ((1, 2, 3, 4), (1, 2, 15, 16), (5, 6, 7, 8), (1, 3, 22, 24), (18, 19, 29, 30), (9, 10, 11, 12),
 (1, 4, 30, 31), (9, 10, 23, 24), (9, 11, 18, 20), (22, 23, 33, 34), (9, 12, 26, 27),
 (25, 27, 38, 40), (5, 6, 19, 20), (29, 31, 37, 40), (5, 7, 14, 16), (5, 8, 34, 35),
 (33, 35, 39, 40), (37, 38, 39, 40), (14, 15, 25, 26))

DODECAGONS = ((1, 3, 2, 4, 13, 15, 14, 16, 25, 27, 26, 28), (1, 2, 3, 4, 21, 22, 23, 24, 29, 30, 31, 32),
 (1, 2, 4, 3, 41, 42, 44, 43, 49, 51, 50, 52), (5, 7, 6, 8, 17, 19, 18, 20, 29, 31, 30, 32),
 (5, 6, 7, 8, 13, 14, 15, 16, 33, 34, 35, 36), (5, 6, 8, 7, 45, 46, 48, 47, 49, 50, 51, 52),
 (9, 11, 10, 12, 21, 23, 22, 24, 33, 35, 34, 36), (9, 10, 11, 12, 17, 18, 19, 20, 25, 26, 27, 28),
 (9, 10, 12, 11, 37, 38, 40, 39, 50, 49, 51, 52), (13, 14, 16, 15, 37, 39, 38, 40, 53, 55, 54, 56),
 (17, 18, 20, 19, 41, 43, 42, 44, 53, 54, 55, 56), (21, 22, 24, 23, 45, 47, 46, 48, 54, 53, 55, 56),
 (25, 26, 28, 27, 45, 46, 47, 48, 57, 59, 58, 60), (29, 30, 32, 31, 37, 38, 39, 40, 57, 58, 59, 60),
 (33, 34, 36, 35, 41, 42, 43, 44, 58, 57, 59, 60))

COVERINGS = ((1, 4, 9, 12, 15), (1, 6, 7, 11, 14), (2, 5, 9, 11, 13), (2, 6, 8, 10, 15), (3, 4, 7, 10, 13),
 (3, 5, 8, 12, 14))

RAYS_36 = ('1000', '0100', '0010', '0001', '1111', '1-11-1', '11-1-1', '1-1-11', '1ii-1', '1-ii1', '1i-i1',
 '1-i-i-1', '1100', '1-100', '0011', '001-1', '1i1i', '1-i1-i', '1i-1-i', '1-i-1i', '1i00', '1-i00',
 '001i', '001-i', '1010', '0101', '10-10', '010-1', '111-1', '11-11', '1-111', '1-1-1-1', '1001',
 '100-1', '0110', '01-10')

BASES_36 = ((1, 2, 15, 16), (5, 6, 27, 28), (9, 12, 30, 31), (15, 16, 21, 22), (1, 2, 23, 24), (5, 7, 14, 16),
 (9, 12, 33, 36), (17, 18, 27, 28), (1, 3, 26, 28), (5, 8, 34, 36), (10, 11, 29, 32),
 (17, 19, 22, 24), (1, 4, 35, 36), (6, 7, 33, 35), (10, 11, 34, 35), (18, 20, 21, 23),
 (2, 3, 33, 34), (6, 8, 13, 15), (10, 12, 17, 19), (19, 20, 25, 26), (2, 4, 25, 27), (7, 8, 17, 18),
 (10, 12, 21, 23), (25, 28, 30, 32), (3, 4, 13, 14), (7, 8, 25, 26), (13, 14, 23, 24),
 (26, 27, 29, 31), (3, 4, 21, 22), (9, 11, 18, 20), (13, 16, 31, 32), (29, 32, 33, 36),
 (5, 6, 19, 20), (9, 11, 22, 24), (14, 15, 29, 30), (30, 31, 34, 35))

PROOF_26_15 = ((1, 2, 15, 16), (5, 6, 27, 28), (1, 2, 23, 24), (5, 7, 14, 16), (1, 3, 26, 28), (5, 8, 34, 36),
 (17, 19, 22, 24), (1, 4, 35, 36), (18, 20, 21, 23), (7, 8, 17, 18), (26, 27, 29, 31),
 (3, 4, 21, 22), (5, 6, 19, 20), (14, 15, 29, 30), (30, 31, 34, 35))

PROOF_47_29 = ((1, 2, 15, 16), (1, 2, 27, 28), (1, 3, 22, 24), (1, 4, 42, 43), (3, 4, 13, 14), (5, 6, 19, 20),
 (5, 6, 31, 32), (5, 7, 14, 16), (5, 7, 34, 36), (5, 8, 46, 47), (5, 8, 50, 52), (6, 7, 45, 48),
 (6, 7, 49, 51), (6, 8, 13, 15), (6, 8, 33, 35), (7, 8, 17, 18), (7, 8, 29, 30), (9, 10, 35, 36),
 (9, 12, 49, 52), (10, 12, 17, 19), (18, 20, 25, 27), (22, 23, 45, 46), (23, 24, 33, 34),
 (25, 28, 59, 60), (29, 32, 58, 60), (30, 31, 57, 59), (42, 43, 49, 50), (46, 47, 49, 51),
 (46, 48, 57, 58))

# triad per row of the ray table; a leading '-' marks a negated member
TRIADS = (
    ("Z1", "Z2", "Z1Z2"), ("X1", "X2", "X1X2"), ("Y1", "Y2", "Y1Y2"),
    ("Z1", "X2", "Z1X2"), ("X1", "Y2", "X1Y2"), ("Y1", "Z2", "Y1Z2"),
    ("Z1", "Y2", "Z1Y2"), ("X1", "Z2", "X1Z2"), ("Y1", "X2", "Y1X2"),
    ("Z1X2", "X1Z2", "Y1Y2"), ("X1Y2", "Y1X2", "Z1Z2"), ("Y1Z2", "Z1Y2", "X1X2"),
    ("Z1Z2", "X1X2", "-Y1Y2"), ("Z1X2", "X1Y2", "-Y1Z2"), ("Z1Y2", "X1Z2", "-Y1X2"),
)

# maximal MUB sets, as triad row numbers
MUB_ROWS = (
    (1, 2, 3, 14, 15),
    (1, 5, 9, 10, 12),
    (2, 6, 7, 10, 11),
    (3, 4, 8, 11, 12),
    (4, 5, 6, 13, 15),
    (7, 8, 9, 13, 14),
)

CENSUS_40 = {
    "30_2-15_4": 64,
    "30_2 2_4-17_4": 2880,
    "30_2 4_4-19_4": 13440,
    "30_2 6_4-21_4": 13440,
    "30_2 8_4-23_4": 2880,
    "30_2 10_4-25_4": 64,
}

BRIEF_36 = (
    "18-9", "22-11", "24-13", "26-13", "26-15", "28-15", "29-15", "30-15", "30-17",
    "31-17", "32-17", "32-19", "33-19", "34-19", "34-21", "35-21", "36-21",
)

# a line-type configuration in the 40-40 system (local numbering)
DESARGUES_POINTS = (4, 8, 11, 13, 18, 21, 28, 30, 35, 39)
DESARGUES_LINES = (
    (4, 8, 28), (4, 11, 35), (4, 18, 39), (8, 11, 30), (8, 21, 39),
    (11, 13, 39), (13, 18, 35), (13, 21, 30), (18, 21, 28), (28, 30, 35),
)
EXAMPLE_LINE = (4, 8, 28)
EXAMPLE_TRIANGLE = (1, 5, 27)

PROFILE_LISTS = {
    19: ("35_2 1_6", "33_2 1_4 1_6", "31_2 2_4 1_6", "29_2 3_4 1_6"),
    21: ("39_2 1_6", "37_2 1_4 1_6", "35_2 2_4 1_6", "33_2 3_4 1_6", "31_2 4_4 1_6", "29_2 5_4 1_6"),
    23: ("43_2 1_6", "41_2 1_4 1_6", "39_2 2_4 1_6", "37_2 3_4 1_6", "35_2 4_4 1_6", "29_2 7_4 1_6"),
    29: ("36_2 11_4", "37_2 9_4 1_6", "38_2 7_4 2_6", "39_2 5_4 3_6", "40_2 3_4 4_6"),
    31: ("42_2 10_4", "43_2 8_4 1_6", "44_2 6_4 2_6", "45_2 4_4 3_6", "46_2 2_4 4_6"),
}
