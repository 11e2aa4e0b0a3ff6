"""Frozen generator images of the Humphries twists.

Keys are ``(genus, curve, sign)``; values list the images of
a1, b1, ..., ag, bg.  Regenerate with ``mcg.derive_twist_table``;
the tests re-derive every entry and compare.
"""

TABLES = {
    (2, 'a1', 1): ('a1', 'b1 A1', 'a2', 'b2'),
    (2, 'a1', -1): ('a1', 'b1 a1', 'a2', 'b2'),
    (2, 'a2', 1): ('a1', 'b1', 'a2', 'b2 A2'),
    (2, 'a2', -1): ('a1', 'b1', 'a2', 'b2 a2'),
    (2, 'b1', 1): ('a1 b1', 'b1', 'a2', 'b2'),
    (2, 'b1', -1): ('a1 B1', 'b1', 'a2', 'b2'),
    (2, 'b2', 1): ('a1', 'b1', 'a2 b2', 'b2'),
    (2, 'b2', -1): ('a1', 'b1', 'a2 B2', 'b2'),
    (2, 'c1', 1): ('a1', 'b1 A1 B1 a2 b1', 'b1 A1 B1 a2 b1 a1 B1', 'b2 A2 b1 a1 B1'),
    (2, 'c1', -1): ('a1', 'A2 b1 a1', 'A2 b1 a1 B1 a2 b1 A1 B1 a2', 'b2 b1 A1 B1 a2'),
    (3, 'a1', 1): ('a1', 'b1 A1', 'a2', 'b2', 'a3', 'b3'),
    (3, 'a1', -1): ('a1', 'b1 a1', 'a2', 'b2', 'a3', 'b3'),
    (3, 'a2', 1): ('a1', 'b1', 'a2', 'b2 A2', 'a3', 'b3'),
    (3, 'a2', -1): ('a1', 'b1', 'a2', 'b2 a2', 'a3', 'b3'),
    (3, 'b1', 1): ('a1 b1', 'b1', 'a2', 'b2', 'a3', 'b3'),
    (3, 'b1', -1): ('a1 B1', 'b1', 'a2', 'b2', 'a3', 'b3'),
    (3, 'b2', 1): ('a1', 'b1', 'a2 b2', 'b2', 'a3', 'b3'),
    (3, 'b2', -1): ('a1', 'b1', 'a2 B2', 'b2', 'a3', 'b3'),
    (3, 'b3', 1): ('a1', 'b1', 'a2', 'b2', 'a3 b3', 'b3'),
    (3, 'b3', -1): ('a1', 'b1', 'a2', 'b2', 'a3 B3', 'b3'),
    (3, 'c1', 1): ('a1', 'b1 A1 B1 a2 b1', 'b1 A1 B1 a2 b1 a1 B1', 'b2 A2 b1 a1 B1', 'a3', 'b3'),
    (3, 'c1', -1): ('a1', 'A2 b1 a1', 'A2 b1 a1 B1 a2 b1 A1 B1 a2', 'b2 b1 A1 B1 a2', 'a3', 'b3'),
    (3, 'c2', 1): ('a1', 'b1', 'a2', 'b2 A2 B2 a3 b2', 'b2 A2 B2 a3 b2 a2 B2', 'b3 A3 b2 a2 B2'),
    (3, 'c2', -1): ('a1', 'b1', 'a2', 'A3 b2 a2', 'A3 b2 a2 B2 a3 b2 A2 B2 a3', 'b3 b2 A2 B2 a3'),
    (4, 'a1', 1): ('a1', 'b1 A1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'a1', -1): ('a1', 'b1 a1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'a2', 1): ('a1', 'b1', 'a2', 'b2 A2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'a2', -1): ('a1', 'b1', 'a2', 'b2 a2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'b1', 1): ('a1 b1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'b1', -1): ('a1 B1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'b2', 1): ('a1', 'b1', 'a2 b2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'b2', -1): ('a1', 'b1', 'a2 B2', 'b2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'b3', 1): ('a1', 'b1', 'a2', 'b2', 'a3 b3', 'b3', 'a4', 'b4'),
    (4, 'b3', -1): ('a1', 'b1', 'a2', 'b2', 'a3 B3', 'b3', 'a4', 'b4'),
    (4, 'b4', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4 b4', 'b4'),
    (4, 'b4', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4 B4', 'b4'),
    (4, 'c1', 1): ('a1', 'b1 A1 B1 a2 b1', 'b1 A1 B1 a2 b1 a1 B1', 'b2 A2 b1 a1 B1', 'a3', 'b3', 'a4', 'b4'),
    (4, 'c1', -1): ('a1', 'A2 b1 a1', 'A2 b1 a1 B1 a2 b1 A1 B1 a2', 'b2 b1 A1 B1 a2', 'a3', 'b3', 'a4', 'b4'),
    (4, 'c2', 1): ('a1', 'b1', 'a2', 'b2 A2 B2 a3 b2', 'b2 A2 B2 a3 b2 a2 B2', 'b3 A3 b2 a2 B2', 'a4', 'b4'),
    (4, 'c2', -1): ('a1', 'b1', 'a2', 'A3 b2 a2', 'A3 b2 a2 B2 a3 b2 A2 B2 a3', 'b3 b2 A2 B2 a3', 'a4', 'b4'),
    (4, 'c3', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3 A3 B3 a4 b3', 'b3 A3 B3 a4 b3 a3 B3', 'b4 A4 b3 a3 B3'),
    (4, 'c3', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'A4 b3 a3', 'A4 b3 a3 B3 a4 b3 A3 B3 a4', 'b4 b3 A3 B3 a4'),
    (5, 'a1', 1): ('a1', 'b1 A1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'a1', -1): ('a1', 'b1 a1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'a2', 1): ('a1', 'b1', 'a2', 'b2 A2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'a2', -1): ('a1', 'b1', 'a2', 'b2 a2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b1', 1): ('a1 b1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b1', -1): ('a1 B1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b2', 1): ('a1', 'b1', 'a2 b2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b2', -1): ('a1', 'b1', 'a2 B2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b3', 1): ('a1', 'b1', 'a2', 'b2', 'a3 b3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b3', -1): ('a1', 'b1', 'a2', 'b2', 'a3 B3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'b4', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4 b4', 'b4', 'a5', 'b5'),
    (5, 'b4', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4 B4', 'b4', 'a5', 'b5'),
    (5, 'b5', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5 b5', 'b5'),
    (5, 'b5', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4', 'a5 B5', 'b5'),
    (5, 'c1', 1): ('a1', 'b1 A1 B1 a2 b1', 'b1 A1 B1 a2 b1 a1 B1', 'b2 A2 b1 a1 B1', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'c1', -1): ('a1', 'A2 b1 a1', 'A2 b1 a1 B1 a2 b1 A1 B1 a2', 'b2 b1 A1 B1 a2', 'a3', 'b3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'c2', 1): ('a1', 'b1', 'a2', 'b2 A2 B2 a3 b2', 'b2 A2 B2 a3 b2 a2 B2', 'b3 A3 b2 a2 B2', 'a4', 'b4', 'a5', 'b5'),
    (5, 'c2', -1): ('a1', 'b1', 'a2', 'A3 b2 a2', 'A3 b2 a2 B2 a3 b2 A2 B2 a3', 'b3 b2 A2 B2 a3', 'a4', 'b4', 'a5', 'b5'),
    (5, 'c3', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3 A3 B3 a4 b3', 'b3 A3 B3 a4 b3 a3 B3', 'b4 A4 b3 a3 B3', 'a5', 'b5'),
    (5, 'c3', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'A4 b3 a3', 'A4 b3 a3 B3 a4 b3 A3 B3 a4', 'b4 b3 A3 B3 a4', 'a5', 'b5'),
    (5, 'c4', 1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'b4 A4 B4 a5 b4', 'b4 A4 B4 a5 b4 a4 B4', 'b5 A5 b4 a4 B4'),
    (5, 'c4', -1): ('a1', 'b1', 'a2', 'b2', 'a3', 'b3', 'a4', 'A5 b4 a4', 'A5 b4 a4 B4 a5 b4 A4 B4 a5', 'b5 b4 A4 B4 a5'),
}
