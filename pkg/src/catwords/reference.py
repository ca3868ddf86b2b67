"""Published reference values: tables of counts, series expansions, pattern listings.

These are transcriptions used as conformance expectations only.  Nothing in
the computational modules reads from here.  Series expansions map a family id
to ``{n: [c_0, c_1, ...]}`` (coefficient of ``x^n`` as a coefficient list in y).
"""

from __future__ import annotations

# Table rows: pair token -> (entry text, numeric prefix for n = 1, 2, ... or None, OEIS tag)
TABLE_CONSTANT = {
    "<=,>=": ("1, 2, 2, 2, ...", [1, 2, 2, 2], None),
    "<=,!=": ("1, 2, 2, 2, ...", [1, 2, 2, 2], None),
    "<=,<=": ("1, 2, 1, 2, 1, 2, ...", [1, 2, 1, 2, 1, 2], None),
    "!=,<=": ("1, 2, 3, 3, 3, ...", [1, 2, 3, 3, 3], None),
}

TABLE_MAIN = {
    "=,=": ("sum_{k=1}^{n} binom(k, n-k) m_{k-1}", None, "A247333"),
    "=,>=": ("1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558, ...", [1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558], "A102407"),
    ">=,=": ("1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558, ...", [1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558], "A102407"),
    "=,>": ("(1 - 2x^2 - sqrt(1 - 4x + 4x^3)) / (2x(1 - x))", None, "A087626"),
    ">,=": ("(1 - 2x^2 - sqrt(1 - 4x + 4x^3)) / (2x(1 - x))", None, "A087626"),
    "=,<=": ("1, 2, 3, 7, 17, 43, 114, 310, 861, 2433, ...", [1, 2, 3, 7, 17, 43, 114, 310, 861, 2433], "A143013"),
    "<=,=": ("1, 2, 3, 7, 17, 43, 114, 310, 861, 2433, ...", [1, 2, 3, 7, 17, 43, 114, 310, 861, 2433], "A143013"),
    "=,<": ("sum_k (-1)^k/(n-k) binom(n-k, k) binom(2n-3k, n-2k-1)", None, "A105633"),
    "<,=": ("sum_k (-1)^k/(n-k) binom(n-k, k) binom(2n-3k, n-2k-1)", None, "A105633"),
    "<,>": ("sum_k (-1)^k/(n-k) binom(n-k, k) binom(2n-3k, n-2k-1)", None, "A105633"),
    "=,!=": ("1, 2, 4, 8, 17, 38, 89, 216, 539, 1374, ...", [1, 2, 4, 8, 17, 38, 89, 216, 539, 1374], "A086615"),
    "!=,=": ("1, 2, 4, 8, 17, 38, 89, 216, 539, 1374, ...", [1, 2, 4, 8, 17, 38, 89, 216, 539, 1374], "A086615"),
    ">=,>=": ("m_n (Motzkin numbers)", None, "A001006"),
    "<,<": ("m_n (Motzkin numbers)", None, "A001006"),
    ">=,>": ("1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, ...", [1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905], "A082582"),
    ">,>=": ("1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, ...", [1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905], "A082582"),
    ">,<": ("1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, ...", [1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905], "A082582"),
    ">=,<=": ("F_{n+1} (Fibonacci number)", None, "A000045"),
    "<=,<": ("F_{n+1} (Fibonacci number)", None, "A000045"),
    "<,<=": ("F_{n+1} (Fibonacci number)", None, "A000045"),
    ">=,<": ("2^{n-1}", None, "A011782"),
    "<=,>": ("2^{n-1}", None, "A011782"),
    ">=,!=": ("binom(n, 2) + 1", None, "A000124"),
    ">,>": ("sum_k 1/(n-k) binom(n-k, k) binom(n-k, k+1) 2^{n-2k-1}", None, "A159771"),
    ">,<=": ("P_{n+1} (Pell numbers)", None, "A000129"),
    ">,!=": ("1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073, ...", [1, 2, 5, 13, 34, 90, 242, 660, 1821, 5073], "New"),
    "<,>=": ("n", None, "A000027"),
    "!=,>=": ("n", None, "A000027"),
    "<,!=": ("1, 2, 3, 6, 12, 25, 54, 119, 267, 608, ...", [1, 2, 3, 6, 12, 25, 54, 119, 267, 608], "New"),
    "!=,>": ("1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869, ...", [1, 2, 4, 9, 22, 56, 146, 388, 1048, 2869], "A152225"),
    "!=,<": ("1, 2, 4, 8, 17, 37, 82, 185, 423, 978, ...", [1, 2, 4, 8, 17, 37, 82, 185, 423, 978], "A292460"),
    "!=,!=": ("1, 2, 3, 6, 11, 22, 43, 87, 176, 362, ...", [1, 2, 3, 6, 11, 22, 43, 87, 176, 362], "A026418"),
}

# Row order of the main table.
TABLE_MAIN_ORDER = list(TABLE_MAIN)

# Bivariate expansions up to x^6.
BIVARIATE_EXPANSIONS = {
    "C1": {3: [3, 1], 4: [5, 5], 5: [8, 16, 2], 6: [13, 43, 16]},
    "C2": {3: [2, 1], 4: [2, 5], 5: [2, 13, 2], 6: [2, 25, 16]},
    "C3": {3: [4], 4: [8, 1], 5: [16, 6], 6: [32, 24, 1]},
    "C4": {3: [3, 1], 4: [4, 4], 5: [5, 10, 2], 6: [6, 20, 12]},
    "C5": {3: [3, 1], 4: [5, 4], 5: [8, 12, 1], 6: [13, 31, 7]},
    "C6": {3: [4, 1], 4: [8, 5], 5: [16, 18, 1], 6: [32, 56, 9]},
    "C7": {3: [2, 1], 4: [2, 3], 5: [2, 5, 1], 6: [2, 7, 4]},
    "C8": {3: [3, 1], 4: [4, 4], 5: [5, 10, 1], 6: [6, 20, 6]},
    "C9": {3: [3, 1], 4: [4, 3], 5: [5, 6], 6: [6, 10]},
    "C10": {3: [4, 1], 4: [8, 4], 5: [16, 12, 1], 6: [32, 32, 6]},
    "C11": {3: [4, 1], 4: [8, 5], 5: [16, 18], 6: [32, 56, 2]},
    "C13": {3: [3], 4: [5, 1], 5: [8, 4], 6: [13, 12]},
    "C14": {3: [4], 4: [8, 1], 5: [16, 6], 6: [32, 24]},
    "C15": {3: [3, 1], 4: [5, 3], 5: [8, 9], 6: [13, 22, 2]},
    "C16": {3: [3], 4: [5, 1], 5: [8, 3], 6: [13, 9]},
}
# every expansion starts 1 + x + 2x^2
for _exp in BIVARIATE_EXPANSIONS.values():
    _exp.update({0: [1], 1: [1], 2: [2]})

# Descent-total expansions: {n: coefficient of x^n}.
DESCENT_EXPANSIONS = {
    "C1": dict(zip(range(3, 10), [1, 5, 20, 75, 271, 964, 3397])),
    "C2": dict(zip(range(3, 10), [1, 5, 17, 57, 188, 610, 1971])),
    "C3": dict(zip(range(4, 10), [1, 6, 26, 100, 363, 1277])),
    "C4": dict(zip(range(3, 10), [1, 4, 14, 44, 134, 400, 1184])),
    "C5": dict(zip(range(3, 10), [1, 4, 14, 45, 140, 427, 1288])),
    "C6": dict(zip(range(3, 10), [1, 5, 20, 74, 263, 914, 3134])),
    "C7": dict(zip(range(3, 10), [1, 3, 7, 15, 30, 58, 109])),
    "C8": dict(zip(range(3, 10), [1, 4, 12, 32, 80, 192, 448])),
    "C9": dict(zip(range(3, 10), [1, 3, 6, 10, 15, 21, 28])),
    "C10": dict(zip(range(3, 10), [1, 4, 14, 44, 131, 376, 1052])),
    "C11": dict(zip(range(3, 10), [1, 5, 18, 60, 196, 632, 2015])),
    "C13": dict(zip(range(4, 10), [1, 4, 12, 35, 97, 262])),
    "C14": dict(zip(range(4, 10), [1, 6, 24, 84, 280, 912])),
    "C15": dict(zip(range(3, 10), [1, 3, 9, 26, 71, 191, 508])),
    "C16": dict(zip(range(4, 10), [1, 3, 9, 22, 55, 131])),
}

# Published pattern listings as (pair, set, where it is listed); some pairs are listed twice
# with different sets.
PATTERN_LISTINGS = [
    ("<,<", {"012"}, "introductory example"),
    ("!=,>=", {"010", "011", "100", "210"}, "introductory example"),
    ("<=,>=", {"000", "010", "011", "110", "120"}, "statement"),
    ("<=,!=", {"001", "010", "012", "110", "120"}, "statement"),
    ("<=,<=", {"000", "001", "011", "012"}, "statement"),
    ("!=,<=", {"011", "012", "100", "101", "201"}, "statement"),
    ("=,>=", {"000", "110"}, "statement"),
    (">=,=", {"000", "100"}, "statement"),
    ("=,<=", {"000", "001"}, "statement"),
    ("<=,=", {"000", "011"}, "statement"),
    ("=,<", {"001"}, "statement"),
    ("<,=", {"011"}, "statement"),
    ("<,>", {"010", "120"}, "statement"),
    ("=,!=", {"001", "110"}, "statement"),
    ("!=,=", {"100", "011"}, "statement"),
    (">=,>=", {"000", "100", "110", "210"}, "statement"),
    (">=,>", {"110", "210"}, "statement"),
    (">,>=", {"100", "210"}, "statement"),
    (">,<", {"201", "101"}, "statement"),
    (">=,<=", {"000", "001", "100", "101", "201"}, "statement"),
    ("<=,<", {"001", "012"}, "statement"),
    ("<,<=", {"011", "012"}, "statement"),
    (">=,<", {"001", "101", "201"}, "statement"),
    (">=,<", {"101", "110", "201"}, "proof"),
    ("<=,>", {"010", "110", "120"}, "statement"),
    (">=,!=", {"001", "102", "201", "110", "210"}, "statement"),
    (">,<=", {"100", "101", "201"}, "statement"),
    (">,!=", {"101", "201", "210"}, "statement"),
    ("<,>=", {"010", "120", "011"}, "statement"),
    ("!=,>=", {"100", "011", "210", "010", "120"}, "statement"),
    ("<,!=", {"010", "012", "120"}, "statement"),
    ("!=,>", {"010", "210", "120"}, "statement"),
    ("!=,<", {"012", "101", "102", "201"}, "statement"),
    ("!=,<", {"012", "101", "201"}, "proof"),
    ("!=,!=", {"010", "012", "101", "201", "120"}, "statement"),
    ("!=,!=", {"010", "012", "101", "120", "201", "210"}, "proof"),
]

# Words of the bold coefficients, as printed (pair token, length, words).
LISTINGS = [
    ("=,>=", 4, ["0010", "0011", "0012", "0100", "0101", "0112", "0120", "0121", "0122", "0123"]),
    ("=,<=", 4, ["0100", "0101", "0110", "0120", "0121", "0122", "0123"]),
    ("<,>", 4, ["0000", "0001", "0011", "0012", "0110", "0111", "0112", "0122", "0123"]),
    ("=,!=", 4, ["0000", "0100", "0101", "0111", "0120", "0121", "0122", "0123"]),
    (">=,>=", 4, ["0010", "0011", "0012", "0101", "0112", "0120", "0121", "0122", "0123"]),
    (">=,>", 4, ["0000", "0001", "0010", "0011", "0012", "0100", "0101", "0111", "0112", "0120",
                 "0121", "0122", "0123"]),
    ("<=,<", 4, ["0000", "0100", "0101", "0110", "0111"]),
    (">=,<", 4, ["0000", "0110", "0111", "0100", "0120", "0121", "0122", "0123"]),
    (">=,!=", 4, ["0000", "0100", "0111", "0120", "0121", "0122", "0123"]),
    (">,<=", 4, ["0000", "0001", "0010", "0011", "0012", "0110", "0111", "0112", "0120", "0121",
                 "0122", "0123"]),
    (">,!=", 4, ["0000", "0001", "0010", "0011", "0012", "0100", "0110", "0111", "0112", "0120",
                 "0121", "0122", "0123"]),
    ("<,!=", 5, ["00000", "00001", "00011", "00110", "00111", "00112", "01100", "01101", "01110",
                 "01111", "01112", "01122"]),
    ("!=,>", 4, ["0000", "0001", "0011", "0012", "0110", "0111", "0112", "0122", "0123"]),
    ("!=,<", 4, ["0000", "0001", "0010", "0011", "0100", "0110", "0111", "0112"]),
    ("!=,!=", 4, ["0000", "0001", "0011", "0110", "0111", "0112"]),
]

# Worked examples of the bijections: (map name, input, printed output).
WORKED_EXAMPLES = [
    ("rewrite_110_100", "0122123300", "0121123000"),
    ("rewrite_eqne", "01012323412300", "00101232341230"),
    ("phi_geq_geq", "0123010122", "0111010001"),
    ("psi_geq_gt", "01234012343454", "01220012345653"),
    ("phi_leq_lt", "01101101111011", "01234567899420"),
]
