"""Closed-form existence rules with their certificates.

Every verdict names the rule it used and the quantities it inspected, so the
decision can be checked by hand.

Run: python demos/04_existence_rules.py
"""
from splitter_sets import GroupCtx, Interval, check_family

cases = [
    (97, Interval(4, 4)),
    (97, Interval(3, 5)),
    (12721, Interval(3, 5)),
    (307009, Interval(2, 6)),
    (2693329, Interval(1, 7)),
    (1171, Interval(1, 5)),
    (41, Interval(4, 6)),  # no closed form: exact cover decides
]
for q, iv in cases:
    v = check_family(GroupCtx.create(q), iv)
    word = {True: "exists", False: "does not exist", None: "undecided"}[v.exists]
    print(f"B{iv}({q}) {word}  via {v.rule}")
    for key, val in v.certificate.items():
        if key not in ("q", "g"):
            print(f"    {key} = {val}")
