"""Four-valued connectives of ordered question pairs.

A yes-no question pair asked in sequence needs three answers to evaluate a
connective: the first answer, the second question's undisturbed answer, and
its answer after the first question has been asked nonselectively.  When the
last two agree, every connective is Boolean; when they disagree, half-integer
values appear, including a conjunction of -1/2 and a disjunction of 3/2.
"""

import itertools

from quasilogic import logic

for name in ("conjunction", "inclusive_or", "xor"):
    print(logic.truth_table_text(name))

print("Boolean corners (undisturbed second question):")
for record in logic.ALL_RECORDS:
    if record.boolean:
        print(
            f"  a={record.a} b={record.b_alone}: "
            f"and={logic.conjunction_value(record)} "
            f"or={logic.or_value(record)} "
            f"xor={logic.xor_value(record)}"
        )

print()
print("Every identity holds for every pair of ordered records:")
reports = [
    logic.identity_suite(r_ab, r_ba)
    for r_ab, r_ba in itertools.product(logic.ALL_RECORDS, repeat=2)
]
print(f"  {sum(rep.all_pass for rep in reports)} / {len(reports)} pairs pass")

print()
print("The most non-classical single record, a=0, b_alone=0, b_after=1:")
record = logic.CounterfactualRecord(0, 0, 1)
print(f"  conjunction = {logic.conjunction_value(record)}  (below zero)")
print(f"  disjunction = {logic.or_value(record)}")
print(f"  xor         = {logic.xor_value(record)}")
