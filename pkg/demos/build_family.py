#!/usr/bin/env python3
# Walk through family construction for the smallest instance (p=3, n=2).
from cyclofhs import FhsParams, build_family, class_id, class_members, frequency_counts

params = FhsParams(p=3, n=2)
print(f"length nu = {params.nu}, alphabet m = {params.m}, family size M = {params.M}")

# the residue classes that drive everything: every t in Z_9 lands in
# exactly one of m classes, and class 0 is the only one holding 0
print("\nclasses of Z_9:")
for index in range(params.m):
    members = class_members(class_id(index, params), params)
    print(f"  C_{index} = {members}")

# each sequence reads off the class index of t, then shifts the label;
# sequence i is sequence 0 with every symbol decreased by i mod m
family = build_family(params)
print("\nsequences:")
for seq in family:
    print(f"  X_{seq.seq_index} = {seq.symbols.tolist()}")

print("\nsymbol usage per sequence (symbol: count):")
for seq in family:
    counts = frequency_counts(seq)
    print(f"  X_{seq.seq_index}: {counts}")

# counts match the class sizes, so across the family every symbol is
# used the same total number of times
totals = {s: 0 for s in range(params.m)}
for seq in family:
    for symbol, count in frequency_counts(seq).items():
        totals[symbol] += count
print(f"\nfamily-wide totals: {totals}")
assert set(totals.values()) == {params.nu}
print("every symbol appears exactly nu times across the family")
