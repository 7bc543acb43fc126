"""Frequency-hopping sequence families over the 2n-letter class alphabet.

Sequence i reads off, at time t, the class index of t shifted down by
i, so the support of symbol j in sequence i is exactly class (i + j)
mod 2n.  All 2n cyclic shifts of the class labeling form one family.
"""

from dataclasses import dataclass, field

import numpy as np

from .cyclotomy import FhsParams, class_index_array


@dataclass(frozen=True)
class FhsSequence:
    """One hopping sequence: symbols[t] in [0, 2n) for t in [0, p^n)."""

    seq_index: int
    params: FhsParams
    symbols: np.ndarray = field(compare=False)

    def __len__(self) -> int:
        return self.params.nu


@dataclass(frozen=True)
class FhsFamily:
    params: FhsParams
    sequences: tuple[FhsSequence, ...]

    def __getitem__(self, i: int) -> FhsSequence:
        return self.sequences[i]

    def __len__(self) -> int:
        return len(self.sequences)


def build_sequence(i: int, params: FhsParams) -> FhsSequence:
    """Sequence number i of the family, 0 <= i < 2n."""
    if not 0 <= i < params.M:
        raise ValueError(f"sequence index {i} out of range [0, {params.M})")
    symbols = (class_index_array(params) - i) % params.m
    symbols.setflags(write=False)
    return FhsSequence(seq_index=i, params=params, symbols=symbols)


def build_family(params: FhsParams) -> FhsFamily:
    """All 2n sequences, sharing one classification pass."""
    base = class_index_array(params)
    sequences = []
    for i in range(params.M):
        symbols = (base - i) % params.m
        symbols.setflags(write=False)
        sequences.append(FhsSequence(seq_index=i, params=params, symbols=symbols))
    return FhsFamily(params=params, sequences=tuple(sequences))


def frequency_counts(seq: FhsSequence) -> dict[int, int]:
    """How often each symbol occurs in one sequence; every symbol keyed."""
    counts = np.bincount(seq.symbols, minlength=seq.params.m)
    return {f: int(c) for f, c in enumerate(counts)}


def is_uniformly_distributed(family: FhsFamily) -> tuple[bool, dict[int, int]]:
    """Family-wide symbol totals N(f) and whether they are all equal.

    For these parameters equality means N(f) = p^n for every symbol f.
    """
    totals = np.zeros(family.params.m, dtype=np.int64)
    for seq in family.sequences:
        totals += np.bincount(seq.symbols, minlength=family.params.m)
    per_symbol = {f: int(c) for f, c in enumerate(totals)}
    verdict = len(set(per_symbol.values())) == 1
    return verdict, per_symbol
