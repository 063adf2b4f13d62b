"""Charge statistics on tensor products of columns.

The charge of a sorted filling is computed from its charge word, a biword
pairing each entry with its column label. Column labels run from mu_1
(leftmost column) down to 1; in the doubled type C shape the right column
of pair j is labeled j-primed, which sits between j and j+1 in the label
alphabet. Charge itself is a cycle count: repeatedly sweep the word
selecting one occurrence of each label in alphabet order, moving leftward
and wrapping around when stuck, and score each wrap.
"""

from .fillings import Filling
from .weyl import ValidationError, letter_key

# a label is (j, primed) with primed in {0, 1}; (1,0) < (1,1) < (2,0) < ...
Label = tuple[int, int]


def label_str(lab: Label) -> str:
    j, primed = lab
    return f"{j}'" if primed else f"{j}"


def column_labels(f: Filling) -> list[Label]:
    """The label of each displayed column, left to right."""
    out = []
    for d in range(len(f.columns)):
        if f.split:
            out.append((f.mu1 - d // 2, 1 - d % 2))
        else:
            out.append((f.mu1 - d, 0))
    return out


def charge_word(f: Filling) -> list[tuple[int, Label]]:
    """Biletters (entry, column label), sorted by decreasing entry and,
    among equal entries, decreasing label."""
    labels = column_labels(f)
    biword = [(x, lab) for c, lab in zip(f.columns, labels) for x in c]
    biword.sort(key=lambda b: (-letter_key(f.lt, b[0]), -b[1][0], -b[1][1]))
    return biword


def alphabet(mu1: int, primed: bool) -> list[Label]:
    if primed:
        return [(j, p) for j in range(1, mu1 + 1) for p in (0, 1)]
    return [(j, 0) for j in range(1, mu1 + 1)]


def charge_of_word(word, labels: list[Label], trace: bool = False):
    """The cycle statistic of a word over the given label alphabet.

    Each pass starts at the rightmost occurrence of the first label and
    picks, for each subsequent label, the nearest occurrence strictly to
    the left, wrapping to the rightmost occurrence when none remains. A
    wrap at a plain label m scores k - m + 1 where k is the largest plain
    label selected in the pass; a wrap at a primed label means the word is
    not in the statistic's domain.
    """
    remaining = list(enumerate(word))
    total = 0
    passes = []
    while remaining:
        have = {lab for _, lab in remaining}
        if labels[0] not in have:
            raise ValidationError("word does not start its label alphabet")
        pos = max(p for p, lab in remaining if lab == labels[0])
        selected = [(pos, labels[0])]
        wraps = []
        for lab in labels[1:]:
            if lab not in have:
                break
            left = [p for p, l in remaining if l == lab and p < pos]
            if left:
                pos = max(left)
            else:
                pos = max(p for p, l in remaining if l == lab)
                if lab[1]:
                    raise ValidationError("charge undefined: wrap at a primed label")
                wraps.append(lab)
            selected.append((pos, lab))
        k = max(j for (_, (j, primed)) in selected if not primed)
        contribution = sum(k - j + 1 for (j, _) in wraps)
        total += contribution
        passes.append(
            {
                "selected": selected,
                "wraps": list(wraps),
                "k": k,
                "contribution": contribution,
            }
        )
        chosen = {p for p, _ in selected}
        remaining = [(p, lab) for p, lab in remaining if p not in chosen]
    return (total, passes) if trace else total


def ls_charge(word, trace: bool = False):
    """Charge of a plain word of positive integers (no primed labels)."""
    word = list(word)
    labeled = [(x, 0) for x in word]
    mu1 = max(word, default=0)
    return charge_of_word(labeled, alphabet(mu1, primed=False), trace=trace)


def charge(f: Filling, trace: bool = False):
    """Charge of a (sorted) filling via its charge word."""
    biword = charge_word(f)
    cw2 = [lab for _, lab in biword]
    return charge_of_word(cw2, alphabet(f.mu1, primed=f.split), trace=trace)
