"""Canonical parameter fixtures shared by the tests and ``solvpot verify``."""

from .potentials import Branch, Family, ParamSet

GPT = ParamSet(2.0, 5.0)
SCARF1_DIRECT = ParamSet(3.0, 1.0)
SCARF1_SWAPPED = ParamSet(2.0, 3.0)
SCARF2 = ParamSet(4.0, 2.7)

# denominator-safe m = 1 fixtures, (family, branch, params)
EXTENDED = (
    (Family.GPT, Branch.DIRECT, ParamSet(2.0, 5.0)),
    (Family.GPT, Branch.SWAPPED, ParamSet(5.0, 2.0)),
    (Family.SCARF1, Branch.DIRECT, SCARF1_DIRECT),
    (Family.SCARF1, Branch.SWAPPED, SCARF1_SWAPPED),
    (Family.SCARF2, Branch.DIRECT, SCARF2),
    (Family.SCARF2, Branch.SWAPPED, SCARF2),
)

# conventional fixtures per (family, branch)
CONVENTIONAL = (
    (Family.GPT, Branch.DIRECT, GPT),
    (Family.GPT, Branch.SWAPPED, GPT),
    (Family.SCARF1, Branch.DIRECT, SCARF1_DIRECT),
    (Family.SCARF1, Branch.SWAPPED, SCARF1_SWAPPED),
    (Family.SCARF2, Branch.DIRECT, SCARF2),
    (Family.SCARF2, Branch.SWAPPED, SCARF2),
)

# denominator-safe m = 1 points with at least three bound states, for the
# polynomial-structure fits of oracle eigenvectors
EOP = (
    (Family.GPT, Branch.DIRECT, ParamSet(3.3, 6.0)),
    (Family.GPT, Branch.SWAPPED, ParamSet(6.0, 3.7)),
    (Family.SCARF1, Branch.DIRECT, SCARF1_DIRECT),
    (Family.SCARF1, Branch.SWAPPED, SCARF1_SWAPPED),
)

# GPT direct point with three bound states, used for convergence rates
GPT_THREE_LEVELS = ParamSet(3.3, 6.0)


def params_for(family, branch, m):
    table = EXTENDED if m else CONVENTIONAL
    for fam, br, p in table:
        if fam is Family(family) and br is Branch(branch):
            return p
    raise KeyError((family, branch, m))
