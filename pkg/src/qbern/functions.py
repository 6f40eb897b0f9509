"""Fixed corpus of sample functions on [0, 1] used by the CLI and the
verification sweeps.  The library operators accept any callable; the CLI
deliberately has no expression parser."""

import math

BUILTIN_FUNCTIONS = {
    "cos": math.cos,
    "exp": math.exp,
    "abs-shift": lambda t: abs(t - 0.4),
    "square": lambda t: t * t,
}

# Functions in the corpus that are convex on [0, 1]; the one-sidedness and
# monotonicity properties of the Phillips operator apply to these.
CONVEX_BUILTINS = ("abs-shift", "exp", "square")
