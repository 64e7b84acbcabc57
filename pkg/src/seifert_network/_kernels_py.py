"""Numpy implementations of the sweep kernels (used when the extension is absent)."""
import numpy as np


def prism_sweep(b_lo, b_hi, x_lo, x_hi):
    cases = equal = same = reversing = failures = 0
    first = None
    bs = np.arange(b_lo, b_hi + 1, dtype=np.int64)
    x_lo = max(3, x_lo + (1 - x_lo % 2))
    for x in range(x_lo, x_hi + 1, 2):
        ys = np.arange(1, x, dtype=np.int64)
        b_grid, y_grid = np.meshgrid(bs, ys, indexing="ij")
        b_flat, y_flat = b_grid.ravel(), y_grid.ravel()
        orders = 4 * np.abs((b_flat + 1) * x + y_flat)
        eq = orders[:, None] == orders[None, :]
        n = orders.size
        cases += n * n
        equal += int(eq.sum())
        ident = (b_flat[:, None] == b_flat[None, :]) & (y_flat[:, None] == y_flat[None, :])
        rev = ((b_flat[:, None] + b_flat[None, :]) == -3) & ((y_flat[:, None] + y_flat[None, :]) == x)
        same += int((eq & ident).sum())
        reversing += int((eq & ~ident & rev).sum())
        bad = eq & ~ident & ~rev
        nbad = int(bad.sum())
        if nbad:
            failures += nbad
            if first is None:
                i, j = map(int, np.argwhere(bad)[0])
                first = (int(b_flat[i]), int(b_flat[j]), x, int(y_flat[i]), int(y_flat[j]))
    return cases, equal, same, reversing, failures, first
