"""Dense exact linear algebra over the coefficient fields."""

__all__ = ["rank", "row_echelon", "nullity"]


def row_echelon(rows, F):
    """Row echelon form of a list of rows; returns ``(rows, pivot_columns)``."""
    a = [list(r) for r in rows]
    pivots = []
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, v) for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows, F):
    if not rows or not rows[0]:
        return 0
    return len(row_echelon(rows, F)[1])


def nullity(rows, ncols, F):
    return ncols - rank(rows, F)
