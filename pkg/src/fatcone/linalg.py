"""Sparse exact Gaussian elimination over a :class:`~fatcone.arith.Field`."""

from __future__ import annotations


class Echelon:
    """Incremental row echelon form; rows are ``{column: value}`` dicts.

    With ``track`` each stored row remembers which inserted rows it came
    from, so membership queries can return explicit combinations.
    """

    def __init__(self, fld, track=False):
        self.fld = fld
        self.pivots = {}
        self.track = track
        self.combos = {}
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row, combo=None):
        fld = self.fld
        row = dict(row)
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row, col, combo
            c = row[col]
            for k, v in piv.items():
                nv = fld.sub(row.get(k, fld.zero), fld.mul(c, v))
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
            if combo is not None:
                for k, v in self.combos[col].items():
                    nv = fld.sub(combo.get(k, fld.zero), fld.mul(c, v))
                    if nv == 0:
                        combo.pop(k, None)
                    else:
                        combo[k] = nv
        return row, None, combo

    def add(self, row, tag=None) -> bool:
        """Insert a row; True when it was independent of the rows so far."""
        fld = self.fld
        combo = None
        if self.track:
            combo = {self.count if tag is None else tag: fld.one}
        self.count += 1
        row, col, combo = self._reduce(row, combo)
        if col is None:
            return False
        inv = fld.inv(row[col])
        self.pivots[col] = {k: fld.mul(v, inv) for k, v in row.items()}
        if self.track:
            self.combos[col] = {k: fld.mul(v, inv) for k, v in combo.items()}
        return True

    def contains(self, row) -> bool:
        rest, col, _ = self._reduce(row)
        return col is None

    def solve(self, row):
        """Coefficients over inserted rows summing to ``row``, or None."""
        if not self.track:
            raise ValueError("solve needs track=True")
        rest, col, combo = self._reduce(row, {})
        if col is not None:
            return None
        fld = self.fld
        return {k: fld.neg(v) for k, v in combo.items()}


def rank(fld, rows) -> int:
    ech = Echelon(fld)
    for r in rows:
        if r:
            ech.add(r)
    return ech.rank
