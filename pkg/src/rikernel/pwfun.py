"""Exact piecewise-power functions on (0, inf).

The universal function representation of this package: finite unions of
intervals (lo, hi], each carrying a short sum of power atoms

    v(t) = sum_i  c_i * t**e_i          for t in (lo, hi],

and value 0 outside all intervals.  Pure powers are closed under the
operations we need (integration, dilation, products, level sets), and the
short atom sums keep kernel splits like a(t) - a(1) exact.

Values are nonnegative: signed inputs are stored as |f|, which is the only
thing rearrangements and norms ever see.

Conventions:
  * pieces are open-left / closed-right; evaluation at a shared breakpoint
    takes the left piece (left-continuity of non-increasing functions);
  * divergent integrals return math.inf, never raise.
"""

from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

INF = math.inf

# Numerical guard for "is this piece value nonnegative" checks.
_NONNEG_TOL = 1e-12


def _atom_integral(coeff: float, expo: float, a: float, b: float) -> float:
    """Exact integral of coeff * t**expo over (a, b), 0 <= a < b <= inf.

    Divergence yields +-inf depending on the sign of coeff.
    """
    if coeff == 0.0 or a >= b:
        return 0.0
    sign = 1.0 if coeff > 0 else -1.0
    if expo == -1.0:
        if a == 0.0 or b == INF:
            return sign * INF
        return coeff * (math.log(b) - math.log(a))
    k = expo + 1.0
    if k > 0:
        if b == INF:
            return sign * INF
        hi = b**k
        lo = a**k if a > 0 else 0.0
    else:
        if a == 0.0:
            return sign * INF
        hi = b**k if b < INF else 0.0
        lo = a**k
    return coeff / k * (hi - lo)


def _sum_extended(terms: Iterable[float]) -> float:
    """Sum allowing +-inf; on inf - inf the caller must resolve by hand."""
    pos_inf = neg_inf = False
    total = 0.0
    for v in terms:
        if v == INF:
            pos_inf = True
        elif v == -INF:
            neg_inf = True
        else:
            total += v
    if pos_inf and neg_inf:
        return math.nan
    if pos_inf:
        return INF
    if neg_inf:
        return -INF
    return total


@dataclass(frozen=True)
class PowerPiece:
    """One interval (lo, hi] with value sum(c_i * t**e_i)."""

    lo: float
    hi: float
    atoms: tuple[tuple[float, float], ...]  # (coeff, expo) pairs

    def __post_init__(self):
        if not (0.0 <= self.lo < self.hi):
            raise ValueError(f"need 0 <= lo < hi, got ({self.lo}, {self.hi})")
        if not self.atoms:
            raise ValueError("piece needs at least one atom")
        for c, e in self.atoms:
            if not (math.isfinite(c) and math.isfinite(e)):
                raise ValueError(f"non-finite atom ({c}, {e})")

    @classmethod
    def single(cls, lo: float, hi: float, coeff: float, expo: float) -> "PowerPiece":
        if coeff < 0:
            raise ValueError("single-atom pieces carry |f|; coeff must be >= 0")
        return cls(lo, hi, ((coeff, expo),))

    @property
    def coeff(self) -> float:
        if len(self.atoms) != 1:
            raise ValueError("multi-atom piece has no single coeff")
        return self.atoms[0][0]

    @property
    def expo(self) -> float:
        if len(self.atoms) != 1:
            raise ValueError("multi-atom piece has no single expo")
        return self.atoms[0][1]

    def value(self, t: float) -> float:
        return float(sum(c * t**e for c, e in self.atoms))

    def value_vec(self, t: np.ndarray) -> np.ndarray:
        out = np.zeros_like(t, dtype=float)
        for c, e in self.atoms:
            out += c * t**e
        return out

    def left_limit(self) -> float:
        """sup-side value at the open left end (may be inf when lo == 0)."""
        if self.lo > 0:
            return self.value(self.lo)
        out = 0.0
        for c, e in self.atoms:
            if e < 0 and c != 0:
                return INF if c > 0 else -INF
            if e == 0:
                out += c
        return out

    def right_value(self) -> float:
        """Value at the closed right end (limit when hi == inf)."""
        if self.hi < INF:
            return self.value(self.hi)
        out = 0.0
        for c, e in self.atoms:
            if e > 0 and c != 0:
                return INF if c > 0 else -INF
            if e == 0:
                out += c
        return out

    def integral(self, a: float = 0.0, b: float = INF) -> float:
        """Exact integral of the piece value over (a, b) clipped to the piece."""
        a = max(a, self.lo)
        b = min(b, self.hi)
        if a >= b:
            return 0.0
        total = _sum_extended(_atom_integral(c, e, a, b) for c, e in self.atoms)
        if math.isnan(total):
            # inf - inf between atoms: the endpoint behaviour is decided by
            # the extreme exponent, whose coefficient fixes the sign.
            at_zero = a == 0.0
            rel = [(c, e) for c, e in self.atoms if c != 0]
            lead = min(rel, key=lambda ce: ce[1]) if at_zero else max(rel, key=lambda ce: ce[1])
            return INF if lead[0] > 0 else -INF
        return total

    def measure(self) -> float:
        return self.hi - self.lo

    def monotone_direction(self) -> int | None:
        """-1 non-increasing, +1 non-decreasing, 0 constant, None unknown.

        Sufficient sign rules only: a positive-coefficient atom moves with its
        exponent, a negative-coefficient atom the opposite way.
        """
        down = up = False
        for c, e in self.atoms:
            if c == 0 or e == 0:
                continue
            if (c > 0) == (e > 0):
                up = True
            else:
                down = True
        if up and down:
            return None
        if up:
            return 1
        if down:
            return -1
        return 0

    def _nonconst_atoms(self) -> list[tuple[float, float]]:
        return [(c, e) for c, e in self.atoms if e != 0 and c != 0]

    def superlevel_measure(self, lam: float) -> float:
        return float(self.superlevel_measures(np.asarray([lam]))[0])

    def superlevel_measures(self, lams: np.ndarray) -> np.ndarray:
        """|{t in (lo,hi]: v(t) > lam}| for an array of levels, exact.

        Single power atom (plus constant offset): closed form.  Several
        non-constant atoms with positive coefficients are convex in log t, so
        the superlevel set is the complement of one subinterval; its edges
        are found by vectorized bisection.
        """
        lams = np.asarray(lams, dtype=float)
        const = sum(c for c, e in self.atoms if e == 0)
        nc = self._nonconst_atoms()
        width = self.hi - self.lo

        if not nc:
            return np.where(const > lams, width, 0.0)

        if len(nc) == 1:
            c, e = nc[0]
            # c * t**e > lam - const on (lo, hi]
            lv = lams - const
            tau = np.full_like(lams, INF)
            pos = lv > 0
            if c > 0:
                # threshold where c * t**e == lv
                with np.errstate(all="ignore"):
                    tau[pos] = (lv[pos] / c) ** (1.0 / e)
                if e < 0:
                    # value decreasing: superlevel = (lo, min(hi, tau))
                    upper = np.minimum(self.hi, tau)
                    out = np.where(pos, np.maximum(upper - self.lo, 0.0), width)
                else:
                    # increasing: superlevel = (max(lo, tau), hi]
                    lower = np.maximum(self.lo, tau)
                    out = np.where(pos, np.maximum(self.hi - lower, 0.0), width)
                return out
            # c < 0: value = const - |c| t**e, monotone the other way
            with np.errstate(all="ignore"):
                tau[pos] = (lv[pos] / c) ** (1.0 / e) if False else tau[pos]
            # const - |c| t**e > lam  <=>  |c| t**e < const - lam
            rv = const - lams
            ok = rv > 0
            with np.errstate(all="ignore"):
                tau2 = np.where(ok, (rv / (-c)) ** (1.0 / e), 0.0)
            if e > 0:
                # |c| t**e increasing: keep t < tau2
                upper = np.minimum(self.hi, tau2)
                return np.where(ok, np.maximum(upper - self.lo, 0.0), 0.0)
            # |c| t**e decreasing: keep t > tau2
            lower = np.maximum(self.lo, tau2)
            return np.where(ok, np.maximum(self.hi - lower, 0.0), 0.0)

        # General case: needs positive coefficients on non-constant atoms
        # (all constructions in this package satisfy this), giving convexity
        # of v(exp(x)) and at most two level crossings.
        if any(c < 0 for c, _ in nc):
            raise ValueError("superlevel of multi-atom piece with negative power atoms")
        if self.lo == 0.0 or self.hi == INF:
            raise ValueError("multi-atom superlevel needs a bounded interval")

        xlo, xhi = math.log(self.lo), math.log(self.hi)

        def v_of_x(x: np.ndarray) -> np.ndarray:
            t = np.exp(x)
            return self.value_vec(t)

        # convex minimum by ternary search
        a_, b_ = xlo, xhi
        for _ in range(200):
            m1 = a_ + (b_ - a_) / 3
            m2 = b_ - (b_ - a_) / 3
            if float(v_of_x(np.asarray([m1]))[0]) <= float(v_of_x(np.asarray([m2]))[0]):
                b_ = m2
            else:
                a_ = m1
        xmin = 0.5 * (a_ + b_)
        vmin = float(v_of_x(np.asarray([xmin]))[0])
        v_l = float(v_of_x(np.asarray([xlo]))[0])
        v_r = float(v_of_x(np.asarray([xhi]))[0])

        def root_desc(level: np.ndarray, lo_x: float, hi_x: float) -> np.ndarray:
            # v decreasing on [lo_x, hi_x]; find x with v(x) == level
            lo_arr = np.full_like(level, lo_x)
            hi_arr = np.full_like(level, hi_x)
            for _ in range(80):
                mid = 0.5 * (lo_arr + hi_arr)
                above = v_of_x(mid) > level
                lo_arr = np.where(above, mid, lo_arr)
                hi_arr = np.where(above, hi_arr, mid)
            return 0.5 * (lo_arr + hi_arr)

        def root_asc(level: np.ndarray, lo_x: float, hi_x: float) -> np.ndarray:
            lo_arr = np.full_like(level, lo_x)
            hi_arr = np.full_like(level, hi_x)
            for _ in range(80):
                mid = 0.5 * (lo_arr + hi_arr)
                above = v_of_x(mid) > level
                hi_arr = np.where(above, mid, hi_arr)
                lo_arr = np.where(above, lo_arr, mid)
            return 0.5 * (lo_arr + hi_arr)

        out = np.zeros_like(lams)
        for i, lam in enumerate(lams):
            if lam < vmin:
                # whole interval minus (possibly empty) middle sublevel part
                out[i] = width
                continue
            meas = 0.0
            if v_l > lam:
                xr = float(root_desc(np.asarray([lam]), xlo, xmin)[0])
                meas += math.exp(xr) - self.lo
            if v_r > lam:
                xl = float(root_asc(np.asarray([lam]), xmin, xhi)[0])
                meas += self.hi - math.exp(xl)
            out[i] = meas
        return out


@dataclass(frozen=True)
class PiecewisePowerFn:
    """Finite union of power pieces; zero off their intervals."""

    pieces: tuple[PowerPiece, ...]
    nonincreasing: bool = False

    def __post_init__(self):
        pieces = tuple(sorted(self.pieces, key=lambda p: p.lo))
        for a, b in zip(pieces, pieces[1:]):
            if b.lo < a.hi - 1e-15 * max(1.0, a.hi):
                raise ValueError(f"overlapping pieces at ({b.lo}, {a.hi})")
        object.__setattr__(self, "pieces", pieces)
        for p in pieces:
            for t in _probe_points(p):
                if p.value(t) < -_NONNEG_TOL * max(1.0, abs(p.value(t))):
                    raise ValueError(f"negative value {p.value(t)} at t={t}")
        if self.nonincreasing and pieces:
            grid = _canonical_grid(self)
            vals = self.eval_vec(grid)
            drops = np.diff(vals)
            if np.any(drops > 1e-9 * (1.0 + np.abs(vals[:-1]))):
                raise ValueError("function flagged nonincreasing fails grid check")

    # -- evaluation ------------------------------------------------------

    def eval(self, t: float) -> float:
        """Left-continuous evaluation: the piece with lo < t <= hi."""
        if t <= 0:
            raise ValueError("evaluation requires t > 0")
        i = bisect.bisect_left(self._los(), t)
        # candidate piece index i-1 has lo < t
        if i > 0:
            p = self.pieces[i - 1]
            if t <= p.hi:
                return p.value(t)
        return 0.0

    def eval_right(self, t: float) -> float:
        """Right-continuous evaluation: the piece with lo <= t < hi."""
        if t < 0:
            raise ValueError("evaluation requires t >= 0")
        i = bisect.bisect_right(self._los(), t)
        if i > 0:
            p = self.pieces[i - 1]
            if t < p.hi:
                return p.value(max(t, np.nextafter(p.lo, INF)))
        return 0.0

    def eval_vec(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for p in self.pieces:
            mask = (t > p.lo) & (t <= p.hi)
            if mask.any():
                out[mask] = p.value_vec(t[mask])
        return out

    def __call__(self, t):
        if np.ndim(t) == 0:
            return self.eval(float(t))
        return self.eval_vec(np.asarray(t, dtype=float))

    def _los(self) -> list[float]:
        return [p.lo for p in self.pieces]

    # -- basic geometry ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.pieces or all(
            all(c == 0 for c, _ in p.atoms) for p in self.pieces
        )

    def support(self) -> tuple[float, float]:
        if not self.pieces:
            return (0.0, 0.0)
        return (self.pieces[0].lo, self.pieces[-1].hi)

    def support_measure(self) -> float:
        return sum(p.measure() for p in self.pieces)

    def sup_value(self) -> float:
        """Essential sup of the function (inf for a value blow-up)."""
        best = 0.0
        for p in self.pieces:
            for v in (p.left_limit(), p.right_value()):
                best = max(best, v)
            if p.monotone_direction() is None:
                # interior max cannot occur for convex-in-log pieces; the
                # endpoints decide
                pass
        return best

    def corner_values(self) -> list[float]:
        """Sorted distinct positive endpoint values of all pieces."""
        vals = set()
        for p in self.pieces:
            for v in (p.left_limit(), p.right_value()):
                if 0 < v < INF:
                    vals.add(v)
        return sorted(vals)

    def breakpoints(self) -> list[float]:
        pts = set()
        for p in self.pieces:
            pts.add(p.lo)
            if p.hi < INF:
                pts.add(p.hi)
        return sorted(pts)

    # -- calculus ---------------------------------------------------------

    def integrate(self, lo: float = 0.0, hi: float = INF) -> float:
        """Exact integral over (lo, hi); +inf on divergence."""
        if lo >= hi:
            if lo > hi:
                raise ValueError("integrate needs lo < hi")
            return 0.0
        return _sum_extended(p.integral(lo, hi) for p in self.pieces)

    def dilate(self, t: float) -> "PiecewisePowerFn":
        """Exact dilation s -> f(s/t): piece (lo,hi,c,e) -> (t lo, t hi, c t^-e, e)."""
        if t <= 0:
            raise ValueError("dilation scale must be positive")
        pieces = tuple(
            PowerPiece(
                p.lo * t,
                p.hi * t,
                tuple((c * t ** (-e), e) for c, e in p.atoms),
            )
            for p in self.pieces
        )
        return PiecewisePowerFn(pieces, nonincreasing=self.nonincreasing)

    def scale(self, c: float) -> "PiecewisePowerFn":
        if c < 0:
            raise ValueError("scale stores |f|; need c >= 0")
        return PiecewisePowerFn(
            tuple(
                PowerPiece(p.lo, p.hi, tuple((c * a, e) for a, e in p.atoms))
                for p in self.pieces
            ),
            nonincreasing=self.nonincreasing,
        )

    def __add__(self, other: "PiecewisePowerFn") -> "PiecewisePowerFn":
        pts = sorted(set(self.breakpoints()) | set(other.breakpoints()))
        if not pts:
            return PiecewisePowerFn(())
        unbounded = self.support()[1] == INF or other.support()[1] == INF
        edges = pts + [INF] if unbounded else pts
        pieces = []
        for lo, hi in zip(edges, edges[1:]):
            atoms = []
            mid = math.sqrt(lo * hi) if hi < INF else lo * 2
            for f in (self, other):
                for p in f.pieces:
                    if p.lo <= lo and hi <= p.hi:
                        atoms.extend(p.atoms)
            if atoms:
                pieces.append(PowerPiece(lo, hi, tuple(atoms)))
        return PiecewisePowerFn(tuple(pieces))

    # -- structure tests --------------------------------------------------

    def is_simple(self) -> bool:
        """True when every piece is constant (a simple function)."""
        return all(all(e == 0 for _, e in p.atoms) for p in self.pieces)

    def structurally_nonincreasing(self) -> bool:
        """Sufficient structural test that f is non-increasing on (0, inf)."""
        if not self.pieces:
            return True
        if self.pieces[0].lo != 0.0:
            return False
        prev_hi = 0.0
        prev_val = INF
        for p in self.pieces:
            if p.lo > prev_hi:  # a gap followed by a nonzero piece
                if any(c != 0 for c, _ in p.atoms):
                    return False
            d = p.monotone_direction()
            if d is None or d > 0:
                if d == 1 and all(c == 0 for c, _ in p.atoms):
                    pass
                else:
                    return False
            ll = p.left_limit()
            if ll > prev_val * (1 + 1e-12) + 1e-300:
                return False
            prev_val = p.right_value()
            prev_hi = p.hi
        return True


def _probe_points(p: PowerPiece) -> list[float]:
    lo = p.lo if p.lo > 0 else min(1e-9, p.hi / 2)
    hi = p.hi if p.hi < INF else max(1e9, lo * 2)
    return list(np.geomspace(max(lo * 1.0000001, 1e-300), hi, 7))


def _canonical_grid(f: PiecewisePowerFn) -> np.ndarray:
    lo, hi = f.support()
    lo = max(lo, 1e-12) if lo > 0 else 1e-6
    hi = hi if hi < INF else 1e6
    return np.geomspace(lo * 1.001, hi, 64)


# -- constructors ----------------------------------------------------------


def indicator(lo: float, hi: float) -> PiecewisePowerFn:
    """chi_{(lo, hi]}."""
    return PiecewisePowerFn((PowerPiece.single(lo, hi, 1.0, 0.0),), nonincreasing=lo == 0.0)


def power_fn(coeff: float, expo: float, lo: float = 0.0, hi: float = INF) -> PiecewisePowerFn:
    """coeff * t**expo on (lo, hi]."""
    noninc = lo == 0.0 and expo <= 0
    return PiecewisePowerFn((PowerPiece.single(lo, hi, coeff, expo),), nonincreasing=noninc)


def zero_fn() -> PiecewisePowerFn:
    return PiecewisePowerFn(())


def integrate_product(f: PiecewisePowerFn, g: PiecewisePowerFn,
                      lo: float = 0.0, hi: float = INF) -> float:
    """Exact integral of f*g over (lo, hi) without building the product."""
    total_terms = []
    for pf in f.pieces:
        for pg in g.pieces:
            a = max(pf.lo, pg.lo, lo)
            b = min(pf.hi, pg.hi, hi)
            if a >= b:
                continue
            for cf, ef in pf.atoms:
                for cg, eg in pg.atoms:
                    total_terms.append(_atom_integral(cf * cg, ef + eg, a, b))
    return _sum_extended(total_terms)


# -- tabulated fallback ----------------------------------------------------

RAPID = "rapid"


@dataclass(frozen=True)
class TabulatedFn:
    """Log-grid samples with declared tail exponents.

    tail0 is the power exponent near 0, tail_inf the exponent near inf or
    the string "rapid" for faster-than-power decay.
    """

    grid: tuple[float, ...]
    values: tuple[float, ...]
    tail0: float = 0.0
    tail_inf: float | str = 0.0
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.grid) != len(self.values) or len(self.grid) < 2:
            raise ValueError("grid and values must share a length >= 2")
        g = np.asarray(self.grid)
        if np.any(g <= 0) or np.any(np.diff(g) <= 0):
            raise ValueError("grid must be strictly increasing and positive")
        bad = [t for t, v in zip(self.grid, self.values) if not math.isfinite(v) or v < 0]
        if bad:
            raise ValueError(f"non-finite or negative samples at t={bad[:5]}")

    def garr(self) -> np.ndarray:
        return np.asarray(self.grid, dtype=float)

    def varr(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def interp(self, t: float) -> float:
        """Log-log segment interpolation with declared power tails."""
        g, v = self.garr(), self.varr()
        if t <= g[0]:
            if v[0] == 0:
                return 0.0
            return v[0] * (t / g[0]) ** self.tail0
        if t >= g[-1]:
            if v[-1] == 0 or self.tail_inf == RAPID:
                return 0.0 if t > g[-1] else float(v[-1])
            return v[-1] * (t / g[-1]) ** float(self.tail_inf)
        i = int(np.searchsorted(g, t)) - 1
        a, b = g[i], g[i + 1]
        va, vb = v[i], v[i + 1]
        if va <= 0 or vb <= 0:
            w = (t - a) / (b - a)
            return float(va + w * (vb - va))
        s = math.log(vb / va) / math.log(b / a)
        return float(va * (t / a) ** s)

    def head_mass(self) -> float:
        """Estimated integral over (0, grid[0]) from the declared tail."""
        v0, t0 = self.values[0], self.grid[0]
        if v0 == 0:
            return 0.0
        if self.tail0 <= -1:
            return INF
        return v0 * t0 / (self.tail0 + 1.0)

    def tail_mass(self) -> float:
        """Estimated integral over (grid[-1], inf) from the declared tail."""
        v1, t1 = self.values[-1], self.grid[-1]
        if v1 == 0:
            return 0.0
        if self.tail_inf == RAPID:
            return v1 * t1 * 0.1  # crude cap; rapid tails carry little mass
        e = float(self.tail_inf)
        if e >= -1:
            return INF
        return -v1 * t1 / (e + 1.0)


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    n: int = 129

    def __post_init__(self):
        if not (0 < self.lo < self.hi) or self.n < 2:
            raise ValueError("grid needs 0 < lo < hi and n >= 2")

    def points(self) -> np.ndarray:
        return np.geomspace(self.lo, self.hi, self.n)


def _loglog_slope(ts: np.ndarray, vs: np.ndarray) -> float:
    """Least-squares slope of log v against log t; 0 if values vanish."""
    mask = vs > 0
    if mask.sum() < 2:
        return 0.0
    x = np.log(ts[mask])
    y = np.log(vs[mask])
    x = x - x.mean()
    denom = float(np.dot(x, x))
    if denom == 0:
        return 0.0
    return float(np.dot(x, y - y.mean()) / denom)


def tabulate(fn: Callable[[float], float] | PiecewisePowerFn, spec: GridSpec) -> TabulatedFn:
    """Sample on a log grid; estimate tails from the outermost two decades."""
    ts = spec.points()
    if isinstance(fn, PiecewisePowerFn):
        vs = fn.eval_vec(ts)
    else:
        vs = np.asarray([float(fn(t)) for t in ts])
    bad = ts[~np.isfinite(vs)]
    if bad.size:
        raise ValueError(f"non-finite sample values at t={bad[:5].tolist()}")
    vs = np.maximum(vs, 0.0)
    lo_mask = ts <= ts[0] * 100.0
    hi_mask = ts >= ts[-1] / 100.0
    tail0 = _loglog_slope(ts[lo_mask], vs[lo_mask])
    tail_inf = _loglog_slope(ts[hi_mask], vs[hi_mask])
    return TabulatedFn(tuple(ts.tolist()), tuple(vs.tolist()), tail0, tail_inf)


# -- descriptor files ------------------------------------------------------


def fn_to_dict(f: PiecewisePowerFn) -> dict:
    recs = []
    for p in f.pieces:
        if len(p.atoms) == 1:
            recs.append({"lo": p.lo, "hi": "inf" if p.hi == INF else p.hi,
                         "coeff": p.atoms[0][0], "expo": p.atoms[0][1]})
        else:
            recs.append({"lo": p.lo, "hi": "inf" if p.hi == INF else p.hi,
                         "atoms": [[c, e] for c, e in p.atoms]})
    return {"pieces": recs, "nonincreasing": f.nonincreasing}


def fn_from_dict(d: dict) -> PiecewisePowerFn:
    pieces = []
    for rec in d.get("pieces", []):
        hi = rec["hi"]
        hi = INF if (isinstance(hi, str) and hi.lower() in ("inf", "infinity")) else float(hi)
        lo = float(rec["lo"])
        if lo < 0:
            raise ValueError(f"piece lo must be >= 0, got {lo}")
        if "atoms" in rec:
            atoms = tuple((float(c), float(e)) for c, e in rec["atoms"])
            pieces.append(PowerPiece(lo, hi, atoms))
        else:
            pieces.append(PowerPiece.single(lo, hi, float(rec["coeff"]), float(rec["expo"])))
    return PiecewisePowerFn(tuple(pieces), nonincreasing=bool(d.get("nonincreasing", False)))


def load_fn(path: str | Path) -> PiecewisePowerFn:
    with open(path, "r", encoding="utf-8") as fh:
        return fn_from_dict(json.load(fh))


def save_fn(f: PiecewisePowerFn, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fn_to_dict(f), fh, indent=2)
        fh.write("\n")
