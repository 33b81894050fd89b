"""Szegedy and Grover walk transition matrices and their spectra.

The walk lives on the arcs of the symmetric digraph of a finite simple
loopless graph.  Given a transition probability p with unit row sums per
tail vertex, the transition matrix is

    U[a, a'] = 2 sqrt(p(a) p(inv(a'))) [tail(a) = head(a')] - [a' = inv(a)]

(the Grover walk is the uniform case p(a) = 1/deg(tail(a))).  Spectra are
computed two ways: directly by a numeric eigensolve (the oracle), and
through the vertex-sized discriminant matrix T, whose eigenvalues mu
parameterize quadratic factors of the characteristic polynomial:

    det(lambda I - U) = (lambda^2 - 1)^(|E|-|V|)
                        * prod_mu (lambda^2 + c - d mu lambda).

For the Grover walk (c, d) = (1, 2) with T[u][v] = 1/deg(u) on edges.  For
general Szegedy probabilities the per-factor constants are calibrated
against the oracle over the candidate family c, d in {1, 2} rather than
hard-coded; the calibration consistently selects (1, 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from .algebra import CC, Poly
from .digraph import Digraph, GraphMode
from .linalg import eigenvalues_numeric


class WalkError(ValueError):
    """Invalid input for the quantum-walk layer."""


def _require_walk_graph(g: Digraph) -> None:
    if g.mode is not GraphMode.SYMMETRIC:
        raise WalkError("walks require the symmetric digraph of a graph")
    for a in g.arcs:
        if a.tail == a.head:
            raise WalkError(f"loop arc {a.id} at vertex {a.tail}: walks need a loopless graph")
    for v in range(g.vertex_count):
        for u in range(v, g.vertex_count):
            if len(g.arcs_between(v, u)) > 1:
                raise WalkError(f"multi-edge between {v} and {u}: walks need a simple graph")
    if any(g.degree(v) == 0 for v in range(g.vertex_count)):
        raise WalkError("walks need minimum degree >= 1")


def uniform_probability(g: Digraph) -> dict[int, Fraction]:
    """The Grover assignment p(a) = 1/deg(tail(a))."""
    return {a.id: Fraction(1, g.degree(a.tail)) for a in g.arcs}


def validate_probability(g: Digraph, p) -> dict[int, Fraction]:
    """Check totality, positivity, and unit row sums per tail vertex.

    Row sums must be exactly 1 for rational inputs; float inputs are
    allowed a 1e-12 slack.
    """
    probs = {}
    has_float = False
    for a in g.arcs:
        if a.id not in p:
            raise WalkError(f"missing probability for arc {a.id}")
        raw = p[a.id]
        has_float = has_float or isinstance(raw, float)
        val = Fraction(raw)
        if not 0 < val <= 1:
            raise WalkError(f"probability {val} for arc {a.id} outside (0, 1]")
        probs[a.id] = val
    for v in range(g.vertex_count):
        total = sum(probs[a] for a in g.out_arcs(v))
        bad = abs(total - 1) > Fraction(1, 10**12) if has_float else total != 1
        if bad:
            raise WalkError(f"probabilities at vertex {v} sum to {total}, expected 1")
    return probs


def _sqrt_product(x: Fraction, y: Fraction) -> float:
    """sqrt(x*y) with an exact path when the product is a rational square."""
    prod = x * y
    rn = math.isqrt(prod.numerator)
    rd = math.isqrt(prod.denominator)
    if rn * rn == prod.numerator and rd * rd == prod.denominator:
        return float(Fraction(rn, rd))
    return math.sqrt(float(prod))


def szegedy_transition(g: Digraph, p) -> np.ndarray:
    """The arc-indexed Szegedy transition matrix for probabilities ``p``."""
    _require_walk_graph(g)
    probs = validate_probability(g, p)
    n = g.arc_count
    u = np.zeros((n, n))
    for a in g.arcs:
        pa = probs[a.id]
        for b in g.arcs:
            val = 0.0
            if a.tail == b.head:
                val = 2.0 * _sqrt_product(pa, probs[g.partner(b.id)])
            if b.id == g.partner(a.id):
                val -= 1.0
            u[a.id, b.id] = val
    return u


def grover_transition(g: Digraph) -> np.ndarray:
    """The Grover transition matrix 2/deg(tail(a)) on adjacencies minus the partner flip."""
    _require_walk_graph(g)
    n = g.arc_count
    u = np.zeros((n, n))
    for a in g.arcs:
        amp = float(Fraction(2, g.degree(a.tail)))
        for b in g.arcs:
            val = amp if a.tail == b.head else 0.0
            if b.id == g.partner(a.id):
                val -= 1.0
            u[a.id, b.id] = val
    return u


def unitarity_defect(u: np.ndarray) -> float:
    """max |U U* - I|, the unitarity residual."""
    n = u.shape[0]
    return float(np.max(np.abs(u @ u.conj().T - np.eye(n)))) if n else 0.0


def grover_discriminant(g: Digraph) -> np.ndarray:
    """T[u][v] = 1/deg(u) on edges, 0 elsewhere."""
    _require_walk_graph(g)
    nv = g.vertex_count
    t = np.zeros((nv, nv))
    for u in range(nv):
        for v in range(nv):
            if u != v and g.arcs_between(u, v):
                t[u, v] = 1.0 / g.degree(u)
    return t


def szegedy_discriminant(g: Digraph, p) -> np.ndarray:
    """T[u][v] = sum over arcs a in A_uv of sqrt(p(a) p(inv(a)))."""
    _require_walk_graph(g)
    probs = validate_probability(g, p)
    nv = g.vertex_count
    t = np.zeros((nv, nv))
    for a in g.arcs:
        t[a.tail, a.head] += _sqrt_product(probs[a.id], probs[g.partner(a.id)])
    return t


def _grover_mu(g: Digraph) -> np.ndarray:
    """Eigenvalues of the Grover discriminant, via its symmetric similar twin.

    T = D^-1 A is similar to D^-1/2 A D^-1/2, which is symmetric, so the
    spectrum is real and eigvalsh applies.
    """
    nv = g.vertex_count
    sym = np.zeros((nv, nv))
    for u in range(nv):
        for v in range(nv):
            if u != v and g.arcs_between(u, v):
                sym[u, v] = 1.0 / math.sqrt(g.degree(u) * g.degree(v))
    return np.linalg.eigvalsh(sym)


def _quadratic_roots(mu: float, c: float, d: float) -> tuple[complex, complex]:
    """Roots of lambda^2 - d*mu*lambda + c.

    A near-zero discriminant is snapped to zero: the square root would
    amplify O(eps) eigensolver noise in mu to O(sqrt(eps)), turning exact
    double roots (mu = +-1 for the Grover factor) into spurious complex
    pairs.  True discriminants of desk-scale instances are either exactly
    zero or far from the snap threshold.
    """
    disc = (d * mu) ** 2 - 4.0 * c
    root = 0.0 if abs(disc) <= 1e-11 else np.sqrt(complex(disc))
    return ((d * mu + root) / 2.0, (d * mu - root) / 2.0)


def _signed_unit_adjustment(values: list[complex], copies: int, tol: float) -> list[complex]:
    """Add (copies > 0) or cancel (copies < 0) that many +1/-1 pairs."""
    out = list(values)
    if copies >= 0:
        out.extend([1.0 + 0.0j, -1.0 + 0.0j] * copies)
        return out
    for sign in (1.0, -1.0):
        for _ in range(-copies):
            best, best_err = None, None
            for i, v in enumerate(out):
                err = abs(v - sign)
                if best_err is None or err < best_err:
                    best, best_err = i, err
            if best is None or best_err > tol:
                raise WalkError(
                    f"cannot cancel a {sign:+.0f} eigenvalue from the quadratic roots "
                    f"(closest residual {best_err})"
                )
            out.pop(best)
    return out


def grover_spectrum_via_zeta(g: Digraph, tol: float = 1e-8) -> list[complex]:
    """Spectrum of the Grover walk from the vertex factorization.

    {+1, -1} each |E|-|V| times (cancelled against quadratic roots when the
    exponent is negative) together with the roots of lambda^2 - 2 mu lambda + 1
    for each discriminant eigenvalue mu.
    """
    _require_walk_graph(g)
    roots: list[complex] = []
    for mu in _grover_mu(g):
        roots.extend(_quadratic_roots(float(mu), 1.0, 2.0))
    m = g.edge_count - g.vertex_count
    return _signed_unit_adjustment(roots, m, tol)


def spectrum_deviation(s1, s2) -> float:
    """Smallest max pairwise distance over perfect matchings of two multisets."""
    a = np.asarray(list(s1), dtype=complex)
    b = np.asarray(list(s2), dtype=complex)
    if a.shape != b.shape:
        raise WalkError(f"spectra have different sizes: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def szegedy_charpoly_direct(g: Digraph, p) -> Poly:
    """Monic characteristic polynomial of the Szegedy matrix (numeric oracle)."""
    u = szegedy_transition(g, p)
    eigs = eigenvalues_numeric(u)
    coeffs = np.poly(np.array(eigs)) if eigs else np.array([1.0 + 0j])
    return Poly(CC, list(coeffs[::-1].astype(complex)))


@dataclass(frozen=True)
class FactorizationCalibration:
    """Calibrated per-factor constants and the resulting spectrum."""

    c: int
    d: int
    spectrum: list[complex]
    residual: float


def _assemble_candidate(mus, m_exp: int, c: int, d: int) -> tuple[np.ndarray, float]:
    """(lambda^2-1)^m * prod(lambda^2 - d mu lambda + c) as monic coefficients.

    Returns the coefficient array (highest power first) and the division
    residual when the exponent is negative.
    """
    poly = np.array([1.0 + 0j])
    for mu in mus:
        poly = np.polymul(poly, np.array([1.0, -d * mu, c], dtype=complex))
    residual = 0.0
    base = np.array([1.0, 0.0, -1.0], dtype=complex)
    if m_exp >= 0:
        for _ in range(m_exp):
            poly = np.polymul(poly, base)
    else:
        for _ in range(-m_exp):
            poly, rem = np.polydiv(poly, base)
            residual = max(residual, float(np.max(np.abs(rem))) if rem.size else 0.0)
    return poly, residual


def szegedy_spectrum_via_factorization(g: Digraph, p, tol: float = 1e-8) -> FactorizationCalibration:
    """Fit lambda^2 + c - d mu lambda, c, d in {1, 2}, against the direct oracle.

    The winning constants rebuild the full spectrum (with the |E|-|V| signed
    unit adjustment); if no candidate reproduces the oracle characteristic
    polynomial within ``tol``, a WalkError carrying the best residual
    polynomial is raised.
    """
    _require_walk_graph(g)
    direct = szegedy_charpoly_direct(g, p)
    direct_coeffs = np.array(list(direct.coeffs[::-1]), dtype=complex)
    mus = np.linalg.eigvalsh(szegedy_discriminant(g, p))
    m_exp = g.edge_count - g.vertex_count
    best = None
    for c in (1, 2):
        for d in (1, 2):
            cand, div_residual = _assemble_candidate(mus, m_exp, c, d)
            if cand.shape != direct_coeffs.shape:
                continue
            residual = max(float(np.max(np.abs(cand - direct_coeffs))), div_residual)
            if best is None or residual < best[2]:
                best = (c, d, residual, cand)
    if best is None or best[2] > tol:
        detail = Poly(CC, list((best[3] - direct_coeffs)[::-1])) if best else None
        raise WalkError(
            "no candidate factorization matches the oracle characteristic polynomial; "
            f"best residual polynomial: {detail.render('lambda') if detail else 'none'}"
        )
    c, d, residual, _ = best
    roots: list[complex] = []
    for mu in mus:
        roots.extend(_quadratic_roots(float(mu), float(c), float(d)))
    spectrum = _signed_unit_adjustment(roots, m_exp, tol)
    return FactorizationCalibration(c=c, d=d, spectrum=spectrum, residual=residual)
