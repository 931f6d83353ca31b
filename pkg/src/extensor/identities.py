"""Executable identity suite.

Each entry checks one labeled identity over random inputs.  The runner is
deterministic for a fixed seed: identity number `i` draws from a generator
seeded with `seed XOR i`, and trial `t` uses metric `t mod len(metrics)`
from the supplied pool, so a concurrent runner could not change the report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Multiform, Multivector, _popcount_table, wedge
from .duality import (
    left_contract_mf,
    left_contract_mv,
    pairing,
    right_contract_mf,
    right_contract_mv,
)
from .metric import (
    MetricExtensor,
    extend,
    extend_inverse,
    generalized_permutation_symbol,
    pseudoscalars,
    reciprocal_basis,
    tensor_from_extensor,
)
from .products import (
    expand_multiform,
    expand_multivector,
    invert_extension_via_formula,
    invert_metric_via_formula,
    lcontract_mf,
    lcontract_mv,
    rcontract_mf,
    rcontract_mv,
    scalar_product_mf,
    scalar_product_mv,
)
from .sampling import (
    random_homogeneous,
    random_multiform,
    random_multivector,
    random_vectors,
)

_ABS_FLOOR = 1e-12


@dataclass(frozen=True)
class IdentityReport:
    name: str
    trials: int
    max_abs: float
    max_rel: float
    passed: bool

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name} {self.trials} {self.max_abs:.6e} {self.max_rel:.6e} {status}"


@dataclass(frozen=True)
class TrialContext:
    n: int
    gamma: MetricExtensor


def _err_elem(a, b):
    d = float(np.max(np.abs(a.coeffs - b.coeffs)))
    s = max(a.norm_inf(), b.norm_inf())
    return d, s


def _err_scalar(a: float, b: float):
    return abs(a - b), max(abs(a), abs(b))


def _err_zero(a, scale: float):
    if isinstance(a, (Multivector, Multiform)):
        return a.norm_inf(), scale
    return abs(a), scale


def _wedge_all(elements):
    result = elements[0]
    for e in elements[1:]:
        result = wedge(result, e)
    return result


def _rand_grade(rng, n, low=0):
    return int(rng.integers(low, n + 1))


def _grade_pair(rng, n):
    """Random (p, q) with p <= q."""
    q = int(rng.integers(0, n + 1))
    p = int(rng.integers(0, q + 1))
    return p, q


# -- duality identities ------------------------------------------------------


def _fund1(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n, low=1)
    forms = random_vectors(rng, n, p, Multiform)
    vectors = random_vectors(rng, n, p, Multivector)
    lhs = pairing(_wedge_all(forms), _wedge_all(vectors))
    det = np.linalg.det([[pairing(w, v) for v in vectors] for w in forms])
    return [_err_scalar(lhs, float(det))]


def _fund2(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n, low=1)
    forms = random_vectors(rng, n, p, Multiform)
    vectors = random_vectors(rng, n, p, Multivector)
    # pairing taken in the (multivector, multiform) order
    lhs = pairing(_wedge_all(vectors), _wedge_all(forms))
    det = np.linalg.det([[pairing(w, v) for v in vectors] for w in forms])
    return [_err_scalar(lhs, float(det))]


def _fund3(rng, ctx):
    return _fund1(rng, ctx)


def _fund4(rng, ctx):
    n = ctx.n
    p, q = _grade_pair(rng, n)
    sign = -1.0 if (p * (q - p)) % 2 else 1.0
    phi = random_homogeneous(rng, n, p, Multiform)
    x = random_homogeneous(rng, n, q, Multivector)
    out = [_err_elem(left_contract_mv(phi, x), sign * right_contract_mv(x, phi))]
    y = random_homogeneous(rng, n, p, Multivector)
    psi = random_homogeneous(rng, n, q, Multiform)
    out.append(_err_elem(left_contract_mf(y, psi), sign * right_contract_mf(psi, y)))
    return out


def _alternating_expansion(omega, factors, scalar_pair):
    """sum_k (-1)^(k-1) <omega, v_k> v_1 ^ ... (omit k) ... ^ v_p."""
    n = omega.n
    total = None
    for k, v in enumerate(factors):
        rest = factors[:k] + factors[k + 1 :]
        blade = _wedge_all(rest) if rest else type(factors[0]).scalar(n, 1.0)
        term = ((-1.0) ** k) * scalar_pair(omega, v) * blade
        total = term if total is None else total + term
    return total


def _contrformvectors(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n, low=1)
    omega = random_homogeneous(rng, n, 1, Multiform)
    vectors = random_vectors(rng, n, p, Multivector)
    lhs = left_contract_mv(omega, _wedge_all(vectors))
    rhs = _alternating_expansion(omega, vectors, pairing)
    return [_err_elem(lhs, rhs)]


def _contrvectorforms(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n, low=1)
    v = random_homogeneous(rng, n, 1, Multivector)
    forms = random_vectors(rng, n, p, Multiform)
    lhs = left_contract_mf(v, _wedge_all(forms))
    rhs = _alternating_expansion(v, forms, pairing)
    return [_err_elem(lhs, rhs)]


def _scalarhomog1(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n)
    phi = random_homogeneous(rng, n, p, Multiform)
    x = random_homogeneous(rng, n, p, Multivector)
    keep = _popcount_table(n) == p
    restricted = float(np.sum(phi.coeffs[keep] * x.coeffs[keep]))
    return [_err_scalar(pairing(phi, x), restricted)]


def _scalarhomog2(rng, ctx):
    n = ctx.n
    p, q = _grade_pair(rng, n)
    if p == q:
        q = (p + 1) % (n + 1)
    phi = random_homogeneous(rng, n, p, Multiform)
    x = random_homogeneous(rng, n, q, Multivector)
    return [_err_zero(pairing(phi, x), max(phi.norm_inf() * x.norm_inf(), 1.0))]


def _offgrade_mass(a, keep_grade):
    keep = _popcount_table(a.n) == keep_grade
    return float(np.max(np.abs(np.where(keep, 0.0, a.coeffs)), initial=0.0))


def _contrhomogmultiv(rng, ctx):
    n = ctx.n
    p, q = _grade_pair(rng, n)
    phi = random_homogeneous(rng, n, p, Multiform)
    x = random_homogeneous(rng, n, q, Multivector)
    scale = max(phi.norm_inf() * x.norm_inf(), 1.0)
    out = []
    left = left_contract_mv(phi, x)
    right = right_contract_mv(x, phi)
    out.append((_offgrade_mass(left, q - p), scale))
    out.append((_offgrade_mass(right, q - p), scale))
    if q < n:
        hi = random_homogeneous(rng, n, q + 1, Multiform)
        out.append(_err_zero(left_contract_mv(hi, x), scale))
        out.append(_err_zero(right_contract_mv(x, hi), scale))
    return out


def _contrhomogmultif(rng, ctx):
    n = ctx.n
    p, q = _grade_pair(rng, n)
    xp = random_homogeneous(rng, n, p, Multivector)
    psi = random_homogeneous(rng, n, q, Multiform)
    scale = max(xp.norm_inf() * psi.norm_inf(), 1.0)
    out = []
    left = left_contract_mf(xp, psi)
    right = right_contract_mf(psi, xp)
    out.append((_offgrade_mass(left, q - p), scale))
    out.append((_offgrade_mass(right, q - p), scale))
    if q < n:
        hi = random_homogeneous(rng, n, q + 1, Multivector)
        out.append(_err_zero(left_contract_mf(hi, psi), scale))
        out.append(_err_zero(right_contract_mf(psi, hi), scale))
    return out


def _contrformmultivectors(rng, ctx):
    n = ctx.n
    omega = random_homogeneous(rng, n, 1, Multiform)
    x = random_multivector(rng, n)
    y = random_multivector(rng, n)
    lhs = left_contract_mv(omega, wedge(x, y))
    rhs = wedge(left_contract_mv(omega, x), y) + wedge(x.involution(), left_contract_mv(omega, y))
    return [_err_elem(lhs, rhs)]


def _contrvectormultiforms(rng, ctx):
    n = ctx.n
    v = random_homogeneous(rng, n, 1, Multivector)
    phi = random_multiform(rng, n)
    psi = random_multiform(rng, n)
    lhs = left_contract_mf(v, wedge(phi, psi))
    rhs = wedge(left_contract_mf(v, phi), psi) + wedge(phi.involution(), left_contract_mf(v, psi))
    return [_err_elem(lhs, rhs)]


def _dcvectors(rng, ctx):
    n = ctx.n
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    x = random_multivector(rng, n)
    out = [
        _err_elem(
            left_contract_mv(phi, left_contract_mv(psi, x)),
            left_contract_mv(wedge(phi, psi), x),
        ),
        _err_elem(
            right_contract_mv(right_contract_mv(x, phi), psi),
            right_contract_mv(x, wedge(phi, psi)),
        ),
    ]
    return out


def _dcforms(rng, ctx):
    n = ctx.n
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    phi = random_multiform(rng, n)
    return [
        _err_elem(
            left_contract_mf(x, left_contract_mf(y, phi)),
            left_contract_mf(wedge(x, y), phi),
        ),
        _err_elem(
            right_contract_mf(right_contract_mf(phi, x), y),
            right_contract_mf(phi, wedge(x, y)),
        ),
    ]


def _dcpvectors(rng, ctx):
    n = ctx.n
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    x = random_multivector(rng, n)
    return [
        _err_scalar(
            pairing(left_contract_mv(phi, x), psi),
            pairing(x, wedge(phi.reversion(), psi)),
        ),
        _err_scalar(
            pairing(phi, right_contract_mv(x, psi)),
            pairing(wedge(phi, psi.reversion()), x),
        ),
    ]


def _dcpforms(rng, ctx):
    n = ctx.n
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    phi = random_multiform(rng, n)
    return [
        _err_scalar(
            pairing(left_contract_mf(x, phi), y),
            pairing(phi, wedge(x.reversion(), y)),
        ),
        _err_scalar(
            pairing(x, right_contract_mf(phi, y)),
            pairing(wedge(x, y.reversion()), phi),
        ),
    ]


def _pairingofpseudo(rng, ctx):
    n = ctx.n
    top = (1 << n) - 1
    return [_err_scalar(pairing(Multiform.from_blade(n, top), Multivector.from_blade(n, top)), 1.0)]


def _expansion1(rng, ctx):
    n = ctx.n
    mask = int(rng.integers(1, 1 << n))
    positions = [j + 1 for j in range(n) if mask >> j & 1]
    mu = len(positions)
    blade = Multivector.from_blade(n, mask)
    top = (1 << n) - 1
    lhs = left_contract_mf(blade, Multiform.from_blade(n, top))
    sign = (-1.0) ** (mu + sum(positions))
    rhs = sign * Multiform.from_blade(n, top & ~mask)
    return [_err_elem(lhs, rhs)]


def _expansion2(rng, ctx):
    n = ctx.n
    mask = int(rng.integers(1, 1 << n))
    positions = [j + 1 for j in range(n) if mask >> j & 1]
    nu = len(positions)
    blade = Multiform.from_blade(n, mask)
    top = (1 << n) - 1
    lhs = left_contract_mv(blade, Multivector.from_blade(n, top))
    sign = (-1.0) ** (nu + sum(positions))
    rhs = sign * Multivector.from_blade(n, top & ~mask)
    return [_err_elem(lhs, rhs)]


def _expand_pair(x, phi):
    """The two duality expansion round-trips for a multivector and a multiform."""
    n = x.n
    top = (1 << n) - 1
    e_w = Multivector.from_blade(n, top)
    eps_w = Multiform.from_blade(n, top)
    back_x = left_contract_mv(left_contract_mf(x, eps_w), e_w.reversion())
    back_phi = left_contract_mf(left_contract_mv(phi, e_w), eps_w.reversion())
    return [_err_elem(back_x, x), _err_elem(back_phi, phi)]


def _expansionformula0(rng, ctx):
    n = ctx.n
    alpha = float(rng.uniform(-1, 1))
    return _expand_pair(Multivector.scalar(n, alpha), Multiform.scalar(n, alpha))


def _expansionformula1(rng, ctx):
    n = ctx.n
    return _expand_pair(
        random_homogeneous(rng, n, 1, Multivector), random_homogeneous(rng, n, 1, Multiform)
    )


def _expansionformula2(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n, low=1)
    return _expand_pair(
        _wedge_all(random_vectors(rng, n, p, Multivector)),
        _wedge_all(random_vectors(rng, n, p, Multiform)),
    )


def _expansionformula3(rng, ctx):
    n = ctx.n
    return _expand_pair(random_multivector(rng, n), random_multiform(rng, n))


def _nondegeneracy(rng, ctx):
    n = ctx.n
    x = random_multivector(rng, n)
    phi = random_multiform(rng, n)
    out = []
    for a in (x, phi):
        witness = float(np.max(np.abs(a.coeffs)))
        out.append((0.0 if witness > 0.0 else 1.0, 1.0))
    return out


# -- metric identities -------------------------------------------------------


def _theorem_tensor_extensor(rng, ctx):
    gamma = ctx.gamma
    g = tensor_from_extensor(gamma)
    v = random_homogeneous(rng, ctx.n, 1, Multivector)
    w = random_homogeneous(rng, ctx.n, 1, Multivector)
    out = [_err_scalar(pairing(gamma(v), w), g(v, w))]
    roundtrip = float(np.max(np.abs(g.matrix - gamma.matrix)))
    out.append((roundtrip, float(np.max(np.abs(gamma.matrix)))))
    return out


def _extension1(rng, ctx):
    n = ctx.n
    p = _rand_grade(rng, n)
    x = random_homogeneous(rng, n, p, Multivector)
    scale = max(x.norm_inf(), 1.0)
    return [(_offgrade_mass(extend(ctx.gamma, x), p), scale)]


def _extension2(rng, ctx):
    n = ctx.n
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    lhs = extend(ctx.gamma, wedge(x, y))
    rhs = wedge(extend(ctx.gamma, x), extend(ctx.gamma, y))
    return [_err_elem(lhs, rhs)]


def _extension3(rng, ctx):
    x = random_multivector(rng, ctx.n)
    gamma = ctx.gamma
    return [
        _err_elem(extend(gamma, x).involution(), extend(gamma, x.involution())),
        _err_elem(extend(gamma, x).reversion(), extend(gamma, x.reversion())),
    ]


def _extension4(rng, ctx):
    gamma = ctx.gamma
    x = random_multivector(rng, ctx.n)
    phi = random_multiform(rng, ctx.n)
    return [
        _err_elem(extend_inverse(gamma, extend(gamma, x)), x),
        _err_elem(extend(gamma, extend_inverse(gamma, phi)), phi),
    ]


def _gamma_extension_symmetric(rng, ctx):
    gamma = ctx.gamma
    x, y = random_multivector(rng, ctx.n), random_multivector(rng, ctx.n)
    return [_err_scalar(pairing(extend(gamma, x), y), pairing(extend(gamma, y), x))]


def _gamma_inverse_symmetric(rng, ctx):
    gamma = ctx.gamma
    phi, psi = random_multiform(rng, ctx.n), random_multiform(rng, ctx.n)
    return [
        _err_scalar(
            pairing(extend_inverse(gamma, phi), psi), pairing(extend_inverse(gamma, psi), phi)
        )
    ]


def _reciprocity(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    vectors, forms = reciprocal_basis(gamma)
    out = []
    for j in range(n):
        for k in range(n):
            delta = 1.0 if j == k else 0.0
            e_j = Multivector.basis_blade(n, j + 1)
            eps_k = Multiform.basis_blade(n, k + 1)
            out.append(_err_scalar(scalar_product_mv(gamma, e_j, vectors[k]), delta))
            out.append(_err_scalar(scalar_product_mf(gamma, eps_k, forms[j]), delta))
    return out


def _blade_reciprocity(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    vectors, forms = reciprocal_basis(gamma)
    p = _rand_grade(rng, n, low=1)
    js = tuple(sorted(rng.choice(n, size=p, replace=False) + 1))
    ks = tuple(sorted(rng.choice(n, size=p, replace=False) + 1))
    lower_blade = _wedge_all([Multivector.basis_blade(n, j) for j in js])
    upper_blade = _wedge_all([vectors[k - 1] for k in ks])
    sigma = generalized_permutation_symbol(ks, js)
    out = [_err_scalar(scalar_product_mv(gamma, lower_blade, upper_blade), sigma)]
    upper_forms = _wedge_all([Multiform.basis_blade(n, k) for k in ks])
    lower_forms = _wedge_all([forms[j - 1] for j in js])
    out.append(_err_scalar(scalar_product_mf(gamma, upper_forms, lower_forms), sigma))
    return out


def _pseudo_norms(gamma):
    ps = pseudoscalars(gamma)
    return ps, {
        "ee": scalar_product_mv(gamma, ps.e_wedge, ps.e_wedge),
        "e_up": scalar_product_mv(gamma, ps.e_wedge_up, ps.e_wedge_up),
        "eps": scalar_product_mf(gamma, ps.eps_wedge, ps.eps_wedge),
        "eps_down": scalar_product_mf(gamma, ps.eps_wedge_down, ps.eps_wedge_down),
        "cross_v": scalar_product_mv(gamma, ps.e_wedge, ps.e_wedge_up),
        "cross_f": scalar_product_mf(gamma, ps.eps_wedge, ps.eps_wedge_down),
    }


def _pseudoscalars1(rng, ctx):
    _, norms = _pseudo_norms(ctx.gamma)
    return [
        _err_scalar(norms["cross_v"], 1.0),
        _err_scalar(norms["cross_f"], 1.0),
        _err_scalar(norms["ee"], norms["eps_down"]),
        _err_scalar(norms["eps"], norms["e_up"]),
    ]


def _pseudoscalars2(rng, ctx):
    ps, norms = _pseudo_norms(ctx.gamma)
    return [
        _err_elem(ps.e_wedge_up, norms["eps"] * ps.e_wedge),
        _err_elem(ps.eps_wedge_down, norms["ee"] * ps.eps_wedge),
        _err_elem(ps.e_wedge, norms["eps_down"] * ps.e_wedge_up),
        _err_elem(ps.eps_wedge, norms["e_up"] * ps.eps_wedge_down),
    ]


def _pseudoscalars3(rng, ctx):
    _, norms = _pseudo_norms(ctx.gamma)
    return [
        _err_scalar(norms["ee"] * norms["e_up"], 1.0),
        _err_scalar(norms["eps"] * norms["eps_down"], 1.0),
    ]


# -- metric product identities ----------------------------------------------


def _extvectorscalarextvector(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    vs = random_vectors(rng, n, p, Multivector)
    ws = random_vectors(rng, n, p, Multivector)
    lhs = scalar_product_mv(gamma, _wedge_all(vs), _wedge_all(ws))
    gram = np.linalg.det([[scalar_product_mv(gamma, v, w) for w in ws] for v in vs])
    return [_err_scalar(lhs, float(gram))]


def _extformscalarextform(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    omegas = random_vectors(rng, n, p, Multiform)
    sigmas = random_vectors(rng, n, p, Multiform)
    lhs = scalar_product_mf(gamma, _wedge_all(omegas), _wedge_all(sigmas))
    gram = np.linalg.det([[scalar_product_mf(gamma, w, s) for s in sigmas] for w in omegas])
    return [_err_scalar(lhs, float(gram))]


def _contractionpq(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p, q = _grade_pair(rng, n)
    sign = -1.0 if (p * (q - p)) % 2 else 1.0
    xp = random_homogeneous(rng, n, p, Multivector)
    yq = random_homogeneous(rng, n, q, Multivector)
    out = [_err_elem(lcontract_mv(gamma, xp, yq), sign * rcontract_mv(gamma, yq, xp))]
    fp = random_homogeneous(rng, n, p, Multiform)
    fq = random_homogeneous(rng, n, q, Multiform)
    out.append(_err_elem(lcontract_mf(gamma, fp, fq), sign * rcontract_mf(gamma, fq, fp)))
    return out


def _contrvvectors(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    v = random_homogeneous(rng, n, 1, Multivector)
    vs = random_vectors(rng, n, p, Multivector)
    lhs = lcontract_mv(gamma, v, _wedge_all(vs))
    rhs = _alternating_expansion(v, vs, lambda a, b: scalar_product_mv(gamma, a, b))
    return [_err_elem(lhs, rhs)]


def _contrfforms(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    omega = random_homogeneous(rng, n, 1, Multiform)
    ws = random_vectors(rng, n, p, Multiform)
    lhs = lcontract_mf(gamma, omega, _wedge_all(ws))
    rhs = _alternating_expansion(omega, ws, lambda a, b: scalar_product_mf(gamma, a, b))
    return [_err_elem(lhs, rhs)]


def _scalarhomogmult1(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    by_grade = sum(
        scalar_product_mv(gamma, x.grade(p), y.grade(p)) for p in range(n + 1)
    )
    out = [_err_scalar(scalar_product_mv(gamma, x, y), by_grade)]
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    by_grade_f = sum(
        scalar_product_mf(gamma, phi.grade(p), psi.grade(p)) for p in range(n + 1)
    )
    out.append(_err_scalar(scalar_product_mf(gamma, phi, psi), by_grade_f))
    return out


def _scalarhomogmult2(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p, q = _grade_pair(rng, n)
    if p == q:
        q = (p + 1) % (n + 1)
    x = random_homogeneous(rng, n, p, Multivector)
    y = random_homogeneous(rng, n, q, Multivector)
    phi = random_homogeneous(rng, n, p, Multiform)
    psi = random_homogeneous(rng, n, q, Multiform)
    scale = 1.0
    return [
        _err_zero(scalar_product_mv(gamma, x, y), scale),
        _err_zero(scalar_product_mf(gamma, phi, psi), scale),
    ]


def _contrhomogmultiv12(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p, q = _grade_pair(rng, n)
    xp = random_homogeneous(rng, n, p, Multivector)
    yq = random_homogeneous(rng, n, q, Multivector)
    scale = max(xp.norm_inf() * yq.norm_inf(), 1.0)
    out = [
        (_offgrade_mass(lcontract_mv(gamma, xp, yq), q - p), scale),
        (_offgrade_mass(rcontract_mv(gamma, yq, xp), q - p), scale),
    ]
    if q < n:
        hi = random_homogeneous(rng, n, q + 1, Multivector)
        out.append(_err_zero(lcontract_mv(gamma, hi, yq), scale))
        out.append(_err_zero(rcontract_mv(gamma, yq, hi), scale))
    return out


def _contrhomogmultif12(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p, q = _grade_pair(rng, n)
    fp = random_homogeneous(rng, n, p, Multiform)
    fq = random_homogeneous(rng, n, q, Multiform)
    scale = max(fp.norm_inf() * fq.norm_inf(), 1.0)
    out = [
        (_offgrade_mass(lcontract_mf(gamma, fp, fq), q - p), scale),
        (_offgrade_mass(rcontract_mf(gamma, fq, fp), q - p), scale),
    ]
    if q < n:
        hi = random_homogeneous(rng, n, q + 1, Multiform)
        out.append(_err_zero(lcontract_mf(gamma, hi, fq), scale))
        out.append(_err_zero(rcontract_mf(gamma, fq, hi), scale))
    return out


def _contrvecexteriormultiv(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    v = random_homogeneous(rng, n, 1, Multivector)
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    lhs = lcontract_mv(gamma, v, wedge(x, y))
    rhs = wedge(lcontract_mv(gamma, v, x), y) + wedge(x.involution(), lcontract_mv(gamma, v, y))
    return [_err_elem(lhs, rhs)]


def _contrformexteriormultif(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    omega = random_homogeneous(rng, n, 1, Multiform)
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    lhs = lcontract_mf(gamma, omega, wedge(phi, psi))
    rhs = wedge(lcontract_mf(gamma, omega, phi), psi) + wedge(
        phi.involution(), lcontract_mf(gamma, omega, psi)
    )
    return [_err_elem(lhs, rhs)]


def _contrcontrmultiv(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    x, y, z = (random_multivector(rng, n) for _ in range(3))
    return [
        _err_elem(
            lcontract_mv(gamma, x, lcontract_mv(gamma, y, z)),
            lcontract_mv(gamma, wedge(x, y), z),
        ),
        _err_elem(
            rcontract_mv(gamma, rcontract_mv(gamma, z, y), x),
            rcontract_mv(gamma, z, wedge(y, x)),
        ),
    ]


def _contrcontrmultif(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi, chi, psi = (random_multiform(rng, n) for _ in range(3))
    return [
        _err_elem(
            lcontract_mf(gamma, phi, lcontract_mf(gamma, chi, psi)),
            lcontract_mf(gamma, wedge(phi, chi), psi),
        ),
        _err_elem(
            rcontract_mf(gamma, rcontract_mf(gamma, psi, chi), phi),
            rcontract_mf(gamma, psi, wedge(chi, phi)),
        ),
    ]


def _contrscalarmultiv(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    x, y, z = (random_multivector(rng, n) for _ in range(3))
    return [
        _err_scalar(
            scalar_product_mv(gamma, lcontract_mv(gamma, x, y), z),
            scalar_product_mv(gamma, y, wedge(x.reversion(), z)),
        ),
        _err_scalar(
            scalar_product_mv(gamma, z, rcontract_mv(gamma, y, x)),
            scalar_product_mv(gamma, wedge(z, x.reversion()), y),
        ),
    ]


def _contrscalarmultif(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi, chi, psi = (random_multiform(rng, n) for _ in range(3))
    return [
        _err_scalar(
            scalar_product_mf(gamma, lcontract_mf(gamma, phi, chi), psi),
            scalar_product_mf(gamma, chi, wedge(phi.reversion(), psi)),
        ),
        _err_scalar(
            scalar_product_mf(gamma, psi, rcontract_mf(gamma, chi, phi)),
            scalar_product_mf(gamma, wedge(psi, phi.reversion()), chi),
        ),
    ]


def _scalargamma(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi = random_multiform(rng, n)
    x = random_multivector(rng, n)
    paired = pairing(phi, x)
    return [
        _err_scalar(scalar_product_mv(gamma, extend_inverse(gamma, phi), x), paired),
        _err_scalar(scalar_product_mf(gamma, phi, extend(gamma, x)), paired),
    ]


def _contractedgamma(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi = random_multiform(rng, n)
    x = random_multivector(rng, n)
    return [
        _err_elem(lcontract_mv(gamma, extend_inverse(gamma, phi), x), left_contract_mv(phi, x)),
        _err_elem(rcontract_mv(gamma, x, extend_inverse(gamma, phi)), right_contract_mv(x, phi)),
        _err_elem(lcontract_mf(gamma, extend(gamma, x), phi), left_contract_mf(x, phi)),
        _err_elem(rcontract_mf(gamma, phi, extend(gamma, x)), right_contract_mf(phi, x)),
    ]


def _gamma1(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    v = random_homogeneous(rng, n, 1, Multivector)
    ws = _wedge_all(random_vectors(rng, n, p, Multivector))
    lhs = extend(gamma, left_contract_mv(gamma(v), ws))
    rhs = left_contract_mf(v, extend(gamma, ws))
    return [_err_elem(lhs, rhs)]


def _gamma1b(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    p = _rand_grade(rng, n, low=1)
    omega = random_homogeneous(rng, n, 1, Multiform)
    sigmas = _wedge_all(random_vectors(rng, n, p, Multiform))
    lhs = extend_inverse(gamma, left_contract_mf(gamma.apply_inverse(omega), sigmas))
    rhs = left_contract_mv(omega, extend_inverse(gamma, sigmas))
    return [_err_elem(lhs, rhs)]


def _gamma2(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    ps, norms = _pseudo_norms(gamma)
    ee = norms["ee"]
    v = random_homogeneous(rng, n, 1, Multivector)
    omega = random_homogeneous(rng, n, 1, Multiform)
    out = [
        _err_elem(
            extend(gamma, lcontract_mv(gamma, v, ps.e_wedge)),
            ee * left_contract_mf(v, ps.eps_wedge),
        ),
        _err_elem(
            lcontract_mv(gamma, lcontract_mv(gamma, v, ps.e_wedge), ps.e_wedge.reversion()),
            ee * v,
        ),
        _err_elem(
            extend(
                gamma,
                lcontract_mv(gamma, left_contract_mv(omega, ps.e_wedge), ps.e_wedge.reversion()),
            ),
            ee * omega,
        ),
    ]
    return out


def _gamma3(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    omega = random_homogeneous(rng, n, 1, Multiform)
    expected = gamma.apply_inverse(omega)
    first = invert_metric_via_formula(gamma, omega, variant=1)
    second = invert_metric_via_formula(gamma, omega, variant=2)
    return [_err_elem(first, expected), _err_elem(second, first)]


def _gamma4(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    x, y = random_multivector(rng, n), random_multivector(rng, n)
    lhs = extend(gamma, lcontract_mv(gamma, x, y))
    rhs = left_contract_mf(x, extend(gamma, y))
    return [_err_elem(lhs, rhs)]


def _gamma4b(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    lhs = extend_inverse(gamma, lcontract_mf(gamma, phi, psi))
    rhs = left_contract_mv(phi, extend_inverse(gamma, psi))
    return [_err_elem(lhs, rhs)]


def _gamma5(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    ps, norms = _pseudo_norms(gamma)
    ee = norms["ee"]
    x = random_multivector(rng, n)
    phi = random_multiform(rng, n)
    return [
        _err_elem(
            extend(gamma, lcontract_mv(gamma, x, ps.e_wedge)),
            ee * left_contract_mf(x, ps.eps_wedge),
        ),
        _err_elem(
            lcontract_mv(gamma, lcontract_mv(gamma, x, ps.e_wedge), ps.e_wedge.reversion()),
            ee * x,
        ),
        _err_elem(
            extend(
                gamma,
                lcontract_mv(gamma, left_contract_mv(phi, ps.e_wedge), ps.e_wedge.reversion()),
            ),
            ee * phi,
        ),
    ]


def _gamma6(rng, ctx):
    n = ctx.n
    gamma = ctx.gamma
    phi = random_multiform(rng, n)
    expected = extend_inverse(gamma, phi)
    first = invert_extension_via_formula(gamma, phi, variant=1)
    second = invert_extension_via_formula(gamma, phi, variant=2)
    return [_err_elem(first, expected), _err_elem(second, first)]


def _gamma7(rng, ctx):
    x = random_multivector(rng, ctx.n)
    return [
        _err_elem(expand_multivector(ctx.gamma, x, variant=1), x),
        _err_elem(expand_multivector(ctx.gamma, x, variant=2), x),
    ]


def _gamma7b(rng, ctx):
    phi = random_multiform(rng, ctx.n)
    return [
        _err_elem(expand_multiform(ctx.gamma, phi, variant=1), phi),
        _err_elem(expand_multiform(ctx.gamma, phi, variant=2), phi),
    ]


IDENTITIES: tuple[tuple[str, object], ...] = (
    ("Fund1", _fund1),
    ("Fund2", _fund2),
    ("Fund3", _fund3),
    ("Fund4", _fund4),
    ("contrformvectors", _contrformvectors),
    ("contrvectorforms", _contrvectorforms),
    ("scalarhomog1", _scalarhomog1),
    ("scalarhomog2", _scalarhomog2),
    ("contrhomogmultiv", _contrhomogmultiv),
    ("contrhomogmultif", _contrhomogmultif),
    ("contrformmultivectors", _contrformmultivectors),
    ("contrvectormultiforms", _contrvectormultiforms),
    ("dcvectors", _dcvectors),
    ("dcforms", _dcforms),
    ("dcpvectors", _dcpvectors),
    ("dcpforms", _dcpforms),
    ("pairingofpseudo", _pairingofpseudo),
    ("expansion1", _expansion1),
    ("expansion2", _expansion2),
    ("expansionformula0", _expansionformula0),
    ("expansionformula1", _expansionformula1),
    ("expansionformula2", _expansionformula2),
    ("expansionformula3", _expansionformula3),
    ("nondegeneracy", _nondegeneracy),
    ("theorem", _theorem_tensor_extensor),
    ("extension1", _extension1),
    ("extension2", _extension2),
    ("extension3", _extension3),
    ("extension4", _extension4),
    ("gammaext_symmetric", _gamma_extension_symmetric),
    ("gammainv_symmetric", _gamma_inverse_symmetric),
    ("reciprocity", _reciprocity),
    ("blade_reciprocity", _blade_reciprocity),
    ("pseudoscalars1", _pseudoscalars1),
    ("pseudoscalars2", _pseudoscalars2),
    ("pseudoscalars3", _pseudoscalars3),
    ("extvectorscalarextvector", _extvectorscalarextvector),
    ("extformscalarextform", _extformscalarextform),
    ("contractionpq", _contractionpq),
    ("contrvvectors", _contrvvectors),
    ("contrfforms", _contrfforms),
    ("scalarhomogmult1", _scalarhomogmult1),
    ("scalarhomogmult2", _scalarhomogmult2),
    ("contrhomogmultiv12", _contrhomogmultiv12),
    ("contrhomogmultif12", _contrhomogmultif12),
    ("contrvecexteriormultiv", _contrvecexteriormultiv),
    ("contrformexteriormultif", _contrformexteriormultif),
    ("contrcontrmultiv", _contrcontrmultiv),
    ("contrcontrmultif", _contrcontrmultif),
    ("contrscalarmultiv", _contrscalarmultiv),
    ("contrscalarmultif", _contrscalarmultif),
    ("scalargamma", _scalargamma),
    ("contractedgamma", _contractedgamma),
    ("gamma1", _gamma1),
    ("gamma1b", _gamma1b),
    ("gamma2", _gamma2),
    ("gamma3", _gamma3),
    ("gamma4", _gamma4),
    ("gamma4b", _gamma4b),
    ("gamma5", _gamma5),
    ("gamma6", _gamma6),
    ("gamma7", _gamma7),
    ("gamma7b", _gamma7b),
)


def identity_names() -> list[str]:
    return [name for name, _ in IDENTITIES]


def run_identity_suite(
    n: int,
    metrics: list[MetricExtensor],
    trials: int,
    seed: int,
    tolerance: float = 1e-9,
) -> list[IdentityReport]:
    """Run every identity with `trials` random inputs; deterministic per seed."""
    if not metrics:
        raise ValueError("at least one metric is required")
    reports = []
    for index, (name, fn) in enumerate(IDENTITIES):
        rng = np.random.default_rng(int(seed) ^ index)
        max_abs = 0.0
        max_rel = 0.0
        for t in range(trials):
            ctx = TrialContext(n=n, gamma=metrics[t % len(metrics)])
            for abs_err, scale in fn(rng, ctx):
                max_abs = max(max_abs, abs_err)
                if scale > _ABS_FLOOR:
                    max_rel = max(max_rel, abs_err / scale)
                elif abs_err > _ABS_FLOOR:
                    max_rel = math.inf
        reports.append(
            IdentityReport(
                name=name,
                trials=trials,
                max_abs=max_abs,
                max_rel=max_rel,
                passed=max_rel <= tolerance,
            )
        )
    return reports


def format_report(reports: list[IdentityReport]) -> str:
    return "\n".join(r.format_line() for r in reports)


def suite_passed(reports: list[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
