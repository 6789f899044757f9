"""Command-line front end: JSON documents in, one JSON report out.

Exit codes: 0 computed (and verdict positive), 1 input or shape error,
2 computed with a negative verdict, 3 numerical failure.
"""

import argparse
import hashlib
import json
import math
import os
import sys

import numpy as np

from . import duality, ellipsoid, lagrangian, matops, oracle, quantum, symplectic
from .errors import (
    BadShape,
    ConstraintViolated,
    HypothesisNotMet,
    InternalInconsistency,
    NotIsotropic,
    NotPositiveDefinite,
    NotSymmetric,
    NotTransverse,
    NumericalFailure,
    PlaneMismatch,
    RankDeficient,
    SingularMatrix,
)

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_NUMERIC = 0, 1, 2, 3
KINDS = ("sym", "spd", "symplectic", "plane-basis", "plane-ab", "vector")

# library operation -> the subcommand that exposes it
OPERATION_COMMANDS = {
    "matops.sym_eig": "spectrum",
    "matops.psd_margin": "spectrum",
    "matops.spd_roots": "jointdiag",
    "matops.schur_complement": "project",
    "symplectic.standard_j": "williamson",
    "symplectic.symp_product": "lagdual",
    "symplectic.is_symplectic": "williamson",
    "symplectic.symplectic_eigenvalues": "spectrum",
    "symplectic.williamson": "williamson",
    "symplectic.random_symplectic": "thm1",
    "lagrangian.plane_from_basis": "lagdual",
    "lagrangian.plane_from_ab": "lagdual",
    "lagrangian.is_transverse": "lagdual",
    "lagrangian.frame_symplectic": "lagdual",
    "ellipsoid.polar_dual": "dual",
    "ellipsoid.linear_image": "dual",
    "ellipsoid.mahler_volume": "dual",
    "ellipsoid.orthogonal_projection": "project",
    "ellipsoid.lagrangian_projection": "project",
    "ellipsoid.capacity": "capacity",
    "ellipsoid.support_function": "capacity",
    "ellipsoid.john_of_dual_product": "john",
    "duality.lagrangian_polar_dual": "lagdual",
    "duality.dual_pair_verdict": "pairtest",
    "duality.thm1_check": "thm1",
    "duality.reconstruct_ball": "reconstruct",
    "duality.product_capacity": "product-capacity",
    "quantum.certify": "certify",
    "quantum.uncertainty_ellipsoid": "certify",
    "quantum.gaussian_wigner_eval": "wigner",
    "quantum.gaussian_state_wigner_form": "wigner",
    "quantum.hardy_verdict": "hardy",
    "quantum.joint_diagonalize": "jointdiag",
    "quantum.wigner_subgaussian_check": "wigner",
    "oracle.mc_polar_membership": "oracle polar",
    "oracle.mc_projection_support": "oracle shadow",
    "oracle.wigner_quadrature": "oracle quadrature",
    "oracle.random_spd": "oracle polar",
}


def _flag(name):
    return "--in" if name == "input" else "--" + name.replace("_", "-")


class InputError(Exception):
    def __init__(self, errors):
        super().__init__("; ".join(f"{e['path']}: {e['message']}" for e in errors))
        self.errors = errors


# -- serialization ---------------------------------------------------------


def _format(obj, indent, level):
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = ","
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        colon = ":" if indent is None else ": "
        items = [pad + json.dumps(str(k)) + colon + _format(obj[k], indent, level + 1) for k in sorted(obj)]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[" + sep.join(pad + _format(v, indent, level + 1) for v in obj) + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return json.dumps(str(x))
        if x == 0.0:
            x = 0.0  # no negative zero in reports
        return format(x, ".17g")
    if isinstance(obj, np.ndarray):
        return _format(obj.tolist(), indent, level)
    if hasattr(obj, "value"):
        return json.dumps(obj.value)
    return json.dumps(str(obj))


def dumps(obj, indent=None):
    """Deterministic JSON: sorted keys, floats with 17 significant digits."""
    return _format(obj, indent, 0)


# -- input documents -------------------------------------------------------


def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _matrix_errors(rows, path):
    errors = []
    if not isinstance(rows, list) or not rows:
        return [{"path": path, "message": "must be a non-empty array of rows"}], None
    width = None
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            errors.append({"path": f"{path}/{i}", "message": "row must be an array"})
            continue
        if width is None:
            width = len(row)
        elif len(row) != width:
            errors.append({"path": f"{path}/{i}", "message": f"row has {len(row)} entries, expected {width}"})
        for j, v in enumerate(row):
            if not _is_number(v):
                errors.append({"path": f"{path}/{i}/{j}", "message": "entry must be a finite number"})
    if errors:
        return errors, None
    return [], np.array(rows, dtype=float)


def validate_document(doc, expect=None):
    """Check a parsed MatrixDocument and return ``(value, errors)``.

    All problems are collected (with JSON-pointer paths) rather than failing
    on the first.  ``value`` is a normalized array, or for ``plane-basis`` /
    ``plane-ab`` documents a ``(plane, basis)`` tuple, or ``None`` on error.
    """
    errors = []
    if not isinstance(doc, dict):
        return None, [{"path": "", "message": "document must be a JSON object"}]
    kind = doc.get("kind")
    if kind not in KINDS:
        errors.append({"path": "/kind", "message": f"kind must be one of {list(KINDS)}"})
    elif expect is not None and kind not in expect:
        errors.append({"path": "/kind", "message": f"expected kind {' or '.join(expect)}, got {kind!r}"})
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        errors.append({"path": "/n", "message": "n must be a positive integer"})
        n = None
    half = bool(doc.get("half", False))

    if kind == "vector":
        vec = doc.get("vector", doc.get("matrix"))
        if not isinstance(vec, list) or not vec or not all(_is_number(v) for v in vec):
            errors.append({"path": "/vector", "message": "vector must be a non-empty array of finite numbers"})
        elif n is not None and len(vec) not in (n, 2 * n):
            errors.append({"path": "/vector", "message": f"vector length {len(vec)} is neither n nor 2n"})
        return (None, errors) if errors else (np.array(vec, dtype=float), errors)

    if kind == "plane-ab":
        mats = {}
        for key in ("a", "b"):
            errs, m = _matrix_errors(doc.get(key), f"/{key}")
            errors.extend(errs)
            if m is not None and n is not None and m.shape != (n, n):
                errors.append({"path": f"/{key}", "message": f"shape {m.shape} != ({n}, {n})"})
            mats[key] = m
        if errors:
            return None, errors
        try:
            plane = lagrangian.plane_from_ab(mats["a"], mats["b"])
        except ConstraintViolated as exc:
            return None, [{"path": "", "message": str(exc)}]
        return (plane, np.vstack([mats["b"].T, -mats["a"].T])), []

    errs, m = _matrix_errors(doc.get("matrix"), "/matrix")
    errors.extend(errs)
    if m is None or n is None or kind not in KINDS:
        return None, errors
    if kind == "plane-basis":
        expected = (2 * n, n)
    elif kind in ("sym", "spd") and half:
        expected = (n, n)
    else:
        expected = (2 * n, 2 * n)
    if m.shape != expected:
        errors.append({"path": "/matrix", "message": f"shape error: got {m.shape}, expected {expected}"})
        return None, errors
    try:
        if kind == "sym":
            return matops.as_symmetric(m), errors
        if kind == "spd":
            return matops.as_spd(m), errors
        if kind == "symplectic":
            ok, residual = symplectic.is_symplectic(m)
            if not ok:
                errors.append({"path": "/matrix", "message": f"not symplectic (residual {residual:.6g})"})
                return None, errors
            return m, errors
        plane = lagrangian.plane_from_basis(m)
        return (plane, m), errors
    except NotSymmetric as exc:
        errors.append({"path": "/matrix", "message": str(exc)})
    except NotPositiveDefinite as exc:
        errors.append({"path": "/matrix", "message": f"not positive definite (min eig {exc.min_eig:.6g})"})
    except (NotIsotropic, RankDeficient, BadShape) as exc:
        errors.append({"path": "/matrix", "message": str(exc)})
    return None, errors


def _read_json(source, stdin):
    if source == "-":
        return json.load(stdin)
    text = source.strip()
    if text[:1] in "[{" or text[:1].isdigit() or text[:1] in "-.":
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            pass
    with open(source, encoding="utf-8") as fh:
        return json.load(fh)


def _load(args, name, expect, raw_kind=None):
    """Load and validate the document passed through flag ``name``."""
    source = getattr(args, name)
    try:
        doc = _read_json(source, args.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError([{"path": f"{_flag(name)}", "message": f"cannot read JSON: {exc}"}])
    if isinstance(doc, list) and raw_kind is not None:
        doc = _bare_document(doc, raw_kind)
    args.inputs[name] = doc
    value, errors = validate_document(doc, expect)
    if errors:
        for e in errors:
            e["path"] = f"{_flag(name)}:{e['path']}"
        raise InputError(errors)
    return value


def _bare_document(data, kind):
    """Wrap a bare JSON array as a document of ``kind``."""
    if kind == "vector":
        return {"kind": "vector", "n": max(1, len(data) // 2) if len(data) > 1 else 1, "vector": data}
    rows = len(data)
    return {"kind": kind, "n": rows, "half": True, "matrix": data}


def _load_form(args, name):
    """An n x n SPD form, given either as a document or a bare nested array."""
    return _load(args, name, ("spd", "sym"), raw_kind="spd")


def _load_vector(args, name):
    return _load(args, name, ("vector",), raw_kind="vector")


def _load_pair(args, n):
    """The transverse pair from --plane-l/--plane-lp, or (l_X, l_P)."""
    if args.plane_l is None and args.plane_lp is None:
        pair = lagrangian.TransversePair.coordinate(n)
        return pair, np.eye(n), np.eye(n)
    if args.plane_l is None or args.plane_lp is None:
        raise InputError([{"path": "--plane-l/--plane-lp", "message": "give both planes or neither"}])
    plane_l, basis_l = _load(args, "plane_l", ("plane-basis", "plane-ab"))
    plane_lp, basis_lp = _load(args, "plane_lp", ("plane-basis", "plane-ab"))
    if plane_l.n != n or plane_lp.n != n:
        raise InputError([{"path": "--plane-l", "message": f"planes must have dimension {n}"}])
    pair = lagrangian.TransversePair(plane_l, plane_lp)
    # R maps coordinates in the given basis to orthonormal plane coordinates
    return pair, plane_l.basis.T @ basis_l, plane_lp.basis.T @ basis_lp


def _given_to_orthonormal(form, r):
    r_inv = np.linalg.inv(r)
    return r_inv.T @ form @ r_inv


def _orthonormal_to_given(form, r):
    return r.T @ form @ r


# -- subcommands -------------------------------------------------------------


def cmd_spectrum(args):
    m = _load(args, "input", ("spd",))
    eig, _ = matops.sym_eig(m)
    return {
        "eigenvalues": eig,
        "psd_margin": matops.psd_margin(m),
        "lambdas": symplectic.symplectic_eigenvalues(m),
    }, True


def cmd_williamson(args):
    m = _load(args, "input", ("spd",))
    form = symplectic.williamson(m)
    n = form.s.n
    ok, residual = symplectic.is_symplectic(form.s.matrix, args.tol or symplectic.SYMPLECTIC_TOL)
    return {
        "s": form.s.matrix,
        "lambdas": form.lambdas,
        "j": symplectic.standard_j(n),
        "symplectic_residual": residual,
        "reconstruction_residual": matops.max_norm(form.reconstruct() - m),
    }, ok


def cmd_capacity(args):
    m = _load(args, "input", ("spd",))
    omega = ellipsoid.AmbientEllipsoid(m)
    result = {
        "capacity": ellipsoid.capacity(omega),
        "lambda_max": symplectic.symplectic_eigenvalues(m)[0],
    }
    if args.direction is not None:
        u = _load_vector(args, "direction")
        result["support"] = ellipsoid.support_function(omega, u)
    return result, True


def cmd_dual(args):
    a = _load_form(args, "input")
    dual = ellipsoid.polar_dual(a)
    result = {"form": a, "dual_form": dual, "mahler_volume": ellipsoid.mahler_volume(a)}
    if args.linear is not None:
        lin = _load_matrix(args, "linear")
        image = ellipsoid.linear_image(lin, a)
        via_dual = ellipsoid.linear_image(np.linalg.inv(lin).T, dual)
        result["image_form"] = image
        result["image_dual_form"] = ellipsoid.polar_dual(image)
        result["covariance_residual"] = matops.max_norm(ellipsoid.polar_dual(image) - via_dual)
    return result, True


def _load_matrix(args, name):
    """A general square matrix given as a bare nested array."""
    source = getattr(args, name)
    try:
        data = _read_json(source, args.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError([{"path": f"{_flag(name)}", "message": f"cannot read JSON: {exc}"}])
    if isinstance(data, dict):
        data = data.get("matrix")
    errors, m = _matrix_errors(data, f"{_flag(name)}:")
    if errors:
        raise InputError(errors)
    if m.shape[0] != m.shape[1]:
        raise InputError([{"path": f"{_flag(name)}:", "message": f"matrix must be square, got {m.shape}"}])
    args.inputs[name] = data
    return m


def cmd_lagdual(args):
    a_given = _load_form(args, "input")
    n = a_given.shape[0]
    pair, r_l, r_lp = _load_pair(args, n)
    x = ellipsoid.PlaneEllipsoid(pair.first, _given_to_orthonormal(a_given, r_l))
    dual = duality.lagrangian_polar_dual(x, pair)
    ok, margin = lagrangian.is_transverse(pair.first, pair.second)
    frame = lagrangian.frame_symplectic(pair.first, pair.second)
    s = frame.matrix
    gram = np.array([[symplectic.symp_product(s[:, i], s[:, n + j]) for j in range(n)] for i in range(n)])
    return {
        "dual_form": _orthonormal_to_given(dual.form, r_lp),
        "dual_form_orthonormal": dual.form,
        "basis_lp_orthonormal": pair.second.basis,
        "frame": s,
        "frame_residual": frame.residual,
        "transverse_margin": margin,
        "omega_gram": gram,
    }, True


def cmd_project(args):
    m = _load(args, "input", ("spd",))
    omega = ellipsoid.AmbientEllipsoid(m)
    n = omega.n
    result = {
        "schur_pp": matops.schur_complement(m, "PP"),
        "schur_xx": matops.schur_complement(m, "XX"),
    }
    onto = args.onto
    if onto in ("x", "p"):
        if args.plane_l is not None or args.plane_lp is not None:
            raise InputError([{"path": "--onto", "message": "x/p projections take no planes"}])
        shadow = ellipsoid.orthogonal_projection(omega, onto.upper())
        result["form"] = shadow.form
    else:
        pair, r_l, r_lp = _load_pair(args, n)
        shadow = ellipsoid.lagrangian_projection(omega, pair, onto)
        r = r_l if onto == "first" else r_lp
        result["form"] = _orthonormal_to_given(shadow.form, r)
        result["form_orthonormal"] = shadow.form
    result["onto"] = onto
    return result, True


def cmd_john(args):
    a_given = _load_form(args, "input")
    pair, r_l, _ = _load_pair(args, a_given.shape[0])
    x = ellipsoid.PlaneEllipsoid(pair.first, _given_to_orthonormal(a_given, r_l))
    john = ellipsoid.john_of_dual_product(x, pair)
    return {
        "m": john.m,
        "lambdas": symplectic.symplectic_eigenvalues(john.m),
        "capacity": ellipsoid.capacity(ellipsoid.AmbientEllipsoid(john.m)),
    }, True


def cmd_thm1(args):
    m = _load(args, "omega", ("spd",))
    omega = ellipsoid.AmbientEllipsoid(m)
    tol = args.tol if args.tol is not None else 1e-9
    if not duality.contains_symplectic_ball(omega):
        lam = symplectic.symplectic_eigenvalues(m)[0]
        return {
            "status": "HypothesisNotMet",
            "lambda_max": lam,
            "capacity": math.pi / lam,
        }, False
    margins, residuals = [], []
    for trial in range(args.trials):
        pair = oracle.random_transverse_pair(args.seed, omega.n, stream=trial)
        check = duality.thm1_check(omega, pair)
        margins.append(check.inclusion_margin)
        residuals.append(check.equality_residual)
    coordinate = duality.thm1_check(omega, lagrangian.TransversePair.coordinate(omega.n))
    ok = min(margins + [coordinate.inclusion_margin]) >= -tol
    return {
        "status": "Included" if ok else "Violated",
        "trials": args.trials,
        "margins": margins,
        "equality_residuals": residuals,
        "min_margin": min(margins) if margins else None,
        "coordinate_margin": coordinate.inclusion_margin,
        "coordinate_equality_residual": coordinate.equality_residual,
        "coordinate_verdict": coordinate.verdict.status,
    }, ok


def cmd_reconstruct(args):
    a_given = _load_form(args, "input")
    pair, r_l, r_lp = _load_pair(args, a_given.shape[0])
    x = ellipsoid.PlaneEllipsoid(pair.first, _given_to_orthonormal(a_given, r_l))
    omega = duality.reconstruct_ball(x, pair)
    back = ellipsoid.lagrangian_projection(omega, pair, "first")
    dual = ellipsoid.lagrangian_projection(omega, pair, "second")
    expected_dual = duality.lagrangian_polar_dual(x, pair)
    return {
        "m": omega.m,
        "capacity": ellipsoid.capacity(omega),
        "first_residual": matops.max_norm(back.form - x.form),
        "second_residual": matops.max_norm(dual.form - expected_dual.form),
        "dual_form": _orthonormal_to_given(dual.form, r_lp),
    }, True


def cmd_pairtest(args):
    a_given = _load_form(args, "x")
    b_given = _load_form(args, "y")
    if a_given.shape != b_given.shape:
        raise InputError([{"path": "--y", "message": "forms must have the same size"}])
    pair, r_l, r_lp = _load_pair(args, a_given.shape[0])
    x = ellipsoid.PlaneEllipsoid(pair.first, _given_to_orthonormal(a_given, r_l))
    y = ellipsoid.PlaneEllipsoid(pair.second, _given_to_orthonormal(b_given, r_lp))
    verdict = duality.dual_pair_verdict(x, y, pair, args.tol if args.tol is not None else duality.VERDICT_TOL)
    return {
        "status": verdict.status,
        "margin": verdict.margin,
        "exactness_residual": verdict.exactness_residual,
    }, verdict.is_dual


def cmd_product_capacity(args):
    a = _load_form(args, "a")
    b = _load_form(args, "b")
    return {"capacity": duality.product_capacity(a, b)}, True


def cmd_certify(args):
    sigma = _load(args, "input", ("spd",))
    tol = args.tol if args.tol is not None else quantum.ADMISSIBLE_TOL
    report = quantum.certify(sigma, tol)
    omega = quantum.uncertainty_ellipsoid(sigma)
    return {
        "admissible": report.admissible,
        "rs_margins": report.rs_margins,
        "min_hermitian_eig": report.min_hermitian_eig,
        "min_symplectic_eig": report.min_symplectic_eig,
        "ellipsoid_capacity": ellipsoid.capacity(omega),
    }, report.admissible


def cmd_hardy(args):
    a = _load_form(args, "a")
    b = _load_form(args, "b")
    verdict = quantum.hardy_verdict(a, b, args.tol if args.tol is not None else quantum.SPECTRUM_TOL)
    return {"status": verdict.status, "eigenvalues": verdict.eigenvalues}, (
        verdict.status is not quantum.HardyStatus.INADMISSIBLE
    )


def cmd_jointdiag(args):
    a = _load_form(args, "a")
    b = _load_form(args, "b")
    lin, lam = quantum.joint_diagonalize(a, b)
    root_a, _ = matops.spd_roots(a)
    diag = np.diag(np.sqrt(lam))
    inv = np.linalg.inv(lin)
    return {
        "l": lin,
        "lambda": lam,
        "sqrt_a": root_a,
        "residual_a": matops.max_norm(lin.T @ a @ lin - diag),
        "residual_b": matops.max_norm(inv @ b @ inv.T - diag),
    }, True


def cmd_wigner(args):
    if args.m is not None:
        m = _load(args, "m", ("spd",))
        verdict = quantum.wigner_subgaussian_check(m, args.tol if args.tol is not None else quantum.SPECTRUM_TOL)
        return {"status": verdict.status, "lambdas": verdict.eigenvalues}, (
            verdict.status is not quantum.HardyStatus.INADMISSIBLE
        )
    if args.sigma is not None:
        sigma = _load(args, "sigma", ("spd",))
        if args.z is None:
            raise InputError([{"path": "--z", "message": "--sigma needs --z"}])
        z = _load_vector(args, "z")
        zbar = _load_vector(args, "zbar") if args.zbar is not None else np.zeros_like(z)
        return {"value": float(quantum.gaussian_wigner_eval(sigma, zbar, z))}, True
    if args.a is None:
        raise InputError([{"path": "--a", "message": "give --a (state), --sigma or --m"}])
    a = _load_form(args, "a")
    b = _load(args, "b", ("sym", "spd"), raw_kind="sym") if args.b is not None else np.zeros_like(a)
    psi = quantum.GaussianState(a, b)
    g = quantum.gaussian_state_wigner_form(psi)
    result = {"g": g.m, "lambdas": symplectic.symplectic_eigenvalues(g.m)}
    if args.z is not None:
        result["value"] = float(quantum.gaussian_state_wigner(psi, _load_vector(args, "z")))
    return result, True


def cmd_oracle_polar(args):
    if args.input is not None:
        a = _load_form(args, "input")
    else:
        a = oracle.random_spd(args.seed, args.random_n, args.cap)
        args.inputs["random"] = {"n": args.random_n, "cap": args.cap}
    p = _load_vector(args, "p")
    cloud = oracle.boundary_cloud(a, args.count, args.seed)
    accepted, best = oracle.mc_polar_membership(cloud, p)
    return {
        "form": a,
        "accepted": accepted,
        "max_inner": best,
        "analytic_dual_value": float(p @ np.linalg.solve(a, p)),
    }, accepted


def cmd_oracle_shadow(args):
    m = _load(args, "input", ("spd",))
    omega = ellipsoid.AmbientEllipsoid(m)
    pair, _, _ = _load_pair(args, omega.n)
    dirs = oracle.direction_cloud(omega.n, args.directions, args.seed)
    est = oracle.mc_projection_support(omega, pair, args.onto, dirs, args.count, args.seed)
    shadow = ellipsoid.lagrangian_projection(omega, pair, args.onto)
    analytic = np.array([ellipsoid.support_function(shadow, u) for u in dirs.points])
    ok = bool(np.all(est >= analytic - 1e-2) and np.all(est <= analytic + 1e-9))
    return {"directions": dirs.points, "estimates": est, "analytic": analytic, "within_band": ok}, ok


def cmd_oracle_quadrature(args):
    a = _load_form(args, "a")
    b = _load(args, "b", ("sym", "spd"), raw_kind="sym") if args.b is not None else np.zeros_like(a)
    z = _load_vector(args, "z")
    psi = quantum.GaussianState(a, b)
    half_width = args.half_width if args.half_width is not None else 12.0 / math.sqrt(a[0, 0])
    value = oracle.wigner_quadrature(psi, z, (half_width, args.points))
    analytic = float(quantum.gaussian_state_wigner(psi, z))
    return {"quadrature": value, "analytic": analytic, "abs_error": abs(value - analytic)}, True


# -- dispatch ---------------------------------------------------------------


def _add_common(p):
    p.add_argument("--tol", type=float, default=None, help="override the verdict tolerance")
    p.add_argument("--json-indent", type=int, default=None)


def _add_planes(p):
    p.add_argument("--plane-l", default=None, help="plane-basis or plane-ab document for l")
    p.add_argument("--plane-lp", default=None, help="plane-basis or plane-ab document for l'")


def build_parser():
    parser = argparse.ArgumentParser(prog="sympolar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    add("spectrum", cmd_spectrum, "symplectic spectrum of an SPD matrix").add_argument("--in", dest="input", required=True)
    add("williamson", cmd_williamson, "Williamson normal form").add_argument("--in", dest="input", required=True)
    p = add("capacity", cmd_capacity, "symplectic capacity of an ellipsoid")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--direction", default=None)
    p = add("dual", cmd_dual, "polar dual of an ellipsoid form")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--linear", default=None)
    p = add("lagdual", cmd_lagdual, "Lagrangian polar dual")
    p.add_argument("--in", dest="input", required=True)
    _add_planes(p)
    p = add("project", cmd_project, "orthogonal or Lagrangian projection")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--onto", choices=("x", "p", "first", "second"), required=True)
    _add_planes(p)
    p = add("john", cmd_john, "John ellipsoid of X x X^o")
    p.add_argument("--in", dest="input", required=True)
    _add_planes(p)
    p = add("thm1", cmd_thm1, "randomized shadow inclusion harness")
    p.add_argument("--omega", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p = add("reconstruct", cmd_reconstruct, "symplectic ball from a plane ellipsoid")
    p.add_argument("--in", dest="input", required=True)
    _add_planes(p)
    p = add("pairtest", cmd_pairtest, "dual pair verdict")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    _add_planes(p)
    p = add("product-capacity", cmd_product_capacity, "c_max of X x P")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add("certify", cmd_certify, "quantum admissibility of a covariance matrix").add_argument(
        "--in", dest="input", required=True
    )
    p = add("hardy", cmd_hardy, "Hardy sub-Gaussian verdict")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = add("jointdiag", cmd_jointdiag, "joint diagonalization of A and B")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p = add("wigner", cmd_wigner, "Gaussian Wigner distributions")
    p.add_argument("--a", default=None)
    p.add_argument("--b", default=None)
    p.add_argument("--z", default=None)
    p.add_argument("--sigma", default=None)
    p.add_argument("--zbar", default=None)
    p.add_argument("--m", default=None)

    p = sub.add_parser("oracle", help="brute-force validators")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("polar")
    _add_common(q)
    q.set_defaults(func=cmd_oracle_polar)
    q.add_argument("--in", dest="input", default=None)
    q.add_argument("--p", required=True)
    q.add_argument("--count", type=int, default=20000)
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--random-n", type=int, default=2)
    q.add_argument("--cap", type=float, default=4.0)
    q = osub.add_parser("shadow")
    _add_common(q)
    q.set_defaults(func=cmd_oracle_shadow)
    q.add_argument("--in", dest="input", required=True)
    q.add_argument("--onto", choices=("first", "second"), required=True)
    q.add_argument("--directions", type=int, default=8)
    q.add_argument("--count", type=int, default=100000)
    q.add_argument("--seed", type=int, default=None)
    _add_planes(q)
    q = osub.add_parser("quadrature")
    _add_common(q)
    q.set_defaults(func=cmd_oracle_quadrature)
    q.add_argument("--a", required=True)
    q.add_argument("--b", default=None)
    q.add_argument("--z", required=True)
    q.add_argument("--half-width", type=float, default=None)
    q.add_argument("--points", type=int, default=801)
    return parser


def _command_name(args):
    if args.command == "oracle":
        return f"oracle {args.oracle_command}"
    return args.command


def dispatch(argv=None, stdout=None, stdin=None):
    """Run one subcommand; write the JSON report to ``stdout`` and return the exit code."""
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return EXIT_OK
        stdout.write(dumps({"error": {"kind": "usage", "errors": [{"path": "argv", "message": "invalid arguments"}]}}) + "\n")
        return EXIT_INPUT
    args.stdin = stdin
    args.inputs = {}
    if hasattr(args, "seed"):
        if args.seed is None:
            args.seed = int(os.environ.get("SYMPOLAR_SEED", "0"))
    name = _command_name(args)
    report = {"command": name}
    try:
        result, positive = args.func(args)
        code = EXIT_OK if positive else EXIT_NEGATIVE
        report["result"] = result
        report["verdict"] = bool(positive)
    except InputError as exc:
        report["error"] = {"kind": "input", "errors": exc.errors}
        code = EXIT_INPUT
    except (BadShape, NotSymmetric, NotPositiveDefinite, NotTransverse, PlaneMismatch, SingularMatrix, ValueError) as exc:
        report["error"] = {"kind": "input", "errors": [{"path": "", "message": str(exc)}]}
        code = EXIT_INPUT
    except HypothesisNotMet as exc:
        report["error"] = {"kind": "hypothesis", "errors": [{"path": "", "message": str(exc)}]}
        code = EXIT_NEGATIVE
    except (NumericalFailure, InternalInconsistency, np.linalg.LinAlgError, ArithmeticError) as exc:
        report["error"] = {"kind": "numerical", "errors": [{"path": "", "message": str(exc)}]}
        code = EXIT_NUMERIC
    report["inputs_digest"] = hashlib.sha256(dumps(args.inputs).encode()).hexdigest()
    report["tolerances"] = {
        "override": args.tol,
        "construction": matops.SYM_TOL,
        "spd": matops.SPD_TOL,
        "identity": matops.IDENTITY_TOL,
        "verdict": duality.VERDICT_TOL,
    }
    if hasattr(args, "seed"):
        report["seed"] = args.seed
    stdout.write(dumps(report, args.json_indent) + "\n")
    return code


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
