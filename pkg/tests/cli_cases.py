"""Golden CLI cases: name -> (argv, expected exit code).

Paths are relative to tests/fixtures.  Regenerate with
``python3 tests/cli_cases.py --regen`` after checking the new output by hand.
"""

import io
import os
import sys
from pathlib import Path

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = {
    # polar dual of a ball of radius 2 is the ball of radius 1/2
    "dual_ball": (["dual", "--in", "ball_r2_n2_half.json"], 0),
    "dual_linear": (["dual", "--in", "a_diag41_half.json", "--linear", "[[1, 2], [0, 1]]"], 0),
    # capacity of B^4(3) is 9 pi
    "capacity_ball": (["capacity", "--in", "ball_r3_n2.json"], 0),
    "capacity_support": (["capacity", "--in", "m_example.json", "--direction", "[1, 0]"], 0),
    "spectrum_diag41": (["spectrum", "--in", "diag41.json"], 0),
    "williamson_diag41": (["williamson", "--in", "diag41.json"], 0),
    # John ellipsoid of the unit ball times its dual is the unit ball
    "john_unit": (["john", "--in", "eye2_half.json"], 0),
    # X = [-2, 2] gives x^2/4 + 4p^2 <= 1
    "john_interval": (["john", "--in", "a_quarter.json"], 0),
    "reconstruct_interval": (["reconstruct", "--in", "a_quarter.json"], 0),
    "lagdual_coordinate": (["lagdual", "--in", "a_diag41_half.json"], 0),
    "lagdual_lines": (["lagdual", "--in", "[[2]]", "--plane-l", "line_11.json", "--plane-lp", "line_1m1.json"], 0),
    "lagdual_swapped": (["lagdual", "--in", "[[3]]", "--plane-l", "plane_p_ab.json", "--plane-lp", "plane_x_ab.json"], 0),
    "project_x": (["project", "--in", "m_example.json", "--onto", "x"], 0),
    "project_p": (["project", "--in", "m_example.json", "--onto", "p"], 0),
    "project_lines": (
        ["project", "--in", "m_example.json", "--onto", "first", "--plane-l", "line_11.json", "--plane-lp", "line_1m1.json"],
        0,
    ),
    "thm1_ball": (["thm1", "--omega", "symp_ball.json", "--trials", "20", "--seed", "7"], 0),
    "thm1_not_met": (["thm1", "--omega", "diag41.json", "--trials", "5", "--seed", "7"], 2),
    "pairtest_exact": (["pairtest", "--x", "a_diag41_half.json", "--y", "[[0.25, 0], [0, 1]]"], 0),
    "pairtest_not": (["pairtest", "--x", "[[2]]", "--y", "[[1]]"], 2),
    # B = A^-1 gives capacity 4
    "product_capacity_exact": (["product-capacity", "--a", "a_diag41_half.json", "--b", "[[0.25, 0], [0, 1]]"], 0),
    "certify_saturated": (["certify", "--in", "sigma_half.json"], 0),
    "certify_inadmissible": (["certify", "--in", "sigma_bad.json"], 2),
    # A = B = I forces the Gaussian
    "hardy_gaussian": (["hardy", "--a", "eye2_half.json", "--b", "eye2_half.json"], 0),
    "hardy_inadmissible": (["hardy", "--a", "[[2]]", "--b", "[[1]]"], 2),
    "jointdiag_diag41": (["jointdiag", "--a", "a_diag41_half.json", "--b", "eye2_half.json"], 0),
    "wigner_coherent": (["wigner", "--a", "[[1]]", "--z", "[2, 0]"], 0),
    # diagonal Gauss case: state with A = Sigma_XX^-1 / 2 against the density with Sigma = diag(Sigma_XX, Sigma_XX^-1 / 4)
    "wigner_diag_state": (["wigner", "--a", "[[1, 0], [0, 0.25]]", "--z", "[0.5, -1, 0.25, 0.5]"], 0),
    "wigner_diag_density": (
        ["wigner", "--sigma", "{\"kind\": \"spd\", \"n\": 2, \"matrix\": [[0.5, 0, 0, 0], [0, 2, 0, 0], "
         "[0, 0, 0.5, 0], [0, 0, 0, 0.125]]}", "--z", "[0.5, -1, 0.25, 0.5]"],
        0,
    ),
    "wigner_subgaussian": (["wigner", "--m", "diag41.json"], 2),
    "oracle_polar": (["oracle", "polar", "--in", "a_quarter.json", "--p", "[0.49]", "--count", "2000", "--seed", "1"], 0),
    "oracle_polar_reject": (["oracle", "polar", "--in", "a_quarter.json", "--p", "[0.51]", "--count", "2000"], 2),
    "oracle_shadow": (
        ["oracle", "shadow", "--in", "m_example.json", "--onto", "second", "--directions", "2", "--count", "2000"],
        0,
    ),
    "oracle_quadrature": (["oracle", "quadrature", "--a", "[[1]]", "--z", "[0, 0]"], 0),
    "error_odd_shape": (["spectrum", "--in", "odd_spd.json"], 1),
    "error_size_mismatch": (["pairtest", "--x", "diag41.json", "--y", "[[1]]"], 1),
    "error_wrong_kind": (["certify", "--in", "line_11.json"], 1),
    "error_not_spd": (["spectrum", "--in", "{\"kind\": \"spd\", \"n\": 1, \"matrix\": [[1, 0], [0, -0.2]]}"], 1),
}


def run_case(name, env_seed=None):
    """Run one case in-process; return (exit code, stdout text)."""
    from sympolar.cli import dispatch

    argv, _ = CASES[name]
    out = io.StringIO()
    old = os.getcwd()
    saved = os.environ.pop("SYMPOLAR_SEED", None)
    if env_seed is not None:
        os.environ["SYMPOLAR_SEED"] = str(env_seed)
    try:
        os.chdir(FIXTURES)
        code = dispatch(argv, stdout=out)
    finally:
        os.chdir(old)
        os.environ.pop("SYMPOLAR_SEED", None)
        if saved is not None:
            os.environ["SYMPOLAR_SEED"] = saved
    return code, out.getvalue()


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name in CASES:
        code, text = run_case(name)
        (GOLDEN / f"{name}.json").write_text(text, encoding="utf-8")
        print(f"{name}: exit {code}")


if __name__ == "__main__" and "--regen" in sys.argv:
    regenerate()
