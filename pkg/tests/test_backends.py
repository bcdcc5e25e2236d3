import math
import os
import subprocess
import sys

import numpy as np
import pytest

from orthokit import _kernels_py
from orthokit._backend import backend_name

try:
    from orthokit import _kernels

    HAVE_EXT = True
except ImportError:
    _kernels = None
    HAVE_EXT = False

needs_ext = pytest.mark.skipif(not HAVE_EXT, reason="compiled kernels unavailable")


def random_inputs(rng, n):
    w = rng.uniform(0.05, 1.0, size=n)
    w /= w.sum()
    g = np.cumsum(rng.uniform(0.1, 2.0, size=n))
    x = rng.uniform(-20.0, 20.0, size=37)
    x.sort()
    return w, g, x


@needs_ext
def test_backend_parity_overlap_and_survival():
    rng = np.random.RandomState(5)
    for n in (1, 2, 7, 100, 1500):
        w, g, x = random_inputs(rng, n)
        a = _kernels.overlap_grid(w, g, x)
        b = _kernels_py.overlap_grid(w, g, x)
        assert np.abs(a - b).max() < 1e-13
        sa = _kernels.survival_grid(w, g, x)
        sb = _kernels_py.survival_grid(w, g, x)
        assert np.abs(sa - sb).max() < 1e-13


@needs_ext
def test_backend_parity_abs4():
    rng = np.random.RandomState(6)
    for n in (2, 5, 33, 400):
        lo = rng.uniform(-1, 1, size=n)
        lo /= np.linalg.norm(lo)
        hi = rng.uniform(-1, 1, size=n)
        hi /= np.linalg.norm(hi)
        t = rng.uniform(0, 2 * math.pi, size=51)
        a = _kernels.abs4_profile(lo, hi, t)
        b = _kernels_py.abs4_profile(lo, hi, t)
        assert np.abs(a - b).max() < 1e-13


def _survival_at_gamma_tilde(mod, count):
    w = np.full(count, 1.0 / count)
    g = np.arange(count, dtype=float)
    return float(mod.survival_grid(w, g, np.array([2.0 * math.pi / count]))[0])


def test_python_kernels_compensated_sums_stay_tiny():
    # 20001 components crosses the compensation threshold; the comb zero
    # must survive the long summation
    assert _survival_at_gamma_tilde(_kernels_py, 20_001) < 1e-20
    assert _survival_at_gamma_tilde(_kernels_py, 999) < 1e-22


@needs_ext
def test_compiled_kernels_compensated_sums_stay_tiny():
    assert _survival_at_gamma_tilde(_kernels, 20_001) < 1e-20


def test_abs4_uniform_closed_form():
    # lo = hi = 1/sqrt(2n): profile is (1 + cos t)^2 / n
    for mod in filter(None, (_kernels_py, _kernels)):
        n = 20_001
        c = np.full(n, 1.0 / math.sqrt(2 * n))
        t = np.array([0.0, 0.7, math.pi])
        got = mod.abs4_profile(c, c, t)
        want = (1.0 + np.cos(t)) ** 2 / n
        assert np.abs(got - want).max() < 1e-15


def test_kernels_are_deterministic():
    rng = np.random.RandomState(9)
    w, g, x = random_inputs(rng, 300)
    for mod in filter(None, (_kernels_py, _kernels)):
        first = mod.overlap_grid(w, g, x)
        second = mod.overlap_grid(w, g, x)
        assert np.array_equal(first, second)


def test_read_only_arrays_accepted():
    w = np.array([0.5, 0.5])
    g = np.array([0.0, 1.0])
    x = np.array([0.3])
    for arr in (w, g, x):
        arr.flags.writeable = False
    for mod in filter(None, (_kernels_py, _kernels)):
        mod.overlap_grid(w, g, x)


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env.pop("ORTHOKIT_PURE_PYTHON", None)
    if env_value is not None:
        env["ORTHOKIT_PURE_PYTHON"] = env_value
    proc = subprocess.run(
        [sys.executable, "-c", "import orthokit; print(orthokit.backend_name())"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


def test_env_var_forces_python_backend():
    assert _backend_in_subprocess("1") == "python"
    assert _backend_in_subprocess("0") in ("cython", "python")


@needs_ext
def test_default_backend_is_compiled():
    assert _backend_in_subprocess(None) == "cython"


def test_backend_name_reports_a_known_backend():
    assert backend_name() in ("cython", "python")
