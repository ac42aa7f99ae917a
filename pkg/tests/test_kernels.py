import subprocess
import sys

import pytest

from mahlerlog import _kernels_py, rho


def test_kernel_selected():
    assert rho.KERNEL in ("compiled", "python")


compiled = pytest.importorskip("mahlerlog._kernels", reason="compiled kernel not built")


@pytest.mark.parametrize("n", range(1, 7))
def test_compiled_matches_python(n):
    for m in range(0, 26):
        mp = rho._max_product(n, m) if m >= n else 1
        assert list(compiled.zero_sum_counts(n, m, mp)) == _kernels_py.zero_sum_counts(n, m, mp), (n, m)


def test_compiled_is_default():
    assert rho.KERNEL == "compiled"


def test_fallback_when_extension_missing():
    code = (
        "import sys; sys.modules['mahlerlog._kernels'] = None\n"
        "from mahlerlog import rho\n"
        "assert rho.KERNEL == 'python', rho.KERNEL\n"
        "assert rho.omega_oracle(4, 4) == 96\n"
        "assert all(rho.omega(3, m) == rho.omega_oracle(3, m) for m in range(30))\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr


def test_python_kernel_rejects_bad_n():
    with pytest.raises(ValueError):
        _kernels_py.zero_sum_counts(0, 3, 1)
