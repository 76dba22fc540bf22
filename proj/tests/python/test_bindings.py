import math

import pytest

import thetalift as tl


@pytest.fixture(scope="module")
def form():
    return tl.MaassForm.from_json_file(tl.sample_form_path())


def test_e8_shells():
    e8 = tl.Lattice.builtin("E8")
    assert e8.rank == 8
    total, primitive = tl.shell_counts(e8, 4)
    assert total[1:] == [240, 2160, 6720, 17520]
    assert primitive[4] == 17520 - 240
    shell = tl.enumerate_shell(e8, 1)
    assert len(shell) == 240
    assert all(e8.norm(v) == 1 and d == 1 for v, d in shell)


def test_lattice_validation():
    with pytest.raises(tl.ValidationError):
        tl.Lattice([[2, 1], [1, 2]])
    with pytest.raises(ValueError):
        tl.Lattice.builtin("A2")


def test_form_data(form):
    assert form.r == pytest.approx(27.559502703781476)
    assert form.parity == 1
    assert form.max_prime == 9973
    assert form.coefficient(6) == pytest.approx(form.hecke_eigenvalue(2) * form.hecke_eigenvalue(3))
    with pytest.raises(tl.InsufficientDataError):
        form.hecke_eigenvalue(10007)


def test_bessel():
    assert tl.k_scaled(0.0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-12)
    mant, log_scale = tl.k_scaled_log(100.0, 300.0)
    assert log_scale < 0 and math.isfinite(mant)
    assert tl.bessel_regime(100.0, 100.0) == "TRANSITION"
    assert abs(tl.k_scaled(50.0, 20.0)) <= tl.bessel_envelope(50.0, 20.0)
    with pytest.raises(tl.DomainError):
        tl.airy_transition(100.0, 120.0)


def test_norm_ratio_is_scale_invariant(form):
    a = tl.norm_ratio(form, 8, 100)
    b = tl.norm_ratio(form.scaled(5.0), 8, 100)
    assert a["ratio"] > 0
    assert b["ratio"] == pytest.approx(a["ratio"], rel=1e-12)
    assert tl.arch_factor(8, 0.0) == pytest.approx(2 * math.pi / 9, rel=1e-14)


def test_lift(form):
    e8 = tl.Lattice.builtin("E8")
    res = tl.lift_eval(e8, form, [0.0] * 8, 2.0)
    assert res["value"].imag == 0.0
    assert res["truncation_M"] >= 1
    assert abs(tl.coefficient_A(form, 8, 1, 1) - form.c1) < 1e-15
    x = [0.1, -0.2, 0.3, 0.05, 0.0, 0.25, -0.4, 0.15]
    a = tl.lift_eval(e8, form, x, 3.0)
    b = tl.lift_eval(e8, form, [v + 1.0 if i == 2 else v for i, v in enumerate(x)], 3.0)
    assert abs(a["value"] - b["value"]) <= 10 * a["tail_bound"] + 1e-300


def test_bounds():
    cb = tl.combined_bound(100.0, 8)
    assert cb["y0_exponent"] == (167, 295)
    assert cb["sup_exponent"] == (2 * 295 + 39, 295)
    assert tl.pretrace_envelope(50.0, 8, 1.0) == pytest.approx(51.0**4 * (1 + 51.0**-2))
    assert tl.fourier_envelope(50.0, 8, 2.0) > tl.fourier_envelope(50.0, 8, 20.0)
