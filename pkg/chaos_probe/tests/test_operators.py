from functools import reduce

import numpy as np
import pytest
from pydantic import ValidationError

from chaos_probe.exceptions import (
    CapacityError,
    ConfigValidationError,
    DimensionMismatchError,
    NotHermitianError,
    SiteIndexError,
)
from chaos_probe.operators import (
    HamiltonianBuilder,
    HeisenbergConfig,
    IsingConfig,
    LongRangeConfig,
    Operator,
    ProbeConfig,
    SpinRegister,
    XXZConfig,
    build_coupling,
    build_environment,
    build_total,
    embed_pauli,
    sweepable_parameters,
    total_magnetization,
    with_parameter,
)
from chaos_probe.operators.pauli import SIGMA
from chaos_probe.settings import settings
from chaos_probe.spectral import parity_operator


def kron_site(axis: str, site: int, L: int) -> np.ndarray:
    factors = [np.eye(2)] * (site - 1) + [SIGMA[axis]] + [np.eye(2)] * (L - site)
    return reduce(np.kron, factors)


def spectrum(op: Operator) -> np.ndarray:
    return np.sort(np.linalg.eigvalsh(op.entries))


def test_register_dimension_and_bits() -> None:
    reg = SpinRegister(3)
    assert reg.dim == 8
    # basis state 4 = |100>: site 1 is down
    assert reg.occupations()[4].tolist() == [1, 0, 0]
    assert reg.check_site(1) == 2
    assert reg.check_site(3) == 0


@pytest.mark.parametrize("site", [0, 4, -1])
def test_register_rejects_sites(site: int) -> None:
    with pytest.raises(SiteIndexError):
        SpinRegister(3).check_site(site)


def test_register_memory_guard() -> None:
    with pytest.raises(CapacityError):
        SpinRegister(0)
    with pytest.raises(CapacityError):
        SpinRegister(settings.max_spins + 1)


def test_embed_pauli_single_site() -> None:
    np.testing.assert_array_equal(
        embed_pauli("z", 1, SpinRegister(1)).entries,
        np.diag([1, -1]),
    )
    np.testing.assert_array_equal(
        np.diag(embed_pauli("z", 2, SpinRegister(2)).entries).real,
        [1, -1, 1, -1],
    )


@pytest.mark.parametrize("axis", ["x", "y", "z"])
@pytest.mark.parametrize("site", [1, 2, 3])
def test_embed_pauli_matches_tensor_product(axis: str, site: int) -> None:
    op = embed_pauli(axis, site, SpinRegister(3))  # type: ignore[arg-type]
    np.testing.assert_allclose(op.entries, kron_site(axis, site, 3), atol=0)
    np.testing.assert_allclose((op @ op).entries, np.eye(8), atol=1e-15)


def test_pauli_algebra() -> None:
    reg = SpinRegister(1)
    x, y, z = (embed_pauli(a, 1, reg) for a in ("x", "y", "z"))  # type: ignore[arg-type]
    np.testing.assert_allclose(x.commutator(y).entries, (z * 2j).entries)
    anti = (x @ y).entries + (y @ x).entries
    np.testing.assert_allclose(anti, np.zeros((2, 2)), atol=1e-15)


def test_real_builder_rejects_imaginary_strings() -> None:
    with pytest.raises(ValueError, match="imaginary"):
        HamiltonianBuilder(SpinRegister(2)).add(1.0, {1: "y"})
    complex_op = HamiltonianBuilder(SpinRegister(2), real=False).add(0.5, {2: "y"}).build()
    np.testing.assert_allclose(complex_op.entries, 0.5 * kron_site("y", 2, 2))


def test_operator_flags_and_dimensions() -> None:
    with pytest.raises(NotHermitianError):
        Operator(np.array([[0.0, 1.0], [0.0, 0.0]]), hermitian=True)
    with pytest.raises(DimensionMismatchError):
        Operator(np.zeros((2, 3)))
    with pytest.raises(DimensionMismatchError):
        embed_pauli("x", 1, SpinRegister(1)) + embed_pauli("x", 1, SpinRegister(2))
    z = embed_pauli("z", 1, SpinRegister(1))
    assert (z * 2.0).hermitian
    assert not (z * 1j).hermitian
    assert Operator.from_array([[1, 2j], [-2j, 0]]).hermitian
    assert not z.entries.flags.writeable


def test_ising_matches_tensor_sum() -> None:
    L, model = 3, IsingConfig(hx=0.7, hz=0.3, J=1.1)
    expected = sum(
        model.hx * kron_site("x", k, L) + model.hz * kron_site("z", k, L) for k in range(1, L + 1)
    )
    expected = expected - model.J * sum(
        kron_site("z", k, L) @ kron_site("z", k + 1, L) for k in range(1, L)
    )
    H = build_environment(model, SpinRegister(L))
    assert H.hermitian
    np.testing.assert_allclose(H.entries, expected.real, atol=1e-14)


def test_ising_hand_values() -> None:
    single = build_environment(IsingConfig(hx=0.6, hz=0.8), SpinRegister(1))
    np.testing.assert_allclose(spectrum(single), [-1.0, 1.0], atol=1e-14)
    diagonal = build_environment(IsingConfig(hx=0.0, hz=1.0, J=1.0), SpinRegister(2))
    # basis order |00>, |01>, |10>, |11>
    np.testing.assert_allclose(np.diag(diagonal.entries), [1.0, 1.0, 1.0, -3.0])


@pytest.mark.parametrize("mu", [0.0, 0.5, 1.3])
def test_xxz_two_sites(mu: float) -> None:
    H = build_environment(XXZConfig(mu=mu), SpinRegister(2))
    np.testing.assert_allclose(spectrum(H), np.sort([mu, mu, 2 - mu, -2 - mu]), atol=1e-12)


def test_heisenberg_two_sites() -> None:
    model = HeisenbergConfig(h=0.0, fields_z=(0.0, 0.0))
    H = build_environment(model, SpinRegister(2))
    np.testing.assert_allclose(spectrum(H), [-0.75, 0.25, 0.25, 0.25], atol=1e-12)


def test_heisenberg_needs_drawn_fields(rng: np.random.Generator) -> None:
    with pytest.raises(ConfigValidationError) as info:
        build_environment(HeisenbergConfig(h=0.5), SpinRegister(3))
    assert info.value.field == "fields_z"
    drawn = HeisenbergConfig(h=0.5).with_fields(5, rng)
    assert drawn.fields_z is not None
    assert len(drawn.fields_z) == 5
    assert all(abs(field) <= 0.5 for field in drawn.fields_z)
    with pytest.raises(ValidationError):
        HeisenbergConfig(h=0.1, fields_z=(0.0, 0.2))


def test_long_range_couplings() -> None:
    model = LongRangeConfig(J0=1.0, gamma=1.3)
    assert model.coupling_between(1, 2) == pytest.approx(1.0)
    assert model.coupling_between(2, 3) == pytest.approx(1.0)
    assert model.coupling_between(1, 3) == pytest.approx(0.4061, abs=1e-4)
    reg = SpinRegister(3)
    H = build_environment(LongRangeConfig(Bz0=0.0, ge=0.0, J0=1.0, gamma=1.3), reg)
    expected = (
        kron_site("x", 1, 3) @ kron_site("x", 2, 3)
        + kron_site("x", 2, 3) @ kron_site("x", 3, 3)
        + 2**-1.3 * kron_site("x", 1, 3) @ kron_site("x", 3, 3)
    )
    np.testing.assert_allclose(H.entries, expected.real, atol=1e-14)
    graded = build_environment(LongRangeConfig(J0=0.0, Bz0=5.0, ge=0.5), reg)
    # all spins up: sum of 5, 5.5, 6
    assert graded.entries[0, 0] == pytest.approx(16.5)


@pytest.mark.parametrize(
    ("model", "conserved"),
    [
        (HeisenbergConfig(h=0.0, fields_z=(0.0,) * 5), "magnetization"),
        (HeisenbergConfig(h=1.0, fields_z=(0.3, -0.9, 0.1, 0.7, -0.2)), "magnetization"),
        (XXZConfig(mu=0.5, lam=0.8), "magnetization"),
        (XXZConfig(mu=0.5, lam=0.8), "parity"),
        (IsingConfig(hx=0.9, hz=0.4, J=1.2), "parity"),
    ],
)
def test_symmetries(model: object, conserved: str) -> None:
    reg = SpinRegister(5)
    H = build_environment(model, reg)  # type: ignore[arg-type]
    S = total_magnetization(reg) if conserved == "magnetization" else parity_operator(reg)
    assert H.commutator(S).max_norm() < 1e-10


def test_total_magnetization() -> None:
    reg = SpinRegister(2)
    np.testing.assert_allclose(np.diag(total_magnetization(reg, spin=False).entries), [2, 0, 0, -2])
    np.testing.assert_allclose(np.diag(total_magnetization(reg).entries), [1, 0, 0, -1])


def test_coupling() -> None:
    np.testing.assert_allclose(build_coupling(0.2, SpinRegister(1)).entries, np.diag([0.2, -0.2]))
    assert build_coupling(0.0, SpinRegister(3)).max_norm() == 0.0
    reg = SpinRegister(3)
    H = build_environment(IsingConfig(hx=0.0, hz=0.7, J=0.4), reg)
    assert H.commutator(build_coupling(0.3, reg)).max_norm() == 0.0


def test_total_hamiltonian_blocks() -> None:
    reg = SpinRegister(2)
    env = build_environment(IsingConfig(hz=0.3), reg)
    coupling = build_coupling(0.2, reg)
    probe = ProbeConfig(omega=1.5, g=0.2)
    total = build_total(probe, env, coupling)
    entries = total.entries
    assert total.dim == 8
    np.testing.assert_array_equal(entries[:4, 4:], 0)
    np.testing.assert_array_equal(entries[4:, :4], 0)
    np.testing.assert_allclose(
        entries[:4, :4] - entries[4:, 4:],
        probe.omega * np.eye(4) + 2 * coupling.entries,
        atol=1e-14,
    )
    expected = (
        np.kron(SIGMA["z"], 0.75 * np.eye(4))
        + np.kron(SIGMA["z"], coupling.entries)
        + np.kron(np.eye(2), env.entries)
    )
    np.testing.assert_allclose(entries, expected.real, atol=0)
    with pytest.raises(DimensionMismatchError):
        build_total(probe, env, build_coupling(0.2, SpinRegister(3)))


def test_total_spectrum_is_union_of_blocks() -> None:
    reg = SpinRegister(1)
    env = build_environment(IsingConfig(hx=1.0, hz=0.2), reg)
    coupling = build_coupling(0.3, reg)
    total = build_total(ProbeConfig(omega=1.0), env, coupling)
    upper = 0.5 * np.eye(2) + coupling.entries + env.entries
    lower = -0.5 * np.eye(2) - coupling.entries + env.entries
    blocks = np.sort(np.concatenate([np.linalg.eigvalsh(upper), np.linalg.eigvalsh(lower)]))
    np.testing.assert_allclose(spectrum(total), blocks, atol=1e-12)


def test_probe_ranges() -> None:
    with pytest.raises(ValidationError):
        ProbeConfig(theta=np.pi)
    with pytest.raises(ValidationError):
        ProbeConfig(phi=-0.1)
    with pytest.raises(ValidationError):
        ProbeConfig(omega=0.0)
    assert ProbeConfig().coupling == 0.0
    assert ProbeConfig(g=0.1).coupling == 0.1


def test_sweepable_parameters() -> None:
    assert set(sweepable_parameters(IsingConfig)) == {"hx", "hz", "J"}
    assert set(sweepable_parameters(XXZConfig)) == {"mu", "lambda"}
    assert set(sweepable_parameters(HeisenbergConfig)) == {"h"}
    assert "ge" in sweepable_parameters(LongRangeConfig)
    updated = with_parameter(XXZConfig(mu=0.5), "lambda", 0.4)
    assert isinstance(updated, XXZConfig)
    assert updated.lam == 0.4
    assert updated.mu == 0.5
    with pytest.raises(ValidationError):
        with_parameter(LongRangeConfig(), "gamma", -1.0)
