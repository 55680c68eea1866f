import math

import numpy as np
import pytest

import viscomem as vm

ROOT3 = math.sqrt(3.0)


def test_kernel_values():
    spec = vm.KernelSpec(0.5, 3.0, 3.0 * ROOT3)
    k0, mu0 = vm.k_zero(spec)
    assert k0 == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)), rel=1e-12)
    assert mu0 == pytest.approx(1.0 - k0)
    assert vm.beta(vm.KernelSpec(1.0, 2.0, 1.0), 0.5) == pytest.approx(math.exp(-1.0) * math.cos(0.5))
    with pytest.raises(ValueError):
        vm.KernelSpec(1.0, 3.0, 3.0 * ROOT3)
    relaxed = vm.KernelSpec(1.0, 3.0, 3.0 * ROOT3, enforce_range=False)
    assert vm.kernel_transform(relaxed, 0.0) == pytest.approx(1.0 / 12.0)


def test_weights():
    table = vm.build_weight_table(vm.MemoryKernel.from_spec(vm.KernelSpec(0.5, 2.0, 1.0)), 0.125, 3)
    assert table.weight(3, 0) == pytest.approx(0.00778724453750242, rel=1e-12)
    assert table.left_edge_sum(3) <= 1.0


def test_run_and_diagnostics():
    mesh = vm.Mesh(1, 32)
    ops = vm.assemble(mesh)
    history = vm.run(vm.paper_1d_problem(vm.KernelSpec(1.0, 2.0, 2.0), False), mesh, 1.0 / 32, 33)
    assert len(history) == 34
    state = history.states[32]
    assert isinstance(state, np.ndarray) and state.shape == (31,)
    energies = [vm.discrete_energy(history, ops, n) for n in range(33)]
    assert energies[-1] < energies[0]
    assert vm.rate(2e-3, 5e-4) == pytest.approx(2.0)


def test_config_round_trip_and_harness():
    config = vm.parse_config("[mesh]\nM = 16\nmass = lumped\n[time]\nN = 16\n[kernel]\nalpha = 0.5\nsigma = 2\ngamma = 1\n")
    assert vm.parse_config(str(config)).M == 16
    out = vm.run_single(config)
    assert len(out["energy"]) == 17
    assert len(out["terminal_gradient"]) == 15
    rows = vm.run_convergence(config, "time", [8, 16])
    assert rows[0][3] is None and rows[1][3] > 1.0
    with pytest.raises(vm.ConfigError, match="line 2"):
        vm.parse_config("[mesh]\nbogus = 1\n")


def test_zero_problem_stays_zero():
    kernel = vm.MemoryKernel.from_spec(vm.KernelSpec(0.5, 3.0, 3.0 * ROOT3))
    history = vm.run(vm.zero_problem(kernel, vm.DampingSpec.square_root(1.0, 1.0)), vm.Mesh(2, 8), 0.0625, 8)
    assert all(np.abs(u).max() == 0.0 for u in history.states)
