import math

try:
    import dirq
except ImportError:  # ctest runs against the in-tree extension
    import _dirq as dirq


def test_exact_fidelities():
    par = dirq.build_parallel_optimal()
    anti = dirq.build_antiparallel()
    uniform = dirq.Prior.uniform_sphere()
    tetra = dirq.Prior.tetrahedron_uniform()

    f_pu = dirq.fidelity_exact(par, dirq.Scenario(dirq.Pairing.parallel, uniform)).value
    f_pt = dirq.fidelity_exact(par, dirq.Scenario(dirq.Pairing.parallel, tetra)).value
    f_au = dirq.fidelity_exact(anti, dirq.Scenario(dirq.Pairing.antiparallel, uniform)).value
    f_at = dirq.fidelity_exact(anti, dirq.Scenario(dirq.Pairing.antiparallel, tetra)).value

    s3 = math.sqrt(3.0)
    assert abs(f_pu - 0.75) < 1e-9
    assert abs(f_pt - 5.0 / 6.0) < 1e-9
    assert abs(f_au - (5 * s3 + 33) / (3 * (3 * s3 - 1) ** 2)) < 1e-9
    assert abs(f_at - (2 * s3 + 47) / (3 * (3 * s3 - 1) ** 2)) < 1e-9
    assert f_au > f_pu and f_at > f_pt


def test_bloch_round_trip():
    n = dirq.Direction(0.6, 0.0, 0.8)
    back = dirq.spinor_to_bloch(dirq.bloch_to_spinor(n))
    assert abs(back.x - 0.6) < 1e-12 and abs(back.z - 0.8) < 1e-12


def test_singlet_partial_transpose():
    rho = dirq.pure_density2(dirq.singlet())
    assert abs(dirq.negativity(rho) + 0.5) < 1e-10
    spectrum = dirq.hermitian_eigenvalues(dirq.partial_transpose(rho, 2))
    assert abs(spectrum[0] + 0.5) < 1e-10
    assert abs(spectrum[3] - 0.5) < 1e-10


def test_flip_channel():
    rho = dirq.pure_density(dirq.bloch_to_spinor(dirq.Direction(0, 0, 1)))
    out = dirq.uqsf_channel(rho)
    # Bloch z contracts to -1/3.
    z = (out[0, 0] - out[1, 1]).real
    assert abs(z + 1.0 / 3.0) < 1e-12

    mc = dirq.uqsf_average_fidelity(20000, 11)
    assert abs(mc.mean - 2.0 / 3.0) < 4 * mc.std_error


def test_span_ranks():
    assert dirq.span_rank(dirq.Pairing.parallel, 20, 3).rank == 3
    assert dirq.span_rank(dirq.Pairing.antiparallel, 20, 3).rank == 4


def test_optimizer_finds_product_optimum():
    scenario = dirq.Scenario(dirq.Pairing.parallel, dirq.Prior.uniform_sphere())
    result = dirq.optimize_product(scenario, starts=4, seed=5)
    assert abs(result.best_fidelity - (0.5 + math.sqrt(2) / 6)) < 1e-3


def test_measurement_json_round_trip():
    par = dirq.build_parallel_optimal()
    again = dirq.ProjectiveMeasurement.from_json(par.to_json())
    assert again.label == par.label
    assert dirq.validate(again).pass_


def test_reflection_component():
    check = dirq.reflection_identity_check(0.2, [0.1, 0.3, -0.5], 0.7, [0.4, -0.2, 0.9])
    assert check.residual < 1e-12
    assert check.matched_component == 1  # sigma_y
