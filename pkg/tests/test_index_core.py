import pytest

from conftest import DK_CASES, XY, poly, polys
from gsvindex import families
from gsvindex.config import EngineConfig
from gsvindex.errors import NonPolynomialFactor, NoStabilization, NotTangent
from gsvindex.index_core import (Invariants, compute_c, full_report, gsv_index_gomez_mont,
                                 gsv_index_homological, gsv_index_residue, h0_star, h1_star,
                                 homology_dims, lambda_dim)
from gsvindex.local_engine import colength
from gsvindex.parser import ProblemSpec
from gsvindex.residue import local_multiplicity


def _dk_expected(k, m):
    small = k - 1 if m == 2 else k
    return {'h0_star': m * (k - 1) + 1, 'term1': 0, 'term2': small, 'milnor': k,
            'milnor_mod_c': small, 'lam': small, 'index': (m - 1) * (k - 1)}


def test_compute_c():
    assert compute_c(poly('x^2*y + y^3'), polys('1/3*x^4', '1/3*x^3*y')) == poly('x^3')
    assert compute_c(poly('x^2 + y^2'), polys('x', 'y')) == poly('2')
    assert compute_c(poly('x^2 + y^3'), polys('3*y^2', '-2*x')).is_zero()


def test_compute_c_not_tangent():
    with pytest.raises(NotTangent):
        compute_c(poly('x^2 + y^2'), polys('y', '0'))


def test_compute_c_power_series():
    with pytest.raises(NonPolynomialFactor) as info:
        compute_c(poly('x + x*y'), polys('0', 'x'), 10)
    c = info.value.c
    assert c.coefficient((1, 0)) == 1
    assert c.coefficient((1, 1)) == -1
    assert c.coefficient((1, 2)) == 1


def test_d4_invariants(d4):
    inv = Invariants(d4)
    assert inv.c == poly('x^3')
    assert inv.h0_star == 10
    assert inv.term1 == 0
    assert inv.term2 == 4
    assert inv.lam == 4
    assert inv.milnor == 4
    assert inv.milnor_mod_c == 4
    assert inv.milnor_mod_f == 4
    assert inv.homological_index() == 6
    assert inv.residue_index() == 6
    assert inv.gomez_mont_index() is None


def test_spec_level_entry_points(d4):
    assert h0_star(d4) == 10
    assert h1_star(d4) == 4
    assert lambda_dim(d4) == 4
    dims = homology_dims(d4)
    assert dims.h_star == [10, 4, 4]
    assert dims.h == [10, 4]
    assert dims.euler_characteristic() == 6
    assert gsv_index_homological(d4) == 6
    assert gsv_index_residue(d4) == 6
    assert gsv_index_gomez_mont(d4) is None


@pytest.mark.parametrize('k, m', DK_CASES)
def test_dk_golden_family(k, m):
    spec = families.dk(k, m)
    expected = _dk_expected(k, m)
    inv = Invariants(spec)
    for name in ('h0_star', 'term1', 'term2', 'milnor', 'milnor_mod_c', 'lam'):
        assert getattr(inv, name) == expected[name], name
    assert inv.homological_index() == expected['index']
    assert inv.residue_index() == expected['index']
    assert inv.exact_sequence_holds()


@pytest.mark.parametrize('k, m', DK_CASES)
def test_dk_curve_multiplicity(k, m):
    spec = families.dk(k, m)
    gens = [spec.X[0], spec.f]
    assert colength(gens).value == (k - 1) * (m + 1)
    assert local_multiplicity(gens) == (k - 1) * (m + 1)


def test_quadric_in_two_variables(quadric2):
    inv = Invariants(quadric2)
    assert inv.c == 2
    dims = inv.dims()
    assert dims.h_star == [1, 0, 0]
    assert dims.h == [1, 1]
    assert inv.homological_index() == 0
    assert inv.residue_index() == 0
    assert inv.gomez_mont_index() == 0
    assert inv.poincare_hopf() == 1


@pytest.mark.parametrize('mu', [1, 2, 3, 4])
def test_euler_field_on_a_mu(mu):
    inv = Invariants(families.ak_euler(mu))
    assert inv.homological_index() == 1 - mu
    assert inv.residue_index() == 1 - mu
    assert inv.gomez_mont_index() == 1 - mu
    assert inv.dims().h == [1, mu]
    assert inv.exact_sequence_holds()


def test_a4_transfer_identity():
    inv = Invariants(families.ak_euler(4))
    assert inv.c == 10
    assert inv.transfer_holds()
    assert inv.gorenstein_checks()


def test_quadric_in_three_variables():
    inv = Invariants(families.quadric(3))
    assert inv.c == 2
    dims = inv.dims()
    assert dims.h_star == [1, 0, 0, 0]
    assert dims.h == [1, 0, 1]
    assert inv.homological_index() == 2
    assert inv.residue_index() == 2
    assert inv.gomez_mont_index() == 2


def test_hamiltonian_field(hamiltonian):
    inv = Invariants(hamiltonian)
    assert inv.c.is_zero()
    assert inv.h0_star == 2
    assert inv.term1 == 2
    assert inv.term2 == 0
    assert inv.lam == 2
    assert inv.dims().h == [2, 2]
    assert inv.homological_index() == 0
    assert inv.residue_index() == 0
    assert inv.gomez_mont_index() == 0
    assert inv.poincare_hopf() == 2
    assert inv.gorenstein_checks()
    assert inv.transfer_holds()


def test_full_report_d4(d4):
    report = full_report(d4)
    assert report.consistent
    assert report.index == 6
    assert report.gsv_homological == 6
    assert report.gsv_residue == 6
    assert report.gsv_gomez_mont is None
    assert report.poincare_hopf is None
    assert report.dims.h_star == [10, 4, 4]
    assert report.euler_ok and report.exact_sequence_ok
    assert report.spec is d4
    doc = report.to_dict()
    assert doc['h_star'] == [10, 4, 4]
    assert doc['c'] == 'x^3'
    assert doc['indices']['homological'] == 6
    assert doc['consistent'] is True


def test_full_report_regular_field(quadric2):
    report = full_report(quadric2)
    assert report.consistent
    assert report.indices() == {'homological': 0, 'residue': 0, 'gomez_mont': 0,
                                'poincare_hopf': 1}
    assert report.transfer_ok and report.lambda_ok


def test_full_report_without_threads(hamiltonian):
    report = full_report(hamiltonian, config=EngineConfig(threaded_routes=False))
    assert report.consistent
    assert report.index == 0
    assert report.dims.h_star == [2, 2, 2]


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_full_report_after_coordinate_change(seed):
    spec = ProblemSpec.build(XY, 'x^3 + x*y^2', ['x', 'y'])
    report = full_report(spec, seed)
    assert report.spec.coordinate_change is not None
    assert report.consistent
    assert report.index == -3
    assert report.gsv_gomez_mont == -3
    assert report.dims.h_star == [1, 0, 0]
    assert report.dims.h == [1, 4]
    assert any(note.startswith('coordinate change applied') for note in report.diagnostics)


def test_full_report_records_normalization_failure():
    spec = ProblemSpec.build(XY, 'x^2 + y^2', ['0', 'x^2 + y^2'])
    report = full_report(spec, 0, EngineConfig(trunc_cap=10, normalize_retries=3))
    assert report.index is None
    assert not report.consistent
    assert report.diagnostics[0].startswith('normalization: NormalizationFailed')


def test_truncation_cap_below_start_never_yields_a_number(d4):
    config = EngineConfig(trunc_cap=3)
    with pytest.raises(NoStabilization) as info:
        h0_star(d4, config)
    assert info.value.orders == []
    report = full_report(d4, 0, config)
    assert report.index is None
    assert 'NoStabilization' in report.diagnostics[0]


def test_declared_c_is_kept_when_it_matches(d4):
    report = full_report(d4)
    assert not any(note.startswith('declared c') for note in report.diagnostics)


def test_full_report_with_a_power_series_factor():
    # X(f)/f = 2 + x/(1 + x)
    spec = ProblemSpec.build(XY, 'x^2 + y^2 + x^3 + x*y^2', ['x', 'y'])
    report = full_report(spec)
    assert not report.c_exact
    assert report.failed_routes == []
    assert report.indices() == {'homological': 0, 'residue': 0, 'gomez_mont': 0,
                                'poincare_hopf': 1}
    assert report.consistent
    assert report.dims.h_star == [1, 0, 0]
    assert report.dims.h == [1, 1]
    assert report.euler_ok and report.exact_sequence_ok


def test_series_factor_does_not_raise_the_start_order():
    spec = ProblemSpec.build(XY, 'x^2 + y^2 + x^3 + x*y^2', ['x', 'y'])
    with pytest.raises(NonPolynomialFactor) as info:
        compute_c(spec.f, spec.X, 24)
    inv = Invariants(spec, c=info.value.c, c_exact=False)
    assert inv.with_c(inv.X).start_order(inv.config) == 4
    assert inv.milnor_mod_c == 0
    assert inv.lam == 0


def test_failed_route_is_not_a_disagreement(d4, monkeypatch):
    def broken(self):
        raise NoStabilization('residue cover did not stabilize', [], [])

    monkeypatch.setattr(Invariants, 'residue_index', broken)
    report = full_report(d4)
    assert report.failed_routes == ['residue']
    assert report.consistent
    assert report.index == 6
    assert report.to_dict()['failed_routes'] == ['residue']
