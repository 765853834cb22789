import json

from corona_spectra.suite import generate_pairs, run_verify_suite, sig12


def test_sig12():
    assert sig12(1 / 3) == 0.333333333333
    assert sig12(0.0) == 0.0


def test_pairs_are_seeded():
    assert generate_pairs(9, 6, 5, 20) == generate_pairs(9, 6, 5, 20)
    assert generate_pairs(9, 6, 5, 20) != generate_pairs(10, 6, 5, 20)


def test_caps_respected():
    for g1, g2 in generate_pairs(1, 4, 3, 200):
        assert 1 <= g1.order <= 4 and 1 <= g2.order <= 3


def test_single_vertex_caps():
    report = run_verify_suite(7, 1, 1, 1)
    checks = [e["check"] for e in report.entries]
    assert "spectrum:adjacency" in checks and report.fail_count == 0


def test_report_is_deterministic():
    a = json.dumps(run_verify_suite(5, 5, 4, 20).to_dict(), sort_keys=True)
    b = json.dumps(run_verify_suite(5, 5, 4, 20).to_dict(), sort_keys=True)
    assert a == b


def test_timing_only_on_request():
    report = run_verify_suite(1, 3, 3, 2)
    assert "wall_time" not in report.to_dict()
    assert "wall_time" in report.to_dict(include_timing=True)


def test_default_suite_passes():
    report = run_verify_suite()
    assert report.fail_count == 0
    kinds = {e["check"] for e in report.entries}
    assert {"counts", "spectrum:adjacency", "spectrum:laplacian", "spectrum:signless",
            "kirchhoff", "spanning_trees"} <= kinds
