"""End-to-end smoke tests for the ptlens Python module."""

import pytest

import ptlens


def identity_map(tree):
    return [[v["id"], v["id"]] for v in tree["vertices"]]


def test_classify_and_normalize():
    assert ptlens.classify(5, 2) == {"p": 5, "q": 2, "case": "C2b"}
    assert ptlens.classify(13, 5)["case"] == "C3"
    assert ptlens.normalize(7, 5) == (7, 2)
    assert ptlens.are_homeomorphic((7, 2), (7, 4))
    assert not ptlens.are_homeomorphic((5, 1), (5, 2))


def test_invalid_input_raises():
    with pytest.raises(ValueError, match="NotCoprime"):
        ptlens.classify(4, 2)


def test_generate_validate_roundtrip():
    complex_ = ptlens.generate(13, 5, radius=2, branching=2, bridge_length=3, seed=1)
    assert ptlens.validate_complex(complex_) == []
    assert ptlens.validate_structure(13, 5, complex_) == []
    assert (
        ptlens.validate_structure(13, 5, complex_, radius=2, branching=2, bridge_length=3)
        == []
    )
    again = ptlens.generate(13, 5, radius=2, branching=2, bridge_length=3, seed=1)
    assert complex_ == again
    assert len(complex_["bridges"]) == 1


def test_ptree_and_analysis():
    complex_ = ptlens.generate(3, 1, radius=2, branching=2, seed=5)
    tree = ptlens.build_ptree(3, 1, complex_)
    assert ptlens.validate_ptree(tree) == []
    assert tree["case"] == "C2a"

    mapping = identity_map(tree)
    assert ptlens.check_automorphism(tree, mapping) == 1
    locus = ptlens.fixed_point(tree, mapping)
    assert locus["kind"] == "vertex"
    assert locus in ptlens.brute_force_fixed(tree, mapping)

    outcome = ptlens.analyze(3, 1, complex_, mapping)
    assert outcome["outcome"] == "CertificateV"


def test_swap_admissibility():
    assert not ptlens.swap_admissible(13, 5, "bridge")["admissible"]
    assert not ptlens.swap_admissible(5, 2, "type0")["admissible"]
    assert ptlens.swap_admissible(2, 1, "type2")["admissible"]


def test_surgery_reduction():
    pattern = {
        "boundary": [0, 1, "z", 2, 3],
        "marked": "z",
        "arcs": [[0, 1], [2, 3]],
        "loops": [{"id": 0, "parent": None}, {"id": 1, "parent": {"loop": 0}}],
    }
    assert ptlens.validate_pattern(pattern) == []
    assert ptlens.innermost_loop(pattern) == 1

    trace = ptlens.reduce_to_disjoint(pattern)
    assert trace["initialComponents"] == 4
    assert len(trace["steps"]) == 4
    kinds = [step["kind"] for step in trace["steps"]]
    assert kinds == ["loop", "loop", "arc", "arc"]

    smaller = ptlens.reduce_step(pattern)
    assert len(smaller["loops"]) == 1


def test_dot_exports():
    complex_ = ptlens.generate(2, 1, radius=1, branching=2, seed=0)
    assert "graph complex {" in ptlens.complex_to_dot(complex_)
    tree = ptlens.build_ptree(2, 1, complex_)
    assert "graph ptree {" in ptlens.ptree_to_dot(tree)


def test_verify_quick():
    summary = ptlens.verify(
        seed=3,
        pmax=12,
        grid_pmax=8,
        pairs=50,
        trees=5,
        tree_max=60,
        per_cell=2,
        patterns=10,
        max_components=12,
    )
    assert summary["allPassed"]
    assert len(summary["suites"]) == 8
