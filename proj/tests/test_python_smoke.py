import pytest

import cantorlab as cl


def test_partial_bijection_ops():
    f = cl.PartialBijection([(1, 2)])
    g = cl.PartialBijection([(0, 1)])
    assert cl.compose(f, g) == cl.PartialBijection([(0, 2)])
    assert cl.invert(f) == cl.PartialBijection([(2, 1)])
    assert cl.is_idempotent(cl.partial_identity([0, 1]))
    with pytest.raises(ValueError):
        cl.PartialBijection([(0, 1), (0, 2)])


def test_metric():
    f = cl.PartialBijection([(0, 1)])
    g = cl.PartialBijection([(0, 2)])
    assert cl.tau_pp_distance(f, g, 8) == (7, 8)
    assert cl.tau_pp_distance(f, f, 8) == (0, 1)


def test_munn():
    flat = cl.FiniteSemilattice([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert len(cl.munn_semigroup(flat)) == 5
    assert cl.principal_ideal(flat, 1) == [0, 1]
    assert cl.is_munn_member(flat, cl.PartialBijection([(0, 0), (1, 2)]))
    assert len(cl.munn_semigroup(cl.FiniteSemilattice.chain(4))) == 4


def test_clopen():
    a = cl.Clopen(["00", "01"])
    assert a == cl.Clopen(["0"])
    assert cl.clopen_union(cl.Clopen(["0"]), cl.Clopen(["1"])) == cl.Clopen.whole()
    assert cl.clopen_subset(cl.Clopen(["00"]), cl.Clopen(["0"]))
    assert len(cl.enumerate_base(2)) == 16
    assert cl.is_hereditary_sublattice(cl.tilde_truncated(cl.Clopen(["0"]), 2), 2)


def test_prefix_maps():
    sigma = cl.PrefixMap.bit_flip()
    assert cl.pm_compose(sigma, sigma) == cl.PrefixMap([("", "")])
    assert cl.pm_invert(sigma) == sigma
    assert cl.image_clopen(sigma, cl.Clopen(["00"])) == cl.Clopen(["10"])
    status, image = cl.apply_point(sigma, "011")
    assert (status, image) == ("determined", "111")


def test_encode_decode():
    f = cl.PrefixMap([("00", "0"), ("01", "10"), ("1", "11")])
    window = cl.encode(f, 2)
    assert cl.is_sb_member(window)
    assert cl.is_s1_member(window)
    assert cl.decode(window) == f
    assert cl.phi_homomorphism_check(f, cl.PrefixMap.bit_flip(), 3)


def test_decode_inconsistency():
    bad = cl.TruncatedLatticeMap(
        2,
        [
            (cl.Clopen([]), cl.Clopen([])),
            (cl.Clopen(["00"]), cl.Clopen(["00", "11"])),
            (cl.Clopen(["01"]), cl.Clopen(["01", "10"])),
            (cl.Clopen(["0"]), cl.Clopen([""])),
        ],
    )
    with pytest.raises(cl.InconsistencyError):
        cl.decode(bad)


def test_acceptance_entry_point():
    results = cl.run_acceptance(seed=20240915)
    assert len(results) == 9
    assert all(r["passed"] for r in results)
