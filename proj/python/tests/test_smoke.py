import pytest

import ospstats

EXAMPLE = "6,8/5/1,4,7/3,9/2"


def test_statistics_of_running_example():
    s = ospstats.statistics(EXAMPLE)
    assert (s["bInv"], s["bMaj"], s["bExc"], s["inv"], s["cinv"]) == (4, 5, 0, 8, 2)
    assert s["mak"] == 21


def test_normalize_and_errors():
    assert ospstats.normalize("3,1/2") == "1,3/2"
    with pytest.raises(ValueError):
        ospstats.normalize("1/1")
    with pytest.raises(ospstats.ParseError):
        ospstats.distribution(3, 2, "mak+")


def test_partitions_count():
    # k! S(n, k) ordered, S(n, k) unordered
    assert len(ospstats.partitions(4, 2)) == 14
    assert len(ospstats.partitions(4, 2, unordered=True)) == 7


def test_distribution_is_euler_mahonian():
    for n in range(1, 6):
        for k in range(1, n + 1):
            target = ospstats.euler_mahonian(n, k)
            assert ospstats.distributions(n, k, ["mak+bInv", "lmak+bInv", "cinvLSB"]) == [target] * 3
    assert ospstats.q_stirling(3, 2) == "2*q + 1*q^2"


def test_bijection_round_trip():
    xi = [1, 2, 1, 2, 1, 1, 1, 2, 4, 1]
    assert ospstats.psi("NNNOOESSES", xi) == "6/3,5,7/1,4,10/9/2,8"
    assert ospstats.psi_inverse("6/3,5,7/1,4,10/9/2,8") == ("NNNOOESSES", xi)


def test_checks_and_cli():
    assert "thm25" in ospstats.checks()
    report = ospstats.run_check("thm25", 5)
    assert report["passed"] and len(report["rows"]) == 15
    code, out, err = ospstats.cli(["verify", "nope"])
    assert code == 2 and out == "" and "unknown check" in err
    code, out, _ = ospstats.cli(["stats", EXAMPLE])
    assert code == 0 and "perm=54132" in out
