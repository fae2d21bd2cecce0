"""Exit criteria. Each test checks one criterion at its stated time bound
and records a PASS/FAIL line printed in the terminal summary."""

import functools
import time
from pathlib import Path

import pytest
from click.testing import CliRunner

from topocheck.cli import main
from topocheck.core import _box
from topocheck.enumeration import count_spaces, enumerate_spaces, naive_families, spaces_up_to
from topocheck.errors import SizeLimitExceeded
from topocheck.fixtures import E, I3_ABC, example_mixed_product, example_product
from topocheck.maps import map_classify, preimage_table
from topocheck.setclasses import tables
from topocheck.spacedoc import parse_space, render_space
from topocheck.tailspace import growth_witness, verify_e1, verify_r1_growth
from topocheck.verify import lemma_checks, map_checks, product_checks

RESULTS: list[str] = []
DATA = Path(__file__).parent / "data"


def criterion(number, title, seconds):
    def wrap(fn):
        @functools.wraps(fn)
        def test():
            start = time.perf_counter()
            ok = False
            try:
                fn()
                elapsed = time.perf_counter() - start
                assert elapsed < seconds, f"took {elapsed:.1f}s, bound {seconds}s"
                ok = True
            finally:
                elapsed = time.perf_counter() - start
                status = "PASS" if ok else "FAIL"
                RESULTS.append(f"ACCEPTANCE {number} {title}: {status} ({elapsed:.2f}s < {seconds}s)")

        return test

    return wrap


def _passed(results, names):
    by_name = {r.name: r for r in results}
    for name in names:
        assert by_name[name].passed, by_name[name].render()


@criterion(1, "three-point example products", 1)
def test_example_products():
    a = E.pointset("bc").bits
    assert tables(E).sg_closed[a]
    sq, (p, _) = example_product()
    t = tables(sq)
    aa = _box([3, 3], [a, a])
    assert not t.sg_closed[aa]
    assert t.scl[aa] == t.full == (1 << 9) - 1
    pre = preimage_table(p)[a]
    assert not t.sg_closed[pre]
    mixed, (q, _) = example_mixed_product()
    s = I3_ABC.pointset("ab").bits
    assert tables(I3_ABC).hsg_closed[s]
    assert not tables(mixed).hsg_closed[preimage_table(q)[s]]


@criterion(2, "lemma equivalence suites on all 389 spaces", 60)
def test_lemma_suites():
    assert len(spaces_up_to(4)) == 389
    _passed(
        lemma_checks(),
        [
            "singleton-dichotomy",
            "locally-indiscrete-equivalence",
            "hsg-criterion",
            "sg-duality",
            "g-duality",
            "nowhere-dense-implies-hsg",
            "hsg-not-nowhere-dense-witness",
        ],
    )


@criterion(3, "enumeration cross-check", 60)
def test_enumeration_cross_check():
    for n, count in zip(range(1, 5), (1, 4, 29, 355)):
        fast = {sp.open_masks for sp in enumerate_spaces(n)}
        slow = set(naive_families(n))
        assert fast == slow and len(fast) == count
    assert count_spaces(5) == 6942
    with pytest.raises(SizeLimitExceeded):
        count_spaces(5, oracle=True)
    assert CliRunner().invoke(main, ["count", "--n", "5", "--oracle"]).exit_code == 4


@criterion(4, "product suites", 120)
def test_product_suites():
    _passed(
        product_checks(),
        [
            "box-semi-open-componentwise",
            "box-preopen-componentwise",
            "indiscrete-factor-int-cl",
            "indiscrete-factor-hsg-transfer",
        ],
    )


@criterion(5, "map suites", 300)
def test_map_suites():
    _passed(
        map_checks(),
        [
            "map-open-continuous-surjective-pre-semi-open",
            "map-open-continuous-delta-open",
            "map-hsg-preimage-preservation",
            "projections-irresolute-gs-irresolute",
            "projection-not-sg-irresolute-exists",
        ],
    )
    _, (p, _) = example_product()
    assert not map_classify(p).sg_irresolute


@criterion(6, "symbolic tail topology", 1)
def test_symbolic_tail_space():
    results = verify_e1(window=12)
    assert len(results) == 5
    assert all(r.passed for r in results), [r.render() for r in results if not r.passed]


@criterion(7, "growth harness", 5)
def test_growth_harness():
    results = verify_r1_growth()
    assert all(r.passed for r in results)
    for k in range(1, 6):
        assert len(growth_witness(k)[1]) == k


@criterion(8, "CLI golden behaviour", 300)
def test_cli():
    for name in ["E.top", "S.top", "I2.top", "D2.top", "sigma.top"]:
        doc = parse_space((DATA / name).read_text())
        assert parse_space(render_space(doc)) == doc
    runner = CliRunner()
    table = [
        (["classify", str(DATA / "E.top"), "--set", "b,c"], 0),
        (["check", str(DATA / "D2.top"), "--query", "hyperconnected", "--assert"], 1),
        (["classify", str(DATA / "syntax.top")], 2),
        (["classify", str(DATA / "not_topology.top")], 3),
        (["count", "--n", "5", "--oracle"], 4),
    ]
    for argv, code in table:
        assert runner.invoke(main, argv).exit_code == code, argv
    result = runner.invoke(main, ["verify", "--suite", "all"])
    assert result.exit_code == 0, result.stdout
    assert "FAIL" not in result.stdout
