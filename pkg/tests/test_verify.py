"""The user-facing verification suites must themselves be green."""
import pytest

from zassenhaus import verify


def _assert_all(results):
    failed = [r for r in results if not r.passed]
    assert not failed, "\n".join(f"{r.name}: {r.detail}" for r in failed)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_roundtrip_suite(p):
    _assert_all(verify.roundtrip_checks(p, 16))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closedform_suite(p):
    _assert_all(verify.closedform_checks(p, 16))


def test_finite_suite():
    _assert_all(verify.finite_checks())


def test_catalog_covers_each_constructor():
    texts = [t for t, _ in verify.builtin_specs(2)]
    for fragment in ("free(", "cyclic(", "demushkin(", "zp(", "superpyth(", "*", "x"):
        assert any(fragment in t for t in texts)
