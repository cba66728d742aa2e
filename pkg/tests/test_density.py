import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motifscope.density import cluster_labels, mutual_reachability


def block_matrix(sizes, within, between):
    """Symmetric distance matrix with constant within/between-block entries."""
    n = sum(sizes)
    d = np.full((n, n), float(between))
    start = 0
    for s in sizes:
        d[start : start + s, start : start + s] = within
        start += s
    np.fill_diagonal(d, 0.0)
    return d


def test_mutual_reachability_small_example():
    dist = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 3.0], [2.0, 3.0, 0.0]])
    mr = mutual_reachability(dist, 2)
    expected = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 3.0], [2.0, 3.0, 0.0]])
    assert np.array_equal(mr, expected)
    mr3 = mutual_reachability(dist, 3)
    # core distances become the largest row entries: 2, 3, 3
    assert mr3[0, 1] == 3.0 and mr3[0, 2] == 3.0 and mr3[1, 2] == 3.0


def test_three_tight_groups():
    d = block_matrix([10, 10, 10], 0.01, 5.0)
    labels = cluster_labels(d, 5)
    assert set(labels) == {0, 1, 2}
    assert len(set(labels[:10])) == 1
    assert len(set(labels[10:20])) == 1
    assert len(set(labels[20:])) == 1


def test_all_identical_points_form_one_cluster():
    d = np.zeros((12, 12))
    labels = cluster_labels(d, 5)
    assert list(labels) == [0] * 12


def test_fewer_points_than_min_cluster_size_is_all_noise():
    d = block_matrix([3], 0.01, 1.0)
    assert list(cluster_labels(d, 5)) == [-1, -1, -1]


def test_min_cluster_size_below_two_rejected():
    with pytest.raises(ValueError):
        cluster_labels(np.zeros((4, 4)), 1)


def test_outliers_become_noise():
    n = 23
    d = np.full((n, n), 50.0)
    d[:10, :10] = 0.1
    d[10:20, 10:20] = 0.1
    d[:20, :20][np.ix_(range(10), range(10, 20))] = 10.0
    d[:20, :20][np.ix_(range(10, 20), range(10))] = 10.0
    d[20:, 20:] = 60.0
    np.fill_diagonal(d, 0.0)
    labels = cluster_labels(d, 5)
    assert set(labels[:10]) != set(labels[10:20])
    assert all(lab >= 0 for lab in labels[:20])
    assert list(labels[20:]) == [-1, -1, -1]


def test_infinite_distances_split_groups():
    # the infinity sentinel of the temporal filter must act as "never linked"
    d = block_matrix([8, 8], 0.01, np.inf)
    labels = cluster_labels(d, 5)
    assert set(labels) == {0, 1}
    assert len(set(labels[:8])) == 1 and len(set(labels[8:])) == 1


def test_labels_numbered_by_first_occurrence():
    d = block_matrix([6, 6], 0.01, 9.0)
    labels = cluster_labels(d, 5)
    assert labels[0] == 0
    assert labels[6] == 1


def test_deterministic():
    rng = np.random.default_rng(7)
    pts = rng.normal(size=(30, 3))
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    a = cluster_labels(d, 4)
    b = cluster_labels(d, 4)
    assert np.array_equal(a, b)


def co_membership(labels):
    n = len(labels)
    return {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if labels[i] == labels[j] and labels[i] != -1
    }


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_separated_groups_recovered_under_any_permutation(seed):
    # exact ties in mutual reachability make the fine structure of the
    # condensed tree order-dependent, so only well-separated groups carry a
    # permutation guarantee: the blocks come back exactly, in any input order
    rng = np.random.default_rng(seed)
    sizes = [int(rng.integers(5, 12)) for _ in range(int(rng.integers(2, 5)))]
    d = block_matrix(sizes, 0.01, 5.0)
    n = sum(sizes)
    perm = rng.permutation(n)
    labels = cluster_labels(d[np.ix_(perm, perm)], 5)
    block_of = np.repeat(np.arange(len(sizes)), sizes)[perm]
    expected = co_membership(list(block_of))
    assert co_membership(list(labels)) == expected
    assert all(lab >= 0 for lab in labels)


def test_nested_density_prefers_children():
    # two tight groups inside a loose envelope: the tight pair wins over the
    # merged parent because its members persist to far higher density
    d = block_matrix([10, 10], 0.001, 2.0)
    labels = cluster_labels(d, 5)
    assert set(labels) == {0, 1}
