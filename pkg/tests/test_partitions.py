from circulant.partitions import (IntegerPartition, SetPartition,
                                  integer_partitions, multiset_partitions)


def test_integer_partition_counts():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for p, want in enumerate(expected):
        assert len(integer_partitions(p)) == want


def test_integer_partition_fields():
    ip = IntegerPartition([2, 1, 2])
    assert ip.parts == (2, 2, 1)
    assert ip.p == 5
    assert ip.j == 3
    # k_i = number of parts equal to i
    assert ip.multiplicities == (1, 2, 0, 0, 0)


def test_multiset_partitions_bell_numbers():
    # distinct elements give the Bell numbers
    bell = [1, 1, 2, 5, 15, 52, 203]
    for n, want in enumerate(bell):
        assert len(multiset_partitions(list(range(n)))) == want


def test_multiset_partitions_with_repeats():
    assert len(multiset_partitions([7, 7, 8, 9])) == 11
    assert len(multiset_partitions([3, 7, 8])) == 5


def test_multiset_partitions_deterministic():
    a = multiset_partitions([3, 7, 8, 8])
    b = multiset_partitions([3, 7, 8, 8])
    assert a == b
    assert a == sorted(a, key=lambda sp: sp.parts)


def test_set_partition_fields():
    sp = SetPartition([[8], [3, 7]])
    assert sp.j == 2
    assert sp.sizes[0] == 2  # parts ordered largest first
    assert sp.traces == (10, 8)
    assert sp.residues(6) == ((-10) % 6, (-8) % 6)
    assert sp.size_profile().parts == (2, 1)


def test_set_partition_kappa():
    sp = SetPartition([[3], [3], [7]])
    assert sp.kappa_factorial() == 2  # two identical parts [3]
    sp2 = SetPartition([[3, 3]])
    assert sp2.element_multiplicity_factorial((3, 3)) == 2


def test_empty_partition():
    assert len(multiset_partitions([])) == 1
    assert multiset_partitions([])[0].j == 0
    assert integer_partitions(0)[0].parts == ()
