import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compdna.channels import Deletion, ErrorPattern, Loss, Substitution, apply_pattern
from compdna.core import ChannelOutput, CompositeVector, StrandMatrix, all_vectors, enumerate_representations
from compdna.codes import (
    CodeSpec,
    CombinedLSCode,
    CompositeVTCode,
    ShortenedHamming,
    StrandLossCode,
    binary_vt_decode,
    composite_vt_syndrome,
    min_l1_membership,
)
from compdna.analysis import binary_deletion_max, deletion_bound, vt_lower_bound
from compdna.errors import DecodeError, DomainError, EncodeError


def vec(*entries, M):
    return CompositeVector(entries, M)


def drop_rows(X, rows):
    return apply_pattern(X, ErrorPattern("L", [Loss(i) for i in rows]))


# --- strand-loss code -----------------------------------------------------------

def test_sl_membership_and_encoding():
    code = StrandLossCode(5, 4, 1)
    assert code.contains(vec(2, 4, 2, 2, M=5))
    assert not code.contains(vec(3, 5, 3, 2, M=5))
    assert code.encode((1, 2, 1, 1)) == vec(2, 4, 2, 2, M=5)
    assert code.encode((0, 0, 0, 0)) == vec(0, 0, 0, 0, M=5)
    assert code.message(vec(2, 4, 2, 2, M=5)) == (1, 2, 1, 1)
    with pytest.raises(EncodeError):
        code.encode((3, 0, 0, 0))
    with pytest.raises(EncodeError):
        code.encode((1, 1, 1))


def test_sl_codebook_size():
    code = StrandLossCode(5, 4, 1)
    members = [x for x in all_vectors(5, 4) if code.contains(x)]
    assert len(members) == code.size == 81
    assert set(members) == set(code.codewords())


def test_sl_rejects_bad_parameters():
    with pytest.raises(DomainError):
        StrandLossCode(3, 2, 3)
    with pytest.raises(DomainError):
        StrandLossCode(3, 2, 0)


def test_sl_decode_all_single_losses():
    code = StrandLossCode(5, 4, 1)
    c = vec(2, 4, 2, 2, M=5)
    seen = set()
    for X in enumerate_representations(c):
        assert code.decode(X) == c
        for i in range(5):
            R = drop_rows(X, [i])
            seen.add(tuple(map(sum, zip(*R.rows))))
            assert code.decode(R) == c
    assert (2, 3, 2, 1) in seen


@pytest.mark.parametrize("M,n,t", [(3, 2, 1), (4, 2, 2), (5, 2, 2), (4, 2, 3)])
def test_sl_decode_sweep(M, n, t):
    code = StrandLossCode(M, n, t)
    for c in code.codewords():
        for X in enumerate_representations(c):
            for k in range(t + 1):
                for lost in itertools.combinations(range(M), k):
                    assert code.decode(drop_rows(X, lost)) == c


def test_sl_decode_failures():
    code = StrandLossCode(5, 4, 1)
    X = next(iter(enumerate_representations(vec(2, 4, 2, 2, M=5))))
    with pytest.raises(DecodeError):
        code.decode(drop_rows(X, [0, 1]))
    with pytest.raises(DecodeError):
        code.decode(ChannelOutput(X.rows + ((0, 0, 0, 0),)))
    with pytest.raises(DecodeError):
        code.decode(ChannelOutput(X.rows[:4] + ((0, 0, 0),)))
    # a column of 5 ones rounds to 6 once t=2 and M=5
    with pytest.raises(DecodeError):
        StrandLossCode(5, 1, 2).decode(StrandMatrix(((1,),) * 4))


# --- VT codes -----------------------------------------------------------------------

def test_vt_syndromes():
    assert composite_vt_syndrome((3, 5, 3, 2)) == 0
    assert composite_vt_syndrome((2, 4, 3, 2)) == 2
    assert composite_vt_syndrome((0, 0, 0, 0)) == 0
    assert composite_vt_syndrome((1, 0, 0), n=4) == 1


def test_vt_membership():
    assert CompositeVTCode(5, 4, 0).contains(vec(3, 5, 3, 2, M=5))
    assert not CompositeVTCode(5, 4, 1).contains(vec(3, 5, 3, 2, M=5))
    assert sum(CompositeVTCode(5, 4, a).size for a in range(5)) == 6**4


def test_vt_sizes_match_membership_count():
    for a in range(4):
        code = CompositeVTCode(2, 3, a)
        assert code.size == sum(code.contains(x) for x in all_vectors(2, 3))


def test_binary_vt_examples():
    assert binary_vt_decode((1, 0, 0), 3, 4) == (1, 1, 0, 0)
    assert binary_vt_decode((0, 0, 0), 0, 4) == (0, 0, 0, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_binary_vt_decoder_exhaustive(n):
    for word in itertools.product((0, 1), repeat=n):
        b = composite_vt_syndrome(word)
        for j in range(n):
            assert binary_vt_decode(word[:j] + word[j + 1:], b, n) == word


@given(st.lists(st.integers(0, 6), min_size=1, max_size=8), st.lists(st.integers(0, 6), min_size=1, max_size=8))
def test_vt_syndrome_is_additive(x, y):
    n = max(len(x), len(y))
    x = x + [0] * (n - len(x))
    y = y + [0] * (n - len(y))
    s = composite_vt_syndrome([a + b for a, b in zip(x, y)])
    assert s == (composite_vt_syndrome(x) + composite_vt_syndrome(y)) % (n + 1)


def test_vt_example_decode(example_x):
    code = CompositeVTCode(5, 4, 0)
    R = apply_pattern(example_x, ErrorPattern("D", [Deletion(1, 1)]))
    trace = code.decode_with_trace(R)
    assert (trace.short_row, trace.rest_syndrome, trace.row_syndrome) == (1, 2, 3)
    assert trace.repaired_row == (1, 1, 0, 0)
    assert trace.result == vec(3, 5, 3, 2, M=5)
    assert code.decode(example_x) == vec(3, 5, 3, 2, M=5)


@pytest.mark.parametrize("M,n", [(2, 3), (1, 4), (2, 2)])
def test_vt_decode_sweep(M, n):
    code = CompositeVTCode(M, n, 0)
    for c in code.codewords():
        for X in enumerate_representations(c):
            for i, j in itertools.product(range(M), range(n)):
                assert code.decode(apply_pattern(X, ErrorPattern("D", [Deletion(i, j)]))) == c


def test_vt_decode_failures(example_x):
    code = CompositeVTCode(5, 4, 0)
    two = apply_pattern(example_x, ErrorPattern("D", [Deletion(0, 0), Deletion(1, 1)]))
    with pytest.raises(DecodeError):
        code.decode(two)
    with pytest.raises(DecodeError):
        code.decode(ChannelOutput(example_x.rows[:4]))
    with pytest.raises(DecodeError):
        CompositeVTCode(5, 4, 1).decode(example_x)


@pytest.mark.parametrize("M,n", [(M, n) for M in range(1, 4) for n in range(1, 5)])
def test_vt_size_bounds(M, n):
    sizes = [CompositeVTCode(M, n, a).size for a in range(n + 1)]
    assert max(sizes) >= vt_lower_bound(M, n)
    assert max(sizes) <= deletion_bound(M, n, 1, binary_deletion_max(n, 1)) or n == 1


def test_vt_rank_unrank():
    code = CompositeVTCode(3, 4, 2)
    words = list(code.codewords())
    assert len(words) == code.size
    assert words == sorted(words, key=lambda x: x.entries)
    assert all(code.rank(w) == i for i, w in enumerate(words))
    with pytest.raises(EncodeError):
        code.encode(code.size)
    with pytest.raises(EncodeError):
        code.rank(vec(0, 0, 0, 1, M=3))


# --- inner Hamming and the combined code -------------------------------------------

@pytest.mark.parametrize("n", range(1, 12))
def test_shortened_hamming_corrects_one_error(n):
    H = ShortenedHamming(n)
    words = list(H.codewords())
    assert len(words) == 2**H.dimension == len(set(words))
    for w in words:
        assert H.contains(w) and H.decode(w) is None
        for j in range(n):
            e = list(w)
            e[j] ^= 1
            assert H.decode(e) == j


def test_hamming_seven():
    H = ShortenedHamming(7)
    assert (H.redundancy, H.dimension) == (3, 4)
    assert H.encode((1, 0, 1, 1)) in set(H.codewords())


def test_ls_membership():
    code = CombinedLSCode(3, 7, 1)
    for w in ShortenedHamming(7).codewords():
        assert code.contains(CompositeVector(tuple(2 * b for b in w), 3))
    assert not code.contains(vec(1, 0, 0, 0, 0, 0, 0, M=3))
    assert code.size == 16
    members = [x for x in itertools.product((0, 2), repeat=7) if code.contains(CompositeVector(x, 3))]
    assert len(members) == 16


def _ls_outputs(X, M, n, t):
    for k in range(t + 1):
        for lost in itertools.combinations(range(M), k):
            R = drop_rows(X, lost)
            yield R
            for i, j in itertools.product(range(len(R.rows)), range(n)):
                yield apply_pattern(R, ErrorPattern("S", [Substitution(i, j)]))


@pytest.mark.parametrize("M,n,t", [(3, 3, 1), (2, 3, 1), (3, 4, 2), (5, 3, 1)])
def test_ls_decode_sweep(M, n, t):
    code = CombinedLSCode(M, n, t)
    for c in code.codewords():
        for X in enumerate_representations(c):
            for R in _ls_outputs(X, M, n, t):
                assert code.decode(R) == c


def test_ls_decoder_branches():
    code = CombinedLSCode(3, 7, 1)
    c = vec(2, 2, 2, 0, 0, 0, 0, M=3)
    assert code.contains(c)
    X = StrandMatrix(((1, 1, 1, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0)))
    # lose a row with a 1 in column 0, then flip the other 1 there
    R = apply_pattern(drop_rows(X, [0]), ErrorPattern("S", [Substitution(0, 0)]))
    trace = code.decode_with_trace(R)
    assert trace.column_sums[0] == c.entries[0] - 2
    assert (trace.error_col, trace.branch) == (0, "raise")
    assert trace.result == c
    R = apply_pattern(X, ErrorPattern("S", [Substitution(2, 1)]))
    trace = code.decode_with_trace(R)
    assert (trace.error_col, trace.branch, trace.result) == (1, "lower", c)


def test_ls_rank_unrank():
    code = CombinedLSCode(5, 6, 1)
    words = list(code.codewords())
    assert len(set(words)) == code.size
    assert all(code.contains(w) and code.rank(w) == i for i, w in enumerate(words))


def test_min_l1_membership():
    assert min_l1_membership([vec(1, 1, M=3)], 1)
    assert min_l1_membership([vec(0, 0, M=3), vec(3, 0, M=3)], 1)
    assert not min_l1_membership([vec(0, 0, M=3), vec(2, 0, M=3)], 1)


# --- code descriptions ---------------------------------------------------------------

@pytest.mark.parametrize("line", ["sl 5 4 1", "vt 5 4 1 0", "vt 2 3 1 2", "ls 3 7 1 hamming"])
def test_code_spec_round_trip(line):
    assert str(CodeSpec.parse(line)) == line


def test_code_spec_errors():
    for bad in ["xx 1 2 1", "vt 5 4 2 0", "ls 3 7 1 golay", "sl 5", "sl a b c"]:
        with pytest.raises(DomainError):
            CodeSpec.parse(bad).build()
    assert isinstance(CodeSpec.parse("vt 5 4 1").build(), CompositeVTCode)
